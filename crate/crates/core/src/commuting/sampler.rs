use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::commuting::{Arena, CommutingPair, PairFamily, SamplerConfig, Strategy};
use crate::error::Result;
use crate::exactla::{vector, Field, Subspace};
use crate::liealg::LieAlgebra;

/// `ker ad(x)`
pub fn centralizer<F: Field>(l: &LieAlgebra<F>, x: &[F::Elem]) -> Result<Subspace<F>> {
    Ok(l.ad_matrix(x)?.kernel_basis())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RoundKind {
    Basis,
    LineSweep,
    Family,
    Random,
}

/// One batch of verified pairs sharing a source.
#[derive(Clone, Debug)]
pub struct Round<F: Field> {
    pub kind: RoundKind,
    pub pairs: Vec<CommutingPair<F>>,
}

enum Job<F: Field> {
    /// A fixed `x` paired with its full partner space.
    Left(Vec<F::Elem>, RoundKind),
    /// A fixed module vector `v` paired with every `x` killing it.
    Right(Vec<F::Elem>, RoundKind),
    Family(usize),
}

/// Deterministic stream of annihilating pairs: basis, line-sweep and family rounds
/// in that order, followed by an unbounded sequence of seeded random rounds.
pub struct PairGenerator<'a, F: Field> {
    arena: Arena<'a, F>,
    cfg: SamplerConfig,
    families: Vec<PairFamily<F>>,
    jobs: VecDeque<Job<F>>,
    rng: ChaCha8Rng,
}

impl<'a, F: Field> PairGenerator<'a, F> {
    pub fn new(arena: Arena<'a, F>, cfg: &SamplerConfig, families: Vec<PairFamily<F>>) -> Self {
        let f = arena.field();
        let (n, d) = (arena.left_dim(), arena.right_dim());
        let mut jobs = VecDeque::new();
        if cfg.uses(Strategy::Basis) {
            for i in 0..n {
                jobs.push_back(Job::Left(vector::unit(f, n, i), RoundKind::Basis));
            }
            if !arena.is_lie() {
                for j in 0..d {
                    jobs.push_back(Job::Right(vector::unit(f, d, j), RoundKind::Basis));
                }
            }
        }
        if cfg.uses(Strategy::LineSweep) {
            let grid: Vec<F::Elem> = distinct(f, cfg.lambda_grid().into_iter().filter(|&k| k != 0));
            let sweep = |dim: usize| {
                let mut out = Vec::new();
                for i in 0..dim {
                    for j in i + 1..dim {
                        for lam in &grid {
                            let mut x = vector::unit(f, dim, i);
                            x[j] = lam.clone();
                            out.push(x);
                        }
                    }
                }
                out
            };
            for x in sweep(n) {
                jobs.push_back(Job::Left(x, RoundKind::LineSweep));
            }
            if !arena.is_lie() {
                for v in sweep(d) {
                    jobs.push_back(Job::Right(v, RoundKind::LineSweep));
                }
            }
        }
        if cfg.uses(Strategy::Family) {
            for k in 0..families.len() {
                jobs.push_back(Job::Family(k));
            }
        }
        PairGenerator {
            arena,
            cfg: cfg.clone(),
            families,
            jobs,
            rng: ChaCha8Rng::seed_from_u64(cfg.seed),
        }
    }

    pub fn arena(&self) -> Arena<'a, F> {
        self.arena
    }

    /// Whether every remaining round is random.
    pub fn deterministic_done(&self) -> bool {
        self.jobs.is_empty()
    }

    fn random_vector(&mut self, len: usize) -> Vec<F::Elem> {
        let f = self.arena.field();
        loop {
            let p = f.characteristic();
            let v: Vec<F::Elem> = (0..len)
                .map(|_| {
                    if p == 0 {
                        f.from_i64(self.rng.gen_range(-self.cfg.coeff_box..=self.cfg.coeff_box))
                    } else {
                        f.from_i64(self.rng.gen_range(0..p) as i64)
                    }
                })
                .collect();
            if len == 0 || !vector::is_zero(f, &v) {
                return v;
            }
        }
    }

    fn left_round(&self, x: Vec<F::Elem>) -> Result<Vec<CommutingPair<F>>> {
        let partners = self.arena.right_partners(&x)?;
        partners
            .basis()
            .iter()
            .map(|y| self.arena.pair(x.clone(), y.clone()))
            .collect()
    }

    fn right_round(&self, v: Vec<F::Elem>) -> Result<Vec<CommutingPair<F>>> {
        let partners = self.arena.left_partners(&v)?;
        partners
            .basis()
            .iter()
            .map(|x| self.arena.pair(x.clone(), v.clone()))
            .collect()
    }

    fn family_round(&self, k: usize) -> Result<Vec<CommutingPair<F>>> {
        let f = self.arena.field();
        let fam = &self.families[k];
        fam.sample_points(f, &self.cfg.lambda_grid())
            .iter()
            .map(|at| {
                let (x, y) = fam.eval(f, at);
                self.arena.pair(x, y)
            })
            .collect()
    }

    /// A random round: random `x` with its partners and, for modules, random `v`
    /// with every `x` killing it.
    pub fn random_round(&mut self) -> Result<Round<F>> {
        let x = self.random_vector(self.arena.left_dim());
        let mut pairs = self.left_round(x)?;
        if !self.arena.is_lie() {
            let v = self.random_vector(self.arena.right_dim());
            pairs.extend(self.right_round(v)?);
        }
        Ok(Round { kind: RoundKind::Random, pairs })
    }
}

fn distinct<F: Field>(f: &F, ks: impl IntoIterator<Item = i64>) -> Vec<F::Elem> {
    let mut out: Vec<F::Elem> = Vec::new();
    for k in ks {
        let e = f.from_i64(k);
        if !f.is_zero(&e) && !out.contains(&e) {
            out.push(e);
        }
    }
    out
}

impl<'a, F: Field> Iterator for PairGenerator<'a, F> {
    type Item = Result<Round<F>>;

    /// Never returns `None` while random rounds are enabled.
    fn next(&mut self) -> Option<Self::Item> {
        let round = match self.jobs.pop_front() {
            Some(Job::Left(x, kind)) => self.left_round(x).map(|pairs| Round { kind, pairs }),
            Some(Job::Right(v, kind)) => self.right_round(v).map(|pairs| Round { kind, pairs }),
            Some(Job::Family(k)) => self.family_round(k).map(|pairs| Round { kind: RoundKind::Family, pairs }),
            None if self.cfg.uses(Strategy::Random) => self.random_round(),
            None => return None,
        };
        Some(round)
    }
}

/// Commuting pairs of a Lie algebra under the configured strategies.
pub fn generate_pairs<'a, F: Field>(
    l: &'a LieAlgebra<F>,
    cfg: &SamplerConfig,
    families: Vec<PairFamily<F>>,
) -> PairGenerator<'a, F> {
    PairGenerator::new(Arena::Lie(l), cfg, families)
}

/// Pairs `(x, v)` with `x·v = 0` under the configured strategies.
pub fn module_pairs<'a, F: Field>(
    m: &'a crate::repmod::LieModule<F>,
    cfg: &SamplerConfig,
    families: Vec<PairFamily<F>>,
) -> PairGenerator<'a, F> {
    PairGenerator::new(Arena::Module(m), cfg, families)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::commuting::vm_families;
    use crate::exactla::Rationals;
    use crate::repmod::LieModule;

    fn q(v: &[i64]) -> Vec<num_rational::BigRational> {
        vector::from_i64s(&Rationals, v)
    }

    #[test]
    fn centralizer_examples() {
        let sl2 = builtins::sl2();
        assert!(centralizer(&sl2, &q(&[0, 0, 0])).unwrap().is_full());
        let c = centralizer(&sl2, &q(&[0, 1, 0])).unwrap();
        assert_eq!(c.basis(), &[q(&[0, 1, 0])]);
        let h = builtins::heisenberg(1).unwrap();
        for x in [[1, 2, 3], [0, 1, -1], [5, 0, 0]] {
            let c = centralizer(&h, &q(&x)).unwrap();
            assert!(c.dim() >= 2);
            assert!(c.contains(&q(&[1, 0, 0])).unwrap());
        }
    }

    #[test]
    fn abelian_stream_is_nonempty_and_commutes() {
        let l = LieAlgebra::abelian(&Rationals, 3);
        let mut g = generate_pairs(&l, &SamplerConfig::default(), vec![]);
        let round = g.next().unwrap().unwrap();
        assert_eq!(round.pairs.len(), 3);
    }

    #[test]
    fn heisenberg_basis_round() {
        let h = builtins::heisenberg(1).unwrap();
        let cfg = SamplerConfig { strategies: vec![Strategy::Basis], ..Default::default() };
        let pairs: Vec<_> = generate_pairs(&h, &cfg, vec![])
            .flat_map(|r| r.unwrap().pairs)
            .map(|p| p.into_parts())
            .collect();
        assert!(pairs.contains(&(q(&[0, 1, 0]), q(&[1, 0, 0]))));
        assert!(pairs.contains(&(q(&[0, 0, 1]), q(&[1, 0, 0]))));
    }

    #[test]
    fn sl2_random_pairs_are_proportional() {
        let sl2 = builtins::sl2();
        let cfg = SamplerConfig { strategies: vec![Strategy::Random], seed: 7, ..Default::default() };
        for round in generate_pairs(&sl2, &cfg, vec![]).take(30) {
            for p in round.unwrap().pairs {
                let w = sl2.wedge_index().wedge(&Rationals, p.x(), p.y()).unwrap();
                assert!(vector::is_zero(&Rationals, &w));
            }
        }
    }

    #[test]
    fn seeded_streams_repeat() {
        let g = builtins::galilei(2);
        let cfg = SamplerConfig { strategies: vec![Strategy::Random], seed: 42, ..Default::default() };
        let a: Vec<_> = generate_pairs(&g, &cfg, vec![]).take(5).map(|r| r.unwrap().pairs).collect();
        let b: Vec<_> = generate_pairs(&g, &cfg, vec![]).take(5).map(|r| r.unwrap().pairs).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn module_streams() {
        let triv = LieModule::trivial(builtins::sl2(), 2);
        let cfg = SamplerConfig { strategies: vec![Strategy::Basis], ..Default::default() };
        let n: usize = module_pairs(&triv, &cfg, vec![]).map(|r| r.unwrap().pairs.len()).sum();
        assert_eq!(n, 3 * 2 + 2 * 3);

        let v1 = builtins::vm_module(1);
        let pairs: Vec<_> = module_pairs(&v1, &cfg, vec![])
            .flat_map(|r| r.unwrap().pairs)
            .map(|p| p.into_parts())
            .collect();
        assert!(pairs.contains(&(q(&[1, 0, 0]), q(&[1, 0]))));

        let v2 = builtins::vm_module(2);
        let cfg = SamplerConfig { strategies: vec![Strategy::Family], ..Default::default() };
        let fams = vm_families(2);
        let rounds: Vec<_> = module_pairs(&v2, &cfg, fams).map(|r| r.unwrap()).collect();
        assert!(rounds.iter().all(|r| r.kind == RoundKind::Family));
        // H + 2λF with Σ λ^i/i! v_{1+i}
        let target = (q(&[0, 1, 4]), q(&[0, 1, 2]));
        assert!(rounds.iter().flat_map(|r| r.pairs.iter()).any(|p| (p.x().to_vec(), p.y().to_vec()) == target));
    }
}
