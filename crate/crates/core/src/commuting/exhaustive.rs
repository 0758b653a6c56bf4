use std::ops::ControlFlow;

use crate::commuting::{Arena, CommutingPair};
use crate::error::{Error, Result};
use crate::exactla::{Field, PrimeField, Rationals, Subspace};
use crate::liealg::LieAlgebra;

/// Result of enumerating one representative of every projective point.
#[derive(Clone, Debug)]
pub struct ScanOutcome<F: Field> {
    /// Exact span of all annihilating pairs (or the target, once reached).
    pub span: Subspace<F>,
    /// Pairs that enlarged the span, in discovery order.
    pub pairs: Vec<CommutingPair<F>>,
    /// Projective points visited.
    pub points: u64,
    /// Whether the scan stopped early because the span filled the target.
    pub filled: bool,
}

/// Fields that admit exhaustive enumeration.
pub trait FiniteScan: Field {
    /// Exact span of `x ∧ y` (or `x ⊗ v`) over all annihilating pairs, stopping early
    /// once it equals `target`. Refuses when `p^(k−1)` exceeds `budget`, where `k`
    /// is the dimension of the enumerated side.
    fn scan_span(arena: &Arena<'_, Self>, target: &Subspace<Self>, budget: u64) -> Result<ScanOutcome<Self>>;

    /// First commuting pair that is linearly independent, if any.
    #[allow(clippy::type_complexity)]
    fn scan_proportional(
        l: &LieAlgebra<Self>,
        budget: u64,
    ) -> Result<(u64, Option<(Vec<Self::Elem>, Vec<Self::Elem>)>)>;
}

impl FiniteScan for Rationals {
    fn scan_span(_: &Arena<'_, Self>, _: &Subspace<Self>, _: u64) -> Result<ScanOutcome<Self>> {
        Err(Error::Input("exhaustive enumeration needs a finite field GF(p)".into()))
    }

    fn scan_proportional(_: &LieAlgebra<Self>, _: u64) -> Result<(u64, Option<(Vec<Self::Elem>, Vec<Self::Elem>)>)> {
        Err(Error::Input("exhaustive enumeration needs a finite field GF(p)".into()))
    }
}

/// Exact `span K′` of a Lie algebra over GF(p), as a subspace of wedge coordinates.
pub fn exhaustive_kprime_gfp(l: &LieAlgebra<PrimeField>, budget: u64) -> Result<ScanOutcome<PrimeField>> {
    let arena = Arena::Lie(l);
    PrimeField::scan_span(&arena, &arena.target_space(), budget)
}

fn check_budget(p: u64, k: usize, cap: u64) -> Result<()> {
    let needed = (p as u128).checked_pow(k.saturating_sub(1) as u32).unwrap_or(u128::MAX);
    if needed > cap as u128 {
        return Err(Error::BudgetExceeded { needed, cap });
    }
    Ok(())
}

/// Modular arithmetic with a precomputed inverse table for small moduli.
struct Zp {
    p: u64,
    inv: Vec<u64>,
}

impl Zp {
    fn new(f: &PrimeField) -> Self {
        let p = f.modulus();
        let inv = if p <= 1 << 16 {
            (0..p).map(|a| f.inv(&a).unwrap_or(0)).collect()
        } else {
            Vec::new()
        };
        Zp { p, inv }
    }

    fn inv(&self, a: u64) -> u64 {
        if self.inv.is_empty() {
            PrimeField::new(self.p).expect("prime").inv(&a).expect("nonzero")
        } else {
            self.inv[a as usize]
        }
    }

    /// Null space of a `rows × cols` row-major matrix; `a` is destroyed.
    fn kernel(&self, a: &mut [u64], rows: usize, cols: usize, out: &mut Vec<Vec<u64>>) {
        let p = self.p;
        out.clear();
        let mut pivots = vec![usize::MAX; cols];
        let mut pivcols = Vec::with_capacity(cols);
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(found) = (r..rows).find(|&i| a[i * cols + c] != 0) else {
                continue;
            };
            if found != r {
                for j in c..cols {
                    a.swap(found * cols + j, r * cols + j);
                }
            }
            let iv = self.inv(a[r * cols + c]);
            for j in c..cols {
                a[r * cols + j] = a[r * cols + j] * iv % p;
            }
            for i in 0..rows {
                let factor = a[i * cols + c];
                if i == r || factor == 0 {
                    continue;
                }
                let neg = p - factor;
                for j in c..cols {
                    let v = a[r * cols + j];
                    if v != 0 {
                        a[i * cols + j] = (a[i * cols + j] + neg * v) % p;
                    }
                }
            }
            pivots[c] = r;
            pivcols.push(c);
            r += 1;
        }
        for free in 0..cols {
            if pivots[free] != usize::MAX {
                continue;
            }
            let mut v = vec![0u64; cols];
            v[free] = 1;
            for &pc in &pivcols {
                let row = pivots[pc];
                let e = a[row * cols + free];
                v[pc] = if e == 0 { 0 } else { p - e };
            }
            out.push(v);
        }
    }
}

/// Visits one representative per projective point of `F_p^k` (first nonzero
/// coordinate 1, later coordinates in lexicographic order) together with
/// `Σ x_i mats[i]`, maintained incrementally.
fn for_each_projective(
    p: u64,
    k: usize,
    mats: &[Vec<u64>],
    mut visit: impl FnMut(&[u64], &[u64]) -> ControlFlow<()>,
) -> u64 {
    let len = mats.first().map_or(0, Vec::len);
    let mut points = 0u64;
    let mut x = vec![0u64; k];
    let mut cur = vec![0u64; len];
    for lead in 0..k {
        x.iter_mut().for_each(|c| *c = 0);
        x[lead] = 1;
        cur.copy_from_slice(&mats[lead]);
        loop {
            points += 1;
            if visit(&x, &cur).is_break() {
                return points;
            }
            let mut i = k;
            loop {
                i -= 1;
                if i == lead {
                    break;
                }
                x[i] += 1;
                for (c, m) in cur.iter_mut().zip(&mats[i]) {
                    *c = (*c + m) % p;
                }
                if x[i] < p {
                    break;
                }
                x[i] = 0;
            }
            if i == lead {
                break;
            }
        }
    }
    points
}

fn flatten(m: &crate::exactla::Matrix<PrimeField>) -> Vec<u64> {
    m.row_vecs().concat()
}

/// Accumulates the span while testing membership through bilinear forms
/// `(x, y) ↦ x^T B y`, one per functional separating the span from the target.
struct Tracker<'a> {
    arena: Arena<'a, PrimeField>,
    p: u64,
    nl: usize,
    nr: usize,
    target_pivots: Vec<usize>,
    image: Subspace<PrimeField>,
    forms: Vec<Vec<u64>>,
    span: Subspace<PrimeField>,
    pairs: Vec<CommutingPair<PrimeField>>,
}

impl<'a> Tracker<'a> {
    fn new(arena: Arena<'a, PrimeField>, target: &Subspace<PrimeField>) -> Self {
        let f = *arena.field();
        let mut t = Tracker {
            arena,
            p: f.modulus(),
            nl: arena.left_dim(),
            nr: arena.right_dim(),
            target_pivots: target.pivots().to_vec(),
            image: Subspace::zero(&f, target.dim()),
            forms: Vec::new(),
            span: Subspace::zero(&f, arena.coord_len()),
            pairs: Vec::new(),
        };
        t.rebuild_forms();
        t
    }

    fn filled(&self) -> bool {
        self.span.dim() == self.target_pivots.len()
    }

    fn rebuild_forms(&mut self) {
        let p = self.p;
        let (nl, nr) = (self.nl, self.nr);
        self.forms = self
            .image
            .annihilator()
            .basis()
            .iter()
            .map(|phi| {
                let mut b = vec![0u64; nl * nr];
                for (s, &c) in phi.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    let (i, j) = self.arena.coord_pair(self.target_pivots[s]);
                    b[i * nr + j] = (b[i * nr + j] + c) % p;
                    if self.arena.is_lie() {
                        b[j * nr + i] = (b[j * nr + i] + p - c) % p;
                    }
                }
                b
            })
            .collect();
    }

    /// `x^T B` for every form.
    fn left_profiles(&self, x: &[u64], out: &mut Vec<Vec<u64>>) {
        let (nr, p) = (self.nr, self.p);
        out.clear();
        for b in &self.forms {
            let mut u = vec![0u64; nr];
            for (i, &xi) in x.iter().enumerate() {
                if xi == 0 {
                    continue;
                }
                for (uj, &bij) in u.iter_mut().zip(&b[i * nr..(i + 1) * nr]) {
                    *uj = (*uj + xi * bij) % p;
                }
            }
            out.push(u);
        }
    }

    /// `B y` for every form.
    fn right_profiles(&self, y: &[u64], out: &mut Vec<Vec<u64>>) {
        let (nl, nr, p) = (self.nl, self.nr, self.p);
        out.clear();
        for b in &self.forms {
            let u = (0..nl)
                .map(|i| {
                    b[i * nr..(i + 1) * nr]
                        .iter()
                        .zip(y)
                        .fold(0u64, |acc, (&bij, &yj)| (acc + bij * yj) % p)
                })
                .collect();
            out.push(u);
        }
    }

    fn separated(&self, profiles: &[Vec<u64>], w: &[u64]) -> bool {
        let p = self.p;
        profiles
            .iter()
            .any(|u| u.iter().zip(w).fold(0u64, |acc, (&a, &b)| (acc + a * b) % p) != 0)
    }

    fn grow(&mut self, x: Vec<u64>, y: Vec<u64>) -> Result<()> {
        let coords = self.arena.coords(&x, &y)?;
        let image: Vec<u64> = self.target_pivots.iter().map(|&k| coords[k]).collect();
        self.span.insert(&coords)?;
        self.image.insert(&image)?;
        self.pairs.push(self.arena.pair(x, y)?);
        self.rebuild_forms();
        Ok(())
    }
}

impl FiniteScan for PrimeField {
    fn scan_span(
        arena: &Arena<'_, Self>,
        target: &Subspace<Self>,
        budget: u64,
    ) -> Result<ScanOutcome<Self>> {
        let f = *arena.field();
        let p = f.modulus();
        if target.ambient() != arena.coord_len() {
            return Err(Error::DimensionMismatch { expected: arena.coord_len(), found: target.ambient() });
        }
        // enumerate whichever side is smaller; for Lie algebras both sides agree
        let (nl, nr) = (arena.left_dim(), arena.right_dim());
        let by_left = arena.is_lie() || nl <= nr;
        let k = if by_left { nl } else { nr };
        check_budget(p, k, budget)?;

        let mut tracker = Tracker::new(*arena, target);
        if tracker.filled() || k == 0 {
            let filled = tracker.filled();
            return Ok(ScanOutcome { span: tracker.span, pairs: tracker.pairs, points: 0, filled });
        }
        let (mats, rows, cols) = match arena {
            Arena::Lie(l) => ((0..nl).map(|i| flatten(&l.ad_basis(i))).collect::<Vec<_>>(), nl, nl),
            Arena::Module(m) if by_left => (m.rho().iter().map(flatten).collect(), nr, nr),
            Arena::Module(m) => {
                // columns of x ↦ x·v are ρ_i v, linear in v
                let mats = (0..nr)
                    .map(|j| {
                        let mut out = vec![0u64; nr * nl];
                        for (i, rho) in m.rho().iter().enumerate() {
                            for r in 0..nr {
                                out[r * nl + i] = *rho.get(r, j);
                            }
                        }
                        out
                    })
                    .collect();
                (mats, nr, nl)
            }
        };
        let zp = Zp::new(&f);
        let mut scratch = vec![0u64; rows * cols];
        let mut kernel = Vec::new();
        let mut profiles = Vec::new();
        let mut failure = None;
        let points = for_each_projective(p, k, &mats, |v, m| {
            scratch.copy_from_slice(m);
            zp.kernel(&mut scratch, rows, cols, &mut kernel);
            if arena.is_lie() && kernel.len() <= 1 {
                return ControlFlow::Continue(());
            }
            if by_left {
                tracker.left_profiles(v, &mut profiles);
            } else {
                tracker.right_profiles(v, &mut profiles);
            }
            for w in &kernel {
                if !tracker.separated(&profiles, w) {
                    continue;
                }
                let (x, y) = if by_left { (v.to_vec(), w.clone()) } else { (w.clone(), v.to_vec()) };
                if let Err(e) = tracker.grow(x, y) {
                    failure = Some(e);
                    return ControlFlow::Break(());
                }
                if tracker.filled() {
                    return ControlFlow::Break(());
                }
                if by_left {
                    tracker.left_profiles(v, &mut profiles);
                } else {
                    tracker.right_profiles(v, &mut profiles);
                }
            }
            ControlFlow::Continue(())
        });
        if let Some(e) = failure {
            return Err(e);
        }
        let filled = tracker.filled();
        Ok(ScanOutcome { span: tracker.span, pairs: tracker.pairs, points, filled })
    }

    fn scan_proportional(
        l: &LieAlgebra<Self>,
        budget: u64,
    ) -> Result<(u64, Option<(Vec<u64>, Vec<u64>)>)> {
        let f = *l.field();
        let n = l.dim();
        check_budget(f.modulus(), n, budget)?;
        let mats: Vec<Vec<u64>> = (0..n).map(|i| flatten(&l.ad_basis(i))).collect();
        let zp = Zp::new(&f);
        let mut scratch = vec![0u64; n * n];
        let mut kernel = Vec::new();
        let mut found = None;
        let w = l.wedge_index();
        let points = for_each_projective(f.modulus(), n, &mats, |x, m| {
            scratch.copy_from_slice(m);
            zp.kernel(&mut scratch, n, n, &mut kernel);
            if kernel.len() > 1 {
                let y = kernel
                    .iter()
                    .find(|y| w.wedge(&f, x, y).map(|v| v.iter().any(|&c| c != 0)).unwrap_or(false))
                    .expect("a kernel of dim ≥ 2 leaves span{x}");
                found = Some((x.to_vec(), y.clone()));
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        });
        Ok((points, found))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::exactla::{vector, Matrix};

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn projective_point_count() {
        let f = gf(5);
        let mats = vec![vec![0u64]; 3];
        let mut seen = Vec::new();
        let n = for_each_projective(f.modulus(), 3, &mats, |x, _| {
            seen.push(x.to_vec());
            ControlFlow::Continue(())
        });
        assert_eq!(n, (125 - 1) / 4);
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 31);
        assert!(seen.iter().all(|x| x.iter().find(|&&c| c != 0) == Some(&1)));
    }

    #[test]
    fn incremental_sum_matches_direct() {
        let f = gf(7);
        let l = builtins::galilei(1).to_field(&f).unwrap();
        let mats: Vec<_> = (0..l.dim()).map(|i| flatten(&l.ad_basis(i))).collect();
        let mut checked = 0;
        for_each_projective(7, l.dim(), &mats, |x, m| {
            assert_eq!(m, flatten(&l.ad_matrix(x).unwrap()).as_slice());
            checked += 1;
            if checked > 3000 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
    }

    #[test]
    fn modular_kernel_matches_generic() {
        let f = gf(5);
        let zp = Zp::new(&f);
        let rows = vec![vec![1, 2, 0, 4], vec![2, 4, 1, 3], vec![3, 1, 1, 2]];
        let m = Matrix::from_rows(&f, 4, rows.clone()).unwrap();
        let mut flat = rows.concat();
        let mut out = Vec::new();
        zp.kernel(&mut flat, 3, 4, &mut out);
        assert_eq!(Subspace::from_vectors(&f, 4, out).unwrap(), m.kernel_basis());
    }

    #[test]
    fn small_spans() {
        let f = gf(5);
        let ab = LieAlgebra::abelian(&f, 3);
        let s = exhaustive_kprime_gfp(&ab, 1000).unwrap();
        assert_eq!(s.span.dim(), 3);
        assert!(s.filled);

        let sl2 = builtins::sl2().to_field(&f).unwrap();
        let s = exhaustive_kprime_gfp(&sl2, 1000).unwrap();
        assert!(s.span.is_zero());

        let age = builtins::age1().to_field(&f).unwrap();
        let s = exhaustive_kprime_gfp(&age, 1000).unwrap();
        assert_eq!(s.span.dim(), 2);
        assert!(!s.filled);
        assert_eq!(s.points, (625 - 1) / 4);
    }

    #[test]
    fn budget_refusal() {
        let f = gf(7);
        let g = builtins::galilei(3).to_field(&f).unwrap();
        assert!(matches!(exhaustive_kprime_gfp(&g, 1000), Err(Error::BudgetExceeded { .. })));
        assert!(Rationals::scan_span(&Arena::Lie(&builtins::sl2()), &Subspace::zero(&Rationals, 3), 10).is_err());
    }

    #[test]
    fn module_scans_either_side() {
        // V(1): d = 2 < n = 3 enumerates v; V(3): d = 4 > n enumerates x
        let f = gf(5);
        for (m, k) in [(1, 4), (3, 6)] {
            let v = builtins::vm_module(m).to_field(&f).unwrap();
            let arena = Arena::Module(&v);
            let s = PrimeField::scan_span(&arena, &arena.target_space(), 1000).unwrap();
            assert_eq!(s.span.dim(), k, "m = {m}");
        }
    }

    #[test]
    fn proportional_scan() {
        let f = gf(5);
        let sl2 = builtins::sl2().to_field(&f).unwrap();
        assert_eq!(PrimeField::scan_proportional(&sl2, 1000).unwrap(), (31, None));
        let h = builtins::heisenberg(1).unwrap().to_field(&f).unwrap();
        let (_, pair) = PrimeField::scan_proportional(&h, 1000).unwrap();
        let (x, y) = pair.unwrap();
        assert!(vector::is_zero(&f, &h.bracket(&x, &y).unwrap()));
        assert!(!vector::is_zero(&f, &h.wedge_index().wedge(&f, &x, &y).unwrap()));
    }
}
