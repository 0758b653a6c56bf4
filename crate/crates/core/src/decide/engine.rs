use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::commuting::{
    Arena, CommutingPair, FiniteScan, PairFamily, PairGenerator, RoundKind, SamplerConfig, Strategy,
};
use crate::decide::{PairDoc, SamplerStats, WitnessDoc};
use crate::error::Result;
use crate::exactla::{vector, Field, Subspace};

/// The collected span of annihilating pairs together with the target it aims at.
#[derive(Clone, Debug)]
pub struct Accumulation<F: Field> {
    pub target: Subspace<F>,
    pub span: Subspace<F>,
    /// Pairs that enlarged the span, in discovery order.
    pub pairs: Vec<CommutingPair<F>>,
    pub stats: SamplerStats,
    /// The span is the exact span of all annihilating pairs.
    pub exact: bool,
}

impl<F: Field> Accumulation<F> {
    pub fn filled(&self) -> bool {
        self.span.dim() == self.target.dim()
    }
}

/// Grows the span of annihilating pairs until it fills the target, the random
/// rounds stop growing it for `cfg.window` rounds, or `cfg.rounds` random rounds
/// have run. With `cfg.exhaustive` the span is enumerated exactly instead.
pub fn accumulate<F: FiniteScan>(
    arena: Arena<'_, F>,
    cfg: &SamplerConfig,
    families: Vec<PairFamily<F>>,
) -> Result<Accumulation<F>> {
    let f = arena.field();
    let target = arena.target_space();
    let mut stats = SamplerStats {
        families: families.len(),
        exhaustive: cfg.exhaustive,
        ..Default::default()
    };
    if target.is_zero() {
        let span = Subspace::zero(f, arena.coord_len());
        return Ok(Accumulation { target, span, pairs: Vec::new(), stats, exact: true });
    }
    if cfg.exhaustive {
        let out = F::scan_span(&arena, &target, cfg.budget)?;
        stats.points = out.points;
        stats.pairs = out.pairs.len();
        stats.growth_pairs = out.pairs.len();
        return Ok(Accumulation { target, span: out.span, pairs: out.pairs, stats, exact: true });
    }

    let mut span = Subspace::zero(f, arena.coord_len());
    let mut pairs = Vec::new();
    let mut quiet = 0;
    'rounds: for round in PairGenerator::new(arena, cfg, families) {
        let round = round?;
        stats.rounds += 1;
        stats.pairs += round.pairs.len();
        let mut grew = false;
        for pair in round.pairs {
            if span.insert(&arena.coords(pair.x(), pair.y())?)? {
                pairs.push(pair);
                grew = true;
                if span.dim() == target.dim() {
                    break 'rounds;
                }
            }
        }
        if round.kind == RoundKind::Random {
            stats.random_rounds += 1;
            quiet = if grew { 0 } else { quiet + 1 };
            if quiet >= cfg.window {
                stats.stabilized = true;
                break;
            }
            if stats.random_rounds >= cfg.rounds {
                break;
            }
        }
    }
    stats.growth_pairs = pairs.len();
    Ok(Accumulation { target, span, pairs, stats, exact: false })
}

/// A functional vanishing on `span` but not on `target`, and a target element it
/// detects. Among annihilator basis rows the one with the smallest pivot wins.
#[allow(clippy::type_complexity)]
pub fn extract_witness<F: Field>(
    span: &Subspace<F>,
    target: &Subspace<F>,
) -> Option<(Vec<F::Elem>, Vec<F::Elem>)> {
    let f = span.field();
    span.annihilator().basis().iter().find_map(|xi| {
        target
            .basis()
            .iter()
            .find(|b| !f.is_zero(&vector::dot(f, xi, b)))
            .map(|mu| (xi.clone(), mu.clone()))
    })
}

/// Fresh pairs are drawn from a stream seeded apart from the accumulation stream.
fn validation_seed(seed: u64) -> u64 {
    seed ^ 0x9e37_79b9_7f4a_7c15
}

pub struct Validation<F: Field> {
    /// Pairs with nonzero coordinates on which the functional vanished.
    pub checked: usize,
    pub failure: Option<CommutingPair<F>>,
}

impl<F: Field> Validation<F> {
    pub fn passed(&self, wanted: usize) -> bool {
        self.failure.is_none() && self.checked >= wanted
    }
}

/// Parameters for fresh family evaluations lie well outside the λ-grid.
const FRESH_PARAM_RADIUS: i64 = 1000;

/// Checks `xi` on at least `cfg.validation` fresh pairs with nonzero coordinates:
/// random rounds from a separately seeded stream, plus each family evaluated at a
/// random parameter. Pairs whose coordinates vanish say nothing and are not
/// counted. The number of draws is capped, so the count can fall short.
pub fn validate_functional<F: Field>(
    arena: Arena<'_, F>,
    cfg: &SamplerConfig,
    families: &[PairFamily<F>],
    xi: &[F::Elem],
) -> Result<Validation<F>> {
    let f = arena.field();
    let fresh = SamplerConfig {
        strategies: vec![Strategy::Random],
        seed: validation_seed(cfg.seed),
        ..cfg.clone()
    };
    let mut gen = PairGenerator::new(arena, &fresh, Vec::new());
    let mut rng = ChaCha8Rng::seed_from_u64(validation_seed(cfg.seed).rotate_left(17));
    let p = f.characteristic();
    let cap = 4 * cfg.validation + cfg.window + 1;
    let mut checked = 0;
    for _ in 0..cap {
        if checked >= cfg.validation {
            break;
        }
        let mut batch = gen.random_round()?.pairs;
        for fam in families {
            let lam = if p == 0 {
                f.from_i64(rng.gen_range(-FRESH_PARAM_RADIUS..=FRESH_PARAM_RADIUS))
            } else {
                f.from_i64(rng.gen_range(0..p) as i64)
            };
            let (x, y) = fam.eval(f, &lam);
            batch.push(arena.pair(x, y)?);
        }
        for pair in batch {
            let w = arena.coords(pair.x(), pair.y())?;
            if vector::is_zero(f, &w) {
                continue;
            }
            if !f.is_zero(&vector::dot(f, xi, &w)) {
                return Ok(Validation { checked, failure: Some(pair) });
            }
            checked += 1;
        }
    }
    Ok(Validation { checked, failure: None })
}

/// `mu` as a sum of basis products `(c e_i, e_j)`.
pub fn expand_terms<F: Field>(arena: &Arena<'_, F>, mu: &[F::Elem]) -> Vec<PairDoc> {
    let f = arena.field();
    mu.iter()
        .enumerate()
        .filter(|(_, c)| !f.is_zero(c))
        .map(|(k, c)| {
            let (i, j) = arena.coord_pair(k);
            let mut x = vector::zeros(f, arena.left_dim());
            x[i] = c.clone();
            PairDoc::new(f, &x, &vector::unit(f, arena.right_dim(), j))
        })
        .collect()
}

/// Everything a report needs from one decision run.
pub struct Evidence {
    pub certificate: Option<Vec<PairDoc>>,
    pub witness: Option<WitnessDoc>,
    pub stats: SamplerStats,
    pub span_dim: usize,
    pub target_dim: usize,
    pub outcome: Outcome,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Certified,
    NotExhaustive,
    NotProbabilistic,
    Undecided,
}

/// Accumulates, then either certifies or extracts and validates a witness.
pub fn gather<F: FiniteScan>(
    arena: Arena<'_, F>,
    cfg: &SamplerConfig,
    families: Vec<PairFamily<F>>,
) -> Result<Evidence> {
    let f = arena.field();
    let acc = accumulate(arena, cfg, families.clone())?;
    let docs: Vec<PairDoc> = acc.pairs.iter().map(|p| PairDoc::from_pair(f, p)).collect();
    let mut ev = Evidence {
        certificate: None,
        witness: None,
        stats: acc.stats.clone(),
        span_dim: acc.span.dim(),
        target_dim: acc.target.dim(),
        outcome: Outcome::Undecided,
    };
    if acc.filled() {
        ev.certificate = Some(docs);
        ev.outcome = Outcome::Certified;
        return Ok(ev);
    }
    let (xi, mu) = extract_witness(&acc.span, &acc.target).expect("a proper subspace of the target leaves a detecting functional");
    let validation = validate_functional(arena, cfg, &families, &xi)?;
    ev.witness = Some(WitnessDoc {
        xi: vector::format(f, &xi),
        mu: vector::format(f, &mu),
        mu_terms: expand_terms(&arena, &mu),
        xi_of_mu: f.format(&vector::dot(f, &xi, &mu)),
        span_pairs: docs,
        validation: validation.checked,
    });
    ev.outcome = if validation.failure.is_some() {
        // the span was not what it seemed; sampling stopped too early
        Outcome::Undecided
    } else if acc.exact {
        // an exact span needs no fresh pairs; the count is informational
        Outcome::NotExhaustive
    } else if acc.stats.stabilized && validation.passed(cfg.validation) {
        Outcome::NotProbabilistic
    } else {
        Outcome::Undecided
    };
    Ok(ev)
}
