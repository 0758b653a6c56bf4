use serde::Serialize;

use crate::commuting::{generate_pairs, FiniteScan, PairFamily, RoundKind, SamplerConfig, Strategy};
use crate::decide::PairDoc;
use crate::error::{Error, Result};
use crate::exactla::{vector, Field, Matrix};
use crate::liealg::LieAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Proportionality {
    TrueExhaustive,
    TrueProbabilistic,
    False,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProportionalReport {
    pub verdict: Proportionality,
    /// A commuting, linearly independent pair when the verdict is `FALSE`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<PairDoc>,
    /// Projective points enumerated (exhaustive mode).
    pub points: u64,
    /// Pairs inspected (sampling mode).
    pub pairs: usize,
}

/// Whether every commuting pair is linearly dependent. Exhaustive over GF(p)
/// when `cfg.exhaustive` is set; otherwise basis, line-sweep and `cfg.rounds`
/// random centralizers are inspected.
pub fn is_proportional_commuting<F: FiniteScan>(
    l: &LieAlgebra<F>,
    cfg: &SamplerConfig,
) -> Result<ProportionalReport> {
    let f = l.field();
    if cfg.exhaustive {
        let (points, found) = F::scan_proportional(l, cfg.budget)?;
        return Ok(match found {
            Some((x, y)) => ProportionalReport {
                verdict: Proportionality::False,
                counterexample: Some(PairDoc::new(f, &x, &y)),
                points,
                pairs: 0,
            },
            None => ProportionalReport { verdict: Proportionality::TrueExhaustive, counterexample: None, points, pairs: 0 },
        });
    }
    let sampling = SamplerConfig {
        strategies: vec![Strategy::Basis, Strategy::LineSweep, Strategy::Random],
        ..cfg.clone()
    };
    let w = l.wedge_index();
    let mut pairs = 0;
    let mut random = 0;
    for round in generate_pairs(l, &sampling, Vec::new()) {
        let round = round?;
        for p in &round.pairs {
            pairs += 1;
            if !vector::is_zero(f, &w.wedge(f, p.x(), p.y())?) {
                return Ok(ProportionalReport {
                    verdict: Proportionality::False,
                    counterexample: Some(PairDoc::from_pair(f, p)),
                    points: 0,
                    pairs,
                });
            }
        }
        if round.kind == RoundKind::Random {
            random += 1;
            if random >= cfg.rounds {
                break;
            }
        }
    }
    Ok(ProportionalReport { verdict: Proportionality::TrueProbabilistic, counterexample: None, points: 0, pairs })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PreserveVerdict {
    PreservesSampled,
    Violation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PreserveReport {
    pub verdict: PreserveVerdict,
    pub pairs_checked: usize,
    /// A commuting pair of the source whose images do not commute.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<PairDoc>,
    /// `[φx, φy]` for the counterexample.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub image_bracket: Option<Vec<String>>,
}

/// Samples commuting pairs of `source` and checks that `phi` (a
/// `target.dim() × source.dim()` matrix) keeps them commuting in `target`.
pub fn check_comm_preserving<F: Field>(
    phi: &Matrix<F>,
    source: &LieAlgebra<F>,
    target: &LieAlgebra<F>,
    cfg: &SamplerConfig,
    families: Vec<PairFamily<F>>,
) -> Result<PreserveReport> {
    if phi.rows() != target.dim() {
        return Err(Error::DimensionMismatch { expected: target.dim(), found: phi.rows() });
    }
    if phi.cols() != source.dim() {
        return Err(Error::DimensionMismatch { expected: source.dim(), found: phi.cols() });
    }
    let f = source.field();
    let mut checked = 0;
    let mut random = 0;
    for round in generate_pairs(source, cfg, families) {
        let round = round?;
        for p in &round.pairs {
            checked += 1;
            let br = target.bracket(&phi.mul_vec(p.x())?, &phi.mul_vec(p.y())?)?;
            if !vector::is_zero(f, &br) {
                return Ok(PreserveReport {
                    verdict: PreserveVerdict::Violation,
                    pairs_checked: checked,
                    counterexample: Some(PairDoc::from_pair(f, p)),
                    image_bracket: Some(vector::format(f, &br)),
                });
            }
        }
        if round.kind == RoundKind::Random {
            random += 1;
            if random >= cfg.rounds {
                break;
            }
        }
    }
    Ok(PreserveReport {
        verdict: PreserveVerdict::PreservesSampled,
        pairs_checked: checked,
        counterexample: None,
        image_bracket: None,
    })
}
