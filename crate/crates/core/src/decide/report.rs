use serde::{Deserialize, Serialize};

use crate::commuting::{CommutingPair, SamplerConfig};
use crate::error::{Error, Result};
use crate::exactla::{vector, Field, FieldTag};
use crate::io::{AlgebraDoc, ModuleDoc};

/// Outcome of a zpd or zad decision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    ZpdCertified,
    NotZpdExhaustive,
    NotZpdProbabilistic,
    ZadCertified,
    NotZadExhaustive,
    NotZadProbabilistic,
    Undecided,
}

impl Verdict {
    pub fn is_certified(self) -> bool {
        matches!(self, Verdict::ZpdCertified | Verdict::ZadCertified)
    }

    /// A negative answer that is exact for the structure constants at hand.
    pub fn is_exhaustive_negative(self) -> bool {
        matches!(self, Verdict::NotZpdExhaustive | Verdict::NotZadExhaustive)
    }

    pub fn is_negative(self) -> bool {
        matches!(
            self,
            Verdict::NotZpdExhaustive
                | Verdict::NotZpdProbabilistic
                | Verdict::NotZadExhaustive
                | Verdict::NotZadProbabilistic
        )
    }

    /// 0 when backed by a certificate or an exact enumeration, 2 for sampled
    /// negatives, 3 when undecided.
    pub fn exit_code(self) -> i32 {
        if self.is_certified() || self.is_exhaustive_negative() {
            0
        } else if self.is_negative() {
            2
        } else {
            3
        }
    }
}

/// A pair written out with exact scalar strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairDoc {
    pub x: Vec<String>,
    pub y: Vec<String>,
}

impl PairDoc {
    pub fn new<F: Field>(f: &F, x: &[F::Elem], y: &[F::Elem]) -> Self {
        PairDoc { x: vector::format(f, x), y: vector::format(f, y) }
    }

    pub fn from_pair<F: Field>(f: &F, p: &CommutingPair<F>) -> Self {
        Self::new(f, p.x(), p.y())
    }

    #[allow(clippy::type_complexity)]
    pub fn parse<F: Field>(&self, f: &F) -> Result<(Vec<F::Elem>, Vec<F::Elem>)> {
        Ok((vector::parse(f, &self.x)?, vector::parse(f, &self.y)?))
    }
}

/// Evidence against a decision: a functional vanishing on every collected pair
/// but not on the whole target space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessDoc {
    /// The functional, in the coordinates of the pair space.
    pub xi: Vec<String>,
    /// A target element on which `xi` is nonzero.
    pub mu: Vec<String>,
    /// `mu` as a sum of basis products whose brackets (or actions) cancel.
    pub mu_terms: Vec<PairDoc>,
    pub xi_of_mu: String,
    /// Annihilating pairs spanning the collected span; `xi` vanishes on each.
    pub span_pairs: Vec<PairDoc>,
    /// Fresh pairs with nonzero coordinates on which `xi` was checked to vanish.
    pub validation: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SamplerStats {
    pub rounds: usize,
    pub random_rounds: usize,
    pub pairs: usize,
    pub growth_pairs: usize,
    pub families: usize,
    pub families_skipped: usize,
    pub points: u64,
    pub exhaustive: bool,
    pub stabilized: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZpdDims {
    pub n: usize,
    pub derived: usize,
    pub wedge: usize,
    #[serde(rename = "M_prime")]
    pub m_prime: usize,
    /// Exact over an exhausted finite field, a lower bound otherwise.
    #[serde(rename = "K_prime")]
    pub k_prime: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZadDims {
    pub n: usize,
    pub d: usize,
    pub tensor: usize,
    #[serde(rename = "LV")]
    pub lv: usize,
    #[serde(rename = "M_V")]
    pub m_v: usize,
    #[serde(rename = "K_V")]
    pub k_v: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZpdReport {
    pub input: String,
    pub field: FieldTag,
    pub algebra: AlgebraDoc,
    pub dims: ZpdDims,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<PairDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
    pub stats: SamplerStats,
    pub seed: u64,
    pub config: SamplerConfig,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZadReport {
    pub input: String,
    pub field: FieldTag,
    pub module: ModuleDoc,
    pub dims: ZadDims,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<PairDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
    pub stats: SamplerStats,
    pub seed: u64,
    pub config: SamplerConfig,
}

/// Either report, as read back from disk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyReport {
    Zpd(Box<ZpdReport>),
    Zad(Box<ZadReport>),
}

impl AnyReport {
    pub fn from_json(s: &str) -> Result<Self> {
        let v: serde_json::Value = serde_json::from_str(s)?;
        if v.get("algebra").is_some() {
            Ok(AnyReport::Zpd(Box::new(serde_json::from_value(v)?)))
        } else if v.get("module").is_some() {
            Ok(AnyReport::Zad(Box::new(serde_json::from_value(v)?)))
        } else {
            Err(Error::Input("report has neither an `algebra` nor a `module` entry".into()))
        }
    }
}
