//! Decisions for zero-product determined algebras and zero-action determined
//! modules, with replayable certificates and witnesses.

mod engine;
mod extras;
mod report;
mod verify;

pub use engine::{accumulate, extract_witness, validate_functional, Accumulation, Validation};
pub use extras::{
    check_comm_preserving, is_proportional_commuting, PreserveReport, PreserveVerdict,
    Proportionality, ProportionalReport,
};
pub use report::{
    AnyReport, PairDoc, SamplerStats, Verdict, WitnessDoc, ZadDims, ZadReport, ZpdDims, ZpdReport,
};
pub use verify::{verify_certificate, verify_report, verify_witness, Verification};

use crate::builtins::BuiltinRef;
use crate::commuting::{builtin_families, Arena, CommutingPair, FiniteScan, PairFamily, SamplerConfig};
use crate::error::{Error, Result};
use crate::exactla::{Field, Subspace};
use crate::io::{AlgebraDoc, ModuleDoc};
use crate::liealg::LieAlgebra;
use crate::repmod::LieModule;
use engine::Outcome;

/// Structured pair families for one input, already expressed over the working field.
#[derive(Clone, Debug)]
pub struct FamilySet<F: Field> {
    pub families: Vec<PairFamily<F>>,
    /// Families dropped because their coefficients do not reduce into the field.
    pub skipped: usize,
}

impl<F: Field> Default for FamilySet<F> {
    fn default() -> Self {
        FamilySet { families: Vec::new(), skipped: 0 }
    }
}

impl<F: Field> FamilySet<F> {
    /// The families of a builtin, certified over Q and then reduced into `f`.
    pub fn for_builtin(r: &BuiltinRef, f: &F) -> Result<Self> {
        let mut set = FamilySet::default();
        for fam in builtin_families(r)? {
            match fam.to_field(f) {
                Ok(g) => set.families.push(g),
                Err(_) => set.skipped += 1,
            }
        }
        Ok(set)
    }
}

/// `ker(x∧y ↦ [x,y])` inside the wedge square.
pub fn mprime<F: Field>(l: &LieAlgebra<F>) -> Subspace<F> {
    Arena::Lie(l).target_space()
}

/// `ker(x⊗v ↦ x·v)` inside `L⊗V`.
pub fn mv<F: Field>(m: &LieModule<F>) -> Subspace<F> {
    Arena::Module(m).target_space()
}

/// Span of wedges of commuting pairs collected under `cfg`, with the pairs that
/// enlarged it.
pub fn kprime_span<F: FiniteScan>(
    l: &LieAlgebra<F>,
    cfg: &SamplerConfig,
    families: FamilySet<F>,
) -> Result<(Subspace<F>, Vec<CommutingPair<F>>)> {
    let acc = accumulate(Arena::Lie(l), cfg, families.families)?;
    Ok((acc.span, acc.pairs))
}

/// `kprime_span` for modules, in tensor coordinates.
pub fn kv_span<F: FiniteScan>(
    m: &LieModule<F>,
    cfg: &SamplerConfig,
    families: FamilySet<F>,
) -> Result<(Subspace<F>, Vec<CommutingPair<F>>)> {
    let acc = accumulate(Arena::Module(m), cfg, families.families)?;
    Ok((acc.span, acc.pairs))
}

fn refuse_char_two<F: Field>(f: &F) -> Result<()> {
    if f.characteristic() == 2 {
        return Err(Error::UnsupportedCharacteristic(2, "zpd and zad decisions need odd or zero characteristic"));
    }
    Ok(())
}

pub fn decide_zpd<F: FiniteScan>(
    l: &LieAlgebra<F>,
    cfg: &SamplerConfig,
    families: FamilySet<F>,
) -> Result<ZpdReport> {
    let f = l.field();
    refuse_char_two(f)?;
    let skipped = families.skipped;
    let mut ev = engine::gather(Arena::Lie(l), cfg, families.families)?;
    ev.stats.families_skipped = skipped;
    let n = l.dim();
    let wedge = l.wedge_index().len();
    let verdict = match ev.outcome {
        Outcome::Certified => Verdict::ZpdCertified,
        Outcome::NotExhaustive => Verdict::NotZpdExhaustive,
        Outcome::NotProbabilistic => Verdict::NotZpdProbabilistic,
        Outcome::Undecided => Verdict::Undecided,
    };
    Ok(ZpdReport {
        input: "inline".into(),
        field: f.tag(),
        algebra: AlgebraDoc::from_algebra(l),
        dims: ZpdDims {
            n,
            derived: wedge - ev.target_dim,
            wedge,
            m_prime: ev.target_dim,
            k_prime: ev.span_dim,
        },
        verdict,
        certificate: ev.certificate,
        witness: ev.witness,
        stats: ev.stats,
        seed: cfg.seed,
        config: cfg.clone(),
    })
}

pub fn decide_zad<F: FiniteScan>(
    m: &LieModule<F>,
    cfg: &SamplerConfig,
    families: FamilySet<F>,
) -> Result<ZadReport> {
    let f = m.field();
    refuse_char_two(f)?;
    let skipped = families.skipped;
    let mut ev = engine::gather(Arena::Module(m), cfg, families.families)?;
    ev.stats.families_skipped = skipped;
    let (n, d) = (m.parent().dim(), m.dim());
    let verdict = match ev.outcome {
        Outcome::Certified => Verdict::ZadCertified,
        Outcome::NotExhaustive => Verdict::NotZadExhaustive,
        Outcome::NotProbabilistic => Verdict::NotZadProbabilistic,
        Outcome::Undecided => Verdict::Undecided,
    };
    Ok(ZadReport {
        input: "inline".into(),
        field: f.tag(),
        module: ModuleDoc::from_module(m),
        dims: ZadDims {
            n,
            d,
            tensor: n * d,
            lv: n * d - ev.target_dim,
            m_v: ev.target_dim,
            k_v: ev.span_dim,
        },
        verdict,
        certificate: ev.certificate,
        witness: ev.witness,
        stats: ev.stats,
        seed: cfg.seed,
        config: cfg.clone(),
    })
}

#[cfg(test)]
mod tests;
