use serde::Serialize;

use crate::commuting::Arena;
use crate::decide::{AnyReport, PairDoc, Verdict, WitnessDoc, ZadDims, ZadReport, ZpdDims, ZpdReport};
use crate::error::Result;
use crate::exactla::{vector, Field, PrimeField, Rationals, Subspace};
use crate::io::AnyField;

/// Result of replaying a certificate, witness or report. Never an error: a
/// failed check carries the first reason found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnosis: Option<String>,
}

impl Verification {
    fn pass() -> Self {
        Verification { ok: true, diagnosis: None }
    }

    fn fail(msg: impl Into<String>) -> Self {
        Verification { ok: false, diagnosis: Some(msg.into()) }
    }
}

type Checked<T> = std::result::Result<T, String>;

/// Parses a pair, checks it annihilates and returns its coordinates.
fn pair_coords<F: Field>(arena: &Arena<'_, F>, k: usize, p: &PairDoc) -> Checked<Vec<F::Elem>> {
    let f = arena.field();
    let (x, y) = p.parse(f).map_err(|e| format!("pair {k}: {e}"))?;
    if x.len() != arena.left_dim() || y.len() != arena.right_dim() {
        return Err(format!("pair {k}: wrong lengths {} and {}", x.len(), y.len()));
    }
    let image = arena.apply(&x, &y).map_err(|e| format!("pair {k}: {e}"))?;
    if !vector::is_zero(f, &image) {
        return Err(format!("pair {k} does not annihilate: product is {:?}", vector::format(f, &image)));
    }
    arena.coords(&x, &y).map_err(|e| format!("pair {k}: {e}"))
}

fn span_of<F: Field>(arena: &Arena<'_, F>, pairs: &[PairDoc]) -> Checked<Subspace<F>> {
    let mut span = Subspace::zero(arena.field(), arena.coord_len());
    for (k, p) in pairs.iter().enumerate() {
        span.insert(&pair_coords(arena, k, p)?).map_err(|e| e.to_string())?;
    }
    Ok(span)
}

fn certificate_check<F: Field>(arena: &Arena<'_, F>, pairs: &[PairDoc]) -> Checked<()> {
    let span = span_of(arena, pairs)?;
    // annihilating pairs always land in the target, so equal dimensions suffice
    let target = arena.target_space().dim();
    if span.dim() != target {
        return Err(format!("certificate spans dimension {}, target has dimension {target}", span.dim()));
    }
    Ok(())
}

/// Every pair annihilates and their coordinates span the whole target space.
pub fn verify_certificate<F: Field>(arena: &Arena<'_, F>, pairs: &[PairDoc]) -> Verification {
    match certificate_check(arena, pairs) {
        Ok(()) => Verification::pass(),
        Err(e) => Verification::fail(e),
    }
}

fn witness_check<F: Field>(arena: &Arena<'_, F>, w: &WitnessDoc) -> Checked<usize> {
    let f = arena.field();
    let len = arena.coord_len();
    let xi = vector::parse(f, &w.xi).map_err(|e| format!("xi: {e}"))?;
    let mu = vector::parse(f, &w.mu).map_err(|e| format!("mu: {e}"))?;
    if xi.len() != len || mu.len() != len {
        return Err(format!("xi and mu must have {len} coordinates"));
    }
    let span = span_of(arena, &w.span_pairs)?;
    for (k, b) in span.basis().iter().enumerate() {
        if !f.is_zero(&vector::dot(f, &xi, b)) {
            return Err(format!("xi does not vanish on span basis vector {k}"));
        }
    }
    let contracted = arena.contract(&mu).map_err(|e| e.to_string())?;
    if !vector::is_zero(f, &contracted) {
        return Err("mu is not in the target space".into());
    }
    let mut sum = vector::zeros(f, len);
    for (k, t) in w.mu_terms.iter().enumerate() {
        let (x, y) = t.parse(f).map_err(|e| format!("term {k}: {e}"))?;
        let c = arena.coords(&x, &y).map_err(|e| format!("term {k}: {e}"))?;
        sum = vector::add(f, &sum, &c);
    }
    if sum != mu {
        return Err("mu_terms do not sum to mu".into());
    }
    let value = vector::dot(f, &xi, &mu);
    if f.is_zero(&value) {
        return Err("xi vanishes on mu".into());
    }
    if f.parse(&w.xi_of_mu).ok() != Some(value) {
        return Err("xi_of_mu does not match".into());
    }
    Ok(span.dim())
}

/// The functional vanishes on the listed pairs, `mu` is a target element
/// expanded correctly, and the functional detects it.
pub fn verify_witness<F: Field>(arena: &Arena<'_, F>, w: &WitnessDoc) -> Verification {
    match witness_check(arena, w) {
        Ok(_) => Verification::pass(),
        Err(e) => Verification::fail(e),
    }
}

fn evidence_check<F: Field>(
    arena: &Arena<'_, F>,
    verdict: Verdict,
    span_dim: usize,
    certificate: Option<&[PairDoc]>,
    witness: Option<&WitnessDoc>,
) -> Checked<()> {
    if verdict.is_certified() {
        let cert = certificate.ok_or("certified verdict without certificate")?;
        certificate_check(arena, cert)?;
        if span_dim != arena.target_space().dim() {
            return Err("certified verdict records a span smaller than the target".into());
        }
    } else if verdict.is_negative() || witness.is_some() {
        let w = witness.ok_or("negative verdict without witness")?;
        let dim = witness_check(arena, w)?;
        if dim != span_dim {
            return Err(format!("recorded span dimension {span_dim}, witness pairs span {dim}"));
        }
    }
    Ok(())
}

fn zpd_check<F: Field>(f: &F, r: &ZpdReport) -> Result<Checked<()>> {
    let l = r.algebra.build(f)?;
    let arena = Arena::Lie(&l);
    let target = arena.target_space().dim();
    let wedge = l.wedge_index().len();
    let dims = ZpdDims {
        n: l.dim(),
        derived: l.derived_subalgebra().dim(),
        wedge,
        m_prime: target,
        k_prime: r.dims.k_prime,
    };
    if dims != r.dims {
        return Ok(Err(format!("recorded dims {:?} disagree with recomputed {:?}", r.dims, dims)));
    }
    Ok(evidence_check(&arena, r.verdict, r.dims.k_prime, r.certificate.as_deref(), r.witness.as_ref()))
}

fn zad_check<F: Field>(f: &F, r: &ZadReport) -> Result<Checked<()>> {
    let m = r.module.build(f)?;
    let arena = Arena::Module(&m);
    let (n, d) = (m.parent().dim(), m.dim());
    let dims = ZadDims {
        n,
        d,
        tensor: n * d,
        lv: m.lv_subspace().dim(),
        m_v: arena.target_space().dim(),
        k_v: r.dims.k_v,
    };
    if dims != r.dims {
        return Ok(Err(format!("recorded dims {:?} disagree with recomputed {:?}", r.dims, dims)));
    }
    Ok(evidence_check(&arena, r.verdict, r.dims.k_v, r.certificate.as_deref(), r.witness.as_ref()))
}

/// Replays a report from its JSON text. Malformed documents are errors; failed
/// checks are a negative [`Verification`].
pub fn verify_report(json: &str) -> Result<Verification> {
    let report = AnyReport::from_json(json)?;
    let field = match &report {
        AnyReport::Zpd(r) => r.field,
        AnyReport::Zad(r) => r.field,
    };
    let checked = match (AnyField::new(field)?, &report) {
        (AnyField::Q(f), AnyReport::Zpd(r)) => zpd_check::<Rationals>(&f, r)?,
        (AnyField::Gf(f), AnyReport::Zpd(r)) => zpd_check::<PrimeField>(&f, r)?,
        (AnyField::Q(f), AnyReport::Zad(r)) => zad_check::<Rationals>(&f, r)?,
        (AnyField::Gf(f), AnyReport::Zad(r)) => zad_check::<PrimeField>(&f, r)?,
    };
    Ok(match checked {
        Ok(()) => Verification::pass(),
        Err(e) => Verification::fail(e),
    })
}
