use crate::error::{check_len, Error, Result};
use crate::exactla::{vector, Field, Matrix, Subspace};
use crate::liealg::LieAlgebra;

/// A subspace `I` with `[L, I] ⊆ I`, checked on basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealHandle<F: Field> {
    space: Subspace<F>,
}

impl<F: Field> IdealHandle<F> {
    pub fn new(l: &LieAlgebra<F>, space: Subspace<F>) -> Result<Self> {
        check_len(l.dim(), space.ambient())?;
        for i in 0..l.dim() {
            let e = vector::unit(l.field(), l.dim(), i);
            for (m, b) in space.basis().iter().enumerate() {
                if !space.contains(&l.bracket(&e, b)?)? {
                    return Err(Error::NotAnIdeal { basis: i, member: m });
                }
            }
        }
        Ok(IdealHandle { space })
    }

    pub fn space(&self) -> &Subspace<F> {
        &self.space
    }
}

/// `[L, S]`: the span of `[e_i, s]` over basis vectors `e_i` and `s ∈ S`.
pub fn bracket_with<F: Field>(l: &LieAlgebra<F>, s: &Subspace<F>) -> Result<Subspace<F>> {
    check_len(l.dim(), s.ambient())?;
    let mut out = Subspace::zero(l.field(), l.dim());
    for i in 0..l.dim() {
        let e = vector::unit(l.field(), l.dim(), i);
        for b in s.basis() {
            out.insert(&l.bracket(&e, b)?)?;
        }
    }
    Ok(out)
}

/// Quotient `L/I` on the complement spanned by the non-pivot coordinates of `I`,
/// together with the `(n−k) × n` projection matrix onto that complement.
pub fn quotient<F: Field>(
    l: &LieAlgebra<F>,
    ideal: &IdealHandle<F>,
) -> Result<(LieAlgebra<F>, Matrix<F>)> {
    let f = l.field();
    let n = l.dim();
    let space = ideal.space();
    check_len(n, space.ambient())?;
    let mut pivot_row = vec![None; n];
    for (r, &p) in space.pivots().iter().enumerate() {
        pivot_row[p] = Some(r);
    }
    let complement: Vec<usize> = (0..n).filter(|&c| pivot_row[c].is_none()).collect();
    let q = complement.len();
    let proj = Matrix::from_fn(f, q, n, |a, j| match pivot_row[j] {
        None if complement[a] == j => f.one(),
        None => f.zero(),
        Some(r) => f.neg(&space.basis()[r][complement[a]]),
    });

    let w = crate::exactla::WedgeIndex::new(q);
    let mut table = Vec::with_capacity(w.len());
    for &(a, b) in w.pairs() {
        table.push(proj.mul_vec(&l.basis_bracket(complement[a], complement[b]))?);
    }
    let names = complement.iter().map(|&c| l.names()[c].clone()).collect();
    let quot = LieAlgebra::from_table(f, q, names, table);
    quot.ensure_valid()?;
    Ok((quot, proj))
}

/// Whether `[L, I] = [L, L] ∩ I` holds exactly.
pub fn ideal_bracket_identity<F: Field>(l: &LieAlgebra<F>, ideal: &IdealHandle<F>) -> Result<bool> {
    let lhs = bracket_with(l, ideal.space())?;
    let rhs = l.derived_subalgebra().intersection(ideal.space())?;
    Ok(lhs == rhs)
}
