use crate::error::{Error, Result};
use crate::exactla::{vector, Field, WedgeIndex};
use crate::liealg::{CommAlgebra, LieAlgebra};
use crate::repmod::LieModule;

fn dense<F: Field>(
    f: &F,
    n: usize,
    names: Vec<String>,
    mut bracket: impl FnMut(usize, usize) -> Vec<F::Elem>,
) -> Result<LieAlgebra<F>> {
    let w = WedgeIndex::new(n);
    let table = w.pairs().iter().map(|&(i, j)| bracket(i, j)).collect();
    let alg = LieAlgebra::from_table(f, n, names, table);
    alg.ensure_valid()?;
    Ok(alg)
}

/// `L1 ⊕ L2` with basis `L1` then `L2`; cross brackets vanish.
pub fn direct_sum<F: Field>(a: &LieAlgebra<F>, b: &LieAlgebra<F>) -> Result<LieAlgebra<F>> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(a.field().tag(), b.field().tag()));
    }
    let f = a.field();
    let (n1, n) = (a.dim(), a.dim() + b.dim());
    let names = a.names().iter().chain(b.names()).cloned().collect();
    dense(f, n, names, |i, j| {
        let mut out = vector::zeros(f, n);
        if j < n1 {
            out[..n1].clone_from_slice(&a.basis_bracket(i, j));
        } else if i >= n1 {
            out[n1..].clone_from_slice(&b.basis_bracket(i - n1, j - n1));
        }
        out
    })
}

/// `L ⊗ A` on the basis `e_i ⊗ a_j` (flat index `i·d + j`), with
/// `[e_i⊗a_j, e_k⊗a_l] = [e_i,e_k] ⊗ a_j a_l`.
pub fn tensor_with_comm<F: Field>(l: &LieAlgebra<F>, a: &CommAlgebra<F>) -> Result<LieAlgebra<F>> {
    if l.field() != a.field() {
        return Err(Error::FieldMismatch(l.field().tag(), a.field().tag()));
    }
    a.validate()?;
    let f = l.field();
    let d = a.dim();
    let n = l.dim() * d;
    let names = (0..n)
        .map(|c| {
            let (i, j) = (c / d, c % d);
            if j == a.unit() {
                l.names()[i].clone()
            } else {
                format!("{}⊗a{j}", l.names()[i])
            }
        })
        .collect();
    dense(f, n, names, |p, q| {
        let (i, j, k, m) = (p / d, p % d, q / d, q % d);
        let br = l.basis_bracket(i, k);
        let prod = a.basis_product(j, m);
        let mut out = vector::zeros(f, n);
        for (s, bs) in br.iter().enumerate() {
            if f.is_zero(bs) {
                continue;
            }
            for (t, pt) in prod.iter().enumerate() {
                f.mul_add_assign(&mut out[s * d + t], bs, pt);
            }
        }
        out
    })
}

/// `L ⋉ V` on `L ⊕ V` with `[x+u, y+w] = [x,y] + x·w − y·u`; `V` is an abelian ideal.
pub fn semidirect<F: Field>(m: &LieModule<F>) -> Result<LieAlgebra<F>> {
    if let Some(fail) = m.validate().failures.first() {
        return Err(Error::InvalidModule {
            count: m.validate().failures.len(),
            first: fail.pair,
        });
    }
    let l = m.parent();
    let f = l.field();
    let (nl, d) = (l.dim(), m.dim());
    let n = nl + d;
    let names = l
        .names()
        .iter()
        .cloned()
        .chain((0..d).map(|j| format!("v{j}")))
        .collect();
    dense(f, n, names, |i, j| {
        let mut out = vector::zeros(f, n);
        if j < nl {
            out[..nl].clone_from_slice(&l.basis_bracket(i, j));
        } else if i < nl {
            out[nl..].clone_from_slice(&m.rho()[i].column(j - nl));
        }
        out
    })
}
