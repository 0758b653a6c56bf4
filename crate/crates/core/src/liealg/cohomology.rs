use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};
use crate::liealg::LieAlgebra;

/// Dimensions of skew 2-cocycles, coboundaries and their quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct H2Dims {
    pub z2: usize,
    pub b2: usize,
    pub h2: usize,
}

/// Solves the cocycle identity `f([x,y],z) + f([z,x],y) + f([y,z],x) = 0` over
/// skew forms in wedge coordinates. Coboundaries `Φ∘[·,·]` have dimension `dim [L,L]`.
pub fn h2_dimension<F: Field>(l: &LieAlgebra<F>) -> Result<H2Dims> {
    let f = l.field();
    if f.characteristic() == 2 {
        return Err(Error::UnsupportedCharacteristic(2, "second cohomology"));
    }
    let n = l.dim();
    let w = l.wedge_index();
    let mut rows = Vec::new();
    // f(Σ c_k e_k, e_m) as a row over wedge coordinates
    let add_term = |row: &mut Vec<F::Elem>, br: &[F::Elem], m: usize| {
        for (k, c) in br.iter().enumerate() {
            if k == m || f.is_zero(c) {
                continue;
            }
            let (a, b, c) = if k < m { (k, m, c.clone()) } else { (m, k, f.neg(c)) };
            let idx = w.flat(a, b).expect("k ≠ m");
            row[idx] = f.add(&row[idx], &c);
        }
    };
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut row = vec![f.zero(); w.len()];
                add_term(&mut row, &l.basis_bracket(i, j), k);
                add_term(&mut row, &l.basis_bracket(k, i), j);
                add_term(&mut row, &l.basis_bracket(j, k), i);
                rows.push(row);
            }
        }
    }
    let z2 = w.len() - Matrix::from_rows(f, w.len(), rows)?.rank();
    let b2 = l.derived_subalgebra().dim();
    Ok(H2Dims { z2, b2, h2: z2 - b2 })
}

pub fn is_centrally_closed<F: Field>(l: &LieAlgebra<F>) -> Result<bool> {
    Ok(h2_dimension(l)?.h2 == 0)
}
