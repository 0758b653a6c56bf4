use crate::error::{check_len, Error, Result};
use crate::exactla::{vector, Field};

/// A commutative, associative, unital algebra given by multiplication constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommAlgebra<F: Field> {
    field: F,
    d: usize,
    unit: usize,
    /// `table[i*d + j]` holds `a_i a_j`.
    table: Vec<Vec<F::Elem>>,
}

impl<F: Field> CommAlgebra<F> {
    /// Builds from sparse products `(i, j, [(k, c)])`; `(j, i)` is filled in by commutativity
    /// only when absent, so contradictory input is caught by validation.
    pub fn new(
        field: &F,
        d: usize,
        unit: usize,
        products: impl IntoIterator<Item = (usize, usize, Vec<(usize, F::Elem)>)>,
    ) -> Result<Self> {
        if unit >= d {
            return Err(Error::InvalidCommAlgebra(format!("unit index {unit} out of range")));
        }
        let mut table: Vec<Option<Vec<F::Elem>>> = vec![None; d * d];
        for (i, j, coeffs) in products {
            if i >= d || j >= d {
                return Err(Error::InvalidCommAlgebra(format!("product index ({i},{j}) out of range")));
            }
            let mut v = vector::zeros(field, d);
            for (k, c) in coeffs {
                if k >= d {
                    return Err(Error::InvalidCommAlgebra(format!("product target a_{k} out of range")));
                }
                v[k] = field.add(&v[k], &c);
            }
            table[i * d + j] = Some(v);
        }
        for i in 0..d {
            for j in 0..d {
                if table[i * d + j].is_none() {
                    table[i * d + j] = table[j * d + i].clone();
                }
            }
        }
        let table = table
            .into_iter()
            .map(|v| v.unwrap_or_else(|| vector::zeros(field, d)))
            .collect();
        let a = CommAlgebra {
            field: field.clone(),
            d,
            unit,
            table,
        };
        a.validate()?;
        Ok(a)
    }

    /// `F[t]/(t^n)` on the basis `1, t, …, t^(n-1)`.
    pub fn truncated_poly(field: &F, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidCommAlgebra("truncation order must be ≥ 1".into()));
        }
        let mut products = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i + j < n {
                    products.push((i, j, vec![(i + j, field.one())]));
                }
            }
        }
        Self::new(field, n, 0, products)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.d
    }
    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[F::Elem] {
        &self.table[i * self.d + j]
    }

    pub fn product(&self, x: &[F::Elem], y: &[F::Elem]) -> Result<Vec<F::Elem>> {
        check_len(self.d, x.len())?;
        check_len(self.d, y.len())?;
        let f = &self.field;
        let mut out = vector::zeros(f, self.d);
        for i in 0..self.d {
            if f.is_zero(&x[i]) {
                continue;
            }
            for j in 0..self.d {
                let c = f.mul(&x[i], &y[j]);
                vector::axpy(f, &mut out, &c, self.basis_product(i, j));
            }
        }
        Ok(out)
    }

    /// Commutativity, associativity and the unit law on basis elements.
    pub fn validate(&self) -> Result<()> {
        let f = &self.field;
        let e = |i| vector::unit(f, self.d, i);
        for i in 0..self.d {
            if self.basis_product(self.unit, i) != e(i).as_slice() {
                return Err(Error::InvalidCommAlgebra(format!("unit law fails on a_{i}")));
            }
            for j in 0..self.d {
                if self.basis_product(i, j) != self.basis_product(j, i) {
                    return Err(Error::InvalidCommAlgebra(format!("a_{i} a_{j} ≠ a_{j} a_{i}")));
                }
                for k in 0..self.d {
                    let left = self.product(self.basis_product(i, j), &e(k))?;
                    let right = self.product(&e(i), self.basis_product(j, k))?;
                    if left != right {
                        return Err(Error::InvalidCommAlgebra(format!(
                            "associativity fails on (a_{i}, a_{j}, a_{k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Rationals;

    #[test]
    fn truncated_polynomials_validate() {
        for n in 1..5 {
            let a = CommAlgebra::truncated_poly(&Rationals, n).unwrap();
            assert_eq!(a.dim(), n);
        }
    }

    #[test]
    fn broken_unit_rejected() {
        let f = Rationals;
        // a_1 * a_1 = a_0 but unit claimed to be a_1
        let r = CommAlgebra::new(&f, 2, 1, [(1, 1, vec![(0, f.one())])]);
        assert!(r.is_err());
    }

    #[test]
    fn non_associative_rejected() {
        let f = Rationals;
        // unit a_0; a_1^2 = a_2, a_2^2 = a_1, a_1 a_2 = 0 breaks associativity
        let r = CommAlgebra::new(
            &f,
            3,
            0,
            [
                (0, 0, vec![(0, f.one())]),
                (0, 1, vec![(1, f.one())]),
                (0, 2, vec![(2, f.one())]),
                (1, 1, vec![(2, f.one())]),
                (2, 2, vec![(1, f.one())]),
            ],
        );
        assert!(r.is_err());
    }
}
