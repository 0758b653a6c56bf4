use crate::error::{check_len, Error, Result};
use crate::exactla::field::Field;

/// Flat coordinates on `Λ²(F^n)`: pairs `(i, j)` with `i < j` in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeIndex {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl WedgeIndex {
    pub fn new(n: usize) -> Self {
        let pairs = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        WedgeIndex { n, pairs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `n(n-1)/2`
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn flat(&self, i: usize, j: usize) -> Result<usize> {
        if i >= j || j >= self.n {
            return Err(Error::Input(format!(
                "wedge index ({i},{j}) needs i < j < {}",
                self.n
            )));
        }
        Ok(i * self.n - i * (i + 1) / 2 + (j - i - 1))
    }

    pub fn pair(&self, k: usize) -> (usize, usize) {
        self.pairs[k]
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Coordinates of `x ∧ y`: entry `flat(i,j)` is `x_i y_j - x_j y_i`.
    pub fn wedge<F: Field>(&self, f: &F, x: &[F::Elem], y: &[F::Elem]) -> Result<Vec<F::Elem>> {
        check_len(self.n, x.len())?;
        check_len(self.n, y.len())?;
        Ok(self
            .pairs
            .iter()
            .map(|&(i, j)| f.sub(&f.mul(&x[i], &y[j]), &f.mul(&x[j], &y[i])))
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{vector, PrimeField, Rationals};

    #[test]
    fn flat_is_a_bijection() {
        for n in 0..7 {
            let w = WedgeIndex::new(n);
            assert_eq!(w.len(), n * n.saturating_sub(1) / 2);
            for (k, &(i, j)) in w.pairs().iter().enumerate() {
                assert_eq!(w.flat(i, j).unwrap(), k);
            }
        }
        assert!(WedgeIndex::new(3).flat(1, 1).is_err());
        assert!(WedgeIndex::new(3).flat(2, 1).is_err());
    }

    #[test]
    fn wedge_examples() {
        let w = WedgeIndex::new(3);
        let x = vector::from_i64s(&Rationals, &[1, 2, 3]);
        assert!(vector::is_zero(&Rationals, &w.wedge(&Rationals, &x, &x).unwrap()));
        let e0 = vector::unit(&Rationals, 3, 0);
        let e1 = vector::unit(&Rationals, 3, 1);
        assert_eq!(w.wedge(&Rationals, &e0, &e1).unwrap(), vector::unit(&Rationals, 3, 0));
        let f = PrimeField::new(5).unwrap();
        assert!(w.wedge(&f, &[1, 2], &[0, 1, 2]).is_err());
    }
}
