use crate::error::{check_len, Result};
use crate::exactla::field::{vector, Field};
use crate::exactla::matrix::{rref_in_place, Matrix};

/// A subspace of `F^ambient`, always held in reduced row-echelon form.
///
/// Because the echelon basis is canonical, two subspaces are equal exactly
/// when their bases are equal, so `PartialEq` is literal comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<F: Field> {
    field: F,
    ambient: usize,
    basis: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: &F, ambient: usize) -> Self {
        Subspace {
            field: field.clone(),
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &F, ambient: usize) -> Self {
        let basis = (0..ambient).map(|i| vector::unit(field, ambient, i)).collect();
        Subspace {
            field: field.clone(),
            ambient,
            basis,
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_vectors(
        field: &F,
        ambient: usize,
        vectors: impl IntoIterator<Item = Vec<F::Elem>>,
    ) -> Result<Self> {
        let mut rows = Vec::new();
        for v in vectors {
            check_len(ambient, v.len())?;
            rows.push(v);
        }
        let pivots = rref_in_place(field, &mut rows, ambient);
        Ok(Subspace {
            field: field.clone(),
            ambient,
            basis: rows,
            pivots,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }
    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// Remainder of `v` after clearing every pivot coordinate.
    pub fn reduce(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        check_len(self.ambient, v.len())?;
        let f = &self.field;
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if f.is_zero(&w[p]) {
                continue;
            }
            let c = f.neg(&w[p]);
            vector::axpy(f, &mut w, &c, row);
        }
        Ok(w)
    }

    pub fn contains(&self, v: &[F::Elem]) -> Result<bool> {
        Ok(vector::is_zero(&self.field, &self.reduce(v)?))
    }

    /// Replaces `self` by `span(self ∪ {v})`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[F::Elem]) -> Result<bool> {
        let f = self.field.clone();
        let mut w = self.reduce(v)?;
        let Some(p) = w.iter().position(|x| !f.is_zero(x)) else {
            return Ok(false);
        };
        let inv = f.inv(&w[p]).expect("nonzero");
        for x in w.iter_mut() {
            *x = f.mul(x, &inv);
        }
        for row in self.basis.iter_mut() {
            if !f.is_zero(&row[p]) {
                let c = f.neg(&row[p]);
                vector::axpy(&f, row, &c, &w);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, w);
        Ok(true)
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[F::Elem]) -> Result<Option<Vec<F::Elem>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// Linear combination of the basis with the given coefficients.
    pub fn combine(&self, coeffs: &[F::Elem]) -> Result<Vec<F::Elem>> {
        check_len(self.dim(), coeffs.len())?;
        let mut out = vector::zeros(&self.field, self.ambient);
        for (c, row) in coeffs.iter().zip(&self.basis) {
            vector::axpy(&self.field, &mut out, c, row);
        }
        Ok(out)
    }

    pub fn as_matrix(&self) -> Matrix<F> {
        Matrix::from_rows(&self.field, self.ambient, self.basis.clone()).expect("rows fit")
    }

    /// Coordinate functionals vanishing on `self`, i.e. `{w : w·v = 0 ∀ v ∈ self}`.
    pub fn annihilator(&self) -> Self {
        self.as_matrix().kernel_basis()
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        check_len(self.ambient, other.ambient)?;
        let mut s = self.clone();
        for v in &other.basis {
            s.insert(v)?;
        }
        Ok(s)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        check_len(self.ambient, other.ambient)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        check_len(self.ambient, other.ambient)?;
        for v in &self.basis {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{PrimeField, Rationals};

    fn v(xs: &[i64]) -> Vec<num_rational::BigRational> {
        vector::from_i64s(&Rationals, xs)
    }

    #[test]
    fn insert_examples() {
        let mut s = Subspace::zero(&Rationals, 3);
        assert!(!s.insert(&v(&[0, 0, 0])).unwrap());
        assert!(s.insert(&v(&[1, 0, 0])).unwrap());
        assert_eq!(s.dim(), 1);

        let mut t = Subspace::zero(&Rationals, 2);
        assert!(t.insert(&v(&[1, 1])).unwrap());
        assert!(!t.insert(&v(&[2, 2])).unwrap());
        assert!(t.insert(&v(&[1, 2])).unwrap());
        assert!(t.insert(&v(&[1])).is_err());
    }

    #[test]
    fn annihilator_examples() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(Subspace::full(&f, 3).annihilator().dim(), 0);
        assert_eq!(Subspace::zero(&f, 3).annihilator().dim(), 3);

        let s = Subspace::from_vectors(&Rationals, 3, [v(&[1, 0, 1])]).unwrap();
        let a = s.annihilator();
        assert_eq!(a.dim(), 2);
        assert!(a.contains(&v(&[0, 1, 0])).unwrap());
        assert!(a.contains(&v(&[1, 0, -1])).unwrap());
    }

    #[test]
    fn echelon_form_is_canonical() {
        let a = Subspace::from_vectors(&Rationals, 3, [v(&[1, 2, 3]), v(&[0, 1, 1])]).unwrap();
        let mut b = Subspace::zero(&Rationals, 3);
        b.insert(&v(&[1, 3, 4])).unwrap();
        b.insert(&v(&[2, 5, 7])).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::from_vectors(&Rationals, 3, [v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let b = Subspace::from_vectors(&Rationals, 3, [v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        let i = a.intersection(&b).unwrap();
        assert_eq!(i.basis(), &[v(&[0, 1, 0])]);
    }
}
