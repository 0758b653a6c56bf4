use crate::error::{check_len, Error, Result};
use crate::exactla::field::{vector, Field};
use crate::exactla::Subspace;

/// Dense row-major matrix over a single field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from explicit rows; `cols` is needed when there are no rows.
    pub fn from_rows(field: &F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            check_len(cols, r.len())?;
            data.extend(r);
        }
        Ok(Matrix {
            field: field.clone(),
            rows: n,
            cols,
            data,
        })
    }

    pub fn from_fn(
        field: &F,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> F::Elem,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(field: &F, rows: usize, columns: &[Vec<F::Elem>]) -> Result<Self> {
        for c in columns {
            check_len(rows, c.len())?;
        }
        Ok(Self::from_fn(field, rows, columns.len(), |i, j| {
            columns[j][i].clone()
        }))
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.tag(), other.field.tag()));
        }
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        check_len(self.cols, other.rows)?;
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    f.mul_add_assign(&mut out.data[idx], a, other.get(k, j));
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        check_len(self.cols, v.len())?;
        Ok((0..self.rows)
            .map(|i| vector::dot(&self.field, self.row(i), v))
            .collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        check_len(self.rows, other.rows)?;
        check_len(self.cols, other.cols)?;
        let data = vector::add(&self.field, &self.data, &other.data);
        Ok(Matrix { data, ..self.clone() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        check_len(self.rows, other.rows)?;
        check_len(self.cols, other.cols)?;
        let data = vector::sub(&self.field, &self.data, &other.data);
        Ok(Matrix { data, ..self.clone() })
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let data = vector::scale(&self.field, c, &self.data);
        Matrix { data, ..self.clone() }
    }

    /// `self += c * other`
    pub fn axpy(&mut self, c: &F::Elem, other: &Self) -> Result<()> {
        self.same_field(other)?;
        check_len(self.data.len(), other.data.len())?;
        vector::axpy(&self.field, &mut self.data, c, &other.data);
        Ok(())
    }

    /// `self * other - other * self`
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Block-diagonal matrix `diag(self, other)`.
    pub fn block_diag(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let (r, c) = (self.rows + other.rows, self.cols + other.cols);
        let z = self.field.zero();
        Ok(Self::from_fn(&self.field, r, c, |i, j| {
            if i < self.rows && j < self.cols {
                self.get(i, j).clone()
            } else if i >= self.rows && j >= self.cols {
                other.get(i - self.rows, j - self.cols).clone()
            } else {
                z.clone()
            }
        }))
    }

    /// Reduced row-echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut rows = self.row_vecs();
        let pivots = rref_in_place(&self.field, &mut rows, self.cols);
        rows.resize(self.rows, vector::zeros(&self.field, self.cols));
        let m = Matrix::from_rows(&self.field, self.cols, rows).expect("rows keep their width");
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Two-sided inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.cols;
        let f = &self.field;
        let mut rows: Vec<Vec<F::Elem>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend(vector::unit(f, n, i));
                r
            })
            .collect();
        let pivots = rref_in_place(f, &mut rows, 2 * n);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let inv = rows.into_iter().map(|r| r[n..].to_vec()).collect();
        Some(Matrix::from_rows(f, n, inv).expect("rows keep their width"))
    }

    /// Null space `{v : self * v = 0}` as an echelon subspace of dimension `cols`.
    pub fn kernel_basis(&self) -> Subspace<F> {
        let f = &self.field;
        let mut rows = self.row_vecs();
        let pivots = rref_in_place(f, &mut rows, self.cols);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vector::zeros(f, self.cols);
            v[free] = f.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(&rows[r][free]);
            }
            basis.push(v);
        }
        Subspace::from_vectors(f, self.cols, basis).expect("kernel vectors have ambient length")
    }

    pub fn row_space(&self) -> Subspace<F> {
        Subspace::from_vectors(&self.field, self.cols, self.row_vecs())
            .expect("rows have ambient length")
    }

    /// Image of the matrix as a subspace of the codomain.
    pub fn column_space(&self) -> Subspace<F> {
        self.transpose().row_space()
    }
}

/// Gauss-Jordan elimination on a list of equal-length rows; zero rows are dropped.
pub(crate) fn rref_in_place<F: Field>(f: &F, rows: &mut Vec<Vec<F::Elem>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(found) = (r..rows.len()).find(|&i| !f.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, found);
        let inv = f.inv(&rows[r][c]).expect("pivot is nonzero");
        if !f.is_one(&inv) {
            for x in rows[r][c..].iter_mut() {
                *x = f.mul(x, &inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || f.is_zero(&row[c]) {
                continue;
            }
            let factor = f.neg(&row[c]);
            for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                f.mul_add_assign(x, &factor, y);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{PrimeField, Rationals};

    #[test]
    fn inverse() {
        let a = q(&[&[2, 1, 0], &[0, 1, -1], &[1, 0, 3]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(&Rationals, 3));
        assert_eq!(inv.mul(&a).unwrap(), Matrix::identity(&Rationals, 3));
        assert!(q(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert!(q(&[&[1, 2, 3]]).inverse().is_none());
        let f7 = PrimeField::new(7).unwrap();
        let b = Matrix::from_rows(&f7, 2, vec![vec![3, 5], vec![1, 2]]).unwrap();
        assert_eq!(b.mul(&b.inverse().unwrap()).unwrap(), Matrix::identity(&f7, 2));
    }

    fn q(rows: &[&[i64]]) -> Matrix<Rationals> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            &Rationals,
            cols,
            rows.iter().map(|r| vector::from_i64s(&Rationals, r)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = Matrix::identity(&Rationals, 2);
        let (r, piv) = id.rref();
        assert_eq!(r, id);
        assert_eq!(piv, vec![0, 1]);

        let z = Matrix::zeros(&Rationals, 3, 3);
        let (r, piv) = z.rref();
        assert!(r.is_zero());
        assert!(piv.is_empty());
    }

    #[test]
    fn rref_hand_reduction() {
        let (r, piv) = q(&[&[2, 4], &[1, 2]]).rref();
        assert_eq!(piv, vec![0]);
        assert_eq!(r.row(0), &vector::from_i64s(&Rationals, &[1, 2])[..]);
        assert!(vector::is_zero(&Rationals, r.row(1)));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(&Rationals, 4).kernel_basis().dim(), 0);
        assert_eq!(Matrix::zeros(&Rationals, 2, 3).kernel_basis().dim(), 3);
        let k = q(&[&[1, 2]]).kernel_basis();
        assert_eq!(k.dim(), 1);
        let half = Rationals.parse("-1/2").unwrap();
        assert_eq!(k.basis()[0], vec![Rationals.one(), half]);
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = Matrix::identity(&PrimeField::new(5).unwrap(), 2);
        let b = Matrix::identity(&PrimeField::new(7).unwrap(), 2);
        assert!(matches!(a.mul(&b), Err(Error::FieldMismatch(..))));
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn ragged_rows_rejected() {
        let rows = vec![vec![0u64, 1], vec![1]];
        assert!(Matrix::from_rows(&PrimeField::new(5).unwrap(), 2, rows).is_err());
    }
}
