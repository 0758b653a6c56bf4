use serde::Serialize;

use crate::error::{check_len, Error, Result};
use crate::exactla::{vector, Field, Matrix, Subspace, WedgeIndex};

/// A finite-dimensional Lie algebra given by structure constants.
///
/// Only brackets `[e_i, e_j]` with `i < j` are stored; `[e_j, e_i]` is the
/// negative by construction, so antisymmetry never needs checking.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra<F: Field> {
    field: F,
    n: usize,
    names: Vec<String>,
    wedge: WedgeIndex,
    /// `brackets[flat(i,j)]` holds the coordinates of `[e_i, e_j]`.
    brackets: Vec<Vec<F::Elem>>,
}

/// One basis triple on which the Jacobi identity fails.
#[derive(Clone, Debug, Serialize)]
pub struct JacobiFailure {
    pub triple: (usize, usize, usize),
    pub residual: Vec<String>,
}

/// Outcome of [`LieAlgebra::validate`]; empty means the algebra is valid.
#[derive(Clone, Debug, Default, Serialize)]
pub struct JacobiReport {
    pub failures: Vec<JacobiFailure>,
}

impl JacobiReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

impl<F: Field> LieAlgebra<F> {
    /// Builds and validates an algebra from sparse bracket data `(i, j, [(k, c)])`
    /// meaning `[e_i, e_j] += Σ c e_k`. Pairs may be given in either order.
    pub fn new(
        field: &F,
        n: usize,
        names: Option<Vec<String>>,
        brackets: impl IntoIterator<Item = (usize, usize, Vec<(usize, F::Elem)>)>,
    ) -> Result<Self> {
        let alg = Self::unvalidated(field, n, names, brackets)?;
        alg.ensure_valid()?;
        Ok(alg)
    }

    /// Same as [`LieAlgebra::new`] but skips the Jacobi check.
    pub fn unvalidated(
        field: &F,
        n: usize,
        names: Option<Vec<String>>,
        brackets: impl IntoIterator<Item = (usize, usize, Vec<(usize, F::Elem)>)>,
    ) -> Result<Self> {
        let names = match names {
            Some(v) => {
                check_len(n, v.len())?;
                v
            }
            None => default_names(n),
        };
        let wedge = WedgeIndex::new(n);
        let mut table = vec![vector::zeros(field, n); wedge.len()];
        for (i, j, coeffs) in brackets {
            if i >= n || j >= n {
                return Err(Error::Input(format!("bracket index ({i},{j}) out of range")));
            }
            if i == j {
                if coeffs.iter().any(|(_, c)| !field.is_zero(c)) {
                    return Err(Error::Input(format!("[e_{i}, e_{i}] must vanish")));
                }
                continue;
            }
            let (a, b, sign_flip) = if i < j { (i, j, false) } else { (j, i, true) };
            let slot = &mut table[wedge.flat(a, b)?];
            for (k, c) in coeffs {
                if k >= n {
                    return Err(Error::Input(format!("bracket target e_{k} out of range")));
                }
                let c = if sign_flip { field.neg(&c) } else { c };
                slot[k] = field.add(&slot[k], &c);
            }
        }
        Ok(LieAlgebra {
            field: field.clone(),
            n,
            names,
            wedge,
            brackets: table,
        })
    }

    /// Dense form: `table[flat(i,j)]` is `[e_i, e_j]`.
    pub(crate) fn from_table(field: &F, n: usize, names: Vec<String>, table: Vec<Vec<F::Elem>>) -> Self {
        LieAlgebra {
            field: field.clone(),
            n,
            names,
            wedge: WedgeIndex::new(n),
            brackets: table,
        }
    }

    pub fn abelian(field: &F, n: usize) -> Self {
        Self::unvalidated(field, n, None, []).expect("abelian algebra is well formed")
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.n
    }
    pub fn names(&self) -> &[String] {
        &self.names
    }
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        check_len(self.n, names.len())?;
        self.names = names;
        Ok(self)
    }
    pub fn wedge_index(&self) -> &WedgeIndex {
        &self.wedge
    }

    /// Coordinates of `[e_i, e_j]` for any ordered pair.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<F::Elem> {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => vector::zeros(&self.field, self.n),
            Less => self.brackets[self.wedge.flat(i, j).unwrap()].clone(),
            Greater => {
                let v = &self.brackets[self.wedge.flat(j, i).unwrap()];
                v.iter().map(|c| self.field.neg(c)).collect()
            }
        }
    }

    /// Stored structure constants for `i < j`, indexed by wedge position.
    pub fn structure_table(&self) -> &[Vec<F::Elem>] {
        &self.brackets
    }

    pub fn bracket(&self, x: &[F::Elem], y: &[F::Elem]) -> Result<Vec<F::Elem>> {
        check_len(self.n, x.len())?;
        check_len(self.n, y.len())?;
        let f = &self.field;
        let mut out = vector::zeros(f, self.n);
        for (k, &(i, j)) in self.wedge.pairs().iter().enumerate() {
            let c = f.sub(&f.mul(&x[i], &y[j]), &f.mul(&x[j], &y[i]));
            vector::axpy(f, &mut out, &c, &self.brackets[k]);
        }
        Ok(out)
    }

    /// Matrix of `y ↦ [x, y]`.
    pub fn ad_matrix(&self, x: &[F::Elem]) -> Result<Matrix<F>> {
        check_len(self.n, x.len())?;
        let f = &self.field;
        let mut cols = vec![vector::zeros(f, self.n); self.n];
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, col) in cols.iter_mut().enumerate() {
                if i != j {
                    vector::axpy(f, col, xi, &self.basis_bracket(i, j));
                }
            }
        }
        Matrix::from_columns(f, self.n, &cols)
    }

    pub fn ad_basis(&self, i: usize) -> Matrix<F> {
        self.ad_matrix(&vector::unit(&self.field, self.n, i))
            .expect("unit vector has the right length")
    }

    /// Jacobi residuals `[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]` for all `i<j<k`.
    pub fn validate(&self) -> JacobiReport {
        let f = &self.field;
        let ad: Vec<Matrix<F>> = (0..self.n).map(|i| self.ad_basis(i)).collect();
        let mut failures = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                for k in j + 1..self.n {
                    let mut r = ad[i].mul_vec(&self.basis_bracket(j, k)).unwrap();
                    r = vector::add(f, &r, &ad[j].mul_vec(&self.basis_bracket(k, i)).unwrap());
                    r = vector::add(f, &r, &ad[k].mul_vec(&self.basis_bracket(i, j)).unwrap());
                    if !vector::is_zero(f, &r) {
                        failures.push(JacobiFailure {
                            triple: (i, j, k),
                            residual: vector::format(f, &r),
                        });
                    }
                }
            }
        }
        JacobiReport { failures }
    }

    pub(crate) fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        match report.failures.first() {
            None => Ok(()),
            Some(first) => Err(Error::InvalidAlgebra {
                count: report.failures.len(),
                first: first.triple,
            }),
        }
    }

    /// The `n × n(n-1)/2` matrix of `x ∧ y ↦ [x, y]`.
    pub fn bracket_map_matrix(&self) -> Matrix<F> {
        Matrix::from_columns(&self.field, self.n, &self.brackets).expect("bracket columns have length n")
    }

    pub fn derived_subalgebra(&self) -> Subspace<F> {
        Subspace::from_vectors(&self.field, self.n, self.brackets.iter().cloned())
            .expect("bracket vectors have length n")
    }

    /// `∩_i ker ad(e_i)`
    pub fn center(&self) -> Subspace<F> {
        let mut rows = Vec::with_capacity(self.n * self.n);
        for i in 0..self.n {
            rows.extend(self.ad_basis(i).row_vecs());
        }
        Matrix::from_rows(&self.field, self.n, rows)
            .expect("ad rows have length n")
            .kernel_basis()
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.iter().all(|v| vector::is_zero(&self.field, v))
    }

    /// Re-expresses the structure constants over another field.
    pub fn map_field<G: Field>(
        &self,
        g: &G,
        mut m: impl FnMut(&F::Elem) -> Result<G::Elem>,
    ) -> Result<LieAlgebra<G>> {
        let table = self
            .brackets
            .iter()
            .map(|v| v.iter().map(&mut m).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let alg = LieAlgebra::from_table(g, self.n, self.names.clone(), table);
        alg.ensure_valid()?;
        Ok(alg)
    }

    /// The same algebra in the basis given by the columns of an invertible `p`.
    pub fn change_basis(&self, p: &Matrix<F>) -> Result<LieAlgebra<F>> {
        check_len(self.n, p.rows())?;
        check_len(self.n, p.cols())?;
        let inv = p
            .inverse()
            .ok_or_else(|| Error::Input("change of basis matrix is singular".into()))?;
        let cols: Vec<Vec<F::Elem>> = (0..self.n).map(|j| p.column(j)).collect();
        let table = self
            .wedge
            .pairs()
            .iter()
            .map(|&(i, j)| inv.mul_vec(&self.bracket(&cols[i], &cols[j])?))
            .collect::<Result<Vec<_>>>()?;
        let names = (0..self.n).map(|i| format!("b{i}")).collect();
        Ok(LieAlgebra::from_table(&self.field, self.n, names, table))
    }

    /// Subalgebra spanned by an echelon subspace, in the echelon basis of `s`.
    pub fn subalgebra(&self, s: &Subspace<F>) -> Result<LieAlgebra<F>> {
        check_len(self.n, s.ambient())?;
        let k = s.dim();
        let w = WedgeIndex::new(k);
        let mut table = Vec::with_capacity(w.len());
        for &(a, b) in w.pairs() {
            let br = self.bracket(&s.basis()[a], &s.basis()[b])?;
            let coords = s.coordinates(&br)?.ok_or(Error::NotSubalgebra(a, b))?;
            table.push(coords);
        }
        let names = s
            .basis()
            .iter()
            .map(|v| self.describe(v))
            .collect();
        Ok(LieAlgebra::from_table(&self.field, k, names, table))
    }

    /// Human-readable linear combination of basis names.
    pub fn describe(&self, v: &[F::Elem]) -> String {
        let f = &self.field;
        let terms: Vec<String> = v
            .iter()
            .zip(&self.names)
            .filter(|(c, _)| !f.is_zero(c))
            .map(|(c, name)| {
                if f.is_one(c) {
                    name.clone()
                } else {
                    format!("{}*{}", f.format(c), name)
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

impl LieAlgebra<crate::exactla::Rationals> {
    /// Reduction of rational structure constants into `g` (e.g. modulo a prime).
    pub fn to_field<G: Field>(&self, g: &G) -> Result<LieAlgebra<G>> {
        self.map_field(g, |c| g.from_rational(c))
    }
}
