//! Finite-dimensional modules over a Lie algebra.

use serde::Serialize;

use crate::error::{check_len, Error, Result};
use crate::exactla::{vector, Field, Matrix, Subspace};
use crate::liealg::LieAlgebra;

/// A representation `ρ` of a Lie algebra on `F^d`, given by one `d × d` matrix per basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieModule<F: Field> {
    parent: LieAlgebra<F>,
    d: usize,
    rho: Vec<Matrix<F>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuleFailure {
    pub pair: (usize, usize),
    /// `ρ([e_i,e_j]) − [ρ_i, ρ_j]`, row-major.
    pub residual: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ModuleReport {
    pub failures: Vec<ModuleFailure>,
}

impl ModuleReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

impl<F: Field> LieModule<F> {
    pub fn new(parent: LieAlgebra<F>, d: usize, rho: Vec<Matrix<F>>) -> Result<Self> {
        let m = Self::unvalidated(parent, d, rho)?;
        let report = m.validate();
        if let Some(first) = report.failures.first() {
            return Err(Error::InvalidModule {
                count: report.failures.len(),
                first: first.pair,
            });
        }
        Ok(m)
    }

    pub fn unvalidated(parent: LieAlgebra<F>, d: usize, rho: Vec<Matrix<F>>) -> Result<Self> {
        check_len(parent.dim(), rho.len())?;
        for m in &rho {
            if m.field() != parent.field() {
                return Err(Error::FieldMismatch(m.field().tag(), parent.field().tag()));
            }
            check_len(d, m.rows())?;
            check_len(d, m.cols())?;
        }
        Ok(LieModule { parent, d, rho })
    }

    pub fn trivial(parent: LieAlgebra<F>, d: usize) -> Self {
        let z = Matrix::zeros(parent.field(), d, d);
        let rho = vec![z; parent.dim()];
        LieModule { parent, d, rho }
    }

    /// The adjoint module `ρ_i = ad(e_i)`.
    pub fn adjoint(parent: LieAlgebra<F>) -> Self {
        let rho = (0..parent.dim()).map(|i| parent.ad_basis(i)).collect();
        let d = parent.dim();
        LieModule { parent, d, rho }
    }

    pub fn parent(&self) -> &LieAlgebra<F> {
        &self.parent
    }
    pub fn field(&self) -> &F {
        self.parent.field()
    }
    pub fn dim(&self) -> usize {
        self.d
    }
    pub fn rho(&self) -> &[Matrix<F>] {
        &self.rho
    }

    /// `ρ(x) = Σ x_i ρ_i`
    pub fn rho_of(&self, x: &[F::Elem]) -> Result<Matrix<F>> {
        check_len(self.parent.dim(), x.len())?;
        let mut out = Matrix::zeros(self.field(), self.d, self.d);
        for (c, m) in x.iter().zip(&self.rho) {
            if !self.field().is_zero(c) {
                out.axpy(c, m)?;
            }
        }
        Ok(out)
    }

    pub fn act(&self, x: &[F::Elem], v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        check_len(self.d, v.len())?;
        self.rho_of(x)?.mul_vec(v)
    }

    /// Checks `ρ([e_i,e_j]) = ρ_i ρ_j − ρ_j ρ_i` for every `i < j`.
    pub fn validate(&self) -> ModuleReport {
        let f = self.field();
        let n = self.parent.dim();
        let mut failures = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.rho_of(&self.parent.basis_bracket(i, j)).unwrap();
                let rhs = self.rho[i].commutator(&self.rho[j]).unwrap();
                let diff = lhs.sub(&rhs).unwrap();
                if !diff.is_zero() {
                    failures.push(ModuleFailure {
                        pair: (i, j),
                        residual: diff.row_vecs().iter().map(|r| vector::format(f, r)).collect(),
                    });
                }
            }
        }
        ModuleReport { failures }
    }

    /// The `d × (n·d)` matrix of `L ⊗ V → V`; column `i·d + j` is `ρ_i v_j`.
    pub fn action_map_matrix(&self) -> Matrix<F> {
        let n = self.parent.dim();
        let d = self.d;
        Matrix::from_fn(self.field(), d, n * d, |r, c| {
            self.rho[c / d].get(r, c % d).clone()
        })
    }

    /// The `d × n` matrix of `x ↦ x·v` for a fixed `v`.
    pub fn orbit_map_matrix(&self, v: &[F::Elem]) -> Result<Matrix<F>> {
        check_len(self.d, v.len())?;
        let cols = self
            .rho
            .iter()
            .map(|m| m.mul_vec(v))
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(self.field(), self.d, &cols)
    }

    /// The subspace `LV` spanned by all `x·v`.
    pub fn lv_subspace(&self) -> Subspace<F> {
        self.action_map_matrix().column_space()
    }

    /// Restriction to the subalgebra spanned by `s`, in the echelon basis of `s`.
    pub fn restrict(&self, s: &Subspace<F>) -> Result<LieModule<F>> {
        let sub = self.parent.subalgebra(s)?;
        let rho = s
            .basis()
            .iter()
            .map(|b| self.rho_of(b))
            .collect::<Result<Vec<_>>>()?;
        LieModule::new(sub, self.d, rho)
    }

    pub fn direct_sum(&self, other: &LieModule<F>) -> Result<LieModule<F>> {
        if self.parent != other.parent {
            return Err(Error::Input("modules have different parent algebras".into()));
        }
        let rho = self
            .rho
            .iter()
            .zip(&other.rho)
            .map(|(a, b)| a.block_diag(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(LieModule {
            parent: self.parent.clone(),
            d: self.d + other.d,
            rho,
        })
    }

    pub fn map_field<G: Field>(
        &self,
        g: &G,
        mut m: impl FnMut(&F::Elem) -> Result<G::Elem>,
    ) -> Result<LieModule<G>> {
        let parent = self.parent.map_field(g, &mut m)?;
        let rho = self
            .rho
            .iter()
            .map(|r| {
                let rows = r
                    .row_vecs()
                    .iter()
                    .map(|row| row.iter().map(&mut m).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                Matrix::from_rows(g, self.d, rows)
            })
            .collect::<Result<Vec<_>>>()?;
        LieModule::new(parent, self.d, rho)
    }
}

impl LieModule<crate::exactla::Rationals> {
    pub fn to_field<G: Field>(&self, g: &G) -> Result<LieModule<G>> {
        self.map_field(g, |c| g.from_rational(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::exactla::Rationals;

    #[test]
    fn trivial_module_is_valid_with_zero_action() {
        let m = LieModule::trivial(builtins::sl2(), 4);
        assert!(m.validate().is_valid());
        assert!(m.action_map_matrix().is_zero());
        assert_eq!(m.lv_subspace().dim(), 0);
    }

    #[test]
    fn vm_modules_validate() {
        for m in 0..7 {
            assert!(builtins::vm_module(m).validate().is_valid());
        }
    }

    #[test]
    fn v1_without_e_action_fails_on_e_f() {
        let v1 = builtins::vm_module(1);
        let mut rho = v1.rho().to_vec();
        rho[0] = Matrix::zeros(&Rationals, 2, 2);
        let broken = LieModule::unvalidated(v1.parent().clone(), 2, rho).unwrap();
        let report = broken.validate();
        assert!(report.failures.iter().any(|f| f.pair == (0, 2)));
        assert!(LieModule::new(v1.parent().clone(), 2, broken.rho().to_vec()).is_err());
    }

    #[test]
    fn action_map_ranks() {
        // rank-nullity: dim M_V = n·d − dim LV
        let v1 = builtins::vm_module(1);
        assert_eq!(v1.action_map_matrix().rank(), 2);
        assert_eq!(6 - v1.lv_subspace().dim(), 4);
        let v3 = builtins::vm_module(3);
        assert_eq!(12 - v3.lv_subspace().dim(), 8);
        assert_eq!(builtins::vm_module(0).lv_subspace().dim(), 0);
        for m in 1..6 {
            assert_eq!(builtins::vm_module(m).lv_subspace().dim(), m + 1, "m={m}");
        }
    }

    #[test]
    fn restriction_to_borel() {
        let b = builtins::borel_in_sl2();
        for m in 1..6 {
            let r = builtins::vm_module(m).restrict(&b).unwrap();
            assert_eq!(r.parent().dim(), 2);
            assert!(r.validate().is_valid());
            assert_eq!(r.lv_subspace().dim(), m + 1);
        }
        let v2 = builtins::vm_module(2);
        assert_eq!(v2.restrict(&Subspace::full(&Rationals, 3)).unwrap(), v2);
        let e_only = Subspace::from_vectors(&Rationals, 3, [vector::unit(&Rationals, 3, 0)]).unwrap();
        assert!(v2.restrict(&e_only).unwrap().parent().is_abelian());
        let not_sub = Subspace::from_vectors(
            &Rationals,
            3,
            [vector::unit(&Rationals, 3, 0), vector::unit(&Rationals, 3, 2)],
        )
        .unwrap();
        assert!(matches!(v2.restrict(&not_sub), Err(Error::NotSubalgebra(..))));
    }

    #[test]
    fn direct_sums() {
        let v1 = builtins::vm_module(1);
        let v2 = builtins::vm_module(2);
        let s = v1.direct_sum(&v2).unwrap();
        assert_eq!(s.dim(), 5);
        assert!(s.validate().is_valid());
        assert_eq!(
            s.action_map_matrix().rank(),
            v1.action_map_matrix().rank() + v2.action_map_matrix().rank()
        );
        let zero = LieModule::trivial(builtins::sl2(), 0);
        assert_eq!(v1.direct_sum(&zero).unwrap(), v1);
        let other = LieModule::trivial(builtins::heisenberg(1).unwrap(), 1);
        assert!(v1.direct_sum(&other).is_err());
    }
}
