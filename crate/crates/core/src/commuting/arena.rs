use crate::error::{check_len, Error, Result};
use crate::exactla::{vector, Field, Subspace};
use crate::liealg::LieAlgebra;
use crate::repmod::LieModule;

/// Where annihilating pairs live: commuting pairs of a Lie algebra (wedge
/// coordinates) or pairs `(x, v)` with `x·v = 0` for a module (tensor coordinates
/// with flat index `i·d + j`).
#[derive(Debug)]
pub enum Arena<'a, F: Field> {
    Lie(&'a LieAlgebra<F>),
    Module(&'a LieModule<F>),
}

impl<F: Field> Clone for Arena<'_, F> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<F: Field> Copy for Arena<'_, F> {}

impl<'a, F: Field> Arena<'a, F> {
    pub fn field(&self) -> &'a F {
        match self {
            Arena::Lie(l) => l.field(),
            Arena::Module(m) => m.field(),
        }
    }

    /// Dimension of the space `x` ranges over.
    pub fn left_dim(&self) -> usize {
        match self {
            Arena::Lie(l) => l.dim(),
            Arena::Module(m) => m.parent().dim(),
        }
    }

    /// Dimension of the space the partner ranges over.
    pub fn right_dim(&self) -> usize {
        match self {
            Arena::Lie(l) => l.dim(),
            Arena::Module(m) => m.dim(),
        }
    }

    pub fn is_lie(&self) -> bool {
        matches!(self, Arena::Lie(_))
    }

    /// Length of the coordinate vectors for `x ∧ y` or `x ⊗ v`.
    pub fn coord_len(&self) -> usize {
        match self {
            Arena::Lie(l) => l.wedge_index().len(),
            Arena::Module(m) => m.parent().dim() * m.dim(),
        }
    }

    /// `[x, y]` or `x·v`.
    pub fn apply(&self, x: &[F::Elem], y: &[F::Elem]) -> Result<Vec<F::Elem>> {
        match self {
            Arena::Lie(l) => l.bracket(x, y),
            Arena::Module(m) => m.act(x, y),
        }
    }

    /// Coordinates of `x ∧ y` or `x ⊗ v`.
    pub fn coords(&self, x: &[F::Elem], y: &[F::Elem]) -> Result<Vec<F::Elem>> {
        check_len(self.left_dim(), x.len())?;
        check_len(self.right_dim(), y.len())?;
        let f = self.field();
        match self {
            Arena::Lie(l) => l.wedge_index().wedge(f, x, y),
            Arena::Module(m) => {
                let d = m.dim();
                let mut out = vector::zeros(f, x.len() * d);
                for (i, xi) in x.iter().enumerate() {
                    if f.is_zero(xi) {
                        continue;
                    }
                    for (j, vj) in y.iter().enumerate() {
                        out[i * d + j] = f.mul(xi, vj);
                    }
                }
                Ok(out)
            }
        }
    }

    /// Everything annihilated together with `x`: `ker ad(x)` or `ker ρ(x)`.
    pub fn right_partners(&self, x: &[F::Elem]) -> Result<Subspace<F>> {
        Ok(match self {
            Arena::Lie(l) => l.ad_matrix(x)?.kernel_basis(),
            Arena::Module(m) => m.rho_of(x)?.kernel_basis(),
        })
    }

    /// For modules, `{x : x·v = 0}`; for Lie algebras the relation is symmetric.
    pub fn left_partners(&self, y: &[F::Elem]) -> Result<Subspace<F>> {
        match self {
            Arena::Lie(l) => Ok(l.ad_matrix(y)?.kernel_basis()),
            Arena::Module(m) => Ok(m.orbit_map_matrix(y)?.kernel_basis()),
        }
    }

    /// The subspace the span of all annihilating pairs must fill:
    /// `ker(x∧y ↦ [x,y])` or `ker(x⊗v ↦ x·v)`.
    pub fn target_space(&self) -> Subspace<F> {
        match self {
            Arena::Lie(l) => l.bracket_map_matrix().kernel_basis(),
            Arena::Module(m) => m.action_map_matrix().kernel_basis(),
        }
    }

    /// Evaluates an element of the coordinate space under the bracket or action map.
    pub fn contract(&self, w: &[F::Elem]) -> Result<Vec<F::Elem>> {
        check_len(self.coord_len(), w.len())?;
        match self {
            Arena::Lie(l) => l.bracket_map_matrix().mul_vec(w),
            Arena::Module(m) => m.action_map_matrix().mul_vec(w),
        }
    }

    /// Basis index pair behind a coordinate.
    pub fn coord_pair(&self, k: usize) -> (usize, usize) {
        match self {
            Arena::Lie(l) => l.wedge_index().pair(k),
            Arena::Module(m) => (k / m.dim(), k % m.dim()),
        }
    }

    pub fn pair(&self, x: Vec<F::Elem>, y: Vec<F::Elem>) -> Result<CommutingPair<F>> {
        CommutingPair::new(self, x, y)
    }
}

/// `(x, y)` with `[x, y] = 0`, or `(x, v)` with `x·v = 0`; checked on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutingPair<F: Field> {
    x: Vec<F::Elem>,
    y: Vec<F::Elem>,
}

impl<F: Field> CommutingPair<F> {
    pub fn new(arena: &Arena<'_, F>, x: Vec<F::Elem>, y: Vec<F::Elem>) -> Result<Self> {
        let f = arena.field();
        let r = arena.apply(&x, &y)?;
        if !vector::is_zero(f, &r) {
            return Err(Error::PairVerification(format!(
                "x = [{}], y = [{}] gives [{}]",
                vector::format(f, &x).join(", "),
                vector::format(f, &y).join(", "),
                vector::format(f, &r).join(", ")
            )));
        }
        Ok(CommutingPair { x, y })
    }

    pub fn x(&self) -> &[F::Elem] {
        &self.x
    }
    pub fn y(&self) -> &[F::Elem] {
        &self.y
    }
    pub fn into_parts(self) -> (Vec<F::Elem>, Vec<F::Elem>) {
        (self.x, self.y)
    }
}
