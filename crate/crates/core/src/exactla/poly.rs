use crate::error::Result;
use crate::exactla::field::Field;

/// Univariate polynomial with coefficients listed from the constant term up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<F: Field> {
    coeffs: Vec<F::Elem>,
}

impl<F: Field> Poly<F> {
    pub fn new(f: &F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| f.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(f: &F, c: F::Elem) -> Self {
        Self::new(f, vec![c])
    }

    /// `c λ^k`
    pub fn monomial(f: &F, c: F::Elem, k: usize) -> Self {
        let mut coeffs = vec![f.zero(); k + 1];
        coeffs[k] = c;
        Self::new(f, coeffs)
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn add(&self, f: &F, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = f.zero();
        let coeffs = (0..n)
            .map(|i| {
                f.add(
                    self.coeffs.get(i).unwrap_or(&z),
                    other.coeffs.get(i).unwrap_or(&z),
                )
            })
            .collect();
        Self::new(f, coeffs)
    }

    pub fn mul(&self, f: &F, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero();
        }
        let mut coeffs = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                f.mul_add_assign(&mut coeffs[i + j], a, b);
            }
        }
        Self::new(f, coeffs)
    }

    pub fn scale(&self, f: &F, c: &F::Elem) -> Self {
        Self::new(f, self.coeffs.iter().map(|a| f.mul(a, c)).collect())
    }

    pub fn eval(&self, f: &F, at: &F::Elem) -> F::Elem {
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.add(&f.mul(&acc, at), c);
        }
        acc
    }

    pub fn map_field<G: Field>(&self, g: &G, mut m: impl FnMut(&F::Elem) -> Result<G::Elem>) -> Result<Poly<G>> {
        let coeffs = self.coeffs.iter().map(&mut m).collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(g, coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{vector, Rationals};

    #[test]
    fn horner() {
        let f = Rationals;
        let p = Poly::new(&f, vec![f.from_i64(1), f.from_i64(-2), f.from_i64(3), f.zero()]);
        assert_eq!(p.degree(), 2);
        assert_eq!(p.eval(&f, &f.from_i64(2)), f.from_i64(9));
        let q = p.add(&f, &Poly::monomial(&f, f.from_i64(-3), 2));
        assert_eq!(q.degree(), 1);
        let sq = q.mul(&f, &q);
        assert_eq!(sq.coeffs(), &vector::from_i64s(&f, &[1, -4, 4])[..]);
        assert_eq!(sq.mul(&f, &Poly::zero()), Poly::zero());
        assert_eq!(q.scale(&f, &f.zero()), Poly::zero());
    }
}
