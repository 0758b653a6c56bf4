//! Random inputs shared by the property and acceptance suites.
#![allow(dead_code)]

use num_rational::BigRational;
use rand::Rng;
use zpd_core::builtins;
use zpd_core::exactla::{vector, Field, Matrix, PrimeField};
use zpd_core::LieAlgebra;

pub fn rat(k: i64) -> BigRational {
    BigRational::from_integer(k.into())
}

pub fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

/// A uniformly random invertible `n × n` matrix over GF(p).
pub fn random_invertible<R: Rng>(rng: &mut R, f: &PrimeField, n: usize) -> Matrix<PrimeField> {
    loop {
        let rows = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(0..f.modulus())).collect())
            .collect();
        let m = Matrix::from_rows(f, n, rows).unwrap();
        if m.inverse().is_some() {
            return m;
        }
    }
}

/// Sparse random structure constants, kept only when Jacobi holds.
pub fn random_sparse_algebra<R: Rng>(rng: &mut R, f: &PrimeField, n: usize) -> Option<LieAlgebra<PrimeField>> {
    for _ in 0..200 {
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut coeffs: Vec<(usize, u64)> = Vec::new();
                for k in 0..n {
                    if rng.gen_bool(0.25) {
                        coeffs.push((k, rng.gen_range(1..f.modulus())));
                    }
                }
                brackets.push((i, j, coeffs));
            }
        }
        if let Ok(l) = LieAlgebra::new(f, n, None, brackets) {
            return Some(l);
        }
    }
    None
}

/// Small algebras over GF(p) with known structure, before scrambling.
pub fn seed_algebras(f: &PrimeField) -> Vec<LieAlgebra<PrimeField>> {
    let q = |l: LieAlgebra<zpd_core::Rationals>| l.to_field(f).unwrap();
    let mut out = vec![
        q(builtins::sl2()),
        q(builtins::borel()),
        q(builtins::heisenberg(1).unwrap()),
        q(builtins::age1()),
        q(builtins::dim3_family(2, &[rat(1), rat(-1)]).unwrap()),
        LieAlgebra::abelian(f, 3),
        LieAlgebra::abelian(f, 4),
        zpd_core::liealg::direct_sum(&q(builtins::borel()), &q(builtins::borel())).unwrap(),
        zpd_core::liealg::direct_sum(&q(builtins::sl2()), &LieAlgebra::abelian(f, 1)).unwrap(),
        zpd_core::liealg::direct_sum(&q(builtins::heisenberg(1).unwrap()), &LieAlgebra::abelian(f, 1)).unwrap(),
    ];
    out.retain(|l| l.dim() <= 4);
    out
}

/// A valid random algebra of dimension at most 4: either sparse random constants
/// or a random change of basis of a seed algebra.
pub fn random_small_algebra<R: Rng>(rng: &mut R, f: &PrimeField) -> LieAlgebra<PrimeField> {
    if rng.gen_bool(0.5) {
        let n = rng.gen_range(2..=4);
        if let Some(l) = random_sparse_algebra(rng, f, n) {
            return l;
        }
    }
    let seeds = seed_algebras(f);
    let base = &seeds[rng.gen_range(0..seeds.len())];
    base.change_basis(&random_invertible(rng, f, base.dim())).unwrap()
}

pub fn is_zero<F: Field>(f: &F, v: &[F::Elem]) -> bool {
    vector::is_zero(f, v)
}
