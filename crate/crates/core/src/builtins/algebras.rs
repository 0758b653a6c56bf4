use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactla::{vector, Field, Rationals, Subspace};
use crate::liealg::{semidirect, tensor_with_comm, CommAlgebra, LieAlgebra};
use crate::repmod::LieModule;

type Alg = LieAlgebra<Rationals>;
type Bracket = (usize, usize, Vec<(usize, BigRational)>);

pub(crate) fn r(k: i64) -> BigRational {
    BigRational::from_integer(k.into())
}

fn build(n: usize, names: &[&str], brackets: Vec<Bracket>) -> Alg {
    let names = names.iter().map(|s| s.to_string()).collect();
    LieAlgebra::new(&Rationals, n, Some(names), brackets).expect("builtin satisfies Jacobi")
}

/// Basis `(c, x_1..x_k, x_{-1}..x_{-k})` with `[x_i, x_{-i}] = c`.
pub fn heisenberg(k: usize) -> Result<Alg> {
    if k == 0 {
        return Err(Error::Input("heisenberg needs k ≥ 1".into()));
    }
    let mut names = vec!["c".to_string()];
    names.extend((1..=k).map(|i| format!("x{i}")));
    names.extend((1..=k).map(|i| format!("x-{i}")));
    let brackets = (1..=k).map(|i| (i, k + i, vec![(0, r(1))]));
    LieAlgebra::new(&Rationals, 2 * k + 1, Some(names), brackets)
}

/// Basis `(E, H, F)`.
pub fn sl2() -> Alg {
    build(
        3,
        &["E", "H", "F"],
        vec![
            (1, 0, vec![(0, r(2))]),
            (1, 2, vec![(2, r(-2))]),
            (0, 2, vec![(1, r(1))]),
        ],
    )
}

/// `span{E, H}` inside [`sl2`].
pub fn borel_in_sl2() -> Subspace<Rationals> {
    Subspace::from_vectors(&Rationals, 3, [vector::unit(&Rationals, 3, 0), vector::unit(&Rationals, 3, 1)])
        .expect("unit vectors")
}

/// Basis `(E, H)` with `[H, E] = 2E`.
pub fn borel() -> Alg {
    sl2().subalgebra(&borel_in_sl2()).expect("E, H span a subalgebra")
}

pub fn abelian(n: usize) -> Alg {
    LieAlgebra::abelian(&Rationals, n)
}

/// The `(m+1)`-dimensional simple module: `F v_i = v_{i+1}`,
/// `E v_i = i(m+1−i) v_{i−1}`, `H v_i = (m−2i) v_i`, with `v_i = 0` outside `0..=m`.
pub fn vm_module(m: usize) -> LieModule<Rationals> {
    let d = m + 1;
    let f = &Rationals;
    let mut e = crate::exactla::Matrix::zeros(f, d, d);
    let mut h = crate::exactla::Matrix::zeros(f, d, d);
    let mut fm = crate::exactla::Matrix::zeros(f, d, d);
    for i in 0..d {
        h.set(i, i, r(m as i64 - 2 * i as i64));
        if i >= 1 {
            e.set(i - 1, i, r((i * (m + 1 - i)) as i64));
        }
        if i + 1 < d {
            fm.set(i + 1, i, r(1));
        }
    }
    LieModule::new(sl2(), d, vec![e, h, fm]).expect("standard action is a representation")
}

/// [`vm_module`] restricted to the Borel subalgebra, acting on basis `(E, H)`.
pub fn bvm_module(m: usize) -> LieModule<Rationals> {
    vm_module(m).restrict(&borel_in_sl2()).expect("borel is a subalgebra")
}

/// `sl2 ⋉ V(m)`, dimension `m + 4`.
pub fn galilei(m: usize) -> Alg {
    semidirect(&vm_module(m)).expect("valid module")
}

/// `b ⋉ V(m)`, dimension `m + 3`.
pub fn bm_algebra(m: usize) -> Alg {
    semidirect(&bvm_module(m)).expect("valid module")
}

/// Basis `(H, E, u, v)`: `[H,E]=2E`, `[H,u]=u`, `[H,v]=−v`, `[E,v]=u`.
pub fn age1() -> Alg {
    build(
        4,
        &["H", "E", "u", "v"],
        vec![
            (0, 1, vec![(1, r(2))]),
            (0, 2, vec![(2, r(1))]),
            (0, 3, vec![(3, r(-1))]),
            (1, 3, vec![(2, r(1))]),
        ],
    )
}

/// Three-dimensional normal forms, graded by `dim [L, L]`.
///
/// * case 1, no params: `sl2`; params `(α, β)`: `[x,y]=z`, `[y,z]=αx`, `[z,x]=βy`.
/// * case 2, params `(a, b)`: `[x,y]=0`, `[z,x]=y`, `[z,y]=ax+by`.
/// * case 3, params `(a, b, c)`: `[u,v]=aw`, `[u,w]=bw`, `[v,w]=cw`.
pub fn dim3_family(case: u8, params: &[BigRational]) -> Result<Alg> {
    let names = |s: [&str; 3]| Some(s.iter().map(|x| x.to_string()).collect());
    let bad = || Error::Input(format!("dim3 case {case} does not take {} parameter(s)", params.len()));
    let brackets: Vec<Bracket> = match (case, params) {
        (1, []) => return Ok(sl2()),
        (1, [al, be]) => vec![
            (0, 1, vec![(2, r(1))]),
            (1, 2, vec![(0, al.clone())]),
            (2, 0, vec![(1, be.clone())]),
        ],
        (2, [a, b]) => vec![(2, 0, vec![(1, r(1))]), (2, 1, vec![(0, a.clone()), (1, b.clone())])],
        (3, [a, b, c]) => vec![
            (0, 1, vec![(2, a.clone())]),
            (0, 2, vec![(2, b.clone())]),
            (1, 2, vec![(2, c.clone())]),
        ],
        _ => return Err(bad()),
    };
    let n = if case == 3 { ["u", "v", "w"] } else { ["x", "y", "z"] };
    LieAlgebra::new(&Rationals, 3, names(n), brackets)
}

/// `L ⊗ F[t]/(t^N)`.
pub fn truncated_current(l: &Alg, n: usize) -> Result<Alg> {
    tensor_with_comm(l, &CommAlgebra::truncated_poly(&Rationals, n)?)
}

/// Exponents `(a, b)` with `a + b ≤ N`, by total degree, then `a` descending.
pub fn qplane_exponents(n: usize) -> Vec<(usize, usize)> {
    (0..=n)
        .flat_map(|deg| (0..=deg).rev().map(move |a| (a, deg - a)))
        .collect()
}

fn check_qplane_param(q: &BigRational) -> Result<()> {
    if q.is_zero() || q.abs().is_one() {
        return Err(Error::Input(format!("quantum parameter {q} is a root of unity or zero")));
    }
    Ok(())
}

/// Product in the quantum plane truncated above total degree `N`:
/// `t^m t^n = q^{m₂n₁} t^{m+n}`.
pub fn qplane_product(q: &BigRational, n: usize, x: &[BigRational], y: &[BigRational]) -> Vec<BigRational> {
    let exps = qplane_exponents(n);
    let index = |e: (usize, usize)| exps.iter().position(|&x| x == e);
    let mut out = vec![BigRational::zero(); exps.len()];
    for (i, &(m1, m2)) in exps.iter().enumerate() {
        if x[i].is_zero() {
            continue;
        }
        for (j, &(n1, n2)) in exps.iter().enumerate() {
            if y[j].is_zero() {
                continue;
            }
            if let Some(k) = index((m1 + n1, m2 + n2)) {
                out[k] += &x[i] * &y[j] * Rationals.pow(q, (m2 * n1) as u64);
            }
        }
    }
    out
}

/// Truncation of the quantum-plane Lie algebra:
/// `[t^m, t^n] = (q^{m₂n₁} − q^{n₂m₁}) t^{m+n}`, zero above total degree `N`.
pub fn truncated_quantum_plane(q: &BigRational, n: usize) -> Result<Alg> {
    check_qplane_param(q)?;
    if n == 0 {
        return Err(Error::Input("qplane truncation needs N ≥ 1".into()));
    }
    let exps = qplane_exponents(n);
    let mut brackets = Vec::new();
    for (i, &(m1, m2)) in exps.iter().enumerate() {
        for (j, &(n1, n2)) in exps.iter().enumerate().skip(i + 1) {
            let Some(k) = exps.iter().position(|&e| e == (m1 + n1, m2 + n2)) else {
                continue;
            };
            let c = Rationals.pow(q, (m2 * n1) as u64) - Rationals.pow(q, (n2 * m1) as u64);
            if !c.is_zero() {
                brackets.push((i, j, vec![(k, c)]));
            }
        }
    }
    let names = exps.iter().map(|(a, b)| format!("t^({a},{b})")).collect();
    LieAlgebra::new(&Rationals, exps.len(), Some(names), brackets)
}
