use num_rational::BigRational;

use crate::builtins::{self, BuiltinRef};
use crate::commuting::config::interleaved;
use crate::commuting::Arena;
use crate::error::{Error, Result};
use crate::exactla::{vector, Field, Poly, Rationals};
use crate::liealg::LieAlgebra;

/// A one-parameter polynomial family `λ ↦ (x(λ), y(λ))` of annihilating pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairFamily<F: Field> {
    name: String,
    x: Vec<Poly<F>>,
    y: Vec<Poly<F>>,
}

impl<F: Field> PairFamily<F> {
    pub fn new(name: impl Into<String>, x: Vec<Poly<F>>, y: Vec<Poly<F>>) -> Self {
        PairFamily { name: name.into(), x, y }
    }

    pub fn constant(f: &F, name: impl Into<String>, x: Vec<F::Elem>, y: Vec<F::Elem>) -> Self {
        let lift = |v: Vec<F::Elem>| v.into_iter().map(|c| Poly::constant(f, c)).collect();
        Self::new(name, lift(x), lift(y))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Largest degree among the coordinates of `x` and `y`.
    pub fn degree(&self) -> usize {
        self.x.iter().chain(&self.y).map(Poly::degree).max().unwrap_or(0)
    }

    pub fn eval(&self, f: &F, at: &F::Elem) -> (Vec<F::Elem>, Vec<F::Elem>) {
        let ev = |v: &[Poly<F>]| v.iter().map(|p| p.eval(f, at)).collect();
        (ev(&self.x), ev(&self.y))
    }

    /// Proves the annihilation identity: its residual has degree ≤ 2D, so vanishing at
    /// `2D + 1` distinct points forces it to vanish identically.
    pub fn certify(&self, arena: &Arena<'_, F>) -> Result<()> {
        let f = arena.field();
        if self.x.len() != arena.left_dim() || self.y.len() != arena.right_dim() {
            return Err(Error::FamilyInvalid(format!("{}: wrong vector lengths", self.name)));
        }
        let count = 2 * self.degree() + 1;
        let p = f.characteristic();
        if p != 0 && count as u64 > p {
            return Err(Error::FamilyInvalid(format!(
                "{}: needs {count} distinct points in a field of size {p}",
                self.name
            )));
        }
        for k in interleaved(count) {
            let at = f.from_i64(k);
            let (x, y) = self.eval(f, &at);
            if !vector::is_zero(f, &arena.apply(&x, &y)?) {
                return Err(Error::FamilyInvalid(format!("{} at λ = {k}", self.name)));
            }
        }
        Ok(())
    }

    /// The grid together with the certification points, deduplicated in the field.
    pub fn sample_points(&self, f: &F, grid: &[i64]) -> Vec<F::Elem> {
        let extra = interleaved(2 * self.degree() + 1);
        let mut out: Vec<F::Elem> = Vec::new();
        for k in grid.iter().chain(&extra) {
            let e = f.from_i64(*k);
            if !out.contains(&e) {
                out.push(e);
            }
        }
        out
    }

    pub fn map_field<G: Field>(
        &self,
        g: &G,
        mut m: impl FnMut(&F::Elem) -> Result<G::Elem>,
    ) -> Result<PairFamily<G>> {
        let mut conv = |v: &[Poly<F>]| {
            v.iter()
                .map(|p| p.map_field(g, &mut m))
                .collect::<Result<Vec<_>>>()
        };
        let x = conv(&self.x)?;
        let y = conv(&self.y)?;
        Ok(PairFamily { name: self.name.clone(), x, y })
    }
}

impl PairFamily<Rationals> {
    /// Reduction into another field; fails if a denominator vanishes there.
    pub fn to_field<G: Field>(&self, g: &G) -> Result<PairFamily<G>> {
        self.map_field(g, |c| g.from_rational(c))
    }
}

type QPoly = Poly<Rationals>;

fn r(k: i64) -> BigRational {
    BigRational::from_integer(k.into())
}

fn zeros(n: usize) -> Vec<QPoly> {
    vec![Poly::zero(); n]
}

fn mono(c: BigRational, k: usize) -> QPoly {
    Poly::monomial(&Rationals, c, k)
}

fn bump(slot: &mut QPoly, c: i64, k: usize) {
    *slot = slot.add(&Rationals, &mono(r(c), k));
}

fn factorial(n: usize) -> BigRational {
    (1..=n as i64).map(r).product()
}

/// Families for `V(m)` over sl2 on basis `(E, H, F)`.
pub fn vm_families(m: usize) -> Vec<PairFamily<Rationals>> {
    let d = m + 1;
    let mut out = Vec::new();

    // F + λH − λ²E kills Σ (m!/i!) λ^{m−i} v_i
    let mut x = zeros(3);
    x[2] = mono(r(1), 0);
    x[1] = mono(r(1), 1);
    x[0] = mono(r(-1), 2);
    let v = (0..d).map(|i| mono(factorial(m) / factorial(i), m - i)).collect();
    out.push(PairFamily::new(format!("vm{m}:nilpotent"), x, v));

    out.push(PairFamily::constant(
        &Rationals,
        format!("vm{m}:E-v0"),
        vector::unit(&Rationals, 3, 0),
        vector::unit(&Rationals, d, 0),
    ));

    if m % 2 == 0 {
        let k = m / 2;
        // H + 2λF kills Σ λ^i/i! v_{k+i}
        let mut x = zeros(3);
        x[1] = mono(r(1), 0);
        x[2] = mono(r(2), 1);
        let mut v = zeros(d);
        for i in 0..=k {
            v[k + i] = mono(r(1) / factorial(i), i);
        }
        out.push(PairFamily::new(format!("vm{m}:H+F"), x, v));

        let (x, v) = h_minus_e(m, 0, 1, 3);
        out.push(PairFamily::new(format!("vm{m}:H-E"), x, v));
    }
    out
}

/// `H − 2λE` (at coordinates `e_idx`, `h_idx` of an `n`-dimensional algebra) kills
/// `Σ (k+i)!/(i!(k−i)!) λ^i v_{k−i}` in `V(2k)`.
fn h_minus_e(m: usize, e_idx: usize, h_idx: usize, n: usize) -> (Vec<QPoly>, Vec<QPoly>) {
    let k = m / 2;
    let mut x = zeros(n);
    x[h_idx] = mono(r(1), 0);
    x[e_idx] = mono(r(-2), 1);
    let mut v = zeros(m + 1);
    for i in 0..=k {
        v[k - i] = mono(factorial(k + i) / (factorial(i) * factorial(k - i)), i);
    }
    (x, v)
}

/// Families for `V(m)` restricted to the Borel subalgebra on basis `(E, H)`.
pub fn bvm_families(m: usize) -> Vec<PairFamily<Rationals>> {
    let mut out = vec![PairFamily::constant(
        &Rationals,
        format!("bvm{m}:E-v0"),
        vector::unit(&Rationals, 2, 0),
        vector::unit(&Rationals, m + 1, 0),
    )];
    if m % 2 == 0 {
        let (x, v) = h_minus_e(m, 0, 1, 2);
        out.push(PairFamily::new(format!("bvm{m}:H-E"), x, v));
    }
    out
}

/// `(x_i + λx_j, λx_{−i} − x_{−j})` for `i < j`.
pub fn heisenberg_families(k: usize) -> Vec<PairFamily<Rationals>> {
    let n = 2 * k + 1;
    let mut out = Vec::new();
    for i in 1..=k {
        for j in i + 1..=k {
            let mut x = zeros(n);
            let mut y = zeros(n);
            x[i] = mono(r(1), 0);
            x[j] = mono(r(1), 1);
            y[k + i] = mono(r(1), 1);
            y[k + j] = mono(r(-1), 0);
            out.push(PairFamily::new(format!("heisenberg{k}:x{i}+x{j}"), x, y));
        }
    }
    out
}

/// Lifts families of `L` and of a module `V` into `L ⋉ V`, and adds every pair of
/// basis vectors of the abelian ideal `V`.
pub fn semidirect_families(
    nl: usize,
    d: usize,
    lie: &[PairFamily<Rationals>],
    module: &[PairFamily<Rationals>],
) -> Vec<PairFamily<Rationals>> {
    let n = nl + d;
    let pad = |v: &[QPoly], offset: usize| {
        let mut out = zeros(n);
        out[offset..offset + v.len()].clone_from_slice(v);
        out
    };
    let mut out = Vec::new();
    for fam in lie {
        out.push(PairFamily::new(format!("{}⋉", fam.name), pad(&fam.x, 0), pad(&fam.y, 0)));
    }
    for fam in module {
        out.push(PairFamily::new(format!("{}⋉", fam.name), pad(&fam.x, 0), pad(&fam.y, nl)));
    }
    for a in 0..d {
        for b in a + 1..d {
            out.push(PairFamily::constant(
                &Rationals,
                format!("ideal:v{a}-v{b}"),
                vector::unit(&Rationals, n, nl + a),
                vector::unit(&Rationals, n, nl + b),
            ));
        }
    }
    out
}

/// Families for `L ⊗ F[t]/(t^N)` with basis index `i·N + j` for `e_i ⊗ t^j`.
pub fn current_families(
    l: &LieAlgebra<Rationals>,
    n_trunc: usize,
    inner: &[PairFamily<Rationals>],
) -> Vec<PairFamily<Rationals>> {
    let n = l.dim();
    let total = n * n_trunc;
    let at = |i: usize, j: usize| i * n_trunc + j;
    let mut out = Vec::new();

    // (x⊗1 + λ y⊗a₂, x⊗a₁ + λ y⊗a₁a₂); a₂ = 1 gives ((x+λy)⊗1, (x+λy)⊗a₁)
    for xi in 0..n {
        for yi in 0..n {
            for a1 in 1..n_trunc {
                for a2 in 0..n_trunc {
                    let mut x = zeros(total);
                    let mut y = zeros(total);
                    bump(&mut x[at(xi, 0)], 1, 0);
                    bump(&mut x[at(yi, a2)], 1, 1);
                    bump(&mut y[at(xi, a1)], 1, 0);
                    if a1 + a2 < n_trunc {
                        bump(&mut y[at(yi, a1 + a2)], 1, 1);
                    }
                    out.push(PairFamily::new(format!("shear:e{xi},e{yi},t^{a1},t^{a2}"), x, y));
                }
            }
        }
    }

    // inner families tensored with basis monomials
    for fam in inner {
        for a in 0..n_trunc {
            for b in 0..n_trunc {
                let mut x = zeros(total);
                let mut y = zeros(total);
                for i in 0..n {
                    x[at(i, a)] = fam.x[i].clone();
                    y[at(i, b)] = fam.y[i].clone();
                }
                out.push(PairFamily::new(format!("{}⊗t^{a},t^{b}", fam.name), x, y));
            }
        }
    }
    out
}

/// `(λt^m + t^n, (λt^m + t^n)^k)` in the truncated quantum plane.
pub fn qplane_families(q: &BigRational, n_trunc: usize) -> Vec<PairFamily<Rationals>> {
    let exps = builtins::qplane_exponents(n_trunc);
    let dim = exps.len();
    let unit = |i| vector::unit(&Rationals, dim, i);
    let table: Vec<Vec<Vec<BigRational>>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| builtins::qplane_product(q, n_trunc, &unit(i), &unit(j)))
                .collect()
        })
        .collect();
    let product = |a: &[QPoly], b: &[QPoly]| {
        let mut out = zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                let ab = a[i].mul(&Rationals, &b[j]);
                if ab == Poly::zero() {
                    continue;
                }
                for (k, c) in table[i][j].iter().enumerate() {
                    if *c != r(0) {
                        out[k] = out[k].add(&Rationals, &ab.scale(&Rationals, c));
                    }
                }
            }
        }
        out
    };
    let mut out = Vec::new();
    for m in 1..dim {
        for n in 1..dim {
            if m == n {
                continue;
            }
            let mut x = zeros(dim);
            x[m] = mono(r(1), 1);
            x[n] = mono(r(1), 0);
            let mut power = product(&x, &x);
            let mut k = 2;
            while power.iter().any(|p| *p != Poly::zero()) {
                out.push(PairFamily::new(
                    format!("qplane:{:?}+{:?}^{k}", exps[m], exps[n]),
                    x.clone(),
                    power.clone(),
                ));
                power = product(&power, &x);
                k += 1;
            }
        }
    }
    out
}

/// Families matching the structure of a builtin, certified over Q.
/// References without known families give an empty list.
pub fn builtin_families(reference: &BuiltinRef) -> Result<Vec<PairFamily<Rationals>>> {
    let fams = raw_families(reference)?;
    let built = reference.build()?;
    let arena = match &built {
        builtins::Built::Algebra(a) => Arena::Lie(a),
        builtins::Built::Module(m) => Arena::Module(m),
    };
    for f in &fams {
        f.certify(&arena)?;
    }
    Ok(fams)
}

fn raw_families(reference: &BuiltinRef) -> Result<Vec<PairFamily<Rationals>>> {
    Ok(match reference {
        BuiltinRef::Vm(m) => vm_families(*m),
        BuiltinRef::Bvm(m) => bvm_families(*m),
        BuiltinRef::Heisenberg(k) => heisenberg_families(*k),
        BuiltinRef::Galilei(m) => semidirect_families(3, m + 1, &[], &vm_families(*m)),
        BuiltinRef::Bm(m) => semidirect_families(2, m + 1, &[], &bvm_families(*m)),
        BuiltinRef::Age1 => {
            let u = |i| vector::unit(&Rationals, 4, i);
            vec![
                PairFamily::constant(&Rationals, "age1:E-u", u(1), u(2)),
                PairFamily::constant(&Rationals, "age1:u-v", u(2), u(3)),
            ]
        }
        BuiltinRef::Current(inner, n) => {
            let inner_fams = raw_families(inner)?;
            current_families(&inner.algebra()?, *n, &inner_fams)
        }
        BuiltinRef::Qplane(q, n) => qplane_families(q, *n),
        _ => Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::vm_module;
    use crate::exactla::PrimeField;

    #[test]
    fn all_builtin_families_certify() {
        for s in [
            "vm:1", "vm:2", "vm:3", "vm:4", "vm:5", "vm:6", "bvm:1", "bvm:2", "bvm:4", "bvm:6",
            "heisenberg:3", "galilei:3", "galilei:4", "bm:2", "age1", "current:sl2:3",
            "current:borel:4", "current:heisenberg:2:2", "qplane:2:3", "qplane:-1/2:2",
        ] {
            let r: BuiltinRef = s.parse().unwrap();
            assert!(!builtin_families(&r).unwrap().is_empty(), "{s}");
        }
        assert!(builtin_families(&"sl2".parse().unwrap()).unwrap().is_empty());
    }

    #[test]
    fn nilpotent_family_on_v3() {
        let m = vm_module(3);
        let fam = &vm_families(3)[0];
        for k in [0, 1, 2] {
            let (x, v) = fam.eval(&Rationals, &r(k));
            assert!(vector::is_zero(&Rationals, &m.act(&x, &v).unwrap()));
        }
    }

    #[test]
    fn heisenberg_difference_relation() {
        let h = builtins::heisenberg(2).unwrap();
        let (x, y) = heisenberg_families(2)[0].eval(&Rationals, &r(1));
        assert_eq!(x, vector::from_i64s(&Rationals, &[0, 1, 1, 0, 0]));
        assert_eq!(y, vector::from_i64s(&Rationals, &[0, 0, 0, 1, -1]));
        assert!(vector::is_zero(&Rationals, &h.bracket(&x, &y).unwrap()));
    }

    #[test]
    fn degenerate_current_instance_commutes() {
        // λ = 0 collapses the shear pair to (x⊗1, x⊗t)
        let l = builtins::truncated_current(&builtins::sl2(), 2).unwrap();
        for fam in current_families(&builtins::sl2(), 2, &[]) {
            let (x, y) = fam.eval(&Rationals, &r(0));
            assert!(vector::is_zero(&Rationals, &l.bracket(&x, &y).unwrap()));
        }
    }

    #[test]
    fn corrupted_family_is_rejected() {
        let m = vm_module(2);
        let mut fam = vm_families(2)[0].clone();
        bump(&mut fam.y[0], 1, 0);
        assert!(matches!(fam.certify(&Arena::Module(&m)), Err(Error::FamilyInvalid(_))));
    }

    #[test]
    fn reduction_mod_p() {
        let f7 = PrimeField::new(7).unwrap();
        let m7 = vm_module(4).to_field(&f7).unwrap();
        for fam in vm_families(4) {
            let g = fam.to_field(&f7).unwrap();
            for at in g.sample_points(&f7, &[0, 1, -1, 2, -2]) {
                let (x, v) = g.eval(&f7, &at);
                assert!(vector::is_zero(&f7, &m7.act(&x, &v).unwrap()));
            }
        }
        // 1/5! has no image mod 5
        let f5 = PrimeField::new(5).unwrap();
        assert!(vm_families(10).iter().any(|fam| fam.to_field(&f5).is_err()));
    }
}
