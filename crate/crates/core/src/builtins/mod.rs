//! Named constructions with their known verdicts.

mod algebras;

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

pub use algebras::{
    abelian, age1, bm_algebra, borel, borel_in_sl2, bvm_module, dim3_family, galilei, heisenberg,
    qplane_exponents, qplane_product, sl2, truncated_current, truncated_quantum_plane, vm_module,
};

use crate::error::{Error, Result};
use crate::exactla::{parse_rational, Field, Rationals};
use crate::liealg::LieAlgebra;
use crate::repmod::LieModule;

/// A parsed builtin reference such as `galilei:3` or `current:sl2:2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuiltinRef {
    Heisenberg(usize),
    Sl2,
    Borel,
    Abelian(usize),
    Vm(usize),
    /// `V(m)` restricted to the Borel subalgebra.
    Bvm(usize),
    Galilei(usize),
    Bm(usize),
    Age1,
    Dim3 { case: u8, params: Vec<BigRational> },
    Current(Box<BuiltinRef>, usize),
    Qplane(BigRational, usize),
}

/// What a reference builds.
#[derive(Clone, Debug)]
pub enum Built {
    Algebra(LieAlgebra<Rationals>),
    Module(LieModule<Rationals>),
}

fn num(s: &str, whole: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::UnknownBuiltin(format!("{whole} (bad parameter `{s}`)")))
}

impl FromStr for BuiltinRef {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let unknown = || Error::UnknownBuiltin(s.to_string());
        let (head, rest) = match s.split_once(':') {
            Some((h, r)) => (h, Some(r)),
            None => (s, None),
        };
        let arg = || rest.ok_or_else(unknown);
        Ok(match head {
            "sl2" if rest.is_none() => BuiltinRef::Sl2,
            "borel" | "b" if rest.is_none() => BuiltinRef::Borel,
            "age1" if rest.is_none() => BuiltinRef::Age1,
            "heisenberg" => BuiltinRef::Heisenberg(num(arg()?, s)?),
            "abelian" => BuiltinRef::Abelian(num(arg()?, s)?),
            "vm" => BuiltinRef::Vm(num(arg()?, s)?),
            "bvm" => BuiltinRef::Bvm(num(arg()?, s)?),
            "galilei" => BuiltinRef::Galilei(num(arg()?, s)?),
            "bm" => BuiltinRef::Bm(num(arg()?, s)?),
            "dim3" => {
                let a = arg()?;
                let (case, params) = match a.split_once(':') {
                    Some((c, p)) => (c, Some(p)),
                    None => (a, None),
                };
                let case = num(case, s)? as u8;
                let params = match params {
                    Some(p) if !p.is_empty() => p
                        .split(',')
                        .map(parse_rational)
                        .collect::<Result<Vec<_>>>()?,
                    _ => Vec::new(),
                };
                BuiltinRef::Dim3 { case, params }
            }
            "current" => {
                let (inner, n) = arg()?.rsplit_once(':').ok_or_else(unknown)?;
                BuiltinRef::Current(Box::new(inner.parse()?), num(n, s)?)
            }
            "qplane" => {
                let (q, n) = arg()?.rsplit_once(':').ok_or_else(unknown)?;
                BuiltinRef::Qplane(parse_rational(q)?, num(n, s)?)
            }
            _ => return Err(unknown()),
        })
    }
}

impl fmt::Display for BuiltinRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = |x: &BigRational| Rationals.format(x);
        match self {
            BuiltinRef::Heisenberg(k) => write!(f, "heisenberg:{k}"),
            BuiltinRef::Sl2 => write!(f, "sl2"),
            BuiltinRef::Borel => write!(f, "borel"),
            BuiltinRef::Abelian(n) => write!(f, "abelian:{n}"),
            BuiltinRef::Vm(m) => write!(f, "vm:{m}"),
            BuiltinRef::Bvm(m) => write!(f, "bvm:{m}"),
            BuiltinRef::Galilei(m) => write!(f, "galilei:{m}"),
            BuiltinRef::Bm(m) => write!(f, "bm:{m}"),
            BuiltinRef::Age1 => write!(f, "age1"),
            BuiltinRef::Dim3 { case, params } if params.is_empty() => write!(f, "dim3:{case}"),
            BuiltinRef::Dim3 { case, params } => {
                let p: Vec<String> = params.iter().map(q).collect();
                write!(f, "dim3:{case}:{}", p.join(","))
            }
            BuiltinRef::Current(inner, n) => write!(f, "current:{inner}:{n}"),
            BuiltinRef::Qplane(x, n) => write!(f, "qplane:{}:{n}", q(x)),
        }
    }
}

impl BuiltinRef {
    pub fn is_module(&self) -> bool {
        matches!(self, BuiltinRef::Vm(_) | BuiltinRef::Bvm(_))
    }

    pub fn build(&self) -> Result<Built> {
        Ok(match self {
            BuiltinRef::Vm(m) => Built::Module(vm_module(*m)),
            BuiltinRef::Bvm(m) => Built::Module(bvm_module(*m)),
            _ => Built::Algebra(self.algebra()?),
        })
    }

    /// The Lie algebra this reference names; for modules, the parent algebra.
    pub fn algebra(&self) -> Result<LieAlgebra<Rationals>> {
        Ok(match self {
            BuiltinRef::Heisenberg(k) => heisenberg(*k)?,
            BuiltinRef::Sl2 | BuiltinRef::Vm(_) => sl2(),
            BuiltinRef::Borel | BuiltinRef::Bvm(_) => borel(),
            BuiltinRef::Abelian(n) => abelian(*n),
            BuiltinRef::Galilei(m) => galilei(*m),
            BuiltinRef::Bm(m) => bm_algebra(*m),
            BuiltinRef::Age1 => age1(),
            BuiltinRef::Dim3 { case, params } => dim3_family(*case, params)?,
            BuiltinRef::Current(inner, n) => {
                if inner.is_module() {
                    return Err(Error::Input(format!("current algebra of a module `{inner}`")));
                }
                truncated_current(&inner.algebra()?, *n)?
            }
            BuiltinRef::Qplane(q, n) => truncated_quantum_plane(q, *n)?,
        })
    }

    /// Rejects references that have no meaning over fields of the given characteristic.
    pub fn check_characteristic(&self, p: u64) -> Result<()> {
        match self {
            BuiltinRef::Qplane(..) if p != 0 => Err(Error::Input(
                "every nonzero element of a finite field is a root of unity; qplane needs Q".into(),
            )),
            BuiltinRef::Current(inner, _) => inner.check_characteristic(p),
            _ => Ok(()),
        }
    }

    /// Known verdict (zpd for algebras, zad for modules), when one is established.
    pub fn expected(&self) -> Option<bool> {
        match self {
            BuiltinRef::Heisenberg(_) | BuiltinRef::Sl2 | BuiltinRef::Borel => Some(true),
            BuiltinRef::Abelian(_) | BuiltinRef::Dim3 { .. } => Some(true),
            BuiltinRef::Vm(m) | BuiltinRef::Galilei(m) => Some(*m == 1 || m % 2 == 0),
            BuiltinRef::Bvm(m) | BuiltinRef::Bm(m) if *m >= 1 => Some(*m == 2),
            BuiltinRef::Age1 => Some(false),
            BuiltinRef::Current(inner, _) if inner.expected() == Some(true) => Some(true),
            _ => None,
        }
    }
}

/// `(pattern, description)` for every reference form.
pub fn catalogue() -> Vec<(&'static str, &'static str)> {
    vec![
        ("heisenberg:k", "Heisenberg algebra, dim 2k+1, basis (c, x1..xk, x-1..x-k)"),
        ("sl2", "sl2 on basis (E, H, F)"),
        ("borel", "Borel subalgebra span{E, H} of sl2"),
        ("abelian:n", "n-dimensional abelian algebra"),
        ("vm:m", "simple sl2-module V(m) of dim m+1"),
        ("bvm:m", "V(m) restricted to the Borel subalgebra"),
        ("galilei:m", "sl2 ⋉ V(m), dim m+4"),
        ("bm:m", "borel ⋉ V(m), dim m+3"),
        ("age1", "aging algebra on basis (H, E, u, v)"),
        ("dim3:case[:params]", "3-dimensional normal forms: 1[:α,β], 2:a,b, 3:a,b,c"),
        ("current:<ref>:N", "current algebra <ref> ⊗ F[t]/(t^N)"),
        ("qplane:q:N", "quantum-plane Lie algebra truncated at total degree N (Q only)"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        for s in [
            "heisenberg:2",
            "sl2",
            "borel",
            "abelian:3",
            "vm:3",
            "bvm:4",
            "galilei:5",
            "bm:1",
            "age1",
            "dim3:1",
            "dim3:2:-1,2",
            "dim3:3:1,0,1/2",
            "current:sl2:3",
            "current:heisenberg:1:2",
            "current:current:borel:2:2",
            "qplane:2:3",
            "qplane:-1/3:2",
        ] {
            let r: BuiltinRef = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        for bad in ["sl3", "heisenberg", "vm:x", "current:sl2", "sl2:1", "qplane:2"] {
            assert!(bad.parse::<BuiltinRef>().is_err(), "{bad}");
        }
    }

    #[test]
    fn every_catalogue_instance_builds() {
        for s in [
            "heisenberg:3", "sl2", "borel", "abelian:2", "vm:4", "bvm:3", "galilei:2", "bm:2",
            "age1", "dim3:2:1,1", "current:borel:3", "qplane:2:2",
        ] {
            let r: BuiltinRef = s.parse().unwrap();
            match r.build().unwrap() {
                Built::Algebra(a) => assert!(a.validate().is_valid()),
                Built::Module(m) => assert!(m.validate().is_valid()),
            }
        }
        assert!("current:vm:2:2".parse::<BuiltinRef>().unwrap().build().is_err());
    }

    #[test]
    fn expected_verdicts() {
        let e = |s: &str| s.parse::<BuiltinRef>().unwrap().expected();
        assert_eq!(e("galilei:3"), Some(false));
        assert_eq!(e("galilei:4"), Some(true));
        assert_eq!(e("vm:5"), Some(false));
        assert_eq!(e("bm:2"), Some(true));
        assert_eq!(e("bm:4"), Some(false));
        assert_eq!(e("age1"), Some(false));
        assert_eq!(e("current:sl2:2"), Some(true));
        assert_eq!(e("qplane:2:2"), None);
    }
}
