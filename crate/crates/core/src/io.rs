//! JSON documents for algebras, commutative algebras and modules.
//!
//! Scalars are strings (`"3"`, `"-1/2"`, or a residue for GF(p)); the field is
//! declared once per document.

use std::collections::BTreeMap;

use serde::{de, Deserialize, Deserializer, Serialize};
use serde_json::Value;

use crate::builtins::{Built, BuiltinRef};
use crate::error::{Error, Result};
use crate::exactla::{parse_rational, vector, Field, FieldTag, Matrix, PrimeField, Rationals};
use crate::liealg::{CommAlgebra, LieAlgebra};
use crate::repmod::LieModule;

/// `[e_i, e_j] = Σ coeffs[k] e_k` (or `a_i a_j` for commutative algebras).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductDoc {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<usize, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub field: FieldTag,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    /// Omitted pairs bracket to zero.
    #[serde(default)]
    pub brackets: Vec<ProductDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CommAlgebraDoc {
    pub field: FieldTag,
    pub dim: usize,
    pub unit: usize,
    #[serde(default)]
    pub products: Vec<ProductDoc>,
}

/// Either a builtin reference such as `"sl2"` or an inline algebra document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum AlgebraSource {
    Builtin(String),
    Doc(AlgebraDoc),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDoc {
    pub algebra: AlgebraSource,
    pub dim: usize,
    /// One `dim × dim` matrix (list of rows) per basis vector of the algebra.
    pub action: Vec<Vec<Vec<String>>>,
}

fn sparse<F: Field>(f: &F, v: &[F::Elem]) -> BTreeMap<usize, String> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !f.is_zero(c))
        .map(|(k, c)| (k, f.format(c)))
        .collect()
}

/// Reads scalars declared over `from` into `f`: identical fields parse directly,
/// rational data is reduced modulo the characteristic.
fn scalar_reader<F: Field>(from: FieldTag, f: &F) -> Result<impl Fn(&str) -> Result<F::Elem> + '_> {
    if from != f.tag() && from != FieldTag::Q {
        return Err(Error::FieldMismatch(from, f.tag()));
    }
    let direct = from == f.tag();
    Ok(move |s: &str| {
        if direct {
            f.parse(s)
        } else {
            f.from_rational(&parse_rational(s)?)
        }
    })
}

type Sparse<E> = Vec<(usize, usize, Vec<(usize, E)>)>;

fn parse_products<E>(docs: &[ProductDoc], read: impl Fn(&str) -> Result<E>) -> Result<Sparse<E>> {
    docs.iter()
        .map(|b| {
            let coeffs = b
                .coeffs
                .iter()
                .map(|(k, s)| Ok((*k, read(s)?)))
                .collect::<Result<Vec<_>>>()?;
            Ok((b.i, b.j, coeffs))
        })
        .collect()
}

impl AlgebraDoc {
    pub fn from_algebra<F: Field>(l: &LieAlgebra<F>) -> Self {
        let f = l.field();
        let brackets = l
            .wedge_index()
            .pairs()
            .iter()
            .zip(l.structure_table())
            .filter(|(_, v)| !vector::is_zero(f, v))
            .map(|(&(i, j), v)| ProductDoc { i, j, coeffs: sparse(f, v) })
            .collect();
        AlgebraDoc {
            field: f.tag(),
            dim: l.dim(),
            names: Some(l.names().to_vec()),
            brackets,
        }
    }

    /// Builds the algebra in `f`; rational documents are reduced when `f` is GF(p).
    pub fn build<F: Field>(&self, f: &F) -> Result<LieAlgebra<F>> {
        let read = scalar_reader(self.field, f)?;
        LieAlgebra::new(f, self.dim, self.names.clone(), parse_products(&self.brackets, read)?)
    }
}

impl CommAlgebraDoc {
    pub fn from_algebra<F: Field>(a: &CommAlgebra<F>) -> Self {
        let f = a.field();
        let mut products = Vec::new();
        for i in 0..a.dim() {
            for j in i..a.dim() {
                let v = a.basis_product(i, j);
                if !vector::is_zero(f, v) {
                    products.push(ProductDoc { i, j, coeffs: sparse(f, v) });
                }
            }
        }
        CommAlgebraDoc { field: f.tag(), dim: a.dim(), unit: a.unit(), products }
    }

    pub fn build<F: Field>(&self, f: &F) -> Result<CommAlgebra<F>> {
        let read = scalar_reader(self.field, f)?;
        CommAlgebra::new(f, self.dim, self.unit, parse_products(&self.products, read)?)
    }
}

impl AlgebraSource {
    /// The declared field; builtins are rational.
    pub fn field(&self) -> FieldTag {
        match self {
            AlgebraSource::Builtin(_) => FieldTag::Q,
            AlgebraSource::Doc(d) => d.field,
        }
    }

    pub fn build<F: Field>(&self, f: &F) -> Result<LieAlgebra<F>> {
        match self {
            AlgebraSource::Builtin(s) => {
                let r: BuiltinRef = s.parse()?;
                r.check_characteristic(f.characteristic())?;
                AlgebraDoc::from_algebra(&r.algebra()?).build(f)
            }
            AlgebraSource::Doc(d) => d.build(f),
        }
    }
}

impl ModuleDoc {
    pub fn from_module<F: Field>(m: &LieModule<F>) -> Self {
        let f = m.field();
        ModuleDoc {
            algebra: AlgebraSource::Doc(AlgebraDoc::from_algebra(m.parent())),
            dim: m.dim(),
            action: m
                .rho()
                .iter()
                .map(|r| r.row_vecs().iter().map(|row| vector::format(f, row)).collect())
                .collect(),
        }
    }

    pub fn field(&self) -> FieldTag {
        self.algebra.field()
    }

    pub fn build<F: Field>(&self, f: &F) -> Result<LieModule<F>> {
        let read = scalar_reader(self.field(), f)?;
        let parent = self.algebra.build(f)?;
        let rho = self
            .action
            .iter()
            .map(|rows| {
                let rows = rows
                    .iter()
                    .map(|row| row.iter().map(|s| read(s)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                Matrix::from_rows(f, self.dim, rows)
            })
            .collect::<Result<Vec<_>>>()?;
        LieModule::new(parent, self.dim, rho)
    }
}

// Untagged derives buffer the input and then reject integer map keys, so both
// sums dispatch on the JSON shape by hand.
impl<'de> Deserialize<'de> for AlgebraSource {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        match v {
            Value::String(s) => Ok(AlgebraSource::Builtin(s)),
            other => AlgebraDoc::deserialize(other).map(AlgebraSource::Doc).map_err(de::Error::custom),
        }
    }
}

impl<'de> Deserialize<'de> for InputDoc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        let res = if v.get("algebra").is_some() {
            ModuleDoc::deserialize(v).map(InputDoc::Module)
        } else {
            AlgebraDoc::deserialize(v).map(InputDoc::Algebra)
        };
        res.map_err(de::Error::custom)
    }
}

/// A ground field chosen at run time.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnyField {
    Q(Rationals),
    Gf(PrimeField),
}

impl AnyField {
    pub fn new(tag: FieldTag) -> Result<Self> {
        Ok(match tag {
            FieldTag::Q => AnyField::Q(Rationals),
            FieldTag::Gf(p) => AnyField::Gf(PrimeField::new(p)?),
        })
    }

    pub fn tag(&self) -> FieldTag {
        match self {
            AnyField::Q(f) => f.tag(),
            AnyField::Gf(f) => f.tag(),
        }
    }
}

/// Either an algebra or a module document, as accepted on the command line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum InputDoc {
    Module(ModuleDoc),
    Algebra(AlgebraDoc),
}

impl InputDoc {
    pub fn field(&self) -> FieldTag {
        match self {
            InputDoc::Module(m) => m.field(),
            InputDoc::Algebra(a) => a.field,
        }
    }
}

impl Built {
    /// The document form of a builtin.
    pub fn to_doc(&self) -> InputDoc {
        match self {
            Built::Algebra(a) => InputDoc::Algebra(AlgebraDoc::from_algebra(a)),
            Built::Module(m) => InputDoc::Module(ModuleDoc::from_module(m)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;

    #[test]
    fn algebra_round_trip() {
        for l in [builtins::sl2(), builtins::age1(), builtins::galilei(2)] {
            let doc = AlgebraDoc::from_algebra(&l);
            let json = serde_json::to_string(&doc).unwrap();
            let back: AlgebraDoc = serde_json::from_str(&json).unwrap();
            assert_eq!(back.build(&Rationals).unwrap(), l);
        }
    }

    #[test]
    fn spec_shaped_document() {
        let json = r#"{"field":"Q","dim":3,"names":["E","H","F"],
            "brackets":[{"i":1,"j":0,"coeffs":{"0":"2"}},{"i":1,"j":2,"coeffs":{"2":"-2"}},{"i":0,"j":2,"coeffs":{"1":"1"}}]}"#;
        let doc: AlgebraDoc = serde_json::from_str(json).unwrap();
        assert_eq!(doc.build(&Rationals).unwrap(), builtins::sl2());
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(doc.build(&f5).unwrap(), builtins::sl2().to_field(&f5).unwrap());
    }

    #[test]
    fn field_mismatch_and_bad_jacobi() {
        let f5 = PrimeField::new(5).unwrap();
        let doc = AlgebraDoc::from_algebra(&builtins::sl2().to_field(&f5).unwrap());
        assert!(matches!(doc.build(&Rationals), Err(Error::FieldMismatch(..))));
        assert!(matches!(doc.build(&PrimeField::new(7).unwrap()), Err(Error::FieldMismatch(..))));
        let bad = r#"{"field":"Q","dim":3,"brackets":[{"i":0,"j":1,"coeffs":{"1":"1"}},{"i":0,"j":2,"coeffs":{"2":"1"}},{"i":1,"j":2,"coeffs":{"0":"1"}}]}"#;
        let doc: AlgebraDoc = serde_json::from_str(bad).unwrap();
        assert!(matches!(doc.build(&Rationals), Err(Error::InvalidAlgebra { .. })));
    }

    #[test]
    fn module_documents() {
        let v2 = builtins::vm_module(2);
        let doc = ModuleDoc::from_module(&v2);
        let json = serde_json::to_string(&doc).unwrap();
        let back: ModuleDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(back.build(&Rationals).unwrap(), v2);

        let by_ref = r#"{"algebra":"sl2","dim":2,"action":[[["0","1"],["0","0"]],[["1","0"],["0","-1"]],[["0","0"],["1","0"]]]}"#;
        let m: ModuleDoc = serde_json::from_str(by_ref).unwrap();
        assert_eq!(m.build(&Rationals).unwrap(), builtins::vm_module(1));
        let input: InputDoc = serde_json::from_str(by_ref).unwrap();
        assert!(matches!(input, InputDoc::Module(_)));
    }

    #[test]
    fn comm_algebra_documents() {
        let a = CommAlgebra::truncated_poly(&Rationals, 3).unwrap();
        let doc = CommAlgebraDoc::from_algebra(&a);
        assert_eq!(doc.build(&Rationals).unwrap(), a);
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(doc.build(&f3).unwrap(), CommAlgebra::truncated_poly(&f3, 3).unwrap());
    }
}
