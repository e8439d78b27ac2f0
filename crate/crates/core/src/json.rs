//! JSON encodings of Grassmann elements, supermatrices and tensor operators.
//!
//! ```json
//! {"n": 2, "terms": [{"gens": [], "coeff": "1"}, {"gens": [1, 2], "coeff": "-1/2"}]}
//! {"m": 1, "n": 1, "ring": "grassmann", "grassmann_n": 2, "entries": [[..], [..]]}
//! ```
//!
//! Rationals are strings `"p/q"` or `"p"`. Over the `grassmann` ring an entry may be
//! a rational string (a constant) or a Grassmann object with the matching `n`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grassmann::GrassmannElement;
use crate::matrix::Matrix;
use crate::scalar::{parse_rational, Rational, Scalar};
use crate::supermatrix::{SuperDim, SuperMatrix};
use crate::tensor::TensorOperator;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermWire {
    pub gens: Vec<usize>,
    pub coeff: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GrassmannWire {
    pub n: usize,
    pub terms: Vec<TermWire>,
}

impl From<&GrassmannElement> for GrassmannWire {
    fn from(g: &GrassmannElement) -> Self {
        GrassmannWire {
            n: g.num_generators(),
            terms: g.terms().map(|(gens, c)| TermWire { gens, coeff: c.to_string() }).collect(),
        }
    }
}

impl TryFrom<&GrassmannWire> for GrassmannElement {
    type Error = Error;

    fn try_from(w: &GrassmannWire) -> Result<Self> {
        if w.n > crate::grassmann::MAX_GENERATORS {
            return Err(Error::Parse(format!("n = {} is too large", w.n)));
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut out = GrassmannElement::zero(w.n);
        for t in &w.terms {
            if !seen.insert(t.gens.clone()) {
                return Err(Error::Parse(format!("monomial {:?} listed twice", t.gens)));
            }
            let term = GrassmannElement::monomial(w.n, &t.gens, parse_rational(&t.coeff)?)?;
            out = out.try_add(&term)?;
        }
        Ok(out)
    }
}

impl Serialize for GrassmannElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GrassmannWire::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for GrassmannElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = GrassmannWire::deserialize(d)?;
        GrassmannElement::try_from(&wire).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum EntryWire {
    Rational(String),
    Grassmann(GrassmannWire),
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
pub enum Ring {
    #[serde(rename = "Q")]
    Rational,
    #[serde(rename = "grassmann")]
    Grassmann,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct SuperMatrixWire {
    pub m: usize,
    pub n: usize,
    pub ring: Ring,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grassmann_n: Option<usize>,
    pub entries: Vec<Vec<EntryWire>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TensorOperatorWire {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub ring: Ring,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grassmann_n: Option<usize>,
    pub entries: Vec<Vec<EntryWire>>,
}

/// Scalars with a JSON entry encoding.
pub trait JsonScalar: Scalar {
    const RING: Ring;
    fn grassmann_n(ctx: Self::Ctx) -> Option<usize>;
    fn to_wire(&self) -> EntryWire;
}

impl JsonScalar for Rational {
    const RING: Ring = Ring::Rational;

    fn grassmann_n(_: ()) -> Option<usize> {
        None
    }

    fn to_wire(&self) -> EntryWire {
        EntryWire::Rational(self.to_string())
    }
}

impl JsonScalar for GrassmannElement {
    const RING: Ring = Ring::Grassmann;

    fn grassmann_n(n: usize) -> Option<usize> {
        Some(n)
    }

    fn to_wire(&self) -> EntryWire {
        EntryWire::Grassmann(self.into())
    }
}

fn entries_wire<R: JsonScalar>(m: &Matrix<R>) -> Vec<Vec<EntryWire>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(JsonScalar::to_wire).collect()).collect()
}

/// A parsed supermatrix file, over whichever ring it declared.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyMatrix {
    Rational(SuperMatrix<Rational>),
    Grassmann(SuperMatrix<GrassmannElement>),
}

impl AnyMatrix {
    /// Views a rational matrix as one over `Λ_0`.
    pub fn into_grassmann(self) -> SuperMatrix<GrassmannElement> {
        match self {
            AnyMatrix::Rational(g) => g.lift(0),
            AnyMatrix::Grassmann(g) => g,
        }
    }
}

pub fn supermatrix_to_wire<R: JsonScalar>(g: &SuperMatrix<R>) -> SuperMatrixWire {
    SuperMatrixWire {
        m: g.dim().m(),
        n: g.dim().n(),
        ring: R::RING,
        grassmann_n: R::grassmann_n(g.ctx()),
        entries: entries_wire(g.matrix()),
    }
}

pub fn supermatrix_to_json<R: JsonScalar>(g: &SuperMatrix<R>) -> String {
    serde_json::to_string(&supermatrix_to_wire(g)).expect("serializable")
}

pub fn tensor_operator_to_wire<R: JsonScalar>(op: &TensorOperator<R>) -> TensorOperatorWire {
    TensorOperatorWire {
        m: op.dim().m(),
        n: op.dim().n(),
        r: op.degree(),
        ring: R::RING,
        grassmann_n: R::grassmann_n(op.matrix().ctx()),
        entries: entries_wire(op.matrix()),
    }
}

fn parse_entries(ring: Ring, grassmann_n: Option<usize>, rows: &[Vec<EntryWire>]) -> Result<AnyEntries> {
    match ring {
        Ring::Rational => {
            if grassmann_n.is_some() {
                return Err(Error::Parse("grassmann_n given for ring Q".into()));
            }
            let rows = rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|e| match e {
                            EntryWire::Rational(s) => parse_rational(s),
                            EntryWire::Grassmann(_) => Err(Error::Parse("Grassmann entry in a Q matrix".into())),
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(AnyEntries::Rational(Matrix::from_rows((), rows)?))
        }
        Ring::Grassmann => {
            let n = grassmann_n.ok_or_else(|| Error::Parse("ring grassmann needs grassmann_n".into()))?;
            if n > crate::grassmann::MAX_GENERATORS {
                return Err(Error::Parse(format!("grassmann_n = {n} is too large")));
            }
            let rows = rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|e| match e {
                            EntryWire::Rational(s) => Ok(GrassmannElement::constant(n, parse_rational(s)?)),
                            EntryWire::Grassmann(w) => {
                                if w.n != n {
                                    return Err(Error::Parse(format!("entry in Λ_{} inside a Λ_{n} matrix", w.n)));
                                }
                                GrassmannElement::try_from(w)
                            }
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(AnyEntries::Grassmann(Matrix::from_rows(n, rows)?))
        }
    }
}

enum AnyEntries {
    Rational(Matrix<Rational>),
    Grassmann(Matrix<GrassmannElement>),
}

pub fn supermatrix_from_wire(w: &SuperMatrixWire) -> Result<AnyMatrix> {
    let dim = SuperDim::new(w.m, w.n)?;
    Ok(match parse_entries(w.ring, w.grassmann_n, &w.entries)? {
        AnyEntries::Rational(m) => AnyMatrix::Rational(SuperMatrix::new(dim, m)?),
        AnyEntries::Grassmann(m) => AnyMatrix::Grassmann(SuperMatrix::new(dim, m)?),
    })
}

pub fn supermatrix_from_json(text: &str) -> Result<AnyMatrix> {
    let wire: SuperMatrixWire = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    supermatrix_from_wire(&wire)
}

pub fn grassmann_from_json(text: &str) -> Result<GrassmannElement> {
    let wire: GrassmannWire = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    GrassmannElement::try_from(&wire)
}

pub fn grassmann_to_json(g: &GrassmannElement) -> String {
    serde_json::to_string(&GrassmannWire::from(g)).expect("serializable")
}

/// Decodes a tensor operator over `ℚ`.
pub fn rational_operator_from_wire(w: &TensorOperatorWire) -> Result<TensorOperator<Rational>> {
    let dim = SuperDim::new(w.m, w.n)?;
    match parse_entries(w.ring, w.grassmann_n, &w.entries)? {
        AnyEntries::Rational(m) => TensorOperator::new(dim, w.r, m),
        AnyEntries::Grassmann(_) => Err(Error::Parse("expected a Q operator".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qf};

    #[test]
    fn grassmann_encoding() {
        let g = GrassmannElement::one(2)
            .try_add(&GrassmannElement::monomial(2, &[1, 2], qf(-1, 2)).unwrap())
            .unwrap();
        let text = grassmann_to_json(&g);
        assert_eq!(text, r#"{"n":2,"terms":[{"gens":[],"coeff":"1"},{"gens":[1,2],"coeff":"-1/2"}]}"#);
        assert_eq!(grassmann_from_json(&text).unwrap(), g);
        assert_eq!(grassmann_to_json(&GrassmannElement::zero(3)), r#"{"n":3,"terms":[]}"#);
    }

    #[test]
    fn grassmann_rejects_unsorted_and_duplicates() {
        assert!(grassmann_from_json(r#"{"n":2,"terms":[{"gens":[2,1],"coeff":"1"}]}"#).is_err());
        assert!(grassmann_from_json(r#"{"n":2,"terms":[{"gens":[1,1],"coeff":"1"}]}"#).is_err());
        assert!(grassmann_from_json(r#"{"n":2,"terms":[{"gens":[1],"coeff":"1"},{"gens":[1],"coeff":"2"}]}"#).is_err());
        assert!(grassmann_from_json(r#"{"n":2,"terms":[{"gens":[3],"coeff":"1"}]}"#).is_err());
    }

    #[test]
    fn supermatrix_round_trip() {
        let text = r#"{"m":1,"n":1,"ring":"grassmann","grassmann_n":2,"entries":[["1",{"n":2,"terms":[{"gens":[1],"coeff":"1"}]}],[{"n":2,"terms":[{"gens":[2],"coeff":"1"}]},"1"]]}"#;
        let parsed = supermatrix_from_json(text).unwrap();
        let AnyMatrix::Grassmann(g) = &parsed else { panic!("expected Grassmann") };
        assert_eq!(*g.get(0, 1), GrassmannElement::generator(2, 1).unwrap());
        let again = supermatrix_from_json(&supermatrix_to_json(g)).unwrap();
        assert_eq!(again, parsed);

        let qtext = r#"{"m":2,"n":0,"ring":"Q","entries":[["1","2/4"],["0","3"]]}"#;
        let AnyMatrix::Rational(h) = supermatrix_from_json(qtext).unwrap() else { panic!() };
        assert_eq!(*h.get(0, 1), qf(1, 2));
        assert_eq!(*h.get(1, 1), q(3));
    }

    #[test]
    fn supermatrix_errors() {
        assert!(supermatrix_from_json(r#"{"m":1,"n":1,"ring":"Q","entries":[["1"]]}"#).is_err());
        assert!(supermatrix_from_json(r#"{"m":1,"n":0,"ring":"grassmann","entries":[["1"]]}"#).is_err());
        assert!(supermatrix_from_json(
            r#"{"m":1,"n":0,"ring":"grassmann","grassmann_n":1,"entries":[[{"n":2,"terms":[]}]]}"#
        )
        .is_err());
        assert!(supermatrix_from_json("not json").is_err());
    }

    #[test]
    fn tensor_operator_wire() {
        let dim = SuperDim::new(1, 1).unwrap();
        let op = TensorOperator::<Rational>::identity(dim, 2, ()).unwrap();
        let wire = tensor_operator_to_wire(&op);
        assert_eq!(wire.entries.len(), 4);
        assert_eq!(rational_operator_from_wire(&wire).unwrap(), op);
    }
}
