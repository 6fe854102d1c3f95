//! JSON documents: algebras, elements and decomposition certificates.
//!
//! Every scalar is a string (`"3/4"`, `"-2"`); matrices are arrays of rows.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::abstract_jcd::{AbstractJordanPair, VerificationReport};
use crate::error::{ensure_len, Error, Result};
use crate::levi::LeviDecomposition;
use crate::lie::LieAlgebra;
use crate::linalg::{QMatrix, Rational, Subspace, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase", deny_unknown_fields)]
pub enum AlgebraDocument {
    Matrix {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        description: Option<String>,
        n: usize,
        basis: Vec<QMatrix>,
    },
    Structure {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        description: Option<String>,
        dim: usize,
        /// `(i, j, coords)` with `i < j`.
        brackets: Vec<(usize, usize, Vector)>,
    },
}

impl AlgebraDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("algebra document: {e}")))
    }

    pub fn name(&self) -> Option<&str> {
        match self {
            AlgebraDocument::Matrix { name, .. } | AlgebraDocument::Structure { name, .. } => name.as_deref(),
        }
    }

    fn check_matrices(n: usize, basis: &[QMatrix]) -> Result<()> {
        for m in basis {
            if m.rows() != n || m.cols() != n {
                return Err(Error::Invalid(format!(
                    "basis matrix is {}x{}, expected {n}x{n}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(())
    }

    /// Builds the algebra, refusing bases that are not bracket-closed.
    pub fn to_algebra(&self) -> Result<LieAlgebra> {
        match self {
            AlgebraDocument::Matrix { n, basis, .. } => {
                Self::check_matrices(*n, basis)?;
                if basis.is_empty() {
                    return LieAlgebra::from_structure_constants(0, &[]);
                }
                LieAlgebra::from_matrices(basis)
            }
            AlgebraDocument::Structure { dim, brackets, .. } => {
                if let Some((i, j, _)) = brackets.iter().find(|(i, j, _)| i >= j) {
                    return Err(Error::Invalid(format!("bracket ({i}, {j}) must have i < j")));
                }
                LieAlgebra::from_structure_constants(*dim, brackets)
            }
        }
    }

    /// Replaces a matrix basis by its Lie closure; structure documents are unchanged.
    pub fn closed(&self) -> Result<Self> {
        match self {
            AlgebraDocument::Matrix {
                name,
                description,
                n,
                basis,
            } => {
                Self::check_matrices(*n, basis)?;
                Ok(AlgebraDocument::Matrix {
                    name: name.clone(),
                    description: description.clone(),
                    n: *n,
                    basis: LieAlgebra::lie_closure(basis)?,
                })
            }
            AlgebraDocument::Structure { .. } => Ok(self.clone()),
        }
    }

    pub fn from_algebra(g: &LieAlgebra) -> Self {
        match (g.realization(), g.matrix_size()) {
            (Some(basis), Some(n)) => AlgebraDocument::Matrix {
                name: None,
                description: None,
                n,
                basis: basis.to_vec(),
            },
            _ => AlgebraDocument::Structure {
                name: None,
                description: None,
                dim: g.dim(),
                brackets: g.structure_constants(),
            },
        }
    }
}

/// An element given as coordinates or, for matrix-mode algebras, as a matrix.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum ElementDocument {
    Coordinates(Vector),
    Tagged(TaggedElement),
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum TaggedElement {
    Coords(Vector),
    Matrix(QMatrix),
}

impl ElementDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("element document: {e}")))
    }

    pub fn coordinates(&self, g: &LieAlgebra) -> Result<Vector> {
        match self {
            ElementDocument::Coordinates(v) | ElementDocument::Tagged(TaggedElement::Coords(v)) => {
                ensure_len(g.dim(), v.len())?;
                Ok(v.clone())
            }
            ElementDocument::Tagged(TaggedElement::Matrix(m)) => g
                .coordinates_of_matrix(m)?
                .ok_or_else(|| Error::Invalid("matrix is not in the span of the algebra basis".into())),
        }
    }
}

/// The parts of a certificate needed to re-verify it.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct CertificateInput {
    pub x: Vector,
    #[serde(rename = "S")]
    pub semisimple: Vector,
    #[serde(rename = "N")]
    pub nilpotent: Vector,
    #[serde(default)]
    pub reps: Vec<String>,
}

impl CertificateInput {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("certificate: {e}")))
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

pub fn basis_json(s: &Subspace) -> Value {
    to_value(&s.basis())
}

pub fn report_json(report: &VerificationReport) -> Value {
    let mut v = to_value(report);
    v["all_passed"] = Value::Bool(report.all_passed());
    v
}

/// Decomposition certificate. Matrix-mode algebras also carry the
/// realizations of `x`, `S` and `N`.
pub fn certificate_json(
    g: &LieAlgebra,
    pair: &AbstractJordanPair,
    report: &VerificationReport,
    reps: &[String],
    emit_internals: bool,
) -> Result<Value> {
    let int = &pair.internals;
    let mut doc = json!({
        "x": pair.element,
        "S": pair.semisimple,
        "N": pair.nilpotent,
        "a": int.a,
        "r": int.r,
        "s": int.s,
        "n": int.n,
        "b": int.b,
        "correction": int.correction,
        "n0_dim": int.n0.dim(),
        "nstar_dim": int.nstar.dim(),
        "reps": reps,
        "checks": report_json(report),
    });
    if g.is_matrix_mode() {
        doc["realization"] = json!({
            "x": g.realize(&pair.element)?,
            "S": g.realize(&pair.semisimple)?,
            "N": g.realize(&pair.nilpotent)?,
        });
    }
    if emit_internals {
        doc["internals"] = json!({
            "n0": basis_json(&int.n0),
            "nstar": basis_json(&int.nstar),
            "nilpotent_ideal": basis_json(&int.nilpotent_ideal),
            "conjugators": int.conjugators,
        });
    }
    Ok(doc)
}

pub fn levi_json(ld: &LeviDecomposition<'_>) -> Value {
    json!({
        "levi": basis_json(ld.levi()),
        "levi_lift": ld.levi_lift(),
        "radical": basis_json(ld.radical().subspace()),
        "nilpotent_ideal": basis_json(ld.nilpotent_ideal().subspace()),
        "derived": basis_json(ld.derived().subspace()),
    })
}

pub fn radical_json(g: &LieAlgebra) -> Value {
    json!({
        "radical": basis_json(g.solvable_radical().subspace()),
        "derived": basis_json(g.derived_algebra().subspace()),
        "center": basis_json(g.center().subspace()),
        "solvable": g.is_solvable(),
    })
}

/// Parses a bare matrix document.
pub fn parse_matrix(text: &str) -> Result<QMatrix> {
    serde_json::from_str(text).map_err(|e| Error::Invalid(format!("matrix document: {e}")))
}

pub fn rational_strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(Rational::to_string).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::vector;

    #[test]
    fn algebra_documents_round_trip() {
        let text =
            r#"{"mode":"matrix","n":2,"basis":[[["0","1"],["0","0"]],[["1","0"],["0","-1"]],[["0","0"],["1","0"]]]}"#;
        let doc = AlgebraDocument::parse(text).unwrap();
        let g = doc.to_algebra().unwrap();
        assert_eq!(g.dim(), 3);
        assert_eq!(AlgebraDocument::from_algebra(&g), doc);

        let text = r#"{"mode":"structure","dim":3,"brackets":[[0,1,["0","0","1"]]]}"#;
        let doc = AlgebraDocument::parse(text).unwrap();
        let g = doc.to_algebra().unwrap();
        assert_eq!(
            g.bracket(&vector(&[0, 1, 0]), &vector(&[1, 0, 0])).unwrap(),
            vector(&[0, 0, -1])
        );
        assert_eq!(AlgebraDocument::from_algebra(&g), doc);
    }

    #[test]
    fn bad_documents_are_rejected() {
        assert!(matches!(
            AlgebraDocument::parse(r#"{"mode":"matrix","n":2}"#),
            Err(Error::Invalid(_))
        ));
        assert!(matches!(
            AlgebraDocument::parse(r#"{"mode":"matrix","n":1,"basis":[[["0.5"]]]}"#),
            Err(Error::Invalid(_))
        ));
        let doc = AlgebraDocument::parse(r#"{"mode":"structure","dim":2,"brackets":[[1,0,["1","0"]]]}"#).unwrap();
        assert!(matches!(doc.to_algebra(), Err(Error::Invalid(_))));
        let doc =
            AlgebraDocument::parse(r#"{"mode":"matrix","n":2,"basis":[[["0","1"],["0","0"]],[["0","0"],["1","0"]]]}"#)
                .unwrap();
        assert_eq!(doc.to_algebra().unwrap_err(), Error::NotClosed { i: 0, j: 1 });
        let closed = doc.closed().unwrap();
        assert_eq!(closed.to_algebra().unwrap().dim(), 3);
    }

    #[test]
    fn element_forms() {
        let g = crate::fixtures::sl2();
        for text in [
            r#"["1","0","0"]"#,
            r#"[1, 0, 0]"#,
            r#"{"coords":["1","0","0"]}"#,
            r#"{"matrix":[["0","1"],["0","0"]]}"#,
        ] {
            let e = ElementDocument::parse(text).unwrap();
            assert_eq!(e.coordinates(&g).unwrap(), vector(&[1, 0, 0]), "{text}");
        }
        let e = ElementDocument::parse(r#"{"matrix":[["1","0"],["0","0"]]}"#).unwrap();
        assert!(matches!(e.coordinates(&g), Err(Error::Invalid(_))));
        let e = ElementDocument::parse(r#"["1"]"#).unwrap();
        assert!(matches!(e.coordinates(&g), Err(Error::DimensionMismatch { .. })));
    }
}
