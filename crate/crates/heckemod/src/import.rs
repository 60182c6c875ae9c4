//! JSON ingestion of Hecke data (full matrices or bare eigenvalues over a
//! quadratic ring) and comparison with the trivial representation.

use crate::space::{Operator, WeightedClassSpace};
use crate::{HeckeError, Result};
use exactnum::quadratic::reduce_mod_in;
use exactnum::{PrimeIdealSpec, QuadraticRingElem};
use serde::{Deserialize, Serialize};

pub const Q5_U3_TABLES: &str = include_str!("../data/q5_u3_tables.json");
pub const EXAMPLES: &str = include_str!("../data/examples.json");
pub const TRIVIAL_DEGREES: &str = include_str!("../data/trivial_degrees.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HeckeDocument {
    pub weights: Vec<u64>,
    pub operators: Vec<OperatorDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<RingDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorDoc {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eigen: Option<Vec<EigenDoc>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EigenDoc {
    pub system: String,
    pub value: QuadraticRingElem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingDoc {
    pub d: i64,
}

/// Eigenvalues of one operator on named systems.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenOperator {
    pub name: String,
    pub degree: Option<i64>,
    pub values: Vec<(String, QuadraticRingElem)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Imported {
    pub space: WeightedClassSpace,
    pub eigendata: Vec<EigenOperator>,
    pub ring_d: Option<i64>,
}

/// Name of the system carried by the constant function.
pub const TRIVIAL_SYSTEM: &str = "1";

pub fn import_hecke_json(text: &str) -> Result<Imported> {
    let doc: HeckeDocument = serde_json::from_str(text).map_err(|e| HeckeError::Schema(e.to_string()))?;
    import_document(&doc)
}

pub fn import_document(doc: &HeckeDocument) -> Result<Imported> {
    let ring_d = doc.ring.map(|r| r.d);
    let mut ops = Vec::new();
    let mut eigendata = Vec::new();
    for op in &doc.operators {
        match (&op.matrix, &op.eigen) {
            (Some(m), None) => ops.push(Operator { name: op.name.clone(), matrix: m.clone(), declared_degree: op.degree }),
            (None, Some(e)) => {
                let mut values = Vec::new();
                for ed in e {
                    ed.value.validate()?;
                    match ring_d {
                        Some(d) if d != ed.value.d => {
                            return Err(HeckeError::Schema(format!("{}: value over √{} in a document over √{d}", op.name, ed.value.d)))
                        }
                        None => return Err(HeckeError::Schema("eigenvalues need a \"ring\"".into())),
                        _ => {}
                    }
                    if values.iter().any(|(s, _): &(String, QuadraticRingElem)| *s == ed.system) {
                        return Err(HeckeError::Schema(format!("{}: system {} repeated", op.name, ed.system)));
                    }
                    values.push((ed.system.clone(), ed.value.clone()));
                }
                if let (Some(deg), Some((_, one))) = (op.degree, values.iter().find(|(s, _)| s == TRIVIAL_SYSTEM)) {
                    if *one != QuadraticRingElem::integer(one.d, deg) {
                        return Err(HeckeError::TrivialRow(op.name.clone(), format!("{one:?} ≠ degree {deg}")));
                    }
                }
                eigendata.push(EigenOperator { name: op.name.clone(), degree: op.degree, values });
            }
            _ => return Err(HeckeError::Schema(format!("operator {} needs exactly one of \"matrix\", \"eigen\"", op.name))),
        }
    }
    let space = WeightedClassSpace { weights: doc.weights.clone(), operators: ops, self_adjoint: false };
    space.validate()?;
    if space.operators.iter().any(|o| o.declared_degree.is_some()) {
        crate::space::degree_check(&space)?;
    }
    Ok(Imported { space, eigendata, ring_d })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PlaceKind {
    Split,
    Inert,
}

/// Operator names "split-q" / "inert-q".
pub fn parse_place(name: &str) -> Result<(PlaceKind, u64)> {
    let (kind, q) = name.split_once('-').ok_or_else(|| HeckeError::Schema(format!("operator name {name:?} is not kind-q")))?;
    let kind = match kind {
        "split" => PlaceKind::Split,
        "inert" => PlaceKind::Inert,
        _ => return Err(HeckeError::Schema(format!("unknown place kind in {name:?}"))),
    };
    let q = q.parse().map_err(|_| HeckeError::Schema(format!("bad prime in {name:?}")))?;
    Ok((kind, q))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupFamily {
    U2,
    U3,
}

impl GroupFamily {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "U2" | "u2" => Ok(GroupFamily::U2),
            "U3" | "u3" => Ok(GroupFamily::U3),
            _ => Err(HeckeError::Schema(format!("unknown group family {s:?}"))),
        }
    }

    /// Coefficients (constant first) of the degree of the basic Hecke
    /// operator at q, i.e. its eigenvalue on 𝟙.
    pub fn degree_poly(&self, kind: PlaceKind) -> &'static [i64] {
        match (self, kind) {
            (GroupFamily::U2, PlaceKind::Split) => &[1, 1],
            (GroupFamily::U2, PlaceKind::Inert) => &[0, 1, 1],
            (GroupFamily::U3, PlaceKind::Split) => &[1, 1, 1],
            (GroupFamily::U3, PlaceKind::Inert) => &[0, 1, 0, 0, 1],
        }
    }

    pub fn trivial_degree(&self, kind: PlaceKind, q: u64) -> i64 {
        self.degree_poly(kind).iter().rev().fold(0i64, |acc, &c| acc * q as i64 + c)
    }
}

/// Checks the 𝟙-row (declared degree and the value on system "1") against
/// the computed degree of every operator.
pub fn validate_trivial_row(data: &[EigenOperator], family: GroupFamily) -> Result<()> {
    for op in data {
        let (kind, q) = parse_place(&op.name)?;
        let t = family.trivial_degree(kind, q);
        if op.degree.is_some_and(|d| d != t) {
            return Err(HeckeError::TrivialRow(op.name.clone(), format!("declared degree {:?}, computed {t}", op.degree)));
        }
        if let Some((_, one)) = op.values.iter().find(|(s, _)| s == TRIVIAL_SYSTEM) {
            if *one != QuadraticRingElem::integer(one.d, t) {
                return Err(HeckeError::TrivialRow(op.name.clone(), format!("value {one:?}, computed {t}")));
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub operator: String,
    pub system: String,
    pub trivial: i64,
    pub value: QuadraticRingElem,
    /// Both residues, formatted in the residue field.
    pub residues: (String, String),
    pub congruent: bool,
}

/// For every operator and every system other than "1": whether its
/// eigenvalue is congruent to the trivial eigenvalue modulo 𝔭.
pub fn compare_with_trivial(data: &[EigenOperator], family: GroupFamily, prime: &PrimeIdealSpec) -> Result<Vec<Comparison>> {
    validate_trivial_row(data, family)?;
    let f = prime.field()?;
    let mut out = Vec::new();
    for op in data {
        let (kind, q) = parse_place(&op.name)?;
        let t = family.trivial_degree(kind, q);
        for (system, value) in op.values.iter().filter(|(s, _)| s != TRIVIAL_SYSTEM) {
            let a = reduce_mod_in(value, prime, &f)?;
            let b = reduce_mod_in(&QuadraticRingElem::integer(value.d, t), prime, &f)?;
            out.push(Comparison {
                operator: op.name.clone(),
                system: system.clone(),
                trivial: t,
                value: value.clone(),
                residues: (f.fmt(&a), f.fmt(&b)),
                congruent: a == b,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees() {
        assert_eq!(GroupFamily::U3.trivial_degree(PlaceKind::Split, 13), 183);
        assert_eq!(GroupFamily::U3.trivial_degree(PlaceKind::Inert, 3), 84);
        assert_eq!(GroupFamily::U2.trivial_degree(PlaceKind::Split, 5), 6);
        assert_eq!(GroupFamily::U2.trivial_degree(PlaceKind::Inert, 5), 30);
    }

    #[test]
    fn schema() {
        assert!(import_hecke_json(r#"{"weights": [1], "operators": []}"#).is_ok());
        assert!(import_hecke_json(r#"{"weights": [1], "operators": [{"name": "T"}]}"#).is_err());
        assert!(import_hecke_json(r#"{"weights": [1], "operators": [], "extra": 1}"#).is_err());
        let bad = r#"{"weights": [1, 1], "operators": [
            {"name": "A", "matrix": [[0, 1], [0, 0]]}, {"name": "B", "matrix": [[0, 0], [1, 0]]}]}"#;
        assert!(matches!(import_hecke_json(bad), Err(HeckeError::NonCommuting(..))));
    }
}
