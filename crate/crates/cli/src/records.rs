//! Machine-readable output records.
//!
//! Every count is an exact decimal JSON number of unbounded size. Betti
//! diagrams are `[i, j, entry]` triples sorted by `(j, i)`, where an entry is
//! a number, `"+"` (nonzero) or `"?"` (undetermined).

use std::str::FromStr;

use hyperell::{BettiDiagram, BettiEntry, CohomologyPair, DivisorClass};
use num_bigint::BigUint;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{Number, Value};

/// An exact nonnegative integer, written as a bare JSON number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Count(pub BigUint);

impl From<BigUint> for Count {
    fn from(n: BigUint) -> Self {
        Count(n)
    }
}

impl Serialize for Count {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let n = Number::from_str(&self.0.to_string()).map_err(serde::ser::Error::custom)?;
        n.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Count {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let n = Number::deserialize(d)?;
        BigUint::from_str(&n.to_string())
            .map(Count)
            .map_err(|_| D::Error::custom(format!("expected a nonnegative integer, got {n}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    Known(Count),
    Positive,
    Unknown,
}

impl From<&BettiEntry> for Cell {
    fn from(e: &BettiEntry) -> Self {
        match e {
            BettiEntry::Known(n) => Cell::Known(Count(n.clone())),
            BettiEntry::Positive => Cell::Positive,
            BettiEntry::Unknown => Cell::Unknown,
        }
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Cell::Known(n) => n.serialize(s),
            Cell::Positive => s.serialize_str("+"),
            Cell::Unknown => s.serialize_str("?"),
        }
    }
}

impl<'de> Deserialize<'de> for Cell {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match Value::deserialize(d)? {
            Value::String(s) if s == "+" => Ok(Cell::Positive),
            Value::String(s) if s == "?" => Ok(Cell::Unknown),
            Value::Number(n) => BigUint::from_str(&n.to_string())
                .map(|v| Cell::Known(Count(v)))
                .map_err(|_| D::Error::custom(format!("bad Betti number {n}"))),
            other => Err(D::Error::custom(format!("bad Betti entry {other}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramRecord {
    pub r: i64,
    pub entries: Vec<(i64, i64, Cell)>,
}

impl From<&BettiDiagram> for DiagramRecord {
    fn from(d: &BettiDiagram) -> Self {
        DiagramRecord {
            r: d.r(),
            entries: d.iter().map(|(i, j, e)| (i, j, Cell::from(e))).collect(),
        }
    }
}

impl DiagramRecord {
    pub fn to_diagram(&self) -> BettiDiagram {
        let mut d = BettiDiagram::new(self.r);
        for (i, j, cell) in &self.entries {
            let entry = match cell {
                Cell::Known(n) => BettiEntry::Known(n.0.clone()),
                Cell::Positive => BettiEntry::Positive,
                Cell::Unknown => BettiEntry::Unknown,
            };
            d.set(*i, *j, entry);
        }
        d
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyRecord {
    pub h0: Count,
    pub h1: Count,
}

impl From<CohomologyPair> for CohomologyRecord {
    fn from(p: CohomologyPair) -> Self {
        CohomologyRecord {
            h0: Count(p.h0),
            h1: Count(p.h1),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub a: i64,
    pub c: i64,
}

impl From<DivisorClass> for ClassRecord {
    fn from(d: DivisorClass) -> Self {
        ClassRecord { a: d.a, c: d.c }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScrollRecord {
    pub e: i64,
    pub curve_class: ClassRecord,
    pub hyperplane_class: ClassRecord,
    pub g: i64,
    pub b: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmplenessRecord {
    pub tag: String,
    pub case: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismRecord {
    pub tag: String,
    pub degree: Option<i64>,
    pub points_collapsed: Option<i64>,
    pub target_dim: Option<i64>,
    pub fold: Option<i64>,
    pub birational: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyRecord {
    pub command: String,
    pub g: i64,
    pub m: i64,
    pub b: i64,
    pub d: i64,
    pub riemann_roch: CohomologyRecord,
    pub nonspecial: bool,
    pub canonical: bool,
    pub ampleness: AmplenessRecord,
    pub morphism: Option<MorphismRecord>,
    pub scroll: ScrollRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NpRecord {
    pub nu: Option<i64>,
    pub p_holds: Option<i64>,
    pub p_fails: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiRecord {
    pub command: String,
    pub g: i64,
    pub m: i64,
    pub b: i64,
    pub d: i64,
    pub regime: String,
    pub nu: Option<i64>,
    pub tau: Option<i64>,
    pub p: i64,
    pub diagram: DiagramRecord,
    pub property: NpRecord,
    pub hilbert_numerator_check: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RaoRecord {
    pub command: String,
    pub g: i64,
    pub m: i64,
    pub b: i64,
    pub d: i64,
    pub nu: i64,
    pub tau: i64,
    pub p: i64,
    pub regularity: i64,
    pub gamma: Vec<(i64, Count)>,
    pub oracle_agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeRecord {
    pub m: i64,
    pub b: i64,
    pub nu: Option<i64>,
    pub tau: Option<i64>,
    pub p: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateRecord {
    pub command: String,
    pub g: i64,
    pub d: i64,
    pub types: Vec<TypeRecord>,
    pub count_distinct_betti: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRowRecord {
    pub d: i64,
    pub m: i64,
    pub b: i64,
    pub nu: i64,
    pub p: i64,
    pub tau: i64,
    /// `γ_2, γ_3, ...`
    pub gamma: Vec<Count>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRecord {
    pub command: String,
    pub g: i64,
    pub d_min: i64,
    pub d_max: i64,
    pub j_max: i64,
    pub rows: Vec<TableRowRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvertRecord {
    pub command: String,
    pub g: i64,
    pub d: i64,
    pub nu: i64,
    pub p: i64,
    pub m: i64,
    pub b: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionRecord {
    pub command: String,
    pub g: i64,
    pub m: i64,
    pub b: i64,
    pub d: i64,
    pub p: i64,
    pub kind: String,
    pub secancy: i64,
    pub plane_dim: i64,
    pub gamma_length: Option<i64>,
    pub certificate: Option<Count>,
    pub note: String,
}
