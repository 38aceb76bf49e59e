//! Concrete cell data with JM elements: the toy algebra, the full matrix
//! algebra and the Hecke algebra of type A.

pub mod hecke;
pub mod matrix;
pub mod toy;
pub mod verify;

use serde::{Deserialize, Serialize};

pub use hecke::{build_hecke, HeckeData};
pub use matrix::build_matrix_algebra;
pub use toy::build_toy;

use crate::cellular::{AlgebraElement, CellDatum, ContentTable};
use crate::error::{Error, Result};
use crate::field::{FieldKind, Scalar};

pub enum InstanceKind {
    Toy { contents: Vec<Scalar> },
    Matrix { n: usize },
    Hecke(HeckeData),
}

/// A cell datum together with its JM elements and contents.
pub struct Instance {
    pub kind: InstanceKind,
    pub datum: CellDatum,
    pub table: ContentTable,
    /// Algebra generators (used for centrality checks).
    pub generators: Vec<AlgebraElement>,
}

impl Instance {
    pub fn field(&self) -> FieldKind {
        self.datum.field()
    }

    pub fn name(&self) -> String {
        let v = self.field().var().unwrap_or('q');
        match &self.kind {
            InstanceKind::Toy { contents } => {
                let cs: Vec<String> = contents.iter().map(|c| c.pretty(v)).collect();
                format!("toy({})", cs.join(","))
            }
            InstanceKind::Matrix { n } => format!("M_{n}"),
            InstanceKind::Hecke(h) if self.field().generator().as_ref() == Some(&h.q) => format!("H_{v}(S_{})", h.n),
            InstanceKind::Hecke(h) => format!("H_q(S_{}) at q = {}", h.n, h.q.pretty(v)),
        }
    }

    /// The `n` used by the size gates (`n` of `S_n` for Hecke).
    pub fn hecke_n(&self) -> Option<usize> {
        match &self.kind {
            InstanceKind::Hecke(h) => Some(h.n),
            _ => None,
        }
    }

    pub fn hecke(&self) -> Option<&HeckeData> {
        match &self.kind {
            InstanceKind::Hecke(h) => Some(h),
            _ => None,
        }
    }
}

pub const GATE_ENV: &str = "SEMINORMAL_NO_SIZE_GATE";
pub const GATE_FLAG: &str = "--no-size-gate";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GateKind {
    /// Building the Hecke algebra at all (the Murphy basis lives in the
    /// `n!`-dimensional T-basis).
    HeckeConstruction,
    /// Anything that needs `n! × n!` matrices.
    RegularRepresentation,
}

impl GateKind {
    pub fn limit(self, field: FieldKind) -> usize {
        match (self, field.is_function_field()) {
            (GateKind::HeckeConstruction, true) => 5,
            (GateKind::HeckeConstruction, false) => 6,
            (GateKind::RegularRepresentation, true) => 4,
            (GateKind::RegularRepresentation, false) => 5,
        }
    }

    fn describe(self) -> &'static str {
        match self {
            GateKind::HeckeConstruction => "Hecke algebra construction",
            GateKind::RegularRepresentation => "the regular representation",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Gates {
    pub override_all: bool,
}

impl Gates {
    pub fn off() -> Gates {
        Gates { override_all: true }
    }

    /// Gates are lifted when the environment variable is set to anything
    /// other than `0` or the empty string.
    pub fn from_env() -> Gates {
        let off = std::env::var(GATE_ENV).map(|v| !v.is_empty() && v != "0").unwrap_or(false);
        Gates { override_all: off }
    }

    pub fn check(self, kind: GateKind, n: usize, field: FieldKind) -> Result<()> {
        let limit = kind.limit(field);
        if self.override_all || n <= limit {
            return Ok(());
        }
        Err(Error::SizeGate { what: format!("{} over {field}", kind.describe()), n, limit, flag: GATE_FLAG.into() })
    }

    /// Gate for an already-built instance; only Hecke instances are gated.
    pub fn check_instance(self, kind: GateKind, inst: &Instance) -> Result<()> {
        match inst.hecke_n() {
            Some(n) => self.check(kind, n, inst.field()),
            None => Ok(()),
        }
    }
}

/// A number given either as a JSON integer or in the exact text encoding.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarText {
    Int(i64),
    Text(String),
}

impl ScalarText {
    pub fn parse(&self, field: FieldKind) -> Result<Scalar> {
        match self {
            ScalarText::Int(k) => Ok(field.from_i64(*k)),
            ScalarText::Text(s) => field.parse_scalar(s),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraName {
    Toy,
    Matrix,
    Hecke,
}

/// `{"algebra": "toy"|"matrix"|"hecke", "n": .., "field": .., "q": .., "contents": [..]}`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceSpec {
    pub algebra: AlgebraName,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<ScalarText>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub contents: Option<Vec<ScalarText>>,
}

impl InstanceSpec {
    pub fn from_json(s: &str) -> Result<InstanceSpec> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("instance spec, line {} column {}: {e}", e.line(), e.column())))
    }

    /// The field named in the spec; Hecke defaults to `Q(q)`, the others to `Q`.
    pub fn field(&self) -> Result<FieldKind> {
        match &self.field {
            Some(f) => f.parse(),
            None if self.algebra == AlgebraName::Hecke => "q-generic".parse(),
            None => Ok(FieldKind::Rationals),
        }
    }

    /// The Hecke parameter: given explicitly, or the generator of a function field.
    pub fn q(&self, field: FieldKind) -> Result<Scalar> {
        match (&self.q, field.generator()) {
            (Some(q), _) => q.parse(field),
            (None, Some(g)) => Ok(g),
            (None, None) => Err(Error::Invalid(format!("a value of q is required over {field}"))),
        }
    }

    pub fn build(&self, gates: Gates) -> Result<Instance> {
        let field = self.field()?;
        let need_n = || self.n.ok_or_else(|| Error::Invalid("`n` is required".into()));
        match self.algebra {
            AlgebraName::Toy => {
                let cs = self
                    .contents
                    .as_ref()
                    .ok_or_else(|| Error::Invalid("the toy algebra needs `contents`".into()))?;
                if let Some(n) = self.n {
                    if n != cs.len() {
                        return Err(Error::Invalid(format!("n = {n} but {} contents given", cs.len())));
                    }
                }
                let cs = cs.iter().map(|c| c.parse(field)).collect::<Result<Vec<_>>>()?;
                build_toy(field, cs)
            }
            AlgebraName::Matrix => build_matrix_algebra(field, need_n()?),
            AlgebraName::Hecke => build_hecke(need_n()?, field, self.q(field)?, gates),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_round_trip() {
        let spec = InstanceSpec::from_json(r#"{"algebra":"hecke","n":2,"field":"Q","q":-1}"#).unwrap();
        let h = spec.build(Gates::default()).unwrap();
        assert_eq!(h.datum.dim(), 2);
        let again = InstanceSpec::from_json(&serde_json::to_string(&spec).unwrap()).unwrap();
        assert_eq!(again, spec);

        let toy = InstanceSpec::from_json(r#"{"algebra":"toy","contents":[0,"1/2",3]}"#).unwrap();
        assert_eq!(toy.build(Gates::default()).unwrap().datum.dim(), 3);
        assert!(InstanceSpec::from_json(r#"{"algebra":"toy","contents":[0],"n":2}"#)
            .unwrap()
            .build(Gates::default())
            .is_err());
        assert!(InstanceSpec::from_json(r#"{"algebra":"brauer","n":2}"#).is_err());
    }

    #[test]
    fn gates() {
        let k: FieldKind = "Q(q)".parse().unwrap();
        let g = Gates::default();
        assert!(g.check(GateKind::RegularRepresentation, 4, k).is_ok());
        match g.check(GateKind::RegularRepresentation, 5, k) {
            Err(Error::SizeGate { limit, flag, .. }) => {
                assert_eq!(limit, 4);
                assert_eq!(flag, GATE_FLAG);
            }
            other => panic!("{other:?}"),
        }
        assert!(Gates::off().check(GateKind::RegularRepresentation, 9, k).is_ok());
        assert!(g.check(GateKind::RegularRepresentation, 5, FieldKind::Rationals).is_ok());
    }
}
