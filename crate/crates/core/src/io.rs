//! JSON documents for set functions, polytopes and generalized polymatroids.
//!
//! All rationals are written as canonical `"p/q"` strings, so serializing a
//! parsed document reproduces it byte for byte.

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::arith::Rat;
use crate::error::{Error, Result};
use crate::submod::{Point, SetFunction};

pub const GPOLYMATROID_KIND: &str = "gpolymatroid";

/// `{"n": int, "values": [2^n strings]}`, indexed by subset bitmask.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetFunctionDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub n: usize,
    pub values: Vec<Rat>,
}

/// `{"n": int, "vertices": [[coords]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeDoc {
    pub n: usize,
    pub vertices: Vec<Point>,
}

impl From<&SetFunction> for SetFunctionDoc {
    fn from(f: &SetFunction) -> Self {
        SetFunctionDoc {
            kind: None,
            n: f.n(),
            values: f.values().to_vec(),
        }
    }
}

impl Serialize for SetFunction {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SetFunctionDoc::from(self).serialize(serializer)
    }
}

impl SetFunctionDoc {
    pub fn into_set_function(self) -> Result<SetFunction> {
        SetFunction::new(self.n, self.values)
    }
}

impl PolytopeDoc {
    pub fn into_set_function(self) -> Result<SetFunction> {
        if self.vertices.iter().any(|v| v.len() != self.n) {
            return Err(Error::Input(format!("vertex dimension differs from n = {}", self.n)));
        }
        SetFunction::from_vertices(self.n, &self.vertices)
    }
}

/// Either document shape; polytopes are converted through
/// [`SetFunction::from_vertices`].
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum InputDoc {
    SetFunction(SetFunctionDoc),
    Polytope(PolytopeDoc),
}

impl InputDoc {
    pub fn into_set_function(self) -> Result<SetFunction> {
        match self {
            InputDoc::SetFunction(d) => d.into_set_function(),
            InputDoc::Polytope(d) => d.into_set_function(),
        }
    }
}

pub fn parse_set_function(text: &str) -> Result<SetFunction> {
    let doc: InputDoc =
        serde_json::from_str(text).map_err(|e| Error::Input(format!("unrecognized document: {e}")))?;
    doc.into_set_function()
}

pub fn read_set_function(path: &Path) -> Result<SetFunction> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_set_function(&text)
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn write_json<T: Serialize + ?Sized>(path: &Path, value: &T) -> Result<()> {
    fs::write(path, to_json(value)?)?;
    Ok(())
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn set_function_round_trip_is_bit_identical() {
        let f = fixtures::n4_family()[3].dilate(&"2/3".parse().unwrap()).unwrap();
        let text = to_json(&SetFunctionDoc::from(&f)).unwrap();
        let back = parse_set_function(&text).unwrap();
        assert_eq!(back, f);
        assert_eq!(to_json(&SetFunctionDoc::from(&back)).unwrap(), text);
    }

    #[test]
    fn polytope_documents_are_accepted() {
        let text = r#"{"n": 3, "vertices": [["1","0","0"],["0","1","0"],["0","0","1"]]}"#;
        assert_eq!(parse_set_function(text).unwrap(), fixtures::t1());
    }

    #[test]
    fn malformed_documents_are_input_errors() {
        for text in [
            "{",
            r#"{"n": 2, "values": ["0", "1", "1"]}"#,
            r#"{"n": 1, "values": ["1", "1"]}"#,
            r#"{"n": 2, "values": ["0", "1", "x", "1"]}"#,
        ] {
            assert_eq!(parse_set_function(text).unwrap_err().exit_code(), 2, "{text}");
        }
    }
}
