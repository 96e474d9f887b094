//! The space file format: JSON describing one space and, optionally, named subsets.
//!
//! ```json
//! {
//!   "space": {
//!     "kind": "sum",
//!     "summands": [
//!       { "kind": "finite", "elements": ["a", "b"], "leq": [["a", "b"]] },
//!       { "kind": "dual", "of": { "kind": "generic_over_antichain" } }
//!     ]
//!   },
//!   "subsets": {
//!     "V": { "parts": [
//!       { "members": ["a"] },
//!       { "closed": { "mode": "cofinite", "indices": [0] }, "generic": true }
//!     ] }
//!   }
//! }
//! ```
//!
//! `leq` lists generating pairs `[x, y]` meaning `x ≤ y`, i.e. `x` lies in the
//! closure of `y`. Serialization writes the covering pairs. Subsets follow
//! the summand structure of the space with dual wrappers dropped, since a
//! dual has the same points. An optional `expected` object asserts
//! `finite`, `noetherian`, `inverse_noetherian`, `weakly_noetherian` and,
//! for finite spaces, `radical_ideals`. Unknown fields are rejected.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::catalog::Expected;
use crate::error::{Error, Result};
use crate::order::{FinitePoset, FiniteSubset};
use crate::space::{Leaf, SpaceExpr};
use crate::subset::{AntichainSubset, ClosedMode, SymbolicSubset};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum SpaceDoc {
    Finite {
        elements: Vec<String>,
        #[serde(default)]
        leq: Vec<(String, String)>,
    },
    GenericOverAntichain {},
    Dual {
        of: Box<SpaceDoc>,
    },
    Sum {
        summands: Vec<SpaceDoc>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MembersDoc {
    members: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClosedDoc {
    mode: ClosedMode,
    #[serde(default)]
    indices: BTreeSet<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AntichainDoc {
    closed: ClosedDoc,
    generic: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PartsDoc {
    parts: Vec<SubsetDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
enum SubsetDoc {
    Members(MembersDoc),
    Antichain(AntichainDoc),
    Parts(PartsDoc),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileDoc {
    space: SpaceDoc,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    subsets: BTreeMap<String, SubsetDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    expected: Option<Expected>,
}

/// A parsed space file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceFile {
    pub space: SpaceExpr,
    /// Subsets of the normalized space, by name.
    pub subsets: BTreeMap<String, SymbolicSubset>,
    /// Asserted properties, compared by `check`.
    pub expected: Option<Expected>,
}

impl SpaceFile {
    pub fn new(space: SpaceExpr) -> Self {
        Self {
            space,
            subsets: BTreeMap::new(),
            expected: None,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let doc: FileDoc = serde_json::from_str(text).map_err(json_error)?;
        let space = space_from_doc(&doc.space)?;
        let normal = space.normalize();
        let mut subsets = BTreeMap::new();
        for (name, s) in &doc.subsets {
            let subset = subset_from_doc(&normal, s)
                .map_err(|e| Error::Parse(format!("subset `{name}`: {}", strip_parse(e))))?;
            subsets.insert(name.clone(), subset);
        }
        Ok(Self {
            space,
            subsets,
            expected: doc.expected,
        })
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| Error::Parse(format!("{}: {}", path.display(), strip_parse(e))))
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> Result<String> {
        let normal = self.space.normalize();
        let mut subsets = BTreeMap::new();
        for (name, s) in &self.subsets {
            subsets.insert(name.clone(), subset_to_doc(&normal, s)?);
        }
        let doc = FileDoc {
            space: space_to_doc(&self.space),
            subsets,
            expected: self.expected.clone(),
        };
        let mut out = serde_json::to_string_pretty(&doc).expect("documents always serialize");
        out.push('\n');
        Ok(out)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        std::fs::write(path, self.to_json()?).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }

    /// The Hochster dual, normalized. Subsets carry over unchanged and
    /// expectations are dropped.
    pub fn dual(&self) -> Self {
        Self {
            space: self.space.dual(),
            subsets: self.subsets.clone(),
            expected: None,
        }
    }
}

pub fn parse_space(text: &str) -> Result<SpaceExpr> {
    SpaceFile::parse(text).map(|f| f.space)
}

pub fn space_to_json(e: &SpaceExpr) -> String {
    SpaceFile::new(e.clone()).to_json().expect("no subsets to check")
}

/// One subset document, as found under `subsets`, read against `e`.
pub fn parse_subset(e: &SpaceExpr, text: &str) -> Result<SymbolicSubset> {
    let doc: SubsetDoc = serde_json::from_str(text).map_err(json_error)?;
    subset_from_doc(&e.normalize(), &doc)
}

pub fn subset_to_json(e: &SpaceExpr, s: &SymbolicSubset) -> Result<String> {
    let doc = subset_to_doc(&e.normalize(), s)?;
    Ok(serde_json::to_string(&doc).expect("documents always serialize"))
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

fn strip_parse(e: Error) -> String {
    match e {
        Error::Parse(msg) => msg,
        other => other.to_string(),
    }
}

fn space_from_doc(doc: &SpaceDoc) -> Result<SpaceExpr> {
    Ok(match doc {
        SpaceDoc::Finite { elements, leq } => SpaceExpr::finite(FinitePoset::build(elements, leq)?),
        SpaceDoc::GenericOverAntichain {} => SpaceExpr::goa(),
        SpaceDoc::Dual { of } => SpaceExpr::dual_of(space_from_doc(of)?),
        SpaceDoc::Sum { summands } => SpaceExpr::sum(summands.iter().map(space_from_doc).collect::<Result<_>>()?),
    })
}

fn space_to_doc(e: &SpaceExpr) -> SpaceDoc {
    match e {
        SpaceExpr::Finite(p) => SpaceDoc::Finite {
            elements: p.labels().to_vec(),
            leq: p
                .covering_pairs()
                .into_iter()
                .map(|(a, b)| (p.label(a).to_string(), p.label(b).to_string()))
                .collect(),
        },
        SpaceExpr::GenericOverAntichain => SpaceDoc::GenericOverAntichain {},
        SpaceExpr::Dual(inner) => SpaceDoc::Dual {
            of: Box::new(space_to_doc(inner)),
        },
        SpaceExpr::Sum(parts) => SpaceDoc::Sum {
            summands: parts.iter().map(space_to_doc).collect(),
        },
    }
}

fn subset_from_doc(e: &SpaceExpr, doc: &SubsetDoc) -> Result<SymbolicSubset> {
    match (e, doc) {
        (SpaceExpr::Sum(parts), SubsetDoc::Parts(PartsDoc { parts: docs })) => {
            if parts.len() != docs.len() {
                return Err(Error::Parse(format!(
                    "expected {} parts, found {}",
                    parts.len(),
                    docs.len()
                )));
            }
            let subs = parts
                .iter()
                .zip(docs)
                .map(|(p, d)| subset_from_doc(p, d))
                .collect::<Result<_>>()?;
            Ok(SymbolicSubset::Sum(subs))
        }
        (SpaceExpr::Finite(p), SubsetDoc::Members(MembersDoc { members })) => {
            let indices = members
                .iter()
                .map(|m| p.index_of(m).ok_or_else(|| Error::UnknownLabel(m.clone())))
                .collect::<Result<Vec<_>>>()?;
            Ok(SymbolicSubset::Finite(FiniteSubset::from_indices(p.len(), indices)?))
        }
        (SpaceExpr::GenericOverAntichain | SpaceExpr::Dual(_), SubsetDoc::Antichain(a)) => Ok(
            SymbolicSubset::Antichain(AntichainSubset::new(a.closed.mode, a.closed.indices.iter().copied(), a.generic)),
        ),
        (SpaceExpr::Sum(_), _) => Err(Error::Parse("a sum needs `parts`".into())),
        (SpaceExpr::Finite(_), _) => Err(Error::Parse("a finite space needs `members`".into())),
        _ => Err(Error::Parse("an antichain space needs `closed` and `generic`".into())),
    }
}

fn subset_to_doc(e: &SpaceExpr, s: &SymbolicSubset) -> Result<SubsetDoc> {
    let parts = s.zip_leaves(e)?;
    let mut leaves = parts.into_iter().map(|(_, leaf, part)| match (leaf, part) {
        (Leaf::Finite(p), SymbolicSubset::Finite(f)) => SubsetDoc::Members(MembersDoc {
            members: f.iter().map(|i| p.label(i).to_string()).collect(),
        }),
        (_, SymbolicSubset::Antichain(a)) => SubsetDoc::Antichain(AntichainDoc {
            closed: ClosedDoc {
                mode: a.mode,
                indices: a.indices.clone(),
            },
            generic: a.generic,
        }),
        _ => unreachable!("zip_leaves checked the carrier"),
    });
    Ok(assemble(e, &mut leaves))
}

fn assemble(e: &SpaceExpr, leaves: &mut impl Iterator<Item = SubsetDoc>) -> SubsetDoc {
    match e {
        SpaceExpr::Sum(parts) => SubsetDoc::Parts(PartsDoc {
            parts: parts.iter().map(|p| assemble(p, leaves)).collect(),
        }),
        _ => leaves.next().expect("one document per leaf"),
    }
}
