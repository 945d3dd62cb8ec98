//! Vertex-label relations: the per-vertex judgments that classification
//! verdicts delegate to.
//!
//! Built-in rules decide what is decidable from labels alone; user tables
//! add judgments the tool cannot derive (for example that free groups of
//! different ranks are not orbit equivalent). A pair left undecided is
//! reported as `Unknown` and never silently drives a verdict.

use serde::{Deserialize, Serialize};

use graphprod::VertexLabel;

use crate::doc::LabelDoc;
use crate::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelationKind {
    Iso,
    StrongCommensurable,
    OrbitEquivalent,
}

impl RelationKind {
    pub fn parse(name: &str) -> Option<RelationKind> {
        match name {
            "iso" => Some(RelationKind::Iso),
            "strong-commensurable" => Some(RelationKind::StrongCommensurable),
            "orbit-equivalent" => Some(RelationKind::OrbitEquivalent),
            _ => None,
        }
    }

    /// Verdict wording for the positive and negative outcomes.
    pub fn verdict_names(self) -> (&'static str, &'static str) {
        match self {
            RelationKind::Iso => ("isomorphic", "not-isomorphic"),
            RelationKind::StrongCommensurable => ("strongly-commensurable", "not-commensurable"),
            RelationKind::OrbitEquivalent => ("orbit-equivalent", "not-measure-equivalent"),
        }
    }
}

/// A user-extensible relation: a kind plus explicit judgments for label
/// pairs the built-ins cannot decide.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RelationSpec {
    pub relation: RelationKind,
    #[serde(default)]
    pub related: Vec<(LabelDoc, LabelDoc)>,
    #[serde(default)]
    pub unrelated: Vec<(LabelDoc, LabelDoc)>,
}

impl RelationSpec {
    pub fn builtin(kind: RelationKind) -> RelationSpec {
        RelationSpec {
            relation: kind,
            related: Vec::new(),
            unrelated: Vec::new(),
        }
    }

    pub fn from_json(text: &str) -> CliResult<RelationSpec> {
        serde_json::from_str(text)
            .map_err(|e| CliError::parse(format!("invalid relation table: {e}")))
    }

    pub fn read_file(path: &std::path::Path) -> CliResult<RelationSpec> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::parse(format!("cannot read {}: {e}", path.display())))?;
        RelationSpec::from_json(&text)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Judgment {
    Related,
    Unrelated,
    Unknown,
}

fn same_group(a: &VertexLabel, b: &VertexLabel) -> bool {
    // The free group of rank one is the infinite cyclic group.
    let normalize = |l: &VertexLabel| match l {
        VertexLabel::Free { rank: 1 } => VertexLabel::Cyclic { order: 0 },
        other => other.clone(),
    };
    normalize(a) == normalize(b)
}

fn table_lookup(spec: &RelationSpec, a: &VertexLabel, b: &VertexLabel) -> Option<Judgment> {
    let hit = |pairs: &[(LabelDoc, LabelDoc)]| {
        pairs.iter().any(|(x, y)| {
            (x.to_label() == *a && y.to_label() == *b) || (x.to_label() == *b && y.to_label() == *a)
        })
    };
    if hit(&spec.related) {
        Some(Judgment::Related)
    } else if hit(&spec.unrelated) {
        Some(Judgment::Unrelated)
    } else {
        None
    }
}

/// Judges a label pair under a relation. Explicit table entries win;
/// otherwise built-in rules apply:
///
/// * equal labels (up to `F1 = Z`) are related under every relation;
/// * Higman-style groups with distinct parameters are unrelated under
///   every relation (a nontrivial homomorphism between them exists only
///   when one parameter divides the other, and equal parameters force
///   automorphisms, so distinct parameters exclude isomorphism; these
///   groups have no proper finite-index subgroups and are rigid in the
///   measured setting, excluding the other relations);
/// * distinct cyclic labels, and distinct free ranks, are unrelated under
///   isomorphism and strong commensurability (finite-index subgroups of
///   free groups have rank determined by the index);
/// * a free label of rank ≥ 2 is not measure equivalent to any cyclic
///   label (amenability), hence unrelated under orbit equivalence;
/// * everything else is unknown and must come from the table.
pub fn judge(spec: &RelationSpec, a: &VertexLabel, b: &VertexLabel) -> Judgment {
    if let Some(j) = table_lookup(spec, a, b) {
        return j;
    }
    if same_group(a, b) {
        return Judgment::Related;
    }
    use VertexLabel::*;
    match (a, b) {
        (Higman { k: x }, Higman { k: y }) if x != y => Judgment::Unrelated,
        (Cyclic { order: x }, Cyclic { order: y }) if x != y => match spec.relation {
            RelationKind::Iso | RelationKind::StrongCommensurable => Judgment::Unrelated,
            RelationKind::OrbitEquivalent => {
                // Infinite vs finite cyclic cannot be orbit equivalent;
                // two distinct finite orders are left to the table.
                if *x == 0 || *y == 0 {
                    Judgment::Unrelated
                } else {
                    Judgment::Unknown
                }
            }
        },
        (Free { rank: x }, Free { rank: y }) if x != y => match spec.relation {
            RelationKind::Iso | RelationKind::StrongCommensurable => Judgment::Unrelated,
            RelationKind::OrbitEquivalent => Judgment::Unknown,
        },
        (Free { rank }, Cyclic { .. }) | (Cyclic { .. }, Free { rank }) if *rank >= 2 => {
            // Non-amenable vs amenable.
            Judgment::Unrelated
        }
        _ => Judgment::Unknown,
    }
}
