//! Implementations of the CLI subcommands, separated from argument
//! parsing so they can be driven from tests.

use std::sync::Arc;

use serde::Serialize;

use graphprod::complex::{building_ball, extension_ball, untransvectable_extension_ball};
use graphprod::parabolic::maximal_product_parabolics;
use graphprod::recognition::{untransvectable_via_chains, ChainVariant};
use graphprod::{dot, Presentation, SimpleGraph, VertexSet};

use crate::doc::PresentationDoc;
use crate::relations::{judge, Judgment, RelationKind, RelationSpec};
use crate::{CliError, CliResult, Code};

/// Exhaustive predicates scan all vertex subsets; refuse beyond this.
pub const EXHAUSTIVE_VERTEX_LIMIT: usize = 12;

#[derive(Debug, Serialize)]
pub struct AnalyzeReport {
    pub vertices: Vec<String>,
    pub edge_count: usize,
    pub reduced_to_one_vertex: bool,
    pub transvection_free: bool,
    pub has_partial_conjugation: bool,
    pub clique_reduced: bool,
    /// `null` when the graph exceeds the exhaustive-scan limit.
    pub strongly_reduced: Option<bool>,
    pub join_factors: Vec<Vec<String>>,
    pub untransvectable: Vec<String>,
    pub untransvectable_via_chains: Option<Vec<String>>,
    pub untransvectable_via_chains_thick: Option<Vec<String>>,
    pub maximal_product_parabolics: Option<Vec<MaxProductReport>>,
    pub notes: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct MaxProductReport {
    pub vertices: Vec<String>,
    pub isolated_clique: bool,
}

pub fn analyze(doc: &PresentationDoc) -> CliResult<AnalyzeReport> {
    let pres = doc.build()?;
    let g = pres.graph();
    let n = g.vertex_count();
    let mut notes = Vec::new();
    let exhaustive = n <= EXHAUSTIVE_VERTEX_LIMIT;
    if !exhaustive {
        notes.push(format!(
            "graph exceeds {EXHAUSTIVE_VERTEX_LIMIT} vertices; exhaustive predicates skipped"
        ));
    }
    if n == 1 {
        notes.push("graph is reduced to one vertex; classification theorems do not apply".into());
    }

    let names = |s: VertexSet| g.set_names(s);
    let strongly_reduced = exhaustive.then(|| g.is_strongly_reduced());
    let chains_plain = if exhaustive {
        Some(names(
            untransvectable_via_chains(g, ChainVariant::Plain)
                .map_err(|e| CliError::parse(e.to_string()))?,
        ))
    } else {
        None
    };
    let chains_thick = match strongly_reduced {
        Some(true) if n >= 2 => Some(names(
            untransvectable_via_chains(g, ChainVariant::Thick)
                .map_err(|e| CliError::parse(e.to_string()))?,
        )),
        _ => None,
    };
    let max_products = exhaustive.then(|| {
        maximal_product_parabolics(&pres)
            .into_iter()
            .map(|m| MaxProductReport {
                vertices: names(m.parabolic.type_set()),
                isolated_clique: m.isolated_clique,
            })
            .collect()
    });

    Ok(AnalyzeReport {
        vertices: g.names().to_vec(),
        edge_count: g.edges().len(),
        reduced_to_one_vertex: n == 1,
        transvection_free: g.is_transvection_free(),
        has_partial_conjugation: g.has_partial_conjugation(),
        clique_reduced: g.is_clique_reduced(),
        strongly_reduced,
        join_factors: if n == 0 {
            Vec::new()
        } else {
            g.join_decompose()
                .map_err(|e| CliError::parse(e.to_string()))?
                .into_iter()
                .map(names)
                .collect()
        },
        untransvectable: names(g.untransvectable_vertices()),
        untransvectable_via_chains: chains_plain,
        untransvectable_via_chains_thick: chains_thick,
        maximal_product_parabolics: max_products,
        notes,
    })
}

/// Hypotheses of the classification theorems, per input side.
#[derive(Debug, Clone, Serialize)]
pub struct SideHypotheses {
    pub reduced_to_one_vertex: bool,
    pub transvection_free: bool,
    pub no_partial_conjugation: bool,
    pub join_factors_strongly_reduced: bool,
    /// `null` when a label (opaque) leaves this unverifiable.
    pub vertex_groups_infinite: Option<bool>,
}

fn side_hypotheses(pres: &Arc<Presentation>) -> SideHypotheses {
    let g = pres.graph();
    let join_factors_strongly_reduced = g.vertex_count() >= 1
        && g.join_decompose()
            .map(|fs| fs.iter().all(|&f| g.induced(f).is_strongly_reduced()))
            .unwrap_or(false);
    let mut infinite = Some(true);
    for l in pres.labels() {
        match l.is_infinite() {
            Some(true) => {}
            Some(false) => {
                infinite = Some(false);
                break;
            }
            None => infinite = None,
        }
    }
    SideHypotheses {
        reduced_to_one_vertex: g.vertex_count() == 1,
        transvection_free: g.is_transvection_free(),
        no_partial_conjugation: !g.has_partial_conjugation(),
        join_factors_strongly_reduced,
        vertex_groups_infinite: infinite,
    }
}

#[derive(Debug, Serialize)]
pub struct HypothesesReport {
    pub relation: RelationKind,
    pub a: SideHypotheses,
    pub b: SideHypotheses,
    pub verified: bool,
    pub failed: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct VertexJudgment {
    pub from: String,
    pub to: String,
    pub judgment: Judgment,
}

#[derive(Debug, Serialize)]
pub struct Witness {
    pub sigma: Vec<(String, String)>,
    pub vertex_judgments: Vec<VertexJudgment>,
}

#[derive(Debug, Serialize)]
pub struct Verdict {
    pub relation: String,
    pub witness: Option<Witness>,
    pub hypotheses: HypothesesReport,
    pub notes: Vec<String>,
}

impl Verdict {
    pub fn is_positive(&self) -> bool {
        !self.relation.starts_with("not-") && self.relation != "undetermined"
    }
}

fn check_hypotheses(
    kind: RelationKind,
    a: &SideHypotheses,
    b: &SideHypotheses,
) -> (bool, Vec<String>) {
    let mut failed = Vec::new();
    let mut push = |cond: bool, what: &str| {
        if !cond {
            failed.push(what.to_owned());
        }
    };
    match kind {
        RelationKind::Iso => {
            // Either side being transvection-free suffices; both graphs
            // must decompose as joins of strongly reduced graphs.
            push(
                a.transvection_free || b.transvection_free,
                "at least one defining graph must be transvection-free",
            );
            push(
                !a.reduced_to_one_vertex && !b.reduced_to_one_vertex,
                "defining graphs must not be reduced to one vertex",
            );
            push(
                a.join_factors_strongly_reduced && b.join_factors_strongly_reduced,
                "defining graphs must decompose as joins of strongly reduced graphs",
            );
        }
        RelationKind::StrongCommensurable | RelationKind::OrbitEquivalent => {
            push(
                !a.reduced_to_one_vertex && !b.reduced_to_one_vertex,
                "defining graphs must not be reduced to one vertex",
            );
            push(
                a.transvection_free && b.transvection_free,
                "defining graphs must be transvection-free",
            );
            push(
                a.no_partial_conjugation && b.no_partial_conjugation,
                "defining graphs must have no partial conjugation",
            );
            push(
                a.vertex_groups_infinite == Some(true)
                    && b.vertex_groups_infinite == Some(true),
                "vertex groups must be verifiably countably infinite",
            );
        }
    }
    (failed.is_empty(), failed)
}

/// Searches for a graph isomorphism respecting the label relation;
/// `permissive` also allows pairs the relation leaves unknown.
fn find_isomorphism(
    ga: &SimpleGraph,
    gb: &SimpleGraph,
    pa: &Arc<Presentation>,
    pb: &Arc<Presentation>,
    spec: &RelationSpec,
    permissive: bool,
) -> Option<Vec<usize>> {
    let n = ga.vertex_count();
    if n != gb.vertex_count() || ga.edges().len() != gb.edges().len() {
        return None;
    }
    let allowed = |v: usize, w: usize| match judge(spec, pa.label(v), pb.label(w)) {
        Judgment::Related => true,
        Judgment::Unknown => permissive,
        Judgment::Unrelated => false,
    };
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        v: usize,
        ga: &SimpleGraph,
        gb: &SimpleGraph,
        allowed: &dyn Fn(usize, usize) -> bool,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = ga.vertex_count();
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w]
                || ga.link(v).len() != gb.link(w).len()
                || !allowed(v, w)
            {
                continue;
            }
            if (0..v).any(|u| ga.adjacent(u, v) != gb.adjacent(image[u], w)) {
                continue;
            }
            image[v] = w;
            used[w] = true;
            if rec(v + 1, ga, gb, allowed, image, used) {
                return true;
            }
            used[w] = false;
            image[v] = usize::MAX;
        }
        false
    }
    if rec(0, ga, gb, &allowed, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

/// Classifies a pair of documents under a relation.
///
/// A positive or negative verdict is only emitted when the corresponding
/// theorem hypotheses are verified on both inputs; otherwise the verdict
/// is `undetermined` and the report names the failed hypotheses. When no
/// label-respecting isomorphism exists but one would exist if unknown
/// label pairs were accepted, the relation table is incomplete and the
/// call fails with [`Code::Relation`].
pub fn classify(
    doc_a: &PresentationDoc,
    doc_b: &PresentationDoc,
    spec: &RelationSpec,
) -> CliResult<Verdict> {
    let pa = doc_a.build()?;
    let pb = doc_b.build()?;
    if pa.graph().vertex_count() > EXHAUSTIVE_VERTEX_LIMIT
        || pb.graph().vertex_count() > EXHAUSTIVE_VERTEX_LIMIT
    {
        return Err(CliError::parse(format!(
            "classification checks hypotheses exhaustively and is limited to {EXHAUSTIVE_VERTEX_LIMIT} vertices"
        )));
    }
    let ha = side_hypotheses(&pa);
    let hb = side_hypotheses(&pb);
    let (verified, failed) = check_hypotheses(spec.relation, &ha, &hb);
    let hypotheses = HypothesesReport {
        relation: spec.relation,
        a: ha,
        b: hb,
        verified,
        failed,
    };
    let (positive_name, negative_name) = spec.relation.verdict_names();

    let strict = find_isomorphism(pa.graph(), pb.graph(), &pa, &pb, spec, false);
    let mut notes = Vec::new();
    if let Some(sigma) = strict {
        let witness = Witness {
            sigma: sigma
                .iter()
                .enumerate()
                .map(|(v, &w)| {
                    (
                        pa.graph().name(v).to_owned(),
                        pb.graph().name(w).to_owned(),
                    )
                })
                .collect(),
            vertex_judgments: sigma
                .iter()
                .enumerate()
                .map(|(v, &w)| VertexJudgment {
                    from: pa.graph().name(v).to_owned(),
                    to: pb.graph().name(w).to_owned(),
                    judgment: judge(spec, pa.label(v), pb.label(w)),
                })
                .collect(),
        };
        if verified {
            return Ok(Verdict {
                relation: positive_name.to_owned(),
                witness: Some(witness),
                hypotheses,
                notes,
            });
        }
        notes.push(
            "a label-respecting graph isomorphism exists, but the theorem hypotheses are not verified"
                .to_owned(),
        );
        return Ok(Verdict {
            relation: "undetermined".to_owned(),
            witness: Some(witness),
            hypotheses,
            notes,
        });
    }

    // No strict isomorphism. If a permissive one exists, the supplied
    // relation cannot decide the inputs.
    if find_isomorphism(pa.graph(), pb.graph(), &pa, &pb, spec, true).is_some() {
        return Err(CliError::new(
            Code::Relation,
            "relation table incomplete: an isomorphism exists through label pairs the relation does not decide",
        ));
    }

    if verified {
        Ok(Verdict {
            relation: negative_name.to_owned(),
            witness: None,
            hypotheses,
            notes,
        })
    } else {
        notes.push("no label-respecting graph isomorphism exists".to_owned());
        Ok(Verdict {
            relation: "undetermined".to_owned(),
            witness: None,
            hypotheses,
            notes,
        })
    }
}

#[derive(Debug, Serialize)]
pub struct WordReport {
    pub input: String,
    pub canonical: String,
    pub length: u64,
    pub syllable_count: usize,
    pub is_identity: bool,
    pub head: Vec<String>,
    pub tail: Vec<String>,
    pub syllables: Vec<String>,
}

pub fn word(doc: &PresentationDoc, expression: &str) -> CliResult<WordReport> {
    let pres = doc.build()?;
    for l in pres.labels() {
        if !l.is_arithmetic() {
            return Err(CliError::new(
                Code::LabelArithmetic,
                format!("label {l} does not support element arithmetic"),
            ));
        }
    }
    let x = pres.parse_word(expression).map_err(CliError::from)?;
    let show = |syllables: Vec<graphprod::Syllable>| -> Vec<String> {
        syllables
            .into_iter()
            .map(|s| {
                graphprod::Element::syllable(&pres, s.vertex, s.letter)
                    .expect("canonical syllable")
                    .to_string()
            })
            .collect()
    };
    Ok(WordReport {
        input: expression.to_owned(),
        canonical: x.to_string(),
        length: x.word_length(),
        syllable_count: x.syllable_count(),
        is_identity: x.is_identity(),
        head: show(x.head()),
        tail: show(x.tail()),
        syllables: show(x.syllables()),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplexKind {
    Extension,
    UntransvectableExtension,
    Building,
}

impl ComplexKind {
    pub fn parse(name: &str) -> Option<ComplexKind> {
        match name {
            "extension" => Some(ComplexKind::Extension),
            "untransvectable-extension" => Some(ComplexKind::UntransvectableExtension),
            "building" => Some(ComplexKind::Building),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmitFormat {
    Dot,
    Json,
}

impl EmitFormat {
    pub fn parse(name: &str) -> Option<EmitFormat> {
        match name {
            "dot" => Some(EmitFormat::Dot),
            "json" => Some(EmitFormat::Json),
            _ => None,
        }
    }
}

pub struct ComplexOutput {
    /// One-line summary for standard output.
    pub summary: String,
    /// The emitted artifact (DOT or JSON).
    pub artifact: String,
}

pub fn complex(
    doc: &PresentationDoc,
    kind: ComplexKind,
    radius: u64,
    format: EmitFormat,
) -> CliResult<ComplexOutput> {
    let pres = doc.build()?;
    let enumeration_error = |e: graphprod::Error| CliError::new(Code::Enumeration, e.to_string());
    match kind {
        ComplexKind::Extension | ComplexKind::UntransvectableExtension => {
            let ball = if kind == ComplexKind::Extension {
                extension_ball(&pres, radius)
            } else {
                untransvectable_extension_ball(&pres, radius)
            }
            .map_err(enumeration_error)?;
            let summary = format!(
                "{} nodes, {} edges",
                ball.nodes().len(),
                ball.edges().len()
            );
            let artifact = match format {
                EmitFormat::Dot => dot::extension_ball(&ball),
                EmitFormat::Json => serde_json::to_string_pretty(&ball.dump())
                    .expect("serializable dump")
                    + "\n",
            };
            Ok(ComplexOutput { summary, artifact })
        }
        ComplexKind::Building => {
            let ball = building_ball(&pres, radius).map_err(enumeration_error)?;
            let counts = ball.cube_counts();
            let mut summary = format!(
                "{} vertices, {} edges",
                ball.nodes().len(),
                ball.edges().len()
            );
            for (i, c) in counts.iter().enumerate() {
                let dim = i + 2;
                if dim == 2 {
                    summary.push_str(&format!(", {c} squares"));
                } else {
                    summary.push_str(&format!(", {c} {dim}-cubes"));
                }
            }
            if counts.is_empty() {
                summary.push_str(", 0 squares");
            }
            let artifact = match format {
                EmitFormat::Dot => dot::building_ball(&ball),
                EmitFormat::Json => serde_json::to_string_pretty(&ball.dump())
                    .expect("serializable dump")
                    + "\n",
            };
            Ok(ComplexOutput { summary, artifact })
        }
    }
}
