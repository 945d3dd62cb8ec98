//! Finite truncations of the extension graph and the right-angled
//! building, and bijections combined from per-vertex letter bijections.
//!
//! The extension graph has one node per conjugate of a vertex group, with
//! edges between commuting pairs; the building is the cube complex on
//! standard clique cosets. Both are infinite in general, so we build the
//! ball of all nodes whose canonical representative has word length at
//! most a requested radius.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::label::Letter;
use crate::parabolic::{member_of_product, Parabolic};
use crate::word::{Element, Presentation, Syllable};

/// A finite piece of the extension graph: all conjugates of vertex groups
/// whose canonical conjugator has word length at most `radius`.
#[derive(Clone, Debug)]
pub struct ExtensionBall {
    pres: Arc<Presentation>,
    radius: u64,
    nodes: Vec<Parabolic>,
    edges: Vec<(usize, usize)>,
}

impl ExtensionBall {
    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn radius(&self) -> u64 {
        self.radius
    }

    /// Vertex-type parabolics, sorted by (conjugator length, conjugator,
    /// type vertex).
    pub fn nodes(&self) -> &[Parabolic] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn node_index(&self, p: &Parabolic) -> Option<usize> {
        self.nodes.iter().position(|q| q == p)
    }
}

/// Builds the extension ball of the given radius.
pub fn extension_ball(pres: &Arc<Presentation>, radius: u64) -> Result<ExtensionBall> {
    let graph = pres.graph();
    let mut nodes: Vec<Parabolic> = Vec::new();
    for g in pres.ball(radius)? {
        for v in 0..graph.vertex_count() {
            let p = Parabolic::new(g.clone(), VertexSet::single(v));
            if p.conjugator().word_length() <= radius && !nodes.contains(&p) {
                nodes.push(p);
            }
        }
    }
    nodes.sort_by(node_order);
    let edges = commuting_pairs(graph, &nodes);
    Ok(ExtensionBall {
        pres: Arc::clone(pres),
        radius,
        nodes,
        edges,
    })
}

/// The induced sub-ball on conjugates of untransvectable vertex groups.
pub fn untransvectable_extension_ball(
    pres: &Arc<Presentation>,
    radius: u64,
) -> Result<ExtensionBall> {
    let full = extension_ball(pres, radius)?;
    let keep = pres.graph().untransvectable_vertices();
    let mut index_map = vec![usize::MAX; full.nodes.len()];
    let mut nodes = Vec::new();
    for (i, p) in full.nodes.iter().enumerate() {
        if keep.contains(p.type_set().min_vertex()) {
            index_map[i] = nodes.len();
            nodes.push(p.clone());
        }
    }
    let edges = full
        .edges
        .iter()
        .filter(|(a, b)| index_map[*a] != usize::MAX && index_map[*b] != usize::MAX)
        .map(|&(a, b)| (index_map[a], index_map[b]))
        .collect();
    Ok(ExtensionBall {
        pres: Arc::clone(pres),
        radius,
        nodes,
        edges,
    })
}

fn node_order(a: &Parabolic, b: &Parabolic) -> std::cmp::Ordering {
    let ka = (
        a.conjugator().word_length(),
        a.conjugator().word().to_vec(),
        a.type_set(),
    );
    let kb = (
        b.conjugator().word_length(),
        b.conjugator().word().to_vec(),
        b.type_set(),
    );
    ka.cmp(&kb)
}

/// Two distinct conjugates of vertex groups commute exactly when they are
/// `g G_v g⁻¹` and `g G_w g⁻¹` for a common `g` and adjacent `v, w`;
/// with canonical conjugators `g₁, g₂` this becomes
/// `g₂⁻¹ g₁ ∈ G_star(w) · G_star(v)`.
fn commuting_pairs(graph: &crate::graph::SimpleGraph, nodes: &[Parabolic]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            let v = nodes[i].type_set().min_vertex();
            let w = nodes[j].type_set().min_vertex();
            if !graph.adjacent(v, w) {
                continue;
            }
            let x = nodes[j]
                .conjugator()
                .inverse()
                .multiply(nodes[i].conjugator())
                .expect("same presentation");
            if member_of_product(&x, graph.star(w), graph.star(v)) {
                edges.push((i, j));
            }
        }
    }
    edges
}

/// One vertex of the building: the standard clique coset
/// `rep · G_clique`, where `rep` is the length-minimal canonical coset
/// representative (no tail syllable inside the clique).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CliqueCoset {
    pub rep: Element,
    pub clique: VertexSet,
}

impl CliqueCoset {
    pub fn rank(&self) -> usize {
        self.clique.len()
    }
}

/// A cube of dimension ≥ 2, listed by the node ids of its vertices;
/// `vertices[0]` is the bottom coset and `vertices.last()` the top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildingCube {
    pub dim: u32,
    pub vertices: Vec<usize>,
}

/// A finite piece of the right-angled building: all standard clique
/// cosets with canonical representative of word length at most `radius`,
/// with edges given by corank-one inclusions and cubes by intervals all
/// of whose cosets are present.
#[derive(Clone, Debug)]
pub struct BuildingBall {
    pres: Arc<Presentation>,
    radius: u64,
    nodes: Vec<CliqueCoset>,
    edges: Vec<(usize, usize)>,
    cubes: Vec<BuildingCube>,
}

impl BuildingBall {
    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn radius(&self) -> u64 {
        self.radius
    }

    pub fn nodes(&self) -> &[CliqueCoset] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn cubes(&self) -> &[BuildingCube] {
        &self.cubes
    }

    pub fn node_index(&self, c: &CliqueCoset) -> Option<usize> {
        self.nodes.iter().position(|d| d == c)
    }

    /// Number of cubes of each dimension ≥ 2, indexed from dimension 2.
    pub fn cube_counts(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for c in &self.cubes {
            let idx = (c.dim - 2) as usize;
            if counts.len() <= idx {
                counts.resize(idx + 1, 0);
            }
            counts[idx] += 1;
        }
        counts
    }

    /// Node ids of the standard fundamental domain: cosets with identity
    /// representative, one per clique.
    pub fn fundamental_domain(&self) -> Vec<usize> {
        self.nodes
            .iter()
            .enumerate()
            .filter(|(_, c)| c.rep.is_identity())
            .map(|(i, _)| i)
            .collect()
    }
}

/// Whether the coset `a` is contained in the coset `b`:
/// `g G_Λ ⊆ h G_Υ` exactly when `Λ ⊆ Υ` and `h⁻¹ g ∈ G_Υ`.
pub fn coset_includes(a: &CliqueCoset, b: &CliqueCoset) -> bool {
    a.clique.is_subset(b.clique)
        && b.rep
            .inverse()
            .multiply(&a.rep)
            .expect("same presentation")
            .support()
            .is_subset(b.clique)
}

/// Strips tail syllables of `g` lying in `clique`, producing the
/// canonical coset representative of `g · G_clique`.
fn coset_rep(pres: &Arc<Presentation>, g: &Element, clique: VertexSet) -> Element {
    let mut cur = g.clone();
    loop {
        let mut changed = false;
        for s in cur.tail() {
            if clique.contains(s.vertex) {
                let se = Element::syllable(pres, s.vertex, s.letter.clone())
                    .expect("canonical syllable");
                cur = cur.multiply(&se.inverse()).expect("same presentation");
                changed = true;
                break;
            }
        }
        if !changed {
            return cur;
        }
    }
}

/// Builds the building ball of the given radius.
pub fn building_ball(pres: &Arc<Presentation>, radius: u64) -> Result<BuildingBall> {
    let graph = pres.graph();
    let cliques = graph.cliques();
    let mut index: BTreeMap<(Vec<Syllable>, VertexSet), usize> = BTreeMap::new();
    let mut nodes: Vec<CliqueCoset> = Vec::new();
    for g in pres.ball(radius)? {
        for &clique in &cliques {
            let rep = coset_rep(pres, &g, clique);
            let key = (rep.word().to_vec(), clique);
            if !index.contains_key(&key) {
                index.insert(key, 0);
                nodes.push(CliqueCoset { rep, clique });
            }
        }
    }
    nodes.sort_by_key(|c| (c.rep.word_length(), c.rep.word().to_vec(), c.clique));
    index.clear();
    for (i, c) in nodes.iter().enumerate() {
        index.insert((c.rep.word().to_vec(), c.clique), i);
    }

    // Edges: K ⊆ K ∪ {v}; the higher coset is rep·G_{K∪{v}}, whose
    // canonical representative re-strips rep.
    let mut edges = Vec::new();
    let mut cubes = Vec::new();
    for (i, c) in nodes.iter().enumerate() {
        let candidates: VertexSet = graph
            .vertices()
            .difference(c.clique)
            .iter()
            .filter(|&v| c.clique.is_subset(graph.link(v)))
            .collect();
        for delta in candidates.subsets() {
            if delta.is_empty() || !graph.is_clique(delta.union(c.clique)) {
                continue;
            }
            // All intermediate cosets rep·G_{K∪D'} for D' ⊆ delta.
            let mut ids = Vec::new();
            let mut complete = true;
            for sub in delta.subsets() {
                let upper = c.clique.union(sub);
                let rep = coset_rep(pres, &c.rep, upper);
                match index.get(&(rep.word().to_vec(), upper)) {
                    Some(&id) => ids.push(id),
                    None => {
                        complete = false;
                        break;
                    }
                }
            }
            if !complete {
                continue;
            }
            match delta.len() {
                1 => edges.push((i.min(ids[1]), i.max(ids[1]))),
                _ => cubes.push(BuildingCube {
                    dim: delta.len() as u32,
                    vertices: ids,
                }),
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    cubes.sort_by_key(|c| (c.dim, c.vertices.clone()));

    Ok(BuildingBall {
        pres: Arc::clone(pres),
        radius,
        nodes,
        edges,
        cubes,
    })
}

/// A bijection of graph products over the same graph, combined from
/// per-vertex letter bijections fixing the identity. It maps reduced
/// words syllable-by-syllable; it is rarely a homomorphism, yet it always
/// respects conjugates of vertex groups and standard clique cosets.
#[derive(Clone, Debug)]
pub struct CombinedBijection {
    src: Arc<Presentation>,
    dst: Arc<Presentation>,
    /// For every vertex, a permutation of `0..n` (residues mod the label
    /// order) with `table[0] == 0`.
    tables: Vec<Vec<u64>>,
}

impl CombinedBijection {
    /// Validates that both presentations share the graph, that the
    /// vertex groups are finite cyclic of equal order, and that each
    /// table is a permutation fixing the identity.
    pub fn new(
        src: &Arc<Presentation>,
        dst: &Arc<Presentation>,
        tables: Vec<Vec<u64>>,
    ) -> Result<CombinedBijection> {
        if src.graph() != dst.graph() {
            return Err(Error::InvalidInput(
                "combined bijections require identical defining graphs".to_owned(),
            ));
        }
        let n = src.graph().vertex_count();
        if tables.len() != n {
            return Err(Error::InvalidInput(format!(
                "{} letter tables for {} vertices",
                tables.len(),
                n
            )));
        }
        for v in 0..n {
            let (a, b) = (src.label(v), dst.label(v));
            let order = match (a.cardinality(), b.cardinality()) {
                (Some(x), Some(y)) if x == y => x,
                _ => {
                    return Err(Error::InvalidInput(format!(
                        "vertex {v}: labels {a} and {b} are not finite of equal order"
                    )))
                }
            };
            let t = &tables[v];
            if t.len() != order as usize {
                return Err(Error::InvalidInput(format!(
                    "vertex {v}: table length {} does not match order {order}",
                    t.len()
                )));
            }
            if t[0] != 0 {
                return Err(Error::InvalidInput(format!(
                    "vertex {v}: letter bijection must fix the identity"
                )));
            }
            let mut seen = vec![false; order as usize];
            for &img in t {
                if img >= order || seen[img as usize] {
                    return Err(Error::InvalidInput(format!(
                        "vertex {v}: letter table is not a bijection"
                    )));
                }
                seen[img as usize] = true;
            }
        }
        Ok(CombinedBijection {
            src: Arc::clone(src),
            dst: Arc::clone(dst),
            tables,
        })
    }

    /// The identity bijection between two presentations with equal finite
    /// cyclic labels.
    pub fn identity(src: &Arc<Presentation>, dst: &Arc<Presentation>) -> Result<CombinedBijection> {
        let tables = (0..src.graph().vertex_count())
            .map(|v| {
                let order = src.label(v).cardinality().unwrap_or(0);
                (0..order).collect()
            })
            .collect();
        CombinedBijection::new(src, dst, tables)
    }

    pub fn source(&self) -> &Arc<Presentation> {
        &self.src
    }

    pub fn destination(&self) -> &Arc<Presentation> {
        &self.dst
    }

    fn map_letter(&self, vertex: usize, letter: &Letter) -> Letter {
        let order = self
            .src
            .label(vertex)
            .cardinality()
            .expect("finite label checked at construction") as i64;
        let residue = match letter {
            Letter::Int(k) => k.rem_euclid(order) as usize,
            Letter::Word(_) => unreachable!("finite labels carry integer letters"),
        };
        let image = self.tables[vertex][residue] as i64;
        debug_assert!(image != 0, "nontrivial letters map to nontrivial letters");
        let mut r = image;
        if 2 * r > order {
            r -= order;
        }
        Letter::Int(r)
    }

    /// The image of an element: letters map through the per-vertex
    /// tables; the vertex pattern, hence reducedness and canonical order,
    /// is unchanged.
    pub fn apply(&self, x: &Element) -> Result<Element> {
        if !Arc::ptr_eq(x.presentation(), &self.src) && x.presentation() != &self.src {
            return Err(Error::PresentationMismatch);
        }
        let raw: Vec<(usize, Letter)> = x
            .word()
            .iter()
            .map(|s| (s.vertex, self.map_letter(s.vertex, &s.letter)))
            .collect();
        let image = Element::normalize(&self.dst, &raw)?;
        debug_assert_eq!(image.syllable_count(), x.syllable_count());
        Ok(image)
    }

    /// Image of a vertex-type parabolic: `θ(g G_v g⁻¹) = θ(g) H_v θ(g)⁻¹`.
    pub fn apply_vertex_parabolic(&self, p: &Parabolic) -> Result<Parabolic> {
        Ok(Parabolic::new(self.apply(p.conjugator())?, p.type_set()))
    }

    /// Image of a standard clique coset: `θ(g G_Υ) = θ(g) H_Υ`.
    pub fn apply_coset(&self, c: &CliqueCoset) -> Result<CliqueCoset> {
        Ok(CliqueCoset {
            rep: self.apply(&c.rep)?,
            clique: c.clique,
        })
    }
}

/// Serializable dump of an extension ball.
#[derive(Serialize)]
pub struct ExtensionBallDump {
    pub radius: u64,
    pub nodes: Vec<ExtensionNodeDump>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Serialize)]
pub struct ExtensionNodeDump {
    pub conjugator: String,
    pub vertex: String,
}

impl ExtensionBall {
    pub fn dump(&self) -> ExtensionBallDump {
        ExtensionBallDump {
            radius: self.radius,
            nodes: self
                .nodes
                .iter()
                .map(|p| ExtensionNodeDump {
                    conjugator: p.conjugator().to_string(),
                    vertex: self
                        .pres
                        .graph()
                        .name(p.type_set().min_vertex())
                        .to_owned(),
                })
                .collect(),
            edges: self.edges.clone(),
        }
    }
}

/// Serializable dump of a building ball.
#[derive(Serialize)]
pub struct BuildingBallDump {
    pub radius: u64,
    pub vertices: Vec<BuildingNodeDump>,
    pub edges: Vec<(usize, usize)>,
    pub cubes: Vec<BuildingCubeDump>,
}

#[derive(Serialize)]
pub struct BuildingNodeDump {
    pub coset: String,
    pub rank: usize,
    #[serde(rename = "type")]
    pub type_vertices: Vec<String>,
}

#[derive(Serialize)]
pub struct BuildingCubeDump {
    pub dim: u32,
    pub vertices: Vec<usize>,
}

impl BuildingBall {
    pub fn dump(&self) -> BuildingBallDump {
        let graph = self.pres.graph();
        BuildingBallDump {
            radius: self.radius,
            vertices: self
                .nodes
                .iter()
                .map(|c| BuildingNodeDump {
                    coset: c.rep.to_string(),
                    rank: c.rank(),
                    type_vertices: graph.set_names(c.clique),
                })
                .collect(),
            edges: self.edges.clone(),
            cubes: self
                .cubes
                .iter()
                .map(|c| BuildingCubeDump {
                    dim: c.dim,
                    vertices: c.vertices.clone(),
                })
                .collect(),
        }
    }
}
