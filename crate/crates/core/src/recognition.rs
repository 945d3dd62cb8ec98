//! Recognizing untransvectable vertex groups by zooming in.
//!
//! A vertex `v` is untransvectable exactly when the whole group admits a
//! descending chain that alternates between maximal product parabolics
//! and their factors and ends in the clique factor `G_v`. The thick
//! variant additionally routes each step through a thick free factor and
//! applies to strongly reduced graphs; both are searched here at the type
//! level, where conjugation invariance reduces the problem to induced
//! subgraphs.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexSet};
use crate::parabolic::Parabolic;

/// Which chain shape to search for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChainVariant {
    /// `G = F₀ ⊇ P₁ ⊇ F₁ ⊇ … ⊇ Pₙ ⊇ Fₙ = G_v`.
    Plain,
    /// `G = F₀ ⊇ L₁ ⊇ P₁ ⊇ F₁ ⊇ … ⊇ Lₙ ⊇ Pₙ ⊇ Fₙ = G_v` with each `Lⱼ`
    /// a thick free factor of non-clique type.
    Thick,
}

/// One descent step: optionally a thick free factor, then a maximal
/// product parabolic of it, then the chosen factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZoomStep {
    pub thick_factor: Option<VertexSet>,
    pub product: VertexSet,
    pub factor: VertexSet,
}

/// A witnessing chain of standard parabolic types descending from the
/// whole vertex set to a single vertex. The chain is empty exactly when
/// the whole graph is the single target vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZoomChain {
    pub variant: ChainVariant,
    pub target: usize,
    pub steps: Vec<ZoomStep>,
}

struct Search<'g> {
    graph: &'g SimpleGraph,
    target: usize,
    variant: ChainVariant,
    memo: HashMap<VertexSet, Option<Vec<ZoomStep>>>,
    max_joins: HashMap<VertexSet, Vec<VertexSet>>,
}

impl<'g> Search<'g> {
    fn maximal_joins(&mut self, within: VertexSet) -> &[VertexSet] {
        self.max_joins
            .entry(within)
            .or_insert_with(|| self.graph.maximal_join_subsets(within))
    }

    /// Chains descending from the standard parabolic on `from` to the
    /// target vertex, or `None`.
    fn descend(&mut self, from: VertexSet) -> Option<Vec<ZoomStep>> {
        if let Some(cached) = self.memo.get(&from) {
            return cached.clone();
        }
        self.memo.insert(from, None);
        let result = self.descend_uncached(from);
        self.memo.insert(from, result.clone());
        result
    }

    fn descend_uncached(&mut self, from: VertexSet) -> Option<Vec<ZoomStep>> {
        let v = self.target;
        let ambients: Vec<Option<VertexSet>> = match self.variant {
            ChainVariant::Plain => vec![None],
            ChainVariant::Thick => self
                .graph
                .components_within(from)
                .into_iter()
                .filter(|c| c.len() >= 2 && !self.graph.is_clique(*c) && c.contains(v))
                .map(Some)
                .collect(),
        };
        for ambient in ambients {
            let inside = ambient.unwrap_or(from);
            let products: Vec<VertexSet> = self
                .maximal_joins(inside)
                .iter()
                .copied()
                .filter(|p| p.contains(v))
                .collect();
            for product in products {
                if self.variant == ChainVariant::Plain
                    && self.graph.is_isolated_clique_within(inside, product)
                {
                    continue;
                }
                let clique_factor = self.graph.clique_factor_within(product);
                if clique_factor == VertexSet::single(v) {
                    return Some(vec![ZoomStep {
                        thick_factor: ambient,
                        product,
                        factor: clique_factor,
                    }]);
                }
                if clique_factor.is_empty() {
                    for factor in self.graph.join_factors_within(product) {
                        if factor.len() >= 2 && factor.contains(v) {
                            if let Some(mut rest) = self.descend(factor) {
                                rest.insert(
                                    0,
                                    ZoomStep {
                                        thick_factor: ambient,
                                        product,
                                        factor,
                                    },
                                );
                                return Some(rest);
                            }
                        }
                    }
                }
            }
        }
        None
    }
}

/// Searches for a chain recognizing `G_v`. For the thick variant the
/// graph must be strongly reduced and have at least two vertices.
pub fn find_zoom_chain(
    graph: &SimpleGraph,
    v: usize,
    variant: ChainVariant,
) -> Result<Option<ZoomChain>> {
    if v >= graph.vertex_count() {
        return Err(Error::UnknownVertex(v.to_string()));
    }
    if graph.vertex_count() > 12 {
        return Err(Error::InvalidInput(
            "chain search scans all vertex subsets and is limited to 12 vertices".to_owned(),
        ));
    }
    if variant == ChainVariant::Thick {
        if graph.vertex_count() < 2 {
            return Err(Error::InvalidInput(
                "thick chains require a graph on at least two vertices".to_owned(),
            ));
        }
        if !graph.is_strongly_reduced() {
            return Err(Error::InvalidInput(
                "thick chains require a strongly reduced graph".to_owned(),
            ));
        }
    }
    // Zero steps: the whole group already is the vertex group.
    if graph.vertices() == VertexSet::single(v) {
        return Ok(Some(ZoomChain {
            variant,
            target: v,
            steps: Vec::new(),
        }));
    }
    let mut search = Search {
        graph,
        target: v,
        variant,
        memo: HashMap::new(),
        max_joins: HashMap::new(),
    };
    Ok(search.descend(graph.vertices()).map(|steps| ZoomChain {
        variant,
        target: v,
        steps,
    }))
}

/// The vertices recognized by chain search. Must agree with the direct
/// untransvectability predicate on every valid input.
pub fn untransvectable_via_chains(graph: &SimpleGraph, variant: ChainVariant) -> Result<VertexSet> {
    let mut out = VertexSet::EMPTY;
    for v in 0..graph.vertex_count() {
        if find_zoom_chain(graph, v, variant)?.is_some() {
            out.insert(v);
        }
    }
    Ok(out)
}

/// Type-level condition used to finish thick chains at a clique type
/// `Υ`: every nontrivial subgroup of `G_Υ` has its normalizer inside
/// `N(G_Υ)`. Holds for a single vertex, and for a clique all of whose
/// vertices have star inside `Υ ∪ Υ⊥`.
pub fn normalizers_stay_inside(graph: &SimpleGraph, upsilon: VertexSet) -> bool {
    if upsilon.len() <= 1 {
        return true;
    }
    if !graph.is_clique(upsilon) {
        return false;
    }
    let closure = upsilon.union(graph.orthogonal(upsilon));
    upsilon.iter().all(|w| graph.star(w).is_subset(closure))
}

/// A structural report on a standard parabolic with type `type_set`,
/// computed at the type level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPropertyReport {
    pub type_set: VertexSet,
    /// The type splits as a nontrivial join.
    pub is_product: bool,
    /// The type is a maximal join subgraph of the whole graph.
    pub is_maximal_product: bool,
    /// The type is a connected component spanning a clique.
    pub isolated_clique: bool,
    pub clique_factor: VertexSet,
    pub clique_factor_trivial: bool,
    /// Irreducible factors: the clique factor (when nontrivial) followed
    /// by the non-singleton join factors.
    pub factors: Vec<VertexSet>,
    /// Subproducts `S` (unions of fully split factors) whose normalizer
    /// type strictly exceeds the normalizer type of the parabolic.
    pub special_subproducts: Vec<VertexSet>,
    pub clique_inclusive_cofactors: Vec<VertexSet>,
    pub thick_free_factors: Vec<VertexSet>,
    pub normalizer_type: VertexSet,
}

/// Builds the report for `p`'s type; conjugation-invariant.
pub fn q_property_report(p: &Parabolic) -> QPropertyReport {
    let graph = p.presentation().graph();
    q_property_report_on(graph, p.type_set())
}

pub fn q_property_report_on(graph: &SimpleGraph, type_set: VertexSet) -> QPropertyReport {
    let all = graph.vertices();
    let is_product = graph.is_join_within(type_set);
    let is_maximal_product = graph.maximal_join_subsets(all).contains(&type_set);
    let isolated_clique = !type_set.is_empty() && graph.is_isolated_clique_within(all, type_set);
    let clique_factor = graph.clique_factor_within(type_set);
    let join_factors = graph.join_factors_within(type_set);

    let mut factors = Vec::new();
    if !clique_factor.is_empty() {
        factors.push(clique_factor);
    }
    factors.extend(join_factors.iter().copied().filter(|f| f.len() >= 2));

    // Fully split factors: each clique-factor vertex separately, then the
    // irreducible non-singleton join factors.
    let mut split: Vec<VertexSet> = clique_factor.iter().map(VertexSet::single).collect();
    split.extend(join_factors.iter().copied().filter(|f| f.len() >= 2));

    let normalizer_type = type_set.union(graph.orthogonal(type_set));
    let mut special_subproducts = Vec::new();
    if is_product || type_set.len() == 1 {
        let k = split.len();
        for choice in 0u32..(1 << k) {
            let mut s = VertexSet::EMPTY;
            for (i, f) in split.iter().enumerate() {
                if choice & (1 << i) != 0 {
                    s = s.union(*f);
                }
            }
            if s == type_set {
                continue;
            }
            let s_normalizer = s.union(graph.orthogonal(s));
            if normalizer_type.is_proper_subset(s_normalizer) {
                special_subproducts.push(s);
            }
        }
        special_subproducts.sort();
        special_subproducts.dedup();
    }

    let clique_inclusive_cofactors = if is_product {
        join_factors
            .iter()
            .copied()
            .filter(|f| f.len() >= 2)
            .map(|f| type_set.difference(f))
            .collect()
    } else {
        Vec::new()
    };

    let thick_free_factors = graph
        .components_within(type_set)
        .into_iter()
        .filter(|c| c.len() >= 2)
        .collect();

    QPropertyReport {
        type_set,
        is_product,
        is_maximal_product,
        isolated_clique,
        clique_factor,
        clique_factor_trivial: clique_factor.is_empty(),
        factors,
        special_subproducts,
        clique_inclusive_cofactors,
        thick_free_factors,
        normalizer_type,
    }
}
