//! Exhaustive enumeration of small graphs and their symmetries.
//!
//! Supports the self-check suites: all graphs on up to eight vertices up
//! to isomorphism, generated by vertex augmentation with canonical-form
//! deduplication, and brute-force automorphism groups.

use std::collections::BTreeSet;

use crate::graph::{SimpleGraph, VertexSet};

/// A canonical key for isomorphism classes: the sorted degree sequence
/// together with the minimal edge bitmask over all degree-compatible
/// relabelings.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CanonicalKey {
    degrees: Vec<u8>,
    edge_mask: u64,
}

fn pair_bit(n: usize, i: usize, j: usize) -> u32 {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    let before: usize = (0..i).map(|r| n - r - 1).sum();
    (before + (j - i - 1)) as u32
}

fn edge_mask_under(g: &SimpleGraph, perm: &[usize]) -> u64 {
    let n = g.vertex_count();
    let mut mask = 0u64;
    for (i, j) in g.edges() {
        mask |= 1u64 << pair_bit(n, perm[i], perm[j]);
    }
    mask
}

fn perms_matching_slots(degs: &[usize], slot_degree: &[usize]) -> Vec<Vec<usize>> {
    let n = degs.len();
    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        v: usize,
        degs: &[usize],
        slot_degree: &[usize],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = degs.len();
        if v == n {
            out.push(perm.clone());
            return;
        }
        for p in 0..n {
            if !used[p] && slot_degree[p] == degs[v] {
                used[p] = true;
                perm[v] = p;
                rec(v + 1, degs, slot_degree, perm, used, out);
                used[p] = false;
            }
        }
        perm[v] = usize::MAX;
    }
    rec(0, degs, slot_degree, &mut perm, &mut used, &mut out);
    out
}

/// The canonical key of a graph's isomorphism class.
pub fn canonical_key(g: &SimpleGraph) -> CanonicalKey {
    let n = g.vertex_count();
    let degs: Vec<usize> = (0..n).map(|v| g.link(v).len()).collect();
    let mut sorted = degs.clone();
    sorted.sort_unstable();
    let mut best = u64::MAX;
    for perm in perms_matching_slots(&degs, &sorted) {
        let mask = edge_mask_under(g, &perm);
        if mask < best {
            best = mask;
        }
    }
    CanonicalKey {
        degrees: sorted.iter().map(|&d| d as u8).collect(),
        edge_mask: best,
    }
}

/// All graphs on exactly `n` vertices up to isomorphism, vertices named
/// `0..n-1`, in a deterministic order. Intended for `n ≤ 8`.
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<SimpleGraph> {
    assert!((1..=8).contains(&n), "enumeration supports 1..=8 vertices");
    let mut current = vec![SimpleGraph::edgeless(1)];
    for size in 2..=n {
        let mut seen: BTreeSet<CanonicalKey> = BTreeSet::new();
        let mut next = Vec::new();
        for g in &current {
            let prev = size - 1;
            for subset in VertexSet::full(prev).subsets() {
                let mut edges = g.edges();
                for v in subset.iter() {
                    edges.push((v, prev));
                }
                let candidate = SimpleGraph::from_index_edges(size, &edges);
                if seen.insert(canonical_key(&candidate)) {
                    next.push(candidate);
                }
            }
        }
        next.sort_by_key(canonical_key);
        current = next;
    }
    current
}

/// Brute-force automorphism group of a small graph, as vertex
/// permutations.
pub fn automorphisms(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let degs: Vec<usize> = (0..n).map(|v| g.link(v).len()).collect();
    perms_matching_slots(&degs, &degs)
        .into_iter()
        .filter(|perm| {
            (0..n).all(|i| (i + 1..n).all(|j| g.adjacent(i, j) == g.adjacent(perm[i], perm[j])))
        })
        .collect()
}
