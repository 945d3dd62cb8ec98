//! Combinatorics of graph products of groups.
//!
//! A graph product takes a finite simple graph `Γ` together with a group
//! `G_v` for every vertex, and forms the quotient of the free product of
//! the vertex groups by the relations making adjacent vertex groups
//! commute. Direct products (complete graphs) and free products (edgeless
//! graphs) are the two extremes; right-angled Artin and Coxeter groups sit
//! in between.
//!
//! The crate provides:
//!
//! * [`graph`] — finite simple graphs and the link/star/orthogonal
//!   calculus, join decompositions, and the vertex predicates
//!   (transvection-freeness, partial conjugations, strong reducedness).
//! * [`word`] — elements of a graph product as canonical reduced syllable
//!   words, with multiplication, word length, heads/tails, retractions and
//!   ball enumeration.
//! * [`parabolic`] — parabolic subgroups in canonical form: intersections,
//!   normalizers, membership, parabolic supports, and the product/factor
//!   taxonomy.
//! * [`complex`] — finite truncations of the extension graph and of the
//!   right-angled building, and bijections combined from per-vertex letter
//!   bijections.
//! * [`recognition`] — the zoom-in chains that recognize untransvectable
//!   vertex groups, and structural reports on product parabolics.
//! * [`enumerate`] — exhaustive enumeration of small graphs up to
//!   isomorphism, automorphism groups, and cliques (test and self-check
//!   support).
//! * [`dot`] — DOT emitters for graphs and complexes.

#![forbid(unsafe_code)]

pub mod complex;
pub mod dot;
pub mod enumerate;
mod error;
pub mod graph;
pub mod label;
pub mod parabolic;
pub mod recognition;
pub mod word;

pub use error::{Error, Result};
pub use graph::{SimpleGraph, VertexSet};
pub use label::VertexLabel;
pub use parabolic::Parabolic;
pub use word::{Element, Presentation, Syllable};
