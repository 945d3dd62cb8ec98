//! Elements of a graph product as canonical reduced syllable words.
//!
//! A word is reduced when no syllable is trivial and no two syllables at
//! the same vertex can be brought together by swapping adjacent-vertex
//! neighbors. Reduced words representing the same element differ by such
//! swaps only, so we fix one representative: repeatedly emit, among the
//! syllables that can be shuffled to the front, the one at the smallest
//! vertex index. Equality of elements is then equality of words.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexSet};
use crate::label::{Letter, VertexLabel};

/// One syllable: a nontrivial letter of the vertex group at `vertex`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Syllable {
    pub vertex: usize,
    pub letter: Letter,
}

/// A graph together with a vertex label for every vertex.
#[derive(Debug, PartialEq, Eq)]
pub struct Presentation {
    graph: SimpleGraph,
    labels: Vec<VertexLabel>,
}

impl Presentation {
    pub fn new(graph: SimpleGraph, labels: Vec<VertexLabel>) -> Result<Arc<Presentation>> {
        if labels.len() != graph.vertex_count() {
            return Err(Error::InvalidLabel(format!(
                "{} labels for {} vertices",
                labels.len(),
                graph.vertex_count()
            )));
        }
        for l in &labels {
            l.validate()?;
        }
        Ok(Arc::new(Presentation { graph, labels }))
    }

    /// Convenience constructor with the same label at every vertex.
    pub fn uniform(graph: SimpleGraph, label: VertexLabel) -> Result<Arc<Presentation>> {
        let n = graph.vertex_count();
        Presentation::new(graph, vec![label; n])
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn label(&self, v: usize) -> &VertexLabel {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn all_arithmetic(&self) -> bool {
        self.labels.iter().all(|l| l.is_arithmetic())
    }

    pub fn all_finite(&self) -> bool {
        self.labels.iter().all(|l| l.is_finite())
    }
}

/// An element of a graph product, stored as its canonical reduced word.
#[derive(Clone)]
pub struct Element {
    pres: Arc<Presentation>,
    word: Vec<Syllable>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word
    }
}
impl Eq for Element {}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word.cmp(&other.word)
    }
}

impl std::hash::Hash for Element {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.word.hash(state);
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

fn same_presentation(a: &Arc<Presentation>, b: &Arc<Presentation>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl Element {
    pub fn identity(pres: &Arc<Presentation>) -> Element {
        Element {
            pres: Arc::clone(pres),
            word: Vec::new(),
        }
    }

    /// A single-syllable element; errors when the label rejects
    /// arithmetic, the letter is out of range, or the letter is trivial.
    pub fn syllable(pres: &Arc<Presentation>, vertex: usize, letter: Letter) -> Result<Element> {
        if vertex >= pres.graph.vertex_count() {
            return Err(Error::UnknownVertex(vertex.to_string()));
        }
        match pres.labels[vertex].canonical_letter(&letter)? {
            None => Ok(Element::identity(pres)),
            Some(l) => Ok(Element {
                pres: Arc::clone(pres),
                word: vec![Syllable { vertex, letter: l }],
            }),
        }
    }

    /// The canonical element represented by an arbitrary syllable
    /// sequence. Identity letters are dropped, same-vertex neighbors
    /// merged, and the result is put in canonical order. Idempotent.
    pub fn normalize(pres: &Arc<Presentation>, raw: &[(usize, Letter)]) -> Result<Element> {
        let mut word: Vec<Syllable> = Vec::with_capacity(raw.len());
        for (vertex, letter) in raw {
            if *vertex >= pres.graph.vertex_count() {
                return Err(Error::UnknownVertex(vertex.to_string()));
            }
            let canonical = pres.labels[*vertex].canonical_letter(letter)?;
            if let Some(l) = canonical {
                push_reduce(pres, &mut word, Syllable { vertex: *vertex, letter: l });
            }
        }
        Ok(Element {
            pres: Arc::clone(pres),
            word: canonical_order(&pres.graph, word),
        })
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn word(&self) -> &[Syllable] {
        &self.word
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn syllable_count(&self) -> usize {
        self.word.len()
    }

    /// Vertices appearing in the word.
    pub fn support(&self) -> VertexSet {
        self.word.iter().map(|s| s.vertex).collect()
    }

    /// Word length in the standard generating set: the sum of the letter
    /// lengths of the syllables. Equal for all reduced representatives.
    pub fn word_length(&self) -> u64 {
        self.word
            .iter()
            .map(|s| self.pres.labels[s.vertex].letter_len(&s.letter))
            .sum()
    }

    pub fn multiply(&self, other: &Element) -> Result<Element> {
        if !same_presentation(&self.pres, &other.pres) {
            return Err(Error::PresentationMismatch);
        }
        let mut word = self.word.clone();
        for s in &other.word {
            push_reduce(&self.pres, &mut word, s.clone());
        }
        Ok(Element {
            pres: Arc::clone(&self.pres),
            word: canonical_order(&self.pres.graph, word),
        })
    }

    pub fn inverse(&self) -> Element {
        let word: Vec<Syllable> = self
            .word
            .iter()
            .rev()
            .map(|s| Syllable {
                vertex: s.vertex,
                letter: self.pres.labels[s.vertex].inverse(&s.letter),
            })
            .collect();
        Element {
            pres: Arc::clone(&self.pres),
            word: canonical_order(&self.pres.graph, word),
        }
    }

    /// `by · self · by⁻¹`.
    pub fn conjugate(&self, by: &Element) -> Result<Element> {
        by.multiply(self)?.multiply(&by.inverse())
    }

    /// Syllables that can be shuffled to the front: every earlier syllable
    /// sits at an adjacent vertex. Representative-independent.
    pub fn head(&self) -> Vec<Syllable> {
        self.movable(true)
    }

    /// Syllables that can be shuffled to the back.
    pub fn tail(&self) -> Vec<Syllable> {
        self.movable(false)
    }

    fn movable(&self, front: bool) -> Vec<Syllable> {
        let g = &self.pres.graph;
        let mut out = Vec::new();
        for (i, s) in self.word.iter().enumerate() {
            let blocked = if front {
                self.word[..i].iter().any(|t| !g.adjacent(t.vertex, s.vertex))
            } else {
                self.word[i + 1..]
                    .iter()
                    .any(|t| !g.adjacent(t.vertex, s.vertex))
            };
            if !blocked {
                out.push(s.clone());
            }
        }
        out.sort();
        out
    }

    /// The multiset of syllables of any reduced representative.
    pub fn syllables(&self) -> Vec<Syllable> {
        let mut out = self.word.clone();
        out.sort();
        out
    }

    /// Deletes every syllable at a vertex outside `lambda`. A group
    /// homomorphism onto the standard parabolic on `lambda`.
    pub fn retract(&self, lambda: VertexSet) -> Element {
        let mut word = Vec::new();
        for s in &self.word {
            if lambda.contains(s.vertex) {
                push_reduce(&self.pres, &mut word, s.clone());
            }
        }
        Element {
            pres: Arc::clone(&self.pres),
            word: canonical_order(&self.pres.graph, word),
        }
    }
}

/// Appends `s` to the reduced word `word`, keeping it reduced: scan
/// backwards over syllables at adjacent vertices; merge with a reachable
/// same-vertex syllable, dropping it if the letters cancel.
pub(crate) fn push_reduce(pres: &Presentation, word: &mut Vec<Syllable>, s: Syllable) {
    let g = &pres.graph;
    let mut i = word.len();
    while i > 0 {
        let t = &word[i - 1];
        if t.vertex == s.vertex {
            match pres.labels[s.vertex].mul(&t.letter, &s.letter) {
                None => {
                    word.remove(i - 1);
                }
                Some(l) => word[i - 1].letter = l,
            }
            return;
        }
        if !g.adjacent(t.vertex, s.vertex) {
            break;
        }
        i -= 1;
    }
    word.push(s);
}

/// Puts a reduced word in canonical order: repeatedly emit the
/// front-movable syllable with the smallest vertex index. At most one
/// syllable per vertex is front-movable in a reduced word, so the choice
/// is unambiguous.
pub(crate) fn canonical_order(g: &SimpleGraph, mut word: Vec<Syllable>) -> Vec<Syllable> {
    let mut out = Vec::with_capacity(word.len());
    while !word.is_empty() {
        let mut best: Option<usize> = None;
        'candidates: for i in 0..word.len() {
            for j in 0..i {
                if !g.adjacent(word[j].vertex, word[i].vertex) {
                    continue 'candidates;
                }
            }
            if best.map_or(true, |b| word[i].vertex < word[b].vertex) {
                best = Some(i);
            }
        }
        out.push(word.remove(best.expect("nonempty word has a front-movable syllable")));
    }
    out
}

impl Presentation {
    /// All canonical elements of word length at most `radius`, sorted.
    ///
    /// Requires arithmetic labels; infinite cyclic and free labels are
    /// enumerated within the radius bound.
    pub fn ball(self: &Arc<Self>, radius: u64) -> Result<Vec<Element>> {
        for l in &self.labels {
            if !l.is_arithmetic() {
                return Err(Error::NonEnumerable(format!(
                    "label {l} admits no element enumeration"
                )));
            }
        }
        let mut gens = Vec::new();
        for v in 0..self.graph.vertex_count() {
            for letter in self.labels[v].generators()? {
                gens.push(Element::syllable(self, v, letter)?);
            }
        }
        let mut seen: BTreeSet<Element> = BTreeSet::new();
        seen.insert(Element::identity(self));
        let mut frontier: Vec<Element> = vec![Element::identity(self)];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for x in &frontier {
                for gen in &gens {
                    let y = x.multiply(gen)?;
                    if y.word_length() <= radius && !seen.contains(&y) {
                        seen.insert(y.clone());
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        let mut out: Vec<Element> = seen.into_iter().collect();
        out.sort_by_key(|e| (e.word_length(), e.word.clone()));
        Ok(out)
    }

    /// Parses the textual syllable syntax: `.`-separated tokens, each
    /// `v^e` for a cyclic-label vertex or `v[xY]` for a free-label vertex
    /// (lowercase generators `x y z u v w`, uppercase inverses). A bare
    /// vertex name abbreviates `v^1`.
    pub fn parse_word(self: &Arc<Self>, text: &str) -> Result<Element> {
        let text = text.trim();
        if text.is_empty() || text == "e" {
            return Ok(Element::identity(self));
        }
        let mut raw = Vec::new();
        for token in text.split('.') {
            let token = token.trim();
            if token.is_empty() {
                return Err(Error::Parse("empty syllable token".to_owned()));
            }
            raw.push(parse_token(self, token)?);
        }
        Element::normalize(self, &raw)
    }
}

const FREE_GENERATOR_NAMES: &[char] = &['x', 'y', 'z', 'u', 'v', 'w'];

fn parse_token(pres: &Presentation, token: &str) -> Result<(usize, Letter)> {
    if let Some(open) = token.find('[') {
        let close = token
            .rfind(']')
            .ok_or_else(|| Error::Parse(format!("unclosed `[` in `{token}`")))?;
        if close != token.len() - 1 {
            return Err(Error::Parse(format!("trailing text after `]` in `{token}`")));
        }
        let v = pres.graph.vertex_index(&token[..open])?;
        let mut gens = Vec::new();
        for c in token[open + 1..close].chars() {
            if c.is_whitespace() {
                continue;
            }
            let lower = c.to_ascii_lowercase();
            let idx = FREE_GENERATOR_NAMES
                .iter()
                .position(|&g| g == lower)
                .ok_or_else(|| Error::Parse(format!("unknown free generator `{c}`")))?
                as i32
                + 1;
            gens.push(if c.is_ascii_uppercase() { -idx } else { idx });
        }
        Ok((v, Letter::Word(gens)))
    } else if let Some(caret) = token.rfind('^') {
        let v = pres.graph.vertex_index(&token[..caret])?;
        let e: i64 = token[caret + 1..]
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent in `{token}`")))?;
        Ok((v, Letter::Int(e)))
    } else {
        let v = pres.graph.vertex_index(token)?;
        match pres.labels[v] {
            VertexLabel::Free { .. } => Ok((v, Letter::Word(vec![1]))),
            _ => Ok((v, Letter::Int(1))),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e");
        }
        let mut first = true;
        for s in &self.word {
            if !first {
                write!(f, ".")?;
            }
            first = false;
            let name = self.pres.graph.name(s.vertex);
            match &s.letter {
                Letter::Int(k) => write!(f, "{name}^{k}")?,
                Letter::Word(w) => {
                    write!(f, "{name}[")?;
                    for &g in w {
                        let c = FREE_GENERATOR_NAMES[(g.unsigned_abs() - 1) as usize];
                        if g < 0 {
                            write!(f, "{}", c.to_ascii_uppercase())?;
                        } else {
                            write!(f, "{c}")?;
                        }
                    }
                    write!(f, "]")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge_z() -> Arc<Presentation> {
        let g = SimpleGraph::new(&["a", "b"], &[("a", "b")]).unwrap();
        Presentation::uniform(g, VertexLabel::Cyclic { order: 0 }).unwrap()
    }

    fn free_product_z() -> Arc<Presentation> {
        let g = SimpleGraph::new(&["a", "b"], &[]).unwrap();
        Presentation::uniform(g, VertexLabel::Cyclic { order: 0 }).unwrap()
    }

    #[test]
    fn normalize_commutes_adjacent_vertices() {
        let p = edge_z();
        let x = Element::normalize(&p, &[(1, Letter::Int(1)), (0, Letter::Int(2))]).unwrap();
        assert_eq!(x.to_string(), "a^2.b^1");
    }

    #[test]
    fn normalize_merges_and_cancels() {
        let p = free_product_z();
        let x = Element::normalize(
            &p,
            &[
                (0, Letter::Int(1)),
                (0, Letter::Int(2)),
                (1, Letter::Int(0)),
                (0, Letter::Int(-3)),
            ],
        )
        .unwrap();
        assert!(x.is_identity());
    }

    #[test]
    fn normalize_commutes_then_cancels() {
        // In C5 with Z/2 labels, g0 g1 g0 = g1 because 0 and 1 are adjacent.
        let g = SimpleGraph::cycle(5);
        let p = Presentation::uniform(g, VertexLabel::Cyclic { order: 2 }).unwrap();
        let x = Element::normalize(
            &p,
            &[(0, Letter::Int(1)), (1, Letter::Int(1)), (0, Letter::Int(1))],
        )
        .unwrap();
        assert_eq!(x.word().len(), 1);
        assert_eq!(x.word()[0].vertex, 1);
    }

    #[test]
    fn normalize_is_idempotent() {
        let p = free_product_z();
        let x = Element::normalize(
            &p,
            &[(0, Letter::Int(1)), (1, Letter::Int(1)), (0, Letter::Int(-1))],
        )
        .unwrap();
        let raw: Vec<(usize, Letter)> =
            x.word().iter().map(|s| (s.vertex, s.letter.clone())).collect();
        assert_eq!(Element::normalize(&p, &raw).unwrap(), x);
    }

    #[test]
    fn product_and_inverse() {
        let p = free_product_z();
        let a = Element::syllable(&p, 0, Letter::Int(1)).unwrap();
        let b = Element::syllable(&p, 1, Letter::Int(1)).unwrap();
        let ab = a.multiply(&b).unwrap();
        assert_eq!(ab.syllable_count(), 2);
        assert!(ab.multiply(&ab.inverse()).unwrap().is_identity());
        let a5 = Element::syllable(&p, 0, Letter::Int(5)).unwrap();
        let conj = a5.conjugate(&b).unwrap();
        assert_eq!(conj.to_string(), "b^1.a^5.b^-1");
        assert_eq!(conj.word_length(), 7);
    }

    #[test]
    fn word_lengths() {
        let p = free_product_z();
        assert_eq!(Element::identity(&p).word_length(), 0);
        let a5 = Element::syllable(&p, 0, Letter::Int(5)).unwrap();
        assert_eq!(a5.word_length(), 5);
    }

    #[test]
    fn heads_and_tails() {
        let p = free_product_z();
        let x = p.parse_word("a^1.b^1.a^-1").unwrap();
        assert_eq!(
            x.head(),
            vec![Syllable { vertex: 0, letter: Letter::Int(1) }]
        );
        assert_eq!(
            x.tail(),
            vec![Syllable { vertex: 0, letter: Letter::Int(-1) }]
        );
        let p2 = edge_z();
        let y = p2.parse_word("a^2.b^1").unwrap();
        assert_eq!(y.head().len(), 2);
        assert!(Element::identity(&p2).head().is_empty());
    }

    #[test]
    fn retraction_examples() {
        let p = free_product_z();
        let x = p.parse_word("a^1.b^1.a^1").unwrap();
        assert_eq!(x.retract(p.graph().vertices()), x);
        let r = x.retract(VertexSet::single(0));
        assert_eq!(r.to_string(), "a^2");
    }

    #[test]
    fn ball_counts() {
        let g = SimpleGraph::new(&["a", "b"], &[("a", "b")]).unwrap();
        let p = Presentation::uniform(g, VertexLabel::Cyclic { order: 2 }).unwrap();
        assert_eq!(p.ball(2).unwrap().len(), 4);

        // Infinite dihedral: alternating words, two per positive length.
        let g = SimpleGraph::new(&["a", "b"], &[]).unwrap();
        let p = Presentation::uniform(g, VertexLabel::Cyclic { order: 2 }).unwrap();
        let expected = 1 + 2 * 3;
        assert_eq!(p.ball(3).unwrap().len(), expected);

        assert_eq!(free_product_z().ball(0).unwrap().len(), 1);
    }

    #[test]
    fn ball_rejects_opaque_labels() {
        let g = SimpleGraph::edgeless(1);
        let p = Presentation::uniform(g, VertexLabel::Opaque { tag: "A".into() }).unwrap();
        assert!(matches!(p.ball(1), Err(Error::NonEnumerable(_))));
    }

    #[test]
    fn parse_and_display_round_trip() {
        let g = SimpleGraph::new(&["a", "b"], &[]).unwrap();
        let p = Presentation::new(
            g,
            vec![VertexLabel::Free { rank: 2 }, VertexLabel::Cyclic { order: 0 }],
        )
        .unwrap();
        let x = p.parse_word("a[xY].b^2.a[x]").unwrap();
        assert_eq!(x.to_string(), "a[xY].b^2.a[x]");
        assert!(p.parse_word("a^1.q^2").is_err());
        let id = p.parse_word("b^1.b^-1").unwrap();
        assert_eq!(id.to_string(), "e");
    }

    #[test]
    fn retract_is_homomorphism_on_samples() {
        use rand::{Rng, SeedableRng};
        let g = SimpleGraph::cycle(4);
        let p = Presentation::uniform(g, VertexLabel::Cyclic { order: 3 }).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let lambda: VertexSet = [0usize, 1].into_iter().collect();
        for _ in 0..200 {
            let raw: Vec<(usize, Letter)> = (0..6)
                .map(|_| (rng.gen_range(0..4), Letter::Int(rng.gen_range(1..3))))
                .collect();
            let x = Element::normalize(&p, &raw[..3]).unwrap();
            let y = Element::normalize(&p, &raw[3..]).unwrap();
            let lhs = x.multiply(&y).unwrap().retract(lambda);
            let rhs = x.retract(lambda).multiply(&y.retract(lambda)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
