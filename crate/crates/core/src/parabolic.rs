//! Parabolic subgroups in canonical form.
//!
//! A parabolic subgroup is a conjugate `g G_Λ g⁻¹` of the standard
//! subgroup generated by the vertex groups of an induced subgraph `Λ`
//! (its type). Each parabolic has a unique conjugator whose tail contains
//! no syllable in `Λ ∪ Λ⊥`, so structural equality of the pair
//! `(conjugator, type)` is equality of subgroups.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::word::{Element, Presentation, Syllable};

/// A parabolic subgroup `conjugator · G_type · conjugator⁻¹` in canonical
/// form. The empty type is the trivial subgroup.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Parabolic {
    conjugator: Element,
    type_set: VertexSet,
}

impl Parabolic {
    /// Canonicalizes `(conjugator, lambda)`: strips tail syllables of the
    /// conjugator lying in `Λ ∪ Λ⊥` until none remain.
    pub fn new(conjugator: Element, lambda: VertexSet) -> Parabolic {
        let pres = Arc::clone(conjugator.presentation());
        let strip = lambda.union(pres.graph().orthogonal(lambda));
        let mut word: Vec<Syllable> = conjugator.word().to_vec();
        loop {
            let stripped = strip_one_tail(&pres, &mut word, strip);
            if !stripped {
                break;
            }
        }
        let raw: Vec<(usize, crate::label::Letter)> =
            word.into_iter().map(|s| (s.vertex, s.letter)).collect();
        let conjugator = Element::normalize(&pres, &raw).expect("valid syllables");
        Parabolic {
            conjugator,
            type_set: lambda,
        }
    }

    /// The standard parabolic `G_Λ`.
    pub fn standard(pres: &Arc<Presentation>, lambda: VertexSet) -> Parabolic {
        Parabolic {
            conjugator: Element::identity(pres),
            type_set: lambda,
        }
    }

    pub fn trivial(pres: &Arc<Presentation>) -> Parabolic {
        Parabolic::standard(pres, VertexSet::EMPTY)
    }

    pub fn whole_group(pres: &Arc<Presentation>) -> Parabolic {
        Parabolic::standard(pres, pres.graph().vertices())
    }

    pub fn conjugator(&self) -> &Element {
        &self.conjugator
    }

    /// The type `Λ` of the parabolic; uniquely determined by the subgroup.
    pub fn type_set(&self) -> VertexSet {
        self.type_set
    }

    pub fn is_trivial(&self) -> bool {
        self.type_set.is_empty()
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        self.conjugator.presentation()
    }

    pub fn is_standard(&self) -> bool {
        self.conjugator.is_identity()
    }

    /// The parabolic `g P g⁻¹`.
    pub fn conjugated_by(&self, g: &Element) -> Result<Parabolic> {
        Ok(Parabolic::new(
            g.multiply(&self.conjugator)?,
            self.type_set,
        ))
    }

    /// Membership of an element: `x ∈ g G_Λ g⁻¹` exactly when `g⁻¹ x g`
    /// is supported in `Λ`.
    pub fn member(&self, x: &Element) -> Result<bool> {
        let moved = self
            .conjugator
            .inverse()
            .multiply(x)?
            .multiply(&self.conjugator)?;
        Ok(moved.support().is_subset(self.type_set))
    }

    /// Exact containment `other ⊆ self`.
    pub fn contains(&self, other: &Parabolic) -> Result<bool> {
        // Transport by self's conjugator; then q ⊆ G_Λ holds exactly when
        // q's canonical conjugator is supported in Λ and its type lies in Λ.
        let k = self.conjugator.inverse().multiply(&other.conjugator)?;
        let q = Parabolic::new(k, other.type_set);
        Ok(q.type_set.is_subset(self.type_set)
            && q.conjugator.support().is_subset(self.type_set))
    }

    /// The normalizer `P × P⊥`: same conjugator, type `Λ ∪ Λ⊥`.
    pub fn normalizer(&self) -> Parabolic {
        let perp = self.presentation().graph().orthogonal(self.type_set);
        Parabolic::new(self.conjugator.clone(), self.type_set.union(perp))
    }

    /// The intersection of two parabolic subgroups, again parabolic.
    pub fn intersect(&self, other: &Parabolic) -> Result<Parabolic> {
        if !Arc::ptr_eq(self.presentation(), other.presentation())
            && self.presentation() != other.presentation()
        {
            return Err(Error::PresentationMismatch);
        }
        // Transport so the left side is standard: compute
        // G_Λ₁ ∩ g G_Λ₂ g⁻¹ and conjugate back.
        let g = self.conjugator.inverse().multiply(&other.conjugator)?;
        let inner = standard_intersection(self.presentation(), self.type_set, &g, other.type_set)?;
        Ok(Parabolic::new(
            self.conjugator.multiply(inner.conjugator())?,
            inner.type_set(),
        ))
    }

    /// Generators `ĝ s ĝ⁻¹` for `s` ranging over the standard generators
    /// of the vertex groups of the type.
    pub fn generators(&self) -> Result<Vec<Element>> {
        let pres = self.presentation();
        let mut out = Vec::new();
        for v in self.type_set.iter() {
            for letter in pres.label(v).generators()? {
                let s = Element::syllable(pres, v, letter)?;
                out.push(s.conjugate(&self.conjugator)?);
            }
        }
        Ok(out)
    }

    /// The minimal parabolic subgroup containing `x`: peel conjugating
    /// syllables while the syllable count drops by two, then take the
    /// standard parabolic on the support of what remains.
    pub fn support_of(x: &Element) -> Parabolic {
        let pres = Arc::clone(x.presentation());
        let mut conj = Element::identity(&pres);
        let mut cur = x.clone();
        'peel: loop {
            for s in cur.head() {
                let se = Element::syllable(&pres, s.vertex, s.letter.clone())
                    .expect("canonical syllable");
                let peeled = se.inverse().multiply(&cur).unwrap().multiply(&se).unwrap();
                if peeled.syllable_count() + 2 <= cur.syllable_count() {
                    conj = conj.multiply(&se).unwrap();
                    cur = peeled;
                    continue 'peel;
                }
            }
            break;
        }
        Parabolic::new(conj, cur.support())
    }

    /// The clique factor of the parabolic: the part of its type joined to
    /// every other vertex of the type.
    pub fn clique_factor(&self) -> Parabolic {
        let cf = self
            .presentation()
            .graph()
            .clique_factor_within(self.type_set);
        Parabolic::new(self.conjugator.clone(), cf)
    }

    /// The factors of the parabolic: the clique factor (when nontrivial)
    /// followed by the irreducible non-singleton join factors of the type.
    pub fn factors(&self) -> Vec<Parabolic> {
        let g = self.presentation().graph();
        let cf = g.clique_factor_within(self.type_set);
        let mut out = Vec::new();
        if !cf.is_empty() {
            out.push(Parabolic::new(self.conjugator.clone(), cf));
        }
        for f in g.join_factors_within(self.type_set) {
            if f.len() >= 2 {
                out.push(Parabolic::new(self.conjugator.clone(), f));
            }
        }
        out
    }

    /// The clique-inclusive co-factors `C₀ × F₁ × … × F̂_j × … × F_k`,
    /// one per non-clique factor. Empty when the type is a clique or not
    /// a product.
    pub fn clique_inclusive_cofactors(&self) -> Vec<Parabolic> {
        let g = self.presentation().graph();
        if !g.is_join_within(self.type_set) {
            return Vec::new();
        }
        let mut out = Vec::new();
        for f in g.join_factors_within(self.type_set) {
            if f.len() >= 2 {
                out.push(Parabolic::new(
                    self.conjugator.clone(),
                    self.type_set.difference(f),
                ));
            }
        }
        out
    }

    /// One parabolic per connected component of the type with at least
    /// two vertices.
    pub fn thick_free_factors(&self) -> Vec<Parabolic> {
        let g = self.presentation().graph();
        g.components_within(self.type_set)
            .into_iter()
            .filter(|c| c.len() >= 2)
            .map(|c| Parabolic::new(self.conjugator.clone(), c))
            .collect()
    }
}

fn strip_one_tail(pres: &Arc<Presentation>, word: &mut Vec<Syllable>, strip: VertexSet) -> bool {
    let g = pres.graph();
    'candidates: for i in (0..word.len()).rev() {
        if !strip.contains(word[i].vertex) {
            continue;
        }
        for j in i + 1..word.len() {
            if !g.adjacent(word[j].vertex, word[i].vertex) {
                continue 'candidates;
            }
        }
        word.remove(i);
        return true;
    }
    false
}

/// `G_Λ₁ ∩ g G_Λ₂ g⁻¹` for standard left side.
///
/// Reduce `g` in the double coset `G_Λ₁ · g · G_Λ₂`: head syllables in
/// `Λ₁` accumulate into the output conjugator, tail syllables in `Λ₂`
/// vanish into the inner group. Once `u` admits neither, the intersection
/// is `h G_Υ h⁻¹` with `Υ` the vertices of `Λ₁ ∩ Λ₂` whose link absorbs
/// every syllable of `u`.
fn standard_intersection(
    pres: &Arc<Presentation>,
    lambda1: VertexSet,
    g: &Element,
    lambda2: VertexSet,
) -> Result<Parabolic> {
    let graph = pres.graph();
    let mut h: Vec<(usize, crate::label::Letter)> = Vec::new();
    let mut u = g.clone();
    loop {
        let mut changed = false;
        for s in u.head() {
            if lambda1.contains(s.vertex) {
                let se = Element::syllable(pres, s.vertex, s.letter.clone())?;
                h.push((s.vertex, s.letter));
                u = se.inverse().multiply(&u)?;
                changed = true;
                break;
            }
        }
        if changed {
            continue;
        }
        for s in u.tail() {
            if lambda2.contains(s.vertex) {
                let se = Element::syllable(pres, s.vertex, s.letter.clone())?;
                u = u.multiply(&se.inverse())?;
                changed = true;
                break;
            }
        }
        if !changed {
            break;
        }
    }
    let usupp = u.support();
    let upsilon: VertexSet = lambda1
        .intersection(lambda2)
        .iter()
        .filter(|&v| usupp.is_subset(graph.link(v)))
        .collect();
    let conj = Element::normalize(pres, &h)?;
    Ok(Parabolic::new(conj, upsilon))
}

/// Whether `x ∈ G_A · G_B` for standard parabolics on `a` and `b`:
/// greedily strip head syllables lying in `A`, then test standard
/// membership in `G_B`.
pub fn member_of_product(x: &Element, a: VertexSet, b: VertexSet) -> bool {
    let pres = Arc::clone(x.presentation());
    let mut cur = x.clone();
    loop {
        let mut changed = false;
        for s in cur.head() {
            if a.contains(s.vertex) {
                let se = Element::syllable(&pres, s.vertex, s.letter.clone())
                    .expect("canonical syllable");
                cur = se.inverse().multiply(&cur).expect("same presentation");
                changed = true;
                break;
            }
        }
        if !changed {
            break;
        }
    }
    cur.support().is_subset(b)
}

/// A maximal product parabolic subgroup: an inclusion-maximal parabolic
/// splitting as a direct product of two nontrivial parabolics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalProduct {
    pub parabolic: Parabolic,
    /// Whether the type is a connected component of the graph spanning a
    /// clique.
    pub isolated_clique: bool,
}

/// The maximal product parabolics of the whole group, as standard
/// representatives sorted by type.
pub fn maximal_product_parabolics(pres: &Arc<Presentation>) -> Vec<MaximalProduct> {
    let g = pres.graph();
    let all = g.vertices();
    g.maximal_join_subsets(all)
        .into_iter()
        .map(|s| MaximalProduct {
            parabolic: Parabolic::standard(pres, s),
            isolated_clique: g.is_isolated_clique_within(all, s),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;
    use crate::label::{Letter, VertexLabel};

    fn c5_z2() -> Arc<Presentation> {
        Presentation::uniform(SimpleGraph::cycle(5), VertexLabel::Cyclic { order: 2 }).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn canonicalize_strips_tail() {
        let p = c5_z2();
        // Conjugator g3·g1 with Λ = {1}: g1 strips, g3 does not.
        let g31 = p.parse_word("3^1.1^1").unwrap();
        let par = Parabolic::new(g31, set(&[1]));
        assert_eq!(par.conjugator().to_string(), "3^1");

        let id = Element::identity(&p);
        let par = Parabolic::new(id, set(&[0, 2]));
        assert!(par.conjugator().is_identity());

        // Everything strips against the full graph.
        let any = p.parse_word("0^1.2^1.4^1").unwrap();
        let par = Parabolic::new(any, p.graph().vertices());
        assert!(par.conjugator().is_identity());
    }

    #[test]
    fn standard_intersections() {
        let p = c5_z2();
        let a = Parabolic::standard(&p, set(&[0, 1]));
        let b = Parabolic::standard(&p, set(&[1, 2]));
        let i = a.intersect(&b).unwrap();
        assert_eq!(i, Parabolic::standard(&p, set(&[1])));
        assert_eq!(a.intersect(&a).unwrap(), a);
    }

    #[test]
    fn conjugate_intersection_is_trivial() {
        let p = c5_z2();
        let g2 = p.parse_word("2^1").unwrap();
        let a = Parabolic::standard(&p, set(&[0]));
        let b = a.conjugated_by(&g2).unwrap();
        let i = a.intersect(&b).unwrap();
        assert!(i.is_trivial());
    }

    #[test]
    fn normalizers() {
        let p = c5_z2();
        let a = Parabolic::standard(&p, set(&[0]));
        assert_eq!(a.normalizer(), Parabolic::standard(&p, set(&[0, 1, 4])));
        let t = Parabolic::trivial(&p);
        assert_eq!(t.normalizer(), Parabolic::whole_group(&p));
        let k = Parabolic::whole_group(&p);
        assert_eq!(k.normalizer(), k);
    }

    #[test]
    fn membership_and_containment() {
        let p = c5_z2();
        let a = Parabolic::standard(&p, set(&[0, 1]));
        let x = p.parse_word("0^1.1^1.0^1").unwrap();
        assert!(a.member(&x).unwrap());
        let y = p.parse_word("2^1").unwrap();
        assert!(!a.member(&y).unwrap());
        assert!(a.normalizer().contains(&a).unwrap());

        let g2 = p.parse_word("2^1").unwrap();
        let conj0 = Parabolic::standard(&p, set(&[0])).conjugated_by(&g2).unwrap();
        assert!(!a.contains(&conj0).unwrap());
    }

    #[test]
    fn support_peels_conjugators() {
        let g = SimpleGraph::edgeless(2);
        let p = Presentation::uniform(g, VertexLabel::Cyclic { order: 0 }).unwrap();
        let x = p.parse_word("0^1.1^1.0^-1").unwrap();
        let s = Parabolic::support_of(&x);
        assert_eq!(s.type_set(), set(&[1]));
        assert_eq!(s.conjugator().to_string(), "0^1");

        assert!(Parabolic::support_of(&Element::identity(&p)).is_trivial());
        let single = p.parse_word("1^4").unwrap();
        let s = Parabolic::support_of(&single);
        assert!(s.is_standard());
        assert_eq!(s.type_set(), set(&[1]));
    }

    #[test]
    fn maximal_products_of_c5_are_stars() {
        let p = c5_z2();
        let maxes = maximal_product_parabolics(&p);
        assert_eq!(maxes.len(), 5);
        for m in &maxes {
            assert!(!m.isolated_clique);
            assert_eq!(m.parabolic.type_set().len(), 3);
        }
    }

    #[test]
    fn no_products_on_two_isolated_vertices() {
        let g = SimpleGraph::edgeless(2);
        let p = Presentation::uniform(g, VertexLabel::Cyclic { order: 0 }).unwrap();
        assert!(maximal_product_parabolics(&p).is_empty());
    }

    #[test]
    fn factor_taxonomy_on_c5_star() {
        let p = c5_z2();
        let star0 = Parabolic::standard(&p, set(&[0, 1, 4]));
        assert_eq!(star0.clique_factor().type_set(), set(&[0]));
        let factors = star0.factors();
        assert_eq!(factors.len(), 2);
        assert_eq!(factors[0].type_set(), set(&[0]));
        assert_eq!(factors[1].type_set(), set(&[1, 4]));
        let cof = star0.clique_inclusive_cofactors();
        assert_eq!(cof.len(), 1);
        assert_eq!(cof[0].type_set(), set(&[0]));
    }

    #[test]
    fn factor_taxonomy_on_cliques_and_squares() {
        let p = Presentation::uniform(SimpleGraph::complete(2), VertexLabel::Cyclic { order: 2 })
            .unwrap();
        let whole = Parabolic::whole_group(&p);
        assert_eq!(whole.clique_factor(), whole);
        assert!(whole.clique_inclusive_cofactors().is_empty());

        let p = Presentation::uniform(SimpleGraph::cycle(4), VertexLabel::Cyclic { order: 2 })
            .unwrap();
        let whole = Parabolic::whole_group(&p);
        assert!(whole.clique_factor().is_trivial());
        let factors = whole.factors();
        assert_eq!(factors.len(), 2);
        assert_eq!(factors[0].type_set(), set(&[0, 2]));
        assert_eq!(factors[1].type_set(), set(&[1, 3]));
        let cof = whole.clique_inclusive_cofactors();
        assert_eq!(cof.len(), 2);
        assert_eq!(cof[0].type_set(), set(&[1, 3]));
        assert_eq!(cof[1].type_set(), set(&[0, 2]));
    }

    #[test]
    fn thick_free_factor_examples() {
        let p = c5_z2();
        // C5 minus star(0) is the edge {2, 3}.
        let rest = Parabolic::standard(&p, set(&[2, 3]));
        let thick = rest.thick_free_factors();
        assert_eq!(thick.len(), 1);
        assert_eq!(thick[0].type_set(), set(&[2, 3]));

        let scattered = Parabolic::standard(&p, set(&[0, 2]));
        assert!(scattered.thick_free_factors().is_empty());
    }

    #[test]
    fn member_of_product_basics() {
        let g = SimpleGraph::edgeless(2);
        let p = Presentation::uniform(g, VertexLabel::Cyclic { order: 0 }).unwrap();
        let x = p.parse_word("0^2.1^3").unwrap();
        assert!(member_of_product(&x, set(&[0]), set(&[1])));
        assert!(!member_of_product(&x, set(&[1]), set(&[0])));
        let y = p.parse_word("1^1.0^1").unwrap();
        assert!(!member_of_product(&y, set(&[0]), set(&[1])));
    }
}
