//! Structural invariants checked against brute force on small instances.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use graphprod::complex::{building_ball, extension_ball};
use graphprod::enumerate::{automorphisms, graphs_up_to_isomorphism};
use graphprod::label::Letter;
use graphprod::recognition::q_property_report_on;
use graphprod::{Element, Parabolic, Presentation, SimpleGraph, VertexLabel, VertexSet};

fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}

fn z_pres(g: SimpleGraph, order: u64) -> Arc<Presentation> {
    Presentation::uniform(g, VertexLabel::Cyclic { order }).unwrap()
}

fn random_element(pres: &Arc<Presentation>, rng: &mut ChaCha8Rng, len: usize) -> Element {
    let n = pres.graph().vertex_count();
    let raw: Vec<(usize, Letter)> = (0..len)
        .map(|_| {
            let v = rng.gen_range(0..n);
            let letter = match pres.label(v) {
                VertexLabel::Cyclic { order: 0 } => Letter::Int(rng.gen_range(-3..=3)),
                VertexLabel::Cyclic { order } => Letter::Int(rng.gen_range(0..*order) as i64),
                VertexLabel::Free { rank } => {
                    let l = rng.gen_range(0..=2);
                    Letter::Word(
                        (0..l)
                            .map(|_| {
                                let g = rng.gen_range(1..=*rank) as i32;
                                if rng.gen_bool(0.5) {
                                    g
                                } else {
                                    -g
                                }
                            })
                            .collect(),
                    )
                }
                _ => unreachable!(),
            };
            (v, letter)
        })
        .collect();
    Element::normalize(pres, &raw).unwrap()
}

#[test]
fn untransvectable_set_is_automorphism_invariant() {
    for n in 1..=6 {
        for g in graphs_up_to_isomorphism(n) {
            let un = g.untransvectable_vertices();
            for perm in automorphisms(&g) {
                let image: VertexSet = un.iter().map(|v| perm[v]).collect();
                assert_eq!(image, un, "graph {g:?}, automorphism {perm:?}");
            }
        }
    }
}

#[test]
fn conjugation_is_length_subadditive() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let pres = Presentation::new(
        SimpleGraph::cycle(5),
        vec![
            VertexLabel::Cyclic { order: 0 },
            VertexLabel::Cyclic { order: 3 },
            VertexLabel::Free { rank: 2 },
            VertexLabel::Cyclic { order: 2 },
            VertexLabel::Cyclic { order: 0 },
        ],
    )
    .unwrap();
    for _ in 0..500 {
        let x = random_element(&pres, &mut rng, 5);
        let g = random_element(&pres, &mut rng, 4);
        let conj = x.conjugate(&g).unwrap();
        assert!(conj.word_length() <= x.word_length() + 2 * g.word_length());
    }
}

#[test]
fn length_of_conjugated_syllable_is_bounded_below() {
    // For z a nontrivial vertex letter and g, h whose heads avoid the
    // vertex group, z stays a syllable of g⁻¹·z·h and the length cannot
    // drop below the letter length.
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let presentations = vec![
        Presentation::new(
            SimpleGraph::edgeless(3),
            vec![
                VertexLabel::Cyclic { order: 0 },
                VertexLabel::Cyclic { order: 2 },
                VertexLabel::Free { rank: 2 },
            ],
        )
        .unwrap(),
        z_pres(SimpleGraph::cycle(5), 3),
    ];
    for pres in presentations {
        let n = pres.graph().vertex_count();
        let mut done = 0;
        while done < 500 {
            let v = rng.gen_range(0..n);
            let z = random_element(&pres, &mut rng, 1);
            if z.is_identity() || z.support() != VertexSet::single(v) {
                continue;
            }
            let g = random_element(&pres, &mut rng, 3);
            let h = random_element(&pres, &mut rng, 3);
            let head_hits_vertex =
                |e: &Element| e.head().iter().any(|s| s.vertex == v);
            if head_hits_vertex(&g) || head_hits_vertex(&h) {
                continue;
            }
            let product = g.inverse().multiply(&z).unwrap().multiply(&h).unwrap();
            let z_syllable = z.word()[0].clone();
            assert!(
                product.syllables().contains(&z_syllable),
                "z = {z}, g = {g}, h = {h}, product = {product}"
            );
            assert!(product.word_length() >= z.word_length());
            done += 1;
        }
    }
}

#[test]
fn conjugate_containment_forces_equality() {
    // A parabolic containing one of its conjugates equals it.
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for g in graphs_up_to_isomorphism(4) {
        let pres = z_pres(g, 2);
        for _ in 0..40 {
            let lambda: VertexSet = (0..pres.graph().vertex_count())
                .filter(|_| rng.gen_bool(0.5))
                .collect();
            let base = Parabolic::new(random_element(&pres, &mut rng, 2), lambda);
            let conj = base
                .conjugated_by(&random_element(&pres, &mut rng, 3))
                .unwrap();
            if base.contains(&conj).unwrap() {
                assert_eq!(base, conj);
            }
        }
    }
}

#[test]
fn parabolic_inside_product_splits_as_product_of_traces() {
    // Inside P = P₁ × P₂ every parabolic is the product of its
    // intersections with the two factors; at the type level the type is
    // the disjoint union of the traces.
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for g in graphs_up_to_isomorphism(5) {
        let all = g.vertices();
        let joins = g.maximal_join_subsets(all);
        if joins.is_empty() {
            continue;
        }
        let pres = z_pres(g.clone(), 2);
        for &j in joins.iter().take(2) {
            let parts = pres.graph().join_factors_within(j);
            if parts.len() < 2 {
                continue;
            }
            let p1 = Parabolic::standard(&pres, parts[0]);
            let p2 = Parabolic::standard(&pres, j.difference(parts[0]));
            for _ in 0..10 {
                let sub: VertexSet = j.iter().filter(|_| rng.gen_bool(0.5)).collect();
                let mut conj = Element::identity(&pres);
                for v in j.iter().take(2) {
                    if rng.gen_bool(0.5) {
                        conj = conj
                            .multiply(&Element::syllable(&pres, v, Letter::Int(1)).unwrap())
                            .unwrap();
                    }
                }
                let q = Parabolic::new(conj, sub);
                let t1 = q.intersect(&p1).unwrap();
                let t2 = q.intersect(&p2).unwrap();
                assert_eq!(
                    t1.type_set().union(t2.type_set()),
                    q.type_set(),
                    "graph {g:?}, join {j:?}, q {q:?}"
                );
                assert!(t1.type_set().intersection(t2.type_set()).is_empty());
            }
        }
    }
}

#[test]
fn untransvectable_vertex_groups_are_rigid_in_clique_normalizers() {
    // If star(v) sits inside Υ ∪ Υ⊥ for a clique Υ and untransvectable v,
    // then Υ = {v}.
    for n in 1..=6 {
        for g in graphs_up_to_isomorphism(n) {
            let un = g.untransvectable_vertices();
            for upsilon in g.vertices().subsets() {
                if upsilon.is_empty() || !g.is_clique(upsilon) {
                    continue;
                }
                let closure = upsilon.union(g.orthogonal(upsilon));
                for v in un.iter() {
                    if g.star(v).is_subset(closure) {
                        assert_eq!(
                            upsilon,
                            VertexSet::single(v),
                            "graph {g:?}, clique {upsilon:?}, vertex {v}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn canonicalize_and_intersect_are_idempotent_and_commutative() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    let pres = z_pres(SimpleGraph::cycle(5), 3);
    for _ in 0..60 {
        let a = Parabolic::new(
            random_element(&pres, &mut rng, 3),
            (0..5).filter(|_| rng.gen_bool(0.4)).collect(),
        );
        let b = Parabolic::new(
            random_element(&pres, &mut rng, 3),
            (0..5).filter(|_| rng.gen_bool(0.4)).collect(),
        );
        // Canonicalization is idempotent.
        assert_eq!(
            Parabolic::new(a.conjugator().clone(), a.type_set()),
            a.clone()
        );
        let ab = a.intersect(&b).unwrap();
        let ba = b.intersect(&a).unwrap();
        assert_eq!(ab, ba, "a = {a:?}, b = {b:?}");
        assert_eq!(a.intersect(&a).unwrap(), a);
        // The intersection is contained in both sides.
        assert!(a.contains(&ab).unwrap());
        assert!(b.contains(&ab).unwrap());
    }
}

#[test]
fn report_factors_partition_and_cofactors_intersect_to_clique_factor() {
    for n in 1..=6 {
        for g in graphs_up_to_isomorphism(n) {
            for type_set in g.vertices().subsets() {
                let report = q_property_report_on(&g, type_set);
                // Factors partition the type.
                let mut union = VertexSet::EMPTY;
                let mut total = 0;
                for &f in &report.factors {
                    union = union.union(f);
                    total += f.len();
                }
                assert_eq!(union, type_set);
                assert_eq!(total, type_set.len());
                // When co-factors exist their intersection is the clique
                // factor.
                if !report.clique_inclusive_cofactors.is_empty() {
                    let mut inter = type_set;
                    for &c in &report.clique_inclusive_cofactors {
                        inter = inter.intersection(c);
                    }
                    assert_eq!(inter, report.clique_factor);
                }
                // The full subproduct is never special; the empty one is
                // special exactly when the normalizer type is proper.
                assert!(!report.special_subproducts.contains(&type_set) || type_set.is_empty());
                if report.is_product {
                    let expected_empty_special = report.normalizer_type != g.vertices();
                    assert_eq!(
                        report.special_subproducts.contains(&VertexSet::EMPTY),
                        expected_empty_special
                    );
                }
            }
        }
    }
}

#[test]
fn extension_adjacency_matches_generator_commutation() {
    // Brute-force oracle: two vertex-type parabolics commute exactly when
    // all pairs of generators commute.
    for (graph, order) in [
        (SimpleGraph::cycle(4), 2),
        (SimpleGraph::path(3), 3),
        (SimpleGraph::edgeless(2), 2),
        (SimpleGraph::cycle(5), 2),
    ] {
        let pres = z_pres(graph, order);
        let ball = extension_ball(&pres, 2).unwrap();
        for i in 0..ball.nodes().len() {
            for j in i + 1..ball.nodes().len() {
                let a = &ball.nodes()[i];
                let b = &ball.nodes()[j];
                let commute = a
                    .generators()
                    .unwrap()
                    .iter()
                    .all(|x| {
                        b.generators().unwrap().iter().all(|y| {
                            x.multiply(y).unwrap() == y.multiply(x).unwrap()
                        })
                    });
                let edge = ball.edges().contains(&(i, j));
                assert_eq!(edge, commute && a != b, "nodes {a:?} and {b:?}");
            }
        }
    }
}

#[test]
fn building_orbits_tile_for_finite_groups() {
    // For complete graphs with finite labels the group is finite and a
    // large ball is the whole building: the fundamental domain meets each
    // type orbit once, and coset counts are index counts.
    for (graph, order) in [
        (SimpleGraph::complete(2), 2),
        (SimpleGraph::complete(2), 3),
        (SimpleGraph::complete(3), 2),
    ] {
        let pres = z_pres(graph, order);
        let radius = 12;
        let elements = pres.ball(radius).unwrap();
        assert_eq!(pres.ball(radius + 1).unwrap().len(), elements.len());
        let ball = building_ball(&pres, radius).unwrap();
        let domain = ball.fundamental_domain();
        for clique in pres.graph().cliques() {
            let in_domain = domain
                .iter()
                .filter(|&&i| ball.nodes()[i].clique == clique)
                .count();
            assert_eq!(in_domain, 1);
            let orbit_size = ball
                .nodes()
                .iter()
                .filter(|c| c.clique == clique)
                .count();
            let stabilizer_size = elements
                .iter()
                .filter(|e| e.support().is_subset(clique))
                .count();
            assert_eq!(orbit_size * stabilizer_size, elements.len());
        }
    }
}

#[test]
fn canonicalize_strips_exactly_the_star_of_a_vertex_type() {
    let pres = z_pres(SimpleGraph::cycle(5), 2);
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..100 {
        let g = random_element(&pres, &mut rng, 4);
        let v = rng.gen_range(0..5);
        let p = Parabolic::new(g.clone(), set(&[v]));
        // Different representatives of the same subgroup canonicalize
        // identically.
        let noise = pres.graph().star(v);
        for w in noise.iter() {
            let extra = Element::syllable(&pres, w, Letter::Int(1)).unwrap();
            let p2 = Parabolic::new(g.multiply(&extra).unwrap(), set(&[v]));
            assert_eq!(p, p2);
        }
    }
}
