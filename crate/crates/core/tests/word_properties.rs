//! Property tests for the word calculus.

use std::sync::Arc;

use proptest::prelude::*;

use graphprod::label::Letter;
use graphprod::{Element, Presentation, SimpleGraph, VertexLabel};

fn pentagon_z3() -> Arc<Presentation> {
    Presentation::uniform(SimpleGraph::cycle(5), VertexLabel::Cyclic { order: 3 }).unwrap()
}

fn mixed_square() -> Arc<Presentation> {
    Presentation::new(
        SimpleGraph::cycle(4),
        vec![
            VertexLabel::Cyclic { order: 0 },
            VertexLabel::Free { rank: 2 },
            VertexLabel::Cyclic { order: 2 },
            VertexLabel::Cyclic { order: 4 },
        ],
    )
    .unwrap()
}

fn raw_word(pres: &Arc<Presentation>) -> impl Strategy<Value = Vec<(usize, Letter)>> {
    let n = pres.graph().vertex_count();
    let labels: Vec<VertexLabel> = pres.labels().to_vec();
    prop::collection::vec((0..n, -4i64..=4), 0..8).prop_map(move |pairs| {
        pairs
            .into_iter()
            .map(|(v, k)| {
                let letter = match &labels[v] {
                    VertexLabel::Free { .. } => {
                        let gens = match k.rem_euclid(5) {
                            0 => vec![],
                            1 => vec![1],
                            2 => vec![-1],
                            3 => vec![2],
                            _ => vec![1, 2],
                        };
                        Letter::Word(gens)
                    }
                    _ => Letter::Int(k),
                };
                (v, letter)
            })
            .collect()
    })
}

proptest! {
    #[test]
    fn group_axioms_on_pentagon(
        a in raw_word(&pentagon_z3()),
        b in raw_word(&pentagon_z3()),
        c in raw_word(&pentagon_z3()),
    ) {
        let p = pentagon_z3();
        let x = Element::normalize(&p, &a).unwrap();
        let y = Element::normalize(&p, &b).unwrap();
        let z = Element::normalize(&p, &c).unwrap();
        prop_assert_eq!(
            x.multiply(&y).unwrap().multiply(&z).unwrap(),
            x.multiply(&y.multiply(&z).unwrap()).unwrap()
        );
        prop_assert!(x.multiply(&x.inverse()).unwrap().is_identity());
        prop_assert_eq!(
            x.multiply(&y).unwrap().inverse(),
            y.inverse().multiply(&x.inverse()).unwrap()
        );
    }

    #[test]
    fn group_axioms_on_mixed_labels(
        a in raw_word(&mixed_square()),
        b in raw_word(&mixed_square()),
        c in raw_word(&mixed_square()),
    ) {
        let p = mixed_square();
        let x = Element::normalize(&p, &a).unwrap();
        let y = Element::normalize(&p, &b).unwrap();
        let z = Element::normalize(&p, &c).unwrap();
        prop_assert_eq!(
            x.multiply(&y).unwrap().multiply(&z).unwrap(),
            x.multiply(&y.multiply(&z).unwrap()).unwrap()
        );
        prop_assert!(x.inverse().multiply(&x).unwrap().is_identity());
    }

    #[test]
    fn swaps_of_adjacent_syllables_do_not_change_the_element(
        a in raw_word(&pentagon_z3()),
        picks in prop::collection::vec(0usize..32, 0..12),
    ) {
        let p = pentagon_z3();
        let x = Element::normalize(&p, &a).unwrap();
        let mut word: Vec<(usize, Letter)> = x
            .word()
            .iter()
            .map(|s| (s.vertex, s.letter.clone()))
            .collect();
        for pick in picks {
            if word.len() < 2 {
                break;
            }
            let i = pick % (word.len() - 1);
            if p.graph().adjacent(word[i].0, word[i + 1].0) {
                word.swap(i, i + 1);
            }
        }
        prop_assert_eq!(Element::normalize(&p, &word).unwrap(), x);
    }

    #[test]
    fn word_length_is_invariant_under_inverse(a in raw_word(&mixed_square())) {
        let p = mixed_square();
        let x = Element::normalize(&p, &a).unwrap();
        prop_assert_eq!(x.word_length(), x.inverse().word_length());
        prop_assert_eq!(x.syllable_count(), x.inverse().syllable_count());
    }

    #[test]
    fn head_and_tail_are_inverse_images(a in raw_word(&pentagon_z3())) {
        let p = pentagon_z3();
        let x = Element::normalize(&p, &a).unwrap();
        let inv = x.inverse();
        let mut inverted_tail: Vec<_> = x
            .tail()
            .into_iter()
            .map(|s| graphprod::Syllable {
                vertex: s.vertex,
                letter: p.label(s.vertex).inverse(&s.letter),
            })
            .collect();
        inverted_tail.sort();
        prop_assert_eq!(inv.head(), inverted_tail);
    }
}
