//! Vertex-group descriptors and letter arithmetic.
//!
//! A label describes the group sitting at one vertex of the defining
//! graph. Cyclic and free labels support element arithmetic; Higman and
//! opaque labels participate only in classification and reject element
//! construction.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vertex-group descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VertexLabel {
    /// Cyclic of order `order`; `order == 0` means infinite cyclic.
    Cyclic { order: u64 },
    /// Free of rank `rank ≥ 1`.
    Free { rank: u32 },
    /// The Higman-style group on `k ≥ 4` generators with relations
    /// `a_i a_{i+1} a_i^{-1} = a_{i+1}^2` (indices mod `k`).
    Higman { k: u32 },
    /// An uninterpreted group, identified by its tag.
    Opaque { tag: String },
}

/// A nontrivial element of a vertex group.
///
/// Cyclic letters are exponents: for finite order `n` the canonical
/// residue lies in `(-n/2, n/2]`, the positive representative winning the
/// tie at even `n`. Free letters are freely reduced generator words;
/// entry `i > 0` is the `i`-th generator, `-i` its inverse.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Int(i64),
    Word(Vec<i32>),
}

impl VertexLabel {
    pub fn validate(&self) -> Result<()> {
        match self {
            VertexLabel::Cyclic { order: 1 } => Err(Error::InvalidLabel(
                "cyclic label of order 1 is the trivial group".to_owned(),
            )),
            VertexLabel::Free { rank: 0 } => {
                Err(Error::InvalidLabel("free label of rank 0".to_owned()))
            }
            VertexLabel::Higman { k } if *k < 4 => Err(Error::InvalidLabel(format!(
                "higman label requires k >= 4, got {k}"
            ))),
            _ => Ok(()),
        }
    }

    /// Cyclic and free labels carry element arithmetic.
    pub fn is_arithmetic(&self) -> bool {
        matches!(self, VertexLabel::Cyclic { .. } | VertexLabel::Free { .. })
    }

    pub fn cardinality(&self) -> Option<u64> {
        match self {
            VertexLabel::Cyclic { order } if *order >= 2 => Some(*order),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.cardinality().is_some()
    }

    /// Whether the group is countably infinite: `Some(true)`/`Some(false)`
    /// when decidable from the label, `None` for opaque labels.
    pub fn is_infinite(&self) -> Option<bool> {
        match self {
            VertexLabel::Cyclic { order } => Some(*order == 0),
            VertexLabel::Free { .. } => Some(true),
            VertexLabel::Higman { .. } => Some(true),
            VertexLabel::Opaque { .. } => None,
        }
    }

    fn expect_arithmetic(&self) -> Result<()> {
        if self.is_arithmetic() {
            Ok(())
        } else {
            Err(Error::UnsupportedLabel(self.to_string()))
        }
    }

    /// Canonicalizes a raw letter; `Ok(None)` is the identity.
    pub fn canonical_letter(&self, raw: &Letter) -> Result<Option<Letter>> {
        self.expect_arithmetic()?;
        match (self, raw) {
            (VertexLabel::Cyclic { order }, Letter::Int(k)) => Ok(cyclic_residue(*order, *k)),
            (VertexLabel::Free { rank }, Letter::Word(w)) => {
                for &g in w {
                    if g == 0 || g.unsigned_abs() > *rank {
                        return Err(Error::InvalidLabel(format!(
                            "free generator {g} out of range for rank {rank}"
                        )));
                    }
                }
                let reduced = free_reduce(w);
                Ok(if reduced.is_empty() {
                    None
                } else {
                    Some(Letter::Word(reduced))
                })
            }
            _ => Err(Error::InvalidLabel(format!(
                "letter {raw:?} does not match label {self}"
            ))),
        }
    }

    /// Product of two canonical letters; `None` is the identity.
    pub fn mul(&self, a: &Letter, b: &Letter) -> Option<Letter> {
        match (self, a, b) {
            (VertexLabel::Cyclic { order }, Letter::Int(x), Letter::Int(y)) => {
                cyclic_residue(*order, x + y)
            }
            (VertexLabel::Free { .. }, Letter::Word(x), Letter::Word(y)) => {
                let mut w = x.clone();
                w.extend_from_slice(y);
                let reduced = free_reduce(&w);
                if reduced.is_empty() {
                    None
                } else {
                    Some(Letter::Word(reduced))
                }
            }
            _ => unreachable!("letters validated at construction"),
        }
    }

    pub fn inverse(&self, a: &Letter) -> Letter {
        match (self, a) {
            (VertexLabel::Cyclic { order }, Letter::Int(x)) => {
                cyclic_residue(*order, -x).expect("inverse of a nontrivial letter is nontrivial")
            }
            (VertexLabel::Free { .. }, Letter::Word(w)) => {
                Letter::Word(w.iter().rev().map(|&g| -g).collect())
            }
            _ => unreachable!("letters validated at construction"),
        }
    }

    /// Word length of a canonical letter in the standard generating set
    /// (one generator for cyclic labels, `rank` generators for free ones).
    pub fn letter_len(&self, a: &Letter) -> u64 {
        match a {
            Letter::Int(x) => x.unsigned_abs(),
            Letter::Word(w) => w.len() as u64,
        }
    }

    /// Standard generators together with their inverses, deduplicated.
    pub fn generators(&self) -> Result<Vec<Letter>> {
        self.expect_arithmetic()?;
        Ok(match self {
            VertexLabel::Cyclic { order: 2 } => vec![Letter::Int(1)],
            VertexLabel::Cyclic { .. } => vec![Letter::Int(1), Letter::Int(-1)],
            VertexLabel::Free { rank } => (1..=*rank as i32)
                .flat_map(|g| [Letter::Word(vec![g]), Letter::Word(vec![-g])])
                .collect(),
            _ => unreachable!(),
        })
    }

    /// All nontrivial letters of a finite label, in canonical order.
    pub fn nontrivial_letters(&self) -> Result<Vec<Letter>> {
        let n = self.cardinality().ok_or_else(|| {
            Error::NonEnumerable(format!("label {self} is not a finite group"))
        })?;
        Ok((1..n)
            .map(|k| cyclic_residue(n, k as i64).expect("nonzero residue"))
            .collect())
    }
}

/// Canonical residue of `k` in the cyclic group of order `n` (`n == 0`
/// for the infinite cyclic group); `None` is the identity.
fn cyclic_residue(n: u64, k: i64) -> Option<Letter> {
    if n == 0 {
        return if k == 0 { None } else { Some(Letter::Int(k)) };
    }
    let n = n as i64;
    let mut r = k.rem_euclid(n);
    if 2 * r > n {
        r -= n;
    }
    if r == 0 {
        None
    } else {
        Some(Letter::Int(r))
    }
}

fn free_reduce(w: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(w.len());
    for &g in w {
        if out.last() == Some(&-g) {
            out.pop();
        } else {
            out.push(g);
        }
    }
    out
}

/// Whether there is a nontrivial homomorphism from the Higman-style group
/// on `source_k` generators to the one on `target_k` generators: exactly
/// when `target_k` divides `source_k`. In particular the two groups are
/// isomorphic only when `source_k == target_k`.
pub fn higman_hom_exists(source_k: u32, target_k: u32) -> bool {
    source_k % target_k == 0
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Cyclic { order: 0 } => write!(f, "Z"),
            VertexLabel::Cyclic { order } => write!(f, "Z/{order}"),
            VertexLabel::Free { rank } => write!(f, "F{rank}"),
            VertexLabel::Higman { k } => write!(f, "Hig{k}"),
            VertexLabel::Opaque { tag } => write!(f, "opaque:{tag}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_residues_are_symmetric() {
        let z5 = VertexLabel::Cyclic { order: 5 };
        assert_eq!(z5.canonical_letter(&Letter::Int(3)).unwrap(), Some(Letter::Int(-2)));
        assert_eq!(z5.canonical_letter(&Letter::Int(5)).unwrap(), None);
        let z4 = VertexLabel::Cyclic { order: 4 };
        // Tie at n/2 goes to the nonnegative representative.
        assert_eq!(z4.canonical_letter(&Letter::Int(-2)).unwrap(), Some(Letter::Int(2)));
    }

    #[test]
    fn free_letters_reduce() {
        let f2 = VertexLabel::Free { rank: 2 };
        assert_eq!(
            f2.canonical_letter(&Letter::Word(vec![1, 2, -2, -1, 1])).unwrap(),
            Some(Letter::Word(vec![1]))
        );
        assert_eq!(f2.canonical_letter(&Letter::Word(vec![1, -1])).unwrap(), None);
        assert!(f2.canonical_letter(&Letter::Word(vec![3])).is_err());
    }

    #[test]
    fn letter_lengths() {
        let z = VertexLabel::Cyclic { order: 0 };
        assert_eq!(z.letter_len(&Letter::Int(5)), 5);
        let z5 = VertexLabel::Cyclic { order: 5 };
        let l = z5.canonical_letter(&Letter::Int(4)).unwrap().unwrap();
        assert_eq!(z5.letter_len(&l), 1);
    }

    #[test]
    fn higman_and_opaque_reject_arithmetic() {
        let h = VertexLabel::Higman { k: 5 };
        assert!(matches!(
            h.canonical_letter(&Letter::Int(1)),
            Err(Error::UnsupportedLabel(_))
        ));
        let o = VertexLabel::Opaque { tag: "A".into() };
        assert!(o.generators().is_err());
    }

    #[test]
    fn higman_hom_rule() {
        assert!(higman_hom_exists(10, 5));
        assert!(!higman_hom_exists(5, 10));
        assert!(higman_hom_exists(5, 5));
        assert!(!higman_hom_exists(5, 4));
    }

    #[test]
    fn label_validation() {
        assert!(VertexLabel::Cyclic { order: 1 }.validate().is_err());
        assert!(VertexLabel::Free { rank: 0 }.validate().is_err());
        assert!(VertexLabel::Higman { k: 3 }.validate().is_err());
        assert!(VertexLabel::Cyclic { order: 0 }.validate().is_ok());
    }
}
