//! Joint actions and correlated outcomes.
//!
//! A `JointAction` is one cell of the pure action product space, stored as
//! per-player action indices. An `Outcome` is a probability distribution over
//! joint actions with exact rational weights; it is kept canonical (support
//! sorted by joint-action order, zero weights dropped, weights in lowest
//! terms), so `Eq`/`Ord` on outcomes decide semantic equality and provide the
//! global tie-breaking order.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{fmt_rat, Rat};

/// Per-player action indices into the owning game's action lists.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct JointAction(pub Vec<usize>);

impl JointAction {
    pub fn player_count(&self) -> usize {
        self.0.len()
    }
}

/// A correlated distribution over joint actions; weights sum to exactly 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Outcome {
    weights: BTreeMap<JointAction, Rat>,
}

impl Outcome {
    /// Degenerate distribution on a single joint action.
    pub fn pure(a: JointAction) -> Outcome {
        let mut weights = BTreeMap::new();
        weights.insert(a, Rat::one());
        Outcome { weights }
    }

    /// Builds a canonical outcome from weighted joint actions. Weights must be
    /// nonnegative and sum to exactly 1; repeated actions accumulate.
    pub fn mix(entries: impl IntoIterator<Item = (JointAction, Rat)>) -> Result<Outcome> {
        let mut weights: BTreeMap<JointAction, Rat> = BTreeMap::new();
        for (a, w) in entries {
            if w < Rat::zero() {
                return Err(Error::domain("outcome weight is negative"));
            }
            if w.is_zero() {
                continue;
            }
            *weights.entry(a).or_insert_with(Rat::zero) += w;
        }
        let total: Rat = weights.values().cloned().sum();
        if !total.is_one() {
            return Err(Error::domain(format!(
                "outcome weights sum to {}, expected 1",
                fmt_rat(&total)
            )));
        }
        Ok(Outcome { weights })
    }

    /// Convex combination `alpha * self + (1 - alpha) * other`.
    pub fn blend(&self, other: &Outcome, alpha: &Rat) -> Result<Outcome> {
        if *alpha < Rat::zero() || *alpha > Rat::one() {
            return Err(Error::domain("blend weight outside [0, 1]"));
        }
        let beta = Rat::one() - alpha;
        Outcome::mix(
            self.weights
                .iter()
                .map(|(a, w)| (a.clone(), w * alpha))
                .chain(other.weights.iter().map(|(a, w)| (a.clone(), w * &beta))),
        )
    }

    pub fn support(&self) -> impl Iterator<Item = (&JointAction, &Rat)> {
        self.weights.iter()
    }

    pub fn is_pure(&self) -> bool {
        self.weights.len() == 1
    }

    /// The single joint action of a pure outcome.
    pub fn as_pure(&self) -> Option<&JointAction> {
        if self.is_pure() {
            self.weights.keys().next()
        } else {
            None
        }
    }

    pub fn player_count(&self) -> Option<usize> {
        self.weights.keys().next().map(|a| a.player_count())
    }

    /// Canonical byte form, used in fingerprints and as a stable sort key.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        out.extend_from_slice(b"(outcome");
        for (a, w) in &self.weights {
            out.push(b' ');
            out.push(b'(');
            for (k, idx) in a.0.iter().enumerate() {
                if k > 0 {
                    out.push(b' ');
                }
                out.extend_from_slice(idx.to_string().as_bytes());
            }
            out.push(b' ');
            out.extend_from_slice(fmt_rat(w).as_bytes());
            out.push(b')');
        }
        out.push(b')');
        out
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .weights
            .iter()
            .map(|(a, w)| {
                let idx: Vec<String> = a.0.iter().map(|i| i.to_string()).collect();
                if w.is_one() {
                    format!("({})", idx.join(","))
                } else {
                    format!("{}*({})", fmt_rat(w), idx.join(","))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn ja(idx: &[usize]) -> JointAction {
        JointAction(idx.to_vec())
    }

    #[test]
    fn mix_canonicalizes_and_validates() {
        let o = Outcome::mix(vec![
            (ja(&[1, 1]), ratio(1, 2)),
            (ja(&[0, 0]), ratio(1, 4)),
            (ja(&[0, 0]), ratio(1, 4)),
            (ja(&[2, 2]), ratio(0, 1)),
        ])
        .unwrap();
        assert_eq!(o.support().count(), 2);
        let again = Outcome::mix(vec![(ja(&[0, 0]), ratio(1, 2)), (ja(&[1, 1]), ratio(1, 2))]).unwrap();
        assert_eq!(o, again);
        assert!(Outcome::mix(vec![(ja(&[0, 0]), ratio(1, 2))]).is_err());
    }

    #[test]
    fn blend_is_exact() {
        let a = Outcome::pure(ja(&[0, 0]));
        let b = Outcome::pure(ja(&[1, 1]));
        let m = a.blend(&b, &ratio(1, 3)).unwrap();
        let w: Vec<Rat> = m.support().map(|(_, w)| w.clone()).collect();
        assert_eq!(w, vec![ratio(1, 3), ratio(2, 3)]);
    }
}
