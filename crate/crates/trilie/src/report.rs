//! Verification outcomes with counterexample witnesses.
//!
//! Every identity checker in the crate returns a [`Verification`]: either a
//! pass together with the number of instances enumerated, or the first
//! failing instance in lexicographic order with both sides of the violated
//! equation.  Witness values are formatted rationals so reports serialize to
//! JSON losslessly and round-trip.

use serde::{Deserialize, Serialize};

use crate::linalg::{rat_string, Rat};

/// The first failing instance of an identity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Which identity failed (e.g. `"fundamental identity"`).
    pub identity: String,
    /// Basis indices of the failing instance, in the order the identity
    /// quantifies them (0-based).
    pub indices: Vec<usize>,
    /// Left-hand side at the failing instance, as formatted rationals.
    pub lhs: Vec<String>,
    /// Right-hand side at the failing instance.
    pub rhs: Vec<String>,
}

impl Witness {
    pub fn new(identity: &str, indices: Vec<usize>, lhs: &[Rat], rhs: &[Rat]) -> Self {
        Witness {
            identity: identity.to_string(),
            indices,
            lhs: lhs.iter().map(rat_string).collect(),
            rhs: rhs.iter().map(rat_string).collect(),
        }
    }
}

/// Outcome of an exhaustive identity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    /// True iff every enumerated instance held exactly.
    pub passed: bool,
    /// Number of identity instances enumerated.
    pub checked: usize,
    /// First failing instance (lexicographic), when `passed` is false.
    pub witness: Option<Witness>,
}

impl Verification {
    pub fn pass(checked: usize) -> Self {
        Verification {
            passed: true,
            checked,
            witness: None,
        }
    }

    pub fn fail(checked: usize, witness: Witness) -> Self {
        Verification {
            passed: false,
            checked,
            witness: Some(witness),
        }
    }
}
