//! Pairwise majority comparisons.

use num::BigInt;
use num::Zero;

use crate::model::order::Alt;

/// All pairwise majority margins of a profile.
///
/// `margin(x, y)` is `#{i : x above y} - #{i : y above x}`; the matrix is
/// antisymmetric with a zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MajorityMatrix {
    m: usize,
    margins: Vec<BigInt>,
}

impl MajorityMatrix {
    pub(crate) fn from_margins(m: usize, margins: Vec<BigInt>) -> Self {
        debug_assert_eq!(margins.len(), m * m);
        Self { m, margins }
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    pub fn margin(&self, x: Alt, y: Alt) -> &BigInt {
        &self.margins[x.0 * self.m + y.0]
    }

    /// True iff `x` loses the head-to-head majority against every other
    /// alternative strictly.
    pub fn is_condorcet_loser(&self, x: Alt) -> bool {
        (0..self.m)
            .filter(|&j| j != x.0)
            .all(|j| self.margin(x, Alt(j)) < &BigInt::zero())
    }

    /// The Condorcet loser, if one exists. At most one alternative can lose
    /// every pairwise contest, so the first match is the only one.
    pub fn condorcet_loser(&self) -> Option<Alt> {
        (0..self.m).map(Alt).find(|&x| self.is_condorcet_loser(x))
    }
}
