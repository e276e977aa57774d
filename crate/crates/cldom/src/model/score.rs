//! Positional score vectors.

use std::fmt;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::model::rational::{format_rational, rat, Rational};

/// A normalized positional score vector `s` with `1 = s(1) >= ... >= s(m) = 0`.
///
/// A voter at rank `k` contributes `s(k)` to an alternative's tally.
/// Construction accepts any nonincreasing, nonconstant sequence and
/// normalizes it with the winner-set-preserving affine map
/// `e -> (e - s(m)) / (s(1) - s(m))`, so `2, 1, 0` and `1, 1/2, 0` denote the
/// same rule.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScoreVector {
    entries: Vec<Rational>,
}

impl ScoreVector {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if entries.len() < 3 {
            return Err(Error::InvalidScoreVector(format!(
                "need at least 3 entries, got {}",
                entries.len()
            )));
        }
        for pair in entries.windows(2) {
            if pair[0] < pair[1] {
                return Err(Error::InvalidScoreVector(
                    "entries must be nonincreasing".into(),
                ));
            }
        }
        let first = entries[0].clone();
        let last = entries[entries.len() - 1].clone();
        if first == last {
            return Err(Error::InvalidScoreVector(
                "constant sequences admit no normalization".into(),
            ));
        }
        let span = first - &last;
        let entries = entries.into_iter().map(|e| (e - &last) / &span).collect();
        Ok(Self { entries })
    }

    /// The Borda vector `s(k) = (m - k) / (m - 1)`.
    pub fn borda(m: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::InvalidArgument(format!(
                "borda vector needs m >= 3, got {m}"
            )));
        }
        let denom = rat(m as i64 - 1);
        let entries = (1..=m)
            .map(|k| rat((m - k) as i64) / &denom)
            .collect();
        Ok(Self { entries })
    }

    /// The three-alternative one-parameter family `(1, s2, 0)`.
    pub fn three(s2: Rational) -> Result<Self> {
        if s2 < Rational::zero() || s2 > Rational::one() {
            return Err(Error::InvalidScoreVector(format!(
                "middle score {} outside [0, 1]",
                format_rational(&s2)
            )));
        }
        Ok(Self {
            entries: vec![rat(1), s2, rat(0)],
        })
    }

    /// Number of ranks `m`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Score at 1-based rank `k`.
    pub fn at(&self, k: usize) -> &Rational {
        &self.entries[k - 1]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// True iff consecutive rank differences are all equal, which
    /// characterizes the Borda vector after normalization.
    pub fn is_borda(&self) -> bool {
        let step = self.entries[1].clone() - &self.entries[0];
        self.entries
            .windows(2)
            .all(|pair| pair[1].clone() - &pair[0] == step)
    }

    pub fn sum(&self) -> Rational {
        self.entries.iter().fold(Rational::zero(), |acc, e| acc + e)
    }
}

impl fmt::Display for ScoreVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(format_rational).collect();
        write!(f, "{}", parts.join(", "))
    }
}
