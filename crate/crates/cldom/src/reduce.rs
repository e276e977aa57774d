//! Score-vector surgery: how a rule on `m >= 4` alternatives reduces to a
//! rule on fewer.
//!
//! Three derived vectors drive the recursion. Dropping the top score leaves
//! `(s(2), ..., s(m))`, dropping the bottom leaves `(s(1), ..., s(m-1))`,
//! and averaging compresses the middle into the three-entry vector
//! `(1, mean(s(2..m-1)), 0)`. The first two can degenerate to a constant
//! sequence (no longer a scoring rule); the average never does.
//! [`classify`] picks, for a pair of rules, which reduction keeps every
//! invariant the witness recursion needs, and recognises the one family of
//! pairs where none of them works and a direct cyclic construction takes
//! over.

use num::Zero;

use crate::error::{Error, Result};
use crate::model::{frac, rat, Rational, ScoreVector};

/// The three reduced forms of one score vector, kept raw so degenerate
/// (constant) cases stay inspectable.
#[derive(Debug, Clone)]
pub struct DerivedVectors {
    /// `(s(2), ..., s(m))`, constant iff `s(2) = 0`.
    pub raw_drop_first: Vec<Rational>,
    /// `(s(1), ..., s(m-1))`, constant iff `s(m-1) = 1`.
    pub raw_drop_last: Vec<Rational>,
    /// Mean of the middle scores `s(2), ..., s(m-1)`.
    pub middle_mean: Rational,
}

impl DerivedVectors {
    /// Normalized drop-top vector, or `None` when it degenerates.
    pub fn drop_first(&self) -> Option<ScoreVector> {
        ScoreVector::new(self.raw_drop_first.clone()).ok()
    }

    /// Normalized drop-bottom vector, or `None` when it degenerates.
    pub fn drop_last(&self) -> Option<ScoreVector> {
        ScoreVector::new(self.raw_drop_last.clone()).ok()
    }

    /// The three-entry averaged vector; always a valid scoring rule.
    pub fn average(&self) -> ScoreVector {
        ScoreVector::three(self.middle_mean.clone()).expect("means of [0,1] scores are in [0,1]")
    }
}

/// Computes the three derived vectors of a rule on `m >= 4` alternatives.
pub fn derived_vectors(s: &ScoreVector) -> Result<DerivedVectors> {
    let m = s.len();
    if m < 4 {
        return Err(Error::InvalidArgument(format!(
            "reduction needs at least 4 alternatives, got {m}"
        )));
    }
    let entries = s.entries();
    let middles = &entries[1..m - 1];
    let mean = middles.iter().fold(Rational::zero(), |acc, e| acc + e) / rat(middles.len() as i64);
    Ok(DerivedVectors {
        raw_drop_first: entries[1..].to_vec(),
        raw_drop_last: entries[..m - 1].to_vec(),
        middle_mean: mean,
    })
}

/// The reduction route [`classify`] chose for a pair of rules, carrying the
/// derived pair the recursion continues with.
#[derive(Debug, Clone)]
pub enum ReductionCase {
    /// Recurse on the three-entry averaged pair.
    Average { s: ScoreVector, sp: ScoreVector },
    /// Recurse on the pair with the top score dropped (`m - 1` entries).
    DropFirst { s: ScoreVector, sp: ScoreVector },
    /// Recurse on the pair with the bottom score dropped (`m - 1` entries).
    DropLast { s: ScoreVector, sp: ScoreVector },
    /// `s` has constant middle `1/2`, `s'` constant middle `alpha < 1/2`:
    /// no reduction applies; a direct cyclic profile handles it.
    SpecialLow { alpha: Rational },
    /// As above with `alpha > 1/2`.
    SpecialHigh { alpha: Rational },
}

impl ReductionCase {
    pub fn label(&self) -> &'static str {
        match self {
            ReductionCase::Average { .. } => "average",
            ReductionCase::DropFirst { .. } => "drop-first",
            ReductionCase::DropLast { .. } => "drop-last",
            ReductionCase::SpecialLow { .. } => "cyclic-low",
            ReductionCase::SpecialHigh { .. } => "cyclic-high",
        }
    }
}

fn constant_middle(s: &ScoreVector) -> Option<Rational> {
    let m = s.len();
    if s.at(2) == s.at(m - 1) {
        Some(s.at(2).clone())
    } else {
        None
    }
}

/// A derived pair supports recursion when the derived `s` is a scoring rule
/// and not Borda, the derived `s'` is a scoring rule, and the two differ.
fn usable(ds: Option<ScoreVector>, dsp: Option<ScoreVector>) -> Option<(ScoreVector, ScoreVector)> {
    let ds = ds?;
    let dsp = dsp?;
    if ds.is_borda() || ds == dsp {
        None
    } else {
        Some((ds, dsp))
    }
}

/// Chooses the reduction route for a pair of distinct rules on `m >= 4`
/// alternatives with `s` not Borda.
///
/// The special cyclic family is recognised first; otherwise the averaged
/// pair is preferred, then dropping the top score, then dropping the
/// bottom. Exactly one of the five outcomes applies to every valid pair.
pub fn classify(s: &ScoreVector, sp: &ScoreVector) -> Result<ReductionCase> {
    if s.len() != sp.len() {
        return Err(Error::DimensionMismatch {
            got: sp.len(),
            want: s.len(),
        });
    }
    if s.len() < 4 {
        return Err(Error::InvalidArgument(format!(
            "classification needs at least 4 alternatives, got {}",
            s.len()
        )));
    }
    if s.is_borda() {
        return Err(Error::NotApplicable(
            "the Borda rule never elects a Condorcet loser, so it has no witness".into(),
        ));
    }
    if s == sp {
        return Err(Error::NotApplicable(
            "identical rules select identical winners on every profile".into(),
        ));
    }

    let half = frac(1, 2);
    if let (Some(mid), Some(alpha)) = (constant_middle(s), constant_middle(sp)) {
        if mid == half {
            // s' differs from s somewhere, and both share top 1 and bottom 0,
            // so alpha != 1/2 here.
            assert_ne!(alpha, half, "equal constant middles mean equal rules");
            return Ok(if alpha < half {
                ReductionCase::SpecialLow { alpha }
            } else {
                ReductionCase::SpecialHigh { alpha }
            });
        }
    }

    let ds = derived_vectors(s)?;
    let dsp = derived_vectors(sp)?;

    if ds.middle_mean != half && ds.middle_mean != dsp.middle_mean {
        return Ok(ReductionCase::Average {
            s: ds.average(),
            sp: dsp.average(),
        });
    }
    if let Some((a, b)) = usable(ds.drop_first(), dsp.drop_first()) {
        return Ok(ReductionCase::DropFirst { s: a, sp: b });
    }
    if let Some((a, b)) = usable(ds.drop_last(), dsp.drop_last()) {
        return Ok(ReductionCase::DropLast { s: a, sp: b });
    }
    Err(Error::ConstructionFault(format!(
        "no reduction applies to {s} versus {sp}"
    )))
}
