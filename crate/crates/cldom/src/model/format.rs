//! Text formats: profiles on disk and score-vector notation.
//!
//! A profile file is line-oriented UTF-8 with `\n` endings:
//!
//! ```text
//! alternatives: A B C
//! # optional comments
//! 8 : A > B > C
//! 7 : B > C > A
//! ```
//!
//! Blank lines and `#` comments are ignored, duplicate ranking lines
//! accumulate, and writing is canonical: rankings sorted lexicographically
//! by id sequence, single-space separators. Reading a canonical file and
//! writing it back is byte-identical.

use std::str::FromStr;
use std::sync::Arc;

use num::Zero;

use crate::error::{Error, Result};
use crate::model::order::{Alternatives, LinearOrder};
use crate::model::profile::Profile;
use crate::model::rational::{parse_rational, Count};
use crate::model::score::ScoreVector;

pub fn write_profile(profile: &Profile) -> String {
    let alts = profile.alternatives();
    let mut out = format!("alternatives: {}\n", alts.names().join(" "));
    for (order, count) in profile.counts() {
        let names: Vec<&str> = order.ranking().iter().map(|&a| alts.name(a)).collect();
        out.push_str(&format!("{} : {}\n", count, names.join(" > ")));
    }
    out
}

pub fn read_profile(text: &str) -> Result<Profile> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));

    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("profile is empty".into()))?;
    let names = header
        .strip_prefix("alternatives:")
        .ok_or_else(|| Error::Parse("first line must declare `alternatives:`".into()))?;
    let alts = Alternatives::new(names.split_whitespace().collect::<Vec<_>>())?;

    let mut profile = Profile::empty(alts.clone());
    for line in lines {
        let (count_text, ranking_text) = line
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected `count : ranking` in {line:?}")))?;
        let count = Count::from_str(count_text.trim())
            .map_err(|_| Error::Parse(format!("bad voter count in {line:?}")))?;
        if count.is_zero() {
            return Err(Error::Parse(format!("zero voter count in {line:?}")));
        }
        let ranking = ranking_text
            .split('>')
            .map(|name| alts.by_name(name.trim()))
            .collect::<Result<Vec<_>>>()?;
        let order = LinearOrder::new(ranking, alts.len())
            .map_err(|_| Error::Parse(format!("ranking in {line:?} is not a permutation")))?;
        profile.add(order, count)?;
    }
    Ok(profile)
}

pub fn read_profile_file(path: &std::path::Path) -> Result<Profile> {
    read_profile(&std::fs::read_to_string(path)?)
}

/// True when `text` names a score-vector family rather than listing entries.
pub fn is_score_alias(text: &str) -> bool {
    let t = text.trim();
    matches!(t, "borda" | "plurality" | "antiplurality" | "veto") || t.starts_with("k-approval:")
}

/// Parses score-vector notation for `m` alternatives.
///
/// Accepts a comma-separated list of exact values (`1, 1/2, 0`; length must
/// be `m`) or one of the aliases `borda`, `plurality`, `antiplurality`,
/// `veto`, `k-approval:<k>`.
pub fn parse_score_vector(text: &str, m: usize) -> Result<ScoreVector> {
    if m < 3 {
        return Err(Error::InvalidArgument(format!(
            "score vectors need m >= 3, got {m}"
        )));
    }
    let text = text.trim();
    match text {
        "borda" => return ScoreVector::borda(m),
        "plurality" => return k_approval(1, m),
        "antiplurality" | "veto" => return k_approval(m - 1, m),
        _ => {}
    }
    if let Some(k_text) = text.strip_prefix("k-approval:") {
        let k: usize = k_text
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad approval count {k_text:?}")))?;
        return k_approval(k, m);
    }
    let entries = text
        .split(',')
        .map(parse_rational)
        .collect::<Result<Vec<_>>>()?;
    if entries.len() != m {
        return Err(Error::DimensionMismatch {
            got: entries.len(),
            want: m,
        });
    }
    ScoreVector::new(entries)
}

/// Entry count of an explicit score-vector list, or `None` for aliases.
pub fn score_notation_len(text: &str) -> Option<usize> {
    if is_score_alias(text) {
        None
    } else {
        Some(text.split(',').count())
    }
}

fn k_approval(k: usize, m: usize) -> Result<ScoreVector> {
    if k == 0 || k >= m {
        return Err(Error::InvalidArgument(format!(
            "k-approval needs 1 <= k <= m - 1, got k={k} with m={m}"
        )));
    }
    let entries = (1..=m)
        .map(|rank| if rank <= k { crate::model::rational::rat(1) } else { crate::model::rational::rat(0) })
        .collect();
    ScoreVector::new(entries)
}

/// Parses a profile bundled with `m` inferred from its own header.
pub fn profile_from_lines<S: AsRef<str>>(header: &[S], body: &[(u64, &[&str])]) -> Result<Profile> {
    let alts = Alternatives::new(header.iter().map(|s| s.as_ref().to_string()).collect())?;
    profile_from_counts(alts, body)
}

/// Test/fixture helper: builds a profile from `(count, ranking-by-name)` rows.
pub fn profile_from_counts(
    alts: Arc<Alternatives>,
    rows: &[(u64, &[&str])],
) -> Result<Profile> {
    let mut profile = Profile::empty(alts.clone());
    for &(count, ranking) in rows {
        let ids = ranking
            .iter()
            .map(|name| alts.by_name(name))
            .collect::<Result<Vec<_>>>()?;
        profile.add(LinearOrder::new(ids, alts.len())?, Count::from(count))?;
    }
    Ok(profile)
}
