//! Alternatives and strict linear orders over them.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An alternative, identified by its dense index into an [`Alternatives`] registry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alt(pub usize);

/// The registry of alternatives an election is run over.
///
/// Index position is the alternative's id; names are display labels and must
/// be distinct, nonempty, and free of the structural characters used by the
/// profile text format (whitespace, `>`, `:`, `#`, `,`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alternatives {
    names: Vec<String>,
}

impl Alternatives {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Result<Arc<Self>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() < 2 {
            return Err(Error::InvalidArgument(format!(
                "need at least 2 alternatives, got {}",
                names.len()
            )));
        }
        for name in &names {
            if name.is_empty()
                || name
                    .chars()
                    .any(|c| c.is_whitespace() || matches!(c, '>' | ':' | '#' | ','))
            {
                return Err(Error::InvalidArgument(format!(
                    "invalid alternative name {name:?}"
                )));
            }
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::InvalidArgument(format!(
                    "duplicate alternative name {name:?}"
                )));
            }
        }
        Ok(Arc::new(Self { names }))
    }

    /// Registry `x1, x2, ..., xm`.
    pub fn numbered(m: usize) -> Result<Arc<Self>> {
        Self::new((1..=m).map(|k| format!("x{k}")).collect())
    }

    /// The classic three-alternative registry `x, y, z`.
    pub fn xyz() -> Arc<Self> {
        Self::new(vec!["x", "y", "z"]).expect("fixed names are valid")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Alt> {
        (0..self.names.len()).map(Alt)
    }

    pub fn name(&self, alt: Alt) -> &str {
        &self.names[alt.0]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn by_name(&self, name: &str) -> Result<Alt> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(Alt)
            .ok_or_else(|| Error::UnknownAlternative(name.to_string()))
    }

    pub fn contains(&self, alt: Alt) -> bool {
        alt.0 < self.names.len()
    }
}

/// A voter's strict ranking: position 0 is rank 1 (most preferred).
///
/// Invariant: the ranking is a permutation of all alternative ids `0..m`.
/// The derived `Ord` (lexicographic on the id sequence) is the canonical
/// order used when serializing profiles.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearOrder {
    ranking: Vec<Alt>,
}

impl LinearOrder {
    pub fn new(ranking: Vec<Alt>, m: usize) -> Result<Self> {
        if ranking.len() != m {
            return Err(Error::InvalidArgument(format!(
                "ranking lists {} alternatives, expected {m}",
                ranking.len()
            )));
        }
        let mut seen = vec![false; m];
        for &Alt(id) in &ranking {
            if id >= m || seen[id] {
                return Err(Error::InvalidArgument(
                    "ranking is not a permutation of the alternatives".into(),
                ));
            }
            seen[id] = true;
        }
        Ok(Self { ranking })
    }

    /// Builds the order from ids listed best-first.
    pub fn from_ids(ids: &[usize]) -> Result<Self> {
        Self::new(ids.iter().map(|&i| Alt(i)).collect(), ids.len())
    }

    pub fn len(&self) -> usize {
        self.ranking.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranking.is_empty()
    }

    /// Alternatives from rank 1 down.
    pub fn ranking(&self) -> &[Alt] {
        &self.ranking
    }

    /// 1-based rank of `x`: the number of alternatives weakly preferred to it.
    pub fn rank(&self, x: Alt) -> Result<usize> {
        self.ranking
            .iter()
            .position(|&a| a == x)
            .map(|p| p + 1)
            .ok_or_else(|| Error::UnknownAlternative(format!("id {}", x.0)))
    }

    /// New order with the fresh alternative `x` spliced in at `rank` (1-based;
    /// `m + 1` appends at the bottom).
    pub fn with_inserted(&self, x: Alt, rank: usize) -> Result<Self> {
        if rank == 0 || rank > self.ranking.len() + 1 {
            return Err(Error::InvalidArgument(format!(
                "insertion rank {rank} outside 1..={}",
                self.ranking.len() + 1
            )));
        }
        if self.ranking.contains(&x) {
            return Err(Error::InvalidArgument(format!(
                "alternative id {} already ranked",
                x.0
            )));
        }
        let mut ranking = self.ranking.clone();
        ranking.insert(rank - 1, x);
        Ok(Self { ranking })
    }

    /// Applies an id permutation: id `i` becomes `perm[i]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        let ranking: Vec<Alt> = self.ranking.iter().map(|&Alt(i)| Alt(perm[i])).collect();
        Self::new(ranking, self.ranking.len())
    }

    /// Restriction to a subset of alternatives, re-indexed by `new_id[old]`.
    pub(crate) fn restricted(&self, new_id: &[Option<usize>]) -> Self {
        let ranking: Vec<Alt> = self
            .ranking
            .iter()
            .filter_map(|&Alt(i)| new_id[i].map(Alt))
            .collect();
        Self { ranking }
    }
}

impl fmt::Display for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.ranking.iter().map(|a| a.0.to_string()).collect();
        write!(f, "{}", ids.join(">"))
    }
}
