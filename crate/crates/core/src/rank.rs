//! Score-to-rank conversion with competition ranking.
//!
//! Tied alternatives share the best rank of the group and the following
//! alternative skips accordingly (1, 2, 2, 4). Two scores tie when they
//! differ from the group's anchor (its highest score) by at most the tie
//! tolerance; the default tolerance only guards floating-point noise.

use serde::Serialize;

use crate::error::{Error, Result};

/// Default absolute tolerance for treating two scores as equal.
pub const DEFAULT_TIE_TOLERANCE: f64 = 1e-9;

/// One line of a ranking: alternative id, its score and its rank.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankEntry {
    pub id: String,
    pub score: f64,
    pub rank: u32,
}

/// Alternatives ordered by descending score with competition ranks.
///
/// Equal-score entries are listed in ascending id order so that identical
/// inputs always produce byte-identical output.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Ranking {
    entries: Vec<RankEntry>,
}

impl Ranking {
    pub fn entries(&self) -> &[RankEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Rank of an alternative, if present.
    pub fn rank_of(&self, id: &str) -> Option<u32> {
        self.entries.iter().find(|e| e.id == id).map(|e| e.rank)
    }

    /// Entries grouped by shared rank, best group first.
    pub fn tie_groups(&self) -> Vec<Vec<&RankEntry>> {
        let mut groups: Vec<Vec<&RankEntry>> = Vec::new();
        for entry in &self.entries {
            match groups.last_mut() {
                Some(group) if group[0].rank == entry.rank => group.push(entry),
                _ => groups.push(vec![entry]),
            }
        }
        groups
    }
}

/// Rank alternatives by descending score.
///
/// `scores` pairs each alternative id with one finite score. Ties within
/// `tie_tolerance` of a group's anchor share the group's rank.
pub fn rank_from_scores(scores: &[(String, f64)], tie_tolerance: f64) -> Result<Ranking> {
    if scores.is_empty() {
        return Err(Error::EmptyInput {
            context: "no scores to rank".into(),
        });
    }
    for (id, score) in scores {
        if !score.is_finite() {
            return Err(Error::NonFiniteScore {
                id: id.clone(),
                score: *score,
            });
        }
    }
    let mut sorted: Vec<(String, f64)> = scores.to_vec();
    // descending score, ascending id among equal raw scores
    sorted.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then_with(|| a.0.cmp(&b.0)));

    // assign competition ranks; a group is anchored at its highest score
    let mut entries: Vec<RankEntry> = Vec::with_capacity(sorted.len());
    let mut group_start = 0usize;
    let mut anchor = sorted[0].1;
    for (index, (id, score)) in sorted.iter().enumerate() {
        if (anchor - score).abs() > tie_tolerance {
            group_start = index;
            anchor = *score;
        }
        entries.push(RankEntry {
            id: id.clone(),
            score: *score,
            rank: (group_start + 1) as u32,
        });
    }
    // equal-rank entries keep ascending id order even when their raw
    // scores differ within tolerance
    let mut i = 0;
    while i < entries.len() {
        let mut j = i + 1;
        while j < entries.len() && entries[j].rank == entries[i].rank {
            j += 1;
        }
        entries[i..j].sort_by(|a, b| a.id.cmp(&b.id));
        i = j;
    }
    Ok(Ranking { entries })
}
