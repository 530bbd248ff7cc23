//! Copeland consensus over several rankings.
//!
//! Every pair of alternatives plays one match per input ranking; whoever
//! is preferred by a strict majority of the inputs wins the pair. With two
//! inputs this degenerates to "must win both": a 1-1 split is a win for
//! neither. An alternative's Copeland score is its pairwise victories
//! minus its pairwise defeats, and the consensus orders by descending
//! score with ties preserved.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rank::{rank_from_scores, Ranking, DEFAULT_TIE_TOLERANCE};

/// Rank values for one method: smaller is better, equal ranks express a
/// tie within that method. Ranks don't need to be contiguous, so slices of
/// a larger ranking are fine.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankProfile {
    entries: Vec<(String, u32)>,
}

impl RankProfile {
    pub fn new(entries: Vec<(String, u32)>) -> Result<Self> {
        for (index, (id, _)) in entries.iter().enumerate() {
            if entries[..index].iter().any(|(other, _)| other == id) {
                return Err(Error::DuplicateInRanking {
                    id: id.clone(),
                    index: 0,
                });
            }
        }
        Ok(RankProfile { entries })
    }

    pub fn entries(&self) -> &[(String, u32)] {
        &self.entries
    }

    fn rank_map(&self) -> HashMap<&str, u32> {
        self.entries
            .iter()
            .map(|(id, rank)| (id.as_str(), *rank))
            .collect()
    }
}

impl From<&Ranking> for RankProfile {
    fn from(ranking: &Ranking) -> Self {
        RankProfile {
            entries: ranking
                .entries()
                .iter()
                .map(|e| (e.id.clone(), e.rank))
                .collect(),
        }
    }
}

/// Majority-rule win grid with per-alternative victory and defeat totals.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairwiseTally {
    ids: Vec<String>,
    /// Row-major m x m grid; `wins[i][k]` means i beats k by strict
    /// majority. The diagonal is always false and at most one of
    /// `wins[i][k]` / `wins[k][i]` is set.
    wins: Vec<bool>,
    row_wins: Vec<u32>,
    column_losses: Vec<u32>,
}

impl PairwiseTally {
    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn beats(&self, i: usize, k: usize) -> bool {
        self.wins[i * self.ids.len() + k]
    }

    /// Victories per alternative (row sums).
    pub fn victories(&self) -> &[u32] {
        &self.row_wins
    }

    /// Defeats per alternative (column sums).
    pub fn defeats(&self) -> &[u32] {
        &self.column_losses
    }
}

/// Integer Copeland scores and the consensus ranking, aligned with
/// [`PairwiseTally::ids`] order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CopelandResult {
    pub ids: Vec<String>,
    pub scores: Vec<i64>,
    pub ranking: Ranking,
}

impl CopelandResult {
    /// Consensus order as tie groups, best first; tied ids are listed in
    /// ascending id order.
    pub fn chain_groups(&self) -> Vec<Vec<String>> {
        self.ranking
            .tie_groups()
            .into_iter()
            .map(|group| group.into_iter().map(|e| e.id.clone()).collect())
            .collect()
    }

    /// Render the consensus as `A > B = C > D`.
    pub fn chain_string(&self) -> String {
        self.chain_groups()
            .iter()
            .map(|group| group.join(" = "))
            .collect::<Vec<_>>()
            .join(" > ")
    }
}

/// Count pairwise majority wins across the input rankings.
///
/// All rankings must cover the same alternative set. Within one input,
/// equal ranks count as a preference for neither side.
pub fn pairwise_tally(rankings: &[RankProfile]) -> Result<PairwiseTally> {
    if rankings.is_empty() {
        return Err(Error::NoRankings);
    }
    let ids: Vec<String> = rankings[0]
        .entries()
        .iter()
        .map(|(id, _)| id.clone())
        .collect();
    let m = ids.len();
    let maps: Vec<HashMap<&str, u32>> = rankings.iter().map(|r| r.rank_map()).collect();
    for (index, map) in maps.iter().enumerate().skip(1) {
        if map.len() != m || ids.iter().any(|id| !map.contains_key(id.as_str())) {
            return Err(Error::MismatchedAlternatives { index });
        }
    }

    let mut wins = vec![false; m * m];
    for i in 0..m {
        for k in (i + 1)..m {
            let mut for_i = 0u32;
            let mut for_k = 0u32;
            for map in &maps {
                let ri = map[ids[i].as_str()];
                let rk = map[ids[k].as_str()];
                if ri < rk {
                    for_i += 1;
                } else if rk < ri {
                    for_k += 1;
                }
            }
            if for_i > for_k {
                wins[i * m + k] = true;
            } else if for_k > for_i {
                wins[k * m + i] = true;
            }
        }
    }

    let row_wins = (0..m)
        .map(|i| (0..m).filter(|&k| wins[i * m + k]).count() as u32)
        .collect();
    let column_losses = (0..m)
        .map(|i| (0..m).filter(|&k| wins[k * m + i]).count() as u32)
        .collect();
    Ok(PairwiseTally {
        ids,
        wins,
        row_wins,
        column_losses,
    })
}

/// `score_i = victories_i - defeats_i`. Scores over all alternatives sum
/// to zero because every decided pair contributes +1 and -1.
pub fn copeland_scores(tally: &PairwiseTally) -> Vec<i64> {
    tally
        .victories()
        .iter()
        .zip(tally.defeats())
        .map(|(&wins, &losses)| wins as i64 - losses as i64)
        .collect()
}

/// Aggregate rankings into a Copeland consensus.
pub fn copeland_rank(rankings: &[RankProfile]) -> Result<CopelandResult> {
    let tally = pairwise_tally(rankings)?;
    let scores = copeland_scores(&tally);
    let pairs: Vec<(String, f64)> = tally
        .ids()
        .iter()
        .cloned()
        .zip(scores.iter().map(|&s| s as f64))
        .collect();
    let ranking = rank_from_scores(&pairs, DEFAULT_TIE_TOLERANCE)?;
    Ok(CopelandResult {
        ids: tally.ids().to_vec(),
        scores,
        ranking,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(pairs: &[(&str, u32)]) -> RankProfile {
        RankProfile::new(pairs.iter().map(|(id, r)| (id.to_string(), *r)).collect()).unwrap()
    }

    fn four_customer_inputs() -> Vec<RankProfile> {
        vec![
            profile(&[("C10", 26), ("C11", 33), ("C12", 13), ("C13", 14)]),
            profile(&[("C10", 25), ("C11", 33), ("C12", 19), ("C13", 12)]),
        ]
    }

    #[test]
    fn four_customer_tally_counts_match() {
        let tally = pairwise_tally(&four_customer_inputs()).unwrap();
        assert_eq!(tally.victories(), &[1, 0, 2, 2]);
        assert_eq!(tally.defeats(), &[2, 3, 0, 0]);
        // C12 vs C13 split 1-1: a win for neither
        assert!(!tally.beats(2, 3));
        assert!(!tally.beats(3, 2));
    }

    #[test]
    fn four_customer_scores_and_order() {
        let result = copeland_rank(&four_customer_inputs()).unwrap();
        assert_eq!(result.scores, vec![-1, -3, 2, 2]);
        assert_eq!(
            result.chain_groups(),
            vec![
                vec!["C12".to_string(), "C13".to_string()],
                vec!["C10".to_string()],
                vec!["C11".to_string()],
            ]
        );
        assert_eq!(result.chain_string(), "C12 = C13 > C10 > C11");
    }

    #[test]
    fn identical_inputs_reproduce_the_strict_order() {
        let a = profile(&[("x", 1), ("y", 2), ("z", 3)]);
        let tally = pairwise_tally(&[a.clone(), a]).unwrap();
        for i in 0..3 {
            for k in 0..3 {
                assert_eq!(tally.beats(i, k), i < k);
            }
        }
    }

    #[test]
    fn single_input_is_returned_unchanged() {
        let input = profile(&[("a", 1), ("b", 2), ("c", 2), ("d", 4)]);
        let result = copeland_rank(&[input]).unwrap();
        assert_eq!(
            result.chain_groups(),
            vec![
                vec!["a".to_string()],
                vec!["b".to_string(), "c".to_string()],
                vec!["d".to_string()],
            ]
        );
    }

    #[test]
    fn equal_ranks_within_one_input_prefer_neither() {
        let tied = profile(&[("a", 1), ("b", 1)]);
        let strict = profile(&[("a", 1), ("b", 2)]);
        // majority: a is preferred 1-0
        let tally = pairwise_tally(&[tied, strict]).unwrap();
        assert!(tally.beats(0, 1));
        assert!(!tally.beats(1, 0));
    }

    #[test]
    fn mismatched_alternative_sets_are_rejected() {
        let a = profile(&[("x", 1), ("y", 2)]);
        let b = profile(&[("x", 1), ("z", 2)]);
        assert!(matches!(
            pairwise_tally(&[a, b]).unwrap_err(),
            Error::MismatchedAlternatives { index: 1 }
        ));
    }

    #[test]
    fn empty_input_list_is_rejected() {
        assert!(matches!(
            pairwise_tally(&[]).unwrap_err(),
            Error::NoRankings
        ));
    }

    #[test]
    fn scores_sum_to_zero() {
        let result = copeland_rank(&four_customer_inputs()).unwrap();
        assert_eq!(result.scores.iter().sum::<i64>(), 0);
    }
}
