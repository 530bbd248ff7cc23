//! Simple additive weighting: score every alternative by the weighted sum
//! of its normalized criterion values and rank by descending score.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::WeightVector;
use crate::normalize::NormalizedMatrix;
use crate::rank::{rank_from_scores, Ranking};

/// SAW scores (aligned with the input row order) and the induced ranking.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SawResult {
    pub scores: Vec<f64>,
    pub ranking: Ranking,
}

/// `score_i = sum_j w_j * r_ij`, one score per alternative in row order.
pub fn saw_scores(matrix: &NormalizedMatrix, weights: &WeightVector) -> Result<Vec<f64>> {
    let inner = matrix.as_matrix();
    if weights.len() != inner.n_criteria() {
        return Err(Error::WeightCountMismatch {
            expected: inner.n_criteria(),
            got: weights.len(),
        });
    }
    let w = weights.as_slice();
    Ok((0..inner.n_alternatives())
        .map(|i| inner.row(i).iter().zip(w).map(|(r, w)| r * w).sum())
        .collect())
}

/// Score and rank alternatives; the best alternative maximizes the
/// weighted sum.
pub fn saw_rank(
    matrix: &NormalizedMatrix,
    weights: &WeightVector,
    tie_tolerance: f64,
) -> Result<SawResult> {
    let scores = saw_scores(matrix, weights)?;
    let pairs: Vec<(String, f64)> = matrix
        .as_matrix()
        .alternatives()
        .iter()
        .cloned()
        .zip(scores.iter().copied())
        .collect();
    Ok(SawResult {
        scores,
        ranking: rank_from_scores(&pairs, tie_tolerance)?,
    })
}
