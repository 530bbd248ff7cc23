//! TOPSIS: rank alternatives by relative closeness to the ideal solution.
//!
//! From a weighted normalized matrix, the ideal solution collects the best
//! attainable value per criterion (column max for benefit criteria, min
//! for cost criteria) and the negative-ideal the worst. Alternatives are
//! scored by `cl_i = d_i^- / (d_i^- + d_i^+)` where `d^+`/`d^-` are the
//! Euclidean distances to the two reference points, and ranked by
//! descending closeness.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{apply_weights, Direction, WeightVector, WeightedMatrix};
use crate::normalize::NormalizedMatrix;
use crate::rank::{rank_from_scores, Ranking};

/// Ideal and negative-ideal reference rows.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdealPair {
    pub ideal: Vec<f64>,
    pub negative_ideal: Vec<f64>,
}

/// Distances of one alternative to the ideal (`to_ideal`, d+) and to the
/// negative-ideal (`to_negative`, d-).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Separation {
    pub to_ideal: f64,
    pub to_negative: f64,
}

/// Separations, closeness coefficients and the induced ranking, all
/// aligned with the input row order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TopsisResult {
    pub ideal: IdealPair,
    pub separations: Vec<Separation>,
    pub closeness: Vec<f64>,
    pub ranking: Ranking,
}

/// Best and worst attainable value per criterion over the weighted matrix.
pub fn ideal_solutions(weighted: &WeightedMatrix) -> Result<IdealPair> {
    let matrix = weighted.as_matrix();
    let mut ideal = Vec::with_capacity(matrix.n_criteria());
    let mut negative = Vec::with_capacity(matrix.n_criteria());
    for (j, spec) in matrix.criteria().iter().enumerate() {
        let mut min = f64::INFINITY;
        let mut max = f64::NEG_INFINITY;
        for value in matrix.column(j) {
            min = min.min(value);
            max = max.max(value);
        }
        match spec.direction {
            Direction::Benefit => {
                ideal.push(max);
                negative.push(min);
            }
            Direction::Cost => {
                ideal.push(min);
                negative.push(max);
            }
        }
    }
    Ok(IdealPair {
        ideal,
        negative_ideal: negative,
    })
}

/// Euclidean distances of every alternative to both reference rows.
pub fn separations(weighted: &WeightedMatrix, ideal: &IdealPair) -> Result<Vec<Separation>> {
    let matrix = weighted.as_matrix();
    if ideal.ideal.len() != matrix.n_criteria() || ideal.negative_ideal.len() != matrix.n_criteria()
    {
        return Err(Error::WeightCountMismatch {
            expected: matrix.n_criteria(),
            got: ideal.ideal.len(),
        });
    }
    Ok((0..matrix.n_alternatives())
        .map(|i| {
            let row = matrix.row(i);
            Separation {
                to_ideal: euclidean(row, &ideal.ideal),
                to_negative: euclidean(row, &ideal.negative_ideal),
            }
        })
        .collect())
}

/// Relative closeness `cl_i = d_i^- / (d_i^- + d_i^+)`, in [0, 1].
///
/// Undefined when every separation pair is (0, 0), which happens exactly
/// when all rows coincide with both reference points.
pub fn closeness(separations: &[Separation]) -> Result<Vec<f64>> {
    if separations
        .iter()
        .all(|s| s.to_ideal == 0.0 && s.to_negative == 0.0)
    {
        return Err(Error::DegenerateIdeal);
    }
    Ok(separations
        .iter()
        .map(|s| {
            let total = s.to_ideal + s.to_negative;
            if total == 0.0 {
                // row equals both coincident reference points
                0.0
            } else {
                s.to_negative / total
            }
        })
        .collect())
}

/// Full TOPSIS pipeline: weight the matrix, locate the ideal pair,
/// measure separations, convert to closeness and rank.
pub fn topsis_rank(
    matrix: &NormalizedMatrix,
    weights: &WeightVector,
    tie_tolerance: f64,
) -> Result<TopsisResult> {
    let weighted = apply_weights(matrix, weights)?;
    let ideal = ideal_solutions(&weighted)?;
    let separations = separations(&weighted, &ideal)?;
    let closeness = closeness(&separations)?;
    let pairs: Vec<(String, f64)> = matrix
        .as_matrix()
        .alternatives()
        .iter()
        .cloned()
        .zip(closeness.iter().copied())
        .collect();
    Ok(TopsisResult {
        ideal,
        separations,
        closeness,
        ranking: rank_from_scores(&pairs, tie_tolerance)?,
    })
}

fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{CriterionSpec, DecisionMatrix};
    use crate::rank::DEFAULT_TIE_TOLERANCE;

    fn weighted(criteria: Vec<CriterionSpec>, ids: &[&str], values: &[f64]) -> WeightedMatrix {
        let matrix = DecisionMatrix::new(
            ids.iter().map(|s| s.to_string()).collect(),
            criteria,
            values.to_vec(),
        )
        .unwrap();
        let n = matrix.n_criteria();
        let normalized = NormalizedMatrix::pre_normalized(matrix);
        apply_weights(
            &normalized,
            &WeightVector::raw(vec![1.0; n]).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn single_alternative_is_its_own_ideal() {
        let w = weighted(
            vec![CriterionSpec::benefit("x"), CriterionSpec::benefit("y")],
            &["a"],
            &[0.3, 0.7],
        );
        let pair = ideal_solutions(&w).unwrap();
        assert_eq!(pair.ideal, vec![0.3, 0.7]);
        assert_eq!(pair.negative_ideal, vec![0.3, 0.7]);
    }

    #[test]
    fn cost_criterion_flips_ideal_direction() {
        let w = weighted(
            vec![CriterionSpec::benefit("gain"), CriterionSpec::cost("price")],
            &["a", "b"],
            &[1.0, 10.0, 4.0, 2.0],
        );
        let pair = ideal_solutions(&w).unwrap();
        assert_eq!(pair.ideal, vec![4.0, 2.0]);
        assert_eq!(pair.negative_ideal, vec![1.0, 10.0]);
    }

    #[test]
    fn row_at_ideal_has_zero_positive_separation() {
        let w = weighted(
            vec![CriterionSpec::benefit("x"), CriterionSpec::benefit("y")],
            &["best", "worst"],
            &[4.0, 2.0, 1.0, 1.0],
        );
        let pair = ideal_solutions(&w).unwrap();
        let seps = separations(&w, &pair).unwrap();
        assert_eq!(seps[0].to_ideal, 0.0);
        assert!(seps[0].to_negative > 0.0);
        assert_eq!(seps[1].to_negative, 0.0);
    }

    #[test]
    fn dominant_pair_saturates_closeness() {
        // with two alternatives the ideal and negative-ideal coincide with
        // the dominant and dominated rows
        let m = DecisionMatrix::new(
            vec!["top".into(), "bottom".into()],
            vec![CriterionSpec::benefit("x"), CriterionSpec::benefit("y")],
            vec![0.9, 0.8, 0.1, 0.3],
        )
        .unwrap();
        let result = topsis_rank(
            &NormalizedMatrix::pre_normalized(m),
            &WeightVector::new(vec![0.5, 0.5]).unwrap(),
            DEFAULT_TIE_TOLERANCE,
        )
        .unwrap();
        assert_eq!(result.closeness, vec![1.0, 0.0]);
        assert_eq!(result.ranking.rank_of("top"), Some(1));
    }

    #[test]
    fn identical_rows_make_closeness_undefined() {
        let seps = vec![
            Separation {
                to_ideal: 0.0,
                to_negative: 0.0,
            };
            3
        ];
        assert!(matches!(
            closeness(&seps).unwrap_err(),
            Error::DegenerateIdeal
        ));
    }
}
