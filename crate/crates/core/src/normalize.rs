//! Column normalization schemes.
//!
//! Two schemes are provided: vector normalization (divide each column by
//! its Euclidean norm) and min-max normalization, which maps benefit
//! columns through `(x - min) / (max - min)` and cost columns through
//! `(max - x) / (max - min)` so that larger is always better afterwards.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{DecisionMatrix, Direction};

/// How a [`NormalizedMatrix`] was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NormScheme {
    /// Columns divided by their Euclidean norm.
    Vector,
    /// Benefit/cost min-max scaling into [0, 1].
    MinMax,
    /// Values supplied already normalized by the caller.
    External,
}

/// A decision matrix whose values have been normalized (or declared
/// normalized by the caller), plus the scheme tag and any degenerate
/// columns encountered along the way.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NormalizedMatrix {
    matrix: DecisionMatrix,
    scheme: NormScheme,
    /// Criteria whose column was constant under min-max scaling; their
    /// output is all zeros and downstream weighting should treat them as
    /// carrying no information.
    degenerate_criteria: Vec<String>,
}

impl NormalizedMatrix {
    /// Wrap a matrix whose values are already normalized.
    pub fn pre_normalized(matrix: DecisionMatrix) -> Self {
        NormalizedMatrix {
            matrix,
            scheme: NormScheme::External,
            degenerate_criteria: Vec::new(),
        }
    }

    pub fn as_matrix(&self) -> &DecisionMatrix {
        &self.matrix
    }

    pub fn scheme(&self) -> NormScheme {
        self.scheme
    }

    /// Criteria flagged as constant during min-max normalization.
    pub fn degenerate_criteria(&self) -> &[String] {
        &self.degenerate_criteria
    }
}

/// Vector normalization: `r_ij = a_ij / sqrt(sum_i a_ij^2)`.
///
/// Errors on an all-zero column, since the norm divisor vanishes.
pub fn vector_normalize(matrix: &DecisionMatrix) -> Result<NormalizedMatrix> {
    let n = matrix.n_criteria();
    let mut norms = vec![0.0_f64; n];
    for (pos, &value) in matrix.values().iter().enumerate() {
        norms[pos % n] += value * value;
    }
    for (j, norm_sq) in norms.iter_mut().enumerate() {
        if *norm_sq == 0.0 {
            return Err(Error::DegenerateColumn {
                criterion: matrix.criteria()[j].name.clone(),
                reason: "all values are zero, vector norm is zero".into(),
            });
        }
        *norm_sq = norm_sq.sqrt();
    }
    let values = matrix
        .values()
        .iter()
        .enumerate()
        .map(|(pos, &value)| value / norms[pos % n])
        .collect();
    Ok(NormalizedMatrix {
        matrix: matrix.with_values(values),
        scheme: NormScheme::Vector,
        degenerate_criteria: Vec::new(),
    })
}

/// Min-max normalization into [0, 1], direction-aware.
///
/// Constant columns cannot be scaled (the denominator is zero); they map
/// to all zeros and the criterion is recorded in
/// [`NormalizedMatrix::degenerate_criteria`].
pub fn minmax_normalize(matrix: &DecisionMatrix) -> Result<NormalizedMatrix> {
    let n = matrix.n_criteria();
    let mut mins = vec![f64::INFINITY; n];
    let mut maxs = vec![f64::NEG_INFINITY; n];
    for (pos, &value) in matrix.values().iter().enumerate() {
        let j = pos % n;
        mins[j] = mins[j].min(value);
        maxs[j] = maxs[j].max(value);
    }
    let mut degenerate = Vec::new();
    for (j, spec) in matrix.criteria().iter().enumerate() {
        if maxs[j] == mins[j] {
            degenerate.push(spec.name.clone());
        }
    }
    let values = matrix
        .values()
        .iter()
        .enumerate()
        .map(|(pos, &value)| {
            let j = pos % n;
            let range = maxs[j] - mins[j];
            if range == 0.0 {
                0.0
            } else {
                match matrix.criteria()[j].direction {
                    Direction::Benefit => (value - mins[j]) / range,
                    Direction::Cost => (maxs[j] - value) / range,
                }
            }
        })
        .collect();
    Ok(NormalizedMatrix {
        matrix: matrix.with_values(values),
        scheme: NormScheme::MinMax,
        degenerate_criteria: degenerate,
    })
}
