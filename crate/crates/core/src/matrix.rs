//! Decision matrices, criterion metadata and weight vectors.
//!
//! A [`DecisionMatrix`] is an m x n grid of finite scores: one row per
//! alternative, one column per criterion. Construction validates shape,
//! finiteness and id uniqueness once; everything downstream can then rely
//! on those invariants.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::normalize::NormalizedMatrix;

/// Whether larger values of a criterion are better (benefit) or worse (cost).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Benefit,
    Cost,
}

/// Name and direction of one criterion column.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionSpec {
    pub name: String,
    pub direction: Direction,
}

impl CriterionSpec {
    pub fn benefit(name: impl Into<String>) -> Self {
        CriterionSpec {
            name: name.into(),
            direction: Direction::Benefit,
        }
    }

    pub fn cost(name: impl Into<String>) -> Self {
        CriterionSpec {
            name: name.into(),
            direction: Direction::Cost,
        }
    }
}

/// Validated m x n decision matrix (row-major storage).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecisionMatrix {
    alternatives: Vec<String>,
    criteria: Vec<CriterionSpec>,
    values: Vec<f64>,
}

impl DecisionMatrix {
    /// Build a matrix from alternative ids, criterion specs and a row-major
    /// value grid. Rejects empty shapes, dimension mismatches, non-finite
    /// values and duplicate ids, naming the offending entry.
    pub fn new(
        alternatives: Vec<String>,
        criteria: Vec<CriterionSpec>,
        values: Vec<f64>,
    ) -> Result<Self> {
        let rows = alternatives.len();
        let cols = criteria.len();
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix { rows, cols });
        }
        if values.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                rows,
                cols,
                got: values.len(),
            });
        }
        for (index, spec) in criteria.iter().enumerate() {
            if spec.name.is_empty() {
                return Err(Error::EmptyCriterionName { index });
            }
            if criteria[..index].iter().any(|c| c.name == spec.name) {
                return Err(Error::DuplicateCriterion {
                    name: spec.name.clone(),
                });
            }
        }
        for (index, id) in alternatives.iter().enumerate() {
            if alternatives[..index].iter().any(|other| other == id) {
                return Err(Error::DuplicateAlternative { id: id.clone() });
            }
        }
        for (pos, &value) in values.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFiniteValue {
                    alternative: alternatives[pos / cols].clone(),
                    criterion: criteria[pos % cols].name.clone(),
                    value,
                });
            }
        }
        Ok(DecisionMatrix {
            alternatives,
            criteria,
            values,
        })
    }

    pub fn n_alternatives(&self) -> usize {
        self.alternatives.len()
    }

    pub fn n_criteria(&self) -> usize {
        self.criteria.len()
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn criteria(&self) -> &[CriterionSpec] {
        &self.criteria
    }

    /// Row-major value storage.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn value(&self, row: usize, col: usize) -> f64 {
        self.values[row * self.criteria.len() + col]
    }

    pub fn row(&self, row: usize) -> &[f64] {
        let n = self.criteria.len();
        &self.values[row * n..(row + 1) * n]
    }

    pub fn column(&self, col: usize) -> impl Iterator<Item = f64> + '_ {
        let n = self.criteria.len();
        self.values[col..].iter().step_by(n).copied()
    }

    /// Same ids/criteria with a new value grid of identical shape.
    pub(crate) fn with_values(&self, values: Vec<f64>) -> DecisionMatrix {
        debug_assert_eq!(values.len(), self.values.len());
        DecisionMatrix {
            alternatives: self.alternatives.clone(),
            criteria: self.criteria.clone(),
            values,
        }
    }
}

/// Tolerance on `sum(weights) = 1` accepted by [`WeightVector::new`].
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-9;

/// Non-negative per-criterion weights. [`WeightVector::new`] additionally
/// requires the weights to sum to 1; [`WeightVector::raw`] skips the sum
/// check for order-level analyses where only ratios matter.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeightVector {
    weights: Vec<f64>,
    normalized: bool,
}

impl WeightVector {
    /// Simplex-validated weights: each finite and >= 0, summing to 1
    /// within [`WEIGHT_SUM_TOLERANCE`].
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        let v = Self::raw(weights)?;
        let sum: f64 = v.weights.iter().sum();
        if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
            return Err(Error::WeightSumNotOne {
                sum,
                tolerance: WEIGHT_SUM_TOLERANCE,
            });
        }
        Ok(WeightVector {
            normalized: true,
            ..v
        })
    }

    /// Weights checked only for finiteness and non-negativity.
    pub fn raw(weights: Vec<f64>) -> Result<Self> {
        for (index, &value) in weights.iter().enumerate() {
            if !value.is_finite() || value < 0.0 {
                return Err(Error::InvalidWeight { index, value });
            }
        }
        Ok(WeightVector {
            weights,
            normalized: false,
        })
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.weights
    }

    /// True when the simplex constraint was validated at construction.
    pub fn is_normalized(&self) -> bool {
        self.normalized
    }
}

/// Weighted normalized matrix: `v_ij = w_j * r_ij`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeightedMatrix {
    matrix: DecisionMatrix,
}

impl WeightedMatrix {
    pub fn as_matrix(&self) -> &DecisionMatrix {
        &self.matrix
    }

    pub(crate) fn from_matrix(matrix: DecisionMatrix) -> Self {
        WeightedMatrix { matrix }
    }
}

/// Scale each criterion column of a normalized matrix by its weight.
///
/// The output has the same shape as the input; column `j` is the input
/// column multiplied by `weights[j]`.
pub fn apply_weights(matrix: &NormalizedMatrix, weights: &WeightVector) -> Result<WeightedMatrix> {
    let inner = matrix.as_matrix();
    if weights.len() != inner.n_criteria() {
        return Err(Error::WeightCountMismatch {
            expected: inner.n_criteria(),
            got: weights.len(),
        });
    }
    let n = inner.n_criteria();
    let values = inner
        .values()
        .iter()
        .enumerate()
        .map(|(pos, &value)| value * weights.as_slice()[pos % n])
        .collect();
    Ok(WeightedMatrix::from_matrix(inner.with_values(values)))
}
