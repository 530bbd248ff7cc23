//! Objective criterion weights from Shannon entropy.
//!
//! Each column is turned into a distribution over alternatives
//! (`P_ij = X_ij / sum_i X_ij`), its entropy is measured relative to the
//! maximum `ln m`, and the divergence `1 - e_j` of each criterion is
//! normalized into a weight. A criterion whose values barely differ across
//! alternatives carries no discriminating information and ends up with a
//! weight near zero.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{DecisionMatrix, WeightVector};

/// An m x n grid of proportions, row-major.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Proportions {
    rows: usize,
    cols: usize,
    values: Vec<f64>,
}

impl Proportions {
    /// Wrap an externally supplied grid. Values must be finite and within
    /// [0, 1]; column sums are taken as given.
    pub fn new(rows: usize, cols: usize, values: Vec<f64>) -> Result<Self> {
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
        for (pos, &value) in values.iter().enumerate() {
            if !value.is_finite() || !(0.0..=1.0).contains(&value) {
                return Err(Error::InvalidProportion {
                    row: pos / cols,
                    column: pos % cols,
                    value,
                });
            }
        }
        Ok(Proportions { rows, cols, values })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, row: usize, col: usize) -> f64 {
        self.values[row * self.cols + col]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    fn column(&self, col: usize) -> impl Iterator<Item = f64> + '_ {
        self.values[col..].iter().step_by(self.cols).copied()
    }
}

/// Full entropy-weighting trace: proportions, per-criterion entropies and
/// divergences, and the resulting weights.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntropyReport {
    pub proportions: Proportions,
    pub entropies: Vec<f64>,
    pub divergences: Vec<f64>,
    pub weights: WeightVector,
}

/// Per-column proportions `P_ij = X_ij / sum_i X_ij`.
///
/// Requires non-negative data and a positive sum in every column.
pub fn proportions(matrix: &DecisionMatrix) -> Result<Proportions> {
    let n = matrix.n_criteria();
    let mut sums = vec![0.0_f64; n];
    for (pos, &value) in matrix.values().iter().enumerate() {
        if value < 0.0 {
            return Err(Error::NegativeEntry {
                alternative: matrix.alternatives()[pos / n].clone(),
                criterion: matrix.criteria()[pos % n].name.clone(),
                value,
            });
        }
        sums[pos % n] += value;
    }
    for (j, &sum) in sums.iter().enumerate() {
        if sum <= 0.0 {
            return Err(Error::DegenerateColumn {
                criterion: matrix.criteria()[j].name.clone(),
                reason: "column sums to zero, proportions are undefined".into(),
            });
        }
    }
    let values = matrix
        .values()
        .iter()
        .enumerate()
        .map(|(pos, &value)| value / sums[pos % n])
        .collect();
    Ok(Proportions {
        rows: matrix.n_alternatives(),
        cols: n,
        values,
    })
}

/// Per-criterion entropies `e_j = -(ln m)^-1 sum_i P_ij ln P_ij`.
///
/// Zero proportions contribute nothing (`0 ln 0 = 0`). A column whose
/// proportions are all equal is the uniform distribution and gets entropy
/// exactly 1. Undefined for a single alternative (`ln 1 = 0`).
pub fn entropy_values(proportions: &Proportions) -> Result<Vec<f64>> {
    let m = proportions.rows();
    if m < 2 {
        return Err(Error::SingleAlternative);
    }
    let ln_m = (m as f64).ln();
    let entropies = (0..proportions.cols())
        .map(|j| {
            let first = proportions.at(0, j);
            if proportions.column(j).all(|p| p == first) {
                return 1.0;
            }
            let sum: f64 = proportions
                .column(j)
                .filter(|&p| p > 0.0)
                .map(|p| p * p.ln())
                .sum();
            (-sum / ln_m).clamp(0.0, 1.0)
        })
        .collect();
    Ok(entropies)
}

/// Entropy weights for a decision matrix: proportions, entropies,
/// divergences `1 - e_j` and weights `w_j = DIV_j / sum DIV`.
pub fn entropy_weights(matrix: &DecisionMatrix) -> Result<EntropyReport> {
    report_from_proportions(proportions(matrix)?)
}

/// Derive the entropy report from an already-built proportions grid.
///
/// The grid is used exactly as given; callers that hold precomputed
/// proportions (or want to reproduce someone else's) go through here.
pub fn report_from_proportions(proportions: Proportions) -> Result<EntropyReport> {
    let entropies = entropy_values(&proportions)?;
    let divergences: Vec<f64> = entropies.iter().map(|e| 1.0 - e).collect();
    let total: f64 = divergences.iter().sum();
    if total <= 0.0 {
        return Err(Error::AllColumnsConstant);
    }
    let weights = WeightVector::new(divergences.iter().map(|d| d / total).collect())?;
    Ok(EntropyReport {
        proportions,
        entropies,
        divergences,
        weights,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::CriterionSpec;

    fn matrix(cols: &[&[f64]]) -> DecisionMatrix {
        let rows = cols[0].len();
        let ids = (0..rows).map(|i| format!("a{i}")).collect();
        let criteria = (0..cols.len())
            .map(|j| CriterionSpec::benefit(format!("c{j}")))
            .collect();
        let mut values = Vec::with_capacity(rows * cols.len());
        for i in 0..rows {
            for col in cols {
                values.push(col[i]);
            }
        }
        DecisionMatrix::new(ids, criteria, values).unwrap()
    }

    #[test]
    fn uniform_column_has_quarter_proportions() {
        let p = proportions(&matrix(&[&[1.0, 1.0, 1.0, 1.0]])).unwrap();
        assert_eq!(p.values(), &[0.25, 0.25, 0.25, 0.25]);
    }

    #[test]
    fn zero_entry_gives_zero_proportion() {
        let p = proportions(&matrix(&[&[0.0, 2.0]])).unwrap();
        assert_eq!(p.at(0, 0), 0.0);
        assert_eq!(p.at(1, 0), 1.0);
    }

    #[test]
    fn negative_entry_is_rejected() {
        let err = proportions(&matrix(&[&[1.0, -0.5]])).unwrap_err();
        assert!(matches!(err, Error::NegativeEntry { .. }));
    }

    #[test]
    fn zero_column_is_rejected() {
        let err = proportions(&matrix(&[&[0.0, 0.0]])).unwrap_err();
        assert!(matches!(err, Error::DegenerateColumn { .. }));
    }

    #[test]
    fn uniform_proportions_have_maximal_entropy() {
        let p = proportions(&matrix(&[&[3.0, 3.0, 3.0]])).unwrap();
        assert_eq!(entropy_values(&p).unwrap(), vec![1.0]);
    }

    #[test]
    fn degenerate_distribution_has_zero_entropy() {
        // P = [0, 1] with the 0 ln 0 = 0 convention
        let p = proportions(&matrix(&[&[0.0, 7.0]])).unwrap();
        assert_eq!(entropy_values(&p).unwrap(), vec![0.0]);
    }

    #[test]
    fn single_alternative_entropy_is_undefined() {
        let p = Proportions::new(1, 1, vec![1.0]).unwrap();
        assert!(matches!(
            entropy_values(&p).unwrap_err(),
            Error::SingleAlternative
        ));
    }

    #[test]
    fn constant_column_gets_zero_weight() {
        let report = entropy_weights(&matrix(&[&[2.0, 2.0, 2.0], &[1.0, 5.0, 9.0]])).unwrap();
        assert_eq!(report.weights.as_slice(), &[0.0, 1.0]);
        assert_eq!(report.entropies[0], 1.0);
        assert_eq!(report.divergences[0], 0.0);
    }

    #[test]
    fn all_constant_columns_are_rejected() {
        let err = entropy_weights(&matrix(&[&[2.0, 2.0], &[3.0, 3.0]])).unwrap_err();
        assert!(matches!(err, Error::AllColumnsConstant));
    }

    #[test]
    fn proportions_outside_unit_interval_are_rejected() {
        let err = Proportions::new(2, 1, vec![0.5, 1.5]).unwrap_err();
        assert!(matches!(
            err,
            Error::InvalidProportion { row: 1, column: 0, .. }
        ));
    }
}
