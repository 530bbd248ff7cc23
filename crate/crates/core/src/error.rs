use thiserror::Error;

/// Errors raised by matrix construction, weighting, ranking and the
/// customer-value models. Diagnostics name the offending row/column or
/// parameter so callers can surface them directly.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix needs at least one alternative and one criterion (got {rows} x {cols})")]
    EmptyMatrix { rows: usize, cols: usize },

    #[error("value grid has {got} entries but {rows} alternatives x {cols} criteria = {} were declared", rows * cols)]
    DimensionMismatch { rows: usize, cols: usize, got: usize },

    #[error("non-finite value {value} at alternative '{alternative}', criterion '{criterion}'")]
    NonFiniteValue {
        alternative: String,
        criterion: String,
        value: f64,
    },

    #[error("duplicate alternative id '{id}'")]
    DuplicateAlternative { id: String },

    #[error("duplicate criterion name '{name}'")]
    DuplicateCriterion { name: String },

    #[error("criterion {index} has an empty name")]
    EmptyCriterionName { index: usize },

    #[error("expected {expected} weights (one per criterion), got {got}")]
    WeightCountMismatch { expected: usize, got: usize },

    #[error("weight {index} is {value}; weights must be finite and >= 0")]
    InvalidWeight { index: usize, value: f64 },

    #[error("weights sum to {sum}, not 1 (tolerance {tolerance})")]
    WeightSumNotOne { sum: f64, tolerance: f64 },

    #[error("criterion '{criterion}' is degenerate: {reason}")]
    DegenerateColumn { criterion: String, reason: String },

    #[error("negative entry {value} at alternative '{alternative}', criterion '{criterion}'; entropy proportions need non-negative data")]
    NegativeEntry {
        alternative: String,
        criterion: String,
        value: f64,
    },

    #[error("proportion {value} at row {row}, column {column} is outside [0, 1]")]
    InvalidProportion { row: usize, column: usize, value: f64 },

    #[error("entropy is undefined for a single alternative (ln 1 = 0)")]
    SingleAlternative,

    #[error("every criterion has zero divergence; entropy weights are undefined")]
    AllColumnsConstant,

    #[error("non-finite score {score} for alternative '{id}'")]
    NonFiniteScore { id: String, score: f64 },

    #[error("score count {scores} does not match alternative count {alternatives}")]
    ScoreCountMismatch { scores: usize, alternatives: usize },

    #[error("all alternatives coincide with both ideal points; closeness is undefined")]
    DegenerateIdeal,

    #[error("ranking {index} covers a different alternative set than ranking 0")]
    MismatchedAlternatives { index: usize },

    #[error("at least one input ranking is required")]
    NoRankings,

    #[error("duplicate alternative '{id}' in ranking {index}")]
    DuplicateInRanking { id: String, index: usize },

    #[error("discount rate {rate} is <= -1; discounting is degenerate")]
    DegenerateDiscountRate { rate: f64 },

    #[error("retention probability {value} at period {period} is outside [0, 1]")]
    InvalidRetention { period: usize, value: f64 },

    #[error("non-finite cash amount {value} at period {period}")]
    NonFiniteCash { period: usize, value: f64 },

    #[error("parameter {parameter} has zero perceived cost; relative net benefit is undefined")]
    ZeroPerceivedCost { parameter: usize },

    #[error("parameter {parameter} has importance {value} outside [0, 1]")]
    ImportanceOutOfRange { parameter: usize, value: f64 },

    #[error("non-finite perception value {value} for parameter {parameter}")]
    NonFinitePerception { parameter: usize, value: f64 },

    #[error("questionnaire needs exactly {expected} answers, got {got}")]
    WrongAnswerCount { expected: usize, got: usize },

    #[error("likert level {level} is outside 1..=5")]
    InvalidLikertLevel { level: u8 },

    #[error("non-finite coordinate ({value_from}, {value_to}) for customer '{id}'")]
    NonFiniteCoordinate {
        id: String,
        value_from: f64,
        value_to: f64,
    },

    #[error("empty input: {context}")]
    EmptyInput { context: String },
}

pub type Result<T> = std::result::Result<T, Error>;
