//! Customer value models: lifetime value, perceived value and
//! questionnaire scoring.

use serde::Serialize;

use crate::error::{Error, Result};

/// One period of a customer relationship: price paid, direct cost to
/// serve, and the probability the customer is still active.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CashFlowPeriod {
    pub price: f64,
    pub direct_cost: f64,
    pub retention: f64,
}

/// Inputs for the lifetime-value computation. Periods are indexed from 0
/// (the acquisition period, undiscounted) through the horizon `T`, so the
/// horizon is `periods.len() - 1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClvInputs {
    periods: Vec<CashFlowPeriod>,
    discount_rate: f64,
    acquisition_cost: f64,
}

impl ClvInputs {
    pub fn new(
        periods: Vec<CashFlowPeriod>,
        discount_rate: f64,
        acquisition_cost: f64,
    ) -> Result<Self> {
        if periods.is_empty() {
            return Err(Error::EmptyInput {
                context: "lifetime value needs at least period 0".into(),
            });
        }
        if !discount_rate.is_finite() || discount_rate <= -1.0 {
            return Err(Error::DegenerateDiscountRate {
                rate: discount_rate,
            });
        }
        if !acquisition_cost.is_finite() {
            return Err(Error::NonFiniteCash {
                period: 0,
                value: acquisition_cost,
            });
        }
        for (period, p) in periods.iter().enumerate() {
            if !p.price.is_finite() || !p.direct_cost.is_finite() {
                return Err(Error::NonFiniteCash {
                    period,
                    value: if p.price.is_finite() {
                        p.direct_cost
                    } else {
                        p.price
                    },
                });
            }
            if !p.retention.is_finite() || !(0.0..=1.0).contains(&p.retention) {
                return Err(Error::InvalidRetention {
                    period,
                    value: p.retention,
                });
            }
        }
        Ok(ClvInputs {
            periods,
            discount_rate,
            acquisition_cost,
        })
    }

    pub fn horizon(&self) -> usize {
        self.periods.len() - 1
    }

    pub fn periods(&self) -> &[CashFlowPeriod] {
        &self.periods
    }
}

/// Discounted retention-weighted margin over the horizon, net of the
/// acquisition cost:
/// `sum_t (price_t - cost_t) * retention_t / (1 + i)^t - AC`.
pub fn clv(inputs: &ClvInputs) -> f64 {
    let discounted: f64 = inputs
        .periods
        .iter()
        .enumerate()
        .map(|(t, p)| {
            (p.price - p.direct_cost) * p.retention / (1.0 + inputs.discount_rate).powi(t as i32)
        })
        .sum();
    discounted - inputs.acquisition_cost
}

/// One perceived parameter: how much the customer cares about it, and the
/// benefit and cost they associate with it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PerceptionParameter {
    pub importance: f64,
    pub benefit: f64,
    pub cost: f64,
}

/// A customer's view of the offering, one entry per parameter.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValuePerception {
    parameters: Vec<PerceptionParameter>,
}

impl ValuePerception {
    /// Validates every importance into [0, 1] and rejects zero costs;
    /// diagnostics number parameters from 1.
    pub fn new(parameters: Vec<PerceptionParameter>) -> Result<Self> {
        for (index, p) in parameters.iter().enumerate() {
            let parameter = index + 1;
            if !p.importance.is_finite() || !p.benefit.is_finite() || !p.cost.is_finite() {
                return Err(Error::NonFinitePerception {
                    parameter,
                    value: [p.importance, p.benefit, p.cost]
                        .into_iter()
                        .find(|v| !v.is_finite())
                        .unwrap(),
                });
            }
            if !(0.0..=1.0).contains(&p.importance) {
                return Err(Error::ImportanceOutOfRange {
                    parameter,
                    value: p.importance,
                });
            }
            if p.cost == 0.0 {
                return Err(Error::ZeroPerceivedCost { parameter });
            }
        }
        Ok(ValuePerception { parameters })
    }

    pub fn parameters(&self) -> &[PerceptionParameter] {
        &self.parameters
    }
}

/// Importance-weighted sum of relative net benefits:
/// `sum_j importance_j * (benefit_j - cost_j) / cost_j`.
pub fn value_to_customer(perception: &ValuePerception) -> f64 {
    perception
        .parameters
        .iter()
        .map(|p| p.importance * (p.benefit - p.cost) / p.cost)
        .sum()
}

/// Five-level agreement scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LikertLevel {
    StronglyDisagree,
    Disagree,
    Neutral,
    Agree,
    StronglyAgree,
}

impl LikertLevel {
    /// Levels are numbered 1 (strongly disagree) through 5 (strongly
    /// agree) in survey files.
    pub fn from_index(level: u8) -> Result<Self> {
        match level {
            1 => Ok(LikertLevel::StronglyDisagree),
            2 => Ok(LikertLevel::Disagree),
            3 => Ok(LikertLevel::Neutral),
            4 => Ok(LikertLevel::Agree),
            5 => Ok(LikertLevel::StronglyAgree),
            other => Err(Error::InvalidLikertLevel { level: other }),
        }
    }

    /// Quantification onto the odd scale 1, 3, 5, 7, 9.
    pub fn quantify(self) -> u32 {
        match self {
            LikertLevel::StronglyDisagree => 1,
            LikertLevel::Disagree => 3,
            LikertLevel::Neutral => 5,
            LikertLevel::Agree => 7,
            LikertLevel::StronglyAgree => 9,
        }
    }
}

/// Number of questionnaire items.
pub const QUESTION_COUNT: usize = 50;

/// The five service categories, ten questions each, in file order.
pub const CATEGORIES: [&str; 5] = [
    "Planning and financial resources",
    "Understanding and friendliness",
    "Control and fairness",
    "Options and alternatives",
    "Information and communication",
];

/// A filled 50-question survey.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuestionnaireResponse {
    answers: Vec<LikertLevel>,
}

impl QuestionnaireResponse {
    pub fn new(answers: Vec<LikertLevel>) -> Result<Self> {
        if answers.len() != QUESTION_COUNT {
            return Err(Error::WrongAnswerCount {
                expected: QUESTION_COUNT,
                got: answers.len(),
            });
        }
        Ok(QuestionnaireResponse { answers })
    }

    pub fn answers(&self) -> &[LikertLevel] {
        &self.answers
    }
}

/// Quantified questionnaire totals.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuestionnaireScore {
    pub total: u32,
    pub per_category: [u32; 5],
}

/// Sum the quantified answers; the total ranges from 50 (all strongly
/// disagree) to 450 (all strongly agree) and always equals the sum of the
/// five category subtotals.
pub fn questionnaire_score(response: &QuestionnaireResponse) -> QuestionnaireScore {
    let mut per_category = [0u32; 5];
    for (index, answer) in response.answers.iter().enumerate() {
        per_category[index / 10] += answer.quantify();
    }
    QuestionnaireScore {
        total: per_category.iter().sum(),
        per_category,
    }
}
