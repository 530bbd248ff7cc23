//! Four-quadrant customer profiling.
//!
//! Customers are placed on two axes: the value they create for the firm
//! and the value they perceive for themselves. Each axis is split at a
//! threshold, giving four profiles:
//!
//! - `Passenger`: low firm value, low perceived value — buys out of a
//!   momentary need, priced out easily.
//! - `CostToServe`: low firm value, high perceived value — consumes
//!   resources without returning profit.
//! - `Challenger`: high firm value, low perceived value — profitable but
//!   at risk of defecting to competitors.
//! - `Noteworthy`: high on both axes — the retention and growth target.
//!
//! Values exactly at a threshold count as "high" on that axis.

use serde::Serialize;

use crate::error::{Error, Result};

/// Profile label, one per plane quadrant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Quadrant {
    Passenger,
    CostToServe,
    Challenger,
    Noteworthy,
}

impl Quadrant {
    pub fn as_str(self) -> &'static str {
        match self {
            Quadrant::Passenger => "Passenger",
            Quadrant::CostToServe => "CostToServe",
            Quadrant::Challenger => "Challenger",
            Quadrant::Noteworthy => "Noteworthy",
        }
    }
}

/// Axis split points: `firm` cuts the value-from-customer axis,
/// `customer` cuts the value-to-customer axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Thresholds {
    pub firm: f64,
    pub customer: f64,
}

/// How the axis thresholds are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ThresholdPolicy {
    /// Per-axis median of the analyzed population.
    Median,
    /// Fixed, caller-supplied split points.
    Fixed(Thresholds),
}

/// One profiled customer: the two driving values and the label.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CustomerProfile {
    pub id: String,
    pub value_from: f64,
    pub value_to: f64,
    pub quadrant: Quadrant,
}

/// A profiled population along with the thresholds that were applied.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Segmentation {
    pub thresholds: Thresholds,
    pub profiles: Vec<CustomerProfile>,
}

/// Quadrant for one `(value_from, value_to)` point; boundary values count
/// as high.
pub fn assign_profile(value_from: f64, value_to: f64, thresholds: Thresholds) -> Result<Quadrant> {
    if !value_from.is_finite() || !value_to.is_finite() {
        return Err(Error::NonFiniteCoordinate {
            id: String::new(),
            value_from,
            value_to,
        });
    }
    let high_firm = value_from >= thresholds.firm;
    let high_customer = value_to >= thresholds.customer;
    Ok(match (high_firm, high_customer) {
        (false, false) => Quadrant::Passenger,
        (false, true) => Quadrant::CostToServe,
        (true, false) => Quadrant::Challenger,
        (true, true) => Quadrant::Noteworthy,
    })
}

/// Profile a whole population of `(id, value_from, value_to)` points.
pub fn segment_all(
    customers: &[(String, f64, f64)],
    policy: ThresholdPolicy,
) -> Result<Segmentation> {
    if customers.is_empty() {
        return Err(Error::EmptyInput {
            context: "segmentation needs at least one customer".into(),
        });
    }
    for (id, value_from, value_to) in customers {
        if !value_from.is_finite() || !value_to.is_finite() {
            return Err(Error::NonFiniteCoordinate {
                id: id.clone(),
                value_from: *value_from,
                value_to: *value_to,
            });
        }
    }
    let thresholds = match policy {
        ThresholdPolicy::Fixed(t) => t,
        ThresholdPolicy::Median => Thresholds {
            firm: median(customers.iter().map(|c| c.1)),
            customer: median(customers.iter().map(|c| c.2)),
        },
    };
    let profiles = customers
        .iter()
        .map(|(id, value_from, value_to)| {
            Ok(CustomerProfile {
                id: id.clone(),
                value_from: *value_from,
                value_to: *value_to,
                quadrant: assign_profile(*value_from, *value_to, thresholds)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Segmentation {
        thresholds,
        profiles,
    })
}

fn median(values: impl Iterator<Item = f64>) -> f64 {
    let mut sorted: Vec<f64> = values.collect();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mid = sorted.len() / 2;
    if sorted.len() % 2 == 1 {
        sorted[mid]
    } else {
        0.5 * (sorted[mid - 1] + sorted[mid])
    }
}
