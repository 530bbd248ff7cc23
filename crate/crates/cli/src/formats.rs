//! CSV input formats.
//!
//! All inputs are UTF-8 CSV with a header row. Parse diagnostics carry
//! 1-based line numbers.

use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use mcda_core::value::{
    CashFlowPeriod, ClvInputs, LikertLevel, PerceptionParameter, QuestionnaireResponse,
    ValuePerception, QUESTION_COUNT,
};
use mcda_core::{CriterionSpec, DecisionMatrix, Direction};

fn reader(path: &Path) -> Result<csv::Reader<std::fs::File>> {
    csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .flexible(true)
        .from_path(path)
        .with_context(|| format!("cannot open '{}'", path.display()))
}

fn parse_number(field: &str, path: &Path, line: u64, column: &str) -> Result<f64> {
    field.parse::<f64>().map_err(|_| {
        anyhow!(
            "{}:{line}: column '{column}' has non-numeric value '{field}'",
            path.display()
        )
    })
}

/// Decision matrix CSV: first column `id`, one column per criterion.
/// Criterion direction rides in the header as `name:benefit` /
/// `name:cost`; a bare `name` defaults to benefit.
pub fn read_matrix(path: &Path) -> Result<DecisionMatrix> {
    let mut reader = reader(path)?;
    let headers = reader
        .headers()
        .with_context(|| format!("{}: missing header row", path.display()))?
        .clone();
    if headers.is_empty() || !headers.get(0).unwrap_or("").eq_ignore_ascii_case("id") {
        bail!(
            "{}:1: first header column must be 'id', got '{}'",
            path.display(),
            headers.get(0).unwrap_or("")
        );
    }
    if headers.len() < 2 {
        bail!("{}:1: no criterion columns declared", path.display());
    }
    let mut criteria = Vec::with_capacity(headers.len() - 1);
    for header in headers.iter().skip(1) {
        let (name, direction) = match header.split_once(':') {
            None => (header, Direction::Benefit),
            Some((name, "benefit")) => (name, Direction::Benefit),
            Some((name, "cost")) => (name, Direction::Cost),
            Some((_, other)) => bail!(
                "{}:1: criterion '{header}' has unknown direction '{other}' (use benefit or cost)",
                path.display()
            ),
        };
        criteria.push(CriterionSpec {
            name: name.to_string(),
            direction,
        });
    }

    let mut ids = Vec::new();
    let mut values = Vec::new();
    for record in reader.records() {
        let record = record.with_context(|| format!("{}: malformed CSV", path.display()))?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        if record.len() != criteria.len() + 1 {
            bail!(
                "{}:{line}: expected {} fields (id + {} criteria), got {}",
                path.display(),
                criteria.len() + 1,
                criteria.len(),
                record.len()
            );
        }
        ids.push(record.get(0).unwrap().to_string());
        for (j, field) in record.iter().skip(1).enumerate() {
            values.push(parse_number(field, path, line, &criteria[j].name)?);
        }
    }
    DecisionMatrix::new(ids, criteria, values)
        .with_context(|| format!("{}: invalid decision matrix", path.display()))
}

/// One customer's lifetime-value inputs assembled from the long-format
/// periods file.
#[derive(Debug)]
pub struct CustomerPeriods {
    pub id: String,
    pub inputs: ClvInputs,
}

/// Periods CSV, one row per customer-period:
/// `id,period,price,cost,retention,discount_rate,acquisition_cost`.
/// Periods must run 0..=T per customer; the discount rate and acquisition
/// cost must repeat identically on each of a customer's rows.
pub fn read_periods(path: &Path) -> Result<Vec<CustomerPeriods>> {
    let mut reader = reader(path)?;
    let headers = reader.headers()?.clone();
    let expected = [
        "id",
        "period",
        "price",
        "cost",
        "retention",
        "discount_rate",
        "acquisition_cost",
    ];
    let got: Vec<&str> = headers.iter().collect();
    if got != expected {
        bail!(
            "{}:1: expected header '{}', got '{}'",
            path.display(),
            expected.join(","),
            got.join(",")
        );
    }

    struct Partial {
        rows: Vec<(usize, CashFlowPeriod, u64)>,
        discount: f64,
        acquisition: f64,
    }
    let mut order: Vec<String> = Vec::new();
    let mut partials: std::collections::HashMap<String, Partial> =
        std::collections::HashMap::new();
    for record in reader.records() {
        let record = record?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        if record.len() != 7 {
            bail!(
                "{}:{line}: expected 7 fields, got {}",
                path.display(),
                record.len()
            );
        }
        let id = record.get(0).unwrap().to_string();
        let period: usize = record.get(1).unwrap().parse().map_err(|_| {
            anyhow!(
                "{}:{line}: column 'period' has non-integer value '{}'",
                path.display(),
                record.get(1).unwrap()
            )
        })?;
        let cash = CashFlowPeriod {
            price: parse_number(record.get(2).unwrap(), path, line, "price")?,
            direct_cost: parse_number(record.get(3).unwrap(), path, line, "cost")?,
            retention: parse_number(record.get(4).unwrap(), path, line, "retention")?,
        };
        let discount = parse_number(record.get(5).unwrap(), path, line, "discount_rate")?;
        let acquisition = parse_number(record.get(6).unwrap(), path, line, "acquisition_cost")?;
        match partials.get_mut(&id) {
            None => {
                order.push(id.clone());
                partials.insert(
                    id,
                    Partial {
                        rows: vec![(period, cash, line)],
                        discount,
                        acquisition,
                    },
                );
            }
            Some(partial) => {
                if partial.discount != discount || partial.acquisition != acquisition {
                    bail!(
                        "{}:{line}: customer '{id}' repeats with a different discount rate \
                         or acquisition cost",
                        path.display()
                    );
                }
                partial.rows.push((period, cash, line));
            }
        }
    }
    if order.is_empty() {
        bail!("{}: empty input, no customer periods", path.display());
    }

    let mut customers = Vec::with_capacity(order.len());
    for id in order {
        let mut partial = partials.remove(&id).unwrap();
        partial.rows.sort_by_key(|(period, _, _)| *period);
        for (index, (period, _, line)) in partial.rows.iter().enumerate() {
            if *period != index {
                bail!(
                    "{}:{line}: customer '{id}' has periods that do not run 0..=T \
                     (found period {period} at position {index})",
                    path.display()
                );
            }
        }
        let inputs = ClvInputs::new(
            partial.rows.into_iter().map(|(_, cash, _)| cash).collect(),
            partial.discount,
            partial.acquisition,
        )
        .with_context(|| format!("{}: customer '{id}'", path.display()))?;
        customers.push(CustomerPeriods { id, inputs });
    }
    Ok(customers)
}

/// Questionnaire CSV: one row per customer, `id` plus 50 answer columns
/// holding Likert levels 1..=5.
pub fn read_questionnaires(path: &Path) -> Result<Vec<(String, QuestionnaireResponse)>> {
    let mut reader = reader(path)?;
    let headers = reader.headers()?.clone();
    if !headers.get(0).unwrap_or("").eq_ignore_ascii_case("id") {
        bail!("{}:1: first header column must be 'id'", path.display());
    }
    let mut responses = Vec::new();
    for record in reader.records() {
        let record = record?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        let id = record.get(0).unwrap_or("").to_string();
        if record.len() != QUESTION_COUNT + 1 {
            bail!(
                "{}:{line}: customer '{id}' has {} answer columns, expected {QUESTION_COUNT}",
                path.display(),
                record.len().saturating_sub(1)
            );
        }
        let mut answers = Vec::with_capacity(QUESTION_COUNT);
        for (index, field) in record.iter().skip(1).enumerate() {
            let level: u8 = field.parse().map_err(|_| {
                anyhow!(
                    "{}:{line}: answer {} of customer '{id}' is not an integer: '{field}'",
                    path.display(),
                    index + 1
                )
            })?;
            answers.push(LikertLevel::from_index(level).map_err(|e| {
                anyhow!(
                    "{}:{line}: answer {} of customer '{id}': {e}",
                    path.display(),
                    index + 1
                )
            })?);
        }
        responses.push((id, QuestionnaireResponse::new(answers)?));
    }
    if responses.is_empty() {
        bail!("{}: empty input, no questionnaire rows", path.display());
    }
    Ok(responses)
}

/// Perception CSV for the perceived-value model, one row per customer
/// parameter: `id,parameter,importance,benefit,cost`.
pub fn read_perceptions(path: &Path) -> Result<Vec<(String, ValuePerception)>> {
    let mut reader = reader(path)?;
    let headers = reader.headers()?.clone();
    let got: Vec<&str> = headers.iter().collect();
    if got != ["id", "parameter", "importance", "benefit", "cost"] {
        bail!(
            "{}:1: expected header 'id,parameter,importance,benefit,cost', got '{}'",
            path.display(),
            got.join(",")
        );
    }
    let mut order: Vec<String> = Vec::new();
    let mut grouped: std::collections::HashMap<String, Vec<PerceptionParameter>> =
        std::collections::HashMap::new();
    for record in reader.records() {
        let record = record?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        if record.len() != 5 {
            bail!(
                "{}:{line}: expected 5 fields, got {}",
                path.display(),
                record.len()
            );
        }
        let id = record.get(0).unwrap().to_string();
        let parameter = PerceptionParameter {
            importance: parse_number(record.get(2).unwrap(), path, line, "importance")?,
            benefit: parse_number(record.get(3).unwrap(), path, line, "benefit")?,
            cost: parse_number(record.get(4).unwrap(), path, line, "cost")?,
        };
        if !grouped.contains_key(&id) {
            order.push(id.clone());
        }
        grouped.entry(id).or_default().push(parameter);
    }
    order
        .into_iter()
        .map(|id| {
            let parameters = grouped.remove(&id).unwrap();
            let perception = ValuePerception::new(parameters)
                .with_context(|| format!("{}: customer '{id}'", path.display()))?;
            Ok((id, perception))
        })
        .collect()
}

/// Segmentation points CSV: `id,value_from,value_to`.
pub fn read_points(path: &Path) -> Result<Vec<(String, f64, f64)>> {
    let mut reader = reader(path)?;
    let headers = reader.headers()?.clone();
    let got: Vec<&str> = headers.iter().collect();
    if got != ["id", "value_from", "value_to"] {
        bail!(
            "{}:1: expected header 'id,value_from,value_to', got '{}'",
            path.display(),
            got.join(",")
        );
    }
    let mut points = Vec::new();
    for record in reader.records() {
        let record = record?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        if record.len() != 3 {
            bail!(
                "{}:{line}: expected 3 fields, got {}",
                path.display(),
                record.len()
            );
        }
        points.push((
            record.get(0).unwrap().to_string(),
            parse_number(record.get(1).unwrap(), path, line, "value_from")?,
            parse_number(record.get(2).unwrap(), path, line, "value_to")?,
        ));
    }
    if points.is_empty() {
        bail!("{}: empty input, no customers to segment", path.display());
    }
    Ok(points)
}
