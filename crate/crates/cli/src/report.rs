//! Report document emitted by the analysis commands.
//!
//! The JSON view carries full-precision numbers; the text view rounds to
//! six decimal places. Section order is fixed so identical inputs render
//! byte-identical reports.

use mcda_core::segment::{CustomerProfile, Thresholds};
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Debug, Clone, Serialize)]
pub struct WeightsSection {
    pub mode: String,
    pub criteria: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entropies: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub divergences: Option<Vec<f64>>,
    pub weights: Vec<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SawEntry {
    pub id: String,
    pub score: f64,
    pub rank: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct TopsisEntry {
    pub id: String,
    pub separation_ideal: f64,
    pub separation_negative: f64,
    pub closeness: f64,
    pub rank: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct TopsisSection {
    pub ideal: Vec<f64>,
    pub negative_ideal: Vec<f64>,
    pub entries: Vec<TopsisEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CopelandEntry {
    pub id: String,
    pub score: i64,
    pub rank: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct CopelandSection {
    pub entries: Vec<CopelandEntry>,
    /// Consensus order rendered as `A > B = C > D`.
    pub chain: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SegmentRow {
    pub id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lifetime_value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value_to_customer: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub questionnaire_total: Option<u32>,
    pub value_from_axis: f64,
    pub value_to_axis: f64,
    pub profile: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SegmentsSection {
    pub thresholds: Thresholds,
    pub rows: Vec<SegmentRow>,
}

/// Full analysis report; sections appear only when their stage ran.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<WeightsSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub saw: Option<Vec<SawEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub topsis: Option<TopsisSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub copeland: Option<CopelandSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub segments: Option<SegmentsSection>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(weights) = &self.weights {
            let _ = writeln!(out, "weights ({})", weights.mode);
            for (j, name) in weights.criteria.iter().enumerate() {
                let mut line = format!("  {name:<24} w = {:.6}", weights.weights[j]);
                if let (Some(entropies), Some(divergences)) =
                    (&weights.entropies, &weights.divergences)
                {
                    let _ = write!(
                        line,
                        "  (e = {:.6}, div = {:.6})",
                        entropies[j], divergences[j]
                    );
                }
                let _ = writeln!(out, "{line}");
            }
        }
        if let Some(saw) = &self.saw {
            let _ = writeln!(out, "saw");
            let _ = writeln!(out, "  {:<12} {:>10} {:>6}", "id", "score", "rank");
            for entry in saw {
                let _ = writeln!(
                    out,
                    "  {:<12} {:>10.6} {:>6}",
                    entry.id, entry.score, entry.rank
                );
            }
        }
        if let Some(topsis) = &self.topsis {
            let _ = writeln!(out, "topsis");
            let _ = writeln!(
                out,
                "  ideal = {:?}, negative ideal = {:?}",
                topsis.ideal.iter().map(|v| round6(*v)).collect::<Vec<_>>(),
                topsis
                    .negative_ideal
                    .iter()
                    .map(|v| round6(*v))
                    .collect::<Vec<_>>()
            );
            let _ = writeln!(
                out,
                "  {:<12} {:>10} {:>10} {:>10} {:>6}",
                "id", "d+", "d-", "closeness", "rank"
            );
            for entry in &topsis.entries {
                let _ = writeln!(
                    out,
                    "  {:<12} {:>10.6} {:>10.6} {:>10.6} {:>6}",
                    entry.id,
                    entry.separation_ideal,
                    entry.separation_negative,
                    entry.closeness,
                    entry.rank
                );
            }
        }
        if let Some(copeland) = &self.copeland {
            let _ = writeln!(out, "copeland");
            let _ = writeln!(out, "  {:<12} {:>7} {:>6}", "id", "score", "rank");
            for entry in &copeland.entries {
                let _ = writeln!(
                    out,
                    "  {:<12} {:>7} {:>6}",
                    entry.id, entry.score, entry.rank
                );
            }
            let _ = writeln!(out, "  chain: {}", copeland.chain);
        }
        if let Some(segments) = &self.segments {
            let _ = writeln!(
                out,
                "segments (thresholds: firm = {:.6}, customer = {:.6})",
                segments.thresholds.firm, segments.thresholds.customer
            );
            let _ = writeln!(
                out,
                "  {:<12} {:>12} {:>12} {:<12}",
                "id", "value_from", "value_to", "profile"
            );
            for row in &segments.rows {
                let _ = writeln!(
                    out,
                    "  {:<12} {:>12.6} {:>12.6} {:<12}",
                    row.id, row.value_from_axis, row.value_to_axis, row.profile
                );
            }
        }
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        out
    }
}

pub fn segment_rows(profiles: &[CustomerProfile]) -> Vec<SegmentRow> {
    profiles
        .iter()
        .map(|profile| SegmentRow {
            id: profile.id.clone(),
            lifetime_value: None,
            value_to_customer: None,
            questionnaire_total: None,
            value_from_axis: profile.value_from,
            value_to_axis: profile.value_to,
            profile: profile.quadrant.as_str().to_string(),
        })
        .collect()
}

fn round6(value: f64) -> f64 {
    (value * 1e6).round() / 1e6
}
