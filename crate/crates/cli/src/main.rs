//! `mcda` command-line front end.
//!
//! Subcommands: `rank`, `weights`, `value`, `segment`, `reproduce-paper`.
//! Every command reads UTF-8 CSV/JSON, writes a deterministic report to
//! stdout (plain text by default, JSON with `--json`) and exits 0 on
//! success; every error path prints a diagnostic to stderr and exits
//! nonzero.

mod config;
mod formats;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use config::{Aggregation, AnalysisConfig, Method, Normalization};
use mcda_core::casestudy;
use mcda_core::copeland::{copeland_rank, RankProfile};
use mcda_core::entropy;
use mcda_core::matrix::{DecisionMatrix, WeightVector};
use mcda_core::normalize::{minmax_normalize, vector_normalize, NormalizedMatrix};
use mcda_core::saw::saw_rank;
use mcda_core::segment::{segment_all, ThresholdPolicy};
use mcda_core::topsis::topsis_rank;
use mcda_core::value::{clv, questionnaire_score, value_to_customer};
use report::{
    segment_rows, CopelandEntry, CopelandSection, Report, SawEntry, SegmentRow, SegmentsSection,
    TopsisEntry, TopsisSection, WeightsSection,
};

#[derive(Parser)]
#[command(
    name = "mcda",
    version,
    about = "Multi-criteria decision analysis for customer prioritization"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rank the alternatives of a decision-matrix CSV.
    Rank(RankArgs),
    /// Derive entropy weights for a decision-matrix CSV.
    Weights(WeightsArgs),
    /// Compute per-customer value (CLV, perceived value, questionnaire
    /// score) and profile each customer.
    Value(ValueArgs),
    /// Assign four-quadrant profiles to pre-computed value pairs.
    Segment(SegmentArgs),
    /// Replay the embedded 47-customer case study and report every
    /// reproduction gate.
    #[command(name = "reproduce-paper")]
    ReproducePaper(ReproduceArgs),
}

#[derive(Args)]
struct RankArgs {
    /// Decision matrix CSV (`id` column, then one column per criterion;
    /// direction via `name:benefit` / `name:cost`, default benefit).
    matrix: PathBuf,
    /// JSON config file; command-line flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Emit the report as JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Manual weights `w1,w2,...` (must sum to 1 within 1e-6); replaces
    /// entropy weighting.
    #[arg(long)]
    weights: Option<String>,
    /// Normalization scheme applied before scoring.
    #[arg(long, value_enum)]
    normalize: Option<Normalization>,
    /// Comma-separated methods to run (`saw,topsis`).
    #[arg(long, value_delimiter = ',')]
    methods: Option<Vec<Method>>,
    /// Rank aggregation across methods.
    #[arg(long, value_enum)]
    aggregate: Option<Aggregation>,
}

#[derive(Args)]
struct WeightsArgs {
    matrix: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ValueArgs {
    /// Periods CSV: `id,period,price,cost,retention,discount_rate,acquisition_cost`.
    #[arg(long)]
    periods: PathBuf,
    /// Questionnaire CSV: `id` plus 50 Likert answers (1..=5).
    #[arg(long)]
    questionnaire: PathBuf,
    /// Optional perception CSV (`id,parameter,importance,benefit,cost`)
    /// for the perceived-value formula; without it the questionnaire
    /// total serves as the customer-value axis.
    #[arg(long)]
    perception: Option<PathBuf>,
    /// `median` or fixed `t_f,t_c`.
    #[arg(long, value_parser = config::parse_thresholds_flag)]
    thresholds: Option<ThresholdPolicy>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SegmentArgs {
    /// Points CSV: `id,value_from,value_to`.
    points: PathBuf,
    /// `median` or fixed `t_f,t_c`.
    #[arg(long, value_parser = config::parse_thresholds_flag)]
    thresholds: Option<ThresholdPolicy>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ReproduceArgs {
    #[arg(long)]
    json: bool,
    /// Replace every numeric gate tolerance (useful to demonstrate that
    /// the gates bite: 0 fails them all).
    #[arg(long)]
    tolerance_override: Option<f64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Rank(args) => run_rank(args),
        Command::Weights(args) => run_weights(args),
        Command::Value(args) => run_value(args),
        Command::Segment(args) => run_segment(args),
        Command::ReproducePaper(args) => return run_reproduce(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(error) => {
            eprintln!("error: {error:#}");
            ExitCode::FAILURE
        }
    }
}

fn normalize_matrix(matrix: DecisionMatrix, scheme: Normalization) -> Result<NormalizedMatrix> {
    Ok(match scheme {
        Normalization::Minmax => minmax_normalize(&matrix)?,
        Normalization::Vector => vector_normalize(&matrix)?,
        Normalization::None => NormalizedMatrix::pre_normalized(matrix),
    })
}

/// Resolve the weight vector and the weights report section.
fn resolve_weights(
    normalized: &NormalizedMatrix,
    config: &AnalysisConfig,
    notes: &mut Vec<String>,
) -> Result<(WeightVector, WeightsSection)> {
    let matrix = normalized.as_matrix();
    let criteria: Vec<String> = matrix.criteria().iter().map(|c| c.name.clone()).collect();
    if let Some(manual) = &config.manual_weights {
        if manual.len() != matrix.n_criteria() {
            bail!(
                "{} manual weights supplied for {} criteria",
                manual.len(),
                matrix.n_criteria()
            );
        }
        let weights = WeightVector::new(manual.clone())?;
        let section = WeightsSection {
            mode: "manual".into(),
            criteria,
            entropies: None,
            divergences: None,
            weights: manual.clone(),
        };
        return Ok((weights, section));
    }
    if matrix.n_alternatives() == 1 {
        // entropy is undefined for a single alternative; any weights give
        // the same one-line ranking
        let n = matrix.n_criteria();
        let uniform = vec![1.0 / n as f64; n];
        notes.push(
            "entropy weighting is undefined for a single alternative; uniform weights applied"
                .into(),
        );
        let weights = WeightVector::new(uniform.clone())?;
        let section = WeightsSection {
            mode: "uniform".into(),
            criteria,
            entropies: None,
            divergences: None,
            weights: uniform,
        };
        return Ok((weights, section));
    }
    let report = entropy::entropy_weights(matrix)
        .context("entropy weighting failed; supply --weights to weight manually")?;
    let section = WeightsSection {
        mode: "entropy".into(),
        criteria,
        entropies: Some(report.entropies.clone()),
        divergences: Some(report.divergences.clone()),
        weights: report.weights.as_slice().to_vec(),
    };
    Ok((report.weights, section))
}

fn run_rank(args: RankArgs) -> Result<()> {
    let mut config = AnalysisConfig::load(args.config.as_deref())?;
    if let Some(weights) = &args.weights {
        config.manual_weights = Some(config::parse_weights_flag(weights)?);
    }
    if let Some(normalize) = args.normalize {
        config.normalize = normalize;
    }
    if let Some(methods) = args.methods {
        config.set_methods(methods)?;
    }
    if let Some(aggregate) = args.aggregate {
        config.aggregate = Some(aggregate);
    }
    let aggregate = config.aggregation_enabled()?;

    let matrix = formats::read_matrix(&args.matrix)?;
    let normalized = normalize_matrix(matrix, config.normalize)?;
    let mut notes = Vec::new();
    for criterion in normalized.degenerate_criteria() {
        notes.push(format!(
            "criterion '{criterion}' is constant; min-max normalization mapped it to zero"
        ));
    }
    let (weights, weights_section) = resolve_weights(&normalized, &config, &mut notes)?;

    let mut document = Report {
        weights: Some(weights_section),
        notes,
        ..Report::default()
    };
    let ids = normalized.as_matrix().alternatives().to_vec();

    let mut rank_profiles: Vec<RankProfile> = Vec::new();
    for method in &config.methods {
        match method {
            Method::Saw => {
                let result = saw_rank(&normalized, &weights, config.tie_tolerance)?;
                document.saw = Some(
                    ids.iter()
                        .enumerate()
                        .map(|(i, id)| SawEntry {
                            id: id.clone(),
                            score: result.scores[i],
                            rank: result.ranking.rank_of(id).unwrap(),
                        })
                        .collect(),
                );
                rank_profiles.push(RankProfile::from(&result.ranking));
            }
            Method::Topsis => {
                let result = match topsis_rank(&normalized, &weights, config.tie_tolerance) {
                    // every alternative coincides with both ideal points
                    // (single alternative or all rows identical); closeness
                    // carries no information, SAW still ranks the ties
                    Err(mcda_core::Error::DegenerateIdeal) => {
                        document.notes.push(
                            "topsis closeness is undefined because every alternative \
                             coincides with the ideal and negative-ideal points; section \
                             omitted"
                                .into(),
                        );
                        continue;
                    }
                    other => other?,
                };
                document.topsis = Some(TopsisSection {
                    ideal: result.ideal.ideal.clone(),
                    negative_ideal: result.ideal.negative_ideal.clone(),
                    entries: ids
                        .iter()
                        .enumerate()
                        .map(|(i, id)| TopsisEntry {
                            id: id.clone(),
                            separation_ideal: result.separations[i].to_ideal,
                            separation_negative: result.separations[i].to_negative,
                            closeness: result.closeness[i],
                            rank: result.ranking.rank_of(id).unwrap(),
                        })
                        .collect(),
                });
                rank_profiles.push(RankProfile::from(&result.ranking));
            }
        }
    }

    if aggregate {
        let consensus = copeland_rank(&rank_profiles)?;
        document.copeland = Some(CopelandSection {
            entries: consensus
                .ids
                .iter()
                .enumerate()
                .map(|(i, id)| CopelandEntry {
                    id: id.clone(),
                    score: consensus.scores[i],
                    rank: consensus.ranking.rank_of(id).unwrap(),
                })
                .collect(),
            chain: consensus.chain_string(),
        });
    }

    emit(&document, args.json);
    Ok(())
}

fn run_weights(args: WeightsArgs) -> Result<()> {
    let matrix = formats::read_matrix(&args.matrix)?;
    let report = entropy::entropy_weights(&matrix)?;
    let document = Report {
        weights: Some(WeightsSection {
            mode: "entropy".into(),
            criteria: matrix.criteria().iter().map(|c| c.name.clone()).collect(),
            entropies: Some(report.entropies.clone()),
            divergences: Some(report.divergences.clone()),
            weights: report.weights.as_slice().to_vec(),
        }),
        ..Report::default()
    };
    emit(&document, args.json);
    Ok(())
}

fn run_value(args: ValueArgs) -> Result<()> {
    let periods = formats::read_periods(&args.periods)?;
    let questionnaires = formats::read_questionnaires(&args.questionnaire)?;
    let perceptions = args
        .perception
        .as_deref()
        .map(formats::read_perceptions)
        .transpose()?;

    // the files must describe the same customers
    let mut period_ids: Vec<&str> = periods.iter().map(|c| c.id.as_str()).collect();
    let mut questionnaire_ids: Vec<&str> =
        questionnaires.iter().map(|(id, _)| id.as_str()).collect();
    period_ids.sort();
    questionnaire_ids.sort();
    if period_ids != questionnaire_ids {
        bail!(
            "customer ids differ between '{}' and '{}'",
            args.periods.display(),
            args.questionnaire.display()
        );
    }
    if let Some(perceptions) = &perceptions {
        let mut perception_ids: Vec<&str> =
            perceptions.iter().map(|(id, _)| id.as_str()).collect();
        perception_ids.sort();
        if perception_ids != period_ids {
            bail!(
                "customer ids differ between '{}' and '{}'",
                args.periods.display(),
                args.perception.as_ref().unwrap().display()
            );
        }
    }

    let mut notes = Vec::new();
    if perceptions.is_none() {
        notes.push(
            "no perception file supplied; the questionnaire total serves as the \
             customer-value axis"
                .into(),
        );
    }

    // assemble per-customer values in periods-file order
    let mut rows: Vec<SegmentRow> = Vec::with_capacity(periods.len());
    let mut axes: Vec<(String, f64, f64)> = Vec::with_capacity(periods.len());
    for customer in &periods {
        let lifetime = clv(&customer.inputs);
        let (_, response) = questionnaires
            .iter()
            .find(|(id, _)| *id == customer.id)
            .expect("id sets were validated");
        let total = questionnaire_score(response).total;
        let perceived = perceptions.as_ref().map(|all| {
            let (_, perception) = all
                .iter()
                .find(|(id, _)| *id == customer.id)
                .expect("id sets were validated");
            value_to_customer(perception)
        });
        let customer_axis = perceived.unwrap_or(total as f64);
        axes.push((customer.id.clone(), lifetime, customer_axis));
        rows.push(SegmentRow {
            id: customer.id.clone(),
            lifetime_value: Some(lifetime),
            value_to_customer: perceived,
            questionnaire_total: Some(total),
            value_from_axis: lifetime,
            value_to_axis: customer_axis,
            profile: String::new(),
        });
    }

    let policy = args.thresholds.unwrap_or(ThresholdPolicy::Median);
    let segmentation = segment_all(&axes, policy)?;
    for (row, profile) in rows.iter_mut().zip(&segmentation.profiles) {
        row.profile = profile.quadrant.as_str().to_string();
    }

    let document = Report {
        segments: Some(SegmentsSection {
            thresholds: segmentation.thresholds,
            rows,
        }),
        notes,
        ..Report::default()
    };
    emit(&document, args.json);
    Ok(())
}

fn run_segment(args: SegmentArgs) -> Result<()> {
    let points = formats::read_points(&args.points)?;
    let policy = args.thresholds.unwrap_or(ThresholdPolicy::Median);
    let segmentation = segment_all(&points, policy)?;
    let document = Report {
        segments: Some(SegmentsSection {
            thresholds: segmentation.thresholds,
            rows: segment_rows(&segmentation.profiles),
        }),
        ..Report::default()
    };
    emit(&document, args.json);
    Ok(())
}

fn run_reproduce(args: ReproduceArgs) -> ExitCode {
    let report = match args.tolerance_override {
        Some(tolerance) => {
            casestudy::reproduce_with(casestudy::GateTolerances::uniform(tolerance))
        }
        None => casestudy::reproduce(),
    };
    if args.json {
        let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
        text.push('\n');
        print!("{text}");
    } else {
        print!("{}", report.render_text());
    }
    if report.all_gates_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn emit(document: &Report, json: bool) {
    if json {
        print!("{}", document.to_json());
    } else {
        print!("{}", document.to_text());
    }
}
