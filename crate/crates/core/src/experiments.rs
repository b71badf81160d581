//! Degree-fidelity experiments comparing the two kernels.
//!
//! Seed derivation (all via [`derive_seed`]):
//!
//! * [`run_compare`]: trial `t` of model `k` (0 = Chung-Lu, 1 = combinatorial)
//!   samples with `derive_seed(seed, 2t + k)`.
//! * [`run_sweep`]: for density index `d` and trial `t`, let
//!   `c = 3 (d * trials + t)`; the input graph uses `derive_seed(seed, c)`,
//!   Chung-Lu `c + 1` and combinatorial `c + 2`.
//!
//! Trials run in parallel; aggregation happens afterwards in trial order, so
//! results are bit-identical regardless of scheduling.

use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;

use crate::edge_prob::ModelKind;
use crate::error::{Error, Result};
use crate::generators::{calibrate_ba, generate_ba, generate_er_gnm, gnm_edges_for_density};
use crate::graph::{degree_sequence, Graph, WeightSeq};
use crate::rng::derive_seed;
use crate::sampler::{sample, Algorithm, SamplerConfig};

/// Per-node degree statistics of one compare run.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialRow {
    pub label: String,
    pub original_degree: f64,
    pub mean_degree_cl: f64,
    pub mean_degree_comb: f64,
    pub std_degree_cl: f64,
    pub std_degree_comb: f64,
}

/// Rows sorted by nonincreasing original degree, ties by node index.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialReport {
    pub rows: Vec<TrialRow>,
    pub trials: usize,
}

/// Randomizes `g` `trials` times under each kernel with the skipping sampler.
pub fn run_compare(g: &Graph, trials: usize, seed: u64) -> Result<TrialReport> {
    run_compare_with(g, trials, seed, Algorithm::Skipping)
}

pub fn run_compare_with(g: &Graph, trials: usize, seed: u64, algorithm: Algorithm) -> Result<TrialReport> {
    if trials == 0 {
        return Err(Error::Parameter("trials must be at least 1".into()));
    }
    let weights: WeightSeq<f64> = degree_sequence(g);
    let mut stats = Vec::new();
    for (k, model) in ModelKind::ALL.into_iter().enumerate() {
        let per_trial: Vec<Vec<usize>> = (0..trials)
            .into_par_iter()
            .map(|t| {
                let config = SamplerConfig::new(model, derive_seed(seed, 2 * t as u64 + k as u64))
                    .with_algorithm(algorithm)
                    .with_parallel(false);
                sample(&weights, &config).map(|(sampled, _)| sampled.degrees())
            })
            .collect::<Result<_>>()?;
        stats.push(node_stats(g.n(), &per_trial));
    }

    let original = g.degrees();
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by(|&a, &b| original[b].cmp(&original[a]));
    let rows = order
        .into_iter()
        .map(|i| TrialRow {
            label: g.label(i).to_owned(),
            original_degree: original[i] as f64,
            mean_degree_cl: stats[0][i].0,
            mean_degree_comb: stats[1][i].0,
            std_degree_cl: stats[0][i].1,
            std_degree_comb: stats[1][i].1,
        })
        .collect();
    Ok(TrialReport { rows, trials })
}

/// Mean and sample standard deviation (zero for one trial) per node.
fn node_stats(n: usize, per_trial: &[Vec<usize>]) -> Vec<(f64, f64)> {
    (0..n)
        .map(|i| mean_std(per_trial.iter().map(|d| d[i] as f64)))
        .collect()
}

fn mean_std(values: impl Iterator<Item = f64> + Clone) -> (f64, f64) {
    let count = values.clone().count() as f64;
    let mean = values.clone().sum::<f64>() / count;
    if count < 2.0 {
        return (mean, 0.0);
    }
    let var = values.map(|v| (v - mean) * (v - mean)).sum::<f64>() / (count - 1.0);
    (mean, var.sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SweepFamily {
    /// `G(n, m)` with `m = round(density * n(n-1)/2)`.
    Er,
    /// Barabási–Albert with `m_per_node` calibrated to the density's edge count.
    Ba,
}

impl SweepFamily {
    pub fn name(self) -> &'static str {
        match self {
            SweepFamily::Er => "er",
            SweepFamily::Ba => "ba",
        }
    }
}

impl FromStr for SweepFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "er" => Ok(SweepFamily::Er),
            "ba" => Ok(SweepFamily::Ba),
            _ => Err(Error::Parameter(format!("unknown sweep family {s:?}"))),
        }
    }
}

/// Difference between randomized and given average degree at one density.
///
/// `signed_diff_*` averages `mean randomized degree - mean given degree`,
/// `mean_abs_diff_*` averages its absolute value and `std_*` is the sample
/// standard deviation of the signed difference.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub family: SweepFamily,
    pub n: usize,
    pub density: f64,
    pub trials: usize,
    pub mean_abs_diff_cl: f64,
    pub mean_abs_diff_comb: f64,
    pub signed_diff_cl: f64,
    pub signed_diff_comb: f64,
    pub std_cl: f64,
    pub std_comb: f64,
}

pub fn run_sweep(family: SweepFamily, n: usize, densities: &[f64], trials: usize, seed: u64) -> Result<Vec<SweepRow>> {
    if trials == 0 {
        return Err(Error::Parameter("trials must be at least 1".into()));
    }
    if n < 2 {
        return Err(Error::Parameter(format!("sweep needs n >= 2, got {n}")));
    }
    if let Some(d) = densities.iter().find(|d| !(**d > 0.0 && **d < 1.0)) {
        return Err(Error::Parameter(format!("density {d} outside (0, 1)")));
    }

    let mut rows = Vec::with_capacity(densities.len());
    for (di, &density) in densities.iter().enumerate() {
        let target = gnm_edges_for_density(n, density)?;
        let m_per_node = match family {
            SweepFamily::Er => 0,
            SweepFamily::Ba => calibrate_ba(n, target)?,
        };
        let diffs: Vec<(f64, f64)> = (0..trials)
            .into_par_iter()
            .map(|t| {
                let base = 3 * (di * trials + t) as u64;
                let given = match family {
                    SweepFamily::Er => generate_er_gnm(n, target, derive_seed(seed, base))?,
                    SweepFamily::Ba => generate_ba(n, m_per_node, derive_seed(seed, base))?,
                };
                let weights: WeightSeq<f64> = degree_sequence(&given);
                let diff = |model: ModelKind, offset: u64| -> Result<f64> {
                    let config = SamplerConfig::new(model, derive_seed(seed, base + offset)).with_parallel(false);
                    let (randomized, _) = sample(&weights, &config)?;
                    Ok(2.0 * (randomized.m() as f64 - given.m() as f64) / n as f64)
                };
                Ok((diff(ModelKind::ChungLu, 1)?, diff(ModelKind::Combinatorial, 2)?))
            })
            .collect::<Result<_>>()?;

        let (signed_diff_cl, std_cl) = mean_std(diffs.iter().map(|d| d.0));
        let (signed_diff_comb, std_comb) = mean_std(diffs.iter().map(|d| d.1));
        rows.push(SweepRow {
            family,
            n,
            density,
            trials,
            mean_abs_diff_cl: diffs.iter().map(|d| d.0.abs()).sum::<f64>() / trials as f64,
            mean_abs_diff_comb: diffs.iter().map(|d| d.1.abs()).sum::<f64>() / trials as f64,
            signed_diff_cl,
            signed_diff_comb,
            std_cl,
            std_comb,
        });
    }
    Ok(rows)
}

/// Formats `x` in plain decimal with 6 significant digits, trailing zeros
/// trimmed.
pub fn format_sig6(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".to_owned();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let s = if magnitude >= 5 {
        let scale = 10f64.powi(magnitude - 5);
        format!("{:.0}", (x / scale).round() * scale)
    } else {
        let decimals = (5 - magnitude) as usize;
        let s = format!("{x:.decimals$}");
        s.trim_end_matches('0').trim_end_matches('.').to_owned()
    };
    if s == "-0" {
        "0".to_owned()
    } else {
        s
    }
}

pub fn write_trial_report_csv<W: Write>(report: &TrialReport, sink: W) -> Result<()> {
    let mut out = csv::Writer::from_writer(sink);
    out.write_record([
        "label",
        "original_degree",
        "mean_degree_cl",
        "mean_degree_comb",
        "std_degree_cl",
        "std_degree_comb",
        "trials",
    ])
    .map_err(csv_error)?;
    for row in &report.rows {
        out.write_record([
            row.label.clone(),
            format_sig6(row.original_degree),
            format_sig6(row.mean_degree_cl),
            format_sig6(row.mean_degree_comb),
            format_sig6(row.std_degree_cl),
            format_sig6(row.std_degree_comb),
            report.trials.to_string(),
        ])
        .map_err(csv_error)?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], sink: W) -> Result<()> {
    let mut out = csv::Writer::from_writer(sink);
    out.write_record([
        "family",
        "n",
        "density",
        "trials",
        "mean_abs_diff_cl",
        "mean_abs_diff_comb",
        "signed_diff_cl",
        "signed_diff_comb",
        "std_cl",
        "std_comb",
    ])
    .map_err(csv_error)?;
    for row in rows {
        out.write_record([
            row.family.name().to_owned(),
            row.n.to_string(),
            format_sig6(row.density),
            row.trials.to_string(),
            format_sig6(row.mean_abs_diff_cl),
            format_sig6(row.mean_abs_diff_comb),
            format_sig6(row.signed_diff_cl),
            format_sig6(row.signed_diff_comb),
            format_sig6(row.std_cl),
            format_sig6(row.std_comb),
        ])
        .map_err(csv_error)?;
    }
    out.flush()?;
    Ok(())
}

/// `label,degree` per node in index order.
pub fn write_degrees_csv<W: Write>(g: &Graph, sink: W) -> Result<()> {
    let mut out = csv::Writer::from_writer(sink);
    out.write_record(["label", "degree"]).map_err(csv_error)?;
    for (label, degree) in g.labels().iter().zip(g.degrees()) {
        out.write_record([label.clone(), degree.to_string()]).map_err(csv_error)?;
    }
    out.flush()?;
    Ok(())
}

fn csv_error(e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        other => Error::Io(std::io::Error::other(format!("{other:?}"))),
    }
}
