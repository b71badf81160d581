//! Random simple graphs from an expected degree sequence.
//!
//! Every unordered pair `{i, j}` is an edge independently with the kernel
//! probability `p(w_i, w_j)`. Two samplers realise that distribution:
//!
//! * [`sample_naive`] visits all `n(n-1)/2` pairs, one uniform draw each,
//!   row-major over `i < j` in the original node order. Row `i` draws from
//!   stream `i`.
//! * [`sample_skipping`] sorts nodes by nonincreasing weight (ties by index)
//!   and, within each row, jumps over runs of rejected candidates with one
//!   geometric draw bounded by a running cap probability. A landed candidate
//!   is accepted with probability `p / cap`, after which the cap drops to `p`.
//!   This needs `p` to be nonincreasing along the row, which holds for both
//!   kernels on graphical inputs; a violation aborts with
//!   [`Error::Monotonicity`]. Sorted row `r` draws from stream `r`.
//!
//! Because rows own their streams, the parallel and sequential paths produce
//! the same graph.

use std::fmt;
use std::ops::AddAssign;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;

use crate::edge_prob::{EdgeProbabilityModel, ModelKind, RangeMode};
use crate::error::{Error, Result};
use crate::graph::{index_labels, Graph, WeightSeq};
use crate::rng::{stream_rng, StreamRng};
use crate::scalar::FloatScalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Naive,
    Skipping,
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "naive" => Ok(Algorithm::Naive),
            "skipping" => Ok(Algorithm::Skipping),
            _ => Err(Error::Parameter(format!("unknown algorithm {s:?}"))),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Naive => "naive",
            Algorithm::Skipping => "skipping",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SamplerConfig {
    pub model: ModelKind,
    pub seed: u64,
    pub mode: RangeMode,
    pub algorithm: Algorithm,
    /// Process rows on the rayon pool. Does not change the output.
    pub parallel: bool,
}

impl SamplerConfig {
    /// Skipping sampler in clamp mode, parallel over rows.
    pub fn new(model: ModelKind, seed: u64) -> Self {
        Self { model, seed, mode: RangeMode::Clamp, algorithm: Algorithm::Skipping, parallel: true }
    }

    pub fn with_mode(mut self, mode: RangeMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_algorithm(mut self, algorithm: Algorithm) -> Self {
        self.algorithm = algorithm;
        self
    }

    pub fn with_parallel(mut self, parallel: bool) -> Self {
        self.parallel = parallel;
        self
    }
}

/// Work counters of one sampling run.
///
/// For both samplers `pairs_evaluated + pairs_skipped = n(n-1)/2`: a pair is
/// evaluated when its kernel value is compared against a uniform draw.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SampleDiagnostics {
    pub pairs_evaluated: u64,
    pub pairs_skipped: u64,
    pub clamped_pairs: u64,
    pub edges_emitted: u64,
}

impl AddAssign for SampleDiagnostics {
    fn add_assign(&mut self, rhs: Self) {
        self.pairs_evaluated += rhs.pairs_evaluated;
        self.pairs_skipped += rhs.pairs_skipped;
        self.clamped_pairs += rhs.clamped_pairs;
        self.edges_emitted += rhs.edges_emitted;
    }
}

/// Runs the sampler selected by `config.algorithm`.
pub fn sample<T: FloatScalar>(weights: &WeightSeq<T>, config: &SamplerConfig) -> Result<(Graph, SampleDiagnostics)> {
    match config.algorithm {
        Algorithm::Naive => sample_naive(weights, config),
        Algorithm::Skipping => sample_skipping(weights, config),
    }
}

pub fn sample_naive<T: FloatScalar>(
    weights: &WeightSeq<T>,
    config: &SamplerConfig,
) -> Result<(Graph, SampleDiagnostics)> {
    let ctx = RowContext::new(weights, config, (0..weights.len()).collect());
    collect_rows(&ctx, config.parallel, |ctx, row, emit| ctx.naive_row(row, emit))
}

pub fn sample_skipping<T: FloatScalar>(
    weights: &WeightSeq<T>,
    config: &SamplerConfig,
) -> Result<(Graph, SampleDiagnostics)> {
    let ctx = RowContext::new(weights, config, weight_order(weights));
    collect_rows(&ctx, config.parallel, |ctx, row, emit| ctx.skipping_row(row, emit))
}

/// Streaming form of [`sample_skipping`]: calls `visit(i, j)` for every
/// emitted edge (original indices, `i < j`) instead of building a graph.
/// Always sequential; the edge set equals that of [`sample_skipping`].
pub fn sample_skipping_with<T, F>(weights: &WeightSeq<T>, config: &SamplerConfig, mut visit: F) -> Result<SampleDiagnostics>
where
    T: FloatScalar,
    F: FnMut(usize, usize),
{
    let ctx = RowContext::new(weights, config, weight_order(weights));
    let mut diag = SampleDiagnostics::default();
    for row in 0..ctx.n() {
        diag += ctx.skipping_row(row, &mut |i, j| visit(i.min(j), i.max(j)))?;
    }
    Ok(diag)
}

/// Node indices by nonincreasing weight, ties by index.
fn weight_order<T: FloatScalar>(weights: &WeightSeq<T>) -> Vec<usize> {
    let w = weights.weights();
    let mut order: Vec<usize> = (0..w.len()).collect();
    // Weights are finite, so partial_cmp never fails.
    order.sort_by(|&a, &b| w[b].partial_cmp(&w[a]).expect("finite weights"));
    order
}

fn collect_rows<T, R>(ctx: &RowContext<T>, parallel: bool, run_row: R) -> Result<(Graph, SampleDiagnostics)>
where
    T: FloatScalar,
    R: Fn(&RowContext<T>, usize, &mut dyn FnMut(usize, usize)) -> Result<SampleDiagnostics> + Sync,
{
    let one_row = |row: usize| -> Result<(Vec<(usize, usize)>, SampleDiagnostics)> {
        let mut edges = Vec::new();
        let diag = run_row(ctx, row, &mut |i, j| edges.push((i.min(j), i.max(j))))?;
        Ok((edges, diag))
    };
    let rows: Vec<_> = if parallel {
        (0..ctx.n()).into_par_iter().map(one_row).collect()
    } else {
        (0..ctx.n()).map(one_row).collect()
    };

    let mut edges = Vec::new();
    let mut diag = SampleDiagnostics::default();
    // Merge in row order so errors and edges are reported deterministically.
    for row in rows {
        let (row_edges, row_diag) = row?;
        edges.extend(row_edges);
        diag += row_diag;
    }
    Ok((Graph::from_normalised(index_labels(ctx.n()), edges), diag))
}

/// Weights in processing order plus everything a row needs.
struct RowContext<T> {
    model: EdgeProbabilityModel<T>,
    mode: RangeMode,
    seed: u64,
    /// `order[r]` is the original index of the node processed `r`-th.
    order: Vec<usize>,
    ordered: Vec<T>,
}

impl<T: FloatScalar> RowContext<T> {
    fn new(weights: &WeightSeq<T>, config: &SamplerConfig, order: Vec<usize>) -> Self {
        let ordered = order.iter().map(|&i| weights.weights()[i]).collect();
        Self {
            model: EdgeProbabilityModel::from_weights(config.model, weights),
            mode: config.mode,
            seed: config.seed,
            order,
            ordered,
        }
    }

    fn n(&self) -> usize {
        self.order.len()
    }

    fn prob(&self, r: usize, c: usize, clamped: &mut u64) -> Result<T> {
        self.model
            .p(self.ordered[r], self.ordered[c], self.mode, clamped)
            .map_err(|e| Error::Pair { i: self.order[r], j: self.order[c], source: Box::new(e) })
    }

    fn uniform(rng: &mut StreamRng) -> T {
        T::from_f64(rng.gen::<f64>()).expect("uniform fits scalar")
    }

    fn naive_row(&self, row: usize, emit: &mut dyn FnMut(usize, usize)) -> Result<SampleDiagnostics> {
        let mut rng = stream_rng(self.seed, row as u64);
        let mut diag = SampleDiagnostics::default();
        for col in row + 1..self.n() {
            let p = self.prob(row, col, &mut diag.clamped_pairs)?;
            diag.pairs_evaluated += 1;
            if Self::uniform(&mut rng) < p {
                emit(self.order[row], self.order[col]);
                diag.edges_emitted += 1;
            }
        }
        Ok(diag)
    }

    fn skipping_row(&self, row: usize, emit: &mut dyn FnMut(usize, usize)) -> Result<SampleDiagnostics> {
        let n = self.n();
        let mut diag = SampleDiagnostics::default();
        if row + 1 >= n {
            return Ok(diag);
        }
        let mut rng = stream_rng(self.seed, row as u64);
        let zero = T::zero();
        let one = T::one();
        let slack = T::epsilon() * T::from_usize_exact(64);

        let mut col = row + 1;
        // The first candidate's probability seeds the cap and is reused if
        // the first jump lands on it.
        let first = self.prob(row, col, &mut diag.clamped_pairs)?;
        let mut cached = Some(first);
        let mut cap = first.min(one);
        if cap <= zero {
            diag.pairs_skipped += (n - col) as u64;
            return Ok(diag);
        }

        loop {
            if cap < one {
                let u = one - Self::uniform(&mut rng);
                let jump = (u.ln() / (-cap).ln_1p()).floor();
                let remaining = n - col;
                match jump.to_usize() {
                    Some(jump) if jump < remaining => {
                        if jump > 0 {
                            cached = None;
                        }
                        diag.pairs_skipped += jump as u64;
                        col += jump;
                    }
                    _ => {
                        diag.pairs_skipped += remaining as u64;
                        break;
                    }
                }
            }

            let mut p = match cached.take() {
                Some(p) => p,
                None => self.prob(row, col, &mut diag.clamped_pairs)?,
            };
            diag.pairs_evaluated += 1;
            if p > cap {
                if p > cap + slack * cap {
                    return Err(Error::Monotonicity {
                        i: self.order[row],
                        j: self.order[col],
                        p: p.to_f64().unwrap_or(f64::NAN),
                        cap: cap.to_f64().unwrap_or(f64::NAN),
                    });
                }
                p = cap;
            }
            if p >= cap || Self::uniform(&mut rng) < p / cap {
                emit(self.order[row], self.order[col]);
                diag.edges_emitted += 1;
            }

            cap = p;
            col += 1;
            if col >= n {
                break;
            }
            if cap <= zero {
                diag.pairs_skipped += (n - col) as u64;
                break;
            }
        }
        Ok(diag)
    }
}
