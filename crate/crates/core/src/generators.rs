//! Erdős–Rényi and Barabási–Albert graphs used as experiment inputs.

use std::str::FromStr;

use rand::seq::index;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::{stream_rng, StreamRng};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Uniform over graphs with exactly `m` edges.
    ErGnm,
    /// Every pair independently.
    ErGnp,
    BarabasiAlbert,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "er" | "er-gnm" | "gnm" => Ok(Family::ErGnm),
            "er-gnp" | "gnp" => Ok(Family::ErGnp),
            "ba" => Ok(Family::BarabasiAlbert),
            _ => Err(Error::Parameter(format!("unknown graph family {s:?}"))),
        }
    }
}

/// Family-specific size parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SizeParam {
    /// Edge density in `[0, 1]`; `G(n, m)` uses `m = round(density * n(n-1)/2)`.
    Density(f64),
    /// Exact edge count (`G(n, m)` only).
    Edges(usize),
    /// Edges added per arriving node (BA only).
    MPerNode(usize),
    /// BA with the `m_per_node` whose edge count is closest to the target.
    TargetEdges(usize),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorSpec {
    pub family: Family,
    pub n: usize,
    pub size: SizeParam,
    pub seed: u64,
}

pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    let GeneratorSpec { family, n, size, seed } = *spec;
    match (family, size) {
        (Family::ErGnm, SizeParam::Edges(m)) => generate_er_gnm(n, m, seed),
        (Family::ErGnm, SizeParam::Density(d)) => generate_er_gnm(n, gnm_edges_for_density(n, d)?, seed),
        (Family::ErGnp, SizeParam::Density(d)) => generate_er_gnp(n, d, seed),
        (Family::BarabasiAlbert, SizeParam::MPerNode(k)) => generate_ba(n, k, seed),
        (Family::BarabasiAlbert, SizeParam::TargetEdges(m)) => generate_ba(n, calibrate_ba(n, m)?, seed),
        (Family::BarabasiAlbert, SizeParam::Density(d)) => {
            let target = gnm_edges_for_density(n, d)?;
            generate_ba(n, calibrate_ba(n, target)?, seed)
        }
        (family, size) => Err(Error::Parameter(format!("{size:?} does not apply to {family:?}"))),
    }
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn check_density(density: f64) -> Result<()> {
    if (0.0..=1.0).contains(&density) {
        Ok(())
    } else {
        Err(Error::Parameter(format!("density {density} outside [0, 1]")))
    }
}

/// `round(density * n(n-1)/2)`.
pub fn gnm_edges_for_density(n: usize, density: f64) -> Result<usize> {
    check_density(density)?;
    Ok((density * pair_count(n) as f64).round() as usize)
}

/// Uniformly random graph with exactly `m` edges.
pub fn generate_er_gnm(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let pairs = pair_count(n);
    if m > pairs {
        return Err(Error::Parameter(format!("{m} edges exceed the {pairs} pairs of {n} nodes")));
    }
    let mut rng = stream_rng(seed, 0);
    let mut picked = index::sample(&mut rng, pairs, m).into_vec();
    picked.sort_unstable();

    // Pair k in row-major order over i < j.
    let mut edges = Vec::with_capacity(m);
    let (mut row, mut row_start) = (0, 0);
    for k in picked {
        while k >= row_start + (n - 1 - row) {
            row_start += n - 1 - row;
            row += 1;
        }
        edges.push((row, row + 1 + (k - row_start)));
    }
    Graph::with_index_labels(n, edges)
}

/// `G(n, p)` by geometric skipping over the row-major pair sequence,
/// calling `visit` once per edge.
fn gnp_visit(n: usize, p: f64, rng: &mut StreamRng, mut visit: impl FnMut(usize, usize)) {
    if p <= 0.0 || n < 2 {
        return;
    }
    if p >= 1.0 {
        for i in 0..n {
            for j in i + 1..n {
                visit(i, j);
            }
        }
        return;
    }
    let log_q = (-p).ln_1p();
    // Current candidate is (v, w) with w < v.
    let (mut v, mut w) = (1usize, 0usize);
    let mut first = true;
    loop {
        let u: f64 = 1.0 - rng.gen::<f64>();
        let jump = (u.ln() / log_q).floor();
        let mut skip = if jump >= (n * n) as f64 { n * n } else { jump as usize };
        if !first {
            skip += 1;
        }
        first = false;
        w += skip;
        while v < n && w >= v {
            w -= v;
            v += 1;
        }
        if v >= n {
            return;
        }
        visit(w, v);
    }
}

pub fn generate_er_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_density(p)?;
    let mut rng = stream_rng(seed, 0);
    let mut edges = Vec::new();
    gnp_visit(n, p, &mut rng, |i, j| edges.push((i, j)));
    Graph::with_index_labels(n, edges)
}

/// Degree sequence of a `G(n, p)` sample without storing its edges; the
/// same graph as [`generate_er_gnp`] with the same seed.
pub fn er_gnp_degrees(n: usize, p: f64, seed: u64) -> Result<Vec<usize>> {
    check_density(p)?;
    let mut rng = stream_rng(seed, 0);
    let mut deg = vec![0usize; n];
    gnp_visit(n, p, &mut rng, |i, j| {
        deg[i] += 1;
        deg[j] += 1;
    });
    Ok(deg)
}

/// Edge count of [`generate_ba`]: a seed clique plus `m_per_node` edges for
/// every later node.
pub fn ba_edge_count(n: usize, m_per_node: usize) -> usize {
    pair_count(m_per_node) + m_per_node * n.saturating_sub(m_per_node)
}

/// The `m_per_node` in `[1, n-1]` whose BA edge count is closest to
/// `target` (smallest on ties).
pub fn calibrate_ba(n: usize, target: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::Parameter(format!("BA needs n >= 2, got {n}")));
    }
    let best = (1..n)
        .min_by_key(|&k| ba_edge_count(n, k).abs_diff(target))
        .expect("nonempty range");
    Ok(best)
}

/// Preferential attachment.
///
/// Starts from a clique on `m_per_node` nodes. Each later node attaches to
/// `m_per_node` distinct earlier nodes drawn with probability proportional to
/// degree (a draw from the list of edge endpoints; duplicates are redrawn).
/// While that list is empty (a one-node seed) the target is uniform.
pub fn generate_ba(n: usize, m_per_node: usize, seed: u64) -> Result<Graph> {
    if m_per_node < 1 || m_per_node >= n {
        return Err(Error::Parameter(format!("m_per_node {m_per_node} outside [1, {}]", n.saturating_sub(1))));
    }
    let k = m_per_node;
    let mut rng = stream_rng(seed, 0);
    let mut edges = Vec::with_capacity(ba_edge_count(n, k));
    let mut endpoints: Vec<usize> = Vec::with_capacity(2 * ba_edge_count(n, k));
    for i in 0..k {
        for j in i + 1..k {
            edges.push((i, j));
            endpoints.extend([i, j]);
        }
    }

    // stamp[v] == t marks v as already chosen by node t
    let mut stamp = vec![usize::MAX; n];
    let mut chosen = Vec::with_capacity(k);
    for t in k..n {
        chosen.clear();
        if t == k {
            chosen.extend(0..k);
        } else {
            while chosen.len() < k {
                let v = if endpoints.is_empty() {
                    rng.gen_range(0..t)
                } else {
                    endpoints[rng.gen_range(0..endpoints.len())]
                };
                if stamp[v] != t {
                    stamp[v] = t;
                    chosen.push(v);
                }
            }
        }
        for &v in &chosen {
            edges.push((v, t));
            endpoints.extend([v, t]);
        }
    }
    Graph::with_index_labels(n, edges)
}
