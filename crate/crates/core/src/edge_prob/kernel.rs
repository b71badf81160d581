use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::WeightSeq;
use crate::scalar::Scalar;

/// Which pairwise edge probability a model uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelKind {
    /// `min(1, w_i w_j / sum_k w_k)`.
    ChungLu,
    /// Ratio of configuration counts with and without the edge.
    Combinatorial,
}

impl ModelKind {
    pub const ALL: [ModelKind; 2] = [ModelKind::ChungLu, ModelKind::Combinatorial];

    pub fn name(self) -> &'static str {
        match self {
            ModelKind::ChungLu => "chung-lu",
            ModelKind::Combinatorial => "combinatorial",
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chung-lu" | "chunglu" | "cl" => Ok(ModelKind::ChungLu),
            "combinatorial" | "comb" => Ok(ModelKind::Combinatorial),
            _ => Err(Error::Parameter(format!("unknown model {s:?}"))),
        }
    }
}

/// What to do when the combinatorial kernel leaves `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RangeMode {
    /// Return [`Error::NonGraphical`].
    Strict,
    /// Clamp into `[0, 1]` and count the event.
    Clamp,
}

impl FromStr for RangeMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strict" => Ok(RangeMode::Strict),
            "clamp" => Ok(RangeMode::Clamp),
            _ => Err(Error::Parameter(format!("unknown mode {s:?}"))),
        }
    }
}

/// A probability kernel bound to the global parameters of one network.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeProbabilityModel<T> {
    pub kind: ModelKind,
    pub n: usize,
    /// Edge count; real-valued when derived from expected degrees.
    pub m: T,
    pub total_weight: T,
}

impl<T: Scalar> EdgeProbabilityModel<T> {
    /// Model for a network with `n` nodes and `m` edges (`total_weight = 2m`).
    pub fn new(kind: ModelKind, n: usize, m: T) -> Self {
        let total_weight = m.clone() * T::from_usize_exact(2);
        Self { kind, n, m, total_weight }
    }

    pub fn from_weights(kind: ModelKind, weights: &WeightSeq<T>) -> Self {
        Self { kind, n: weights.len(), m: weights.edge_count(), total_weight: weights.total() }
    }

    /// Edge probability between nodes of weights `w_i` and `w_j`.
    ///
    /// `clamped` is incremented whenever clamp mode had to correct a value.
    pub fn p(&self, w_i: T, w_j: T, mode: RangeMode, clamped: &mut u64) -> Result<T> {
        match self.kind {
            ModelKind::ChungLu => chung_lu_p(self, w_i, w_j),
            ModelKind::Combinatorial => {
                combinatorial_p(self.n, self.m.clone(), w_i, w_j, mode, clamped)
            }
        }
    }
}

/// Chung-Lu probability `min(1, w_i w_j / total_weight)`.
pub fn chung_lu_p<T: Scalar>(model: &EdgeProbabilityModel<T>, w_i: T, w_j: T) -> Result<T> {
    if w_i < T::zero() || w_j < T::zero() {
        return Err(Error::Domain(format!("negative weight ({w_i}, {w_j})")));
    }
    let num = w_i * w_j;
    if num.is_zero() {
        return Ok(T::zero());
    }
    if !(model.total_weight > T::zero()) {
        return Err(Error::Domain(format!(
            "total weight {} must be positive for nonzero weights",
            model.total_weight
        )));
    }
    let p = num / model.total_weight.clone();
    Ok(if p > T::one() { T::one() } else { p })
}

/// Intermediate quantities of the combinatorial closed form.
#[derive(Debug, Clone, PartialEq)]
pub struct CombinatorialTerms<T> {
    /// `m - w_i - w_j + 1`.
    pub m_star: T,
    /// `w_i w_j (n^2 - 5n + 8 - 2 m_star)`.
    pub x: T,
    /// `2 m_star (n - w_i - 1)(n - w_j - 1)`.
    pub y: T,
    /// `x / (x + y)`; `None` when `x + y = 0` with `x != 0`.
    pub p: Option<T>,
    /// Set when `x < 0`, `y < 0`, or `p` is undefined or outside `[0, 1]`.
    pub out_of_range: bool,
}

impl<T: Scalar> CombinatorialTerms<T> {
    fn raw_string(&self) -> String {
        match &self.p {
            Some(p) => p.to_string(),
            None => "undefined".to_owned(),
        }
    }
}

/// Evaluates the combinatorial closed form without any range correction.
///
/// Works for `n >= 2`; at `n = 2` the formula agrees with the exact
/// configuration count.
pub fn combinatorial_terms<T: Scalar>(n: usize, m: T, w_i: T, w_j: T) -> Result<CombinatorialTerms<T>> {
    if n < 2 {
        return Err(Error::Domain(format!("pair probability needs n >= 2, got {n}")));
    }
    let zero = T::zero();
    if m < zero || w_i < zero || w_j < zero {
        return Err(Error::Domain(format!("negative argument (m={m}, w_i={w_i}, w_j={w_j})")));
    }
    // Canonical argument order keeps the result exactly symmetric.
    let (w_i, w_j) = if w_j < w_i { (w_j, w_i) } else { (w_i, w_j) };
    let one = T::one();
    let two = T::from_usize_exact(2);
    let nn = T::from_usize_exact(n);

    let m_star = m - w_i.clone() - w_j.clone() + one.clone();
    let quad = nn.clone() * nn.clone() - T::from_usize_exact(5) * nn.clone() + T::from_usize_exact(8);
    let x = w_i.clone() * w_j.clone() * (quad - two.clone() * m_star.clone());
    let y = two * m_star.clone() * (nn.clone() - w_i - one.clone()) * (nn - w_j - one);

    let sum = x.clone() + y.clone();
    let p = if !sum.is_zero() {
        Some(x.clone() / sum)
    } else if x.is_zero() {
        Some(T::zero())
    } else {
        None
    };
    let out_of_range = x < zero
        || y < zero
        || match &p {
            Some(p) => !(*p >= zero && *p <= T::one()),
            None => true,
        };
    Ok(CombinatorialTerms { m_star, x, y, p, out_of_range })
}

/// Combinatorial edge probability with range handling per `mode`.
pub fn combinatorial_p<T: Scalar>(
    n: usize,
    m: T,
    w_i: T,
    w_j: T,
    mode: RangeMode,
    clamped: &mut u64,
) -> Result<T> {
    let terms = combinatorial_terms(n, m.clone(), w_i.clone(), w_j.clone())?;
    if !terms.out_of_range {
        return Ok(terms.p.expect("in-range terms carry p"));
    }
    match mode {
        RangeMode::Strict => Err(Error::NonGraphical {
            n,
            m: m.to_string(),
            w_i: w_i.to_string(),
            w_j: w_j.to_string(),
            raw: terms.raw_string(),
        }),
        RangeMode::Clamp => {
            *clamped += 1;
            Ok(clamp_unit(terms.p))
        }
    }
}

fn clamp_unit<T: Scalar>(p: Option<T>) -> T {
    match p {
        Some(p) if p > T::one() => T::one(),
        Some(p) if p >= T::zero() => p,
        // negative, NaN or undefined
        _ => T::zero(),
    }
}
