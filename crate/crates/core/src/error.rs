use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("line {line}: self-loop on node {label:?}")]
    SelfLoop { line: usize, label: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    /// Argument outside the domain of the requested operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Invalid generator or experiment parameter.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// The combinatorial kernel left its valid range, which only happens for
    /// degree pairs no simple graph can realise.
    #[error("non-graphical input (n={n}, m={m}, w_i={w_i}, w_j={w_j}): raw probability {raw}")]
    NonGraphical {
        n: usize,
        m: String,
        w_i: String,
        w_j: String,
        raw: String,
    },

    /// Both configuration counts vanish.
    #[error("edge probability undefined: no configuration with n={n}, m={m}, w_i={w_i}, w_j={w_j}")]
    UndefinedProbability { n: u64, m: u64, w_i: u64, w_j: u64 },

    /// A sampler pair failed in the kernel.
    #[error("pair ({i}, {j}): {source}")]
    Pair {
        i: usize,
        j: usize,
        #[source]
        source: Box<Error>,
    },

    #[error(
        "monotonicity violation at pair ({i}, {j}): p={p} exceeds running cap {cap}; \
         weights are not from a graphical sequence"
    )]
    Monotonicity { i: usize, j: usize, p: f64, cap: f64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
