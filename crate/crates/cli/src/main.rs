use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use combmh::experiments::{run_compare_with, run_sweep, write_degrees_csv, write_sweep_csv, write_trial_report_csv, SweepFamily};
use combmh::generators::{generate, Family, GeneratorSpec, SizeParam};
use combmh::{
    combinatorial_p, degree_sequence, oracle_p, read_edge_list, sample, write_edge_list, Algorithm, BigRational,
    Graph, Model, ModelKind, RangeMode, SamplerConfig, Weights,
};

#[derive(Parser)]
#[command(name = "combmh", version, about = "Random graphs from expected degree sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Edge probability between two nodes of given expected degree.
    Prob(ProbArgs),
    /// Draw a random graph with the degree sequence of an input graph.
    Randomize(RandomizeArgs),
    /// Degree of every node as CSV.
    Degrees(DegreesArgs),
    /// Per-node mean and std of randomized degrees under both kernels.
    Compare(CompareArgs),
    /// Average-degree error of both kernels across edge densities.
    Sweep(SweepArgs),
    /// Generate an Erdős–Rényi or Barabási–Albert graph.
    Generate(GenerateArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    ChungLu,
    Combinatorial,
    Both,
}

impl ModelArg {
    fn kinds(self) -> &'static [ModelKind] {
        match self {
            ModelArg::ChungLu => &[ModelKind::ChungLu],
            ModelArg::Combinatorial => &[ModelKind::Combinatorial],
            ModelArg::Both => &ModelKind::ALL,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Strict,
    Clamp,
}

impl From<ModeArg> for RangeMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Strict => RangeMode::Strict,
            ModeArg::Clamp => RangeMode::Clamp,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Skipping,
    Naive,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(a: AlgorithmArg) -> Self {
        match a {
            AlgorithmArg::Skipping => Algorithm::Skipping,
            AlgorithmArg::Naive => Algorithm::Naive,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepFamilyArg {
    Er,
    Ba,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    /// G(n, m)
    Er,
    /// G(n, p)
    ErGnp,
    Ba,
}

#[derive(Args)]
struct OutputArg {
    /// Output file; stdout when absent.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SeedArg {
    /// Master seed; a random one is chosen and reported on stderr when absent.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct ProbArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: f64,
    #[arg(long)]
    wi: f64,
    #[arg(long)]
    wj: f64,
    #[arg(long, value_enum, default_value = "both")]
    model: ModelArg,
    #[arg(long, value_enum, default_value = "strict")]
    mode: ModeArg,
    #[command(flatten)]
    output: OutputArg,
}

#[derive(Args)]
struct RandomizeArgs {
    #[arg(long, short)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "combinatorial")]
    model: ModelArg,
    #[arg(long, value_enum, default_value = "clamp")]
    mode: ModeArg,
    #[arg(long, value_enum, default_value = "skipping")]
    algorithm: AlgorithmArg,
    #[command(flatten)]
    seed: SeedArg,
    #[command(flatten)]
    output: OutputArg,
}

#[derive(Args)]
struct DegreesArgs {
    #[arg(long, short)]
    input: PathBuf,
    #[command(flatten)]
    output: OutputArg,
}

#[derive(Args)]
struct CompareArgs {
    #[arg(long, short)]
    input: PathBuf,
    #[arg(long, default_value_t = 500)]
    trials: usize,
    #[arg(long, value_enum, default_value = "skipping")]
    algorithm: AlgorithmArg,
    #[command(flatten)]
    seed: SeedArg,
    #[command(flatten)]
    output: OutputArg,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    family: SweepFamilyArg,
    #[arg(long, default_value_t = 200)]
    n: usize,
    /// `start:stop:step` (inclusive) or a comma-separated list.
    #[arg(long, default_value = "0.1:0.9:0.1", value_parser = parse_densities)]
    densities: Densities,
    #[arg(long, default_value_t = 50)]
    trials: usize,
    #[command(flatten)]
    seed: SeedArg,
    #[command(flatten)]
    output: OutputArg,
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("size").required(true)))]
struct GenerateArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    n: usize,
    #[arg(long, group = "size")]
    density: Option<f64>,
    #[arg(long, group = "size")]
    edges: Option<usize>,
    #[arg(long, group = "size")]
    m_per_node: Option<usize>,
    #[arg(long, group = "size")]
    target_edges: Option<usize>,
    #[command(flatten)]
    seed: SeedArg,
    #[command(flatten)]
    output: OutputArg,
}

#[derive(Clone, Debug)]
struct Densities(Vec<f64>);

fn parse_densities(s: &str) -> Result<Densities, String> {
    let num = |t: &str| t.trim().parse::<f64>().map_err(|_| format!("bad number {t:?}"));
    let values = if s.contains(':') {
        let parts: Vec<&str> = s.split(':').collect();
        let [start, stop, step] = parts[..] else {
            return Err("range must be start:stop:step".into());
        };
        let (start, stop, step) = (num(start)?, num(stop)?, num(step)?);
        if !(step > 0.0) || stop < start {
            return Err("range needs step > 0 and stop >= start".into());
        }
        let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
        // round away accumulated float error so 0.1:0.9:0.1 yields 0.3, not 0.30000000000000004
        (0..count).map(|k| ((start + k as f64 * step) * 1e12).round() / 1e12).collect()
    } else {
        s.split(',').map(num).collect::<Result<Vec<_>, _>>()?
    };
    if values.is_empty() {
        return Err("no densities given".into());
    }
    Ok(Densities(values))
}

/// Failure of a command: a usage problem (exit 1) or a data/domain error (exit 2).
enum Failure {
    Usage(String),
    Data(String),
}

impl From<combmh::Error> for Failure {
    fn from(e: combmh::Error) -> Self {
        Failure::Data(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Data(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Prob(a) => prob(a),
        Command::Randomize(a) => randomize(a),
        Command::Degrees(a) => degrees(a),
        Command::Compare(a) => compare(a),
        Command::Sweep(a) => sweep(a),
        Command::Generate(a) => generate_cmd(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn open_output(arg: &OutputArg) -> io::Result<Box<dyn Write>> {
    Ok(match &arg.output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let file = File::open(path).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))?;
    read_edge_list(BufReader::new(file)).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))
}

fn resolve_seed(arg: &SeedArg) -> u64 {
    arg.seed.unwrap_or_else(|| {
        let seed = rand::random();
        eprintln!("seed: {seed}");
        seed
    })
}

fn integral(v: f64) -> Option<u64> {
    (v >= 0.0 && v.fract() == 0.0 && v <= u64::MAX as f64).then_some(v as u64)
}

fn prob(a: ProbArgs) -> CmdResult {
    let mode = RangeMode::from(a.mode);
    let mut out = open_output(&a.output)?;
    for &kind in a.model.kinds() {
        let mut clamped = 0;
        let p = match kind {
            ModelKind::ChungLu => Model::new(kind, a.n, a.m).p(a.wi, a.wj, mode, &mut clamped)?,
            ModelKind::Combinatorial => combinatorial_prob(&a, mode, &mut clamped)?,
        };
        write!(out, "{kind}: {p}")?;
        if clamped > 0 {
            write!(out, " (clamped)")?;
        }
        if kind == ModelKind::Combinatorial {
            if let (Some(m), Some(wi), Some(wj)) = (integral(a.m), integral(a.wi), integral(a.wj)) {
                if let Ok((exact, _)) = oracle_p(a.n as u64, m, wi, wj) {
                    write!(out, " exact {exact}")?;
                }
            }
        }
        writeln!(out)?;
    }
    out.flush()?;
    Ok(())
}

/// Double-precision probability; integral inputs are first checked in exact
/// arithmetic so a range error reports the exact raw ratio.
fn combinatorial_prob(a: &ProbArgs, mode: RangeMode, clamped: &mut u64) -> Result<f64, Failure> {
    if let (RangeMode::Strict, Some(m), Some(wi), Some(wj)) = (mode, integral(a.m), integral(a.wi), integral(a.wj)) {
        let q = |v: u64| BigRational::from_integer(v.into());
        let mut ignored = 0;
        combinatorial_p(a.n, q(m), q(wi), q(wj), mode, &mut ignored)?;
    }
    Ok(combinatorial_p(a.n, a.m, a.wi, a.wj, mode, clamped)?)
}

fn randomize(a: RandomizeArgs) -> CmdResult {
    let kind = match a.model {
        ModelArg::ChungLu => ModelKind::ChungLu,
        ModelArg::Combinatorial => ModelKind::Combinatorial,
        ModelArg::Both => return Err(Failure::Usage("randomize needs a single --model".into())),
    };
    let g = read_graph(&a.input)?;
    let seed = resolve_seed(&a.seed);
    let weights: Weights = degree_sequence(&g);
    let config = SamplerConfig::new(kind, seed).with_mode(a.mode.into()).with_algorithm(a.algorithm.into());
    let (sampled, _) = sample(&weights, &config)?;
    let relabelled = Graph::new(g.labels().to_vec(), sampled.edges().iter().copied())?;
    let mut out = open_output(&a.output)?;
    write_edge_list(&relabelled, &mut out)?;
    out.flush()?;
    Ok(())
}

fn degrees(a: DegreesArgs) -> CmdResult {
    let g = read_graph(&a.input)?;
    let mut out = open_output(&a.output)?;
    write_degrees_csv(&g, &mut out)?;
    out.flush()?;
    Ok(())
}

fn compare(a: CompareArgs) -> CmdResult {
    if a.trials == 0 {
        return Err(Failure::Usage("--trials must be at least 1".into()));
    }
    let g = read_graph(&a.input)?;
    let seed = resolve_seed(&a.seed);
    let report = run_compare_with(&g, a.trials, seed, a.algorithm.into())?;
    let mut out = open_output(&a.output)?;
    write_trial_report_csv(&report, &mut out)?;
    out.flush()?;
    Ok(())
}

fn sweep(a: SweepArgs) -> CmdResult {
    if a.trials == 0 {
        return Err(Failure::Usage("--trials must be at least 1".into()));
    }
    let family = match a.family {
        SweepFamilyArg::Er => SweepFamily::Er,
        SweepFamilyArg::Ba => SweepFamily::Ba,
    };
    let seed = resolve_seed(&a.seed);
    let rows = run_sweep(family, a.n, &a.densities.0, a.trials, seed)?;
    let mut out = open_output(&a.output)?;
    write_sweep_csv(&rows, &mut out)?;
    out.flush()?;
    Ok(())
}

fn generate_cmd(a: GenerateArgs) -> CmdResult {
    let family = match a.family {
        FamilyArg::Er => Family::ErGnm,
        FamilyArg::ErGnp => Family::ErGnp,
        FamilyArg::Ba => Family::BarabasiAlbert,
    };
    let size = match (a.density, a.edges, a.m_per_node, a.target_edges) {
        (Some(d), ..) => SizeParam::Density(d),
        (_, Some(m), ..) => SizeParam::Edges(m),
        (_, _, Some(k), _) => SizeParam::MPerNode(k),
        (.., Some(m)) => SizeParam::TargetEdges(m),
        _ => unreachable!("clap requires one size argument"),
    };
    let applies = matches!(
        (family, size),
        (Family::ErGnm, SizeParam::Density(_) | SizeParam::Edges(_))
            | (Family::ErGnp, SizeParam::Density(_))
            | (Family::BarabasiAlbert, SizeParam::Density(_) | SizeParam::MPerNode(_) | SizeParam::TargetEdges(_))
    );
    if !applies {
        return Err(Failure::Usage("size argument does not apply to this --family".into()));
    }
    let seed = resolve_seed(&a.seed);
    let g = generate(&GeneratorSpec { family, n: a.n, size, seed })?;
    let mut out = open_output(&a.output)?;
    write_edge_list(&g, &mut out)?;
    out.flush()?;
    Ok(())
}
