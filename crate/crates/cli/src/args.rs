use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pocket_spectra::eigen::DEFAULT_MAX_SWEEPS;
use pocket_spectra::verify::Suite;
use pocket_spectra::{CoronalRoute, MatrixKind, PocketKind};

/// Multi-letter single-dash flags accepted for scripting convenience.
const LONG_ALIASES: [(&str, &str); 3] = [("-Vk", "--Vk"), ("-Ek", "--Ek"), ("-uv", "--uv")];

/// Rewrite `-Vk`, `-Ek` and `-uv` (optionally with `=value`) into their long forms.
pub fn normalise_args(args: impl IntoIterator<Item = String>) -> Vec<String> {
    args.into_iter()
        .map(|a| {
            for (short, long) in LONG_ALIASES {
                if a == short {
                    return long.to_string();
                }
                if let Some(rest) = a.strip_prefix(short).filter(|r| r.starts_with('=')) {
                    return format!("{long}{rest}");
                }
            }
            a
        })
        .collect()
}

#[derive(Debug, Parser)]
#[command(name = "pocket-spectra", version, about = "Exact spectra of graphs with vertex pockets and edge-pockets")]
pub struct Cli {
    /// Omit wall-clock timings so reports are byte-stable.
    #[arg(long, global = true)]
    pub no_timing: bool,

    /// Compact single-line JSON.
    #[arg(long, global = true)]
    pub compact: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Assemble a pocket graph and print its graph6 string.
    Build(BuildArgs),
    /// Characteristic polynomial of a graph or pocket spec.
    Charpoly(CharpolyArgs),
    /// Numeric spectrum of a graph as JSON or CSV.
    Spectrum(SpectrumArgs),
    /// Run a seeded verification suite.
    Verify(VerifyArgs),
    /// Certify, construct or search for cospectral pairs.
    #[command(subcommand)]
    Cospectral(CospectralCommand),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Matrix {
    A,
    Q,
}

impl From<Matrix> for MatrixKind {
    fn from(m: Matrix) -> MatrixKind {
        match m {
            Matrix::A => MatrixKind::A,
            Matrix::Q => MatrixKind::Q,
        }
    }
}

/// A pocket spec from a JSON file or from inline flags.
#[derive(Debug, Clone, Args)]
pub struct PocketArgs {
    /// JSON pocket spec file.
    #[arg(long, value_name = "FILE")]
    pub spec: Option<PathBuf>,

    /// Host graph: named literal, graph6 string or graph6 file.
    #[arg(short = 'F', value_name = "GRAPH")]
    pub f: Option<String>,

    /// Pocket graph: named literal, graph6 string or graph6 file.
    #[arg(short = 'H', value_name = "GRAPH")]
    pub h: Option<String>,

    /// Attachment vertices of F, comma separated.
    #[arg(long = "Vk", value_name = "LIST")]
    pub vk: Option<String>,

    /// Pocket vertex of H identified with each attachment vertex.
    #[arg(short = 'v', value_name = "VERTEX")]
    pub v: Option<usize>,

    /// Edges of F carrying pockets, as `a-b,c-d`.
    #[arg(long = "Ek", value_name = "EDGES")]
    pub ek: Option<String>,

    /// Edge of H glued onto each pocket edge, as `u-v`.
    #[arg(long = "uv", value_name = "EDGE")]
    pub uv: Option<String>,

    /// Indices into E_k whose pocket is glued the other way round.
    #[arg(long, value_name = "LIST")]
    pub flip: Option<String>,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    /// Vertex pockets from -F, -Vk, -H, -v.
    #[arg(long, group = "mode")]
    pub vertex_pockets: bool,
    /// Edge-pockets from -F, -Ek, -H, -uv.
    #[arg(long, group = "mode")]
    pub edge_pockets: bool,
    /// Corona: `{v} ∨ H` at every vertex of F.
    #[arg(long, group = "mode")]
    pub corona: bool,
    /// Edge corona: `K_2 ∨ H` on every edge of F.
    #[arg(long, group = "mode")]
    pub edge_corona: bool,

    #[command(flatten)]
    pub pocket: PocketArgs,

    /// Print only the graph6 string.
    #[arg(long)]
    pub graph6_only: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Via {
    Direct,
    Formula,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Coronal {
    Auto,
    General,
    ConstantRowSum,
}

impl From<Coronal> for CoronalRoute {
    fn from(c: Coronal) -> CoronalRoute {
        match c {
            Coronal::Auto => CoronalRoute::Auto,
            Coronal::General => CoronalRoute::General,
            Coronal::ConstantRowSum => CoronalRoute::ConstantRowSum,
        }
    }
}

#[derive(Debug, Args)]
pub struct CharpolyArgs {
    /// Graph for the direct route; omit when giving a pocket spec.
    pub graph: Option<String>,

    #[arg(long, value_enum, default_value = "a", ignore_case = true)]
    pub matrix: Matrix,

    #[arg(long, value_enum, default_value = "direct")]
    pub via: Via,

    /// How the coronal is obtained on the formula route.
    #[arg(long, value_enum, default_value = "auto")]
    pub coronal: Coronal,

    /// Use the spanning edge-pocket form.
    #[arg(long)]
    pub spanning: bool,

    #[command(flatten)]
    pub pocket: PocketArgs,
}

#[derive(Debug, Args)]
pub struct NumericArgs {
    /// Comparison tolerance.
    #[arg(long, env = "POCKET_SPECTRA_TOL", default_value_t = 1e-9)]
    pub tol: f64,

    /// Jacobi sweep limit.
    #[arg(long, default_value_t = DEFAULT_MAX_SWEEPS)]
    pub max_sweeps: usize,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    pub graph: String,

    #[arg(long, value_enum, default_value = "a", ignore_case = true)]
    pub matrix: Matrix,

    /// Emit a CSV table `index,eigenvalue` instead of JSON.
    #[arg(long)]
    pub csv: bool,

    #[command(flatten)]
    pub numeric: NumericArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    VertexA,
    VertexQ,
    EdgeQ,
    EdgeSpanning,
    JoinA,
    JoinQ,
    Matching,
    Cycle,
    Small,
    Inherit,
    Eigvec,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::VertexA => Suite::VertexA,
            SuiteArg::VertexQ => Suite::VertexQ,
            SuiteArg::EdgeQ => Suite::EdgeQ,
            SuiteArg::EdgeSpanning => Suite::EdgeSpanning,
            SuiteArg::JoinA => Suite::JoinA,
            SuiteArg::JoinQ => Suite::JoinQ,
            SuiteArg::Matching => Suite::Matching,
            SuiteArg::Cycle => Suite::Cycle,
            SuiteArg::Small => Suite::Small,
            SuiteArg::Inherit => Suite::Inherit,
            SuiteArg::Eigvec => Suite::Eigvec,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    #[value(name = "A-vertex", alias = "a-vertex")]
    AVertex,
    #[value(name = "Q-vertex", alias = "q-vertex")]
    QVertex,
    #[value(name = "Q-edge", alias = "q-edge")]
    QEdge,
}

impl From<KindArg> for PocketKind {
    fn from(k: KindArg) -> PocketKind {
        match k {
            KindArg::AVertex => PocketKind::AVertex,
            KindArg::QVertex => PocketKind::QVertex,
            KindArg::QEdge => PocketKind::QEdge,
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: SuiteArg,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, default_value_t = 50)]
    pub count: usize,

    /// `k` for the matching suite, `n` for the cycle suite.
    #[arg(short = 'n')]
    pub n: Option<usize>,

    /// Pocket order for the closed-form suites.
    #[arg(short = 'm')]
    pub m: Option<usize>,

    /// Pocket kind for the inherit suite.
    #[arg(long, value_enum)]
    pub kind: Option<KindArg>,

    #[command(flatten)]
    pub numeric: NumericArgs,
}

#[derive(Debug, Subcommand)]
pub enum CospectralCommand {
    /// Compare two graphs.
    Check {
        g1: String,
        g2: String,
        #[arg(long, value_enum, default_value = "a", ignore_case = true)]
        kind: Matrix,
    },
    /// Build a pocket pair from two co-regular cospectral seeds.
    Construct {
        /// Two seeds, comma separated.
        #[arg(long, value_name = "G1,G2")]
        seeds: String,
        #[arg(short = 'F', value_name = "GRAPH")]
        f: String,
        /// Vertex pockets at these vertices.
        #[arg(long = "Vk", value_name = "LIST", conflicts_with = "ek")]
        vk: Option<String>,
        /// Edge-pockets on these edges (signless Laplacian only).
        #[arg(long = "Ek", value_name = "EDGES")]
        ek: Option<String>,
        #[arg(long, value_enum, default_value = "a", ignore_case = true)]
        kind: Matrix,
    },
    /// Group a graph6 stream by characteristic polynomial.
    Search {
        /// graph6 file, or `-` for stdin.
        #[arg(long = "in", value_name = "FILE", default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value = "a", ignore_case = true)]
        kind: Matrix,
        /// Keep only pairs of regular graphs of equal degree.
        #[arg(long)]
        regular: bool,
    },
}
