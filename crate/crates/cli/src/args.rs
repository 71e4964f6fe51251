use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use idealgraph::{Caps, GraphKind, RingSpec};

#[derive(Parser, Debug)]
#[command(
    name = "idealgraph",
    version,
    about = "Ideal graphs of finite residue-ring products"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the ideals of a ring with their classification.
    Ideals {
        #[arg(long)]
        ring: RingSpec,
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Write one ideal graph as DOT or JSON.
    Graph {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
        /// Evaluate edge predicates on ring elements instead of closed forms.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Compute the invariants of one ideal graph as a JSON report.
    Analyze {
        #[command(flatten)]
        target: Target,
        /// Also evaluate these claims on the ring (comma separated, or "all").
        #[arg(long)]
        claims: Option<String>,
        /// Exit with status 3 when the domination number is over the cap.
        #[arg(long)]
        require_domination: bool,
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Check claims over cyclic rings and product rings.
    Verify {
        /// Comma separated claim ids, or "all".
        #[arg(long, default_value = "all")]
        claims: String,
        /// Largest n for the cyclic rings Z_n.
        #[arg(long, default_value_t = 200)]
        nmax: u64,
        /// Include every product of prime-power rings up to this order.
        #[arg(long)]
        products_up_to: Option<u64>,
        /// Extra rings to include.
        #[arg(long = "ring")]
        rings: Vec<RingSpec>,
        #[arg(long, value_enum, default_value_t = ListFormat::Json)]
        format: ListFormat,
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// List the claim registry.
    Claims,
    /// Print the JSON schema of the reports.
    Schema,
}

#[derive(Args, Debug)]
pub struct Target {
    #[arg(long)]
    pub ring: RingSpec,
    #[arg(long, default_value_t = GraphKind::Sii)]
    pub kind: GraphKind,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct CapArgs {
    /// Most ideals a ring may have.
    #[arg(long, default_value_t = Caps::default().ideals)]
    pub max_ideals: usize,
    /// Largest ring order for element-level checks.
    #[arg(long, default_value_t = Caps::default().oracle_order)]
    pub oracle_order_cap: u64,
    /// Most vertices for an exact domination number.
    #[arg(long, default_value_t = Caps::default().domination)]
    pub domination_cap: usize,
    /// Most vertices for an isomorphism search.
    #[arg(long, default_value_t = Caps::default().isomorphism)]
    pub isomorphism_cap: usize,
}

impl From<CapArgs> for Caps {
    fn from(a: CapArgs) -> Caps {
        Caps {
            ideals: a.max_ideals,
            oracle_order: a.oracle_order_cap,
            domination: a.domination_cap,
            isomorphism: a.isomorphism_cap,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ListFormat {
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Json,
}
