use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "cremona", version, about = "Birational involutions of the plane, exactly")]
pub struct Cli {
    /// Seed for every pseudo-random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Report the elapsed time on stderr.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// De Jonquieres involution fixing a curve with a (d-2)-fold point.
    Dj {
        #[arg(long)]
        curve: String,
        #[arg(long)]
        center: String,
        /// Skip the search for singular points away from the center.
        #[arg(long)]
        trusted: bool,
    },
    /// Harmonic conjugation with respect to a smooth conic.
    DjConic {
        #[arg(long)]
        q: String,
        #[arg(long)]
        p: String,
    },
    /// Geiser involution of seven points.
    Geiser {
        #[command(flatten)]
        run: PointRun,
        /// Reconstruct the degree-8 map from this many samples.
        #[arg(long)]
        interpolate: Option<usize>,
    },
    /// Bertini involution of eight points.
    Bertini {
        #[command(flatten)]
        run: PointRun,
    },
    /// Check that a map is an involution.
    Verify {
        #[command(flatten)]
        map: MapSource,
    },
    /// Fixed curve of a map: gcd of the fixed-point minors.
    FixedCurve {
        #[command(flatten)]
        map: MapSource,
    },
    /// Normalized fixed curve of a construction, cross-checked.
    Invariant {
        #[command(flatten)]
        source: Construction,
    },
    /// Conjugacy class of a construction or a raw map.
    Classify {
        #[command(flatten)]
        source: ClassifySource,
    },
    /// Picard lattices of rational surfaces.
    #[command(subcommand)]
    Lattice(LatticeCommand),
    /// Elementary transformations of a conic bundle over F_n.
    Elmt {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        fibres: u32,
        /// Contact orders of the fixed curve with the negative section.
        #[arg(long, value_delimiter = ',')]
        contacts: Vec<u32>,
        /// Centers in order: `off`, `on` or `contact:I`.
        #[arg(long = "at", required = true)]
        at: Vec<String>,
    },
}

#[derive(Args, Debug)]
pub struct PointRun {
    /// Point-configuration file: one `(a:b:c)` per line.
    #[arg(long)]
    pub points: PathBuf,
    /// Evaluate at this point (repeatable).
    #[arg(long = "at")]
    pub at: Vec<String>,
    /// Evaluate at this many seeded sample points.
    #[arg(long, default_value_t = 0)]
    pub samples: usize,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct MapSource {
    /// JSON file with a `components` array of three polynomials.
    #[arg(long)]
    pub map_file: Option<PathBuf>,
    #[arg(long, num_args = 3, value_names = ["F1", "F2", "F3"])]
    pub components: Option<Vec<String>>,
}

#[derive(Args, Debug)]
pub struct Construction {
    /// DJ curve; needs `--center`.
    #[arg(long, requires = "center", conflicts_with_all = ["geiser", "bertini"])]
    pub curve: Option<String>,
    #[arg(long)]
    pub center: Option<String>,
    #[arg(long)]
    pub trusted: bool,
    /// Geiser point-configuration file.
    #[arg(long, conflicts_with = "bertini")]
    pub geiser: Option<PathBuf>,
    /// Bertini point-configuration file.
    #[arg(long)]
    pub bertini: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ClassifySource {
    #[arg(long, conflicts_with_all = ["components", "curve", "geiser", "bertini"])]
    pub map_file: Option<PathBuf>,
    #[arg(long, num_args = 3, value_names = ["F1", "F2", "F3"], conflicts_with_all = ["curve", "geiser", "bertini"])]
    pub components: Option<Vec<String>>,
    #[command(flatten)]
    pub construction: Construction,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct LatticeArg {
    /// Blow-up of the plane at this many points.
    #[arg(long)]
    pub n: Option<usize>,
    /// P^1 x P^1.
    #[arg(long)]
    pub quadric: bool,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct LatticeInvolutionArg {
    /// Matrix file: rank on the first line, then row-major integers.
    #[arg(long)]
    pub matrix_file: Option<PathBuf>,
    /// `x -> -x + 2 (K.x)/K^2 K`.
    #[arg(long)]
    pub anti_canonical: bool,
    #[arg(long)]
    pub identity: bool,
}

#[derive(Subcommand, Debug)]
pub enum LatticeCommand {
    /// Intersection form and canonical class.
    Make {
        #[command(flatten)]
        lattice: LatticeArg,
    },
    /// Reflection through a class of square -1 or -2 (or +1, +2).
    Reflect {
        #[command(flatten)]
        lattice: LatticeArg,
        #[arg(
            long,
            allow_hyphen_values = true,
            conflicts_with = "anti_canonical",
            required_unless_present = "anti_canonical"
        )]
        alpha: Option<String>,
        #[arg(long)]
        anti_canonical: bool,
    },
    /// Classes with E^2 = -1 and K.E = -1.
    Exceptionals {
        #[command(flatten)]
        lattice: LatticeArg,
    },
    /// Minimality test with a witness on failure.
    Minimal {
        #[command(flatten)]
        lattice: LatticeArg,
        #[command(flatten)]
        involution: LatticeInvolutionArg,
    },
    /// Case of the minimal-pair classification.
    Classify {
        #[command(flatten)]
        lattice: LatticeArg,
        #[command(flatten)]
        involution: LatticeInvolutionArg,
    },
}
