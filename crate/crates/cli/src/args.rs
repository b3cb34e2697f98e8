use clap::{Parser, Subcommand, ValueEnum};

/// Weyl groups, Chevalley-Bruhat ideals and the topology of the associated
/// domains of discontinuity.
///
/// Generators are 0-based: in type A_{n-1}, generator i swaps positions i+1
/// and i+2. Words are written as space- or dot-separated generator indices,
/// with `e` for the identity.
#[derive(Debug, Parser)]
#[command(name = "weylkit", version)]
pub struct Cli {
    /// Print machine-readable JSON instead of a table.
    #[arg(long, global = true)]
    pub json: bool,

    /// Largest group order any command may construct.
    #[arg(long, global = true, env = "WEYLKIT_MAX_ORDER")]
    pub max_order: Option<usize>,

    /// Check the defining theorems of constructed families even in release
    /// builds.
    #[arg(long, global = true)]
    pub verify: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order, longest element and length histogram.
    Group {
        #[arg(value_name = "TYPE")]
        cartan: String,
    },
    /// Enumerate balanced ideals.
    Balanced {
        #[arg(value_name = "TYPE")]
        cartan: String,
        /// Only ideals invariant under right multiplication by these
        /// generators, e.g. `0,2`.
        #[arg(long, value_name = "GENS")]
        right_invariant: Option<String>,
        /// Disable parallel search (output is identical either way).
        #[arg(long)]
        serial: bool,
    },
    /// Construct one of the named ideal families.
    Family {
        #[command(subcommand)]
        family: FamilyCommand,
    },
    /// Thickening ranks, domain Betti numbers, Euler characteristic and
    /// quotient homology.
    Betti {
        #[arg(value_name = "TYPE")]
        cartan: String,
        /// `family:<lower-half|incidence|principal-2n>`, `words:<w>;<w>;…`, or
        /// a path to a JSON ideal document.
        #[arg(long)]
        ideal: String,
        /// Generators of W_D, e.g. `1` or `` (empty for the Borel).
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        domain: String,
        /// Genus of the surface for quotient homology.
        #[arg(long)]
        genus: Option<u64>,
    },
    /// Closed-form Poincaré polynomials.
    Poincare {
        kind: PoincareKind,
        /// `m` for `flag`, `n` for `omega2n`.
        value: usize,
    },
    /// Borel–Bott–Weil data for a weight.
    Bbw {
        #[arg(value_name = "TYPE")]
        cartan: String,
        /// Fundamental-weight coordinates, e.g. `2,-1`.
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// Degree bound for the sheaf-cohomology case analysis.
        #[arg(long)]
        k: Option<usize>,
        /// Cohomological dimension of Γ.
        #[arg(long, default_value_t = 0)]
        cd: usize,
    },
    /// Check that all elements up to a given length are small.
    Small {
        #[arg(value_name = "TYPE")]
        cartan: String,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        max_len: u8,
        /// Exit with status 2 if a non-small element is found.
        #[arg(long)]
        expect_all_small: bool,
    },
    /// Hausdorff dimension bound for the limit set.
    Hausdorff {
        #[arg(value_name = "TYPE")]
        cartan: String,
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        domain: String,
        /// Hausdorff dimension of the limit curve, in [0, 2].
        #[arg(long, default_value_t = 1.0)]
        curve_dim: f64,
    },
    /// Compare the lower-half and principal domains in S_{2n}, n = 2j+1.
    Distinct { j: usize },
    /// Cross-check the order engine against independent criteria on random
    /// pairs.
    Oracle {
        #[arg(value_name = "TYPE")]
        cartan: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum FamilyCommand {
    /// Elements of length below ℓ(w₀)/2 (ℓ(w₀) odd).
    LowerHalf {
        #[arg(value_name = "TYPE")]
        cartan: String,
    },
    /// Lower half plus a selection J from the middle level (ℓ(w₀) even).
    #[command(name = "lower-half-J")]
    LowerHalfJ {
        #[arg(value_name = "TYPE")]
        cartan: String,
        /// Words of the selected elements, separated by `;`. Defaults to the
        /// element of smaller id in each pair {x, w₀x}.
        #[arg(long)]
        select: Option<String>,
    },
    /// {x ∈ S_n : x(1) < x(n)}.
    Incidence { n: usize },
    /// {w ∈ S_2n : w(2n) > n}.
    #[command(name = "principal-2n")]
    Principal2n { n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PoincareKind {
    Flag,
    Omega2n,
}
