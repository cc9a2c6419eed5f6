use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "hkr",
    version,
    about = "Exact generalized character theory computations for small finite groups"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Output format; csv is only available for `rank`
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Cache file (defaults to $HKR_CACHE, then the user cache directory)
    #[arg(long, global = true, value_name = "PATH")]
    pub cache: Option<PathBuf>,

    /// Neither read nor write the cache
    #[arg(long, global = true)]
    pub no_cache: bool,

    /// Add timing and cache information to the report
    #[arg(long, global = true)]
    pub verbose: bool,

    /// Largest group order accepted when closing generators
    #[arg(long, global = true, value_name = "N")]
    pub order_cap: Option<usize>,

    /// Largest number of candidate checks when enumerating commuting tuples
    #[arg(long, global = true, value_name = "N")]
    pub tuple_work_cap: Option<u64>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Predicted rank |Hom(Z_p^n, G)/G| for one or more n
    Rank(RankArgs),
    /// Conjugacy classes of commuting n-tuples of p-power-order elements
    Tuples(GroupPN),
    /// Orbits of GL_n(Z/p^k) on the classes of commuting tuples
    GlOrbits(GroupPNK),
    /// Number of Z_p^n-sets of cardinality p^k
    ZpnSets(PNK),
    /// Number of subgroups of order p^k in (Z/p^k)^n
    Subgroups(PNK),
    /// Formal group laws and their series
    Fgl {
        #[command(subcommand)]
        command: FglCommand,
    },
    /// The height-one level ring at p^k: CRT splitting, Vandermonde, localization, Drinfeld ring
    C0Demo(PK),
    /// Character table
    Chartable(GroupOnly),
    /// Irreducible characters restricted to p-power-order classes
    Charmap(CharmapArgs),
    /// Adams operation psi^m on irreducible characters
    Adams(AdamsArgs),
    /// Total power operation P_k of one irreducible character
    PowerOp(PowerOpArgs),
    /// The level-k operation on irreducible characters, compared with psi^(p^k)
    PsiLevel(PsiLevelArgs),
    /// Dimension of the Galois-fixed class functions on p-power classes
    GaloisDim(GroupPOptK),
    /// Fixed points of commuting tuples on finite G-sets
    Fix {
        #[command(subcommand)]
        command: FixCommand,
    },
    /// Run the acceptance suite and a cache transparency check
    Selftest(SelftestArgs),
}

#[derive(Args, Debug)]
pub struct GroupOnly {
    /// Group expression, for example "Sym(4)" or "Cyc(2)*Q8"
    #[arg(long)]
    pub group: String,
}

#[derive(Args, Debug)]
pub struct RankArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub p: u64,
    /// One value or a comma-separated list
    #[arg(long, value_delimiter = ',', required = true)]
    pub n: Vec<usize>,
}

#[derive(Args, Debug)]
pub struct GroupPN {
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub n: usize,
}

#[derive(Args, Debug)]
pub struct GroupPNK {
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub n: usize,
    /// Level; defaults to the least k with every p-element order dividing p^k
    #[arg(long)]
    pub k: Option<u32>,
}

#[derive(Args, Debug)]
pub struct PNK {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: u32,
}

#[derive(Args, Debug)]
pub struct PK {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub k: u32,
}

#[derive(Args, Debug)]
pub struct GroupPOptK {
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub p: u64,
    /// Level; defaults to the least admissible one
    #[arg(long)]
    pub k: Option<u32>,
}

#[derive(Args, Debug)]
pub struct CharmapArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub p: u64,
    /// Index of one irreducible (table order); all of them when omitted
    #[arg(long)]
    pub chi: Option<usize>,
}

#[derive(Args, Debug)]
pub struct AdamsArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long, allow_negative_numbers = true)]
    pub m: i64,
    #[arg(long)]
    pub chi: Option<usize>,
}

#[derive(Args, Debug)]
pub struct PowerOpArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub chi: usize,
}

#[derive(Args, Debug)]
pub struct PsiLevelArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub chi: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct LawArgs {
    /// additive, multiplicative, or honda(p,n)
    #[arg(long, default_value = "multiplicative")]
    pub law: String,
    /// Coefficient ring: Q, Z, or Z/p^e written as mod(p,e)
    #[arg(long, default_value = "Q")]
    pub ring: String,
    /// Truncation degree
    #[arg(long = "D")]
    pub degree: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum FglCommand {
    /// Print F(x, y) and check the axioms
    Law(LawArgs),
    /// The m-series [m](x)
    MSeries {
        #[command(flatten)]
        law: LawArgs,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
    },
    /// The factors <p^i>(x), i = 1..k, of [p^k](x)
    Angle {
        #[command(flatten)]
        law: LawArgs,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: u32,
    },
    /// Weierstrass degree of [p^k](x) over Z/p^2
    Weierstrass {
        /// additive, multiplicative, or honda(p,n)
        #[arg(long)]
        law: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: u32,
        #[arg(long = "D")]
        degree: Option<usize>,
    },
    /// Bezout certificate for <p^i> and <p^j> of the multiplicative law
    Coprime {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        i: u32,
        #[arg(long)]
        j: u32,
    },
}

#[derive(Args, Debug, Clone)]
pub struct GSetArgs {
    /// G-set in JSON: {"group": spec, "points": [...], "action": ...}
    #[arg(long, value_name = "FILE", conflicts_with_all = ["group", "cosets", "regular"])]
    pub gset: Option<PathBuf>,
    /// Group acting; without --cosets or --regular the G-set is a point
    #[arg(long, required_unless_present = "gset")]
    pub group: Option<String>,
    /// Left cosets of the subgroup generated by these permutations, e.g. "(0 1), (1 2)"
    #[arg(long, conflicts_with = "regular")]
    pub cosets: Option<String>,
    /// G acting on itself
    #[arg(long)]
    pub regular: bool,
}

#[derive(Subcommand, Debug)]
pub enum FixCommand {
    /// List the points of Fix_n(X)
    Points {
        #[command(flatten)]
        x: GSetArgs,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
    },
    /// G-orbits of Fix_n(X) with their stabilizer orders
    Census {
        #[command(flatten)]
        x: GSetArgs,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
    },
    /// Compare Fix_1(Fix_{n-1}(X)) with Fix_n(X)
    IterateCheck {
        #[command(flatten)]
        x: GSetArgs,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
    },
    /// For a p-group, compare commuting n-tuples with p-power ones
    LoopsCheck {
        #[arg(long)]
        group: String,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args, Debug)]
pub struct SelftestArgs {
    /// Run a single criterion
    #[arg(long)]
    pub criterion: Option<u8>,
}
