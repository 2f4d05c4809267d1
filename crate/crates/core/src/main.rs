use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ncsf::bases::NsymBasis;
use ncsf::cache;
use ncsf::composition::Composition;
use ncsf::cycle_index::{c_q, c_q_tilde, expand_sn_in_theta, ThetaVariant, DEFAULT_DEGREE_BOUND};
use ncsf::equivalences::{class_census_bfs, class_census_chain, insert, Relation};
use ncsf::error::{Error, Result};
use ncsf::output::{self, Document, Format, TableKind};
use ncsf::permutation::Permutation;
use ncsf::products::{v_product, vprime_product};

const TABLE_BOUND: usize = 8;
const PRODUCT_BOUND: usize = 16;
const QCOEFF_BOUND: usize = 40;

#[derive(Parser)]
#[command(name = "ncsf", version, about = "Saillance bases of QSym and NSym, exactly")]
struct Cli {
    /// Output format: text, json or csv.
    #[arg(long, global = true, default_value = "text")]
    format: FormatArg,
    /// Refuse degrees above this bound.
    #[arg(long, global = true)]
    degree_bound: Option<usize>,
    /// Neither read nor write the transition-matrix cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum StatArg {
    /// saillance composition
    Sc,
    /// recoil composition
    Rc,
    /// descent composition
    Dc,
    Inv,
    Invc,
    /// cycle type, cycles ordered by their maxima
    Octype,
    /// cycles written smallest letter first, by increasing minima
    Foata,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductBasis {
    V,
    Vprime,
}

#[derive(Subcommand)]
enum Command {
    /// A statistic of a permutation.
    Stat { perm: Permutation, statistic: StatArg },
    /// A printed table: U, M, Minv, VR, VL or Z.
    Table { n: usize, which: TableKind },
    /// Product of two basis elements of V or V'.
    Product {
        left: Composition,
        right: Composition,
        #[arg(long, default_value = "v")]
        basis: ProductBasis,
    },
    /// The coefficient c_I(q) of the cycle-index expansion.
    Qcoeff {
        comp: Composition,
        /// The Carlitz variant c̃_I(q).
        #[arg(long)]
        tilde: bool,
        /// Solve the defining triangular system instead of using the closed form.
        #[arg(long)]
        solve: bool,
    },
    /// Equivalence classes of S_n under eq1, eq2 or mirror.
    Classes {
        n: usize,
        relation: Relation,
        /// List each class by its smallest element and size.
        #[arg(long)]
        sizes: bool,
        /// Use breadth-first closure instead of chain enumeration.
        #[arg(long)]
        bfs: bool,
    },
    /// Insertion symbols P and Q of a permutation.
    Insert { perm: Permutation, relation: Relation },
}

fn bounded(n: usize, bound: usize) -> Result<()> {
    if n > bound {
        return Err(Error::DegreeBound { degree: n, bound });
    }
    Ok(())
}

fn stat(perm: &Permutation, which: StatArg) -> (&'static str, String) {
    match which {
        StatArg::Sc => ("sc", perm.saillance_composition().comma_list()),
        StatArg::Rc => ("rc", perm.recoil_composition().comma_list()),
        StatArg::Dc => ("dc", perm.descent_composition().comma_list()),
        StatArg::Inv => ("inv", perm.inversions().to_string()),
        StatArg::Invc => ("invc", perm.invc().to_string()),
        StatArg::Octype => ("octype", perm.ordered_cycle_type().comma_list()),
        StatArg::Foata => ("foata", perm.foata_first().to_string()),
    }
}

fn run(cli: &Cli, warn: &mut impl FnMut(String)) -> Result<Document> {
    match &cli.command {
        Command::Stat { perm, statistic } => {
            let (name, value) = stat(perm, *statistic);
            Ok(Document::Statistic { permutation: perm.to_string(), statistic: name.into(), value })
        }
        Command::Table { n, which } => {
            let bound = cli.degree_bound.unwrap_or(TABLE_BOUND);
            bounded(*n, bound)?;
            if *which != TableKind::Z && *n > 0 {
                let dir = if cli.no_cache { None } else { cache::default_dir() };
                let (_, warnings) = cache::cached_transition_matrix(dir.as_deref(), *n)?;
                warnings.into_iter().for_each(&mut *warn);
            }
            output::table(*which, *n, bound)
        }
        Command::Product { left, right, basis } => {
            bounded(left.weight() + right.weight(), cli.degree_bound.unwrap_or(PRODUCT_BOUND))?;
            let (b, value) = match basis {
                ProductBasis::V => (NsymBasis::V, v_product(left, right)),
                ProductBasis::Vprime => (NsymBasis::VPrime, vprime_product(left, right)),
            };
            Ok(output::product_document(b, left, right, &value))
        }
        Command::Qcoeff { comp, tilde, solve } => {
            let n = comp.weight();
            let variant = if *tilde { ThetaVariant::Tilde } else { ThetaVariant::Plain };
            let p = if *solve {
                let bound = cli.degree_bound.unwrap_or(DEFAULT_DEGREE_BOUND);
                let table = expand_sn_in_theta(n, variant, bound)?;
                table.entries.get(comp).cloned().ok_or_else(|| Error::InvalidComposition(comp.compact()))?
            } else {
                bounded(n, cli.degree_bound.unwrap_or(QCOEFF_BOUND))?;
                if *tilde {
                    c_q_tilde(comp)?
                } else {
                    c_q(comp)?
                }
            };
            let name = if *tilde { "tilde" } else { "plain" };
            Ok(output::polynomial_document(comp, name, &p))
        }
        Command::Classes { n, relation, sizes, bfs } => {
            if let Some(bound) = cli.degree_bound {
                bounded(*n, bound)?;
            }
            let census = if *bfs { class_census_bfs(*n, *relation)? } else { class_census_chain(*n, *relation)? };
            Ok(output::census_document(&census, *sizes))
        }
        Command::Insert { perm, relation } => Ok(Document::Insertion {
            permutation: perm.to_string(),
            relation: *relation,
            pair: insert(perm, *relation)?,
        }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
    };
    let mut warn = |w: String| eprintln!("warning: {w}");
    let rendered = run(&cli, &mut warn).and_then(|doc| doc.render(format));
    match rendered {
        Ok(text) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::FAILURE;
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
