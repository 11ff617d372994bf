//! `mpdsg` — invariants of affine semigroups of maximal projective
//! dimension from the command line.
//!
//! Every subcommand reads a semigroup from `--gens` (inline JSON like
//! `[[2,11],[3,0],[5,9],[7,4]]`, or a path to a JSON document with a
//! `generators` field) and prints one result document to stdout: JSON by
//! default, or a readable text rendering with `--format text` (monomials as
//! `x₂⁵x₃³−x₁x₄⁴`, matrices in bracket layout, polynomials in `t₁,t₂`
//! notation).
//!
//! Exit codes: `0` for a certified result, `2` when the result is printed
//! but carries a truncated/uncertified status, `1` for errors.

use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::{One, Zero};
use serde::Serialize;

use mpd_semigroups::classify::{classify_symmetry, quasi_frobenius, wilf_check};
use mpd_semigroups::gaps::{
    frobenius_element, gaps, pseudo_frobenius, pseudo_frobenius_within, EnumerationStatus,
    GapSet, PfSet,
};
use mpd_semigroups::gluing::{
    decompose, find_gluings, pf_of_gluing, rf_generation_transfer, rf_of_gluing, verify_gluing,
    GluingDecomposition,
};
use mpd_semigroups::json::{
    parse_generators, parse_order, BettiDoc, ClassifyDoc, FrobeniusDoc, GapsDoc, GenericDoc,
    GluingDoc, GluingsDoc, IdealDoc, JsonError, KPolyDoc, PfDoc, QfDoc, RfDoc, RfListDoc,
    RfRelDoc, TransferDoc, VerifyDoc, WilfDoc, BinomialDoc,
};
use mpd_semigroups::resolution::{betti_table, k_polynomial, BettiTable, KPolyStrategy};
use mpd_semigroups::rf::{rf_matrix, rf_relations, rf_relations_of, RFMatrix};
use mpd_semigroups::toric::{is_generic, minimal_generators, Binomial, GenericityReport};
use mpd_semigroups::{Int, Semigroup, Vector};

/// Anything that can stop a job before a result document exists.
#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Json(#[from] JsonError),
    #[error("{0}")]
    Render(#[from] serde_json::Error),
    #[error("{0}")]
    Semigroup(#[from] mpd_semigroups::semigroup::SemigroupError),
    #[error("{0}")]
    Gaps(#[from] mpd_semigroups::gaps::GapsError),
    #[error("{0}")]
    Resolution(#[from] mpd_semigroups::resolution::ResolutionError),
    #[error("{0}")]
    Rf(#[from] mpd_semigroups::rf::RfError),
    #[error("{0}")]
    Gluing(#[from] mpd_semigroups::gluing::GluingError),
    #[error("{0}")]
    Classify(#[from] mpd_semigroups::classify::ClassifyError),
    #[error("{0}")]
    Parse(String),
}

/// Output rendering selection; `matrix` is an alias for `text`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// One compact JSON document.
    Json,
    /// Readable lines, matrices, and polynomials.
    Text,
    /// Same as `text`.
    Matrix,
}

impl Format {
    fn is_json(self) -> bool {
        self == Format::Json
    }
}

/// K-polynomial computation strategies.
#[derive(Debug, Clone, Copy, ValueEnum)]
enum Strategy {
    /// Alternating sums of homology ranks over the certified syzygy box.
    BettiSum,
    /// The gap-set identity for full-cone semigroups.
    FullCone,
    /// Inclusion–exclusion over a doubling box until stable.
    TruncatedSeries,
}

impl From<Strategy> for KPolyStrategy {
    fn from(s: Strategy) -> KPolyStrategy {
        match s {
            Strategy::BettiSum => KPolyStrategy::BettiSum,
            Strategy::FullCone => KPolyStrategy::FullConeIdentity,
            Strategy::TruncatedSeries => KPolyStrategy::TruncatedSeries,
        }
    }
}

/// Options shared by every subcommand.
#[derive(Debug, Args)]
struct Input {
    /// Generators: inline JSON array or path to a JSON document.
    #[arg(long, value_name = "GENS")]
    gens: String,
    /// Truncation box, componentwise: `x1,x2,...`.
    #[arg(long, value_name = "BOX", conflicts_with = "bound_scale")]
    bound: Option<String>,
    /// Truncation box `k·(a₁+…+aₙ)` scaled from the generator sum.
    #[arg(long, value_name = "K")]
    bound_scale: Option<i64>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for module-internal parallelism (0 = default).
    #[arg(long, value_name = "N", default_value_t = 0)]
    threads: usize,
}

impl Input {
    /// Reads and validates the semigroup, installing the thread pool first.
    fn semigroup(&self) -> Result<Semigroup, CliError> {
        if self.threads > 0 {
            rayon::ThreadPoolBuilder::new()
                .num_threads(self.threads)
                .build_global()
                .ok();
        }
        let trimmed = self.gens.trim_start();
        let text = if trimmed.starts_with('[') || trimmed.starts_with('{') {
            self.gens.clone()
        } else {
            fs::read_to_string(&self.gens)?
        };
        Ok(Semigroup::new(parse_generators(&text)?)?)
    }

    /// Resolves the truncation box, if any.
    fn resolve_bound(&self, s: &Semigroup) -> Result<Option<Vector>, CliError> {
        if let Some(text) = &self.bound {
            let v = parse_csv_vector(text)?;
            if v.dim() != s.dim() {
                return Err(CliError::Parse(format!(
                    "bound has dimension {}, expected {}",
                    v.dim(),
                    s.dim()
                )));
            }
            Ok(Some(v))
        } else if let Some(k) = self.bound_scale {
            Ok(Some(s.generator_sum().scaled(&Int::from(k))))
        } else {
            Ok(None)
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "mpdsg",
    version,
    about = "Invariants of affine semigroups of maximal projective dimension"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Enumerate the gap set H(S) = (cone(S) ∖ S) ∩ ℕ^d.
    Gaps {
        #[command(flatten)]
        input: Input,
    },
    /// Compute the pseudo-Frobenius set PF(S).
    Pf {
        #[command(flatten)]
        input: Input,
    },
    /// Compute the Frobenius element, the order-largest gap.
    Frobenius {
        #[command(flatten)]
        input: Input,
        /// Term order: `lex`, `grlex`, `grevlex`, or a JSON document.
        #[arg(long, value_name = "ORDER")]
        order: String,
    },
    /// Compute the multigraded Betti table of the semigroup ring.
    Betti {
        #[command(flatten)]
        input: Input,
    },
    /// Compute the K-polynomial of the semigroup ring.
    Kpoly {
        #[command(flatten)]
        input: Input,
        /// Computation strategy.
        #[arg(long, value_enum, default_value_t = Strategy::FullCone)]
        strategy: Strategy,
    },
    /// Compute the minimal binomial generators of the defining ideal.
    Ideal {
        #[command(flatten)]
        input: Input,
    },
    /// Test whether the defining ideal is generic.
    Generic {
        #[command(flatten)]
        input: Input,
    },
    /// Compute canonical RF-matrices of pseudo-Frobenius elements.
    Rf {
        #[command(flatten)]
        input: Input,
        /// One element `x1,x2,...` (default: every certified PF element).
        #[arg(long, value_name = "F")]
        f: Option<String>,
    },
    /// Harvest RF-relations of pseudo-Frobenius elements.
    Rfrel {
        #[command(flatten)]
        input: Input,
        /// One element `x1,x2,...` (default: every certified PF element).
        #[arg(long, value_name = "F")]
        f: Option<String>,
    },
    /// Analyze gluing decompositions S = S₁ +_d S₂.
    Glue {
        #[command(subcommand)]
        action: GlueCommand,
    },
    /// Classify the symmetry of a C-semigroup.
    Classify {
        #[command(flatten)]
        input: Input,
        /// Term order: `lex`, `grlex`, `grevlex`, or a JSON document.
        #[arg(long, value_name = "ORDER")]
        order: String,
    },
    /// Evaluate the Wilf-style count e(S)·n ≥ 𝒩 under a graded order.
    Wilf {
        #[command(flatten)]
        input: Input,
        /// Term order: `grlex`, `grevlex`, or a JSON document (graded).
        #[arg(long, value_name = "ORDER")]
        order: String,
    },
    /// Compute quasi-Frobenius elements of a simplicial semigroup.
    Qf {
        #[command(flatten)]
        input: Input,
        /// Node budget for the Apéry enumerations.
        #[arg(long, value_name = "N")]
        budget: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
enum GlueCommand {
    /// Check whether a partition and common element form a gluing.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Generator indices of the left part: `0,1`.
        #[arg(long, value_name = "IDX")]
        left: String,
        /// The proposed common element: `x1,x2,...`.
        #[arg(long, value_name = "D")]
        d: String,
    },
    /// Search every bipartition of the generators for gluings.
    Find {
        #[command(flatten)]
        input: Input,
    },
    /// Compose PF(S) = {f₁ + f₂ + d} from the component sets.
    Pf {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "IDX")]
        left: String,
        #[arg(long, value_name = "D")]
        d: String,
    },
    /// Assemble the block RF-matrix of f₁ + f₂ + d.
    Rf {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "IDX")]
        left: String,
        #[arg(long, value_name = "D")]
        d: String,
        /// Left pseudo-Frobenius element (default: the lone PF element).
        #[arg(long, value_name = "F1")]
        f1: Option<String>,
        /// Right pseudo-Frobenius element (default: the lone PF element).
        #[arg(long, value_name = "F2")]
        f2: Option<String>,
    },
    /// Find transfer witnesses carrying RF-generation across the gluing.
    Transfer {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "IDX")]
        left: String,
        #[arg(long, value_name = "D")]
        d: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version land here too; keep their success status
            // while folding genuine usage errors into the error exit code.
            let code = if e.exit_code() == 0 { 0 } else { 1 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

/// Prints the chosen rendering of one result document.
fn emit<D: Serialize>(format: Format, doc: &D, text: String) -> Result<(), CliError> {
    if format.is_json() {
        println!("{}", serde_json::to_string(doc)?);
    } else {
        println!("{text}");
    }
    Ok(())
}

fn certified_exit(certified: bool) -> u8 {
    if certified {
        0
    } else {
        2
    }
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Gaps { input } => {
            let s = input.semigroup()?;
            let bound = input.resolve_bound(&s)?;
            let g = gaps(&s, bound.as_ref());
            emit(input.format, &GapsDoc::from_gap_set(&g), gaps_text(&g))?;
            Ok(certified_exit(g.is_certified()))
        }
        Command::Pf { input } => {
            let s = input.semigroup()?;
            let pf = match input.resolve_bound(&s)? {
                Some(b) => pseudo_frobenius_within(&s, &b),
                None => pseudo_frobenius(&s),
            };
            emit(input.format, &PfDoc::from_pf_set(&pf), pf_text(&pf))?;
            Ok(certified_exit(pf.is_certified()))
        }
        Command::Frobenius { input, order } => {
            let s = input.semigroup()?;
            let order = parse_order(&order, s.dim())?;
            let bound = input.resolve_bound(&s)?;
            let f = frobenius_element(&s, &order, bound.as_ref())?;
            let text = format!(
                "frobenius: {} ({})",
                vec_text(&f.element),
                status_text(&f.status)
            );
            emit(input.format, &FrobeniusDoc::from_frobenius(&f), text)?;
            Ok(certified_exit(f.status.is_certified()))
        }
        Command::Betti { input } => {
            let s = input.semigroup()?;
            let table = betti_table(&s)?;
            emit(input.format, &BettiDoc::from_table(&table), betti_text(&table))?;
            Ok(0)
        }
        Command::Kpoly { input, strategy } => {
            let s = input.semigroup()?;
            let k = k_polynomial(&s, strategy.into())?;
            let doc = KPolyDoc::from_k_polynomial(&k);
            let text = kpoly_text(&k);
            emit(input.format, &doc, text)?;
            Ok(0)
        }
        Command::Ideal { input } => {
            let s = input.semigroup()?;
            let gens = minimal_generators(&s);
            let doc = IdealDoc {
                generators: gens.iter().map(BinomialDoc::from_binomial).collect(),
            };
            let text = gens
                .iter()
                .map(binomial_text)
                .collect::<Vec<String>>()
                .join("\n");
            emit(input.format, &doc, text)?;
            Ok(0)
        }
        Command::Generic { input } => {
            let s = input.semigroup()?;
            let report = is_generic(&s);
            emit(
                input.format,
                &GenericDoc::from_report(&report),
                generic_text(&report),
            )?;
            Ok(0)
        }
        Command::Rf { input, f } => {
            let s = input.semigroup()?;
            match f {
                Some(text) => {
                    let f = parse_csv_vector(&text)?;
                    let m = rf_matrix(&s, &f)?;
                    emit(input.format, &RfDoc::from_matrix(&f, &m), rf_text(&f, &m))?;
                }
                None => {
                    let pf = certified_pf(&s)?;
                    let mut docs = Vec::new();
                    let mut blocks = Vec::new();
                    for f in pf.elements() {
                        let m = rf_matrix(&s, f)?;
                        blocks.push(rf_text(f, &m));
                        docs.push(RfDoc::from_matrix(f, &m));
                    }
                    emit(
                        input.format,
                        &RfListDoc { matrices: docs },
                        blocks.join("\n\n"),
                    )?;
                }
            }
            Ok(0)
        }
        Command::Rfrel { input, f } => {
            let s = input.semigroup()?;
            let relations = match f {
                Some(text) => rf_relations_of(&s, &parse_csv_vector(&text)?)?,
                None => rf_relations(&s, &certified_pf(&s)?)?,
            };
            let doc = RfRelDoc {
                relations: relations.iter().map(BinomialDoc::from_binomial).collect(),
            };
            let text = relations
                .iter()
                .map(|b| format!("{}  degree {}", binomial_text(b), vec_text(b.degree())))
                .collect::<Vec<String>>()
                .join("\n");
            emit(input.format, &doc, text)?;
            Ok(0)
        }
        Command::Glue { action } => run_glue(action),
        Command::Classify { input, order } => {
            let s = input.semigroup()?;
            let order = parse_order(&order, s.dim())?;
            let report = classify_symmetry(&s, &order)?;
            let doc = ClassifyDoc::from_report(&report);
            let text = format!(
                "classification: {}\nfrobenius: {}\npf: {}\nunpaired: {}",
                doc.classification,
                vec_text(&report.frobenius),
                vec_list_text(report.pf.elements()),
                vec_list_text(&report.unpaired)
            );
            emit(input.format, &doc, text)?;
            Ok(0)
        }
        Command::Wilf { input, order } => {
            let s = input.semigroup()?;
            let order = parse_order(&order, s.dim())?;
            let report = wilf_check(&s, &order)?;
            let text = format!(
                "frobenius: {}\ngaps: {}\nbelow: {}\nregion: {}\nholds: {}",
                vec_text(&report.frobenius),
                report.gap_count,
                report.below,
                report.region,
                report.holds
            );
            emit(input.format, &WilfDoc::from_report(&report), text)?;
            Ok(0)
        }
        Command::Qf { input, budget } => {
            let s = input.semigroup()?;
            let report = quasi_frobenius(&s, budget)?;
            let text = format!(
                "rays: {}\nmaxima: {}\nelements: {}",
                vec_list_text(&report.rays),
                vec_list_text(&report.apery_maxima),
                vec_list_text(&report.elements)
            );
            emit(input.format, &QfDoc::from_report(&report), text)?;
            Ok(0)
        }
    }
}

fn run_glue(action: GlueCommand) -> Result<u8, CliError> {
    match action {
        GlueCommand::Verify { input, left, d } => {
            let s = input.semigroup()?;
            let left = parse_indices(&left)?;
            let d = parse_csv_vector(&d)?;
            let is_gluing = verify_gluing(&s, &left, &d)?;
            emit(
                input.format,
                &VerifyDoc { is_gluing },
                format!("gluing: {is_gluing}"),
            )?;
            Ok(0)
        }
        GlueCommand::Find { input } => {
            let s = input.semigroup()?;
            let found = find_gluings(&s)?;
            let doc = GluingsDoc {
                gluings: found.iter().map(GluingDoc::from_decomposition).collect(),
            };
            let text = found
                .iter()
                .map(gluing_line)
                .collect::<Vec<String>>()
                .join("\n");
            emit(input.format, &doc, text)?;
            Ok(0)
        }
        GlueCommand::Pf { input, left, d } => {
            let s = input.semigroup()?;
            let dec = decompose(&s, &parse_indices(&left)?, &parse_csv_vector(&d)?)?;
            let pf = pf_of_gluing(&dec)?;
            emit(input.format, &PfDoc::from_pf_set(&pf), pf_text(&pf))?;
            Ok(certified_exit(pf.is_certified()))
        }
        GlueCommand::Rf {
            input,
            left,
            d,
            f1,
            f2,
        } => {
            let s = input.semigroup()?;
            let dec = decompose(&s, &parse_indices(&left)?, &parse_csv_vector(&d)?)?;
            let f1 = named_or_lone_pf(f1, dec.left_component(), "--f1")?;
            let f2 = named_or_lone_pf(f2, dec.right_component(), "--f2")?;
            let m = rf_of_gluing(&s, &dec, &f1, &f2)?;
            let f = f1.add(&f2).add(dec.d());
            emit(input.format, &RfDoc::from_matrix(&f, &m), rf_text(&f, &m))?;
            Ok(0)
        }
        GlueCommand::Transfer { input, left, d } => {
            let s = input.semigroup()?;
            let dec = decompose(&s, &parse_indices(&left)?, &parse_csv_vector(&d)?)?;
            let report = rf_generation_transfer(&s, &dec)?;
            let mut text = format!("bridge: {}", binomial_text(&report.bridge));
            for w in &report.witnesses {
                let _ = write!(
                    text,
                    "\nwitness: left f {} row {} lift {}; right f {} row {} lift {}",
                    vec_text(&w.left_pf),
                    vec_text(&w.left_row),
                    vec_text(&w.left_lift),
                    vec_text(&w.right_pf),
                    vec_text(&w.right_row),
                    vec_text(&w.right_lift)
                );
            }
            emit(input.format, &TransferDoc::from_report(&report), text)?;
            Ok(0)
        }
    }
}

/// The certified pseudo-Frobenius set, or a clear error when certification
/// fails (uncertified sets are only produced by explicit bounds).
fn certified_pf(s: &Semigroup) -> Result<PfSet<Int>, CliError> {
    let pf = pseudo_frobenius(s);
    if !pf.is_certified() {
        return Err(CliError::Parse(
            "the pseudo-Frobenius set could not be certified; pass --f explicitly".into(),
        ));
    }
    Ok(pf)
}

/// Parses `--f1`/`--f2`, defaulting to a component's only PF element.
fn named_or_lone_pf(
    arg: Option<String>,
    component: &Semigroup,
    flag: &str,
) -> Result<Vector, CliError> {
    match arg {
        Some(text) => parse_csv_vector(&text),
        None => {
            let pf = pseudo_frobenius(component);
            match pf.elements() {
                [only] => Ok(only.clone()),
                others => Err(CliError::Parse(format!(
                    "{flag} is required: the component has {} pseudo-Frobenius elements",
                    others.len()
                ))),
            }
        }
    }
}

/// Parses `x1,x2,...` (optionally bracketed) into a vector.
fn parse_csv_vector(text: &str) -> Result<Vector, CliError> {
    let inner = text
        .trim()
        .trim_start_matches(['[', '('])
        .trim_end_matches([']', ')']);
    let coords = inner
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<Int>()
                .map_err(|_| CliError::Parse(format!("`{p}` is not an integer")))
        })
        .collect::<Result<Vec<Int>, CliError>>()?;
    if coords.is_empty() {
        return Err(CliError::Parse("empty vector".into()));
    }
    Ok(Vector::new(coords))
}

/// Parses `i1,i2,...` into generator indices.
fn parse_indices(text: &str) -> Result<Vec<usize>, CliError> {
    text.trim()
        .trim_start_matches(['[', '{', '('])
        .trim_end_matches([']', '}', ')'])
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Parse(format!("`{p}` is not a generator index")))
        })
        .collect()
}

const SUB: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
const SUP: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];

/// Maps the decimal digits of a nonnegative number through a script table.
fn script(digits: &str, table: &[char; 10]) -> String {
    digits
        .chars()
        .map(|c| table[c.to_digit(10).expect("decimal digit") as usize])
        .collect()
}

/// `(2,6)` — parenthesized coordinates.
fn vec_text(v: &Vector) -> String {
    let coords = v
        .coords()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<String>>()
        .join(",");
    format!("({coords})")
}

/// Space-separated vectors, `-` when empty.
fn vec_list_text(vs: &[Vector]) -> String {
    if vs.is_empty() {
        return "-".into();
    }
    vs.iter().map(vec_text).collect::<Vec<String>>().join(" ")
}

/// `x₂⁵x₃³` — a monomial in the given symbol, `1` when the exponent is 0.
fn monomial_text(symbol: &str, exponent: &Vector) -> String {
    let mut out = String::new();
    for (i, e) in exponent.coords().iter().enumerate() {
        if e.is_zero() {
            continue;
        }
        out.push_str(symbol);
        out.push_str(&script(&(i + 1).to_string(), &SUB));
        if !e.is_one() {
            out.push_str(&script(&e.to_string(), &SUP));
        }
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

/// `x₂⁵x₃³−x₁x₄⁴` — a difference of monomials.
fn binomial_text(b: &Binomial<Int>) -> String {
    format!(
        "{}−{}",
        monomial_text("x", b.plus()),
        monomial_text("x", b.minus())
    )
}

fn status_text(status: &EnumerationStatus<Int>) -> String {
    match status {
        EnumerationStatus::CertifiedComplete => "certified".into(),
        EnumerationStatus::TruncatedAtBound(b) => format!("truncated at {}", vec_text(b)),
    }
}

fn gaps_text(g: &GapSet<Int>) -> String {
    let mut out = format!("gaps: {} ({})", g.len(), status_text(g.status()));
    for x in g.elements() {
        let _ = write!(out, "\n{}", vec_text(x));
    }
    out
}

fn pf_text(pf: &PfSet<Int>) -> String {
    let mut out = format!("pf: {} ({})", pf.len(), status_text(pf.status()));
    for x in pf.elements() {
        let _ = write!(out, "\n{}", vec_text(x));
    }
    out
}

fn betti_text(t: &BettiTable<Int>) -> String {
    let totals = t
        .totals()
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<String>>()
        .join(" ");
    let mut out = format!("length: {}\ntotals: {}", t.resolution_length(), totals);
    for e in t.entries() {
        let _ = write!(
            out,
            "\nβ{}{} = {}",
            script(&e.homological_degree.to_string(), &SUB),
            vec_text(&e.degree),
            e.value
        );
    }
    out
}

/// `1 − t₁⁶ − t₁³t₂³ + …` — terms ascending by exponent.
fn kpoly_text(k: &mpd_semigroups::resolution::KPolynomial<Int>) -> String {
    let mut terms: Vec<(&Vector, i64)> = k.terms().collect();
    terms.sort_by(|a, b| a.0.cmp(b.0));
    let mut out = String::new();
    for (exponent, coefficient) in terms {
        let monomial = monomial_text("t", exponent);
        let magnitude = coefficient.unsigned_abs();
        let piece = if monomial == "1" {
            magnitude.to_string()
        } else if magnitude == 1 {
            monomial
        } else {
            format!("{magnitude}{monomial}")
        };
        if out.is_empty() {
            if coefficient < 0 {
                out.push('−');
            }
        } else {
            out.push_str(if coefficient < 0 { " − " } else { " + " });
        }
        out.push_str(&piece);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn generic_text(r: &GenericityReport<Int>) -> String {
    let mut out = format!("generic: {}", r.is_generic);
    if !r.missing_support.is_empty() {
        let _ = write!(
            out,
            "\nmissing support: {}",
            r.missing_support
                .iter()
                .map(binomial_text)
                .collect::<Vec<String>>()
                .join(" ")
        );
    }
    if !r.dispensable.is_empty() {
        let _ = write!(
            out,
            "\ndispensable: {}",
            r.dispensable
                .iter()
                .map(binomial_text)
                .collect::<Vec<String>>()
                .join(" ")
        );
    }
    out
}

/// `RF(5,13):` followed by aligned bracket rows.
fn rf_text(f: &Vector, m: &RFMatrix<Int>) -> String {
    let n = m.size();
    let mut widths = vec![0usize; n];
    for i in 0..n {
        for (j, w) in widths.iter_mut().enumerate() {
            *w = (*w).max(m.entry(i, j).to_string().len());
        }
    }
    let mut out = format!("RF{}:", vec_text(f));
    for i in 0..n {
        let cells = (0..n)
            .map(|j| format!("{:>width$}", m.entry(i, j), width = widths[j]))
            .collect::<Vec<String>>()
            .join("  ");
        let _ = write!(out, "\n[ {cells} ]");
    }
    out
}

fn indices_text(ix: &[usize]) -> String {
    let inner = ix
        .iter()
        .map(|i| i.to_string())
        .collect::<Vec<String>>()
        .join(",");
    format!("{{{inner}}}")
}

fn gluing_line(dec: &GluingDecomposition<Int>) -> String {
    format!(
        "left {} right {} d {}",
        indices_text(dec.left_indices()),
        indices_text(dec.right_indices()),
        vec_text(dec.d())
    )
}
