//! Command-line surface: diamond products, path family listings and
//! figures, poset invariants, and verification sweeps.
//!
//! Exit codes: 0 on success, 1 when a verification sweep finds a mismatch,
//! 2 on usage errors (clap uses 2 for flag errors already).

use anyhow::{anyhow, bail, Context, Result};
use cdlab::diamond::diamond_cached;
use cdlab::latpaths::{
    enumerate_gamma, enumerate_lambda, enumerate_omega, render_paths, sum_weights_ab,
    sum_weights_cd, weight_ab, weight_cd, weight_lambda, AxisLabeling, LatticePath, RenderFormat,
};
use cdlab::ncalg::{parse_polynomial, parse_word, Alphabet, NcPolynomial, Word};
use cdlab::poset::{
    ab_index, cartesian_product, cd_index, diamond_product_poset, flag_f_vector, flag_h_vector,
    generate, prism_poset, pyramid_poset, FlagVector, GradedPoset, PosetError,
    DEFAULT_MAX_ELEMENTS,
};
use cdlab::verify::Suite;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::path::Path;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "cdlab", version, about = "Diamond products, lattice paths, and flag vectors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the diamond product of two polynomials.
    Diamond(DiamondArgs),
    /// Enumerate or render a lattice path family.
    Paths {
        #[command(subcommand)]
        command: PathsCommand,
    },
    /// Poset invariants and products.
    Poset {
        #[command(subcommand)]
        command: PosetCommand,
    },
    /// Run an exhaustive verification sweep.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Ab,
    Cd,
}

impl Mode {
    fn alphabet(self) -> Alphabet {
        match self {
            Mode::Ab => Alphabet::Ab,
            Mode::Cd => Alphabet::Cd,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Recursion,
    Paths,
}

#[derive(Args)]
struct DiamondArgs {
    /// Alphabet of both inputs.
    #[arg(long, value_enum)]
    mode: Mode,
    /// How to compute the product; both methods agree on every input.
    #[arg(long, value_enum, default_value = "recursion")]
    method: Method,
    /// First polynomial, e.g. "cd" or "2*cc + d".
    lhs: String,
    /// Second polynomial.
    rhs: String,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Omega,
    Lambda,
    Gamma,
}

#[derive(Args)]
struct FamilySelection {
    /// Path family: omega (ab labels), lambda (by corner), gamma (cd labels).
    #[arg(long, value_enum)]
    family: Family,
    /// Horizontal axis word (omega and gamma).
    u: Option<String>,
    /// Vertical axis word (omega and gamma).
    v: Option<String>,
    /// Corner x-coordinate (omega and lambda without words).
    #[arg(long)]
    p: Option<usize>,
    /// Corner y-coordinate (omega and lambda without words).
    #[arg(long)]
    q: Option<usize>,
}

#[derive(Subcommand)]
enum PathsCommand {
    /// List the paths of a family with their weights and total.
    Enumerate {
        #[command(flatten)]
        selection: FamilySelection,
        #[arg(long)]
        json: bool,
    },
    /// Draw every path of a family into a figure.
    Render {
        #[command(flatten)]
        selection: FamilySelection,
        /// Output file.
        #[arg(long)]
        out: String,
        /// Figure format.
        #[arg(long, default_value = "svg")]
        format: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PosetOp {
    Diamond,
    Cartesian,
    Prism,
    Pyramid,
}

#[derive(Args)]
struct PosetInput {
    /// Optional product/operator applied before the query.
    #[arg(long, value_enum)]
    op: Option<PosetOp>,
    /// Generator spec (e.g. boolean:3, polygon:5) or a JSON file path.
    spec: String,
    /// Second operand for diamond/cartesian.
    spec2: Option<String>,
}

#[derive(Subcommand)]
enum PosetCommand {
    /// Print the cd-index (or report that none exists).
    Cdindex {
        #[command(flatten)]
        input: PosetInput,
        #[arg(long)]
        json: bool,
    },
    /// Print the flag f-vector (or the flag h-vector with --h).
    Flagvector {
        #[command(flatten)]
        input: PosetInput,
        /// Apply the inclusion-exclusion transform and print h instead of f.
        #[arg(long)]
        h: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check the Eulerian condition on every interval.
    Eulerian {
        #[command(flatten)]
        input: PosetInput,
        #[arg(long)]
        json: bool,
    },
    /// Print the constructed poset itself as JSON.
    Product {
        #[command(flatten)]
        input: PosetInput,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name: thm42, thm52, slone, prop32, lee, coalgebra, diamond-props.
    suite: String,
    /// Degree bound for the first word where applicable.
    #[arg(long)]
    max_u: Option<usize>,
    /// Degree bound for the second word where applicable.
    #[arg(long)]
    max_v: Option<usize>,
    /// Grid bound for the c-power suite.
    #[arg(long)]
    max: Option<usize>,
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    // Die quietly when a pipe closes early (e.g. `cdlab ... | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Diamond(args) => cmd_diamond(args),
        Command::Paths { command } => cmd_paths(command),
        Command::Poset { command } => cmd_poset(command),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn cmd_diamond(args: DiamondArgs) -> Result<ExitCode> {
    let alphabet = args.mode.alphabet();
    let lhs = parse_polynomial(&args.lhs, alphabet).context("first polynomial")?;
    let rhs = parse_polynomial(&args.rhs, alphabet).context("second polynomial")?;
    let product = match args.method {
        Method::Recursion => diamond_cached(&lhs, &rhs)?,
        Method::Paths => {
            let mut total = NcPolynomial::zero(alphabet);
            for (wu, cu) in lhs.terms() {
                for (wv, cv) in rhs.terms() {
                    let part = match alphabet {
                        Alphabet::Ab => sum_weights_ab(wu, wv)?,
                        Alphabet::Cd => sum_weights_cd(wu, wv)?,
                    };
                    total += &part.scale(&(cu * cv));
                }
            }
            total
        }
    };
    if args.json {
        println!("{}", serde_json::to_string(&product)?);
    } else {
        println!("{product}");
    }
    Ok(ExitCode::SUCCESS)
}

/// A resolved family: its paths, per-path weights when the family defines
/// them, and labels when the figure code can draw them.
struct FamilyListing {
    family: &'static str,
    u: Option<Word>,
    v: Option<Word>,
    paths: Vec<LatticePath>,
    weights: Option<Vec<NcPolynomial>>,
    labels: Option<AxisLabeling>,
}

fn resolve_family(selection: &FamilySelection) -> Result<FamilyListing> {
    let has_words = selection.u.is_some() || selection.v.is_some();
    let has_corner = selection.p.is_some() || selection.q.is_some();
    if has_words && has_corner {
        bail!("give either axis words or --p/--q, not both");
    }
    match selection.family {
        Family::Gamma => {
            let (u_text, v_text) = match (&selection.u, &selection.v) {
                (Some(u), Some(v)) => (u, v),
                _ => bail!("the gamma family needs two cd axis words"),
            };
            let u = parse_word(u_text, Alphabet::Cd).context("horizontal word")?;
            let v = parse_word(v_text, Alphabet::Cd).context("vertical word")?;
            let labels = AxisLabeling::for_alphabet(u.clone(), v.clone(), Alphabet::Cd)?;
            let paths = enumerate_gamma(&labels);
            let weights = paths
                .iter()
                .map(|p| weight_cd(p, &labels))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(FamilyListing {
                family: "gamma",
                u: Some(u),
                v: Some(v),
                paths,
                weights: Some(weights),
                labels: Some(labels),
            })
        }
        Family::Omega => {
            if has_words {
                let (u_text, v_text) = match (&selection.u, &selection.v) {
                    (Some(u), Some(v)) => (u, v),
                    _ => bail!("the omega family needs two ab axis words (or --p/--q)"),
                };
                let u = parse_word(u_text, Alphabet::Ab).context("horizontal word")?;
                let v = parse_word(v_text, Alphabet::Ab).context("vertical word")?;
                let labels = AxisLabeling::for_alphabet(u.clone(), v.clone(), Alphabet::Ab)?;
                let paths = enumerate_omega(u.degree(), v.degree());
                let weights = paths
                    .iter()
                    .map(|p| weight_ab(p, &labels))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(FamilyListing {
                    family: "omega",
                    u: Some(u),
                    v: Some(v),
                    paths,
                    weights: Some(weights),
                    labels: Some(labels),
                })
            } else {
                let (p, q) = corner(selection)?;
                Ok(FamilyListing {
                    family: "omega",
                    u: None,
                    v: None,
                    paths: enumerate_omega(p, q),
                    weights: None,
                    labels: None,
                })
            }
        }
        Family::Lambda => {
            if has_words {
                bail!("the lambda family is indexed by --p and --q");
            }
            let (p, q) = corner(selection)?;
            let paths = enumerate_lambda(p, q);
            let weights = paths
                .iter()
                .map(weight_lambda)
                .collect::<Result<Vec<_>, _>>()?;
            // c-power labels let the same figure code draw this family.
            let labels = AxisLabeling::new(
                Word::power(cdlab::Letter::C, p),
                Word::power(cdlab::Letter::C, q),
            );
            Ok(FamilyListing {
                family: "lambda",
                u: None,
                v: None,
                paths,
                weights: Some(weights),
                labels: Some(labels),
            })
        }
    }
}

fn corner(selection: &FamilySelection) -> Result<(usize, usize)> {
    match (selection.p, selection.q) {
        (Some(p), Some(q)) => Ok((p, q)),
        _ => bail!("need both --p and --q"),
    }
}

fn cmd_paths(command: PathsCommand) -> Result<ExitCode> {
    match command {
        PathsCommand::Enumerate { selection, json } => {
            let listing = resolve_family(&selection)?;
            let total = listing.weights.as_ref().map(|weights| {
                let alphabet = weights
                    .first()
                    .map(|w| w.alphabet())
                    .unwrap_or(Alphabet::Cd);
                let mut total = NcPolynomial::zero(alphabet);
                for w in weights {
                    total += w;
                }
                total
            });
            if json {
                let paths: Vec<serde_json::Value> = listing
                    .paths
                    .iter()
                    .enumerate()
                    .map(|(i, p)| match &listing.weights {
                        Some(ws) => json!({
                            "steps": p.steps().iter().map(|s| s.token()).collect::<Vec<_>>(),
                            "weight": ws[i],
                        }),
                        None => serde_json::to_value(p).expect("path serializes"),
                    })
                    .collect();
                let mut doc = json!({
                    "family": listing.family,
                    "count": listing.paths.len(),
                    "paths": paths,
                });
                if let Some(u) = &listing.u {
                    doc["u"] = json!(u.to_string());
                }
                if let Some(v) = &listing.v {
                    doc["v"] = json!(v.to_string());
                }
                if let Some(t) = &total {
                    doc["total"] = serde_json::to_value(t)?;
                }
                println!("{doc}");
            } else {
                println!("family: {}", listing.family);
                if let (Some(u), Some(v)) = (&listing.u, &listing.v) {
                    println!("u: {u}");
                    println!("v: {v}");
                }
                println!("paths: {}", listing.paths.len());
                for (i, path) in listing.paths.iter().enumerate() {
                    match &listing.weights {
                        Some(ws) => println!("{path}  ->  {}", ws[i]),
                        None => println!("{path}"),
                    }
                }
                if let Some(t) = &total {
                    println!("total: {t}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        PathsCommand::Render {
            selection,
            out,
            format,
        } => {
            let format = RenderFormat::from_name(&format)?;
            let listing = resolve_family(&selection)?;
            let labels = listing
                .labels
                .ok_or_else(|| anyhow!("rendering needs axis words"))?;
            let doc = render_paths(&labels, &listing.paths, format)?;
            std::fs::write(&out, doc).with_context(|| format!("writing {out}"))?;
            eprintln!("wrote {} paths to {out}", listing.paths.len());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn max_elements() -> usize {
    std::env::var("CDLAB_MAX_ELEMENTS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_ELEMENTS)
}

fn load_poset(spec: &str) -> Result<GradedPoset> {
    match generate(spec, max_elements()) {
        Ok(p) => Ok(p),
        Err(PosetError::UnknownSpec(_)) if Path::new(spec).exists() => {
            let text = std::fs::read_to_string(spec).with_context(|| format!("reading {spec}"))?;
            serde_json::from_str(&text).with_context(|| format!("loading poset from {spec}"))
        }
        Err(e) => Err(e).with_context(|| format!("building poset {spec:?}")),
    }
}

fn build_poset(input: &PosetInput) -> Result<(String, GradedPoset)> {
    let first = load_poset(&input.spec)?;
    let describe = |op: &str| match &input.spec2 {
        Some(s2) => format!("{op}({}, {s2})", input.spec),
        None => format!("{op}({})", input.spec),
    };
    match input.op {
        None => {
            if input.spec2.is_some() {
                bail!("a second poset needs --op=diamond or --op=cartesian");
            }
            Ok((input.spec.clone(), first))
        }
        Some(PosetOp::Prism) => {
            if input.spec2.is_some() {
                bail!("prism takes one poset");
            }
            Ok((describe("prism"), prism_poset(&first)))
        }
        Some(PosetOp::Pyramid) => {
            if input.spec2.is_some() {
                bail!("pyramid takes one poset");
            }
            Ok((describe("pyramid"), pyramid_poset(&first)))
        }
        Some(PosetOp::Diamond) => {
            let second = load_poset(
                input
                    .spec2
                    .as_ref()
                    .ok_or_else(|| anyhow!("diamond needs two posets"))?,
            )?;
            Ok((describe("diamond"), diamond_product_poset(&first, &second)))
        }
        Some(PosetOp::Cartesian) => {
            let second = load_poset(
                input
                    .spec2
                    .as_ref()
                    .ok_or_else(|| anyhow!("cartesian needs two posets"))?,
            )?;
            Ok((describe("cartesian"), cartesian_product(&first, &second)))
        }
    }
}

fn flag_vector_json(fv: &FlagVector) -> Result<serde_json::Value> {
    let mut counts = Vec::with_capacity(fv.counts().len());
    for mask in 0..fv.counts().len() {
        let number: serde_json::Number = serde_json::from_str(&fv.count(mask).to_string())?;
        counts.push(json!({
            "set": FlagVector::ranks_of(mask),
            "count": number,
        }));
    }
    Ok(json!({"n": fv.n(), "counts": counts}))
}

fn cmd_poset(command: PosetCommand) -> Result<ExitCode> {
    match command {
        PosetCommand::Cdindex { input, json } => {
            let (name, poset) = build_poset(&input)?;
            let index = cd_index(&poset);
            if json {
                let doc = match &index {
                    Ok(p) => json!({"poset": name, "cdindex": p}),
                    Err(_) => json!({"poset": name, "cdindex": serde_json::Value::Null,
                                     "abindex": ab_index(&poset)}),
                };
                println!("{doc}");
            } else {
                match &index {
                    Ok(p) => println!("{p}"),
                    Err(_) => println!("NotExpressible"),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        PosetCommand::Flagvector { input, h, json } => {
            let (name, poset) = build_poset(&input)?;
            let f = flag_f_vector(&poset);
            let (label, fv) = if h { ("h", flag_h_vector(&f)) } else { ("f", f) };
            if json {
                let mut doc = flag_vector_json(&fv)?;
                doc["poset"] = json!(name);
                doc["kind"] = json!(label);
                println!("{doc}");
            } else {
                println!("n: {}", fv.n());
                for mask in 0..fv.counts().len() {
                    println!("{label}{} = {}", FlagVector::set_name(mask), fv.count(mask));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        PosetCommand::Eulerian { input, json } => {
            let (name, poset) = build_poset(&input)?;
            let eulerian = poset.is_eulerian();
            if json {
                println!("{}", json!({"poset": name, "eulerian": eulerian}));
            } else {
                println!("{eulerian}");
            }
            Ok(ExitCode::SUCCESS)
        }
        PosetCommand::Product { input } => {
            if input.op.is_none() {
                bail!("product needs --op");
            }
            let (_, poset) = build_poset(&input)?;
            println!("{}", serde_json::to_string(&poset)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let suite = Suite::from_name(&args.suite).ok_or_else(|| {
        anyhow!(
            "unknown suite {:?}; expected one of {}",
            args.suite,
            Suite::ALL.map(|s| s.name()).join(", ")
        )
    })?;
    let report = suite.run(args.max_u, args.max_v, args.max);
    if args.json {
        println!("{}", serde_json::to_string(&report)?);
    } else {
        println!("suite: {}", report.suite);
        println!("checked: {}", report.checked);
        println!("mismatches: {}", report.mismatches.len());
        println!("elapsed: {:.2?}", report.elapsed);
        if report.ok() {
            println!("all {} checks OK", report.checked);
        } else {
            for m in report.mismatches.iter().take(20) {
                println!("MISMATCH: {m}");
            }
            if report.mismatches.len() > 20 {
                println!("... and {} more", report.mismatches.len() - 20);
            }
        }
    }
    Ok(if report.ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
