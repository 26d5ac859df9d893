//! Subcommands of the `hilb4n` binary.
//!
//! [`run`] returns the exit code together with captured output so the whole
//! surface can be driven in-process. Exit codes: 0 success, 1 a
//! mathematical check failed, 2 usage or input error.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use hilb4n_core::borel::{catalog, enumerate_borel_ideals, lex_ideal};
use hilb4n_core::degeneration::{family_limit_detailed, weight_family, LimitPoint, ParamFamily};
use hilb4n_core::gin::generic_initial_ideal;
use hilb4n_core::hilbert::{hilbert_polynomial, hilbert_values, quotient_hilbert_polynomial, regularity, HilbertPolynomial};
use hilb4n_core::ideal::{saturate, saturate_irrelevant};
use hilb4n_core::monomial::count_of_degree;
use hilb4n_core::strata::{classify, dimension_table, sample_stratum, Membership, Stratum};
use hilb4n_core::tangent::tangent_dimension;
use hilb4n_core::{Error, Ideal, MonomialOrder, Polynomial};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::parse::{format_hilbert_polynomial, format_polynomial, parse_hilbert_polynomial, parse_ideal, ParseOptions};
use crate::verify::{self, VerifyConfig, DEFAULT_SEED};

#[derive(Parser, Debug)]
#[command(name = "hilb4n", version, about = "Exact computations on the Hilbert scheme of degree-4 genus-1 space curves")]
pub struct Cli {
    /// Monomial order: degrevlex, lex, or weight:w1,w2,w3,w4.
    #[arg(long, global = true, default_value = "degrevlex")]
    pub order: String,
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Accept inhomogeneous generators.
    #[arg(long, global = true)]
    pub allow_inhomogeneous: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct IdealInput {
    /// File with one generator per line or `;`-separated; `-` reads stdin.
    #[arg(long, conflicts_with = "text")]
    pub ideal: Option<PathBuf>,
    /// Generators given inline, e.g. "x^2; x*y; y^3".
    #[arg(long, allow_hyphen_values = true)]
    pub text: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Hilbert function values for n = 0..upto.
    Hf {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long, default_value_t = 7)]
        upto: u32,
        /// Report dim (P/I)_n instead of dim I_n.
        #[arg(long)]
        quotient: bool,
    },
    /// Hilbert polynomial.
    Hp {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long)]
        quotient: bool,
    },
    /// Castelnuovo-Mumford regularity.
    Reg {
        #[command(flatten)]
        input: IdealInput,
    },
    /// Reduced Gröbner basis in the chosen order.
    Gb {
        #[command(flatten)]
        input: IdealInput,
    },
    /// Generic initial ideal.
    Gin {
        #[command(flatten)]
        input: IdealInput,
    },
    /// Saturation by the irrelevant ideal, or by a form.
    Sat {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long)]
        by: Option<String>,
    },
    /// Regularity stratum and component membership.
    Classify {
        #[command(flatten)]
        input: IdealInput,
    },
    /// Hilbert-scheme tangent space dimension.
    Tangent {
        #[command(flatten)]
        input: IdealInput,
    },
    /// Saturated Borel-fixed ideals with a given quotient Hilbert polynomial.
    BorelEnum {
        #[arg(long)]
        hp: String,
    },
    /// Lexicographic point for a Hilbert polynomial.
    LexPoint {
        #[arg(long)]
        hp: String,
    },
    /// Random members of a stratum (V, R3', R4, R5, R6).
    Sample {
        #[arg(long)]
        stratum: String,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Flat limit of a one-parameter family in `a`, or of a torus weight.
    Limit {
        /// Family file over x,y,z,t,a.
        #[arg(long, conflicts_with_all = ["ideal", "text"])]
        family: Option<PathBuf>,
        #[command(flatten)]
        input: IdealInput,
        /// Weights w1,w2,w3,w4 scaling x_i by a^{w_i}.
        #[arg(long)]
        weight: Option<String>,
        /// 0 or inf.
        #[arg(long, default_value = "0")]
        at: String,
    },
    /// Dimension counts of the strata and components.
    Dims {
        #[arg(long)]
        name: Option<String>,
    },
    /// Recompute every number of the two-component argument.
    VerifyPaper {
        /// Restrict to groups (borel, hilbert, strata, macaulay, gin, dims, tangent, degeneration, properties).
        #[arg(long)]
        only: Vec<String>,
        /// Also write the JSON report here.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Leave timings out of the JSON report.
        #[arg(long)]
        no_timings: bool,
    },
}

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::WrongHilbertPolynomial { .. }
            | Error::WrongStratum { .. }
            | Error::NotSaturated
            | Error::NotFlat(..)
            | Error::GinFailure(..)
            | Error::SamplingExhausted(..)
            | Error::ShapeViolation(..)
            | Error::Internal(..) => Failure::Math(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Res<T> = std::result::Result<T, Failure>;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let mut out = Outcome::default();
    match execute(&cli, &mut out) {
        Ok(code) => out.code = code,
        Err(Failure::Usage(m)) => {
            out.code = 2;
            out.stderr.push_str(&format!("error: {m}\n"));
        }
        Err(Failure::Math(m)) => {
            out.code = 1;
            out.stderr.push_str(&format!("check failed: {m}\n"));
        }
    }
    out
}

fn read_source(path: &PathBuf) -> Res<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(|e| Failure::Usage(e.to_string()))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
    }
}

fn load(input: &IdealInput, cli: &Cli) -> Res<Ideal> {
    let text = match (&input.ideal, &input.text) {
        (Some(p), _) => read_source(p)?,
        (None, Some(t)) => t.clone(),
        (None, None) => return Err(Failure::Usage("an ideal is required (--ideal FILE or --text GENERATORS)".into())),
    };
    let opts = ParseOptions { allow_parameter: false, allow_inhomogeneous: cli.allow_inhomogeneous };
    let doc = parse_ideal(&text, opts).map_err(|e| Failure::Usage(format!("parse error at {e}")))?;
    Ok(doc.ideal())
}

fn parse_hp(text: &str) -> Res<HilbertPolynomial> {
    parse_hilbert_polynomial(text).map_err(|e| Failure::Usage(format!("parse error at {e}")))
}

/// Generators by degree, then by leading monomial in descending lex order.
fn gens_text(gens: &[Polynomial]) -> Vec<String> {
    let mut g = gens.to_vec();
    let lead = |p: &Polynomial| p.leading_monomial(&MonomialOrder::Lex);
    g.sort_by(|a, b| a.total_degree().cmp(&b.total_degree()).then_with(|| match (lead(a), lead(b)) {
        (Some(x), Some(y)) => MonomialOrder::Lex.cmp(&y, &x),
        _ => std::cmp::Ordering::Equal,
    }));
    g.iter().map(format_polynomial).collect()
}

fn emit(out: &mut Outcome, cli: &Cli, value: Value, text: impl FnOnce() -> String) {
    if cli.json {
        out.stdout.push_str(&serde_json::to_string(&value).expect("json"));
        out.stdout.push('\n');
    } else {
        out.stdout.push_str(&text());
        if !out.stdout.ends_with('\n') {
            out.stdout.push('\n');
        }
    }
}

fn catalog_name(i: &Ideal) -> Option<&'static str> {
    catalog().into_iter().find(|e| e.ideal.equal(i)).map(|e| e.name)
}

fn execute(cli: &Cli, out: &mut Outcome) -> Res<i32> {
    let order = MonomialOrder::parse(&cli.order).map_err(|e| Failure::Usage(e.to_string()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    match &cli.command {
        Command::Hf { input, upto, quotient } => {
            let i = load(input, cli)?;
            let mut v = hilbert_values(&i, *upto)?;
            if *quotient {
                v = v.iter().enumerate().map(|(n, h)| count_of_degree(i.nvars(), n as u32) - h).collect();
            }
            let conv = if *quotient { "quotient" } else { "ideal" };
            emit(out, cli, json!({ "convention": conv, "values": v }), || v.iter().map(u64::to_string).collect::<Vec<_>>().join(" "));
        }
        Command::Hp { input, quotient } => {
            let i = load(input, cli)?;
            let p = if *quotient { quotient_hilbert_polynomial(&i)? } else { hilbert_polynomial(&i)? };
            let s = format_hilbert_polynomial(&p);
            let conv = if *quotient { "quotient" } else { "ideal" };
            emit(out, cli, json!({ "convention": conv, "polynomial": s }), || s.clone());
        }
        Command::Reg { input } => {
            let r = regularity(&load(input, cli)?)?;
            emit(out, cli, json!({ "regularity": r }), || r.to_string());
        }
        Command::Gb { input } => {
            let gb = load(input, cli)?.groebner_basis(&order);
            let g = gens_text(&gb);
            emit(out, cli, json!({ "order": order.name(), "basis": g }), || g.join("\n"));
        }
        Command::Gin { input } => {
            let i = load(input, cli)?;
            let r = generic_initial_ideal(&i, &mut rng)?;
            let g = gens_text(r.gin.gens());
            let name = catalog_name(&r.gin);
            emit(
                out,
                cli,
                json!({ "gin": g, "name": name, "trials": r.trials, "coefficient_bound": r.coefficient_bound }),
                || g.join("\n"),
            );
        }
        Command::Sat { input, by } => {
            let i = load(input, cli)?;
            let s = match by {
                None => saturate_irrelevant(&i)?,
                Some(f) => {
                    let opts = ParseOptions { allow_parameter: false, allow_inhomogeneous: true };
                    let doc = parse_ideal(f, opts).map_err(|e| Failure::Usage(format!("parse error at {e}")))?;
                    let [f] = doc.generators.as_slice() else {
                        return Err(Failure::Usage("--by takes exactly one polynomial".into()));
                    };
                    saturate(&i, f)?
                }
            };
            let g = gens_text(&s.minimal_generators());
            emit(out, cli, json!({ "saturation": g }), || g.join("\n"));
        }
        Command::Classify { input } => {
            let r = classify(&load(input, cli)?)?;
            let certain: Vec<String> = r.components.iter().filter(|c| c.1 == Membership::Certain).map(|c| c.0.to_string()).collect();
            let possible: Vec<String> = r.components.iter().filter(|c| c.1 == Membership::Unknown).map(|c| c.0.to_string()).collect();
            emit(out, cli, json!({ "regularity": r.regularity, "stratum": r.stratum.to_string(), "components": certain }), || {
                format!("stratum {} (regularity {})\ncomponents: {}\nnot decided: {}", r.stratum, r.regularity, certain.join(", "), possible.join(", "))
            });
        }
        Command::Tangent { input } => {
            let r = tangent_dimension(&load(input, cli)?)?;
            if !r.hilbert_scheme_point {
                out.stderr.push_str("warning: not a saturated ideal with Hilbert polynomial 4n; value is not a Hilbert-scheme tangent space\n");
            }
            emit(
                out,
                cli,
                json!({
                    "dimension": r.dimension,
                    "generator_degrees": r.generator_degrees,
                    "constraint_count": r.constraint_count,
                    "truncation_degree": r.truncation_degree,
                    "hilbert_scheme_point": r.hilbert_scheme_point,
                }),
                || r.dimension.to_string(),
            );
        }
        Command::BorelEnum { hp } => {
            let p = parse_hp(hp)?;
            let list = enumerate_borel_ideals(&p)?;
            let rows: Vec<(String, Vec<String>)> = list
                .iter()
                .enumerate()
                .map(|(k, i)| {
                    let name = if p == HilbertPolynomial::from_ints(&[0, 4]) { catalog_name(i).map(String::from) } else { None };
                    (name.unwrap_or_else(|| format!("#{}", k + 1)), gens_text(i.gens()))
                })
                .collect();
            let value = json!({
                "hilbert_polynomial": format_hilbert_polynomial(&p),
                "ideals": rows.iter().map(|(n, g)| json!({ "name": n, "generators": g })).collect::<Vec<_>>(),
            });
            emit(out, cli, value, || rows.iter().map(|(n, g)| format!("{n}: {}", g.join(", "))).collect::<Vec<_>>().join("\n"));
        }
        Command::LexPoint { hp } => {
            let p = parse_hp(hp)?;
            let i = lex_ideal(&p)?;
            let g = gens_text(i.gens());
            emit(out, cli, json!({ "hilbert_polynomial": format_hilbert_polynomial(&p), "generators": g }), || g.join("\n"));
        }
        Command::Sample { stratum, count } => {
            let label: Stratum = stratum.parse().map_err(|_| Failure::Usage(format!("unknown stratum '{stratum}'")))?;
            let mut samples = Vec::new();
            for _ in 0..*count {
                samples.push(gens_text(sample_stratum(label, &mut rng)?.gens()));
            }
            emit(out, cli, json!({ "stratum": label.to_string(), "samples": samples }), || {
                samples.iter().map(|s| s.join("; ")).collect::<Vec<_>>().join("\n")
            });
        }
        Command::Limit { family, input, weight, at } => {
            let at = match at.as_str() {
                "0" => LimitPoint::Zero,
                "inf" | "infinity" => LimitPoint::Infinity,
                other => return Err(Failure::Usage(format!("--at takes 0 or inf, not '{other}'"))),
            };
            let fam = match (family, weight) {
                (Some(path), None) => {
                    let opts = ParseOptions { allow_parameter: true, allow_inhomogeneous: cli.allow_inhomogeneous };
                    let doc = parse_ideal(&read_source(path)?, opts).map_err(|e| Failure::Usage(format!("parse error at {e}")))?;
                    ParamFamily::new(doc.generators, "family file")?
                }
                (None, Some(w)) => {
                    let w: Vec<i64> = w
                        .split(',')
                        .map(|s| s.trim().parse::<i64>())
                        .collect::<std::result::Result<_, _>>()
                        .map_err(|e| Failure::Usage(format!("bad weight: {e}")))?;
                    weight_family(&load(input, cli)?, &w)?
                }
                _ => return Err(Failure::Usage("give either --family FILE or --weight W with an ideal".into())),
            };
            let d = family_limit_detailed(&fam, at)?;
            let g = gens_text(&d.limit.minimal_generators());
            let hp = format_hilbert_polynomial(&d.hilbert_polynomial);
            emit(out, cli, json!({ "limit": g, "quotient_hilbert_polynomial": hp }), || g.join("\n"));
        }
        Command::Dims { name } => {
            let table: Vec<_> = dimension_table().into_iter().filter(|e| name.as_deref().is_none_or(|n| n == e.name)).collect();
            if table.is_empty() {
                return Err(Failure::Usage(format!("unknown entry '{}'", name.as_deref().unwrap_or(""))));
            }
            let value = json!({
                "entries": table.iter().map(|e| json!({ "name": e.name, "value": e.value, "derivation": e.derivation() })).collect::<Vec<_>>()
            });
            emit(out, cli, value, || table.iter().map(|e| format!("{} = {}   ({})", e.name, e.value, e.derivation())).collect::<Vec<_>>().join("\n"));
        }
        Command::VerifyPaper { only, output, no_timings } => {
            if let Some(bad) = only.iter().find(|g| !verify::is_group(g)) {
                return Err(Failure::Usage(format!("unknown group '{bad}'; groups are {}", verify::GROUPS.join(", "))));
            }
            let report = verify::verify_paper(&VerifyConfig { seed: cli.seed, only: only.clone() });
            let value = report.to_json(!no_timings);
            if let Some(path) = output {
                let text = serde_json::to_string_pretty(&value).expect("json");
                std::fs::write(path, text + "\n").map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            }
            emit(out, cli, value, || {
                let mut s: String = report
                    .items
                    .iter()
                    .map(|i| {
                        let tag = if i.status == verify::Status::Pass { "PASS" } else { "FAIL" };
                        format!("{tag} {}  expected {}  computed {}\n", i.id, i.expected, i.computed)
                    })
                    .collect();
                s.push_str(&format!("{} passed, {} failed\n", report.passed(), report.failed()));
                s
            });
            return Ok(if report.all_pass() { 0 } else { 1 });
        }
    }
    Ok(0)
}
