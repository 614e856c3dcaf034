//! `sieve`: enumerate, act on, and verify the cyclic sieving sets.
//!
//! Exit codes: 0 success, 1 bad input, 2 guard exceeded, 3 verification failure.

use std::collections::BTreeSet;
use std::io::{self, Write as _};
use std::process::ExitCode;

use clap::builder::PossibleValuesParser;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sieve_core::bn::{
    descent_data, enumerate_reduced_words_with_limit, is_reduced_word_for_w0, rotate,
};
use sieve_core::csp::{cross_check, verify_csp_on, ActionSet};
use sieve_core::haiman::psi;
use sieve_core::promotion::Promote;
use sieve_core::qpoly::{kappa, maj_gf_words, q_hook_rectangle, root_evaluations};
use sieve_core::suite::{run_property_suite, SuiteConfig};
use sieve_core::tableau::enumerate_syt_with_limit;
use sieve_core::{
    AnyTableau, CyclicActionSpec, Error, IntPolynomial, Partition, SetId, ShiftedStandardTableau,
    StandardTableau, Word,
};

/// Ceiling for sampled suites, reachable only with `--allow-large`.
const SAMPLED_MAX_N: usize = 5;
/// Ceiling for polynomial-only commands, which never enumerate.
const POLY_MAX_N: usize = 16;
/// Upper bound on orbit listings for arbitrary user tableaux.
const ORBIT_STEP_LIMIT: usize = 1_000_000;

#[derive(Parser, Debug)]
#[command(
    name = "sieve",
    version,
    about = "Cyclic sieving on B_n reduced words, square and staircase tableaux"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct Global {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Largest rank for exhaustive commands.
    #[arg(long, env = "SIEVE_MAX_N", default_value_t = 4, global = true)]
    max_n: usize,
    /// Let sampled suites run above the exhaustive guard.
    #[arg(long, global = true)]
    allow_large: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn set_parser() -> impl clap::builder::TypedValueParser<Value = SetId> {
    use clap::builder::TypedValueParser;
    PossibleValuesParser::new(SetId::ALL.map(SetId::name))
        .map(|s| s.parse::<SetId>().expect("listed names parse"))
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every element of a set, one per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = set_parser())]
        set: SetId,
    },
    /// Show the orbit of a word under rotation or a tableau under promotion.
    Orbit {
        #[arg(long, conflicts_with = "tableau", required_unless_present = "tableau")]
        word: Option<String>,
        /// Compact `1248/367/5`, a rows array, or a tagged JSON object.
        #[arg(long)]
        tableau: Option<String>,
        /// Read `--tableau` as a shifted tableau.
        #[arg(long, requires = "tableau")]
        shifted: bool,
    },
    /// Compare fixed-point counts with the sieving polynomial at roots of unity.
    Csp {
        #[arg(long)]
        n: usize,
        /// All three sets when omitted.
        #[arg(long, value_parser = set_parser())]
        set: Option<SetId>,
        /// Also print the orbit census.
        #[arg(long)]
        orbits: bool,
    },
    /// Print X(q), f_n(q), the shift κ, and X at every power of a primitive root.
    Poly {
        #[arg(long)]
        n: usize,
    },
    /// Check that Ψ lands on the reduced words and that Φ, H, Ψ intertwine the actions.
    BijectionCheck {
        #[arg(long)]
        n: usize,
    },
    /// Seeded identity checks over enumerated or sampled elements.
    PropertySuite {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
    /// Replay the worked examples and diff against known answers.
    Golden,
}

enum Failure {
    Input(String),
    Guard(String),
    Verification(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::GuardExceeded { .. } => Failure::Guard(e.to_string()),
            e => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = cli.global;
    let result = match cli.command {
        Command::Enumerate { n, set } => enumerate(g, n, set),
        Command::Orbit {
            word,
            tableau,
            shifted,
        } => orbit(g, word, tableau, shifted),
        Command::Csp { n, set, orbits } => csp(g, n, set, orbits),
        Command::Poly { n } => poly(g, n),
        Command::BijectionCheck { n } => bijection_check(g, n),
        Command::PropertySuite { n, seed, samples } => property_suite(g, n, seed, samples),
        Command::Golden => golden(g),
    };
    let (code, message) = match result {
        Ok(()) => return ExitCode::SUCCESS,
        Err(Failure::Input(m)) => (1, json!({ "error": m, "kind": "input" })),
        Err(Failure::Guard(m)) => (2, json!({ "error": m, "kind": "guard" })),
        Err(Failure::Verification(v)) => (3, v),
    };
    if code == 3 || g.format == Format::Json {
        eprintln!("{message}");
    } else {
        eprintln!("error: {}", message["error"].as_str().unwrap_or_default());
    }
    ExitCode::from(code)
}

fn check_rank(n: usize, limit: usize) -> Outcome {
    if n == 0 {
        return Err(Failure::Input("n must be at least 1".into()));
    }
    if n > limit {
        return Err(Failure::Guard(format!(
            "rank {n} exceeds the limit {limit}"
        )));
    }
    Ok(())
}

fn emit(out: &str) -> Outcome {
    let mut stdout = io::stdout().lock();
    // a closed pipe (`| head`) is not an error worth reporting
    let _ = writeln!(stdout, "{out}");
    Ok(())
}

fn emit_json(v: &Value) -> Outcome {
    emit(&serde_json::to_string_pretty(v).expect("values serialize"))
}

fn enumerate(g: Global, n: usize, set: SetId) -> Outcome {
    check_rank(n, g.max_n)?;
    let spec = CyclicActionSpec::new(set, n);
    let elements = ActionSet::enumerate_with_limit(spec, g.max_n)?;
    let (lines, values): (Vec<String>, Vec<Value>) = match &elements {
        ActionSet::Words(v) => v
            .iter()
            .map(|w| (w.to_string(), json!(w.to_string())))
            .unzip(),
        ActionSet::Squares(v) => v.iter().map(|t| (t.to_string(), to_value(t))).unzip(),
        ActionSet::Staircases(v) => v.iter().map(|t| (t.to_string(), to_value(t))).unzip(),
    };
    match g.format {
        Format::Text => emit(&lines.join("\n")),
        Format::Json => emit(&Value::Array(values).to_string()),
    }
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("tableaux serialize")
}

fn cycle<T: Clone + PartialEq>(start: &T, act: impl Fn(&T) -> T) -> Result<Vec<T>, Failure> {
    let mut out = vec![start.clone()];
    let mut cur = act(start);
    while cur != *start {
        if out.len() >= ORBIT_STEP_LIMIT {
            return Err(Failure::Guard(format!(
                "orbit longer than {ORBIT_STEP_LIMIT}"
            )));
        }
        out.push(cur.clone());
        cur = act(&cur);
    }
    Ok(out)
}

fn orbit(g: Global, word: Option<String>, tableau: Option<String>, shifted: bool) -> Outcome {
    let (kind, action, listing, values, order, reduced) = if let Some(text) = word {
        let w: Word = text.parse()?;
        let len = w.len();
        let orbit = cycle(&w, |x| rotate(x).expect("nonempty word"))?;
        let n = (len as f64).sqrt().round() as usize;
        let reduced = (n * n == len).then(|| is_reduced_word_for_w0(&w, n));
        let strings = orbit.iter().map(ToString::to_string).collect::<Vec<_>>();
        let values: Vec<Value> = strings.iter().map(|s| json!(s)).collect();
        ("word", "rotate", strings, values, len, reduced)
    } else {
        let text = tableau.expect("clap requires one of --word, --tableau");
        let any = if text.trim_start().starts_with('{') {
            AnyTableau::from_json(&text)?
        } else if shifted {
            AnyTableau::Shifted(text.parse::<ShiftedStandardTableau>()?)
        } else {
            AnyTableau::Straight(text.parse::<StandardTableau>()?)
        };
        match any {
            AnyTableau::Straight(t) => {
                let orbit = cycle(&t, StandardTableau::promote)?;
                let size = t.size();
                (
                    "straight",
                    "promote",
                    orbit.iter().map(ToString::to_string).collect(),
                    orbit.iter().map(to_value).collect(),
                    size,
                    None,
                )
            }
            AnyTableau::Shifted(t) => {
                let orbit = cycle(&t, ShiftedStandardTableau::promote)?;
                let size = t.size();
                (
                    "shifted",
                    "promote",
                    orbit.iter().map(ToString::to_string).collect(),
                    orbit.iter().map(to_value).collect(),
                    size,
                    None,
                )
            }
        }
    };
    let size = listing.len();
    match g.format {
        Format::Json => emit_json(&json!({
            "kind": kind,
            "action": action,
            "orbit": values,
            "orbit_size": size,
            "length": order,
            "reduced_for_w0": reduced,
        })),
        Format::Text => {
            let mut out = listing.join("\n");
            out.push_str(&format!("\norbit size {size} under {action}"));
            if kind == "word" {
                if size == order {
                    out.push_str(&format!("; free orbit, cyclic order {order}"));
                } else {
                    out.push_str(&format!("; cyclic order {size}, fixed by {action}^{size} in a cycle of length {order}"));
                }
                if let Some(r) = reduced {
                    let verb = if r { "is" } else { "is not" };
                    out.push_str(&format!(
                        "\n{verb} a reduced word for w0 of B_{}",
                        (order as f64).sqrt().round()
                    ));
                }
            }
            emit(&out)
        }
    }
}

fn csp(g: Global, n: usize, set: Option<SetId>, with_orbits: bool) -> Outcome {
    check_rank(n, g.max_n)?;
    let sets = set.map_or_else(|| SetId::ALL.to_vec(), |s| vec![s]);
    let mut reports = Vec::new();
    let mut all_passed = true;
    for set in sets {
        let spec = CyclicActionSpec::new(set, n);
        let elements = ActionSet::enumerate_with_limit(spec, g.max_n)?;
        let report = verify_csp_on(spec, &elements)?;
        all_passed &= report.passed();
        let mut v = report.to_json();
        if with_orbits {
            v["orbits"] = serde_json::to_value(elements.census()?).expect("census serializes");
        }
        reports.push((report, v));
    }
    let values = reports.iter().map(|(_, v)| v.clone()).collect::<Vec<_>>();
    let document = if values.len() == 1 {
        values[0].clone()
    } else {
        Value::Array(values)
    };
    match g.format {
        Format::Json => emit_json(&document)?,
        Format::Text => {
            let mut out = Vec::new();
            for (r, v) in &reports {
                let evals = r
                    .evaluations
                    .iter()
                    .map(|e| e.as_ref().map_or("?".to_string(), ToString::to_string))
                    .collect::<Vec<_>>();
                out.push(format!(
                    "{} n={} under {}",
                    r.spec.set,
                    n,
                    r.spec.set.action_name()
                ));
                out.push(format!("  X(q)         = {}", r.polynomial));
                out.push(format!("  fixed points = ({})", join(&r.table.counts)));
                out.push(format!("  X(ζ^d)       = ({})", evals.join(",")));
                if let Some(c) = v.get("orbits") {
                    out.push(format!("  orbits       = {c}"));
                }
                out.push(format!(
                    "  verdict      = {}",
                    if r.passed() { "pass" } else { "fail" }
                ));
            }
            emit(&out.join("\n"))?;
        }
    }
    if all_passed {
        Ok(())
    } else {
        Err(Failure::Verification(
            json!({ "error": "cyclic sieving mismatch", "reports": document }),
        ))
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn poly(g: Global, n: usize) -> Outcome {
    check_rank(n, POLY_MAX_N)?;
    let x = q_hook_rectangle(n, n)?;
    let k = kappa(&Partition::square(n));
    // within the guard f_n comes from the words themselves
    let (f, source) = if n <= g.max_n {
        match enumerate_reduced_words_with_limit(n, g.max_n) {
            Ok(words) => (maj_gf_words(&words), "enumeration"),
            Err(Error::GuardExceeded { .. }) => {
                (&IntPolynomial::monomial(1, k) * &x, "q^kappa X(q)")
            }
            Err(e) => return Err(e.into()),
        }
    } else {
        (&IntPolynomial::monomial(1, k) * &x, "q^kappa X(q)")
    };
    let evals = root_evaluations(&x, (n * n) as u64)?;
    match g.format {
        Format::Json => emit_json(&json!({
            "n": n,
            "x": x,
            "f": f,
            "f_source": source,
            "kappa": k,
            "count": x.eval_at_one().to_string(),
            "evaluations": evals.iter().map(ToString::to_string).collect::<Vec<_>>(),
        })),
        Format::Text => emit(&format!(
            "X(q) = {x}\nf_{n}(q) = {f}  [{source}]\nkappa = {k}\nX(1) = {}\nX(ζ^d), d = 0..{} : ({})",
            x.eval_at_one(),
            n * n - 1,
            join(&evals)
        )),
    }
}

fn bijection_check(g: Global, n: usize) -> Outcome {
    check_rank(n, g.max_n)?;
    let words = enumerate_reduced_words_with_limit(n, g.max_n)?;
    let squares = enumerate_syt_with_limit(
        &Partition::square(n),
        sieve_core::tableau::DEFAULT_MAX_ELEMENTS,
    )?;
    let image = squares
        .iter()
        .map(psi)
        .collect::<Result<BTreeSet<_>, _>>()?;
    let reduced = image
        .iter()
        .filter(|w| is_reduced_word_for_w0(w, n))
        .count();
    let onto = image == words.iter().cloned().collect::<BTreeSet<_>>();
    let report = cross_check(n)?;
    let descents_ok = squares.iter().all(|t| {
        let lhs = sieve_core::bn::tableau_descent_data(t).map(|d| d.cyclic_descents);
        let rhs = psi(t).map(|w| descent_data(&w).cyclic_descents);
        matches!((lhs, rhs), (Ok(a), Ok(b)) if a == b)
    });
    let passed = onto && image.len() == squares.len() && report.passed() && descents_ok;
    let v = json!({
        "n": n,
        "squares": squares.len(),
        "reduced_words": words.len(),
        "psi_image": image.len(),
        "psi_image_reduced": reduced,
        "psi_onto": onto,
        "equivariance": report.witnesses.is_empty(),
        "censuses_agree": report.censuses_agree(),
        "descents_preserved": descents_ok,
        "witnesses": report.witnesses,
        "passed": passed,
    });
    match g.format {
        Format::Json => emit_json(&v)?,
        Format::Text => {
            let eq = if report.witnesses.is_empty() {
                "OK"
            } else {
                "FAILED"
            };
            let mut out = format!(
                "psi image = {reduced}/{} reduced words; equivariance {eq}",
                words.len()
            );
            if !report.censuses_agree() {
                out.push_str("\norbit censuses disagree");
            }
            if !descents_ok {
                out.push_str("\ncyclic descents not preserved");
            }
            emit(&out)?;
        }
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification(v))
    }
}

fn property_suite(g: Global, n: usize, seed: u64, samples: usize) -> Outcome {
    let limit = if g.allow_large {
        SAMPLED_MAX_N.max(g.max_n)
    } else {
        g.max_n
    };
    check_rank(n, limit.min(SAMPLED_MAX_N))?;
    let report = run_property_suite(SuiteConfig { n, seed, samples })?;
    let v = serde_json::to_value(&report).expect("report serializes");
    match g.format {
        Format::Json => emit_json(&v)?,
        Format::Text => {
            let mut lines = vec![format!("property suite n={n} seed={seed}")];
            lines.extend(report.checks.iter().map(ToString::to_string));
            emit(&lines.join("\n"))?;
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification(v))
    }
}

fn golden(g: Global) -> Outcome {
    let results = sieve_core::golden::run()?;
    let passed = results.iter().all(|r| r.passed());
    let v = serde_json::to_value(&results).expect("results serialize");
    match g.format {
        Format::Json => emit_json(&v)?,
        Format::Text => {
            let lines = results
                .iter()
                .map(|r| {
                    if r.passed() {
                        format!("ok   {}", r.name)
                    } else {
                        format!(
                            "FAIL {}: expected {:?}, got {:?}",
                            r.name, r.expected, r.actual
                        )
                    }
                })
                .collect::<Vec<_>>();
            emit(&lines.join("\n"))?;
        }
    }
    if passed {
        Ok(())
    } else {
        let failed = results.iter().filter(|r| !r.passed()).collect::<Vec<_>>();
        Err(Failure::Verification(
            json!({ "error": "golden mismatch", "failed": failed }),
        ))
    }
}
