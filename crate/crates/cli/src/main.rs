//! `thrall`: Schur expansions of higher Lie characters from tableaux.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use thrall_core::domino::{enumerate_tilings, enumerate_ydt, enumerate_ydt_all};
use thrall_core::shapes::enumerate_partitions;
use thrall_core::symfunc::{higher_lie_character, SchurExpansion};
use thrall_core::tableau::{enumerate_lr, enumerate_syt};
use thrall_core::thrall::{classify, compare_unsolved, expansion_from_tableaux, syt_lambda, verify};
use thrall_core::vanleeuwen::xi_traced;
use thrall_core::verification::{run_all, Limits};
use thrall_core::{Error, Partition, SkewShape, StandardTableau};

#[derive(Parser)]
#[command(name = "thrall", version, about = "Schur expansions of higher Lie characters via refined Thrall subsets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Schur expansion of ch(L_λ).
    Expand {
        /// Partition such as 4,2 (0 for the empty partition).
        #[arg(long)]
        lambda: Partition,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        #[arg(long)]
        json: bool,
    },
    /// The refined Thrall subset for (λ, μ).
    Thrall {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        json: bool,
    },
    /// Every stage of the spin bijection for a tableau with equal halves.
    TraceXi {
        /// Rows separated by '/', entries by spaces.
        #[arg(long)]
        tableau: StandardTableau,
        /// Human-readable stages with drawn domino tableaux instead of JSON.
        #[arg(long)]
        ascii: bool,
    },
    /// Run the acceptance suite, or compare one λ against the oracle.
    Verify {
        #[arg(long, env = "THRALL_NMAX", default_value_t = 7)]
        nmax: usize,
        /// Compare a single partition for every μ instead of running the suite.
        #[arg(long)]
        lambda: Option<Partition>,
        /// Append the running time of each criterion (output is then not reproducible).
        #[arg(long)]
        timings: bool,
        #[arg(long)]
        json: bool,
    },
    /// List combinatorial objects.
    Enumerate {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Straight or skew shape, e.g. 5,3,2 or 5,3,2/3,2; the size for partitions.
        #[arg(long)]
        shape: String,
        #[arg(long)]
        weight: Option<Partition>,
        #[arg(long)]
        lambda: Option<Partition>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Tableau,
    Oracle,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Partitions,
    Syt,
    SytLambda,
    Lr,
    Tilings,
    Ydt,
}

/// Failures mapped to exit codes.
enum Failure {
    Mismatch,
    Input(String),
    Unsolved(Partition),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnsolvedClass(lambda) => Failure::Unsolved(lambda),
            other => Failure::Input(other.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

/// Line to stdout; a closed pipe is not an error worth reporting.
macro_rules! say {
    ($($arg:tt)*) => {{
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Expand { lambda, method, json } => expand(&lambda, method, json),
        Command::Thrall { lambda, mu, json } => thrall(&lambda, &mu, json),
        Command::TraceXi { tableau, ascii } => trace_xi(&tableau, ascii),
        Command::Verify { lambda: Some(lambda), json, .. } => verify_one(&lambda, json),
        Command::Verify { nmax, lambda: None, timings, json } => verify_suite(nmax, timings, json),
        Command::Enumerate { kind, shape, weight, lambda, json } => {
            enumerate(kind, &shape, weight.as_ref(), lambda.as_ref(), json)
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Unsolved(lambda)) => {
            eprintln!("no tableau formula known for lambda = {lambda}");
            ExitCode::from(3)
        }
    }
}

fn print_json<T: serde::Serialize>(value: &T) {
    say!("{}", serde_json::to_string(value).expect("serializable"));
}

fn to_json<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("serializable")
}

/// Oracle coefficients next to the block-class counts for λ without a formula.
fn print_unsolved(lambda: &Partition, json: bool) -> Outcome {
    let rows = compare_unsolved(lambda)?;
    if json {
        let rows: Vec<Value> = rows
            .iter()
            .map(|(mu, c, count)| json!({"mu": mu.to_string(), "oracle": c, "syt_lambda": count}))
            .collect();
        print_json(&json!({"lambda": lambda.to_string(), "note": "no tableau formula known", "rows": rows}));
    } else {
        say!("lambda = {lambda}: no tableau formula known");
        say!("{:<16} {:>8} {:>10}", "mu", "oracle", "SYT_lambda");
        for (mu, c, count) in rows {
            say!("{:<16} {:>8} {:>10}", mu.to_string(), c, count);
        }
    }
    Err(Failure::Unsolved(lambda.clone()))
}

fn expand(lambda: &Partition, method: Method, json: bool) -> Outcome {
    let solved = classify(lambda).is_ok();
    if !solved && method != Method::Oracle {
        return print_unsolved(lambda, json);
    }
    let tableau = (method != Method::Oracle).then(|| expansion_from_tableaux(lambda)).transpose()?;
    let oracle = (method != Method::Tableau).then(|| higher_lie_character(lambda)).transpose()?;
    let matched = match (&tableau, &oracle) {
        (Some(t), Some(o)) => Some(t == o),
        _ => None,
    };
    if json {
        let mut out = json!({"lambda": lambda.to_string()});
        if let Some(t) = &tableau {
            out["tableau"] = to_json(t);
        }
        if let Some(o) = &oracle {
            out["oracle"] = to_json(o);
        }
        if let Some(m) = matched {
            out["matched"] = json!(m);
        }
        print_json(&out);
    } else {
        let shown = tableau.as_ref().or(oracle.as_ref()).expect("one method ran");
        say!("{shown}");
        if let (Some(t), Some(o), Some(false)) = (&tableau, &oracle, matched) {
            print_diff(t, o);
        }
    }
    if matched == Some(false) {
        return Err(Failure::Mismatch);
    }
    Ok(())
}

fn print_diff(tableau: &SchurExpansion, oracle: &SchurExpansion) {
    say!("mismatch (mu: tableau vs oracle)");
    let mut shapes: Vec<&Partition> = tableau.terms().keys().chain(oracle.terms().keys()).collect();
    shapes.sort_by(|a, b| b.cmp(a));
    shapes.dedup();
    for mu in shapes {
        let (t, o) = (tableau.coefficient(mu), oracle.coefficient(mu));
        if t != o {
            say!("  {mu}: {t} vs {o}");
        }
    }
}

fn thrall(lambda: &Partition, mu: &Partition, json: bool) -> Outcome {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { expected: lambda.size(), actual: mu.size() }.into());
    }
    let class = match classify(lambda) {
        Ok(class) => class,
        Err(_) => return print_unsolved(lambda, json),
    };
    let reports = verify(lambda)?;
    let report = reports.into_iter().find(|r| r.mu == *mu).expect("every mu is reported");
    if json {
        print_json(&report);
    } else {
        say!(
            "lambda = {lambda} ({class}), mu = {mu}: count {}, oracle {}{}",
            report.count,
            report.oracle,
            if report.matched { "" } else { " MISMATCH" }
        );
        for t in &report.witnesses {
            say!("{t}");
        }
    }
    if !report.matched {
        return Err(Failure::Mismatch);
    }
    Ok(())
}

fn trace_xi(t: &StandardTableau, ascii: bool) -> Outcome {
    let trace = xi_traced(t)?;
    if !ascii {
        let mut out = to_json(&trace);
        out["tableau"] = to_json(t);
        out["spin"] = json!(trace.spin().to_string());
        print_json(&out);
        return Ok(());
    }
    say!("T      {t}");
    say!("U      {}", trace.u);
    say!("S      {}", trace.s);
    say!("B      {}", trace.psi.b);
    say!("D      {}", trace.psi.d);
    say!("Omega  {}", trace.omega);
    say!("d(M)   {}/{}", trace.d.outer, trace.d.inner);
    say!("{}", trace.d.render_ascii());
    for (i, step) in trace.theta.iter().enumerate() {
        let open = step.diagram.chains.iter().filter(|c| c.open).count();
        let closed = step.diagram.chains.len() - open;
        say!("theta^{}  {open} open, {closed} closed chains", i + 1);
        for chain in step.diagram.chains.iter().filter(|c| !c.open) {
            let dominoes: Vec<String> = chain.dominoes.iter().map(|d| d.to_string()).collect();
            say!("  closed {}", dominoes.join(" "));
        }
        say!("{}", step.result.render_ascii());
    }
    say!("spin {}", trace.spin());
    Ok(())
}

fn verify_one(lambda: &Partition, json: bool) -> Outcome {
    if classify(lambda).is_err() {
        return print_unsolved(lambda, json);
    }
    let reports = verify(lambda)?;
    let all = reports.iter().all(|r| r.matched);
    if json {
        print_json(&reports);
    } else {
        say!("{:<16} {:>8} {:>8}  matched", "mu", "oracle", "count");
        for r in &reports {
            say!("{:<16} {:>8} {:>8}  {}", r.mu.to_string(), r.oracle, r.count, r.matched);
        }
    }
    if !all {
        return Err(Failure::Mismatch);
    }
    Ok(())
}

fn verify_suite(nmax: usize, timings: bool, json: bool) -> Outcome {
    let outcomes = run_all(&Limits::up_to(nmax));
    if json {
        let mut rows = to_json(&outcomes);
        if timings {
            for (row, o) in rows.as_array_mut().expect("array").iter_mut().zip(&outcomes) {
                row["seconds"] = json!(o.elapsed.as_secs_f64());
            }
        }
        print_json(&rows);
    } else {
        for o in &outcomes {
            if timings {
                say!("{o} [{:.3}s]", o.elapsed.as_secs_f64());
            } else {
                say!("{o}");
            }
        }
    }
    if outcomes.iter().all(|o| o.passed) {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn parse<T: std::str::FromStr<Err = Error>>(s: &str) -> Result<T, Failure> {
    s.parse().map_err(Failure::from)
}

fn require<'a>(value: Option<&'a Partition>, flag: &str) -> Result<&'a Partition, Failure> {
    value.ok_or_else(|| Failure::Input(format!("--{flag} is required for this kind")))
}

fn enumerate(kind: Kind, shape: &str, weight: Option<&Partition>, lambda: Option<&Partition>, json: bool) -> Outcome {
    let items: Vec<(String, Value)> = match kind {
        Kind::Partitions => {
            let n: usize = shape.trim().parse().map_err(|_| Failure::Input(format!("bad size {shape:?}")))?;
            enumerate_partitions(n).iter().map(|p| (p.to_string(), to_json(p))).collect()
        }
        Kind::Syt => {
            let shape: SkewShape = parse(shape)?;
            enumerate_syt(&shape).iter().map(|t| (t.to_string(), to_json(t))).collect()
        }
        Kind::SytLambda => {
            let mu: Partition = parse(shape)?;
            syt_lambda(require(lambda, "lambda")?, &mu)?.iter().map(|t| (t.to_string(), to_json(t))).collect()
        }
        Kind::Lr => {
            let shape: SkewShape = parse(shape)?;
            enumerate_lr(&shape, require(weight, "weight")?).iter().map(|t| (t.to_string(), to_json(t))).collect()
        }
        Kind::Tilings => {
            let shape: SkewShape = parse(shape)?;
            enumerate_tilings(&shape.outer, &shape.inner)
                .iter()
                .map(|tiling| {
                    let text: Vec<String> =
                        tiling.iter().map(|[a, b]| format!("{{{a},{b}}}")).collect();
                    (text.join(" "), to_json(tiling))
                })
                .collect()
        }
        Kind::Ydt => {
            let shape: Partition = parse(shape)?;
            let tableaux = match weight {
                Some(w) => enumerate_ydt(&shape, w)?,
                None => enumerate_ydt_all(&shape).into_values().flatten().collect(),
            };
            tableaux.iter().map(|d| (d.to_string(), to_json(d))).collect()
        }
    };
    if json {
        print_json(&Value::Array(items.into_iter().map(|(_, v)| v).collect()));
    } else {
        for (text, _) in items {
            say!("{text}");
        }
    }
    Ok(())
}
