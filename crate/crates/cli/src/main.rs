//! `sumfree`: batch front end for zero-sum subspaces of the inverse over GF(2^n).
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid arguments.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sumfree_core::binpoly::factorize_xn_minus_1;
use sumfree_core::catalog::{
    compute_kn, conjecture_sweep, cor_c2_enumerate, cor_cc3_enumerate, render_table1,
    render_table2, table1, AutoOutcome, Classifier, SearchOptions, Verdict,
};
use sumfree_core::witness::{
    verify_certificate, witness_lift, witness_search_exhaustive, witness_search_random,
    Certificate, ExhaustiveOutcome, DEFAULT_EXHAUSTIVE_CAP,
};
use sumfree_core::{Error, FieldCtx};

#[derive(Parser, Debug)]
#[command(
    name = "sumfree",
    version,
    about = "Zero-sum subspaces of x -> 1/x over GF(2^n)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Worker threads for searches (results do not depend on this).
    #[arg(long, env = "SUMFREE_THREADS", global = true)]
    threads: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum WitnessMethod {
    Auto,
    Factor,
    Lift,
    Random,
    Exhaustive,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Factor X^n + 1 over GF(2).
    Factor {
        #[arg(long)]
        n: u64,
    },
    /// Order of 2, factor count and zero-trace count per odd index d.
    Table1 {
        #[arg(long, default_value_t = 31)]
        d_max: u64,
    },
    /// K_n for every n up to n_max.
    Table2 {
        #[arg(long, default_value_t = 32)]
        n_max: u64,
    },
    /// K_n with a realizing factor for each element.
    Kset {
        #[arg(long)]
        n: u64,
    },
    /// Cyclotomic-product hyper-matrix enumeration.
    C2 {
        #[arg(long)]
        n: u64,
    },
    /// Factors of the form R(X^s).
    Cc3 {
        #[arg(long)]
        n: u64,
    },
    /// Build or search for a certificate at (n, k).
    Witness {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = WitnessMethod::Auto)]
        method: WitnessMethod,
        /// Subfield degree for --method lift.
        #[arg(long, default_value_t = 2)]
        l: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4096)]
        budget: u64,
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_CAP)]
        cap: u128,
        /// Also write the certificate JSON to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-verify a certificate file.
    Verify { path: PathBuf },
    /// Classify one (n, k) pair.
    Status {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4096)]
        budget: u64,
        #[arg(long, default_value_t = 1 << 20)]
        cap: u128,
    },
    /// Classify every pair with n <= n_max against the conjectured pattern.
    Conjecture {
        #[arg(long, default_value_t = 12)]
        n_max: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4096)]
        budget: u64,
        #[arg(long, default_value_t = 1 << 20)]
        cap: u128,
    },
}

/// A finished command: text to emit and whether verification held.
struct Outcome {
    json: Value,
    table: String,
    ok: bool,
}

impl Outcome {
    fn ok(json: Value, table: String) -> Self {
        Self {
            json,
            table,
            ok: true,
        }
    }
}

enum Failure {
    Invalid(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::IdentityViolation(_) => Failure::Verification(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn cert_line(c: &Certificate) -> String {
    let basis: Vec<String> = c.basis.iter().map(|b| b.to_hex()).collect();
    format!(
        "n={} k={} method={} verified={} basis=[{}]\n",
        c.n,
        c.k,
        c.method.name(),
        c.verified,
        basis.join(",")
    )
}

fn cmd_factor(n: u64) -> Result<Outcome, Failure> {
    let f = factorize_xn_minus_1(n)?;
    if f.product() != sumfree_core::binpoly::xn_plus_one(n as usize) {
        return Err(Failure::Verification("factors do not multiply back".into()));
    }
    let mut t = format!("X^{n} + 1, n = 2^{} * {}\n", f.e, f.t);
    for e in &f.factors {
        writeln!(
            t,
            "d={:<3} mult={:<3} zero_trace={:<5} {}",
            e.d, e.mult, e.zero_trace, e.poly
        )
        .unwrap();
    }
    Ok(Outcome::ok(to_json(&f), t))
}

fn cmd_kset(n: u64) -> Result<Outcome, Failure> {
    let r = compute_kn(n)?;
    let mut t = format!("K_{n} = {:?}\n", r.kset);
    for real in &r.realizations {
        writeln!(
            t,
            "k={:<3} factor={}  reversed={}",
            real.k, real.factor, real.reversed
        )
        .unwrap();
    }
    Ok(Outcome::ok(to_json(&r), t))
}

fn cmd_c2(n: u64) -> Result<Outcome, Failure> {
    let entries = cor_c2_enumerate(n)?;
    let mut ks: Vec<usize> = entries.iter().map(|e| e.k).collect();
    ks.sort_unstable();
    ks.dedup();
    let mut t = String::new();
    for e in &entries {
        writeln!(t, "{e}").unwrap();
    }
    writeln!(t, "k values: {ks:?}").unwrap();
    let triples: Vec<Value> = entries
        .iter()
        .map(|e| {
            json!({
                "epsilon": e.epsilon.to_string(),
                "dims": e.epsilon.dims,
                "divisors": e.divisors,
                "k": e.k,
                "product": e.product,
            })
        })
        .collect();
    Ok(Outcome::ok(
        json!({"n": n, "triples": triples, "kset": ks}),
        t,
    ))
}

fn cmd_cc3(n: u64) -> Result<Outcome, Failure> {
    let entries = cor_cc3_enumerate(n)?;
    let mut ks: Vec<usize> = entries.iter().map(|e| e.k).collect();
    ks.sort_unstable();
    ks.dedup();
    let mut t = String::new();
    for e in &entries {
        writeln!(t, "{e}").unwrap();
    }
    writeln!(t, "k values: {ks:?}").unwrap();
    Ok(Outcome::ok(
        json!({"n": n, "entries": to_json(&entries), "kset": ks}),
        t,
    ))
}

#[allow(clippy::too_many_arguments)]
fn cmd_witness(
    n: u32,
    k: usize,
    method: WitnessMethod,
    l: u32,
    opts: SearchOptions,
    out: Option<PathBuf>,
) -> Result<Outcome, Failure> {
    let classifier = Classifier::new(n, opts)?;
    let ctx: &FieldCtx = classifier.ctx();
    if k == 0 || k > n as usize {
        return Err(Error::DimensionOutOfRange { k, n }.into());
    }
    let found: AutoOutcome = match method {
        WitnessMethod::Auto => classifier.find_certificate(k)?,
        WitnessMethod::Factor => match classifier.factor_certificate(k)? {
            Some(c) => AutoOutcome::Certificate(c),
            None => AutoOutcome::Unknown,
        },
        WitnessMethod::Lift => {
            if k <= l as usize {
                return Err(Failure::Invalid(format!("lift needs k > l = {l}")));
            }
            match classifier.find_certificate(k - l as usize)? {
                AutoOutcome::Certificate(inner) => {
                    AutoOutcome::Certificate(witness_lift(ctx, &inner, l)?)
                }
                _ => AutoOutcome::Unknown,
            }
        }
        WitnessMethod::Random => match witness_search_random(ctx, k, opts.seed, opts.budget)? {
            Some(c) => AutoOutcome::Certificate(c),
            None => AutoOutcome::Unknown,
        },
        WitnessMethod::Exhaustive => {
            match witness_search_exhaustive(ctx, k, opts.exhaustive_cap)? {
                ExhaustiveOutcome::Found(c) => AutoOutcome::Certificate(c),
                ExhaustiveOutcome::SumFree(r) => AutoOutcome::SumFree(r),
            }
        }
    };
    match found {
        AutoOutcome::Certificate(c) => {
            let ok = verify_certificate(&c)?;
            let js = to_json(&c);
            if let Some(path) = out {
                let text = serde_json::to_string_pretty(&js).expect("serializes") + "\n";
                std::fs::write(&path, text)
                    .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
            }
            Ok(Outcome {
                table: cert_line(&c),
                json: js,
                ok,
            })
        }
        AutoOutcome::SumFree(r) => Ok(Outcome::ok(
            to_json(&r),
            format!(
                "n={n} k={k} sum-free ({} subspaces enumerated)\n",
                r.enumerated
            ),
        )),
        AutoOutcome::Unknown => Ok(Outcome::ok(
            json!({"n": n, "k": k, "result": "unknown"}),
            format!("n={n} k={k} unknown\n"),
        )),
    }
}

fn cmd_verify(path: PathBuf) -> Result<Outcome, Failure> {
    let text = std::fs::read_to_string(&path)
        .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    let cert: Certificate = serde_json::from_str(&text)
        .map_err(|e| Failure::Verification(format!("malformed certificate: {e}")))?;
    let ok = verify_certificate(&cert).map_err(|e| Failure::Verification(e.to_string()))?;
    Ok(Outcome {
        json: json!({"n": cert.n, "k": cert.k, "method": cert.method.name(), "verified": ok}),
        table: format!(
            "n={} k={} method={} verified={ok}\n",
            cert.n,
            cert.k,
            cert.method.name()
        ),
        ok,
    })
}

fn cmd_status(n: u32, k: usize, opts: SearchOptions) -> Result<Outcome, Failure> {
    let v = Classifier::new(n, opts)?.classify(k)?;
    let mut ok = true;
    let detail = match &v.verdict {
        Verdict::NotSumFree {
            criterion,
            detail,
            certificate,
            dual_certificate,
        } => {
            for c in certificate.iter().chain(dual_certificate) {
                ok &= verify_certificate(c)?;
            }
            let cert = match (certificate, dual_certificate) {
                (Some(c), _) => format!(" certificate={}", c.method.name()),
                (None, Some(c)) => format!(" dual_certificate(k={})={}", c.k, c.method.name()),
                _ => String::new(),
            };
            format!(
                "{} ({detail}){cert}",
                to_json(criterion).as_str().unwrap_or("")
            )
        }
        Verdict::SumFree { criterion, detail } => {
            format!("{} ({detail})", to_json(criterion).as_str().unwrap_or(""))
        }
        Verdict::Unknown { detail } => detail.clone(),
    };
    Ok(Outcome {
        table: format!("n={n} k={k} {} {detail}\n", v.label()),
        json: to_json(&v),
        ok,
    })
}

fn cmd_conjecture(n_max: u32, opts: SearchOptions) -> Result<Outcome, Failure> {
    let rows = conjecture_sweep(n_max, opts)?;
    let mut t = format!(
        "{:>3} | {:<10} | {:<10} | {:<9} | not sum-free\n",
        "n", "consistent", "confirmed", "sum-free"
    );
    for r in &rows {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        writeln!(
            t,
            "{:>3} | {:<10} | {:<10} | {:<9} | {}{}",
            r.n,
            r.consistent,
            r.confirmed,
            join(&r.sum_free),
            join(&r.not_sum_free),
            if r.unknown.is_empty() {
                String::new()
            } else {
                format!("  unknown: {}", join(&r.unknown))
            }
        )
        .unwrap();
    }
    let ok = rows.iter().all(|r| r.consistent);
    Ok(Outcome {
        json: to_json(&rows),
        table: t,
        ok,
    })
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    match cli.command {
        Command::Factor { n } => cmd_factor(n),
        Command::Table1 { d_max } => {
            let rows = table1(d_max)?;
            Ok(Outcome::ok(to_json(&rows), render_table1(&rows)))
        }
        Command::Table2 { n_max } => {
            let reports = (1..=n_max).map(compute_kn).collect::<Result<Vec<_>, _>>()?;
            let js: Vec<Value> = reports
                .iter()
                .map(|r| json!({"n": r.n, "kset": r.kset}))
                .collect();
            Ok(Outcome::ok(Value::Array(js), render_table2(&reports)))
        }
        Command::Kset { n } => cmd_kset(n),
        Command::C2 { n } => cmd_c2(n),
        Command::Cc3 { n } => cmd_cc3(n),
        Command::Witness {
            n,
            k,
            method,
            l,
            seed,
            budget,
            cap,
            out,
        } => cmd_witness(
            n,
            k,
            method,
            l,
            SearchOptions {
                seed,
                budget,
                exhaustive_cap: cap,
            },
            out,
        ),
        Command::Verify { path } => cmd_verify(path),
        Command::Status {
            n,
            k,
            seed,
            budget,
            cap,
        } => cmd_status(
            n,
            k,
            SearchOptions {
                seed,
                budget,
                exhaustive_cap: cap,
            },
        ),
        Command::Conjecture {
            n_max,
            seed,
            budget,
            cap,
        } => cmd_conjecture(
            n_max,
            SearchOptions {
                seed,
                budget,
                exhaustive_cap: cap,
            },
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("sumfree: cannot configure {t} threads: {e}");
            return ExitCode::from(2);
        }
    }
    let format = cli.format;
    let output = cli.output.clone();
    let outcome = match run(cli) {
        Ok(o) => o,
        Err(Failure::Invalid(msg)) => {
            eprintln!("sumfree: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("sumfree: verification failed: {msg}");
            return ExitCode::from(1);
        }
    };
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&outcome.json).expect("serializes") + "\n",
        Format::Table => outcome.table,
    };
    match output {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, text) {
                eprintln!("sumfree: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
