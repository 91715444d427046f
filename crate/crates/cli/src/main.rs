//! Batch CLI over the satcomb library. Every subcommand prints exactly one
//! JSON document (or TSV rows with `--tsv`) with sorted keys and canonical
//! coweight order, so output is byte-identical across runs and thread
//! counts. Exit codes: 2 usage error, 1 invariant violation, 0 otherwise.

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use satcomb::cartan::parse_type_string;
use satcomb::{check, minimal, paths, tables, weights, weyl};
use satcomb::{Coweight, MinimalClass, Root, RootDatum};

#[derive(Parser)]
#[command(name = "satcomb", version, about = "Exact root-datum combinatorics")]
struct Cli {
    /// Emit flattened TSV rows instead of JSON.
    #[arg(long, global = true)]
    tsv: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a dominant coweight against the minimal set M.
    Classify {
        #[arg(long = "type")]
        type_spec: String,
        /// Comma-separated integer coordinates in the lattice basis.
        #[arg(long, allow_hyphen_values = true)]
        coweight: String,
    },
    /// List M with classes.
    Minimal {
        #[arg(long = "type")]
        type_spec: String,
    },
    /// Weight set of an irreducible module.
    Omega {
        #[arg(long = "type")]
        type_spec: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Weyl orbit and stabilizer order.
    Orbit {
        #[arg(long = "type")]
        type_spec: String,
        #[arg(long, allow_hyphen_values = true)]
        coweight: String,
    },
    /// Weight multiplicity.
    Mult {
        #[arg(long = "type")]
        type_spec: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
    },
    /// Weyl dimension.
    Dim {
        #[arg(long = "type")]
        type_spec: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Tensor a minimal coweight against a highest coweight.
    Tensor {
        #[arg(long = "type")]
        type_spec: String,
        /// One element of M.
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Enumerate paths over a sequence of minimal coweights.
    Paths {
        #[arg(long = "type")]
        type_spec: String,
        /// Sequence over M: flat comma-separated coordinates chunked by
        /// rank, or entries separated by ';'.
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        /// Include non-dominant paths.
        #[arg(long)]
        all: bool,
    },
    /// Count dominant paths from 0 to a dominant target.
    Count {
        #[arg(long = "type")]
        type_spec: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
    },
    /// Short-coroot decomposition with its witness path.
    Decompose {
        #[arg(long = "type")]
        type_spec: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Kostka-Foulkes polynomial of a dominant pair.
    Kostka {
        #[arg(long = "type")]
        type_spec: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Check K(1) = multiplicity over a dominant shell.
    VerifyKostka {
        #[arg(long = "type")]
        type_spec: String,
        /// Bound on the doubled rho-pairing of shell members.
        #[arg(long, default_value_t = 8)]
        shell: i64,
    },
    /// Euler-characteristic predicate (orbit membership).
    Euler {
        #[arg(long = "type")]
        type_spec: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
    },
    /// Stratum dimension for a weight of the module.
    StratumDim {
        #[arg(long = "type")]
        type_spec: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
    },
    /// Predicted constant term.
    ConstantTerm {
        #[arg(long = "type")]
        type_spec: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
    },
    /// Predicted Whittaker coefficient.
    Whittaker {
        #[arg(long = "type")]
        type_spec: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
    },
    /// Run the invariant suite over several types.
    Selfcheck {
        /// Comma-separated list of type strings.
        #[arg(long)]
        types: String,
        #[arg(long, default_value_t = 4)]
        shell: i64,
    },
}

struct UsageError(String);

type CmdResult = Result<Value, UsageError>;

fn fail(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

impl From<satcomb::Error> for UsageError {
    fn from(e: satcomb::Error) -> UsageError {
        UsageError(e.to_string())
    }
}

fn build_datum(spec: &str) -> Result<RootDatum, UsageError> {
    let (cartan, isogeny) = parse_type_string(spec)?;
    Ok(RootDatum::build(cartan, isogeny)?)
}

fn parse_coweight(datum: &RootDatum, s: &str) -> Result<Coweight, UsageError> {
    let coords: Vec<i64> = s
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| fail(format!("bad coordinate {x:?}"))))
        .collect::<Result<_, _>>()?;
    Ok(datum.coweight(&coords)?)
}

/// A sequence of coweights: ';'-separated entries, or one flat comma list
/// whose length is a multiple of the rank.
fn parse_coweight_seq(datum: &RootDatum, s: &str) -> Result<Vec<Coweight>, UsageError> {
    if s.contains(';') {
        return s.split(';').map(|part| parse_coweight(datum, part)).collect();
    }
    let flat: Vec<i64> = s
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| fail(format!("bad coordinate {x:?}"))))
        .collect::<Result<_, _>>()?;
    let rank = datum.rank();
    if flat.is_empty() || !flat.len().is_multiple_of(rank) {
        return Err(fail(format!(
            "sequence length {} is not a multiple of the rank {rank}",
            flat.len()
        )));
    }
    flat.chunks(rank).map(|c| Ok(datum.coweight(c)?)).collect()
}

fn coweight_json(cw: &Coweight) -> Value {
    json!(cw.coords())
}

fn root_name(root: &Root) -> String {
    let mut terms = Vec::new();
    for (i, &c) in root.coords().iter().enumerate() {
        if c == 0 {
            continue;
        }
        let base = format!("alpha{}", i + 1);
        terms.push(if c == 1 { base } else { format!("{c}{base}") });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

fn class_json(class: &MinimalClass) -> Value {
    match class {
        MinimalClass::Minuscule => json!({"class": "minuscule"}),
        MinimalClass::QuasiMinuscule(gamma) => {
            json!({"class": "quasi-minuscule", "gamma": root_name(gamma)})
        }
        MinimalClass::NotMinimal(witness) => {
            json!({"class": "not-minimal", "witness": coweight_json(witness)})
        }
        MinimalClass::Zero => json!({"class": "zero"}),
    }
}

fn path_json(path: &paths::PathSpec) -> Value {
    let labels: serde_json::Map<String, Value> = path
        .zero_labels()
        .iter()
        .map(|(&i, &label)| (i.to_string(), json!(format!("alpha{}", label + 1))))
        .collect();
    json!({
        "steps": path.steps().iter().map(coweight_json).collect::<Vec<_>>(),
        "zero_labels": labels,
        "vertices": path.vertices().iter().map(coweight_json).collect::<Vec<_>>(),
    })
}

fn half_power_json(v: &tables::SignedHalfPower) -> Value {
    json!({
        "sign": if v.is_zero() { 0 } else { v.sign },
        "q_half_exponent": v.half_exponent,
        "scalar": v.scalar,
    })
}

fn run_command(cmd: &Command) -> CmdResult {
    match cmd {
        Command::Classify { type_spec, coweight } => {
            let datum = build_datum(type_spec)?;
            let cw = parse_coweight(&datum, coweight)?;
            let class = minimal::classify(&datum, &cw)?;
            Ok(class_json(&class))
        }
        Command::Minimal { type_spec } => {
            let datum = build_datum(type_spec)?;
            let elements: Vec<Value> = minimal::minimal_elements(&datum)
                .iter()
                .map(|(cw, class)| {
                    let mut entry = class_json(class);
                    entry["coweight"] = coweight_json(cw);
                    entry
                })
                .collect();
            Ok(json!({"count": elements.len(), "elements": elements}))
        }
        Command::Omega { type_spec, lambda } => {
            let datum = build_datum(type_spec)?;
            let lam = parse_coweight(&datum, lambda)?;
            let omega = weights::omega_set(&datum, &lam)?;
            Ok(json!({
                "count": omega.len(),
                "weights": omega.iter().map(coweight_json).collect::<Vec<_>>(),
            }))
        }
        Command::Orbit { type_spec, coweight } => {
            let datum = build_datum(type_spec)?;
            let cw = parse_coweight(&datum, coweight)?;
            let orbit = weyl::orbit(&datum, &cw);
            Ok(json!({
                "count": orbit.len(),
                "orbit": orbit.iter().map(coweight_json).collect::<Vec<_>>(),
                "stabilizer_order": weyl::stabilizer_order(&datum, &cw) as u64,
            }))
        }
        Command::Mult { type_spec, lambda, nu } => {
            let datum = build_datum(type_spec)?;
            let lam = parse_coweight(&datum, lambda)?;
            let target = parse_coweight(&datum, nu)?;
            Ok(json!({"multiplicity": weights::weight_multiplicity(&datum, &lam, &target)?}))
        }
        Command::Dim { type_spec, lambda } => {
            let datum = build_datum(type_spec)?;
            let lam = parse_coweight(&datum, lambda)?;
            Ok(json!({"dimension": weights::weyl_dimension(&datum, &lam)?}))
        }
        Command::Tensor { type_spec, mu, lambda } => {
            let datum = build_datum(type_spec)?;
            let mu = parse_coweight(&datum, mu)?;
            let lam = parse_coweight(&datum, lambda)?;
            let product = paths::tensor_with_minimal(&datum, &mu, &lam)?;
            let summands: Vec<Value> = product
                .entries_canonical(&datum)
                .iter()
                .map(|(cw, m)| json!({"coweight": coweight_json(cw), "multiplicity": m}))
                .collect();
            Ok(json!({
                "summands": summands,
                "total_dimension": product.total_dimension(&datum)?,
            }))
        }
        Command::Paths { type_spec, mu, nu, all } => {
            let datum = build_datum(type_spec)?;
            let seq = parse_coweight_seq(&datum, mu)?;
            let target = parse_coweight(&datum, nu)?;
            let found = paths::enumerate_paths(&datum, &seq, &target, !all)?;
            Ok(json!({
                "count": found.len(),
                "dominant_only": !all,
                "paths": found.iter().map(path_json).collect::<Vec<_>>(),
            }))
        }
        Command::Count { type_spec, mu, nu } => {
            let datum = build_datum(type_spec)?;
            let seq = parse_coweight_seq(&datum, mu)?;
            let target = parse_coweight(&datum, nu)?;
            Ok(json!({"count": paths::count_dominant_paths(&datum, &seq, &target)?}))
        }
        Command::Decompose { type_spec, lambda } => {
            let datum = build_datum(type_spec)?;
            let lam = parse_coweight(&datum, lambda)?;
            let dec = minimal::decompose(&datum, &lam)?;
            Ok(json!({
                "mu_seq": dec.mu_seq.iter().map(coweight_json).collect::<Vec<_>>(),
                "witness": path_json(&dec.witness),
            }))
        }
        Command::Kostka { type_spec, lambda, mu } => {
            let datum = build_datum(type_spec)?;
            let lam = parse_coweight(&datum, lambda)?;
            let target = parse_coweight(&datum, mu)?;
            let k = tables::kostka_foulkes(&datum, &lam, &target)?;
            Ok(json!({
                "coefficients": k.coeffs(),
                "display": k.to_string(),
                "at_one": k.eval_at_one(),
            }))
        }
        Command::VerifyKostka { type_spec, shell } => {
            let datum = build_datum(type_spec)?;
            let report = tables::verify_kostka_weight_identity(&datum, *shell)?;
            let violations: Vec<Value> = report
                .violations
                .iter()
                .map(|v| {
                    json!({
                        "lambda": coweight_json(&v.lambda),
                        "mu": coweight_json(&v.mu),
                        "kostka_at_one": v.kostka_at_one,
                        "multiplicity": v.multiplicity,
                    })
                })
                .collect();
            Ok(json!({
                "pairs_checked": report.pairs_checked,
                "violations": violations,
            }))
        }
        Command::Euler { type_spec, lambda, nu } => {
            let datum = build_datum(type_spec)?;
            let lam = parse_coweight(&datum, lambda)?;
            let target = parse_coweight(&datum, nu)?;
            Ok(json!({"value": tables::euler_char_predicted(&datum, &lam, &target)}))
        }
        Command::StratumDim { type_spec, lambda, nu } => {
            let datum = build_datum(type_spec)?;
            let lam = parse_coweight(&datum, lambda)?;
            let target = parse_coweight(&datum, nu)?;
            Ok(json!({"dimension": tables::stratum_dim(&datum, &lam, &target)?}))
        }
        Command::ConstantTerm { type_spec, lambda, nu } => {
            let datum = build_datum(type_spec)?;
            let lam = parse_coweight(&datum, lambda)?;
            let target = parse_coweight(&datum, nu)?;
            let v = tables::constant_term_predicted(&datum, &lam, &target)?;
            Ok(half_power_json(&v))
        }
        Command::Whittaker { type_spec, lambda, nu } => {
            let datum = build_datum(type_spec)?;
            let lam = parse_coweight(&datum, lambda)?;
            let target = parse_coweight(&datum, nu)?;
            let v = tables::whittaker_predicted(&datum, &lam, &target)?;
            let mut out = half_power_json(&v);
            if !v.is_zero() {
                out["degree"] = json!(v.half_exponent);
            }
            Ok(out)
        }
        Command::Selfcheck { types, shell } => {
            let specs: Vec<String> = types.split(',').map(|s| s.trim().to_string()).collect();
            let report = check::run_selfcheck(&specs, *shell)?;
            let checks: Vec<Value> = report
                .results
                .iter()
                .map(|r| {
                    json!({
                        "name": r.name,
                        "type": r.datum,
                        "passed": r.passed,
                        "details": r.details,
                    })
                })
                .collect();
            Ok(json!({
                "checks": checks,
                "failures": report.failures(),
                "shell": shell,
            }))
        }
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Classify { .. } => "classify",
        Command::Minimal { .. } => "minimal",
        Command::Omega { .. } => "omega",
        Command::Orbit { .. } => "orbit",
        Command::Mult { .. } => "mult",
        Command::Dim { .. } => "dim",
        Command::Tensor { .. } => "tensor",
        Command::Paths { .. } => "paths",
        Command::Count { .. } => "count",
        Command::Decompose { .. } => "decompose",
        Command::Kostka { .. } => "kostka",
        Command::VerifyKostka { .. } => "verify-kostka",
        Command::Euler { .. } => "euler",
        Command::StratumDim { .. } => "stratum-dim",
        Command::ConstantTerm { .. } => "constant-term",
        Command::Whittaker { .. } => "whittaker",
        Command::Selfcheck { .. } => "selfcheck",
    }
}

fn type_of(cmd: &Command) -> String {
    match cmd {
        Command::Classify { type_spec, .. }
        | Command::Minimal { type_spec }
        | Command::Omega { type_spec, .. }
        | Command::Orbit { type_spec, .. }
        | Command::Mult { type_spec, .. }
        | Command::Dim { type_spec, .. }
        | Command::Tensor { type_spec, .. }
        | Command::Paths { type_spec, .. }
        | Command::Count { type_spec, .. }
        | Command::Decompose { type_spec, .. }
        | Command::Kostka { type_spec, .. }
        | Command::VerifyKostka { type_spec, .. }
        | Command::Euler { type_spec, .. }
        | Command::StratumDim { type_spec, .. }
        | Command::ConstantTerm { type_spec, .. }
        | Command::Whittaker { type_spec, .. } => type_spec.clone(),
        Command::Selfcheck { types, .. } => types.clone(),
    }
}

fn inputs_of(cmd: &Command) -> Value {
    match cmd {
        Command::Classify { coweight, .. } | Command::Orbit { coweight, .. } => {
            json!({"coweight": coweight})
        }
        Command::Minimal { .. } => json!({}),
        Command::Omega { lambda, .. } | Command::Dim { lambda, .. }
        | Command::Decompose { lambda, .. } => json!({"lambda": lambda}),
        Command::Mult { lambda, nu, .. }
        | Command::Euler { lambda, nu, .. }
        | Command::StratumDim { lambda, nu, .. }
        | Command::ConstantTerm { lambda, nu, .. }
        | Command::Whittaker { lambda, nu, .. } => json!({"lambda": lambda, "nu": nu}),
        Command::Tensor { mu, lambda, .. } => json!({"lambda": lambda, "mu": mu}),
        Command::Paths { mu, nu, all, .. } => json!({"all": all, "mu": mu, "nu": nu}),
        Command::Count { mu, nu, .. } => json!({"mu": mu, "nu": nu}),
        Command::Kostka { lambda, mu, .. } => json!({"lambda": lambda, "mu": mu}),
        Command::VerifyKostka { shell, .. } => json!({"shell": shell}),
        Command::Selfcheck { shell, .. } => json!({"shell": shell}),
    }
}

/// key<TAB>value rows from a JSON tree, rows sorted by key path.
fn flatten_tsv(prefix: &str, value: &Value, rows: &mut Vec<String>) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten_tsv(&key, v, rows);
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten_tsv(&format!("{prefix}[{i}]"), v, rows);
            }
        }
        other => rows.push(format!("{prefix}\t{other}")),
    }
}

fn main() {
    let cli = Cli::parse();

    if let Ok(raw) = std::env::var("SATCOMB_THREADS") {
        match raw.parse::<usize>() {
            Ok(n) if n > 0 => {
                // ignore a second initialization (tests may preload a pool)
                let _ = satcomb::configure_threads(n);
            }
            _ => {
                eprintln!("satcomb: SATCOMB_THREADS must be a positive integer, got {raw:?}");
                std::process::exit(2);
            }
        }
    }

    let result = run_command(&cli.command);
    match result {
        Ok(result_value) => {
            let failures = result_value.get("failures").and_then(Value::as_u64).unwrap_or(0);
            let document = json!({
                "schema": "1",
                "command": command_name(&cli.command),
                "type": type_of(&cli.command),
                "inputs": inputs_of(&cli.command),
                "result": result_value,
            });
            let rendered = if cli.tsv {
                let mut rows = Vec::new();
                flatten_tsv("", &document, &mut rows);
                rows.join("\n")
            } else {
                serde_json::to_string_pretty(&document).expect("serializable document")
            };
            println!("{rendered}");
            if command_name(&cli.command) == "selfcheck" && failures > 0 {
                std::process::exit(1);
            }
        }
        Err(UsageError(msg)) => {
            eprintln!("satcomb: {msg}");
            std::process::exit(2);
        }
    }
}
