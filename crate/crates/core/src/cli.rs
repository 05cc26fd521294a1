//! Command-line front end. The binary is a thin wrapper around [`run`].
//!
//! Exit codes: 0 success, 1 domain error or failed verification, 2 usage
//! error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::algebra::{mul_table, triplet_set, AlgebraId};
use crate::automorphism::{chirality, orbit};
use crate::derivation::{derive, AlgebraSet};
use crate::error::{Error, Result};
use crate::expr::{eval, free_vars, parse, Assignment, Expr};
use crate::octonion::Octonion;
use crate::sampling::{random_assignment, seeded_rng, DEFAULT_COEFF_BOUND};
use crate::sieve::{is_invariant, sieve, FunctionFamily, Verdict, Witness, DEFAULT_TRIALS};
use crate::verify::{self, Effort};

const SCHEMA: u32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "octosieve",
    version,
    about = "Equivalent octonion algebras, the Hadamard variance sieve, and derivation checks"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the 8x8 signed basis multiplication table of one rule.
    Tables {
        #[arg(long, allow_negative_numbers = true)]
        algebra: i64,
    },
    /// Print the oriented triplets and parity word of one rule.
    Triplets {
        #[arg(long, allow_negative_numbers = true)]
        algebra: i64,
    },
    /// Print all 16 rules with their generating automorphism and parity word.
    Orbit,
    /// Evaluate an expression in all 16 rules and apply the sieve.
    Sieve {
        /// Polynomial such as `a*b + b*a` or `conj(a)*a`.
        #[arg(long)]
        expr: String,
        #[command(flatten)]
        input: InputArgs,
        /// Number of random assignments tried with --random-assign.
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
    },
    /// Apply the derivation D_{u,v} to an expression's value.
    Derive {
        /// First derivation argument: `iK` or eight comma-separated reals.
        #[arg(long, value_parser = parse_octonion_literal)]
        u: Octonion,
        /// Second derivation argument, same format as --u.
        #[arg(long, value_parser = parse_octonion_literal)]
        v: Octonion,
        /// Polynomial whose value (under each rule) is differentiated.
        #[arg(long)]
        expr: String,
        #[command(flatten)]
        input: InputArgs,
        /// Show a single rule.
        #[arg(long, allow_negative_numbers = true, conflicts_with = "all")]
        algebra: Option<i64>,
        /// Show all 16 rules (the default).
        #[arg(long)]
        all: bool,
    },
    /// Run the built-in verification suite.
    Verify {
        /// Fewer random samples.
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Bind a variable: `name=a0,a1,...,a7` or `name=iK`. Repeatable.
    #[arg(long = "assign", value_parser = parse_binding, conflicts_with = "random_assign")]
    assign: Vec<(String, Octonion)>,
    /// Draw integer coefficients at random (requires --seed).
    #[arg(long, requires = "seed")]
    random_assign: bool,
    /// Seed for --random-assign; equal seeds give identical output.
    #[arg(long)]
    seed: Option<u64>,
}

/// Parses `a0,...,a7` or the basis shorthand `iK` (`K` in 0..=7).
pub fn parse_octonion_literal(s: &str) -> std::result::Result<Octonion, String> {
    let s = s.trim();
    if let Some(k) = s.strip_prefix('i') {
        let k: usize = k
            .parse()
            .map_err(|_| format!("`{s}` is not a basis element i0..i7"))?;
        if k > 7 {
            return Err(format!("`{s}` is not a basis element i0..i7"));
        }
        return Ok(Octonion::basis(k));
    }
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 8 {
        return Err(format!(
            "expected 8 comma-separated reals, got {}",
            parts.len()
        ));
    }
    let mut coeffs = [0.0; 8];
    for (c, p) in coeffs.iter_mut().zip(&parts) {
        *c = p
            .trim()
            .parse()
            .map_err(|_| format!("`{}` is not a real number", p.trim()))?;
    }
    Octonion::try_new(coeffs).map_err(|e| e.to_string())
}

fn parse_binding(s: &str) -> std::result::Result<(String, Octonion), String> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| format!("expected name=value, got `{s}`"))?;
    let name = name.trim();
    let valid_name = name
        .chars()
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    if !valid_name {
        return Err(format!("`{name}` is not a variable name"));
    }
    Ok((name.to_string(), parse_octonion_literal(value)?))
}

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error[{}]: {e}", e.kind());
            1
        }
    }
}

fn algebra_id(n: i64) -> Result<AlgebraId> {
    AlgebraId::try_from(n)
}

fn emit_json(out: &mut dyn Write, value: &serde_json::Value) -> Result<i32> {
    let text = serde_json::to_string_pretty(value).expect("json values serialize");
    write_out(out, &format!("{text}\n"))
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<i32> {
    out.write_all(text.as_bytes())
        .map_err(|e| Error::PreconditionViolation(format!("cannot write output: {e}")))?;
    Ok(0)
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Tables { algebra } => {
            let n = algebra_id(*algebra)?;
            let table = mul_table(n);
            if json {
                emit_json(
                    out,
                    &json!({ "schema": SCHEMA, "algebra": n, "table": table }),
                )
            } else {
                write_out(out, &format!("O[{n}] ({:?})\n{table}", chirality(n)))
            }
        }
        Command::Triplets { algebra } => {
            let n = algebra_id(*algebra)?;
            let (set, parity) = triplet_set(n);
            if json {
                emit_json(
                    out,
                    &json!({
                        "schema": SCHEMA,
                        "algebra": n,
                        "chirality": chirality(n),
                        "triplets": set.triplets(),
                        "parity": parity,
                    }),
                )
            } else {
                let listed: Vec<String> = set.triplets().iter().map(|t| t.to_string()).collect();
                write_out(
                    out,
                    &format!("t[{n}] = {{{}}}\nparity = {parity}\n", listed.join(", ")),
                )
            }
        }
        Command::Orbit => {
            let entries = orbit();
            if json {
                emit_json(out, &json!({ "schema": SCHEMA, "orbit": entries }))
            } else {
                let mut text = format!("{:>3}  {:<12} {}\n", "N", "generator", "parity");
                for e in &entries {
                    text.push_str(&format!(
                        "{:>3}  {:<12} {}\n",
                        e.algebra,
                        e.automorphism.to_string(),
                        e.parity
                    ));
                }
                write_out(out, &text)
            }
        }
        Command::Sieve {
            expr,
            input,
            trials,
        } => run_sieve(expr, input, *trials, json, out),
        Command::Derive {
            u,
            v,
            expr,
            input,
            algebra,
            all: _,
        } => run_derive(u, v, expr, input, *algebra, json, out),
        Command::Verify { quick } => {
            let effort = if *quick { Effort::QUICK } else { Effort::FULL };
            let results = verify::run(effort);
            let passed = results.iter().filter(|r| r.passed).count();
            let all_passed = passed == results.len();
            if json {
                emit_json(
                    out,
                    &json!({
                        "schema": SCHEMA,
                        "quick": quick,
                        "checks": results,
                        "passed": passed,
                        "total": results.len(),
                    }),
                )?;
            } else {
                let mut text = String::new();
                for r in &results {
                    let tag = if r.passed { "PASS" } else { "FAIL" };
                    text.push_str(&format!("{tag} [{:02}] {}: {}\n", r.id, r.name, r.detail));
                }
                text.push_str(&format!("{passed}/{} checks passed\n", results.len()));
                write_out(out, &text)?;
            }
            Ok(if all_passed { 0 } else { 1 })
        }
    }
}

fn explicit_assignment(bindings: &[(String, Octonion)]) -> Result<Assignment> {
    let mut env = Assignment::new();
    for (name, value) in bindings {
        env.bind(name.clone(), *value)?;
    }
    Ok(env)
}

fn octonion_rows(values: &[Octonion]) -> String {
    values
        .iter()
        .enumerate()
        .map(|(k, o)| format!("  [{k:>2}] {o}\n"))
        .collect()
}

#[derive(Serialize)]
struct SieveReport<'a> {
    schema: u32,
    expr: &'a Expr,
    assignment: &'a Assignment,
    functions: &'a FunctionFamily,
    distances: [Octonion; 16],
    mean_function_value: Octonion,
    trials: usize,
    seed: Option<u64>,
    invariant: bool,
    witness: Option<&'a Witness>,
}

fn run_sieve(
    src: &str,
    input: &InputArgs,
    trials: usize,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let e = parse(src)?;
    let (env, verdict, trials) = if input.random_assign {
        let seed = input.seed.expect("clap enforces --seed");
        let verdict = is_invariant(&e, trials, seed)?;
        let env = match &verdict {
            Verdict::NotInvariant(w) => w.assignment.clone(),
            Verdict::Invariant { .. } => {
                random_assignment(&free_vars(&e), &mut seeded_rng(seed), DEFAULT_COEFF_BOUND)
            }
        };
        (env, verdict, trials)
    } else {
        let env = explicit_assignment(&input.assign)?;
        let dist = sieve(&FunctionFamily::evaluate(&e, &env)?);
        let verdict = match dist.first_nonzero_variance() {
            None => Verdict::Invariant { trials: 1 },
            Some(k) => Verdict::NotInvariant(Witness {
                trial: 0,
                assignment: env.clone(),
                distance_index: k,
                distance: dist.get(k),
            }),
        };
        (env, verdict, 1)
    };
    let functions = FunctionFamily::evaluate(&e, &env)?;
    let distances = sieve(&functions);

    if json {
        let report = SieveReport {
            schema: SCHEMA,
            expr: &e,
            assignment: &env,
            functions: &functions,
            distances: *distances.values(),
            mean_function_value: distances.mean_function_value(),
            trials,
            seed: input.seed.filter(|_| input.random_assign),
            invariant: verdict.is_invariant(),
            witness: verdict.witness(),
        };
        let value = serde_json::to_value(&report).expect("report serializes");
        return emit_json(out, &value);
    }

    let mut text = format!("expr: {e}\n");
    for (name, value) in env.iter() {
        text.push_str(&format!("{name} = {value}\n"));
    }
    text.push_str("functions f[N]:\n");
    text.push_str(&octonion_rows(functions.values()));
    text.push_str("distances g[k]:\n");
    text.push_str(&octonion_rows(distances.values()));
    text.push_str(&format!(
        "mean function value: {}\n",
        distances.mean_function_value()
    ));
    match &verdict {
        Verdict::Invariant { trials } => text.push_str(&format!(
            "invariant: no counterexample found in {trials} trial(s)\n"
        )),
        Verdict::NotInvariant(w) => text.push_str(&format!(
            "not invariant: g[{}] = {} at trial {}\n",
            w.distance_index, w.distance, w.trial
        )),
    }
    write_out(out, &text)
}

#[derive(Serialize)]
struct DeriveRow {
    algebra: AlgebraId,
    value: Octonion,
    derivation: Octonion,
}

fn run_derive(
    u: &Octonion,
    v: &Octonion,
    src: &str,
    input: &InputArgs,
    algebra: Option<i64>,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let e = parse(src)?;
    let env = if input.random_assign {
        let seed = input.seed.expect("clap enforces --seed");
        random_assignment(&free_vars(&e), &mut seeded_rng(seed), DEFAULT_COEFF_BOUND)
    } else {
        explicit_assignment(&input.assign)?
    };
    let selected = algebra.map(algebra_id).transpose()?;

    let mut rows = Vec::with_capacity(16);
    let mut equal = AlgebraSet::default();
    for n in AlgebraId::all() {
        let value = eval(&e, &env, n)?;
        let d = derive(u, v, &value, n);
        rows.push(DeriveRow {
            algebra: n,
            value,
            derivation: d,
        });
    }
    for row in &rows {
        if row.derivation == rows[0].derivation {
            equal.insert(row.algebra);
        }
    }
    let shown: Vec<&DeriveRow> = rows
        .iter()
        .filter(|r| selected.is_none_or(|n| r.algebra == n))
        .collect();

    if json {
        return emit_json(
            out,
            &json!({
                "schema": SCHEMA,
                "u": u,
                "v": v,
                "expr": e,
                "assignment": env,
                "outputs": shown,
                "equal_to_reference": equal,
                "all_equal": equal.is_full(),
            }),
        );
    }

    let mut text = format!("D_{{u,v}}({e}) with u = {u}, v = {v}\n");
    for (name, value) in env.iter() {
        text.push_str(&format!("{name} = {value}\n"));
    }
    for r in shown {
        text.push_str(&format!("  [{:>2}] {}\n", r.algebra, r.derivation));
    }
    if equal.is_full() {
        text.push_str("equal across all 16 rules\n");
    } else {
        let ids: Vec<String> = equal.iter().map(|n| n.to_string()).collect();
        text.push_str(&format!(
            "not equal across rules; matches rule 0 in {{{}}}\n",
            ids.join(",")
        ));
    }
    write_out(out, &text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["octosieve"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn octonion_literals() {
        assert_eq!(parse_octonion_literal("i3"), Ok(Octonion::basis(3)));
        assert_eq!(
            parse_octonion_literal("1,0,0,0,0,0,0,-2.5"),
            Ok(Octonion::new([1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -2.5]))
        );
        assert!(parse_octonion_literal("i8").is_err());
        assert!(parse_octonion_literal("1,2,3").is_err());
        assert!(parse_octonion_literal("1,2,3,4,5,6,7,x").is_err());
        assert!(parse_binding("3a=i1").is_err());
        assert!(parse_binding("a").is_err());
    }

    #[test]
    fn triplets_command() {
        let (code, out, _) = run_str(&["triplets", "--algebra", "1"]);
        assert_eq!(code, 0);
        assert!(out.contains("parity = ++--+--"));
    }

    #[test]
    fn bad_algebra_is_domain_error() {
        let (code, _, err) = run_str(&["tables", "--algebra", "16"]);
        assert_eq!(code, 1);
        assert!(err.contains("invalid-algebra-id"));
        let (code, _, _) = run_str(&["tables", "--algebra", "-1"]);
        assert_eq!(code, 1);
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["tables"]).0, 2);
        assert_eq!(run_str(&["sieve", "--expr", "a", "--random-assign"]).0, 2);
        assert_eq!(run_str(&["sieve", "--expr", "a", "--assign", "a=1,2"]).0, 2);
    }

    #[test]
    fn parse_failure_is_domain_error() {
        let (code, _, err) = run_str(&["sieve", "--expr", "a*"]);
        assert_eq!(code, 1);
        assert!(err.contains("syntax-error"));
        let (code, _, err) = run_str(&["sieve", "--expr", "a*b", "--assign", "a=i1"]);
        assert_eq!(code, 1);
        assert!(err.contains("unbound-variable"));
    }
}
