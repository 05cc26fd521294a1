//! The variance sieve: evaluate a polynomial under all 16 rules, transform
//! with the sign matrix, and test whether the non-constant distances vanish.
//!
//!     cargo run --example variance_sieve [EXPR]

use octosieve::sampling::{random_assignment, seeded_rng};
use octosieve::{free_vars, is_invariant, parse, sieve, unsieve, FunctionFamily, SignMatrix};

fn main() {
    let m = SignMatrix::new();
    println!("sign matrix:");
    for k in 0..16 {
        let row: String = m
            .row(k)
            .iter()
            .map(|&s| if s > 0 { '+' } else { '-' })
            .collect();
        println!("  {row}");
    }

    let user = std::env::args().nth(1);
    let exprs: Vec<&str> = match &user {
        Some(e) => vec![e.as_str()],
        None => vec![
            "a+b",
            "a*a",
            "a*b + b*a",
            "a*b",
            "conj(a)*a",
            "(a*b)*c - a*(b*c)",
        ],
    };

    for src in exprs {
        let e = match parse(src) {
            Ok(e) => e,
            Err(err) => {
                eprintln!("{src}: {err}");
                continue;
            }
        };
        let env = random_assignment(&free_vars(&e), &mut seeded_rng(1), 9);
        let fam = FunctionFamily::evaluate(&e, &env).unwrap();
        let dist = sieve(&fam);
        assert_eq!(unsieve(&dist), fam);

        let nonzero: Vec<usize> = (1..16).filter(|&k| !dist.get(k).is_zero()).collect();
        let verdict = is_invariant(&e, 64, 7).unwrap();
        println!(
            "\n{src}\n  mean value {}\n  nonzero g[k], k>0: {nonzero:?}\n  invariant: {}",
            dist.mean_function_value(),
            verdict.is_invariant()
        );
        if let Some(w) = verdict.witness() {
            println!(
                "  witness: trial {}, g[{}] = {}",
                w.trial, w.distance_index, w.distance
            );
        }
    }
}
