//! Parsing and evaluating polynomial expressions under different rules.
//! Products group to the left, so parenthesize when grouping matters.
//!
//!     cargo run --example expression_language

use octosieve::{eval, free_vars, parse, AlgebraId, Assignment, Octonion};

fn main() {
    let env = Assignment::new()
        .with("a", Octonion::basis(1))
        .with("b", Octonion::basis(2))
        .with("c", Octonion::basis(4));

    for src in ["a*b*c", "a*(b*c)", "conj(a*b) + b*a", "-a*b + 2*c"] {
        let e = parse(src).unwrap();
        println!("{src:<18} parsed as {e:<20} vars {:?}", free_vars(&e));
        for n in [0, 4, 8] {
            let n = AlgebraId::new(n).unwrap();
            println!("    O[{n}] -> {}", eval(&e, &env, n).unwrap());
        }
    }

    match parse("a * (b + ") {
        Ok(_) => unreachable!(),
        Err(err) => println!("\nparse error: {err}"),
    }
    let e = parse("a*d").unwrap();
    println!(
        "eval error: {}",
        eval(&e, &env, AlgebraId::REFERENCE).unwrap_err()
    );
}
