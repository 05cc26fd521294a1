//! Parity-flip automorphisms, the orbit of the reference rule, and the Fano
//! plane formed by the combinations of T1, T2, T3.
//!
//!     cargo run --example automorphism_orbit

use octosieve::{chirality, fano_lines, flip_pattern, orbit, Automorphism};

fn main() {
    for j in 0..4 {
        let t = Automorphism::generator(j);
        let flags: String = flip_pattern(t)
            .flags()
            .iter()
            .map(|&f| if f { "sw " } else { "id " })
            .collect();
        println!("T{j}: {flags}");
    }

    println!();
    for e in orbit() {
        println!(
            "O[{:>2}] {:<12} {}  {:?}",
            e.algebra,
            e.automorphism.to_string(),
            e.parity,
            chirality(e.algebra)
        );
    }

    println!("\nFano lines of <T1, T2, T3>:");
    for [a, b, c] in fano_lines() {
        println!("  {{{a}, {b}, {c}}}   {a} o {b} = {}", a.compose(b));
    }
}
