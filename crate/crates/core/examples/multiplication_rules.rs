//! The 16 multiplication rules: triplet sets, tables, and recovering a rule
//! from its table.
//!
//!     cargo run --example multiplication_rules

use octosieve::{identify_algebra, mul_table, multiply, triplet_set, AlgebraId, Octonion};

fn main() {
    for n in AlgebraId::all() {
        let (set, parity) = triplet_set(n);
        let listed: Vec<String> = set.triplets().iter().map(|t| t.to_string()).collect();
        println!("t[{n:>2}] {parity}  {}", listed.join(" "));
    }

    let n4 = AlgebraId::new(4).unwrap();
    println!("\nO[4]:\n{}", mul_table(n4));

    let (i1, i2) = (Octonion::basis(1), Octonion::basis(2));
    for n in [0, 4, 8, 12] {
        let n = AlgebraId::new(n).unwrap();
        println!("i1*i2 in O[{n}] = {}", multiply(&i1, &i2, n));
    }

    let a = Octonion::from_ints([1, -2, 0, 3, 1, 0, -1, 2]);
    let b = Octonion::from_ints([0, 1, 4, -1, 0, 2, 2, -3]);
    let ab = multiply(&a, &b, n4);
    println!("\n|a|^2 |b|^2 = {}", a.norm_sqr() * b.norm_sqr());
    println!("|ab|^2      = {}", ab.norm_sqr());

    let recovered = identify_algebra(&mul_table(AlgebraId::new(9).unwrap())).unwrap();
    println!("table of O[9] identified as O[{recovered}]");
}
