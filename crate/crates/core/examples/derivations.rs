//! Inner derivations D_{u,v}(a) = [[u,v],a] - 3((uv)a - u(va)) compared
//! across the 16 rules.
//!
//!     cargo run --example derivations

use octosieve::derivation::{all_basis_pairs, restricted_span_rank};
use octosieve::{
    antiassoc_closed_form, cross_algebra_equal, derivation_span_rank, derive,
    expr_cross_algebra_equal, parse, AlgebraId, Octonion,
};

fn main() {
    let i = Octonion::basis;
    let n0 = AlgebraId::REFERENCE;

    println!("D_(i1,i2)(i3) = {}", derive(&i(1), &i(2), &i(3), n0));
    println!("D_(i1,i2)(i4) = {}", derive(&i(1), &i(2), &i(4), n0));

    let r = antiassoc_closed_form(1, 2, 4, n0).unwrap();
    println!(
        "closed form -2(uv)a = {}  holds: {}",
        r.closed_form, r.holds
    );

    for a in [3, 4, 7] {
        let set = cross_algebra_equal(&i(1), &i(2), &i(a));
        let ids: Vec<u8> = set.iter().map(AlgebraId::get).collect();
        println!("D_(i1,i2)(i{a}) equals rule 0 in {ids:?}");
    }

    for n in [0, 7, 15] {
        let n = AlgebraId::new(n).unwrap();
        let full = derivation_span_rank(&all_basis_pairs(), n).unwrap();
        let quat = restricted_span_rank(&[(1, 2), (1, 3), (2, 3)], n, &[1, 2, 3]).unwrap();
        println!("O[{n}]: span of all D_(ip,iq) has dim {full}; on the {{1,2,3}} line, {quat}");
    }

    for src in ["a", "a*b", "3"] {
        let report = expr_cross_algebra_equal(1, 2, &parse(src).unwrap(), 32, 11).unwrap();
        let agreeing: Vec<u8> = report
            .quaternionic
            .agreeing
            .iter()
            .map(AlgebraId::get)
            .collect();
        println!(
            "f = {src:<4} quaternionic inputs: all equal {} (agreeing {agreeing:?}); generic inputs: all equal {}",
            report.quaternionic.all_equal, report.generic.all_equal
        );
    }
}
