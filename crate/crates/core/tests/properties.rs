use octosieve::algebra::triplet_set;
use octosieve::*;
use proptest::prelude::*;

fn int_octonion(bound: i64) -> impl Strategy<Value = Octonion> {
    prop::array::uniform8(-bound..=bound).prop_map(Octonion::from_ints)
}

fn algebra() -> impl Strategy<Value = AlgebraId> {
    (0u8..16).prop_map(|n| AlgebraId::new(n).unwrap())
}

fn expr_tree() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        prop::sample::select(vec!["a", "b", "c", "x_1"]).prop_map(Expr::var),
        (0u32..1000).prop_map(|n| Expr::Const(f64::from(n) / 4.0)),
    ];
    leaf.prop_recursive(5, 48, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Expr::add(l, r)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Expr::sub(l, r)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Expr::mul(l, r)),
            inner.clone().prop_map(Expr::neg),
            inner.prop_map(Expr::conj),
        ]
    })
}

proptest! {
    #[test]
    fn norm_is_multiplicative(a in int_octonion(1024), b in int_octonion(1024), n in algebra()) {
        prop_assert_eq!(multiply(&a, &b, n).norm_sqr(), a.norm_sqr() * b.norm_sqr());
    }

    #[test]
    fn every_rule_is_alternative(a in int_octonion(50), b in int_octonion(50), n in algebra()) {
        let aa = multiply(&a, &a, n);
        prop_assert_eq!(multiply(&aa, &b, n), multiply(&a, &multiply(&a, &b, n), n));
        let bb = multiply(&b, &b, n);
        prop_assert_eq!(multiply(&a, &bb, n), multiply(&multiply(&a, &b, n), &b, n));
    }

    #[test]
    fn conjugate_times_self_is_norm(a in int_octonion(1024), n in algebra()) {
        prop_assert_eq!(multiply(&a.conjugate(), &a, n), Octonion::real(a.norm_sqr()));
    }

    #[test]
    fn inverse_is_two_sided(a in int_octonion(100), n in algebra()) {
        prop_assume!(!a.is_zero());
        let inv = inverse(&a, n).unwrap();
        prop_assert!((multiply(&inv, &a, n) - Octonion::ONE).norm() < 1e-12);
        prop_assert!((multiply(&a, &inv, n) - Octonion::ONE).norm() < 1e-12);
    }

    #[test]
    fn parse_print_round_trip(e in expr_tree()) {
        let printed = e.to_string();
        prop_assert_eq!(parse(&printed).unwrap(), e);
    }

    #[test]
    fn sieve_is_an_involution(values in prop::array::uniform16(int_octonion(1024))) {
        let fam = FunctionFamily::new(values);
        prop_assert_eq!(unsieve(&sieve(&fam)), fam);
        let dist = DistanceFamily::new(values);
        prop_assert_eq!(sieve(&unsieve(&dist)), dist);
    }

    #[test]
    fn derive_is_antisymmetric_and_imaginary(
        u in int_octonion(20), v in int_octonion(20), a in int_octonion(20), n in algebra()
    ) {
        let d = derive(&u, &v, &a, n);
        prop_assert_eq!(d, -derive(&v, &u, &a, n));
        prop_assert_eq!(d.real_part(), 0.0);
        prop_assert_eq!(derive(&u, &v, &Octonion::ONE, n), Octonion::ZERO);
    }

    #[test]
    fn automorphism_action_is_free(m1 in 0u8..16, m2 in 0u8..16) {
        let a = Automorphism::from_mask(m1).unwrap();
        let b = Automorphism::from_mask(m2).unwrap();
        let t0 = TripletSet::reference();
        prop_assert_eq!(apply(a, &t0) == apply(b, &t0), m1 == m2);
        prop_assert_eq!(apply(b, &apply(a, &t0)), apply(compose(a, b), &t0));
    }
}

#[test]
fn associative_triplets_associate() {
    for n in AlgebraId::all() {
        for t in triplet_set(n).0.triplets() {
            let [l, m, k] = t.indices().map(usize::from);
            let (il, im, ik) = (Octonion::basis(l), Octonion::basis(m), Octonion::basis(k));
            assert_eq!(multiply(&il, &im, n), ik);
            assert_eq!(
                multiply(&multiply(&il, &im, n), &ik, n),
                multiply(&il, &multiply(&im, &ik, n), n)
            );
        }
    }
}

#[test]
fn nonassociativity_is_observable_in_every_rule() {
    // witness: a = i1, b = i2, c = i4
    let left = parse("(a*b)*c").unwrap();
    let right = parse("a*(b*c)").unwrap();
    let env = Assignment::new()
        .with("a", Octonion::basis(1))
        .with("b", Octonion::basis(2))
        .with("c", Octonion::basis(4));
    for n in AlgebraId::all() {
        let diff = eval(&left, &env, n).unwrap() - eval(&right, &env, n).unwrap();
        assert_eq!(diff.norm(), 2.0);
    }
}

#[test]
fn parity_words_pairwise_distinct() {
    let mut words: Vec<ParityWord> = AlgebraId::all().map(|n| triplet_set(n).1).collect();
    words.sort();
    words.dedup();
    assert_eq!(words.len(), 16);
}
