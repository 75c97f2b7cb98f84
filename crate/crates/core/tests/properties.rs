mod common;

use friezelab::cluster::{canonical_form, Quiver, Seed};
use friezelab::frieze::{FriezePattern, Quiddity};
use friezelab::laurent::{make_vars, Exponent, LaurentPoly, Vars};
use friezelab::rep::DimVector;
use proptest::prelude::*;

fn vars() -> Vars {
    make_vars(&["x", "y", "z"])
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::array::uniform3(-3i32..=3), -20i64..=20), 0..6).prop_map(|terms| {
        let v = vars();
        terms.into_iter().fold(LaurentPoly::zero(&v), |acc, (e, c)| {
            &acc + &LaurentPoly::monomial(&v, Exponent(e.to_vec()), c)
        })
    })
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(&vars()), a.clone());
    }

    #[test]
    fn div_exact_inverts_multiplication(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn text_and_json_round_trip(a in poly()) {
        prop_assert_eq!(LaurentPoly::parse(&a.to_string(), &vars()).unwrap(), a.clone());
        let json = serde_json::to_string(&a.to_json()).unwrap();
        prop_assert_eq!(LaurentPoly::from_json(&serde_json::from_str(&json).unwrap()).unwrap(), a);
    }

    #[test]
    fn at_ones_is_a_ring_map(a in poly(), b in poly()) {
        prop_assert_eq!((&a * &b).at_ones(), a.at_ones() * b.at_ones());
        prop_assert_eq!((&a + &b).at_ones(), a.at_ones() + b.at_ones());
    }

    #[test]
    fn dimvector_round_trip(v in prop::collection::vec(0u32..10, 1..8)) {
        let d = DimVector(v);
        prop_assert_eq!(d.to_string().parse::<DimVector>().unwrap(), d);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn surviving_friezes_satisfy_the_diamond_rule(q in prop::collection::vec(1i64..=9, 1..=6)) {
        let quiddity = Quiddity::from_ints(&q).unwrap();
        if let Ok(f) = FriezePattern::generate(&quiddity, 3 * q.len() + 1) {
            prop_assert!(f.check_diamond().is_ok());
            prop_assert!(f.check_periodicity().is_ok());
            // s_1 does not depend on the rotation of the quiddity
            let mut r = q.clone();
            r.rotate_left(1);
            let g = FriezePattern::generate(&Quiddity::from_ints(&r).unwrap(), 3 * q.len() + 1).unwrap();
            prop_assert_eq!(f.growth(1).unwrap(), g.growth(1).unwrap());
        }
    }
}

fn affine_seed_and_word(max_len: usize) -> impl Strategy<Value = (Quiver, Vec<usize>)> {
    (0..common::affine_quivers().len()).prop_flat_map(move |i| {
        let q = common::affine_quivers().swap_remove(i);
        let n = q.size();
        (Just(q), prop::collection::vec(0..n, 0..=max_len))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn mutation_is_an_involution((q, word) in affine_seed_and_word(4), k in 0usize..9) {
        let seed = Seed::initial(&q).mutate_word(&word).unwrap();
        let k = k % q.size();
        prop_assert_eq!(seed.mutate(k).unwrap().mutate(k).unwrap(), seed.clone());
        prop_assert_eq!(canonical_form(seed.quiver()), canonical_form(&seed.quiver().mutate(k).unwrap().mutate(k).unwrap()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cluster_variables_are_positive_laurent_polynomials((q, word) in affine_seed_and_word(10)) {
        let seed = Seed::initial(&q).mutate_word(&word).unwrap();
        for v in seed.vars() {
            prop_assert!(v.all_coefficients_positive(), "{} after {:?}", v, word);
        }
    }
}

#[test]
fn seeded_diamond_suite() {
    common::diamond_on_random_quiddities(100).unwrap();
}

#[test]
fn seeded_involution_suite() {
    common::involutivity(500).unwrap();
}

#[test]
fn seeded_laurent_suite() {
    common::laurent_exactness(200).unwrap();
}

#[test]
fn held_out_prime_on_every_fixture() {
    assert!(common::held_out_primes().unwrap() > 0);
}
