//! Hand-computed values for small cases, independent of the affine fixtures.

use friezelab::cc::cc_map;
use friezelab::chebyshev::{chebyshev_s, chebyshev_t};
use friezelab::cluster::{mutation_class, Quiver, Seed};
use friezelab::frieze::{FriezePattern, GrowthClass, Quiddity};
use friezelab::laurent::{make_vars, LaurentPoly};
use friezelab::rep::{euler_characteristic, grassmannian_table, subspaces, ArrowMap, DimVector, QuiverRep};
use num_bigint::BigInt;
use std::collections::BTreeMap;

fn int(x: i64) -> BigInt {
    BigInt::from(x)
}

#[test]
fn chebyshev_small_values() {
    let t: Vec<BigInt> = (0..5).map(|k| chebyshev_t(k, &int(3))).collect();
    assert_eq!(t, [2, 3, 7, 18, 47].map(int));
    assert_eq!(chebyshev_s(3, &int(3)), int(21));
    assert_eq!(chebyshev_s(-1, &int(3)), int(0));
    // T_k(2) = 2 for every k: the boundary of the arithmetic growth class
    assert!((0..20).all(|k| chebyshev_t(k, &int(2)) == int(2)));
}

#[test]
fn period_one_friezes() {
    let f = FriezePattern::generate(&Quiddity::from_ints(&[3]).unwrap(), 6).unwrap();
    let diag: Vec<BigInt> = (1..=6).map(|r| f.row(r)[0].clone()).collect();
    assert_eq!(diag, [3, 8, 21, 55, 144, 377].map(int));
    assert_eq!(f.growth(1).unwrap(), int(3));
    assert_eq!(f.classify_growth().unwrap(), GrowthClass::AffineFast);

    let g = FriezePattern::generate(&Quiddity::from_ints(&[2]).unwrap(), 8).unwrap();
    assert!((1..=8).all(|r| g.row(r)[0] == int(r as i64 + 1)));
    assert_eq!(g.classify_growth().unwrap(), GrowthClass::ArithmeticLike);
}

#[test]
fn laurent_arithmetic_by_hand() {
    let v = make_vars(&["x", "y"]);
    let p = LaurentPoly::parse("x + y^-1", &v).unwrap();
    let sq = &p * &p;
    assert_eq!(sq, LaurentPoly::parse("x^2 + 2*x*y^-1 + y^-2", &v).unwrap());
    assert_eq!(sq.div_exact(&p).unwrap(), p);
    assert!(LaurentPoly::parse("x + 1", &v).unwrap().div_exact(&LaurentPoly::parse("y + 1", &v).unwrap()).is_err());
    assert_eq!(sq.at_ones(), int(4));
}

#[test]
fn a2_seed_has_period_five() {
    let q = Quiver::from_arrows(&["1", "2"], &[(0, 1)]).unwrap();
    let start = Seed::initial(&q);
    let mut s = start.clone();
    let v = start.ring().clone();
    let mut seen = Vec::new();
    for step in 0..5 {
        s = s.mutate(step % 2).unwrap();
        seen.push(s.var(step % 2).clone());
    }
    assert_eq!(seen[0], LaurentPoly::parse("x1^-1 + x1^-1*x2", &v).unwrap());
    assert_eq!(seen[1], LaurentPoly::parse("x2^-1 + x1^-1*x2^-1 + x1^-1", &v).unwrap());
    // five mutations return the variables with the two positions swapped
    assert_eq!(s.var(0), start.var(1));
    assert_eq!(s.var(1), start.var(0));
}

#[test]
fn kronecker_variables() {
    let q = Quiver::from_arrows(&["1", "2"], &[(0, 1), (0, 1)]).unwrap();
    let s = Seed::initial(&q).mutate(0).unwrap();
    let v = s.ring().clone();
    assert_eq!(s.var(0), &LaurentPoly::parse("x1^-1 + x1^-1*x2^2", &v).unwrap());
    let s = s.mutate(1).unwrap();
    assert_eq!(s.var(1).at_ones(), int(5));
    assert_eq!(s.var(1).nterms(), 4);
}

#[test]
fn finite_mutation_classes() {
    let a3 = Quiver::from_arrows(&["1", "2", "3"], &[(0, 1), (1, 2)]).unwrap();
    assert_eq!(mutation_class(&a3, &[], 100).unwrap().len(), 4);
    let d4 = Quiver::from_arrows(&["1", "2", "3", "4"], &[(0, 1), (2, 1), (3, 1)]).unwrap();
    // four orientations of the star, two triangles glued along an edge, the oriented 4-cycle
    assert_eq!(mutation_class(&d4, &[], 100).unwrap().len(), 6);
    let e6 = Quiver::from_arrows(&["1", "2", "3", "4", "5", "6"], &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]).unwrap();
    assert_eq!(mutation_class(&e6, &[], 1000).unwrap().len(), 67);
}

#[test]
fn subspace_counts_are_gaussian_binomials() {
    // [4 choose 2]_q = 1 + q + 2q^2 + q^3 + q^4
    for p in [2u64, 3, 5] {
        let expected = 1 + p + 2 * p * p + p.pow(3) + p.pow(4);
        assert_eq!(subspaces(4, 2, p) as u64, expected);
    }
    assert_eq!(subspaces(3, 0, 7), 1);
    assert_eq!(subspaces(3, 3, 7), 1);
}

fn a2_rep(dims: [u32; 2], matrix: Vec<Vec<i64>>) -> QuiverRep {
    let q = Quiver::from_arrows(&["1", "2"], &[(0, 1)]).unwrap();
    QuiverRep::new(q, DimVector(dims.to_vec()), vec![ArrowMap { tail: 0, head: 1, matrix }], BTreeMap::new()).unwrap()
}

#[test]
fn grassmannians_of_a2_modules() {
    let p12 = a2_rep([1, 1], vec![vec![1]]);
    let table = grassmannian_table(&p12, None).unwrap();
    let rows: Vec<(String, BigInt)> = table.rows.iter().map(|r| (r.e.to_string(), r.chi.clone())).collect();
    // (1,0) is not a subrepresentation since the map is nonzero
    assert_eq!(rows, vec![("(0,0)".into(), int(1)), ("(0,1)".into(), int(1)), ("(1,1)".into(), int(1))]);

    let free = a2_rep([2, 0], vec![]);
    let (chi, poly) = euler_characteristic(&free, &DimVector(vec![1, 0]), &[3, 5, 7]).unwrap();
    assert_eq!(chi, int(2));
    assert_eq!(poly.coefficients, vec![int(1), int(1)]);
}

#[test]
fn cc_values_of_a2_modules() {
    let v = make_vars(&["x1", "x2"]);
    let s2 = a2_rep([0, 1], vec![vec![]]);
    assert_eq!(cc_map(&s2).unwrap().laurent, LaurentPoly::parse("x2^-1 + x1*x2^-1", &v).unwrap());
    let p = a2_rep([1, 1], vec![vec![1]]);
    assert_eq!(cc_map(&p).unwrap().laurent, LaurentPoly::parse("x1^-1*x2^-1 + x1^-1 + x2^-1", &v).unwrap());
}
