use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::motif::MotifKind;

fn m(kind: MotifKind, k: u32) -> MotifSpec {
    MotifSpec::new(kind, k).unwrap()
}

/// Pascal-free binomial for the oracle side.
fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::from(0);
    }
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

fn int_of(r: &BoundReport) -> i64 {
    r.integer().unwrap().try_into().unwrap()
}

#[test]
fn turan_examples() {
    let r = ex_value(m(MotifKind::LoosePath, 5), 10, 3).unwrap();
    assert_eq!((int_of(&r), r.bound_type), (64, BoundType::AsymptoticExact));
    let r = ex_value(m(MotifKind::LinearPath, 4), 10, 3).unwrap();
    assert_eq!((int_of(&r), r.bound_type), (43, BoundType::AsymptoticExact));
    let r = ex_value(m(MotifKind::LooseCycle, 4), 10, 3).unwrap();
    assert_eq!((int_of(&r), r.bound_type), (39, BoundType::AsymptoticExact));
}

#[test]
fn short_linear_path_with_three_uniform_edges_is_only_bounded() {
    let r = ex_value(m(MotifKind::LinearPath, 2), 12, 3).unwrap();
    assert_eq!(r.bound_type, BoundType::UpperBound);
    assert_eq!(int_of(&r), 12);
    assert_eq!(ex_value(m(MotifKind::LooseCycle, 3), 10, 3).unwrap_err().kind(), "not-covered");
}

#[test]
fn anti_ramsey_examples() {
    let r = ar_value(m(MotifKind::LinearPath, 2), 5, 3).unwrap();
    assert_eq!((int_of(&r), r.bound_type), (2, BoundType::Exact));
    let r = ar_value(m(MotifKind::LinearPath, 4), 10, 3).unwrap();
    assert_eq!((int_of(&r), r.bound_type), (38, BoundType::AsymptoticExact));
    let r = ar_value(m(MotifKind::LoosePath, 5), 10, 3).unwrap();
    assert_eq!((int_of(&r), r.bound_type), (39, BoundType::AsymptoticExact));
}

#[test]
fn anti_ramsey_gaps_are_not_covered() {
    for (kind, k, n, s) in [
        (MotifKind::LinearPath, 5, 30, 4),
        (MotifKind::LinearPath, 7, 30, 3),
        (MotifKind::LinearPath, 2, 4, 3),
        (MotifKind::LinearCycle, 6, 30, 4),
        (MotifKind::BergePath, 7, 30, 3),
    ] {
        let err = ar_value(m(kind, k), n, s).unwrap_err();
        assert_eq!(err.kind(), "not-covered", "{kind}:{k}");
    }
}

#[test]
fn odd_linear_value_adds_a_book() {
    let (n, s, t) = (40i64, 5i64, 3i64);
    let r = ar_value(m(MotifKind::LinearPath, 7), 40, 5).unwrap();
    let want = binom(n, s) - binom(n - t + 1, s) + binom(n - t - 1, s - 2) + 2;
    assert_eq!(r.integer().unwrap(), want);
}

#[test]
fn berge_path_bounds() {
    let (lo, hi) = berge_ar_bounds(MotifKind::BergePath, 70, 3, 7, None).unwrap();
    assert_eq!(lo.value, rat(35, 1));
    assert_eq!(hi.value, rat(703, 3));
    let (lo, hi) = berge_ar_bounds(MotifKind::BergePath, 30, 3, 4, None).unwrap();
    assert_eq!(lo.value, rat(15, 2));
    assert_eq!(hi.value, rat(16, 1));
    // Full blocks once k > 2s+1: 2n/k * C(k/2, s).
    let (lo, _) = berge_ar_bounds(MotifKind::BergePath, 16, 3, 9, None).unwrap();
    assert_eq!(lo.value, rat(2 * 16 * 4, 9));
    assert_eq!(floor(&lo.value), BigInt::from(14));
    assert!(berge_ar_bounds(MotifKind::BergePath, 30, 3, 1, None).is_err());
}

#[test]
fn berge_cycle_bounds() {
    let (lo, hi) = berge_ar_bounds(MotifKind::BergeCycle, 30, 4, 6, Some(BigInt::from(100))).unwrap();
    assert_eq!(lo.value, rat(102, 1));
    assert_eq!(hi.value, rat(106, 1));
    assert!(berge_ar_bounds(MotifKind::BergeCycle, 30, 3, 6, None).is_err());
}

#[test]
fn erdos_matching_examples() {
    assert_eq!(int_of(&erdos_matching_value(10, 3, 2).unwrap()), 36);
    assert_eq!(int_of(&erdos_matching_value(6, 3, 2).unwrap()), 10);
    // n = sk: the clique branch C(sk-1, s) = C(8,3) beats the star.
    assert_eq!(int_of(&erdos_matching_value(9, 3, 3).unwrap()), 56);
    assert_eq!(erdos_matching_value(8, 2, 3).unwrap().bound_type, BoundType::Exact);
    assert!(erdos_matching_value(5, 3, 2).is_err());
}

#[test]
fn sandwich_examples() {
    assert!(sandwich_check(2, 4));
    assert!(!sandwich_check(6, 4));
    assert!(!sandwich_check(1, 4));
}

#[test]
fn report_json_keeps_rationals_exact() {
    let (_, hi) = berge_ar_bounds(MotifKind::BergePath, 70, 3, 7, None).unwrap();
    let text = serde_json::to_string(&hi).unwrap();
    assert!(text.contains(r#""value":"703/3""#), "{text}");
    assert!(text.contains(r#""bound_type":"upper-bound""#), "{text}");
    let back: BoundReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, hi);
}

#[test]
fn huge_hosts_do_not_overflow() {
    let r = ar_value(m(MotifKind::LinearPath, 10), 1_000_000, 6).unwrap();
    let n = 1_000_000i64;
    assert_eq!(r.integer().unwrap(), binom(n, 6) - binom(n - 4, 6) + 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn even_linear_and_loose_values_agree(n in 20u32..1_000_000, s in 3u32..8, t in 2u32..8) {
        let k = 2 * t;
        let a = ar_value(m(MotifKind::LinearPath, k), n, s).unwrap();
        let b = ar_value(m(MotifKind::LoosePath, k), n, s).unwrap();
        prop_assert_eq!(a.value, b.value);
    }

    #[test]
    fn cycle_values_match_paths(n in 40u32..1_000_000, s in 4u32..20, t in 4u32..8) {
        let k = 2 * t;
        for (cycle, path) in [(MotifKind::LinearCycle, MotifKind::LinearPath), (MotifKind::LooseCycle, MotifKind::LoosePath)] {
            let c = ar_value(m(cycle, k), n, s).unwrap();
            let p = ar_value(m(path, k), n, s).unwrap();
            prop_assert_eq!(c.value, p.value);
        }
        let k = 2 * t + 3;
        if s >= k + 3 {
            let c = ar_value(m(MotifKind::LinearCycle, k), n, s).unwrap();
            let p = ar_value(m(MotifKind::LinearPath, k), n, s).unwrap();
            prop_assert_eq!(c.value, p.value);
        }
    }

    #[test]
    fn even_values_are_star_plus_two(n in 20u32..200, s in 3u32..6, t in 2u32..5) {
        let (ni, si, ti) = (n as i64, s as i64, t as i64);
        let r = ar_value(m(MotifKind::LoosePath, 2 * t), n, s).unwrap();
        prop_assert_eq!(r.integer().unwrap(), binom(ni, si) - binom(ni - ti + 1, si) + 2);
        let odd = ar_value(m(MotifKind::LoosePath, 2 * t + 1), n, s).unwrap();
        prop_assert_eq!(odd.integer().unwrap(), binom(ni, si) - binom(ni - ti + 1, si) + 3);
    }

    #[test]
    fn matching_star_dominates_for_pairs(s in 2u32..7, extra in 0u32..50) {
        let n = 3 * s + extra;
        let r = erdos_matching_value(n, s, 2).unwrap();
        let (ni, si) = (n as i64, s as i64);
        prop_assert_eq!(r.integer().unwrap(), binom(ni, si) - binom(ni - 1, si));
    }

    #[test]
    fn berge_bounds_are_ordered(n in 30u32..2000, s in 3u32..6, k in 2u32..16) {
        let (lo, hi) = berge_ar_bounds(MotifKind::BergePath, n, s, k, None).unwrap();
        prop_assert!(lo.value <= hi.value);
    }
}
