mod common;

use galcount::fieldcount::{
    biquadratic_fields, biquadratic_tally, count_biquadratic, count_cyclic_ell, count_quadratic, cyclic_conductors,
    cyclic_tally, fundamental_discriminants, ingest_census, quadratic_tally, tally_samples, DiscriminantTally,
};
use galcount::ntsieves::powerful_sieve;

const X: u64 = 100_000;

fn expand(tally: &DiscriminantTally) -> Vec<u64> {
    tally.entries().iter().flat_map(|&(d, n)| std::iter::repeat(d).take(n as usize)).collect()
}

fn assert_all_cutoffs(tally: &DiscriminantTally, oracle: &[u64]) {
    for x in 1..=X {
        assert_eq!(tally.count_upto(x), common::count_upto(oracle, x), "x = {x}");
    }
}

#[test]
fn oracle_self_checks() {
    assert_eq!(common::fundamental_discriminants(10), [-3, -4, 5, -7, -8, 8]);
    assert_eq!(common::cyclic_fields_of_conductor(3, 63), 2);
    assert_eq!(common::cyclic_fields_of_conductor(3, 9), 1);
    assert_eq!(common::cyclic_fields_of_conductor(3, 3), 0);
    assert_eq!(common::cyclic_fields_of_conductor(5, 25), 1);
    assert_eq!(common::biquadratic_discs(256), [144, 225, 256]);
    assert_eq!(common::schreier_order(3, &[vec![1, 0, 2], vec![1, 2, 0]]), 6);
    assert_eq!(common::cycle_count(&[1, 0, 2, 3]), 3);
    assert!(common::is_powerful(2, 72) && !common::is_powerful(2, 12) && common::is_powerful(3, 1));
}

#[test]
fn quadratic_matches_two_case_scan() {
    let oracle = common::quadratic_discs(X);
    let tally = quadratic_tally(X);
    assert_eq!(expand(&tally), oracle);
    assert_all_cutoffs(&tally, &oracle);
    for x in [1, 2, 3, 4, 10, 99, 1000, 54_321] {
        assert_eq!(count_quadratic(x), common::count_upto(&oracle, x));
    }
    assert_eq!(fundamental_discriminants(2000), common::fundamental_discriminants(2000));
}

#[test]
fn cubic_matches_character_count() {
    let oracle = common::cyclic_discs(3, X);
    let tally = cyclic_tally(3, X).unwrap();
    assert_eq!(expand(&tally), oracle);
    assert_all_cutoffs(&tally, &oracle);
    for x in [48, 49, 81, 3969, 99_999] {
        assert_eq!(count_cyclic_ell(3, x).unwrap(), common::count_upto(&oracle, x));
    }
}

#[test]
fn conductor_multiplicities_match_character_count() {
    for ell in [3, 5, 7] {
        for e in cyclic_conductors(ell, 2000).unwrap() {
            assert_eq!(e.multiplicity, common::cyclic_fields_of_conductor(ell, e.f), "ell {ell}, f {}", e.f);
        }
        let listed: Vec<u64> = cyclic_conductors(ell, 2000).unwrap().iter().map(|e| e.f).collect();
        for f in 2..=2000 {
            let has_fields = common::cyclic_fields_of_conductor(ell, f) > 0;
            assert_eq!(listed.binary_search(&f).is_ok(), has_fields, "ell {ell}, f {f}");
        }
    }
}

#[test]
fn biquadratic_matches_pair_enumeration() {
    let oracle = common::biquadratic_discs(X);
    let tally = biquadratic_tally(X);
    assert_eq!(expand(&tally), oracle);
    assert_all_cutoffs(&tally, &oracle);
    let mut fields: Vec<[i64; 3]> = biquadratic_fields(X)
        .into_iter()
        .map(|mut t| {
            t.sort();
            t
        })
        .collect();
    fields.sort();
    assert_eq!(fields, common::biquadratic_fields(X).into_iter().collect::<Vec<_>>());
    assert_eq!(count_biquadratic(256), 3);
}

#[test]
fn cyclic_discriminants_are_powerful() {
    for (ell, x) in [(3u64, 1_000_000u64), (5, 10_000_000), (7, 10_000_000)] {
        let k = ell as u32 - 1;
        let sieve = powerful_sieve(k, x as usize);
        let tally = cyclic_tally(ell, x).unwrap();
        for &(d, _) in tally.entries() {
            assert!(sieve.get(d as usize), "C{ell} discriminant {d} is not {k}-powerful");
            assert!(common::is_powerful(k, d));
        }
    }
}

#[test]
fn smallest_cyclic_discriminants() {
    assert_eq!(count_cyclic_ell(3, 48).unwrap(), 0);
    assert_eq!(count_cyclic_ell(5, 11u64.pow(4) - 1).unwrap(), 0);
    assert_eq!(count_cyclic_ell(5, 11u64.pow(4)).unwrap(), 1);
}

#[test]
fn counts_are_monotone() {
    let q = quadratic_tally(X);
    let c = cyclic_tally(3, X).unwrap();
    let b = biquadratic_tally(X);
    for t in [&q, &c, &b] {
        let grid: Vec<u64> = (1..=X).step_by(37).collect();
        let samples = tally_samples(t, &grid).unwrap();
        assert!(samples.windows(2).all(|w| w[0].1 <= w[1].1), "{}", t.label());
    }
}

#[test]
fn census_tally_matches_direct_count() {
    let mut text = String::from("degree,group,abs_disc\n");
    for &(d, n) in cyclic_tally(3, X).unwrap().entries() {
        for _ in 0..n {
            text += &format!("3,C3,{d}\n");
        }
    }
    for &(d, n) in quadratic_tally(1000).entries() {
        for _ in 0..n {
            text += &format!("2,C2,{d}\n");
        }
    }
    let map = ingest_census(text.as_bytes()).unwrap();
    assert_eq!(map["C3"].entries(), cyclic_tally(3, X).unwrap().entries());
    assert_eq!(map["C2"].total(), count_quadratic(1000));
}
