//! Lucas-theorem routines against Pascal's triangle mod p.

use charp_core::lucas::{binom_mod_p, binom_nonzero, digits_base_p, multinomial_mod_p, multinomial_nonzero};
use proptest::prelude::*;

const LIMIT: usize = 300;

fn pascal(p: u64) -> Vec<Vec<u64>> {
    let mut rows: Vec<Vec<u64>> = vec![vec![1 % p]];
    for m in 1..=LIMIT {
        let prev = &rows[m - 1];
        let mut row = vec![0; m + 1];
        row[0] = 1 % p;
        row[m] = 1 % p;
        for k in 1..m {
            row[k] = (prev[k - 1] + prev[k]) % p;
        }
        rows.push(row);
    }
    rows
}

#[test]
fn exhaustive_against_pascal() {
    for p in [2u64, 3, 5, 7, 13] {
        let table = pascal(p);
        for m in 0..=LIMIT {
            for n in 0..=LIMIT {
                let expect = if n <= m { table[m][n] } else { 0 };
                assert_eq!(binom_mod_p(m as u64, n as u64, p), expect, "C({m},{n}) mod {p}");
                assert_eq!(binom_nonzero(m as u64, n as u64, p), expect != 0, "C({m},{n}) mod {p}");
            }
        }
    }
}

proptest! {
    #[test]
    fn digits_reconstruct(m in any::<u64>(), p in prop::sample::select(vec![2u64, 3, 5, 7, 13, 1_000_003])) {
        let d = digits_base_p(m, p);
        prop_assert_eq!(d.value(), m as u128);
        prop_assert!(d.digits().iter().all(|&x| x < p));
        prop_assert!(d.digits().last().is_none_or(|&x| x != 0));
    }

    #[test]
    fn multinomial_nonzero_matches_product(parts in prop::collection::vec(0u64..200, 1..5), p in prop::sample::select(vec![2u64, 3, 5, 7, 13])) {
        let m: u64 = parts.iter().sum();
        let value = multinomial_mod_p(m, &parts, p).unwrap();
        prop_assert_eq!(multinomial_nonzero(m, &parts, p).unwrap(), value != 0);
        prop_assert!(multinomial_nonzero(m + 1, &parts, p).is_err());
    }
}
