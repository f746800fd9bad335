use std::collections::HashSet;

use rescodes_core::field::{make_field, subgroup_of_order};
use rescodes_core::lattice::{make_context, LatticeKind};
use rescodes_core::weight::enumerate_weight_ball;
use rescodes_core::{FieldElement, PrimeField, WeightTable};

fn primes_below(n: u64) -> Vec<u64> {
    (3..n).filter(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)).collect()
}

fn table(p: u64, m: u32) -> WeightTable {
    let f = make_field(p).unwrap();
    WeightTable::new(&subgroup_of_order(&f, m).unwrap())
}

#[test]
fn weight_table_invariants() {
    for p in primes_below(200) {
        let f = make_field(p).unwrap();
        for m in (2..p as u32).step_by(2).filter(|m| (p as u32 - 1) % m == 0) {
            let t = WeightTable::new(&subgroup_of_order(&f, m).unwrap());
            let e = t.subgroup();
            assert!(t.weight(f.zero()) == 0);
            let mut total = 0;
            for w in 0..=t.max_weight() {
                total += t.shell(w).len();
                assert!(t.shell(w).iter().all(|&x| t.weight(x) == w));
            }
            assert_eq!(total, p as usize);
            for x in f.elements() {
                assert_eq!(t.weight(x) == 1, e.contains(x));
                assert_eq!(t.weight(x), t.weight(-x));
                for &u in e.elements() {
                    // multiplying by a unit is an isometry, adding one moves by at most 1
                    assert_eq!(t.weight(x * u), t.weight(x));
                    assert!(t.weight(x + u).abs_diff(t.weight(x)) <= 1);
                }
                if let Some(w) = t.w_prime(x) {
                    assert!(t.weight(x) <= w, "p={p} m={m}");
                }
            }
        }
    }
}

#[test]
fn lee_and_hamming_extremes() {
    for p in [5u64, 7, 11, 13] {
        let lee = table(p, 2);
        let ham = table(p, p as u32 - 1);
        let f = lee.field();
        for x in f.elements() {
            assert_eq!(lee.weight(x) as i64, x.value().abs());
            assert_eq!(ham.weight(x), u32::from(!x.is_zero()));
        }
    }
}

#[test]
fn restricted_weight_matches_quotient_weight() {
    for p in [13u64, 29, 37] {
        let ctx = make_context(p, LatticeKind::Gaussian).unwrap();
        assert!(table(p, 4).matches_quotient_weight(&ctx).unwrap());
    }
    for p in [7u64, 13, 19, 31] {
        let ctx = make_context(p, LatticeKind::Eisenstein).unwrap();
        assert!(table(p, 6).matches_quotient_weight(&ctx).unwrap());
    }
}

fn all_vectors(f: &PrimeField, n: usize) -> Vec<Vec<FieldElement>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                f.elements().map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

#[test]
fn ball_enumeration_matches_exhaustive_count() {
    for (p, m, n) in [(5u64, 2u32, 3usize), (5, 4, 3), (7, 6, 3), (13, 4, 2), (11, 2, 3)] {
        let t = table(p, m);
        let f = *t.field();
        let everything = all_vectors(&f, n);
        for radius in 0..=4 {
            let expected: HashSet<Vec<FieldElement>> =
                everything.iter().filter(|v| t.vector_weight(v) <= radius as u64).cloned().collect();
            let got: Vec<Vec<FieldElement>> =
                enumerate_weight_ball(&t, n, radius).unwrap().map(|e| e.to_dense(&f)).collect();
            let unique: HashSet<_> = got.iter().cloned().collect();
            assert_eq!(unique.len(), got.len());
            assert_eq!(unique, expected, "p={p} m={m} n={n} r={radius}");
            assert_eq!(t.ball_size(n, radius), expected.len() as u128);
        }
    }
}
