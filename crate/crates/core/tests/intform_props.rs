use liepar_core::intform::{self, IntegerSymmetricForm};
use liepar_core::linalg;
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn symmetric(max_n: usize, bound: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(-bound..=bound, n * (n + 1) / 2).prop_map(move |upper| {
            let mut m = vec![vec![0i64; n]; n];
            let mut k = 0;
            for i in 0..n {
                for j in i..n {
                    m[i][j] = upper[k];
                    m[j][i] = upper[k];
                    k += 1;
                }
            }
            m
        })
    })
}

/// A unimodular matrix built from elementary row operations.
fn unimodular(n: usize, ops: &[(usize, usize, i64)]) -> Vec<Vec<BigInt>> {
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(i64::from(i == j))).collect())
        .collect();
    for &(a, b, c) in ops {
        let (a, b) = (a % n, b % n);
        if a == b {
            u.swap(a, (a + 1) % n);
            continue;
        }
        for j in 0..n {
            let add = &u[b][j] * c;
            u[a][j] += add;
        }
    }
    u
}

fn kernel_mod_p(m: &[Vec<BigInt>], v: &[BigInt], p: u64) -> bool {
    let p = BigInt::from(p);
    m.iter().all(|row| {
        let s: BigInt = row.iter().zip(v).map(|(a, b)| a * b).sum();
        (s % &p).is_zero()
    })
}

const PRIMES: [u64; 4] = [2, 3, 5, 7];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn rank_plus_radical_is_size(m in symmetric(6, 4), pi in 0usize..4) {
        let p = PRIMES[pi];
        let f = IntegerSymmetricForm::from_i64("f", &m).unwrap();
        let rr = intform::rank_and_radical(&f, Some(p)).unwrap();
        prop_assert_eq!(rr.rank_fp.unwrap() + rr.radical.len(), f.size());
        for v in &rr.radical {
            prop_assert!(kernel_mod_p(f.matrix(), v, p));
        }
        let rep = intform::decomposition_report(std::slice::from_ref(&f), p).unwrap();
        prop_assert_eq!(rep.strata[0].multiplicity + rep.strata[0].radical_dim, f.size());
    }

    #[test]
    fn elimination_rank_equals_smith_rank(m in symmetric(6, 5), pi in 0usize..4) {
        let p = PRIMES[pi];
        let big = linalg::to_big(&m);
        let smith = linalg::smith_form(&big);
        prop_assert_eq!(linalg::rank_over_q(&big), smith.rank());
        prop_assert_eq!(linalg::rank_mod_p(&big, p), smith.rank_mod(p));
        // invariant factors form a divisibility chain
        for w in smith.invariant_factors.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
    }

    #[test]
    fn unimodular_change_of_basis_is_invisible(m in symmetric(5, 3), ops in prop::collection::vec((0usize..5, 0usize..5, -2i64..=2), 0..12)) {
        let f = IntegerSymmetricForm::from_i64("f", &m).unwrap();
        let g = f.transform(&unimodular(f.size(), &ops)).unwrap();
        prop_assert_eq!(intform::bad_primes(&f), intform::bad_primes(&g));
        for p in PRIMES {
            let a = intform::rank_and_radical(&f, Some(p)).unwrap();
            let b = intform::rank_and_radical(&g, Some(p)).unwrap();
            prop_assert_eq!(a.rank_q, b.rank_q);
            prop_assert_eq!(a.rank_fp, b.rank_fp);
        }
    }

    #[test]
    fn bad_primes_are_exactly_the_rank_drops(m in symmetric(4, 6)) {
        let f = IntegerSymmetricForm::from_i64("f", &m).unwrap();
        let rank_q = intform::rank_and_radical(&f, None).unwrap().rank_q;
        let bad = intform::bad_primes(&f);
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23] {
            let drops = intform::rank_and_radical(&f, Some(p)).unwrap().rank_fp.unwrap() < rank_q;
            prop_assert_eq!(drops, bad.contains(&p), "p={}", p);
        }
    }
}

#[test]
fn rational_radical_is_a_kernel() {
    let f = IntegerSymmetricForm::from_i64("f", &[vec![2, 4], vec![4, 8]]).unwrap();
    let rr = intform::rank_and_radical(&f, None).unwrap();
    assert_eq!(rr.rank_q, 1);
    assert_eq!(rr.radical, vec![vec![BigInt::from(-2), BigInt::from(1)]]);
}
