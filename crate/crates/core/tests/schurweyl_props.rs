use std::collections::BTreeMap;

use liepar_core::linalg;
use liepar_core::schurweyl::{self, Partition, Tableau};
use liepar_core::Budget;
use num_bigint::BigInt;
use proptest::prelude::*;

/// `<e_s, e_t>` counted directly: pairs of column permutations taking `s` and
/// `t` to the same tabloid, with signs.
fn gram_entry(s: &Tableau, t: &Tableau) -> i64 {
    fn column_perms(t: &Tableau) -> Vec<(Tableau, i64)> {
        let width = t[0].len();
        let mut out = vec![(t.clone(), 1i64)];
        for c in 0..width {
            let rows: Vec<usize> = (0..t.len()).filter(|&r| t[r].len() > c).collect();
            let mut next = Vec::new();
            for (base, sign) in &out {
                let col: Vec<usize> = rows.iter().map(|&r| base[r][c]).collect();
                for (perm, s) in permutations(&col) {
                    let mut u = base.clone();
                    for (k, &r) in rows.iter().enumerate() {
                        u[r][c] = perm[k];
                    }
                    next.push((u, sign * s));
                }
            }
            out = next;
        }
        out
    }
    fn permutations(v: &[usize]) -> Vec<(Vec<usize>, i64)> {
        if v.len() <= 1 {
            return vec![(v.to_vec(), 1)];
        }
        let mut out = Vec::new();
        for i in 0..v.len() {
            let mut rest = v.to_vec();
            let x = rest.remove(i);
            for (mut p, s) in permutations(&rest) {
                p.insert(0, x);
                out.push((p, if i % 2 == 0 { s } else { -s }));
            }
        }
        out
    }
    fn tabloid(t: &Tableau) -> Vec<Vec<usize>> {
        t.iter()
            .map(|r| {
                let mut r = r.clone();
                r.sort_unstable();
                r
            })
            .collect()
    }
    let mut left: BTreeMap<Vec<Vec<usize>>, i64> = BTreeMap::new();
    for (u, sign) in column_perms(s) {
        *left.entry(tabloid(&u)).or_default() += sign;
    }
    column_perms(t)
        .into_iter()
        .map(|(u, sign)| sign * left.get(&tabloid(&u)).copied().unwrap_or(0))
        .sum()
}

/// `dim rad` over `F_p` by counting kernel vectors of the Gram matrix.
fn brute_force_radical_dim(m: &[Vec<BigInt>], p: u64) -> usize {
    let n = m.len();
    let red: Vec<Vec<u64>> = m
        .iter()
        .map(|r| r.iter().map(|x| x.modpow(&BigInt::from(1), &BigInt::from(p)).try_into().unwrap()).collect())
        .collect();
    let total = (p as usize).pow(n as u32);
    let mut count = 0usize;
    let mut v = vec![0u64; n];
    for code in 0..total {
        let mut c = code;
        for x in v.iter_mut() {
            *x = (c % p as usize) as u64;
            c /= p as usize;
        }
        if red.iter().all(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum::<u64>() % p == 0) {
            count += 1;
        }
    }
    let mut dim = 0;
    let mut acc = 1usize;
    while acc < count {
        acc *= p as usize;
        dim += 1;
    }
    assert_eq!(acc, count, "kernel size is not a power of p");
    dim
}

#[test]
fn hook_length_counts_standard_tableaux() {
    for d in 0..=8 {
        let mut sum_sq = BigInt::from(0);
        for l in Partition::all(d) {
            let f = l.hook_length_count();
            assert_eq!(f, BigInt::from(schurweyl::standard_tableaux(&l).len()), "{l}");
            sum_sq += &f * &f;
        }
        assert_eq!(sum_sq, schurweyl::factorial(d), "d={d}");
    }
}

#[test]
fn gram_matrices_match_a_direct_count() {
    let budget = Budget::default();
    for d in 1..=5 {
        for l in Partition::all(d) {
            let g = schurweyl::specht_gram(&l, &budget).unwrap();
            for (i, s) in g.basis.iter().enumerate() {
                for (j, t) in g.basis.iter().enumerate() {
                    assert_eq!(g.form.matrix()[i][j], BigInt::from(gram_entry(s, t)), "{l} ({i},{j})");
                }
            }
        }
    }
}

#[test]
fn gram_rank_matches_brute_force_radical() {
    let budget = Budget::default();
    for d in 1..=6 {
        for p in [2u64, 3, 5, 7] {
            for l in Partition::all(d).into_iter().filter(|l| l.is_p_regular(p)) {
                let g = schurweyl::specht_gram(&l, &budget).unwrap();
                let f = g.basis.len();
                if (p as f64).powi(f as i32) > 2.0e5 {
                    continue;
                }
                let rank = schurweyl::simple_dimension(&l, p, &budget).unwrap();
                assert_eq!(rank + brute_force_radical_dim(g.form.matrix(), p), f, "{l} p={p}");
            }
        }
    }
}

#[test]
fn large_primes_give_full_rank() {
    let budget = Budget::default();
    for d in 1..=6 {
        for p in [2u64, 3, 5, 7].into_iter().filter(|&p| p as usize > d) {
            for l in Partition::all(d) {
                assert_eq!(
                    BigInt::from(schurweyl::simple_dimension(&l, p, &budget).unwrap()),
                    l.hook_length_count(),
                    "{l} p={p}"
                );
            }
        }
    }
}

#[test]
fn rational_gram_is_nondegenerate() {
    let budget = Budget::default();
    for l in Partition::all(6) {
        let g = schurweyl::specht_gram(&l, &budget).unwrap();
        assert_eq!(linalg::rank_over_q(g.form.matrix()), g.basis.len(), "{l}");
    }
}

fn partition(mut parts: Vec<usize>) -> Partition {
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).unwrap()
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(parts in prop::collection::vec(1usize..6, 0..6)) {
        let l = partition(parts);
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().size(), l.size());
        prop_assert_eq!(l.conjugate().hook_length_count(), l.hook_length_count());
        let round: Partition = l.to_string().trim_matches(|c| c == '(' || c == ')').parse().unwrap();
        prop_assert_eq!(round, l);
    }

    #[test]
    fn nilpotent_orbit_dimension(parts in prop::collection::vec(1usize..5, 1..5)) {
        let l = partition(parts);
        let n = l.size();
        let o = schurweyl::nilpotent_orbit_data(&l, n).unwrap();
        // n^2 - Σ (λ^t_i)^2
        let centralizer: usize = l.conjugate().parts().iter().map(|c| c * c).sum();
        prop_assert_eq!(o.dimension as usize, n * n - centralizer);
        prop_assert_eq!(o.dimension % 2, 0);
    }
}
