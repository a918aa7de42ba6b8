use std::collections::BTreeMap;

use liepar_core::characters::{self, WeightMap};
use liepar_core::rootsys::{RootSystem, Weight};
use liepar_core::Budget;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn binomial(n: &BigInt, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - BigInt::from(i)) / BigInt::from(i + 1);
    }
    acc
}

/// Number of semistandard tableaux of shape `shape` with content `content`,
/// filling one horizontal strip per letter.
fn kostka(shape: &[usize], content: &[usize]) -> u64 {
    fn strips(inner: &[usize], outer: &[usize], k: usize, row: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if row == outer.len() {
            if k == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // a horizontal strip: row r may grow up to the previous length of row r-1
        let cap = if row == 0 { outer[0] } else { inner[row - 1].min(outer[row]) };
        for len in inner[row]..=cap {
            if len - inner[row] > k {
                break;
            }
            cur.push(len);
            strips(inner, outer, k - (len - inner[row]), row + 1, cur, out);
            cur.pop();
        }
    }
    fn rec(current: Vec<usize>, shape: &[usize], content: &[usize]) -> u64 {
        let Some((&k, rest)) = content.split_first() else {
            return u64::from(current == shape);
        };
        let mut next = Vec::new();
        strips(&current, shape, k, 0, &mut Vec::new(), &mut next);
        next.into_iter().map(|c| rec(c, shape, rest)).sum()
    }
    rec(vec![0; shape.len()], shape, content)
}

/// Weight multiplicity of `μ` in `V(λ)` for `A_n` via Kostka numbers.
fn type_a_multiplicity(lambda: &Weight, mu: &Weight) -> u64 {
    let n = lambda.0.len();
    let shape: Vec<usize> = (0..=n)
        .map(|i| if i < n { lambda.0[i..].iter().sum::<i64>() as usize } else { 0 })
        .collect();
    let size: i64 = shape.iter().sum::<usize>() as i64;
    let weighted: i64 = mu.0.iter().enumerate().map(|(i, &m)| (i as i64 + 1) * m).sum();
    let last = size - weighted;
    if last < 0 || last % (n as i64 + 1) != 0 {
        return 0;
    }
    let last = last / (n as i64 + 1);
    let mut content = vec![0i64; n + 1];
    content[n] = last;
    for i in (0..n).rev() {
        content[i] = content[i + 1] + mu.0[i];
    }
    if content.iter().any(|&c| c < 0) {
        return 0;
    }
    let content: Vec<usize> = content.into_iter().map(|c| c as usize).collect();
    kostka(&shape, &content)
}

fn dominant(rank: usize, max: i64) -> impl Strategy<Value = Weight> {
    prop::collection::vec(0..=max, rank).prop_map(Weight)
}

#[test]
fn freudenthal_matches_kostka_numbers() {
    let budget = Budget::default();
    for (ty, max) in [("A1", 6), ("A2", 3), ("A3", 2), ("A4", 1)] {
        let rs = RootSystem::from_label(ty).unwrap();
        let n = rs.rank();
        let mut lambdas = vec![vec![]];
        for _ in 0..n {
            lambdas = lambdas
                .into_iter()
                .flat_map(|v: Vec<i64>| (0..=max).map(move |c| [v.clone(), vec![c]].concat()))
                .collect();
        }
        for l in lambdas {
            let lambda = Weight(l);
            for (mu, m) in characters::dominant_multiplicities(&rs, &lambda, &budget).unwrap() {
                assert_eq!(m, BigInt::from(type_a_multiplicity(&lambda, &mu)), "{ty} {lambda} at {mu}");
            }
        }
    }
}

/// Product of two weight multisets, then repeatedly strip the top irreducible.
fn tensor_by_convolution(rs: &RootSystem, a: &Weight, b: &Weight, budget: &Budget) -> WeightMap {
    let wa = characters::weight_multiplicities(rs, a, budget).unwrap().weights.unwrap();
    let wb = characters::weight_multiplicities(rs, b, budget).unwrap().weights.unwrap();
    let mut prod: BTreeMap<Weight, BigInt> = BTreeMap::new();
    for (x, m) in &wa {
        for (y, k) in &wb {
            *prod.entry(x.add(y)).or_insert_with(BigInt::zero) += m * k;
        }
    }
    let mut out = WeightMap::new();
    loop {
        prod.retain(|_, m| !m.is_zero());
        // the highest dominant weight left is a highest weight
        let height = |w: &Weight| -> num_rational::BigRational { rs.weight_to_root_coords(w).into_iter().sum() };
        let top = prod.keys().filter(|w| w.is_dominant()).max_by(|x, y| height(x).cmp(&height(y)).then(x.cmp(y)));
        let Some(top) = top.cloned() else { break };
        let m = prod[&top].clone();
        for (w, k) in characters::weight_multiplicities(rs, &top, budget).unwrap().weights.unwrap() {
            *prod.entry(w).or_insert_with(BigInt::zero) -= &m * k;
        }
        out.insert(top, m);
    }
    assert!(prod.is_empty(), "convolution did not strip cleanly");
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn klimyk_commutes_and_counts(ty in prop::sample::select(vec!["A2", "B2", "G2", "A3", "C3"]), seed in any::<[u8; 8]>()) {
        let rs = RootSystem::from_label(ty).unwrap();
        let n = rs.rank();
        let a = Weight((0..n).map(|i| i64::from(seed[i] % 3)).collect());
        let b = Weight((0..n).map(|i| i64::from(seed[i + 4] % 2)).collect());
        let budget = Budget::default();
        let ab = characters::tensor_decompose(&rs, &a, &b, &budget).unwrap();
        let ba = characters::tensor_decompose(&rs, &b, &a, &budget).unwrap();
        prop_assert_eq!(&ab.irreducibles, &ba.irreducibles);
        let dim = characters::weyl_dimension(&rs, &a).unwrap() * characters::weyl_dimension(&rs, &b).unwrap();
        prop_assert_eq!(ab.dimension(&rs).unwrap(), dim);
        // V(a+b) occurs exactly once
        prop_assert_eq!(ab.multiplicity(&a.add(&b)), BigInt::one());
    }

    #[test]
    fn klimyk_matches_character_convolution(ty in prop::sample::select(vec!["A2", "B2", "G2"]), a in dominant(2, 2), b in dominant(2, 1)) {
        let rs = RootSystem::from_label(ty).unwrap();
        let budget = Budget::default();
        let klimyk = characters::tensor_decompose(&rs, &a, &b, &budget).unwrap().irreducibles.unwrap();
        prop_assert_eq!(klimyk, tensor_by_convolution(&rs, &a, &b, &budget));
    }

    #[test]
    fn freudenthal_is_weyl_invariant_and_sums_to_weyl_dimension(ty in prop::sample::select(vec!["A2", "B2", "G2", "B3", "C3", "A3"]), seed in any::<[u8; 3]>()) {
        let rs = RootSystem::from_label(ty).unwrap();
        let lambda = Weight((0..rs.rank()).map(|i| i64::from(seed[i] % 3)).collect());
        let budget = Budget::default();
        let ch = characters::weight_multiplicities(&rs, &lambda, &budget).unwrap();
        let weights = ch.weights.unwrap();
        let total: BigInt = weights.values().sum();
        prop_assert_eq!(total, characters::weyl_dimension(&rs, &lambda).unwrap());
        for (w, m) in &weights {
            for i in 0..rs.rank() {
                let mut r = w.clone();
                rs.reflect_weight(&mut r, i);
                prop_assert_eq!(weights.get(&r), Some(m));
            }
        }
    }

    #[test]
    fn exterior_powers_have_binomial_dimension(ty in prop::sample::select(vec!["A2", "B2", "G2", "A3", "B3", "C3", "D4"]), seed in any::<[u8; 4]>(), k in 0usize..5) {
        let rs = RootSystem::from_label(ty).unwrap();
        let lambda = Weight((0..rs.rank()).map(|i| i64::from(seed[i] % 2)).collect());
        let budget = Budget::default();
        let dim = characters::weyl_dimension(&rs, &lambda).unwrap();
        let ch = characters::exterior_power_decompose(&rs, &lambda, k, &budget).unwrap();
        prop_assert_eq!(ch.dimension(&rs).unwrap(), binomial(&dim, k));
    }
}

#[test]
fn classical_exterior_powers_of_the_vector_representation() {
    let budget = Budget::default();
    let w = |n: usize, i: usize| Weight::fundamental(n, i);
    for n in 2..=6usize {
        for ty in [format!("B{n}"), format!("D{n}")] {
            if ty == "D2" || ty == "D3" {
                continue;
            }
            let rs = RootSystem::from_label(&ty).unwrap();
            let top = if ty.starts_with('B') { n - 1 } else { n - 2 };
            for i in 1..=top {
                let ch = characters::exterior_power_decompose(&rs, &w(n, 0), i, &budget).unwrap();
                assert_eq!(ch, characters::Character::irreducible(&rs, &w(n, i - 1)), "{ty} L^{i}");
            }
        }
        if n >= 3 {
            let rs = RootSystem::from_label(&format!("C{n}")).unwrap();
            for i in 1..=n {
                let ch = characters::exterior_power_decompose(&rs, &w(n, 0), i, &budget).unwrap();
                let mut expected = WeightMap::new();
                let mut j = i as i64;
                while j >= 0 {
                    let wt = if j == 0 { Weight::zero(n) } else { w(n, j as usize - 1) };
                    expected.insert(wt, BigInt::one());
                    j -= 2;
                }
                assert_eq!(ch.irreducibles.unwrap(), expected, "C{n} L^{i}");
            }
        }
    }
}

#[test]
fn dominance_and_orbit_dimension() {
    let rs = RootSystem::from_label("A2").unwrap();
    let adj = Weight(vec![1, 1]);
    assert!(characters::dominance_leq(&rs, &Weight::zero(2), &adj).unwrap());
    // adjoint orbit of sl_3 in the affine Grassmannian has dimension 2 * ht(θ) = 4
    assert_eq!(characters::orbit_dimension(&rs, &adj).unwrap(), 4);
}
