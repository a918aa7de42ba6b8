//! Weyl groups as permutation groups of the root list.
//!
//! An element is stored as the permutation it induces on
//! [`RootSystem::roots`] (positive roots first, then negatives). That makes
//! equality and hashing O(1)-ish and gives length, descents and
//! multiplication by simple reflections directly.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, TypeLabel};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    word: Vec<usize>,
    perm: Vec<u16>,
    system: TypeLabel,
}

impl WeylElement {
    /// Reduced word, 0-based simple indices.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn perm(&self) -> &[u16] {
        &self.perm
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn system(&self) -> &TypeLabel {
        &self.system
    }

    /// The word as the command line prints it: `s1s2`, or `e` for the identity.
    pub fn word_label(&self) -> String {
        if self.word.is_empty() {
            "e".to_string()
        } else {
            self.word.iter().map(|i| format!("s{}", i + 1)).collect()
        }
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word_label())
    }
}

/// Precomputed reflection permutations for a root system.
#[derive(Debug, Clone)]
pub struct WeylContext<'a> {
    rs: &'a RootSystem,
    /// `reflections[i][j]` is the index of `s_i(root_j)`.
    reflections: Vec<Vec<u16>>,
    num_positive: usize,
}

impl<'a> WeylContext<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        let roots = rs.roots();
        let n = rs.rank();
        let reflections = (0..n)
            .map(|i| {
                roots
                    .iter()
                    .map(|beta| {
                        let c = rs.root_pairing(beta, i);
                        let mut img = beta.clone();
                        img[i] -= c;
                        rs.root_index(&img).expect("root system closed under reflections") as u16
                    })
                    .collect()
            })
            .collect();
        WeylContext {
            rs,
            reflections,
            num_positive: rs.num_positive_roots(),
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement {
            word: Vec::new(),
            perm: (0..2 * self.num_positive as u16).collect(),
            system: self.rs.label().clone(),
        }
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    fn check_system(&self, w: &WeylElement) -> Result<()> {
        if w.system != *self.rs.label() {
            return Err(Error::MismatchedSystems(
                w.system.to_string(),
                self.rs.label().to_string(),
            ));
        }
        Ok(())
    }

    /// The element with the given word (not necessarily reduced).
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut perm: Vec<u16> = (0..2 * self.num_positive as u16).collect();
        for &i in word {
            self.check_index(i)?;
            perm = self.right_perm(&perm, i);
        }
        Ok(self.from_perm(perm))
    }

    fn right_perm(&self, perm: &[u16], i: usize) -> Vec<u16> {
        // (w s_i)(β) = w(s_i β)
        self.reflections[i].iter().map(|&j| perm[j as usize]).collect()
    }

    fn left_perm(&self, perm: &[u16], i: usize) -> Vec<u16> {
        perm.iter().map(|&j| self.reflections[i][j as usize]).collect()
    }

    fn is_negative(&self, idx: u16) -> bool {
        idx as usize >= self.num_positive
    }

    fn perm_length(&self, perm: &[u16]) -> usize {
        perm[..self.num_positive]
            .iter()
            .filter(|&&j| self.is_negative(j))
            .count()
    }

    fn perm_right_descent(&self, perm: &[u16], i: usize) -> bool {
        self.is_negative(perm[i])
    }

    /// Canonical reduced word: repeatedly strip the smallest right descent.
    fn reduced_word(&self, perm: &[u16]) -> Vec<usize> {
        let mut p = perm.to_vec();
        let mut rev = Vec::new();
        while let Some(i) = (0..self.rank()).find(|&i| self.perm_right_descent(&p, i)) {
            rev.push(i);
            p = self.right_perm(&p, i);
        }
        rev.reverse();
        rev
    }

    pub fn from_perm(&self, perm: Vec<u16>) -> WeylElement {
        WeylElement {
            word: self.reduced_word(&perm),
            perm,
            system: self.rs.label().clone(),
        }
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversion_count(&self, w: &WeylElement) -> usize {
        self.perm_length(&w.perm)
    }

    pub fn right_multiply(&self, w: &WeylElement, i: usize) -> WeylElement {
        self.from_perm(self.right_perm(&w.perm, i))
    }

    pub fn left_multiply(&self, i: usize, w: &WeylElement) -> WeylElement {
        self.from_perm(self.left_perm(&w.perm, i))
    }

    pub fn multiply(&self, u: &WeylElement, w: &WeylElement) -> WeylElement {
        let mut perm = u.perm.clone();
        for &i in &w.word {
            perm = self.right_perm(&perm, i);
        }
        self.from_perm(perm)
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let mut perm = vec![0u16; w.perm.len()];
        for (j, &img) in w.perm.iter().enumerate() {
            perm[img as usize] = j as u16;
        }
        self.from_perm(perm)
    }

    /// `ℓ(w s_i) < ℓ(w)`.
    pub fn has_right_descent(&self, w: &WeylElement, i: usize) -> bool {
        self.perm_right_descent(&w.perm, i)
    }

    /// `ℓ(s_i w) < ℓ(w)`, i.e. `w^{-1}(α_i) < 0`.
    pub fn has_left_descent(&self, w: &WeylElement, i: usize) -> bool {
        let pre = w.perm.iter().position(|&j| j as usize == i).unwrap();
        pre >= self.num_positive
    }

    /// Bruhat order by the descent recursion: for a right descent `s` of `w`,
    /// `u ≤ w` iff `min(u, us) ≤ ws`.
    pub fn bruhat_leq(&self, u: &WeylElement, w: &WeylElement) -> Result<bool> {
        self.check_system(u)?;
        self.check_system(w)?;
        let mut u = u.perm.clone();
        let mut w = w.perm.clone();
        loop {
            let lw = self.perm_length(&w);
            let lu = self.perm_length(&u);
            if lu > lw {
                return Ok(false);
            }
            if lw == 0 {
                return Ok(lu == 0);
            }
            let s = (0..self.rank())
                .find(|&i| self.perm_right_descent(&w, i))
                .unwrap();
            if self.perm_right_descent(&u, s) {
                u = self.right_perm(&u, s);
            }
            w = self.right_perm(&w, s);
        }
    }

    /// Elements of `W` by increasing length, optionally truncated at a length bound.
    pub fn generate(&self, length_bound: Option<usize>, budget: &Budget) -> Result<Vec<WeylElement>> {
        let mut seen: HashMap<Vec<u16>, ()> = HashMap::new();
        let id = self.identity();
        seen.insert(id.perm.clone(), ());
        let mut layer = vec![id.perm.clone()];
        let mut out = vec![id];
        let mut len = 0;
        while !layer.is_empty() {
            if length_bound.is_some_and(|b| len >= b) {
                break;
            }
            let mut next = Vec::new();
            for perm in &layer {
                for i in 0..self.rank() {
                    if self.perm_right_descent(perm, i) {
                        continue;
                    }
                    let q = self.right_perm(perm, i);
                    if seen.insert(q.clone(), ()).is_none() {
                        if seen.len() > budget.elements {
                            return Err(Error::BudgetExceeded {
                                what: format!("Weyl group of {}", self.rs.label()),
                                limit: budget.elements,
                            });
                        }
                        next.push(q);
                    }
                }
            }
            let mut elems: Vec<WeylElement> = next.iter().map(|p| self.from_perm(p.clone())).collect();
            elems.sort_by(|a, b| a.word.cmp(&b.word));
            out.extend(elems);
            layer = next;
            len += 1;
        }
        Ok(out)
    }

    fn check_subset(&self, set: &BTreeSet<usize>) -> Result<()> {
        for &i in set {
            self.check_index(i)?;
        }
        Ok(())
    }

    pub fn is_double_minimal(&self, w: &WeylElement, left: &BTreeSet<usize>, right: &BTreeSet<usize>) -> bool {
        left.iter().all(|&i| !self.has_left_descent(w, i))
            && right.iter().all(|&j| !self.has_right_descent(w, j))
    }

    /// Minimal-length representatives of `W_I \ W / W_J`, sorted by length then word.
    pub fn double_quotient_reps(
        &self,
        left: &BTreeSet<usize>,
        right: &BTreeSet<usize>,
        budget: &Budget,
    ) -> Result<Vec<WeylElement>> {
        self.check_subset(left)?;
        self.check_subset(right)?;
        let all = self.generate(None, budget)?;
        Ok(all
            .into_iter()
            .filter(|w| self.is_double_minimal(w, left, right))
            .collect())
    }

    /// Minimal element of `W_I x W_J`, reached by stripping descents.
    pub fn double_coset_minimum(
        &self,
        x: &WeylElement,
        left: &BTreeSet<usize>,
        right: &BTreeSet<usize>,
    ) -> WeylElement {
        let mut perm = x.perm.clone();
        loop {
            if let Some(&i) = left.iter().find(|&&i| {
                let pre = perm.iter().position(|&j| j as usize == i).unwrap();
                pre >= self.num_positive
            }) {
                perm = self.left_perm(&perm, i);
                continue;
            }
            if let Some(&j) = right.iter().find(|&&j| self.perm_right_descent(&perm, j)) {
                perm = self.right_perm(&perm, j);
                continue;
            }
            break;
        }
        self.from_perm(perm)
    }

    /// `Σ q^{ℓ(x)}` over `x ∈ W_I w W_J` that are minimal in `x W_J`: the cell
    /// count generating function of the stratum indexed by `w`.
    pub fn stratum_poincare(
        &self,
        left: &BTreeSet<usize>,
        right: &BTreeSet<usize>,
        w: &WeylElement,
        budget: &Budget,
    ) -> Result<CellPolynomial> {
        self.check_system(w)?;
        self.check_subset(left)?;
        self.check_subset(right)?;
        if !self.is_double_minimal(w, left, right) {
            return Err(Error::NotMinimalRepresentative(w.word.clone()));
        }
        let none = BTreeSet::new();
        let mut poly = CellPolynomial::zero();
        for x in self.generate(None, budget)? {
            if !self.is_double_minimal(&x, &none, right) {
                continue;
            }
            if self.double_coset_minimum(&x, left, right).perm == w.perm {
                poly.add_monomial(x.len(), 1);
            }
        }
        Ok(poly)
    }

    /// `Σ q^{ℓ(x)}` over all `x ∈ W` minimal in `x W_J`.
    pub fn quotient_poincare(&self, right: &BTreeSet<usize>, budget: &Budget) -> Result<CellPolynomial> {
        self.check_subset(right)?;
        let none = BTreeSet::new();
        let mut poly = CellPolynomial::zero();
        for x in self.generate(None, budget)? {
            if self.is_double_minimal(&x, &none, right) {
                poly.add_monomial(x.len(), 1);
            }
        }
        Ok(poly)
    }

    /// Elements of the parabolic subgroup `W_I`.
    pub fn parabolic_subgroup(&self, subset: &BTreeSet<usize>, budget: &Budget) -> Result<Vec<WeylElement>> {
        self.check_subset(subset)?;
        let mut seen: HashMap<Vec<u16>, ()> = HashMap::new();
        let id = self.identity();
        seen.insert(id.perm.clone(), ());
        let mut stack = vec![id.perm.clone()];
        while let Some(p) = stack.pop() {
            for &i in subset {
                let q = self.right_perm(&p, i);
                if seen.insert(q.clone(), ()).is_none() {
                    if seen.len() > budget.elements {
                        return Err(Error::BudgetExceeded {
                            what: "parabolic subgroup".into(),
                            limit: budget.elements,
                        });
                    }
                    stack.push(q);
                }
            }
        }
        let mut out: Vec<WeylElement> = seen.into_keys().map(|p| self.from_perm(p)).collect();
        out.sort_by(|a, b| (a.len(), &a.word).cmp(&(b.len(), &b.word)));
        Ok(out)
    }
}

/// Polynomial in `q` with nonnegative integer coefficients; index = exponent.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct CellPolynomial(pub Vec<u64>);

impl CellPolynomial {
    pub fn zero() -> Self {
        CellPolynomial(Vec::new())
    }

    pub fn add_monomial(&mut self, exponent: usize, coeff: u64) {
        if self.0.len() <= exponent {
            self.0.resize(exponent + 1, 0);
        }
        self.0[exponent] += coeff;
    }

    pub fn add(&self, other: &CellPolynomial) -> CellPolynomial {
        let mut out = self.clone();
        for (e, &c) in other.0.iter().enumerate() {
            if c > 0 {
                out.add_monomial(e, c);
            }
        }
        out
    }

    /// Value at `q = 1`: the number of cells.
    pub fn eval_one(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn only_even_powers(&self) -> bool {
        self.0.iter().enumerate().all(|(e, &c)| e % 2 == 0 || c == 0)
    }
}

impl fmt::Display for CellPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(e, &c)| match (e, c) {
                (0, c) => c.to_string(),
                (1, 1) => "q".to_string(),
                (1, c) => format!("{c}q"),
                (e, 1) => format!("q^{e}"),
                (e, c) => format!("{c}q^{e}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn a1_and_a2_and_b2() {
        let budget = Budget::default();
        let a1 = RootSystem::from_label("A1").unwrap();
        let ctx = WeylContext::new(&a1);
        let w = ctx.generate(None, &budget).unwrap();
        assert_eq!(w.iter().map(|e| e.word_label()).collect::<Vec<_>>(), ["e", "s1"]);

        let a2 = RootSystem::from_label("A2").unwrap();
        let ctx = WeylContext::new(&a2);
        let w = ctx.generate(None, &budget).unwrap();
        assert_eq!(w.len(), 6);
        assert_eq!(w.iter().map(|e| e.len()).max(), Some(3));

        let b2 = RootSystem::from_label("B2").unwrap();
        let ctx = WeylContext::new(&b2);
        let w = ctx.generate(None, &budget).unwrap();
        assert_eq!(w.len(), 8);
        assert_eq!(w.iter().map(|e| e.len()).max(), Some(4));
    }

    #[test]
    fn bruhat_examples() {
        let a2 = RootSystem::from_label("A2").unwrap();
        let ctx = WeylContext::new(&a2);
        let s1 = ctx.from_word(&[0]).unwrap();
        let s1s2 = ctx.from_word(&[0, 1]).unwrap();
        let s2s1 = ctx.from_word(&[1, 0]).unwrap();
        assert!(ctx.bruhat_leq(&ctx.identity(), &s2s1).unwrap());
        assert!(ctx.bruhat_leq(&s1, &s1s2).unwrap());
        assert!(ctx.bruhat_leq(&s1, &s2s1).unwrap());
        assert!(!ctx.bruhat_leq(&s1s2, &s2s1).unwrap());
        let b2 = RootSystem::from_label("B2").unwrap();
        let other = WeylContext::new(&b2).identity();
        assert!(ctx.bruhat_leq(&other, &s1).is_err());
    }

    #[test]
    fn word_is_reduced_and_matches_inversions() {
        let b3 = RootSystem::from_label("B3").unwrap();
        let ctx = WeylContext::new(&b3);
        let w = ctx.from_word(&[0, 1, 1, 2, 0, 2]).unwrap();
        assert_eq!(w.len(), ctx.inversion_count(&w));
        assert_eq!(ctx.from_word(w.word()).unwrap(), w);
    }

    #[test]
    fn double_quotients_in_a2() {
        let a2 = RootSystem::from_label("A2").unwrap();
        let ctx = WeylContext::new(&a2);
        let b = Budget::default();
        let reps = ctx.double_quotient_reps(&set(&[0]), &set(&[]), &b).unwrap();
        assert_eq!(reps.iter().map(|w| w.len()).collect::<Vec<_>>(), [0, 1, 2]);
        let all = ctx.double_quotient_reps(&set(&[]), &set(&[]), &b).unwrap();
        assert_eq!(all.len(), 6);
    }

    #[test]
    fn stratum_examples() {
        let b = Budget::default();
        let a1 = RootSystem::from_label("A1").unwrap();
        let ctx = WeylContext::new(&a1);
        let s1 = ctx.from_word(&[0]).unwrap();
        let none = set(&[]);
        assert_eq!(ctx.stratum_poincare(&none, &none, &s1, &b).unwrap(), CellPolynomial(vec![0, 1]));

        let a2 = RootSystem::from_label("A2").unwrap();
        let ctx = WeylContext::new(&a2);
        let w0 = ctx.from_word(&[0, 1, 0]).unwrap();
        assert_eq!(
            ctx.stratum_poincare(&none, &none, &w0, &b).unwrap(),
            CellPolynomial(vec![0, 0, 0, 1])
        );
        let j = set(&[1]);
        let e = ctx.identity();
        assert_eq!(ctx.stratum_poincare(&none, &j, &e, &b).unwrap(), CellPolynomial(vec![1]));
        let total = ctx
            .double_quotient_reps(&none, &j, &b)
            .unwrap()
            .iter()
            .map(|w| ctx.stratum_poincare(&none, &j, w, &b).unwrap())
            .fold(CellPolynomial::zero(), |acc, p| acc.add(&p));
        assert_eq!(total.eval_one(), 3);
        assert_eq!(total, ctx.quotient_poincare(&j, &b).unwrap());
    }

    #[test]
    fn non_minimal_rejected() {
        let b = Budget::default();
        let a2 = RootSystem::from_label("A2").unwrap();
        let ctx = WeylContext::new(&a2);
        let s1 = ctx.from_word(&[0]).unwrap();
        assert!(matches!(
            ctx.stratum_poincare(&set(&[0]), &set(&[]), &s1, &b),
            Err(Error::NotMinimalRepresentative(_))
        ));
    }

    #[test]
    fn budget_and_length_bound() {
        let e8 = RootSystem::from_label("E8").unwrap();
        let ctx = WeylContext::new(&e8);
        let tight = Budget::default().with_elements(1000);
        assert!(matches!(ctx.generate(None, &tight), Err(Error::BudgetExceeded { .. })));
        let slice = ctx.generate(Some(2), &Budget::default()).unwrap();
        // 1 + 8 + (pairs of commuting or adjacent generators) = 1 + 8 + 35
        assert_eq!(slice.len(), 44);
    }
}
