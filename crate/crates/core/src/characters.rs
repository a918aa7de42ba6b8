//! Characters of finite-dimensional representations in characteristic zero.
//!
//! A [`Character`] is either a formal sum of irreducibles `Σ m_ν [V(ν)]`, a
//! weight multiset, or both. Weight multiplicities come from Freudenthal's
//! formula on dominant weights only; everything else is recovered by W-symmetry.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, TypeLabel, Weight};

pub type WeightMap = BTreeMap<Weight, BigInt>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub system: TypeLabel,
    /// Multiplicities of irreducible constituents, keyed by highest weight.
    pub irreducibles: Option<WeightMap>,
    /// Full weight multiset.
    pub weights: Option<WeightMap>,
}

impl Character {
    pub fn from_irreducibles(rs: &RootSystem, irreducibles: WeightMap) -> Self {
        Character {
            system: rs.label().clone(),
            irreducibles: Some(irreducibles),
            weights: None,
        }
    }

    pub fn irreducible(rs: &RootSystem, lambda: &Weight) -> Self {
        let mut m = WeightMap::new();
        m.insert(lambda.clone(), BigInt::one());
        Self::from_irreducibles(rs, m)
    }

    pub fn is_zero(&self) -> bool {
        self.irreducibles.as_ref().is_some_and(|m| m.is_empty())
            || self.weights.as_ref().is_some_and(|m| m.is_empty())
    }

    /// Multiplicity of `V(λ)`; zero when the irreducible decomposition is absent.
    pub fn multiplicity(&self, lambda: &Weight) -> BigInt {
        self.irreducibles
            .as_ref()
            .and_then(|m| m.get(lambda).cloned())
            .unwrap_or_default()
    }

    pub fn dimension(&self, rs: &RootSystem) -> Result<BigInt> {
        if let Some(w) = &self.weights {
            return Ok(w.values().sum());
        }
        let mut total = BigInt::zero();
        for (nu, m) in self.irreducibles.iter().flatten() {
            total += m * weyl_dimension(rs, nu)?;
        }
        Ok(total)
    }

    /// `(label, multiplicity)` pairs in decreasing height order.
    pub fn constituents(&self, rs: &RootSystem) -> Vec<(Weight, BigInt)> {
        let mut out: Vec<(Weight, BigInt)> = self
            .irreducibles
            .iter()
            .flatten()
            .map(|(w, m)| (w.clone(), m.clone()))
            .collect();
        out.sort_by(|a, b| height_order(rs, &b.0, &a.0));
        out
    }
}

fn height(rs: &RootSystem, w: &Weight) -> BigRational {
    rs.weight_to_root_coords(w).into_iter().sum()
}

/// Higher height first is `Greater`; ties broken by coordinates.
fn height_order(rs: &RootSystem, a: &Weight, b: &Weight) -> std::cmp::Ordering {
    height(rs, a).cmp(&height(rs, b)).then_with(|| a.cmp(b))
}

/// `Π_{α>0} ⟨λ+ρ, α^∨⟩ / ⟨ρ, α^∨⟩`.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Result<BigInt> {
    rs.require_dominant(lambda)?;
    let shifted = lambda.add(&rs.rho());
    let rho = rs.rho();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for k in 0..rs.num_positive_roots() {
        num *= rs.coroot_pairing(&shifted, k);
        den *= rs.coroot_pairing(&rho, k);
    }
    Ok(num / den)
}

/// Dominant weights `μ ≤ λ`, i.e. the dominant weights of `V(λ)`, sorted by
/// increasing depth below `λ`.
pub fn dominant_weights(rs: &RootSystem, lambda: &Weight, budget: &Budget) -> Result<Vec<Weight>> {
    rs.require_dominant(lambda)?;
    let roots: Vec<Weight> = rs
        .positive_roots()
        .iter()
        .map(|a| rs.root_to_weight(a))
        .collect();
    // dominant weights below λ are connected to λ by steps along positive roots
    let mut seen: HashSet<Weight> = HashSet::new();
    seen.insert(lambda.clone());
    let mut layer = vec![lambda.clone()];
    let mut out = vec![lambda.clone()];
    while !layer.is_empty() {
        let mut next = Vec::new();
        for mu in &layer {
            for a in &roots {
                let nu = mu.sub(a);
                if nu.is_dominant() && seen.insert(nu.clone()) {
                    if seen.len() > budget.weights {
                        return Err(Error::BudgetExceeded {
                            what: format!("dominant weights of V({lambda})"),
                            limit: budget.weights,
                        });
                    }
                    next.push(nu);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    let lam_coords = rs.weight_to_root_coords(lambda);
    let depth_of = |w: &Weight| -> BigRational {
        let c = rs.weight_to_root_coords(w);
        lam_coords.iter().zip(&c).map(|(a, b)| a - b).sum()
    };
    let mut keyed: Vec<(BigRational, Weight)> = out.into_iter().map(|w| (depth_of(&w), w)).collect();
    keyed.sort();
    Ok(keyed.into_iter().map(|(_, w)| w).collect())
}

/// Multiplicities of the dominant weights of `V(λ)` by Freudenthal's formula.
pub fn dominant_multiplicities(rs: &RootSystem, lambda: &Weight, budget: &Budget) -> Result<WeightMap> {
    let doms = dominant_weights(rs, lambda, budget)?;
    let roots: Vec<Weight> = rs
        .positive_roots()
        .iter()
        .map(|a| rs.root_to_weight(a))
        .collect();
    let rho = rs.rho();
    let lr = lambda.add(&rho);
    let top = rs.inner(&lr, &lr);
    let mut mult: HashMap<Weight, BigInt> = HashMap::new();
    mult.insert(lambda.clone(), BigInt::one());
    for mu in doms.iter().skip(1) {
        let mut sum = BigInt::zero();
        for a in &roots {
            let mut k = 1;
            loop {
                let nu = mu.add(&a.scale(k));
                let (dom, _) = rs.to_dominant(&nu);
                match mult.get(&dom) {
                    Some(m) => sum += m * BigInt::from(rs.inner(&nu, a)),
                    None => break,
                }
                k += 1;
            }
        }
        let mr = mu.add(&rho);
        let denom = top - rs.inner(&mr, &mr);
        let m = (BigInt::from(2) * sum) / BigInt::from(denom);
        if m.is_positive() {
            mult.insert(mu.clone(), m);
        } else {
            // a dominant μ ≤ λ always occurs in V(λ)
            return Err(Error::Internal(format!(
                "Freudenthal produced multiplicity {m} at {mu}"
            )));
        }
    }
    Ok(mult.into_iter().collect())
}

/// Full weight multiset of `V(λ)`.
pub fn weight_multiplicities(rs: &RootSystem, lambda: &Weight, budget: &Budget) -> Result<Character> {
    let dom = dominant_multiplicities(rs, lambda, budget)?;
    let mut weights = WeightMap::new();
    for (mu, m) in &dom {
        for w in rs.weyl_orbit(mu, budget.weights)? {
            weights.insert(w, m.clone());
        }
        if weights.len() > budget.weights {
            return Err(Error::BudgetExceeded {
                what: format!("weights of V({lambda})"),
                limit: budget.weights,
            });
        }
    }
    let mut irr = WeightMap::new();
    irr.insert(lambda.clone(), BigInt::one());
    Ok(Character {
        system: rs.label().clone(),
        irreducibles: Some(irr),
        weights: Some(weights),
    })
}

/// Add `Σ_μ m_μ · sign(w) [V(w(λ+μ+ρ)-ρ)]` over the weights `μ` of a character
/// into `out` (Klimyk / Brauer).
fn klimyk_accumulate(rs: &RootSystem, lambda: &Weight, small: &WeightMap, coeff: &BigInt, out: &mut WeightMap) {
    let rho = rs.rho();
    let shifted = lambda.add(&rho);
    for (mu, m) in small {
        let (dom, odd) = rs.to_dominant(&shifted.add(mu));
        if dom.0.contains(&0) {
            continue;
        }
        let nu = dom.sub(&rho);
        let entry = out.entry(nu).or_insert_with(BigInt::zero);
        if odd {
            *entry -= m * coeff;
        } else {
            *entry += m * coeff;
        }
    }
}

fn prune(map: &mut WeightMap) -> Result<()> {
    map.retain(|_, m| !m.is_zero());
    if let Some((w, m)) = map.iter().find(|(_, m)| m.is_negative()) {
        return Err(Error::Internal(format!("negative multiplicity {m} at {w}")));
    }
    Ok(())
}

/// `V(λ) ⊗ V(μ)` as a sum of irreducibles. The weight multiset of the smaller
/// factor is the only one ever materialized.
pub fn tensor_decompose(rs: &RootSystem, lambda: &Weight, mu: &Weight, budget: &Budget) -> Result<Character> {
    let dl = weyl_dimension(rs, lambda)?;
    let dm = weyl_dimension(rs, mu)?;
    let (big, small) = if dl >= dm { (lambda, mu) } else { (mu, lambda) };
    let small_weights = weight_multiplicities(rs, small, budget)?
        .weights
        .expect("weights computed");
    let mut out = WeightMap::new();
    klimyk_accumulate(rs, big, &small_weights, &BigInt::one(), &mut out);
    prune(&mut out)?;
    let ch = Character::from_irreducibles(rs, out);
    if ch.dimension(rs)? != &dl * &dm {
        return Err(Error::Internal("tensor product dimension check failed".into()));
    }
    Ok(ch)
}

/// `(Σ a_ν V(ν)) ⊗ V(g)` given the weight multiset of `V(g)`.
fn tensor_with_weights(rs: &RootSystem, ch: &WeightMap, g_weights: &WeightMap) -> Result<WeightMap> {
    let mut out = WeightMap::new();
    for (nu, a) in ch {
        klimyk_accumulate(rs, nu, g_weights, a, &mut out);
    }
    prune(&mut out)?;
    Ok(out)
}

fn multiply_weight_maps(a: &WeightMap, b: &WeightMap) -> WeightMap {
    let mut out = WeightMap::new();
    for (x, m) in a {
        for (y, n) in b {
            *out.entry(x.add(y)).or_insert_with(BigInt::zero) += m * n;
        }
    }
    out.retain(|_, m| !m.is_zero());
    out
}

fn binomial(n: &BigInt, k: usize) -> BigInt {
    let mut r = BigInt::one();
    for j in 0..k {
        r = r * (n - BigInt::from(j)) / BigInt::from(j + 1);
    }
    r
}

/// Decompose a W-invariant weight multiset into irreducibles by repeatedly
/// removing the character of the highest remaining dominant weight.
pub fn strip_highest_weights(rs: &RootSystem, weights: &WeightMap, budget: &Budget) -> Result<WeightMap> {
    let mut dominant: WeightMap = weights
        .iter()
        .filter(|(w, m)| w.is_dominant() && !m.is_zero())
        .map(|(w, m)| (w.clone(), m.clone()))
        .collect();
    let mut out = WeightMap::new();
    while !dominant.is_empty() {
        let top = dominant
            .keys()
            .max_by(|a, b| height_order(rs, a, b))
            .unwrap()
            .clone();
        let m = dominant[&top].clone();
        if m.is_negative() {
            return Err(Error::Internal(format!("negative multiplicity {m} at {top}")));
        }
        for (nu, k) in dominant_multiplicities(rs, &top, budget)? {
            let e = dominant.entry(nu).or_insert_with(BigInt::zero);
            *e -= &m * k;
        }
        dominant.retain(|_, v| !v.is_zero());
        out.insert(top, m);
    }
    Ok(out)
}

/// `Λ^i V(λ)` as a sum of irreducibles, via Newton's identity
/// `i e_i = Σ_{k=1}^{i} (-1)^{k-1} e_{i-k} ψ^k` on weight multisets.
pub fn exterior_power_decompose(rs: &RootSystem, lambda: &Weight, i: usize, budget: &Budget) -> Result<Character> {
    let v = weight_multiplicities(rs, lambda, budget)?
        .weights
        .expect("weights computed");
    let dim: BigInt = v.values().sum();
    if BigInt::from(i) > dim {
        return Ok(Character::from_irreducibles(rs, WeightMap::new()));
    }
    let adams = |k: i64| -> WeightMap { v.iter().map(|(w, m)| (w.scale(k), m.clone())).collect() };
    let mut e: Vec<WeightMap> = Vec::with_capacity(i + 1);
    let mut e0 = WeightMap::new();
    e0.insert(Weight::zero(rs.rank()), BigInt::one());
    e.push(e0);
    for j in 1..=i {
        let mut acc = WeightMap::new();
        for k in 1..=j {
            let term = multiply_weight_maps(&e[j - k], &adams(k as i64));
            for (w, m) in term {
                let entry = acc.entry(w).or_insert_with(BigInt::zero);
                if k % 2 == 1 {
                    *entry += m;
                } else {
                    *entry -= m;
                }
            }
        }
        let jj = BigInt::from(j);
        let mut ej = WeightMap::new();
        for (w, m) in acc {
            if m.is_zero() {
                continue;
            }
            if !(&m % &jj).is_zero() {
                return Err(Error::Internal("Newton identity left a remainder".into()));
            }
            ej.insert(w, m / &jj);
        }
        if ej.len() > budget.weights {
            return Err(Error::BudgetExceeded {
                what: format!("weights of exterior power {j}"),
                limit: budget.weights,
            });
        }
        e.push(ej);
    }
    let irr = strip_highest_weights(rs, &e[i], budget)?;
    let ch = Character::from_irreducibles(rs, irr);
    if ch.dimension(rs)? != binomial(&dim, i) {
        return Err(Error::Internal("exterior power dimension check failed".into()));
    }
    Ok(ch)
}

/// One entry of a generation certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateEntry {
    /// 0-based fundamental index.
    pub fundamental: usize,
    /// Highest weights of the tensor factors, in order.
    pub word: Vec<Weight>,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub multiplicity: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenerationCertificate {
    pub system: String,
    pub generators: Vec<Weight>,
    pub entries: Vec<CertificateEntry>,
}

/// Minuscule fundamental weights together with the highest short root.
pub fn generators(rs: &RootSystem) -> Result<Vec<Weight>> {
    let n = rs.rank();
    let mut gens: Vec<Weight> = rs
        .minuscule_weights()
        .into_iter()
        .map(|i| Weight::fundamental(n, i))
        .collect();
    let hsr = rs.highest_short_root()?;
    if !gens.contains(&hsr) {
        gens.push(hsr);
    }
    gens.sort_by(|a, b| b.cmp(a));
    Ok(gens)
}

/// For each fundamental weight, the first tensor word over the generators
/// (breadth first, words as nondecreasing index sequences) whose
/// decomposition contains it.
pub fn generation_certificate(rs: &RootSystem, budget: &Budget) -> Result<GenerationCertificate> {
    rs.require_irreducible()?;
    let n = rs.rank();
    let gens = generators(rs)?;
    let gen_weights: Vec<WeightMap> = gens
        .iter()
        .map(|g| weight_multiplicities(rs, g, budget).map(|c| c.weights.unwrap()))
        .collect::<Result<_>>()?;
    let mut found: Vec<Option<CertificateEntry>> = vec![None; n];
    // frontier of (word as generator indices, decomposition)
    let mut frontier: Vec<(Vec<usize>, WeightMap)> = gens
        .iter()
        .enumerate()
        .map(|(j, g)| {
            let mut m = WeightMap::new();
            m.insert(g.clone(), BigInt::one());
            (vec![j], m)
        })
        .collect();
    for depth in 1..=budget.certificate_depth {
        for (word, decomp) in &frontier {
            for (i, slot) in found.iter_mut().enumerate() {
                if slot.is_some() {
                    continue;
                }
                if let Some(m) = decomp.get(&Weight::fundamental(n, i)) {
                    *slot = Some(CertificateEntry {
                        fundamental: i,
                        word: word.iter().map(|&j| gens[j].clone()).collect(),
                        multiplicity: m.clone(),
                    });
                }
            }
        }
        if found.iter().all(Option::is_some) || depth == budget.certificate_depth {
            break;
        }
        let mut next = Vec::new();
        for (word, decomp) in &frontier {
            let last = *word.last().unwrap();
            for j in last..gens.len() {
                let mut w = word.clone();
                w.push(j);
                next.push((w, tensor_with_weights(rs, decomp, &gen_weights[j])?));
            }
        }
        frontier = next;
    }
    let missing: Vec<usize> = (0..n).filter(|&i| found[i].is_none()).collect();
    if !missing.is_empty() {
        return Err(Error::SearchExhausted(missing.iter().map(|i| i + 1).collect()));
    }
    Ok(GenerationCertificate {
        system: rs.label().to_string(),
        generators: gens,
        entries: found.into_iter().map(Option::unwrap).collect(),
    })
}

/// Recompute each word's decomposition with [`tensor_decompose`] and check the
/// claimed multiplicity.
pub fn verify_generation_certificate(rs: &RootSystem, cert: &GenerationCertificate, budget: &Budget) -> Result<bool> {
    let gens = generators(rs)?;
    for entry in &cert.entries {
        if entry.word.is_empty() || entry.word.iter().any(|w| !gens.contains(w)) {
            return Ok(false);
        }
        let mut decomp = WeightMap::new();
        decomp.insert(entry.word[0].clone(), BigInt::one());
        for g in &entry.word[1..] {
            let mut next = WeightMap::new();
            for (nu, a) in &decomp {
                for (x, b) in tensor_decompose(rs, nu, g, budget)?.irreducibles.unwrap() {
                    *next.entry(x).or_insert_with(BigInt::zero) += a * b;
                }
            }
            decomp = next;
        }
        let target = Weight::fundamental(rs.rank(), entry.fundamental);
        match decomp.get(&target) {
            Some(m) if *m == entry.multiplicity && m.is_positive() => {}
            _ => return Ok(false),
        }
    }
    Ok(cert.entries.len() == rs.rank())
}

/// Dominance of coweights: `λ ≤ μ` iff `μ - λ` is a nonnegative integer
/// combination of simple coroots. Coordinates are fundamental coweights.
pub fn dominance_leq(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<bool> {
    rs.require_dominant(lambda)?;
    rs.require_dominant(mu)?;
    let n = rs.rank();
    let d = mu.sub(lambda);
    // simple coroot j has fundamental-coweight coordinates given by column j of
    // the Cartan matrix, so the coefficients are C^{-1} d
    let inv = rs.weight_basis_change();
    for j in 0..n {
        let a: BigRational = (0..n).fold(BigRational::zero(), |acc, i| {
            acc + &inv[j][i] * BigRational::from_integer(d.0[i].into())
        });
        if !a.is_integer() || a.is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `⟨λ, 2ρ⟩` for a dominant coweight `λ`: the dimension of its orbit in the
/// affine Grassmannian of the dual group.
pub fn orbit_dimension(rs: &RootSystem, lambda: &Weight) -> Result<u64> {
    rs.require_dominant(lambda)?;
    let n = rs.rank();
    let mut two_rho = vec![0i64; n];
    for a in rs.positive_roots() {
        for (t, x) in two_rho.iter_mut().zip(a) {
            *t += x;
        }
    }
    let v: i64 = lambda.0.iter().zip(&two_rho).map(|(l, r)| l * r).sum();
    Ok(v.to_u64().expect("nonnegative for dominant coweights"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::from_label(s).unwrap()
    }

    fn w(r: &RootSystem, s: &str) -> Weight {
        Weight::parse(r.rank(), s).unwrap()
    }

    fn irr(r: &RootSystem, items: &[(&str, i64)]) -> WeightMap {
        items
            .iter()
            .map(|(s, m)| (w(r, s), BigInt::from(*m)))
            .collect()
    }

    #[test]
    fn dimensions() {
        let b = rs("E8");
        assert_eq!(weyl_dimension(&b, &w(&b, "w8")).unwrap(), BigInt::from(248));
        let f = rs("F4");
        assert_eq!(weyl_dimension(&f, &w(&f, "w4")).unwrap(), BigInt::from(26));
        let a = rs("A5");
        assert_eq!(weyl_dimension(&a, &w(&a, "w1")).unwrap(), BigInt::from(6));
        assert!(weyl_dimension(&a, &Weight(vec![-1, 0, 0, 0, 0])).is_err());
    }

    #[test]
    fn small_weight_systems() {
        let b = Budget::default();
        let a1 = rs("A1");
        let ch = weight_multiplicities(&a1, &w(&a1, "2w1"), &b).unwrap();
        let ws = ch.weights.unwrap();
        assert_eq!(ws.len(), 3);
        assert!(ws.values().all(|m| *m == BigInt::one()));

        let a2 = rs("A2");
        let ch = weight_multiplicities(&a2, &w(&a2, "w1+w2"), &b).unwrap();
        let ws = ch.weights.unwrap();
        assert_eq!(ws[&Weight::zero(2)], BigInt::from(2));
        assert_eq!(ws.len(), 7);

        let g2 = rs("G2");
        let ch = weight_multiplicities(&g2, &w(&g2, "w1"), &b).unwrap();
        assert_eq!(ch.weights.unwrap().len(), 7);
    }

    #[test]
    fn clebsch_gordan() {
        let b = Budget::default();
        let a1 = rs("A1");
        let ch = tensor_decompose(&a1, &w(&a1, "w1"), &w(&a1, "w1"), &b).unwrap();
        assert_eq!(ch.irreducibles.unwrap(), irr(&a1, &[("2w1", 1), ("0", 1)]));
    }

    #[test]
    fn exterior_powers() {
        let b = Budget::default();
        let g2 = rs("G2");
        let ch = exterior_power_decompose(&g2, &w(&g2, "w1"), 2, &b).unwrap();
        assert_eq!(ch.irreducibles.unwrap(), irr(&g2, &[("w1", 1), ("w2", 1)]));
        let ch0 = exterior_power_decompose(&g2, &w(&g2, "w1"), 0, &b).unwrap();
        assert_eq!(ch0.irreducibles.unwrap(), irr(&g2, &[("0", 1)]));
        let ch8 = exterior_power_decompose(&g2, &w(&g2, "w1"), 8, &b).unwrap();
        assert!(ch8.is_zero());
        let c3 = rs("C3");
        let ch = exterior_power_decompose(&c3, &w(&c3, "w1"), 3, &b).unwrap();
        assert_eq!(ch.irreducibles.unwrap(), irr(&c3, &[("w3", 1), ("w1", 1)]));
    }

    #[test]
    fn certificates_small() {
        let b = Budget::default();
        let g2 = rs("G2");
        let cert = generation_certificate(&g2, &b).unwrap();
        assert_eq!(cert.entries[1].word, vec![w(&g2, "w1"), w(&g2, "w1")]);
        assert!(verify_generation_certificate(&g2, &cert, &b).unwrap());
        let mut bad = cert.clone();
        bad.entries[1].multiplicity = BigInt::from(2);
        assert!(!verify_generation_certificate(&g2, &bad, &b).unwrap());
    }

    #[test]
    fn coweight_combinatorics() {
        let a1 = rs("A1");
        assert_eq!(orbit_dimension(&a1, &w(&a1, "w1")).unwrap(), 1);
        assert_eq!(orbit_dimension(&a1, &Weight::zero(1)).unwrap(), 0);
        let a2 = rs("A2");
        assert!(dominance_leq(&a2, &Weight::zero(2), &w(&a2, "w1+w2")).unwrap());
        assert!(!dominance_leq(&a2, &Weight::zero(2), &w(&a2, "w1")).unwrap());
        assert!(dominance_leq(&a2, &w(&a2, "w1"), &w(&a2, "2w2")).unwrap());
        let b2 = rs("B2");
        // α_1^∨ = 2w1 - w2 and α_1^∨ + α_2^∨ = w2 in coweight coordinates
        assert!(dominance_leq(&b2, &w(&b2, "w2"), &w(&b2, "2w1")).unwrap());
        assert!(dominance_leq(&b2, &Weight::zero(2), &w(&b2, "w2")).unwrap());
        assert!(!dominance_leq(&b2, &Weight::zero(2), &w(&b2, "w1")).unwrap());
    }
}
