//! Torsion primes.
//!
//! Three ways to get at them:
//!
//! * [`torsion_primes_fast`]: primes dividing a coroot coefficient of the
//!   highest root.
//! * [`torsion_primes_subsystem_oracle`]: enumerate every Z-closed subsystem
//!   and read the torsion of the coroot lattice quotient off a Smith form.
//!   Exhaustive, so only allowed up to rank 5.
//! * [`torsion_primes_extended_diagram`]: only the subsystems reachable by
//!   repeatedly deleting a node of an extended Dynkin diagram, then Z-closing.
//!   Works at rank 8.
//!
//! Also the two prime tables that are stored as data (minimal-orbit parity
//! primes and tilting generation bounds).

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, smith_form};
use crate::rootsys::{AbelianInvariants, Family, RootSystem, SimpleType, TypeLabel};

/// Rank above which exhaustive subsystem enumeration is refused.
pub const ORACLE_RANK_LIMIT: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct PrimeSet(Vec<u64>);

impl PrimeSet {
    pub fn new(primes: impl IntoIterator<Item = u64>) -> Result<Self> {
        let set: BTreeSet<u64> = primes.into_iter().collect();
        if let Some(&bad) = set.iter().find(|&&p| !linalg::is_prime(p)) {
            return Err(Error::NotPrime(bad));
        }
        Ok(PrimeSet(set.into_iter().collect()))
    }

    pub fn empty() -> Self {
        PrimeSet(Vec::new())
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn contains(&self, p: u64) -> bool {
        self.0.binary_search(&p).is_ok()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn union(&self, other: &PrimeSet) -> PrimeSet {
        let set: BTreeSet<u64> = self.0.iter().chain(&other.0).copied().collect();
        PrimeSet(set.into_iter().collect())
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("none");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// A Z-closed subsystem whose coroot lattice quotient has `prime`-torsion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsystemCertificate {
    pub prime: u64,
    /// Indices into [`RootSystem::positive_roots`].
    pub subsystem: Vec<usize>,
    pub subsystem_type: String,
    /// An elementary divisor of `Q(Φ^∨)/Q(Φ_1^∨)` divisible by `prime`.
    pub divisor_witness: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub primes: PrimeSet,
    pub certificates: Vec<SubsystemCertificate>,
    /// Number of distinct Z-closed subsystems examined.
    pub subsystems_examined: usize,
}

pub fn torsion_primes_fast(rs: &RootSystem) -> PrimeSet {
    let mut out = PrimeSet::empty();
    for t in &rs.label().0 {
        let comp = RootSystem::new(TypeLabel(vec![*t])).expect("valid component");
        let coeffs = comp.coroot_coefficients().expect("irreducible component");
        let primes = coeffs
            .coefficients
            .iter()
            .flat_map(|&c| linalg::prime_factors(&BigInt::from(c)));
        out = out.union(&PrimeSet::new(primes).expect("prime factors are prime"));
    }
    out
}

/// Exhaustive search over all Z-closed subsystems. Every Z-closed subsystem
/// is `Φ ∩ span_Z(S)` for a linearly independent set `S` of positive roots
/// (take `S` to be one of its bases), so enumerating independent subsets
/// finds them all.
pub fn torsion_primes_subsystem_oracle(rs: &RootSystem) -> Result<OracleResult> {
    if rs.rank() > ORACLE_RANK_LIMIT {
        return Err(Error::RankGuard {
            rank: rs.rank(),
            limit: ORACLE_RANK_LIMIT,
        });
    }
    let pos = rs.positive_roots();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut chosen: Vec<usize> = Vec::new();
    enumerate_independent(rs, pos, 0, &mut chosen, &mut seen);
    Ok(collect_certificates(rs, seen))
}

fn enumerate_independent(
    rs: &RootSystem,
    pos: &[Vec<i64>],
    start: usize,
    chosen: &mut Vec<usize>,
    seen: &mut HashSet<Vec<usize>>,
) {
    if !chosen.is_empty() {
        let basis: Vec<Vec<i64>> = chosen.iter().map(|&k| pos[k].clone()).collect();
        seen.insert(integral_closure(rs, &basis));
    }
    if chosen.len() == rs.rank() {
        return;
    }
    for k in start..pos.len() {
        chosen.push(k);
        let vecs: Vec<Vec<i64>> = chosen.iter().map(|&j| pos[j].clone()).collect();
        if linalg::rank_i64(&vecs) == chosen.len() {
            enumerate_independent(rs, pos, k + 1, chosen, seen);
        }
        chosen.pop();
    }
}

/// Positive root indices of `Φ ∩ span_Z(generators)`.
pub fn integral_closure(rs: &RootSystem, generators: &[Vec<i64>]) -> Vec<usize> {
    let lattice = IntegerSpan::new(generators);
    rs.positive_roots()
        .iter()
        .enumerate()
        .filter(|(_, r)| lattice.contains(r))
        .map(|(k, _)| k)
        .collect()
}

/// Membership test for the Z-span of a set of integer vectors.
struct IntegerSpan {
    basis: Vec<Vec<i64>>,
    pivots: Vec<usize>,
    inverse: Vec<Vec<Ratio<i64>>>,
}

impl IntegerSpan {
    fn new(generators: &[Vec<i64>]) -> Self {
        // reduce to an independent subset with the same Q-span, then to a
        // Z-basis via the Hermite form of the generators
        let basis = hermite_rows(generators);
        let k = basis.len();
        let n = basis.first().map_or(0, |b| b.len());
        // pick k coordinates on which the basis is invertible
        let mut pivots = Vec::new();
        for c in 0..n {
            let mut trial = pivots.clone();
            trial.push(c);
            let minor: Vec<Vec<i64>> = basis
                .iter()
                .map(|b| trial.iter().map(|&j| b[j]).collect())
                .collect();
            if linalg::rank_i64(&transpose(&minor)) == trial.len() {
                pivots = trial;
            }
            if pivots.len() == k {
                break;
            }
        }
        let minor: Vec<Vec<Ratio<i64>>> = basis
            .iter()
            .map(|b| pivots.iter().map(|&j| Ratio::from_integer(b[j])).collect())
            .collect();
        let inverse = invert_small(&minor);
        IntegerSpan {
            basis,
            pivots,
            inverse,
        }
    }

    fn contains(&self, v: &[i64]) -> bool {
        let k = self.basis.len();
        // coefficients c with c · basis = v on the pivot coordinates
        let coeffs: Vec<Ratio<i64>> = (0..k)
            .map(|i| {
                self.pivots
                    .iter()
                    .enumerate()
                    .map(|(r, &j)| Ratio::from_integer(v[j]) * self.inverse[r][i])
                    .sum()
            })
            .collect();
        if coeffs.iter().any(|c| !c.is_integer()) {
            return false;
        }
        (0..v.len()).all(|j| {
            let s: i64 = coeffs
                .iter()
                .zip(&self.basis)
                .map(|(c, b)| c.to_integer() * b[j])
                .sum();
            s == v[j]
        })
    }
}

fn transpose(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|r| r[j]).collect())
        .collect()
}

/// Nonzero rows of a row-echelon Hermite form: a Z-basis of the row lattice.
fn hermite_rows(generators: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut rows: Vec<Vec<i64>> = generators.to_vec();
    let n = rows.first().map_or(0, |r| r.len());
    let mut out = Vec::new();
    for c in 0..n {
        loop {
            let nonzero: Vec<usize> = (0..rows.len()).filter(|&i| rows[i][c] != 0).collect();
            if nonzero.len() <= 1 {
                break;
            }
            let piv = *nonzero.iter().min_by_key(|&&i| rows[i][c].abs()).unwrap();
            let prow = rows[piv].clone();
            for &i in &nonzero {
                if i != piv {
                    let q = Integer::div_floor(&rows[i][c], &prow[c]);
                    for j in 0..n {
                        rows[i][j] -= q * prow[j];
                    }
                }
            }
        }
        if let Some(i) = (0..rows.len()).find(|&i| rows[i][c] != 0) {
            out.push(rows.remove(i));
        }
    }
    out
}

fn invert_small(m: &[Vec<Ratio<i64>>]) -> Vec<Vec<Ratio<i64>>> {
    let k = m.len();
    let mut a: Vec<Vec<Ratio<i64>>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..k).map(|j| Ratio::from_integer(i64::from(i == j))));
            r
        })
        .collect();
    for c in 0..k {
        let p = (c..k).find(|&r| !a[r][c].is_zero()).expect("invertible minor");
        a.swap(c, p);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= inv;
        }
        let prow = a[c].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != c && !row[c].is_zero() {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= f * y;
                }
            }
        }
    }
    a.into_iter().map(|r| r[k..].to_vec()).collect()
}

/// Elementary divisors (all of them, including ones) of `Q(Φ^∨)/Q(Φ_1^∨)`.
pub fn coroot_quotient_divisors(rs: &RootSystem, subsystem: &[usize]) -> Vec<BigInt> {
    let rows: Vec<Vec<BigInt>> = subsystem
        .iter()
        .map(|&k| rs.positive_coroots()[k].iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    smith_form(&rows).invariant_factors
}

fn collect_certificates(rs: &RootSystem, subsystems: HashSet<Vec<usize>>) -> OracleResult {
    let examined = subsystems.len();
    let mut best: BTreeMap<u64, (Vec<usize>, u64)> = BTreeMap::new();
    let mut ordered: Vec<Vec<usize>> = subsystems.into_iter().collect();
    ordered.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    for sub in ordered {
        for d in coroot_quotient_divisors(rs, &sub) {
            if d <= BigInt::from(1) {
                continue;
            }
            let d = d.to_u64().expect("divisor fits u64");
            for p in linalg::prime_factors(&BigInt::from(d)) {
                best.entry(p).or_insert_with(|| (sub.clone(), d));
            }
        }
    }
    let certificates: Vec<SubsystemCertificate> = best
        .into_iter()
        .map(|(prime, (subsystem, d))| SubsystemCertificate {
            prime,
            subsystem_type: subsystem_type(rs, &subsystem),
            subsystem,
            divisor_witness: d,
        })
        .collect();
    let primes = PrimeSet(certificates.iter().map(|c| c.prime).collect());
    OracleResult {
        primes,
        certificates,
        subsystems_examined: examined,
    }
}

/// Re-derive everything a certificate claims: the subsystem is Z-closed and
/// the witness is an elementary divisor divisible by the prime.
pub fn verify_certificate(rs: &RootSystem, cert: &SubsystemCertificate) -> bool {
    let n = rs.num_positive_roots();
    if cert.subsystem.is_empty() || cert.subsystem.iter().any(|&k| k >= n) {
        return false;
    }
    let gens: Vec<Vec<i64>> = cert
        .subsystem
        .iter()
        .map(|&k| rs.positive_roots()[k].clone())
        .collect();
    let mut sorted = cert.subsystem.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if integral_closure(rs, &gens) != sorted {
        return false;
    }
    if cert.divisor_witness == 0 || !cert.divisor_witness.is_multiple_of(cert.prime) {
        return false;
    }
    coroot_quotient_divisors(rs, &sorted)
        .iter()
        .any(|d| *d == BigInt::from(cert.divisor_witness))
}

/// Scaled inner product of two vectors in simple-root coordinates.
fn root_inner(rs: &RootSystem, a: &[i64], b: &[i64]) -> i64 {
    let c = rs.cartan();
    let d = rs.half_norms();
    let mut s = 0;
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            s += ai * bj * c[i][j] * d[j];
        }
    }
    s
}

/// Simple roots of the subsystem (with respect to the ambient positivity).
fn subsystem_base(rs: &RootSystem, subsystem: &[usize]) -> Vec<usize> {
    let set: HashSet<usize> = subsystem.iter().copied().collect();
    let pos = rs.positive_roots();
    subsystem
        .iter()
        .copied()
        .filter(|&k| {
            !subsystem.iter().any(|&a| {
                let diff: Vec<i64> = pos[k].iter().zip(&pos[a]).map(|(x, y)| x - y).collect();
                a != k && rs.root_index(&diff).is_some_and(|j| set.contains(&j))
            })
        })
        .collect()
}

/// Connected components of a base under non-orthogonality.
fn base_components(rs: &RootSystem, base: &[usize]) -> Vec<Vec<usize>> {
    let pos = rs.positive_roots();
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut assigned = vec![false; base.len()];
    for s in 0..base.len() {
        if assigned[s] {
            continue;
        }
        assigned[s] = true;
        let mut comp = vec![base[s]];
        let mut i = 0;
        while i < comp.len() {
            for t in 0..base.len() {
                if !assigned[t] && root_inner(rs, &pos[comp[i]], &pos[base[t]]) != 0 {
                    assigned[t] = true;
                    comp.push(base[t]);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Cartan type of a subsystem given by positive root indices, e.g. `A1xA1xA1`.
pub fn subsystem_type(rs: &RootSystem, subsystem: &[usize]) -> String {
    let pos = rs.positive_roots();
    let base = subsystem_base(rs, subsystem);
    let mut parts: Vec<SimpleType> = Vec::new();
    for comp in base_components(rs, &base) {
        let n = comp.len();
        let lens: Vec<i64> = comp.iter().map(|&k| root_inner(rs, &pos[k], &pos[k])).collect();
        let long = *lens.iter().max().unwrap();
        let short_count = lens.iter().filter(|&&l| l < long).count();
        // count the component's positive roots: those in the subsystem whose
        // support on the base lies in this component
        let comp_roots = subsystem
            .iter()
            .filter(|&&k| comp.iter().any(|&b| root_inner(rs, &pos[k], &pos[b]) != 0))
            .count();
        let family = if short_count == 0 {
            match (n, comp_roots) {
                (_, c) if c == n * (n + 1) / 2 => Family::A,
                (6, 36) => Family::E,
                (7, 63) => Family::E,
                (8, 120) => Family::E,
                _ => Family::D,
            }
        } else {
            match (n, comp_roots) {
                (2, 6) => Family::G,
                (4, 24) => Family::F,
                _ if short_count == 1 || n == 2 => Family::B,
                _ => Family::C,
            }
        };
        parts.push(SimpleType::new(family, n).expect("classified type is valid"));
    }
    parts.sort_by_key(|t| (std::cmp::Reverse(t.rank), t.family));
    TypeLabel(parts).to_string()
}

/// Root set (positive indices) generated by a set of roots under reflections.
fn generated_subsystem(rs: &RootSystem, generators: &[Vec<i64>]) -> Vec<usize> {
    let mut all: Vec<Vec<i64>> = Vec::new();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    for g in generators {
        for v in [g.clone(), g.iter().map(|x| -x).collect()] {
            if seen.insert(v.clone()) {
                all.push(v);
            }
        }
    }
    let mut i = 0;
    while i < all.len() {
        let gamma = all[i].clone();
        for b in generators {
            let num = 2 * root_inner(rs, &gamma, b);
            let den = root_inner(rs, b, b);
            let c = num / den;
            let img: Vec<i64> = gamma.iter().zip(b).map(|(x, y)| x - c * y).collect();
            if seen.insert(img.clone()) {
                all.push(img);
            }
        }
        i += 1;
    }
    let mut idx: Vec<usize> = all
        .iter()
        .filter_map(|r| rs.root_index(r))
        .filter(|&k| k < rs.num_positive_roots())
        .collect();
    idx.sort_unstable();
    idx
}

/// Subsystems reachable from `Φ` by repeatedly replacing an irreducible
/// component by the subsystem obtained from deleting one node of its extended
/// Dynkin diagram, each followed by Z-closure.
pub fn torsion_primes_extended_diagram(rs: &RootSystem) -> OracleResult {
    let pos = rs.positive_roots();
    let start: Vec<usize> = (0..rs.num_positive_roots()).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    seen.insert(start.clone());
    let mut stack = vec![start];
    while let Some(sub) = stack.pop() {
        let base = subsystem_base(rs, &sub);
        let comps = base_components(rs, &base);
        for (ci, comp) in comps.iter().enumerate() {
            let comp_roots: Vec<usize> = sub
                .iter()
                .copied()
                .filter(|&k| comp.iter().any(|&b| root_inner(rs, &pos[k], &pos[b]) != 0))
                .collect();
            let theta = *comp_roots
                .iter()
                .max_by_key(|&&k| RootSystem::height(&pos[k]))
                .unwrap();
            let neg_theta: Vec<i64> = pos[theta].iter().map(|x| -x).collect();
            for &drop in comp {
                let mut gens: Vec<Vec<i64>> = vec![neg_theta.clone()];
                gens.extend(comp.iter().filter(|&&b| b != drop).map(|&b| pos[b].clone()));
                for (cj, other) in comps.iter().enumerate() {
                    if cj != ci {
                        gens.extend(other.iter().map(|&b| pos[b].clone()));
                    }
                }
                let generated = generated_subsystem(rs, &gens);
                let gen_vecs: Vec<Vec<i64>> = generated.iter().map(|&k| pos[k].clone()).collect();
                let closed = integral_closure(rs, &gen_vecs);
                if seen.insert(closed.clone()) {
                    stack.push(closed);
                }
            }
        }
    }
    collect_certificates(rs, seen)
}

/// Primes `p` for which the minimal orbit closure fails the parity property.
pub fn minimal_orbit_parity_primes(rs: &RootSystem) -> Result<PrimeSet> {
    let t = rs.require_irreducible()?;
    let primes: &[u64] = match t.family {
        Family::A => &[],
        Family::B | Family::C | Family::D | Family::F => &[2],
        Family::G => &[3],
        Family::E if t.rank == 8 => &[2, 3, 5],
        Family::E => &[2, 3],
    };
    PrimeSet::new(primes.iter().copied())
}

/// Lower bound on `p` above which tilting modules are generated by the
/// minuscule and highest-short-root ones: the condition is `p > exclusive_min`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GenerationBound {
    pub exclusive_min: u64,
}

impl GenerationBound {
    pub fn admits(&self, p: u64) -> bool {
        p > self.exclusive_min
    }
}

impl fmt::Display for GenerationBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exclusive_min < 2 {
            f.write_str("any p")
        } else {
            write!(f, "p > {}", self.exclusive_min)
        }
    }
}

/// The generation bound table. `improved` lowers the B and D bounds to `p > 2`.
pub fn tilting_generation_bound(rs: &RootSystem, improved: bool) -> Result<GenerationBound> {
    let t = rs.require_irreducible()?;
    let n = t.rank as u64;
    let exclusive_min = match t.family {
        Family::A => 0,
        Family::B if improved => 2.min(n - 1),
        Family::B => n - 1,
        Family::D if improved => 2.min(n - 2),
        Family::D => n - 2,
        Family::C => n,
        Family::F | Family::G => 3,
        Family::E => match t.rank {
            6 => 3,
            7 => 19,
            _ => 31,
        },
    };
    Ok(GenerationBound { exclusive_min })
}

/// `P/Q` of the subsystem spanned by the long simple roots.
pub fn long_simple_fundamental_group(rs: &RootSystem) -> Result<AbelianInvariants> {
    rs.require_irreducible()?;
    let longest = *rs.half_norms().iter().max().unwrap();
    let long: Vec<usize> = (0..rs.rank()).filter(|&i| rs.half_norms()[i] == longest).collect();
    let form = smith_form(&linalg::to_big(&rs.sub_cartan(&long)));
    Ok(AbelianInvariants(
        form.torsion()
            .iter()
            .map(|d| d.to_u64().expect("divisor fits u64"))
            .collect(),
    ))
}
