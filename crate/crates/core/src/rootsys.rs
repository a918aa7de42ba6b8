//! Finite crystallographic root systems in Bourbaki numbering.
//!
//! Conventions, fixed for every family:
//!
//! * Simple roots are numbered as in Bourbaki's tables; indices in this API
//!   are 0-based (`α_1` is index 0). User-facing labels (`w1`, `ϖ_1`) are 1-based.
//! * `cartan[i][j] = ⟨α_i, α_j^∨⟩ = 2(α_i, α_j)/(α_j, α_j)`. With this
//!   convention row `i` of the Cartan matrix is `α_i` written in
//!   fundamental-weight coordinates.
//! * Long roots have squared length 2 in every irreducible factor. Internally
//!   the bilinear form is scaled by a common integer so that every inner product
//!   of roots is an integer.
//!
//! | family | simple roots (Bourbaki)                | short simple roots |
//! |--------|----------------------------------------|--------------------|
//! | `A_n`  | chain `1-2-…-n`                        | none               |
//! | `B_n`  | chain, double bond `n-1 => n`          | `α_n`              |
//! | `C_n`  | chain, double bond `n-1 <= n`          | `α_1 … α_{n-1}`    |
//! | `D_n`  | chain `1-…-(n-2)`, `n-2` joined to `n-1` and `n` | none     |
//! | `E_n`  | `1-3-4-5-…-n`, `2` joined to `4`       | none               |
//! | `F_4`  | chain, double bond `2 => 3`            | `α_3, α_4`         |
//! | `G_2`  | triple bond                            | `α_1`              |

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, RatMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// An irreducible Cartan type such as `E_8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::InvalidType(format!("{}{}", family.letter(), rank)))
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_order(self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1_152,
            Family::G => 12,
        }
    }

    /// Simple bonds of the Dynkin diagram (0-based) and the half squared
    /// lengths of the simple roots in units where the short roots have 1.
    fn diagram(self) -> (Vec<(usize, usize)>, Vec<i64>) {
        let n = self.rank;
        let chain = |len: usize| (0..len.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
        match self.family {
            Family::A => (chain(n), vec![1; n]),
            Family::B => {
                let mut d = vec![2; n];
                d[n - 1] = 1;
                (chain(n), d)
            }
            Family::C => {
                let mut d = vec![1; n];
                d[n - 1] = 2;
                (chain(n), d)
            }
            Family::D => {
                let mut edges = chain(n - 1);
                edges.push((n - 3, n - 1));
                (edges, vec![1; n])
            }
            Family::E => {
                let mut edges = vec![(0, 2), (1, 3)];
                edges.extend((2..n - 1).map(|i| (i, i + 1)));
                (edges, vec![1; n])
            }
            Family::F => (chain(4), vec![2, 2, 1, 1]),
            Family::G => (chain(2), vec![1, 3]),
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A (possibly reducible) Cartan type: an ordered list of irreducible factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TypeLabel(pub Vec<SimpleType>);

impl TypeLabel {
    pub fn rank(&self) -> usize {
        self.0.iter().map(|t| t.rank).sum()
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    /// Accepts `E8`, `e8`, `E_8`, and products such as `A2xB3`, `A1+A1`, `A1×G2`.
    fn from_str(s: &str) -> Result<Self> {
        let cleaned = s.trim().replace(['×', '*', '+'], "x");
        let mut factors = Vec::new();
        for part in cleaned.split(['x', 'X']) {
            let part = part.trim().replace('_', "");
            let mut chars = part.chars();
            let letter = chars
                .next()
                .ok_or_else(|| Error::InvalidType(s.to_string()))?;
            let family = match letter.to_ascii_uppercase() {
                'A' => Family::A,
                'B' => Family::B,
                'C' => Family::C,
                'D' => Family::D,
                'E' => Family::E,
                'F' => Family::F,
                'G' => Family::G,
                _ => return Err(Error::InvalidType(s.to_string())),
            };
            let rank: usize = chars
                .as_str()
                .parse()
                .map_err(|_| Error::InvalidType(s.to_string()))?;
            factors.push(SimpleType::new(family, rank)?);
        }
        if factors.is_empty() {
            return Err(Error::InvalidType(s.to_string()));
        }
        Ok(TypeLabel(factors))
    }
}

/// A weight in fundamental-weight coordinates: `λ = Σ λ_i ϖ_i`, `λ_i = ⟨λ, α_i^∨⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight `ϖ_{i+1}`.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Weight(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    /// `2w8`, `w1+w7`, `0`: the notation used on the command line (1-based).
    pub fn label(&self) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match c {
                1 => format!("w{}", i + 1),
                -1 => format!("-w{}", i + 1),
                _ => format!("{}w{}", c, i + 1),
            })
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+").replace("+-", "-")
        }
    }

    /// Parse the notation produced by [`Weight::label`].
    pub fn parse(rank: usize, s: &str) -> Result<Weight> {
        let s = s.trim().replace('ϖ', "w").replace(' ', "");
        let mut v = vec![0i64; rank];
        if s == "0" {
            return Ok(Weight(v));
        }
        let bad = || Error::Malformed(format!("cannot parse weight '{s}'"));
        let normalized = s.replace('-', "+-");
        for term in normalized.split('+').filter(|t| !t.is_empty()) {
            let (coef, idx) = term.split_once('w').ok_or_else(bad)?;
            let coef: i64 = match coef {
                "" => 1,
                "-" => -1,
                c => c.parse().map_err(|_| bad())?,
            };
            let idx: usize = idx.parse().map_err(|_| bad())?;
            if idx == 0 || idx > rank {
                return Err(Error::IndexOutOfRange {
                    index: idx,
                    rank,
                });
            }
            v[idx - 1] += coef;
        }
        Ok(Weight(v))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Elementary divisors greater than one of a finite abelian group, each
/// dividing the next.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianInvariants(pub Vec<u64>);

impl AbelianInvariants {
    pub fn order(&self) -> u64 {
        self.0.iter().product()
    }

    pub(crate) fn from_smith(form: &linalg::SmithForm) -> Self {
        AbelianInvariants(
            form.torsion()
                .iter()
                .map(|d| d.to_u64().expect("elementary divisor fits u64"))
                .collect(),
        )
    }
}

/// Coroot coefficients `α̃^∨ = Σ n_i α_i^∨` of the highest root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorootCoefficients {
    pub coefficients: Vec<u64>,
    pub max: u64,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    label: TypeLabel,
    cartan: Vec<Vec<i64>>,
    /// `(α_i, α_i)/2` in the scaled form.
    half_norms: Vec<i64>,
    component_of: Vec<usize>,
    components: Vec<std::ops::Range<usize>>,
    /// Positive roots in simple-root coordinates, simple roots first, then by height.
    positive_roots: Vec<Vec<i64>>,
    positive_half_norms: Vec<i64>,
    /// Positive coroots in simple-coroot coordinates, aligned with `positive_roots`.
    positive_coroots: Vec<Vec<i64>>,
    root_index: HashMap<Vec<i64>, usize>,
    inverse_cartan: RatMatrix,
    /// Integer Gram matrix of the fundamental weights, scaled by `weight_form_scale`.
    weight_form: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn new(label: TypeLabel) -> Result<Self> {
        let n = label.rank();
        let mut cartan = vec![vec![0i64; n]; n];
        let mut half_norms = vec![0i64; n];
        let mut component_of = vec![0usize; n];
        let mut components = Vec::new();

        let common: i64 = label
            .0
            .iter()
            .map(|t| *t.diagram().1.iter().max().unwrap())
            .fold(1, |acc, m| acc.lcm(&m));
        let mut offset = 0;
        for (c, t) in label.0.iter().enumerate() {
            let (edges, d) = t.diagram();
            let long = *d.iter().max().unwrap();
            let scale = common / long;
            let r = t.rank;
            let mut sym = vec![vec![0i64; r]; r];
            for i in 0..r {
                sym[i][i] = 2 * d[i];
            }
            for &(i, j) in &edges {
                let v = -d[i].max(d[j]);
                sym[i][j] = v;
                sym[j][i] = v;
            }
            for i in 0..r {
                for j in 0..r {
                    cartan[offset + i][offset + j] = sym[i][j] / d[j];
                }
                half_norms[offset + i] = d[i] * scale;
                component_of[offset + i] = c;
            }
            components.push(offset..offset + r);
            offset += r;
        }

        let positive_roots = enumerate_positive_roots(&cartan);
        let sym = |a: &[i64], b: &[i64]| -> i64 {
            let mut s = 0;
            for i in 0..n {
                if a[i] == 0 {
                    continue;
                }
                for j in 0..n {
                    s += a[i] * cartan[i][j] * half_norms[j] * b[j];
                }
            }
            s
        };
        let positive_half_norms: Vec<i64> = positive_roots.iter().map(|a| sym(a, a) / 2).collect();
        let positive_coroots: Vec<Vec<i64>> = positive_roots
            .iter()
            .zip(&positive_half_norms)
            .map(|(a, &da)| (0..n).map(|i| a[i] * half_norms[i] / da).collect())
            .collect();
        let mut root_index = HashMap::new();
        for (k, r) in positive_roots.iter().enumerate() {
            root_index.insert(r.clone(), k);
        }
        let np = positive_roots.len();
        for (k, r) in positive_roots.iter().enumerate() {
            root_index.insert(r.iter().map(|x| -x).collect(), np + k);
        }

        let inverse_cartan = linalg::inverse_rational(&linalg::to_rational(&cartan))
            .ok_or_else(|| Error::Internal("singular Cartan matrix".into()))?;
        let den = inverse_cartan
            .iter()
            .flatten()
            .fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
        let weight_form: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let v = &inverse_cartan[j][i] * BigRational::from_integer(BigInt::from(half_norms[i]) * &den);
                        v.to_integer().to_i64().unwrap()
                    })
                    .collect()
            })
            .collect();
        for i in 0..n {
            for j in 0..n {
                if weight_form[i][j] != weight_form[j][i] {
                    return Err(Error::Internal("weight form not symmetric".into()));
                }
            }
        }

        Ok(RootSystem {
            label,
            cartan,
            half_norms,
            component_of,
            components,
            positive_roots,
            positive_half_norms,
            positive_coroots,
            root_index,
            inverse_cartan,
            weight_form,
        })
    }

    pub fn from_label(s: &str) -> Result<Self> {
        RootSystem::new(s.parse()?)
    }

    pub fn label(&self) -> &TypeLabel {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn is_irreducible(&self) -> bool {
        self.label.0.len() == 1
    }

    pub fn require_irreducible(&self) -> Result<SimpleType> {
        if self.is_irreducible() {
            Ok(self.label.0[0])
        } else {
            Err(Error::Reducible(self.label.to_string()))
        }
    }

    /// Index ranges of the simple roots of each irreducible factor.
    pub fn components(&self) -> &[std::ops::Range<usize>] {
        &self.components
    }

    pub fn component_of(&self, i: usize) -> usize {
        self.component_of[i]
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.positive_coroots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// All roots: the positive roots followed by their negatives in the same order.
    pub fn roots(&self) -> Vec<Vec<i64>> {
        let mut all = self.positive_roots.clone();
        all.extend(
            self.positive_roots
                .iter()
                .map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()),
        );
        all
    }

    pub fn root_index(&self, root: &[i64]) -> Option<usize> {
        self.root_index.get(root).copied()
    }

    pub fn half_norms(&self) -> &[i64] {
        &self.half_norms
    }

    /// Half squared length of a positive root (scaled form).
    pub fn root_half_norm(&self, k: usize) -> i64 {
        self.positive_half_norms[k]
    }

    pub fn is_long(&self, k: usize) -> bool {
        let c = self.component_of_root(k);
        let longest = self.components[c]
            .clone()
            .map(|i| self.half_norms[i])
            .max()
            .unwrap();
        self.positive_half_norms[k] == longest
    }

    pub fn component_of_root(&self, k: usize) -> usize {
        let first = self.positive_roots[k].iter().position(|&x| x != 0).unwrap();
        self.component_of[first]
    }

    pub fn height(root: &[i64]) -> i64 {
        root.iter().sum()
    }

    /// `⟨β, α_i^∨⟩` for `β` in simple-root coordinates.
    pub fn root_pairing(&self, beta: &[i64], i: usize) -> i64 {
        beta.iter().zip(&self.cartan).map(|(b, row)| b * row[i]).sum()
    }

    /// A vector in simple-root coordinates rewritten in fundamental-weight coordinates.
    pub fn root_to_weight(&self, a: &[i64]) -> Weight {
        let n = self.rank();
        Weight(
            (0..n)
                .map(|i| self.root_pairing(a, i))
                .collect(),
        )
    }

    /// The simple root `α_{i+1}` in fundamental-weight coordinates.
    pub fn simple_root_weight(&self, i: usize) -> Weight {
        Weight(self.cartan[i].clone())
    }

    /// Exact simple-root coordinates of a weight (denominators dividing `det C`).
    pub fn weight_to_root_coords(&self, w: &Weight) -> Vec<BigRational> {
        let n = self.rank();
        (0..n)
            .map(|k| {
                (0..n).fold(BigRational::zero(), |acc, i| {
                    acc + &self.inverse_cartan[i][k] * BigRational::from_integer(w.0[i].into())
                })
            })
            .collect()
    }

    /// Matrix converting fundamental-weight coordinates to simple-root coordinates.
    pub fn weight_basis_change(&self) -> &RatMatrix {
        &self.inverse_cartan
    }

    /// `⟨λ, α^∨⟩` for the `k`-th positive root.
    pub fn coroot_pairing(&self, w: &Weight, k: usize) -> i64 {
        self.positive_coroots[k]
            .iter()
            .zip(&w.0)
            .map(|(c, l)| c * l)
            .sum()
    }

    /// Scaled inner product of two weights given in fundamental coordinates.
    pub fn inner(&self, a: &Weight, b: &Weight) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += a.0[i] * self.weight_form[i][j] * b.0[j];
            }
        }
        s
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: w.rank(),
            });
        }
        Ok(())
    }

    pub fn require_dominant(&self, w: &Weight) -> Result<()> {
        self.check_weight(w)?;
        if w.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant(w.0.clone()))
        }
    }

    /// `s_i(λ) = λ - ⟨λ, α_i^∨⟩ α_i`.
    pub fn reflect_weight(&self, w: &mut Weight, i: usize) {
        let c = w.0[i];
        if c != 0 {
            for (x, a) in w.0.iter_mut().zip(&self.cartan[i]) {
                *x -= c * a;
            }
        }
    }

    /// Move a weight into the dominant chamber by simple reflections. Returns the
    /// dominant representative and the parity of the number of reflections used.
    pub fn to_dominant(&self, w: &Weight) -> (Weight, bool) {
        let mut v = w.clone();
        let mut odd = false;
        while let Some(i) = v.0.iter().position(|&c| c < 0) {
            self.reflect_weight(&mut v, i);
            odd = !odd;
        }
        (v, odd)
    }

    pub fn weyl_order(&self) -> u128 {
        self.label.0.iter().map(|t| t.weyl_order()).product()
    }

    /// Highest root in fundamental-weight coordinates.
    pub fn highest_root(&self) -> Result<Weight> {
        self.require_irreducible()?;
        let top = self.highest_root_coords();
        Ok(self.root_to_weight(&top))
    }

    fn highest_root_coords(&self) -> Vec<i64> {
        // unique root of maximal height
        self.positive_roots
            .iter()
            .max_by_key(|r| Self::height(r))
            .unwrap()
            .clone()
    }

    /// Highest short root; equals the highest root for simply laced types.
    pub fn highest_short_root(&self) -> Result<Weight> {
        self.require_irreducible()?;
        let shortest = *self.half_norms.iter().min().unwrap();
        let k = (0..self.positive_roots.len())
            .filter(|&k| self.positive_half_norms[k] == shortest)
            .max_by_key(|&k| Self::height(&self.positive_roots[k]))
            .unwrap();
        Ok(self.root_to_weight(&self.positive_roots[k]))
    }

    pub fn coroot_coefficients(&self) -> Result<CorootCoefficients> {
        self.require_irreducible()?;
        let top = self.highest_root_coords();
        let k = self.root_index[&top];
        let coefficients: Vec<u64> = self.positive_coroots[k].iter().map(|&c| c as u64).collect();
        let max = *coefficients.iter().max().unwrap();
        Ok(CorootCoefficients { coefficients, max })
    }

    /// `h^∨ = 1 + Σ n_α^∨`.
    pub fn dual_coxeter_number(&self) -> Result<u64> {
        Ok(1 + self.coroot_coefficients()?.coefficients.iter().sum::<u64>())
    }

    /// `h = 1 + Σ` (simple-root coefficients of the highest root).
    pub fn coxeter_number(&self) -> Result<u64> {
        self.require_irreducible()?;
        Ok(1 + Self::height(&self.highest_root_coords()) as u64)
    }

    /// Dimension `2h^∨ - 2` of the minimal nilpotent orbit.
    pub fn minimal_orbit_dimension(&self) -> Result<u64> {
        Ok(2 * self.dual_coxeter_number()? - 2)
    }

    /// 0-based indices `i` with `⟨ϖ_i, α^∨⟩ ≤ 1` for every positive root.
    pub fn minuscule_weights(&self) -> Vec<usize> {
        (0..self.rank())
            .filter(|&i| self.positive_coroots.iter().all(|c| c[i] <= 1))
            .collect()
    }

    /// `P(Φ)/Q(Φ)` via the Smith form of the Cartan matrix.
    pub fn fundamental_group(&self) -> AbelianInvariants {
        AbelianInvariants::from_smith(&linalg::smith_form(&linalg::to_big(&self.cartan)))
    }

    /// Sub-Cartan matrix on the given simple indices.
    pub fn sub_cartan(&self, indices: &[usize]) -> Vec<Vec<i64>> {
        indices
            .iter()
            .map(|&i| indices.iter().map(|&j| self.cartan[i][j]).collect())
            .collect()
    }

    /// W-orbit of a weight, by breadth-first search over simple reflections.
    pub fn weyl_orbit(&self, w: &Weight, limit: usize) -> Result<Vec<Weight>> {
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut queue = VecDeque::new();
        let mut out = Vec::new();
        seen.insert(w.clone());
        queue.push_back(w.clone());
        while let Some(v) = queue.pop_front() {
            for i in 0..self.rank() {
                if v.0[i] == 0 {
                    continue;
                }
                let mut u = v.clone();
                self.reflect_weight(&mut u, i);
                if seen.insert(u.clone()) {
                    queue.push_back(u);
                }
            }
            out.push(v);
            if seen.len() > limit {
                return Err(Error::BudgetExceeded {
                    what: format!("orbit of {w}"),
                    limit,
                });
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> RootSystemJson {
        RootSystemJson {
            type_label: self.label.to_string(),
            cartan: self.cartan.clone(),
            roots: self.roots(),
        }
    }

    /// Rebuild from the JSON export, checking that the stored data matches.
    pub fn from_json(doc: &RootSystemJson) -> Result<Self> {
        let rs = RootSystem::from_label(&doc.type_label)?;
        if rs.cartan != doc.cartan {
            return Err(Error::Malformed("Cartan matrix does not match type label".into()));
        }
        let mine: HashSet<&Vec<i64>> = rs.root_index.keys().collect();
        let theirs: HashSet<&Vec<i64>> = doc.roots.iter().collect();
        if mine != theirs || doc.roots.len() != mine.len() {
            return Err(Error::Malformed("root list does not match type label".into()));
        }
        Ok(rs)
    }
}

/// JSON interchange form of a root system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemJson {
    pub type_label: String,
    pub cartan: Vec<Vec<i64>>,
    pub roots: Vec<Vec<i64>>,
}

fn enumerate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..n {
            let c: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
            if c == 0 {
                continue;
            }
            let mut img = beta.clone();
            img[i] -= c;
            if seen.insert(img.clone()) {
                queue.push_back(img);
            }
        }
    }
    let mut pos: Vec<Vec<i64>> = seen.into_iter().filter(|r| r.iter().all(|&x| x >= 0)).collect();
    pos.sort_by_key(|r| (RootSystem::height(r), std::cmp::Reverse(r.clone())));
    pos
}
