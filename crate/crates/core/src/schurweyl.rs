//! Partitions, Specht modules and `GL_n` nilpotent orbits.
//!
//! The Gram matrix of a Specht module `S^λ` is taken on the basis of standard
//! polytabloids, with the form that makes tabloids orthonormal. For
//! `p`-regular `λ` its rank mod `p` is the dimension of the simple head `D^λ`.
//!
//! Standard tableaux are listed in last-letter order: by the row holding `d`
//! (lowest row first), then recursively by the rest.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::intform::IntegerSymmetricForm;
use crate::linalg;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Malformed(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|j| self.0.iter().filter(|&&x| x >= j).count()).collect())
    }

    /// No part occurs `p` or more times.
    pub fn is_p_regular(&self, p: u64) -> bool {
        self.multiplicities().iter().all(|&(_, r)| (r as u64) < p)
    }

    /// `(part, number of occurrences)`, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &x in &self.0 {
            match out.last_mut() {
                Some((v, r)) if *v == x => *r += 1,
                _ => out.push((x, 1)),
            }
        }
        out
    }

    /// All partitions of `d` in reverse lexicographic order.
    pub fn all(d: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for x in (1..=rest.min(max)).rev() {
                cur.push(x);
                rec(rest - x, x, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(d, d, &mut Vec::new(), &mut out);
        out
    }

    /// `f^λ = d! / Π hooks`.
    pub fn hook_length_count(&self) -> BigInt {
        let conj = self.conjugate();
        let mut num: BigInt = (1..=self.size()).map(BigInt::from).product();
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                let hook = (row - j - 1) + (conj.0[j] - i - 1) + 1;
                num /= BigInt::from(hook);
            }
        }
        num
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Partition::new(Vec::new());
        }
        let parts = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Malformed(format!("bad partition part {x:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A tableau as rows of entries `1..=d`.
pub type Tableau = Vec<Vec<usize>>;

/// Standard Young tableaux of shape `λ` in last-letter order.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Tableau> {
    fn rec(shape: &[usize]) -> Vec<Tableau> {
        let d: usize = shape.iter().sum();
        if d == 0 {
            return vec![shape.iter().map(|_| Vec::new()).collect()];
        }
        let mut out = Vec::new();
        for r in (0..shape.len()).rev() {
            let removable = shape[r] > 0 && (r + 1 == shape.len() || shape[r + 1] < shape[r]);
            if !removable {
                continue;
            }
            let mut smaller = shape.to_vec();
            smaller[r] -= 1;
            for mut t in rec(&smaller) {
                t[r].push(d);
                out.push(t);
            }
        }
        out
    }
    rec(lambda.parts())
}

/// Multiplicities `f^λ` of the standard modules in `V^{⊗d}` for `dim V = n`:
/// one entry per partition of `d` with at most `n` parts.
pub fn standard_multiplicities(n: usize, d: usize) -> BTreeMap<Partition, BigInt> {
    Partition::all(d)
        .into_iter()
        .filter(|l| l.len() <= n)
        .map(|l| {
            let f = l.hook_length_count();
            (l, f)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix {
    pub partition: Partition,
    pub basis: Vec<Tableau>,
    pub form: IntegerSymmetricForm,
}

fn check_degree(lambda: &Partition, budget: &Budget) -> Result<()> {
    if lambda.size() > budget.specht_degree {
        return Err(Error::BudgetExceeded {
            what: format!("Specht module of degree {}", lambda.size()),
            limit: budget.specht_degree,
        });
    }
    Ok(())
}

/// All permutations of `items` with their signs.
fn signed_permutations(items: &[usize]) -> Vec<(Vec<usize>, i64)> {
    if items.len() <= 1 {
        return vec![(items.to_vec(), 1)];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        let sign = if i % 2 == 0 { 1 } else { -1 };
        for (mut p, s) in signed_permutations(&rest) {
            p.insert(0, head);
            out.push((p, s * sign));
        }
    }
    out
}

/// The polytabloid `e_t = Σ_{π ∈ C_t} sgn(π) {π t}` as tabloid → coefficient.
/// A tabloid is encoded by the row index of each entry `1..=d`.
pub fn polytabloid(t: &Tableau) -> HashMap<Vec<u8>, i64> {
    let d: usize = t.iter().map(|r| r.len()).sum();
    let width = t.first().map_or(0, |r| r.len());
    let columns: Vec<Vec<usize>> = (0..width)
        .map(|j| t.iter().filter(|r| r.len() > j).map(|r| r[j]).collect())
        .collect();
    let mut out: HashMap<Vec<u8>, i64> = HashMap::new();
    let mut rows = vec![0u8; d + 1];
    fn rec(
        columns: &[Vec<usize>],
        c: usize,
        sign: i64,
        rows: &mut Vec<u8>,
        out: &mut HashMap<Vec<u8>, i64>,
    ) {
        if c == columns.len() {
            *out.entry(rows[1..].to_vec()).or_insert(0) += sign;
            return;
        }
        for (perm, s) in signed_permutations(&columns[c]) {
            // the entry at row r of this column becomes perm[r]
            for (r, &x) in perm.iter().enumerate() {
                rows[x] = r as u8;
            }
            rec(columns, c + 1, sign * s, rows, out);
        }
    }
    rec(&columns, 0, 1, &mut rows, &mut out);
    out.retain(|_, v| *v != 0);
    out
}

pub fn specht_gram(lambda: &Partition, budget: &Budget) -> Result<GramMatrix> {
    check_degree(lambda, budget)?;
    let basis = standard_tableaux(lambda);
    let polys: Vec<HashMap<Vec<u8>, i64>> = basis.iter().map(polytabloid).collect();
    let n = basis.len();
    let mut m = vec![vec![BigInt::from(0); n]; n];
    for i in 0..n {
        for j in i..n {
            let (a, b) = if polys[i].len() <= polys[j].len() {
                (&polys[i], &polys[j])
            } else {
                (&polys[j], &polys[i])
            };
            let v: i64 = a
                .iter()
                .filter_map(|(k, x)| b.get(k).map(|y| x * y))
                .sum();
            m[i][j] = BigInt::from(v);
            m[j][i] = BigInt::from(v);
        }
    }
    let form = IntegerSymmetricForm::new(format!("S{lambda}"), m)?;
    Ok(GramMatrix {
        partition: lambda.clone(),
        basis,
        form,
    })
}

/// `dim D^λ` over `F_p` as the rank of the reduced Gram matrix.
pub fn simple_dimension(lambda: &Partition, p: u64, budget: &Budget) -> Result<usize> {
    if !linalg::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !lambda.is_p_regular(p) {
        return Err(Error::NotRegular {
            partition: lambda.parts().to_vec(),
            p,
        });
    }
    let g = specht_gram(lambda, budget)?;
    Ok(linalg::rank_mod_p(g.form.matrix(), p))
}

/// `(λ, dim D^λ)` for every `p`-regular partition of `d`.
pub fn simple_dims_table(d: usize, p: u64, budget: &Budget) -> Result<Vec<(Partition, usize)>> {
    if !linalg::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Partition::all(d)
        .into_iter()
        .filter(|l| l.is_p_regular(p))
        .map(|l| simple_dimension(&l, p, budget).map(|k| (l, k)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NilpotentOrbit {
    pub partition: Partition,
    pub conjugate: Partition,
    pub dimension: u64,
    /// `(part, r)`: the reductive centralizer has a factor `GL_r` per distinct part.
    pub centralizer_blocks: Vec<(usize, usize)>,
    pub centralizer_levi: String,
    /// Parabolic block sizes of the semismall resolution `T^*(G/P) → closure`.
    pub resolution_parabolic: Vec<usize>,
}

/// The nilpotent orbit of Jordan type `λ` in `gl_n`.
pub fn nilpotent_orbit_data(lambda: &Partition, n: usize) -> Result<NilpotentOrbit> {
    if lambda.size() != n {
        return Err(Error::SizeMismatch {
            partition: lambda.parts().to_vec(),
            size: lambda.size(),
            expected: n,
        });
    }
    let conj = lambda.conjugate();
    let sq: usize = conj.parts().iter().map(|c| c * c).sum();
    let blocks = lambda.multiplicities();
    let levi = blocks
        .iter()
        .map(|(_, r)| format!("GL{r}"))
        .collect::<Vec<_>>()
        .join("x");
    Ok(NilpotentOrbit {
        partition: lambda.clone(),
        dimension: (n * n - sq) as u64,
        centralizer_blocks: blocks,
        centralizer_levi: if levi.is_empty() { "trivial".into() } else { levi },
        resolution_parabolic: conj.parts().to_vec(),
        conjugate: conj,
    })
}

/// `d!` as a big integer.
pub fn factorial(d: usize) -> BigInt {
    (1..=d).map(BigInt::from).fold(BigInt::one(), |a, b| a * b)
}
