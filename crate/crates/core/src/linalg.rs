//! Exact linear algebra over Z, Q and F_p.
//!
//! Matrices are plain row-major `Vec<Vec<_>>`. Nothing here is tuned for
//! size; the matrices in this crate are at most a few hundred rows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;
pub type RatMatrix = Vec<Vec<BigRational>>;

pub fn to_big(m: &[Vec<i64>]) -> IntMatrix {
    m.iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

pub fn to_rational(m: &[Vec<i64>]) -> RatMatrix {
    m.iter()
        .map(|row| row.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect()
}

fn shape<T>(m: &[Vec<T>]) -> (usize, usize) {
    (m.len(), m.first().map_or(0, |r| r.len()))
}

/// Invariant factors of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero diagonal entries, positive, each dividing the next.
    pub invariant_factors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Invariant factors greater than one: the torsion of the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }

    /// Rank over `F_p`: the number of invariant factors not divisible by `p`.
    pub fn rank_mod(&self, p: u64) -> usize {
        let p = BigInt::from(p);
        self.invariant_factors
            .iter()
            .filter(|d| !(*d % &p).is_zero())
            .count()
    }
}

pub fn smith_form(m: &[Vec<BigInt>]) -> SmithForm {
    let (rows, cols) = shape(m);
    let mut a: IntMatrix = m.to_vec();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let Some((pi, pj)) = min_abs_position(&a, t, rows, cols) else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    for j in t..cols {
                        let v = &a[t][j] * &q;
                        a[i][j] -= v;
                    }
                    if !a[i][t].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    for i in t..rows {
                        let v = &a[i][t] * &q;
                        a[i][j] -= v;
                    }
                    if !a[t][j].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                // move the smallest remainder in row/column t into the pivot
                let mut best = (t, t);
                for i in t + 1..rows {
                    if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    a.swap(t, best.0);
                } else if best.1 != t {
                    for row in a.iter_mut() {
                        row.swap(t, best.1);
                    }
                }
                continue;
            }
            let pivot = a[t][t].clone();
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !(&a[i][j] % &pivot).is_zero())
            });
            match offender {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    SmithForm {
        invariant_factors: diag,
    }
}

fn min_abs_position(a: &IntMatrix, t: usize, rows: usize, cols: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..rows {
        for j in t..cols {
            if a[i][j].is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a[bi][bj].abs() <= a[i][j].abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Rank over Q by fraction-free (Bareiss) elimination.
pub fn rank_over_q(m: &[Vec<BigInt>]) -> usize {
    let (rows, cols) = shape(m);
    let mut a: IntMatrix = m.to_vec();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Determinant of a square integer matrix (Bareiss).
pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut a: IntMatrix = m.to_vec();
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        BigInt::one()
    } else {
        sign * &a[n - 1][n - 1]
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors by trial division, ascending.
pub fn prime_factors(n: &BigInt) -> Vec<u64> {
    let mut n = n.abs();
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    let mut d = 2u64;
    loop {
        let dd = BigInt::from(d);
        if &dd * &dd > n {
            break;
        }
        if (&n % &dd).is_zero() {
            out.push(d);
            while (&n % &dd).is_zero() {
                n /= &dd;
            }
        }
        d += 1;
    }
    if n > BigInt::one() {
        out.push(n.to_u64().expect("prime cofactor exceeds u64"));
    }
    out
}

/// Row-reduced echelon form over F_p. Returns the reduced matrix and pivot columns.
pub fn rref_mod_p(m: &[Vec<BigInt>], p: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let (rows, cols) = shape(m);
    let pb = BigInt::from(p);
    let mut a: Vec<Vec<u64>> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| x.mod_floor(&pb).to_u64().unwrap())
                .collect()
        })
        .collect();
    let mul = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = inverse_mod(a[r][c], p);
        for j in c..cols {
            a[r][j] = mul(a[r][j], inv);
        }
        for i in 0..rows {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                for j in c..cols {
                    let sub = mul(f, a[r][j]);
                    a[i][j] = (a[i][j] + p - sub) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank_mod_p(m: &[Vec<BigInt>], p: u64) -> usize {
    rref_mod_p(m, p).1.len()
}

/// Basis of `{v : M v = 0}` over F_p, one vector per free column, in
/// reduced echelon normalization (1 at its free column, 0 at the others).
pub fn nullspace_mod_p(m: &[Vec<BigInt>], p: u64) -> Vec<Vec<u64>> {
    let (_, cols) = shape(m);
    let (a, pivots) = rref_mod_p(m, p);
    let mut basis = Vec::new();
    for f in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; cols];
        v[f] = 1;
        for (k, &pc) in pivots.iter().enumerate() {
            v[pc] = (p - a[k][f]) % p;
        }
        basis.push(v);
    }
    basis
}

pub fn inverse_mod(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2)
    let mut result = 1u128;
    let mut base = (a % p) as u128;
    let mut e = p - 2;
    let pm = p as u128;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % pm;
        }
        base = base * base % pm;
        e >>= 1;
    }
    result as u64
}

/// Reduced row echelon form over Q. Returns the reduced matrix and pivot columns.
pub fn rref_rational(m: &[Vec<BigRational>]) -> (RatMatrix, Vec<usize>) {
    let (rows, cols) = shape(m);
    let mut a: RatMatrix = m.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, piv);
        let inv = a[r][c].recip();
        for j in c..cols {
            a[r][j] = &a[r][j] * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..cols {
                    let sub = &f * &a[r][j];
                    a[i][j] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank_rational(m: &[Vec<BigRational>]) -> usize {
    rref_rational(m).1.len()
}

pub fn rank_i64(vectors: &[Vec<i64>]) -> usize {
    rank_rational(&to_rational(vectors))
}

/// Coefficients `c` with `Σ c_k basis[k] = target`, if the target lies in the
/// rational span. The basis vectors need not be independent; when they are
/// not, the returned combination is the one supported on pivot vectors.
pub fn express_in_span(basis: &[Vec<BigRational>], target: &[BigRational]) -> Option<Vec<BigRational>> {
    let k = basis.len();
    let dim = target.len();
    // columns are basis vectors, augmented by the target
    let aug: RatMatrix = (0..dim)
        .map(|i| {
            let mut row: Vec<BigRational> = basis.iter().map(|b| b[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let (red, pivots) = rref_rational(&aug);
    if pivots.contains(&k) {
        return None;
    }
    let mut coeffs = vec![BigRational::zero(); k];
    for (r, &pc) in pivots.iter().enumerate() {
        coeffs[pc] = red[r][k].clone();
    }
    Some(coeffs)
}

/// Basis of the rational nullspace `{x : M x = 0}`.
pub fn nullspace_rational(m: &[Vec<BigRational>], cols: usize) -> RatMatrix {
    let (a, pivots) = rref_rational(m);
    let mut basis = Vec::new();
    for f in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigRational::zero(); cols];
        v[f] = BigRational::one();
        for (k, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[k][f].clone();
        }
        basis.push(v);
    }
    basis
}

/// Exact inverse of a square rational matrix, or `None` if singular.
pub fn inverse_rational(m: &[Vec<BigRational>]) -> Option<RatMatrix> {
    let n = m.len();
    let aug: RatMatrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    let (red, pivots) = rref_rational(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(red.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Scale a rational vector to a primitive integer vector with the same direction.
pub fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

pub fn gcd_i64(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |acc, &x| acc.gcd(&x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(m: &[&[i64]]) -> IntMatrix {
        m.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn smith_of_diagonal_needs_reordering() {
        // diag(2, 3) ~ diag(1, 6)
        let s = smith_form(&big(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.invariant_factors, vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn smith_of_a3_cartan() {
        let s = smith_form(&big(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]));
        assert_eq!(s.torsion(), vec![BigInt::from(4)]);
    }

    #[test]
    fn smith_of_rank_deficient() {
        let s = smith_form(&big(&[&[2, 4, 6], &[1, 2, 3]]));
        assert_eq!(s.rank(), 1);
        assert_eq!(s.invariant_factors, vec![BigInt::from(1)]);
    }

    #[test]
    fn bareiss_matches_smith_rank() {
        let m = big(&[&[0, 0, 1], &[0, 0, 2], &[3, 1, 0], &[6, 2, 1]]);
        assert_eq!(rank_over_q(&m), 2);
        assert_eq!(smith_form(&m).rank(), 2);
    }

    #[test]
    fn determinant_small() {
        assert_eq!(determinant(&big(&[&[2, -1], &[-1, 2]])), BigInt::from(3));
        assert_eq!(determinant(&big(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
    }

    #[test]
    fn nullspace_mod_two() {
        let m = big(&[&[1, 1], &[1, 1]]);
        assert_eq!(rank_mod_p(&m, 2), 1);
        assert_eq!(nullspace_mod_p(&m, 2), vec![vec![1, 1]]);
    }

    #[test]
    fn primes_of_composites() {
        assert_eq!(prime_factors(&BigInt::from(360)), vec![2, 3, 5]);
        assert_eq!(prime_factors(&BigInt::from(-49)), vec![7]);
        assert!(prime_factors(&BigInt::from(1)).is_empty());
        assert!(is_prime(31) && !is_prime(1) && !is_prime(91));
    }

    #[test]
    fn span_membership() {
        let b = vec![to_rational(&[vec![1, 1, 0]])[0].clone(), to_rational(&[vec![0, 1, 1]])[0].clone()];
        let t = to_rational(&[vec![1, 2, 1]])[0].clone();
        let c = express_in_span(&b, &t).unwrap();
        assert_eq!(c, vec![BigRational::one(), BigRational::one()]);
        let off = to_rational(&[vec![1, 0, 0]])[0].clone();
        assert!(express_in_span(&b, &off).is_none());
    }
}
