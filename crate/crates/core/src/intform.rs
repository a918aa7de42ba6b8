//! Integer symmetric forms and their reductions mod p.
//!
//! The multiplicity of a simple summand attached to a stratum is the rank of
//! the reduced form, so everything here comes down to ranks over Q and F_p.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerSymmetricForm {
    label: String,
    matrix: Vec<Vec<BigInt>>,
}

impl IntegerSymmetricForm {
    pub fn new(label: impl Into<String>, matrix: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = matrix.len();
        if matrix.iter().any(|r| r.len() != n) {
            return Err(Error::Malformed("form is not square".into()));
        }
        for i in 0..n {
            for j in 0..i {
                if matrix[i][j] != matrix[j][i] {
                    return Err(Error::Malformed(format!("form is not symmetric at ({i},{j})")));
                }
            }
        }
        Ok(IntegerSymmetricForm {
            label: label.into(),
            matrix,
        })
    }

    pub fn from_i64(label: impl Into<String>, matrix: &[Vec<i64>]) -> Result<Self> {
        Self::new(label, linalg::to_big(matrix))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn matrix(&self) -> &[Vec<BigInt>] {
        &self.matrix
    }

    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    /// `Uᵀ B U`.
    pub fn transform(&self, u: &[Vec<BigInt>]) -> Result<Self> {
        let n = self.size();
        let mut bu = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    bu[i][j] += &self.matrix[i][k] * &u[k][j];
                }
            }
        }
        let mut out = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    out[i][j] += &u[k][i] * &bu[k][j];
                }
            }
        }
        Self::new(self.label.clone(), out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankRadical {
    pub rank_q: usize,
    pub rank_fp: Option<usize>,
    /// Basis of the radical: over `F_p` (entries in `0..p`) when a prime is
    /// given, otherwise primitive integer vectors spanning the rational radical.
    #[serde(serialize_with = "crate::ser::bigint_rows")]
    pub radical: Vec<Vec<BigInt>>,
}

pub fn rank_and_radical(form: &IntegerSymmetricForm, p: Option<u64>) -> Result<RankRadical> {
    let m = form.matrix();
    let rank_q = linalg::rank_over_q(m);
    match p {
        Some(p) => {
            if !linalg::is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            let rank_fp = linalg::rank_mod_p(m, p);
            let radical = linalg::nullspace_mod_p(m, p)
                .into_iter()
                .map(|v| v.into_iter().map(BigInt::from).collect())
                .collect();
            Ok(RankRadical {
                rank_q,
                rank_fp: Some(rank_fp),
                radical,
            })
        }
        None => {
            let rat: Vec<Vec<BigRational>> = m
                .iter()
                .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
                .collect();
            let radical = linalg::nullspace_rational(&rat, form.size())
                .iter()
                .map(|v| linalg::primitive_integer_vector(v))
                .collect();
            Ok(RankRadical {
                rank_q,
                rank_fp: None,
                radical,
            })
        }
    }
}

/// Primes at which the form loses rank: those dividing a nonzero elementary divisor.
pub fn bad_primes(form: &IntegerSymmetricForm) -> Vec<u64> {
    let smith = linalg::smith_form(form.matrix());
    let mut out: Vec<u64> = smith
        .torsion()
        .iter()
        .flat_map(linalg::prime_factors)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StratumReport {
    pub label: String,
    pub size: usize,
    pub rank_q: usize,
    pub rank_fp: usize,
    pub multiplicity: usize,
    pub radical_dim: usize,
    pub nondegenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub p: u64,
    pub strata: Vec<StratumReport>,
    /// True iff every form is nondegenerate mod `p`.
    pub decomposition_theorem_holds: bool,
}

pub fn decomposition_report(forms: &[IntegerSymmetricForm], p: u64) -> Result<DecompositionReport> {
    if !linalg::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut strata = Vec::with_capacity(forms.len());
    for f in forms {
        let rank_q = linalg::rank_over_q(f.matrix());
        let rank_fp = linalg::rank_mod_p(f.matrix(), p);
        strata.push(StratumReport {
            label: f.label().to_string(),
            size: f.size(),
            rank_q,
            rank_fp,
            multiplicity: rank_fp,
            radical_dim: f.size() - rank_fp,
            nondegenerate: rank_fp == f.size(),
        });
    }
    let holds = strata.iter().all(|s| s.nondegenerate);
    Ok(DecompositionReport {
        p,
        strata,
        decomposition_theorem_holds: holds,
    })
}

/// On-disk form: `{"label": .., "n": .., "rows": [[..], ..]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FormFile {
    pub label: String,
    pub n: usize,
    pub rows: Vec<Vec<i64>>,
}

impl TryFrom<FormFile> for IntegerSymmetricForm {
    type Error = Error;

    fn try_from(f: FormFile) -> Result<Self> {
        if f.rows.len() != f.n {
            return Err(Error::Malformed(format!(
                "form {}: n = {} but {} rows",
                f.label,
                f.n,
                f.rows.len()
            )));
        }
        IntegerSymmetricForm::from_i64(f.label, &f.rows)
    }
}

/// Parse one form object or an array of them.
pub fn forms_from_json(text: &str) -> Result<Vec<IntegerSymmetricForm>> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum OneOrMany {
        Many(Vec<FormFile>),
        One(FormFile),
    }
    let parsed: OneOrMany =
        serde_json::from_str(text).map_err(|e| Error::Malformed(format!("form file: {e}")))?;
    let files = match parsed {
        OneOrMany::Many(v) => v,
        OneOrMany::One(f) => vec![f],
    };
    files.into_iter().map(IntegerSymmetricForm::try_from).collect()
}

/// `-C` for the Cartan matrix of `A_n`: the intersection form of the
/// exceptional fiber of the minimal resolution of the `A_n` surface singularity.
pub fn negative_cartan_a(n: usize) -> IntegerSymmetricForm {
    let m: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match i.abs_diff(j) {
                    0 => -2,
                    1 => 1,
                    _ => 0,
                })
                .collect()
        })
        .collect();
    IntegerSymmetricForm::from_i64(format!("A{n}"), &m).expect("symmetric")
}
