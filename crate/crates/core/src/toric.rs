//! Rational polyhedral fans and affine pavings of toric fibers.
//!
//! Cones are stored as sorted lists of ray indices. Face and membership
//! questions are answered with the exact simplex solver in [`crate::lp`], so
//! non-simplicial cones are handled without any special casing.
//!
//! The paving follows the classical Bialynicki-Birula argument for a smooth
//! fan `Δ'` refining a full-dimensional cone `τ`:
//!
//! 1. pick heights on the rays making `g = max_σ m_σ` strictly convex,
//! 2. pick a generic `x_0` in the interior of `τ` and order maximal cones by
//!    `m_σ(x_0)`,
//! 3. a wall `σ ∩ σ'` is positive for `σ` when `σ' > σ`,
//! 4. `γ(σ)` is the intersection of `σ` with its positive walls, and the cell
//!    of `σ` consists of the cones between `γ(σ)` and `σ`. Its complex
//!    dimension is the codimension of `γ(σ)`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::lp::{LinearProgram, LpOutcome, Relation};
use crate::weyl::CellPolynomial;

/// Maximum number of draws when looking for a generic point.
pub const GENERIC_DRAWS: usize = 1000;

pub type Cone = Vec<usize>;

fn q(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

fn dot_q(u: &[BigRational], v: &[i64]) -> BigRational {
    u.iter()
        .zip(v)
        .fold(BigRational::zero(), |acc, (a, &b)| acc + a * q(b))
}

/// A linear functional `u` with `u = 0` on `face` and `u ≥ 1` on `others`, if one exists.
fn separating_functional(rank: usize, face: &[&Vec<i64>], others: &[&Vec<i64>]) -> Option<Vec<BigRational>> {
    let mut lp = LinearProgram::new(rank).all_free();
    for v in face {
        lp.constrain(v.iter().map(|&x| q(x)).collect(), Relation::Eq, q(0));
    }
    for v in others {
        lp.constrain(v.iter().map(|&x| q(x)).collect(), Relation::Ge, q(1));
    }
    match lp.solve() {
        LpOutcome::Optimal { x, .. } => Some(x),
        _ => None,
    }
}

/// Is `x` a nonnegative combination of `gens`?
fn in_cone(x: &[i64], gens: &[&Vec<i64>]) -> bool {
    let n = x.len();
    let mut lp = LinearProgram::new(gens.len());
    for (i, &xi) in x.iter().enumerate().take(n) {
        lp.constrain(gens.iter().map(|g| q(g[i])).collect(), Relation::Eq, q(xi));
    }
    lp.is_feasible()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanFile {
    pub rank: usize,
    pub rays: Vec<Vec<i64>>,
    pub cones: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    rank: usize,
    rays: Vec<Vec<i64>>,
    /// All cones including the zero cone, sorted by dimension then rays.
    cones: Vec<Cone>,
}

impl Fan {
    /// Build a fan from generating cones; faces are added automatically.
    pub fn new(rank: usize, rays: Vec<Vec<i64>>, generators: Vec<Vec<usize>>) -> Result<Self> {
        for (i, r) in rays.iter().enumerate() {
            if r.len() != rank {
                return Err(Error::Malformed(format!("ray {i} has length {} not {rank}", r.len())));
            }
            if r.iter().all(|&x| x == 0) {
                return Err(Error::Malformed(format!("ray {i} is zero")));
            }
            if linalg::gcd_i64(r) != 1 {
                return Err(Error::Malformed(format!("ray {i} is not primitive")));
            }
        }
        let mut all: BTreeSet<Cone> = BTreeSet::new();
        for g in generators {
            let mut c = g.clone();
            c.sort_unstable();
            c.dedup();
            if let Some(&bad) = c.iter().find(|&&i| i >= rays.len()) {
                return Err(Error::Malformed(format!("cone refers to missing ray {bad}")));
            }
            for f in cone_faces(rank, &rays, &c)? {
                all.insert(f);
            }
        }
        all.insert(Vec::new());
        let mut cones: Vec<Cone> = all.into_iter().collect();
        let dims: BTreeMap<Cone, usize> = cones.iter().map(|c| (c.clone(), cone_dim(&rays, c))).collect();
        cones.sort_by(|a, b| (dims[a], a).cmp(&(dims[b], b)));
        Ok(Fan { rank, rays, cones })
    }

    pub fn from_file(f: FanFile) -> Result<Self> {
        Fan::new(f.rank, f.rays, f.cones)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let f: FanFile = serde_json::from_str(text).map_err(|e| Error::Malformed(format!("fan file: {e}")))?;
        Fan::from_file(f)
    }

    pub fn to_file(&self) -> FanFile {
        FanFile {
            rank: self.rank,
            rays: self.rays.clone(),
            cones: self.maximal_cones(),
        }
    }

    /// The fan of a single cone and its faces.
    pub fn single_cone(rank: usize, rays: Vec<Vec<i64>>) -> Result<Self> {
        let all: Vec<usize> = (0..rays.len()).collect();
        Fan::new(rank, rays, vec![all])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn dim(&self, cone: &[usize]) -> usize {
        cone_dim(&self.rays, cone)
    }

    fn ray_refs(&self, cone: &[usize]) -> Vec<&Vec<i64>> {
        cone.iter().map(|&i| &self.rays[i]).collect()
    }

    pub fn maximal_cones(&self) -> Vec<Cone> {
        self.cones
            .iter()
            .filter(|c| {
                !self
                    .cones
                    .iter()
                    .any(|d| d.len() > c.len() && c.iter().all(|i| d.contains(i)))
            })
            .cloned()
            .collect()
    }

    /// Does the support of the fan contain `x`?
    pub fn support_contains(&self, x: &[i64]) -> bool {
        self.maximal_cones().iter().any(|c| in_cone(x, &self.ray_refs(c)))
    }
}

fn cone_dim(rays: &[Vec<i64>], cone: &[usize]) -> usize {
    let vs: Vec<Vec<i64>> = cone.iter().map(|&i| rays[i].clone()).collect();
    linalg::rank_i64(&vs)
}

/// All faces of a cone, as ray subsets, including the zero face and the cone.
/// Fails if the cone is not strongly convex.
fn cone_faces(rank: usize, rays: &[Vec<i64>], cone: &[usize]) -> Result<Vec<Cone>> {
    let k = cone.len();
    if k > 20 {
        return Err(Error::Malformed("cone with more than 20 rays".into()));
    }
    let vs: Vec<Vec<i64>> = cone.iter().map(|&i| rays[i].clone()).collect();
    if linalg::rank_i64(&vs) == k {
        // simplicial: every subset is a face
        return Ok((0u32..1 << k)
            .map(|mask| (0..k).filter(|&j| mask >> j & 1 == 1).map(|j| cone[j]).collect())
            .collect());
    }
    let mut out = Vec::new();
    for mask in 0u32..1 << k {
        let face: Vec<&Vec<i64>> = (0..k).filter(|&j| mask >> j & 1 == 1).map(|j| &rays[cone[j]]).collect();
        let others: Vec<&Vec<i64>> = (0..k).filter(|&j| mask >> j & 1 == 0).map(|j| &rays[cone[j]]).collect();
        if separating_functional(rank, &face, &others).is_some() {
            out.push((0..k).filter(|&j| mask >> j & 1 == 1).map(|j| cone[j]).collect());
        } else if mask == 0 {
            return Err(Error::Malformed(format!("cone {cone:?} is not strongly convex")));
        }
    }
    Ok(out)
}

/// A full-dimensional cone with its facets and their inner normals.
#[derive(Debug, Clone)]
pub struct Ambient {
    rank: usize,
    rays: Vec<Vec<i64>>,
    facets: Vec<Vec<BigRational>>,
}

impl Ambient {
    pub fn new(rank: usize, rays: Vec<Vec<i64>>) -> Result<Self> {
        if linalg::rank_i64(&rays) != rank {
            return Err(Error::Malformed("ambient cone is not full-dimensional".into()));
        }
        let all: Vec<usize> = (0..rays.len()).collect();
        let mut facets = Vec::new();
        for face in cone_faces(rank, &rays, &all)? {
            if cone_dim(&rays, &face) + 1 != rank {
                continue;
            }
            let f: Vec<&Vec<i64>> = face.iter().map(|&i| &rays[i]).collect();
            let o: Vec<&Vec<i64>> = all.iter().filter(|i| !face.contains(i)).map(|&i| &rays[i]).collect();
            facets.push(separating_functional(rank, &f, &o).expect("face has a functional"));
        }
        Ok(Ambient { rank, rays, facets })
    }

    pub fn from_fan(fan: &Fan) -> Result<Self> {
        Ambient::new(fan.rank(), fan.rays().to_vec())
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.facets.iter().all(|u| !dot_q(u, v).is_negative())
    }

    /// Is the span of these vectors inside one facet?
    pub fn in_wall(&self, vs: &[&Vec<i64>]) -> bool {
        self.facets.iter().any(|u| vs.iter().all(|v| dot_q(u, v).is_zero()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FanReport {
    pub strongly_convex: bool,
    pub proper_intersections: bool,
    pub simplicial: bool,
    pub smooth: bool,
    pub complete: bool,
    pub refines_tau: Option<bool>,
}

impl Fan {
    fn walls(&self) -> Vec<(Cone, Vec<usize>)> {
        // codimension-one cones and the maximal cones containing them
        let maxes = self.maximal_cones();
        self.cones
            .iter()
            .filter(|c| self.dim(c) + 1 == self.rank)
            .map(|c| {
                let owners = maxes
                    .iter()
                    .enumerate()
                    .filter(|(_, m)| c.iter().all(|i| m.contains(i)))
                    .map(|(k, _)| k)
                    .collect();
                (c.clone(), owners)
            })
            .collect()
    }

    fn proper_intersections(&self) -> bool {
        let maxes = self.maximal_cones();
        for a in 0..maxes.len() {
            for b in a + 1..maxes.len() {
                let common: Vec<usize> = maxes[a].iter().filter(|i| maxes[b].contains(i)).copied().collect();
                let only_a: Vec<&Vec<i64>> = maxes[a].iter().filter(|i| !common.contains(i)).map(|&i| &self.rays[i]).collect();
                let only_b: Vec<Vec<i64>> = maxes[b]
                    .iter()
                    .filter(|i| !common.contains(i))
                    .map(|&i| self.rays[i].iter().map(|x| -x).collect())
                    .collect();
                let mut others = only_a;
                others.extend(only_b.iter());
                let face = self.ray_refs(&common);
                if separating_functional(self.rank, &face, &others).is_none() {
                    return false;
                }
            }
        }
        true
    }

    fn full_dim_maximal(&self) -> bool {
        self.maximal_cones().iter().all(|c| self.dim(c) == self.rank)
    }

    pub fn is_simplicial(&self) -> bool {
        self.cones.iter().all(|c| self.dim(c) == c.len())
    }

    pub fn is_smooth(&self) -> bool {
        self.is_simplicial()
            && self.maximal_cones().iter().all(|c| {
                let m: Vec<Vec<BigInt>> = c
                    .iter()
                    .map(|&i| self.rays[i].iter().map(|&x| BigInt::from(x)).collect())
                    .collect();
                linalg::smith_form(&m).invariant_factors.iter().all(|d| d.is_one())
            })
    }

    pub fn is_complete(&self) -> bool {
        self.rank > 0 && self.full_dim_maximal() && self.walls().iter().all(|(_, o)| o.len() == 2)
    }

    pub fn refines(&self, tau: &Ambient) -> bool {
        self.rank == tau.rank
            && self.rays.iter().all(|r| tau.contains(r))
            && self.full_dim_maximal()
            && self.walls().iter().all(|(w, o)| match o.len() {
                2 => true,
                1 => tau.in_wall(&self.ray_refs(w)),
                _ => false,
            })
    }
}

pub fn validate_fan(fan: &Fan, tau: Option<&Ambient>) -> FanReport {
    let proper = fan.proper_intersections();
    FanReport {
        // strong convexity is enforced on construction
        strongly_convex: true,
        proper_intersections: proper,
        simplicial: fan.is_simplicial(),
        smooth: fan.is_smooth(),
        complete: proper && fan.is_complete(),
        refines_tau: tau.map(|t| proper && fan.refines(t)),
    }
}

/// Stellar subdivision of `fan` at the primitive vector `v`.
pub fn star_subdivision(fan: &Fan, v: &[i64]) -> Result<Fan> {
    if v.len() != fan.rank || v.iter().all(|&x| x == 0) {
        return Err(Error::Malformed("subdivision ray has the wrong length or is zero".into()));
    }
    if linalg::gcd_i64(v) != 1 {
        return Err(Error::Malformed("subdivision ray is not primitive".into()));
    }
    if fan.rays.iter().any(|r| r == v) {
        return Ok(fan.clone());
    }
    if !fan.support_contains(v) {
        return Err(Error::OutsideSupport(v.to_vec()));
    }
    let mut rays = fan.rays.clone();
    rays.push(v.to_vec());
    let new = rays.len() - 1;
    let mut gens: Vec<Cone> = Vec::new();
    for c in &fan.cones {
        if !in_cone(v, &fan.ray_refs(c)) {
            gens.push(c.clone());
        } else {
            for f in &fan.cones {
                if f.len() < c.len() && f.iter().all(|i| c.contains(i)) && !in_cone(v, &fan.ray_refs(f)) {
                    let mut g = f.clone();
                    g.push(new);
                    gens.push(g);
                }
            }
        }
    }
    // keep only generators that are not faces of others
    let keep: Vec<Cone> = gens
        .iter()
        .filter(|c| !gens.iter().any(|d| d.len() > c.len() && c.iter().all(|i| d.contains(i))))
        .cloned()
        .collect();
    Fan::new(fan.rank, rays, keep)
}

/// `g = max_σ m_σ` with integer data: `heights[ρ] = g(v_ρ)` and one covector per maximal cone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlFunction {
    pub heights: Vec<i64>,
    pub maximal_cones: Vec<Cone>,
    pub covectors: Vec<Vec<i64>>,
}

impl PlFunction {
    pub fn value(&self, cone: usize, x: &[i64]) -> BigInt {
        self.covectors[cone]
            .iter()
            .zip(x)
            .map(|(&m, &v)| BigInt::from(m) * BigInt::from(v))
            .sum()
    }

    /// Continuity on every maximal cone and the strict inequalities
    /// `m_σ(v_ρ) < g(v_ρ)` for every ray `ρ` outside `σ`.
    pub fn verify(&self, fan: &Fan) -> bool {
        for (k, c) in self.maximal_cones.iter().enumerate() {
            for (r, v) in fan.rays.iter().enumerate() {
                let val = self.value(k, v);
                let h = BigInt::from(self.heights[r]);
                if c.contains(&r) {
                    if val != h {
                        return false;
                    }
                } else if val >= h {
                    return false;
                }
            }
        }
        true
    }
}

/// Find ray heights whose piecewise linear extension is strictly convex.
///
/// Solved exactly as a linear program: maximize a margin `t` subject to
/// `m_σ(v_ρ) = h_ρ` on `σ`, `m_σ(v_ρ) + t ≤ h_ρ` off `σ`, `|h_ρ| ≤ 1`.
/// The fan is projective iff the optimum is positive.
pub fn strictly_convex_support(fan: &Fan) -> Result<PlFunction> {
    let n = fan.rank;
    let maxes = fan.maximal_cones();
    let nr = fan.rays.len();
    // variables: h (nr), m_σ (n each), t
    let nv = nr + n * maxes.len() + 1;
    let t = nv - 1;
    let mut lp = LinearProgram::new(nv).all_free();
    for (k, c) in maxes.iter().enumerate() {
        for (r, v) in fan.rays.iter().enumerate() {
            let mut row = vec![q(0); nv];
            for (j, &x) in v.iter().enumerate() {
                row[nr + k * n + j] = q(x);
            }
            row[r] = q(-1);
            if c.contains(&r) {
                lp.constrain(row, Relation::Eq, q(0));
            } else {
                row[t] = q(1);
                lp.constrain(row, Relation::Le, q(0));
            }
        }
    }
    for r in 0..nr {
        let mut row = vec![q(0); nv];
        row[r] = q(1);
        lp.constrain(row.clone(), Relation::Le, q(1));
        lp.constrain(row, Relation::Ge, q(-1));
    }
    let mut row = vec![q(0); nv];
    row[t] = q(1);
    lp.constrain(row, Relation::Le, q(1));
    lp.objective[t] = q(1);
    let x = match lp.solve() {
        LpOutcome::Optimal { x, value } if value.is_positive() => x,
        LpOutcome::Optimal { .. } | LpOutcome::Infeasible => {
            return Err(Error::Infeasible("the fan is not projective".into()))
        }
        LpOutcome::Unbounded => return Err(Error::Internal("support function program unbounded".into())),
    };
    let den = x[..t]
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let scaled: Vec<i64> = x[..t]
        .iter()
        .map(|v| {
            (v * BigRational::from_integer(den.clone()))
                .to_integer()
                .to_i64()
                .ok_or_else(|| Error::Internal("support function coefficient overflow".into()))
        })
        .collect::<Result<_>>()?;
    let g = PlFunction {
        heights: scaled[..nr].to_vec(),
        covectors: (0..maxes.len()).map(|k| scaled[nr + k * n..nr + (k + 1) * n].to_vec()).collect(),
        maximal_cones: maxes,
    };
    if !g.verify(fan) {
        return Err(Error::Internal("support function failed verification".into()));
    }
    Ok(g)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PavingCell {
    pub maximal_cone: Cone,
    pub gamma: Cone,
    /// Complex dimension: `rank - dim γ(σ)`.
    pub dimension: usize,
    /// Cones `ω` with `γ(σ) ⊆ ω ⊆ σ`.
    pub members: Vec<Cone>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Paving {
    pub seed: u64,
    pub draws: usize,
    pub x0: Vec<i64>,
    pub support: PlFunction,
    /// Maximal cones in increasing `m_σ(x_0)` order.
    pub order: Vec<Cone>,
    pub cells: Vec<PavingCell>,
    /// Cones of `Δ'` not contained in a facet of `τ`: the orbits making up the fiber.
    pub fiber_cones: Vec<Cone>,
    /// Poincaré polynomial in `q`, with cells of complex dimension `d` at `q^{2d}`.
    pub poincare: CellPolynomial,
    /// Every cell consists of fiber cones only.
    pub cells_inside_fiber: bool,
    pub even: bool,
}

/// Affine paving of the fiber over the fixed point of `X(τ)`.
pub fn paving(fan: &Fan, tau: &Ambient, seed: u64) -> Result<Paving> {
    let report = validate_fan(fan, Some(tau));
    if !report.smooth {
        return Err(Error::Malformed("the fan is not smooth".into()));
    }
    if report.refines_tau != Some(true) {
        return Err(Error::Malformed("the fan does not refine the ambient cone".into()));
    }
    let g = strictly_convex_support(fan)?;
    let maxes = g.maximal_cones.clone();
    let n = fan.rank;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found = None;
    for draw in 1..=GENERIC_DRAWS {
        let weights: Vec<i64> = (0..tau.rays.len()).map(|_| rng.gen_range(1..=1000)).collect();
        let x0: Vec<i64> = (0..n)
            .map(|j| tau.rays.iter().zip(&weights).map(|(r, w)| r[j] * w).sum())
            .collect();
        let values: Vec<BigInt> = (0..maxes.len()).map(|k| g.value(k, &x0)).collect();
        let distinct: BTreeSet<&BigInt> = values.iter().collect();
        if distinct.len() == values.len() {
            found = Some((draw, x0, values));
            break;
        }
    }
    let Some((draws, x0, values)) = found else {
        return Err(Error::NonGeneric(GENERIC_DRAWS));
    };

    let mut order: Vec<usize> = (0..maxes.len()).collect();
    order.sort_by(|&a, &b| values[a].cmp(&values[b]));

    let fiber_cones: Vec<Cone> = fan
        .cones
        .iter()
        .filter(|c| !tau.in_wall(&fan.ray_refs(c)))
        .cloned()
        .collect();
    let mut cells = Vec::new();
    for (k, sigma) in maxes.iter().enumerate() {
        let mut gamma: Cone = sigma.clone();
        for (k2, other) in maxes.iter().enumerate() {
            if k2 == k || values[k2] <= values[k] {
                continue;
            }
            let common: Cone = sigma.iter().filter(|i| other.contains(i)).copied().collect();
            if fan.dim(&common) + 1 == n {
                gamma.retain(|i| common.contains(i));
            }
        }
        let members: Vec<Cone> = fan
            .cones
            .iter()
            .filter(|w| gamma.iter().all(|i| w.contains(i)) && w.iter().all(|i| sigma.contains(i)))
            .cloned()
            .collect();
        cells.push(PavingCell {
            maximal_cone: sigma.clone(),
            dimension: n - fan.dim(&gamma),
            gamma,
            members,
        });
    }
    let cells_inside_fiber = cells
        .iter()
        .all(|c| c.members.iter().all(|m| fiber_cones.contains(m)));
    // the cells restricted to the fiber must partition the fiber cones
    for fc in &fiber_cones {
        let hits = cells.iter().filter(|c| c.members.contains(fc)).count();
        if hits != 1 {
            return Err(Error::Internal(format!("fiber cone {fc:?} lies in {hits} cells")));
        }
    }
    let mut poincare = CellPolynomial::zero();
    for c in &cells {
        poincare.add_monomial(2 * c.dimension, 1);
    }
    let even = poincare.only_even_powers() && cells_inside_fiber;
    cells.sort_by(|a, b| {
        let ka = maxes.iter().position(|m| *m == a.maximal_cone).unwrap();
        let kb = maxes.iter().position(|m| *m == b.maximal_cone).unwrap();
        values[ka].cmp(&values[kb])
    });
    Ok(Paving {
        seed,
        draws,
        x0,
        support: g,
        order: order.into_iter().map(|k| maxes[k].clone()).collect(),
        cells,
        fiber_cones,
        poincare,
        cells_inside_fiber,
        even,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitNode {
    pub cone: Cone,
    pub cone_dim: usize,
    pub orbit_dim: usize,
    /// Indices of the nodes whose orbits are in the closure of this one and
    /// one dimension smaller (cones one dimension larger).
    pub covers: Vec<usize>,
}

/// Orbits of `X(Δ)` ordered by closure, i.e. cones ordered by reverse inclusion.
pub fn orbit_poset(fan: &Fan) -> Vec<OrbitNode> {
    let dims: Vec<usize> = fan.cones.iter().map(|c| fan.dim(c)).collect();
    fan.cones
        .iter()
        .enumerate()
        .map(|(i, c)| OrbitNode {
            cone: c.clone(),
            cone_dim: dims[i],
            orbit_dim: fan.rank - dims[i],
            covers: fan
                .cones
                .iter()
                .enumerate()
                .filter(|(j, d)| dims[*j] == dims[i] + 1 && c.iter().all(|x| d.contains(x)))
                .map(|(j, _)| j)
                .collect(),
        })
        .collect()
}

/// The `A_n` surface singularity: `τ = ⟨(1,0),(1,n+1)⟩` and its minimal
/// resolution with rays `(1,k)` for `0 ≤ k ≤ n+1`.
pub fn a_n_resolution(n: usize) -> (Fan, Ambient) {
    let rays: Vec<Vec<i64>> = (0..=n as i64 + 1).map(|k| vec![1, k]).collect();
    let cones = (0..=n).map(|k| vec![k, k + 1]).collect();
    let fan = Fan::new(2, rays, cones).expect("valid fan");
    let tau = Ambient::new(2, vec![vec![1, 0], vec![1, n as i64 + 1]]).expect("full-dimensional");
    (fan, tau)
}

/// The cone over a square and its small resolution along one diagonal.
pub fn conifold_resolution() -> (Fan, Ambient) {
    let rays = vec![vec![1, 0, 0], vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 1]];
    let fan = Fan::new(3, rays.clone(), vec![vec![0, 1, 3], vec![0, 2, 3]]).expect("valid fan");
    let tau = Ambient::new(3, rays).expect("full-dimensional");
    (fan, tau)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_examples() {
        let quad = Fan::single_cone(2, vec![vec![1, 0], vec![0, 1]]).unwrap();
        let r = validate_fan(&quad, None);
        assert!(r.smooth && r.simplicial && !r.complete);
        let index2 = Fan::single_cone(2, vec![vec![1, 0], vec![1, 2]]).unwrap();
        let r = validate_fan(&index2, None);
        assert!(r.simplicial && !r.smooth);
        let square = Fan::single_cone(3, vec![vec![1, 0, 0], vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        assert!(!validate_fan(&square, None).simplicial);
        // zero cone, 4 rays, 4 two-dimensional faces, the cone itself
        assert_eq!(square.cones().len(), 10);
        let p1 = Fan::new(1, vec![vec![1], vec![-1]], vec![vec![0], vec![1]]).unwrap();
        assert!(validate_fan(&p1, None).complete);
        assert!(Fan::single_cone(2, vec![vec![2, 0]]).is_err());
        assert!(Fan::single_cone(1, vec![vec![1], vec![-1]]).is_err());
    }

    #[test]
    fn subdivisions() {
        let index2 = Fan::single_cone(2, vec![vec![1, 0], vec![1, 2]]).unwrap();
        let sub = star_subdivision(&index2, &[1, 1]).unwrap();
        assert_eq!(sub.maximal_cones().len(), 2);
        assert!(validate_fan(&sub, None).smooth);
        assert_eq!(star_subdivision(&sub, &[1, 1]).unwrap(), sub);
        assert!(matches!(star_subdivision(&index2, &[0, 1]), Err(Error::OutsideSupport(_))));
        let square = Fan::single_cone(3, vec![vec![1, 0, 0], vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        let sub = star_subdivision(&square, &[1, 1, 1]).unwrap();
        assert_eq!(sub.maximal_cones().len(), 4);
        assert!(validate_fan(&sub, None).simplicial);
    }

    #[test]
    fn support_functions() {
        let (fan, _) = a_n_resolution(1);
        let g = strictly_convex_support(&fan).unwrap();
        assert!(g.verify(&fan));
        let quad = Fan::single_cone(2, vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert!(strictly_convex_support(&quad).unwrap().verify(&quad));
        let (fan, _) = conifold_resolution();
        assert!(strictly_convex_support(&fan).unwrap().verify(&fan));
    }

    #[test]
    fn pavings() {
        for n in 1..=3 {
            let (fan, tau) = a_n_resolution(n);
            let p = paving(&fan, &tau, 0).unwrap();
            assert_eq!(p.poincare, CellPolynomial(vec![1, 0, n as u64]));
            assert!(p.even);
            assert_eq!(p.fiber_cones.len(), 2 * n + 1);
        }
        let (fan, tau) = conifold_resolution();
        let p = paving(&fan, &tau, 7).unwrap();
        assert_eq!(p.poincare, CellPolynomial(vec![1, 0, 1]));
        let quad = Fan::single_cone(2, vec![vec![1, 0], vec![0, 1]]).unwrap();
        let tau = Ambient::from_fan(&quad).unwrap();
        assert_eq!(paving(&quad, &tau, 0).unwrap().poincare, CellPolynomial(vec![1]));
    }

    #[test]
    fn orbit_posets() {
        let quad = Fan::single_cone(2, vec![vec![1, 0], vec![0, 1]]).unwrap();
        let dims: Vec<usize> = orbit_poset(&quad).iter().map(|o| o.orbit_dim).collect();
        assert_eq!(dims, [2, 1, 1, 0]);
        let p1 = Fan::new(1, vec![vec![1], vec![-1]], vec![vec![0], vec![1]]).unwrap();
        let dims: Vec<usize> = orbit_poset(&p1).iter().map(|o| o.orbit_dim).collect();
        assert_eq!(dims, [1, 0, 0]);
        let (a1, _) = a_n_resolution(1);
        assert_eq!(orbit_poset(&a1).len(), 6);
    }
}
