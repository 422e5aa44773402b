//! Rays and chambers of the reflection arrangement, the bound `λ′` and the generic vector `v`.

use crate::algebra::{ratio, Matrix, Scalar, Vector};
use crate::coxeter::{CoxeterSystem, ElemId};
use crate::error::{Error, Result};
use crate::rootorder::OrderedRoots;
use itertools::Itertools;
use num_rational::BigRational;
use num_traits::{One, Signed};
use std::collections::{BTreeMap, HashMap};

/// Default bound on the denominator of `λ′`.
pub const DEFAULT_LAMBDA_DENOMINATOR: u32 = 64;

/// Every one-dimensional flat, as the canonical vector whose first nonzero
/// coordinate is 1, sorted by canonical key. Empty at rank 1.
pub fn enumerate_rays<F: Scalar>(system: &CoxeterSystem<F>) -> Vec<Vector<F>> {
    let n = system.rank();
    if n < 2 {
        return Vec::new();
    }
    let normals: Vec<Vector<F>> = system
        .positive_roots()
        .iter()
        .map(|r| system.covector(r))
        .collect();
    let mut rays: BTreeMap<Vec<F::Key>, Vector<F>> = BTreeMap::new();
    for subset in (0..normals.len()).combinations(n - 1) {
        let rows: Vec<Vec<F>> = subset.iter().map(|&i| normals[i].0.clone()).collect();
        let m = Matrix::from_rows(rows).expect("rows have equal length");
        let kernel = m.kernel();
        if kernel.len() != 1 {
            continue;
        }
        let ray = kernel[0].normalize_line().expect("kernel vectors are nonzero");
        rays.entry(ray.key()).or_insert(ray);
    }
    rays.into_values().collect()
}

/// `min (r·ρ)²/(r·r)` over rays `r` and positive roots `ρ` with `r·ρ ≠ 0`.
pub fn min_squared_ray_product<F: Scalar>(system: &CoxeterSystem<F>, rays: &[Vector<F>]) -> Option<F> {
    let mut best: Option<F> = None;
    for r in rays {
        let norm = system.dot(r, r);
        let cov = system.covector(r);
        for rho in system.positive_roots() {
            let d = cov.dot(rho);
            if d.is_zero_exact() {
                continue;
            }
            let q = d.clone() * d / norm.clone();
            if best.as_ref().is_none_or(|b| (q.clone() - b.clone()).sign() < 0) {
                best = Some(q);
            }
        }
    }
    best
}

/// A rational `0 < λ′ ≤ λ = min |r·ρ|` over unit rays: the largest `p/q` with
/// `q ≤ max_denominator` and `(p/q)² ≤ min (r·ρ)²/(r·r)`. Rank 1 gives 1.
///
/// If no positive fraction with that denominator bound fits, the bound is
/// doubled until one does.
pub fn lambda_bound<F: Scalar>(
    system: &CoxeterSystem<F>,
    rays: &[Vector<F>],
    max_denominator: u32,
) -> BigRational {
    let Some(m) = min_squared_ray_product(system, rays) else {
        return BigRational::one();
    };
    let mut limit = max_denominator.max(1) as i64;
    loop {
        if let Some(best) = best_fraction_below_sqrt(&m, limit) {
            return best;
        }
        limit *= 2;
    }
}

fn fits<F: Scalar>(m: &F, p: i64, q: i64) -> bool {
    let x = ratio(p, q);
    (m.clone() - F::from_ratio(&(x.clone() * x))).sign() >= 0
}

fn best_fraction_below_sqrt<F: Scalar>(m: &F, limit: i64) -> Option<BigRational> {
    let root = m.approx().sqrt();
    let mut best: Option<BigRational> = None;
    for q in 1..=limit {
        let mut p = (root * q as f64).floor() as i64 + 1;
        while p > 0 && !fits(m, p, q) {
            p -= 1;
        }
        while fits(m, p + 1, q) {
            p += 1;
        }
        if p == 0 {
            continue;
        }
        let x = ratio(p, q);
        if best.as_ref().is_none_or(|b| &x > b) {
            best = Some(x);
        }
    }
    best
}

/// `v = τ_1 + aτ_2 + … + a^{n-1}τ_n` with `a = 1 + 1/λ′`.
#[derive(Clone, Debug)]
pub struct GenericVector<F: Scalar> {
    pub v: Vector<F>,
    pub lambda: BigRational,
    pub a: BigRational,
    /// Root positions of `τ_1 … τ_n`.
    pub tau: Vec<usize>,
}

/// Builds `v` and checks `(r·v)² ≥ λ′²(r·r)` and `r·v ≠ 0` for every ray.
pub fn generic_vector<F: Scalar>(
    system: &CoxeterSystem<F>,
    ordered: &OrderedRoots<F>,
    rays: &[Vector<F>],
    lambda: &BigRational,
) -> Result<GenericVector<F>> {
    if !lambda.is_positive() {
        return Err(Error::NotPositive);
    }
    let a = BigRational::one() + lambda.recip();
    let n = system.rank();
    let mut v = Vector::zeros(n);
    let mut power = BigRational::one();
    for tau in ordered.tau() {
        v = v.add(&tau.scale(&F::from_ratio(&power)));
        power *= &a;
    }
    let gv = GenericVector {
        v,
        lambda: lambda.clone(),
        a,
        tau: ordered.tau_positions().to_vec(),
    };
    if let Some(bad) = prop41_violations(system, rays, &gv).first() {
        return Err(Error::NotGeneric(*bad));
    }
    if system.dot(&gv.v, &gv.v).sign() <= 0 {
        return Err(Error::NotPositive);
    }
    Ok(gv)
}

/// Indices of rays with `r·v = 0` or `(r·v)² < λ′²(r·r)`.
pub fn prop41_violations<F: Scalar>(
    system: &CoxeterSystem<F>,
    rays: &[Vector<F>],
    gv: &GenericVector<F>,
) -> Vec<usize> {
    let l2 = F::from_ratio(&(gv.lambda.clone() * gv.lambda.clone()));
    rays.iter()
        .enumerate()
        .filter(|(_, r)| {
            let d = system.dot(r, &gv.v);
            d.is_zero_exact() || (d.clone() * d - l2.clone() * system.dot(r, r)).sign() < 0
        })
        .map(|(i, _)| i)
        .collect()
}

/// The region `wC`.
#[derive(Clone, Debug)]
pub struct Chamber<F: Scalar> {
    pub element: ElemId,
    /// `w` applied to the dual-basis rays of `C`.
    pub rays: Vec<Vector<F>>,
    /// `w` applied to the sum of the dual-basis rays.
    pub interior: Vector<F>,
    /// Sign of `ρ·x` on the chamber, over the positive roots.
    pub signs: Vec<i8>,
}

/// One chamber per group element, in element order.
pub fn chambers<F: Scalar>(system: &CoxeterSystem<F>) -> Vec<Chamber<F>> {
    let group = system.group();
    let dual: Vec<Vector<F>> = (0..system.rank()).map(|j| system.fundamental_ray(j)).collect();
    let covectors: Vec<Vector<F>> = system
        .positive_roots()
        .iter()
        .map(|r| system.covector(r))
        .collect();
    group
        .ids()
        .map(|w| {
            let m = group.matrix(w);
            let interior = m.apply(system.interior_point());
            Chamber {
                element: w,
                rays: dual.iter().map(|d| m.apply(d)).collect(),
                signs: covectors.iter().map(|c| c.dot(&interior).sign()).collect(),
                interior,
            }
        })
        .collect()
}

/// Whether `wC ∩ H_v` is nonempty and bounded: every extreme ray has `x·v > 0`.
pub fn bounded_slice<F: Scalar>(system: &CoxeterSystem<F>, chamber: &Chamber<F>, v: &Vector<F>) -> Result<bool> {
    let cov = system.covector(v);
    let mut all = true;
    for (j, r) in chamber.rays.iter().enumerate() {
        match cov.dot(r).sign() {
            0 => return Err(Error::NotGeneric(j)),
            s if s < 0 => all = false,
            _ => {}
        }
    }
    Ok(all)
}

/// Indices of chambers that are bounded-slice together with their antipodes.
pub fn antipodal_violations<F: Scalar>(chambers: &[Chamber<F>], bounded: &[bool]) -> Vec<usize> {
    let by_interior: HashMap<Vec<F::Key>, usize> = chambers
        .iter()
        .enumerate()
        .map(|(i, c)| (c.interior.key(), i))
        .collect();
    (0..chambers.len())
        .filter(|&i| bounded[i])
        .filter(|&i| {
            by_interior
                .get(&chambers[i].interior.neg().key())
                .is_none_or(|&j| bounded[j])
        })
        .collect()
}
