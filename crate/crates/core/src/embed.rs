//! The operator `μ = 2(I - c)⁻¹`, the intersection lattice, and the
//! facet–chamber incidence matrix of the projected complex `μ(X(c))`.

use crate::algebra::{Matrix, Scalar, Vector};
use crate::arrangement::{bounded_slice, Chamber};
use crate::complexes::{Poset, SimplicialComplex, XComplex};
use crate::coxeter::CoxeterSystem;
use crate::error::{Error, Result};
use crate::rootorder::OrderedRoots;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::{BTreeSet, HashMap, VecDeque};

/// `2(I - c)⁻¹`; fails if 1 is an eigenvalue of `c`.
pub fn mu_operator<F: Scalar>(system: &CoxeterSystem<F>) -> Result<Matrix<F>> {
    let n = system.rank();
    let c = system.group().matrix(system.coxeter_element());
    let inv = Matrix::<F>::identity(n)
        .sub(c)
        .inverse()
        .map_err(|_| Error::NotEssential)?;
    Ok(inv.scale(&F::from_int(2)))
}

/// `μ(X(c))`: the vertices `μ(ρ_i)` with the facet combinatorics of `X(c)`.
#[derive(Clone, Debug)]
pub struct MuComplex<F: Scalar> {
    pub mu: Matrix<F>,
    pub vertices: Vec<Vector<F>>,
    pub facets: Vec<Vec<usize>>,
}

pub fn mu_complex<F: Scalar>(
    system: &CoxeterSystem<F>,
    ordered: &OrderedRoots<F>,
    xc: &XComplex,
) -> Result<MuComplex<F>> {
    let mu = mu_operator(system)?;
    let vertices = ordered.roots().iter().map(|r| mu.apply(r)).collect();
    Ok(MuComplex {
        mu,
        vertices,
        facets: xc.facets().to_vec(),
    })
}

/// Violations of the three dot-product properties of `μ`, 0-based positions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MuReport {
    /// `i` with `μ(ρ_i)·v ≤ 0`.
    pub not_positive: Vec<usize>,
    /// `(i, j)`, `i ≤ j`, with `μ(ρ_i)·ρ_j < 0`.
    pub negative_upper: Vec<(usize, usize)>,
    /// `(i, t)`, `1 ≤ t < n`, with `μ(ρ_{i+t})·ρ_i ≠ 0`.
    pub nonzero_shift: Vec<(usize, usize)>,
    pub checks: usize,
}

impl MuReport {
    pub fn passed(&self) -> bool {
        self.not_positive.is_empty() && self.negative_upper.is_empty() && self.nonzero_shift.is_empty()
    }
}

/// Exhaustive over all root positions; `ρ_{i+t}` continues cyclically past `nh/2`.
pub fn check_mu<F: Scalar>(
    system: &CoxeterSystem<F>,
    ordered: &OrderedRoots<F>,
    mu: &MuComplex<F>,
    v: &Vector<F>,
) -> MuReport {
    let n = system.rank();
    let count = ordered.len();
    let mut report = MuReport::default();
    let cov_v = system.covector(v);
    for (i, x) in mu.vertices.iter().enumerate() {
        report.checks += 1;
        if cov_v.dot(x).sign() <= 0 {
            report.not_positive.push(i);
        }
    }
    for i in 0..count {
        let cov = system.covector(&mu.vertices[i]);
        for j in i..count {
            report.checks += 1;
            if cov.dot(ordered.root(j)).sign() < 0 {
                report.negative_upper.push((i, j));
            }
        }
    }
    for i in 0..count {
        let cov = system.covector(ordered.root(i));
        for t in 1..n {
            if i + t >= ordered.extended_len() {
                break;
            }
            report.checks += 1;
            let shifted = mu.mu.apply(ordered.extended(i + t));
            if !cov.dot(&shifted).is_zero_exact() {
                report.nonzero_shift.push((i, t));
            }
        }
    }
    report
}

/// Central projection `x ↦ ((v·v)/(v·x)) x` onto `H_v = {y : v·y = v·v}`.
pub fn project_to_hv<F: Scalar>(system: &CoxeterSystem<F>, x: &Vector<F>, v: &Vector<F>) -> Result<Vector<F>> {
    let vx = system.dot(v, x);
    if vx.sign() <= 0 {
        return Err(Error::NotPositive);
    }
    Ok(x.scale(&(system.dot(v, v) / vx)))
}

/// Flats of the reflection arrangement, each represented by the set of
/// positive roots (indices into `positive_roots`) whose hyperplanes contain it.
///
/// Sorted by codimension, then by root set; index 0 is the whole space,
/// the last index is the origin.
#[derive(Clone, Debug)]
pub struct IntersectionLattice {
    flats: Vec<Vec<usize>>,
    codims: Vec<usize>,
    poset: Poset,
}

impl IntersectionLattice {
    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn flats(&self) -> &[Vec<usize>] {
        &self.flats
    }

    pub fn codimension(&self, i: usize) -> usize {
        self.codims[i]
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn proper_part(&self) -> Poset {
        let keep: Vec<usize> = (1..self.len().saturating_sub(1)).collect();
        self.poset.restrict(&keep)
    }

    pub fn proper_order_complex(&self, budget: usize) -> Result<SimplicialComplex> {
        self.proper_part().order_complex(budget)
    }

    pub fn mobius_number(&self) -> i64 {
        self.poset.mobius(0, self.len() - 1)
    }

    /// Number of flats of each dimension, from the origin up to the whole space.
    pub fn counts_by_dimension(&self, n: usize) -> Vec<usize> {
        let mut out = vec![0; n + 1];
        for &c in &self.codims {
            out[n - c] += 1;
        }
        out
    }
}

/// Closes under intersection, starting from the hyperplanes; the root set of
/// `X ∩ H_ρ` is every root in the span of the roots of `X` and `ρ`.
pub fn build_intersection_lattice<F: Scalar>(system: &CoxeterSystem<F>) -> IntersectionLattice {
    let roots = system.positive_roots();
    let rank_of = |set: &[usize]| -> usize {
        if set.is_empty() {
            return 0;
        }
        Matrix::from_columns(&set.iter().map(|&i| roots[i].clone()).collect::<Vec<_>>())
            .expect("roots share a dimension")
            .rank()
    };
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::from([(Vec::new(), 0)]);
    let mut queue = VecDeque::from([Vec::<usize>::new()]);
    while let Some(set) = queue.pop_front() {
        let codim = seen[&set];
        for i in 0..roots.len() {
            if set.binary_search(&i).is_ok() {
                continue;
            }
            let mut basis = set.clone();
            basis.push(i);
            let target = codim + 1;
            let closure: Vec<usize> = (0..roots.len())
                .filter(|&j| {
                    basis.contains(&j) || {
                        let mut with = basis.clone();
                        with.push(j);
                        rank_of(&with) == target
                    }
                })
                .collect();
            if !seen.contains_key(&closure) {
                seen.insert(closure.clone(), target);
                queue.push_back(closure);
            }
        }
    }
    let mut flats: Vec<(usize, Vec<usize>)> = seen.into_iter().map(|(s, c)| (c, s)).collect();
    flats.sort();
    let sets: Vec<BTreeSet<usize>> = flats.iter().map(|f| f.1.iter().copied().collect()).collect();
    let le = sets
        .iter()
        .map(|a| sets.iter().map(|b| a.is_subset(b)).collect())
        .collect();
    IntersectionLattice {
        codims: flats.iter().map(|f| f.0).collect(),
        flats: flats.into_iter().map(|f| f.1).collect(),
        poset: Poset::new(le).expect("codimension refines reverse inclusion"),
    }
}

/// Chambers whose closed cone lies in the cone on the facet's vertices,
/// decided in the vertex basis of the facet.
pub fn facet_chambers<F: Scalar>(mu: &MuComplex<F>, facet: &[usize], chambers: &[Chamber<F>]) -> Result<Vec<usize>> {
    let cols: Vec<Vector<F>> = facet.iter().map(|&i| mu.vertices[i].clone()).collect();
    let basis = Matrix::from_columns(&cols)?
        .inverse()
        .map_err(|_| Error::DependentFacet(facet.to_vec()))?;
    let mut out = Vec::new();
    for (k, ch) in chambers.iter().enumerate() {
        let inside = ch
            .rays
            .iter()
            .all(|r| basis.apply(r).iter().all(|y| y.sign() >= 0))
            && basis.apply(&ch.interior).iter().all(|y| y.sign() > 0);
        if inside {
            out.push(k);
        }
    }
    Ok(out)
}

/// The incidence matrix `b_{R,F}` and its verdicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub facets: Vec<Vec<usize>>,
    /// Chamber indices of the bounded-slice chambers; these index the rows.
    pub bounded: Vec<usize>,
    /// Chamber indices contained in each facet cone.
    pub columns: Vec<Vec<usize>>,
    /// Rows are bounded-slice chambers, columns are facets.
    pub incidence: Vec<Vec<u8>>,
    pub rank: usize,
    pub disjoint: bool,
    pub nonempty: bool,
    pub injective: bool,
    pub incident_bounded: bool,
    /// Bounded-slice chambers lying in some facet cone (recorded, not asserted).
    pub covered: usize,
}

impl EmbeddingReport {
    pub fn passed(&self) -> bool {
        self.disjoint && self.nonempty && self.injective && self.incident_bounded
    }

    pub fn column_weights(&self) -> Vec<usize> {
        self.columns.iter().map(Vec::len).collect()
    }
}

pub fn pstar_matrix<F: Scalar>(
    system: &CoxeterSystem<F>,
    mu: &MuComplex<F>,
    chambers: &[Chamber<F>],
    v: &Vector<F>,
) -> Result<EmbeddingReport> {
    let mut is_bounded = Vec::with_capacity(chambers.len());
    for ch in chambers {
        is_bounded.push(bounded_slice(system, ch, v)?);
    }
    let bounded: Vec<usize> = (0..chambers.len()).filter(|&k| is_bounded[k]).collect();
    let columns = mu
        .facets
        .iter()
        .map(|f| facet_chambers(mu, f, chambers))
        .collect::<Result<Vec<_>>>()?;
    let mut owner: HashMap<usize, usize> = HashMap::new();
    let mut disjoint = true;
    for (j, col) in columns.iter().enumerate() {
        for &k in col {
            if owner.insert(k, j).is_some() {
                disjoint = false;
            }
        }
    }
    let incident_bounded = columns.iter().flatten().all(|&k| is_bounded[k]);
    let incidence: Vec<Vec<u8>> = bounded
        .iter()
        .map(|k| columns.iter().map(|col| u8::from(col.contains(k))).collect())
        .collect();
    let rank = if incidence.is_empty() || columns.is_empty() {
        0
    } else {
        let rows = incidence
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&b| if b == 1 { BigRational::one() } else { BigRational::zero() })
                    .collect()
            })
            .collect();
        Matrix::from_rows(rows)?.rank()
    };
    let covered = bounded.iter().filter(|k| owner.contains_key(k)).count();
    Ok(EmbeddingReport {
        facets: mu.facets.clone(),
        nonempty: columns.iter().all(|c| !c.is_empty()),
        injective: rank == mu.facets.len(),
        bounded,
        columns,
        incidence,
        rank,
        disjoint,
        incident_bounded,
        covered,
    })
}
