use super::ncp::NcpLattice;
use super::simplicial::{Chain, SimplicialComplex};
use crate::algebra::Scalar;
use crate::coxeter::{CoxeterSystem, ElemId};
use crate::error::{Error, Result};
use crate::rootorder::OrderedRoots;
use num_rational::BigRational;
use num_traits::One;
use std::collections::BTreeSet;

/// The flag complex `X(c)` on root positions `0..nh/2`.
#[derive(Clone, Debug)]
pub struct XComplex {
    edges: Vec<(usize, usize)>,
    complex: SimplicialComplex,
}

impl XComplex {
    pub fn vertex_count(&self) -> usize {
        self.complex.vertex_count()
    }

    /// Edges `(i, j)` with `i < j`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        self.complex.facets()
    }
}

/// Joins `ρ_i`, `ρ_j` (`i < j`) when `r(ρ_j)r(ρ_i)` has length 2 and precedes `c`;
/// facets are the maximal cliques, which must all have `n` vertices.
pub fn build_xc<F: Scalar>(
    system: &CoxeterSystem<F>,
    ordered: &OrderedRoots<F>,
    budget: usize,
) -> Result<XComplex> {
    let group = system.group();
    let c = system.coxeter_element();
    let n = system.rank();
    let count = ordered.len();
    let mut adjacent = vec![vec![false; count]; count];
    let mut edges = Vec::new();
    for i in 0..count {
        for j in i + 1..count {
            let w = group.mul(ordered.reflection(j), ordered.reflection(i));
            if group.length(w) == 2 && system.precedes(w, c) {
                adjacent[i][j] = true;
                adjacent[j][i] = true;
                edges.push((i, j));
            }
        }
    }
    let cliques = maximal_cliques(&adjacent);
    if let Some(bad) = cliques.iter().find(|f| f.len() != n) {
        return Err(Error::Impure {
            expected: n,
            found: bad.len(),
        });
    }
    let complex = SimplicialComplex::from_facets(count, &cliques, budget)?;
    Ok(XComplex { edges, complex })
}

/// Bron–Kerbosch with pivoting; cliques come out sorted, in lexicographic order.
pub fn maximal_cliques(adjacent: &[Vec<bool>]) -> Vec<Vec<usize>> {
    fn expand(
        adjacent: &[Vec<bool>],
        r: &mut Vec<usize>,
        p: Vec<usize>,
        mut x: Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() {
            if x.is_empty() {
                let mut clique = r.clone();
                clique.sort_unstable();
                out.push(clique);
            }
            return;
        }
        let pivot = p
            .iter()
            .chain(&x)
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&v| adjacent[u][v]).count())
            .expect("p is nonempty");
        let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adjacent[pivot][v]).collect();
        let mut p = p;
        for v in candidates {
            let np = p.iter().copied().filter(|&u| adjacent[v][u]).collect();
            let nx = x.iter().copied().filter(|&u| adjacent[v][u]).collect();
            r.push(v);
            expand(adjacent, r, np, nx, out);
            r.pop();
            p.retain(|&u| u != v);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    if adjacent.is_empty() {
        return out;
    }
    expand(adjacent, &mut Vec::new(), (0..adjacent.len()).collect(), Vec::new(), &mut out);
    out.sort();
    out
}

/// `X(w)`: the full subcomplex on the roots whose reflections precede `w`.
pub fn build_xw<F: Scalar>(
    system: &CoxeterSystem<F>,
    ordered: &OrderedRoots<F>,
    xc: &XComplex,
    w: ElemId,
) -> Result<SimplicialComplex> {
    if !system.precedes(w, system.coxeter_element()) {
        return Err(Error::NotBelowCoxeter);
    }
    let keep: Vec<bool> = ordered
        .reflections()
        .iter()
        .map(|&t| system.precedes(t, w))
        .collect();
    Ok(xc.complex().induced(|v| keep[v]))
}

/// `f(σ) = r(τ_k)⋯r(τ_1)` for a simplex with sorted vertices `τ_1 < … < τ_k`.
pub fn f_map<F: Scalar>(system: &CoxeterSystem<F>, ordered: &OrderedRoots<F>, simplex: &[usize]) -> ElemId {
    system
        .group()
        .product(simplex.iter().rev().map(|&i| ordered.reflection(i)))
}

/// Simplices violating `ℓ(r(τ_1)⋯r(τ_k)c) = n - k`.
pub fn lemma48_violations<F: Scalar>(
    system: &CoxeterSystem<F>,
    ordered: &OrderedRoots<F>,
    xc: &XComplex,
) -> Vec<Vec<usize>> {
    let group = system.group();
    let n = system.rank();
    xc.complex()
        .all_faces()
        .filter(|face| {
            let prefix = group.product(face.iter().map(|&i| ordered.reflection(i)));
            let w = group.mul(prefix, system.coxeter_element());
            group.length(w) + face.len() != n
        })
        .cloned()
        .collect()
}

/// Outcome of checking that `f` is a strictly monotone poset map into `NCP_c`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PosetMapReport {
    pub faces_checked: usize,
    pub pairs_checked: usize,
    /// Faces with `ℓ(f(σ)) ≠ |σ|` or `f(σ) ⋠ c`.
    pub bad_faces: Vec<Vec<usize>>,
    /// Pairs `θ ⊊ σ` with `f(θ) ⋠ f(σ)` or `f(θ) = f(σ)`.
    pub bad_pairs: Vec<(Vec<usize>, Vec<usize>)>,
}

impl PosetMapReport {
    pub fn passed(&self) -> bool {
        self.bad_faces.is_empty() && self.bad_pairs.is_empty()
    }
}

/// Exhaustive over all nonempty `θ ⊊ σ` in `X(c)`.
pub fn check_poset_map<F: Scalar>(
    system: &CoxeterSystem<F>,
    ordered: &OrderedRoots<F>,
    xc: &XComplex,
) -> PosetMapReport {
    let c = system.coxeter_element();
    let group = system.group();
    let mut report = PosetMapReport::default();
    for face in xc.complex().all_faces() {
        report.faces_checked += 1;
        let image = f_map(system, ordered, face);
        if group.length(image) != face.len() || !system.precedes(image, c) {
            report.bad_faces.push(face.clone());
        }
        let k = face.len();
        for mask in 1u64..(1u64 << k) - 1 {
            let sub: Vec<usize> = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| face[b]).collect();
            report.pairs_checked += 1;
            let lower = f_map(system, ordered, &sub);
            if lower == image || !system.precedes(lower, image) {
                report.bad_pairs.push((sub, face.clone()));
            }
        }
    }
    report
}

/// Outcome of comparing `{σ ∈ skel_{n-2} X(c) : f(σ) ≼ w}` with the faces of `X(w)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FiberReport {
    pub checked: usize,
    pub failures: Vec<ElemId>,
}

impl FiberReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Exhaustive over every proper element `w` of the lattice.
pub fn fiber_check<F: Scalar>(
    system: &CoxeterSystem<F>,
    ordered: &OrderedRoots<F>,
    xc: &XComplex,
    ncp: &NcpLattice,
) -> Result<FiberReport> {
    let n = system.rank();
    let images: Vec<(Vec<usize>, ElemId)> = xc
        .complex()
        .all_faces()
        .filter(|f| f.len() < n)
        .map(|f| (f.clone(), f_map(system, ordered, f)))
        .collect();
    let mut report = FiberReport::default();
    for i in ncp.proper_indices() {
        let w = ncp.element(i);
        let fiber: BTreeSet<&Vec<usize>> = images
            .iter()
            .filter(|(_, u)| system.precedes(*u, w))
            .map(|(f, _)| f)
            .collect();
        let xw = build_xw(system, ordered, xc, w)?;
        let faces: BTreeSet<&Vec<usize>> = xw.all_faces().collect();
        report.checked += 1;
        if fiber != faces {
            report.failures.push(w);
        }
    }
    Ok(report)
}

/// One cycle per facet `F` of `X(c)` in the order complex of the proper part of `NCP_c`:
/// the image under `f` of the barycentric subdivision of `∂F`,
/// `Σ_π sgn(π) [f{π_1} < f{π_1,π_2} < … < f{π_1,…,π_{n-1}}]`.
///
/// Vertices are proper-part indices (see [`NcpLattice::proper_vertex`]).
/// At rank 1 each cycle is the empty simplex.
pub fn ncp_basis_cycles<F: Scalar>(
    system: &CoxeterSystem<F>,
    ordered: &OrderedRoots<F>,
    xc: &XComplex,
    ncp: &NcpLattice,
) -> Result<Vec<Chain>> {
    let n = system.rank();
    let mut out = Vec::with_capacity(xc.facets().len());
    for facet in xc.facets() {
        let mut chain = Chain::new();
        for (perm, odd) in permutations(n) {
            let mut vertices = Vec::with_capacity(n.saturating_sub(1));
            let mut face = Vec::with_capacity(n);
            for &p in &perm[..n - 1] {
                face.push(facet[p]);
                face.sort_unstable();
                let w = f_map(system, ordered, &face);
                let v = ncp.proper_vertex(w).ok_or_else(|| {
                    Error::DegenerateChain(format!("f({face:?}) is not a proper element"))
                })?;
                vertices.push(v);
            }
            let coeff = if odd { -BigRational::one() } else { BigRational::one() };
            if !chain.add_simplex(&vertices, coeff) {
                return Err(Error::DegenerateChain(format!(
                    "flag {perm:?} of facet {facet:?} repeats an element"
                )));
            }
        }
        out.push(chain);
    }
    Ok(out)
}

/// All permutations of `0..n` with their parity (`true` = odd), in Heap order.
fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    let mut out = Vec::new();
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut odd = false;
    out.push((a.clone(), odd));
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            odd = !odd;
            out.push((a.clone(), odd));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}
