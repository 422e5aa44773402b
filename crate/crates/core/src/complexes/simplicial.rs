use crate::algebra::{Matrix, Vector};
use crate::error::{Error, Result};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// Default bound on the number of faces any complex may have.
pub const DEFAULT_SIMPLEX_BUDGET: usize = 5_000_000;

/// A finite abstract simplicial complex on vertices `0..vertex_count`.
///
/// Faces are sorted vertex tuples grouped by dimension; the empty face is
/// implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    faces: Vec<Vec<Vec<usize>>>,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    pub fn empty(vertex_count: usize) -> Self {
        SimplicialComplex {
            vertex_count,
            faces: Vec::new(),
            facets: Vec::new(),
        }
    }

    /// The complex generated by `facets` (every subset of a facet is a face).
    pub fn from_facets(vertex_count: usize, facets: &[Vec<usize>], budget: usize) -> Result<Self> {
        let mut by_dim: Vec<BTreeSet<Vec<usize>>> = Vec::new();
        let mut total = 0usize;
        for facet in facets {
            let mut f = facet.clone();
            f.sort_unstable();
            f.dedup();
            let k = f.len();
            if k >= usize::BITS as usize {
                return Err(Error::BudgetExceeded(budget));
            }
            for mask in 1u64..(1u64 << k) {
                let face: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                let d = face.len() - 1;
                if by_dim.len() <= d {
                    by_dim.resize_with(d + 1, BTreeSet::new);
                }
                if by_dim[d].insert(face) {
                    total += 1;
                    if total > budget {
                        return Err(Error::BudgetExceeded(budget));
                    }
                }
            }
        }
        Ok(Self::from_face_sets(vertex_count, by_dim))
    }

    /// Builds from a downward-closed collection of faces.
    pub fn from_faces(vertex_count: usize, faces: impl IntoIterator<Item = Vec<usize>>) -> Self {
        let mut by_dim: Vec<BTreeSet<Vec<usize>>> = Vec::new();
        for mut f in faces {
            f.sort_unstable();
            if f.is_empty() {
                continue;
            }
            let d = f.len() - 1;
            if by_dim.len() <= d {
                by_dim.resize_with(d + 1, BTreeSet::new);
            }
            by_dim[d].insert(f);
        }
        Self::from_face_sets(vertex_count, by_dim)
    }

    fn from_face_sets(vertex_count: usize, by_dim: Vec<BTreeSet<Vec<usize>>>) -> Self {
        let mut maximal: BTreeSet<Vec<usize>> = by_dim.iter().flatten().cloned().collect();
        for faces in by_dim.iter().skip(1) {
            for face in faces {
                for skip in 0..face.len() {
                    let mut sub = face.clone();
                    sub.remove(skip);
                    maximal.remove(&sub);
                }
            }
        }
        let mut facets: Vec<Vec<usize>> = maximal.into_iter().collect();
        facets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        SimplicialComplex {
            vertex_count,
            faces: by_dim.into_iter().map(|s| s.into_iter().collect()).collect(),
            facets,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Dimension, `-1` for the empty complex.
    pub fn dimension(&self) -> isize {
        self.faces.len() as isize - 1
    }

    /// Faces of dimension `d` in lexicographic order.
    pub fn faces(&self, d: usize) -> &[Vec<usize>] {
        self.faces.get(d).map_or(&[], Vec::as_slice)
    }

    /// All nonempty faces, by dimension then lexicographically.
    pub fn all_faces(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.faces.iter().flatten()
    }

    pub fn face_count(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    /// Maximal faces, by size then lexicographically.
    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        if face.is_empty() {
            return true;
        }
        self.faces
            .get(face.len() - 1)
            .is_some_and(|fs| fs.binary_search_by(|f| f.as_slice().cmp(face)).is_ok())
    }

    /// The `k`-skeleton: faces of dimension at most `k`.
    pub fn skeleton(&self, k: usize) -> SimplicialComplex {
        let faces: Vec<Vec<usize>> = self.faces.iter().take(k + 1).flatten().cloned().collect();
        SimplicialComplex::from_faces(self.vertex_count, faces)
    }

    /// The full subcomplex on the given vertices.
    pub fn induced(&self, keep: impl Fn(usize) -> bool) -> SimplicialComplex {
        let faces: Vec<Vec<usize>> = self
            .all_faces()
            .filter(|f| f.iter().all(|&v| keep(v)))
            .cloned()
            .collect();
        SimplicialComplex::from_faces(self.vertex_count, faces)
    }
}

/// Reduced Betti numbers over Q, indexed from dimension `-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedBetti(Vec<usize>);

impl ReducedBetti {
    pub fn get(&self, dim: isize) -> usize {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|i| self.0.get(i).copied())
            .unwrap_or(0)
    }

    /// `(dimension, rank)` for every nonzero reduced Betti number.
    pub fn nonzero(&self) -> Vec<(isize, usize)> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &b)| b > 0)
            .map(|(i, &b)| (i as isize - 1, b))
            .collect()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

fn face_index(faces: &[Vec<usize>]) -> HashMap<&[usize], usize> {
    faces.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect()
}

/// Matrix of `∂_d : C_d → C_{d-1}`; for `d = 0` the target is the one-dimensional `C_{-1}`.
pub fn boundary_matrix(complex: &SimplicialComplex, d: usize) -> Matrix<BigRational> {
    let cols = complex.faces(d);
    let one = BigRational::one();
    if d == 0 {
        let mut m = Matrix::zeros(1, cols.len());
        for j in 0..cols.len() {
            m[(0, j)] = one.clone();
        }
        return m;
    }
    let rows = complex.faces(d - 1);
    let index = face_index(rows);
    let mut m = Matrix::zeros(rows.len(), cols.len());
    for (j, face) in cols.iter().enumerate() {
        for skip in 0..face.len() {
            let mut sub = face.clone();
            sub.remove(skip);
            let i = index[sub.as_slice()];
            m[(i, j)] = if skip % 2 == 0 { one.clone() } else { -one.clone() };
        }
    }
    m
}

/// Reduced rational homology ranks from exact boundary-matrix ranks.
pub fn reduced_betti(complex: &SimplicialComplex) -> ReducedBetti {
    let top = complex.faces.len();
    // ranks[d] = rank ∂_d for d = 0..top; ∂_{top} = 0
    let ranks: Vec<usize> = (0..top).map(|d| boundary_matrix(complex, d).rank()).collect();
    let rank_of = |d: usize| ranks.get(d).copied().unwrap_or(0);
    let mut out = Vec::with_capacity(top + 1);
    // dimension -1: C_{-1} = Q, image of ∂_0
    out.push(1 - rank_of(0));
    for d in 0..top {
        out.push(complex.faces(d).len() - rank_of(d) - rank_of(d + 1));
    }
    while out.len() > 1 && out.last() == Some(&0) {
        out.pop();
    }
    ReducedBetti(out)
}

/// A rational chain: oriented simplices (sorted vertex tuples) with coefficients.
///
/// The empty tuple is the `(-1)`-simplex, so boundaries are augmented.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Chain {
    terms: BTreeMap<Vec<usize>, BigRational>,
}

impl Chain {
    pub fn new() -> Self {
        Chain::default()
    }

    /// Adds `coeff · [v_0, …, v_k]`, reordering the vertices and adjusting
    /// the sign by the parity of the sorting permutation.
    ///
    /// Returns `false` (and adds nothing) if a vertex repeats.
    pub fn add_simplex(&mut self, vertices: &[usize], coeff: BigRational) -> bool {
        let mut v = vertices.to_vec();
        let mut odd = false;
        // insertion sort counting transpositions
        for i in 1..v.len() {
            let mut j = i;
            while j > 0 && v[j - 1] > v[j] {
                v.swap(j - 1, j);
                odd = !odd;
                j -= 1;
            }
        }
        if v.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        let c = if odd { -coeff } else { coeff };
        let entry = self.terms.entry(v).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
        true
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn boundary(&self) -> Chain {
        let mut out = Chain::new();
        for (simplex, c) in &self.terms {
            for skip in 0..simplex.len() {
                let mut sub = simplex.clone();
                sub.remove(skip);
                let sign = if skip % 2 == 0 { c.clone() } else { -c.clone() };
                out.add_simplex(&sub, sign);
            }
        }
        out
    }

    /// Coefficient vector against an ordered basis of faces of one dimension.
    pub fn coordinates(&self, basis: &[Vec<usize>]) -> Option<Vector<BigRational>> {
        let index = face_index(basis);
        let mut v = Vector::zeros(basis.len());
        for (s, c) in &self.terms {
            v.0[*index.get(s.as_slice())?] = c.clone();
        }
        Some(v)
    }
}

/// Rank of a family of `d`-cycles in `H̃_d`, i.e. modulo the boundaries of `(d+1)`-faces.
pub fn homology_rank(complex: &SimplicialComplex, d: isize, cycles: &[Chain]) -> Option<usize> {
    let basis: Vec<Vec<usize>> = if d < 0 {
        vec![Vec::new()]
    } else {
        complex.faces(d as usize).to_vec()
    };
    let upper = boundary_matrix_above(complex, d);
    let mut cols: Vec<Vector<BigRational>> = (0..upper.cols()).map(|j| upper.column(j)).collect();
    let boundary_rank = if cols.is_empty() {
        0
    } else {
        Matrix::from_columns(&cols).ok()?.rank()
    };
    for c in cycles {
        cols.push(c.coordinates(&basis)?);
    }
    if cols.is_empty() {
        return Some(0);
    }
    Some(Matrix::from_columns(&cols).ok()?.rank() - boundary_rank)
}

fn boundary_matrix_above(complex: &SimplicialComplex, d: isize) -> Matrix<BigRational> {
    let up = (d + 1) as usize;
    if complex.faces(up).is_empty() {
        let rows = if d < 0 { 1 } else { complex.faces(d as usize).len() };
        return Matrix::zeros(rows, 0);
    }
    boundary_matrix(complex, up)
}

/// A finite poset on `0..len`, indexed along a linear extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    le: Vec<Vec<bool>>,
}

impl Poset {
    /// `le[a][b]` means `a ≤ b`. Fails unless the indexing is a linear extension.
    pub fn new(le: Vec<Vec<bool>>) -> Result<Self> {
        let n = le.len();
        for a in 0..n {
            if le[a].len() != n || !le[a][a] {
                return Err(Error::Dimension("order relation must be square and reflexive".into()));
            }
            for b in 0..a {
                if le[a][b] {
                    return Err(Error::Dimension(
                        "poset elements must be indexed along a linear extension".into(),
                    ));
                }
            }
        }
        Ok(Poset { le })
    }

    pub fn len(&self) -> usize {
        self.le.len()
    }

    pub fn is_empty(&self) -> bool {
        self.le.is_empty()
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.le[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.le[a][b]
    }

    /// The subposet on `keep` (in increasing index order).
    pub fn restrict(&self, keep: &[usize]) -> Poset {
        Poset {
            le: keep
                .iter()
                .map(|&a| keep.iter().map(|&b| self.le[a][b]).collect())
                .collect(),
        }
    }

    /// Covering pairs `(a, b)` with `a ⋖ b`.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if self.le[a][b] && !(a + 1..b).any(|c| self.le[a][c] && self.le[c][b]) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// `μ(a, b)` by the recursion `μ(a, b) = -Σ_{a ≤ c < b} μ(a, c)`.
    pub fn mobius(&self, a: usize, b: usize) -> i64 {
        if !self.le[a][b] {
            return 0;
        }
        let mut mu = vec![0i64; self.len()];
        mu[a] = 1;
        for c in a + 1..=b {
            if self.le[a][c] && self.le[c][b] {
                mu[c] = -(a..c).filter(|&x| self.le[x][c]).map(|x| mu[x]).sum::<i64>();
            }
        }
        mu[b]
    }

    /// The order complex: vertices are elements, simplices are nonempty chains.
    pub fn order_complex(&self, budget: usize) -> Result<SimplicialComplex> {
        let n = self.len();
        let mut faces = Vec::new();
        let mut stack: Vec<Vec<usize>> = (0..n).map(|a| vec![a]).collect();
        while let Some(chain) = stack.pop() {
            let last = *chain.last().expect("chains are nonempty");
            for b in last + 1..n {
                if self.le[last][b] {
                    let mut next = chain.clone();
                    next.push(b);
                    stack.push(next);
                }
            }
            faces.push(chain);
            if faces.len() > budget {
                return Err(Error::BudgetExceeded(budget));
            }
        }
        Ok(SimplicialComplex::from_faces(n, faces))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn triangle_boundary_has_one_loop() {
        let c = SimplicialComplex::from_facets(3, &[vec![0, 1], vec![1, 2], vec![0, 2]], 100)
            .unwrap();
        let b = reduced_betti(&c);
        assert_eq!(b.nonzero(), vec![(1, 1)]);
    }

    #[test]
    fn cone_is_acyclic() {
        let c = SimplicialComplex::from_facets(
            4,
            &[vec![0, 1, 3], vec![1, 2, 3], vec![0, 2, 3]],
            100,
        )
        .unwrap();
        assert!(reduced_betti(&c).nonzero().is_empty());
    }

    #[test]
    fn empty_complex_has_minus_one_homology() {
        let c = SimplicialComplex::empty(0);
        assert_eq!(c.dimension(), -1);
        assert_eq!(reduced_betti(&c).nonzero(), vec![(-1, 1)]);
    }

    #[test]
    fn three_points() {
        let c = SimplicialComplex::from_facets(3, &[vec![0], vec![1], vec![2]], 100).unwrap();
        assert_eq!(reduced_betti(&c).get(0), 2);
    }

    #[test]
    fn order_complex_of_antichain_and_chain() {
        let antichain = Poset::new(vec![
            vec![true, false, false],
            vec![false, true, false],
            vec![false, false, true],
        ])
        .unwrap();
        let oc = antichain.order_complex(100).unwrap();
        assert_eq!(oc.dimension(), 0);
        assert_eq!(oc.face_count(), 3);

        let chain = Poset::new(vec![
            vec![true, true, true],
            vec![false, true, true],
            vec![false, false, true],
        ])
        .unwrap();
        let oc = chain.order_complex(100).unwrap();
        assert_eq!(oc.dimension(), 2);
        assert_eq!(oc.face_count(), 7);
        assert_eq!(oc.facets(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn order_complex_budget() {
        let chain = Poset::new(vec![
            vec![true, true, true],
            vec![false, true, true],
            vec![false, false, true],
        ])
        .unwrap();
        assert_eq!(chain.order_complex(5).unwrap_err(), Error::BudgetExceeded(5));
    }

    #[test]
    fn rejects_non_linear_extension() {
        assert!(Poset::new(vec![vec![true, false], vec![true, true]]).is_err());
    }

    #[test]
    fn mobius_of_boolean_lattice() {
        // B_2: 0 < a, b < 1
        let p = Poset::new(vec![
            vec![true, true, true, true],
            vec![false, true, false, true],
            vec![false, false, true, true],
            vec![false, false, false, true],
        ])
        .unwrap();
        assert_eq!(p.mobius(0, 3), 1);
        assert_eq!(p.mobius(0, 1), -1);
        assert_eq!(p.hasse(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn chains_orient_and_bound() {
        let mut c = Chain::new();
        assert!(c.add_simplex(&[2, 0, 1], q(1)));
        assert_eq!(c.terms()[&vec![0, 1, 2]], q(1));
        assert!(!c.add_simplex(&[1, 1], q(1)));
        let mut d = Chain::new();
        d.add_simplex(&[1, 0], q(1));
        assert_eq!(d.terms()[&vec![0, 1]], q(-1));
        assert!(c.boundary().boundary().is_zero());
        // augmented: ∂[v] = [∅]
        let mut p = Chain::new();
        p.add_simplex(&[4], q(3));
        assert_eq!(p.boundary().terms()[&Vec::new()], q(3));
    }

    #[test]
    fn homology_rank_of_loop() {
        let c = SimplicialComplex::from_facets(3, &[vec![0, 1], vec![1, 2], vec![0, 2]], 100)
            .unwrap();
        let mut z = Chain::new();
        z.add_simplex(&[0, 1], q(1));
        z.add_simplex(&[1, 2], q(1));
        z.add_simplex(&[2, 0], q(1));
        assert!(z.boundary().is_zero());
        assert_eq!(homology_rank(&c, 1, &[z.clone(), z]), Some(1));
        let filled = SimplicialComplex::from_facets(3, &[vec![0, 1, 2]], 100).unwrap();
        let mut z = Chain::new();
        z.add_simplex(&[0, 1], q(1));
        z.add_simplex(&[1, 2], q(1));
        z.add_simplex(&[2, 0], q(1));
        assert_eq!(homology_rank(&filled, 1, &[z]), Some(0));
    }

    #[test]
    fn skeleton_and_induced() {
        let c = SimplicialComplex::from_facets(4, &[vec![0, 1, 2], vec![2, 3]], 100).unwrap();
        assert_eq!(c.skeleton(0).face_count(), 4);
        assert_eq!(c.skeleton(1).dimension(), 1);
        let sub = c.induced(|v| v != 1);
        assert_eq!(sub.facets(), &[vec![0, 2], vec![2, 3]]);
        assert!(c.contains(&[0, 2]));
        assert!(!c.contains(&[0, 3]));
    }
}
