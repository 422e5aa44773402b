//! Finite Coxeter systems realized by unit inward normals.
//!
//! Vectors are written in the basis of simple roots and paired with the Gram
//! form `G_ij = α_i·α_j = -cos(π/m_ij)`. This is isometric to a Euclidean
//! realization of the simple roots, but keeps every coordinate inside the
//! field generated by the Gram entries.

mod diagram;
mod group;

pub use diagram::{is_positive_definite, CoxeterDiagram, CoxeterScalar};
pub use group::{ElemId, Group, GroupElement};

use crate::algebra::{Matrix, Scalar, Vector};
use crate::error::{Error, Result};
use std::collections::{HashMap, HashSet, VecDeque};

/// Default bound on the group order.
pub const DEFAULT_GROUP_CAP: usize = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    /// Put the other color class of the Coxeter graph first.
    pub swap_bipartition: bool,
    pub group_cap: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            swap_bipartition: false,
            group_cap: DEFAULT_GROUP_CAP,
        }
    }
}

/// A finite Coxeter system with its group, reflections and Coxeter element.
#[derive(Clone, Debug)]
pub struct CoxeterSystem<F: Scalar> {
    input_diagram: CoxeterDiagram,
    diagram: CoxeterDiagram,
    order: Vec<usize>,
    s: usize,
    gram: Matrix<F>,
    gram_inv: Matrix<F>,
    interior: Vector<F>,
    simple_reflections: Vec<ElemId>,
    coxeter_element: ElemId,
    coxeter_number: usize,
    group: Group<F>,
    positive_roots: Vec<Vector<F>>,
    reflections: Vec<ElemId>,
    reflection_index: HashMap<ElemId, usize>,
}

impl<F: CoxeterScalar> CoxeterSystem<F> {
    pub fn build(diagram: &CoxeterDiagram, options: &BuildOptions) -> Result<Self> {
        let (order, s) = diagram.bipartite_order(options.swap_bipartition)?;
        let ordered = diagram.permuted(&order);
        let gram = F::gram_matrix(&ordered)?;
        if !is_positive_definite(&gram) {
            return Err(Error::NotFiniteType);
        }
        let gram_inv = gram.inverse()?;
        let n = ordered.rank();

        let simple: Vec<Matrix<F>> = (0..n)
            .map(|i| reflection_matrix(&gram, &Vector::unit(n, i)))
            .collect();
        let group = Group::generate(&simple, &gram, options.group_cap)?;
        let simple_reflections: Vec<ElemId> = simple
            .iter()
            .map(|m| group.lookup(m).expect("generators belong to the group"))
            .collect();
        let coxeter_element = group.product(simple_reflections.iter().copied());
        let coxeter_number = group.order(coxeter_element);

        // dual basis vectors ω_j satisfy ω_j·α_i = δ_ij, so Σω_j = G⁻¹·1
        let interior = gram_inv.apply(&diagram::one_vector(n));

        let mut roots: Vec<Vector<F>> = Vec::new();
        let mut seen = HashSet::new();
        let mut queue: VecDeque<Vector<F>> = (0..n).map(|i| Vector::unit(n, i)).collect();
        for r in &queue {
            seen.insert(r.key());
        }
        while let Some(r) = queue.pop_front() {
            for m in &simple {
                let image = m.apply(&r);
                if seen.insert(image.key()) {
                    queue.push_back(image);
                }
            }
            roots.push(r);
        }
        let positive_roots: Vec<Vector<F>> = roots
            .into_iter()
            .filter(|r| bilinear(&gram, r, &interior).sign() > 0)
            .collect();
        let reflections: Vec<ElemId> = positive_roots
            .iter()
            .map(|r| {
                group
                    .lookup(&reflection_matrix(&gram, r))
                    .expect("root reflections belong to the group")
            })
            .collect();
        if positive_roots.len() * 2 != n * coxeter_number {
            return Err(Error::RootOrder(format!(
                "{} positive roots but nh/2 = {}",
                positive_roots.len(),
                n * coxeter_number / 2
            )));
        }
        let reflection_index = reflections.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        Ok(CoxeterSystem {
            input_diagram: diagram.clone(),
            diagram: ordered,
            order,
            s,
            gram,
            gram_inv,
            interior,
            simple_reflections,
            coxeter_element,
            coxeter_number,
            group,
            positive_roots,
            reflections,
            reflection_index,
        })
    }
}

impl<F: Scalar> CoxeterSystem<F> {
    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    /// The diagram as given, before bipartite reordering.
    pub fn input_diagram(&self) -> &CoxeterDiagram {
        &self.input_diagram
    }

    /// The diagram in bipartite order.
    pub fn diagram(&self) -> &CoxeterDiagram {
        &self.diagram
    }

    /// `bipartite_order()[k]` is the input node placed at position `k`.
    pub fn bipartite_order(&self) -> &[usize] {
        &self.order
    }

    /// Size of the first color class.
    pub fn s(&self) -> usize {
        self.s
    }

    pub fn gram(&self) -> &Matrix<F> {
        &self.gram
    }

    pub fn gram_inverse(&self) -> &Matrix<F> {
        &self.gram_inv
    }

    /// Sum of the dual basis vectors, an interior point of the fundamental chamber.
    pub fn interior_point(&self) -> &Vector<F> {
        &self.interior
    }

    /// The dual basis vector `ω_j`, an extreme ray of the fundamental chamber.
    pub fn fundamental_ray(&self, j: usize) -> Vector<F> {
        self.gram_inv.column(j)
    }

    pub fn group(&self) -> &Group<F> {
        &self.group
    }

    pub fn simple_reflections(&self) -> &[ElemId] {
        &self.simple_reflections
    }

    /// `c = r_1 r_2 ... r_n` in bipartite order.
    pub fn coxeter_element(&self) -> ElemId {
        self.coxeter_element
    }

    /// The order `h` of `c`.
    pub fn coxeter_number(&self) -> usize {
        self.coxeter_number
    }

    /// Unit positive roots, in breadth-first discovery order.
    pub fn positive_roots(&self) -> &[Vector<F>] {
        &self.positive_roots
    }

    /// The reflection set T, parallel to [`positive_roots`](Self::positive_roots).
    pub fn reflections(&self) -> &[ElemId] {
        &self.reflections
    }

    /// Position of a reflection in [`reflections`](Self::reflections).
    pub fn reflection_position(&self, t: ElemId) -> Option<usize> {
        self.reflection_index.get(&t).copied()
    }

    /// Inner product `xᵀGy` of vectors in simple-root coordinates.
    pub fn dot(&self, x: &Vector<F>, y: &Vector<F>) -> F {
        bilinear(&self.gram, x, y)
    }

    /// Linear functional `y ↦ x·y` as a coordinate row.
    pub fn covector(&self, x: &Vector<F>) -> Vector<F> {
        self.gram.apply(x)
    }

    /// The reflection `r(ρ)` as an element, for any root `ρ` (positive or negative).
    pub fn reflection_of(&self, root: &Vector<F>) -> Option<ElemId> {
        self.group.lookup(&reflection_matrix(&self.gram, root))
    }

    pub fn is_positive(&self, v: &Vector<F>) -> bool {
        self.dot(v, &self.interior).sign() > 0
    }

    /// `ℓ(w)`, the codimension of the fixed space of `w`.
    pub fn reflection_length(&self, w: ElemId) -> usize {
        self.group.length(w)
    }

    /// Absolute order: `u ≼ w` iff `ℓ(w) = ℓ(u) + ℓ(u⁻¹w)`.
    pub fn precedes(&self, u: ElemId, w: ElemId) -> bool {
        let rest = self.group.mul(self.group.inverse(u), w);
        self.group.length(w) == self.group.length(u) + self.group.length(rest)
    }

    /// Reflection length of every element by breadth-first search over T-words.
    pub fn reflection_length_bfs(&self) -> Vec<usize> {
        self.group.word_lengths(&self.reflections)
    }
}

pub(crate) fn bilinear<F: Scalar>(gram: &Matrix<F>, x: &Vector<F>, y: &Vector<F>) -> F {
    x.dot(&gram.apply(y))
}

/// `x ↦ x - 2(x·ρ)/(ρ·ρ) ρ` in simple-root coordinates.
pub fn reflection_matrix<F: Scalar>(gram: &Matrix<F>, root: &Vector<F>) -> Matrix<F> {
    let n = root.len();
    let g_root = gram.apply(root);
    let norm = root.dot(&g_root);
    let two = F::from_int(2) / norm;
    let mut m = Matrix::<F>::identity(n);
    for i in 0..n {
        for j in 0..n {
            let d = two.clone() * root[i].clone() * g_root[j].clone();
            m[(i, j)] = m[(i, j)].clone() - d;
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FieldElement;
    use num_rational::BigRational;

    fn build(kind: &str, rank: usize) -> CoxeterSystem<FieldElement> {
        let d = CoxeterDiagram::from_type(kind, rank).unwrap();
        CoxeterSystem::build(&d, &BuildOptions::default()).unwrap()
    }

    #[test]
    fn group_orders() {
        for (kind, rank, order, h) in [
            ("A", 1, 2, 2),
            ("A", 2, 6, 3),
            ("A", 3, 24, 4),
            ("B", 2, 8, 4),
            ("B", 3, 48, 6),
            ("D", 4, 192, 6),
            ("H", 3, 120, 10),
            ("I7", 2, 14, 7),
        ] {
            let sys = build(kind, rank);
            assert_eq!(sys.group().len(), order, "{kind}{rank}");
            assert_eq!(sys.coxeter_number(), h, "{kind}{rank}");
            assert_eq!(sys.reflections().len(), rank * h / 2, "{kind}{rank}");
        }
    }

    #[test]
    fn a2_inner_products() {
        let sys = build("A", 2);
        let a1 = Vector::unit(2, 0);
        let a2 = Vector::unit(2, 1);
        let half = FieldElement::rational(BigRational::new((-1).into(), 2.into()));
        assert_eq!(sys.dot(&a1, &a2), half);
        assert_eq!(sys.dot(&a1, &a1), FieldElement::integer(1));
    }

    #[test]
    fn elements_preserve_the_form() {
        let sys = build("B", 3);
        let g = sys.gram();
        for id in sys.group().ids() {
            let m = sys.group().matrix(id);
            assert_eq!(&m.transpose().mul(g).mul(m), g);
        }
    }

    #[test]
    fn lengths_of_special_elements() {
        for (kind, rank) in [("A", 2), ("B", 3)] {
            let sys = build(kind, rank);
            assert_eq!(sys.reflection_length(sys.group().identity()), 0);
            for &t in sys.reflections() {
                assert_eq!(sys.reflection_length(t), 1);
            }
            assert_eq!(sys.reflection_length(sys.coxeter_element()), rank);
        }
    }

    #[test]
    fn length_matches_breadth_first_oracle() {
        for (kind, rank) in [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("H", 3)] {
            let sys = build(kind, rank);
            let bfs = sys.reflection_length_bfs();
            for id in sys.group().ids() {
                assert_eq!(sys.reflection_length(id), bfs[id.0], "{kind}{rank}");
            }
        }
    }

    #[test]
    fn absolute_order_basics() {
        let sys = build("A", 2);
        let e = sys.group().identity();
        let c = sys.coxeter_element();
        for w in sys.group().ids() {
            assert!(sys.precedes(e, w));
            assert!(sys.precedes(w, w));
        }
        for &t in sys.reflections() {
            assert!(sys.precedes(t, c));
        }
    }

    #[test]
    fn absolute_order_is_a_partial_order() {
        for (kind, rank) in [("A", 3), ("B", 3)] {
            let sys = build(kind, rank);
            let ids: Vec<ElemId> = sys.group().ids().collect();
            let le: Vec<Vec<bool>> = ids
                .iter()
                .map(|&u| ids.iter().map(|&w| sys.precedes(u, w)).collect())
                .collect();
            let k = ids.len();
            for a in 0..k {
                assert!(le[a][a]);
                for b in 0..k {
                    if a != b && le[a][b] {
                        assert!(!le[b][a], "antisymmetry");
                    }
                    if !le[a][b] {
                        continue;
                    }
                    for c in 0..k {
                        if le[b][c] {
                            assert!(le[a][c], "transitivity");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn reflection_conjugation_identity() {
        // r(ρ)r(τ) = r(τ)r(ρ') with ρ' = r(τ)[ρ]
        for (kind, rank) in [("A", 3), ("B", 3), ("H", 3)] {
            let sys = build(kind, rank);
            let g = sys.group();
            for (i, rho) in sys.positive_roots().iter().enumerate() {
                for (j, &t) in sys.reflections().iter().enumerate() {
                    let rho_prime = g.matrix(t).apply(rho);
                    let r_prime = sys.reflection_of(&rho_prime).unwrap();
                    let lhs = g.mul(sys.reflections()[i], t);
                    let rhs = g.mul(t, r_prime);
                    assert_eq!(lhs, rhs, "{kind}{rank}: roots {i}, {j}");
                }
            }
        }
    }

    #[test]
    fn rejects_infinite_type() {
        let d = CoxeterDiagram::from_matrix(vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]])
            .unwrap();
        // a triangle is not 2-colorable, reported before the Gram test
        assert!(CoxeterSystem::<FieldElement>::build(&d, &BuildOptions::default()).is_err());
        let d = CoxeterDiagram::from_matrix(vec![vec![1, 4, 2], vec![4, 1, 4], vec![2, 4, 1]])
            .unwrap();
        assert_eq!(
            CoxeterSystem::<FieldElement>::build(&d, &BuildOptions::default()).unwrap_err(),
            Error::NotFiniteType
        );
    }

    #[test]
    fn group_cap_is_enforced() {
        let d = CoxeterDiagram::from_type("B", 3).unwrap();
        let opts = BuildOptions {
            group_cap: 10,
            ..BuildOptions::default()
        };
        assert_eq!(
            CoxeterSystem::<FieldElement>::build(&d, &opts).unwrap_err(),
            Error::GroupCapExceeded(10)
        );
    }

    #[test]
    fn scalar_types_agree() {
        let d = CoxeterDiagram::from_type("B", 3).unwrap();
        let exact = CoxeterSystem::<FieldElement>::build(&d, &BuildOptions::default()).unwrap();
        let float = CoxeterSystem::<f64>::build(&d, &BuildOptions::default()).unwrap();
        assert_eq!(exact.group().len(), float.group().len());
        assert_eq!(exact.coxeter_number(), float.coxeter_number());
        let a3 = CoxeterDiagram::from_type("A", 3).unwrap();
        let rational = CoxeterSystem::<BigRational>::build(&a3, &BuildOptions::default()).unwrap();
        assert_eq!(rational.group().len(), 24);
    }
}
