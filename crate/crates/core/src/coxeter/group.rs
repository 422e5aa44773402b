use crate::algebra::{Matrix, Scalar};
use crate::error::{Error, Result};
use std::collections::{HashMap, VecDeque};

/// Index of an element in a [`Group`]; `ElemId(0)` is the identity.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemId(pub usize);

/// An element of W as an exact matrix in simple-root coordinates.
#[derive(Clone, Debug)]
pub struct GroupElement<F> {
    pub matrix: Matrix<F>,
    /// Dimension of the fixed space `ker(w - I)`.
    pub fixed_dim: usize,
    /// Reflection length, `n - fixed_dim`.
    pub length: usize,
}

/// All elements of a finite group generated by matrices, closed under products.
#[derive(Clone, Debug)]
pub struct Group<F: Scalar> {
    elements: Vec<GroupElement<F>>,
    index: HashMap<Vec<F::Key>, ElemId>,
    inverse: Vec<ElemId>,
}

impl<F: Scalar> Group<F> {
    /// Breadth-first closure from the identity under right multiplication by `generators`.
    ///
    /// `gram` is the invariant form: every element satisfies `MᵀGM = G`,
    /// which gives inverses as `G⁻¹MᵀG`.
    pub fn generate(generators: &[Matrix<F>], gram: &Matrix<F>, cap: usize) -> Result<Self> {
        let n = gram.rows();
        let identity = Matrix::identity(n);
        let mut matrices = vec![identity.clone()];
        let mut index = HashMap::from([(identity.key(), ElemId(0))]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in generators {
                let prod = matrices[i].mul(g);
                let key = prod.key();
                if index.contains_key(&key) {
                    continue;
                }
                if matrices.len() >= cap {
                    return Err(Error::GroupCapExceeded(cap));
                }
                index.insert(key, ElemId(matrices.len()));
                queue.push_back(matrices.len());
                matrices.push(prod);
            }
        }
        let gram_inv = gram.inverse()?;
        let elements: Vec<GroupElement<F>> = matrices
            .into_iter()
            .map(|m| {
                let length = m.sub(&identity).rank();
                GroupElement {
                    matrix: m,
                    fixed_dim: n - length,
                    length,
                }
            })
            .collect();
        let inverse = elements
            .iter()
            .map(|e| {
                let inv = gram_inv.mul(&e.matrix.transpose()).mul(gram);
                index
                    .get(&inv.key())
                    .copied()
                    .ok_or_else(|| Error::Dimension("generators do not preserve the form".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Group {
            elements,
            index,
            inverse,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn identity(&self) -> ElemId {
        ElemId(0)
    }

    pub fn ids(&self) -> impl Iterator<Item = ElemId> {
        (0..self.elements.len()).map(ElemId)
    }

    pub fn get(&self, id: ElemId) -> &GroupElement<F> {
        &self.elements[id.0]
    }

    pub fn matrix(&self, id: ElemId) -> &Matrix<F> {
        &self.elements[id.0].matrix
    }

    pub fn lookup(&self, m: &Matrix<F>) -> Option<ElemId> {
        self.index.get(&m.key()).copied()
    }

    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        let prod = self.matrix(a).mul(self.matrix(b));
        self.lookup(&prod).expect("group is closed under products")
    }

    /// Product of a sequence of elements, left to right.
    pub fn product(&self, ids: impl IntoIterator<Item = ElemId>) -> ElemId {
        ids.into_iter()
            .fold(self.identity(), |acc, x| self.mul(acc, x))
    }

    pub fn inverse(&self, a: ElemId) -> ElemId {
        self.inverse[a.0]
    }

    pub fn length(&self, a: ElemId) -> usize {
        self.elements[a.0].length
    }

    /// Multiplicative order of `a`.
    pub fn order(&self, a: ElemId) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity() {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Minimal word length of every element over the generating set `gens`,
    /// by breadth-first search on the Cayley graph.
    pub fn word_lengths(&self, gens: &[ElemId]) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.len()];
        dist[0] = 0;
        let mut queue = VecDeque::from([self.identity()]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if dist[y.0] == usize::MAX {
                    dist[y.0] = dist[x.0] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }
}
