use super::simplicial::{Poset, SimplicialComplex};
use crate::algebra::Scalar;
use crate::coxeter::{CoxeterSystem, ElemId};
use crate::error::Result;
use std::collections::HashMap;

/// The interval `[e, c]` of the absolute order.
///
/// Elements are sorted by reflection length, then by canonical matrix key,
/// so index order is a linear extension of `≼`. Index 0 is `e`, the last index is `c`.
#[derive(Clone, Debug)]
pub struct NcpLattice {
    elements: Vec<ElemId>,
    lengths: Vec<usize>,
    index: HashMap<ElemId, usize>,
    poset: Poset,
}

impl NcpLattice {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[ElemId] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> ElemId {
        self.elements[i]
    }

    pub fn length(&self, i: usize) -> usize {
        self.lengths[i]
    }

    pub fn index_of(&self, w: ElemId) -> Option<usize> {
        self.index.get(&w).copied()
    }

    pub fn contains(&self, w: ElemId) -> bool {
        self.index.contains_key(&w)
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn hasse(&self) -> Vec<(usize, usize)> {
        self.poset.hasse()
    }

    /// Lattice indices of the proper part, in order; proper-part vertex `k` is lattice index `k + 1`.
    pub fn proper_indices(&self) -> Vec<usize> {
        (1..self.top()).collect()
    }

    pub fn proper_part(&self) -> Poset {
        self.poset.restrict(&self.proper_indices())
    }

    /// Proper-part vertex of a proper element.
    pub fn proper_vertex(&self, w: ElemId) -> Option<usize> {
        self.index_of(w).filter(|&i| i > 0 && i < self.top()).map(|i| i - 1)
    }

    pub fn proper_order_complex(&self, budget: usize) -> Result<SimplicialComplex> {
        self.proper_part().order_complex(budget)
    }

    /// `μ(0̂, 1̂)`.
    pub fn mobius_number(&self) -> i64 {
        self.poset.mobius(self.bottom(), self.top())
    }
}

/// All `w ∈ W` with `w ≼ c`, ordered by `≼` inherited from the group.
pub fn build_ncp<F: Scalar>(system: &CoxeterSystem<F>) -> NcpLattice {
    let group = system.group();
    let c = system.coxeter_element();
    let mut members: Vec<(usize, Vec<F::Key>, ElemId)> = group
        .ids()
        .filter(|&w| system.precedes(w, c))
        .map(|w| (group.length(w), group.matrix(w).key(), w))
        .collect();
    members.sort();
    let elements: Vec<ElemId> = members.iter().map(|m| m.2).collect();
    let lengths: Vec<usize> = members.iter().map(|m| m.0).collect();
    let le = elements
        .iter()
        .map(|&u| elements.iter().map(|&w| system.precedes(u, w)).collect())
        .collect();
    let poset = Poset::new(le).expect("length order refines the absolute order");
    let index = elements.iter().enumerate().map(|(i, &w)| (w, i)).collect();
    NcpLattice {
        elements,
        lengths,
        index,
        poset,
    }
}
