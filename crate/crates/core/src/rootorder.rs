//! The total order `ρ_i = r_1 ⋯ r_{i-1} α_i` on positive roots (indices mod n)
//! and the last `n` roots `τ`.

use crate::algebra::{Matrix, Scalar, Vector};
use crate::coxeter::{CoxeterSystem, ElemId};
use crate::error::{Error, Result};
use std::collections::HashMap;

/// Positive roots in ρ-order, with positions 0-based (`ρ_{i+1}` is `roots()[i]`).
#[derive(Clone, Debug)]
pub struct OrderedRoots<F: Scalar> {
    roots: Vec<Vector<F>>,
    reflections: Vec<ElemId>,
    extended: Vec<Vector<F>>,
    position: HashMap<ElemId, usize>,
    tau: Vec<usize>,
}

impl<F: Scalar> OrderedRoots<F> {
    /// Number of positive roots `nh/2`.
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn roots(&self) -> &[Vector<F>] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &Vector<F> {
        &self.roots[i]
    }

    /// `r(ρ_{i+1})`.
    pub fn reflection(&self, i: usize) -> ElemId {
        self.reflections[i]
    }

    pub fn reflections(&self) -> &[ElemId] {
        &self.reflections
    }

    /// `ρ_{i+1}` for `0 <= i < nh`, continuing the cyclic definition past `nh/2`.
    pub fn extended(&self, i: usize) -> &Vector<F> {
        &self.extended[i]
    }

    pub fn extended_len(&self) -> usize {
        self.extended.len()
    }

    /// Position of a reflection in the ρ-order.
    pub fn position_of(&self, t: ElemId) -> Option<usize> {
        self.position.get(&t).copied()
    }

    /// Positions of `τ_1 … τ_n`, i.e. the last `n` positions.
    pub fn tau_positions(&self) -> &[usize] {
        &self.tau
    }

    pub fn tau(&self) -> Vec<&Vector<F>> {
        self.tau.iter().map(|&i| &self.roots[i]).collect()
    }
}

/// Computes `ρ_1, …, ρ_{nh}` and checks that the first half is exactly the positive system.
pub fn ordered_roots<F: Scalar>(system: &CoxeterSystem<F>) -> Result<OrderedRoots<F>> {
    let n = system.rank();
    let h = system.coxeter_number();
    let half = n * h / 2;
    let group = system.group();
    let simple = system.simple_reflections();

    let mut prefix = group.identity();
    let mut extended = Vec::with_capacity(n * h);
    for i in 0..n * h {
        let k = i % n;
        extended.push(group.matrix(prefix).apply(&Vector::unit(n, k)));
        prefix = group.mul(prefix, simple[k]);
    }

    let mut position = HashMap::new();
    let mut reflections = Vec::with_capacity(half);
    for (i, root) in extended[..half].iter().enumerate() {
        if !system.is_positive(root) {
            return Err(Error::RootOrder(format!("ρ_{} is not positive", i + 1)));
        }
        let t = system
            .reflection_of(root)
            .ok_or_else(|| Error::RootOrder(format!("ρ_{} is not a root", i + 1)))?;
        if system.reflection_position(t).is_none() {
            return Err(Error::RootOrder(format!("ρ_{} is not a root", i + 1)));
        }
        if position.insert(t, i).is_some() {
            return Err(Error::RootOrder(format!("ρ_{} repeats an earlier root", i + 1)));
        }
        reflections.push(t);
    }
    if position.len() != system.reflections().len() {
        return Err(Error::RootOrder("ρ-order misses positive roots".into()));
    }
    let roots = extended[..half].to_vec();
    let tau: Vec<usize> = (half - n..half).collect();
    let ordered = OrderedRoots {
        roots,
        reflections,
        extended,
        position,
        tau,
    };
    check_tau(system, &ordered)?;
    Ok(ordered)
}

/// Verifies that `r(τ_n)⋯r(τ_1) = c` and that the `τ` are linearly independent.
fn check_tau<F: Scalar>(system: &CoxeterSystem<F>, ordered: &OrderedRoots<F>) -> Result<()> {
    let group = system.group();
    let product = group.product(ordered.tau.iter().rev().map(|&i| ordered.reflections[i]));
    if product != system.coxeter_element() {
        return Err(Error::RootOrder("r(τ_n)⋯r(τ_1) ≠ c".into()));
    }
    let cols: Vec<Vector<F>> = ordered.tau().into_iter().cloned().collect();
    if Matrix::from_columns(&cols)?.rank() != system.rank() {
        return Err(Error::RootOrder("τ_1, …, τ_n are linearly dependent".into()));
    }
    Ok(())
}
