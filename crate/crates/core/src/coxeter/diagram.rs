use crate::algebra::poly::chebyshev_2cos;
use crate::algebra::{FieldElement, Matrix, NumberField, Scalar};
use crate::error::{Error, Result};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::VecDeque;
use std::fmt;

/// A Coxeter matrix `m_ij` with an optional type label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterDiagram {
    label: String,
    m: Vec<Vec<u32>>,
}

impl CoxeterDiagram {
    /// Builds the standard diagram of an irreducible finite type.
    ///
    /// `kind` is one of `A B C D E F H`, or `I<m>` (for example `I5`) for the
    /// dihedral group of order `2m`; type C has the same unit-normal
    /// realization as type B.
    pub fn from_type(kind: &str, rank: usize) -> Result<Self> {
        let kind = kind.trim();
        let bad = || Error::InvalidDiagram(format!("no finite type {kind}{rank}"));
        if rank == 0 {
            return Err(bad());
        }
        let mut m = vec![vec![2u32; rank]; rank];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        let mut edge = |i: usize, j: usize, v: u32| {
            m[i][j] = v;
            m[j][i] = v;
        };
        let upper = kind.to_ascii_uppercase();
        match upper.as_str() {
            "A" => (1..rank).for_each(|i| edge(i - 1, i, 3)),
            // same group; B puts the 4 on the last edge, C on the first
            "B" | "C" => {
                if rank < 2 {
                    return Err(bad());
                }
                (1..rank).for_each(|i| edge(i - 1, i, 3));
                if upper == "B" {
                    edge(rank - 2, rank - 1, 4);
                } else {
                    edge(0, 1, 4);
                }
            }
            "D" => {
                if rank < 4 {
                    return Err(bad());
                }
                (1..rank - 1).for_each(|i| edge(i - 1, i, 3));
                edge(rank - 3, rank - 1, 3);
            }
            "E" => {
                if !(6..=8).contains(&rank) {
                    return Err(bad());
                }
                // Bourbaki numbering: 1-3-4-5-...-n with 2 attached to 4
                edge(0, 2, 3);
                edge(1, 3, 3);
                (3..rank).for_each(|i| edge(i - 1, i, 3));
            }
            "F" => {
                if rank != 4 {
                    return Err(bad());
                }
                edge(0, 1, 3);
                edge(1, 2, 4);
                edge(2, 3, 3);
            }
            "H" => {
                if !(2..=4).contains(&rank) {
                    return Err(bad());
                }
                edge(0, 1, 5);
                (2..rank).for_each(|i| edge(i - 1, i, 3));
            }
            _ => {
                let order = upper
                    .strip_prefix("I2(")
                    .and_then(|s| s.strip_suffix(')'))
                    .or_else(|| upper.strip_prefix('I'))
                    .and_then(|s| s.parse::<u32>().ok())
                    .ok_or_else(bad)?;
                if rank != 2 || order < 2 {
                    return Err(bad());
                }
                edge(0, 1, order);
            }
        }
        let label = match upper.as_str() {
            "A" | "B" | "C" | "D" | "E" | "F" | "H" => format!("{upper}{rank}"),
            _ => format!("I2({})", m[0][1]),
        };
        Ok(CoxeterDiagram { label, m })
    }

    /// Builds a diagram from an explicit Coxeter matrix.
    pub fn from_matrix(m: Vec<Vec<u32>>) -> Result<Self> {
        let n = m.len();
        if n == 0 {
            return Err(Error::InvalidDiagram("empty Coxeter matrix".into()));
        }
        for i in 0..n {
            if m[i].len() != n {
                return Err(Error::InvalidDiagram("Coxeter matrix is not square".into()));
            }
            if m[i][i] != 1 {
                return Err(Error::InvalidDiagram(format!("m[{i}][{i}] must be 1")));
            }
            for j in 0..n {
                if m[i][j] != m[j][i] {
                    return Err(Error::InvalidDiagram("Coxeter matrix is not symmetric".into()));
                }
                if i != j && m[i][j] < 2 {
                    return Err(Error::InvalidDiagram(format!("m[{i}][{j}] must be >= 2")));
                }
            }
        }
        Ok(CoxeterDiagram {
            label: format!("custom{n}"),
            m,
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.m.len()
    }

    pub fn m(&self, i: usize, j: usize) -> u32 {
        self.m[i][j]
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.m
    }

    /// Orders the nodes so that each of the two color classes of the Coxeter
    /// graph is contiguous, first class first.
    ///
    /// Each connected component is colored from its lowest-numbered node,
    /// which gets color 0 (or 1 when `swap` is set); color 0 forms the first
    /// class. Input order is kept within a class. Returns the permutation
    /// (new position to original node) and the size `s` of the first class.
    pub fn bipartite_order(&self, swap: bool) -> Result<(Vec<usize>, usize)> {
        let n = self.rank();
        let mut color: Vec<Option<u8>> = vec![None; n];
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(u8::from(swap));
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].expect("colored on push");
                for v in 0..n {
                    if v == u || self.m[u][v] < 3 {
                        continue;
                    }
                    match color[v] {
                        None => {
                            color[v] = Some(1 - cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return Err(Error::NotBipartite),
                        Some(_) => {}
                    }
                }
            }
        }
        let mut perm: Vec<usize> = (0..n).filter(|&i| color[i] == Some(0)).collect();
        let s = perm.len();
        perm.extend((0..n).filter(|&i| color[i] == Some(1)));
        Ok((perm, s))
    }

    /// The diagram with node `k` of the result being node `perm[k]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let m = perm
            .iter()
            .map(|&i| perm.iter().map(|&j| self.m[i][j]).collect())
            .collect();
        CoxeterDiagram {
            label: self.label.clone(),
            m,
        }
    }

    /// Least common multiple of the off-diagonal entries other than 2 and 3;
    /// 1 when every entry is 2 or 3.
    pub fn field_conductor(&self) -> u64 {
        let n = self.rank();
        let mut l = 1u64;
        for i in 0..n {
            for j in i + 1..n {
                let m = u64::from(self.m[i][j]);
                if m > 3 {
                    l = l.lcm(&m);
                }
            }
        }
        l
    }
}

impl fmt::Display for CoxeterDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)
    }
}

/// Scalars in which the Gram matrix `G_ij = -cos(π/m_ij)` of a diagram can be written.
pub trait CoxeterScalar: Scalar {
    fn gram_matrix(diagram: &CoxeterDiagram) -> Result<Matrix<Self>>;
}

fn gram_from<F: Scalar>(diagram: &CoxeterDiagram, entry: impl Fn(u32) -> Result<F>) -> Result<Matrix<F>> {
    let n = diagram.rank();
    let mut g = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            g[(i, j)] = if i == j {
                F::one()
            } else {
                entry(diagram.m(i, j))?
            };
        }
    }
    Ok(g)
}

impl CoxeterScalar for FieldElement {
    /// Entries live in `Q(2cos(π/L))` with `L` the lcm of the entries above 3.
    fn gram_matrix(diagram: &CoxeterDiagram) -> Result<Matrix<Self>> {
        let l = diagram.field_conductor();
        let field = if l > 1 {
            Some(NumberField::two_cos_pi_over(l)?)
        } else {
            None
        };
        gram_from(diagram, |m| match m {
            2 => Ok(FieldElement::zero()),
            3 => Ok(FieldElement::rational(BigRational::new((-1).into(), 2.into()))),
            _ => {
                let field = field.as_ref().expect("conductor covers every entry above 3");
                // 2cos(π/m) = D_{L/m}(2cos(π/L))
                let d = chebyshev_2cos((l / u64::from(m)) as usize);
                let coords = d
                    .iter()
                    .map(|c| BigRational::new(-c.clone(), 2.into()))
                    .collect();
                Ok(FieldElement::from_coords(coords, Some(field.clone())))
            }
        })
    }
}

impl CoxeterScalar for BigRational {
    fn gram_matrix(diagram: &CoxeterDiagram) -> Result<Matrix<Self>> {
        gram_from(diagram, |m| match m {
            2 => Ok(BigRational::zero()),
            3 => Ok(BigRational::new((-1).into(), 2.into())),
            _ => Err(Error::UnsupportedScalar(format!(
                "cos(π/{m}) is irrational; use FieldElement"
            ))),
        })
    }
}

impl CoxeterScalar for f64 {
    fn gram_matrix(diagram: &CoxeterDiagram) -> Result<Matrix<Self>> {
        gram_from(diagram, |m| Ok(-(std::f64::consts::PI / f64::from(m)).cos()))
    }
}

/// True iff every leading principal minor is positive.
pub fn is_positive_definite<F: Scalar>(g: &Matrix<F>) -> bool {
    let n = g.rows();
    (1..=n).all(|k| {
        let mut minor = Matrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                minor[(i, j)] = g[(i, j)].clone();
            }
        }
        minor.determinant().is_ok_and(|d| d.sign() > 0)
    })
}

pub(crate) fn one_vector<F: Scalar>(n: usize) -> crate::algebra::Vector<F> {
    crate::algebra::Vector(vec![F::one(); n])
}
