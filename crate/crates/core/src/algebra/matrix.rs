use super::Scalar;
use crate::error::{Error, Result};
use std::ops::{Index, IndexMut};

/// A column vector.
#[derive(Clone, Debug, PartialEq)]
pub struct Vector<F>(pub Vec<F>);

impl<F: Scalar> Vector<F> {
    pub fn zeros(n: usize) -> Self {
        Vector(vec![F::zero(); n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = F::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, F> {
        self.0.iter()
    }

    /// Standard coordinate dot product.
    pub fn dot(&self, other: &Self) -> F {
        self.0
            .iter()
            .zip(&other.0)
            .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }

    pub fn scale(&self, k: &F) -> Self {
        Vector(self.0.iter().map(|a| a.clone() * k.clone()).collect())
    }

    pub fn neg(&self) -> Self {
        Vector(self.0.iter().map(|a| -a.clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|a| a.is_zero_exact())
    }

    pub fn key(&self) -> Vec<F::Key> {
        self.0.iter().map(Scalar::key).collect()
    }

    /// Scales so that the first nonzero coordinate equals 1.
    ///
    /// This is a canonical representative of the line through `self`.
    pub fn normalize_line(&self) -> Option<Self> {
        let first = self.0.iter().find(|a| !a.is_zero_exact())?;
        let inv = F::one() / first.clone();
        Some(self.scale(&inv))
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(Scalar::approx).collect()
    }
}

impl<F> Index<usize> for Vector<F> {
    type Output = F;
    fn index(&self, i: usize) -> &F {
        &self.0[i]
    }
}

/// A dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    pub reduced: Matrix<F>,
    pub pivots: Vec<usize>,
    /// Product of the pivots, with the sign of the row permutation applied.
    pub det_factor: F,
}

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vector<F>]) -> Result<Self> {
        let c = cols.len();
        let r = cols.first().map_or(0, Vector::len);
        if cols.iter().any(|v| v.len() != r) {
            return Err(Error::Dimension("columns of unequal length".into()));
        }
        let mut m = Self::zeros(r, c);
        for (j, v) in cols.iter().enumerate() {
            for i in 0..r {
                m[(i, j)] = v[i].clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> Vector<F> {
        Vector(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> Vector<F> {
        Vector((0..self.rows).map(|i| self[(i, j)].clone()).collect())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product dimensions");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero_exact() && F::EXACT {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &Vector<F>) -> Vector<F> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimensions");
        Vector(
            (0..self.rows)
                .map(|i| {
                    (0..self.cols).fold(F::zero(), |acc, j| {
                        acc + self[(i, j)].clone() * v[j].clone()
                    })
                })
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn scale(&self, k: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * k.clone()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero_exact())
    }

    /// Entrywise canonical key, row-major.
    pub fn key(&self) -> Vec<F::Key> {
        self.data.iter().map(Scalar::key).collect()
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    /// Gauss-Jordan elimination to reduced row echelon form.
    pub fn echelon(&self) -> Echelon<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut det = F::one();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = choose_pivot(&m, row, col) else {
                continue;
            };
            if p != row {
                m.swap_rows(p, row);
                det = -det;
            }
            let pivot = m[(row, col)].clone();
            det = det * pivot.clone();
            let inv = F::one() / pivot;
            for j in col..m.cols {
                m[(row, j)] = m[(row, j)].clone() * inv.clone();
            }
            for i in 0..m.rows {
                if i == row {
                    continue;
                }
                let factor = m[(i, col)].clone();
                if factor.is_zero_exact() {
                    continue;
                }
                for j in col..m.cols {
                    let delta = factor.clone() * m[(row, j)].clone();
                    m[(i, j)] = m[(i, j)].clone() - delta;
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon {
            reduced: m,
            pivots,
            det_factor: det,
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    pub fn determinant(&self) -> Result<F> {
        if !self.is_square() {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        let e = self.echelon();
        if e.pivots.len() < self.rows {
            Ok(F::zero())
        } else {
            Ok(e.det_factor)
        }
    }

    /// Basis of the right null space `{x : Mx = 0}`.
    pub fn kernel(&self) -> Vec<Vector<F>> {
        let e = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !e.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = Vector::zeros(self.cols);
                v.0[f] = F::one();
                for (r, &p) in e.pivots.iter().enumerate() {
                    v.0[p] = -e.reduced[(r, f)].clone();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = F::one();
        }
        let e = aug.echelon();
        if e.pivots.len() < n || e.pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = e.reduced[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    /// Solves `Mx = b` for square nonsingular `M`.
    pub fn solve(&self, b: &Vector<F>) -> Result<Vector<F>> {
        Ok(self.inverse()?.apply(b))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)].approx()).collect())
            .collect()
    }
}

fn choose_pivot<F: Scalar>(m: &Matrix<F>, row: usize, col: usize) -> Option<usize> {
    if F::EXACT {
        (row..m.rows).find(|&i| !m[(i, col)].is_zero_exact())
    } else {
        (row..m.rows)
            .filter(|&i| !m[(i, col)].is_zero_exact())
            .max_by(|&a, &b| {
                m[(a, col)]
                    .approx()
                    .abs()
                    .total_cmp(&m[(b, col)].approx().abs())
            })
    }
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ratio, FieldElement, NumberField};
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn q(n: i64) -> BigRational {
        ratio(n, 1)
    }

    fn qm(rows: &[&[i64]]) -> Matrix<BigRational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn rank_of_identity() {
        assert_eq!(Matrix::<BigRational>::identity(3).rank(), 3);
    }

    #[test]
    fn kernel_of_two_a3_normals() {
        // root-basis coordinates of α1 and α2 paired against the A3 Gram matrix
        let gram = Matrix::from_rows(vec![
            vec![q(1), ratio(-1, 2), q(0)],
            vec![ratio(-1, 2), q(1), ratio(-1, 2)],
            vec![q(0), ratio(-1, 2), q(1)],
        ])
        .unwrap();
        let normals = Matrix::from_rows(vec![gram.row(0).0, gram.row(1).0]).unwrap();
        let ker = normals.kernel();
        assert_eq!(ker.len(), 1);
        assert!(!ker[0].is_zero());
        assert!(normals.apply(&ker[0]).is_zero());
    }

    #[test]
    fn singular_inverse_fails() {
        let m = qm(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.inverse().unwrap_err(), Error::Singular);
        assert_eq!(m.determinant().unwrap(), q(0));
    }

    #[test]
    fn a2_coxeter_element_det() {
        // α1 = (1, 0), α2 = (-1/2, √3/2) in Q(√3); c = r1 r2
        let k = NumberField::two_cos_pi_over(6).unwrap();
        let s3 = k.generator(); // 2cos(π/6) = √3
        let half = FieldElement::rational(ratio(1, 2));
        let a1 = Vector(vec![FieldElement::integer(1), FieldElement::integer(0)]);
        let a2 = Vector(vec![-half.clone(), &half * &s3]);
        let refl = |a: &Vector<FieldElement>| {
            let mut m = Matrix::<FieldElement>::identity(2);
            for i in 0..2 {
                for j in 0..2 {
                    let d = &(&a[i] * &a[j]) * &FieldElement::integer(2);
                    m[(i, j)] = &m[(i, j)] - &d;
                }
            }
            m
        };
        let c = refl(&a1).mul(&refl(&a2));
        let i_minus_c = Matrix::identity(2).sub(&c);
        assert_eq!(i_minus_c.determinant().unwrap(), FieldElement::integer(3));
        assert!(i_minus_c.inverse().is_ok());
    }

    #[test]
    fn float_echelon_matches_exact_rank() {
        let m = vec![vec![1.0, 2.0, 3.0], vec![2.0, 4.0, 6.0], vec![1.0, 0.0, 1.0]];
        assert_eq!(Matrix::from_rows(m).unwrap().rank(), 2);
    }

    fn nonsingular(n: usize) -> impl Strategy<Value = Matrix<BigRational>> {
        proptest::collection::vec(-4i64..=4, n * n).prop_filter_map("singular", move |xs| {
            let rows = xs.chunks(n).map(|r| r.iter().map(|&x| q(x)).collect()).collect();
            let m = Matrix::from_rows(rows).unwrap();
            (m.rank() == n).then_some(m)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn inverse_is_exact(m in (1usize..=8).prop_flat_map(nonsingular)) {
            let n = m.rows();
            let inv = m.inverse().unwrap();
            prop_assert_eq!(inv.mul(&m), Matrix::identity(n));
        }

        #[test]
        fn rank_nullity(xs in proptest::collection::vec(-2i64..=2, 12)) {
            let rows = xs.chunks(4).map(|r| r.iter().map(|&x| q(x)).collect()).collect();
            let m = Matrix::from_rows(rows).unwrap();
            let ker = m.kernel();
            prop_assert_eq!(m.rank() + ker.len(), 4);
            for v in &ker {
                prop_assert!(m.apply(v).is_zero());
            }
        }
    }
}
