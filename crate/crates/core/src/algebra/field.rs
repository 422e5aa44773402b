use super::poly::{self, QPoly, ZPoly};
use super::Scalar;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

/// Bisection steps applied once when a field is created, so that most sign
/// queries are decided without further refinement.
const PRECOMPUTED_REFINEMENT: u32 = 64;

/// A real number field `Q(θ)` with a designated real embedding.
///
/// The embedding is fixed by an isolating interval containing exactly one
/// root of the minimal polynomial.
#[derive(Debug)]
pub struct NumberField {
    minimal_polynomial: ZPoly,
    interval: (BigRational, BigRational),
    monic: QPoly,
    refined: (BigRational, BigRational),
    sign_at_lo: i8,
    theta: f64,
}

impl NumberField {
    /// Creates `Q(θ)` where θ is the unique root of `minimal_polynomial` in `(lo, hi)`.
    ///
    /// Degree-1 polynomials are rejected: the rationals are represented by
    /// field-free [`FieldElement`]s.
    pub fn new(
        minimal_polynomial: ZPoly,
        lo: BigRational,
        hi: BigRational,
    ) -> Result<Arc<NumberField>> {
        let p = poly::trim(minimal_polynomial);
        let deg = poly::degree(&p)
            .ok_or_else(|| Error::InvalidPolynomial("zero polynomial".into()))?;
        if deg < 2 {
            return Err(Error::InvalidPolynomial(format!(
                "degree {deg} generator; use rational scalars for Q"
            )));
        }
        if lo >= hi {
            return Err(Error::InvalidPolynomial("empty isolating interval".into()));
        }
        match poly::is_irreducible(&p) {
            Some(true) => {}
            Some(false) => return Err(Error::ReduciblePolynomial),
            None => {
                return Err(Error::InvalidPolynomial(
                    "irreducibility test exceeded its search limit".into(),
                ))
            }
        }
        let q = poly::to_rational(&p);
        let at_lo = poly::eval(&q, &lo);
        let at_hi = poly::eval(&q, &hi);
        // irreducible of degree >= 2 has no rational roots, so endpoints are never roots
        debug_assert!(!at_lo.is_zero() && !at_hi.is_zero());
        let count = poly::sturm_count(&q, &lo, &hi);
        if count != 1 {
            return Err(Error::RootCount(count));
        }
        let lead = q[deg].clone();
        let monic = poly::scale(&q, &lead.recip());
        let sign_at_lo = if at_lo.is_positive() { 1 } else { -1 };
        let mut refined = (lo.clone(), hi.clone());
        for _ in 0..PRECOMPUTED_REFINEMENT {
            refined = bisect(&monic, sign_at_lo * lead_sign(&lead), refined);
        }
        let mid = (&refined.0 + &refined.1) / BigRational::from_integer(2.into());
        Ok(Arc::new(NumberField {
            minimal_polynomial: p,
            interval: (lo, hi),
            sign_at_lo: sign_at_lo * lead_sign(&lead),
            monic,
            theta: ToPrimitive::to_f64(&mid).unwrap_or(f64::NAN),
            refined,
        }))
    }

    /// `Q(2cos(π/m))` for `m >= 4`.
    pub fn two_cos_pi_over(m: u64) -> Result<Arc<NumberField>> {
        if m < 4 {
            return Err(Error::InvalidPolynomial(format!(
                "2cos(π/{m}) is rational"
            )));
        }
        let p = poly::two_cos_minpoly(2 * m);
        let theta = 2.0 * (std::f64::consts::PI / m as f64).cos();
        // roots of the minimal polynomial are 2cos(2πk/2m), gcd(k, 2m) = 1, far apart
        let delta = 0.25 * (1.0 - (std::f64::consts::PI / m as f64).cos()).min(0.1) / m as f64;
        let lo = BigRational::from_float(theta - delta).expect("finite");
        let hi = BigRational::from_float(theta + delta).expect("finite");
        NumberField::new(p, lo, hi)
    }

    pub fn degree(&self) -> usize {
        self.minimal_polynomial.len() - 1
    }

    pub fn minimal_polynomial(&self) -> &[BigInt] {
        &self.minimal_polynomial
    }

    pub fn isolating_interval(&self) -> (&BigRational, &BigRational) {
        (&self.interval.0, &self.interval.1)
    }

    /// The generator θ as an element of the field.
    pub fn generator(self: &Arc<Self>) -> FieldElement {
        FieldElement::from_coords(
            vec![BigRational::zero(), BigRational::one()],
            Some(self.clone()),
        )
    }

    /// Floating approximation of θ.
    pub fn theta_f64(&self) -> f64 {
        self.theta
    }

    fn reduce(&self, p: QPoly) -> QPoly {
        if p.len() <= self.degree() {
            return p;
        }
        poly::divrem(&p, &self.monic).1
    }

    fn inverse(&self, p: &[BigRational]) -> QPoly {
        let (g, s) = poly::gcd_ext(p, &self.monic);
        debug_assert_eq!(g.len(), 1, "minimal polynomial must be irreducible");
        self.reduce(s)
    }

    /// Exact sign of the nonzero polynomial `p` evaluated at θ.
    fn sign_of(&self, p: &[BigRational]) -> i8 {
        let mut interval = self.refined.clone();
        loop {
            let (a, b) = poly::eval_interval(p, &interval.0, &interval.1);
            if a.is_positive() {
                return 1;
            }
            if b.is_negative() {
                return -1;
            }
            interval = bisect(&self.monic, self.sign_at_lo, interval);
        }
    }
}

fn lead_sign(lead: &BigRational) -> i8 {
    if lead.is_positive() {
        1
    } else {
        -1
    }
}

/// One bisection step on an interval whose lower end has `monic(lo)` of sign `sign_at_lo`.
fn bisect(
    monic: &[BigRational],
    sign_at_lo: i8,
    (lo, hi): (BigRational, BigRational),
) -> (BigRational, BigRational) {
    let mid = (&lo + &hi) / BigRational::from_integer(2.into());
    let v = poly::eval(monic, &mid);
    let s = if v.is_positive() { 1 } else { -1 };
    if s == sign_at_lo {
        (mid, hi)
    } else {
        (lo, mid)
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        // distinct roots are separated by far more than the refined width
        self.minimal_polynomial == other.minimal_polynomial
            && self.refined.0 < other.refined.1
            && other.refined.0 < self.refined.1
    }
}

/// An element of a real number field, stored in the power basis of θ.
///
/// Rationals carry no field handle and mix freely with elements of any field.
#[derive(Clone)]
pub struct FieldElement {
    coords: QPoly,
    field: Option<Arc<NumberField>>,
}

impl FieldElement {
    pub fn from_coords(coords: QPoly, field: Option<Arc<NumberField>>) -> Self {
        let coords = poly::trim(coords);
        let coords = match &field {
            Some(f) => f.reduce(coords),
            None => {
                assert!(coords.len() <= 1, "irrational coordinates need a field");
                coords
            }
        };
        FieldElement { coords, field }
    }

    pub fn rational(r: BigRational) -> Self {
        FieldElement::from_coords(vec![r], None)
    }

    pub fn integer(n: i64) -> Self {
        FieldElement::rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Power-basis coordinates, trailing zeros removed.
    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    /// Power-basis coordinates padded to length `degree`.
    pub fn padded_coords(&self, degree: usize) -> Vec<BigRational> {
        let mut c = self.coords.clone();
        c.resize(degree.max(c.len()), BigRational::zero());
        c
    }

    pub fn field(&self) -> Option<&Arc<NumberField>> {
        self.field.as_ref()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self.coords.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coords[0].clone()),
            _ => None,
        }
    }

    pub fn inv(&self) -> FieldElement {
        assert!(!self.coords.is_empty(), "inverse of zero");
        match (&self.field, self.coords.len()) {
            (_, 1) => FieldElement::from_coords(vec![self.coords[0].recip()], self.field.clone()),
            (Some(f), _) => FieldElement::from_coords(f.inverse(&self.coords), Some(f.clone())),
            (None, _) => unreachable!("irrational element without a field"),
        }
    }

    fn merge(&self, other: &FieldElement) -> Option<Arc<NumberField>> {
        match (&self.field, &other.field) {
            (Some(a), Some(b)) => {
                debug_assert!(Arc::ptr_eq(a, b) || **a == **b, "mixed number fields");
                Some(a.clone())
            }
            (Some(a), None) => Some(a.clone()),
            (None, b) => b.clone(),
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})θ")?,
                _ => write!(f, "({c})θ^{i}")?,
            }
        }
        Ok(())
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl Zero for FieldElement {
    fn zero() -> Self {
        FieldElement {
            coords: Vec::new(),
            field: None,
        }
    }

    fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }
}

impl One for FieldElement {
    fn one() -> Self {
        FieldElement::integer(1)
    }
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        FieldElement {
            coords: poly::add(&self.coords, &rhs.coords),
            field: self.merge(rhs),
        }
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        FieldElement {
            coords: poly::sub(&self.coords, &rhs.coords),
            field: self.merge(rhs),
        }
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        let field = self.merge(rhs);
        let prod = poly::mul(&self.coords, &rhs.coords);
        let coords = match &field {
            Some(f) => f.reduce(prod),
            None => prod,
        };
        FieldElement { coords, field }
    }
}

impl<'a> Div<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: &FieldElement) -> FieldElement {
        self * &rhs.inv()
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            coords: self.coords.iter().map(|c| -c).collect(),
            field: self.field.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl Scalar for FieldElement {
    type Key = Vec<BigRational>;
    const EXACT: bool = true;

    fn sign(&self) -> i8 {
        match self.coords.len() {
            0 => 0,
            1 => {
                if self.coords[0].is_positive() {
                    1
                } else {
                    -1
                }
            }
            _ => self
                .field
                .as_ref()
                .expect("irrational element without a field")
                .sign_of(&self.coords),
        }
    }

    fn key(&self) -> Vec<BigRational> {
        self.coords.clone()
    }

    fn is_zero_exact(&self) -> bool {
        self.coords.is_empty()
    }

    fn approx(&self) -> f64 {
        match &self.field {
            Some(f) => poly::eval_f64(&self.coords, f.theta),
            None => self
                .coords
                .first()
                .map_or(0.0, |c| ToPrimitive::to_f64(c).unwrap_or(f64::NAN)),
        }
    }

    fn from_ratio(r: &BigRational) -> Self {
        FieldElement::rational(r.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    fn sqrt5() -> Arc<NumberField> {
        NumberField::new(
            vec![BigInt::from(-5), BigInt::zero(), BigInt::one()],
            ratio(2, 1),
            ratio(3, 1),
        )
        .unwrap()
    }

    #[test]
    fn creates_sqrt5() {
        let k = sqrt5();
        assert_eq!(k.degree(), 2);
        assert!((k.theta_f64() - 5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_fields() {
        let x = vec![BigInt::zero(), BigInt::one()];
        assert!(matches!(
            NumberField::new(x, ratio(-1, 1), ratio(1, 1)),
            Err(Error::InvalidPolynomial(_))
        ));
        let x_minus_one = vec![BigInt::from(-1), BigInt::one()];
        assert!(NumberField::new(x_minus_one, ratio(0, 1), ratio(2, 1)).is_err());
        let reducible = vec![BigInt::from(-4), BigInt::zero(), BigInt::one()];
        assert_eq!(
            NumberField::new(reducible, ratio(1, 1), ratio(3, 1)).unwrap_err(),
            Error::ReduciblePolynomial
        );
        let p = vec![BigInt::from(-5), BigInt::zero(), BigInt::one()];
        assert_eq!(
            NumberField::new(p.clone(), ratio(-3, 1), ratio(3, 1)).unwrap_err(),
            Error::RootCount(2)
        );
        assert_eq!(
            NumberField::new(p, ratio(0, 1), ratio(1, 1)).unwrap_err(),
            Error::RootCount(0)
        );
    }

    #[test]
    fn signs_in_sqrt5() {
        let k = sqrt5();
        let t = k.generator();
        assert_eq!(FieldElement::zero().sign(), 0);
        assert_eq!((&t - &FieldElement::integer(2)).sign(), 1);
        assert_eq!((&t - &FieldElement::integer(3)).sign(), -1);
        let t2 = &t * &t;
        assert!((&t2 - &FieldElement::integer(5)).is_zero());
        assert_eq!((&t2 - &FieldElement::integer(5)).sign(), 0);
        // 9/4 - θ is negative but close: √5 ≈ 2.2360
        let close = &FieldElement::rational(ratio(2236, 1000)) - &t;
        assert_eq!(close.sign(), -1);
    }

    #[test]
    fn rational_field_arithmetic() {
        let x = FieldElement::rational(ratio(3, 2));
        let y = FieldElement::rational(ratio(2, 3));
        assert_eq!(&x * &y, FieldElement::one());
        assert!(x.field().is_none());
    }

    #[test]
    fn inverse_in_field() {
        let k = sqrt5();
        let t = k.generator();
        let x = &(&t * &t) + &(&t + &FieldElement::integer(-7));
        let prod = &x * &x.inv();
        assert_eq!(prod, FieldElement::one());
    }

    #[test]
    fn sign_close_to_zero_refines() {
        // golden ratio field
        let k = NumberField::two_cos_pi_over(5).unwrap();
        let phi = k.generator();
        let mut p = FieldElement::one();
        for _ in 0..30 {
            p = &p * &phi;
        }
        // φ^30 = L(30) - φ^-30 with L(30) = 1860498, so the difference is about -5.4e-7
        let d = &p - &FieldElement::integer(1_860_498);
        assert_eq!(d.sign(), -1);
        assert!(d.approx() < 0.0 && d.approx() > -1e-5);
    }
}
