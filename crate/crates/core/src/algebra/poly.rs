//! Dense univariate polynomials over Q and Z, coefficients stored low degree first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type QPoly = Vec<BigRational>;
pub type ZPoly = Vec<BigInt>;

pub fn trim<T: Zero>(mut p: Vec<T>) -> Vec<T> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

/// Degree of a trimmed polynomial; the zero polynomial has no degree.
pub fn degree<T>(p: &[T]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub fn to_rational(p: &[BigInt]) -> QPoly {
    trim(p.iter().map(|c| BigRational::from_integer(c.clone())).collect())
}

pub fn add(a: &[BigRational], b: &[BigRational]) -> QPoly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            match b.get(i) {
                Some(y) => x + y,
                None => x,
            }
        })
        .collect();
    trim(out)
}

pub fn sub(a: &[BigRational], b: &[BigRational]) -> QPoly {
    let neg: QPoly = b.iter().map(|c| -c).collect();
    add(a, &neg)
}

pub fn mul(a: &[BigRational], b: &[BigRational]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub fn scale(a: &[BigRational], k: &BigRational) -> QPoly {
    trim(a.iter().map(|c| c * k).collect())
}

/// Quotient and remainder of `a / b`. Panics if `b` is zero.
pub fn divrem(a: &[BigRational], b: &[BigRational]) -> (QPoly, QPoly) {
    let b = trim(b.to_vec());
    let db = degree(&b).expect("division by the zero polynomial");
    let lead = b[db].clone();
    let mut rem = trim(a.to_vec());
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let dr = rem.len() - 1;
        let k = &rem[dr] / &lead;
        let shift = dr - db;
        for (j, bj) in b.iter().enumerate() {
            rem[shift + j] -= &k * bj;
        }
        quot[shift] = k;
        rem = trim(rem);
    }
    (trim(quot), rem)
}

/// Extended Euclid: returns `(g, s)` with `s·a ≡ g (mod m)`, `g` monic.
pub fn gcd_ext(a: &[BigRational], m: &[BigRational]) -> (QPoly, QPoly) {
    let (mut r0, mut r1) = (trim(m.to_vec()), trim(a.to_vec()));
    let (mut s0, mut s1): (QPoly, QPoly) = (Vec::new(), vec![BigRational::one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if let Some(lead) = r0.last().cloned() {
        let inv = lead.recip();
        (scale(&r0, &inv), scale(&s0, &inv))
    } else {
        (r0, s0)
    }
}

pub fn derivative(p: &[BigRational]) -> QPoly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
            .collect(),
    )
}

pub fn eval(p: &[BigRational], x: &BigRational) -> BigRational {
    p.iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + c)
}

pub fn eval_f64(p: &[BigRational], x: f64) -> f64 {
    p.iter()
        .rev()
        .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
}

fn sign_of(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Evaluates `p` over the closed interval `[lo, hi]` with interval arithmetic.
pub fn eval_interval(
    p: &[BigRational],
    lo: &BigRational,
    hi: &BigRational,
) -> (BigRational, BigRational) {
    let mut acc = (BigRational::zero(), BigRational::zero());
    for c in p.iter().rev() {
        let products = [&acc.0 * lo, &acc.0 * hi, &acc.1 * lo, &acc.1 * hi];
        let mut min = products[0].clone();
        let mut max = products[0].clone();
        for v in &products[1..] {
            if *v < min {
                min = v.clone();
            }
            if *v > max {
                max = v.clone();
            }
        }
        acc = (min + c, max + c);
    }
    acc
}

/// Number of distinct real roots of a squarefree `p` in the half-open interval `(lo, hi]`.
pub fn sturm_count(p: &[BigRational], lo: &BigRational, hi: &BigRational) -> usize {
    let mut seq = vec![trim(p.to_vec())];
    let d = derivative(&seq[0]);
    if !d.is_empty() {
        seq.push(d);
        loop {
            let n = seq.len();
            let (_, r) = divrem(&seq[n - 2], &seq[n - 1]);
            if r.is_empty() {
                break;
            }
            seq.push(r.iter().map(|c| -c).collect());
        }
    }
    let variations = |x: &BigRational| {
        let signs: Vec<i8> = seq
            .iter()
            .map(|q| sign_of(&eval(q, x)))
            .filter(|s| *s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    variations(lo).saturating_sub(variations(hi))
}

pub fn eval_int(p: &[BigInt], x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            let q = &n / &d;
            if q != d {
                out.push(q);
            }
        }
        d += 1;
    }
    out
}

const KRONECKER_LIMIT: usize = 2_000_000;

/// Irreducibility over Q by Kronecker's factor search.
///
/// Returns `None` when the search space exceeds an internal limit.
pub fn is_irreducible(p: &[BigInt]) -> Option<bool> {
    let p = trim(p.to_vec());
    let deg = degree(&p)?;
    if deg == 0 {
        return Some(false);
    }
    if deg == 1 {
        return Some(true);
    }
    let c = content(&p);
    let p: ZPoly = p.iter().map(|x| x / &c).collect();
    let pq = to_rational(&p);

    // evaluation points 0, 1, -1, 2, -2, ... ; an integer root means a linear factor
    let mut points = Vec::new();
    let mut k: i64 = 0;
    while points.len() <= deg / 2 {
        let x = BigInt::from(k);
        let y = eval_int(&p, &x);
        if y.is_zero() {
            return Some(false);
        }
        points.push((x, y));
        k = if k > 0 { -k } else { -k + 1 };
    }

    for fdeg in 1..=deg / 2 {
        let pts = &points[..=fdeg];
        let choices: Vec<Vec<BigInt>> = pts
            .iter()
            .enumerate()
            .map(|(i, (_, y))| {
                let ds = divisors(y);
                if i == 0 {
                    // a factor and its negative are equivalent; fix the first sign
                    ds
                } else {
                    ds.iter().flat_map(|d| [d.clone(), -d.clone()]).collect()
                }
            })
            .collect();
        let total: usize = choices
            .iter()
            .try_fold(1usize, |acc, c| acc.checked_mul(c.len()))?;
        if total > KRONECKER_LIMIT {
            return None;
        }
        let mut idx = vec![0usize; choices.len()];
        loop {
            let values: Vec<BigRational> = idx
                .iter()
                .zip(&choices)
                .map(|(&i, c)| BigRational::from_integer(c[i].clone()))
                .collect();
            let xs: Vec<BigRational> = pts
                .iter()
                .map(|(x, _)| BigRational::from_integer(x.clone()))
                .collect();
            let g = interpolate(&xs, &values);
            if degree(&g) == Some(fdeg) && g.iter().all(|c| c.is_integer()) {
                let (_, r) = divrem(&pq, &g);
                if r.is_empty() {
                    return Some(false);
                }
            }
            // odometer increment
            let mut pos = 0;
            loop {
                if pos == idx.len() {
                    break;
                }
                idx[pos] += 1;
                if idx[pos] < choices[pos].len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == idx.len() {
                break;
            }
        }
    }
    Some(true)
}

/// Lagrange interpolation through `(xs[i], ys[i])`.
pub fn interpolate(xs: &[BigRational], ys: &[BigRational]) -> QPoly {
    let mut out: QPoly = Vec::new();
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        let mut basis: QPoly = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                basis = mul(&basis, &[-xj.clone(), BigRational::one()]);
                denom *= xi - xj;
            }
        }
        out = add(&out, &scale(&basis, &(yi / denom)));
    }
    out
}

/// The n-th cyclotomic polynomial.
pub fn cyclotomic(n: u64) -> ZPoly {
    assert!(n >= 1);
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut num: QPoly = vec![BigRational::zero(); n as usize + 1];
    num[0] = -BigRational::one();
    num[n as usize] = BigRational::one();
    for d in 1..n {
        if n % d == 0 {
            let (q, r) = divrem(&num, &to_rational(&cyclotomic(d)));
            debug_assert!(r.is_empty());
            num = q;
        }
    }
    num.iter().map(|c| c.to_integer()).collect()
}

/// `D_j(y)` with `D_j(z + 1/z) = z^j + z^{-j}`, so `D_j(2cos t) = 2cos(jt)`.
pub fn chebyshev_2cos(j: usize) -> ZPoly {
    let mut prev: ZPoly = vec![BigInt::from(2)];
    if j == 0 {
        return prev;
    }
    let mut cur: ZPoly = vec![BigInt::zero(), BigInt::one()];
    for _ in 1..j {
        let mut next = vec![BigInt::zero(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = std::mem::replace(&mut cur, trim(next));
    }
    cur
}

/// Minimal polynomial over Q of `2cos(2π/n)`, for `n >= 3`.
pub fn two_cos_minpoly(n: u64) -> ZPoly {
    assert!(n >= 3);
    let phi = cyclotomic(n);
    let k = (phi.len() - 1) / 2;
    let mut out: ZPoly = vec![phi[k].clone()];
    for j in 1..=k {
        let dj = chebyshev_2cos(j);
        if out.len() < dj.len() {
            out.resize(dj.len(), BigInt::zero());
        }
        for (i, c) in dj.iter().enumerate() {
            out[i] += &phi[k + j] * c;
        }
    }
    trim(out)
}
