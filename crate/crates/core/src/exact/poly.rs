//! Dense polynomials: exact rational polynomials (used for cyclotomic
//! minimal polynomials and Bernoulli machinery) and polynomials in the formal
//! variable `T` with cyclotomic coefficients (Euler factors, where `T` stands
//! for the inverse of the residue norm raised to `s`).

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::cyclotomic::Cyclotomic;
use super::numtheory::divisors;
use super::Rational;
use crate::error::{Error, Result};

/// Polynomial over the rationals, dense coefficient vector, `coeffs[i]` is
/// the coefficient of `T^i`. The zero polynomial is the empty vector; any
/// other polynomial has a nonzero leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly {
            coeffs: vec![Rational::one()],
        }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    /// `c * T^n`.
    pub fn monomial(n: usize, c: Rational) -> Self {
        if c.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = c;
        RatPoly { coeffs }
    }

    /// `T^m - 1`.
    pub fn t_pow_minus_one(m: u64) -> Self {
        let mut coeffs = vec![Rational::zero(); m as usize + 1];
        coeffs[0] = -Rational::one();
        coeffs[m as usize] = Rational::one();
        RatPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] += c;
        }
        RatPoly::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        RatPoly::from_coeffs(out)
    }

    pub fn mul(&self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(out)
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = d.coeffs.len() - 1;
        let lead_inv = Rational::one() / d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![
            Rational::zero();
            self.coeffs.len().saturating_sub(d.coeffs.len()) + 1
        ];
        while rem.len() >= d.coeffs.len() && !rem.is_empty() {
            let k = rem.len() - d.coeffs.len();
            let factor = rem.last().unwrap() * &lead_inv;
            if !factor.is_zero() {
                for (i, c) in d.coeffs.iter().enumerate() {
                    rem[k + i] -= &factor * c;
                }
                quot[k] = factor;
            }
            rem.pop();
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
        }
        Ok((RatPoly::from_coeffs(quot), RatPoly::from_coeffs(rem)))
    }

    /// Division that must be exact; the nonzero-remainder case is an error.
    pub fn div_exact(&self, d: &RatPoly) -> Result<RatPoly> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

/// Extended Euclid over Q[T]: returns `(g, u, v)` with `u*a + v*b = g`.
pub(crate) fn poly_xgcd(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly, RatPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (RatPoly::one(), RatPoly::zero());
    let (mut t0, mut t1) = (RatPoly::zero(), RatPoly::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    (r0, s0, t0)
}

static CYCLO_POLYS: OnceLock<Mutex<HashMap<u64, RatPoly>>> = OnceLock::new();

/// The m-th cyclotomic polynomial, the minimal polynomial of a primitive
/// m-th root of unity; degree phi(m). Computed by exact division of
/// `T^m - 1` by the cyclotomic polynomials of the proper divisors of m,
/// memoized process-wide.
pub fn cyclotomic_polynomial(m: u64) -> RatPoly {
    assert!(m >= 1, "cyclotomic polynomial needs m >= 1");
    let cache = CYCLO_POLYS.get_or_init(|| Mutex::new(HashMap::new()));
    for d in divisors(m) {
        if cache.lock().unwrap().contains_key(&d) {
            continue;
        }
        let poly = if d == 1 {
            RatPoly::from_coeffs(vec![-Rational::one(), Rational::one()])
        } else {
            // proper divisors of d already sit in the cache (ascending order)
            let proper: Vec<RatPoly> = {
                let guard = cache.lock().unwrap();
                divisors(d)
                    .into_iter()
                    .filter(|&e| e < d)
                    .map(|e| guard[&e].clone())
                    .collect()
            };
            let mut q = RatPoly::t_pow_minus_one(d);
            for phi_e in &proper {
                q = q
                    .div_exact(phi_e)
                    .expect("cyclotomic polynomials divide T^m - 1");
            }
            q
        };
        cache.lock().unwrap().insert(d, poly);
    }
    cache.lock().unwrap()[&m].clone()
}

/// Polynomial in `T` with cyclotomic coefficients; the Euler-factor type.
/// Trailing zero coefficients are trimmed, so a nonzero polynomial always has
/// a nonzero leading coefficient; the zero polynomial is the empty vector.
#[derive(Clone, Debug)]
pub struct CycloPoly {
    coeffs: Vec<Cyclotomic>,
}

impl CycloPoly {
    pub fn zero() -> Self {
        CycloPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        CycloPoly {
            coeffs: vec![Cyclotomic::one(1)],
        }
    }

    pub fn from_coeffs(mut coeffs: Vec<Cyclotomic>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        CycloPoly { coeffs }
    }

    /// Lift a rational polynomial into cyclotomic coefficients of order 1.
    pub fn from_rat_poly(p: &RatPoly) -> Self {
        CycloPoly::from_coeffs(
            p.coeffs()
                .iter()
                .map(|c| Cyclotomic::from_rational(c.clone()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Cyclotomic] {
        &self.coeffs
    }

    pub fn mul(&self, rhs: &CycloPoly) -> CycloPoly {
        if self.is_zero() || rhs.is_zero() {
            return CycloPoly::zero();
        }
        let mut out = vec![Cyclotomic::zero(1); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        CycloPoly::from_coeffs(out)
    }
}

impl PartialEq for CycloPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs.len() == other.coeffs.len()
            && self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a == b)
    }
}

impl fmt::Display for CycloPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*T")?,
                _ => write!(f, "({c})*T^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for CycloPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CycloPoly", 2)?;
        s.serialize_field("variable", "T")?;
        s.serialize_field("coeffs", &self.coeffs)?;
        s.end()
    }
}
