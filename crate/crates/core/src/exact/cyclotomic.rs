//! Exact arithmetic in cyclotomic fields Q(zeta_m).
//!
//! An element of order m is stored as its coordinate vector over the power
//! basis `{zeta_m^i : i < phi(m)}`, reduced modulo the m-th cyclotomic
//! polynomial. The representation is canonical: two elements are equal iff
//! their coordinate vectors agree after embedding both into the least common
//! cyclotomic order. Elements of different orders may be mixed freely; binary
//! operations embed into the lcm order first.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as DeError;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::numtheory::{euler_phi, gcd, lcm};
use super::poly::{cyclotomic_polynomial, poly_xgcd, RatPoly};
use super::{Integer, Rational};
use crate::error::{Error, Result};

/// Per-order reduction tables: `zeta_pow[j]` is the coordinate vector of
/// `zeta_m^j` over the power basis, for j up to max(m, 2*phi-1). Shared
/// process-wide; orders at desk scale are tiny.
struct Reducer {
    phi: usize,
    zeta_pow: Vec<Vec<Rational>>,
    min_poly: RatPoly,
}

impl Reducer {
    fn build(order: u64) -> Reducer {
        let min_poly = cyclotomic_polynomial(order);
        let phi = min_poly.degree().expect("cyclotomic polynomial is nonzero");
        // T^phi = -(lower-degree part of the monic minimal polynomial)
        let reduction: Vec<Rational> = (0..phi).map(|i| -min_poly.coeff(i)).collect();
        let table_len = (order as usize).max(2 * phi.max(1) - 1);
        let mut zeta_pow: Vec<Vec<Rational>> = Vec::with_capacity(table_len);
        for j in 0..table_len {
            if j < phi {
                let mut v = vec![Rational::zero(); phi];
                v[j] = Rational::one();
                zeta_pow.push(v);
            } else {
                let prev = &zeta_pow[j - 1];
                let mut v = vec![Rational::zero(); phi];
                for i in 0..phi - 1 {
                    v[i + 1] = prev[i].clone();
                }
                let carry = prev[phi - 1].clone();
                if !carry.is_zero() {
                    for i in 0..phi {
                        v[i] += &carry * &reduction[i];
                    }
                }
                zeta_pow.push(v);
            }
        }
        Reducer {
            phi,
            zeta_pow,
            min_poly,
        }
    }
}

static REDUCERS: OnceLock<Mutex<HashMap<u64, Arc<Reducer>>>> = OnceLock::new();

fn reducer(order: u64) -> Arc<Reducer> {
    let cache = REDUCERS.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(r) = cache.lock().unwrap().get(&order) {
        return Arc::clone(r);
    }
    let built = Arc::new(Reducer::build(order));
    let mut guard = cache.lock().unwrap();
    Arc::clone(guard.entry(order).or_insert(built))
}

/// An exact element of the cyclotomic field Q(zeta_order).
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u64,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    /// Zero of the given order.
    pub fn zero(order: u64) -> Self {
        assert!(order >= 1);
        Cyclotomic {
            order,
            coeffs: vec![Rational::zero(); euler_phi(order) as usize],
        }
    }

    /// One of the given order.
    pub fn one(order: u64) -> Self {
        let mut z = Cyclotomic::zero(order);
        z.coeffs[0] = Rational::one();
        z
    }

    /// A primitive `order`-th root of unity.
    pub fn zeta(order: u64) -> Self {
        Cyclotomic::zeta_pow(order, 1)
    }

    /// `zeta_order^k` for any integer exponent.
    pub fn zeta_pow(order: u64, k: i64) -> Self {
        assert!(order >= 1);
        let m = order as i64;
        let j = k.rem_euclid(m) as usize;
        let r = reducer(order);
        Cyclotomic {
            order,
            coeffs: r.zeta_pow[j].clone(),
        }
    }

    /// A rational number, living in the order-1 field.
    pub fn from_rational(q: Rational) -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Cyclotomic::from_rational(Rational::from_integer(Integer::from(n)))
    }

    /// Construct from explicit power-basis coordinates; the vector length
    /// must be exactly phi(order).
    pub fn from_coeffs(order: u64, coeffs: Vec<Rational>) -> Result<Self> {
        if order < 1 || coeffs.len() != euler_phi(order) as usize {
            return Err(Error::InvalidArgument(format!(
                "cyclotomic coefficient vector must have length phi({order}) = {}, got {}",
                euler_phi(order.max(1)),
                coeffs.len()
            )));
        }
        Ok(Cyclotomic { order, coeffs })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// True when the element lies in Q (all higher power-basis coordinates
    /// vanish; the power basis makes this test exact).
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn as_integer(&self) -> Option<Integer> {
        let q = self.as_rational()?;
        if q.is_integer() {
            Some(q.to_integer())
        } else {
            None
        }
    }

    /// Reinterpret in a larger cyclotomic order (the current order must
    /// divide the target).
    pub fn embed(&self, target: u64) -> Result<Self> {
        if target % self.order != 0 {
            return Err(Error::IncompatibleOrder {
                from: self.order,
                to: target,
            });
        }
        if target == self.order {
            return Ok(self.clone());
        }
        let step = (target / self.order) as usize;
        let r = reducer(target);
        let mut out = vec![Rational::zero(); r.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, b) in r.zeta_pow[i * step].iter().enumerate() {
                out[k] += c * b;
            }
        }
        Ok(Cyclotomic {
            order: target,
            coeffs: out,
        })
    }

    fn common_order(&self, rhs: &Cyclotomic) -> u64 {
        lcm(self.order, rhs.order)
    }

    pub fn add(&self, rhs: &Cyclotomic) -> Cyclotomic {
        let m = self.common_order(rhs);
        let mut a = self.embed(m).expect("lcm is a multiple");
        let b = rhs.embed(m).expect("lcm is a multiple");
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, rhs: &Cyclotomic) -> Cyclotomic {
        let m = self.common_order(rhs);
        let mut a = self.embed(m).expect("lcm is a multiple");
        let b = rhs.embed(m).expect("lcm is a multiple");
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x -= y;
        }
        a
    }

    pub fn mul(&self, rhs: &Cyclotomic) -> Cyclotomic {
        let m = self.common_order(rhs);
        let a = self.embed(m).expect("lcm is a multiple");
        let b = rhs.embed(m).expect("lcm is a multiple");
        let r = reducer(m);
        let phi = r.phi;
        // raw convolution, degree <= 2*phi - 2
        let mut conv = vec![Rational::zero(); 2 * phi.max(1) - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    conv[i + j] += x * y;
                }
            }
        }
        let mut out = vec![Rational::zero(); phi];
        for (j, c) in conv.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if j < phi {
                out[j] += c;
            } else {
                for (k, b) in r.zeta_pow[j].iter().enumerate() {
                    out[k] += &c * b;
                }
            }
        }
        Cyclotomic {
            order: m,
            coeffs: out,
        }
    }

    /// Multiply by a rational scalar.
    pub fn scale(&self, q: &Rational) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    /// Multiplicative inverse, by the extended Euclidean algorithm against
    /// the minimal polynomial.
    pub fn inverse(&self) -> Result<Cyclotomic> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let r = reducer(self.order);
        let a = RatPoly::from_coeffs(self.coeffs.clone());
        let (g, u, _) = poly_xgcd(&a, &r.min_poly);
        debug_assert_eq!(g.degree(), Some(0), "minimal polynomial is irreducible");
        let g_inv = Rational::one() / g.coeff(0);
        let inv_poly = u
            .coeffs()
            .iter()
            .map(|c| c * &g_inv)
            .collect::<Vec<Rational>>();
        let mut coeffs = vec![Rational::zero(); r.phi];
        for (i, c) in inv_poly.into_iter().enumerate() {
            coeffs[i] = c;
        }
        Ok(Cyclotomic {
            order: self.order,
            coeffs,
        })
    }

    pub fn div(&self, rhs: &Cyclotomic) -> Result<Cyclotomic> {
        let m = self.common_order(rhs);
        let inv = rhs.embed(m)?.inverse()?;
        Ok(self.mul(&inv))
    }

    /// The ring automorphism determined by `zeta_m -> zeta_m^k`; requires
    /// gcd(k, m) = 1. `k = -1` is complex conjugation.
    pub fn galois(&self, k: i64) -> Result<Cyclotomic> {
        let m = self.order;
        let kk = k.rem_euclid(m as i64) as u64;
        if gcd(kk, m) != 1 {
            return Err(Error::NotCoprime { k, order: m });
        }
        let r = reducer(m);
        let mut out = vec![Rational::zero(); r.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let j = ((i as u64) * kk % m) as usize;
            for (t, b) in r.zeta_pow[j].iter().enumerate() {
                out[t] += c * b;
            }
        }
        Ok(Cyclotomic {
            order: m,
            coeffs: out,
        })
    }

    /// Complex conjugation.
    pub fn conjugate(&self) -> Cyclotomic {
        self.galois(-1).expect("-1 is always coprime to the order")
    }

    /// Numerical approximation under `zeta_m -> exp(2 pi i embedding / m)`.
    /// Diagnostics only; exactness-critical paths never call this.
    pub fn to_complex(&self, embedding: i64) -> Result<Complex64> {
        let m = self.order;
        let e = embedding.rem_euclid(m as i64) as u64;
        if gcd(e, m) != 1 {
            return Err(Error::NotCoprime {
                k: embedding,
                order: m,
            });
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = 2.0 * std::f64::consts::PI * ((e as u128 * i as u128 % m as u128) as f64)
                / (m as f64);
            let weight = c.to_f64().expect("rational fits in f64 at desk scale");
            acc += Complex64::new(angle.cos(), angle.sin()) * weight;
        }
        Ok(acc)
    }

    /// Height bound used by randomized tests: the largest absolute numerator
    /// or denominator among the coordinates.
    pub fn height(&self) -> Integer {
        let mut h = Integer::from(0);
        for c in &self.coeffs {
            h = h.max(c.numer().abs()).max(c.denom().clone());
        }
        h
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let m = lcm(self.order, other.order);
        let a = self.embed(m).expect("lcm is a multiple");
        let b = other.embed(m).expect("lcm is a multiple");
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl std::ops::Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic::add(self, rhs)
    }
}

impl std::ops::Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic::sub(self, rhs)
    }
}

impl std::ops::Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic::mul(self, rhs)
    }
}

impl std::ops::Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic::neg(self)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*z{}", self.order)?,
                _ => write!(f, "{c}*z{}^{i}", self.order)?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CycloWire {
    order: u64,
    coeffs: Vec<String>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Cyclotomic", 2)?;
        s.serialize_field("order", &self.order)?;
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        s.serialize_field("coeffs", &coeffs)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = CycloWire::deserialize(deserializer)?;
        if wire.order < 1 {
            return Err(D::Error::custom("cyclotomic order must be positive"));
        }
        let expected = euler_phi(wire.order) as usize;
        if wire.coeffs.len() != expected {
            return Err(D::Error::custom(format!(
                "expected phi({}) = {expected} coefficients, got {}",
                wire.order,
                wire.coeffs.len()
            )));
        }
        let coeffs = wire
            .coeffs
            .iter()
            .map(|s| Rational::from_str(s))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| D::Error::custom(format!("bad rational: {e}")))?;
        Ok(Cyclotomic {
            order: wire.order,
            coeffs,
        })
    }
}
