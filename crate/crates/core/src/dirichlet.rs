//! Dirichlet characters with exact conductor, parity, and special-value
//! machinery.
//!
//! This module is the analytic side of the engine: values of L-functions at
//! non-positive integers are computed exactly through generalized Bernoulli
//! numbers, `L(1 - n, chi) = -B_{n, chi} / n` for primitive characters, and
//! the order of vanishing there follows the classical parity rule for
//! trivial zeros. Nothing here touches the eigenspace model; agreement of
//! the two routes is what the verification sweeps check.

use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::numtheory::{divisors, euler_phi, factorize, gcd, lcm};
use crate::exact::{Cyclotomic, Integer, Rational};
use crate::groups::{unit_group, Character};

/// A character of the unit group mod N, stored as the exponent map
/// `a -> e(a)` with `chi(a) = zeta_m^{e(a)}` for the exact image order `m`.
/// Non-coprime residues evaluate to zero by convention.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirichletCharacter {
    modulus: u64,
    value_order: u64,
    /// Pairs `(residue, exponent)`, one per residue coprime to the modulus
    /// (residue 0 for modulus 1), sorted by residue.
    exponents: Vec<(u64, u64)>,
}

impl DirichletCharacter {
    /// Normalizing constructor: reduces a raw exponent map modulo `raw_order`
    /// to the exact order of the image, and validates multiplicativity
    /// exhaustively.
    pub fn from_exponents(
        modulus: u64,
        raw_order: u64,
        raw: &BTreeMap<u64, u64>,
    ) -> Result<Self> {
        if modulus == 0 || raw_order == 0 {
            return Err(Error::InvalidArgument(
                "modulus and order must be positive".into(),
            ));
        }
        let residues = coprime_residues(modulus);
        if raw.len() != residues.len() || residues.iter().any(|r| !raw.contains_key(r)) {
            return Err(Error::InvalidArgument(format!(
                "exponent map must cover exactly the {} residues coprime to {modulus}",
                residues.len()
            )));
        }
        // exact order of the image: divide out the common part
        let mut g = raw_order;
        for (_, &e) in raw.iter() {
            g = gcd(g, e % raw_order);
        }
        let value_order = raw_order / g;
        let exponents: Vec<(u64, u64)> = residues
            .iter()
            .map(|&r| (r, (raw[&r] % raw_order) / g))
            .collect();
        let chi = DirichletCharacter {
            modulus,
            value_order,
            exponents,
        };
        chi.validate_multiplicative()?;
        Ok(chi)
    }

    fn validate_multiplicative(&self) -> Result<()> {
        let m = self.value_order;
        for &(a, ea) in &self.exponents {
            for &(b, eb) in &self.exponents {
                let ab = if self.modulus == 1 { 0 } else { a * b % self.modulus };
                let eab = self.exponent(ab).expect("product of units is a unit");
                if (ea + eb) % m != eab {
                    return Err(Error::InvalidArgument(format!(
                        "exponent map is not multiplicative at ({a}, {b}) mod {}",
                        self.modulus
                    )));
                }
            }
        }
        Ok(())
    }

    /// Re-check every structural invariant; used on data deserialized from
    /// outside (the on-disk cache), which bypasses the normalizing
    /// constructor.
    pub fn validate(&self) -> Result<()> {
        let residues = coprime_residues(self.modulus);
        if self.exponents.len() != residues.len()
            || !self
                .exponents
                .iter()
                .map(|&(r, _)| r)
                .eq(residues.iter().copied())
        {
            return Err(Error::InvalidArgument(
                "exponent map does not cover the coprime residues".into(),
            ));
        }
        if self.value_order == 0 {
            return Err(Error::InvalidArgument("value order must be positive".into()));
        }
        let mut g = self.value_order;
        for &(_, e) in &self.exponents {
            if e >= self.value_order {
                return Err(Error::InvalidArgument(
                    "exponent out of range for the value order".into(),
                ));
            }
            g = gcd(g, e);
        }
        if self.value_order != 1 && g != 1 {
            return Err(Error::InvalidArgument(
                "value order exceeds the exact order of the image".into(),
            ));
        }
        self.validate_multiplicative()
    }

    /// The trivial character mod N.
    pub fn trivial(modulus: u64) -> Self {
        let exponents = coprime_residues(modulus).iter().map(|&r| (r, 0)).collect();
        DirichletCharacter {
            modulus,
            value_order: 1,
            exponents,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn value_order(&self) -> u64 {
        self.value_order
    }

    pub fn exponents(&self) -> &[(u64, u64)] {
        &self.exponents
    }

    pub fn is_trivial(&self) -> bool {
        self.value_order == 1
    }

    /// Exponent of `chi(a)` as a power of the primitive root of unity, or
    /// `None` when `a` shares a factor with the modulus.
    pub fn exponent(&self, a: u64) -> Option<u64> {
        let r = if self.modulus == 1 { 0 } else { a % self.modulus };
        self.exponents
            .binary_search_by_key(&r, |&(res, _)| res)
            .ok()
            .map(|i| self.exponents[i].1)
    }

    /// `chi(a)` as an exact cyclotomic value (zero off the units).
    pub fn value(&self, a: u64) -> Cyclotomic {
        match self.exponent(a) {
            Some(e) => Cyclotomic::zeta_pow(self.value_order, e as i64),
            None => Cyclotomic::zero(self.value_order),
        }
    }

    /// Pointwise product of two characters of the same modulus.
    pub fn product(&self, other: &DirichletCharacter) -> Result<DirichletCharacter> {
        if self.modulus != other.modulus {
            return Err(Error::GroupMismatch);
        }
        let l = lcm(self.value_order, other.value_order);
        let raw: BTreeMap<u64, u64> = self
            .exponents
            .iter()
            .map(|&(r, e)| {
                let eo = other.exponent(r).expect("same residue set");
                (r, (e * (l / self.value_order) + eo * (l / other.value_order)) % l)
            })
            .collect();
        DirichletCharacter::from_exponents(self.modulus, l, &raw)
    }

    /// Smallest modulus `f | N` through which the character factors.
    pub fn conductor(&self) -> u64 {
        'next: for f in divisors(self.modulus) {
            for &(a, e) in &self.exponents {
                if a % f == 1 % f && e != 0 {
                    continue 'next;
                }
            }
            return f;
        }
        self.modulus
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor() == self.modulus
    }

    /// The character mod `conductor` inducing this one.
    pub fn primitive_part(&self) -> DirichletCharacter {
        let f = self.conductor();
        if f == self.modulus {
            return self.clone();
        }
        if f == 1 {
            return DirichletCharacter::trivial(1);
        }
        let raw: BTreeMap<u64, u64> = coprime_residues(f)
            .iter()
            .map(|&b| {
                // lift b to a residue coprime to the full modulus
                let mut a = b;
                while a == 0 || gcd(a, self.modulus) != 1 {
                    a += f;
                }
                (b, self.exponent(a).expect("lift is coprime"))
            })
            .collect();
        DirichletCharacter::from_exponents(f, self.value_order.max(1), &raw)
            .expect("factored character stays multiplicative")
    }

    /// Even iff the value at -1 is +1; moduli 1 and 2 are even by
    /// convention.
    pub fn parity(&self) -> Parity {
        if self.modulus <= 2 {
            return Parity::Even;
        }
        match self.exponent(self.modulus - 1) {
            Some(0) => Parity::Even,
            _ => Parity::Odd,
        }
    }

    /// The cyclic-quotient factorization: the exact image order `m` together
    /// with the exponent surjection onto Z/m. Composing the surjection with
    /// `k -> zeta_m^k` recovers the character.
    pub fn factor_through_cyclic(&self) -> (u64, Vec<(u64, u64)>) {
        (self.value_order, self.exponents.clone())
    }

    /// The same character as a class function on the unit-group Cayley
    /// table, under the residue <-> index label map.
    pub fn to_group_character(&self) -> Character {
        let group = unit_group(self.modulus);
        let values = (0..group.size())
            .map(|i| {
                let r = group.label(i).expect("unit groups carry residue labels");
                self.value(r)
            })
            .collect();
        Character::new(group, values).expect("character values are class-constant")
    }

    /// Partial sum of the defining series at a real point `s > 1`, in double
    /// precision, using the standard complex embedding. Diagnostics only;
    /// the tail after `terms` summands is bounded by
    /// `terms^(1-s) / (s - 1)`.
    pub fn partial_series(&self, s: f64, terms: u64) -> Complex64 {
        debug_assert!(s > 1.0, "the series only converges for s > 1");
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 1..=terms {
            if self.exponent(k).is_some() {
                let v = self
                    .value(k)
                    .to_complex(1)
                    .expect("embedding 1 is always valid");
                acc += v / (k as f64).powf(s);
            }
        }
        acc
    }
}

/// Parity of a Dirichlet character (its value at -1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

fn coprime_residues(n: u64) -> Vec<u64> {
    if n == 1 {
        vec![0]
    } else {
        (1..n).filter(|&a| gcd(a, n) == 1).collect()
    }
}

/// A generator basis of the unit group mod N: CRT-lifted generators with
/// their orders, 2-power component first (as `{-1} x <3>` for moduli
/// divisible by 8), then odd prime powers ascending.
#[derive(Debug, Clone, Serialize)]
pub struct UnitBasis {
    pub modulus: u64,
    /// `(residue, order)` pairs.
    pub generators: Vec<(u64, u64)>,
}

/// Generator basis used for the deterministic character enumeration.
pub fn unit_basis(n: u64) -> UnitBasis {
    let mut generators: Vec<(u64, u64)> = Vec::new();
    if n >= 3 {
        let mut push_lifted = |g_component: u64, q: u64, order: u64| {
            // CRT lift: congruent to the generator mod q, to 1 mod n/q
            let other = n / q;
            let lifted = (0..n)
                .find(|&a| a % q == g_component % q && (other == 1 || a % other == 1))
                .expect("CRT lift exists");
            generators.push((lifted, order));
        };
        for (p, e) in factorize(n) {
            let q = p.pow(e);
            if p == 2 {
                if e == 2 {
                    push_lifted(3, q, 2);
                } else if e >= 3 {
                    push_lifted(q - 1, q, 2);
                    push_lifted(3, q, q / 4);
                }
                // e == 1 contributes nothing
            } else {
                let phi_q = q / p * (p - 1);
                let root = smallest_primitive_root(p, e);
                push_lifted(root, q, phi_q);
            }
        }
    }
    UnitBasis {
        modulus: n,
        generators,
    }
}

fn smallest_primitive_root(p: u64, e: u32) -> u64 {
    let q = p.pow(e);
    let phi_q = q / p * (p - 1);
    let prime_parts: Vec<u64> = factorize(phi_q).iter().map(|&(r, _)| r).collect();
    'candidate: for g in 2..q {
        if gcd(g, q) != 1 {
            continue;
        }
        for &r in &prime_parts {
            if crate::exact::numtheory::mod_pow(g, phi_q / r, q) == 1 {
                continue 'candidate;
            }
        }
        return g;
    }
    unreachable!("odd prime powers have primitive roots");
}

/// All phi(N) characters mod N in a deterministic order: exponent tuples
/// over the generator basis, with the first generator's exponent varying
/// fastest.
pub fn enumerate_characters(n: u64) -> Vec<DirichletCharacter> {
    assert!(n >= 1);
    let basis = unit_basis(n);
    let phi = euler_phi(n);
    let orders: Vec<u64> = basis.generators.iter().map(|&(_, d)| d).collect();
    debug_assert_eq!(orders.iter().product::<u64>().max(1), phi.max(1));

    // discrete logs of every coprime residue over the basis, by walking the
    // full exponent grid once
    let mut logs: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    let grid = orders.iter().product::<u64>().max(1);
    for mut t in 0..grid {
        let mut digits = Vec::with_capacity(orders.len());
        let mut residue = 1u64 % n;
        for (i, &d) in orders.iter().enumerate() {
            let k = t % d;
            t /= d;
            digits.push(k);
            for _ in 0..k {
                residue = residue * basis.generators[i].0 % n;
            }
        }
        logs.entry(if n == 1 { 0 } else { residue }).or_insert(digits);
    }
    debug_assert_eq!(logs.len() as u64, phi);

    let raw_order = orders.iter().fold(1u64, |acc, &d| lcm(acc, d));
    (0..phi)
        .map(|mut j| {
            let mut tuple = Vec::with_capacity(orders.len());
            for &d in &orders {
                tuple.push(j % d);
                j /= d;
            }
            let raw: BTreeMap<u64, u64> = logs
                .iter()
                .map(|(&r, ls)| {
                    let e = tuple
                        .iter()
                        .zip(ls)
                        .zip(&orders)
                        .fold(0u64, |acc, ((&k, &l), &d)| {
                            (acc + k * l % raw_order * (raw_order / d)) % raw_order
                        });
                    (r, e)
                })
                .collect();
            DirichletCharacter::from_exponents(n, raw_order, &raw)
                .expect("basis enumeration yields multiplicative maps")
        })
        .collect()
}

static BERNOULLI: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();

/// The n-th Bernoulli number (B_1 = -1/2 convention), exact and memoized.
pub fn bernoulli_number(n: u32) -> Rational {
    let cache = BERNOULLI.get_or_init(|| Mutex::new(vec![Rational::one()]));
    let mut guard = cache.lock().unwrap();
    while guard.len() <= n as usize {
        let k = guard.len(); // computing B_k
        let mut acc = Rational::zero();
        for (j, b) in guard.iter().enumerate() {
            acc += b * &binomial(k as u32 + 1, j as u32);
        }
        let next = -acc / binomial(k as u32 + 1, k as u32);
        guard.push(next);
    }
    guard[n as usize].clone()
}

fn binomial(n: u32, k: u32) -> Rational {
    let mut num = Integer::from(1);
    let mut den = Integer::from(1);
    for i in 0..k.min(n - k) {
        num *= Integer::from(n - i);
        den *= Integer::from(i + 1);
    }
    Rational::new(num, den)
}

/// The n-th Bernoulli polynomial, exact coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliPoly {
    degree: u32,
    /// `coeffs[k]` is the coefficient of `x^k`.
    coeffs: Vec<Rational>,
}

impl BernoulliPoly {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn from_coeffs(degree: u32, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != degree as usize + 1 {
            return Err(Error::InvalidArgument(format!(
                "degree-{degree} polynomial needs {} coefficients",
                degree + 1
            )));
        }
        Ok(BernoulliPoly { degree, coeffs })
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

/// `B_n(x) = sum_k C(n, k) B_{n-k} x^k`, exact.
pub fn bernoulli_polynomial(n: u32) -> BernoulliPoly {
    let coeffs = (0..=n)
        .map(|k| binomial(n, k) * bernoulli_number(n - k))
        .collect();
    BernoulliPoly {
        degree: n,
        coeffs,
    }
}

/// Generalized Bernoulli number
/// `B_{n, chi} = N^{n-1} sum_{a=1}^{N} chi(a) B_n(a/N)`,
/// with `chi(a) = 0` off the units; for the modulus-1 character this is
/// `B_n(1)`, so the zeta specialization needs no special casing.
pub fn generalized_bernoulli(chi: &DirichletCharacter, n: u32) -> Cyclotomic {
    generalized_bernoulli_with(chi, n, &bernoulli_polynomial(n))
}

/// Same, with a caller-supplied Bernoulli polynomial of matching degree
/// (cache path).
pub fn generalized_bernoulli_with(
    chi: &DirichletCharacter,
    n: u32,
    poly: &BernoulliPoly,
) -> Cyclotomic {
    assert!(n >= 1);
    assert_eq!(poly.degree(), n, "polynomial degree must match n");
    let big_n = chi.modulus();
    let mut acc = Cyclotomic::zero(chi.value_order());
    for a in 1..=big_n {
        if chi.exponent(a).is_none() {
            continue;
        }
        let x = Rational::new(Integer::from(a), Integer::from(big_n));
        acc = acc.add(&chi.value(a).scale(&poly.eval(&x)));
    }
    let scale = Rational::from_integer(Integer::from(big_n)).pow(n as i32 - 1);
    acc.scale(&scale)
}

/// Exact special value `L(1 - n, chi) = -B_{n, chi} / n` for a primitive
/// character.
pub fn special_value(chi: &DirichletCharacter, n: u32) -> Result<Cyclotomic> {
    special_value_with(chi, n, &bernoulli_polynomial(n))
}

/// Cache-path variant of `special_value`.
pub fn special_value_with(
    chi: &DirichletCharacter,
    n: u32,
    poly: &BernoulliPoly,
) -> Result<Cyclotomic> {
    if n == 0 {
        return Err(Error::InvalidArgument("special values need n >= 1".into()));
    }
    if !chi.is_primitive() {
        return Err(Error::ImprimitiveCharacter {
            modulus: chi.modulus(),
            conductor: chi.conductor(),
        });
    }
    let b = generalized_bernoulli_with(chi, n, poly);
    Ok(b.scale(&-Rational::new(Integer::one(), Integer::from(n))))
}

/// Order of vanishing of `L(s, chi)` at `s = 1 - n` for a primitive
/// character: the trivial zeros are simple and sit exactly where the parity
/// of the character disagrees with the parity of the Gamma factor. For the
/// modulus-1 character this is the classical pattern of the zeta function
/// (zeros at the negative even integers). The self-audit `order = 0 iff
/// special value != 0` is enforced by the verification sweeps.
pub fn analytic_order(chi: &DirichletCharacter, n: u32) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("orders need n >= 1".into()));
    }
    if !chi.is_primitive() {
        return Err(Error::ImprimitiveCharacter {
            modulus: chi.modulus(),
            conductor: chi.conductor(),
        });
    }
    if chi.is_trivial() {
        // conductor 1: the zeta function, zeros at -2, -4, ...
        return Ok(u64::from(n >= 3 && n % 2 == 1));
    }
    let order = match chi.parity() {
        Parity::Even => n % 2 == 1,
        Parity::Odd => n % 2 == 0,
    };
    Ok(u64::from(order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};

    fn odd_character_mod_4() -> DirichletCharacter {
        enumerate_characters(4)
            .into_iter()
            .find(|c| c.parity() == Parity::Odd)
            .unwrap()
    }

    #[test]
    fn enumeration_counts_and_triviality() {
        assert_eq!(enumerate_characters(1).len(), 1);
        assert!(enumerate_characters(1)[0].is_trivial());
        for n in 1..=24u64 {
            let chars = enumerate_characters(n);
            assert_eq!(chars.len() as u64, euler_phi(n), "modulus {n}");
            assert!(chars[0].is_trivial(), "index 0 is the trivial character");
            // pairwise distinct
            for i in 0..chars.len() {
                for j in i + 1..chars.len() {
                    assert_ne!(chars[i], chars[j], "characters {i} and {j} mod {n}");
                }
            }
        }
    }

    #[test]
    fn mod_4_characters() {
        let chars = enumerate_characters(4);
        assert_eq!(chars.len(), 2);
        assert!(chars[0].is_trivial());
        assert_eq!(chars[1].value(3), Cyclotomic::from_integer(-1));
        assert_eq!(chars[1].value_order(), 2);
    }

    #[test]
    fn mod_8_characters_are_quadratic_with_alternating_parity() {
        let chars = enumerate_characters(8);
        assert_eq!(chars.len(), 4);
        for c in &chars {
            assert!(c.value_order() <= 2, "unit group mod 8 is 2-torsion");
        }
        let parities: Vec<Parity> = chars.iter().map(|c| c.parity()).collect();
        assert_eq!(
            parities,
            vec![Parity::Even, Parity::Odd, Parity::Even, Parity::Odd]
        );
    }

    #[test]
    fn mod_5_has_an_order_4_character() {
        let chars = enumerate_characters(5);
        assert_eq!(chars.len(), 4);
        assert!(chars.iter().any(|c| c.value_order() == 4));
        let (m, surj) = chars[1].factor_through_cyclic();
        assert_eq!(m, 4);
        assert_eq!(surj.len(), 4);
    }

    #[test]
    fn character_set_is_closed_under_product() {
        for n in [4u64, 5, 8, 12] {
            let chars = enumerate_characters(n);
            for a in &chars {
                for b in &chars {
                    let p = a.product(b).unwrap();
                    assert!(chars.contains(&p));
                }
            }
        }
    }

    #[test]
    fn multiplicativity_exhaustive() {
        for n in [1u64, 4, 8, 15, 16, 24] {
            for chi in enumerate_characters(n) {
                let m = chi.value_order();
                for &(a, ea) in chi.exponents() {
                    for &(b, eb) in chi.exponents() {
                        let ab = if n == 1 { 0 } else { a * b % n };
                        assert_eq!((ea + eb) % m, chi.exponent(ab).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn conductor_of_trivial_characters_is_one() {
        for n in [1u64, 4, 12, 24] {
            assert_eq!(DirichletCharacter::trivial(n).conductor(), 1);
        }
    }

    #[test]
    fn odd_character_mod_4_is_primitive() {
        let chi = odd_character_mod_4();
        assert_eq!(chi.conductor(), 4);
        assert!(chi.is_primitive());
    }

    #[test]
    fn induced_character_mod_8_has_conductor_4() {
        // the character mod 8 that factors through the odd character mod 4
        let target = odd_character_mod_4();
        let induced = enumerate_characters(8)
            .into_iter()
            .find(|c| c.conductor() == 4)
            .expect("the odd character mod 4 lifts to modulus 8");
        assert_eq!(induced.primitive_part(), target);
    }

    #[test]
    fn primitive_part_is_idempotent_and_conductor_stable() {
        for n in 1..=24u64 {
            for chi in enumerate_characters(n) {
                let p = chi.primitive_part();
                assert_eq!(p.primitive_part(), p);
                assert_eq!(p.conductor(), chi.conductor());
                assert_eq!(p.modulus(), chi.conductor());
            }
        }
    }

    #[test]
    fn factorization_roundtrip_recovers_values() {
        for n in [5u64, 8, 13, 16] {
            for chi in enumerate_characters(n) {
                let (m, surj) = chi.factor_through_cyclic();
                for (r, e) in surj {
                    assert_eq!(chi.value(r), Cyclotomic::zeta_pow(m, e as i64));
                }
                // the exponent map is onto Z/m
                let mut hit = vec![false; m as usize];
                for &(_, e) in chi.exponents() {
                    hit[e as usize] = true;
                }
                assert!(hit.iter().all(|&h| h), "surjection onto Z/{m}");
            }
        }
    }

    #[test]
    fn bernoulli_polynomials_0_1_2() {
        assert_eq!(bernoulli_polynomial(0).coeffs(), &[rat_int(1)]);
        assert_eq!(bernoulli_polynomial(1).coeffs(), &[rat(-1, 2), rat_int(1)]);
        assert_eq!(
            bernoulli_polynomial(2).coeffs(),
            &[rat(1, 6), rat_int(-1), rat_int(1)]
        );
    }

    #[test]
    fn bernoulli_difference_identity() {
        // B_n(x + 1) - B_n(x) = n x^{n-1} as an exact polynomial identity:
        // both sides have degree n - 1, so agreement at n distinct points
        // plus two rational spot checks pins them down
        for n in 1..=8u32 {
            let poly = bernoulli_polynomial(n);
            let mut points: Vec<Rational> = (0..=n as i64).map(rat_int).collect();
            points.push(rat(1, 2));
            points.push(rat(-3, 4));
            for x in points {
                let lhs = poly.eval(&(x.clone() + rat_int(1))) - poly.eval(&x);
                let rhs = rat_int(n as i64) * x.pow(n as i32 - 1);
                assert_eq!(lhs, rhs, "n = {n}, x = {x}");
            }
        }
    }

    #[test]
    fn generalized_bernoulli_of_zeta_is_plain_bernoulli_at_one() {
        let chi = DirichletCharacter::trivial(1);
        assert_eq!(
            generalized_bernoulli(&chi, 2).as_rational().unwrap(),
            rat(1, 6)
        );
    }

    #[test]
    fn generalized_bernoulli_of_odd_character_mod_4() {
        let chi = odd_character_mod_4();
        // defining sum: B_1(1/4) - B_1(3/4) = -1/4 - 1/4
        assert_eq!(generalized_bernoulli(&chi, 1).as_rational().unwrap(), rat(-1, 2));
        // 4 * (B_2(1/4) - B_2(3/4)) = 0
        assert!(generalized_bernoulli(&chi, 2).is_zero());
    }

    #[test]
    fn zeta_special_values() {
        let zeta = DirichletCharacter::trivial(1);
        assert_eq!(special_value(&zeta, 1).unwrap().as_rational().unwrap(), rat(-1, 2));
        assert_eq!(
            special_value(&zeta, 2).unwrap().as_rational().unwrap(),
            rat(-1, 12)
        );
        assert!(special_value(&zeta, 3).unwrap().is_zero());
        assert_eq!(
            special_value(&zeta, 4).unwrap().as_rational().unwrap(),
            rat(1, 120)
        );
    }

    #[test]
    fn l_values_of_the_odd_character_mod_4() {
        let chi = odd_character_mod_4();
        assert_eq!(special_value(&chi, 1).unwrap().as_rational().unwrap(), rat(1, 2));
        assert!(special_value(&chi, 2).unwrap().is_zero());
    }

    #[test]
    fn special_value_rejects_imprimitive_input() {
        let trivial_mod_4 = DirichletCharacter::trivial(4);
        assert!(matches!(
            special_value(&trivial_mod_4, 1),
            Err(Error::ImprimitiveCharacter { .. })
        ));
    }

    #[test]
    fn analytic_orders() {
        let zeta = DirichletCharacter::trivial(1);
        assert_eq!(analytic_order(&zeta, 1).unwrap(), 0); // value -1/2
        assert_eq!(analytic_order(&zeta, 2).unwrap(), 0);
        assert_eq!(analytic_order(&zeta, 3).unwrap(), 1);
        let chi = odd_character_mod_4();
        assert_eq!(analytic_order(&chi, 1).unwrap(), 0);
        assert_eq!(analytic_order(&chi, 2).unwrap(), 1);
        // even nontrivial character mod 5 vanishes at s = 0
        let even5 = enumerate_characters(5)
            .into_iter()
            .find(|c| !c.is_trivial() && c.parity() == Parity::Even)
            .unwrap();
        assert_eq!(analytic_order(&even5, 1).unwrap(), 1);
        assert!(generalized_bernoulli(&even5, 1).is_zero());
    }

    #[test]
    fn even_characters_kill_the_first_bernoulli_sum() {
        // the a <-> N - a pairing, checked exactly through modulus 24
        for n in 3..=24u64 {
            for chi in enumerate_characters(n) {
                if chi.parity() == Parity::Even && !chi.is_trivial() && chi.is_primitive() {
                    assert!(generalized_bernoulli(&chi, 1).is_zero(), "modulus {n}");
                }
            }
        }
    }

    #[test]
    fn vanishing_matches_order_through_24() {
        for n in 3..=24u64 {
            for chi in enumerate_characters(n) {
                if !chi.is_primitive() {
                    continue;
                }
                for k in 1..=6u32 {
                    let vanishes = special_value(&chi, k).unwrap().is_zero();
                    let order = analytic_order(&chi, k).unwrap();
                    assert_eq!(vanishes, order == 1, "modulus {n}, n = {k}");
                }
            }
        }
    }

    #[test]
    fn group_character_bridge() {
        let chi = odd_character_mod_4();
        let g_chi = chi.to_group_character();
        let group = g_chi.group();
        assert_eq!(g_chi.value(group.index_of_label(1).unwrap()), &Cyclotomic::one(2));
        assert_eq!(
            g_chi.value(group.index_of_label(3).unwrap()),
            &Cyclotomic::from_integer(-1)
        );
        // multiplicativity transported through the label map, mod 5
        for chi in enumerate_characters(5) {
            let gc = chi.to_group_character();
            let group = gc.group().clone();
            for a in 0..group.size() {
                for b in 0..group.size() {
                    let prod = gc.value(a).mul(gc.value(b));
                    assert_eq!(&prod, gc.value(group.mul(a, b)));
                }
            }
        }
    }

    #[test]
    fn trivial_character_bridge() {
        let chi = DirichletCharacter::trivial(8);
        let gc = chi.to_group_character();
        assert_eq!(&gc, &Character::trivial(gc.group().clone()));
    }

    #[test]
    fn partial_series_basics() {
        let zeta = DirichletCharacter::trivial(1);
        let s2 = zeta.partial_series(2.0, 10_000);
        assert!((s2.re - 1.6449).abs() < 1e-3, "got {}", s2.re);
        assert!(s2.im.abs() < 1e-12);
        // one term is chi(1) = 1
        let chi = odd_character_mod_4();
        let one = chi.partial_series(2.0, 1);
        assert!((one.re - 1.0).abs() < 1e-12);
        // alternating series for the odd character mod 4 at s = 2
        let cat = chi.partial_series(2.0, 10_000);
        assert!((cat.re - 0.9160).abs() < 1e-3, "got {}", cat.re);
        // convergence sanity: doubling the terms moves the value by less
        // than the stated tail bound
        let cat2 = chi.partial_series(2.0, 20_000);
        assert!((cat.re - cat2.re).abs() < 1e-4);
    }
}
