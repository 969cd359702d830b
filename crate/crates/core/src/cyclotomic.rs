//! Exact arithmetic in prime-power cyclotomic fields `Q(zeta_{p^k})`.
//!
//! Elements are stored on the power basis `1, z, ..., z^(phi(p^k)-1)` as a
//! sorted sparse list of non-zero rational coefficients. Any power `z^e`
//! with `e >= phi(p^k)` is rewritten with
//! `z^(phi+f) = -sum_{i<p-1} z^(i p^(k-1) + f)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{
    big_pow, congruence_subgroup_generators, mod_mul, phi_pp, pow, reduce_signed,
};
use crate::{Error, Result};

pub type Rational = BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Coefficients of `Phi_{p^k}(x)` in ascending order (length `phi(p^k) + 1`).
pub fn cyclotomic_polynomial(p: u64, k: u32) -> Vec<i64> {
    if k == 0 {
        return vec![-1, 1];
    }
    let step = pow(p, k - 1) as usize;
    let mut c = vec![0i64; (p as usize - 1) * step + 1];
    for i in 0..p as usize {
        c[i * step] = 1;
    }
    c
}

/// The multiplicative order of `1 + p^alpha` modulo `p^(alpha+beta)`, which
/// is `p^beta`. Fails for `p = 2, alpha = 1, beta >= 2`, where `3` has
/// order `2^(beta-1)`.
pub fn order_one_plus(p: u64, alpha: u32, beta: u32) -> Result<BigUint> {
    if alpha == 0 {
        return Err(Error::OutOfRange("alpha must be at least 1".into()));
    }
    if p == 2 && alpha == 1 && beta >= 2 {
        return Err(Error::OutOfRange(format!("1 + 2 has order 2^{} modulo 2^{}", beta - 1, beta + 1)));
    }
    let order = big_pow(p, beta);
    debug_assert!({
        let modulus = big_pow(p, alpha + beta);
        let x = BigUint::one() + big_pow(p, alpha);
        x.modpow(&order, &modulus) == BigUint::one() % &modulus
            && (beta == 0 || x.modpow(&big_pow(p, beta - 1), &modulus) != BigUint::one())
    });
    Ok(order)
}

/// Rewrite an integer coefficient vector indexed by exponents `0..p^k` onto
/// the power basis in place; afterwards only indices below `phi(p^k)` are
/// non-zero. Returns `None` on overflow.
pub fn reduce_integer_histogram(p: u64, k: u32, h: &mut [i64]) -> Option<()> {
    if k == 0 {
        return Some(());
    }
    let phi = phi_pp(p, k) as usize;
    let step = pow(p, k - 1) as usize;
    for e in phi..h.len() {
        let c = h[e];
        if c == 0 {
            continue;
        }
        h[e] = 0;
        let f = e - phi;
        for i in 0..p as usize - 1 {
            let slot = &mut h[i * step + f];
            *slot = slot.checked_sub(c)?;
        }
    }
    Some(())
}

/// An element of `Q(zeta_{p^k})`.
#[derive(Clone, Debug)]
pub struct CyclotomicNumber {
    p: u64,
    level: u32,
    terms: Vec<(u64, Rational)>,
}

impl CyclotomicNumber {
    pub fn zero(p: u64, level: u32) -> Self {
        CyclotomicNumber { p, level, terms: Vec::new() }
    }

    pub fn from_rational(p: u64, level: u32, q: Rational) -> Self {
        let terms = if q.is_zero() { Vec::new() } else { vec![(0, q)] };
        CyclotomicNumber { p, level, terms }
    }

    pub fn from_integer(p: u64, level: u32, n: i64) -> Self {
        Self::from_rational(p, level, integer(n))
    }

    pub fn one(p: u64, level: u32) -> Self {
        Self::from_integer(p, level, 1)
    }

    /// `zeta_{p^k}^e`, reduced onto the power basis.
    pub fn root_of_unity(p: u64, k: u32, e: i64) -> Self {
        let e = reduce_signed(e, pow(p, k));
        Self::monomial(p, k, Rational::one(), e)
    }

    /// `c * zeta_{p^k}^e` for `0 <= e < p^k`.
    pub fn monomial(p: u64, k: u32, c: Rational, e: u64) -> Self {
        let mut acc = BTreeMap::new();
        acc.insert(e % pow(p, k), c);
        Self::from_exponent_map(p, k, acc)
    }

    /// Build from a map `exponent mod p^k -> coefficient`, reducing any
    /// exponent outside the basis range.
    pub fn from_exponent_map(p: u64, k: u32, acc: BTreeMap<u64, Rational>) -> Self {
        if k == 0 {
            let total: Rational = acc.into_values().fold(Rational::zero(), |a, b| a + b);
            return Self::from_rational(p, 0, total);
        }
        let phi = phi_pp(p, k);
        let step = pow(p, k - 1);
        let mut basis: BTreeMap<u64, Rational> = BTreeMap::new();
        for (e, c) in acc {
            if c.is_zero() {
                continue;
            }
            if e < phi {
                *basis.entry(e).or_insert_with(Rational::zero) += c;
            } else {
                let f = e - phi;
                for i in 0..p - 1 {
                    *basis.entry(i * step + f).or_insert_with(Rational::zero) -= &c;
                }
            }
        }
        let terms = basis.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        CyclotomicNumber { p, level: k, terms }
    }

    /// Element with the given dense power-basis coefficients.
    pub fn from_coeffs(p: u64, level: u32, coeffs: Vec<Rational>) -> Self {
        assert_eq!(coeffs.len() as u64, phi_pp(p, level), "coefficient vector length");
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| (d as u64, c))
            .collect();
        CyclotomicNumber { p, level, terms }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// Non-zero `(basis index, coefficient)` pairs in increasing index order.
    pub fn terms(&self) -> &[(u64, Rational)] {
        &self.terms
    }

    /// Dense coefficient vector of length `phi(p^k)`.
    pub fn coeffs(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); phi_pp(self.p, self.level) as usize];
        for (d, c) in &self.terms {
            out[*d as usize] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.terms.iter().all(|(d, _)| *d == 0)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    /// Embed into `Q(zeta_{p^k})` for `k >= level` via `zeta_{p^j} = zeta_{p^k}^(p^(k-j))`.
    pub fn lift(&self, k: u32) -> Self {
        assert!(k >= self.level, "cannot lift to a smaller level");
        if k == self.level {
            return self.clone();
        }
        let scale = pow(self.p, k - self.level);
        let terms = self.terms.iter().map(|(d, c)| (d * scale, c.clone())).collect();
        CyclotomicNumber { p: self.p, level: k, terms }
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        assert_eq!(self.p, other.p, "operands from different prime families");
        let k = self.level.max(other.level);
        (self.lift(k), other.lift(k))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero(self.p, self.level);
        }
        let terms = self.terms.iter().map(|(d, c)| (*d, c * q)).collect();
        CyclotomicNumber { p: self.p, level: self.level, terms }
    }

    fn combine(&self, other: &Self, sign: bool) -> Self {
        let (x, y) = self.common(other);
        let mut out = Vec::with_capacity(x.terms.len() + y.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < x.terms.len() || j < y.terms.len() {
            let take_x = j >= y.terms.len() || (i < x.terms.len() && x.terms[i].0 < y.terms[j].0);
            let take_y = i >= x.terms.len() || (j < y.terms.len() && y.terms[j].0 < x.terms[i].0);
            if take_x {
                out.push(x.terms[i].clone());
                i += 1;
            } else if take_y {
                let (d, c) = &y.terms[j];
                out.push((*d, if sign { c.clone() } else { -c }));
                j += 1;
            } else {
                let c = if sign { &x.terms[i].1 + &y.terms[j].1 } else { &x.terms[i].1 - &y.terms[j].1 };
                if !c.is_zero() {
                    out.push((x.terms[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        CyclotomicNumber { p: x.p, level: x.level, terms: out }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let (x, y) = self.common(other);
        if x.level == 0 {
            let c = x.to_rational().unwrap() * y.to_rational().unwrap();
            return Self::from_rational(x.p, 0, c);
        }
        let pk = pow(x.p, x.level);
        let mut acc: BTreeMap<u64, Rational> = BTreeMap::new();
        for (d1, c1) in &x.terms {
            for (d2, c2) in &y.terms {
                let e = (d1 + d2) % pk;
                *acc.entry(e).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        Self::from_exponent_map(x.p, x.level, acc)
    }

    /// Multiply by `zeta_{p^k}^e` where `k` is this element's level.
    pub fn mul_root(&self, e: u64) -> Self {
        if self.level == 0 {
            return self.clone();
        }
        let pk = pow(self.p, self.level);
        let acc = self.terms.iter().map(|(d, c)| ((d + e) % pk, c.clone())).collect();
        Self::from_exponent_map(self.p, self.level, acc)
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::one(self.p, self.level);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against `Phi_{p^k}`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.level == 0 {
            let c = self.to_rational().unwrap();
            return Ok(Self::from_rational(self.p, 0, c.recip()));
        }
        let modulus: Vec<Rational> = cyclotomic_polynomial(self.p, self.level)
            .into_iter()
            .map(integer)
            .collect();
        let s = poly::inverse_mod(&self.coeffs(), &modulus);
        Ok(Self::from_coeffs(self.p, self.level, s))
    }

    /// The automorphism `zeta -> zeta^u`.
    pub fn galois_apply(&self, u: i64) -> Result<Self> {
        if self.level == 0 {
            return Ok(self.clone());
        }
        let pk = pow(self.p, self.level);
        let reduced = reduce_signed(u, pk);
        if reduced.is_multiple_of(self.p) {
            return Err(Error::UnitRequired(u));
        }
        Ok(self.galois_unit(reduced))
    }

    fn galois_unit(&self, u: u64) -> Self {
        let pk = pow(self.p, self.level);
        let acc = self.terms.iter().map(|(d, c)| (mod_mul(*d, u, pk), c.clone())).collect();
        Self::from_exponent_map(self.p, self.level, acc)
    }

    /// Complex conjugate, `zeta -> zeta^-1`.
    pub fn conj(&self) -> Self {
        self.galois_apply(-1).expect("-1 is a unit")
    }

    /// Smallest `lambda` with this element in `Q(zeta_{p^lambda})`, found by
    /// testing invariance under generators of `Gal(Q(zeta_{p^k}) / Q(zeta_{p^lambda}))`.
    pub fn conductor_level(&self) -> u32 {
        (0..=self.level)
            .find(|&lambda| {
                congruence_subgroup_generators(self.p, self.level, lambda)
                    .into_iter()
                    .all(|u| self.galois_unit(u) == *self)
            })
            .expect("every element lies in its own field")
    }

    /// The conductor `p^lambda`.
    pub fn conductor(&self) -> u64 {
        pow(self.p, self.conductor_level())
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.p != other.p {
            return self.is_zero() && other.is_zero();
        }
        if self.level == other.level {
            return self.terms == other.terms;
        }
        let (x, y) = self.common(other);
        x.terms == y.terms
    }
}

impl Eq for CyclotomicNumber {}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let z = format!("z{}", pow(self.p, self.level));
        for (idx, (d, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let root = match d {
                0 => None,
                1 => Some(z.clone()),
                _ => Some(format!("{z}^{d}")),
            };
            match root {
                None => write!(f, "{mag}")?,
                Some(r) if mag.is_one() => write!(f, "{r}")?,
                Some(r) => write!(f, "{mag}*{r}")?,
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&CyclotomicNumber> for &CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
                let f: fn(&CyclotomicNumber, &CyclotomicNumber) -> CyclotomicNumber = $body;
                f(self, rhs)
            }
        }
        impl $tr<CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |x, y| x.combine(y, true));
forward_binop!(Sub, sub, |x, y| x.combine(y, false));
forward_binop!(Mul, mul, |x, y| x.mul_ref(y));

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        let terms = self.terms.iter().map(|(d, c)| (*d, -c)).collect();
        CyclotomicNumber { p: self.p, level: self.level, terms }
    }
}

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        -&self
    }
}

mod poly {
    //! Dense polynomials over the rationals, ascending coefficients.

    use super::Rational;
    use num_traits::{One, Zero};

    fn trim(mut a: Vec<Rational>) -> Vec<Rational> {
        while a.last().is_some_and(|c| c.is_zero()) {
            a.pop();
        }
        a
    }

    fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let len = a.len().max(b.len());
        let out = (0..len)
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
                match b.get(i) {
                    Some(y) => x - y,
                    None => x,
                }
            })
            .collect();
        trim(out)
    }

    fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        trim(out)
    }

    fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let mut rem = trim(a.to_vec());
        let db = b.len() - 1;
        let lead = b[db].clone();
        if rem.len() < b.len() {
            return (Vec::new(), rem);
        }
        let mut quo = vec![Rational::zero(); rem.len() - db];
        while rem.len() >= b.len() {
            let shift = rem.len() - b.len();
            let c = rem.last().unwrap() / &lead;
            for (i, y) in b.iter().enumerate() {
                rem[shift + i] -= &c * y;
            }
            quo[shift] = c;
            rem = trim(rem);
        }
        (trim(quo), rem)
    }

    /// `s` with `s * a = 1 mod modulus`, assuming `gcd(a, modulus) = 1`.
    pub fn inverse_mod(a: &[Rational], modulus: &[Rational]) -> Vec<Rational> {
        let (mut r0, mut r1) = (modulus.to_vec(), trim(a.to_vec()));
        let (mut s0, mut s1) = (Vec::new(), vec![Rational::one()]);
        while r1.len() > 1 {
            let (q, r) = divrem(&r0, &r1);
            let s = sub(&s0, &mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        let c = r1[0].clone();
        let (_, s) = divrem(&s1, modulus);
        let mut s: Vec<Rational> = s.into_iter().map(|x| x / &c).collect();
        s.resize(modulus.len() - 1, Rational::zero());
        s
    }
}
