//! Parameter validation, normal forms `a^i b^j`, and the group law.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{big_pow, is_prime};
use crate::ValidationError;

/// The tuple `(p, n, m, r, s)` of a presentation
/// `a^(p^n) = 1, b^(p^m) = a^(p^(n-r)), b a b^-1 = a^(1+p^(n-s))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MetacyclicParams {
    pub p: u64,
    pub n: u32,
    pub m: u32,
    pub r: u32,
    pub s: u32,
}

impl MetacyclicParams {
    pub const fn new(p: u64, n: u32, m: u32, r: u32, s: u32) -> Self {
        MetacyclicParams { p, n, m, r, s }
    }
}

impl fmt::Display for MetacyclicParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {}, {})", self.p, self.n, self.m, self.r, self.s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Extension {
    Split,
    NonSplit,
}

/// An element in normal form `a^i b^j` with `0 <= i < p^n`, `0 <= j < p^m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub i: BigUint,
    pub j: BigUint,
}

impl GroupElement {
    /// Both exponents as machine integers, when they fit.
    pub fn to_u64_pair(&self) -> Option<(u64, u64)> {
        Some((self.i.to_u64()?, self.j.to_u64()?))
    }

    pub fn is_identity(&self) -> bool {
        self.i.is_zero() && self.j.is_zero()
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |f: &mut fmt::Formatter<'_>, g: &str, e: &BigUint| -> fmt::Result {
            if e.is_one() {
                write!(f, "{g}")
            } else {
                write!(f, "{g}^{e}")
            }
        };
        match (self.i.is_zero(), self.j.is_zero()) {
            (true, true) => write!(f, "1"),
            (false, true) => part(f, "a", &self.i),
            (true, false) => part(f, "b", &self.j),
            (false, false) => {
                part(f, "a", &self.i)?;
                write!(f, " ")?;
                part(f, "b", &self.j)
            }
        }
    }
}

/// A validated presentation together with the constants its group law uses.
#[derive(Debug, Clone)]
pub struct Presentation {
    params: MetacyclicParams,
    kind: Extension,
    pn: BigUint,
    pm: BigUint,
    /// `1 + p^(n-s)` reduced mod `p^n`.
    q: BigUint,
    q_inv: BigUint,
    /// a-exponent of `b^(p^m)`, i.e. `p^(n-r)` reduced mod `p^n`.
    carry: BigUint,
    /// `q^j mod p^n` for every `j < p^m`, kept when `p^m` is small.
    q_table: Option<Vec<BigUint>>,
}

pub type ValidatedPresentation = Presentation;

const Q_TABLE_LIMIT: u64 = 1 << 16;

/// Check the uniquely reduced conditions and build the group law.
///
/// Besides the split and non-split condition lists and the exceptional
/// 2-group guard, abelian tuples (`s = 0`) must have `m <= n`: the
/// swapped tuple presents the same group.
pub fn validate(params: MetacyclicParams) -> Result<Presentation, ValidationError> {
    let MetacyclicParams { p, n, m, r, s } = params;
    if !is_prime(p) {
        return Err(ValidationError::NotPrime(p));
    }
    if n < 1 {
        return Err(ValidationError::NotReduced("n >= 1"));
    }
    if m < 1 {
        return Err(ValidationError::NotReduced("m >= 1"));
    }
    let (n_i, m_i, r_i, s_i) = (n as i64, m as i64, r as i64, s as i64);
    let kind = if r == 0 {
        if s_i >= (m_i + 1).min(n_i) {
            return Err(ValidationError::NotReduced("split: s < min(m+1, n)"));
        }
        Extension::Split
    } else {
        if r_i < (n_i - m_i + 1).max(1) {
            return Err(ValidationError::NotReduced("non-split: r >= max(1, n-m+1)"));
        }
        if r_i >= s_i {
            return Err(ValidationError::NotReduced("non-split: r < s"));
        }
        if r_i > n_i - s_i {
            return Err(ValidationError::NotReduced("non-split: r < n-s+1"));
        }
        Extension::NonSplit
    };
    if p == 2 && n >= 2 && s + 1 >= n {
        return Err(ValidationError::Exceptional2Group);
    }
    if s == 0 && m > n {
        return Err(ValidationError::NotReduced("abelian: s = 0 requires m <= n"));
    }

    let pn = big_pow(p, n);
    let pm = big_pow(p, m);
    let q = (BigUint::one() + big_pow(p, n - s)) % &pn;
    let q_inv = invert_mod(&q, &pn);
    let carry = big_pow(p, n - r) % &pn;
    let q_table = pm.to_u64().filter(|&v| v <= Q_TABLE_LIMIT).map(|len| {
        let mut t = Vec::with_capacity(len as usize);
        let mut x = BigUint::one() % &pn;
        for _ in 0..len {
            t.push(x.clone());
            x = (x * &q) % &pn;
        }
        t
    });
    Ok(Presentation { params, kind, pn, pm, q, q_inv, carry, q_table })
}

fn invert_mod(x: &BigUint, m: &BigUint) -> BigUint {
    use num_bigint::BigInt;
    let g = BigInt::from(x.clone()).extended_gcd(&BigInt::from(m.clone()));
    debug_assert!(g.gcd.is_one() || m.is_one());
    g.x.mod_floor(&BigInt::from(m.clone()))
        .to_biguint()
        .expect("non-negative after mod_floor")
}

impl Presentation {
    pub fn params(&self) -> MetacyclicParams {
        self.params
    }

    pub fn kind(&self) -> Extension {
        self.kind
    }

    pub fn is_abelian(&self) -> bool {
        self.params.s == 0
    }

    /// `|G| = p^(n+m)`.
    pub fn group_order(&self) -> BigUint {
        &self.pn * &self.pm
    }

    /// `|G|` as a machine integer when it fits.
    pub fn order_u64(&self) -> Option<u64> {
        self.group_order().to_u64()
    }

    pub fn a_order(&self) -> &BigUint {
        &self.pn
    }

    pub fn b_normal_range(&self) -> &BigUint {
        &self.pm
    }

    /// The conjugation exponent `1 + p^(n-s)` modulo `p^n`.
    pub fn twist(&self) -> &BigUint {
        &self.q
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement { i: BigUint::zero(), j: BigUint::zero() }
    }

    pub fn a(&self) -> GroupElement {
        self.normal(BigUint::one(), BigUint::zero())
    }

    pub fn b(&self) -> GroupElement {
        self.normal(BigUint::zero(), BigUint::one())
    }

    /// Reduce exponents that are already the normal-form pair modulo the
    /// ranges; `j` must be below `p^m`.
    pub fn normal(&self, i: BigUint, j: BigUint) -> GroupElement {
        assert!(j < self.pm, "b-exponent out of range");
        GroupElement { i: i % &self.pn, j }
    }

    pub fn normal_u64(&self, i: u64, j: u64) -> GroupElement {
        self.normal(BigUint::from(i), BigUint::from(j))
    }

    /// The word `a^i b^j` for arbitrary non-negative exponents.
    pub fn word(&self, i: &BigUint, j: &BigUint) -> GroupElement {
        let left = GroupElement { i: i % &self.pn, j: BigUint::zero() };
        let right = self.power(&self.b(), j);
        self.multiply(&left, &right)
    }

    fn q_pow(&self, j: &BigUint) -> BigUint {
        match (&self.q_table, j.to_usize()) {
            (Some(t), Some(k)) if k < t.len() => t[k].clone(),
            _ => self.q.modpow(j, &self.pn),
        }
    }

    /// `(a^i1 b^j1)(a^i2 b^j2) = a^(i1 + i2 q^j1 + carry * [j1+j2 >= p^m]) b^((j1+j2) mod p^m)`.
    pub fn multiply(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        let mut i = &x.i + (&y.i * self.q_pow(&x.j));
        let mut j = &x.j + &y.j;
        if j >= self.pm {
            j -= &self.pm;
            i += &self.carry;
        }
        GroupElement { i: i % &self.pn, j }
    }

    pub fn inverse(&self, x: &GroupElement) -> GroupElement {
        if x.j.is_zero() {
            let i = (&self.pn - &x.i) % &self.pn;
            return GroupElement { i, j: BigUint::zero() };
        }
        let j = &self.pm - &x.j;
        let base = (&x.i + &self.carry) % &self.pn;
        let neg = (&self.pn - base) % &self.pn;
        let i = (neg * self.q_inv.modpow(&x.j, &self.pn)) % &self.pn;
        GroupElement { i, j }
    }

    pub fn power(&self, x: &GroupElement, e: &BigUint) -> GroupElement {
        let mut acc = self.identity();
        let mut base = x.clone();
        let bits = e.bits();
        for k in 0..bits {
            if e.bit(k) {
                acc = self.multiply(&acc, &base);
            }
            if k + 1 < bits {
                base = self.multiply(&base, &base);
            }
        }
        acc
    }

    pub fn power_u64(&self, x: &GroupElement, e: u64) -> GroupElement {
        self.power(x, &BigUint::from(e))
    }

    /// `g x g^-1`.
    pub fn conjugate(&self, g: &GroupElement, x: &GroupElement) -> GroupElement {
        self.multiply(&self.multiply(g, x), &self.inverse(g))
    }

    /// Order of an element, found by repeated p-th powers.
    pub fn element_order(&self, x: &GroupElement) -> BigUint {
        let p = BigUint::from(self.params.p);
        let mut order = BigUint::one();
        let mut y = x.clone();
        while !y.is_identity() {
            y = self.power(&y, &p);
            order *= &p;
        }
        order
    }

    /// Generator `a^(p^(n-s))` of the derived subgroup.
    pub fn derived_subgroup_generator(&self) -> GroupElement {
        let MetacyclicParams { p, n, s, .. } = self.params;
        self.normal(big_pow(p, n - s), BigUint::zero())
    }

    /// Generators `(a^(p^s), b^(p^s))` of the center.
    pub fn center_generators(&self) -> (GroupElement, GroupElement) {
        let MetacyclicParams { p, s, .. } = self.params;
        let e = big_pow(p, s);
        (self.power(&self.a(), &e), self.power(&self.b(), &e))
    }

    /// All `p^(n+m)` normal forms, a-exponent major.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        let pn = self.pn.to_u64().expect("enumerable group");
        let pm = self.pm.to_u64().expect("enumerable group");
        (0..pn).flat_map(move |i| {
            (0..pm).map(move |j| GroupElement { i: BigUint::from(i), j: BigUint::from(j) })
        })
    }

    /// Position of an element in [`Presentation::elements`] order.
    pub fn index_of(&self, x: &GroupElement) -> usize {
        let (i, j) = x.to_u64_pair().expect("enumerable group");
        let pm = self.pm.to_u64().expect("enumerable group");
        (i * pm + j) as usize
    }
}

/// Every validated tuple with the given primes and `p^(n+m) <= max_order`,
/// ordered by `p`, then `n + m`, then `(n, m, r, s)`.
pub fn validated_tuples(primes: &[u64], max_order: u64) -> Vec<Presentation> {
    let mut out = Vec::new();
    for &p in primes {
        let mut total = 2u32;
        while p.checked_pow(total).is_some_and(|o| o <= max_order) {
            for n in 1..total {
                let m = total - n;
                for r in 0..=n {
                    for s in 0..=n {
                        if let Ok(pres) = validate(MetacyclicParams::new(p, n, m, r, s)) {
                            out.push(pres);
                        }
                    }
                }
            }
            total += 1;
        }
    }
    out
}

/// Primes `p` with `p^2 <= max_order`: the ones that admit a tuple below the bound.
pub fn primes_up_to_square(max_order: u64) -> Vec<u64> {
    (2u64..).take_while(|p| p * p <= max_order).filter(|&p| is_prime(p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(p: u64, n: u32, m: u32, r: u32, s: u32) -> Presentation {
        validate(MetacyclicParams::new(p, n, m, r, s)).unwrap()
    }

    fn el(pres: &Presentation, i: u64, j: u64) -> GroupElement {
        pres.normal_u64(i, j)
    }

    #[test]
    fn accepts_worked_tuples() {
        assert_eq!(g(2, 5, 3, 0, 2).kind(), Extension::Split);
        assert_eq!(g(3, 3, 3, 1, 2).kind(), Extension::NonSplit);
        assert_eq!(g(2, 5, 4, 2, 3).kind(), Extension::NonSplit);
    }

    #[test]
    fn rejections() {
        let v = |p, n, m, r, s| validate(MetacyclicParams::new(p, n, m, r, s)).unwrap_err();
        assert_eq!(v(2, 3, 1, 0, 2), ValidationError::NotReduced("split: s < min(m+1, n)"));
        assert_eq!(v(4, 3, 1, 0, 1), ValidationError::NotPrime(4));
        assert_eq!(v(2, 3, 3, 0, 2), ValidationError::Exceptional2Group);
        assert_eq!(v(2, 4, 3, 0, 3), ValidationError::Exceptional2Group);
        assert_eq!(v(2, 5, 4, 1, 2), ValidationError::NotReduced("non-split: r >= max(1, n-m+1)"));
        assert_eq!(v(3, 3, 2, 1, 2), ValidationError::NotReduced("non-split: r >= max(1, n-m+1)"));
        assert_eq!(v(3, 4, 4, 2, 2), ValidationError::NotReduced("non-split: r < s"));
        assert_eq!(v(3, 1, 2, 0, 0), ValidationError::NotReduced("abelian: s = 0 requires m <= n"));
        assert_eq!(v(3, 0, 2, 0, 0), ValidationError::NotReduced("n >= 1"));
    }

    #[test]
    fn orders() {
        assert_eq!(g(2, 5, 3, 0, 2).group_order(), BigUint::from(256u32));
        assert_eq!(g(3, 3, 3, 1, 2).group_order(), BigUint::from(729u32));
        assert_eq!(g(2, 1, 1, 0, 0).group_order(), BigUint::from(4u32));
    }

    #[test]
    fn products_in_order_512_example() {
        let pres = g(2, 5, 4, 2, 3);
        let ab = el(&pres, 1, 1);
        assert_eq!(pres.multiply(&ab, &ab), el(&pres, 6, 2));
        assert_eq!(pres.multiply(&el(&pres, 0, 15), &pres.b()), el(&pres, 8, 0));
        assert!(pres.power_u64(&el(&pres, 3, 2), 8).is_identity());
        assert!(!pres.power_u64(&el(&pres, 3, 2), 4).is_identity());
    }

    #[test]
    fn defining_relations() {
        for pres in [g(2, 5, 4, 2, 3), g(3, 3, 3, 1, 2), g(5, 2, 2, 0, 1)] {
            let MetacyclicParams { p, n, m, r, s } = pres.params();
            let (a, b) = (pres.a(), pres.b());
            assert!(pres.power(&a, &big_pow(p, n)).is_identity());
            assert_eq!(pres.power(&b, &big_pow(p, m)), pres.power(&a, &big_pow(p, n - r)));
            assert_eq!(pres.conjugate(&b, &a), pres.power(&a, &(BigUint::one() + big_pow(p, n - s))));
        }
    }

    #[test]
    fn derived_and_center() {
        let pres = g(2, 5, 3, 0, 2);
        assert_eq!(pres.derived_subgroup_generator(), el(&pres, 8, 0));
        assert!(g(3, 2, 1, 0, 0).derived_subgroup_generator().is_identity());
        let (z1, z2) = pres.center_generators();
        for z in [z1, z2] {
            for x in [pres.a(), pres.b()] {
                assert_eq!(pres.multiply(&z, &x), pres.multiply(&x, &z));
            }
        }
    }

    #[test]
    fn display() {
        let pres = g(2, 5, 4, 2, 3);
        assert_eq!(el(&pres, 3, 2).to_string(), "a^3 b^2");
        assert_eq!(pres.identity().to_string(), "1");
        assert_eq!(pres.b().to_string(), "b");
    }

    #[test]
    fn inverses_exhaustive() {
        let pres = g(3, 3, 2, 0, 2);
        for x in pres.elements() {
            assert!(pres.multiply(&x, &pres.inverse(&x)).is_identity());
            assert!(pres.multiply(&pres.inverse(&x), &x).is_identity());
        }
    }
}
