//! Orbit census, complex irreducible representations and their characters.
//!
//! All values live in one field `Q(Z)` with `Z = zeta_{p^M}`, `M = max(n, m)`.
//! The fixed primitive `p^n`-th root is `zeta = Z^(p^(M-n))`.
//!
//! A degree `p^t` irreducible is labelled by `(t, l, c)`: `l` is a unit
//! below `p^(n-s)` naming the orbit of `zeta^(l p^(s-t))` under
//! `x -> x^(1+p^(n-s))`, and `c` indexes the `p^(m-t)` admissible `omega`
//! in increasing exponent order.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::arith::{big_phi_pp, big_pow, mod_mul, mod_pow, pow, root_order_level};
use crate::cyclotomic::{integer, CyclotomicNumber};
use crate::matrix::CyclotomicMatrix;
use crate::presentation::{GroupElement, MetacyclicParams, Presentation};
use crate::{Error, Result};

/// Orbits of `x -> x^(1+p^(n-s))` on the `p^n`-th roots of unity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitCensus {
    pub fixed_points: BigUint,
    /// `t -> number of orbits of size p^t`, for `1 <= t <= s`.
    pub per_size: BTreeMap<u32, BigUint>,
}

impl OrbitCensus {
    /// `sum size * count`, which must equal `p^n`.
    pub fn total_mass(&self, p: u64) -> BigUint {
        self.per_size
            .iter()
            .fold(self.fixed_points.clone(), |acc, (t, c)| acc + big_pow(p, *t) * c)
    }
}

pub fn orbit_census(pres: &Presentation) -> OrbitCensus {
    let MetacyclicParams { p, n, s, .. } = pres.params();
    let per_size = (1..=s).map(|t| (t, big_phi_pp(p, n - s))).collect();
    OrbitCensus { fixed_points: big_pow(p, n - s), per_size }
}

/// `|Irr(G)| = p^(n+m-s) + p^(n+m-s-1) - p^(n+m-2s-1)` (just `p^(n+m)` when abelian).
pub fn irrep_count(params: MetacyclicParams) -> BigUint {
    let MetacyclicParams { p, n, m, s, .. } = params;
    if s == 0 {
        return big_pow(p, n + m);
    }
    big_pow(p, n + m - s) + big_pow(p, n + m - s - 1) - big_pow(p, n + m - 2 * s - 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IrrepDescriptor {
    /// `T(a) = zeta^(lambda p^s)`, `T(b) = zeta_{p^m}^omega_exp`.
    Linear { lambda: u64, omega_exp: u64 },
    /// Degree `p^t`; see the module docs.
    Nonlinear { t: u32, l: u64, omega_index: u64 },
}

impl IrrepDescriptor {
    pub const TRIVIAL: IrrepDescriptor = IrrepDescriptor::Linear { lambda: 0, omega_exp: 0 };

    pub fn t(&self) -> u32 {
        match self {
            IrrepDescriptor::Linear { .. } => 0,
            IrrepDescriptor::Nonlinear { t, .. } => *t,
        }
    }
}

impl fmt::Display for IrrepDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrepDescriptor::Linear { lambda, omega_exp } => write!(f, "lin({lambda},{omega_exp})"),
            IrrepDescriptor::Nonlinear { t, l, omega_index } => write!(f, "deg{t}({l},{omega_index})"),
        }
    }
}

/// Machine-sized constants shared by every descriptor of one group.
#[derive(Debug, Clone)]
pub struct RepContext {
    pub params: MetacyclicParams,
    /// Working level `M = max(n, m)`.
    pub level: u32,
    pub pn: u64,
    pub pm: u64,
    /// `p^M`.
    pub pk: u64,
    /// `p^(n-s)`.
    pub pns: u64,
    /// `1 + p^(n-s)` mod `p^n`.
    pub q: u64,
}

impl RepContext {
    pub fn new(pres: &Presentation) -> Result<Self> {
        let params = pres.params();
        let MetacyclicParams { p, n, m, s, .. } = params;
        if pres.order_u64().is_none_or(|o| o > 1 << 40) {
            return Err(Error::TooLarge(format!("|G| = {}^{}", p, n + m)));
        }
        let level = n.max(m);
        let pn = pow(p, n);
        Ok(RepContext {
            params,
            level,
            pn,
            pm: pow(p, m),
            pk: pow(p, level),
            pns: pow(p, n - s),
            q: (1 + pow(p, n - s)) % pn,
        })
    }

    fn p(&self) -> u64 {
        self.params.p
    }

    /// Exponent of `zeta = zeta_{p^n}` expressed in `Z`.
    fn zeta_scale(&self) -> u64 {
        pow(self.p(), self.level - self.params.n)
    }

    fn omega_step(&self, t: u32) -> u64 {
        pow(self.p(), self.level - self.params.m + t)
    }

    fn omega_base(&self, t: u32, l: u64) -> u64 {
        let MetacyclicParams { p, m, r, s, .. } = self.params;
        mod_mul(l, pow(p, self.level + s - r - m), self.omega_step(t))
    }

    pub fn degree(&self, d: &IrrepDescriptor) -> u64 {
        pow(self.p(), d.t())
    }

    /// Exponent `e` with `T(b^(p^t)) = Z^e I`: the `omega` of the descriptor.
    pub fn omega_exponent(&self, d: &IrrepDescriptor) -> u64 {
        match *d {
            IrrepDescriptor::Linear { omega_exp, .. } => omega_exp * pow(self.p(), self.level - self.params.m),
            IrrepDescriptor::Nonlinear { t, l, omega_index } => {
                self.omega_base(t, l) + omega_index * self.omega_step(t)
            }
        }
    }

    /// Exponent of `zeta^(x p^s)` in `Z`, where `x` is `lambda` or `l`; this is
    /// `T(a)` for linear descriptors and `chi(a^(p^t)) / p^t` otherwise.
    pub fn a_exponent(&self, d: &IrrepDescriptor) -> u64 {
        let x = match *d {
            IrrepDescriptor::Linear { lambda, .. } => lambda,
            IrrepDescriptor::Nonlinear { l, .. } => l,
        };
        mod_mul(mod_mul(x, pow(self.p(), self.params.s), self.pn), self.zeta_scale(), self.pk)
    }

    /// The `nu` such that the character values generate `Q(zeta_{p^nu})`.
    pub fn root_level(&self, d: &IrrepDescriptor) -> u32 {
        root_order_level(self.a_exponent(d), self.p(), self.level)
            .max(root_order_level(self.omega_exponent(d), self.p(), self.level))
    }

    pub fn check(&self, d: &IrrepDescriptor) -> Result<()> {
        let MetacyclicParams { p, m, s, .. } = self.params;
        let ok = match *d {
            IrrepDescriptor::Linear { lambda, omega_exp } => lambda < self.pns && omega_exp < self.pm,
            IrrepDescriptor::Nonlinear { t, l, omega_index } => {
                (1..=s).contains(&t) && l < self.pns && l % p != 0 && omega_index < pow(p, m - t)
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidDescriptor(d.to_string()))
        }
    }

    /// Every descriptor: linear ones first, then by `t`, `l`, `omega_index`.
    pub fn descriptors(&self) -> Vec<IrrepDescriptor> {
        let MetacyclicParams { p, m, s, .. } = self.params;
        let mut out = Vec::new();
        for lambda in 0..self.pns {
            for omega_exp in 0..self.pm {
                out.push(IrrepDescriptor::Linear { lambda, omega_exp });
            }
        }
        for t in 1..=s {
            for l in (1..self.pns).filter(|l| l % p != 0) {
                for omega_index in 0..pow(p, m - t) {
                    out.push(IrrepDescriptor::Nonlinear { t, l, omega_index });
                }
            }
        }
        out
    }

    /// Apply `zeta -> zeta^u` (for a unit `u` mod `p^M`) to a descriptor.
    pub fn galois_act(&self, d: &IrrepDescriptor, u: u64) -> IrrepDescriptor {
        match *d {
            IrrepDescriptor::Linear { lambda, omega_exp } => IrrepDescriptor::Linear {
                lambda: mod_mul(u, lambda, self.pns),
                omega_exp: mod_mul(u, omega_exp, self.pm),
            },
            IrrepDescriptor::Nonlinear { t, l, .. } => {
                let e = mod_mul(u, self.omega_exponent(d), self.pk);
                let l = mod_mul(u, l, self.pns);
                let base = self.omega_base(t, l);
                let step = self.omega_step(t);
                debug_assert_eq!((e + self.pk - base) % step, 0);
                let omega_index = ((e + self.pk - base) % self.pk) / step;
                IrrepDescriptor::Nonlinear { t, l, omega_index }
            }
        }
    }

    /// `chi(a^i b^j) = coef * Z^exp`, or `None` when the value is zero.
    pub fn character_monomial(&self, d: &IrrepDescriptor, i: u64, j: u64) -> Option<(u64, u64)> {
        let scale = self.zeta_scale();
        match *d {
            IrrepDescriptor::Linear { lambda, omega_exp } => {
                let za = mod_mul(mod_mul(lambda * pow(self.p(), self.params.s) % self.pn, i, self.pn), scale, self.pk);
                let zb = mod_mul(mod_mul(omega_exp, j, self.pm), pow(self.p(), self.level - self.params.m), self.pk);
                Some((1, (za + zb) % self.pk))
            }
            IrrepDescriptor::Nonlinear { t, l, .. } => {
                let pt = pow(self.p(), t);
                if !i.is_multiple_of(pt) || !j.is_multiple_of(pt) {
                    return None;
                }
                let za = mod_mul(mod_mul(i / pt, l * pow(self.p(), self.params.s) % self.pn, self.pn), scale, self.pk);
                let zb = mod_mul(j / pt, self.omega_exponent(d), self.pk);
                Some((pt, (za + zb) % self.pk))
            }
        }
    }

    pub fn character_value_at(&self, d: &IrrepDescriptor, i: u64, j: u64) -> CyclotomicNumber {
        match self.character_monomial(d, i, j) {
            None => CyclotomicNumber::zero(self.p(), self.level),
            Some((c, e)) => CyclotomicNumber::monomial(self.p(), self.level, integer(c as i64), e),
        }
    }
}

pub fn enumerate_irreps(pres: &Presentation) -> Result<Vec<IrrepDescriptor>> {
    Ok(RepContext::new(pres)?.descriptors())
}

fn exponents(g: &GroupElement) -> Result<(u64, u64)> {
    g.to_u64_pair().ok_or_else(|| Error::TooLarge(format!("element {g}")))
}

/// Closed-form character value `chi(g)` at the working level.
pub fn character_value(pres: &Presentation, d: &IrrepDescriptor, g: &GroupElement) -> Result<CyclotomicNumber> {
    let ctx = RepContext::new(pres)?;
    ctx.check(d)?;
    let (i, j) = exponents(g)?;
    Ok(ctx.character_value_at(d, i, j))
}

/// An explicit matrix representation afforded by a descriptor.
#[derive(Debug, Clone)]
pub struct ComplexIrrep {
    pub descriptor: IrrepDescriptor,
    pub degree: u64,
    /// Diagonal, entries `zeta^(q^j l p^(s-t))`.
    pub mat_a: CyclotomicMatrix,
    /// Cyclic shift: ones on the superdiagonal, `omega` in the bottom-left corner.
    pub mat_b: CyclotomicMatrix,
}

pub fn build_complex_rep(pres: &Presentation, d: &IrrepDescriptor) -> Result<ComplexIrrep> {
    let ctx = RepContext::new(pres)?;
    ctx.check(d)?;
    let (p, k) = (ctx.p(), ctx.level);
    let root = |e: u64| CyclotomicNumber::root_of_unity(p, k, e as i64);
    let (mat_a, mat_b) = match *d {
        IrrepDescriptor::Linear { .. } => (
            CyclotomicMatrix::diagonal(vec![root(ctx.a_exponent(d))]),
            CyclotomicMatrix::diagonal(vec![root(ctx.omega_exponent(d))]),
        ),
        IrrepDescriptor::Nonlinear { t, l, .. } => {
            let deg = pow(p, t) as usize;
            let start = mod_mul(l, pow(p, ctx.params.s - t), ctx.pn);
            let diag = (0..deg as u64)
                .map(|j| root(mod_mul(mod_mul(mod_pow(ctx.q, j, ctx.pn), start, ctx.pn), ctx.zeta_scale(), ctx.pk)))
                .collect();
            let mut b = CyclotomicMatrix::zero(deg);
            for row in 0..deg - 1 {
                b.set(row, row + 1, CyclotomicNumber::one(p, k));
            }
            b.set(deg - 1, 0, root(ctx.omega_exponent(d)));
            (CyclotomicMatrix::diagonal(diag), b)
        }
    };
    Ok(ComplexIrrep { descriptor: *d, degree: ctx.degree(d), mat_a, mat_b })
}

impl ComplexIrrep {
    fn one(&self) -> CyclotomicNumber {
        let x = self.mat_a.get(0, 0).expect("mat_a is invertible");
        CyclotomicNumber::one(x.prime(), x.level())
    }

    /// `T(a^i b^j) = T(a)^i T(b)^j`.
    pub fn evaluate(&self, g: &GroupElement) -> CyclotomicMatrix {
        let one = self.one();
        self.mat_a.pow(&g.i, &one).mul(&self.mat_b.pow(&g.j, &one))
    }

    /// The three defining relations, checked exactly on the matrices.
    pub fn satisfies_relations(&self, pres: &Presentation) -> bool {
        relations_hold(&self.mat_a, &self.mat_b, pres, &self.one())
    }
}

/// `A^(p^n) = I`, `B^(p^m) = A^(p^(n-r))`, `B A = A^(1+p^(n-s)) B`.
pub fn relations_hold<T: crate::matrix::Entry>(
    a: &crate::matrix::SparseMatrix<T>,
    b: &crate::matrix::SparseMatrix<T>,
    pres: &Presentation,
    one: &T,
) -> bool {
    let MetacyclicParams { p, n, m, r, s } = pres.params();
    let twist = BigUint::one() + big_pow(p, n - s);
    a.pow(&big_pow(p, n), one).is_identity(one)
        && b.pow(&big_pow(p, m), one) == a.pow(&big_pow(p, n - r), one)
        && b.mul(a) == a.pow(&twist, one).mul(b)
}

/// Number of descriptors of each degree exponent `t`.
pub fn degree_census(pres: &Presentation) -> BTreeMap<u32, BigUint> {
    let MetacyclicParams { p, n, m, s, .. } = pres.params();
    let mut out = BTreeMap::from([(0, big_pow(p, n + m - s))]);
    for t in 1..=s {
        out.insert(t, big_phi_pp(p, n - s) * big_pow(p, m - t));
    }
    out
}

/// `sum deg^2` from the census; equals `|G|`.
pub fn degree_square_sum(pres: &Presentation) -> BigUint {
    let p = pres.params().p;
    degree_census(pres)
        .into_iter()
        .map(|(t, c)| big_pow(p, 2 * t) * c)
        .sum()
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::validate;

    fn g(p: u64, n: u32, m: u32, r: u32, s: u32) -> Presentation {
        validate(MetacyclicParams::new(p, n, m, r, s)).unwrap()
    }

    #[test]
    fn censuses() {
        let c = orbit_census(&g(2, 5, 3, 0, 2));
        assert_eq!(c.fixed_points, BigUint::from(8u32));
        assert_eq!(c.per_size[&1], BigUint::from(4u32));
        assert_eq!(c.per_size[&2], BigUint::from(4u32));
        assert_eq!(c.total_mass(2), BigUint::from(32u32));
        let c = orbit_census(&g(3, 3, 3, 1, 2));
        assert_eq!((c.fixed_points.clone(), c.per_size[&1].clone()), (3u32.into(), 2u32.into()));
        assert!(orbit_census(&g(3, 2, 1, 0, 0)).per_size.is_empty());
    }

    #[test]
    fn counts() {
        let pres = g(2, 5, 3, 0, 2);
        let ds = enumerate_irreps(&pres).unwrap();
        assert_eq!(ds.len(), 88);
        assert_eq!(irrep_count(pres.params()), BigUint::from(88u32));
        assert_eq!(ds.iter().filter(|d| d.t() == 1).count(), 16);
        assert_eq!(ds.iter().filter(|d| d.t() == 2).count(), 8);
        assert_eq!(enumerate_irreps(&g(3, 3, 3, 1, 2)).unwrap().len(), 105);
        assert_eq!(enumerate_irreps(&g(3, 2, 1, 0, 0)).unwrap().len(), 27);
        assert_eq!(degree_square_sum(&pres), BigUint::from(256u32));
    }

    #[test]
    fn trivial_rep() {
        let pres = g(2, 5, 3, 0, 2);
        let t = build_complex_rep(&pres, &IrrepDescriptor::TRIVIAL).unwrap();
        assert!(t.mat_a.is_identity(&CyclotomicNumber::one(2, 5)));
        assert!(t.mat_b.is_identity(&CyclotomicNumber::one(2, 5)));
    }

    #[test]
    fn omega_solves_its_equation() {
        let pres = g(2, 5, 4, 2, 3);
        let ctx = RepContext::new(&pres).unwrap();
        for d in ctx.descriptors().iter().filter(|d| d.t() == 3) {
            let IrrepDescriptor::Nonlinear { l, .. } = *d else { unreachable!() };
            let w = CyclotomicNumber::root_of_unity(2, 5, ctx.omega_exponent(d) as i64);
            assert_eq!(w.pow(2), CyclotomicNumber::root_of_unity(2, 5, (8 * l) as i64));
            let rep = build_complex_rep(&pres, d).unwrap();
            assert!(rep.satisfies_relations(&pres));
        }
    }

    #[test]
    fn character_shortcuts() {
        let pres = g(3, 3, 3, 1, 2);
        let ctx = RepContext::new(&pres).unwrap();
        for d in ctx.descriptors() {
            let deg = ctx.degree(&d);
            assert_eq!(ctx.character_value_at(&d, 0, 0), CyclotomicNumber::from_integer(3, 3, deg as i64));
            if let IrrepDescriptor::Nonlinear { t, l, .. } = d {
                let pt = pow(3, t);
                assert!(ctx.character_value_at(&d, 1, 0).is_zero());
                let expect = CyclotomicNumber::root_of_unity(3, 3, (l * 9) as i64).scale(&integer(pt as i64));
                assert_eq!(ctx.character_value_at(&d, pt, 0), expect);
            }
        }
    }

    #[test]
    fn rejects_foreign_descriptor() {
        let pres = g(2, 5, 3, 0, 2);
        let d = IrrepDescriptor::Nonlinear { t: 1, l: 2, omega_index: 0 };
        assert!(matches!(character_value(&pres, &d, &pres.a()), Err(Error::InvalidDescriptor(_))));
    }
}
