//! Galois classes, rational characters and rational matrix representations.
//!
//! Every Schur index is 1 in this family, so each Galois class of complex
//! irreducibles gives one rational irreducible of degree
//! `chi(1) * [Q(chi) : Q]` with character `Omega(chi) = sum of the class`.
//!
//! Matrices are built by induction from a linear character of an abelian
//! subgroup (a required pair) realised by companion matrices of cyclotomic
//! polynomials. Non-faithful classes go through the faithful quotient.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{big_phi_pp, big_pow, mod_mul, phi_pp, pow, unit_group_generators, units};
use crate::complex_reps::{IrrepDescriptor, RepContext};
use crate::cyclotomic::{cyclotomic_polynomial, integer, CyclotomicNumber, Rational};
use crate::matrix::RationalMatrix;
use crate::presentation::{validate, GroupElement, MetacyclicParams, Presentation};
use crate::{Error, Result};

/// An orbit of complex irreducibles under `Gal(Q(zeta_{p^M}) / Q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisClass {
    /// Sorted; the first member is the class representative.
    pub members: Vec<IrrepDescriptor>,
    /// Complex degree `p^t`.
    pub t: u32,
    /// The values generate `Q(zeta_{p^nu})` with `nu = root_level`.
    pub root_level: u32,
    /// Smallest `lambda` with `Q(chi) = Q(zeta_{p^lambda})`.
    pub conductor_level: u32,
}

impl GaloisClass {
    pub fn representative(&self) -> &IrrepDescriptor {
        &self.members[0]
    }

    pub fn degree(&self, p: u64) -> u64 {
        pow(p, self.t)
    }

    pub fn conductor(&self, p: u64) -> u64 {
        pow(p, self.conductor_level)
    }

    /// `chi(1) * phi(conductor)`.
    pub fn rational_degree(&self, p: u64) -> u64 {
        pow(p, self.t) * phi_pp(p, self.conductor_level)
    }

    /// The `theta` with rational degree `phi(p^theta)`.
    pub fn theta(&self) -> u32 {
        self.t + self.root_level
    }

    pub fn is_trivial(&self) -> bool {
        self.members == [IrrepDescriptor::TRIVIAL]
    }
}

pub fn galois_classes(pres: &Presentation) -> Result<Vec<GaloisClass>> {
    let ctx = RepContext::new(pres)?;
    Ok(classes_in(&ctx))
}

pub(crate) fn classes_in(ctx: &RepContext) -> Vec<GaloisClass> {
    let p = ctx.params.p;
    let gens = unit_group_generators(p, ctx.level);
    let mut seen: HashSet<IrrepDescriptor> = HashSet::new();
    let mut out = Vec::new();
    for d in ctx.descriptors() {
        if seen.contains(&d) {
            continue;
        }
        let mut orbit = vec![d];
        seen.insert(d);
        let mut k = 0;
        while k < orbit.len() {
            let x = orbit[k];
            for &u in &gens {
                let y = ctx.galois_act(&x, u);
                if seen.insert(y) {
                    orbit.push(y);
                }
            }
            k += 1;
        }
        orbit.sort();
        let root = |e: u64| CyclotomicNumber::root_of_unity(p, ctx.level, e as i64);
        let conductor_level = root(ctx.a_exponent(&d))
            .conductor_level()
            .max(root(ctx.omega_exponent(&d)).conductor_level());
        out.push(GaloisClass { members: orbit, t: d.t(), root_level: ctx.root_level(&d), conductor_level });
    }
    out
}

/// Non-trivial rational irreducible counts keyed by `theta`, where the
/// rational degree is `phi(p^theta)`, from the closed-form census.
pub fn rational_irrep_counts(pres: &Presentation) -> BTreeMap<u32, BigUint> {
    let MetacyclicParams { p, n, m, r, s } = pres.params();
    let mut c: BTreeMap<u32, BigUint> = BTreeMap::new();
    let mut add = |theta: u32, v: BigUint| {
        if !v.is_zero() {
            *c.entry(theta).or_default() += v;
        }
    };
    let pp = |e: u32| big_pow(p, e);
    let linear = |lam: u32| pp(lam - 1) * BigUint::from(p + 1);
    if n - s >= m {
        for lam in 1..=m {
            add(lam, linear(lam));
        }
        for lam in m + 1..=n - s {
            add(lam, pp(m));
        }
        for t in 1..=s {
            add(n - s + t, pp(m - t));
        }
    } else {
        let k = m - (n - s);
        for lam in 1..=n - s {
            add(lam, linear(lam));
        }
        let mixed = |t: u32| pp(n - s) * 2u32 + big_phi_pp(p, n - s) * (t - 1);
        if k <= s - r {
            for t in 1..=k {
                add(n - s + t, mixed(t));
            }
            for t in k + 1..=s {
                add(n - s + t, pp(m - t));
            }
        } else {
            for t in 1..=s - r {
                add(n - s + t, mixed(t));
            }
            for lam in n - r + 1..=m {
                add(lam, pp(n - s) + big_phi_pp(p, n - s) * (s - r));
            }
            for t in s - r + 1..=s {
                add(m + r - s + t, pp(n - r - t));
            }
        }
    }
    c
}

/// The same census read off an explicit list of classes.
pub fn counts_from_classes(classes: &[GaloisClass]) -> BTreeMap<u32, BigUint> {
    let mut c: BTreeMap<u32, BigUint> = BTreeMap::new();
    for class in classes.iter().filter(|c| !c.is_trivial()) {
        *c.entry(class.theta()).or_default() += 1u32;
    }
    c
}

/// `Omega(chi)(a^i b^j) = sum over u in (Z/p^lambda)^x of chi(g)^sigma_u`.
pub(crate) fn omega_value_in(ctx: &RepContext, class: &GaloisClass, i: u64, j: u64) -> Result<Rational> {
    let d = class.representative();
    let Some((coef, e)) = ctx.character_monomial(d, i, j) else {
        return Ok(Rational::zero());
    };
    let p = ctx.params.p;
    let mut acc: BTreeMap<u64, Rational> = BTreeMap::new();
    for u in units(p, class.conductor_level) {
        *acc.entry(mod_mul(e, u, ctx.pk)).or_insert_with(Rational::zero) += integer(coef as i64);
    }
    CyclotomicNumber::from_exponent_map(p, ctx.level, acc)
        .to_rational()
        .ok_or_else(|| Error::Mismatch(format!("Omega of {d} is not rational at a^{i} b^{j}")))
}

pub fn omega_value(pres: &Presentation, class: &GaloisClass, g: &GroupElement) -> Result<Rational> {
    let ctx = RepContext::new(pres)?;
    let (i, j) = g.to_u64_pair().ok_or_else(|| Error::TooLarge(g.to_string()))?;
    omega_value_in(&ctx, class, i, j)
}

/// `Omega(chi)` on every element, in [`Presentation::elements`] order.
#[derive(Debug, Clone)]
pub struct RationalCharacter {
    pub class: GaloisClass,
    pub values: Vec<Rational>,
}

pub fn omega_character(pres: &Presentation, class: &GaloisClass) -> Result<RationalCharacter> {
    let ctx = RepContext::new(pres)?;
    let mut values = Vec::with_capacity((ctx.pn * ctx.pm) as usize);
    for i in 0..ctx.pn {
        for j in 0..ctx.pm {
            values.push(omega_value_in(&ctx, class, i, j)?);
        }
    }
    Ok(RationalCharacter { class: class.clone(), values })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaithfulKind {
    /// `s < m` and `n - r = s`.
    G1,
    /// `s = m` (then `r = 0`).
    G2,
    NotFaithful,
}

/// Whether the group has a faithful irreducible character, i.e. a cyclic center.
pub fn classify_faithful(params: MetacyclicParams) -> FaithfulKind {
    let MetacyclicParams { n, m, r, s, .. } = params;
    if s == 0 {
        FaithfulKind::NotFaithful
    } else if s < m && n - r == s {
        FaithfulKind::G1
    } else if s == m {
        FaithfulKind::G2
    } else {
        FaithfulKind::NotFaithful
    }
}

/// Faithful classes have degree `p^s` and a central character of order `|Z(G)|`.
pub fn is_faithful_class(params: MetacyclicParams, class: &GaloisClass) -> bool {
    let MetacyclicParams { n, m, s, .. } = params;
    classify_faithful(params) != FaithfulKind::NotFaithful && class.t == s && class.root_level == n + m - 2 * s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairShape {
    /// `G1`, `m >= 2s`: `H = <a, b^(p^s)>`.
    G1Wide,
    /// `G1`, `m < 2s`: `H = <a^(p^(2s-m)), a^mu b^(p^(m-s))>`.
    G1Narrow,
    /// `G2`: `H = <a^(p^s), b>`.
    G2,
}

/// An abelian subgroup `H` with a linear character `psi` inducing a faithful class.
#[derive(Debug, Clone)]
pub struct RequiredPair {
    pub shape: PairShape,
    pub subgroup_gens: Vec<GroupElement>,
    /// `psi(gen_k) = zeta_{p^psi_level}^(psi_exps[k])`.
    pub psi_exps: Vec<u64>,
    pub psi_level: u32,
    /// Right coset representatives: `G` is the disjoint union of `H x_i`.
    pub transversal: Vec<GroupElement>,
    pub mu: Option<BigInt>,
    pub k_cong: Option<BigInt>,
    pub l_cong: Option<BigInt>,
}

impl RequiredPair {
    pub fn psi_values(&self, p: u64) -> Vec<CyclotomicNumber> {
        self.psi_exps
            .iter()
            .map(|&e| CyclotomicNumber::root_of_unity(p, self.psi_level, e as i64))
            .collect()
    }
}

/// `(k, l, mu)` for the `m < 2s` case of a `G1` group.
pub fn congruence_data(params: MetacyclicParams) -> Result<(BigInt, BigInt, BigInt)> {
    let MetacyclicParams { p, n, m, s, .. } = params;
    if !(s < m && m < 2 * s) {
        return Err(Error::OutOfRange(format!("needs s < m < 2s, got m = {m}, s = {s}")));
    }
    if big_pow(p, m) > BigUint::from(1u32 << 20) {
        return Err(Error::TooLarge(format!("(1+p^(n-s))^(p^m) with p^m = {p}^{m}")));
    }
    let q = BigInt::from(1u32) + BigInt::from(big_pow(p, n - s));
    let qp = |e: u32| num_traits::pow(q.clone(), big_pow(p, e).to_usize().unwrap()) - BigInt::one();
    let base = qp(m - s);
    let exact = |num: BigInt, den: BigInt| -> Result<BigInt> {
        let (quo, rem) = num.div_rem(&den);
        if rem.is_zero() {
            Ok(quo)
        } else {
            Err(Error::Mismatch("inexact division in the congruence data".into()))
        }
    };
    let k = exact(qp(m), &base * BigInt::from(big_pow(p, s)))?;
    let l = exact(qp(s), &base * BigInt::from(big_pow(p, 2 * s - m)))?;
    let mod_hi = BigInt::from(big_pow(p, n + m - 2 * s));
    let g = l.extended_gcd(&mod_hi);
    if !g.gcd.is_one() {
        return Err(Error::NoSolution(format!("l = {l} is not a unit mod {mod_hi}")));
    }
    let mu = (-g.x).mod_floor(&mod_hi);
    let mod_lo = BigInt::from(big_pow(p, n - s));
    if !(&mu * &k + BigInt::one()).mod_floor(&mod_lo).is_zero() {
        return Err(Error::NoSolution(format!("mu = {mu} fails mu k = -1 mod {mod_lo}")));
    }
    Ok((k, l, mu))
}

pub fn required_pair(pres: &Presentation, class: &GaloisClass) -> Result<RequiredPair> {
    let params = pres.params();
    let MetacyclicParams { p, n, m, s, .. } = params;
    let kind = classify_faithful(params);
    if !is_faithful_class(params, class) {
        return Err(Error::NotFaithful(format!("class of {} in {params}", class.representative())));
    }
    let a = pres.a();
    let b = pres.b();
    let ps = big_pow(p, s);
    let b_trans: Vec<GroupElement> = (0..pow(p, s)).map(|i| pres.power_u64(&b, i)).collect();
    let pair = match kind {
        FaithfulKind::G1 if m >= 2 * s => {
            let d = n + m - 2 * s;
            RequiredPair {
                shape: PairShape::G1Wide,
                subgroup_gens: vec![a, pres.power(&b, &ps)],
                psi_exps: vec![pow(p, d - n), 1],
                psi_level: d,
                transversal: b_trans,
                mu: None,
                k_cong: None,
                l_cong: None,
            }
        }
        FaithfulKind::G1 => {
            let (k, l, mu) = congruence_data(params)?;
            let h1 = pres.power(&a, &big_pow(p, 2 * s - m));
            let mu_u = mu.to_biguint().expect("mu is reduced");
            let h2 = pres.multiply(&pres.power(&a, &mu_u), &pres.power(&b, &big_pow(p, m - s)));
            RequiredPair {
                shape: PairShape::G1Narrow,
                subgroup_gens: vec![h1, h2],
                psi_exps: vec![1, 0],
                psi_level: n + m - 2 * s,
                transversal: b_trans,
                mu: Some(mu),
                k_cong: Some(k),
                l_cong: Some(l),
            }
        }
        FaithfulKind::G2 => RequiredPair {
            shape: PairShape::G2,
            subgroup_gens: vec![pres.power(&a, &ps), b],
            psi_exps: vec![1, 0],
            psi_level: n - s,
            transversal: (0..pow(p, s)).map(|i| pres.power_u64(&a, i)).collect(),
            mu: None,
            k_cong: None,
            l_cong: None,
        },
        FaithfulKind::NotFaithful => unreachable!("checked above"),
    };
    Ok(pair)
}

/// `psi` on every element of `H`, as exponents of `zeta_{p^psi_level}`.
///
/// Fails if `psi` is not well defined or `[G : H]` differs from the transversal size.
pub fn psi_table(pres: &Presentation, pair: &RequiredPair) -> Result<HashMap<GroupElement, u64>> {
    let modulus = pow(pres.params().p, pair.psi_level);
    let mut table = HashMap::from([(pres.identity(), 0u64)]);
    let mut frontier = vec![pres.identity()];
    while let Some(h) = frontier.pop() {
        let e = table[&h];
        for (g, c) in pair.subgroup_gens.iter().zip(&pair.psi_exps) {
            let y = pres.multiply(&h, g);
            let ey = (e + c) % modulus;
            match table.get(&y) {
                Some(&old) if old != ey => {
                    return Err(Error::Mismatch(format!("psi is not well defined at {y}")));
                }
                Some(_) => {}
                None => {
                    table.insert(y.clone(), ey);
                    frontier.push(y);
                }
            }
        }
    }
    let index = BigUint::from(pair.transversal.len());
    if BigUint::from(table.len()) * index != pres.group_order() {
        return Err(Error::Mismatch(format!("|H| = {} has the wrong index", table.len())));
    }
    Ok(table)
}

/// `psi^G(g) = sum_i psi°(x_i g x_i^-1)`, summed explicitly.
pub fn induced_character(
    pres: &Presentation,
    pair: &RequiredPair,
    table: &HashMap<GroupElement, u64>,
    g: &GroupElement,
) -> CyclotomicNumber {
    let p = pres.params().p;
    let mut acc: BTreeMap<u64, Rational> = BTreeMap::new();
    for x in &pair.transversal {
        let y = pres.multiply(&pres.multiply(x, g), &pres.inverse(x));
        if let Some(&e) = table.get(&y) {
            *acc.entry(e).or_insert_with(Rational::zero) += integer(1);
        }
    }
    CyclotomicNumber::from_exponent_map(p, pair.psi_level, acc)
}

/// Companion matrix of `Phi_{p^k}`: ones on the superdiagonal and the
/// negated low coefficients of `Phi_{p^k}` along the bottom row.
pub fn companion_rational_rep(p: u64, k: u32) -> RationalMatrix {
    let phi = cyclotomic_polynomial(p, k);
    let dim = phi.len() - 1;
    let mut c = RationalMatrix::zero(dim);
    for i in 0..dim - 1 {
        c.set(i, i + 1, integer(1));
    }
    for (j, &coef) in phi[..dim].iter().enumerate() {
        c.set(dim - 1, j, integer(-coef));
    }
    c
}

/// Integral rational matrices for the images of `a` and `b`.
#[derive(Debug, Clone)]
pub struct RationalMatrixRep {
    pub mat_a: RationalMatrix,
    pub mat_b: RationalMatrix,
    pub degree: usize,
}

impl RationalMatrixRep {
    fn one() -> Rational {
        integer(1)
    }

    pub fn evaluate(&self, g: &GroupElement) -> RationalMatrix {
        self.mat_a.pow(&g.i, &Self::one()).mul(&self.mat_b.pow(&g.j, &Self::one()))
    }

    pub fn satisfies_relations(&self, pres: &Presentation) -> bool {
        crate::complex_reps::relations_hold(&self.mat_a, &self.mat_b, pres, &Self::one())
    }

    pub fn is_integral(&self) -> bool {
        self.mat_a.is_integral() && self.mat_b.is_integral()
    }

    /// Trace at every element, in [`Presentation::elements`] order.
    pub fn trace_function(&self, pres: &Presentation) -> Result<Vec<Rational>> {
        let big = || Error::TooLarge("trace table".into());
        let pn = pres.a_order().to_u64().ok_or_else(big)?;
        let pm = pres.b_normal_range().to_u64().ok_or_else(big)?;
        let powers = |x: &RationalMatrix, count: u64| {
            let mut out = Vec::with_capacity(count as usize);
            let mut cur = RationalMatrix::identity(self.degree, Self::one());
            for _ in 0..count {
                let next = cur.mul(x);
                out.push(cur);
                cur = next;
            }
            out
        };
        let a_pows = powers(&self.mat_a, pn);
        let b_pows = powers(&self.mat_b, pm);
        let mut out = Vec::with_capacity((pn * pm) as usize);
        for x in &a_pows {
            for y in &b_pows {
                out.push(x.trace_of_product(y, Rational::zero()));
            }
        }
        Ok(out)
    }
}

/// Induce the companion-matrix realisation of `psi` along the transversal:
/// block `(i, j)` of `g` is `Psi°(x_i g x_j^-1)`.
pub fn induce_rational_rep(pres: &Presentation, pair: &RequiredPair) -> Result<RationalMatrixRep> {
    let p = pres.params().p;
    let table = psi_table(pres, pair)?;
    let c = companion_rational_rep(p, pair.psi_level);
    let block = c.dim();
    let period = pow(p, pair.psi_level);
    let mut c_pows = Vec::with_capacity(period as usize);
    let mut cur = RationalMatrix::identity(block, integer(1));
    for _ in 0..period {
        let next = cur.mul(&c);
        c_pows.push(cur);
        cur = next;
    }
    let inverses: Vec<GroupElement> = pair.transversal.iter().map(|x| pres.inverse(x)).collect();
    let idx = pair.transversal.len();
    let build = |g: &GroupElement| {
        let mut out = RationalMatrix::zero(idx * block);
        for (i, x) in pair.transversal.iter().enumerate() {
            let xg = pres.multiply(x, g);
            for (j, xj_inv) in inverses.iter().enumerate() {
                if let Some(&e) = table.get(&pres.multiply(&xg, xj_inv)) {
                    for (r, col, v) in c_pows[e as usize].entries() {
                        out.set(i * block + r, j * block + col, v.clone());
                    }
                }
            }
        }
        out
    };
    Ok(RationalMatrixRep { mat_a: build(&pres.a()), mat_b: build(&pres.b()), degree: idx * block })
}

/// `ker chi = {g : chi(g) = chi(1)}`, by enumeration.
pub fn kernel_of(pres: &Presentation, class: &GaloisClass) -> Result<Vec<GroupElement>> {
    let ctx = RepContext::new(pres)?;
    let d = class.representative();
    let deg = ctx.degree(d);
    let mut out = Vec::new();
    for i in 0..ctx.pn {
        for j in 0..ctx.pm {
            if ctx.character_monomial(d, i, j) == Some((deg, 0)) {
                out.push(pres.normal_u64(i, j));
            }
        }
    }
    Ok(out)
}

/// A reduced presentation of `G/K` with the images of `a` and `b`.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    pub quotient: Presentation,
    pub image_a: GroupElement,
    pub image_b: GroupElement,
}

fn smallest_power_in(pres: &Presentation, x: &GroupElement, set: &HashSet<GroupElement>) -> BigUint {
    let p = BigUint::from(pres.params().p);
    let mut order = BigUint::one();
    let mut y = x.clone();
    while !set.contains(&y) {
        y = pres.power(&y, &p);
        order *= &p;
    }
    order
}

/// Well-defined surjective homomorphism `G -> Q` with kernel `K`, if
/// `a -> image_a`, `b -> image_b` gives one.
fn is_witness(
    g: &Presentation,
    q: &Presentation,
    kernel: &[GroupElement],
    image_a: &GroupElement,
    image_b: &GroupElement,
) -> bool {
    let MetacyclicParams { p, n, m, r, .. } = g.params();
    let lhs = q.conjugate(image_b, image_a);
    if lhs != q.power(image_a, g.twist()) {
        return false;
    }
    if q.power(image_b, &big_pow(p, m)) != q.power(image_a, &big_pow(p, n - r)) {
        return false;
    }
    let a_group: HashSet<GroupElement> = {
        let ord = q.element_order(image_a).to_u64().unwrap();
        let mut set = HashSet::new();
        let mut y = q.identity();
        for _ in 0..ord {
            set.insert(y.clone());
            y = q.multiply(&y, image_a);
        }
        set
    };
    let generated = BigUint::from(a_group.len()) * smallest_power_in(q, image_b, &a_group);
    if generated != q.group_order() {
        return false;
    }
    kernel.iter().all(|k| q.multiply(&q.power(image_a, &k.i), &q.power(image_b, &k.j)).is_identity())
}

/// Identify `G/K` (for `K` the kernel of a non-linear class of degree
/// `p^t`) with a faithful reduced presentation and an explicit quotient map.
pub fn quotient_params(pres: &Presentation, kernel: &[GroupElement], t: u32) -> Result<QuotientMap> {
    let MetacyclicParams { p, .. } = pres.params();
    let order = pres.group_order();
    let k_order = BigUint::from(kernel.len());
    let (q_order, rem) = order.div_rem(&k_order);
    if !rem.is_zero() || kernel.is_empty() {
        return Err(Error::QuotientNotReduced("kernel size does not divide |G|".into()));
    }
    let total = (0..64u32)
        .find(|&e| big_pow(p, e) == q_order)
        .ok_or_else(|| Error::QuotientNotReduced("quotient order is not a power of p".into()))?;
    let kset: HashSet<GroupElement> = kernel.iter().cloned().collect();
    let ord_a = smallest_power_in(pres, &pres.a(), &kset);
    let ord_b = smallest_power_in(pres, &pres.b(), &kset);

    for n2 in 1..total {
        let m2 = total - n2;
        for r2 in 0..=n2 {
            let cand = MetacyclicParams::new(p, n2, m2, r2, t);
            let Ok(q) = validate(cand) else { continue };
            if classify_faithful(cand) == FaithfulKind::NotFaithful {
                continue;
            }
            let elems: Vec<GroupElement> = q.elements().collect();
            let orders: Vec<BigUint> = elems.iter().map(|x| q.element_order(x)).collect();
            let mut a_cands: Vec<&GroupElement> =
                elems.iter().zip(&orders).filter(|(_, o)| **o == ord_a).map(|(x, _)| x).collect();
            a_cands.sort_by_key(|x| (x.j.clone(), x.i.clone()));
            let b_cands: Vec<&GroupElement> =
                elems.iter().zip(&orders).filter(|(_, o)| **o == ord_b).map(|(x, _)| x).collect();
            for ia in &a_cands {
                for ib in &b_cands {
                    if is_witness(pres, &q, kernel, ia, ib) {
                        return Ok(QuotientMap { quotient: q, image_a: (*ia).clone(), image_b: (*ib).clone() });
                    }
                }
            }
        }
    }
    Err(Error::QuotientNotReduced(format!("no faithful reduced tuple of order {p}^{total} matches")))
}

/// The rational irreducible attached to a Galois class, as integral matrices.
pub fn rational_rep_for(pres: &Presentation, class: &GaloisClass) -> Result<RationalMatrixRep> {
    let ctx = RepContext::new(pres)?;
    let p = ctx.params.p;
    let d = class.representative();
    if class.t == 0 {
        let nu = class.root_level;
        let c = companion_rational_rep(p, nu);
        let shrink = pow(p, ctx.level - nu);
        let ea = ctx.a_exponent(d) / shrink;
        let eb = ctx.omega_exponent(d) / shrink;
        let one = integer(1);
        return Ok(RationalMatrixRep { mat_a: c.pow_u64(ea, &one), mat_b: c.pow_u64(eb, &one), degree: c.dim() });
    }
    if is_faithful_class(ctx.params, class) {
        return induce_rational_rep(pres, &required_pair(pres, class)?);
    }
    let kernel = kernel_of(pres, class)?;
    let map = quotient_params(pres, &kernel, class.t)?;
    let q = &map.quotient;
    let q_class = galois_classes(q)?
        .into_iter()
        .find(|c| is_faithful_class(q.params(), c))
        .ok_or_else(|| Error::QuotientNotReduced(format!("{} has no faithful class", q.params())))?;
    let rep = induce_rational_rep(q, &required_pair(q, &q_class)?)?;
    Ok(RationalMatrixRep { mat_a: rep.evaluate(&map.image_a), mat_b: rep.evaluate(&map.image_b), degree: rep.degree })
}


#[cfg(test)]
mod tests {
    use super::*;

    fn g(p: u64, n: u32, m: u32, r: u32, s: u32) -> Presentation {
        validate(MetacyclicParams::new(p, n, m, r, s)).unwrap()
    }

    #[test]
    fn class_sizes_and_conductors() {
        let pres = g(2, 5, 3, 0, 2);
        let classes = galois_classes(&pres).unwrap();
        assert!(classes[0].is_trivial());
        assert_eq!(classes[0].conductor_level, 0);
        let deg2: Vec<_> = classes.iter().filter(|c| c.t == 1).collect();
        assert_eq!(deg2.len(), 4);
        assert!(deg2.iter().all(|c| c.members.len() == 4 && c.conductor(2) == 8));
        for c in &classes {
            assert_eq!(c.members.len() as u64, phi_pp(2, c.conductor_level));
        }
        let classes = galois_classes(&g(3, 3, 3, 1, 2)).unwrap();
        let top: Vec<_> = classes.iter().filter(|c| c.t == 2).collect();
        assert_eq!(top.len(), 1);
        assert_eq!(top[0].members.len(), 6);
    }

    #[test]
    fn closed_counts() {
        let c = rational_irrep_counts(&g(2, 5, 3, 0, 2));
        let expect: BTreeMap<u32, BigUint> =
            [(1, 3u32), (2, 6), (3, 12), (4, 4), (5, 2)].into_iter().map(|(k, v)| (k, v.into())).collect();
        assert_eq!(c, expect);
        let c = rational_irrep_counts(&g(2, 1, 1, 0, 0));
        assert_eq!(c, BTreeMap::from([(1, 3u32.into())]));
    }

    #[test]
    fn faithful_kinds() {
        let k = |p, n, m, r, s| classify_faithful(MetacyclicParams::new(p, n, m, r, s));
        assert_eq!(k(2, 5, 4, 2, 3), FaithfulKind::G1);
        assert_eq!(k(3, 3, 2, 0, 2), FaithfulKind::G2);
        assert_eq!(k(2, 5, 3, 0, 2), FaithfulKind::NotFaithful);
        assert_eq!(k(3, 2, 1, 0, 0), FaithfulKind::NotFaithful);
    }

    #[test]
    fn companions() {
        let c8 = companion_rational_rep(2, 3);
        assert_eq!(c8.dim(), 4);
        assert_eq!(c8.row(3), &[(0, integer(-1))]);
        assert_eq!(c8.row(0), &[(1, integer(1))]);
        assert_eq!(companion_rational_rep(2, 1).row(0), &[(0, integer(-1))]);
        let c3 = companion_rational_rep(3, 1);
        assert_eq!(c3.row(1), &[(0, integer(-1)), (1, integer(-1))]);
        assert_eq!(companion_rational_rep(5, 0).row(0), &[(0, integer(1))]);
    }

    #[test]
    fn order_512_congruences() {
        let (k, l, mu) = congruence_data(MetacyclicParams::new(2, 5, 4, 2, 3)).unwrap();
        assert_eq!(k, BigInt::from(794728597u64));
        assert_eq!(l, BigInt::from(4069u32));
        assert_eq!(mu, BigInt::from(3u32));
    }
}
