//! Closed-form Wedderburn decomposition of the rational group algebra.
//!
//! Every simple component is a matrix ring `M_{p^t}(Q(zeta_{p^lambda}))`.
//! Components with conductor at most 2 are the rational field itself.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith::{big_phi_pp, big_pow};
use crate::presentation::{MetacyclicParams, Presentation};
use crate::rational_reps::{galois_classes, GaloisClass};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WedderburnComponent {
    /// Matrix size is `p^matrix_exponent`.
    pub matrix_exponent: u32,
    /// Centre is `Q(zeta_{p^conductor_level})`; 0 means `Q`.
    pub conductor_level: u32,
    pub multiplicity: BigUint,
}

impl WedderburnComponent {
    pub fn matrix_size(&self, p: u64) -> BigUint {
        big_pow(p, self.matrix_exponent)
    }

    pub fn conductor(&self, p: u64) -> BigUint {
        big_pow(p, self.conductor_level)
    }

    /// `multiplicity * size^2 * phi(conductor)`.
    pub fn dimension(&self, p: u64) -> BigUint {
        &self.multiplicity * big_pow(p, 2 * self.matrix_exponent) * big_phi_pp(p, self.conductor_level)
    }

    pub fn field_name(&self, p: u64) -> String {
        field_name(p, self.conductor_level)
    }

    /// `M4(Q(z8))`, or just the field for size 1.
    pub fn algebra_name(&self, p: u64) -> String {
        if self.matrix_exponent == 0 {
            self.field_name(p)
        } else {
            format!("M{}({})", self.matrix_size(p), self.field_name(p))
        }
    }
}

pub fn field_name(p: u64, conductor_level: u32) -> String {
    if conductor_level == 0 {
        "Q".to_string()
    } else {
        format!("Q(z{})", big_pow(p, conductor_level))
    }
}

/// Canonical conductor level: `Q(zeta_2) = Q`.
pub fn canonical_level(p: u64, lambda: u32) -> u32 {
    if p == 2 && lambda == 1 {
        0
    } else {
        lambda
    }
}

/// A multiset of components in canonical order (matrix size, then conductor).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub params: MetacyclicParams,
    pub components: Vec<WedderburnComponent>,
}

#[derive(Default)]
struct Builder {
    acc: BTreeMap<(u32, u32), BigUint>,
}

impl Builder {
    fn add(&mut self, p: u64, mult: BigUint, t: u32, lambda: u32) {
        if !mult.is_zero() {
            *self.acc.entry((t, canonical_level(p, lambda))).or_default() += mult;
        }
    }

    fn finish(self, params: MetacyclicParams) -> Decomposition {
        let components = self
            .acc
            .into_iter()
            .map(|((t, l), multiplicity)| WedderburnComponent { matrix_exponent: t, conductor_level: l, multiplicity })
            .collect();
        Decomposition { params, components }
    }
}

/// Evaluate the closed form for whichever case the parameters fall in.
pub fn decompose(pres: &Presentation) -> Decomposition {
    let params = pres.params();
    let MetacyclicParams { p, n, m, r, s } = params;
    let pp = |e: u32| big_pow(p, e);
    let mut b = Builder::default();
    b.add(p, BigUint::one(), 0, 0);
    if n - s >= m {
        for lam in 1..=m {
            b.add(p, pp(lam) + pp(lam - 1), 0, lam);
        }
        for lam in m + 1..=n - s {
            b.add(p, pp(m), 0, lam);
        }
        for t in 1..=s {
            b.add(p, pp(m - t), t, n - s);
        }
    } else {
        let k = m - (n - s);
        for lam in 1..=n - s {
            b.add(p, pp(lam) + pp(lam - 1), 0, lam);
        }
        for lam in n - s + 1..=m {
            b.add(p, pp(n - s), 0, lam);
        }
        let top = if k <= s - r { k - 1 } else { s - r };
        for t in 1..=top {
            b.add(p, pp(n - s), t, n - s);
            for lam in n - s + 1..=m - t {
                b.add(p, pp(n - s) - pp(n - s - 1), t, lam);
            }
        }
        if k <= s - r {
            for t in k..=s {
                b.add(p, pp(m - t), t, n - s);
            }
        } else {
            for t in s - r + 1..=s {
                b.add(p, pp(n - r - t), t, m + r - s);
            }
        }
    }
    b.finish(params)
}

/// The non-split specialisation, evaluated directly; `None` for split tuples.
pub fn nonsplit_formula(pres: &Presentation) -> Option<Decomposition> {
    let params = pres.params();
    let MetacyclicParams { p, n, m, r, s } = params;
    if r == 0 {
        return None;
    }
    let pp = |e: u32| big_pow(p, e);
    let mut b = Builder::default();
    b.add(p, BigUint::one(), 0, 0);
    for lam in 1..=n - s {
        b.add(p, pp(lam) + pp(lam - 1), 0, lam);
    }
    for lam in n - s + 1..=m {
        b.add(p, pp(n - s), 0, lam);
    }
    for t in 1..=s - r {
        b.add(p, pp(n - s), t, n - s);
        for lam in n - s + 1..=m - t {
            b.add(p, pp(n - s) - pp(n - s - 1), t, lam);
        }
    }
    for t in s - r + 1..=s {
        b.add(p, pp(n - r - t), t, m + r - s);
    }
    Some(b.finish(params))
}

/// One component `M_{chi(1)}(Q(chi))` per Galois class.
pub fn from_classes(params: MetacyclicParams, classes: &[GaloisClass]) -> Decomposition {
    let mut b = Builder::default();
    for c in classes {
        b.add(params.p, BigUint::one(), c.t, c.conductor_level);
    }
    b.finish(params)
}

impl Decomposition {
    pub fn dimension(&self) -> BigUint {
        self.components.iter().map(|c| c.dimension(self.params.p)).sum()
    }

    /// Number of simple components counted with multiplicity.
    pub fn component_count(&self) -> BigUint {
        self.components.iter().map(|c| c.multiplicity.clone()).sum()
    }
}

/// `sum mult * size^2 * phi(conductor) == p^(n+m)`.
pub fn dimension_check(d: &Decomposition) -> bool {
    d.dimension() == big_pow(d.params.p, d.params.n + d.params.m)
}

#[derive(Debug, Clone)]
pub struct CrossCheckReport {
    pub formula: Decomposition,
    pub enumerated: Decomposition,
    pub class_count: usize,
}

/// Rebuild the decomposition from the Galois classes and compare.
pub fn cross_check(pres: &Presentation) -> Result<CrossCheckReport> {
    let classes = galois_classes(pres)?;
    let formula = decompose(pres);
    let enumerated = from_classes(pres.params(), &classes);
    if formula != enumerated {
        return Err(Error::Mismatch(format!(
            "{}: formula {formula} but classes give {enumerated}",
            pres.params()
        )));
    }
    Ok(CrossCheckReport { formula, enumerated, class_count: classes.len() })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    Distinct,
}

/// Compare the canonical decompositions of two groups.
pub fn compare(x: &Presentation, y: &Presentation) -> Comparison {
    let (dx, dy) = (decompose(x), decompose(y));
    if dx.params.p == dy.params.p && dx.components == dy.components {
        Comparison::Equal
    } else {
        Comparison::Distinct
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.params.p;
        for (k, c) in self.components.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if !c.multiplicity.is_one() {
                write!(f, "{} ", c.multiplicity)?;
            }
            write!(f, "{}", c.algebra_name(p))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::validate;

    fn dec(p: u64, n: u32, m: u32, r: u32, s: u32) -> Decomposition {
        decompose(&validate(MetacyclicParams::new(p, n, m, r, s)).unwrap())
    }

    #[test]
    fn text_form() {
        assert_eq!(dec(2, 5, 3, 0, 2).to_string(), "4 Q + 6 Q(z4) + 12 Q(z8) + 4 M2(Q(z8)) + 2 M4(Q(z8))");
        assert_eq!(
            dec(3, 3, 3, 1, 2).to_string(),
            "Q + 4 Q(z3) + 3 Q(z9) + 3 Q(z27) + 3 M3(Q(z3)) + 2 M3(Q(z9)) + M9(Q(z9))"
        );
    }

    #[test]
    fn dimensions() {
        let d = dec(2, 5, 3, 0, 2);
        assert!(dimension_check(&d));
        let mut bad = d.clone();
        bad.components[0].multiplicity += 1u32;
        assert!(!dimension_check(&bad));
        assert!(dimension_check(&dec(3, 3, 3, 1, 2)));
    }

    #[test]
    fn abelian_fields_only() {
        let d = dec(2, 1, 1, 0, 0);
        assert_eq!(d.to_string(), "4 Q");
        assert!(dec(5, 3, 2, 0, 0).components.iter().all(|c| c.matrix_exponent == 0));
    }
}
