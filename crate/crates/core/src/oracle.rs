//! Brute-force counterparts of the closed forms.
//!
//! Nothing here reuses the formula code paths except the group law of
//! [`crate::presentation`] and the closed-form character values under test.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::arith::{mod_mul, pow};
use crate::complex_reps::{irrep_count, IrrepDescriptor, RepContext};
use crate::cyclotomic::{reduce_integer_histogram, CyclotomicNumber};
use crate::presentation::{GroupElement, MetacyclicParams, Presentation};
use crate::{Error, Result};

pub const DEFAULT_BOUND: u64 = 1 << 12;

/// The whole group with its conjugacy classes.
#[derive(Debug, Clone)]
pub struct EnumeratedGroup {
    pub elements: Vec<GroupElement>,
    /// Class index of each element.
    pub class_of: Vec<usize>,
    /// Element indices of each class; classes ordered by smallest element.
    pub classes: Vec<Vec<usize>>,
}

pub fn enumerate(pres: &Presentation, bound: u64) -> Result<EnumeratedGroup> {
    let order = pres.order_u64().filter(|&o| o <= bound).ok_or_else(|| {
        Error::TooLarge(format!("|G| = {} exceeds the bound {bound}", pres.group_order()))
    })?;
    let elements: Vec<GroupElement> = pres.elements().collect();
    let gens = [pres.a(), pres.b()];
    let mut class_of = vec![usize::MAX; order as usize];
    let mut classes = Vec::new();
    for start in 0..elements.len() {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = vec![start];
        class_of[start] = id;
        let mut k = 0;
        while k < members.len() {
            let x = &elements[members[k]];
            for g in &gens {
                let y = pres.index_of(&pres.conjugate(g, x));
                if class_of[y] == usize::MAX {
                    class_of[y] = id;
                    members.push(y);
                }
            }
            k += 1;
        }
        members.sort_unstable();
        classes.push(members);
    }
    Ok(EnumeratedGroup { elements, class_of, classes })
}

/// Conjugacy class count equals the closed-form irreducible count.
pub fn class_count_identity(pres: &Presentation, bound: u64) -> Result<bool> {
    let group = enumerate(pres, bound)?;
    Ok(BigUint::from(group.classes.len()) == irrep_count(pres.params()))
}

/// Orbit sizes of `x -> (1+p^(n-s)) x` on `Z/p^n`: size -> number of orbits.
pub fn orbit_sizes(pres: &Presentation) -> BTreeMap<u64, u64> {
    let MetacyclicParams { p, n, s, .. } = pres.params();
    let pn = pow(p, n);
    let q = (1 + pow(p, n - s)) % pn;
    let mut seen = vec![false; pn as usize];
    let mut out = BTreeMap::new();
    for x in 0..pn {
        if seen[x as usize] {
            continue;
        }
        let mut size = 0;
        let mut y = x;
        while !seen[y as usize] {
            seen[y as usize] = true;
            size += 1;
            y = mod_mul(y, q, pn);
        }
        *out.entry(size).or_insert(0) += 1;
    }
    out
}

/// Elements commuting with both generators.
pub fn center(pres: &Presentation) -> Vec<GroupElement> {
    let (a, b) = (pres.a(), pres.b());
    pres.elements()
        .filter(|x| pres.multiply(x, &a) == pres.multiply(&a, x) && pres.multiply(x, &b) == pres.multiply(&b, x))
        .collect()
}

pub fn is_cyclic(pres: &Presentation, subgroup: &[GroupElement]) -> bool {
    let size = BigUint::from(subgroup.len());
    subgroup.iter().any(|x| pres.element_order(x) == size)
}

/// Multiplicative order of `x` modulo `modulus` by repeated multiplication.
pub fn multiplicative_order(x: u64, modulus: u64) -> u64 {
    let mut y = x % modulus;
    let mut k = 1;
    while y != 1 % modulus {
        y = mod_mul(y, x, modulus);
        k += 1;
    }
    k
}

/// `lambda` from the support of the power-basis expansion: an element of
/// `Q(zeta_{p^k})` lies in `Q(zeta_{p^lambda})` iff only indices divisible by
/// `p^(k-lambda)` carry non-zero coefficients.
pub fn conductor_by_support(x: &CyclotomicNumber) -> u32 {
    let (p, k) = (x.prime(), x.level());
    (0..=k)
        .find(|&lam| x.terms().iter().all(|(d, _)| d % pow(p, k - lam) == 0))
        .unwrap_or(k)
}

/// Floating-point image of `x` under `zeta -> exp(2 pi i / p^k)`. Sanity use only.
pub fn to_complex(x: &CyclotomicNumber) -> (f64, f64) {
    let pk = pow(x.prime(), x.level()) as f64;
    x.terms().iter().fold((0.0, 0.0), |(re, im), (d, c)| {
        let v = c.to_f64().unwrap_or(f64::NAN);
        let ang = std::f64::consts::TAU * (*d as f64) / pk;
        (re + v * ang.cos(), im + v * ang.sin())
    })
}

/// Whether the numeric embedding agrees with the exact zero test.
pub fn numeric_zero_agrees(x: &CyclotomicNumber, tol: f64) -> bool {
    let (re, im) = to_complex(x);
    let numeric_zero = re.abs() < tol && im.abs() < tol;
    numeric_zero == x.is_zero()
}

#[derive(Debug, Clone)]
pub struct OrthogonalityReport {
    pub characters: usize,
    pub row_pairs: usize,
    pub column_pairs: usize,
}

/// Exact inner product check on monomial values with an integer histogram.
///
/// `values[g] = Some((c, e))` means `c Z^e`.
fn check_pairs(
    p: u64,
    k: u32,
    rows: &[Vec<Option<(u64, u64)>>],
    weights: &[i64],
    expected: impl Fn(usize, usize) -> i64,
) -> std::result::Result<usize, (usize, usize)> {
    let pk = pow(p, k) as usize;
    let mut hist = vec![0i64; pk];
    let mut pairs = 0;
    for x in 0..rows.len() {
        for y in x..rows.len() {
            hist.iter_mut().for_each(|h| *h = 0);
            for (g, (u, v)) in rows[x].iter().zip(&rows[y]).enumerate() {
                if let (Some((c1, e1)), Some((c2, e2))) = (u, v) {
                    let e = (*e1 as usize + pk - *e2 as usize) % pk;
                    hist[e] += (c1 * c2) as i64 * weights[g];
                }
            }
            reduce_integer_histogram(p, k, &mut hist).ok_or((x, y))?;
            let ok = hist[0] == expected(x, y) && hist[1..].iter().all(|&h| h == 0);
            if !ok {
                return Err((x, y));
            }
            pairs += 1;
        }
    }
    Ok(pairs)
}

/// First orthogonality over conjugacy classes (weighted by class size) for
/// every pair of descriptors, and second orthogonality for every pair of
/// classes, with exact arithmetic.
pub fn orthogonality_report(pres: &Presentation, bound: u64) -> Result<OrthogonalityReport> {
    let group = enumerate(pres, bound)?;
    let ctx = RepContext::new(pres)?;
    let descriptors: Vec<IrrepDescriptor> = ctx.descriptors();
    let order = group.elements.len() as i64;
    let reps: Vec<(u64, u64)> =
        group.classes.iter().map(|c| group.elements[c[0]].to_u64_pair().unwrap()).collect();
    let sizes: Vec<i64> = group.classes.iter().map(|c| c.len() as i64).collect();
    let table: Vec<Vec<Option<(u64, u64)>>> = descriptors
        .iter()
        .map(|d| reps.iter().map(|&(i, j)| ctx.character_monomial(d, i, j)).collect())
        .collect();
    let row_pairs = check_pairs(ctx.params.p, ctx.level, &table, &sizes, |x, y| if x == y { order } else { 0 })
        .map_err(|(x, y)| Error::OrthogonalityFailure(x, y))?;
    let columns: Vec<Vec<Option<(u64, u64)>>> =
        (0..reps.len()).map(|c| table.iter().map(|row| row[c]).collect()).collect();
    let ones = vec![1i64; descriptors.len()];
    let column_pairs = check_pairs(ctx.params.p, ctx.level, &columns, &ones, |x, y| {
        if x == y {
            order / sizes[x]
        } else {
            0
        }
    })
    .map_err(|(x, y)| Error::OrthogonalityFailure(x, y))?;
    Ok(OrthogonalityReport { characters: descriptors.len(), row_pairs, column_pairs })
}

/// First orthogonality summed over all elements rather than classes.
pub fn element_inner_product(pres: &Presentation, x: &IrrepDescriptor, y: &IrrepDescriptor) -> Result<i64> {
    let ctx = RepContext::new(pres)?;
    let mut hist = vec![0i64; ctx.pk as usize];
    for i in 0..ctx.pn {
        for j in 0..ctx.pm {
            if let (Some((c1, e1)), Some((c2, e2))) =
                (ctx.character_monomial(x, i, j), ctx.character_monomial(y, i, j))
            {
                hist[((e1 + ctx.pk - e2) % ctx.pk) as usize] += (c1 * c2) as i64;
            }
        }
    }
    reduce_integer_histogram(ctx.params.p, ctx.level, &mut hist)
        .ok_or_else(|| Error::TooLarge("inner product overflow".into()))?;
    if hist[1..].iter().any(|&h| h != 0) {
        return Err(Error::Mismatch("inner product is not rational".into()));
    }
    Ok(hist[0])
}

/// Number of distinct kernels, used to sanity-check quotient identification.
pub fn kernel_set(pres: &Presentation, d: &IrrepDescriptor) -> Result<HashSet<GroupElement>> {
    let ctx = RepContext::new(pres)?;
    let deg = ctx.degree(d);
    let mut out = HashSet::new();
    for g in pres.elements() {
        let (i, j) = g.to_u64_pair().unwrap();
        if ctx.character_monomial(d, i, j) == Some((deg, 0)) {
            out.insert(g);
        }
    }
    Ok(out)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::validate;

    fn g(p: u64, n: u32, m: u32, r: u32, s: u32) -> Presentation {
        validate(MetacyclicParams::new(p, n, m, r, s)).unwrap()
    }

    #[test]
    fn class_counts() {
        assert_eq!(enumerate(&g(2, 1, 1, 0, 0), DEFAULT_BOUND).unwrap().classes.len(), 4);
        assert_eq!(enumerate(&g(2, 5, 3, 0, 2), DEFAULT_BOUND).unwrap().classes.len(), 88);
        assert!(class_count_identity(&g(3, 3, 3, 1, 2), DEFAULT_BOUND).unwrap());
        assert!(class_count_identity(&g(3, 2, 1, 0, 1), DEFAULT_BOUND).unwrap());
        assert!(matches!(enumerate(&g(2, 7, 6, 0, 2), DEFAULT_BOUND), Err(Error::TooLarge(_))));
    }

    #[test]
    fn orbits() {
        assert_eq!(orbit_sizes(&g(2, 5, 3, 0, 2)), BTreeMap::from([(1, 8), (2, 4), (4, 4)]));
        assert_eq!(orbit_sizes(&g(3, 3, 3, 1, 2)), BTreeMap::from([(1, 3), (3, 2), (9, 2)]));
    }

    #[test]
    fn support_conductor() {
        let x = CyclotomicNumber::root_of_unity(3, 2, 3);
        assert_eq!(conductor_by_support(&x), 1);
        assert!(numeric_zero_agrees(&x, 1e-9));
        let (re, im) = to_complex(&CyclotomicNumber::root_of_unity(2, 2, 1));
        assert!(re.abs() < 1e-12 && (im - 1.0).abs() < 1e-12);
    }

    #[test]
    fn small_orthogonality() {
        let pres = g(2, 4, 2, 0, 1);
        let rep = orthogonality_report(&pres, DEFAULT_BOUND).unwrap();
        assert_eq!(rep.characters, enumerate(&pres, DEFAULT_BOUND).unwrap().classes.len());
        let t = IrrepDescriptor::TRIVIAL;
        assert_eq!(element_inner_product(&pres, &t, &t).unwrap(), 64);
    }
}
