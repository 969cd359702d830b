//! Small-integer number theory used by the representation code.
//!
//! Everything here works on machine integers. Callers that can overflow
//! use the checked variants and surface [`crate::Error::TooLarge`].

use num_bigint::BigUint;
use num_integer::Integer;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.checked_mul(d).is_some_and(|dd| dd <= n) {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn checked_pow(p: u64, e: u32) -> Option<u64> {
    p.checked_pow(e)
}

/// `p^e`, panicking on overflow. Only for values already known to be small.
pub fn pow(p: u64, e: u32) -> u64 {
    p.checked_pow(e)
        .unwrap_or_else(|| panic!("{p}^{e} overflows u64"))
}

pub fn big_pow(p: u64, e: u32) -> BigUint {
    num_traits::pow(BigUint::from(p), e as usize)
}

/// Euler's totient of a prime power: `phi(p^k)`.
pub fn phi_pp(p: u64, k: u32) -> u64 {
    if k == 0 {
        1
    } else {
        pow(p, k - 1) * (p - 1)
    }
}

pub fn big_phi_pp(p: u64, k: u32) -> BigUint {
    if k == 0 {
        BigUint::from(1u32)
    } else {
        big_pow(p, k - 1) * BigUint::from(p - 1)
    }
}

pub fn mod_mul(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, m);
        }
        base = mod_mul(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inv(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let g = (a as i128 % m as i128).extended_gcd(&(m as i128));
    if g.gcd != 1 {
        return None;
    }
    Some(g.x.rem_euclid(m as i128) as u64)
}

/// Reduce a signed integer into `[0, m)`.
pub fn reduce_signed(x: i64, m: u64) -> u64 {
    (x as i128).rem_euclid(m as i128) as u64
}

/// p-adic valuation; `None` for zero.
pub fn valuation(mut x: u64, p: u64) -> Option<u32> {
    if x == 0 {
        return None;
    }
    let mut v = 0;
    while x.is_multiple_of(p) {
        x /= p;
        v += 1;
    }
    Some(v)
}

/// Exponent of the order of `zeta_{p^k}^e`, i.e. the `nu` with order `p^nu`.
pub fn root_order_level(e: u64, p: u64, k: u32) -> u32 {
    match valuation(e % pow(p, k), p) {
        None => 0,
        Some(v) => k - v.min(k),
    }
}

/// Smallest primitive root modulo an odd prime `p` that also generates
/// `(Z/p^2)^x`, and therefore `(Z/p^k)^x` for every `k`.
pub fn primitive_root_pp(p: u64) -> u64 {
    assert!(p > 2 && is_prime(p));
    let p2 = p * p;
    let order = p * (p - 1);
    let mut factors = prime_factors(p - 1);
    factors.push(p);
    (2..p)
        .find(|&g| factors.iter().all(|&q| mod_pow(g, order / q, p2) != 1))
        .expect("odd prime powers have primitive roots")
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Generators of the unit group `(Z/p^k)^x`, as residues in `[0, p^k)`.
pub fn unit_group_generators(p: u64, k: u32) -> Vec<u64> {
    let pk = pow(p, k);
    if p == 2 {
        match k {
            0 | 1 => vec![],
            2 => vec![3],
            _ => vec![pk - 1, 5],
        }
    } else if k == 0 {
        vec![]
    } else {
        vec![primitive_root_pp(p) % pk]
    }
}

/// Generators of the subgroup `{u : u = 1 mod p^lambda}` of `(Z/p^k)^x`.
pub fn congruence_subgroup_generators(p: u64, k: u32, lambda: u32) -> Vec<u64> {
    if lambda >= k {
        return vec![];
    }
    if lambda == 0 || (p == 2 && lambda == 1) {
        return unit_group_generators(p, k);
    }
    vec![1 + pow(p, lambda)]
}

/// All units in `[1, p^k)`.
pub fn units(p: u64, k: u32) -> impl Iterator<Item = u64> {
    let pk = pow(p, k);
    (1..pk.max(2)).filter(move |u| k == 0 || u % p != 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_order(x: u64, m: u64) -> u64 {
        let mut y = x % m;
        let mut k = 1;
        while y != 1 % m {
            y = mod_mul(y, x, m);
            k += 1;
        }
        k
    }

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn generators_generate() {
        for (p, k) in [(2, 1), (2, 2), (2, 5), (3, 1), (3, 4), (5, 3), (7, 2)] {
            let pk = pow(p, k);
            let gens = unit_group_generators(p, k);
            let mut seen = std::collections::BTreeSet::from([1 % pk.max(2)]);
            let mut frontier = vec![1u64];
            while let Some(x) = frontier.pop() {
                for &g in &gens {
                    let y = mod_mul(x, g, pk);
                    if seen.insert(y) {
                        frontier.push(y);
                    }
                }
            }
            assert_eq!(seen.len() as u64, phi_pp(p, k), "p={p} k={k}");
        }
    }

    #[test]
    fn primitive_roots_have_full_order() {
        for p in [3u64, 5, 7, 11, 13, 29] {
            let g = primitive_root_pp(p);
            assert_eq!(brute_order(g, p * p * p), phi_pp(p, 3));
        }
    }

    #[test]
    fn inverses() {
        assert_eq!(mod_inv(5, 8), Some(5));
        assert_eq!(mod_inv(4, 8), None);
        for a in 1..27u64 {
            if a % 3 != 0 {
                assert_eq!(mod_mul(a, mod_inv(a, 27).unwrap(), 27), 1);
            }
        }
    }

    #[test]
    fn root_levels() {
        assert_eq!(root_order_level(0, 2, 5), 0);
        assert_eq!(root_order_level(16, 2, 5), 1);
        assert_eq!(root_order_level(3, 3, 3), 2);
        assert_eq!(root_order_level(1, 5, 2), 2);
    }
}
