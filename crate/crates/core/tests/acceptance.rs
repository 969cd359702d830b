//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any failure.

use std::collections::{BTreeMap, HashMap};
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use metacyclic::arith::{mod_pow, pow, valuation};
use metacyclic::complex_reps::{build_complex_rep, degree_square_sum, enumerate_irreps};
use metacyclic::cyclotomic::{order_one_plus, CyclotomicNumber, Rational};
use metacyclic::oracle::{class_count_identity, multiplicative_order, orthogonality_report};
use metacyclic::presentation::{primes_up_to_square, validate, validated_tuples, MetacyclicParams, Presentation};
use metacyclic::rational_reps::{
    counts_from_classes, galois_classes, induce_rational_rep, is_faithful_class, omega_character,
    rational_irrep_counts, rational_rep_for, required_pair,
};
use metacyclic::wedderburn::{compare, cross_check, decompose, dimension_check, Comparison};

type Outcome = Result<String, String>;

/// Label, check, time limit in seconds.
type Criterion = (&'static str, fn() -> Outcome, u64);

fn group(p: u64, n: u32, m: u32, r: u32, s: u32) -> Result<Presentation, String> {
    validate(MetacyclicParams::new(p, n, m, r, s)).map_err(|e| e.to_string())
}

fn golden() -> Outcome {
    let cases = [
        ((2, 5, 3, 0, 2), "4 Q + 6 Q(z4) + 12 Q(z8) + 4 M2(Q(z8)) + 2 M4(Q(z8))"),
        (
            (2, 4, 4, 0, 2),
            "4 Q + 6 Q(z4) + 4 Q(z8) + 4 Q(z16) + 4 M2(Q(z4)) + 2 M2(Q(z8)) + 4 M4(Q(z4))",
        ),
        (
            (2, 3, 5, 0, 1),
            "4 Q + 6 Q(z4) + 4 Q(z8) + 4 Q(z16) + 4 Q(z32) + 4 M2(Q(z4)) + 2 M2(Q(z8)) + 2 M2(Q(z16))",
        ),
        (
            (2, 4, 4, 1, 2),
            "4 Q + 6 Q(z4) + 4 Q(z8) + 4 Q(z16) + 4 M2(Q(z4)) + 2 M2(Q(z8)) + 2 M4(Q(z8))",
        ),
        (
            (3, 3, 3, 1, 2),
            "Q + 4 Q(z3) + 3 Q(z9) + 3 Q(z27) + 3 M3(Q(z3)) + 2 M3(Q(z9)) + M9(Q(z9))",
        ),
    ];
    for ((p, n, m, r, s), want) in cases {
        let start = Instant::now();
        let got = decompose(&group(p, n, m, r, s)?).to_string();
        if got != want {
            return Err(format!("({p}, {n}, {m}, {r}, {s}): got {got}"));
        }
        if start.elapsed() > Duration::from_secs(1) {
            return Err(format!("({p}, {n}, {m}, {r}, {s}) took {:?}", start.elapsed()));
        }
    }
    Ok("5 decompositions exact".into())
}

fn dimension_identity() -> Outcome {
    let tuples = validated_tuples(&[2, 3, 5], 6561);
    for pres in &tuples {
        if !dimension_check(&decompose(pres)) {
            return Err(format!("{} fails", pres.params()));
        }
    }
    Ok(format!("{} tuples", tuples.len()))
}

fn formula_vs_enumeration() -> Outcome {
    let tuples = validated_tuples(&primes_up_to_square(4096), 4096);
    for pres in &tuples {
        cross_check(pres).map_err(|e| e.to_string())?;
    }
    Ok(format!("{} tuples", tuples.len()))
}

fn character_oracle() -> Outcome {
    let tuples = validated_tuples(&primes_up_to_square(1024), 1024);
    let mut pairs = 0;
    for pres in &tuples {
        if degree_square_sum(pres) != pres.group_order() {
            return Err(format!("{}: sum of squared degrees", pres.params()));
        }
        if !class_count_identity(pres, 1024).map_err(|e| e.to_string())? {
            return Err(format!("{}: class count", pres.params()));
        }
        let report = orthogonality_report(pres, 1024).map_err(|e| format!("{}: {e}", pres.params()))?;
        pairs += report.row_pairs;
    }
    Ok(format!("{} tuples, {pairs} character pairs", tuples.len()))
}

fn representation_relations() -> Outcome {
    let tuples = validated_tuples(&primes_up_to_square(512), 512);
    let (mut complex, mut rational) = (0, 0);
    for pres in &tuples {
        let label = pres.params();
        for d in enumerate_irreps(pres).map_err(|e| e.to_string())? {
            let rep = build_complex_rep(pres, &d).map_err(|e| e.to_string())?;
            if !rep.satisfies_relations(pres) {
                return Err(format!("{label}: complex {d}"));
            }
            complex += 1;
        }
        for class in galois_classes(pres).map_err(|e| e.to_string())? {
            let rep = rational_rep_for(pres, &class).map_err(|e| format!("{label}: {e}"))?;
            if !rep.satisfies_relations(pres) {
                return Err(format!("{label}: rational {} relations", class.representative()));
            }
            let omega = omega_character(pres, &class).map_err(|e| e.to_string())?;
            if rep.trace_function(pres).map_err(|e| e.to_string())? != omega.values {
                return Err(format!("{label}: rational {} trace", class.representative()));
            }
            rational += 1;
        }
    }
    Ok(format!("{} tuples, {complex} complex, {rational} rational", tuples.len()))
}

fn order_512_example() -> Outcome {
    let pres = group(2, 5, 4, 2, 3)?;
    let classes = galois_classes(&pres).map_err(|e| e.to_string())?;
    let class = classes
        .iter()
        .find(|c| is_faithful_class(pres.params(), c))
        .ok_or("no faithful class")?;
    let pair = required_pair(&pres, class).map_err(|e| e.to_string())?;
    let want = (BigInt::from(3), BigInt::from(794728597u64), BigInt::from(4069));
    let got = (pair.mu.clone(), pair.k_cong.clone(), pair.l_cong.clone());
    if got != (Some(want.0), Some(want.1), Some(want.2)) {
        return Err(format!("congruence data {got:?}"));
    }
    let rep = induce_rational_rep(&pres, &pair).map_err(|e| e.to_string())?;
    if rep.degree != 32 || !rep.is_integral() || !rep.satisfies_relations(&pres) {
        return Err(format!("degree {}, integral {}", rep.degree, rep.is_integral()));
    }
    let omega = omega_character(&pres, class).map_err(|e| e.to_string())?;
    if rep.trace_function(&pres).map_err(|e| e.to_string())? != omega.values {
        return Err("trace differs from the rational character".into());
    }
    Ok("mu = 3, k = 794728597, l = 4069, 32x32 integral".into())
}

fn rational_counts() -> Outcome {
    let tuples = validated_tuples(&primes_up_to_square(4096), 4096);
    for pres in &tuples {
        let classes = galois_classes(pres).map_err(|e| e.to_string())?;
        let (closed, counted) = (rational_irrep_counts(pres), counts_from_classes(&classes));
        if closed != counted {
            return Err(format!("{}: {closed:?} vs {counted:?}", pres.params()));
        }
    }
    Ok(format!("{} tuples", tuples.len()))
}

fn separation() -> Outcome {
    let tuples = validated_tuples(&[2, 3, 5], 6561);
    let mut seen: HashMap<(u64, Vec<_>), &Presentation> = HashMap::new();
    for pres in &tuples {
        let d = decompose(pres);
        if let Some(other) = seen.insert((d.params.p, d.components), pres) {
            if compare(pres, other) == Comparison::Equal {
                return Err(format!("{} and {} collide", pres.params(), other.params()));
            }
        }
    }
    Ok(format!("{} tuples pairwise distinct", tuples.len()))
}

/// Exact orbit sum `sum_{i < p^beta} zeta_{p^alpha}^(gamma (1+p^(alpha-beta))^i)`.
fn orbit_sum(p: u64, alpha: u32, beta: u32, gamma: u64) -> CyclotomicNumber {
    let pa = pow(p, alpha);
    let u = 1 + pow(p, alpha - beta);
    let mut acc: BTreeMap<u64, Rational> = BTreeMap::new();
    let mut e = gamma % pa;
    for _ in 0..pow(p, beta) {
        *acc.entry(e).or_insert_with(Rational::zero) += Rational::one();
        e = (e as u128 * u as u128 % pa as u128) as u64;
    }
    CyclotomicNumber::from_exponent_map(p, alpha, acc)
}

fn number_theory() -> Outcome {
    let mut orders = 0;
    for p in [2u64, 3, 5, 7] {
        for alpha in 1..=12u32 {
            for beta in 0..=12 - alpha {
                if p == 2 && alpha == 1 && beta >= 2 {
                    continue;
                }
                let modulus = pow(p, alpha + beta);
                let x = 1 + pow(p, alpha);
                let closed = order_one_plus(p, alpha, beta).map_err(|e| e.to_string())?;
                let k = (0..=beta).find(|&k| mod_pow(x, pow(p, k), modulus) == 1 % modulus).unwrap();
                let mut ok = closed == BigUint::from(pow(p, k));
                if modulus <= 1 << 16 {
                    ok &= closed == BigUint::from(multiplicative_order(x, modulus));
                }
                if !ok {
                    return Err(format!("order of 1+{p}^{alpha} mod {p}^{}", alpha + beta));
                }
                orders += 1;
            }
        }
    }
    let mut sums = 0;
    for p in [2u64, 3, 5, 7] {
        for alpha in (1..).take_while(|&a| pow(p, a) <= 1024) {
            for beta in 1..alpha {
                for gamma in 1..pow(p, alpha) {
                    let delta = valuation(gamma, p).unwrap();
                    if delta >= beta || (p == 2 && alpha - beta == 1 && alpha - delta >= 3) {
                        continue;
                    }
                    if !orbit_sum(p, alpha, beta, gamma).is_zero() {
                        return Err(format!("sum p={p} alpha={alpha} beta={beta} gamma={gamma}"));
                    }
                    sums += 1;
                }
            }
        }
    }
    Ok(format!("{orders} orders, {sums} vanishing sums"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 golden decompositions", golden, 5),
        ("2 dimension identity, p in {2,3,5}, |G| <= 3^8", dimension_identity, 10),
        ("3 formula equals Galois-class enumeration, |G| <= 2^12", formula_vs_enumeration, 120),
        ("4 degrees, orthogonality, class count, |G| <= 2^10", character_oracle, 300),
        ("5 relations and traces of all representations, |G| <= 2^9", representation_relations, 120),
        ("6 order-512 induced representation", order_512_example, 5),
        ("7 closed rational counts equal class counts, |G| <= 2^12", rational_counts, 60),
        ("8 decompositions pairwise distinct, p in {2,3,5}, |G| <= 3^8", separation, 30),
        ("9 orders of 1+p^alpha and vanishing orbit sums", number_theory, 10),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > Duration::from_secs(limit) => Err(format!("{msg}; over {limit} s")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("criterion {name}: PASS ({msg}; {:.2} s, limit {limit} s)", elapsed.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("criterion {name}: FAIL ({msg}; {:.2} s)", elapsed.as_secs_f64());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
