//! Payload builders, one per subcommand.

use std::collections::HashMap;

use num_bigint::BigUint;

use metacyclic::arith::{big_phi_pp, big_pow};
use metacyclic::complex_reps::{
    build_complex_rep, degree_square_sum, enumerate_irreps, irrep_count, orbit_census, RepContext,
};
use metacyclic::oracle::{class_count_identity, enumerate, orthogonality_report};
use metacyclic::presentation::{validate, validated_tuples, Extension, MetacyclicParams, Presentation};
use metacyclic::rational_reps::{
    counts_from_classes, galois_classes, is_faithful_class, omega_character, rational_irrep_counts,
    rational_rep_for,
};
use metacyclic::wedderburn::{
    canonical_level, compare, cross_check, decompose, dimension_check, Comparison, Decomposition,
};
use metacyclic::{Error, Result, ValidationError};

use crate::document::*;

pub const SWEEP_PRIMES: [u64; 3] = [2, 3, 5];

fn extension_name(pres: &Presentation) -> String {
    match pres.kind() {
        Extension::Split => "split".into(),
        Extension::NonSplit => "non-split".into(),
    }
}

pub fn validation(params: MetacyclicParams) -> (Payload, Option<ValidationError>) {
    match validate(params) {
        Ok(pres) => (
            Payload::Validation(ValidationPayload {
                valid: true,
                extension: Some(extension_name(&pres)),
                reason: None,
                detail: None,
            }),
            None,
        ),
        Err(e) => {
            let (reason, detail) = match &e {
                ValidationError::NotPrime(_) => ("NotPrime", e.to_string()),
                ValidationError::NotReduced(_) => ("NotReduced", e.to_string()),
                ValidationError::Exceptional2Group => ("Exceptional2Group", e.to_string()),
            };
            let payload = Payload::Validation(ValidationPayload {
                valid: false,
                extension: None,
                reason: Some(reason.into()),
                detail: Some(detail),
            });
            (payload, Some(e))
        }
    }
}

pub fn order(pres: &Presentation) -> Payload {
    Payload::Order(OrderPayload { order: pres.group_order().to_string() })
}

pub fn orbits(pres: &Presentation) -> Payload {
    let p = pres.params().p;
    let census = orbit_census(pres);
    Payload::Orbits(OrbitsPayload {
        fixed_points: census.fixed_points.to_string(),
        orbits: census
            .per_size
            .iter()
            .map(|(t, c)| OrbitCount { size: big_pow(p, *t).to_string(), count: c.to_string() })
            .collect(),
        irrep_count: irrep_count(pres.params()).to_string(),
    })
}

pub fn irreps(pres: &Presentation) -> Result<Payload> {
    let ctx = RepContext::new(pres)?;
    let p = ctx.params.p;
    let irreps = ctx
        .descriptors()
        .iter()
        .map(|d| IrrepEntry {
            descriptor: d.to_string(),
            degree: ctx.degree(d).to_string(),
            conductor: big_pow(p, canonical_level(p, ctx.root_level(d))).to_string(),
        })
        .collect::<Vec<_>>();
    Ok(Payload::Irreps(IrrepsPayload { count: irreps.len().to_string(), irreps }))
}

pub fn character_table(pres: &Presentation, bound: u64) -> Result<Payload> {
    let group = enumerate(pres, bound)?;
    let ctx = RepContext::new(pres)?;
    let reps: Vec<(u64, u64)> =
        group.classes.iter().map(|c| group.elements[c[0]].to_u64_pair().expect("bounded")).collect();
    let classes = group
        .classes
        .iter()
        .map(|c| ClassColumn { representative: group.elements[c[0]].to_string(), size: c.len().to_string() })
        .collect();
    let rows = ctx
        .descriptors()
        .iter()
        .map(|d| CharacterRow {
            descriptor: d.to_string(),
            values: reps.iter().map(|&(i, j)| ctx.character_value_at(d, i, j).to_string()).collect(),
        })
        .collect();
    Ok(Payload::CharacterTable(CharacterTablePayload { level: ctx.level, classes, rows }))
}

pub fn galois_class_list(pres: &Presentation) -> Result<Payload> {
    let p = pres.params().p;
    let classes = galois_classes(pres)?
        .iter()
        .enumerate()
        .map(|(id, c)| ClassEntry {
            id,
            representative: c.representative().to_string(),
            size: c.members.len().to_string(),
            degree: c.degree(p).to_string(),
            conductor: c.conductor(p).to_string(),
            rational_degree: c.rational_degree(p).to_string(),
            faithful: is_faithful_class(pres.params(), c),
        })
        .collect();
    Ok(Payload::GaloisClasses(GaloisClassesPayload { classes }))
}

/// Rational irreducible counts by degree, trivial character included.
pub fn rational_counts(pres: &Presentation) -> Payload {
    let p = pres.params().p;
    let mut by_degree: Vec<(BigUint, BigUint)> = vec![(BigUint::from(1u32), BigUint::from(1u32))];
    for (theta, count) in rational_irrep_counts(pres) {
        let degree = big_phi_pp(p, theta);
        match by_degree.iter_mut().find(|(d, _)| *d == degree) {
            Some(slot) => slot.1 += count,
            None => by_degree.push((degree, count)),
        }
    }
    by_degree.sort();
    let total: BigUint = by_degree.iter().map(|(_, c)| c).sum();
    Payload::RationalCounts(RationalCountsPayload {
        total: total.to_string(),
        counts: by_degree
            .into_iter()
            .map(|(d, c)| RationalCount { degree: d.to_string(), count: c.to_string() })
            .collect(),
    })
}

pub fn decomposition_payload(d: &Decomposition) -> DecompositionPayload {
    let p = d.params.p;
    DecompositionPayload {
        components: d
            .components
            .iter()
            .map(|c| ComponentEntry {
                multiplicity: c.multiplicity.to_string(),
                matrix_size: c.matrix_size(p).to_string(),
                field: c.field_name(p),
                conductor: c.conductor(p).to_string(),
            })
            .collect(),
        dimension: d.dimension().to_string(),
        text: d.to_string(),
    }
}

pub fn wedderburn(pres: &Presentation) -> Payload {
    Payload::Decomposition(decomposition_payload(&decompose(pres)))
}

pub fn rational_rep(pres: &Presentation, class_id: usize) -> Result<Payload> {
    let classes = galois_classes(pres)?;
    let class = classes.get(class_id).ok_or_else(|| {
        Error::OutOfRange(format!("class id {class_id}; the group has {} classes", classes.len()))
    })?;
    let rep = rational_rep_for(pres, class)?;
    let render = |m: &metacyclic::matrix::RationalMatrix| -> Vec<Vec<String>> {
        m.to_dense(&metacyclic::cyclotomic::integer(0))
            .iter()
            .map(|row| row.iter().map(|x| x.to_string()).collect())
            .collect()
    };
    Ok(Payload::Representation(RepresentationPayload {
        class_id,
        representative: class.representative().to_string(),
        degree: rep.degree,
        integral: rep.is_integral(),
        a: render(&rep.mat_a),
        b: render(&rep.mat_b),
    }))
}

fn check(name: &str, outcome: Result<String>) -> CheckEntry {
    let (status, detail) = match outcome {
        Ok(d) => (CheckStatus::Pass, d),
        Err(e) => (CheckStatus::Fail, e.to_string()),
    };
    CheckEntry { name: name.into(), status, detail }
}

fn require(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Mismatch(what()))
    }
}

/// Every closed form against its enumeration; expensive checks only when `|G| <= bound`.
pub fn verify(pres: &Presentation, bound: u64) -> Result<Payload> {
    let order = pres.group_order();
    RepContext::new(pres)?;
    let mut checks = vec![
        check("sum of squared degrees", {
            let sum = degree_square_sum(pres);
            require(sum == order, || format!("{sum} != {order}")).map(|_| format!("{sum}"))
        }),
        check("irreducible count", {
            enumerate_irreps(pres).and_then(|v| {
                let closed = irrep_count(pres.params());
                require(BigUint::from(v.len()) == closed, || format!("{} descriptors, closed form {closed}", v.len()))
                    .map(|_| closed.to_string())
            })
        }),
        check("dimension identity", {
            let d = decompose(pres);
            require(dimension_check(&d), || format!("dimension {}", d.dimension())).map(|_| d.dimension().to_string())
        }),
        check("formula against Galois classes", cross_check(pres).map(|r| format!("{} classes", r.class_count))),
        check("rational counts", {
            galois_classes(pres).and_then(|classes| {
                let (closed, counted) = (rational_irrep_counts(pres), counts_from_classes(&classes));
                require(closed == counted, || format!("{closed:?} vs {counted:?}")).map(|_| "closed form matches".into())
            })
        }),
    ];
    let small = BigUint::from(bound) >= order;
    let expensive: [(&str, &dyn Fn() -> Result<String>); 4] = [
        ("conjugacy class count", &|| {
            class_count_identity(pres, bound)
                .and_then(|ok| require(ok, || "class count differs".into()))
                .map(|_| irrep_count(pres.params()).to_string())
        }),
        ("orthogonality", &|| {
            orthogonality_report(pres, bound)
                .map(|r| format!("{} row pairs, {} column pairs", r.row_pairs, r.column_pairs))
        }),
        ("complex representations", &|| {
            let descs = enumerate_irreps(pres)?;
            for d in &descs {
                let rep = build_complex_rep(pres, d)?;
                require(rep.satisfies_relations(pres), || format!("{d} breaks the relations"))?;
            }
            Ok(format!("{} satisfy the relations", descs.len()))
        }),
        ("rational representations", &|| {
            let classes = galois_classes(pres)?;
            for c in &classes {
                let rep = rational_rep_for(pres, c)?;
                let d = c.representative();
                require(rep.satisfies_relations(pres), || format!("{d} breaks the relations"))?;
                let omega = omega_character(pres, c)?;
                require(rep.trace_function(pres)? == omega.values, || format!("{d}: trace differs"))?;
            }
            Ok(format!("{} satisfy the relations with correct traces", classes.len()))
        }),
    ];
    for (name, run) in expensive {
        if small {
            checks.push(check(name, run()));
        } else {
            checks.push(CheckEntry {
                name: name.into(),
                status: CheckStatus::Skipped,
                detail: format!("|G| = {order} exceeds the bound {bound}"),
            });
        }
    }
    let all_passed = checks.iter().all(|c| c.status != CheckStatus::Fail);
    Ok(Payload::Verification(VerificationPayload { bound, checks, all_passed }))
}

pub fn sweep(max_order: u64) -> Payload {
    let tuples = validated_tuples(&SWEEP_PRIMES, max_order);
    let mut seen: HashMap<(u64, Vec<metacyclic::wedderburn::WedderburnComponent>), usize> = HashMap::new();
    let mut distinct = true;
    let mut entries = Vec::with_capacity(tuples.len());
    for (idx, pres) in tuples.iter().enumerate() {
        let d = decompose(pres);
        if let Some(&other) = seen.get(&(d.params.p, d.components.clone())) {
            distinct &= compare(pres, &tuples[other]) == Comparison::Distinct;
        }
        seen.insert((d.params.p, d.components.clone()), idx);
        entries.push(SweepEntry {
            params: pres.params().into(),
            order: pres.group_order().to_string(),
            decomposition: d.to_string(),
            dimension_ok: dimension_check(&d),
            cross_check_ok: cross_check(pres).is_ok(),
        });
    }
    let all_passed = distinct && entries.iter().all(|e| e.dimension_ok && e.cross_check_ok);
    Payload::Sweep(SweepPayload {
        max_order,
        primes: SWEEP_PRIMES.to_vec(),
        entries,
        pairwise_distinct: distinct,
        all_passed,
    })
}

pub fn comparison(x: &Presentation, y: &Presentation) -> Payload {
    let result = match compare(x, y) {
        Comparison::Equal => "Equal",
        Comparison::Distinct => "Distinct",
    };
    Payload::Comparison(ComparisonPayload {
        first: x.params().into(),
        second: y.params().into(),
        first_decomposition: decompose(x).to_string(),
        second_decomposition: decompose(y).to_string(),
        result: result.into(),
    })
}
