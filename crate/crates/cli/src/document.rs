//! Versioned output documents and their text rendering.

use std::fmt;

use serde::{Deserialize, Serialize};

use metacyclic::presentation::MetacyclicParams;

pub const SCHEMA_VERSION: &str = "1";

/// Echo of the input tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsEcho {
    pub p: u64,
    pub n: u32,
    pub m: u32,
    pub r: u32,
    pub s: u32,
}

impl From<MetacyclicParams> for ParamsEcho {
    fn from(x: MetacyclicParams) -> Self {
        ParamsEcho { p: x.p, n: x.n, m: x.m, r: x.r, s: x.s }
    }
}

impl From<ParamsEcho> for MetacyclicParams {
    fn from(x: ParamsEcho) -> Self {
        MetacyclicParams::new(x.p, x.n, x.m, x.r, x.s)
    }
}

impl fmt::Display for ParamsEcho {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        MetacyclicParams::from(*self).fmt(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub schema_version: String,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub params: Option<ParamsEcho>,
    pub payload: Payload,
}

impl OutputDocument {
    pub fn new(command: &str, params: Option<MetacyclicParams>, payload: Payload) -> Self {
        OutputDocument {
            schema_version: SCHEMA_VERSION.into(),
            command: command.into(),
            params: params.map(Into::into),
            payload,
        }
    }
}

/// Integers are emitted as decimal strings so that no precision is lost.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Payload {
    Validation(ValidationPayload),
    Order(OrderPayload),
    Orbits(OrbitsPayload),
    Irreps(IrrepsPayload),
    CharacterTable(CharacterTablePayload),
    GaloisClasses(GaloisClassesPayload),
    RationalCounts(RationalCountsPayload),
    Decomposition(DecompositionPayload),
    Representation(RepresentationPayload),
    Verification(VerificationPayload),
    Sweep(SweepPayload),
    Comparison(ComparisonPayload),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationPayload {
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub extension: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderPayload {
    pub order: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitCount {
    pub size: String,
    pub count: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitsPayload {
    pub fixed_points: String,
    pub orbits: Vec<OrbitCount>,
    pub irrep_count: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrrepEntry {
    pub descriptor: String,
    pub degree: String,
    pub conductor: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrrepsPayload {
    pub count: String,
    pub irreps: Vec<IrrepEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassColumn {
    pub representative: String,
    pub size: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterRow {
    pub descriptor: String,
    pub values: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTablePayload {
    /// Values are written in `Q(z{p^level})`.
    pub level: u32,
    pub classes: Vec<ClassColumn>,
    pub rows: Vec<CharacterRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub id: usize,
    pub representative: String,
    pub size: String,
    pub degree: String,
    pub conductor: String,
    pub rational_degree: String,
    pub faithful: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaloisClassesPayload {
    pub classes: Vec<ClassEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalCount {
    pub degree: String,
    pub count: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalCountsPayload {
    pub total: String,
    pub counts: Vec<RationalCount>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentEntry {
    pub multiplicity: String,
    pub matrix_size: String,
    pub field: String,
    pub conductor: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionPayload {
    pub components: Vec<ComponentEntry>,
    pub dimension: String,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationPayload {
    pub class_id: usize,
    pub representative: String,
    pub degree: usize,
    pub integral: bool,
    /// Row-major entries of the images of `a` and `b`.
    pub a: Vec<Vec<String>>,
    pub b: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationPayload {
    pub bound: u64,
    pub checks: Vec<CheckEntry>,
    pub all_passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepEntry {
    pub params: ParamsEcho,
    pub order: String,
    pub decomposition: String,
    pub dimension_ok: bool,
    pub cross_check_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepPayload {
    pub max_order: u64,
    pub primes: Vec<u64>,
    pub entries: Vec<SweepEntry>,
    pub pairwise_distinct: bool,
    pub all_passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonPayload {
    pub first: ParamsEcho,
    pub second: ParamsEcho,
    pub first_decomposition: String,
    pub second_decomposition: String,
    pub result: String,
}

fn status_word(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Pass => "PASS",
        CheckStatus::Fail => "FAIL",
        CheckStatus::Skipped => "SKIP",
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl fmt::Display for Payload {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Payload::Validation(v) => {
                if v.valid {
                    write!(f, "valid, {}", v.extension.as_deref().unwrap_or(""))
                } else {
                    write!(f, "invalid: {}", v.reason.as_deref().unwrap_or(""))?;
                    if let Some(d) = &v.detail {
                        write!(f, " ({d})")?;
                    }
                    Ok(())
                }
            }
            Payload::Order(o) => write!(f, "{}", o.order),
            Payload::Orbits(o) => {
                writeln!(f, "fixed points: {}", o.fixed_points)?;
                for c in &o.orbits {
                    writeln!(f, "orbits of size {}: {}", c.size, c.count)?;
                }
                write!(f, "irreducible characters: {}", o.irrep_count)
            }
            Payload::Irreps(x) => {
                write!(f, "{} irreducible characters", x.count)?;
                for e in &x.irreps {
                    write!(f, "\n{}  degree {}  conductor {}", e.descriptor, e.degree, e.conductor)?;
                }
                Ok(())
            }
            Payload::CharacterTable(t) => {
                let head: Vec<String> = t.classes.iter().map(|c| format!("{} [{}]", c.representative, c.size)).collect();
                write!(f, "class | {}", head.join(" | "))?;
                for row in &t.rows {
                    write!(f, "\n{} | {}", row.descriptor, row.values.join(" | "))?;
                }
                Ok(())
            }
            Payload::GaloisClasses(g) => {
                write!(f, "{} Galois classes", g.classes.len())?;
                for c in &g.classes {
                    write!(
                        f,
                        "\n#{}  {}  size {}  degree {}  conductor {}  rational degree {}{}",
                        c.id,
                        c.representative,
                        c.size,
                        c.degree,
                        c.conductor,
                        c.rational_degree,
                        if c.faithful { "  faithful" } else { "" }
                    )?;
                }
                Ok(())
            }
            Payload::RationalCounts(c) => {
                write!(f, "{} rational irreducibles", c.total)?;
                for e in &c.counts {
                    write!(f, "\ndegree {}: {}", e.degree, e.count)?;
                }
                Ok(())
            }
            Payload::Decomposition(d) => write!(f, "{}", d.text),
            Payload::Representation(r) => {
                writeln!(f, "class #{} ({}), degree {}, integral: {}", r.class_id, r.representative, r.degree, yes_no(r.integral))?;
                for (name, mat) in [("a", &r.a), ("b", &r.b)] {
                    write!(f, "{name}:")?;
                    for row in mat {
                        write!(f, "\n  {}", row.join(" "))?;
                    }
                    if name == "a" {
                        writeln!(f)?;
                    }
                }
                Ok(())
            }
            Payload::Verification(v) => {
                for c in &v.checks {
                    writeln!(f, "{} {}: {}", status_word(c.status), c.name, c.detail)?;
                }
                write!(f, "{}", if v.all_passed { "all checks passed" } else { "verification FAILED" })
            }
            Payload::Sweep(s) => {
                for e in &s.entries {
                    writeln!(
                        f,
                        "{}  |G| = {}  {}{}",
                        e.params,
                        e.order,
                        e.decomposition,
                        if e.dimension_ok && e.cross_check_ok { "" } else { "  FAILED" }
                    )?;
                }
                write!(
                    f,
                    "{} tuples, pairwise distinct: {}, all checks passed: {}",
                    s.entries.len(),
                    yes_no(s.pairwise_distinct),
                    yes_no(s.all_passed)
                )
            }
            Payload::Comparison(c) => write!(
                f,
                "{}: {}\n{}: {}\n{}",
                c.first, c.first_decomposition, c.second, c.second_decomposition, c.result
            ),
        }
    }
}
