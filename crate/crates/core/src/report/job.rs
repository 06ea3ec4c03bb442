use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::complexes::{
    has_i_linear_resolution, koszul_complex, minimal_resolution, regularity, tensor, DEFAULT_CUTOFF,
};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec, PrimeField, Rationals};
use crate::graded::{has_minimal_degree, numerical_profile, Algebra, GradedAlgebra, GradedModule};
use crate::groebner::LaurentPoly;
use crate::linearity::{
    injective_linearity_defect, is_componentwise_linear, is_koszul_algebra, koszul_depth, linear_part,
    linearity_defect, linearity_defect_of_complex,
};
use crate::poly::{Homogeneity, PolyRing, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Command {
    Betti,
    Reg,
    Ld,
    Ild,
    Koszul,
    CwLinear,
    Profile,
    Ulrich,
    KoszulCx,
    Check,
}

impl Command {
    pub const ALL: [Command; 10] = [
        Command::Betti,
        Command::Reg,
        Command::Ld,
        Command::Ild,
        Command::Koszul,
        Command::CwLinear,
        Command::Profile,
        Command::Ulrich,
        Command::KoszulCx,
        Command::Check,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Betti => "betti",
            Command::Reg => "reg",
            Command::Ld => "ld",
            Command::Ild => "ild",
            Command::Koszul => "koszul",
            Command::CwLinear => "cwlinear",
            Command::Profile => "profile",
            Command::Ulrich => "ulrich",
            Command::KoszulCx => "koszulcx",
            Command::Check => "check",
        }
    }
}

impl TryFrom<String> for Command {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or(Error::Unknown { kind: "command", name: s })
    }
}

impl From<Command> for String {
    fn from(c: Command) -> String {
        c.name().to_string()
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A presentation matrix with explicit row twists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub row_twists: Vec<i32>,
    #[serde(default)]
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobOptions {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<i32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub forms: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub field: FieldSpec,
    pub vars: Vec<String>,
    #[serde(default)]
    pub ideal: Vec<String>,
    #[serde(default)]
    pub modules: BTreeMap<String, ModuleSpec>,
    pub command: Command,
    #[serde(default)]
    pub options: JobOptions,
}

impl JobSpec {
    pub fn cutoff(&self) -> i32 {
        self.options.cutoff.unwrap_or(DEFAULT_CUTOFF)
    }

    pub fn seed(&self) -> u64 {
        self.options.seed.unwrap_or(0)
    }
}

/// Parses and validates a job file: every polynomial is parsed and checked
/// for homogeneity and every module reference must resolve.
pub fn parse_job(text: &str) -> Result<JobSpec> {
    let spec: JobSpec = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: strip_position(&e.to_string()),
    })?;
    if spec.cutoff() < 1 {
        return Err(Error::Precondition(format!("cutoff {} is below 1", spec.cutoff())));
    }
    match spec.field {
        FieldSpec::Rationals => {
            Context::build(Rationals, &spec)?;
        }
        FieldSpec::PrimeField(p) => {
            Context::build(PrimeField::new(p)?, &spec)?;
        }
    }
    Ok(spec)
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(k) => msg[..k].to_string(),
        None => msg.to_string(),
    }
}

struct Context<F: Field> {
    algebra: Algebra<F>,
    module: GradedModule<F>,
    forms: Vec<Polynomial<F::Elem>>,
}

impl<F: Field> Context<F> {
    fn build(field: F, spec: &JobSpec) -> Result<Self> {
        let ring = PolyRing::new(field, spec.vars.clone())?;
        let gens = spec
            .ideal
            .iter()
            .enumerate()
            .map(|(k, s)| ring.parse(s).map_err(|e| e.context(format!("ideal entry {k} `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        for (k, g) in gens.iter().enumerate() {
            if ring.is_homogeneous(g) == Homogeneity::Mixed {
                return Err(Error::NotHomogeneous(format!("ideal entry {k} `{}`", spec.ideal[k])));
            }
        }
        let algebra = GradedAlgebra::new(ring, gens).map_err(|e| e.context("ideal"))?;
        let mut modules = BTreeMap::new();
        for (name, m) in &spec.modules {
            let rows: Vec<Vec<&str>> = m.matrix.iter().map(|r| r.iter().map(|s| s.as_str()).collect()).collect();
            let module = GradedModule::from_rows(algebra.clone(), m.row_twists.clone(), &rows)
                .map_err(|e| e.context(format!("module `{name}`")))?;
            modules.insert(name.clone(), module);
        }
        let module = match &spec.options.module {
            Some(name) => modules.get(name).cloned().ok_or_else(|| Error::Unknown {
                kind: "module",
                name: name.clone(),
            })?,
            None if modules.len() == 1 => modules.values().next().cloned().expect("one module"),
            None if modules.is_empty() => GradedModule::residue_field(algebra.clone()),
            None => {
                return Err(Error::Precondition(
                    "several modules given; name one in options.module".into(),
                ))
            }
        };
        let ring = algebra.ring();
        let mut forms = Vec::new();
        for (k, s) in spec.options.forms.iter().enumerate() {
            let f = ring.parse(s).map_err(|e| e.context(format!("form {k} `{s}`")))?;
            match ring.is_homogeneous(&f) {
                Homogeneity::Mixed => return Err(Error::NotHomogeneous(format!("form {k} `{s}`"))),
                Homogeneity::Degree(0) => {
                    return Err(Error::Precondition(format!("form {k} `{s}` has degree zero")))
                }
                _ => forms.push(f),
            }
        }
        Ok(Context { algebra, module, forms })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub job: JobSpec,
    pub result: Value,
    pub elapsed_ms: f64,
    pub version: String,
}

impl Report {
    /// JSON without the timing field, for byte-level comparisons.
    pub fn deterministic_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if let Some(o) = v.as_object_mut() {
            o.remove("elapsed_ms");
        }
        serde_json::to_string(&v).expect("value serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{} ({} ms)\n", self.job.command, self.elapsed_ms.round()));
        if let Some(t) = self.result.get("table").and_then(Value::as_str) {
            out.push_str(t);
        }
        let rest: serde_json::Map<String, Value> = self
            .result
            .as_object()
            .map(|o| o.iter().filter(|(k, _)| *k != "table").map(|(k, v)| (k.clone(), v.clone())).collect())
            .unwrap_or_default();
        if !rest.is_empty() {
            out.push_str(&serde_json::to_string_pretty(&Value::Object(rest)).expect("value serializes"));
            out.push('\n');
        }
        out
    }

    /// Whether a `check` job found a failing check.
    pub fn has_failed_checks(&self) -> bool {
        self.result
            .get("checks")
            .and_then(Value::as_array)
            .is_some_and(|cs| cs.iter().any(|c| c.get("passed") == Some(&Value::Bool(false))))
    }
}

pub fn run_job(spec: &JobSpec) -> Result<Report> {
    let start = Instant::now();
    let result = match spec.field {
        FieldSpec::Rationals => dispatch(Rationals, spec),
        FieldSpec::PrimeField(p) => dispatch(PrimeField::new(p)?, spec),
    }
    .map_err(|e| e.context(format!("command {}", spec.command)))?;
    Ok(Report {
        job: spec.clone(),
        result,
        elapsed_ms: start.elapsed().as_secs_f64() * 1000.0,
        version: env!("CARGO_PKG_VERSION").to_string(),
    })
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("result serializes")
}

fn dispatch<F: Field>(field: F, spec: &JobSpec) -> Result<Value> {
    let cx = Context::build(field, spec)?;
    let n = spec.cutoff();
    let m = &cx.module;
    Ok(match spec.command {
        Command::Betti => {
            let b = minimal_resolution(m, n)?.betti();
            json!({ "betti": to_value(&b), "table": b.to_string() })
        }
        Command::Reg => to_value(&regularity(m, n)?),
        Command::Ld => to_value(&linearity_defect(m, n)?),
        Command::Ild => to_value(&injective_linearity_defect(m, n)?),
        Command::Koszul => to_value(&is_koszul_algebra(&cx.algebra, n)?),
        Command::CwLinear => match spec.options.i {
            Some(i) => json!({ "i": i, "linear": to_value(&has_i_linear_resolution(m, i, n)?) }),
            None => to_value(&is_componentwise_linear(m, n)?),
        },
        Command::Profile => to_value(&numerical_profile(m)?),
        Command::Ulrich => {
            let p = numerical_profile(m)?;
            let minimal = has_minimal_degree(m)?;
            json!({
                "minimal_degree": minimal,
                "ulrich": minimal && p.dim == cx.algebra.dim() as i32,
                "profile": to_value(&p),
            })
        }
        Command::KoszulCx => {
            if cx.forms.is_empty() {
                return Err(Error::Precondition("koszulcx needs options.forms".into()));
            }
            let k = koszul_complex(&cx.algebra, &cx.forms)?;
            let res = minimal_resolution(m, n + 1)?;
            let t = tensor(&k, &res.complex)?;
            json!({
                "c": cx.forms.len(),
                "koszul_depth": koszul_depth(&cx.forms, m)?,
                "ld": to_value(&linearity_defect_of_complex(&t, n)?),
            })
        }
        Command::Check => json!({ "checks": consistency_checks(m, n)? }),
    })
}

#[derive(Clone, Debug, Serialize)]
struct CheckOutcome {
    name: &'static str,
    passed: bool,
    detail: String,
}

fn consistency_checks<F: Field>(m: &GradedModule<F>, n: i32) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    let res = minimal_resolution(m, n + 1)?;
    let d2 = res.complex.check_d_squared();
    out.push(CheckOutcome {
        name: "d_squared",
        passed: d2.is_ok(),
        detail: d2.err().map(|e| e.to_string()).unwrap_or_default(),
    });
    out.push(CheckOutcome {
        name: "minimal",
        passed: res.complex.is_minimal(),
        detail: String::new(),
    });
    for i in 1..res.complex.hi() {
        let h = res.complex.homology_info(i)?;
        if h.nonzero {
            out.push(CheckOutcome {
                name: "exact",
                passed: false,
                detail: format!("H_{i} of the resolution is nonzero"),
            });
        }
    }
    let s = m.over_ambient();
    let sres = minimal_resolution(&s, m.algebra().nvars() as i32 + 1)?;
    let mut alt = LaurentPoly::zero();
    for (i, j, b) in sres.betti().entries() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        alt.add_term(j, sign * b as i64);
    }
    let num = m.hilbert_numerator();
    out.push(CheckOutcome {
        name: "hilbert_numerator",
        passed: alt == num,
        detail: format!("resolution {alt}, Groebner {num}"),
    });
    let p = numerical_profile(m)?;
    if !p.degenerate {
        let pd = sres.projective_dimension().unwrap_or(-1);
        out.push(CheckOutcome {
            name: "auslander_buchsbaum",
            passed: p.depth + pd == m.algebra().nvars() as i32,
            detail: format!("depth {} + pd {pd}", p.depth),
        });
        if p.dim == p.depth {
            out.push(CheckOutcome {
                name: "degree_bound",
                passed: p.degree >= p.nu as i64,
                detail: format!("deg {} nu {}", p.degree, p.nu),
            });
        }
    }
    let lin = linear_part(&res.complex)?;
    for i in 1..=n.min(res.complex.hi() - 1) {
        if !lin.homology_info(i)?.nonzero && res.complex.homology_info(i)?.nonzero {
            out.push(CheckOutcome {
                name: "ld_vs_sup",
                passed: false,
                detail: format!("H_{i}(lin F) = 0 but H_{i}(F) != 0"),
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = r#"{
  "field": "QQ",
  "vars": ["x", "y"],
  "ideal": ["x^2", "x*y"],
  "modules": { "k": { "row_twists": [0], "matrix": [["x", "y"]] } },
  "command": "ld",
  "options": { "cutoff": 5 }
}"#;

    #[test]
    fn parses_and_runs() {
        let spec = parse_job(EXAMPLE).unwrap();
        assert_eq!(spec.command, Command::Ld);
        let r = run_job(&spec).unwrap();
        assert_eq!(r.result["status"], "ZeroUpTo");
        assert_eq!(r.result["cutoff"], 5);
        let again = run_job(&spec).unwrap();
        assert_eq!(r.deterministic_json(), again.deterministic_json());

        let poly = parse_job(r#"{"field":"GF(101)","vars":["x","y"],"ideal":[],"command":"betti","options":{"cutoff":4}}"#).unwrap();
        let b = run_job(&poly).unwrap();
        assert_eq!(b.result["betti"]["terminated"], true);
    }

    #[test]
    fn reports_errors() {
        let e = parse_job("{\n  \"field\": \"QQ\",\n  \"vars\": [\"x\"\n}").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 4, .. }), "{e}");
        let e = parse_job(r#"{"field":"QQ","vars":["x","y"],"ideal":["x + 1"],"command":"ld"}"#).unwrap_err();
        assert!(e.to_string().contains("x + 1"), "{e}");
        let e = parse_job(r#"{"field":"QQ","vars":["x"],"command":"frobnicate"}"#).unwrap_err();
        assert!(e.to_string().contains("unknown command `frobnicate`"), "{e}");
        let e = parse_job(r#"{"field":"QQ","vars":["x"],"command":"ld","options":{"module":"M"}}"#).unwrap_err();
        assert!(e.to_string().contains("unknown module `M`"), "{e}");
    }

    #[test]
    fn check_command_passes() {
        let spec = parse_job(
            r#"{"field":"GF(101)","vars":["x","y","z"],"ideal":["x*y"],
                "modules":{"M":{"row_twists":[0],"matrix":[["x^2","z"]]}},"command":"check","options":{"cutoff":3}}"#,
        )
        .unwrap();
        let r = run_job(&spec).unwrap();
        assert!(!r.has_failed_checks(), "{}", r.to_text());
    }
}
