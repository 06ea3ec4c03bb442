use std::collections::BTreeMap;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complexes::{
    has_i_linear_resolution, koszul_complex, minimal_resolution, syzygy_module, tensor, FreeComplex,
};
use crate::error::{Error, Result};
use crate::field::{Field, PrimeField, Rationals};
use crate::graded::{
    has_minimal_degree, is_cohen_macaulay, numerical_profile, Algebra, GradedAlgebra, GradedModule, Matrix,
};
use crate::groebner::ModuleVector;
use crate::linearity::{
    base_change, injective_linearity_defect, is_componentwise_linear, is_koszul_algebra, koszul_depth,
    linear_part, linearity_defect, linearity_defect_of_complex, LdResult, LdStatus,
};
use crate::poly::{Monomial, Polynomial};

pub const SUITES: [&str; 9] = [
    "ldvssup",
    "tensors",
    "koszulcx",
    "modx",
    "changeofrings",
    "cwlinear",
    "mindegree",
    "gorbounds",
    "lintensor",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteScale {
    pub instances: usize,
    pub cutoff: i32,
}

impl SuiteScale {
    pub fn default_for(suite: &str) -> Self {
        match suite {
            "lintensor" => SuiteScale { instances: 25, cutoff: 3 },
            "cwlinear" => SuiteScale { instances: 100, cutoff: 5 },
            _ => SuiteScale { instances: 40, cutoff: 4 },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteFailure {
    pub instance: usize,
    pub check: String,
    pub input: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub scale: SuiteScale,
    pub instances: usize,
    /// Instances where no hypothesis could be certified.
    pub vacuous: usize,
    pub checks: usize,
    pub passed: usize,
    pub failures: Vec<SuiteFailure>,
    /// Per-check and per-tag counts.
    pub counts: BTreeMap<String, usize>,
    pub elapsed_ms: f64,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} instances ({} vacuous), {}/{} checks passed",
            self.suite, self.instances, self.vacuous, self.passed, self.checks
        )
    }
}

#[derive(Default)]
struct Outcome {
    input: String,
    checks: Vec<(String, bool, String)>,
    tags: Vec<String>,
}

impl Outcome {
    fn check(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> String) {
        let d = if ok { String::new() } else { detail() };
        self.checks.push((name.to_string(), ok, d));
    }

    fn tag(&mut self, t: impl Into<String>) {
        self.tags.push(t.into());
    }
}

const NEG: i64 = -1_000_000;
const POS: i64 = 1_000_000;

/// Certified interval `[lo, hi]` containing the true `ld`.
#[derive(Clone, Copy, Debug)]
struct Bounds {
    lo: i64,
    hi: i64,
}

fn bounds(r: &LdResult) -> Bounds {
    match r.status {
        LdStatus::Exact { value } => {
            let v = value.map_or(NEG, i64::from);
            Bounds { lo: v, hi: v }
        }
        LdStatus::AtLeast { value } => Bounds {
            lo: value.into(),
            hi: POS,
        },
        LdStatus::ZeroUpTo { .. } => Bounds {
            lo: r.max_nonzero().map_or(NEG, i64::from),
            hi: POS,
        },
    }
}

/// True unless the certified data contradict `a + shift >= b`.
fn consistent_ge(a: Bounds, shift: i64, b: Bounds) -> bool {
    a.hi == POS || b.lo == NEG || a.hi + shift >= b.lo
}

/// Certified to be Koszul (`ld <= 0` with every position checked).
fn certified_koszul(r: &LdResult) -> bool {
    matches!(r.status, LdStatus::Exact { value } if value.is_none_or(|v| v <= 0))
}

fn instance_rng(seed: u64, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(index as u64))
}

fn gf101() -> PrimeField {
    PrimeField::new(101).expect("101 is prime")
}

/// Koszul fixture algebras over `GF(101)`.
pub(crate) fn koszul_fixtures() -> Vec<Algebra<PrimeField>> {
    let f = gf101();
    vec![
        GradedAlgebra::polynomial(f, &["x", "y"]).expect("fixture"),
        GradedAlgebra::polynomial(f, &["x", "y", "z"]).expect("fixture"),
        GradedAlgebra::parse(f, &["x", "y"], &["x^2", "x*y"]).expect("fixture"),
        GradedAlgebra::parse(f, &["x", "y", "z"], &["x*y", "y*z"]).expect("fixture"),
        GradedAlgebra::parse(f, &["x", "y", "z"], &["x^2", "y*z"]).expect("fixture"),
    ]
}

pub(crate) fn non_koszul_fixture() -> Algebra<PrimeField> {
    GradedAlgebra::parse(gf101(), &["x"], &["x^3"]).expect("fixture")
}

fn random_monomial<R: Rng>(n: usize, d: u32, rng: &mut R) -> Monomial {
    let all = Monomial::all_of_degree(n, d);
    *all.choose(rng).expect("nonempty")
}

fn random_sparse_form<F: Field, R: Rng>(alg: &Algebra<F>, d: u32, rng: &mut R) -> Polynomial<F::Elem> {
    let ring = alg.ring();
    let mut f = ring.zero();
    for _ in 0..8 {
        f = if rng.gen_bool(0.4) {
            ring.term(random_monomial(ring.nvars(), d, rng), ring.field().one())
        } else {
            ring.random_form(d, 0.5, rng)
        };
        f = alg.reduce(&f);
        if !f.is_zero() {
            break;
        }
    }
    f
}

/// A random module: generic presentations, monomial quotients, ideals and
/// quotients by linear forms.
pub(crate) fn random_module<F: Field, R: Rng>(alg: &Algebra<F>, rng: &mut R) -> Result<GradedModule<F>> {
    let ring = alg.ring();
    let n = ring.nvars();
    match rng.gen_range(0..4) {
        0 => {
            let r = rng.gen_range(1..=2);
            let target: Vec<i32> = (0..r).map(|_| rng.gen_range(0..=1)).collect();
            let lo = *target.iter().min().expect("nonempty");
            let q = rng.gen_range(1..=3);
            let mut source = Vec::new();
            let mut rows: Vec<Vec<Polynomial<F::Elem>>> = vec![Vec::new(); r];
            for _ in 0..q {
                let d = lo + rng.gen_range(1..=2);
                let col: Vec<_> = target
                    .iter()
                    .map(|&a| {
                        if d - a >= 1 && rng.gen_bool(0.8) {
                            random_sparse_form(alg, (d - a) as u32, rng)
                        } else {
                            ring.zero()
                        }
                    })
                    .collect();
                if col.iter().all(|p| p.is_zero()) {
                    continue;
                }
                source.push(d);
                for (row, p) in rows.iter_mut().zip(col) {
                    row.push(p);
                }
            }
            let m = Matrix::from_rows(ring, target, Some(source), &rows)?;
            GradedModule::cokernel(alg.clone(), m)
        }
        1 => {
            let k = rng.gen_range(1..=3);
            let gens: Vec<_> = (0..k)
                .map(|_| {
                    let d = rng.gen_range(2..=3);
                    ring.term(random_monomial(n, d, rng), ring.field().one())
                })
                .collect();
            GradedModule::cyclic(alg.clone(), &gens)
        }
        2 => {
            let k = rng.gen_range(1..=3);
            let gens: Vec<ModuleVector<F::Elem>> = (0..k)
                .map(|_| {
                    let d = rng.gen_range(1..=2);
                    ModuleVector::from_polynomial(&random_sparse_form(alg, d, rng), 0)
                })
                .filter(|v| !v.is_zero())
                .collect();
            GradedModule::free(alg.clone(), vec![0]).submodule(&gens)
        }
        _ => {
            let k = rng.gen_range(0..n);
            let forms: Vec<_> = (0..k).map(|_| ring.random_form(1, 1.0, rng)).collect();
            let twist = rng.gen_range(0..=1);
            GradedModule::free(alg.clone(), vec![twist]).quotient_by_sequence(&forms)
        }
    }
}

fn random_forms<F: Field, R: Rng>(alg: &Algebra<F>, c: usize, max_deg: u32, rng: &mut R) -> Vec<Polynomial<F::Elem>> {
    (0..c)
        .map(|_| {
            let d = rng.gen_range(1..=max_deg);
            random_sparse_form(alg, d, rng)
        })
        .collect()
}

fn describe_forms<F: Field>(alg: &Algebra<F>, forms: &[Polynomial<F::Elem>]) -> String {
    let ring = alg.ring();
    forms.iter().map(|f| ring.format(f)).collect::<Vec<_>>().join(", ")
}

/// `max { i : H_i(C) ≠ 0 }` over positions `lo..=top`.
fn sup_homology<F: Field>(c: &FreeComplex<F>, top: i32) -> Result<Option<i32>> {
    let mut s = None;
    for i in c.lo()..=top {
        if c.homology_info(i)?.nonzero {
            s = Some(i);
        }
    }
    Ok(s)
}

/// Runs a named suite; instances are generated from `seed` and evaluated in
/// parallel, then merged by index.
pub fn run_property_suite(name: &str, seed: u64, scale: Option<SuiteScale>) -> Result<SuiteReport> {
    let scale = scale.unwrap_or_else(|| SuiteScale::default_for(name));
    let f: fn(usize, &mut ChaCha8Rng, i32) -> Result<Outcome> = match name {
        "ldvssup" => ldvssup,
        "tensors" => tensors,
        "koszulcx" => koszulcx,
        "modx" => modx,
        "changeofrings" => changeofrings,
        "cwlinear" => cwlinear,
        "mindegree" => mindegree,
        "gorbounds" => gorbounds,
        "lintensor" => lintensor,
        _ => {
            return Err(Error::Unknown {
                kind: "suite",
                name: name.to_string(),
            })
        }
    };
    let start = Instant::now();
    let outcomes: Vec<Outcome> = (0..scale.instances)
        .into_par_iter()
        .map(|i| {
            let mut rng = instance_rng(seed, i);
            f(i, &mut rng, scale.cutoff).unwrap_or_else(|e| Outcome {
                input: format!("instance {i}"),
                checks: vec![("computation".into(), false, e.to_string())],
                tags: Vec::new(),
            })
        })
        .collect();
    let mut report = SuiteReport {
        suite: name.to_string(),
        seed,
        scale,
        instances: scale.instances,
        vacuous: 0,
        checks: 0,
        passed: 0,
        failures: Vec::new(),
        counts: BTreeMap::new(),
        elapsed_ms: 0.0,
    };
    for (i, o) in outcomes.into_iter().enumerate() {
        if o.checks.is_empty() {
            report.vacuous += 1;
        }
        for t in o.tags {
            *report.counts.entry(t).or_default() += 1;
        }
        for (check, ok, detail) in o.checks {
            report.checks += 1;
            *report.counts.entry(format!("check:{check}")).or_default() += 1;
            if ok {
                report.passed += 1;
            } else {
                report.failures.push(SuiteFailure {
                    instance: i,
                    check,
                    input: o.input.clone(),
                    detail,
                });
            }
        }
    }
    report.elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
    Ok(report)
}

fn pick_koszul<R: Rng>(rng: &mut R) -> Algebra<PrimeField> {
    let fx = koszul_fixtures();
    fx[rng.gen_range(0..fx.len())].clone()
}

fn nonzero_module<F: Field, R: Rng>(alg: &Algebra<F>, rng: &mut R) -> Result<GradedModule<F>> {
    loop {
        let m = random_module(alg, rng)?;
        if !m.is_zero() {
            return Ok(m);
        }
    }
}

fn ldvssup(_: usize, rng: &mut ChaCha8Rng, n: i32) -> Result<Outcome> {
    let alg = if rng.gen_bool(0.8) { pick_koszul(rng) } else { non_koszul_fixture() };
    let m = nonzero_module(&alg, rng)?;
    let c = rng.gen_range(1..=2);
    let forms = random_forms(&alg, c, 2, rng);
    let mut o = Outcome {
        input: format!("{} ; forms {}", m.describe(), describe_forms(&alg, &forms)),
        ..Default::default()
    };
    let k = koszul_complex(&alg, &forms)?;
    let f = minimal_resolution(&m, n + 1)?;
    let cx = tensor(&k, &f.complex)?;
    let ld = linearity_defect_of_complex(&cx, n)?;
    let top = ld.cutoff;
    for i in cx.lo()..=top {
        if ld.nonzero_at(i) == Some(false) {
            let h = cx.homology_info(i)?.nonzero;
            o.check("lin_zero_implies_zero", !h, || format!("H_{i}(lin C) = 0 but H_{i}(C) != 0"));
        }
    }
    let Some(s) = sup_homology(&cx, top.min(c as i32))? else {
        o.check("homology_nonzero", false, || "K(x;M) has no homology".into());
        return Ok(o);
    };
    o.tag(format!("sup_h={s}"));
    let b = bounds(&ld);
    o.check("ld_at_least_sup", b.hi >= s as i64, || format!("ld {} < sup H {s}", ld.status));
    let w = syzygy_module(&cx, s)?;
    let ldw = linearity_defect(&w, n - s)?;
    for i in s + 1..=top {
        let (a, bw) = (ld.nonzero_at(i), ldw.nonzero_at(i - s));
        if let (Some(a), Some(bw)) = (a, bw) {
            o.check("shifted_bitmaps", a == bw, || format!("position {i}: complex {a}, W {bw}"));
        }
    }
    if let (Some(x), Some(y)) = (ld.exact(), ldw.exact()) {
        o.check("ld_equals_shift", x == y.map(|v| v + s), || format!("ld C {x:?}, s {s}, ld W {y:?}"));
    }
    Ok(o)
}

fn tensors(_: usize, rng: &mut ChaCha8Rng, n: i32) -> Result<Outcome> {
    let fx = koszul_fixtures();
    let regular = rng.gen_bool(0.5);
    let alg = if regular { fx[rng.gen_range(0..2)].clone() } else { fx[rng.gen_range(2..fx.len())].clone() };
    let m = nonzero_module(&alg, rng)?;
    let (g, pd_n, nm) = if regular {
        let nmod = nonzero_module(&alg, rng)?;
        let g = minimal_resolution(&nmod, alg.nvars() as i32 + 1)?;
        let pd = g.projective_dimension().expect("finite over a polynomial ring");
        let d = nmod.describe();
        (g.complex, pd, d)
    } else {
        let c = rng.gen_range(1..=2);
        let forms = random_forms(&alg, c, 2, rng);
        let k = koszul_complex(&alg, &forms)?;
        let pd = k.hi();
        (k, pd, format!("K({})", describe_forms(&alg, &forms)))
    };
    let mut o = Outcome {
        input: format!("M = {} ; N = {nm}", m.describe()),
        ..Default::default()
    };
    let f = minimal_resolution(&m, n + 1)?;
    let ldm = linearity_defect_of_complex(&f.complex, n)?;
    let fg = tensor(&f.complex, &g)?;
    let ldfg = linearity_defect_of_complex(&fg, n)?;
    let (bm, bfg) = (bounds(&ldm), bounds(&ldfg));
    o.check("upper", consistent_ge(bm, pd_n as i64, bfg), || {
        format!("ld M {} + pd N {pd_n} < ld(F(x)G) {}", ldm.status, ldfg.status)
    });
    o.check("lower", consistent_ge(bfg, 0, bm), || {
        format!("ld(F(x)G) {} < ld M {} + inf H(N) 0", ldfg.status, ldm.status)
    });
    if regular {
        let ldn = linearity_defect_of_complex(&g, n)?;
        let bn = bounds(&ldn);
        let sum = Bounds {
            lo: if bm.lo == NEG || bn.lo == NEG { NEG } else { bm.lo + bn.lo },
            hi: POS,
        };
        o.check("regular_lower", consistent_ge(bfg, 0, sum), || {
            format!("ld(F(x)G) {} < ld M {} + ld N {}", ldfg.status, ldm.status, ldn.status)
        });
        o.tag("regular");
    }
    Ok(o)
}

fn koszulcx(_: usize, rng: &mut ChaCha8Rng, n: i32) -> Result<Outcome> {
    let alg = if rng.gen_bool(0.8) { pick_koszul(rng) } else { non_koszul_fixture() };
    let m = nonzero_module(&alg, rng)?;
    let c = rng.gen_range(1..=2);
    let forms = random_forms(&alg, c, 2, rng);
    let mut o = Outcome {
        input: format!("{} ; forms {}", m.describe(), describe_forms(&alg, &forms)),
        ..Default::default()
    };
    let c = c as i64;
    let f = minimal_resolution(&m, n + 1)?;
    let ldm = linearity_defect_of_complex(&f.complex, n)?;
    let k = koszul_complex(&alg, &forms)?;
    let ldk = linearity_defect_of_complex(&tensor(&k, &f.complex)?, n)?;
    let (bm, bk) = (bounds(&ldm), bounds(&ldk));
    o.check("upper", consistent_ge(bm, c, bk), || format!("ld M {} + c < ld K {}", ldm.status, ldk.status));
    o.check("lower", consistent_ge(bk, 0, bm), || format!("ld K {} < ld M {}", ldk.status, ldm.status));

    let kr = linearity_defect_of_complex(&k, n.max(c as i32))?;
    let ring = alg.ring();
    let linear: Vec<_> = forms.iter().map(|f| ring.linear_component(f)).collect::<Result<_>>()?;
    let depth = koszul_depth(&linear, &GradedModule::free(alg.clone(), vec![0]))?;
    let expected = c as i32 - depth;
    o.check("ring_formula", kr.exact() == Some(Some(expected)), || {
        format!("ld K(x;R) {} but c - depth = {expected}", kr.status)
    });
    if forms.iter().all(|f| f.terms().iter().all(|(m, _)| m.degree() >= 2)) {
        o.tag("quadratic_forms");
        o.check("quadratic_forms", kr.exact() == Some(Some(c as i32)), || {
            format!("ld K(x;R) {} for forms in m^2", kr.status)
        });
    }
    Ok(o)
}

type SequenceQuotient<F> = (Vec<Polynomial<<F as Field>::Elem>>, GradedModule<F>);

/// Builds a sequence of forms regular on `m`, each linear or quadratic.
fn regular_sequence<F: Field, R: Rng>(
    m: &GradedModule<F>,
    c: usize,
    rng: &mut R,
) -> Result<Option<SequenceQuotient<F>>> {
    let alg = m.algebra();
    let mut forms = Vec::new();
    let mut q = m.clone();
    for _ in 0..c {
        let mut found = None;
        for _ in 0..4 {
            let d = if rng.gen_bool(0.6) { 1 } else { 2 };
            let f = alg.ring().random_form(d, 1.0, rng);
            if !f.is_zero() && q.multiplication_kernel(&f)?.is_empty() {
                found = Some(f);
                break;
            }
        }
        let Some(f) = found else { return Ok(None) };
        q = q.quotient_by_sequence(std::slice::from_ref(&f))?;
        forms.push(f);
    }
    Ok(Some((forms, q)))
}

fn modx(_: usize, rng: &mut ChaCha8Rng, n: i32) -> Result<Outcome> {
    let mut o = Outcome::default();
    let mut found = None;
    for _ in 0..8 {
        let alg = pick_koszul(rng);
        let m = nonzero_module(&alg, rng)?;
        let c = rng.gen_range(1..=2);
        if let Some((forms, q)) = regular_sequence(&m, c, rng)? {
            found = Some((alg, m, c, forms, q));
            break;
        }
        o.tag("no_regular_sequence");
    }
    let Some((alg, m, c, forms, q)) = found else {
        return Ok(o);
    };
    o.input = format!("{} ; forms {}", m.describe(), describe_forms(&alg, &forms));
    let ring = alg.ring();
    let linear: Vec<_> = forms.iter().map(|f| ring.linear_component(f)).collect::<Result<_>>()?;
    let depth = koszul_depth(&linear, &m)?;
    let ldm = linearity_defect(&m, n)?;
    let ldq = linearity_defect(&q, n)?;
    let d = c as i32 - depth;
    if ldm.is_zero_up_to() && ldm.max_nonzero().is_none_or(|v| v <= 0) {
        o.tag("koszul_module");
        let ok = match ldq.status {
            LdStatus::Exact { value } => value.unwrap_or(i32::MIN).max(0) == d,
            _ => d > ldq.cutoff || ldq.max_nonzero().unwrap_or(0).max(0) == d,
        };
        o.check("quotient_formula", ok, || format!("ld(M/xM) {} but c - depth = {d}", ldq.status));
    }
    if certified_koszul(&ldq) {
        o.check("quotient_koszul_lifts", bounds(&ldm).lo < 1, || {
            format!("M/xM Koszul but ld M {}", ldm.status)
        });
    }
    if depth == c as i32 {
        o.tag("initial_forms_regular");
        let contradict = |a: &LdResult, b: &LdResult| certified_koszul(a) && bounds(b).lo >= 1;
        o.check("simultaneous", !contradict(&ldm, &ldq) && !contradict(&ldq, &ldm), || {
            format!("ld M {} vs ld M/xM {}", ldm.status, ldq.status)
        });
    }
    Ok(o)
}

fn changeofrings(_: usize, rng: &mut ChaCha8Rng, n: i32) -> Result<Outcome> {
    let fx = koszul_fixtures();
    let mut o = Outcome::default();
    let mut found = None;
    for _ in 0..10 {
        let r = if rng.gen_bool(0.6) { fx[rng.gen_range(0..2)].clone() } else { fx[rng.gen_range(2..fx.len())].clone() };
        let ring = r.ring();
        let k = rng.gen_range(1..=2);
        let j: Vec<_> = (0..k)
            .map(|_| r.reduce(&ring.term(random_monomial(ring.nvars(), 2, rng), ring.field().one())))
            .filter(|f| !f.is_zero())
            .collect();
        if j.is_empty() {
            o.tag("trivial_quotient");
            continue;
        }
        let rs = minimal_resolution(&GradedModule::cyclic(r.clone(), &j)?, n + 1)?;
        match rs.projective_dimension() {
            Some(pd) => {
                found = Some((r.quotient(&j)?, pd, r));
                break;
            }
            None => o.tag("infinite_pd"),
        }
    }
    let Some((s, pd, r)) = found else {
        return Ok(o);
    };
    let m = nonzero_module(&r, rng)?;
    o.input = format!("{} -> {} ; M = {}", r.describe(), s.describe(), m.describe());
    let f = minimal_resolution(&m, n + 1)?;
    let ldr = linearity_defect_of_complex(&f.complex, n)?;
    let sf = base_change(&f.complex, &s)?;
    let lds = linearity_defect_of_complex(&sf, n)?;
    let (br, bs) = (bounds(&ldr), bounds(&lds));
    o.check("upper", consistent_ge(br, pd as i64, bs), || {
        format!("ld_R M {} + pd {pd} < ld_S {}", ldr.status, lds.status)
    });
    o.check("lower", consistent_ge(bs, 0, br), || format!("ld_S {} < ld_R M {}", lds.status, ldr.status));

    let top = lds.cutoff;
    let Some(sup) = sup_homology(&sf, top)? else {
        o.check("tor_nonzero", false, || "S (x) F is exact".into());
        return Ok(o);
    };
    o.check("sup_below_pd", sup <= pd, || format!("sup H(S (x) F) = {sup} > pd {pd}"));
    let w = syzygy_module(&sf, sup)?;
    let ldw = linearity_defect(&w, n - sup)?;
    for i in sup + 1..=top {
        if let (Some(a), Some(b)) = (lds.nonzero_at(i), ldw.nonzero_at(i - sup)) {
            o.check("chain_shift", a == b, || format!("position {i}: S (x) F {a}, W {b}"));
        }
    }
    let bw = bounds(&ldw);
    let shifted = Bounds {
        lo: if bw.lo == NEG { NEG } else { bw.lo + sup as i64 },
        hi: if bw.hi == POS { POS } else { bw.hi + pd as i64 },
    };
    o.check("chain_bound", consistent_ge(shifted, 0, br), || {
        format!("ld_R M {} > ld_S W {} + pd {pd}", ldr.status, ldw.status)
    });
    Ok(o)
}

fn cwlinear(index: usize, rng: &mut ChaCha8Rng, n: i32) -> Result<Outcome> {
    let fx = koszul_fixtures();
    let alg = fx[index % fx.len()].clone();
    let m = nonzero_module(&alg, rng)?;
    let mut o = Outcome {
        input: m.describe(),
        ..Default::default()
    };
    let ld = linearity_defect(&m, n)?;
    let cw = is_componentwise_linear(&m, n)?;
    let koszul = ld.is_zero_up_to();
    o.tag(if koszul { "ld_zero" } else { "ld_positive" });
    o.check("equivalence", koszul == cw.holds(), || {
        format!("ld {} but componentwise {:?}", ld.status, cw.overall)
    });
    if let Some(i) = m.indeg() {
        if has_i_linear_resolution(&m, i, n)?.holds() {
            o.tag("linear");
            let ring = alg.ring();
            let gens: Vec<ModuleVector<F101>> = m
                .minimal_presentation()
                .generator_twists()
                .iter()
                .enumerate()
                .flat_map(|(c, _)| (0..ring.nvars()).map(move |v| (c, v)))
                .map(|(c, v)| ModuleVector::from_polynomial(&ring.var(v), c))
                .collect();
            let mm = m.minimal_presentation().submodule(&gens)?;
            let st = has_i_linear_resolution(&mm, i + 1, n)?;
            o.check("maximal_ideal_times", st.holds(), || format!("mM is not {}-linear: {st:?}", i + 1));
        }
    }
    Ok(o)
}

type F101 = u32;

fn mindegree(index: usize, rng: &mut ChaCha8Rng, n: i32) -> Result<Outcome> {
    let mut algs = koszul_fixtures();
    algs.push(non_koszul_fixture());
    let alg = algs[index % algs.len()].clone();
    let koszul = is_koszul_algebra(&alg, n)?;
    let ring = alg.ring();
    let m = match rng.gen_range(0..4) {
        0 => GradedModule::residue_field(alg.clone()),
        1 => {
            let k = rng.gen_range(0..ring.nvars());
            let forms: Vec<_> = (0..k).map(|_| ring.random_form(1, 1.0, rng)).collect();
            GradedModule::free(alg.clone(), vec![0]).quotient_by_sequence(&forms)?
        }
        _ => nonzero_module(&alg, rng)?,
    };
    let mut o = Outcome {
        input: m.describe(),
        ..Default::default()
    };
    if m.is_zero() {
        return Ok(o);
    }
    let p = numerical_profile(&m)?;
    if is_cohen_macaulay(&m)? {
        o.tag("cohen_macaulay");
        o.check("degree_bound", p.degree >= p.nu as i64, || format!("deg {} < nu {}", p.degree, p.nu));
    }
    let k = GradedModule::residue_field(alg.clone());
    o.check("residue_field_minimal", has_minimal_degree(&k)?, || "k is not of minimal degree".into());
    if has_minimal_degree(&m)? {
        o.tag("minimal_degree");
        let ld = linearity_defect(&m, n)?;
        if koszul.holds() {
            o.check("koszul_ring", bounds(&ld).lo < 1, || format!("ld {} over a Koszul ring", ld.status));
        } else {
            o.check("non_koszul_ring", !certified_koszul(&ld), || format!("ld {} over a non-Koszul ring", ld.status));
        }
    }
    if !koszul.holds() {
        let ldk = linearity_defect(&k, n)?;
        o.check("residue_field_ld", bounds(&ldk).lo >= 1, || format!("ld k {}", ldk.status));
    }
    Ok(o)
}

fn gorbounds(_: usize, rng: &mut ChaCha8Rng, n: i32) -> Result<Outcome> {
    let alg = GradedAlgebra::polynomial(Rationals, &["x", "y", "z"])?;
    let m = nonzero_module(&alg, rng)?;
    let mut o = Outcome {
        input: m.describe(),
        ..Default::default()
    };
    let ild = injective_linearity_defect(&m, n)?;
    let p = numerical_profile(&m)?;
    let dim_r = alg.dim() as i32;
    let Some(Some(v)) = ild.exact() else {
        o.check("ild_exact", false, || format!("ild {}", ild.status));
        return Ok(o);
    };
    o.tag(format!("ild={v}"));
    o.check("upper", dim_r >= v, || format!("ild {v} > dim R {dim_r}"));
    o.check("lower", v >= p.dim, || format!("ild {v} < dim M {}", p.dim));
    let top = ild.nonzero_at(0) == Some(true);
    o.check("equality_case", (v == dim_r) == top, || {
        format!("ild {v}, dim R {dim_r}, H_0 nonzero {top}")
    });
    Ok(o)
}

fn random_complex<R: Rng>(alg: &Algebra<PrimeField>, rng: &mut R) -> Result<FreeComplex<PrimeField>> {
    if rng.gen_bool(0.5) {
        let c = rng.gen_range(1..=2);
        let forms = random_forms(alg, c, 2, rng);
        koszul_complex(alg, &forms)
    } else {
        let m = nonzero_module(alg, rng)?;
        Ok(minimal_resolution(&m, 3)?.complex)
    }
}

fn lintensor(_: usize, rng: &mut ChaCha8Rng, _: i32) -> Result<Outcome> {
    let alg = if rng.gen_bool(0.8) { pick_koszul(rng) } else { non_koszul_fixture() };
    let f = random_complex(&alg, rng)?;
    let g = random_complex(&alg, rng)?;
    let lhs = tensor(&linear_part(&f)?, &linear_part(&g)?)?;
    let rhs = linear_part(&tensor(&f, &g)?)?;
    let mut o = Outcome {
        input: format!("F:\n{}\nG:\n{}", f.describe(), g.describe()),
        ..Default::default()
    };
    let same = lhs.lo() == rhs.lo() && lhs.modules() == rhs.modules() && lhs.differentials() == rhs.differentials();
    o.check("matrix_identity", same, || {
        format!("lin F (x) lin G:\n{}\nlin(F (x) G):\n{}", lhs.describe(), rhs.describe())
    });
    Ok(o)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_run_small() {
        for s in SUITES {
            let scale = SuiteScale {
                instances: 3,
                cutoff: if s == "gorbounds" { 4 } else { 3 },
            };
            let r = run_property_suite(s, 7, Some(scale)).unwrap();
            assert!(r.ok(), "{s}: {:#?}", r.failures);
        }
        assert!(run_property_suite("nope", 1, None).is_err());
    }
}
