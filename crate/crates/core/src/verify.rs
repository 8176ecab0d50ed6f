//! Named verification checks run per `n`, and the report they produce.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;
use serde_json::{json, Value};

use crate::chebyshev::{t, u};
use crate::discriminant::{
    allowed_primes, closed_form, compare_supports, disc, schur_product, schur_product_by_resultant,
    support_check, ClosedFormKind, Recurrence,
};
use crate::factor::{factor_int, FactoredInt};
use crate::identities;
use crate::muttjeff::{self, DecompositionResult, MuttJeffError};
use crate::serialize::rat_to_string;
use crate::RatPoly;

/// Outcome of a single check. `pass = false` is a mathematical failure;
/// `error` marks checks that could not run at all.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub pass: bool,
    pub details: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub values: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CheckResult {
    fn new(pass: bool, details: impl Into<String>) -> Self {
        CheckResult { pass, details: details.into(), value: None, values: None, error: None, elapsed_ms: None }
    }

    fn not_applicable(n: usize) -> Self {
        Self::new(true, format!("not applicable for n = {n}"))
    }

    fn infrastructure(msg: String) -> Self {
        CheckResult { error: Some(msg.clone()), ..Self::new(false, msg) }
    }

    fn with_value(mut self, v: impl Into<String>) -> Self {
        self.value = Some(v.into());
        self
    }

    fn with_values(mut self, v: Value) -> Self {
        self.values = Some(v);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub pass: bool,
    pub checks: BTreeMap<&'static str, CheckResult>,
}

impl VerificationReport {
    pub fn has_errors(&self) -> bool {
        self.checks.values().any(|c| c.error.is_some())
    }
}

type CheckFn = fn(usize) -> Result<CheckResult, String>;

/// Every registered check, in report order.
pub const CHECKS: &[(&str, CheckFn)] = &[
    ("chebyshev_identities", check_chebyshev),
    ("disc_t", check_disc_t),
    ("disc_u", check_disc_u),
    ("disc_z_structure", check_disc_z),
    ("jeff_oracle", check_jeff_oracle),
    ("pointmass_disc", check_pointmass),
    ("schur_resu", check_schur),
    ("support_jeff", check_support_jeff),
    ("support_mutt", check_support_mutt),
    ("theorem2", check_theorem2),
    ("theorem3", check_theorem3),
    ("transform_identities", check_transform),
];

pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(name, _)| *name).collect()
}

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Restrict to these checks; `None` runs all of them.
    pub only: Option<BTreeSet<String>>,
    /// Record wall-clock time per check (makes output nondeterministic).
    pub timings: bool,
}

pub fn verify(n: usize, opts: &VerifyOptions) -> VerificationReport {
    let mut checks = BTreeMap::new();
    for (name, f) in CHECKS {
        if opts.only.as_ref().is_some_and(|s| !s.contains(*name)) {
            continue;
        }
        let start = Instant::now();
        let mut result = f(n).unwrap_or_else(CheckResult::infrastructure);
        if opts.timings {
            result.elapsed_ms = Some(start.elapsed().as_millis() as u64);
        }
        checks.insert(*name, result);
    }
    let pass = checks.values().all(|c| c.pass);
    VerificationReport { n, pass, checks }
}

/// Hint primes for discriminants at `n`.
pub fn hints(n: usize) -> BTreeSet<BigInt> {
    allowed_primes(n.max(1))
}

/// Factors an integral rational.
pub fn factor_rat(v: &BigRational, n: usize) -> Result<FactoredInt, String> {
    if !v.is_integer() {
        return Err(format!("{v} is not an integer"));
    }
    factor_int(&v.to_integer(), &hints(n)).map_err(|e| e.to_string())
}

fn identity_result(results: Vec<(&'static str, bool)>) -> CheckResult {
    let failed: Vec<_> = results.iter().filter(|(_, ok)| !ok).map(|(k, _)| *k).collect();
    let names: Vec<_> = results.iter().map(|(k, _)| *k).collect();
    if failed.is_empty() {
        CheckResult::new(true, format!("exact: {}", names.join(", ")))
    } else {
        CheckResult::new(false, format!("failed: {}", failed.join(", ")))
    }
}

fn check_chebyshev(n: usize) -> Result<CheckResult, String> {
    Ok(identity_result(identities::chebyshev_suite(n)))
}

fn check_transform(n: usize) -> Result<CheckResult, String> {
    if n == 0 {
        return Ok(CheckResult::not_applicable(n));
    }
    Ok(identity_result(identities::transform_suite(n)))
}

fn formula_check(what: &str, computed: &BigRational, formula: &BigRational, n: usize) -> Result<CheckResult, String> {
    let f = factor_rat(&computed.abs(), n)?;
    let pass = computed == formula;
    Ok(CheckResult::new(pass, format!("{what} = {f}, formula {}", rat_to_string(formula)))
        .with_value(f.to_string())
        .with_values(json!({ "disc": f, "formula": rat_to_string(formula) })))
}

fn check_disc_t(n: usize) -> Result<CheckResult, String> {
    if n == 0 {
        return Ok(CheckResult::not_applicable(n));
    }
    let d = disc(&t(n)).map_err(|e| e.to_string())?;
    formula_check("disc(T_n)", &d, &closed_form(ClosedFormKind::DiscT, n), n)
}

fn check_disc_u(n: usize) -> Result<CheckResult, String> {
    if n == 0 {
        return Ok(CheckResult::not_applicable(n));
    }
    let d = disc(&u(n)).map_err(|e| e.to_string())?;
    formula_check("disc(U_n)", &d, &closed_form(ClosedFormKind::DiscU, n), n)
}

fn check_schur(n: usize) -> Result<CheckResult, String> {
    if n == 0 {
        return Ok(CheckResult::not_applicable(n));
    }
    let rec = Recurrence::chebyshev_u(2 * n);
    let closed = schur_product(&rec, 2 * n).map_err(|e| e.to_string())?;
    let brute = schur_product_by_resultant(&rec, 2 * n).map_err(|e| e.to_string())?;
    let closed_n = schur_product(&rec, n).map_err(|e| e.to_string())?;
    let brute_n = schur_product_by_resultant(&rec, n).map_err(|e| e.to_string())?;
    // the product is (-1)^n, so only its magnitude is 1
    let expected = if n % 2 == 1 { -BigRational::one() } else { BigRational::one() };
    let pass = closed == expected && brute == expected && closed_n == brute_n;
    Ok(CheckResult::new(
        pass,
        format!(
            "prod over U_{} roots of U_{} = {} (resultant route {}, |value| = 1); order {n}: {} vs {}",
            2 * n,
            2 * n - 1,
            closed,
            brute,
            closed_n,
            brute_n
        ),
    )
    .with_value(closed.to_string()))
}

fn check_theorem2(n: usize) -> Result<CheckResult, String> {
    if n < 2 {
        return Ok(CheckResult::not_applicable(n));
    }
    let up = muttjeff::uprime_sqrt(n).map_err(|e| e.to_string())?;
    let d = disc(&up).map_err(|e| e.to_string())?;
    formula_check("disc(U'_{2n-1}(sqrt x))", &d, &closed_form(ClosedFormKind::DiscUprimeSqrt, n), n)
}

fn check_theorem3(n: usize) -> Result<CheckResult, String> {
    if n < 2 {
        return Ok(CheckResult::not_applicable(n));
    }
    let (raw, prim) = muttjeff::mutt(n).map_err(|e| e.to_string())?;
    let d = disc(&raw).map_err(|e| e.to_string())?;
    let d_prim = disc(&prim).map_err(|e| e.to_string())?;
    let mut r = formula_check("|disc(M_raw)|", &d.abs(), &closed_form(ClosedFormKind::DiscMuttRaw, n), n)?;
    let sign = if d.is_negative() { -1 } else { 1 };
    let f_prim = factor_rat(&d_prim.abs(), n)?;
    if let Some(Value::Object(m)) = r.values.as_mut() {
        m.insert("sign".into(), json!(sign));
        m.insert("disc_primitive".into(), json!(f_prim));
        m.insert("disc_primitive_sign".into(), json!(if d_prim.is_negative() { -1 } else { 1 }));
    }
    r.details = format!("{}, sign {sign}; primitive part disc = {f_prim}", r.details);
    Ok(r)
}

fn decomposition_check(n: usize, r: Result<DecompositionResult, MuttJeffError>) -> Result<CheckResult, String> {
    match r {
        Ok(d) => {
            let c = &d.constant;
            let num = factor_int(c.numer(), &hints(n)).map_err(|e| e.to_string())?;
            let den = factor_int(c.denom(), &hints(n)).map_err(|e| e.to_string())?;
            let mut support: BTreeSet<BigInt> = num.primes();
            support.extend(den.primes());
            let verdict = compare_supports(&support, &allowed_primes(n));
            Ok(CheckResult::new(
                true,
                format!("constant {} = ({num}) / ({den}); support within allowed primes: {}", rat_to_string(c), verdict.subset_ok),
            )
            .with_value(rat_to_string(c))
            .with_values(json!({ "decomposition": d, "constant_support": verdict })))
        }
        Err(e @ MuttJeffError::Structure { .. }) => Ok(CheckResult::new(false, e.to_string())),
        Err(e) => Err(e.to_string()),
    }
}

fn check_jeff_oracle(n: usize) -> Result<CheckResult, String> {
    if n < 2 {
        return Ok(CheckResult::not_applicable(n));
    }
    decomposition_check(n, muttjeff::jeff_oracle(n))
}

fn check_disc_z(n: usize) -> Result<CheckResult, String> {
    if n < 2 {
        return Ok(CheckResult::not_applicable(n));
    }
    decomposition_check(n, muttjeff::disc_z_structure(n))
}

fn check_pointmass(n: usize) -> Result<CheckResult, String> {
    if n < 1 {
        return Ok(CheckResult::not_applicable(n));
    }
    decomposition_check(n, muttjeff::pointmass_disc_check(n))
}

fn support_of(n: usize, p: &RatPoly, label: &str) -> Result<CheckResult, String> {
    let d = disc(p).map_err(|e| e.to_string())?;
    let f = factor_rat(&d.abs(), n)?;
    let verdict = support_check(&f, n);
    let formula = factor_rat(&closed_form(ClosedFormKind::DiscUprimeSqrt, n), n)?;
    let vs_formula = compare_supports(&f.primes(), &formula.primes());
    let equal = vs_formula.symmetric_difference.is_empty();
    Ok(CheckResult::new(
        verdict.subset_ok,
        format!(
            "|disc({label})| = {f}; primes within {{2,3}} + primes(n(2n-1)(2n+1)): {}; same primes as the U'_(2n-1)(sqrt x) formula: {equal}",
            verdict.subset_ok
        ),
    )
    .with_value(f.to_string())
    .with_values(json!({ "disc": f, "support": verdict, "vs_uprime_formula": vs_formula })))
}

fn check_support_jeff(n: usize) -> Result<CheckResult, String> {
    if n < 2 {
        return Ok(CheckResult::not_applicable(n));
    }
    support_of(n, &muttjeff::jeff(n).map_err(|e| e.to_string())?, "J")
}

fn check_support_mutt(n: usize) -> Result<CheckResult, String> {
    if n < 2 {
        return Ok(CheckResult::not_applicable(n));
    }
    support_of(n, &muttjeff::mutt(n).map_err(|e| e.to_string())?.0, "M_raw")
}
