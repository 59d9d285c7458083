//! The verification suite: closed-form predictions checked against the
//! explicit oracle at one degree and blessed configuration.
//!
//! Every check yields a [`Verdict`]; verdicts are sorted by `check_id` so
//! the output is the same whether or not checks ran concurrently.

use std::thread;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::combinatorics::Weight;
use crate::domdim::{domdim_char_tilting, domdim_regular, domdim_standard, ExtendedNat, Regime};
use crate::error::{Error, Result};
use crate::hecke::{kernel_generator, phi, BlessedConfig, HeckeElement, HeckeParams};
use crate::hook::ProgressHook;
use crate::linalg::Field;
use crate::oracle::{DomdimOutcome, ExplicitModule, SchurOracle};
use crate::tensor::{double_centralizer_report, hecke_element_action, DEFAULT_DEGREE_CAP};
use crate::tl::RelationReport;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub check_id: String,
    pub d: usize,
    pub config: String,
    pub expected: Value,
    pub got: Value,
    pub pass: bool,
}

impl Verdict {
    fn new(check_id: impl Into<String>, d: usize, config: BlessedConfig, expected: Value, got: Value) -> Self {
        let pass = expected == got;
        Verdict {
            check_id: check_id.into(),
            d,
            config: config.name().to_string(),
            expected,
            got,
            pass,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Coresolution cap; `None` means `4d`.
    pub cap: Option<usize>,
    /// Largest degree accepted.
    pub degree_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            cap: None,
            degree_cap: DEFAULT_DEGREE_CAP,
        }
    }
}

fn outcome_value(outcome: DomdimOutcome) -> Value {
    match outcome.as_extended() {
        Some(x) => serde_json::to_value(x).expect("extended naturals serialize"),
        None => json!(format!(">={}", cap_of(outcome))),
    }
}

fn cap_of(outcome: DomdimOutcome) -> usize {
    match outcome {
        DomdimOutcome::AtLeast(n) | DomdimOutcome::Exact(n) => n,
        DomdimOutcome::Infinite => 0,
    }
}

fn extended_value(x: ExtendedNat) -> Value {
    serde_json::to_value(x).expect("extended naturals serialize")
}

fn report_value(report: &RelationReport) -> Value {
    json!(report.violations)
}

/// Hecke quadratic and braid relations, multiplicativity of `Φ` on
/// generator products, and `Φ(x_i) = 0`.
pub fn hecke_presentation<F: Field>(params: &HeckeParams<F>) -> Result<(RelationReport, RelationReport, RelationReport)> {
    let d = params.degree();
    let one = HeckeElement::one(params);
    let gens: Vec<_> = (1..d).map(|i| HeckeElement::generator(params, i)).collect::<Result<_>>()?;
    let mut relations = RelationReport::default();
    for (idx, t) in gens.iter().enumerate() {
        let i = idx + 1;
        let quadratic = t.scale(&params.quadratic_coefficient()).add(&one)?;
        relations.record(format!("T{i}^2"), t.mul(t)? == quadratic);
        for (jdx, s) in gens.iter().enumerate().skip(idx + 1) {
            let j = jdx + 1;
            let holds = if j == i + 1 {
                t.mul(s)?.mul(t)? == s.mul(t)?.mul(s)?
            } else {
                t.mul(s)? == s.mul(t)?
            };
            relations.record(format!("T{i}T{j}"), holds);
        }
    }
    let mut multiplicative = RelationReport::default();
    for (idx, t) in gens.iter().enumerate() {
        for (jdx, s) in gens.iter().enumerate() {
            let holds = phi(&t.mul(s)?)? == phi(t)?.mul(&phi(s)?)?;
            multiplicative.record(format!("phi(T{}T{})", idx + 1, jdx + 1), holds);
        }
    }
    let mut kernel = RelationReport::default();
    for i in 1..d.saturating_sub(1) {
        let x = kernel_generator(i, params)?;
        kernel.record(format!("phi(x{i})"), phi(&x)?.is_zero());
        kernel.record(format!("act(x{i})"), hecke_element_action(&x)?.is_zero());
    }
    Ok((relations, multiplicative, kernel))
}

type Job<'a> = Box<dyn FnOnce() -> Result<Vec<Verdict>> + Send + 'a>;

/// Run every check for one degree and configuration.
pub fn run_suite(
    config: BlessedConfig,
    d: usize,
    options: VerifyOptions,
    hook: &dyn ProgressHook,
) -> Result<Vec<Verdict>> {
    if d == 0 {
        return Err(Error::Usage("degree must be at least 1".into()));
    }
    if d > options.degree_cap {
        return Err(Error::CapExceeded(format!(
            "verification at degree {d} exceeds the cap of {}",
            options.degree_cap
        )));
    }
    let params = config.params(d);
    let cap = options.cap.unwrap_or(4 * d);
    if cap == 0 {
        return Err(Error::Usage("the cap must be at least 1".into()));
    }
    let regime = Regime::Field {
        quantum_char_is_2: params.one_plus_q_is_zero(),
    };
    let mut verdicts = Vec::new();

    let tl_report = params.tl_algebra().check_relations()?;
    verdicts.push(Verdict::new("presentation.tl-relations", d, config, json!([]), report_value(&tl_report)));
    let (relations, multiplicative, kernel) = hecke_presentation(&params)?;
    verdicts.push(Verdict::new("presentation.hecke-relations", d, config, json!([]), report_value(&relations)));
    verdicts.push(Verdict::new("presentation.phi-multiplicative", d, config, json!([]), report_value(&multiplicative)));
    verdicts.push(Verdict::new("presentation.kernel", d, config, json!([]), report_value(&kernel)));

    let dc = double_centralizer_report(&params, hook)?;
    verdicts.push(Verdict::new("double-centralizer.tl-image-dim", d, config, json!(dc.catalan), json!(dc.tl_image_dim)));
    verdicts.push(Verdict::new("double-centralizer.schur-dim", d, config, json!(dc.schur_dim_expected), json!(dc.schur_dim)));
    verdicts.push(Verdict::new("double-centralizer.image-equals-commutant", d, config, json!(true), json!(dc.image_equals_commutant)));

    let oracle = SchurOracle::new(&params, hook)?;
    let oracle = &oracle;
    let mut jobs: Vec<Job<'_>> = Vec::new();
    jobs.push(Box::new(move || {
        let regular = oracle.domdim(&oracle.regular_module(), cap, hook)?.outcome;
        let expected = domdim_regular(d, regime)?;
        let mut out = vec![Verdict::new("oracle.regular", d, config, extended_value(expected), outcome_value(regular))];
        if d.is_multiple_of(2) {
            let tilting = oracle.domdim(&oracle.tilting_zero()?, cap, hook)?.outcome;
            out.push(Verdict::new(
                "oracle.tilting-zero",
                d,
                config,
                extended_value(domdim_char_tilting(d, regime)?),
                outcome_value(tilting),
            ));
            let doubled = tilting.as_extended().map(ExtendedNat::double);
            out.push(Verdict::new(
                "oracle.factor-two",
                d,
                config,
                outcome_value(regular),
                doubled.map_or(Value::Null, extended_value),
            ));
        }
        Ok(out)
    }));
    jobs.push(Box::new(move || {
        let got = oracle.domdim(oracle.tensor_space(), cap, hook)?.outcome;
        Ok(vec![Verdict::new("oracle.tensor-space", d, config, json!("inf"), outcome_value(got))])
    }));
    if d.is_multiple_of(2) && params.one_plus_q_is_zero() {
        for m in (0..=d).step_by(2) {
            jobs.push(Box::new(move || {
                let delta = oracle.standard_module(Weight(m))?.0;
                let got = oracle.domdim(&delta, cap, hook)?.outcome;
                Ok(vec![Verdict::new(
                    format!("oracle.standard.{m:02}"),
                    d,
                    config,
                    extended_value(domdim_standard(d, Weight(m))?),
                    outcome_value(got),
                )])
            }));
        }
        jobs.push(Box::new(move || {
            let delta = oracle.standard_module(Weight(d))?.0;
            let tilting = oracle.tilting_zero()?;
            let sum = delta.direct_sum(&tilting)?;
            let parts = [&delta, &tilting]
                .iter()
                .map(|m| oracle.domdim(m, cap, hook).map(|r| r.outcome))
                .collect::<Result<Vec<_>>>()?;
            let expected = min_outcome(parts[0], parts[1]);
            let got = oracle.domdim(&sum, cap, hook)?.outcome;
            Ok(vec![Verdict::new("oracle.direct-sum-min", d, config, outcome_value(expected), outcome_value(got))])
        }));
    }

    let results: Vec<Result<Vec<Verdict>>> = thread::scope(|scope| {
        let handles: Vec<_> = jobs.into_iter().map(|job| scope.spawn(job)).collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|_| Err(Error::Construction("a verification job panicked".into()))))
            .collect()
    });
    for r in results {
        verdicts.extend(r?);
    }
    verdicts.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    Ok(verdicts)
}

/// `min` for domdim outcomes; `AtLeast(n)` only bounds from below.
pub fn min_outcome(a: DomdimOutcome, b: DomdimOutcome) -> DomdimOutcome {
    use DomdimOutcome::*;
    match (a, b) {
        (Infinite, x) | (x, Infinite) => x,
        (Exact(x), Exact(y)) => Exact(x.min(y)),
        (Exact(x), AtLeast(y)) | (AtLeast(y), Exact(x)) if x <= y => Exact(x),
        (AtLeast(x), AtLeast(y)) | (Exact(x), AtLeast(y)) | (AtLeast(x), Exact(y)) => AtLeast(x.min(y)),
    }
}

/// `Q`-domdim of `M ⊕ N` beside the minimum of the parts.
pub fn direct_sum_law<F: Field>(
    oracle: &SchurOracle<F>,
    m: &ExplicitModule<F>,
    n: &ExplicitModule<F>,
    cap: usize,
    hook: &dyn ProgressHook,
) -> Result<(DomdimOutcome, DomdimOutcome)> {
    let sum = oracle.domdim(&m.direct_sum(n)?, cap, hook)?.outcome;
    let parts = min_outcome(oracle.domdim(m, cap, hook)?.outcome, oracle.domdim(n, cap, hook)?.outcome);
    Ok((sum, parts))
}

pub fn all_pass(verdicts: &[Verdict]) -> bool {
    verdicts.iter().all(|v| v.pass)
}
