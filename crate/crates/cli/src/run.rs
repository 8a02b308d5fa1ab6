//! Task execution and the mapping from library outcomes to verdicts and
//! exit statuses.

use std::time::{Duration, Instant};

use algebra_core::AlgebraError;
use cech::CechError;
use complex::is_quasi_iso;
use derived::{DerivedError, Outcome, Report};
use rayon::prelude::*;

use crate::scenario::Scenario;
use crate::task::{Op, Task};

/// Severity of a task result for the process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Class {
    Ok,
    Verification,
    Resource,
    Input,
}

impl Class {
    pub fn exit_code(self) -> i32 {
        match self {
            Class::Ok => 0,
            Class::Verification => 1,
            Class::Input => 2,
            Class::Resource => 3,
        }
    }
}

/// Input errors outrank resource caps, which outrank failed verifications.
pub fn exit_code(results: &[TaskResult]) -> i32 {
    results.iter().map(|r| r.class).max().map_or(0, Class::exit_code)
}

#[derive(Clone, Debug)]
pub struct TaskResult {
    pub index: usize,
    pub task: Task,
    pub report: Report,
    pub reason: Option<String>,
    pub class: Class,
    pub elapsed: Duration,
}

enum Failure {
    Resource(String),
    NotApplicable(String),
    Input(String),
}

fn classify_algebra(e: &AlgebraError) -> Failure {
    match e {
        AlgebraError::LevelCapExceeded(_) => Failure::Resource(e.to_string()),
        AlgebraError::NotGraded(_) => Failure::NotApplicable(e.to_string()),
        _ => Failure::Input(e.to_string()),
    }
}

fn classify_derived(e: &DerivedError) -> Failure {
    match e {
        DerivedError::WindowInsufficient { .. } | DerivedError::ResolutionTruncated(..) | DerivedError::OutsideValidity { .. } => {
            Failure::Resource(e.to_string())
        }
        DerivedError::NotGraded(_) => Failure::NotApplicable(e.to_string()),
        DerivedError::Algebra(a) => classify_algebra(a),
        DerivedError::Complex(complex::ComplexError::Algebra(a)) => classify_algebra(a),
        _ => Failure::Input(e.to_string()),
    }
}

impl From<DerivedError> for Failure {
    fn from(e: DerivedError) -> Self {
        classify_derived(&e)
    }
}

impl From<CechError> for Failure {
    fn from(e: CechError) -> Self {
        match &e {
            CechError::Derived(d) => classify_derived(d),
            CechError::Algebra(a) => classify_algebra(a),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<complex::ComplexError> for Failure {
    fn from(e: complex::ComplexError) -> Self {
        classify_derived(&DerivedError::Complex(e))
    }
}

fn wpr(sc: &Scenario, t: &Task) -> Result<Report, Failure> {
    let seq = sc.sequence(t.get("sequence"));
    let tower = koszul::koszul_tower(seq, t.level)?;
    let cert = koszul::wpr_check(&tower);
    let mut r = Report::new("wpr_check");
    r.certificate("cap", cert.cap);
    for (k, c) in &cert.degrees {
        let pairs: Vec<String> = c.pairs.iter().map(|(i, j)| format!("({i}, {j})")).collect();
        r.certificate(format!("H^{k}.pairs"), pairs.join(", "));
        let offs: Vec<String> = c.offsets().iter().map(ToString::to_string).collect();
        r.certificate(format!("H^{k}.offsets"), offs.join(", "));
        if !c.is_certified() {
            r.witnesses.push(format!("H^{k}: level {} survives through level {}", tower.system.first, cert.cap));
        }
    }
    r.check(derived::Check::new("recheck", cert.verify(&tower), "every recorded pair has a zero composite"));
    if !cert.is_certified() {
        r.outcome = Outcome::Undetermined;
    }
    Ok(r.finish())
}

fn telescope_lemma(sc: &Scenario, t: &Task) -> Report {
    let seq = sc.sequence(t.get("sequence"));
    let mut r = Report::new("telescope_lemma");
    for j in 1..=t.level {
        let q = is_quasi_iso(&telescope::w_map(seq, j));
        let detail = if q.holds() {
            "quasi-isomorphism".to_string()
        } else {
            format!("fails in degrees {:?}", q.failing_degrees())
        };
        r.check(derived::Check::new(format!("w_{j}"), q.holds(), detail));
    }
    r.finish()
}

fn rgamma(sc: &Scenario, t: &Task) -> Result<Report, Failure> {
    let m = sc.module(t.get("module")).complex();
    let seq = sc.sequence(t.get("sequence"));
    let rg = derived::rgamma(&m, seq, t.level)?;
    let mut r = Report::new("rgamma");
    if let Some((a, b)) = rg.dimension_bounds() {
        r.certificate("dimension_bounds", format!("[{a}, {b}]"));
    }
    let v = rg.bound_violations();
    r.check(derived::Check::new("within_bounds", v.is_empty(), format!("violations (level, k): {v:?}")));
    let table = rg.window_table(t.window.expect("rgamma takes a window"))?;
    table.require_stable()?;
    r.table("RΓ(M)", table.entries().to_vec());
    Ok(r.finish())
}

fn llambda(sc: &Scenario, t: &Task) -> Result<Report, Failure> {
    let m = sc.module(t.get("module")).complex();
    let seq = sc.sequence(t.get("sequence"));
    let ll = derived::llambda(&m, seq, t.level, t.resolution_length)?;
    let mut r = Report::new("llambda");
    if let Some(f) = ll.validity_floor() {
        r.certificate("validity_floor", f);
    }
    if let Some((a, b)) = ll.dimension_bounds() {
        r.certificate("dimension_bounds", format!("[{a}, {b}]"));
    }
    let v = ll.bound_violations();
    r.check(derived::Check::new("within_bounds", v.is_empty(), format!("violations (level, k): {v:?}")));
    if m.is_free() {
        let bad = (1..=t.level).find(|&j| !ll.xi(j).holds());
        r.check(derived::Check::new(
            "xi_levelwise",
            bad.is_none(),
            bad.map_or("tel_j quasi-isomorphism at every level".into(), |j| format!("fails at level {j}")),
        ));
    }
    let table = ll.window_table(t.window.expect("llambda takes a window"))?;
    table.require_stable()?;
    r.table("LΛ(M)", table.entries().to_vec());
    Ok(r.finish())
}

fn cone_triangle(sc: &Scenario, t: &Task) -> Result<Report, Failure> {
    let seq = sc.sequence(t.get("sequence"));
    let mut r = Report::new("cone_triangle_verify");
    for j in 1..=t.level {
        let part = cech::cone_triangle_verify(seq, j)?;
        for (k, v) in part.certificates {
            r.certificate(format!("j{j}.{k}"), v);
        }
        for c in part.checks {
            r.check(derived::Check::new(format!("j{j}.{}", c.name), c.passed, c.detail));
        }
    }
    Ok(r.finish())
}

fn execute(sc: &Scenario, t: &Task) -> Result<Report, Failure> {
    let seq = || sc.sequence(t.get("sequence"));
    let module = |role: &str| sc.module(t.get(role)).complex();
    let window = || t.window.expect("signature includes a window");
    Ok(match t.op {
        Op::WprCheck => return wpr(sc, t),
        Op::TelescopeLemma => telescope_lemma(sc, t),
        Op::Rgamma => return rgamma(sc, t),
        Op::Llambda => return llambda(sc, t),
        Op::Idempotence => derived::idempotence_verify(&module("module"), seq(), t.level)?,
        Op::KernelIdentity => derived::kernel_identity_verify(seq(), t.level)?,
        Op::TorsionChar => derived::torsion_char_verify(&module("module"), seq(), t.level)?,
        Op::Mgm => derived::mgm_verify(&module("module"), seq(), t.level, window())?,
        Op::KoszulLimitContrast => derived::koszul_limit_contrast(seq(), t.level, window())?,
        Op::GmDuality => derived::gm_duality_verify(&module("module"), &module("target"), seq(), t.level, window())?,
        Op::Permanence => derived::permanence_verify(seq(), sc.sequence(t.get("other")), t.level, window(), None)?,
        Op::BaseChange => derived::base_change_verify(
            sc.map(t.get("map")),
            seq(),
            sc.sequence(t.get("other")),
            &module("module"),
            t.level,
            window(),
        )?,
        Op::ConeTriangle => return cone_triangle(sc, t),
        Op::CompleteChar => cech::complete_char_verify(&module("module"), seq(), t.level, window())?,
    })
}

fn hypothesis_failed(r: &Report) -> bool {
    r.check_named("radical_equal").is_some_and(|c| !c.passed)
}

pub fn run_task(sc: &Scenario, index: usize, t: &Task) -> TaskResult {
    let start = Instant::now();
    let outcome = execute(sc, t);
    let elapsed = start.elapsed();
    let (report, reason, class) = match outcome {
        Ok(mut report) => {
            let reason = if hypothesis_failed(&report) {
                Some("hypothesis fails".to_string())
            } else if report.outcome == Outcome::NotApplicable {
                Some("precondition fails".to_string())
            } else {
                None
            };
            let class = match report.outcome {
                Outcome::Pass | Outcome::NotApplicable => Class::Ok,
                Outcome::Undetermined if t.op == Op::WprCheck => Class::Resource,
                Outcome::Fail | Outcome::Undetermined => Class::Verification,
            };
            if class != Class::Ok && report.witnesses.is_empty() {
                report.witnesses.push(format!("outcome {} without a failing check", report.outcome));
            }
            (report, reason, class)
        }
        Err(f) => {
            let mut report = Report::new(t.op.to_string());
            let (outcome, class, msg) = match f {
                Failure::Resource(m) => (Outcome::Undetermined, Class::Resource, m),
                Failure::NotApplicable(m) => (Outcome::NotApplicable, Class::Ok, m),
                Failure::Input(m) => (Outcome::Undetermined, Class::Input, m),
            };
            report.outcome = outcome;
            report.witnesses.push(msg.clone());
            (report, Some(msg), class)
        }
    };
    TaskResult {
        index,
        task: t.clone(),
        report,
        reason,
        class,
        elapsed,
    }
}

/// Runs every task on a pool of `jobs` threads; results come back in
/// declaration order.
pub fn run_all(sc: &Scenario, jobs: usize) -> Vec<TaskResult> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| {
        sc.tasks
            .par_iter()
            .enumerate()
            .map(|(i, t)| run_task(sc, i + 1, t))
            .collect()
    })
}
