//! Executes a scenario: hypothesis checks in fixed order, solver runs per
//! start, then route equivalence. Produces one structured report plus one
//! trace table per start; the report is a pure function of the scenario
//! file (timing goes to stderr, never into the report).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use proxima_core::contraction::{
    check_f_contraction, check_f_proximal_first_kind, check_hardy_rogers, CheckOutcome,
    Violation, ViolationSite,
};
use proxima_core::f_family::{check_omega_membership, OmegaCheckGrid};
use proxima_core::metric::{check_metric_axioms, MetricSpace, Point};
use proxima_core::proximity::{check_approx_compactness, check_p_property, PPropertyOutcome};
use proxima_core::solver::{
    best_proximity_direct, induced_self_map, verify_route_equivalence, IterationStatus,
    IterationTrace,
};

use crate::scenario::{Instance, ScenarioError, ScenarioFile, KNOWN_CHECKS};

#[derive(Debug, Clone, Copy)]
pub struct RunConfig {
    pub checks: bool,
    pub solve: bool,
    pub routes: bool,
}

impl RunConfig {
    pub fn all() -> Self {
        RunConfig { checks: true, solve: true, routes: true }
    }
}

pub struct RunOutcome {
    pub report: Value,
    /// (file name, CSV contents) per start, in start order.
    pub traces: Vec<(String, String)>,
    /// 0 = everything requested passed, 1 = some check failed or some run
    /// did not converge.
    pub exit_code: i32,
}

fn point_json(p: &Point) -> Value {
    match p {
        Point::Coords(c) => json!(c),
        Point::Index(i) => json!(i),
    }
}

fn violation_json(v: &Violation) -> Value {
    let site = match &v.site {
        ViolationSite::Pair { x, y } => json!({ "pair": [x, y] }),
        ViolationSite::Quadruple { u1, u2, x1, x2 } => {
            json!({ "quadruple": { "u1": u1, "u2": u2, "x1": x1, "x2": x2 } })
        }
    };
    json!({ "site": site, "lhs": v.lhs, "rhs": v.rhs, "slack": v.slack })
}

fn check_entry(name: &str, passed: bool, detail: Value) -> Value {
    json!({ "name": name, "passed": passed, "detail": detail })
}

/// 17-significant-digit formatting: round-trips f64 exactly, so traces can
/// serve as byte-exact golden files.
pub fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

/// Renders a trace as a comma-separated table with a fixed header:
/// iter, coordinate columns, step, residual. The step column is empty on
/// the first row (no step has been taken yet).
pub fn trace_csv(trace: &IterationTrace) -> String {
    let width = match trace.iterates.first() {
        Some(Point::Coords(c)) => c.len(),
        _ => 1,
    };
    let mut out = String::from("iter");
    if matches!(trace.iterates.first(), Some(Point::Coords(_))) {
        for i in 0..width {
            out.push_str(&format!(",c{i}"));
        }
    } else {
        out.push_str(",index");
    }
    out.push_str(",step,residual\n");
    for (n, p) in trace.iterates.iter().enumerate() {
        out.push_str(&n.to_string());
        match p {
            Point::Coords(c) => {
                for v in c {
                    out.push(',');
                    out.push_str(&fmt17(*v));
                }
            }
            Point::Index(i) => {
                out.push(',');
                out.push_str(&i.to_string());
            }
        }
        out.push(',');
        if n > 0 {
            out.push_str(&fmt17(trace.steps[n - 1]));
        }
        out.push(',');
        out.push_str(&fmt17(trace.residuals[n]));
        out.push('\n');
    }
    out
}

fn status_str(s: IterationStatus) -> &'static str {
    match s {
        IterationStatus::Converged => "converged",
        IterationStatus::MaxIterReached => "max_iter_reached",
        IterationStatus::StepFailed => "step_failed",
    }
}

/// Deterministic random triples over the bounding box of the scenario's
/// points, for axiom checking on geometric spaces. Matrix spaces ignore the
/// sample and enumerate exhaustively.
fn axiom_sample(inst: &Instance, count: usize) -> Vec<[Point; 3]> {
    let dim = match inst.pair.space() {
        MetricSpace::Euclidean { dim } | MetricSpace::Chebyshev { dim } => *dim,
        MetricSpace::Matrix { .. } => return Vec::new(),
    };
    let mut lo = vec![f64::INFINITY; dim];
    let mut hi = vec![f64::NEG_INFINITY; dim];
    for p in inst.pair.a().iter().chain(inst.pair.b()) {
        if let Point::Coords(c) = p {
            for (d, &v) in c.iter().enumerate() {
                lo[d] = lo[d].min(v);
                hi[d] = hi[d].max(v);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(inst.seed);
    let mut triples = Vec::with_capacity(count);
    for _ in 0..count {
        let mut point = || {
            Point::Coords(
                (0..dim).map(|d| rng.gen_range(lo[d] - 1.0..hi[d] + 1.0)).collect(),
            )
        };
        triples.push([point(), point(), point()]);
    }
    triples
}

fn run_check(inst: &Instance, name: &str) -> Value {
    match name {
        "metric_axioms" => {
            let sample = axiom_sample(inst, 1000);
            match check_metric_axioms(inst.pair.space(), &sample) {
                Ok(report) => check_entry(
                    name,
                    report.passed,
                    match report.witness {
                        None => json!({ "triples": sample.len() }),
                        Some(w) => json!({ "witness": format!("{w:?}") }),
                    },
                ),
                Err(e) => check_entry(name, false, json!({ "error": e.to_string() })),
            }
        }
        "omega_membership" => match check_omega_membership(&inst.f, &OmegaCheckGrid::default()) {
            Ok(report) => check_entry(
                name,
                report.all_passed(),
                json!({
                    "passed_monotone": report.passed_monotone,
                    "passed_divergence": report.passed_divergence,
                    "passed_decay": report.passed_decay,
                    "witness": report.witness.map(|w| format!("{w:?}")),
                }),
            ),
            Err(e) => check_entry(name, false, json!({ "error": e.to_string() })),
        },
        "p_property" => match check_p_property(&inst.pair) {
            Ok(PPropertyOutcome::Pass) => check_entry(name, true, Value::Null),
            Ok(PPropertyOutcome::Witness(w)) => check_entry(
                name,
                false,
                json!({
                    "witness": { "u1": w.u1, "u2": w.u2, "v1": w.v1, "v2": w.v2,
                                  "d_u": w.d_u, "d_v": w.d_v },
                }),
            ),
            Err(e) => check_entry(name, false, json!({ "error": e.to_string() })),
        },
        "approx_compactness" => {
            let report = check_approx_compactness(&inst.pair);
            check_entry(name, report.passed, json!({ "justification": report.justification }))
        }
        "f_contraction" => match induced_self_map(&inst.t, &inst.pair) {
            Ok(s) => match check_f_contraction(&s.table, &inst.f, inst_tau(inst), inst.pair.space())
            {
                Ok(CheckOutcome::Pass) => check_entry(name, true, Value::Null),
                Ok(CheckOutcome::Violation(v)) => check_entry(name, false, violation_json(&v)),
                Err(e) => check_entry(name, false, json!({ "error": e.to_string() })),
            },
            Err(e) => check_entry(name, false, json!({ "error": e.to_string() })),
        },
        "contraction" => run_contraction_check(inst),
        other => check_entry(other, false, json!({ "error": "unknown check" })),
    }
}

fn inst_tau(inst: &Instance) -> f64 {
    inst.proximal.map(|p| p.tau).or(inst.hr.map(|h| h.tau)).expect("coefficients present")
}

fn run_contraction_check(inst: &Instance) -> Value {
    let name = "contraction";
    if let Some(coef) = inst.proximal {
        return match check_f_proximal_first_kind(&inst.t, &inst.pair, &inst.f, &coef) {
            Ok(CheckOutcome::Pass) => check_entry(name, true, Value::Null),
            Ok(CheckOutcome::Violation(v)) => check_entry(name, false, violation_json(&v)),
            Err(e) => check_entry(name, false, json!({ "error": e.to_string() })),
        };
    }
    // Hardy-Rogers form: checked on the induced self-map.
    let coef = inst.hr.expect("coefficients present");
    match induced_self_map(&inst.t, &inst.pair) {
        Ok(s) => match check_hardy_rogers(&s.table, &inst.f, &coef, inst.pair.space()) {
            Ok(CheckOutcome::Pass) => check_entry(name, true, Value::Null),
            Ok(CheckOutcome::Violation(v)) => check_entry(name, false, violation_json(&v)),
            Err(e) => check_entry(name, false, json!({ "error": e.to_string() })),
        },
        Err(e) => check_entry(name, false, json!({ "error": e.to_string() })),
    }
}

/// Theorem-level hypotheses recorded independently of the requested checks:
/// A0 nonempty, T(A0) inside B0 (within eps_prox), p-property, and
/// approximative compactness.
fn hypotheses_json(inst: &Instance) -> Value {
    let a0 = inst.pair.a0_points();
    let b0 = inst.pair.b0_points();
    let mut t_a0_in_b0 = !a0.is_empty();
    for x in &a0 {
        match inst.t.apply(x) {
            Ok(tx) if b0.contains(tx) => {}
            _ => {
                t_a0_in_b0 = false;
                break;
            }
        }
    }
    let p_prop = matches!(check_p_property(&inst.pair), Ok(PPropertyOutcome::Pass));
    json!({
        "a0_nonempty": !a0.is_empty(),
        "t_a0_subset_b0": t_a0_in_b0,
        "p_property": p_prop,
        "approx_compactness": check_approx_compactness(&inst.pair).passed,
    })
}

pub fn run_instance(scn: &ScenarioFile, label: &str, cfg: &RunConfig) -> Result<RunOutcome, ScenarioError> {
    let inst = scn.build()?;
    let ps = inst.pair.proximal_sets();

    let mut all_ok = true;
    let mut checks = Vec::new();
    if cfg.checks {
        // Fixed execution order regardless of the order in the file.
        for name in KNOWN_CHECKS {
            if inst.checks.iter().any(|c| c == name) {
                let entry = run_check(&inst, name);
                all_ok &= entry["passed"].as_bool().unwrap_or(false);
                checks.push(entry);
            }
        }
    }

    let mut runs = Vec::new();
    let mut traces = Vec::new();
    if cfg.solve {
        for (idx, x0) in inst.starts.iter().enumerate() {
            match best_proximity_direct(&inst.t, &inst.pair, x0, &inst.stop) {
                Ok(trace) => {
                    let converged = trace.status == IterationStatus::Converged;
                    all_ok &= converged;
                    let file = format!("trace_start{idx}.csv");
                    runs.push(json!({
                        "start": point_json(x0),
                        "status": status_str(trace.status),
                        "iterations": trace.iterations(),
                        "final": point_json(trace.final_point()),
                        "final_residual": trace.final_residual(),
                        "trace_file": file,
                    }));
                    traces.push((file, trace_csv(&trace)));
                }
                Err(e) => {
                    all_ok = false;
                    runs.push(json!({
                        "start": point_json(x0),
                        "status": "error",
                        "error": e.to_string(),
                    }));
                }
            }
        }
    }

    let mut routes = Value::Null;
    if cfg.routes {
        let mut entries = Vec::new();
        let mut equal_all = true;
        for x0 in &inst.starts {
            match verify_route_equivalence(&inst.t, &inst.pair, x0, &inst.stop) {
                Ok(verdict) => {
                    equal_all &= verdict.equal;
                    entries.push(json!({
                        "start": point_json(x0),
                        "equal": verdict.equal,
                        "first_divergence": verdict.first_divergence,
                    }));
                }
                Err(e) => {
                    equal_all = false;
                    entries.push(json!({
                        "start": point_json(x0),
                        "equal": false,
                        "error": e.to_string(),
                    }));
                }
            }
        }
        all_ok &= equal_all;
        routes = json!({ "equal": equal_all, "per_start": entries });
    }

    let exit_code = if all_ok { 0 } else { 1 };
    let report = json!({
        "scenario": label,
        "d_ab": inst.pair.d_ab(),
        "a0": ps.a0,
        "b0": ps.b0,
        "hypotheses": hypotheses_json(&inst),
        "checks": checks,
        "runs": runs,
        "route_equivalence": routes,
        "exit_status": exit_code,
    });
    Ok(RunOutcome { report, traces, exit_code })
}
