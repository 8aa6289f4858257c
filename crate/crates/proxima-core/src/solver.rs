//! Iteration engines: Picard fixed-point iteration, the direct
//! best-proximity iteration, the induced self-map construction, and the
//! verifier that the two routes produce pointwise identical traces.
//!
//! The proximity subproblem in the direct iteration is solved by the same
//! exhaustive scan over A0, with the same tolerance and uniqueness
//! semantics, as the induced self-map construction. The two routes can
//! therefore only disagree if the underlying mathematics disagrees, never
//! because of mismatched search procedures.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::contraction::{ContractionError, MappingTable};
use crate::metric::{MetricError, MetricSpace, Point};
use crate::proximity::ProximityPair;

#[derive(Debug, Clone, PartialEq)]
pub enum SolverError {
    /// x0 (or x) is not an element of the expected set.
    NotInDomain(Point),
    /// Induced self-map: no y in A0 realizes the proximity equation for
    /// some x, i.e. T(A0) is not contained in B0 effectively.
    NoCandidate { x: Point },
    /// Induced self-map: several distinct y in A0 realize the proximity
    /// equation for some x, i.e. the p-property fails numerically.
    MultipleCandidates { x: Point, first: Point, second: Point },
    BadStopRule(&'static str),
    Metric(MetricError),
    Table(ContractionError),
}

impl fmt::Display for SolverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolverError::NotInDomain(p) => write!(f, "point {p:?} not in the expected set"),
            SolverError::NoCandidate { x } => {
                write!(f, "no proximity candidate for {x:?}: T(A0) \u{2284} B0 effectively")
            }
            SolverError::MultipleCandidates { x, first, second } => write!(
                f,
                "multiple proximity candidates for {x:?} ({first:?}, {second:?}): \
                 p-property violated numerically"
            ),
            SolverError::BadStopRule(msg) => write!(f, "invalid stop rule: {msg}"),
            SolverError::Metric(e) => write!(f, "{e}"),
            SolverError::Table(e) => write!(f, "{e}"),
        }
    }
}

impl From<MetricError> for SolverError {
    fn from(e: MetricError) -> Self {
        SolverError::Metric(e)
    }
}

impl From<ContractionError> for SolverError {
    fn from(e: ContractionError) -> Self {
        SolverError::Table(e)
    }
}

impl From<crate::proximity::ProximityError> for SolverError {
    fn from(e: crate::proximity::ProximityError) -> Self {
        match e {
            crate::proximity::ProximityError::Metric(m) => SolverError::Metric(m),
            _ => SolverError::BadStopRule("invalid proximity pair"),
        }
    }
}

/// Termination thresholds. Convergence means the per-iterate residual fell
/// to `tol_residual` or below; `tol_step` bounds the step size d(x_{n+1}, x_n)
/// considered a stall when comparing limits across starts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StopRule {
    pub tol_step: f64,
    pub tol_residual: f64,
    pub max_iter: usize,
}

impl Default for StopRule {
    fn default() -> Self {
        StopRule { tol_step: 1e-9, tol_residual: 1e-9, max_iter: 10_000 }
    }
}

impl StopRule {
    pub fn validate(&self) -> Result<(), SolverError> {
        if self.max_iter < 1 {
            return Err(SolverError::BadStopRule("max_iter must be at least 1"));
        }
        if !(self.tol_step >= 0.0 && self.tol_residual >= 0.0) {
            return Err(SolverError::BadStopRule("tolerances must be nonnegative"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IterationStatus {
    Converged,
    MaxIterReached,
    /// The proximity equation had no (or no unique) solution at some step,
    /// or an iterate left the mapping domain.
    StepFailed,
}

/// The ordered record of a solver run. `steps[n]` = d(x_{n+1}, x_n);
/// `residuals[n]` is the per-iterate residual (d(x_n, S(x_n)) for
/// fixed-point runs, |d(x_n, T(x_n)) - d(A,B)| for proximity runs).
#[derive(Debug, Clone, PartialEq)]
pub struct IterationTrace {
    pub iterates: Vec<Point>,
    pub steps: Vec<f64>,
    pub residuals: Vec<f64>,
    pub status: IterationStatus,
}

impl IterationTrace {
    pub fn final_point(&self) -> &Point {
        self.iterates.last().expect("trace always holds at least x0")
    }

    pub fn final_residual(&self) -> f64 {
        *self.residuals.last().expect("trace always holds at least x0")
    }

    pub fn iterations(&self) -> usize {
        self.iterates.len() - 1
    }
}

/// The self-map S on A0 defined by d(S(x), T(x)) = d(A, B), together with
/// the pair it was built from.
#[derive(Debug, Clone, PartialEq)]
pub struct InducedMap {
    pub table: MappingTable,
}

/// Finds the unique y in A0 with |d(y, target) - d(A,B)| <= eps_prox.
fn proximity_solve(
    pair: &ProximityPair,
    a0_points: &[Point],
    target: &Point,
    x: &Point,
) -> Result<Point, SolverError> {
    let mut found: Option<&Point> = None;
    for y in a0_points {
        if pair.realizes_d_ab(y, target)? {
            match found {
                None => found = Some(y),
                Some(first) if first == y => {}
                Some(first) => {
                    return Err(SolverError::MultipleCandidates {
                        x: x.clone(),
                        first: first.clone(),
                        second: y.clone(),
                    })
                }
            }
        }
    }
    found.cloned().ok_or(SolverError::NoCandidate { x: x.clone() })
}

/// Builds the self-map S: A0 -> A0 with d(S(x), T(x)) = d(A, B) for every
/// x in A0. Fails when some x has no candidate (T(A0) not effectively inside
/// B0) or several distinct candidates (p-property failure); both failures
/// carry the offending x.
pub fn induced_self_map(t: &MappingTable, pair: &ProximityPair) -> Result<InducedMap, SolverError> {
    let a0 = pair.a0_points();
    if a0.is_empty() {
        return Err(SolverError::BadStopRule("A0 is empty"));
    }
    let mut image = Vec::with_capacity(a0.len());
    for x in &a0 {
        let tx = t.apply(x)?;
        image.push(proximity_solve(pair, &a0, tx, x)?);
    }
    Ok(InducedMap { table: MappingTable::new(a0, image)? })
}

/// Picard iteration x_{n+1} = S(x_n) on a tabulated self-map, stopping when
/// d(x_n, S(x_n)) falls to tol_residual or below.
pub fn picard_fixed_point(
    s: &MappingTable,
    x0: &Point,
    stop: &StopRule,
    space: &MetricSpace,
) -> Result<IterationTrace, SolverError> {
    stop.validate()?;
    if s.index_of(x0).is_none() {
        return Err(SolverError::NotInDomain(x0.clone()));
    }
    let mut trace = IterationTrace {
        iterates: vec![x0.clone()],
        steps: Vec::new(),
        residuals: Vec::new(),
        status: IterationStatus::MaxIterReached,
    };
    loop {
        let x = trace.iterates.last().unwrap().clone();
        let next = match s.apply(&x) {
            Ok(p) => p.clone(),
            Err(_) => {
                // iterate escaped the table; residual against itself is 0 by
                // convention but the run is a failure
                trace.residuals.push(f64::NAN);
                trace.status = IterationStatus::StepFailed;
                return Ok(trace);
            }
        };
        let residual = space.distance(&x, &next)?;
        trace.residuals.push(residual);
        if residual <= stop.tol_residual {
            trace.status = IterationStatus::Converged;
            return Ok(trace);
        }
        if trace.steps.len() >= stop.max_iter {
            trace.status = IterationStatus::MaxIterReached;
            return Ok(trace);
        }
        trace.steps.push(residual);
        trace.iterates.push(next);
    }
}

/// The direct best-proximity iteration of a non-self mapping T: A -> B:
/// x_{n+1} is the unique y in A0 with d(y, T(x_n)) = d(A, B) (within
/// eps_prox). The residual is |d(x_n, T(x_n)) - d(A, B)|; on convergence the
/// final iterate satisfies the best-proximity condition within tol_residual.
/// An unsolvable or ambiguous proximity equation ends the run with
/// `StepFailed` at the offending iterate.
pub fn best_proximity_direct(
    t: &MappingTable,
    pair: &ProximityPair,
    x0: &Point,
    stop: &StopRule,
) -> Result<IterationTrace, SolverError> {
    stop.validate()?;
    let a0 = pair.a0_points();
    if !a0.contains(x0) {
        return Err(SolverError::NotInDomain(x0.clone()));
    }
    let d_ab = pair.d_ab();
    let space = pair.space();
    let mut trace = IterationTrace {
        iterates: vec![x0.clone()],
        steps: Vec::new(),
        residuals: Vec::new(),
        status: IterationStatus::MaxIterReached,
    };
    loop {
        let x = trace.iterates.last().unwrap().clone();
        let tx = match t.apply(&x) {
            Ok(p) => p.clone(),
            Err(_) => {
                trace.residuals.push(f64::NAN);
                trace.status = IterationStatus::StepFailed;
                return Ok(trace);
            }
        };
        let residual = libm::fabs(space.distance(&x, &tx)? - d_ab);
        trace.residuals.push(residual);
        // The proximity equation must be solvable at every iterate, the
        // final one included: an ambiguous or empty candidate set is a
        // hypothesis failure even when the residual is already zero.
        let next = match proximity_solve(pair, &a0, &tx, &x) {
            Ok(p) => p,
            Err(_) => {
                trace.status = IterationStatus::StepFailed;
                return Ok(trace);
            }
        };
        if residual <= stop.tol_residual {
            trace.status = IterationStatus::Converged;
            return Ok(trace);
        }
        if trace.steps.len() >= stop.max_iter {
            trace.status = IterationStatus::MaxIterReached;
            return Ok(trace);
        }
        trace.steps.push(space.distance(&x, &next)?);
        trace.iterates.push(next);
    }
}

/// Verdict of comparing the direct iteration against the reduced
/// (induced-map Picard) iteration under the same stop rule.
#[derive(Debug, Clone, PartialEq)]
pub struct RouteEquivalence {
    pub equal: bool,
    /// Index of the first iterate where the traces differ, when they do.
    pub first_divergence: Option<usize>,
    pub direct: IterationTrace,
    pub reduced: IterationTrace,
}

/// Runs both routes from the same start under the same stop rule and
/// compares iterates pointwise. Finite scenarios must produce identical
/// points, not merely close ones, so comparison is exact.
pub fn verify_route_equivalence(
    t: &MappingTable,
    pair: &ProximityPair,
    x0: &Point,
    stop: &StopRule,
) -> Result<RouteEquivalence, SolverError> {
    let induced = induced_self_map(t, pair)?;
    let direct = best_proximity_direct(t, pair, x0, stop)?;
    let reduced = picard_fixed_point(&induced.table, x0, stop, pair.space())?;

    let mut first_divergence = None;
    for (i, (a, b)) in direct.iterates.iter().zip(&reduced.iterates).enumerate() {
        if a != b {
            first_divergence = Some(i);
            break;
        }
    }
    if first_divergence.is_none() && direct.iterates.len() != reduced.iterates.len() {
        first_divergence = Some(direct.iterates.len().min(reduced.iterates.len()));
    }
    Ok(RouteEquivalence { equal: first_divergence.is_none(), first_divergence, direct, reduced })
}

/// The best-proximity residual |d(x, T(x)) - d(A, B)| of a candidate x in A.
pub fn verify_best_proximity(
    x: &Point,
    t: &MappingTable,
    pair: &ProximityPair,
) -> Result<f64, SolverError> {
    if !pair.a().contains(x) {
        return Err(SolverError::NotInDomain(x.clone()));
    }
    let tx = t.apply(x)?;
    Ok(libm::fabs(pair.space().distance(x, tx)? - pair.d_ab()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64, y: f64) -> Point {
        Point::coords(&[x, y])
    }

    fn ladder() -> (MappingTable, ProximityPair) {
        let ys = [0.0, 0.4, 1.0];
        let a: Vec<Point> = ys.iter().map(|&y| pt(0.0, y)).collect();
        let b: Vec<Point> = ys.iter().map(|&y| pt(1.0, y)).collect();
        let image = vec![b[0].clone(), b[0].clone(), b[1].clone()];
        let t = MappingTable::new(a.clone(), image).unwrap();
        let pair = ProximityPair::new(MetricSpace::Euclidean { dim: 2 }, a, b, 0.0).unwrap();
        (t, pair)
    }

    #[test]
    fn induced_map_on_ladder() {
        let (t, pair) = ladder();
        let s = induced_self_map(&t, &pair).unwrap().table;
        assert_eq!(s.apply(&pt(0.0, 1.0)).unwrap(), &pt(0.0, 0.4));
        assert_eq!(s.apply(&pt(0.0, 0.4)).unwrap(), &pt(0.0, 0.0));
        assert_eq!(s.apply(&pt(0.0, 0.0)).unwrap(), &pt(0.0, 0.0));
    }

    #[test]
    fn induced_map_ambiguous_candidates() {
        let a = vec![pt(0.0, 0.0), pt(0.0, 2.0)];
        let b = vec![pt(1.0, 1.0)];
        let t = MappingTable::new(a.clone(), vec![b[0].clone(), b[0].clone()]).unwrap();
        let pair = ProximityPair::new(MetricSpace::Euclidean { dim: 2 }, a, b, 0.0).unwrap();
        match induced_self_map(&t, &pair).unwrap_err() {
            SolverError::MultipleCandidates { first, second, .. } => {
                assert_eq!(first, pt(0.0, 0.0));
                assert_eq!(second, pt(0.0, 2.0));
            }
            other => panic!("expected multiple candidates, got {other}"),
        }
    }

    #[test]
    fn induced_map_degenerates_to_t_when_sets_coincide() {
        let a = vec![pt(0.0, 0.0), pt(0.0, 1.0)];
        let image = vec![pt(0.0, 0.0), pt(0.0, 0.0)];
        let t = MappingTable::new(a.clone(), image.clone()).unwrap();
        let pair =
            ProximityPair::new(MetricSpace::Euclidean { dim: 2 }, a.clone(), a, 0.0).unwrap();
        let s = induced_self_map(&t, &pair).unwrap().table;
        assert_eq!(s.image, image);
    }

    #[test]
    fn picard_walks_the_ladder() {
        let (t, pair) = ladder();
        let s = induced_self_map(&t, &pair).unwrap().table;
        let trace =
            picard_fixed_point(&s, &pt(0.0, 1.0), &StopRule::default(), pair.space()).unwrap();
        assert_eq!(trace.status, IterationStatus::Converged);
        assert_eq!(trace.iterates, vec![pt(0.0, 1.0), pt(0.0, 0.4), pt(0.0, 0.0)]);
        assert_eq!(trace.final_residual(), 0.0);
        // Final iterate is exactly fixed under the table.
        assert_eq!(s.apply(trace.final_point()).unwrap(), trace.final_point());
    }

    #[test]
    fn picard_fixed_start_converges_immediately() {
        let (t, pair) = ladder();
        let s = induced_self_map(&t, &pair).unwrap().table;
        let trace =
            picard_fixed_point(&s, &pt(0.0, 0.0), &StopRule::default(), pair.space()).unwrap();
        assert_eq!(trace.status, IterationStatus::Converged);
        assert_eq!(trace.iterations(), 0);
        assert_eq!(trace.final_residual(), 0.0);
    }

    #[test]
    fn picard_two_cycle_hits_max_iter() {
        let p = pt(0.0, 0.0);
        let q = pt(0.0, 1.0);
        let s = MappingTable::new(vec![p.clone(), q.clone()], vec![q.clone(), p.clone()]).unwrap();
        let stop = StopRule { max_iter: 50, ..StopRule::default() };
        let trace =
            picard_fixed_point(&s, &p, &stop, &MetricSpace::Euclidean { dim: 2 }).unwrap();
        assert_eq!(trace.status, IterationStatus::MaxIterReached);
        assert_eq!(trace.steps.len(), 50);
        assert!(trace.steps.iter().all(|&s| s == 1.0));
    }

    #[test]
    fn picard_rejects_foreign_start() {
        let (t, pair) = ladder();
        let s = induced_self_map(&t, &pair).unwrap().table;
        assert!(matches!(
            picard_fixed_point(&s, &pt(5.0, 5.0), &StopRule::default(), pair.space()),
            Err(SolverError::NotInDomain(_))
        ));
    }

    #[test]
    fn direct_iteration_walks_the_ladder() {
        let (t, pair) = ladder();
        let trace =
            best_proximity_direct(&t, &pair, &pt(0.0, 1.0), &StopRule::default()).unwrap();
        assert_eq!(trace.status, IterationStatus::Converged);
        assert_eq!(trace.iterates, vec![pt(0.0, 1.0), pt(0.0, 0.4), pt(0.0, 0.0)]);
        assert_eq!(trace.final_residual(), 0.0);
        assert_eq!(verify_best_proximity(trace.final_point(), &t, &pair).unwrap(), 0.0);
    }

    #[test]
    fn direct_iteration_immediate_when_started_at_answer() {
        let (t, pair) = ladder();
        let trace =
            best_proximity_direct(&t, &pair, &pt(0.0, 0.0), &StopRule::default()).unwrap();
        assert_eq!(trace.status, IterationStatus::Converged);
        assert_eq!(trace.iterations(), 0);
    }

    #[test]
    fn direct_iteration_reduces_to_picard_when_sets_coincide() {
        let a = vec![pt(0.0, 0.0), pt(0.0, 0.5), pt(0.0, 1.0)];
        let image = vec![pt(0.0, 0.0), pt(0.0, 0.0), pt(0.0, 0.5)];
        let t = MappingTable::new(a.clone(), image).unwrap();
        let pair =
            ProximityPair::new(MetricSpace::Euclidean { dim: 2 }, a.clone(), a, 0.0).unwrap();
        let direct =
            best_proximity_direct(&t, &pair, &pt(0.0, 1.0), &StopRule::default()).unwrap();
        let picard =
            picard_fixed_point(&t, &pt(0.0, 1.0), &StopRule::default(), pair.space()).unwrap();
        assert_eq!(direct.iterates, picard.iterates);
        assert_eq!(direct.status, IterationStatus::Converged);
    }

    #[test]
    fn direct_iteration_step_failed_on_ambiguous_scenario() {
        let a = vec![pt(0.0, 0.0), pt(0.0, 2.0)];
        let b = vec![pt(1.0, 1.0)];
        let t = MappingTable::new(a.clone(), vec![b[0].clone(), b[0].clone()]).unwrap();
        let pair = ProximityPair::new(MetricSpace::Euclidean { dim: 2 }, a, b, 0.0).unwrap();
        let trace =
            best_proximity_direct(&t, &pair, &pt(0.0, 0.0), &StopRule::default()).unwrap();
        assert_eq!(trace.status, IterationStatus::StepFailed);
    }

    #[test]
    fn route_equivalence_on_ladder() {
        let (t, pair) = ladder();
        for x0 in pair.a0_points() {
            let verdict =
                verify_route_equivalence(&t, &pair, &x0, &StopRule::default()).unwrap();
            assert!(verdict.equal, "start {x0:?}");
            assert_eq!(verdict.first_divergence, None);
            assert_eq!(verdict.direct.iterates, verdict.reduced.iterates);
        }
    }

    #[test]
    fn route_equivalence_propagates_induced_map_failure() {
        let a = vec![pt(0.0, 0.0), pt(0.0, 2.0)];
        let b = vec![pt(1.0, 1.0)];
        let t = MappingTable::new(a.clone(), vec![b[0].clone(), b[0].clone()]).unwrap();
        let pair = ProximityPair::new(MetricSpace::Euclidean { dim: 2 }, a, b, 0.0).unwrap();
        assert!(matches!(
            verify_route_equivalence(&t, &pair, &pt(0.0, 0.0), &StopRule::default()),
            Err(SolverError::MultipleCandidates { .. })
        ));
    }

    #[test]
    fn best_proximity_residual_values() {
        let (t, pair) = ladder();
        assert_eq!(verify_best_proximity(&pt(0.0, 0.0), &t, &pair).unwrap(), 0.0);
        // d((0,1), T(0,1)) = d((0,1), (1,0.4)) = sqrt(1.36)
        let r = verify_best_proximity(&pt(0.0, 1.0), &t, &pair).unwrap();
        assert!((r - (1.36f64.sqrt() - 1.0)).abs() < 1e-12);
        assert!((r - 0.1662).abs() < 1e-4);
        assert!(matches!(
            verify_best_proximity(&pt(9.0, 9.0), &t, &pair),
            Err(SolverError::NotInDomain(_))
        ));
    }
}
