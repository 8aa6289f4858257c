//! Exhaustive checkers for the three contraction-type hypotheses: the plain
//! F-contraction, the Hardy-Rogers form, and the generalized F-proximal
//! contraction of the first kind.
//!
//! Scenarios are finite, so ordered pairs and quadruples are enumerated
//! exhaustively rather than sampled: a pass is ground truth at desk scale,
//! and a failure comes with the lexicographically smallest witness.

use alloc::vec::Vec;
use core::fmt;

use crate::f_family::{FError, FFunction};
use crate::metric::{MetricError, MetricSpace, Point};
use crate::proximity::ProximityPair;
use crate::{COEF_SUM_TOL, SLACK_TOL};

#[derive(Debug, Clone, PartialEq)]
pub enum ContractionError {
    BadCoefficients(&'static str),
    /// Mapping table domain and image lengths differ.
    MalformedTable,
    /// A point was looked up that is not in the table's domain.
    NotInDomain(Point),
    NonPositiveTau { tau: f64 },
    Metric(MetricError),
    F(FError),
}

impl fmt::Display for ContractionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContractionError::BadCoefficients(msg) => write!(f, "invalid coefficients: {msg}"),
            ContractionError::MalformedTable => {
                write!(f, "mapping table domain and image lengths differ")
            }
            ContractionError::NotInDomain(p) => write!(f, "point {p:?} not in mapping domain"),
            ContractionError::NonPositiveTau { tau } => {
                write!(f, "tau must be positive, got {tau}")
            }
            ContractionError::Metric(e) => write!(f, "{e}"),
            ContractionError::F(e) => write!(f, "{e}"),
        }
    }
}

impl From<MetricError> for ContractionError {
    fn from(e: MetricError) -> Self {
        ContractionError::Metric(e)
    }
}

impl From<FError> for ContractionError {
    fn from(e: FError) -> Self {
        ContractionError::F(e)
    }
}

/// Hardy-Rogers coefficients (a, b, c, e, L, tau) with the sum constraint
/// a + b + c + 2e = 1. c != 1 is validated even though the positivity and
/// sum constraints already force c < 1; the stated hypothesis is checked
/// verbatim.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HrCoefficients {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub e: f64,
    pub l: f64,
    pub tau: f64,
}

impl HrCoefficients {
    pub fn new(a: f64, b: f64, c: f64, e: f64, l: f64, tau: f64) -> Result<Self, ContractionError> {
        if !(a > 0.0 && b > 0.0 && c > 0.0 && e > 0.0 && tau > 0.0) {
            return Err(ContractionError::BadCoefficients("a, b, c, e, tau must be positive"));
        }
        if !(l >= 0.0) {
            return Err(ContractionError::BadCoefficients("L must be nonnegative"));
        }
        if libm::fabs(a + b + c + 2.0 * e - 1.0) > COEF_SUM_TOL {
            return Err(ContractionError::BadCoefficients("a + b + c + 2e must equal 1"));
        }
        if c == 1.0 {
            return Err(ContractionError::BadCoefficients("c must not equal 1"));
        }
        Ok(HrCoefficients { a, b, c, e, l, tau })
    }
}

/// Coefficients (a, b, c, h, tau) of the first-kind F-proximal condition,
/// with a + b + c + 2h = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProximalCoefficients {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub h: f64,
    pub tau: f64,
}

impl ProximalCoefficients {
    pub fn new(a: f64, b: f64, c: f64, h: f64, tau: f64) -> Result<Self, ContractionError> {
        if !(a > 0.0 && b > 0.0 && c > 0.0 && h > 0.0 && tau > 0.0) {
            return Err(ContractionError::BadCoefficients("a, b, c, h, tau must be positive"));
        }
        if libm::fabs(a + b + c + 2.0 * h - 1.0) > COEF_SUM_TOL {
            return Err(ContractionError::BadCoefficients("a + b + c + 2h must equal 1"));
        }
        if c == 1.0 {
            return Err(ContractionError::BadCoefficients("c must not equal 1"));
        }
        Ok(ProximalCoefficients { a, b, c, h, tau })
    }

    /// The substitution used when reducing the proximal condition to the
    /// Hardy-Rogers form of the induced self-map: e = h and L = h, with the
    /// sum constraint carried over unchanged.
    pub fn to_hardy_rogers(self) -> HrCoefficients {
        HrCoefficients { a: self.a, b: self.b, c: self.c, e: self.h, l: self.h, tau: self.tau }
    }
}

/// A mapping given as an explicit table: image[i] = T(domain[i]).
#[derive(Debug, Clone, PartialEq)]
pub struct MappingTable {
    pub domain: Vec<Point>,
    pub image: Vec<Point>,
}

impl MappingTable {
    pub fn new(domain: Vec<Point>, image: Vec<Point>) -> Result<Self, ContractionError> {
        if domain.len() != image.len() {
            return Err(ContractionError::MalformedTable);
        }
        Ok(MappingTable { domain, image })
    }

    pub fn len(&self) -> usize {
        self.domain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.domain.is_empty()
    }

    pub fn index_of(&self, p: &Point) -> Option<usize> {
        self.domain.iter().position(|q| q == p)
    }

    /// T(p) by table lookup.
    pub fn apply(&self, p: &Point) -> Result<&Point, ContractionError> {
        self.index_of(p)
            .map(|i| &self.image[i])
            .ok_or_else(|| ContractionError::NotInDomain(p.clone()))
    }
}

/// Where a contraction inequality failed.
#[derive(Debug, Clone, PartialEq)]
pub enum ViolationSite {
    /// Domain indices (x, y) of an ordered pair.
    Pair { x: usize, y: usize },
    /// Indices into A of a proximal quadruple.
    Quadruple { u1: usize, u2: usize, x1: usize, x2: usize },
}

/// A reproducible inequality violation: lhs = tau + F(d(..)), rhs = F(bracket),
/// slack = rhs - lhs < 0. rhs is -inf when the bracket is zero (F undefined
/// there, so the inequality cannot hold).
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub site: ViolationSite,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum CheckOutcome {
    Pass,
    Violation(Violation),
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, CheckOutcome::Pass)
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            CheckOutcome::Pass => None,
            CheckOutcome::Violation(v) => Some(v),
        }
    }
}

/// Evaluates tau + F(displacement) <= F(bracket) with the rounding guard
/// `slack >= -SLACK_TOL`. Returns the violation if it fails.
fn judge(
    site: ViolationSite,
    f: &FFunction,
    tau: f64,
    displacement: f64,
    bracket: f64,
) -> Result<Option<Violation>, ContractionError> {
    let lhs = tau + f.eval(displacement)?;
    let rhs = if bracket > 0.0 { f.eval(bracket)? } else { f64::NEG_INFINITY };
    let slack = rhs - lhs;
    if slack < -SLACK_TOL {
        Ok(Some(Violation { site, lhs, rhs, slack }))
    } else {
        Ok(None)
    }
}

/// Checks the plain F-contraction condition
/// tau + F(d(Tx, Ty)) <= F(d(x, y)) on every ordered pair of the domain with
/// d(Tx, Ty) > 0. Pairs with d(Tx, Ty) = 0 are unconstrained by the
/// definition and skipped.
pub fn check_f_contraction(
    t: &MappingTable,
    f: &FFunction,
    tau: f64,
    space: &MetricSpace,
) -> Result<CheckOutcome, ContractionError> {
    if !(tau > 0.0) {
        return Err(ContractionError::NonPositiveTau { tau });
    }
    for (ix, x) in t.domain.iter().enumerate() {
        for (iy, y) in t.domain.iter().enumerate() {
            if ix == iy {
                continue;
            }
            let displacement = space.distance(&t.image[ix], &t.image[iy])?;
            if displacement == 0.0 {
                continue;
            }
            let bracket = space.distance(x, y)?;
            if let Some(v) = judge(ViolationSite::Pair { x: ix, y: iy }, f, tau, displacement, bracket)? {
                return Ok(CheckOutcome::Violation(v));
            }
        }
    }
    Ok(CheckOutcome::Pass)
}

/// Checks the Hardy-Rogers condition
/// tau + F(d(Tx, Ty)) <= F(a d(x,y) + b d(x,Tx) + c d(y,Ty) + e d(x,Ty) + L d(y,Tx))
/// on every ordered pair with d(Tx, Ty) > 0. Both orders of each pair are
/// checked since b/c and e/L weight the two points asymmetrically.
pub fn check_hardy_rogers(
    t: &MappingTable,
    f: &FFunction,
    coef: &HrCoefficients,
    space: &MetricSpace,
) -> Result<CheckOutcome, ContractionError> {
    for (ix, x) in t.domain.iter().enumerate() {
        for (iy, y) in t.domain.iter().enumerate() {
            if ix == iy {
                continue;
            }
            let (tx, ty) = (&t.image[ix], &t.image[iy]);
            let displacement = space.distance(tx, ty)?;
            if displacement == 0.0 {
                continue;
            }
            let bracket = coef.a * space.distance(x, y)?
                + coef.b * space.distance(x, tx)?
                + coef.c * space.distance(y, ty)?
                + coef.e * space.distance(x, ty)?
                + coef.l * space.distance(y, tx)?;
            if let Some(v) =
                judge(ViolationSite::Pair { x: ix, y: iy }, f, coef.tau, displacement, bracket)?
            {
                return Ok(CheckOutcome::Violation(v));
            }
        }
    }
    Ok(CheckOutcome::Pass)
}

/// Checks the generalized F-proximal contraction condition of the first kind
/// on a non-self mapping T: A -> B: for every quadruple u1, u2, x1, x2 in A
/// with d(u_i, T(x_i)) = d(A, B) (within eps_prox) and u1 != u2,
/// tau + F(d(u1, u2)) <= F(a d(x1,x2) + b d(u1,x1) + c d(u2,x2) + h(d(u2,x1) + d(u1,x2))).
///
/// x1 = x2 with u1 != u2 is enumerated too; under the p-property it cannot
/// occur, and when the p-property fails it is a genuine violation surface.
pub fn check_f_proximal_first_kind(
    t: &MappingTable,
    pair: &ProximityPair,
    f: &FFunction,
    coef: &ProximalCoefficients,
) -> Result<CheckOutcome, ContractionError> {
    let space = pair.space();
    let d_ab = pair.d_ab();
    let eps = pair.eps_prox();
    let a = pair.a();
    if t.domain.len() != a.len() {
        return Err(ContractionError::MalformedTable);
    }

    // admissible[u][x]: d(a[u], T(a[x])) realizes d(A, B).
    let mut images = Vec::with_capacity(a.len());
    for x in a {
        images.push(t.apply(x)?.clone());
    }
    let mut admissible = Vec::with_capacity(a.len());
    for u in a {
        let mut row = Vec::with_capacity(a.len());
        for tx in &images {
            row.push(libm::fabs(space.distance(u, tx)? - d_ab) <= eps);
        }
        admissible.push(row);
    }

    for iu1 in 0..a.len() {
        for iu2 in 0..a.len() {
            let displacement = space.distance(&a[iu1], &a[iu2])?;
            if displacement == 0.0 {
                continue; // u1 != u2 required
            }
            for ix1 in 0..a.len() {
                if !admissible[iu1][ix1] {
                    continue;
                }
                for ix2 in 0..a.len() {
                    if !admissible[iu2][ix2] {
                        continue;
                    }
                    let bracket = coef.a * space.distance(&a[ix1], &a[ix2])?
                        + coef.b * space.distance(&a[iu1], &a[ix1])?
                        + coef.c * space.distance(&a[iu2], &a[ix2])?
                        + coef.h
                            * (space.distance(&a[iu2], &a[ix1])?
                                + space.distance(&a[iu1], &a[ix2])?);
                    let site = ViolationSite::Quadruple { u1: iu1, u2: iu2, x1: ix1, x2: ix2 };
                    if let Some(v) = judge(site, f, coef.tau, displacement, bracket)? {
                        return Ok(CheckOutcome::Violation(v));
                    }
                }
            }
        }
    }
    Ok(CheckOutcome::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f_family::FKind;

    fn pt(x: f64, y: f64) -> Point {
        Point::coords(&[x, y])
    }

    fn pt1(x: f64) -> Point {
        Point::coords(&[x])
    }

    fn ln() -> FFunction {
        FFunction::new(FKind::Ln, 0.5).unwrap()
    }

    /// The ladder self-map S on {(0,0), (0,0.4), (0,1)}: each rung maps one
    /// rung down, bottom rung fixed.
    fn ladder_self_map() -> (MappingTable, MetricSpace) {
        let p0 = pt(0.0, 0.0);
        let p1 = pt(0.0, 0.4);
        let p2 = pt(0.0, 1.0);
        let table = MappingTable::new(
            vec![p0.clone(), p1.clone(), p2],
            vec![p0.clone(), p0, p1],
        )
        .unwrap();
        (table, MetricSpace::Euclidean { dim: 2 })
    }

    fn ladder_coefs(tau: f64) -> HrCoefficients {
        HrCoefficients::new(0.7, 0.1, 0.1, 0.05, 0.05, tau).unwrap()
    }

    /// Ladder non-self mapping T: A -> B with B the horizontal translate.
    fn ladder_pair() -> (MappingTable, ProximityPair) {
        let ys = [0.0, 0.4, 1.0];
        let a: Vec<Point> = ys.iter().map(|&y| pt(0.0, y)).collect();
        let b: Vec<Point> = ys.iter().map(|&y| pt(1.0, y)).collect();
        // T: (0,1) -> (1,0.4), (0,0.4) -> (1,0), (0,0) -> (1,0)
        let image = vec![b[0].clone(), b[0].clone(), b[1].clone()];
        let t = MappingTable::new(a.clone(), image).unwrap();
        let pair =
            ProximityPair::new(MetricSpace::Euclidean { dim: 2 }, a, b, 0.0).unwrap();
        (t, pair)
    }

    /// Independent brute-force oracle for the Hardy-Rogers inequality:
    /// evaluates every ordered pair from scratch and returns the worst slack.
    fn oracle_hr_min_slack(
        t: &MappingTable,
        coef: &HrCoefficients,
        space: &MetricSpace,
    ) -> f64 {
        let mut min_slack = f64::INFINITY;
        let n = t.domain.len();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let (x, y) = (&t.domain[i], &t.domain[j]);
                let (tx, ty) = (&t.image[i], &t.image[j]);
                let d = space.distance(tx, ty).unwrap();
                if d == 0.0 {
                    continue;
                }
                let bracket = coef.a * space.distance(x, y).unwrap()
                    + coef.b * space.distance(x, tx).unwrap()
                    + coef.c * space.distance(y, ty).unwrap()
                    + coef.e * space.distance(x, ty).unwrap()
                    + coef.l * space.distance(y, tx).unwrap();
                let slack = bracket.ln() - coef.tau - d.ln();
                min_slack = min_slack.min(slack);
            }
        }
        min_slack
    }

    #[test]
    fn halving_map_is_f_contraction_with_tau_ln2() {
        let domain = vec![pt1(0.0), pt1(1.0), pt1(2.0)];
        let image = vec![pt1(0.0), pt1(0.5), pt1(1.0)];
        let t = MappingTable::new(domain, image).unwrap();
        let space = MetricSpace::Euclidean { dim: 1 };
        let out = check_f_contraction(&t, &ln(), 2f64.ln(), &space).unwrap();
        assert!(out.passed(), "{out:?}");
    }

    #[test]
    fn doubling_map_violates_f_contraction() {
        let domain = vec![pt1(0.0), pt1(1.0), pt1(2.0)];
        let image = vec![pt1(0.0), pt1(2.0), pt1(4.0)];
        let t = MappingTable::new(domain, image).unwrap();
        let space = MetricSpace::Euclidean { dim: 1 };
        let tau = 0.1;
        let v = check_f_contraction(&t, &ln(), tau, &space).unwrap().violation().unwrap().clone();
        assert_eq!(v.site, ViolationSite::Pair { x: 0, y: 1 });
        // d(T0, T1) = 2, d(0, 1) = 1: slack = ln 1 - tau - ln 2
        assert!((v.slack - (-tau - 2f64.ln())).abs() < 1e-15);
        assert!(v.slack < 0.0);
    }

    #[test]
    fn constant_map_passes_vacuously() {
        let domain = vec![pt1(0.0), pt1(1.0), pt1(2.0)];
        let image = vec![pt1(0.0), pt1(0.0), pt1(0.0)];
        let t = MappingTable::new(domain, image).unwrap();
        let space = MetricSpace::Euclidean { dim: 1 };
        assert!(check_f_contraction(&t, &ln(), 5.0, &space).unwrap().passed());
    }

    #[test]
    fn tau_must_be_positive() {
        let (t, space) = ladder_self_map();
        assert!(matches!(
            check_f_contraction(&t, &ln(), 0.0, &space),
            Err(ContractionError::NonPositiveTau { .. })
        ));
    }

    #[test]
    fn hardy_rogers_ladder_passes_at_tau_03() {
        let (t, space) = ladder_self_map();
        let coef = ladder_coefs(0.3);
        assert!(oracle_hr_min_slack(&t, &coef, &space) >= 0.0);
        assert!(check_hardy_rogers(&t, &ln(), &coef, &space).unwrap().passed());
    }

    #[test]
    fn hardy_rogers_ladder_fails_at_tau_04() {
        let (t, space) = ladder_self_map();
        let coef = ladder_coefs(0.4);
        assert!(oracle_hr_min_slack(&t, &coef, &space) < 0.0);
        let v = check_hardy_rogers(&t, &ln(), &coef, &space)
            .unwrap()
            .violation()
            .unwrap()
            .clone();
        // Binding pair is ((0,1), (0,0.4)) in some order: indices 1 and 2.
        match v.site {
            ViolationSite::Pair { x, y } => {
                assert!(matches!((x, y), (1, 2) | (2, 1)), "({x}, {y})");
            }
            _ => panic!("expected pair site"),
        }
        // Implied binding threshold tau* = tau + slack = ln(0.57 / 0.4).
        let tau_star = 0.4 + v.slack;
        assert!((tau_star - (0.57f64 / 0.4).ln()).abs() < 1e-12);
        assert!((tau_star - 0.354172).abs() < 1e-6);
    }

    #[test]
    fn hardy_rogers_floor_halving_grid_violation() {
        // 17 points (0, j/16), S: j -> floor(j/2).
        let domain: Vec<Point> = (0..=16).map(|j| pt(0.0, j as f64 / 16.0)).collect();
        let image: Vec<Point> = (0..=16).map(|j| pt(0.0, (j / 2) as f64 / 16.0)).collect();
        let t = MappingTable::new(domain, image).unwrap();
        let space = MetricSpace::Euclidean { dim: 2 };
        for tau in [0.01, 0.1, 0.3] {
            let coef = HrCoefficients::new(0.7, 0.1, 0.1, 0.05, 0.05, tau).unwrap();
            let v = check_hardy_rogers(&t, &ln(), &coef, &space)
                .unwrap()
                .violation()
                .unwrap()
                .clone();
            assert_eq!(v.site, ViolationSite::Pair { x: 1, y: 2 });
            // Bracket equals the displacement exactly for that pair.
            assert!((v.slack + tau).abs() < 1e-12, "tau={tau}, slack={}", v.slack);
        }
    }

    #[test]
    fn hardy_rogers_agrees_with_oracle_on_tau_sweep() {
        let (t, space) = ladder_self_map();
        for tau in [0.05, 0.15, 0.25, 0.35, 0.354, 0.3542, 0.36, 0.5] {
            let coef = ladder_coefs(tau);
            let expect_pass = oracle_hr_min_slack(&t, &coef, &space) >= -crate::SLACK_TOL;
            let got = check_hardy_rogers(&t, &ln(), &coef, &space).unwrap();
            assert_eq!(got.passed(), expect_pass, "tau = {tau}");
        }
    }

    #[test]
    fn proximal_first_kind_ladder_passes_at_tau_03() {
        let (t, pair) = ladder_pair();
        let coef = ProximalCoefficients::new(0.7, 0.1, 0.1, 0.05, 0.3).unwrap();
        assert!(check_f_proximal_first_kind(&t, &pair, &ln(), &coef).unwrap().passed());
    }

    #[test]
    fn proximal_first_kind_ladder_fails_at_tau_04() {
        let (t, pair) = ladder_pair();
        let coef = ProximalCoefficients::new(0.7, 0.1, 0.1, 0.05, 0.4).unwrap();
        let v = check_f_proximal_first_kind(&t, &pair, &ln(), &coef)
            .unwrap()
            .violation()
            .unwrap()
            .clone();
        let tau_star = 0.4 + v.slack;
        assert!((tau_star - (0.57f64 / 0.4).ln()).abs() < 1e-12);
    }

    #[test]
    fn proximal_first_kind_constant_map_vacuous() {
        let a = vec![pt(0.0, 0.0), pt(0.0, 1.0)];
        let b = vec![pt(1.0, 0.0), pt(1.0, 1.0)];
        let image = vec![b[0].clone(), b[0].clone()];
        let t = MappingTable::new(a.clone(), image).unwrap();
        let pair = ProximityPair::new(MetricSpace::Euclidean { dim: 2 }, a, b, 0.0).unwrap();
        let coef = ProximalCoefficients::new(0.7, 0.1, 0.1, 0.05, 10.0).unwrap();
        // Every admissible u is (0,0), so u1 != u2 never holds.
        assert!(check_f_proximal_first_kind(&t, &pair, &ln(), &coef).unwrap().passed());
    }

    #[test]
    fn violations_reproduce_their_slack() {
        let (t, space) = ladder_self_map();
        let coef = ladder_coefs(0.4);
        let v = check_hardy_rogers(&t, &ln(), &coef, &space)
            .unwrap()
            .violation()
            .unwrap()
            .clone();
        // Re-evaluate lhs and rhs from the stored site.
        let ViolationSite::Pair { x, y } = v.site else { panic!() };
        let (px, py) = (&t.domain[x], &t.domain[y]);
        let (tx, ty) = (&t.image[x], &t.image[y]);
        let lhs = coef.tau + space.distance(tx, ty).unwrap().ln();
        let bracket = coef.a * space.distance(px, py).unwrap()
            + coef.b * space.distance(px, tx).unwrap()
            + coef.c * space.distance(py, ty).unwrap()
            + coef.e * space.distance(px, ty).unwrap()
            + coef.l * space.distance(py, tx).unwrap();
        let rhs = bracket.ln();
        assert_eq!(lhs, v.lhs);
        assert_eq!(rhs, v.rhs);
        assert!(rhs - lhs < 0.0);
    }

    #[test]
    fn coefficient_invariants_enforced() {
        assert!(HrCoefficients::new(0.7, 0.1, 0.1, 0.05, 0.05, 0.3).is_ok());
        // sum != 1
        assert!(HrCoefficients::new(0.7, 0.2, 0.1, 0.05, 0.05, 0.3).is_err());
        // nonpositive entries
        assert!(HrCoefficients::new(0.8, 0.0, 0.1, 0.05, 0.05, 0.3).is_err());
        assert!(HrCoefficients::new(0.7, 0.1, 0.1, 0.05, -0.1, 0.3).is_err());
        assert!(ProximalCoefficients::new(0.7, 0.1, 0.1, 0.05, 0.3).is_ok());
        assert!(ProximalCoefficients::new(0.7, 0.1, 0.2, 0.05, 0.3).is_err());
    }

    #[test]
    fn bracket_zero_is_a_violation() {
        // A zero bracket with positive displacement cannot happen with a
        // genuine metric; force it with a matrix space that breaks the
        // axioms (rows 0 and 1 all zero while d(2,3) = 1).
        let zero = MetricSpace::Matrix {
            dmatrix: vec![
                vec![0.0, 0.0, 0.0, 0.0],
                vec![0.0, 0.0, 0.0, 0.0],
                vec![0.0, 0.0, 0.0, 1.0],
                vec![0.0, 0.0, 1.0, 0.0],
            ],
        };
        let t = MappingTable::new(
            vec![Point::Index(0), Point::Index(1)],
            vec![Point::Index(2), Point::Index(3)],
        )
        .unwrap();
        let coef = HrCoefficients::new(0.7, 0.1, 0.1, 0.05, 0.05, 0.3).unwrap();
        let v = check_hardy_rogers(&t, &ln(), &coef, &zero)
            .unwrap()
            .violation()
            .unwrap()
            .clone();
        assert_eq!(v.rhs, f64::NEG_INFINITY);
        assert!(v.slack < 0.0);
    }
}
