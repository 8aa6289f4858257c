//! The machinery of a pair (A, B) of finite point sets: the set distance
//! d(A, B), the proximal subsets A0 and B0, the p-property, and the
//! finite-set form of approximative compactness.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::metric::{MetricError, MetricSpace, Point};

#[derive(Debug, Clone, PartialEq)]
pub enum ProximityError {
    EmptySet(&'static str),
    NegativeTolerance { eps: f64 },
    /// p-property is only defined when A0 is nonempty; reported rather than
    /// guessed at.
    EmptyProximalSet,
    Metric(MetricError),
}

impl fmt::Display for ProximityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProximityError::EmptySet(which) => write!(f, "set {which} must be nonempty"),
            ProximityError::NegativeTolerance { eps } => {
                write!(f, "eps_prox must be nonnegative, got {eps}")
            }
            ProximityError::EmptyProximalSet => write!(f, "A0 is empty"),
            ProximityError::Metric(e) => write!(f, "{e}"),
        }
    }
}

impl From<MetricError> for ProximityError {
    fn from(e: MetricError) -> Self {
        ProximityError::Metric(e)
    }
}

/// The subsets of A and B whose points realize the set distance, stored as
/// indices into the pair's point lists (input order preserved).
#[derive(Debug, Clone, PartialEq)]
pub struct ProximalSets {
    pub d_ab: f64,
    pub a0: Vec<usize>,
    pub b0: Vec<usize>,
}

/// A pair of nonempty finite subsets of one metric space, with the set
/// distance and proximal subsets computed eagerly at construction.
///
/// `eps_prox` is the tolerance for membership in A0/B0 and for the proximity
/// side conditions downstream; zero means exact floating-point equality and
/// is the default regime for scenarios built to attain d(A, B) exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct ProximityPair {
    space: MetricSpace,
    a: Vec<Point>,
    b: Vec<Point>,
    eps_prox: f64,
    proximal: ProximalSets,
}

impl ProximityPair {
    pub fn new(
        space: MetricSpace,
        a: Vec<Point>,
        b: Vec<Point>,
        eps_prox: f64,
    ) -> Result<Self, ProximityError> {
        if a.is_empty() {
            return Err(ProximityError::EmptySet("A"));
        }
        if b.is_empty() {
            return Err(ProximityError::EmptySet("B"));
        }
        if !(eps_prox >= 0.0) {
            return Err(ProximityError::NegativeTolerance { eps: eps_prox });
        }
        space.validate()?;

        let d_ab = pair_distance_of(&space, &a, &b)?;
        let mut a0 = Vec::new();
        for (i, p) in a.iter().enumerate() {
            for q in &b {
                if libm::fabs(space.distance(p, q)? - d_ab) <= eps_prox {
                    a0.push(i);
                    break;
                }
            }
        }
        let mut b0 = Vec::new();
        for (j, q) in b.iter().enumerate() {
            for p in &a {
                if libm::fabs(space.distance(p, q)? - d_ab) <= eps_prox {
                    b0.push(j);
                    break;
                }
            }
        }
        Ok(ProximityPair { space, a, b, eps_prox, proximal: ProximalSets { d_ab, a0, b0 } })
    }

    pub fn space(&self) -> &MetricSpace {
        &self.space
    }

    pub fn a(&self) -> &[Point] {
        &self.a
    }

    pub fn b(&self) -> &[Point] {
        &self.b
    }

    pub fn eps_prox(&self) -> f64 {
        self.eps_prox
    }

    /// The set distance min d(a, b), attained because the sets are finite.
    pub fn d_ab(&self) -> f64 {
        self.proximal.d_ab
    }

    /// Cached proximal subsets (A0 is a finite set and therefore trivially
    /// closed; no topological argument is needed at this scale).
    pub fn proximal_sets(&self) -> &ProximalSets {
        &self.proximal
    }

    pub fn a0_points(&self) -> Vec<Point> {
        self.proximal.a0.iter().map(|&i| self.a[i].clone()).collect()
    }

    pub fn b0_points(&self) -> Vec<Point> {
        self.proximal.b0.iter().map(|&j| self.b[j].clone()).collect()
    }

    pub fn distance(&self, p: &Point, q: &Point) -> Result<f64, ProximityError> {
        Ok(self.space.distance(p, q)?)
    }

    /// True when d(p, q) matches the set distance within eps_prox.
    pub fn realizes_d_ab(&self, p: &Point, q: &Point) -> Result<bool, ProximityError> {
        Ok(libm::fabs(self.space.distance(p, q)? - self.proximal.d_ab) <= self.eps_prox)
    }
}

fn pair_distance_of(
    space: &MetricSpace,
    a: &[Point],
    b: &[Point],
) -> Result<f64, ProximityError> {
    let mut best = f64::INFINITY;
    for p in a {
        for q in b {
            let d = space.distance(p, q)?;
            if d < best {
                best = d;
            }
        }
    }
    Ok(best)
}

/// min over A x B of d(a, b).
pub fn pair_distance(pair: &ProximityPair) -> f64 {
    pair.d_ab()
}

/// A quadruple of proximity-realizing pairs whose within-A and within-B
/// distances disagree. Indices are into A and B respectively.
#[derive(Debug, Clone, PartialEq)]
pub struct PPropertyWitness {
    pub u1: usize,
    pub u2: usize,
    pub v1: usize,
    pub v2: usize,
    pub d_u: f64,
    pub d_v: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum PPropertyOutcome {
    Pass,
    Witness(PPropertyWitness),
}

/// Checks the p-property by enumerating all quadruples u1, u2 in A and
/// v1, v2 in B with d(u_i, v_i) = d(A, B) (within eps_prox) and asserting
/// d(u1, u2) = d(v1, v2) within eps_prox. The quantifier runs over all of
/// A x B; proximity membership is enforced by the side conditions
/// themselves. Witness ordering is lexicographic by (u1, u2, v1, v2).
pub fn check_p_property(pair: &ProximityPair) -> Result<PPropertyOutcome, ProximityError> {
    if pair.proximal_sets().a0.is_empty() {
        return Err(ProximityError::EmptyProximalSet);
    }
    let (a, b) = (pair.a(), pair.b());
    for (i1, u1) in a.iter().enumerate() {
        for (i2, u2) in a.iter().enumerate() {
            for (j1, v1) in b.iter().enumerate() {
                if !pair.realizes_d_ab(u1, v1)? {
                    continue;
                }
                for (j2, v2) in b.iter().enumerate() {
                    if !pair.realizes_d_ab(u2, v2)? {
                        continue;
                    }
                    let d_u = pair.distance(u1, u2)?;
                    let d_v = pair.distance(v1, v2)?;
                    if libm::fabs(d_u - d_v) > pair.eps_prox() {
                        return Ok(PPropertyOutcome::Witness(PPropertyWitness {
                            u1: i1,
                            u2: i2,
                            v1: j1,
                            v2: j2,
                            d_u,
                            d_v,
                        }));
                    }
                }
            }
        }
    }
    Ok(PPropertyOutcome::Pass)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompactnessReport {
    pub passed: bool,
    pub justification: String,
}

/// Approximative compactness holds for every finite set: any sequence in B
/// has a constant (hence convergent) subsequence. The report records this so
/// the hypothesis is explicitly discharged rather than silently assumed.
pub fn check_approx_compactness(pair: &ProximityPair) -> CompactnessReport {
    CompactnessReport {
        passed: true,
        justification: format!(
            "B has {} points; any sequence in a finite set has a constant subsequence, \
             so B is approximatively compact with respect to A",
            pair.b().len()
        ),
    }
}
