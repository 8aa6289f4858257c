//! Finite metric spaces: point representations, distance evaluation, and
//! metric-axiom verification.

use alloc::vec::Vec;
use core::fmt;

/// An element of a metric space.
///
/// Geometric spaces use coordinate tuples; matrix-defined spaces address
/// points by row/column index. All points of one space must share one
/// representation and, for coordinates, one dimension.
#[derive(Debug, Clone, PartialEq)]
pub enum Point {
    Coords(Vec<f64>),
    Index(usize),
}

impl Point {
    pub fn coords(c: &[f64]) -> Self {
        Point::Coords(c.to_vec())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum MetricError {
    DimensionMismatch { expected: usize, got: usize },
    IndexOutOfRange { index: usize, size: usize },
    RepresentationMismatch,
    BadMatrix(&'static str),
}

impl fmt::Display for MetricError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MetricError::DimensionMismatch { expected, got } => {
                write!(f, "point dimension {got} does not match space dimension {expected}")
            }
            MetricError::IndexOutOfRange { index, size } => {
                write!(f, "point index {index} out of range for {size}x{size} distance matrix")
            }
            MetricError::RepresentationMismatch => {
                write!(f, "point representation does not match the space kind")
            }
            MetricError::BadMatrix(msg) => write!(f, "invalid distance matrix: {msg}"),
        }
    }
}

/// A concrete finite-instance metric.
///
/// The matrix kind carries an explicit symmetric distance table; its metric
/// axioms are not assumed but verified exhaustively by
/// [`check_metric_axioms`].
#[derive(Debug, Clone, PartialEq)]
pub enum MetricSpace {
    Euclidean { dim: usize },
    Chebyshev { dim: usize },
    Matrix { dmatrix: Vec<Vec<f64>> },
}

impl MetricSpace {
    /// Structural validation: square matrix with nonnegative entries.
    /// Symmetry, zero diagonal, and the triangle inequality are the job of
    /// [`check_metric_axioms`].
    pub fn validate(&self) -> Result<(), MetricError> {
        if let MetricSpace::Matrix { dmatrix } = self {
            let n = dmatrix.len();
            if n == 0 {
                return Err(MetricError::BadMatrix("empty matrix"));
            }
            for row in dmatrix {
                if row.len() != n {
                    return Err(MetricError::BadMatrix("matrix not square"));
                }
                if row.iter().any(|v| !v.is_finite() || *v < 0.0) {
                    return Err(MetricError::BadMatrix("entries must be finite and nonnegative"));
                }
            }
        }
        Ok(())
    }

    /// Evaluates d(p, q).
    pub fn distance(&self, p: &Point, q: &Point) -> Result<f64, MetricError> {
        match (self, p, q) {
            (MetricSpace::Euclidean { dim }, Point::Coords(a), Point::Coords(b)) => {
                check_dims(*dim, a, b)?;
                let sum: f64 = a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum();
                Ok(libm::sqrt(sum))
            }
            (MetricSpace::Chebyshev { dim }, Point::Coords(a), Point::Coords(b)) => {
                check_dims(*dim, a, b)?;
                Ok(a.iter()
                    .zip(b)
                    .map(|(x, y)| libm::fabs(x - y))
                    .fold(0.0, f64::max))
            }
            (MetricSpace::Matrix { dmatrix }, Point::Index(i), Point::Index(j)) => {
                let n = dmatrix.len();
                for idx in [*i, *j] {
                    if idx >= n {
                        return Err(MetricError::IndexOutOfRange { index: idx, size: n });
                    }
                }
                Ok(dmatrix[*i][*j])
            }
            _ => Err(MetricError::RepresentationMismatch),
        }
    }
}

fn check_dims(dim: usize, a: &[f64], b: &[f64]) -> Result<(), MetricError> {
    for v in [a, b] {
        if v.len() != dim {
            return Err(MetricError::DimensionMismatch { expected: dim, got: v.len() });
        }
    }
    Ok(())
}

/// The first metric axiom violated on a sampled (or enumerated) triple.
#[derive(Debug, Clone, PartialEq)]
pub enum AxiomWitness {
    /// d(p, q) < 0.
    Negative { p: Point, q: Point, value: f64 },
    /// d(p, q) != d(q, p).
    Asymmetric { p: Point, q: Point, forward: f64, backward: f64 },
    /// d(p, p) != 0.
    NonzeroSelf { p: Point, value: f64 },
    /// d(p, r) > d(p, q) + d(q, r).
    Triangle { p: Point, q: Point, r: Point, lhs: f64, rhs: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct AxiomReport {
    pub passed: bool,
    pub witness: Option<AxiomWitness>,
}

/// Verifies nonnegativity, symmetry, d(p,p) = 0, and the triangle inequality.
///
/// For geometric kinds the supplied triples are checked; for the matrix kind
/// the sample is ignored and all index triples are enumerated exhaustively in
/// lexicographic order, so the returned witness (if any) is the
/// lexicographically smallest violating triple.
pub fn check_metric_axioms(
    space: &MetricSpace,
    sample: &[[Point; 3]],
) -> Result<AxiomReport, MetricError> {
    space.validate()?;
    if let MetricSpace::Matrix { dmatrix } = space {
        let n = dmatrix.len();
        let mut triples = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    triples.push([Point::Index(i), Point::Index(j), Point::Index(k)]);
                }
            }
        }
        return check_triples(space, &triples);
    }
    check_triples(space, sample)
}

fn check_triples(space: &MetricSpace, triples: &[[Point; 3]]) -> Result<AxiomReport, MetricError> {
    for [p, q, r] in triples {
        let dpq = space.distance(p, q)?;
        let dqp = space.distance(q, p)?;
        let dqr = space.distance(q, r)?;
        let dpr = space.distance(p, r)?;
        let dpp = space.distance(p, p)?;
        let witness = if dpq < 0.0 {
            Some(AxiomWitness::Negative { p: p.clone(), q: q.clone(), value: dpq })
        } else if dpq != dqp {
            Some(AxiomWitness::Asymmetric {
                p: p.clone(),
                q: q.clone(),
                forward: dpq,
                backward: dqp,
            })
        } else if dpp != 0.0 {
            Some(AxiomWitness::NonzeroSelf { p: p.clone(), value: dpp })
        } else if dpr > dpq + dqr {
            Some(AxiomWitness::Triangle {
                p: p.clone(),
                q: q.clone(),
                r: r.clone(),
                lhs: dpr,
                rhs: dpq + dqr,
            })
        } else {
            None
        };
        if witness.is_some() {
            return Ok(AxiomReport { passed: false, witness });
        }
    }
    Ok(AxiomReport { passed: true, witness: None })
}
