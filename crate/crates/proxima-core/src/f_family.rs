//! The comparison-function class used by F-contractions, and a numerical
//! membership checker.
//!
//! A member is a strictly increasing function on the positive reals that
//! diverges to minus infinity as its argument goes to zero, and whose
//! argument-to-the-k times value goes to zero for some declared exponent
//! k in (0, 1). The last two conditions are limits and therefore not
//! decidable from finitely many samples; [`check_omega_membership`] is a
//! falsifier plus a trend test on a declared grid, nothing more.

use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum FError {
    /// Evaluation requested at alpha <= 0.
    NonPositiveArgument { alpha: f64 },
    /// Evaluation outside the tabulated range of a table-defined function.
    OutsideTableRange { alpha: f64, lo: f64, hi: f64 },
    /// k must lie strictly between 0 and 1.
    BadExponent { k: f64 },
    /// Table must have >= 2 breakpoints, strictly increasing in both columns.
    BadTable(&'static str),
}

impl fmt::Display for FError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FError::NonPositiveArgument { alpha } => {
                write!(f, "F is defined only on positive reals, got {alpha}")
            }
            FError::OutsideTableRange { alpha, lo, hi } => {
                write!(f, "alpha {alpha} outside tabulated range [{lo}, {hi}]")
            }
            FError::BadExponent { k } => write!(f, "exponent k must be in (0,1), got {k}"),
            FError::BadTable(msg) => write!(f, "invalid function table: {msg}"),
        }
    }
}

/// Built-in formulas plus tabulated user functions (piecewise linear).
#[derive(Debug, Clone, PartialEq)]
pub enum FKind {
    /// ln(alpha)
    Ln,
    /// ln(alpha) + alpha
    LnPlusAlpha,
    /// -1 / sqrt(alpha)
    NegInvSqrt,
    /// Piecewise-linear interpolation of (alpha, value) breakpoints.
    Table(Vec<(f64, f64)>),
}

/// A candidate comparison function together with the exponent k declared for
/// the decay condition. k is declared by the caller, not searched for.
#[derive(Debug, Clone, PartialEq)]
pub struct FFunction {
    kind: FKind,
    k: f64,
}

impl FFunction {
    pub fn new(kind: FKind, k: f64) -> Result<Self, FError> {
        if !(k > 0.0 && k < 1.0) {
            return Err(FError::BadExponent { k });
        }
        if let FKind::Table(pts) = &kind {
            if pts.len() < 2 {
                return Err(FError::BadTable("need at least two breakpoints"));
            }
            for w in pts.windows(2) {
                if !(w[1].0 > w[0].0 && w[1].1 > w[0].1) {
                    return Err(FError::BadTable("breakpoints must be strictly increasing"));
                }
            }
            if pts[0].0 <= 0.0 {
                return Err(FError::BadTable("breakpoints must have positive arguments"));
            }
        }
        Ok(FFunction { kind, k })
    }

    pub fn ln() -> Self {
        FFunction { kind: FKind::Ln, k: 0.5 }
    }

    pub fn kind(&self) -> &FKind {
        &self.kind
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    /// Evaluates the function at a strictly positive argument.
    pub fn eval(&self, alpha: f64) -> Result<f64, FError> {
        if !(alpha > 0.0) {
            return Err(FError::NonPositiveArgument { alpha });
        }
        match &self.kind {
            FKind::Ln => Ok(libm::log(alpha)),
            FKind::LnPlusAlpha => Ok(libm::log(alpha) + alpha),
            FKind::NegInvSqrt => Ok(-1.0 / libm::sqrt(alpha)),
            FKind::Table(pts) => {
                let lo = pts[0].0;
                let hi = pts[pts.len() - 1].0;
                if alpha < lo || alpha > hi {
                    return Err(FError::OutsideTableRange { alpha, lo, hi });
                }
                let seg = pts.windows(2).find(|w| alpha <= w[1].0).unwrap();
                let (x0, y0) = seg[0];
                let (x1, y1) = seg[1];
                Ok(y0 + (y1 - y0) * (alpha - x0) / (x1 - x0))
            }
        }
    }
}

/// Sampling plan for the three membership conditions.
#[derive(Debug, Clone, PartialEq)]
pub struct OmegaCheckGrid {
    /// Number of log-spaced sample points for the monotonicity condition;
    /// consecutive ordered pairs are compared.
    pub mono_samples: usize,
    /// Strictly decreasing, strictly positive sequence descending toward
    /// zero, used for the divergence and decay conditions.
    pub decay_grid: Vec<f64>,
    /// F must fall below this value at the bottom of the decay grid for the
    /// divergence condition to count as passed.
    pub divergence_bound: f64,
    /// |alpha^k F(alpha)| must end below this at the bottom of the grid.
    pub decay_threshold: f64,
    /// Upper end of the monotonicity sampling range (lower end is the bottom
    /// of the decay grid).
    pub mono_hi: f64,
}

impl Default for OmegaCheckGrid {
    fn default() -> Self {
        // 1e-1 down to 1e-12 in geometric steps of 1e-1.
        let decay_grid = (1..=12).map(|i| libm::pow(10.0, -(i as f64))).collect();
        OmegaCheckGrid {
            mono_samples: 64,
            decay_grid,
            divergence_bound: -20.0,
            decay_threshold: 1e-2,
            mono_hi: 1e3,
        }
    }
}

impl OmegaCheckGrid {
    pub fn validate(&self) -> Result<(), FError> {
        if self.mono_samples < 2 {
            return Err(FError::BadTable("mono_samples must be at least 2"));
        }
        if self.decay_grid.is_empty() || self.decay_grid[0] <= 0.0 {
            return Err(FError::BadTable("decay grid must be nonempty and positive"));
        }
        for w in self.decay_grid.windows(2) {
            if !(w[1] > 0.0 && w[1] < w[0]) {
                return Err(FError::BadTable("decay grid must be strictly decreasing and positive"));
            }
        }
        Ok(())
    }

    /// Log-spaced monotonicity samples from the bottom of the decay grid up
    /// to `mono_hi`. Deterministic in the grid.
    fn mono_points(&self) -> Vec<f64> {
        let lo = libm::log(*self.decay_grid.last().unwrap());
        let hi = libm::log(self.mono_hi);
        (0..self.mono_samples)
            .map(|i| libm::exp(lo + (hi - lo) * i as f64 / (self.mono_samples - 1) as f64))
            .collect()
    }
}

/// The sample point at which a condition first failed.
#[derive(Debug, Clone, PartialEq)]
pub enum OmegaWitness {
    /// f(a1) >= f(a2) with a1 < a2.
    Monotone { a1: f64, a2: f64, f1: f64, f2: f64 },
    /// f failed to descend below the divergence bound, or stopped decreasing,
    /// at this grid point.
    Divergence { alpha: f64, value: f64 },
    /// |alpha^k f(alpha)| failed to decrease toward zero at this grid point.
    Decay { alpha: f64, value: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct OmegaReport {
    pub passed_monotone: bool,
    pub passed_divergence: bool,
    pub passed_decay: bool,
    /// Present iff some condition failed; the first failure in condition
    /// order (monotone, divergence, decay).
    pub witness: Option<OmegaWitness>,
}

impl OmegaReport {
    pub fn all_passed(&self) -> bool {
        self.passed_monotone && self.passed_divergence && self.passed_decay
    }
}

/// Checks the three membership conditions numerically on the given grid.
///
/// Monotonicity is falsified on ordered sample pairs; the divergence
/// condition requires f strictly decreasing along the decay grid with its
/// last value below the divergence bound; the decay condition requires
/// |alpha^k f(alpha)| strictly decreasing along the decay grid with its
/// last value below the decay threshold. Deterministic given the grid.
pub fn check_omega_membership(
    f: &FFunction,
    grid: &OmegaCheckGrid,
) -> Result<OmegaReport, FError> {
    grid.validate()?;

    let mut witness = None;

    let mono = grid.mono_points();
    let mut passed_monotone = true;
    for w in mono.windows(2) {
        let (a1, a2) = (w[0], w[1]);
        let (f1, f2) = (f.eval(a1)?, f.eval(a2)?);
        if !(f1 < f2) {
            passed_monotone = false;
            witness = Some(OmegaWitness::Monotone { a1, a2, f1, f2 });
            break;
        }
    }

    let values: Vec<f64> =
        grid.decay_grid.iter().map(|&a| f.eval(a)).collect::<Result<_, _>>()?;

    let mut passed_divergence = true;
    for (i, w) in values.windows(2).enumerate() {
        if !(w[1] < w[0]) {
            passed_divergence = false;
            if witness.is_none() {
                witness =
                    Some(OmegaWitness::Divergence { alpha: grid.decay_grid[i + 1], value: w[1] });
            }
            break;
        }
    }
    if passed_divergence && *values.last().unwrap() >= grid.divergence_bound {
        passed_divergence = false;
        if witness.is_none() {
            witness = Some(OmegaWitness::Divergence {
                alpha: *grid.decay_grid.last().unwrap(),
                value: *values.last().unwrap(),
            });
        }
    }

    let scaled: Vec<f64> = grid
        .decay_grid
        .iter()
        .zip(&values)
        .map(|(&a, &v)| libm::fabs(libm::pow(a, f.k()) * v))
        .collect();
    let mut passed_decay = true;
    for (i, w) in scaled.windows(2).enumerate() {
        if !(w[1] < w[0]) {
            passed_decay = false;
            if witness.is_none() {
                witness = Some(OmegaWitness::Decay { alpha: grid.decay_grid[i + 1], value: w[1] });
            }
            break;
        }
    }
    if passed_decay && *scaled.last().unwrap() >= grid.decay_threshold {
        passed_decay = false;
        if witness.is_none() {
            witness = Some(OmegaWitness::Decay {
                alpha: *grid.decay_grid.last().unwrap(),
                value: *scaled.last().unwrap(),
            });
        }
    }

    Ok(OmegaReport { passed_monotone, passed_divergence, passed_decay, witness })
}
