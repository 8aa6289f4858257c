//! Deterministic random-scenario generation for route-equivalence sweeps.
//!
//! Generated scenarios are translation-structured: A sits on a vertical
//! line, B is A shifted horizontally by one unit. Every cross distance is
//! then sqrt(1 + gap^2) >= 1 with equality exactly on matching rungs, so
//! d(A, B) = 1 is attained exactly in floating point, A0 = A, B0 = B, and
//! the p-property holds by construction. The mapping table is a monotone
//! index map that never climbs, so every orbit descends to the bottom rung.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scenario::{
    default_checks, CoefSpec, FSpec, ScenarioFile, SetSpec, SpaceSpec, StartSpec, StopSpec,
};

pub struct GenParams {
    pub size: usize,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams { size: 5 }
    }
}

/// Produces a scenario deterministically from the seed: same seed, same
/// bytes.
pub fn generate_random_scenario(seed: u64, params: &GenParams) -> ScenarioFile {
    assert!(params.size >= 1, "size must be at least 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Rung heights in steps of 1/16, gaps between 1 and 16 steps: distinct,
    // well separated, exactly representable.
    let mut ys = vec![0.0f64];
    for _ in 1..params.size {
        let gap = rng.gen_range(1..=16) as f64 / 16.0;
        ys.push(ys.last().unwrap() + gap);
    }

    let a: Vec<Vec<f64>> = ys.iter().map(|&y| vec![0.0, y]).collect();
    let b: Vec<Vec<f64>> = ys.iter().map(|&y| vec![1.0, y]).collect();

    // Monotone shrinking index map: sigma(0) = 0, sigma(i) in [sigma(i-1), i-1].
    let mut sigma = vec![0usize];
    for i in 1..params.size {
        let lo = sigma[i - 1];
        sigma.push(rng.gen_range(lo..=i - 1));
    }
    let t = sigma.iter().enumerate().map(|(i, &j)| [i, j]).collect();

    ScenarioFile {
        space: SpaceSpec::Euclidean { dim: 2 },
        points: None,
        a: SetSpec::Coords(a),
        b: SetSpec::Coords(b),
        t,
        f: FSpec { tag: "ln".to_string(), k: 0.5, params: None },
        coefficients: CoefSpec::Proximal { a: 0.7, b: 0.1, c: 0.1, h: 0.05 },
        tau: 0.3,
        eps_prox: 0.0,
        stop: StopSpec::default(),
        starts: StartSpec::default(),
        checks: default_checks(),
        seed: Some(seed),
    }
}
