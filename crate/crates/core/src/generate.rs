//! Seeded random instances.

use std::collections::HashSet;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::{Arrangement, Hyperplane};
use crate::scalar::Scalar;
use crate::wiring::{CrossingEvent, ValidatedWiring, WiringDiagram};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HyperplaneParams {
    pub dim: usize,
    pub count: usize,
    /// Bound on numerators and denominators.
    pub bound: u32,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WiringParams {
    pub wires: usize,
    /// Stop after this many events; by default run until no pair of adjacent
    /// wires can still cross.
    pub crossings: Option<usize>,
    pub seed: u64,
}

const MAX_REDRAWS: usize = 10_000;

/// Draws `count` distinct hyperplanes with integer normal entries in
/// `[-bound, bound]` and offsets `p/q` with `|p| <= bound`, `1 <= q <= bound`.
pub fn random_arrangement<S: Scalar>(params: HyperplaneParams) -> Result<Arrangement<S>> {
    if params.dim == 0 {
        return Err(Error::Param("dimension must be at least 1".into()));
    }
    if params.bound == 0 {
        return Err(Error::Param("coefficient bound must be at least 1".into()));
    }
    let b = params.bound as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut seen = HashSet::new();
    let mut hyperplanes = Vec::with_capacity(params.count);
    let mut draws = 0;
    while hyperplanes.len() < params.count {
        draws += 1;
        if draws > MAX_REDRAWS * params.count.max(1) {
            return Err(Error::Param(format!(
                "could not draw {} distinct hyperplanes with bound {}",
                params.count, params.bound
            )));
        }
        let normal: Vec<S> = (0..params.dim).map(|_| S::from_integer(rng.random_range(-b..=b))).collect();
        if normal.iter().all(|v| v.is_zero()) {
            continue;
        }
        let numer = BigInt::from(rng.random_range(-b..=b));
        let denom = BigInt::from(rng.random_range(1..=b));
        let offset = S::from_ratio(&numer, &denom).expect("nonzero denominator");
        let h = Hyperplane::new(normal, offset)?;
        if seen.insert(h.clone()) {
            hyperplanes.push(h);
        }
    }
    Arrangement::new(params.dim, hyperplanes)
}

/// Builds a wiring diagram by repeatedly choosing a random adjacent pair of
/// wires that has not crossed yet and, sometimes, growing it into a larger
/// block of pairwise uncrossed wires meeting in one point.
pub fn random_wiring(params: WiringParams) -> Result<ValidatedWiring> {
    let n = params.wires;
    if n == 0 {
        return Err(Error::Param("need at least one wire".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut crossed = vec![false; n * n];
    let uncrossed = |crossed: &[bool], a: usize, b: usize| !crossed[a.min(b) * n + a.max(b)];
    let limit = params.crossings.unwrap_or(usize::MAX);
    let mut events = Vec::new();

    while events.len() < limit {
        let tops: Vec<usize> =
            (0..n.saturating_sub(1)).filter(|&p| uncrossed(&crossed, perm[p], perm[p + 1])).collect();
        if tops.is_empty() {
            break;
        }
        let top = tops[rng.random_range(0..tops.len())];
        let mut size = 2;
        while top + size < n && rng.random_bool(0.25) {
            let next = perm[top + size];
            if perm[top..top + size].iter().all(|&w| uncrossed(&crossed, w, next)) {
                size += 1;
            } else {
                break;
            }
        }
        let block = &mut perm[top..top + size];
        for i in 0..size {
            for j in i + 1..size {
                let (a, b) = (block[i].min(block[j]), block[i].max(block[j]));
                crossed[a * n + b] = true;
            }
        }
        block.reverse();
        events.push(CrossingEvent::new(top, size));
    }
    WiringDiagram { wires: n, events }.validate()
}
