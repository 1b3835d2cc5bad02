//! Transfinite diameter by Fekete-point search.
//!
//! `d_n(K) = max (∏_{i<j} |z_i − z_j|)^{2/(n(n−1))}` over `n` points of `K`.
//! The maximum is attained on the outer boundary, so the search runs over
//! an arc-length-uniform discretization of the boundary pieces. Each restart
//! picks a random configuration and then moves one point at a time to the
//! best free candidate until no move improves the energy.
//!
//! For every compact set `d_n ≥ cap(K)` and `d_n ↓ cap(K)`, so the estimate
//! approaches the capacity from above.

use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{CapacityEstimate, CapacityMethod, CompactSet};
use crate::{Complex, Error, Result};

/// Boundary sampling density.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Discretization {
    pub points_per_disk: usize,
    /// Applies to segments and to whole polylines.
    pub points_per_segment: usize,
}

impl Default for Discretization {
    fn default() -> Self {
        Self { points_per_disk: 2048, points_per_segment: 1024 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FeketeOptions {
    pub discretization: Discretization,
    pub starts: usize,
    /// Upper limit on full passes over the configuration per restart.
    pub max_sweeps: usize,
}

impl Default for FeketeOptions {
    fn default() -> Self {
        Self { discretization: Discretization::default(), starts: 8, max_sweeps: 500 }
    }
}

/// `d_n(K)` with the default discretization and restart count.
pub fn fekete_estimate(k: &CompactSet, n: usize, seed: u64) -> Result<CapacityEstimate> {
    fekete_estimate_with(k, n, seed, &FeketeOptions::default())
}

/// Result of a search, including the maximizing configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct FeketeConfiguration {
    pub points: Vec<Complex>,
    /// `Σ_{i<j} ln |z_i − z_j|`.
    pub log_energy: f64,
    /// `d_n`.
    pub diameter: f64,
    /// Index of the restart that produced the configuration.
    pub restart: usize,
}

pub fn fekete_estimate_with(
    k: &CompactSet,
    n: usize,
    seed: u64,
    options: &FeketeOptions,
) -> Result<CapacityEstimate> {
    let best = fekete_points(k, n, seed, options)?;
    let lower = if k.is_connected() {
        // cap(K) ≥ diam(K)/4 for continua; the sampled diameter is smaller
        // than the true one, so the bound stays valid.
        Some(sampled_diameter(&boundary_samples(k, &options.discretization)) / 4.0)
    } else {
        None
    };
    Ok(CapacityEstimate {
        value: best.diameter,
        method: CapacityMethod::Fekete,
        n_points: Some(n),
        bracket: lower.map(|lo| (lo, best.diameter)),
    })
}

/// Runs the multi-start exchange search and returns the best configuration.
/// Ties between restarts go to the lowest restart index.
pub fn fekete_points(k: &CompactSet, n: usize, seed: u64, options: &FeketeOptions) -> Result<FeketeConfiguration> {
    if n < 2 {
        return Err(Error::domain("Fekete estimate needs n ≥ 2"));
    }
    if options.starts == 0 {
        return Err(Error::domain("Fekete estimate needs at least one restart"));
    }
    let candidates = boundary_samples(k, &options.discretization);
    if candidates.len() < n {
        return Err(Error::domain("not enough distinct boundary samples for the requested n"));
    }
    let mut best: Option<FeketeConfiguration> = None;
    for restart in 0..options.starts {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(restart as u64));
        let start = rand::seq::index::sample(&mut rng, candidates.len(), n).into_vec();
        let chosen = exchange(&candidates, start, options.max_sweeps);
        let log_energy = energy(&candidates, &chosen);
        if best.as_ref().is_none_or(|b| log_energy > b.log_energy) {
            let pairs = (n * (n - 1)) as f64 / 2.0;
            best = Some(FeketeConfiguration {
                points: chosen.iter().map(|&i| candidates[i]).collect(),
                log_energy,
                diameter: libm::exp(log_energy / pairs),
                restart,
            });
        }
    }
    best.ok_or_else(|| Error::Numerical("no restart produced a configuration".into()))
}

fn log_dist(a: Complex, b: Complex) -> f64 {
    0.5 * libm::log((a - b).norm_sqr())
}

fn energy(candidates: &[Complex], chosen: &[usize]) -> f64 {
    let mut e = 0.0;
    for (i, &a) in chosen.iter().enumerate() {
        for &b in &chosen[i + 1..] {
            e += log_dist(candidates[a], candidates[b]);
        }
    }
    e
}

/// Coordinate ascent on the log energy. `potential[c]` holds
/// `Σ_j ln|c − z_j|` over the current configuration, so moving point `i`
/// to candidate `c` changes its contribution to `potential[c] − ln|c − z_i|`.
fn exchange(candidates: &[Complex], mut chosen: Vec<usize>, max_sweeps: usize) -> Vec<usize> {
    let m = candidates.len();
    let mut occupied = alloc::vec![false; m];
    let mut potential = alloc::vec![0.0f64; m];
    for &j in &chosen {
        occupied[j] = true;
        for (c, p) in potential.iter_mut().enumerate() {
            if c != j {
                *p += log_dist(candidates[c], candidates[j]);
            }
        }
    }
    for _ in 0..max_sweeps {
        let mut improved = false;
        #[allow(clippy::needless_range_loop)]
        for slot in 0..chosen.len() {
            let current = chosen[slot];
            let here = candidates[current];
            let mut best_gain = potential[current];
            let mut best_index = current;
            for c in 0..m {
                if occupied[c] {
                    continue;
                }
                let gain = potential[c] - log_dist(candidates[c], here);
                if gain > best_gain {
                    best_gain = gain;
                    best_index = c;
                }
            }
            // Relative threshold so rounding noise cannot cycle forever.
            if best_index != current && best_gain > potential[current] + 1e-12 * (1.0 + potential[current].abs()) {
                let there = candidates[best_index];
                for (c, p) in potential.iter_mut().enumerate() {
                    let z = candidates[c];
                    if c != current {
                        *p -= log_dist(z, here);
                    }
                    if c != best_index {
                        *p += log_dist(z, there);
                    }
                }
                occupied[current] = false;
                occupied[best_index] = true;
                chosen[slot] = best_index;
                improved = true;
            }
        }
        if !improved {
            break;
        }
    }
    chosen
}

/// Arc-length-uniform samples of every piece, with points strictly inside
/// some disk dropped and coincident samples merged.
pub fn boundary_samples(k: &CompactSet, disc: &Discretization) -> Vec<Complex> {
    let mut pts = Vec::new();
    for d in k.disks() {
        let m = disc.points_per_disk.max(3);
        pts.extend((0..m).map(|j| {
            let t = core::f64::consts::TAU * j as f64 / m as f64;
            d.center + Complex::from_polar(d.radius, t)
        }));
    }
    let m = disc.points_per_segment.max(2);
    for s in k.segments() {
        pts.extend((0..m).map(|j| {
            let t = j as f64 / (m - 1) as f64;
            s.start + (s.end - s.start) * t
        }));
    }
    for p in k.polylines() {
        pts.extend(resample(&p.points, m));
    }
    let interior = |z: &Complex| {
        k.disks().iter().any(|d| (*z - d.center).norm() < d.radius * (1.0 - 1e-9))
    };
    pts.retain(|z| !interior(z));
    pts.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let tol = 1e-12 * k.extent().max(1.0);
    let mut out: Vec<Complex> = Vec::with_capacity(pts.len());
    for z in pts {
        // Near-duplicates sort next to each other only when they share the
        // real part closely; check a short window behind.
        let dup = out.iter().rev().take_while(|w| z.re - w.re <= tol).any(|w| (z - *w).norm() <= tol);
        if !dup {
            out.push(z);
        }
    }
    out
}

fn resample(points: &[Complex], m: usize) -> Vec<Complex> {
    let mut cumulative = Vec::with_capacity(points.len());
    let mut total = 0.0;
    cumulative.push(0.0);
    for w in points.windows(2) {
        total += (w[1] - w[0]).norm();
        cumulative.push(total);
    }
    let mut out = Vec::with_capacity(m);
    let mut piece = 0;
    for j in 0..m {
        let target = total * j as f64 / (m - 1) as f64;
        while piece + 2 < points.len() && cumulative[piece + 1] < target {
            piece += 1;
        }
        let len = cumulative[piece + 1] - cumulative[piece];
        let t = if len > 0.0 { ((target - cumulative[piece]) / len).clamp(0.0, 1.0) } else { 0.0 };
        out.push(points[piece] + (points[piece + 1] - points[piece]) * t);
    }
    out
}

fn sampled_diameter(points: &[Complex]) -> f64 {
    let mut best = 0.0f64;
    for (i, &a) in points.iter().enumerate() {
        for &b in &points[i + 1..] {
            best = best.max((a - b).norm_sqr());
        }
    }
    libm::sqrt(best)
}
