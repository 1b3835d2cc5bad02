//! Logarithmic capacity.
//!
//! Exact values come from the interval formula `cap([α, β]) = (β − α)/4`,
//! the transformation rule `cap(L) = h'(∞)·cap(K)` and the Joukowski map,
//! which sends `{|w| > 1} ∖ [1, t]` onto `ℂ̂ ∖ [−2, t + 1/t]` and
//! `{|w| > 1} ∖ ([−t, −1] ∪ [1, t])` onto `ℂ̂ ∖ [−(t + 1/t), t + 1/t]` with
//! `J'(∞) = 1`. Everything else goes to the Fekete oracle in [`fekete`].

mod fekete;
mod set;

use alloc::format;
use alloc::vec::Vec;

pub use fekete::{
    boundary_samples, fekete_estimate, fekete_estimate_with, fekete_points, Discretization, FeketeConfiguration,
    FeketeOptions,
};
pub use set::{CompactSet, Disk, Polyline, Segment};

use crate::geometry::JOUKOWSKI_DERIVATIVE_AT_INFINITY;
use crate::tolerance::Tolerances;
use crate::{Complex, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapacityMethod {
    IntervalExact,
    Joukowski,
    Fekete,
}

impl CapacityMethod {
    pub fn is_exact(self) -> bool {
        !matches!(self, CapacityMethod::Fekete)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CapacityMethod::IntervalExact => "interval-exact",
            CapacityMethod::Joukowski => "joukowski",
            CapacityMethod::Fekete => "fekete",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacityEstimate {
    pub value: f64,
    pub method: CapacityMethod,
    /// Number of Fekete points; `None` for exact methods.
    pub n_points: Option<usize>,
    /// `(lower, upper)` enclosure of the true capacity when known.
    pub bracket: Option<(f64, f64)>,
}

impl CapacityEstimate {
    fn exact(value: f64, method: CapacityMethod) -> Self {
        Self { value, method, n_points: None, bracket: None }
    }

    /// Width of the enclosure; zero for exact values and infinite for
    /// estimates without a bracket.
    pub fn uncertainty(&self) -> f64 {
        if self.method.is_exact() {
            0.0
        } else {
            self.bracket.map_or(f64::INFINITY, |(lo, hi)| hi - lo)
        }
    }
}

pub fn interval_capacity(alpha: f64, beta: f64) -> Result<CapacityEstimate> {
    if !(alpha < beta) || !alpha.is_finite() || !beta.is_finite() {
        return Err(Error::domain(format!("interval [{alpha}, {beta}] needs α < β")));
    }
    Ok(CapacityEstimate::exact((beta - alpha) / 4.0, CapacityMethod::IntervalExact))
}

/// `h'(∞)·cap(K)`.
pub fn transform_capacity(cap_k: f64, h_prime_inf: f64) -> Result<f64> {
    if !(cap_k > 0.0) || !(h_prime_inf > 0.0) || !cap_k.is_finite() || !h_prime_inf.is_finite() {
        return Err(Error::domain("capacity and h'(∞) must both be positive"));
    }
    Ok(h_prime_inf * cap_k)
}

/// `cap(𝔻̄ ∪ [1, t]) = (t + 1/t + 2)/4`.
pub fn capacity_disk_one_slit(t: f64) -> Result<CapacityEstimate> {
    if !(t > 1.0) || !t.is_finite() {
        return Err(Error::domain(format!("slit end t = {t} must exceed 1")));
    }
    let image = interval_capacity(-2.0, t + 1.0 / t)?;
    let value = transform_capacity(image.value, JOUKOWSKI_DERIVATIVE_AT_INFINITY)?;
    Ok(CapacityEstimate::exact(value, CapacityMethod::Joukowski))
}

/// `cap(𝔻̄ ∪ [−t, −1] ∪ [1, t]) = (t + 1/t)/2`.
pub fn capacity_disk_two_slits(t: f64) -> Result<CapacityEstimate> {
    if !(t > 1.0) || !t.is_finite() {
        return Err(Error::domain(format!("slit end t = {t} must exceed 1")));
    }
    let s = t + 1.0 / t;
    let image = interval_capacity(-s, s)?;
    let value = transform_capacity(image.value, JOUKOWSKI_DERIVATIVE_AT_INFINITY)?;
    Ok(CapacityEstimate::exact(value, CapacityMethod::Joukowski))
}

/// `cap(𝔻̄) = cap([−2, 2]) = 1` through the Joukowski map.
fn capacity_closed_unit_disk() -> CapacityEstimate {
    CapacityEstimate::exact(
        JOUKOWSKI_DERIVATIVE_AT_INFINITY * (2.0 - (-2.0)) / 4.0,
        CapacityMethod::Joukowski,
    )
}

/// Closed-form capacity when `k` is recognized: a union of collinear
/// segments forming one interval, a closed disk, or a closed disk with one
/// radial spike or two opposite spikes of equal length.
pub fn exact_capacity(k: &CompactSet) -> Option<CapacityEstimate> {
    if !k.polylines().is_empty() {
        return None;
    }
    let mut disks: Vec<Disk> = Vec::with_capacity(k.disks().len());
    for d in k.disks() {
        if !disks.contains(d) {
            disks.push(*d);
        }
    }
    match disks.as_slice() {
        [] => single_interval(k.segments()).and_then(|(a, b)| interval_capacity(a, b).ok()),
        [disk] => disk_with_spikes(disk, k.segments()),
        _ => None,
    }
}

/// Projects collinear segments onto their common line and merges them.
fn single_interval(segments: &[Segment]) -> Option<(f64, f64)> {
    let (origin, dir) = segments.iter().find_map(|s| {
        let d = s.end - s.start;
        (d.norm() > 0.0).then(|| (s.start, d / d.norm()))
    })?;
    let scale = segments.iter().flat_map(|s| [s.start.norm(), s.end.norm()]).fold(1.0, f64::max);
    let tol = 1e-12 * scale;
    let mut spans: Vec<(f64, f64)> = Vec::with_capacity(segments.len());
    for s in segments {
        let a = (s.start - origin) * dir.conj();
        let b = (s.end - origin) * dir.conj();
        if a.im.abs() > tol || b.im.abs() > tol {
            return None;
        }
        spans.push((a.re.min(b.re), a.re.max(b.re)));
    }
    spans.sort_by(|x, y| x.0.total_cmp(&y.0));
    let (lo, mut hi) = spans[0];
    for &(a, b) in &spans[1..] {
        if a > hi + tol {
            return None;
        }
        hi = hi.max(b);
    }
    Some((lo, hi))
}

fn disk_with_spikes(disk: &Disk, segments: &[Segment]) -> Option<CapacityEstimate> {
    let r = disk.radius;
    let tol = 1e-12 * (disk.center.norm() + r).max(1.0);
    // (unit direction, t = far distance / r)
    let mut spikes: Vec<(Complex, f64)> = Vec::new();
    for s in segments {
        let a = s.start - disk.center;
        let b = s.end - disk.center;
        let (near, far) = if a.norm() <= b.norm() { (a, b) } else { (b, a) };
        if far.norm() <= r + tol {
            continue;
        }
        let e = far / far.norm();
        let along = near * e.conj();
        if along.im.abs() > tol || along.re > r + tol || along.re < -tol {
            return None;
        }
        let t = far.norm() / r;
        match spikes.iter_mut().find(|(d, _)| (*d - e).norm() <= 1e-12) {
            Some(spike) => spike.1 = spike.1.max(t),
            None => spikes.push((e, t)),
        }
    }
    let base = match spikes.as_slice() {
        [] => capacity_closed_unit_disk(),
        [(_, t)] => capacity_disk_one_slit(*t).ok()?,
        [(d1, t1), (d2, t2)] if (*d1 + *d2).norm() <= 1e-12 && (t1 - t2).abs() <= 1e-12 * t1 => {
            capacity_disk_two_slits(*t1).ok()?
        }
        _ => return None,
    };
    Some(CapacityEstimate { value: base.value * r, ..base })
}

/// Settings for [`capacity`] when the oracle is needed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacityOptions {
    pub fekete_n: usize,
    pub seed: u64,
    pub fekete: FeketeOptions,
    /// Skip the closed forms and always run the oracle.
    pub force_fekete: bool,
}

impl Default for CapacityOptions {
    fn default() -> Self {
        Self { fekete_n: 64, seed: 42, fekete: FeketeOptions::default(), force_fekete: false }
    }
}

/// Best available capacity: a closed form when one applies, otherwise
/// the Fekete oracle.
pub fn capacity(k: &CompactSet, options: &CapacityOptions) -> Result<CapacityEstimate> {
    if !options.force_fekete {
        if let Some(exact) = exact_capacity(k) {
            return Ok(exact);
        }
    }
    fekete_estimate_with(k, options.fekete_n, options.seed, &options.fekete)
}

/// Murai's subadditivity `cap(K₁ ∪ K₂) ≤ cap(K₁) + cap(K₂)` for
/// intersecting continua.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MuraiReport {
    pub union: CapacityEstimate,
    pub first: CapacityEstimate,
    pub second: CapacityEstimate,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs − lhs`.
    pub slack: f64,
    /// Slack allowed before declaring a violation.
    pub tolerance: f64,
    pub holds: bool,
}

pub fn murai_check(k1: &CompactSet, k2: &CompactSet) -> Result<MuraiReport> {
    murai_check_with(k1, k2, &CapacityOptions::default())
}

pub fn murai_check_with(k1: &CompactSet, k2: &CompactSet, options: &CapacityOptions) -> Result<MuraiReport> {
    if !k1.is_connected() || !k2.is_connected() {
        return Err(Error::precondition("Murai's inequality needs both sets connected"));
    }
    if !k1.intersects(k2) {
        return Err(Error::precondition("Murai's inequality needs K₁ ∩ K₂ ≠ ∅"));
    }
    let union = capacity(&k1.union(k2), options)?;
    let first = capacity(k1, options)?;
    let second = capacity(k2, options)?;
    let lhs = union.value;
    let rhs = first.value + second.value;
    let slack = rhs - lhs;
    let all_exact = [union, first, second].iter().all(|e| e.method.is_exact());
    let tolerance = if all_exact {
        Tolerances::DEFAULT.murai_exact
    } else {
        union.uncertainty() + first.uncertainty() + second.uncertainty()
    };
    Ok(MuraiReport { union, first, second, lhs, rhs, slack, tolerance, holds: slack >= -tolerance })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn interval(a: f64, b: f64) -> CompactSet {
        CompactSet::new(vec![], vec![Segment::new(c(a, 0.0), c(b, 0.0))]).unwrap()
    }

    fn disk_with(segments: Vec<Segment>) -> CompactSet {
        CompactSet::new(vec![Disk::new(c(0.0, 0.0), 1.0)], segments).unwrap()
    }

    #[test]
    fn interval_values() {
        assert_eq!(interval_capacity(-2.0, 2.0).unwrap().value, 1.0);
        assert_eq!(interval_capacity(0.0, 2.0).unwrap().value, 0.5);
        assert_eq!(interval_capacity(0.0, 1.0).unwrap().value, 0.25);
        assert!(interval_capacity(1.0, 1.0).is_err());
        assert!(interval_capacity(2.0, 1.0).is_err());
    }

    #[test]
    fn transform_rule() {
        assert_eq!(transform_capacity(0.25, 4.0).unwrap(), 1.0);
        assert_eq!(transform_capacity(1.125, 1.0).unwrap(), 1.125);
        assert_eq!(transform_capacity(0.5, 2.0).unwrap(), 1.0);
        assert!(transform_capacity(0.0, 1.0).is_err());
        assert!(transform_capacity(1.0, -1.0).is_err());
    }

    #[test]
    fn joukowski_closed_forms() {
        assert_eq!(capacity_disk_one_slit(2.0).unwrap().value, 1.125);
        assert!((capacity_disk_one_slit(10.0).unwrap().value - 3.025).abs() < 1e-15);
        assert!((capacity_disk_one_slit(1.0 + 1e-9).unwrap().value - 1.0).abs() < 1e-9);
        assert_eq!(capacity_disk_two_slits(2.0).unwrap().value, 1.25);
        assert!((capacity_disk_two_slits(100.0).unwrap().value - 50.005).abs() < 1e-12);
        assert!((capacity_disk_two_slits(1.0 + 1e-9).unwrap().value - 1.0).abs() < 1e-9);
        assert!(capacity_disk_one_slit(1.0).is_err());
        assert!(capacity_disk_two_slits(0.5).is_err());
        assert_eq!(capacity_disk_one_slit(2.0).unwrap().method, CapacityMethod::Joukowski);
    }

    #[test]
    fn recognizes_closed_forms() {
        assert_eq!(exact_capacity(&interval(0.0, 1.0).union(&interval(1.0, 2.0))).unwrap().value, 0.5);
        assert_eq!(exact_capacity(&disk_with(vec![])).unwrap().value, 1.0);
        let one = disk_with(vec![Segment::new(c(1.0, 0.0), c(2.0, 0.0))]);
        assert_eq!(exact_capacity(&one).unwrap().value, 1.125);
        let two = disk_with(vec![
            Segment::new(c(1.0, 0.0), c(2.0, 0.0)),
            Segment::new(c(-2.0, 0.0), c(-1.0, 0.0)),
        ]);
        assert_eq!(exact_capacity(&two).unwrap().value, 1.25);
        // A spike starting inside the disk is clipped by it.
        let inner = disk_with(vec![Segment::new(c(0.0, 0.0), c(0.0, 2.0))]);
        assert_eq!(exact_capacity(&inner).unwrap().value, 1.125);
        // Scaled and translated.
        let shifted = CompactSet::new(
            vec![Disk::new(c(3.0, 1.0), 2.0)],
            vec![Segment::new(c(5.0, 1.0), c(7.0, 1.0))],
        )
        .unwrap();
        assert_eq!(exact_capacity(&shifted).unwrap().value, 2.25);
        let uneven = disk_with(vec![
            Segment::new(c(1.0, 0.0), c(2.0, 0.0)),
            Segment::new(c(-3.0, 0.0), c(-1.0, 0.0)),
        ]);
        assert!(exact_capacity(&uneven).is_none());
        let crossed = CompactSet::new(
            vec![],
            vec![Segment::new(c(0.0, 0.0), c(1.0, 0.0)), Segment::new(c(0.5, -0.5), c(0.5, 0.5))],
        )
        .unwrap();
        assert!(exact_capacity(&crossed).is_none());
    }

    #[test]
    fn murai_examples() {
        let r = murai_check(&interval(0.0, 1.0), &interval(1.0, 2.0)).unwrap();
        assert_eq!((r.lhs, r.rhs, r.slack), (0.5, 0.5, 0.0));
        assert!(r.holds);

        let right = disk_with(vec![Segment::new(c(1.0, 0.0), c(2.0, 0.0))]);
        let left = disk_with(vec![Segment::new(c(-2.0, 0.0), c(-1.0, 0.0))]);
        let r = murai_check(&right, &left).unwrap();
        assert_eq!((r.lhs, r.rhs), (1.25, 2.25));
        assert!(r.holds);

        let r = murai_check(&interval(0.0, 1.0), &interval(0.0, 1.0)).unwrap();
        assert_eq!((r.lhs, r.rhs), (0.25, 0.5));
        assert!(r.holds);
    }

    #[test]
    fn murai_preconditions() {
        let apart = murai_check(&interval(0.0, 1.0), &interval(2.0, 3.0));
        assert!(matches!(apart, Err(Error::Precondition(_))));
        let split = interval(0.0, 1.0).union(&interval(2.0, 3.0));
        assert!(matches!(murai_check(&split, &interval(0.0, 3.0)), Err(Error::Precondition(_))));
    }

    #[test]
    fn murai_with_the_oracle() {
        // An L-shaped union has no closed form here.
        let a = interval(0.0, 1.0);
        let b = CompactSet::new(vec![], vec![Segment::new(c(0.0, 0.0), c(0.0, 1.0))]).unwrap();
        let options = CapacityOptions { fekete_n: 16, ..CapacityOptions::default() };
        let r = murai_check_with(&a, &b, &options).unwrap();
        assert_eq!(r.union.method, CapacityMethod::Fekete);
        assert!(r.tolerance > 0.0);
        assert!(r.holds);
    }
}
