//! Moving a base point to the origin of the unit disk.
//!
//! A domain `D ⊂ {|z| < R}` with base point `z` is scaled to `E = D/R` and
//! then mapped by the disk automorphism `φ_ζ`, `ζ = z/R`. Densities convert
//! back through `λ_D(z) = λ_{φ_ζ(E)}(0) · |φ_ζ'(ζ)| / R`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{invert_complement, DomainSpec};
use crate::capacity::{CompactSet, Disk, Polyline};
use crate::geometry::{disk_automorphism, MobiusMap};
use crate::{Complex, Error, Result};

/// Samples per slit image.
pub const SLIT_ARC_POINTS: usize = 512;
const OUTER_POINTS: usize = 512;

/// A domain known only through sampled boundary curves: the interior of an
/// outer circle minus sampled arcs and finitely many points.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledDomain {
    outer: Disk,
    components: Vec<Vec<Complex>>,
    punctures: Vec<Complex>,
    contains_origin: bool,
}

impl SampledDomain {
    /// The exact outer circle.
    pub fn outer_circle(&self) -> Disk {
        self.outer
    }

    /// Boundary curves; the first one samples the outer circle, the rest
    /// are images of slits.
    pub fn components(&self) -> &[Vec<Complex>] {
        &self.components
    }

    pub fn slit_arcs(&self) -> &[Vec<Complex>] {
        &self.components[1..]
    }

    pub fn punctures(&self) -> &[Complex] {
        &self.punctures
    }

    pub fn contains_origin(&self) -> bool {
        self.contains_origin
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum NormalizedDomain {
    Symbolic(DomainSpec),
    Sampled(SampledDomain),
}

impl NormalizedDomain {
    /// `K_G` of the normalized domain.
    pub fn inverted_complement(&self) -> Result<CompactSet> {
        match self {
            NormalizedDomain::Symbolic(d) => invert_complement(d),
            NormalizedDomain::Sampled(s) => invert_sampled_complement(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedPair {
    pub g1: NormalizedDomain,
    pub g2: NormalizedDomain,
    /// `|φ_ζ'(ζ)| / R`.
    pub jacobian: f64,
}

fn circle_through(a: Complex, b: Complex, c: Complex) -> Result<Disk> {
    let d = 2.0 * (a.re * (b.im - c.im) + b.re * (c.im - a.im) + c.re * (a.im - b.im));
    if d == 0.0 {
        return Err(Error::Numerical("collinear points do not determine a circle".into()));
    }
    let (a2, b2, c2) = (a.norm_sqr(), b.norm_sqr(), c.norm_sqr());
    let ux = (a2 * (b.im - c.im) + b2 * (c.im - a.im) + c2 * (a.im - b.im)) / d;
    let uy = (a2 * (c.re - b.re) + b2 * (a.re - c.re) + c2 * (b.re - a.re)) / d;
    let center = Complex::new(ux, uy);
    Ok(Disk::new(center, (a - center).norm()))
}

fn image(phi: &MobiusMap, z: Complex) -> Result<Complex> {
    phi.apply(z)
        .finite()
        .ok_or_else(|| Error::Numerical(format!("{z} is mapped to infinity")))
}

/// Normalizes one domain; returns it with the density conversion factor.
pub fn normalize_domain(d: &DomainSpec, z: Complex, r: f64) -> Result<(NormalizedDomain, f64)> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::domain(format!("ambient radius {r} must be positive")));
    }
    let Some(radius) = d.radius() else {
        return Err(Error::unsupported("punctured planes are not contained in a disk"));
    };
    if radius > r * (1.0 + 1e-12) {
        return Err(Error::precondition(format!("{d} is not contained in the disk of radius {r}")));
    }
    d.require_point(z)?;
    let e = d.dilated(1.0 / r)?;
    let zeta = z / r;
    if zeta == Complex::new(0.0, 0.0) {
        return Ok((NormalizedDomain::Symbolic(e), 1.0 / r));
    }
    let phi = disk_automorphism(zeta)?;
    let jacobian = phi.derivative(zeta)?.norm() / r;
    let rho = e.radius().unwrap_or(1.0);
    let unit_outer = (rho - 1.0).abs() <= 1e-12;

    let punctures = e.punctures().iter().map(|&p| image(&phi, p)).collect::<Result<Vec<_>>>()?;
    if unit_outer && e.slits().is_empty() {
        let mut out = DomainSpec::unit_disk();
        for p in punctures {
            out = out.with_puncture(p)?;
        }
        return Ok((NormalizedDomain::Symbolic(out), jacobian));
    }

    let outer = if unit_outer {
        Disk::new(Complex::new(0.0, 0.0), 1.0)
    } else {
        circle_through(
            image(&phi, Complex::new(rho, 0.0))?,
            image(&phi, Complex::new(0.0, rho))?,
            image(&phi, Complex::new(-rho, 0.0))?,
        )?
    };
    let outer_samples = (0..OUTER_POINTS)
        .map(|k| {
            let t = core::f64::consts::TAU * k as f64 / OUTER_POINTS as f64;
            outer.center + Complex::from_polar(outer.radius, t)
        })
        .collect();
    let mut components = vec![outer_samples];
    for s in e.slits() {
        let arc = (0..SLIT_ARC_POINTS)
            .map(|k| {
                let t = k as f64 / (SLIT_ARC_POINTS - 1) as f64;
                let radial = s.inner() + (s.outer() - s.inner()) * t;
                image(&phi, s.direction() * radial)
            })
            .collect::<Result<Vec<_>>>()?;
        components.push(arc);
    }
    let sampled = SampledDomain { outer, components, punctures, contains_origin: true };
    Ok((NormalizedDomain::Sampled(sampled), jacobian))
}

/// Scales both domains by `1/R` and moves `z/R` to the origin.
pub fn normalize_pair(d1: &DomainSpec, d2: &DomainSpec, z: Complex, r: f64) -> Result<NormalizedPair> {
    let (g1, jacobian) = normalize_domain(d1, z, r)?;
    let (g2, _) = normalize_domain(d2, z, r)?;
    Ok(NormalizedPair { g1, g2, jacobian })
}

/// `K_G` for a sampled domain: the inverted outer circle bounds a closed
/// disk, and each slit image becomes a polyline.
pub fn invert_sampled_complement(s: &SampledDomain) -> Result<CompactSet> {
    if !s.punctures.is_empty() {
        return Err(Error::unsupported(
            "punctures invert to isolated points, not to part of a continuum",
        ));
    }
    if !s.contains_origin {
        return Err(Error::precondition("the sampled domain does not contain the origin"));
    }
    let c = s.outer.center;
    let rho = s.outer.radius;
    let gap = rho * rho - c.norm_sqr();
    if !(gap > 0.0) {
        return Err(Error::precondition("the origin is not inside the outer circle"));
    }
    let disk = Disk::new(-c.conj() / gap, rho / gap);
    let polylines = s
        .slit_arcs()
        .iter()
        .map(|arc| Polyline::new(arc.iter().map(|w| w.inv()).collect()))
        .collect();
    CompactSet::with_polylines(vec![disk], Vec::new(), polylines)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::family;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn origin_and_unit_radius_is_the_identity() {
        let d3 = family::slit_right(0.5).unwrap();
        let pair = normalize_pair(&d3, &d3, c(0.0, 0.0), 1.0).unwrap();
        assert_eq!(pair.g1, NormalizedDomain::Symbolic(d3));
        assert_eq!(pair.jacobian, 1.0);
    }

    #[test]
    fn pure_scaling_halves_slits() {
        let d = DomainSpec::disk(2.0).unwrap().with_slit(c(1.0, 0.0), 1.0).unwrap();
        let pair = normalize_pair(&d, &d, c(0.0, 0.0), 2.0).unwrap();
        assert_eq!(pair.g1, NormalizedDomain::Symbolic(family::slit_right(0.5).unwrap()));
        assert_eq!(pair.jacobian, 0.5);
    }

    #[test]
    fn off_centre_slit_domains_are_sampled() {
        let d3 = family::slit_right(0.5).unwrap();
        let (g, jac) = normalize_domain(&d3, c(0.2, 0.0), 1.0).unwrap();
        assert!((jac - 1.0 / 0.96).abs() < 1e-15);
        assert!((jac - 1.041667).abs() < 1e-6);
        let NormalizedDomain::Sampled(s) = g else { panic!("expected a sampled domain") };
        assert!(s.contains_origin());
        assert_eq!(s.slit_arcs().len(), 1);
        assert!(s.components().iter().all(|comp| comp.len() >= 64));
        // φ_{0.2} keeps the real axis: [0.5, 1) goes to [φ(0.5), 1).
        let arc = &s.slit_arcs()[0];
        assert!((arc[0] - c(0.3 / 0.9, 0.0)).norm() < 1e-15);
        assert!((arc[SLIT_ARC_POINTS - 1] - c(1.0, 0.0)).norm() < 1e-15);
        let k = invert_sampled_complement(&s).unwrap();
        assert!(k.is_connected());
        assert_eq!(k.disks()[0], Disk::new(c(0.0, 0.0), 1.0));
    }

    #[test]
    fn punctured_disks_stay_symbolic() {
        let d = family::puncture_right(0.3).unwrap();
        let (g, _) = normalize_domain(&d, c(0.0, 0.4), 1.0).unwrap();
        let NormalizedDomain::Symbolic(spec) = g else { panic!("expected symbolic") };
        let phi = disk_automorphism(c(0.0, 0.4)).unwrap();
        assert_eq!(spec.punctures(), &[phi.apply(c(0.3, 0.0)).finite().unwrap()]);
    }

    #[test]
    fn smaller_disks_get_a_shifted_outer_circle() {
        let d = DomainSpec::disk(0.5).unwrap();
        let (g, _) = normalize_domain(&d, c(0.25, 0.0), 1.0).unwrap();
        let NormalizedDomain::Sampled(s) = g else { panic!("expected sampled") };
        let outer = s.outer_circle();
        // Every image of |u| = 0.5 must lie on the fitted circle.
        let phi = disk_automorphism(c(0.25, 0.0)).unwrap();
        for k in 0..8 {
            let u = Complex::from_polar(0.5, k as f64);
            let w = phi.apply(u).finite().unwrap();
            assert!(((w - outer.center).norm() - outer.radius).abs() < 1e-12);
        }
    }

    #[test]
    fn preconditions() {
        let d3 = family::slit_right(0.5).unwrap();
        assert!(matches!(normalize_domain(&d3, c(0.7, 0.0), 1.0), Err(Error::OutsideDomain { .. })));
        assert!(matches!(normalize_domain(&d3, c(0.0, 0.0), 0.5), Err(Error::Precondition(_))));
    }
}
