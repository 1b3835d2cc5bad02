//! Symbolic plane domains: scaled disks minus punctures and/or radial
//! slits that reach the boundary, and planes minus finitely many points.
//!
//! Values are canonical: punctures are sorted and deduplicated, slits on a
//! common ray are merged, and punctures swallowed by a slit are dropped. Two
//! specs describing the same set therefore compare equal.

mod normalize;
mod parse;

use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::capacity::{CompactSet, Disk, Segment};
use crate::{Complex, Error, Result};

pub use normalize::{
    invert_sampled_complement, normalize_domain, normalize_pair, NormalizedDomain, NormalizedPair,
    SampledDomain, SLIT_ARC_POINTS,
};
pub use parse::{parse_complex, parse_domain};

const DIRECTION_TOL: f64 = 1e-12;

/// Outer boundary of a domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Boundary {
    /// `{|z| < radius}`.
    Disk { radius: f64 },
    Plane,
}

/// The radial slit `{s·direction : inner ≤ s < outer}`, where `outer`
/// always equals the disk radius.
///
/// Directions compare equal up to rounding so that slits given by angle
/// survive a print/parse round trip.
#[derive(Debug, Clone, Copy)]
pub struct RadialSlit {
    direction: Complex,
    inner: f64,
    outer: f64,
}

impl RadialSlit {
    pub fn direction(&self) -> Complex {
        self.direction
    }

    pub fn inner(&self) -> f64 {
        self.inner
    }

    pub fn outer(&self) -> f64 {
        self.outer
    }

    pub fn angle(&self) -> f64 {
        libm::atan2(self.direction.im, self.direction.re)
    }

    fn contains(&self, z: Complex, tol: f64) -> bool {
        let along = z * self.direction.conj();
        along.im.abs() <= tol && along.re >= self.inner - tol && along.re < self.outer
    }
}

impl PartialEq for RadialSlit {
    fn eq(&self, other: &Self) -> bool {
        (self.direction - other.direction).norm() <= DIRECTION_TOL
            && self.inner == other.inner
            && self.outer == other.outer
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainKind {
    Disk,
    DiskMinusPunctures,
    DiskMinusRadialSlits,
    /// Accepted by the parser; capacity-based density paths reject it.
    DiskMinusPuncturesAndSlits,
    PlaneMinusPunctures,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DomainSpec {
    boundary: Boundary,
    punctures: Vec<Complex>,
    slits: Vec<RadialSlit>,
}

/// Snaps rounding noise in a unit direction so that `angle=π` and the
/// `slit(-R, -inner)` form agree.
fn unit_direction(direction: Complex) -> Result<Complex> {
    let n = direction.norm();
    if !(n > 0.0) || !n.is_finite() {
        return Err(Error::domain("slit direction must be a nonzero finite complex number"));
    }
    let mut u = direction / n;
    if u.re.abs() < 1e-15 {
        u.re = 0.0;
    }
    if u.im.abs() < 1e-15 {
        u.im = 0.0;
    }
    Ok(u / u.norm())
}

fn cmp_complex(a: &Complex, b: &Complex) -> Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}

impl DomainSpec {
    /// Validates and canonicalizes. Slits are given as `(direction, inner)`
    /// and always run out to the disk boundary.
    pub fn new(boundary: Boundary, punctures: Vec<Complex>, slits: Vec<(Complex, f64)>) -> Result<Self> {
        let radius = match boundary {
            Boundary::Disk { radius } => {
                if !(radius > 0.0) || !radius.is_finite() {
                    return Err(Error::domain(format!("disk radius {radius} must be positive")));
                }
                Some(radius)
            }
            Boundary::Plane => None,
        };
        for p in &punctures {
            if !p.is_finite() {
                return Err(Error::domain("punctures must be finite"));
            }
            if let Some(r) = radius {
                if p.norm() >= r {
                    return Err(Error::domain(format!("puncture {p} lies outside the disk of radius {r}")));
                }
            }
        }
        let mut canonical_slits: Vec<RadialSlit> = Vec::with_capacity(slits.len());
        for (direction, inner) in slits {
            let Some(r) = radius else {
                return Err(Error::domain("slits need a disk boundary"));
            };
            if !(inner > 0.0 && inner < r) {
                return Err(Error::domain(format!("slit inner endpoint {inner} must lie in (0, {r})")));
            }
            let direction = unit_direction(direction)?;
            match canonical_slits.iter_mut().find(|s| (s.direction - direction).norm() <= DIRECTION_TOL) {
                Some(existing) => existing.inner = existing.inner.min(inner),
                None => canonical_slits.push(RadialSlit { direction, inner, outer: r }),
            }
        }
        canonical_slits.sort_by(|a, b| a.angle().total_cmp(&b.angle()));

        let tol = 1e-14 * radius.unwrap_or(1.0);
        let mut punctures: Vec<Complex> = punctures
            .into_iter()
            .filter(|p| !canonical_slits.iter().any(|s| s.contains(*p, tol)))
            .collect();
        punctures.sort_by(cmp_complex);
        punctures.dedup();

        if boundary == Boundary::Plane && punctures.len() < 2 {
            return Err(Error::domain("a punctured plane needs at least two punctures to be hyperbolic"));
        }
        Ok(Self { boundary, punctures, slits: canonical_slits })
    }

    pub fn disk(radius: f64) -> Result<Self> {
        Self::new(Boundary::Disk { radius }, Vec::new(), Vec::new())
    }

    pub fn unit_disk() -> Self {
        Self { boundary: Boundary::Disk { radius: 1.0 }, punctures: Vec::new(), slits: Vec::new() }
    }

    pub fn plane_minus(punctures: &[Complex]) -> Result<Self> {
        Self::new(Boundary::Plane, punctures.to_vec(), Vec::new())
    }

    pub fn with_puncture(self, p: Complex) -> Result<Self> {
        let mut punctures = self.punctures;
        punctures.push(p);
        let slits = self.slits.iter().map(|s| (s.direction, s.inner)).collect();
        Self::new(self.boundary, punctures, slits)
    }

    pub fn with_slit(self, direction: Complex, inner: f64) -> Result<Self> {
        let mut slits: Vec<_> = self.slits.iter().map(|s| (s.direction, s.inner)).collect();
        slits.push((direction, inner));
        Self::new(self.boundary, self.punctures, slits)
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    pub fn radius(&self) -> Option<f64> {
        match self.boundary {
            Boundary::Disk { radius } => Some(radius),
            Boundary::Plane => None,
        }
    }

    pub fn punctures(&self) -> &[Complex] {
        &self.punctures
    }

    pub fn slits(&self) -> &[RadialSlit] {
        &self.slits
    }

    pub fn kind(&self) -> DomainKind {
        match (self.boundary, self.punctures.is_empty(), self.slits.is_empty()) {
            (Boundary::Plane, _, _) => DomainKind::PlaneMinusPunctures,
            (_, true, true) => DomainKind::Disk,
            (_, false, true) => DomainKind::DiskMinusPunctures,
            (_, true, false) => DomainKind::DiskMinusRadialSlits,
            (_, false, false) => DomainKind::DiskMinusPuncturesAndSlits,
        }
    }

    pub fn is_simply_connected(&self) -> bool {
        matches!(self.kind(), DomainKind::Disk | DomainKind::DiskMinusRadialSlits)
    }

    fn geometric_tolerance(&self) -> f64 {
        1e-14 * self.radius().unwrap_or(1.0)
    }

    pub fn contains(&self, z: Complex) -> bool {
        if !z.is_finite() {
            return false;
        }
        if let Some(r) = self.radius() {
            if z.norm() >= r {
                return false;
            }
        }
        let tol = self.geometric_tolerance();
        !self.punctures.contains(&z) && !self.slits.iter().any(|s| s.contains(z, tol))
    }

    /// `t·G`.
    pub fn dilated(&self, t: f64) -> Result<Self> {
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::domain(format!("dilation factor {t} must be positive")));
        }
        let boundary = match self.boundary {
            Boundary::Disk { radius } => Boundary::Disk { radius: radius * t },
            Boundary::Plane => Boundary::Plane,
        };
        Ok(Self {
            boundary,
            punctures: self.punctures.iter().map(|&p| p * t).collect(),
            slits: self
                .slits
                .iter()
                .map(|s| RadialSlit { direction: s.direction, inner: s.inner * t, outer: s.outer * t })
                .collect(),
        })
    }

    pub(crate) fn require_point(&self, z: Complex) -> Result<()> {
        if self.contains(z) {
            Ok(())
        } else {
            Err(Error::OutsideDomain { point: format!("{z}"), domain: format!("{self}") })
        }
    }

    fn same_boundary(&self, other: &DomainSpec) -> Result<()> {
        match (self.boundary, other.boundary) {
            (Boundary::Plane, Boundary::Plane) => Ok(()),
            (Boundary::Disk { radius: a }, Boundary::Disk { radius: b })
                if (a - b).abs() <= 1e-12 * a.max(b) =>
            {
                Ok(())
            }
            _ => Err(Error::unsupported(format!(
                "domains {self} and {other} do not share an outer boundary"
            ))),
        }
    }
}

/// The component of `d1 ∩ d2` containing `z`.
///
/// Removing points and radial slits that reach the boundary never
/// disconnects a disk, so within the family the component is the whole
/// intersection.
pub fn intersect(d1: &DomainSpec, d2: &DomainSpec, z: Complex) -> Result<DomainSpec> {
    d1.same_boundary(d2)?;
    d1.require_point(z)?;
    d2.require_point(z)?;
    let mut punctures = d1.punctures.clone();
    punctures.extend_from_slice(&d2.punctures);
    let slits = d1.slits.iter().chain(&d2.slits).map(|s| (s.direction, s.inner)).collect();
    DomainSpec::new(d1.boundary, punctures, slits)
}

/// `d1 ∪ d2` when it is again a hyperbolic member of the family. For
/// punctured planes with fewer than two common punctures the union is not
/// hyperbolic and `None` is returned.
pub fn union(d1: &DomainSpec, d2: &DomainSpec) -> Result<Option<DomainSpec>> {
    d1.same_boundary(d2)?;
    let tol = d1.geometric_tolerance();
    // Removed set of the union: (P1 ∪ S1) ∩ (P2 ∪ S2).
    let mut punctures: Vec<Complex> = Vec::new();
    for &p in &d1.punctures {
        if d2.punctures.contains(&p) || d2.slits.iter().any(|s| s.contains(p, tol)) {
            punctures.push(p);
        }
    }
    for &p in &d2.punctures {
        if d1.slits.iter().any(|s| s.contains(p, tol)) {
            punctures.push(p);
        }
    }
    let mut slits = Vec::new();
    for s1 in &d1.slits {
        for s2 in &d2.slits {
            if (s1.direction - s2.direction).norm() <= DIRECTION_TOL {
                slits.push((s1.direction, s1.inner.max(s2.inner)));
            }
        }
    }
    if d1.boundary == Boundary::Plane && punctures.len() < 2 {
        return Ok(None);
    }
    DomainSpec::new(d1.boundary, punctures, slits).map(Some)
}

/// `K_G = {1/ζ : ζ ∈ ℂ̂ ∖ G}` for a simply connected `G` inside the closed
/// unit disk.
///
/// For `G = {|z| < R} ∖ ⋃ [inner·e, R·e)` this is the closed disk of radius
/// `1/R` together with the segments `[ē/R, ē/inner]`. Closures are taken
/// silently; capacity does not see the difference.
pub fn invert_complement(d: &DomainSpec) -> Result<CompactSet> {
    let radius = match d.boundary {
        Boundary::Disk { radius } => radius,
        Boundary::Plane => {
            return Err(Error::unsupported("the complement of a punctured plane is not a continuum"))
        }
    };
    if !d.punctures.is_empty() {
        return Err(Error::unsupported(
            "punctures invert to isolated points, not to part of a continuum",
        ));
    }
    if radius > 1.0 + 1e-12 {
        return Err(Error::precondition(format!(
            "domain of radius {radius} is not contained in the unit disk"
        )));
    }
    let disk = Disk::new(Complex::new(0.0, 0.0), 1.0 / radius);
    let segments = d
        .slits
        .iter()
        .map(|s| {
            let e = s.direction.conj();
            Segment::new(e / s.outer, e / s.inner)
        })
        .collect();
    CompactSet::new(alloc::vec![disk], segments)
}

/// Inverse of [`invert_complement`]: recovers `G` from `K_G` when `K_G` is
/// a closed disk about the origin of radius `≥ 1` plus radial segments
/// starting on its circle.
pub fn domain_from_inverted(k: &CompactSet) -> Result<DomainSpec> {
    let [disk] = k.disks() else {
        return Err(Error::unsupported("expected exactly one disk"));
    };
    if !k.polylines().is_empty() {
        return Err(Error::unsupported("polylines do not come from the symbolic family"));
    }
    if disk.center.norm() > 1e-12 || disk.radius < 1.0 - 1e-12 {
        return Err(Error::unsupported("disk must be centred at 0 with radius ≥ 1"));
    }
    let rho = disk.radius;
    let mut slits = Vec::with_capacity(k.segments().len());
    for s in k.segments() {
        let (near, far) = if s.start.norm() <= s.end.norm() { (s.start, s.end) } else { (s.end, s.start) };
        let e = far / far.norm();
        let radial = (near * e.conj()).im.abs() <= 1e-12 * rho;
        if !radial || (near.norm() - rho).abs() > 1e-12 * rho || far.norm() <= rho {
            return Err(Error::unsupported("segment is not a radial spike from the disk boundary"));
        }
        slits.push((e.conj(), 1.0 / far.norm()));
    }
    DomainSpec::new(Boundary::Disk { radius: 1.0 / rho }, Vec::new(), slits)
}

/// Writes a number so that parsing it back gives the same `f64`.
struct Num(f64);

impl fmt::Display for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

pub(crate) struct ComplexLiteral(pub Complex);

impl fmt::Display for ComplexLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let z = self.0;
        if z.im == 0.0 {
            write!(f, "{}", Num(z.re))
        } else if z.im < 0.0 {
            write!(f, "{}-{}i", Num(z.re), Num(-z.im))
        } else {
            write!(f, "{}+{}i", Num(z.re), Num(z.im))
        }
    }
}

/// The textual domain language accepted by [`parse_domain`].
impl fmt::Display for DomainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.boundary {
            Boundary::Disk { radius } => write!(f, "disk({})", Num(radius))?,
            Boundary::Plane => f.write_str("plane")?,
        }
        for p in &self.punctures {
            write!(f, " - punct({})", ComplexLiteral(*p))?;
        }
        for s in &self.slits {
            if s.direction == Complex::new(1.0, 0.0) {
                write!(f, " - slit({}, {})", Num(s.inner), Num(s.outer))?;
            } else if s.direction == Complex::new(-1.0, 0.0) {
                write!(f, " - slit({}, {})", Num(-s.outer), Num(-s.inner))?;
            } else {
                write!(f, " - slit({}, {}, angle={})", Num(s.inner), Num(s.outer), Num(s.angle()))?;
            }
        }
        Ok(())
    }
}

/// The explicit families used throughout: punctured and slit unit disks.
pub mod family {
    use super::*;

    /// `𝔻 ∖ {p}`.
    pub fn punctured(p: Complex) -> Result<DomainSpec> {
        DomainSpec::unit_disk().with_puncture(p)
    }

    /// `𝔻 ∖ {a}`.
    pub fn puncture_right(a: f64) -> Result<DomainSpec> {
        punctured(Complex::new(a, 0.0))
    }

    /// `𝔻 ∖ {−a}`.
    pub fn puncture_left(a: f64) -> Result<DomainSpec> {
        punctured(Complex::new(-a, 0.0))
    }

    /// `𝔻 ∖ [a, 1)`.
    pub fn slit_right(a: f64) -> Result<DomainSpec> {
        DomainSpec::unit_disk().with_slit(Complex::new(1.0, 0.0), a)
    }

    /// `𝔻 ∖ (−1, −a]`.
    pub fn slit_left(a: f64) -> Result<DomainSpec> {
        DomainSpec::unit_disk().with_slit(Complex::new(-1.0, 0.0), a)
    }

    /// `𝔻 ∖ [a·e^{iθ}, e^{iθ})`.
    pub fn slit_at_angle(a: f64, theta: f64) -> Result<DomainSpec> {
        DomainSpec::unit_disk().with_slit(Complex::new(libm::cos(theta), libm::sin(theta)), a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn kinds_follow_content() {
        assert_eq!(DomainSpec::unit_disk().kind(), DomainKind::Disk);
        assert_eq!(family::puncture_right(0.3).unwrap().kind(), DomainKind::DiskMinusPunctures);
        assert_eq!(family::slit_right(0.3).unwrap().kind(), DomainKind::DiskMinusRadialSlits);
        let mixed = family::slit_right(0.3).unwrap().with_puncture(c(0.0, 0.5)).unwrap();
        assert_eq!(mixed.kind(), DomainKind::DiskMinusPuncturesAndSlits);
        let plane = DomainSpec::plane_minus(&[c(-1.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert_eq!(plane.kind(), DomainKind::PlaneMinusPunctures);
    }

    #[test]
    fn validation_errors() {
        assert!(DomainSpec::disk(0.0).is_err());
        assert!(family::puncture_right(1.0).is_err());
        assert!(family::slit_right(0.0).is_err());
        assert!(family::slit_right(1.0).is_err());
        assert!(DomainSpec::plane_minus(&[c(1.0, 0.0)]).is_err());
        assert!(DomainSpec::plane_minus(&[c(1.0, 0.0), c(1.0, 0.0)]).is_err());
    }

    #[test]
    fn canonical_form_merges_and_sorts() {
        let d = DomainSpec::unit_disk()
            .with_slit(c(1.0, 0.0), 0.7)
            .unwrap()
            .with_slit(c(2.0, 0.0), 0.4)
            .unwrap()
            .with_puncture(c(0.5, 0.0))
            .unwrap();
        assert_eq!(d, family::slit_right(0.4).unwrap());
        let a = DomainSpec::unit_disk().with_puncture(c(0.1, 0.0)).unwrap().with_puncture(c(-0.1, 0.0)).unwrap();
        let b = DomainSpec::unit_disk().with_puncture(c(-0.1, 0.0)).unwrap().with_puncture(c(0.1, 0.0)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn membership() {
        let d3 = family::slit_right(0.5).unwrap();
        assert!(d3.contains(c(0.0, 0.0)));
        assert!(d3.contains(c(0.49, 0.0)));
        assert!(!d3.contains(c(0.5, 0.0)));
        assert!(!d3.contains(c(0.75, 0.0)));
        assert!(d3.contains(c(0.75, 0.01)));
        assert!(!d3.contains(c(1.0, 0.0)));
        let d1 = family::puncture_right(0.3).unwrap();
        assert!(!d1.contains(c(0.3, 0.0)));
        assert!(d1.contains(c(-0.3, 0.0)));
    }

    #[test]
    fn dilation_scales_everything() {
        assert_eq!(DomainSpec::unit_disk().dilated(2.0).unwrap(), DomainSpec::disk(2.0).unwrap());
        let p = family::puncture_right(0.3).unwrap().dilated(0.5).unwrap();
        assert_eq!(p.radius(), Some(0.5));
        assert_eq!(p.punctures(), &[c(0.15, 0.0)]);
        let s = family::slit_right(0.5).unwrap().dilated(3.0).unwrap();
        assert_eq!(s.radius(), Some(3.0));
        assert_eq!(s.slits()[0].inner(), 1.5);
        assert_eq!(s.slits()[0].outer(), 3.0);
        assert!(DomainSpec::unit_disk().dilated(-1.0).is_err());
        assert!(crate::geometry::dilate(&DomainSpec::unit_disk(), 0.0).is_err());
    }

    #[test]
    fn intersections_within_the_family() {
        let a = 0.5;
        let cap = intersect(&family::slit_right(a).unwrap(), &family::slit_left(a).unwrap(), c(0.0, 0.0)).unwrap();
        let expected = family::slit_right(a).unwrap().with_slit(c(-1.0, 0.0), a).unwrap();
        assert_eq!(cap, expected);
        assert_eq!(cap.to_string(), "disk(1.0) - slit(0.5, 1.0) - slit(-1.0, -0.5)");

        let pp = intersect(&family::puncture_right(a).unwrap(), &family::puncture_left(a).unwrap(), c(0.0, 0.0))
            .unwrap();
        assert_eq!(pp.punctures(), &[c(-a, 0.0), c(a, 0.0)]);

        let d = family::slit_right(0.3).unwrap();
        assert_eq!(intersect(&d, &d, c(0.1, 0.1)).unwrap(), d);
    }

    #[test]
    fn intersection_preconditions() {
        let d3 = family::slit_right(0.5).unwrap();
        assert!(matches!(
            intersect(&d3, &DomainSpec::unit_disk(), c(0.6, 0.0)),
            Err(Error::OutsideDomain { .. })
        ));
        assert!(matches!(
            intersect(&d3, &DomainSpec::disk(2.0).unwrap(), c(0.0, 0.0)),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn unions_keep_common_removals() {
        let a = 0.5;
        let u = union(&family::slit_right(a).unwrap(), &family::slit_left(a).unwrap()).unwrap().unwrap();
        assert_eq!(u, DomainSpec::unit_disk());
        let u = union(&family::slit_right(0.2).unwrap(), &family::slit_right(0.6).unwrap()).unwrap().unwrap();
        assert_eq!(u, family::slit_right(0.6).unwrap());
        let u = union(&family::puncture_right(0.7).unwrap(), &family::slit_right(0.6).unwrap()).unwrap().unwrap();
        assert_eq!(u, family::puncture_right(0.7).unwrap());
        let p1 = DomainSpec::plane_minus(&[c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        let p2 = DomainSpec::plane_minus(&[c(0.0, 0.0), c(2.0, 0.0)]).unwrap();
        assert_eq!(union(&p1, &p2).unwrap(), None);
    }

    #[test]
    fn inversion_of_slit_disks() {
        let k = invert_complement(&family::slit_right(0.5).unwrap()).unwrap();
        assert_eq!(k.disks(), &[Disk::new(c(0.0, 0.0), 1.0)]);
        assert_eq!(k.segments(), &[Segment::new(c(1.0, 0.0), c(2.0, 0.0))]);
        let k = invert_complement(&family::slit_left(0.5).unwrap()).unwrap();
        assert_eq!(k.segments(), &[Segment::new(c(-1.0, 0.0), c(-2.0, 0.0))]);
        let k = invert_complement(&DomainSpec::unit_disk()).unwrap();
        assert!(k.segments().is_empty());
        assert!(k.is_connected());
    }

    #[test]
    fn inversion_rejects_unsupported_kinds() {
        assert!(matches!(invert_complement(&family::puncture_right(0.3).unwrap()), Err(Error::Unsupported(_))));
        assert!(matches!(invert_complement(&DomainSpec::disk(2.0).unwrap()), Err(Error::Precondition(_))));
    }

    #[test]
    fn inversion_is_involutive() {
        let d = DomainSpec::disk(0.8)
            .unwrap()
            .with_slit(c(0.0, 1.0), 0.3)
            .unwrap()
            .with_slit(c(-1.0, 0.0), 0.5)
            .unwrap();
        let k = invert_complement(&d).unwrap();
        let back = domain_from_inverted(&k).unwrap();
        assert_eq!(invert_complement(&back).unwrap(), k);
        assert!((back.radius().unwrap() - 0.8).abs() < 1e-15);
    }

    #[test]
    fn display_round_trips() {
        let d = DomainSpec::unit_disk()
            .with_puncture(c(0.1, -0.2))
            .unwrap()
            .with_slit(c(0.0, 1.0), 0.25)
            .unwrap();
        assert_eq!(parse_domain(&d.to_string()).unwrap(), d);
    }
}
