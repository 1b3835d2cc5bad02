//! Exact complex-plane maps: Möbius transformations, automorphisms of the
//! unit disk, dilations and the Joukowski pair `J(w) = w + 1/w`,
//! `Ψ(z) = (z + √(z² − 4))/2`.

use alloc::format;

use crate::domain::DomainSpec;
use crate::{Error, Result};

pub type Complex = num_complex::Complex64;

/// A point of the Riemann sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtComplex {
    Finite(Complex),
    Infinity,
}

impl ExtComplex {
    pub fn finite(self) -> Option<Complex> {
        match self {
            ExtComplex::Finite(z) => Some(z),
            ExtComplex::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, ExtComplex::Infinity)
    }
}

impl From<Complex> for ExtComplex {
    fn from(z: Complex) -> Self {
        ExtComplex::Finite(z)
    }
}

/// `z ↦ (az + b)/(cz + d)` with `ad − bc ≠ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobiusMap {
    a: Complex,
    b: Complex,
    c: Complex,
    d: Complex,
}

impl MobiusMap {
    pub fn new(a: Complex, b: Complex, c: Complex, d: Complex) -> Result<Self> {
        let det = a * d - b * c;
        if !(det.norm() > 0.0) || !det.is_finite() {
            return Err(Error::domain("Möbius map has vanishing determinant ad − bc"));
        }
        Ok(Self { a, b, c, d })
    }

    pub fn identity() -> Self {
        let one = Complex::new(1.0, 0.0);
        let zero = Complex::new(0.0, 0.0);
        Self { a: one, b: zero, c: zero, d: one }
    }

    /// `z ↦ t·z` for a nonzero complex factor.
    pub fn scaling(t: Complex) -> Result<Self> {
        let zero = Complex::new(0.0, 0.0);
        Self::new(t, zero, zero, Complex::new(1.0, 0.0))
    }

    /// `z ↦ 1/z`.
    pub fn inversion() -> Self {
        let one = Complex::new(1.0, 0.0);
        let zero = Complex::new(0.0, 0.0);
        Self { a: zero, b: one, c: one, d: zero }
    }

    pub fn coefficients(&self) -> [Complex; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn determinant(&self) -> Complex {
        self.a * self.d - self.b * self.c
    }

    /// Image of a finite point; the pole goes to [`ExtComplex::Infinity`].
    pub fn apply(&self, z: Complex) -> ExtComplex {
        let den = self.c * z + self.d;
        if den == Complex::new(0.0, 0.0) {
            ExtComplex::Infinity
        } else {
            ExtComplex::Finite((self.a * z + self.b) / den)
        }
    }

    pub fn apply_ext(&self, z: ExtComplex) -> ExtComplex {
        match z {
            ExtComplex::Finite(z) => self.apply(z),
            ExtComplex::Infinity if self.c == Complex::new(0.0, 0.0) => ExtComplex::Infinity,
            ExtComplex::Infinity => ExtComplex::Finite(self.a / self.c),
        }
    }

    /// `(ad − bc)/(cz + d)²`.
    pub fn derivative(&self, z: Complex) -> Result<Complex> {
        let den = self.c * z + self.d;
        if den == Complex::new(0.0, 0.0) {
            return Err(Error::Pole);
        }
        Ok(self.determinant() / (den * den))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &MobiusMap) -> MobiusMap {
        MobiusMap {
            a: self.a * inner.a + self.b * inner.c,
            b: self.a * inner.b + self.b * inner.d,
            c: self.c * inner.a + self.d * inner.c,
            d: self.c * inner.b + self.d * inner.d,
        }
    }

    pub fn inverse(&self) -> MobiusMap {
        MobiusMap { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }
}

/// Evaluates `m` at `z`; see [`MobiusMap::apply`].
pub fn mobius_apply(m: &MobiusMap, z: Complex) -> ExtComplex {
    m.apply(z)
}

pub fn mobius_derivative(m: &MobiusMap, z: Complex) -> Result<Complex> {
    m.derivative(z)
}

/// The automorphism `φ_ζ(w) = (w − ζ)/(1 − ζ̄ w)` of the unit disk, which
/// sends `ζ` to the origin. `φ_ζ'(ζ) = 1/(1 − |ζ|²)`.
pub fn disk_automorphism(zeta: Complex) -> Result<MobiusMap> {
    if !zeta.is_finite() || zeta.norm() >= 1.0 {
        return Err(Error::domain(format!("automorphism centre {zeta} must satisfy |ζ| < 1")));
    }
    MobiusMap::new(
        Complex::new(1.0, 0.0),
        -zeta,
        -zeta.conj(),
        Complex::new(1.0, 0.0),
    )
}

/// `J'(∞) = lim J(w)/w`.
pub const JOUKOWSKI_DERIVATIVE_AT_INFINITY: f64 = 1.0;

/// `J(w) = w + 1/w`.
pub fn joukowski(w: Complex) -> Result<Complex> {
    if w == Complex::new(0.0, 0.0) {
        return Err(Error::domain("Joukowski map is undefined at w = 0"));
    }
    Ok(w + w.inv())
}

/// The inverse branch `Ψ` of `J` from `ℂ̂ ∖ [−2, 2]` onto `{|w| > 1}`.
///
/// `√(z² − 4)` is evaluated as `√(z − 2)·√(z + 2)` with principal roots.
/// The product is analytic off `[−2, 2]` and behaves like `z` at infinity.
pub fn joukowski_inverse(z: Complex) -> Result<Complex> {
    if !z.is_finite() {
        return Err(Error::domain("Joukowski inverse needs a finite argument"));
    }
    if z.im == 0.0 && z.re.abs() <= 2.0 {
        return Err(Error::BranchCut(format!("{z}")));
    }
    let two = Complex::new(2.0, 0.0);
    let root = (z - two).sqrt() * (z + two).sqrt();
    let psi = 0.5 * (z + root);
    // Both roots of u² − zu + 1 = 0 have product 1; keep the outer one.
    if psi.norm() < 1.0 {
        Ok(psi.inv())
    } else {
        Ok(psi)
    }
}

/// Multiplies every defining length of the domain by `t > 0`.
pub fn dilate(d: &DomainSpec, t: f64) -> Result<DomainSpec> {
    d.dilated(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn close(a: Complex, b: Complex, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn identity_map_fixes_points() {
        let z = c(0.3, 0.4);
        assert_eq!(MobiusMap::identity().apply(z), ExtComplex::Finite(z));
        assert_eq!(MobiusMap::identity().derivative(c(-7.0, 2.0)).unwrap(), c(1.0, 0.0));
    }

    #[test]
    fn automorphism_at_one_half() {
        let phi = disk_automorphism(c(0.5, 0.0)).unwrap();
        assert!(close(phi.apply(c(0.0, 0.0)).finite().unwrap(), c(-0.5, 0.0), 1e-15));
        assert!(close(phi.apply(c(0.5, 0.0)).finite().unwrap(), c(0.0, 0.0), 1e-15));
        assert!(close(phi.derivative(c(0.0, 0.0)).unwrap(), c(0.75, 0.0), 1e-15));
        let phi3 = disk_automorphism(c(0.3, 0.0)).unwrap();
        assert!(close(phi3.derivative(c(0.0, 0.0)).unwrap(), c(0.91, 0.0), 1e-15));
    }

    #[test]
    fn automorphism_derivative_matches_finite_difference() {
        let zeta = c(0.0, 0.3);
        let phi = disk_automorphism(zeta).unwrap();
        let exact = phi.derivative(zeta).unwrap();
        assert!(close(exact, c(1.0 / (1.0 - 0.09), 0.0), 1e-14));
        assert!((exact.re - 1.098901).abs() < 1e-6);
        let h = 1e-6;
        let f = |z: Complex| phi.apply(z).finite().unwrap();
        let fd = (f(zeta + h) - f(zeta - h)) / (2.0 * h);
        assert!(close(fd, exact, 1e-8));
    }

    #[test]
    fn automorphism_at_origin_is_identity() {
        let phi = disk_automorphism(c(0.0, 0.0)).unwrap();
        for z in [c(0.2, -0.7), c(0.0, 0.0), c(0.9, 0.1)] {
            assert_eq!(phi.apply(z), ExtComplex::Finite(z));
        }
    }

    #[test]
    fn automorphism_rejects_centres_off_the_disk() {
        assert!(matches!(disk_automorphism(c(1.0, 0.0)), Err(Error::Domain(_))));
        assert!(matches!(disk_automorphism(c(0.8, 0.8)), Err(Error::Domain(_))));
    }

    #[test]
    fn pole_maps_to_infinity_and_derivative_errors() {
        let phi = disk_automorphism(c(0.5, 0.0)).unwrap();
        assert!(phi.apply(c(2.0, 0.0)).is_infinite());
        assert_eq!(phi.derivative(c(2.0, 0.0)), Err(Error::Pole));
        assert_eq!(MobiusMap::inversion().apply(c(0.0, 0.0)), ExtComplex::Infinity);
        assert_eq!(
            MobiusMap::inversion().apply_ext(ExtComplex::Infinity),
            ExtComplex::Finite(c(0.0, 0.0))
        );
    }

    #[test]
    fn degenerate_map_is_rejected() {
        let one = c(1.0, 0.0);
        assert!(MobiusMap::new(one, one, one, one).is_err());
    }

    #[test]
    fn compose_and_inverse() {
        let phi = disk_automorphism(c(0.2, -0.4)).unwrap();
        let round = phi.inverse().compose(&phi);
        let z = c(0.1, 0.3);
        assert!(close(round.apply(z).finite().unwrap(), z, 1e-15));
    }

    #[test]
    fn joukowski_values() {
        assert_eq!(joukowski(c(2.0, 0.0)).unwrap(), c(2.5, 0.0));
        let t = 3.0;
        assert!(close(joukowski(c(0.0, t)).unwrap(), c(0.0, t - 1.0 / t), 1e-15));
        for k in 0..16 {
            let theta = k as f64 * 0.4;
            let w = Complex::from_polar(1.0, theta);
            let z = joukowski(w).unwrap();
            assert!(z.im.abs() < 1e-15);
            assert!((z.re - 2.0 * theta.cos()).abs() < 1e-15);
        }
        assert!(joukowski(c(0.0, 0.0)).is_err());
    }

    #[test]
    fn joukowski_inverse_values() {
        assert!(close(joukowski_inverse(c(2.5, 0.0)).unwrap(), c(2.0, 0.0), 1e-15));
        assert!(close(joukowski_inverse(c(-2.5, 0.0)).unwrap(), c(-2.0, 0.0), 1e-15));
        assert!(close(joukowski_inverse(c(-2.5, -0.0)).unwrap(), c(-2.0, 0.0), 1e-15));
        // Larger root of u² − 10u + 1 = 0.
        let expected = 0.5 * (10.0 + 96f64.sqrt());
        assert!((joukowski_inverse(c(10.0, 0.0)).unwrap().re - expected).abs() < 1e-14);
        assert!((expected - 9.898979).abs() < 1e-6);
    }

    #[test]
    fn joukowski_inverse_rejects_the_cut() {
        for x in [-2.0, -1.0, 0.0, 1.5, 2.0] {
            assert!(matches!(joukowski_inverse(c(x, 0.0)), Err(Error::BranchCut(_))));
        }
        // Just off the cut is fine and lands outside the unit circle.
        let w = joukowski_inverse(c(0.5, 1e-9)).unwrap();
        assert!(w.norm() > 1.0);
    }
}
