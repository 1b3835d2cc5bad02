//! Hyperbolic densities, normalized so that `λ_𝔻(z) = 1/(1 − |z|²)`.

pub mod modular;

use alloc::format;
use alloc::vec;

use spin::Once;

use crate::capacity::CapacityMethod;
use crate::domain::DomainSpec;
use crate::{Complex, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DensityMethod {
    ClosedForm,
    /// `λ_G(0) = cap(K_G)`, with the capacity found by the given method.
    CapacityReduction(CapacityMethod),
    Modular,
    /// A certified lower bound rather than the density itself.
    LowerBound,
}

impl DensityMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            DensityMethod::ClosedForm => "closed-form",
            DensityMethod::CapacityReduction(_) => "capacity-reduction",
            DensityMethod::Modular => "modular",
            DensityMethod::LowerBound => "lower-bound",
        }
    }

    /// True when the value is the density itself up to rounding.
    pub fn is_exact(self) -> bool {
        match self {
            DensityMethod::ClosedForm | DensityMethod::Modular => true,
            DensityMethod::CapacityReduction(m) => m.is_exact(),
            DensityMethod::LowerBound => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DensityValue {
    pub value: f64,
    pub method: DensityMethod,
    pub domain: DomainSpec,
    pub point: Complex,
}

impl DensityValue {
    pub(crate) fn new(value: f64, method: DensityMethod, domain: DomainSpec, point: Complex) -> Result<Self> {
        if value.is_finite() && value > 0.0 {
            Ok(Self { value, method, domain, point })
        } else {
            Err(Error::Numerical(format!("density of {domain} at {point} evaluated to {value}")))
        }
    }
}

fn real(x: f64) -> Complex {
    Complex::new(x, 0.0)
}

/// `λ_{𝔻_R}(z) = R/(R² − |z|²)`.
pub fn density_disk(z: Complex, r: f64) -> Result<DensityValue> {
    let domain = DomainSpec::disk(r)?;
    domain.require_point(z)?;
    DensityValue::new(r / (r * r - z.norm_sqr()), DensityMethod::ClosedForm, domain, z)
}

/// `λ_{𝔻∖{0}}(w) = 1/(2|w| log(1/|w|))`.
pub fn density_punctured_disk(w: Complex) -> Result<DensityValue> {
    let domain = DomainSpec::unit_disk().with_puncture(real(0.0))?;
    domain.require_point(w)?;
    let r = w.norm();
    DensityValue::new(1.0 / (2.0 * r * libm::log(1.0 / r)), DensityMethod::ClosedForm, domain, w)
}

pub(crate) fn one_puncture_value(a: f64) -> Result<f64> {
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::domain(format!("puncture distance a = {a} must lie in (0, 1)")));
    }
    Ok((1.0 - a * a) / (2.0 * a * libm::log(1.0 / a)))
}

/// `λ_{𝔻∖{a}}(0) = (1 − a²)/(2a log(1/a))`; the puncture at `−a` gives the
/// same value.
pub fn density_one_puncture_at_origin(a: f64) -> Result<DensityValue> {
    let value = one_puncture_value(a)?;
    let domain = DomainSpec::unit_disk().with_puncture(real(a))?;
    DensityValue::new(value, DensityMethod::ClosedForm, domain, real(0.0))
}

/// `λ_{ℂ∖{0,1}}(z)` for real `z ∈ (0, 1)`.
pub fn density_thrice_punctured(z: f64) -> Result<DensityValue> {
    let value = modular::thrice_punctured_density(z)?;
    let domain = DomainSpec::plane_minus(&[real(0.0), real(1.0)])?;
    DensityValue::new(value, DensityMethod::Modular, domain, real(z))
}

/// `λ_{ℂ∖{p,q}}(z)` for `z` on the open segment between `p` and `q`.
///
/// The affine map `w ↦ (w − p)/(q − p)` carries the domain onto
/// `ℂ ∖ {0, 1}` with derivative `1/(q − p)`.
pub fn density_plane_two_punctures(p: Complex, q: Complex, z: Complex) -> Result<DensityValue> {
    let domain = DomainSpec::plane_minus(&[p, q])?;
    domain.require_point(z)?;
    let u = (z - p) / (q - p);
    if u.im.abs() > 1e-14 {
        return Err(Error::unsupported(format!(
            "{z} is off the line through the punctures; only the segment between them is implemented"
        )));
    }
    let value = modular::thrice_punctured_density(u.re)? / (q - p).norm();
    DensityValue::new(value, DensityMethod::Modular, domain, z)
}

/// `λ_{ℂ∖{±a}}(0) = m/a`.
pub fn density_plane_symmetric_pair(a: f64) -> Result<DensityValue> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::domain(format!("puncture distance a = {a} must be positive")));
    }
    density_plane_two_punctures(real(-a), real(a), real(0.0))
}

/// `m = λ_{ℂ∖{±1}}(0)` together with an absolute error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModularConstant {
    pub m: f64,
    pub precision: f64,
}

/// Absolute error bound on `m`: the AGM and theta sums stop at machine
/// precision and the final expression has a handful of roundings.
const M_PRECISION: f64 = 1e-13;

static MODULAR_CONSTANT: Once<ModularConstant> = Once::new();

/// `m = ½ λ_{ℂ∖{0,1}}(1/2)` through `w ↦ (w + 1)/2`. Computed once.
pub fn modular_constant_m() -> ModularConstant {
    *MODULAR_CONSTANT.call_once(|| {
        let half = modular::thrice_punctured_density(0.5).expect("τ = i lies well inside the convergence region");
        ModularConstant { m: 0.5 * half, precision: M_PRECISION }
    })
}

/// The bound `λ_{𝔻∖{±a}}(0) ≥ m/a` for `a ∈ (0, 1/2)`.
pub fn punctured_pair_lower_bound(a: f64) -> Result<DensityValue> {
    if !(a > 0.0 && a < 0.5) {
        return Err(Error::domain(format!("puncture distance a = {a} must lie in (0, 1/2)")));
    }
    let domain = DomainSpec::new(crate::domain::Boundary::Disk { radius: 1.0 }, vec![real(-a), real(a)], vec![])?;
    DensityValue::new(modular_constant_m().m / a, DensityMethod::LowerBound, domain, real(0.0))
}
