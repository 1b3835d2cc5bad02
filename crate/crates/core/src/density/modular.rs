//! Elliptic modular machinery for `ℂ ∖ {0, 1}`.
//!
//! The modular function `λ(τ) = θ₂⁴/θ₃⁴` covers `ℂ ∖ {0, 1}` from the upper
//! half-plane, whose density is `1/(2 Im τ)` in the normalization
//! `λ_𝔻(0) = 1`. Pushing forward gives
//! `λ_{ℂ∖{0,1}}(λ(τ)) = 1/(2 Im τ |λ'(τ)|)`. For real `z ∈ (0, 1)` the
//! preimage is `τ = i K(√(1−z))/K(√z)`.

use core::f64::consts::PI;

use crate::{Complex, Error, Result};

const MAX_TERMS: usize = 100;
const RELATIVE_CUTOFF: f64 = 1e-16;

/// Arithmetic–geometric mean of two positive reals.
pub fn agm(a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(Error::domain("the AGM needs two positive arguments"));
    }
    let (mut a, mut b) = (a, b);
    for _ in 0..64 {
        if (a - b).abs() <= f64::EPSILON * a {
            return Ok(0.5 * (a + b));
        }
        (a, b) = (0.5 * (a + b), libm::sqrt(a * b));
    }
    Err(Error::Numerical("AGM iteration did not settle".into()))
}

/// Complete elliptic integral of the first kind, modulus `k ∈ [0, 1)`.
pub fn elliptic_k(k: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&k) {
        return Err(Error::domain(alloc::format!("elliptic modulus {k} must lie in [0, 1)")));
    }
    Ok(PI / (2.0 * agm(1.0, libm::sqrt((1.0 - k) * (1.0 + k)))?))
}

/// `(θ₂(τ), θ₃(τ), θ₄(τ))` with nome `q = e^{iπτ}`.
pub fn theta_constants(tau: Complex) -> Result<(Complex, Complex, Complex)> {
    if !(tau.im > 0.0) || !tau.is_finite() {
        return Err(Error::domain(alloc::format!("τ = {tau} must lie in the upper half-plane")));
    }
    let i_pi = Complex::new(0.0, PI);
    let q = (i_pi * tau).exp();
    let one = Complex::new(1.0, 0.0);

    // θ₃ = 1 + 2 Σ q^{n²}, θ₄ = 1 + 2 Σ (−1)^n q^{n²}
    let mut theta3 = one;
    let mut theta4 = one;
    let mut converged = false;
    for n in 1..=MAX_TERMS {
        let term = q.powi((n * n) as i32);
        theta3 += 2.0 * term;
        theta4 += if n % 2 == 0 { 2.0 * term } else { -2.0 * term };
        if term.norm() < RELATIVE_CUTOFF * theta3.norm() {
            converged = true;
            break;
        }
    }
    // θ₂ = 2 q^{1/4} Σ_{n≥0} q^{n(n+1)}
    let mut sum2 = one;
    let mut converged2 = false;
    for n in 1..=MAX_TERMS {
        let term = q.powi((n * (n + 1)) as i32);
        sum2 += term;
        if term.norm() < RELATIVE_CUTOFF * sum2.norm() {
            converged2 = true;
            break;
        }
    }
    if !converged || !converged2 {
        return Err(Error::Numerical(alloc::format!("theta series did not converge at τ = {tau}")));
    }
    let theta2 = 2.0 * (i_pi * tau / 4.0).exp() * sum2;
    Ok((theta2, theta3, theta4))
}

pub fn modular_lambda(tau: Complex) -> Result<Complex> {
    let (t2, t3, _) = theta_constants(tau)?;
    Ok((t2 / t3).powi(4))
}

/// `λ'(τ) = iπ λ(1 − λ) θ₃⁴`.
pub fn modular_lambda_derivative(tau: Complex) -> Result<Complex> {
    let (t2, t3, _) = theta_constants(tau)?;
    let lambda = (t2 / t3).powi(4);
    Ok(Complex::new(0.0, PI) * lambda * (1.0 - lambda) * t3.powi(4))
}

/// The point `τ = i K(√(1−z))/K(√z)` on the imaginary axis with `λ(τ) = z`.
pub fn invert_modular_lambda(z: f64) -> Result<Complex> {
    if !(z > 0.0 && z < 1.0) {
        return Err(Error::unsupported(alloc::format!("modular inversion is implemented for real z ∈ (0, 1), got {z}")));
    }
    // K(√z) = π/(2·AGM(1, √(1−z))), so the π/2 factors cancel.
    let ratio = agm(1.0, libm::sqrt(1.0 - z))? / agm(1.0, libm::sqrt(z))?;
    Ok(Complex::new(0.0, ratio))
}

/// `λ_{ℂ∖{0,1}}(z)` for real `z ∈ (0, 1)`.
pub fn thrice_punctured_density(z: f64) -> Result<f64> {
    if !(z > 0.0 && z < 1.0) {
        return Err(Error::unsupported(alloc::format!(
            "the thrice-punctured density is implemented for real z ∈ (0, 1), got {z}"
        )));
    }
    // z ↦ 1 − z preserves the domain; z ≤ 1/2 keeps Im τ ≥ 1.
    let z = z.min(1.0 - z);
    let tau = invert_modular_lambda(z)?;
    let derivative = modular_lambda_derivative(tau)?;
    let value = 1.0 / (2.0 * tau.im * derivative.norm());
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::Numerical(alloc::format!("density evaluation at z = {z} gave {value}")))
    }
}
