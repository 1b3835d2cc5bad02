//! Tolerance constants shared by the library, its property tests and the
//! verification suites.

/// One record holding every comparison threshold used by the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Identities of exact maps (Möbius, Joukowski, closed-form densities).
    pub exact_identity: f64,
    /// Residual `|λ(τ) − z|` accepted after inverting the modular function.
    pub modular_residual: f64,
    /// Slack allowed in Murai's inequality when every capacity is exact.
    pub murai_exact: f64,
    /// Distance from 1/2 accepted as equality in the lower-bound suite.
    pub lower_bound_equality: f64,
    /// Required excess over 1/2 for distinct domains in the lower-bound suite.
    pub lower_bound_margin: f64,
    /// Geometric coincidence (points on slits, touching pieces).
    pub geometric: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        exact_identity: 1e-12,
        modular_residual: 1e-10,
        murai_exact: 1e-9,
        lower_bound_equality: 1e-12,
        lower_bound_margin: 1e-12,
        geometric: 1e-12,
    };
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}
