//! The ratio `Q(D₁, D₂; z) = λ_{D₁∩D₂}(z)/(λ_{D₁}(z) + λ_{D₂}(z))`, its
//! sweeps over the punctured and slit families, and the numeric checks
//! built on them.

use alloc::format;
use alloc::vec::Vec;

use crate::capacity::{capacity, CapacityOptions, FeketeOptions};
use crate::density::{
    density_disk, density_plane_two_punctures, modular_constant_m, one_puncture_value, DensityMethod, DensityValue,
};
use crate::domain::{
    family, intersect, invert_complement, invert_sampled_complement, normalize_domain, union, DomainSpec,
    NormalizedDomain,
};
use crate::tolerance::Tolerances;
use crate::{Complex, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioOptions {
    pub fekete_n: usize,
    pub seed: u64,
    /// Route slit domains through the oracle even when a closed form applies.
    pub force_fekete: bool,
    pub fekete: FeketeOptions,
}

impl Default for RatioOptions {
    fn default() -> Self {
        Self { fekete_n: 64, seed: 42, force_fekete: false, fekete: FeketeOptions::default() }
    }
}

impl RatioOptions {
    fn capacity_options(&self) -> CapacityOptions {
        CapacityOptions {
            fekete_n: self.fekete_n,
            seed: self.seed,
            fekete: self.fekete,
            force_fekete: self.force_fekete,
        }
    }
}

fn origin() -> Complex {
    Complex::new(0.0, 0.0)
}

/// `λ_d(z)` by the best available method.
///
/// * disks: closed form;
/// * one puncture: moved to the origin by a disk automorphism;
/// * two punctures symmetric about `z`: the lower bound `m/a` (tagged);
/// * radial slits: `λ_G(0) = cap(K_G)` after normalization;
/// * two-punctured planes: the modular route.
pub fn density(d: &DomainSpec, z: Complex, options: &RatioOptions) -> Result<DensityValue> {
    d.require_point(z)?;
    let Some(radius) = d.radius() else {
        return match d.punctures() {
            [p, q] => density_plane_two_punctures(*p, *q, z),
            _ => Err(Error::unsupported(format!("no density method for {d}"))),
        };
    };
    let punctures = d.punctures().len();
    let slits = d.slits().len();
    if punctures > 0 && slits > 0 {
        return Err(Error::unsupported(format!(
            "{d} mixes punctures and slits; capacity-based densities need a slit-only domain"
        )));
    }
    if punctures == 0 && slits == 0 {
        return density_disk(z, radius);
    }
    let (normalized, jacobian) = normalize_domain(d, z, radius)?;
    let tag = |value: f64, method: DensityMethod| DensityValue::new(value, method, d.clone(), z);

    if punctures > 0 {
        let NormalizedDomain::Symbolic(g) = &normalized else {
            return Err(Error::Numerical("punctured domains normalize symbolically".into()));
        };
        return match g.punctures() {
            [w] => tag(one_puncture_value(w.norm())? * jacobian, DensityMethod::ClosedForm),
            [w1, w2] if (*w1 + *w2).norm() <= Tolerances::DEFAULT.geometric => {
                let a = w1.norm();
                if a >= 0.5 {
                    return Err(Error::unsupported(format!(
                        "the lower bound for a symmetric puncture pair needs a < 1/2, got a = {a}"
                    )));
                }
                tag(modular_constant_m().m / a * jacobian, DensityMethod::LowerBound)
            }
            _ => Err(Error::unsupported(format!("no density method for {d} at {z}"))),
        };
    }

    let k = match &normalized {
        NormalizedDomain::Symbolic(g) => invert_complement(g)?,
        NormalizedDomain::Sampled(s) => invert_sampled_complement(s)?,
    };
    let cap = capacity(&k, &options.capacity_options())?;
    tag(cap.value * jacobian, DensityMethod::CapacityReduction(cap.method))
}

#[derive(Debug, Clone, PartialEq)]
pub struct RatioReport {
    pub lambda1: DensityValue,
    pub lambda2: DensityValue,
    pub lambda_cap: DensityValue,
    /// `λ_{D₁∪D₂}(z)` when the union lies in the family.
    pub lambda_cup: Option<DensityValue>,
    pub q: f64,
    /// `lambda_cap` is a lower bound, so `q` bounds the true ratio from below.
    pub lower_bound_mode: bool,
}

impl RatioReport {
    pub fn is_exact(&self) -> bool {
        [&self.lambda1, &self.lambda2, &self.lambda_cap].iter().all(|v| v.method.is_exact())
    }
}

/// `Q(d1, d2; z)` for domains inside `𝔻_R`.
pub fn ratio(d1: &DomainSpec, d2: &DomainSpec, z: Complex, r: f64, options: &RatioOptions) -> Result<RatioReport> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::domain(format!("ambient radius R = {r} must be positive")));
    }
    for d in [d1, d2] {
        if let Some(radius) = d.radius() {
            if radius > r * (1.0 + 1e-12) {
                return Err(Error::precondition(format!("{d} is not contained in the disk of radius {r}")));
            }
        }
    }
    let cap_domain = intersect(d1, d2, z)?;
    let lambda1 = density(d1, z, options)?;
    let lambda2 = density(d2, z, options)?;
    if lambda1.method == DensityMethod::LowerBound || lambda2.method == DensityMethod::LowerBound {
        return Err(Error::unsupported(
            "a lower bound in the denominator would not bound the ratio; only the intersection may use one",
        ));
    }
    let lambda_cap = density(&cap_domain, z, options)?;
    let lambda_cup = match union(d1, d2)? {
        Some(u) => density(&u, z, options).ok(),
        None => None,
    };
    let q = lambda_cap.value / (lambda1.value + lambda2.value);
    let lower_bound_mode = lambda_cap.method == DensityMethod::LowerBound;
    Ok(RatioReport { lambda1, lambda2, lambda_cap, lambda_cup, q, lower_bound_mode })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    Exact,
    LowerBound,
}

impl SweepMode {
    pub fn as_str(self) -> &'static str {
        match self {
            SweepMode::Exact => "exact",
            SweepMode::LowerBound => "lower-bound",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub a: f64,
    pub lambda1: f64,
    pub lambda2: f64,
    pub lambda_cap: f64,
    pub lambda_cup: Option<f64>,
    pub q_or_bound: f64,
    pub mode: SweepMode,
}

impl SweepRow {
    fn from_report(a: f64, r: &RatioReport) -> Self {
        Self {
            a,
            lambda1: r.lambda1.value,
            lambda2: r.lambda2.value,
            lambda_cap: r.lambda_cap.value,
            lambda_cup: r.lambda_cup.as_ref().map(|v| v.value),
            q_or_bound: r.q,
            mode: if r.lower_bound_mode { SweepMode::LowerBound } else { SweepMode::Exact },
        }
    }
}

/// Checks range and distinctness, then sorts in decreasing order.
fn sweep_values(values: &[f64], lo: f64, hi: f64) -> Result<Vec<f64>> {
    if values.is_empty() {
        return Err(Error::domain("a sweep needs at least one value of a"));
    }
    if let Some(a) = values.iter().find(|&&a| !(a > lo && a < hi)) {
        return Err(Error::domain(format!("a = {a} is outside ({lo}, {hi})")));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(|x, y| y.total_cmp(x));
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::domain(format!("a = {} appears more than once", w[0])));
    }
    Ok(sorted)
}

/// Rows for `𝔻∖{a}`, `𝔻∖{−a}` at `z = 0`. The intersection density is the
/// lower bound `m/a`, so each ratio is `m log(1/a)/(1 − a²)` from below.
pub fn sweep_punctured(a_values: &[f64]) -> Result<Vec<SweepRow>> {
    let options = RatioOptions::default();
    sweep_values(a_values, 0.0, 0.5)?
        .into_iter()
        .map(|a| {
            let r = ratio(&family::puncture_right(a)?, &family::puncture_left(a)?, origin(), 1.0, &options)?;
            Ok(SweepRow::from_report(a, &r))
        })
        .collect()
}

/// Rows for `𝔻∖[a, 1)`, `𝔻∖(−1, −a]` at `z = 0`, all exact.
pub fn sweep_slit(a_values: &[f64]) -> Result<Vec<SweepRow>> {
    let options = RatioOptions::default();
    sweep_values(a_values, 0.0, 1.0)?
        .into_iter()
        .map(|a| {
            let r = ratio(&family::slit_right(a)?, &family::slit_left(a)?, origin(), 1.0, &options)?;
            Ok(SweepRow::from_report(a, &r))
        })
        .collect()
}

/// One input to [`verify_lower_bound`].
#[derive(Debug, Clone, PartialEq)]
pub struct DomainPair {
    pub d1: DomainSpec,
    pub d2: DomainSpec,
    pub z: Complex,
    pub r: f64,
}

impl DomainPair {
    pub fn new(d1: DomainSpec, d2: DomainSpec, z: Complex, r: f64) -> Self {
        Self { d1, d2, z, r }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LowerBoundRow {
    pub pair: DomainPair,
    pub report: RatioReport,
    pub same_domain: bool,
    /// `Q ≥ 1/2 − tol`.
    pub at_least_half: bool,
    /// Equal domains: `|Q − 1/2| ≤ tol`. Distinct domains: `Q > 1/2 + margin`.
    pub equality_case: bool,
    /// `λ∩ ≥ max(λ₁, λ₂)`.
    pub dominates: bool,
}

impl LowerBoundRow {
    pub fn passed(&self) -> bool {
        self.at_least_half && self.equality_case && self.dominates
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LowerBoundReport {
    pub rows: Vec<LowerBoundRow>,
}

impl LowerBoundReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(LowerBoundRow::passed)
    }
}

/// Evaluates `Q ≥ 1/2` on each pair, with equality exactly when the two
/// domains coincide. Every density must be exact.
pub fn verify_lower_bound(pairs: &[DomainPair]) -> Result<LowerBoundReport> {
    let tol = Tolerances::DEFAULT;
    let options = RatioOptions::default();
    let mut rows = Vec::with_capacity(pairs.len());
    for pair in pairs {
        let report = ratio(&pair.d1, &pair.d2, pair.z, pair.r, &options)?;
        if report.lower_bound_mode {
            return Err(Error::precondition(format!(
                "{} ∩ {} only has a lower bound; the two-sided check needs exact densities",
                pair.d1, pair.d2
            )));
        }
        if !report.is_exact() {
            return Err(Error::precondition(format!(
                "{} and {} need the Fekete oracle; the check needs exact densities",
                pair.d1, pair.d2
            )));
        }
        let same_domain = pair.d1 == pair.d2;
        let q = report.q;
        let biggest = report.lambda1.value.max(report.lambda2.value);
        let equality_case = if same_domain {
            (q - 0.5).abs() <= tol.lower_bound_equality
        } else {
            q > 0.5 + tol.lower_bound_margin
        };
        rows.push(LowerBoundRow {
            pair: pair.clone(),
            at_least_half: q >= 0.5 - tol.lower_bound_equality,
            equality_case,
            dominates: report.lambda_cap.value >= biggest * (1.0 - tol.exact_identity),
            same_domain,
            report,
        });
    }
    Ok(LowerBoundReport { rows })
}

/// Evenly spread parameters in `(0, 1)`.
fn grid(count: usize) -> impl Iterator<Item = f64> {
    (1..=count).map(move |k| k as f64 / (count + 1) as f64)
}

/// 50 pairs of equal domains.
pub fn same_domain_pairs() -> Result<Vec<DomainPair>> {
    let mut pairs = Vec::new();
    for (k, a) in grid(20).enumerate() {
        let d = family::slit_right(a)?;
        pairs.push(DomainPair::new(d.clone(), d, origin(), 1.0));
        let p = family::punctured(Complex::from_polar(a, k as f64))?;
        pairs.push(DomainPair::new(p.clone(), p, origin(), 1.0));
    }
    for a in grid(10) {
        let z = Complex::new(0.0, 0.9 * a);
        let disk = DomainSpec::unit_disk();
        pairs.push(DomainPair::new(disk.clone(), disk, z, 1.0));
    }
    Ok(pairs)
}

/// 50 pairs of distinct slit domains with closed-form densities.
pub fn distinct_slit_pairs() -> Result<Vec<DomainPair>> {
    let mut pairs = Vec::new();
    for a in grid(20) {
        pairs.push(DomainPair::new(family::slit_right(a)?, family::slit_left(a)?, origin(), 1.0));
    }
    for a in grid(15) {
        pairs.push(DomainPair::new(family::slit_right(a)?, DomainSpec::unit_disk(), origin(), 1.0));
    }
    for a in grid(15) {
        let b = 0.5 * (1.0 + a);
        pairs.push(DomainPair::new(family::slit_right(a)?, family::slit_right(b)?, origin(), 1.0));
    }
    Ok(pairs)
}

/// The additive and product inequalities on `𝔻∖[a, 1)`, `𝔻∖(−1, −a]` at 0,
/// where `D₁ ∪ D₂ = 𝔻`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConjectureReport {
    pub a: f64,
    pub lambda1: f64,
    pub lambda2: f64,
    pub lambda_cap: f64,
    pub lambda_cup: f64,
    /// `λ∩ + λ∪`.
    pub additive_lhs: f64,
    /// `λ₁ + λ₂`.
    pub additive_rhs: f64,
    pub additive_slack: f64,
    /// `λ∩ · λ∪`.
    pub multiplicative_lhs: f64,
    /// `λ₁ · λ₂`.
    pub multiplicative_rhs: f64,
    pub multiplicative_slack: f64,
}

impl ConjectureReport {
    /// Additive inequality holds with equality up to `tol`.
    pub fn additive_equality(&self, tol: f64) -> bool {
        self.additive_slack.abs() <= tol
    }

    pub fn multiplicative_strict(&self) -> bool {
        self.multiplicative_slack > 0.0
    }
}

pub fn conjecture_check(a: f64) -> Result<ConjectureReport> {
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::domain(format!("a = {a} must lie in (0, 1)")));
    }
    let r = ratio(&family::slit_right(a)?, &family::slit_left(a)?, origin(), 1.0, &RatioOptions::default())?;
    let lambda_cup = r
        .lambda_cup
        .as_ref()
        .map(|v| v.value)
        .ok_or_else(|| Error::Numerical("the union of the slit pair should be the disk".into()))?;
    let (l1, l2, cap) = (r.lambda1.value, r.lambda2.value, r.lambda_cap.value);
    let additive_lhs = cap + lambda_cup;
    let additive_rhs = l1 + l2;
    let multiplicative_lhs = cap * lambda_cup;
    let multiplicative_rhs = l1 * l2;
    Ok(ConjectureReport {
        a,
        lambda1: l1,
        lambda2: l2,
        lambda_cap: cap,
        lambda_cup,
        additive_lhs,
        additive_rhs,
        additive_slack: additive_rhs - additive_lhs,
        multiplicative_lhs,
        multiplicative_rhs,
        multiplicative_slack: multiplicative_rhs - multiplicative_lhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::capacity::CapacityMethod;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn slit_pair_at_one_half() {
        let r = ratio(
            &family::slit_right(0.5).unwrap(),
            &family::slit_left(0.5).unwrap(),
            origin(),
            1.0,
            &RatioOptions::default(),
        )
        .unwrap();
        assert_eq!(r.lambda1.value, 1.125);
        assert_eq!(r.lambda2.value, 1.125);
        assert_eq!(r.lambda_cap.value, 1.25);
        assert_eq!(r.lambda_cup.as_ref().unwrap().value, 1.0);
        assert!((r.q - 5.0 / 9.0).abs() < 1e-15);
        assert!(!r.lower_bound_mode);
        assert_eq!(r.lambda_cap.method, DensityMethod::CapacityReduction(CapacityMethod::Joukowski));
    }

    #[test]
    fn equal_punctured_domains_give_one_half() {
        let d = family::puncture_right(0.3).unwrap();
        let r = ratio(&d, &d, origin(), 1.0, &RatioOptions::default()).unwrap();
        assert_eq!(r.q, 0.5);
    }

    #[test]
    fn punctured_pair_is_a_lower_bound() {
        let r = ratio(
            &family::puncture_right(0.1).unwrap(),
            &family::puncture_left(0.1).unwrap(),
            origin(),
            1.0,
            &RatioOptions::default(),
        )
        .unwrap();
        assert!(r.lower_bound_mode);
        // (m/0.1)/(2·0.99/(0.2 ln 10)) with m = Γ(3/4)⁴/π²
        let m = libm::pow(libm::tgamma(0.75), 4.0) / (core::f64::consts::PI * core::f64::consts::PI);
        let expected = (m / 0.1) / (2.0 * 0.99 / (0.2 * core::f64::consts::LN_10));
        assert!((r.q - expected).abs() < 1e-12);
        assert!((r.q - 0.531393).abs() < 1e-6);
    }

    #[test]
    fn off_centre_puncture_uses_the_automorphism() {
        // 𝔻∖{0.3} at z = 0.1: φ sends the puncture to (0.2)/(0.97).
        let d = family::puncture_right(0.3).unwrap();
        let v = density(&d, c(0.1, 0.0), &RatioOptions::default()).unwrap();
        let w = 0.2 / 0.97;
        let expected = one_puncture_value(w).unwrap() / 0.99;
        assert!((v.value - expected).abs() < 1e-14);
    }

    #[test]
    fn sweeps() {
        let rows = sweep_slit(&[0.01, 0.5, 0.1]).unwrap();
        assert_eq!(rows.iter().map(|r| r.a).collect::<Vec<_>>(), [0.5, 0.1, 0.01]);
        assert!((rows[2].q_or_bound - 0.980394).abs() < 1e-6);
        let rows = sweep_punctured(&[1e-3, 1e-6]).unwrap();
        assert!((rows[0].q_or_bound - 1.578239).abs() < 1e-6);
        assert!((rows[1].q_or_bound - 3.156475).abs() < 1e-6);
        assert!(rows.iter().all(|r| r.mode == SweepMode::LowerBound));
        assert!(sweep_punctured(&[0.5]).is_err());
        assert!(sweep_slit(&[0.5, 0.5]).is_err());
        assert!(sweep_slit(&[]).is_err());
    }

    #[test]
    fn conjecture_at_one_half() {
        let r = conjecture_check(0.5).unwrap();
        assert_eq!((r.additive_lhs, r.additive_rhs), (2.25, 2.25));
        assert_eq!(r.multiplicative_lhs, 1.25);
        assert_eq!(r.multiplicative_rhs, 1.265625);
        assert_eq!(r.multiplicative_slack, 0.015625);
        assert!(conjecture_check(1.0).is_err());
    }

    #[test]
    fn lower_bound_suite_passes() {
        let same = same_domain_pairs().unwrap();
        let distinct = distinct_slit_pairs().unwrap();
        assert_eq!((same.len(), distinct.len()), (50, 50));
        assert!(verify_lower_bound(&same).unwrap().passed());
        assert!(verify_lower_bound(&distinct).unwrap().passed());
    }

    #[test]
    fn lower_bound_rejects_one_sided_inputs() {
        let pair = DomainPair::new(
            family::puncture_right(0.1).unwrap(),
            family::puncture_left(0.1).unwrap(),
            origin(),
            1.0,
        );
        assert!(matches!(verify_lower_bound(&[pair]), Err(Error::Precondition(_))));
    }

    #[test]
    fn mixed_and_unsupported_routes() {
        let mixed = family::slit_right(0.5).unwrap().with_puncture(c(0.0, 0.3)).unwrap();
        assert!(matches!(density(&mixed, origin(), &RatioOptions::default()), Err(Error::Unsupported(_))));
        let far = family::puncture_right(0.7).unwrap().with_puncture(c(-0.7, 0.0)).unwrap();
        assert!(matches!(density(&far, origin(), &RatioOptions::default()), Err(Error::Unsupported(_))));
        let plane = DomainSpec::plane_minus(&[c(-1.0, 0.0), c(1.0, 0.0)]).unwrap();
        let v = density(&plane, origin(), &RatioOptions::default()).unwrap();
        assert_eq!(v.method, DensityMethod::Modular);
        assert!(ratio(&plane, &plane, c(0.5, 0.0), 1.0, &RatioOptions::default()).is_ok());
    }
}
