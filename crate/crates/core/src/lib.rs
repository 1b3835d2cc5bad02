//! Hyperbolic densities, logarithmic capacities and the additive
//! intersection ratio
//!
//! ```text
//! Q(D1, D2; z) = λ_{D1∩D2}(z) / (λ_{D1}(z) + λ_{D2}(z))
//! ```
//!
//! for explicit families of plane domains: scaled disks with punctures or
//! radial slits, and punctured planes. Densities use the normalization
//! `λ_𝔻(z) = 1/(1 − |z|²)`.
//!
//! The crate is `no_std` (it needs `alloc`). File formats, reports and the
//! command-line front end live in the `hyperlam` crate.
//!
//! Module map:
//!
//! - [`geometry`]: Möbius maps, disk automorphisms, the Joukowski pair.
//! - [`density`]: closed-form densities and the elliptic-modular evaluation
//!   of the thrice-punctured sphere.
//! - [`capacity`]: exact capacities, Murai subadditivity and the
//!   transfinite-diameter (Fekete) oracle.
//! - [`domain`]: the domain language, inversion of complements and
//!   normalization of a base point to the origin.
//! - [`ratio`]: `Q`, the extremal sweeps and the verification suites.

#![no_std]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod capacity;
pub mod density;
pub mod domain;
mod error;
pub mod geometry;
pub mod ratio;
pub mod tolerance;

pub use error::{Error, Result};
pub use geometry::Complex;
