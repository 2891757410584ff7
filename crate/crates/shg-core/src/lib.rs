//! Exact computational algebra for finite discrete semihypergroups.
//!
//! A finite semihypergroup is an ordered set of elements together with an
//! n×n table assigning to each ordered pair `(x, y)` a probability vector,
//! the convolution `p_x * p_y` of the two point masses. The table extends
//! bilinearly to all rational measures and must be associative. Groups,
//! coset spaces `G/H`, double-coset spaces `G//H` and orbit spaces of
//! affine actions all carry this structure.
//!
//! Everything here is exact: all coefficients are arbitrary-precision
//! rationals and every identity is tested as an equality, never up to a
//! tolerance.
//!
//! The crate is organised along the theory it implements:
//!
//! * [`rational`], [`element`], [`measure`] — scalars, carriers, measures.
//! * [`semihypergroup`] — convolution tables, the axiom checker, and
//!   structural queries (commutativity, identity, involution).
//! * [`construct`] — builders: semigroup tables, a parametric three-element
//!   family, coset and double-coset spaces, orbit spaces, bundled fixtures.
//! * [`ideals`] — left/right ideals, minimality, kernel, and the
//!   kernel sandwich.
//! * [`homs`] — pushforward homomorphisms, images, ideal transport,
//!   exhaustive enumeration.
//! * [`means`] — translations, orbits of functions, invariant means (via an
//!   exact feasibility solver), introversion operators and Arens products.
//! * [`io`] — the `.shg`/`.group`/`.map` text formats.

// Error values here deliberately carry full diagnostics (offending
// measures, axiom reports); they are built on cold paths only.
#![allow(clippy::result_large_err)]

pub mod construct;
pub mod element;
pub mod homs;
pub mod ideals;
pub mod io;
pub mod means;
pub mod measure;
pub mod rational;
pub mod semihypergroup;

pub use element::{ElementSet, Subset};
pub use measure::Measure;
pub use rational::Rational;
pub use semihypergroup::{AxiomReport, ConvolutionTable, Semihypergroup};

/// A proved statement failed on validated input. This always indicates a bug
/// in this library or an input that silently violates a structural
/// assumption; it is never an ordinary user error.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("theorem violation: {0}")]
pub struct TheoremViolation(pub String);

/// Left/right side selector for translations, ideals and means.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}
