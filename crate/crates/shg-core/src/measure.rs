//! Rational measures on a finite carrier.
//!
//! A [`Measure`] is a vector of exact rational weights, one per element of
//! its carrier. Point masses are the unit vectors; probability measures are
//! the nonnegative measures of total mass one. Measures are immutable value
//! types; the carrier is shared by `Arc`.

use crate::element::{ElementSet, Subset};
use crate::rational::{render_rational, Rational};
use num_traits::Zero;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MeasureError {
    #[error("weight vector has length {got} but the carrier has {expected} elements")]
    LengthMismatch { expected: usize, got: usize },
    #[error("measures live on different carriers")]
    CarrierMismatch,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Measure {
    carrier: Arc<ElementSet>,
    weights: Vec<Rational>,
}

impl Measure {
    pub fn new(carrier: Arc<ElementSet>, weights: Vec<Rational>) -> Result<Self, MeasureError> {
        if weights.len() != carrier.len() {
            return Err(MeasureError::LengthMismatch {
                expected: carrier.len(),
                got: weights.len(),
            });
        }
        Ok(Measure { carrier, weights })
    }

    pub fn zero(carrier: Arc<ElementSet>) -> Self {
        let n = carrier.len();
        Measure {
            carrier,
            weights: vec![Rational::zero(); n],
        }
    }

    /// The Dirac measure `p_x`.
    pub fn point_mass(carrier: Arc<ElementSet>, x: usize) -> Self {
        assert!(x < carrier.len());
        let mut m = Measure::zero(carrier);
        m.weights[x] = Rational::from_integer(1.into());
        m
    }

    pub fn carrier(&self) -> &Arc<ElementSet> {
        &self.carrier
    }

    pub fn same_carrier(&self, other: &Measure) -> bool {
        Arc::ptr_eq(&self.carrier, &other.carrier) || self.carrier == other.carrier
    }

    pub fn weight(&self, x: usize) -> &Rational {
        &self.weights[x]
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn mass(&self) -> Rational {
        self.weights.iter().fold(Rational::zero(), |acc, w| acc + w)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.weights.iter().all(|w| !w.is_negative())
    }

    /// Probability measure: nonnegative weights of total mass exactly one.
    pub fn is_probability(&self) -> bool {
        use num_traits::One;
        self.is_nonnegative() && self.mass().is_one()
    }

    pub fn support(&self) -> Subset {
        Subset::from_indices(
            self.carrier.len(),
            self.weights
                .iter()
                .enumerate()
                .filter(|(_, w)| !w.is_zero())
                .map(|(i, _)| i),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.weights.iter().all(Zero::is_zero)
    }

    pub fn scaled(&self, c: &Rational) -> Measure {
        Measure {
            carrier: Arc::clone(&self.carrier),
            weights: self.weights.iter().map(|w| w * c).collect(),
        }
    }

    pub fn plus(&self, other: &Measure) -> Result<Measure, MeasureError> {
        if !self.same_carrier(other) {
            return Err(MeasureError::CarrierMismatch);
        }
        Ok(Measure {
            carrier: Arc::clone(&self.carrier),
            weights: self
                .weights
                .iter()
                .zip(&other.weights)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// In-place `self += c · other`. Used by the convolution inner loops.
    pub(crate) fn add_scaled_assign(&mut self, c: &Rational, other: &Measure) {
        for (a, b) in self.weights.iter_mut().zip(&other.weights) {
            if !b.is_zero() {
                *a += b * c;
            }
        }
    }

    /// Renders as a term sum, e.g. `1/2 a + 1/2 b`; the zero measure renders
    /// as `0`. Unit coefficients are omitted.
    pub fn render(&self) -> String {
        use num_traits::One;
        let mut parts = Vec::new();
        for (i, w) in self.weights.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            if w.is_one() {
                parts.push(self.carrier.name(i).to_string());
            } else {
                parts.push(format!("{} {}", render_rational(w), self.carrier.name(i)));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

trait IsNegative {
    fn is_negative(&self) -> bool;
}

impl IsNegative for Rational {
    fn is_negative(&self) -> bool {
        use num_traits::Signed;
        Signed::is_negative(self)
    }
}

impl fmt::Debug for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Measure({})", self.render())
    }
}
