use num_complex::Complex64;

use crate::{Error, Result};

/// Tolerance on |omega| - 1 accepted at construction.
pub const UNIT_TOL: f64 = 1e-9;

/// An element of the complex unit circle: the label of a vertex-edge
/// incidence. The absent incidence (value 0 in the phase function) is
/// represented by the absence of an entry, never by a `Phase`.
///
/// Stored values are renormalized to exact floating unit modulus at
/// construction, so `inv` and complex conjugation coincide.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Phase(Complex64);

impl Phase {
    pub const ONE: Phase = Phase(Complex64::new(1.0, 0.0));
    pub const I: Phase = Phase(Complex64::new(0.0, 1.0));
    pub const MINUS_ONE: Phase = Phase(Complex64::new(-1.0, 0.0));

    pub fn new(re: f64, im: f64) -> Result<Phase> {
        let modulus = re.hypot(im);
        if (modulus - 1.0).abs() > UNIT_TOL {
            return Err(Error::NonUnitPhase { modulus });
        }
        // values already at unit modulus (up to a few ulp) are stored
        // bit-exactly so serialization round-trips are the identity
        if (modulus - 1.0).abs() <= 1e-15 {
            Ok(Phase(Complex64::new(re, im)))
        } else {
            Ok(Phase(Complex64::new(re / modulus, im / modulus)))
        }
    }

    pub fn from_angle(theta: f64) -> Phase {
        Phase(Complex64::new(theta.cos(), theta.sin()))
    }

    /// k-th root of unity e^{2 pi i j / k}. Exact values for j = 0 and the
    /// half turn, so k = 2 produces the literal +1 / -1 of oriented
    /// hypergraphs.
    pub fn root_of_unity(j: u32, k: u32) -> Phase {
        let j = j % k;
        if j == 0 {
            Phase::ONE
        } else if 2 * j == k {
            Phase::MINUS_ONE
        } else {
            Phase::from_angle(2.0 * std::f64::consts::PI * f64::from(j) / f64::from(k))
        }
    }

    pub fn value(self) -> Complex64 {
        self.0
    }

    pub fn re(self) -> f64 {
        self.0.re
    }

    pub fn im(self) -> f64 {
        self.0.im
    }

    /// The group inverse; equals the complex conjugate on the unit circle.
    pub fn inv(self) -> Phase {
        Phase(self.0.conj())
    }

    pub fn mul(self, other: Phase) -> Phase {
        let p = self.0 * other.0;
        // renormalize so long products stay on the circle
        let norm = p.norm();
        if (norm - 1.0).abs() <= 1e-15 {
            Phase(p)
        } else {
            Phase(p / norm)
        }
    }

    pub fn dist(self, other: Phase) -> f64 {
        (self.0 - other.0).norm()
    }
}
