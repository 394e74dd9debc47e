//! Chern characters on the projective plane and the Tor pairing.
//!
//! A class in the Grothendieck group of the plane is recorded by its Chern
//! character `(ch0, ch1, ch2)`: the rank, the degree, and a rational with
//! `2 * ch2` integral. Integrality of twice `ch2` holds for the character of
//! every coherent sheaf and is preserved by sums, twists, and duals, so the
//! constructor enforces it.

use std::ops::{Add, Neg, Sub};

use serde::Serialize;

use crate::rational::{int, rat, serde_str, Rational};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ChernCharacter {
    ch0: i64,
    ch1: i64,
    #[serde(serialize_with = "serde_str::serialize")]
    ch2: Rational,
}

impl ChernCharacter {
    /// Builds a character directly. Panics unless `2 * ch2` is an integer;
    /// use the named constructors for the common sheaf classes.
    pub fn new(ch0: i64, ch1: i64, ch2: Rational) -> Self {
        assert!(
            (&ch2 * int(2)).is_integer(),
            "ch2 must be half-integral, got {ch2}"
        );
        ChernCharacter { ch0, ch1, ch2 }
    }

    pub fn ch0(&self) -> i64 {
        self.ch0
    }

    pub fn ch1(&self) -> i64 {
        self.ch1
    }

    pub fn ch2(&self) -> &Rational {
        &self.ch2
    }

    pub fn zero() -> Self {
        ChernCharacter::new(0, 0, int(0))
    }

    /// `O(k)`, the twisted structure sheaf of the plane: `(1, k, k^2/2)`.
    pub fn structure_sheaf_twist(k: i64) -> Self {
        ChernCharacter::new(1, k, int(k) * rat(k, 2))
    }

    /// `O_L(k)` for a line `L`: `(0, 1, k - 1/2)`.
    pub fn line_class(k: i64) -> Self {
        ChernCharacter::new(0, 1, int(k) - rat(1, 2))
    }

    /// The skyscraper class of a point: `(0, 0, 1)`.
    pub fn point_class() -> Self {
        ChernCharacter::new(0, 0, int(1))
    }

    /// `I_W(k)`, the ideal sheaf of `n` points twisted by `O(k)`:
    /// `(1, k, k^2/2 - n)`.
    pub fn ideal_twist(k: i64, n: u64) -> Self {
        ChernCharacter::new(1, k, int(k) * rat(k, 2) - int(n as i64))
    }

    /// The class of a one-dimensional sheaf with support degree `mu >= 1`
    /// and Euler characteristic `chi`: `(0, mu, chi - 3*mu/2)`.
    pub fn one_dimensional(mu: i64, chi: i64) -> Result<Self> {
        if mu < 1 {
            return Err(Error::InvalidMu(mu));
        }
        Ok(ChernCharacter::new(0, mu, int(chi) - rat(3 * mu, 2)))
    }

    /// True when the class has the shape of a one-dimensional sheaf:
    /// zero rank and positive degree.
    pub fn is_one_dimensional(&self) -> bool {
        self.ch0 == 0 && self.ch1 > 0
    }

    /// Tensoring by `O(k)`:
    /// `(ch0, ch1 + k*ch0, ch2 + k*ch1 + (k^2/2)*ch0)`.
    pub fn twist(&self, k: i64) -> Self {
        let shift = int(k) * int(self.ch1) + int(k) * rat(k, 2) * int(self.ch0);
        ChernCharacter::new(self.ch0, self.ch1 + k * self.ch0, &self.ch2 + shift)
    }

    /// The derived dual `(ch0, -ch1, ch2)`.
    pub fn dual(&self) -> Self {
        ChernCharacter::new(self.ch0, -self.ch1, self.ch2.clone())
    }

    /// Euler characteristic on the plane: `ch2 + (3/2) ch1 + ch0`.
    pub fn euler_characteristic(&self) -> Rational {
        &self.ch2 + rat(3 * self.ch1, 2) + int(self.ch0)
    }

    /// The symmetric Tor pairing
    /// `<x, y> = x0 y2 + x1 y1 + x2 y0 + (3/2)(x0 y1 + x1 y0) + x0 y0`.
    ///
    /// For a one-dimensional `y` with degree `mu` and Euler characteristic
    /// `chi` this collapses to `x0 * chi + x1 * mu`.
    pub fn tor_pairing(&self, other: &Self) -> Rational {
        let cross = int(self.ch0) * &other.ch2
            + int(self.ch1 * other.ch1)
            + &self.ch2 * int(other.ch0);
        cross + rat(3 * (self.ch0 * other.ch1 + self.ch1 * other.ch0), 2)
            + int(self.ch0 * other.ch0)
    }

    /// Integer multiple of a class.
    pub fn scale(&self, k: i64) -> Self {
        ChernCharacter::new(self.ch0 * k, self.ch1 * k, &self.ch2 * int(k))
    }
}

impl Add for &ChernCharacter {
    type Output = ChernCharacter;
    fn add(self, rhs: &ChernCharacter) -> ChernCharacter {
        ChernCharacter::new(self.ch0 + rhs.ch0, self.ch1 + rhs.ch1, &self.ch2 + &rhs.ch2)
    }
}

impl Sub for &ChernCharacter {
    type Output = ChernCharacter;
    fn sub(self, rhs: &ChernCharacter) -> ChernCharacter {
        ChernCharacter::new(self.ch0 - rhs.ch0, self.ch1 - rhs.ch1, &self.ch2 - &rhs.ch2)
    }
}

impl Neg for &ChernCharacter {
    type Output = ChernCharacter;
    fn neg(self) -> ChernCharacter {
        self.scale(-1)
    }
}

/// Basis of the rank-two sublattice Tor-orthogonal to the class of a
/// one-dimensional sheaf with invariants `(mu, chi)`, valid for `mu >= 3`.
///
/// * `u0 = (0, 0, -1)`, minus a point;
/// * `u1 = (1/delta) * (-mu, chi, -chi/2)` where `delta = gcd(mu, chi)`.
///
/// Both are genuine (half-integral) characters: `2 * ch2(u1) = -chi/delta`
/// is an integer because `delta` divides `chi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalBasis {
    mu: i64,
    chi: i64,
    delta: i64,
    u0: ChernCharacter,
    u1: ChernCharacter,
}

pub fn orthogonal_basis(mu: i64, chi: i64) -> Result<OrthogonalBasis> {
    if mu < 3 {
        return Err(Error::NotApplicable(mu));
    }
    let delta = num_integer::gcd(mu, chi);
    let u0 = ChernCharacter::new(0, 0, int(-1));
    let u1 = ChernCharacter::new(-mu / delta, chi / delta, rat(-chi, 2 * delta));
    Ok(OrthogonalBasis {
        mu,
        chi,
        delta,
        u0,
        u1,
    })
}

impl OrthogonalBasis {
    pub fn mu(&self) -> i64 {
        self.mu
    }

    pub fn chi(&self) -> i64 {
        self.chi
    }

    pub fn delta(&self) -> i64 {
        self.delta
    }

    pub fn u0(&self) -> &ChernCharacter {
        &self.u0
    }

    pub fn u1(&self) -> &ChernCharacter {
        &self.u1
    }

    /// The rational combination `alpha * u0 + beta * u1` as a raw triple
    /// (it need not be half-integral for non-integer coefficients).
    pub fn combination(&self, alpha: &Rational, beta: &Rational) -> (Rational, Rational, Rational) {
        let scale = |c: &ChernCharacter, w: &Rational| {
            (
                int(c.ch0) * w,
                int(c.ch1) * w,
                &c.ch2 * w,
            )
        };
        let (a0, a1, a2) = scale(&self.u0, alpha);
        let (b0, b1, b2) = scale(&self.u1, beta);
        (a0 + b0, a1 + b1, a2 + b2)
    }
}

/// Coordinates of a class in an [`OrthogonalBasis`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CperpCoordinates {
    pub alpha: Rational,
    pub beta: Rational,
}

/// Writes `x = alpha * u0 + beta * u1` when possible.
///
/// From the shape of the basis, `beta = -delta * ch0(x) / mu` and
/// `alpha = -ch2(x) - beta * chi / (2 * delta)`; the class lies in the span
/// exactly when the remaining component matches, i.e.
/// `ch1(x) = beta * chi / delta`. Otherwise this returns
/// [`Error::NotInSpan`].
pub fn decompose_in_cperp(x: &ChernCharacter, basis: &OrthogonalBasis) -> Result<CperpCoordinates> {
    let delta = int(basis.delta);
    let beta = -&delta * rat(x.ch0, basis.mu);
    if int(x.ch1) != &beta * rat(basis.chi, basis.delta) {
        return Err(Error::NotInSpan);
    }
    let alpha = -&x.ch2 - &beta * rat(basis.chi, 2 * basis.delta);
    Ok(CperpCoordinates { alpha, beta })
}
