//! Effective cones, the interpolation criterion, and moving curves.
//!
//! For `mu >= 3` the Picard group of `N(mu, chi)` has rank two. We work in
//! the basis `(L0, L1)` of line bundles attached to the orthogonal classes
//! `u0`, `u1` of [`crate::kclass::orthogonal_basis`]: a divisor class is the
//! pair of its coordinates, and cones are recorded by their two extremal
//! rays in primitive integer form.
//!
//! The first effective ray is always `[1, 0]` (the locus of sheaves meeting
//! a fixed point of the plane). The second is `[(mu - chi)/delta, -1]` up to
//! scale; it is *proven* extremal exactly when the interpolation criterion
//! below succeeds for `alpha = (mu - chi)/mu`, and reported with status
//! `unknown` otherwise.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::kclass::{decompose_in_cperp, orthogonal_basis, ChernCharacter};
use crate::moduli::ModuliSpace;
use crate::rational::{int, rat, serde_str, Rational};
use crate::{Error, Result};

/// A divisor class `l0 * L0 + l1 * L1` in the two-ray basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PicardClass {
    #[serde(serialize_with = "serde_str::serialize")]
    pub l0: Rational,
    #[serde(serialize_with = "serde_str::serialize")]
    pub l1: Rational,
}

/// Whether the second extremal ray of a cone is certified or only bounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConeStatus {
    Proven,
    Unknown,
}

/// A two-dimensional cone spanned by primitive integer rays in the
/// `(L0, L1)` basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone2 {
    pub ray_a: [i64; 2],
    pub ray_b: [i64; 2],
    pub status: ConeStatus,
}

impl Serialize for Cone2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut state = serializer.serialize_struct("Cone2", 2)?;
        state.serialize_field("rays", &[self.ray_a, self.ray_b])?;
        state.serialize_field(
            "status",
            match self.status {
                ConeStatus::Proven => "proven",
                ConeStatus::Unknown => "unknown",
            },
        )?;
        state.end()
    }
}

/// Scales a rational direction to a primitive integer vector, preserving
/// orientation. The zero vector maps to `[0, 0]`.
pub(crate) fn primitive_ray(x: &Rational, y: &Rational) -> [i64; 2] {
    let common = Rational::from_integer(num_integer::lcm(
        x.denom().clone(),
        y.denom().clone(),
    ));
    let xi = (x * &common).to_integer();
    let yi = (y * &common).to_integer();
    let content = num_integer::gcd(xi.clone(), yi.clone());
    let reduce = |v: BigInt| -> i64 {
        let r = if content.is_zero() { v } else { v / &content };
        r.to_i64().expect("primitive ray coordinate exceeds i64")
    };
    [reduce(xi), reduce(yi)]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InterpolationReason {
    AboveGoldenRatio,
    FibonacciRatio,
    Fails,
}

/// Outcome of the interpolation criterion at a slope ratio `alpha`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InterpolationVerdict {
    #[serde(serialize_with = "serde_str::serialize")]
    pub alpha: Rational,
    pub passes: bool,
    pub reason: InterpolationReason,
}

fn is_consecutive_fibonacci_ratio(alpha: &Rational) -> bool {
    // alpha is reduced, and consecutive Fibonacci numbers are coprime, so
    // comparing numerator and denominator against the raw pairs is exact.
    let (p, q) = (alpha.numer(), alpha.denom());
    let (mut f0, mut f1) = (BigInt::from(0), BigInt::from(1));
    loop {
        if &f0 == p && &f1 == q {
            return true;
        }
        if &f1 > q {
            return false;
        }
        let next = &f0 + &f1;
        f0 = std::mem::replace(&mut f1, next);
    }
}

/// The interpolation criterion for a nonnegative ratio `alpha`: passes when
/// `alpha^2 + alpha - 1 > 0` (i.e. `alpha` exceeds the inverse golden
/// ratio), or when `alpha` is a ratio `F_j / F_(j+1)` of consecutive
/// Fibonacci numbers. The golden-ratio excess of a rational is never zero,
/// so the two reasons are mutually exclusive and checked in that order.
pub fn interpolation_for_alpha(alpha: &Rational) -> InterpolationVerdict {
    let golden_excess = alpha * alpha + alpha - int(1);
    let (passes, reason) = if alpha.is_negative() {
        (false, InterpolationReason::Fails)
    } else if golden_excess.is_positive() {
        (true, InterpolationReason::AboveGoldenRatio)
    } else if is_consecutive_fibonacci_ratio(alpha) {
        (true, InterpolationReason::FibonacciRatio)
    } else {
        (false, InterpolationReason::Fails)
    };
    InterpolationVerdict {
        alpha: alpha.clone(),
        passes,
        reason,
    }
}

/// The interpolation criterion of the space, at `alpha = (mu - chi)/mu`.
/// Requires `chi` normalized.
pub fn interpolation_check(space: &ModuliSpace) -> Result<InterpolationVerdict> {
    crate::moduli::require_normalized(space)?;
    Ok(interpolation_for_alpha(&rat(
        space.mu() - space.chi(),
        space.mu(),
    )))
}

/// The Chern character of the rank `k * mu` interpolating bundle,
/// `k(2mu - chi) O(mu - 1) - k(mu - chi) O(mu - 2)` twisted back by `-mu`.
/// It has Euler characteristic zero and pairs to zero with the sheaf class.
/// Requires `chi` normalized and `k >= 1`.
pub fn interpolation_bundle_class(space: &ModuliSpace, k: i64) -> Result<ChernCharacter> {
    crate::moduli::require_normalized(space)?;
    if k < 1 {
        return Err(Error::Invalid(format!("bundle multiplicity must be >= 1, got {k}")));
    }
    let (mu, chi) = (space.mu(), space.chi());
    let presented = &ChernCharacter::structure_sheaf_twist(mu - 1).scale(k * (2 * mu - chi))
        - &ChernCharacter::structure_sheaf_twist(mu - 2).scale(k * (mu - chi));
    Ok(presented.twist(-mu))
}

/// Coordinates in the `(L0, L1)` basis of the determinant line bundle
/// induced by a class `e` orthogonal to the sheaf class. Errors with
/// [`Error::NotOrthogonal`] when `<e, c> != 0`.
pub fn determinant_divisor_class(e: &ChernCharacter, space: &ModuliSpace) -> Result<PicardClass> {
    if space.mu() < 3 {
        return Err(Error::NotApplicable(space.mu()));
    }
    if !e.tor_pairing(&space.sheaf_class()).is_zero() {
        return Err(Error::NotOrthogonal);
    }
    let basis = orthogonal_basis(space.mu(), space.chi())?;
    let coords = decompose_in_cperp(e, &basis).map_err(|_| {
        Error::InternalInvariant("Tor-orthogonal class failed to decompose in the basis".into())
    })?;
    Ok(PicardClass {
        l0: coords.alpha,
        l1: coords.beta,
    })
}

/// The effective cone of the space, computed on the normalized
/// representative (the cone is an isomorphism invariant, and its
/// coordinates refer to the basis of the normalized parameters).
/// Requires `mu >= 3`.
pub fn effective_cone(space: &ModuliSpace) -> Result<Cone2> {
    if space.mu() < 3 {
        return Err(Error::NotApplicable(space.mu()));
    }
    let norm = space.normalized();
    let ray_b = primitive_ray(&int(norm.mu() - norm.chi()), &int(-norm.delta()));
    let status = if interpolation_check(&norm)?.passes {
        ConeStatus::Proven
    } else {
        ConeStatus::Unknown
    };
    Ok(Cone2 {
        ray_a: [1, 0],
        ray_b,
        status,
    })
}

/// A moving curve in the Hilbert-scheme model: the strict transform data on
/// the blowup of the plane in `total_exceptional` points, with `ones`
/// exceptional coefficients equal to `+1`, `minus_ones` equal to `-1`, the
/// rest zero, and hyperplane coefficient `b_coeff`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MovingCurve {
    pub ones: i64,
    pub minus_ones: i64,
    pub b_coeff: i64,
    pub total_exceptional: i64,
}

/// The moving curve certifying the second effective boundary ray.
/// For `chi > 0` it uses `chi + mu(mu-3)/2` coefficients `+1`; for
/// `chi = 0` it uses `(mu-1)(mu-2)/2` coefficients `+1` and a single `-1`.
/// Requires `mu >= 3` and `chi` normalized.
pub fn moving_curve(space: &ModuliSpace) -> Result<MovingCurve> {
    if space.mu() < 3 {
        return Err(Error::NotApplicable(space.mu()));
    }
    crate::moduli::require_normalized(space)?;
    let (mu, chi) = (space.mu(), space.chi());
    let (ones, minus_ones) = if chi > 0 {
        (chi + mu * (mu - 3) / 2, 0)
    } else {
        ((mu - 1) * (mu - 2) / 2, 1)
    };
    Ok(MovingCurve {
        ones,
        minus_ones,
        b_coeff: 0,
        total_exceptional: mu * mu,
    })
}

/// The numerical data of a vector bundle on the plane entering the
/// curve-divisor pairing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleNumerics {
    pub chi: Rational,
    pub rank: i64,
    pub ch1: i64,
}

/// Degree of the divisor induced by `bundle` on the moving curve:
///
/// `C . D = -( chi(E) + rk(E) * (S/2 + b(b+3)/2) + b * ch1(E)/rk(E) )`
///
/// where `S` is the sum of `a_i - a_i^2` over the exceptional coefficients
/// and `b` the hyperplane coefficient. Note the final term divides the
/// first Chern number by the rank; every curve produced by [`moving_curve`]
/// has `b_coeff = 0`, so that term vanishes for all inputs built here.
pub fn curve_divisor_pairing(curve: &MovingCurve, bundle: &BundleNumerics) -> Result<Rational> {
    if bundle.rank == 0 {
        return Err(Error::ZeroRank);
    }
    let b = curve.b_coeff;
    // +1 coefficients contribute a - a^2 = 0; -1 coefficients contribute -2.
    let half_sum = int(-curve.minus_ones);
    let inner = &bundle.chi
        + int(bundle.rank) * (half_sum + rat(b * (b + 3), 2))
        + int(b) * rat(bundle.ch1, bundle.rank);
    Ok(-inner)
}

/// Pairing of the certifying curve against the basis divisors:
/// `(C . L0, C . L1) = (1, (mu - chi)/delta)`. By construction this vector
/// pairs to zero with the reported second effective ray. Requires
/// `mu >= 3` and `chi` normalized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvePairing {
    pub c_dot_l0: Rational,
    pub c_dot_l1: Rational,
}

pub fn curve_basis_pairing(space: &ModuliSpace) -> Result<CurvePairing> {
    if space.mu() < 3 {
        return Err(Error::NotApplicable(space.mu()));
    }
    crate::moduli::require_normalized(space)?;
    Ok(CurvePairing {
        c_dot_l0: int(1),
        c_dot_l1: rat(space.mu() - space.chi(), space.delta()),
    })
}
