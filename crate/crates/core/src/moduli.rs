//! Per-space invariants of the moduli spaces `N(mu, chi)` and their coarse
//! classification up to isomorphism.
//!
//! Every space carries a small set of derived integers that the rest of the
//! crate keys on:
//!
//! * `delta = gcd(mu, chi)` (with `gcd(mu, 0) = mu`);
//! * `d = chi - 3*mu/2`, the second Chern character of the sheaf class;
//! * `a = chi + mu*(mu - 3)/2`, an integer rewriting of `d + mu^2/2`;
//! * the division `a = b*mu + epsilon` with `epsilon` in `[-mu/2, mu/2)`,
//!   which controls the largest destabilizing wall;
//! * `chi_normalized`, the distinguished representative of `chi` under the
//!   symmetries `chi -> chi + mu` and `chi -> -chi`, chosen so that
//!   `0 <= 2*chi_normalized <= mu`.

use crate::cones::PicardClass;
use crate::kclass::ChernCharacter;
use crate::rational::{int, rat, Rational};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuliSpace {
    mu: i64,
    chi: i64,
    delta: i64,
    a: i64,
    b: i64,
    epsilon: i64,
    chi_normalized: i64,
}

impl ModuliSpace {
    pub fn new(mu: i64, chi: i64) -> Result<Self> {
        if mu < 1 {
            return Err(Error::InvalidMu(mu));
        }
        let delta = num_integer::gcd(mu, chi);
        // mu*(mu - 3) is even, so the division below is exact.
        let a = chi + mu * (mu - 3) / 2;
        // Floor division puts epsilon = a - b*mu in [-mu/2, mu/2).
        let b = (2 * a + mu).div_euclid(2 * mu);
        let epsilon = a - b * mu;
        let r = chi.rem_euclid(mu);
        let chi_normalized = r.min(mu - r);
        Ok(ModuliSpace {
            mu,
            chi,
            delta,
            a,
            b,
            epsilon,
            chi_normalized,
        })
    }

    pub fn mu(&self) -> i64 {
        self.mu
    }

    pub fn chi(&self) -> i64 {
        self.chi
    }

    /// `gcd(mu, chi)`, the divisibility of the sheaf class.
    pub fn delta(&self) -> i64 {
        self.delta
    }

    /// `ch2` of the sheaf class: `chi - 3*mu/2`.
    pub fn d(&self) -> Rational {
        int(self.chi) - rat(3 * self.mu, 2)
    }

    /// `a = chi + mu*(mu - 3)/2`.
    pub fn a(&self) -> i64 {
        self.a
    }

    /// Quotient in `a = b*mu + epsilon`.
    pub fn b(&self) -> i64 {
        self.b
    }

    /// Remainder in `a = b*mu + epsilon`, normalized to `[-mu/2, mu/2)`.
    pub fn epsilon(&self) -> i64 {
        self.epsilon
    }

    pub fn chi_normalized(&self) -> i64 {
        self.chi_normalized
    }

    /// `mu^2 + 1`.
    pub fn dimension(&self) -> i64 {
        self.mu * self.mu + 1
    }

    /// The Chern character `(0, mu, chi - 3*mu/2)` of the parametrized sheaves.
    pub fn sheaf_class(&self) -> ChernCharacter {
        ChernCharacter::one_dimensional(self.mu, self.chi)
            .expect("mu >= 1 is enforced at construction")
    }

    pub fn is_normalized(&self) -> bool {
        self.chi == self.chi_normalized
    }

    /// The isomorphic space with `chi` replaced by its normalized
    /// representative.
    pub fn normalized(&self) -> ModuliSpace {
        ModuliSpace::new(self.mu, self.chi_normalized)
            .expect("normalizing preserves mu")
    }
}

/// One step of the normalization walk: tensoring the parametrized sheaves by
/// `O(1)` or `O(-1)` (shifting `chi` by `mu`), or dualizing (negating `chi`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    Twist(i64),
    Dualize,
}

/// Applies a normalization walk to `chi`.
pub fn apply_moves(mu: i64, chi: i64, moves: &[Move]) -> i64 {
    moves.iter().fold(chi, |c, m| match m {
        Move::Twist(t) => c + t * mu,
        Move::Dualize => -c,
    })
}

/// Computes the normalized representative of `chi` together with a shortest
/// move sequence realizing it, twists first and at most one final
/// dualization. When both the twist-only route and the dualizing route reach
/// the representative, the twist-only route is returned.
pub fn normalize_chi(mu: i64, chi: i64) -> Result<(i64, Vec<Move>)> {
    if mu < 1 {
        return Err(Error::InvalidMu(mu));
    }
    let r = chi.rem_euclid(mu);
    let target = r.min(mu - r);
    let mut moves = Vec::new();
    let push_twists = |moves: &mut Vec<Move>, k: i64| {
        for _ in 0..k.abs() {
            moves.push(Move::Twist(k.signum()));
        }
    };
    if (chi - target).rem_euclid(mu) == 0 {
        push_twists(&mut moves, (target - chi) / mu);
    } else {
        push_twists(&mut moves, (-target - chi) / mu);
        moves.push(Move::Dualize);
    }
    debug_assert_eq!(apply_moves(mu, chi, &moves), target);
    Ok((target, moves))
}

/// The canonical divisor class `(-3*mu) * L0` in the two-ray basis.
/// Requires Picard rank two, i.e. `mu >= 3`.
pub fn canonical_class(space: &ModuliSpace) -> Result<PicardClass> {
    if space.mu < 3 {
        return Err(Error::NotApplicable(space.mu));
    }
    Ok(PicardClass {
        l0: int(-3 * space.mu),
        l1: int(0),
    })
}

/// One summand `mult * O(twist)` in a resolution.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ResolutionTerm {
    pub twist: i64,
    pub mult: i64,
}

/// A two-step resolution `0 -> relations -> generators -> F -> 0` by direct
/// sums of line bundles. Terms with multiplicity zero are omitted.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ResolutionData {
    pub generators: Vec<ResolutionTerm>,
    pub relations: Vec<ResolutionTerm>,
}

impl ResolutionData {
    fn sum(terms: &[ResolutionTerm]) -> ChernCharacter {
        terms.iter().fold(ChernCharacter::zero(), |acc, t| {
            &acc + &ChernCharacter::structure_sheaf_twist(t.twist).scale(t.mult)
        })
    }

    /// The Chern character of the resolved sheaf (generators minus
    /// relations).
    pub fn chern(&self) -> ChernCharacter {
        &Self::sum(&self.generators) - &Self::sum(&self.relations)
    }

    pub fn euler_characteristic(&self) -> Rational {
        self.chern().euler_characteristic()
    }
}

fn terms(parts: &[(i64, i64)]) -> Vec<ResolutionTerm> {
    parts
        .iter()
        .filter(|(_, mult)| *mult != 0)
        .map(|&(twist, mult)| ResolutionTerm { twist, mult })
        .collect()
}

pub(crate) fn require_normalized(space: &ModuliSpace) -> Result<()> {
    if 2 * space.chi < 0 || 2 * space.chi > space.mu {
        return Err(Error::NotNormalized {
            mu: space.mu,
            chi: space.chi,
        });
    }
    Ok(())
}

/// The resolution of a generic sheaf of the space,
/// `0 -> (mu-chi) O(-2) -> chi O(0) + (mu-2chi) O(-1) -> F -> 0`.
/// Requires `chi` normalized.
pub fn generic_resolution(space: &ModuliSpace) -> Result<ResolutionData> {
    require_normalized(space)?;
    let (mu, chi) = (space.mu, space.chi);
    Ok(ResolutionData {
        generators: terms(&[(0, chi), (-1, mu - 2 * chi)]),
        relations: terms(&[(-2, mu - chi)]),
    })
}

/// The companion rank-one resolution
/// `0 -> (mu-chi) O(-2) -> (chi+1) O(0) + (mu-2chi) O(-1) -> I -> 0`,
/// presenting a twisted ideal sheaf `I = I_Z(mu)` with
/// `chi(I) = chi + 1` and `|Z|` given by [`companion_hilbert_points`].
/// Requires `chi` normalized.
pub fn ideal_resolution(space: &ModuliSpace) -> Result<ResolutionData> {
    require_normalized(space)?;
    let (mu, chi) = (space.mu, space.chi);
    Ok(ResolutionData {
        generators: terms(&[(0, chi + 1), (-1, mu - 2 * chi)]),
        relations: terms(&[(-2, mu - chi)]),
    })
}

/// The number of points of the Hilbert scheme companion to the space:
/// `binomial(mu+1, 2) + mu - chi`. Requires `chi` normalized.
pub fn companion_hilbert_points(space: &ModuliSpace) -> Result<i64> {
    require_normalized(space)?;
    Ok(space.mu * (space.mu + 1) / 2 + space.mu - space.chi)
}

/// Why two spaces are, or are not, isomorphic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    Isomorphic(IsoReason),
    NotIsomorphic(NotIsoReason),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoReason {
    /// `mu <= 2`: every `chi` gives the same space.
    SmallMu,
    /// `chi` values agree mod `mu`; twisting identifies the spaces.
    TwistCongruent,
    /// `chi` values are opposite mod `mu`; duality (after twists)
    /// identifies the spaces.
    DualCongruent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NotIsoReason {
    /// Different `mu`, hence different dimension `mu^2 + 1`.
    DimensionMismatch,
    /// Same `mu` but `chi` values differ mod `mu` in both orientations;
    /// the normalized invariants of the two spaces are distinct.
    ChiClassMismatch,
}

impl IsoVerdict {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoVerdict::Isomorphic(_))
    }
}

pub fn is_isomorphic(first: &ModuliSpace, second: &ModuliSpace) -> IsoVerdict {
    if first.mu != second.mu {
        return IsoVerdict::NotIsomorphic(NotIsoReason::DimensionMismatch);
    }
    if first.mu <= 2 {
        return IsoVerdict::Isomorphic(IsoReason::SmallMu);
    }
    if (first.chi - second.chi).rem_euclid(first.mu) == 0 {
        return IsoVerdict::Isomorphic(IsoReason::TwistCongruent);
    }
    if (first.chi + second.chi).rem_euclid(first.mu) == 0 {
        return IsoVerdict::Isomorphic(IsoReason::DualCongruent);
    }
    IsoVerdict::NotIsomorphic(NotIsoReason::ChiClassMismatch)
}

/// Dimension of the fibers of the exceptional divisor contracted by the
/// second extremal ray: `|epsilon|`. Requires `mu >= 3`; the value is an
/// isomorphism invariant, so it may be computed on any representative.
pub fn exceptional_fiber_dimension(space: &ModuliSpace) -> Result<i64> {
    if space.mu < 3 {
        return Err(Error::NotApplicable(space.mu));
    }
    Ok(space.epsilon.abs())
}
