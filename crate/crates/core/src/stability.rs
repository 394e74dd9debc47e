//! Slope functions, destabilizing walls, and the nef cone.
//!
//! Stability conditions are parametrized by points `(s, t)` of a half-plane
//! with `t > 0`. We only ever need `t^2`, so a [`StabilityPoint`] stores the
//! exact pair `(s, t_sq)` and every wall computation stays in rational
//! arithmetic. For a fixed one-dimensional class the locus where a second
//! class has equal slope is a semicircle centered on the `s`-axis; walls are
//! recorded by `center` and `radius_sq`.
//!
//! The largest wall of a space is generated by a twisted ideal sheaf or a
//! line bundle, controlled by the decomposition `a = b*mu + epsilon` of
//! [`crate::moduli::ModuliSpace`]; crossing it contracts the space, and the
//! orthogonality class of its destabilizer cuts the nef boundary.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::cones::{primitive_ray, Cone2, ConeStatus};
use crate::kclass::{orthogonal_basis, ChernCharacter};
use crate::moduli::ModuliSpace;
use crate::rational::{int, rat, serde_str, sqrt_exact, Rational};
use crate::{Error, Result};

/// A point `(s, t)` of the stability half-plane, stored as `(s, t^2)` with
/// `t_sq > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityPoint {
    s: Rational,
    t_sq: Rational,
}

impl StabilityPoint {
    pub fn new(s: Rational, t_sq: Rational) -> Result<Self> {
        if !t_sq.is_positive() {
            return Err(Error::InvalidStabilityPoint);
        }
        Ok(StabilityPoint { s, t_sq })
    }

    pub fn s(&self) -> &Rational {
        &self.s
    }

    pub fn t_sq(&self) -> &Rational {
        &self.t_sq
    }
}

/// A slope value, with `Infinite` greater than every finite slope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BridgelandSlope {
    Finite(Rational),
    Infinite,
}

impl Ord for BridgelandSlope {
    fn cmp(&self, other: &Self) -> Ordering {
        use BridgelandSlope::*;
        match (self, other) {
            (Infinite, Infinite) => Ordering::Equal,
            (Infinite, Finite(_)) => Ordering::Greater,
            (Finite(_), Infinite) => Ordering::Less,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for BridgelandSlope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Classical slope of a one-dimensional class: `chi / ch1`.
pub fn simpson_slope(x: &ChernCharacter) -> Result<Rational> {
    if !x.is_one_dimensional() {
        return Err(Error::NotOneDimensional);
    }
    Ok(x.euler_characteristic() / int(x.ch1()))
}

/// Slope at a stability point, up to the positive factor `1/t`:
/// `(ch0/2 (s^2 - t^2) + ch2 - s ch1) / (ch1 - s ch0)`, or `Infinite` when
/// the denominator vanishes. Dividing the true slope by `t > 0` preserves
/// all comparisons, which is all wall computations need.
pub fn bridgeland_slope(x: &ChernCharacter, p: &StabilityPoint) -> BridgelandSlope {
    let denominator = int(x.ch1()) - p.s() * int(x.ch0());
    if denominator.is_zero() {
        return BridgelandSlope::Infinite;
    }
    let numerator =
        rat(x.ch0(), 2) * (p.s() * p.s() - p.t_sq()) + x.ch2() - p.s() * int(x.ch1());
    BridgelandSlope::Finite(numerator / denominator)
}

/// A semicircular wall in the stability half-plane.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Wall {
    #[serde(serialize_with = "serde_str::serialize")]
    pub center: Rational,
    #[serde(serialize_with = "serde_str::serialize")]
    pub radius_sq: Rational,
}

/// The equal-slope locus of a second class against a one-dimensional class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PotentialWall {
    Wall(Wall),
    /// The locus is empty (degenerate semicircles of radius zero included).
    Empty,
    /// The slopes agree identically, so the locus is the whole half-plane.
    Everywhere,
}

/// The wall where `e` has the same slope as the one-dimensional class `c`.
///
/// For `ch0(e) != 0` the locus is the semicircle with
/// `center = ch2(c)/ch1(c)` and
/// `radius_sq = center^2 + (2/ch0(e)) (ch2(e) - center * ch1(e))`.
/// All walls of `c` share that center, so they are nested, never crossing.
pub fn potential_wall(c: &ChernCharacter, e: &ChernCharacter) -> Result<PotentialWall> {
    if !c.is_one_dimensional() {
        return Err(Error::NotOneDimensional);
    }
    let mu = int(c.ch1());
    if e.ch0() == 0 {
        return Ok(if &mu * e.ch2() == c.ch2() * int(e.ch1()) {
            PotentialWall::Everywhere
        } else {
            PotentialWall::Empty
        });
    }
    let center = c.ch2() / &mu;
    let radius_sq = &center * &center + rat(2, e.ch0()) * (e.ch2() - &center * int(e.ch1()));
    Ok(if radius_sq.is_positive() {
        PotentialWall::Wall(Wall { center, radius_sq })
    } else {
        PotentialWall::Empty
    })
}

/// Radius bound for walls generated by subobjects of rank `rank`:
/// `mu / (2 * |rank|)`. In particular rank-one subobjects account for every
/// wall of radius above `mu/4`.
pub fn rank_radius_bound(mu: i64, rank: i64) -> Result<Rational> {
    if mu < 1 {
        return Err(Error::InvalidMu(mu));
    }
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    Ok(rat(mu, 2 * rank.abs()))
}

/// Whether `I_W(k)` with `|W| = n` generic is stable at the point: `s < k`,
/// and the point lies outside the semicircle with center `k - n - 1/2` and
/// radius `n - 1/2` (no constraint for `n = 0`).
pub fn ideal_twist_stable_at(k: i64, n: u64, p: &StabilityPoint) -> bool {
    if *p.s() >= int(k) {
        return false;
    }
    if n == 0 {
        return true;
    }
    let n = n as i64;
    let offset = p.s() - rat(2 * (k - n) - 1, 2);
    let radius_sq = rat(2 * n - 1, 2) * rat(2 * n - 1, 2);
    &offset * &offset + p.t_sq() > radius_sq
}

/// A destabilizing object, by shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DestabilizerDescription {
    /// `I_W(twist)` for a generic `W` of `points` points.
    IdealTwist { twist: i64, points: u64 },
    /// `O(twist)`.
    LineBundle { twist: i64 },
    /// `O(twist)[1]`, the shifted line bundle (its class enters with a
    /// minus sign).
    ShiftedLineBundle { twist: i64 },
    /// `O_L(twist)` for a line `L`; the twist may be half-integral.
    LineOnLine { twist: Rational },
    /// An extension class of a length-`length` zero-dimensional sheaf by
    /// `O(twist)[1]`.
    ZeroDimExtension { twist: i64, length: u64 },
}

impl DestabilizerDescription {
    pub fn chern(&self) -> ChernCharacter {
        use DestabilizerDescription::*;
        match self {
            IdealTwist { twist, points } => ChernCharacter::ideal_twist(*twist, *points),
            LineBundle { twist } => ChernCharacter::structure_sheaf_twist(*twist),
            ShiftedLineBundle { twist } => {
                -&ChernCharacter::structure_sheaf_twist(*twist)
            }
            LineOnLine { twist } => {
                ChernCharacter::new(0, 1, twist - rat(1, 2))
            }
            ZeroDimExtension { twist, length } => {
                let shifted = -&ChernCharacter::structure_sheaf_twist(*twist);
                &shifted + &ChernCharacter::point_class().scale(*length as i64)
            }
        }
    }
}

impl fmt::Display for DestabilizerDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use DestabilizerDescription::*;
        match self {
            IdealTwist { twist, points } => write!(f, "I_W({twist}), |W|={points}"),
            LineBundle { twist } => write!(f, "O({twist})"),
            ShiftedLineBundle { twist } => write!(f, "O({twist})[1]"),
            LineOnLine { twist } => write!(f, "O_L({twist})"),
            ZeroDimExtension { twist, length } => {
                write!(f, "Z({length}) ext O({twist})[1]")
            }
        }
    }
}

impl Serialize for DestabilizerDescription {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use DestabilizerDescription::*;
        match self {
            IdealTwist { twist, points } => {
                let mut st = serializer.serialize_struct("DestabilizerDescription", 3)?;
                st.serialize_field("kind", "ideal")?;
                st.serialize_field("twist", twist)?;
                st.serialize_field("points", points)?;
                st.end()
            }
            LineBundle { twist } => {
                let mut st = serializer.serialize_struct("DestabilizerDescription", 2)?;
                st.serialize_field("kind", "line")?;
                st.serialize_field("twist", twist)?;
                st.end()
            }
            ShiftedLineBundle { twist } => {
                let mut st = serializer.serialize_struct("DestabilizerDescription", 2)?;
                st.serialize_field("kind", "shifted_line")?;
                st.serialize_field("twist", twist)?;
                st.end()
            }
            LineOnLine { twist } => {
                let mut st = serializer.serialize_struct("DestabilizerDescription", 2)?;
                st.serialize_field("kind", "line_on_line")?;
                if twist.is_integer() {
                    let n = twist
                        .to_integer()
                        .to_i64()
                        .expect("line twist exceeds i64");
                    st.serialize_field("twist", &n)?;
                } else {
                    st.serialize_field("twist", &twist.to_string())?;
                }
                st.end()
            }
            ZeroDimExtension { twist, length } => {
                let mut st = serializer.serialize_struct("DestabilizerDescription", 3)?;
                st.serialize_field("kind", "zero_dim_extension")?;
                st.serialize_field("twist", twist)?;
                st.serialize_field("length", length)?;
                st.end()
            }
        }
    }
}

/// The certified largest wall of a space, with its destabilizer and any
/// equally valid alternate description on the boundary case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LargestWall {
    pub wall: Wall,
    pub primary: DestabilizerDescription,
    pub alternates: Vec<DestabilizerDescription>,
}

/// Computes the largest destabilizing wall, on the space as given.
///
/// With `a = b*mu + epsilon`, `epsilon` in `[-mu/2, mu/2)`:
/// * `epsilon < 0`: destabilizer `I_W(b)` with `|W| = -epsilon`; at the
///   boundary `2*epsilon = -mu` the line bundle `O(b-1)` generates the
///   identical wall and is reported as an alternate;
/// * `epsilon >= 0`: destabilizer `O(b)`.
///
/// The radius is `mu/2 - |epsilon|/mu` in every case, so the radius squared
/// is always a perfect rational square. Requires `mu >= 3`.
pub fn largest_wall(space: &ModuliSpace) -> Result<LargestWall> {
    if space.mu() < 3 {
        return Err(Error::NotApplicable(space.mu()));
    }
    let (mu, b, eps) = (space.mu(), space.b(), space.epsilon());
    let (primary, alternates) = if eps < 0 {
        let primary = DestabilizerDescription::IdealTwist {
            twist: b,
            points: (-eps) as u64,
        };
        let alternates = if 2 * eps == -mu {
            vec![DestabilizerDescription::LineBundle { twist: b - 1 }]
        } else {
            vec![]
        };
        (primary, alternates)
    } else {
        (DestabilizerDescription::LineBundle { twist: b }, vec![])
    };
    let c = space.sheaf_class();
    let wall = match potential_wall(&c, &primary.chern())? {
        PotentialWall::Wall(w) => w,
        other => {
            return Err(Error::InternalInvariant(format!(
                "largest-wall destabilizer produced {other:?} instead of a wall"
            )))
        }
    };
    let expected_radius = rat(mu, 2) - rat(eps.abs(), mu);
    if wall.radius_sq != &expected_radius * &expected_radius {
        return Err(Error::InternalInvariant(
            "largest wall radius disagrees with its closed form".into(),
        ));
    }
    for alt in &alternates {
        if potential_wall(&c, &alt.chern())? != PotentialWall::Wall(wall.clone()) {
            return Err(Error::InternalInvariant(
                "alternate destabilizer does not generate the same wall".into(),
            ));
        }
    }
    Ok(LargestWall {
        wall,
        primary,
        alternates,
    })
}

/// Jordan-Hölder factors of the generic sheaf on the largest wall.
///
/// `generic` destabilizes the generic member. On the boundary case
/// `2*epsilon = -mu` two further lists appear: `line_form`, the equivalent
/// description through the alternate line-bundle destabilizer, and
/// `collinear`, the three-factor list for sheaves on the special locus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JhFactorization {
    pub generic: Vec<DestabilizerDescription>,
    pub line_form: Option<Vec<DestabilizerDescription>>,
    pub collinear: Option<Vec<DestabilizerDescription>>,
}

pub fn jh_factors(space: &ModuliSpace) -> Result<JhFactorization> {
    use DestabilizerDescription::*;
    if space.mu() < 3 {
        return Err(Error::NotApplicable(space.mu()));
    }
    let (mu, b, eps) = (space.mu(), space.b(), space.epsilon());
    let factorization = if 2 * eps == -mu {
        JhFactorization {
            generic: vec![
                IdealTwist {
                    twist: b,
                    points: (mu / 2) as u64,
                },
                ShiftedLineBundle { twist: b - mu },
            ],
            line_form: Some(vec![
                LineBundle { twist: b - 1 },
                ZeroDimExtension {
                    twist: b - 1 - mu,
                    length: (mu / 2) as u64,
                },
            ]),
            collinear: Some(vec![
                LineBundle { twist: b - 1 },
                ShiftedLineBundle { twist: b - mu },
                LineOnLine {
                    twist: int(b) - rat(mu, 2),
                },
            ]),
        }
    } else if eps < 0 {
        JhFactorization {
            generic: vec![
                IdealTwist {
                    twist: b,
                    points: (-eps) as u64,
                },
                ShiftedLineBundle { twist: b - mu },
            ],
            line_form: None,
            collinear: None,
        }
    } else if eps == 0 {
        JhFactorization {
            generic: vec![LineBundle { twist: b }, ShiftedLineBundle { twist: b - mu }],
            line_form: None,
            collinear: None,
        }
    } else {
        JhFactorization {
            generic: vec![
                LineBundle { twist: b },
                ZeroDimExtension {
                    twist: b - mu,
                    length: eps as u64,
                },
            ],
            line_form: None,
            collinear: None,
        }
    };
    // Every factor list must sum to the sheaf class.
    let c = space.sheaf_class();
    let lists = [
        Some(&factorization.generic),
        factorization.line_form.as_ref(),
        factorization.collinear.as_ref(),
    ];
    for list in lists.into_iter().flatten() {
        let total = list
            .iter()
            .fold(ChernCharacter::zero(), |acc, f| &acc + &f.chern());
        if total != c {
            return Err(Error::InternalInvariant(format!(
                "factor list sums to {total:?}, expected the sheaf class"
            )));
        }
    }
    Ok(factorization)
}

/// One row of the rank-one wall survey.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankOneWall {
    pub twist: i64,
    pub points: u64,
    pub wall: Wall,
    pub destabilizer: DestabilizerDescription,
    /// True when the row realizes the certified largest wall.
    pub largest: bool,
}

/// Surveys the walls generated by `O(k)` and generic `I_W(k)` with
/// `k <= b` and `|W| <= max_points`, keeping radii in
/// `[min_radius_sq, largest radius]`. Rows are sorted by decreasing radius,
/// then decreasing twist, then increasing point count. Computed on the
/// space as given; requires `mu >= 3` and `min_radius_sq > 0`.
pub fn enumerate_rank_one_walls(
    space: &ModuliSpace,
    min_radius_sq: &Rational,
    max_points: u64,
) -> Result<Vec<RankOneWall>> {
    if !min_radius_sq.is_positive() {
        return Err(Error::Invalid(format!(
            "min_radius_sq must be positive, got {min_radius_sq}"
        )));
    }
    let largest = largest_wall(space)?;
    let center = largest.wall.center.clone();
    let rmax = &largest.wall.radius_sq;
    let mut rows = Vec::new();
    let mut k = space.b();
    loop {
        let offset = &center - int(k);
        let offset_sq = &offset * &offset;
        // Below the center, radii only grow as k decreases; once even
        // max_points cannot pull the radius under the cap, no further k
        // contributes.
        if int(k) < center && &offset_sq - int(2 * max_points as i64) > *rmax {
            break;
        }
        for n in 0..=max_points {
            let radius_sq = &offset_sq - int(2 * n as i64);
            if &radius_sq < min_radius_sq {
                break;
            }
            if &radius_sq > rmax {
                continue;
            }
            let destabilizer = if n == 0 {
                DestabilizerDescription::LineBundle { twist: k }
            } else {
                DestabilizerDescription::IdealTwist { twist: k, points: n }
            };
            rows.push(RankOneWall {
                twist: k,
                points: n,
                largest: radius_sq == *rmax,
                wall: Wall {
                    center: center.clone(),
                    radius_sq,
                },
                destabilizer,
            });
        }
        k -= 1;
    }
    rows.sort_by(|a, b| {
        b.wall
            .radius_sq
            .cmp(&a.wall.radius_sq)
            .then(b.twist.cmp(&a.twist))
            .then(a.points.cmp(&b.points))
    });
    Ok(rows)
}

/// The nef cone, computed on the normalized representative (its coordinates
/// refer to the basis of the normalized parameters). The second ray is the
/// primitive class orthogonal to both the sheaf class and the largest-wall
/// destabilizer, oriented to pair nonnegatively with the certifying curve.
/// Requires `mu >= 3`.
pub fn nef_cone(space: &ModuliSpace) -> Result<Cone2> {
    let norm = space.normalized();
    let largest = largest_wall(&norm)?;
    let e = largest.primary.chern();
    let basis = orthogonal_basis(norm.mu(), norm.chi())?;
    let x = basis.u1().tor_pairing(&e);
    let y = -basis.u0().tor_pairing(&e);
    let orientation = &x + &y * rat(norm.mu() - norm.chi(), norm.delta());
    let flip = match orientation.cmp(&int(0)) {
        Ordering::Less => true,
        // Orthogonal to the curve as well: orient toward the effective
        // boundary, whose second coordinate is negative.
        Ordering::Equal => y.is_positive(),
        Ordering::Greater => false,
    };
    let (x, y) = if flip { (-x, -y) } else { (x, y) };
    let ray = primitive_ray(&x, &y);
    let boundary = &basis.u0().scale(ray[0]) + &basis.u1().scale(ray[1]);
    if !boundary.tor_pairing(&norm.sheaf_class()).is_zero()
        || !boundary.tor_pairing(&e).is_zero()
    {
        return Err(Error::InternalInvariant(
            "nef boundary class is not orthogonal to the wall data".into(),
        ));
    }
    Ok(Cone2 {
        ray_a: [1, 0],
        ray_b: ray,
        status: ConeStatus::Proven,
    })
}

/// An exact value `base + t_coeff * t` in the quadratic extension generated
/// by `t = sqrt(t_sq)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticValue {
    pub base: Rational,
    pub t_coeff: Rational,
    pub t_sq: Rational,
}

impl QuadraticValue {
    /// The value as a rational, when `t_sq` is a perfect square.
    pub fn evaluate(&self) -> Option<Rational> {
        sqrt_exact(&self.t_sq).map(|t| &self.base + &self.t_coeff * t)
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero() && self.t_coeff.is_zero()
    }
}

/// Degree on the curve induced at a stability point: the imaginary part of
/// `-Z(w)/Z(v)`, where `Z` is the central charge at the point and `v` the
/// sheaf class of the space (as given). Writing `Z(x) = A_x + i t B_x` with
///
/// `A_x = -ch2 + s ch1 - ((s^2 - t^2)/2) ch0`, `B_x = ch1 - s ch0`,
///
/// the result is `t (A_w B_v - B_w A_v) / (A_v^2 + t^2 B_v^2)`, an exact
/// multiple of `t` returned as a [`QuadraticValue`]. The denominator never
/// vanishes for a one-dimensional `v` with `t^2 > 0`.
pub fn bm_curve_degree(
    space: &ModuliSpace,
    w: &ChernCharacter,
    p: &StabilityPoint,
) -> Result<QuadraticValue> {
    let v = space.sheaf_class();
    let part = |x: &ChernCharacter| {
        let a = -x.ch2() + p.s() * int(x.ch1())
            - (p.s() * p.s() - p.t_sq()) * rat(x.ch0(), 2);
        let b = int(x.ch1()) - p.s() * int(x.ch0());
        (a, b)
    };
    let (a_v, b_v) = part(&v);
    let (a_w, b_w) = part(w);
    let denominator = &a_v * &a_v + p.t_sq() * &b_v * &b_v;
    if denominator.is_zero() {
        return Err(Error::InternalInvariant(
            "central charge of the sheaf class vanished".into(),
        ));
    }
    Ok(QuadraticValue {
        base: int(0),
        t_coeff: (&a_w * &b_v - &b_w * &a_v) / denominator,
        t_sq: p.t_sq().clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(mu: i64, chi: i64) -> ModuliSpace {
        ModuliSpace::new(mu, chi).unwrap()
    }

    fn point(s: Rational, t_sq: Rational) -> StabilityPoint {
        StabilityPoint::new(s, t_sq).unwrap()
    }

    fn wall_top(space: &ModuliSpace) -> StabilityPoint {
        let w = largest_wall(space).unwrap().wall;
        point(w.center, w.radius_sq)
    }

    #[test]
    fn slopes() {
        let c = ChernCharacter::one_dimensional(4, 1).unwrap();
        assert_eq!(simpson_slope(&c).unwrap(), rat(1, 4));
        assert!(simpson_slope(&ChernCharacter::structure_sheaf_twist(1)).is_err());

        let p = point(rat(-5, 4), rat(49, 16));
        assert_eq!(bridgeland_slope(&c, &p), BridgelandSlope::Finite(int(0)));
        assert_eq!(
            bridgeland_slope(&ChernCharacter::ideal_twist(1, 1), &p),
            BridgelandSlope::Finite(int(0))
        );
        let o = ChernCharacter::structure_sheaf_twist(0);
        assert_eq!(
            bridgeland_slope(&o, &point(int(0), int(1))),
            BridgelandSlope::Infinite
        );
        assert!(BridgelandSlope::Infinite > BridgelandSlope::Finite(int(1000)));
        assert!(StabilityPoint::new(int(0), int(0)).is_err());
    }

    #[test]
    fn potential_walls() {
        let c = ChernCharacter::one_dimensional(4, 1).unwrap();
        let expected = Wall {
            center: rat(-5, 4),
            radius_sq: rat(49, 16),
        };
        assert_eq!(
            potential_wall(&c, &ChernCharacter::ideal_twist(1, 1)).unwrap(),
            PotentialWall::Wall(expected.clone())
        );
        // The shifted partner O(-3) cuts the identical circle.
        assert_eq!(
            potential_wall(&c, &ChernCharacter::structure_sheaf_twist(-3)).unwrap(),
            PotentialWall::Wall(expected)
        );
        assert_eq!(
            potential_wall(&c, &ChernCharacter::ideal_twist(0, 1)).unwrap(),
            PotentialWall::Empty
        );
        assert_eq!(
            potential_wall(&c, &c).unwrap(),
            PotentialWall::Everywhere
        );
        assert_eq!(
            potential_wall(&c, &ChernCharacter::point_class()).unwrap(),
            PotentialWall::Empty
        );
        assert!(potential_wall(&ChernCharacter::structure_sheaf_twist(0), &c).is_err());
    }

    #[test]
    fn radius_bounds() {
        assert_eq!(rank_radius_bound(4, 1).unwrap(), int(2));
        assert_eq!(rank_radius_bound(4, 2).unwrap(), int(1));
        assert_eq!(rank_radius_bound(5, 3).unwrap(), rat(5, 6));
        assert_eq!(rank_radius_bound(4, -2).unwrap(), int(1));
        assert_eq!(rank_radius_bound(4, 0), Err(Error::ZeroRank));
    }

    #[test]
    fn ideal_twist_stability() {
        let top = wall_top(&space(4, 1));
        assert!(ideal_twist_stable_at(1, 1, &top));
        // Inside the excluded semicircle around k - n - 1/2.
        assert!(!ideal_twist_stable_at(1, 1, &point(rat(-1, 2), rat(1, 8))));
        // Right of the vertical wall s = k.
        assert!(!ideal_twist_stable_at(1, 1, &point(int(2), int(1))));
        assert!(ideal_twist_stable_at(1, 0, &point(rat(1, 2), rat(1, 100))));
        assert!(!ideal_twist_stable_at(1, 0, &point(int(1), int(1))));
    }

    #[test]
    fn largest_walls() {
        let lw = largest_wall(&space(4, 1)).unwrap();
        assert_eq!(lw.wall.center, rat(-5, 4));
        assert_eq!(lw.wall.radius_sq, rat(49, 16));
        assert_eq!(
            lw.primary,
            DestabilizerDescription::IdealTwist { twist: 1, points: 1 }
        );
        assert!(lw.alternates.is_empty());

        let lw = largest_wall(&space(3, 1)).unwrap();
        assert_eq!(lw.wall.center, rat(-7, 6));
        assert_eq!(lw.wall.radius_sq, rat(49, 36));
        assert_eq!(lw.primary, DestabilizerDescription::LineBundle { twist: 0 });

        let lw = largest_wall(&space(5, 1)).unwrap();
        assert_eq!(lw.wall.radius_sq, rat(529, 100));
        assert_eq!(lw.primary, DestabilizerDescription::LineBundle { twist: 1 });

        assert!(largest_wall(&space(2, 1)).is_err());
    }

    #[test]
    fn boundary_largest_wall_has_an_alternate() {
        let lw = largest_wall(&space(4, 0)).unwrap();
        assert_eq!(lw.wall.center, rat(-3, 2));
        assert_eq!(lw.wall.radius_sq, rat(9, 4));
        assert_eq!(
            lw.primary,
            DestabilizerDescription::IdealTwist { twist: 1, points: 2 }
        );
        assert_eq!(
            lw.alternates,
            vec![DestabilizerDescription::LineBundle { twist: 0 }]
        );
    }

    #[test]
    fn jh_factor_lists() {
        use DestabilizerDescription::*;
        let f = jh_factors(&space(4, 1)).unwrap();
        assert_eq!(
            f.generic,
            vec![
                IdealTwist { twist: 1, points: 1 },
                ShiftedLineBundle { twist: -3 }
            ]
        );
        assert!(f.line_form.is_none() && f.collinear.is_none());

        let f = jh_factors(&space(5, 1)).unwrap();
        assert_eq!(
            f.generic,
            vec![
                LineBundle { twist: 1 },
                ZeroDimExtension { twist: -4, length: 1 }
            ]
        );

        let f = jh_factors(&space(4, 2)).unwrap();
        assert_eq!(
            f.generic,
            vec![LineBundle { twist: 1 }, ShiftedLineBundle { twist: -3 }]
        );

        let f = jh_factors(&space(4, 0)).unwrap();
        assert_eq!(
            f.generic,
            vec![
                IdealTwist { twist: 1, points: 2 },
                ShiftedLineBundle { twist: -3 }
            ]
        );
        assert_eq!(
            f.line_form.unwrap(),
            vec![
                LineBundle { twist: 0 },
                ZeroDimExtension { twist: -4, length: 2 }
            ]
        );
        assert_eq!(
            f.collinear.unwrap(),
            vec![
                LineBundle { twist: 0 },
                ShiftedLineBundle { twist: -3 },
                LineOnLine { twist: int(-1) }
            ]
        );
    }

    #[test]
    fn wall_survey() {
        let rows = enumerate_rank_one_walls(&space(4, 1), &rat(1, 4), 4).unwrap();
        let key: Vec<(i64, u64, Rational)> = rows
            .iter()
            .map(|r| (r.twist, r.points, r.wall.radius_sq.clone()))
            .collect();
        assert_eq!(
            key,
            vec![
                (1, 1, rat(49, 16)),
                (-3, 0, rat(49, 16)),
                (0, 0, rat(25, 16)),
                (-4, 3, rat(25, 16)),
                (1, 2, rat(17, 16)),
                (-3, 1, rat(17, 16)),
                (-2, 0, rat(9, 16)),
            ]
        );
        assert!(rows[0].largest && rows[1].largest);
        assert!(rows[2..].iter().all(|r| !r.largest));

        // Raising the point cap reveals one more wall, ordered by radius.
        let rows = enumerate_rank_one_walls(&space(4, 1), &rat(1, 4), 8).unwrap();
        let key: Vec<(i64, u64)> = rows.iter().map(|r| (r.twist, r.points)).collect();
        assert_eq!(
            key,
            vec![
                (1, 1),
                (-3, 0),
                (-5, 6),
                (0, 0),
                (-4, 3),
                (1, 2),
                (-3, 1),
                (-2, 0)
            ]
        );
        assert_eq!(rows[2].wall.radius_sq, rat(33, 16));

        // A floor above the largest radius leaves nothing.
        assert!(enumerate_rank_one_walls(&space(4, 1), &int(100), 4)
            .unwrap()
            .is_empty());
        assert!(enumerate_rank_one_walls(&space(4, 1), &int(0), 4).is_err());
    }

    #[test]
    fn nef_cones() {
        let check = |mu, chi, expected: [i64; 2]| {
            let cone = nef_cone(&space(mu, chi)).unwrap();
            assert_eq!(cone.ray_a, [1, 0], "mu={mu} chi={chi}");
            assert_eq!(cone.ray_b, expected, "mu={mu} chi={chi}");
            assert_eq!(cone.status, ConeStatus::Proven);
        };
        check(4, 1, [6, -1]);
        check(4, 2, [4, -1]);
        check(5, 1, [13, -1]);
        check(5, 0, [3, -1]);
        check(5, 2, [11, -1]);
        check(6, 0, [3, -1]);
        check(6, 1, [21, -1]);
        check(6, 2, [12, -1]);
        check(6, 3, [9, -1]);
        check(3, 1, [2, -1]);
        check(12, 5, [210, -1]);
        // Computed through the normalized representative.
        check(4, 9, [6, -1]);
        check(4, 3, [6, -1]);
    }

    #[test]
    fn curve_degrees() {
        // Pencil-of-lines class against N(4,1) at the top of its wall.
        let s41 = space(4, 1);
        let q = bm_curve_degree(
            &s41,
            &ChernCharacter::structure_sheaf_twist(0),
            &wall_top(&s41),
        )
        .unwrap();
        assert_eq!(q.base, int(0));
        assert_eq!(q.t_coeff, rat(3, 49));
        assert_eq!(q.evaluate(), Some(rat(3, 28)));

        // The sheaf class itself has degree zero.
        let q = bm_curve_degree(&s41, &s41.sheaf_class(), &wall_top(&s41)).unwrap();
        assert!(q.is_zero());

        // N(3,1) at its wall top: the map contracts the pencil class.
        let s31 = space(3, 1);
        let q = bm_curve_degree(
            &s31,
            &ChernCharacter::structure_sheaf_twist(0),
            &wall_top(&s31),
        )
        .unwrap();
        assert!(q.is_zero());

        // Off the perfect-square locus the value stays symbolic.
        let q = bm_curve_degree(
            &s41,
            &ChernCharacter::structure_sheaf_twist(0),
            &point(int(-2), int(2)),
        )
        .unwrap();
        assert_eq!(q.evaluate(), None);
    }

    #[test]
    fn destabilizer_rendering() {
        use DestabilizerDescription::*;
        assert_eq!(IdealTwist { twist: 1, points: 1 }.to_string(), "I_W(1), |W|=1");
        assert_eq!(LineBundle { twist: -3 }.to_string(), "O(-3)");
        assert_eq!(ShiftedLineBundle { twist: -3 }.to_string(), "O(-3)[1]");
        assert_eq!(LineOnLine { twist: int(-1) }.to_string(), "O_L(-1)");
        assert_eq!(
            ZeroDimExtension { twist: -4, length: 1 }.to_string(),
            "Z(1) ext O(-4)[1]"
        );
    }

    #[test]
    fn destabilizer_serialization() {
        use DestabilizerDescription::*;
        let json = |d: &DestabilizerDescription| serde_json::to_string(d).unwrap();
        assert_eq!(
            json(&IdealTwist { twist: 1, points: 1 }),
            r#"{"kind":"ideal","twist":1,"points":1}"#
        );
        assert_eq!(json(&LineBundle { twist: 0 }), r#"{"kind":"line","twist":0}"#);
        assert_eq!(
            json(&ShiftedLineBundle { twist: -3 }),
            r#"{"kind":"shifted_line","twist":-3}"#
        );
        assert_eq!(
            json(&LineOnLine { twist: int(-1) }),
            r#"{"kind":"line_on_line","twist":-1}"#
        );
        assert_eq!(
            json(&LineOnLine { twist: rat(-3, 2) }),
            r#"{"kind":"line_on_line","twist":"-3/2"}"#
        );
        assert_eq!(
            json(&ZeroDimExtension { twist: -4, length: 1 }),
            r#"{"kind":"zero_dim_extension","twist":-4,"length":1}"#
        );
    }
}
