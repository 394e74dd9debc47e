//! Wall geometry checked against an independent expansion of the
//! equal-slope condition, and the stability predicates that certify the
//! largest wall.

use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;
use sheafcones::kclass::{orthogonal_basis, ChernCharacter};
use sheafcones::moduli::ModuliSpace;
use sheafcones::rational::{int, rat, sqrt_exact, Rational};
use sheafcones::stability::{
    bm_curve_degree, enumerate_rank_one_walls, ideal_twist_stable_at, jh_factors, largest_wall,
    nef_cone, potential_wall, rank_radius_bound, DestabilizerDescription, PotentialWall,
    StabilityPoint, Wall,
};

fn space(mu: i64, chi: i64) -> ModuliSpace {
    ModuliSpace::new(mu, chi).unwrap()
}

fn chern() -> impl Strategy<Value = ChernCharacter> {
    (-6i64..=6, -6i64..=6, -12i64..=12)
        .prop_map(|(c0, c1, half)| ChernCharacter::new(c0, c1, rat(half, 2)))
}

/// Independent derivation: clearing denominators in `slope(c) = slope(e)`
/// yields `P (s^2 + t^2) + Q s + R = 0` with
///
/// `P = mu ch0(e) / 2`, `Q = -ch0(e) ch2(c)`, `R = ch2(c) ch1(e) - mu ch2(e)`,
///
/// a circle centered at `-Q/(2P)` when `P != 0`, and a constant condition
/// otherwise.
fn wall_by_expansion(c: &ChernCharacter, e: &ChernCharacter) -> PotentialWall {
    let mu = int(c.ch1());
    let r = c.ch2() * int(e.ch1()) - &mu * e.ch2();
    if e.ch0() == 0 {
        return if r.is_zero() {
            PotentialWall::Everywhere
        } else {
            PotentialWall::Empty
        };
    }
    let p = &mu * rat(e.ch0(), 2);
    let q = -int(e.ch0()) * c.ch2();
    let center = -&q / (int(2) * &p);
    let radius_sq = &center * &center - &r / &p;
    if radius_sq.is_positive() {
        PotentialWall::Wall(Wall { center, radius_sq })
    } else {
        PotentialWall::Empty
    }
}

/// Cross-multiplied slope equality at an explicit point.
fn slopes_equal_at(c: &ChernCharacter, e: &ChernCharacter, s: &Rational, t_sq: &Rational) -> bool {
    let numerator =
        |x: &ChernCharacter| rat(x.ch0(), 2) * (s * s - t_sq) + x.ch2() - s * int(x.ch1());
    let denominator = |x: &ChernCharacter| int(x.ch1()) - s * int(x.ch0());
    numerator(c) * denominator(e) == numerator(e) * denominator(c)
}

fn wall_top(w: &Wall) -> StabilityPoint {
    StabilityPoint::new(w.center.clone(), w.radius_sq.clone()).unwrap()
}

proptest! {
    #[test]
    fn potential_walls_match_the_expansion(
        mu in 1i64..=12,
        chi in -15i64..=15,
        e in chern(),
    ) {
        let c = ChernCharacter::one_dimensional(mu, chi).unwrap();
        let reported = potential_wall(&c, &e).unwrap();
        prop_assert_eq!(reported.clone(), wall_by_expansion(&c, &e));
        if let PotentialWall::Wall(w) = reported {
            prop_assert!(slopes_equal_at(&c, &e, &w.center, &w.radius_sq));
        }
    }

    #[test]
    fn walls_of_a_class_are_concentric(
        mu in 1i64..=12,
        chi in -15i64..=15,
        e1 in chern(),
        e2 in chern(),
    ) {
        let c = ChernCharacter::one_dimensional(mu, chi).unwrap();
        if let (Ok(PotentialWall::Wall(w1)), Ok(PotentialWall::Wall(w2))) =
            (potential_wall(&c, &e1), potential_wall(&c, &e2))
        {
            prop_assert_eq!(w1.center, w2.center);
        }
    }

    #[test]
    fn degrees_are_pure_multiples_of_t(
        mu in 1i64..=10,
        chi in -12i64..=12,
        w in chern(),
        s_num in -20i64..=20,
        t_num in 1i64..=20,
    ) {
        let sp = space(mu, chi);
        let p = StabilityPoint::new(rat(s_num, 4), rat(t_num, 4)).unwrap();
        let q = bm_curve_degree(&sp, &w, &p).unwrap();
        prop_assert!(q.base.is_zero());
        // The sheaf class itself never acquires degree.
        let q = bm_curve_degree(&sp, &sp.sheaf_class(), &p).unwrap();
        prop_assert!(q.is_zero());
    }
}

#[test]
fn largest_radius_is_an_exact_square() {
    for mu in 3..=12 {
        for chi in -mu..=mu {
            let s = space(mu, chi);
            let lw = largest_wall(&s).unwrap();
            let radius = sqrt_exact(&lw.wall.radius_sq)
                .unwrap_or_else(|| panic!("radius not rational at mu={mu} chi={chi}"));
            assert_eq!(radius, rat(mu, 2) - rat(s.epsilon().abs(), mu));
            assert_eq!(lw.wall.center, s.d() / int(mu));
        }
    }
}

/// The destabilizer and every alternate lie on the wall along its whole
/// arc: slopes agree and the induced curve degree vanishes at the top and
/// at the two half-height points, all of which are rational because the
/// largest radius is.
#[test]
fn destabilizers_sit_on_the_largest_wall() {
    for mu in 3..=12 {
        for chi in 0..=mu / 2 {
            let s = space(mu, chi);
            let c = s.sheaf_class();
            let lw = largest_wall(&s).unwrap();
            let radius = sqrt_exact(&lw.wall.radius_sq).unwrap();
            let half = &radius / int(2);
            let points = [
                wall_top(&lw.wall),
                StabilityPoint::new(
                    &lw.wall.center + &half,
                    rat(3, 4) * &lw.wall.radius_sq,
                )
                .unwrap(),
                StabilityPoint::new(
                    &lw.wall.center - &half,
                    rat(3, 4) * &lw.wall.radius_sq,
                )
                .unwrap(),
            ];
            let mut on_wall = vec![lw.primary.chern()];
            on_wall.extend(lw.alternates.iter().map(|a| a.chern()));
            for e in &on_wall {
                for p in &points {
                    assert!(
                        slopes_equal_at(&c, e, p.s(), p.t_sq()),
                        "mu={mu} chi={chi}"
                    );
                    let degree = bm_curve_degree(&s, e, p).unwrap();
                    assert!(degree.is_zero(), "mu={mu} chi={chi}");
                }
            }
        }
    }
}

/// For an ideal-sheaf destabilizer the region where it fails to be stable
/// is a semicircle; away from the boundary case that semicircle sits
/// strictly inside the largest wall, so the destabilizer is genuinely
/// stable on the wall. At the boundary case the two circles coincide and
/// stability degenerates exactly at the wall.
#[test]
fn excluded_discs_nest_inside_the_largest_wall() {
    for mu in 3..=12 {
        for chi in 0..=mu / 2 {
            let s = space(mu, chi);
            let eps = s.epsilon();
            if eps >= 0 {
                continue;
            }
            let lw = largest_wall(&s).unwrap();
            let (k, n) = match lw.primary {
                DestabilizerDescription::IdealTwist { twist, points } => (twist, points),
                ref other => panic!("unexpected primary {other:?}"),
            };
            let big_radius = sqrt_exact(&lw.wall.radius_sq).unwrap();
            let small_center = rat(2 * (k - n as i64) - 1, 2);
            let small_radius = rat(2 * n as i64 - 1, 2);
            let top = wall_top(&lw.wall);
            if 2 * eps == -mu {
                assert_eq!(small_center, lw.wall.center, "mu={mu}");
                assert_eq!(small_radius, big_radius, "mu={mu}");
                // On the common circle the ideal sheaf is only semistable.
                assert!(!ideal_twist_stable_at(k, n, &top));
            } else {
                let gap = &big_radius - &small_radius;
                let offset = &lw.wall.center - &small_center;
                assert!(gap.is_positive(), "mu={mu} chi={chi}");
                assert!(&gap * &gap > &offset * &offset, "mu={mu} chi={chi}");
                assert!(ideal_twist_stable_at(k, n, &top), "mu={mu} chi={chi}");
            }
        }
    }
}

/// Subobjects of rank two or more generate walls strictly smaller than the
/// largest wall, which is why the rank-one survey is complete at the top.
#[test]
fn higher_rank_walls_cannot_reach_the_largest() {
    for mu in 3..=12 {
        for chi in -mu..=mu {
            let bound = rank_radius_bound(mu, 2).unwrap();
            let lw = largest_wall(&space(mu, chi)).unwrap();
            assert!(&bound * &bound < lw.wall.radius_sq, "mu={mu} chi={chi}");
        }
    }
}

#[test]
fn wall_survey_is_sound_and_complete() {
    for mu in 3..=8 {
        for chi in 0..=mu / 2 {
            let s = space(mu, chi);
            let c = s.sheaf_class();
            let min = rat(1, 4);
            let max_points = (2 * mu) as u64;
            let rows = enumerate_rank_one_walls(&s, &min, max_points).unwrap();
            let lw = largest_wall(&s).unwrap();

            for row in &rows {
                assert!(row.twist <= s.b());
                assert!(row.points <= max_points);
                assert!(row.wall.radius_sq >= min);
                assert!(row.wall.radius_sq <= lw.wall.radius_sq);
                assert_eq!(row.largest, row.wall.radius_sq == lw.wall.radius_sq);
                // The row's wall is the actual equal-slope locus.
                assert_eq!(
                    potential_wall(&c, &row.destabilizer.chern()).unwrap(),
                    PotentialWall::Wall(row.wall.clone())
                );
            }
            // Sorted by radius desc, twist desc, points asc.
            for pair in rows.windows(2) {
                let key = |r: &sheafcones::stability::RankOneWall| {
                    (r.wall.radius_sq.clone(), r.twist, -(r.points as i64))
                };
                assert!(key(&pair[0]) >= key(&pair[1]));
            }
            // Complete against an independent brute-force scan.
            let mut brute = vec![];
            for k in (s.b() - 4 * mu - 10)..=s.b() {
                for n in 0..=max_points {
                    let offset = &lw.wall.center - int(k);
                    let radius_sq = &offset * &offset - int(2 * n as i64);
                    if radius_sq >= min && radius_sq <= lw.wall.radius_sq {
                        brute.push((k, n, radius_sq));
                    }
                }
            }
            let mut reported: Vec<(i64, u64, Rational)> = rows
                .iter()
                .map(|r| (r.twist, r.points, r.wall.radius_sq.clone()))
                .collect();
            brute.sort();
            reported.sort();
            assert_eq!(reported, brute, "mu={mu} chi={chi}");
            // And the certified largest wall appears among the rows.
            assert!(rows.iter().any(|r| r.largest));
        }
    }
}

/// Closed form for the second nef ray: with `e` the primary destabilizer
/// of the normalized representative, the ray is the primitive vector along
/// `(mu ch2(e) - d ch1(e) + mu - chi, -delta)`, and the integer first
/// entry is always positive.
#[test]
fn nef_rays_follow_the_closed_form() {
    for mu in 3..=12 {
        for chi in -2 * mu..=2 * mu {
            let s = space(mu, chi);
            let norm = s.normalized();
            let e = largest_wall(&norm).unwrap().primary.chern();
            let t_rat =
                int(mu) * e.ch2() - norm.d() * int(e.ch1()) + int(mu - norm.chi());
            assert!(t_rat.is_integer() && t_rat.is_positive(), "mu={mu} chi={chi}");
            let t = t_rat.to_integer().to_i64().unwrap();
            let g = num_integer::gcd(t, norm.delta());
            let expected = [t / g, -norm.delta() / g];

            let cone = nef_cone(&s).unwrap();
            assert_eq!(cone.ray_a, [1, 0]);
            assert_eq!(cone.ray_b, expected, "mu={mu} chi={chi}");

            // The ray really is orthogonal to both the sheaf class and the
            // destabilizer under the Tor pairing.
            let basis = orthogonal_basis(norm.mu(), norm.chi()).unwrap();
            let boundary =
                &basis.u0().scale(cone.ray_b[0]) + &basis.u1().scale(cone.ray_b[1]);
            assert!(boundary.tor_pairing(&norm.sheaf_class()).is_zero());
            assert!(boundary.tor_pairing(&e).is_zero());
        }
    }
}

/// The boundary case `2 epsilon = -mu` happens among normalized parameters
/// exactly at even `mu` with `chi = 0`, where the wall acquires a second
/// destabilizer shape and two extra factor lists.
#[test]
fn boundary_spaces_carry_the_extra_structure() {
    for mu in 3..=12 {
        for chi in 0..=mu / 2 {
            let s = space(mu, chi);
            let boundary = 2 * s.epsilon() == -mu;
            assert_eq!(boundary, mu % 2 == 0 && chi == 0, "mu={mu} chi={chi}");
            let lw = largest_wall(&s).unwrap();
            let f = jh_factors(&s).unwrap();
            if !boundary {
                assert!(lw.alternates.is_empty());
                assert!(f.line_form.is_none() && f.collinear.is_none());
                continue;
            }
            let b = s.b();
            assert_eq!(
                lw.alternates,
                vec![DestabilizerDescription::LineBundle { twist: b - 1 }]
            );
            assert_eq!(
                potential_wall(&s.sheaf_class(), &lw.alternates[0].chern()).unwrap(),
                PotentialWall::Wall(lw.wall.clone())
            );
            let collinear = f.collinear.clone().unwrap();
            assert_eq!(collinear.len(), 3);
            assert_eq!(
                collinear[2],
                DestabilizerDescription::LineOnLine {
                    twist: int(b) - rat(mu, 2)
                }
            );
            // All three lists resolve the sheaf class.
            for list in [&f.generic, f.line_form.as_ref().unwrap(), &collinear] {
                let total = list
                    .iter()
                    .fold(ChernCharacter::zero(), |acc, d| &acc + &d.chern());
                assert_eq!(total, s.sheaf_class(), "mu={mu}");
            }
        }
    }
}
