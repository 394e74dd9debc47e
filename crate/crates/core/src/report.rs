//! One aggregated report per moduli space.
//!
//! [`AnalysisReport::build`] accepts any `(mu, chi)` with `mu >= 1`,
//! normalizes `chi`, and computes every invariant of the crate on the
//! normalized representative. Two inputs in the same isomorphism class
//! therefore produce identical reports apart from the raw `mu` and `chi`
//! echo fields. Before returning, the builder re-checks a set of structural
//! invariants (cone containment, wall coherence, factor sums); a failure
//! there is a bug and surfaces as [`Error::InternalInvariant`].

use num_traits::Signed;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::cones::{effective_cone, interpolation_check, Cone2, InterpolationVerdict, PicardClass};
use crate::moduli::{
    canonical_class, companion_hilbert_points, exceptional_fiber_dimension, generic_resolution,
    ModuliSpace, ResolutionData,
};
use crate::rational::{int, rat};
use crate::stability::{
    jh_factors, largest_wall, nef_cone, DestabilizerDescription, JhFactorization, Wall,
};
use crate::{Error, Result};

/// The largest wall with its destabilizers and factor lists, flattened for
/// reporting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallReport {
    pub wall: Wall,
    pub primary_destabilizer: DestabilizerDescription,
    pub alternates: Vec<DestabilizerDescription>,
    pub jh_factors: JhFactorization,
}

impl Serialize for WallReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut state = serializer.serialize_struct("WallReport", 5)?;
        state.serialize_field("center", &self.wall.center.to_string())?;
        state.serialize_field("radius_sq", &self.wall.radius_sq.to_string())?;
        state.serialize_field("primary_destabilizer", &self.primary_destabilizer)?;
        state.serialize_field("alternates", &self.alternates)?;
        state.serialize_field("jh_factors", &self.jh_factors)?;
        state.end()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub mu: i64,
    pub chi: i64,
    pub chi_normalized: i64,
    pub delta: i64,
    pub dimension: i64,
    pub picard_rank: u8,
    pub note: Option<String>,
    pub canonical: Option<PicardClass>,
    pub resolution: ResolutionData,
    pub companion_hilbert_points: i64,
    pub interpolation: InterpolationVerdict,
    pub effective: Option<Cone2>,
    pub nef: Option<Cone2>,
    pub largest_wall: Option<WallReport>,
    pub exceptional_fiber_dim: Option<i64>,
    pub iso_class_representative: [i64; 2],
}

/// Checks that the second nef ray is a nonnegative combination of the
/// effective rays. The effective rays are `(1, 0)` and a vector with second
/// coordinate `-1`, so the coefficients solve directly.
fn check_nef_inside_effective(nef: &Cone2, effective: &Cone2) -> Result<()> {
    let [nx, ny] = nef.ray_b;
    let [ex, ey] = effective.ray_b;
    let along_b = rat(ny, ey);
    let along_a = int(nx) - &along_b * int(ex);
    if along_a.is_negative() || along_b.is_negative() {
        return Err(Error::InternalInvariant(format!(
            "nef ray [{nx}, {ny}] lies outside the effective cone with second ray [{ex}, {ey}]"
        )));
    }
    Ok(())
}

impl AnalysisReport {
    pub fn build(mu: i64, chi: i64) -> Result<AnalysisReport> {
        let space = ModuliSpace::new(mu, chi)?;
        let norm = space.normalized();

        let resolution = generic_resolution(&norm)?;
        if resolution.chern() != norm.sheaf_class() {
            return Err(Error::InternalInvariant(
                "generic resolution does not resolve the sheaf class".into(),
            ));
        }
        let companion = companion_hilbert_points(&norm)?;
        let interpolation = interpolation_check(&norm)?;

        let (picard_rank, note) = if mu >= 3 {
            (2, None)
        } else if mu == 2 {
            (
                1,
                Some(
                    "Picard rank 1: N(2, chi) is the space of plane conics P^5, \
                     independent of chi"
                        .to_string(),
                ),
            )
        } else {
            (
                1,
                Some(
                    "Picard rank 1: N(1, chi) is the dual plane of lines, \
                     independent of chi"
                        .to_string(),
                ),
            )
        };

        let mut report = AnalysisReport {
            mu,
            chi,
            chi_normalized: norm.chi(),
            delta: norm.delta(),
            dimension: norm.dimension(),
            picard_rank,
            note,
            canonical: None,
            resolution,
            companion_hilbert_points: companion,
            interpolation,
            effective: None,
            nef: None,
            largest_wall: None,
            exceptional_fiber_dim: None,
            iso_class_representative: [norm.mu(), norm.chi()],
        };
        if mu < 3 {
            return Ok(report);
        }

        let effective = effective_cone(&norm)?;
        let nef = nef_cone(&norm)?;
        check_nef_inside_effective(&nef, &effective)?;

        let wall = largest_wall(&norm)?;
        let factors = jh_factors(&norm)?;
        // The primary generic factor must restate the primary destabilizer
        // class, placing the factor list on the wall.
        if factors.generic[0].chern() != wall.primary.chern() {
            return Err(Error::InternalInvariant(
                "leading generic factor disagrees with the wall destabilizer".into(),
            ));
        }

        report.canonical = Some(canonical_class(&norm)?);
        report.effective = Some(effective);
        report.nef = Some(nef);
        report.largest_wall = Some(WallReport {
            wall: wall.wall,
            primary_destabilizer: wall.primary,
            alternates: wall.alternates,
            jh_factors: factors,
        });
        report.exceptional_fiber_dim = Some(exceptional_fiber_dimension(&norm)?);
        Ok(report)
    }
}
