//! Plain-text rendering, ASCII only.

use std::fmt::Write;

use sheafcones::cones::{Cone2, ConeStatus, InterpolationReason, InterpolationVerdict};
use sheafcones::moduli::{ModuliSpace, ResolutionData, ResolutionTerm};
use sheafcones::rational::Rational;
use sheafcones::report::AnalysisReport;
use sheafcones::stability::{DestabilizerDescription, RankOneWall};

fn line(buf: &mut String, label: &str, value: impl std::fmt::Display) {
    let _ = writeln!(buf, "  {label:<20}  {value}");
}

fn cone(c: &Cone2) -> String {
    let status = match c.status {
        ConeStatus::Proven => "proven",
        ConeStatus::Unknown => "unknown",
    };
    format!(
        "({},{}), ({},{}) [{status}]",
        c.ray_a[0], c.ray_a[1], c.ray_b[0], c.ray_b[1]
    )
}

fn terms(list: &[ResolutionTerm]) -> String {
    list.iter()
        .map(|t| format!("{} O({})", t.mult, t.twist))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn resolution(r: &ResolutionData) -> String {
    format!("0 -> {} -> {} -> F -> 0", terms(&r.relations), terms(&r.generators))
}

fn interpolation(v: &InterpolationVerdict) -> String {
    match (v.passes, v.reason) {
        (true, InterpolationReason::AboveGoldenRatio) => {
            format!("alpha {}: passes (above golden ratio)", v.alpha)
        }
        (true, _) => format!("alpha {}: passes (consecutive Fibonacci ratio)", v.alpha),
        (false, _) => format!("alpha {}: fails", v.alpha),
    }
}

fn factor_list(list: &[DestabilizerDescription]) -> String {
    list.iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub fn render_analysis(r: &AnalysisReport) -> String {
    let mut buf = String::new();
    let _ = writeln!(buf, "N({},{})", r.mu, r.chi);
    line(&mut buf, "chi normalized", r.chi_normalized);
    line(&mut buf, "delta", r.delta);
    line(&mut buf, "dimension", r.dimension);
    line(&mut buf, "picard rank", r.picard_rank);
    if let Some(note) = &r.note {
        line(&mut buf, "note", note);
    }
    match &r.canonical {
        Some(k) => line(&mut buf, "canonical class", format!("({}, {})", k.l0, k.l1)),
        None => line(&mut buf, "canonical class", "n/a"),
    }
    line(&mut buf, "resolution", resolution(&r.resolution));
    line(&mut buf, "companion points", r.companion_hilbert_points);
    line(&mut buf, "interpolation", interpolation(&r.interpolation));
    match &r.effective {
        Some(c) => line(&mut buf, "effective cone", cone(c)),
        None => line(&mut buf, "effective cone", "n/a"),
    }
    match &r.nef {
        Some(c) => line(&mut buf, "nef cone", cone(c)),
        None => line(&mut buf, "nef cone", "n/a"),
    }
    match &r.largest_wall {
        Some(w) => {
            line(
                &mut buf,
                "largest wall",
                format!("center {}, radius^2 {}", w.wall.center, w.wall.radius_sq),
            );
            line(&mut buf, "destabilizer", &w.primary_destabilizer);
            for alternate in &w.alternates {
                line(&mut buf, "alternate", alternate);
            }
            line(&mut buf, "jh factors", factor_list(&w.jh_factors.generic));
            if let Some(list) = &w.jh_factors.line_form {
                line(&mut buf, "jh (line form)", factor_list(list));
            }
            if let Some(list) = &w.jh_factors.collinear {
                line(&mut buf, "jh (collinear)", factor_list(list));
            }
        }
        None => line(&mut buf, "largest wall", "n/a"),
    }
    match r.exceptional_fiber_dim {
        Some(d) => line(&mut buf, "exceptional fiber", d),
        None => line(&mut buf, "exceptional fiber", "n/a"),
    }
    line(
        &mut buf,
        "iso representative",
        format!(
            "N({},{})",
            r.iso_class_representative[0], r.iso_class_representative[1]
        ),
    );
    buf
}

pub fn render_walls(space: &ModuliSpace, center: &Rational, rows: &[RankOneWall]) -> String {
    let mut buf = String::new();
    let _ = writeln!(
        buf,
        "walls of N({},{}): center {center}, {} rows",
        space.mu(),
        space.chi(),
        rows.len()
    );
    let _ = writeln!(buf, "{:>5} {:>4} {:>13}  {}", "k", "n", "radius_sq", "destabilizer");
    for row in rows {
        let flag = if row.largest { "  [largest]" } else { "" };
        let _ = writeln!(
            buf,
            "{:>5} {:>4} {:>13}  {}{flag}",
            row.twist,
            row.points,
            row.wall.radius_sq.to_string(),
            row.destabilizer
        );
    }
    buf
}
