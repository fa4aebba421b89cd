use std::f64::consts::PI;

use brody_core::lelong::{lelong_bound_check, max_relative_decrease, monotonicity_profile, BallCurve};
use brody_core::poly::Poly;

use super::SelfTest;
use crate::cli::{CurveKind, LelongArgs};
use crate::config::{self, CurveFile};
use crate::error::{LabError, LabResult};
use crate::output::{num, Table};
use crate::Context;

const NR: usize = 64;

pub fn named_curve(kind: CurveKind, eps: f64) -> LabResult<BallCurve> {
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(LabError::config("--eps must be positive"));
    }
    let comps: [&[f64]; 2] = match kind {
        CurveKind::Line => [&[0.0, 1.0], &[0.0]],
        CurveKind::Parabola => [&[0.0, 1.0], &[0.0, 0.0, 1.0]],
        CurveKind::Cubic => [&[0.0, 1.0], &[0.0, 0.0, 0.0, 1.0]],
        CurveKind::Cusp => [&[0.0, 0.0, 1.0], &[0.0, 0.0, 0.0, 1.0]],
    };
    // |γ(z)| ≥ min(|z|, |z|²), so this parameter radius leaves the ball.
    let rho = 1.5 * eps.max(eps.sqrt());
    Ok(BallCurve::new(comps.iter().map(|c| Poly::from_real(c)).collect(), eps, rho)?)
}

pub fn run(ctx: &Context, args: &LelongArgs) -> LabResult<()> {
    let tol = ctx.tol_or(1e-4);
    let c = match &ctx.config {
        Some(p) => config::load::<CurveFile>(p)?.to_curve()?,
        None => named_curve(args.curve, args.eps)?,
    };
    let nr = ctx.nr.unwrap_or(NR);
    let eps = c.ball_radius();
    let radii: Vec<f64> = (1..=nr).map(|i| eps * i as f64 / nr as f64).collect();
    let prof = monotonicity_profile(&c, &radii)?;
    let mut table = Table::create(ctx.out.as_deref(), &["r", "a", "a_over_r2"])?;
    for (&r, &q) in radii.iter().zip(&prof) {
        table.row([num(r), num(q * r * r), num(q)])?;
    }
    table.finish()?;
    let drop = max_relative_decrease(&prof);
    if drop > tol {
        return Err(LabError::invariant(
            "lelong::monotonicity_profile",
            format!("a(r)/r² drops by {} (relative)", num(drop)),
        ));
    }
    if c.through_origin() {
        let ratio = lelong_bound_check(&c)?;
        eprintln!("lelong: area/(πε²) = {}", num(ratio));
        if ratio < 1.0 - 1e-3 {
            return Err(LabError::invariant("lelong::lelong_bound_check", format!("ratio {} below 1", num(ratio))));
        }
    }
    Ok(())
}

pub fn selftest(_ctx: &Context, _args: &LelongArgs) -> LabResult<()> {
    let mut t = SelfTest::new("lelong::selftest");
    let line = named_curve(CurveKind::Line, 1.0)?;
    t.check("line ratio is 1", (lelong_bound_check(&line)? - 1.0).abs() < 1e-12);
    let prof = monotonicity_profile(&line, &[0.25, 0.5, 1.0])?;
    t.check("line profile is π", prof.iter().all(|q| (q - PI).abs() < 1e-12));
    t.finish()
}
