use brody_core::brody::brody_step;
use brody_core::poly::Poly;
use brody_core::{c64, holomap::PolyMap};

use super::{family_map, map_source, SelfTest};
use crate::cli::{BrodyArgs, Family};
use crate::error::{LabError, LabResult};
use crate::output::{num, Table};
use crate::Context;

const HEADER: [&str; 8] = ["n", "basepoint_re", "basepoint_im", "scale", "R", "deriv_at_zero", "sup_deriv", "extremal_value"];

pub fn run(ctx: &Context, args: &BrodyArgs) -> LabResult<()> {
    let tol = ctx.tol_or(1e-6);
    let maps: Vec<(String, PolyMap)> = if ctx.config.is_some() {
        vec![("-".into(), map_source(ctx, args.family, 1, 1.0)?)]
    } else {
        args.n
            .iter()
            .map(|&n| Ok((n.to_string(), family_map(args.family, n, 1.0)?)))
            .collect::<LabResult<_>>()?
    };
    let mut table = Table::create(ctx.out.as_deref(), &HEADER)?;
    let mut violations = Vec::new();
    for (label, f) in &maps {
        let (_, rep) = brody_step(f)?;
        table.row([
            label.clone(),
            num(rep.basepoint.re),
            num(rep.basepoint.im),
            num(rep.scale),
            num(rep.rescaled_domain_radius),
            num(rep.deriv_at_zero),
            num(rep.sup_deriv_on_rescaled),
            num(rep.extremal_value),
        ])?;
        if (rep.deriv_at_zero - 1.0).abs() > tol || rep.sup_deriv_on_rescaled > 2.0 + tol {
            violations.push(label.clone());
        }
    }
    table.finish()?;
    if violations.is_empty() {
        Ok(())
    } else {
        Err(LabError::invariant(
            "brody::brody_step",
            format!("derivative bounds exceeded for n = {violations:?}"),
        ))
    }
}

pub fn selftest(_ctx: &Context, _args: &BrodyArgs) -> LabResult<()> {
    let mut t = SelfTest::new("brody::selftest");
    for n in [1u32, 3, 10] {
        let (g, rep) = brody_step(&family_map(Family::Nz, n, 1.0)?)?;
        t.check("nz basepoint is the centre", rep.basepoint == c64(0.0, 0.0));
        t.check("nz rescaled radius is n/2", rep.rescaled_domain_radius == n as f64 / 2.0);
        t.check(
            "nz rescales to (1, z)",
            (g.components()[1].coeff(1) - c64(1.0, 0.0)).norm() < 1e-12,
        );
    }
    let constant = PolyMap::new(vec![Poly::from_real(&[1.0]), Poly::from_real(&[2.0])], 1.0)?;
    t.check("constant map rejected", brody_step(&constant).is_err());
    t.finish()
}
