use brody_core::holomap::PolyMap;
use brody_core::lengtharea::{
    closedness_defect, empirical_current, ChartGrid, EmpiricalCurrent, Hemispheres, OneForm, RealPoly2,
};

use super::{family_map, map_source, SelfTest};
use crate::cli::{CurrentArgs, Family, PartitionKind};
use crate::error::{LabError, LabResult};
use crate::output::{num, Table};
use crate::Context;

const NR: usize = 128;
const NTHETA: usize = 128;

/// `β = x²y dx + (xy + y³) dy`, so `dβ = (y − x²) dx∧dy`.
pub fn test_form() -> OneForm {
    OneForm {
        p: RealPoly2::new(vec![((2, 1), 1.0)]),
        q: RealPoly2::new(vec![((1, 1), 1.0), ((0, 3), 1.0)]),
    }
}

fn current_of(ctx: &Context, f: &PolyMap, args: &CurrentArgs) -> LabResult<EmpiricalCurrent> {
    let nr = ctx.nr.unwrap_or(NR);
    let nt = ctx.ntheta.unwrap_or(NTHETA);
    Ok(match args.partition {
        PartitionKind::Hemispheres => empirical_current(f, &Hemispheres, nr, nt)?,
        PartitionKind::Grid => {
            let grid = ChartGrid { base: 0, coord: 1, re: (-2.0, 2.0), im: (-2.0, 2.0), k: args.k };
            empirical_current(f, &grid, nr, nt)?
        }
    })
}

pub fn run(ctx: &Context, args: &CurrentArgs) -> LabResult<()> {
    let maps: Vec<(String, PolyMap)> = if ctx.config.is_some() {
        vec![("-".into(), map_source(ctx, args.family, 1, 1.0)?)]
    } else {
        args.n
            .iter()
            .map(|&n| Ok((n.to_string(), family_map(args.family, n, 1.0)?)))
            .collect::<LabResult<_>>()?
    };
    if args.closedness {
        run_closedness(ctx, &maps)
    } else {
        run_masses(ctx, args, &maps)
    }
}

fn run_masses(ctx: &Context, args: &CurrentArgs, maps: &[(String, PolyMap)]) -> LabResult<()> {
    let tol = ctx.tol_or(1e-9);
    let mut table = Table::create(ctx.out.as_deref(), &["n", "cell", "mass", "length_over_area"])?;
    let mut bad = Vec::new();
    for (label, f) in maps {
        let cur = current_of(ctx, f, args)?;
        let cells = cur.masses.len();
        for (i, m) in cur.masses.iter().enumerate() {
            let cell = if i + 1 == cells { "complement".to_string() } else { i.to_string() };
            table.row([label.clone(), cell, num(*m), num(cur.length_over_area())])?;
        }
        if (cur.total_mass() - 1.0).abs() > tol || cur.masses.iter().any(|&m| m < 0.0) {
            bad.push(label.clone());
        }
    }
    table.finish()?;
    if bad.is_empty() {
        Ok(())
    } else {
        Err(LabError::invariant("lengtharea::empirical_current", format!("mass not normalized for {bad:?}")))
    }
}

fn run_closedness(ctx: &Context, maps: &[(String, PolyMap)]) -> LabResult<()> {
    let tol = ctx.tol_or(1e-6);
    let beta = test_form();
    let mut table = Table::create(
        ctx.out.as_deref(),
        &["n", "area_integral", "boundary_integral", "stokes_residual", "raw_defect", "normalized_defect", "length_over_area"],
    )?;
    let mut bad = Vec::new();
    for (label, f) in maps {
        let r = closedness_defect(f, &beta, 0, 1)?;
        table.row([
            label.clone(),
            num(r.area_integral),
            num(r.boundary_integral),
            num(r.stokes_residual),
            num(r.raw_defect),
            num(r.normalized_defect),
            num(r.length / r.area),
        ])?;
        if r.stokes_residual > tol {
            bad.push(label.clone());
        }
    }
    table.finish()?;
    if bad.is_empty() {
        Ok(())
    } else {
        Err(LabError::invariant("lengtharea::closedness_defect", format!("Stokes residual above {} for {bad:?}", num(tol))))
    }
}

pub fn selftest(_ctx: &Context, _args: &CurrentArgs) -> LabResult<()> {
    let mut t = SelfTest::new("current::selftest");
    let f = family_map(Family::Nz, 1, 1.0)?;
    let c = empirical_current(&f, &Hemispheres, 64, 64)?;
    t.check("unit disc lies in one hemisphere", c.masses[1] == 0.0 && (c.masses[0] - 1.0).abs() < 1e-12);
    let r = closedness_defect(&f, &test_form(), 0, 1)?;
    t.check("Stokes holds", r.stokes_residual < 1e-9);
    t.finish()
}
