use std::f64::consts::PI;

use brody_core::lengtharea::{
    length_area_inequality_check, radial_profile, select_ahlfors_radii, DEFAULT_NR, DEFAULT_NTHETA,
};

use super::{family_map, map_source, SelfTest};
use crate::cli::{AhlforsArgs, Family};
use crate::error::{LabError, LabResult};
use crate::output::{num, Table};
use crate::Context;

const HEADER: [&str; 6] = ["r", "length", "area", "area_prime", "cs_violation", "selected"];

pub fn run(ctx: &Context, args: &AhlforsArgs) -> LabResult<()> {
    let tol = ctx.tol_or(1e-4);
    let f = map_source(ctx, args.family, args.n, args.radius)?;
    let ntheta = ctx.ntheta.unwrap_or(DEFAULT_NTHETA);
    let profile = radial_profile(&f, ctx.nr.unwrap_or(DEFAULT_NR), ntheta)?;
    let selection = if f.radius() > 1.0 {
        Some(select_ahlfors_radii(&f, usize::MAX, ntheta)?)
    } else {
        None
    };
    let mut table = Table::create(ctx.out.as_deref(), &HEADER)?;
    for (i, &r) in profile.radii.iter().enumerate() {
        let l = profile.l_of_r[i];
        let l2 = l * l;
        let v = (l2 - 2.0 * PI * r * profile.a_prime[i]) / l2.max(f64::EPSILON);
        table.row([num(r), num(l), num(profile.a_of_r[i]), num(profile.a_prime[i]), num(v), "0".into()])?;
    }
    if let Some(sel) = &selection {
        let p = &sel.profile;
        for &r in &sel.radii {
            let i = p.nearest_index(r);
            let l = p.l_of_r[i];
            let l2 = l * l;
            let v = (l2 - 2.0 * PI * r * p.a_prime[i]) / l2.max(f64::EPSILON);
            table.row([num(r), num(l), num(p.a_of_r[i]), num(p.a_prime[i]), num(v), "1".into()])?;
        }
    }
    table.finish()?;

    let worst = length_area_inequality_check(&profile);
    eprintln!("ahlfors: max relative Cauchy–Schwarz violation {}", num(worst));
    if worst > tol {
        return Err(LabError::invariant(
            "lengtharea::length_area_inequality_check",
            format!("violation {} exceeds {}", num(worst), num(tol)),
        ));
    }
    if let Some(sel) = selection {
        eprintln!("ahlfors: integral {} bound 1/a(1) {}", num(sel.integral), num(sel.bound));
        if sel.integral > 1.001 * sel.bound {
            return Err(LabError::invariant(
                "lengtharea::select_ahlfors_radii",
                format!("integral {} exceeds 1.001/a(1) = {}", num(sel.integral), num(1.001 * sel.bound)),
            ));
        }
    }
    Ok(())
}

pub fn selftest(_ctx: &Context, _args: &AhlforsArgs) -> LabResult<()> {
    let mut t = SelfTest::new("ahlfors::selftest");
    let p = radial_profile(&family_map(Family::Nz, 1, 1.0)?, 64, 64)?;
    t.check("l(1) = π for (1, z)", (p.l_of_r[63] - PI).abs() < 1e-12);
    t.check("a(1) = π/2 for (1, z)", (p.a_of_r[63] - PI / 2.0).abs() < 1e-8);
    t.check("equality case", length_area_inequality_check(&p).abs() < 1e-12);
    t.finish()
}
