use brody_core::c64;
use brody_core::winkelmann::{
    brody_locus_report, default_grid, equidistribution_report, generic_offset, golden_slope, lift_deriv_norm,
    line_disc, LineDiscScenario, TorusBoxes,
};
use brody_core::C64;

use super::SelfTest;
use crate::cli::{WinkelmannArgs, WinkelmannReport};
use crate::config::{self, WinkelmannFile};
use crate::error::LabResult;
use crate::output::{num, Table};
use crate::Context;

const LOCUS_HEADER: [&str; 6] = ["n", "argmax_re", "argmax_im", "dist_to_p", "lift_norm", "control_dist"];
const ZERO: [C64; 2] = [C64 { re: 0.0, im: 0.0 }, C64 { re: 0.0, im: 0.0 }];

fn scenario(ctx: &Context, args: &WinkelmannArgs, n: u32) -> LabResult<LineDiscScenario> {
    let (lambda, offset) = match &ctx.config {
        Some(p) => {
            let f = config::load::<WinkelmannFile>(p)?;
            (f.lambda, f.offset())
        }
        None => (golden_slope(), None),
    };
    let offset = if args.through_p { ZERO } else { offset.unwrap_or_else(generic_offset) };
    Ok(LineDiscScenario::new(lambda, n, offset)?)
}

pub fn run(ctx: &Context, args: &WinkelmannArgs) -> LabResult<()> {
    match args.report {
        WinkelmannReport::Locus => {
            let first = *args.ladder.first().unwrap_or(&1);
            let s = scenario(ctx, args, first)?;
            let rows = brody_locus_report(&s, &args.ladder)?;
            let mut table = Table::create(ctx.out.as_deref(), &LOCUS_HEADER)?;
            for r in rows {
                table.row([
                    r.n.to_string(),
                    num(r.argmax.re),
                    num(r.argmax.im),
                    num(r.dist_to_p),
                    num(r.lift_norm),
                    num(r.control_dist),
                ])?;
            }
            table.finish()
        }
        WinkelmannReport::Boxes => {
            let s = scenario(ctx, args, args.n)?;
            let boxes = TorusBoxes { axes: (0, 2), k: args.k };
            let rep = equidistribution_report(&s, boxes, ctx.nr.unwrap_or_else(|| default_grid(args.n)))?;
            let mut table = Table::create(ctx.out.as_deref(), &["box_re_z1", "box_re_z2", "mass"])?;
            for (i, m) in rep.current.masses[..args.k * args.k].iter().enumerate() {
                table.row([(i / args.k).to_string(), (i % args.k).to_string(), num(*m)])?;
            }
            table.finish()?;
            eprintln!("winkelmann: max relative deviation {}", num(rep.max_relative_deviation));
            Ok(())
        }
    }
}

pub fn selftest(_ctx: &Context, _args: &WinkelmannArgs) -> LabResult<()> {
    let mut t = SelfTest::new("winkelmann::selftest");
    let s = LineDiscScenario::new(golden_slope(), 1, ZERO)?;
    t.check("centre maps to p", line_disc(&s, c64(0.0, 0.0)).rep() == [0.0; 4]);
    t.check("disc through p has flat lift", lift_deriv_norm(&s, c64(0.0, 0.0)) == s.flat_deriv_norm());
    t.check("rational slope rejected", LineDiscScenario::new(0.5, 1, ZERO).is_err());
    t.finish()
}
