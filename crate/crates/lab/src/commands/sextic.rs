use brody_core::hompoly::MultiPoly;
use brody_core::sexticdeform::{
    decade_ladder, deformation_step, fermat_sextic, sextic_general_position_check, trace_roots_on_line,
    PlaneConfig6,
};
use brody_core::C64;

use super::SelfTest;
use crate::cli::SexticArgs;
use crate::config::{self, PlanesFile};
use crate::error::{LabError, LabResult};
use crate::output::{num, Table};
use crate::Context;

const HEADER: [&str; 5] = ["line_id", "epsilon", "root_id", "dist_to_nearest_triple", "cluster_id"];

fn parse_line(config: &PlaneConfig6, s: &str) -> LabResult<usize> {
    let (a, b) = s
        .split_once('-')
        .ok_or_else(|| LabError::config(format!("double line {s:?} is not of the form i-j")))?;
    let i: usize = a.trim().parse().map_err(|_| LabError::config(format!("bad plane index in {s:?}")))?;
    let j: usize = b.trim().parse().map_err(|_| LabError::config(format!("bad plane index in {s:?}")))?;
    if i == j || i > 5 || j > 5 {
        return Err(LabError::config(format!("double line {s:?} needs two distinct planes in 0..6")));
    }
    config
        .line_index(i, j)
        .ok_or_else(|| LabError::config(format!("no double line {s:?}")))
}

pub fn run(ctx: &Context, args: &SexticArgs) -> LabResult<()> {
    let tol = ctx.tol_or(1e-9);
    let (config, s0) = match &ctx.config {
        Some(p) => {
            let file = config::load::<PlanesFile>(p)?;
            (file.to_config()?, file.sextic()?.unwrap_or_else(fermat_sextic))
        }
        None => (PlaneConfig6::standard(), fermat_sextic()),
    };
    let lines: Vec<usize> = args.order.iter().map(|s| parse_line(&config, s)).collect::<LabResult<_>>()?;
    let mut seen = lines.clone();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != lines.len() {
        return Err(LabError::config("--order repeats a double line"));
    }
    if !(args.step_eps != 0.0 && args.step_eps.is_finite()) || args.decades < 1 {
        return Err(LabError::config("--step-eps must be nonzero and --decades ≥ 1"));
    }
    let ladder = decade_ladder(args.decades);
    let mut table = Table::create(ctx.out.as_deref(), &HEADER)?;
    let mut s: MultiPoly = s0;
    let mut problems = Vec::new();
    for (k, &line) in lines.iter().enumerate() {
        let order = config.double_lines[line].complementary_planes();
        let tr = trace_roots_on_line(&config, line, order, &s, &ladder)?;
        for step in &tr.steps {
            for (r, (d, c)) in step.distances.iter().zip(&step.clusters).enumerate() {
                table.row([line.to_string(), num(step.epsilon), r.to_string(), num(*d), c.to_string()])?;
            }
        }
        if !tr.max_distance_decreasing() {
            problems.push(format!("line {line}: max distance not decreasing"));
        }
        if tr.terminal_pattern() != Some(tr.expected_pattern) {
            problems.push(format!(
                "line {line}: terminal pattern {:?}, expected {:?}",
                tr.terminal_pattern(),
                tr.expected_pattern
            ));
        }
        let step = deformation_step(&config, &s, line, order, C64::new(args.step_eps, 0.0), &lines[..k])?;
        eprintln!(
            "sextic: step {k} on line {line}: residual on earlier lines {}, min |s| at triple points {}",
            num(step.previous_line_residual),
            num(step.min_at_triple_points)
        );
        if step.previous_line_residual > tol {
            problems.push(format!("line {line}: residual {}", num(step.previous_line_residual)));
        }
        s = step.s_next;
    }
    table.finish()?;
    if problems.is_empty() {
        Ok(())
    } else {
        Err(LabError::invariant("sexticdeform::trace_roots_on_line", problems.join("; ")))
    }
}

pub fn selftest(_ctx: &Context, _args: &SexticArgs) -> LabResult<()> {
    let mut t = SelfTest::new("sextic::selftest");
    let c = PlaneConfig6::standard();
    t.check("15 double lines", c.double_lines.len() == 15);
    t.check("20 triple points", c.triple_points.len() == 20);
    t.check("4 triple points per line", c.double_lines.iter().all(|d| d.triple_points.len() == 4));
    let prod = (0..6).fold(MultiPoly::constant(4, C64::new(1.0, 0.0)), |a, i| a.mul(&c.plane(i)));
    t.check("Π pᵢ vanishes at triple points", sextic_general_position_check(&c, &prod) < 1e-14);
    let line = c.line_index(0, 1).expect("line 0-1");
    t.check(
        "ε_k = 0 rejected",
        deformation_step(&c, &fermat_sextic(), line, [2, 3, 4, 5], C64::new(0.0, 0.0), &[]).is_err(),
    );
    t.finish()
}
