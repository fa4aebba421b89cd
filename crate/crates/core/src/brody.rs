//! Brody reparametrization: find the interior maximum of `δ(z)·‖f′(z)‖`,
//! recentre there and rescale to unit derivative at the origin. On the
//! half-radius disc around the maximum the rescaled map has derivative at
//! most `2`.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::f64::consts::PI;


use crate::complexgeom::fs_distance;
use crate::error::err;
use crate::holomap::{AffineReparam, PolyMap};
use crate::{Error, Result, C64};

/// Coarse-grid-then-stencil maximizer settings.
#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    pub radial: usize,
    pub angular: usize,
    /// Number of shrink rounds of the 9-point stencil.
    pub rounds: usize,
    pub shrink: f64,
    /// How many of the best coarse points are refined.
    pub candidates: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            radial: 64,
            angular: 64,
            rounds: 40,
            shrink: 1.0 / 3.0,
            candidates: 8,
        }
    }
}

/// Sample grid used for the rescaled-derivative bound.
pub const SUP_GRID_RADIAL: usize = 128;
pub const SUP_GRID_ANGULAR: usize = 64;
/// Grid for the Cauchy defect between consecutive rescaled maps.
pub const CAUCHY_GRID: usize = 32;

fn arg01(z: C64) -> f64 {
    let a = z.arg();
    if a < 0.0 {
        a + 2.0 * PI
    } else {
        a
    }
}

/// Larger value wins; ties go to smaller `|z|`, then smaller `arg z ∈ [0, 2π)`.
fn better(a: (C64, f64), b: (C64, f64)) -> bool {
    match a.1.partial_cmp(&b.1) {
        Some(Ordering::Greater) => true,
        Some(Ordering::Less) => false,
        _ => match a.0.norm().partial_cmp(&b.0.norm()) {
            Some(Ordering::Less) => true,
            Some(Ordering::Greater) => false,
            _ => arg01(a.0) < arg01(b.0),
        },
    }
}

/// Maximize a smooth objective on the open disc `|z| < radius`.
///
/// A polar grid (centre included) is scanned, the best `candidates` points and
/// every seed are refined by a 3×3 stencil that moves to its best point and
/// shrinks by `shrink` whenever the centre is already best. Non-finite
/// objective values count as `−∞`.
pub fn maximize_on_disc<F>(objective: F, radius: f64, seeds: &[C64], opts: SearchOptions) -> (C64, f64)
where
    F: Fn(C64) -> f64,
{
    let eval = |z: C64| {
        let v = objective(z);
        if v.is_finite() {
            v
        } else {
            f64::NEG_INFINITY
        }
    };
    let mut coarse: Vec<(C64, f64)> = Vec::with_capacity(opts.radial * opts.angular + 1);
    coarse.push((C64::new(0.0, 0.0), eval(C64::new(0.0, 0.0))));
    for i in 1..opts.radial {
        let r = radius * i as f64 / opts.radial as f64;
        for j in 0..opts.angular {
            let z = C64::from_polar(r, 2.0 * PI * j as f64 / opts.angular as f64);
            coarse.push((z, eval(z)));
        }
    }
    coarse.sort_by(|a, b| {
        if better(*a, *b) {
            Ordering::Less
        } else if better(*b, *a) {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    });

    let h0 = radius / opts.radial as f64;
    let starts = coarse
        .iter()
        .take(opts.candidates.max(1))
        .copied()
        .chain(seeds.iter().filter(|z| z.norm() < radius).map(|&z| (z, eval(z))));

    let mut best = coarse[0];
    for start in starts {
        let cand = refine(&eval, start, h0, radius, opts);
        if better(cand, best) {
            best = cand;
        }
    }
    best
}

fn refine<F: Fn(C64) -> f64>(eval: &F, start: (C64, f64), h0: f64, radius: f64, opts: SearchOptions) -> (C64, f64) {
    let mut cur = start;
    let mut h = h0;
    let mut shrinks = 0;
    let mut moves = 0;
    while shrinks < opts.rounds {
        let mut next = cur;
        for dx in [-1.0, 0.0, 1.0] {
            for dy in [-1.0, 0.0, 1.0] {
                if dx == 0.0 && dy == 0.0 {
                    continue;
                }
                let z = cur.0 + C64::new(dx * h, dy * h);
                if z.norm() >= radius {
                    continue;
                }
                let cand = (z, eval(z));
                if better(cand, next) {
                    next = cand;
                }
            }
        }
        if next.0 == cur.0 || moves > 4 * opts.rounds {
            h *= opts.shrink;
            shrinks += 1;
        } else {
            moves += 1;
        }
        cur = next;
    }
    cur
}

/// `δ(z) = ρ − |z|`, the distance to the boundary circle.
fn delta(f: &PolyMap, z: C64) -> f64 {
    f.radius() - z.norm()
}

/// Interior maximizer of `δ(z)·‖f′(z)‖` and the maximal value.
pub fn extremal_point(f: &PolyMap) -> Result<(C64, f64)> {
    extremal_point_with(f, SearchOptions::default())
}

pub fn extremal_point_with(f: &PolyMap, opts: SearchOptions) -> Result<(C64, f64)> {
    if f.is_constant() {
        return Err(err!(Precondition, "brody::extremal_point", "map is constant"));
    }
    let (a, v) = maximize_on_disc(|z| delta(f, z) * f.density(z), f.radius(), &[], opts);
    if !(v > 0.0) {
        return Err(err!(Precondition, "brody::extremal_point", "derivative vanishes on the search grid"));
    }
    Ok((a, v))
}

#[derive(Debug, Clone, PartialEq)]
pub struct BrodyReport {
    pub basepoint: C64,
    /// `1/‖f′(a)‖`
    pub scale: f64,
    /// `δ(a)‖f′(a)‖/2`
    pub rescaled_domain_radius: f64,
    pub sup_deriv_on_rescaled: f64,
    pub deriv_at_zero: f64,
    /// `δ(a)‖f′(a)‖`
    pub extremal_value: f64,
    /// `‖f′(0)‖` of the input map.
    pub deriv_at_origin: f64,
}

/// Sup of `‖g′‖` on the polar grid of the closed disc of radius `radius`.
pub fn grid_sup_deriv(g: &PolyMap, radial: usize, angular: usize) -> f64 {
    let mut sup = g.density(C64::new(0.0, 0.0));
    for i in 1..=radial {
        let r = g.radius() * i as f64 / radial as f64;
        for j in 0..angular {
            let z = C64::from_polar(r, 2.0 * PI * j as f64 / angular as f64);
            sup = sup.max(g.density(z));
        }
    }
    sup
}

/// One Brody reparametrization `g = f ∘ r`, `r(z) = a + z/‖f′(a)‖`.
pub fn brody_step(f: &PolyMap) -> Result<(PolyMap, BrodyReport)> {
    brody_step_with(f, SearchOptions::default())
}

pub fn brody_step_with(f: &PolyMap, opts: SearchOptions) -> Result<(PolyMap, BrodyReport)> {
    let (a, value) = extremal_point_with(f, opts)?;
    let speed = f.deriv_norm_at(a)?;
    let scale = 1.0 / speed;
    let radius = delta(f, a) * speed / 2.0;
    let g = f.reparametrize(AffineReparam::new(a, scale)?, radius)?;
    let report = BrodyReport {
        basepoint: a,
        scale,
        rescaled_domain_radius: radius,
        sup_deriv_on_rescaled: grid_sup_deriv(&g, SUP_GRID_RADIAL, SUP_GRID_ANGULAR),
        deriv_at_zero: g.deriv_norm_at(C64::new(0.0, 0.0))?,
        extremal_value: value,
        deriv_at_origin: f.deriv_norm_at(C64::new(0.0, 0.0))?,
    };
    Ok((g, report))
}

#[derive(Debug, Clone)]
pub struct BrodySequence {
    pub rescaled: Vec<PolyMap>,
    pub reports: Vec<BrodyReport>,
    /// `cauchy_defects[k]`: sup of the FS distance between rescaled maps
    /// `k` and `k+1` over a polar grid of `|z| ≤ min(1, R_k, R_{k+1})`.
    pub cauchy_defects: Vec<f64>,
}

/// Brody step on every member, plus consecutive Cauchy defects.
pub fn brody_sequence(f_seq: &[PolyMap]) -> Result<BrodySequence> {
    let mut rescaled = Vec::with_capacity(f_seq.len());
    let mut reports = Vec::with_capacity(f_seq.len());
    for (idx, f) in f_seq.iter().enumerate() {
        let (g, rep) = brody_step(f).map_err(|e| match e {
            Error::Precondition { detail, .. } => err!(
                Precondition,
                "brody::brody_sequence",
                "member {}: {}",
                idx,
                detail
            ),
            other => other,
        })?;
        rescaled.push(g);
        reports.push(rep);
    }
    let mut cauchy_defects = Vec::with_capacity(f_seq.len().saturating_sub(1));
    for k in 1..rescaled.len() {
        let r = 1f64
            .min(reports[k - 1].rescaled_domain_radius)
            .min(reports[k].rescaled_domain_radius);
        cauchy_defects.push(cauchy_defect(&rescaled[k - 1], &rescaled[k], r)?);
    }
    Ok(BrodySequence {
        rescaled,
        reports,
        cauchy_defects,
    })
}

fn cauchy_defect(g: &PolyMap, h: &PolyMap, radius: f64) -> Result<f64> {
    let mut sup: f64 = 0.0;
    for i in 0..=CAUCHY_GRID {
        let r = radius * i as f64 / CAUCHY_GRID as f64;
        let angles = if i == 0 { 1 } else { CAUCHY_GRID };
        for j in 0..angles {
            let z = C64::from_polar(r, 2.0 * PI * j as f64 / CAUCHY_GRID as f64);
            sup = sup.max(fs_distance(&g.eval(z)?, &h.eval(z)?));
        }
    }
    Ok(sup)
}
