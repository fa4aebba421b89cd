//! Discs `f_n(z) = q + (nz, λnz)` along an irrational line of the square
//! torus `C²/(Z⊕iZ)²`, blown up at the class `p` of the origin.
//!
//! Metric model on the blow-up: flat everywhere, plus the Fubini–Study term
//! of the direction coordinate `w = ζ₂/ζ₁` inside the flat ball of radius
//! [`CHART_RADIUS`] around `p`, where `ζ` are nearest-translate coordinates.

use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)] // shadowed by std float methods when std is linked
use num_traits::Float;

use crate::brody::{maximize_on_disc, SearchOptions};
use crate::complexgeom::{nearest_translate, TorusPoint};
use crate::error::err;
use crate::lengtharea::{current_from_samples, EmpiricalCurrent, Partition};
use crate::{Result, C64};

pub const CHART_RADIUS: f64 = 0.2;
/// Rational approximations with denominators up to this bound are checked.
pub const MAX_DENOMINATOR: u64 = 1_000_000;
const SEED_COUNT: usize = 16;

/// `(√5 − 1)/2`
pub fn golden_slope() -> f64 {
    (5f64.sqrt() - 1.0) / 2.0
}

/// Offset used when a disc should miss `p`.
pub fn generic_offset() -> [C64; 2] {
    [C64::new(0.31, 0.17), C64::new(0.23, 0.41)]
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineDiscScenario {
    lambda: f64,
    n: u32,
    offset: [C64; 2],
}

impl LineDiscScenario {
    /// Rejects `n = 0`, non-finite input and slopes within a few ulps of a
    /// fraction with denominator at most [`MAX_DENOMINATOR`].
    pub fn new(lambda: f64, n: u32, offset: [C64; 2]) -> Result<Self> {
        const OP: &str = "winkelmann::LineDiscScenario";
        if n == 0 {
            return Err(err!(Precondition, OP, "n must be ≥ 1"));
        }
        if !lambda.is_finite() || offset.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(err!(Precondition, OP, "non-finite parameters"));
        }
        if let Some((p, q)) = rational_approximation(lambda) {
            return Err(err!(
                Precondition,
                OP,
                "slope {} is rational to working precision ({}/{})",
                lambda,
                p,
                q
            ));
        }
        Ok(LineDiscScenario { lambda, n, offset })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn offset(&self) -> [C64; 2] {
        self.offset
    }

    pub fn with_n(&self, n: u32) -> Result<Self> {
        Self::new(self.lambda, n, self.offset)
    }

    /// `q + (nz, λnz)` before reduction.
    pub fn point_in_c2(&self, z: C64) -> [C64; 2] {
        let u = z * self.n as f64;
        [self.offset[0] + u, self.offset[1] + u * self.lambda]
    }

    /// Constant flat derivative norm `n·√(1 + λ²)`.
    pub fn flat_deriv_norm(&self) -> f64 {
        self.n as f64 * (1.0 + self.lambda * self.lambda).sqrt()
    }

    /// Flat area `πn²(1 + λ²)` of `f_n(D)`.
    pub fn flat_area(&self) -> f64 {
        let v = self.flat_deriv_norm();
        PI * v * v
    }
}

/// Continued-fraction convergent `p/q` (with `q ≤ MAX_DENOMINATOR`) lying
/// within a few ulps of `x`, if any.
pub fn rational_approximation(x: f64) -> Option<(i64, u64)> {
    let tol = 4.0 * f64::EPSILON * x.abs().max(1.0);
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut r = x;
    for _ in 0..64 {
        let a = r.floor();
        let ai = a as i128;
        let h2 = ai * h1 + h0;
        let k2 = ai * k1 + k0;
        if k2 > MAX_DENOMINATOR as i128 {
            return None;
        }
        if (x - h2 as f64 / k2 as f64).abs() <= tol {
            return Some((h2 as i64, k2 as u64));
        }
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        let frac = r - a;
        if frac == 0.0 {
            return None;
        }
        r = 1.0 / frac;
    }
    None
}

/// `z ↦ [q + (nz, λnz)]` in the torus.
pub fn line_disc(s: &LineDiscScenario, z: C64) -> TorusPoint {
    nearest_translate(s.point_in_c2(z)).1
}

/// Norm of the derivative of the lifted disc in the chart metric model.
pub fn lift_deriv_norm(s: &LineDiscScenario, z: C64) -> f64 {
    let flat = s.flat_deriv_norm();
    let fs = fs_term(s, z);
    (flat * flat + fs * fs).sqrt()
}

/// `|w′|/(1 + |w|²) = n·|λζ₁ − ζ₂|/|ζ|²` inside the chart ball, `0` outside.
pub fn fs_term(s: &LineDiscScenario, z: C64) -> f64 {
    let (zeta, _) = nearest_translate(s.point_in_c2(z));
    let d2 = zeta[0].norm_sqr() + zeta[1].norm_sqr();
    if d2 >= CHART_RADIUS * CHART_RADIUS {
        return 0.0;
    }
    let num = (zeta[0] * s.lambda - zeta[1]).norm();
    if num == 0.0 {
        0.0
    } else {
        s.n as f64 * num / d2
    }
}

/// Flat distance from `f_n(z)` to `p`.
pub fn distance_to_p(s: &LineDiscScenario, z: C64) -> f64 {
    let (zeta, _) = nearest_translate(s.point_in_c2(z));
    (zeta[0].norm_sqr() + zeta[1].norm_sqr()).sqrt()
}

/// `k × k` boxes of the fundamental square in two chosen real coordinates
/// (`0..4` = `Re z₁, Im z₁, Re z₂, Im z₂`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorusBoxes {
    pub axes: (usize, usize),
    pub k: usize,
}

impl Partition<TorusPoint> for TorusBoxes {
    fn cell_count(&self) -> usize {
        self.k * self.k
    }

    fn locate(&self, p: &TorusPoint) -> Option<usize> {
        let r = p.rep();
        let a = ((r[self.axes.0] * self.k as f64) as usize).min(self.k - 1);
        let b = ((r[self.axes.1] * self.k as f64) as usize).min(self.k - 1);
        Some(a * self.k + b)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EquidistributionReport {
    pub current: EmpiricalCurrent,
    /// `max |mᵢ − 1/k²|·k²`
    pub max_relative_deviation: f64,
}

/// Default Cartesian grid size for [`equidistribution_report`].
pub fn default_grid(n: u32) -> usize {
    32 * n as usize + 256
}

/// Flat-area distribution of `f_n(D)` over torus boxes, by the midpoint rule
/// on a `grid × grid` Cartesian grid of the parameter square clipped to `D`.
pub fn equidistribution_report(s: &LineDiscScenario, boxes: TorusBoxes, grid: usize) -> Result<EquidistributionReport> {
    const OP: &str = "winkelmann::equidistribution_report";
    if boxes.k < 2 || boxes.axes.0 > 3 || boxes.axes.1 > 3 || boxes.axes.0 == boxes.axes.1 {
        return Err(err!(Precondition, OP, "need k ≥ 2 and two distinct axes in 0..4"));
    }
    if grid == 0 {
        return Err(err!(Precondition, OP, "empty grid"));
    }
    let h = 2.0 / grid as f64;
    let w = s.flat_area() / PI * h * h;
    let samples = (0..grid).flat_map(move |i| {
        let x = -1.0 + (i as f64 + 0.5) * h;
        (0..grid).filter_map(move |j| {
            let y = -1.0 + (j as f64 + 0.5) * h;
            (x * x + y * y < 1.0).then(|| (line_disc(s, C64::new(x, y)), w))
        })
    });
    let length = 2.0 * PI * s.flat_deriv_norm();
    let current = current_from_samples(samples, &boxes, length)?;
    let k2 = (boxes.k * boxes.k) as f64;
    let max_relative_deviation = current.masses[..boxes.k * boxes.k]
        .iter()
        .map(|m| (m * k2 - 1.0).abs())
        .fold(0.0, f64::max);
    Ok(EquidistributionReport {
        current,
        max_relative_deviation,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocusRow {
    pub n: u32,
    pub argmax: C64,
    pub dist_to_p: f64,
    pub lift_norm: f64,
    /// Distance to `p` at the maximizer with the Fubini–Study term off.
    pub control_dist: f64,
}

/// Closest approaches of the line to lattice translates of `p` that the disc
/// reaches, as starting points for the maximizer.
fn near_miss_seeds(s: &LineDiscScenario) -> Vec<C64> {
    let n = s.n as i64;
    let lam = s.lambda;
    let q = s.offset;
    let nf = s.n as f64;
    let mut seeds: Vec<(f64, C64)> = Vec::new();
    for a in -(n + 2)..=(n + 2) {
        for b in -(n + 2)..=(n + 2) {
            let c1 = q[0] + C64::new(a as f64, b as f64);
            let t = c1 * lam - q[1];
            let c2 = q[1] + C64::new(t.re.round(), t.im.round());
            let u = -(c1 + c2 * lam) / (1.0 + lam * lam);
            let z = u / nf;
            if z.norm() < 1.0 {
                let v = (1.0 - z.norm()) * lift_deriv_norm(s, z);
                seeds.push((v, z));
            }
        }
    }
    seeds.sort_by(|x, y| y.0.total_cmp(&x.0));
    seeds.truncate(SEED_COUNT);
    seeds.into_iter().map(|x| x.1).collect()
}

/// Maximizer of `δ(z)·lift_deriv_norm` and, as control, of `δ(z)·flat`, for each `n`.
pub fn brody_locus_report(s: &LineDiscScenario, ladder: &[u32]) -> Result<Vec<LocusRow>> {
    if ladder.windows(2).any(|w| w[1] <= w[0]) {
        return Err(err!(Precondition, "winkelmann::brody_locus_report", "ladder must increase"));
    }
    let opts = SearchOptions::default();
    ladder
        .iter()
        .map(|&n| {
            let sn = s.with_n(n)?;
            let seeds = near_miss_seeds(&sn);
            let (a, _) = maximize_on_disc(|z| (1.0 - z.norm()) * lift_deriv_norm(&sn, z), 1.0, &seeds, opts);
            let flat = sn.flat_deriv_norm();
            let (c, _) = maximize_on_disc(|z| (1.0 - z.norm()) * flat, 1.0, &[], opts);
            Ok(LocusRow {
                n,
                argmax: a,
                dist_to_p: distance_to_p(&sn, a),
                lift_norm: lift_deriv_norm(&sn, a),
                control_dist: distance_to_p(&sn, c),
            })
        })
        .collect()
}

/// Running minimum of a sequence.
pub fn running_min(xs: &[f64]) -> Vec<f64> {
    let mut m = f64::INFINITY;
    xs.iter()
        .map(|&x| {
            m = m.min(x);
            m
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    fn scenario(n: u32, q: [C64; 2]) -> LineDiscScenario {
        LineDiscScenario::new(golden_slope(), n, q).unwrap()
    }

    const ZERO: [C64; 2] = [C64 { re: 0.0, im: 0.0 }, C64 { re: 0.0, im: 0.0 }];

    #[test]
    fn rational_slopes_rejected() {
        assert!(LineDiscScenario::new(0.5, 1, ZERO).is_err());
        assert!(LineDiscScenario::new(0.3, 1, ZERO).is_err());
        assert!(LineDiscScenario::new(355.0 / 113.0, 1, ZERO).is_err());
        assert!(LineDiscScenario::new(golden_slope(), 1, ZERO).is_ok());
        assert!(LineDiscScenario::new(2f64.sqrt(), 1, ZERO).is_ok());
        assert!(LineDiscScenario::new(golden_slope(), 0, ZERO).is_err());
    }

    #[test]
    fn line_disc_examples() {
        let s = scenario(1, ZERO);
        assert_eq!(line_disc(&s, c64(0.0, 0.0)).rep(), [0.0; 4]);
        let r = line_disc(&s, c64(1.0, 0.0)).rep();
        assert_eq!(r[0], 0.0);
        assert!((r[2] - golden_slope()).abs() < 1e-15);
        let s7 = scenario(7, ZERO);
        assert!((s7.flat_area() - PI * 49.0 * (1.0 + golden_slope().powi(2))).abs() < 1e-10);
    }

    #[test]
    fn disc_through_p_has_no_fs_term_nearby() {
        let s = scenario(3, ZERO);
        for z in [c64(0.0, 0.0), c64(0.01, 0.02), c64(-0.03, 0.0)] {
            assert_eq!(lift_deriv_norm(&s, z), s.flat_deriv_norm());
        }
    }

    #[test]
    fn near_miss_blows_up_the_lift() {
        // The disc passes p at perpendicular distance d.
        let lam = golden_slope();
        let d = 0.005;
        let k = d / (1.0 + lam * lam).sqrt();
        let q = [c64(-lam * k, 0.0), c64(k, 0.0)];
        let s = scenario(5, q);
        let (_, v) = maximize_on_disc(|z| lift_deriv_norm(&s, z), 1.0, &[c64(0.0, 0.0)], SearchOptions::default());
        assert!(v > 10.0 * 5.0, "{v}");
    }

    #[test]
    fn far_from_p_is_flat() {
        let s = scenario(1, [c64(0.5, 0.5), c64(0.5, 0.5)]);
        assert_eq!(lift_deriv_norm(&s, c64(0.0, 0.0)), s.flat_deriv_norm());
    }

    #[test]
    fn small_n_equidistribution_is_poor() {
        let s = scenario(1, ZERO);
        let r = equidistribution_report(&s, TorusBoxes { axes: (0, 2), k: 4 }, 256).unwrap();
        assert!((r.current.total_mass() - 1.0).abs() < 1e-12);
        assert!(r.max_relative_deviation > 0.5);
        assert!(equidistribution_report(&s, TorusBoxes { axes: (0, 2), k: 1 }, 256).is_err());
    }

    #[test]
    fn control_stays_at_centre() {
        let s = scenario(10, generic_offset());
        let rows = brody_locus_report(&s, &[10, 20]).unwrap();
        for r in rows {
            assert!((r.control_dist - 0.346f64.sqrt()).abs() < 1e-12);
        }
    }
}
