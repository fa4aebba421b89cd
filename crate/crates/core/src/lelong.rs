//! Euclidean area of parametrized analytic curves inside balls of `Cⁿ` and
//! the monotonicity of `a(r)/r²`.

use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)] // shadowed by std float methods when std is linked
use num_traits::Float;

use crate::error::err;
use crate::poly::Poly;
use crate::quadrature::gauss_legendre_on;
use crate::{Result, C64};

pub const DEFAULT_RAYS: usize = 256;
pub const DEFAULT_RAY_SAMPLES: usize = 256;
const GL_NODES: usize = 16;
const BISECTIONS: usize = 80;
const PROPERNESS_GRID: usize = 512;

/// Polynomial curve `γ: D(0, param_radius) → Cⁿ` considered inside the ball `B(0, ball_radius)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BallCurve {
    components: Vec<Poly>,
    ball_radius: f64,
    param_radius: f64,
    through_origin: bool,
}

impl BallCurve {
    /// Checks that `γ` leaves the closed ball before the parameter circle,
    /// which stands in for properness of `γ ∩ B(0, ε)`.
    pub fn new(components: Vec<Poly>, ball_radius: f64, param_radius: f64) -> Result<Self> {
        const OP: &str = "lelong::BallCurve";
        if components.is_empty() {
            return Err(err!(Construction, OP, "no components"));
        }
        if !(ball_radius > 0.0 && ball_radius.is_finite() && param_radius > 0.0 && param_radius.is_finite()) {
            return Err(err!(Precondition, OP, "radii must be positive and finite"));
        }
        let mut curve = BallCurve {
            components,
            ball_radius,
            param_radius,
            through_origin: false,
        };
        for j in 0..PROPERNESS_GRID {
            let z = C64::from_polar(param_radius, 2.0 * PI * j as f64 / PROPERNESS_GRID as f64);
            let m = curve.modulus(z);
            if !(m > ball_radius) {
                return Err(err!(
                    Precondition,
                    OP,
                    "curve does not leave B(0, {}) before |z| = {} (|γ| = {} at z = {})",
                    ball_radius,
                    param_radius,
                    m,
                    z
                ));
            }
        }
        let scale: f64 = curve.components.iter().map(|p| p.max_abs_coeff()).fold(0.0, f64::max);
        curve.through_origin = curve.modulus(C64::new(0.0, 0.0)) <= 1e-12 * scale.max(1.0);
        Ok(curve)
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn ball_radius(&self) -> f64 {
        self.ball_radius
    }

    pub fn param_radius(&self) -> f64 {
        self.param_radius
    }

    pub fn through_origin(&self) -> bool {
        self.through_origin
    }

    pub fn eval(&self, z: C64) -> Vec<C64> {
        self.components.iter().map(|p| p.eval(z)).collect()
    }

    fn modulus(&self, z: C64) -> f64 {
        self.components.iter().map(|p| p.eval(z).norm_sqr()).sum::<f64>().sqrt()
    }

    /// `|γ′(z)|² = Σ |γᵢ′(z)|²`, the area density in the parameter plane.
    fn density(&self, derivs: &[Poly], z: C64) -> f64 {
        derivs.iter().map(|p| p.eval(z).norm_sqr()).sum()
    }

    /// `γ ↦ Uγ` for a matrix `U` given by rows.
    pub fn transform(&self, u: &[Vec<C64>]) -> Result<BallCurve> {
        let n = self.components.len();
        if u.len() != n || u.iter().any(|row| row.len() != n) {
            return Err(err!(Precondition, "lelong::BallCurve", "matrix must be {}×{}", n, n));
        }
        let comps = u
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&self.components)
                    .fold(Poly::zero(), |acc, (&c, p)| &acc + &p.scale(c))
            })
            .collect();
        BallCurve::new(comps, self.ball_radius, self.param_radius)
    }
}

/// Euclidean area of `γ` over `{z : |γ(z)| ≤ r}`, counted with parametrized multiplicity.
pub fn area_in_ball(c: &BallCurve, r: f64) -> Result<f64> {
    area_in_ball_with(c, r, DEFAULT_RAYS, DEFAULT_RAY_SAMPLES)
}

/// Per ray from the parameter origin: locate the crossings of `|γ| = r` by
/// sampling and bisection, then integrate `|γ′|² t dt` over the inside
/// segments with Gauss–Legendre. Rays are combined with the trapezoid rule.
pub fn area_in_ball_with(c: &BallCurve, r: f64, rays: usize, samples: usize) -> Result<f64> {
    const OP: &str = "lelong::area_in_ball";
    if !(r > 0.0 && r <= c.ball_radius * (1.0 + 1e-12)) {
        return Err(err!(Precondition, OP, "radius {} outside (0, {}]", r, c.ball_radius));
    }
    if rays == 0 || samples < 2 {
        return Err(err!(Precondition, OP, "need at least one ray and two samples per ray"));
    }
    let derivs: Vec<Poly> = c.components.iter().map(|p| p.derivative()).collect();
    let r2 = r * r;
    let rho = c.param_radius;
    let dtheta = 2.0 * PI / rays as f64;
    let mut total = 0.0;
    for j in 0..rays {
        let dir = C64::from_polar(1.0, j as f64 * dtheta);
        let g = |t: f64| {
            let z = dir * t;
            c.components.iter().map(|p| p.eval(z).norm_sqr()).sum::<f64>() - r2
        };
        let mut segments: Vec<(f64, f64)> = Vec::new();
        let mut t_prev = 0.0;
        let mut g_prev = g(0.0);
        let mut start = (g_prev <= 0.0).then_some(0.0);
        for k in 1..=samples {
            let t = rho * k as f64 / samples as f64;
            let gt = g(t);
            if (g_prev <= 0.0) != (gt <= 0.0) {
                let (mut lo, mut hi) = (t_prev, t);
                for _ in 0..BISECTIONS {
                    let mid = 0.5 * (lo + hi);
                    if (g(mid) <= 0.0) == (g_prev <= 0.0) {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                let cross = 0.5 * (lo + hi);
                match start.take() {
                    Some(s) => segments.push((s, cross)),
                    None => start = Some(cross),
                }
            }
            t_prev = t;
            g_prev = gt;
        }
        if let Some(s) = start {
            segments.push((s, rho));
        }
        for (a, b) in segments {
            for (t, w) in gauss_legendre_on(GL_NODES, a, b) {
                total += w * t * c.density(&derivs, dir * t) * dtheta;
            }
        }
    }
    if !total.is_finite() {
        return Err(err!(Numerical, OP, "non-finite area at r = {}", r));
    }
    Ok(total)
}

/// `a(r)/r²` for each radius.
pub fn monotonicity_profile(c: &BallCurve, radii: &[f64]) -> Result<Vec<f64>> {
    if radii.windows(2).any(|w| w[1] <= w[0]) {
        return Err(err!(Precondition, "lelong::monotonicity_profile", "radii must increase"));
    }
    radii.iter().map(|&r| Ok(area_in_ball(c, r)? / (r * r))).collect()
}

/// Largest relative drop `(q[i] − q[i+1])/q[i]` along a profile; `≤ 0` means nondecreasing.
pub fn max_relative_decrease(profile: &[f64]) -> f64 {
    profile
        .windows(2)
        .map(|w| (w[0] - w[1]) / w[0].abs().max(f64::MIN_POSITIVE))
        .fold(f64::NEG_INFINITY, f64::max)
}

/// `area(C ∩ B(0, ε))/(πε²)`.
pub fn lelong_bound_check(c: &BallCurve) -> Result<f64> {
    if !c.through_origin {
        return Err(err!(
            Precondition,
            "lelong::lelong_bound_check",
            "curve does not pass through the origin"
        ));
    }
    let eps = c.ball_radius;
    Ok(area_in_ball(c, eps)? / (PI * eps * eps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use alloc::vec;

    fn curve(comps: &[&[f64]], eps: f64, rho: f64) -> BallCurve {
        BallCurve::new(comps.iter().map(|c| Poly::from_real(c)).collect(), eps, rho).unwrap()
    }

    #[test]
    fn line_has_flat_area() {
        let c = curve(&[&[0.0, 1.0], &[0.0]], 1.0, 1.5);
        for r in [0.1, 0.5, 1.0] {
            let a = area_in_ball(&c, r).unwrap();
            assert!((a - PI * r * r).abs() < 1e-12, "{a}");
        }
        assert!((lelong_bound_check(&c).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn scaled_line_area_is_parametrization_free() {
        let c = curve(&[&[0.0, 2.0], &[0.0]], 1.0, 1.0);
        assert!((area_in_ball(&c, 0.7).unwrap() - PI * 0.49).abs() < 1e-12);
    }

    #[test]
    fn parabola_closed_form() {
        let c = curve(&[&[0.0, 1.0], &[0.0, 0.0, 1.0]], 1.0, 1.5);
        let t2 = (5f64.sqrt() - 1.0) / 2.0;
        let exact = t2 + 2.0 * t2 * t2;
        assert!((lelong_bound_check(&c).unwrap() - exact).abs() < 1e-10);
        let prof = monotonicity_profile(&c, &[0.2, 0.4, 0.6, 0.8, 1.0]).unwrap();
        assert!(max_relative_decrease(&prof) < 0.0);
    }

    #[test]
    fn diagonal_line_in_c3() {
        let s = 1.0 / 3f64.sqrt();
        let c = curve(&[&[0.0, s], &[0.0, s], &[0.0, s]], 0.5, 1.0);
        assert!((lelong_bound_check(&c).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_inputs() {
        let c = curve(&[&[0.3, 1.0], &[0.0]], 1.0, 2.0);
        assert!(!c.through_origin());
        assert!(lelong_bound_check(&c).is_err());
        assert!(area_in_ball(&c, 1.5).is_err());
        assert!(area_in_ball(&c, 0.0).is_err());
        // never leaves the ball
        assert!(BallCurve::new(vec![Poly::from_real(&[0.0, 0.1])], 1.0, 1.0).is_err());
    }

    #[test]
    fn unitary_invariance() {
        let c = curve(&[&[0.0, 1.0], &[0.0, 0.0, 1.0]], 1.0, 1.5);
        let s = 0.5f64.sqrt();
        let u = vec![vec![c64(s, 0.0), c64(0.0, s)], vec![c64(0.0, s), c64(s, 0.0)]];
        let d = c.transform(&u).unwrap();
        let a = area_in_ball(&c, 0.8).unwrap();
        let b = area_in_ball(&d, 0.8).unwrap();
        assert!((a - b).abs() < 1e-8 * a);
    }
}
