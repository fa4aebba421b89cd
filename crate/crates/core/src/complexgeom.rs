//! Target geometries: projective space with the Fubini–Study metric
//! (normalized so a projective line has area `π`), the square torus
//! `C²/(Z⊕iZ)²` with its flat metric, and the blow-up chart at the origin.

use alloc::vec::Vec;

#[allow(unused_imports)] // shadowed by std float methods when std is linked
use num_traits::Float;
use num_traits::Zero;

use crate::error::err;
use crate::linalg::hdot;
use crate::{Result, C64};

/// Homogeneous coordinates normalized so that the coordinate of largest
/// modulus (lowest index on ties) is exactly `1`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjPoint {
    coords: Vec<C64>,
}

impl ProjPoint {
    pub fn new(coords: Vec<C64>) -> Result<Self> {
        if coords.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(err!(Degenerate, "complexgeom::ProjPoint", "non-finite coordinate"));
        }
        let pivot = pivot_index(&coords)
            .ok_or_else(|| err!(Degenerate, "complexgeom::ProjPoint", "all coordinates vanish"))?;
        let p = coords[pivot];
        let mut coords: Vec<C64> = coords.iter().map(|c| c / p).collect();
        coords[pivot] = C64::new(1.0, 0.0);
        Ok(ProjPoint { coords })
    }

    pub fn from_real(coords: &[f64]) -> Result<Self> {
        Self::new(coords.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    pub fn coords(&self) -> &[C64] {
        &self.coords
    }

    /// Projective dimension `n` (the point has `n + 1` coordinates).
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    /// Index of the coordinate equal to `1`.
    pub fn pivot(&self) -> usize {
        pivot_index(&self.coords).unwrap_or(0)
    }

    pub fn distance(&self, other: &ProjPoint) -> f64 {
        fs_distance(self, other)
    }
}

/// Index of the largest-modulus coordinate, lowest index on ties.
fn pivot_index(coords: &[C64]) -> Option<usize> {
    let mut best: Option<(usize, f64)> = None;
    for (i, c) in coords.iter().enumerate() {
        let m = c.norm();
        if m > 0.0 && best.is_none_or(|(_, b)| m > b) {
            best = Some((i, m));
        }
    }
    best.map(|(i, _)| i)
}

/// `Σ_{i<j} |aᵢbⱼ − aⱼbᵢ|²`, which equals `|a|²|b|² − |⟨a,b⟩|²` without the
/// cancellation.
fn wedge_norm_sqr(a: &[C64], b: &[C64]) -> f64 {
    let mut s = 0.0;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            s += (a[i] * b[j] - a[j] * b[i]).norm_sqr();
        }
    }
    s
}

/// Fubini–Study norm of the derivative of the projectivized map whose lift
/// takes the value `lift` with derivative `lift_deriv`:
/// `‖f′‖² = (|F|²|F′|² − |⟨F,F′⟩|²)/|F|⁴`.
pub fn fs_deriv_norm(lift: &[C64], lift_deriv: &[C64]) -> Result<f64> {
    let scale = lift.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if scale == 0.0 || !scale.is_finite() {
        return Err(err!(
            Domain,
            "complexgeom::fs_deriv_norm",
            "lift vector is zero or non-finite"
        ));
    }
    let f: Vec<C64> = lift.iter().map(|c| c / scale).collect();
    let fp: Vec<C64> = lift_deriv.iter().map(|c| c / scale).collect();
    let n2: f64 = f.iter().map(|c| c.norm_sqr()).sum();
    Ok(wedge_norm_sqr(&f, &fp).sqrt() / n2)
}

/// Fubini–Study geodesic distance `arccos(|⟨P,Q⟩|/(|P||Q|))`, in `[0, π/2]`.
///
/// Evaluated as `atan2(sin, cos)` so that nearby points keep full precision.
pub fn fs_distance(p: &ProjPoint, q: &ProjPoint) -> f64 {
    let a = p.coords();
    let b = q.coords();
    let cos = hdot(a, b).norm();
    let sin = wedge_norm_sqr(a, b).sqrt();
    sin.atan2(cos)
}

/// A point of `C²/(Z⊕iZ)²`, stored as its representative in `[0,1)⁴`
/// (order: `Re z₁, Im z₁, Re z₂, Im z₂`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorusPoint {
    rep: [f64; 4],
}

impl TorusPoint {
    pub fn rep(&self) -> [f64; 4] {
        self.rep
    }

    pub fn z1(&self) -> C64 {
        C64::new(self.rep[0], self.rep[1])
    }

    pub fn z2(&self) -> C64 {
        C64::new(self.rep[2], self.rep[3])
    }
}

fn frac(x: f64) -> f64 {
    let r = x - x.floor();
    if r >= 1.0 {
        0.0
    } else {
        r
    }
}

/// Nearest translate of `z` to the origin among the `3⁴` lattice translates
/// of its fundamental representative: returns the translated coordinates
/// `ζ` (so `|ζ|` is the flat distance to the basepoint class) and the
/// reduced point.
pub fn nearest_translate(z: [C64; 2]) -> ([C64; 2], TorusPoint) {
    let rep = [frac(z[0].re), frac(z[0].im), frac(z[1].re), frac(z[1].im)];
    let mut best = [0.0; 4];
    let mut best_d = f64::INFINITY;
    for code in 0..81u32 {
        let mut c = code;
        let mut v = [0.0; 4];
        for (k, vk) in v.iter_mut().enumerate() {
            let shift = (c % 3) as f64 - 1.0;
            c /= 3;
            *vk = rep[k] + shift;
        }
        let d = v.iter().map(|x| x * x).sum::<f64>();
        if d < best_d {
            best_d = d;
            best = v;
        }
    }
    (
        [C64::new(best[0], best[1]), C64::new(best[2], best[3])],
        TorusPoint { rep },
    )
}

/// Fundamental-domain representative of `z` and the flat distance from its
/// class to the class of the origin (the blow-up basepoint).
pub fn torus_reduce(z: [C64; 2]) -> (TorusPoint, f64) {
    let (zeta, p) = nearest_translate(z);
    let d = (zeta[0].norm_sqr() + zeta[1].norm_sqr()).sqrt();
    (p, d)
}

/// Point of the blow-up of `C²` at the origin in the chart
/// `(u, w) ↦ (u, u·w)`; `u = 0` is the exceptional divisor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlowupChartPoint {
    pub u: C64,
    pub w: C64,
}

impl BlowupChartPoint {
    /// Lift of a point off the exceptional divisor with `z₁ ≠ 0`.
    pub fn lift(z1: C64, z2: C64) -> Option<Self> {
        (!z1.is_zero()).then(|| BlowupChartPoint { u: z1, w: z2 / z1 })
    }

    pub fn is_exceptional(&self) -> bool {
        self.u.is_zero()
    }

    /// Image in `C²` under the blow-down map.
    pub fn blow_down(&self) -> [C64; 2] {
        [self.u, self.u * self.w]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use alloc::vec;
    use core::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    #[test]
    fn fs_deriv_norm_examples() {
        let one = c64(1.0, 0.0);
        let zero = c64(0.0, 0.0);
        assert_eq!(fs_deriv_norm(&[one, zero], &[zero, one]).unwrap(), 1.0);
        assert!((fs_deriv_norm(&[one, one], &[zero, one]).unwrap() - 0.5).abs() < 1e-15);
        assert_eq!(fs_deriv_norm(&[one, zero], &[zero, c64(7.0, 0.0)]).unwrap(), 7.0);
        assert!(fs_deriv_norm(&[zero, zero], &[one, one]).is_err());
    }

    #[test]
    fn fs_distance_examples() {
        let a = ProjPoint::from_real(&[1.0, 0.0]).unwrap();
        let b = ProjPoint::from_real(&[0.0, 1.0]).unwrap();
        let c = ProjPoint::from_real(&[1.0, 1.0]).unwrap();
        assert_eq!(fs_distance(&a, &a), 0.0);
        assert!((fs_distance(&a, &b) - FRAC_PI_2).abs() < 1e-15);
        assert!((fs_distance(&a, &c) - FRAC_PI_4).abs() < 1e-15);
    }

    #[test]
    fn normalization_pivots_on_largest_modulus() {
        let p = ProjPoint::new(vec![c64(1.0, 0.0), c64(0.0, 2.0)]).unwrap();
        assert_eq!(p.coords()[1], c64(1.0, 0.0));
        assert!((p.coords()[0] - c64(0.0, -0.5)).norm() < 1e-16);
        // tie: lowest index wins
        let q = ProjPoint::new(vec![c64(0.0, 3.0), c64(3.0, 0.0)]).unwrap();
        assert_eq!(q.coords()[0], c64(1.0, 0.0));
        assert!(ProjPoint::new(vec![c64(0.0, 0.0); 3]).is_err());
    }

    #[test]
    fn torus_reduce_examples() {
        let z = c64(0.0, 0.0);
        let (p, d) = torus_reduce([z, z]);
        assert_eq!(p.rep(), [0.0; 4]);
        assert_eq!(d, 0.0);
        let (p, d) = torus_reduce([c64(1.0, 0.0), c64(0.0, 1.0)]);
        assert_eq!(p.rep(), [0.0; 4]);
        assert_eq!(d, 0.0);
        let (p, d) = torus_reduce([c64(0.5, 0.0), c64(0.0, 0.5)]);
        assert_eq!(p.rep(), [0.5, 0.0, 0.0, 0.5]);
        assert!((d - 0.5f64.sqrt()).abs() < 1e-15);
        let (p, _) = torus_reduce([c64(-0.25, 3.75), c64(-1e-20, 0.0)]);
        assert_eq!(p.rep(), [0.75, 0.75, 0.0, 0.0]);
    }

    #[test]
    fn blowup_chart_round_trip() {
        let p = BlowupChartPoint::lift(c64(0.5, 0.1), c64(0.2, -0.3)).unwrap();
        let z = p.blow_down();
        assert!((z[0] - c64(0.5, 0.1)).norm() < 1e-16);
        assert!((z[1] - c64(0.2, -0.3)).norm() < 1e-15);
        assert!(BlowupChartPoint { u: c64(0.0, 0.0), w: c64(3.0, 0.0) }.is_exceptional());
        assert!(BlowupChartPoint::lift(c64(0.0, 0.0), c64(1.0, 0.0)).is_none());
    }
}
