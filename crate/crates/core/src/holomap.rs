//! Polynomial holomorphic maps `D_ρ → Pⁿ` given by a lift to `Cⁿ⁺¹`, with
//! exact coefficient-level calculus.

use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)] // shadowed by std float methods when std is linked
use num_traits::Float;
use num_traits::Zero;

use crate::complexgeom::{fs_deriv_norm, ProjPoint};
use crate::error::err;
use crate::hompoly::MultiPoly;
use crate::poly::Poly;
use crate::{Result, C64};

/// Largest component degree accepted by [`PolyMap::new`].
pub const DEFAULT_MAX_DEGREE: usize = 256;
/// Side of the polar grid on which common zeros of the components are ruled out.
pub const DEFAULT_DEGENERACY_GRID: usize = 64;

const DOMAIN_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy)]
pub struct MapOptions {
    pub max_degree: usize,
    pub degeneracy_grid: usize,
}

impl Default for MapOptions {
    fn default() -> Self {
        MapOptions {
            max_degree: DEFAULT_MAX_DEGREE,
            degeneracy_grid: DEFAULT_DEGENERACY_GRID,
        }
    }
}

/// Holomorphic map of the closed disc of radius `domain_radius` into `Pⁿ`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyMap {
    components: Vec<Poly>,
    derivs: Vec<Poly>,
    radius: f64,
}

impl PolyMap {
    pub fn new(components: Vec<Poly>, radius: f64) -> Result<Self> {
        Self::with_options(components, radius, MapOptions::default())
    }

    pub fn with_options(components: Vec<Poly>, radius: f64, opts: MapOptions) -> Result<Self> {
        const OP: &str = "holomap::PolyMap";
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(err!(Domain, OP, "domain radius must be positive, got {}", radius));
        }
        if components.len() < 2 {
            return Err(err!(Construction, OP, "need at least 2 components, got {}", components.len()));
        }
        if let Some(p) = components.iter().find(|p| p.degree() > opts.max_degree) {
            return Err(err!(
                Construction,
                OP,
                "component degree {} exceeds maximum {}",
                p.degree(),
                opts.max_degree
            ));
        }
        if components
            .iter()
            .flat_map(|p| p.coeffs())
            .any(|c| !c.re.is_finite() || !c.im.is_finite())
        {
            return Err(err!(Construction, OP, "non-finite coefficient"));
        }
        let derivs = components.iter().map(Poly::derivative).collect();
        let map = PolyMap {
            components,
            derivs,
            radius,
        };
        map.check_nondegenerate(opts.degeneracy_grid)?;
        Ok(map)
    }

    /// Rejects maps whose components (numerically) vanish together at a
    /// point of the `grid × grid` polar sample of the closed disc.
    fn check_nondegenerate(&self, grid: usize) -> Result<()> {
        let grid = grid.max(1);
        for i in 0..=grid {
            let r = self.radius * i as f64 / grid as f64;
            let bound = self
                .components
                .iter()
                .map(|p| p.majorant(r))
                .fold(0.0, f64::max);
            let angles = if i == 0 { 1 } else { grid };
            for j in 0..angles {
                let z = C64::from_polar(r, 2.0 * PI * j as f64 / grid as f64);
                let m = self
                    .components
                    .iter()
                    .map(|p| p.eval(z).norm())
                    .fold(0.0, f64::max);
                if !(m > 1e-13 * bound) {
                    return Err(err!(
                        Degenerate,
                        "holomap::PolyMap",
                        "all components vanish near z = {}",
                        z
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Dimension `n` of the target `Pⁿ`.
    pub fn target_dim(&self) -> usize {
        self.components.len() - 1
    }

    /// Largest component degree.
    pub fn degree(&self) -> usize {
        self.components.iter().map(Poly::degree).max().unwrap_or(0)
    }

    fn check_domain(&self, z: C64, op: &'static str) -> Result<()> {
        if z.norm() > self.radius * (1.0 + DOMAIN_SLACK) {
            return Err(err!(Domain, op, "|z| = {} exceeds domain radius {}", z.norm(), self.radius));
        }
        Ok(())
    }

    /// Lift values without the domain check.
    pub fn lift(&self, z: C64) -> Vec<C64> {
        self.components.iter().map(|p| p.eval(z)).collect()
    }

    /// Lift values and their exact derivatives.
    pub fn lift_with_deriv(&self, z: C64) -> (Vec<C64>, Vec<C64>) {
        let f = self.lift(z);
        let fp = self.derivs.iter().map(|p| p.eval(z)).collect();
        (f, fp)
    }

    pub fn eval(&self, z: C64) -> Result<ProjPoint> {
        self.check_domain(z, "holomap::eval")?;
        ProjPoint::new(self.lift(z)).map_err(|_| {
            err!(Degenerate, "holomap::eval", "all components vanish at z = {}", z)
        })
    }

    /// Fubini–Study norm of `f′(z)`.
    pub fn deriv_norm_at(&self, z: C64) -> Result<f64> {
        self.check_domain(z, "holomap::deriv_norm_at")?;
        let (f, fp) = self.lift_with_deriv(z);
        fs_deriv_norm(&f, &fp).map_err(|_| {
            err!(Degenerate, "holomap::deriv_norm_at", "all components vanish at z = {}", z)
        })
    }

    /// `‖f′(z)‖` for sample loops; `0` where the lift vanishes.
    pub(crate) fn density(&self, z: C64) -> f64 {
        let (f, fp) = self.lift_with_deriv(z);
        fs_deriv_norm(&f, &fp).unwrap_or(0.0)
    }

    /// True when the projectivized map is constant, i.e. every
    /// `FᵢFⱼ′ − FⱼFᵢ′` vanishes identically (up to roundoff).
    pub fn is_constant(&self) -> bool {
        let scale: f64 = self
            .components
            .iter()
            .map(|p| p.max_abs_coeff())
            .fold(0.0, f64::max);
        let tol = 1e-14 * scale * scale * (1 + self.degree()) as f64;
        for i in 0..self.components.len() {
            for j in i + 1..self.components.len() {
                let w = &(&self.components[i] * &self.derivs[j]) - &(&self.components[j] * &self.derivs[i]);
                if w.max_abs_coeff() > tol {
                    return false;
                }
            }
        }
        true
    }

    /// Exact coefficients of `f ∘ r` on the disc of radius `new_radius`.
    pub fn reparametrize(&self, r: AffineReparam, new_radius: f64) -> Result<PolyMap> {
        const OP: &str = "holomap::reparametrize";
        if !(new_radius > 0.0 && new_radius.is_finite()) {
            return Err(err!(Domain, OP, "new radius must be positive, got {}", new_radius));
        }
        let reach = r.center.norm() + r.scale * new_radius;
        if reach > self.radius * (1.0 + DOMAIN_SLACK) {
            return Err(err!(
                Domain,
                OP,
                "disc of radius {} maps out to |z| = {} beyond domain radius {}",
                new_radius,
                reach,
                self.radius
            ));
        }
        let s = C64::new(r.scale, 0.0);
        let components: Vec<Poly> = self
            .components
            .iter()
            .map(|p| p.compose_affine(r.center, s))
            .collect();
        let derivs = components.iter().map(Poly::derivative).collect();
        Ok(PolyMap {
            components,
            derivs,
            radius: new_radius,
        })
    }

    /// `z ↦ f(e^{iθ} z)` on the same disc.
    pub fn precompose_rotation(&self, theta: f64) -> PolyMap {
        let rot = C64::from_polar(1.0, theta);
        let components: Vec<Poly> = self
            .components
            .iter()
            .map(|p| p.compose_affine(C64::zero(), rot))
            .collect();
        let derivs = components.iter().map(Poly::derivative).collect();
        PolyMap {
            components,
            derivs,
            radius: self.radius,
        }
    }

    /// Same components on a different disc (no degeneracy re-check).
    pub fn with_radius(&self, radius: f64) -> Result<PolyMap> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(err!(Domain, "holomap::with_radius", "radius must be positive, got {}", radius));
        }
        Ok(PolyMap {
            components: self.components.clone(),
            derivs: self.derivs.clone(),
            radius,
        })
    }
}

/// `r(z) = center + scale·z` with `scale > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineReparam {
    pub center: C64,
    pub scale: f64,
}

impl AffineReparam {
    pub fn new(center: C64, scale: f64) -> Result<Self> {
        if !(scale > 0.0 && scale.is_finite()) {
            return Err(err!(Domain, "holomap::AffineReparam", "scale must be positive, got {}", scale));
        }
        Ok(AffineReparam { center, scale })
    }

    pub fn identity() -> Self {
        AffineReparam {
            center: C64::zero(),
            scale: 1.0,
        }
    }

    pub fn apply(&self, z: C64) -> C64 {
        self.center + z * self.scale
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &AffineReparam) -> AffineReparam {
        AffineReparam {
            center: self.center + inner.center * self.scale,
            scale: self.scale * inner.scale,
        }
    }
}

/// Distances from each zero of `h∘f` in the open domain disc to the
/// nearest zero of `h∘fₙ`.
#[derive(Debug, Clone, PartialEq)]
pub struct StabilityReport {
    pub limit_roots: Vec<C64>,
    /// `distances[n][k]`: from `limit_roots[k]` to the closest root of `h∘fₙ`
    /// (`+∞` if `h∘fₙ` has no root at all).
    pub distances: Vec<Vec<f64>>,
}

impl StabilityReport {
    /// Worst distance for each member of the sequence.
    pub fn max_distances(&self) -> Vec<f64> {
        self.distances
            .iter()
            .map(|d| d.iter().copied().fold(0.0, f64::max))
            .collect()
    }
}

/// Quantitative stability of intersections with the hypersurface `h = 0`.
pub fn intersection_stability(
    f_seq: &[PolyMap],
    f_limit: &PolyMap,
    h: &MultiPoly,
) -> Result<StabilityReport> {
    const OP: &str = "holomap::intersection_stability";
    if h.nvars() != f_limit.components.len()
        || f_seq.iter().any(|f| f.components.len() != h.nvars())
    {
        return Err(err!(
            Construction,
            OP,
            "hypersurface has {} variables but maps have {} components",
            h.nvars(),
            f_limit.components.len()
        ));
    }
    let pullback = |f: &PolyMap| h.substitute(&f.components);
    let limit = pullback(f_limit);
    let coeff_scale = f_limit
        .components
        .iter()
        .map(Poly::max_abs_coeff)
        .fold(0.0, f64::max)
        .max(1.0);
    let tol = 1e-14 * h.coefficient_scale() * coeff_scale.powi(h.degree() as i32);
    if limit.max_abs_coeff() <= tol {
        return Err(err!(
            Precondition,
            OP,
            "h∘f vanishes identically: the limit curve is contained in the hypersurface"
        ));
    }
    let limit_roots: Vec<C64> = limit
        .truncate_small_leading(1e-14)
        .roots()?
        .into_iter()
        .filter(|z| z.norm() < f_limit.radius)
        .collect();
    let mut distances = Vec::with_capacity(f_seq.len());
    for f in f_seq {
        let p = pullback(f);
        let roots = if p.max_abs_coeff() <= tol {
            Vec::new()
        } else {
            p.truncate_small_leading(1e-14).roots()?
        };
        let d = limit_roots
            .iter()
            .map(|z0| {
                roots
                    .iter()
                    .map(|z| (*z - z0).norm())
                    .fold(f64::INFINITY, f64::min)
            })
            .collect();
        distances.push(d);
    }
    Ok(StabilityReport {
        limit_roots,
        distances,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use alloc::vec;

    fn map(comps: &[&[f64]], radius: f64) -> PolyMap {
        PolyMap::new(comps.iter().map(|c| Poly::from_real(c)).collect(), radius).unwrap()
    }

    #[test]
    fn eval_examples() {
        let f = map(&[&[1.0], &[0.0, 1.0]], 3.0);
        assert_eq!(f.eval(c64(0.0, 0.0)).unwrap().coords(), &[c64(1.0, 0.0), c64(0.0, 0.0)]);
        let p = f.eval(c64(0.0, 2.0)).unwrap();
        assert_eq!(p.coords()[1], c64(1.0, 0.0));
        assert!((p.coords()[0] - c64(0.0, -0.5)).norm() < 1e-16);
        let g = map(&[&[1.0], &[0.0, 0.0, 3.0]], 1.0);
        let p = g.eval(c64(1.0, 0.0)).unwrap();
        assert!((p.coords()[0] - c64(1.0 / 3.0, 0.0)).norm() < 1e-16);
        assert_eq!(p.coords()[1], c64(1.0, 0.0));
    }

    #[test]
    fn eval_outside_domain_fails() {
        let f = map(&[&[1.0], &[0.0, 1.0]], 1.0);
        assert!(matches!(f.eval(c64(1.5, 0.0)), Err(crate::Error::Domain { .. })));
        assert!(f.deriv_norm_at(c64(0.0, -2.0)).is_err());
    }

    #[test]
    fn common_zero_is_degenerate() {
        let r = PolyMap::new(vec![Poly::from_real(&[0.0, 1.0]), Poly::from_real(&[0.0, 0.0, 1.0])], 1.0);
        assert!(matches!(r, Err(crate::Error::Degenerate { .. })));
        assert!(PolyMap::new(vec![Poly::from_real(&[1.0])], 1.0).is_err());
        assert!(PolyMap::new(vec![Poly::from_real(&[1.0]), Poly::from_real(&[0.0, 1.0])], -1.0).is_err());
    }

    #[test]
    fn derivative_norm_examples() {
        let f = map(&[&[1.0], &[0.0, 1.0]], 1.0);
        assert_eq!(f.deriv_norm_at(c64(0.0, 0.0)).unwrap(), 1.0);
        let f = map(&[&[1.0], &[0.0, 10.0]], 1.0);
        assert_eq!(f.deriv_norm_at(c64(0.0, 0.0)).unwrap(), 10.0);
        let z = c64(0.3, 0.1);
        let closed = 10.0 / (1.0 + 100.0 * z.norm_sqr());
        assert!((f.deriv_norm_at(z).unwrap() - closed).abs() < 1e-14);
        let f = map(&[&[1.0], &[0.0, 0.0, 1.0]], 1.0);
        assert_eq!(f.deriv_norm_at(c64(0.0, 0.0)).unwrap(), 0.0);
    }

    #[test]
    fn reparametrize_examples() {
        let n = 7.0;
        let f = map(&[&[1.0], &[0.0, 1.0]], 1.0);
        let g = f.reparametrize(AffineReparam::new(C64::zero(), 1.0 / n).unwrap(), n).unwrap();
        assert_eq!(g.components()[1], Poly::from_real(&[0.0, 1.0 / n]));
        assert_eq!(g.radius(), n);

        let f = map(&[&[1.0], &[0.0, 0.0, 1.0]], 3.0);
        let g = f.reparametrize(AffineReparam::new(c64(1.0, 0.0), 1.0).unwrap(), 1.0).unwrap();
        assert_eq!(g.components()[1], Poly::from_real(&[1.0, 2.0, 1.0]));

        let g = f.reparametrize(AffineReparam::identity(), 3.0).unwrap();
        assert_eq!(g, f);
    }

    #[test]
    fn reparametrize_rejects_escaping_disc() {
        let f = map(&[&[1.0], &[0.0, 1.0]], 1.0);
        let e = f
            .reparametrize(AffineReparam::new(c64(0.5, 0.0), 1.0).unwrap(), 0.6)
            .unwrap_err();
        assert!(alloc::format!("{e}").contains("0.6"));
    }

    #[test]
    fn constant_detection() {
        assert!(map(&[&[1.0], &[0.0]], 1.0).is_constant());
        assert!(map(&[&[1.0, 1.0], &[2.0, 2.0]], 0.5).is_constant());
        assert!(!map(&[&[1.0], &[0.0, 1e-3]], 1.0).is_constant());
    }

    #[test]
    fn stability_examples() {
        let h = MultiPoly::variable(2, 1);
        let limit = map(&[&[1.0], &[0.0, 1.0]], 1.0);
        let seq: Vec<PolyMap> = (1..=6)
            .map(|n| map(&[&[1.0], &[1.0 / n as f64, 1.0]], 1.0))
            .collect();
        let rep = intersection_stability(&seq, &limit, &h).unwrap();
        assert_eq!(rep.limit_roots.len(), 1);
        for (k, d) in rep.distances.iter().enumerate() {
            assert!((d[0] - 1.0 / (k + 1) as f64).abs() < 1e-14);
        }

        let same = vec![limit.clone(); 3];
        let rep = intersection_stability(&same, &limit, &h).unwrap();
        assert!(rep.max_distances().iter().all(|&d| d == 0.0));

        let limit = map(&[&[1.0], &[0.0, 0.0, 1.0]], 1.0);
        let seq: Vec<PolyMap> = [4.0, 16.0, 64.0]
            .iter()
            .map(|&n| map(&[&[1.0], &[-1.0 / n, 0.0, 1.0]], 1.0))
            .collect();
        let rep = intersection_stability(&seq, &limit, &h).unwrap();
        for (d, n) in rep.distances.iter().zip([4.0f64, 16.0, 64.0]) {
            for &x in d {
                assert!((x - 1.0 / n.sqrt()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn stability_rejects_curve_inside_hypersurface() {
        let h = MultiPoly::variable(2, 1);
        let limit = map(&[&[1.0], &[0.0]], 1.0);
        let e = intersection_stability(&[], &limit, &h).unwrap_err();
        assert!(matches!(e, crate::Error::Precondition { .. }));
    }
}
