//! Length–area analysis of holomorphic discs in the Fubini–Study metric.
//!
//! With `λ = ‖f′‖` the pullback density, the boundary length and the area
//! derivative of `f(D_r)` are
//!
//! ```text
//! l(r)  = ∫ λ(r,θ) r dθ
//! a′(r) = ∫ λ(r,θ)² r dθ
//! ```
//!
//! and Cauchy–Schwarz gives `l(r)² ≤ 2πr·a′(r)`. Angular integrals use the
//! trapezoid rule (spectral for smooth periodic integrands); `a(r)` is the
//! composite Simpson integral of `a′`. The discrete trapezoid sums obey the
//! same Cauchy–Schwarz inequality exactly, so the check below monitors
//! roundoff and bad samples rather than quadrature error.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)] // shadowed by std float methods when std is linked
use num_traits::Float;

use crate::complexgeom::ProjPoint;
use crate::error::err;
use crate::holomap::PolyMap;
use crate::poly::Poly;
use crate::quadrature::{gauss_legendre_on, simpson_panel};
use crate::{Result, C64};

pub const DEFAULT_NR: usize = 256;
pub const DEFAULT_NTHETA: usize = 256;
/// Default tolerance for the relative Cauchy–Schwarz violation.
pub const CS_TOLERANCE: f64 = 1e-4;

#[derive(Debug, Clone, PartialEq)]
pub struct RadialProfile {
    pub radii: Vec<f64>,
    pub thetas: Vec<f64>,
    /// `lambda[i * thetas.len() + j] = λ(radii[i], thetas[j])`
    pub lambda: Vec<f64>,
    pub l_of_r: Vec<f64>,
    pub a_of_r: Vec<f64>,
    /// `a′(r)` from the angular integral of `λ²r`.
    pub a_prime: Vec<f64>,
}

impl RadialProfile {
    pub fn lambda_at(&self, i: usize, j: usize) -> f64 {
        self.lambda[i * self.thetas.len() + j]
    }

    /// Index of the radius closest to `r`.
    pub fn nearest_index(&self, r: f64) -> usize {
        let mut best = 0;
        for (i, &x) in self.radii.iter().enumerate() {
            if (x - r).abs() < (self.radii[best] - r).abs() {
                best = i;
            }
        }
        best
    }
}

/// Trapezoid sums `(Σλ·r·dθ, Σλ²·r·dθ)` on the circle of radius `r`, plus the samples.
fn circle_sums(f: &PolyMap, r: f64, ntheta: usize) -> (f64, f64, Vec<f64>) {
    let dtheta = 2.0 * PI / ntheta as f64;
    let mut s1 = 0.0;
    let mut s2 = 0.0;
    let mut samples = Vec::with_capacity(ntheta);
    for j in 0..ntheta {
        let lam = f.density(C64::from_polar(r, j as f64 * dtheta));
        s1 += lam;
        s2 += lam * lam;
        samples.push(lam);
    }
    (s1 * r * dtheta, s2 * r * dtheta, samples)
}

/// Profile on `nr` uniform radii of `(0, ρ]`.
pub fn radial_profile(f: &PolyMap, nr: usize, ntheta: usize) -> Result<RadialProfile> {
    if nr < 16 || ntheta < 32 {
        return Err(err!(
            Precondition,
            "lengtharea::radial_profile",
            "need nr ≥ 16 and ntheta ≥ 32, got {} and {}",
            nr,
            ntheta
        ));
    }
    let radii: Vec<f64> = (1..=nr).map(|i| f.radius() * i as f64 / nr as f64).collect();
    radial_profile_on(f, &radii, ntheta)
}

/// Profile on arbitrary increasing radii in `(0, ρ]`. Each interval between
/// consecutive radii (and `[0, r₀]`) is one Simpson panel.
pub fn radial_profile_on(f: &PolyMap, radii: &[f64], ntheta: usize) -> Result<RadialProfile> {
    const OP: &str = "lengtharea::radial_profile";
    if radii.is_empty() || ntheta == 0 {
        return Err(err!(Precondition, OP, "empty grid"));
    }
    if radii[0] <= 0.0
        || radii.windows(2).any(|w| w[1] <= w[0])
        || *radii.last().unwrap() > f.radius() * (1.0 + 1e-12)
    {
        return Err(err!(Precondition, OP, "radii must increase within (0, {}]", f.radius()));
    }
    let thetas: Vec<f64> = (0..ntheta).map(|j| 2.0 * PI * j as f64 / ntheta as f64).collect();
    let mut lambda = Vec::with_capacity(radii.len() * ntheta);
    let mut l_of_r = Vec::with_capacity(radii.len());
    let mut a_of_r = Vec::with_capacity(radii.len());
    let mut a_prime = Vec::with_capacity(radii.len());

    let mut prev_r = 0.0;
    let mut prev_ap = 0.0;
    let mut area = 0.0;
    for &r in radii {
        let (l, ap, samples) = circle_sums(f, r, ntheta);
        let (_, ap_mid, _) = circle_sums(f, 0.5 * (prev_r + r), ntheta);
        area += simpson_panel(prev_r, r, prev_ap, ap_mid, ap);
        if !(l.is_finite() && ap.is_finite() && area.is_finite()) {
            return Err(err!(Numerical, OP, "non-finite length or area at r = {}", r));
        }
        lambda.extend(samples);
        l_of_r.push(l);
        a_prime.push(ap);
        a_of_r.push(area);
        prev_r = r;
        prev_ap = ap;
    }
    Ok(RadialProfile {
        radii: radii.to_vec(),
        thetas,
        lambda,
        l_of_r,
        a_of_r,
        a_prime,
    })
}

/// `max (l² − 2πr·a′)/max(l², ε_machine)` over the radii below the outermost.
pub fn length_area_inequality_check(p: &RadialProfile) -> f64 {
    let n = p.radii.len().saturating_sub(1).max(1).min(p.radii.len());
    (0..n)
        .map(|i| {
            let l2 = p.l_of_r[i] * p.l_of_r[i];
            (l2 - 2.0 * PI * p.radii[i] * p.a_prime[i]) / l2.max(f64::EPSILON)
        })
        .fold(f64::NEG_INFINITY, f64::max)
}

#[derive(Debug, Clone, PartialEq)]
pub struct AhlforsSelection {
    pub radii: Vec<f64>,
    /// `l(r)/a(r)` at the selected radii, strictly decreasing.
    pub ratios: Vec<f64>,
    /// `∫₁^{ρmax} (l/a)² dr/(2πr)`
    pub integral: f64,
    /// `1/a(1)`
    pub bound: f64,
    pub profile: RadialProfile,
}

/// Radii with strictly decreasing `l/a`, one candidate per dyadic window
/// `[2ᵏ, 2ᵏ⁺¹]`, plus the integral controlled by `1/a(1)`.
pub fn select_ahlfors_radii(f: &PolyMap, count: usize, ntheta: usize) -> Result<AhlforsSelection> {
    const OP: &str = "lengtharea::select_ahlfors_radii";
    let rho_max = f.radius();
    if rho_max < 1.0 {
        return Err(err!(Precondition, OP, "domain radius {} is below 1", rho_max));
    }
    // 64 uniform panels on (0,1], then 64 geometric panels per octave.
    let mut radii: Vec<f64> = (1..=64).map(|i| i as f64 / 64.0).collect();
    let octaves = rho_max.log2();
    let mut steps = (64.0 * octaves).ceil() as usize;
    steps += steps % 2;
    for i in 1..=steps {
        radii.push(rho_max.powf(i as f64 / steps as f64));
    }
    radii.dedup();
    let profile = radial_profile_on(f, &radii, ntheta)?;
    let i1 = 63;
    let a1 = profile.a_of_r[i1];
    if !(a1 > 0.0) {
        return Err(err!(Degenerate, OP, "a(1) = 0: the map is constant on the unit disc"));
    }

    // Composite Simpson in log r on the geometric part.
    let g = |i: usize| {
        let a = profile.a_of_r[i];
        let l = profile.l_of_r[i];
        l * l / (a * a) / (2.0 * PI)
    };
    let mut integral = 0.0;
    if steps > 0 {
        let h = rho_max.ln() / steps as f64;
        let mut k = 0;
        while k + 2 <= steps {
            integral += h / 3.0 * (g(i1 + k) + 4.0 * g(i1 + k + 1) + g(i1 + k + 2));
            k += 2;
        }
    }

    let mut sel_r = Vec::new();
    let mut sel_q: Vec<f64> = Vec::new();
    let mut lo = 1.0;
    while lo < rho_max && sel_r.len() < count {
        let hi = (2.0 * lo).min(rho_max);
        let best = (i1..profile.radii.len())
            .filter(|&i| profile.radii[i] >= lo * (1.0 - 1e-12) && profile.radii[i] <= hi * (1.0 + 1e-12))
            .map(|i| (i, profile.l_of_r[i] / profile.a_of_r[i]))
            .min_by(|a, b| a.1.total_cmp(&b.1));
        if let Some((i, q)) = best {
            if sel_q.last().is_none_or(|&last| q < last) {
                sel_r.push(profile.radii[i]);
                sel_q.push(q);
            }
        }
        lo *= 2.0;
    }
    Ok(AhlforsSelection {
        radii: sel_r,
        ratios: sel_q,
        integral,
        bound: 1.0 / a1,
        profile,
    })
}

/// `a(ρ)/l(ρ)` for the whole domain disc; `+∞` when the boundary has zero
/// length but the disc has positive area.
pub fn isoperimetric_ratio(f: &PolyMap, nr: usize, ntheta: usize) -> Result<f64> {
    let p = radial_profile(f, nr, ntheta)?;
    let a = *p.a_of_r.last().unwrap();
    let l = *p.l_of_r.last().unwrap();
    if l > 0.0 {
        Ok(a / l)
    } else if a > 0.0 {
        Ok(f64::INFINITY)
    } else {
        Err(err!(
            Degenerate,
            "lengtharea::isoperimetric_ratio",
            "zero length and zero area: constant map"
        ))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TotalArea {
    pub ladder: Vec<f64>,
    /// `a(ρ)` for each ladder radius, nondecreasing.
    pub areas: Vec<f64>,
    /// Area at the largest radius.
    pub estimate: f64,
    /// Largest component degree `d`; the total area of a degree-`d` rational curve in `P¹` is `dπ`.
    pub degree: usize,
    pub relative_error: f64,
}

/// `a(ρ)` along an increasing ladder of radii, integrating each segment
/// with `panels` Simpson panels.
pub fn total_area_estimate(f: &PolyMap, ladder: &[f64], panels: usize, ntheta: usize) -> Result<TotalArea> {
    const OP: &str = "lengtharea::total_area_estimate";
    if f.is_constant() {
        return Err(err!(Precondition, OP, "map is constant"));
    }
    if ladder.is_empty() || ladder[0] <= 0.0 || ladder.windows(2).any(|w| w[1] <= w[0]) {
        return Err(err!(Precondition, OP, "ladder must be positive and increasing"));
    }
    let mut radii = Vec::with_capacity(ladder.len() * panels);
    let mut marks = Vec::with_capacity(ladder.len());
    let mut prev = 0.0;
    for &rho in ladder {
        for k in 1..=panels {
            radii.push(prev + (rho - prev) * k as f64 / panels as f64);
        }
        *radii.last_mut().unwrap() = rho;
        marks.push(radii.len() - 1);
        prev = rho;
    }
    let p = radial_profile_on(f, &radii, ntheta)?;
    let areas: Vec<f64> = marks.iter().map(|&i| p.a_of_r[i]).collect();
    let estimate = *areas.last().unwrap();
    let degree = f.degree();
    let exact = PI * degree as f64;
    Ok(TotalArea {
        ladder: ladder.to_vec(),
        areas,
        estimate,
        degree,
        relative_error: (estimate - exact).abs() / exact,
    })
}

/// A finite family of disjoint cells in some target space; points outside
/// every cell fall into the complement.
pub trait Partition<P> {
    fn cell_count(&self) -> usize;
    fn locate(&self, p: &P) -> Option<usize>;
}

/// The whole target as a single cell.
#[derive(Debug, Clone, Copy, Default)]
pub struct WholeSpace;

impl<P> Partition<P> for WholeSpace {
    fn cell_count(&self) -> usize {
        1
    }
    fn locate(&self, _: &P) -> Option<usize> {
        Some(0)
    }
}

/// `P¹` split into `|z₂| ≤ |z₁|` (cell 0) and `|z₂| > |z₁|` (cell 1).
#[derive(Debug, Clone, Copy, Default)]
pub struct Hemispheres;

impl Partition<ProjPoint> for Hemispheres {
    fn cell_count(&self) -> usize {
        2
    }
    fn locate(&self, p: &ProjPoint) -> Option<usize> {
        let c = p.coords();
        Some(if c[1].norm() <= c[0].norm() { 0 } else { 1 })
    }
}

/// `k × k` boxes of `[re_min, re_max) × [im_min, im_max)` in the affine chart
/// `w = z_coord / z_base`; points off the chart or outside the window go to
/// the complement.
#[derive(Debug, Clone, Copy)]
pub struct ChartGrid {
    pub base: usize,
    pub coord: usize,
    pub re: (f64, f64),
    pub im: (f64, f64),
    pub k: usize,
}

impl Partition<ProjPoint> for ChartGrid {
    fn cell_count(&self) -> usize {
        self.k * self.k
    }
    fn locate(&self, p: &ProjPoint) -> Option<usize> {
        let c = p.coords();
        if c[self.base].norm() == 0.0 {
            return None;
        }
        let w = c[self.coord] / c[self.base];
        let fx = (w.re - self.re.0) / (self.re.1 - self.re.0);
        let fy = (w.im - self.im.0) / (self.im.1 - self.im.0);
        if !(0.0..1.0).contains(&fx) || !(0.0..1.0).contains(&fy) {
            return None;
        }
        let i = ((fx * self.k as f64) as usize).min(self.k - 1);
        let j = ((fy * self.k as f64) as usize).min(self.k - 1);
        Some(i * self.k + j)
    }
}

/// Discretized normalized current of integration `[f(D)]/a`.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalCurrent {
    /// One mass per cell, then the complement; nonnegative, summing to 1.
    pub masses: Vec<f64>,
    /// Area of the generating disc.
    pub area: f64,
    /// Boundary length of the generating disc.
    pub length: f64,
}

impl EmpiricalCurrent {
    pub fn complement_mass(&self) -> f64 {
        *self.masses.last().unwrap()
    }

    pub fn total_mass(&self) -> f64 {
        self.masses.iter().sum()
    }

    pub fn length_over_area(&self) -> f64 {
        self.length / self.area
    }
}

/// Accumulate weighted samples `(target point, area weight)` into cell masses.
pub fn current_from_samples<P, T, I>(samples: I, partition: &T, length: f64) -> Result<EmpiricalCurrent>
where
    T: Partition<P>,
    I: IntoIterator<Item = (P, f64)>,
{
    const OP: &str = "lengtharea::empirical_current";
    let cells = partition.cell_count();
    if cells == 0 {
        return Err(err!(Precondition, OP, "empty partition"));
    }
    let mut masses = vec![0.0; cells + 1];
    for (p, w) in samples {
        if !(w >= 0.0 && w.is_finite()) {
            return Err(err!(Numerical, OP, "invalid sample weight {}", w));
        }
        match partition.locate(&p) {
            Some(i) if i < cells => masses[i] += w,
            _ => masses[cells] += w,
        }
    }
    let total: f64 = masses.iter().sum();
    if !(total > 0.0) {
        return Err(err!(Degenerate, OP, "zero total area"));
    }
    for m in &mut masses {
        *m /= total;
    }
    Ok(EmpiricalCurrent {
        masses,
        area: total,
        length,
    })
}

/// Midpoint polar quadrature of `λ²·1[f(z) ∈ U]` over the domain disc.
pub fn empirical_current<T: Partition<ProjPoint>>(
    f: &PolyMap,
    partition: &T,
    nr: usize,
    ntheta: usize,
) -> Result<EmpiricalCurrent> {
    let rho = f.radius();
    let dr = rho / nr as f64;
    let dtheta = 2.0 * PI / ntheta as f64;
    let (length, _, _) = circle_sums(f, rho, ntheta);
    let mut samples = Vec::with_capacity(nr * ntheta);
    for i in 0..nr {
        let r = (i as f64 + 0.5) * dr;
        for j in 0..ntheta {
            let z = C64::from_polar(r, (j as f64 + 0.5) * dtheta);
            let lam = f.density(z);
            samples.push((f.eval(z)?, lam * lam * r * dr * dtheta));
        }
    }
    current_from_samples(samples, partition, length)
}

/// Real polynomial in the chart coordinates `w = x + iy`: terms `c·xᵃyᵇ`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RealPoly2 {
    pub terms: Vec<((u32, u32), f64)>,
}

impl RealPoly2 {
    pub fn new(terms: Vec<((u32, u32), f64)>) -> Self {
        RealPoly2 { terms }
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.terms
            .iter()
            .map(|&((a, b), c)| c * x.powi(a as i32) * y.powi(b as i32))
            .sum()
    }

    pub fn d_dx(&self) -> RealPoly2 {
        RealPoly2 {
            terms: self
                .terms
                .iter()
                .filter(|t| t.0 .0 > 0)
                .map(|&((a, b), c)| ((a - 1, b), c * a as f64))
                .collect(),
        }
    }

    pub fn d_dy(&self) -> RealPoly2 {
        RealPoly2 {
            terms: self
                .terms
                .iter()
                .filter(|t| t.0 .1 > 0)
                .map(|&((a, b), c)| ((a, b - 1), c * b as f64))
                .collect(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0 .0 + t.0 .1).max().unwrap_or(0)
    }
}

/// Polynomial 1-form `β = P dx + Q dy` in an affine chart.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct OneForm {
    pub p: RealPoly2,
    pub q: RealPoly2,
}

impl OneForm {
    /// Coefficient of `dx∧dy` in `dβ`, i.e. `Q_x − P_y`.
    pub fn exterior_derivative(&self) -> RealPoly2 {
        let mut terms = self.q.d_dx().terms;
        terms.extend(self.p.d_dy().terms.into_iter().map(|(e, c)| (e, -c)));
        RealPoly2 { terms }
    }

    pub fn degree(&self) -> u32 {
        self.p.degree().max(self.q.degree())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosednessReport {
    /// `∫_D f*(dβ)`
    pub area_integral: f64,
    /// `∮_{∂D} f*β`
    pub boundary_integral: f64,
    pub stokes_residual: f64,
    /// `|∫_D f*(dβ)|/a`
    pub raw_defect: f64,
    /// `|∫_D f*(dβ)| / (a · sup_{f(∂D)} ‖β‖)`, bounded by `l/a`.
    pub normalized_defect: f64,
    /// Fubini–Study pointwise sup of `β` along the boundary image.
    pub sup_beta: f64,
    pub area: f64,
    pub length: f64,
}

/// Quadrature sizes for [`closedness_defect`].
pub const CLOSEDNESS_GL_NODES: usize = 64;
pub const CLOSEDNESS_NTHETA: usize = 512;

/// Stokes check and closedness defect of the normalized current of `f(D)`
/// on the exact form `dβ`, with `β` living in the chart `w = F_coord/F_base`.
pub fn closedness_defect(f: &PolyMap, beta: &OneForm, base: usize, coord: usize) -> Result<ClosednessReport> {
    const OP: &str = "lengtharea::closedness_defect";
    let n = f.components().len();
    if base >= n || coord >= n || base == coord {
        return Err(err!(Precondition, OP, "invalid chart ({}, {}) for {} components", base, coord, n));
    }
    let fb = &f.components()[base];
    let fc = &f.components()[coord];
    let fb_d = fb.derivative();
    let fc_d = fc.derivative();
    if fb.is_zero() || fb.roots()?.iter().any(|z| z.norm() <= f.radius() * (1.0 + 1e-9)) {
        return Err(err!(Precondition, OP, "component {} vanishes on the closed disc", base));
    }
    let chart = |z: C64| -> Result<(C64, C64)> {
        let b = fb.eval(z);
        let lift_norm = f.lift(z).iter().map(|c| c.norm()).fold(0.0, f64::max);
        if !(b.norm() > 1e-8 * lift_norm) {
            return Err(err!(Precondition, OP, "image leaves the chart near z = {}", z));
        }
        let c = fc.eval(z);
        let w = c / b;
        let dw = (fc_d.eval(z) * b - c * fb_d.eval(z)) / (b * b);
        Ok((w, dw))
    };
    let dbeta = beta.exterior_derivative();
    let rho = f.radius();
    let dtheta = 2.0 * PI / CLOSEDNESS_NTHETA as f64;

    let mut area_integral = 0.0;
    let mut area = 0.0;
    for (r, wr) in gauss_legendre_on(CLOSEDNESS_GL_NODES, 0.0, rho) {
        for j in 0..CLOSEDNESS_NTHETA {
            let z = C64::from_polar(r, j as f64 * dtheta);
            let (w, dw) = chart(z)?;
            let jac = dw.norm_sqr();
            let lam = f.density(z);
            let weight = wr * r * dtheta;
            area_integral += dbeta.eval(w.re, w.im) * jac * weight;
            area += lam * lam * weight;
        }
    }

    let mut boundary_integral = 0.0;
    let mut length = 0.0;
    let mut sup_beta: f64 = 0.0;
    for j in 0..CLOSEDNESS_NTHETA {
        let theta = j as f64 * dtheta;
        let z = C64::from_polar(rho, theta);
        let (w, dw) = chart(z)?;
        let tangent = dw * z * C64::new(0.0, 1.0);
        let p = beta.p.eval(w.re, w.im);
        let q = beta.q.eval(w.re, w.im);
        boundary_integral += (p * tangent.re + q * tangent.im) * dtheta;
        length += f.density(z) * rho * dtheta;
        sup_beta = sup_beta.max(p.hypot(q) * (1.0 + w.norm_sqr()));
    }
    let raw_defect = area_integral.abs() / area;
    Ok(ClosednessReport {
        area_integral,
        boundary_integral,
        stokes_residual: (area_integral - boundary_integral).abs(),
        raw_defect,
        normalized_defect: if sup_beta > 0.0 { raw_defect / sup_beta } else { 0.0 },
        sup_beta,
        area,
        length,
    })
}

/// Convenience: `(1, z)`-type maps into `P¹` from a single affine polynomial.
pub fn affine_curve(p: Poly, radius: f64) -> Result<PolyMap> {
    PolyMap::new(vec![Poly::from_real(&[1.0]), p], radius)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity(radius: f64) -> PolyMap {
        affine_curve(Poly::from_real(&[0.0, 1.0]), radius).unwrap()
    }

    #[test]
    fn identity_profile_closed_forms() {
        let p = radial_profile(&identity(1.0), 64, 64).unwrap();
        for (i, &r) in p.radii.iter().enumerate() {
            let l = 2.0 * PI * r / (1.0 + r * r);
            let a = PI * r * r / (1.0 + r * r);
            assert!((p.l_of_r[i] - l).abs() < 1e-13);
            assert!((p.a_of_r[i] - a).abs() < 1e-8, "{} vs {}", p.a_of_r[i], a);
        }
        assert!((p.l_of_r.last().unwrap() - PI).abs() < 1e-13);
    }

    #[test]
    fn profile_rejects_small_grids() {
        assert!(radial_profile(&identity(1.0), 8, 64).is_err());
        assert!(radial_profile(&identity(1.0), 64, 8).is_err());
    }

    #[test]
    fn constant_component_gives_zero_profile() {
        let f = affine_curve(Poly::from_real(&[0.0]), 1.0).unwrap();
        let p = radial_profile(&f, 16, 32).unwrap();
        assert!(p.lambda.iter().all(|&x| x == 0.0));
        assert_eq!(*p.a_of_r.last().unwrap(), 0.0);
        assert!(isoperimetric_ratio(&f, 16, 32).is_err());
    }

    #[test]
    fn isoperimetric_ratio_of_identity() {
        let q = isoperimetric_ratio(&identity(1.0), 64, 64).unwrap();
        assert!((q - 0.5).abs() < 1e-8);
    }

    #[test]
    fn chart_grid_locates() {
        let g = ChartGrid { base: 0, coord: 1, re: (-1.0, 1.0), im: (-1.0, 1.0), k: 2 };
        let p = ProjPoint::new(vec![C64::new(1.0, 0.0), C64::new(0.5, -0.5)]).unwrap();
        assert_eq!(g.locate(&p), Some(2));
        let far = ProjPoint::new(vec![C64::new(1.0, 0.0), C64::new(5.0, 0.0)]).unwrap();
        assert_eq!(g.locate(&far), None);
    }

    #[test]
    fn empty_partition_rejected() {
        let g = ChartGrid { base: 0, coord: 1, re: (-1.0, 1.0), im: (-1.0, 1.0), k: 0 };
        assert!(empirical_current(&identity(1.0), &g, 8, 8).is_err());
    }

    #[test]
    fn exterior_derivative_of_x_dy() {
        let beta = OneForm { p: RealPoly2::default(), q: RealPoly2::new(vec![((1, 0), 1.0)]) };
        assert_eq!(beta.exterior_derivative().eval(0.3, 0.7), 1.0);
    }

    #[test]
    fn stokes_on_identity_chart() {
        let beta = OneForm { p: RealPoly2::default(), q: RealPoly2::new(vec![((1, 0), 1.0)]) };
        let r = closedness_defect(&identity(0.8), &beta, 0, 1).unwrap();
        assert!((r.area_integral - PI * 0.64).abs() < 1e-10);
        assert!(r.stokes_residual < 1e-10);
        assert!(r.normalized_defect <= r.length / r.area);
    }

    #[test]
    fn chart_pole_rejected() {
        let beta = OneForm { p: RealPoly2::default(), q: RealPoly2::new(vec![((1, 0), 1.0)]) };
        let f = PolyMap::new(vec![Poly::from_real(&[-0.5, 1.0]), Poly::from_real(&[1.0])], 1.0).unwrap();
        assert!(closedness_defect(&f, &beta, 0, 1).is_err());
        assert!(closedness_defect(&f, &beta, 1, 0).is_ok());
    }
}
