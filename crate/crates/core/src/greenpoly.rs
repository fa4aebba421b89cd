//! Five lines in `P²`, the embedding `P² → P⁴` by their equations, the
//! power maps `F_n` and the polyhedra
//! `X_ε = {z : every triple of coordinates has one of modulus ≥ ε‖z‖∞}`.

use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)] // shadowed by std float methods when std is linked
use num_traits::Float;
use rand::Rng;

use crate::complexgeom::ProjPoint;
use crate::error::err;
use crate::linalg::{apply_form, normalized_det};
use crate::quadrature::halton;
use crate::{Result, C64};

/// Normalized 3×3 determinant threshold for general position.
pub const GENERAL_POSITION_TOL: f64 = 1e-9;
/// Tolerance for "modulus equals the max" in face detection.
pub const FACE_TOL: f64 = 1e-9;
/// Estimates below this are flagged as nearly degenerate.
pub const NEAR_DEGENERATE: f64 = 1e-3;

/// The ten 3-element subsets of `{0,…,4}` in lexicographic order.
pub const TRIPLES: [[usize; 3]; 10] = [
    [0, 1, 2],
    [0, 1, 3],
    [0, 1, 4],
    [0, 2, 3],
    [0, 2, 4],
    [0, 3, 4],
    [1, 2, 3],
    [1, 2, 4],
    [1, 3, 4],
    [2, 3, 4],
];

#[derive(Debug, Clone, PartialEq)]
pub struct LineConfig5 {
    forms: [[C64; 3]; 5],
}

impl LineConfig5 {
    /// Rejects configurations with a (numerically) triple point.
    pub fn new(forms: [[C64; 3]; 5]) -> Result<Self> {
        for t in TRIPLES {
            let rows: Vec<Vec<C64>> = t.iter().map(|&i| forms[i].to_vec()).collect();
            let d = normalized_det(&rows);
            if !(d > GENERAL_POSITION_TOL) {
                return Err(err!(
                    GeneralPosition,
                    "greenpoly::LineConfig5",
                    "lines {:?} are concurrent (normalized determinant {:e})",
                    [t[0] + 1, t[1] + 1, t[2] + 1],
                    d
                ));
            }
        }
        Ok(LineConfig5 { forms })
    }

    pub fn from_real(forms: [[f64; 3]; 5]) -> Result<Self> {
        Self::new(forms.map(|f| f.map(|x| C64::new(x, 0.0))))
    }

    /// `(x, y, z, x+y+z, x+2y+3z)`
    pub fn standard() -> Self {
        Self::from_real([
            [1.0, 0.0, 0.0],
            [0.0, 1.0, 0.0],
            [0.0, 0.0, 1.0],
            [1.0, 1.0, 1.0],
            [1.0, 2.0, 3.0],
        ])
        .expect("standard configuration is in general position")
    }

    pub fn forms(&self) -> &[[C64; 3]; 5] {
        &self.forms
    }

    /// The ten double points `lᵢ = lⱼ = 0`.
    pub fn double_points(&self) -> Vec<ProjPoint> {
        let mut out = Vec::with_capacity(10);
        for i in 0..5 {
            for j in i + 1..5 {
                let a = self.forms[i];
                let b = self.forms[j];
                let v = alloc::vec![
                    a[1] * b[2] - a[2] * b[1],
                    a[2] * b[0] - a[0] * b[2],
                    a[0] * b[1] - a[1] * b[0],
                ];
                out.push(ProjPoint::new(v).expect("distinct lines meet in a point"));
            }
        }
        out
    }
}

fn image_values(config: &LineConfig5, z: &[C64]) -> Vec<C64> {
    config.forms.iter().map(|f| apply_form(f, z)).collect()
}

/// `z ↦ [l₁(z):…:l₅(z)]`.
pub fn embed(config: &LineConfig5, z: &ProjPoint) -> Result<ProjPoint> {
    if z.coords().len() != 3 {
        return Err(err!(Precondition, "greenpoly::embed", "expected a point of P²"));
    }
    let v = image_values(config, z.coords());
    let scale: f64 = config
        .forms
        .iter()
        .map(|f| f.iter().map(|c| c.norm()).sum::<f64>())
        .fold(0.0, f64::max);
    let m = v.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if !(m > 1e-14 * scale) {
        return Err(err!(
            Degenerate,
            "greenpoly::embed",
            "image of {:?} is numerically zero",
            z.coords()
        ));
    }
    ProjPoint::new(v)
}

/// `F_n(z) = [z₁ⁿ:…:z₅ⁿ]`.
pub fn power_map(n: u32, z: &ProjPoint) -> Result<ProjPoint> {
    if n == 0 {
        return Err(err!(Precondition, "greenpoly::power_map", "n must be ≥ 1"));
    }
    ProjPoint::new(z.coords().iter().map(|c| c.powu(n)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Membership {
    pub member: bool,
    /// Triple attaining the minimal margin (0-based indices).
    pub worst_triple: [usize; 3],
    /// `min over triples of (max |z_t| − ε‖z‖∞)`, relative to `‖z‖∞`.
    pub margin: f64,
}

fn moduli(z: &ProjPoint) -> Result<[f64; 5]> {
    let c = z.coords();
    if c.len() != 5 {
        return Err(err!(Precondition, "greenpoly::polyhedron_membership", "expected a point of P⁴"));
    }
    Ok([c[0].norm(), c[1].norm(), c[2].norm(), c[3].norm(), c[4].norm()])
}

pub fn polyhedron_membership(z: &ProjPoint, epsilon: f64) -> Result<Membership> {
    if !(epsilon > 0.0 && epsilon <= 1.0) {
        return Err(err!(
            Precondition,
            "greenpoly::polyhedron_membership",
            "epsilon {} outside (0, 1]",
            epsilon
        ));
    }
    let m = moduli(z)?;
    let norm = m.iter().cloned().fold(0.0, f64::max);
    let mut worst = TRIPLES[0];
    let mut margin = f64::INFINITY;
    for t in TRIPLES {
        let v = (m[t[0]].max(m[t[1]]).max(m[t[2]]) - epsilon * norm) / norm;
        if v < margin {
            margin = v;
            worst = t;
        }
    }
    Ok(Membership {
        member: margin >= 0.0,
        worst_triple: worst,
        margin,
    })
}

/// Faces `X_{i,j,k} = (|zᵢ| = |zⱼ| = |z_k| = ‖z‖∞)` containing `z ∈ X₁`.
pub fn face_decomposition(z: &ProjPoint) -> Result<Vec<[usize; 3]>> {
    let mem = polyhedron_membership(z, 1.0)?;
    if mem.margin < -FACE_TOL {
        return Err(err!(
            Precondition,
            "greenpoly::face_decomposition",
            "point is not in X₁ (margin {:e} on triple {:?})",
            mem.margin,
            mem.worst_triple
        ));
    }
    let m = moduli(z)?;
    let norm = m.iter().cloned().fold(0.0, f64::max);
    let maximal = |i: usize| m[i] >= norm * (1.0 - FACE_TOL);
    Ok(TRIPLES
        .iter()
        .filter(|t| t.iter().all(|&i| maximal(i)))
        .copied()
        .collect())
}

/// `(third largest |lᵢ(z)|)/(largest |lᵢ(z)|)`.
pub fn third_over_max(config: &LineConfig5, z: &[C64]) -> f64 {
    let mut m: Vec<f64> = image_values(config, z).iter().map(|c| c.norm()).collect();
    m.sort_by(|a, b| b.total_cmp(a));
    if m[0] > 0.0 {
        m[2] / m[0]
    } else {
        0.0
    }
}

/// Unit-sphere representative of the `index`-th quasi-random point of `P²`,
/// equidistributed for the Fubini–Study volume.
pub fn sample_p2(index: u64) -> ProjPoint {
    let h = halton(index + 1, 4);
    let s = h[0].sqrt();
    let w = [1.0 - s, s * (1.0 - h[1]), s * h[1]];
    let v = alloc::vec![
        C64::new(w[0].sqrt(), 0.0),
        C64::from_polar(w[1].sqrt(), 2.0 * PI * h[2]),
        C64::from_polar(w[2].sqrt(), 2.0 * PI * h[3]),
    ];
    ProjPoint::new(v).expect("sample has unit norm")
}

/// Random point of `P⁴` with coordinates uniform in the unit disc.
pub fn random_p4<R: Rng + ?Sized>(rng: &mut R) -> ProjPoint {
    loop {
        let v: Vec<C64> = (0..5)
            .map(|_| C64::from_polar(rng.gen::<f64>().sqrt(), 2.0 * PI * rng.gen::<f64>()))
            .collect();
        if let Ok(p) = ProjPoint::new(v) {
            return p;
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EpsilonEstimate {
    pub epsilon: f64,
    /// Point of `P²` where the smallest ratio was found.
    pub argmin: ProjPoint,
    pub near_degenerate: bool,
    /// Number of quasi-random samples used (indices `0..samples` of [`sample_p2`]).
    pub samples: usize,
}

/// Sampled lower estimate of `min_z (third largest |lᵢ(z)|)/(largest)`:
/// Halton sampling of `P²`, then pattern search from the ten double points
/// and the best samples.
pub fn epsilon_for_config(config: &LineConfig5, budget: usize) -> Result<EpsilonEstimate> {
    const OP: &str = "greenpoly::epsilon_for_config";
    if budget == 0 {
        return Err(err!(Precondition, OP, "sample budget must be positive"));
    }
    let mut scored: Vec<(f64, ProjPoint)> = (0..budget as u64)
        .map(|i| {
            let p = sample_p2(i);
            (third_over_max(config, p.coords()), p)
        })
        .collect();
    scored.sort_by(|a, b| a.0.total_cmp(&b.0));
    scored.truncate(8);
    let mut starts: Vec<ProjPoint> = config.double_points();
    starts.extend(scored.into_iter().map(|s| s.1));

    let mut best = f64::INFINITY;
    let mut argmin = starts[0].clone();
    for s in starts {
        let (v, p) = pattern_search(config, s);
        if v < best {
            best = v;
            argmin = p;
        }
    }
    let epsilon = best * (1.0 - 1e-12);
    if !(epsilon >= 1e-9) {
        return Err(err!(
            Degenerate,
            OP,
            "estimate {:e} below 1e-9: configuration nearly has a triple point",
            epsilon
        ));
    }
    Ok(EpsilonEstimate {
        epsilon,
        argmin,
        near_degenerate: epsilon < NEAR_DEGENERATE,
        samples: budget,
    })
}

const PATTERN_SWEEPS: usize = 20_000;

fn pattern_search(config: &LineConfig5, start: ProjPoint) -> (f64, ProjPoint) {
    let mut x: Vec<C64> = start.coords().to_vec();
    let mut val = third_over_max(config, &x);
    let mut h = 0.1;
    let dirs = [C64::new(1.0, 0.0), C64::new(0.0, 1.0)];
    // the ratio is scale invariant, so x is kept at unit sup norm
    for _ in 0..PATTERN_SWEEPS {
        if h <= 1e-12 {
            break;
        }
        let m = x.iter().map(|c| c.norm()).fold(0.0, f64::max);
        if !(m > 0.0 && m.is_finite()) {
            break;
        }
        for c in x.iter_mut() {
            *c /= m;
        }
        let mut improved = false;
        for k in 0..3 {
            for d in dirs {
                for sign in [1.0, -1.0] {
                    let mut y = x.clone();
                    y[k] += d * (sign * h);
                    let v = third_over_max(config, &y);
                    if v < val {
                        val = v;
                        x = y;
                        improved = true;
                    }
                }
            }
        }
        if !improved {
            h *= 0.5;
        }
    }
    let p = ProjPoint::new(x).unwrap_or(start);
    (val, p)
}

/// Number of points where `z ∈ X_{ε^{1/n}}` and `F_n(z) ∈ X_ε` disagree.
pub fn power_preimage_identity_check(epsilon: f64, n: u32, points: &[ProjPoint]) -> Result<usize> {
    if !(epsilon > 0.0 && epsilon < 1.0) || n == 0 {
        return Err(err!(
            Precondition,
            "greenpoly::power_preimage_identity_check",
            "need ε ∈ (0,1) and n ≥ 1, got {} and {}",
            epsilon,
            n
        ));
    }
    let root = epsilon.powf(1.0 / n as f64);
    let mut bad = 0;
    for z in points {
        let lhs = polyhedron_membership(&power_map(n, z)?, epsilon)?.member;
        let rhs = polyhedron_membership(z, root)?.member;
        if lhs != rhs {
            bad += 1;
        }
    }
    Ok(bad)
}
