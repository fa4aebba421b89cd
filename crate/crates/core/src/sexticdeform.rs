//! Six planes in `P³`, their incidence (15 double lines, 20 triple points),
//! the sextic surfaces `Σ_ε = (Π pᵢ = ε s)`, the deformation ladder
//! `s_{k+1} = p_a p_b p_c² p_d² − ε_k s_k` and the migration of the sextic's
//! trace on a double line toward the triple points.
//!
//! Plane indices are 0-based throughout.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)] // shadowed by std float methods when std is linked
use num_traits::Float;
use rand::Rng;

use crate::complexgeom::ProjPoint;
use crate::error::err;
use crate::hompoly::MultiPoly;
use crate::linalg::{apply_form, normalized, normalized_det, null_space};
use crate::poly::Poly;
use crate::{Result, C64};

pub const GENERAL_POSITION_TOL: f64 = 1e-9;
/// Fixed rotation of each double line's orthonormal basis, so that the
/// triple points and the sextic's roots stay away from `t = ∞`.
const LINE_ROTATION: (f64, f64) = (0.3, 0.7);
/// Exponents of the four remaining planes in the deformation monomial.
pub const STEP_EXPONENTS: [u32; 4] = [1, 1, 2, 2];
const LINE_SAMPLES: usize = 50;

#[derive(Debug, Clone, PartialEq)]
pub struct DoubleLine {
    /// The two planes `(i, j)`, `i < j`.
    pub planes: [usize; 2],
    /// `γ(t) = base[0] + t·base[1]`, an orthonormal pair spanning the line.
    pub base: [Vec<C64>; 2],
    /// Indices into [`PlaneConfig6::triple_points`], ordered by the third plane.
    pub triple_points: Vec<usize>,
}

impl DoubleLine {
    pub fn point(&self, t: C64) -> Vec<C64> {
        self.base[0].iter().zip(&self.base[1]).map(|(a, b)| a + t * b).collect()
    }

    /// The four planes other than `planes`, ascending.
    pub fn complementary_planes(&self) -> [usize; 4] {
        let mut out = [0; 4];
        let mut k = 0;
        for i in 0..6 {
            if !self.planes.contains(&i) {
                out[k] = i;
                k += 1;
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TriplePoint {
    pub planes: [usize; 3],
    pub point: ProjPoint,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlaneConfig6 {
    forms: [[C64; 4]; 6],
    pub double_lines: Vec<DoubleLine>,
    pub triple_points: Vec<TriplePoint>,
}

impl PlaneConfig6 {
    pub fn forms(&self) -> &[[C64; 4]; 6] {
        &self.forms
    }

    pub fn plane(&self, i: usize) -> MultiPoly {
        MultiPoly::linear(&self.forms[i])
    }

    /// Index of the double line `Pᵢ ∩ Pⱼ`.
    pub fn line_index(&self, i: usize, j: usize) -> Option<usize> {
        let key = [i.min(j), i.max(j)];
        self.double_lines.iter().position(|d| d.planes == key)
    }

    /// `(x, y, z, w, x+y+z+w, x+2y+3z+4w)`
    pub fn standard() -> Self {
        build_incidence(real_forms([
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
            [1.0, 1.0, 1.0, 1.0],
            [1.0, 2.0, 3.0, 4.0],
        ]))
        .expect("standard configuration is in general position")
    }
}

pub fn real_forms(f: [[f64; 4]; 6]) -> [[C64; 4]; 6] {
    f.map(|r| r.map(|x| C64::new(x, 0.0)))
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Double lines, triple points and the per-line incidence lists.
pub fn build_incidence(forms: [[C64; 4]; 6]) -> Result<PlaneConfig6> {
    const OP: &str = "sexticdeform::build_incidence";
    let rows = |idx: &[usize]| -> Vec<Vec<C64>> { idx.iter().map(|&i| forms[i].to_vec()).collect() };
    for q in subsets(6, 4) {
        let d = normalized_det(&rows(&q));
        if !(d > GENERAL_POSITION_TOL) {
            return Err(err!(
                GeneralPosition,
                OP,
                "planes {:?} share a point (normalized determinant {:e})",
                q,
                d
            ));
        }
    }
    let mut triple_points = Vec::with_capacity(20);
    for t in subsets(6, 3) {
        let ns = null_space(&rows(&t), 4);
        if ns.len() != 1 {
            return Err(err!(GeneralPosition, OP, "planes {:?} do not meet in a single point", t));
        }
        triple_points.push(TriplePoint {
            planes: [t[0], t[1], t[2]],
            point: ProjPoint::new(ns[0].clone())?,
        });
    }
    let (angle, phase) = LINE_ROTATION;
    let (c, s) = (angle.cos(), angle.sin());
    let e = C64::from_polar(1.0, phase);
    let mut double_lines = Vec::with_capacity(15);
    for pair in subsets(6, 2) {
        let ns = null_space(&rows(&pair), 4);
        if ns.len() != 2 {
            return Err(err!(GeneralPosition, OP, "planes {:?} do not meet in a line", pair));
        }
        let p: Vec<C64> = ns[0].iter().zip(&ns[1]).map(|(a, b)| a * c + e * s * b).collect();
        let q: Vec<C64> = ns[0].iter().zip(&ns[1]).map(|(a, b)| -e.conj() * s * a + b * c).collect();
        let on_line: Vec<usize> = triple_points
            .iter()
            .enumerate()
            .filter(|(_, tp)| pair.iter().all(|i| tp.planes.contains(i)))
            .map(|(k, _)| k)
            .collect();
        if on_line.len() != 4 {
            return Err(err!(Construction, OP, "line {:?} carries {} triple points", pair, on_line.len()));
        }
        double_lines.push(DoubleLine {
            planes: [pair[0], pair[1]],
            base: [p, q],
            triple_points: on_line,
        });
    }
    Ok(PlaneConfig6 {
        forms,
        double_lines,
        triple_points,
    })
}

/// Random configuration with coefficients uniform in the unit disc.
pub fn random_config<R: Rng + ?Sized>(rng: &mut R) -> PlaneConfig6 {
    loop {
        let mut forms = [[C64::new(0.0, 0.0); 4]; 6];
        for row in forms.iter_mut() {
            for x in row.iter_mut() {
                *x = random_disc(rng);
            }
        }
        if let Ok(c) = build_incidence(forms) {
            return c;
        }
    }
}

fn random_disc<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    C64::from_polar(rng.gen::<f64>().sqrt(), 2.0 * PI * rng.gen::<f64>())
}

/// All exponent vectors of total degree `d` in 4 variables.
pub fn degree_exponents(d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for a in 0..=d {
        for b in 0..=d - a {
            for c in 0..=d - a - b {
                out.push(vec![a, b, c, d - a - b - c]);
            }
        }
    }
    out
}

/// Dense sextic with coefficients uniform in the unit disc.
pub fn random_sextic<R: Rng + ?Sized>(rng: &mut R) -> MultiPoly {
    let terms: Vec<(Vec<u32>, C64)> = degree_exponents(6).into_iter().map(|e| (e, random_disc(rng))).collect();
    MultiPoly::from_terms(4, terms).expect("arity is 4")
}

/// `x⁶ + y⁶ + z⁶ + w⁶`
pub fn fermat_sextic() -> MultiPoly {
    let one = C64::new(1.0, 0.0);
    MultiPoly::from_terms(
        4,
        (0..4).map(|i| {
            let mut e = vec![0; 4];
            e[i] = 6;
            (e, one)
        }),
    )
    .expect("arity is 4")
}

fn check_sextic(op: &'static str, s: &MultiPoly) -> Result<()> {
    if s.nvars() != 4 || s.homogeneous_degree() != Some(6) {
        return Err(err!(
            Construction,
            op,
            "expected a homogeneous sextic on C⁴, got {} variables and degree {:?}",
            s.nvars(),
            s.homogeneous_degree()
        ));
    }
    Ok(())
}

/// `Σ_ε = (Π pᵢ = ε s)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SexticSurface {
    pub s: MultiPoly,
    pub epsilon: C64,
}

impl SexticSurface {
    pub fn new(s: MultiPoly, epsilon: C64) -> Result<Self> {
        check_sextic("sexticdeform::SexticSurface", &s)?;
        Ok(SexticSurface { s, epsilon })
    }

    /// `Π pᵢ − ε s`
    pub fn equation(&self, config: &PlaneConfig6) -> MultiPoly {
        let prod = (0..6).fold(MultiPoly::constant(4, C64::new(1.0, 0.0)), |acc, i| acc.mul(&config.plane(i)));
        prod.sub(&self.s.scale(self.epsilon))
    }
}

/// Value of a homogeneous polynomial at the unit-norm representative.
fn eval_unit(p: &MultiPoly, x: &[C64]) -> C64 {
    p.eval(&normalized(x))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SigmaCheck {
    /// `max |s(q)|/Σ|coeffs|` over constructed points of `Σ_ε ∩ Pᵢ`.
    pub max_residual: f64,
    pub points: usize,
    /// `min |s(q)|/Σ|coeffs|` over random points of `P³`.
    pub control_min: f64,
}

/// Constructs points of `Σ_ε ∩ Pᵢ` as roots of the surface equation on
/// random lines inside each plane and evaluates `s` there.
pub fn incidence_check_sigma<R: Rng + ?Sized>(
    config: &PlaneConfig6,
    surface: &SexticSurface,
    samples: usize,
    rng: &mut R,
) -> Result<SigmaCheck> {
    const OP: &str = "sexticdeform::incidence_check_sigma";
    if surface.epsilon.norm() == 0.0 {
        return Err(err!(Precondition, OP, "epsilon must be nonzero"));
    }
    let scale = surface.s.coefficient_scale();
    let f = surface.equation(config);
    let lines_per_plane = samples.div_ceil(36).max(1);
    let mut max_residual: f64 = 0.0;
    let mut points = 0;
    for i in 0..6 {
        let basis = null_space(&[config.forms[i].to_vec()], 4);
        let combo = |rng: &mut R| -> Vec<C64> {
            let c: Vec<C64> = (0..3).map(|_| random_disc(rng)).collect();
            (0..4).map(|k| (0..3).map(|j| c[j] * basis[j][k]).sum()).collect()
        };
        for _ in 0..lines_per_plane {
            let u = combo(rng);
            let v = combo(rng);
            let roots = f.restrict_to_line(&u, &v).truncate_small_leading(1e-13).roots()?;
            for t in roots {
                let q: Vec<C64> = u.iter().zip(&v).map(|(a, b)| a + t * b).collect();
                max_residual = max_residual.max(eval_unit(&surface.s, &q).norm() / scale);
                points += 1;
            }
        }
    }
    let mut control_min = f64::INFINITY;
    for _ in 0..32 {
        let q: Vec<C64> = (0..4).map(|_| random_disc(rng)).collect();
        control_min = control_min.min(eval_unit(&surface.s, &q).norm() / scale);
    }
    Ok(SigmaCheck {
        max_residual,
        points,
        control_min,
    })
}

/// `min |s(T)|` over the 20 triple points (unit-norm representatives).
pub fn sextic_general_position_check(config: &PlaneConfig6, s: &MultiPoly) -> f64 {
    config
        .triple_points
        .iter()
        .map(|tp| eval_unit(s, tp.point.coords()).norm())
        .fold(f64::INFINITY, f64::min)
}

/// `p_a p_b p_c² p_d²` for `order = [a, b, c, d]`.
pub fn step_monomial(config: &PlaneConfig6, order: [usize; 4]) -> MultiPoly {
    order
        .iter()
        .zip(STEP_EXPONENTS)
        .fold(MultiPoly::constant(4, C64::new(1.0, 0.0)), |acc, (&i, e)| {
            acc.mul(&config.plane(i).powi(e))
        })
}

fn check_order(op: &'static str, line: &DoubleLine, order: [usize; 4]) -> Result<()> {
    let mut sorted = order;
    sorted.sort_unstable();
    if sorted != line.complementary_planes() {
        return Err(err!(
            Construction,
            op,
            "order {:?} is not a permutation of the planes {:?} off the line {:?}",
            order,
            line.complementary_planes(),
            line.planes
        ));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct DeformationStep {
    pub s_next: MultiPoly,
    /// `max |s_{k+1} + ε_k s_k|/Σ|coeffs of s_k|` on the previously processed
    /// lines; `0` when there are none.
    pub previous_line_residual: f64,
    /// `sextic_general_position_check` of `s_{k+1}`.
    pub min_at_triple_points: f64,
}

/// One step of the ladder along `D = config.double_lines[line]`.
/// `previous` lists the lines processed in earlier steps.
pub fn deformation_step(
    config: &PlaneConfig6,
    s_k: &MultiPoly,
    line: usize,
    order: [usize; 4],
    eps_k: C64,
    previous: &[usize],
) -> Result<DeformationStep> {
    const OP: &str = "sexticdeform::deformation_step";
    if eps_k.norm() == 0.0 {
        return Err(err!(Precondition, OP, "ε_k must be nonzero"));
    }
    check_sextic(OP, s_k)?;
    let d = config
        .double_lines
        .get(line)
        .ok_or_else(|| err!(Precondition, OP, "no double line {}", line))?;
    check_order(OP, d, order)?;
    let s_next = step_monomial(config, order).sub(&s_k.scale(eps_k));
    check_sextic(OP, &s_next)?;

    let scale = s_k.coefficient_scale();
    let mut residual: f64 = 0.0;
    for &m in previous {
        let dm = config
            .double_lines
            .get(m)
            .ok_or_else(|| err!(Precondition, OP, "no double line {}", m))?;
        for k in 0..LINE_SAMPLES {
            // Points spread over the line, away from t = ∞.
            let t = C64::from_polar(0.25 + 2.0 * k as f64 / LINE_SAMPLES as f64, 2.399963 * k as f64);
            let x = normalized(&dm.point(t));
            let r = (s_next.eval(&x) + eps_k * s_k.eval(&x)).norm() / scale;
            residual = residual.max(r);
        }
    }
    Ok(DeformationStep {
        min_at_triple_points: sextic_general_position_check(config, &s_next),
        s_next,
        previous_line_residual: residual,
    })
}

/// Roots of a homogeneous binary form given as `c(t) = Σ cₖ tᵏ` (degree ≤ `deg`)
/// as points `[s:t]` of `P¹`, working in whichever chart has the larger top coefficient.
fn binary_roots(c: &Poly, deg: usize) -> Result<Vec<[C64; 2]>> {
    let coeffs: Vec<C64> = (0..=deg).map(|k| c.coeff(k)).collect();
    let one = C64::new(1.0, 0.0);
    let zero = C64::new(0.0, 0.0);
    if coeffs[deg].norm() >= coeffs[0].norm() {
        let p = Poly::new(coeffs).truncate_small_leading(1e-14);
        let mut out: Vec<[C64; 2]> = p.roots()?.into_iter().map(|t| [one, t]).collect();
        out.resize(deg, [zero, one]);
        Ok(out)
    } else {
        let rev: Vec<C64> = coeffs.iter().rev().cloned().collect();
        let p = Poly::new(rev).truncate_small_leading(1e-14);
        let mut out: Vec<[C64; 2]> = p.roots()?.into_iter().map(|s| [s, one]).collect();
        out.resize(deg, [one, zero]);
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LadderStep {
    pub epsilon: f64,
    pub roots: Vec<ProjPoint>,
    /// Fubini–Study distance from each root to its nearest triple point on the line.
    pub distances: Vec<f64>,
    /// Position (0..4) in the line's triple-point list of each root's nearest point.
    pub clusters: Vec<usize>,
    pub max_distance: f64,
    /// Number of roots per triple point of the line.
    pub cluster_sizes: [usize; 4],
}

#[derive(Debug, Clone, PartialEq)]
pub struct RootTrace {
    pub line: usize,
    pub order: [usize; 4],
    pub steps: Vec<LadderStep>,
    /// Multiplicity of `p_a p_b p_c² p_d²` at each of the line's triple points.
    pub expected_pattern: [usize; 4],
}

impl RootTrace {
    pub fn max_distance_decreasing(&self) -> bool {
        self.steps.windows(2).all(|w| w[1].max_distance < w[0].max_distance)
    }

    pub fn terminal_pattern(&self) -> Option<[usize; 4]> {
        self.steps.last().map(|s| s.cluster_sizes)
    }
}

/// Roots of `(p_a p_b p_c² p_d² − ε s)∘γ` on the line for each `ε` of a ladder.
pub fn trace_roots_on_line(
    config: &PlaneConfig6,
    line: usize,
    order: [usize; 4],
    s: &MultiPoly,
    ladder: &[f64],
) -> Result<RootTrace> {
    const OP: &str = "sexticdeform::trace_roots_on_line";
    check_sextic(OP, s)?;
    let d = config
        .double_lines
        .get(line)
        .ok_or_else(|| err!(Precondition, OP, "no double line {}", line))?;
    check_order(OP, d, order)?;
    let mono = step_monomial(config, order);
    let targets: Vec<&ProjPoint> = d.triple_points.iter().map(|&k| &config.triple_points[k].point).collect();
    let mut expected = [0; 4];
    for (slot, &k) in d.triple_points.iter().enumerate() {
        let tp = &config.triple_points[k];
        let third = tp.planes.iter().find(|p| !d.planes.contains(p)).copied().unwrap_or(0);
        let pos = order.iter().position(|&o| o == third).unwrap_or(0);
        expected[slot] = STEP_EXPONENTS[pos] as usize;
    }

    let mut steps = Vec::with_capacity(ladder.len());
    for &eps in ladder {
        let f = mono.sub(&s.scale(C64::new(eps, 0.0)));
        let c = f.restrict_to_line(&d.base[0], &d.base[1]);
        let roots = binary_roots(&c, 6).map_err(|e| {
            err!(Numerical, OP, "root finding failed at ε = {:e}: {}", eps, e)
        })?;
        let mut pts = Vec::with_capacity(6);
        let mut distances = Vec::with_capacity(6);
        let mut clusters = Vec::with_capacity(6);
        let mut sizes = [0; 4];
        for [a, b] in roots {
            let x: Vec<C64> = d.base[0].iter().zip(&d.base[1]).map(|(p, q)| a * p + b * q).collect();
            let pt = ProjPoint::new(x)
                .map_err(|_| err!(Numerical, OP, "degenerate root at ε = {:e}", eps))?;
            let (j, dist) = targets
                .iter()
                .enumerate()
                .map(|(j, t)| (j, pt.distance(t)))
                .min_by(|x, y| x.1.total_cmp(&y.1))
                .expect("four triple points");
            sizes[j] += 1;
            clusters.push(j);
            distances.push(dist);
            pts.push(pt);
        }
        let max_distance = distances.iter().cloned().fold(0.0, f64::max);
        steps.push(LadderStep {
            epsilon: eps,
            roots: pts,
            distances,
            clusters,
            max_distance,
            cluster_sizes: sizes,
        });
    }
    Ok(RootTrace {
        line,
        order,
        steps,
        expected_pattern: expected,
    })
}

/// `10⁻¹, …, 10⁻ᵐ`
pub fn decade_ladder(m: i32) -> Vec<f64> {
    (1..=m).map(|k| 10f64.powi(-k)).collect()
}

/// Apply a form to a point; exposed for diagnostics.
pub fn plane_value(config: &PlaneConfig6, i: usize, x: &[C64]) -> C64 {
    apply_form(&config.forms[i], x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use rand::SeedableRng;

    #[test]
    fn standard_incidence_counts() {
        let c = PlaneConfig6::standard();
        assert_eq!(c.double_lines.len(), 15);
        assert_eq!(c.triple_points.len(), 20);
        assert!(c.double_lines.iter().all(|d| d.triple_points.len() == 4));
        for d in &c.double_lines {
            for t in [c64(0.0, 0.0), c64(1.3, -0.4)] {
                let x = d.point(t);
                for &i in &d.planes {
                    assert!(plane_value(&c, i, &x).norm() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn triple_points_on_first_line() {
        let c = PlaneConfig6::standard();
        let d = &c.double_lines[c.line_index(0, 1).unwrap()];
        let expect = [[0.0, 0.0, 0.0, 1.0], [0.0, 0.0, 1.0, 0.0], [0.0, 0.0, 1.0, -1.0], [0.0, 0.0, 4.0, -3.0]];
        for (k, e) in d.triple_points.iter().zip(expect) {
            let p = ProjPoint::from_real(&e).unwrap();
            assert!(c.triple_points[*k].point.distance(&p) < 1e-14);
        }
    }

    #[test]
    fn repeated_plane_rejected() {
        let r = build_incidence(real_forms([
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
            [1.0, 1.0, 1.0, 1.0],
            [1.0, 1.0, 1.0, 1.0],
        ]));
        assert!(matches!(r, Err(crate::Error::GeneralPosition { .. })));
    }

    #[test]
    fn general_position_of_sextics() {
        let c = PlaneConfig6::standard();
        assert!(sextic_general_position_check(&c, &fermat_sextic()) > 1e-6 * 4.0);
        let prod = (0..6).fold(MultiPoly::constant(4, c64(1.0, 0.0)), |a, i| a.mul(&c.plane(i)));
        assert!(sextic_general_position_check(&c, &prod) < 1e-14);
        let w6 = MultiPoly::from_terms(4, [(vec![0, 0, 0, 6], c64(1.0, 0.0))]).unwrap();
        assert!(sextic_general_position_check(&c, &w6) < 1e-14);
    }

    #[test]
    fn sigma_containment() {
        let c = PlaneConfig6::standard();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let s = random_sextic(&mut rng);
        let surf = SexticSurface::new(s, c64(1.0, 0.0)).unwrap();
        let chk = incidence_check_sigma(&c, &surf, 100, &mut rng).unwrap();
        assert!(chk.points >= 100);
        assert!(chk.max_residual <= 1e-10, "{}", chk.max_residual);
        assert!(chk.control_min > 1e-6);
        let zero = SexticSurface::new(fermat_sextic(), c64(0.0, 0.0)).unwrap();
        assert!(incidence_check_sigma(&c, &zero, 10, &mut rng).is_err());
    }

    #[test]
    fn deformation_steps() {
        let c = PlaneConfig6::standard();
        let l0 = c.line_index(0, 1).unwrap();
        let s0 = fermat_sextic();
        let st = deformation_step(&c, &s0, l0, [2, 3, 4, 5], c64(1e-2, 0.0), &[]).unwrap();
        assert_eq!(st.s_next.homogeneous_degree(), Some(6));
        assert_eq!(st.previous_line_residual, 0.0);
        let l1 = c.line_index(2, 3).unwrap();
        let st2 = deformation_step(&c, &st.s_next, l1, [0, 1, 4, 5], c64(1e-2, 0.0), &[l0]).unwrap();
        assert!(st2.previous_line_residual <= 1e-9);
        let before = sextic_general_position_check(&c, &st.s_next);
        assert!((st2.min_at_triple_points - 1e-2 * before).abs() < 1e-9 * before);
        assert!(deformation_step(&c, &s0, l0, [2, 3, 4, 5], c64(0.0, 0.0), &[]).is_err());
        assert!(deformation_step(&c, &s0, l0, [0, 3, 4, 5], c64(0.1, 0.0), &[]).is_err());
    }

    #[test]
    fn roots_migrate_to_triple_points() {
        let c = PlaneConfig6::standard();
        let l0 = c.line_index(0, 1).unwrap();
        let tr = trace_roots_on_line(&c, l0, [2, 3, 4, 5], &fermat_sextic(), &decade_ladder(6)).unwrap();
        assert!(tr.max_distance_decreasing());
        assert_eq!(tr.expected_pattern, [1, 1, 2, 2]);
        assert_eq!(tr.terminal_pattern(), Some(tr.expected_pattern));
    }
}
