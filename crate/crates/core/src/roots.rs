//! Polynomial roots as eigenvalues of the companion matrix.
//!
//! The companion matrix is already upper Hessenberg, so the eigenvalues come
//! from a complex single-shift QR iteration (Wilkinson shifts, Givens
//! rotations) after Parlett–Reinsch balancing. Each eigenvalue is then
//! polished by a few guarded Newton steps on the original coefficients.

use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)] // shadowed by std float methods when std is linked
use num_traits::Float;
use num_traits::Zero;

use crate::error::err;
use crate::{Result, C64};

const OP: &str = "roots::poly_roots";
const MAX_SWEEPS_PER_EIGENVALUE: usize = 60;

/// Roots of `Σ cₖ zᵏ` (coefficients lowest degree first).
///
/// Leading coefficients that are exactly zero are ignored, so the number of
/// roots equals the true degree. The zero polynomial is an error.
pub fn poly_roots(coeffs: &[C64]) -> Result<Vec<C64>> {
    let mut deg = coeffs.len();
    while deg > 0 && coeffs[deg - 1].is_zero() {
        deg -= 1;
    }
    if deg == 0 {
        return Err(err!(Degenerate, OP, "zero polynomial has no finite root set"));
    }
    let coeffs = &coeffs[..deg];
    let n = deg - 1;
    if n == 0 {
        return Ok(Vec::new());
    }
    if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
        return Err(err!(Numerical, OP, "non-finite coefficient"));
    }

    // Roots at the origin are split off exactly.
    let zeros_at_origin = coeffs.iter().take_while(|c| c.is_zero()).count();
    let reduced = &coeffs[zeros_at_origin..];
    let m = reduced.len() - 1;
    let mut roots = vec![C64::zero(); zeros_at_origin];
    if m == 0 {
        return Ok(roots);
    }

    let lead = reduced[m];
    let mut h = vec![C64::zero(); m * m];
    for j in 0..m {
        h[j] = -reduced[m - 1 - j] / lead;
    }
    for i in 1..m {
        h[i * m + i - 1] = C64::new(1.0, 0.0);
    }
    balance(&mut h, m);
    let eig = hessenberg_eigenvalues(&mut h, m)?;
    let polished = polish(reduced, eig);
    roots.extend(polished);
    Ok(roots)
}

/// Parlett–Reinsch balancing with powers of two.
fn balance(a: &mut [C64], n: usize) {
    const RADIX: f64 = 2.0;
    let mut done = false;
    let mut sweeps = 0;
    while !done && sweeps < 64 {
        done = true;
        sweeps += 1;
        for i in 0..n {
            let mut r = 0.0;
            let mut c = 0.0;
            for j in 0..n {
                if j != i {
                    c += a[j * n + i].l1_norm();
                    r += a[i * n + j].l1_norm();
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            let mut g = r / RADIX;
            while c < g {
                f *= RADIX;
                c *= RADIX * RADIX;
            }
            g = r * RADIX;
            while c > g {
                f /= RADIX;
                c /= RADIX * RADIX;
            }
            if (c + r) / f < 0.95 * s {
                done = false;
                let inv = 1.0 / f;
                for j in 0..n {
                    a[i * n + j] *= inv;
                }
                for j in 0..n {
                    a[j * n + i] *= f;
                }
            }
        }
    }
}

/// Rotation `[[c, s], [−s̄, c]]` mapping `(x, y)` to `(r, 0)`.
fn givens(x: C64, y: C64) -> (f64, C64) {
    let ax = x.norm();
    let ay = y.norm();
    if ay == 0.0 {
        return (1.0, C64::zero());
    }
    if ax == 0.0 {
        return (0.0, y.conj() / ay);
    }
    let r = ax.hypot(ay);
    (ax / r, (x / ax) * y.conj() / r)
}

fn hessenberg_eigenvalues(h: &mut [C64], n: usize) -> Result<Vec<C64>> {
    let idx = |i: usize, j: usize| i * n + j;
    let mut eig = vec![C64::zero(); n];
    let mut hi = n - 1;
    let mut iter = 0usize;
    let mut rot: Vec<(f64, C64)> = Vec::with_capacity(n);
    loop {
        if hi == 0 {
            eig[0] = h[idx(0, 0)];
            break;
        }
        // Deflation: find the start of the active unreduced block.
        let mut lo = hi;
        while lo > 0 {
            let sub = h[idx(lo, lo - 1)].l1_norm();
            let diag = h[idx(lo - 1, lo - 1)].l1_norm() + h[idx(lo, lo)].l1_norm();
            if sub <= f64::EPSILON * diag || sub < f64::MIN_POSITIVE {
                h[idx(lo, lo - 1)] = C64::zero();
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            eig[hi] = h[idx(hi, hi)];
            hi -= 1;
            iter = 0;
            continue;
        }
        iter += 1;
        if iter > MAX_SWEEPS_PER_EIGENVALUE {
            return Err(err!(
                Numerical,
                OP,
                "QR iteration did not converge for eigenvalue {}",
                hi
            ));
        }

        let a = h[idx(hi - 1, hi - 1)];
        let b = h[idx(hi - 1, hi)];
        let c = h[idx(hi, hi - 1)];
        let d = h[idx(hi, hi)];
        let mut shift = if iter.is_multiple_of(11) {
            // Exceptional shift to break cycles.
            d + C64::new(0.75 * c.norm(), 0.25 * c.norm())
        } else {
            let half = (a - d) * 0.5;
            let disc = (half * half + b * c).sqrt();
            let m1 = (a + d) * 0.5 + disc;
            let m2 = (a + d) * 0.5 - disc;
            if (m1 - d).norm() < (m2 - d).norm() {
                m1
            } else {
                m2
            }
        };
        if !shift.re.is_finite() || !shift.im.is_finite() {
            shift = d;
        }

        for k in lo..=hi {
            h[idx(k, k)] -= shift;
        }
        rot.clear();
        for k in lo..hi {
            let (cs, sn) = givens(h[idx(k, k)], h[idx(k + 1, k)]);
            for j in k..=hi {
                let x = h[idx(k, j)];
                let y = h[idx(k + 1, j)];
                h[idx(k, j)] = x * cs + sn * y;
                h[idx(k + 1, j)] = -sn.conj() * x + y * cs;
            }
            rot.push((cs, sn));
        }
        for (off, &(cs, sn)) in rot.iter().enumerate() {
            let k = lo + off;
            let top = (k + 2).min(hi);
            for i in lo..=top {
                let x = h[idx(i, k)];
                let y = h[idx(i, k + 1)];
                h[idx(i, k)] = x * cs + sn.conj() * y;
                h[idx(i, k + 1)] = -sn * x + y * cs;
            }
        }
        for k in lo..=hi {
            h[idx(k, k)] += shift;
        }
    }
    Ok(eig)
}

/// Guarded Newton polishing: a step is accepted only if it shrinks the
/// residual and stays well inside the gap to the nearest other root.
fn polish(coeffs: &[C64], mut roots: Vec<C64>) -> Vec<C64> {
    let eval = |z: C64| {
        let mut p = C64::zero();
        let mut dp = C64::zero();
        for &c in coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    };
    for i in 0..roots.len() {
        let gap = roots
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, r)| (*r - roots[i]).norm())
            .fold(f64::INFINITY, f64::min);
        for _ in 0..4 {
            let z = roots[i];
            let (p, dp) = eval(z);
            if dp.is_zero() || p.is_zero() {
                break;
            }
            let step = p / dp;
            if !(step.norm() < 0.1 * gap) {
                break;
            }
            let cand = z - step;
            if eval(cand).0.norm() < p.norm() {
                roots[i] = cand;
            } else {
                break;
            }
        }
    }
    roots
}
