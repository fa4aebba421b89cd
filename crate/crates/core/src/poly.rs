//! Dense univariate polynomials with complex coefficients, lowest degree first.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

#[allow(unused_imports)] // shadowed by std float methods when std is linked
use num_traits::Float;
use num_traits::Zero;

use crate::roots;
use crate::{Result, C64};

#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    coeffs: Vec<C64>,
}

impl Poly {
    /// Trailing exact zeros are dropped; the zero polynomial has no coefficients.
    pub fn new(coeffs: Vec<C64>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| C64::new(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: C64) -> Self {
        Self::new(vec![c])
    }

    /// `a + b·z`
    pub fn linear(a: C64, b: C64) -> Self {
        Self::new(vec![a, b])
    }

    /// `c·zᵏ`
    pub fn monomial(c: C64, k: usize) -> Self {
        let mut coeffs = vec![C64::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C64> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> C64 {
        self.coeffs.get(k).copied().unwrap_or_else(C64::zero)
    }

    /// Horner evaluation.
    pub fn eval(&self, z: C64) -> C64 {
        self.coeffs
            .iter()
            .rev()
            .fold(C64::zero(), |acc, &c| acc * z + c)
    }

    /// Value and first derivative in one Horner pass.
    pub fn eval_with_deriv(&self, z: C64) -> (C64, C64) {
        let mut p = C64::zero();
        let mut dp = C64::zero();
        for &c in self.coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| c * k as f64)
            .collect();
        Self::new(coeffs)
    }

    pub fn scale(&self, s: C64) -> Self {
        Self::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn powi(&self, k: u32) -> Self {
        let mut out = Poly::constant(C64::new(1.0, 0.0));
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Exact coefficients of `z ↦ self(center + scale·z)`.
    pub fn compose_affine(&self, center: C64, scale: C64) -> Self {
        // Taylor shift by Horner in polynomial arithmetic.
        let step = Poly::linear(center, scale);
        let mut out = Poly::zero();
        for &c in self.coeffs.iter().rev() {
            out = &(&out * &step) + &Poly::constant(c);
        }
        out
    }

    /// Largest coefficient modulus.
    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// `Σ|cₖ|·rᵏ`, an upper bound for `|p|` on the closed disc of radius `r`.
    pub fn majorant(&self, r: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * r + c.norm())
    }

    /// Drop leading coefficients below `rel_tol` times the largest one.
    pub fn truncate_small_leading(&self, rel_tol: f64) -> Self {
        let scale = self.max_abs_coeff();
        let mut coeffs = self.coeffs.clone();
        while coeffs.last().is_some_and(|c| c.norm() <= rel_tol * scale) {
            coeffs.pop();
        }
        Self::new(coeffs)
    }

    /// All complex roots via the companion matrix.
    pub fn roots(&self) -> Result<Vec<C64>> {
        roots::poly_roots(&self.coeffs)
    }

    /// Taylor polynomial of `exp(scale·z)` truncated after degree `degree`.
    pub fn truncated_exp(scale: C64, degree: usize) -> Self {
        let mut coeffs = Vec::with_capacity(degree + 1);
        let mut term = C64::new(1.0, 0.0);
        for k in 0..=degree {
            if k > 0 {
                term = term * scale / k as f64;
            }
            coeffs.push(term);
        }
        Self::new(coeffs)
    }
}

/// Bound on `|exp(scale·z) − T_d(z)|` for `|z| ≤ radius`, where `T_d` is the
/// degree-`degree` Taylor polynomial: the Lagrange remainder
/// `xᵈ⁺¹/(d+1)!·eˣ` with `x = |scale|·radius`.
pub fn exp_truncation_bound(scale: C64, radius: f64, degree: usize) -> f64 {
    let x = scale.norm() * radius;
    let mut term = 1.0;
    for k in 1..=degree + 1 {
        term *= x / k as f64;
    }
    term * x.exp()
}

/// Smallest degree whose truncation bound relative to `exp(−x)` (the smallest
/// value of `|exp|` on the disc) is below `rel_tol`.
pub fn exp_degree_for(scale: C64, radius: f64, rel_tol: f64) -> usize {
    let x = scale.norm() * radius;
    let floor = (-x).exp();
    (1..512)
        .find(|&d| exp_truncation_bound(scale, radius, d) <= rel_tol * floor)
        .unwrap_or(512)
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![C64::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    #[test]
    fn horner_and_derivative() {
        let p = Poly::from_real(&[1.0, 2.0, 3.0]);
        assert_eq!(p.eval(c64(2.0, 0.0)), c64(17.0, 0.0));
        assert_eq!(p.derivative(), Poly::from_real(&[2.0, 6.0]));
        let (v, d) = p.eval_with_deriv(c64(0.0, 1.0));
        assert_eq!(v, c64(-2.0, 2.0));
        assert_eq!(d, c64(2.0, 6.0));
    }

    #[test]
    fn affine_composition_binomial() {
        // z² at 1 + z
        let p = Poly::from_real(&[0.0, 0.0, 1.0]);
        let q = p.compose_affine(c64(1.0, 0.0), c64(1.0, 0.0));
        assert_eq!(q, Poly::from_real(&[1.0, 2.0, 1.0]));
    }

    #[test]
    fn zero_is_trimmed() {
        let p = Poly::from_real(&[0.0, 0.0]);
        assert!(p.is_zero());
        assert_eq!(p.degree(), 0);
        assert_eq!(p.eval(c64(3.0, 1.0)), c64(0.0, 0.0));
    }

    #[test]
    fn truncated_exp_within_bound() {
        let s = c64(5.0, 0.0);
        let d = exp_degree_for(s, 1.0, 1e-13);
        let p = Poly::truncated_exp(s, d);
        let bound = exp_truncation_bound(s, 1.0, d);
        for k in 0..16 {
            let z = C64::from_polar(0.9, k as f64 * 0.4);
            let err = (p.eval(z) - (s * z).exp()).norm();
            assert!(err <= bound + 1e-12 * (s * z).exp().norm());
        }
    }
}
