//! Sparse multivariate polynomials, mostly used homogeneously: hypersurface
//! equations in projective space, sextics on `C⁴`, products of linear forms.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::err;
use crate::poly::Poly;
use crate::{Result, C64};

/// Exponent multi-index, one entry per variable.
pub type Exponent = Vec<u32>;

#[derive(Debug, Clone, PartialEq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, C64>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: C64) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponent, C64)>) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(err!(
                    Construction,
                    "hompoly::from_terms",
                    "exponent {:?} has {} entries, expected {}",
                    e,
                    e.len(),
                    nvars
                ));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// `Σ aᵢ xᵢ`
    pub fn linear(coeffs: &[C64]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, &c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c);
        }
        p
    }

    /// The single variable `xᵢ`.
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, C64::new(1.0, 0.0));
        p
    }

    fn add_term(&mut self, e: Exponent, c: C64) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(C64::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &C64)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree of the highest monomial.
    pub fn degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    /// `Some(d)` if every monomial has total degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// `Σ|c|` over all terms, the scale against which residuals are measured.
    pub fn coefficient_scale(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).sum()
    }

    pub fn eval(&self, x: &[C64]) -> C64 {
        debug_assert_eq!(x.len(), self.nvars);
        self.terms
            .iter()
            .map(|(e, &c)| {
                e.iter()
                    .zip(x)
                    .fold(c, |acc, (&k, &xi)| acc * xi.powu(k))
            })
            .sum()
    }

    pub fn scale(&self, s: C64) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e, &c) in &self.terms {
            p.add_term(e.clone(), c * s);
        }
        p
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut p = self.clone();
        for (e, &c) in &other.terms {
            p.add_term(e.clone(), c);
        }
        p
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(C64::new(-1.0, 0.0)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut p = Self::zero(self.nvars);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                p.add_term(e, ca * cb);
            }
        }
        p
    }

    pub fn powi(&self, k: u32) -> Self {
        let mut out = Self::constant(self.nvars, C64::new(1.0, 0.0));
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Univariate polynomial `t ↦ self(x₀(t), …, xₙ(t))`, exact at the
    /// coefficient level.
    pub fn substitute(&self, xs: &[Poly]) -> Poly {
        debug_assert_eq!(xs.len(), self.nvars);
        // Cache powers of each substituted polynomial.
        let max_pow: Vec<u32> = (0..self.nvars)
            .map(|i| self.terms.keys().map(|e| e[i]).max().unwrap_or(0))
            .collect();
        let powers: Vec<Vec<Poly>> = xs
            .iter()
            .zip(&max_pow)
            .map(|(x, &m)| {
                let mut v = Vec::with_capacity(m as usize + 1);
                v.push(Poly::constant(C64::new(1.0, 0.0)));
                for k in 1..=m as usize {
                    let next = &v[k - 1] * x;
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = Poly::zero();
        for (e, &c) in &self.terms {
            let mut term = Poly::constant(c);
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = &term * &powers[i][k as usize];
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Restriction to the projective line `[s:t] ↦ s·p + t·q` in the chart `s = 1`.
    pub fn restrict_to_line(&self, p: &[C64], q: &[C64]) -> Poly {
        let xs: Vec<Poly> = p.iter().zip(q).map(|(&a, &b)| Poly::linear(a, b)).collect();
        self.substitute(&xs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    #[test]
    fn product_of_linear_forms_is_homogeneous() {
        let x = MultiPoly::variable(2, 0);
        let y = MultiPoly::variable(2, 1);
        let p = x.mul(&x.add(&y)).mul(&y.powi(2));
        assert_eq!(p.homogeneous_degree(), Some(4));
        assert_eq!(p.eval(&[c64(2.0, 0.0), c64(1.0, 0.0)]), c64(6.0, 0.0));
    }

    #[test]
    fn cancellation_removes_terms() {
        let x = MultiPoly::variable(3, 0);
        assert!(x.sub(&x).is_zero());
    }

    #[test]
    fn substitution_matches_evaluation() {
        let p = MultiPoly::from_terms(
            2,
            [(vec![2, 1], c64(1.0, -1.0)), (vec![0, 3], c64(0.5, 0.0))],
        )
        .unwrap();
        let l0 = Poly::linear(c64(1.0, 0.0), c64(0.0, 2.0));
        let l1 = Poly::linear(c64(-1.0, 1.0), c64(3.0, 0.0));
        let u = p.substitute(&[l0.clone(), l1.clone()]);
        for k in 0..5 {
            let t = c64(0.3 * k as f64, -0.2);
            let direct = p.eval(&[l0.eval(t), l1.eval(t)]);
            assert!((u.eval(t) - direct).norm() < 1e-12);
        }
    }

    #[test]
    fn wrong_arity_rejected() {
        assert!(MultiPoly::from_terms(2, [(vec![1, 1, 1], c64(1.0, 0.0))]).is_err());
    }
}
