//! Small dense complex linear algebra: determinants and null spaces of
//! families of linear forms. Sizes never exceed 5 here.

use alloc::vec::Vec;

#[allow(unused_imports)] // shadowed by std float methods when std is linked
use num_traits::Float;
use num_traits::Zero;

use crate::C64;

/// Hermitian inner product `⟨a, b⟩ = Σ aᵢ b̄ᵢ`.
pub fn hdot(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b).map(|(x, y)| x * y.conj()).sum()
}

/// Bilinear pairing `Σ aᵢ bᵢ`, i.e. a linear form applied to a vector.
pub fn apply_form(form: &[C64], v: &[C64]) -> C64 {
    form.iter().zip(v).map(|(x, y)| x * y).sum()
}

pub fn norm2(a: &[C64]) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

pub fn normalized(a: &[C64]) -> Vec<C64> {
    let n = norm2(a);
    a.iter().map(|x| x / n).collect()
}

/// Determinant by Gaussian elimination with partial pivoting; `rows` is square.
pub fn det(rows: &[Vec<C64>]) -> C64 {
    let n = rows.len();
    let mut m: Vec<Vec<C64>> = rows.to_vec();
    let mut d = C64::new(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&a, &b| m[a][col].norm().total_cmp(&m[b][col].norm()))
            .unwrap_or(col);
        if m[pivot][col].is_zero() {
            return C64::zero();
        }
        if pivot != col {
            m.swap(pivot, col);
            d = -d;
        }
        d *= m[col][col];
        let (top, rest) = m.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in rest.iter_mut() {
            let f = row[col] / pivot_row[col];
            for (x, v) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= f * v;
            }
        }
    }
    d
}

/// Determinant of the matrix whose rows are scaled to unit Euclidean norm;
/// a scale-free general-position measure in `[0, 1]`.
pub fn normalized_det(rows: &[Vec<C64>]) -> f64 {
    let unit: Vec<Vec<C64>> = rows.iter().map(|r| normalized(r)).collect();
    det(&unit).norm()
}

/// Orthonormal basis of `{v : Σ fᵢⱼ vⱼ = 0 for every form fᵢ}`.
///
/// The null space of the bilinear pairing is the Hermitian orthogonal
/// complement of the conjugated forms, so Gram–Schmidt does everything.
pub fn null_space(forms: &[Vec<C64>], dim: usize) -> Vec<Vec<C64>> {
    let mut span: Vec<Vec<C64>> = Vec::new();
    for f in forms {
        let conj: Vec<C64> = f.iter().map(|x| x.conj()).collect();
        if let Some(v) = orthonormal_residual(&conj, &span) {
            span.push(v);
        }
    }
    let rank = span.len();
    let mut basis = Vec::new();
    for k in 0..dim {
        if basis.len() + rank == dim {
            break;
        }
        let mut e = alloc::vec![C64::zero(); dim];
        e[k] = C64::new(1.0, 0.0);
        let all: Vec<Vec<C64>> = span.iter().chain(basis.iter()).cloned().collect();
        if let Some(v) = orthonormal_residual(&e, &all) {
            basis.push(v);
        }
    }
    basis
}

/// Component of `v` orthogonal to the orthonormal set `basis`, normalized,
/// or `None` if it is numerically zero. Two passes of Gram–Schmidt.
fn orthonormal_residual(v: &[C64], basis: &[Vec<C64>]) -> Option<Vec<C64>> {
    let scale = norm2(v);
    if scale == 0.0 {
        return None;
    }
    let mut w = v.to_vec();
    for _ in 0..2 {
        for b in basis {
            let p = hdot(&w, b);
            for (wi, bi) in w.iter_mut().zip(b) {
                *wi -= p * bi;
            }
        }
    }
    let n = norm2(&w);
    (n > 1e-10 * scale).then(|| w.iter().map(|x| x / n).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use alloc::vec;

    fn re(v: &[f64]) -> Vec<C64> {
        v.iter().map(|&x| c64(x, 0.0)).collect()
    }

    #[test]
    fn det_of_known_matrix() {
        let m = vec![re(&[2.0, 0.0, 1.0]), re(&[1.0, 3.0, 2.0]), re(&[1.0, 1.0, 1.0])];
        // 2(3−2) − 0 + 1(1−3) = 0
        assert!(det(&m).norm() < 1e-14);
        let m = vec![re(&[1.0, 2.0]), vec![c64(0.0, 1.0), c64(1.0, 0.0)]];
        assert!((det(&m) - c64(1.0, -2.0)).norm() < 1e-14);
    }

    #[test]
    fn null_space_is_annihilated() {
        let forms = vec![
            vec![c64(1.0, 1.0), c64(2.0, 0.0), c64(0.0, -1.0), c64(1.0, 0.0)],
            vec![c64(0.0, 0.0), c64(1.0, 0.0), c64(3.0, 2.0), c64(-1.0, 0.0)],
        ];
        let ns = null_space(&forms, 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!((norm2(v) - 1.0).abs() < 1e-14);
            for f in &forms {
                assert!(apply_form(f, v).norm() < 1e-13);
            }
        }
        assert!(hdot(&ns[0], &ns[1]).norm() < 1e-14);
    }

    #[test]
    fn dependent_forms_lower_rank() {
        let f = re(&[1.0, 1.0, 0.0]);
        let ns = null_space(&[f.clone(), f], 3);
        assert_eq!(ns.len(), 2);
    }
}
