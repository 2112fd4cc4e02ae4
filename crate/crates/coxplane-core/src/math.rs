//! Dense linear algebra for small matrices.
//!
//! Every matrix in this crate has at most a few hundred rows (root counts)
//! and at most 8 columns (the rank of the largest supported group), so plain
//! row-major `Vec<f64>` storage with textbook algorithms is both fast enough
//! and easy to audit. All transcendental functions are routed through [`fm`]
//! to keep the crate `no_std`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

/// Float math entry points, backed by `libm`.
///
/// `core` provides arithmetic but no transcendental functions; keeping the
/// call sites behind one module makes the dependency obvious and greppable.
pub mod fm {
    #[inline]
    pub fn cos(x: f64) -> f64 {
        libm::cos(x)
    }
    #[inline]
    pub fn sin(x: f64) -> f64 {
        libm::sin(x)
    }
    #[inline]
    pub fn sqrt(x: f64) -> f64 {
        libm::sqrt(x)
    }
    #[inline]
    pub fn acos(x: f64) -> f64 {
        libm::acos(x)
    }
    #[inline]
    pub fn atan2(y: f64, x: f64) -> f64 {
        libm::atan2(y, x)
    }
    #[inline]
    pub fn round(x: f64) -> f64 {
        libm::round(x)
    }
    #[inline]
    pub fn floor(x: f64) -> f64 {
        libm::floor(x)
    }
    #[inline]
    pub fn fabs(x: f64) -> f64 {
        libm::fabs(x)
    }
    #[inline]
    pub fn hypot(x: f64, y: f64) -> f64 {
        libm::hypot(x, y)
    }
}

pub use core::f64::consts::PI;

/// Default tolerance for matching computed coordinates against exact values.
///
/// All quantities in this crate are O(1) (roots have unit norm, matrices are
/// orthogonal), and the shortest chains of floating operations that produce
/// them keep the error far below this threshold, while every genuine
/// geometric gap (distinct radii, distinct angles, nonzero eigenvalue
/// separations) is several orders of magnitude above it.
pub const DEFAULT_TOL: f64 = 1e-8;

#[inline]
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[inline]
pub fn norm(a: &[f64]) -> f64 {
    fm::sqrt(dot(a, a))
}

/// `a += s * b`, in place.
#[inline]
pub fn axpy(a: &mut [f64], s: f64, b: &[f64]) {
    debug_assert_eq!(a.len(), b.len());
    for (x, y) in a.iter_mut().zip(b) {
        *x += s * y;
    }
}

#[inline]
pub fn scale(a: &mut [f64], s: f64) {
    for x in a {
        *x *= s;
    }
}

#[inline]
pub fn approx_eq(a: f64, b: f64, tol: f64) -> bool {
    fm::fabs(a - b) <= tol
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<f64>,
}

impl core::fmt::Debug for Mat {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| format!("{:+.6}", self.get(i, j)))
                .collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            a: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut a = Vec::with_capacity(r * c);
        for row in rows {
            debug_assert_eq!(row.len(), c);
            a.extend_from_slice(row);
        }
        Mat { rows: r, cols: c, a }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.a[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.a[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let s = self.get(i, k);
                if s == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.a[i * out.cols + j] += s * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (x, y) in out.a.iter_mut().zip(&other.a) {
            *x -= y;
        }
        out
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn max_abs_diff(&self, other: &Mat) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.a
            .iter()
            .zip(&other.a)
            .map(|(x, y)| fm::fabs(x - y))
            .fold(0.0, f64::max)
    }
}

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// Returns `(eigenvalues, eigenvectors)` with `eigenvectors.col(k)` the unit
/// eigenvector for `eigenvalues[k]`, sorted by descending eigenvalue. The
/// matrices here are at most 8x8, so Jacobi converges in a handful of sweeps
/// to near machine precision.
pub fn jacobi_eigen(sym: &Mat) -> (Vec<f64>, Mat) {
    let n = sym.rows;
    assert_eq!(n, sym.cols);
    debug_assert!(sym.max_abs_diff(&sym.transpose()) < 1e-9, "matrix must be symmetric");
    let mut a = sym.clone();
    let mut v = Mat::identity(n);

    for _sweep in 0..100 {
        let mut off = 0.0f64;
        for i in 0..n {
            for j in (i + 1)..n {
                off += a.get(i, j) * a.get(i, j);
            }
        }
        if off < 1e-28 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a.get(p, q);
                if fm::fabs(apq) < 1e-300 {
                    continue;
                }
                let app = a.get(p, p);
                let aqq = a.get(q, q);
                let theta = (aqq - app) / (2.0 * apq);
                // Stable tangent of the rotation angle.
                let t = if theta >= 0.0 {
                    1.0 / (theta + fm::sqrt(1.0 + theta * theta))
                } else {
                    -1.0 / (-theta + fm::sqrt(1.0 + theta * theta))
                };
                let c = 1.0 / fm::sqrt(1.0 + t * t);
                let s = t * c;
                for k in 0..n {
                    let akp = a.get(k, p);
                    let akq = a.get(k, q);
                    a.set(k, p, c * akp - s * akq);
                    a.set(k, q, s * akp + c * akq);
                }
                for k in 0..n {
                    let apk = a.get(p, k);
                    let aqk = a.get(q, k);
                    a.set(p, k, c * apk - s * aqk);
                    a.set(q, k, s * apk + c * aqk);
                }
                for k in 0..n {
                    let vkp = v.get(k, p);
                    let vkq = v.get(k, q);
                    v.set(k, p, c * vkp - s * vkq);
                    v.set(k, q, s * vkp + c * vkq);
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.get(j, j).partial_cmp(&a.get(i, i)).unwrap());
    let vals: Vec<f64> = order.iter().map(|&k| a.get(k, k)).collect();
    let mut vecs = Mat::zeros(n, n);
    for (new_col, &old_col) in order.iter().enumerate() {
        for i in 0..n {
            vecs.set(i, new_col, v.get(i, old_col));
        }
    }
    (vals, vecs)
}

/// Rank of a matrix by Gaussian elimination with partial pivoting.
///
/// `tol` is the pivot threshold; callers pick it from knowledge of the
/// spectrum of their matrices (the matrices here are differences of
/// orthogonal maps whose nonzero singular values are bounded well away
/// from zero).
pub fn rank(mat: &Mat, tol: f64) -> usize {
    let mut a = mat.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut rank = 0;
    let mut pivot_row = 0;
    for col in 0..cols {
        let mut best = pivot_row;
        for r in (pivot_row + 1)..rows {
            if fm::fabs(a.get(r, col)) > fm::fabs(a.get(best, col)) {
                best = r;
            }
        }
        if pivot_row >= rows || fm::fabs(a.get(best, col)) <= tol {
            continue;
        }
        if best != pivot_row {
            for j in 0..cols {
                let tmp = a.get(pivot_row, j);
                a.set(pivot_row, j, a.get(best, j));
                a.set(best, j, tmp);
            }
        }
        let p = a.get(pivot_row, col);
        for r in (pivot_row + 1)..rows {
            let f = a.get(r, col) / p;
            if f == 0.0 {
                continue;
            }
            for j in col..cols {
                let v = a.get(r, j) - f * a.get(pivot_row, j);
                a.set(r, j, v);
            }
        }
        rank += 1;
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    rank
}

/// Orthonormal basis of `{x : Ax = 0}`.
///
/// Runs reduced row echelon elimination with threshold `tol`, reads off one
/// basis vector per free column, then orthonormalizes.
pub fn nullspace(mat: &Mat, tol: f64) -> Vec<Vec<f64>> {
    let mut a = mat.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row >= rows {
            break;
        }
        let mut best = pivot_row;
        for r in (pivot_row + 1)..rows {
            if fm::fabs(a.get(r, col)) > fm::fabs(a.get(best, col)) {
                best = r;
            }
        }
        if fm::fabs(a.get(best, col)) <= tol {
            continue;
        }
        if best != pivot_row {
            for j in 0..cols {
                let tmp = a.get(pivot_row, j);
                a.set(pivot_row, j, a.get(best, j));
                a.set(best, j, tmp);
            }
        }
        let p = a.get(pivot_row, col);
        for j in 0..cols {
            a.set(pivot_row, j, a.get(pivot_row, j) / p);
        }
        for r in 0..rows {
            if r == pivot_row {
                continue;
            }
            let f = a.get(r, col);
            if f == 0.0 {
                continue;
            }
            for j in 0..cols {
                let v = a.get(r, j) - f * a.get(pivot_row, j);
                a.set(r, j, v);
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
    }

    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut x = vec![0.0; cols];
        x[free] = 1.0;
        for (r, &pc) in pivot_cols.iter().enumerate() {
            x[pc] = -a.get(r, free);
        }
        basis.push(x);
    }
    orthonormalize(&basis, tol)
}

/// Gram-Schmidt with column pivot dropping: returns an orthonormal spanning
/// subset of the input vectors (vectors that fall inside the span of the
/// previous ones are discarded, not zero-padded).
pub fn orthonormalize(vecs: &[Vec<f64>], tol: f64) -> Vec<Vec<f64>> {
    let mut basis: Vec<Vec<f64>> = Vec::new();
    for v in vecs {
        let mut w = v.clone();
        // Re-orthogonalize twice for numerical stability.
        for _ in 0..2 {
            for b in &basis {
                let c = dot(&w, b);
                axpy(&mut w, -c, b);
            }
        }
        let n = norm(&w);
        if n > tol {
            scale(&mut w, 1.0 / n);
            basis.push(w);
        }
    }
    basis
}

/// Orthonormal basis of the orthogonal complement of `span(basis)` in R^dim.
pub fn orthonormal_complement(basis: &[Vec<f64>], dim: usize, tol: f64) -> Vec<Vec<f64>> {
    let mut all: Vec<Vec<f64>> = basis.to_vec();
    for i in 0..dim {
        let mut e = vec![0.0; dim];
        e[i] = 1.0;
        all.push(e);
    }
    let full = orthonormalize(&all, tol);
    full.into_iter().skip(basis.len()).collect()
}

/// Cholesky factor `L` (lower triangular, `L L^T = A`) of a symmetric
/// positive definite matrix, or `None` if a pivot drops below `tol`.
pub fn cholesky(sym: &Mat, tol: f64) -> Option<Mat> {
    let n = sym.rows;
    assert_eq!(n, sym.cols);
    let mut l = Mat::zeros(n, n);
    for i in 0..n {
        for j in 0..=i {
            let mut s = sym.get(i, j);
            for k in 0..j {
                s -= l.get(i, k) * l.get(j, k);
            }
            if i == j {
                if s <= tol {
                    return None;
                }
                l.set(i, i, fm::sqrt(s));
            } else {
                l.set(i, j, s / l.get(j, j));
            }
        }
    }
    Some(l)
}

/// Reduce an angle to the half-open interval `[0, modulus)`.
pub fn wrap_angle(theta: f64, modulus: f64) -> f64 {
    let mut t = theta - modulus * fm::floor(theta / modulus);
    // floor can leave t == modulus when theta/modulus is a hair below an
    // integer; fold that back to 0.
    if t >= modulus {
        t -= modulus;
    }
    if t < 0.0 {
        t += modulus;
    }
    t
}

/// Distance from `theta` to the nearest representative of `target` modulo
/// `modulus` (always in `[0, modulus/2]`).
pub fn angle_dist(theta: f64, target: f64, modulus: f64) -> f64 {
    let d = wrap_angle(theta - target, modulus);
    d.min(modulus - d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_recovers_known_spectrum() {
        // Symmetric matrix with eigenvalues 3 and 1.
        let m = Mat::from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]);
        let (vals, vecs) = jacobi_eigen(&m);
        assert!(approx_eq(vals[0], 3.0, 1e-12));
        assert!(approx_eq(vals[1], 1.0, 1e-12));
        for k in 0..2 {
            let v = vecs.col(k);
            let mv = m.apply(&v);
            for i in 0..2 {
                assert!(approx_eq(mv[i], vals[k] * v[i], 1e-12));
            }
        }
    }

    #[test]
    fn jacobi_handles_repeated_eigenvalues() {
        let m = Mat::identity(4);
        let (vals, vecs) = jacobi_eigen(&m);
        for v in vals {
            assert!(approx_eq(v, 1.0, 1e-14));
        }
        // Eigenvector matrix stays orthogonal.
        let vtv = vecs.transpose().mul(&vecs);
        assert!(vtv.max_abs_diff(&Mat::identity(4)) < 1e-12);
    }

    #[test]
    fn rank_and_nullspace_agree() {
        // Rank 2 matrix in R^4: rows e1+e2, e2+e3, e1+2e2+e3.
        let m = Mat::from_rows(&[
            vec![1.0, 1.0, 0.0, 0.0],
            vec![0.0, 1.0, 1.0, 0.0],
            vec![1.0, 2.0, 1.0, 0.0],
        ]);
        assert_eq!(rank(&m, 1e-9), 2);
        let ns = nullspace(&m, 1e-9);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let mv = m.apply(v);
            for x in mv {
                assert!(fm::fabs(x) < 1e-12);
            }
        }
        // Basis is orthonormal.
        assert!(approx_eq(dot(&ns[0], &ns[0]), 1.0, 1e-12));
        assert!(approx_eq(dot(&ns[1], &ns[1]), 1.0, 1e-12));
        assert!(fm::fabs(dot(&ns[0], &ns[1])) < 1e-12);
    }

    #[test]
    fn complement_completes_the_space() {
        let b = vec![vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0]];
        let c = orthonormal_complement(&b, 3, 1e-9);
        assert_eq!(c.len(), 1);
        assert!(approx_eq(fm::fabs(c[0][2]), 1.0, 1e-12));
    }

    #[test]
    fn cholesky_roundtrips() {
        let m = Mat::from_rows(&[vec![4.0, 2.0], vec![2.0, 3.0]]);
        let l = cholesky(&m, 1e-12).unwrap();
        let llt = l.mul(&l.transpose());
        assert!(llt.max_abs_diff(&m) < 1e-12);
    }

    #[test]
    fn cholesky_rejects_indefinite() {
        let m = Mat::from_rows(&[vec![1.0, 2.0], vec![2.0, 1.0]]);
        assert!(cholesky(&m, 1e-12).is_none());
    }

    #[test]
    fn angle_wrapping() {
        assert!(approx_eq(wrap_angle(-0.25, 1.0), 0.75, 1e-12));
        assert!(approx_eq(wrap_angle(7.25, 1.0), 0.25, 1e-12));
        assert!(approx_eq(angle_dist(0.1, 0.9, 1.0), 0.2, 1e-12));
        // Exact multiples stay at zero instead of landing on the modulus.
        assert_eq!(wrap_angle(2.0 * PI, 2.0 * PI), 0.0);
    }
}
