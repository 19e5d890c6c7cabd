//! Dense symmetric eigenvalues and inertia counts.
//!
//! A symmetric matrix is reduced to tridiagonal form by Householder
//! reflections. Eigenvalues then come from the implicitly shifted QL
//! iteration, and counts of eigenvalues below a shift come from the
//! Sturm sequence (the signs of the LDLᵀ pivots of `T - xI`).

use crate::error::{Error, Result};

/// Square real matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    dim: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, data: vec![0.0; dim * dim] }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self { dim, data }
    }

    /// Builds a matrix from rows; panics if they are not square.
    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        Self { dim, data: rows.concat() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.dim + j] = value;
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.dim.max(1)).take(self.dim).map(<[f64]>::to_vec).collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn max_row_sum(&self) -> f64 {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j).abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Errors on the first non-finite entry or the first pair differing by
    /// more than `tol`.
    pub fn check_symmetric(&self, tol: f64) -> Result<()> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                if !self.get(i, j).is_finite() {
                    return Err(Error::NonFinite(i, j));
                }
            }
        }
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                if (self.get(i, j) - self.get(j, i)).abs() > tol {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        Ok(())
    }
}

/// Symmetry tolerance accepted by the solvers.
pub const SYMMETRY_TOL: f64 = 1e-10;

/// Symmetric tridiagonal matrix: `diag[0..n]` and `off[0..n-1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Tridiagonal {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl Tridiagonal {
    /// Householder reduction of a symmetric matrix.
    pub fn from_symmetric(mat: &Matrix) -> Result<Self> {
        mat.check_symmetric(SYMMETRY_TOL)?;
        let n = mat.dim();
        let mut a = mat.clone();
        // Symmetrize exactly so the two triangles cannot drift.
        for i in 0..n {
            for j in 0..i {
                let v = 0.5 * (a.get(i, j) + a.get(j, i));
                a.set(i, j, v);
                a.set(j, i, v);
            }
        }
        let mut diag = vec![0.0; n];
        let mut off = vec![0.0; n.saturating_sub(1)];
        let mut v = vec![0.0; n];
        let mut p = vec![0.0; n];
        for k in 0..n.saturating_sub(2) {
            // Column k below the diagonal.
            let norm = (k + 1..n).map(|i| a.get(i, k).powi(2)).sum::<f64>().sqrt();
            let x0 = a.get(k + 1, k);
            if norm == 0.0 {
                off[k] = 0.0;
                diag[k] = a.get(k, k);
                continue;
            }
            let alpha = if x0 > 0.0 { -norm } else { norm };
            // v = x - alpha e_1, normalized.
            v[k + 1] = x0 - alpha;
            for i in k + 2..n {
                v[i] = a.get(i, k);
            }
            let vnorm = (k + 1..n).map(|i| v[i] * v[i]).sum::<f64>().sqrt();
            diag[k] = a.get(k, k);
            off[k] = alpha;
            if vnorm == 0.0 {
                continue;
            }
            for vi in &mut v[k + 1..n] {
                *vi /= vnorm;
            }
            // p = A v on the trailing block, K = vᵀ p, q = 2(p - K v).
            for i in k + 1..n {
                p[i] = (k + 1..n).map(|j| a.get(i, j) * v[j]).sum();
            }
            let kk: f64 = (k + 1..n).map(|i| v[i] * p[i]).sum();
            for i in k + 1..n {
                p[i] = 2.0 * (p[i] - kk * v[i]);
            }
            // A <- A - v qᵀ - q vᵀ
            for i in k + 1..n {
                for j in k + 1..=i {
                    let val = a.get(i, j) - v[i] * p[j] - p[i] * v[j];
                    a.set(i, j, val);
                    a.set(j, i, val);
                }
            }
        }
        if n >= 2 {
            diag[n - 2] = a.get(n - 2, n - 2);
            off[n - 2] = a.get(n - 1, n - 2);
        }
        if n >= 1 {
            diag[n - 1] = a.get(n - 1, n - 1);
        }
        Ok(Self { diag, off })
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    /// Number of eigenvalues `<= x`.
    ///
    /// Counts non-positive pivots of the LDLᵀ factorization of `T - xI`; a
    /// zero pivot is replaced by a tiny negative value, so an eigenvalue
    /// exactly at `x` is counted.
    pub fn count_leq(&self, x: f64) -> usize {
        let n = self.dim();
        if n == 0 {
            return 0;
        }
        let scale = self
            .diag
            .iter()
            .chain(&self.off)
            .fold(x.abs(), |m, v| m.max(v.abs()))
            .max(1.0);
        let pivmin = f64::MIN_POSITIVE * scale * scale;
        let mut count = 0;
        let mut q = self.diag[0] - x;
        for i in 0..n {
            if i > 0 {
                q = (self.diag[i] - x) - self.off[i - 1] * self.off[i - 1] / q;
            }
            if q.abs() < pivmin {
                q = -pivmin;
            }
            if q <= 0.0 {
                count += 1;
            }
        }
        count
    }

    /// All eigenvalues, descending, by implicit QL with Wilkinson-style
    /// shifts.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        let n = self.dim();
        let mut d = self.diag.clone();
        // e[i] couples d[i] and d[i+1]; e[n-1] is scratch.
        let mut e = self.off.clone();
        e.push(0.0);
        for l in 0..n {
            let mut iter = 0;
            loop {
                let mut m = l;
                while m + 1 < n {
                    let dd = d[m].abs() + d[m + 1].abs();
                    if e[m].abs() <= f64::EPSILON * dd {
                        break;
                    }
                    m += 1;
                }
                if m == l {
                    break;
                }
                iter += 1;
                if iter > 60 {
                    return Err(Error::NoConvergence);
                }
                let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                let mut r = g.hypot(1.0);
                g = d[m] - d[l] + e[l] / (g + r.copysign(g));
                let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
                let mut deflated = false;
                let mut i = m;
                while i > l {
                    i -= 1;
                    let f = s * e[i];
                    let b = c * e[i];
                    r = f.hypot(g);
                    e[i + 1] = r;
                    if r == 0.0 {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        deflated = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if deflated {
                    continue;
                }
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        }
        d.sort_by(|a, b| b.total_cmp(a));
        Ok(d)
    }
}

/// All eigenvalues of a symmetric matrix, descending.
pub fn symmetric_eigenvalues(mat: &Matrix) -> Result<Vec<f64>> {
    Tridiagonal::from_symmetric(mat)?.eigenvalues()
}

/// Number of eigenvalues of a symmetric matrix that are `<= x`.
pub fn count_eigs_leq(mat: &Matrix, x: f64) -> Result<usize> {
    Ok(Tridiagonal::from_symmetric(mat)?.count_leq(x))
}
