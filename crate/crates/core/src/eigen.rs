//! Eigenvalues of dense Hermitian matrices: Householder reduction to a real
//! symmetric tridiagonal matrix, then implicit QL with Wilkinson shifts.

use alloc::vec;
use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use num_complex::Complex64;

/// Eigenvalues of the Hermitian `dim × dim` matrix stored row-major in
/// `a`, in ascending order. Only the lower triangle is read; `a` is
/// overwritten.
///
/// # Panics
///
/// If `a.len() != dim * dim`.
pub fn hermitian_eigenvalues(dim: usize, a: &mut [Complex64]) -> Vec<f64> {
    assert_eq!(
        a.len(),
        dim * dim,
        "matrix storage does not match dimension"
    );
    let (mut d, mut e) = tridiagonalize(dim, a);
    tridiagonal_eigenvalues(&mut d, &mut e);
    d.sort_by(f64::total_cmp);
    d
}

/// Reduces `a` to tridiagonal form. Returns the diagonal and the moduli of
/// the sub-diagonal (`e[i]` couples `i` and `i + 1`, `e[dim - 1] = 0`).
fn tridiagonalize(n: usize, a: &mut [Complex64]) -> (Vec<f64>, Vec<f64>) {
    let zero = Complex64::new(0.0, 0.0);
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    let mut v = vec![zero; n];
    let mut p = vec![zero; n];
    for k in 0..n.saturating_sub(2) {
        let m = n - k - 1;
        let mut norm2 = 0.0;
        for i in 0..m {
            v[i] = a[(k + 1 + i) * n + k];
            norm2 += v[i].norm_sqr();
        }
        let norm = norm2.sqrt();
        e[k] = norm;
        // the reflector only needs the off-diagonal part of the column
        let tail2 = norm2 - v[0].norm_sqr();
        if tail2 == 0.0 {
            continue;
        }
        let x0 = v[0];
        let phase = if x0 == zero {
            Complex64::new(1.0, 0.0)
        } else {
            x0 / x0.norm()
        };
        let alpha = -phase * norm;
        v[0] -= alpha;
        let vnorm2: f64 = v[..m].iter().map(|z| z.norm_sqr()).sum();
        let tau = 2.0 / vnorm2;

        // p = τ B v on the trailing block, using the lower triangle only
        p[..m].fill(zero);
        for i in 0..m {
            let row = (k + 1 + i) * n + k + 1;
            let bii = a[row + i];
            let mut acc = bii * v[i];
            for j in 0..i {
                let bij = a[row + j];
                acc += bij * v[j];
                p[j] += bij.conj() * v[i];
            }
            p[i] += acc;
        }
        let mut vp = zero;
        for i in 0..m {
            p[i] *= tau;
            vp += v[i].conj() * p[i];
        }
        let half = 0.5 * tau * vp.re;
        for i in 0..m {
            p[i] -= v[i] * half;
        }
        // B -= v wᴴ + w vᴴ, lower triangle
        for i in 0..m {
            let row = (k + 1 + i) * n + k + 1;
            for j in 0..=i {
                a[row + j] -= v[i] * p[j].conj() + p[i] * v[j].conj();
            }
        }
    }
    if n >= 2 {
        e[n - 2] = a[(n - 1) * n + n - 2].norm();
    }
    for i in 0..n {
        d[i] = a[i * n + i].re;
    }
    (d, e)
}

/// Implicit QL on a symmetric tridiagonal matrix. `d` is overwritten with
/// the (unsorted) eigenvalues.
fn tridiagonal_eigenvalues(d: &mut [f64], e: &mut [f64]) {
    let n = d.len();
    if n == 0 {
        return;
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    e[m] = 0.0;
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            assert!(iterations <= 200, "tridiagonal QL failed to converge");
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
}
