//! Dense complex linear algebra on `ndarray` types: norms, adjoints, LU
//! solves, and a Jacobi eigensolver for Hermitian matrices.

use crate::error::{Error, Result};
use crate::scalar::{Real, C};
use ndarray::{Array1, Array2};

/// Conjugate transpose.
pub fn adjoint<T: Real>(a: &Array2<C<T>>) -> Array2<C<T>> {
    a.t().mapv(|z| z.conj())
}

/// Induced 1-norm (maximum absolute column sum).
pub fn one_norm<T: Real>(a: &Array2<C<T>>) -> T {
    let mut best = T::zero();
    for col in a.columns() {
        let s = col.iter().map(|z| z.norm()).sum::<T>();
        if s > best {
            best = s;
        }
    }
    best
}

/// Largest elementwise magnitude.
pub fn max_abs<T: Real>(a: &Array2<C<T>>) -> T {
    a.iter().map(|z| z.norm()).fold(T::zero(), T::max)
}

/// Largest elementwise magnitude of `A - A†`.
pub fn hermitian_defect<T: Real>(a: &Array2<C<T>>) -> T {
    let n = a.nrows();
    let mut defect = T::zero();
    for i in 0..n {
        for j in i..n {
            let d = (a[(i, j)] - a[(j, i)].conj()).norm();
            if d > defect {
                defect = d;
            }
        }
    }
    defect
}

/// Squared 2-norm of a complex vector.
pub fn norm_sq<T: Real>(v: &Array1<C<T>>) -> T {
    v.iter().map(|z| z.norm_sqr()).sum()
}

/// Inner product `<a|b>` (conjugate-linear in the first argument).
pub fn inner<T: Real>(a: &Array1<C<T>>, b: &Array1<C<T>>) -> C<T> {
    a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum()
}

/// Solve `A X = B` by LU decomposition with partial pivoting. `A` is consumed.
pub fn lu_solve<T: Real>(mut a: Array2<C<T>>, b: &Array2<C<T>>) -> Result<Array2<C<T>>> {
    let n = a.nrows();
    if a.ncols() != n || b.nrows() != n {
        return Err(Error::DimensionMismatch { expected: n, got: b.nrows() });
    }
    let mut x = b.clone();
    let m = x.ncols();
    let mut piv: Vec<usize> = (0..n).collect();
    for k in 0..n {
        // pivot
        let mut p = k;
        let mut best = a[(k, k)].norm();
        for i in (k + 1)..n {
            let v = a[(i, k)].norm();
            if v > best {
                best = v;
                p = i;
            }
        }
        if best == T::zero() {
            return Err(Error::NonConvergence("singular matrix in LU solve".into()));
        }
        if p != k {
            for j in 0..n {
                let tmp = a[(k, j)];
                a[(k, j)] = a[(p, j)];
                a[(p, j)] = tmp;
            }
            piv.swap(k, p);
            for j in 0..m {
                let tmp = x[(k, j)];
                x[(k, j)] = x[(p, j)];
                x[(p, j)] = tmp;
            }
        }
        let pivot = a[(k, k)];
        for i in (k + 1)..n {
            let factor = a[(i, k)] / pivot;
            a[(i, k)] = factor;
            if factor.norm_sqr() > T::zero() {
                for j in (k + 1)..n {
                    let akj = a[(k, j)];
                    a[(i, j)] -= factor * akj;
                }
                for j in 0..m {
                    let xkj = x[(k, j)];
                    x[(i, j)] -= factor * xkj;
                }
            }
        }
    }
    // back substitution
    for j in 0..m {
        for i in (0..n).rev() {
            let mut acc = x[(i, j)];
            for k in (i + 1)..n {
                acc -= a[(i, k)] * x[(k, j)];
            }
            x[(i, j)] = acc / a[(i, i)];
        }
    }
    Ok(x)
}

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations,
/// returned in ascending order.
pub fn hermitian_eigenvalues<T: Real>(a: &Array2<C<T>>, tol: T) -> Result<Vec<T>> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(Error::DimensionMismatch { expected: n, got: a.ncols() });
    }
    let defect = hermitian_defect(a);
    let scale = max_abs(a).max(T::one());
    if defect > T::of(1e-8) * scale {
        return Err(Error::NonHermitian { defect: defect.as_f64() });
    }
    let mut w = a.clone();
    let off = |w: &Array2<C<T>>| {
        let mut s = T::zero();
        for i in 0..n {
            for j in (i + 1)..n {
                s += w[(i, j)].norm_sqr();
            }
        }
        s.sqrt()
    };
    let target = tol * scale;
    for _sweep in 0..60 {
        if off(&w) <= target {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = w[(p, q)];
                if apq.norm() <= target * T::of(1e-3) / T::of_usize(n * n) {
                    continue;
                }
                let app = w[(p, p)].re;
                let aqq = w[(q, q)].re;
                let mag = apq.norm();
                let phase = apq / crate::scalar::cr(mag); // e^{i arg}
                // real 2x2 rotation zeroing the off-diagonal |apq|
                let theta = (aqq - app) / (T::of(2.0) * mag);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                // U = [[c, s], [-conj(phase) s, conj(phase) c]] on the (p,q) block
                for i in 0..n {
                    let aip = w[(i, p)];
                    let aiq = w[(i, q)];
                    w[(i, p)] = aip * crate::scalar::cr(c) - aiq * phase.conj() * crate::scalar::cr(s);
                    w[(i, q)] = aip * crate::scalar::cr(s) + aiq * phase.conj() * crate::scalar::cr(c);
                }
                for j in 0..n {
                    let apj = w[(p, j)];
                    let aqj = w[(q, j)];
                    w[(p, j)] = apj * crate::scalar::cr(c) - aqj * phase * crate::scalar::cr(s);
                    w[(q, j)] = apj * crate::scalar::cr(s) + aqj * phase * crate::scalar::cr(c);
                }
            }
        }
    }
    if off(&w) > target * T::of(10.0) {
        return Err(Error::NonConvergence("Jacobi eigensolver did not converge".into()));
    }
    let mut vals: Vec<T> = (0..n).map(|i| w[(i, i)].re).collect();
    vals.sort_by(|x, y| x.partial_cmp(y).unwrap());
    Ok(vals)
}
