//! Matrix exponentials: Padé scaling-and-squaring for dense matrices and a
//! Lanczos (Krylov) propagator for Hermitian action on a single vector.

use crate::error::{Error, Result};
use crate::math::linalg::{hermitian_defect, inner, lu_solve, max_abs, norm_sq, one_norm};
use crate::scalar::{cr, Real, C};
use ndarray::{Array1, Array2};

/// Dense matrix exponential `exp(A)` by [13/13] Padé with scaling-and-squaring.
pub fn expm<T: Real>(a: &Array2<C<T>>) -> Result<Array2<C<T>>> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(Error::DimensionMismatch { expected: n, got: a.ncols() });
    }
    const THETA13: f64 = 5.371_920_351_148_152;
    let norm = one_norm(a);
    let mut s: i32 = 0;
    if norm > T::of(THETA13) {
        s = (norm / T::of(THETA13)).log2().ceil().as_f64() as i32;
    }
    let scale = cr(T::of(0.5f64.powi(s)));
    let a = a.mapv(|z| z * scale);

    let b: [f64; 14] = [
        64764752532480000.0,
        32382376266240000.0,
        7771770303897600.0,
        1187353796428800.0,
        129060195264000.0,
        10559470521600.0,
        670442572800.0,
        33522128640.0,
        1323241920.0,
        40840800.0,
        960960.0,
        16380.0,
        182.0,
        1.0,
    ];
    let bc = |k: usize| cr(T::of(b[k]));

    let eye = Array2::<C<T>>::eye(n);
    let a2 = a.dot(&a);
    let a4 = a2.dot(&a2);
    let a6 = a4.dot(&a2);

    let u_inner = &a6.mapv(|z| z * bc(13)) + &a4.mapv(|z| z * bc(11)) + &a2.mapv(|z| z * bc(9));
    let u_poly = a6.dot(&u_inner)
        + &a6.mapv(|z| z * bc(7))
        + &a4.mapv(|z| z * bc(5))
        + &a2.mapv(|z| z * bc(3))
        + &eye.mapv(|z| z * bc(1));
    let u = a.dot(&u_poly);

    let v_inner = &a6.mapv(|z| z * bc(12)) + &a4.mapv(|z| z * bc(10)) + &a2.mapv(|z| z * bc(8));
    let v = a6.dot(&v_inner)
        + &a6.mapv(|z| z * bc(6))
        + &a4.mapv(|z| z * bc(4))
        + &a2.mapv(|z| z * bc(2))
        + &eye.mapv(|z| z * bc(0));

    let lhs = &v - &u;
    let rhs = &v + &u;
    let mut x = lu_solve(lhs, &rhs)?;
    for _ in 0..s {
        x = x.dot(&x);
    }
    Ok(x)
}

/// Unitary propagator `exp(-i H t)` for Hermitian `H`.
///
/// Verifies Hermiticity (relative defect below `1e-10`) before exponentiating.
pub fn propagator<T: Real>(h: &Array2<C<T>>, t: T) -> Result<Array2<C<T>>> {
    let defect = hermitian_defect(h);
    let scale = max_abs(h).max(T::one());
    if defect > T::of(1e-10) * scale {
        return Err(Error::NonHermitian { defect: defect.as_f64() });
    }
    let mi_t = C::new(T::zero(), -t);
    expm(&h.mapv(|z| z * mi_t))
}

/// `exp(-i t H) v` for Hermitian `H` given as a mat-vec closure, via a Lanczos
/// Krylov subspace with full reorthogonalization.
///
/// The subspace grows until the a-posteriori residual estimate drops below
/// `tol * ||v||`; if `max_krylov` is reached first, the step is split in two.
pub fn lanczos_expv<T, F>(
    matvec: &F,
    v: &Array1<C<T>>,
    t: T,
    tol: T,
    max_krylov: usize,
) -> Result<Array1<C<T>>>
where
    T: Real,
    F: Fn(&Array1<C<T>>) -> Array1<C<T>>,
{
    lanczos_expv_depth(matvec, v, t, tol, max_krylov, 0)
}

fn lanczos_expv_depth<T, F>(
    matvec: &F,
    v: &Array1<C<T>>,
    t: T,
    tol: T,
    max_krylov: usize,
    depth: usize,
) -> Result<Array1<C<T>>>
where
    T: Real,
    F: Fn(&Array1<C<T>>) -> Array1<C<T>>,
{
    if depth > 24 {
        return Err(Error::NonConvergence("Lanczos step splitting exceeded depth".into()));
    }
    let beta0 = norm_sq(v).sqrt();
    if beta0 == T::zero() {
        return Ok(v.clone());
    }
    let dim = v.len();
    let m_cap = max_krylov.min(dim);
    let mut basis: Vec<Array1<C<T>>> = vec![v.mapv(|z| z / cr(beta0))];
    let mut alphas: Vec<T> = Vec::new();
    let mut betas: Vec<T> = Vec::new();
    let mut happy = false;

    let mut j = 0;
    loop {
        let mut w = matvec(&basis[j]);
        let alpha = inner(&basis[j], &w).re;
        alphas.push(alpha);
        w = &w - &basis[j].mapv(|z| z * cr(alpha));
        if j > 0 {
            let b = betas[j - 1];
            w = &w - &basis[j - 1].mapv(|z| z * cr(b));
        }
        // full reorthogonalization for numerical safety at these sizes
        for q in &basis {
            let c = inner(q, &w);
            w = &w - &q.mapv(|z| z * c);
        }
        let beta = norm_sq(&w).sqrt();
        if beta < T::of(1e-14) * beta0.max(T::one()) {
            happy = true;
        } else {
            betas.push(beta);
        }

        let m = alphas.len();
        let converged_check = happy || m == m_cap || (m >= 4 && m % 2 == 0);
        if converged_check {
            let y = small_exp_column(&alphas, &betas, t)?;
            let err = if happy || m == dim {
                T::zero()
            } else {
                (betas[m - 1] * y[m - 1].norm()).abs()
            };
            if happy || err <= tol || m == dim {
                let mut out = Array1::<C<T>>::zeros(v.len());
                for (k, q) in basis.iter().enumerate().take(m) {
                    out = &out + &q.mapv(|z| z * y[k] * cr(beta0));
                }
                return Ok(out);
            }
            if m == m_cap {
                // split the step: exp(-iHt) = exp(-iHt/2)^2
                let half = t * T::of(0.5);
                let mid = lanczos_expv_depth(matvec, v, half, tol * T::of(0.5), max_krylov, depth + 1)?;
                return lanczos_expv_depth(matvec, &mid, half, tol * T::of(0.5), max_krylov, depth + 1);
            }
        }
        if happy {
            unreachable!("happy breakdown returns above");
        }
        basis.push(w.mapv(|z| z / cr(*betas.last().unwrap())));
        j += 1;
    }
}

/// First column of `exp(-i t T_m)` for the real symmetric tridiagonal built
/// from Lanczos coefficients.
fn small_exp_column<T: Real>(alphas: &[T], betas: &[T], t: T) -> Result<Vec<C<T>>> {
    let m = alphas.len();
    let mut tm = Array2::<C<T>>::zeros((m, m));
    let mi_t = C::new(T::zero(), -t);
    for i in 0..m {
        tm[(i, i)] = cr(alphas[i]) * mi_t;
        if i + 1 < m {
            tm[(i, i + 1)] = cr(betas[i]) * mi_t;
            tm[(i + 1, i)] = cr(betas[i]) * mi_t;
        }
    }
    let e = expm(&tm)?;
    Ok((0..m).map(|i| e[(i, 0)]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    fn c(re: f64, im: f64) -> C<f64> {
        C::new(re, im)
    }

    #[test]
    fn expm_of_diagonal() {
        let a = array![[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-2.0, 0.5)]];
        let e = expm(&a).unwrap();
        assert!((e[(0, 0)] - c(1.0f64.exp(), 0.0)).norm() < 1e-14);
        assert!((e[(1, 1)] - C::new(-2.0, 0.5).exp()).norm() < 1e-13);
        assert!(e[(0, 1)].norm() < 1e-15);
    }

    #[test]
    fn expm_pauli_x_rotation() {
        // exp(-i theta sigma_x) = cos(theta) I - i sin(theta) sigma_x
        let theta = 0.7f64;
        let sx = array![[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]];
        let u = propagator(&sx, theta).unwrap();
        assert!((u[(0, 0)] - c(theta.cos(), 0.0)).norm() < 1e-14);
        assert!((u[(0, 1)] - c(0.0, -theta.sin())).norm() < 1e-14);
    }

    #[test]
    fn expm_large_norm_scaling() {
        // exp of 40*sigma_x rotation stays unitary
        let sx = array![[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]];
        let u = propagator(&sx, 40.0).unwrap();
        let udag = crate::math::linalg::adjoint(&u);
        let id = udag.dot(&u);
        assert!((id[(0, 0)] - c(1.0, 0.0)).norm() < 1e-12);
        assert!(id[(0, 1)].norm() < 1e-12);
        assert!((u[(0, 0)] - c(40.0f64.cos(), 0.0)).norm() < 1e-11);
    }

    #[test]
    fn lanczos_matches_dense_propagator() {
        // random-ish Hermitian 24x24
        let n = 24;
        let mut h = Array2::<C<f64>>::zeros((n, n));
        let mut x = 0.123f64;
        let mut next = || {
            x = (x * 997.0 + 0.317).fract();
            x - 0.5
        };
        for i in 0..n {
            for j in i..n {
                let z = if i == j { c(next(), 0.0) } else { C::new(next(), next()) };
                h[(i, j)] = z;
                h[(j, i)] = z.conj();
            }
        }
        let mut v = Array1::<C<f64>>::zeros(n);
        for i in 0..n {
            v[i] = C::new(next(), next());
        }
        let nrm = norm_sq(&v).sqrt();
        let v = v.mapv(|z| z / cr(nrm));

        let t = 2.3;
        let dense = propagator(&h, t).unwrap().dot(&v);
        let hv = |x: &Array1<C<f64>>| h.dot(x);
        let kry = lanczos_expv(&hv, &v, t, 1e-12, 64).unwrap();
        let diff: f64 = dense
            .iter()
            .zip(kry.iter())
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt();
        assert!(diff < 1e-10, "krylov vs dense diff {diff:.2e}");
        // norm preserved
        assert!((norm_sq(&kry).sqrt() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn lanczos_splits_when_subspace_capped() {
        let n = 12;
        let mut h = Array2::<C<f64>>::zeros((n, n));
        for i in 0..n {
            h[(i, i)] = c(i as f64, 0.0);
            if i + 1 < n {
                h[(i, i + 1)] = c(0.5, 0.2);
                h[(i + 1, i)] = c(0.5, -0.2);
            }
        }
        let v = Array1::<C<f64>>::from_elem(n, c((1.0 / (n as f64)).sqrt(), 0.0));
        let hv = |x: &Array1<C<f64>>| h.dot(x);
        let kry = lanczos_expv(&hv, &v, 50.0, 1e-11, 6).unwrap();
        let dense = propagator(&h, 50.0).unwrap().dot(&v);
        let diff: f64 = dense
            .iter()
            .zip(kry.iter())
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt();
        assert!(diff < 1e-8, "split krylov vs dense diff {diff:.2e}");
    }
}
