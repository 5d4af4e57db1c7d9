//! Nonnegative least squares (Lawson–Hanson active set), with an optional
//! sum constraint on the solution.

use crate::error::{Error, Result};
use crate::scalar::Real;
use ndarray::{Array1, Array2};

/// How the total of the solution vector is constrained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumConstraint {
    /// No constraint beyond nonnegativity.
    None,
    /// `sum(x) <= cap` (activated only if the unconstrained optimum exceeds it).
    AtMost,
    /// `sum(x) = cap` enforced always.
    Exactly,
}

/// Solve `min ||A x - y||^2` subject to `x >= 0`.
pub fn nnls<T: Real>(a: &Array2<T>, y: &Array1<T>) -> Result<Array1<T>> {
    let ata = a.t().dot(a);
    let aty = a.t().dot(y);
    nnls_normal(&ata, &aty)
}

/// Solve nonnegative least squares with a cap on `sum(x)`.
///
/// The cap is enforced through a weighted penalty row `w * (sum(x) - cap)`,
/// added only when needed (`AtMost`) or always (`Exactly`). Returns the
/// solution and the residual sum of squares on the original system.
pub fn nnls_sum_constrained<T: Real>(
    a: &Array2<T>,
    y: &Array1<T>,
    cap: T,
    mode: SumConstraint,
) -> Result<(Array1<T>, T)> {
    let n = a.ncols();
    let ata = a.t().dot(a);
    let aty = a.t().dot(y);

    let solve_pen = |ata: &Array2<T>, aty: &Array1<T>| -> Result<Array1<T>> {
        // penalty weight relative to the column scale
        let diag_max = (0..n).map(|i| ata[(i, i)]).fold(T::zero(), T::max).max(T::of(1e-30));
        let w2 = diag_max * T::of(1e8);
        let mut ata_p = ata.clone();
        let mut aty_p = aty.clone();
        for i in 0..n {
            for j in 0..n {
                ata_p[(i, j)] += w2;
            }
            aty_p[i] += w2 * cap;
        }
        nnls_normal(&ata_p, &aty_p)
    };

    let x = match mode {
        SumConstraint::None => nnls_normal(&ata, &aty)?,
        SumConstraint::Exactly => solve_pen(&ata, &aty)?,
        SumConstraint::AtMost => {
            let x = nnls_normal(&ata, &aty)?;
            if x.sum() > cap + T::of(1e-9) {
                solve_pen(&ata, &aty)?
            } else {
                x
            }
        }
    };
    let r = &a.dot(&x) - y;
    let rss = r.iter().map(|v| *v * *v).sum();
    Ok((x, rss))
}

/// Lawson–Hanson on the normal equations `AtA x = Aty`.
fn nnls_normal<T: Real>(ata: &Array2<T>, aty: &Array1<T>) -> Result<Array1<T>> {
    let n = aty.len();
    let mut x = Array1::<T>::zeros(n);
    let mut passive = vec![false; n];
    let scale = (0..n).map(|i| ata[(i, i)]).fold(T::zero(), T::max).max(T::of(1e-300));
    let grad_tol = scale * T::of(1e-12);
    let max_outer = 6 * n + 30;

    let mut w = aty.clone(); // gradient of -0.5||Ax-y||^2 at x=0
    for _outer in 0..max_outer {
        // most positive gradient among free variables
        let mut best: Option<(usize, T)> = None;
        for j in 0..n {
            if !passive[j] && w[j] > grad_tol {
                if best.map(|(_, v)| w[j] > v).unwrap_or(true) {
                    best = Some((j, w[j]));
                }
            }
        }
        let Some((j_new, _)) = best else {
            return Ok(x);
        };
        passive[j_new] = true;

        loop {
            let idx: Vec<usize> = (0..n).filter(|&j| passive[j]).collect();
            let z = solve_passive(ata, aty, &idx)?;
            let min_z = z.iter().cloned().fold(T::infinity(), T::min);
            if min_z > T::zero() {
                for (k, &j) in idx.iter().enumerate() {
                    x[j] = z[k];
                }
                break;
            }
            // step toward z until the first coordinate hits zero
            let mut alpha = T::infinity();
            for (k, &j) in idx.iter().enumerate() {
                if z[k] <= T::zero() {
                    let denom = x[j] - z[k];
                    if denom > T::zero() {
                        alpha = alpha.min(x[j] / denom);
                    } else {
                        alpha = T::zero();
                    }
                }
            }
            if !alpha.is_finite() {
                alpha = T::zero();
            }
            for (k, &j) in idx.iter().enumerate() {
                x[j] = x[j] + alpha * (z[k] - x[j]);
            }
            let drop_tol = T::of(1e-14) * (T::one() + x.sum());
            for &j in &idx {
                if x[j] <= drop_tol {
                    x[j] = T::zero();
                    passive[j] = false;
                }
            }
            if !passive.iter().any(|&p| p) {
                // degenerate step; give up on this variable
                break;
            }
        }

        // refresh gradient: w = Aty - AtA x
        for i in 0..n {
            let mut acc = aty[i];
            for j in 0..n {
                if x[j] != T::zero() {
                    acc -= ata[(i, j)] * x[j];
                }
            }
            w[i] = acc;
        }
    }
    Err(Error::NonConvergence("NNLS active-set iteration limit".into()))
}

/// Solve the unconstrained least-squares subproblem on the passive set by
/// Cholesky on the normal equations, with a tiny ridge retry if singular.
fn solve_passive<T: Real>(ata: &Array2<T>, aty: &Array1<T>, idx: &[usize]) -> Result<Vec<T>> {
    let m = idx.len();
    let mut g = Array2::<T>::zeros((m, m));
    let mut b = Array1::<T>::zeros(m);
    for (r, &i) in idx.iter().enumerate() {
        b[r] = aty[i];
        for (c, &j) in idx.iter().enumerate() {
            g[(r, c)] = ata[(i, j)];
        }
    }
    match cholesky_solve(&g, &b) {
        Ok(z) => Ok(z),
        Err(_) => {
            let trace: T = (0..m).map(|i| g[(i, i)]).sum();
            let ridge = trace / T::of_usize(m.max(1)) * T::of(1e-12) + T::of(1e-300);
            for i in 0..m {
                g[(i, i)] += ridge;
            }
            cholesky_solve(&g, &b)
        }
    }
}

fn cholesky_solve<T: Real>(g: &Array2<T>, b: &Array1<T>) -> Result<Vec<T>> {
    let n = b.len();
    let mut l = Array2::<T>::zeros((n, n));
    for i in 0..n {
        for j in 0..=i {
            let mut acc = g[(i, j)];
            for k in 0..j {
                acc -= l[(i, k)] * l[(j, k)];
            }
            if i == j {
                if acc <= T::zero() {
                    return Err(Error::NonConvergence("Cholesky pivot not positive".into()));
                }
                l[(i, i)] = acc.sqrt();
            } else {
                l[(i, j)] = acc / l[(j, j)];
            }
        }
    }
    // forward then backward substitution
    let mut z = vec![T::zero(); n];
    for i in 0..n {
        let mut acc = b[i];
        for k in 0..i {
            acc -= l[(i, k)] * z[k];
        }
        z[i] = acc / l[(i, i)];
    }
    let mut out = vec![T::zero(); n];
    for i in (0..n).rev() {
        let mut acc = z[i];
        for k in (i + 1)..n {
            acc -= l[(k, i)] * out[k];
        }
        out[i] = acc / l[(i, i)];
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    #[test]
    fn recovers_exact_nonnegative_solution() {
        // x_true = [1, 0, 2], well-conditioned columns
        let a = array![
            [1.0, 0.3, 0.0],
            [0.0, 1.0, 0.5],
            [0.2, 0.0, 1.0],
            [0.5, 0.5, 0.5]
        ];
        let x_true = array![1.0, 0.0, 2.0];
        let y = a.dot(&x_true);
        let x = nnls(&a, &y).unwrap();
        for i in 0..3 {
            assert!((x[i] - x_true[i]).abs() < 1e-10, "x[{i}] = {}", x[i]);
        }
    }

    #[test]
    fn clips_negative_unconstrained_solution() {
        // unconstrained LS would give a negative coefficient
        let a = array![[1.0, 1.0], [1.0, 1.001]];
        let y = array![1.0, 0.5];
        let x = nnls(&a, &y).unwrap();
        assert!(x.iter().all(|&v| v >= 0.0));
        // best nonnegative fit puts everything on one column
        assert!(x[1] == 0.0 || x[0] == 0.0);
    }

    #[test]
    fn sum_cap_activates_only_when_needed() {
        let a = array![[1.0, 0.0], [0.0, 1.0]];
        // unconstrained optimum sums to 3 > 1
        let y = array![2.0, 1.0];
        let (x, _) = nnls_sum_constrained(&a, &y, 1.0, SumConstraint::AtMost).unwrap();
        assert!(x.sum() <= 1.0 + 1e-6, "sum = {}", x.sum());
        // interior optimum untouched
        let y2 = array![0.2, 0.3];
        let (x2, rss2) = nnls_sum_constrained(&a, &y2, 1.0, SumConstraint::AtMost).unwrap();
        assert!((x2[0] - 0.2).abs() < 1e-12 && (x2[1] - 0.3).abs() < 1e-12);
        assert!(rss2 < 1e-20);
    }

    #[test]
    fn strict_sum_forces_total() {
        let a = array![[1.0, 0.0], [0.0, 1.0]];
        let y = array![0.2, 0.3];
        let (x, _) = nnls_sum_constrained(&a, &y, 1.0, SumConstraint::Exactly).unwrap();
        assert!((x.sum() - 1.0).abs() < 1e-6, "sum = {}", x.sum());
    }
}
