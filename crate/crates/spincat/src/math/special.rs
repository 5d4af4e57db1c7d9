//! Log-factorials, scaled generalized Laguerre polynomials, Poisson tails.
//!
//! Everything here works in log space or in a mantissa·2^exp representation so
//! that Fock indices up to several hundred stay well inside the float range.

use crate::scalar::Real;

/// Cumulative table of `ln(n!)` for `n = 0..=n_max`.
pub fn ln_factorial_table<T: Real>(n_max: usize) -> Vec<T> {
    let mut table = Vec::with_capacity(n_max + 1);
    let mut acc = T::zero();
    table.push(acc);
    for n in 1..=n_max {
        acc += T::of_usize(n).ln();
        table.push(acc);
    }
    table
}

/// `ln(n!)` for a single index.
pub fn ln_factorial<T: Real>(n: usize) -> T {
    let mut acc = T::zero();
    for k in 2..=n {
        acc += T::of_usize(k).ln();
    }
    acc
}

/// Generalized Laguerre polynomial `L_k^{(a)}(x)` in scaled form.
///
/// Returns `(mantissa, e)` with the value equal to `mantissa * 2^e`; the
/// mantissa is renormalized during the three-term recurrence so intermediate
/// values never overflow even for k, a of several hundred.
pub fn laguerre_scaled<T: Real>(k: usize, a: usize, x: T) -> (T, i32) {
    let af = T::of_usize(a);
    if k == 0 {
        return (T::one(), 0);
    }
    let mut prev = T::one(); // L_0
    let mut cur = T::one() + af - x; // L_1
    let mut e: i32 = 0;
    let hi = T::of(2.0f64.powi(64));
    let lo = T::of(2.0f64.powi(-64));
    let down = T::of(2.0f64.powi(-64));
    let up = T::of(2.0f64.powi(64));
    for j in 1..k {
        let jf = T::of_usize(j);
        // (j+1) L_{j+1} = (2j+1+a-x) L_j - (j+a) L_{j-1}
        let next = ((T::of(2.0) * jf + T::one() + af - x) * cur - (jf + af) * prev)
            / (jf + T::one());
        prev = cur;
        cur = next;
        let m = cur.abs().max(prev.abs());
        if m > hi {
            cur *= down;
            prev *= down;
            e += 64;
        } else if m > T::zero() && m < lo {
            cur *= up;
            prev *= up;
            e -= 64;
        }
    }
    (cur, e)
}

/// Scaled `L_k^{(a)}(x)` for every `k = 0..k_max` at fixed `a`.
///
/// One pass of the three-term recurrence; entry `k` is `(mantissa, e)` with
/// the same renormalization scheme as [`laguerre_scaled`].
pub fn laguerre_scaled_sequence<T: Real>(k_max: usize, a: usize, x: T) -> Vec<(T, i32)> {
    let af = T::of_usize(a);
    let mut out = Vec::with_capacity(k_max + 1);
    out.push((T::one(), 0));
    if k_max == 0 {
        return out;
    }
    let mut prev = T::one();
    let mut cur = T::one() + af - x;
    let mut e: i32 = 0;
    out.push((cur, e));
    let hi = T::of(2.0f64.powi(64));
    let lo = T::of(2.0f64.powi(-64));
    let down = T::of(2.0f64.powi(-64));
    let up = T::of(2.0f64.powi(64));
    for j in 1..k_max {
        let jf = T::of_usize(j);
        let next = ((T::of(2.0) * jf + T::one() + af - x) * cur - (jf + af) * prev)
            / (jf + T::one());
        prev = cur;
        cur = next;
        let m = cur.abs().max(prev.abs());
        if m > hi {
            cur *= down;
            prev *= down;
            e += 64;
        } else if m > T::zero() && m < lo {
            cur *= up;
            prev *= up;
            e -= 64;
        }
        out.push((cur, e));
    }
    out
}

/// `ln |L_k^{(a)}(x)|` and the sign of the value. Sign is zero if the value is.
pub fn laguerre_ln_abs<T: Real>(k: usize, a: usize, x: T) -> (T, T) {
    let (m, e) = laguerre_scaled(k, a, x);
    if m == T::zero() {
        return (T::neg_infinity(), T::zero());
    }
    (m.abs().ln() + T::of(e as f64) * T::LN_2(), m.signum())
}

/// Poisson pmf `e^{-mu} mu^k / k!`, computed in log space.
pub fn poisson_pmf<T: Real>(k: usize, mu: T) -> T {
    if mu == T::zero() {
        return if k == 0 { T::one() } else { T::zero() };
    }
    (T::of_usize(k) * mu.ln() - mu - ln_factorial::<T>(k)).exp()
}

/// Poisson lower tail `P(X <= k)`.
pub fn poisson_cdf<T: Real>(k: usize, mu: T) -> T {
    (0..=k).map(|j| poisson_pmf(j, mu)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_table_matches_direct() {
        let table = ln_factorial_table::<f64>(20);
        assert_eq!(table[0], 0.0);
        assert_eq!(table[1], 0.0);
        // 10! = 3628800
        assert!((table[10] - (3628800.0f64).ln()).abs() < 1e-12);
        assert!((ln_factorial::<f64>(10) - table[10]).abs() < 1e-13);
    }

    #[test]
    fn laguerre_small_orders() {
        // L_1^{(a)}(x) = 1 + a - x
        let (m, e) = laguerre_scaled::<f64>(1, 3, 0.5);
        assert!((m * 2f64.powi(e) - 3.5).abs() < 1e-14);
        // L_2^{(0)}(x) = 1 - 2x + x^2/2 at x = 1 -> -0.5
        let (m, e) = laguerre_scaled::<f64>(2, 0, 1.0);
        assert!((m * 2f64.powi(e) + 0.5).abs() < 1e-14);
        // L_n^{(a)}(0) = C(n + a, n)
        let (m, e) = laguerre_scaled::<f64>(5, 2, 0.0);
        assert!((m * 2f64.powi(e) - 21.0).abs() < 1e-10);
    }

    #[test]
    fn laguerre_large_order_stays_finite() {
        let (m, e) = laguerre_scaled::<f64>(400, 200, 4.0);
        assert!(m.is_finite());
        let (ln_abs, sign) = laguerre_ln_abs::<f64>(400, 200, 4.0);
        assert!(ln_abs.is_finite());
        assert!(sign == 1.0 || sign == -1.0);
        let _ = e;
    }

    #[test]
    fn laguerre_sequence_matches_single_calls() {
        let seq = laguerre_scaled_sequence::<f64>(30, 4, 2.5);
        for (k, &(m, e)) in seq.iter().enumerate() {
            let (ms, es) = laguerre_scaled::<f64>(k, 4, 2.5);
            let v = m * 2f64.powi(e);
            let vs = ms * 2f64.powi(es);
            assert!((v - vs).abs() <= 1e-12 * vs.abs().max(1.0), "k={k}");
        }
    }

    #[test]
    fn poisson_tail_values() {
        // P(X <= 1; mu) = e^{-mu}(1 + mu)
        let mu = 6.9f64;
        let direct = (-mu).exp() * (1.0 + mu);
        assert!((poisson_cdf(1, mu) - direct).abs() < 1e-15);
        // pmf sums to ~1
        let total: f64 = (0..60).map(|k| poisson_pmf(k, 9.0f64)).sum();
        assert!((total - 1.0).abs() < 1e-12);
    }
}
