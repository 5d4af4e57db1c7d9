//! Small derivative-free optimizers used by the fitters.

use crate::scalar::Real;

/// Nelder–Mead in two dimensions.
///
/// Returns the best vertex and its value once the simplex collapses below
/// `xtol_rel` (relative to the initial step) or `max_iter` is reached.
pub fn nelder_mead_2d<T: Real, F: FnMut([T; 2]) -> T>(
    mut f: F,
    start: [T; 2],
    step: [T; 2],
    xtol_rel: T,
    max_iter: usize,
) -> ([T; 2], T) {
    let mut pts = [
        start,
        [start[0] + step[0], start[1]],
        [start[0], start[1] + step[1]],
    ];
    let mut vals = [f(pts[0]), f(pts[1]), f(pts[2])];
    let scale = step[0].abs().max(step[1].abs()).max(T::of(1e-300));

    for _ in 0..max_iter {
        // order ascending
        let mut order = [0usize, 1, 2];
        order.sort_by(|&i, &j| vals[i].partial_cmp(&vals[j]).unwrap_or(std::cmp::Ordering::Equal));
        let (lo, mid, hi) = (order[0], order[1], order[2]);

        let size = (0..2)
            .map(|d| {
                (pts[hi][d] - pts[lo][d]).abs().max((pts[mid][d] - pts[lo][d]).abs())
            })
            .fold(T::zero(), T::max);
        if size < xtol_rel * scale {
            return (pts[lo], vals[lo]);
        }

        let centroid = [
            (pts[lo][0] + pts[mid][0]) * T::of(0.5),
            (pts[lo][1] + pts[mid][1]) * T::of(0.5),
        ];
        let refl = [
            centroid[0] + (centroid[0] - pts[hi][0]),
            centroid[1] + (centroid[1] - pts[hi][1]),
        ];
        let f_refl = f(refl);

        if f_refl < vals[lo] {
            let expand = [
                centroid[0] + T::of(2.0) * (centroid[0] - pts[hi][0]),
                centroid[1] + T::of(2.0) * (centroid[1] - pts[hi][1]),
            ];
            let f_exp = f(expand);
            if f_exp < f_refl {
                pts[hi] = expand;
                vals[hi] = f_exp;
            } else {
                pts[hi] = refl;
                vals[hi] = f_refl;
            }
        } else if f_refl < vals[mid] {
            pts[hi] = refl;
            vals[hi] = f_refl;
        } else {
            let contract = [
                centroid[0] + T::of(0.5) * (pts[hi][0] - centroid[0]),
                centroid[1] + T::of(0.5) * (pts[hi][1] - centroid[1]),
            ];
            let f_con = f(contract);
            if f_con < vals[hi] {
                pts[hi] = contract;
                vals[hi] = f_con;
            } else {
                // shrink toward the best vertex
                for k in 0..3 {
                    if k != lo {
                        pts[k] = [
                            pts[lo][0] + T::of(0.5) * (pts[k][0] - pts[lo][0]),
                            pts[lo][1] + T::of(0.5) * (pts[k][1] - pts[lo][1]),
                        ];
                        vals[k] = f(pts[k]);
                    }
                }
            }
        }
    }
    let mut best = 0;
    for k in 1..3 {
        if vals[k] < vals[best] {
            best = k;
        }
    }
    (pts[best], vals[best])
}

/// Golden-section minimization of a unimodal function on `[a, b]`.
pub fn golden_min<T: Real, F: FnMut(T) -> T>(mut f: F, mut a: T, mut b: T, xtol: T) -> (T, T) {
    let inv_phi = T::of(0.618_033_988_749_894_8);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a).abs() > xtol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    let x = (a + b) * T::of(0.5);
    let fx = f(x);
    if fc < fx && fc < fd {
        (c, fc)
    } else if fd < fx {
        (d, fd)
    } else {
        (x, fx)
    }
}

/// Root of a continuous function by bisection; `f(a)` and `f(b)` must bracket.
pub fn bisect<T: Real, F: FnMut(T) -> T>(mut f: F, mut a: T, mut b: T, xtol: T) -> Option<T> {
    let mut fa = f(a);
    let fb = f(b);
    if fa == T::zero() {
        return Some(a);
    }
    if fb == T::zero() {
        return Some(b);
    }
    if (fa > T::zero()) == (fb > T::zero()) {
        return None;
    }
    for _ in 0..200 {
        let m = (a + b) * T::of(0.5);
        let fm = f(m);
        if fm == T::zero() || (b - a).abs() * T::of(0.5) < xtol {
            return Some(m);
        }
        if (fm > T::zero()) == (fa > T::zero()) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Some((a + b) * T::of(0.5))
}

/// Vertex abscissa of the parabola through three points; falls back to the
/// middle point when the points are collinear.
pub fn parabolic_vertex<T: Real>(x: [T; 3], y: [T; 3]) -> T {
    let d1 = (y[1] - y[0]) / (x[1] - x[0]);
    let d2 = (y[2] - y[1]) / (x[2] - x[1]);
    let curv = (d2 - d1) / (x[2] - x[0]);
    if curv == T::zero() {
        return x[1];
    }
    (x[0] + x[1]) * T::of(0.5) - d1 / (T::of(2.0) * curv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nelder_mead_finds_quadratic_minimum() {
        let f = |p: [f64; 2]| (p[0] - 1.5).powi(2) + 3.0 * (p[1] + 0.25).powi(2) + 2.0;
        let (x, v) = nelder_mead_2d(f, [0.0, 0.0], [0.5, 0.5], 1e-12, 500);
        assert!((x[0] - 1.5).abs() < 1e-8);
        assert!((x[1] + 0.25).abs() < 1e-8);
        assert!((v - 2.0).abs() < 1e-12);
    }

    #[test]
    fn golden_section_minimum() {
        let (x, _) = golden_min(|x: f64| (x - 0.7).powi(2), 0.0, 2.0, 1e-10);
        assert!((x - 0.7).abs() < 1e-8);
    }

    #[test]
    fn bisect_finds_root() {
        let r = bisect(|x: f64| x * x - 2.0, 0.0, 2.0, 1e-12).unwrap();
        assert!((r - 2.0f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn parabola_vertex_exact() {
        // y = (x-2)^2
        let x = [1.0, 2.5, 4.0];
        let y = [1.0, 0.25, 4.0];
        let v = parabolic_vertex(x, y);
        assert!((v - 2.0).abs() < 1e-12);
    }
}
