//! Downhill simplex minimization with the dimension-adaptive coefficients of
//! Gao & Han (2012), which keep the method from stalling beyond ~5 variables.

use crate::scalar::{cmp_scalar, Scalar};

#[derive(Debug, Clone, Copy)]
pub struct NelderMeadOptions<T> {
    pub max_iterations: usize,
    /// Spread of values across the simplex.
    pub f_tolerance: T,
    /// Largest vertex distance from the best vertex (max norm).
    pub x_tolerance: T,
}

#[derive(Debug, Clone)]
pub struct NelderMeadResult<T> {
    pub x: Vec<T>,
    pub value: T,
    pub iterations: usize,
    pub converged: bool,
}

/// Minimizes `f` from `start`, with initial simplex edges `steps[i]` along
/// each coordinate axis.
pub fn minimize<T: Scalar>(
    mut f: impl FnMut(&[T]) -> T,
    start: &[T],
    steps: &[T],
    opts: &NelderMeadOptions<T>,
) -> NelderMeadResult<T> {
    let n = start.len();
    assert_eq!(n, steps.len());
    let nf = T::lit(n as f64);
    let one = T::one();
    let (alpha, gamma, rho, sigma) = if n >= 2 {
        (one, one + T::lit(2.0) / nf, T::lit(0.75) - one / (T::lit(2.0) * nf), one - one / nf)
    } else {
        (one, T::lit(2.0), T::lit(0.5), T::lit(0.5))
    };

    let mut simplex: Vec<(Vec<T>, T)> = Vec::with_capacity(n + 1);
    simplex.push((start.to_vec(), f(start)));
    for i in 0..n {
        let mut x = start.to_vec();
        x[i] = x[i] + steps[i];
        let v = f(&x);
        simplex.push((x, v));
    }

    let blend = |a: &[T], b: &[T], t: T| -> Vec<T> { a.iter().zip(b).map(|(&a, &b)| a + t * (b - a)).collect() };

    let mut iterations = 0;
    let mut converged = false;
    while iterations < opts.max_iterations {
        simplex.sort_by(|a, b| cmp_scalar(a.1, b.1));
        let best = simplex[0].1;
        let worst = simplex[n].1;
        let spread = (worst - best).abs();
        let size = simplex[1..]
            .iter()
            .flat_map(|(x, _)| x.iter().zip(&simplex[0].0).map(|(a, b)| (*a - *b).abs()))
            .fold(T::zero(), T::max);
        if spread <= opts.f_tolerance * (one + best.abs()) && size <= opts.x_tolerance {
            converged = true;
            break;
        }
        iterations += 1;

        let mut centroid = vec![T::zero(); n];
        for (x, _) in &simplex[..n] {
            for (c, v) in centroid.iter_mut().zip(x) {
                *c = *c + *v / nf;
            }
        }

        let xr = blend(&centroid, &simplex[n].0, -alpha);
        let fr = f(&xr);
        if fr < simplex[0].1 {
            let xe = blend(&centroid, &simplex[n].0, -alpha * gamma);
            let fe = f(&xe);
            simplex[n] = if fe < fr { (xe, fe) } else { (xr, fr) };
            continue;
        }
        if fr < simplex[n - 1].1 {
            simplex[n] = (xr, fr);
            continue;
        }
        let (xc, fc) = if fr < simplex[n].1 {
            let xc = blend(&centroid, &xr, rho);
            let fc = f(&xc);
            (xc, fc)
        } else {
            let xc = blend(&centroid, &simplex[n].0, rho);
            let fc = f(&xc);
            (xc, fc)
        };
        if fc < simplex[n].1.min(fr) {
            simplex[n] = (xc, fc);
            continue;
        }
        let x0 = simplex[0].0.clone();
        for v in simplex.iter_mut().skip(1) {
            v.0 = blend(&x0, &v.0, sigma);
            v.1 = f(&v.0);
        }
    }
    simplex.sort_by(|a, b| cmp_scalar(a.1, b.1));
    let (x, value) = simplex.swap_remove(0);
    NelderMeadResult { x, value, iterations, converged }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rosenbrock() {
        let opts = NelderMeadOptions { max_iterations: 10_000, f_tolerance: 1e-14, x_tolerance: 1e-9 };
        let r = minimize(
            |x: &[f64]| (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2),
            &[-1.2, 1.0],
            &[0.5, 0.5],
            &opts,
        );
        assert!(r.converged);
        assert!((r.x[0] - 1.0).abs() < 1e-5 && (r.x[1] - 1.0).abs() < 1e-5, "{:?}", r.x);
    }

    #[test]
    fn seven_dimensional_quadratic() {
        let opts = NelderMeadOptions { max_iterations: 20_000, f_tolerance: 1e-14, x_tolerance: 1e-8 };
        let target = [1.0, -2.0, 3.0, 0.5, -0.5, 4.0, 2.0];
        let r = minimize(
            |x: &[f64]| x.iter().zip(&target).enumerate().map(|(i, (a, b))| (i as f64 + 1.0) * (a - b).powi(2)).sum(),
            &[0.0; 7],
            &[1.0; 7],
            &opts,
        );
        assert!(r.converged);
        for (a, b) in r.x.iter().zip(&target) {
            assert!((a - b).abs() < 1e-5);
        }
    }
}
