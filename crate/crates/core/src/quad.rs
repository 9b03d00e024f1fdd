//! Gauss-Legendre rules and composite panel quadrature.

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1],
/// by Newton iteration on the Legendre recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi initial guess for the i-th root (descending)
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre P_n(x) and derivative via three-term recurrence
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

/// Composite Gauss-Legendre integral of `f` over [a, b] with `panels`
/// equal panels of `nodes_per_panel` points each.
pub fn integrate_panels<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    panels: usize,
    nodes_per_panel: usize,
) -> f64 {
    let (x, w) = gauss_legendre(nodes_per_panel);
    let width = (b - a) / panels as f64;
    let mut total = 0.0;
    for p in 0..panels {
        let lo = a + p as f64 * width;
        let half = 0.5 * width;
        let mid = lo + half;
        let mut acc = 0.0;
        for (xi, wi) in x.iter().zip(&w) {
            acc += wi * f(mid + half * xi);
        }
        total += acc * half;
    }
    total
}

/// Integral of an oscillatory integrand over [0, r_end]: the panel count
/// scales with the total phase so each panel sees at most ~pi of it.
pub fn integrate_oscillatory<F: Fn(f64) -> f64>(f: F, r_end: f64, phase_rate: f64) -> f64 {
    let phase = phase_rate.abs() * r_end;
    let panels = ((phase / std::f64::consts::PI).ceil() as usize + 4).min(2048);
    integrate_panels(f, 0.0, r_end, panels, 16)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl_exact_on_polynomials() {
        // n-point rule is exact up to degree 2n-1
        for n in [2usize, 5, 16, 24] {
            let (x, w) = gauss_legendre(n);
            for deg in 0..(2 * n) {
                let num: f64 = x.iter().zip(&w).map(|(xi, wi)| wi * xi.powi(deg as i32)).sum();
                let exact = if deg % 2 == 1 { 0.0 } else { 2.0 / (deg as f64 + 1.0) };
                assert!(
                    (num - exact).abs() < 1e-13,
                    "n={n} degree={deg}: {num} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn oscillatory_cosine() {
        // integral of cos(kr) e^{-r} over [0, 30] vs closed form
        let k = 17.0;
        let got = integrate_oscillatory(|r| (k * r).cos() * (-r).exp(), 30.0, k);
        let want = (1.0 + k * k).recip() * (1.0 - (-30.0f64).exp() * ((k * 30.0).cos() - k * (k * 30.0).sin()));
        assert!((got - want).abs() < 1e-12, "{got} vs {want}");
    }
}
