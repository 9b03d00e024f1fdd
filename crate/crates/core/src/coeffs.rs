//! Ginzburg-Landau coefficients from the pair state.
//!
//! With t the momentum-space form factor 2 K_{T_c} alpha0 and
//! z = beta_c (q^2 - mu), the four coefficients are radial integrals against
//! the measure dq/(2pi)^d carried by the grid weights:
//!
//!   lambda0 =            1/(16 T_c^2) int t^2 (g1(z) + 2 beta_c q^2 g2(z))
//!   lambda1 = lambda0^-1 1/(4 T_c^2)  int t^2 g1(z)
//!   lambda2 = lambda0^-1 D/(8 T_c)    int t^2 sech^2(z/2)
//!   lambda3 = lambda0^-1 1/(16 T_c^2) int t^4 beta_c g1(z)/z
//!
//! kappa = sqrt(lambda2) is reported only when lambda2 > 0 (T below T_c).

use crate::error::{Error, Result};
use crate::grid::{Dimension, RadialGrid};
use crate::pairing::{swave_kernel, PairState};
use crate::potential::InteractionPotential;
use crate::special::{g1_over_z_raw, g1_raw, g2_raw, kt_raw, Temperature};
use serde::Serialize;

/// Momentum-space form factor t = FT of 2 K_{T_c} alpha0.
#[derive(Debug, Clone)]
pub struct PairFormFactor {
    pub grid: RadialGrid,
    pub values: Vec<f64>,
    pub convention: &'static str,
}

pub const FORM_FACTOR_CONVENTION: &str =
    "momentum-space product 2*K_Tc(q^2-mu)*alpha0(q); radial measure dq/(2pi)^d";

/// t(q) = 2 K_{T_c}(q^2 - mu) alpha0(q); multiplication in momentum space.
pub fn form_factor(pair: &PairState) -> PairFormFactor {
    let values = pair
        .grid
        .nodes()
        .iter()
        .zip(&pair.alpha0)
        .map(|(&q, &a)| 2.0 * kt_raw(q * q - pair.mu, pair.t_c.get()) * a)
        .collect();
    PairFormFactor {
        grid: pair.grid.clone(),
        values,
        convention: FORM_FACTOR_CONVENTION,
    }
}

/// Same form factor through the eigenvalue equation, t = -2 (V alpha0)^:
/// an independent route usable at arbitrary momenta (the kernel against
/// the grid integrates the product).
pub fn form_factor_at(pair: &PairState, v: &InteractionPotential, q: f64) -> f64 {
    let w = pair.grid.weights();
    let nodes = pair.grid.nodes();
    let mut acc = 0.0;
    match pair.grid.dim() {
        Dimension::D3 => {
            for i in 0..nodes.len() {
                let diff = v.cos_transform(q - nodes[i]);
                let sum = v.cos_transform(q + nodes[i]);
                let kern = 2.0 * std::f64::consts::PI / (q.max(1e-300) * nodes[i]) * (diff - sum);
                acc += kern * w[i] * pair.alpha0[i];
            }
        }
        Dimension::D1 => {
            for i in 0..nodes.len() {
                let kern = v.cos_transform(q - nodes[i]) + v.cos_transform(q + nodes[i]);
                acc += kern * w[i] * pair.alpha0[i];
            }
        }
    }
    -2.0 * acc
}

pub fn form_factor_via_potential(
    pair: &PairState,
    v: &InteractionPotential,
) -> Result<PairFormFactor> {
    let kernel = swave_kernel(v, &pair.grid)?;
    let w = pair.grid.weights();
    let n = pair.grid.len();
    let mut values = vec![0.0; n];
    for i in 0..n {
        let mut acc = 0.0;
        for j in 0..n {
            acc += kernel[(i, j)] * w[j] * pair.alpha0[j];
        }
        values[i] = -2.0 * acc;
    }
    Ok(PairFormFactor {
        grid: pair.grid.clone(),
        values,
        convention: FORM_FACTOR_CONVENTION,
    })
}

/// The four GL coefficients with their provenance.
#[derive(Debug, Clone, Serialize)]
pub struct GLCoefficients {
    pub tc: f64,
    pub mu: f64,
    /// Spatial dimension of the momentum integrals.
    pub d: usize,
    /// Temperature-shift parameter: T = T_c (1 - D h^2).
    #[serde(rename = "D")]
    pub shift: f64,
    pub lambda0: f64,
    pub lambda1: f64,
    pub lambda2: f64,
    pub lambda3: f64,
    /// sqrt(lambda2), present only when lambda2 > 0.
    pub kappa: Option<f64>,
    pub beta_c: f64,
    pub grid_nodes: usize,
    pub grid_q_max: f64,
    pub convention: String,
    pub notes: Vec<String>,
}

#[inline]
fn sech2_half(z: f64) -> f64 {
    // sech^2(z/2) without overflow
    let e = (-0.5 * z.abs()).exp();
    let e2 = e * e;
    let denom = 1.0 + e2;
    4.0 * e2 / (denom * denom)
}

/// Minimum number of grid nodes inside the thermal shell |q^2 - mu| < 10 T
/// for the Fermi-surface-peaked integrands to be trusted.
const MIN_SHELL_NODES: usize = 8;

pub fn compute_coefficients(
    t: &PairFormFactor,
    t_c: Temperature,
    mu: f64,
    shift: f64,
) -> Result<GLCoefficients> {
    let tc = t_c.get();
    let beta = 1.0 / tc;
    let grid = &t.grid;
    let q = grid.nodes();
    let w = grid.weights();
    let n = q.len();
    if t.values.len() != n {
        return Err(Error::InvalidArgument(
            "form factor length does not match its grid".into(),
        ));
    }

    let shell_nodes = q
        .iter()
        .filter(|&&qi| (qi * qi - mu).abs() < 10.0 * tc)
        .count();
    if shell_nodes < MIN_SHELL_NODES {
        return Err(Error::Accuracy(format!(
            "only {shell_nodes} grid nodes resolve the thermal shell |q^2-mu| < 10 T_c \
             (need >= {MIN_SHELL_NODES}); refine the grid near q = sqrt(mu) = {}",
            mu.sqrt()
        )));
    }

    let mut i0 = 0.0;
    let mut i1 = 0.0;
    let mut i2 = 0.0;
    let mut i3 = 0.0;
    for i in 0..n {
        let z = beta * (q[i] * q[i] - mu);
        let t2 = t.values[i] * t.values[i];
        let g1 = g1_raw(z);
        i0 += w[i] * t2 * (g1 + 2.0 * beta * q[i] * q[i] * g2_raw(z));
        i1 += w[i] * t2 * g1;
        i2 += w[i] * t2 * sech2_half(z);
        let q3 = beta * g1_over_z_raw(z);
        debug_assert!(q3 >= 0.0);
        i3 += w[i] * t2 * t2 * q3;
    }

    let lambda0 = i0 / (16.0 * tc * tc);
    if !(lambda0 > 0.0) {
        return Err(Error::InternalConsistency(format!(
            "lambda0 = {lambda0} must be positive"
        )));
    }
    let lambda1 = i1 / (4.0 * tc * tc) / lambda0;
    let lambda2 = shift * i2 / (8.0 * tc) / lambda0;
    let lambda3 = i3 / (16.0 * tc * tc) / lambda0;
    if !(lambda3 > 0.0) {
        return Err(Error::InternalConsistency(format!(
            "lambda3 = {lambda3} must be positive"
        )));
    }

    let mut notes = Vec::new();
    if grid.dim() == Dimension::D1 {
        notes.push(
            "d = 1 coefficients use the dimension-generic integrands with measure dq/(2 pi)"
                .to_string(),
        );
    }

    Ok(GLCoefficients {
        tc,
        mu,
        d: grid.dim().as_usize(),
        shift,
        lambda0,
        lambda1,
        lambda2,
        lambda3,
        kappa: (lambda2 > 0.0).then(|| lambda2.sqrt()),
        beta_c: beta,
        grid_nodes: n,
        grid_q_max: grid.q_max(),
        convention: t.convention.to_string(),
        notes,
    })
}

impl GLCoefficients {
    /// Coefficients for a different temperature-shift parameter; only
    /// lambda2 (and kappa) depend on it, linearly.
    pub fn with_shift(&self, shift: f64) -> GLCoefficients {
        let lambda2 = if self.shift != 0.0 {
            self.lambda2 / self.shift * shift
        } else {
            // lambda2/D is shift-independent; a zero-shift record carries
            // no slope, so recompute is required. Guarded by callers.
            f64::NAN
        };
        GLCoefficients {
            shift,
            lambda2,
            kappa: (lambda2 > 0.0).then(|| lambda2.sqrt()),
            ..self.clone()
        }
    }

    /// Slope lambda2 / D, well-defined for any record with shift != 0.
    pub fn lambda2_slope(&self) -> Result<f64> {
        if self.shift == 0.0 {
            return Err(Error::InvalidArgument(
                "lambda2 slope undefined for a D = 0 record".into(),
            ));
        }
        Ok(self.lambda2 / self.shift)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::RadialGrid;
    use crate::pairing::find_tc;

    fn setup_3d() -> (InteractionPotential, PairState) {
        let v = InteractionPotential::gaussian_well(-5.0, 1.0).unwrap();
        let g = RadialGrid::fermi_adapted(Dimension::D3, 1.0, 1.0e5, 0.0125, 16).unwrap();
        let p = find_tc(&v, 1.0, &g, 1e-10).unwrap();
        (v, p)
    }

    #[test]
    fn form_factor_routes_agree() {
        let (v, p) = setup_3d();
        let t_mult = form_factor(&p);
        let t_kern = form_factor_via_potential(&p, &v).unwrap();
        let scale = t_mult.values.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        for (a, b) in t_mult.values.iter().zip(&t_kern.values) {
            assert!(
                (a - b).abs() < 1e-8 * scale,
                "form factor routes disagree: {a} vs {b}"
            );
        }
    }

    #[test]
    fn form_factor_linear_in_alpha() {
        let (_, p) = setup_3d();
        let t1 = form_factor(&p);
        let mut p2 = p.clone();
        for a in &mut p2.alpha0 {
            *a *= 3.25;
        }
        let t2 = form_factor(&p2);
        for (a, b) in t1.values.iter().zip(&t2.values) {
            assert!((3.25 * a - b).abs() <= 1e-12 * b.abs().max(1e-300));
        }
    }

    #[test]
    fn zero_shift_kills_lambda2_only() {
        let (_, p) = setup_3d();
        let t = form_factor(&p);
        let c1 = compute_coefficients(&t, p.t_c, p.mu, 1.5).unwrap();
        let c0 = compute_coefficients(&t, p.t_c, p.mu, 0.0).unwrap();
        assert_eq!(c0.lambda2, 0.0);
        assert!(c0.kappa.is_none());
        assert_eq!(c0.lambda0, c1.lambda0);
        assert_eq!(c0.lambda1, c1.lambda1);
        assert_eq!(c0.lambda3, c1.lambda3);
        assert!(c1.kappa.unwrap() > 0.0);
    }

    #[test]
    fn lambda2_proportional_to_shift() {
        let (_, p) = setup_3d();
        let t = form_factor(&p);
        let slopes: Vec<f64> = [-1.0, 0.5, 2.0]
            .iter()
            .map(|&d| {
                let c = compute_coefficients(&t, p.t_c, p.mu, d).unwrap();
                if d < 0.0 {
                    assert!(c.kappa.is_none(), "kappa must be absent for D <= 0");
                }
                c.lambda2 / d
            })
            .collect();
        for s in &slopes[1..] {
            assert!(
                (s - slopes[0]).abs() <= 1e-10 * slopes[0].abs(),
                "lambda2/D not constant: {slopes:?}"
            );
        }
    }

    #[test]
    fn alpha_rescaling_law() {
        let (_, p) = setup_3d();
        let lam = 2.7;
        let t1 = form_factor(&p);
        let c1 = compute_coefficients(&t1, p.t_c, p.mu, 1.0).unwrap();
        let mut p2 = p.clone();
        for a in &mut p2.alpha0 {
            *a *= lam;
        }
        let t2 = form_factor(&p2);
        let c2 = compute_coefficients(&t2, p.t_c, p.mu, 1.0).unwrap();
        let l2 = lam * lam;
        assert!(((c2.lambda0 - l2 * c1.lambda0) / (l2 * c1.lambda0)).abs() < 1e-10);
        assert!(((c2.lambda3 - l2 * c1.lambda3) / (l2 * c1.lambda3)).abs() < 1e-10);
        assert!(((c2.lambda1 - c1.lambda1) / c1.lambda1).abs() < 1e-10);
        assert!(((c2.lambda2 - c1.lambda2) / c1.lambda2).abs() < 1e-10);
    }

    // Dense-grid oracle: trapezoid on a 10x-denser uniform grid, with t
    // evaluated through the independent kernel route.
    #[test]
    fn integrals_match_dense_trapezoid_oracle() {
        let (v, p) = setup_3d();
        let t = form_factor(&p);
        let c = compute_coefficients(&t, p.t_c, p.mu, 1.0).unwrap();

        let tc = p.t_c.get();
        let beta = 1.0 / tc;
        let mu = p.mu;
        let q_hi = 8.0_f64; // t(q) is far below 1e-12 of its peak out here
        let m = 10 * p.grid.len();
        let dq = q_hi / m as f64;
        let mut i = [0.0f64; 4];
        for j in 0..=m {
            let q = (j as f64) * dq;
            let trap = if j == 0 || j == m { 0.5 } else { 1.0 };
            let meas = match p.grid.dim() {
                Dimension::D3 => q * q / (2.0 * std::f64::consts::PI.powi(2)),
                Dimension::D1 => std::f64::consts::FRAC_1_PI,
            };
            let tt = form_factor_at(&p, &v, q);
            let z = beta * (q * q - mu);
            let g1 = g1_raw(z);
            let common = trap * dq * meas * tt * tt;
            i[0] += common * (g1 + 2.0 * beta * q * q * g2_raw(z));
            i[1] += common * g1;
            i[2] += common * sech2_half(z);
            i[3] += common * tt * tt * beta * g1_over_z_raw(z);
        }
        let lambda0 = i[0] / (16.0 * tc * tc);
        let lambda1 = i[1] / (4.0 * tc * tc) / lambda0;
        let lambda2 = i[2] / (8.0 * tc) / lambda0;
        let lambda3 = i[3] / (16.0 * tc * tc) / lambda0;
        assert!(
            ((lambda0 - c.lambda0) / c.lambda0).abs() < 1e-6,
            "lambda0: {} vs {}",
            lambda0,
            c.lambda0
        );
        assert!(((lambda1 - c.lambda1) / c.lambda1).abs() < 1e-6);
        assert!(((lambda2 - c.lambda2) / c.lambda2).abs() < 1e-6);
        assert!(((lambda3 - c.lambda3) / c.lambda3).abs() < 1e-6);
    }

    #[test]
    fn coarse_grid_near_fermi_surface_is_rejected() {
        let (_, p) = setup_3d();
        // a grid with no refinement near sqrt(mu)
        let coarse = RadialGrid::from_panels(Dimension::D3, &[0.0, 5.0, 40.0], 6).unwrap();
        let vals = vec![1.0; coarse.len()];
        let t = PairFormFactor {
            grid: coarse,
            values: vals,
            convention: FORM_FACTOR_CONVENTION,
        };
        assert!(matches!(
            compute_coefficients(&t, p.t_c, p.mu, 1.0),
            Err(Error::Accuracy(_))
        ));
    }

    #[test]
    fn positivity_post_checks() {
        let (_, p) = setup_3d();
        let t = form_factor(&p);
        let c = compute_coefficients(&t, p.t_c, p.mu, 1.0).unwrap();
        assert!(c.lambda0 > 0.0);
        assert!(c.lambda3 > 0.0);
        // lambda3 integrand is pointwise positive: t^4 beta g1(z)/z > 0
        for (&q, &tv) in p.grid.nodes().iter().zip(&t.values) {
            let z = (q * q - p.mu) / p.t_c.get();
            if tv != 0.0 {
                assert!(g1_over_z_raw(z) > 0.0);
            }
        }
    }
}
