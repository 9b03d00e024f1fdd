//! Critical temperature of the translation-invariant pairing criterion.
//!
//! The operator K_T(-lap - mu) + V acts on radial (d = 3, s-wave) or even
//! (d = 1) functions. In momentum space K_T is multiplication by
//! K_T(q^2 - mu) and V becomes an integral kernel against the radial
//! measure carried by the grid; the critical temperature is the T at which
//! the lowest eigenvalue crosses zero, located by bisection (the lowest
//! eigenvalue is strictly increasing in T).

use crate::error::{Error, Result};
use crate::grid::{Dimension, RadialGrid};
use crate::linalg::eigh_real;
use crate::potential::InteractionPotential;
use crate::quad::integrate_oscillatory;
use crate::special::{kt_raw, Temperature};
use faer::Mat;
use serde::Serialize;

/// Fraction of mu below which the bisection gives up and reports NoPairing.
const T_FLOOR_REL: f64 = 1e-10;

/// Zero-eigenvalue pair state of K_{T_c} + V.
#[derive(Debug, Clone)]
pub struct PairState {
    pub grid: RadialGrid,
    /// Momentum-space pair wave function, real representative, unit norm
    /// under the grid measure.
    pub alpha0: Vec<f64>,
    pub t_c: Temperature,
    pub mu: f64,
    /// Distance between the two lowest eigenvalues at T_c.
    pub gap_to_next: f64,
    /// (T, lowest eigenvalue) pairs visited by the bisection.
    pub trace: Vec<(f64, f64)>,
}

impl PairState {
    /// Norm of (K_{T_c} + V) alpha0 in the weighted grid norm.
    pub fn criterion_residual(&self, kernel: &Mat<f64>) -> f64 {
        let op = assemble_operator(self.t_c, self.mu, kernel, &self.grid);
        let n = self.grid.len();
        let w = self.grid.weights();
        let g: Vec<f64> = (0..n).map(|i| w[i].sqrt() * self.alpha0[i]).collect();
        let mut acc = 0.0;
        for i in 0..n {
            let mut row = 0.0;
            for j in 0..n {
                row += op[(i, j)] * g[j];
            }
            acc += row * row;
        }
        acc.sqrt()
    }
}

/// Angular/parity sector of the pairing kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sector {
    /// s-wave (d = 3) or even parity (d = 1); the sector the solver uses.
    Ground,
    /// l = 1 (d = 3) or odd parity (d = 1).
    First,
    /// l = 2 (d = 3 only).
    Second,
}

/// Momentum-space kernel of V in the rotation-invariant ground sector,
/// as a matrix over grid nodes paired with the grid's radial measure.
///
/// d = 3: 4 pi int V(r) j0(qr) j0(q'r) r^2 dr = (2 pi / q q') [C(q-q') - C(q+q')]
/// d = 1: 2 int V(r) cos(qr) cos(q'r) dr = C(q-q') + C(q+q')
///
/// with C the half-line cosine transform of V. Exact symmetry comes from
/// symmetrizing the assembled matrix (the two expressions are symmetric up
/// to rounding already).
pub fn swave_kernel(v: &InteractionPotential, grid: &RadialGrid) -> Result<Mat<f64>> {
    let q = grid.nodes();
    let n = q.len();
    let mut k = Mat::<f64>::zeros(n, n);
    match grid.dim() {
        Dimension::D3 => {
            for i in 0..n {
                for j in 0..=i {
                    let diff = v.cos_transform(q[i] - q[j]);
                    let sum = v.cos_transform(q[i] + q[j]);
                    let val = 2.0 * std::f64::consts::PI / (q[i] * q[j]) * (diff - sum);
                    k[(i, j)] = val;
                    k[(j, i)] = val;
                }
            }
        }
        Dimension::D1 => {
            for i in 0..n {
                for j in 0..=i {
                    let val = v.cos_transform(q[i] - q[j]) + v.cos_transform(q[i] + q[j]);
                    k[(i, j)] = val;
                    k[(j, i)] = val;
                }
            }
        }
    }
    Ok(k)
}

/// Kernel of V in a higher angular / parity sector, by oscillatory radial
/// quadrature of the Bessel (d = 3) or sine (d = 1) products.
pub fn sector_kernel(
    v: &InteractionPotential,
    grid: &RadialGrid,
    sector: Sector,
) -> Result<Mat<f64>> {
    if sector == Sector::Ground {
        return swave_kernel(v, grid);
    }
    let q = grid.nodes();
    let n = q.len();
    let r_end = v.support_radius();
    let mut k = Mat::<f64>::zeros(n, n);
    match (grid.dim(), sector) {
        (Dimension::D3, Sector::First) | (Dimension::D3, Sector::Second) => {
            let l = if sector == Sector::First { 1 } else { 2 };
            for i in 0..n {
                for j in 0..=i {
                    let (qi, qj) = (q[i], q[j]);
                    let val = 4.0
                        * std::f64::consts::PI
                        * integrate_oscillatory(
                            |r| v.eval(r) * sph_bessel(l, qi * r) * sph_bessel(l, qj * r) * r * r,
                            r_end,
                            qi + qj,
                        );
                    k[(i, j)] = val;
                    k[(j, i)] = val;
                }
            }
        }
        (Dimension::D1, Sector::First) => {
            // odd parity: 2 int V sin(qr) sin(q'r) dr = C(q-q') - C(q+q')
            for i in 0..n {
                for j in 0..=i {
                    let val = v.cos_transform(q[i] - q[j]) - v.cos_transform(q[i] + q[j]);
                    k[(i, j)] = val;
                    k[(j, i)] = val;
                }
            }
        }
        (Dimension::D1, Sector::Second) => {
            return Err(Error::InvalidArgument(
                "d = 1 has only even/odd parity sectors".into(),
            ))
        }
        (_, Sector::Ground) => unreachable!(),
    }
    Ok(k)
}

/// Spherical Bessel j_l for l = 0, 1, 2 with series handling near 0.
pub(crate) fn sph_bessel(l: usize, x: f64) -> f64 {
    let ax = x.abs();
    match l {
        0 => {
            if ax < 1e-4 {
                1.0 - x * x / 6.0
            } else {
                x.sin() / x
            }
        }
        1 => {
            if ax < 1e-2 {
                let x2 = x * x;
                x / 3.0 * (1.0 - x2 / 10.0 + x2 * x2 / 280.0)
            } else {
                (x.sin() / x - x.cos()) / x
            }
        }
        2 => {
            if ax < 5e-2 {
                let x2 = x * x;
                x2 / 15.0 * (1.0 - x2 / 14.0 + x2 * x2 / 504.0)
            } else {
                ((3.0 / (x * x) - 1.0) * x.sin() - 3.0 * x.cos() / x) / x
            }
        }
        _ => unimplemented!("only l <= 2 needed"),
    }
}

/// K_T(q^2 - mu) on the diagonal plus the weighted kernel
/// w_i^{1/2} K_ij w_j^{1/2}: the symmetric matrix whose eigenproblem is the
/// weighted-L^2 eigenproblem of K_T(-lap - mu) + V on the grid.
pub fn assemble_operator(
    t: Temperature,
    mu: f64,
    kernel: &Mat<f64>,
    grid: &RadialGrid,
) -> Mat<f64> {
    let q = grid.nodes();
    let w = grid.weights();
    let n = q.len();
    let sw: Vec<f64> = w.iter().map(|x| x.sqrt()).collect();
    let mut a = Mat::<f64>::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            a[(i, j)] = sw[i] * kernel[(i, j)] * sw[j];
        }
    }
    for i in 0..n {
        a[(i, i)] += kt_raw(q[i] * q[i] - mu, t.get());
    }
    a
}

fn two_lowest(a: &Mat<f64>) -> Result<(f64, f64, Vec<f64>)> {
    let e = eigh_real(a)?;
    let v: Vec<f64> = (0..a.nrows()).map(|i| e.vecs[(i, 0)]).collect();
    Ok((e.evals[0], e.evals[1], v))
}

/// Find T_c such that the lowest eigenvalue of K_T + V vanishes, and the
/// corresponding pair state.
pub fn find_tc(
    v: &InteractionPotential,
    mu: f64,
    grid: &RadialGrid,
    tol: f64,
) -> Result<PairState> {
    if mu <= 0.0 {
        return Err(Error::InvalidArgument(format!("mu must be positive, got {mu}")));
    }
    if tol <= 0.0 {
        return Err(Error::InvalidArgument(format!("tol must be positive, got {tol}")));
    }
    let kernel = swave_kernel(v, grid)?;
    let mut trace: Vec<(f64, f64)> = Vec::new();
    let mut lowest = |temp: f64| -> Result<f64> {
        let a = assemble_operator(Temperature::new(temp)?, mu, &kernel, grid);
        let e = eigh_real(&a)?.evals[0];
        trace.push((temp, e));
        Ok(e)
    };

    let t_floor = T_FLOOR_REL * mu;
    // bracket: expand geometrically from T = mu
    let mut t_hi = mu;
    let mut e_hi = lowest(t_hi)?;
    while e_hi < 0.0 {
        t_hi *= 2.0;
        if t_hi > 1e8 * mu.max(v.max_abs()) {
            return Err(Error::Accuracy(
                "lowest eigenvalue stayed negative at absurdly large T".into(),
            ));
        }
        e_hi = lowest(t_hi)?;
    }
    let mut t_lo = 0.5 * t_hi;
    let mut e_lo = lowest(t_lo)?;
    while e_lo > 0.0 {
        t_hi = t_lo;
        t_lo *= 0.5;
        if t_lo < t_floor {
            return Err(Error::NoPairing { t_min: t_floor });
        }
        e_lo = lowest(t_lo)?;
    }
    let _ = (e_lo, e_hi);

    // bisect until both the bracket and the eigenvalue are resolved
    let mut t_mid = 0.5 * (t_lo + t_hi);
    let mut e_mid = lowest(t_mid)?;
    for _ in 0..200 {
        if e_mid > 0.0 {
            t_hi = t_mid;
        } else {
            t_lo = t_mid;
        }
        t_mid = 0.5 * (t_lo + t_hi);
        e_mid = lowest(t_mid)?;
        if (t_hi - t_lo) < tol * t_mid && e_mid.abs() < tol {
            break;
        }
    }
    if (t_hi - t_lo) >= tol * t_mid || e_mid.abs() >= tol {
        return Err(Error::Convergence(format!(
            "T_c bisection stalled: bracket width {:e}, residual eigenvalue {:e}",
            t_hi - t_lo,
            e_mid
        )));
    }

    let t_c = Temperature::new(t_mid)?;
    let a = assemble_operator(t_c, mu, &kernel, grid);
    let (e1, e2, vec) = two_lowest(&a)?;
    let gap = e2 - e1;
    if gap < tol {
        return Err(Error::DegeneratePairState { gap, tol });
    }

    // back to grid-measure samples: alpha = v / sqrt(w), unit grid norm,
    // sign fixed so the measure-weighted mean is positive
    let w = grid.weights();
    let sum_signed: f64 = vec.iter().zip(w).map(|(x, wt)| x * wt.sqrt()).sum();
    let sign = if sum_signed.abs() > 1e-12 {
        sum_signed.signum()
    } else {
        let imax = (0..vec.len())
            .max_by(|&i, &j| vec[i].abs().partial_cmp(&vec[j].abs()).unwrap())
            .unwrap();
        vec[imax].signum()
    };
    let alpha0: Vec<f64> = vec
        .iter()
        .zip(w)
        .map(|(x, wt)| sign * x / wt.sqrt())
        .collect();

    trace.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    Ok(PairState {
        grid: grid.clone(),
        alpha0,
        t_c,
        mu,
        gap_to_next: gap,
        trace,
    })
}

/// Lowest eigenvalue per sector at fixed T, to confirm the ground sector is
/// where pairing sets in.
#[derive(Debug, Clone, Serialize)]
pub struct SectorReport {
    pub sectors: Vec<(String, f64)>,
    pub ground_is_minimal: bool,
}

pub fn validate_sector(
    v: &InteractionPotential,
    mu: f64,
    grid: &RadialGrid,
    t_c: Temperature,
) -> Result<SectorReport> {
    let sectors_to_check: &[(Sector, &str)] = match grid.dim() {
        Dimension::D3 => &[
            (Sector::Ground, "l=0"),
            (Sector::First, "l=1"),
            (Sector::Second, "l=2"),
        ],
        Dimension::D1 => &[(Sector::Ground, "even"), (Sector::First, "odd")],
    };
    let mut out = Vec::new();
    for &(sector, label) in sectors_to_check {
        let k = sector_kernel(v, grid, sector)?;
        let a = assemble_operator(t_c, mu, &k, grid);
        let e = eigh_real(&a)?.evals[0];
        out.push((label.to_string(), e));
    }
    let ground = out[0].1;
    let ground_is_minimal = out.iter().skip(1).all(|&(_, e)| ground < e);
    Ok(SectorReport {
        sectors: out,
        ground_is_minimal,
    })
}
