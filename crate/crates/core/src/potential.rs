//! Two-body interaction potentials: radial, decaying, form-bounded by
//! assumption. Kernels downstream consume V through its half-line cosine
//! transform C(k) = int_0^inf V(r) cos(kr) dr, which both supported kinds
//! evaluate in closed form (exactly per linear segment for tabulated data).

use crate::error::{Error, Result};
use serde::Serialize;
use std::path::Path;

const SQRT_PI: f64 = 1.7724538509055160273;

#[derive(Debug, Clone, Serialize)]
pub enum InteractionPotential {
    /// V(r) = depth * exp(-(r/width)^2); attractive for depth < 0.
    GaussianWell { depth: f64, width: f64 },
    /// Piecewise-linear interpolation of (r, V) samples; zero beyond the
    /// last sample.
    Tabulated { r: Vec<f64>, v: Vec<f64> },
}

impl InteractionPotential {
    pub fn gaussian_well(depth: f64, width: f64) -> Result<Self> {
        if !depth.is_finite() || !width.is_finite() || width <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "gaussian well needs finite depth and positive width, got depth={depth}, width={width}"
            )));
        }
        Ok(InteractionPotential::GaussianWell { depth, width })
    }

    pub fn tabulated(r: Vec<f64>, v: Vec<f64>) -> Result<Self> {
        if r.len() != v.len() || r.len() < 2 {
            return Err(Error::InvalidArgument(
                "tabulated potential needs matching r/V columns with at least two rows".into(),
            ));
        }
        if r[0] < 0.0 || r.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidArgument(
                "tabulated radii must be non-negative and strictly increasing".into(),
            ));
        }
        if v.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidArgument("tabulated values must be finite".into()));
        }
        let scale = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        let tail = v.last().unwrap().abs();
        if scale > 0.0 && tail > 1e-9 * scale {
            return Err(Error::Accuracy(format!(
                "tabulated potential does not decay: |V| = {tail:e} at the last sample \
                 (needs < 1e-9 of the peak {scale:e})"
            )));
        }
        Ok(InteractionPotential::Tabulated { r, v })
    }

    /// Two-column text file (r, V(r)), '#' comments and blank lines ignored.
    pub fn from_two_column_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let mut r = Vec::new();
        let mut v = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut cols = line.split_whitespace();
            let (a, b) = (cols.next(), cols.next());
            match (a, b) {
                (Some(a), Some(b)) => {
                    let ra: f64 = a.parse().map_err(|_| {
                        Error::Parse(format!("{}:{}: bad radius '{a}'", path.display(), lineno + 1))
                    })?;
                    let va: f64 = b.parse().map_err(|_| {
                        Error::Parse(format!("{}:{}: bad value '{b}'", path.display(), lineno + 1))
                    })?;
                    r.push(ra);
                    v.push(va);
                }
                _ => {
                    return Err(Error::Parse(format!(
                        "{}:{}: expected two columns",
                        path.display(),
                        lineno + 1
                    )))
                }
            }
        }
        Self::tabulated(r, v)
    }

    pub fn eval(&self, r: f64) -> f64 {
        match self {
            InteractionPotential::GaussianWell { depth, width } => {
                let x = r / width;
                depth * (-x * x).exp()
            }
            InteractionPotential::Tabulated { r: rs, v } => {
                let r = r.abs();
                if r >= *rs.last().unwrap() {
                    return 0.0;
                }
                if r <= rs[0] {
                    return v[0];
                }
                let idx = rs.partition_point(|&x| x <= r) - 1;
                let t = (r - rs[idx]) / (rs[idx + 1] - rs[idx]);
                v[idx] * (1.0 - t) + v[idx + 1] * t
            }
        }
    }

    /// Sup norm of V.
    pub fn max_abs(&self) -> f64 {
        match self {
            InteractionPotential::GaussianWell { depth, .. } => depth.abs(),
            InteractionPotential::Tabulated { v, .. } => {
                v.iter().fold(0.0f64, |m, x| m.max(x.abs()))
            }
        }
    }

    /// Radius beyond which |V| is negligible.
    pub fn support_radius(&self) -> f64 {
        match self {
            // |depth| e^{-(r/w)^2} < 1e-16 |depth|
            InteractionPotential::GaussianWell { width, .. } => width * (16.0 * std::f64::consts::LN_10).sqrt(),
            InteractionPotential::Tabulated { r, .. } => *r.last().unwrap(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            InteractionPotential::GaussianWell { depth, .. } => *depth == 0.0,
            InteractionPotential::Tabulated { v, .. } => v.iter().all(|&x| x == 0.0),
        }
    }

    /// Half-line cosine transform C(k) = int_0^inf V(r) cos(kr) dr.
    ///
    /// Gaussian wells integrate in closed form; tabulated potentials sum
    /// exact per-segment integrals of the linear interpolant, so the
    /// result is accurate at every k with no oscillation resolution limit.
    pub fn cos_transform(&self, k: f64) -> f64 {
        let k = k.abs();
        match self {
            InteractionPotential::GaussianWell { depth, width } => {
                let kb = 0.5 * k * width;
                depth * width * 0.5 * SQRT_PI * (-kb * kb).exp()
            }
            InteractionPotential::Tabulated { r, v } => {
                if k < 1e-12 {
                    // plain trapezoid integral of V
                    let mut acc = v[0] * r[0];
                    for i in 0..r.len() - 1 {
                        acc += 0.5 * (v[i] + v[i + 1]) * (r[i + 1] - r[i]);
                    }
                    return acc;
                }
                // int (a + b(r - r0)) cos(kr) dr over each segment; V is
                // held constant at v[0] on [0, r[0])
                let mut acc = if r[0] > 0.0 { v[0] * (k * r[0]).sin() / k } else { 0.0 };
                for i in 0..r.len() - 1 {
                    let (r0, r1) = (r[i], r[i + 1]);
                    let (v0, v1) = (v[i], v[i + 1]);
                    let slope = (v1 - v0) / (r1 - r0);
                    let (s0, c0) = (k * r0).sin_cos();
                    let (s1, c1) = (k * r1).sin_cos();
                    // int v cos(kr) dr = [v sin(kr)/k] + slope [cos(kr)/k^2]
                    acc += (v1 * s1 - v0 * s0) / k + slope * (c1 - c0) / (k * k);
                }
                acc
            }
        }
    }
}
