//! Radial momentum grids and functions sampled on them.
//!
//! A `RadialGrid` carries Gauss-Legendre panel nodes on [0, q_max] together
//! with weights that already include the radial reduction of the momentum
//! measure dq/(2pi)^d: q^2 dq / (2 pi^2) in three dimensions, dq / pi in one
//! (even-parity sector). Sums `sum_i w_i f(q_i)` therefore approximate the
//! full-space integral `int f dq/(2pi)^d` of a radial integrand, and the
//! weighted euclidean norm of sampled values is the L^2(R^d) norm of the
//! corresponding position-space function.

use crate::error::{Error, Result};
use crate::quad::gauss_legendre;
use serde::Serialize;

/// Spatial dimension of the radial reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Dimension {
    D1,
    D3,
}

impl Dimension {
    pub fn as_usize(self) -> usize {
        match self {
            Dimension::D1 => 1,
            Dimension::D3 => 3,
        }
    }

    /// Density of the radial measure at momentum q.
    #[inline]
    pub fn measure(self, q: f64) -> f64 {
        match self {
            Dimension::D1 => std::f64::consts::FRAC_1_PI,
            Dimension::D3 => q * q / (2.0 * std::f64::consts::PI * std::f64::consts::PI),
        }
    }
}

/// Panel-based Gauss-Legendre grid on [0, q_max].
#[derive(Debug, Clone, Serialize)]
pub struct RadialGrid {
    dim: Dimension,
    nodes: Vec<f64>,
    weights: Vec<f64>,
    panel_edges: Vec<f64>,
    nodes_per_panel: usize,
}

impl RadialGrid {
    /// Grid from explicit panel edges (ascending, starting at 0).
    pub fn from_panels(dim: Dimension, edges: &[f64], nodes_per_panel: usize) -> Result<Self> {
        if edges.len() < 2 || nodes_per_panel == 0 {
            return Err(Error::InvalidArgument(
                "need at least one panel and one node per panel".into(),
            ));
        }
        if edges[0] < 0.0 || edges.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidArgument(
                "panel edges must be non-negative and strictly increasing".into(),
            ));
        }
        let (x, w) = gauss_legendre(nodes_per_panel);
        let mut nodes = Vec::with_capacity((edges.len() - 1) * nodes_per_panel);
        let mut weights = Vec::with_capacity(nodes.capacity());
        for pair in edges.windows(2) {
            let half = 0.5 * (pair[1] - pair[0]);
            let mid = 0.5 * (pair[1] + pair[0]);
            for (xi, wi) in x.iter().zip(&w) {
                let q = mid + half * xi;
                nodes.push(q);
                weights.push(wi * half * dim.measure(q));
            }
        }
        Ok(RadialGrid {
            dim,
            nodes,
            weights,
            panel_edges: edges.to_vec(),
            nodes_per_panel,
        })
    }

    /// Grid adapted to a Fermi surface at q = sqrt(mu): panels geometrically
    /// refined toward the surface down to a relative shell width
    /// `shell_rel`, then a geometric tail out to `q_max`.
    pub fn fermi_adapted(
        dim: Dimension,
        mu: f64,
        q_max: f64,
        shell_rel: f64,
        nodes_per_panel: usize,
    ) -> Result<Self> {
        if mu <= 0.0 {
            return Err(Error::InvalidArgument(format!("mu must be positive, got {mu}")));
        }
        if !(0.0..0.5).contains(&shell_rel) || shell_rel <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "shell_rel must lie in (0, 0.5), got {shell_rel}"
            )));
        }
        let kf = mu.sqrt();
        if q_max <= 2.0 * kf {
            return Err(Error::InvalidArgument(format!(
                "q_max = {q_max} must exceed twice the Fermi momentum {kf}"
            )));
        }
        let mut edges = vec![0.0, 0.5 * kf];
        // shells kf*(1 -+ 0.4 * 2^-j) closing in on kf until shell_rel
        let mut widths = Vec::new();
        let mut wrel = 0.4;
        while wrel > shell_rel {
            widths.push(wrel);
            wrel *= 0.5;
        }
        widths.push(shell_rel);
        for &w in &widths {
            edges.push(kf * (1.0 - w));
        }
        edges.push(kf);
        for &w in widths.iter().rev() {
            edges.push(kf * (1.0 + w));
        }
        // outward panels, then geometric growth to q_max
        let mut q = kf * 1.4;
        while q < q_max {
            edges.push(q);
            q *= 2.0;
        }
        edges.push(q_max);
        edges.dedup_by(|a, b| (*a - *b).abs() < 1e-14 * kf);
        Self::from_panels(dim, &edges, nodes_per_panel)
    }

    /// Same panels, `factor` times as many nodes per panel.
    pub fn refined(&self, factor: usize) -> Result<Self> {
        Self::from_panels(self.dim, &self.panel_edges, self.nodes_per_panel * factor)
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn q_max(&self) -> f64 {
        *self.panel_edges.last().unwrap()
    }

    /// Integral of sampled values against the radial measure.
    pub fn integrate(&self, values: &[f64]) -> f64 {
        self.weights.iter().zip(values).map(|(w, v)| w * v).sum()
    }

    /// Squared L^2(R^d) norm of a function sampled on the grid.
    pub fn norm_sq(&self, values: &[f64]) -> f64 {
        self.weights.iter().zip(values).map(|(w, v)| w * v * v).sum()
    }
}

/// A radial function as samples on a grid (momentum or position space).
#[derive(Debug, Clone, Serialize)]
pub struct RadialFunction {
    pub grid: RadialGrid,
    pub values: Vec<f64>,
}

impl RadialFunction {
    pub fn new(grid: RadialGrid, values: Vec<f64>) -> Result<Self> {
        if grid.len() != values.len() {
            return Err(Error::InvalidArgument(format!(
                "grid has {} nodes but {} values supplied",
                grid.len(),
                values.len()
            )));
        }
        Ok(RadialFunction { grid, values })
    }

    pub fn norm_sq(&self) -> f64 {
        self.grid.norm_sq(&self.values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // weights reproduce the measure-weighted integral of polynomials up to
    // the rule order
    #[test]
    fn weights_reproduce_radial_measure() {
        let qm = 3.0;
        let g3 = RadialGrid::from_panels(Dimension::D3, &[0.0, 1.0, qm], 12).unwrap();
        for deg in 0..20u32 {
            let num: f64 = g3
                .nodes()
                .iter()
                .zip(g3.weights())
                .map(|(q, w)| w * q.powi(deg as i32))
                .sum();
            // int_0^qm q^(deg+2) dq / (2 pi^2)
            let exact = qm.powi(deg as i32 + 3) / (deg as f64 + 3.0)
                / (2.0 * std::f64::consts::PI * std::f64::consts::PI);
            assert!(
                ((num - exact) / exact).abs() < 1e-10,
                "d=3 deg={deg}: {num} vs {exact}"
            );
        }
        let g1 = RadialGrid::from_panels(Dimension::D1, &[0.0, qm], 12).unwrap();
        for deg in 0..20u32 {
            let num: f64 = g1
                .nodes()
                .iter()
                .zip(g1.weights())
                .map(|(q, w)| w * q.powi(deg as i32))
                .sum();
            let exact = qm.powi(deg as i32 + 1) / (deg as f64 + 1.0) / std::f64::consts::PI;
            assert!(
                ((num - exact) / exact).abs() < 1e-10,
                "d=1 deg={deg}: {num} vs {exact}"
            );
        }
    }

    #[test]
    fn nodes_strictly_increasing_and_positive() {
        let g = RadialGrid::fermi_adapted(Dimension::D3, 1.0, 40.0, 0.01, 16).unwrap();
        assert!(g.nodes()[0] > 0.0);
        for w in g.nodes().windows(2) {
            assert!(w[1] > w[0]);
        }
        assert!(g.weights().iter().all(|&w| w > 0.0));
        assert_eq!(g.q_max(), 40.0);
    }

    #[test]
    fn gaussian_norm_matches_closed_form() {
        // f_hat(q) = exp(-q^2): ||f||^2 = int |f|^2 dmu
        let g = RadialGrid::fermi_adapted(Dimension::D3, 1.0, 30.0, 0.02, 20).unwrap();
        let vals: Vec<f64> = g.nodes().iter().map(|&q| (-q * q).exp()).collect();
        let got = g.norm_sq(&vals);
        // int_0^inf e^{-2q^2} q^2 dq/(2 pi^2) = sqrt(pi/2)/(16 pi^2)
        let want = (std::f64::consts::PI / 2.0).sqrt() / (16.0 * std::f64::consts::PI.powi(2));
        assert!(((got - want) / want).abs() < 1e-12, "{got} vs {want}");
    }
}
