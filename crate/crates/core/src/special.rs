//! Scalar special functions entering the gap criterion and the
//! Ginzburg-Landau coefficient integrals.
//!
//! All functions are pure and safe for concurrent use. Units are fixed by
//! k_B = hbar = 2m = 1, so temperatures and single-particle dispersions
//! q^2 - mu share the same energy scale.
//!
//! Numerical strategy: each function has a small-argument Taylor branch, a
//! mid-range evaluation in hyperbolic form (no cancellation beyond the
//! intrinsic `sinh(z) - z` one, which is benign above the crossover), and an
//! `exp(-|z|)` tail form that cannot overflow. The crossover sits at
//! |z| = 0.1, where both branches carry at least 13 significant digits.

use crate::error::{Error, Result};
use serde::Serialize;

/// Crossover between Taylor series and hyperbolic closed forms.
const SERIES_CROSSOVER: f64 = 0.1;
/// Above this the `exp(-|z|)` tail forms are used (hyperbolic forms would
/// overflow near |z| ~ 700).
const TAIL_CROSSOVER: f64 = 40.0;
/// Fermi factors saturate to exactly 0/1 beyond this value of |E|/T.
const FERMI_SATURATION: f64 = 700.0;

/// Even Taylor coefficients of g1(z)/z about z = 0.
const G1_OVER_Z_SERIES: [f64; 5] = [
    1.0 / 12.0,
    -1.0 / 60.0,
    17.0 / 6720.0,
    -31.0 / 90720.0,
    691.0 / 15_966_720.0,
];

/// Even Taylor coefficients of g2(z) about z = 0.
const G2_SERIES: [f64; 5] = [
    0.25,
    -1.0 / 12.0,
    17.0 / 960.0,
    -31.0 / 10080.0,
    691.0 / 1_451_520.0,
];

/// Temperature in energy units (k_B = 1). Strictly positive.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
pub struct Temperature(f64);

impl Temperature {
    pub fn new(value: f64) -> Result<Self> {
        if !value.is_finite() || value <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "temperature must be finite and positive, got {value}"
            )));
        }
        Ok(Temperature(value))
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

#[inline]
fn check_finite(x: f64, what: &str) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{what} must be finite, got {x}")))
    }
}

/// K_T(eta) = eta / tanh(eta / 2T), the symbol whose spectral minimum 2T
/// controls the pairing criterion. Even in `eta`, with K_T(0) = 2T.
pub fn kt_eval(eta: f64, t: Temperature) -> Result<f64> {
    check_finite(eta, "eta")?;
    Ok(kt_raw(eta, t.get()))
}

/// Unchecked K_T for hot loops; `t > 0` is the caller's responsibility.
#[inline]
pub(crate) fn kt_raw(eta: f64, t: f64) -> f64 {
    if eta == 0.0 {
        return 2.0 * t;
    }
    let x = eta / (2.0 * t);
    if x == 0.0 {
        // eta underflowed against T
        return 2.0 * t;
    }
    // x / tanh(x) is even, >= 1, and stable: tanh rounds to x for tiny x
    // and saturates to +-1 for large |x|.
    2.0 * t * (x / x.tanh())
}

#[inline]
fn horner_even(coeffs: &[f64], z: f64) -> f64 {
    let z2 = z * z;
    let mut acc = 0.0;
    for &c in coeffs.iter().rev() {
        acc = acc * z2 + c;
    }
    acc
}

/// g1(z) = (e^{2z} - 2 z e^z - 1) / (z^2 (1 + e^z)^2). Odd in z.
pub fn g1_eval(z: f64) -> Result<f64> {
    check_finite(z, "z")?;
    Ok(g1_raw(z))
}

#[inline]
pub(crate) fn g1_raw(z: f64) -> f64 {
    z * g1_over_z_raw(z)
}

/// g1(z)/z, the even, strictly positive combination appearing in the
/// quartic coefficient integrand; value 1/12 at z = 0.
pub fn g1_over_z(z: f64) -> Result<f64> {
    check_finite(z, "z")?;
    Ok(g1_over_z_raw(z))
}

#[inline]
pub(crate) fn g1_over_z_raw(z: f64) -> f64 {
    let a = z.abs();
    if a <= SERIES_CROSSOVER {
        horner_even(&G1_OVER_Z_SERIES, a)
    } else if a <= TAIL_CROSSOVER {
        // g1(a) = (sinh a - a) / (2 a^2 cosh^2(a/2))
        let c = (0.5 * a).cosh();
        (a.sinh() - a) / (2.0 * a * a * a * c * c)
    } else {
        let e = (-a).exp();
        let one_plus = 1.0 + e;
        (1.0 - 2.0 * a * e - e * e) / (a * a * a * one_plus * one_plus)
    }
}

/// g2(z) = 2 e^z (e^z - 1) / (z (e^z + 1)^3). Even in z.
pub fn g2_eval(z: f64) -> Result<f64> {
    check_finite(z, "z")?;
    Ok(g2_raw(z))
}

#[inline]
pub(crate) fn g2_raw(z: f64) -> f64 {
    let a = z.abs();
    if a <= SERIES_CROSSOVER {
        horner_even(&G2_SERIES, a)
    } else if a <= TAIL_CROSSOVER {
        // g2(a) = sinh(a/2) / (2 a cosh^3(a/2))
        let c = (0.5 * a).cosh();
        (0.5 * a).sinh() / (2.0 * a * c * c * c)
    } else {
        let e = (-a).exp();
        let one_plus = 1.0 + e;
        2.0 * e * (1.0 - e) / (a * one_plus * one_plus * one_plus)
    }
}

/// Fermi-Dirac occupation 1/(1 + e^{E/T}), saturating to exactly 0 or 1
/// for |E|/T >= 700 so that deep band tails cannot produce spurious
/// subnormals downstream.
pub fn fermi_fill(energy: f64, t: Temperature) -> Result<f64> {
    check_finite(energy, "energy")?;
    Ok(fermi_unit(energy / t.get()))
}

/// Fermi factor as a function of x = E/T.
#[inline]
pub(crate) fn fermi_unit(x: f64) -> f64 {
    if x >= FERMI_SATURATION {
        0.0
    } else if x <= -FERMI_SATURATION {
        1.0
    } else if x >= 0.0 {
        let e = (-x).exp();
        e / (1.0 + e)
    } else {
        1.0 / (1.0 + x.exp())
    }
}

/// ln(1 + e^x) without overflow.
#[inline]
pub(crate) fn ln1p_exp(x: f64) -> f64 {
    if x > 0.0 {
        x + (-x).exp().ln_1p()
    } else {
        x.exp().ln_1p()
    }
}

/// Entropy -f ln f - (1-f) ln(1-f) of a Fermi factor, as a function of
/// x = E/T. Evaluated from x directly so saturated occupations contribute
/// exactly zero.
#[inline]
pub(crate) fn fermi_entropy_unit(x: f64) -> f64 {
    let a = x.abs();
    if a >= FERMI_SATURATION {
        return 0.0;
    }
    // s = f(a) * a + ln(1 + e^{-a}), symmetric in x
    fermi_unit(a) * a + (-a).exp().ln_1p()
}

/// Scalar entropy ingredient -x ln x with the 0 ln 0 := 0 convention.
///
/// Inputs within 1e-12 of [0, 1] are clamped; anything further out is a
/// domain error (it signals a state whose eigenvalues escaped [0, 1]).
pub fn entropy_scalar(x: f64) -> Result<f64> {
    const BAND: f64 = 1e-12;
    if !x.is_finite() || x < -BAND || x > 1.0 + BAND {
        return Err(Error::Domain(format!(
            "entropy argument {x} outside [-1e-12, 1 + 1e-12]"
        )));
    }
    let x = x.clamp(0.0, 1.0);
    if x == 0.0 || x == 1.0 {
        Ok(0.0)
    } else {
        Ok(-x * x.ln())
    }
}
