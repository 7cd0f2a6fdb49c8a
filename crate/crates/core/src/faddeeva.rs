//! The Faddeeva function `w(z) = exp(-z^2) erfc(-iz)` and the closed-form and
//! asymptotic values of the full slit-time sum built on it.
//!
//! The time-summed two-step amplitude of a symmetric path is
//!
//! ```text
//! I = m/(2 pi i hbar) * pi * erfc(sqrt(phi0) e^{-i pi/4})
//!   = m/(2 pi i hbar) * pi * e^{i phi0} * w(sqrt(phi0) e^{i pi/4})
//! ```
//!
//! where the second line follows from `erfc(zeta) = exp(-zeta^2) w(i zeta)`
//! with `exp(-zeta^2) = e^{i phi0}`. Evaluating through `w` in the upper half
//! plane never forms a growing exponential.

use std::f64::consts::{FRAC_PI_4, PI};

use num_complex::Complex64;

use crate::error::{require_positive, Error, Result};
use crate::kinematics::{ParticleSpecies, HBAR};
use crate::propagator::{AmplitudeUnit, ComplexAmplitude};

/// Alias for values of complex special functions.
pub type ComplexValue = Complex64;

const TWO_OVER_SQRT_PI: f64 = std::f64::consts::FRAC_2_SQRT_PI;
const FRAC_1_SQRT_PI: f64 = 0.564_189_583_547_756_286_948_079_451_560_772_6;

// Region boundaries in the scaled variable q = (x/6.3)^2 + (y/4.4)^2.
const SERIES_LIMIT: f64 = 0.085_264;
const CONTINUED_FRACTION_LIMIT: f64 = 1.0;
// Beyond this |y| * 2|x| the cosine of the reflection term is meaningless.
const MAX_TRIG_ARGUMENT: f64 = 3.537_118_876_014_22e15;
const HUGE_COMPONENT: f64 = 0.5e154;

/// Which algorithm evaluates `w` at a given point of the first quadrant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    /// Power series of `erf`, then `w = exp(-z^2) (1 - erf(-iz))`.
    PowerSeries,
    /// Taylor expansion about a shifted point whose derivatives come from
    /// the Laplace continued fraction.
    TaylorContinuedFraction,
    /// Laplace continued fraction.
    ContinuedFraction,
}

/// Region used for `|Re z| + i |Im z|`.
pub fn region(z: Complex64) -> Region {
    let q = (z.re.abs() / 6.3).powi(2) + (z.im.abs() / 4.4).powi(2);
    if q < SERIES_LIMIT {
        Region::PowerSeries
    } else if q > CONTINUED_FRACTION_LIMIT {
        Region::ContinuedFraction
    } else {
        Region::TaylorContinuedFraction
    }
}

/// Faddeeva function `w(z) = exp(-z^2) erfc(-iz)` for any finite `z`.
///
/// The first quadrant is computed directly; the other quadrants use
/// `w(-conj z) = conj w(z)` and `w(-z) = 2 exp(-z^2) - w(z)`. In the lower half
/// plane the reflection term `2 exp(-z^2)` can exceed the double range, which
/// is reported as [`Error::Range`].
pub fn faddeeva_w(z: ComplexValue) -> Result<ComplexValue> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain(format!("w(z) needs a finite argument, got {z}")));
    }
    let x = z.re.abs();
    let y = z.im.abs();
    if x > HUGE_COMPONENT || y > HUGE_COMPONENT {
        if z.im >= 0.0 {
            // leading asymptotic term is exact to double precision here
            return Ok(Complex64::i() * FRAC_1_SQRT_PI / z);
        }
        return Err(Error::Range(format!("w({z}) overflows in the lower half plane")));
    }

    let x_quad = x * x - y * y;
    let y_quad = 2.0 * x * y;
    // w at |x| + i|y|, and exp(-(|x| + i|y|)^2) when the series computed it
    let (first_quadrant, series_exp) = first_quadrant_w(x, y, x_quad, y_quad);

    let mut w = if z.im < 0.0 {
        let reflection = match series_exp {
            Some(e) => 2.0 * e,
            None => {
                if y_quad > MAX_TRIG_ARGUMENT || -x_quad > (f64::MAX / 2.0).ln() {
                    return Err(Error::Range(format!(
                        "w({z}): 2 exp(-z^2) is outside the double range"
                    )));
                }
                Complex64::from_polar(2.0 * (-x_quad).exp(), -y_quad)
            }
        };
        let mut w = reflection - first_quadrant;
        if z.re > 0.0 {
            w.im = -w.im;
        }
        w
    } else {
        let mut w = first_quadrant;
        if z.re < 0.0 {
            w.im = -w.im;
        }
        w
    };
    if w.im == 0.0 {
        w.im = 0.0; // no negative zero
    }
    Ok(w)
}

fn first_quadrant_w(x: f64, y: f64, x_quad: f64, y_quad: f64) -> (Complex64, Option<Complex64>) {
    let q = (x / 6.3).powi(2) + (y / 4.4).powi(2);
    if q < SERIES_LIMIT {
        return power_series(x, y, x_quad, y_quad, q);
    }

    // h = 0 selects the plain continued fraction; h > 0 the Taylor-shifted one.
    let (h, kapn, nu) = if q > CONTINUED_FRACTION_LIMIT {
        let rho = q.sqrt();
        (0.0, 0usize, (3.0 + 1442.0 / (26.0 * rho + 77.0)) as usize)
    } else {
        let rho = (1.0 - y / 4.4) * (1.0 - q).sqrt();
        let h = 1.88 * rho;
        (h, (7.0 + 34.0 * rho).round() as usize, (16.0 + 26.0 * rho).round() as usize)
    };
    let h2 = 2.0 * h;
    let mut lambda = if h > 0.0 { h2.powi(kapn as i32) } else { 0.0 };

    let (mut rx, mut ry) = (0.0f64, 0.0f64);
    let (mut sx, mut sy) = (0.0f64, 0.0f64);
    for n in (0..=nu).rev() {
        let np1 = (n + 1) as f64;
        let tx = y + h + np1 * rx;
        let ty = x - np1 * ry;
        let c = 0.5 / (tx * tx + ty * ty);
        rx = c * tx;
        ry = c * ty;
        if h > 0.0 && n <= kapn {
            let t = lambda + sx;
            let new_sx = rx * t - ry * sy;
            sy = ry * t + rx * sy;
            sx = new_sx;
            lambda /= h2;
        }
    }
    let mut w = if h == 0.0 {
        Complex64::new(TWO_OVER_SQRT_PI * rx, TWO_OVER_SQRT_PI * ry)
    } else {
        Complex64::new(TWO_OVER_SQRT_PI * sx, TWO_OVER_SQRT_PI * sy)
    };
    if y == 0.0 {
        w.re = (-x * x).exp();
    }
    (w, None)
}

fn power_series(x: f64, y: f64, x_quad: f64, y_quad: f64, q: f64) -> (Complex64, Option<Complex64>) {
    let rho = (1.0 - 0.85 * y / 4.4) * q.sqrt();
    let n_terms = (6.0 + 72.0 * rho).round() as usize;
    // Horner evaluation of sum_k (z^2)^k / (k! (2k + 1)), z = x + iy
    let mut j = 2 * n_terms + 1;
    let mut sum = Complex64::new(1.0 / j as f64, 0.0);
    let z_sq = Complex64::new(x_quad, y_quad);
    for i in (1..=n_terms).rev() {
        j -= 2;
        sum = sum * z_sq / i as f64 + 1.0 / j as f64;
    }
    // 1 - erf(-iz) = 1 + (2/sqrt pi) i z sum
    let u1 = -TWO_OVER_SQRT_PI * (sum.re * y + sum.im * x) + 1.0;
    let v1 = TWO_OVER_SQRT_PI * (sum.re * x - sum.im * y);
    let exp_minus_z_sq = Complex64::from_polar((-x_quad).exp(), -y_quad);
    (Complex64::new(u1, v1) * exp_minus_z_sq, Some(exp_minus_z_sq))
}

/// `m / (2 pi i hbar)`, the normalization of the two-step propagator product.
pub fn time_sum_prefactor(species: ParticleSpecies) -> Complex64 {
    Complex64::new(0.0, -species.mass() / (2.0 * PI * HBAR))
}

/// Evaluation point `sqrt(phi0) e^{i pi/4}` of `w` for the full time sum.
pub fn time_sum_w_argument(phi0: f64) -> Complex64 {
    Complex64::from_polar(phi0.sqrt(), FRAC_PI_4)
}

/// Full time sum `pi e^{i phi0} w(sqrt(phi0) e^{i pi/4})` without the
/// `m / (2 pi i hbar)` normalization.
pub fn timesum_closed_form_relative(phi0: f64) -> Result<Complex64> {
    require_positive(phi0, "stationary phase phi0")?;
    let w = faddeeva_w(time_sum_w_argument(phi0))?;
    Ok(PI * Complex64::from_polar(1.0, phi0) * w)
}

/// Closed-form value of the slit-time integral for a symmetric path with
/// stationary phase `phi0`.
pub fn timesum_closed_form(phi0: f64, species: ParticleSpecies) -> Result<ComplexAmplitude> {
    let relative = timesum_closed_form_relative(phi0)?;
    Ok(ComplexAmplitude::new(
        time_sum_prefactor(species) * relative,
        AmplitudeUnit::Propagator1d,
    ))
}

/// A truncated asymptotic series together with the size of the first
/// omitted term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticAmplitude {
    pub amplitude: ComplexAmplitude,
    pub error_estimate: f64,
}

pub const MAX_ASYMPTOTIC_TERMS: usize = 4;

/// Bracket term `(-1)^k (2k-1)!! (i / (2 phi0))^k` of the large-`phi0` series.
fn asymptotic_term(k: usize, phi0: f64) -> Complex64 {
    let mut term = Complex64::new(1.0, 0.0);
    let step = Complex64::new(0.0, 1.0 / (2.0 * phi0));
    for j in 1..=k {
        term *= -(2.0 * j as f64 - 1.0) * step;
    }
    term
}

/// `m/(2 pi i hbar) sqrt(pi/phi0) e^{i phi0} e^{i pi/4} [1 - i/(2 phi0) - ...]`
/// truncated after `n_terms` bracket terms.
pub fn timesum_asymptotic(
    phi0: f64,
    n_terms: usize,
    species: ParticleSpecies,
) -> Result<AsymptoticAmplitude> {
    require_positive(phi0, "stationary phase phi0")?;
    if !(1..=MAX_ASYMPTOTIC_TERMS).contains(&n_terms) {
        return Err(Error::Usage(format!(
            "asymptotic series supports 1..={MAX_ASYMPTOTIC_TERMS} terms, got {n_terms}"
        )));
    }
    let bracket: Complex64 = (0..n_terms).map(|k| asymptotic_term(k, phi0)).sum();
    let lead = time_sum_prefactor(species)
        * (PI / phi0).sqrt()
        * Complex64::from_polar(1.0, phi0)
        * Complex64::from_polar(1.0, FRAC_PI_4);
    let error_estimate = (lead * asymptotic_term(n_terms, phi0)).norm();
    Ok(AsymptoticAmplitude {
        amplitude: ComplexAmplitude::new(lead * bracket, AmplitudeUnit::Propagator1d),
        error_estimate,
    })
}
