//! Independent reference for `w(z)`: a composite Gauss-Legendre quadrature of
//! `w(z) = (i/pi) * integral of exp(-t^2) / (z - t) dt` over the real line.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_8, PI};

use num_complex::Complex64;

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on P_n.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut rule = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut derivative = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            derivative = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let step = p1 / derivative;
            x -= step;
            if step.abs() < 1e-16 {
                break;
            }
        }
        rule.push((x, 2.0 / ((1.0 - x * x) * derivative * derivative)));
    }
    rule
}

/// Composite Gauss-Legendre rule whose panel count doubles until two
/// successive sums agree.
pub struct Adaptive {
    rule: Vec<(f64, f64)>,
}

impl Adaptive {
    pub fn new() -> Self {
        Adaptive { rule: gauss_legendre(20) }
    }

    fn composite(&self, f: &dyn Fn(f64) -> Complex64, lo: f64, hi: f64, panels: usize) -> Complex64 {
        let h = 0.5 * (hi - lo) / panels as f64;
        let mut sum = Complex64::default();
        for p in 0..panels {
            let c = lo + (2 * p + 1) as f64 * h;
            sum += self.rule.iter().map(|&(x, w)| f(c + h * x) * w).sum::<Complex64>() * h;
        }
        sum
    }

    fn integrate(&self, f: &dyn Fn(f64) -> Complex64, lo: f64, hi: f64, rel_tol: f64) -> Complex64 {
        let mut panels = 64;
        let mut previous = self.composite(f, lo, hi, panels);
        loop {
            panels *= 2;
            let current = self.composite(f, lo, hi, panels);
            if (current - previous).norm() <= rel_tol * current.norm() || panels >= 1 << 16 {
                return current;
            }
            previous = current;
        }
    }
}

/// For `z` in the closed first quadrant the half-line integral
/// `(2iz/pi) * integral_0^inf exp(-t^2) / (z^2 - t^2) dt` is taken along the ray
/// `arg t = -pi/8`, which keeps clear of the pole at `t = z`.
fn oracle_first_quadrant(z: Complex64, quad: &Adaptive) -> Complex64 {
    let tilt = Complex64::from_polar(1.0, -FRAC_PI_8);
    let tilt_sq = tilt * tilt;
    let z_sq = z * z;
    let f = move |s: f64| (-s * s * tilt_sq).exp() / (z_sq - s * s * tilt_sq);
    let scale = (2.0 * z / PI) * Complex64::i() * tilt;
    // exp(-s^2 cos(pi/4)) is below 1e-24 beyond s = 9
    scale * quad.integrate(&f, 0.0, 9.0, 1e-13)
}

/// Oracle for `arg z` in `[-pi/2, 0]`, through `w(z) = 2 exp(-z^2) - conj w(conj z)`.
pub fn oracle(z: Complex64, quad: &Adaptive) -> Complex64 {
    if z.im >= 0.0 {
        return oracle_first_quadrant(z, quad);
    }
    2.0 * (-z * z).exp() - oracle_first_quadrant(z.conj(), quad).conj()
}

pub fn grid() -> Vec<Complex64> {
    let mut points = Vec::with_capacity(100);
    for i in 0..10 {
        let r = 0.1 * 500f64.powf(i as f64 / 9.0);
        for k in 0..10 {
            let theta = -FRAC_PI_2 * k as f64 / 9.0;
            points.push(Complex64::from_polar(r, theta));
        }
    }
    points
}
