//! Special functions on the complex plane: log-gamma and digamma.
//!
//! Both are evaluated by the shift-and-Stirling scheme: push the argument to
//! `Re w >= SHIFT_TO` with the recurrences, then apply the Stirling series
//! with Bernoulli-number corrections. For arguments on vertical lines with
//! positive real part (the only use here: completed L-function phases and the
//! archimedean term of the explicit formula) every principal logarithm below
//! stays in the right half-plane, so the result is continuous along the line.

use num_complex::Complex64;

/// Bernoulli numbers B_2, B_4, ..., B_20.
pub const BERNOULLI_2K: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

const SHIFT_TO: f64 = 12.0;
const LN_2PI_HALF: f64 = 0.918938533204672741780329736406; // ln(2*pi)/2

/// Principal-branch log-gamma, continuous on vertical lines with `Re z > 0`.
pub fn ln_gamma(mut z: Complex64) -> Complex64 {
    assert!(z.re > 0.0, "ln_gamma requires Re z > 0 (got {z})");
    let mut shift = Complex64::new(0.0, 0.0);
    while z.re < SHIFT_TO {
        shift += z.ln();
        z += 1.0;
    }
    // Stirling: (z-1/2) ln z - z + ln(2 pi)/2 + sum B_{2k} / (2k(2k-1) z^{2k-1})
    let mut s = (z - 0.5) * z.ln() - z + LN_2PI_HALF;
    let z2 = z * z;
    let mut zp = z; // z^{2k-1}
    for (k, &b) in BERNOULLI_2K.iter().enumerate() {
        let kk = (k + 1) as f64;
        s += b / (2.0 * kk * (2.0 * kk - 1.0)) / zp;
        zp *= z2;
    }
    s - shift
}

/// Digamma function, continuous on vertical lines with `Re z > 0`.
pub fn digamma(mut z: Complex64) -> Complex64 {
    assert!(z.re > 0.0, "digamma requires Re z > 0 (got {z})");
    let mut shift = Complex64::new(0.0, 0.0);
    while z.re < SHIFT_TO {
        shift += 1.0 / z;
        z += 1.0;
    }
    // psi(z) ~ ln z - 1/(2z) - sum B_{2k} / (2k z^{2k})
    let mut s = z.ln() - 0.5 / z;
    let z2 = z * z;
    let mut zp = z2; // z^{2k}
    for (k, &b) in BERNOULLI_2K.iter().enumerate() {
        let kk = (k + 1) as f64;
        s -= b / (2.0 * kk) / zp;
        zp *= z2;
    }
    s - shift
}
