//! Evaluation of Dirichlet L-functions on the critical line and the
//! rotated real completed function used to locate zeros by sign changes.
//!
//! L(s, χ) = q^{−s} Σ_{r=1}^{q} χ(r) ζ(s, r/q) with the Hurwitz zeta
//! computed by Euler–Maclaurin. For a primitive χ mod f with parity a,
//! the rotated function
//!
//! Z(t) = Re[ e^{iθ(t)} L(1/2 + it, χ) ],
//! θ(t) = −arg(ε)/2 + (t/2)·log(f/π) + Im log Γ((1/2 + a + it)/2),
//!
//! is real-analytic with the same zeros as L on the line (for f = 1 this
//! is Hardy's Z), because ε^{−1/2}Λ(1/2+it, χ) is real by the functional
//! equation. ε = τ(χ)/(i^a √f) is computed from the Gauss sum.

use num_complex::Complex64;

use crate::dirichlet::DirichletGroup;
use crate::error::Result;
use crate::special::{ln_gamma, BERNOULLI_2K};

/// ζ(s, a) for 0 < a ≤ 1 by Euler–Maclaurin; accurate to ~1e-12 for
/// |Im s| ≤ a few hundred.
pub fn hurwitz_zeta(s: Complex64, a: f64) -> Complex64 {
    let n = 25usize.max((1.2 * s.im.abs()).ceil() as usize);
    let mut sum = Complex64::default();
    for k in 0..n {
        sum += (-(s) * (k as f64 + a).ln()).exp();
    }
    let na = n as f64 + a;
    let ln_na = na.ln();
    let one = Complex64::new(1.0, 0.0);
    // tail: (N+a)^{1-s}/(s-1) + (N+a)^{-s}/2
    sum += ((one - s) * ln_na).exp() / (s - one);
    let na_pow = (-(s) * ln_na).exp();
    sum += na_pow / 2.0;
    // Bernoulli corrections: B_{2k}/(2k)! · (s)_{2k-1} · (N+a)^{-s-2k+1}
    let mut poch = s; // (s)_1
    let mut fact = 1.0f64;
    let mut scale = na_pow * na; // (N+a)^{-s+1}
    for (k, &b2k) in BERNOULLI_2K.iter().enumerate() {
        let m = 2 * (k + 1); // 2k
        fact *= (m - 1) as f64 * m as f64;
        scale /= na * na;
        sum += poch * (b2k / fact) * scale;
        // advance (s)_{2k-1} -> (s)_{2k+1}
        poch *= (s + (m - 1) as f64) * (s + m as f64);
    }
    sum
}

/// A primitive Dirichlet character prepared for critical-line evaluation.
#[derive(Debug, Clone)]
pub struct PrimitiveChar {
    /// the conductor f (1 for ζ)
    pub modulus: u64,
    /// χ(r) for r = 0..f
    values: Vec<Complex64>,
    /// parity a: 0 if χ(−1) = 1, else 1
    pub parity: u32,
    pub self_dual: bool,
    /// root number ε = τ(χ)/(i^a √f)
    pub epsilon: Complex64,
    pub label: String,
}

impl PrimitiveChar {
    /// Reduce character `chi` mod q to its primitive inducing character.
    pub fn from_dirichlet(q: u64, chi: usize) -> Result<Self> {
        let dg = DirichletGroup::new(q)?;
        let f = dg.conductor(chi);
        let values: Vec<Complex64> =
            (0..f).map(|r| dg.primitive_eval(chi, f, r)).collect();
        let parity = if f <= 2 || (values[(f - 1) as usize].re - 1.0).abs() < 1e-9 {
            0
        } else {
            1
        };
        let self_dual = values.iter().all(|v| v.im.abs() < 1e-12);
        let epsilon = if f == 1 {
            Complex64::new(1.0, 0.0)
        } else {
            let tau = {
                // Gauss sum of the primitive character mod f
                let mut t = Complex64::default();
                for r in 1..f {
                    let th = 2.0 * std::f64::consts::PI * r as f64 / f as f64;
                    t += values[r as usize] * Complex64::new(th.cos(), th.sin());
                }
                t
            };
            let ia = if parity == 0 {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 1.0)
            };
            tau / (ia * (f as f64).sqrt())
        };
        let label = if f == 1 {
            "zeta".to_string()
        } else {
            format!("L_q{f}_a{}", Self::canonical_index(&values, f))
        };
        Ok(Self { modulus: f, values, parity, self_dual, epsilon, label })
    }

    /// Smallest residue r with χ(r) ≠ 0, 1 (a value fingerprint for labels).
    fn canonical_index(values: &[Complex64], f: u64) -> u64 {
        for r in 2..f {
            let v = values[r as usize];
            if v.norm() > 0.5 && (v - 1.0).norm() > 1e-9 {
                return r;
            }
        }
        1
    }

    pub fn is_zeta(&self) -> bool {
        self.modulus == 1
    }

    /// L(s, χ) by Hurwitz decomposition.
    pub fn l(&self, s: Complex64) -> Complex64 {
        let f = self.modulus;
        if f == 1 {
            return hurwitz_zeta(s, 1.0);
        }
        let mut sum = Complex64::default();
        for r in 1..=f {
            let v = self.values[(r % f) as usize];
            if v.norm() > 1e-14 {
                sum += v * hurwitz_zeta(s, r as f64 / f as f64);
            }
        }
        sum * (-(s) * (f as f64).ln()).exp()
    }

    /// Rotation phase θ(t); continuous in t.
    pub fn theta(&self, t: f64) -> f64 {
        let z = Complex64::new((0.5 + self.parity as f64) / 2.0, t / 2.0);
        -0.5 * self.epsilon.arg() + t / 2.0 * (self.modulus as f64 / std::f64::consts::PI).ln()
            + ln_gamma(z).im
    }

    /// The rotated real completed function Z(t).
    pub fn z(&self, t: f64) -> f64 {
        let s = Complex64::new(0.5, t);
        let th = self.theta(t);
        (Complex64::new(th.cos(), th.sin()) * self.l(s)).re
    }

    /// Smooth main term for the zero count on both signs of the line up to
    /// height T: (2/π)·[θ(T) + arg ε/2] + 2 for ζ's trivial shift. The true
    /// count differs by 2S(T) + O(1/T).
    pub fn count_main(&self, t: f64) -> f64 {
        let bracket = self.theta(t) + 0.5 * self.epsilon.arg();
        2.0 / std::f64::consts::PI * bracket + if self.is_zeta() { 2.0 } else { 0.0 }
    }
}
