//! Test-function families: η ∈ S_δ (smooth, even, exponentially decaying)
//! and Φ ∈ 𝒰 (even, nonnegative, integrable averaging kernels), together
//! with their Fourier transforms and the derived constants ℒ_η(1/2),
//! α(|η̂|²) and η̂(0).
//!
//! Fourier convention: η̂(ξ) = ∫ η(u) e^{−2πiξu} du (real and even for the
//! built-in weights). ℒ_η(s) = ∫ η(t) e^{st} dt is the two-sided Laplace
//! transform.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::quad::adaptive_simpson;

type Eval = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A prime-sum weight η ∈ S_δ with its transform and derived constants.
#[derive(Clone)]
pub struct WeightEta {
    pub name: String,
    /// decay parameter: η, η' are checked against e^{−(1/2+δ)|t|}
    pub delta: f64,
    eta: Eval,
    eta_hat: Eval,
    /// ℒ_η(1/2) = ∫ η(t) e^{t/2} dt
    pub l_eta_half: f64,
    /// α(|η̂|²) = ∫ η̂(ξ)² dξ
    pub alpha_h: f64,
    /// η̂(0) = ∫ η
    pub eta_hat0: f64,
    /// error bar on the three constants (0 for closed forms)
    pub constant_bar: f64,
    /// hard support radius when compactly supported
    hard_support: Option<f64>,
}

impl std::fmt::Debug for WeightEta {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("WeightEta")
            .field("name", &self.name)
            .field("delta", &self.delta)
            .field("l_eta_half", &self.l_eta_half)
            .field("alpha_h", &self.alpha_h)
            .field("eta_hat0", &self.eta_hat0)
            .finish()
    }
}

/// Default effective-support tolerance for prime-sum truncation.
pub const SUPPORT_TOL: f64 = 1e-12;

impl WeightEta {
    pub fn eval(&self, u: f64) -> f64 {
        (self.eta)(u)
    }

    pub fn hat(&self, xi: f64) -> f64 {
        (self.eta_hat)(xi)
    }

    /// Custom weight from evaluators plus quadrature-derived constants.
    /// Used for validation counterexamples; the built-ins come from
    /// [`builtin_eta`].
    pub fn custom(
        name: &str,
        delta: f64,
        eta: impl Fn(f64) -> f64 + Send + Sync + 'static,
        eta_hat: impl Fn(f64) -> f64 + Send + Sync + 'static,
        radius: f64,
    ) -> Self {
        let eta: Eval = Arc::new(eta);
        let tol = 1e-10;
        let e = eta.clone();
        let l_half =
            adaptive_simpson(|t| e(t) * (t / 2.0).exp(), -radius, radius, tol);
        let eh: Eval = Arc::new(eta_hat);
        let e2 = eh.clone();
        let alpha = adaptive_simpson(|xi| e2(xi).powi(2), -radius, radius, tol);
        let eta_hat0 = eh(0.0);
        Self {
            name: name.into(),
            delta,
            eta,
            eta_hat: eh,
            l_eta_half: l_half.value,
            alpha_h: alpha.value,
            eta_hat0,
            constant_bar: l_half.error.max(alpha.error),
            hard_support: None,
        }
    }

    /// Smallest R with |η(u)| < tol for |u| > R (bisection against the
    /// even, eventually decreasing built-in shapes).
    pub fn support_radius(&self, tol: f64) -> f64 {
        if let Some(r) = self.hard_support {
            return r;
        }
        let mut hi = 1.0;
        while self.eval(hi).abs() >= tol && hi < 1e4 {
            hi *= 2.0;
        }
        let mut lo = 0.0;
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if self.eval(mid).abs() >= tol {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        hi
    }
}

/// An averaging kernel Φ ∈ 𝒰.
#[derive(Clone)]
pub struct WeightPhi {
    pub name: String,
    phi: Eval,
    phi_hat: Eval,
    /// ∫ Φ = Φ̂(0)
    pub integral: f64,
    /// hard support radius, if compactly supported
    hard_support: Option<f64>,
}

impl std::fmt::Debug for WeightPhi {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("WeightPhi")
            .field("name", &self.name)
            .field("integral", &self.integral)
            .finish()
    }
}

impl WeightPhi {
    pub fn eval(&self, u: f64) -> f64 {
        (self.phi)(u)
    }

    pub fn hat(&self, xi: f64) -> f64 {
        (self.phi_hat)(xi)
    }

    /// Smallest R with Φ(u) < tol·max Φ for |u| > R.
    pub fn support_radius(&self, tol: f64) -> f64 {
        if let Some(r) = self.hard_support {
            return r;
        }
        let peak = self.eval(0.0);
        let cut = tol * peak;
        let mut hi = 1.0;
        while self.eval(hi) >= cut && hi < 1e4 {
            hi *= 2.0;
        }
        let mut lo = 0.0;
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if self.eval(mid) >= cut {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        hi
    }
}

/// The zero-sum test function h = η̂² ∈ 𝒯_δ.
#[derive(Clone)]
pub struct TestFunctionH {
    pub name: String,
    pub delta: f64,
    h: Eval,
    /// h(0) = η̂(0)²
    pub h0: f64,
    /// ∫ h = α(|η̂|²)
    pub integral: f64,
    /// smallest C with h(ξ) ≤ C (1+|ξ|)⁻¹ (log(2+|ξ|))^{−2−δ} on the grid
    pub envelope_const: f64,
}

impl TestFunctionH {
    pub fn eval(&self, xi: f64) -> f64 {
        (self.h)(xi)
    }
}

const SQRT_2PI: f64 = 2.5066282746310002; // √(2π)

fn bump(u: f64) -> f64 {
    if u.abs() < 1.0 {
        (-1.0 / (1.0 - u * u)).exp()
    } else {
        0.0
    }
}

/// η̂₁ for the bump η₁ (real, even): ∫ η₁(u) cos(2πξu) du.
fn bump_hat(xi: f64) -> f64 {
    let w = 2.0 * std::f64::consts::PI * xi;
    adaptive_simpson(|u| bump(u) * (w * u).cos(), -1.0, 1.0, 1e-12).value
}

/// Named η registry: `gaussian` (η = e^{−u²/2}, closed-form constants) and
/// `selfconv_bump` (η = η₁⋆η₁ with η₁ = e^{−1/(1−u²)} on (−1,1), constants
/// by quadrature, support exactly [−2,2]).
pub fn builtin_eta(name: &str) -> Result<WeightEta> {
    match name {
        "gaussian" => Ok(WeightEta {
            name: name.into(),
            delta: 0.25,
            eta: Arc::new(|u| (-u * u / 2.0).exp()),
            eta_hat: Arc::new(|xi| {
                SQRT_2PI * (-2.0 * std::f64::consts::PI.powi(2) * xi * xi).exp()
            }),
            l_eta_half: SQRT_2PI * (0.125f64).exp(),
            alpha_h: std::f64::consts::PI.sqrt(),
            eta_hat0: SQRT_2PI,
            constant_bar: 0.0,
            hard_support: None,
        }),
        "selfconv_bump" => {
            // η(u) = ∫ η₁(v) η₁(u − v) dv, supported on [−2, 2]
            let eta: Eval = Arc::new(|u: f64| {
                let u = u.abs();
                if u >= 2.0 {
                    return 0.0;
                }
                let lo = (u - 1.0).max(-1.0);
                let hi = 1.0f64.min(u + 1.0);
                adaptive_simpson(|v| bump(v) * bump(u - v), lo, hi, 1e-13).value
            });
            let eta_hat: Eval = Arc::new(|xi| bump_hat(xi).powi(2));
            // ℒ_{η₁⋆η₁}(s) = ℒ_{η₁}(s)²
            let l1 = adaptive_simpson(|t| bump(t) * (t / 2.0).exp(), -1.0, 1.0, 1e-13);
            // α = ∫ η̂² dξ = ∫ η(u)² du by Plancherel (η real even)
            let e = eta.clone();
            let alpha = adaptive_simpson(|u| e(u).powi(2), -2.0, 2.0, 1e-11);
            let int1 = adaptive_simpson(bump, -1.0, 1.0, 1e-13);
            Ok(WeightEta {
                name: name.into(),
                delta: 0.25,
                eta,
                eta_hat,
                l_eta_half: l1.value * l1.value,
                alpha_h: alpha.value,
                eta_hat0: int1.value * int1.value,
                constant_bar: (2.0 * l1.value.abs() * l1.error)
                    .max(alpha.error)
                    .max(2.0 * int1.value.abs() * int1.error)
                    .max(1e-12),
                hard_support: Some(2.0),
            })
        }
        _ => Err(Error::UnknownWeight(name.into())),
    }
}

/// Named Φ registry: `gaussian` and `triangle` (Φ(u) = max(0, 1−|u|),
/// Φ̂(ξ) = (sin(πξ)/(πξ))², ∫Φ = 1).
pub fn builtin_phi(name: &str) -> Result<WeightPhi> {
    match name {
        "gaussian" => Ok(WeightPhi {
            name: name.into(),
            phi: Arc::new(|u| (-u * u / 2.0).exp()),
            phi_hat: Arc::new(|xi| {
                SQRT_2PI * (-2.0 * std::f64::consts::PI.powi(2) * xi * xi).exp()
            }),
            integral: SQRT_2PI,
            hard_support: None,
        }),
        "triangle" => Ok(WeightPhi {
            name: name.into(),
            phi: Arc::new(|u| (1.0 - u.abs()).max(0.0)),
            phi_hat: Arc::new(|xi| {
                let w = std::f64::consts::PI * xi;
                if w.abs() < 1e-8 {
                    1.0 - w * w / 3.0
                } else {
                    (w.sin() / w).powi(2)
                }
            }),
            integral: 1.0,
            hard_support: Some(1.0),
        }),
        _ => Err(Error::UnknownWeight(name.into())),
    }
}

/// h := η̂², with h(0), ∫h = α(|η̂|²) and the grid envelope constant for
/// membership in 𝒯_δ.
pub fn eta_to_h(eta: &WeightEta) -> Result<TestFunctionH> {
    let e = eta.clone();
    let h: Eval = Arc::new(move |xi| e.hat(xi).powi(2));
    let mut c = 0.0f64;
    let mut xi = 0.0;
    while xi <= 40.0 {
        let v = h(xi);
        if v < 0.0 {
            return Err(Error::WeightValidation(format!(
                "h negative at xi={xi}: {v}"
            )));
        }
        let env = (1.0 + xi).recip() * (2.0 + xi).ln().powf(-2.0 - eta.delta);
        c = c.max(v / env);
        xi += 0.05;
    }
    Ok(TestFunctionH {
        name: format!("{}^2", eta.name),
        delta: eta.delta,
        h,
        h0: eta.eta_hat0 * eta.eta_hat0,
        integral: eta.alpha_h,
        envelope_const: c,
    })
}

/// One line of a validation report.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub condition: String,
    pub worst_point: f64,
    pub margin: f64,
    pub pass: bool,
}

/// Grid for the report-only weight checks.
#[derive(Debug, Clone, Copy)]
pub struct GridSpec {
    pub t_max: f64,
    pub step: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self { t_max: 40.0, step: 0.05 }
    }
}

fn grid_points(g: &GridSpec) -> impl Iterator<Item = f64> + '_ {
    let n = (g.t_max / g.step).round() as usize;
    (0..=n).map(move |i| i as f64 * g.step)
}

/// Check an even function against a decay envelope: the ratio f/env, taken
/// on the outer half of the grid, must not exceed the maximum ratio on the
/// inner half (i.e. the envelope eventually dominates). Report-only: a
/// Cauchy density fails, the built-ins pass.
fn envelope_check(
    name: &str,
    f: impl Fn(f64) -> f64,
    env: impl Fn(f64) -> f64,
    grid: &GridSpec,
) -> CheckResult {
    let half = grid.t_max / 2.0;
    let mut inner_max = 0.0f64;
    let mut outer_max = 0.0f64;
    let mut worst = 0.0;
    for t in grid_points(grid) {
        let r = f(t).abs() / env(t);
        if t <= half {
            inner_max = inner_max.max(r);
        } else if r > outer_max {
            outer_max = r;
            worst = t;
        }
    }
    let bound = inner_max.max(1e-300) * (1.0 + 1e-6);
    CheckResult {
        condition: name.into(),
        worst_point: worst,
        margin: bound - outer_max,
        pass: outer_max <= bound,
    }
}

/// Grid validation of η: evenness, η̂ ≥ 0, the e^{−(1/2+δ)|t|} envelopes
/// for η and η', the (1+|ξ|)⁻¹ log^{−2−δ} envelope for η̂, and the Laplace
/// symmetry ℒ_η(1/2) = ℒ_η(−1/2). Only grid verification is possible for
/// the "for all ξ" envelope conditions; the report notes the grid used.
pub fn validate_eta(eta: &WeightEta, grid: &GridSpec) -> Vec<CheckResult> {
    let mut out = Vec::new();
    // evenness
    let (mut worst, mut wt) = (0.0f64, 0.0f64);
    for t in grid_points(grid) {
        let d = (eta.eval(t) - eta.eval(-t)).abs();
        if d > worst {
            worst = d;
            wt = t;
        }
    }
    out.push(CheckResult {
        condition: "eta even on grid".into(),
        worst_point: wt,
        margin: 1e-10 - worst,
        pass: worst <= 1e-10,
    });
    // eta_hat nonnegative
    let (mut min, mut mxi) = (f64::INFINITY, 0.0);
    for xi in grid_points(grid) {
        let v = eta.hat(xi);
        if v < min {
            min = v;
            mxi = xi;
        }
    }
    out.push(CheckResult {
        condition: "eta_hat >= 0 on grid".into(),
        worst_point: mxi,
        margin: min + 1e-12,
        pass: min >= -1e-12,
    });
    // decay envelopes
    let d = eta.delta;
    out.push(envelope_check(
        &format!("eta decay envelope exp(-({:.2})|t|) on grid", 0.5 + d),
        |t| eta.eval(t),
        |t| (-(0.5 + d) * t).exp(),
        grid,
    ));
    let h = grid.step / 4.0;
    out.push(envelope_check(
        &format!("eta' decay envelope exp(-({:.2})|t|) on grid", 0.5 + d),
        |t| (eta.eval(t + h) - eta.eval(t - h)) / (2.0 * h),
        |t| (-(0.5 + d) * t).exp(),
        grid,
    ));
    out.push(envelope_check(
        "eta_hat envelope (1+|xi|)^-1 log(2+|xi|)^(-2-delta) on grid",
        |xi| eta.hat(xi),
        |xi| (1.0 + xi).recip() * (2.0 + xi).ln().powf(-2.0 - d),
        grid,
    ));
    // Laplace symmetry by quadrature
    let r = eta.support_radius(1e-14).min(200.0);
    let tol = 1e-12;
    let plus = adaptive_simpson(|t| eta.eval(t) * (t / 2.0).exp(), -r, r, tol);
    let minus = adaptive_simpson(|t| eta.eval(t) * (-t / 2.0).exp(), -r, r, tol);
    let diff = (plus.value - minus.value).abs();
    out.push(CheckResult {
        condition: "L_eta(1/2) = L_eta(-1/2) by quadrature".into(),
        worst_point: 0.5,
        margin: 1e-10 - diff,
        pass: diff <= 1e-10,
    });
    out
}

/// Grid validation of Φ: evenness, Φ ≥ 0, Φ̂ ≥ 0, finite integral.
pub fn validate_phi(phi: &WeightPhi, grid: &GridSpec) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let (mut worst, mut wt) = (0.0f64, 0.0f64);
    let (mut min, mut mt) = (f64::INFINITY, 0.0f64);
    let (mut minh, mut mxh) = (f64::INFINITY, 0.0f64);
    for t in grid_points(grid) {
        let d = (phi.eval(t) - phi.eval(-t)).abs();
        if d > worst {
            worst = d;
            wt = t;
        }
        let v = phi.eval(t);
        if v < min {
            min = v;
            mt = t;
        }
        let vh = phi.hat(t);
        if vh < minh {
            minh = vh;
            mxh = t;
        }
    }
    out.push(CheckResult {
        condition: "phi even on grid".into(),
        worst_point: wt,
        margin: 1e-10 - worst,
        pass: worst <= 1e-10,
    });
    out.push(CheckResult {
        condition: "phi >= 0 on grid".into(),
        worst_point: mt,
        margin: min + 1e-12,
        pass: min >= -1e-12,
    });
    out.push(CheckResult {
        condition: "phi_hat >= 0 on grid".into(),
        worst_point: mxh,
        margin: minh + 1e-12,
        pass: minh >= -1e-12,
    });
    let r = phi.support_radius(1e-14).min(200.0);
    let int = adaptive_simpson(|t| phi.eval(t).abs(), -r, r, 1e-9);
    out.push(CheckResult {
        condition: "phi integrable".into(),
        worst_point: r,
        margin: 1e12 - int.value,
        pass: int.value.is_finite(),
    });
    out
}
