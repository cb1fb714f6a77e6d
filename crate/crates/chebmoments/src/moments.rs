//! Empirical central moments M̃_n, their truncated theoretical counterpart
//! D̃_n, Gaussian moments, the main lower-bound report quantities, and
//! brute-force verification of the combinatorial zero-pairing inequalities.
//!
//! M̃_n(U) = (1/(U∫₀^∞Φ)) ∫₀^∞ Φ(u/U)·(ψ_η(e^u) − t̂(1)e^{u/2}ℒ_η(1/2)
//! − η̂(0)z)ⁿ du, and D̃_n is the n-fold sum over character/ordinate
//! tuples weighted by Φ̂ of the ordinate sum. The S_{2ℓ} sums are
//! evaluated exactly by grouping tuples by their value-count signature,
//! which exhibits S_{2ℓ} = Σ_sig |T_sig|² ≥ 0 and keeps the enumeration
//! polynomial instead of squaring it.

use std::cell::RefCell;
use std::collections::HashMap;

use num_complex::Complex64;

use crate::chebotarev::{psi_eta, FrobeniusOracle};
use crate::error::{Error, Result};
use crate::groups::classfn::{fourier_coeff, ClassFunction};
use crate::kahan::KahanSum;
use crate::quad::adaptive_simpson;
use crate::sieve::PrimeTable;
use crate::weights::{WeightEta, WeightPhi};
use crate::zeros::{DensityParams, ZeroSet};

/// Cost guard on the moment order.
pub const MAX_ORDER: u32 = 8;
/// Cost guard on the D̃ tuple enumeration (items^n).
const MAX_TUPLES: f64 = 5e7;

/// μ_r: the r-th moment of the standard Gaussian, (r−1)!! for even r and
/// 0 for odd r.
pub fn gaussian_moment(r: u32) -> u64 {
    if r % 2 == 1 {
        return 0;
    }
    let mut acc = 1u64;
    let mut k = r;
    while k >= 2 {
        acc *= (k - 1) as u64;
        k -= 2;
    }
    acc
}

/// Everything needed to evaluate the central moments of one extension.
pub struct MomentRequest<'a> {
    /// averaging length U > 0
    pub u_big: f64,
    pub eta: &'a WeightEta,
    pub phi: &'a WeightPhi,
    pub oracle: &'a FrobeniusOracle,
    pub t: &'a ClassFunction,
    /// the central-zero term z(L/K, t); 0 unless overridden
    pub z: f64,
    /// absolute quadrature tolerance on the normalized moment
    pub quad_tol: f64,
    /// η support truncation tolerance for the ψ_η window
    pub support_tol: f64,
}

/// A moment value with its declared error bar (quadrature + ψ_η bars
/// propagated through the n-th power).
#[derive(Debug, Clone, Copy)]
pub struct MomentValue {
    pub value: f64,
    pub bar: f64,
}

/// Evaluates M̃_n for one request, caching the deviation
/// ψ_η(e^u) − t̂(1)e^{u/2}ℒ_η(1/2) − η̂(0)z across quadrature nodes and
/// across orders n.
pub struct MomentEstimator<'a> {
    req: MomentRequest<'a>,
    table: &'a PrimeTable,
    t_hat_one: f64,
    /// u ↦ (deviation, bar) keyed by bit pattern
    cache: RefCell<HashMap<u64, (f64, f64)>>,
    error: RefCell<Option<Error>>,
    /// ∫_{|v|>R} e^{v/2} η(v) dv: per-unit-t window truncation mass
    trunc_const: f64,
    /// integration upper end U·R_Φ
    u_max: f64,
}

impl<'a> MomentEstimator<'a> {
    pub fn new(req: MomentRequest<'a>, table: &'a PrimeTable) -> Result<Self> {
        if !(req.u_big > 0.0) {
            return Err(Error::Parse(format!("U must be positive, got {}", req.u_big)));
        }
        let u_max = req.u_big * req.phi.support_radius(1e-12);
        let r = req.eta.support_radius(req.support_tol);
        let needed = (u_max + r).exp();
        if needed > table.limit() as f64 {
            return Err(Error::SieveCeiling {
                needed: needed.ceil() as u64,
                ceiling: table.limit(),
            });
        }
        let t_hat_one = fourier_coeff(req.t, req.t.table.trivial_index()).re;
        // mass of η outside the truncation window against the prime density
        // e^{(u+v)/2}: Σ_{|v|>R} log p · p^{-m/2} η(v) ≈ e^{u/2}∫ e^{v/2}η(v)
        let eta = req.eta;
        let mut trunc_const = 0.0;
        let mut lo = r;
        for _ in 0..20 {
            let hi = lo + 4.0;
            let piece = adaptive_simpson(
                |v| (0.5 * v).exp() * eta.eval(v).abs() + (-0.5 * v).exp() * eta.eval(-v).abs(),
                lo,
                hi,
                1e-14,
            )
            .value;
            trunc_const += piece;
            if piece < 1e-16 * (1.0 + trunc_const) {
                break;
            }
            lo = hi;
        }
        Ok(Self {
            req,
            table,
            t_hat_one,
            cache: RefCell::new(HashMap::new()),
            error: RefCell::new(None),
            trunc_const,
            u_max,
        })
    }

    /// Deviation D(u) and its bar (ramified mass + window truncation).
    fn deviation(&self, u: f64) -> (f64, f64) {
        if let Some(&hit) = self.cache.borrow().get(&u.to_bits()) {
            return hit;
        }
        let req = &self.req;
        let x = u.exp();
        let out = match psi_eta(x, req.oracle, req.t, req.eta, req.support_tol, self.table) {
            Ok(psi) => {
                let d = psi.value.re
                    - self.t_hat_one * (0.5 * u).exp() * req.eta.l_eta_half
                    - req.eta.eta_hat0 * req.z;
                let t_max = req.t.values.iter().map(|v| v.norm()).fold(0.0, f64::max);
                let trunc = t_max * (0.5 * u).exp() * self.trunc_const;
                (d, psi.bar + trunc)
            }
            Err(e) => {
                self.error.borrow_mut().get_or_insert(e);
                (0.0, 0.0)
            }
        };
        self.cache.borrow_mut().insert(u.to_bits(), out);
        out
    }

    /// M̃_n by adaptive quadrature over (0, U·R_Φ].
    pub fn mtilde(&self, n: u32) -> Result<MomentValue> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::CostGuard(format!(
                "moment order n = {n} outside 1..={MAX_ORDER}"
            )));
        }
        let req = &self.req;
        let half_phi = req.phi.integral / 2.0; // ∫₀^∞ Φ
        let norm = req.u_big * half_phi;
        let f = |u: f64| -> f64 {
            let (d, _) = self.deviation(u);
            req.phi.eval(u / req.u_big) * d.powi(n as i32)
        };
        // composite Simpson on nested dyadic grids with a Richardson error
        // estimate. Each deviation node is a full windowed prime sum, so
        // the node count is hard-capped; adaptive bisection is unsuitable
        // here because the window truncation leaves O(support_tol)-sized
        // kinks at every prime boundary that defeat local refinement.
        let simpson_fixed = |m: usize| -> f64 {
            let h = self.u_max / m as f64;
            let mut acc = KahanSum::new();
            acc.add(f(0.0));
            acc.add(f(self.u_max));
            for i in 1..m {
                let w = if i % 2 == 1 { 4.0 } else { 2.0 };
                acc.add(w * f(i as f64 * h));
            }
            acc.value() * h / 3.0
        };
        let mut intervals = 256usize;
        let mut prev = simpson_fixed(intervals);
        let (mut value, mut quad_err);
        loop {
            intervals *= 2;
            let cur = simpson_fixed(intervals);
            quad_err = (cur - prev).abs() / 15.0;
            value = cur;
            prev = cur;
            if quad_err <= req.quad_tol * norm || intervals >= 1 << 13 {
                break;
            }
        }
        if let Some(e) = self.error.borrow_mut().take() {
            return Err(e);
        }
        if quad_err > 100.0 * req.quad_tol * norm {
            return Err(Error::QuadratureNonConvergence(quad_err / norm));
        }
        // propagate per-node ψ bars: |Dⁿ − D̃ⁿ| ≤ n(|D|+b)^{n−1}b, integrated
        // against the same Φ weight on a fixed grid of cached nodes
        let grid = 256;
        let mut bar_acc = KahanSum::new();
        for i in 0..=grid {
            let u = self.u_max * i as f64 / grid as f64;
            let (d, b) = self.deviation(u);
            let w = req.phi.eval(u / req.u_big);
            bar_acc.add(w * n as f64 * (d.abs() + b).powi(n as i32 - 1) * b);
        }
        if let Some(e) = self.error.borrow_mut().take() {
            return Err(e);
        }
        let bar_int = bar_acc.value() * self.u_max / grid as f64;
        Ok(MomentValue {
            value: value / norm,
            bar: (quad_err + bar_int) / norm,
        })
    }
}

/// Binomial coefficient as a float (orders here are ≤ 16).
fn binomial(n: u32, k: u32) -> f64 {
    let k = k.min(n - k.min(n));
    let mut acc = 1.0;
    for j in 0..k {
        acc = acc * (n - j) as f64 / (j + 1) as f64;
    }
    acc
}

/// Recover the uncentered moment M_{2m} from the central moments
/// M̃_0..=M̃_{2m}: M_{2m} = Σ_j C(2m, j)·M̃_j·(η̂(0)z)^{2m−j}.
pub fn m_from_mtilde(mtildes: &[f64], z: f64, eta_hat0: f64) -> Result<f64> {
    if mtildes.is_empty() || mtildes.len() % 2 == 0 {
        return Err(Error::Parse(format!(
            "m_from_mtilde needs the {} values M̃_0..=M̃_2m, got {}",
            "2m+1",
            mtildes.len()
        )));
    }
    let two_m = (mtildes.len() - 1) as u32;
    let shift = eta_hat0 * z;
    let mut acc = KahanSum::new();
    for (j, &mt) in mtildes.iter().enumerate() {
        acc.add(binomial(two_m, j as u32) * mt * shift.powi((two_m - j as u32) as i32));
    }
    Ok(acc.value())
}

/// One character's input to the D̃ tuple sum.
#[derive(Debug, Clone)]
pub struct DtildeChar<'a> {
    /// t̂⁺(χ)
    pub coeff: Complex64,
    /// positive ordinates of L(s, χ)
    pub pos: &'a ZeroSet,
    /// positive ordinates of L(s, χ̄) (their negations are χ's zeros below
    /// the real axis); `None` for self-dual χ, whose spectrum is symmetric
    pub conj_pos: Option<&'a ZeroSet>,
    /// density parameters of χ for the truncation tail
    pub density: DensityParams,
}

/// D̃_n truncated at ordinate height `cutoff`:
///
/// ((−1)ⁿ/(2∫₀^∞Φ)) Σ_{χ₁..χₙ} Π t̂(χ_j) Σ_{γ tuples}
/// Φ̂((U/2π)(γ₁+…+γₙ)) Π η̂(γ_j/2π),
///
/// with all ordinates of both signs. The bar estimates the omitted tuples
/// from the η̂ decay beyond the cutoff times the zero density.
pub fn dtilde_truncated(
    chars: &[DtildeChar],
    eta: &WeightEta,
    phi: &WeightPhi,
    u_big: f64,
    n: u32,
    cutoff: f64,
) -> Result<MomentValue> {
    if n == 0 || n > 4 {
        return Err(Error::CostGuard(format!("D̃ order n = {n} outside 1..=4")));
    }
    let two_pi = 2.0 * std::f64::consts::PI;
    // flatten: one item per signed ordinate per character
    let mut items: Vec<(Complex64, f64)> = Vec::new();
    for c in chars {
        if c.coeff.norm() == 0.0 {
            continue;
        }
        for &(g, mult) in &c.pos.ordinates {
            if g > cutoff {
                continue;
            }
            let w = c.coeff * (mult as f64 * eta.hat(g / two_pi));
            items.push((w, g));
            if c.conj_pos.is_none() {
                items.push((w, -g));
            }
        }
        if let Some(conj) = c.conj_pos {
            for &(g, mult) in &conj.ordinates {
                if g > cutoff {
                    continue;
                }
                let w = c.coeff * (mult as f64 * eta.hat(g / two_pi));
                items.push((w, -g));
            }
        }
    }
    if (items.len() as f64).powi(n as i32) > MAX_TUPLES {
        return Err(Error::CostGuard(format!(
            "{} items to the power {n} exceeds the tuple budget",
            items.len()
        )));
    }
    let half_phi = phi.integral / 2.0;
    let mut acc = KahanComplexSum::new();
    let mut stack_w = vec![Complex64::new(1.0, 0.0); n as usize + 1];
    let mut stack_g = vec![0.0f64; n as usize + 1];
    enumerate_tuples(&items, n as usize, 0, &mut stack_w, &mut stack_g, &mut |w, g| {
        acc.add(w * phi.hat(u_big / two_pi * g));
    });
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let total = acc.value() * sign / (2.0 * half_phi);
    // tail: mass of items beyond the cutoff per character, raised to the
    // tuple power around the kept mass
    let kept: f64 = items.iter().map(|(w, _)| w.norm()).sum();
    let mut beyond = 0.0;
    for c in chars {
        if c.coeff.norm() == 0.0 {
            continue;
        }
        beyond += c.coeff.norm() * 2.0 * eta_density_tail(eta, cutoff, &c.density);
    }
    let phimax = phi.integral; // Φ̂ is maximal at 0 since Φ ≥ 0
    let bar = n as f64 * (kept + beyond).powi(n as i32 - 1) * beyond * phimax
        / (2.0 * half_phi);
    Ok(MomentValue { value: total.re, bar: bar + total.im.abs() })
}

/// ∫_T^∞ |η̂(t/2π)|·density(t) dt on doubling windows.
fn eta_density_tail(eta: &WeightEta, t_from: f64, dens: &DensityParams) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut total = 0.0;
    let mut lo = t_from.max(1.0);
    for _ in 0..24 {
        let hi = lo * 2.0;
        let piece = adaptive_simpson(
            |t| eta.hat(t / two_pi).abs() * dens.density_at(t),
            lo,
            hi,
            1e-14,
        )
        .value;
        total += piece;
        if piece.abs() < 1e-18 * (1.0 + total) {
            break;
        }
        lo = hi;
    }
    total
}

fn enumerate_tuples(
    items: &[(Complex64, f64)],
    n: usize,
    depth: usize,
    stack_w: &mut Vec<Complex64>,
    stack_g: &mut Vec<f64>,
    sink: &mut impl FnMut(Complex64, f64),
) {
    if depth == n {
        sink(stack_w[depth], stack_g[depth]);
        return;
    }
    for &(w, g) in items {
        stack_w[depth + 1] = stack_w[depth] * w;
        stack_g[depth + 1] = stack_g[depth] + g;
        enumerate_tuples(items, n, depth + 1, stack_w, stack_g, sink);
    }
}

/// Compensated complex accumulator over the tuple stream.
struct KahanComplexSum {
    re: KahanSum,
    im: KahanSum,
}

impl KahanComplexSum {
    fn new() -> Self {
        Self { re: KahanSum::new(), im: KahanSum::new() }
    }

    fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

/// Inputs for the main lower-bound report.
#[derive(Debug, Clone, Copy)]
pub struct MainBoundInput {
    pub m: u32,
    /// ν(L/F, t⁺; η)
    pub nu: f64,
    /// w₄(L/F, t⁺; η)
    pub w4: f64,
    /// λ₁₁(t⁺) (Littlewood norm)
    pub lambda11: f64,
    /// λ₁₂(t⁺)
    pub lambda12: f64,
    /// S_{t⁺}
    pub s_t_plus: f64,
    /// α(|η̂|²)
    pub alpha_h: f64,
    pub rd_l: f64,
    pub deg_f: f64,
    pub u_big: f64,
    /// the η-dependent absolute constant, echoed, never asserted
    pub kappa_eta: f64,
}

/// The main-theorem lower bound μ_{2m}ν^m with its two error magnitudes
/// and the explicit two-sided variance bracket.
#[derive(Debug, Clone)]
pub struct MainBoundReport {
    /// μ_{2m}·ν^m
    pub main: f64,
    /// relative correction magnitude m²·m!·w₄
    pub correction: f64,
    /// (κ_η·[F:ℚ]·λ₁₁·log rd_L)^{2m}/U
    pub plumbing: f64,
    /// (1 − S_{t⁺})·α(|η̂|²)·[F:ℚ]·log(rd_L)·λ₁₂
    pub nu_lower: f64,
    /// (1 + S_{t⁺})·α(|η̂|²)·[F:ℚ]·log(rd_L)·λ₁₂
    pub nu_upper: f64,
    /// the unresolved slack, reported symbolically
    pub slack: String,
}

/// Assemble the Theorem-style report; a pure reporting operation.
pub fn theorem_main_bound(inp: &MainBoundInput) -> MainBoundReport {
    let mu = gaussian_moment(2 * inp.m) as f64;
    let main = mu * inp.nu.powi(inp.m as i32);
    let mfact: f64 = (1..=inp.m).map(|k| k as f64).product();
    let correction = (inp.m * inp.m) as f64 * mfact * inp.w4;
    let log_rd = inp.rd_l.ln();
    let plumbing = (inp.kappa_eta * inp.deg_f * inp.lambda11 * log_rd)
        .powi(2 * inp.m as i32)
        / inp.u_big;
    let scale = inp.alpha_h * inp.deg_f * log_rd * inp.lambda12;
    MainBoundReport {
        main,
        correction,
        plumbing,
        nu_lower: (1.0 - inp.s_t_plus) * scale,
        nu_upper: (1.0 + inp.s_t_plus) * scale,
        slack: format!(
            "O_eta(1/log_2(rd_L + 2)) = O_eta(1/{:.6})",
            (inp.rd_l + 2.0).ln().ln()
        ),
    }
}

impl std::fmt::Display for MainBoundReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "main_term: {:.12e}", self.main)?;
        writeln!(f, "correction_magnitude: {:.12e}", self.correction)?;
        writeln!(f, "plumbing_magnitude: {:.12e}", self.plumbing)?;
        writeln!(f, "nu_bracket_lower: {:.12e}", self.nu_lower)?;
        writeln!(f, "nu_bracket_upper: {:.12e}", self.nu_upper)?;
        write!(f, "bracket_slack: {}", self.slack)
    }
}

/// Inputs for the oscillation report.
#[derive(Debug, Clone, Copy)]
pub struct OmegaInput {
    pub lambda11: f64,
    pub lambda12: f64,
    pub s_t_plus: f64,
    pub rd_l: f64,
    pub deg_f: f64,
    /// the absolute constant κ', echoed symbolically
    pub kappa_prime: f64,
}

/// The oscillation lower bound normalized by x^{1/2} and the window
/// stretch factor β.
#[derive(Debug, Clone)]
pub struct OmegaReport {
    /// ([F:ℚ]·log(rd_L)·λ₁₂)^{1/2}·(1 − S_{t⁺})^{1/2}, 0 when vacuous
    pub bound: f64,
    /// κ'·[F:ℚ]·λ₁₁²·log(rd_L+2)·log₂(rd_L+2)/λ₁₂
    pub beta: f64,
    pub vacuous: bool,
    pub slack: String,
}

pub fn omega_report(inp: &OmegaInput) -> OmegaReport {
    let log_rd = inp.rd_l.ln();
    let one_minus_s = 1.0 - inp.s_t_plus;
    let vacuous = one_minus_s <= 0.0;
    let bound = if vacuous {
        0.0
    } else {
        (inp.deg_f * log_rd * inp.lambda12).max(0.0).sqrt() * one_minus_s.sqrt()
    };
    let l2 = (inp.rd_l + 2.0).ln();
    let beta = inp.kappa_prime * inp.deg_f * inp.lambda11 * inp.lambda11 * l2 * l2.ln()
        / inp.lambda12;
    OmegaReport {
        bound,
        beta,
        vacuous,
        slack: format!(
            "minus O(1/log_2(rd_L + 2)) = O(1/{:.6}) inside the square root",
            l2.ln()
        ),
    }
}

impl std::fmt::Display for OmegaReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "oscillation_bound_per_sqrt_x: {:.12e}", self.bound)?;
        writeln!(f, "window_stretch_beta: {:.12e}", self.beta)?;
        writeln!(f, "vacuous: {}", self.vacuous)?;
        write!(f, "bound_slack: {}", self.slack)
    }
}

/// The multiset Γ ⊂ ℝ_{>0} of the combinatorial lemma, with coefficients
/// a_γ (a_{−γ} = conj(a_γ) implicitly).
#[derive(Debug, Clone)]
pub struct GammaMultiset {
    /// (γ, multiplicity, a_γ); values must be positive and pairwise distinct
    pub entries: Vec<(f64, u32, Complex64)>,
}

impl GammaMultiset {
    pub fn new(entries: Vec<(f64, u32, Complex64)>) -> Result<Self> {
        for &(g, _, _) in &entries {
            if !(g > 0.0) {
                return Err(Error::Parse(format!("Gamma needs positive ordinates, got {g}")));
            }
        }
        for i in 0..entries.len() {
            for j in 0..i {
                if entries[i].0 == entries[j].0 {
                    return Err(Error::Parse(format!(
                        "duplicate ordinate {}; merge into one multiplicity",
                        entries[i].0
                    )));
                }
            }
        }
        Ok(Self { entries })
    }

    /// Σ_{γ∈Γ} |a_γ|² with multiplicities.
    pub fn sum_a2(&self) -> f64 {
        self.entries.iter().map(|&(_, m, a)| m as f64 * a.norm_sqr()).sum()
    }

    /// M = sup |a_γ|.
    pub fn sup_a(&self) -> f64 {
        self.entries.iter().map(|&(_, _, a)| a.norm()).fold(0.0, f64::max)
    }

    fn copies(&self) -> usize {
        self.entries.iter().map(|&(_, m, _)| m as usize).sum()
    }
}

/// S_{2ℓ}(a) by exact enumeration: tuples (γ₁..γ_ℓ) ∈ Γ^ℓ are grouped by
/// their value-count signature; the matching condition pairs each group
/// with the conjugate group on the −Γ side, so
/// S_{2ℓ} = Σ_sig T_sig·conj(T_sig), which is real and non-negative.
/// Returned as a complex number so callers can check the imaginary
/// residue.
pub fn s2l_bruteforce(g: &GammaMultiset, ell: u32) -> Result<Complex64> {
    if ell == 0 {
        return Err(Error::Parse("S_{2l} needs l >= 1".into()));
    }
    let copies = g.copies();
    if g.entries.len() > 6 || ell > 3 || (copies as f64).powi(ell as i32) > 1e7 {
        return Err(Error::CostGuard(format!(
            "S_{{2l}} enumeration over {copies} copies to the power {ell}"
        )));
    }
    if copies == 0 {
        return Ok(Complex64::default());
    }
    // expand multiplicities into copies (value index per copy)
    let mut copy_vals: Vec<usize> = Vec::with_capacity(copies);
    for (i, &(_, m, _)) in g.entries.iter().enumerate() {
        for _ in 0..m {
            copy_vals.push(i);
        }
    }
    // ordered l-tuples of copies, keyed by sorted value-count signature
    let mut groups: HashMap<Vec<(usize, u32)>, Complex64> = HashMap::new();
    let mut tuple = vec![0usize; ell as usize];
    loop {
        let mut counts: Vec<(usize, u32)> = Vec::new();
        let mut prod = Complex64::new(1.0, 0.0);
        for &c in &tuple {
            let v = copy_vals[c];
            prod *= g.entries[v].2;
            match counts.iter_mut().find(|e| e.0 == v) {
                Some(e) => e.1 += 1,
                None => counts.push((v, 1)),
            }
        }
        counts.sort_unstable();
        *groups.entry(counts).or_insert(Complex64::default()) += prod;
        // odometer
        let mut k = 0;
        loop {
            if k == tuple.len() {
                break;
            }
            tuple[k] += 1;
            if tuple[k] < copies {
                break;
            }
            tuple[k] = 0;
            k += 1;
        }
        if k == tuple.len() {
            break;
        }
    }
    let mut acc = KahanComplexSum::new();
    let mut keys: Vec<_> = groups.keys().cloned().collect();
    keys.sort_unstable();
    for key in keys {
        let t = groups[&key];
        acc.add(t * t.conj());
    }
    Ok(acc.value())
}

/// The asserted lower bound
/// ℓ!·(Σ|a|²)^{ℓ−1}·max{Σ|a|² − ℓ!ℓ(ℓ−1)M²e^{1/ℓ}, 0}.
pub fn s2l_lower_bound(g: &GammaMultiset, ell: u32) -> f64 {
    let s = g.sum_a2();
    let m = g.sup_a();
    let lf: f64 = (1..=ell).map(|k| k as f64).product();
    let corr = lf * (ell * (ell - 1).max(0)) as f64 * m * m * (1.0 / ell as f64).exp();
    lf * s.powi(ell as i32 - 1) * (s - corr).max(0.0)
}

/// Frobenius–Schur type of the character driving a pairing check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchurCase {
    /// ε₂ = 0: ψ ≠ ψ̄, pairing across the {ψ, ψ̄} pair
    Unitary,
    /// ε₂ = ±1: self-dual ψ, pairing within one L-function
    RealType,
}

/// Both sides of a pairing-sum comparison.
#[derive(Debug, Clone, Copy)]
pub struct PairingCheck {
    /// enumerated left side
    pub lhs: f64,
    /// main-term lower bound with correction constant `c_eta`
    pub rhs: f64,
    /// b₀ entering the bound
    pub b0: f64,
}

/// Enumerate the pairing sum of the Frobenius–Schur lemma on synthetic
/// ordinate data and compare with its stated lower bound.
///
/// For `Unitary`, `gamma_pos` is the multiset Γ₂(ψ) ∪ Γ₂(ψ̄) of generic
/// positive ordinates (no shared ±γ zeros) and the bound main term is
/// ℓ!·b₀^ℓ with b₀ = Σ m·|η̂(γ/2π)|². For `RealType`, `gamma_pos` holds the
/// positive ordinates of ψ and the main term is 2^{−ℓ}ℓ!·b₀^ℓ with
/// b₀ = 2Σ m·|η̂(γ/2π)|². The unknown O_η constant is `c_eta`, echoed into
/// the correction; with `c_eta = 0` only the main term is kept.
pub fn pairing_sum_check(
    gamma_pos: &[(f64, u32)],
    eta: &WeightEta,
    ell: u32,
    case: SchurCase,
    c_eta: f64,
) -> Result<PairingCheck> {
    let two_pi = 2.0 * std::f64::consts::PI;
    let entries: Vec<(f64, u32, Complex64)> = gamma_pos
        .iter()
        .map(|&(g, m)| (g, m, Complex64::new(eta.hat(g / two_pi), 0.0)))
        .collect();
    let gm = GammaMultiset::new(entries)?;
    let s = s2l_bruteforce(&gm, ell)?;
    if s.im.abs() > 1e-12 {
        return Err(Error::Parse(format!("pairing sum has imaginary residue {:e}", s.im)));
    }
    let sum_a2 = gm.sum_a2();
    let lf: f64 = (1..=ell).map(|k| k as f64).product();
    let (b0, scale) = match case {
        SchurCase::Unitary => (sum_a2, 1.0),
        SchurCase::RealType => (2.0 * sum_a2, 0.5f64.powi(ell as i32)),
    };
    let corr = c_eta * lf * lf * (ell * (ell - 1).max(0)) as f64 * b0.powi(ell as i32 - 1);
    let rhs = (scale * (lf * b0.powi(ell as i32) - corr)).max(0.0);
    Ok(PairingCheck { lhs: s.re, rhs, b0 })
}
