//! Low-lying zeros of Dirichlet L-functions and the convergent sums over
//! them: b(χ;h), b₀, the variance ν, w₄, and the zero-count window.
//!
//! Zeros are located by bisection on the rotated real completed function
//! (see [`lfn`]) and the list is certified complete against the smooth
//! zero-count main term. Sums use compensated accumulation in ascending-γ
//! order, and every truncated sum carries a tail bound obtained by
//! integrating the test function against the zero-density main term.
//!
//! A [`ZeroSet`] stores the positive ordinates of one character. Sums
//! "over ±γ pairs" double each positive ordinate; for a non-self-dual χ
//! this equals the contribution of the conjugate pair {χ, χ̄} split evenly,
//! so totals over conjugate-closed character sets are exact.

pub mod lfn;

use std::fmt::Write as _;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kahan::KahanSum;
use crate::weights::{eta_to_h, TestFunctionH, WeightEta};
pub use lfn::{hurwitz_zeta, PrimitiveChar};

/// Engineering envelope for the completeness certification: the counted
/// zeros on both signs must match the smooth main term within this bound
/// (the true fluctuation 2S(T) stays well inside it at desk heights).
pub const CERT_ENVELOPE: f64 = 1.25;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroSource {
    Computed,
    Ingested,
}

/// Positive critical-line ordinates of one L-function.
#[derive(Debug, Clone)]
pub struct ZeroSet {
    pub label: String,
    /// (γ, multiplicity), γ > 0 strictly increasing
    pub ordinates: Vec<(f64, u32)>,
    pub self_dual: bool,
    /// ord_{s=1/2} L(s, χ); defaults to 0 (GRH-consistent, true on all
    /// desk instances)
    pub central_order: u32,
    /// T up to which the list is certified complete
    pub height_max: f64,
    pub source: ZeroSource,
}

impl ZeroSet {
    pub fn empty(label: &str, self_dual: bool) -> Self {
        Self {
            label: label.into(),
            ordinates: Vec::new(),
            self_dual,
            central_order: 0,
            height_max: 0.0,
            source: ZeroSource::Ingested,
        }
    }

    /// Structural invariants; returns human-readable violations.
    pub fn check(&self) -> Vec<String> {
        let mut warnings = Vec::new();
        for w in self.ordinates.windows(2) {
            if w[1].0 <= w[0].0 {
                warnings.push(format!(
                    "{}: ordinates not strictly increasing at {}",
                    self.label, w[1].0
                ));
            }
        }
        for &(g, m) in &self.ordinates {
            if g <= 0.0 {
                warnings.push(format!("{}: non-positive ordinate {g}", self.label));
            }
            if g > self.height_max + 1e-9 {
                warnings.push(format!(
                    "{}: ordinate {g} above certified height {}",
                    self.label, self.height_max
                ));
            }
            if m == 0 {
                warnings.push(format!("{}: zero multiplicity at {g}", self.label));
            }
        }
        warnings
    }

    /// Zeros counted with multiplicity in (lo, hi], positive side.
    pub fn count_in(&self, lo: f64, hi: f64) -> u64 {
        self.ordinates
            .iter()
            .filter(|&&(g, _)| g > lo && g <= hi)
            .map(|&(_, m)| m as u64)
            .sum()
    }
}

/// Locate all zeros of L(s, χ) with 0 < γ ≤ `t_max` for character `chi`
/// mod `q` (reduced to its primitive inducing character). Sign changes of
/// the rotated completed function on a grid of the given step are refined
/// by bisection to `precision`; completeness is certified against the
/// smooth count main term within [`CERT_ENVELOPE`], retrying with a finer
/// grid up to three times.
pub fn find_dirichlet_zeros(
    q: u64,
    chi: usize,
    t_max: f64,
    grid_step: f64,
    precision: f64,
) -> Result<ZeroSet> {
    let pc = PrimitiveChar::from_dirichlet(q, chi)?;
    let mut step = grid_step;
    for _attempt in 0..4 {
        let positive = scan_zeros(&pc, 0.0, t_max, step, precision)?;
        let counted_both = if pc.self_dual {
            2 * positive.len()
        } else {
            let negative = scan_zeros(&pc, -t_max, 0.0, step, precision)?;
            positive.len() + negative.len()
        };
        let main = pc.count_main(t_max);
        if (counted_both as f64 - main).abs() <= CERT_ENVELOPE {
            return Ok(ZeroSet {
                label: pc.label.clone(),
                ordinates: positive.into_iter().map(|g| (g, 1)).collect(),
                self_dual: pc.self_dual,
                central_order: 0,
                height_max: t_max,
                source: ZeroSource::Computed,
            });
        }
        step /= 2.0;
    }
    let positive = scan_zeros(&pc, 0.0, t_max, step, precision)?;
    Err(Error::CompletenessCheck {
        counted: 2 * positive.len(),
        main: pc.count_main(t_max),
        label: pc.label,
    })
}

/// Sign-change scan of Z on (lo, hi]: disjoint grid-aligned subintervals
/// are scanned in parallel and merged in interval order, so the result is
/// identical for any thread count. Returns bisected ordinates (absolute
/// values for the negative side, ascending).
fn scan_zeros(
    pc: &PrimitiveChar,
    lo: f64,
    hi: f64,
    step: f64,
    precision: f64,
) -> Result<Vec<f64>> {
    use rayon::prelude::*;

    let n = ((hi - lo) / step).ceil() as usize;
    // chunks share their boundary grid point, so every consecutive pair of
    // nodes is examined by exactly one chunk
    const CHUNK: usize = 512;
    let starts: Vec<usize> = (0..n).step_by(CHUNK).collect();
    let pieces: Vec<Result<Vec<f64>>> = starts
        .par_iter()
        .map(|&a| scan_zeros_chunk(pc, lo, hi, step, precision, a, (a + CHUNK).min(n)))
        .collect();
    let mut zeros = Vec::new();
    for piece in pieces {
        zeros.extend(piece?);
    }
    zeros.sort_by(|x, y| x.partial_cmp(y).unwrap());
    Ok(zeros)
}

/// One grid-aligned subinterval of the sign-change scan: node pairs
/// (i-1, i) for i in (a, b].
fn scan_zeros_chunk(
    pc: &PrimitiveChar,
    lo: f64,
    hi: f64,
    step: f64,
    precision: f64,
    a: usize,
    b: usize,
) -> Result<Vec<f64>> {
    let mut zeros = Vec::new();
    let n = b;
    let eps = 1e-6; // keep off t = 0 where the trivial character pole sits
    let point = |i: usize| -> f64 {
        let t = lo + i as f64 * step;
        if t.abs() < eps {
            if lo < 0.0 && t <= 0.0 {
                -eps
            } else {
                eps
            }
        } else {
            t.min(hi)
        }
    };
    let mut prev_t = point(a);
    let mut prev_z = pc.z(prev_t);
    for i in (a + 1)..=n {
        let t = point(i);
        if t <= prev_t {
            continue;
        }
        let z = pc.z(t);
        if prev_z == 0.0 {
            zeros.push(prev_t.abs());
        } else if z != 0.0 && prev_z.signum() != z.signum() {
            let (mut a, mut b) = (prev_t, t);
            let mut fa = prev_z;
            for _ in 0..200 {
                if b - a <= precision {
                    break;
                }
                let m = 0.5 * (a + b);
                let fm = pc.z(m);
                if fm == 0.0 {
                    a = m;
                    b = m;
                    break;
                }
                if fa.signum() != fm.signum() {
                    b = m;
                } else {
                    a = m;
                    fa = fm;
                }
            }
            if b - a > precision {
                return Err(Error::PrecisionNotReached(precision));
            }
            zeros.push((0.5 * (a + b)).abs());
        }
        prev_t = t;
        prev_z = z;
    }
    zeros.sort_by(|x, y| x.partial_cmp(y).unwrap());
    Ok(zeros)
}

/// Zero-density parameters for tail bounds and count main terms:
/// the density of zeros at height t is ≈ (1/π)(log A + χ(1)[K:ℚ]·log(t/2π)).
#[derive(Debug, Clone, Copy)]
pub struct DensityParams {
    pub log_a: f64,
    /// χ(1)·[K:ℚ]
    pub chi1_degk: f64,
}

impl DensityParams {
    pub fn zeta() -> Self {
        Self { log_a: 0.0, chi1_degk: 1.0 }
    }

    /// Zero-density main term at height t.
    pub fn density_at(&self, t: f64) -> f64 {
        self.density(t)
    }

    fn density(&self, t: f64) -> f64 {
        (self.log_a + self.chi1_degk * (t / (2.0 * std::f64::consts::PI)).ln().max(0.0))
            / std::f64::consts::PI
    }
}

/// A truncated zero sum with its tail bound.
#[derive(Debug, Clone, Copy)]
pub struct BSum {
    pub value: f64,
    pub tail_bound: f64,
}

/// b(χ;h) truncated at the certified height: Σ over ±γ pairs of
/// mult·h(γ/2π), plus central_order·h(0) when `include_central` (b₀ is
/// the same sum without the central term). The tail bound integrates h
/// against the density main term above `height_max` and errors out if it
/// exceeds `tail_tol`.
pub fn b_sum(
    zs: &ZeroSet,
    h: &TestFunctionH,
    include_central: bool,
    dens: &DensityParams,
    tail_tol: f64,
) -> Result<BSum> {
    let mut acc = KahanSum::new();
    for &(g, m) in &zs.ordinates {
        acc.add(2.0 * m as f64 * h.eval(g / (2.0 * std::f64::consts::PI)));
    }
    if include_central {
        acc.add(zs.central_order as f64 * h.h0);
    }
    let tail = tail_bound(zs.height_max, h, dens);
    if tail > tail_tol {
        return Err(Error::TailBound { bound: tail, tol: tail_tol });
    }
    Ok(BSum { value: acc.value(), tail_bound: tail })
}

/// ∫_T^∞ h(t/2π)·density(t) dt on doubling windows until the increment is
/// negligible.
fn tail_bound(t_from: f64, h: &TestFunctionH, dens: &DensityParams) -> f64 {
    let t0 = t_from.max(1.0);
    let mut total = 0.0;
    let mut lo = t0;
    for _ in 0..24 {
        let hi = lo * 2.0;
        let piece = crate::quad::adaptive_simpson(
            |t| h.eval(t / (2.0 * std::f64::consts::PI)) * dens.density(t),
            lo,
            hi,
            1e-14,
        )
        .value;
        total += piece;
        if piece.abs() < 1e-18 * (1.0 + total.abs()) {
            break;
        }
        lo = hi;
    }
    total
}

/// One character's slice of a variance computation.
#[derive(Debug, Clone)]
pub struct CharZeroData<'a> {
    /// t̂⁺(χ)
    pub coeff: Complex64,
    pub zeros: &'a ZeroSet,
    pub density: DensityParams,
}

/// ν = Σ_χ |t̂⁺(χ)|²·b₀(χ; |η̂|²), with accumulated tail bars.
pub fn variance_nu(data: &[CharZeroData], eta: &WeightEta) -> Result<(f64, f64)> {
    let h = eta_to_h(eta)?;
    let mut value = KahanSum::new();
    let mut bar = 0.0;
    for d in data {
        let w = d.coeff.norm_sqr();
        if w == 0.0 {
            continue;
        }
        let b = b_sum(d.zeros, &h, false, &d.density, f64::INFINITY)?;
        value.add(w * b.value);
        bar += w * b.tail_bound;
    }
    Ok((value.value(), bar))
}

/// w₄ = Σ|t̂⁺(χ)|⁴·b₀ / (Σ|t̂⁺(χ)|²·b₀)².
pub fn w4(data: &[CharZeroData], eta: &WeightEta) -> Result<f64> {
    let h = eta_to_h(eta)?;
    let mut num = KahanSum::new();
    let mut den = KahanSum::new();
    for d in data {
        let w = d.coeff.norm_sqr();
        if w == 0.0 {
            continue;
        }
        let b = b_sum(d.zeros, &h, false, &d.density, f64::INFINITY)?.value;
        num.add(w * w * b);
        den.add(w * b);
    }
    if den.value() <= 0.0 {
        return Err(Error::ZeroVariance);
    }
    Ok(num.value() / den.value().powi(2))
}

/// Lemma-style short-window count: zeros (both signs, with multiplicity)
/// in (T, T+ε], the main term (ε/π)·log(A·((T+ε)/2πe)^{χ(1)[K:ℚ]}), and
/// the discrepancy.
pub fn zero_count_window(
    zs: &ZeroSet,
    t: f64,
    eps: f64,
    dens: &DensityParams,
) -> Result<(u64, f64, f64)> {
    if !(eps > 0.0 && eps <= 1.0) {
        return Err(Error::Parse(format!("window width {eps} not in (0, 1]")));
    }
    if t + eps > zs.height_max + 1e-9 {
        return Err(Error::WindowBeyondHeight(zs.height_max));
    }
    let counted = 2 * zs.count_in(t, t + eps);
    let main = eps / std::f64::consts::PI
        * (dens.log_a
            + dens.chi1_degk
                * ((t + eps) / (2.0 * std::f64::consts::PI * std::f64::consts::E)).ln());
    Ok((counted, main, counted as f64 - main))
}

// ---------------------------------------------------------------------------
// file format
// ---------------------------------------------------------------------------

/// `zeros <label> selfdual=<0|1> central=<k> height=<T>` then `γ mult`
/// lines; `#` comments.
pub fn write_zeroset(zs: &ZeroSet) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "zeros {} selfdual={} central={} height={}",
        zs.label,
        if zs.self_dual { 1 } else { 0 },
        zs.central_order,
        zs.height_max
    )
    .unwrap();
    for &(g, m) in &zs.ordinates {
        writeln!(s, "{g} {m}").unwrap();
    }
    s
}

/// Parse a zero file; invariant violations are returned as warnings, not
/// errors (external lists may be truncated).
pub fn ingest_zeros(text: &str) -> Result<(ZeroSet, Vec<String>)> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::Parse("empty zero file".into()))?;
    let words: Vec<&str> = header.split_whitespace().collect();
    if words.len() != 5 || words[0] != "zeros" {
        return Err(Error::Parse(format!("bad zeros header: {header}")));
    }
    let label = words[1].to_string();
    let field = |w: &str, key: &str| -> Result<f64> {
        w.strip_prefix(&format!("{key}="))
            .ok_or_else(|| Error::Parse(format!("expected {key}=..., got {w}")))?
            .parse::<f64>()
            .map_err(|e| Error::Parse(format!("bad {key}: {e}")))
    };
    let self_dual = field(words[2], "selfdual")? != 0.0;
    let central_order = field(words[3], "central")? as u32;
    let height_max = field(words[4], "height")?;
    let mut ordinates = Vec::new();
    for line in lines {
        let mut it = line.split_whitespace();
        let g: f64 = it
            .next()
            .unwrap()
            .parse()
            .map_err(|e| Error::Parse(format!("bad ordinate: {e}")))?;
        let m: u32 = it
            .next()
            .map(|w| w.parse())
            .transpose()
            .map_err(|e| Error::Parse(format!("bad multiplicity: {e}")))?
            .unwrap_or(1);
        ordinates.push((g, m));
    }
    let zs = ZeroSet {
        label,
        ordinates,
        self_dual,
        central_order,
        height_max,
        source: ZeroSource::Ingested,
    };
    let warnings = zs.check();
    Ok((zs, warnings))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::builtin_eta;
    use approx::assert_relative_eq;

    fn gaussian_h() -> TestFunctionH {
        eta_to_h(&builtin_eta("gaussian").unwrap()).unwrap()
    }

    #[test]
    fn zeta_first_zero_and_count() {
        let zs = find_dirichlet_zeros(1, 0, 50.0, 0.25, 1e-8).unwrap();
        assert!(zs.self_dual);
        assert_relative_eq!(zs.ordinates[0].0, 14.134725141734693, epsilon = 1e-6);
        assert_eq!(zs.ordinates.len(), 10); // ordinates below 50
        // next few: 21.0220, 25.0109, 30.4249
        assert_relative_eq!(zs.ordinates[1].0, 21.022039638771556, epsilon = 1e-6);
        assert_relative_eq!(zs.ordinates[2].0, 25.010857580145688, epsilon = 1e-6);
        assert!(zs.check().is_empty());
    }

    #[test]
    fn q4_odd_character_first_zero() {
        let zs = find_dirichlet_zeros(4, 1, 30.0, 0.25, 1e-8).unwrap();
        assert!(zs.self_dual);
        assert_relative_eq!(zs.ordinates[0].0, 6.0209, epsilon = 1e-4);
    }

    #[test]
    fn q5_complex_character_pair() {
        // a non-self-dual character mod 5: zeros of chi and conj(chi) are
        // mirror images; both finders certify
        let dg = crate::dirichlet::DirichletGroup::new(5).unwrap();
        let chi = (1..4)
            .find(|&c| dg.conjugate(c) != c)
            .expect("complex character mod 5");
        let cj = dg.conjugate(chi);
        let zs = find_dirichlet_zeros(5, chi, 30.0, 0.25, 1e-8).unwrap();
        let zsc = find_dirichlet_zeros(5, cj, 30.0, 0.25, 1e-8).unwrap();
        assert!(!zs.self_dual);
        // the union over the pair matches the combined main term closely
        let pc = PrimitiveChar::from_dirichlet(5, chi).unwrap();
        let both = (zs.ordinates.len() + zsc.ordinates.len()) as f64;
        assert!((both - 2.0 * pc.count_main(30.0) / 2.0 * 2.0 / 2.0).abs() <= 2.0);
    }

    #[test]
    fn b_sum_basics() {
        let h = gaussian_h();
        let dens = DensityParams::zeta();
        let empty = ZeroSet::empty("x", true);
        let b = b_sum(&empty, &h, true, &dens, 1e-6).unwrap();
        assert_eq!(b.value, 0.0);
        // single pair at gamma0 with mult 1 -> 2 h(gamma0 / 2pi)
        let one = ZeroSet {
            label: "x".into(),
            ordinates: vec![(10.0, 1)],
            self_dual: true,
            central_order: 0,
            height_max: 40.0,
            source: ZeroSource::Ingested,
        };
        let b = b_sum(&one, &h, false, &dens, 1e-6).unwrap();
        assert_relative_eq!(
            b.value,
            2.0 * h.eval(10.0 / (2.0 * std::f64::consts::PI)),
            epsilon = 1e-14
        );
        // central term toggles b vs b0
        let mut with_central = one.clone();
        with_central.central_order = 2;
        let b1 = b_sum(&with_central, &h, true, &dens, 1e-6).unwrap();
        assert_relative_eq!(b1.value, b.value + 2.0 * h.h0, epsilon = 1e-12);
    }

    #[test]
    fn b_sum_zeta_is_positive_finite() {
        let zs = find_dirichlet_zeros(1, 0, 60.0, 0.25, 1e-8).unwrap();
        let h = gaussian_h();
        let b = b_sum(&zs, &h, false, &DensityParams::zeta(), 1e-6).unwrap();
        assert!(b.value > 0.0 && b.value.is_finite());
        assert!(b.tail_bound < 1e-10, "tail {}", b.tail_bound);
    }

    #[test]
    fn variance_and_w4_single_character() {
        let zs = find_dirichlet_zeros(4, 1, 40.0, 0.25, 1e-8).unwrap();
        let eta = builtin_eta("gaussian").unwrap();
        let dens = DensityParams { log_a: 4f64.ln(), chi1_degk: 1.0 };
        let data = [CharZeroData {
            coeff: Complex64::new(1.0, 0.0),
            zeros: &zs,
            density: dens,
        }];
        let h = gaussian_h();
        let b0 = b_sum(&zs, &h, false, &dens, 1e-6).unwrap().value;
        let (nu, _) = variance_nu(&data, &eta).unwrap();
        assert_relative_eq!(nu, b0, epsilon = 1e-12);
        let w = w4(&data, &eta).unwrap();
        assert_relative_eq!(w, 1.0 / b0, epsilon = 1e-12);
        // homogeneity: numerator degree 4, squared denominator degree 4,
        // so scaling every coefficient by c leaves w4 invariant
        let data2 = [CharZeroData {
            coeff: Complex64::new(3.0, 0.0),
            zeros: &zs,
            density: dens,
        }];
        let w2 = w4(&data2, &eta).unwrap();
        assert_relative_eq!(w2, w, epsilon = 1e-12);
        // zero coefficients -> zero variance error
        let none = [CharZeroData {
            coeff: Complex64::default(),
            zeros: &zs,
            density: dens,
        }];
        assert!(matches!(w4(&none, &eta), Err(Error::ZeroVariance)));
    }

    #[test]
    fn window_counts() {
        let zs = find_dirichlet_zeros(1, 0, 50.0, 0.25, 1e-8).unwrap();
        let dens = DensityParams::zeta();
        let (c, _, _) = zero_count_window(&zs, 14.0, 0.5, &dens).unwrap();
        assert_eq!(c, 2); // the pair +-14.1347
        let (c, _, _) = zero_count_window(&zs, 2.0, 1.0, &dens).unwrap();
        assert_eq!(c, 0);
        // main term at A=1, chi(1)=1, K=Q, T=30, eps=1
        let (_, main, _) = zero_count_window(&zs, 30.0, 1.0, &dens).unwrap();
        let expect = (31.0 / (2.0 * std::f64::consts::PI * std::f64::consts::E)).ln()
            / std::f64::consts::PI;
        assert_relative_eq!(main, expect, epsilon = 1e-12);
        assert!(zero_count_window(&zs, 49.5, 1.0, &dens).is_err());
        assert!(zero_count_window(&zs, 10.0, 1.5, &dens).is_err());
    }

    #[test]
    fn zero_file_round_trip() {
        let zs = find_dirichlet_zeros(4, 1, 30.0, 0.25, 1e-8).unwrap();
        let text = write_zeroset(&zs);
        let (parsed, warnings) = ingest_zeros(&text).unwrap();
        assert!(warnings.is_empty());
        assert_eq!(parsed.source, ZeroSource::Ingested);
        assert_eq!(text, write_zeroset(&parsed));
        // empty list is valid
        let (empty, w) = ingest_zeros("zeros x selfdual=1 central=0 height=0\n").unwrap();
        assert!(empty.ordinates.is_empty() && w.is_empty());
        assert!(ingest_zeros("garbage").is_err());
        // out-of-order ordinates produce warnings, not errors
        let (_, w) =
            ingest_zeros("zeros x selfdual=1 central=0 height=50\n20 1\n14 1\n").unwrap();
        assert!(!w.is_empty());
    }
}
