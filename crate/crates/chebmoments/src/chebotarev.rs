//! Frobenius oracles for explicit extensions, the weighted prime sum ψ_η,
//! the unweighted ψ, the explicit-formula cross-check, and the induction
//! identity.
//!
//! ψ_η(x; L/K, t) = Σ_{𝔭, m ≥ 1} t(φ_𝔭^m) · log N𝔭 · N𝔭^{−m/2} ·
//! η(log(N𝔭^m / x)), truncated to the effective support of η. Ramified
//! primes are excluded (the Frobenius is only defined up to inertia
//! there); their bounded omitted mass is reported as an error bar.
//! Summation runs over primes in ascending order with compensated
//! accumulation, so results are bit-stable.

use std::collections::HashMap;
use std::sync::Arc;

use num_complex::Complex64;

use crate::dirichlet::DirichletGroup;
use crate::error::{Error, Result};
use crate::groups::classfn::ClassFunction;
use crate::groups::io::group_from_header;
use crate::groups::table::pow_mod;
use crate::groups::FiniteGroup;
use crate::kahan::{KahanComplex, KahanSum};
use crate::sieve::PrimeTable;
use crate::special::digamma;
use crate::weights::{WeightEta, SUPPORT_TOL};
use crate::zeros::{DensityParams, ZeroSet};

/// The Frobenius datum at a rational prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Frob {
    Class(usize),
    Ramified,
    /// file-backed oracle with no entry for this prime
    Unknown,
}

/// One prime ideal above a rational prime: its absolute norm, the class of
/// its Frobenius, and how many ideals share this datum.
#[derive(Debug, Clone, Copy)]
pub struct IdealTerm {
    pub norm: u64,
    pub class: usize,
    pub count: u32,
}

#[derive(Debug, Clone)]
enum OracleKind {
    /// L = K = ℚ
    Trivial,
    Cyclotomic(DirichletGroup),
    /// the Kronecker character of the fundamental discriminant
    Quadratic { disc: i64 },
    Kummer { a: u64, p: u64 },
    /// ℚ(ζ₈)/ℚ(i): prime ideals of ℤ[i], Gal ≅ {1, 5} ⊂ (ℤ/8)^*
    Cyclo8OverGaussian,
    File { map: HashMap<u64, usize> },
}

/// Splitting data for built-in extensions.
#[derive(Debug, Clone)]
pub struct FrobeniusOracle {
    pub group: Arc<FiniteGroup>,
    pub ramified: Vec<u64>,
    kind: OracleKind,
}

impl FrobeniusOracle {
    /// The trivial extension ℚ/ℚ.
    pub fn trivial() -> Result<Self> {
        Ok(Self {
            group: FiniteGroup::cyclic(1)?,
            ramified: Vec::new(),
            kind: OracleKind::Trivial,
        })
    }

    /// ℚ(ζ_q)/ℚ: the Frobenius at ℓ ∤ q is ℓ mod q.
    pub fn cyclotomic(q: u64) -> Result<Self> {
        let dg = DirichletGroup::new(q)?;
        let group = dg.group()?;
        let mut ramified = Vec::new();
        let mut m = q;
        let mut p = 2;
        while m > 1 {
            if m % p == 0 {
                let mut e = 0;
                while m % p == 0 {
                    m /= p;
                    e += 1;
                }
                // nontrivial inertia: odd p | q, or p = 2 with 4 | q
                if p != 2 || e >= 2 {
                    ramified.push(p);
                }
            }
            p += 1;
        }
        Ok(Self { group, ramified, kind: OracleKind::Cyclotomic(dg) })
    }

    /// ℚ(√d)/ℚ for squarefree d: the Frobenius is the Kronecker symbol of
    /// the fundamental discriminant.
    pub fn quadratic(d: i64) -> Result<Self> {
        if d == 0 || d == 1 {
            return Err(Error::Parse("quadratic oracle needs squarefree d != 0, 1".into()));
        }
        let disc = if d.rem_euclid(4) == 1 { d } else { 4 * d };
        let mut ramified: Vec<u64> = Vec::new();
        let mut m = disc.unsigned_abs();
        let mut p = 2;
        while m > 1 {
            if m % p == 0 {
                while m % p == 0 {
                    m /= p;
                }
                ramified.push(p);
            }
            p += 1;
        }
        Ok(Self {
            group: FiniteGroup::cyclic(2)?,
            ramified,
            kind: OracleKind::Quadratic { disc },
        })
    }

    /// K_{a,p} = ℚ(ζ_p, a^{1/p}) with Gal ≅ Aff(𝔽_p); classes are
    /// indexed [identity, U, T_2, …, T_{p−1}].
    pub fn kummer(a: u64, p: u64) -> Result<Self> {
        if a < 2 || a == p {
            return Err(Error::Parse("kummer oracle needs a prime a != p".into()));
        }
        Ok(Self {
            group: FiniteGroup::affine(p)?,
            ramified: vec![p.min(a), p.max(a)],
            kind: OracleKind::Kummer { a, p },
        })
    }

    /// The relative extension ℚ(ζ₈)/ℚ(i): the base field has prime ideals
    /// of norm ℓ (two, split) for ℓ ≡ 1 mod 4 and of norm ℓ² (inert)
    /// otherwise; Gal ≅ {1, 5} ⊂ (ℤ/8)^*, modeled as the cyclic group of
    /// order 2 with the nonidentity class corresponding to residue 5.
    pub fn cyclo8_over_gaussian() -> Result<Self> {
        Ok(Self {
            group: FiniteGroup::cyclic(2)?,
            ramified: vec![2],
            kind: OracleKind::Cyclo8OverGaussian,
        })
    }

    /// Parse `oracle <group kind words> ramified p1 p2 ...` followed by
    /// `ℓ classid` lines.
    pub fn from_file(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Parse("empty oracle file".into()))?;
        let words: Vec<&str> = header.split_whitespace().collect();
        if words.first() != Some(&"oracle") {
            return Err(Error::Parse("expected 'oracle' header".into()));
        }
        let ram_pos = words
            .iter()
            .position(|&w| w == "ramified")
            .ok_or_else(|| Error::Parse("missing 'ramified' keyword".into()))?;
        let group = group_from_header(&words[1..ram_pos])?;
        let ramified: Result<Vec<u64>> = words[ram_pos + 1..]
            .iter()
            .map(|w| w.parse::<u64>().map_err(|_| Error::Parse("bad ramified prime".into())))
            .collect();
        let mut map = HashMap::new();
        for line in lines {
            let mut it = line.split_whitespace();
            let l: u64 = it
                .next()
                .unwrap()
                .parse()
                .map_err(|_| Error::Parse("bad prime in oracle file".into()))?;
            let c: usize = it
                .next()
                .ok_or_else(|| Error::Parse("missing class id".into()))?
                .parse()
                .map_err(|_| Error::Parse("bad class id".into()))?;
            if c >= group.class_count() {
                return Err(Error::Parse(format!("class id {c} out of range")));
            }
            map.insert(l, c);
        }
        Ok(Self { group, ramified: ramified?, kind: OracleKind::File { map } })
    }

    /// Conjugacy class of the Frobenius at an unramified rational prime
    /// (for K = ℚ oracles; the relative oracle answers per ideal via
    /// [`ideals_above`](Self::ideals_above)).
    pub fn frobenius(&self, l: u64) -> Frob {
        if self.ramified.contains(&l) {
            return Frob::Ramified;
        }
        match &self.kind {
            OracleKind::Trivial => Frob::Class(0),
            OracleKind::Cyclotomic(dg) => match dg.class_of_residue(l) {
                Some(c) => Frob::Class(c),
                None => Frob::Ramified,
            },
            OracleKind::Quadratic { disc } => {
                if kronecker(*disc, l) == 1 {
                    Frob::Class(0)
                } else {
                    Frob::Class(1)
                }
            }
            OracleKind::Kummer { a, p } => {
                if l % p == 1 {
                    if pow_mod(a % l, (l - 1) / p, l) == 1 {
                        Frob::Class(0) // identity: a is a p-th power mod l
                    } else {
                        Frob::Class(1) // class U
                    }
                } else {
                    Frob::Class((l % p) as usize) // class T_{l mod p}
                }
            }
            OracleKind::Cyclo8OverGaussian => {
                // class of l mod 8 within {1, 5}; only meaningful per ideal
                if l % 8 == 1 {
                    Frob::Class(0)
                } else {
                    Frob::Class(1)
                }
            }
            OracleKind::File { map } => match map.get(&l) {
                Some(&c) => Frob::Class(c),
                None => Frob::Unknown,
            },
        }
    }

    /// Prime ideals of O_K above the rational prime ℓ with their Frobenius
    /// classes (None when ℓ is ramified).
    pub fn ideals_above(&self, l: u64) -> Result<Option<Vec<IdealTerm>>> {
        match &self.kind {
            OracleKind::Cyclo8OverGaussian => {
                if l == 2 {
                    return Ok(None);
                }
                if l % 4 == 1 {
                    // split in ℤ[i]: two ideals of norm l; Frobenius is
                    // l mod 8 ∈ {1, 5}
                    let class = if l % 8 == 1 { 0 } else { 1 };
                    Ok(Some(vec![IdealTerm { norm: l, class, count: 2 }]))
                } else {
                    // inert: one ideal of norm l²; l² ≡ 1 mod 8
                    Ok(Some(vec![IdealTerm { norm: l * l, class: 0, count: 1 }]))
                }
            }
            _ => match self.frobenius(l) {
                Frob::Ramified => Ok(None),
                Frob::Class(c) => Ok(Some(vec![IdealTerm { norm: l, class: c, count: 1 }])),
                Frob::Unknown => Err(Error::Parse(format!(
                    "file-backed oracle has no entry for prime {l}"
                ))),
            },
        }
    }
}

/// Kronecker symbol (D/l) for prime l and fundamental discriminant D.
fn kronecker(d: i64, l: u64) -> i64 {
    if l == 2 {
        return match d.rem_euclid(8) {
            1 | 7 => 1,
            3 | 5 => -1,
            _ => 0,
        };
    }
    let r = d.rem_euclid(l as i64) as u64;
    if r == 0 {
        return 0;
    }
    // Euler's criterion
    if pow_mod(r, (l - 1) / 2, l) == 1 {
        1
    } else {
        -1
    }
}

/// A computed ψ value with its declared error bar.
#[derive(Debug, Clone, Copy)]
pub struct PsiResult {
    pub value: Complex64,
    /// bound on the omitted ramified-prime mass plus the truncation tail
    pub bar: f64,
}

impl PsiResult {
    pub fn real(&self) -> f64 {
        self.value.re
    }
}

/// ψ_η(x; L/K, t) truncated to N𝔭^m ∈ [x·e^{−R}, x·e^{R}] with R the
/// effective support radius of η at `tol`. Works for any x > 0 (the
/// explicit formula pairs x with 1/x).
pub fn psi_eta(
    x: f64,
    oracle: &FrobeniusOracle,
    t: &ClassFunction,
    eta: &WeightEta,
    tol: f64,
    table: &PrimeTable,
) -> Result<PsiResult> {
    if !(x > 0.0) {
        return Err(Error::Parse(format!("psi_eta needs x > 0, got {x}")));
    }
    let r = eta.support_radius(tol);
    let lo = (x * (-r).exp()).max(2.0);
    let hi = x * r.exp();
    if hi < 2.0 {
        return Ok(PsiResult { value: Complex64::default(), bar: 0.0 });
    }
    let hi_u = hi.floor() as u64;
    if hi_u > table.limit() {
        return Err(Error::SieveCeiling { needed: hi_u, ceiling: table.limit() });
    }
    let group = &t.table.group;
    let mut acc = KahanComplex::new();
    let mut bar = 0.0f64;
    let t_max = t.values.iter().map(|v| v.norm()).fold(0.0, f64::max);
    // ramified primes: bound the omitted mass
    for &l in &oracle.ramified {
        bar += ramified_mass(l, x, r, eta, t_max);
    }
    for &l in table.range(2, hi_u) {
        let Some(ideals) = oracle.ideals_above(l)? else { continue };
        for term in ideals {
            let n = term.norm as f64;
            let log_norm = n.ln();
            let mut nm = n;
            let mut m = 1u64;
            while nm <= hi {
                if nm >= lo {
                    let cls = group.class_power(term.class, m);
                    let u = (nm / x).ln();
                    let w = term.count as f64 * log_norm * eta.eval(u) / nm.sqrt();
                    acc.add(t.values[cls] * w);
                }
                nm *= n;
                m += 1;
            }
        }
    }
    Ok(PsiResult { value: acc.value(), bar })
}

/// Bound on the ψ_η mass of one excluded ramified prime inside the window.
fn ramified_mass(l: u64, x: f64, r: f64, eta: &WeightEta, t_max: f64) -> f64 {
    let logl = (l as f64).ln();
    let mut mass = 0.0;
    let mut nm = l as f64;
    while (nm / x).ln() <= r {
        if (nm / x).ln() >= -r {
            mass += t_max * logl * eta.eval((nm / x).ln()).abs() / nm.sqrt();
        }
        nm *= l as f64;
    }
    mass
}

/// The classical unweighted ψ(x; L/K, t) = Σ_{N𝔭^m ≤ x} t(φ_𝔭^m)·log N𝔭,
/// ramified primes excluded with their mass bounded in the bar.
pub fn psi_unweighted(
    x: f64,
    oracle: &FrobeniusOracle,
    t: &ClassFunction,
    table: &PrimeTable,
) -> Result<PsiResult> {
    if x < 2.0 {
        return Ok(PsiResult { value: Complex64::default(), bar: 0.0 });
    }
    let hi_u = x.floor() as u64;
    if hi_u > table.limit() {
        return Err(Error::SieveCeiling { needed: hi_u, ceiling: table.limit() });
    }
    let group = &t.table.group;
    let mut acc = KahanComplex::new();
    let t_max = t.values.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let mut bar = 0.0;
    for &l in &oracle.ramified {
        if (l as f64) <= x {
            bar += t_max * (l as f64).ln() * (x.ln() / (l as f64).ln()).floor();
        }
    }
    for &l in table.range(2, hi_u) {
        let Some(ideals) = oracle.ideals_above(l)? else { continue };
        for term in ideals {
            let log_norm = (term.norm as f64).ln();
            let mut nm = term.norm as f64;
            let mut m = 1u64;
            while nm <= x {
                let cls = group.class_power(term.class, m);
                acc.add(t.values[cls] * (term.count as f64 * log_norm));
                nm *= term.norm as f64;
                m += 1;
            }
        }
    }
    Ok(PsiResult { value: acc.value(), bar })
}

/// The explicit-formula right-hand side for ψ_η(x;χ) + ψ_η(1/x;χ̄):
///
/// η(log x)·log A(χ) + δ_{χ=χ₀}(x^{1/2}+x^{−1/2})·ℒ_η(1/2) + G(x)
/// − Σ_ρ x^{iγ}·η̂(γ/2π),
///
/// where G(x) = (1/2π)∫(γ'_∞/γ_∞(1/2+it) + γ'_∞/γ_∞(1/2−it))·
/// η̂(t/2π)·x^{it} dt with γ_∞(s) = π^{−(s+a)/2}Γ((s+a)/2). Written this
/// way (poles of the completed function plus the exact archimedean
/// integral) the identity is exact; the returned bar carries only the
/// zero-sum truncation tail and the quadrature error.
///
/// For non-self-dual χ supply the conjugate's zero set; zeros of χ with
/// γ < 0 are the mirrors of χ̄'s positive ordinates.
pub fn explicit_formula_rhs(
    x: f64,
    zs: &ZeroSet,
    zs_conj: Option<&ZeroSet>,
    eta: &WeightEta,
    log_a: f64,
    is_trivial: bool,
    parity: u32,
) -> Result<PsiResult> {
    let lx = x.ln();
    let mut value = Complex64::new(eta.eval(lx) * log_a, 0.0);
    if is_trivial {
        value += (x.sqrt() + 1.0 / x.sqrt()) * eta.l_eta_half;
    }
    // archimedean integral: the bracket is real and even in t
    let a = parity as f64;
    let bracket = |t: f64| -> f64 {
        let z = Complex64::new((0.5 + a) / 2.0, t / 2.0);
        -std::f64::consts::PI.ln() + digamma(z).re
    };
    // integrate until eta_hat is negligible
    let mut t_int = 2.0 * std::f64::consts::PI;
    while eta.hat(t_int / (2.0 * std::f64::consts::PI)).abs() > 1e-16 && t_int < 1e4 {
        t_int *= 1.5;
    }
    let g = crate::quad::adaptive_simpson(
        |t| bracket(t) * eta.hat(t / (2.0 * std::f64::consts::PI)) * (t * lx).cos(),
        0.0,
        t_int,
        1e-12,
    );
    value += g.value / std::f64::consts::PI; // 2/(2π)·∫_0^∞
    let mut quad_bar = g.error / std::f64::consts::PI;
    // zero sum
    let two_pi = 2.0 * std::f64::consts::PI;
    match zs_conj {
        None => {
            let mut s = KahanSum::new();
            for &(gm, m) in &zs.ordinates {
                s.add(2.0 * m as f64 * (gm * lx).cos() * eta.hat(gm / two_pi));
            }
            value -= s.value();
        }
        Some(conj) => {
            let mut s = KahanComplex::new();
            for &(gm, m) in &zs.ordinates {
                let ph = gm * lx;
                s.add(Complex64::new(ph.cos(), ph.sin()) * (m as f64 * eta.hat(gm / two_pi)));
            }
            for &(gm, m) in &conj.ordinates {
                let ph = -gm * lx;
                s.add(Complex64::new(ph.cos(), ph.sin()) * (m as f64 * eta.hat(gm / two_pi)));
            }
            value -= s.value();
        }
    }
    // central zeros contribute x^0·η̂(0) each
    value -= zs.central_order as f64 * eta.eta_hat0;
    // truncation tail: |x^{iγ}| = 1 against the density main term
    let dens = DensityParams { log_a, chi1_degk: 1.0 };
    let height = match zs_conj {
        None => zs.height_max,
        Some(c) => zs.height_max.min(c.height_max),
    };
    quad_bar += zero_tail(height, eta, &dens) * if zs_conj.is_some() { 1.0 } else { 1.0 };
    Ok(PsiResult { value, bar: quad_bar + eta.constant_bar })
}

/// ∫_T^∞ |η̂(t/2π)|·density(t) dt on doubling windows.
fn zero_tail(t_from: f64, eta: &WeightEta, dens: &DensityParams) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut total = 0.0;
    let mut lo = t_from.max(1.0);
    for _ in 0..24 {
        let hi = lo * 2.0;
        let piece = crate::quad::adaptive_simpson(
            |t| {
                eta.hat(t / two_pi).abs()
                    * (dens.log_a + dens.chi1_degk * (t / two_pi).ln().max(0.0))
                    / std::f64::consts::PI
            },
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

/// Both sides of the induction identity ψ_η(x; L/K, t) = ψ_η(x; L/F, t⁺)
/// for the built-in tower L = ℚ(ζ₈), K = ℚ(i), F = ℚ, with t a class
/// function on Gal(L/K) ≅ C₂ and t⁺ its induction to (ℤ/8)^*. Returns
/// (lhs, rhs, |diff|).
pub fn induction_check(
    x: f64,
    t: &ClassFunction,
    eta: &WeightEta,
    table: &PrimeTable,
) -> Result<(Complex64, Complex64, f64)> {
    use crate::groups::induce::{induce, SubgroupEmbedding};
    use crate::groups::table::character_table;

    let sub_group = FiniteGroup::cyclic(2)?;
    if !Arc::ptr_eq(&t.table.group, &sub_group)
        && t.table.group.kind_string() != sub_group.kind_string()
    {
        return Err(Error::GroupMismatch);
    }
    // lhs over prime ideals of ℤ[i]
    let rel = FrobeniusOracle::cyclo8_over_gaussian()?;
    let lhs = psi_eta(x, &rel, t, eta, SUPPORT_TOL, table)?;
    // rhs: induce to Gal(ℚ(ζ₈)/ℚ) = (ℤ/8)^*, generator ↦ residue 5
    let dg = DirichletGroup::new(8)?;
    let amb_group = dg.group()?;
    let amb_table = character_table(&amb_group)?;
    let amb_elems = amb_group.elements()?;
    let mut class_to_elem = vec![None; amb_elems.len()];
    for e in &amb_elems {
        class_to_elem[amb_group.class_of(e)] = Some(e.clone());
    }
    let five = class_to_elem[dg.class_of_residue(5).unwrap()].clone().unwrap();
    let emb = SubgroupEmbedding::from_element_map(&t.table, &amb_table, |e| {
        // cyclic(2) elements are exponent tuples [0] and [1]
        match e {
            crate::groups::Element::Tuple(v) if v[0] == 0 => amb_group.identity(),
            _ => five.clone(),
        }
    })?;
    let t_plus = induce(t, &emb)?;
    let amb_oracle = FrobeniusOracle::cyclotomic(8)?;
    let rhs = psi_eta(x, &amb_oracle, &t_plus, eta, SUPPORT_TOL, table)?;
    let diff = (lhs.value - rhs.value).norm();
    Ok((lhs.value, rhs.value, diff))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::table::character_table;
    use crate::weights::builtin_eta;
    use crate::zeros::find_dirichlet_zeros;
    use approx::assert_relative_eq;

    fn prime_table() -> PrimeTable {
        PrimeTable::new(3_000_000)
    }

    #[test]
    fn frobenius_rules() {
        let cyc5 = FrobeniusOracle::cyclotomic(5).unwrap();
        let dg = DirichletGroup::new(5).unwrap();
        assert_eq!(cyc5.frobenius(7), Frob::Class(dg.class_of_residue(2).unwrap()));
        assert_eq!(cyc5.frobenius(5), Frob::Ramified);
        let k23 = FrobeniusOracle::kummer(2, 3).unwrap();
        // 7 ≡ 1 mod 3 and x³−2 has no root mod 7 -> class U
        assert!((1..7).all(|x| x * x * x % 7 != 2));
        assert_eq!(k23.frobenius(7), Frob::Class(1));
        // 5 ≡ 2 mod 3 -> T_2
        assert_eq!(k23.frobenius(5), Frob::Class(2));
        // 31 ≡ 1 mod 3 and 4³ = 64 ≡ 2 mod 31 -> identity
        assert_eq!(k23.frobenius(31), Frob::Class(0));
        let quad = FrobeniusOracle::quadratic(-1).unwrap();
        assert_eq!(quad.frobenius(5), Frob::Class(0)); // 5 ≡ 1 mod 4 splits
        assert_eq!(quad.frobenius(7), Frob::Class(1));
        assert_eq!(quad.frobenius(2), Frob::Ramified);
    }

    #[test]
    fn kummer_rules_match_polynomial_factorization() {
        // brute-force the factorization type of x³−a mod l
        let k = FrobeniusOracle::kummer(2, 3).unwrap();
        let table = prime_table();
        for &l in table.range(5, 200) {
            if l == 2 || l == 3 {
                continue;
            }
            let roots = (0..l).filter(|&x| pow_mod(x, 3, l) == 2 % l).count();
            let expect = match k.frobenius(l) {
                Frob::Class(0) => 3, // splits completely in the cubic field
                Frob::Class(1) => 0, // U: no roots, l ≡ 1 mod 3
                Frob::Class(_) => 1, // T_j: exactly one root
                _ => unreachable!(),
            };
            assert_eq!(roots, expect, "l={l}");
        }
    }

    #[test]
    fn psi_unweighted_classical() {
        let table = prime_table();
        let oracle = FrobeniusOracle::trivial().unwrap();
        let g = FiniteGroup::cyclic(1).unwrap();
        let ct = character_table(&g).unwrap();
        let one = ClassFunction::one(&ct);
        // ψ(100) = Σ_{p^m ≤ 100} log p
        let psi = psi_unweighted(100.0, &oracle, &one, &table).unwrap();
        let mut direct = 0.0;
        for &p in table.range(2, 100) {
            let mut pm = p;
            while pm <= 100 {
                direct += (p as f64).ln();
                pm *= p;
            }
        }
        assert_relative_eq!(psi.real(), direct, epsilon = 1e-12);
        assert_relative_eq!(direct, 94.04531122935739, epsilon = 1e-12);
        // zero class function
        let zero = one.linear_comb(
            Complex64::default(),
            &one,
            Complex64::default(),
        );
        let z = psi_unweighted(100.0, &oracle, &zero, &table).unwrap();
        assert_eq!(z.real(), 0.0);
    }

    #[test]
    fn psi_unweighted_cyclotomic4_matches_direct_loop() {
        let table = prime_table();
        let oracle = FrobeniusOracle::cyclotomic(4).unwrap();
        let ct = character_table(&oracle.group).unwrap();
        // t = |G|·1_e counts p^m ≡ 1 mod 4 with weight φ(4)·log p = 2 log p
        let t = ClassFunction::delta_e_scaled(&ct);
        let psi = psi_unweighted(1e4, &oracle, &t, &table).unwrap();
        let mut direct = 0.0;
        for &p in table.range(3, 10_000) {
            let mut pm = p;
            while pm <= 10_000 {
                if pm % 4 == 1 {
                    direct += 2.0 * (p as f64).ln();
                }
                pm *= p;
            }
        }
        assert_relative_eq!(psi.real(), direct, epsilon = 1e-10);
    }

    #[test]
    fn psi_eta_linear_in_t() {
        let table = prime_table();
        let oracle = FrobeniusOracle::cyclotomic(5).unwrap();
        let ct = character_table(&oracle.group).unwrap();
        let eta = builtin_eta("gaussian").unwrap();
        let t1 = ClassFunction::class_indicator(&ct, 1);
        let t2 = ClassFunction::class_indicator(&ct, 3);
        let comb = t1.linear_comb(
            Complex64::new(2.5, 0.0),
            &t2,
            Complex64::new(-1.25, 0.0),
        );
        let x = 500.0;
        let a = psi_eta(x, &oracle, &t1, &eta, SUPPORT_TOL, &table).unwrap();
        let b = psi_eta(x, &oracle, &t2, &eta, SUPPORT_TOL, &table).unwrap();
        let c = psi_eta(x, &oracle, &comb, &eta, SUPPORT_TOL, &table).unwrap();
        let expect = a.value * 2.5 - b.value * 1.25;
        assert!((c.value - expect).norm() < 1e-10 * (1.0 + expect.norm()));
    }

    #[test]
    fn explicit_formula_two_path_zeta() {
        let table = prime_table();
        let oracle = FrobeniusOracle::trivial().unwrap();
        let g = FiniteGroup::cyclic(1).unwrap();
        let ct = character_table(&g).unwrap();
        let one = ClassFunction::one(&ct);
        let eta = builtin_eta("gaussian").unwrap();
        let zs = find_dirichlet_zeros(1, 0, 80.0, 0.25, 1e-9).unwrap();
        for &x in &[100.0, 1000.0] {
            let lhs = psi_eta(x, &oracle, &one, &eta, SUPPORT_TOL, &table).unwrap();
            let lhs_inv = psi_eta(1.0 / x, &oracle, &one, &eta, SUPPORT_TOL, &table).unwrap();
            let rhs = explicit_formula_rhs(x, &zs, None, &eta, 0.0, true, 0).unwrap();
            let diff = (lhs.value + lhs_inv.value - rhs.value).norm();
            let budget = lhs.bar + lhs_inv.bar + rhs.bar + 1e-6;
            assert!(diff <= budget, "x={x}: diff={diff:.3e} budget={budget:.3e}");
            assert!(rhs.bar < 0.5);
        }
    }

    #[test]
    fn explicit_formula_two_path_q4() {
        let table = prime_table();
        let oracle = FrobeniusOracle::cyclotomic(4).unwrap();
        let ct = character_table(&oracle.group).unwrap();
        // the odd character mod 4 as a class function on (Z/4)^*
        let dg = DirichletGroup::new(4).unwrap();
        let chi = (0..2).find(|&c| !dg.is_trivial(c)).unwrap();
        let t = ClassFunction::irreducible(&ct, chi);
        let eta = builtin_eta("gaussian").unwrap();
        let zs = find_dirichlet_zeros(4, chi, 60.0, 0.25, 1e-9).unwrap();
        for &x in &[100.0, 500.0] {
            let lhs = psi_eta(x, &oracle, &t, &eta, SUPPORT_TOL, &table).unwrap();
            let lhs_inv = psi_eta(1.0 / x, &oracle, &t, &eta, SUPPORT_TOL, &table).unwrap();
            let rhs = explicit_formula_rhs(x, &zs, None, &eta, 4f64.ln(), false, 1).unwrap();
            let diff = (lhs.value + lhs_inv.value - rhs.value).norm();
            let budget = lhs.bar + lhs_inv.bar + rhs.bar + 1e-6;
            assert!(diff <= budget, "x={x}: diff={diff:.3e} budget={budget:.3e}");
        }
    }

    #[test]
    fn induction_identity_tower() {
        // the Gaussian window around x = 1e4 reaches up to x·e^R ≈ 1.7e7
        let table = PrimeTable::new(17_000_000);
        let sub = FiniteGroup::cyclic(2).unwrap();
        let ct = character_table(&sub).unwrap();
        let eta = builtin_eta("gaussian").unwrap();
        let t = ClassFunction::class_indicator(&ct, 0); // 1_e on Gal(L/K)
        let (lhs, rhs, diff) = induction_check(1e4, &t, &eta, &table).unwrap();
        assert!(
            diff <= 1e-9 * lhs.norm().max(1.0),
            "lhs={lhs} rhs={rhs} diff={diff:.3e}"
        );
        // zero function -> (0, 0, 0)
        let zero = t.linear_comb(Complex64::default(), &t, Complex64::default());
        let (l0, r0, d0) = induction_check(100.0, &zero, &eta, &table).unwrap();
        assert_eq!((l0.norm(), r0.norm(), d0), (0.0, 0.0, 0.0));
    }

    #[test]
    fn chebotarev_proportions_sanity() {
        let table = PrimeTable::new(1_000_000);
        let oracle = FrobeniusOracle::kummer(2, 3).unwrap();
        let classes = oracle.group.classes();
        let mut counts = vec![0u64; classes.len()];
        let mut total = 0u64;
        for &l in table.range(5, 1_000_000) {
            if let Frob::Class(c) = oracle.frobenius(l) {
                counts[c] += 1;
                total += 1;
            }
        }
        let g = oracle.group.order() as f64;
        let tol = 3.0 / (total as f64).sqrt();
        for (i, cl) in classes.iter().enumerate() {
            let got = counts[i] as f64 / total as f64;
            let expect = cl.size as f64 / g;
            assert!(
                (got - expect).abs() / expect <= tol,
                "class {i}: {got} vs {expect}"
            );
        }
    }

    #[test]
    fn file_backed_oracle() {
        let text = "oracle cyclic 2 ramified 3\n2 0\n5 1\n7 0\n";
        let o = FrobeniusOracle::from_file(text).unwrap();
        assert_eq!(o.frobenius(5), Frob::Class(1));
        assert_eq!(o.frobenius(3), Frob::Ramified);
        assert_eq!(o.frobenius(11), Frob::Unknown);
        assert!(FrobeniusOracle::from_file("garbage").is_err());
    }
}
