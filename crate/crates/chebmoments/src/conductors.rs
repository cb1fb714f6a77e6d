//! Artin conductors from ramification data.
//!
//! A [`RamificationFiltration`] records the chain of higher ramification
//! groups G₀ ⊇ G₁ ⊇ … (lower numbering) at one ramified prime, as lists of
//! element ids into [`FiniteGroup::elements`]. The conductor exponent is
//!
//! n(χ, 𝔭) = Σ_i (|G_i| / |G₀|) · (χ(1) − (1/|G_i|) Σ_{g ∈ G_i} χ(g)),
//!
//! an integer by Artin's theorem; we round from floating character sums
//! with tolerance 1e-8. [`ConductorData`] assembles log A(χ) = χ(1)·log d_K
//! + Σ_𝔭 n(χ,𝔭)·log N𝔭 per irreducible character, in the log domain
//! throughout, plus the pointwise and averaged bound suites.
//!
//! Filtrations are supplied data, not computed from field arithmetic;
//! built-ins cover ℚ(ζ_q)/ℚ, quadratic fields ℚ(√d)/ℚ, and the degree
//! p(p−1) Kummer extensions K_{a,p} = ℚ(ζ_p, a^{1/p}).

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use num_complex::Complex64;

use crate::dirichlet::{gcd, DirichletGroup};
use crate::error::{Error, Result};
use crate::groups::classfn::s_of_coeffs;
use crate::groups::table::{character_table, CharacterTable};
use crate::groups::{Element, FiniteGroup};

/// Integer rounding tolerance for conductor exponents.
pub const EXPONENT_TOL: f64 = 1e-8;

/// The ramification filtration at one prime: levels\[i\] = element ids of
/// G_i; trailing trivial groups are omitted (an empty `levels` means
/// unramified).
#[derive(Debug, Clone)]
pub struct RamificationFiltration {
    pub label: String,
    pub residue_char: u64,
    /// N_{K/ℚ}(𝔭) as the positive integer generator (= residue_char over ℚ)
    pub norm: u64,
    pub levels: Vec<Vec<usize>>,
}

impl RamificationFiltration {
    /// Check each level is a subgroup containing the next, with orders
    /// dividing down the chain.
    pub fn validate(&self, group: &FiniteGroup) -> Result<()> {
        let elems = group.elements()?;
        let index: HashMap<&Element, usize> =
            elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
        for (i, level) in self.levels.iter().enumerate() {
            if level.is_empty() {
                return Err(Error::Parse(format!(
                    "{}: level {i} is empty (omit trailing trivial levels instead)",
                    self.label
                )));
            }
            let mut ids = level.clone();
            ids.sort_unstable();
            ids.dedup();
            if ids.len() != level.len() {
                return Err(Error::Parse(format!(
                    "{}: duplicate element id in level {i}",
                    self.label
                )));
            }
            for &id in level {
                if id >= elems.len() {
                    return Err(Error::Parse(format!(
                        "{}: element id {id} out of range",
                        self.label
                    )));
                }
            }
            // closure under multiplication
            for &a in level {
                for &b in level {
                    let p = group.mul(&elems[a], &elems[b]);
                    let pid = index[&p];
                    if !ids.binary_search(&pid).is_ok() {
                        return Err(Error::Parse(format!(
                            "{}: level {i} is not closed under multiplication",
                            self.label
                        )));
                    }
                }
            }
            if i + 1 < self.levels.len() {
                let next = &self.levels[i + 1];
                if level.len() % next.len() != 0 {
                    return Err(Error::Parse(format!(
                        "{}: |G_{}| does not divide |G_{i}|",
                        self.label,
                        i + 1
                    )));
                }
                for id in next {
                    if !ids.binary_search(id).is_ok() {
                        return Err(Error::Parse(format!(
                            "{}: G_{} is not contained in G_{i}",
                            self.label,
                            i + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// n(χ, 𝔭) = Σ_i (|G_i|/|G₀|)·codim V^{G_i}, rounded to the nearest
/// integer within [`EXPONENT_TOL`].
pub fn conductor_exponent(
    filt: &RamificationFiltration,
    chi: usize,
    table: &CharacterTable,
) -> Result<u64> {
    if filt.levels.is_empty() || filt.levels[0].len() <= 1 {
        return Ok(0);
    }
    let group = &table.group;
    let elems = group.elements()?;
    let g0 = filt.levels[0].len() as f64;
    let deg = table.degrees[chi] as f64;
    let mut total = 0.0;
    for level in &filt.levels {
        let mut sum = Complex64::default();
        for &id in level {
            sum += table.value(chi, group.class_of(&elems[id]));
        }
        if sum.im.abs() > 1e-8 {
            return Err(Error::NonIntegralExponent { value: sum.im, tol: EXPONENT_TOL });
        }
        let codim = deg - sum.re / level.len() as f64;
        total += level.len() as f64 / g0 * codim;
    }
    let rounded = total.round();
    if (total - rounded).abs() > EXPONENT_TOL || rounded < -0.5 {
        return Err(Error::NonIntegralExponent { value: total, tol: EXPONENT_TOL });
    }
    Ok(rounded as u64)
}

/// Conductors of every irreducible character of one extension.
#[derive(Debug, Clone)]
pub struct ConductorData {
    pub table: Arc<CharacterTable>,
    /// [K:ℚ]
    pub deg_k: u64,
    /// log d_K (absolute value of the discriminant of the base field)
    pub log_dk: f64,
    /// ramified primes, in input order
    pub primes: Vec<RamificationFiltration>,
    /// exponents[χ][prime index] = n(χ, 𝔭)
    pub exponents: Vec<Vec<u64>>,
    /// log A(χ) per character
    pub log_a: Vec<f64>,
    /// log rd_L = (log d_L)/[L:ℚ]
    pub log_rd_l: f64,
}

impl ConductorData {
    /// Assemble the conductor data from filtrations. With `log_rd_l: None`
    /// the root discriminant is derived via conductor–discriminant
    /// (log d_L = Σ_χ χ(1) log A(χ)), valid for K = ℚ.
    pub fn from_filtrations(
        table: &Arc<CharacterTable>,
        deg_k: u64,
        log_dk: f64,
        primes: Vec<RamificationFiltration>,
        log_rd_l: Option<f64>,
    ) -> Result<Self> {
        for f in &primes {
            f.validate(&table.group)?;
        }
        let n = table.n_chars();
        let mut exponents = Vec::with_capacity(n);
        let mut log_a = Vec::with_capacity(n);
        for chi in 0..n {
            let mut row = Vec::with_capacity(primes.len());
            let mut la = table.degrees[chi] as f64 * log_dk;
            for f in &primes {
                let e = conductor_exponent(f, chi, table)?;
                la += e as f64 * (f.norm as f64).ln();
                row.push(e);
            }
            exponents.push(row);
            log_a.push(la);
        }
        let log_rd_l = match log_rd_l {
            Some(v) => v,
            None => {
                let log_dl: f64 = (0..n)
                    .map(|chi| table.degrees[chi] as f64 * log_a[chi])
                    .sum();
                log_dl / (deg_k * table.group.order()) as f64
            }
        };
        Ok(Self {
            table: Arc::clone(table),
            deg_k,
            log_dk,
            primes,
            exponents,
            log_a,
            log_rd_l,
        })
    }

    pub fn log_a(&self, chi: usize) -> f64 {
        self.log_a[chi]
    }

    /// Exponent of 𝔭 in d_{L/K} by conductor–discriminant:
    /// Σ_χ χ(1)·n(χ,𝔭).
    pub fn discriminant_exponent(&self, prime_idx: usize) -> u64 {
        (0..self.table.n_chars())
            .map(|chi| self.table.degrees[chi] * self.exponents[chi][prime_idx])
            .sum()
    }
}

/// The pointwise conductor bound suite for one character.
#[derive(Debug, Clone, Copy)]
pub struct PointwiseBounds {
    /// max(1, [K:ℚ]/2)·χ(1)
    pub lower: f64,
    /// 2χ(1)·[K:ℚ]·log rd_L
    pub upper: f64,
    /// log(A+2) / log((3/(χ(1)[K:ℚ]))·log(A+2)) — the slowly-varying ratio
    pub ratio_lhs: f64,
    /// [K:ℚ]·χ(1)·log(rd_L+2)/log log(rd_L+2) — its comparison quantity
    /// (an absolute constant times this dominates `ratio_lhs`)
    pub ratio_rhs: f64,
}

/// The two-sided bracket on log A(χ) plus the slowly-varying ratio bound.
/// The lower bound assumes entirety of L(s,χ) when K = ℚ and χ is
/// nontrivial; over K ≠ ℚ it is unconditional (trivial character included).
pub fn pointwise_bounds(data: &ConductorData, chi: usize) -> PointwiseBounds {
    let deg = data.table.degrees[chi] as f64;
    let dk = data.deg_k as f64;
    let la = data.log_a[chi];
    let a = la.exp();
    let rd = data.log_rd_l.exp();
    let inner = 3.0 / (deg * dk) * (a + 2.0).ln();
    PointwiseBounds {
        lower: (1.0f64).max(dk / 2.0) * deg,
        upper: 2.0 * deg * dk * data.log_rd_l,
        ratio_lhs: (a + 2.0).ln() / inner.ln(),
        ratio_rhs: dk * deg * (rd + 2.0).ln() / (rd + 2.0).ln().ln(),
    }
}

/// The averaged conductor bracket for nonnegative weights c_χ.
#[derive(Debug, Clone, Copy)]
pub struct AveragedBounds {
    /// (1 − S(c))·Σ χ(1) c_χ
    pub lower: f64,
    /// (1 + S(c))·Σ χ(1) c_χ
    pub upper: f64,
    /// the bracketed quantity Σ c_χ log A(χ) / ([K:ℚ] log rd_L)
    pub ratio: f64,
    pub s_of_c: f64,
}

/// Bracket Σ c_χ log A(χ)/([K:ℚ] log rd_L) between (1 ∓ S(c))·Σ χ(1)c_χ.
pub fn averaged_bounds(c: &[f64], data: &ConductorData) -> Result<AveragedBounds> {
    if c.len() != data.table.n_chars() {
        return Err(Error::GroupMismatch);
    }
    if c.iter().any(|&x| x < 0.0) {
        return Err(Error::Parse("averaged_bounds requires c >= 0".into()));
    }
    let s = s_of_coeffs(&data.table, c, None)?.value;
    let base: f64 = c
        .iter()
        .zip(&data.table.degrees)
        .map(|(&ci, &d)| d as f64 * ci)
        .sum();
    let ratio: f64 = c
        .iter()
        .zip(&data.log_a)
        .map(|(&ci, &la)| ci * la)
        .sum::<f64>()
        / (data.deg_k as f64 * data.log_rd_l);
    Ok(AveragedBounds {
        lower: (1.0 - s) * base,
        upper: (1.0 + s) * base,
        ratio,
        s_of_c: s,
    })
}

// ---------------------------------------------------------------------------
// built-in extensions
// ---------------------------------------------------------------------------

fn element_ids(group: &FiniteGroup, members: &[Element]) -> Result<Vec<usize>> {
    let elems = group.elements()?;
    let index: HashMap<&Element, usize> =
        elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
    members
        .iter()
        .map(|e| {
            index
                .get(e)
                .copied()
                .ok_or_else(|| Error::Parse("element not in group".into()))
        })
        .collect()
}

/// ℚ(ζ_q)/ℚ with Gal ≅ (Z/q)^*; returns the Dirichlet group alongside so
/// the mixed-radix character indexing can be cross-checked against
/// classical conductors. Ramification at each p^e ‖ q uses the lower-
/// numbering filtration of local cyclotomic fields: for odd p,
/// G_u = {a ≡ 1 mod p^k} for p^{k−1} ≤ u ≤ p^k − 1 (G₀ the full inertia
/// factor); for p = 2, e ≥ 2: G₀ = G₁ = inertia and G_u = {a ≡ 1 mod 2^k}
/// for 2^{k−1} ≤ u ≤ 2^k − 1, k ≥ 2. All levels are trivial from p^{e−1}.
pub fn cyclotomic(q: u64) -> Result<(ConductorData, DirichletGroup)> {
    if q == 0 {
        return Err(Error::Parse("cyclotomic modulus must be positive".into()));
    }
    let dg = DirichletGroup::new(q)?;
    let group = dg.group()?;
    let table = character_table(&group)?;
    let elems = group.elements()?;
    // residue -> element, via the class index (abelian: classes are
    // singleton and share the mixed-radix indexing)
    let mut class_to_elem: Vec<Option<&Element>> = vec![None; elems.len()];
    for e in &elems {
        class_to_elem[group.class_of(e)] = Some(e);
    }
    let residue_elem = |a: u64| -> Element {
        let cls = dg.class_of_residue(a).expect("coprime residue");
        class_to_elem[cls].expect("class covered").clone()
    };
    let subgroup_ids = |pred: &dyn Fn(u64) -> bool| -> Result<Vec<usize>> {
        let members: Vec<Element> = (1..=q.max(2))
            .filter(|&a| a <= q && gcd(a, q) == 1 && pred(a))
            .map(residue_elem)
            .collect();
        element_ids(&group, &members)
    };
    let mut primes = Vec::new();
    let mut rest = q;
    let mut p = 2u64;
    while rest > 1 {
        if rest % p == 0 {
            let mut pe = 1u64;
            while rest % p == 0 {
                rest /= p;
                pe *= p;
            }
            let cofactor = q / pe;
            // inertia at p: a ≡ 1 mod q/p^e
            let inertia = subgroup_ids(&|a| a % cofactor.max(1) == 1 % cofactor.max(1))?;
            if inertia.len() > 1 {
                let mut levels = vec![inertia.clone()];
                if p == 2 {
                    levels.push(inertia);
                }
                let top = if p == 2 { 2 } else { 1 };
                let mut pk = p.pow(top);
                let mut k = top;
                while p.pow(k - 1) < pe / p {
                    // levels u = p^{k-1} .. p^k - 1
                    let sub = subgroup_ids(&|a| {
                        a % cofactor.max(1) == 1 % cofactor.max(1) && a % pk == 1
                    })?;
                    let span = p.pow(k) - p.pow(k - 1);
                    for _ in 0..span {
                        levels.push(sub.clone());
                    }
                    k += 1;
                    pk *= p;
                }
                primes.push(RamificationFiltration {
                    label: format!("{p}"),
                    residue_char: p,
                    norm: p,
                    levels,
                });
            }
        }
        p += 1;
    }
    let data = ConductorData::from_filtrations(&table, 1, 0.0, primes, None)?;
    Ok((data, dg))
}

/// ℚ(√d)/ℚ for squarefree d ∉ {0, 1}; Gal ≅ C₂, discriminant the
/// fundamental discriminant of d.
pub fn quadratic(d: i64) -> Result<ConductorData> {
    if d == 0 || d == 1 {
        return Err(Error::Parse("quadratic field needs squarefree d != 0, 1".into()));
    }
    let ad = d.unsigned_abs();
    for f in 2..=ad {
        if f * f > ad {
            break;
        }
        if ad % (f * f) == 0 {
            return Err(Error::Parse(format!("{d} is not squarefree")));
        }
    }
    let group = FiniteGroup::cyclic(2)?;
    let table = character_table(&group)?;
    let all = vec![0usize, 1];
    let mut primes = Vec::new();
    // odd primes dividing d are tamely ramified
    let mut m = ad;
    let mut p = 3u64;
    while m % 2 == 0 {
        m /= 2;
    }
    while m > 1 {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            primes.push(RamificationFiltration {
                label: format!("{p}"),
                residue_char: p,
                norm: p,
                levels: vec![all.clone()],
            });
        }
        p += 2;
    }
    // 2 ramifies unless d ≡ 1 mod 4
    let dm4 = d.rem_euclid(4);
    if dm4 != 1 {
        let depth = if dm4 == 3 { 2 } else { 3 }; // n(χ,2)
        primes.push(RamificationFiltration {
            label: "2".into(),
            residue_char: 2,
            norm: 2,
            levels: vec![all.clone(); depth],
        });
    }
    ConductorData::from_filtrations(&table, 1, 0.0, primes, None)
}

/// K_{a,p} = ℚ(ζ_p, a^{1/p}) for an odd prime p and a prime a ≠ p;
/// Gal ≅ Aff(𝔽_p), d_L = p^{p²−2}·a^{(p−1)²}. The filtration at p is
/// G₀ = G, G₁ = the order-p translation subgroup; at a it is
/// G₀ = translations only (tame).
pub fn kummer(a: u64, p: u64) -> Result<ConductorData> {
    if a < 2 || a == p || !crate::groups::is_prime_u64(a) {
        return Err(Error::Parse(format!("kummer parameter a={a} must be a prime != p")));
    }
    let group = FiniteGroup::affine(p)?;
    let table = character_table(&group)?;
    let all: Vec<usize> = (0..group.order() as usize).collect();
    let translations: Vec<Element> =
        (0..p).map(|d| Element::Affine { c: 1, d }).collect();
    let trans_ids = element_ids(&group, &translations)?;
    let primes = vec![
        RamificationFiltration {
            label: format!("{p}"),
            residue_char: p,
            norm: p,
            levels: vec![all, trans_ids.clone()],
        },
        RamificationFiltration {
            label: format!("{a}"),
            residue_char: a,
            norm: a,
            levels: vec![trans_ids],
        },
    ];
    ConductorData::from_filtrations(&table, 1, 0.0, primes, None)
}

// ---------------------------------------------------------------------------
// file format
// ---------------------------------------------------------------------------

/// `prime <label> <residue char>` then `level <i>`, element ids, `end`.
pub fn write_filtrations(filts: &[RamificationFiltration]) -> String {
    let mut s = String::new();
    for f in filts {
        writeln!(s, "prime {} {}", f.label, f.residue_char).unwrap();
        for (i, level) in f.levels.iter().enumerate() {
            writeln!(s, "level {i}").unwrap();
            let ids: Vec<String> = level.iter().map(|id| id.to_string()).collect();
            writeln!(s, "{}", ids.join(" ")).unwrap();
            writeln!(s, "end").unwrap();
        }
    }
    s
}

pub fn parse_filtrations(text: &str) -> Result<Vec<RamificationFiltration>> {
    let mut out: Vec<RamificationFiltration> = Vec::new();
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .peekable();
    while let Some(line) = lines.next() {
        let w: Vec<&str> = line.split_whitespace().collect();
        match w.as_slice() {
            ["prime", label, rc] => {
                let residue_char: u64 =
                    rc.parse().map_err(|_| Error::Parse("bad residue char".into()))?;
                out.push(RamificationFiltration {
                    label: (*label).into(),
                    residue_char,
                    norm: residue_char,
                    levels: Vec::new(),
                });
            }
            ["level", i] => {
                let f = out
                    .last_mut()
                    .ok_or_else(|| Error::Parse("level before prime".into()))?;
                let idx: usize =
                    i.parse().map_err(|_| Error::Parse("bad level index".into()))?;
                if idx != f.levels.len() {
                    return Err(Error::Parse(format!(
                        "level index {idx}, expected {}",
                        f.levels.len()
                    )));
                }
                let mut ids = Vec::new();
                loop {
                    let l = lines
                        .next()
                        .ok_or_else(|| Error::Parse("unterminated level".into()))?;
                    if l == "end" {
                        break;
                    }
                    for tok in l.split_whitespace() {
                        ids.push(
                            tok.parse::<usize>()
                                .map_err(|_| Error::Parse("bad element id".into()))?,
                        );
                    }
                }
                f.levels.push(ids);
            }
            _ => return Err(Error::Parse(format!("bad filtration line: {line}"))),
        }
    }
    if out.is_empty() {
        return Err(Error::Parse("no filtrations found".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn cyclotomic_exponents_match_dirichlet_conductors() {
        for q in [3u64, 4, 5, 7, 8, 9, 12, 15, 16, 20] {
            let (data, dg) = cyclotomic(q).unwrap();
            for chi in 0..data.table.n_chars() {
                // mixed-radix alignment: character chi of the abelian group
                // corresponds to Dirichlet character chi
                let f = dg.conductor(chi);
                let mut la = 0.0;
                let mut ff = f;
                for (pi, filt) in data.primes.iter().enumerate() {
                    let p = filt.residue_char;
                    let mut v = 0u64;
                    while ff % p == 0 {
                        ff /= p;
                        v += 1;
                    }
                    assert_eq!(
                        data.exponents[chi][pi], v,
                        "q={q} chi={chi} p={p}: artin {} vs dirichlet v_p(f)={v}",
                        data.exponents[chi][pi]
                    );
                    la += v as f64 * (p as f64).ln();
                }
                assert_eq!(ff, 1, "conductor has a prime outside the ramified set");
                assert_relative_eq!(data.log_a[chi], la, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn cyclotomic_discriminants() {
        // d(Q(zeta_q)) for q = 4, 5, 8, 9: 4, 125, 256, 3^9
        for (q, expect) in [(4u64, 4f64), (5, 125.0), (8, 256.0), (9, 19683.0)] {
            let (data, _) = cyclotomic(q).unwrap();
            let log_dl: f64 = (0..data.table.n_chars())
                .map(|chi| data.table.degrees[chi] as f64 * data.log_a[chi])
                .sum();
            assert_relative_eq!(log_dl, expect.ln(), epsilon = 1e-9, max_relative = 1e-9);
        }
    }

    #[test]
    fn quadratic_fundamental_discriminants() {
        for (d, disc) in [(-1i64, 4u64), (2, 8), (3, 12), (5, 5), (-5, 20), (6, 24), (-3, 3)]
        {
            let data = quadratic(d).unwrap();
            let log_dl: f64 = (0..2)
                .map(|chi| data.table.degrees[chi] as f64 * data.log_a[chi])
                .sum();
            assert_relative_eq!(log_dl, (disc as f64).ln(), epsilon = 1e-10);
            assert_relative_eq!(data.log_rd_l, (disc as f64).ln() / 2.0, epsilon = 1e-10);
        }
        assert!(quadratic(12).is_err());
        assert!(quadratic(0).is_err());
    }

    #[test]
    fn kummer_discriminant_and_theta_exponents() {
        let data = kummer(2, 3).unwrap();
        // theta is the unique degree-2 character of Aff(F_3)
        let theta = (0..data.table.n_chars())
            .find(|&c| data.table.degrees[c] == 2)
            .unwrap();
        assert_eq!(data.exponents[theta], vec![3, 2]); // n(theta,3), n(theta,2)
        let log_dl: f64 = (0..data.table.n_chars())
            .map(|chi| data.table.degrees[chi] as f64 * data.log_a[chi])
            .sum();
        // d_L = 3^7 * 2^4
        assert_relative_eq!(log_dl, 7.0 * 3f64.ln() + 4.0 * 2f64.ln(), epsilon = 1e-9);
        // general formula p^{p^2-2} a^{(p-1)^2} across instances
        for (a, p) in [(2u64, 3u64), (5, 3), (2, 5), (3, 5)] {
            let data = kummer(a, p).unwrap();
            let log_dl: f64 = (0..data.table.n_chars())
                .map(|chi| data.table.degrees[chi] as f64 * data.log_a[chi])
                .sum();
            let expect = ((p * p - 2) as f64) * (p as f64).ln()
                + ((p - 1) * (p - 1)) as f64 * (a as f64).ln();
            assert_relative_eq!(log_dl, expect, epsilon = 1e-8, max_relative = 1e-9);
            assert_relative_eq!(
                data.log_rd_l,
                expect / (p * (p - 1)) as f64,
                epsilon = 1e-9,
                max_relative = 1e-9
            );
        }
    }

    #[test]
    fn pointwise_brackets_hold_on_builtins() {
        let data = kummer(2, 3).unwrap();
        for chi in 0..data.table.n_chars() {
            if chi == data.table.trivial_index() {
                continue;
            }
            let b = pointwise_bounds(&data, chi);
            assert!(b.lower <= data.log_a[chi] + 1e-12, "chi={chi}");
            assert!(data.log_a[chi] <= b.upper + 1e-12, "chi={chi}");
            assert!(b.ratio_lhs.is_finite() && b.ratio_rhs > 0.0);
        }
        let (data, _) = cyclotomic(5).unwrap();
        for chi in 1..data.table.n_chars() {
            let b = pointwise_bounds(&data, chi);
            assert!(b.lower <= data.log_a[chi] && data.log_a[chi] <= b.upper);
        }
    }

    #[test]
    fn averaged_bracket_cyclotomic_5() {
        let (data, _) = cyclotomic(5).unwrap();
        let c = vec![1.0; data.table.n_chars()];
        let b = averaged_bounds(&c, &data).unwrap();
        assert!(b.lower <= b.ratio + 1e-12 && b.ratio <= b.upper + 1e-12);
        // c supported on the trivial character: S = 1, bracket (0, 2c)
        let mut c0 = vec![0.0; data.table.n_chars()];
        c0[data.table.trivial_index()] = 1.5;
        let b0 = averaged_bounds(&c0, &data).unwrap();
        assert_relative_eq!(b0.s_of_c, 1.0, epsilon = 1e-12);
        assert_relative_eq!(b0.lower, 0.0, epsilon = 1e-12);
        assert_relative_eq!(b0.upper, 3.0, epsilon = 1e-12);
    }

    #[test]
    fn filtration_round_trip_and_validation() {
        let data = kummer(2, 3).unwrap();
        let text = write_filtrations(&data.primes);
        let parsed = parse_filtrations(&text).unwrap();
        assert_eq!(text, write_filtrations(&parsed));
        for f in &parsed {
            f.validate(&data.table.group).unwrap();
        }
        // non-subgroup level rejected
        let bad = RamificationFiltration {
            label: "7".into(),
            residue_char: 7,
            norm: 7,
            levels: vec![vec![0, 1]], // identity plus one non-involution
        };
        let g = FiniteGroup::cyclic(3).unwrap();
        assert!(bad.validate(&g).is_err());
        assert!(parse_filtrations("nonsense").is_err());
    }

    #[test]
    fn unramified_prime_gives_zero() {
        let (data, _) = cyclotomic(5).unwrap();
        let filt = RamificationFiltration {
            label: "11".into(),
            residue_char: 11,
            norm: 11,
            levels: Vec::new(),
        };
        for chi in 0..4 {
            assert_eq!(conductor_exponent(&filt, chi, &data.table).unwrap(), 0);
        }
    }
}
