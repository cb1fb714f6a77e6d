//! Class functions and their spectral functionals: Fourier coefficients
//! t̂(χ), the λ_{j,k} norms, and the normalized maximal character sum S_t.

use std::sync::Arc;

use num_complex::Complex64;

use super::table::CharacterTable;
use crate::error::{Error, Result};

/// A class function with its Fourier side cached.
#[derive(Debug, Clone)]
pub struct ClassFunction {
    pub table: Arc<CharacterTable>,
    /// value per conjugacy class
    pub values: Vec<Complex64>,
    /// t̂(χ) per irreducible character
    pub fourier: Vec<Complex64>,
}

/// Result of the S_t maximization: value and the smallest class index
/// attaining it.
#[derive(Debug, Clone, Copy)]
pub struct StResult {
    pub value: f64,
    pub argmax_class: usize,
}

impl ClassFunction {
    /// Build from class values; Fourier coefficients computed eagerly.
    pub fn from_values(table: &Arc<CharacterTable>, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != table.group.class_count() {
            return Err(Error::GroupMismatch);
        }
        let order = table.group.order() as f64;
        let fourier = table
            .chars
            .iter()
            .map(|chi| {
                let mut acc = Complex64::default();
                for (k, cl) in table.group.classes().iter().enumerate() {
                    acc += chi[k].conj() * values[k] * cl.size as f64;
                }
                acc / order
            })
            .collect();
        Ok(Self { table: table.clone(), values, fourier })
    }

    /// Build from real class values.
    pub fn from_real(table: &Arc<CharacterTable>, values: &[f64]) -> Result<Self> {
        Self::from_values(
            table,
            values.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
        )
    }

    /// |G| * 1_e (the delta at the identity, scaled by the group order).
    pub fn delta_e_scaled(table: &Arc<CharacterTable>) -> Self {
        let mut values = vec![Complex64::default(); table.group.class_count()];
        values[0] = Complex64::new(table.group.order() as f64, 0.0);
        Self::from_values(table, values).expect("sizes match")
    }

    /// Indicator of a single conjugacy class.
    pub fn class_indicator(table: &Arc<CharacterTable>, class: usize) -> Self {
        let mut values = vec![Complex64::default(); table.group.class_count()];
        values[class] = Complex64::new(1.0, 0.0);
        Self::from_values(table, values).expect("sizes match")
    }

    /// An irreducible character as a class function.
    pub fn irreducible(table: &Arc<CharacterTable>, chi: usize) -> Self {
        Self::from_values(table, table.chars[chi].clone()).expect("sizes match")
    }

    /// The constant function 1.
    pub fn one(table: &Arc<CharacterTable>) -> Self {
        Self::from_values(
            table,
            vec![Complex64::new(1.0, 0.0); table.group.class_count()],
        )
        .expect("sizes match")
    }

    /// Pointwise linear combination a*self + b*other.
    pub fn linear_comb(&self, a: Complex64, other: &ClassFunction, b: Complex64) -> Self {
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(x, y)| a * x + b * y)
            .collect();
        Self::from_values(&self.table, values).expect("same table")
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|z| z.norm() == 0.0)
    }

    /// t(class of g^m) convenience accessor.
    pub fn value_at_class_power(&self, class: usize, m: u64) -> Complex64 {
        self.values[self.table.group.class_power(class, m)]
    }

    /// L2 norm squared under the normalized Haar measure (= λ_{0,2} by
    /// Parseval).
    pub fn norm2_sq(&self) -> f64 {
        let g = self.table.group.order() as f64;
        self.table
            .group
            .classes()
            .iter()
            .zip(&self.values)
            .map(|(cl, v)| cl.size as f64 * v.norm_sqr())
            .sum::<f64>()
            / g
    }
}

/// t̂(χ) = (1/|G|) Σ_g conj(χ(g)) t(g), from the cache.
pub fn fourier_coeff(t: &ClassFunction, chi: usize) -> Complex64 {
    t.fourier[chi]
}

/// λ_{j,k}(t; Ξ) = Σ_{χ in Ξ} χ(1)^j |t̂(χ)|^k, Ξ defaulting to all of Irr(G).
pub fn lambda_norm(t: &ClassFunction, j: u32, k: u32, xi: Option<&[usize]>) -> f64 {
    let all: Vec<usize> = (0..t.table.n_chars()).collect();
    let idx = xi.unwrap_or(&all);
    idx.iter()
        .map(|&c| {
            (t.table.degrees[c] as f64).powi(j as i32)
                * t.fourier[c].norm().powi(k as i32)
        })
        .sum()
}

/// S over arbitrary nonnegative spectral coefficients c_χ:
/// max_{a != e} |Σ_{χ in Ξ} χ(a) c_χ| / Σ_{χ in Ξ} χ(1) c_χ.
///
/// `s_t` is the special case c_χ = |t̂(χ)|². The trivial group returns 0 by
/// convention.
pub fn s_of_coeffs(
    table: &CharacterTable,
    c: &[f64],
    xi: Option<&[usize]>,
) -> Result<StResult> {
    let all: Vec<usize> = (0..table.n_chars()).collect();
    let idx = xi.unwrap_or(&all);
    let denom: f64 = idx.iter().map(|&i| table.degrees[i] as f64 * c[i]).sum();
    if table.group.class_count() == 1 {
        return Ok(StResult { value: 0.0, argmax_class: 0 });
    }
    if denom <= 0.0 {
        return Err(Error::ZeroDenominator);
    }
    let mut best = StResult { value: -1.0, argmax_class: 0 };
    for class in 1..table.group.class_count() {
        let mut acc = Complex64::default();
        for &i in idx {
            acc += table.chars[i][class] * c[i];
        }
        // the sum is real for the |t̂|² weights of interest; take the modulus
        // as the paper's |·|
        let v = acc.norm() / denom;
        if v > best.value + 1e-15 {
            best = StResult { value: v, argmax_class: class };
        }
    }
    Ok(best)
}

/// S_t(Ξ): normalized maximal off-identity character sum weighted by |t̂|².
pub fn s_t(t: &ClassFunction, xi: Option<&[usize]>) -> Result<StResult> {
    if t.is_zero() {
        return Err(Error::ZeroClassFunction);
    }
    let c: Vec<f64> = t.fourier.iter().map(|z| z.norm_sqr()).collect();
    s_of_coeffs(&t.table, &c, xi)
}

/// Frobenius-Schur indicator ε₂(χ) = (1/|G|) Σ_g χ(g²) ∈ {−1, 0, 1}.
pub fn frobenius_schur(chi: usize, table: &CharacterTable) -> Result<i32> {
    let g = table.group.order() as f64;
    let mut acc = Complex64::default();
    for (k, cl) in table.group.classes().iter().enumerate() {
        acc += table.chars[chi][table.group.power_map()[k]] * cl.size as f64;
    }
    acc /= g;
    let rounded = acc.re.round();
    let residual = (acc - rounded).norm();
    if residual > 1e-8 || !(-1.0..=1.0).contains(&rounded) {
        return Err(Error::FrobeniusSchurResidual { residual });
    }
    Ok(rounded as i32)
}

/// True iff the induced symmetrized character has S < 1; equivalently false
/// iff some a != e has χ(a) = ±χ(1).
pub fn faithful_center_criterion(chi: usize, table: &CharacterTable) -> bool {
    let deg = table.degrees[chi] as f64;
    for class in 1..table.group.class_count() {
        let v = table.chars[chi][class];
        if (v - deg).norm() < 1e-9 || (v + deg).norm() < 1e-9 {
            return false;
        }
    }
    true
}

/// Threshold filter set for symmetric groups:
/// Ξ = {χ : χ(1) ≥ ‖t‖₂ / (8 p(n)^{1/2})}.
pub fn sn_filter_set(n: u32, t: &ClassFunction) -> Vec<usize> {
    let pn = super::symmetric::partition_count(n) as f64;
    let norm2 = t.norm2_sq().sqrt();
    let threshold = norm2 / (8.0 * pn.sqrt());
    (0..t.table.n_chars())
        .filter(|&c| t.table.degrees[c] as f64 >= threshold)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{character_table, FiniteGroup};

    #[test]
    fn fourier_of_scaled_delta_is_degrees() {
        let g = FiniteGroup::dihedral(5).unwrap();
        let t = character_table(&g).unwrap();
        let f = ClassFunction::delta_e_scaled(&t);
        for (i, &d) in t.degrees.iter().enumerate() {
            assert!((fourier_coeff(&f, i) - d as f64).norm() < 1e-10);
        }
    }

    #[test]
    fn fourier_of_irreducible_is_delta() {
        let g = FiniteGroup::affine(5).unwrap();
        let t = character_table(&g).unwrap();
        for chi in 0..t.n_chars() {
            let f = ClassFunction::irreducible(&t, chi);
            for psi in 0..t.n_chars() {
                let expect = if chi == psi { 1.0 } else { 0.0 };
                assert!((fourier_coeff(&f, psi) - expect).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn fourier_of_class_indicator() {
        let g = FiniteGroup::dihedral(7).unwrap();
        let t = character_table(&g).unwrap();
        let order = g.order() as f64;
        for class in 0..g.class_count() {
            let f = ClassFunction::class_indicator(&t, class);
            let size = g.classes()[class].size as f64;
            for chi in 0..t.n_chars() {
                let expect = t.chars[chi][class].conj() * (size / order);
                assert!((fourier_coeff(&f, chi) - expect).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn fourier_inversion_and_parseval() {
        let g = FiniteGroup::affine(7).unwrap();
        let t = character_table(&g).unwrap();
        let vals: Vec<Complex64> = (0..g.class_count())
            .map(|k| Complex64::new(k as f64 - 1.5, 0.25 * k as f64))
            .collect();
        let f = ClassFunction::from_values(&t, vals.clone()).unwrap();
        // inversion
        for (k, &v) in vals.iter().enumerate() {
            let mut acc = Complex64::default();
            for chi in 0..t.n_chars() {
                acc += f.fourier[chi] * t.chars[chi][k];
            }
            assert!((acc - v).norm() < 1e-10);
        }
        // Parseval
        let lhs: f64 = f.fourier.iter().map(|z| z.norm_sqr()).sum();
        assert!((lhs - f.norm2_sq()).abs() < 1e-10);
        assert!((lambda_norm(&f, 0, 2, None) - f.norm2_sq()).abs() < 1e-10);
    }

    #[test]
    fn dihedral_lambda_norms() {
        // λ_{1,1}(|D_n|1_e) = 2n; λ_{1,2} = 4n - 2
        for n in [3u64, 5, 9] {
            let g = FiniteGroup::dihedral(n).unwrap();
            let t = character_table(&g).unwrap();
            let f = ClassFunction::delta_e_scaled(&t);
            assert!((lambda_norm(&f, 1, 1, None) - 2.0 * n as f64).abs() < 1e-9);
            assert!((lambda_norm(&f, 1, 2, None) - (4.0 * n as f64 - 2.0)).abs() < 1e-9);
        }
    }

    #[test]
    fn s_t_dihedral3_delta() {
        let g = FiniteGroup::dihedral(3).unwrap();
        let t = character_table(&g).unwrap();
        let f = ClassFunction::delta_e_scaled(&t);
        let s = s_t(&f, None).unwrap();
        assert!((s.value - 0.2).abs() < 1e-12, "got {}", s.value);
    }

    #[test]
    fn s_t_affine_theta() {
        for p in [3u64, 5, 7, 11, 13] {
            let g = FiniteGroup::affine(p).unwrap();
            let t = character_table(&g).unwrap();
            let theta = t.n_chars() - 1;
            let f = ClassFunction::irreducible(&t, theta);
            let s = s_t(&f, None).unwrap();
            assert!(
                (s.value - 1.0 / (p - 1) as f64).abs() < 1e-12,
                "p={p} got {}",
                s.value
            );
        }
    }

    #[test]
    fn s_t_flat_abelian_is_zero() {
        let g = FiniteGroup::cyclic(8).unwrap();
        let t = character_table(&g).unwrap();
        // t with all |t̂| equal: |G| 1_e has t̂(χ) = 1 for all χ
        let f = ClassFunction::delta_e_scaled(&t);
        let s = s_t(&f, None).unwrap();
        assert!(s.value < 1e-12);
    }

    #[test]
    fn frobenius_schur_dihedral_all_orthogonal() {
        let g = FiniteGroup::dihedral(7).unwrap();
        let t = character_table(&g).unwrap();
        for chi in 0..t.n_chars() {
            assert_eq!(frobenius_schur(chi, &t).unwrap(), 1);
        }
    }

    #[test]
    fn frobenius_schur_affine() {
        let g = FiniteGroup::affine(7).unwrap();
        let t = character_table(&g).unwrap();
        // theta and the trivial and quadratic psi are orthogonal; complex
        // Dirichlet rows are unitary (indicator 0)
        let n = t.n_chars();
        assert_eq!(frobenius_schur(n - 1, &t).unwrap(), 1); // theta
        assert_eq!(frobenius_schur(0, &t).unwrap(), 1); // trivial
        let mut zero_count = 0;
        for chi in 0..n - 1 {
            let fs = frobenius_schur(chi, &t).unwrap();
            assert!(fs == 0 || fs == 1);
            if fs == 0 {
                zero_count += 1;
            }
        }
        // p = 7: characters mod 7 of order > 2 are complex: 4 of them
        assert_eq!(zero_count, 4);
    }

    #[test]
    fn faithful_center_examples() {
        let g = FiniteGroup::affine(5).unwrap();
        let t = character_table(&g).unwrap();
        assert!(faithful_center_criterion(t.n_chars() - 1, &t)); // theta
        assert!(!faithful_center_criterion(t.trivial_index(), &t));
        let s4 = character_table(&FiniteGroup::symmetric(4).unwrap()).unwrap();
        // sign character of S_4 = row of partition [1,1,1,1] (last in lex)
        let sign_idx = s4.n_chars() - 1;
        assert_eq!(s4.degrees[sign_idx], 1);
        assert!(!faithful_center_criterion(sign_idx, &s4));
    }

    #[test]
    fn sn_filter_set_5cycles() {
        let g = FiniteGroup::symmetric(5).unwrap();
        let t = character_table(&g).unwrap();
        // t_C = (|G|/|C|) 1_C for C the 5-cycles: |C| = 24, ‖t‖₂² = 120/24 = 5
        let c5 = g
            .classes()
            .iter()
            .position(|c| c.label == "[5]")
            .unwrap();
        let scale = g.order() as f64 / g.classes()[c5].size as f64;
        let mut vals = vec![0.0; g.class_count()];
        vals[c5] = scale;
        let f = ClassFunction::from_real(&t, &vals).unwrap();
        assert!((f.norm2_sq() - 5.0).abs() < 1e-9);
        let xi = sn_filter_set(5, &f);
        // threshold = sqrt(5)/(8 sqrt(7)) < 1, so all characters pass
        assert_eq!(xi.len(), t.n_chars());
    }
}
