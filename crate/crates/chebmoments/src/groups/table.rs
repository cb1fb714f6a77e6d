//! Character tables for all supported group kinds.

use std::sync::Arc;

use num_complex::Complex64;

use super::symmetric;
use super::{unit_root, FiniteGroup, GroupKind};
use crate::error::{Error, Result};
use crate::groups::mod_inverse;

/// Irreducible character table: rows are characters, columns follow the
/// group's conjugacy-class order.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub group: Arc<FiniteGroup>,
    /// chars[character][class]
    pub chars: Vec<Vec<Complex64>>,
    /// chi(1) per character, exact integers.
    pub degrees: Vec<u64>,
    pub labels: Vec<String>,
}

impl CharacterTable {
    pub fn value(&self, chi: usize, class: usize) -> Complex64 {
        self.chars[chi][class]
    }

    pub fn n_chars(&self) -> usize {
        self.chars.len()
    }

    /// Index of the trivial character.
    pub fn trivial_index(&self) -> usize {
        self.chars
            .iter()
            .position(|row| row.iter().all(|z| (z - 1.0).norm() < 1e-9))
            .expect("table has no trivial character")
    }

    /// Index of the character whose values are the complex conjugate row.
    pub fn conjugate_index(&self, chi: usize) -> usize {
        let conj: Vec<Complex64> = self.chars[chi].iter().map(|z| z.conj()).collect();
        self.chars
            .iter()
            .position(|row| {
                row.iter().zip(&conj).all(|(a, b)| (a - b).norm() < 1e-8)
            })
            .expect("conjugate character missing from table")
    }

    /// Max row-orthogonality residual (used by the invariant suite).
    pub fn orthogonality_residual(&self) -> f64 {
        let g = self.group.order() as f64;
        let mut worst: f64 = 0.0;
        for (i, a) in self.chars.iter().enumerate() {
            for (j, b) in self.chars.iter().enumerate() {
                let mut ip = Complex64::default();
                for (k, cl) in self.group.classes().iter().enumerate() {
                    ip += a[k] * b[k].conj() * cl.size as f64;
                }
                ip /= g;
                let expect = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((ip - expect).norm());
            }
        }
        worst
    }

    /// Verify structural invariants; returns the orthogonality residual.
    pub fn validate(&self) -> Result<f64> {
        let residual = self.orthogonality_residual();
        if residual > 1e-10 {
            return Err(Error::InconsistentTable(format!(
                "orthogonality residual {residual:e}"
            )));
        }
        let sumsq: u64 = self.degrees.iter().map(|d| d * d).sum();
        if sumsq != self.group.order() {
            return Err(Error::InconsistentTable(format!(
                "sum of squared degrees {sumsq} != |G| = {}",
                self.group.order()
            )));
        }
        Ok(residual)
    }
}

/// Construct the character table of a supported group.
pub fn character_table(group: &Arc<FiniteGroup>) -> Result<Arc<CharacterTable>> {
    let table = match &group.kind {
        GroupKind::Cyclic(_) | GroupKind::Abelian(_) => abelian_table(group),
        GroupKind::Dihedral(n) => dihedral_table(group, *n),
        GroupKind::Affine(p) => affine_table(group, *p),
        GroupKind::Symmetric(n) => symmetric_table(group, *n),
        GroupKind::Explicit(t) => {
            let rows = t.character_table_values()?;
            let degrees: Vec<u64> = rows.iter().map(|r| r[0].re.round() as u64).collect();
            let labels = (0..rows.len()).map(|i| format!("chi{i}")).collect();
            CharacterTable { group: group.clone(), chars: rows, degrees, labels }
        }
    };
    table.validate()?;
    Ok(Arc::new(table))
}

fn abelian_factors(group: &FiniteGroup) -> Vec<u64> {
    match &group.kind {
        GroupKind::Cyclic(n) => vec![*n],
        GroupKind::Abelian(f) => f.clone(),
        _ => unreachable!(),
    }
}

fn abelian_table(group: &Arc<FiniteGroup>) -> CharacterTable {
    let factors = abelian_factors(group);
    let order = group.order() as usize;
    // both characters and classes are indexed by the same mixed-radix tuples
    let tuples: Vec<Vec<u64>> = group
        .classes()
        .iter()
        .map(|c| match &c.rep {
            super::Element::Tuple(t) => t.clone(),
            _ => unreachable!(),
        })
        .collect();
    let mut chars = Vec::with_capacity(order);
    for k in &tuples {
        let row: Vec<Complex64> = tuples
            .iter()
            .map(|e| {
                let phase: f64 = k
                    .iter()
                    .zip(e)
                    .zip(&factors)
                    .map(|((&ki, &ei), &d)| (ki * ei % d) as f64 / d as f64)
                    .sum();
                unit_root(phase)
            })
            .collect();
        chars.push(row);
    }
    let labels = tuples
        .iter()
        .map(|k| {
            format!(
                "chi({})",
                k.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            )
        })
        .collect();
    CharacterTable {
        group: group.clone(),
        degrees: vec![1; order],
        chars,
        labels,
    }
}

fn dihedral_table(group: &Arc<FiniteGroup>, n: u64) -> CharacterTable {
    // classes: e, rot j (j = 1..(n-1)/2), refl
    let half = ((n - 1) / 2) as usize;
    let nclass = half + 2;
    let mut chars = Vec::with_capacity(nclass);
    let mut degrees = Vec::with_capacity(nclass);
    let mut labels = Vec::with_capacity(nclass);
    // trivial
    chars.push(vec![Complex64::new(1.0, 0.0); nclass]);
    degrees.push(1);
    labels.push("triv".into());
    // sign of the quotient by rotations: +1 on rotations, -1 on reflections
    let mut sign = vec![Complex64::new(1.0, 0.0); nclass];
    sign[nclass - 1] = Complex64::new(-1.0, 0.0);
    chars.push(sign);
    degrees.push(1);
    labels.push("sgn".into());
    // 2-dimensional chi_h: 2 cos(2 pi h j / n) on rot j, 0 on reflections
    for h in 1..=half as u64 {
        let mut row = vec![Complex64::new(2.0, 0.0); nclass];
        for j in 1..=half as u64 {
            let v = 2.0 * (2.0 * std::f64::consts::PI * (h * j % n) as f64 / n as f64).cos();
            row[j as usize] = Complex64::new(v, 0.0);
        }
        row[nclass - 1] = Complex64::default();
        chars.push(row);
        degrees.push(2);
        labels.push(format!("chi{h}"));
    }
    CharacterTable { group: group.clone(), chars, degrees, labels }
}

fn affine_table(group: &Arc<FiniteGroup>, p: u64) -> CharacterTable {
    // classes: Id, U, T_c for c = 2..p-1
    let nclass = p as usize;
    // generator of (Z/p)^* and discrete logs
    let g = primitive_root(p);
    let mut dlog = vec![0u64; p as usize];
    let mut x = 1u64;
    for e in 0..p - 1 {
        dlog[x as usize] = e;
        x = x * g % p;
    }
    let mut chars = Vec::with_capacity(nclass);
    let mut degrees = Vec::with_capacity(nclass);
    let mut labels = Vec::with_capacity(nclass);
    // degree-1 rows: psi_k(Id) = psi_k(U) = 1, psi_k(T_c) = chi_k(c)
    for k in 0..p - 1 {
        let mut row = vec![Complex64::new(1.0, 0.0); nclass];
        for c in 2..p {
            row[c as usize] = unit_root((k * dlog[c as usize]) as f64 / (p - 1) as f64);
        }
        chars.push(row);
        degrees.push(1);
        labels.push(format!("psi{k}"));
    }
    // theta: (p-1, -1, 0, ..., 0)
    let mut theta = vec![Complex64::default(); nclass];
    theta[0] = Complex64::new((p - 1) as f64, 0.0);
    theta[1] = Complex64::new(-1.0, 0.0);
    chars.push(theta);
    degrees.push(p - 1);
    labels.push("theta".into());
    CharacterTable { group: group.clone(), chars, degrees, labels }
}

fn symmetric_table(group: &Arc<FiniteGroup>, n: u32) -> CharacterTable {
    let parts = symmetric::partitions(n);
    let chars = parts
        .iter()
        .map(|lam| {
            parts
                .iter()
                .map(|mu| Complex64::new(symmetric::mn_character(lam, mu) as f64, 0.0))
                .collect()
        })
        .collect();
    let degrees = parts.iter().map(|lam| symmetric::hook_degree(lam)).collect();
    let labels = parts
        .iter()
        .map(|lam| {
            format!(
                "[{}]",
                lam.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
            )
        })
        .collect();
    CharacterTable { group: group.clone(), chars, degrees, labels }
}

/// Smallest primitive root mod an odd prime p.
pub(crate) fn primitive_root(p: u64) -> u64 {
    let phi = p - 1;
    let mut factors = Vec::new();
    let mut m = phi;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            factors.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    'outer: for g in 2..p {
        for &q in &factors {
            if pow_mod(g, phi / q, p) == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!("no primitive root mod {p}");
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u128;
    let mut bb = b as u128 % m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * bb % m as u128;
        }
        bb = bb * bb % m as u128;
        e >>= 1;
    }
    let _ = &mut b;
    acc as u64
}

/// Multiplicative inverse wrapper re-exported for the Dirichlet machinery.
pub(crate) fn _mod_inverse(a: u64, m: u64) -> u64 {
    mod_inverse(a, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_table_invariants() {
        for n in [3u64, 5, 7, 9, 51] {
            let g = FiniteGroup::dihedral(n).unwrap();
            let t = character_table(&g).unwrap();
            assert!(t.validate().is_ok(), "n={n}");
            assert_eq!(t.degrees.iter().filter(|&&d| d == 1).count(), 2);
        }
    }

    #[test]
    fn affine_table_invariants() {
        for p in [3u64, 5, 7, 11, 13] {
            let g = FiniteGroup::affine(p).unwrap();
            let t = character_table(&g).unwrap();
            assert!(t.validate().is_ok(), "p={p}");
            // theta row: (p-1, -1, 0, ..., 0)
            let theta = t.chars.last().unwrap();
            assert_eq!(theta[0].re, (p - 1) as f64);
            assert_eq!(theta[1].re, -1.0);
            assert!(theta[2..].iter().all(|z| z.norm() == 0.0));
        }
    }

    #[test]
    fn affine5_degrees() {
        let g = FiniteGroup::affine(5).unwrap();
        let t = character_table(&g).unwrap();
        assert_eq!(t.degrees, vec![1, 1, 1, 1, 4]);
    }

    #[test]
    fn symmetric3_matches_dihedral3_up_to_permutation() {
        let s3 = character_table(&FiniteGroup::symmetric(3).unwrap()).unwrap();
        let d3 = character_table(&FiniteGroup::dihedral(3).unwrap()).unwrap();
        // both tables contain the same multiset of rows once classes are
        // matched by size (S3 classes: [1,1,1] size 1, [2,1] size 3, [3] size 2;
        // D3 classes: e size 1, rot size 2, refl size 3)
        // S3 class order is desc-lex: [3] (size 2), [2,1] (size 3), [1^3]
        // (size 1); reorder to D3's (e, rot, refl)
        let s3_perm = [2usize, 0, 1];
        let mut s3_rows: Vec<Vec<i64>> = s3
            .chars
            .iter()
            .map(|row| s3_perm.iter().map(|&j| row[j].re.round() as i64).collect())
            .collect();
        let mut d3_rows: Vec<Vec<i64>> = d3
            .chars
            .iter()
            .map(|row| row.iter().map(|z| z.re.round() as i64).collect())
            .collect();
        s3_rows.sort();
        d3_rows.sort();
        assert_eq!(s3_rows, d3_rows);
    }

    #[test]
    fn abelian_table_orthogonal() {
        for g in [
            FiniteGroup::cyclic(12).unwrap(),
            FiniteGroup::abelian(vec![2, 2]).unwrap(),
            FiniteGroup::abelian(vec![2, 4, 3]).unwrap(),
        ] {
            let t = character_table(&g).unwrap();
            assert!(t.validate().is_ok());
        }
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(primitive_root(3), 2);
        assert_eq!(primitive_root(5), 2);
        assert_eq!(primitive_root(7), 3);
        assert_eq!(primitive_root(13), 2);
    }
}
