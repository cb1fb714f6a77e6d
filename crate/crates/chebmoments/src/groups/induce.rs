//! Subgroup embeddings and induction of class functions, with two
//! independent paths: the Frobenius-reciprocity Fourier path through the
//! restriction table, and the direct conjugation formula
//! t⁺(g) = Σ_{aG : a⁻¹ga ∈ G} t(a⁻¹ga) when element data is available.

use std::collections::HashMap;
use std::sync::Arc;

use num_complex::Complex64;

use super::classfn::ClassFunction;
use super::table::CharacterTable;
use super::Element;
use crate::error::{Error, Result};

/// Embedding of a subgroup G into an ambient group G⁺.
#[derive(Debug, Clone)]
pub struct SubgroupEmbedding {
    pub sub: Arc<CharacterTable>,
    pub amb: Arc<CharacterTable>,
    /// restriction[amb χ][sub ψ] = multiplicity of ψ in χ|_G
    pub restriction: Vec<Vec<u64>>,
    /// image in G⁺ of each subgroup element (subgroup enumeration order),
    /// when both groups are element-enumerable.
    pub embed_map: Option<Vec<Element>>,
}

impl SubgroupEmbedding {
    /// Build from an element-level injection G -> G⁺; verifies the
    /// homomorphism property and computes the restriction table.
    pub fn from_element_map(
        sub: &Arc<CharacterTable>,
        amb: &Arc<CharacterTable>,
        map: impl Fn(&Element) -> Element,
    ) -> Result<Self> {
        if amb.group.order() % sub.group.order() != 0 {
            return Err(Error::InconsistentEmbedding(
                "subgroup order does not divide ambient order".into(),
            ));
        }
        let sub_els = sub.group.elements()?;
        let images: Vec<Element> = sub_els.iter().map(&map).collect();
        // injectivity
        let distinct: std::collections::HashSet<&Element> = images.iter().collect();
        if distinct.len() != images.len() {
            return Err(Error::InconsistentEmbedding("map is not injective".into()));
        }
        // homomorphism (sampled exhaustively; subgroup sizes are small here)
        for (a, ia) in sub_els.iter().zip(&images) {
            for (b, ib) in sub_els.iter().zip(&images) {
                let lhs = map(&sub.group.mul(a, b));
                let rhs = amb.group.mul(ia, ib);
                if lhs != rhs {
                    return Err(Error::InconsistentEmbedding(
                        "map is not a homomorphism".into(),
                    ));
                }
            }
        }
        // restriction table via inner products over subgroup classes
        let order = sub.group.order() as f64;
        // value of each ambient character on each subgroup class
        let restricted: Vec<Vec<Complex64>> = amb
            .chars
            .iter()
            .map(|chi| {
                sub.group
                    .classes()
                    .iter()
                    .map(|cl| {
                        let img = map(&cl.rep);
                        chi[amb.group.class_of(&img)]
                    })
                    .collect()
            })
            .collect();
        let mut restriction = Vec::with_capacity(amb.n_chars());
        for (ci, row) in restricted.iter().enumerate() {
            let mut mults = Vec::with_capacity(sub.n_chars());
            let mut degsum = 0u64;
            for psi in 0..sub.n_chars() {
                let mut ip = Complex64::default();
                for (k, cl) in sub.group.classes().iter().enumerate() {
                    ip += row[k] * sub.chars[psi][k].conj() * cl.size as f64;
                }
                ip /= order;
                let m = ip.re.round();
                if (ip - m).norm() > 1e-8 || m < 0.0 {
                    return Err(Error::InconsistentEmbedding(format!(
                        "non-integral restriction multiplicity for ambient character {ci}"
                    )));
                }
                degsum += m as u64 * sub.degrees[psi];
                mults.push(m as u64);
            }
            if degsum != amb.degrees[ci] {
                return Err(Error::InconsistentEmbedding(format!(
                    "restricted degrees sum to {degsum} != {}",
                    amb.degrees[ci]
                )));
            }
            restriction.push(mults);
        }
        Ok(Self {
            sub: sub.clone(),
            amb: amb.clone(),
            restriction,
            embed_map: Some(images),
        })
    }

    /// Identity embedding G = G⁺.
    pub fn identity(table: &Arc<CharacterTable>) -> Self {
        let n = table.n_chars();
        let restriction = (0..n)
            .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
            .collect();
        Self {
            sub: table.clone(),
            amb: table.clone(),
            restriction,
            embed_map: None,
        }
    }

    pub fn index(&self) -> u64 {
        self.amb.group.order() / self.sub.group.order()
    }
}

/// Induce t from G to G⁺ via Frobenius reciprocity:
/// t̂⁺(χ) = Σ_ψ mult(ψ in χ|_G) · t̂(ψ), then Fourier inversion for values.
pub fn induce(t: &ClassFunction, emb: &SubgroupEmbedding) -> Result<ClassFunction> {
    if !Arc::ptr_eq(&t.table, &emb.sub) {
        return Err(Error::GroupMismatch);
    }
    let fourier_plus: Vec<Complex64> = emb
        .restriction
        .iter()
        .map(|mults| {
            mults
                .iter()
                .zip(&t.fourier)
                .map(|(&m, f)| m as f64 * f)
                .sum()
        })
        .collect();
    let values: Vec<Complex64> = (0..emb.amb.group.class_count())
        .map(|k| {
            fourier_plus
                .iter()
                .zip(&emb.amb.chars)
                .map(|(f, chi)| f * chi[k])
                .sum()
        })
        .collect();
    ClassFunction::from_values(&emb.amb, values)
}

/// Direct conjugation induction (requires element data on both sides):
/// t⁺(g) = Σ over coset representatives a of G in G⁺ with a⁻¹ g a ∈ G of
/// t(a⁻¹ g a).
pub fn induce_direct(t: &ClassFunction, emb: &SubgroupEmbedding) -> Result<ClassFunction> {
    let images = emb.embed_map.as_ref().ok_or_else(|| {
        Error::InconsistentEmbedding("no element data for direct induction".into())
    })?;
    let sub_els = emb.sub.group.elements()?;
    let amb = &emb.amb.group;
    let amb_els = amb.elements()?;
    // map image element -> subgroup class
    let img_class: HashMap<&Element, usize> = images
        .iter()
        .zip(&sub_els)
        .map(|(img, h)| (img, emb.sub.group.class_of(h)))
        .collect();
    // left coset representatives
    let mut covered: std::collections::HashSet<Element> = Default::default();
    let mut reps = Vec::new();
    for a in &amb_els {
        if covered.contains(a) {
            continue;
        }
        reps.push(a.clone());
        for h in images {
            covered.insert(amb.mul(a, h));
        }
    }
    debug_assert_eq!(reps.len() as u64, emb.index());
    let values: Vec<Complex64> = amb
        .classes()
        .iter()
        .map(|cl| {
            let mut acc = Complex64::default();
            for a in &reps {
                let x = amb.mul(&amb.mul(&amb.inv(a), &cl.rep), a);
                if let Some(&c) = img_class.get(&x) {
                    acc += t.values[c];
                }
            }
            acc
        })
        .collect();
    ClassFunction::from_values(&emb.amb, values)
}
