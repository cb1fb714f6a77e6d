//! Fourier analysis of class functions: the support measure S_t, the
//! lambda norms, and induction from a subgroup.
//!
//! ```bash
//! cargo run --example class_functions
//! ```

use chebmoments::groups::classfn::{fourier_coeff, lambda_norm, s_t};
use chebmoments::groups::induce::{induce, SubgroupEmbedding};
use chebmoments::groups::{character_table, ClassFunction, Element, FiniteGroup};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // S_t for the scaled identity indicator on dihedral groups: 1/(2n-1)
    for n in [3u64, 5, 7, 9, 11] {
        let g = FiniteGroup::dihedral(n)?;
        let ct = character_table(&g)?;
        let t = ClassFunction::delta_e_scaled(&ct);
        let s = s_t(&t, None)?;
        println!(
            "D_{n}: S_t(|G|1_e) = {:.12} (closed form {:.12}), argmax class {}",
            s.value,
            1.0 / (2.0 * n as f64 - 1.0),
            s.argmax_class
        );
    }

    // lambda norms control the variance and fourth-moment bounds
    let g = FiniteGroup::affine(7)?;
    let ct = character_table(&g)?;
    let t = ClassFunction::delta_e_scaled(&ct);
    println!(
        "Aff(F_7), t = |G|1_e: lambda_11 = {}, lambda_12 = {}, lambda_14 = {}",
        lambda_norm(&t, 1, 1, None),
        lambda_norm(&t, 1, 2, None),
        lambda_norm(&t, 1, 4, None)
    );
    for chi in 0..ct.n_chars() {
        println!("  t_hat(chi_{chi}) = {}", fourier_coeff(&t, chi));
    }

    // induce 1_e from the rotation subgroup C_3 < D_3
    let sub = FiniteGroup::cyclic(3)?;
    let sub_ct = character_table(&sub)?;
    let amb = FiniteGroup::dihedral(3)?;
    let amb_ct = character_table(&amb)?;
    let emb = SubgroupEmbedding::from_element_map(&sub_ct, &amb_ct, |e| match e {
        Element::Tuple(v) => Element::Dihedral { flip: false, rot: v[0] },
        _ => unreachable!(),
    })?;
    let t_sub = ClassFunction::class_indicator(&sub_ct, 0);
    let t_plus = induce(&t_sub, &emb)?;
    println!("Ind_{{C_3}}^{{D_3}} 1_e = {:?}", t_plus.values);
    Ok(())
}
