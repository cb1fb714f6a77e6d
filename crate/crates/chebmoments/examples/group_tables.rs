//! Build character tables of the built-in group families and check the
//! orthogonality relations.
//!
//! ```bash
//! cargo run --example group_tables
//! ```

use chebmoments::groups::io::write_table;
use chebmoments::groups::{character_table, FiniteGroup};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // a dihedral group: 2 linear characters and (n-1)/2 of degree 2
    let d5 = FiniteGroup::dihedral(5)?;
    let table = character_table(&d5)?;
    println!("{}", write_table(&table));

    // the affine group over F_7: six linear characters and one of degree 6
    let aff7 = FiniteGroup::affine(7)?;
    let table = character_table(&aff7)?;
    println!(
        "Aff(F_7): {} classes, degrees {:?}, orthogonality residual {:.2e}",
        aff7.class_count(),
        table.degrees,
        table.orthogonality_residual()
    );

    // symmetric groups via the Murnaghan-Nakayama rule
    for n in 3..=8u32 {
        let sn = FiniteGroup::symmetric(n)?;
        let table = character_table(&sn)?;
        let sum_sq: u64 = table.degrees.iter().map(|&d| d * d).sum();
        println!(
            "S_{n}: {} irreducibles, sum chi(1)^2 = {} = |G|, residual {:.2e}",
            table.n_chars(),
            sum_sq,
            table.orthogonality_residual()
        );
        assert_eq!(sum_sq, sn.order());
    }
    Ok(())
}
