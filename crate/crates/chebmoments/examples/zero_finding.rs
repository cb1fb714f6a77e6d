//! Locate zeros of Dirichlet L-functions on the critical line, certify
//! completeness against the counting main term, and round-trip the zero
//! file format.
//!
//! ```bash
//! cargo run --example zero_finding
//! ```

use chebmoments::zeros::{
    find_dirichlet_zeros, ingest_zeros, write_zeroset, zero_count_window, DensityParams,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // the Riemann zeta function up to height 30
    let zs = find_dirichlet_zeros(1, 0, 30.0, 0.25, 1e-9)?;
    println!("zeta: {} ordinates below 30", zs.ordinates.len());
    for (gamma, mult) in &zs.ordinates {
        println!("  {gamma:.9} (multiplicity {mult})");
    }

    // short-window count against the density main term
    let dens = DensityParams::zeta();
    let (counted, main, disc) = zero_count_window(&zs, 14.0, 0.5, &dens)?;
    println!("window (14, 14.5]: counted {counted}, main term {main:.3}, discrepancy {disc:.3}");

    // the odd character mod 4: lowest zero near 6.02
    let zs4 = find_dirichlet_zeros(4, 1, 25.0, 0.25, 1e-9)?;
    println!(
        "chi mod 4: first ordinate {:.9}, {} below 25",
        zs4.ordinates[0].0,
        zs4.ordinates.len()
    );

    // file format round trip
    let text = write_zeroset(&zs4);
    let (back, warnings) = ingest_zeros(&text)?;
    assert_eq!(back.ordinates, zs4.ordinates);
    assert!(warnings.is_empty());
    println!("round trip: {} ordinates preserved", back.ordinates.len());
    Ok(())
}
