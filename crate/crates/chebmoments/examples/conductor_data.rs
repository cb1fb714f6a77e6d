//! Artin conductors from ramification filtrations: cyclotomic and radical
//! built-ins, the conductor-discriminant identity, and the two-sided
//! brackets on log A(chi).
//!
//! ```bash
//! cargo run --example conductor_data
//! ```

use chebmoments::conductors::{averaged_bounds, cyclotomic, kummer, pointwise_bounds};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Q(zeta_5)/Q: Artin conductors coincide with Dirichlet conductors
    let (data, dg) = cyclotomic(5)?;
    println!("Q(zeta_5): log rd_L = {:.6}", data.log_rd_l);
    for chi in 0..data.table.n_chars() {
        println!(
            "  chi_{chi}: A = {:.0} (Dirichlet conductor {})",
            data.log_a(chi).exp(),
            dg.conductor(chi)
        );
    }

    // the splitting field of X^3 - 2: d_L = 3^7 * 2^4
    let data = kummer(2, 3)?;
    let log_dl: f64 = (0..data.table.n_chars())
        .map(|chi| data.table.degrees[chi] as f64 * data.log_a(chi))
        .sum();
    println!(
        "K_{{2,3}}: d_L = {:.1} (3^7*2^4 = {})",
        log_dl.exp(),
        3u64.pow(7) * 2u64.pow(4)
    );

    // pointwise and averaged brackets on the conductor logarithms
    for chi in 0..data.table.n_chars() {
        if chi == data.table.trivial_index() {
            continue;
        }
        let b = pointwise_bounds(&data, chi);
        println!(
            "  chi_{chi}: {:.3} <= log A = {:.3} <= {:.3}",
            b.lower,
            data.log_a(chi),
            b.upper
        );
    }
    let c = vec![1.0; data.table.n_chars()];
    let avg = averaged_bounds(&c, &data)?;
    println!(
        "averaged: {:.3} <= {:.3} <= {:.3} (S(c) = {:.3})",
        avg.lower, avg.ratio, avg.upper, avg.s_of_c
    );
    Ok(())
}
