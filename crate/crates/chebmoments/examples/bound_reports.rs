//! The headline inequality reports: the even-moment lower bound with its
//! correction and plumbing terms, and the oscillation report.
//!
//! ```bash
//! cargo run --example bound_reports
//! ```

use chebmoments::conductors::cyclotomic;
use chebmoments::groups::classfn::{fourier_coeff, lambda_norm, s_t};
use chebmoments::groups::{character_table, ClassFunction};
use chebmoments::moments::{omega_report, theorem_main_bound, MainBoundInput, OmegaInput};
use chebmoments::weights::builtin_eta;
use chebmoments::zeros::{find_dirichlet_zeros, variance_nu, w4, CharZeroData, DensityParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (data, _) = cyclotomic(5)?;
    let ct = character_table(&data.table.group)?;
    let t = ClassFunction::delta_e_scaled(&ct)
        .linear_comb(1.0.into(), &ClassFunction::one(&ct), (-1.0).into());
    let eta = builtin_eta("gaussian")?;

    // variance and fourth-moment weight from certified zeros
    let mut char_data = Vec::new();
    let mut zerosets = Vec::new();
    for chi in 0..ct.n_chars() {
        if chi == ct.trivial_index() {
            zerosets.push(None);
        } else {
            zerosets.push(Some(find_dirichlet_zeros(5, chi, 60.0, 0.25, 1e-9)?));
        }
    }
    for chi in 0..ct.n_chars() {
        if let Some(zs) = &zerosets[chi] {
            char_data.push(CharZeroData {
                coeff: fourier_coeff(&t, chi),
                zeros: zs,
                density: DensityParams { log_a: data.log_a(chi), chi1_degk: 1.0 },
            });
        }
    }
    let (nu, _) = variance_nu(&char_data, &eta)?;
    let w4v = w4(&char_data, &eta)?;
    let s = s_t(&t, None)?;

    let report = theorem_main_bound(&MainBoundInput {
        m: 1,
        nu,
        w4: w4v,
        lambda11: lambda_norm(&t, 1, 1, None),
        lambda12: lambda_norm(&t, 1, 2, None),
        s_t_plus: s.value,
        alpha_h: eta.alpha_h,
        rd_l: data.log_rd_l.exp(),
        deg_f: 1.0,
        u_big: 10.0,
        kappa_eta: 1.0,
    });
    println!("-- even-moment lower bound, m = 1 --\n{report}");

    let omega = omega_report(&OmegaInput {
        lambda11: lambda_norm(&t, 1, 1, None),
        lambda12: lambda_norm(&t, 1, 2, None),
        s_t_plus: s.value,
        rd_l: data.log_rd_l.exp(),
        deg_f: 1.0,
        kappa_prime: 1.0,
    });
    println!("-- oscillation report --\n{omega}");
    Ok(())
}
