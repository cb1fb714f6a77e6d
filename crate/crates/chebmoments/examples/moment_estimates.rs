//! Central moments of the windowed prime-counting deviation for
//! Q(zeta_5)/Q, compared against the zero-side tuple sums.
//!
//! ```bash
//! cargo run --example moment_estimates
//! ```

use chebmoments::chebotarev::FrobeniusOracle;
use chebmoments::conductors::cyclotomic;
use chebmoments::groups::classfn::fourier_coeff;
use chebmoments::groups::{character_table, ClassFunction};
use chebmoments::moments::{
    dtilde_truncated, DtildeChar, MomentEstimator, MomentRequest,
};
use chebmoments::sieve::PrimeTable;
use chebmoments::weights::{builtin_eta, builtin_phi};
use chebmoments::zeros::{find_dirichlet_zeros, DensityParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let oracle = FrobeniusOracle::cyclotomic(5)?;
    let ct = character_table(&oracle.group)?;
    // t = |G|1_e - 1: zero mean over the group, unit Fourier mass on each
    // non-trivial character
    let t = ClassFunction::delta_e_scaled(&ct)
        .linear_comb(1.0.into(), &ClassFunction::one(&ct), (-1.0).into());
    let eta = builtin_eta("gaussian")?;
    let phi = builtin_phi("triangle")?;

    let u_big = 8.0;
    let r = eta.support_radius(1e-12);
    let table = PrimeTable::new(((u_big + r).exp().ceil()) as u64);
    let req = MomentRequest {
        u_big,
        eta: &eta,
        phi: &phi,
        oracle: &oracle,
        t: &t,
        z: 0.0,
        quad_tol: 1e-8,
        support_tol: 1e-12,
    };
    let est = MomentEstimator::new(req, &table)?;
    for n in 1..=4u32 {
        let m = est.mtilde(n)?;
        println!("M~_{n}(U = {u_big}) = {:+.6e}  (bar {:.2e})", m.value, m.bar);
    }

    // zero-side: D~_2 from certified zeros of the mod-5 L-functions
    let (data, dg) = cyclotomic(5)?;
    let mut zerosets = Vec::new();
    for chi in 0..ct.n_chars() {
        if chi == ct.trivial_index() {
            zerosets.push(None);
        } else {
            zerosets.push(Some(find_dirichlet_zeros(5, chi, 60.0, 0.25, 1e-9)?));
        }
    }
    let chars: Vec<DtildeChar> = (0..ct.n_chars())
        .filter(|&chi| zerosets[chi].is_some())
        .map(|chi| DtildeChar {
            coeff: fourier_coeff(&t, chi),
            pos: zerosets[chi].as_ref().unwrap(),
            conj_pos: if dg.conjugate(chi) == chi {
                None
            } else {
                zerosets[dg.conjugate(chi)].as_ref()
            },
            density: DensityParams { log_a: data.log_a(chi), chi1_degk: 1.0 },
        })
        .collect();
    let d2 = dtilde_truncated(&chars, &eta, &phi, u_big, 2, 60.0)?;
    println!("D~_2(U = {u_big}) = {:+.6e}  (bar {:.2e})", d2.value, d2.bar);
    Ok(())
}
