//! The combinatorial pairing sums S_2l: brute force over ordinate tuples
//! versus the factorial lower bound, and the Frobenius-Schur case split.
//!
//! ```bash
//! cargo run --example pairing_sums
//! ```

use num_complex::Complex64;

use chebmoments::moments::{
    pairing_sum_check, s2l_bruteforce, s2l_lower_bound, GammaMultiset, SchurCase,
};
use chebmoments::weights::builtin_eta;
use chebmoments::zeros::find_dirichlet_zeros;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // a small multiset of positive ordinates with complex amplitudes
    let g = GammaMultiset::new(vec![
        (1.3, 1, Complex64::new(0.8, 0.4)),
        (2.7, 2, Complex64::new(-0.5, 0.9)),
        (4.1, 1, Complex64::new(1.1, 0.0)),
    ])?;
    for ell in 1..=3u32 {
        let s = s2l_bruteforce(&g, ell)?;
        let bound = s2l_lower_bound(&g, ell);
        println!(
            "l = {ell}: S_2l = {:.9} (Im {:.1e}), lower bound {:.9}",
            s.re,
            s.im.abs(),
            bound
        );
        assert!(s.re >= bound - 1e-12);
    }

    // pairing sums over actual L-function ordinates: the odd character
    // mod 4 is self-dual (real type)
    let eta = builtin_eta("gaussian")?;
    // keep the ordinate set small: the tuple enumeration is exponential
    let zs = find_dirichlet_zeros(4, 1, 16.0, 0.25, 1e-9)?;
    let check = pairing_sum_check(&zs.ordinates, &eta, 2, SchurCase::RealType, 1.0)?;
    println!(
        "chi mod 4, l = 2, real type: lhs {:.3e} >= rhs {:.3e} (b_0 = {:.3e})",
        check.lhs, check.rhs, check.b0
    );
    Ok(())
}
