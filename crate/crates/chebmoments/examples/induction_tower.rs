//! The induction identity on the tower Q(zeta_8)/Q(i)/Q: the weighted
//! prime-ideal sum over Q(i) for a class function t equals the rational
//! prime sum for its induction t+.
//!
//! ```bash
//! cargo run --example induction_tower
//! ```

use chebmoments::chebotarev::induction_check;
use chebmoments::groups::{character_table, ClassFunction, FiniteGroup};
use chebmoments::sieve::PrimeTable;
use chebmoments::weights::builtin_eta;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // the Gaussian window around x = 1e4 reaches up to x*e^R ~ 1.7e7
    let table = PrimeTable::new(17_000_000);
    let sub = FiniteGroup::cyclic(2)?;
    let ct = character_table(&sub)?;
    let eta = builtin_eta("gaussian")?;

    for (label, t) in [
        ("1_e", ClassFunction::class_indicator(&ct, 0)),
        ("|G|1_e", ClassFunction::delta_e_scaled(&ct)),
        ("sign character", ClassFunction::irreducible(&ct, 1)),
    ] {
        for x in [1e3, 1e4] {
            let (lhs, rhs, diff) = induction_check(x, &t, &eta, &table)?;
            println!(
                "t = {label}, x = {x}: over Q(i) {:.9}, induced over Q {:.9}, |diff| {:.2e}",
                lhs.re, rhs.re, diff
            );
        }
    }
    Ok(())
}
