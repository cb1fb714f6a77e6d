//! Two-path check of the explicit formula: the weighted prime sum on one
//! side, a sum over certified L-function zeros on the other.
//!
//! ```bash
//! cargo run --example explicit_formula
//! ```

use chebmoments::chebotarev::{explicit_formula_rhs, psi_eta, FrobeniusOracle};
use chebmoments::groups::{character_table, ClassFunction};
use chebmoments::sieve::PrimeTable;
use chebmoments::weights::builtin_eta;
use chebmoments::zeros::find_dirichlet_zeros;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let eta = builtin_eta("gaussian")?;
    let r = eta.support_radius(1e-12);
    let table = PrimeTable::new((1e3 * r.exp()).ceil() as u64);

    // zeta: psi_eta(x) + psi_eta(1/x) should match the zero-side sum
    let oracle = FrobeniusOracle::trivial()?;
    let ct = character_table(&oracle.group)?;
    let one = ClassFunction::one(&ct);
    let zs = find_dirichlet_zeros(1, 0, 60.0, 0.25, 1e-9)?;
    for x in [100.0, 1000.0] {
        let lhs = psi_eta(x, &oracle, &one, &eta, 1e-12, &table)?;
        let lhs_inv = psi_eta(1.0 / x, &oracle, &one, &eta, 1e-12, &table)?;
        let rhs = explicit_formula_rhs(x, &zs, None, &eta, 0.0, true, 0)?;
        println!(
            "zeta, x = {x}: prime side {:.9}, zero side {:.9}, diff {:.2e} (bars {:.2e})",
            (lhs.value + lhs_inv.value).re,
            rhs.value.re,
            (lhs.value + lhs_inv.value - rhs.value).norm(),
            lhs.bar + lhs_inv.bar + rhs.bar
        );
    }

    // the odd character mod 4 (conductor 4, odd parity)
    let oracle = FrobeniusOracle::cyclotomic(4)?;
    let ct = character_table(&oracle.group)?;
    let chi = ClassFunction::irreducible(&ct, 1);
    let zs4 = find_dirichlet_zeros(4, 1, 60.0, 0.25, 1e-9)?;
    let x = 1000.0;
    let lhs = psi_eta(x, &oracle, &chi, &eta, 1e-12, &table)?;
    let lhs_inv = psi_eta(1.0 / x, &oracle, &chi, &eta, 1e-12, &table)?;
    let rhs = explicit_formula_rhs(x, &zs4, None, &eta, 4f64.ln(), false, 1)?;
    println!(
        "chi mod 4, x = {x}: prime side {:.9}, zero side {:.9}, diff {:.2e}",
        (lhs.value + lhs_inv.value).re,
        rhs.value.re,
        (lhs.value + lhs_inv.value - rhs.value).norm()
    );
    Ok(())
}
