//! Weighted prime-power sums over Frobenius classes: the classical
//! Chebyshev function, its smooth windowed analogue, and Chebotarev
//! class proportions.
//!
//! ```bash
//! cargo run --example prime_sums
//! ```

use chebmoments::chebotarev::{psi_eta, psi_unweighted, FrobeniusOracle};
use chebmoments::groups::{character_table, ClassFunction};
use chebmoments::sieve::PrimeTable;
use chebmoments::weights::builtin_eta;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let table = PrimeTable::new(2_000_000);

    // classical psi(x) via the trivial extension
    let oracle = FrobeniusOracle::trivial()?;
    let ct = character_table(&oracle.group)?;
    let one = ClassFunction::one(&ct);
    for x in [100.0, 1000.0, 10000.0] {
        let psi = psi_unweighted(x, &oracle, &one, &table)?;
        println!("psi({x}) = {:.6} (x = {x})", psi.value.re);
    }

    // the smooth windowed sum concentrates near x and tracks x as well
    let eta = builtin_eta("gaussian")?;
    let oracle = FrobeniusOracle::cyclotomic(4)?;
    let ct = character_table(&oracle.group)?;
    let t = ClassFunction::delta_e_scaled(&ct);
    // the Gaussian window around x reaches up to x*e^R ~ 1.7e6
    let x = 1_000.0;
    let psi = psi_eta(x, &oracle, &t, &eta, 1e-12, &table)?;
    println!(
        "psi_eta({x}; Q(i)/Q, |G|1_e) = {:.6} + {:.2e}i, bar {:.2e}",
        psi.value.re, psi.value.im, psi.bar
    );

    // Frobenius class proportions for the splitting field of X^3 - 2:
    // Chebotarev predicts 1/6, 1/2, 1/3 for the three classes of S_3
    let oracle = FrobeniusOracle::kummer(2, 3)?;
    let mut counts = vec![0u64; oracle.group.class_count()];
    let mut total = 0u64;
    for &l in table.range(5, 1_000_000) {
        if let Some(ideals) = oracle.ideals_above(l)? {
            for term in ideals {
                if term.norm == l {
                    counts[term.class] += u64::from(term.count);
                }
            }
            total += 1;
        }
    }
    for (i, c) in counts.iter().enumerate() {
        println!(
            "class {i}: {:.4} of primes below 1e6 (size {})",
            *c as f64 / total as f64,
            oracle.group.classes()[i].size
        );
    }
    Ok(())
}
