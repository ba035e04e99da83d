//! Sample spread of `A_K` along the primes and along `2^k`.

use meanchaos::averaging::Observable;
use meanchaos::pinsker::lacunary_dispersion_contrast;
use meanchaos::seqgen::SequenceSpec;
use meanchaos::systems::SystemSpec;

fn main() -> meanchaos::Result<()> {
    let r = lacunary_dispersion_contrast(
        &SystemSpec::fair_coin(),
        &Observable::cylinder(&[(0, 0)]),
        &SequenceSpec::Primes,
        &SequenceSpec::Lacunary { base: 2 },
        60,
        200,
        100_000,
        17,
    )?;
    println!(
        "K = {}: primes {:.4}, 2^k {:.4}",
        r.terms, r.good_at_terms, r.lacunary_at_terms
    );
    println!(
        "K = {}: primes {:.4}",
        r.long_horizon, r.good_at_long_horizon
    );
    match r.lacunary_cap {
        Some(cap) => println!("2^k stops after {cap} representable terms"),
        None => println!("lacunary sequence reaches the long horizon"),
    }
    Ok(())
}
