//! Averaging `A_N f` over sampled points recovers `integral f`.

use meanchaos::averaging::{disintegration_consistency, Observable};
use meanchaos::rational::GOLDEN_CONJUGATE;
use meanchaos::seqgen::SequenceSpec;
use meanchaos::systems::SystemSpec;

fn main() -> meanchaos::Result<()> {
    let gap = disintegration_consistency(
        &SystemSpec::fair_coin(),
        &Observable::cylinder(&[(0, 0)]),
        &SequenceSpec::Primes,
        10_000,
        200,
        5,
    )?;
    println!("coin, cylinder [0], primes:     gap = {gap:.2e}");

    let gap = disintegration_consistency(
        &SystemSpec::rotation(GOLDEN_CONJUGATE),
        &Observable::cos(1),
        &SequenceSpec::Naturals,
        100_000,
        50,
        5,
    )?;
    println!("golden rotation, cos, naturals: gap = {gap:.2e}");
    Ok(())
}
