//! Empirical distribution of `T^{a_k} x` over a finite partition.

use meanchaos::averaging::{empirical_measure, exact_weight, Partition};
use meanchaos::rational::GOLDEN_CONJUGATE;
use meanchaos::seqgen::SequenceSpec;
use meanchaos::systems::{sample_point, SystemSpec};

fn main() -> meanchaos::Result<()> {
    let rotation = SystemSpec::rotation(GOLDEN_CONJUGATE);
    let x = sample_point(&rotation, 0)?;
    let m = empirical_measure(
        &rotation,
        &x,
        &Partition::dyadic_arcs(3),
        &SequenceSpec::Primes,
        100_000,
    )?;
    println!("golden rotation along primes, 8 arcs:");
    for (j, w) in m.weights.iter().enumerate() {
        println!("  arc {j}: {w:.5}");
    }

    let coin = SystemSpec::fair_coin();
    let y = sample_point(&coin, 0)?;
    let m = empirical_measure(
        &coin,
        &y,
        &Partition::cylinders(2, 2),
        &SequenceSpec::polynomial(&[0, 0, 1]),
        10_000,
    )?;
    println!("coin along k^2, length-2 cylinders:");
    for j in 0..m.counts.len() {
        println!("  cell {j}: {}", exact_weight(&m, j));
    }
    Ok(())
}
