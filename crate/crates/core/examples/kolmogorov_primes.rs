//! Cylinder averages along the primes on a fair-coin shift.

use meanchaos::averaging::Observable;
use meanchaos::pinsker::kolmogorov_samples;
use meanchaos::seqgen::SequenceSpec;
use meanchaos::systems::SystemSpec;

fn main() -> meanchaos::Result<()> {
    let coin = SystemSpec::fair_coin();
    let f = Observable::cylinder(&[(0, 0)]);
    let r = kolmogorov_samples(&coin, &f, &SequenceSpec::Primes, 100_000, 100, 2024)?;
    println!("mu(cylinder) = {}", r.integral);
    println!(
        "max deviation over {} points = {:.4}",
        r.averages.len(),
        r.max_deviation
    );

    // a two-symbol cylinder on a biased coin
    let biased = SystemSpec::bernoulli(vec![0.3, 0.7]);
    let g = Observable::cylinder(&[(0, 1), (1, 1)]);
    let r = kolmogorov_samples(&biased, &g, &SequenceSpec::Primes, 100_000, 20, 2024)?;
    println!(
        "biased coin, [1 1]: mass {:.2}, max deviation {:.4}",
        r.integral, r.max_deviation
    );
    Ok(())
}
