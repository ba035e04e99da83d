//! Close-pair densities `#{(i, j) : |a_i - a_j| <= L} / N^2` along three sequences.

use meanchaos::seqgen::{condition_star_profile, SequenceSpec};

fn main() -> meanchaos::Result<()> {
    let ladder = [1_000, 10_000, 100_000];
    for spec in [
        SequenceSpec::Primes,
        SequenceSpec::polynomial(&[0, 0, 1]),
        SequenceSpec::fractional_power(3, 2),
    ] {
        let report = condition_star_profile(&spec, 10, &ladder)?;
        println!("{}", report.sequence);
        for p in &report.checkpoints {
            println!(
                "  N = {:>6}  pairs = {:>8}  density = {:.3e}",
                p.n, p.count, p.density
            );
        }
        println!("  strictly decreasing: {}", report.is_strictly_decreasing());
    }
    Ok(())
}
