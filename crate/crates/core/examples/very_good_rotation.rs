//! `A_N cos(2 pi x)` for the golden rotation, along `k` and `floor(k^{3/2})`.

use meanchaos::averaging::{average_trace, sample_seeds, very_good_deviation, Observable};
use meanchaos::rational::GOLDEN_CONJUGATE;
use meanchaos::seqgen::SequenceSpec;
use meanchaos::systems::{sample_point, SystemSpec};

fn main() -> meanchaos::Result<()> {
    let system = SystemSpec::rotation(GOLDEN_CONJUGATE);
    let f = Observable::cos(1);
    let seeds = sample_seeds(7, 10);
    for seq in [SequenceSpec::Naturals, SequenceSpec::fractional_power(3, 2)] {
        let dev = very_good_deviation(&system, &seeds, &f, &seq, 1_000_000)?;
        println!(
            "{:<24} max |A_N f - 0| over 10 points at N = 10^6: {dev:.2e}",
            seq.label()
        );
    }

    let x = sample_point(&system, seeds[0])?;
    let trace = average_trace(
        &system,
        &x,
        &f,
        &SequenceSpec::fractional_power(3, 2),
        &[10, 100, 1_000, 10_000, 100_000],
    )?;
    for c in &trace.checkpoints {
        println!("  N = {:>6}  A_N = {:+.6}", c.n, c.value);
    }
    Ok(())
}
