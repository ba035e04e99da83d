//! Within-fiber dispersion on coin x rotation, frozen and irrational.

use meanchaos::averaging::Observable;
use meanchaos::pinsker::fiber_constancy_report;
use meanchaos::rational::{Fraction128, GOLDEN_CONJUGATE};
use meanchaos::seqgen::SequenceSpec;
use meanchaos::systems::SystemSpec;

fn main() -> meanchaos::Result<()> {
    let coin = SystemSpec::fair_coin();
    let f = Observable::product(vec![Observable::cylinder(&[(0, 0)]), Observable::cos(1)]);
    let thetas: Vec<Fraction128> = ["0", "1/3", "1/4"]
        .iter()
        .map(|s| s.parse())
        .collect::<Result<_, _>>()?;

    // alpha = 1/2 along 2k: the circle coordinate never moves
    let frozen = fiber_constancy_report(
        &coin,
        "1/2".parse()?,
        &thetas,
        &f,
        &SequenceSpec::polynomial(&[0, 2]),
        10_000,
        100,
        1,
    )?;
    println!("alpha = 1/2, a_k = 2k");
    for fib in &frozen.fibers {
        println!(
            "  theta = {:.4}  mean = {:+.4}  dispersion = {:.4}",
            fib.theta.to_f64(),
            fib.mean,
            fib.dispersion
        );
    }

    let moving = fiber_constancy_report(
        &coin,
        GOLDEN_CONJUGATE,
        &thetas,
        &f,
        &SequenceSpec::Naturals,
        10_000,
        100,
        1,
    )?;
    println!("golden alpha, a_k = k");
    for fib in &moving.fibers {
        println!(
            "  theta = {:.4}  mean = {:+.4}  dispersion = {:.4}",
            fib.theta.to_f64(),
            fib.mean,
            fib.dispersion
        );
    }
    Ok(())
}
