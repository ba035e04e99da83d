//! Generic pairs of a fair-coin shift stay apart on average; constructed pairs do not.

use meanchaos::chaos::{
    build_scrambled_family, random_tuple_scan, verify_scrambled, ScrambleParams,
};
use meanchaos::seqgen::SequenceSpec;
use meanchaos::systems::SystemSpec;

fn main() -> meanchaos::Result<()> {
    let coin = SystemSpec::fair_coin();
    let seq = SequenceSpec::Naturals;
    let tuples = random_tuple_scan(&coin, &seq, 2, 100, 10_000, 99)?;
    let lowest = tuples
        .iter()
        .map(|t| t.min_average)
        .fold(f64::INFINITY, f64::min);
    println!("random pairs: smallest min-average over 100 pairs = {lowest:.4}");

    let family = build_scrambled_family(&seq, ScrambleParams::new(2, 10, 3, 48))?;
    let v = verify_scrambled(&family, &family.system(), &seq)?;
    println!(
        "constructed pair: liminf proxy = {:.4}",
        v.report.liminf_proxy
    );
    Ok(())
}
