//! Prefixes of every sequence family, and what happens at the 63-bit edge.

use meanchaos::seqgen::{generate_prefix, is_lacunary, SequenceSpec};
use meanchaos::Error;

fn main() -> meanchaos::Result<()> {
    let families = [
        SequenceSpec::Naturals,
        SequenceSpec::Primes,
        SequenceSpec::polynomial(&[0, 0, 1]),
        SequenceSpec::PolynomialFloor {
            coefficients: vec!["1/2".parse()?, "0".parse()?, "3/2".parse()?],
        },
        SequenceSpec::fractional_power(3, 2),
        SequenceSpec::fractional_power(1, 2),
        SequenceSpec::ThueMorseReturnTimes,
        SequenceSpec::Lacunary { base: 3 },
    ];
    for spec in &families {
        println!("{:<28} {:?}", spec.label(), generate_prefix(spec, 12)?);
    }

    let powers = generate_prefix(&SequenceSpec::Lacunary { base: 2 }, 62)?;
    println!(
        "2^k is lacunary with ratio 2: {}",
        is_lacunary(&powers, 2.0)
    );
    match generate_prefix(&SequenceSpec::Lacunary { base: 2 }, 63) {
        Err(Error::Overflow { index }) => println!("2^k overflows at k = {index}"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
