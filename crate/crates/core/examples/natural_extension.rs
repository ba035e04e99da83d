//! Lifting a one-sided coin sequence to its natural extension.

use meanchaos::systems::{natural_extension_lift, sample_point, Point, SystemSpec};

fn main() -> meanchaos::Result<()> {
    let coin = SystemSpec::fair_coin();
    let ext = SystemSpec::natural_extension(coin.clone());
    let x = sample_point(&coin, 3)?;
    let base = x.as_symbolic().expect("coin points are symbolic");
    let lifted = natural_extension_lift(&coin, base, 4)?;

    let word = |p: &meanchaos::systems::SymbolicPoint, from: i64| -> String {
        (from..from + 16)
            .map(|i| char::from(b'0' + p.symbol_at(i)))
            .collect()
    };
    println!("x       = {}", word(base, 0));
    println!("pi(lift) = {}", word(&lifted.projection()?, 0));
    println!("x_2     = {}", word(&lifted.component(2)?, 0));

    let y = Point::from(lifted.clone());
    let shifted = ext.iterate(&y, 1)?;
    let d = ext.distance(&y, &shifted)?;
    println!("d(x~, T x~) = {:.6} (+/- {:.1e})", d.value, d.error);
    Ok(())
}
