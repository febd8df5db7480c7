//! Expansions of a few rationals in `Q_5` and arithmetic between them.

use ulab::exact::rat;
use ulab::{PadicNumber, Prime};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = Prime::new(5)?;
    let x = PadicNumber::from_ratio(&rat(1, 3), p, 8)?;
    let y = PadicNumber::from_ratio(&rat(-25, 2), p, 8)?;

    for (name, v) in [("1/3", &x), ("-25/2", &y)] {
        println!("{name:>6} = {v}");
        println!("        v = {:?}, |.| = {}", v.valuation(), v.abs().render(p));
        println!("        digits = {:?}", v.unit_digits());
    }

    let sum = x.try_add(&y)?;
    let prod = x.try_mul(&y)?;
    let quot = y.try_div(&x)?;
    println!("sum      {sum}  (abs precision {})", sum.absolute_precision());
    println!("product  {prod}  |.| = {}", prod.abs().render(p));
    println!("quotient {quot}  ~ {}", quot.representative());

    // 5^-1 .. 5^2 window of 1/3 + 5^-1
    let z = PadicNumber::from_ratio(&rat(8, 15), p, 6)?;
    println!("digits of 8/15 from 5^-1 to 5^2: {:?}", z.digit_window(-1, 2)?);
    Ok(())
}
