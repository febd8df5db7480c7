//! Coordinate subspaces of `c_0(Q_p)`: the unit ball floor and a slow witness.

use ulab::exact::rat;
use ulab::lethargy::SequenceSpec;
use ulab::schemes::{model_a_deviation, model_a_error, power_of_ten, shapiro_witness, C0Vector};
use ulab::{AbsValue, Prime};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = Prime::new(3)?;
    let x = C0Vector::finite(
        p,
        vec![(1, AbsValue::one()), (2, AbsValue::from_int_exponent(2)), (5, AbsValue::from_int_exponent(1))],
    )?;
    for n in 0..=5 {
        println!("E(x, A_{n}) = {}", model_a_error(&x, n)?.render(p));
    }
    for n in [0, 10, 1000] {
        let d = model_a_deviation(p, n)?;
        println!("deviation over the unit ball at n={n}: {} (floor {} holds: {})", d.deviation.render(p), d.floor.render(p), d.floor_holds());
    }

    let eps = SequenceSpec::geometric(rat(1, 2))?;
    let w = shapiro_witness(&eps, Prime::new(2)?, 60)?;
    for row in w.rows.iter().step_by(10) {
        println!("n={:<3} eps={:<22} E=2^-{:<3} ratio={}", row.n, row.eps, row.error_exponent, row.ratio);
    }
    println!("ratio first exceeds 10^6 at n = {:?}", w.first_index_exceeding(&power_of_ten(6)));
    Ok(())
}
