//! The dichotomy recurrence, the rate exponent and its cascade.

use ulab::exact::rat;
use ulab::lethargy::{dichotomy_bound, dichotomy_cascade, dichotomy_recurrence, rate_exponent, JumpSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let r: Vec<String> = dichotomy_recurrence(8).iter().map(|x| x.to_string()).collect();
    println!("r_s: {}", r.join(" "));

    for c in [rat(2, 1), rat(3, 1), rat(4, 1), rat(5, 2)] {
        println!("C = {c}: 1/log2 C in {}", rate_exponent(&c)?);
        for k in [1, 16, 100] {
            println!("  k = {k:<4} bound {}", dichotomy_bound(&c, &rat(1, 1), k)?);
        }
    }

    let trace = dichotomy_cascade(&rat(1, 4), &JumpSpec::Square, 2, 7)?;
    for step in &trace.steps {
        println!("s={} index {:?} r_s={} exponent {}", step.s, step.index, step.r, step.exponent);
    }
    println!("cascade matches recurrence: {}", trace.matches_recurrence());
    Ok(())
}
