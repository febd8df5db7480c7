//! Regularising a decreasing sequence against a jump function.

use ulab::exact::rat;
use ulab::lethargy::{check_jump_condition, regularize, JumpSpec, SequenceSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let eps: SequenceSpec = "power:2".parse()?;
    let k = JumpSpec::Square;
    let h = JumpSpec::shifted(k.clone());
    let reg = regularize(&eps, &h, 200)?;

    println!("eps = {eps}, h = {h}, sanitized h = {}", reg.sanitized_jump());
    println!("checkpoints {:?}, covered until {:?}", reg.checkpoints(), reg.covered_until());
    for pl in reg.plateaus() {
        println!("  plateau {} from {:?}: xi = {}", pl.index, pl.start, pl.value);
    }
    for n in [1, 2, 3, 7, 50, 200] {
        println!("  eps_{n} = {:<8} xi_{n} = {}", eps.value(n)?, reg.xi(n)?);
    }

    println!("xi_n <= 2 xi_(K(n+1)-1) for K = {k}, n <= 200: {}", check_jump_condition(&reg, &k, &rat(2, 1), 200)?);

    let deep = reg.plateau_below(&rat(1, 1_000_000), 100)?;
    println!("first plateau below 10^-6: #{} at {:?} with value {}", deep.index, deep.start, deep.value);
    Ok(())
}
