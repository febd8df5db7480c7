//! Certified lower bounds for approximating roots of unity by algebraics of degree `< p^(n-1)(p-1)`.

use ulab::schemes::{cp_bound, cp_witness_table, CertifiedBound};
use ulab::Prime;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = Prime::new(2)?;
    for row in cp_witness_table(p, 6)? {
        let bound = match &row.bound {
            CertifiedBound::Krasner(r) => r.to_string(),
            CertifiedBound::ExactZero => "0".into(),
        };
        println!(
            "zeta_{{{}^{}}}: degree {:<3} route {:<7} bound {:<8} verified {}",
            p,
            row.level(),
            row.degree,
            row.bound.route(),
            bound,
            row.verified()
        );
    }
    // past the degree of the witness the bound is gone
    println!("{:?}", cp_bound(Prime::new(3)?, 2, 6)?);
    Ok(())
}
