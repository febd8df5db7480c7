//! Separation certificates: `c_0` sits strictly inside the conjugate gap.

use ulab::cyclo::{c_zero, separation_lower_bound, SeparationCertificate};
use ulab::Prime;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for p in [2, 3, 7] {
        let p = Prime::new(p)?;
        println!("p = {p}, c_0 = {}", c_zero(p));
        for n in 1..=3 {
            let cert = SeparationCertificate::new(p, n)?;
            let gap = cert.conjugate_gap.as_ref().map(|g| g.render(p)).unwrap_or_else(|| "-".into());
            println!(
                "  level {n}: degree {}, gap {gap}, c_0 below gap: {}",
                cert.degree,
                cert.c0_below_gap()?
            );
            let mut ms = vec![1, cert.degree.saturating_sub(1).max(1), cert.degree];
            ms.dedup();
            for m in ms {
                match separation_lower_bound(p, n, m)? {
                    Some(r) => println!("    m={m}: distance to degree-m algebraics >= {r}"),
                    None => println!("    m={m}: no bound, the root itself has degree <= m"),
                }
            }
        }
    }
    Ok(())
}
