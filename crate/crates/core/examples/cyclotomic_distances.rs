//! Metric data of `p^n`-th roots of unity in `C_p`.

use ulab::cyclo::{conjugate_distances, cyclotomic, dist_to_one, sigma_degree, verify_dist_via_newton};
use ulab::Prime;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for p in [2, 3, 5] {
        let p = Prime::new(p)?;
        println!("p = {p}");
        for n in 1..=4 {
            let d = dist_to_one(p, n)?;
            let conj: Vec<String> = conjugate_distances(p, n)?
                .iter()
                .map(|(a, k)| format!("{} x{k}", a.render(p)))
                .collect();
            println!(
                "  n={n} deg={:<3} |z-1|={:<10} newton={} conjugates: {}",
                sigma_degree(p, n)?,
                d.render(p),
                verify_dist_via_newton(p, n)?,
                conj.join(", ")
            );
        }
    }
    println!("Phi_9 = {}", cyclotomic(Prime::new(3)?, 2)?);
    Ok(())
}
