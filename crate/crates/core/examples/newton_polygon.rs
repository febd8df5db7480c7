//! Newton polygon of a polynomial over `Q`, read 3-adically.

use ulab::exact::rat;
use ulab::poly::{eisenstein_check, newton_polygon};
use ulab::{PadicPoly, Prime};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = Prime::new(3)?;
    let f = PadicPoly::new(p, vec![rat(27, 1), rat(9, 2), rat(1, 1), rat(0, 1), rat(1, 9)]);
    let poly = newton_polygon(&f)?;

    println!("f = {f}");
    println!("points:   {:?}", fmt_points(poly.points()));
    println!("vertices: {:?}", fmt_points(poly.vertices()));
    for seg in poly.segments() {
        println!("  root valuation {} with multiplicity {}", seg.root_valuation(), seg.length);
    }

    let g = PadicPoly::from_ints(p, &[6, 3, 9, 1]);
    println!("g = {g}, eisenstein: {}", eisenstein_check(&g));
    for (v, k) in newton_polygon(&g)?.root_valuations() {
        println!("  {k} roots of valuation {v}");
    }
    Ok(())
}

fn fmt_points(pts: &[(usize, num_rational::BigRational)]) -> Vec<String> {
    pts.iter().map(|(i, v)| format!("({i},{v})")).collect()
}
