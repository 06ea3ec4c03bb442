//! Koszul algebras, Koszul depth and base change.

use lindef::complexes::minimal_resolution;
use lindef::field::PrimeField;
use lindef::graded::{GradedAlgebra, GradedModule};
use lindef::linearity::{base_change, is_koszul_algebra, koszul_depth, linearity_defect_of_complex};

fn main() -> lindef::Result<()> {
    let gf = PrimeField::new(101)?;
    let algebras = [
        GradedAlgebra::polynomial(gf, &["x", "y", "z"])?,
        GradedAlgebra::parse(gf, &["x", "y"], &["x^2", "x*y"])?,
        GradedAlgebra::parse(gf, &["x"], &["x^3"])?,
        GradedAlgebra::parse(gf, &["x", "y", "z"], &["x^2 + y*z", "y^2 + x*z"])?,
    ];
    for a in &algebras {
        println!("{:<40} {:?}", a.describe(), is_koszul_algebra(a, 6)?);
    }

    let s = algebras[0].clone();
    let m = GradedModule::cyclic_parse(s.clone(), &["x*y"])?;
    let ring = s.ring();
    let depth = koszul_depth(&[ring.var(0), ring.var(2)], &m)?;
    println!("\nKoszul depth of (x, z) on S/(xy): {depth}");

    let target = s.quotient(&[ring.parse("x^2")?])?;
    let f = minimal_resolution(&m, 5)?.complex;
    let g = base_change(&f, &target)?;
    println!("S/(x^2) (x) F: ld = {}", linearity_defect_of_complex(&g, 4)?.status);
    Ok(())
}
