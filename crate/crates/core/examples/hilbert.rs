//! Hilbert series of quotient algebras and modules.

use lindef::field::Rationals;
use lindef::graded::{numerical_profile, GradedAlgebra, GradedModule};

fn main() -> lindef::Result<()> {
    let r = GradedAlgebra::parse(Rationals, &["x", "y", "z"], &["x*y", "y*z"])?;
    println!("R = {}", r.describe());
    println!("numerator of H_R: {}", r.hilbert_numerator());
    println!("dim R = {}", r.dim());

    let m = GradedModule::from_rows(r.clone(), vec![0, 1], &[vec!["x^2", "y"], vec!["z", "0"]])?;
    println!("M = {}", m.describe());
    println!("numerator of H_M: {}", m.hilbert_numerator());
    println!("H_M(0..6) = {:?}", m.hilbert_function(0, 6));
    let p = numerical_profile(&m)?;
    println!("dim {}  depth {}  e {}  nu {}", p.dim, p.depth, p.degree, p.nu);
    Ok(())
}
