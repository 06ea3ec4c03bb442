//! Linear parts and linearity defects, including a tensor product whose
//! defect drops to zero.

use lindef::complexes::{koszul_complex, minimal_resolution, tensor};
use lindef::field::PrimeField;
use lindef::graded::{GradedAlgebra, GradedModule};
use lindef::linearity::{linear_part, linearity_defect, linearity_defect_of_complex};

fn main() -> lindef::Result<()> {
    let r = GradedAlgebra::parse(PrimeField::new(101)?, &["x", "y"], &["x^2", "x*y"])?;
    let f = koszul_complex(&r, &[r.ring().var(1)])?;
    let g = minimal_resolution(&GradedModule::cyclic_parse(r.clone(), &["x"])?, 7)?.complex;

    let ld_f = linearity_defect_of_complex(&f, 6)?;
    println!("F = 0 -> R(-1) -y-> R -> 0: ld = {}", ld_f.status);
    println!("lin F:\n{}", linear_part(&f)?.describe());

    let fg = tensor(&f, &g)?;
    let ld_fg = linearity_defect_of_complex(&fg, 6)?;
    println!("\nld(F (x) G) = {}", ld_fg.status);
    println!("H_0(F (x) G) in degrees 0..3: {:?}", fg.homology(0)?.hilbert_function(0, 3));
    println!("{}", serde_json::to_string(&ld_fg).expect("serializes"));

    let s = GradedAlgebra::polynomial(PrimeField::new(101)?, &["x", "y"])?;
    let m = GradedModule::cyclic_parse(s, &["x^2", "y^3"])?;
    println!("\nld of S/(x^2, y^3) = {}", linearity_defect(&m, 6)?.status);
    Ok(())
}
