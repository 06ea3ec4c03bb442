//! Minimal free resolutions, Betti tables and regularity.

use lindef::complexes::{has_i_linear_resolution, minimal_resolution, regularity};
use lindef::field::PrimeField;
use lindef::graded::{GradedAlgebra, GradedModule};

fn main() -> lindef::Result<()> {
    let gf = PrimeField::new(101)?;
    let s = GradedAlgebra::polynomial(gf, &["x", "y", "z", "w"])?;
    // twisted cubic
    let c = GradedModule::cyclic_parse(s.clone(), &["x*z - y^2", "x*w - y*z", "y*w - z^2"])?;
    let res = minimal_resolution(&c, 6)?;
    print!("{}", res.betti());
    println!("pd = {:?}, reg = {:?}", res.projective_dimension(), regularity(&c, 6)?);

    let r = GradedAlgebra::parse(gf, &["x", "y"], &["x^2", "x*y"])?;
    let k = GradedModule::residue_field(r);
    let res = minimal_resolution(&k, 5)?;
    println!("\nk over k[x,y]/(x^2, xy):");
    print!("{}", res.betti());
    println!("0-linear: {:?}", has_i_linear_resolution(&k, 0, 5)?);
    println!("\nd_2 =\n{}", res.complex.differential(2).expect("computed").format(k.algebra().ring()));
    Ok(())
}
