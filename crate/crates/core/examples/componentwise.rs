//! Componentwise linearity and its agreement with vanishing defect.

use lindef::field::PrimeField;
use lindef::graded::{GradedAlgebra, GradedModule};
use lindef::linearity::{is_componentwise_linear, linearity_defect};

fn main() -> lindef::Result<()> {
    let s = GradedAlgebra::polynomial(PrimeField::new(101)?, &["x", "y", "z"])?;
    let cases: [&[&str]; 3] = [&["x^2", "x*y", "y^3"], &["x*y", "z^2"], &["x", "y^2"]];
    for gens in cases {
        let m = GradedModule::free(s.clone(), vec![0]).submodule(
            &gens
                .iter()
                .map(|g| Ok(lindef::groebner::ModuleVector::from_polynomial(&s.ring().parse(g)?, 0)))
                .collect::<lindef::Result<Vec<_>>>()?,
        )?;
        let cw = is_componentwise_linear(&m, 5)?;
        let ld = linearity_defect(&m, 5)?;
        println!("({}): componentwise {:?}, ld {}", gens.join(", "), cw.overall, ld.status);
        for c in &cw.components {
            println!("    {c:?}");
        }
    }
    Ok(())
}
