//! Injective linearity defect over Gorenstein rings via duality.

use lindef::field::Rationals;
use lindef::graded::{GradedAlgebra, GradedModule};
use lindef::linearity::{injective_linearity_defect, is_gorenstein};

fn main() -> lindef::Result<()> {
    let s = GradedAlgebra::polynomial(Rationals, &["x1", "x2", "y1"])?;
    for gens in [vec!["x1^2", "y1"], vec!["x1"], vec!["x1^2", "x2^2", "y1"]] {
        let m = GradedModule::cyclic_parse(s.clone(), &gens)?;
        let r = injective_linearity_defect(&m, 6)?;
        println!("ild of S/({}) = {}", gens.join(", "), r.status);
    }
    let r = GradedAlgebra::parse(Rationals, &["x", "y"], &["x^2", "y^2"])?;
    println!("\n{} Gorenstein: {}", r.describe(), is_gorenstein(&r)?);
    let k = GradedModule::residue_field(r.clone());
    if let Err(e) = injective_linearity_defect(&k, 6) {
        println!("ild of k: {e}");
    }
    let h = GradedAlgebra::parse(Rationals, &["x", "y", "z"], &["x*y"])?;
    let m = GradedModule::cyclic_parse(h.clone(), &["z"])?;
    println!("{} Gorenstein: {}", h.describe(), is_gorenstein(&h)?);
    println!("ild of R/(z) = {}", injective_linearity_defect(&m, 6)?.status);
    let r = GradedAlgebra::parse(Rationals, &["x", "y"], &["x^2", "x*y"])?;
    println!("{} Gorenstein: {}", r.describe(), is_gorenstein(&r)?);
    Ok(())
}
