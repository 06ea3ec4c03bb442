//! Koszul complexes, tensor products, duals and homology.

use lindef::complexes::{dual_into_ring, koszul_complex, tensor, truncate_above};
use lindef::field::Rationals;
use lindef::graded::GradedAlgebra;

fn main() -> lindef::Result<()> {
    let r = GradedAlgebra::parse(Rationals, &["x", "y"], &["x^3"])?;
    let ring = r.ring();
    let k = koszul_complex(&r, &[ring.parse("x^2")?, ring.parse("y")?])?;
    println!("{}\n", k.describe());
    for i in k.positions() {
        let h = k.homology_info(i)?;
        println!("H_{i}: nonzero {} indeg {:?}", h.nonzero, h.indeg);
    }

    let kx = koszul_complex(&r, &[ring.var(0)])?;
    let t = tensor(&kx, &k)?;
    t.check_d_squared()?;
    println!("\nK(x) (x) K(x^2, y) has ranks {:?}", t.positions().map(|i| t.rank(i)).collect::<Vec<_>>());

    let d = dual_into_ring(&k)?;
    println!("\nHom(K, R):\n{}", d.describe());
    println!("\nK truncated at 1:\n{}", truncate_above(&k, 1).describe());
    Ok(())
}
