//! Polynomial arithmetic over `Q` and `GF(p)` and a reduced Gröbner basis.

use lindef::field::{Field, PrimeField, Rationals};
use lindef::groebner::ideal_groebner;
use lindef::poly::PolyRing;

fn main() -> lindef::Result<()> {
    let q = PolyRing::new(Rationals, vec!["x".into(), "y".into(), "z".into()])?;
    let f = q.parse("x^2 - 1/2*y*z")?;
    let g = q.parse("x*y + z^2")?;
    println!("f * g = {}", q.format(&q.mul(&f, &g)));
    println!("(f + g)^2 = {}", q.format(&q.pow(&q.add(&f, &g), 2)));

    let gb = ideal_groebner(&q, &[f.clone(), g.clone()])?;
    println!("reduced basis of (f, g):");
    for v in gb.elements() {
        println!("  {}", q.format(&v.entry(0)));
    }
    let h = q.parse("x^3*y")?;
    println!("x^3*y mod (f, g) = {}", q.format(&gb.reduce_polynomial(&h)));

    let gf = PrimeField::new(7)?;
    let r = PolyRing::new(gf, vec!["a".into(), "b".into()])?;
    let p = r.parse("3*a + 5*b")?;
    println!("(3a + 5b)^7 over GF(7) = {}", r.format(&r.pow(&p, 7)));
    println!("1/3 in GF(7) = {}", gf.format(&gf.inv(&gf.from_i64(3))?));
    Ok(())
}
