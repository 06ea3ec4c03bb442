use crate::complexes::{dual_into_ring, minimal_resolution};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graded::{is_cohen_macaulay, Algebra, GradedModule};

use super::defect::{linear_part, scan_linear, LdResult, LdStatus};

/// Cohen-Macaulay over the polynomial ring with last Betti number one.
pub fn is_gorenstein<F: Field>(r: &Algebra<F>) -> Result<bool> {
    let s = r.ambient();
    let quotient = GradedModule::cyclic(s.clone(), r.generators())?;
    if !is_cohen_macaulay(&quotient)? {
        return Ok(false);
    }
    let res = minimal_resolution(&quotient, s.nvars() as i32 + 1)?;
    let b = res.betti();
    Ok(b.total(res.complex.hi()) == 1)
}

/// `ild M = dim R + sup { n : H_n(lin Hom(F, R)) ≠ 0 }` over a Gorenstein
/// algebra, for `M` whose resolution ends within `cutoff`.
pub fn injective_linearity_defect<F: Field>(m: &GradedModule<F>, cutoff: i32) -> Result<LdResult> {
    let r = m.algebra();
    if !is_gorenstein(r)? {
        return Err(Error::Precondition(format!("{} is not Gorenstein", r.describe())));
    }
    let res = minimal_resolution(m, cutoff)?;
    if !res.terminated {
        return Err(Error::Precondition(format!("pd possibly infinite at cutoff {cutoff}")));
    }
    let dual = dual_into_ring(&res.complex)?;
    let lin = linear_part(&dual)?;
    let mut out = scan_linear(&lin, 0)?;
    let dim = r.dim() as i32;
    out.status = LdStatus::Exact {
        value: out.max_nonzero().map(|s| dim + s),
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::graded::GradedAlgebra;

    #[test]
    fn gorenstein_duality() {
        let s = GradedAlgebra::polynomial(Rationals, &["x1", "x2", "y1"]).unwrap();
        let m = GradedModule::cyclic_parse(s.clone(), &["x1^2", "y1"]).unwrap();
        let ild = injective_linearity_defect(&m, 6).unwrap();
        assert_eq!(ild.status, LdStatus::Exact { value: Some(2) });
        let k = GradedModule::residue_field(s.clone());
        assert_eq!(injective_linearity_defect(&k, 6).unwrap().status, LdStatus::Exact { value: Some(0) });
        let free = GradedModule::free(s.clone(), vec![0]);
        assert_eq!(injective_linearity_defect(&free, 6).unwrap().status, LdStatus::Exact { value: Some(3) });

        let r = GradedAlgebra::parse(Rationals, &["x", "y"], &["x^2", "x*y"]).unwrap();
        assert!(!is_gorenstein(&r).unwrap());
        let h = GradedAlgebra::parse(Rationals, &["x", "y"], &["x^2", "y^2"]).unwrap();
        assert!(is_gorenstein(&h).unwrap());
        let kh = GradedModule::residue_field(h);
        assert!(matches!(injective_linearity_defect(&kh, 4), Err(Error::Precondition(_))));
    }
}
