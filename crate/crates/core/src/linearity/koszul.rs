use serde::{Deserialize, Serialize};

use crate::complexes::{koszul_complex, linear_status, minimal_resolution, tensor, FreeComplex, LinearStatus};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graded::{Algebra, GradedModule, Matrix};
use crate::poly::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status")]
pub enum KoszulStatus {
    Koszul,
    KoszulUpTo { cutoff: i32 },
    /// `β_{n,j}(k) ≠ 0` with `j ≠ n`.
    NotKoszul { n: i32, j: i32 },
}

impl KoszulStatus {
    pub fn holds(&self) -> bool {
        !matches!(self, KoszulStatus::NotKoszul { .. })
    }
}

/// Whether `k` has a linear resolution through `cutoff`. Certified answers
/// are recorded on the algebra.
pub fn is_koszul_algebra<F: Field>(r: &Algebra<F>, cutoff: i32) -> Result<KoszulStatus> {
    let n = if r.is_polynomial() { cutoff.max(r.nvars() as i32 + 1) } else { cutoff };
    let res = minimal_resolution(&GradedModule::residue_field(r.clone()), n)?;
    let status = match linear_status(&res.betti(), 0, n) {
        LinearStatus::Yes => KoszulStatus::Koszul,
        LinearStatus::YesUpTo { .. } => KoszulStatus::KoszulUpTo { cutoff },
        LinearStatus::No { n, j } => KoszulStatus::NotKoszul { n, j },
    };
    match status {
        KoszulStatus::Koszul => r.set_koszul_known(true),
        KoszulStatus::NotKoszul { .. } => r.set_koszul_known(false),
        KoszulStatus::KoszulUpTo { .. } => {}
    }
    Ok(status)
}

/// `c - max { i : H_i(K(forms; M)) ≠ 0 }`, the grade of `(forms)` on `M`.
pub fn koszul_depth<F: Field>(forms: &[Polynomial<F::Elem>], m: &GradedModule<F>) -> Result<i32> {
    let c = forms.len() as i32;
    let k = koszul_complex(m.algebra(), forms)?;
    let res = minimal_resolution(m, c + 1)?;
    if res.complex.modules().is_empty() {
        return Err(Error::Degenerate("Koszul depth of the zero module".into()));
    }
    let t = tensor(&k, &res.complex)?;
    for i in (0..=c).rev() {
        if t.homology_info(i)?.nonzero {
            return Ok(c - i);
        }
    }
    Err(Error::Degenerate("Koszul homology vanishes".into()))
}

/// `F ⊗_R R/J`: entries reduced modulo the ideal of `target`, which must
/// contain the ideal of the base of `F`.
pub fn base_change<F: Field>(f: &FreeComplex<F>, target: &Algebra<F>) -> Result<FreeComplex<F>> {
    f.require_minimal()?;
    let base = f.algebra();
    if base.ring().names() != target.ring().names() || base.field().spec() != target.field().spec() {
        return Err(Error::RingMismatch(format!(
            "{} and {}",
            base.describe(),
            target.describe()
        )));
    }
    for g in base.ideal() {
        if !target.reduce(g).is_zero() {
            return Err(Error::Precondition(format!(
                "{} is not zero in {}",
                base.ring().format(g),
                target.describe()
            )));
        }
    }
    let diffs: Vec<Matrix<F::Elem>> = f.differentials().iter().map(|d| target.reduce_matrix(d)).collect();
    Ok(FreeComplex::new_unchecked(
        target.clone(),
        f.lo(),
        f.modules().to_vec(),
        diffs,
        f.is_complete(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::graded::GradedAlgebra;

    #[test]
    fn koszul_algebras() {
        let s = GradedAlgebra::polynomial(Rationals, &["x", "y", "z"]).unwrap();
        assert_eq!(is_koszul_algebra(&s, 2).unwrap(), KoszulStatus::Koszul);
        assert_eq!(s.koszul_known(), Some(true));
        let r = GradedAlgebra::parse(Rationals, &["x", "y"], &["x^2", "x*y"]).unwrap();
        assert_eq!(is_koszul_algebra(&r, 4).unwrap(), KoszulStatus::KoszulUpTo { cutoff: 4 });
        let c = GradedAlgebra::parse(Rationals, &["x"], &["x^3"]).unwrap();
        assert_eq!(is_koszul_algebra(&c, 4).unwrap(), KoszulStatus::NotKoszul { n: 2, j: 3 });
        assert_eq!(c.koszul_known(), Some(false));
    }

    #[test]
    fn depths_and_base_change() {
        let s = GradedAlgebra::polynomial(Rationals, &["x", "y"]).unwrap();
        let (x, y) = (s.ring().var(0), s.ring().var(1));
        let ss = GradedModule::free(s.clone(), vec![0]);
        assert_eq!(koszul_depth(&[x.clone(), y.clone()], &ss).unwrap(), 2);
        assert_eq!(koszul_depth(std::slice::from_ref(&x), &GradedModule::residue_field(s.clone())).unwrap(), 0);
        let c = GradedAlgebra::parse(Rationals, &["x", "y"], &["x^3"]).unwrap();
        let x2 = c.ring().parse("x^2").unwrap();
        assert_eq!(koszul_depth(&[x2], &GradedModule::free(c.clone(), vec![0])).unwrap(), 0);

        let k = koszul_complex(&s, &[x, y]).unwrap();
        let r = GradedAlgebra::parse(Rationals, &["x", "y"], &["x^2", "x*y"]).unwrap();
        let kr = base_change(&k, &r).unwrap();
        assert_eq!(kr.differentials(), k.differentials());
        let q = GradedModule::cyclic_parse(s.clone(), &["x^2"]).unwrap();
        let res = minimal_resolution(&q, 3).unwrap().complex;
        let pushed = base_change(&res, &c).unwrap();
        assert_eq!(c.ring().format(&pushed.differential(1).unwrap().entry(0, 0)), "x^2");
        assert!(base_change(&kr, &s).is_err());
    }
}
