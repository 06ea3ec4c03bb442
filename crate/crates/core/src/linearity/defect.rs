use serde::{Deserialize, Serialize};

use crate::complexes::{minimal_resolution, FreeComplex};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graded::{GradedModule, Matrix};
use crate::groebner::{vector_from_terms, ModuleOrder};

/// The linear part: every differential entry replaced by its degree-one
/// component.
pub fn linear_part<F: Field>(f: &FreeComplex<F>) -> Result<FreeComplex<F>> {
    f.require_minimal()?;
    let alg = f.algebra();
    let field = alg.field();
    let diffs = f
        .differentials()
        .iter()
        .map(|d| {
            let order = ModuleOrder::top(alg.ring().order(), d.target().to_vec());
            let cols = d
                .columns()
                .iter()
                .zip(d.source())
                .map(|(c, &s)| {
                    let terms = c
                        .terms()
                        .iter()
                        .filter(|t| s - d.target()[t.comp] == 1)
                        .cloned()
                        .collect();
                    vector_from_terms(field, &order, terms)
                })
                .collect();
            Matrix::from_columns_unchecked(d.target().to_vec(), d.source().to_vec(), cols)
        })
        .collect();
    let lin = FreeComplex::new_unchecked(alg.clone(), f.lo(), f.modules().to_vec(), diffs, f.is_complete());
    lin.check_d_squared()
        .map_err(|e| e.context("linear part"))?;
    Ok(lin)
}

/// Certification status of a linearity defect.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status")]
pub enum LdStatus {
    /// Every position was checked; `value` is absent when `lin F` is exact.
    Exact { value: Option<i32> },
    /// `H_value(lin F) ≠ 0` with positions beyond the cutoff unknown.
    AtLeast { value: i32 },
    /// `H_i(lin F) = 0` for `1 <= i <= cutoff`.
    ZeroUpTo { cutoff: i32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LdResult {
    #[serde(flatten)]
    pub status: LdStatus,
    #[serde(rename = "checked_through")]
    pub cutoff: i32,
    /// Position of `nonzero[0]`.
    pub first_position: i32,
    /// Whether `H_i(lin F) ≠ 0`, for consecutive checked positions.
    pub nonzero: Vec<bool>,
}

impl LdResult {
    /// A certified lower bound for `ld`, when one exists.
    pub fn lower_bound(&self) -> Option<i32> {
        match self.status {
            LdStatus::Exact { value } => value,
            LdStatus::AtLeast { value } => Some(value),
            LdStatus::ZeroUpTo { .. } => self.max_nonzero(),
        }
    }

    /// The exact value, when certified.
    pub fn exact(&self) -> Option<Option<i32>> {
        match self.status {
            LdStatus::Exact { value } => Some(value),
            _ => None,
        }
    }

    pub fn is_zero_up_to(&self) -> bool {
        match self.status {
            LdStatus::ZeroUpTo { .. } => true,
            LdStatus::Exact { value } => value.is_none_or(|v| v <= 0),
            LdStatus::AtLeast { .. } => false,
        }
    }

    pub fn nonzero_at(&self, i: i32) -> Option<bool> {
        let k = i - self.first_position;
        (k >= 0).then(|| self.nonzero.get(k as usize).copied()).flatten()
    }

    pub fn max_nonzero(&self) -> Option<i32> {
        self.nonzero
            .iter()
            .rposition(|&b| b)
            .map(|k| self.first_position + k as i32)
    }
}

impl std::fmt::Display for LdStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LdStatus::Exact { value: Some(v) } => write!(f, "Exact({v})"),
            LdStatus::Exact { value: None } => write!(f, "Exact(-inf)"),
            LdStatus::AtLeast { value } => write!(f, "AtLeast({value})"),
            LdStatus::ZeroUpTo { cutoff } => write!(f, "ZeroUpTo({cutoff})"),
        }
    }
}

/// Scans `H_i` of an already linear complex.
pub(crate) fn scan_linear<F: Field>(lin: &FreeComplex<F>, cutoff: i32) -> Result<LdResult> {
    let exact = lin.is_complete() && lin.hi() <= cutoff;
    let top = if exact {
        lin.hi()
    } else if lin.is_complete() {
        cutoff
    } else {
        cutoff.min(lin.hi() - 1)
    };
    let mut nonzero = Vec::new();
    for i in lin.lo()..=top {
        nonzero.push(lin.homology_info(i)?.nonzero);
    }
    let mut out = LdResult {
        status: LdStatus::ZeroUpTo { cutoff: top },
        cutoff: top,
        first_position: lin.lo(),
        nonzero,
    };
    let max = out.max_nonzero();
    out.status = match max {
        _ if exact => LdStatus::Exact { value: max },
        Some(v) if v >= 1 => LdStatus::AtLeast { value: v },
        _ => LdStatus::ZeroUpTo { cutoff: top },
    };
    Ok(out)
}

/// `ld` of a minimal free complex, checked at positions up to `cutoff`.
pub fn linearity_defect_of_complex<F: Field>(f: &FreeComplex<F>, cutoff: i32) -> Result<LdResult> {
    let lin = linear_part(f)?;
    scan_linear(&lin, cutoff)
}

/// `ld` of a module from its minimal resolution built through `cutoff + 1`.
pub fn linearity_defect<F: Field>(m: &GradedModule<F>, cutoff: i32) -> Result<LdResult> {
    if cutoff < 0 {
        return Err(Error::Precondition(format!("cutoff {cutoff} is negative")));
    }
    let res = minimal_resolution(m, cutoff + 1)?;
    linearity_defect_of_complex(&res.complex, cutoff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::koszul_complex;
    use crate::field::Rationals;
    use crate::graded::GradedAlgebra;

    #[test]
    fn linear_parts() {
        let s = GradedAlgebra::polynomial(Rationals, &["x", "y"]).unwrap();
        let x2 = s.ring().parse("x^2").unwrap();
        let k = koszul_complex(&s, &[x2]).unwrap();
        assert!(linear_part(&k).unwrap().differential(1).unwrap().is_zero());
        let q = GradedModule::cyclic_parse(s.clone(), &["x^2", "x*y"]).unwrap();
        let res = minimal_resolution(&q, 4).unwrap();
        let lin = linear_part(&res.complex).unwrap();
        assert!(lin.differential(1).unwrap().is_zero());
        assert_eq!(lin.differential(2), res.complex.differential(2));
        let unit = FreeComplex::two_term(
            s.clone(),
            0,
            Matrix::from_rows(s.ring(), vec![0], None, &[vec![s.ring().one()]]).unwrap(),
        )
        .unwrap();
        assert!(matches!(linear_part(&unit), Err(Error::NotMinimal(_))));
    }

    #[test]
    fn defects() {
        let s = GradedAlgebra::polynomial(Rationals, &["x", "y"]).unwrap();
        let r = GradedAlgebra::parse(Rationals, &["x", "y"], &["x^2", "x*y"]).unwrap();
        let ld = linearity_defect(&GradedModule::residue_field(r.clone()), 5).unwrap();
        assert_eq!(ld.status, LdStatus::ZeroUpTo { cutoff: 5 });
        let ld = linearity_defect(&GradedModule::residue_field(s.clone()), 5).unwrap();
        assert_eq!(ld.status, LdStatus::Exact { value: Some(0) });
        let ld = linearity_defect(&GradedModule::cyclic_parse(s.clone(), &["x^2"]).unwrap(), 5).unwrap();
        assert_eq!(ld.status, LdStatus::Exact { value: Some(1) });

        let f = koszul_complex(&r, &[r.ring().var(1)]).unwrap();
        let ld = linearity_defect_of_complex(&f, 5).unwrap();
        assert_eq!(ld.status, LdStatus::Exact { value: Some(1) });
        let json = serde_json::to_string(&ld).unwrap();
        assert!(json.starts_with("{\"status\":\"Exact\",\"value\":1"));
        let back: LdResult = serde_json::from_str(&json).unwrap();
        assert_eq!(back, ld);

        let zero = FreeComplex::new(s.clone(), 0, vec![vec![0], vec![2]], vec![Matrix::zero(vec![0], vec![2])], true).unwrap();
        assert_eq!(linearity_defect_of_complex(&zero, 5).unwrap().status, LdStatus::Exact { value: Some(1) });
    }
}
