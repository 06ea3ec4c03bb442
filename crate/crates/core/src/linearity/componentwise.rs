use serde::{Deserialize, Serialize};

use crate::complexes::{has_i_linear_resolution, LinearStatus};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graded::GradedModule;

use super::koszul::{is_koszul_algebra, KoszulStatus};

/// `M_⟨i⟩`, the submodule generated by `M_i`.
pub fn component_submodule<F: Field>(m: &GradedModule<F>, i: i32) -> Result<GradedModule<F>> {
    let basis = m.basis_in_degree(i);
    if basis.is_empty() {
        return Ok(GradedModule::free(m.algebra().clone(), Vec::new()));
    }
    m.submodule(&basis)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentVerdict {
    pub degree: i32,
    pub status: LinearStatus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status")]
pub enum CwStatus {
    Yes,
    YesUpTo { cutoff: i32 },
    No { degree: i32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CwLinearReport {
    pub components: Vec<ComponentVerdict>,
    /// Components from this degree on follow from the last checked one.
    pub implied_from: Option<i32>,
    pub overall: CwStatus,
}

impl CwLinearReport {
    pub fn holds(&self) -> bool {
        !matches!(self.overall, CwStatus::No { .. })
    }
}

/// Checks that `M_⟨i⟩` has an `i`-linear resolution for every `i` from
/// `indeg M` to the top degree of a minimal generator.
pub fn is_componentwise_linear<F: Field>(m: &GradedModule<F>, cutoff: i32) -> Result<CwLinearReport> {
    let r = m.algebra();
    let koszul = match r.koszul_known() {
        Some(true) => KoszulStatus::Koszul,
        _ => is_koszul_algebra(r, cutoff)?,
    };
    if let KoszulStatus::NotKoszul { n, j } = koszul {
        return Err(Error::Precondition(format!(
            "{} is not Koszul (beta_{{{n},{j}}}(k) != 0)",
            r.describe()
        )));
    }
    let twists = m.minimal_presentation().generator_twists().to_vec();
    let (Some(&lo), Some(&hi)) = (twists.iter().min(), twists.iter().max()) else {
        return Ok(CwLinearReport {
            components: Vec::new(),
            implied_from: None,
            overall: CwStatus::Yes,
        });
    };
    let mut components = Vec::new();
    let mut overall = CwStatus::Yes;
    for i in lo..=hi {
        let status = has_i_linear_resolution(&component_submodule(m, i)?, i, cutoff)?;
        components.push(ComponentVerdict { degree: i, status });
        match status {
            LinearStatus::No { .. } => {
                overall = CwStatus::No { degree: i };
                break;
            }
            LinearStatus::YesUpTo { .. } => overall = CwStatus::YesUpTo { cutoff },
            LinearStatus::Yes => {}
        }
    }
    let implied_from = (!matches!(overall, CwStatus::No { .. })).then_some(hi + 1);
    Ok(CwLinearReport {
        components,
        implied_from,
        overall,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::graded::GradedAlgebra;
    use crate::groebner::ModuleVector;

    #[test]
    fn components() {
        let s = GradedAlgebra::polynomial(Rationals, &["x", "y"]).unwrap();
        let q = GradedModule::cyclic_parse(s.clone(), &["x^2"]).unwrap();
        let c1 = component_submodule(&q, 1).unwrap();
        assert_eq!(c1.hilbert_function(0, 3), vec![0, 2, 2, 2]);
        assert!(component_submodule(&q, -1).unwrap().is_zero());
        assert_eq!(component_submodule(&q, 0).unwrap().hilbert_function(0, 3), q.hilbert_function(0, 3));

        let k = GradedModule::residue_field(s.clone());
        assert_eq!(is_componentwise_linear(&k, 5).unwrap().overall, CwStatus::Yes);
        let m = GradedModule::free(s.clone(), vec![0])
            .submodule(&[
                ModuleVector::from_polynomial(&s.ring().var(0), 0),
                ModuleVector::from_polynomial(&s.ring().var(1), 0),
            ])
            .unwrap();
        let rep = is_componentwise_linear(&m, 5).unwrap();
        assert_eq!(rep.overall, CwStatus::Yes);
        assert_eq!(rep.implied_from, Some(2));
        assert_eq!(is_componentwise_linear(&q, 5).unwrap().overall, CwStatus::No { degree: 0 });

        let c = GradedAlgebra::parse(Rationals, &["x"], &["x^3"]).unwrap();
        assert!(is_componentwise_linear(&GradedModule::residue_field(c), 4).is_err());
    }
}
