use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graded::{GradedModule, Matrix};
use crate::groebner::kernel;

use super::betti::BettiTable;
use super::complex::FreeComplex;

/// Cutoff used by library calls that do not specify one.
pub const DEFAULT_CUTOFF: i32 = 6;

/// The minimal free resolution `F_0 ← F_1 ← ... ← F_N` of a module, with
/// the position where it stopped.
#[derive(Clone, Debug)]
pub struct ResolutionPrefix<F: Field> {
    pub module: GradedModule<F>,
    pub complex: FreeComplex<F>,
    pub cutoff: i32,
    pub terminated: bool,
}

impl<F: Field> ResolutionPrefix<F> {
    pub fn betti(&self) -> BettiTable {
        let through = if self.terminated { self.complex.hi() } else { self.cutoff };
        BettiTable::from_twists(0, self.complex.modules(), through, self.terminated)
    }

    /// `pd M` when the resolution terminated.
    pub fn projective_dimension(&self) -> Option<i32> {
        self.terminated.then(|| self.complex.hi())
    }
}

/// Builds `F_0, ..., F_N` by iterated minimal kernels. The prefix is
/// terminated when some `F_n` with `n <= N` vanishes.
pub fn minimal_resolution<F: Field>(m: &GradedModule<F>, cutoff: i32) -> Result<ResolutionPrefix<F>> {
    if cutoff < 0 {
        return Err(Error::Precondition(format!("cutoff {cutoff} is negative")));
    }
    let alg = m.algebra().clone();
    let min = m.minimal_presentation();
    let mut modules: Vec<Vec<i32>> = vec![min.generator_twists().to_vec()];
    let mut diffs: Vec<Matrix<F::Elem>> = Vec::new();
    let mut terminated = modules[0].is_empty();
    let mut n = 0;
    while !terminated && n < cutoff {
        n += 1;
        let d = if n == 1 {
            min.presentation().clone()
        } else {
            let prev: &Matrix<F::Elem> = diffs.last().expect("n >= 2");
            let ker = kernel(alg.ring(), alg.ideal_gb(), prev.target(), prev.source(), prev.columns())?;
            let twists = prev.source().to_vec();
            let src: Vec<i32> = ker.iter().map(|v| v.degree(&twists).expect("nonzero")).collect();
            Matrix::from_columns_unchecked(twists, src, ker)
        };
        terminated = d.ncols() == 0;
        modules.push(d.source().to_vec());
        diffs.push(d);
    }
    let complex = FreeComplex::new_unchecked(alg, 0, modules, diffs, terminated);
    Ok(ResolutionPrefix {
        module: m.clone(),
        complex,
        cutoff,
        terminated,
    })
}

/// Regularity `max { j - n : β_{n,j} ≠ 0 }`, exact when the resolution
/// terminated and a lower bound otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Regularity {
    pub value: i32,
    pub exact: bool,
}

/// Regularity of a nonzero module. Over a polynomial ring the resolution is
/// always carried to the end.
pub fn regularity<F: Field>(m: &GradedModule<F>, cutoff: i32) -> Result<Regularity> {
    let n = if m.algebra().is_polynomial() {
        cutoff.max(m.algebra().nvars() as i32 + 1)
    } else {
        cutoff
    };
    let res = minimal_resolution(m, n)?;
    let value = res
        .betti()
        .regularity()
        .ok_or_else(|| Error::Degenerate("regularity of the zero module".into()))?;
    Ok(Regularity {
        value,
        exact: res.terminated,
    })
}

/// Outcome of a linearity test on a Betti table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status")]
pub enum LinearStatus {
    Yes,
    YesUpTo { cutoff: i32 },
    No { n: i32, j: i32 },
}

impl LinearStatus {
    pub fn holds(&self) -> bool {
        !matches!(self, LinearStatus::No { .. })
    }
}

/// Whether `β_{n,j}(M) = 0` for all `j ≠ n + i` within the prefix.
pub fn has_i_linear_resolution<F: Field>(m: &GradedModule<F>, i: i32, cutoff: i32) -> Result<LinearStatus> {
    let res = minimal_resolution(m, cutoff)?;
    Ok(linear_status(&res.betti(), i, cutoff))
}

pub(crate) fn linear_status(betti: &BettiTable, i: i32, cutoff: i32) -> LinearStatus {
    match betti.off_diagonal(i) {
        Some((n, j)) => LinearStatus::No { n, j },
        None if betti.terminated => LinearStatus::Yes,
        None => LinearStatus::YesUpTo { cutoff },
    }
}
