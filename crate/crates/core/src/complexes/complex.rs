use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graded::{Algebra, GradedModule, Matrix};
use crate::groebner::{groebner, kernel, ModuleVector};

/// A bounded-below complex of graded free modules
/// `... → F_{i} → F_{i-1} → ... → F_lo` with homogeneous degree-zero
/// differentials. Positions below `lo` are zero. When `complete` is false
/// the complex is a prefix and positions above `hi` are unknown.
#[derive(Clone, Debug)]
pub struct FreeComplex<F: Field> {
    algebra: Algebra<F>,
    lo: i32,
    modules: Vec<Vec<i32>>,
    diffs: Vec<Matrix<F::Elem>>,
    complete: bool,
}

/// Whether a homology module vanishes, with its initial degree otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyInfo {
    pub position: i32,
    pub nonzero: bool,
    pub indeg: Option<i32>,
}

impl<F: Field> FreeComplex<F> {
    /// Assembles a complex; `diffs[k]` maps position `lo + k + 1` to
    /// `lo + k`.
    pub fn new(
        algebra: Algebra<F>,
        lo: i32,
        modules: Vec<Vec<i32>>,
        diffs: Vec<Matrix<F::Elem>>,
        complete: bool,
    ) -> Result<Self> {
        if diffs.len() + 1 != modules.len() && !(modules.is_empty() && diffs.is_empty()) {
            return Err(Error::DegreeMismatch(format!(
                "{} modules need {} differentials, got {}",
                modules.len(),
                modules.len().saturating_sub(1),
                diffs.len()
            )));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.target() != modules[k].as_slice() || d.source() != modules[k + 1].as_slice() {
                return Err(Error::DegreeMismatch(format!(
                    "differential at position {} does not match the module twists",
                    lo + k as i32 + 1
                )));
            }
            Matrix::from_columns(algebra.ring(), d.target().to_vec(), d.source().to_vec(), d.columns().to_vec())
                .map_err(|e| e.context(format!("differential at position {}", lo + k as i32 + 1)))?;
        }
        Ok(Self::new_unchecked(algebra, lo, modules, diffs, complete))
    }

    pub(crate) fn new_unchecked(
        algebra: Algebra<F>,
        lo: i32,
        mut modules: Vec<Vec<i32>>,
        mut diffs: Vec<Matrix<F::Elem>>,
        complete: bool,
    ) -> Self {
        if complete {
            while modules.last().is_some_and(|m| m.is_empty()) {
                modules.pop();
                diffs.pop();
            }
        }
        FreeComplex {
            algebra,
            lo,
            modules,
            diffs,
            complete,
        }
    }

    /// `0 → ⊕R(-b) --m--> ⊕R(-a) → 0` at positions `lo + 1` and `lo`.
    pub fn two_term(algebra: Algebra<F>, lo: i32, m: Matrix<F::Elem>) -> Result<Self> {
        let modules = vec![m.target().to_vec(), m.source().to_vec()];
        Self::new(algebra, lo, modules, vec![m], true)
    }

    /// A single free module at position `at`.
    pub fn free(algebra: Algebra<F>, at: i32, twists: Vec<i32>) -> Self {
        Self::new_unchecked(algebra, at, vec![twists], Vec::new(), true)
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    /// The top stored position (`lo - 1` when nothing is stored).
    pub fn hi(&self) -> i32 {
        self.lo + self.modules.len() as i32 - 1
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Whether the module at position `i` is known.
    pub fn is_known(&self, i: i32) -> bool {
        self.complete || i <= self.hi()
    }

    pub fn positions(&self) -> std::ops::RangeInclusive<i32> {
        self.lo..=self.hi()
    }

    /// Twists of `F_i` (empty outside the stored range).
    pub fn twists(&self, i: i32) -> &[i32] {
        if i < self.lo || i > self.hi() {
            &[]
        } else {
            &self.modules[(i - self.lo) as usize]
        }
    }

    pub fn rank(&self, i: i32) -> usize {
        self.twists(i).len()
    }

    /// `∂_i: F_i → F_{i-1}` when both ends are stored.
    pub fn differential(&self, i: i32) -> Option<&Matrix<F::Elem>> {
        if i <= self.lo || i > self.hi() {
            None
        } else {
            Some(&self.diffs[(i - self.lo - 1) as usize])
        }
    }

    /// `∂_i` as a matrix, zero when an end is outside the stored range.
    pub fn differential_or_zero(&self, i: i32) -> Matrix<F::Elem> {
        match self.differential(i) {
            Some(d) => d.clone(),
            None => Matrix::zero(self.twists(i - 1).to_vec(), self.twists(i).to_vec()),
        }
    }

    pub fn modules(&self) -> &[Vec<i32>] {
        &self.modules
    }

    pub fn differentials(&self) -> &[Matrix<F::Elem>] {
        &self.diffs
    }

    /// Verifies `∂_{i-1} ∘ ∂_i = 0` modulo the ideal, exactly.
    pub fn check_d_squared(&self) -> Result<()> {
        for k in 1..self.diffs.len() {
            let c = self.algebra.compose(&self.diffs[k - 1], &self.diffs[k])?;
            if !c.is_zero() {
                return Err(Error::Precondition(format!(
                    "d^2 != 0 at position {}",
                    self.lo + k as i32 + 1
                )));
            }
        }
        Ok(())
    }

    /// A nonzero entry of degree at most zero, if any.
    pub fn non_minimal_entry(&self) -> Option<(i32, usize, usize)> {
        for (k, d) in self.diffs.iter().enumerate() {
            if let Some((i, j, _)) = d.entry_degrees().find(|&(_, _, e)| e <= 0) {
                return Some((self.lo + k as i32 + 1, i, j));
            }
        }
        None
    }

    pub fn is_minimal(&self) -> bool {
        self.non_minimal_entry().is_none()
    }

    pub(crate) fn require_minimal(&self) -> Result<()> {
        match self.non_minimal_entry() {
            None => Ok(()),
            Some((p, i, j)) => Err(Error::NotMinimal(format!(
                "unit entry ({i}, {j}) in the differential at position {p}"
            ))),
        }
    }

    /// Generators of `ker ∂_i` in `F_i`.
    pub fn cycles(&self, i: i32) -> Result<Vec<ModuleVector<F::Elem>>> {
        let n = self.algebra.nvars();
        let one = self.algebra.field().one();
        match self.differential(i) {
            Some(d) if !d.is_zero() => kernel(
                self.algebra.ring(),
                self.algebra.ideal_gb(),
                d.target(),
                d.source(),
                d.columns(),
            ),
            _ => Ok((0..self.rank(i)).map(|c| ModuleVector::unit(c, n, one.clone())).collect()),
        }
    }

    fn require_known(&self, i: i32) -> Result<()> {
        if self.is_known(i + 1) {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "homology at position {i} needs position {} of a prefix ending at {}",
                i + 1,
                self.hi()
            )))
        }
    }

    /// Whether `H_i` vanishes; otherwise its initial degree, read off the
    /// cycle generators outside the boundaries.
    pub fn homology_info(&self, i: i32) -> Result<HomologyInfo> {
        self.require_known(i)?;
        if self.rank(i) == 0 {
            return Ok(HomologyInfo {
                position: i,
                nonzero: false,
                indeg: None,
            });
        }
        let cycles = self.cycles(i)?;
        let twists = self.twists(i);
        let boundary = self.differential_or_zero(i + 1);
        let gb = groebner(self.algebra.ring(), self.algebra.ideal(), twists, boundary.columns())?;
        let mut indeg: Option<i32> = None;
        for z in &cycles {
            if !gb.normal_form(z)?.is_zero() {
                let d = z.degree(twists).expect("nonzero cycle");
                indeg = Some(indeg.map_or(d, |e| e.min(d)));
            }
        }
        Ok(HomologyInfo {
            position: i,
            nonzero: indeg.is_some(),
            indeg,
        })
    }

    /// `H_i` as a finitely presented module.
    pub fn homology(&self, i: i32) -> Result<GradedModule<F>> {
        self.require_known(i)?;
        let boundary = self.differential_or_zero(i + 1);
        let ambient = GradedModule::cokernel(self.algebra.clone(), boundary)?;
        if self.rank(i) == 0 {
            return Ok(GradedModule::free(self.algebra.clone(), Vec::new()));
        }
        let cycles = self.cycles(i)?;
        let nonzero: Vec<_> = cycles.into_iter().filter(|z| !z.is_zero()).collect();
        ambient.submodule(&nonzero)
    }

    /// Renders each differential.
    pub fn describe(&self) -> String {
        let ring = self.algebra.ring();
        let mut out = Vec::new();
        for i in self.positions().rev() {
            out.push(format!("F_{i}: twists {:?}", self.twists(i)));
            if let Some(d) = self.differential(i) {
                out.push(format!("d_{i}:\n{}", d.format(ring)));
            }
        }
        if !self.complete {
            out.push("(prefix)".to_string());
        }
        out.join("\n")
    }
}
