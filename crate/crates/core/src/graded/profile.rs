use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::complexes::minimal_resolution;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::LaurentPoly;
use crate::poly::{Monomial, Polynomial};

use super::module::GradedModule;

/// Numerical invariants of a graded module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NumericalProfile {
    /// Numerator of the Hilbert series over `(1-t)^n`.
    pub hilbert_numerator: LaurentPoly,
    pub dim: i32,
    pub depth: i32,
    pub degree: i64,
    pub nu: usize,
    pub indeg: Option<i32>,
    /// Set for the zero module, where the other fields carry no meaning.
    pub degenerate: bool,
}

/// Splits `N(t) = (1-t)^k e(t)` with `e(1) ≠ 0`.
fn strip_one_minus_t(n: &LaurentPoly) -> (u32, LaurentPoly) {
    let mut e = n.clone();
    let mut k = 0;
    while !e.is_zero() && e.eval_at_one() == 0 {
        e = e.div_one_minus_t().expect("root at 1");
        k += 1;
    }
    (k, e)
}

pub fn numerical_profile<F: Field>(m: &GradedModule<F>) -> Result<NumericalProfile> {
    let n = m.algebra().nvars() as i32;
    let num = m.hilbert_numerator();
    if num.is_zero() {
        return Ok(NumericalProfile {
            hilbert_numerator: num,
            dim: -1,
            depth: -1,
            degree: 0,
            nu: 0,
            indeg: None,
            degenerate: true,
        });
    }
    let (k, e) = strip_one_minus_t(&num);
    let over_s = m.over_ambient();
    let res = minimal_resolution(&over_s, n + 1)?;
    let pd = res
        .projective_dimension()
        .ok_or_else(|| Error::Precondition("resolution over the polynomial ring did not terminate".into()))?;
    Ok(NumericalProfile {
        hilbert_numerator: num,
        dim: n - k as i32,
        depth: n - pd,
        degree: e.eval_at_one(),
        nu: m.nu(),
        indeg: m.indeg(),
        degenerate: false,
    })
}

fn nondegenerate<F: Field>(m: &GradedModule<F>, what: &str) -> Result<NumericalProfile> {
    let p = numerical_profile(m)?;
    if p.degenerate {
        return Err(Error::Degenerate(format!("{what} of the zero module")));
    }
    Ok(p)
}

pub fn is_cohen_macaulay<F: Field>(m: &GradedModule<F>) -> Result<bool> {
    let p = nondegenerate(m, "Cohen-Macaulay test")?;
    Ok(p.dim == p.depth)
}

/// Cohen-Macaulay with `deg M = ν(M)`.
pub fn has_minimal_degree<F: Field>(m: &GradedModule<F>) -> Result<bool> {
    let p = nondegenerate(m, "minimal degree test")?;
    Ok(p.dim == p.depth && p.degree == p.nu as i64)
}

/// Samples random linear forms until one is a non-zero-divisor on `M`.
pub fn find_regular_linear_form<F: Field>(
    m: &GradedModule<F>,
    attempts: usize,
    seed: u64,
) -> Result<Option<Polynomial<F::Elem>>> {
    let ring = m.algebra().ring();
    let field = ring.field();
    let n = ring.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..attempts {
        let terms: Vec<(Monomial, F::Elem)> = (0..n).map(|i| (Monomial::var(n, i), field.random(&mut rng))).collect();
        let l = ring.from_terms(terms);
        if l.is_zero() {
            continue;
        }
        if m.multiplication_kernel(&l)?.is_empty() {
            return Ok(Some(l));
        }
    }
    Ok(None)
}
