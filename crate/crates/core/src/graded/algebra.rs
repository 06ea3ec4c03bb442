use std::sync::atomic::{AtomicU8, Ordering};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{
    ideal_groebner, mul_polynomial, reduce_mod_ideal, vector_from_terms, GroebnerBasis, LaurentPoly, ModuleOrder,
    ModuleVector,
};
use crate::poly::{Homogeneity, PolyRing, Polynomial};

use super::matrix::Matrix;

const KOSZUL_UNKNOWN: u8 = 0;
const KOSZUL_YES: u8 = 1;
const KOSZUL_NO: u8 = 2;

/// A standard graded algebra `R = S/I` with `S = k[x_1..x_n]` and `I`
/// generated by forms of degree at least two.
#[derive(Debug)]
pub struct GradedAlgebra<F: Field> {
    ring: PolyRing<F>,
    generators: Vec<Polynomial<F::Elem>>,
    gb: GroebnerBasis<F>,
    ideal: Vec<Polynomial<F::Elem>>,
    koszul: AtomicU8,
    numerator: OnceLock<LaurentPoly>,
    ambient: OnceLock<Arc<GradedAlgebra<F>>>,
}

/// Shared handle to an algebra.
pub type Algebra<F> = Arc<GradedAlgebra<F>>;

impl<F: Field> GradedAlgebra<F> {
    /// Builds `ring / (generators)`. Every generator must be homogeneous of
    /// degree at least two.
    pub fn new(ring: PolyRing<F>, generators: Vec<Polynomial<F::Elem>>) -> Result<Algebra<F>> {
        for (i, g) in generators.iter().enumerate() {
            match ring.is_homogeneous(g) {
                Homogeneity::Mixed => {
                    return Err(Error::NotHomogeneous(format!("ideal generator {i}: {}", ring.format(g))));
                }
                Homogeneity::Degree(d) if d < 2 => {
                    return Err(Error::LinearRelation(ring.format(g)));
                }
                _ => {}
            }
        }
        let generators: Vec<_> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        let gb = ideal_groebner(&ring, &generators)?;
        let ideal = gb.elements().iter().map(|v| v.entry(0)).collect();
        Ok(Arc::new(GradedAlgebra {
            ring,
            generators,
            gb,
            ideal,
            koszul: AtomicU8::new(KOSZUL_UNKNOWN),
            numerator: OnceLock::new(),
            ambient: OnceLock::new(),
        }))
    }

    /// The polynomial ring in the given variables.
    pub fn polynomial(field: F, names: &[&str]) -> Result<Algebra<F>> {
        let ring = PolyRing::new(field, names.iter().map(|s| s.to_string()).collect())?;
        Self::new(ring, Vec::new())
    }

    /// Parses the ideal generators in the ring's variables.
    pub fn parse(field: F, names: &[&str], ideal: &[&str]) -> Result<Algebra<F>> {
        let ring = PolyRing::new(field, names.iter().map(|s| s.to_string()).collect())?;
        let gens = ideal
            .iter()
            .map(|s| ring.parse(s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, gens)
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    /// The ideal generators as given (zeros dropped).
    pub fn generators(&self) -> &[Polynomial<F::Elem>] {
        &self.generators
    }

    /// The reduced Gröbner basis of `I`, as polynomials.
    pub fn ideal(&self) -> &[Polynomial<F::Elem>] {
        &self.ideal
    }

    pub fn ideal_gb(&self) -> &GroebnerBasis<F> {
        &self.gb
    }

    pub fn is_polynomial(&self) -> bool {
        self.ideal.is_empty()
    }

    /// `Some(true)` or `Some(false)` once Koszulness has been certified.
    pub fn koszul_known(&self) -> Option<bool> {
        match self.koszul.load(Ordering::Relaxed) {
            KOSZUL_YES => Some(true),
            KOSZUL_NO => Some(false),
            _ => None,
        }
    }

    pub fn set_koszul_known(&self, value: bool) {
        self.koszul
            .store(if value { KOSZUL_YES } else { KOSZUL_NO }, Ordering::Relaxed);
    }

    /// Numerator of the Hilbert series of `R` over `(1-t)^n`.
    pub fn hilbert_numerator(&self) -> &LaurentPoly {
        self.numerator.get_or_init(|| self.gb.hilbert_numerator())
    }

    /// Krull dimension of `R`.
    pub fn dim(&self) -> usize {
        let mut n = self.hilbert_numerator().clone();
        let mut k = 0;
        while let Some(q) = n.div_one_minus_t() {
            if q.is_zero() {
                break;
            }
            n = q;
            k += 1;
        }
        self.nvars() - k
    }

    /// The ambient polynomial ring `S` as an algebra.
    pub fn ambient(self: &Arc<Self>) -> Algebra<F> {
        if self.is_polynomial() {
            return self.clone();
        }
        self.ambient
            .get_or_init(|| GradedAlgebra::new(self.ring.clone(), Vec::new()).expect("the zero ideal is valid"))
            .clone()
    }

    /// `R/J` for further homogeneous forms `J`.
    pub fn quotient(&self, extra: &[Polynomial<F::Elem>]) -> Result<Algebra<F>> {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        GradedAlgebra::new(self.ring.clone(), gens)
    }

    /// Whether both describe the same ring with the same ideal.
    pub fn same_as(&self, other: &Self) -> bool {
        std::ptr::eq(self, other)
            || (self.ring.names() == other.ring.names()
                && self.field().spec() == other.field().spec()
                && self.ring.order() == other.ring.order()
                && self.ideal == other.ideal)
    }

    pub(crate) fn check_same(&self, other: &Self) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch("objects live over different algebras".into()))
        }
    }

    pub fn reduce(&self, f: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        if self.is_polynomial() {
            f.clone()
        } else {
            self.gb.reduce_polynomial(f)
        }
    }

    /// Reduces every coordinate of a vector of `⊕ R(-a_j)` to normal form.
    pub fn reduce_vector(&self, twists: &[i32], v: &ModuleVector<F::Elem>) -> ModuleVector<F::Elem> {
        let order = ModuleOrder::top(self.ring.order(), twists.to_vec());
        reduce_mod_ideal(self.field(), &self.gb, &order, v)
    }

    /// `a * b` with entries reduced modulo `I`.
    pub fn compose(&self, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Result<Matrix<F::Elem>> {
        if a.source() != b.target() {
            return Err(Error::DegreeMismatch(format!(
                "cannot compose maps with twists {:?} and {:?}",
                a.source(),
                b.target()
            )));
        }
        let order = ModuleOrder::top(self.ring.order(), a.target().to_vec());
        let field = self.field();
        let mut cols = Vec::with_capacity(b.ncols());
        for v in b.columns() {
            let mut terms = Vec::new();
            for i in 0..b.nrows() {
                let f = v.entry(i);
                if f.is_zero() {
                    continue;
                }
                terms.extend(mul_polynomial(field, &order, &f, &a.columns()[i]).into_terms());
            }
            let w = vector_from_terms(field, &order, terms);
            cols.push(reduce_mod_ideal(field, &self.gb, &order, &w));
        }
        Ok(Matrix::from_columns_unchecked(
            a.target().to_vec(),
            b.source().to_vec(),
            cols,
        ))
    }

    /// A matrix with every entry reduced modulo `I`.
    pub fn reduce_matrix(&self, m: &Matrix<F::Elem>) -> Matrix<F::Elem> {
        let cols = m.columns().iter().map(|c| self.reduce_vector(m.target(), c)).collect();
        Matrix::from_columns_unchecked(m.target().to_vec(), m.source().to_vec(), cols)
    }

    /// Renders `k[x, y]/(x^2, x*y)`.
    pub fn describe(&self) -> String {
        let vars = self.ring.names().join(", ");
        let base = format!("{}[{}]", self.field().spec(), vars);
        if self.generators.is_empty() {
            base
        } else {
            let gens: Vec<String> = self.generators.iter().map(|g| self.ring.format(g)).collect();
            format!("{base}/({})", gens.join(", "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn construction() {
        let r = GradedAlgebra::parse(Rationals, &["x", "y"], &["x^2", "x*y"]).unwrap();
        assert!(!r.is_polynomial());
        assert_eq!(r.dim(), 1);
        assert_eq!(r.describe(), "QQ[x, y]/(x^2, x*y)");
        let s = GradedAlgebra::polynomial(PrimeField::new(101).unwrap(), &["x", "y", "z"]).unwrap();
        assert!(s.is_polynomial());
        assert_eq!(s.dim(), 3);
        assert!(matches!(
            GradedAlgebra::parse(Rationals, &["x", "y"], &["x + y"]),
            Err(Error::LinearRelation(_))
        ));
        assert!(matches!(
            GradedAlgebra::parse(Rationals, &["x", "y"], &["x^2 + y"]),
            Err(Error::NotHomogeneous(_))
        ));
    }

    #[test]
    fn koszul_flag_is_tri_state() {
        let r = GradedAlgebra::parse(Rationals, &["x"], &["x^3"]).unwrap();
        assert_eq!(r.koszul_known(), None);
        r.set_koszul_known(false);
        assert_eq!(r.koszul_known(), Some(false));
        assert!(r.ambient().is_polynomial());
    }
}
