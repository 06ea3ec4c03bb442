use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{
    groebner, minimal_generators, syzygies, vector_from_terms, GroebnerBasis, LaurentPoly, ModuleOrder, ModuleTerm,
    ModuleVector,
};
use crate::poly::{Homogeneity, Monomial, Polynomial};

use super::algebra::Algebra;
use super::matrix::Matrix;

#[derive(Debug, Default)]
struct Cache<F: Field> {
    gb: OnceLock<GroebnerBasis<F>>,
    minimal: OnceLock<GradedModule<F>>,
}

/// A finitely presented graded module `M = coker(P: F_1 → F_0)` over a
/// graded algebra, where `F_0 = ⊕ R(-a_i)` carries the generators.
#[derive(Clone, Debug)]
pub struct GradedModule<F: Field> {
    algebra: Algebra<F>,
    presentation: Matrix<F::Elem>,
    cache: Arc<Cache<F>>,
}

impl<F: Field> GradedModule<F> {
    fn build(algebra: Algebra<F>, presentation: Matrix<F::Elem>) -> Self {
        GradedModule {
            algebra,
            presentation,
            cache: Arc::new(Cache {
                gb: OnceLock::new(),
                minimal: OnceLock::new(),
            }),
        }
    }

    /// The cokernel of a homogeneous matrix.
    pub fn cokernel(algebra: Algebra<F>, presentation: Matrix<F::Elem>) -> Result<Self> {
        let m = Matrix::from_columns(
            algebra.ring(),
            presentation.target().to_vec(),
            presentation.source().to_vec(),
            presentation.columns().to_vec(),
        )?;
        Ok(Self::build(algebra, m))
    }

    /// The cokernel of a matrix given by rows of polynomial text.
    pub fn from_rows(algebra: Algebra<F>, row_twists: Vec<i32>, rows: &[Vec<&str>]) -> Result<Self> {
        let ring = algebra.ring();
        let parsed = rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                r.iter()
                    .enumerate()
                    .map(|(j, s)| ring.parse(s).map_err(|e| e.context(format!("matrix entry ({i}, {j})"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let m = Matrix::from_rows(ring, row_twists, None, &parsed)?;
        Ok(Self::build(algebra, m))
    }

    /// `⊕ R(-a_i)`.
    pub fn free(algebra: Algebra<F>, twists: Vec<i32>) -> Self {
        Self::build(algebra, Matrix::zero(twists, Vec::new()))
    }

    /// The residue field `k = R/m`.
    pub fn residue_field(algebra: Algebra<F>) -> Self {
        let ring = algebra.ring();
        let cols: Vec<_> = (0..ring.nvars())
            .map(|i| ModuleVector::from_polynomial(&ring.var(i), 0))
            .collect();
        let m = Matrix::from_columns_unchecked(vec![0], vec![1; cols.len()], cols);
        Self::build(algebra, m)
    }

    /// `R/(gens)` generated in degree zero.
    pub fn cyclic(algebra: Algebra<F>, gens: &[Polynomial<F::Elem>]) -> Result<Self> {
        let ring = algebra.ring();
        let mut cols = Vec::new();
        let mut src = Vec::new();
        for (i, g) in gens.iter().enumerate() {
            match ring.is_homogeneous(g) {
                Homogeneity::Zero => {}
                Homogeneity::Mixed => return Err(Error::NotHomogeneous(format!("generator {i}: {}", ring.format(g)))),
                Homogeneity::Degree(d) => {
                    cols.push(ModuleVector::from_polynomial(g, 0));
                    src.push(d as i32);
                }
            }
        }
        let m = Matrix::from_columns_unchecked(vec![0], src, cols);
        Ok(Self::build(algebra, m))
    }

    /// Parses `R/(gens)`.
    pub fn cyclic_parse(algebra: Algebra<F>, gens: &[&str]) -> Result<Self> {
        let ps = gens
            .iter()
            .map(|s| algebra.ring().parse(s))
            .collect::<Result<Vec<_>>>()?;
        Self::cyclic(algebra, &ps)
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }

    pub fn presentation(&self) -> &Matrix<F::Elem> {
        &self.presentation
    }

    /// Twists of the given generators.
    pub fn generator_twists(&self) -> &[i32] {
        self.presentation.target()
    }

    pub fn order(&self) -> ModuleOrder {
        ModuleOrder::top(self.algebra.ring().order(), self.generator_twists().to_vec())
    }

    /// Gröbner basis of `im P + I F_0` in `F_0` over `S`.
    pub fn relation_gb(&self) -> &GroebnerBasis<F> {
        self.cache.gb.get_or_init(|| {
            groebner(
                self.algebra.ring(),
                self.algebra.ideal(),
                self.generator_twists(),
                self.presentation.columns(),
            )
            .expect("presentation columns are homogeneous")
        })
    }

    /// Whether the element of `F_0` vanishes in `M`.
    pub fn is_zero_element(&self, v: &ModuleVector<F::Elem>) -> bool {
        self.relation_gb().normal_form(v).map(|r| r.is_zero()).unwrap_or(false)
    }

    pub fn normal_form(&self, v: &ModuleVector<F::Elem>) -> Result<ModuleVector<F::Elem>> {
        self.relation_gb().normal_form(v)
    }

    pub fn is_zero(&self) -> bool {
        let n = self.algebra.nvars();
        let one = self.algebra.field().one();
        (0..self.generator_twists().len()).all(|i| self.is_zero_element(&ModuleVector::unit(i, n, one.clone())))
    }

    /// Numerator of the Hilbert series over `(1-t)^n`, `n` the number of
    /// variables.
    pub fn hilbert_numerator(&self) -> LaurentPoly {
        self.relation_gb().hilbert_numerator()
    }

    /// `dim_k M_d` for `d` in `lo..=hi`.
    pub fn hilbert_function(&self, lo: i32, hi: i32) -> Vec<i64> {
        self.hilbert_numerator()
            .series_coefficients(self.algebra.nvars() as u32, lo, hi)
    }

    /// A `k`-basis of `M_d` by standard monomials times generators.
    pub fn basis_in_degree(&self, d: i32) -> Vec<ModuleVector<F::Elem>> {
        let gb = self.relation_gb();
        let n = self.algebra.nvars();
        let one = self.algebra.field().one();
        let mut out = Vec::new();
        for (c, &a) in self.generator_twists().iter().enumerate() {
            if d < a {
                continue;
            }
            let leads = gb.leading_monomials(c);
            for m in Monomial::all_of_degree(n, (d - a) as u32) {
                if !leads.iter().any(|l| l.divides(&m)) {
                    out.push(ModuleVector::from_sorted(vec![ModuleTerm {
                        comp: c,
                        mon: m,
                        coeff: one.clone(),
                    }]));
                }
            }
        }
        out
    }

    /// Generators of the relations among `elements` of `F_0` (with the given
    /// degrees) holding in `M`, as vectors of `⊕ R(-deg u_k)`.
    pub fn relations_among(&self, elements: &[ModuleVector<F::Elem>], degrees: &[i32]) -> Result<Matrix<F::Elem>> {
        let ring = self.algebra.ring();
        let m = elements.len();
        let mut cols: Vec<ModuleVector<F::Elem>> = elements.to_vec();
        cols.extend(self.presentation.columns().iter().cloned());
        let mut source: Vec<i32> = degrees.to_vec();
        source.extend_from_slice(self.presentation.source());
        let syz = syzygies(ring, self.algebra.ideal(), self.generator_twists(), &source, &cols)?;
        let order = ModuleOrder::top(ring.order(), degrees.to_vec());
        let projected: Vec<ModuleVector<F::Elem>> = syz
            .into_iter()
            .map(|v| {
                let terms = v.into_terms().into_iter().filter(|t| t.comp < m).collect();
                vector_from_terms(ring.field(), &order, terms)
            })
            .filter(|v| !v.is_zero())
            .collect();
        let keep = minimal_generators(ring, self.algebra.ideal(), degrees, &[], &projected)?;
        let chosen: Vec<ModuleVector<F::Elem>> = keep
            .into_iter()
            .map(|i| self.algebra.reduce_vector(degrees, &projected[i]))
            .collect();
        let src = chosen.iter().map(|v| v.degree(degrees).expect("nonzero")).collect();
        Ok(Matrix::from_columns_unchecked(degrees.to_vec(), src, chosen))
    }

    /// The submodule of `M` generated by `elements` of `F_0`.
    pub fn submodule(&self, elements: &[ModuleVector<F::Elem>]) -> Result<GradedModule<F>> {
        let twists = self.generator_twists();
        let mut degrees = Vec::with_capacity(elements.len());
        for (i, v) in elements.iter().enumerate() {
            if !v.is_homogeneous(twists) {
                return Err(Error::NotHomogeneous(format!("submodule generator {i}")));
            }
            degrees.push(
                v.degree(twists)
                    .ok_or_else(|| Error::Degenerate(format!("submodule generator {i} is zero")))?,
            );
        }
        let rel = self.relations_among(elements, &degrees)?;
        Ok(Self::build(self.algebra.clone(), rel))
    }

    /// An isomorphic module whose presentation is minimal: generators
    /// minimal and relations minimal with entries in `m`.
    pub fn minimal_presentation(&self) -> &GradedModule<F> {
        self.cache.minimal.get_or_init(|| self.compute_minimal().expect("presentation is homogeneous"))
    }

    fn compute_minimal(&self) -> Result<GradedModule<F>> {
        let ring = self.algebra.ring();
        let ideal = self.algebra.ideal();
        let twists = self.generator_twists();
        let p = &self.presentation;
        let has_unit = p.entry_degrees().any(|(_, _, d)| d <= 0);
        if !has_unit {
            let keep = minimal_generators(ring, ideal, twists, &[], p.columns())?;
            let cols: Vec<_> = keep
                .iter()
                .map(|&j| self.algebra.reduce_vector(twists, &p.columns()[j]))
                .collect();
            let src = keep.iter().map(|&j| p.source()[j]).collect();
            let m = Matrix::from_columns_unchecked(twists.to_vec(), src, cols);
            return Ok(Self::build(self.algebra.clone(), m));
        }
        let n = self.algebra.nvars();
        let one = self.algebra.field().one();
        let units: Vec<_> = (0..twists.len()).map(|i| ModuleVector::unit(i, n, one.clone())).collect();
        let kept = minimal_generators(ring, ideal, twists, p.columns(), &units)?;
        let elements: Vec<_> = kept.iter().map(|&i| units[i].clone()).collect();
        let degrees: Vec<i32> = kept.iter().map(|&i| twists[i]).collect();
        let rel = self.relations_among(&elements, &degrees)?;
        Ok(Self::build(self.algebra.clone(), rel))
    }

    /// Minimal number of generators.
    pub fn nu(&self) -> usize {
        self.minimal_presentation().generator_twists().len()
    }

    /// Smallest degree of a minimal generator, absent for the zero module.
    pub fn indeg(&self) -> Option<i32> {
        self.minimal_presentation().generator_twists().iter().copied().min()
    }

    /// `M(k)`: the same module with degrees shifted down by `k`.
    pub fn twist(&self, k: i32) -> GradedModule<F> {
        let p = &self.presentation;
        let m = Matrix::from_columns_unchecked(
            p.target().iter().map(|a| a - k).collect(),
            p.source().iter().map(|a| a - k).collect(),
            p.columns().to_vec(),
        );
        Self::build(self.algebra.clone(), m)
    }

    pub fn direct_sum(&self, other: &GradedModule<F>) -> Result<GradedModule<F>> {
        self.algebra.check_same(&other.algebra)?;
        let r = self.generator_twists().len();
        let mut target = self.generator_twists().to_vec();
        target.extend_from_slice(other.generator_twists());
        let order = ModuleOrder::top(self.algebra.ring().order(), target.clone());
        let mut cols: Vec<_> = self.presentation.columns().iter().map(|c| c.resort(&order)).collect();
        cols.extend(other.presentation.columns().iter().map(|c| c.map_components(&order, |i| i + r)));
        let mut src = self.presentation.source().to_vec();
        src.extend_from_slice(other.presentation.source());
        Ok(Self::build(
            self.algebra.clone(),
            Matrix::from_columns_unchecked(target, src, cols),
        ))
    }

    /// `M` regarded as a module over the ambient polynomial ring.
    pub fn over_ambient(&self) -> GradedModule<F> {
        let s = self.algebra.ambient();
        if self.algebra.is_polynomial() {
            return self.clone();
        }
        let twists = self.generator_twists().to_vec();
        let order = ModuleOrder::top(s.ring().order(), twists.clone());
        let mut cols: Vec<_> = self.presentation.columns().to_vec();
        let mut src = self.presentation.source().to_vec();
        for (c, &a) in twists.iter().enumerate() {
            for g in self.algebra.generators() {
                let v = ModuleVector::from_polynomial(g, c);
                src.push(a + v.leading().map_or(0, |t| t.mon.degree() as i32));
                cols.push(v.resort(&order));
            }
        }
        Self::build(s, Matrix::from_columns_unchecked(twists, src, cols))
    }

    /// `M / (f_1, ..., f_c) M`.
    pub fn quotient_by_sequence(&self, forms: &[Polynomial<F::Elem>]) -> Result<GradedModule<F>> {
        let ring = self.algebra.ring();
        let twists = self.generator_twists().to_vec();
        let order = ModuleOrder::top(ring.order(), twists.clone());
        let mut cols = self.presentation.columns().to_vec();
        let mut src = self.presentation.source().to_vec();
        for (k, f) in forms.iter().enumerate() {
            let d = match ring.is_homogeneous(f) {
                Homogeneity::Zero => continue,
                Homogeneity::Mixed => return Err(Error::NotHomogeneous(format!("form {k}: {}", ring.format(f)))),
                Homogeneity::Degree(0) => {
                    return Err(Error::Precondition(format!("form {k} has degree zero")));
                }
                Homogeneity::Degree(d) => d as i32,
            };
            for (c, &a) in twists.iter().enumerate() {
                cols.push(ModuleVector::from_polynomial(f, c).resort(&order));
                src.push(a + d);
            }
        }
        Ok(Self::build(
            self.algebra.clone(),
            Matrix::from_columns_unchecked(twists, src, cols),
        ))
    }

    /// Generators of the kernel of multiplication by a form
    /// `f: M(-deg f) → M`, as elements of `F_0` that are nonzero in `M`.
    pub fn multiplication_kernel(&self, f: &Polynomial<F::Elem>) -> Result<Vec<ModuleVector<F::Elem>>> {
        let ring = self.algebra.ring();
        let d = match ring.is_homogeneous(f) {
            Homogeneity::Degree(d) => d as i32,
            Homogeneity::Zero => 0,
            Homogeneity::Mixed => return Err(Error::NotHomogeneous(ring.format(f))),
        };
        let twists = self.generator_twists();
        let order = ModuleOrder::top(ring.order(), twists.to_vec());
        let images: Vec<_> = (0..twists.len())
            .map(|c| ModuleVector::from_polynomial(f, c).resort(&order))
            .collect();
        let degrees: Vec<i32> = twists.iter().map(|a| a + d).collect();
        let rel = self.relations_among(&images, &degrees)?;
        Ok(rel
            .columns()
            .iter()
            .filter(|v| !self.is_zero_element(v))
            .map(|v| v.resort(&order))
            .collect())
    }

    /// Presentation rendered one row per line.
    pub fn describe(&self) -> String {
        format!(
            "coker over {} with generator twists {:?}\n{}",
            self.algebra.describe(),
            self.generator_twists(),
            self.presentation.format(self.algebra.ring())
        )
    }
}
