//! Homogeneous Gröbner bases of submodules of graded free modules over a
//! polynomial ring `S`, and over `R = S/I` by adjoining `I * e_i`.

mod engine;
mod hilbert;
mod vector;

pub use hilbert::{monomial_ideal_numerator, LaurentPoly};
pub use vector::{
    add_vectors, monic, mul_polynomial, scale_vector, sub_scaled, vector_from_terms, ModuleOrder, ModuleTerm,
    ModuleVector, TieBreak,
};

use engine::{Engine, LeadIndex};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Monomial, PolyRing, Polynomial};

/// A reduced Gröbner basis of a submodule of `⊕ S(-a_j)`.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    field: F,
    nvars: usize,
    order: ModuleOrder,
    elements: Vec<ModuleVector<F::Elem>>,
    index: LeadIndex,
}

impl<F: Field> GroebnerBasis<F> {
    fn from_engine(field: &F, nvars: usize, engine: Engine<'_, F>) -> Self {
        let order = engine.order().clone();
        let (elements, index) = engine.into_reduced();
        GroebnerBasis {
            field: field.clone(),
            nvars,
            order,
            elements,
            index,
        }
    }

    pub fn elements(&self) -> &[ModuleVector<F::Elem>] {
        &self.elements
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn rank(&self) -> usize {
        self.order.rank()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    fn check_vector(&self, v: &ModuleVector<F::Elem>) -> Result<()> {
        if let Some(t) = v.terms().iter().find(|t| t.comp >= self.rank() || t.mon.nvars() != self.nvars) {
            return Err(Error::RingMismatch(format!(
                "vector term in component {} with {} variables, ambient has rank {} over {} variables",
                t.comp,
                t.mon.nvars(),
                self.rank(),
                self.nvars
            )));
        }
        Ok(())
    }

    /// The unique remainder of `v`; zero exactly when `v` is in the submodule.
    pub fn normal_form(&self, v: &ModuleVector<F::Elem>) -> Result<ModuleVector<F::Elem>> {
        self.check_vector(v)?;
        let sorted = v.resort(&self.order);
        Ok(self.reduce_sorted(sorted))
    }

    fn reduce_sorted(&self, v: ModuleVector<F::Elem>) -> ModuleVector<F::Elem> {
        ModuleVector::from_sorted(engine::reduce(
            &self.field,
            &self.order,
            &self.elements,
            &self.index,
            v.into_terms(),
            true,
        ))
    }

    pub fn contains(&self, v: &ModuleVector<F::Elem>) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }

    /// Normal form of a polynomial against a basis of an ideal (rank one).
    pub fn reduce_polynomial(&self, f: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        debug_assert_eq!(self.rank(), 1);
        self.reduce_sorted(ModuleVector::from_polynomial(f, 0)).entry(0)
    }

    /// Leading monomials of the basis elements in component `comp`.
    pub fn leading_monomials(&self, comp: usize) -> Vec<Monomial> {
        self.index.in_comp(comp).iter().map(|&i| self.index.lead(i).1).collect()
    }

    /// Numerator `N(t)` with `H(t) = N(t)/(1-t)^n` for the quotient of the
    /// ambient free module by this submodule.
    pub fn hilbert_numerator(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for c in 0..self.rank() {
            out = out.add(&monomial_ideal_numerator(&self.leading_monomials(c)).shift(self.order.shifts[c]));
        }
        out
    }
}

fn check_homogeneous<E: Clone>(what: &str, vs: &[ModuleVector<E>], shifts: &[i32]) -> Result<()> {
    for (i, v) in vs.iter().enumerate() {
        if let Some(t) = v.terms().iter().find(|t| t.comp >= shifts.len()) {
            return Err(Error::RingMismatch(format!(
                "{what} {i} has a term in component {} of a rank {} module",
                t.comp,
                shifts.len()
            )));
        }
        if !v.is_homogeneous(shifts) {
            return Err(Error::NotHomogeneous(format!("{what} {i}")));
        }
    }
    Ok(())
}

/// The vectors `g * e_c` for every `g` in `ideal` and every component.
pub fn ideal_relations<E: Clone>(ideal: &[Polynomial<E>], rank: usize) -> Vec<ModuleVector<E>> {
    (0..rank)
        .flat_map(|c| ideal.iter().map(move |g| ModuleVector::from_polynomial(g, c)))
        .collect()
}

fn by_degree<E: Clone>(vs: &[ModuleVector<E>], shifts: &[i32]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..vs.len()).filter(|&i| !vs[i].is_zero()).collect();
    idx.sort_by_key(|&i| vs[i].degree(shifts));
    idx
}

/// Reduced Gröbner basis of the submodule of `⊕ R(-a_j)` generated by
/// `gens`, computed over `S` with the ideal's relations adjoined.
pub fn groebner<F: Field>(
    ring: &PolyRing<F>,
    ideal: &[Polynomial<F::Elem>],
    shifts: &[i32],
    gens: &[ModuleVector<F::Elem>],
) -> Result<GroebnerBasis<F>> {
    check_homogeneous("generator", gens, shifts)?;
    let order = ModuleOrder::top(ring.order(), shifts.to_vec());
    let mut all: Vec<ModuleVector<F::Elem>> = ideal_relations(ideal, shifts.len())
        .into_iter()
        .chain(gens.iter().cloned())
        .map(|v| v.resort(&order))
        .collect();
    let idx = by_degree(&all, shifts);
    let mut engine = Engine::new(ring.field(), order);
    for i in idx {
        let v = std::mem::replace(&mut all[i], ModuleVector::zero());
        engine.add(&v);
    }
    Ok(GroebnerBasis::from_engine(ring.field(), ring.nvars(), engine))
}

/// Reduced Gröbner basis of a homogeneous ideal of `S`.
pub fn ideal_groebner<F: Field>(ring: &PolyRing<F>, gens: &[Polynomial<F::Elem>]) -> Result<GroebnerBasis<F>> {
    let vs: Vec<_> = gens.iter().map(|g| ModuleVector::from_polynomial(g, 0)).collect();
    groebner(ring, &[], &[0], &vs)
}

/// Generators of the module of relations `sum c_j v_j = 0` over `S/(ideal)`
/// among `columns` (vectors of `⊕ S(-a_i)` with twists `target`), as
/// vectors of `⊕ S(-b_j)` with `source` twists `b_j = deg v_j`. The result
/// is a Gröbner basis of the preimage in `S`; it is not minimal and may
/// contain elements of `I * ⊕ S(-b_j)`.
pub fn syzygies<F: Field>(
    ring: &PolyRing<F>,
    ideal: &[Polynomial<F::Elem>],
    target: &[i32],
    source: &[i32],
    columns: &[ModuleVector<F::Elem>],
) -> Result<Vec<ModuleVector<F::Elem>>> {
    if columns.len() != source.len() {
        return Err(Error::DegreeMismatch(format!(
            "{} columns for {} source twists",
            columns.len(),
            source.len()
        )));
    }
    check_homogeneous("column", columns, target)?;
    for (j, v) in columns.iter().enumerate() {
        if let Some(d) = v.degree(target) {
            if d != source[j] {
                return Err(Error::DegreeMismatch(format!(
                    "column {j} has degree {d} but source twist {}",
                    source[j]
                )));
            }
        }
    }
    let r = target.len();
    let shifts: Vec<i32> = target.iter().chain(source).copied().collect();
    let order = ModuleOrder {
        base: ring.order(),
        tie: TieBreak::TermOverPosition,
        shifts: shifts.clone(),
        split: Some(r),
    };
    let one = ring.field().one();
    let mut gens: Vec<ModuleVector<F::Elem>> = Vec::new();
    for (j, v) in columns.iter().enumerate() {
        let mut terms = v.terms().to_vec();
        terms.push(ModuleTerm {
            comp: r + j,
            mon: Monomial::one(ring.nvars()),
            coeff: one.clone(),
        });
        gens.push(vector_from_terms(ring.field(), &order, terms));
    }
    for rel in ideal_relations(ideal, r) {
        gens.push(rel.resort(&order));
    }
    let idx = by_degree(&gens, &shifts);
    let mut engine = Engine::new(ring.field(), order);
    for i in idx {
        engine.add(&gens[i]);
    }
    let (basis, _) = engine.into_reduced();
    let out_order = ModuleOrder::top(ring.order(), source.to_vec());
    Ok(basis
        .into_iter()
        .filter(|g| g.leading().is_some_and(|t| t.comp >= r))
        .map(|g| g.map_components(&out_order, |c| c - r))
        .collect())
}

/// Indices of a minimal generating subset of the image of `gens` in
/// `⊕ R(-a_j) / N`, where `R = S/(ideal)` and `N` is generated by
/// `relations`. Generators are scanned by increasing degree; among equal
/// degrees the earlier-listed one is kept.
pub fn minimal_generators<F: Field>(
    ring: &PolyRing<F>,
    ideal: &[Polynomial<F::Elem>],
    shifts: &[i32],
    relations: &[ModuleVector<F::Elem>],
    gens: &[ModuleVector<F::Elem>],
) -> Result<Vec<usize>> {
    check_homogeneous("generator", gens, shifts)?;
    check_homogeneous("relation", relations, shifts)?;
    let order = ModuleOrder::top(ring.order(), shifts.to_vec());
    let rels: Vec<ModuleVector<F::Elem>> = ideal_relations(ideal, shifts.len())
        .into_iter()
        .chain(relations.iter().cloned())
        .map(|v| v.resort(&order))
        .collect();
    let sorted: Vec<ModuleVector<F::Elem>> = gens.iter().map(|v| v.resort(&order)).collect();
    let rel_idx = by_degree(&rels, shifts);
    let gen_idx = by_degree(&sorted, shifts);
    let mut engine = Engine::new(ring.field(), order);
    let mut kept = Vec::new();
    let mut ri = 0;
    for i in gen_idx {
        let d = sorted[i].degree(shifts);
        while ri < rel_idx.len() && rels[rel_idx[ri]].degree(shifts) <= d {
            engine.add(&rels[rel_idx[ri]]);
            ri += 1;
        }
        if engine.add(&sorted[i]) {
            kept.push(i);
        }
    }
    Ok(kept)
}

/// Reduces every coordinate of `v` modulo the ideal with Gröbner basis `gb`.
pub fn reduce_mod_ideal<F: Field>(
    field: &F,
    gb: &GroebnerBasis<F>,
    order: &ModuleOrder,
    v: &ModuleVector<F::Elem>,
) -> ModuleVector<F::Elem> {
    if gb.is_empty() {
        return v.clone();
    }
    let mut comps: Vec<usize> = v.components().collect();
    comps.sort_unstable();
    comps.dedup();
    let mut terms = Vec::with_capacity(v.len());
    for c in comps {
        let f = gb.reduce_polynomial(&v.entry(c));
        terms.extend(ModuleVector::from_polynomial(&f, c).into_terms());
    }
    vector_from_terms(field, order, terms)
}

/// Minimal homogeneous generators of the kernel of the map
/// `⊕ R(-b_j) → ⊕ R(-a_i)` whose columns are `columns`, over
/// `R = S/(ideal)`, with coordinates reduced modulo the ideal. `ideal`
/// must be a Gröbner basis (`ideal_gb`).
pub fn kernel<F: Field>(
    ring: &PolyRing<F>,
    ideal_gb: &GroebnerBasis<F>,
    target: &[i32],
    source: &[i32],
    columns: &[ModuleVector<F::Elem>],
) -> Result<Vec<ModuleVector<F::Elem>>> {
    let ideal: Vec<Polynomial<F::Elem>> = ideal_gb.elements().iter().map(|v| v.entry(0)).collect();
    let syz = syzygies(ring, &ideal, target, source, columns)?;
    let keep = minimal_generators(ring, &ideal, source, &[], &syz)?;
    let order = ModuleOrder::top(ring.order(), source.to_vec());
    Ok(keep
        .into_iter()
        .map(|i| reduce_mod_ideal(ring.field(), ideal_gb, &order, &syz[i]))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn qxy() -> PolyRing<Rationals> {
        PolyRing::new(Rationals, vec!["x".into(), "y".into()]).unwrap()
    }

    fn polys<F: Field>(r: &PolyRing<F>, s: &[&str]) -> Vec<Polynomial<F::Elem>> {
        s.iter().map(|t| r.parse(t).unwrap()).collect()
    }

    fn col<F: Field>(r: &PolyRing<F>, s: &[&str]) -> ModuleVector<F::Elem> {
        let order = ModuleOrder::top(r.order(), vec![0; s.len()]);
        let terms = s
            .iter()
            .enumerate()
            .flat_map(|(c, t)| ModuleVector::from_polynomial(&r.parse(t).unwrap(), c).into_terms())
            .collect();
        vector_from_terms(r.field(), &order, terms)
    }

    fn gb_polys<F: Field>(r: &PolyRing<F>, gb: &GroebnerBasis<F>) -> Vec<String> {
        gb.elements().iter().map(|v| r.format(&v.entry(0))).collect()
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = qxy();
        let gb = ideal_groebner(&r, &polys(&r, &["x^2", "x*y"])).unwrap();
        assert_eq!(gb_polys(&r, &gb), vec!["x*y", "x^2"]);
    }

    #[test]
    fn binomial_ideal_acquires_cubic() {
        let r = qxy();
        let gb = ideal_groebner(&r, &polys(&r, &["x^2 - y^2", "x*y"])).unwrap();
        assert_eq!(gb_polys(&r, &gb), vec!["x*y", "x^2 - y^2", "y^3"]);
        // recomputation is identical
        let again = ideal_groebner(&r, &polys(&r, &["x*y", "x^2 - y^2", "x^3"])).unwrap();
        assert_eq!(gb_polys(&r, &again), gb_polys(&r, &gb));
    }

    #[test]
    fn single_vector_basis() {
        let r = qxy();
        let gb = groebner(&r, &[], &[0, 0], &[col(&r, &["x", "y"])]).unwrap();
        assert_eq!(gb.len(), 1);
    }

    #[test]
    fn normal_forms() {
        let r = qxy();
        let gb = ideal_groebner(&r, &polys(&r, &["x^2", "x*y"])).unwrap();
        assert!(gb.reduce_polynomial(&r.parse("x^3").unwrap()).is_zero());
        assert_eq!(gb.reduce_polynomial(&r.parse("y^3").unwrap()), r.parse("y^3").unwrap());
        assert!(gb.normal_form(&ModuleVector::zero()).unwrap().is_zero());
        assert!(gb.normal_form(&col(&r, &["x", "y"])).is_err());
    }

    #[test]
    fn non_homogeneous_rejected() {
        let r = qxy();
        assert!(matches!(
            ideal_groebner(&r, &polys(&r, &["x^2 + y"])),
            Err(Error::NotHomogeneous(_))
        ));
    }

    #[test]
    fn syzygies_of_monomials() {
        let r = qxy();
        let cols = vec![col(&r, &["x^2"]), col(&r, &["x*y"])];
        let syz = syzygies(&r, &[], &[0], &[2, 2], &cols).unwrap();
        assert_eq!(syz.len(), 1);
        assert_eq!(r.format(&syz[0].entry(0)), "-y");
        assert_eq!(r.format(&syz[0].entry(1)), "x");
        let dup = syzygies(&r, &[], &[0], &[1, 1], &[col(&r, &["x"]), col(&r, &["x"])]).unwrap();
        assert_eq!(dup.len(), 1);
        assert_eq!(r.format(&dup[0].entry(0)), "1");
        assert_eq!(r.format(&dup[0].entry(1)), "-1");
        let free = syzygies(&r, &[], &[0, 0], &[0, 0], &[col(&r, &["1", "0"]), col(&r, &["0", "1"])]).unwrap();
        assert!(free.is_empty());
    }

    #[test]
    fn kernels_over_quotients() {
        let r = qxy();
        let igb = ideal_groebner(&r, &polys(&r, &["x^2", "x*y"])).unwrap();
        let ker = kernel(&r, &igb, &[0], &[1], &[col(&r, &["y"])]).unwrap();
        assert_eq!(ker.len(), 1);
        assert_eq!(r.format(&ker[0].entry(0)), "x");
        let zero = kernel(&r, &igb, &[0], &[0], &[ModuleVector::zero()]).unwrap();
        assert_eq!(zero.len(), 1);
        assert_eq!(r.format(&zero[0].entry(0)), "1");
        let id = kernel(&r, &igb, &[0], &[0], &[col(&r, &["1"])]).unwrap();
        assert!(id.is_empty());
    }

    #[test]
    fn minimal_generator_selection() {
        let r = qxy();
        let gens = vec![col(&r, &["x"]), col(&r, &["x^2"]), col(&r, &["y"])];
        assert_eq!(minimal_generators(&r, &[], &[0], &[], &gens).unwrap(), vec![0, 2]);
        let gens = vec![col(&r, &["x+y"]), col(&r, &["x-y"]), col(&r, &["x"])];
        assert_eq!(minimal_generators(&r, &[], &[0], &[], &gens).unwrap(), vec![0, 1]);
        let gf = PolyRing::new(PrimeField::new(101).unwrap(), vec!["x".into(), "y".into()]).unwrap();
        let gens = vec![col(&gf, &["x*y"]), col(&gf, &["y^2"])];
        assert_eq!(minimal_generators(&gf, &[], &[0], &[], &gens).unwrap(), vec![0, 1]);
        // relations of the ambient ring make generators redundant
        let ideal = polys(&r, &["x^2"]);
        let gens = vec![col(&r, &["x^2"]), col(&r, &["y^2"])];
        assert_eq!(minimal_generators(&r, &ideal, &[0], &[], &gens).unwrap(), vec![1]);
    }

    #[test]
    fn hilbert_numerators() {
        let r = qxy();
        let s = ideal_groebner(&r, &[]).unwrap();
        assert_eq!(s.hilbert_numerator(), LaurentPoly::one());
        let q = ideal_groebner(&r, &polys(&r, &["x^2", "x*y"])).unwrap();
        assert_eq!(q.hilbert_numerator().to_string(), "1 - 2t^2 + t^3");
        let k = ideal_groebner(&r, &polys(&r, &["x", "y"])).unwrap();
        assert_eq!(k.hilbert_numerator(), LaurentPoly::one_minus_t_pow(2));
    }
}
