use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::field::Field;
use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// One term `c * m * e_comp` of a vector in a free module.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleTerm<E> {
    pub comp: usize,
    pub mon: Monomial,
    pub coeff: E,
}

/// Tie-break between the monomial and the position of a module term.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TieBreak {
    #[default]
    TermOverPosition,
    PositionOverTerm,
}

/// A term order on a graded free module `⊕ S(-a_j)`: total degree
/// (monomial degree plus twist) first, then the base order and position in
/// the chosen precedence. Lower component indices rank higher.
///
/// An optional split index places every component below it in a block that
/// dominates the rest; the engine uses this to eliminate a block when
/// computing syzygies.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleOrder {
    pub base: MonomialOrder,
    pub tie: TieBreak,
    pub shifts: Vec<i32>,
    pub split: Option<usize>,
}

impl ModuleOrder {
    pub fn top(base: MonomialOrder, shifts: Vec<i32>) -> Self {
        ModuleOrder {
            base,
            tie: TieBreak::TermOverPosition,
            shifts,
            split: None,
        }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    #[inline]
    pub fn total_degree(&self, comp: usize, mon: &Monomial) -> i32 {
        mon.degree() as i32 + self.shifts[comp]
    }

    #[inline]
    pub fn cmp(&self, c1: usize, m1: &Monomial, c2: usize, m2: &Monomial) -> Ordering {
        if let Some(s) = self.split {
            match (c2 >= s).cmp(&(c1 >= s)) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        match self.tie {
            TieBreak::TermOverPosition => self
                .total_degree(c1, m1)
                .cmp(&self.total_degree(c2, m2))
                .then_with(|| self.base.cmp(m1, m2))
                .then_with(|| c2.cmp(&c1)),
            TieBreak::PositionOverTerm => c2
                .cmp(&c1)
                .then_with(|| self.total_degree(c1, m1).cmp(&self.total_degree(c2, m2)))
                .then_with(|| self.base.cmp(m1, m2)),
        }
    }

    #[inline]
    pub fn cmp_terms<E>(&self, a: &ModuleTerm<E>, b: &ModuleTerm<E>) -> Ordering {
        self.cmp(a.comp, &a.mon, b.comp, &b.mon)
    }
}

/// A vector in a free module over a polynomial ring, stored as a strictly
/// decreasing term list (under the order it was built with) without zero
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleVector<E> {
    terms: Vec<ModuleTerm<E>>,
}

impl<E: Clone> ModuleVector<E> {
    pub fn zero() -> Self {
        ModuleVector { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[ModuleTerm<E>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<ModuleTerm<E>> {
        self.terms
    }

    pub fn leading(&self) -> Option<&ModuleTerm<E>> {
        self.terms.first()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn from_sorted(terms: Vec<ModuleTerm<E>>) -> Self {
        ModuleVector { terms }
    }

    /// Basis vector `e_comp`.
    pub fn unit(comp: usize, nvars: usize, one: E) -> Self {
        ModuleVector {
            terms: vec![ModuleTerm {
                comp,
                mon: Monomial::one(nvars),
                coeff: one,
            }],
        }
    }

    /// `f * e_comp`.
    pub fn from_polynomial(f: &Polynomial<E>, comp: usize) -> Self {
        ModuleVector {
            terms: f
                .terms()
                .iter()
                .map(|(m, c)| ModuleTerm {
                    comp,
                    mon: *m,
                    coeff: c.clone(),
                })
                .collect(),
        }
    }

    /// The coordinate at `comp`, as a polynomial; relies on homogeneity so
    /// that the extracted terms are already in polynomial order.
    pub fn entry(&self, comp: usize) -> Polynomial<E> {
        Polynomial::from_sorted_terms(
            self.terms
                .iter()
                .filter(|t| t.comp == comp)
                .map(|t| (t.mon, t.coeff.clone()))
                .collect(),
        )
    }

    /// The total degree of a homogeneous vector under the given twists.
    pub fn degree(&self, shifts: &[i32]) -> Option<i32> {
        self.terms.first().map(|t| t.mon.degree() as i32 + shifts[t.comp])
    }

    pub fn is_homogeneous(&self, shifts: &[i32]) -> bool {
        match self.degree(shifts) {
            None => true,
            Some(d) => self.terms.iter().all(|t| t.mon.degree() as i32 + shifts[t.comp] == d),
        }
    }

    pub fn components(&self) -> impl Iterator<Item = usize> + '_ {
        let mut last = None;
        self.terms.iter().filter_map(move |t| {
            if last == Some(t.comp) {
                None
            } else {
                last = Some(t.comp);
                Some(t.comp)
            }
        })
    }

    /// Renumbers components through `f` (which must be injective on the
    /// support) and re-sorts under `order`.
    pub fn map_components(&self, order: &ModuleOrder, f: impl Fn(usize) -> usize) -> Self {
        let mut terms: Vec<_> = self
            .terms
            .iter()
            .map(|t| ModuleTerm {
                comp: f(t.comp),
                mon: t.mon,
                coeff: t.coeff.clone(),
            })
            .collect();
        terms.sort_by(|a, b| order.cmp_terms(b, a));
        ModuleVector { terms }
    }

    pub fn resort(&self, order: &ModuleOrder) -> Self {
        self.map_components(order, |c| c)
    }
}

/// Sorts, merges and prunes an arbitrary term list.
pub fn vector_from_terms<F: Field>(
    field: &F,
    order: &ModuleOrder,
    mut terms: Vec<ModuleTerm<F::Elem>>,
) -> ModuleVector<F::Elem> {
    terms.sort_by(|a, b| order.cmp_terms(b, a));
    let mut out: Vec<ModuleTerm<F::Elem>> = Vec::with_capacity(terms.len());
    for t in terms {
        match out.last_mut() {
            Some(l) if l.comp == t.comp && l.mon == t.mon => l.coeff = field.add(&l.coeff, &t.coeff),
            _ => out.push(t),
        }
    }
    out.retain(|t| !field.is_zero(&t.coeff));
    ModuleVector { terms: out }
}

/// `a - c * m * b`, merged in a single pass.
pub fn sub_scaled<F: Field>(
    field: &F,
    order: &ModuleOrder,
    a: &[ModuleTerm<F::Elem>],
    c: &F::Elem,
    m: &Monomial,
    b: &[ModuleTerm<F::Elem>],
) -> Vec<ModuleTerm<F::Elem>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut bj: Option<(usize, Monomial)> = b.first().map(|t| (t.comp, t.mon.mul(m)));
    while i < a.len() {
        let Some((bc, bm)) = bj else { break };
        match order.cmp(a[i].comp, &a[i].mon, bc, &bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(ModuleTerm {
                    comp: bc,
                    mon: bm,
                    coeff: field.neg(&field.mul(c, &b[j].coeff)),
                });
                j += 1;
                bj = b.get(j).map(|t| (t.comp, t.mon.mul(m)));
            }
            Ordering::Equal => {
                let v = field.sub_mul(&a[i].coeff, c, &b[j].coeff);
                if !field.is_zero(&v) {
                    out.push(ModuleTerm {
                        comp: bc,
                        mon: bm,
                        coeff: v,
                    });
                }
                i += 1;
                j += 1;
                bj = b.get(j).map(|t| (t.comp, t.mon.mul(m)));
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for t in &b[j.min(b.len())..] {
        out.push(ModuleTerm {
            comp: t.comp,
            mon: t.mon.mul(m),
            coeff: field.neg(&field.mul(c, &t.coeff)),
        });
    }
    out
}

pub fn add_vectors<F: Field>(
    field: &F,
    order: &ModuleOrder,
    a: &ModuleVector<F::Elem>,
    b: &ModuleVector<F::Elem>,
) -> ModuleVector<F::Elem> {
    let minus_one = field.neg(&field.one());
    let nv = a.leading().or(b.leading()).map_or(0, |t| t.mon.nvars());
    ModuleVector::from_sorted(sub_scaled(field, order, &a.terms, &minus_one, &Monomial::one(nv), &b.terms))
}

pub fn scale_vector<F: Field>(field: &F, v: &ModuleVector<F::Elem>, c: &F::Elem) -> ModuleVector<F::Elem> {
    if field.is_zero(c) {
        return ModuleVector::zero();
    }
    ModuleVector::from_sorted(
        v.terms
            .iter()
            .map(|t| ModuleTerm {
                comp: t.comp,
                mon: t.mon,
                coeff: field.mul(&t.coeff, c),
            })
            .collect(),
    )
}

/// `f * v` for a polynomial `f`.
pub fn mul_polynomial<F: Field>(
    field: &F,
    order: &ModuleOrder,
    f: &Polynomial<F::Elem>,
    v: &ModuleVector<F::Elem>,
) -> ModuleVector<F::Elem> {
    let mut acc: Vec<ModuleTerm<F::Elem>> = Vec::new();
    for (m, c) in f.terms() {
        let neg = field.neg(c);
        acc = sub_scaled(field, order, &acc, &neg, m, &v.terms);
    }
    ModuleVector::from_sorted(acc)
}

pub fn monic<F: Field>(field: &F, v: &ModuleVector<F::Elem>) -> ModuleVector<F::Elem> {
    match v.leading() {
        None => ModuleVector::zero(),
        Some(t) if field.is_one(&t.coeff) => v.clone(),
        Some(t) => scale_vector(field, v, &field.inv(&t.coeff).expect("nonzero")),
    }
}
