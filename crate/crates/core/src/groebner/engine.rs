use std::collections::{BTreeMap, HashSet};

use super::vector::{monic, sub_scaled, ModuleOrder, ModuleTerm, ModuleVector};
use crate::field::Field;
use crate::poly::Monomial;

/// Leading-term index of a list of monic vectors.
#[derive(Clone, Debug, Default)]
pub(crate) struct LeadIndex {
    leads: Vec<(usize, Monomial)>,
    by_comp: Vec<Vec<usize>>,
}

impl LeadIndex {
    pub(crate) fn new(rank: usize) -> Self {
        LeadIndex {
            leads: Vec::new(),
            by_comp: vec![Vec::new(); rank],
        }
    }

    pub(crate) fn push(&mut self, comp: usize, mon: Monomial) -> usize {
        let i = self.leads.len();
        self.leads.push((comp, mon));
        self.by_comp[comp].push(i);
        i
    }

    #[inline]
    pub(crate) fn find_divisor(&self, comp: usize, mon: &Monomial) -> Option<usize> {
        self.by_comp[comp].iter().copied().find(|&i| self.leads[i].1.divides(mon))
    }

    pub(crate) fn lead(&self, i: usize) -> (usize, Monomial) {
        self.leads[i]
    }

    pub(crate) fn in_comp(&self, comp: usize) -> &[usize] {
        &self.by_comp[comp]
    }
}

/// Reduces `v` by a list of monic vectors. With `full` every term is
/// reduced; otherwise only the leading term, until it becomes irreducible.
pub(crate) fn reduce<F: Field>(
    field: &F,
    order: &ModuleOrder,
    basis: &[ModuleVector<F::Elem>],
    index: &LeadIndex,
    v: Vec<ModuleTerm<F::Elem>>,
    full: bool,
) -> Vec<ModuleTerm<F::Elem>> {
    let mut done: Vec<ModuleTerm<F::Elem>> = Vec::new();
    let mut work = v;
    let mut start = 0;
    while start < work.len() {
        let t = &work[start];
        match index.find_divisor(t.comp, &t.mon) {
            Some(i) => {
                let g = &basis[i];
                let q = t.mon.try_div(&g.terms()[0].mon).expect("divisor");
                let c = t.coeff.clone();
                done.extend(work.drain(..start));
                work = sub_scaled(field, order, &work[1..], &c, &q, &g.terms()[1..]);
                start = 0;
            }
            None if full => start += 1,
            None => break,
        }
    }
    if done.is_empty() {
        work
    } else {
        done.extend(work);
        done
    }
}

/// Incremental homogeneous Buchberger: elements are added degree by degree
/// and S-pairs are processed in increasing degree, so that after
/// `complete_through(d)` the current basis is a Gröbner basis in all
/// degrees `<= d`.
pub(crate) struct Engine<'a, F: Field> {
    field: &'a F,
    order: ModuleOrder,
    basis: Vec<ModuleVector<F::Elem>>,
    index: LeadIndex,
    single: Vec<bool>,
    queue: BTreeMap<i32, Vec<(usize, usize)>>,
    pending: HashSet<(usize, usize)>,
}

impl<'a, F: Field> Engine<'a, F> {
    pub(crate) fn new(field: &'a F, order: ModuleOrder) -> Self {
        let rank = order.rank();
        Engine {
            field,
            order,
            basis: Vec::new(),
            index: LeadIndex::new(rank),
            single: Vec::new(),
            queue: BTreeMap::new(),
            pending: HashSet::new(),
        }
    }

    pub(crate) fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub(crate) fn degree(&self, v: &ModuleVector<F::Elem>) -> Option<i32> {
        v.leading().map(|t| self.order.total_degree(t.comp, &t.mon))
    }

    fn insert(&mut self, v: ModuleVector<F::Elem>) -> usize {
        let v = monic(self.field, &v);
        let lt = v.leading().expect("nonzero");
        let (comp, mon) = (lt.comp, lt.mon);
        let single = v.terms().iter().all(|t| t.comp == comp);
        let new = self.basis.len();
        for &j in self.index.in_comp(comp) {
            let (_, mj) = self.index.lead(j);
            if single && self.single[j] && mon.is_coprime(&mj) {
                continue;
            }
            let l = mon.lcm(&mj);
            let d = self.order.total_degree(comp, &l);
            self.queue.entry(d).or_default().push((j, new));
            self.pending.insert((j, new));
        }
        self.index.push(comp, mon);
        self.basis.push(v);
        self.single.push(single);
        new
    }

    fn chain_redundant(&self, i: usize, j: usize, comp: usize, l: &Monomial) -> bool {
        self.index.in_comp(comp).iter().any(|&k| {
            k != i
                && k != j
                && self.index.lead(k).1.divides(l)
                && !self.pending.contains(&(i.min(k), i.max(k)))
                && !self.pending.contains(&(j.min(k), j.max(k)))
        })
    }

    fn spair(&self, i: usize, j: usize) -> Vec<ModuleTerm<F::Elem>> {
        let (_, mi) = self.index.lead(i);
        let (_, mj) = self.index.lead(j);
        let l = mi.lcm(&mj);
        let (gi, gj) = (&self.basis[i], &self.basis[j]);
        let qi = l.try_div(&mi).expect("lcm");
        let qj = l.try_div(&mj).expect("lcm");
        let one = self.field.one();
        let first: Vec<_> = gi.terms()[1..]
            .iter()
            .map(|t| ModuleTerm {
                comp: t.comp,
                mon: t.mon.mul(&qi),
                coeff: t.coeff.clone(),
            })
            .collect();
        sub_scaled(self.field, &self.order, &first, &one, &qj, &gj.terms()[1..])
    }

    /// Processes every queued pair of degree `<= d` (all pairs when `None`).
    pub(crate) fn complete_through(&mut self, d: Option<i32>) {
        loop {
            let Some((&deg, _)) = self.queue.iter().next() else { return };
            if d.is_some_and(|d| deg > d) {
                return;
            }
            let pairs = self.queue.remove(&deg).unwrap_or_default();
            for (i, j) in pairs {
                self.pending.remove(&(i, j));
                let (comp, mi) = self.index.lead(i);
                let l = mi.lcm(&self.index.lead(j).1);
                if self.chain_redundant(i, j, comp, &l) {
                    continue;
                }
                let s = self.spair(i, j);
                let r = reduce(self.field, &self.order, &self.basis, &self.index, s, false);
                if !r.is_empty() {
                    let r = reduce(self.field, &self.order, &self.basis, &self.index, r, true);
                    self.insert(ModuleVector::from_sorted(r));
                }
            }
        }
    }

    /// Adds a generator whose degree is at least every degree completed so
    /// far. Returns whether it enlarged the submodule.
    pub(crate) fn add(&mut self, v: &ModuleVector<F::Elem>) -> bool {
        if v.is_zero() {
            return false;
        }
        self.complete_through(self.degree(v));
        let r = reduce(
            self.field,
            &self.order,
            &self.basis,
            &self.index,
            v.terms().to_vec(),
            true,
        );
        if r.is_empty() {
            false
        } else {
            self.insert(ModuleVector::from_sorted(r));
            true
        }
    }

    /// The reduced Gröbner basis, sorted by increasing leading term.
    pub(crate) fn into_reduced(mut self) -> (Vec<ModuleVector<F::Elem>>, LeadIndex) {
        self.complete_through(None);
        let n = self.basis.len();
        let keep: Vec<usize> = (0..n)
            .filter(|&i| {
                let (c, m) = self.index.lead(i);
                !self
                    .index
                    .in_comp(c)
                    .iter()
                    .any(|&k| k != i && self.index.lead(k).1.divides(&m))
            })
            .collect();
        let mut minimal: Vec<ModuleVector<F::Elem>> = keep.iter().map(|&i| self.basis[i].clone()).collect();
        minimal.sort_by(|a, b| {
            let (ta, tb) = (a.leading().expect("nonzero"), b.leading().expect("nonzero"));
            self.order.cmp_terms(ta, tb)
        });
        let mut index = LeadIndex::new(self.order.rank());
        for g in &minimal {
            let t = g.leading().expect("nonzero");
            index.push(t.comp, t.mon);
        }
        let reduced: Vec<ModuleVector<F::Elem>> = minimal
            .iter()
            .map(|g| {
                let head = g.terms()[0].clone();
                let tail = reduce(self.field, &self.order, &minimal, &index, g.terms()[1..].to_vec(), true);
                let mut terms = Vec::with_capacity(tail.len() + 1);
                terms.push(head);
                terms.extend(tail);
                ModuleVector::from_sorted(terms)
            })
            .collect();
        (reduced, index)
    }
}
