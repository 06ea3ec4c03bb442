use std::cmp::Ordering;

use rand::Rng;

use super::monomial::{Monomial, MonomialOrder, MAX_VARS};
use crate::error::{Error, Result};
use crate::field::Field;

/// A polynomial as a list of `(monomial, coefficient)` terms, strictly
/// decreasing in the ring's monomial order, with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<E> {
    terms: Vec<(Monomial, E)>,
}

impl<E> Polynomial<E> {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, E)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, E)> {
        self.terms
    }

    pub fn leading(&self) -> Option<&(Monomial, E)> {
        self.terms.first()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Wraps a term list already sorted and free of zero coefficients.
    pub(crate) fn from_sorted_terms(terms: Vec<(Monomial, E)>) -> Self {
        Polynomial { terms }
    }
}

/// Result of a homogeneity test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial, homogeneous of every degree.
    Zero,
    Degree(u32),
    Mixed,
}

impl Homogeneity {
    pub fn degree(self) -> Option<u32> {
        match self {
            Homogeneity::Degree(d) => Some(d),
            _ => None,
        }
    }
}

/// The polynomial ring `k[x_1, ..., x_n]` with the standard grading.
#[derive(Clone, Debug)]
pub struct PolyRing<F: Field> {
    field: F,
    names: Vec<String>,
    order: MonomialOrder,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, names: Vec<String>) -> Result<Self> {
        Self::with_order(field, names, MonomialOrder::DegRevLex)
    }

    pub fn with_order(field: F, names: Vec<String>, order: MonomialOrder) -> Result<Self> {
        if names.len() > MAX_VARS {
            return Err(Error::Unsupported(format!(
                "{} variables (at most {MAX_VARS} are supported)",
                names.len()
            )));
        }
        for (i, n) in names.iter().enumerate() {
            let valid = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::parse(format!("invalid variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::parse(format!("duplicate variable `{n}`")));
            }
        }
        Ok(PolyRing { field, names, order })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn zero(&self) -> Polynomial<F::Elem> {
        Polynomial::zero()
    }

    pub fn one(&self) -> Polynomial<F::Elem> {
        self.term(Monomial::one(self.nvars()), self.field.one())
    }

    pub fn var(&self, i: usize) -> Polynomial<F::Elem> {
        self.term(Monomial::var(self.nvars(), i), self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> Polynomial<F::Elem> {
        self.term(Monomial::one(self.nvars()), c)
    }

    pub fn term(&self, m: Monomial, c: F::Elem) -> Polynomial<F::Elem> {
        if self.field.is_zero(&c) {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates,
    /// drops zeros.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, F::Elem)>) -> Polynomial<F::Elem> {
        let order = self.order;
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = self.field.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !self.field.is_zero(c));
        Polynomial { terms: out }
    }

    fn check(&self, f: &Polynomial<F::Elem>) -> Result<()> {
        match f.terms.first() {
            Some((m, _)) if m.nvars() != self.nvars() => Err(Error::RingMismatch(format!(
                "polynomial in {} variables used in a ring with {}",
                m.nvars(),
                self.nvars()
            ))),
            _ => Ok(()),
        }
    }

    fn merge(
        &self,
        f: &Polynomial<F::Elem>,
        g: &Polynomial<F::Elem>,
        combine: impl Fn(&F::Elem) -> F::Elem,
    ) -> Polynomial<F::Elem> {
        let (a, b) = (&f.terms, &g.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match self.order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0, combine(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.field.add(&a[i].1, &combine(&b[j].1));
                    if !self.field.is_zero(&c) {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|(m, c)| (*m, combine(c))));
        Polynomial { terms: out }
    }

    pub fn add(&self, f: &Polynomial<F::Elem>, g: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        self.merge(f, g, |c| c.clone())
    }

    pub fn sub(&self, f: &Polynomial<F::Elem>, g: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        self.merge(f, g, |c| self.field.neg(c))
    }

    pub fn neg(&self, f: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        Polynomial {
            terms: f.terms.iter().map(|(m, c)| (*m, self.field.neg(c))).collect(),
        }
    }

    pub fn scale(&self, f: &Polynomial<F::Elem>, c: &F::Elem) -> Polynomial<F::Elem> {
        if self.field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial {
            terms: f.terms.iter().map(|(m, a)| (*m, self.field.mul(a, c))).collect(),
        }
    }

    /// `c * m * f`; multiplication by a monomial preserves the term order.
    pub fn mul_term(&self, f: &Polynomial<F::Elem>, m: &Monomial, c: &F::Elem) -> Polynomial<F::Elem> {
        if self.field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial {
            terms: f.terms.iter().map(|(fm, a)| (fm.mul(m), self.field.mul(a, c))).collect(),
        }
    }

    pub fn mul(&self, f: &Polynomial<F::Elem>, g: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        let (small, large) = if f.len() <= g.len() { (f, g) } else { (g, f) };
        let mut acc = Polynomial::zero();
        for (m, c) in &small.terms {
            acc = self.add(&acc, &self.mul_term(large, m, c));
        }
        acc
    }

    /// Checked product reporting polynomials from a different ring.
    pub fn try_mul(&self, f: &Polynomial<F::Elem>, g: &Polynomial<F::Elem>) -> Result<Polynomial<F::Elem>> {
        self.check(f)?;
        self.check(g)?;
        Ok(self.mul(f, g))
    }

    pub fn pow(&self, f: &Polynomial<F::Elem>, e: u32) -> Polynomial<F::Elem> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, f);
        }
        acc
    }

    pub fn is_homogeneous(&self, f: &Polynomial<F::Elem>) -> Homogeneity {
        let mut it = f.terms.iter().map(|(m, _)| m.degree());
        match it.next() {
            None => Homogeneity::Zero,
            Some(d) if it.all(|e| e == d) => Homogeneity::Degree(d),
            Some(_) => Homogeneity::Mixed,
        }
    }

    /// The degree-one part of a homogeneous polynomial: `f` itself when it
    /// is linear, zero otherwise.
    pub fn linear_component(&self, f: &Polynomial<F::Elem>) -> Result<Polynomial<F::Elem>> {
        match self.is_homogeneous(f) {
            Homogeneity::Zero => Ok(Polynomial::zero()),
            Homogeneity::Degree(1) => Ok(f.clone()),
            Homogeneity::Degree(_) => Ok(Polynomial::zero()),
            Homogeneity::Mixed => Err(Error::NotHomogeneous(self.format(f))),
        }
    }

    /// Monic rescaling (leading coefficient one); zero stays zero.
    pub fn monic(&self, f: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        match f.leading() {
            None => Polynomial::zero(),
            Some((_, c)) => self.scale(f, &self.field.inv(c).expect("nonzero leading coefficient")),
        }
    }

    /// A random homogeneous form of degree `d` with roughly `density` of the
    /// monomials present.
    pub fn random_form<R: Rng + ?Sized>(&self, d: u32, density: f64, rng: &mut R) -> Polynomial<F::Elem> {
        let mut terms = Vec::new();
        for m in Monomial::all_of_degree(self.nvars(), d) {
            if rng.gen_bool(density.clamp(0.0, 1.0)) {
                terms.push((m, self.field.random(rng)));
            }
        }
        self.from_terms(terms)
    }

    pub fn format(&self, f: &Polynomial<F::Elem>) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in f.terms.iter().enumerate() {
            let mut coeff = self.field.format(c);
            let negative = coeff.starts_with('-');
            if negative {
                coeff.remove(0);
            }
            if k == 0 {
                if negative {
                    s.push('-');
                }
            } else {
                s.push_str(if negative { " - " } else { " + " });
            }
            let mono = m.display_with(&self.names);
            if m.is_one() {
                s.push_str(&coeff);
            } else if coeff == "1" {
                s.push_str(&mono);
            } else {
                s.push_str(&coeff);
                s.push('*');
                s.push_str(&mono);
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use proptest::prelude::*;
    use rand::SeedableRng;

    fn qxy() -> PolyRing<Rationals> {
        PolyRing::new(Rationals, vec!["x".into(), "y".into()]).unwrap()
    }

    #[test]
    fn products() {
        let r = qxy();
        let (x, y) = (r.var(0), r.var(1));
        let p = r.mul(&r.add(&x, &y), &r.sub(&x, &y));
        assert_eq!(p, r.sub(&r.mul(&x, &x), &r.mul(&y, &y)));
        assert!(r.mul(&p, &r.zero()).is_zero());

        let r2 = PolyRing::new(PrimeField::new(2).unwrap(), vec!["x".into(), "y".into()]).unwrap();
        let s = r2.add(&r2.var(0), &r2.var(1));
        let sq = r2.mul(&s, &s);
        assert_eq!(sq, r2.add(&r2.mul(&r2.var(0), &r2.var(0)), &r2.mul(&r2.var(1), &r2.var(1))));
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let r = qxy();
        let r3 = PolyRing::new(Rationals, vec!["x".into(), "y".into(), "z".into()]).unwrap();
        assert!(r.try_mul(&r.var(0), &r3.var(2)).is_err());
    }

    #[test]
    fn homogeneity_and_linear_part() {
        let r = qxy();
        let (x, y) = (r.var(0), r.var(1));
        let x2 = r.mul(&x, &x);
        assert_eq!(r.is_homogeneous(&r.add(&x2, &r.mul(&x, &y))), Homogeneity::Degree(2));
        assert_eq!(r.is_homogeneous(&r.add(&x2, &x)), Homogeneity::Mixed);
        assert_eq!(r.is_homogeneous(&r.zero()), Homogeneity::Zero);

        let lin = r.add(&r.scale(&x, &Rationals.from_i64(3)), &r.scale(&y, &Rationals.from_i64(2)));
        assert_eq!(r.linear_component(&lin).unwrap(), lin);
        assert!(r.linear_component(&x2).unwrap().is_zero());
        assert!(r.linear_component(&r.zero()).unwrap().is_zero());
        assert!(r.linear_component(&r.add(&x2, &x)).is_err());
    }

    #[test]
    fn formatting() {
        let r = qxy();
        let (x, y) = (r.var(0), r.var(1));
        let f = r.sub(&r.mul(&x, &x), &r.scale(&r.mul(&x, &y), &Rationals.from_i64(3)));
        assert_eq!(r.format(&f), "x^2 - 3*x*y");
    }

    proptest! {
        #[test]
        fn products_add_degrees(seed in 0u64..500, d1 in 0u32..4, d2 in 0u32..4) {
            let r = PolyRing::new(PrimeField::new(101).unwrap(),
                vec!["x".into(), "y".into(), "z".into()]).unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let f = r.random_form(d1, 0.7, &mut rng);
            let g = r.random_form(d2, 0.7, &mut rng);
            let fg = r.mul(&f, &g);
            if !f.is_zero() && !g.is_zero() {
                prop_assert_eq!(r.is_homogeneous(&fg), Homogeneity::Degree(d1 + d2));
            } else {
                prop_assert!(fg.is_zero());
            }
            prop_assert_eq!(r.mul(&f, &g), r.mul(&g, &f));
        }
    }
}
