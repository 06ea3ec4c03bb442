use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper bound on the number of variables of an ambient polynomial ring.
pub const MAX_VARS: usize = 8;

/// A monomial `x_1^{a_1} ... x_n^{a_n}` stored as a dense exponent vector,
/// with its total degree cached.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    nvars: u8,
    deg: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables are supported");
        Monomial {
            exps: [0; MAX_VARS],
            nvars: nvars as u8,
            deg: 0,
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        assert!(i < nvars);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::Unsupported(format!(
                "{} variables (at most {MAX_VARS} are supported)",
                exps.len()
            )));
        }
        let mut m = Self::one(exps.len());
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u16::try_from(e).map_err(|_| Error::Unsupported(format!("exponent {e} too large")))?;
        }
        m.deg = exps.iter().sum();
        Ok(m)
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.nvars as usize]
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e += *o;
        }
        Monomial {
            exps,
            nvars: self.nvars,
            deg: self.deg + other.deg,
        }
    }

    /// Whether `self` divides `other`.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    #[inline]
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e -= *o;
        }
        Some(Monomial {
            exps,
            nvars: self.nvars,
            deg: self.deg - other.deg,
        })
    }

    #[inline]
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        let mut deg = 0;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e = (*e).max(*o);
            deg += *e as u32;
        }
        Monomial {
            exps,
            nvars: self.nvars,
            deg,
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// All monomials of total degree `d` in `nvars` variables, in descending
    /// degrevlex order.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        fn rec(nvars: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == nvars {
                cur.push(left);
                out.push(Monomial::from_exponents(cur).expect("bounded"));
                cur.pop();
                return;
            }
            for e in (0..=left).rev() {
                cur.push(e);
                rec(nvars, i + 1, left - e, cur, out);
                cur.pop();
            }
        }
        if nvars == 0 {
            return if d == 0 { vec![Monomial::one(0)] } else { vec![] };
        }
        let mut out = Vec::new();
        rec(nvars, 0, d, &mut Vec::with_capacity(nvars), &mut out);
        out.sort_by(|a, b| MonomialOrder::DegRevLex.cmp(b, a));
        out
    }

    pub fn display_with(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}

/// Monomial orders on a fixed variable list with `x_1 > x_2 > ... > x_n`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    Lex,
}

impl MonomialOrder {
    /// Comparison for monomials of the same ring; the hot-path variant of
    /// [`MonomialOrder::compare`].
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars, b.nvars);
        match self {
            MonomialOrder::DegRevLex => {
                match a.deg.cmp(&b.deg) {
                    Ordering::Equal => {}
                    o => return o,
                }
                for i in (0..a.nvars as usize).rev() {
                    match a.exps[i].cmp(&b.exps[i]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => a.exps[..a.nvars as usize].cmp(&b.exps[..b.nvars as usize]),
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars != b.nvars {
            return Err(Error::RingMismatch(format!(
                "monomials in {} and {} variables",
                a.nvars, b.nvars
            )));
        }
        Ok(self.cmp(a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    /// Degrevlex straight from its definition: compare degrees, then the
    /// last differing exponent, smaller exponent wins.
    fn degrevlex_by_definition(a: &[u32], b: &[u32]) -> Ordering {
        let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
        if da != db {
            return da.cmp(&db);
        }
        match a.iter().zip(b).rev().find(|(x, y)| x != y) {
            None => Ordering::Equal,
            Some((x, y)) => y.cmp(x),
        }
    }

    #[test]
    fn degrevlex_matches_definition_in_degree_two() {
        let all = Monomial::all_of_degree(3, 2);
        assert_eq!(all.len(), 6);
        for a in &all {
            for b in &all {
                let ea: Vec<u32> = a.exponents().iter().map(|&e| e as u32).collect();
                let eb: Vec<u32> = b.exponents().iter().map(|&e| e as u32).collect();
                assert_eq!(MonomialOrder::DegRevLex.cmp(a, b), degrevlex_by_definition(&ea, &eb));
            }
        }
        // y^2 > xz
        assert_eq!(MonomialOrder::DegRevLex.cmp(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Ordering::Greater);
        // descending listing: x^2 > xy > y^2 > xz > yz > z^2
        let listed: Vec<Vec<u16>> = all.iter().map(|x| x.exponents().to_vec()).collect();
        assert_eq!(
            listed,
            vec![vec![2, 0, 0], vec![1, 1, 0], vec![0, 2, 0], vec![1, 0, 1], vec![0, 1, 1], vec![0, 0, 2]]
        );
    }

    #[test]
    fn lex_and_reflexivity() {
        for k in 0..10 {
            assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0]), &m(&[0, k])), Ordering::Greater);
        }
        let a = m(&[1, 2, 3]);
        assert_eq!(MonomialOrder::DegRevLex.cmp(&a, &a), Ordering::Equal);
        assert!(MonomialOrder::DegRevLex.compare(&a, &m(&[1, 2])).is_err());
    }

    #[test]
    fn divisibility() {
        let a = m(&[1, 1, 0]);
        let b = m(&[2, 1, 3]);
        assert!(a.divides(&b));
        assert_eq!(b.try_div(&a), Some(m(&[1, 0, 3])));
        assert_eq!(a.try_div(&b), None);
        assert_eq!(a.lcm(&m(&[0, 2, 1])), m(&[1, 2, 1]));
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 3, 1])));
    }

    fn exps() -> impl Strategy<Value = Vec<u32>> {
        prop::collection::vec(0u32..4, 3)
    }

    proptest! {
        #[test]
        fn orders_are_total_and_multiplicative(a in exps(), b in exps(), c in exps()) {
            for order in [MonomialOrder::DegRevLex, MonomialOrder::Lex] {
                let (a, b, c) = (m(&a), m(&b), m(&c));
                prop_assert_eq!(order.cmp(&a, &b), order.cmp(&b, &a).reverse());
                if order.cmp(&a, &b) == Ordering::Greater && order.cmp(&b, &c) == Ordering::Greater {
                    prop_assert_eq!(order.cmp(&a, &c), Ordering::Greater);
                }
                if order.cmp(&a, &b) == Ordering::Greater {
                    prop_assert_eq!(order.cmp(&c.mul(&a), &c.mul(&b)), Ordering::Greater);
                }
                if a.divides(&b) {
                    prop_assert_ne!(order.cmp(&a, &b), Ordering::Greater);
                }
            }
        }
    }
}
