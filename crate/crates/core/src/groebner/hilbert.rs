use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::poly::Monomial;

/// An integer Laurent polynomial in `t`, used for Hilbert series numerators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(e: i32, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    /// `(1 - t)^n`.
    pub fn one_minus_t_pow(n: u32) -> Self {
        let base = LaurentPoly::from_coeffs(&[(0, 1), (1, -1)]);
        (0..n).fold(Self::one(), |acc, _| acc.mul(&base))
    }

    pub fn from_coeffs(c: &[(i32, i64)]) -> Self {
        let mut p = Self::zero();
        for &(e, v) in c {
            p.add_term(e, v);
        }
        p
    }

    pub fn add_term(&mut self, e: i32, c: i64) {
        if c == 0 {
            return;
        }
        let v = self.coeffs.entry(e).or_insert(0);
        *v += c;
        if *v == 0 {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i32) -> i64 {
        self.coeffs.get(&e).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, -c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// Exact division by `1 - t`, when `p(1) = 0`.
    pub fn div_one_minus_t(&self) -> Option<Self> {
        if self.eval_at_one() != 0 {
            return None;
        }
        let (Some(lo), Some(hi)) = (self.min_exponent(), self.max_exponent()) else {
            return Some(Self::zero());
        };
        // p = (1 - t) q  ⟺  q_e = sum_{k <= e} p_k
        let mut out = Self::zero();
        let mut acc = 0;
        for e in lo..hi {
            acc += self.coeff(e);
            out.add_term(e, acc);
        }
        Some(out)
    }

    /// Coefficients of `p / (1 - t)^n` in degrees `lo..=hi`.
    pub fn series_coefficients(&self, n: u32, lo: i32, hi: i32) -> Vec<i64> {
        let mut cur: BTreeMap<i32, i64> = self.coeffs.clone();
        for _ in 0..n {
            let mut next = BTreeMap::new();
            let mut acc = 0;
            let start = cur.keys().next().copied().unwrap_or(lo).min(lo);
            for e in start..=hi {
                acc += cur.get(&e).copied().unwrap_or(0);
                if acc != 0 {
                    next.insert(e, acc);
                }
            }
            cur = next;
        }
        (lo..=hi).map(|e| cur.get(&e).copied().unwrap_or(0)).collect()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            match e {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if e == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator `N(t)` of the Hilbert series `N(t)/(1-t)^n` of `S/J` for a
/// monomial ideal `J`, by pivoting on a variable power.
pub fn monomial_ideal_numerator(gens: &[Monomial]) -> LaurentPoly {
    let gens = minimalize(gens.to_vec());
    if gens.is_empty() {
        return LaurentPoly::one();
    }
    let nvars = gens[0].nvars();
    let mut counts = vec![0usize; nvars];
    for g in &gens {
        for (i, &e) in g.exponents().iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let (var, &best) = counts.iter().enumerate().max_by_key(|(i, c)| (**c, std::cmp::Reverse(*i))).expect("nvars > 0");
    if best <= 1 {
        return gens
            .iter()
            .fold(LaurentPoly::one(), |acc, g| acc.sub(&acc.shift(g.degree() as i32)));
    }
    let mut exps: Vec<u32> = gens.iter().map(|g| g.exponent(var)).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let e = exps[(exps.len() - 1) / 2];
    let mut pe = vec![0u32; nvars];
    pe[var] = e;
    let pivot = Monomial::from_exponents(&pe).expect("bounded");
    let mut with_pivot: Vec<Monomial> = gens.iter().copied().filter(|g| g.exponent(var) < e).collect();
    with_pivot.push(pivot);
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut x: Vec<u32> = g.exponents().iter().map(|&a| a as u32).collect();
            x[var] = x[var].saturating_sub(e);
            Monomial::from_exponents(&x).expect("bounded")
        })
        .collect();
    monomial_ideal_numerator(&with_pivot).add(&monomial_ideal_numerator(&colon).shift(e as i32))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn numerators_of_small_ideals() {
        assert_eq!(monomial_ideal_numerator(&[]), LaurentPoly::one());
        let n = monomial_ideal_numerator(&[m(&[2, 0]), m(&[1, 1])]);
        assert_eq!(n, LaurentPoly::from_coeffs(&[(0, 1), (2, -2), (3, 1)]));
        assert_eq!(n.to_string(), "1 - 2t^2 + t^3");
        let all = monomial_ideal_numerator(&[m(&[1, 0, 0]), m(&[0, 1, 0]), m(&[0, 0, 1])]);
        assert_eq!(all, LaurentPoly::one_minus_t_pow(3));
    }

    /// Counts standard monomials degree by degree.
    fn count_standard(gens: &[Monomial], nvars: usize, d: u32) -> i64 {
        Monomial::all_of_degree(nvars, d)
            .iter()
            .filter(|x| !gens.iter().any(|g| g.divides(x)))
            .count() as i64
    }

    #[test]
    fn numerator_matches_counting() {
        let cases = vec![
            vec![m(&[2, 1, 0]), m(&[0, 2, 2]), m(&[1, 1, 1]), m(&[3, 0, 0])],
            vec![m(&[1, 1, 0]), m(&[0, 1, 1]), m(&[1, 0, 1])],
            vec![m(&[2, 2, 0]), m(&[0, 3, 1]), m(&[1, 0, 3]), m(&[2, 1, 1])],
        ];
        for gens in cases {
            let n = monomial_ideal_numerator(&gens);
            let series = n.series_coefficients(3, 0, 10);
            for d in 0..=10u32 {
                assert_eq!(series[d as usize], count_standard(&gens, 3, d), "{gens:?} degree {d}");
            }
        }
    }

    #[test]
    fn division_by_one_minus_t() {
        let n = LaurentPoly::from_coeffs(&[(0, 1), (2, -2), (3, 1)]);
        let q = n.div_one_minus_t().unwrap();
        assert_eq!(q, LaurentPoly::from_coeffs(&[(0, 1), (1, 1), (2, -1)]));
        assert!(q.div_one_minus_t().is_none());
        assert_eq!(q.eval_at_one(), 1);
    }
}
