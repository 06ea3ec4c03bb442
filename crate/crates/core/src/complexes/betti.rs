use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Graded Betti numbers `β_{n,j}` of a resolution prefix.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    #[serde(with = "entries")]
    values: BTreeMap<(i32, i32), usize>,
    pub computed_through: i32,
    pub terminated: bool,
}

mod entries {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Entry {
        n: i32,
        j: i32,
        beta: usize,
    }

    pub fn serialize<S: Serializer>(m: &BTreeMap<(i32, i32), usize>, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<Entry> = m.iter().map(|(&(n, j), &beta)| Entry { n, j, beta }).collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<(i32, i32), usize>, D::Error> {
        let v: Vec<Entry> = Vec::deserialize(d)?;
        Ok(v.into_iter().map(|e| ((e.n, e.j), e.beta)).collect())
    }
}

impl BettiTable {
    /// Counts twists: `modules[n - lo]` lists the twists of `F_n`.
    pub fn from_twists(lo: i32, modules: &[Vec<i32>], computed_through: i32, terminated: bool) -> Self {
        let mut values = BTreeMap::new();
        for (k, tw) in modules.iter().enumerate() {
            for &j in tw {
                *values.entry((lo + k as i32, j)).or_insert(0) += 1;
            }
        }
        BettiTable {
            values,
            computed_through,
            terminated,
        }
    }

    pub fn get(&self, n: i32, j: i32) -> usize {
        self.values.get(&(n, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries `(n, j, β_{n,j})` in increasing order.
    pub fn entries(&self) -> impl Iterator<Item = (i32, i32, usize)> + '_ {
        self.values.iter().map(|(&(n, j), &b)| (n, j, b))
    }

    /// `rank F_n`.
    pub fn total(&self, n: i32) -> usize {
        self.values.range((n, i32::MIN)..=(n, i32::MAX)).map(|(_, &b)| b).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// `max { j - n : β_{n,j} ≠ 0 }` over the computed part.
    pub fn regularity(&self) -> Option<i32> {
        self.values.keys().map(|&(n, j)| j - n).max()
    }

    /// The first nonzero entry off the diagonal `j = n + i`.
    pub fn off_diagonal(&self, i: i32) -> Option<(i32, i32)> {
        self.values.keys().find(|&&(n, j)| j != n + i).copied()
    }

    pub fn max_position(&self) -> Option<i32> {
        self.values.keys().map(|&(n, _)| n).max()
    }

    /// Projective dimension when the resolution terminated.
    pub fn projective_dimension(&self) -> Option<i32> {
        if self.terminated {
            Some(self.max_position().unwrap_or(-1))
        } else {
            None
        }
    }
}

impl fmt::Display for BettiTable {
    /// Aligned text: columns are `n`, rows are `j - n`, zeros shown as `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.is_empty() {
            return writeln!(f, "(zero)");
        }
        let ns: Vec<i32> = {
            let lo = self.values.keys().map(|k| k.0).min().unwrap_or(0);
            let hi = self.max_position().unwrap_or(0).max(if self.terminated { 0 } else { self.computed_through });
            (lo..=hi).collect()
        };
        let rows: Vec<i32> = {
            let lo = self.values.keys().map(|&(n, j)| j - n).min().unwrap_or(0);
            let hi = self.regularity().unwrap_or(0);
            (lo..=hi).collect()
        };
        let width = self
            .values
            .values()
            .map(|b| b.to_string().len())
            .chain(ns.iter().map(|n| n.to_string().len()))
            .chain(ns.iter().map(|&n| self.total(n).to_string().len()))
            .max()
            .unwrap_or(1);
        let label = rows
            .iter()
            .map(|r| r.to_string().len() + 1)
            .max()
            .unwrap_or(2)
            .max("total:".len());
        write!(f, "{:>label$}", "")?;
        for n in &ns {
            write!(f, " {:>width$}", n)?;
        }
        writeln!(f)?;
        write!(f, "{:>label$}", "total:")?;
        for &n in &ns {
            write!(f, " {:>width$}", self.total(n))?;
        }
        writeln!(f)?;
        for &r in &rows {
            write!(f, "{:>label$}", format!("{r}:"))?;
            for &n in &ns {
                let b = self.get(n, n + r);
                if b == 0 {
                    write!(f, " {:>width$}", ".")?;
                } else {
                    write!(f, " {:>width$}", b)?;
                }
            }
            writeln!(f)?;
        }
        if !self.terminated {
            writeln!(f, "(computed through position {})", self.computed_through)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_and_serializes() {
        let t = BettiTable::from_twists(0, &[vec![0], vec![2, 2], vec![3]], 2, true);
        assert_eq!(t.total(1), 2);
        assert_eq!(t.regularity(), Some(1));
        assert_eq!(t.projective_dimension(), Some(2));
        let text = t.to_string();
        assert_eq!(text, "       0 1 2\ntotal: 1 2 1\n    0: 1 . .\n    1: . 2 1\n");
        let json = serde_json::to_string(&t).unwrap();
        let back: BettiTable = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
        assert_eq!(t.off_diagonal(0), Some((1, 2)));
    }
}
