use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{vector_from_terms, ModuleOrder, ModuleTerm, ModuleVector};
use crate::poly::{Homogeneity, PolyRing, Polynomial};

/// A homogeneous degree-zero map `⊕ R(-b_j) → ⊕ R(-a_i)`, stored by columns.
/// Column `j` is the image of the `j`-th basis vector, a vector of degree
/// `b_j` in the target.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    target: Vec<i32>,
    source: Vec<i32>,
    columns: Vec<ModuleVector<E>>,
}

impl<E: Clone> Matrix<E> {
    pub(crate) fn from_columns_unchecked(target: Vec<i32>, source: Vec<i32>, columns: Vec<ModuleVector<E>>) -> Self {
        debug_assert_eq!(source.len(), columns.len());
        Matrix {
            target,
            source,
            columns,
        }
    }

    pub fn zero(target: Vec<i32>, source: Vec<i32>) -> Self {
        let columns = vec![ModuleVector::zero(); source.len()];
        Matrix {
            target,
            source,
            columns,
        }
    }

    pub fn target(&self) -> &[i32] {
        &self.target
    }

    pub fn source(&self) -> &[i32] {
        &self.source
    }

    pub fn columns(&self) -> &[ModuleVector<E>] {
        &self.columns
    }

    pub fn nrows(&self) -> usize {
        self.target.len()
    }

    pub fn ncols(&self) -> usize {
        self.source.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> Polynomial<E> {
        self.columns[j].entry(i)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_zero())
    }

    /// Polynomial degree of entry `(i, j)` forced by the twists.
    pub fn entry_degree(&self, i: usize, j: usize) -> i32 {
        self.source[j] - self.target[i]
    }
}

impl<E: Clone + PartialEq> Matrix<E> {
    /// Builds and checks a matrix from columns.
    pub fn from_columns<F: Field<Elem = E>>(
        ring: &PolyRing<F>,
        target: Vec<i32>,
        source: Vec<i32>,
        columns: Vec<ModuleVector<E>>,
    ) -> Result<Self> {
        if columns.len() != source.len() {
            return Err(Error::DegreeMismatch(format!(
                "{} columns for {} source twists",
                columns.len(),
                source.len()
            )));
        }
        let order = ModuleOrder::top(ring.order(), target.clone());
        let mut sorted = Vec::with_capacity(columns.len());
        for (j, c) in columns.into_iter().enumerate() {
            for t in c.terms() {
                if t.comp >= target.len() {
                    return Err(Error::RingMismatch(format!(
                        "column {j} has a term in component {} of a rank {} module",
                        t.comp,
                        target.len()
                    )));
                }
                let d = t.mon.degree() as i32 + target[t.comp];
                if d != source[j] {
                    return Err(Error::DegreeMismatch(format!(
                        "entry ({}, {j}) has degree {} but the twists require {}",
                        t.comp,
                        t.mon.degree(),
                        source[j] - target[t.comp]
                    )));
                }
            }
            sorted.push(vector_from_terms(ring.field(), &order, c.into_terms()));
        }
        Ok(Matrix {
            target,
            source,
            columns: sorted,
        })
    }

    /// Builds a matrix from rows of polynomial entries. With `source` absent
    /// the column twists are read off the entries and zero columns are
    /// dropped.
    pub fn from_rows<F: Field<Elem = E>>(
        ring: &PolyRing<F>,
        target: Vec<i32>,
        source: Option<Vec<i32>>,
        rows: &[Vec<Polynomial<E>>],
    ) -> Result<Self> {
        if rows.len() != target.len() {
            return Err(Error::DegreeMismatch(format!(
                "{} rows for {} row twists",
                rows.len(),
                target.len()
            )));
        }
        let ncols = rows.first().map_or(source.as_ref().map_or(0, |s| s.len()), |r| r.len());
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != ncols) {
            return Err(Error::DegreeMismatch(format!(
                "row {i} has {} entries, expected {ncols}",
                r.len()
            )));
        }
        let mut src = Vec::new();
        let mut cols = Vec::new();
        for j in 0..ncols {
            let mut terms: Vec<ModuleTerm<E>> = Vec::new();
            let mut deg: Option<i32> = source.as_ref().map(|s| s[j]);
            for (i, row) in rows.iter().enumerate() {
                let f = &row[j];
                match ring.is_homogeneous(f) {
                    Homogeneity::Zero => continue,
                    Homogeneity::Mixed => {
                        return Err(Error::NotHomogeneous(format!("matrix entry ({i}, {j})")));
                    }
                    Homogeneity::Degree(e) => {
                        let d = e as i32 + target[i];
                        match deg {
                            None => deg = Some(d),
                            Some(d0) if d0 != d => {
                                return Err(Error::DegreeMismatch(format!(
                                    "matrix entry ({i}, {j}) has degree {e}, inconsistent with column degree {d0} and row twist {}",
                                    target[i]
                                )));
                            }
                            _ => {}
                        }
                    }
                }
                terms.extend(ModuleVector::from_polynomial(f, i).into_terms());
            }
            match deg {
                Some(d) => {
                    src.push(d);
                    cols.push(ModuleVector::from_sorted(terms));
                }
                None => continue,
            }
        }
        Self::from_columns(ring, target, src, cols)
    }

    /// The submatrix on the given columns.
    pub fn select_columns(&self, keep: &[usize]) -> Self {
        Matrix {
            target: self.target.clone(),
            source: keep.iter().map(|&j| self.source[j]).collect(),
            columns: keep.iter().map(|&j| self.columns[j].clone()).collect(),
        }
    }

    /// Rows and columns as nested polynomial lists.
    pub fn rows(&self) -> Vec<Vec<Polynomial<E>>> {
        (0..self.nrows())
            .map(|i| (0..self.ncols()).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// Positions and forced degrees of the nonzero entries.
    pub fn entry_degrees(&self) -> impl Iterator<Item = (usize, usize, i32)> + '_ {
        self.columns.iter().enumerate().flat_map(move |(j, c)| {
            let mut comps: Vec<usize> = c.components().collect();
            comps.sort_unstable();
            comps.dedup();
            comps.into_iter().map(move |i| (i, j, self.source[j] - self.target[i]))
        })
    }

    /// Renders the matrix with one row per line.
    pub fn format<F: Field<Elem = E>>(&self, ring: &PolyRing<F>) -> String {
        self.rows()
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|f| ring.format(f)).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}
