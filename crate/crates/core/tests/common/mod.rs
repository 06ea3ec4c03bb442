#![allow(dead_code)]

//! Dense degree-by-degree linear algebra over `GF(p)`, independent of the
//! Gröbner machinery, used as an oracle for homology and Hilbert functions.

use std::collections::HashMap;

use lindef::complexes::FreeComplex;
use lindef::field::PrimeField;
use lindef::poly::Polynomial;

pub type Exps = Vec<u32>;
/// Sparse polynomial as `(exponents, coefficient)` pairs.
pub type Sparse = Vec<(Exps, u64)>;

pub fn sparse(f: &Polynomial<u32>, n: usize) -> Sparse {
    f.terms()
        .iter()
        .map(|(m, c)| ((0..n).map(|i| m.exponent(i)).collect(), u64::from(*c)))
        .collect()
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub fn monomials(n: usize, d: i32) -> Vec<Exps> {
    if d < 0 {
        return Vec::new();
    }
    if n == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for a in (0..=d as u32).rev() {
        for mut rest in monomials(n - 1, d - a as i32) {
            rest.insert(0, a);
            out.push(rest);
        }
    }
    out
}

/// Row echelon form kept fully reduced; rows are dense vectors.
#[derive(Clone, Default)]
pub struct Echelon {
    p: u64,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    pub fn new(p: u64) -> Self {
        Echelon { p, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &mut [u64]) {
        for (piv, row) in &self.rows {
            let c = v[*piv];
            if c != 0 {
                for (x, r) in v.iter_mut().zip(row) {
                    *x = (*x + self.p - c * r % self.p) % self.p;
                }
            }
        }
    }

    /// Adds a vector; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        self.reduce(&mut v);
        let Some(piv) = v.iter().position(|&x| x != 0) else { return false };
        let inv = inv_mod(v[piv], self.p);
        for x in v.iter_mut() {
            *x = *x * inv % self.p;
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[piv];
            if c != 0 {
                for (x, r) in row.iter_mut().zip(&v) {
                    *x = (*x + self.p - c * r % self.p) % self.p;
                }
            }
        }
        self.rows.push((piv, v));
        true
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.0).collect()
    }
}

/// `R = GF(p)[x_1..x_n]/I` cut into graded pieces.
pub struct DenseRing {
    pub p: u64,
    pub n: usize,
    ideal: Vec<(i32, Sparse)>,
    pieces: HashMap<i32, Piece>,
}

struct Piece {
    monos: Vec<Exps>,
    index: HashMap<Exps, usize>,
    ideal: Echelon,
    /// Positions of the monomials not among the pivots of `I_d`.
    standard: Vec<usize>,
}

impl DenseRing {
    pub fn new(p: u64, n: usize, ideal: &[Sparse]) -> Self {
        let ideal = ideal
            .iter()
            .filter(|g| !g.is_empty())
            .map(|g| (g[0].0.iter().sum::<u32>() as i32, g.clone()))
            .collect();
        DenseRing {
            p,
            n,
            ideal,
            pieces: HashMap::new(),
        }
    }

    fn piece(&mut self, d: i32) -> &Piece {
        if !self.pieces.contains_key(&d) {
            let monos = monomials(self.n, d);
            let index: HashMap<Exps, usize> = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
            let mut ech = Echelon::new(self.p);
            for (e, g) in &self.ideal {
                for m in monomials(self.n, d - e) {
                    let mut v = vec![0; monos.len()];
                    for (t, c) in g {
                        let prod: Exps = t.iter().zip(&m).map(|(a, b)| a + b).collect();
                        let k = index[&prod];
                        v[k] = (v[k] + c) % self.p;
                    }
                    ech.insert(v);
                }
            }
            let piv = ech.pivots();
            let standard = (0..monos.len()).filter(|i| !piv.contains(i)).collect();
            self.pieces.insert(
                d,
                Piece {
                    monos,
                    index,
                    ideal: ech,
                    standard,
                },
            );
        }
        &self.pieces[&d]
    }

    pub fn dim(&mut self, d: i32) -> usize {
        self.piece(d).standard.len()
    }

    /// Coordinates of `f * m` in `R_d` on the standard monomials.
    fn image(&mut self, f: &Sparse, m: &Exps, d: i32) -> Vec<u64> {
        let p = self.p;
        let piece = self.piece(d);
        let mut v = vec![0; piece.monos.len()];
        for (t, c) in f {
            let prod: Exps = t.iter().zip(m).map(|(a, b)| a + b).collect();
            let k = piece.index[&prod];
            v[k] = (v[k] + c) % p;
        }
        piece.ideal.reduce(&mut v);
        piece.standard.iter().map(|&i| v[i]).collect()
    }

    fn standard_monomials(&mut self, d: i32) -> Vec<Exps> {
        let piece = self.piece(d);
        piece.standard.iter().map(|&i| piece.monos[i].clone()).collect()
    }
}

/// A map `⊕ R(-b_j) → ⊕ R(-a_i)` as sparse entries.
pub struct DenseMap {
    pub target: Vec<i32>,
    pub source: Vec<i32>,
    /// `entries[i][j]`.
    pub entries: Vec<Vec<Sparse>>,
}

impl DenseMap {
    fn degree_of(&self, i: usize, j: usize) -> i32 {
        self.source[j] - self.target[i]
    }

    /// Keeps only entries of degree one.
    pub fn linear(&self) -> DenseMap {
        let entries = (0..self.target.len())
            .map(|i| {
                (0..self.source.len())
                    .map(|j| if self.degree_of(i, j) == 1 { self.entries[i][j].clone() } else { Vec::new() })
                    .collect()
            })
            .collect();
        DenseMap {
            target: self.target.clone(),
            source: self.source.clone(),
            entries,
        }
    }

    /// Rank of the map in internal degree `d`.
    pub fn rank(&self, ring: &mut DenseRing, d: i32) -> usize {
        let offsets: Vec<usize> = {
            let mut acc = 0;
            self.target
                .iter()
                .map(|&a| {
                    let o = acc;
                    acc += ring.dim(d - a);
                    o
                })
                .collect()
        };
        let total: usize = self.target.iter().map(|&a| ring.dim(d - a)).sum();
        let mut ech = Echelon::new(ring.p);
        for (j, &b) in self.source.iter().enumerate() {
            for m in ring.standard_monomials(d - b) {
                let mut v = vec![0; total];
                for (i, &a) in self.target.iter().enumerate() {
                    let f = &self.entries[i][j];
                    if f.is_empty() || ring.dim(d - a) == 0 {
                        continue;
                    }
                    let img = ring.image(f, &m, d - a);
                    for (k, x) in img.into_iter().enumerate() {
                        v[offsets[i] + k] = x;
                    }
                }
                ech.insert(v);
            }
        }
        ech.rank()
    }
}

/// A complex copied entry by entry out of a library complex.
pub struct DenseComplex {
    pub lo: i32,
    pub modules: Vec<Vec<i32>>,
    /// `maps[k]` goes from position `lo + k + 1` to `lo + k`.
    pub maps: Vec<DenseMap>,
}

impl DenseComplex {
    pub fn from_complex(f: &FreeComplex<PrimeField>) -> Self {
        let n = f.algebra().nvars();
        let modules = f.modules().to_vec();
        let maps = f
            .differentials()
            .iter()
            .map(|d| DenseMap {
                target: d.target().to_vec(),
                source: d.source().to_vec(),
                entries: (0..d.nrows())
                    .map(|i| (0..d.ncols()).map(|j| sparse(&d.entry(i, j), n)).collect())
                    .collect(),
            })
            .collect();
        DenseComplex {
            lo: f.lo(),
            modules,
            maps,
        }
    }

    pub fn linear(&self) -> Self {
        DenseComplex {
            lo: self.lo,
            modules: self.modules.clone(),
            maps: self.maps.iter().map(DenseMap::linear).collect(),
        }
    }

    fn twists(&self, i: i32) -> &[i32] {
        if i < self.lo || i >= self.lo + self.modules.len() as i32 {
            &[]
        } else {
            &self.modules[(i - self.lo) as usize]
        }
    }

    fn map(&self, i: i32) -> Option<&DenseMap> {
        if i <= self.lo {
            return None;
        }
        self.maps.get((i - self.lo - 1) as usize)
    }

    /// `dim_k H_i(F)_d`.
    pub fn homology_dim(&self, ring: &mut DenseRing, i: i32, d: i32) -> usize {
        let dim: usize = self.twists(i).iter().map(|&a| ring.dim(d - a)).sum();
        let out = self.map(i).map_or(0, |m| m.rank(ring, d));
        let inc = self.map(i + 1).map_or(0, |m| m.rank(ring, d));
        dim - out - inc
    }

    /// The least internal degree `<= max_degree` where `H_i` is nonzero.
    pub fn first_nonzero_degree(&self, ring: &mut DenseRing, i: i32, max_degree: i32) -> Option<i32> {
        let lo = self.twists(i).iter().copied().min()?;
        (lo..=max_degree).find(|&d| self.homology_dim(ring, i, d) > 0)
    }
}

/// Dense ring of a library algebra over `GF(p)`.
pub fn dense_ring(alg: &lindef::graded::Algebra<PrimeField>) -> DenseRing {
    let n = alg.nvars();
    let gens: Vec<Sparse> = alg.generators().iter().map(|g| sparse(g, n)).collect();
    DenseRing::new(u64::from(alg.field().modulus()), n, &gens)
}
