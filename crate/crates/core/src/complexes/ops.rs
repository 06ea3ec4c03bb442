use crate::error::{Error, Result};
use crate::field::Field;
use crate::graded::{Algebra, GradedModule, Matrix};
use crate::groebner::{vector_from_terms, ModuleOrder, ModuleTerm, ModuleVector};
use crate::poly::{Homogeneity, Polynomial};

use super::complex::FreeComplex;

/// The hard truncation `F_{≥s}`.
pub fn truncate_above<F: Field>(f: &FreeComplex<F>, s: i32) -> FreeComplex<F> {
    if s <= f.lo() {
        return f.clone();
    }
    let k = ((s - f.lo()) as usize).min(f.modules().len());
    let modules = f.modules()[k..].to_vec();
    let diffs = if k < f.modules().len() { f.differentials()[k..].to_vec() } else { Vec::new() };
    FreeComplex::new_unchecked(f.algebra().clone(), s, modules, diffs, f.is_complete())
}

/// `W = H_s(F_{≥s}) = coker(∂_{s+1})`, after checking that `H_i(F) = 0`
/// at every known position `i > s`.
pub fn syzygy_module<F: Field>(f: &FreeComplex<F>, s: i32) -> Result<GradedModule<F>> {
    f.require_minimal()?;
    let mut i = s + 1;
    while i <= f.hi() && f.is_known(i + 1) {
        if f.homology_info(i)?.nonzero {
            return Err(Error::Precondition(format!("H_{i} of the complex is nonzero")));
        }
        i += 1;
    }
    GradedModule::cokernel(f.algebra().clone(), f.differential_or_zero(s + 1))
}

/// Index layout of `(F ⊗ G)_n = ⊕_i F_i ⊗ G_{n-i}` in lexicographic order
/// of `(i, basis of F_i, basis of G_{n-i})`.
struct Layout {
    blocks: Vec<(i32, usize)>,
    total: usize,
}

fn layout<F: Field>(f: &FreeComplex<F>, g: &FreeComplex<F>, n: i32) -> Layout {
    let mut blocks = Vec::new();
    let mut total = 0;
    for i in f.positions() {
        let j = n - i;
        if j < g.lo() || j > g.hi() {
            continue;
        }
        blocks.push((i, total));
        total += f.rank(i) * g.rank(j);
    }
    Layout { blocks, total }
}

impl Layout {
    fn offset(&self, i: i32) -> Option<usize> {
        self.blocks.iter().find(|b| b.0 == i).map(|b| b.1)
    }
}

/// Total tensor complex with `∂(a⊗b) = ∂a⊗b + (-1)^{|a|} a⊗∂b`.
pub fn tensor<F: Field>(f: &FreeComplex<F>, g: &FreeComplex<F>) -> Result<FreeComplex<F>> {
    f.algebra().check_same(g.algebra())?;
    let alg = f.algebra().clone();
    let field = alg.field();
    let lo = f.lo() + g.lo();
    let mut hi = f.hi() + g.hi();
    if !f.is_complete() {
        hi = hi.min(f.hi() + g.lo());
    }
    if !g.is_complete() {
        hi = hi.min(g.hi() + f.lo());
    }
    let complete = f.is_complete() && g.is_complete();
    if f.modules().is_empty() || g.modules().is_empty() {
        return Ok(FreeComplex::new_unchecked(alg, lo, Vec::new(), Vec::new(), complete));
    }
    let layouts: Vec<Layout> = (lo..=hi).map(|n| layout(f, g, n)).collect();
    let mut modules = Vec::new();
    for (k, l) in layouts.iter().enumerate() {
        let n = lo + k as i32;
        let mut tw = Vec::with_capacity(l.total);
        for &(i, _) in &l.blocks {
            for &a in f.twists(i) {
                for &b in g.twists(n - i) {
                    tw.push(a + b);
                }
            }
        }
        modules.push(tw);
    }
    let minus_one = field.neg(&field.one());
    let mut diffs = Vec::new();
    for k in 1..layouts.len() {
        let n = lo + k as i32;
        let (src, tgt) = (&layouts[k], &layouts[k - 1]);
        let order = ModuleOrder::top(alg.ring().order(), modules[k - 1].clone());
        let mut cols = Vec::with_capacity(src.total);
        for &(i, _) in &src.blocks {
            let j = n - i;
            let (rf, rg) = (f.rank(i), g.rank(j));
            let df = f.differential(i);
            let dg = g.differential(j);
            let sign_neg = i.rem_euclid(2) == 1;
            let rg_lower = g.rank(j - 1);
            let rg_same = rg;
            for p in 0..rf {
                for q in 0..rg {
                    let mut terms: Vec<ModuleTerm<F::Elem>> = Vec::new();
                    if let (Some(df), Some(off)) = (df, tgt.offset(i - 1)) {
                        for t in df.columns()[p].terms() {
                            terms.push(ModuleTerm {
                                comp: off + t.comp * rg_same + q,
                                mon: t.mon,
                                coeff: t.coeff.clone(),
                            });
                        }
                    }
                    if let (Some(dg), Some(off)) = (dg, tgt.offset(i)) {
                        for t in dg.columns()[q].terms() {
                            let coeff = if sign_neg { field.mul(&minus_one, &t.coeff) } else { t.coeff.clone() };
                            terms.push(ModuleTerm {
                                comp: off + p * rg_lower + t.comp,
                                mon: t.mon,
                                coeff,
                            });
                        }
                    }
                    cols.push(vector_from_terms(field, &order, terms));
                }
            }
        }
        diffs.push(Matrix::from_columns_unchecked(
            modules[k - 1].clone(),
            modules[k].clone(),
            cols,
        ));
    }
    Ok(FreeComplex::new_unchecked(alg, lo, modules, diffs, complete))
}

/// `Hom_R(F, R)`: `F_n = ⊕ R(-a)` becomes `⊕ R(a)` at position `-n`, and
/// the differential out of position `-(n-1)` is `(-1)^n ∂_n^T`.
pub fn dual_into_ring<F: Field>(f: &FreeComplex<F>) -> Result<FreeComplex<F>> {
    if !f.is_complete() {
        return Err(Error::Precondition(format!(
            "dual of a prefix ending at position {} (the complex may be infinite)",
            f.hi()
        )));
    }
    let alg = f.algebra().clone();
    let field = alg.field();
    let hi = f.hi();
    let modules: Vec<Vec<i32>> = (f.lo()..=hi)
        .rev()
        .map(|n| f.twists(n).iter().map(|a| -a).collect())
        .collect();
    let mut diffs = Vec::new();
    for k in 0..modules.len().saturating_sub(1) {
        let n = hi - k as i32;
        let d = f.differential(n).expect("inside range");
        let target = modules[k].clone();
        let source = modules[k + 1].clone();
        let order = ModuleOrder::top(alg.ring().order(), target.clone());
        let negate = n.rem_euclid(2) == 1;
        let mut cols: Vec<Vec<ModuleTerm<F::Elem>>> = vec![Vec::new(); source.len()];
        for (j, col) in d.columns().iter().enumerate() {
            for t in col.terms() {
                let coeff = if negate { field.neg(&t.coeff) } else { t.coeff.clone() };
                cols[t.comp].push(ModuleTerm {
                    comp: j,
                    mon: t.mon,
                    coeff,
                });
            }
        }
        let cols = cols.into_iter().map(|c| vector_from_terms(field, &order, c)).collect();
        diffs.push(Matrix::from_columns_unchecked(target, source, cols));
    }
    Ok(FreeComplex::new_unchecked(alg, -hi, modules, diffs, true))
}

/// `K(f_1, ..., f_c; R)`. Position `p` has basis the `p`-subsets of
/// `{1..c}` in lexicographic order, and
/// `∂ e_T = Σ_k (-1)^{pos(k, T)} f_k e_{T \ k}`. A zero form counts as
/// degree one.
pub fn koszul_complex<F: Field>(algebra: &Algebra<F>, forms: &[Polynomial<F::Elem>]) -> Result<FreeComplex<F>> {
    let ring = algebra.ring();
    let field = algebra.field();
    let c = forms.len();
    if c > 16 {
        return Err(Error::Unsupported(format!("Koszul complex on {c} forms")));
    }
    let mut degs = Vec::with_capacity(c);
    for (k, f) in forms.iter().enumerate() {
        match ring.is_homogeneous(f) {
            Homogeneity::Zero => degs.push(1),
            Homogeneity::Mixed => return Err(Error::NotHomogeneous(format!("form {k}: {}", ring.format(f)))),
            Homogeneity::Degree(0) => return Err(Error::Precondition(format!("form {k} has degree zero"))),
            Homogeneity::Degree(d) => degs.push(d as i32),
        }
    }
    let forms: Vec<Polynomial<F::Elem>> = forms.iter().map(|f| algebra.reduce(f)).collect();
    let subsets: Vec<Vec<u32>> = (0..=c)
        .map(|p| {
            let mut v: Vec<u32> = (0u32..(1u32 << c)).filter(|m| m.count_ones() as usize == p).collect();
            v.sort_by_key(|&m| {
                let bits: Vec<usize> = (0..c).filter(|&b| m >> b & 1 == 1).collect();
                bits
            });
            v
        })
        .collect();
    let twist = |m: u32| -> i32 { (0..c).filter(|&b| m >> b & 1 == 1).map(|b| degs[b]).sum() };
    let modules: Vec<Vec<i32>> = subsets.iter().map(|s| s.iter().map(|&m| twist(m)).collect()).collect();
    let mut diffs = Vec::new();
    for p in 1..=c {
        let order = ModuleOrder::top(ring.order(), modules[p - 1].clone());
        let index_of = |m: u32| subsets[p - 1].iter().position(|&x| x == m).expect("subset");
        let mut cols = Vec::new();
        for &m in &subsets[p] {
            let mut terms = Vec::new();
            let mut pos = 0;
            for b in 0..c {
                if m >> b & 1 == 0 {
                    continue;
                }
                let row = index_of(m & !(1 << b));
                let v = ModuleVector::from_polynomial(&forms[b], row);
                for t in v.into_terms() {
                    let coeff = if pos % 2 == 1 { field.neg(&t.coeff) } else { t.coeff };
                    terms.push(ModuleTerm { coeff, ..t });
                }
                pos += 1;
            }
            cols.push(vector_from_terms(field, &order, terms));
        }
        diffs.push(Matrix::from_columns_unchecked(
            modules[p - 1].clone(),
            modules[p].clone(),
            cols,
        ));
    }
    Ok(FreeComplex::new_unchecked(algebra.clone(), 0, modules, diffs, true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::minimal_resolution;
    use crate::field::Rationals;
    use crate::graded::GradedAlgebra;

    fn ranks<F: Field>(f: &FreeComplex<F>) -> Vec<usize> {
        f.positions().map(|i| f.rank(i)).collect()
    }

    #[test]
    fn koszul_and_truncation() {
        let s = GradedAlgebra::polynomial(Rationals, &["x", "y"]).unwrap();
        let (x, y) = (s.ring().var(0), s.ring().var(1));
        let k = koszul_complex(&s, &[x.clone(), y.clone()]).unwrap();
        k.check_d_squared().unwrap();
        assert_eq!(k.modules(), &[vec![0], vec![1, 1], vec![2]]);
        assert!(!k.homology_info(0).unwrap().nonzero || k.homology_info(0).unwrap().indeg == Some(0));
        assert!(!k.homology_info(1).unwrap().nonzero);
        assert!(!k.homology_info(2).unwrap().nonzero);
        assert_eq!(k.homology(0).unwrap().hilbert_function(0, 2), vec![1, 0, 0]);

        let t = truncate_above(&k, 1);
        assert_eq!((t.lo(), t.modules()), (1, &[vec![1, 1], vec![2]][..]));
        assert_eq!(truncate_above(&k, 0).modules(), k.modules());
        assert_eq!(truncate_above(&k, 2).modules(), &[vec![2]]);

        let z = koszul_complex(&s, &[s.ring().zero()]).unwrap();
        assert!(z.homology_info(1).unwrap().nonzero);
        assert_eq!(z.homology(1).unwrap().hilbert_function(0, 2), vec![0, 1, 2]);

        let r = GradedAlgebra::parse(Rationals, &["x", "y"], &["x^3"]).unwrap();
        let x2 = r.ring().parse("x^2").unwrap();
        let k = koszul_complex(&r, &[x2]).unwrap();
        // H_1 = ann(x^2) = (x), generated in internal degree 1 + 2
        assert_eq!(k.homology_info(1).unwrap().indeg, Some(3));
        assert!(koszul_complex(&s, &[s.ring().one()]).is_err());
    }

    #[test]
    fn tensor_products() {
        let s = GradedAlgebra::polynomial(Rationals, &["x", "y"]).unwrap();
        let (x, y) = (s.ring().var(0), s.ring().var(1));
        let kx = koszul_complex(&s, std::slice::from_ref(&x)).unwrap();
        let ky = koszul_complex(&s, std::slice::from_ref(&y)).unwrap();
        let kxy = koszul_complex(&s, &[x.clone(), y.clone()]).unwrap();
        let t = tensor(&kx, &ky).unwrap();
        t.check_d_squared().unwrap();
        assert_eq!(ranks(&t), vec![1, 2, 1]);
        assert_eq!(t.modules(), kxy.modules());
        assert_eq!(s.ring().format(&t.differential(1).unwrap().entry(0, 0)), "y");
        assert!(!t.homology_info(1).unwrap().nonzero);
        assert!(!t.homology_info(2).unwrap().nonzero);
        let unit = FreeComplex::free(s.clone(), 0, vec![0]);
        let u = tensor(&kxy, &unit).unwrap();
        assert_eq!(u.differentials(), kxy.differentials());

        let r = GradedAlgebra::parse(Rationals, &["x", "y"], &["x^2", "x*y"]).unwrap();
        let ry = r.ring().var(1);
        let f = koszul_complex(&r, &[ry]).unwrap();
        let rx = GradedModule::cyclic_parse(r.clone(), &["x"]).unwrap();
        let g = minimal_resolution(&rx, 4).unwrap().complex;
        let fg = tensor(&f, &g).unwrap();
        fg.check_d_squared().unwrap();
        assert_eq!(fg.hi(), 4);
        for i in 1..4 {
            assert!(!fg.homology_info(i).unwrap().nonzero, "H_{i}");
        }
        assert_eq!(fg.homology(0).unwrap().hilbert_function(0, 3), vec![1, 0, 0, 0]);
    }

    #[test]
    fn duals() {
        let s = GradedAlgebra::polynomial(Rationals, &["x", "y"]).unwrap();
        let x = s.ring().var(0);
        let f = koszul_complex(&s, std::slice::from_ref(&x)).unwrap();
        let d = dual_into_ring(&f).unwrap();
        assert_eq!((d.lo(), d.modules()), (-1, &[vec![-1], vec![0]][..]));
        let e = d.differential(0).unwrap();
        assert_eq!(s.ring().format(&e.entry(0, 0)), "-x");
        let dd = dual_into_ring(&d).unwrap();
        assert_eq!(dd.modules(), f.modules());
        let back = dd.differential(1).unwrap().entry(0, 0);
        assert_eq!(s.ring().neg(&back), f.differential(1).unwrap().entry(0, 0));

        let k = koszul_complex(&s, &[x, s.ring().var(1)]).unwrap();
        let kd = dual_into_ring(&k).unwrap();
        kd.check_d_squared().unwrap();
        assert_eq!(kd.lo(), -2);
        let shifted: Vec<Vec<i32>> = kd.modules().iter().map(|m| m.iter().map(|a| a + 2).collect()).collect();
        assert_eq!(shifted, k.modules());
        for (a, b) in kd.differentials().iter().zip(k.differentials()) {
            for i in 0..a.nrows() {
                for j in 0..a.ncols() {
                    let (p, q) = (a.entry(i, j), b.entry(b.nrows() - 1 - i, b.ncols() - 1 - j));
                    assert!(p == q || p == s.ring().neg(&q));
                }
            }
        }
        let r = GradedModule::residue_field(GradedAlgebra::parse(Rationals, &["x", "y"], &["x^2"]).unwrap());
        let prefix = minimal_resolution(&r, 2).unwrap().complex;
        assert!(dual_into_ring(&prefix).is_err());
    }

    #[test]
    fn syzygy_modules() {
        let r = GradedAlgebra::parse(Rationals, &["x", "y"], &["x^2", "x*y"]).unwrap();
        let f = koszul_complex(&r, &[r.ring().var(1)]).unwrap();
        let w = syzygy_module(&f, 1).unwrap();
        assert_eq!(w.generator_twists(), &[1]);
        assert!(syzygy_module(&f, 0).is_err());

        let s = GradedAlgebra::polynomial(Rationals, &["x", "y"]).unwrap();
        let q = GradedModule::cyclic_parse(s.clone(), &["x^2", "x*y"]).unwrap();
        let res = minimal_resolution(&q, 6).unwrap();
        let w0 = syzygy_module(&res.complex, 0).unwrap();
        assert_eq!(w0.hilbert_function(0, 5), q.hilbert_function(0, 5));
        let w1 = syzygy_module(&res.complex, 1).unwrap();
        let b = minimal_resolution(&w1, 6).unwrap().betti();
        assert_eq!(b.entries().collect::<Vec<_>>(), vec![(0, 2, 2), (1, 3, 1)]);
    }
}
