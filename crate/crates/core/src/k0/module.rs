//! Finite-dimensional graded `R(ν)`-modules given by matrices, their
//! characters and restrictions.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::klr::{Block, Element, Gen, KlrAlgebra, Label, Seq, Weight, Word};
use crate::linalg::{q_int, EchelonBasis, Matrix, SparseVec};
use crate::perm::canonical_word;
use crate::poly::MPoly;
use crate::qseries::LaurentPolynomial;
use crate::quiver::VertexClass;
use crate::rat::Rat;
use crate::symgrp::{specht_module, Generator, GradedOperatorModule, Partition};

/// A graded `R(ν)` (or, after restriction, `R(ν') ⊗ R(ν'')`) module.
///
/// Every basis vector lies in a single idempotent image `1_i M`.  The
/// underlying operator module carries generators `x{k}` and one piece
/// `t{k}|{i}` of `τ_k` per source sequence `i` (1-based `k`).
#[derive(Clone, Debug)]
pub struct KlrModule {
    weight: Weight,
    seqs: Vec<Seq>,
    crossings: Vec<usize>,
    module: GradedOperatorModule,
}

fn seq_key(s: &[usize]) -> String {
    s.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}

impl KlrModule {
    /// Assembles a module from full `x_k` and `τ_k` matrices and verifies the defining relations.
    pub fn new(alg: &KlrAlgebra, weight: Weight, degrees: Vec<i64>, seqs: Vec<Seq>, x: Vec<Matrix>, t: BTreeMap<usize, Matrix>) -> Result<KlrModule> {
        let n = weight.height();
        if seqs.len() != degrees.len() || seqs.iter().any(|s| alg.weight_of(s) != weight) {
            return Err(Error::Relation("basis vectors must carry sequences of the module's weight".into()));
        }
        if x.len() != n {
            return Err(Error::Relation(format!("expected {} dot matrices, got {}", n, x.len())));
        }
        let dim = degrees.len();
        let mut gens = BTreeMap::new();
        for (k, m) in x.iter().enumerate() {
            gens.insert(format!("x{}", k + 1), Generator { degree: 2, matrix: m.clone() });
        }
        for (&k, m) in &t {
            if k + 1 >= n {
                return Err(Error::Relation(format!("crossing {} out of range", k + 1)));
            }
            let mut by_source: BTreeMap<Seq, Vec<usize>> = BTreeMap::new();
            for (b, s) in seqs.iter().enumerate() {
                by_source.entry(s.clone()).or_default().push(b);
            }
            for (s, cols) in by_source {
                let mut piece = Matrix::zeros(dim, dim);
                for &c in &cols {
                    for r in 0..dim {
                        let v = m.get(r, c);
                        if !v.is_zero() {
                            let mut target = s.clone();
                            target.swap(k, k + 1);
                            if seqs[r] != target {
                                return Err(Error::Relation(format!("t{} does not map 1_{} into 1_{}", k + 1, seq_key(&s), seq_key(&target))));
                            }
                            piece.set(r, c, v.clone());
                        }
                    }
                }
                let degree = -alg.a(s[k], s[k + 1]);
                gens.insert(format!("t{}|{}", k + 1, seq_key(&s)), Generator { degree, matrix: piece });
            }
        }
        let module = GradedOperatorModule::new(degrees, gens)?;
        let out = KlrModule { weight, seqs, crossings: t.keys().copied().collect(), module };
        out.check_relations(alg)?;
        Ok(out)
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn dim(&self) -> usize {
        self.seqs.len()
    }

    pub fn operator_module(&self) -> &GradedOperatorModule {
        &self.module
    }

    pub fn graded_dim(&self) -> LaurentPolynomial {
        self.module.graded_dim()
    }

    pub fn x_matrix(&self, k: usize) -> &Matrix {
        &self.module.generator(&format!("x{}", k + 1)).expect("dot generator").matrix
    }

    /// `τ_k` as a full matrix; `None` when the crossing is not part of the acting algebra.
    pub fn t_matrix(&self, k: usize) -> Option<Matrix> {
        if !self.crossings.contains(&k) {
            return None;
        }
        let prefix = format!("t{}|", k + 1);
        let mut m = Matrix::zeros(self.dim(), self.dim());
        for (name, g) in self.module.generators() {
            if name.starts_with(&prefix) {
                m = m.add(&g.matrix);
            }
        }
        Some(m)
    }

    pub fn idempotent_matrix(&self, s: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.dim(), self.dim());
        for (b, t) in self.seqs.iter().enumerate() {
            if t == s {
                m.set(b, b, q_int(1));
            }
        }
        m
    }

    /// Matrix of an element of the acting algebra.
    pub fn element_matrix(&self, e: &Element) -> Result<Matrix> {
        let d = self.dim();
        let mut out = Matrix::zeros(d, d);
        for (t, c) in e.terms() {
            let mut m = self.idempotent_matrix(&t.source);
            for &l in canonical_word(&t.perm).iter().rev() {
                let tm = self.t_matrix(l as usize).ok_or_else(|| Error::Domain(format!("crossing {} does not act on this module", l + 1)))?;
                m = tm.mul(&m);
            }
            for (k, &r) in t.dots.iter().enumerate() {
                for _ in 0..r {
                    m = self.x_matrix(k).mul(&m);
                }
            }
            out = out.add(&m.scale(&c.to_big()));
        }
        Ok(out)
    }

    /// Matrix of a raw word, generator by generator.
    pub fn word_matrix(&self, w: &Word) -> Result<Matrix> {
        let mut m = Matrix::identity(self.dim());
        for g in &w.gens {
            let gm = match g {
                Gen::Idem(s) => self.idempotent_matrix(s),
                Gen::X(k) => self.x_matrix(*k).clone(),
                Gen::T(k) => self.t_matrix(*k).ok_or_else(|| Error::Domain(format!("crossing {} does not act", k + 1)))?,
            };
            m = gm.mul(&m);
        }
        Ok(m)
    }

    /// Compares every local relation word with its normal form.
    fn check_relations(&self, alg: &KlrAlgebra) -> Result<()> {
        let n = self.weight.height();
        let mut words: Vec<Vec<Gen>> = Vec::new();
        for k in 0..n {
            for l in 0..n {
                words.push(vec![Gen::X(k), Gen::X(l)]);
            }
        }
        for &k in &self.crossings {
            words.push(vec![Gen::T(k), Gen::T(k)]);
            for l in 0..n {
                words.push(vec![Gen::X(l), Gen::T(k)]);
            }
            for &l in &self.crossings {
                if l == k + 1 {
                    words.push(vec![Gen::T(k), Gen::T(l), Gen::T(k)]);
                    words.push(vec![Gen::T(l), Gen::T(k), Gen::T(l)]);
                }
                if l > k + 1 {
                    words.push(vec![Gen::T(k), Gen::T(l)]);
                }
            }
        }
        for s in self.weight.sequences() {
            for body in &words {
                let mut gens = vec![Gen::Idem(s.clone())];
                gens.extend(body.iter().cloned());
                let w = Word::new(gens);
                let nf = alg.normal_form(&w)?;
                if self.word_matrix(&w)? != self.element_matrix(&nf)? {
                    return Err(Error::Relation(format!("relation {} fails on the module", w.display(alg.quiver()))));
                }
            }
        }
        Ok(())
    }

    /// Graded rank of the action of a degree-0 element.
    pub fn graded_rank(&self, e: &Element) -> Result<LaurentPolynomial> {
        Ok(self.module.graded_rank(&self.element_matrix(e)?))
    }

    pub fn shift(&self, m: i64) -> KlrModule {
        KlrModule { module: self.module.shift(m), ..self.clone() }
    }

    pub fn direct_sum(&self, alg: &KlrAlgebra, o: &KlrModule) -> Result<KlrModule> {
        if self.weight != o.weight || self.crossings != o.crossings {
            return Err(Error::WeightMismatch("direct sum of modules over different algebras".into()));
        }
        let (a, b) = (self.dim(), o.dim());
        let block = |m1: &Matrix, m2: &Matrix| {
            let mut m = Matrix::zeros(a + b, a + b);
            for i in 0..a {
                for j in 0..a {
                    m.set(i, j, m1.get(i, j).clone());
                }
            }
            for i in 0..b {
                for j in 0..b {
                    m.set(a + i, a + j, m2.get(i, j).clone());
                }
            }
            m
        };
        let n = self.weight.height();
        let x = (0..n).map(|k| block(self.x_matrix(k), o.x_matrix(k))).collect();
        let t = self.crossings.iter().map(|&k| (k, block(&self.t_matrix(k).unwrap(), &o.t_matrix(k).unwrap()))).collect();
        let mut degrees = self.module.degrees().to_vec();
        degrees.extend(o.module.degrees());
        let mut seqs = self.seqs.clone();
        seqs.extend(o.seqs.iter().cloned());
        KlrModule::new(alg, self.weight.clone(), degrees, seqs, x, t)
    }

    fn rebuild(&self, keep: &[usize], crossings: &[usize]) -> KlrModule {
        let mut names: Vec<String> = (0..self.weight.height()).map(|k| format!("x{}", k + 1)).collect();
        for name in self.module.generators().keys() {
            if let Some(rest) = name.strip_prefix('t') {
                let k: usize = rest.split('|').next().unwrap().parse().unwrap();
                if crossings.contains(&(k - 1)) {
                    names.push(name.clone());
                }
            }
        }
        let module = self.module.restrict(keep, &names).expect("idempotent cut is stable");
        KlrModule {
            weight: self.weight.clone(),
            seqs: keep.iter().map(|&b| self.seqs[b].clone()).collect(),
            crossings: crossings.to_vec(),
            module,
        }
    }
}

/// `Δ_{i^n} M = (1_{ν-ni} ⊗ 1_{ni}) M` as a module over `R(ν - ni) ⊗ R(ni)`.
pub fn delta_restrict(m: &KlrModule, i: usize, n: usize) -> Result<KlrModule> {
    let nu = m.weight();
    if n > nu.0[i] {
        return Err(Error::Domain(format!("cannot split off {} copies of vertex {} from weight {:?}", n, i, nu.0)));
    }
    let h = nu.height();
    let keep: Vec<usize> = (0..m.dim()).filter(|&b| m.seqs[b][h - n..].iter().all(|&v| v == i)).collect();
    let crossings: Vec<usize> = m.crossings.iter().copied().filter(|&k| n == 0 || k + 1 != h - n).collect();
    Ok(m.rebuild(&keep, &crossings))
}

/// `ε_i(M) = max { n : Δ_{i^n} M != 0 }`.
pub fn epsilon(m: &KlrModule, i: usize) -> usize {
    (0..=m.weight().0[i]).rev().find(|&n| delta_restrict(m, i, n).map(|d| d.dim() > 0).unwrap_or(false)).unwrap_or(0)
}

/// The graded lift of `S^λ` over Jordan-type `R(ni)`: dots act by zero, crossings by `s_k`.
pub fn jordan_specht_module(alg: &KlrAlgebra, i: usize, lambda: &Partition) -> Result<KlrModule> {
    if alg.class(i) != VertexClass::Isotropic {
        return Err(Error::Domain(format!("vertex {} is not of Jordan type", alg.quiver().name(i))));
    }
    let n = lambda.size();
    let s = specht_module(lambda);
    let d = s.dim();
    let mut weight = vec![0; alg.num_vertices()];
    weight[i] = n;
    let t = (0..n.saturating_sub(1)).map(|k| (k, s.generator(&format!("s{}", k + 1)).unwrap().matrix.clone())).collect();
    let x = vec![Matrix::zeros(d, d); n];
    KlrModule::new(alg, Weight(weight), vec![0; d], vec![vec![i; n]; d], x, t)
}

/// The irreducible nil-Hecke module `V(i^n)`: coinvariants of `Q[x_1..x_n]`
/// shifted down by `n(n-1)/2`, with `τ_k` acting by divided differences.
pub fn nil_hecke_irreducible(alg: &KlrAlgebra, i: usize, n: usize) -> Result<KlrModule> {
    if alg.class(i) != VertexClass::Real {
        return Err(Error::Domain(format!("vertex {} has loops", alg.quiver().name(i))));
    }
    // the ideal generated by the elementary symmetric polynomials, degree by degree;
    // monomials that are not pivots span a complement
    let top = n * (n - 1) / 2;
    let elem: Vec<MPoly> = (1..=n)
        .map(|k| {
            let mut p = MPoly::zero(n);
            for m in crate::klr::exponent_vectors(n, k as u32).into_iter().filter(|v| v.iter().all(|&e| e <= 1)) {
                p.add_term(m, Rat::ONE);
            }
            p
        })
        .collect();
    let mut ideals: Vec<EchelonBasis<Vec<u32>>> = Vec::new();
    let mut basis: Vec<Vec<u32>> = Vec::new();
    for t in 0..=top + 1 {
        let mut ideal = EchelonBasis::new();
        for (k, e) in elem.iter().enumerate() {
            if k < t {
                for m in crate::klr::exponent_vectors(n, (t - k - 1) as u32) {
                    ideal.insert(poly_sparse(&e.mul_monomial(&m)));
                }
            }
        }
        basis.extend(crate::klr::exponent_vectors(n, t as u32).into_iter().filter(|m| !ideal.is_pivot(m)));
        ideals.push(ideal);
    }
    let index: BTreeMap<Vec<u32>, usize> = basis.iter().cloned().enumerate().map(|(a, b)| (b, a)).collect();
    let d = basis.len();
    let matrix_of = |f: &dyn Fn(&MPoly) -> MPoly| {
        let mut m = Matrix::zeros(d, d);
        for (c, mono) in basis.iter().enumerate() {
            let p = f(&MPoly::monomial(mono.clone(), Rat::ONE));
            for (key, v) in reduce_mod(&p, &ideals) {
                m.set(index[&key], c, v);
            }
        }
        m
    };
    let x = (0..n).map(|k| matrix_of(&|p: &MPoly| p.mul(&MPoly::var(n, k)))).collect();
    let t = (0..n.saturating_sub(1)).map(|k| (k, matrix_of(&|p: &MPoly| p.divided_difference(k)))).collect();
    let degrees = basis.iter().map(|m| 2 * m.iter().sum::<u32>() as i64 - top as i64).collect();
    let mut weight = vec![0; alg.num_vertices()];
    weight[i] = n;
    KlrModule::new(alg, Weight(weight), degrees, vec![vec![i; n]; d], x, t)
}

fn poly_sparse(p: &MPoly) -> SparseVec<Vec<u32>> {
    p.terms().map(|(m, c)| (m.clone(), c.to_big())).collect()
}

/// Normal form of `p` modulo the ideal, in the non-pivot monomials.
fn reduce_mod(p: &MPoly, ideals: &[EchelonBasis<Vec<u32>>]) -> SparseVec<Vec<u32>> {
    let mut by_deg: BTreeMap<u32, SparseVec<Vec<u32>>> = BTreeMap::new();
    for (m, c) in p.terms() {
        by_deg.entry(m.iter().sum()).or_default().insert(m.clone(), c.to_big());
    }
    let mut out = SparseVec::new();
    for (deg, v) in by_deg {
        // every monomial above the top degree lies in the ideal
        if let Some(ideal) = ideals.get(deg as usize) {
            if deg as usize + 1 < ideals.len() {
                out.extend(ideal.remainder(&v));
            }
        }
    }
    out
}

/// Character `Ch M = Σ Dim(1_i M) i` over the sequences with parameters of `ν`.
pub type CharacterVector = BTreeMap<Label, LaurentPolynomial>;

/// Sequences with parameters: blocks `i[c]` at Jordan-type vertices, plain letters elsewhere.
pub fn underlined_sequences(alg: &KlrAlgebra, weight: &Weight) -> Vec<Label> {
    fn go(alg: &KlrAlgebra, left: &mut Vec<usize>, cur: &mut Vec<Block>, out: &mut Vec<Label>) {
        if left.iter().all(|&m| m == 0) {
            out.push(Label(cur.clone()));
            return;
        }
        for i in 0..left.len() {
            if left[i] == 0 {
                continue;
            }
            let sizes: Vec<usize> = if alg.class(i) == VertexClass::Isotropic { (1..=left[i]).collect() } else { vec![1] };
            for c in sizes {
                left[i] -= c;
                cur.push(if alg.class(i) == VertexClass::Isotropic { Block::Param(i, c) } else { Block::Plain(i) });
                go(alg, left, cur, out);
                cur.pop();
                left[i] += c;
            }
        }
    }
    let mut out = Vec::new();
    go(alg, &mut weight.0.clone(), &mut Vec::new(), &mut out);
    out
}

pub fn character(alg: &KlrAlgebra, m: &KlrModule) -> Result<CharacterVector> {
    let mut ch = CharacterVector::new();
    for label in underlined_sequences(alg, m.weight()) {
        let e = label.idempotent(alg)?;
        let r = m.graded_rank(&e)?;
        if !r.is_zero() {
            ch.insert(label, r);
        }
    }
    Ok(ch)
}

pub fn add_characters(a: &CharacterVector, b: &CharacterVector) -> CharacterVector {
    let mut out = a.clone();
    for (l, p) in b {
        let e = out.entry(l.clone()).or_insert_with(LaurentPolynomial::zero);
        *e = &*e + p;
        if e.is_zero() {
            out.remove(l);
        }
    }
    out
}
