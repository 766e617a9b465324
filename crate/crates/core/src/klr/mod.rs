//! The quiver Hecke algebra `R(ν)`: elements in normal form and their products.
//!
//! Basis words are `x^r · τ_ŵ · 1_i` where `ŵ` is the lexicographically
//! smallest reduced word of `w` (letters `s_0 < s_1 < ..`).  Products are
//! computed by left multiplication with generators: dots slide leftward
//! past crossings, double crossings resolve to polynomials, and braid
//! moves carry the word to the fixed reduced expression.
//!
//! Orientation: `τ_k x_k 1_ii = x_{k+1} τ_k 1_ii + 1_ii` for loopless `i`,
//! and `τ_k^2 1_(i,j) = Q_ij(x_k, x_{k+1}) 1_(i,j)`, where `i` is the strand
//! at position `k` below the crossings.  These are the signs under which the
//! polynomial action (see `polyrep`) is a representation.

mod braid;
mod label;
mod sigma;
mod word;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

pub use braid::{braid_path, Move};
pub use label::{Block, Label};
pub use sigma::{sigma_element, sigma_presentation_check, SigmaReport};
pub use word::{Gen, Word};

use crate::error::{Error, Result};
use crate::perm::{self, act_on_seq, canonical_word, from_word, left_mul, length, Perm};
use crate::poly::MPoly;
use crate::quiver::{h_poly, q_poly, CartanDatum, QuiverDatum, VertexClass};
use crate::rat::Rat;

/// A sequence of vertex indices.
pub type Seq = Vec<usize>;

/// Multiplicity of each vertex.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Weight(pub Vec<usize>);

impl Weight {
    pub fn zero(num_vertices: usize) -> Weight {
        Weight(vec![0; num_vertices])
    }

    pub fn of_seq(num_vertices: usize, seq: &[usize]) -> Weight {
        let mut w = vec![0; num_vertices];
        for &i in seq {
            w[i] += 1;
        }
        Weight(w)
    }

    pub fn height(&self) -> usize {
        self.0.iter().sum()
    }

    /// All sequences of this weight, in lexicographic order.
    pub fn sequences(&self) -> Vec<Seq> {
        let mut items = Vec::new();
        for (i, &m) in self.0.iter().enumerate() {
            items.extend(std::iter::repeat_n(i, m));
        }
        perm::distinct_arrangements(&items)
    }

    pub fn add(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

/// A basis word `x^dots · τ_perm · 1_source`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Term {
    pub dots: Vec<u32>,
    pub perm: Perm,
    pub source: Seq,
}

impl Term {
    pub fn idempotent(source: Seq) -> Term {
        let n = source.len();
        Term { dots: vec![0; n], perm: perm::identity(n), source }
    }

    pub fn n(&self) -> usize {
        self.source.len()
    }

    pub fn target(&self) -> Seq {
        act_on_seq(&self.perm, &self.source)
    }

    pub fn word(&self) -> Vec<u8> {
        canonical_word(&self.perm)
    }
}

/// A finite rational combination of basis words of one weight.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element {
    weight: Weight,
    terms: BTreeMap<Term, Rat>,
}

impl Element {
    pub fn zero(weight: Weight) -> Element {
        Element { weight, terms: BTreeMap::new() }
    }

    pub fn from_term(weight: Weight, t: Term, c: Rat) -> Element {
        let mut e = Element::zero(weight);
        e.add_term(t, c);
        e
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn n(&self) -> usize {
        self.weight.height()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Term, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, t: &Term) -> Rat {
        self.terms.get(t).copied().unwrap_or(Rat::ZERO)
    }

    pub fn add_term(&mut self, t: Term, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = *o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, o: &Element, c: Rat) {
        assert_eq!(self.weight, o.weight, "adding elements of different weights");
        if c.is_zero() {
            return;
        }
        for (t, x) in &o.terms {
            self.add_term(t.clone(), *x * c);
        }
    }

    pub fn add(&self, o: &Element) -> Element {
        let mut r = self.clone();
        r.add_scaled(o, Rat::ONE);
        r
    }

    pub fn sub(&self, o: &Element) -> Element {
        let mut r = self.clone();
        r.add_scaled(o, -Rat::ONE);
        r
    }

    pub fn scale(&self, c: Rat) -> Element {
        let mut r = Element::zero(self.weight.clone());
        r.add_scaled(self, c);
        r
    }

    /// Terms whose source is `seq` (right multiplication by `1_seq`).
    pub fn with_source(&self, seq: &[usize]) -> Element {
        Element {
            weight: self.weight.clone(),
            terms: self.terms.iter().filter(|(t, _)| t.source == seq).map(|(t, c)| (t.clone(), *c)).collect(),
        }
    }

    /// Terms whose target is `seq` (left multiplication by `1_seq`).
    pub fn with_target(&self, seq: &[usize]) -> Element {
        Element {
            weight: self.weight.clone(),
            terms: self.terms.iter().filter(|(t, _)| t.target() == seq).map(|(t, c)| (t.clone(), *c)).collect(),
        }
    }

    pub fn sources(&self) -> Vec<Seq> {
        let mut v: Vec<Seq> = self.terms.keys().map(|t| t.source.clone()).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn targets(&self) -> Vec<Seq> {
        let mut v: Vec<Seq> = self.terms.keys().map(|t| t.target()).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Largest number of crossings in any term.
    pub fn max_crossings(&self) -> usize {
        self.terms.keys().map(|t| length(&t.perm)).max().unwrap_or(0)
    }

    pub fn max_dot(&self) -> u32 {
        self.terms.keys().flat_map(|t| t.dots.iter().copied()).max().unwrap_or(0)
    }

    fn map_terms(&self, f: impl Fn(&Term) -> Option<Term>) -> Element {
        let mut r = Element::zero(self.weight.clone());
        for (t, c) in &self.terms {
            if let Some(nt) = f(t) {
                r.add_term(nt, *c);
            }
        }
        r
    }
}

type TauKey = (u8, Perm, Seq);

/// `R(ν)` for all `ν` over a fixed quiver, with caches for repeated products.
pub struct KlrAlgebra {
    quiver: QuiverDatum,
    cartan: CartanDatum,
    tau_cache: Mutex<HashMap<TauKey, Arc<Element>>>,
}

impl fmt::Debug for KlrAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("KlrAlgebra").field("quiver", &self.quiver).finish()
    }
}

impl KlrAlgebra {
    pub fn new(quiver: QuiverDatum) -> KlrAlgebra {
        let cartan = quiver.cartan();
        KlrAlgebra { quiver, cartan, tau_cache: Mutex::new(HashMap::new()) }
    }

    pub fn quiver(&self) -> &QuiverDatum {
        &self.quiver
    }

    pub fn cartan(&self) -> &CartanDatum {
        &self.cartan
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }

    pub fn class(&self, i: usize) -> VertexClass {
        self.cartan.class[i]
    }

    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.cartan.a[i][j]
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.quiver.index_of(name)
    }

    pub fn weight_of(&self, seq: &[usize]) -> Weight {
        Weight::of_seq(self.num_vertices(), seq)
    }

    pub fn idempotent(&self, seq: &[usize]) -> Element {
        Element::from_term(self.weight_of(seq), Term::idempotent(seq.to_vec()), Rat::ONE)
    }

    /// Identity of `R(ν)`: the sum of all `1_i`.
    pub fn unit(&self, weight: &Weight) -> Element {
        let mut e = Element::zero(weight.clone());
        for s in weight.sequences() {
            e.add_term(Term::idempotent(s), Rat::ONE);
        }
        e
    }

    /// `x_k 1_seq` (0-based `k`).
    pub fn x(&self, k: usize, seq: &[usize]) -> Element {
        self.left_mul_x(k, &self.idempotent(seq))
    }

    /// `τ_k 1_seq` (0-based `k`).
    pub fn tau(&self, k: usize, seq: &[usize]) -> Element {
        let mut t = Term::idempotent(seq.to_vec());
        t.perm = from_word(seq.len(), &[k as u8]);
        Element::from_term(self.weight_of(seq), t, Rat::ONE)
    }

    /// Degree of a basis word: 2 per dot, `-a_ij` per crossing of strands coloured `i`, `j`.
    pub fn term_degree(&self, t: &Term) -> i64 {
        let mut d = 2 * t.dots.iter().map(|&r| r as i64).sum::<i64>();
        let n = t.n();
        for p in 0..n {
            for q in p + 1..n {
                if t.perm[p] > t.perm[q] {
                    d -= self.a(t.source[p], t.source[q]);
                }
            }
        }
        d
    }

    /// Degree of a crossing permutation applied to `source`.
    pub fn perm_degree(&self, w: &[u8], source: &[usize]) -> i64 {
        self.term_degree(&Term { dots: vec![0; source.len()], perm: w.to_vec(), source: source.to_vec() })
    }

    /// The common degree of all terms, if the element is homogeneous and nonzero.
    pub fn degree(&self, e: &Element) -> Option<i64> {
        let mut degs = e.terms().map(|(t, _)| self.term_degree(t));
        let d = degs.next()?;
        degs.all(|x| x == d).then_some(d)
    }

    pub fn homogeneous_parts(&self, e: &Element) -> BTreeMap<i64, Element> {
        let mut out: BTreeMap<i64, Element> = BTreeMap::new();
        for (t, c) in e.terms() {
            out.entry(self.term_degree(t)).or_insert_with(|| Element::zero(e.weight.clone())).add_term(t.clone(), *c);
        }
        out
    }

    /// `τ_k^2 1_seq` as a polynomial in the dots, `None` when it vanishes.
    pub fn tau_square(&self, k: usize, seq: &[usize]) -> Option<MPoly> {
        let n = seq.len();
        let (i, j) = (seq[k], seq[k + 1]);
        let p = if i == j {
            if self.class(i) == VertexClass::Real {
                return None;
            }
            h_poly(&self.quiver, i).unwrap()
        } else {
            q_poly(&self.quiver, i, j).unwrap()
        };
        Some(p.embed(n, &[k, k + 1]))
    }

    /// Correction in `τ_kτ_{k+1}τ_k 1_seq - τ_{k+1}τ_kτ_{k+1} 1_seq`, `None` when the braid relation is exact.
    pub fn braid_correction(&self, k: usize, seq: &[usize]) -> Option<MPoly> {
        let n = seq.len();
        let (i, j) = (seq[k], seq[k + 1]);
        if seq[k + 2] != i || i == j || self.class(i) != VertexClass::Real {
            return None;
        }
        let q = q_poly(&self.quiver, i, j).unwrap();
        let num = q.embed(n, &[k, k + 1]).sub(&q.embed(n, &[k + 2, k + 1]));
        let c = num.div_linear(k, k + 2).expect("braid correction is polynomial");
        (!c.is_zero()).then_some(c)
    }

    /// Multiplies every term by the polynomial `p` on the left.
    pub fn left_mul_poly(&self, p: &MPoly, e: &Element) -> Element {
        let mut r = Element::zero(e.weight.clone());
        for (m, c) in p.terms() {
            for (t, x) in e.terms() {
                let mut nt = t.clone();
                for (d, a) in nt.dots.iter_mut().zip(m) {
                    *d += a;
                }
                r.add_term(nt, *c * *x);
            }
        }
        r
    }

    pub fn left_mul_x(&self, k: usize, e: &Element) -> Element {
        e.map_terms(|t| {
            let mut nt = t.clone();
            nt.dots[k] += 1;
            Some(nt)
        })
    }

    /// `τ_k · e`.
    pub fn left_mul_tau(&self, k: usize, e: &Element) -> Element {
        let mut r = Element::zero(e.weight.clone());
        for (t, c) in e.terms() {
            let target = t.target();
            let base = self.tau_on_basis(k, &t.perm, &t.source);
            let mut swapped = t.dots.clone();
            swapped.swap(k, k + 1);
            for (bt, bc) in base.terms() {
                let mut nt = bt.clone();
                for (d, a) in nt.dots.iter_mut().zip(&swapped) {
                    *d += a;
                }
                r.add_term(nt, *bc * *c);
            }
            if target[k] == target[k + 1] && self.class(target[k]) == VertexClass::Real {
                let f = MPoly::monomial(t.dots.clone(), *c);
                let bare = Term { dots: vec![0; t.n()], perm: t.perm.clone(), source: t.source.clone() };
                let bare = Element::from_term(e.weight.clone(), bare, Rat::ONE);
                r.add_scaled(&self.left_mul_poly(&f.divided_difference(k), &bare), Rat::ONE);
            }
        }
        r
    }

    /// `τ_k · τ_ŵ · 1_source`, cached.
    fn tau_on_basis(&self, k: usize, w: &[u8], source: &[usize]) -> Arc<Element> {
        let key = (k as u8, w.to_vec(), source.to_vec());
        if let Some(e) = self.tau_cache.lock().unwrap().get(&key) {
            return e.clone();
        }
        let weight = self.weight_of(source);
        let sw = left_mul(k, w);
        let result = if length(&sw) > length(w) {
            let mut word = vec![k as u8];
            word.extend(canonical_word(w));
            let mut r = self.rewrite(&word, &canonical_word(&sw), source);
            r.add_term(Term { dots: vec![0; source.len()], perm: sw, source: source.to_vec() }, Rat::ONE);
            r
        } else {
            let mut goal = vec![k as u8];
            goal.extend(canonical_word(&sw));
            let corr = self.rewrite(&canonical_word(w), &goal, source);
            let mut r = self.left_mul_tau(k, &corr);
            let mid = act_on_seq(&sw, source);
            if let Some(p) = self.tau_square(k, &mid) {
                let t = Term { dots: vec![0; source.len()], perm: sw, source: source.to_vec() };
                r.add_scaled(&self.left_mul_poly(&p, &Element::from_term(weight, t, Rat::ONE)), Rat::ONE);
            }
            r
        };
        let result = Arc::new(result);
        self.tau_cache.lock().unwrap().insert(key, result.clone());
        result
    }

    /// Corrections `C` with `τ_word 1_source = τ_goal 1_source + C`.
    fn rewrite(&self, word: &[u8], goal: &[u8], source: &[usize]) -> Element {
        let n = source.len();
        let mut corr = Element::zero(self.weight_of(source));
        let mut cur = word.to_vec();
        for mv in braid_path(word, goal).iter() {
            if let Move::Braid(p) = *mv {
                let (a, b) = (cur[p] as usize, cur[p + 1] as usize);
                let m = a.min(b);
                let suffix = &cur[p + 3..];
                let below = act_on_seq(&from_word(n, suffix), source);
                if let Some(c) = self.braid_correction(m, &below) {
                    let mut e = self.tau_word(suffix, source);
                    e = self.left_mul_poly(&c, &e);
                    for &l in cur[..p].iter().rev() {
                        e = self.left_mul_tau(l as usize, &e);
                    }
                    let sign = if a == m { Rat::ONE } else { -Rat::ONE };
                    corr.add_scaled(&e, sign);
                }
            }
            braid::apply(&mut cur, *mv);
        }
        corr
    }

    /// `τ_{a1} .. τ_{am} 1_source` in normal form for any word (reduced or not).
    pub fn tau_word(&self, word: &[u8], source: &[usize]) -> Element {
        let mut e = self.idempotent(source);
        for &l in word.iter().rev() {
            e = self.left_mul_tau(l as usize, &e);
        }
        e
    }

    /// The product `a · b`.
    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        if a.weight != b.weight {
            panic!("product of elements of different weights");
        }
        let mut groups: BTreeMap<(Perm, Seq), Vec<(Vec<u32>, Rat)>> = BTreeMap::new();
        for (t, c) in a.terms() {
            groups.entry((t.perm.clone(), t.source.clone())).or_default().push((t.dots.clone(), *c));
        }
        let mut r = Element::zero(a.weight.clone());
        for ((w, src), dots) in groups {
            let mut y = b.with_target(&src);
            if y.is_zero() {
                continue;
            }
            for &l in canonical_word(&w).iter().rev() {
                y = self.left_mul_tau(l as usize, &y);
            }
            let mut poly = MPoly::zero(src.len());
            for (d, c) in dots {
                poly.add_term(d, c);
            }
            r.add_scaled(&self.left_mul_poly(&poly, &y), Rat::ONE);
        }
        r
    }

    pub fn mul_all(&self, factors: &[&Element]) -> Element {
        let mut it = factors.iter();
        let first = (*it.next().expect("at least one factor")).clone();
        it.fold(first, |acc, f| self.mul(&acc, f))
    }

    /// The anti-involution flipping diagrams upside down.
    pub fn psi(&self, e: &Element) -> Element {
        let mut r = Element::zero(e.weight.clone());
        for (t, c) in e.terms() {
            let target = t.target();
            let start = Term { dots: t.dots.clone(), perm: perm::identity(t.n()), source: target };
            let mut y = Element::from_term(e.weight.clone(), start, *c);
            for &l in canonical_word(&t.perm).iter() {
                y = self.left_mul_tau(l as usize, &y);
            }
            r.add_scaled(&y, Rat::ONE);
        }
        r
    }

    /// Horizontal juxtaposition `a ⊗ b` (strands of `b` to the right).
    pub fn tensor(&self, a: &Element, b: &Element) -> Element {
        let weight = a.weight.add(&b.weight);
        let na = a.n();
        let mut r = Element::zero(weight);
        for (ta, ca) in a.terms() {
            for (tb, cb) in b.terms() {
                let mut dots = ta.dots.clone();
                dots.extend(&tb.dots);
                let mut perm = ta.perm.clone();
                perm.extend(tb.perm.iter().map(|&x| x + na as u8));
                let mut source = ta.source.clone();
                source.extend(&tb.source);
                r.add_term(Term { dots, perm, source }, *ca * *cb);
            }
        }
        r
    }

    /// Basis words `1_target · x^r τ_w · 1_source` of degree exactly `d`.
    pub fn graded_component(&self, target: &[usize], source: &[usize], d: i64) -> Vec<Term> {
        let n = source.len();
        let mut out = Vec::new();
        for w in perm::all_perms(n) {
            if act_on_seq(&w, source) != target {
                continue;
            }
            let e = d - self.perm_degree(&w, source);
            if e < 0 || e % 2 != 0 {
                continue;
            }
            for dots in exponent_vectors(n, (e / 2) as u32) {
                out.push(Term { dots, perm: w.clone(), source: source.to_vec() });
            }
        }
        out.sort();
        out
    }

    /// Lowest degree of any basis word from `source` to `target`.
    pub fn min_degree(&self, target: &[usize], source: &[usize]) -> Option<i64> {
        perm::all_perms(source.len())
            .into_iter()
            .filter(|w| act_on_seq(w, source) == target)
            .map(|w| self.perm_degree(&w, source))
            .min()
    }

    /// Rewrites a word in the generators into normal form.
    pub fn normal_form(&self, word: &Word) -> Result<Element> {
        let mut cur: Option<Seq> = None;
        let mut e: Option<Element> = None;
        for (pos, g) in word.gens.iter().enumerate() {
            match g {
                Gen::Idem(s) => match &cur {
                    None => {
                        cur = Some(s.clone());
                        e = Some(self.idempotent(s));
                    }
                    Some(c) if c == s => {}
                    Some(c) => {
                        return Err(Error::Incomposable {
                            position: pos,
                            detail: format!("idempotent {} does not match sequence {}", self.fmt_seq(s), self.fmt_seq(c)),
                        })
                    }
                },
                Gen::X(k) | Gen::T(k) => {
                    let Some(c) = &cur else {
                        return Err(Error::Incomposable { position: pos, detail: "word must start with an idempotent e(..)".into() });
                    };
                    let limit = if matches!(g, Gen::X(_)) { c.len() } else { c.len().saturating_sub(1) };
                    if *k >= limit {
                        return Err(Error::Incomposable {
                            position: pos,
                            detail: format!("index {} out of range for {} strands", k + 1, c.len()),
                        });
                    }
                    let cur_e = e.take().unwrap();
                    if let Gen::X(k) = g {
                        e = Some(self.left_mul_x(*k, &cur_e));
                    } else {
                        let mut nc = c.clone();
                        nc.swap(*k, k + 1);
                        cur = Some(nc);
                        e = Some(self.left_mul_tau(*k, &cur_e));
                    }
                }
            }
        }
        e.ok_or_else(|| Error::Incomposable { position: 0, detail: "empty word".into() })
    }

    pub fn fmt_seq(&self, s: &[usize]) -> String {
        let names: Vec<&str> = s.iter().map(|&i| self.quiver.name(i)).collect();
        format!("({})", names.join(","))
    }

    pub fn fmt_term(&self, t: &Term) -> String {
        let mut parts = Vec::new();
        for (k, &r) in t.dots.iter().enumerate() {
            match r {
                0 => {}
                1 => parts.push(format!("x{}", k + 1)),
                r => parts.push(format!("x{}^{}", k + 1, r)),
            }
        }
        for l in canonical_word(&t.perm) {
            parts.push(format!("t{}", l + 1));
        }
        parts.push(format!("e{}", self.fmt_seq(&t.source)));
        parts.join("*")
    }

    pub fn fmt_element(&self, e: &Element) -> String {
        if e.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (idx, (t, c)) in e.terms().enumerate() {
            let neg = c.numer() < 0;
            let abs = if neg { -*c } else { *c };
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if abs != Rat::ONE {
                s.push_str(&format!("{}*", abs));
            }
            s.push_str(&self.fmt_term(t));
        }
        s
    }

    /// Divided-power idempotent `x_1^{m-1} x_2^{m-2} .. x_{m-1} τ_{w0}` on `i^m`.
    pub fn divided_power_idempotent(&self, i: usize, m: usize) -> Result<Element> {
        if self.class(i) != VertexClass::Real {
            return Err(Error::Domain(format!("divided powers need a loopless vertex, {} has loops", self.quiver.name(i))));
        }
        if m == 0 {
            return Err(Error::Domain("divided power of order 0".into()));
        }
        let dots = (0..m).map(|k| (m - 1 - k) as u32).collect();
        let perm = (0..m as u8).rev().collect();
        let t = Term { dots, perm, source: vec![i; m] };
        Ok(Element::from_term(self.weight_of(&vec![i; m]), t, Rat::ONE))
    }

    /// `e_{i,n} = (1/n!) Σ_w τ_w` on `i^n` for a Jordan-type vertex.
    pub fn symmetrizer(&self, i: usize, n: usize) -> Result<Element> {
        if self.class(i) != VertexClass::Isotropic {
            return Err(Error::Domain(format!("symmetrizers need a vertex with one loop, {} is not", self.quiver.name(i))));
        }
        let perms = perm::all_perms(n);
        let c = Rat::new(1, perms.len() as i128);
        let mut e = Element::zero(self.weight_of(&vec![i; n]));
        for w in perms {
            e.add_term(Term { dots: vec![0; n], perm: w, source: vec![i; n] }, c);
        }
        Ok(e)
    }

    pub fn is_idempotent(&self, e: &Element) -> bool {
        self.mul(e, e) == *e
    }
}

/// All exponent vectors of length `n` summing to `total`.
pub fn exponent_vectors(n: usize, total: u32) -> Vec<Vec<u32>> {
    fn go(n: usize, total: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n - 1 {
            cur.push(total);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for r in 0..=total {
            cur.push(r);
            go(n, total - r, cur, out);
            cur.pop();
        }
    }
    if n == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    go(n, total, &mut Vec::new(), &mut out);
    out
}

/// Number of exponent vectors of length `n` with entries summing to at most `b`.
pub fn count_exponent_vectors(n: usize, b: u32) -> u64 {
    (0..=b).map(|t| exponent_vectors(n, t).len() as u64).sum()
}
