//! The polynomial representation of `R(ν)` and degree-truncated dimensions.
//!
//! `R(ν)` acts on `⊕_i Q[x_1, .., x_n] 1_i`: dots multiply, `1_i` projects, and
//! `τ_k` acts by the divided difference on loopless equal strands, by
//! `(x_k - x_{k+1})^{h-1} s_k` on equal strands with `h` loops and by
//! `(x_k - x_{k+1})^{h_ij} s_k` on strands coloured `(i, j)`, `i != j`.
//! The representation is faithful, so it serves as an independent check
//! on the rewriting engine.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::klr::{exponent_vectors, Element, Gen, KlrAlgebra, Seq, Term, Weight, Word};
use crate::linalg::{EchelonBasis, SparseVec};
use crate::perm::canonical_word;
use crate::poly::{linear_power, MPoly};
use crate::qseries::TruncatedSeries;
use crate::quiver::VertexClass;
use crate::rat::Rat;

/// A vector of `⊕_i Q[x] 1_i`, one polynomial per sequence.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PolyVector {
    comps: BTreeMap<Seq, MPoly>,
}

impl PolyVector {
    pub fn zero() -> PolyVector {
        PolyVector::default()
    }

    pub fn single(seq: Seq, f: MPoly) -> PolyVector {
        let mut v = PolyVector::zero();
        v.add_component(seq, &f);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn component(&self, seq: &[usize]) -> Option<&MPoly> {
        self.comps.get(seq)
    }

    pub fn components(&self) -> impl Iterator<Item = (&Seq, &MPoly)> {
        self.comps.iter()
    }

    pub fn add_component(&mut self, seq: Seq, f: &MPoly) {
        let e = self.comps.entry(seq.clone()).or_insert_with(|| MPoly::zero(f.nvars()));
        e.add_assign(f);
        if e.is_zero() {
            self.comps.remove(&seq);
        }
    }

    pub fn add(&self, o: &PolyVector) -> PolyVector {
        let mut r = self.clone();
        for (s, f) in &o.comps {
            r.add_component(s.clone(), f);
        }
        r
    }

    /// Random vector with a component on every sequence of `weight`.
    pub fn random<R: Rng>(rng: &mut R, weight: &Weight, max_deg: u32, nterms: usize) -> PolyVector {
        let n = weight.height();
        let mut v = PolyVector::zero();
        for s in weight.sequences() {
            v.add_component(s, &MPoly::random(rng, n, max_deg, nterms));
        }
        v
    }
}

/// `τ_k` on the component `f · 1_seq`; returns the new sequence and polynomial.
fn tau_on(alg: &KlrAlgebra, k: usize, seq: &[usize], f: &MPoly) -> (Seq, MPoly) {
    let n = seq.len();
    let (i, j) = (seq[k], seq[k + 1]);
    let mut out = seq.to_vec();
    out.swap(k, k + 1);
    let g = if i == j {
        if alg.class(i) == VertexClass::Real {
            f.divided_difference(k)
        } else {
            linear_power(n, k, k + 1, alg.quiver().h(i) - 1).mul(&f.swap(k))
        }
    } else {
        linear_power(n, k, k + 1, alg.quiver().h_arrows(i, j)).mul(&f.swap(k))
    };
    (out, g)
}

/// Action of a single generator.
pub fn act(alg: &KlrAlgebra, g: &Gen, v: &PolyVector) -> PolyVector {
    let mut r = PolyVector::zero();
    for (s, f) in &v.comps {
        match g {
            Gen::Idem(t) => {
                if t == s {
                    r.add_component(s.clone(), f);
                }
            }
            Gen::X(k) => r.add_component(s.clone(), &f.mul(&MPoly::var(s.len(), *k))),
            Gen::T(k) => {
                let (t, g) = tau_on(alg, *k, s, f);
                r.add_component(t, &g);
            }
        }
    }
    r
}

/// Action of a raw word in diagram order.
pub fn word_act(alg: &KlrAlgebra, w: &Word, v: &PolyVector) -> PolyVector {
    w.gens.iter().fold(v.clone(), |acc, g| act(alg, g, &acc))
}

/// Action of an element in normal form.
pub fn element_act(alg: &KlrAlgebra, e: &Element, v: &PolyVector) -> PolyVector {
    let mut r = PolyVector::zero();
    for (t, c) in e.terms() {
        let Some(f) = v.component(&t.source) else { continue };
        let mut seq = t.source.clone();
        let mut g = f.clone();
        for &l in canonical_word(&t.perm).iter().rev() {
            let (s2, g2) = tau_on(alg, l as usize, &seq, &g);
            seq = s2;
            g = g2;
            if g.is_zero() {
                break;
            }
        }
        if !g.is_zero() {
            r.add_component(seq, &g.mul_monomial(&t.dots).scale(*c));
        }
    }
    r
}

/// Box of monomial probes used when the box is at most this large.
const PROBE_BOX_LIMIT: u64 = 1024;
const PROBE_SLACK: u32 = 4;
const PROBE_SAMPLES: usize = 64;

/// Monomial exponents to probe an element with on each source sequence.
///
/// All exponents up to `E` per variable when that box is small; otherwise the
/// staircase `x_1^N x_2^{2N} .. x_n^{nN}` (and its reversal) with `N = E + 1`,
/// every monomial of degree at most 2, and a fixed pseudo-random sample of the box.
pub fn probe_exponents(alg: &KlrAlgebra, n: usize, crossings: usize, max_dot: u32) -> Vec<Vec<u32>> {
    let nv = alg.num_vertices();
    let mut rel = 1;
    for i in 0..nv {
        for j in 0..nv {
            rel = rel.max((-alg.a(i, j)).max(0) as u32);
        }
    }
    let e = 2 * crossings as u32 * rel + max_dot + PROBE_SLACK;
    if n == 0 {
        return vec![vec![]];
    }
    let box_size = (e as u64 + 1).checked_pow(n as u32).unwrap_or(u64::MAX);
    if box_size <= PROBE_BOX_LIMIT {
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out.into_iter().flat_map(|p: Vec<u32>| (0..=e).map(move |x| [p.clone(), vec![x]].concat())).collect();
        }
        return out;
    }
    let big = e + 1;
    let mut out: Vec<Vec<u32>> = vec![
        (0..n).map(|k| big * (k as u32 + 1)).collect(),
        (0..n).map(|k| big * (n - k) as u32).collect(),
    ];
    for t in 0..=2 {
        out.extend(exponent_vectors(n, t));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..PROBE_SAMPLES {
        out.push((0..n).map(|_| rng.gen_range(0..=e)).collect());
    }
    out.shuffle(&mut rng);
    out.sort();
    out.dedup();
    out
}

/// Whether two elements act identically on the probe family.
pub fn oracle_equal(alg: &KlrAlgebra, a: &Element, b: &Element) -> bool {
    let n = a.n();
    let crossings = a.max_crossings().max(b.max_crossings());
    let max_dot = a.max_dot().max(b.max_dot());
    let mut sources = a.sources();
    sources.extend(b.sources());
    sources.sort();
    sources.dedup();
    let probes = probe_exponents(alg, n, crossings, max_dot);
    sources.iter().all(|s| {
        probes.iter().all(|p| {
            let v = PolyVector::single(s.clone(), MPoly::monomial(p.clone(), Rat::ONE));
            element_act(alg, a, &v) == element_act(alg, b, &v)
        })
    })
}

/// Equality in `R(ν)`: normal forms compared coefficientwise, confirmed by the oracle.
///
/// Disagreement between the two is reported as an error.
pub fn elements_equal(alg: &KlrAlgebra, a: &Element, b: &Element) -> Result<bool> {
    if a.weight() != b.weight() {
        return Err(Error::WeightMismatch(format!("{:?} vs {:?}", a.weight().0, b.weight().0)));
    }
    let primary = a == b;
    let oracle = oracle_equal(alg, a, b);
    if primary != oracle {
        return Err(Error::Relation(format!(
            "normal forms say {}, polynomial action says {} for {} vs {}",
            primary,
            oracle,
            alg.fmt_element(a),
            alg.fmt_element(b)
        )));
    }
    Ok(primary)
}

#[derive(Clone, Debug)]
pub struct GradedComponent {
    pub basis: Vec<Term>,
    pub dim: usize,
}

/// Basis words of `1_target R(ν) 1_source` in degree `d`.
pub fn graded_component(alg: &KlrAlgebra, weight: &Weight, target: &[usize], source: &[usize], d: i64) -> Result<GradedComponent> {
    for s in [target, source] {
        if alg.weight_of(s) != *weight {
            return Err(Error::WeightMismatch(format!("sequence {} is not of weight {:?}", alg.fmt_seq(s), weight.0)));
        }
    }
    let basis = alg.graded_component(target, source, d);
    let dim = basis.len();
    Ok(GradedComponent { basis, dim })
}

pub(crate) fn to_sparse(e: &Element) -> SparseVec<Term> {
    e.terms().map(|(t, c)| (t.clone(), c.to_big())).collect()
}

/// Sequences `s` with `1_s e != 0` resp. `e 1_s != 0`.
fn sides(e: &Element) -> (Vec<Seq>, Vec<Seq>) {
    (e.targets(), e.sources())
}

fn check_idempotent(alg: &KlrAlgebra, e: &Element) -> Result<()> {
    if alg.degree(e).is_some_and(|d| d != 0) || alg.homogeneous_parts(e).keys().any(|&d| d != 0) {
        return Err(Error::Domain(format!("{} is not of degree 0", alg.fmt_element(e))));
    }
    if !elements_equal(alg, &alg.mul(e, e), e)? {
        return Err(Error::Domain(format!("{} is not idempotent", alg.fmt_element(e))));
    }
    Ok(())
}

/// `dim (e_L R(ν) e_R)_d` for each `d <= bound`.
pub fn truncated_dim(alg: &KlrAlgebra, e_left: &Element, e_right: &Element, weight: &Weight, bound: i64) -> Result<TruncatedSeries> {
    for e in [e_left, e_right] {
        if e.weight() != weight {
            return Err(Error::WeightMismatch(format!("idempotent has weight {:?}, expected {:?}", e.weight().0, weight.0)));
        }
        check_idempotent(alg, e)?;
    }
    Ok(span_dims(alg, e_left, e_right, bound))
}

/// Graded dimension of `a R(ν) b` for homogeneous degree-0 `a`, `b` (no checks).
pub(crate) fn span_dims(alg: &KlrAlgebra, a: &Element, b: &Element, bound: i64) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(bound);
    let (_, a_sources) = sides(a);
    let (b_targets, _) = sides(b);
    let lo = a_sources
        .iter()
        .flat_map(|t| b_targets.iter().filter_map(move |s| alg.min_degree(t, s)))
        .min();
    let Some(lo) = lo else { return out };
    for d in lo..=bound {
        let r = component_rank(alg, a, b, &a_sources, &b_targets, d);
        if r > 0 {
            out.add_term(d, crate::linalg::q_int(r as i64));
        }
    }
    out
}

/// Rank of `a · R_d · b`, spanned by `a x^r (τ_w 1_s b)`.
fn component_rank(alg: &KlrAlgebra, a: &Element, b: &Element, a_sources: &[Seq], b_targets: &[Seq], d: i64) -> usize {
    let n = a.n();
    let mut basis: EchelonBasis<Term> = EchelonBasis::new();
    for s in b_targets {
        // crossing parts `τ_w 1_s b`, reduced to an independent set per degree
        let mut by_deg: BTreeMap<i64, EchelonBasis<Term>> = BTreeMap::new();
        for w in crate::perm::all_perms(n) {
            let t = crate::perm::act_on_seq(&w, s);
            if !a_sources.contains(&t) {
                continue;
            }
            let deg = alg.perm_degree(&w, s);
            if deg > d || (d - deg) % 2 != 0 {
                continue;
            }
            let y = alg.mul(&Element::from_term(a.weight().clone(), Term { dots: vec![0; n], perm: w, source: s.clone() }, Rat::ONE), b);
            by_deg.entry(deg).or_default().insert(to_sparse(&y));
        }
        for (deg, ys) in by_deg {
            let dots = ((d - deg) / 2) as u32;
            for r in exponent_vectors(n, dots) {
                let m = MPoly::monomial(r, Rat::ONE);
                for row in ys.rows() {
                    let y = from_sparse(a.weight(), row);
                    let v = alg.mul(a, &alg.left_mul_poly(&m, &y));
                    basis.insert(to_sparse(&v));
                }
            }
        }
    }
    basis.rank()
}

pub(crate) fn from_sparse(weight: &Weight, v: &SparseVec<Term>) -> Element {
    let mut e = Element::zero(weight.clone());
    for (t, c) in v {
        e.add_term(t.clone(), Rat::from_big(c));
    }
    e
}
