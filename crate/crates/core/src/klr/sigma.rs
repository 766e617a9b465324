//! The alternative presentation by generators `σ_k`.
//!
//! `σ_k 1_i = τ_k 1_i - (x_k - x_{k+1})^{h-1}` when `i_k = i_{k+1}` has `h >= 1` loops,
//! `σ_k 1_i = -τ_k 1_i` when `i_k = i_{k+1}` is loopless, and `σ_k = τ_k` otherwise.
//! The sign on loopless strands matches our dot-slide orientation: with it the
//! relations below hold verbatim, with `P_i(u, v) = (u - v)^{h_i}`.

use crate::poly::{linear_power, MPoly};
use crate::quiver::q_poly;
use crate::rat::Rat;

use super::{exponent_vectors, Element, KlrAlgebra, Seq, Term, Weight};

/// `σ_k 1_seq`.
pub fn sigma_element(alg: &KlrAlgebra, k: usize, seq: &[usize]) -> Element {
    let tau = alg.tau(k, seq);
    let i = seq[k];
    if seq[k + 1] != i {
        return tau;
    }
    let h = alg.quiver().h(i);
    if h == 0 {
        return tau.scale(-Rat::ONE);
    }
    let d = linear_power(seq.len(), k, k + 1, h - 1);
    tau.sub(&alg.left_mul_poly(&d, &alg.idempotent(seq)))
}

/// `P_i(u, v)` placed on strands `a`, `b`.
fn p2(alg: &KlrAlgebra, i: usize, n: usize, a: usize, b: usize) -> MPoly {
    linear_power(n, a, b, alg.quiver().h(i))
}

/// The two three-strand polynomials in the braid relation for `i_k = i_{k+1} = i_{k+2}`.
fn p3(alg: &KlrAlgebra, i: usize, n: usize, k: usize) -> (MPoly, MPoly) {
    let (u, v, w) = (k, k + 1, k + 2);
    let p = |a, b| p2(alg, i, n, a, b);
    let l = |a, b| linear_power(n, a, b, 1);
    // over the common denominator (u-v)(u-w)(v-w)
    let num_p = p(v, u).mul(&p(u, w)).mul(&l(v, w)).scale(-Rat::ONE)
        .sub(&p(u, w).mul(&p(v, w)).mul(&l(u, v)))
        .add(&p(u, v).mul(&p(v, w)).mul(&l(u, w)));
    let num_q = p(u, v).mul(&p(u, w)).mul(&l(v, w))
        .add(&p(u, w).mul(&p(w, v)).mul(&l(u, v)))
        .sub(&p(u, v).mul(&p(v, w)).mul(&l(u, w)));
    let div = |f: MPoly| {
        f.div_linear(u, v)
            .and_then(|g| g.div_linear(u, w))
            .and_then(|g| g.div_linear(v, w))
            .expect("three-strand polynomial is polynomial")
    };
    (div(num_p), div(num_q))
}

#[derive(Clone, Debug, Default)]
pub struct SigmaReport {
    /// `(relation, source sequence, holds)`.
    pub checks: Vec<(String, Seq, bool)>,
}

impl SigmaReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.2)
    }

    pub fn failures(&self) -> impl Iterator<Item = &(String, Seq, bool)> {
        self.checks.iter().filter(|c| !c.2)
    }
}

/// Verifies every defining relation of the σ-presentation on each sequence of `weight`.
///
/// Each relation is also checked after right multiplication by all dot monomials
/// of degree at most `d`.
pub fn sigma_presentation_check(alg: &KlrAlgebra, weight: &Weight, d: i64) -> SigmaReport {
    let n = weight.height();
    let mut report = SigmaReport::default();
    let mut multipliers: Vec<Vec<u32>> = Vec::new();
    for t in 0..=(d.max(0) / 2) as u32 {
        multipliers.extend(exponent_vectors(n, t));
    }
    for seq in weight.sequences() {
        let mut check = |name: String, lhs: Element, rhs: Element| {
            let ok = multipliers.iter().all(|r| {
                let m = Element::from_term(weight.clone(), Term { dots: r.clone(), ..Term::idempotent(seq.clone()) }, Rat::ONE);
                alg.mul(&lhs, &m) == alg.mul(&rhs, &m)
            });
            report.checks.push((name, seq.clone(), ok));
        };
        let sig = |k: usize, s: &[usize]| sigma_element(alg, k, s);
        let x = |k: usize, s: &[usize]| alg.x(k, s);
        for k in 0..n.saturating_sub(1) {
            let i = seq[k];
            let sk = swapped(&seq, k);
            // σ_k^2
            let lhs = alg.mul(&sig(k, &sk), &sig(k, &seq));
            let rhs = if seq[k + 1] == i {
                let p = p2(alg, i, n, k, k + 1);
                alg.left_mul_poly(&p.divided_difference(k).scale(-Rat::ONE), &sig(k, &seq))
            } else {
                let q = q_poly(alg.quiver(), i, seq[k + 1]).unwrap().embed(n, &[k, k + 1]);
                alg.left_mul_poly(&q, &alg.idempotent(&seq))
            };
            check(format!("sigma_{}^2", k + 1), lhs, rhs);
            // dot slides
            for l in 0..n {
                let sl = if l == k { k + 1 } else if l == k + 1 { k } else { l };
                let lhs = alg.mul(&x(sl, &sk), &sig(k, &seq)).sub(&alg.mul(&sig(k, &seq), &x(l, &seq)));
                let mut rhs = Element::zero(weight.clone());
                if seq[k + 1] == i && (l == k || l == k + 1) {
                    let sign = if l == k { Rat::ONE } else { -Rat::ONE };
                    rhs = alg.left_mul_poly(&p2(alg, i, n, k, k + 1).scale(sign), &alg.idempotent(&seq));
                }
                check(format!("x_{} sigma_{}", l + 1, k + 1), lhs, rhs);
            }
            // far commutation
            for l in k + 2..n.saturating_sub(1) {
                let sl_seq = swapped(&seq, l);
                let a = alg.mul(&sig(k, &sl_seq), &sig(l, &seq));
                let b = alg.mul(&sig(l, &sk), &sig(k, &seq));
                check(format!("sigma_{} sigma_{}", k + 1, l + 1), a, b);
            }
        }
        // braids
        for k in 0..n.saturating_sub(2) {
            let word = |letters: [usize; 3]| {
                let mut cur = seq.clone();
                let mut e = alg.idempotent(&seq);
                for &l in letters.iter().rev() {
                    e = alg.mul(&sig(l, &cur), &e);
                    cur.swap(l, l + 1);
                }
                e
            };
            let lhs = word([k, k + 1, k]).sub(&word([k + 1, k, k + 1]));
            let (i, j, l) = (seq[k], seq[k + 1], seq[k + 2]);
            let rhs = if i == j && j == l {
                let (p, pp) = p3(alg, i, n, k);
                alg.left_mul_poly(&p, &sig(k, &seq)).add(&alg.left_mul_poly(&pp, &sig(k + 1, &seq)))
            } else if i == l {
                let q = q_poly(alg.quiver(), i, j).unwrap();
                let c = q.embed(n, &[k, k + 1]).sub(&q.embed(n, &[k + 2, k + 1])).div_linear(k, k + 2).unwrap();
                let c = c.mul(&p2(alg, i, n, k, k + 2)).scale(-Rat::ONE);
                alg.left_mul_poly(&c, &alg.idempotent(&seq))
            } else {
                Element::zero(weight.clone())
            };
            check(format!("braid at {}", k + 1), lhs, rhs);
        }
    }
    report
}

fn swapped(seq: &[usize], k: usize) -> Seq {
    let mut s = seq.to_vec();
    s.swap(k, k + 1);
    s
}
