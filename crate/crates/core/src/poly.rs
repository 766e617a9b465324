//! Multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use crate::rat::Rat;

/// Exponent vector; its length is the number of variables.
pub type Mono = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Mono, Rat>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> MPoly {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> MPoly {
        MPoly::constant(nvars, Rat::ONE)
    }

    pub fn constant(nvars: usize, c: Rat) -> MPoly {
        let mut p = MPoly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The variable `x_k` (0-based).
    pub fn var(nvars: usize, k: usize) -> MPoly {
        let mut e = vec![0; nvars];
        e[k] = 1;
        MPoly::monomial(e, Rat::ONE)
    }

    pub fn monomial(exps: Mono, c: Rat) -> MPoly {
        let mut p = MPoly::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &[u32]) -> Rat {
        self.terms.get(e).copied().unwrap_or(Rat::ZERO)
    }

    pub fn add_term(&mut self, e: Mono, c: Rat) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
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

    pub fn add(&self, o: &MPoly) -> MPoly {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }

    pub fn add_assign(&mut self, o: &MPoly) {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        for (e, c) in &o.terms {
            self.add_term(e.clone(), *c);
        }
    }

    pub fn sub(&self, o: &MPoly) -> MPoly {
        self.add(&o.scale(-Rat::ONE))
    }

    pub fn scale(&self, c: Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, x)| (e.clone(), *x * c)).collect() }
    }

    pub fn mul(&self, o: &MPoly) -> MPoly {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut r = MPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Mono = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, *c1 * *c2);
            }
        }
        r
    }

    pub fn mul_monomial(&self, m: &[u32]) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.iter().zip(m).map(|(a, b)| a + b).collect(), *c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MPoly {
        let mut acc = MPoly::one(self.nvars);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Total degree in the usual sense (each variable counts 1).
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn max_exponent(&self) -> u32 {
        self.terms.keys().flat_map(|e| e.iter().copied()).max().unwrap_or(0)
    }

    /// Swaps variables `k` and `k+1` (0-based).
    pub fn swap(&self, k: usize) -> MPoly {
        self.permute_vars(|v| if v == k { k + 1 } else if v == k + 1 { k } else { v }, self.nvars)
    }

    /// Renames variable `v` to `f(v)` inside a ring with `nvars` variables.
    pub fn permute_vars(&self, f: impl Fn(usize) -> usize, nvars: usize) -> MPoly {
        let mut r = MPoly::zero(nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; nvars];
            for (v, &x) in e.iter().enumerate() {
                ne[f(v)] += x;
            }
            r.add_term(ne, *c);
        }
        r
    }

    /// Substitutes the variables of a small polynomial with variables of a larger ring.
    pub fn embed(&self, nvars: usize, targets: &[usize]) -> MPoly {
        assert_eq!(targets.len(), self.nvars);
        self.permute_vars(|v| targets[v], nvars)
    }

    /// Exact division by `x_k - x_l`; `None` when the remainder is nonzero.
    pub fn div_linear(&self, k: usize, l: usize) -> Option<MPoly> {
        let mut g = self.clone();
        let mut h = MPoly::zero(self.nvars);
        loop {
            let top = g.terms.iter().filter(|(e, _)| e[k] > 0).max_by_key(|(e, _)| e[k]).map(|(e, c)| (e.clone(), *c));
            let Some((e, c)) = top else { break };
            let mut lower = e.clone();
            lower[k] -= 1;
            h.add_term(lower.clone(), c);
            g.add_term(e, -c);
            let mut shifted = lower;
            shifted[l] += 1;
            g.add_term(shifted, c);
        }
        if g.is_zero() {
            Some(h)
        } else {
            None
        }
    }

    /// Divided difference `(f - s_k f)/(x_k - x_{k+1})` by the closed monomial formula.
    pub fn divided_difference(&self, k: usize) -> MPoly {
        let mut r = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let (a, b) = (e[k], e[k + 1]);
            if a == b {
                continue;
            }
            let (lo, hi, sign) = if a > b { (b, a, *c) } else { (a, b, -*c) };
            for j in 0..(hi - lo) {
                let mut ne = e.clone();
                ne[k] = lo + j;
                ne[k + 1] = hi - 1 - j;
                r.add_term(ne, sign);
            }
        }
        r
    }

    /// Evaluates at rational points.
    pub fn eval(&self, pt: &[Rat]) -> Rat {
        let mut s = Rat::ZERO;
        for (e, c) in &self.terms {
            let mut t = *c;
            for (x, &p) in pt.iter().zip(e) {
                t *= x.pow(p);
            }
            s += t;
        }
        s
    }

    /// A random polynomial with small integer coefficients.
    pub fn random<R: Rng>(rng: &mut R, nvars: usize, max_deg: u32, nterms: usize) -> MPoly {
        let mut p = MPoly::zero(nvars);
        for _ in 0..nterms {
            let e: Mono = (0..nvars).map(|_| rng.gen_range(0..=max_deg)).collect();
            let c = rng.gen_range(-3i128..=3);
            p.add_term(e, Rat::int(c));
        }
        p
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(v, &x)| if x == 1 { format!("x{}", v + 1) } else { format!("x{}^{}", v + 1, x) })
                .collect();
            let neg = c.numer() < 0;
            let abs = if neg { -*c } else { *c };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            if mono.is_empty() {
                write!(f, "{}", abs)?;
            } else if abs == Rat::ONE {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `(x_k - x_l)^e` in a ring with `nvars` variables.
pub fn linear_power(nvars: usize, k: usize, l: usize, e: u32) -> MPoly {
    MPoly::var(nvars, k).sub(&MPoly::var(nvars, l)).pow(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn closed_form_matches_division() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let f = MPoly::random(&mut rng, 3, 5, 6);
            let num = f.sub(&f.swap(1));
            let by_division = num.div_linear(1, 2).expect("antisymmetric part divides");
            assert_eq!(by_division, f.divided_difference(1));
        }
    }

    #[test]
    fn non_divisible_detected() {
        let f = MPoly::var(2, 0);
        assert!(f.div_linear(0, 1).is_none());
    }

    #[test]
    fn display() {
        let p = linear_power(2, 0, 1, 2);
        assert_eq!(p.to_string(), "x1^2 - 2*x1*x2 + x2^2");
    }
}
