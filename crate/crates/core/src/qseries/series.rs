use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::LaurentPolynomial;
use super::rational::RationalFunction;

/// A Laurent series in `q` known exactly through `q^bound`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: BTreeMap<i64, BigRational>,
    bound: i64,
}

impl TruncatedSeries {
    pub fn zero(bound: i64) -> Self {
        TruncatedSeries { coeffs: BTreeMap::new(), bound }
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    /// Lowest exponent that can carry a coefficient.
    pub fn low(&self) -> i64 {
        self.coeffs.keys().next().copied().unwrap_or(self.bound + 1)
    }

    pub fn coeff(&self, e: i64) -> BigRational {
        assert!(e <= self.bound, "coefficient of q^{} beyond truncation bound {}", e, self.bound);
        self.coeffs.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn add_term(&mut self, e: i64, c: BigRational) {
        if e > self.bound || c.is_zero() {
            return;
        }
        let x = self.coeffs.entry(e).or_insert_with(BigRational::zero);
        *x += c;
        if x.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn from_poly(p: &LaurentPolynomial, bound: i64) -> Self {
        let mut s = Self::zero(bound);
        for (e, c) in p.terms() {
            s.add_term(e, BigRational::from_integer(c.clone()));
        }
        s
    }

    /// Expands `r` around `q = 0` through `q^bound`.
    pub fn from_rational(r: &RationalFunction, bound: i64) -> Self {
        let den = r.denom();
        let num = r.numer();
        let mut out = Self::zero(bound);
        let Some(t) = num.min_exp() else { return out };
        let d0 = BigRational::from_integer(den.coeff(0));
        assert!(!d0.is_zero(), "denominator without constant term");
        let need = bound - t;
        if need < 0 {
            return out;
        }
        let mut inv: Vec<BigRational> = Vec::with_capacity(need as usize + 1);
        for k in 0..=need {
            let mut s = if k == 0 { BigRational::one() } else { BigRational::zero() };
            for j in 1..=k {
                let dj = den.coeff(j);
                if !dj.is_zero() {
                    s -= BigRational::from_integer(dj) * &inv[(k - j) as usize];
                }
            }
            inv.push(s / &d0);
        }
        for (e, c) in num.terms() {
            for (k, x) in inv.iter().enumerate() {
                let ex = e + k as i64;
                if ex > bound {
                    break;
                }
                out.add_term(ex, BigRational::from_integer(c.clone()) * x);
            }
        }
        out
    }

    pub fn truncate(&self, bound: i64) -> Self {
        let b = bound.min(self.bound);
        TruncatedSeries { coeffs: self.coeffs.range(..=b).map(|(e, c)| (*e, c.clone())).collect(), bound: b }
    }

    pub fn add(&self, o: &Self) -> Self {
        let bound = self.bound.min(o.bound);
        let mut r = self.truncate(bound);
        for (e, c) in o.coeffs.range(..=bound) {
            r.add_term(*e, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut r = Self::zero(self.bound);
        for (e, x) in &self.coeffs {
            r.add_term(*e, x * c);
        }
        r
    }

    /// Multiplies by `q^k`; the bound moves with it.
    pub fn shift(&self, k: i64) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(), bound: self.bound + k }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let bound = (self.bound + o.low()).min(o.bound + self.low());
        let mut r = Self::zero(bound);
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &o.coeffs {
                if e1 + e2 <= bound {
                    r.add_term(e1 + e2, c1 * c2);
                }
            }
        }
        r
    }

    /// True when both series agree on every exponent up to `d` (both must be valid there).
    pub fn agrees_through(&self, o: &Self, d: i64) -> bool {
        assert!(d <= self.bound && d <= o.bound, "comparison beyond truncation bound");
        self.coeffs.range(..=d).collect::<Vec<_>>() == o.coeffs.range(..=d).collect::<Vec<_>>()
    }

    /// Integer coefficients as a Laurent polynomial (panics on non-integers).
    pub fn to_poly(&self) -> LaurentPolynomial {
        let mut p = LaurentPolynomial::zero();
        for (e, c) in &self.coeffs {
            assert!(c.is_integer(), "non-integer coefficient");
            p.add_term(*e, c.to_integer());
        }
        p
    }

    pub fn coeff_int(&self, e: i64) -> BigInt {
        self.coeff(e).to_integer()
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (e, c) in &self.coeffs {
            let var = match *e {
                0 => String::new(),
                1 => "q".into(),
                e => format!("q^{}", e),
            };
            parts.push(match (c.is_one(), var.is_empty()) {
                (_, true) => c.to_string(),
                (true, false) => var,
                (false, false) => format!("{}{}", c, var),
            });
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{} + O(q^{})", parts.join(" + "), self.bound + 1)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series() {
        let r = RationalFunction::new(LaurentPolynomial::one(), LaurentPolynomial::from_coeffs([(0, 1), (2, -1)]));
        let s = TruncatedSeries::from_rational(&r, 10);
        for e in 0..=10 {
            let expect = if e % 2 == 0 { 1 } else { 0 };
            assert_eq!(s.coeff_int(e), BigInt::from(expect));
        }
        assert_eq!(s.truncate(6).truncate(6), s.truncate(6));
    }

    #[test]
    fn product_bound_is_conservative() {
        let a = TruncatedSeries::from_poly(&LaurentPolynomial::from_coeffs([(-2, 1), (0, 1)]), 5);
        let b = TruncatedSeries::from_poly(&LaurentPolynomial::from_coeffs([(0, 1)]), 8);
        let p = a.mul(&b);
        assert_eq!(p.bound(), 5);
        assert_eq!(p.coeff_int(-2), BigInt::from(1));
    }
}
