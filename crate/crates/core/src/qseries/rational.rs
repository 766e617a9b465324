use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPolynomial;

/// A reduced quotient of Laurent polynomials.
///
/// Normal form: the denominator is an honest polynomial with nonzero,
/// positive constant term; numerator and denominator share no polynomial
/// factor and no integer content.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPolynomial,
    den: LaurentPolynomial,
}

/// Dense coefficient vector (lowest exponent first) of a polynomial with `min_exp = 0`.
fn dense(p: &LaurentPolynomial) -> Vec<BigRational> {
    let hi = p.max_exp().unwrap_or(0);
    (0..=hi).map(|e| BigRational::from_integer(p.coeff(e))).collect()
}

fn trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].clone();
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let c = r.last().unwrap() / &lead;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &c * bc;
        }
        trim(&mut r);
    }
    r
}

/// Primitive integer polynomial proportional to `v` (positive leading coefficient).
fn primitive(v: &[BigRational]) -> LaurentPolynomial {
    let l = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = v.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.last().is_some_and(|c| c.is_negative()) { -BigInt::one() } else { BigInt::one() };
    let mut p = LaurentPolynomial::zero();
    for (e, c) in ints.into_iter().enumerate() {
        p.add_term(e as i64, c / &g * &sign);
    }
    p
}

fn poly_gcd(a: &LaurentPolynomial, b: &LaurentPolynomial) -> LaurentPolynomial {
    let mut x = dense(a);
    let mut y = dense(b);
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    primitive(&x)
}

fn content(p: &LaurentPolynomial) -> BigInt {
    p.terms().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c))
}

impl RationalFunction {
    pub fn new(num: LaurentPolynomial, den: LaurentPolynomial) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let s = den.min_exp().unwrap();
        let den = den.shift(-s);
        let num = num.shift(-s);
        let t = num.min_exp().unwrap();
        let n0 = num.shift(-t);
        let g = poly_gcd(&n0, &den);
        let n1 = n0.div_exact(&g).expect("gcd divides numerator");
        let d1 = den.div_exact(&g).expect("gcd divides denominator");
        let c = content(&n1).gcd(&content(&d1));
        let sign = if d1.coeff(0).is_negative() { -c.clone() } else { c };
        let n2 = n1.shift(t);
        RationalFunction { num: divide_all(&n2, &sign), den: divide_all(&d1, &sign) }
    }

    pub fn zero() -> Self {
        RationalFunction { num: LaurentPolynomial::zero(), den: LaurentPolynomial::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPolynomial::one())
    }

    pub fn from_poly(p: LaurentPolynomial) -> Self {
        RationalFunction { num: p, den: LaurentPolynomial::one() }
    }

    pub fn q_pow(e: i64) -> Self {
        Self::from_poly(LaurentPolynomial::q_pow(e))
    }

    pub fn numer(&self) -> &LaurentPolynomial {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The Laurent polynomial this equals, if the denominator is a unit.
    pub fn as_poly(&self) -> Option<LaurentPolynomial> {
        self.num.div_exact(&self.den)
    }

    pub fn recip(&self) -> Self {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn bar(&self) -> Self {
        Self::new(self.num.bar(), self.den.bar())
    }

    pub fn shift(&self, k: i64) -> Self {
        Self::new(self.num.shift(k), self.den.clone())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

fn divide_all(p: &LaurentPolynomial, c: &BigInt) -> LaurentPolynomial {
    let mut r = LaurentPolynomial::zero();
    for (e, x) in p.terms() {
        r.add_term(e, x / c);
    }
    r
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&(&self.num * &o.den) - &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, o: &RationalFunction) -> RationalFunction {
        assert!(!o.is_zero(), "division by zero");
        RationalFunction::new(&self.num * &o.den, &self.den * &o.num)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: RationalFunction) -> RationalFunction {
        &self + &o
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: RationalFunction) -> RationalFunction {
        &self - &o
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: RationalFunction) -> RationalFunction {
        &self * &o
    }
}

impl Div for RationalFunction {
    type Output = RationalFunction;
    fn div(self, o: RationalFunction) -> RationalFunction {
        &self / &o
    }
}

impl From<LaurentPolynomial> for RationalFunction {
    fn from(p: LaurentPolynomial) -> Self {
        RationalFunction::new(p, LaurentPolynomial::one())
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == LaurentPolynomial::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(c: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_coeffs(c.iter().copied())
    }

    #[test]
    fn reduces_common_factors() {
        // (1 - q^4)/(1 - q^2) = 1 + q^2
        let r = RationalFunction::new(lp(&[(0, 1), (4, -1)]), lp(&[(0, 1), (2, -1)]));
        assert_eq!(r.as_poly(), Some(lp(&[(0, 1), (2, 1)])));
        assert_eq!(r.denom(), &LaurentPolynomial::one());
    }

    #[test]
    fn canonical_sign_and_content() {
        let a = RationalFunction::new(lp(&[(0, 2)]), lp(&[(0, -2), (2, 2)]));
        let b = RationalFunction::new(lp(&[(0, -1)]), lp(&[(0, 1), (2, -1)]));
        assert_eq!(a, b);
        assert!(b.denom().coeff(0) > BigInt::zero());
        let c = RationalFunction::new(lp(&[(3, 1)]), lp(&[(2, 1), (4, -1)]));
        assert_eq!(c, RationalFunction::new(lp(&[(1, 1)]), lp(&[(0, 1), (2, -1)])));
    }

    #[test]
    fn field_operations() {
        let x = RationalFunction::new(lp(&[(0, 1)]), lp(&[(0, 1), (2, -1)]));
        let y = &x * &x.recip();
        assert_eq!(y, RationalFunction::one());
        assert!((&x - &x).is_zero());
        let s = &x + &x;
        assert_eq!(s, RationalFunction::new(lp(&[(0, 2)]), lp(&[(0, 1), (2, -1)])));
    }
}
