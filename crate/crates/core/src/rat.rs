//! Small exact rationals backed by `i128`.
//!
//! Every operation is checked; an overflow panics instead of wrapping.
//! Algebra coefficients stay small in practice, and rank computations
//! convert to `BigRational` before elimination.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rat {
    num: i128,
    den: i128,
}

fn overflow() -> ! {
    panic!("rational coefficient overflow")
}

impl Rat {
    pub const ZERO: Rat = Rat { num: 0, den: 1 };
    pub const ONE: Rat = Rat { num: 1, den: 1 };

    pub fn new(num: i128, den: i128) -> Rat {
        assert!(den != 0, "zero denominator");
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = n.checked_neg().unwrap_or_else(|| overflow());
            d = d.checked_neg().unwrap_or_else(|| overflow());
        }
        Rat { num: n, den: d }
    }

    pub fn int(n: i128) -> Rat {
        Rat { num: n, den: 1 }
    }

    pub fn numer(&self) -> i128 {
        self.num
    }

    pub fn denom(&self) -> i128 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn recip(&self) -> Rat {
        Rat::new(self.den, self.num)
    }

    pub fn to_big(&self) -> BigRational {
        BigRational::new(BigInt::from(self.num), BigInt::from(self.den))
    }

    /// Converts back from a big rational; panics if it does not fit.
    pub fn from_big(r: &BigRational) -> Rat {
        let n: i128 = r.numer().try_into().unwrap_or_else(|_| overflow());
        let d: i128 = r.denom().try_into().unwrap_or_else(|_| overflow());
        Rat::new(n, d)
    }

    pub fn pow(&self, e: u32) -> Rat {
        let mut acc = Rat::ONE;
        for _ in 0..e {
            acc *= *self;
        }
        acc
    }
}

fn cmul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).unwrap_or_else(|| overflow())
}

fn cadd(a: i128, b: i128) -> i128 {
    a.checked_add(b).unwrap_or_else(|| overflow())
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, o: Rat) -> Rat {
        if self.den == 1 && o.den == 1 {
            return Rat::int(cadd(self.num, o.num));
        }
        let g = self.den.gcd(&o.den);
        let l = self.den / g;
        let num = cadd(cmul(self.num, o.den / g), cmul(o.num, l));
        Rat::new(num, cmul(l, o.den))
    }
}

impl Sub for Rat {
    type Output = Rat;
    fn sub(self, o: Rat) -> Rat {
        self + (-o)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat { num: self.num.checked_neg().unwrap_or_else(|| overflow()), den: self.den }
    }
}

impl Mul for Rat {
    type Output = Rat;
    fn mul(self, o: Rat) -> Rat {
        if self.den == 1 && o.den == 1 {
            return Rat::int(cmul(self.num, o.num));
        }
        let g1 = self.num.gcd(&o.den).max(1);
        let g2 = o.num.gcd(&self.den).max(1);
        Rat::new(cmul(self.num / g1, o.num / g2), cmul(self.den / g2, o.den / g1))
    }
}

impl Div for Rat {
    type Output = Rat;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Rat) -> Rat {
        self * o.recip()
    }
}

impl AddAssign for Rat {
    fn add_assign(&mut self, o: Rat) {
        *self = *self + o;
    }
}

impl SubAssign for Rat {
    fn sub_assign(&mut self, o: Rat) {
        *self = *self - o;
    }
}

impl MulAssign for Rat {
    fn mul_assign(&mut self, o: Rat) {
        *self = *self * o;
    }
}

impl Zero for Rat {
    fn zero() -> Rat {
        Rat::ZERO
    }
    fn is_zero(&self) -> bool {
        self.num == 0
    }
}

impl One for Rat {
    fn one() -> Rat {
        Rat::ONE
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::int(n as i128)
    }
}

impl From<i32> for Rat {
    fn from(n: i32) -> Rat {
        Rat::int(n as i128)
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, o: &Rat) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Rat {
    fn cmp(&self, o: &Rat) -> Ordering {
        (self.to_big()).cmp(&o.to_big())
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_reduces() {
        let a = Rat::new(2, 4);
        assert_eq!(a, Rat::new(1, 2));
        assert_eq!(a + Rat::new(1, 3), Rat::new(5, 6));
        assert_eq!(a * Rat::int(4), Rat::int(2));
        assert_eq!(Rat::new(3, -6), Rat::new(-1, 2));
        assert_eq!((a - a), Rat::ZERO);
        assert_eq!(Rat::new(2, 3) / Rat::new(4, 9), Rat::new(3, 2));
    }

    #[test]
    fn big_round_trip() {
        let a = Rat::new(-7, 12);
        assert_eq!(Rat::from_big(&a.to_big()), a);
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_panics() {
        let big = Rat::int(i128::MAX / 2 + 1);
        let _ = big + big;
    }
}
