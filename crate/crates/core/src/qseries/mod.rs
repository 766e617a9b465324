//! Exact arithmetic in one variable `q`.
//!
//! Two bracket conventions live here and are never mixed: the balanced
//! quantum integer `[n] = (q^n - q^-n)/(q - q^-1)` and the one-variable
//! Gaussian binomial `(1-q^n)...(1-q^{n-m+1}) / (1-q)...(1-q^m)`.

mod laurent;
mod rational;
mod series;

pub use laurent::LaurentPolynomial;
pub use rational::RationalFunction;
pub use series::TruncatedSeries;

use crate::error::{Error, Result};

/// `1 - q^e`.
fn one_minus(e: i64) -> LaurentPolynomial {
    LaurentPolynomial::from_coeffs([(0, 1), (e, -1)])
}

/// Balanced quantum integer `[n]`.
pub fn qint(n: i64) -> Result<LaurentPolynomial> {
    if n <= 0 {
        return Err(Error::Domain(format!("qint needs n >= 1, got {}", n)));
    }
    Ok(LaurentPolynomial::from_coeffs((0..n).map(|k| (n - 1 - 2 * k, 1))))
}

/// `[n]! = [n][n-1]...[1]`, with `[0]! = 1`.
pub fn qfactorial(n: u32) -> LaurentPolynomial {
    (1..=n as i64).fold(LaurentPolynomial::one(), |acc, k| &acc * &qint(k).unwrap())
}

/// Gaussian binomial in the non-balanced convention.
pub fn gauss_binom(n: u32, m: u32) -> Result<LaurentPolynomial> {
    if m > n {
        return Err(Error::Domain(format!("gauss_binom needs m <= n, got n={}, m={}", n, m)));
    }
    let mut num = LaurentPolynomial::one();
    let mut den = LaurentPolynomial::one();
    for j in 0..m as i64 {
        num = &num * &one_minus(n as i64 - j);
        den = &den * &one_minus(j + 1);
    }
    Ok(num.div_exact(&den).expect("Gaussian binomial is a polynomial"))
}

/// `(q^a; q)_n = (1 - q^a)(1 - q^{a+1})...(1 - q^{a+n-1})`.
pub fn pochhammer(a: u32, n: u32) -> LaurentPolynomial {
    (0..n as i64).fold(LaurentPolynomial::one(), |acc, j| &acc * &one_minus(a as i64 + j))
}

/// Graded dimension of the truncated symmetric algebra `Z_p^Λ` at level `a`.
pub fn beta(p: u32, a: u32) -> Result<LaurentPolynomial> {
    if p == 0 || a == 0 {
        return Err(Error::Domain("beta needs p >= 1 and a >= 1".into()));
    }
    Ok(gauss_binom(a + p - 1, p)?.substitute_power(2))
}

/// `ν_k = 1/((1-q^2)(1-q^4)...(1-q^{2k}))`.
pub fn nu(k: u32) -> RationalFunction {
    let den = (1..=k as i64).fold(LaurentPolynomial::one(), |acc, j| &acc * &one_minus(2 * j));
    RationalFunction::new(LaurentPolynomial::one(), den)
}

/// `α_p` from the recursion `α_p = ν_p(K^-p - K^p) - Σ_{k<p} ν_k K^k α_{p-k}` with `K = q^a`.
pub fn alpha(p: u32, a: u32) -> Result<RationalFunction> {
    if p == 0 || a == 0 {
        return Err(Error::Domain("alpha needs p >= 1 and a >= 1".into()));
    }
    let a = a as i64;
    let mut vals: Vec<RationalFunction> = vec![RationalFunction::zero()];
    for q in 1..=p as i64 {
        let k_diff = &RationalFunction::q_pow(-q * a) - &RationalFunction::q_pow(q * a);
        let mut v = &nu(q as u32) * &k_diff;
        for k in 1..q {
            let term = &(&nu(k as u32) * &RationalFunction::q_pow(k * a)) * &vals[(q - k) as usize];
            v = &v - &term;
        }
        vals.push(v);
    }
    Ok(vals.pop().unwrap())
}

/// Checks `1 - q^{pa} = Σ_{k<p} q^{ka} [p, k] (q^a; q)_{p-k}` exactly.
pub fn gauss_identity_check(p: u32, a: u32) -> bool {
    let lhs = one_minus(p as i64 * a as i64);
    let mut rhs = LaurentPolynomial::zero();
    for k in 0..p {
        let term = &(&LaurentPolynomial::q_pow(k as i64 * a as i64) * &gauss_binom(p, k).unwrap()) * &pochhammer(a, p - k);
        rhs = &rhs + &term;
    }
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn lp(c: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_coeffs(c.iter().copied())
    }

    #[test]
    fn qint_values() {
        assert_eq!(qint(1).unwrap(), LaurentPolynomial::one());
        assert_eq!(qint(2).unwrap(), lp(&[(1, 1), (-1, 1)]));
        assert_eq!(qint(3).unwrap(), lp(&[(2, 1), (0, 1), (-2, 1)]));
        assert!(qint(0).is_err());
        assert!(qint(-3).is_err());
    }

    #[test]
    fn qint_matches_quotient() {
        // [n](q - q^-1) = q^n - q^-n
        for n in 1..=12 {
            let lhs = &qint(n).unwrap() * &lp(&[(1, 1), (-1, -1)]);
            assert_eq!(lhs, lp(&[(n, 1), (-n, -1)]));
        }
    }

    #[test]
    fn qfactorial_values() {
        assert_eq!(qfactorial(0), LaurentPolynomial::one());
        assert_eq!(qfactorial(2), qint(2).unwrap());
        assert_eq!(qfactorial(3), lp(&[(3, 1), (1, 2), (-1, 2), (-3, 1)]));
    }

    #[test]
    fn gauss_binom_values() {
        assert_eq!(gauss_binom(5, 0).unwrap(), LaurentPolynomial::one());
        assert_eq!(gauss_binom(2, 1).unwrap(), lp(&[(0, 1), (1, 1)]));
        assert_eq!(gauss_binom(4, 2).unwrap(), lp(&[(0, 1), (1, 1), (2, 2), (3, 1), (4, 1)]));
        assert!(gauss_binom(2, 3).is_err());
    }

    #[test]
    fn gauss_binom_counts_subsets() {
        // at q = 1 the Gaussian binomial is the ordinary binomial coefficient
        for n in 0..=10u32 {
            let mut c = BigInt::from(1);
            for m in 0..=n {
                assert_eq!(gauss_binom(n, m).unwrap().at_one(), c);
                c = c * BigInt::from(n - m) / BigInt::from(m + 1);
            }
        }
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(4, 0), LaurentPolynomial::one());
        assert_eq!(pochhammer(1, 1), lp(&[(0, 1), (1, -1)]));
        assert_eq!(pochhammer(2, 2), lp(&[(0, 1), (2, -1), (3, -1), (5, 1)]));
    }

    #[test]
    fn pochhammer_quotient_identity() {
        // (q^{a+m}; q)_{n-m} = (q^a;q)_n / (q^a;q)_m
        for a in 1..4 {
            for n in 0..6 {
                for m in 0..=n {
                    let q = pochhammer(a, n).div_exact(&pochhammer(a, m)).unwrap();
                    assert_eq!(q, pochhammer(a + m, n - m));
                }
            }
        }
    }

    #[test]
    fn beta_values() {
        for p in 1..5 {
            assert_eq!(beta(p, 1).unwrap(), LaurentPolynomial::one());
        }
        assert_eq!(beta(1, 2).unwrap(), lp(&[(0, 1), (2, 1)]));
        assert_eq!(beta(2, 2).unwrap(), lp(&[(0, 1), (2, 1), (4, 1)]));
    }

    #[test]
    fn alpha_values() {
        for a in 1..5i64 {
            let expect = RationalFunction::new(lp(&[(-a, 1), (a, -1)]), lp(&[(0, 1), (2, -1)]));
            assert_eq!(alpha(1, a as u32).unwrap(), expect);
        }
        for p in 1..5u32 {
            assert_eq!(alpha(p, 1).unwrap(), RationalFunction::q_pow(-(p as i64)));
        }
        assert_eq!(alpha(2, 2).unwrap(), RationalFunction::from(lp(&[(-4, 1), (-2, 1), (0, 1)])));
    }

    #[test]
    fn gauss_identity_examples() {
        assert!(gauss_identity_check(1, 3));
        assert!(gauss_identity_check(2, 1));
        assert!(gauss_identity_check(4, 3));
    }
}
