use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::partition::{validate_composition, Partition};
use crate::error::Result;

/// A tableau as rows of 0-based entries.
pub type Tableau = Vec<Vec<usize>>;

/// Standard Young tableaux of shape `lambda`, entries `0..n`.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Tableau> {
    fn go(shape: &[usize], filled: &mut Vec<usize>, t: &mut Tableau, next: usize, n: usize, out: &mut Vec<Tableau>) {
        if next == n {
            out.push(t.clone());
            return;
        }
        for r in 0..shape.len() {
            let ok_row = filled[r] < shape[r];
            let ok_col = r == 0 || filled[r - 1] > filled[r];
            if ok_row && ok_col {
                filled[r] += 1;
                t[r].push(next);
                go(shape, filled, t, next + 1, n, out);
                t[r].pop();
                filled[r] -= 1;
            }
        }
    }
    let shape = lambda.parts().to_vec();
    let mut out = Vec::new();
    let mut t: Tableau = vec![Vec::new(); shape.len()];
    go(&shape, &mut vec![0; shape.len()], &mut t, 0, lambda.size(), &mut out);
    out
}

/// Number of semistandard tableaux of shape `lambda` and content `c`.
///
/// Fills the entries value by value; each value occupies a horizontal strip.
pub fn kostka(lambda: &Partition, c: &[usize]) -> Result<u64> {
    validate_composition(c, lambda.size())?;
    fn go(lambda: &[usize], cur: &mut Vec<usize>, c: &[usize], k: usize) -> u64 {
        if k == c.len() {
            return u64::from(cur.as_slice() == lambda);
        }
        // distribute c[k] boxes over rows as a horizontal strip
        fn place(lambda: &[usize], cur: &mut Vec<usize>, row: usize, left: usize, c: &[usize], k: usize, prev: &[usize]) -> u64 {
            if row == lambda.len() {
                return if left == 0 { go(lambda, cur, c, k + 1) } else { 0 };
            }
            let cap_above = if row == 0 { lambda[0] } else { prev[row - 1] };
            let max_add = lambda[row].min(cap_above).saturating_sub(cur[row]).min(left);
            let mut total = 0;
            for add in 0..=max_add {
                cur[row] += add;
                total += place(lambda, cur, row + 1, left - add, c, k, prev);
                cur[row] -= add;
            }
            total
        }
        let prev = cur.clone();
        place(lambda, cur, 0, c[k], c, k, &prev)
    }
    let parts = lambda.parts().to_vec();
    Ok(go(&parts, &mut vec![0; parts.len()], c, 0))
}

/// Beta-set of a partition padded to `len` parts.
fn beta_set(lambda: &[usize], len: usize) -> Vec<usize> {
    (0..len).map(|j| lambda.get(j).copied().unwrap_or(0) + len - 1 - j).collect()
}

fn from_beta(mut betas: Vec<usize>) -> Vec<usize> {
    betas.sort_unstable_by(|a, b| b.cmp(a));
    let len = betas.len();
    let mut parts: Vec<usize> = betas.iter().enumerate().map(|(j, &b)| b - (len - 1 - j)).collect();
    while parts.last() == Some(&0) {
        parts.pop();
    }
    parts
}

/// Skew character `χ^{λ/μ}` at the class of cycle type `rho` (Murnaghan–Nakayama).
pub fn skew_character(lambda: &Partition, mu: &Partition, rho: &[usize]) -> i64 {
    if !mu.contained_in(lambda) || lambda.size() - mu.size() != rho.iter().sum::<usize>() {
        return 0;
    }
    fn go(lambda: Vec<usize>, mu: &Partition, rho: &[usize]) -> i64 {
        let Some((&r, rest)) = rho.split_last() else {
            return 1;
        };
        let len = lambda.len() + r;
        let betas = beta_set(&lambda, len);
        let mut total = 0;
        for (idx, &b) in betas.iter().enumerate() {
            if b < r || betas.contains(&(b - r)) {
                continue;
            }
            let between = betas.iter().filter(|&&x| x > b - r && x < b).count();
            let mut nb = betas.clone();
            nb[idx] = b - r;
            let smaller = from_beta(nb);
            let sp = Partition::new(smaller.clone()).unwrap();
            if !mu.contained_in(&sp) {
                continue;
            }
            let sign = if between % 2 == 0 { 1 } else { -1 };
            total += sign * go(smaller, mu, rest);
        }
        total
    }
    go(lambda.parts().to_vec(), mu, rho)
}

pub fn character(lambda: &Partition, rho: &[usize]) -> i64 {
    skew_character(lambda, &Partition::empty(), rho)
}

/// `⟨χ^{λ/μ}, 1⟩` by summing over conjugacy classes.
pub fn trivial_inner_product(lambda: &Partition, mu: &Partition) -> BigRational {
    let n = lambda.size() - mu.size();
    let mut s = BigRational::zero();
    for rho in super::partition::partitions_of(n) {
        let chi = skew_character(lambda, mu, rho.parts());
        s += BigRational::new(BigInt::from(chi), BigInt::from(rho.z()));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgrp::partition::{compositions_of, partitions_of};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn syt_counts() {
        assert_eq!(standard_tableaux(&p(&[2, 1])).len(), 2);
        assert_eq!(standard_tableaux(&p(&[3, 2])).len(), 5);
        assert_eq!(standard_tableaux(&p(&[3, 2, 1])).len(), 16);
    }

    #[test]
    fn kostka_values() {
        assert_eq!(kostka(&p(&[3]), &[1, 2]).unwrap(), 1);
        assert_eq!(kostka(&p(&[2, 1]), &[1, 1, 1]).unwrap(), 2);
        assert_eq!(kostka(&p(&[2, 1]), &[3]).unwrap(), 0);
        assert_eq!(kostka(&p(&[2, 2]), &[2, 1, 1]).unwrap(), 1);
        assert!(kostka(&p(&[2, 1]), &[1, 1]).is_err());
    }

    #[test]
    fn kostka_symmetric_in_content() {
        for lam in partitions_of(5) {
            for c in compositions_of(5) {
                let sorted = Partition::from_composition(&c);
                assert_eq!(kostka(&lam, &c).unwrap(), kostka(&lam, sorted.parts()).unwrap());
            }
        }
    }

    #[test]
    fn kostka_standard_content_counts_syt() {
        for lam in partitions_of(6) {
            assert_eq!(kostka(&lam, &[1; 6]).unwrap() as usize, standard_tableaux(&lam).len());
        }
    }

    #[test]
    fn characters_orthogonal() {
        let n = 5;
        let parts = partitions_of(n);
        for a in &parts {
            for b in &parts {
                let mut s = BigRational::zero();
                for rho in &parts {
                    let v = character(a, rho.parts()) * character(b, rho.parts());
                    s += BigRational::new(BigInt::from(v), BigInt::from(rho.z()));
                }
                let expect = if a == b { 1 } else { 0 };
                assert_eq!(s, BigRational::from_integer(BigInt::from(expect)));
            }
        }
    }

    #[test]
    fn character_degree_is_syt_count() {
        for lam in partitions_of(6) {
            assert_eq!(character(&lam, &[1; 6]) as usize, standard_tableaux(&lam).len());
        }
    }
}
