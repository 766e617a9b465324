use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// An integer partition: weakly decreasing positive parts.
/// Derived ordering is lexicographic on parts, which agrees with zero-padded lex order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Domain(format!("not a partition: {:?}", parts)));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i`, zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.part(0);
        Partition((0..cols).map(|c| self.0.iter().filter(|&&p| p > c).count()).collect())
    }

    /// Diagram containment `self ⊆ other`.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| p <= other.part(i))
    }

    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for (r, &p) in self.0.iter().enumerate() {
            for c in 0..p {
                v.push((r, c));
            }
        }
        v
    }

    /// Lexicographic comparison, padding with zeros.
    pub fn lex_cmp(&self, other: &Partition) -> Ordering {
        let n = self.len().max(other.len());
        for i in 0..n {
            match self.part(i).cmp(&other.part(i)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    pub fn dominates(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..n {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Sorting a composition into a partition.
    pub fn from_composition(c: &[usize]) -> Partition {
        let mut v: Vec<usize> = c.iter().copied().filter(|&x| x > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    /// Size of the centralizer of a permutation of this cycle type.
    pub fn z(&self) -> u128 {
        let mut z: u128 = 1;
        let mut i = 0;
        while i < self.0.len() {
            let p = self.0[i];
            let mut m = 0u128;
            while i < self.0.len() && self.0[i] == p {
                m += 1;
                i += 1;
                z *= p as u128 * m;
            }
        }
        z
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All compositions of `n` (ordered, positive parts).
pub fn compositions_of(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions_of(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Compositions of `n` with exactly `k` positive parts.
pub fn compositions_with_parts(n: usize, k: usize) -> Vec<Vec<usize>> {
    compositions_of(n).into_iter().filter(|c| c.len() == k).collect()
}

pub fn validate_composition(c: &[usize], n: usize) -> Result<()> {
    if c.contains(&0) {
        return Err(Error::Domain(format!("composition {:?} has a zero part", c)));
    }
    if c.iter().sum::<usize>() != n {
        return Err(Error::Domain(format!("composition {:?} does not sum to {}", c, n)));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enumeration() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions_of(5).len(), 7);
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(compositions_of(4).len(), 8);
    }

    #[test]
    fn transpose_and_orders() {
        assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 1]).transpose(), p(&[2, 1]));
        assert!(p(&[3]).dominates(&p(&[2, 1])));
        assert_eq!(p(&[2, 2]).lex_cmp(&p(&[2, 1, 1])), Ordering::Greater);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(p(&[2, 1, 1]).z(), 4);
        assert_eq!(p(&[1, 1, 1]).z(), 6);
    }
}
