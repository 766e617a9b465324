//! Exact linear algebra: sparse row echelon bases and small dense matrices.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;
use std::ops::Bound::{Excluded, Unbounded};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// A sparse vector keyed by arbitrary ordered coordinates.
pub type SparseVec<K> = BTreeMap<K, Q>;

pub fn axpy<K: Ord + Clone>(target: &mut SparseVec<K>, c: &Q, v: &SparseVec<K>) {
    for (k, x) in v {
        let e = target.entry(k.clone()).or_insert_with(Q::zero);
        *e += c * x;
        if e.is_zero() {
            target.remove(k);
        }
    }
}

/// Incrementally built row echelon basis of a subspace.
///
/// Each stored row is scaled so that its pivot (its smallest key) is 1.
#[derive(Clone, Debug)]
pub struct EchelonBasis<K: Ord + Clone + Hash> {
    rows: Vec<SparseVec<K>>,
    pivots: HashMap<K, usize>,
}

impl<K: Ord + Clone + Hash> Default for EchelonBasis<K> {
    fn default() -> Self {
        EchelonBasis { rows: Vec::new(), pivots: HashMap::new() }
    }
}

impl<K: Ord + Clone + Hash> EchelonBasis<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec<K>] {
        &self.rows
    }

    /// Reduces `v` against the basis, returning the multipliers used.
    fn reduce(&self, v: &mut SparseVec<K>) -> Vec<(usize, Q)> {
        let mut used = Vec::new();
        let mut cursor: Option<K> = None;
        loop {
            let next = match &cursor {
                None => v.iter().find(|(k, _)| self.pivots.contains_key(*k)),
                Some(c) => v.range((Excluded(c), Unbounded)).find(|(k, _)| self.pivots.contains_key(*k)),
            }
            .map(|(k, c)| (k.clone(), c.clone()));
            let Some((k, c)) = next else { break };
            let r = self.pivots[&k];
            axpy(v, &-c.clone(), &self.rows[r]);
            used.push((r, c));
            cursor = Some(k);
        }
        used
    }

    /// Inserts `v`; returns true if it was independent of the current rows.
    pub fn insert(&mut self, mut v: SparseVec<K>) -> bool {
        self.reduce(&mut v);
        let Some((k, lead)) = v.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = lead.recip();
        for c in v.values_mut() {
            *c *= &inv;
        }
        self.pivots.insert(k, self.rows.len());
        self.rows.push(v);
        true
    }

    /// `v` reduced against the basis; the result has no pivot coordinates.
    pub fn remainder(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut w = v.clone();
        self.reduce(&mut w);
        w
    }

    pub fn is_pivot(&self, k: &K) -> bool {
        self.pivots.contains_key(k)
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_empty()
    }

    /// Coordinates of `v` with respect to the stored rows, if `v` lies in the span.
    pub fn coordinates(&self, v: &SparseVec<K>) -> Option<Vec<(usize, Q)>> {
        let mut w = v.clone();
        let used = self.reduce(&mut w);
        if w.is_empty() {
            Some(used)
        } else {
            None
        }
    }
}

/// Rank of a family of sparse vectors.
pub fn rank_of<K: Ord + Clone + Hash, I: IntoIterator<Item = SparseVec<K>>>(vs: I) -> usize {
    let mut b = EchelonBasis::new();
    for v in vs {
        b.insert(v);
    }
    b.rank()
}

/// A dense matrix over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn scale(&self, c: &Q) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        self.add(&o.scale(&-Q::one()))
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn column(&self, j: usize) -> SparseVec<usize> {
        (0..self.rows).filter(|&i| !self.get(i, j).is_zero()).map(|i| (i, self.get(i, j).clone())).collect()
    }

    pub fn rank(&self) -> usize {
        rank_of((0..self.cols).map(|j| self.column(j)))
    }

    /// Solves `self · x = b` for square invertible `self`.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a: Vec<Vec<Q>> = (0..n)
            .map(|i| {
                let mut r: Vec<Q> = (0..n).map(|j| self.get(i, j).clone()).collect();
                r.push(b[i].clone());
                r
            })
            .collect();
        for col in 0..n {
            let p = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, p);
            let inv = a[col][col].recip();
            for x in a[col].iter_mut() {
                *x *= &inv;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in col..=n {
                        let v = &a[col][c] * &f;
                        a[r][c] -= v;
                    }
                }
            }
        }
        Some(a.into_iter().map(|r| r[n].clone()).collect())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(pairs: &[(u32, i64)]) -> SparseVec<u32> {
        pairs.iter().map(|&(k, c)| (k, q_int(c))).collect()
    }

    #[test]
    fn echelon_rank_and_coordinates() {
        let mut b = EchelonBasis::new();
        assert!(b.insert(sv(&[(0, 1), (1, 2)])));
        assert!(b.insert(sv(&[(1, 1), (2, 1)])));
        assert!(!b.insert(sv(&[(0, 1), (1, 3), (2, 1)])));
        assert_eq!(b.rank(), 2);
        let target = sv(&[(0, 2), (1, 5), (2, 1)]);
        let coords = b.coordinates(&target).unwrap();
        let mut rebuilt = SparseVec::new();
        for (r, c) in coords {
            axpy(&mut rebuilt, &c, &b.rows()[r]);
        }
        assert_eq!(rebuilt, target);
        assert!(b.coordinates(&sv(&[(3, 1)])).is_none());
    }

    #[test]
    fn dense_rank_and_solve() {
        let m = Matrix::from_rows(vec![
            vec![q_int(1), q_int(2), q_int(3)],
            vec![q_int(2), q_int(4), q_int(6)],
            vec![q_int(0), q_int(1), q_int(1)],
        ]);
        assert_eq!(m.rank(), 2);
        let inv = Matrix::from_rows(vec![vec![q_int(2), q_int(1)], vec![q_int(1), q_int(1)]]);
        let x = inv.solve(&[q_int(3), q_int(2)]).unwrap();
        assert_eq!(x, vec![q_int(1), q_int(1)]);
        assert_eq!(inv.mul(&Matrix::identity(2)), inv);
    }
}
