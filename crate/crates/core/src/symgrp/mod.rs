//! Partitions, tableaux, Specht modules and skew shapes for the symmetric group.

mod module;
mod partition;
mod specht;
mod tableau;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};

pub use module::{Generator, GradedOperatorModule};
pub use partition::{compositions_of, compositions_with_parts, partitions_of, validate_composition, Partition};
pub use specht::{coxeter_relations_hold, group_matrices, specht_module, young_symmetrizer_matrix};
pub use tableau::{character, kostka, skew_character, standard_tableaux, trivial_inner_product, Tableau};

use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// A skew diagram `outer / inner`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<SkewShape> {
        if !inner.contained_in(&outer) {
            return Err(Error::Domain(format!("{} is not contained in {}", inner, outer)));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.outer.cells().into_iter().filter(|&(r, c)| c >= self.inner.part(r)).collect()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Number of standard fillings of the skew diagram.
    pub fn standard_count(&self) -> u64 {
        fn go(cur: &mut Vec<usize>, outer: &Partition, left: usize) -> u64 {
            if left == 0 {
                return 1;
            }
            let mut total = 0;
            for r in 0..outer.len() {
                let row_ok = cur[r] < outer.part(r);
                let col_ok = r == 0 || cur[r - 1] > cur[r];
                if row_ok && col_ok {
                    cur[r] += 1;
                    total += go(cur, outer, left - 1);
                    cur[r] -= 1;
                }
            }
            total
        }
        let mut cur: Vec<usize> = (0..self.outer.len()).map(|r| self.inner.part(r)).collect();
        go(&mut cur, &self.outer, self.size())
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// Partitions obtained from `inner` by adding `k` cells (staying inside `outer`).
fn extensions(inner: &Partition, outer: &Partition, k: usize) -> Vec<Partition> {
    fn go(row: usize, left: usize, cur: &mut Vec<usize>, outer: &Partition, out: &mut Vec<Partition>) {
        if row == cur.len() {
            if left == 0 {
                out.push(Partition::new(cur.clone()).unwrap());
            }
            return;
        }
        let cap = if row == 0 { outer.part(0) } else { cur[row - 1].min(outer.part(row)) };
        let base = cur[row];
        for add in 0..=cap.saturating_sub(base).min(left) {
            cur[row] = base + add;
            go(row + 1, left - add, cur, outer, out);
        }
        cur[row] = base;
    }
    let mut cur: Vec<usize> = (0..outer.len()).map(|r| inner.part(r)).collect();
    let mut out = Vec::new();
    go(0, k, &mut cur, outer, &mut out);
    out
}

/// Chains `∅ ≺ λ⁽¹⁾ ≺ .. ≺ λ⁽ℓ⁾ = λ` with layer sizes `b`, as tuples of skew layers.
pub fn skew_branching(lambda: &Partition, b: &[usize]) -> Result<Vec<Vec<SkewShape>>> {
    validate_composition(b, lambda.size())?;
    let mut chains: Vec<(Partition, Vec<SkewShape>)> = vec![(Partition::empty(), Vec::new())];
    for &k in b {
        let mut next = Vec::new();
        for (cur, layers) in chains {
            for ext in extensions(&cur, lambda, k) {
                let mut l = layers.clone();
                l.push(SkewShape::new(ext.clone(), cur.clone())?);
                next.push((ext, l));
            }
        }
        chains = next;
    }
    Ok(chains.into_iter().filter(|(p, _)| p == lambda).map(|(_, l)| l).collect())
}

/// Multiplicity of the trivial module in the skew module: 1 iff no two cells share a column.
pub fn skew_trivial_multiplicity(s: &SkewShape) -> u32 {
    let cells = s.cells();
    let mut cols: Vec<usize> = cells.iter().map(|&(_, c)| c).collect();
    cols.sort_unstable();
    let before = cols.len();
    cols.dedup();
    u32::from(cols.len() == before)
}

/// A Specht module together with all of its group matrices.
pub struct SpechtData {
    pub lambda: Partition,
    pub module: GradedOperatorModule,
    group: HashMap<Vec<u8>, Matrix>,
}

impl SpechtData {
    pub fn new(lambda: &Partition) -> SpechtData {
        let module = specht_module(lambda);
        let group = group_matrices(&module, lambda.size());
        SpechtData { lambda: lambda.clone(), module, group }
    }

    /// Rank of the Young-subgroup average for the composition `c`.
    pub fn idempotent_rank(&self, c: &[usize]) -> Result<usize> {
        validate_composition(c, self.lambda.size())?;
        Ok(young_symmetrizer_matrix(&self.group, self.module.dim(), c).rank())
    }

    pub fn group_matrix(&self, w: &[u8]) -> &Matrix {
        &self.group[w]
    }
}

/// `dim(e_c · S^λ)` where `e_c` averages over the Young subgroup of `c`.
pub fn idempotent_rank(lambda: &Partition, c: &[usize]) -> Result<usize> {
    SpechtData::new(lambda).idempotent_rank(c)
}

/// Relabels each partition by its transpose.
pub fn transpose_involution<V: Clone + Zero + std::ops::Add<Output = V>>(
    expansion: &BTreeMap<Partition, V>,
) -> BTreeMap<Partition, V> {
    let mut out: BTreeMap<Partition, V> = BTreeMap::new();
    for (p, v) in expansion {
        let e = out.entry(p.transpose()).or_insert_with(V::zero);
        *e = e.clone() + v.clone();
    }
    out
}

/// `Σ_λ (dim S^λ)^2`, using the constructed modules.
pub fn sum_of_squares(n: usize) -> u64 {
    partitions_of(n).iter().map(|l| specht_module(l).dim() as u64).map(|d| d * d).sum()
}

/// True when `⟨χ^{λ/μ}, 1⟩` computed from characters is exactly 0 or 1 and matches the combinatorial rule.
pub fn trivial_multiplicity_matches_characters(s: &SkewShape) -> bool {
    let ip = trivial_inner_product(&s.outer, &s.inner);
    let m = skew_trivial_multiplicity(s);
    if m == 1 {
        ip.is_one()
    } else {
        ip.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn branching_examples() {
        assert_eq!(skew_branching(&p(&[2, 1]), &[3]).unwrap().len(), 1);
        assert_eq!(skew_branching(&p(&[2, 1]), &[1, 2]).unwrap().len(), 1);
        let two = skew_branching(&p(&[2, 1]), &[2, 1]).unwrap();
        assert_eq!(two.len(), 2);
        let firsts: Vec<Partition> = two.iter().map(|c| c[0].outer.clone()).collect();
        assert!(firsts.contains(&p(&[2])) && firsts.contains(&p(&[1, 1])));
    }

    #[test]
    fn branching_dimension_bookkeeping() {
        for n in 1..=6 {
            for lam in partitions_of(n) {
                let dim = standard_tableaux(&lam).len() as u64;
                for k in 2..=3 {
                    for b in compositions_with_parts(n, k) {
                        let total: u64 = skew_branching(&lam, &b)
                            .unwrap()
                            .iter()
                            .map(|chain| chain.iter().map(|s| s.standard_count()).product::<u64>())
                            .sum();
                        assert_eq!(total, dim, "{} {:?}", lam, b);
                    }
                }
            }
        }
    }

    #[test]
    fn trivial_multiplicity_examples() {
        let single = SkewShape::new(p(&[1]), Partition::empty()).unwrap();
        assert_eq!(skew_trivial_multiplicity(&single), 1);
        let column = SkewShape::new(p(&[1, 1]), Partition::empty()).unwrap();
        assert_eq!(skew_trivial_multiplicity(&column), 0);
        let apart = SkewShape::new(p(&[2, 1]), p(&[1])).unwrap();
        assert_eq!(skew_trivial_multiplicity(&apart), 1);
        let stacked = SkewShape::new(p(&[2, 2]), p(&[1])).unwrap();
        assert_eq!(skew_trivial_multiplicity(&stacked), 0);
        for s in [single, column, apart, stacked] {
            assert!(trivial_multiplicity_matches_characters(&s));
        }
    }

    #[test]
    fn trivial_multiplicity_agrees_with_characters_exhaustively() {
        for n in 1..=6 {
            for outer in partitions_of(n) {
                for k in 0..n {
                    for inner in partitions_of(k) {
                        if let Ok(s) = SkewShape::new(outer.clone(), inner) {
                            assert!(trivial_multiplicity_matches_characters(&s), "{}", s);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn idempotent_rank_examples() {
        assert_eq!(idempotent_rank(&p(&[2, 1]), &[1, 1, 1]).unwrap(), 2);
        assert_eq!(idempotent_rank(&p(&[2, 1]), &[2, 1]).unwrap(), 1);
        assert_eq!(idempotent_rank(&p(&[2, 1]), &[3]).unwrap(), 0);
    }

    #[test]
    fn transpose_examples() {
        let mut m = BTreeMap::new();
        m.insert(p(&[3]), 1i64);
        let t = transpose_involution(&m);
        assert_eq!(t.get(&p(&[1, 1, 1])), Some(&1));
        let mut m2 = BTreeMap::new();
        m2.insert(p(&[2, 1]), 5i64);
        assert_eq!(transpose_involution(&m2), m2);
        let mut m3 = BTreeMap::new();
        m3.insert(p(&[3, 1]), 2i64);
        m3.insert(p(&[2, 2]), -1);
        assert_eq!(transpose_involution(&transpose_involution(&m3)), m3);
    }

    #[test]
    fn squares_sum_to_factorial() {
        let mut fact = 1u64;
        for n in 1..=7 {
            fact *= n as u64;
            assert_eq!(sum_of_squares(n), fact);
        }
    }
}
