use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::module::{Generator, GradedOperatorModule};
use super::partition::Partition;
use super::tableau::{standard_tableaux, Tableau};
use crate::linalg::{q_int, Matrix, Q};
use crate::perm::{all_perms, sign};

/// Row index of each entry.
type Tabloid = Vec<u8>;

fn polytabloid(t: &Tableau, n: usize) -> HashMap<Tabloid, i64> {
    let ncols = t.first().map_or(0, |r| r.len());
    let columns: Vec<Vec<usize>> = (0..ncols).map(|c| t.iter().filter(|r| r.len() > c).map(|r| r[c]).collect()).collect();
    let col_perms: Vec<Vec<Vec<u8>>> = columns.iter().map(|col| all_perms(col.len())).collect();
    let mut out = HashMap::new();
    let mut idx = vec![0usize; ncols];
    loop {
        let mut tab = vec![0u8; n];
        let mut sgn = 1;
        for (c, col) in columns.iter().enumerate() {
            let pi = &col_perms[c][idx[c]];
            sgn *= sign(pi);
            for (r, &src) in pi.iter().enumerate() {
                tab[col[src as usize]] = r as u8;
            }
        }
        *out.entry(tab).or_insert(0) += sgn;
        // odometer over the column groups
        let mut c = 0;
        loop {
            if c == ncols {
                out.retain(|_, v| *v != 0);
                return out;
            }
            idx[c] += 1;
            if idx[c] < col_perms[c].len() {
                break;
            }
            idx[c] = 0;
            c += 1;
        }
    }
}

fn tabloid_of(t: &Tableau, n: usize) -> Tabloid {
    let mut tab = vec![0u8; n];
    for (r, row) in t.iter().enumerate() {
        for &e in row {
            tab[e] = r as u8;
        }
    }
    tab
}

fn swap_entries(t: &Tableau, k: usize) -> Tableau {
    t.iter()
        .map(|row| {
            row.iter()
                .map(|&e| if e == k { k + 1 } else if e == k + 1 { k } else { e })
                .collect()
        })
        .collect()
}

/// The Specht module `S^λ` on the standard polytabloid basis, generators `s1..s{n-1}`.
///
/// The Coxeter relations are verified before returning.
pub fn specht_module(lambda: &Partition) -> GradedOperatorModule {
    let n = lambda.size();
    let syt = standard_tableaux(lambda);
    let f = syt.len();
    let basis: Vec<HashMap<Tabloid, i64>> = syt.iter().map(|t| polytabloid(t, n)).collect();
    let leads: Vec<Tabloid> = syt.iter().map(|t| tabloid_of(t, n)).collect();
    let mut square = Matrix::zeros(f, f);
    for (i, lead) in leads.iter().enumerate() {
        for (j, v) in basis.iter().enumerate() {
            square.set(i, j, q_int(v.get(lead).copied().unwrap_or(0)));
        }
    }
    let mut gens = BTreeMap::new();
    for k in 0..n.saturating_sub(1) {
        let mut m = Matrix::zeros(f, f);
        for (j, t) in syt.iter().enumerate() {
            let image = polytabloid(&swap_entries(t, k), n);
            let rhs: Vec<Q> = leads.iter().map(|l| q_int(image.get(l).copied().unwrap_or(0))).collect();
            let coords = square.solve(&rhs).expect("standard polytabloids are independent");
            // the image must be exactly this combination, not only on the leading tabloids
            let mut check: HashMap<Tabloid, Q> = HashMap::new();
            for (b, c) in coords.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (tab, &x) in &basis[b] {
                    *check.entry(tab.clone()).or_insert_with(Q::zero) += c * q_int(x);
                }
            }
            check.retain(|_, v| !v.is_zero());
            let want: HashMap<Tabloid, Q> = image.iter().map(|(t, &x)| (t.clone(), q_int(x))).collect();
            assert_eq!(check, want, "polytabloid expansion failed");
            for (i, c) in coords.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        gens.insert(format!("s{}", k + 1), Generator { degree: 0, matrix: m });
    }
    let module = GradedOperatorModule::new(vec![0; f], gens).expect("degree-zero generators");
    assert!(coxeter_relations_hold(&module, n), "Specht matrices violate the Coxeter relations");
    module
}

/// Checks `s_k^2 = 1`, `(s_k s_{k+1})^3 = 1` and `(s_k s_l)^2 = 1` for `|k - l| > 1`.
pub fn coxeter_relations_hold(m: &GradedOperatorModule, n: usize) -> bool {
    let id = Matrix::identity(m.dim());
    let s = |k: usize| &m.generator(&format!("s{}", k + 1)).unwrap().matrix;
    for k in 0..n.saturating_sub(1) {
        if s(k).mul(s(k)) != id {
            return false;
        }
        for l in k + 1..n - 1 {
            let p = s(k).mul(s(l));
            let order = if l == k + 1 { 3 } else { 2 };
            let mut acc = id.clone();
            for _ in 0..order {
                acc = acc.mul(&p);
            }
            if acc != id {
                return false;
            }
        }
    }
    true
}

/// Matrices of every group element, keyed by permutation, built by breadth-first products.
pub fn group_matrices(m: &GradedOperatorModule, n: usize) -> HashMap<Vec<u8>, Matrix> {
    let mut out: HashMap<Vec<u8>, Matrix> = HashMap::new();
    let id: Vec<u8> = (0..n as u8).collect();
    out.insert(id.clone(), Matrix::identity(m.dim()));
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in frontier {
            for k in 0..n.saturating_sub(1) {
                let sw = crate::perm::left_mul(k, &w);
                if !out.contains_key(&sw) {
                    let mat = m.generator(&format!("s{}", k + 1)).unwrap().matrix.mul(&out[&w]);
                    out.insert(sw.clone(), mat);
                    next.push(sw);
                }
            }
        }
        frontier = next;
    }
    out
}

/// Average of the group matrices over the Young subgroup `S_{c1} × .. × S_{cr}`.
pub fn young_symmetrizer_matrix(group: &HashMap<Vec<u8>, Matrix>, dim: usize, c: &[usize]) -> Matrix {
    let mut sum = Matrix::zeros(dim, dim);
    let mut count = 0i64;
    for (w, mat) in group {
        let mut start = 0;
        let mut inside = true;
        for &b in c {
            if w[start..start + b].iter().any(|&x| (x as usize) < start || (x as usize) >= start + b) {
                inside = false;
                break;
            }
            start += b;
        }
        if inside {
            sum = sum.add(mat);
            count += 1;
        }
    }
    sum.scale(&(Q::one() / q_int(count)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgrp::partition::partitions_of;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn trivial_and_sign() {
        let t = specht_module(&p(&[4]));
        assert_eq!(t.dim(), 1);
        for k in 1..4 {
            assert_eq!(t.generator(&format!("s{}", k)).unwrap().matrix, Matrix::identity(1));
        }
        let s = specht_module(&p(&[1, 1, 1, 1]));
        for k in 1..4 {
            assert_eq!(s.generator(&format!("s{}", k)).unwrap().matrix, Matrix::identity(1).scale(&q_int(-1)));
        }
        assert_eq!(specht_module(&p(&[2, 1])).dim(), 2);
    }

    #[test]
    fn traces_are_characters() {
        for lam in partitions_of(4) {
            let m = specht_module(&lam);
            let group = group_matrices(&m, 4);
            for (w, mat) in &group {
                let trace: Q = (0..m.dim()).fold(Q::zero(), |a, i| a + mat.get(i, i));
                // cycle type of w
                let mut seen = [false; 4];
                let mut cyc = Vec::new();
                for s in 0..4 {
                    if !seen[s] {
                        let mut len = 0;
                        let mut x = s;
                        while !seen[x] {
                            seen[x] = true;
                            x = w[x] as usize;
                            len += 1;
                        }
                        cyc.push(len);
                    }
                }
                let rho = Partition::from_composition(&cyc);
                let chi = crate::symgrp::tableau::character(&lam, rho.parts());
                assert_eq!(trace, q_int(chi));
            }
        }
    }
}
