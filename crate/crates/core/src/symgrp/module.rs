use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::qseries::LaurentPolynomial;

/// A generator's action: its degree and its matrix on the chosen basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub degree: i64,
    pub matrix: Matrix,
}

/// A finite-dimensional graded vector space with named operators.
///
/// Basis vector `b` sits in degree `degrees[b]`; matrices act on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedOperatorModule {
    degrees: Vec<i64>,
    generators: BTreeMap<String, Generator>,
}

impl GradedOperatorModule {
    /// Builds the module, checking that each matrix shifts degree by its declared amount.
    pub fn new(degrees: Vec<i64>, generators: BTreeMap<String, Generator>) -> Result<Self> {
        let d = degrees.len();
        for (name, g) in &generators {
            if g.matrix.rows != d || g.matrix.cols != d {
                return Err(Error::Relation(format!("generator {} has shape {}x{}, expected {}x{}", name, g.matrix.rows, g.matrix.cols, d, d)));
            }
            for i in 0..d {
                for j in 0..d {
                    if !g.matrix.get(i, j).is_zero() && degrees[i] != degrees[j] + g.degree {
                        return Err(Error::Relation(format!("generator {} does not have degree {}", name, g.degree)));
                    }
                }
            }
        }
        Ok(GradedOperatorModule { degrees, generators })
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn graded_dim(&self) -> LaurentPolynomial {
        let mut p = LaurentPolynomial::zero();
        for &d in &self.degrees {
            p.add_term(d, 1.into());
        }
        p
    }

    pub fn generator(&self, name: &str) -> Option<&Generator> {
        self.generators.get(name)
    }

    pub fn generators(&self) -> &BTreeMap<String, Generator> {
        &self.generators
    }

    /// Graded rank of a degree-zero operator given as a matrix on this module.
    pub fn graded_rank(&self, m: &Matrix) -> LaurentPolynomial {
        let mut by_deg: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for (b, &d) in self.degrees.iter().enumerate() {
            by_deg.entry(d).or_default().push(b);
        }
        let mut p = LaurentPolynomial::zero();
        for (d, idx) in by_deg {
            let r = m.select(&idx, &idx).rank();
            if r > 0 {
                p.add_term(d, (r as i64).into());
            }
        }
        p
    }

    /// Grading shift `M{m}`: every basis vector moves up by `m`.
    pub fn shift(&self, m: i64) -> Self {
        GradedOperatorModule { degrees: self.degrees.iter().map(|d| d + m).collect(), generators: self.generators.clone() }
    }

    /// Direct sum; both modules must carry the same generator names.
    pub fn direct_sum(&self, o: &Self) -> Result<Self> {
        if self.generators.keys().ne(o.generators.keys()) {
            return Err(Error::Domain("direct sum of modules over different generator sets".into()));
        }
        let (a, b) = (self.dim(), o.dim());
        let mut gens = BTreeMap::new();
        for (name, g) in &self.generators {
            let h = &o.generators[name];
            let mut m = Matrix::zeros(a + b, a + b);
            for i in 0..a {
                for j in 0..a {
                    m.set(i, j, g.matrix.get(i, j).clone());
                }
            }
            for i in 0..b {
                for j in 0..b {
                    m.set(a + i, a + j, h.matrix.get(i, j).clone());
                }
            }
            gens.insert(name.clone(), Generator { degree: g.degree, matrix: m });
        }
        let mut degrees = self.degrees.clone();
        degrees.extend(&o.degrees);
        GradedOperatorModule::new(degrees, gens)
    }

    /// Restriction to the coordinate subspace `keep`, which must be stable
    /// under every retained generator.
    pub fn restrict(&self, keep: &[usize], generators: &[String]) -> Result<Self> {
        let mut gens = BTreeMap::new();
        for name in generators {
            let g = self.generators.get(name).ok_or_else(|| Error::Domain(format!("unknown generator {}", name)))?;
            for &j in keep {
                for i in 0..self.dim() {
                    if !keep.contains(&i) && !g.matrix.get(i, j).is_zero() {
                        return Err(Error::Domain(format!("subspace not stable under {}", name)));
                    }
                }
            }
            gens.insert(name.clone(), Generator { degree: g.degree, matrix: g.matrix.select(keep, keep) });
        }
        GradedOperatorModule::new(keep.iter().map(|&b| self.degrees[b]).collect(), gens)
    }
}
