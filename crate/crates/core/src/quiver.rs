//! Quivers with loops and their Borcherds–Cartan data.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{linear_power, MPoly};
use crate::rat::Rat;

/// A quiver as read from a file: vertex names, loop counts and arrows.
///
/// Arrows are kept as written; repetition encodes multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverDatum {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub loops: BTreeMap<String, u32>,
    #[serde(default)]
    pub arrows: Vec<[String; 2]>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum VertexClass {
    /// `a_ii = 2`
    Real,
    /// `a_ii = 0`
    Isotropic,
    /// `a_ii < 0`
    Imaginary,
}

impl VertexClass {
    pub fn label(&self) -> &'static str {
        match self {
            VertexClass::Real => "I+",
            VertexClass::Isotropic => "I0",
            VertexClass::Imaginary => "I-",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanDatum {
    pub a: Vec<Vec<i64>>,
    pub class: Vec<VertexClass>,
}

impl QuiverDatum {
    pub fn new(vertices: &[&str], loops: &[(&str, u32)], arrows: &[(&str, &str)]) -> Result<QuiverDatum> {
        let q = QuiverDatum {
            vertices: vertices.iter().map(|s| s.to_string()).collect(),
            loops: loops.iter().map(|(s, h)| (s.to_string(), *h)).collect(),
            arrows: arrows.iter().map(|(s, t)| [s.to_string(), t.to_string()]).collect(),
        };
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<()> {
        if self.vertices.is_empty() {
            return Err(Error::QuiverFile { field: "vertices".into(), detail: "no vertices".into() });
        }
        for (i, v) in self.vertices.iter().enumerate() {
            if v.is_empty() || v.contains(|c: char| c == ',' || c == '(' || c == ')' || c.is_whitespace()) {
                return Err(Error::QuiverFile { field: "vertices".into(), detail: format!("invalid vertex name {:?}", v) });
            }
            if self.vertices[..i].contains(v) {
                return Err(Error::QuiverFile { field: "vertices".into(), detail: format!("duplicate vertex {:?}", v) });
            }
        }
        for name in self.loops.keys() {
            if !self.vertices.contains(name) {
                return Err(Error::QuiverFile { field: "loops".into(), detail: format!("unknown vertex {:?}", name) });
            }
        }
        for [s, t] in &self.arrows {
            for v in [s, t] {
                if !self.vertices.contains(v) {
                    return Err(Error::QuiverFile { field: "arrows".into(), detail: format!("unknown vertex {:?}", v) });
                }
            }
            if s == t {
                return Err(Error::QuiverFile {
                    field: "arrows".into(),
                    detail: format!("arrow {} -> {} is a loop; list it under `loops`", s, t),
                });
            }
        }
        Ok(())
    }

    pub fn from_toml(text: &str) -> Result<QuiverDatum> {
        let q: QuiverDatum = toml::from_str(text).map_err(|e| {
            let msg = e.message().to_string();
            // the offending line usually names the key; fall back to the message
            let line = e.span().map_or("", |s| {
                let start = text[..s.start].rfind('\n').map_or(0, |p| p + 1);
                let end = text[s.start..].find('\n').map_or(text.len(), |p| s.start + p);
                &text[start..end]
            });
            let fields = ["vertices", "loops", "arrows"];
            let field = fields
                .iter()
                .find(|f| line.trim_start().starts_with(*f))
                .or_else(|| fields.iter().find(|f| msg.contains(*f)))
                .map_or("document", |f| f);
            Error::QuiverFile { field: field.to_string(), detail: msg }
        })?;
        q.validate()?;
        Ok(q)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("quiver serializes")
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.vertices.iter().position(|v| v == name).ok_or_else(|| Error::Domain(format!("unknown vertex {:?}", name)))
    }

    pub fn name(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    /// Number of loops at vertex `i`.
    pub fn h(&self, i: usize) -> u32 {
        self.loops.get(&self.vertices[i]).copied().unwrap_or(0)
    }

    /// Number of arrows `i -> j`.
    pub fn h_arrows(&self, i: usize, j: usize) -> u32 {
        let (a, b) = (&self.vertices[i], &self.vertices[j]);
        self.arrows.iter().filter(|[s, t]| s == a && t == b).count() as u32
    }

    pub fn cartan(&self) -> CartanDatum {
        let n = self.num_vertices();
        let mut a = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                a[i][j] = if i == j {
                    2 - 2 * self.h(i) as i64
                } else {
                    -(self.h_arrows(i, j) as i64) - self.h_arrows(j, i) as i64
                };
            }
        }
        let class = (0..n)
            .map(|i| match a[i][i] {
                2 => VertexClass::Real,
                0 => VertexClass::Isotropic,
                _ => VertexClass::Imaginary,
            })
            .collect();
        CartanDatum { a, class }
    }
}

impl fmt::Display for CartanDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.a {
            let s: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", s.join(", "))?;
        }
        Ok(())
    }
}

/// `H_i(u, v) = (-1)^{a_ii/2} (u - v)^{-a_ii}` for `i` not in `I+`.
pub fn h_poly(q: &QuiverDatum, i: usize) -> Result<MPoly> {
    let aii = 2 - 2 * q.h(i) as i64;
    if aii == 2 {
        return Err(Error::Domain(format!("H is not defined for the loopless vertex {}", q.name(i))));
    }
    let sign = if (aii / 2) % 2 == 0 { Rat::ONE } else { -Rat::ONE };
    Ok(linear_power(2, 0, 1, (-aii) as u32).scale(sign))
}

/// `Q_ij(u, v) = (-1)^{h_ij} (u - v)^{-a_ij}` for `i != j`.
pub fn q_poly(q: &QuiverDatum, i: usize, j: usize) -> Result<MPoly> {
    if i == j {
        return Err(Error::Domain("Q is defined for distinct vertices only".into()));
    }
    let hij = q.h_arrows(i, j);
    let e = q.h_arrows(i, j) + q.h_arrows(j, i);
    let sign = if hij.is_multiple_of(2) { Rat::ONE } else { -Rat::ONE };
    Ok(linear_power(2, 0, 1, e).scale(sign))
}

/// The quivers used throughout the test suites.
pub mod examples {
    use super::QuiverDatum;

    pub fn loopless_a1() -> QuiverDatum {
        QuiverDatum::new(&["i"], &[], &[]).unwrap()
    }

    pub fn loopless_a2() -> QuiverDatum {
        QuiverDatum::new(&["i", "j"], &[], &[("i", "j")]).unwrap()
    }

    pub fn jordan() -> QuiverDatum {
        QuiverDatum::new(&["i"], &[("i", 1)], &[]).unwrap()
    }

    pub fn two_loop() -> QuiverDatum {
        QuiverDatum::new(&["i"], &[("i", 2)], &[]).unwrap()
    }

    /// Loopless `i`, Jordan `j`, one arrow `i -> j`.
    pub fn jordan_plus_loopless() -> QuiverDatum {
        QuiverDatum::new(&["i", "j"], &[("j", 1)], &[("i", "j")]).unwrap()
    }

    /// Five vertices with no arrows: two loopless, two Jordan, one with two loops.
    pub fn disconnected() -> QuiverDatum {
        QuiverDatum::new(&["a", "b", "c", "d", "e"], &[("c", 1), ("d", 1), ("e", 2)], &[]).unwrap()
    }

    pub fn all_test_quivers() -> Vec<(&'static str, QuiverDatum)> {
        vec![
            ("loopless A1", loopless_a1()),
            ("loopless A2", loopless_a2()),
            ("Jordan", jordan()),
            ("two-loop", two_loop()),
            ("Jordan + loopless", jordan_plus_loopless()),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::examples::*;
    use super::*;

    #[test]
    fn cartan_examples() {
        assert_eq!(loopless_a1().cartan().a, vec![vec![2]]);
        assert_eq!(loopless_a1().cartan().class, vec![VertexClass::Real]);
        assert_eq!(jordan().cartan().a, vec![vec![0]]);
        assert_eq!(jordan().cartan().class, vec![VertexClass::Isotropic]);
        assert_eq!(two_loop().cartan().a, vec![vec![-2]]);
        assert_eq!(two_loop().cartan().class, vec![VertexClass::Imaginary]);
        assert_eq!(loopless_a2().cartan().a, vec![vec![2, -1], vec![-1, 2]]);
    }

    #[test]
    fn relation_polynomials() {
        let u = MPoly::var(2, 0);
        let v = MPoly::var(2, 1);
        assert_eq!(h_poly(&jordan(), 0).unwrap(), MPoly::one(2));
        let d = u.sub(&v);
        assert_eq!(h_poly(&two_loop(), 0).unwrap(), d.mul(&d).scale(-Rat::ONE));
        assert!(h_poly(&loopless_a1(), 0).is_err());
        let q = loopless_a2();
        assert_eq!(q_poly(&q, 0, 1).unwrap(), v.sub(&u));
        assert_eq!(q_poly(&q, 1, 0).unwrap(), d);
    }

    #[test]
    fn toml_round_trip() {
        let q = jordan_plus_loopless();
        let text = q.to_toml();
        let back = QuiverDatum::from_toml(&text).unwrap();
        assert_eq!(back, q);
        assert_eq!(back.to_toml(), text);
    }

    #[test]
    fn malformed_file_names_field() {
        let err = QuiverDatum::from_toml("vertices = [\"i\"]\narrows = [[\"i\", \"k\"]]\n").unwrap_err();
        match err {
            Error::QuiverFile { field, .. } => assert_eq!(field, "arrows"),
            e => panic!("unexpected {:?}", e),
        }
        let err = QuiverDatum::from_toml("vertices = 3\n").unwrap_err();
        match err {
            Error::QuiverFile { field, .. } => assert_eq!(field, "vertices"),
            e => panic!("unexpected {:?}", e),
        }
    }
}
