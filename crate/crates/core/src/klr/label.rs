//! Labels of projective modules: sequences of plain letters, divided powers
//! `i^(m)` at loopless vertices and parameters `i[n]` at Jordan-type vertices.

use std::fmt;

use crate::error::{Error, Result};
use crate::quiver::QuiverDatum;
use crate::rat::Rat;

use super::{Element, KlrAlgebra, Seq, Weight};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Block {
    Plain(usize),
    /// `i^(m)`, realized by the divided-power idempotent.
    Divided(usize, usize),
    /// `i[n]`, realized by the symmetrizer of `R(ni)`.
    Param(usize, usize),
}

impl Block {
    pub fn vertex(&self) -> usize {
        match *self {
            Block::Plain(i) | Block::Divided(i, _) | Block::Param(i, _) => i,
        }
    }

    pub fn len(&self) -> usize {
        match *self {
            Block::Plain(_) => 1,
            Block::Divided(_, m) | Block::Param(_, m) => m,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Default)]
pub struct Label(pub Vec<Block>);

impl Label {
    pub fn new(blocks: Vec<Block>) -> Label {
        Label(blocks)
    }

    pub fn plain(seq: &[usize]) -> Label {
        Label(seq.iter().map(|&i| Block::Plain(i)).collect())
    }

    pub fn blocks(&self) -> &[Block] {
        &self.0
    }

    pub fn seq(&self) -> Seq {
        self.0.iter().flat_map(|b| std::iter::repeat_n(b.vertex(), b.len())).collect()
    }

    pub fn weight(&self, num_vertices: usize) -> Weight {
        Weight::of_seq(num_vertices, &self.seq())
    }

    /// `Σ m(m-1)/2` over the divided-power blocks.
    pub fn shift(&self) -> i64 {
        self.0
            .iter()
            .map(|b| match *b {
                Block::Divided(_, m) => (m * (m - 1) / 2) as i64,
                _ => 0,
            })
            .sum()
    }

    /// The idempotent of `R(ν)` cutting out this label.
    pub fn idempotent(&self, alg: &KlrAlgebra) -> Result<Element> {
        let mut e = Element::from_term(Weight::zero(alg.num_vertices()), super::Term::idempotent(vec![]), Rat::ONE);
        for b in &self.0 {
            let piece = match *b {
                Block::Plain(i) => alg.idempotent(&[i]),
                Block::Divided(i, m) => alg.divided_power_idempotent(i, m)?,
                Block::Param(i, n) => {
                    if n == 0 {
                        return Err(Error::Domain("parameter block of size 0".into()));
                    }
                    alg.symmetrizer(i, n)?
                }
            };
            e = alg.tensor(&e, &piece);
        }
        Ok(e)
    }

    /// Parses tokens `i`, `i^(m)`, `i[n]` separated by whitespace.
    pub fn parse(text: &str, quiver: &QuiverDatum) -> Result<Label> {
        let mut blocks = Vec::new();
        for tok in text.split_whitespace() {
            let bad = |d: &str| Error::Parse(format!("label token {:?}: {}", tok, d));
            let num = |s: &str| s.parse::<usize>().ok().filter(|&m| m > 0).ok_or_else(|| bad("expected a positive integer"));
            let block = if let Some((name, rest)) = tok.split_once("^(") {
                let m = num(rest.strip_suffix(')').ok_or_else(|| bad("missing ')'"))?)?;
                Block::Divided(quiver.index_of(name).map_err(|_| bad("unknown vertex"))?, m)
            } else if let Some((name, rest)) = tok.split_once('[') {
                let n = num(rest.strip_suffix(']').ok_or_else(|| bad("missing ']'"))?)?;
                Block::Param(quiver.index_of(name).map_err(|_| bad("unknown vertex"))?, n)
            } else {
                Block::Plain(quiver.index_of(tok).map_err(|_| bad("unknown vertex"))?)
            };
            blocks.push(block);
        }
        Ok(Label(blocks))
    }

    pub fn display<'a>(&'a self, quiver: &'a QuiverDatum) -> impl fmt::Display + 'a {
        LabelDisplay { label: self, quiver }
    }
}

struct LabelDisplay<'a> {
    label: &'a Label,
    quiver: &'a QuiverDatum,
}

impl fmt::Display for LabelDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, b) in self.label.0.iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            match *b {
                Block::Plain(i) => write!(f, "{}", self.quiver.name(i))?,
                Block::Divided(i, m) => write!(f, "{}^({})", self.quiver.name(i), m)?,
                Block::Param(i, m) => write!(f, "{}[{}]", self.quiver.name(i), m)?,
            }
        }
        Ok(())
    }
}
