//! Formal words in the generators `1_i`, `x_k`, `τ_k`.
//!
//! Text syntax: whitespace-separated tokens `e(i1,..,in)`, `x(k)`, `t(k)`
//! with 1-based `k`, read left to right in diagram order (bottom to top).
//! So `e(i,i) x(1) t(1)` is the element `τ_1 x_1 1_ii`.

use std::fmt;

use crate::error::{Error, Result};
use crate::quiver::QuiverDatum;

use super::Seq;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Gen {
    Idem(Seq),
    /// 0-based strand.
    X(usize),
    /// 0-based crossing of strands `k`, `k+1`.
    T(usize),
}

/// Generators in diagram order: `gens[0]` is applied first.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Word {
    pub gens: Vec<Gen>,
}

impl Word {
    pub fn new(gens: Vec<Gen>) -> Word {
        Word { gens }
    }

    pub fn starting_at(seq: Seq) -> Word {
        Word { gens: vec![Gen::Idem(seq)] }
    }

    pub fn push(&mut self, g: Gen) {
        self.gens.push(g);
    }

    /// `self` followed by `other` in diagram order, i.e. the product `other · self`.
    pub fn then(&self, other: &Word) -> Word {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Word { gens }
    }

    pub fn parse(text: &str, quiver: &QuiverDatum) -> Result<Word> {
        let mut gens = Vec::new();
        for (pos, tok) in text.split_whitespace().enumerate() {
            let bad = |d: &str| Error::Parse(format!("token {} ({:?}): {}", pos + 1, tok, d));
            let (head, rest) = tok.split_once('(').ok_or_else(|| bad("expected e(..), x(k) or t(k)"))?;
            let inner = rest.strip_suffix(')').ok_or_else(|| bad("missing closing parenthesis"))?;
            match head {
                "e" => {
                    let mut seq = Vec::new();
                    if !inner.is_empty() {
                        for name in inner.split(',') {
                            seq.push(quiver.index_of(name.trim()).map_err(|_| bad(&format!("unknown vertex {:?}", name)))?);
                        }
                    }
                    gens.push(Gen::Idem(seq));
                }
                "x" | "t" => {
                    let k: usize = inner.trim().parse().map_err(|_| bad("index must be a positive integer"))?;
                    if k == 0 {
                        return Err(bad("indices are 1-based"));
                    }
                    gens.push(if head == "x" { Gen::X(k - 1) } else { Gen::T(k - 1) });
                }
                _ => return Err(bad("unknown generator")),
            }
        }
        Ok(Word { gens })
    }

    pub fn display<'a>(&'a self, quiver: &'a QuiverDatum) -> impl fmt::Display + 'a {
        WordDisplay { word: self, quiver }
    }
}

struct WordDisplay<'a> {
    word: &'a Word,
    quiver: &'a QuiverDatum,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, g) in self.word.gens.iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            match g {
                Gen::Idem(s) => {
                    let names: Vec<&str> = s.iter().map(|&i| self.quiver.name(i)).collect();
                    write!(f, "e({})", names.join(","))?
                }
                Gen::X(k) => write!(f, "x({})", k + 1)?,
                Gen::T(k) => write!(f, "t({})", k + 1)?,
            }
        }
        Ok(())
    }
}
