//! Words in free groups, the double of a rose along a word set, and the
//! separability test.
//!
//! Generators are `b_1..b_n`, written `a, b, c, ...` with uppercase for
//! inverses.

mod oracle;
mod whitehead;

pub use oracle::{
    apply_whitehead, whitehead_automorphisms, whitehead_oracle, OracleError, OracleVerdict, Whitehead, DEFAULT_BUDGET,
};
pub use whitehead::{link_matches_whitehead, WhiteheadGraph, WhiteheadSummary};

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::complex::{Step, Tube, TubularComplex, VertexGraph};
use crate::engine::{self, EngineError, GrushkoDecomposition, NormalForm, Outcome};
use crate::graph::SimplicialGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("rank must be at least 2, got {0}")]
    RankTooSmall(usize),
    #[error("rank {0} exceeds the 26 available letters")]
    RankTooLarge(usize),
    #[error("word {index} is trivial after reduction")]
    Trivial { index: usize },
    #[error("character {ch:?} in word {index} is not a letter")]
    BadCharacter { index: usize, ch: char },
    #[error("letter {ch:?} in word {index} is outside rank {rank}")]
    OutOfRange { index: usize, ch: char, rank: usize },
    #[error("no words given")]
    Empty,
}

/// `b_{generator+1}` or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Letter {
        Letter { generator, inverse }
    }

    pub fn inv(self) -> Letter {
        Letter {
            inverse: !self.inverse,
            ..self
        }
    }

    pub fn to_char(self) -> char {
        let c = (b'a' + self.generator as u8) as char;
        if self.inverse {
            c.to_ascii_uppercase()
        } else {
            c
        }
    }
}

/// Free reduction followed by cyclic reduction.
pub fn cyclic_reduce(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &x in letters {
        if out.last() == Some(&x.inv()) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    let (mut i, mut j) = (0, out.len());
    while j - i >= 2 && out[i] == out[j - 1].inv() {
        i += 1;
        j -= 1;
    }
    out[i..j].to_vec()
}

/// A nontrivial cyclically reduced word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    /// Reduces `letters`; `None` when the result is trivial.
    pub fn new(letters: &[Letter]) -> Option<Word> {
        let r = cyclic_reduce(letters);
        (!r.is_empty()).then_some(Word(r))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|x| x.inv()).collect())
    }

    /// Least rotation of the word or its inverse.
    pub fn canonical(&self) -> Word {
        let mut best = self.0.clone();
        for w in [self.clone(), self.inverse()] {
            let n = w.len();
            for r in 0..n {
                let rot: Vec<Letter> = (0..n).map(|i| w.0[(r + i) % n]).collect();
                if rot < best {
                    best = rot;
                }
            }
        }
        Word(best)
    }
}

/// Cyclically reduced words of length `len` in rank `rank`, one per class
/// under rotation and inversion, ascending.
pub fn cyclic_words(rank: usize, len: usize) -> Vec<Word> {
    let letters: Vec<Letter> = (0..rank)
        .flat_map(|g| [Letter::new(g, false), Letter::new(g, true)])
        .collect();
    let mut out = std::collections::BTreeSet::new();
    let mut stack: Vec<Vec<Letter>> = vec![Vec::new()];
    while let Some(prefix) = stack.pop() {
        if prefix.len() == len {
            if len > 0 && prefix[0] != prefix[len - 1].inv() {
                out.insert(Word(prefix).canonical());
            }
            continue;
        }
        for &x in &letters {
            if prefix.last() != Some(&x.inv()) {
                let mut next = prefix.clone();
                next.push(x);
                stack.push(next);
            }
        }
    }
    out.into_iter().collect()
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|x| write!(f, "{}", x.to_char()))
    }
}

/// A finite set of words in the free group of rank `rank`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WordSet {
    rank: usize,
    words: Vec<Word>,
}

impl WordSet {
    pub fn new(rank: usize, words: Vec<Vec<Letter>>) -> Result<WordSet, WordError> {
        check_rank(rank)?;
        if words.is_empty() {
            return Err(WordError::Empty);
        }
        let mut out = Vec::new();
        for (index, w) in words.iter().enumerate() {
            if let Some(x) = w.iter().find(|x| x.generator >= rank) {
                return Err(WordError::OutOfRange {
                    index,
                    ch: x.to_char(),
                    rank,
                });
            }
            out.push(Word::new(w).ok_or(WordError::Trivial { index })?);
        }
        Ok(WordSet { rank, words: out })
    }

    /// Whitespace-separated words; `a..z` are `b_1..b_26`, uppercase are
    /// inverses.
    pub fn parse(rank: usize, text: &str) -> Result<WordSet, WordError> {
        check_rank(rank)?;
        let mut words = Vec::new();
        for (index, token) in text.split_whitespace().enumerate() {
            let mut w = Vec::new();
            for ch in token.chars() {
                if !ch.is_ascii_alphabetic() {
                    return Err(WordError::BadCharacter { index, ch });
                }
                let generator = (ch.to_ascii_lowercase() as u8 - b'a') as usize;
                if generator >= rank {
                    return Err(WordError::OutOfRange { index, ch, rank });
                }
                w.push(Letter::new(generator, ch.is_ascii_uppercase()));
            }
            words.push(w);
        }
        WordSet::new(rank, words)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn total_length(&self) -> usize {
        self.words.iter().map(Word::len).sum()
    }

    /// One representative per class under rotation and inversion, in
    /// first-occurrence order.
    pub fn deduplicated(&self) -> WordSet {
        let mut seen = std::collections::BTreeSet::new();
        let words = self
            .words
            .iter()
            .filter(|w| seen.insert(w.canonical()))
            .cloned()
            .collect();
        WordSet {
            rank: self.rank,
            words,
        }
    }
}

impl fmt::Display for WordSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.words.iter().map(Word::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

fn check_rank(rank: usize) -> Result<(), WordError> {
    if rank < 2 {
        Err(WordError::RankTooSmall(rank))
    } else if rank > 26 {
        Err(WordError::RankTooLarge(rank))
    } else {
        Ok(())
    }
}

/// The rose on `rank` petals, each subdivided into a 3-cycle through the
/// special vertex 0. Petal `i` is `0 -> 1+2i -> 2+2i -> 0` on edges
/// `3i, 3i+1, 3i+2`.
pub fn subdivided_rose(rank: usize) -> SimplicialGraph {
    let mut edges = Vec::new();
    for i in 0..rank {
        let (p, q) = (1 + 2 * i, 2 + 2 * i);
        edges.extend([[0, p], [p, q], [q, 0]]);
    }
    SimplicialGraph::new(1 + 2 * rank, &edges).expect("petals are simplicial")
}

/// The walk in the subdivided rose spelling a word.
pub fn word_walk(w: &Word) -> Vec<Step> {
    w.letters()
        .iter()
        .flat_map(|x| {
            let base = 3 * x.generator;
            if x.inverse {
                [Step::backward(base + 2), Step::backward(base + 1), Step::backward(base)]
            } else {
                [Step::forward(base), Step::forward(base + 1), Step::forward(base + 2)]
            }
        })
        .collect()
}

/// Two copies of the subdivided rose joined by one tube per word (after
/// deduplication up to rotation and inversion), both ends following the
/// word. The special vertex is vertex 0 of each copy.
pub fn build_double(ws: &WordSet) -> TubularComplex {
    let rose = subdivided_rose(ws.rank());
    let graphs = ["r0", "r1"]
        .map(|name| VertexGraph {
            name: name.to_string(),
            graph: rose.clone(),
        })
        .to_vec();
    let tubes = ws
        .deduplicated()
        .words()
        .iter()
        .map(|w| {
            let walk = word_walk(w);
            Tube::new(0, walk.clone(), 1, walk)
        })
        .collect();
    TubularComplex::new(graphs, tubes).expect("walks use rose edges")
}

/// Separability decided on the double. The certificate is the normal form,
/// plus the decomposition when the double splits.
#[derive(Debug, Clone)]
pub struct Separability {
    pub separable: bool,
    pub double: TubularComplex,
    pub normal_form: NormalForm,
    pub decomposition: Option<GrushkoDecomposition>,
}

/// A word set is separable iff the fundamental group of its double is not
/// one-ended, i.e. iff normalization does not end Brady-Meier.
pub fn is_separable(ws: &WordSet) -> Result<Separability, EngineError> {
    let double = build_double(ws);
    let normal_form = engine::normalize(&double)?;
    let separable = normal_form.outcome != Outcome::BradyMeier;
    let decomposition = if separable { Some(engine::grushko(&double)?) } else { None };
    Ok(Separability {
        separable,
        double,
        normal_form,
        decomposition,
    })
}

/// Summary used by the CLI and examples.
#[derive(Debug, Clone, Serialize)]
pub struct SeparabilitySummary {
    pub words: String,
    pub rank: usize,
    pub separable: bool,
    pub outcome: Outcome,
    pub sl_moves: usize,
    pub squares: usize,
    /// Pieces and free rank of the double, when it splits.
    pub pieces: Option<usize>,
    pub free_rank: Option<usize>,
}

impl Separability {
    pub fn summary(&self, ws: &WordSet) -> SeparabilitySummary {
        SeparabilitySummary {
            words: ws.to_string(),
            rank: ws.rank(),
            separable: self.separable,
            outcome: self.normal_form.outcome.clone(),
            sl_moves: self.normal_form.sl_moves(),
            squares: self.double.square_count(),
            pieces: self.decomposition.as_ref().map(|d| d.pieces.len()),
            free_rank: self.decomposition.as_ref().map(|d| d.free_rank),
        }
    }
}
