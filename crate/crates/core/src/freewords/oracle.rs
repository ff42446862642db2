//! Classical decision procedure: minimize total cyclic length by Whitehead
//! automorphisms, then read off the Whitehead graph. Shares nothing with the
//! engine beyond the word types.

use serde::Serialize;
use thiserror::Error;

use super::whitehead::WhiteheadGraph;
use super::{Letter, Word, WordSet};

pub const DEFAULT_BUDGET: usize = 1_000_000;

/// The Whitehead automorphism fixing `a` and sending each other letter `x`
/// to `[a^-1 if x^-1 in A] x [a if x in A]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Whitehead {
    /// Bit `2g + inverse` set for each letter of `A`.
    pub set: u64,
    pub multiplier: Letter,
}

fn bit(x: Letter) -> u64 {
    1 << (2 * x.generator + usize::from(x.inverse))
}

impl Serialize for Letter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_char(self.to_char())
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// All type II Whitehead automorphisms of rank `rank`, in a fixed order.
pub fn whitehead_automorphisms(rank: usize) -> impl Iterator<Item = Whitehead> {
    let letters: Vec<Letter> = (0..rank)
        .flat_map(|g| [Letter::new(g, false), Letter::new(g, true)])
        .collect();
    letters.clone().into_iter().flat_map(move |a| {
        let others: Vec<Letter> = letters.iter().copied().filter(|x| x.generator != a.generator).collect();
        (0u64..1 << others.len()).filter(|&m| m != 0).map(move |mask| {
            let set = others
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .fold(bit(a), |s, (_, &x)| s | bit(x));
            Whitehead { set, multiplier: a }
        })
    })
}

pub fn apply_whitehead(phi: &Whitehead, w: &Word) -> Word {
    let a = phi.multiplier;
    let mut out = Vec::with_capacity(w.len() * 3);
    for &x in w.letters() {
        if x.generator == a.generator {
            out.push(x);
            continue;
        }
        if phi.set & bit(x.inv()) != 0 {
            out.push(a.inv());
        }
        out.push(x);
        if phi.set & bit(x) != 0 {
            out.push(a);
        }
    }
    Word::new(&out).expect("automorphisms preserve nontriviality")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("budget of {budget} automorphism evaluations exhausted")]
    BudgetExceeded { budget: usize },
    #[error("Whitehead graph of the minimized words {minimized} is connected with a cut vertex")]
    CutVertexAtMinimum { minimized: String },
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleVerdict {
    pub separable: bool,
    pub minimized: Vec<Word>,
    pub steps: usize,
    pub evaluations: usize,
}

/// Minimizes by strictly length-decreasing Whitehead automorphisms, taking
/// the shortest image at each step (ties broken by word order), then decides
/// by the Whitehead graph at the minimum: disconnected means separable,
/// connected without cut vertex means not separable, anything else is
/// inconclusive.
pub fn whitehead_oracle(ws: &WordSet, budget: usize) -> Result<OracleVerdict, OracleError> {
    let rank = ws.rank();
    let mut words: Vec<Word> = ws.words().to_vec();
    let mut total: usize = words.iter().map(Word::len).sum();
    let mut evaluations = 0;
    let mut steps = 0;
    loop {
        let mut best: Option<(usize, Vec<Word>)> = None;
        for phi in whitehead_automorphisms(rank) {
            evaluations += 1;
            if evaluations > budget {
                return Err(OracleError::BudgetExceeded { budget });
            }
            let image: Vec<Word> = words.iter().map(|w| apply_whitehead(&phi, w)).collect();
            let len: usize = image.iter().map(Word::len).sum();
            if len < total && best.as_ref().is_none_or(|(l, b)| (len, &image) < (*l, b)) {
                best = Some((len, image));
            }
        }
        match best {
            Some((len, image)) => {
                total = len;
                words = image;
                steps += 1;
            }
            None => break,
        }
    }
    let minimized = WordSet {
        rank,
        words: words.clone(),
    };
    let wh = WhiteheadGraph::new(&minimized);
    let separable = if !wh.is_connected() {
        true
    } else if wh.cut_vertices().is_empty() {
        false
    } else {
        return Err(OracleError::CutVertexAtMinimum {
            minimized: minimized.to_string(),
        });
    };
    Ok(OracleVerdict {
        separable,
        minimized: words,
        steps,
        evaluations,
    })
}
