//! Words over the generators of a right-angled Coxeter group.
//!
//! Two reduced words represent the same element iff they differ by swaps of
//! adjacent commuting letters, so an element is a trace over the commutation
//! graph. `reduce` removes cancelling pairs `s ... s` whose interior commutes
//! with `s`; `normal_form` picks the lexicographically least linearization.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{DefiningGraph, GenSet};

/// Default cap on enumeration radii.
pub const DEFAULT_RADIUS_CAP: usize = 10;

const IDENTITY_ALT: &str = "ε";

/// How the empty word is written for `g`.
pub fn identity_symbol(g: &DefiningGraph) -> &'static str {
    if g.index_of("e").is_some() {
        IDENTITY_ALT
    } else {
        "e"
    }
}

/// A finite sequence of generator indices.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.0)
    }
}

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Parses space-separated labels. The identity is a blank string, `"ε"`,
    /// or `"e"` when no generator is named `e`.
    pub fn parse(g: &DefiningGraph, text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed == IDENTITY_ALT || (trimmed == "e" && g.index_of("e").is_none()) {
            return Ok(Word::empty());
        }
        trimmed
            .split_whitespace()
            .map(|l| {
                g.index_of(l)
                    .map(|i| i as u8)
                    .ok_or_else(|| Error::UnknownGenerator(l.to_string()))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn from_gens(g: &DefiningGraph, gens: &[usize]) -> Result<Self> {
        gens.iter()
            .map(|&i| {
                if i < g.len() {
                    Ok(i as u8)
                } else {
                    Err(Error::UnknownGenerator(format!("#{i}")))
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub(crate) fn from_raw(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    /// Renders as space-separated labels. The identity is `"e"`, or `"ε"`
    /// when `e` is itself a generator label.
    pub fn render(&self, g: &DefiningGraph) -> String {
        if self.0.is_empty() {
            return identity_symbol(g).to_string();
        }
        self.0
            .iter()
            .map(|&i| g.label(i as usize))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn letters(&self) -> impl ExactSizeIterator<Item = usize> + DoubleEndedIterator + '_ {
        self.0.iter().map(|&i| i as usize)
    }

    pub fn letter(&self, pos: usize) -> usize {
        self.0[pos] as usize
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Word for the inverse element; generators are involutions.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// The word repeated `n` times.
    pub fn pow(&self, n: usize) -> Word {
        Word(self.0.repeat(n))
    }

    /// Set of letters occurring in this expression (not necessarily reduced).
    pub fn letter_set(&self) -> GenSet {
        self.0.iter().fold(0, |m, &i| m | 1 << i)
    }

    /// Number of occurrences of generator `s`.
    pub fn count(&self, s: usize) -> usize {
        self.0.iter().filter(|&&i| i as usize == s).count()
    }
}

/// A word certified to have minimal length for its element.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ReducedWord(Word);

impl ReducedWord {
    /// Accepts `w` only if it is already reduced.
    pub fn new(g: &DefiningGraph, w: Word) -> Result<Self> {
        if reduce(g, &w).len() == w.len() {
            Ok(ReducedWord(w))
        } else {
            Err(Error::NotReduced(w.render(g)))
        }
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::ops::Deref for ReducedWord {
    type Target = Word;
    fn deref(&self) -> &Word {
        &self.0
    }
}

/// Index of a letter equal to `s` that can be moved to the end of `letters`,
/// i.e. `letters · s` is shorter than `letters`.
fn right_cancel_position(g: &DefiningGraph, letters: &[u8], s: u8) -> Option<usize> {
    let nbrs = g.neighbors(s as usize);
    for (pos, &x) in letters.iter().enumerate().rev() {
        if x == s {
            return Some(pos);
        }
        if nbrs >> x & 1 == 0 {
            return None;
        }
    }
    None
}

/// Reduces `w`, cancelling the earliest-completed pair first.
///
/// Letters are appended one at a time to a reduced prefix; an incoming `s`
/// cancels against the last `s` of the prefix when everything after that
/// `s` commutes with it. Each prefix stays reduced, so the result is.
pub fn reduce(g: &DefiningGraph, w: &Word) -> ReducedWord {
    let mut out: Vec<u8> = Vec::with_capacity(w.len());
    for &s in &w.0 {
        match right_cancel_position(g, &out, s) {
            Some(pos) => {
                out.remove(pos);
            }
            None => out.push(s),
        }
    }
    ReducedWord(Word(out))
}

/// Lexicographically least word among the linearizations of a reduced word.
fn lex_least(g: &DefiningGraph, mut rest: Vec<u8>) -> Vec<u8> {
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut prefix: GenSet = 0;
        let mut best: Option<(u8, usize)> = None;
        for (pos, &x) in rest.iter().enumerate() {
            // x can be moved to the front iff everything before it commutes
            // with it and is a different letter.
            if prefix & !g.neighbors(x as usize) == 0 && best.is_none_or(|(b, _)| x < b) {
                best = Some((x, pos));
            }
            prefix |= 1 << x;
            if prefix == g.all() {
                break;
            }
        }
        let (x, pos) = best.expect("the first letter is always initial");
        out.push(x);
        rest.remove(pos);
    }
    out
}

/// Canonical representative: the lexicographically least reduced word, under
/// vertex declaration order, representing the same element as `w`.
pub fn normal_form(g: &DefiningGraph, w: &Word) -> ReducedWord {
    let reduced = reduce(g, w);
    ReducedWord(Word(lex_least(g, reduced.into_word().0)))
}

/// Group equality of two words.
pub fn equal(g: &DefiningGraph, a: &Word, b: &Word) -> bool {
    normal_form(g, a) == normal_form(g, b)
}

/// Image in the abelianization `(Z/2)^S`: one bit per generator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParityVector(pub GenSet);

impl ParityVector {
    pub fn bit(&self, s: usize) -> bool {
        self.0 >> s & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.0 == 0
    }

    pub fn is_all_ones(&self, g: &DefiningGraph) -> bool {
        self.0 == g.all()
    }

    /// Bit string in vertex order, e.g. `"11100"`.
    pub fn to_bits(&self, g: &DefiningGraph) -> String {
        (0..g.len()).map(|i| if self.bit(i) { '1' } else { '0' }).collect()
    }

    pub fn from_bits(g: &DefiningGraph, bits: &str) -> Result<Self> {
        if bits.len() != g.len() {
            return Err(Error::InvalidSubgroup(format!(
                "bit string `{bits}` has length {}, expected {}",
                bits.len(),
                g.len()
            )));
        }
        let mut v = 0u64;
        for (i, c) in bits.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v |= 1 << i,
                _ => {
                    return Err(Error::InvalidSubgroup(format!(
                        "bit string `{bits}` contains `{c}`"
                    )))
                }
            }
        }
        Ok(ParityVector(v))
    }

    /// `(label, bit)` pairs in vertex order.
    pub fn entries(&self, g: &DefiningGraph) -> Vec<(String, u8)> {
        (0..g.len())
            .map(|i| (g.label(i).to_string(), self.bit(i) as u8))
            .collect()
    }
}

pub fn parity_vector(w: &Word) -> ParityVector {
    ParityVector(w.0.iter().fold(0, |m, &i| m ^ (1 << i)))
}

/// Generators occurring in a reduced expression of `w`.
pub fn support(g: &DefiningGraph, w: &Word) -> GenSet {
    reduce(g, w).letter_set()
}

/// Shortlex order: length first, then lexicographic by vertex order.
pub fn shortlex_cmp(a: &Word, b: &Word) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.0.cmp(&b.0))
}

/// Every element of reduced length at most `radius`, as normal forms in
/// shortlex order, using the default cap.
pub fn enumerate_ball(g: &DefiningGraph, radius: usize) -> Result<Vec<Word>> {
    enumerate_ball_capped(g, radius, DEFAULT_RADIUS_CAP)
}

pub fn enumerate_ball_capped(g: &DefiningGraph, radius: usize, cap: usize) -> Result<Vec<Word>> {
    if radius > cap {
        return Err(Error::RadiusExceedsCap { radius, cap });
    }
    let mut ball = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..radius {
        let mut next: HashSet<Word> = HashSet::new();
        for w in &layer {
            for s in 0..g.len() as u8 {
                if right_cancel_position(g, &w.0, s).is_some() {
                    continue;
                }
                let mut letters = w.0.clone();
                letters.push(s);
                next.insert(Word(lex_least(g, letters)));
            }
        }
        if next.is_empty() {
            break;
        }
        let mut next: Vec<Word> = next.into_iter().collect();
        next.sort();
        ball.extend(next.iter().cloned());
        layer = next;
    }
    Ok(ball)
}
