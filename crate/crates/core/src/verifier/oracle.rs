//! Ground truth for the word problem, independent of `reduce` and
//! `normal_form`: every word up to a length bound is a node, and adjacent
//! commuting swaps and `ss` cancellations (read backwards: insertions) are
//! edges. Two words of length at most `bound - 2` are equal in the group iff
//! they lie in the same component.

use crate::graph::DefiningGraph;
use crate::word::Word;

pub struct ClosureOracle {
    alphabet: usize,
    bound: usize,
    /// `offsets[l]` is the id of the first word of length `l`.
    offsets: Vec<usize>,
    parent: Vec<u32>,
}

impl ClosureOracle {
    /// Closure over all words of length `<= bound`.
    pub fn new(g: &DefiningGraph, bound: usize) -> Self {
        let alphabet = g.len();
        let mut offsets = vec![0usize];
        let mut layer = 1usize;
        for _ in 0..=bound {
            let last = *offsets.last().unwrap();
            offsets.push(last + layer);
            layer *= alphabet;
        }
        let total = *offsets.last().unwrap();
        let mut oracle = ClosureOracle {
            alphabet,
            bound,
            offsets,
            parent: (0..total as u32).collect(),
        };
        let mut letters = Vec::with_capacity(bound);
        for id in 0..total {
            oracle.decode_into(id, &mut letters);
            for i in 0..letters.len().saturating_sub(1) {
                let (x, y) = (letters[i], letters[i + 1]);
                if x == y {
                    let mut shorter = letters.clone();
                    shorter.drain(i..i + 2);
                    let other = oracle.encode(&shorter);
                    oracle.union(id, other);
                } else if g.adjacent(x, y) {
                    letters.swap(i, i + 1);
                    let other = oracle.encode(&letters);
                    letters.swap(i, i + 1);
                    oracle.union(id, other);
                }
            }
        }
        oracle
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    fn encode(&self, letters: &[usize]) -> usize {
        let v = letters.iter().fold(0usize, |acc, &x| acc * self.alphabet + x);
        self.offsets[letters.len()] + v
    }

    fn decode_into(&self, id: usize, out: &mut Vec<usize>) {
        let len = self.offsets.partition_point(|&o| o <= id) - 1;
        let mut v = id - self.offsets[len];
        out.clear();
        out.resize(len, 0);
        for slot in out.iter_mut().rev() {
            *slot = v % self.alphabet;
            v /= self.alphabet;
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let p = self.parent[x] as usize;
            self.parent[x] = self.parent[p];
            x = p;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo as u32;
        }
    }

    /// Component id of `w`; panics if `w` is longer than the bound.
    pub fn class(&mut self, w: &Word) -> usize {
        assert!(w.len() <= self.bound, "word longer than oracle bound");
        let letters: Vec<usize> = w.letters().collect();
        let id = self.encode(&letters);
        self.find(id)
    }

    pub fn same(&mut self, a: &Word, b: &Word) -> bool {
        self.class(a) == self.class(b)
    }

    /// All words of length `<= max_len`, in shortlex order.
    pub fn words_up_to(&self, g: &DefiningGraph, max_len: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let mut letters = Vec::new();
        for id in 0..self.offsets[max_len.min(self.bound) + 1] {
            self.decode_into(id, &mut letters);
            out.push(Word::from_gens(g, &letters).expect("letters within alphabet"));
        }
        out
    }
}
