//! Sufficient certificates for essential elements.
//!
//! An element is essential when its parabolic closure is the whole group.
//! Two certificates are checked here:
//!
//! * every generator occurs an odd number of times (a parity condition, so
//!   independent of the chosen expression);
//! * a full-support reduced word that is `s`-good for every generator `s`.
//!
//! For a reduced word split at the occurrences of `s` as
//! `w0 s w1 s ... s wk s w(k+1)`, an *`s`-blocker* is a letter that does not
//! commute with `s`. The word is `s`-minimal when every inner block `w1..wk`
//! holds a blocker, and `s`-good when additionally `w(k+1) w0` holds one (or
//! `s` occurs once).
//!
//! Both notions are invariant under commutation moves: blockers can never
//! cross an `s`, so any reduced expression of an element gives the same
//! answer.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DefiningGraph, GenSet};
use crate::word::{
    enumerate_ball_capped, parity_vector, reduce, support, ReducedWord, Word, DEFAULT_RADIUS_CAP,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum GoodnessStatus {
    Good,
    /// Never produced for reduced input; kept so a non-minimal word would be
    /// reported rather than hidden.
    NotMinimalImpossible,
    NotGood,
    Absent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorStatus {
    pub generator: String,
    pub status: GoodnessStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GoodnessReport {
    pub per_generator: Vec<GeneratorStatus>,
    pub bad_set: Vec<String>,
    pub full_support: bool,
    #[serde(skip)]
    pub bad_mask: GenSet,
}

/// Union of the letters of `w0` and `w(k+1)`, plus whether every inner block
/// contains an `s`-blocker. `None` if `s` does not occur.
struct Blocks {
    occurrences: usize,
    inner_blocked: bool,
    outer_letters: GenSet,
}

fn blocks(g: &DefiningGraph, w: &Word, s: usize) -> Option<Blocks> {
    let blockers = g.blockers(s);
    let positions: Vec<usize> = w
        .letters()
        .enumerate()
        .filter(|&(_, x)| x == s)
        .map(|(p, _)| p)
        .collect();
    let (&first, &last) = (positions.first()?, positions.last()?);
    let inner_blocked = positions.windows(2).all(|pair| {
        (pair[0] + 1..pair[1]).any(|p| blockers >> w.letter(p) & 1 == 1)
    });
    let outer_letters = (0..first)
        .chain(last + 1..w.len())
        .fold(0, |m, p| m | 1 << w.letter(p));
    Some(Blocks {
        occurrences: positions.len(),
        inner_blocked,
        outer_letters,
    })
}

pub fn is_s_minimal(g: &DefiningGraph, w: &ReducedWord, s: usize) -> Result<bool> {
    let b = blocks(g, w, s).ok_or_else(|| Error::GeneratorAbsent(g.label(s).to_string()))?;
    Ok(b.inner_blocked)
}

pub fn is_s_good(g: &DefiningGraph, w: &ReducedWord, s: usize) -> Result<bool> {
    match status(g, w, s) {
        GoodnessStatus::Absent => Err(Error::GeneratorAbsent(g.label(s).to_string())),
        st => Ok(st == GoodnessStatus::Good),
    }
}

fn status(g: &DefiningGraph, w: &Word, s: usize) -> GoodnessStatus {
    match blocks(g, w, s) {
        None => GoodnessStatus::Absent,
        Some(b) if b.occurrences == 1 => GoodnessStatus::Good,
        Some(b) if !b.inner_blocked => GoodnessStatus::NotMinimalImpossible,
        Some(b) if b.outer_letters & g.blockers(s) != 0 => GoodnessStatus::Good,
        Some(_) => GoodnessStatus::NotGood,
    }
}

/// Per-generator statuses; does not require full support.
pub fn goodness(g: &DefiningGraph, w: &ReducedWord) -> GoodnessReport {
    let statuses: Vec<GoodnessStatus> = (0..g.len()).map(|s| status(g, w, s)).collect();
    let bad_mask = statuses
        .iter()
        .enumerate()
        .filter(|(_, st)| **st == GoodnessStatus::NotGood)
        .fold(0, |m, (s, _)| m | 1 << s);
    GoodnessReport {
        per_generator: statuses
            .iter()
            .enumerate()
            .map(|(s, &status)| GeneratorStatus {
                generator: g.label(s).to_string(),
                status,
            })
            .collect(),
        bad_set: g.set_labels(bad_mask),
        full_support: statuses.iter().all(|st| *st != GoodnessStatus::Absent),
        bad_mask,
    }
}

/// The bad set `B(w)` of a full-support reduced word.
pub fn bad_set(g: &DefiningGraph, w: &ReducedWord) -> Result<GoodnessReport> {
    let missing = g.all() & !w.letter_set();
    if missing != 0 {
        return Err(Error::MissingGenerators(g.set_labels(missing)));
    }
    Ok(goodness(g, w))
}

/// Mask of bad generators; generators absent from `w` are not counted.
pub(crate) fn bad_mask(g: &DefiningGraph, w: &Word) -> GenSet {
    (0..g.len())
        .filter(|&s| status(g, w, s) == GoodnessStatus::NotGood)
        .fold(0, |m, s| m | 1 << s)
}

/// Every generator occurs an odd number of times.
pub fn is_all_odd_essential(g: &DefiningGraph, w: &Word) -> bool {
    parity_vector(w).is_all_ones(g)
}

/// The reduced form has full support and is `s`-good for every `s`.
pub fn is_good_essential(g: &DefiningGraph, w: &Word) -> bool {
    let r = reduce(g, w);
    r.letter_set() == g.all() && bad_mask(g, &r) == 0
}

/// Product, in vertex order, of the generators occurring an even number of
/// times in `w`. Left-multiplying by it makes every parity odd.
pub fn find_even_completion(g: &DefiningGraph, w: &Word) -> Word {
    let even = g.all() & !parity_vector(w).0;
    let gens: Vec<usize> = (0..g.len()).filter(|&i| even >> i & 1 == 1).collect();
    Word::from_gens(g, &gens).expect("generators of g")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FalsifyOutcome {
    NoCounterexample { radius: usize },
    /// `conjugator · w · conjugator⁻¹` reduces into the proper standard
    /// parabolic subgroup on `support`.
    Counterexample { conjugator: Word, support: GenSet },
}

impl FalsifyOutcome {
    pub fn is_counterexample(&self) -> bool {
        matches!(self, FalsifyOutcome::Counterexample { .. })
    }
}

/// Bounded search for a conjugate of `w` lying in a proper standard parabolic
/// subgroup. Holds the conjugator ball so it can be reused across words.
#[derive(Debug, Clone)]
pub struct Falsifier {
    radius: usize,
    conjugators: Vec<Word>,
}

impl Falsifier {
    pub fn new(g: &DefiningGraph, radius: usize) -> Result<Self> {
        Self::with_cap(g, radius, DEFAULT_RADIUS_CAP)
    }

    pub fn with_cap(g: &DefiningGraph, radius: usize, cap: usize) -> Result<Self> {
        Ok(Self {
            radius,
            conjugators: enumerate_ball_capped(g, radius, cap)?,
        })
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    /// Returns the shortlex-least conjugator whose conjugate has proper
    /// support, if any.
    pub fn falsify(&self, g: &DefiningGraph, w: &Word) -> FalsifyOutcome {
        let all = g.all();
        let hit = self.conjugators.par_iter().find_map_first(|u| {
            let conj = u.concat(w).concat(&u.inverse());
            let supp = support(g, &conj);
            (supp != all).then(|| (u.clone(), supp))
        });
        match hit {
            Some((conjugator, support)) => FalsifyOutcome::Counterexample { conjugator, support },
            None => FalsifyOutcome::NoCounterexample { radius: self.radius },
        }
    }
}

pub fn falsify_essential(g: &DefiningGraph, w: &Word, conj_radius: usize) -> Result<FalsifyOutcome> {
    Ok(Falsifier::new(g, conj_radius)?.falsify(g, w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::enumerate_ball;

    fn c5() -> DefiningGraph {
        DefiningGraph::cycle(5)
    }

    fn rw(g: &DefiningGraph, s: &str) -> ReducedWord {
        ReducedWord::new(g, Word::parse(g, s).unwrap()).unwrap()
    }

    fn gen(g: &DefiningGraph, l: &str) -> usize {
        g.index_of(l).unwrap()
    }

    // Literal block extraction, kept apart from `blocks`.
    fn good_by_definition(g: &DefiningGraph, w: &Word, s: usize) -> bool {
        let letters: Vec<usize> = w.letters().collect();
        let mut parts: Vec<Vec<usize>> = vec![vec![]];
        for &x in &letters {
            if x == s {
                parts.push(vec![]);
            } else {
                parts.last_mut().unwrap().push(x);
            }
        }
        let k = parts.len() - 2;
        if k == 0 {
            return true;
        }
        let has_blocker = |p: &[usize]| p.iter().any(|&x| !g.commute(x, s));
        let minimal = parts[1..=k].iter().all(|p| has_blocker(p));
        let mut outer = parts[k + 1].clone();
        outer.extend(&parts[0]);
        minimal && has_blocker(&outer)
    }

    #[test]
    fn minimality_examples() {
        let g = c5();
        assert!(is_s_minimal(&g, &rw(&g, "c a c"), gen(&g, "c")).unwrap());
        assert!(is_s_minimal(&g, &rw(&g, "a"), gen(&g, "a")).unwrap());
        assert_eq!(
            is_s_minimal(&g, &rw(&g, "a"), gen(&g, "b")),
            Err(Error::GeneratorAbsent("b".into()))
        );
    }

    #[test]
    fn goodness_examples() {
        let g = c5();
        assert!(!is_s_good(&g, &rw(&g, "c a c"), gen(&g, "c")).unwrap());
        assert!(is_s_good(&g, &rw(&g, "a b c d e"), gen(&g, "a")).unwrap());
        let dcacd = rw(&g, "d c a c d");
        assert!(!is_s_good(&g, &dcacd, gen(&g, "c")).unwrap());
        assert!(!is_s_good(&g, &dcacd, gen(&g, "d")).unwrap());
        assert!(is_s_good(&g, &dcacd, gen(&g, "a")).unwrap());
        assert_eq!(
            is_s_good(&g, &dcacd, gen(&g, "b")),
            Err(Error::GeneratorAbsent("b".into()))
        );
    }

    #[test]
    fn bad_set_examples() {
        let g = c5();
        assert!(bad_set(&g, &rw(&g, "a b c d e")).unwrap().bad_set.is_empty());
        // a occurs twice with nothing outside its two occurrences.
        let r = bad_set(&g, &rw(&g, "a b c d e a")).unwrap();
        assert_eq!(r.bad_set, ["a"]);
        assert!(r.full_support);
        assert_eq!(
            bad_set(&g, &rw(&g, "a b c d")),
            Err(Error::MissingGenerators(vec!["e".into()]))
        );
        let partial = goodness(&g, &rw(&g, "c a c"));
        assert!(!partial.full_support);
        assert_eq!(partial.per_generator[1].status, GoodnessStatus::Absent);
        assert_eq!(partial.bad_set, ["c"]);
    }

    #[test]
    fn certificate_examples() {
        let g = c5();
        let w = |s: &str| Word::parse(&g, s).unwrap();
        assert!(is_all_odd_essential(&g, &w("a b c d e")));
        assert!(!is_all_odd_essential(&g, &w("a b")));
        assert!(is_all_odd_essential(&g, &w("a a a b c d e")));
        assert!(is_good_essential(&g, &w("a b c d e")));
        // e outside the two c's blocks c, so this one is good...
        assert!(is_good_essential(&g, &w("c a c b d e")));
        // ...but here only c's neighbours b, d lie outside.
        assert!(!is_good_essential(&g, &w("c a e c b d")));
        assert!(!is_good_essential(&g, &w("a b")));
    }

    #[test]
    fn even_completion_examples() {
        let g = c5();
        let w = |s: &str| Word::parse(&g, s).unwrap();
        assert_eq!(find_even_completion(&g, &w("a b")).render(&g), "c d e");
        assert!(find_even_completion(&g, &w("a b c d e")).is_empty());
        assert_eq!(find_even_completion(&g, &w("a a")).render(&g), "a b c d e");
    }

    #[test]
    fn falsifier_examples() {
        let g = c5();
        let w = |s: &str| Word::parse(&g, s).unwrap();
        assert_eq!(
            falsify_essential(&g, &w("a"), 2).unwrap(),
            FalsifyOutcome::Counterexample {
                conjugator: Word::empty(),
                support: 1
            }
        );
        assert_eq!(
            falsify_essential(&g, &w("a b c d e"), 3).unwrap(),
            FalsifyOutcome::NoCounterexample { radius: 3 }
        );
        assert_eq!(
            falsify_essential(&g, &w("a"), 11),
            Err(Error::RadiusExceedsCap { radius: 11, cap: 10 })
        );
    }

    #[test]
    fn status_matches_block_definition_over_ball() {
        let g = c5();
        for w in enumerate_ball(&g, 6).unwrap() {
            let r = ReducedWord::new(&g, w.clone()).unwrap();
            for s in 0..g.len() {
                if w.count(s) == 0 {
                    assert_eq!(status(&g, &w, s), GoodnessStatus::Absent);
                    continue;
                }
                // Every reduced word is s-minimal.
                assert!(is_s_minimal(&g, &r, s).unwrap());
                assert_eq!(is_s_good(&g, &r, s).unwrap(), good_by_definition(&g, &w, s));
            }
        }
    }

    #[test]
    fn completion_always_all_odd() {
        let g = c5();
        for w in enumerate_ball(&g, 5).unwrap() {
            let alpha = find_even_completion(&g, &w);
            assert!(is_all_odd_essential(&g, &alpha.concat(&w)));
        }
    }
}
