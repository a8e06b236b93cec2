//! Synthesis of multiplier words that turn an arbitrary element of a
//! parity-kernel subgroup into one whose reduced form is `s`-good for every
//! generator.
//!
//! Each step targets one generator `s`, picks `s'` not commuting with `s` and
//! `s''` not commuting with `s` (type 1) or with `s'` (type 2), and
//! left-multiplies by `(s'' s s')^n` or `(s' s'' s s' s'')^n` respectively.
//! Missing generators are repaired first, then bad ones.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::essential::{bad_mask, is_good_essential};
use crate::graph::{DefiningGraph, GenSet};
use crate::subgroup::SubgroupSpec;
use crate::word::{normal_form, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BlockerVariant {
    /// `s''` does not commute with `s`.
    Type1,
    /// `s''` commutes with `s` but not with `s'`.
    Type2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BlockerChoice {
    pub s: usize,
    pub s_prime: usize,
    pub s_double_prime: usize,
    pub variant: BlockerVariant,
}

fn least(set: GenSet) -> Option<usize> {
    (set != 0).then(|| set.trailing_zeros() as usize)
}

/// Deterministic choice: `s'` is the least non-neighbour of `s`; `s''` is the
/// least remaining non-neighbour of `s`, else of `s'`.
pub fn choose_blockers(g: &DefiningGraph, s: usize) -> Result<BlockerChoice> {
    let no_blocker = || Error::NoBlocker(g.label(s).to_string());
    let s_prime = least(g.blockers(s)).ok_or_else(no_blocker)?;
    let rest = g.all() & !(1 << s) & !(1 << s_prime);
    if let Some(s2) = least(rest & g.blockers(s)) {
        return Ok(BlockerChoice {
            s,
            s_prime,
            s_double_prime: s2,
            variant: BlockerVariant::Type1,
        });
    }
    let s2 = least(rest & g.blockers(s_prime)).ok_or_else(no_blocker)?;
    Ok(BlockerChoice {
        s,
        s_prime,
        s_double_prime: s2,
        variant: BlockerVariant::Type2,
    })
}

/// `(s'' s s')^n` for type 1, `(s' s'' s s' s'')^n` for type 2.
pub fn multiplier_word(choice: &BlockerChoice, n: u32) -> Result<Word> {
    if n < 2 {
        return Err(Error::ExponentTooSmall(n));
    }
    let (s, s1, s2) = (choice.s as u8, choice.s_prime as u8, choice.s_double_prime as u8);
    let period = match choice.variant {
        BlockerVariant::Type1 => vec![s2, s, s1],
        BlockerVariant::Type2 => vec![s1, s2, s, s1, s2],
    };
    Ok(Word::from_raw(period).pow(n as usize))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Phase {
    /// The target generator was absent.
    Missing,
    /// The target generator was bad.
    Bad,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub phase: Phase,
    pub target: usize,
    pub choice: BlockerChoice,
    pub multiplier: Word,
    /// Normal form of the running product after this step.
    pub result: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplierTrace {
    pub steps: Vec<TraceStep>,
    /// Product of the step multipliers, newest leftmost.
    pub total_multiplier: Word,
    pub exponent: u32,
}

impl MultiplierTrace {
    fn new(exponent: u32) -> Self {
        Self {
            steps: Vec::new(),
            total_multiplier: Word::empty(),
            exponent,
        }
    }

    fn push(&mut self, step: TraceStep) {
        self.total_multiplier = step.multiplier.concat(&self.total_multiplier);
        self.steps.push(step);
    }

    /// `later` applied after `self`.
    fn then(mut self, later: MultiplierTrace) -> Self {
        for step in later.steps {
            self.push(step);
        }
        self
    }

    pub fn render(&self, g: &DefiningGraph) -> RenderedTrace {
        RenderedTrace {
            steps: self
                .steps
                .iter()
                .map(|st| RenderedStep {
                    phase: st.phase,
                    target: g.label(st.target).to_string(),
                    s: g.label(st.choice.s).to_string(),
                    s_prime: g.label(st.choice.s_prime).to_string(),
                    s_double_prime: g.label(st.choice.s_double_prime).to_string(),
                    variant: st.choice.variant,
                    multiplier: st.multiplier.render(g),
                    result: st.result.render(g),
                })
                .collect(),
            total_multiplier: self.total_multiplier.render(g),
            exponent: self.exponent,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RenderedStep {
    pub phase: Phase,
    pub target: String,
    pub s: String,
    pub s_prime: String,
    pub s_double_prime: String,
    pub variant: BlockerVariant,
    pub multiplier: String,
    pub result: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RenderedTrace {
    pub steps: Vec<RenderedStep>,
    pub total_multiplier: String,
    pub exponent: u32,
}

fn violation(g: &DefiningGraph, what: String, trace: &MultiplierTrace) -> Error {
    let rendered = serde_json::to_string(&trace.render(g)).unwrap_or_default();
    Error::ContractViolation(format!("{what}; trace: {rendered}"))
}

/// Prepends multipliers until every generator occurs in the reduced word.
pub fn fix_missing(g: &DefiningGraph, w: &Word, n: u32) -> Result<(Word, MultiplierTrace)> {
    if n < 2 {
        return Err(Error::ExponentTooSmall(n));
    }
    let mut current = normal_form(g, w).into_word();
    let mut trace = MultiplierTrace::new(n);
    loop {
        let present = current.letter_set();
        let Some(s) = least(g.all() & !present) else {
            break;
        };
        let choice = choose_blockers(g, s)?;
        let multiplier = multiplier_word(&choice, n)?;
        let next = normal_form(g, &multiplier.concat(&current)).into_word();
        let grown = next.letter_set();
        trace.push(TraceStep {
            phase: Phase::Missing,
            target: s,
            choice,
            multiplier,
            result: next.clone(),
        });
        if grown & (present | 1 << s) != present | 1 << s {
            return Err(violation(
                g,
                format!("repairing `{}` lost generators", g.label(s)),
                &trace,
            ));
        }
        current = next;
    }
    Ok((current, trace))
}

/// Prepends cancellators until the bad set is empty. Requires full support.
pub fn make_good(g: &DefiningGraph, w: &Word, n: u32) -> Result<(Word, MultiplierTrace)> {
    if n < 2 {
        return Err(Error::ExponentTooSmall(n));
    }
    let mut current = normal_form(g, w).into_word();
    let missing = g.all() & !current.letter_set();
    if missing != 0 {
        return Err(Error::MissingGenerators(g.set_labels(missing)));
    }
    let mut trace = MultiplierTrace::new(n);
    let mut bad = bad_mask(g, &current);
    while let Some(s) = least(bad) {
        let choice = choose_blockers(g, s)?;
        let multiplier = multiplier_word(&choice, n)?;
        let next = normal_form(g, &multiplier.concat(&current)).into_word();
        let next_bad = bad_mask(g, &next);
        trace.push(TraceStep {
            phase: Phase::Bad,
            target: s,
            choice,
            multiplier,
            result: next.clone(),
        });
        if next.letter_set() != g.all() {
            return Err(violation(
                g,
                format!("cancelling `{}` lost generators", g.label(s)),
                &trace,
            ));
        }
        if next_bad & !bad != 0 || next_bad == bad {
            return Err(violation(
                g,
                format!(
                    "bad set did not shrink: {:?} -> {:?}",
                    g.set_labels(bad),
                    g.set_labels(next_bad)
                ),
                &trace,
            ));
        }
        current = next;
        bad = next_bad;
    }
    Ok((current, trace))
}

/// Exponent used for multipliers: the quotient exponent, at least 2.
pub fn exponent_for(spec: Option<&SubgroupSpec>) -> u32 {
    spec.map_or(2, |t| t.exponent().max(2))
}

/// Full pipeline: repair missing generators, then bad ones. The result is
/// certified `s`-good for all `s`, and with a subgroup every multiplier and
/// the result are checked members.
pub fn essentialize(
    g: &DefiningGraph,
    w: &Word,
    spec: Option<&SubgroupSpec>,
) -> Result<(Word, MultiplierTrace)> {
    if let Some(t) = spec {
        if !t.member(w) {
            return Err(Error::NotInSubgroup(w.render(g)));
        }
    }
    let n = exponent_for(spec);
    let (full, missing_trace) = fix_missing(g, w, n)?;
    let (good, bad_trace) = make_good(g, &full, n)?;
    let trace = missing_trace.then(bad_trace);
    if !is_good_essential(g, &good) {
        return Err(violation(g, "result is not certified".into(), &trace));
    }
    if let Some(t) = spec {
        if let Some(step) = trace.steps.iter().find(|st| !t.member(&st.multiplier)) {
            return Err(violation(
                g,
                format!("multiplier `{}` left the subgroup", step.multiplier.render(g)),
                &trace,
            ));
        }
        if !t.member(&good) {
            return Err(violation(g, "result left the subgroup".into(), &trace));
        }
    }
    Ok((good, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::essential::goodness;
    use crate::word::{enumerate_ball, parity_vector, reduce};

    fn c5() -> DefiningGraph {
        DefiningGraph::cycle(5)
    }

    fn w(g: &DefiningGraph, s: &str) -> Word {
        Word::parse(g, s).unwrap()
    }

    #[test]
    fn blocker_choices_on_pentagon() {
        let g = c5();
        let a = choose_blockers(&g, 0).unwrap();
        assert_eq!((a.s_prime, a.s_double_prime, a.variant), (2, 3, BlockerVariant::Type1));
        let c = choose_blockers(&g, 2).unwrap();
        assert_eq!((c.s_prime, c.s_double_prime, c.variant), (0, 4, BlockerVariant::Type1));
        let dinf = DefiningGraph::edgeless(2);
        assert_eq!(choose_blockers(&dinf, 0), Err(Error::NoBlocker("a".into())));
    }

    #[test]
    fn type2_choice_on_path() {
        // Path a - b - c - d: for s = a, the non-neighbours are c and d; both
        // block a, so type 1. For s = b the only non-neighbour is d, and the
        // remaining a, c commute with b; c does not commute with d.
        let g = DefiningGraph::path(4);
        let b = choose_blockers(&g, 1).unwrap();
        assert_eq!((b.s_prime, b.s_double_prime, b.variant), (3, 0, BlockerVariant::Type2));
    }

    #[test]
    fn multiplier_words() {
        let g = DefiningGraph::from_labels(&["a", "b", "c", "d", "x"], &[]).unwrap();
        let t1 = BlockerChoice {
            s: 0,
            s_prime: 2,
            s_double_prime: 3,
            variant: BlockerVariant::Type1,
        };
        assert_eq!(multiplier_word(&t1, 2).unwrap().render(&g), "d a c d a c");
        let t2 = BlockerChoice {
            s: 0,
            s_prime: 1,
            s_double_prime: 4,
            variant: BlockerVariant::Type2,
        };
        assert_eq!(multiplier_word(&t2, 2).unwrap().render(&g), "b x a b x b x a b x");
        assert_eq!(multiplier_word(&t1, 1), Err(Error::ExponentTooSmall(1)));
    }

    #[test]
    fn even_exponent_multipliers_have_zero_parity() {
        let g = DefiningGraph::path(4);
        for s in 0..4 {
            if let Ok(choice) = choose_blockers(&g, s) {
                for n in [2, 4, 6] {
                    assert!(parity_vector(&multiplier_word(&choice, n).unwrap()).is_zero());
                }
            }
        }
    }

    #[test]
    fn fix_missing_examples() {
        let g = c5();
        let (out, trace) = fix_missing(&g, &w(&g, "a b"), 2).unwrap();
        assert_eq!(out.letter_set(), g.all());
        assert!(trace.steps.len() <= 3);

        let full = w(&g, "a b c d e");
        let (out, trace) = fix_missing(&g, &full, 2).unwrap();
        assert_eq!(out, full);
        assert!(trace.steps.is_empty());
        assert!(trace.total_multiplier.is_empty());

        let (out, trace) = fix_missing(&g, &Word::empty(), 2).unwrap();
        assert_eq!(out.letter_set(), g.all());
        assert!(trace.steps.len() <= 5);
        let composed = normal_form(&g, &trace.total_multiplier);
        assert_eq!(composed.word(), &out);
    }

    #[test]
    fn make_good_examples() {
        let g = c5();
        let full = w(&g, "a b c d e");
        let (out, trace) = make_good(&g, &full, 2).unwrap();
        assert_eq!(out, full);
        assert!(trace.steps.is_empty());
        assert_eq!(
            make_good(&g, &w(&g, "a b"), 2),
            Err(Error::MissingGenerators(vec!["c".into(), "d".into(), "e".into()]))
        );
        let bad = w(&g, "a b c d e a");
        let (out, trace) = make_good(&g, &bad, 2).unwrap();
        assert!(is_good_essential(&g, &out));
        assert!(trace.steps.len() <= 1);
    }

    #[test]
    fn essentialize_examples() {
        let g = c5();
        let (out, trace) = essentialize(&g, &w(&g, "a b a b"), None).unwrap();
        assert!(is_good_essential(&g, &out));
        assert!(!trace.steps.is_empty());

        let t = SubgroupSpec::commutator(g.clone());
        let (out, trace) = essentialize(&g, &w(&g, "a b a b"), Some(&t)).unwrap();
        assert!(is_good_essential(&g, &out) && t.member(&out));
        assert!(trace.steps.iter().all(|st| t.member(&st.multiplier)));

        assert_eq!(
            essentialize(&g, &w(&g, "a"), Some(&t)),
            Err(Error::NotInSubgroup("a".into()))
        );

        let whole = SubgroupSpec::whole(g.clone());
        let (_, trace) = essentialize(&g, &w(&g, "a"), Some(&whole)).unwrap();
        assert_eq!(trace.exponent, 2);
    }

    #[test]
    fn fix_missing_never_removes_support() {
        let g = c5();
        for x in enumerate_ball(&g, 6).unwrap() {
            let before = x.letter_set();
            let (out, trace) = fix_missing(&g, &x, 2).unwrap();
            assert_eq!(out.letter_set() & before, before);
            let mut prev = before;
            for step in &trace.steps {
                let now = step.result.letter_set();
                assert_eq!(now & prev, prev);
                prev = now;
            }
        }
    }

    #[test]
    fn make_good_over_full_support_ball() {
        let g = c5();
        for x in enumerate_ball(&g, 8).unwrap() {
            if x.letter_set() != g.all() {
                continue;
            }
            let before = goodness(&g, &reduce(&g, &x)).bad_set.len();
            let (out, trace) = make_good(&g, &x, 2).unwrap();
            assert!(is_good_essential(&g, &out));
            assert!(trace.steps.len() <= before);
        }
    }

    #[test]
    fn trace_serializes() {
        let g = c5();
        let (_, trace) = essentialize(&g, &w(&g, "a c a c"), None).unwrap();
        let json = serde_json::to_value(trace.render(&g)).unwrap();
        assert!(json["steps"].as_array().is_some_and(|s| !s.is_empty()));
        assert!(json["steps"][0]["sPrime"].is_string());
        assert_eq!(json["exponent"], 2);
    }
}
