//! Algebraic rank of right-angled Coxeter and Artin groups, read off from the
//! join decomposition of the defining graph.
//!
//! Rank is additive over direct products, and a join of graphs gives a direct
//! product of groups, so the total is the sum over join factors. Per factor:
//!
//! | group | factor            | rank |
//! |-------|-------------------|------|
//! | RACG  | single vertex     | 0 (finite) |
//! | RACG  | two, no edge      | 1 (infinite dihedral, `|S| - 1`) |
//! | RACG  | three or more     | 1 (irreducible, non-affine) |
//! | RAAG  | single vertex     | 1 (infinite cyclic) |
//! | RAAG  | two or more       | 1 (non-join graph) |

use serde::Serialize;

use crate::error::Result;
use crate::graph::{DefiningGraph, FactorKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum GroupKind {
    Racg,
    Raag,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RaagFactorKind {
    InfiniteCyclic,
    NonJoin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum FactorType {
    Coxeter(FactorKind),
    Artin(RaagFactorKind),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Commensurability {
    No,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FactorRank {
    pub vertex_set: Vec<String>,
    pub kind: FactorType,
    pub factor_rank: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RankReport {
    pub group_kind: GroupKind,
    pub factors: Vec<FactorRank>,
    pub total_rank: u32,
    pub higher_rank_lattice_commensurable: Commensurability,
    pub notes: Vec<String>,
}

const NOTE_SUM: &str = "rank is additive over direct products; graph joins give direct products";
const NOTE_SPHERICAL: &str = "spherical (finite) Coxeter factor: rank 0";
const NOTE_AFFINE: &str =
    "irreducible affine factor (infinite dihedral): rank |S| - 1 = 1; no larger affine factor is right-angled";
const NOTE_NONAFFINE: &str = "infinite, irreducible, non-affine right-angled Coxeter factor: rank 1";
const NOTE_CYCLIC: &str = "single-vertex Artin factor is infinite cyclic: rank 1";
const NOTE_NONJOIN: &str = "Artin group on a non-join graph: rank 1";
const NOTE_LATTICE: &str =
    "rank at most 1: not commensurable to a uniform lattice in a higher rank semisimple Lie group";

fn push_note(notes: &mut Vec<String>, note: &str) {
    if !notes.iter().any(|n| n == note) {
        notes.push(note.to_string());
    }
}

pub fn commensurability_flag(report: &RankReport) -> Commensurability {
    if report.total_rank <= 1 {
        Commensurability::No
    } else {
        Commensurability::Unknown
    }
}

fn finish(group_kind: GroupKind, factors: Vec<FactorRank>, mut notes: Vec<String>) -> RankReport {
    let mut report = RankReport {
        group_kind,
        total_rank: factors.iter().map(|f| f.factor_rank).sum(),
        factors,
        higher_rank_lattice_commensurable: Commensurability::Unknown,
        notes: Vec::new(),
    };
    report.higher_rank_lattice_commensurable = commensurability_flag(&report);
    if report.factors.len() > 1 {
        push_note(&mut notes, NOTE_SUM);
    }
    if report.higher_rank_lattice_commensurable == Commensurability::No {
        push_note(&mut notes, NOTE_LATTICE);
    }
    report.notes = notes;
    report
}

/// Rank of the right-angled Coxeter group on `g`.
pub fn rank_racg(g: &DefiningGraph) -> Result<RankReport> {
    let mut notes = Vec::new();
    let mut factors = Vec::new();
    for factor in g.join_decompose() {
        let class = factor.classify_factor()?;
        let (rank, note) = match class.kind {
            FactorKind::SphericalPoint => (0, NOTE_SPHERICAL),
            FactorKind::AffineDihedral => (factor.len() as u32 - 1, NOTE_AFFINE),
            FactorKind::IrreducibleNonaffine => (1, NOTE_NONAFFINE),
        };
        push_note(&mut notes, note);
        factors.push(FactorRank {
            vertex_set: class.vertex_set,
            kind: FactorType::Coxeter(class.kind),
            factor_rank: rank,
        });
    }
    Ok(finish(GroupKind::Racg, factors, notes))
}

/// Rank of the right-angled Artin group on `g`.
pub fn rank_raag(g: &DefiningGraph) -> Result<RankReport> {
    let mut notes = Vec::new();
    let factors = g
        .join_decompose()
        .into_iter()
        .map(|factor| {
            let kind = if factor.len() == 1 {
                push_note(&mut notes, NOTE_CYCLIC);
                RaagFactorKind::InfiniteCyclic
            } else {
                push_note(&mut notes, NOTE_NONJOIN);
                RaagFactorKind::NonJoin
            };
            FactorRank {
                vertex_set: factor.labels().to_vec(),
                kind: FactorType::Artin(kind),
                factor_rank: 1,
            }
        })
        .collect();
    Ok(finish(GroupKind::Raag, factors, notes))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn racg_table() {
        assert_eq!(rank_racg(&DefiningGraph::complete(3)).unwrap().total_rank, 0);
        assert_eq!(rank_racg(&DefiningGraph::cycle(4)).unwrap().total_rank, 2);
        assert_eq!(rank_racg(&DefiningGraph::cycle(5)).unwrap().total_rank, 1);
        assert_eq!(rank_racg(&DefiningGraph::edgeless(2)).unwrap().total_rank, 1);
    }

    #[test]
    fn raag_table() {
        assert_eq!(rank_raag(&DefiningGraph::complete(3)).unwrap().total_rank, 3);
        assert_eq!(rank_raag(&DefiningGraph::edgeless(1)).unwrap().total_rank, 1);
        let p3 = rank_raag(&DefiningGraph::path(3)).unwrap();
        assert_eq!(p3.total_rank, 2);
        let sets: Vec<_> = p3.factors.iter().map(|f| f.vertex_set.clone()).collect();
        assert_eq!(sets, vec![vec!["a", "c"], vec!["b"]]);
        assert_eq!(rank_raag(&DefiningGraph::cycle(5)).unwrap().total_rank, 1);
    }

    #[test]
    fn lattice_flags() {
        let c5 = DefiningGraph::cycle(5);
        assert_eq!(
            rank_racg(&c5).unwrap().higher_rank_lattice_commensurable,
            Commensurability::No
        );
        assert_eq!(
            rank_raag(&c5).unwrap().higher_rank_lattice_commensurable,
            Commensurability::No
        );
        assert_eq!(
            rank_racg(&DefiningGraph::cycle(4)).unwrap().higher_rank_lattice_commensurable,
            Commensurability::Unknown
        );
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(rank_racg(&DefiningGraph::cycle(4)).unwrap()).unwrap();
        assert_eq!(v["groupKind"], "RACG");
        assert_eq!(v["totalRank"], 2);
        assert_eq!(v["factors"][0]["kind"], "AFFINE_DIHEDRAL");
        assert_eq!(v["higherRankLatticeCommensurable"], "UNKNOWN");
        let v = serde_json::to_value(rank_raag(&DefiningGraph::edgeless(1)).unwrap()).unwrap();
        assert_eq!(v["factors"][0]["kind"], "INFINITE_CYCLIC");
    }

    #[test]
    fn exhaustive_closed_forms() {
        for n in 1..=5 {
            for g in DefiningGraph::all_on(n) {
                let racg = rank_racg(&g).unwrap();
                let parts: u32 = g
                    .join_decompose()
                    .iter()
                    .map(|f| rank_racg(f).unwrap().total_rank)
                    .sum();
                assert_eq!(racg.total_rank, parts);
                assert_eq!(
                    rank_raag(&g).unwrap().total_rank as usize,
                    g.complement_components().len()
                );
            }
        }
    }
}
