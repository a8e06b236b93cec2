//! Finite-index normal subgroups realized through the parity map.
//!
//! A subspace `Q` of `(Z/2)^S` pulls back to the normal subgroup
//! `T = { w : parity(w) ∈ Q }` of index `2^(|S| - dim Q)`. The commutator
//! subgroup is `Q = 0`.

use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DefiningGraph, GenSet};
use crate::word::{enumerate_ball_capped, parity_vector, ParityVector, Word, DEFAULT_RADIUS_CAP};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupSpec {
    ambient: DefiningGraph,
    /// Echelon basis: distinct leading bits, sorted by leading bit descending.
    basis: Vec<GenSet>,
}

fn leading_bit(v: GenSet) -> u32 {
    63 - v.leading_zeros()
}

impl SubgroupSpec {
    /// Preimage of the span of `vectors`; dependent vectors are dropped.
    pub fn new(ambient: DefiningGraph, vectors: &[ParityVector]) -> Result<Self> {
        let mut spec = SubgroupSpec {
            ambient,
            basis: Vec::new(),
        };
        for v in vectors {
            if v.0 & !spec.ambient.all() != 0 {
                return Err(Error::InvalidSubgroup(format!(
                    "vector {:#b} has bits outside the generators",
                    v.0
                )));
            }
            let r = spec.residue(v.0);
            if r != 0 {
                spec.basis.push(r);
                spec.basis.sort_by_key(|&b| std::cmp::Reverse(leading_bit(b)));
            }
        }
        Ok(spec)
    }

    pub fn commutator(ambient: DefiningGraph) -> Self {
        SubgroupSpec {
            ambient,
            basis: Vec::new(),
        }
    }

    /// `T = W`.
    pub fn whole(ambient: DefiningGraph) -> Self {
        let vectors: Vec<ParityVector> = (0..ambient.len()).map(|i| ParityVector(1 << i)).collect();
        Self::new(ambient, &vectors).expect("unit vectors")
    }

    /// Parses a spec file:
    ///
    /// ```text
    /// graph: c5.txt
    /// basis: 11000
    /// ```
    ///
    /// `load_graph` resolves the `graph:` reference. A file with no `basis:`
    /// lines describes the commutator subgroup.
    pub fn parse_with<F>(text: &str, load_graph: F) -> Result<Self>
    where
        F: FnOnce(&str) -> Result<DefiningGraph>,
    {
        let mut graph_ref: Option<String> = None;
        let mut bits = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let syntax = |message: String| Error::Syntax {
                line: lineno + 1,
                message,
            };
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| syntax(format!("expected `graph:` or `basis:`, found `{line}`")))?;
            match (key.trim(), graph_ref.is_some()) {
                ("graph", false) => graph_ref = Some(value.trim().to_string()),
                ("graph", true) => return Err(syntax("`graph:` declared twice".into())),
                ("basis", true) => bits.push(value.trim().to_string()),
                ("basis", false) => return Err(syntax("`basis:` before `graph:`".into())),
                (other, _) => return Err(syntax(format!("unknown directive `{other}`"))),
            }
        }
        let graph_ref = graph_ref.ok_or(Error::Syntax {
            line: 0,
            message: "missing `graph:` line".into(),
        })?;
        let g = load_graph(&graph_ref)?;
        let vectors = bits
            .iter()
            .map(|b| ParityVector::from_bits(&g, b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(g, &vectors)
    }

    /// Reads a spec file, resolving `graph:` relative to the spec's directory.
    pub fn load(path: &Path) -> std::result::Result<Self, Box<dyn std::error::Error>> {
        let text = std::fs::read_to_string(path)?;
        let base = path.parent().unwrap_or(Path::new("."));
        let mut io_err = None;
        let spec = Self::parse_with(&text, |r| {
            let p = base.join(r);
            match std::fs::read_to_string(&p) {
                Ok(t) => DefiningGraph::parse(&t),
                Err(e) => {
                    io_err = Some(format!("{}: {e}", p.display()));
                    Err(Error::Syntax {
                        line: 0,
                        message: "graph reference unreadable".into(),
                    })
                }
            }
        });
        match (spec, io_err) {
            (_, Some(e)) => Err(e.into()),
            (s, None) => Ok(s?),
        }
    }

    pub fn ambient(&self) -> &DefiningGraph {
        &self.ambient
    }

    pub fn basis(&self) -> Vec<ParityVector> {
        self.basis.iter().map(|&b| ParityVector(b)).collect()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn residue(&self, mut v: GenSet) -> GenSet {
        for &b in &self.basis {
            if v >> leading_bit(b) & 1 == 1 {
                v ^= b;
            }
        }
        v
    }

    pub fn contains_parity(&self, v: ParityVector) -> bool {
        self.residue(v.0) == 0
    }

    pub fn member(&self, w: &Word) -> bool {
        self.contains_parity(parity_vector(w))
    }

    /// `[W : T] = 2^(|S| - dim Q)`.
    pub fn index(&self) -> u128 {
        1u128 << (self.ambient.len() - self.dim())
    }

    /// Exponent of the elementary abelian quotient `W / T`.
    pub fn exponent(&self) -> u32 {
        if self.index() == 1 {
            1
        } else {
            2
        }
    }

    pub fn index_and_exponent(&self) -> (u128, u32) {
        (self.index(), self.exponent())
    }

    pub fn is_proper(&self) -> bool {
        self.index() > 1
    }

    pub fn summary(&self) -> SubgroupSummary {
        SubgroupSummary {
            basis: self.basis().iter().map(|v| v.to_bits(&self.ambient)).collect(),
            dimension: self.dim(),
            index: self.index(),
            exponent: self.exponent(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgroupSummary {
    pub basis: Vec<String>,
    pub dimension: usize,
    pub index: u128,
    pub exponent: u32,
}

/// Members of the ball of the given radius, in shortlex order.
pub fn enumerate_members(spec: &SubgroupSpec, radius: usize) -> Result<Vec<Word>> {
    enumerate_members_capped(spec, radius, DEFAULT_RADIUS_CAP)
}

pub fn enumerate_members_capped(spec: &SubgroupSpec, radius: usize, cap: usize) -> Result<Vec<Word>> {
    Ok(enumerate_ball_capped(&spec.ambient, radius, cap)?
        .into_iter()
        .filter(|w| spec.member(w))
        .collect())
}
