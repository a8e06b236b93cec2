//! Defining graphs of right-angled Coxeter and Artin groups.
//!
//! Vertices are generators; an edge `s - t` means `st = ts` (m = 2), a
//! non-edge means the pair generates a free product (m = infinity). The
//! declaration order of the vertices is the total order used by every
//! canonical form downstream.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Adjacency is stored as one `u64` row per vertex.
pub const MAX_VERTICES: usize = 64;

/// Bit set of generator indices.
pub type GenSet = u64;

#[derive(Clone, PartialEq, Eq)]
pub struct DefiningGraph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<GenSet>,
}

impl fmt::Debug for DefiningGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DefiningGraph")
            .field("vertices", &self.labels)
            .field("edges", &self.edge_labels())
            .finish()
    }
}

fn valid_label(label: &str) -> bool {
    !label.is_empty() && label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl DefiningGraph {
    /// Builds a graph from labels and index pairs. Duplicate edges are merged.
    pub fn new<S: Into<String>>(labels: Vec<S>, edges: &[(usize, usize)]) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyGraph);
        }
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(labels.len()));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if !valid_label(label) {
                return Err(Error::Syntax {
                    line: 0,
                    message: format!("invalid label `{label}`"),
                });
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateVertex {
                    line: 0,
                    label: label.clone(),
                });
            }
        }
        let mut adj = vec![0; labels.len()];
        for &(i, j) in edges {
            for k in [i, j] {
                if k >= labels.len() {
                    return Err(Error::UnknownEndpoint {
                        line: 0,
                        label: format!("#{k}"),
                    });
                }
            }
            if i == j {
                return Err(Error::SelfLoop {
                    line: 0,
                    label: labels[i].clone(),
                });
            }
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        Ok(Self { labels, index, adj })
    }

    /// Builds a graph from label strings.
    pub fn from_labels(vertices: &[&str], edges: &[(&str, &str)]) -> Result<Self> {
        let lookup = |l: &str| {
            vertices
                .iter()
                .position(|v| *v == l)
                .ok_or_else(|| Error::UnknownEndpoint {
                    line: 0,
                    label: l.to_string(),
                })
        };
        let pairs = edges
            .iter()
            .map(|(a, b)| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(vertices.to_vec(), &pairs)
    }

    /// Parses the line-oriented graph file format.
    ///
    /// ```text
    /// # pentagon
    /// vertices: a b c d e
    /// edge: a b
    /// edge: b c
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        let mut labels: Option<Vec<String>> = None;
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut edges = Vec::new();

        for (lineno, raw) in text.lines().enumerate() {
            let line_no = lineno + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, rest) = line.split_once(':').ok_or_else(|| Error::Syntax {
                line: line_no,
                message: format!("expected `vertices:` or `edge:`, found `{line}`"),
            })?;
            let fields: Vec<&str> = rest.split_whitespace().collect();
            match (key.trim(), labels.is_some()) {
                ("vertices", false) => {
                    if fields.is_empty() {
                        return Err(Error::EmptyGraph);
                    }
                    let mut decl = Vec::with_capacity(fields.len());
                    for f in fields {
                        if !valid_label(f) {
                            return Err(Error::Syntax {
                                line: line_no,
                                message: format!("invalid label `{f}`"),
                            });
                        }
                        if index.insert(f.to_string(), decl.len()).is_some() {
                            return Err(Error::DuplicateVertex {
                                line: line_no,
                                label: f.to_string(),
                            });
                        }
                        decl.push(f.to_string());
                    }
                    if decl.len() > MAX_VERTICES {
                        return Err(Error::TooManyVertices(decl.len()));
                    }
                    labels = Some(decl);
                }
                ("vertices", true) => {
                    return Err(Error::Syntax {
                        line: line_no,
                        message: "`vertices:` declared twice".into(),
                    })
                }
                ("edge", false) => {
                    return Err(Error::Syntax {
                        line: line_no,
                        message: "`edge:` before `vertices:`".into(),
                    })
                }
                ("edge", true) => {
                    if fields.len() != 2 {
                        return Err(Error::Syntax {
                            line: line_no,
                            message: format!("edge needs exactly two endpoints, got {}", fields.len()),
                        });
                    }
                    let mut ends = [0usize; 2];
                    for (slot, f) in ends.iter_mut().zip(&fields) {
                        *slot = *index.get(*f).ok_or_else(|| Error::UnknownEndpoint {
                            line: line_no,
                            label: f.to_string(),
                        })?;
                    }
                    if ends[0] == ends[1] {
                        return Err(Error::SelfLoop {
                            line: line_no,
                            label: fields[0].to_string(),
                        });
                    }
                    edges.push((ends[0], ends[1]));
                }
                (other, _) => {
                    return Err(Error::Syntax {
                        line: line_no,
                        message: format!("unknown directive `{other}`"),
                    })
                }
            }
        }
        let labels = labels.ok_or(Error::Syntax {
            line: 0,
            message: "missing `vertices:` line".into(),
        })?;
        Self::new(labels, &edges)
    }

    /// Serializes back to the file format, edges in vertex order.
    pub fn to_text(&self) -> String {
        let mut out = format!("vertices: {}\n", self.labels.join(" "));
        for (i, j) in self.edges() {
            out.push_str(&format!("edge: {} {}\n", self.labels[i], self.labels[j]));
        }
        out
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false; empty graphs are rejected at construction.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Mask with one bit per vertex.
    pub fn all(&self) -> GenSet {
        if self.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        }
    }

    /// True iff `i` and `j` are joined by an edge, i.e. the generators commute
    /// and are distinct.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i] >> j & 1 == 1
    }

    /// True iff the generators commute (adjacent or equal).
    pub fn commute(&self, i: usize, j: usize) -> bool {
        i == j || self.adjacent(i, j)
    }

    pub fn neighbors(&self, i: usize) -> GenSet {
        self.adj[i]
    }

    /// Generators that do not commute with `i`.
    pub fn blockers(&self, i: usize) -> GenSet {
        self.all() & !self.adj[i] & !(1 << i)
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.len()).flat_map(move |i| {
            (i + 1..self.len())
                .filter(move |&j| self.adjacent(i, j))
                .map(move |j| (i, j))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.edges()
            .map(|(i, j)| (self.labels[i].clone(), self.labels[j].clone()))
            .collect()
    }

    /// Labels of the vertices in `set`, in vertex order.
    pub fn set_labels(&self, set: GenSet) -> Vec<String> {
        (0..self.len())
            .filter(|&i| set >> i & 1 == 1)
            .map(|i| self.labels[i].clone())
            .collect()
    }

    /// Subgraph induced on `set`, keeping the ambient vertex order.
    pub fn induced(&self, set: GenSet) -> Result<Self> {
        let keep: Vec<usize> = (0..self.len()).filter(|&i| set >> i & 1 == 1).collect();
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(p, &v)| (v, p)).collect();
        let edges: Vec<(usize, usize)> = self
            .edges()
            .filter_map(|(i, j)| Some((*pos.get(&i)?, *pos.get(&j)?)))
            .collect();
        Self::new(keep.iter().map(|&i| self.labels[i].clone()).collect(), &edges)
    }

    /// Connected components of the complement graph, each as a vertex mask,
    /// ordered by least vertex.
    pub fn complement_components(&self) -> Vec<GenSet> {
        let all = self.all();
        let mut seen: GenSet = 0;
        let mut comps = Vec::new();
        for start in 0..self.len() {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut comp: GenSet = 1 << start;
            let mut frontier: GenSet = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let next = all & !self.adj[v] & !comp;
                comp |= next;
                frontier |= next;
            }
            seen |= comp;
            comps.push(comp);
        }
        comps
    }

    /// True iff the graph splits as a join of two non-empty subgraphs.
    pub fn is_join(&self) -> bool {
        self.complement_components().len() > 1
    }

    /// Factors of the finest join decomposition, ordered by least vertex.
    pub fn join_decompose(&self) -> Vec<DefiningGraph> {
        self.complement_components()
            .into_iter()
            .map(|c| self.induced(c).expect("induced subgraph of a valid graph"))
            .collect()
    }

    /// Join of graphs on disjoint label sets: every vertex of one part is
    /// connected to every vertex of another.
    pub fn join(parts: &[DefiningGraph]) -> Result<Self> {
        let mut labels = Vec::new();
        let mut edges = Vec::new();
        let mut offsets = Vec::new();
        for p in parts {
            offsets.push(labels.len());
            let off = labels.len();
            labels.extend(p.labels.iter().cloned());
            edges.extend(p.edges().map(|(i, j)| (i + off, j + off)));
        }
        for (a, pa) in parts.iter().enumerate() {
            for (b, pb) in parts.iter().enumerate().skip(a + 1) {
                for i in 0..pa.len() {
                    for j in 0..pb.len() {
                        edges.push((offsets[a] + i, offsets[b] + j));
                    }
                }
            }
        }
        Self::new(labels, &edges)
    }

    /// Classifies a join-irreducible graph as a factor of a right-angled
    /// Coxeter group.
    pub fn classify_factor(&self) -> Result<FactorClassification> {
        if self.is_join() {
            return Err(Error::NotAFactor);
        }
        // Among irreducible right-angled Coxeter groups the only affine one is
        // the infinite dihedral group: two vertices, no edge.
        let kind = match self.len() {
            1 => FactorKind::SphericalPoint,
            2 => FactorKind::AffineDihedral,
            _ => FactorKind::IrreducibleNonaffine,
        };
        Ok(FactorClassification {
            kind,
            vertex_set: self.labels.clone(),
        })
    }

    /// The double of the graph over `I x {0, 1}`: the `_1` copy is the
    /// original graph, the `_0` copy is complete, and `(i,0)-(j,1)` is an edge
    /// iff `i != j`.
    pub fn dj_double_prime(&self) -> Result<Self> {
        let n = self.len();
        let mut labels: Vec<String> = self.labels.iter().map(|l| format!("{l}_0")).collect();
        labels.extend(self.labels.iter().map(|l| format!("{l}_1")));
        let mut edges = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                if i < j {
                    edges.push((i, j));
                    if self.adjacent(i, j) {
                        edges.push((n + i, n + j));
                    }
                }
                edges.push((i, n + j));
            }
        }
        Self::new(labels, &edges)
    }

    /// Two copies of the graph over `I x {-1, 1}` (labels `_m1`, `_1`), with a
    /// cross edge `(i,-1)-(j,1)` iff `i - j` is an edge.
    pub fn dj_prime(&self) -> Result<Self> {
        let n = self.len();
        let mut labels: Vec<String> = self.labels.iter().map(|l| format!("{l}_m1")).collect();
        labels.extend(self.labels.iter().map(|l| format!("{l}_1")));
        let mut edges = Vec::new();
        for (i, j) in self.edges() {
            edges.push((i, j));
            edges.push((n + i, n + j));
            edges.push((i, n + j));
            edges.push((j, n + i));
        }
        Self::new(labels, &edges)
    }

    /// Cycle on `n >= 3` vertices labelled `a, b, c, ...`.
    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(default_labels(n), &edges).expect("cycle graph")
    }

    /// Path `a - b - c - ...`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(default_labels(n), &edges).expect("path graph")
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        Self::new(default_labels(n), &edges).expect("complete graph")
    }

    pub fn edgeless(n: usize) -> Self {
        Self::new(default_labels(n), &[]).expect("edgeless graph")
    }

    /// Every labelled graph on `n` vertices, enumerated by edge bitmask over
    /// the pairs `(i, j)`, `i < j`, in lexicographic order.
    pub fn all_on(n: usize) -> impl Iterator<Item = DefiningGraph> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let count = 1u64 << pairs.len();
        (0..count).map(move |mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            Self::new(default_labels(n), &edges).expect("enumerated graph")
        })
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("v{i}")
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FactorKind {
    SphericalPoint,
    AffineDihedral,
    IrreducibleNonaffine,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FactorClassification {
    pub kind: FactorKind,
    pub vertex_set: Vec<String>,
}
