//! Domain model: ordered red/blue colorings (graphs and 3-uniform
//! hypergraphs), pair labelings, pattern and bound requests.
//!
//! Vertices are 1-based everywhere in the public API and in file formats;
//! pair and triple storage is an implementation detail.

use crate::bitset::BitSet;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Color::Red => write!(f, "red"),
            Color::Blue => write!(f, "blue"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("vertex count must be at least 1")]
    EmptyVertexSet,
    #[error("pair ({0}, {1}) is out of range or not increasing")]
    BadPair(u32, u32),
    #[error("pair ({0}, {1}) listed twice")]
    DuplicatePair(u32, u32),
    #[error("triple ({0}, {1}, {2}) is out of range or not increasing")]
    BadTriple(u32, u32, u32),
    #[error("label {label} for pair ({i}, {j}) is outside 1..={n_colors}")]
    LabelOutOfRange { i: u32, j: u32, label: u32, n_colors: u32 },
    #[error("number of colors must be at least 1")]
    NoColors,
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
}

/// Index of pair (a, b), 0-based with a < b, in colex order (sorted by b,
/// then a). Pairs with the same larger endpoint are contiguous.
#[inline]
pub(crate) fn pair_index(a: usize, b: usize) -> usize {
    debug_assert!(a < b);
    b * (b - 1) / 2 + a
}

pub(crate) fn n_pairs(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Index of triple (a, b, c), 0-based with a < b < c, in colex order:
/// C(c,3) + C(b,2) + C(a,1).
#[inline]
pub(crate) fn triple_index(a: usize, b: usize, c: usize) -> usize {
    debug_assert!(a < b && b < c);
    c * (c - 1) * (c - 2) / 6 + b * (b - 1) / 2 + a
}

pub(crate) fn n_triples(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// A red/blue edge-coloring of the complete ordered graph on 1..=N.
/// Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoColoring {
    n: u32,
    blue: Vec<bool>,
    blue_adj: Vec<BitSet>,
    red_adj: Vec<BitSet>,
}

impl TwoColoring {
    /// Builds a coloring by evaluating `f` on every pair (i, j), 1 <= i < j <= n.
    pub fn from_fn(n: u32, mut f: impl FnMut(u32, u32) -> Color) -> Result<Self, ModelError> {
        if n == 0 {
            return Err(ModelError::EmptyVertexSet);
        }
        let nu = n as usize;
        let mut blue = vec![false; n_pairs(nu)];
        for j in 2..=nu {
            for i in 1..j {
                blue[pair_index(i - 1, j - 1)] = f(i as u32, j as u32) == Color::Blue;
            }
        }
        Ok(Self::from_blue_bits(n, blue))
    }

    /// Builds a coloring with the listed pairs blue and every other pair red.
    /// Out-of-range and duplicate pairs are rejected.
    pub fn build(n: u32, blue_pairs: &[(u32, u32)]) -> Result<Self, ModelError> {
        if n == 0 {
            return Err(ModelError::EmptyVertexSet);
        }
        let nu = n as usize;
        let mut blue = vec![false; n_pairs(nu)];
        for &(i, j) in blue_pairs {
            if i == 0 || j == 0 || i >= j || j > n {
                return Err(ModelError::BadPair(i, j));
            }
            let idx = pair_index(i as usize - 1, j as usize - 1);
            if blue[idx] {
                return Err(ModelError::DuplicatePair(i, j));
            }
            blue[idx] = true;
        }
        Ok(Self::from_blue_bits(n, blue))
    }

    pub(crate) fn from_blue_bits(n: u32, blue: Vec<bool>) -> Self {
        let nu = n as usize;
        debug_assert_eq!(blue.len(), n_pairs(nu));
        let mut blue_adj = vec![BitSet::new(nu); nu];
        let mut red_adj = vec![BitSet::new(nu); nu];
        for b in 1..nu {
            for a in 0..b {
                if blue[pair_index(a, b)] {
                    blue_adj[a].insert(b);
                    blue_adj[b].insert(a);
                } else {
                    red_adj[a].insert(b);
                    red_adj[b].insert(a);
                }
            }
        }
        TwoColoring { n, blue, blue_adj, red_adj }
    }

    pub fn n_vertices(&self) -> u32 {
        self.n
    }

    /// Color of the pair (i, j). Queries with i >= j or out of range are rejected.
    #[inline]
    pub fn color(&self, i: u32, j: u32) -> Color {
        assert!(i >= 1 && i < j && j <= self.n, "bad pair query ({i}, {j})");
        if self.blue[pair_index(i as usize - 1, j as usize - 1)] {
            Color::Blue
        } else {
            Color::Red
        }
    }

    #[inline]
    pub fn is(&self, i: u32, j: u32, c: Color) -> bool {
        self.color(i, j) == c
    }

    /// Neighbors of 1-based vertex `v` in color `c`, as a bitset over 0-based ids.
    #[inline]
    pub(crate) fn adj(&self, v: u32, c: Color) -> &BitSet {
        match c {
            Color::Blue => &self.blue_adj[v as usize - 1],
            Color::Red => &self.red_adj[v as usize - 1],
        }
    }

    /// True when all pairs among `verts` (strictly increasing, 1-based) have color `c`.
    pub fn is_clique(&self, verts: &[u32], c: Color) -> bool {
        for (k, &j) in verts.iter().enumerate() {
            for &i in &verts[..k] {
                if !self.is(i, j, c) {
                    return false;
                }
            }
        }
        true
    }

    /// The color-complement of this coloring.
    pub fn complement(&self) -> TwoColoring {
        let blue = self.blue.iter().map(|&b| !b).collect();
        Self::from_blue_bits(self.n, blue)
    }
}

/// A red/blue coloring of the complete ordered 3-uniform hypergraph on 1..=N.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleColoring {
    n: u32,
    blue: Vec<bool>,
}

impl TripleColoring {
    pub fn from_fn(n: u32, mut f: impl FnMut(u32, u32, u32) -> Color) -> Result<Self, ModelError> {
        if n == 0 {
            return Err(ModelError::EmptyVertexSet);
        }
        let nu = n as usize;
        let mut blue = vec![false; n_triples(nu)];
        for c in 3..=nu {
            for b in 2..c {
                for a in 1..b {
                    blue[triple_index(a - 1, b - 1, c - 1)] =
                        f(a as u32, b as u32, c as u32) == Color::Blue;
                }
            }
        }
        Ok(TripleColoring { n, blue })
    }

    /// Builds a coloring with the listed triples blue and every other triple red.
    pub fn build(n: u32, blue_triples: &[(u32, u32, u32)]) -> Result<Self, ModelError> {
        if n == 0 {
            return Err(ModelError::EmptyVertexSet);
        }
        let nu = n as usize;
        let mut blue = vec![false; n_triples(nu)];
        for &(i, j, k) in blue_triples {
            if i == 0 || !(i < j && j < k) || k > n {
                return Err(ModelError::BadTriple(i, j, k));
            }
            blue[triple_index(i as usize - 1, j as usize - 1, k as usize - 1)] = true;
        }
        Ok(TripleColoring { n, blue })
    }

    pub(crate) fn from_blue_bits(n: u32, blue: Vec<bool>) -> Self {
        debug_assert_eq!(blue.len(), n_triples(n as usize));
        TripleColoring { n, blue }
    }

    pub fn n_vertices(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn color(&self, i: u32, j: u32, k: u32) -> Color {
        assert!(i >= 1 && i < j && j < k && k <= self.n, "bad triple query ({i}, {j}, {k})");
        if self.blue[triple_index(i as usize - 1, j as usize - 1, k as usize - 1)] {
            Color::Blue
        } else {
            Color::Red
        }
    }

    #[inline]
    pub fn is(&self, i: u32, j: u32, k: u32, c: Color) -> bool {
        self.color(i, j, k) == c
    }
}

/// A total map from ordered pairs (i < j) to colors in 1..=n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairLabeling {
    n: u32,
    n_colors: u32,
    labels: Vec<u32>,
}

impl PairLabeling {
    pub fn from_fn(n: u32, n_colors: u32, mut f: impl FnMut(u32, u32) -> u32) -> Result<Self, ModelError> {
        if n == 0 {
            return Err(ModelError::EmptyVertexSet);
        }
        if n_colors == 0 {
            return Err(ModelError::NoColors);
        }
        let nu = n as usize;
        let mut labels = vec![0u32; n_pairs(nu)];
        for j in 2..=nu {
            for i in 1..j {
                let label = f(i as u32, j as u32);
                if label == 0 || label > n_colors {
                    return Err(ModelError::LabelOutOfRange {
                        i: i as u32,
                        j: j as u32,
                        label,
                        n_colors,
                    });
                }
                labels[pair_index(i - 1, j - 1)] = label;
            }
        }
        Ok(PairLabeling { n, n_colors, labels })
    }

    pub(crate) fn from_label_vec(n: u32, n_colors: u32, labels: Vec<u32>) -> Self {
        debug_assert_eq!(labels.len(), n_pairs(n as usize));
        PairLabeling { n, n_colors, labels }
    }

    pub fn n_vertices(&self) -> u32 {
        self.n
    }

    pub fn n_colors(&self) -> u32 {
        self.n_colors
    }

    #[inline]
    pub fn label(&self, i: u32, j: u32) -> u32 {
        assert!(i >= 1 && i < j && j <= self.n, "bad pair query ({i}, {j})");
        self.labels[pair_index(i as usize - 1, j as usize - 1)]
    }

    /// The labeling induced on a strictly increasing vertex subset, with
    /// vertices renumbered 1..=len in order.
    pub fn induced(&self, verts: &[u32]) -> PairLabeling {
        let m = verts.len() as u32;
        PairLabeling::from_fn(m, self.n_colors, |i, j| {
            self.label(verts[i as usize - 1], verts[j as usize - 1])
        })
        .expect("induced labeling is well-formed")
    }
}

/// Target pattern of a witness search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "pattern")]
pub enum PatternKind {
    /// Ordered clique K_s.
    Clique { s: u32 },
    /// Monotone path power P_n^t (edges (i, j) for j - i <= t).
    PathPower { n: u32, t: u32 },
    /// Monotone tight path P_n^(3) in a 3-uniform coloring.
    TightPath3 { n: u32 },
    /// 3-uniform clique K_s^(3).
    Clique3 { s: u32 },
    /// Blowup P_n[t]: n groups of t vertices, consecutive groups complete bipartite.
    Blowup { n: u32, t: u32 },
}

impl PatternKind {
    pub fn validate(&self) -> Result<(), ModelError> {
        let ok = match *self {
            PatternKind::Clique { s } => s >= 1,
            PatternKind::PathPower { n, t } => t >= 1 && n >= t,
            PatternKind::TightPath3 { n } => n >= 1,
            PatternKind::Clique3 { s } => s >= 1,
            PatternKind::Blowup { n, t } => n >= 1 && t >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(ModelError::InvalidParam(format!("bad pattern parameters: {self:?}")))
        }
    }

    /// Number of vertices a copy of the pattern occupies.
    pub fn n_pattern_vertices(&self) -> u32 {
        match *self {
            PatternKind::Clique { s } | PatternKind::Clique3 { s } => s,
            PatternKind::PathPower { n, .. } | PatternKind::TightPath3 { n } => n,
            PatternKind::Blowup { n, t } => n * t,
        }
    }

    pub fn is_three_uniform(&self) -> bool {
        matches!(self, PatternKind::TightPath3 { .. } | PatternKind::Clique3 { .. })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternSpec {
    #[serde(flatten)]
    pub kind: PatternKind,
    pub color: Color,
}

impl PatternSpec {
    pub fn new(kind: PatternKind, color: Color) -> Result<Self, ModelError> {
        kind.validate()?;
        Ok(PatternSpec { kind, color })
    }
}

/// Identifier of an explicit formula from the source material.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremId {
    /// (s-1)(n-1)+1: clique versus monotone path.
    Es,
    /// C(s+n-4, s-2)+1: tight path versus tight path.
    CupsCaps,
    /// (24 s^3)^(s t) n: clique versus path power.
    Thm1_1,
    /// 2^(2t-1) n^(t(2t-1)): path power versus clique.
    Thm1_2,
    /// (400 t^3)^(t^2) n^(4t-2): diagonal path power.
    Thm1_3,
    /// C(p+q-2, p-1)+1: monotone-label path threshold.
    Ck,
    /// Exponent constant C(s, t) of the labeled-structure recursion.
    CanonicalC,
    /// Recursive upper bound on the labeled-structure threshold f(n; s, t).
    FBound,
    /// 3 (4 s^2)^t: required order of a red-net.
    RedNetOrder,
}

/// A request for one explicit formula value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRequest {
    pub theorem: TheoremId,
    pub params: BTreeMap<String, u64>,
}

/// Any of the three instance types, as read from a file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Pairs(TwoColoring),
    Triples(TripleColoring),
    Labels(PairLabeling),
}

impl Instance {
    pub fn n_vertices(&self) -> u32 {
        match self {
            Instance::Pairs(c) => c.n_vertices(),
            Instance::Triples(c) => c.n_vertices(),
            Instance::Labels(l) => l.n_vertices(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_two_coloring_examples() {
        let c = TwoColoring::build(2, &[]).unwrap();
        assert_eq!(c.color(1, 2), Color::Red);

        let c = TwoColoring::build(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        for (i, j) in [(1, 2), (1, 3), (2, 3)] {
            assert_eq!(c.color(i, j), Color::Blue);
        }

        assert_eq!(TwoColoring::build(3, &[(3, 1)]), Err(ModelError::BadPair(3, 1)));
        assert_eq!(
            TwoColoring::build(3, &[(1, 2), (1, 2)]),
            Err(ModelError::DuplicatePair(1, 2))
        );
    }

    #[test]
    fn adjacency_matches_colors() {
        let c = TwoColoring::build(5, &[(1, 3), (2, 5), (4, 5)]).unwrap();
        let blue5: Vec<usize> = c.adj(5, Color::Blue).iter().collect();
        assert_eq!(blue5, vec![1, 3]); // 0-based ids of vertices 2 and 4
        let red1: Vec<usize> = c.adj(1, Color::Red).iter().collect();
        assert_eq!(red1, vec![1, 3, 4]);
        assert!(c.is_clique(&[1, 2, 4], Color::Red));
        assert!(!c.is_clique(&[1, 3, 4], Color::Red));
    }

    #[test]
    fn complement_flips_every_pair() {
        let c = TwoColoring::build(4, &[(1, 2), (3, 4)]).unwrap();
        let d = c.complement();
        for j in 2..=4u32 {
            for i in 1..j {
                assert_eq!(c.color(i, j), d.color(i, j).flip());
            }
        }
    }

    #[test]
    fn triple_indexing_is_colex_and_total() {
        let n = 7usize;
        let mut seen = vec![false; n_triples(n)];
        let mut last = None;
        for c in 2..n {
            for b in 1..c {
                for a in 0..b {
                    let idx = triple_index(a, b, c);
                    assert!(!seen[idx]);
                    seen[idx] = true;
                    if let Some(prev) = last {
                        assert_eq!(idx, prev + 1, "colex order must be contiguous");
                    }
                    last = Some(idx);
                }
            }
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn labeling_rejects_out_of_range() {
        let err = PairLabeling::from_fn(3, 2, |i, j| i + j).unwrap_err();
        assert!(matches!(err, ModelError::LabelOutOfRange { .. }));
        let l = PairLabeling::from_fn(4, 9, |i, j| i + j).unwrap();
        assert_eq!(l.label(2, 4), 6);
        let ind = l.induced(&[1, 2, 4]);
        assert_eq!(ind.label(2, 3), 6);
        assert_eq!(ind.label(1, 3), 5);
    }

    #[test]
    fn pattern_validation() {
        assert!(PatternKind::PathPower { n: 3, t: 4 }.validate().is_err());
        assert!(PatternKind::PathPower { n: 4, t: 4 }.validate().is_ok());
        assert!(PatternKind::Clique { s: 0 }.validate().is_err());
    }
}
