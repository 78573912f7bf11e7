//! Certificate types for every witness structure, the ordered-forest shape
//! they share, and the JSON wire format
//! `{kind, params, vertices, color, aux}`.

use crate::model::Color;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ForestError {
    #[error("node {0} appears more than once")]
    DuplicateNode(u32),
    #[error("parent {parent} of node {child} is not a node of the forest")]
    UnknownParent { child: u32, parent: u32 },
    #[error("node {child} does not come after its parent {parent}")]
    ParentNotBefore { child: u32, parent: u32 },
    #[error("parent chain from node {0} contains a cycle")]
    Cycle(u32),
    #[error("leaves at different depths: {0} and {1}")]
    NotBalanced(u32, u32),
    #[error("descendants of node {0} do not precede its same-depth successor {1}")]
    NotWellOrdered(u32, u32),
}

/// A balanced, well-ordered rooted forest over a subset of 1..=M.
///
/// Each vertex precedes its descendants, and for same-depth y < y' the
/// descendants of y precede y'. All leaves share one depth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedForest {
    nodes: Vec<u32>,
    parent: BTreeMap<u32, u32>,
    depth_of: BTreeMap<u32, u32>,
    children: BTreeMap<u32, Vec<u32>>,
    depth: u32,
}

impl OrderedForest {
    /// Validates the balanced and well-ordered invariants on construction.
    pub fn new(mut nodes: Vec<u32>, parent: BTreeMap<u32, u32>) -> Result<Self, ForestError> {
        nodes.sort_unstable();
        for w in nodes.windows(2) {
            if w[0] == w[1] {
                return Err(ForestError::DuplicateNode(w[0]));
            }
        }
        let node_set: std::collections::BTreeSet<u32> = nodes.iter().copied().collect();
        let mut children: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for (&child, &par) in &parent {
            if !node_set.contains(&par) || !node_set.contains(&child) {
                return Err(ForestError::UnknownParent { child, parent: par });
            }
            if par >= child {
                return Err(ForestError::ParentNotBefore { child, parent: par });
            }
            children.entry(par).or_default().push(child);
        }
        for kids in children.values_mut() {
            kids.sort_unstable();
        }
        // depths (parents precede children numerically, so one ascending pass works)
        let mut depth_of: BTreeMap<u32, u32> = BTreeMap::new();
        for &v in &nodes {
            let d = match parent.get(&v) {
                None => 0,
                Some(p) => depth_of.get(p).copied().ok_or(ForestError::Cycle(v))? + 1,
            };
            depth_of.insert(v, d);
        }
        // balanced
        let mut leaf_depth: Option<(u32, u32)> = None;
        for &v in &nodes {
            if !children.contains_key(&v) {
                let d = depth_of[&v];
                match leaf_depth {
                    None => leaf_depth = Some((v, d)),
                    Some((w, d0)) if d0 != d => return Err(ForestError::NotBalanced(w, v)),
                    _ => {}
                }
            }
        }
        let depth = leaf_depth.map_or(0, |(_, d)| d);
        // well-ordered: group by depth; subtree ranges must not straddle
        let mut subtree_max: BTreeMap<u32, u32> = BTreeMap::new();
        for &v in nodes.iter().rev() {
            let mut m = v;
            if let Some(kids) = children.get(&v) {
                for &k in kids {
                    m = m.max(subtree_max[&k]);
                }
            }
            subtree_max.insert(v, m);
        }
        let mut by_depth: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for &v in &nodes {
            by_depth.entry(depth_of[&v]).or_default().push(v);
        }
        for level in by_depth.values() {
            for w in level.windows(2) {
                if subtree_max[&w[0]] >= w[1] {
                    return Err(ForestError::NotWellOrdered(w[0], w[1]));
                }
            }
        }
        Ok(OrderedForest {
            nodes,
            parent,
            depth_of,
            children,
            depth,
        })
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[u32] {
        &self.nodes
    }

    pub fn parent_map(&self) -> &BTreeMap<u32, u32> {
        &self.parent
    }

    pub fn parent_of(&self, v: u32) -> Option<u32> {
        self.parent.get(&v).copied()
    }

    pub fn children_of(&self, v: u32) -> &[u32] {
        self.children.get(&v).map_or(&[], |c| c.as_slice())
    }

    pub fn depth_of(&self, v: u32) -> u32 {
        self.depth_of[&v]
    }

    /// Common depth of all leaves (0 for an empty forest).
    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn roots(&self) -> Vec<u32> {
        self.nodes
            .iter()
            .copied()
            .filter(|v| !self.parent.contains_key(v))
            .collect()
    }

    pub fn leaves(&self) -> Vec<u32> {
        self.nodes
            .iter()
            .copied()
            .filter(|v| !self.children.contains_key(v))
            .collect()
    }

    pub fn ancestors(&self, v: u32) -> Vec<u32> {
        let mut out = Vec::new();
        let mut cur = v;
        while let Some(p) = self.parent.get(&cur) {
            out.push(*p);
            cur = *p;
        }
        out
    }

    /// Root-to-leaf path that always takes the first (leftmost) child,
    /// starting from the first root. The head of a net.
    pub fn leftmost_path(&self) -> Vec<u32> {
        let roots = self.roots();
        let Some(&first) = roots.first() else {
            return Vec::new();
        };
        let mut path = vec![first];
        let mut cur = first;
        while let Some(&next) = self.children_of(cur).first() {
            path.push(next);
            cur = next;
        }
        path
    }

    /// Root-to-leaf path that always takes the last child, starting from
    /// the last root. The tail of a net.
    pub fn rightmost_path(&self) -> Vec<u32> {
        let roots = self.roots();
        let Some(&last) = roots.last() else {
            return Vec::new();
        };
        let mut path = vec![last];
        let mut cur = last;
        while let Some(&next) = self.children_of(cur).last() {
            path.push(next);
            cur = next;
        }
        path
    }
}

/// Direction of a lexicographic set (which endpoint determines the color).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LexDirection {
    Forward,
    Backward,
}

/// Direction of a monotone-label path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LabelDirection {
    NonIncreasing,
    StrictlyIncreasing,
}

/// An s-red-net: a balanced well-ordered forest of depth s-1 whose nodes
/// carry blue cliques of size r, ordered with the forest, with no blue
/// K_{t,t} between any ancestor set and descendant set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RedNetCert {
    pub s: u32,
    pub r: u32,
    pub t: u32,
    pub forest: OrderedForest,
    pub sets: BTreeMap<u32, Vec<u32>>,
}

/// A dominance forest over abstract functions chi_0..chi_{q-1} on 1..=m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiForestCert {
    pub q: u32,
    pub m: u32,
    pub forest: OrderedForest,
    /// functions[d][v-1] is chi_d(v).
    pub functions: Vec<Vec<u32>>,
}

/// Outcome of resolving a red-net: either s+1 pairwise blue-K_{t,t}-free
/// set slices, or a bundle of disjoint blue path powers spanning the
/// middle thirds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum NetResolution {
    KttFreeFamily {
        /// Forest nodes that contributed the sets.
        nodes: Vec<u32>,
        sets: Vec<Vec<u32>>,
    },
    PathBundle {
        paths: Vec<Vec<u32>>,
        /// sigma[i] is the head node holding the first t vertices of paths[i].
        sigma: Vec<u32>,
        /// pi[i] is the tail node holding the last t vertices of paths[i].
        pi: Vec<u32>,
    },
}

/// Tagged union of every witness kind the extractors can emit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    MonoClique {
        color: Color,
        vertices: Vec<u32>,
        via: Option<String>,
    },
    MonoPathPower {
        color: Color,
        t: u32,
        vertices: Vec<u32>,
        via: Option<String>,
    },
    MonoTightPath3 {
        color: Color,
        vertices: Vec<u32>,
    },
    MonoClique3 {
        color: Color,
        vertices: Vec<u32>,
    },
    MonoBlowup {
        color: Color,
        t: u32,
        vertices: Vec<u32>,
    },
    NonIncreasingSet {
        vertices: Vec<u32>,
    },
    LexicographicSet {
        vertices: Vec<u32>,
        direction: LexDirection,
        colors: Vec<u32>,
        nonincreasing_colors: bool,
    },
    CliqueChain {
        color: Color,
        cliques: Vec<Vec<u32>>,
    },
    HstCopy {
        s: u32,
        t: u32,
        vertices: Vec<u32>,
    },
    ChiForest(ChiForestCert),
    RedNet(RedNetCert),
    LabelMonotonePath {
        direction: LabelDirection,
        vertices: Vec<u32>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CertCodecError {
    #[error("certificate JSON is malformed: {0}")]
    Malformed(String),
    #[error("unknown certificate kind {0:?}")]
    UnknownKind(String),
    #[error("forest in certificate is invalid: {0}")]
    Forest(#[from] ForestError),
}

fn mal(msg: impl Into<String>) -> CertCodecError {
    CertCodecError::Malformed(msg.into())
}

impl Certificate {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Certificate::MonoClique { .. } => "mono_clique",
            Certificate::MonoPathPower { .. } => "mono_path_power",
            Certificate::MonoTightPath3 { .. } => "mono_tight_path3",
            Certificate::MonoClique3 { .. } => "mono_clique3",
            Certificate::MonoBlowup { .. } => "mono_blowup",
            Certificate::NonIncreasingSet { .. } => "non_increasing_set",
            Certificate::LexicographicSet { .. } => "lexicographic_set",
            Certificate::CliqueChain { .. } => "clique_chain",
            Certificate::HstCopy { .. } => "hst_copy",
            Certificate::ChiForest(_) => "chi_forest",
            Certificate::RedNet(_) => "red_net",
            Certificate::LabelMonotonePath { .. } => "label_monotone_path",
        }
    }

    pub fn color(&self) -> Option<Color> {
        match self {
            Certificate::MonoClique { color, .. }
            | Certificate::MonoPathPower { color, .. }
            | Certificate::MonoTightPath3 { color, .. }
            | Certificate::MonoClique3 { color, .. }
            | Certificate::MonoBlowup { color, .. }
            | Certificate::CliqueChain { color, .. } => Some(*color),
            _ => None,
        }
    }

    /// All distinct instance vertices the certificate touches, increasing.
    pub fn footprint(&self) -> Vec<u32> {
        match self {
            Certificate::MonoClique { vertices, .. }
            | Certificate::MonoPathPower { vertices, .. }
            | Certificate::MonoTightPath3 { vertices, .. }
            | Certificate::MonoClique3 { vertices, .. }
            | Certificate::MonoBlowup { vertices, .. }
            | Certificate::NonIncreasingSet { vertices }
            | Certificate::LexicographicSet { vertices, .. }
            | Certificate::HstCopy { vertices, .. }
            | Certificate::LabelMonotonePath { vertices, .. } => vertices.clone(),
            Certificate::CliqueChain { cliques, .. } => {
                let mut all: Vec<u32> = cliques.iter().flatten().copied().collect();
                all.sort_unstable();
                all.dedup();
                all
            }
            Certificate::ChiForest(c) => c.forest.nodes().to_vec(),
            Certificate::RedNet(c) => {
                let mut all: Vec<u32> = c.sets.values().flatten().copied().collect();
                all.sort_unstable();
                all.dedup();
                all
            }
        }
    }

    fn params(&self) -> BTreeMap<String, u64> {
        let mut p = BTreeMap::new();
        match self {
            Certificate::MonoClique { vertices, .. } => {
                p.insert("s".into(), vertices.len() as u64);
            }
            Certificate::MonoPathPower { vertices, t, .. } => {
                p.insert("n".into(), vertices.len() as u64);
                p.insert("t".into(), *t as u64);
            }
            Certificate::MonoTightPath3 { vertices, .. } => {
                p.insert("n".into(), vertices.len() as u64);
            }
            Certificate::MonoClique3 { vertices, .. } => {
                p.insert("s".into(), vertices.len() as u64);
            }
            Certificate::MonoBlowup { vertices, t, .. } => {
                p.insert("t".into(), *t as u64);
                p.insert("n".into(), (vertices.len() as u64) / (*t as u64).max(1));
            }
            Certificate::NonIncreasingSet { vertices } => {
                p.insert("s".into(), vertices.len() as u64);
            }
            Certificate::LexicographicSet { vertices, .. } => {
                p.insert("s".into(), vertices.len() as u64);
            }
            Certificate::CliqueChain { cliques, .. } => {
                p.insert("m".into(), cliques.len() as u64);
                p.insert("t".into(), cliques.first().map_or(0, |c| c.len()) as u64);
            }
            Certificate::HstCopy { s, t, .. } => {
                p.insert("s".into(), *s as u64);
                p.insert("t".into(), *t as u64);
            }
            Certificate::ChiForest(c) => {
                p.insert("q".into(), c.q as u64);
                p.insert("m".into(), c.m as u64);
            }
            Certificate::RedNet(c) => {
                p.insert("s".into(), c.s as u64);
                p.insert("r".into(), c.r as u64);
                p.insert("t".into(), c.t as u64);
            }
            Certificate::LabelMonotonePath { vertices, .. } => {
                p.insert("len".into(), vertices.len() as u64);
            }
        }
        p
    }

    fn aux(&self) -> Value {
        match self {
            Certificate::MonoClique { via, .. } | Certificate::MonoPathPower { via, .. } => {
                match via {
                    Some(v) => json!({ "via": v }),
                    None => Value::Null,
                }
            }
            Certificate::LexicographicSet {
                direction,
                colors,
                nonincreasing_colors,
                ..
            } => json!({
                "direction": direction,
                "colors": colors,
                "nonincreasing_colors": nonincreasing_colors,
            }),
            Certificate::CliqueChain { cliques, .. } => json!({ "cliques": cliques }),
            Certificate::HstCopy { s, .. } => json!({ "split": s }),
            Certificate::ChiForest(c) => json!({
                "parent": stringify_keys(c.forest.parent_map()),
                "functions": c.functions,
            }),
            Certificate::RedNet(c) => json!({
                "nodes": c.forest.nodes(),
                "parent": stringify_keys(c.forest.parent_map()),
                "sets": c.sets.iter().map(|(k, v)| (k.to_string(), v.clone())).collect::<BTreeMap<_, _>>(),
            }),
            Certificate::LabelMonotonePath { direction, .. } => json!({ "direction": direction }),
            _ => Value::Null,
        }
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "kind": self.kind_name(),
            "params": self.params(),
            "vertices": self.footprint(),
            "color": self.color(),
            "aux": self.aux(),
        })
    }

    /// Stable pretty-printed JSON with a trailing newline; byte-identical
    /// for equal certificates.
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json_value()).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_json_str(text: &str) -> Result<Self, CertCodecError> {
        let v: Value = serde_json::from_str(text).map_err(|e| mal(e.to_string()))?;
        Self::from_json_value(&v)
    }

    pub fn from_json_value(v: &Value) -> Result<Self, CertCodecError> {
        let obj = v.as_object().ok_or_else(|| mal("not an object"))?;
        let kind = obj
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| mal("missing kind"))?;
        let vertices = get_u32_list(obj.get("vertices").unwrap_or(&Value::Null))
            .ok_or_else(|| mal("missing or malformed vertices"))?;
        let color: Option<Color> = match obj.get("color") {
            None | Some(Value::Null) => None,
            Some(c) => {
                Some(serde_json::from_value(c.clone()).map_err(|e| mal(format!("color: {e}")))?)
            }
        };
        let params = obj.get("params").and_then(Value::as_object);
        let aux = obj.get("aux").unwrap_or(&Value::Null);
        let need_color = || color.ok_or_else(|| mal("missing color"));
        let param = |name: &str| -> Result<u64, CertCodecError> {
            params
                .and_then(|p| p.get(name))
                .and_then(Value::as_u64)
                .ok_or_else(|| mal(format!("missing param {name}")))
        };
        let via_of = |aux: &Value| -> Option<String> {
            aux.get("via").and_then(Value::as_str).map(String::from)
        };
        match kind {
            "mono_clique" => Ok(Certificate::MonoClique {
                color: need_color()?,
                vertices,
                via: via_of(aux),
            }),
            "mono_path_power" => Ok(Certificate::MonoPathPower {
                color: need_color()?,
                t: param("t")? as u32,
                vertices,
                via: via_of(aux),
            }),
            "mono_tight_path3" => Ok(Certificate::MonoTightPath3 {
                color: need_color()?,
                vertices,
            }),
            "mono_clique3" => Ok(Certificate::MonoClique3 {
                color: need_color()?,
                vertices,
            }),
            "mono_blowup" => Ok(Certificate::MonoBlowup {
                color: need_color()?,
                t: param("t")? as u32,
                vertices,
            }),
            "non_increasing_set" => Ok(Certificate::NonIncreasingSet { vertices }),
            "lexicographic_set" => {
                let direction = serde_json::from_value(
                    aux.get("direction").cloned().unwrap_or(Value::Null),
                )
                .map_err(|e| mal(format!("direction: {e}")))?;
                let colors = get_u32_list(aux.get("colors").unwrap_or(&Value::Null))
                    .ok_or_else(|| mal("missing aux.colors"))?;
                let nonincreasing_colors = aux
                    .get("nonincreasing_colors")
                    .and_then(Value::as_bool)
                    .unwrap_or(false);
                Ok(Certificate::LexicographicSet {
                    vertices,
                    direction,
                    colors,
                    nonincreasing_colors,
                })
            }
            "clique_chain" => {
                let cl = aux
                    .get("cliques")
                    .and_then(Value::as_array)
                    .ok_or_else(|| mal("missing aux.cliques"))?;
                let cliques: Option<Vec<Vec<u32>>> = cl.iter().map(get_u32_list).collect();
                Ok(Certificate::CliqueChain {
                    color: need_color()?,
                    cliques: cliques.ok_or_else(|| mal("malformed aux.cliques"))?,
                })
            }
            "hst_copy" => Ok(Certificate::HstCopy {
                s: param("s")? as u32,
                t: param("t")? as u32,
                vertices,
            }),
            "chi_forest" => {
                let q = param("q")? as u32;
                let m = param("m")? as u32;
                let parent = parse_parent_map(aux.get("parent"))?;
                let functions = aux
                    .get("functions")
                    .and_then(Value::as_array)
                    .map(|fs| fs.iter().map(get_u32_list).collect::<Option<Vec<_>>>())
                    .ok_or_else(|| mal("missing aux.functions"))?
                    .ok_or_else(|| mal("malformed aux.functions"))?;
                let forest = OrderedForest::new(vertices, parent)?;
                Ok(Certificate::ChiForest(ChiForestCert {
                    q,
                    m,
                    forest,
                    functions,
                }))
            }
            "red_net" => {
                let nodes = get_u32_list(aux.get("nodes").unwrap_or(&Value::Null))
                    .ok_or_else(|| mal("missing aux.nodes"))?;
                let parent = parse_parent_map(aux.get("parent"))?;
                let sets_obj = aux
                    .get("sets")
                    .and_then(Value::as_object)
                    .ok_or_else(|| mal("missing aux.sets"))?;
                let mut sets = BTreeMap::new();
                for (k, val) in sets_obj {
                    let node: u32 = k.parse().map_err(|_| mal(format!("bad set key {k}")))?;
                    let verts = get_u32_list(val).ok_or_else(|| mal("malformed set"))?;
                    sets.insert(node, verts);
                }
                let forest = OrderedForest::new(nodes, parent)?;
                Ok(Certificate::RedNet(RedNetCert {
                    s: param("s")? as u32,
                    r: param("r")? as u32,
                    t: param("t")? as u32,
                    forest,
                    sets,
                }))
            }
            "label_monotone_path" => {
                let direction = serde_json::from_value(
                    aux.get("direction").cloned().unwrap_or(Value::Null),
                )
                .map_err(|e| mal(format!("direction: {e}")))?;
                Ok(Certificate::LabelMonotonePath { direction, vertices })
            }
            other => Err(CertCodecError::UnknownKind(other.to_string())),
        }
    }
}

fn stringify_keys(m: &BTreeMap<u32, u32>) -> BTreeMap<String, u32> {
    m.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

fn parse_parent_map(v: Option<&Value>) -> Result<BTreeMap<u32, u32>, CertCodecError> {
    let mut parent = BTreeMap::new();
    let Some(v) = v else { return Ok(parent) };
    if v.is_null() {
        return Ok(parent);
    }
    let obj = v.as_object().ok_or_else(|| mal("parent is not an object"))?;
    for (k, val) in obj {
        let child: u32 = k.parse().map_err(|_| mal(format!("bad parent key {k}")))?;
        let par = val
            .as_u64()
            .ok_or_else(|| mal(format!("bad parent value for {k}")))? as u32;
        parent.insert(child, par);
    }
    Ok(parent)
}

fn get_u32_list(v: &Value) -> Option<Vec<u32>> {
    v.as_array()?
        .iter()
        .map(|x| x.as_u64().map(|u| u as u32))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain_forest() -> OrderedForest {
        // 9 -> 10 -> 11 (one path component)
        OrderedForest::new(vec![9, 10, 11], BTreeMap::from([(10, 9), (11, 10)])).unwrap()
    }

    #[test]
    fn forest_validation_accepts_two_tree_instance() {
        // tree one: root 1 with subtrees {2,3}, {4,5}, {6,7,8}; tree two: 9 -> 10 -> 11
        let nodes = vec![1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11];
        let parent = BTreeMap::from([
            (2, 1),
            (3, 2),
            (4, 1),
            (5, 4),
            (6, 1),
            (7, 6),
            (8, 6),
            (10, 9),
            (11, 10),
        ]);
        let f = OrderedForest::new(nodes, parent).unwrap();
        assert_eq!(f.depth(), 2);
        assert_eq!(f.roots(), vec![1, 9]);
        assert_eq!(f.leaves(), vec![3, 5, 7, 8, 11]);
        assert_eq!(f.leftmost_path(), vec![1, 2, 3]);
        assert_eq!(f.rightmost_path(), vec![9, 10, 11]);
        assert_eq!(f.ancestors(8), vec![6, 1]);
    }

    #[test]
    fn forest_rejects_unbalanced_and_misordered() {
        // leaf 2 at depth 1, leaf 3 at depth 0
        let err = OrderedForest::new(vec![1, 2, 3], BTreeMap::from([(2, 1)])).unwrap_err();
        assert!(matches!(err, ForestError::NotBalanced(_, _)));

        // balanced, but the descendants of root 1 extend past root 2
        let err = OrderedForest::new(vec![1, 2, 3, 4], BTreeMap::from([(3, 1), (4, 2)]))
            .unwrap_err();
        assert!(matches!(err, ForestError::NotWellOrdered(1, 2)));

        let err = OrderedForest::new(vec![1, 2], BTreeMap::from([(1, 2)])).unwrap_err();
        assert!(matches!(err, ForestError::ParentNotBefore { .. }));
    }

    #[test]
    fn certificate_json_roundtrip() {
        let certs = vec![
            Certificate::MonoClique {
                color: Color::Red,
                vertices: vec![1, 4, 6],
                via: None,
            },
            Certificate::MonoPathPower {
                color: Color::Blue,
                t: 2,
                vertices: vec![1, 2, 3, 5],
                via: Some("path_bundle".into()),
            },
            Certificate::LexicographicSet {
                vertices: vec![2, 5, 9],
                direction: LexDirection::Forward,
                colors: vec![3, 1],
                nonincreasing_colors: true,
            },
            Certificate::CliqueChain {
                color: Color::Red,
                cliques: vec![vec![1, 3], vec![3, 7], vec![7, 8]],
            },
            Certificate::HstCopy {
                s: 3,
                t: 2,
                vertices: vec![1, 2, 5, 6],
            },
            Certificate::ChiForest(ChiForestCert {
                q: 2,
                m: 11,
                forest: chain_forest(),
                functions: vec![(1..=11).collect(), (1..=11).rev().collect()],
            }),
            Certificate::RedNet(RedNetCert {
                s: 2,
                r: 3,
                t: 1,
                forest: OrderedForest::new(vec![1, 2], BTreeMap::from([(2, 1)])).unwrap(),
                sets: BTreeMap::from([(1, vec![1, 2, 3]), (2, vec![4, 5, 6])]),
            }),
            Certificate::LabelMonotonePath {
                direction: LabelDirection::NonIncreasing,
                vertices: vec![1, 2, 6],
            },
        ];
        for c in certs {
            let text = c.to_json_string();
            let back = Certificate::from_json_str(&text).unwrap();
            assert_eq!(back, c, "round trip failed for {}", c.kind_name());
            // stability: serializing again is byte-identical
            assert_eq!(back.to_json_string(), text);
        }
    }

    #[test]
    fn envelope_has_the_five_fields() {
        let c = Certificate::NonIncreasingSet {
            vertices: vec![1, 2, 3],
        };
        let v = c.to_json_value();
        for field in ["kind", "params", "vertices", "color", "aux"] {
            assert!(v.get(field).is_some(), "missing field {field}");
        }
        assert_eq!(v["color"], Value::Null);
        assert_eq!(v["params"]["s"], 3);
    }
}
