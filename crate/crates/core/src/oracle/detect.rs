//! Definitional backtracking searches over possibly partially colored
//! instances.
//!
//! Everything here recomputes from the raw cells with no shared state with
//! the DP extractors, so these functions serve as the independent route in
//! every cross-check. Vertices are 0-based internally; public wrappers in
//! the oracle root convert.

use crate::bitset::BitSet;
use crate::model::{n_pairs, n_triples, pair_index, triple_index, Color, PairLabeling, TripleColoring, TwoColoring};
use std::collections::BTreeMap;

fn color_slot(c: Color) -> usize {
    match c {
        Color::Red => 0,
        Color::Blue => 1,
    }
}

/// A 2-graph whose pairs may be colored red, blue or not yet colored.
#[derive(Clone)]
pub struct PartialPairs {
    n: usize,
    adj: [Vec<BitSet>; 2],
}

impl PartialPairs {
    pub fn new(n: usize) -> Self {
        PartialPairs {
            n,
            adj: [vec![BitSet::new(n); n], vec![BitSet::new(n); n]],
        }
    }

    pub fn from_coloring(c: &TwoColoring) -> Self {
        let n = c.n_vertices() as usize;
        let mut g = Self::new(n);
        for b in 1..n {
            for a in 0..b {
                g.set(a, b, c.color(a as u32 + 1, b as u32 + 1));
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn set(&mut self, a: usize, b: usize, c: Color) {
        let s = color_slot(c);
        self.adj[s][a].insert(b);
        self.adj[s][b].insert(a);
    }

    #[inline]
    pub fn unset(&mut self, a: usize, b: usize, c: Color) {
        let s = color_slot(c);
        self.adj[s][a].remove(b);
        self.adj[s][b].remove(a);
    }

    #[inline]
    pub fn is(&self, a: usize, b: usize, c: Color) -> bool {
        self.adj[color_slot(c)][a].contains(b)
    }

    #[inline]
    pub fn adj(&self, v: usize, c: Color) -> &BitSet {
        &self.adj[color_slot(c)][v]
    }

    /// Lexicographically first monochromatic s-clique within `universe`
    /// (all vertices when `None`).
    pub fn find_clique(&self, s: usize, c: Color, universe: Option<&BitSet>) -> Option<Vec<usize>> {
        let cands = match universe {
            Some(u) => u.clone(),
            None => BitSet::full(self.n),
        };
        let mut acc = Vec::with_capacity(s);
        self.clique_dfs(s, c, &cands, &mut acc)
    }

    fn clique_dfs(&self, s: usize, c: Color, cands: &BitSet, acc: &mut Vec<usize>) -> Option<Vec<usize>> {
        if acc.len() == s {
            return Some(acc.clone());
        }
        if cands.count() + acc.len() < s {
            return None;
        }
        for v in cands.iter() {
            acc.push(v);
            let mut next = cands.clone();
            next.and_assign(self.adj(v, c));
            // only vertices above v keep the sequence increasing
            let mut above = BitSet::new(self.n);
            for u in next.iter() {
                if u > v {
                    above.insert(u);
                }
            }
            if let Some(found) = self.clique_dfs(s, c, &above, acc) {
                return Some(found);
            }
            acc.pop();
        }
        None
    }

    /// Lexicographically first monochromatic copy of P_n^t.
    pub fn find_path_power(&self, n: usize, t: usize, c: Color) -> Option<Vec<usize>> {
        if n == 0 {
            return Some(Vec::new());
        }
        let mut seq = Vec::with_capacity(n);
        self.path_power_dfs(n, t, c, &mut seq)
    }

    fn path_power_dfs(&self, n: usize, t: usize, c: Color, seq: &mut Vec<usize>) -> Option<Vec<usize>> {
        if seq.len() == n {
            return Some(seq.clone());
        }
        let start = seq.last().map_or(0, |&l| l + 1);
        for v in start..self.n {
            if self.n - v + seq.len() < n {
                break;
            }
            let window = seq.len().min(t);
            if seq[seq.len() - window..].iter().all(|&u| self.is(u, v, c)) {
                seq.push(v);
                if let Some(found) = self.path_power_dfs(n, t, c, seq) {
                    return Some(found);
                }
                seq.pop();
            }
        }
        None
    }

    /// Longest monochromatic path power ending at vertex `v` (number of
    /// vertices), found by backwards extension. Used as an anchored
    /// forbidden-structure check in the exact searches.
    pub fn path_power_ending_at(&self, v: usize, target: usize, t: usize, c: Color) -> bool {
        let mut seq = vec![v];
        self.backwards_dfs(target, t, c, &mut seq)
    }

    fn backwards_dfs(&self, target: usize, t: usize, c: Color, seq: &mut Vec<usize>) -> bool {
        if seq.len() >= target {
            return true;
        }
        let first = *seq.last().unwrap(); // seq holds the path reversed
        if first + seq.len() + 1 < target {
            return false;
        }
        for u in (0..first).rev() {
            let window = seq.len().min(t);
            if seq[seq.len() - window..].iter().all(|&w| self.is(u, w, c)) {
                seq.push(u);
                if self.backwards_dfs(target, t, c, seq) {
                    return true;
                }
                seq.pop();
            }
        }
        false
    }

    /// Lexicographically first monochromatic copy of the blowup P_n[t]:
    /// n·t increasing vertices in consecutive groups of t, consecutive
    /// groups joined by complete monochromatic bipartite graphs.
    pub fn find_blowup(&self, n: usize, t: usize, c: Color) -> Option<Vec<usize>> {
        let mut seq = Vec::with_capacity(n * t);
        self.blowup_dfs(n, t, c, &mut seq)
    }

    fn blowup_dfs(&self, n: usize, t: usize, c: Color, seq: &mut Vec<usize>) -> Option<Vec<usize>> {
        if seq.len() == n * t {
            return Some(seq.clone());
        }
        let pos = seq.len();
        let group = pos / t;
        let start = seq.last().map_or(0, |&l| l + 1);
        for v in start..self.n {
            if self.n - v + seq.len() < n * t {
                break;
            }
            let ok = if group == 0 {
                true
            } else {
                let prev = &seq[(group - 1) * t..group * t];
                prev.iter().all(|&u| self.is(u, v, c))
            };
            if ok {
                seq.push(v);
                if let Some(found) = self.blowup_dfs(n, t, c, seq) {
                    return Some(found);
                }
                seq.pop();
            }
        }
        None
    }

    /// Exhaustive table: for every monochromatic t-clique that ends some
    /// monochromatic path power, the maximum number of vertices over all
    /// such path powers with that ending window. Enumerates every
    /// monochromatic sequence; use only at desk scale.
    pub fn exhaustive_window_table(&self, t: usize, c: Color) -> BTreeMap<Vec<usize>, usize> {
        let mut table = BTreeMap::new();
        let mut seq = Vec::new();
        self.window_table_dfs(t, c, &mut seq, &mut table);
        table
    }

    fn window_table_dfs(
        &self,
        t: usize,
        c: Color,
        seq: &mut Vec<usize>,
        table: &mut BTreeMap<Vec<usize>, usize>,
    ) {
        if seq.len() >= t {
            let window = seq[seq.len() - t..].to_vec();
            let best = table.entry(window).or_insert(0);
            *best = (*best).max(seq.len());
        }
        let start = seq.last().map_or(0, |&l| l + 1);
        for v in start..self.n {
            let window = seq.len().min(t);
            if seq[seq.len() - window..].iter().all(|&u| self.is(u, v, c)) {
                seq.push(v);
                self.window_table_dfs(t, c, seq, table);
                seq.pop();
            }
        }
    }

    /// Exhaustive longest monochromatic chain of t-cliques ending at each
    /// vertex, by direct enumeration of chains. Needs t >= 2: singleton
    /// cliques chain onto themselves forever.
    pub fn exhaustive_chain_table(&self, t: usize, c: Color) -> Vec<usize> {
        assert!(t >= 2, "chain enumeration needs t >= 2");
        let mut best = vec![0usize; self.n];
        // chains are extended clique by clique; enumerate all cliques first
        let mut cliques: Vec<Vec<usize>> = Vec::new();
        let full = BitSet::full(self.n);
        let mut acc = Vec::new();
        self.enumerate_cliques(t, c, &full, &mut acc, &mut cliques);
        // chain DP by repeated relaxation is avoided; do DFS over chains
        let mut by_first: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (idx, q) in cliques.iter().enumerate() {
            by_first.entry(q[0]).or_default().push(idx);
        }
        fn grow(
            cliques: &[Vec<usize>],
            by_first: &BTreeMap<usize, Vec<usize>>,
            best: &mut [usize],
            cur: usize,
            len: usize,
        ) {
            let last = *cliques[cur].last().unwrap();
            if best[last] < len {
                best[last] = len;
            }
            if let Some(nexts) = by_first.get(&last) {
                for &nx in nexts {
                    grow(cliques, by_first, best, nx, len + 1);
                }
            }
        }
        for (idx, _) in cliques.iter().enumerate() {
            grow(&cliques, &by_first, &mut best, idx, 1);
        }
        best
    }

    fn enumerate_cliques(
        &self,
        t: usize,
        c: Color,
        cands: &BitSet,
        acc: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if acc.len() == t {
            out.push(acc.clone());
            return;
        }
        for v in cands.iter() {
            if acc.last().is_some_and(|&l| v <= l) {
                continue;
            }
            acc.push(v);
            let mut next = cands.clone();
            next.and_assign(self.adj(v, c));
            self.enumerate_cliques(t, c, &next, acc, out);
            acc.pop();
        }
    }
}

/// A 3-uniform coloring whose triples may be uncolored.
#[derive(Clone)]
pub struct PartialTriples {
    n: usize,
    cells: Vec<Option<Color>>,
}

impl PartialTriples {
    pub fn new(n: usize) -> Self {
        PartialTriples {
            n,
            cells: vec![None; n_triples(n)],
        }
    }

    pub fn from_coloring(c: &TripleColoring) -> Self {
        let n = c.n_vertices() as usize;
        let mut g = Self::new(n);
        for k in 2..n {
            for j in 1..k {
                for i in 0..j {
                    g.cells[triple_index(i, j, k)] =
                        Some(c.color(i as u32 + 1, j as u32 + 1, k as u32 + 1));
                }
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn set(&mut self, a: usize, b: usize, c: usize, color: Option<Color>) {
        self.cells[triple_index(a, b, c)] = color;
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize, c: usize) -> Option<Color> {
        self.cells[triple_index(a, b, c)]
    }

    #[inline]
    pub fn is(&self, a: usize, b: usize, c: usize, color: Color) -> bool {
        self.get(a, b, c) == Some(color)
    }

    /// Lexicographically first monochromatic tight path with n vertices.
    pub fn find_tight_path(&self, n: usize, c: Color) -> Option<Vec<usize>> {
        let mut seq = Vec::with_capacity(n);
        self.tight_path_dfs(n, c, &mut seq)
    }

    fn tight_path_dfs(&self, n: usize, c: Color, seq: &mut Vec<usize>) -> Option<Vec<usize>> {
        if seq.len() == n {
            return Some(seq.clone());
        }
        let start = seq.last().map_or(0, |&l| l + 1);
        for v in start..self.n {
            if self.n - v + seq.len() < n {
                break;
            }
            let ok = if seq.len() < 2 {
                true
            } else {
                self.is(seq[seq.len() - 2], seq[seq.len() - 1], v, c)
            };
            if ok {
                seq.push(v);
                if let Some(found) = self.tight_path_dfs(n, c, seq) {
                    return Some(found);
                }
                seq.pop();
            }
        }
        None
    }

    /// Lexicographically first monochromatic 3-uniform s-clique.
    pub fn find_clique3(&self, s: usize, c: Color) -> Option<Vec<usize>> {
        let mut acc = Vec::with_capacity(s);
        self.clique3_dfs(s, c, &mut acc)
    }

    fn clique3_dfs(&self, s: usize, c: Color, acc: &mut Vec<usize>) -> Option<Vec<usize>> {
        if acc.len() == s {
            return Some(acc.clone());
        }
        let start = acc.last().map_or(0, |&l| l + 1);
        for v in start..self.n {
            if self.n - v + acc.len() < s {
                break;
            }
            let mut fine = true;
            'pairs: for x in 0..acc.len() {
                for y in (x + 1)..acc.len() {
                    if !self.is(acc[x], acc[y], v, c) {
                        fine = false;
                        break 'pairs;
                    }
                }
            }
            if fine {
                acc.push(v);
                if let Some(found) = self.clique3_dfs(s, c, acc) {
                    return Some(found);
                }
                acc.pop();
            }
        }
        None
    }

    /// Exhaustive table: longest monochromatic tight path ending at each
    /// ordered pair (x, y). Every pair has at least the trivial value 2.
    pub fn exhaustive_tight_table(&self, c: Color) -> BTreeMap<(usize, usize), usize> {
        let mut table = BTreeMap::new();
        for y in 1..self.n {
            for x in 0..y {
                table.insert((x, y), 2usize);
            }
        }
        let mut seq = Vec::new();
        self.tight_table_dfs(c, &mut seq, &mut table);
        table
    }

    fn tight_table_dfs(
        &self,
        c: Color,
        seq: &mut Vec<usize>,
        table: &mut BTreeMap<(usize, usize), usize>,
    ) {
        if seq.len() >= 2 {
            let key = (seq[seq.len() - 2], seq[seq.len() - 1]);
            let best = table.get_mut(&key).unwrap();
            *best = (*best).max(seq.len());
        }
        let start = seq.last().map_or(0, |&l| l + 1);
        for v in start..self.n {
            let ok = if seq.len() < 2 {
                true
            } else {
                self.is(seq[seq.len() - 2], seq[seq.len() - 1], v, c)
            };
            if ok {
                seq.push(v);
                self.tight_table_dfs(c, seq, table);
                seq.pop();
            }
        }
    }
}

/// Which triple predicate defines a non-increasing set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NiNotion {
    /// label(x,y) >= label(y,z) and label(x,z) equals one of them.
    Full,
    /// label(x,y) >= label(x,z) >= label(y,z).
    MiddleChain,
    /// label(x,y) >= label(y,z) only.
    WeakOnly,
}

/// A pair labeling whose pairs may be unlabeled (0 = unlabeled).
#[derive(Clone)]
pub struct PartialLabels {
    n: usize,
    n_colors: u32,
    labels: Vec<u32>,
}

impl PartialLabels {
    pub fn new(n: usize, n_colors: u32) -> Self {
        PartialLabels {
            n,
            n_colors,
            labels: vec![0; n_pairs(n)],
        }
    }

    pub fn from_labeling(l: &PairLabeling) -> Self {
        let n = l.n_vertices() as usize;
        let mut g = Self::new(n, l.n_colors());
        for b in 1..n {
            for a in 0..b {
                g.labels[pair_index(a, b)] = l.label(a as u32 + 1, b as u32 + 1);
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn n_colors(&self) -> u32 {
        self.n_colors
    }

    #[inline]
    pub fn set(&mut self, a: usize, b: usize, label: u32) {
        self.labels[pair_index(a, b)] = label;
    }

    /// 0 means unlabeled.
    #[inline]
    pub fn get(&self, a: usize, b: usize) -> u32 {
        self.labels[pair_index(a, b)]
    }

    pub fn triple_ok(&self, x: usize, y: usize, z: usize, notion: NiNotion) -> bool {
        let (xy, yz, xz) = (self.get(x, y), self.get(y, z), self.get(x, z));
        if xy == 0 || yz == 0 || xz == 0 {
            return false;
        }
        match notion {
            NiNotion::Full => xy >= yz && (xz == xy || xz == yz),
            NiNotion::MiddleChain => xy >= xz && xz >= yz,
            NiNotion::WeakOnly => xy >= yz,
        }
    }

    /// Lexicographically first non-increasing s-set under the notion.
    pub fn find_ni_set(&self, s: usize, notion: NiNotion) -> Option<Vec<usize>> {
        let mut acc = Vec::with_capacity(s);
        self.ni_dfs(s, notion, &mut acc)
    }

    fn ni_dfs(&self, s: usize, notion: NiNotion, acc: &mut Vec<usize>) -> Option<Vec<usize>> {
        if acc.len() == s {
            return Some(acc.clone());
        }
        let start = acc.last().map_or(0, |&l| l + 1);
        for v in start..self.n {
            if self.n - v + acc.len() < s {
                break;
            }
            let mut fine = true;
            if acc.len() >= 2 {
                // for s = 2 a pair only needs its single pair labeled, which
                // the triples of larger sets check implicitly
                'tri: for x in 0..acc.len() {
                    for y in (x + 1)..acc.len() {
                        if !self.triple_ok(acc[x], acc[y], v, notion) {
                            fine = false;
                            break 'tri;
                        }
                    }
                }
            } else if acc.len() == 1 && self.get(acc[0], v) == 0 {
                fine = false;
            }
            if fine {
                acc.push(v);
                if let Some(found) = self.ni_dfs(s, notion, acc) {
                    return Some(found);
                }
                acc.pop();
            }
        }
        None
    }

    /// Lexicographically first copy of the labeled structure H_{s,t}:
    /// w_1 < ... < w_{s+t-1}, the first s form a Full non-increasing set,
    /// and label(w_{s-1}, w_s) >= label(w_s, w_{s+1}) >= ... is a
    /// non-increasing chain along the trailing path.
    pub fn find_hst(&self, s: usize, t: usize, universe: Option<&[usize]>) -> Option<Vec<usize>> {
        let verts: Vec<usize> = match universe {
            Some(u) => u.to_vec(),
            None => (0..self.n).collect(),
        };
        let mut acc = Vec::with_capacity(s + t - 1);
        self.hst_dfs(s, t, &verts, 0, &mut acc)
    }

    fn hst_dfs(
        &self,
        s: usize,
        t: usize,
        verts: &[usize],
        from: usize,
        acc: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        let total = s + t - 1;
        if acc.len() == total {
            return Some(acc.clone());
        }
        for idx in from..verts.len() {
            let v = verts[idx];
            if verts.len() - idx + acc.len() < total {
                break;
            }
            if self.hst_extend_ok(s, acc, v) {
                acc.push(v);
                if let Some(found) = self.hst_dfs(s, t, verts, idx + 1, acc) {
                    return Some(found);
                }
                acc.pop();
            }
        }
        None
    }

    fn hst_extend_ok(&self, s: usize, acc: &[usize], v: usize) -> bool {
        let pos = acc.len(); // v would become w_{pos+1} (1-based)
        if pos + 1 <= s {
            // clique part: all triples with v must satisfy the Full notion
            if pos == 1 && self.get(acc[0], v) == 0 {
                return false;
            }
            for x in 0..pos {
                for y in (x + 1)..pos {
                    if !self.triple_ok(acc[x], acc[y], v, NiNotion::Full) {
                        return false;
                    }
                }
            }
            true
        } else {
            // path part: chain label(w_{s-1}, w_s) >= ... >= label(w_{pos}, v)
            let prev = acc[pos - 1];
            let anchor = acc[pos - 2];
            let (a, b) = (self.get(anchor, prev), self.get(prev, v));
            a != 0 && b != 0 && a >= b
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Color::{Blue, Red};

    fn complete(n: u32, c: Color) -> PartialPairs {
        PartialPairs::from_coloring(&TwoColoring::from_fn(n, |_, _| c).unwrap())
    }

    #[test]
    fn clique_and_path_on_complete_colorings() {
        let g = complete(5, Red);
        assert_eq!(g.find_clique(4, Red, None), Some(vec![0, 1, 2, 3]));
        assert_eq!(g.find_clique(2, Blue, None), None);
        assert_eq!(g.find_path_power(5, 2, Red), Some(vec![0, 1, 2, 3, 4]));
        assert!(g.find_path_power(2, 1, Blue).is_none());
    }

    #[test]
    fn blowup_on_complete() {
        let g = complete(6, Blue);
        assert_eq!(g.find_blowup(3, 2, Blue), Some(vec![0, 1, 2, 3, 4, 5]));
        assert!(g.find_blowup(3, 2, Red).is_none());
    }

    #[test]
    fn blowup_ignores_within_group_colors() {
        // groups {1,2} and {3,4}: cross pairs blue, within-group pairs red
        let c = TwoColoring::build(4, &[(1, 3), (1, 4), (2, 3), (2, 4)]).unwrap();
        let g = PartialPairs::from_coloring(&c);
        assert_eq!(g.find_blowup(2, 2, Blue), Some(vec![0, 1, 2, 3]));
    }

    #[test]
    fn tight_path_and_clique3() {
        let c = TripleColoring::from_fn(6, |_, _, _| Blue).unwrap();
        let g = PartialTriples::from_coloring(&c);
        assert_eq!(g.find_tight_path(6, Blue), Some(vec![0, 1, 2, 3, 4, 5]));
        assert!(g.find_clique3(3, Red).is_none());
        assert_eq!(g.find_clique3(4, Blue), Some(vec![0, 1, 2, 3]));
    }

    #[test]
    fn exhaustive_window_table_all_blue() {
        let g = complete(5, Blue);
        let table = g.exhaustive_window_table(2, Blue);
        // chi(x1, x2) = x1 + t - 1 in 1-based terms; 0-based: x1 + t
        assert_eq!(table[&vec![2, 4]], 4);
        assert_eq!(table[&vec![0, 1]], 2);
        assert_eq!(table[&vec![3, 4]], 5);
    }

    #[test]
    fn ni_set_notions_nest() {
        let l = PairLabeling::from_fn(5, 3, |i, j| ((i * 3 + j) % 3) + 1).unwrap();
        let p = PartialLabels::from_labeling(&l);
        for s in 3..=4 {
            let full = p.find_ni_set(s, NiNotion::Full);
            let mid = p.find_ni_set(s, NiNotion::MiddleChain);
            let weak = p.find_ni_set(s, NiNotion::WeakOnly);
            if full.is_some() {
                assert!(mid.is_some(), "Full witness implies MiddleChain witness");
            }
            if mid.is_some() {
                assert!(weak.is_some(), "MiddleChain witness implies WeakOnly witness");
            }
        }
    }

    #[test]
    fn hst_on_constant_labels() {
        let l = PairLabeling::from_fn(6, 2, |_, _| 2).unwrap();
        let p = PartialLabels::from_labeling(&l);
        assert_eq!(p.find_hst(3, 2, None), Some(vec![0, 1, 2, 3]));
        assert_eq!(p.find_hst(4, 1, None), Some(vec![0, 1, 2, 3]));
    }
}
