//! Window dynamic programming over monochromatic t-cliques: for each
//! clique (x_1 < ... < x_t) in the stated color, the largest number of
//! vertices of a monochromatic path power ending at exactly that window,
//! with traceable predecessors.
//!
//! Layer construction parallelizes over the last vertex: windows ending at
//! x_t only read windows ending strictly earlier, so each layer is a pure
//! map over its windows.

use crate::bitset::BitSet;
use crate::model::{Color, TwoColoring};
use crate::par;
use std::collections::HashMap;

/// Windows are packed into a u64, 16 bits per vertex, so t <= 4. Desk
/// scale uses t <= 4 throughout.
pub const MAX_WINDOW_T: usize = 4;

fn pack(window: &[u32]) -> u64 {
    debug_assert!(window.len() <= MAX_WINDOW_T);
    let mut key = 0u64;
    for &v in window {
        debug_assert!(v < (1 << 16));
        key = (key << 16) | v as u64;
    }
    key
}

#[derive(Clone, Copy, Debug)]
struct Entry {
    chi: u32,
    /// Lexicographically least predecessor vertex (1-based), if any.
    pred: Option<u32>,
}

/// The computed table for one coloring, color and t.
pub struct WindowChi {
    t: u32,
    color: Color,
    table: HashMap<u64, Entry>,
    /// windows in construction order (ascending last vertex, then lex)
    windows: Vec<Vec<u32>>,
}

impl WindowChi {
    /// chi(x_1..x_t) = max(t, 1 + max over x_0 < x_1 adjacent in color to
    /// all of x_1..x_t of chi(x_0..x_{t-1})), computed in increasing order
    /// of the last vertex.
    pub fn build(coloring: &TwoColoring, t: u32, color: Color) -> WindowChi {
        assert!(t >= 1 && (t as usize) <= MAX_WINDOW_T, "t must be in 1..=4");
        let n = coloring.n_vertices();
        let mut table: HashMap<u64, Entry> = HashMap::new();
        let mut windows: Vec<Vec<u32>> = Vec::new();
        for last in 1..=n {
            let layer = enumerate_windows_ending_at(coloring, t, color, last);
            let results = par::par_map(&layer, |w| {
                let entry = compute_entry(coloring, t, color, w, &table);
                (pack(w), entry)
            });
            for ((key, entry), w) in results.into_iter().zip(layer) {
                table.insert(key, entry);
                windows.push(w);
            }
        }
        WindowChi { t, color, table, windows }
    }

    /// Fully sequential construction, for benchmarking against the
    /// parallel path. Produces an identical table.
    pub fn build_seq(coloring: &TwoColoring, t: u32, color: Color) -> WindowChi {
        assert!(t >= 1 && (t as usize) <= MAX_WINDOW_T, "t must be in 1..=4");
        let n = coloring.n_vertices();
        let mut table: HashMap<u64, Entry> = HashMap::new();
        let mut windows: Vec<Vec<u32>> = Vec::new();
        for last in 1..=n {
            for w in enumerate_windows_ending_at(coloring, t, color, last) {
                let entry = compute_entry(coloring, t, color, &w, &table);
                table.insert(pack(&w), entry);
                windows.push(w);
            }
        }
        WindowChi { t, color, table, windows }
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn color(&self) -> Color {
        self.color
    }

    pub fn len(&self) -> usize {
        self.windows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.windows.is_empty()
    }

    pub fn get(&self, window: &[u32]) -> Option<u32> {
        self.table.get(&pack(window)).map(|e| e.chi)
    }

    pub fn windows(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.windows.iter()
    }

    /// The window with the largest chi; ties break to the first built
    /// (lexicographically least last vertex, then least window).
    pub fn max_window(&self) -> Option<(&[u32], u32)> {
        let mut best: Option<(&[u32], u32)> = None;
        for w in &self.windows {
            let chi = self.table[&pack(w)].chi;
            if best.map_or(true, |(_, b)| chi > b) {
                best = Some((w.as_slice(), chi));
            }
        }
        best
    }

    /// Reconstructs the full path whose last window is `window`; its
    /// length equals chi(window). Traces always pick the stored
    /// lexicographically least predecessor.
    pub fn trace(&self, window: &[u32]) -> Option<Vec<u32>> {
        let mut cur = window.to_vec();
        self.table.get(&pack(&cur))?;
        let mut rev: Vec<u32> = Vec::new();
        loop {
            let entry = self.table[&pack(&cur)];
            match entry.pred {
                Some(p) => {
                    rev.push(*cur.last().unwrap());
                    let mut prev = vec![p];
                    prev.extend_from_slice(&cur[..cur.len() - 1]);
                    cur = prev;
                }
                None => {
                    rev.extend(cur.iter().rev());
                    break;
                }
            }
        }
        rev.reverse();
        Some(rev)
    }
}

/// All monochromatic t-cliques whose largest vertex is `last`, in
/// lexicographic order.
pub(crate) fn enumerate_windows_ending_at(
    coloring: &TwoColoring,
    t: u32,
    color: Color,
    last: u32,
) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if t == 1 {
        out.push(vec![last]);
        return out;
    }
    let n = coloring.n_vertices() as usize;
    let mut cands = coloring.adj(last, color).clone();
    cands.truncate_below(last as usize - 1);
    let mut acc: Vec<u32> = Vec::with_capacity(t as usize);
    fn go(
        coloring: &TwoColoring,
        color: Color,
        need: usize,
        cands: &BitSet,
        acc: &mut Vec<u32>,
        last: u32,
        out: &mut Vec<Vec<u32>>,
        n: usize,
    ) {
        if need == 0 {
            let mut w = acc.clone();
            w.push(last);
            out.push(w);
            return;
        }
        for v0 in cands.iter() {
            let v = v0 as u32 + 1;
            if acc.last().is_some_and(|&prev| v <= prev) {
                continue;
            }
            let mut next = cands.clone();
            next.and_assign(coloring.adj(v, color));
            acc.push(v);
            go(coloring, color, need - 1, &next, acc, last, out, n);
            acc.pop();
        }
    }
    go(coloring, color, t as usize - 1, &cands, &mut acc, last, &mut out, n);
    out.sort_unstable();
    out
}

fn compute_entry(
    coloring: &TwoColoring,
    t: u32,
    color: Color,
    w: &[u32],
    table: &HashMap<u64, Entry>,
) -> Entry {
    // candidates x_0 < x_1, adjacent in color to every window vertex
    let mut cands = coloring.adj(w[0], color).clone();
    for &v in &w[1..] {
        cands.and_assign(coloring.adj(v, color));
    }
    cands.truncate_below(w[0] as usize - 1);
    let mut best = t;
    let mut pred = None;
    for x0 in cands.iter() {
        let x = x0 as u32 + 1;
        let mut prev: Vec<u32> = Vec::with_capacity(t as usize);
        prev.push(x);
        prev.extend_from_slice(&w[..w.len() - 1]);
        let chi_prev = table
            .get(&pack(&prev))
            .expect("predecessor windows are built in earlier layers")
            .chi;
        if chi_prev + 1 > best {
            best = chi_prev + 1;
            pred = Some(x);
        }
    }
    Entry { chi: best, pred }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{random_two_coloring, Prob};
    use crate::model::Color::{Blue, Red};
    use crate::oracle::detect::PartialPairs;

    #[test]
    fn all_blue_window_values() {
        let c = TwoColoring::from_fn(6, |_, _| Blue).unwrap();
        let chi = WindowChi::build(&c, 2, Blue);
        // chi(x_1, x_2) = x_1 + t - 1 on a complete color
        assert_eq!(chi.get(&[3, 5]), Some(4));
        assert_eq!(chi.trace(&[3, 5]), Some(vec![1, 2, 3, 5]));
        assert_eq!(chi.get(&[1, 2]), Some(2));
        assert_eq!(chi.max_window().map(|(_, v)| v), Some(6));
    }

    #[test]
    fn red_query_on_all_blue_is_empty_for_t2() {
        let c = TwoColoring::from_fn(5, |_, _| Blue).unwrap();
        let chi = WindowChi::build(&c, 2, Red);
        assert!(chi.is_empty());
    }

    #[test]
    fn t1_is_the_longest_path_dp() {
        let c = TwoColoring::build(5, &[(1, 2), (2, 4), (4, 5)]).unwrap();
        let chi = WindowChi::build(&c, 1, Blue);
        assert_eq!(chi.get(&[5]), Some(4));
        assert_eq!(chi.trace(&[5]), Some(vec![1, 2, 4, 5]));
    }

    #[test]
    fn matches_exhaustive_table_on_random_instances() {
        for seed in 0..40u64 {
            let c = random_two_coloring(10, Prob::HALF, seed);
            let g = PartialPairs::from_coloring(&c);
            for color in [Red, Blue] {
                for t in 1..=3u32 {
                    let chi = WindowChi::build(&c, t, color);
                    let brute = g.exhaustive_window_table(t as usize, color);
                    assert_eq!(chi.len(), brute.len(), "domain mismatch seed {seed} t {t}");
                    for (w0, best) in &brute {
                        let w: Vec<u32> = w0.iter().map(|&x| x as u32 + 1).collect();
                        assert_eq!(chi.get(&w), Some(*best as u32), "seed {seed} t {t} w {w:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn seq_and_par_builds_agree() {
        for seed in 0..10u64 {
            let c = random_two_coloring(14, Prob::HALF, seed);
            let a = WindowChi::build(&c, 2, Red);
            let b = WindowChi::build_seq(&c, 2, Red);
            assert_eq!(a.len(), b.len());
            for w in a.windows() {
                assert_eq!(a.get(w), b.get(w));
                assert_eq!(a.trace(w), b.trace(w));
            }
        }
    }

    #[test]
    fn traced_path_is_a_valid_power_path() {
        for seed in 0..20u64 {
            let c = random_two_coloring(12, Prob::HALF, seed);
            let chi = WindowChi::build(&c, 2, Blue);
            if let Some((w, v)) = chi.max_window() {
                let path = chi.trace(w).unwrap();
                assert_eq!(path.len() as u32, v);
                for (k, &j) in path.iter().enumerate() {
                    for di in 1..=2usize.min(k) {
                        assert!(c.is(path[k - di], j, Blue));
                    }
                }
            }
        }
    }
}
