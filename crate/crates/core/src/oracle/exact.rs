//! Exact threshold computation by pruned depth-first search over all
//! colorings or labelings.
//!
//! Cells are assigned in colex order, so the search grows instances vertex
//! by vertex. A branch dies the moment the partial instance completes a
//! copy of a forbidden structure; anchored detectors keep the per-cell
//! check cheap. Searches parallelize over surviving top-level prefixes and
//! merge with order-independent reductions, so results are deterministic.

use crate::model::{
    n_pairs, pair_index, Color, Instance, PairLabeling, PatternKind, TripleColoring, TwoColoring,
};
use crate::oracle::detect::{NiNotion, PartialLabels, PartialPairs, PartialTriples};
use crate::par;

/// Result of an exact-threshold search.
#[derive(Clone, Debug)]
pub enum ExactOutcome {
    Exact {
        value: u32,
        /// An avoiding instance on value-1 vertices, when value >= 2.
        extremal: Option<Instance>,
    },
    Unknown {
        n_max: u32,
    },
}

impl ExactOutcome {
    pub fn value(&self) -> Option<u32> {
        match self {
            ExactOutcome::Exact { value, .. } => Some(*value),
            ExactOutcome::Unknown { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("patterns mix 2-graph and 3-uniform shapes")]
    MixedUniformity,
    #[error("pattern {0:?} is not supported on this instance shape")]
    UnsupportedPattern(String),
    #[error("instance with {n} vertices exceeds the configured cap {cap}")]
    CapExceeded { n: u32, cap: u32 },
    #[error("invalid search parameter: {0}")]
    BadParam(String),
}

/// Number of vertices spanned by a copy of the pattern when the pattern
/// has no colored cells at all (so any coloring of that many vertices
/// contains it); None when the pattern constrains at least one cell.
fn edgeless_size(p: PatternKind) -> Option<u32> {
    match p {
        PatternKind::Clique { s } if s <= 1 => Some(s),
        PatternKind::PathPower { n, .. } if n <= 1 => Some(n),
        PatternKind::TightPath3 { n } if n <= 2 => Some(n),
        PatternKind::Clique3 { s } if s <= 2 => Some(s),
        PatternKind::Blowup { n, t } if n <= 1 => Some(t),
        _ => None,
    }
}

// ---------------------------------------------------------------------------
// 2-graph avoider search
// ---------------------------------------------------------------------------

struct PairSearch {
    n: usize,
    red_pat: PatternKind,
    blue_pat: PatternKind,
    g: PartialPairs,
    items: Vec<(usize, usize)>,
    symmetric: bool,
}

impl PairSearch {
    fn new(n: usize, red_pat: PatternKind, blue_pat: PatternKind) -> Self {
        let mut items = Vec::with_capacity(n_pairs(n));
        for b in 1..n {
            for a in 0..b {
                items.push((a, b));
            }
        }
        PairSearch {
            n,
            red_pat,
            blue_pat,
            g: PartialPairs::new(n),
            items,
            symmetric: red_pat == blue_pat,
        }
    }

    fn pattern(&self, c: Color) -> PatternKind {
        match c {
            Color::Red => self.red_pat,
            Color::Blue => self.blue_pat,
        }
    }

    /// Does the partial coloring now contain a monochromatic copy in `c`
    /// completed by the just-colored pair (a, b)? Complete as a detector:
    /// every copy's colex-last cell triggers it.
    fn completes(&self, a: usize, b: usize, c: Color) -> bool {
        match self.pattern(c) {
            PatternKind::Clique { s } => {
                let mut common = self.g.adj(a, c).clone();
                common.and_assign(self.g.adj(b, c));
                self.g.find_clique(s as usize - 2, c, Some(&common)).is_some()
            }
            PatternKind::PathPower { n, t } => {
                self.g.path_power_ending_at(b, n as usize, t as usize, c)
            }
            PatternKind::Blowup { n, t } => self.g.find_blowup(n as usize, t as usize, c).is_some(),
            _ => unreachable!("3-uniform pattern in a pair search"),
        }
    }

    fn apply(&mut self, idx: usize, c: Color) -> bool {
        let (a, b) = self.items[idx];
        self.g.set(a, b, c);
        if self.completes(a, b, c) {
            self.g.unset(a, b, c);
            return false;
        }
        true
    }

    fn undo(&mut self, idx: usize, c: Color) {
        let (a, b) = self.items[idx];
        self.g.unset(a, b, c);
    }

    fn colors_for(&self, idx: usize) -> &'static [Color] {
        if idx == 0 && self.symmetric {
            &[Color::Red]
        } else {
            &[Color::Red, Color::Blue]
        }
    }

    fn dfs(&mut self, idx: usize, assignment: &mut Vec<Color>) -> Option<Vec<Color>> {
        if idx == self.items.len() {
            return Some(assignment.clone());
        }
        for &c in self.colors_for(idx) {
            if self.apply(idx, c) {
                assignment.push(c);
                if let Some(found) = self.dfs(idx + 1, assignment) {
                    return Some(found);
                }
                assignment.pop();
                self.undo(idx, c);
            }
        }
        None
    }

    fn collect_prefixes(
        &mut self,
        idx: usize,
        depth: usize,
        acc: &mut Vec<Color>,
        out: &mut Vec<Vec<Color>>,
    ) {
        if idx == depth {
            out.push(acc.clone());
            return;
        }
        for &c in self.colors_for(idx) {
            if self.apply(idx, c) {
                acc.push(c);
                self.collect_prefixes(idx + 1, depth, acc, out);
                acc.pop();
                self.undo(idx, c);
            }
        }
    }

    fn coloring_from(&self, assignment: &[Color]) -> TwoColoring {
        let blue = assignment.iter().map(|&c| c == Color::Blue).collect();
        TwoColoring::from_blue_bits(self.n as u32, blue)
    }
}

/// Finds a red/blue coloring of K_N with no red copy of `red_pat` and no
/// blue copy of `blue_pat`, or proves there is none.
pub fn pair_avoider(n: u32, red_pat: PatternKind, blue_pat: PatternKind) -> Option<TwoColoring> {
    for (pat, fits) in [(red_pat, true), (blue_pat, true)] {
        let _ = fits;
        if let Some(k) = edgeless_size(pat) {
            if n >= k {
                return None;
            }
        }
    }
    let mut s = PairSearch::new(n as usize, red_pat, blue_pat);
    if s.items.is_empty() {
        // 0 or 1 vertices: avoider iff neither pattern fits
        let fits = |p: PatternKind| p.n_pattern_vertices() <= n;
        if fits(red_pat) || fits(blue_pat) {
            return None;
        }
        return Some(TwoColoring::from_fn(n.max(1), |_, _| Color::Red).unwrap());
    }
    let depth = split_depth(s.items.len());
    let mut prefixes = Vec::new();
    s.collect_prefixes(0, depth, &mut Vec::new(), &mut prefixes);
    par::par_find_map_first(&prefixes, |prefix| {
        let mut local = PairSearch::new(n as usize, red_pat, blue_pat);
        for (idx, &c) in prefix.iter().enumerate() {
            let ok = local.apply(idx, c);
            debug_assert!(ok, "prefix must replay cleanly");
        }
        let mut assignment = prefix.clone();
        local
            .dfs(depth, &mut assignment)
            .map(|full| local.coloring_from(&full))
    })
}

fn split_depth(total_items: usize) -> usize {
    // enough prefixes to feed the pool without ballooning the frontier
    total_items.min(10)
}

// ---------------------------------------------------------------------------
// 3-uniform avoider search
// ---------------------------------------------------------------------------

struct TripleSearch {
    n: usize,
    red_pat: PatternKind,
    blue_pat: PatternKind,
    g: PartialTriples,
    items: Vec<(usize, usize, usize)>,
    /// chi[color][pair]: longest monochromatic tight path ending at the
    /// pair, over fully colored levels only. Baseline 2.
    chi: [Vec<u32>; 2],
    symmetric: bool,
}

impl TripleSearch {
    fn new(n: usize, red_pat: PatternKind, blue_pat: PatternKind) -> Self {
        let mut items = Vec::new();
        for k in 2..n {
            for b in 1..k {
                for a in 0..b {
                    items.push((a, b, k));
                }
            }
        }
        TripleSearch {
            n,
            red_pat,
            blue_pat,
            g: PartialTriples::new(n),
            items,
            chi: [vec![2; n_pairs(n)], vec![2; n_pairs(n)]],
            symmetric: red_pat == blue_pat,
        }
    }

    fn pattern(&self, c: Color) -> PatternKind {
        match c {
            Color::Red => self.red_pat,
            Color::Blue => self.blue_pat,
        }
    }

    fn slot(c: Color) -> usize {
        match c {
            Color::Red => 0,
            Color::Blue => 1,
        }
    }

    fn completes(&self, i: usize, j: usize, k: usize, c: Color) -> bool {
        match self.pattern(c) {
            PatternKind::TightPath3 { n } => self.chi[Self::slot(c)][pair_index(i, j)] + 1 >= n,
            PatternKind::Clique3 { s } => self.anchored_clique3(i, j, k, s as usize, c),
            _ => unreachable!("pair pattern in a triple search"),
        }
    }

    /// Is there a monochromatic 3-uniform s-clique whose three largest
    /// vertices are i < j < k? Searches the s-3 remaining vertices below i.
    fn anchored_clique3(&self, i: usize, j: usize, k: usize, s: usize, c: Color) -> bool {
        if s == 3 {
            return true; // the triple itself
        }
        let mut chosen: Vec<usize> = Vec::with_capacity(s - 3);
        self.clique3_down(&[i, j, k], &mut chosen, i, s - 3, c)
    }

    fn clique3_down(
        &self,
        base: &[usize; 3],
        chosen: &mut Vec<usize>,
        below: usize,
        need: usize,
        c: Color,
    ) -> bool {
        if need == 0 {
            return true;
        }
        for x in (0..below).rev() {
            if x + 1 < need {
                break;
            }
            // all triples (x, u, v) with u < v drawn from chosen + base
            let mut others: Vec<usize> = chosen.clone();
            others.extend_from_slice(base);
            others.sort_unstable();
            let mut ok = true;
            'pairs: for (yi, &u) in others.iter().enumerate() {
                for &v in &others[yi + 1..] {
                    if !self.g.is(x, u, v, c) {
                        ok = false;
                        break 'pairs;
                    }
                }
            }
            if ok {
                chosen.push(x);
                if self.clique3_down(base, chosen, x, need - 1, c) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    fn is_level_end(&self, idx: usize) -> Option<usize> {
        let (a, b, k) = self.items[idx];
        if a + 2 == k && b + 1 == k {
            Some(k)
        } else {
            None
        }
    }

    /// Recomputes chi for pairs (x, k) after level k is fully colored.
    fn push_level(&mut self, k: usize) {
        for x in 0..k {
            for slot in 0..2 {
                let color = if slot == 0 { Color::Red } else { Color::Blue };
                let mut best = 2u32;
                for w in 0..x {
                    if self.g.is(w, x, k, color) {
                        best = best.max(self.chi[slot][pair_index(w, x)] + 1);
                    }
                }
                self.chi[slot][pair_index(x, k)] = best;
            }
        }
    }

    fn pop_level(&mut self, k: usize) {
        for x in 0..k {
            for slot in 0..2 {
                self.chi[slot][pair_index(x, k)] = 2;
            }
        }
    }

    fn apply(&mut self, idx: usize, c: Color) -> bool {
        let (a, b, k) = self.items[idx];
        self.g.set(a, b, k, Some(c));
        if self.completes(a, b, k, c) {
            self.g.set(a, b, k, None);
            return false;
        }
        if let Some(level) = self.is_level_end(idx) {
            self.push_level(level);
        }
        true
    }

    fn undo(&mut self, idx: usize, _c: Color) {
        let (a, b, k) = self.items[idx];
        if let Some(level) = self.is_level_end(idx) {
            self.pop_level(level);
        }
        self.g.set(a, b, k, None);
    }

    fn colors_for(&self, idx: usize) -> &'static [Color] {
        if idx == 0 && self.symmetric {
            &[Color::Red]
        } else {
            &[Color::Red, Color::Blue]
        }
    }

    fn dfs(&mut self, idx: usize, assignment: &mut Vec<Color>) -> Option<Vec<Color>> {
        if idx == self.items.len() {
            return Some(assignment.clone());
        }
        for &c in self.colors_for(idx) {
            if self.apply(idx, c) {
                assignment.push(c);
                if let Some(found) = self.dfs(idx + 1, assignment) {
                    return Some(found);
                }
                assignment.pop();
                self.undo(idx, c);
            }
        }
        None
    }

    fn collect_prefixes(
        &mut self,
        idx: usize,
        depth: usize,
        acc: &mut Vec<Color>,
        out: &mut Vec<Vec<Color>>,
    ) {
        if idx == depth {
            out.push(acc.clone());
            return;
        }
        for &c in self.colors_for(idx) {
            if self.apply(idx, c) {
                acc.push(c);
                self.collect_prefixes(idx + 1, depth, acc, out);
                acc.pop();
                self.undo(idx, c);
            }
        }
    }

    fn coloring_from(&self, assignment: &[Color]) -> TripleColoring {
        let blue = assignment.iter().map(|&c| c == Color::Blue).collect();
        TripleColoring::from_blue_bits(self.n as u32, blue)
    }
}

pub fn triple_avoider(
    n: u32,
    red_pat: PatternKind,
    blue_pat: PatternKind,
) -> Option<TripleColoring> {
    for pat in [red_pat, blue_pat] {
        if let Some(k) = edgeless_size(pat) {
            if n >= k {
                return None;
            }
        }
    }
    let mut s = TripleSearch::new(n as usize, red_pat, blue_pat);
    if s.items.is_empty() {
        let fits = |p: PatternKind| p.n_pattern_vertices() <= n;
        if fits(red_pat) || fits(blue_pat) {
            return None;
        }
        return Some(TripleColoring::from_fn(n.max(1), |_, _, _| Color::Red).unwrap());
    }
    let depth = split_depth(s.items.len());
    let mut prefixes = Vec::new();
    s.collect_prefixes(0, depth, &mut Vec::new(), &mut prefixes);
    par::par_find_map_first(&prefixes, |prefix| {
        let mut local = TripleSearch::new(n as usize, red_pat, blue_pat);
        for (idx, &c) in prefix.iter().enumerate() {
            let ok = local.apply(idx, c);
            debug_assert!(ok, "prefix must replay cleanly");
        }
        let mut assignment = prefix.clone();
        local
            .dfs(depth, &mut assignment)
            .map(|full| local.coloring_from(&full))
    })
}

/// Smallest N <= n_max such that every red/blue coloring contains a red
/// copy of `red_pat` or a blue copy of `blue_pat`, with an extremal
/// avoiding coloring at N-1. Ordered instances have no vertex symmetry;
/// only the color-complement symmetry is exploited, when the patterns
/// coincide.
pub fn exact_ordered_ramsey(
    red_pat: PatternKind,
    blue_pat: PatternKind,
    n_max: u32,
) -> Result<ExactOutcome, OracleError> {
    red_pat
        .validate()
        .map_err(|e| OracleError::BadParam(e.to_string()))?;
    blue_pat
        .validate()
        .map_err(|e| OracleError::BadParam(e.to_string()))?;
    if red_pat.is_three_uniform() != blue_pat.is_three_uniform() {
        return Err(OracleError::MixedUniformity);
    }
    let three = red_pat.is_three_uniform();
    let mut extremal: Option<Instance> = None;
    for n in 1..=n_max {
        let avoider: Option<Instance> = if three {
            triple_avoider(n, red_pat, blue_pat).map(Instance::Triples)
        } else {
            pair_avoider(n, red_pat, blue_pat).map(Instance::Pairs)
        };
        match avoider {
            Some(a) => extremal = Some(a),
            None => {
                return Ok(ExactOutcome::Exact { value: n, extremal });
            }
        }
    }
    Ok(ExactOutcome::Unknown { n_max })
}

// ---------------------------------------------------------------------------
// labeling threshold searches
// ---------------------------------------------------------------------------

/// What the labeling search forbids.
#[derive(Clone, Copy, Debug)]
enum LabelTarget {
    NiSet { s: usize, notion: NiNotion },
    Hst { s: usize, t: usize },
}

struct LabelSearch {
    n: usize,
    n_colors: u32,
    target: LabelTarget,
    g: PartialLabels,
    items: Vec<(usize, usize)>,
}

impl LabelSearch {
    fn new(n: usize, n_colors: u32, target: LabelTarget) -> Self {
        let mut items = Vec::with_capacity(n_pairs(n));
        for b in 1..n {
            for a in 0..b {
                items.push((a, b));
            }
        }
        LabelSearch {
            n,
            n_colors,
            target,
            g: PartialLabels::new(n, n_colors),
            items,
        }
    }

    fn has_witness(&self) -> bool {
        match self.target {
            LabelTarget::NiSet { s, notion } => self.g.find_ni_set(s, notion).is_some(),
            LabelTarget::Hst { s, t } => self.g.find_hst(s, t, None).is_some(),
        }
    }

    fn apply(&mut self, idx: usize, label: u32) -> bool {
        let (a, b) = self.items[idx];
        self.g.set(a, b, label);
        if self.has_witness() {
            self.g.set(a, b, 0);
            return false;
        }
        true
    }

    fn undo(&mut self, idx: usize) {
        let (a, b) = self.items[idx];
        self.g.set(a, b, 0);
    }

    fn dfs(&mut self, idx: usize, assignment: &mut Vec<u32>) -> Option<Vec<u32>> {
        if idx == self.items.len() {
            return Some(assignment.clone());
        }
        for label in 1..=self.n_colors {
            if self.apply(idx, label) {
                assignment.push(label);
                if let Some(found) = self.dfs(idx + 1, assignment) {
                    return Some(found);
                }
                assignment.pop();
                self.undo(idx);
            }
        }
        None
    }

    fn collect_prefixes(
        &mut self,
        idx: usize,
        depth: usize,
        acc: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if idx == depth {
            out.push(acc.clone());
            return;
        }
        for label in 1..=self.n_colors {
            if self.apply(idx, label) {
                acc.push(label);
                self.collect_prefixes(idx + 1, depth, acc, out);
                acc.pop();
                self.undo(idx);
            }
        }
    }

    fn labeling_from(&self, assignment: &[u32]) -> PairLabeling {
        PairLabeling::from_label_vec(self.n as u32, self.n_colors, assignment.to_vec())
    }
}

fn label_avoider(n: u32, n_colors: u32, target: LabelTarget) -> Option<PairLabeling> {
    let mut s = LabelSearch::new(n as usize, n_colors, target);
    if s.items.is_empty() {
        // a single vertex never hosts a structure of size >= 2
        return Some(PairLabeling::from_label_vec(n.max(1), n_colors, vec![]));
    }
    let depth = s.items.len().min(if n_colors <= 2 { 8 } else { 5 });
    let mut prefixes = Vec::new();
    s.collect_prefixes(0, depth, &mut Vec::new(), &mut prefixes);
    par::par_find_map_first(&prefixes, |prefix| {
        let mut local = LabelSearch::new(n as usize, n_colors, target);
        for (idx, &label) in prefix.iter().enumerate() {
            let ok = local.apply(idx, label);
            debug_assert!(ok, "prefix must replay cleanly");
        }
        let mut assignment = prefix.clone();
        local
            .dfs(depth, &mut assignment)
            .map(|full| local.labeling_from(&full))
    })
}

fn exact_label_threshold(
    n_colors: u32,
    target: LabelTarget,
    n_max: u32,
) -> Result<ExactOutcome, OracleError> {
    if n_colors == 0 {
        return Err(OracleError::BadParam("n_colors must be positive".into()));
    }
    let target_size = match target {
        LabelTarget::NiSet { s, .. } => s,
        LabelTarget::Hst { s, t } => s + t - 1,
    } as u32;
    let mut extremal: Option<Instance> = None;
    for n in 1..=n_max {
        if n < target_size {
            // nothing fits; any labeling avoids
            extremal = Some(Instance::Labels(PairLabeling::from_fn(n, n_colors, |_, _| 1).unwrap()));
            continue;
        }
        match label_avoider(n, n_colors, target) {
            Some(a) => extremal = Some(Instance::Labels(a)),
            None => return Ok(ExactOutcome::Exact { value: n, extremal }),
        }
    }
    Ok(ExactOutcome::Unknown { n_max })
}

/// Minimum N such that every labeling with n colors admits a
/// non-increasing s-set under the chosen notion.
pub fn exact_g(
    n_colors: u32,
    s: u32,
    n_max: u32,
    notion: NiNotion,
) -> Result<ExactOutcome, OracleError> {
    if s < 2 {
        return Err(OracleError::BadParam("s must be at least 2".into()));
    }
    exact_label_threshold(
        n_colors,
        LabelTarget::NiSet {
            s: s as usize,
            notion,
        },
        n_max,
    )
}

/// Minimum N such that every labeling with n colors admits a copy of the
/// labeled structure H_{s,t}.
pub fn exact_f(n_colors: u32, s: u32, t: u32, n_max: u32) -> Result<ExactOutcome, OracleError> {
    if s < 2 || t < 1 {
        return Err(OracleError::BadParam("need s >= 2 and t >= 1".into()));
    }
    exact_label_threshold(
        n_colors,
        LabelTarget::Hst {
            s: s as usize,
            t: t as usize,
        },
        n_max,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn erdos_szekeres_small_values() {
        // R(K_s, P_n) = (s-1)(n-1)+1
        for (s, n) in [(2u32, 3u32), (3, 3), (2, 4)] {
            let r = exact_ordered_ramsey(
                PatternKind::Clique { s },
                PatternKind::PathPower { n, t: 1 },
                12,
            )
            .unwrap();
            assert_eq!(r.value(), Some((s - 1) * (n - 1) + 1), "s={s} n={n}");
        }
    }

    #[test]
    fn diagonal_triangle_is_six() {
        let r = exact_ordered_ramsey(
            PatternKind::Clique { s: 3 },
            PatternKind::Clique { s: 3 },
            8,
        )
        .unwrap();
        assert_eq!(r.value(), Some(6));
        match r {
            ExactOutcome::Exact { extremal: Some(Instance::Pairs(c)), .. } => {
                assert_eq!(c.n_vertices(), 5);
                let g = PartialPairs::from_coloring(&c);
                assert!(g.find_clique(3, Color::Red, None).is_none());
                assert!(g.find_clique(3, Color::Blue, None).is_none());
            }
            _ => panic!("extremal coloring expected"),
        }
    }

    #[test]
    fn unknown_when_cap_too_small() {
        let r = exact_ordered_ramsey(
            PatternKind::Clique { s: 3 },
            PatternKind::Clique { s: 3 },
            4,
        )
        .unwrap();
        assert!(matches!(r, ExactOutcome::Unknown { n_max: 4 }));
    }

    #[test]
    fn trivial_labeling_thresholds() {
        // g(1, s) = s: with one color every s-set is non-increasing
        for s in 2..=4 {
            let r = exact_g(1, s, 8, NiNotion::Full).unwrap();
            assert_eq!(r.value(), Some(s));
        }
        // g(n, 2) = 2
        for n in 1..=3 {
            let r = exact_g(n, 2, 6, NiNotion::Full).unwrap();
            assert_eq!(r.value(), Some(2));
        }
        // f(1, 2, t) = t + 1
        for t in 1..=3 {
            let r = exact_f(1, 2, t, 8).unwrap();
            assert_eq!(r.value(), Some(t + 1));
        }
    }

    #[test]
    fn mixed_uniformity_rejected() {
        let e = exact_ordered_ramsey(
            PatternKind::Clique { s: 3 },
            PatternKind::TightPath3 { n: 4 },
            5,
        )
        .unwrap_err();
        assert_eq!(e, OracleError::MixedUniformity);
    }
}
