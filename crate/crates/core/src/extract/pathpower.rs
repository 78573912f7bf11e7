//! Window-DP extractors for path powers: path power versus clique, the
//! diagonal case, and the blowup variant, with the good-pair frame
//! machinery shared between them.

use super::{found, not_found, ExtractResult, ParadoxError};
use crate::bitset::BitSet;
use crate::cert::Certificate;
use crate::extract::basic::ramsey_in;
use crate::model::{Color, TwoColoring};
use crate::window::{enumerate_windows_ending_at, WindowChi};
use std::collections::BTreeMap;
use std::collections::HashMap;

/// Two same-color t-cliques sharing an endpoint, with non-increasing
/// window-DP values. For t = 1 the cliques are two distinct vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodPair {
    pub first: Vec<u32>,
    pub second: Vec<u32>,
    pub color: Color,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GoodPairVariant {
    Mono,
    RedOnly,
}

/// All monochromatic t-cliques whose first (smallest) vertex is `first`,
/// in lexicographic order.
fn windows_starting_at(coloring: &TwoColoring, t: u32, color: Color, first: u32) -> Vec<Vec<u32>> {
    if t == 1 {
        return vec![vec![first]];
    }
    let n = coloring.n_vertices() as usize;
    let mut init = coloring.adj(first, color).clone();
    let mut above = BitSet::new(n);
    for v in init.iter() {
        if v as u32 + 1 > first {
            above.insert(v);
        }
    }
    init = above;
    let mut out = Vec::new();
    let mut acc = vec![first];
    fn go(
        coloring: &TwoColoring,
        color: Color,
        need: usize,
        cands: &BitSet,
        acc: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if need == 0 {
            out.push(acc.clone());
            return;
        }
        for v0 in cands.iter() {
            let v = v0 as u32 + 1;
            if v <= *acc.last().unwrap() {
                continue;
            }
            let mut next = cands.clone();
            next.and_assign(coloring.adj(v, color));
            acc.push(v);
            go(coloring, color, need - 1, &next, acc, out);
            acc.pop();
        }
    }
    go(coloring, color, t as usize - 1, &init, &mut acc, &mut out);
    out.sort_unstable();
    out
}

/// Lists every good pair under the variant's color rule. For t >= 2 these
/// are the (2t-1)-vertex configurations x_1 < ... < x_{t-1} < y <
/// z_1 < ... < z_{t-1}; for t = 1 they are vertex pairs (u, v), u < v,
/// with chi(u) >= chi(v).
pub fn enumerate_good_pairs(
    coloring: &TwoColoring,
    t: u32,
    variant: GoodPairVariant,
) -> Vec<GoodPair> {
    let colors: &[Color] = match variant {
        GoodPairVariant::Mono => &[Color::Red, Color::Blue],
        GoodPairVariant::RedOnly => &[Color::Red],
    };
    let mut out = Vec::new();
    for &color in colors {
        let chi = WindowChi::build(coloring, t, color);
        if t == 1 {
            for u in 1..=coloring.n_vertices() {
                for v in (u + 1)..=coloring.n_vertices() {
                    if chi.get(&[u]).unwrap() >= chi.get(&[v]).unwrap() {
                        out.push(GoodPair {
                            first: vec![u],
                            second: vec![v],
                            color,
                        });
                    }
                }
            }
            continue;
        }
        for y in 1..=coloring.n_vertices() {
            let left = enumerate_windows_ending_at(coloring, t, color, y);
            if left.is_empty() {
                continue;
            }
            let right = windows_starting_at(coloring, t, color, y);
            for x in &left {
                let cx = chi.get(x).expect("window in table");
                for z in &right {
                    let cz = chi.get(z).expect("window in table");
                    if cx >= cz {
                        out.push(GoodPair {
                            first: x.clone(),
                            second: z.clone(),
                            color,
                        });
                    }
                }
            }
        }
    }
    out
}

/// Frame buckets of good pairs: key is (x-part, z-part, color, chi value),
/// payload is the sorted set Y of shared middle vertices.
type FrameKey = (Vec<u32>, Vec<u32>, Color, u32);

fn bucket_good_pairs(
    coloring: &TwoColoring,
    t: u32,
    chis: &BTreeMap<Color, WindowChi>,
) -> BTreeMap<FrameKey, Vec<u32>> {
    debug_assert!(t >= 2);
    let mut buckets: BTreeMap<FrameKey, Vec<u32>> = BTreeMap::new();
    for (&color, chi) in chis {
        for y in 1..=coloring.n_vertices() {
            let left = enumerate_windows_ending_at(coloring, t, color, y);
            if left.is_empty() {
                continue;
            }
            let right = windows_starting_at(coloring, t, color, y);
            for x in &left {
                let cx = chi.get(x).expect("window in table");
                for z in &right {
                    let cz = chi.get(z).expect("window in table");
                    if cx >= cz {
                        let key = (
                            x[..x.len() - 1].to_vec(),
                            z[1..].to_vec(),
                            color,
                            cx,
                        );
                        buckets.entry(key).or_default().push(y);
                    }
                }
            }
        }
    }
    buckets
}

/// Largest bucket; ties break to the least key, so the choice is
/// deterministic.
fn best_bucket(buckets: &BTreeMap<FrameKey, Vec<u32>>) -> Option<(&FrameKey, &Vec<u32>)> {
    let mut best: Option<(&FrameKey, &Vec<u32>)> = None;
    for (k, v) in buckets {
        if best.map_or(true, |(_, bv)| v.len() > bv.len()) {
            best = Some((k, v));
        }
    }
    best
}

fn trace_truncated(chi: &WindowChi, window: &[u32], n: u32) -> Vec<u32> {
    let mut path = chi.trace(window).expect("window in table");
    path.truncate(n as usize);
    path
}

fn first_window_reaching(chi: &WindowChi, n: u32) -> Option<Vec<u32>> {
    chi.windows()
        .find(|w| chi.get(w).unwrap_or(0) >= n)
        .cloned()
}

/// Path-length classes for t = 1: vertices sharing a chi value span the
/// opposite color pairwise.
fn class_clique(chi: &WindowChi, n_vertices: u32, size: u32) -> Option<Vec<u32>> {
    let mut classes: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for v in 1..=n_vertices {
        classes.entry(chi.get(&[v]).unwrap()).or_default().push(v);
    }
    classes
        .values()
        .find(|c| c.len() >= size as usize)
        .map(|c| c[..size as usize].to_vec())
}

/// Red path power P_n^t versus blue clique K_n. Red window DP first; when
/// it falls short, the good-pair frame with the largest Y-set hosts the
/// clique recursion: a red K_t inside Y would extend a red path power past
/// its recorded value, so only blue K_n can come back.
pub fn extract_pathpower_vs_clique(coloring: &TwoColoring, t: u32, n: u32) -> ExtractResult {
    assert!(t >= 1 && n >= t, "need n >= t >= 1");
    let chi_red = WindowChi::build(coloring, t, Color::Red);
    if let Some(w) = first_window_reaching(&chi_red, n) {
        return found(Certificate::MonoPathPower {
            color: Color::Red,
            t,
            vertices: trace_truncated(&chi_red, &w, n),
            via: None,
        });
    }
    if t == 1 {
        // equal-chi classes are pairwise blue
        if let Some(verts) = class_clique(&chi_red, coloring.n_vertices(), n) {
            debug_assert!(coloring.is_clique(&verts, Color::Blue));
            return found(Certificate::MonoClique {
                color: Color::Blue,
                vertices: verts,
                via: None,
            });
        }
        return not_found();
    }
    let chis = BTreeMap::from([(Color::Red, chi_red)]);
    let buckets = bucket_good_pairs(coloring, t, &chis);
    let Some(((xs, zs, _, c), y_set)) = best_bucket(&buckets) else {
        return not_found();
    };
    match ramsey_in(coloring, y_set, t, n) {
        Some((Color::Blue, verts)) => found(Certificate::MonoClique {
            color: Color::Blue,
            vertices: verts,
            via: None,
        }),
        Some((Color::Red, clique)) => {
            let mut data = clique;
            data.extend(xs);
            data.extend(zs);
            data.push(*c);
            Err(ParadoxError::new(
                "red t-clique in a good-pair Y-set extends a red path power past its chi value",
                data,
            ))
        }
        None => not_found(),
    }
}

/// Monochromatic P_n^t in either color. Both window DPs first; the frame
/// fallback recurses with the clique-versus-path-power pipeline inside the
/// majority-color Y-set.
pub fn extract_diagonal_pathpower(coloring: &TwoColoring, t: u32, n: u32) -> ExtractResult {
    assert!(t >= 1 && n >= t, "need n >= t >= 1");
    let chi_red = WindowChi::build(coloring, t, Color::Red);
    let chi_blue = WindowChi::build(coloring, t, Color::Blue);
    for (color, chi) in [(Color::Red, &chi_red), (Color::Blue, &chi_blue)] {
        if let Some(w) = first_window_reaching(chi, n) {
            return found(Certificate::MonoPathPower {
                color,
                t,
                vertices: trace_truncated(chi, &w, n),
                via: None,
            });
        }
    }
    if t == 1 {
        // a pair sharing both chi values is impossible, so N <= (n-1)^2
        // whenever the DPs fall short; nothing more to extract
        return not_found();
    }
    let chis = BTreeMap::from([(Color::Red, chi_red), (Color::Blue, chi_blue)]);
    let buckets = bucket_good_pairs(coloring, t, &chis);
    let Some(((xs, zs, majority, c), y_set)) = best_bucket(&buckets) else {
        return not_found();
    };
    // inside Y: a majority-color K_t is impossible; the other color must
    // yield P_n^t. Run the clique-versus-path-power pipeline on the induced
    // coloring, swapped so the impossible clique is red.
    let induced = induced_coloring(coloring, y_set);
    let oriented = match majority {
        Color::Red => induced,
        Color::Blue => induced.complement(),
    };
    match crate::extract::rednet::extract_clique_vs_powerpath(&oriented, t - 1, t, n)? {
        super::Extraction::Found(Certificate::MonoClique { vertices, .. }) => {
            let mut data: Vec<u32> = vertices.iter().map(|&i| y_set[i as usize - 1]).collect();
            data.extend(xs);
            data.extend(zs);
            data.push(*c);
            Err(ParadoxError::new(
                "majority-color t-clique in a good-pair Y-set extends a path power past its chi value",
                data,
            ))
        }
        super::Extraction::Found(Certificate::MonoPathPower { vertices, .. }) => {
            let mapped: Vec<u32> = vertices.iter().map(|&i| y_set[i as usize - 1]).collect();
            found(Certificate::MonoPathPower {
                color: majority.flip(),
                t,
                vertices: mapped,
                via: None,
            })
        }
        super::Extraction::Found(other) => Err(ParadoxError::new(
            format!("unexpected certificate {} from inner pipeline", other.kind_name()),
            vec![],
        )),
        super::Extraction::NotFound => not_found(),
    }
}

/// The coloring induced on a sorted vertex subset, renumbered 1..=len.
pub(crate) fn induced_coloring(coloring: &TwoColoring, verts: &[u32]) -> TwoColoring {
    TwoColoring::from_fn(verts.len() as u32, |i, j| {
        coloring.color(verts[i as usize - 1], verts[j as usize - 1])
    })
    .expect("induced coloring is well-formed")
}

// ---------------------------------------------------------------------------
// blowup extractor
// ---------------------------------------------------------------------------

fn pack_group(g: &[u32]) -> u64 {
    let mut key = 0u64;
    for &v in g {
        key = (key << 16) | v as u64;
    }
    key
}

/// Longest-red-blowup DP over all t-subsets: bw(X) = 1 + max over W with
/// max(W) < min(X) and W x X completely red of bw(W).
struct BlowupDp {
    states: Vec<Vec<u32>>,
    value: HashMap<u64, u32>,
    pred: HashMap<u64, Option<u64>>,
    group_of: HashMap<u64, Vec<u32>>,
}

impl BlowupDp {
    fn build(coloring: &TwoColoring, t: u32) -> BlowupDp {
        let n = coloring.n_vertices();
        let mut states: Vec<Vec<u32>> = Vec::new();
        for last in 1..=n {
            let mut acc: Vec<u32> = Vec::new();
            subsets_ending_at(n, t as usize, last, &mut acc, &mut states);
        }
        // states are grouped by their max element, ascending
        let mut by_max: Vec<Vec<usize>> = vec![Vec::new(); n as usize + 1];
        for (i, s) in states.iter().enumerate() {
            by_max[*s.last().unwrap() as usize].push(i);
        }
        let mut value: HashMap<u64, u32> = HashMap::with_capacity(states.len());
        let mut pred: HashMap<u64, Option<u64>> = HashMap::with_capacity(states.len());
        let mut group_of: HashMap<u64, Vec<u32>> = HashMap::with_capacity(states.len());
        for x in &states {
            let key = pack_group(x);
            let mut common = coloring.adj(x[0], Color::Red).clone();
            for &v in &x[1..] {
                common.and_assign(coloring.adj(v, Color::Red));
            }
            let mut best = 1u32;
            let mut best_pred: Option<u64> = None;
            for m in 1..x[0] {
                for &wi in &by_max[m as usize] {
                    let w = &states[wi];
                    if w.iter().all(|&u| common.contains(u as usize - 1)) {
                        let wkey = pack_group(w);
                        let val = value[&wkey] + 1;
                        if val > best {
                            best = val;
                            best_pred = Some(wkey);
                        }
                    }
                }
            }
            value.insert(key, best);
            pred.insert(key, best_pred);
            group_of.insert(key, x.clone());
        }
        BlowupDp {
            states,
            value,
            pred,
            group_of,
        }
    }

    fn get(&self, group: &[u32]) -> Option<u32> {
        self.value.get(&pack_group(group)).copied()
    }

    fn trace(&self, group: &[u32]) -> Vec<Vec<u32>> {
        let mut rev = Vec::new();
        let mut cur = pack_group(group);
        loop {
            rev.push(self.group_of[&cur].clone());
            match self.pred[&cur] {
                Some(p) => cur = p,
                None => break,
            }
        }
        rev.reverse();
        rev
    }
}

fn subsets_ending_at(n: u32, t: usize, last: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if acc.len() == t - 1 {
        let mut s = acc.clone();
        s.push(last);
        out.push(s);
        return;
    }
    let start = acc.last().map_or(1, |&l| l + 1);
    for v in start..last {
        if (last - v) as usize + acc.len() < t - 1 {
            break;
        }
        acc.push(v);
        subsets_ending_at(n, t, last, acc, out);
        acc.pop();
    }
}

/// Does the t-set satisfy the semi-red condition: all edges from the first
/// vertex and all edges to the last vertex are red?
fn is_semi_red(coloring: &TwoColoring, verts: &[u32]) -> bool {
    let first = verts[0];
    let last = *verts.last().unwrap();
    verts[1..]
        .iter()
        .all(|&v| coloring.is(first, v, Color::Red))
        && verts[..verts.len() - 1]
            .iter()
            .all(|&v| v == first || coloring.is(v, last, Color::Red))
}

/// Finds a semi-red k-clique inside the sorted candidate set by the
/// forward-red-degree argument: anchor the first and last vertices, then
/// take any k-2 common red middles.
fn find_semi_red_clique(coloring: &TwoColoring, cands: &[u32], k: usize) -> Option<Vec<u32>> {
    if k == 1 {
        return cands.first().map(|&v| vec![v]);
    }
    for (ai, &a) in cands.iter().enumerate() {
        for &b in &cands[ai + 1..] {
            if !coloring.is(a, b, Color::Red) {
                continue;
            }
            let mids: Vec<u32> = cands[ai + 1..]
                .iter()
                .copied()
                .filter(|&m| {
                    m > a && m < b && coloring.is(a, m, Color::Red) && coloring.is(m, b, Color::Red)
                })
                .take(k - 2)
                .collect();
            if mids.len() == k - 2 {
                let mut out = vec![a];
                out.extend(mids);
                out.push(b);
                return Some(out);
            }
        }
    }
    None
}

/// Red blowup P_n[t] versus blue clique K_n, mirroring the semi-red
/// machinery: blowup DP trace first, then the frame machinery over
/// semi-red windows; a semi-red (t+2)-clique inside the best Y-set would
/// extend a red blowup past its recorded value.
pub fn extract_blowup_vs_clique(coloring: &TwoColoring, t: u32, n: u32) -> ExtractResult {
    assert!(t >= 1 && n >= 2, "need t >= 1 and n >= 2");
    if t == 1 {
        let chi_red = WindowChi::build(coloring, 1, Color::Red);
        if let Some(w) = first_window_reaching(&chi_red, n) {
            return found(Certificate::MonoBlowup {
                color: Color::Red,
                t: 1,
                vertices: trace_truncated(&chi_red, &w, n),
            });
        }
        if let Some(verts) = class_clique(&chi_red, coloring.n_vertices(), n) {
            return found(Certificate::MonoClique {
                color: Color::Blue,
                vertices: verts,
                via: None,
            });
        }
        return not_found();
    }
    let dp = BlowupDp::build(coloring, t);
    for x in &dp.states {
        if dp.get(x).unwrap_or(0) >= n {
            let mut groups = dp.trace(x);
            groups.truncate(n as usize);
            let vertices: Vec<u32> = groups.into_iter().flatten().collect();
            return found(Certificate::MonoBlowup {
                color: Color::Red,
                t,
                vertices,
            });
        }
    }
    // bucket semi-red good pairs by frame and chi value
    let mut buckets: BTreeMap<(Vec<u32>, Vec<u32>, u32), Vec<u32>> = BTreeMap::new();
    for x in &dp.states {
        if !is_semi_red(coloring, x) {
            continue;
        }
        let y = *x.last().unwrap();
        let cx = dp.get(x).unwrap();
        // partners starting at y: semi-red sets (y, z_1..z_{t-1})
        let mut acc = vec![y];
        let mut partners = Vec::new();
        semi_red_starting_at(coloring, t as usize, &mut acc, &mut partners);
        for z in partners {
            let cz = dp.get(&z).unwrap();
            if cx >= cz {
                buckets
                    .entry((x[..x.len() - 1].to_vec(), z[1..].to_vec(), cx))
                    .or_default()
                    .push(y);
            }
        }
    }
    let mut best: Option<(&(Vec<u32>, Vec<u32>, u32), &Vec<u32>)> = None;
    for (k, v) in &buckets {
        if best.map_or(true, |(_, bv)| v.len() > bv.len()) {
            best = Some((k, v));
        }
    }
    let Some(((xs, zs, c), y_raw)) = best else {
        return not_found();
    };
    let mut y_set = y_raw.clone();
    y_set.sort_unstable();
    y_set.dedup();
    if let Some(clique) = find_semi_red_clique(coloring, &y_set, t as usize + 2) {
        let mut data = clique;
        data.extend(xs);
        data.extend(zs);
        data.push(*c);
        return Err(ParadoxError::new(
            "semi-red (t+2)-clique in a good-pair Y-set extends a red blowup past its chi value",
            data,
        ));
    }
    match ramsey_in(coloring, &y_set, t + 2, n) {
        Some((Color::Blue, verts)) => found(Certificate::MonoClique {
            color: Color::Blue,
            vertices: verts,
            via: None,
        }),
        Some((Color::Red, clique)) => Err(ParadoxError::new(
            "red (t+2)-clique is semi-red, contradicting the Y-set bound",
            clique,
        )),
        None => not_found(),
    }
}

fn semi_red_starting_at(
    coloring: &TwoColoring,
    t: usize,
    acc: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if acc.len() == t {
        if is_semi_red(coloring, acc) {
            out.push(acc.clone());
        }
        return;
    }
    let first = acc[0];
    let start = *acc.last().unwrap() + 1;
    for v in start..=coloring.n_vertices() {
        // every vertex must be red-adjacent to the first
        if coloring.is(first, v, Color::Red) {
            acc.push(v);
            semi_red_starting_at(coloring, t, acc, out);
            acc.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{random_two_coloring, Prob};
    use crate::model::Instance;
    use crate::verify::{verify_certificate, Verdict};

    fn assert_accepts(c: &TwoColoring, r: ExtractResult) -> Certificate {
        let cert = r.unwrap().found().expect("witness expected");
        assert!(
            matches!(verify_certificate(&Instance::Pairs(c.clone()), &cert), Verdict::Accept),
            "cert {cert:?} must verify"
        );
        cert
    }

    #[test]
    fn good_pairs_t1_all_red() {
        let c = TwoColoring::from_fn(5, |_, _| Color::Red).unwrap();
        let pairs = enumerate_good_pairs(&c, 1, GoodPairVariant::Mono);
        let red: Vec<_> = pairs.iter().filter(|p| p.color == Color::Red).collect();
        let blue: Vec<_> = pairs.iter().filter(|p| p.color == Color::Blue).collect();
        assert!(red.is_empty(), "red chi strictly increases in an all-red coloring");
        assert_eq!(blue.len(), 10, "blue chi is constant, every pair qualifies");
    }

    #[test]
    fn good_pairs_cherry_example() {
        // edges (1,2) red, (2,3) red, (1,3) blue; t = 2
        let c = TwoColoring::build(3, &[(1, 3)]).unwrap();
        let pairs = enumerate_good_pairs(&c, 2, GoodPairVariant::RedOnly);
        assert_eq!(
            pairs,
            vec![GoodPair {
                first: vec![1, 2],
                second: vec![2, 3],
                color: Color::Red
            }]
        );
    }

    #[test]
    fn good_pairs_match_definition_filter() {
        for seed in 0..20u64 {
            let c = random_two_coloring(12, Prob::HALF, seed);
            let got = enumerate_good_pairs(&c, 2, GoodPairVariant::Mono);
            // definition-checked filter over all windows sharing an endpoint
            let mut expect = Vec::new();
            for color in [Color::Red, Color::Blue] {
                let chi = WindowChi::build(&c, 2, color);
                for y in 1..=12u32 {
                    for x in enumerate_windows_ending_at(&c, 2, color, y) {
                        for z in windows_starting_at(&c, 2, color, y) {
                            if chi.get(&x).unwrap() >= chi.get(&z).unwrap() {
                                expect.push(GoodPair {
                                    first: x.clone(),
                                    second: z,
                                    color,
                                });
                            }
                        }
                    }
                }
            }
            assert_eq!(got, expect, "seed {seed}");
        }
    }

    #[test]
    fn thm12_trivial_colorings() {
        let red = TwoColoring::from_fn(4, |_, _| Color::Red).unwrap();
        let cert = assert_accepts(&red, extract_pathpower_vs_clique(&red, 2, 4));
        assert!(matches!(cert, Certificate::MonoPathPower { color: Color::Red, .. }));

        let blue = TwoColoring::from_fn(4, |_, _| Color::Blue).unwrap();
        let cert = assert_accepts(&blue, extract_pathpower_vs_clique(&blue, 2, 4));
        assert!(matches!(cert, Certificate::MonoClique { color: Color::Blue, .. }));
    }

    #[test]
    fn thm12_random_instances_sound() {
        for seed in 0..200u64 {
            let c = random_two_coloring(24, Prob::HALF, seed);
            match extract_pathpower_vs_clique(&c, 2, 4).unwrap() {
                crate::extract::Extraction::Found(cert) => {
                    assert!(verify_certificate(&Instance::Pairs(c.clone()), &cert).is_accept());
                }
                crate::extract::Extraction::NotFound => {}
            }
        }
    }

    #[test]
    fn thm13_trivial_and_random() {
        let red = TwoColoring::from_fn(5, |_, _| Color::Red).unwrap();
        let cert = assert_accepts(&red, extract_diagonal_pathpower(&red, 2, 5));
        assert!(matches!(cert, Certificate::MonoPathPower { color: Color::Red, .. }));

        for seed in 0..100u64 {
            let c = random_two_coloring(20, Prob::HALF, seed);
            if let crate::extract::Extraction::Found(cert) =
                extract_diagonal_pathpower(&c, 2, 4).unwrap()
            {
                assert!(verify_certificate(&Instance::Pairs(c.clone()), &cert).is_accept());
            }
        }
    }

    #[test]
    fn diagonal_t1_threshold() {
        // witness guaranteed at N = (n-1)^2 + 1
        let n = 4u32;
        for seed in 0..200u64 {
            let c = random_two_coloring((n - 1) * (n - 1) + 1, Prob::HALF, seed);
            let cert = assert_accepts(&c, extract_diagonal_pathpower(&c, 1, n));
            assert!(matches!(cert, Certificate::MonoPathPower { .. }));
        }
    }

    #[test]
    fn blowup_trivial_colorings() {
        let red = TwoColoring::from_fn(6, |_, _| Color::Red).unwrap();
        let cert = assert_accepts(&red, extract_blowup_vs_clique(&red, 2, 3));
        match cert {
            Certificate::MonoBlowup { vertices, .. } => assert_eq!(vertices, vec![1, 2, 3, 4, 5, 6]),
            other => panic!("unexpected {other:?}"),
        }

        let blue = TwoColoring::from_fn(4, |_, _| Color::Blue).unwrap();
        let cert = assert_accepts(&blue, extract_blowup_vs_clique(&blue, 2, 4));
        assert!(matches!(cert, Certificate::MonoClique { color: Color::Blue, .. }));
    }

    #[test]
    fn blowup_dp_agrees_with_brute_force() {
        use crate::oracle::detect::PartialPairs;
        for seed in 0..20u64 {
            let c = random_two_coloring(10, Prob::HALF, seed);
            let dp = BlowupDp::build(&c, 2);
            let g = PartialPairs::from_coloring(&c);
            let best_dp = dp.states.iter().map(|s| dp.get(s).unwrap()).max().unwrap();
            // compare against direct search for each target length
            let mut best_bf = 0u32;
            for n in 1..=5u32 {
                if g.find_blowup(n as usize, 2, Color::Red).is_some() {
                    best_bf = n;
                }
            }
            assert_eq!(best_dp, best_bf, "seed {seed}");
        }
    }

    #[test]
    fn blowup_random_instances_sound() {
        for seed in 0..100u64 {
            let c = random_two_coloring(16, Prob::HALF, seed);
            if let crate::extract::Extraction::Found(cert) =
                extract_blowup_vs_clique(&c, 2, 3).unwrap()
            {
                assert!(verify_certificate(&Instance::Pairs(c.clone()), &cert).is_accept());
            }
        }
    }

    #[test]
    fn semi_red_finder_on_mixed_coloring() {
        // red except one within-middle blue pair: still semi-red
        let c = TwoColoring::build(4, &[(2, 3)]).unwrap();
        assert!(is_semi_red(&c, &[1, 2, 3, 4]));
        assert_eq!(find_semi_red_clique(&c, &[1, 2, 3, 4], 4), Some(vec![1, 2, 3, 4]));
        let all_blue = TwoColoring::from_fn(4, |_, _| Color::Blue).unwrap();
        assert_eq!(find_semi_red_clique(&all_blue, &[1, 2, 3, 4], 3), None);
    }
}
