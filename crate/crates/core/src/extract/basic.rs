//! The four foundational extractors: clique versus monotone path, the
//! greedy off-diagonal clique extractor, monotone-label paths, and
//! clique chains.

use super::{found, not_found, Extraction, ExtractResult, ParadoxError};
use crate::bounds::binomial;
use crate::cert::{Certificate, LabelDirection};
use crate::model::{pair_index, Color, PairLabeling, TwoColoring};
use crate::window::{enumerate_windows_ending_at, WindowChi};
use num_bigint::BigUint;
use std::collections::BTreeMap;

/// Longest-blue-path dynamic programming: emits a blue monotone path with
/// n vertices when one exists, and otherwise pigeonholes the path-length
/// classes into a red s-clique. Guaranteed to succeed when
/// N >= (s-1)(n-1)+1; below that threshold it runs best-effort.
pub fn extract_clique_vs_monopath(coloring: &TwoColoring, s: u32, n: u32) -> ExtractResult {
    assert!(s >= 2 && n >= 2, "need s, n >= 2");
    let chi = WindowChi::build(coloring, 1, Color::Blue);
    for w in chi.windows() {
        if chi.get(w).unwrap_or(0) >= n {
            let mut path = chi.trace(w).expect("window is in the table");
            path.truncate(n as usize);
            return found(Certificate::MonoPathPower {
                color: Color::Blue,
                t: 1,
                vertices: path,
                via: None,
            });
        }
    }
    // all lambda values lie in 1..n-1; vertices sharing a value span red pairs
    let mut classes: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for v in 1..=coloring.n_vertices() {
        classes.entry(chi.get(&[v]).unwrap()).or_default().push(v);
    }
    for class in classes.values() {
        if class.len() >= s as usize {
            let verts: Vec<u32> = class[..s as usize].to_vec();
            debug_assert!(coloring.is_clique(&verts, Color::Red));
            return found(Certificate::MonoClique {
                color: Color::Red,
                vertices: verts,
                via: None,
            });
        }
    }
    not_found()
}

fn meets(len: usize, s: u32, n: u32) -> bool {
    if s == 0 || n == 0 {
        return true;
    }
    BigUint::from(len) >= binomial((s + n - 2) as u64, (s - 1) as u64)
}

/// Greedy pivot recursion: take the least remaining vertex and recurse in
/// its red neighborhood with target (s-1, n) or its blue neighborhood with
/// (s, n-1), preferring a branch whose size meets its recursive threshold.
/// Success is guaranteed when N >= C(s+n-2, s-1).
pub fn ramsey_extract(coloring: &TwoColoring, s: u32, n: u32) -> ExtractResult {
    assert!(s >= 1 && n >= 1, "need s, n >= 1");
    let cands: Vec<u32> = (1..=coloring.n_vertices()).collect();
    match ramsey_in(coloring, &cands, s, n) {
        Some((color, verts)) => found(Certificate::MonoClique {
            color,
            vertices: verts,
            via: None,
        }),
        None => not_found(),
    }
}

/// The same recursion restricted to a sorted candidate list. Returns the
/// clique color and vertices.
pub(crate) fn ramsey_in(
    coloring: &TwoColoring,
    cands: &[u32],
    s: u32,
    n: u32,
) -> Option<(Color, Vec<u32>)> {
    if s == 1 {
        return cands.first().map(|&v| (Color::Red, vec![v]));
    }
    if n == 1 {
        return cands.first().map(|&v| (Color::Blue, vec![v]));
    }
    let (&pivot, rest) = cands.split_first()?;
    let red_nb: Vec<u32> = rest
        .iter()
        .copied()
        .filter(|&u| coloring.is(pivot, u, Color::Red))
        .collect();
    let blue_nb: Vec<u32> = rest
        .iter()
        .copied()
        .filter(|&u| coloring.is(pivot, u, Color::Blue))
        .collect();
    let red_first = meets(red_nb.len(), s - 1, n) || !meets(blue_nb.len(), s, n - 1);
    let order: [(Color, &[u32], u32, u32); 2] = if red_first {
        [(Color::Red, &red_nb, s - 1, n), (Color::Blue, &blue_nb, s, n - 1)]
    } else {
        [(Color::Blue, &blue_nb, s, n - 1), (Color::Red, &red_nb, s - 1, n)]
    };
    for (branch, nb, s2, n2) in order {
        if let Some((color, mut verts)) = ramsey_in(coloring, nb, s2, n2) {
            if color == branch {
                verts.insert(0, pivot);
            }
            return Some((color, verts));
        }
    }
    None
}

/// Edge dynamic programming for monotone-label paths: for every ordered
/// pair, the longest path with non-increasing labels ending there and the
/// longest with strictly increasing labels; traces whichever reaches its
/// target. Guaranteed when N > C(p+q-2, p-1).
pub fn chvatal_komlos_extract(labeling: &PairLabeling, p: u32, q: u32) -> ExtractResult {
    assert!(p >= 1 && q >= 1, "need p, q >= 1");
    let n = labeling.n_vertices() as usize;
    if n < 2 {
        return not_found();
    }
    let npairs = crate::model::n_pairs(n);
    // values are vertex counts; preds are lexicographically least
    let mut ni = vec![2u32; npairs];
    let mut ni_pred: Vec<Option<u32>> = vec![None; npairs];
    let mut si = vec![2u32; npairs];
    let mut si_pred: Vec<Option<u32>> = vec![None; npairs];
    for j in 2..=n {
        for i in 1..j {
            let here = labeling.label(i as u32, j as u32);
            let idx = pair_index(i - 1, j - 1);
            for w in 1..i {
                let widx = pair_index(w - 1, i - 1);
                let before = labeling.label(w as u32, i as u32);
                if before >= here && ni[widx] + 1 > ni[idx] {
                    ni[idx] = ni[widx] + 1;
                    ni_pred[idx] = Some(w as u32);
                }
                if before < here && si[widx] + 1 > si[idx] {
                    si[idx] = si[widx] + 1;
                    si_pred[idx] = Some(w as u32);
                }
            }
        }
    }
    let trace = |values: &[u32], preds: &[Option<u32>], i: u32, j: u32, len: usize| -> Vec<u32> {
        let _ = values;
        let mut rev = vec![j, i];
        let (mut a, mut b) = (i, j);
        while let Some(w) = preds[pair_index(a as usize - 1, b as usize - 1)] {
            rev.push(w);
            b = a;
            a = w;
        }
        rev.reverse();
        rev.truncate(len);
        rev
    };
    for j in 2..=n {
        for i in 1..j {
            let idx = pair_index(i - 1, j - 1);
            if ni[idx] >= p + 1 {
                let verts = trace(&ni, &ni_pred, i as u32, j as u32, p as usize + 1);
                return found(Certificate::LabelMonotonePath {
                    direction: LabelDirection::NonIncreasing,
                    vertices: verts,
                });
            }
        }
    }
    for j in 2..=n {
        for i in 1..j {
            let idx = pair_index(i - 1, j - 1);
            if si[idx] >= q + 1 {
                let verts = trace(&si, &si_pred, i as u32, j as u32, q as usize + 1);
                return found(Certificate::LabelMonotonePath {
                    direction: LabelDirection::StrictlyIncreasing,
                    vertices: verts,
                });
            }
        }
    }
    not_found()
}

/// Chain search mode: a monochromatic chain in either color, or the
/// red-chain-versus-blue-clique split.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainMode {
    Mono,
    RedOrBlueClique { n: u32 },
}

/// Per-vertex chain DP: chi(v) = max cliques in a monochromatic t-clique
/// chain ending at v, via chi(v) = max over cliques X with last element v
/// of chi(first(X)) + 1.
pub(crate) struct ChainChi {
    pub chi: Vec<u32>,
    /// best clique ending at v (lexicographically least among maximal)
    pred: Vec<Option<Vec<u32>>>,
}

pub(crate) fn chain_chi(coloring: &TwoColoring, t: u32, color: Color) -> ChainChi {
    // singleton cliques make the chain definition self-referential; callers
    // special-case t = 1
    assert!(t >= 2, "chain DP needs t >= 2");
    let n = coloring.n_vertices();
    let mut chi = vec![0u32; n as usize + 1];
    let mut pred: Vec<Option<Vec<u32>>> = vec![None; n as usize + 1];
    for v in 1..=n {
        for clique in enumerate_windows_ending_at(coloring, t, color, v) {
            let first = clique[0];
            let value = chi[first as usize] + 1;
            let better = value > chi[v as usize]
                || (value == chi[v as usize]
                    && pred[v as usize].as_ref().is_some_and(|p| clique < *p));
            if better {
                chi[v as usize] = value;
                pred[v as usize] = Some(clique);
            }
        }
    }
    ChainChi { chi, pred }
}

impl ChainChi {
    /// The chain realizing chi(v), earliest clique first.
    pub fn trace(&self, v: u32) -> Vec<Vec<u32>> {
        let mut rev: Vec<Vec<u32>> = Vec::new();
        let mut cur = v;
        while let Some(clique) = &self.pred[cur as usize] {
            rev.push(clique.clone());
            cur = clique[0];
        }
        rev.reverse();
        rev
    }
}

fn chain_of_length(coloring: &TwoColoring, t: u32, m: u32, color: Color) -> Option<Vec<Vec<u32>>> {
    let dp = chain_chi(coloring, t, color);
    for v in 1..=coloring.n_vertices() {
        if dp.chi[v as usize] >= m {
            let mut chain = dp.trace(v);
            chain.truncate(m as usize);
            return Some(chain);
        }
    }
    None
}

/// Finds a monochromatic t-clique chain with m cliques (Mono mode), or a
/// red chain / blue K_n (RedOrBlueClique mode). In the split mode, a red
/// t-clique inside an equal-chi class is impossible — it would extend the
/// chain — so finding one is a ParadoxError.
pub fn clique_chain_extract(
    coloring: &TwoColoring,
    t: u32,
    m: u32,
    mode: ChainMode,
) -> ExtractResult {
    assert!(t >= 1 && m >= 1, "need t, m >= 1");
    if t == 1 {
        // singleton cliques must share their only element, so a chain is
        // one vertex repeated m times
        return found(Certificate::CliqueChain {
            color: Color::Red,
            cliques: vec![vec![1]; m as usize],
        });
    }
    match mode {
        ChainMode::Mono => {
            for color in [Color::Red, Color::Blue] {
                if let Some(chain) = chain_of_length(coloring, t, m, color) {
                    return found(Certificate::CliqueChain { color, cliques: chain });
                }
            }
            not_found()
        }
        ChainMode::RedOrBlueClique { n } => {
            if let Some(chain) = chain_of_length(coloring, t, m, Color::Red) {
                return found(Certificate::CliqueChain {
                    color: Color::Red,
                    cliques: chain,
                });
            }
            let dp = chain_chi(coloring, t, Color::Red);
            let mut classes: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
            for v in 1..=coloring.n_vertices() {
                classes.entry(dp.chi[v as usize]).or_default().push(v);
            }
            let class = classes
                .values()
                .max_by_key(|c| c.len())
                .cloned()
                .unwrap_or_default();
            match ramsey_in(coloring, &class, t, n) {
                Some((Color::Blue, verts)) => found(Certificate::MonoClique {
                    color: Color::Blue,
                    vertices: verts,
                    via: None,
                }),
                Some((Color::Red, verts)) => Err(ParadoxError::new(
                    "red clique inside an equal-chain-value class would extend the chain",
                    verts,
                )),
                None => not_found(),
            }
        }
    }
}

/// Convenience wrapper used by tests: the whole outcome as a certificate
/// or None.
pub fn extraction_certificate(r: ExtractResult) -> Option<Certificate> {
    r.ok().and_then(Extraction::found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{random_labeling, random_two_coloring, Prob};
    use crate::model::Instance;
    use crate::verify::{verify_certificate, Verdict};

    fn assert_accepts(c: &TwoColoring, r: ExtractResult) -> Certificate {
        let cert = r.unwrap().found().expect("witness expected");
        assert!(matches!(
            verify_certificate(&Instance::Pairs(c.clone()), &cert),
            Verdict::Accept
        ));
        cert
    }

    #[test]
    fn es_on_all_blue_and_all_red() {
        let blue = TwoColoring::from_fn(5, |_, _| Color::Blue).unwrap();
        let cert = assert_accepts(&blue, extract_clique_vs_monopath(&blue, 3, 5));
        assert!(matches!(cert, Certificate::MonoPathPower { color: Color::Blue, .. }));

        let red = TwoColoring::from_fn(4, |_, _| Color::Red).unwrap();
        let cert = assert_accepts(&red, extract_clique_vs_monopath(&red, 4, 9));
        assert!(matches!(cert, Certificate::MonoClique { color: Color::Red, .. }));
    }

    #[test]
    fn es_extremal_coloring_defeats_extractor_until_one_more_vertex() {
        let (s, n) = (3u32, 4u32);
        let extremal = crate::gen::extremal_clique_vs_path(s, n).unwrap();
        assert_eq!(extremal.n_vertices(), (s - 1) * (n - 1));
        assert_eq!(extract_clique_vs_monopath(&extremal, s, n).unwrap(), Extraction::NotFound);

        // one more vertex forces a witness on every completion; try all-red fill
        let bigger = TwoColoring::from_fn(extremal.n_vertices() + 1, |i, j| {
            if j <= extremal.n_vertices() {
                extremal.color(i, j)
            } else {
                Color::Red
            }
        })
        .unwrap();
        assert_accepts(&bigger, extract_clique_vs_monopath(&bigger, s, n));
    }

    #[test]
    fn ramsey_extract_trivial_cases() {
        let red = TwoColoring::from_fn(4, |_, _| Color::Red).unwrap();
        let cert = assert_accepts(&red, ramsey_extract(&red, 4, 4));
        assert!(matches!(cert, Certificate::MonoClique { color: Color::Red, .. }));

        let blue = TwoColoring::from_fn(4, |_, _| Color::Blue).unwrap();
        let cert = assert_accepts(&blue, ramsey_extract(&blue, 4, 4));
        assert!(matches!(cert, Certificate::MonoClique { color: Color::Blue, .. }));
    }

    #[test]
    fn ramsey_extract_never_misses_at_threshold() {
        // (s, n) = (3, 4): threshold C(5, 2) = 10
        for seed in 0..300u64 {
            let c = random_two_coloring(10, Prob::HALF, seed);
            let cert = assert_accepts(&c, ramsey_extract(&c, 3, 4));
            match cert {
                Certificate::MonoClique { color: Color::Red, vertices, .. } => {
                    assert_eq!(vertices.len(), 3)
                }
                Certificate::MonoClique { color: Color::Blue, vertices, .. } => {
                    assert_eq!(vertices.len(), 4)
                }
                other => panic!("unexpected certificate {other:?}"),
            }
        }
    }

    #[test]
    fn ck_constant_and_increasing_labelings() {
        let constant = PairLabeling::from_fn(4, 2, |_, _| 2).unwrap();
        let cert = chvatal_komlos_extract(&constant, 3, 5).unwrap().found().unwrap();
        match &cert {
            Certificate::LabelMonotonePath { direction, vertices } => {
                assert_eq!(*direction, LabelDirection::NonIncreasing);
                assert_eq!(vertices, &vec![1, 2, 3, 4]);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(verify_certificate(&Instance::Labels(constant), &cert).is_accept());

        // chi(i, j) = j is strictly increasing along any monotone path
        let incr = PairLabeling::from_fn(5, 5, |_, j| j).unwrap();
        let cert = chvatal_komlos_extract(&incr, 4, 4).unwrap().found().unwrap();
        match &cert {
            Certificate::LabelMonotonePath { direction, vertices } => {
                assert_eq!(*direction, LabelDirection::StrictlyIncreasing);
                assert_eq!(vertices.len(), 5);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(verify_certificate(&Instance::Labels(incr), &cert).is_accept());
    }

    #[test]
    fn ck_threshold_property() {
        // p = 2, q = 2: N > C(2, 1) = 2, so N = 3 always has one of the two
        for seed in 0..200u64 {
            let l = random_labeling(3, 4, seed);
            assert!(chvatal_komlos_extract(&l, 2, 2).unwrap().is_found(), "seed {seed}");
        }
    }

    #[test]
    fn chain_on_all_red_is_a_monotone_path() {
        let red = TwoColoring::from_fn(5, |_, _| Color::Red).unwrap();
        let cert = assert_accepts(&red, clique_chain_extract(&red, 2, 4, ChainMode::Mono));
        match cert {
            Certificate::CliqueChain { color: Color::Red, cliques } => {
                assert_eq!(cliques, vec![vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5]]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn chain_split_mode_blue_clique() {
        let blue = TwoColoring::from_fn(4, |_, _| Color::Blue).unwrap();
        let cert = assert_accepts(
            &blue,
            clique_chain_extract(&blue, 2, 3, ChainMode::RedOrBlueClique { n: 4 }),
        );
        assert!(matches!(cert, Certificate::MonoClique { color: Color::Blue, .. }));
    }

    #[test]
    fn chain_dp_matches_exhaustive_enumeration() {
        use crate::oracle::detect::PartialPairs;
        for seed in 0..30u64 {
            let c = random_two_coloring(9, Prob::HALF, seed);
            let g = PartialPairs::from_coloring(&c);
            for color in [Color::Red, Color::Blue] {
                for t in 2..=3u32 {
                    let dp = chain_chi(&c, t, color);
                    let brute = g.exhaustive_chain_table(t as usize, color);
                    for v in 1..=9usize {
                        assert_eq!(
                            dp.chi[v] as usize, brute[v - 1],
                            "seed {seed} color {color:?} t {t} v {v}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn chain_chi_strictly_increases_along_cliques() {
        for seed in 0..30u64 {
            let c = random_two_coloring(10, Prob::HALF, seed);
            for color in [Color::Red, Color::Blue] {
                let dp = chain_chi(&c, 2, color);
                for j in 2..=10u32 {
                    for i in 1..j {
                        if c.is(i, j, color) {
                            assert!(dp.chi[j as usize] >= dp.chi[i as usize] + 1);
                        }
                    }
                }
            }
        }
    }
}
