//! A single dispatching verifier that re-checks every certificate kind
//! against the raw instance, recomputing the definitional predicate from
//! first principles. Rejections carry a clause id and the offending tuple.

use crate::bitset::BitSet;
use crate::cert::{Certificate, ChiForestCert, LabelDirection, LexDirection, RedNetCert};
use crate::model::{Color, Instance, PairLabeling, TripleColoring, TwoColoring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub clause: &'static str,
    pub tuple: Vec<u32>,
}

impl Violation {
    fn new(clause: &'static str, tuple: Vec<u32>) -> Self {
        Violation { clause, tuple }
    }
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} at {:?}", self.clause, self.tuple)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject(Violation),
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept)
    }
}

macro_rules! check {
    ($cond:expr, $clause:expr, $tuple:expr) => {
        if !$cond {
            return Verdict::Reject(Violation::new($clause, $tuple));
        }
    };
}

fn check_vertices(verts: &[u32], n: u32) -> Result<(), Violation> {
    for w in verts.windows(2) {
        if w[0] >= w[1] {
            return Err(Violation::new("vertices_strictly_increasing", w.to_vec()));
        }
    }
    if let Some(&first) = verts.first() {
        if first == 0 {
            return Err(Violation::new("vertex_out_of_range", vec![first]));
        }
    }
    if let Some(&last) = verts.last() {
        if last > n {
            return Err(Violation::new("vertex_out_of_range", vec![last]));
        }
    }
    Ok(())
}

/// Accept iff the certificate's definitional predicate holds on the
/// instance. Pure: the verdict depends only on (instance, cert).
pub fn verify_certificate(instance: &Instance, cert: &Certificate) -> Verdict {
    match (instance, cert) {
        (Instance::Pairs(c), Certificate::MonoClique { color, vertices, .. }) => {
            verify_clique(c, *color, vertices)
        }
        (Instance::Pairs(c), Certificate::MonoPathPower { color, t, vertices, .. }) => {
            verify_path_power(c, *color, *t, vertices)
        }
        (Instance::Pairs(c), Certificate::MonoBlowup { color, t, vertices }) => {
            verify_blowup(c, *color, *t, vertices)
        }
        (Instance::Pairs(c), Certificate::CliqueChain { color, cliques }) => {
            verify_clique_chain(c, *color, cliques)
        }
        (Instance::Pairs(c), Certificate::RedNet(net)) => verify_red_net(c, net),
        (Instance::Triples(c), Certificate::MonoTightPath3 { color, vertices }) => {
            verify_tight_path(c, *color, vertices)
        }
        (Instance::Triples(c), Certificate::MonoClique3 { color, vertices }) => {
            verify_clique3(c, *color, vertices)
        }
        (Instance::Labels(l), Certificate::NonIncreasingSet { vertices }) => {
            verify_non_increasing(l, vertices)
        }
        (
            Instance::Labels(l),
            Certificate::LexicographicSet {
                vertices,
                direction,
                colors,
                nonincreasing_colors,
            },
        ) => verify_lexicographic(l, vertices, *direction, colors, *nonincreasing_colors),
        (Instance::Labels(l), Certificate::HstCopy { s, t, vertices }) => {
            verify_hst(l, *s, *t, vertices)
        }
        (Instance::Labels(l), Certificate::LabelMonotonePath { direction, vertices }) => {
            verify_label_path(l, *direction, vertices)
        }
        // A chi-forest is checked against its own recorded functions; any
        // instance type may carry it.
        (_, Certificate::ChiForest(cf)) => verify_chi_forest(cf),
        _ => Verdict::Reject(Violation::new("instance_kind_mismatch", vec![])),
    }
}

fn verify_clique(c: &TwoColoring, color: Color, verts: &[u32]) -> Verdict {
    if let Err(v) = check_vertices(verts, c.n_vertices()) {
        return Verdict::Reject(v);
    }
    for (k, &j) in verts.iter().enumerate() {
        for &i in &verts[..k] {
            check!(c.is(i, j, color), "edge_color", vec![i, j]);
        }
    }
    Verdict::Accept
}

fn verify_path_power(c: &TwoColoring, color: Color, t: u32, verts: &[u32]) -> Verdict {
    if let Err(v) = check_vertices(verts, c.n_vertices()) {
        return Verdict::Reject(v);
    }
    check!(t >= 1, "path_power_order", vec![t]);
    check!(verts.len() as u32 >= t, "path_shorter_than_power", vec![verts.len() as u32, t]);
    for (k, &j) in verts.iter().enumerate() {
        for di in 1..=(t as usize).min(k) {
            let i = verts[k - di];
            check!(c.is(i, j, color), "edge_color", vec![i, j]);
        }
    }
    Verdict::Accept
}

fn verify_blowup(c: &TwoColoring, color: Color, t: u32, verts: &[u32]) -> Verdict {
    if let Err(v) = check_vertices(verts, c.n_vertices()) {
        return Verdict::Reject(v);
    }
    check!(t >= 1, "blowup_group_size", vec![t]);
    check!(
        !verts.is_empty() && verts.len() % t as usize == 0,
        "blowup_group_count",
        vec![verts.len() as u32, t]
    );
    let groups: Vec<&[u32]> = verts.chunks(t as usize).collect();
    for g in 1..groups.len() {
        for &u in groups[g - 1] {
            for &v in groups[g] {
                check!(c.is(u, v, color), "blowup_bipartite_color", vec![u, v]);
            }
        }
    }
    Verdict::Accept
}

fn verify_clique_chain(c: &TwoColoring, color: Color, cliques: &[Vec<u32>]) -> Verdict {
    check!(!cliques.is_empty(), "chain_empty", vec![]);
    let t = cliques[0].len();
    for q in cliques {
        check!(q.len() == t, "chain_clique_size", q.clone());
        if let Err(v) = check_vertices(q, c.n_vertices()) {
            return Verdict::Reject(v);
        }
        for (k, &j) in q.iter().enumerate() {
            for &i in &q[..k] {
                check!(c.is(i, j, color), "edge_color", vec![i, j]);
            }
        }
    }
    for w in cliques.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        check!(
            a.last() == b.first(),
            "chain_endpoint_shared",
            vec![*a.last().unwrap(), *b.first().unwrap()]
        );
        let common = a.iter().filter(|x| b.contains(x)).count();
        check!(common == 1, "chain_intersection_size", vec![common as u32]);
    }
    Verdict::Accept
}

fn verify_tight_path(c: &TripleColoring, color: Color, verts: &[u32]) -> Verdict {
    if let Err(v) = check_vertices(verts, c.n_vertices()) {
        return Verdict::Reject(v);
    }
    for w in verts.windows(3) {
        check!(c.is(w[0], w[1], w[2], color), "triple_color", w.to_vec());
    }
    Verdict::Accept
}

fn verify_clique3(c: &TripleColoring, color: Color, verts: &[u32]) -> Verdict {
    if let Err(v) = check_vertices(verts, c.n_vertices()) {
        return Verdict::Reject(v);
    }
    for (z, &k) in verts.iter().enumerate() {
        for (y, &j) in verts[..z].iter().enumerate() {
            for &i in &verts[..y] {
                check!(c.is(i, j, k, color), "triple_color", vec![i, j, k]);
            }
        }
    }
    Verdict::Accept
}

/// The non-increasing triple predicate: label(x,y) >= label(y,z), and
/// label(x,z) equals one of them.
fn ni_triple(l: &PairLabeling, x: u32, y: u32, z: u32) -> Result<(), Violation> {
    let (xy, yz, xz) = (l.label(x, y), l.label(y, z), l.label(x, z));
    if xy < yz {
        return Err(Violation::new("ni_first_edge_smaller", vec![x, y, z]));
    }
    if xz != xy && xz != yz {
        return Err(Violation::new("ni_third_edge_mismatch", vec![x, y, z]));
    }
    Ok(())
}

fn verify_non_increasing(l: &PairLabeling, verts: &[u32]) -> Verdict {
    if let Err(v) = check_vertices(verts, l.n_vertices()) {
        return Verdict::Reject(v);
    }
    for (zi, &z) in verts.iter().enumerate() {
        for (yi, &y) in verts[..zi].iter().enumerate() {
            for &x in &verts[..yi] {
                if let Err(v) = ni_triple(l, x, y, z) {
                    return Verdict::Reject(v);
                }
            }
        }
    }
    Verdict::Accept
}

fn verify_lexicographic(
    l: &PairLabeling,
    verts: &[u32],
    direction: LexDirection,
    colors: &[u32],
    nonincreasing_colors: bool,
) -> Verdict {
    if let Err(v) = check_vertices(verts, l.n_vertices()) {
        return Verdict::Reject(v);
    }
    let s = verts.len();
    check!(s >= 2, "lex_set_too_small", vec![s as u32]);
    check!(colors.len() == s - 1, "lex_colors_length", vec![colors.len() as u32]);
    for j in 1..s {
        for i in 0..j {
            let expected = match direction {
                LexDirection::Forward => colors[i],
                LexDirection::Backward => colors[j - 1],
            };
            check!(
                l.label(verts[i], verts[j]) == expected,
                "lex_color_mismatch",
                vec![verts[i], verts[j], expected]
            );
        }
    }
    if nonincreasing_colors {
        for w in colors.windows(2) {
            check!(w[0] >= w[1], "lex_colors_not_nonincreasing", w.to_vec());
        }
    }
    Verdict::Accept
}

fn verify_hst(l: &PairLabeling, s: u32, t: u32, verts: &[u32]) -> Verdict {
    if let Err(v) = check_vertices(verts, l.n_vertices()) {
        return Verdict::Reject(v);
    }
    check!(s >= 2 && t >= 1, "hst_params", vec![s, t]);
    check!(
        verts.len() as u32 == s + t - 1,
        "hst_vertex_count",
        vec![verts.len() as u32, s, t]
    );
    let su = s as usize;
    // the clique part is non-increasing
    for zi in 0..su {
        for yi in 0..zi {
            for xi in 0..yi {
                if let Err(v) = ni_triple(l, verts[xi], verts[yi], verts[zi]) {
                    return Verdict::Reject(v);
                }
            }
        }
    }
    // junction and path labels form one non-increasing chain
    for k in (su - 1)..(verts.len() - 1) {
        let (a, b, c) = (verts[k - 1], verts[k], verts[k + 1]);
        check!(
            l.label(a, b) >= l.label(b, c),
            "hst_chain_not_nonincreasing",
            vec![a, b, c]
        );
    }
    Verdict::Accept
}

fn verify_label_path(l: &PairLabeling, direction: LabelDirection, verts: &[u32]) -> Verdict {
    if let Err(v) = check_vertices(verts, l.n_vertices()) {
        return Verdict::Reject(v);
    }
    check!(verts.len() >= 2, "label_path_too_short", vec![verts.len() as u32]);
    for w in verts.windows(3) {
        let (a, b) = (l.label(w[0], w[1]), l.label(w[1], w[2]));
        let ok = match direction {
            LabelDirection::NonIncreasing => a >= b,
            LabelDirection::StrictlyIncreasing => a < b,
        };
        check!(ok, "label_path_direction", w.to_vec());
    }
    Verdict::Accept
}

fn verify_chi_forest(cf: &ChiForestCert) -> Verdict {
    check!(cf.q >= 1, "chi_forest_q", vec![cf.q]);
    check!(
        cf.functions.len() == cf.q as usize,
        "chi_forest_function_count",
        vec![cf.functions.len() as u32, cf.q]
    );
    for f in &cf.functions {
        check!(
            f.len() == cf.m as usize,
            "chi_forest_function_domain",
            vec![f.len() as u32, cf.m]
        );
    }
    if cf.forest.is_empty() {
        return Verdict::Accept;
    }
    if let Some(&last) = cf.forest.nodes().last() {
        check!(last <= cf.m, "chi_forest_node_range", vec![last, cf.m]);
    }
    check!(
        cf.forest.depth() == cf.q,
        "chi_forest_depth",
        vec![cf.forest.depth(), cf.q]
    );
    for &v in cf.forest.nodes() {
        let d = cf.forest.depth_of(v);
        if d >= cf.q {
            continue; // leaves dominate nothing
        }
        let fv = cf.functions[d as usize][v as usize - 1];
        for &child in cf.forest.children_of(v) {
            let fc = cf.functions[d as usize][child as usize - 1];
            check!(fv >= fc, "chi_forest_dominance", vec![v, child, d]);
        }
    }
    Verdict::Accept
}

fn verify_red_net(c: &TwoColoring, net: &RedNetCert) -> Verdict {
    check!(net.s >= 1, "red_net_s", vec![net.s]);
    check!(net.r >= 1 && net.r % 3 == 0, "red_net_order_divisible_by_3", vec![net.r]);
    check!(!net.forest.is_empty(), "red_net_empty", vec![]);
    check!(
        net.forest.depth() == net.s - 1,
        "red_net_depth",
        vec![net.forest.depth(), net.s]
    );
    let nodes = net.forest.nodes();
    for &v in nodes {
        let Some(set) = net.sets.get(&v) else {
            return Verdict::Reject(Violation::new("red_net_missing_set", vec![v]));
        };
        check!(set.len() as u32 == net.r, "red_net_set_size", vec![v, set.len() as u32]);
        if let Err(viol) = check_vertices(set, c.n_vertices()) {
            return Verdict::Reject(viol);
        }
        if !c.is_clique(set, Color::Blue) {
            return Verdict::Reject(Violation::new("red_net_set_not_blue_clique", vec![v]));
        }
    }
    // item 1: the sets are ordered with the nodes
    for w in nodes.windows(2) {
        let (a, b) = (&net.sets[&w[0]], &net.sets[&w[1]]);
        check!(
            a.last().unwrap() < b.first().unwrap(),
            "red_net_sets_not_ordered",
            vec![w[0], w[1]]
        );
    }
    // item 2: no blue K_{t,t} between an ancestor set and a descendant set
    for &u in nodes {
        for v in net.forest.ancestors(u) {
            match has_blue_ktt(c, &net.sets[&v], &net.sets[&u], net.t) {
                Ok(Some((l, r))) => {
                    let mut tuple = vec![v, u];
                    tuple.extend(&l);
                    tuple.extend(&r);
                    return Verdict::Reject(Violation::new("red_net_blue_ktt", tuple));
                }
                Ok(None) => {}
                Err(_) => return Verdict::Reject(Violation::new("red_net_sets_overlap", vec![v, u])),
            }
        }
    }
    Verdict::Accept
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum KttArgError {
    #[error("vertex sets overlap at {0}")]
    Overlap(u32),
    #[error("t must be at least 1")]
    ZeroT,
    #[error("vertex {0} out of range")]
    OutOfRange(u32),
}

/// Finds the lexicographically first pair (L ⊆ A, R ⊆ B) spanning an
/// all-blue complete bipartite K_{t,t}, or None. A and B must be disjoint.
/// Candidate L-sets are enumerated in lexicographic order with pruning on
/// the common blue neighborhood size.
pub fn has_blue_ktt(
    c: &TwoColoring,
    a: &[u32],
    b: &[u32],
    t: u32,
) -> Result<Option<(Vec<u32>, Vec<u32>)>, KttArgError> {
    if t == 0 {
        return Err(KttArgError::ZeroT);
    }
    let n = c.n_vertices();
    for &v in a.iter().chain(b.iter()) {
        if v == 0 || v > n {
            return Err(KttArgError::OutOfRange(v));
        }
    }
    for &v in a {
        if b.contains(&v) {
            return Err(KttArgError::Overlap(v));
        }
    }
    let t = t as usize;
    if a.len() < t || b.len() < t {
        return Ok(None);
    }
    let mut b_mask = BitSet::new(n as usize);
    for &v in b {
        b_mask.insert(v as usize - 1);
    }
    let mut left: Vec<u32> = Vec::with_capacity(t);
    fn go(
        c: &TwoColoring,
        a: &[u32],
        from: usize,
        t: usize,
        left: &mut Vec<u32>,
        common: &BitSet,
    ) -> Option<(Vec<u32>, Vec<u32>)> {
        if left.len() == t {
            if common.count() >= t {
                let right: Vec<u32> = common.iter().take(t).map(|z| z as u32 + 1).collect();
                return Some((left.clone(), right));
            }
            return None;
        }
        for idx in from..a.len() {
            if a.len() - idx + left.len() < t {
                break;
            }
            let v = a[idx];
            let mut next = common.clone();
            next.and_assign(c.adj(v, Color::Blue));
            if next.count() < t {
                continue;
            }
            left.push(v);
            if let Some(found) = go(c, a, idx + 1, t, left, &next) {
                return Some(found);
            }
            left.pop();
        }
        None
    }
    Ok(go(c, a, 0, t, &mut left, &b_mask))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Color::{Blue, Red};

    fn labels_of(rows: &[(u32, u32, u32)], n: u32, n_colors: u32) -> PairLabeling {
        PairLabeling::from_fn(n, n_colors, |i, j| {
            rows.iter()
                .find(|&&(a, b, _)| a == i && b == j)
                .map(|&(_, _, l)| l)
                .expect("total labeling")
        })
        .unwrap()
    }

    #[test]
    fn path_power_on_all_blue_k4() {
        let c = TwoColoring::from_fn(4, |_, _| Blue).unwrap();
        let cert = Certificate::MonoPathPower {
            color: Blue,
            t: 2,
            vertices: vec![1, 2, 3, 4],
            via: None,
        };
        assert!(verify_certificate(&Instance::Pairs(c), &cert).is_accept());
    }

    #[test]
    fn non_increasing_triple_examples() {
        // chi(1,2)=3, chi(2,3)=2, chi(1,3)=3: Accept
        let l = labels_of(&[(1, 2, 3), (2, 3, 2), (1, 3, 3)], 3, 3);
        let cert = Certificate::NonIncreasingSet { vertices: vec![1, 2, 3] };
        assert!(verify_certificate(&Instance::Labels(l), &cert).is_accept());

        // chi(1,3)=1 equals neither: Reject on the third-edge clause
        let l = labels_of(&[(1, 2, 3), (2, 3, 2), (1, 3, 1)], 3, 3);
        match verify_certificate(&Instance::Labels(l), &cert) {
            Verdict::Reject(v) => assert_eq!(v.clause, "ni_third_edge_mismatch"),
            Verdict::Accept => panic!("must reject"),
        }
    }

    #[test]
    fn chi_forest_figure_component() {
        // nodes 9, 10, 11 carrying (chi0, chi1) = (9,7), (7,6), (10,4); path 9 -> 10 -> 11
        let mut chi0 = vec![1u32; 11];
        let mut chi1 = vec![1u32; 11];
        for (v, c0, c1) in [(9u32, 9u32, 7u32), (10, 7, 6), (11, 10, 4)] {
            chi0[v as usize - 1] = c0;
            chi1[v as usize - 1] = c1;
        }
        let forest = crate::cert::OrderedForest::new(
            vec![9, 10, 11],
            std::collections::BTreeMap::from([(10, 9), (11, 10)]),
        )
        .unwrap();
        let cert = Certificate::ChiForest(ChiForestCert {
            q: 2,
            m: 11,
            forest,
            functions: vec![chi0, chi1],
        });
        let any_instance = Instance::Labels(PairLabeling::from_fn(2, 1, |_, _| 1).unwrap());
        assert!(verify_certificate(&any_instance, &cert).is_accept());
    }

    #[test]
    fn clique_chain_rejects_gap() {
        let c = TwoColoring::from_fn(6, |_, _| Red).unwrap();
        let bad = Certificate::CliqueChain {
            color: Red,
            cliques: vec![vec![1, 2], vec![3, 4]],
        };
        match verify_certificate(&Instance::Pairs(c.clone()), &bad) {
            Verdict::Reject(v) => assert_eq!(v.clause, "chain_endpoint_shared"),
            Verdict::Accept => panic!("must reject"),
        }
        let good = Certificate::CliqueChain {
            color: Red,
            cliques: vec![vec![1, 2], vec![2, 4], vec![4, 6]],
        };
        assert!(verify_certificate(&Instance::Pairs(c), &good).is_accept());
    }

    #[test]
    fn ktt_finds_lexicographically_first() {
        let c = TwoColoring::from_fn(8, |_, _| Blue).unwrap();
        let found = has_blue_ktt(&c, &[1, 2, 3], &[5, 6, 7], 2).unwrap();
        assert_eq!(found, Some((vec![1, 2], vec![5, 6])));

        let all_red = TwoColoring::from_fn(8, |_, _| Red).unwrap();
        assert_eq!(has_blue_ktt(&all_red, &[1, 2, 3], &[5, 6, 7], 2).unwrap(), None);

        assert!(has_blue_ktt(&c, &[1, 2], &[2, 3], 1).is_err());
    }

    #[test]
    fn ktt_agrees_with_exhaustive_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..200 {
            let c = TwoColoring::from_fn(12, |_, _| {
                if rng.random_bool(0.5) {
                    Blue
                } else {
                    Red
                }
            })
            .unwrap();
            let a: Vec<u32> = vec![1, 2, 3, 4, 5];
            let b: Vec<u32> = vec![7, 8, 9, 10, 11, 12];
            let got = has_blue_ktt(&c, &a, &b, 2).unwrap();
            // exhaustive scan over all pairs of 2-subsets in lex order
            let mut expect = None;
            'outer: for i in 0..a.len() {
                for j in (i + 1)..a.len() {
                    for x in 0..b.len() {
                        for y in (x + 1)..b.len() {
                            let (p, q, u, v) = (a[i], a[j], b[x], b[y]);
                            if c.is(p, u, Blue) && c.is(p, v, Blue) && c.is(q, u, Blue) && c.is(q, v, Blue)
                            {
                                expect = Some((vec![p, q], vec![u, v]));
                                break 'outer;
                            }
                        }
                    }
                }
            }
            assert_eq!(got, expect);
        }
    }

    #[test]
    fn hst_verifies_junction_chain() {
        // w = 1,2,3,4 with s=2, t=3: chain label(1,2) >= label(2,3) >= label(3,4)
        let good = labels_of(
            &[(1, 2, 3), (1, 3, 1), (1, 4, 1), (2, 3, 2), (2, 4, 1), (3, 4, 2)],
            4,
            3,
        );
        let cert = Certificate::HstCopy { s: 2, t: 3, vertices: vec![1, 2, 3, 4] };
        assert!(verify_certificate(&Instance::Labels(good), &cert).is_accept());

        let bad = labels_of(
            &[(1, 2, 3), (1, 3, 1), (1, 4, 1), (2, 3, 2), (2, 4, 1), (3, 4, 3)],
            4,
            3,
        );
        match verify_certificate(&Instance::Labels(bad), &cert) {
            Verdict::Reject(v) => assert_eq!(v.clause, "hst_chain_not_nonincreasing"),
            Verdict::Accept => panic!("chain 2 >= 3 must reject"),
        }
    }

    #[test]
    fn lexicographic_direction_and_color_order() {
        // forward: chi(x_i, x_j) = c_i
        let l = labels_of(&[(1, 2, 2), (1, 3, 2), (2, 3, 1)], 3, 2);
        let cert = Certificate::LexicographicSet {
            vertices: vec![1, 2, 3],
            direction: LexDirection::Forward,
            colors: vec![2, 1],
            nonincreasing_colors: true,
        };
        assert!(verify_certificate(&Instance::Labels(l.clone()), &cert).is_accept());
        let bad = Certificate::LexicographicSet {
            vertices: vec![1, 2, 3],
            direction: LexDirection::Forward,
            colors: vec![1, 2],
            nonincreasing_colors: true,
        };
        assert!(!verify_certificate(&Instance::Labels(l), &bad).is_accept());
    }

    #[test]
    fn kind_mismatch_rejected() {
        let c = TwoColoring::from_fn(3, |_, _| Red).unwrap();
        let cert = Certificate::MonoTightPath3 { color: Red, vertices: vec![1, 2, 3] };
        match verify_certificate(&Instance::Pairs(c), &cert) {
            Verdict::Reject(v) => assert_eq!(v.clause, "instance_kind_mismatch"),
            Verdict::Accept => panic!("must reject"),
        }
    }
}
