//! Deterministic instance generators: seeded random colorings and
//! labelings, the blocked lower-bound construction, and the extremal
//! block coloring for clique-versus-path.

use crate::model::{Color, Instance, ModelError, PairLabeling, TripleColoring, TwoColoring};
use crate::oracle::detect::PartialPairs;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A probability given as an exact rational, so draws are reproducible and
/// platform-independent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Prob {
    num: u64,
    den: u64,
}

impl Prob {
    pub fn new(num: u64, den: u64) -> Result<Self, ModelError> {
        if den == 0 || num > den {
            return Err(ModelError::InvalidParam(format!(
                "probability {num}/{den} is not in [0, 1]"
            )));
        }
        Ok(Prob { num, den })
    }

    pub const ZERO: Prob = Prob { num: 0, den: 1 };
    pub const ONE: Prob = Prob { num: 1, den: 1 };
    pub const HALF: Prob = Prob { num: 1, den: 2 };

    fn draw(&self, rng: &mut impl Rng) -> bool {
        self.num == self.den || (self.num > 0 && rng.random_range(0..self.den) < self.num)
    }
}

/// Parses "1/2", "0.25" or "1" into an exact rational probability.
impl std::str::FromStr for Prob {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, ModelError> {
        let bad = || ModelError::InvalidParam(format!("cannot parse probability {s:?}"));
        if let Some((a, b)) = s.split_once('/') {
            let num: u64 = a.trim().parse().map_err(|_| bad())?;
            let den: u64 = b.trim().parse().map_err(|_| bad())?;
            return Prob::new(num, den);
        }
        if let Some((int, frac)) = s.split_once('.') {
            let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
            if frac.len() > 9 || frac.chars().any(|c| !c.is_ascii_digit()) {
                return Err(bad());
            }
            let den = 10u64.pow(frac.len() as u32);
            let num = int * den + if frac.is_empty() { 0 } else { frac.parse::<u64>().map_err(|_| bad())? };
            return Prob::new(num, den);
        }
        let v: u64 = s.trim().parse().map_err(|_| bad())?;
        Prob::new(v, 1)
    }
}

/// Which instance shape to generate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Pairs,
    Triples,
    Labels,
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Deterministic function of its arguments: pairs (or triples) are drawn
/// independently in increasing storage order from a seeded stream.
pub fn generate_random(
    shape: Shape,
    n: u32,
    n_colors: u32,
    p_blue: Prob,
    seed: u64,
) -> Result<Instance, ModelError> {
    let mut rng = rng_for(seed);
    match shape {
        Shape::Pairs => Ok(Instance::Pairs(TwoColoring::from_fn(n, |_, _| {
            if p_blue.draw(&mut rng) {
                Color::Blue
            } else {
                Color::Red
            }
        })?)),
        Shape::Triples => Ok(Instance::Triples(TripleColoring::from_fn(n, |_, _, _| {
            if p_blue.draw(&mut rng) {
                Color::Blue
            } else {
                Color::Red
            }
        })?)),
        Shape::Labels => Ok(Instance::Labels(PairLabeling::from_fn(n, n_colors, |_, _| {
            rng.random_range(1..=n_colors)
        })?)),
    }
}

pub fn random_two_coloring(n: u32, p_blue: Prob, seed: u64) -> TwoColoring {
    match generate_random(Shape::Pairs, n, 1, p_blue, seed) {
        Ok(Instance::Pairs(c)) => c,
        _ => unreachable!("pairs shape returns a two-coloring"),
    }
}

pub fn random_triple_coloring(n: u32, p_blue: Prob, seed: u64) -> TripleColoring {
    match generate_random(Shape::Triples, n, 1, p_blue, seed) {
        Ok(Instance::Triples(c)) => c,
        _ => unreachable!(),
    }
}

pub fn random_labeling(n: u32, n_colors: u32, seed: u64) -> PairLabeling {
    match generate_random(Shape::Labels, n, n_colors, Prob::HALF, seed) {
        Ok(Instance::Labels(l)) => l,
        _ => unreachable!(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("t = {t} does not divide n - 1 = {nm1}")]
    Divisibility { t: u32, nm1: u32 },
    #[error("inner coloring contains a red clique of size {0}, so it is not certified")]
    InnerHasRedClique(u32),
    #[error("inner coloring contains a blue clique of size {0}, so it is not certified")]
    InnerHasBlueClique(u32),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Blocked lower-bound construction: (n-1)/t intervals, each a copy of
/// `inner`, all cross-interval pairs blue. `inner` must avoid a red
/// K_{s+1} and a blue K_{t+1}; both properties are re-checked here by
/// exhaustive search. The output then contains no red K_{s+1} and no
/// blue P_n^t.
pub fn generate_lower_bound_blocked(
    s: u32,
    t: u32,
    n: u32,
    inner: &TwoColoring,
) -> Result<TwoColoring, GenError> {
    if t == 0 || n < 2 || (n - 1) % t != 0 {
        return Err(GenError::Divisibility { t, nm1: n.saturating_sub(1) });
    }
    let g = PartialPairs::from_coloring(inner);
    if g.find_clique(s as usize + 1, Color::Red, None).is_some() {
        return Err(GenError::InnerHasRedClique(s + 1));
    }
    if g.find_clique(t as usize + 1, Color::Blue, None).is_some() {
        return Err(GenError::InnerHasBlueClique(t + 1));
    }
    let intervals = (n - 1) / t;
    let m = inner.n_vertices();
    let total = intervals * m;
    Ok(TwoColoring::from_fn(total, |i, j| {
        let (bi, bj) = ((i - 1) / m, (j - 1) / m);
        if bi != bj {
            Color::Blue
        } else {
            inner.color((i - 1) % m + 1, (j - 1) % m + 1)
        }
    })?)
}

/// The extremal coloring for clique versus monotone path: s-1 consecutive
/// blocks of n-1 vertices, blue inside each block, red across blocks.
/// It has (s-1)(n-1) vertices, no red K_s and no blue P_n.
pub fn extremal_clique_vs_path(s: u32, n: u32) -> Result<TwoColoring, ModelError> {
    if s < 2 || n < 2 {
        return Err(ModelError::InvalidParam(
            "extremal construction needs s >= 2 and n >= 2".into(),
        ));
    }
    let block = n - 1;
    TwoColoring::from_fn((s - 1) * block, |i, j| {
        if (i - 1) / block == (j - 1) / block {
            Color::Blue
        } else {
            Color::Red
        }
    })
}
