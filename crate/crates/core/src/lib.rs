//! Ordered Ramsey witness extraction at desk scale.
//!
//! The crate has four layers:
//!
//! - data model and generators for red/blue colorings of ordered graphs and
//!   3-uniform hypergraphs, and for n-valued pair labelings ([`model`],
//!   [`gen`], [`bounds`], [`textfmt`]);
//! - certificates for every witness structure and a single dispatching
//!   verifier that re-checks them from first principles ([`cert`],
//!   [`verify`]);
//! - extractors that mirror the constructive arguments: clique versus
//!   monotone path, monotone-label paths, clique chains, window dynamic
//!   programming over path powers, the labeled-structure recursion, and the
//!   red-net pipeline ([`extract`]);
//! - exact brute-force oracles that compute small ordered Ramsey numbers and
//!   labeling thresholds, used to cross-validate all of the above
//!   ([`oracle`]).
//!
//! Data-parallel inner loops (oracle search, window DP layers, batch
//! extraction) run on rayon by default; build with `--no-default-features`
//! for the sequential fallback.

pub mod bitset;
pub mod bounds;
pub mod cert;
pub mod extract;
pub mod gen;
pub mod model;
pub mod oracle;
pub mod par;
pub mod textfmt;
pub mod verify;
pub mod window;

pub use model::{Color, Instance, PairLabeling, PatternKind, PatternSpec, TripleColoring, TwoColoring};
