//! Seeded instance generators, exhaustive corpora and brute-force oracles.

mod corpus;
mod oracle;

pub use corpus::{corpus_size, exhaustive_corpus, Corpus, CORPUS_LIMIT};
pub use oracle::{brute_force_decide, literal_cores, OracleDecision, PARTITION_LIMIT};

use rand::distributions::WeightedIndex;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::diagram::{CoxeterMatrix, Order, MAX_GENERATORS};
use crate::error::{Error, Result};
use crate::racg::SimpleGraph;

/// The labels `label_weights` refers to, in order.
pub const LABELS: [Order; 6] = [
    Order::Finite(2),
    Order::Finite(3),
    Order::Finite(4),
    Order::Finite(5),
    Order::Finite(6),
    Order::Infinite,
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub n: usize,
    /// Relative weights of the entries of [`LABELS`].
    pub label_weights: [u32; 6],
    pub seed: u64,
}

impl GeneratorConfig {
    pub fn uniform(n: usize, seed: u64) -> Self {
        GeneratorConfig {
            n,
            label_weights: [1; 6],
            seed,
        }
    }
}

/// Deterministic in `cfg`; each unordered pair draws its label independently
/// in row-major order.
pub fn random_matrix(cfg: &GeneratorConfig) -> Result<CoxeterMatrix> {
    if cfg.n > MAX_GENERATORS {
        return Err(Error::TooLarge { n: cfg.n });
    }
    let dist =
        WeightedIndex::new(cfg.label_weights).map_err(|e| Error::InvalidConfig(format!("label weights: {e}")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut pairs = Vec::new();
    for i in 0..cfg.n {
        for j in i + 1..cfg.n {
            pairs.push((i, j, LABELS[dist.sample(&mut rng)]));
        }
    }
    CoxeterMatrix::from_pairs(cfg.n, &pairs)
}

/// Erdős–Rényi graph with edge probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<SimpleGraph> {
    if n > MAX_GENERATORS {
        return Err(Error::TooLarge { n });
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidConfig(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    SimpleGraph::new(n, &edges, None)
}

/// The plain-text input format: `n`, then `i j m` for every pair with
/// `m ≠ 2` (1-based, `0` for infinity).
pub fn to_txt(m: &CoxeterMatrix) -> String {
    let mut out = format!("{}\n", m.n());
    for i in 0..m.n() {
        for j in i + 1..m.n() {
            match m.order(i, j) {
                Order::Finite(2) => {}
                Order::Finite(k) => out.push_str(&format!("{} {} {}\n", i + 1, j + 1, k)),
                Order::Infinite => out.push_str(&format!("{} {} 0\n", i + 1, j + 1)),
            }
        }
    }
    out
}
