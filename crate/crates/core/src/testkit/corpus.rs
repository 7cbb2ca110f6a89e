use crate::diagram::{CoxeterMatrix, Order};
use crate::error::{Error, Result};

pub const CORPUS_LIMIT: u128 = 10_000_000;

/// `|labels|^(n(n-1)/2)`, saturating.
pub fn corpus_size(n: usize, label_count: usize) -> u128 {
    let pairs = (n * n.saturating_sub(1) / 2) as u32;
    (label_count as u128).checked_pow(pairs).unwrap_or(u128::MAX)
}

/// Every matrix on `n` generators with off-diagonal labels from `labels`.
///
/// Pairs are taken in row-major order and the first pair varies slowest, so
/// the sequence is lexicographic in the label positions.
pub fn exhaustive_corpus(n: usize, labels: &[Order]) -> Result<Corpus> {
    if n > crate::diagram::MAX_GENERATORS {
        return Err(Error::TooLarge { n });
    }
    if labels.is_empty() {
        return Err(Error::InvalidConfig("empty label list".into()));
    }
    if labels.iter().any(|l| matches!(l, Order::Finite(k) if *k < 2)) {
        return Err(Error::InvalidConfig("off-diagonal labels must be at least 2".into()));
    }
    let size = corpus_size(n, labels.len());
    if size > CORPUS_LIMIT {
        return Err(Error::CorpusTooLarge {
            size,
            limit: CORPUS_LIMIT,
        });
    }
    let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Ok(Corpus {
        n,
        labels: labels.to_vec(),
        pairs,
        next: 0,
        size: size as u64,
    })
}

#[derive(Clone, Debug)]
pub struct Corpus {
    n: usize,
    labels: Vec<Order>,
    pairs: Vec<(usize, usize)>,
    next: u64,
    size: u64,
}

impl Corpus {
    /// The matrix at position `index` of the sequence.
    pub fn get(&self, index: u64) -> Option<CoxeterMatrix> {
        if index >= self.size {
            return None;
        }
        let base = self.labels.len() as u64;
        let mut rest = index;
        let mut entries = vec![(0, 0, Order::Finite(2)); self.pairs.len()];
        for (slot, &(i, j)) in entries.iter_mut().zip(&self.pairs).rev() {
            *slot = (i, j, self.labels[(rest % base) as usize]);
            rest /= base;
        }
        Some(CoxeterMatrix::from_pairs(self.n, &entries).expect("corpus labels are valid"))
    }

    pub fn len(&self) -> u64 {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }
}

impl Iterator for Corpus {
    type Item = CoxeterMatrix;

    fn next(&mut self) -> Option<CoxeterMatrix> {
        let m = self.get(self.next)?;
        self.next += 1;
        Some(m)
    }

    fn nth(&mut self, k: usize) -> Option<CoxeterMatrix> {
        self.next = self.next.saturating_add(k as u64);
        self.next()
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.size - self.next.min(self.size)) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Corpus {}
