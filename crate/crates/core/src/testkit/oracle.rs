//! Existence of a proper peripheral family by exhaustive search.
//!
//! Given any valid family `T`, replacing each `K ∈ T` by the union of the
//! maximal cores it contains keeps RH1 (every core still has a home) and
//! RH2 (classes only shrink, so intersections only shrink and stay
//! spherical). Classes covering no core can be dropped. Each maximal core
//! then sits in exactly one class: two classes holding the same core would
//! meet in a non-spherical set. So the reduced family is the set of block
//! unions of a partition of the maximal cores, and searching all partitions
//! decides existence. A proper family exists iff some valid partition has no
//! block union equal to `S`.

use crate::classify::{numeric_type, DefiniteKind, DEFAULT_TOLERANCE};
use crate::diagram::{CoxeterMatrix, GenSet};
use crate::error::{Error, Result};

/// Largest number of maximal cores whose partitions are enumerated.
pub const PARTITION_LIMIT: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleDecision {
    pub exists_proper_family: bool,
    /// Block unions of the valid partition with the most blocks, sorted.
    pub finest: Vec<GenSet>,
    /// How many valid partitions reach that block count.
    pub finest_ties: usize,
    pub maximal_cores: Vec<GenSet>,
}

struct Kinds {
    spherical: Vec<bool>,
    affine_irreducible: Vec<bool>,
    connected: Vec<bool>,
}

fn kinds(m: &CoxeterMatrix) -> Result<Kinds> {
    let size = 1usize << m.n();
    let mut spherical = vec![false; size];
    let mut affine_irreducible = vec![false; size];
    let mut connected = vec![false; size];
    spherical[0] = true;
    for bits in 1..size {
        let j = GenSet::from_bits(bits as u32);
        connected[bits] = is_connected(m, j);
        match numeric_type(m, j, DEFAULT_TOLERANCE)?.kind {
            DefiniteKind::PositiveDefinite => spherical[bits] = true,
            DefiniteKind::PositiveSemidefiniteNullity(1) => affine_irreducible[bits] = connected[bits],
            _ => {}
        }
    }
    Ok(Kinds {
        spherical,
        affine_irreducible,
        connected,
    })
}

fn is_connected(m: &CoxeterMatrix, j: GenSet) -> bool {
    let Some(start) = j.first() else {
        return false;
    };
    let mut seen = GenSet::singleton(start);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for w in j.difference(seen) {
            if m.order(v, w).is_edge() {
                seen = seen.with(w);
                stack.push(w);
            }
        }
    }
    seen == j
}

fn commute(m: &CoxeterMatrix, a: GenSet, b: GenSet) -> bool {
    a.iter()
        .all(|x| b.iter().all(|y| m.order(x, y) == crate::diagram::Order::Finite(2)))
}

/// Cores by the literal definition: every irreducible affine set of rank at
/// least 3, and every union of two disjoint commuting irreducible
/// non-spherical sets.
fn all_cores(m: &CoxeterMatrix, k: &Kinds) -> Vec<GenSet> {
    let n = m.n();
    let infinite_irreducible: Vec<GenSet> = (1..1usize << n)
        .filter(|&b| k.connected[b] && !k.spherical[b])
        .map(|b| GenSet::from_bits(b as u32))
        .collect();
    let mut cores: Vec<GenSet> = infinite_irreducible
        .iter()
        .copied()
        .filter(|j| j.len() >= 3 && k.affine_irreducible[j.bits() as usize])
        .collect();
    for (x, &a) in infinite_irreducible.iter().enumerate() {
        for &b in &infinite_irreducible[x + 1..] {
            if a.is_disjoint(b) && commute(m, a, b) {
                cores.push(a.union(b));
            }
        }
    }
    cores
}

/// Every core by the literal definition, before reduction to maximal ones.
pub fn literal_cores(m: &CoxeterMatrix) -> Result<Vec<GenSet>> {
    let mut cores = all_cores(m, &kinds(m)?);
    cores.sort();
    cores.dedup();
    Ok(cores)
}

fn maximal(mut sets: Vec<GenSet>) -> Vec<GenSet> {
    sets.sort();
    sets.dedup();
    let kept: Vec<GenSet> = sets
        .iter()
        .copied()
        .filter(|&s| !sets.iter().any(|&t| t != s && s.is_subset(t)))
        .collect();
    kept
}

/// Calls `visit` with the block label of every element, for every set
/// partition of `len` elements (restricted growth strings).
fn for_each_partition(len: usize, visit: &mut dyn FnMut(&[usize], usize)) {
    fn go(labels: &mut Vec<usize>, len: usize, blocks: usize, visit: &mut dyn FnMut(&[usize], usize)) {
        if labels.len() == len {
            visit(labels, blocks);
            return;
        }
        for b in 0..=blocks {
            labels.push(b);
            go(labels, len, blocks.max(b + 1), visit);
            labels.pop();
        }
    }
    go(&mut Vec::with_capacity(len), len, 0, visit);
}

pub fn brute_force_decide(m: &CoxeterMatrix) -> Result<OracleDecision> {
    let k = kinds(m)?;
    let cores = maximal(all_cores(m, &k));
    if cores.len() > PARTITION_LIMIT {
        return Err(Error::TooManyCores {
            count: cores.len(),
            limit: PARTITION_LIMIT,
        });
    }
    let full = m.full();
    let mut exists_proper = cores.is_empty();
    let mut finest: Option<Vec<GenSet>> = if cores.is_empty() { Some(Vec::new()) } else { None };
    let mut ties = usize::from(cores.is_empty());
    if !cores.is_empty() {
        for_each_partition(cores.len(), &mut |labels, blocks| {
            let mut unions = vec![GenSet::EMPTY; blocks];
            for (c, &b) in cores.iter().zip(labels) {
                unions[b] = unions[b].union(*c);
            }
            let valid = (0..blocks)
                .all(|x| (x + 1..blocks).all(|y| k.spherical[unions[x].intersection(unions[y]).bits() as usize]));
            if !valid {
                return;
            }
            if unions.iter().all(|&u| u != full) {
                exists_proper = true;
            }
            let best = finest.as_ref().map_or(0, Vec::len);
            if blocks > best {
                unions.sort();
                finest = Some(unions);
                ties = 1;
            } else if blocks == best {
                ties += 1;
            }
        });
    }
    Ok(OracleDecision {
        exists_proper_family: exists_proper,
        finest: finest.expect("the one-block partition is always valid"),
        finest_ties: ties,
        maximal_cores: cores,
    })
}
