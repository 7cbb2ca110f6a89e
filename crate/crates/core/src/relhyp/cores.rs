use std::collections::HashMap;

use crate::classify::SubsetAtlas;
use crate::diagram::{CoxeterMatrix, GenSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoreProvenance {
    /// An irreducible affine set of rank at least 3.
    Affine(GenSet),
    /// Two disjoint, commuting, irreducible, non-spherical sets.
    Pair(GenSet, GenSet),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Core {
    pub members: GenSet,
    pub provenance: CoreProvenance,
}

impl Core {
    pub fn describe(&self, m: &CoxeterMatrix) -> String {
        match self.provenance {
            CoreProvenance::Affine(j) => format!("{} (irreducible affine)", m.format_set(j)),
            CoreProvenance::Pair(a, b) => format!(
                "{} (commuting pair {} x {})",
                m.format_set(self.members),
                m.format_set(a),
                m.format_set(b)
            ),
        }
    }
}

fn preferred(a: CoreProvenance, b: CoreProvenance) -> CoreProvenance {
    use CoreProvenance::*;
    match (a, b) {
        (Affine(_), _) => a,
        (_, Affine(_)) => b,
        (Pair(a1, a2), Pair(b1, b2)) => {
            if (a1, a2) <= (b1, b2) {
                a
            } else {
                b
            }
        }
    }
}

/// Every commuting pair `J1, J2` sits inside `J1 ∪ C` where `C` is the
/// component of `J1^⊥` containing `J2`, so pairing each irreducible
/// non-spherical set with the non-spherical components of its perp
/// generates every maximal obligation.
pub(super) fn maximal_cores(atlas: &SubsetAtlas<'_>) -> Vec<Core> {
    let m = atlas.matrix();
    let mut found: HashMap<GenSet, CoreProvenance> = HashMap::new();
    let mut add = |members: GenSet, p: CoreProvenance| {
        found
            .entry(members)
            .and_modify(|cur| *cur = preferred(*cur, p))
            .or_insert(p);
    };
    for j in atlas.all() {
        if !atlas.is_irreducible(j) || atlas.is_spherical(j) {
            continue;
        }
        if atlas.is_irreducible_affine(j) && j.len() >= 3 {
            add(j, CoreProvenance::Affine(j));
        }
        for c in m.components_of(m.perp_of(j)) {
            if !atlas.is_spherical(c) {
                let (a, b) = if j < c { (j, c) } else { (c, j) };
                add(j.union(c), CoreProvenance::Pair(a, b));
            }
        }
    }
    let mut all: Vec<Core> = found
        .into_iter()
        .map(|(members, provenance)| Core { members, provenance })
        .collect();
    all.sort_by(|a, b| b.members.len().cmp(&a.members.len()).then(a.members.cmp(&b.members)));
    let mut kept: Vec<Core> = Vec::new();
    for c in all {
        if !kept.iter().any(|k| c.members.is_subset(k.members)) {
            kept.push(c);
        }
    }
    kept.sort_by_key(|c| c.members);
    kept
}
