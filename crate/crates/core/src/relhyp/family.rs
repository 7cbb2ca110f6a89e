use super::Analyzer;
use crate::classify::SubsetAtlas;
use crate::diagram::GenSet;
use crate::error::{Error, Result};

use super::cores::Core;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreCoverage {
    pub core: Core,
    /// First class (in canonical order) containing the core.
    pub witness: Option<GenSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionCheck {
    pub left: GenSet,
    pub right: GenSet,
    pub intersection: GenSet,
    pub spherical: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub rh1: bool,
    pub rh2: bool,
    pub coverage: Vec<CoreCoverage>,
    pub intersections: Vec<IntersectionCheck>,
}

impl VerificationReport {
    pub fn passes(&self) -> bool {
        self.rh1 && self.rh2
    }

    pub fn first_uncovered(&self) -> Option<&Core> {
        self.coverage.iter().find(|c| c.witness.is_none()).map(|c| &c.core)
    }

    pub fn first_rh2_violation(&self) -> Option<&IntersectionCheck> {
        self.intersections.iter().find(|c| !c.spherical)
    }
}

/// A collection of parabolic types, canonically ordered and free of duplicates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeripheralFamily {
    pub classes: Vec<GenSet>,
    pub verification: Option<VerificationReport>,
}

impl PeripheralFamily {
    pub fn passes(&self) -> bool {
        self.verification.as_ref().is_some_and(VerificationReport::passes)
    }
}

pub(super) fn canonical(types: &[GenSet]) -> Vec<GenSet> {
    let mut classes = types.to_vec();
    classes.sort();
    classes.dedup();
    classes
}

/// Repeatedly unites two members with non-spherical intersection and drops
/// members contained in others. `pick(k)` chooses which of the `k` candidate
/// pairs is merged next.
pub(super) fn merge_to_fixed_point(
    atlas: &SubsetAtlas<'_>,
    start: Vec<GenSet>,
    pick: &mut dyn FnMut(usize) -> usize,
) -> Vec<GenSet> {
    let mut classes = canonical(&start);
    loop {
        let mut candidates = Vec::new();
        for i in 0..classes.len() {
            for j in i + 1..classes.len() {
                if !atlas.is_spherical(classes[i].intersection(classes[j])) {
                    candidates.push((i, j));
                }
            }
        }
        if candidates.is_empty() {
            break;
        }
        let (i, j) = candidates[pick(candidates.len()) % candidates.len()];
        let merged = classes[i].union(classes[j]);
        classes.retain(|c| !c.is_subset(merged));
        classes.push(merged);
    }
    classes.sort();
    classes
}

impl Analyzer<'_> {
    pub fn verify_family(&self, types: &[GenSet]) -> Result<PeripheralFamily> {
        let n = self.matrix().n();
        for t in types {
            t.check(n)?;
        }
        let classes = canonical(types);
        let verification = self.verify_classes(&classes);
        Ok(PeripheralFamily {
            classes,
            verification: Some(verification),
        })
    }

    pub(super) fn verify_classes(&self, classes: &[GenSet]) -> VerificationReport {
        let coverage: Vec<CoreCoverage> = self
            .cores()
            .iter()
            .map(|&core| CoreCoverage {
                core,
                witness: classes.iter().copied().find(|k| core.members.is_subset(*k)),
            })
            .collect();
        let mut intersections = Vec::new();
        for (i, &left) in classes.iter().enumerate() {
            for &right in &classes[i + 1..] {
                let intersection = left.intersection(right);
                intersections.push(IntersectionCheck {
                    left,
                    right,
                    intersection,
                    spherical: self.atlas().is_spherical(intersection),
                });
            }
        }
        VerificationReport {
            rh1: coverage.iter().all(|c| c.witness.is_some()),
            rh2: intersections.iter().all(|c| c.spherical),
            coverage,
            intersections,
        }
    }

    /// The finest family satisfying RH1 and RH2.
    pub fn minimal_family(&self) -> PeripheralFamily {
        self.minimal_family_with(&mut |_| 0)
    }

    /// Merge fixed point starting from arbitrary sets instead of the maximal cores.
    pub fn merge_from(&self, start: &[GenSet]) -> Vec<GenSet> {
        merge_to_fixed_point(self.atlas(), start.to_vec(), &mut |_| 0)
    }

    /// [`minimal_family`](Self::minimal_family) with a caller-chosen merge order.
    pub fn minimal_family_with(&self, pick: &mut dyn FnMut(usize) -> usize) -> PeripheralFamily {
        let start = self.cores().iter().map(|c| c.members).collect();
        let classes = merge_to_fixed_point(self.atlas(), start, pick);
        let verification = self.verify_classes(&classes);
        PeripheralFamily {
            classes,
            verification: Some(verification),
        }
    }

    /// `{S ∖ {s0}}` together with every affine set containing `s0` whose
    /// components all have rank at least 3. Requires `{s0}^⊥` spherical.
    pub fn maxparab(&self, s0: usize) -> Result<PeripheralFamily> {
        let m = self.matrix();
        let atlas = self.atlas();
        if s0 >= m.n() {
            return Err(Error::IndexOutOfRange { index: s0, n: m.n() });
        }
        let perp = m.perp_of(GenSet::singleton(s0));
        if !atlas.is_spherical(perp) {
            return Err(Error::HypothesisFailed(format!(
                "{{{}}}^⊥ = {} is not spherical",
                m.name(s0),
                m.format_set(perp)
            )));
        }
        let mut classes = vec![m.full().without(s0)];
        for j in atlas.all() {
            if j.contains(s0) && atlas.is_affine(j) && m.components_of(j).iter().all(|c| c.len() >= 3) {
                classes.push(j);
            }
        }
        self.verify_family(&classes)
    }
}
