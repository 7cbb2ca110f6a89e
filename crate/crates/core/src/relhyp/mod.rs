//! Relative hyperbolicity of Coxeter groups with respect to parabolic subgroups.
//!
//! A collection `T` of types (subsets of `S`) is a valid peripheral structure
//! when
//!
//! * **RH1** every irreducible affine subset of rank at least 3 lies in some
//!   `K ∈ T`, and for every pair of commuting, disjoint, irreducible,
//!   non-spherical subsets `J1`, `J2` the union `J1 ∪ J2` lies in some `K ∈ T`;
//! * **RH2** distinct members of `T` meet in a spherical set.
//!
//! The sets that RH1 forces to be covered are called *cores*. Rank 2 affine
//! sets (an `∞`-labelled edge) are not cores on their own; they only
//! contribute through commuting pairs.
//!
//! Any valid family can be shrunk to the unions of the cores each of its
//! members covers, and two cores whose covering classes meet in a non-spherical
//! set must share a class. Merging overlapping cores to a fixed point
//! therefore yields the finest valid family, and `W` is relatively hyperbolic
//! with respect to proper parabolic subgroups iff that family avoids `S`.

mod cores;
mod family;
mod flats;

pub use cores::{Core, CoreProvenance};
pub use family::{CoreCoverage, IntersectionCheck, PeripheralFamily, VerificationReport};
pub use flats::{AffineLemma, FlatsVia, IsolatedFlats, MoussongVerdict};

use std::cell::OnceCell;

use crate::classify::SubsetAtlas;
use crate::diagram::{CoxeterMatrix, GenSet};
use crate::error::Result;

/// Outcome of [`decide`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    /// No cores: `W` is Gromov hyperbolic.
    Hyperbolic,
    /// Relatively hyperbolic with respect to the listed proper parabolic types.
    RelativelyHyperbolicProper(Vec<GenSet>),
    /// Every valid family contains `S` itself.
    NotRelativelyHyperbolic,
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Hyperbolic => "Hyperbolic",
            Status::RelativelyHyperbolicProper(_) => "RelativelyHyperbolicProper",
            Status::NotRelativelyHyperbolic => "NotRelativelyHyperbolic",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub status: Status,
    pub minimal_family: PeripheralFamily,
    pub details: Vec<String>,
}

/// Shared state for the decision procedures on one matrix.
pub struct Analyzer<'a> {
    atlas: SubsetAtlas<'a>,
    cores: OnceCell<Vec<Core>>,
}

impl<'a> Analyzer<'a> {
    pub fn new(matrix: &'a CoxeterMatrix) -> Result<Self> {
        Ok(Analyzer {
            atlas: SubsetAtlas::new(matrix)?,
            cores: OnceCell::new(),
        })
    }

    pub fn atlas(&self) -> &SubsetAtlas<'a> {
        &self.atlas
    }

    pub fn matrix(&self) -> &'a CoxeterMatrix {
        self.atlas.matrix()
    }

    /// Inclusion-maximal cores in canonical order.
    pub fn cores(&self) -> &[Core] {
        self.cores.get_or_init(|| cores::maximal_cores(&self.atlas))
    }

    pub fn decide(&self) -> Decision {
        let m = self.matrix();
        let family = self.minimal_family();
        let full = m.full();
        let mut details = Vec::new();
        let cores = self.cores();
        if cores.is_empty() {
            details.push(
                "no cores: no affine subset of rank >= 3 and no commuting pair of infinite irreducible subsets"
                    .to_string(),
            );
        } else {
            details.push(format!("{} maximal cores", cores.len()));
            for c in cores {
                details.push(format!("core {}", c.describe(m)));
            }
        }
        let status = if family.classes.is_empty() {
            Status::Hyperbolic
        } else if family.classes.contains(&full) {
            details.push(format!("merging forces the class {} = S", m.format_set(full)));
            Status::NotRelativelyHyperbolic
        } else {
            details.push(format!(
                "finest valid family has {} proper classes",
                family.classes.len()
            ));
            Status::RelativelyHyperbolicProper(family.classes.clone())
        };
        Decision {
            status,
            minimal_family: family,
            details,
        }
    }
}

pub fn cores(m: &CoxeterMatrix) -> Result<Vec<Core>> {
    Ok(Analyzer::new(m)?.cores().to_vec())
}

pub fn verify_family(m: &CoxeterMatrix, types: &[GenSet]) -> Result<PeripheralFamily> {
    Analyzer::new(m)?.verify_family(types)
}

pub fn minimal_family(m: &CoxeterMatrix) -> Result<PeripheralFamily> {
    Ok(Analyzer::new(m)?.minimal_family())
}

pub fn decide(m: &CoxeterMatrix) -> Result<Decision> {
    Ok(Analyzer::new(m)?.decide())
}

pub fn moussong_hyperbolic(m: &CoxeterMatrix) -> Result<bool> {
    Ok(Analyzer::new(m)?.moussong().hyperbolic)
}

pub fn maxparab(m: &CoxeterMatrix, s0: usize) -> Result<PeripheralFamily> {
    Analyzer::new(m)?.maxparab(s0)
}

pub fn isolated_flats(m: &CoxeterMatrix) -> Result<IsolatedFlats> {
    Analyzer::new(m)?.isolated_flats()
}

pub fn lemma_aff_equivalence(m: &CoxeterMatrix) -> Result<AffineLemma> {
    Analyzer::new(m)?.affine_lemma()
}

#[cfg(test)]
mod tests;
