//! Finite, affine and Euclidean recognition of subsets of `S`.
//!
//! [`classify_subset`] works component by component through the exact
//! diagram catalog. [`SubsetAtlas`] tabulates the same predicates for every
//! subset at once and backs the enumerations and the decision procedures.
//! [`numeric_type`] is an independent floating point check on the cosine
//! matrix.

mod atlas;
pub mod catalog;
mod numeric;

pub use atlas::SubsetAtlas;
pub use catalog::DiagramType;
pub use numeric::{cosine_matrix, numeric_type, DefiniteKind, NumericVerdict, DEFAULT_TOLERANCE};

use crate::diagram::{CoxeterMatrix, GenSet};
use crate::error::Result;

/// Classification of a subset `J ⊆ S`.
///
/// `affine` means a nonempty product of irreducible affine components;
/// the empty set is spherical but not affine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetClass {
    pub spherical: bool,
    pub irreducible: bool,
    pub irreducible_affine: bool,
    pub affine: bool,
    pub euclidean: bool,
    pub minimal_hyperbolic: bool,
    pub matched_components: Vec<(GenSet, DiagramType)>,
}

fn class_of_components(m: &CoxeterMatrix, j: GenSet) -> (Vec<(GenSet, DiagramType)>, bool, bool, bool) {
    let matched: Vec<_> = m
        .components_of(j)
        .into_iter()
        .map(|c| (c, catalog::identify(m, c)))
        .collect();
    let spherical = matched.iter().all(|(_, t)| t.is_spherical());
    let affine = !matched.is_empty() && matched.iter().all(|(_, t)| t.is_affine());
    let euclidean = matched.iter().all(|(_, t)| t.is_spherical() || t.is_affine());
    (matched, spherical, affine, euclidean)
}

/// Classifies `j` directly from the catalog, without tabulating other subsets.
///
/// A set is minimal hyperbolic when it is connected, neither spherical nor
/// affine, and each of its maximal proper subsets is spherical or irreducible
/// affine. Disconnected sets never qualify: every proper subset of them being
/// spherical or irreducible affine forces them to be Euclidean.
pub fn classify_subset(m: &CoxeterMatrix, j: GenSet) -> Result<SubsetClass> {
    j.check(m.n())?;
    let (matched, spherical, affine, euclidean) = class_of_components(m, j);
    let irreducible = matched.len() == 1;
    let irreducible_affine = irreducible && affine;
    let minimal_hyperbolic = irreducible
        && !euclidean
        && j.iter().all(|x| {
            let (parts, sph, _, _) = class_of_components(m, j.without(x));
            sph || (parts.len() == 1 && parts[0].1.is_affine())
        });
    Ok(SubsetClass {
        spherical,
        irreducible,
        irreducible_affine,
        affine,
        euclidean,
        minimal_hyperbolic,
        matched_components: matched,
    })
}

pub fn spherical_subsets(m: &CoxeterMatrix) -> Result<Vec<GenSet>> {
    Ok(SubsetAtlas::new(m)?.spherical_subsets())
}

pub fn irreducible_affine_subsets(m: &CoxeterMatrix, min_rank: usize) -> Result<Vec<GenSet>> {
    Ok(SubsetAtlas::new(m)?.irreducible_affine_subsets(min_rank))
}

pub fn maximal_euclidean_subsets(m: &CoxeterMatrix) -> Result<Vec<GenSet>> {
    Ok(SubsetAtlas::new(m)?.maximal_euclidean_subsets())
}

pub fn minimal_hyperbolic_subsets(m: &CoxeterMatrix) -> Result<Vec<GenSet>> {
    SubsetAtlas::new(m)?.minimal_hyperbolic_subsets()
}
