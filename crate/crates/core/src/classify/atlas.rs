use crate::classify::catalog;
use crate::diagram::{CoxeterMatrix, GenSet, MAX_GENERATORS};
use crate::error::{Error, Result};

const SPHERICAL: u8 = 1;
const IRREDUCIBLE: u8 = 1 << 1;
const IRREDUCIBLE_AFFINE: u8 = 1 << 2;
const AFFINE: u8 = 1 << 3;
const EUCLIDEAN: u8 = 1 << 4;
const MINIMAL_HYPERBOLIC: u8 = 1 << 5;
// every subset, itself included, is spherical or irreducible affine
const HEREDITARY: u8 = 1 << 6;

/// Classification flags for every subset of `S`, indexed by bit mask.
///
/// Masks are filled in increasing numeric order so that every proper subset
/// and every split off component is already known. A connected set with a
/// non-spherical proper subset cannot be spherical or irreducible affine, so
/// the catalog matcher only runs on connected sets whose maximal proper
/// subsets are all spherical.
pub struct SubsetAtlas<'a> {
    matrix: &'a CoxeterMatrix,
    flags: Vec<u8>,
}

impl<'a> SubsetAtlas<'a> {
    pub fn new(matrix: &'a CoxeterMatrix) -> Result<Self> {
        let n = matrix.n();
        if n > MAX_GENERATORS {
            return Err(Error::TooLarge { n });
        }
        let size = 1usize << n;
        let mut flags = vec![0u8; size];
        flags[0] = SPHERICAL | EUCLIDEAN | HEREDITARY;
        for mask in 1..size {
            let set = GenSet::from_bits(mask as u32);
            let low = set.first().unwrap();
            let comp = matrix.component_containing(low, set);
            let mut all_sub_spherical = true;
            let mut all_sub_hereditary = true;
            for x in set {
                let f = flags[mask & !(1 << x)];
                all_sub_spherical &= f & SPHERICAL != 0;
                all_sub_hereditary &= f & HEREDITARY != 0;
            }
            let mut f = if comp == set {
                let mut f = IRREDUCIBLE;
                if all_sub_spherical {
                    let t = catalog::identify(matrix, set);
                    if t.is_spherical() {
                        f |= SPHERICAL | EUCLIDEAN;
                    } else if t.is_affine() {
                        f |= IRREDUCIBLE_AFFINE | AFFINE | EUCLIDEAN;
                    }
                }
                f
            } else {
                let a = flags[comp.bits() as usize];
                let b = flags[mask & !(comp.bits() as usize)];
                a & b & (SPHERICAL | AFFINE | EUCLIDEAN)
            };
            if all_sub_hereditary && f & (SPHERICAL | IRREDUCIBLE_AFFINE) != 0 {
                f |= HEREDITARY;
            }
            if all_sub_hereditary && f & (IRREDUCIBLE | SPHERICAL | IRREDUCIBLE_AFFINE) == IRREDUCIBLE {
                f |= MINIMAL_HYPERBOLIC;
            }
            flags[mask] = f;
        }
        Ok(SubsetAtlas { matrix, flags })
    }

    pub fn matrix(&self) -> &'a CoxeterMatrix {
        self.matrix
    }

    fn has(&self, j: GenSet, flag: u8) -> bool {
        self.flags[j.bits() as usize] & flag != 0
    }

    pub fn is_spherical(&self, j: GenSet) -> bool {
        self.has(j, SPHERICAL)
    }

    pub fn is_irreducible(&self, j: GenSet) -> bool {
        self.has(j, IRREDUCIBLE)
    }

    pub fn is_irreducible_affine(&self, j: GenSet) -> bool {
        self.has(j, IRREDUCIBLE_AFFINE)
    }

    pub fn is_affine(&self, j: GenSet) -> bool {
        self.has(j, AFFINE)
    }

    pub fn is_euclidean(&self, j: GenSet) -> bool {
        self.has(j, EUCLIDEAN)
    }

    pub fn is_minimal_hyperbolic(&self, j: GenSet) -> bool {
        self.has(j, MINIMAL_HYPERBOLIC)
    }

    /// All subsets, in increasing mask order.
    pub(crate) fn all(&self) -> impl Iterator<Item = GenSet> + '_ {
        (0..self.flags.len()).map(|m| GenSet::from_bits(m as u32))
    }

    fn collect(&self, pred: impl Fn(GenSet) -> bool) -> Vec<GenSet> {
        let mut out: Vec<GenSet> = self.all().filter(|&j| pred(j)).collect();
        out.sort();
        out
    }

    pub fn spherical_subsets(&self) -> Vec<GenSet> {
        self.collect(|j| self.is_spherical(j))
    }

    pub fn irreducible_affine_subsets(&self, min_rank: usize) -> Vec<GenSet> {
        self.collect(|j| self.is_irreducible_affine(j) && j.len() >= min_rank)
    }

    /// Euclidean sets are closed under taking subsets, so a Euclidean set is
    /// maximal iff no single generator extends it.
    pub fn maximal_euclidean_subsets(&self) -> Vec<GenSet> {
        let full = self.matrix.full();
        self.collect(|j| self.is_euclidean(j) && full.difference(j).iter().all(|x| !self.is_euclidean(j.with(x))))
    }

    /// Fails with `SizeBoundViolated` if a minimal hyperbolic set of more than
    /// ten generators turns up.
    pub fn minimal_hyperbolic_subsets(&self) -> Result<Vec<GenSet>> {
        let out = self.collect(|j| j.len() <= 11 && self.is_minimal_hyperbolic(j));
        match out.iter().find(|j| j.len() > 10) {
            Some(j) => Err(Error::SizeBoundViolated(j.len())),
            None => Ok(out),
        }
    }
}
