use super::family::PeripheralFamily;
use super::Analyzer;
use crate::diagram::GenSet;
use crate::error::Result;

/// Gromov hyperbolicity by Moussong's criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoussongVerdict {
    pub hyperbolic: bool,
    /// Smallest irreducible affine set of rank at least 3, if any.
    pub affine_witness: Option<GenSet>,
    /// An irreducible non-spherical `J` with non-spherical `J^⊥`, if any.
    pub perp_witness: Option<(GenSet, GenSet)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlatsVia {
    /// There are no minimal hyperbolic subsets.
    NoMinimalHyperbolic,
    /// Every minimal hyperbolic `J` has spherical `J^⊥`.
    AllPerpsSpherical,
    /// Some minimal hyperbolic `J` has non-spherical `J^⊥`.
    PerpNotSpherical,
}

impl FlatsVia {
    pub fn tag(self) -> &'static str {
        match self {
            FlatsVia::NoMinimalHyperbolic => "no-minimal-hyperbolic",
            FlatsVia::AllPerpsSpherical => "minimal-hyperbolic-perps-spherical",
            FlatsVia::PerpNotSpherical => "minimal-hyperbolic-perp-not-spherical",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedFlats {
    pub holds: bool,
    pub via: FlatsVia,
    /// A minimal hyperbolic set and its non-spherical perp.
    pub witness: Option<(GenSet, GenSet)>,
    /// Non-spherical maximal Euclidean subsets; empty unless `holds`.
    pub family: PeripheralFamily,
}

/// The three conditions characterising virtually abelian peripheral structures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AffineLemma {
    /// The maximal Euclidean subsets satisfy RH1 and RH2.
    pub euclidean_family_valid: bool,
    /// `J1 ∪ J2` is Euclidean for all disjoint commuting non-spherical `J1`, `J2`.
    pub commuting_pairs_euclidean: bool,
    /// `J^⊥` is spherical for every minimal hyperbolic `J`.
    pub minimal_hyperbolic_perps_spherical: bool,
}

impl AffineLemma {
    pub fn agree(&self) -> bool {
        self.euclidean_family_valid == self.commuting_pairs_euclidean
            && self.commuting_pairs_euclidean == self.minimal_hyperbolic_perps_spherical
    }
}

impl Analyzer<'_> {
    /// Both conditions of the criterion; the perp condition is checked on
    /// irreducible `J` only, which suffices because a non-spherical set has a
    /// non-spherical irreducible component with a larger perp.
    pub fn moussong(&self) -> MoussongVerdict {
        let m = self.matrix();
        let atlas = self.atlas();
        let mut affine_witness = None;
        let mut perp_witness = None;
        let mut irreducible: Vec<GenSet> = atlas
            .all()
            .filter(|&j| atlas.is_irreducible(j) && !atlas.is_spherical(j))
            .collect();
        irreducible.sort();
        for j in irreducible {
            if affine_witness.is_none() && atlas.is_irreducible_affine(j) && j.len() >= 3 {
                affine_witness = Some(j);
            }
            let p = m.perp_of(j);
            if perp_witness.is_none() && !atlas.is_spherical(p) {
                perp_witness = Some((j, p));
            }
        }
        MoussongVerdict {
            hyperbolic: affine_witness.is_none() && perp_witness.is_none(),
            affine_witness,
            perp_witness,
        }
    }

    /// Moussong's criterion with the perp condition quantified over every
    /// non-spherical subset.
    pub fn moussong_over_all_nonspherical(&self) -> bool {
        let m = self.matrix();
        let atlas = self.atlas();
        let no_affine = atlas.all().all(|j| !(atlas.is_irreducible_affine(j) && j.len() >= 3));
        no_affine
            && atlas
                .all()
                .filter(|&j| !atlas.is_spherical(j))
                .all(|j| atlas.is_spherical(m.perp_of(j)))
    }

    fn minimal_hyperbolic_perp_violation(&self) -> Result<(bool, Option<(GenSet, GenSet)>)> {
        let m = self.matrix();
        let atlas = self.atlas();
        let minimal = atlas.minimal_hyperbolic_subsets()?;
        let witness = minimal
            .iter()
            .map(|&j| (j, m.perp_of(j)))
            .find(|&(_, p)| !atlas.is_spherical(p));
        Ok((minimal.is_empty(), witness))
    }

    pub fn isolated_flats(&self) -> Result<IsolatedFlats> {
        let (none, witness) = self.minimal_hyperbolic_perp_violation()?;
        let holds = witness.is_none();
        let via = match (holds, none) {
            (false, _) => FlatsVia::PerpNotSpherical,
            (true, true) => FlatsVia::NoMinimalHyperbolic,
            (true, false) => FlatsVia::AllPerpsSpherical,
        };
        let family = if holds {
            let classes: Vec<GenSet> = self
                .atlas()
                .maximal_euclidean_subsets()
                .into_iter()
                .filter(|&k| !self.atlas().is_spherical(k))
                .collect();
            self.verify_family(&classes)?
        } else {
            PeripheralFamily {
                classes: Vec::new(),
                verification: None,
            }
        };
        Ok(IsolatedFlats {
            holds,
            via,
            witness,
            family,
        })
    }

    /// Evaluates the three conditions independently. The commuting-pair
    /// condition enumerates pairs literally, which costs up to `3^n` steps.
    pub fn affine_lemma(&self) -> Result<AffineLemma> {
        let m = self.matrix();
        let atlas = self.atlas();

        let euclidean = atlas.maximal_euclidean_subsets();
        let euclidean_family_valid = self.verify_classes(&euclidean).passes();

        let commuting_pairs_euclidean = atlas.all().filter(|&j| !atlas.is_spherical(j)).all(|j1| {
            m.perp_of(j1)
                .subsets()
                .filter(|&j2| !atlas.is_spherical(j2))
                .all(|j2| atlas.is_euclidean(j1.union(j2)))
        });

        let (_, witness) = self.minimal_hyperbolic_perp_violation()?;
        Ok(AffineLemma {
            euclidean_family_valid,
            commuting_pairs_euclidean,
            minimal_hyperbolic_perps_spherical: witness.is_none(),
        })
    }
}
