use coxeter_rh::classify::{catalog, classify_subset, numeric_type, DefiniteKind, DEFAULT_TOLERANCE};
use coxeter_rh::relhyp::{self, Analyzer, Status};
use coxeter_rh::testkit::{brute_force_decide, exhaustive_corpus, random_matrix, GeneratorConfig};
use coxeter_rh::{CoxeterMatrix, DiagramType, GenSet, Order};
use proptest::prelude::*;

fn small_labels() -> Vec<Order> {
    vec![Order::Finite(2), Order::Finite(3), Order::Finite(4), Order::Infinite]
}

fn assert_oracle_agrees(m: &CoxeterMatrix) {
    let oracle = brute_force_decide(m).unwrap();
    let decision = relhyp::decide(m).unwrap();
    let proper = decision.status != Status::NotRelativelyHyperbolic;
    assert_eq!(proper, oracle.exists_proper_family, "{m:?}");
    if proper {
        assert_eq!(decision.minimal_family.classes, oracle.finest, "{m:?}");
    }
    assert_eq!(oracle.finest_ties, 1, "finest partition not unique for {m:?}");
    let cores: Vec<GenSet> = relhyp::cores(m).unwrap().iter().map(|c| c.members).collect();
    assert_eq!(cores, oracle.maximal_cores, "{m:?}");
}

#[test]
fn partition_oracle_on_small_corpus() {
    for n in 1..=4 {
        for m in exhaustive_corpus(n, &small_labels()).unwrap() {
            assert_oracle_agrees(&m);
        }
    }
}

#[test]
fn partition_oracle_on_random_instances() {
    for seed in 0..500u64 {
        let n = 5 + (seed % 2) as usize;
        assert_oracle_agrees(&random_matrix(&GeneratorConfig::uniform(n, seed)).unwrap());
    }
}

fn assert_numeric_agrees(m: &CoxeterMatrix) {
    for bits in 1..1u32 << m.n() {
        let j = GenSet::from_bits(bits);
        if !m.is_connected(j) {
            continue;
        }
        let class = classify_subset(m, j).unwrap();
        let kind = numeric_type(m, j, DEFAULT_TOLERANCE).unwrap().kind;
        assert_eq!(class.spherical, kind == DefiniteKind::PositiveDefinite, "{m:?} {j:?}");
        assert_eq!(
            class.irreducible_affine,
            kind == DefiniteKind::PositiveSemidefiniteNullity(1),
            "{m:?} {j:?}"
        );
    }
}

#[test]
fn catalog_agrees_with_cosine_matrix() {
    let labels: Vec<Order> = (2..=8).map(Order::Finite).chain([Order::Infinite]).collect();
    for n in 1..=3 {
        for m in exhaustive_corpus(n, &labels).unwrap() {
            assert_numeric_agrees(&m);
        }
    }
    for m in exhaustive_corpus(4, &labels).unwrap().step_by(61) {
        assert_numeric_agrees(&m);
    }
    for seed in 0..200u64 {
        assert_numeric_agrees(&random_matrix(&GeneratorConfig::uniform(5 + (seed % 2) as usize, seed)).unwrap());
    }
}

/// Every family of proper subsets passing RH1 and RH2 contains the minimal
/// family class by class. Spherical classes never matter, so only families of
/// non-spherical proper subsets are enumerated.
#[test]
fn minimal_family_is_finest() {
    for n in 1..=4 {
        for m in exhaustive_corpus(n, &small_labels()).unwrap() {
            let a = Analyzer::new(&m).unwrap();
            let minimal = a.minimal_family().classes;
            let candidates: Vec<GenSet> = (0..(1u32 << n) - 1)
                .map(GenSet::from_bits)
                .filter(|&j| !a.atlas().is_spherical(j))
                .collect();
            let mut found_proper = false;
            for pick in 0..1u32 << candidates.len() {
                let family: Vec<GenSet> = (0..candidates.len())
                    .filter(|&k| pick >> k & 1 == 1)
                    .map(|k| candidates[k])
                    .collect();
                if !a.verify_family(&family).unwrap().passes() {
                    continue;
                }
                found_proper = true;
                for c in &minimal {
                    assert!(
                        family.iter().any(|k| c.is_subset(*k)),
                        "{m:?}: {c:?} not refined by {family:?}"
                    );
                }
            }
            let status = a.decide().status;
            assert_eq!(found_proper, status != Status::NotRelativelyHyperbolic, "{m:?}");
            assert_eq!(
                found_proper,
                brute_force_decide(&m).unwrap().exists_proper_family,
                "{m:?}"
            );
        }
    }
}

fn permuted(m: &CoxeterMatrix, perm: &[usize]) -> CoxeterMatrix {
    let n = m.n();
    let rows = (0..n)
        .map(|i| (0..n).map(|j| m.order(perm[i], perm[j])).collect())
        .collect();
    CoxeterMatrix::new(rows, None).unwrap()
}

fn catalog_types() -> Vec<DiagramType> {
    DiagramType::catalog(9)
}

proptest! {
    #[test]
    fn identification_ignores_labelling(t in 0..catalog_types().len(), perm_seed in any::<u64>()) {
        let t = catalog_types()[t];
        let m = t.canonical_matrix().unwrap();
        let n = m.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = perm_seed;
        for i in (1..n).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (x >> 33) as usize % (i + 1));
        }
        let p = permuted(&m, &perm);
        prop_assert_eq!(catalog::identify(&p, p.full()), t);
    }

    #[test]
    fn decision_ignores_labelling(seed in any::<u64>(), n in 2..7usize) {
        let m = random_matrix(&GeneratorConfig::uniform(n, seed)).unwrap();
        let perm: Vec<usize> = (0..n).rev().collect();
        let p = permuted(&m, &perm);
        let back = |j: GenSet| GenSet::from_indices(j.iter().map(|i| perm[i]));
        let mut mapped: Vec<GenSet> = relhyp::minimal_family(&p).unwrap().classes.into_iter().map(back).collect();
        mapped.sort();
        prop_assert_eq!(mapped, relhyp::minimal_family(&m).unwrap().classes);
        prop_assert_eq!(relhyp::decide(&p).unwrap().status.label(), relhyp::decide(&m).unwrap().status.label());
    }
}
