use super::*;
use crate::diagram::{chain4, Order};

fn s(ix: &[usize]) -> GenSet {
    GenSet::from_one_based(ix.iter().copied())
}

fn triangle() -> CoxeterMatrix {
    let o = Order::Finite(3);
    CoxeterMatrix::from_pairs(3, &[(0, 1, o), (1, 2, o), (0, 2, o)]).unwrap()
}

/// Right-angled pentagon: `m = 2` along the cycle, `∞` across.
fn pentagon() -> CoxeterMatrix {
    let mut pairs = Vec::new();
    for i in 0..5 {
        for j in i + 1..5 {
            if j - i != 1 && j - i != 4 {
                pairs.push((i, j, Order::Infinite));
            }
        }
    }
    CoxeterMatrix::from_pairs(5, &pairs).unwrap()
}

fn chain4_seven_family() -> Vec<GenSet> {
    vec![s(&[1, 2, 3, 5, 6, 7]), s(&[2, 3, 4]), s(&[3, 4, 5]), s(&[4, 5, 6])]
}

#[test]
fn moussong_examples() {
    assert!(moussong_hyperbolic(&chain4(2).unwrap()).unwrap());
    assert!(!moussong_hyperbolic(&triangle()).unwrap());
    assert!(moussong_hyperbolic(&pentagon()).unwrap());
    assert!(!moussong_hyperbolic(&chain4(3).unwrap()).unwrap());
}

#[test]
fn chain4_seven_cores() {
    let members: Vec<_> = cores(&chain4(7).unwrap()).unwrap().iter().map(|c| c.members).collect();
    assert_eq!(
        members,
        vec![s(&[1, 2, 3, 5, 6, 7]), s(&[2, 3, 4]), s(&[3, 4, 5]), s(&[4, 5, 6])]
    );
}

#[test]
fn triangle_core() {
    let c = cores(&triangle()).unwrap();
    assert_eq!(c.len(), 1);
    assert_eq!(c[0].provenance, CoreProvenance::Affine(s(&[1, 2, 3])));
}

#[test]
fn hyperbolic_has_no_cores() {
    assert!(cores(&pentagon()).unwrap().is_empty());
    assert!(minimal_family(&pentagon()).unwrap().classes.is_empty());
    assert_eq!(decide(&pentagon()).unwrap().status, Status::Hyperbolic);
}

#[test]
fn verify_examples() {
    let c = chain4(7).unwrap();
    let f = verify_family(&c, &chain4_seven_family()).unwrap();
    let r = f.verification.unwrap();
    assert!(r.rh1 && r.rh2);

    let r = verify_family(&c, &[]).unwrap().verification.unwrap();
    assert!(!r.rh1);
    assert!(r
        .coverage
        .iter()
        .any(|cov| cov.core.members == s(&[2, 3, 4]) && cov.witness.is_none()));

    let r = verify_family(&c, &[s(&[1, 2, 3, 4, 5, 6]), s(&[2, 3, 4, 5, 6, 7])])
        .unwrap()
        .verification
        .unwrap();
    assert!(!r.rh2);
    assert_eq!(r.first_rh2_violation().unwrap().intersection, s(&[2, 3, 4, 5, 6]));
}

#[test]
fn minimal_family_of_chain4_seven() {
    let f = minimal_family(&chain4(7).unwrap()).unwrap();
    assert_eq!(f.classes, chain4_seven_family());
    assert!(f.passes());
}

#[test]
fn long_chains_are_not_relatively_hyperbolic() {
    let f = minimal_family(&chain4(8).unwrap()).unwrap();
    assert!(f.classes.contains(&GenSet::full(8)));
    for n in 8..=10 {
        assert_eq!(
            decide(&chain4(n).unwrap()).unwrap().status,
            Status::NotRelativelyHyperbolic
        );
    }
    match decide(&chain4(7).unwrap()).unwrap().status {
        Status::RelativelyHyperbolicProper(classes) => assert_eq!(classes, chain4_seven_family()),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn maxparab_examples() {
    let c = chain4(7).unwrap();
    let f = maxparab(&c, 3).unwrap();
    let mut want = vec![s(&[1, 2, 3, 5, 6, 7]), s(&[2, 3, 4]), s(&[3, 4, 5]), s(&[4, 5, 6])];
    want.sort();
    assert_eq!(f.classes, want);
    assert!(f.passes());

    let pair = CoxeterMatrix::from_pairs(2, &[(0, 1, Order::Infinite)]).unwrap();
    let f = maxparab(&pair, 0).unwrap();
    assert_eq!(f.classes, vec![s(&[2])]);
    assert!(f.passes());

    let f = maxparab(&triangle(), 0).unwrap();
    assert_eq!(f.classes, vec![s(&[1, 2, 3]), s(&[2, 3])]);
    assert!(f.passes());
    assert_eq!(decide(&triangle()).unwrap().status, Status::NotRelativelyHyperbolic);

    // {s2}^⊥ = {s4,s5,s6,s7} contains the affine {s5,s6,s7}
    assert!(matches!(maxparab(&c, 1), Err(crate::Error::HypothesisFailed(_))));
}

#[test]
fn isolated_flats_examples() {
    let t = isolated_flats(&triangle()).unwrap();
    assert!(t.holds);
    assert_eq!(t.via, FlatsVia::NoMinimalHyperbolic);
    assert_eq!(t.family.classes, vec![s(&[1, 2, 3])]);

    let c = isolated_flats(&chain4(7).unwrap()).unwrap();
    assert!(c.holds);
    assert_eq!(c.via, FlatsVia::AllPerpsSpherical);
    assert_eq!(
        c.family.classes,
        vec![
            s(&[1, 2, 3, 5, 6, 7]),
            s(&[1, 2, 4, 5, 6]),
            s(&[1, 3, 4, 5, 7]),
            s(&[2, 3, 4, 6, 7])
        ]
    );
    assert!(c.family.passes());

    let p = isolated_flats(&pentagon()).unwrap();
    assert!(p.holds);

    // two commuting copies of a hyperbolic triangle (labels 3,3,4)
    let o = Order::Finite;
    let fat = CoxeterMatrix::from_pairs(
        6,
        &[
            (0, 1, o(3)),
            (1, 2, o(3)),
            (0, 2, o(4)),
            (3, 4, o(3)),
            (4, 5, o(3)),
            (3, 5, o(4)),
        ],
    )
    .unwrap();
    let f = isolated_flats(&fat).unwrap();
    assert!(!f.holds);
    assert_eq!(f.via, FlatsVia::PerpNotSpherical);
    assert_eq!(f.witness, Some((s(&[1, 2, 3]), s(&[4, 5, 6]))));
}

#[test]
fn affine_lemma_examples() {
    let t = lemma_aff_equivalence(&triangle()).unwrap();
    assert!(t.euclidean_family_valid && t.commuting_pairs_euclidean && t.minimal_hyperbolic_perps_spherical);

    // ∞-edge {1,2} and a third generator commuting with both
    let m = CoxeterMatrix::from_pairs(3, &[(0, 1, Order::Infinite)]).unwrap();
    let l = lemma_aff_equivalence(&m).unwrap();
    assert!(l.agree());
    assert!(l.commuting_pairs_euclidean);

    // Ã1 ⊔ {s} ⊔ Ã1: the only sets with all proper subsets spherical or Ã1
    // and non-spherical perp are Euclidean, so all three conditions hold
    let m = CoxeterMatrix::from_pairs(5, &[(0, 1, Order::Infinite), (3, 4, Order::Infinite)]).unwrap();
    let l = lemma_aff_equivalence(&m).unwrap();
    assert!(l.agree() && l.commuting_pairs_euclidean);
}

#[test]
fn moussong_quantifier_restriction() {
    for m in [chain4(5).unwrap(), triangle(), pentagon()] {
        let a = Analyzer::new(&m).unwrap();
        assert_eq!(a.moussong().hyperbolic, a.moussong_over_all_nonspherical());
    }
}

#[test]
fn merge_schedule_does_not_matter_on_chain8() {
    let c = chain4(8).unwrap();
    let a = Analyzer::new(&c).unwrap();
    let base = a.minimal_family().classes;
    for k in 0..20usize {
        let mut step = k;
        let f = a.minimal_family_with(&mut |len| {
            step = step.wrapping_mul(31).wrapping_add(7);
            step % len
        });
        assert_eq!(f.classes, base);
    }
}
