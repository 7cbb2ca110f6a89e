use coxeter_rh::relhyp::{self, Status};
use coxeter_rh::testkit::{random_matrix, to_txt, GeneratorConfig};
use coxeter_rh::GenSet;

#[test]
fn pinned_random_instance() {
    let m = random_matrix(&GeneratorConfig::uniform(6, 1)).unwrap();
    assert_eq!(to_txt(&m), include_str!("fixtures/random_n6_seed1.txt"));
    assert_eq!(
        relhyp::decide(&m).unwrap().status,
        Status::RelativelyHyperbolicProper(vec![GenSet::from_one_based([1, 5, 6])])
    );
}
