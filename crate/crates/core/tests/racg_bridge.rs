use coxeter_rh::classify::SubsetAtlas;
use coxeter_rh::racg::{condition_ii_graph, enumerate_iaff, from_graph, to_graph, SimpleGraph};
use coxeter_rh::relhyp;
use coxeter_rh::testkit::random_graph;
use coxeter_rh::{GenSet, Order};

fn all_graphs(n: usize) -> impl Iterator<Item = SimpleGraph> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0..1u64 << pairs).map(move |code| SimpleGraph::from_code(n, code).unwrap())
}

fn check_bridge(g: &SimpleGraph) {
    let m = from_graph(g).unwrap();
    let graph_form = condition_ii_graph(g);
    let flats = relhyp::isolated_flats(&m).unwrap();
    assert_eq!(graph_form.holds, flats.holds, "{:?}", g.edges());
    if let Some(w) = graph_form.witness {
        assert_eq!(w.len(), 3);
        assert!(relhyp::isolated_flats(&m).unwrap().witness.is_some());
    }
}

/// Join sets with at least two pairs are non-spherical Euclidean, and under
/// isolated flats the maximal ones are the affine parts of the maximal
/// Euclidean subsets of rank at least 2.
fn check_join_sets(g: &SimpleGraph) {
    let m = from_graph(g).unwrap();
    let atlas = SubsetAtlas::new(&m).unwrap();
    let joins = enumerate_iaff(g, 2).unwrap();
    for j in &joins {
        assert!(atlas.is_euclidean(j.join.members) && !atlas.is_spherical(j.join.members));
    }
    if !condition_ii_graph(g).holds {
        return;
    }
    let maximal: Vec<GenSet> = joins.iter().filter(|j| j.maximal).map(|j| j.join.members).collect();
    let mut parts: Vec<GenSet> = atlas
        .maximal_euclidean_subsets()
        .into_iter()
        .map(|k| {
            m.components(k)
                .unwrap()
                .into_iter()
                .filter(|c| !atlas.is_spherical(*c))
                .fold(GenSet::EMPTY, GenSet::union)
        })
        .filter(|p| p.len() >= 4)
        .collect();
    parts.sort();
    parts.dedup();
    assert_eq!(maximal, parts, "{:?}", g.edges());
    assert_eq!(maximal, relhyp::minimal_family(&m).unwrap().classes, "{:?}", g.edges());
}

#[test]
fn graph_condition_matches_isolated_flats_exhaustively() {
    for n in 0..=6 {
        for g in all_graphs(n) {
            check_bridge(&g);
        }
    }
}

#[test]
fn graph_condition_matches_isolated_flats_randomly() {
    for seed in 0..150u64 {
        let n = 7 + (seed % 3) as usize;
        let p = [0.3, 0.5, 0.7][(seed / 3 % 3) as usize];
        check_bridge(&random_graph(n, p, seed).unwrap());
    }
}

#[test]
fn join_sets_are_the_euclidean_peripherals() {
    for n in 0..=6 {
        for g in all_graphs(n) {
            check_join_sets(&g);
        }
    }
    for seed in 0..60u64 {
        check_join_sets(&random_graph(8, 0.6, seed).unwrap());
    }
}

#[test]
fn edges_are_the_commuting_pairs() {
    for g in all_graphs(5) {
        let m = from_graph(&g).unwrap();
        for a in 0..5 {
            for b in 0..5 {
                if a != b {
                    assert_eq!(g.is_edge(a, b), m.order(a, b) == Order::Finite(2));
                }
            }
        }
        assert_eq!(to_graph(&m).unwrap().edges(), g.edges());
    }
}

fn read_graph_fixture(text: &str) -> SimpleGraph {
    let mut lines = text.lines();
    let n: usize = lines.next().unwrap().trim().parse().unwrap();
    let edges: Vec<(usize, usize)> = lines
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let mut it = l.split_whitespace().map(|x| x.parse::<usize>().unwrap() - 1);
            (it.next().unwrap(), it.next().unwrap())
        })
        .collect();
    SimpleGraph::new(n, &edges, None).unwrap()
}

/// Smallest failing graph by vertices, then edges, then adjacency code. It is
/// the complete bipartite graph K2,3.
#[test]
fn minimal_failing_graph_fixture() {
    let g = read_graph_fixture(include_str!("fixtures/min_failing_graph.txt"));
    let c = condition_ii_graph(&g);
    assert!(!c.holds);
    assert_eq!(c.witness, Some(GenSet::from_indices([2, 3, 4])));
    assert!(!relhyp::isolated_flats(&from_graph(&g).unwrap()).unwrap().holds);

    let mut first = None;
    'search: for n in 0..=6usize {
        let pairs = n * n.saturating_sub(1) / 2;
        let mut best: Option<(usize, u64)> = None;
        for code in 0..1u64 << pairs {
            let h = SimpleGraph::from_code(n, code).unwrap();
            if !condition_ii_graph(&h).holds {
                let e = h.edges().len();
                if best.is_none_or(|(be, _)| e < be) {
                    best = Some((e, code));
                }
            }
        }
        if let Some((_, code)) = best {
            first = Some(SimpleGraph::from_code(n, code).unwrap());
            break 'search;
        }
    }
    assert_eq!(first.unwrap().edges(), g.edges());
}
