//! Right-angled Coxeter groups and graph products.
//!
//! A finite simple graph `A` on `I` gives the right-angled system with
//! `m(s_i, s_j) = 2` on edges and `∞` on non-edges. For a graph product
//! `Γ(A, (P_i))`, vertex sets that are joins of pairwise disjoint non-edges
//! index the subgroups `Γ_J ≅ (P_{i1} * P_{j1}) × ... × (P_{in} * P_{jn})`.

use std::fmt;

use crate::diagram::{CoxeterMatrix, GenSet, Order, MAX_GENERATORS};
use crate::error::{Error, Result};

/// Finite simple graph with adjacency stored as bit masks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    adjacency: Vec<u32>,
    names: Option<Vec<String>>,
}

impl SimpleGraph {
    /// Rejects loops, repeated edges and out-of-range endpoints.
    pub fn new(vertex_count: usize, edges: &[(usize, usize)], names: Option<Vec<String>>) -> Result<Self> {
        if vertex_count > MAX_GENERATORS {
            return Err(Error::TooLarge { n: vertex_count });
        }
        if let Some(names) = &names {
            if names.len() != vertex_count {
                return Err(Error::NameCount {
                    expected: vertex_count,
                    got: names.len(),
                });
            }
        }
        let mut adjacency = vec![0u32; vertex_count];
        for &(a, b) in edges {
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::IndexOutOfRange {
                    index: a.max(b),
                    n: vertex_count,
                });
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            if adjacency[a] & (1 << b) != 0 {
                return Err(Error::InvalidGraph(format!("repeated edge {{{a}, {b}}}")));
            }
            adjacency[a] |= 1 << b;
            adjacency[b] |= 1 << a;
        }
        Ok(SimpleGraph { adjacency, names })
    }

    /// Graph on `n` vertices from the lower triangle of an adjacency bit code:
    /// bit `k` of `code` is the `k`-th pair `(i, j)`, `i < j`, in row-major order.
    pub fn from_code(n: usize, code: u64) -> Result<Self> {
        let mut edges = Vec::new();
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if code >> k & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        SimpleGraph::new(n, &edges, None)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidGraph(format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::new(n, &edges, None)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        SimpleGraph::new(n, &edges, None)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn is_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a] & (1 << b) != 0
    }

    pub fn neighbours(&self, a: usize) -> GenSet {
        GenSet::from_bits(self.adjacency[a])
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.is_edge(i, j))
            .collect()
    }

    /// Vertices adjacent to every member of `j`.
    pub fn common_neighbours(&self, j: GenSet) -> GenSet {
        let mut acc = GenSet::full(self.vertex_count());
        for v in j {
            acc = acc.intersection(self.neighbours(v));
        }
        acc.difference(j)
    }

    pub fn is_clique(&self, j: GenSet) -> bool {
        j.iter().all(|v| j.without(v).is_subset(self.neighbours(v)))
    }

    fn vertex_label(&self, v: usize) -> String {
        match &self.names {
            Some(names) => names[v].clone(),
            None => format!("{}", v + 1),
        }
    }
}

/// The right-angled Coxeter matrix of `a`.
pub fn from_graph(a: &SimpleGraph) -> Result<CoxeterMatrix> {
    let n = a.vertex_count();
    let mut rows = vec![vec![Order::Infinite; n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            if i == j {
                *cell = Order::Finite(1);
            } else if a.is_edge(i, j) {
                *cell = Order::Finite(2);
            }
        }
    }
    CoxeterMatrix::new(rows, a.names.clone())
}

/// The commuting graph of a right-angled matrix; `None` if some order is not 2 or `∞`.
pub fn to_graph(m: &CoxeterMatrix) -> Option<SimpleGraph> {
    if !m.is_right_angled() {
        return None;
    }
    let n = m.n();
    let edges: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| m.order(i, j) == Order::Finite(2))
        .collect();
    SimpleGraph::new(n, &edges, Some(m.names().to_vec())).ok()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphCondition {
    pub holds: bool,
    /// A 3-subset with at most one edge whose common neighbours are not a clique.
    pub witness: Option<GenSet>,
}

/// Isolated flats in graph form: for every 3-subset `J` spanning at most one
/// edge, the common neighbours of `J` form a complete graph.
///
/// The 3-subsets spanning at most one edge are exactly the minimal hyperbolic
/// subsets of the right-angled system; a 3-subset spanning exactly two edges
/// is `Ã1 × A1`, which is Euclidean.
pub fn condition_ii_graph(a: &SimpleGraph) -> GraphCondition {
    let n = a.vertex_count();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let edges = [(i, j), (i, k), (j, k)]
                    .iter()
                    .filter(|&&(x, y)| a.is_edge(x, y))
                    .count();
                if edges > 1 {
                    continue;
                }
                let set = GenSet::from_indices([i, j, k]);
                if !a.is_clique(a.common_neighbours(set)) {
                    return GraphCondition {
                        holds: false,
                        witness: Some(set),
                    };
                }
            }
        }
    }
    GraphCondition {
        holds: true,
        witness: None,
    }
}

/// A vertex set `{i1, j1, ..., in, jn}` whose only non-edges are the pairs `{ik, jk}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffJoinSet {
    pub pairs: Vec<(usize, usize)>,
    pub members: GenSet,
}

impl AffJoinSet {
    /// Validates `pairs` against `a` and puts them in canonical order.
    pub fn new(a: &SimpleGraph, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = a.vertex_count();
        let mut canon = Vec::with_capacity(pairs.len());
        let mut members = GenSet::EMPTY;
        for &(x, y) in pairs {
            if x >= n || y >= n || x == y {
                return Err(Error::InvalidJoinSet(format!("bad pair ({x}, {y})")));
            }
            if members.contains(x) || members.contains(y) {
                return Err(Error::InvalidJoinSet(format!("pair ({x}, {y}) overlaps another pair")));
            }
            if a.is_edge(x, y) {
                return Err(Error::InvalidJoinSet(format!("({x}, {y}) is an edge")));
            }
            members = members.with(x).with(y);
            canon.push((x.min(y), x.max(y)));
        }
        for v in members {
            let partner = canon
                .iter()
                .find_map(|&(x, y)| (x == v).then_some(y).or((y == v).then_some(x)))
                .unwrap();
            let expected = members.without(v).without(partner);
            if !expected.is_subset(a.neighbours(v)) {
                return Err(Error::InvalidJoinSet(format!(
                    "vertex {v} misses an edge to another pair"
                )));
            }
        }
        canon.sort();
        Ok(AffJoinSet { pairs: canon, members })
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IaffEntry {
    pub join: AffJoinSet,
    /// No other join set strictly contains this one.
    pub maximal: bool,
}

/// Pairs up `j` if its non-edges form a perfect matching.
fn as_join_set(a: &SimpleGraph, j: GenSet) -> Option<Vec<(usize, usize)>> {
    let mut pairs = Vec::new();
    for v in j {
        let missing = j.without(v).difference(a.neighbours(v));
        if missing.len() != 1 {
            return None;
        }
        let w = missing.first().unwrap();
        if v < w {
            pairs.push((v, w));
        }
    }
    Some(pairs)
}

/// All join sets with at least `min_pairs` pairs, in canonical member order.
pub fn enumerate_iaff(a: &SimpleGraph, min_pairs: usize) -> Result<Vec<IaffEntry>> {
    let n = a.vertex_count();
    if n > MAX_GENERATORS {
        return Err(Error::TooLarge { n });
    }
    let min_pairs = min_pairs.max(1);
    let mut found = Vec::new();
    for j in GenSet::full(n).subsets() {
        if j.len() < 2 * min_pairs || j.len() % 2 == 1 {
            continue;
        }
        if let Some(pairs) = as_join_set(a, j) {
            found.push(AffJoinSet { pairs, members: j });
        }
    }
    found.sort_by_key(|x| x.members);
    let members: Vec<GenSet> = found.iter().map(|x| x.members).collect();
    Ok(found
        .into_iter()
        .map(|join| {
            let maximal = !members
                .iter()
                .any(|&other| other != join.members && join.members.is_subset(other));
            IaffEntry { join, maximal }
        })
        .collect())
}

/// Shape of `Γ_J` as a direct product of free products of vertex groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaStructure {
    pub factors: Vec<(String, String)>,
}

impl fmt::Display for GammaStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (x, y)) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str(" × ")?;
            }
            write!(f, "({x} * {y})")?;
        }
        Ok(())
    }
}

/// `factor_names[v]` names the vertex group `P_v`; defaults to `P` followed by
/// the vertex name (or its 1-based index).
pub fn gamma_structure(a: &SimpleGraph, j: &AffJoinSet, factor_names: Option<&[String]>) -> Result<GammaStructure> {
    let checked = AffJoinSet::new(a, &j.pairs)?;
    if checked.members != j.members {
        return Err(Error::InvalidJoinSet("members do not match the pairs".into()));
    }
    if let Some(names) = factor_names {
        if names.len() != a.vertex_count() {
            return Err(Error::NameCount {
                expected: a.vertex_count(),
                got: names.len(),
            });
        }
    }
    let name = |v: usize| match factor_names {
        Some(names) => names[v].clone(),
        None => format!("P{}", a.vertex_label(v)),
    };
    Ok(GammaStructure {
        factors: checked.pairs.iter().map(|&(x, y)| (name(x), name(y))).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// K2,2: non-edges {0,1} and {2,3}, all cross pairs edges.
    fn k22() -> SimpleGraph {
        SimpleGraph::new(4, &[(0, 2), (0, 3), (1, 2), (1, 3)], None).unwrap()
    }

    #[test]
    fn graph_validation() {
        assert!(matches!(
            SimpleGraph::new(3, &[(0, 0)], None),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            SimpleGraph::new(3, &[(0, 1), (1, 0)], None),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            SimpleGraph::new(3, &[(0, 3)], None),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(SimpleGraph::new(25, &[], None), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn from_graph_examples() {
        let m = from_graph(&SimpleGraph::cycle(5).unwrap()).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                let d = (i as i32 - j as i32).rem_euclid(5);
                let want = match d {
                    0 => Order::Finite(1),
                    1 | 4 => Order::Finite(2),
                    _ => Order::Infinite,
                };
                assert_eq!(m.order(i, j), want);
            }
        }
        let k4 = from_graph(&SimpleGraph::complete(4).unwrap()).unwrap();
        assert!((0..4).all(|i| (0..4).all(|j| i == j || k4.order(i, j) == Order::Finite(2))));
        let e2 = from_graph(&SimpleGraph::new(2, &[], None).unwrap()).unwrap();
        assert_eq!(e2.order(0, 1), Order::Infinite);
    }

    #[test]
    fn to_graph_inverts_from_graph() {
        let g = SimpleGraph::cycle(6).unwrap();
        let back = to_graph(&from_graph(&g).unwrap()).unwrap();
        assert_eq!(back.edges(), g.edges());
        assert!(to_graph(&crate::diagram::chain4(3).unwrap()).is_none());
    }

    #[test]
    fn condition_examples() {
        assert!(condition_ii_graph(&SimpleGraph::cycle(5).unwrap()).holds);
        assert!(condition_ii_graph(&SimpleGraph::complete(5).unwrap()).holds);
        // K3,2: an independent triple whose two common neighbours are not adjacent
        let k32 = SimpleGraph::new(5, &[(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)], None).unwrap();
        let c = condition_ii_graph(&k32);
        assert!(!c.holds);
        assert_eq!(c.witness, Some(GenSet::from_indices([0, 1, 2])));
    }

    #[test]
    fn single_non_edge_triples_are_not_tested() {
        // K2,2 joined to a fifth vertex: virtually Z^2, isolated flats hold
        let mut edges = vec![(0, 2), (0, 3), (1, 2), (1, 3)];
        edges.extend((0..4).map(|v| (v, 4)));
        let g = SimpleGraph::new(5, &edges, None).unwrap();
        assert!(condition_ii_graph(&g).holds);
    }

    #[test]
    fn iaff_examples() {
        let e = enumerate_iaff(&k22(), 2).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].join.pairs, vec![(0, 1), (2, 3)]);
        assert_eq!(e[0].join.members, GenSet::full(4));
        assert!(e[0].maximal);
        assert!(enumerate_iaff(&SimpleGraph::cycle(5).unwrap(), 2).unwrap().is_empty());
        assert!(enumerate_iaff(&SimpleGraph::complete(6).unwrap(), 1)
            .unwrap()
            .is_empty());
        let singles = enumerate_iaff(&k22(), 1).unwrap();
        assert_eq!(singles.len(), 3);
        assert_eq!(singles.iter().filter(|x| x.maximal).count(), 1);
    }

    #[test]
    fn gamma_examples() {
        let g = k22();
        let names: Vec<String> = (1..=4).map(|i| format!("P{i}")).collect();
        let j = AffJoinSet::new(&g, &[(2, 3), (1, 0)]).unwrap();
        let s = gamma_structure(&g, &j, Some(&names)).unwrap();
        assert_eq!(s.to_string(), "(P1 * P2) × (P3 * P4)");

        let one = AffJoinSet::new(&g, &[(0, 1)]).unwrap();
        assert_eq!(gamma_structure(&g, &one, None).unwrap().to_string(), "(P1 * P2)");

        // K2,2,2: three disjoint non-edges fully joined
        let mut edges = Vec::new();
        for a in 0..6 {
            for b in a + 1..6 {
                if !(a % 2 == 0 && b == a + 1) {
                    edges.push((a, b));
                }
            }
        }
        let k222 = SimpleGraph::new(6, &edges, None).unwrap();
        let j = AffJoinSet::new(&k222, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(
            gamma_structure(&k222, &j, None).unwrap().to_string(),
            "(P1 * P2) × (P3 * P4) × (P5 * P6)"
        );

        assert!(matches!(AffJoinSet::new(&g, &[(0, 2)]), Err(Error::InvalidJoinSet(_))));
        let bogus = AffJoinSet {
            pairs: vec![(0, 2)],
            members: GenSet::from_indices([0, 2]),
        };
        assert!(matches!(
            gamma_structure(&g, &bogus, None),
            Err(Error::InvalidJoinSet(_))
        ));
    }
}
