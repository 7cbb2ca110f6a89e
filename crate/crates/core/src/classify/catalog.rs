//! Exact recognition of connected finite and affine Coxeter diagrams.
//!
//! A connected diagram is finite or affine exactly when it appears in the
//! classical tables. Every entry except `Ã_n` (n ≥ 2) is a tree, so the matcher
//! first separates cycles from trees, then reads a tree as a path, a star with
//! one branch vertex, or a double fork.

use std::fmt;

use crate::diagram::{CoxeterMatrix, GenSet, Order};
use crate::error::{Error, Result};

/// Isomorphism type of a connected Coxeter diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiagramType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    G2,
    H(usize),
    /// Dihedral `I2(m)` for `m = 5` or `m ≥ 7`.
    I2(u32),
    AffineA(usize),
    AffineB(usize),
    AffineC(usize),
    AffineD(usize),
    AffineE(usize),
    AffineF4,
    AffineG2,
    /// Neither finite nor affine.
    Indefinite,
}

impl DiagramType {
    pub fn is_spherical(self) -> bool {
        use DiagramType::*;
        matches!(self, A(_) | B(_) | D(_) | E(_) | F4 | G2 | H(_) | I2(_))
    }

    pub fn is_affine(self) -> bool {
        use DiagramType::*;
        matches!(
            self,
            AffineA(_) | AffineB(_) | AffineC(_) | AffineD(_) | AffineE(_) | AffineF4 | AffineG2
        )
    }

    /// Number of generators of the diagram; `None` for `Indefinite`.
    pub fn rank(self) -> Option<usize> {
        use DiagramType::*;
        Some(match self {
            A(n) | B(n) | D(n) | E(n) | H(n) => n,
            F4 => 4,
            G2 | I2(_) => 2,
            AffineA(n) | AffineB(n) | AffineC(n) | AffineD(n) | AffineE(n) => n + 1,
            AffineF4 => 5,
            AffineG2 => 3,
            Indefinite => return None,
        })
    }

    /// Canonical Coxeter matrix of this type, vertices numbered along the
    /// standard drawing.
    pub fn canonical_matrix(self) -> Result<CoxeterMatrix> {
        use DiagramType::*;
        let o = Order::Finite;
        let path = |k: usize, labels: &[u32]| -> Vec<(usize, usize, Order)> {
            (0..k.saturating_sub(1))
                .map(|i| (i, i + 1, o(*labels.get(i).unwrap_or(&3))))
                .collect()
        };
        let bad = |what: &str| Err(Error::InvalidConfig(format!("no diagram {what}")));
        let (k, pairs) = match self {
            A(n) if n >= 1 => (n, path(n, &[])),
            B(n) if n >= 2 => (n, path(n, &[4])),
            D(n) if n >= 4 => {
                let mut p = path(n - 1, &[]);
                p.push((n - 3, n - 1, o(3)));
                (n, p)
            }
            E(n) if (6..=8).contains(&n) => {
                // branch at vertex 2 of the path 0..n-2, extra vertex n-1
                let mut p = path(n - 1, &[]);
                p.push((2, n - 1, o(3)));
                (n, p)
            }
            F4 => (4, path(4, &[3, 4, 3])),
            G2 => (2, path(2, &[6])),
            H(n) if n == 3 || n == 4 => (n, path(n, &[5])),
            I2(m) if m == 5 || m >= 7 => (2, path(2, &[m])),
            AffineA(1) => (2, vec![(0, 1, Order::Infinite)]),
            AffineA(n) if n >= 2 => {
                let mut p = path(n + 1, &[]);
                p.push((n, 0, o(3)));
                (n + 1, p)
            }
            AffineB(n) if n >= 3 => {
                // fork: vertices 0 and 1 both hang off vertex 2, path 2..n, last edge 4
                let mut p = vec![(0, 2, o(3))];
                for i in 1..n {
                    p.push((i, i + 1, o(3)));
                }
                p.last_mut().unwrap().2 = o(4);
                (n + 1, p)
            }
            AffineC(n) if n >= 2 => {
                let mut labels = vec![3; n];
                labels[0] = 4;
                labels[n - 1] = 4;
                (n + 1, path(n + 1, &labels))
            }
            AffineD(n) if n >= 4 => {
                // path 1..n-1 with forks 0 at vertex 2 and n at vertex n-2
                let mut p = vec![(0, 2, o(3))];
                for i in 1..n - 1 {
                    p.push((i, i + 1, o(3)));
                }
                p.push((n - 2, n, o(3)));
                (n + 1, p)
            }
            AffineE(6) => {
                let mut p = path(5, &[]);
                p.push((2, 5, o(3)));
                p.push((5, 6, o(3)));
                (7, p)
            }
            AffineE(7) => {
                let mut p = path(7, &[]);
                p.push((3, 7, o(3)));
                (8, p)
            }
            AffineE(8) => {
                let mut p = path(8, &[]);
                p.push((2, 8, o(3)));
                (9, p)
            }
            AffineF4 => (5, path(5, &[3, 3, 4, 3])),
            AffineG2 => (3, path(3, &[6, 3])),
            other => return bad(&format!("{other:?}")),
        };
        CoxeterMatrix::from_pairs(k, &pairs)
    }

    /// Every catalogued type with at most `max_rank` generators.
    pub fn catalog(max_rank: usize) -> Vec<DiagramType> {
        use DiagramType::*;
        let mut out = Vec::new();
        for n in 1..=max_rank {
            out.push(A(n));
            if n >= 3 {
                out.push(B(n));
            }
            if n >= 4 {
                out.push(D(n));
            }
        }
        let fixed = [
            B(2),
            G2,
            I2(5),
            I2(7),
            I2(8),
            I2(12),
            H(3),
            H(4),
            F4,
            E(6),
            E(7),
            E(8),
            AffineA(1),
            AffineG2,
            AffineF4,
            AffineE(6),
            AffineE(7),
            AffineE(8),
        ];
        out.extend(fixed.into_iter().filter(|t| t.rank().unwrap() <= max_rank));
        for n in 2..max_rank {
            out.push(AffineA(n));
            out.push(AffineC(n));
            if n >= 3 {
                out.push(AffineB(n));
            }
            if n >= 4 {
                out.push(AffineD(n));
            }
        }
        out
    }
}

impl fmt::Display for DiagramType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use DiagramType::*;
        match self {
            A(n) => write!(f, "A{n}"),
            B(n) => write!(f, "B{n}"),
            D(n) => write!(f, "D{n}"),
            E(n) => write!(f, "E{n}"),
            F4 => f.write_str("F4"),
            G2 => f.write_str("G2"),
            H(n) => write!(f, "H{n}"),
            I2(m) => write!(f, "I2({m})"),
            AffineA(n) => write!(f, "Ã{n}"),
            AffineB(n) => write!(f, "B\u{303}{n}"),
            AffineC(n) => write!(f, "C\u{303}{n}"),
            AffineD(n) => write!(f, "D\u{303}{n}"),
            AffineE(n) => write!(f, "Ẽ{n}"),
            AffineF4 => f.write_str("F\u{303}4"),
            AffineG2 => f.write_str("G\u{303}2"),
            Indefinite => f.write_str("INDEFINITE"),
        }
    }
}

/// Identifies the diagram on `j`, which must be nonempty and connected.
pub fn identify(m: &CoxeterMatrix, j: GenSet) -> DiagramType {
    let verts: Vec<usize> = j.iter().collect();
    identify_with(verts.len(), |a, b| m.order(verts[a], verts[b]))
}

/// Matcher over a local labelling `label(a, b)` of `k` connected vertices.
pub(crate) fn identify_with(k: usize, label: impl Fn(usize, usize) -> Order) -> DiagramType {
    use DiagramType::*;
    match k {
        0 => return Indefinite,
        1 => return A(1),
        2 => {
            return match label(0, 1) {
                Order::Infinite => AffineA(1),
                Order::Finite(3) => A(2),
                Order::Finite(4) => B(2),
                Order::Finite(6) => G2,
                Order::Finite(m) if m >= 5 => I2(m),
                Order::Finite(_) => Indefinite,
            }
        }
        _ => {}
    }

    let mut nbrs = vec![Vec::new(); k];
    let mut edges = 0usize;
    for a in 0..k {
        for b in a + 1..k {
            match label(a, b) {
                Order::Infinite => return Indefinite,
                Order::Finite(m) if m >= 3 => {
                    nbrs[a].push(b);
                    nbrs[b].push(a);
                    edges += 1;
                }
                Order::Finite(_) => {}
            }
        }
    }
    let value = |a: usize, b: usize| label(a, b).finite().unwrap_or(0);

    if edges >= k {
        let simple_cycle = edges == k && nbrs.iter().all(|v| v.len() == 2);
        let all_three = (0..k).all(|a| nbrs[a].iter().all(|&b| value(a, b) == 3));
        return if simple_cycle && all_three {
            AffineA(k - 1)
        } else {
            Indefinite
        };
    }
    if edges + 1 != k {
        // disconnected input
        return Indefinite;
    }

    let degree = |a: usize| nbrs[a].len();
    if (0..k).any(|a| degree(a) > 4) {
        return Indefinite;
    }
    if let Some(centre) = (0..k).find(|&a| degree(a) == 4) {
        let all_three = nbrs[centre].iter().all(|&b| value(centre, b) == 3);
        return if k == 5 && all_three { AffineD(4) } else { Indefinite };
    }
    let branches: Vec<usize> = (0..k).filter(|&a| degree(a) == 3).collect();

    // walk from `from` through `first`, collecting labels until a leaf or branch vertex
    let arm = |from: usize, first: usize| -> Vec<u32> {
        let mut labels = vec![value(from, first)];
        let (mut prev, mut cur) = (from, first);
        while degree(cur) == 2 {
            let next = if nbrs[cur][0] == prev {
                nbrs[cur][1]
            } else {
                nbrs[cur][0]
            };
            labels.push(value(cur, next));
            prev = cur;
            cur = next;
        }
        labels
    };

    match branches.len() {
        0 => {
            let leaf = (0..k).find(|&a| degree(a) == 1).expect("a path has a leaf");
            match_path(&arm(leaf, nbrs[leaf][0]))
        }
        1 => {
            let c = branches[0];
            let arms: Vec<Vec<u32>> = nbrs[c].iter().map(|&b| arm(c, b)).collect();
            match_star(arms)
        }
        2 => {
            let all_three = (0..k).all(|a| nbrs[a].iter().all(|&b| value(a, b) == 3));
            let forks = (0..k).filter(|&a| degree(a) == 1).all(|a| degree(nbrs[a][0]) == 3);
            if all_three && forks {
                AffineD(k - 1)
            } else {
                Indefinite
            }
        }
        _ => Indefinite,
    }
}

/// `seq` lists the labels along a path of `seq.len() + 1` vertices.
fn match_path(seq: &[u32]) -> DiagramType {
    use DiagramType::*;
    let k = seq.len() + 1;
    let threes = |s: &[u32]| s.iter().all(|&x| x == 3);
    if threes(seq) {
        return A(k);
    }
    let rev: Vec<u32> = seq.iter().rev().copied().collect();
    for s in [seq, &rev[..]] {
        let (head, tail) = (s[0], &s[1..]);
        if head == 4 && threes(tail) {
            return B(k);
        }
        if head == 5 && threes(tail) && (k == 3 || k == 4) {
            return H(k);
        }
        if s == [3, 4, 3] {
            return F4;
        }
        if s == [6, 3] {
            return AffineG2;
        }
        if s == [3, 3, 4, 3] {
            return AffineF4;
        }
        if head == 4 && s[s.len() - 1] == 4 && threes(&s[1..s.len() - 1]) {
            return AffineC(k - 1);
        }
    }
    Indefinite
}

/// Each arm lists labels from the branch vertex outward; arm length = labels count.
fn match_star(mut arms: Vec<Vec<u32>>) -> DiagramType {
    use DiagramType::*;
    arms.sort_by_key(Vec::len);
    let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
    let total: usize = lens.iter().sum::<usize>() + 1;
    let odd: Vec<(usize, usize, u32)> = arms
        .iter()
        .enumerate()
        .flat_map(|(a, labels)| {
            labels
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 3)
                .map(move |(pos, &x)| (a, pos, x))
        })
        .collect();

    if odd.is_empty() {
        return match lens[..] {
            [1, 1, c] => D(c + 3),
            [1, 2, 2] => E(6),
            [1, 2, 3] => E(7),
            [1, 2, 4] => E(8),
            [2, 2, 2] => AffineE(6),
            [1, 3, 3] => AffineE(7),
            [1, 2, 5] => AffineE(8),
            _ => Indefinite,
        };
    }
    if let [(a, pos, 4)] = odd[..] {
        // the 4 sits on the outermost edge of the longest arm, the other two arms are leaves
        if lens[0] == 1 && lens[1] == 1 && lens[a] == lens[2] && pos == lens[2] - 1 {
            return AffineB(total - 1);
        }
    }
    Indefinite
}

#[cfg(test)]
mod tests {
    use super::*;
    use DiagramType::*;

    fn id(m: &CoxeterMatrix) -> DiagramType {
        identify(m, m.full())
    }

    #[test]
    fn small_examples() {
        let o = Order::Finite;
        let tri = CoxeterMatrix::from_pairs(3, &[(0, 1, o(3)), (1, 2, o(3)), (0, 2, o(3))]).unwrap();
        assert_eq!(id(&tri), AffineA(2));
        let c2 = crate::diagram::chain4(3).unwrap();
        assert_eq!(id(&c2), AffineC(2));
        let g2t = CoxeterMatrix::from_pairs(3, &[(0, 1, o(3)), (1, 2, o(6))]).unwrap();
        assert_eq!(id(&g2t), AffineG2);
        let inf3 = CoxeterMatrix::from_pairs(3, &[(0, 1, Order::Infinite), (1, 2, o(3))]).unwrap();
        assert_eq!(id(&inf3), Indefinite);
        assert_eq!(id(&crate::diagram::chain4(4).unwrap()), Indefinite);
    }

    #[test]
    fn dihedral_names() {
        for (m, t) in [(3, A(2)), (4, B(2)), (5, I2(5)), (6, G2), (7, I2(7))] {
            let d = CoxeterMatrix::from_pairs(2, &[(0, 1, Order::Finite(m))]).unwrap();
            assert_eq!(id(&d), t, "m = {m}");
        }
        let inf = CoxeterMatrix::from_pairs(2, &[(0, 1, Order::Infinite)]).unwrap();
        assert_eq!(id(&inf), AffineA(1));
        assert_eq!(AffineA(1).to_string(), "Ã1");
    }

    #[test]
    fn catalog_round_trip() {
        for t in DiagramType::catalog(12) {
            let m = t.canonical_matrix().unwrap();
            assert_eq!(m.n(), t.rank().unwrap(), "{t}");
            assert_eq!(id(&m), t, "{t}");
        }
    }

    #[test]
    fn near_misses_are_indefinite() {
        let o = Order::Finite;
        // 3,4,3,3 is F̃4, but one more 3 leaves the tables
        let p = CoxeterMatrix::from_pairs(
            6,
            &[(0, 1, o(3)), (1, 2, o(4)), (2, 3, o(3)), (3, 4, o(3)), (4, 5, o(3))],
        )
        .unwrap();
        assert_eq!(id(&p), Indefinite);
        // H5
        let h5 = CoxeterMatrix::from_pairs(5, &[(0, 1, o(5)), (1, 2, o(3)), (2, 3, o(3)), (3, 4, o(3))]).unwrap();
        assert_eq!(id(&h5), Indefinite);
        // E9 arms (1,2,5) is affine; (1,2,6) is not
        let mut pairs: Vec<_> = (0..9).map(|i| (i, i + 1, o(3))).collect();
        pairs.push((2, 10, o(3)));
        let e10 = CoxeterMatrix::from_pairs(11, &pairs).unwrap();
        assert_eq!(id(&e10), Indefinite);
        // 4 on a leaf of a D-type fork with a long arm
        let fork = CoxeterMatrix::from_pairs(5, &[(0, 2, o(4)), (1, 2, o(3)), (2, 3, o(3)), (3, 4, o(3))]).unwrap();
        assert_eq!(id(&fork), Indefinite);
        // square with a 4
        let sq = CoxeterMatrix::from_pairs(4, &[(0, 1, o(4)), (1, 2, o(3)), (2, 3, o(3)), (3, 0, o(3))]).unwrap();
        assert_eq!(id(&sq), Indefinite);
    }
}
