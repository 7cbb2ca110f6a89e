//! Coxeter matrices and the elementary combinatorics of their diagrams.
//!
//! Two generators are adjacent in the diagram when their product has order at
//! least 3 (including infinity); they commute exactly when the order is 2.

use std::fmt;

use crate::error::{Error, Result};
pub use crate::genset::GenSet;

/// Largest supported number of generators; subsets are machine-word bit masks.
pub const MAX_GENERATORS: usize = 24;

/// The order `m(s, t)` of a product of two generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    /// Adjacent in the Coxeter diagram.
    pub fn is_edge(self) -> bool {
        !matches!(self, Order::Finite(m) if m <= 2)
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Order::Finite(m) => Some(m),
            Order::Infinite => None,
        }
    }
}

impl From<u32> for Order {
    fn from(m: u32) -> Self {
        Order::Finite(m)
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(m) => write!(f, "{m}"),
            Order::Infinite => f.write_str("∞"),
        }
    }
}

/// A validated Coxeter matrix together with generator names.
#[derive(Clone, PartialEq, Eq)]
pub struct CoxeterMatrix {
    n: usize,
    labels: Vec<Order>,
    names: Vec<String>,
    adjacent: Vec<u32>,
    commuting: Vec<u32>,
}

impl CoxeterMatrix {
    /// Validates an order table. Names default to `s1, ..., sn`.
    ///
    /// The empty system (`n = 0`) is accepted; it arises as the restriction to `∅`.
    pub fn new(entries: Vec<Vec<Order>>, names: Option<Vec<String>>) -> Result<Self> {
        let n = entries.len();
        if n > MAX_GENERATORS {
            return Err(Error::TooLarge { n });
        }
        for (row, r) in entries.iter().enumerate() {
            if r.len() != n {
                return Err(Error::Shape { n, row, len: r.len() });
            }
        }
        #[allow(clippy::needless_range_loop)]
        for i in 0..n {
            if entries[i][i] != Order::Finite(1) {
                return Err(Error::BadDiagonal { i });
            }
            for j in 0..n {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::NonSymmetric { i, j });
                }
                if i != j && matches!(entries[i][j], Order::Finite(m) if m < 2) {
                    return Err(Error::BadOrder { i, j });
                }
            }
        }
        let names = match names {
            Some(names) => {
                if names.len() != n {
                    return Err(Error::NameCount {
                        expected: n,
                        got: names.len(),
                    });
                }
                for (k, a) in names.iter().enumerate() {
                    if names[..k].contains(a) {
                        return Err(Error::DuplicateName(a.clone()));
                    }
                }
                names
            }
            None => default_names(n),
        };
        Ok(Self::assemble(n, entries.into_iter().flatten().collect(), names))
    }

    /// Builds a matrix from a list of `(i, j, m)` entries with 0-based indices;
    /// unlisted pairs commute.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize, Order)]) -> Result<Self> {
        if n > MAX_GENERATORS {
            return Err(Error::TooLarge { n });
        }
        let mut entries = vec![vec![Order::Finite(2); n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = Order::Finite(1);
        }
        for &(i, j, m) in pairs {
            if i >= n || j >= n {
                return Err(Error::IndexOutOfRange { index: i.max(j), n });
            }
            entries[i][j] = m;
            entries[j][i] = m;
        }
        Self::new(entries, None)
    }

    fn assemble(n: usize, labels: Vec<Order>, names: Vec<String>) -> Self {
        let mut adjacent = vec![0u32; n];
        let mut commuting = vec![0u32; n];
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                if labels[i * n + j].is_edge() {
                    adjacent[i] |= 1 << j;
                } else {
                    commuting[i] |= 1 << j;
                }
            }
        }
        CoxeterMatrix {
            n,
            labels,
            names,
            adjacent,
            commuting,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `m(i, j)`. Panics on out-of-range indices.
    pub fn order(&self, i: usize, j: usize) -> Order {
        assert!(i < self.n && j < self.n, "index out of range");
        self.labels[i * self.n + j]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|x| x == name)
    }

    /// The whole generating set `S`.
    pub fn full(&self) -> GenSet {
        GenSet::full(self.n)
    }

    /// `{a, b, c}` using generator names, sorted by index.
    pub fn format_set(&self, j: GenSet) -> String {
        let names: Vec<&str> = j.iter().map(|i| self.names[i].as_str()).collect();
        format!("{{{}}}", names.join(", "))
    }

    /// The order table as nested rows.
    pub fn rows(&self) -> Vec<Vec<Order>> {
        self.labels
            .chunks(self.n.max(1))
            .take(self.n)
            .map(<[Order]>::to_vec)
            .collect()
    }

    /// Generators adjacent to `i` in the diagram.
    pub fn neighbours(&self, i: usize) -> GenSet {
        GenSet::from_bits(self.adjacent[i])
    }

    /// Generators other than `i` commuting with `i`.
    pub fn commuting_with(&self, i: usize) -> GenSet {
        GenSet::from_bits(self.commuting[i])
    }

    /// True when every off-diagonal order is 2 or infinity.
    pub fn is_right_angled(&self) -> bool {
        self.labels
            .iter()
            .all(|&m| matches!(m, Order::Finite(1 | 2) | Order::Infinite))
    }

    /// Restriction of the system to `j`, with names carried along.
    pub fn induced(&self, j: GenSet) -> Result<CoxeterMatrix> {
        j.check(self.n)?;
        let idx: Vec<usize> = j.iter().collect();
        let k = idx.len();
        let mut labels = Vec::with_capacity(k * k);
        for &a in &idx {
            for &b in &idx {
                labels.push(self.labels[a * self.n + b]);
            }
        }
        let names = idx.iter().map(|&a| self.names[a].clone()).collect();
        Ok(Self::assemble(k, labels, names))
    }

    /// Irreducible components of `j`, ordered by smallest member.
    pub fn components(&self, j: GenSet) -> Result<Vec<GenSet>> {
        j.check(self.n)?;
        Ok(self.components_of(j))
    }

    pub(crate) fn components_of(&self, j: GenSet) -> Vec<GenSet> {
        let mut rest = j;
        let mut out = Vec::new();
        while let Some(low) = rest.first() {
            let c = self.component_containing(low, rest);
            out.push(c);
            rest = rest.difference(c);
        }
        out
    }

    /// Component of `start` inside `within` (which must contain `start`).
    pub(crate) fn component_containing(&self, start: usize, within: GenSet) -> GenSet {
        let mask = within.bits();
        let mut comp = 1u32 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let mut reach = 0u32;
            let mut f = frontier;
            while f != 0 {
                let b = f.trailing_zeros() as usize;
                f &= f - 1;
                reach |= self.adjacent[b];
            }
            frontier = reach & mask & !comp;
            comp |= frontier;
        }
        GenSet::from_bits(comp)
    }

    pub fn is_connected(&self, j: GenSet) -> bool {
        match j.first() {
            Some(low) => self.component_containing(low, j) == j,
            None => false,
        }
    }

    /// `J^⊥`: generators outside `j` commuting with every member of `j`.
    pub fn perp(&self, j: GenSet) -> Result<GenSet> {
        j.check(self.n)?;
        Ok(self.perp_of(j))
    }

    pub(crate) fn perp_of(&self, j: GenSet) -> GenSet {
        let mut acc = self.full().bits() & !j.bits();
        for s in j {
            acc &= self.commuting[s];
        }
        GenSet::from_bits(acc)
    }

    /// `[J1, J2] = 1` with the sets required to be disjoint.
    pub fn commutes(&self, j1: GenSet, j2: GenSet) -> Result<bool> {
        j1.check(self.n)?;
        j2.check(self.n)?;
        Ok(self.commutes_unchecked(j1, j2))
    }

    pub(crate) fn commutes_unchecked(&self, j1: GenSet, j2: GenSet) -> bool {
        j1.is_disjoint(j2) && j1.iter().all(|s| j2.is_subset(self.commuting_with(s)))
    }
}

impl fmt::Debug for CoxeterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CoxeterMatrix({})", self.names.join(", "))?;
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(Order::to_string).collect();
            writeln!(f, "  [{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("s{i}")).collect()
}

/// The chain `s_1, ..., s_n` with `m(s_i, s_{i+1}) = 4` and all other pairs commuting.
pub fn chain4(n: usize) -> Result<CoxeterMatrix> {
    let pairs: Vec<_> = (1..n).map(|i| (i - 1, i, Order::Finite(4))).collect();
    CoxeterMatrix::from_pairs(n, &pairs)
}
