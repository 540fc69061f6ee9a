//! Finite posets given by a relation table, with cover relations and DOT rendering.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    leq: Vec<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OrderCheck {
    pub reflexive: bool,
    pub antisymmetric: bool,
    pub transitive: bool,
}

impl OrderCheck {
    pub fn is_partial_order(&self) -> bool {
        self.reflexive && self.antisymmetric && self.transitive
    }
}

impl Poset {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut leq = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                leq.push(f(i, j));
            }
        }
        Self { n, leq }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.n + j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn check(&self) -> OrderCheck {
        let n = self.n;
        let reflexive = (0..n).all(|i| self.leq(i, i));
        let antisymmetric = (0..n).all(|i| (0..n).all(|j| i == j || !(self.leq(i, j) && self.leq(j, i))));
        let transitive = (0..n).all(|i| {
            (0..n).filter(|&j| self.leq(i, j)).all(|j| (0..n).all(|k| !self.leq(j, k) || self.leq(i, k)))
        });
        OrderCheck { reflexive, antisymmetric, transitive }
    }

    /// Pairs `(i, j)` with `i < j` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt(i, j) && !(0..n).any(|k| self.lt(i, k) && self.lt(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn minima(&self) -> Vec<usize> {
        (0..self.n).filter(|&j| !(0..self.n).any(|i| self.lt(i, j))).collect()
    }

    pub fn maxima(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| !(0..self.n).any(|j| self.lt(i, j))).collect()
    }
}

/// Nodes of a poset together with its cover edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hasse<N> {
    pub nodes: Vec<N>,
    pub edges: Vec<(usize, usize)>,
}

impl<N> Hasse<N> {
    pub fn from_poset(nodes: Vec<N>, poset: &Poset) -> Self {
        assert_eq!(nodes.len(), poset.len(), "one node per poset element");
        Self { nodes, edges: poset.covers() }
    }

    pub fn to_dot(&self, label: impl Fn(&N) -> String) -> String {
        let mut s = String::from("digraph hasse {\n");
        for (i, n) in self.nodes.iter().enumerate() {
            let l = label(n).replace('\\', "\\\\").replace('"', "\\\"");
            s.push_str(&format!("  n{i} [label=\"{l}\"];\n"));
        }
        for (a, b) in &self.edges {
            s.push_str(&format!("  n{a} -> n{b};\n"));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_ascii(&self, label: impl Fn(&N) -> String) -> String {
        let mut s = String::new();
        for (i, n) in self.nodes.iter().enumerate() {
            s.push_str(&format!("[{i}] {}\n", label(n)));
        }
        for (a, b) in &self.edges {
            s.push_str(&format!("{a} -> {b}\n"));
        }
        s
    }
}
