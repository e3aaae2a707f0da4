//! Simple undirected graphs on vertex set {0, …, n−1}.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(u32, u32)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
            }
            if a as usize >= n || b as usize >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a}, {b}) out of range for {n} vertices"
                )));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Graph { n, edges: set })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| ((i - 1) as u32, i as u32))).unwrap()
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        Graph::new(n, (0..n).map(|i| (i as u32, ((i + 1) % n) as u32))).unwrap()
    }

    pub fn complete(n: usize) -> Self {
        Graph::new(
            n,
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i as u32, j as u32))),
        )
        .unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Graph::new(
            a + b,
            (0..a).flat_map(move |i| (a..a + b).map(move |j| (i as u32, j as u32))),
        )
        .unwrap()
    }

    /// A center vertex 0 joined to `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i as u32))).unwrap()
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5u32 {
            edges.push((i, (i + 1) % 5)); // outer cycle
            edges.push((i, i + 5)); // spokes
            edges.push((i + 5, (i + 2) % 5 + 5)); // inner pentagram
        }
        Graph::new(10, edges).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as normalized pairs (i < j), in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Adjacency bitsets; requires n ≤ 64.
    pub fn adjacency_bits(&self) -> Result<Vec<u64>> {
        if self.n > 64 {
            return Err(Error::SizeLimit {
                limit: 64,
                found: self.n,
            });
        }
        let mut adj = vec![0u64; self.n];
        for (a, b) in self.edges() {
            adj[a as usize] |= 1 << b;
            adj[b as usize] |= 1 << a;
        }
        Ok(adj)
    }

    fn edge_mask(&self, perm: &[usize]) -> u64 {
        // pair (i, j), i < j, occupies a fixed bit position
        let mut mask = 0u64;
        let mut bit = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                let (a, b) = (perm[i] as u32, perm[j] as u32);
                if self.has_edge(a, b) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        mask
    }

    /// Least edge mask over all vertex relabelings; equal masks mean
    /// isomorphic graphs. Intended for small n only.
    pub fn canonical_mask(&self) -> u64 {
        let mut best = u64::MAX;
        let mut perm: Vec<usize> = (0..self.n).collect();
        permute(&mut perm, 0, &mut |p| {
            let m = self.edge_mask(p);
            if m < best {
                best = m;
            }
        });
        best
    }
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices. Exhaustive over all 2^C(n,2) edge sets; desk scale (n ≤ 5).
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<Graph> {
    assert!(n <= 6, "exhaustive enumeration is desk scale only");
    let pairs: Vec<(u32, u32)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i as u32, j as u32)))
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, &e)| e);
        let g = Graph::new(n, edges).unwrap();
        let canon = g.canonical_mask();
        if seen.insert(canon) {
            out.push(g);
        }
    }
    out
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph(n={}, m={})", self.n, self.edges.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors() {
        let p3 = Graph::path(3);
        assert_eq!(p3.edge_count(), 2);
        assert!(p3.has_edge(0, 1) && p3.has_edge(1, 2) && !p3.has_edge(0, 2));

        let k4 = Graph::complete(4);
        assert_eq!(k4.edge_count(), 6);

        let c5 = Graph::cycle(5);
        assert_eq!(c5.edge_count(), 5);

        let pet = Graph::petersen();
        assert_eq!(pet.n(), 10);
        assert_eq!(pet.edge_count(), 15);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 5)]).is_err());
        // duplicates collapse
        let g = Graph::new(3, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn isomorphism_class_counts() {
        // numbers of unlabeled simple graphs on 1..=5 vertices
        assert_eq!(graphs_up_to_isomorphism(1).len(), 1);
        assert_eq!(graphs_up_to_isomorphism(2).len(), 2);
        assert_eq!(graphs_up_to_isomorphism(3).len(), 4);
        assert_eq!(graphs_up_to_isomorphism(4).len(), 11);
        assert_eq!(graphs_up_to_isomorphism(5).len(), 34);
    }

    #[test]
    fn canonical_mask_identifies_isomorphs() {
        let a = Graph::new(3, [(0, 1)]).unwrap();
        let b = Graph::new(3, [(1, 2)]).unwrap();
        assert_eq!(a.canonical_mask(), b.canonical_mask());
        let c = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_ne!(a.canonical_mask(), c.canonical_mask());
    }
}
