//! Simple undirected labelled graphs.
//!
//! A [`Graph`] is immutable once built. Edges are kept as a sorted list of
//! normalized pairs `(u, v)` with `u < v`, alongside a bitset adjacency
//! matrix (one run of `u64` words per row) for constant-time queries.

use std::fmt;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::canon::{self, CanonicalForm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order must be at least 1")]
    EmptyOrder,
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("relabelling is not a permutation of the vertex set")]
    NotAPermutation,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
    words: usize,
    adj: Vec<u64>,
}

pub(crate) fn words_for(order: usize) -> usize {
    order.div_ceil(64).max(1)
}

impl Graph {
    /// Builds a graph on `order` vertices from a list of vertex pairs.
    ///
    /// Pairs are normalized to `(min, max)`; the stored edge list is sorted.
    pub fn new(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if order == 0 {
            return Err(GraphError::EmptyOrder);
        }
        let words = words_for(order);
        let mut adj = vec![0u64; order * words];
        let mut list = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            for vertex in [a, b] {
                if vertex >= order {
                    return Err(GraphError::VertexOutOfRange { vertex, order });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let (u, v) = (a.min(b), a.max(b));
            let word = &mut adj[u * words + v / 64];
            if *word & (1 << (v % 64)) != 0 {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            *word |= 1 << (v % 64);
            adj[v * words + u / 64] |= 1 << (u % 64);
            list.push((u, v));
        }
        list.sort_unstable();
        Ok(Graph {
            order,
            edges: list,
            words,
            adj,
        })
    }

    /// Builds a graph from bitset rows with one word per row (`order <= 64`).
    ///
    /// The rows must describe a symmetric, loop-free relation.
    pub(crate) fn from_rows(rows: &[u64]) -> Self {
        let order = rows.len();
        debug_assert!(order <= 64 && order > 0);
        let mut edges = Vec::new();
        for (u, &row) in rows.iter().enumerate() {
            let mut higher = if u == 63 { 0 } else { row & !((2u64 << u) - 1) };
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                edges.push((u, v));
                higher &= higher - 1;
            }
        }
        Graph {
            order,
            edges,
            words: 1,
            adj: rows.to_vec(),
        }
    }

    pub fn empty(order: usize) -> Result<Self, GraphError> {
        Graph::new(order, &[])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    pub(crate) fn adjacency_words(&self) -> &[u64] {
        &self.adj
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.order {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.row(u)[v / 64] & (1 << (v % 64)) != 0
    }

    /// Neighbours of `v` in ascending label order.
    pub fn neighbors(&self, v: usize) -> Result<Vec<usize>, GraphError> {
        self.check_vertex(v)?;
        Ok(self.neighbors_unchecked(v).collect())
    }

    pub(crate) fn neighbors_unchecked(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(w * 64 + b)
                }
            })
        })
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.degree_unchecked(v))
    }

    pub(crate) fn degree_unchecked(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree_unchecked(v)).collect()
    }

    /// True iff every vertex has degree `rho`.
    pub fn is_regular(&self, rho: usize) -> bool {
        (0..self.order).all(|v| self.degree_unchecked(v) == rho)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.order];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for w in self.neighbors_unchecked(u) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.order
    }

    /// Dense 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.order)
            .map(|u| {
                (0..self.order)
                    .map(|v| i64::from(self.has_edge(u, v)))
                    .collect()
            })
            .collect()
    }

    /// Computes `A(G) * x` exactly.
    ///
    /// Panics if `x.len() != self.order()`.
    pub fn adjacency_times(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.order, "vector length must equal graph order");
        (0..self.order)
            .map(|u| {
                self.neighbors_unchecked(u)
                    .fold(BigInt::zero(), |acc, w| acc + &x[w])
            })
            .collect()
    }

    /// True iff `x` lies in the null space of the adjacency matrix.
    pub fn annihilates(&self, x: &[BigInt]) -> bool {
        x.len() == self.order && self.adjacency_times(x).iter().all(Zero::is_zero)
    }

    /// Applies a relabelling: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let mut seen = vec![false; self.order];
        if perm.len() != self.order {
            return Err(GraphError::NotAPermutation);
        }
        for &p in perm {
            if p >= self.order || std::mem::replace(&mut seen[p], true) {
                return Err(GraphError::NotAPermutation);
            }
        }
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.order, &edges)
    }

    /// Isomorphism-invariant key; equal iff the graphs are isomorphic.
    pub fn canonical_form(&self) -> CanonicalForm {
        canon::canonical_form(self)
    }

    pub fn to_graph6(&self) -> String {
        crate::graph6::encode(self)
    }

    pub fn from_graph6(text: &str) -> Result<Graph, crate::graph6::Graph6Error> {
        crate::graph6::decode(text)
    }

    /// Graphviz rendering, for inspection only.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph {name} {{");
        for v in 0..self.order {
            let _ = writeln!(out, "  {v};");
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn k1_has_no_edges() {
        let g = Graph::new(1, &[]).unwrap();
        assert_eq!(g.size(), 0);
        assert_eq!(g.degree(0), Ok(0));
    }

    #[test]
    fn rejects_each_malformed_edge_class() {
        assert_eq!(Graph::new(4, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::new(4, &[(0, 4)]),
            Err(GraphError::VertexOutOfRange { vertex: 4, order: 4 })
        );
        assert_eq!(
            Graph::new(4, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::new(0, &[]), Err(GraphError::EmptyOrder));
    }

    #[test]
    fn edges_are_normalized_and_sorted() {
        let g = Graph::new(4, &[(3, 1), (2, 0), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 3)]);
    }

    #[test]
    fn degree_queries() {
        let c4 = cycle(4);
        assert!(c4.is_regular(2));
        assert!(!c4.is_regular(3));
        assert_eq!(
            c4.degree(9),
            Err(GraphError::VertexOutOfRange { vertex: 9, order: 4 })
        );
        assert_eq!(c4.neighbors(0).unwrap(), vec![1, 3]);
    }

    #[test]
    fn large_orders_use_multiword_rows() {
        let g = cycle(130);
        assert!(g.is_regular(2));
        assert!(g.has_edge(129, 0));
        assert!(g.has_edge(63, 64));
        assert_eq!(g.neighbors(64).unwrap(), vec![63, 65]);
        assert!(g.is_connected());
    }

    #[test]
    fn from_rows_matches_new() {
        let g = cycle(5);
        let rows: Vec<u64> = (0..5).map(|v| g.row(v)[0]).collect();
        assert_eq!(Graph::from_rows(&rows), g);
        let full: Vec<u64> = (0..64).map(|v| !(1u64 << v)).collect();
        assert_eq!(Graph::from_rows(&full).size(), 64 * 63 / 2);
    }

    #[test]
    fn dot_lists_vertices_and_edges() {
        let dot = Graph::new(2, &[(0, 1)]).unwrap().to_dot("g");
        assert_eq!(dot, "graph g {\n  0;\n  1;\n  0 -- 1;\n}\n");
    }
}
