use num_bigint::BigInt;

use super::ConstructionError;
use crate::graph::Graph;

/// The data fixing the labels of `F(G, v)`.
///
/// With `rho = deg v` and neighbours `u_1 < ... < u_rho`, the new vertices are
/// `q_i = n + (i - 1)` and `p_i = n + rho + (i - 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FowlerSite {
    pub base: Graph,
    pub v: usize,
    pub rho: usize,
    pub neighbors: Vec<usize>,
    pub q: Vec<usize>,
    pub p: Vec<usize>,
}

impl FowlerSite {
    pub fn new(g: &Graph, v: usize) -> Result<Self, ConstructionError> {
        let n = g.order();
        let neighbors = g
            .neighbors(v)
            .map_err(|_| ConstructionError::VertexOutOfRange { vertex: v, order: n })?;
        let rho = neighbors.len();
        if rho == 0 {
            return Err(ConstructionError::IsolatedVertex(v));
        }
        Ok(FowlerSite {
            base: g.clone(),
            v,
            rho,
            neighbors,
            q: (n..n + rho).collect(),
            p: (n + rho..n + 2 * rho).collect(),
        })
    }

    /// With a single neighbour the p-q block is empty and the result may be
    /// disconnected.
    pub fn is_degenerate(&self) -> bool {
        self.rho == 1
    }

    pub fn build(&self) -> Graph {
        let v = self.v;
        let mut edges: Vec<(usize, usize)> = self
            .base
            .edges()
            .iter()
            .copied()
            .filter(|&(a, b)| a != v && b != v)
            .collect();
        for i in 0..self.rho {
            edges.push((v, self.q[i]));
            edges.push((self.p[i], self.neighbors[i]));
            for j in 0..self.rho {
                if i != j {
                    edges.push((self.p[i], self.q[j]));
                }
            }
        }
        Graph::new(self.base.order() + 2 * self.rho, &edges)
            .expect("Fowler gadget edges are simple")
    }
}

/// `F(G, v)`: detach `v` from its neighbours `u_i`, join `v` to every `q_i`,
/// `p_i` to `u_i`, and `p_i` to `q_j` for `i != j`.
pub fn fowler(g: &Graph, v: usize) -> Result<Graph, ConstructionError> {
    Ok(FowlerSite::new(g, v)?.build())
}

/// Lifts a kernel vector of `site.base` to one of `F(G, v)`.
///
/// `x'(w) = x(w)` on old vertices other than `v`, `x'(p_i) = x(v)`,
/// `x'(q_i) = x(u_i)` and `x'(v) = -(rho - 1) x(v)`.
pub fn fowler_lift(x: &[BigInt], site: &FowlerSite) -> Result<Vec<BigInt>, ConstructionError> {
    let n = site.base.order();
    if x.len() != n {
        return Err(ConstructionError::Dimension {
            found: x.len(),
            expected: n,
        });
    }
    let mut out = Vec::with_capacity(n + 2 * site.rho);
    out.extend_from_slice(x);
    out.extend(site.neighbors.iter().map(|&u| x[u].clone()));
    out.extend(std::iter::repeat_n(x[site.v].clone(), site.rho));
    out[site.v] = -BigInt::from(site.rho - 1) * &x[site.v];
    Ok(out)
}

/// Replaces edge `e = (a, b)`, `a < b`, by the path `a, n, n+1, n+2, n+3, b`.
pub fn subdivide_4fold(g: &Graph, e: (usize, usize)) -> Result<Graph, ConstructionError> {
    let (a, b) = (e.0.min(e.1), e.0.max(e.1));
    if !g.has_edge(a, b) {
        return Err(ConstructionError::NotAnEdge(e.0, e.1));
    }
    let n = g.order();
    let mut edges: Vec<(usize, usize)> =
        g.edges().iter().copied().filter(|&f| f != (a, b)).collect();
    edges.extend([(a, n), (n, n + 1), (n + 1, n + 2), (n + 2, n + 3), (n + 3, b)]);
    Ok(Graph::new(n + 4, &edges).expect("subdivision edges are simple"))
}
