#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use nutgraph::Graph;

/// Rank over the rationals by plain Gaussian elimination.
pub fn rational_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|a| BigRational::from_integer(a.clone())).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = BigRational::one() / m[rank][c].clone();
        let pivot = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && !row[c].is_zero() {
                let f = row[c].clone() * &inv;
                for (a, p) in row.iter_mut().zip(&pivot).skip(c) {
                    *a -= p * &f;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn int_rows(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter().map(|r| r.iter().map(|&a| BigInt::from(a)).collect()).collect()
}

pub fn rational_nullity(g: &Graph) -> usize {
    g.order() - rational_rank(&int_rows(&g.adjacency_matrix()))
}

pub fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&a| BigInt::from(a)).collect()
}

/// Whether `vectors` and `basis` span the same space and `basis` is
/// independent.
pub fn same_span(vectors: &[Vec<BigInt>], basis: &[Vec<BigInt>]) -> bool {
    let mut both = basis.to_vec();
    both.extend_from_slice(vectors);
    let r = rational_rank(basis);
    r == basis.len() && rational_rank(vectors) == r && rational_rank(&both) == r
}

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

pub fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges: Vec<_> = pairs
        .iter()
        .enumerate()
        .filter(|&(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    Graph::new(n, &edges).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap(n, &mut p, &mut out);
    out
}

fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k - 1 {
        heap(k - 1, p, out);
        if k.is_multiple_of(2) {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
    }
    heap(k - 1, p, out);
}

/// Canonical code by exhaustion: the smallest upper-triangle bit string over
/// all vertex permutations. Independent of the library's canonical labelling.
pub struct BruteCanon {
    n: usize,
    pair_index: Vec<Vec<usize>>,
    perms: Vec<Vec<usize>>,
}

impl BruteCanon {
    pub fn new(n: usize) -> Self {
        let mut pair_index = vec![vec![0; n]; n];
        for (i, (u, v)) in all_pairs(n).into_iter().enumerate() {
            pair_index[u][v] = i;
            pair_index[v][u] = i;
        }
        BruteCanon {
            n,
            pair_index,
            perms: permutations(n),
        }
    }

    pub fn code(&self, g: &Graph) -> u64 {
        assert_eq!(g.order(), self.n);
        self.perms
            .iter()
            .map(|p| {
                g.edges()
                    .iter()
                    .fold(0u64, |acc, &(u, v)| acc | 1 << self.pair_index[p[u]][p[v]])
            })
            .min()
            .unwrap_or(0)
    }

    /// Codes of every isomorphism class on `n` vertices, from all edge subsets.
    pub fn all_classes(&self) -> BTreeSet<u64> {
        let m = self.n * (self.n.saturating_sub(1)) / 2;
        let pairs = all_pairs(self.n);
        (0..1u64 << m)
            .map(|mask| self.code(&graph_from_mask(self.n, &pairs, mask)))
            .collect()
    }
}

/// Reference membership tables for regular nut graphs of degree 3 and 4.
pub fn reference_member(rho: usize, n: usize) -> bool {
    match rho {
        3 => n == 12 || (n.is_multiple_of(2) && n >= 18),
        4 => matches!(n, 8 | 10 | 12) || n >= 14,
        _ => false,
    }
}
