//! Isomorph-free generation and nut graph census.
//!
//! Both generators use canonical augmentation: a child is accepted only if
//! the augmentation that produced it is equivalent, under the child's
//! automorphism group, to a canonically chosen one. General graphs grow by
//! edge addition on a fixed vertex set; connected regular graphs grow by
//! vertex addition through connected graphs of bounded degree, pruned by
//! counting arguments on the remaining degree deficit.

use std::collections::HashSet;
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::{canon_rows, orbits, CanonicalForm, Labelling};
use crate::graph::Graph;
use crate::kernel::{classify, ClassTag};

/// Largest order handled by the bitset generators.
const MAXN: usize = 16;
pub const MAX_ALL_ORDER: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Universe {
    All,
    /// Connected `rho`-regular graphs.
    Regular(usize),
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Universe::All => f.write_str("all-graphs"),
            Universe::Regular(r) => write!(f, "connected-{r}-regular"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("order {n} exceeds the supported bound {max} for {universe}; {hint}")]
    OrderTooLarge {
        n: usize,
        max: usize,
        universe: Universe,
        hint: &'static str,
    },
    #[error("order {0} is below the minimum for this operation; {1}")]
    OrderTooSmall(usize, &'static str),
    #[error("no {rho}-regular graph has odd degree sum ({rho} * {n})")]
    Parity { rho: usize, n: usize },
    #[error("the census of {universe} graphs on {n} vertices is a long run; pass --long-run to start it")]
    LongRunRequired { n: usize, universe: Universe },
}

/// Maximum order for `enumerate_regular(rho, _)`.
pub fn regular_bound(rho: usize) -> usize {
    match rho {
        3 => 16,
        4 => 15,
        _ => 12,
    }
}

fn is_long_run(n: usize, universe: Universe) -> bool {
    universe == Universe::Regular(4) && n >= 15
}

fn check_all(n: usize) -> Result<(), EnumerationError> {
    if n == 0 {
        return Err(EnumerationError::OrderTooSmall(0, "graphs have at least one vertex"));
    }
    if n > MAX_ALL_ORDER {
        return Err(EnumerationError::OrderTooLarge {
            n,
            max: MAX_ALL_ORDER,
            universe: Universe::All,
            hint: "restrict to regular graphs with --regular for larger orders",
        });
    }
    Ok(())
}

fn check_regular(rho: usize, n: usize) -> Result<(), EnumerationError> {
    if n == 0 {
        return Err(EnumerationError::OrderTooSmall(0, "graphs have at least one vertex"));
    }
    if rho * n % 2 == 1 {
        return Err(EnumerationError::Parity { rho, n });
    }
    let max = regular_bound(rho);
    if n > max {
        return Err(EnumerationError::OrderTooLarge {
            n,
            max,
            universe: Universe::Regular(rho),
            hint: "larger orders are outside the exhaustive range of this generator",
        });
    }
    Ok(())
}

#[derive(Clone)]
struct Node {
    n: usize,
    rows: [u64; MAXN],
    generators: Vec<Vec<usize>>,
}

impl Node {
    fn graph(&self) -> Graph {
        Graph::from_rows(&self.rows[..self.n])
    }

    fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    fn labelling(&self) -> Labelling {
        canon_rows(self.n, 1, &self.rows[..self.n], None)
    }
}

/// One generation scheme: a root and an accept/reject child expansion.
trait Scheme: Sync {
    fn root(&self) -> Node;
    /// Whether `node` is emitted to the consumer.
    fn emits(&self, node: &Node) -> bool;
    /// Whether `node` can have children.
    fn expands(&self, node: &Node) -> bool;
    fn children(&self, node: &Node, out: &mut Vec<Node>);
}

fn walk<S: Scheme>(scheme: &S, node: &Node, visit: &mut dyn FnMut(&Node)) {
    if scheme.emits(node) {
        visit(node);
    }
    if scheme.expands(node) {
        let mut kids = Vec::new();
        scheme.children(node, &mut kids);
        for k in &kids {
            walk(scheme, k, visit);
        }
    }
}

/// Splits the tree at `depth` levels below the root. Nodes above the split
/// are visited immediately; nodes at the split become independent tasks.
fn frontier<S: Scheme>(
    scheme: &S,
    node: Node,
    depth: usize,
    visit: &mut dyn FnMut(&Node),
    tasks: &mut Vec<Node>,
) {
    if depth == 0 {
        tasks.push(node);
        return;
    }
    if scheme.emits(&node) {
        visit(&node);
    }
    if scheme.expands(&node) {
        let mut kids = Vec::new();
        scheme.children(&node, &mut kids);
        for k in kids {
            frontier(scheme, k, depth - 1, visit, tasks);
        }
    }
}

// ---------------------------------------------------------------- all graphs

struct EdgeAddition {
    n: usize,
}

fn pair_index(n: usize, u: usize, v: usize) -> usize {
    u * n + v
}

impl EdgeAddition {
    fn edge_orbits(&self, generators: &[Vec<usize>]) -> Vec<usize> {
        let n = self.n;
        // pairs (u, v) with u < v encoded as u*n + v; union-find over n*n slots
        let mut parent: Vec<usize> = (0..n * n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for g in generators {
            for u in 0..n {
                for v in u + 1..n {
                    let (a, b) = (g[u].min(g[v]), g[u].max(g[v]));
                    let (x, y) = (find(&mut parent, pair_index(n, u, v)), find(&mut parent, pair_index(n, a, b)));
                    if x != y {
                        parent[x.max(y)] = x.min(y);
                    }
                }
            }
        }
        (0..n * n).map(|i| find(&mut parent, i)).collect()
    }
}

impl Scheme for EdgeAddition {
    fn root(&self) -> Node {
        let mut node = Node {
            n: self.n,
            rows: [0; MAXN],
            generators: Vec::new(),
        };
        node.generators = node.labelling().generators;
        node
    }

    fn emits(&self, _: &Node) -> bool {
        true
    }

    fn expands(&self, node: &Node) -> bool {
        let n = self.n;
        node.rows[..n].iter().map(|r| r.count_ones() as usize).sum::<usize>() < n * (n - 1)
    }

    fn children(&self, node: &Node, out: &mut Vec<Node>) {
        let n = self.n;
        let parent_orbits = self.edge_orbits(&node.generators);
        for u in 0..n {
            for v in u + 1..n {
                if node.rows[u] & (1 << v) != 0 {
                    continue;
                }
                let idx = pair_index(n, u, v);
                if parent_orbits[idx] != idx {
                    continue;
                }
                let mut child = node.clone();
                child.rows[u] |= 1 << v;
                child.rows[v] |= 1 << u;
                if let Some(gens) = self.accept(&child, u, v) {
                    child.generators = gens;
                    out.push(child);
                }
            }
        }
    }
}

impl EdgeAddition {
    /// Canonical deletion: among edges maximizing the endpoint degree pair,
    /// the one latest in canonical order. Returns the child's automorphism
    /// generators on acceptance.
    fn accept(&self, child: &Node, u: usize, v: usize) -> Option<Vec<Vec<usize>>> {
        let n = self.n;
        let key = |a: usize, b: usize| {
            let (da, db) = (child.degree(a), child.degree(b));
            (da.max(db), da.min(db))
        };
        let mine = key(u, v);
        let mut ties = 0;
        for a in 0..n {
            let mut higher = child.rows[a] >> (a + 1);
            while higher != 0 {
                let b = a + 1 + higher.trailing_zeros() as usize;
                higher &= higher - 1;
                match key(a, b).cmp(&mine) {
                    std::cmp::Ordering::Greater => return None,
                    std::cmp::Ordering::Equal => ties += 1,
                    std::cmp::Ordering::Less => {}
                }
            }
        }
        let lab = child.labelling();
        if ties == 1 {
            return Some(lab.generators);
        }
        let pos = lab.positions();
        let mut best = (0, 0, 0, 0);
        for a in 0..n {
            let mut higher = child.rows[a] >> (a + 1);
            while higher != 0 {
                let b = a + 1 + higher.trailing_zeros() as usize;
                higher &= higher - 1;
                if key(a, b) == mine {
                    let k = (pos[a].max(pos[b]), pos[a].min(pos[b]), a, b);
                    if (k.0, k.1) > (best.0, best.1) {
                        best = k;
                    }
                }
            }
        }
        let orbits = self.edge_orbits(&lab.generators);
        if orbits[pair_index(n, best.2, best.3)] == orbits[pair_index(n, u, v)] {
            Some(lab.generators)
        } else {
            None
        }
    }
}

// ----------------------------------------------------- connected regular

struct VertexAddition {
    rho: usize,
    n: usize,
}

fn connected_without(rows: &[u64], n: usize, skip: usize) -> bool {
    let all = ((1u64 << n) - 1) & !(1 << skip);
    if all == 0 {
        return true;
    }
    let mut seen = all & all.wrapping_neg();
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= rows[v];
        }
        next &= all & !seen;
        seen |= next;
        frontier = next;
    }
    seen == all
}

impl VertexAddition {
    /// Necessary conditions for `node` to be an induced subgraph of a
    /// connected `rho`-regular graph on `self.n` vertices.
    fn feasible(&self, node: &Node) -> bool {
        let rho = self.rho;
        let r = self.n - node.n;
        let mut total = 0;
        for v in 0..node.n {
            let d = rho - node.degree(v);
            if d > r {
                return false;
            }
            total += d;
        }
        if r == 0 {
            return total == 0;
        }
        // each new vertex sends between rho-(r-1) and rho edges back
        let low = r * rho.saturating_sub(r - 1);
        total >= 1 && total >= low && total <= r * rho && (total + r * rho).is_multiple_of(2)
    }

    fn vertex_key(node: &Node, v: usize) -> (usize, usize) {
        let mut s = 0;
        let mut nb = node.rows[v];
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            s += node.degree(w);
        }
        (node.degree(v), s)
    }

    /// Canonical deletion: among non-cut vertices with maximal
    /// (degree, neighbour degree sum), the one latest in canonical order.
    fn accept(&self, child: &Node) -> Option<Labelling> {
        let n = child.n;
        let w = n - 1;
        let mine = Self::vertex_key(child, w);
        let mut tied = Vec::new();
        for x in 0..w {
            let k = Self::vertex_key(child, x);
            if k < mine {
                continue;
            }
            if !connected_without(&child.rows[..n], n, x) {
                continue;
            }
            if k > mine {
                return None;
            }
            tied.push(x);
        }
        let lab = child.labelling();
        if tied.is_empty() {
            return Some(lab);
        }
        tied.push(w);
        let pos = lab.positions();
        let chosen = *tied.iter().max_by_key(|&&x| pos[x]).unwrap();
        if chosen == w {
            return Some(lab);
        }
        let orb = orbits(n, &lab.generators);
        (orb[chosen] == orb[w]).then_some(lab)
    }
}

impl Scheme for VertexAddition {
    fn root(&self) -> Node {
        Node {
            n: 1,
            rows: [0; MAXN],
            generators: Vec::new(),
        }
    }

    fn emits(&self, node: &Node) -> bool {
        node.n == self.n && (0..node.n).all(|v| node.degree(v) == self.rho)
    }

    fn expands(&self, node: &Node) -> bool {
        node.n < self.n
    }

    fn children(&self, node: &Node, out: &mut Vec<Node>) {
        let rho = self.rho;
        let k = node.n;
        let r = self.n - k;
        let mut open = 0u64;
        let mut forced = 0u64;
        for v in 0..k {
            let d = rho - node.degree(v);
            if d > 0 {
                open |= 1 << v;
            }
            // a vertex needing all r remaining vertices must take this one
            if d == r {
                forced |= 1 << v;
            }
        }
        let min_size = rho.saturating_sub(r - 1).max(1);
        let dedupe = !node.generators.is_empty();
        let mut seen: HashSet<CanonicalForm> = HashSet::new();
        let members: Vec<usize> = (0..k).filter(|&v| open & (1 << v) != 0).collect();
        let m = members.len();
        for mask in 1u64..(1 << m) {
            let size = mask.count_ones() as usize;
            if size > rho || size < min_size {
                continue;
            }
            let mut s = 0u64;
            for (i, &v) in members.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    s |= 1 << v;
                }
            }
            if s & forced != forced {
                continue;
            }
            let mut child = Node {
                n: k + 1,
                rows: node.rows,
                generators: Vec::new(),
            };
            child.rows[k] = s;
            let mut bits = s;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                child.rows[v] |= 1 << k;
            }
            if !self.feasible(&child) {
                continue;
            }
            let Some(lab) = self.accept(&child) else {
                continue;
            };
            if dedupe && !seen.insert(lab.form.clone()) {
                continue;
            }
            child.generators = lab.generators;
            out.push(child);
        }
    }
}

// ---------------------------------------------------------------- drivers

fn run<S: Scheme>(scheme: &S, split: usize, jobs: usize, task: &(dyn Fn(&Node) -> Tally + Sync)) -> Tally {
    let mut head = Tally::default();
    let mut tasks = Vec::new();
    frontier(scheme, scheme.root(), split, &mut |node| head.merge(task(node)), &mut tasks);
    let tallies: Vec<Tally> = if jobs <= 1 {
        tasks.iter().map(|t| subtree(scheme, t, task)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| tasks.par_iter().map(|t| subtree(scheme, t, task)).collect())
    };
    for t in tallies {
        head.merge(t);
    }
    head
}

fn subtree<S: Scheme>(scheme: &S, root: &Node, task: &(dyn Fn(&Node) -> Tally + Sync)) -> Tally {
    let mut t = Tally::default();
    walk(scheme, root, &mut |node| t.merge(task(node)));
    t
}

#[derive(Default)]
struct Tally {
    examined: usize,
    counts: [usize; 4],
    graphs: Vec<Graph>,
}

impl Tally {
    fn merge(&mut self, other: Tally) {
        self.examined += other.examined;
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
        self.graphs.extend(other.graphs);
    }
}

fn collect_graphs<S: Scheme>(scheme: &S, jobs: usize) -> Vec<Graph> {
    run(scheme, 3, jobs, &|node| Tally {
        examined: 1,
        counts: [0; 4],
        graphs: vec![node.graph()],
    })
    .graphs
}

/// One representative of every isomorphism class of graphs on `n` vertices,
/// `1 <= n <= 9`, in generation order.
pub fn enumerate_all(n: usize) -> Result<Vec<Graph>, EnumerationError> {
    check_all(n)?;
    Ok(collect_graphs(&EdgeAddition { n }, 1))
}

/// One representative of every isomorphism class of connected `rho`-regular
/// graphs on `n` vertices.
pub fn enumerate_regular(rho: usize, n: usize) -> Result<Vec<Graph>, EnumerationError> {
    check_regular(rho, n)?;
    Ok(collect_graphs(&VertexAddition { rho, n }, 1))
}

/// Nut census over one generated universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub order: usize,
    pub universe: Universe,
    pub examined: usize,
    /// Indexed like [`ClassTag::ALL`].
    pub counts: [usize; 4],
    /// Every nut graph found, when requested.
    pub nuts: Vec<Graph>,
    pub elapsed: Duration,
}

impl CensusReport {
    pub fn count(&self, tag: ClassTag) -> usize {
        self.counts[tag as usize]
    }

    /// Machine-readable `key value` lines; elapsed time is left out so the
    /// output is reproducible.
    pub fn table(&self) -> String {
        let mut out = format!(
            "order {}\nuniverse {}\nexamined {}\n",
            self.order, self.universe, self.examined
        );
        for tag in ClassTag::ALL {
            out.push_str(&format!("{} {}\n", tag, self.count(tag)));
        }
        out
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CensusOptions {
    pub jobs: usize,
    pub long_run: bool,
    pub collect_nuts: bool,
}

fn classify_tally(g: Graph, collect: bool) -> Tally {
    let tag = classify(&g).tag;
    let mut counts = [0; 4];
    counts[tag as usize] = 1;
    Tally {
        examined: 1,
        counts,
        graphs: if collect && tag == ClassTag::Nut { vec![g] } else { Vec::new() },
    }
}

/// Classifies every graph of `stream` and tallies the classes.
pub fn census<I: IntoIterator<Item = Graph>>(stream: I, order: usize, universe: Universe) -> CensusReport {
    let start = Instant::now();
    let mut t = Tally::default();
    for g in stream {
        t.merge(classify_tally(g, true));
    }
    CensusReport {
        order,
        universe,
        examined: t.examined,
        counts: t.counts,
        nuts: t.graphs,
        elapsed: start.elapsed(),
    }
}

/// Generates `universe` at order `n` and classifies every graph, splitting
/// the generation tree into independent subtrees run on `options.jobs`
/// threads. The report does not depend on the thread count.
pub fn run_census(n: usize, universe: Universe, options: CensusOptions) -> Result<CensusReport, EnumerationError> {
    if n < 2 {
        return Err(EnumerationError::OrderTooSmall(
            n,
            "nut graphs are counted from two vertices up; K1 is a degenerate case",
        ));
    }
    match universe {
        Universe::All => check_all(n)?,
        Universe::Regular(rho) => check_regular(rho, n)?,
    }
    if is_long_run(n, universe) && !options.long_run {
        return Err(EnumerationError::LongRunRequired { n, universe });
    }
    let start = Instant::now();
    let collect = options.collect_nuts;
    let task = |node: &Node| classify_tally(node.graph(), collect);
    let jobs = options.jobs.max(1);
    let t = match universe {
        Universe::All => run(&EdgeAddition { n }, 3.min(n * (n - 1) / 2), jobs, &task),
        Universe::Regular(rho) => run(&VertexAddition { rho, n }, (n - 1).min(7), jobs, &task),
    };
    Ok(CensusReport {
        order: n,
        universe,
        examined: t.examined,
        counts: t.counts,
        nuts: t.graphs,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_all_counts() {
        let expected = [1, 2, 4, 11, 34, 156, 1044];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(enumerate_all(i + 1).unwrap().len(), e, "n={}", i + 1);
        }
    }

    #[test]
    fn small_regular_counts() {
        assert_eq!(enumerate_regular(3, 4).unwrap().len(), 1);
        assert_eq!(enumerate_regular(3, 6).unwrap().len(), 2);
        assert_eq!(enumerate_regular(3, 8).unwrap().len(), 5);
        assert_eq!(enumerate_regular(2, 7).unwrap().len(), 1);
        assert_eq!(enumerate_regular(4, 7).unwrap().len(), 2);
        assert_eq!(enumerate_regular(0, 1).unwrap().len(), 1);
    }

    #[test]
    fn argument_errors() {
        assert!(matches!(enumerate_all(10), Err(EnumerationError::OrderTooLarge { .. })));
        assert_eq!(enumerate_regular(3, 7), Err(EnumerationError::Parity { rho: 3, n: 7 }));
        assert!(matches!(
            run_census(15, Universe::Regular(4), CensusOptions::default()),
            Err(EnumerationError::LongRunRequired { .. })
        ));
        assert!(matches!(
            run_census(1, Universe::All, CensusOptions::default()),
            Err(EnumerationError::OrderTooSmall(1, _))
        ));
    }

    #[test]
    fn connected_without_vertex() {
        // path 0-1-2
        let rows = [0b010, 0b101, 0b010];
        assert!(connected_without(&rows, 3, 0));
        assert!(!connected_without(&rows, 3, 1));
    }
}
