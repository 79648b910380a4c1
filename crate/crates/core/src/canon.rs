//! Canonical labelling by partition refinement and backtracking.
//!
//! The search tree is the usual individualization-refinement tree: each node
//! is an equitable ordered partition, children individualize one vertex of
//! the first smallest non-singleton cell. Every node carries a hash of its
//! refinement trace; the canonical leaf minimizes (trace hashes along the
//! path, permuted adjacency rows) lexicographically. Leaves that coincide
//! with the first or the current best leaf yield automorphisms, which prune
//! the tree by orbits and are returned as generators of the full group.

use std::cmp::Ordering;
use std::collections::VecDeque;

use crate::graph::Graph;

/// Isomorphism-invariant key: `[order, colours in canonical order..., rows...]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(pub(crate) Vec<u64>);

impl CanonicalForm {
    pub fn as_words(&self) -> &[u64] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }
}

/// Result of a canonical labelling run.
#[derive(Clone, Debug)]
pub struct Labelling {
    /// `lab[i]` is the vertex placed at canonical position `i`.
    pub lab: Vec<usize>,
    pub form: CanonicalForm,
    /// Generators of the automorphism group; `g[v]` is the image of `v`.
    pub generators: Vec<Vec<usize>>,
}

impl Labelling {
    /// Inverse of `lab`: canonical position of each vertex.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.lab.len()];
        for (i, &v) in self.lab.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// Orbit representative (smallest member) of every vertex.
    pub fn orbits(&self) -> Vec<usize> {
        orbits(self.lab.len(), &self.generators)
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    labelling(g, None).form
}

/// Canonical labelling of `g`, optionally respecting a vertex colouring.
///
/// Colours are compared as integers; isomorphisms must preserve them.
pub fn labelling(g: &Graph, colors: Option<&[u32]>) -> Labelling {
    canon_rows(g.order(), g.words(), g.adjacency_words(), colors)
}

pub(crate) fn orbits(n: usize, generators: &[Vec<usize>]) -> Vec<usize> {
    let mut uf = UnionFind::new(n);
    for gen in generators {
        for (v, &w) in gen.iter().enumerate() {
            uf.union(v, w);
        }
    }
    (0..n).map(|v| uf.find(v)).collect()
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.0[v] != v {
            self.0[v] = self.0[self.0[v]];
            v = self.0[v];
        }
        v
    }

    // keeps the smaller element as root so find() returns the orbit minimum
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra < rb {
            self.0[rb] = ra;
        } else if rb < ra {
            self.0[ra] = rb;
        }
    }
}

#[derive(Clone)]
struct Partition {
    lab: Vec<usize>,
    /// `end[s]` is the exclusive end of the cell starting at `s`.
    end: Vec<usize>,
    /// Start index of the cell containing each vertex.
    cell: Vec<usize>,
    cells: usize,
}

struct Leaf {
    lab: Vec<usize>,
    path: Vec<usize>,
    trace: Vec<u64>,
    cert: Vec<u64>,
}

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    (h ^ x)
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .rotate_left(29)
        .wrapping_add(0x632B_E59B_D9B4_E019)
}

struct Search<'a> {
    n: usize,
    words: usize,
    adj: &'a [u64],
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
    // scratch
    splitter: Vec<u64>,
    counts: Vec<u32>,
    queue: VecDeque<usize>,
    queued: Vec<bool>,
}

impl<'a> Search<'a> {
    fn row(&self, v: usize) -> &'a [u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    /// Refines `p` to the coarsest equitable partition finer than it, starting
    /// from the splitter cells already queued. Returns the trace hash.
    fn refine(&mut self, p: &mut Partition) -> u64 {
        let n = self.n;
        let mut h = 0x1234_5678_9ABC_DEF0u64;
        while let Some(ws) = self.queue.pop_front() {
            self.queued[ws] = false;
            if p.cells == n {
                continue;
            }
            self.splitter.iter_mut().for_each(|w| *w = 0);
            for &v in &p.lab[ws..p.end[ws]] {
                self.splitter[v / 64] |= 1 << (v % 64);
            }
            let mut start = 0;
            while start < n {
                let stop = p.end[start];
                if stop - start > 1 {
                    self.split_cell(p, start, stop, &mut h);
                }
                start = stop;
            }
        }
        mix(h, p.cells as u64)
    }

    fn split_cell(&mut self, p: &mut Partition, start: usize, stop: usize, h: &mut u64) {
        let mut lo = u32::MAX;
        let mut hi = 0;
        for i in start..stop {
            let row = self.row(p.lab[i]);
            let c: u32 = row
                .iter()
                .zip(&self.splitter)
                .map(|(a, b)| (a & b).count_ones())
                .sum();
            self.counts[p.lab[i]] = c;
            lo = lo.min(c);
            hi = hi.max(c);
        }
        if lo == hi {
            return;
        }
        let counts = &self.counts;
        p.lab[start..stop].sort_unstable_by_key(|&v| (counts[v], v));
        let was_queued = self.queued[start];
        let mut frag = start;
        let mut largest = (0, start);
        let mut starts = Vec::new();
        while frag < stop {
            let c = counts[p.lab[frag]];
            let mut e = frag + 1;
            while e < stop && counts[p.lab[e]] == c {
                e += 1;
            }
            p.end[frag] = e;
            for i in frag..e {
                p.cell[p.lab[i]] = frag;
            }
            *h = mix(*h, ((frag as u64) << 40) | ((c as u64) << 20) | (e - frag) as u64);
            if e - frag > largest.0 {
                largest = (e - frag, frag);
            }
            starts.push(frag);
            frag = e;
        }
        p.cells += starts.len() - 1;
        for s in starts {
            if was_queued {
                if s != start {
                    self.queued[s] = true;
                    self.queue.push_back(s);
                }
            } else if s != largest.1 {
                self.queued[s] = true;
                self.queue.push_back(s);
            }
        }
    }

    fn certificate(&self, lab: &[usize]) -> Vec<u64> {
        let n = self.n;
        let mut pos = vec![0; n];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        let mut cert = vec![0u64; n * self.words];
        for (i, &v) in lab.iter().enumerate() {
            let out = &mut cert[i * self.words..(i + 1) * self.words];
            for (wi, &word) in self.row(v).iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let u = wi * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let j = pos[u];
                    // most significant bit first so u64 order matches bit-string order
                    out[j / 64] |= 1u64 << (63 - j % 64);
                }
            }
        }
        cert
    }

    /// Depth-first search from node `p` reached via `path`. Returns the level to
    /// backjump to when an automorphism made the rest of this subtree redundant.
    fn search(
        &mut self,
        p: &Partition,
        path: &mut Vec<usize>,
        trace: &mut Vec<u64>,
        eq_first: bool,
    ) -> Option<usize> {
        let n = self.n;
        let level = path.len();
        if p.cells == n {
            return self.leaf(p, path, trace, eq_first);
        }
        // first smallest non-singleton cell
        let mut target = (usize::MAX, 0);
        let mut s = 0;
        while s < n {
            let size = p.end[s] - s;
            if size > 1 && size < target.0 {
                target = (size, s);
            }
            s = p.end[s];
        }
        let (cs, ce) = (target.1, p.end[target.1]);
        let candidates: Vec<usize> = {
            let mut c = p.lab[cs..ce].to_vec();
            c.sort_unstable();
            c
        };
        let mut done: Vec<usize> = Vec::new();
        let mut seen_gens = usize::MAX;
        let mut reps: Vec<usize> = Vec::new();
        for &w in &candidates {
            if self.generators.len() != seen_gens {
                seen_gens = self.generators.len();
                reps = self.stabilizer_orbits(path);
            }
            if done.iter().any(|&d| reps[d] == reps[w]) {
                continue;
            }
            done.push(w);

            let mut child = p.clone();
            let i = child.lab[cs..ce].iter().position(|&x| x == w).unwrap() + cs;
            child.lab.swap(cs, i);
            child.end[cs] = cs + 1;
            child.end[cs + 1] = ce;
            for &x in &child.lab[cs + 1..ce] {
                child.cell[x] = cs + 1;
            }
            child.cell[w] = cs;
            child.cells += 1;
            self.queued[cs] = true;
            self.queue.push_back(cs);
            let h = mix(self.refine(&mut child), cs as u64);

            // while the first leaf is still being sought we are on the first path
            let child_eq_first = eq_first
                && self.first.as_ref().is_none_or(|f| f.trace.get(level) == Some(&h));
            trace.push(h);
            if !child_eq_first && self.versus_best(trace) == Ordering::Greater {
                trace.pop();
                continue;
            }
            path.push(w);
            let jump = self.search(&child, path, trace, child_eq_first);
            path.pop();
            trace.pop();
            if let Some(j) = jump {
                if j < level {
                    return Some(j);
                }
            }
        }
        None
    }

    fn leaf(
        &mut self,
        p: &Partition,
        path: &[usize],
        trace: &[u64],
        eq_first: bool,
    ) -> Option<usize> {
        let cert = self.certificate(&p.lab);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                lab: p.lab.clone(),
                path: path.to_vec(),
                trace: trace.to_vec(),
                cert,
            };
            self.best = Some(Leaf {
                lab: leaf.lab.clone(),
                path: leaf.path.clone(),
                trace: leaf.trace.clone(),
                cert: leaf.cert.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if eq_first && cert == first.cert {
            let gamma = self.automorphism(&first.lab, &p.lab);
            let j = common_prefix(&first.path, path);
            self.generators.push(gamma);
            return Some(j);
        }
        let best = self.best.as_ref().expect("best set with first");
        let order = trace.cmp(&best.trace[..]).then_with(|| cert.cmp(&best.cert));
        match order {
            Ordering::Equal => {
                let gamma = self.automorphism(&best.lab, &p.lab);
                let j = common_prefix(&best.path, path);
                self.generators.push(gamma);
                Some(j)
            }
            Ordering::Less => {
                self.best = Some(Leaf {
                    lab: p.lab.clone(),
                    path: path.to_vec(),
                    trace: trace.to_vec(),
                    cert,
                });
                None
            }
            Ordering::Greater => None,
        }
    }

    /// Compares a node's trace with the same-length prefix of the best leaf's.
    fn versus_best(&self, trace: &[u64]) -> Ordering {
        match &self.best {
            None => Ordering::Equal,
            Some(b) => {
                let k = trace.len().min(b.trace.len());
                trace[..k].cmp(&b.trace[..k])
            }
        }
    }

    fn automorphism(&self, from: &[usize], to: &[usize]) -> Vec<usize> {
        let mut gamma = vec![0; self.n];
        for (&a, &b) in from.iter().zip(to) {
            gamma[a] = b;
        }
        gamma
    }

    fn stabilizer_orbits(&self, path: &[usize]) -> Vec<usize> {
        let fixing: Vec<Vec<usize>> = self
            .generators
            .iter()
            .filter(|g| path.iter().all(|&v| g[v] == v))
            .cloned()
            .collect();
        orbits(self.n, &fixing)
    }
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Canonical labelling of the graph given by `n` bitset rows of `words` words.
pub(crate) fn canon_rows(
    n: usize,
    words: usize,
    adj: &[u64],
    colors: Option<&[u32]>,
) -> Labelling {
    let mut lab: Vec<usize> = (0..n).collect();
    if let Some(c) = colors {
        lab.sort_by_key(|&v| (c[v], v));
    }
    let mut p = Partition {
        lab,
        end: vec![0; n],
        cell: vec![0; n],
        cells: 0,
    };
    let mut search = Search {
        n,
        words,
        adj,
        first: None,
        best: None,
        generators: Vec::new(),
        splitter: vec![0; words],
        counts: vec![0; n],
        queue: VecDeque::new(),
        queued: vec![false; n],
    };
    let mut s = 0;
    while s < n {
        let mut e = s + 1;
        if let Some(c) = colors {
            while e < n && c[p.lab[e]] == c[p.lab[s]] {
                e += 1;
            }
        } else {
            e = n;
        }
        p.end[s] = e;
        for i in s..e {
            p.cell[p.lab[i]] = s;
        }
        p.cells += 1;
        search.queued[s] = true;
        search.queue.push_back(s);
        s = e;
    }
    search.refine(&mut p);
    let mut path = Vec::new();
    let mut trace = Vec::new();
    search.search(&p, &mut path, &mut trace, true);

    let best = search.best.expect("search visits at least one leaf");
    let mut form = Vec::with_capacity(1 + n + best.cert.len());
    form.push(n as u64);
    if let Some(c) = colors {
        form.extend(best.lab.iter().map(|&v| u64::from(c[v])));
    }
    form.extend(best.cert);
    Labelling {
        lab: best.lab,
        form: CanonicalForm(form),
        generators: search.generators,
    }
}
