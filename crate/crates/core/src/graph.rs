//! Finite graphs and digraphs on increasing tuples: shift graphs, directed
//! left/right shift graphs, order-type graphs, homomorphism checks and a
//! backtracking subgraph search.
//!
//! Vertices are always enumerated in lexicographic order of their tuple
//! labels, so vertex indices are stable across runs and serializations.
//!
//! The shift-graph edge condition "for every `1 <= i <= r-1`, `s(i) = t(i-1)`,
//! or vice-versa" is read with the disjunction outside the quantifier: either
//! `t` is `s` shifted left by one place, or `s` is `t` shifted left. This is
//! the reading under which the symmetrization of `LSh_k` is `Sh_k`.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seq::{increasing_tuples, IncreasingTuple, OrderTypePattern};

/// A total map between vertex index sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexMap(pub Vec<usize>);

impl VertexMap {
    pub fn identity(n: usize) -> Self {
        VertexMap((0..n).collect())
    }

    pub fn constant(n: usize, target: usize) -> Self {
        VertexMap(vec![target; n])
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.0.iter().all(|v| seen.insert(*v))
    }
}

/// Anything with vertices and a (possibly asymmetric) adjacency relation.
pub trait Relation {
    fn vertex_count(&self) -> usize;
    fn related(&self, u: usize, v: usize) -> bool;
    /// Every related pair, each listed once (edges once with `u < v`).
    fn pairs(&self) -> Vec<(usize, usize)>;
}

/// An undirected simple graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGraph {
    labels: Vec<IncreasingTuple>,
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<IncreasingTuple>,
    edges: Vec<[usize; 2]>,
}

impl FiniteGraph {
    /// Builds a graph, rejecting self-loops and out-of-range endpoints.
    /// Duplicate edges (in either orientation) are merged.
    pub fn new(labels: Vec<IncreasingTuple>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        count: n,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(FiniteGraph { labels, adj })
    }

    /// A graph whose vertex `i` is labelled by the 1-tuple `(i)`.
    pub fn unlabeled(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let labels = (0..n as u64)
            .map(|i| IncreasingTuple::with_caps(vec![i], crate::seq::Caps::WIDE))
            .collect::<Result<Vec<_>>>()?;
        FiniteGraph::new(labels, edges)
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        FiniteGraph::unlabeled(n, &edges).expect("complete graph is well formed")
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidInput(format!(
                "cycle needs 3 vertices, got {n}"
            )));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        FiniteGraph::unlabeled(n, &edges)
    }

    pub fn labels(&self) -> &[IncreasingTuple] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &IncreasingTuple {
        &self.labels[v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    /// Index of the vertex carrying `label`, if any.
    pub fn position(&self, label: &IncreasingTuple) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The subgraph induced on `subset`, vertices renumbered in `subset` order.
    pub fn induced(&self, subset: &[usize]) -> Result<FiniteGraph> {
        let mut local = HashMap::new();
        for (i, &v) in subset.iter().enumerate() {
            if v >= self.vertex_count() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    count: self.vertex_count(),
                });
            }
            local.insert(v, i);
        }
        let mut edges = Vec::new();
        for (i, &v) in subset.iter().enumerate() {
            for w in &self.adj[v] {
                if let Some(&j) = local.get(w) {
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        let labels = subset.iter().map(|&v| self.labels[v].clone()).collect();
        FiniteGraph::new(labels, &edges)
    }

    /// The subgraph keeping every vertex but only `edges`.
    pub fn with_edges(&self, edges: &[(usize, usize)]) -> Result<FiniteGraph> {
        FiniteGraph::new(self.labels.clone(), edges)
    }

    /// Blows up vertex `v` into `copies[v] >= 1` independent copies. Returns
    /// the new graph together with the projection onto `self`, which is a
    /// surjective strong homomorphism (`e` is an edge iff its image is).
    pub fn duplicate_vertices(&self, copies: &[usize]) -> Result<(FiniteGraph, VertexMap)> {
        if copies.len() != self.vertex_count() {
            return Err(Error::LengthMismatch {
                left: copies.len(),
                right: self.vertex_count(),
            });
        }
        if copies.contains(&0) {
            return Err(Error::InvalidInput(
                "every vertex needs at least one copy".into(),
            ));
        }
        let projection: Vec<usize> = copies
            .iter()
            .enumerate()
            .flat_map(|(v, &c)| std::iter::repeat_n(v, c))
            .collect();
        let mut edges = Vec::new();
        for x in 0..projection.len() {
            for y in x + 1..projection.len() {
                if self.has_edge(projection[x], projection[y]) {
                    edges.push((x, y));
                }
            }
        }
        let graph = FiniteGraph::unlabeled(projection.len(), &edges)?;
        Ok((graph, VertexMap(projection)))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(GraphJson {
            vertices: self.labels.clone(),
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        })
        .expect("graph serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: GraphJson = serde_json::from_value(value.clone())
            .map_err(|e| Error::InvalidInput(format!("graph json: {e}")))?;
        let edges: Vec<_> = raw.edges.iter().map(|e| (e[0], e[1])).collect();
        FiniteGraph::new(raw.vertices, &edges)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        for (i, label) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  {i} [label=\"{label}\"];");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

impl Relation for FiniteGraph {
    fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    fn related(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v)
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        self.edges()
    }
}

/// A directed graph without self-arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteDigraph {
    labels: Vec<IncreasingTuple>,
    out: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct DigraphJson {
    vertices: Vec<IncreasingTuple>,
    arcs: Vec<[usize; 2]>,
}

impl FiniteDigraph {
    pub fn new(labels: Vec<IncreasingTuple>, arcs: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut out = vec![Vec::new(); n];
        for &(u, v) in arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        count: n,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            out[u].push(v);
        }
        for list in &mut out {
            list.sort_unstable();
            list.dedup();
        }
        Ok(FiniteDigraph { labels, out })
    }

    pub fn labels(&self) -> &[IncreasingTuple] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &IncreasingTuple {
        &self.labels[v]
    }

    pub fn position(&self, label: &IncreasingTuple) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.out.len() && self.out[u].binary_search(&v).is_ok()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// Arcs sorted by tail, then head.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u, v)))
            .collect()
    }

    /// The underlying undirected graph.
    pub fn symmetrize(&self) -> FiniteGraph {
        FiniteGraph::new(self.labels.clone(), &self.arcs()).expect("digraph has no self-arcs")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(DigraphJson {
            vertices: self.labels.clone(),
            arcs: self.arcs().into_iter().map(|(u, v)| [u, v]).collect(),
        })
        .expect("digraph serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: DigraphJson = serde_json::from_value(value.clone())
            .map_err(|e| Error::InvalidInput(format!("digraph json: {e}")))?;
        let arcs: Vec<_> = raw.arcs.iter().map(|e| (e[0], e[1])).collect();
        FiniteDigraph::new(raw.vertices, &arcs)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph {\n");
        for (i, label) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  {i} [label=\"{label}\"];");
        }
        for (u, v) in self.arcs() {
            let _ = writeln!(out, "  {u} -> {v};");
        }
        out.push_str("}\n");
        out
    }
}

impl Relation for FiniteDigraph {
    fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    fn related(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v)
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        self.arcs()
    }
}

fn index_tuples(n: u64, len: usize) -> (Vec<IncreasingTuple>, HashMap<IncreasingTuple, usize>) {
    let labels: Vec<_> = increasing_tuples(n, len).collect();
    let index = labels
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i))
        .collect();
    (labels, index)
}

/// Left-shift arcs on increasing `k`-tuples over `0..n`: one arc per
/// increasing `(k+1)`-tuple `x`, from `x[..k]` to `x[1..]`.
fn left_shift_arcs(k: usize, n: usize) -> (Vec<IncreasingTuple>, Vec<(usize, usize)>) {
    let (labels, index) = index_tuples(n as u64, k);
    let arcs = increasing_tuples(n as u64, k + 1)
        .map(|x| {
            let v = x.values();
            let tail = index[&IncreasingTuple::new(v[..k].to_vec()).expect("prefix increasing")];
            let head = index[&IncreasingTuple::new(v[1..].to_vec()).expect("suffix increasing")];
            (tail, head)
        })
        .collect();
    (labels, arcs)
}

/// `Sh_r(n)`: increasing `r`-tuples over `0..n`, `s ~ t` when one is the
/// other shifted by one place. For `r = 1` this is the complete graph `K_n`.
pub fn shift_graph(r: usize, n: usize) -> Result<FiniteGraph> {
    if r == 0 {
        return Err(Error::InvalidInput(
            "shift graph arity must be at least 1".into(),
        ));
    }
    if n < r {
        return Err(Error::NoVertices { n, min: r });
    }
    let (labels, arcs) = left_shift_arcs(r, n);
    FiniteGraph::new(labels, &arcs)
}

/// `LSh_k(n)`: arcs `(eta, rho)` with `eta(i) = rho(i-1)` for `0 < i < k`
/// (when `k > 1`), or `eta(0) < rho(0)` (when `k = 1`).
pub fn lshift_digraph(k: usize, n: usize) -> Result<FiniteDigraph> {
    if k == 0 {
        return Err(Error::InvalidInput(
            "shift digraph arity must be at least 1".into(),
        ));
    }
    if n < k {
        return Err(Error::NoVertices { n, min: k });
    }
    let (labels, arcs) = left_shift_arcs(k, n);
    FiniteDigraph::new(labels, &arcs)
}

/// `RSh_k(n)`: arcs `(eta, rho)` with `rho(i) = eta(i-1)` for `0 < i < k`
/// (when `k > 1`), or `rho(0) < eta(0)` (when `k = 1`). The reversal
/// `x -> (n-1-x_{k-1}, ..., n-1-x_0)` is an isomorphism onto `LSh_k(n)`.
pub fn rshift_digraph(k: usize, n: usize) -> Result<FiniteDigraph> {
    if k == 0 {
        return Err(Error::InvalidInput(
            "shift digraph arity must be at least 1".into(),
        ));
    }
    if n < k {
        return Err(Error::NoVertices { n, min: k });
    }
    let (labels, arcs) = left_shift_arcs(k, n);
    let reversed: Vec<_> = arcs.into_iter().map(|(u, v)| (v, u)).collect();
    FiniteDigraph::new(labels, &reversed)
}

/// The tuple reversal `x -> (n-1-x_{k-1}, ..., n-1-x_0)` on increasing tuples
/// over `0..n`.
pub fn reverse_tuple(x: &[u64], n: u64) -> Vec<u64> {
    x.iter().rev().map(|&v| n - 1 - v).collect()
}

/// `E_{a,b}` restricted to increasing `p.length`-tuples over `0..theta`:
/// `c ~ d` iff `otp(c,d) = p` or `otp(d,c) = p`.
///
/// Edges are generated directly from the pattern: every increasing choice of
/// `p.merged_size()` values realizes exactly one pair with order type `p`.
pub fn order_type_graph(p: &OrderTypePattern, theta: usize) -> Result<FiniteGraph> {
    p.validate()?;
    if !p.is_irreflexive() {
        return Err(Error::PatternNotIrreflexive);
    }
    if theta < p.length {
        return Err(Error::NoVertices {
            n: theta,
            min: p.length - 1,
        });
    }
    let (labels, index) = index_tuples(theta as u64, p.length);
    let m = p.merged_size();
    let edges: Vec<_> = increasing_tuples(theta as u64, m)
        .map(|values| {
            let (c, d) = p.realize(values.values());
            let c = IncreasingTuple::new(c).expect("realized tuple increasing");
            let d = IncreasingTuple::new(d).expect("realized tuple increasing");
            (index[&c], index[&d])
        })
        .collect();
    FiniteGraph::new(labels, &edges)
}

/// True iff every related pair of `src` is mapped onto a related pair of `dst`.
pub fn verify_homomorphism<R: Relation>(f: &VertexMap, src: &R, dst: &R) -> Result<bool> {
    if f.len() != src.vertex_count() {
        return Err(Error::LengthMismatch {
            left: f.len(),
            right: src.vertex_count(),
        });
    }
    if let Some(&vertex) = f.0.iter().find(|&&v| v >= dst.vertex_count()) {
        return Err(Error::VertexOutOfRange {
            vertex,
            count: dst.vertex_count(),
        });
    }
    Ok(src
        .pairs()
        .into_iter()
        .all(|(u, v)| dst.related(f.apply(u), f.apply(v))))
}

/// Outcome of a budgeted exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    /// The search space was exhausted: no solution exists.
    Absent,
    /// The node budget ran out before the search finished.
    Inconclusive {
        explored: u64,
    },
}

struct EmbeddingSearch<'a> {
    h: &'a FiniteGraph,
    g: &'a FiniteGraph,
    order: Vec<usize>,
    image: Vec<Option<usize>>,
    used: Vec<bool>,
    explored: u64,
    budget: u64,
}

impl EmbeddingSearch<'_> {
    fn run(&mut self, depth: usize) -> Option<bool> {
        if depth == self.order.len() {
            return Some(true);
        }
        let u = self.order[depth];
        let anchor = self.h.neighbors(u).iter().find_map(|&w| self.image[w]);
        let candidates: Vec<usize> = match anchor {
            Some(x) => self.g.neighbors(x).to_vec(),
            None => (0..self.g.vertex_count()).collect(),
        };
        for x in candidates {
            if self.used[x] || self.g.degree(x) < self.h.degree(u) {
                continue;
            }
            let fits = self
                .h
                .neighbors(u)
                .iter()
                .all(|&w| self.image[w].is_none_or(|y| self.g.has_edge(x, y)));
            if !fits {
                continue;
            }
            self.explored += 1;
            if self.explored > self.budget {
                return None;
            }
            self.image[u] = Some(x);
            self.used[x] = true;
            if self.run(depth + 1)? {
                return Some(true);
            }
            self.image[u] = None;
            self.used[x] = false;
        }
        Some(false)
    }
}

/// Searches for an injective map sending every edge of `h` to an edge of `g`.
///
/// Plain backtracking: `h` vertices are placed in connectivity order (most
/// already-placed neighbors first, then higher degree), candidates are drawn
/// from the neighborhood of an already-placed neighbor and pruned by degree.
/// `budget` bounds the number of tentative assignments.
pub fn find_subgraph_embedding(
    h: &FiniteGraph,
    g: &FiniteGraph,
    budget: u64,
) -> SearchOutcome<VertexMap> {
    let nh = h.vertex_count();
    if nh > g.vertex_count() {
        return SearchOutcome::Absent;
    }
    let mut order = Vec::with_capacity(nh);
    let mut placed = vec![false; nh];
    let mut links = vec![0usize; nh];
    for _ in 0..nh {
        let next = (0..nh)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], h.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
        for &w in h.neighbors(next) {
            links[w] += 1;
        }
    }
    let mut search = EmbeddingSearch {
        h,
        g,
        order,
        image: vec![None; nh],
        used: vec![false; g.vertex_count()],
        explored: 0,
        budget,
    };
    match search.run(0) {
        Some(true) => SearchOutcome::Found(VertexMap(
            search
                .image
                .into_iter()
                .map(|x| x.expect("complete"))
                .collect(),
        )),
        Some(false) => SearchOutcome::Absent,
        None => SearchOutcome::Inconclusive {
            explored: search.explored,
        },
    }
}

pub fn is_connected(g: &FiniteGraph) -> Result<bool> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut reached = 1;
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    Ok(reached == n)
}
