//! Vertex colorings: verification, greedy colorings, an exact DSATUR
//! branch-and-bound solver, and the coloring calculus for vertex partitions,
//! edge covers and homomorphisms.

use log::debug;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{order_type_graph, verify_homomorphism, FiniteGraph, Relation, VertexMap};
use crate::seq::{LexFrame, OrderTypePattern};

/// Default decision-node budget for the exact solver.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// A total assignment of colors `0..palette` to vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub palette: usize,
    pub colors: Vec<usize>,
}

impl Coloring {
    /// Builds a coloring whose palette is one more than the largest color used.
    pub fn from_colors(colors: Vec<usize>) -> Self {
        let palette = colors.iter().max().map_or(0, |&c| c + 1);
        Coloring { palette, colors }
    }

    /// Number of distinct colors actually used.
    pub fn used_colors(&self) -> usize {
        let mut seen: Vec<_> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

/// True iff `c` is total on `g`, within its palette and proper.
pub fn verify_coloring(g: &FiniteGraph, c: &Coloring) -> bool {
    first_conflict(g, c).is_none()
        && c.colors.len() == g.vertex_count()
        && c.colors.iter().all(|&x| x < c.palette)
}

fn first_conflict(g: &FiniteGraph, c: &Coloring) -> Option<(usize, usize)> {
    if c.colors.len() != g.vertex_count() {
        return None;
    }
    g.edges()
        .into_iter()
        .find(|&(u, v)| c.colors[u] == c.colors[v])
}

/// First-fit coloring along `order`.
pub fn greedy_coloring(g: &FiniteGraph, order: &[usize]) -> Result<Coloring> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    if order.len() != n
        || order
            .iter()
            .any(|&v| v >= n || std::mem::replace(&mut seen[v], true))
    {
        return Err(Error::InvalidInput(
            "order must be a permutation of the vertices".into(),
        ));
    }
    let mut colors: Vec<Option<usize>> = vec![None; n];
    for &v in order {
        let mut taken = vec![false; g.degree(v) + 1];
        for &w in g.neighbors(v) {
            if let Some(c) = colors[w] {
                if c < taken.len() {
                    taken[c] = true;
                }
            }
        }
        colors[v] = taken.iter().position(|t| !t);
    }
    Ok(Coloring::from_colors(
        colors
            .into_iter()
            .map(|c| c.expect("every vertex colored"))
            .collect(),
    ))
}

/// Result of [`chromatic_number`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChiOutcome {
    Exact {
        chi: usize,
        witness: Coloring,
        nodes: u64,
    },
    Inconclusive {
        lower: usize,
        upper: usize,
        best: Coloring,
        nodes: u64,
    },
}

impl ChiOutcome {
    pub fn exact(&self) -> Option<usize> {
        match self {
            ChiOutcome::Exact { chi, .. } => Some(*chi),
            ChiOutcome::Inconclusive { .. } => None,
        }
    }

    pub fn nodes(&self) -> u64 {
        match self {
            ChiOutcome::Exact { nodes, .. } | ChiOutcome::Inconclusive { nodes, .. } => *nodes,
        }
    }
}

/// DSATUR state for deciding `palette`-colorability.
struct Dsatur<'a> {
    g: &'a FiniteGraph,
    palette: usize,
    colors: Vec<Option<usize>>,
    // forbidden[v * palette + c]: number of colored neighbors of v with color c
    forbidden: Vec<u32>,
    saturation: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl<'a> Dsatur<'a> {
    fn new(g: &'a FiniteGraph, palette: usize, budget: u64) -> Self {
        let n = g.vertex_count();
        Dsatur {
            g,
            palette,
            colors: vec![None; n],
            forbidden: vec![0; n * palette],
            saturation: vec![0; n],
            nodes: 0,
            budget,
        }
    }

    /// Max saturation, ties by degree, then by smallest index.
    fn select(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for v in 0..self.colors.len() {
            if self.colors[v].is_some() {
                continue;
            }
            best = match best {
                None => Some(v),
                Some(b) => {
                    let key = |x: usize| (self.saturation[x], self.g.degree(x));
                    if key(v) > key(b) {
                        Some(v)
                    } else {
                        Some(b)
                    }
                }
            };
        }
        best
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = Some(c);
        for &w in self.g.neighbors(v) {
            let slot = &mut self.forbidden[w * self.palette + c];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colors[v] = None;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.forbidden[w * self.palette + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    /// `Some(true)` when a coloring was completed, `None` on budget exhaustion.
    fn search(&mut self, used: usize) -> Option<bool> {
        let Some(v) = self.select() else {
            return Some(true);
        };
        // Colors beyond the first unused one are symmetric to it.
        let limit = (used + 1).min(self.palette);
        for c in 0..limit {
            if self.forbidden[v * self.palette + c] > 0 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            self.assign(v, c);
            if self.search(used.max(c + 1))? {
                return Some(true);
            }
            self.unassign(v, c);
        }
        Some(false)
    }

    /// Greedy pass in DSATUR order without backtracking.
    fn greedy(mut self) -> Coloring {
        while let Some(v) = self.select() {
            let c = (0..self.palette)
                .find(|&c| self.forbidden[v * self.palette + c] == 0)
                .expect("palette exceeds max degree");
            self.assign(v, c);
        }
        Coloring::from_colors(
            self.colors
                .into_iter()
                .map(|c| c.expect("colored"))
                .collect(),
        )
    }
}

/// Greedy clique: grow from each start vertex by repeatedly adding the
/// highest-degree common neighbor. Returns the largest clique size found.
fn greedy_clique_bound(g: &FiniteGraph) -> usize {
    let mut best = 0;
    for start in 0..g.vertex_count() {
        let mut clique = vec![start];
        let mut candidates: Vec<usize> = g.neighbors(start).to_vec();
        while !candidates.is_empty() {
            let &next = candidates
                .iter()
                .max_by_key(|&&v| (g.degree(v), std::cmp::Reverse(v)))
                .expect("non-empty");
            clique.push(next);
            candidates.retain(|&v| v != next && g.has_edge(v, next));
        }
        best = best.max(clique.len());
    }
    best
}

/// Exact chromatic number by branch-and-bound.
///
/// The upper bound comes from a greedy DSATUR pass, the lower bound from a
/// greedy clique. Palettes between the bounds are then decided in increasing
/// order by DSATUR backtracking, so the first coloring found is optimal and
/// the witness is a deterministic function of the graph. `budget` caps the
/// total number of decision nodes across all palettes.
pub fn chromatic_number(g: &FiniteGraph, budget: u64) -> Result<ChiOutcome> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut best = Dsatur::new(g, g.max_degree() + 1, u64::MAX).greedy();
    let lex = greedy_coloring(g, &(0..n).collect::<Vec<_>>())?;
    if lex.palette < best.palette {
        best = lex;
    }
    let upper = best.palette;
    let mut lower = greedy_clique_bound(g).max(1);
    debug!("chromatic bounds: lower={lower} upper={upper}");
    let mut nodes = 0u64;
    while lower < upper {
        let mut solver = Dsatur::new(g, lower, budget - nodes);
        let outcome = solver.search(0);
        nodes += solver.nodes.min(budget - nodes);
        match outcome {
            None => {
                debug!("budget exhausted while deciding palette {lower}");
                return Ok(ChiOutcome::Inconclusive {
                    lower,
                    upper,
                    best,
                    nodes,
                });
            }
            Some(true) => {
                let witness = Coloring::from_colors(
                    solver
                        .colors
                        .into_iter()
                        .map(|c| c.expect("colored"))
                        .collect(),
                );
                debug!("palette {lower} feasible after {nodes} nodes");
                return Ok(ChiOutcome::Exact {
                    chi: lower,
                    witness,
                    nodes,
                });
            }
            Some(false) => {
                lower += 1;
                debug!("lower bound raised to {lower} after {nodes} nodes");
            }
        }
    }
    Ok(ChiOutcome::Exact {
        chi: upper,
        witness: best,
        nodes,
    })
}

/// Colors `g` from proper colorings of the parts of a vertex partition by
/// giving each part its own block of colors. The palette is the sum of the
/// part palettes.
pub fn sum_coloring(g: &FiniteGraph, pieces: &[(Vec<usize>, Coloring)]) -> Result<Coloring> {
    let n = g.vertex_count();
    let mut owner = vec![None; n];
    for (p, (subset, coloring)) in pieces.iter().enumerate() {
        if coloring.colors.len() != subset.len() {
            return Err(Error::LengthMismatch {
                left: coloring.colors.len(),
                right: subset.len(),
            });
        }
        for (i, &v) in subset.iter().enumerate() {
            if v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    count: n,
                });
            }
            if owner[v].is_some() {
                return Err(Error::NotPartition(format!("vertex {v} appears twice")));
            }
            owner[v] = Some((p, i));
        }
    }
    if let Some(v) = owner.iter().position(Option::is_none) {
        return Err(Error::NotPartition(format!("vertex {v} is not covered")));
    }
    let mut offsets = Vec::with_capacity(pieces.len());
    let mut total = 0;
    for (_, coloring) in pieces {
        offsets.push(total);
        total += coloring.palette;
    }
    let colors: Vec<usize> = owner
        .iter()
        .map(|o| {
            let (p, i) = o.expect("covered");
            offsets[p] + pieces[p].1.colors[i]
        })
        .collect();
    for (u, v) in g.edges() {
        let (pu, _) = owner[u].expect("covered");
        let (pv, _) = owner[v].expect("covered");
        if pu == pv && colors[u] == colors[v] {
            return Err(Error::ImproperColoring(u, v));
        }
    }
    Ok(Coloring {
        palette: total,
        colors,
    })
}

/// Colors `g` from colorings proper for the members of an edge cover: each
/// vertex gets the tuple of its colors, flattened by mixed-radix encoding.
/// The palette is the product of the piece palettes.
pub fn product_coloring(
    g: &FiniteGraph,
    pieces: &[(Vec<(usize, usize)>, Coloring)],
) -> Result<Coloring> {
    let n = g.vertex_count();
    let mut covered = std::collections::HashSet::new();
    for (edges, coloring) in pieces {
        if coloring.colors.len() != n {
            return Err(Error::LengthMismatch {
                left: coloring.colors.len(),
                right: n,
            });
        }
        for &(u, v) in edges {
            if !g.has_edge(u, v) {
                return Err(Error::InvalidInput(format!(
                    "edge piece contains ({u}, {v}), which is not an edge"
                )));
            }
            if coloring.colors[u] == coloring.colors[v] {
                return Err(Error::ImproperColoring(u, v));
            }
            covered.insert((u.min(v), u.max(v)));
        }
    }
    if let Some((u, v)) = g.edges().into_iter().find(|e| !covered.contains(e)) {
        return Err(Error::IncompleteCover(u, v));
    }
    let radices: Vec<u64> = pieces
        .iter()
        .map(|(_, c)| c.palette.max(1) as u64)
        .collect();
    let frame = LexFrame::new(radices)?;
    let colors = (0..n)
        .map(|v| {
            let digits: Vec<u64> = pieces.iter().map(|(_, c)| c.colors[v] as u64).collect();
            frame.encode(&digits).map(|x| x as usize)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Coloring {
        palette: frame.size()? as usize,
        colors,
    })
}

/// `c . f`: a coloring of `h` pulled back along a homomorphism `f: h -> g`.
pub fn pullback_coloring(
    f: &VertexMap,
    h: &FiniteGraph,
    g: &FiniteGraph,
    c: &Coloring,
) -> Result<Coloring> {
    if !verify_homomorphism(f, h, g)? {
        let (u, v) = h
            .edges()
            .into_iter()
            .find(|&(u, v)| !g.has_edge(f.apply(u), f.apply(v)))
            .expect("a failing edge exists");
        return Err(Error::NotHomomorphism(u, v));
    }
    if c.colors.len() != g.vertex_count() {
        return Err(Error::LengthMismatch {
            left: c.colors.len(),
            right: g.vertex_count(),
        });
    }
    if let Some((u, v)) = first_conflict(g, c) {
        return Err(Error::ImproperColoring(u, v));
    }
    Ok(Coloring {
        palette: c.palette,
        colors: f.0.iter().map(|&v| c.colors[v]).collect(),
    })
}

/// Result of [`pattern_union_chromatic`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternUnionBound {
    /// Product of the per-pattern chromatic numbers.
    pub bound: usize,
    pub per_pattern: Vec<usize>,
    /// The graph whose edge set is the union of the pattern graphs.
    pub graph: FiniteGraph,
    /// Proper coloring of `graph` with palette `bound`.
    pub coloring: Coloring,
}

/// Bounds the chromatic number of the union of several order-type graphs on
/// the increasing `len`-tuples over `0..theta` by the product of their exact
/// chromatic numbers, and builds the matching product coloring.
pub fn pattern_union_chromatic(
    len: usize,
    theta: usize,
    patterns: &[OrderTypePattern],
    budget: u64,
) -> Result<PatternUnionBound> {
    if patterns.is_empty() {
        return Err(Error::InvalidInput(
            "at least one pattern is required".into(),
        ));
    }
    let mut graphs = Vec::with_capacity(patterns.len());
    for p in patterns {
        if p.length != len {
            return Err(Error::LengthMismatch {
                left: p.length,
                right: len,
            });
        }
        graphs.push(order_type_graph(p, theta)?);
    }
    let all_edges: Vec<_> = graphs.iter().flat_map(|g| g.edges()).collect();
    let union = graphs[0].with_edges(&all_edges)?;
    let mut per_pattern = Vec::with_capacity(graphs.len());
    let mut pieces = Vec::with_capacity(graphs.len());
    for g in &graphs {
        match chromatic_number(g, budget)? {
            ChiOutcome::Exact { chi, witness, .. } => {
                per_pattern.push(chi);
                pieces.push((g.edges(), witness));
            }
            ChiOutcome::Inconclusive { .. } => return Err(Error::BudgetExhausted { budget }),
        }
    }
    let coloring = product_coloring(&union, &pieces)?;
    debug_assert!(verify_coloring(&union, &coloring));
    Ok(PatternUnionBound {
        bound: per_pattern.iter().product(),
        per_pattern,
        graph: union,
        coloring,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{lshift_digraph, shift_graph};
    use crate::seq::{otp, IncreasingTuple};

    fn t(v: &[u64]) -> IncreasingTuple {
        IncreasingTuple::new(v.to_vec()).unwrap()
    }

    fn exact(g: &FiniteGraph) -> (usize, Coloring) {
        match chromatic_number(g, DEFAULT_BUDGET).unwrap() {
            ChiOutcome::Exact { chi, witness, .. } => (chi, witness),
            other => panic!("inconclusive: {other:?}"),
        }
    }

    #[test]
    fn verify_coloring_examples() {
        let k3 = FiniteGraph::complete(3);
        assert!(verify_coloring(&k3, &Coloring::from_colors(vec![0, 1, 2])));
        assert!(!verify_coloring(&k3, &Coloring::from_colors(vec![0, 0, 1])));
        let g = shift_graph(2, 4).unwrap();
        // Labels in order (0,1) (0,2) (0,3) (1,2) (1,3) (2,3).
        assert!(verify_coloring(
            &g,
            &Coloring::from_colors(vec![0, 1, 0, 1, 1, 0])
        ));
        assert!(!verify_coloring(
            &g,
            &Coloring::from_colors(vec![0, 1, 0, 1, 1, 1])
        ));
        assert!(!verify_coloring(
            &k3,
            &Coloring {
                palette: 2,
                colors: vec![0, 1, 2]
            }
        ));
        assert!(!verify_coloring(&k3, &Coloring::from_colors(vec![0, 1])));
    }

    #[test]
    fn greedy_examples() {
        let edgeless = FiniteGraph::unlabeled(5, &[]).unwrap();
        assert_eq!(
            greedy_coloring(&edgeless, &[4, 3, 2, 1, 0])
                .unwrap()
                .palette,
            1
        );
        let k4 = FiniteGraph::complete(4);
        assert_eq!(greedy_coloring(&k4, &[2, 0, 3, 1]).unwrap().palette, 4);
        let sh = shift_graph(2, 5).unwrap();
        assert_eq!(sh.max_degree(), 3);
        let c = greedy_coloring(&sh, &(0..10).collect::<Vec<_>>()).unwrap();
        assert!(verify_coloring(&sh, &c) && c.palette <= 4);
        assert!(greedy_coloring(&k4, &[0, 0, 1, 2]).is_err());
    }

    #[test]
    fn chromatic_number_examples() {
        for n in 1..7 {
            assert_eq!(exact(&FiniteGraph::complete(n)).0, n);
        }
        let (chi, w) = exact(&shift_graph(2, 4).unwrap());
        assert_eq!(chi, 2);
        assert!(verify_coloring(&shift_graph(2, 4).unwrap(), &w));
        let (chi, w) = exact(&shift_graph(2, 5).unwrap());
        assert_eq!((chi, w.palette), (3, 3));
        assert_eq!(
            chromatic_number(&FiniteGraph::unlabeled(0, &[]).unwrap(), 10),
            Err(Error::EmptyGraph)
        );
    }

    #[test]
    fn shift_graph_four_path() {
        // The four edges of Sh_2(4) form the path 13-01-12-23-02.
        let g = shift_graph(2, 4).unwrap();
        let path = [[1, 3], [0, 1], [1, 2], [2, 3], [0, 2]].map(|x| g.position(&t(&x)).unwrap());
        for w in path.windows(2) {
            assert!(g.has_edge(w[0], w[1]));
        }
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        let g = shift_graph(2, 9).unwrap();
        match chromatic_number(&g, 5).unwrap() {
            ChiOutcome::Inconclusive {
                lower, upper, best, ..
            } => {
                assert!(lower <= upper);
                assert!(verify_coloring(&g, &best));
            }
            other => panic!("expected inconclusive, got {other:?}"),
        }
    }

    #[test]
    fn sum_coloring_examples() {
        let k4 = FiniteGraph::complete(4);
        let two = Coloring::from_colors(vec![0, 1]);
        let c = sum_coloring(&k4, &[(vec![0, 1], two.clone()), (vec![2, 3], two.clone())]).unwrap();
        assert_eq!(c.palette, 4);
        assert!(verify_coloring(&k4, &c));

        let path = FiniteGraph::unlabeled(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let one = Coloring::from_colors(vec![0, 0]);
        let c = sum_coloring(
            &path,
            &[(vec![0, 2], one.clone()), (vec![1, 3], one.clone())],
        )
        .unwrap();
        assert_eq!(c.palette, 2);
        assert!(verify_coloring(&path, &c));

        let g = shift_graph(2, 6).unwrap();
        let (low, high): (Vec<usize>, Vec<usize>) =
            (0..g.vertex_count()).partition(|&v| g.label(v)[0] < 3);
        let c_low = exact(&g.induced(&low).unwrap());
        let c_high = exact(&g.induced(&high).unwrap());
        let c = sum_coloring(&g, &[(low, c_low.1), (high, c_high.1)]).unwrap();
        assert!(verify_coloring(&g, &c));
        assert!(c.palette <= c_low.0 + c_high.0);

        assert!(matches!(
            sum_coloring(&path, &[(vec![0, 1], two.clone())]),
            Err(Error::NotPartition(_))
        ));
        assert!(matches!(
            sum_coloring(
                &path,
                &[
                    (vec![0, 1], two.clone()),
                    (vec![1, 2, 3], Coloring::from_colors(vec![0, 1, 0]))
                ]
            ),
            Err(Error::NotPartition(_))
        ));
    }

    #[test]
    fn product_coloring_examples() {
        let c4 = FiniteGraph::cycle(4).unwrap();
        let given = Coloring::from_colors(vec![0, 1, 0, 1]);
        let c = product_coloring(
            &c4,
            &[
                (c4.edges(), given.clone()),
                (vec![], Coloring::from_colors(vec![0; 4])),
            ],
        )
        .unwrap();
        assert_eq!(c.colors, given.colors);
        assert!(verify_coloring(&c4, &c));

        let m1 = vec![(0, 1), (2, 3)];
        let m2 = vec![(1, 2), (0, 3)];
        let c1 = Coloring::from_colors(vec![0, 1, 0, 1]);
        let c2 = Coloring::from_colors(vec![0, 0, 1, 1]);
        let c = product_coloring(&c4, &[(m1.clone(), c1), (m2, c2)]).unwrap();
        assert_eq!(c.palette, 4);
        assert!(verify_coloring(&c4, &c));

        assert_eq!(
            product_coloring(&c4, &[(m1, Coloring::from_colors(vec![0, 1, 0, 1]))]),
            Err(Error::IncompleteCover(0, 3))
        );
    }

    #[test]
    fn pullback_examples() {
        let g = shift_graph(2, 5).unwrap();
        let (_, c) = exact(&g);
        let same = pullback_coloring(&VertexMap::identity(g.vertex_count()), &g, &g, &c).unwrap();
        assert_eq!(same, c);

        let l3 = lshift_digraph(3, 5).unwrap();
        let l2 = lshift_digraph(2, 5).unwrap();
        let proj = VertexMap(
            l3.labels()
                .iter()
                .map(|x| l2.position(&t(&x.values()[..2])).unwrap())
                .collect(),
        );
        let h = l3.symmetrize();
        let pulled = pullback_coloring(&proj, &h, &l2.symmetrize(), &c).unwrap();
        assert_eq!(pulled.palette, 3);
        assert!(verify_coloring(&h, &pulled));

        let isolated = FiniteGraph::unlabeled(3, &[]).unwrap();
        let target = FiniteGraph::unlabeled(1, &[]).unwrap();
        let one = pullback_coloring(
            &VertexMap::constant(3, 0),
            &isolated,
            &target,
            &Coloring::from_colors(vec![0]),
        )
        .unwrap();
        assert_eq!(one.used_colors(), 1);

        assert!(matches!(
            pullback_coloring(&VertexMap::constant(10, 0), &g, &g, &c),
            Err(Error::NotHomomorphism(..))
        ));
    }

    #[test]
    fn pattern_union_examples() {
        let sh = otp(&t(&[0, 1]), &t(&[1, 2])).unwrap();
        let r = pattern_union_chromatic(2, 5, std::slice::from_ref(&sh), DEFAULT_BUDGET).unwrap();
        assert_eq!(r.bound, 3);
        assert_eq!(r.graph, shift_graph(2, 5).unwrap());
        assert!(verify_coloring(&r.graph, &r.coloring));

        let up = otp(&t(&[0]), &t(&[1])).unwrap();
        let down = otp(&t(&[1]), &t(&[0])).unwrap();
        let r = pattern_union_chromatic(1, 4, &[up, down], DEFAULT_BUDGET).unwrap();
        assert_eq!(r.per_pattern, vec![4, 4]);
        assert_eq!(r.bound, 16);
        assert!(verify_coloring(&r.graph, &r.coloring));

        let wrong = otp(&t(&[0]), &t(&[1])).unwrap();
        assert!(pattern_union_chromatic(2, 5, &[sh, wrong], DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn coloring_json_shape() {
        let c = Coloring::from_colors(vec![0, 2, 1]);
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"palette":3,"colors":[0,2,1]}"#
        );
    }
}
