//! Decomposition of a pair of increasing tuples `(a, b)` into orderly pieces.
//!
//! The index set `0..n` is split by comparing `a_i` with `b_i`, then grouped
//! into the classes of the least convex equivalence relation `R` containing
//! every pair `(i, j)` with
//!
//! * `a_i = b_j`,
//! * `a_i < a_j <= b_i`, or
//! * `b_i < b_j <= a_i`.
//!
//! A convex equivalence relation on `0..n` is exactly a partition into
//! intervals, so `R` is computed by merging the index intervals spanned by the
//! generating pairs until no two intervals overlap.
//!
//! For every class on which `a < b` pointwise ("plus" classes) a chain of
//! indices `delta_0 < delta_1 < ...` cuts the convex hull of the class's values
//! into blocks `C_0, ..., C_{n_A}` such that `a_i` lies in `C_m` exactly when
//! `b_i` lies in `C_{m+1}`. Classes with `b < a` ("minus" classes) are handled
//! by swapping the two tuples. The per-class data assemble into a
//! [`CoverWitness`]: an increasing convex partition of the indices into
//! pieces that are each orderly in one direction or a single equal entry.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seq::IncreasingTuple;

/// Default cap on the merged image size for exhaustive block search.
pub const EXHAUSTIVE_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Zero,
    Plus,
    Minus,
}

/// `J_0`, `J_+`, `J_-`: indices where `a_i = b_i`, `a_i < b_i`, `b_i < a_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignPartition {
    pub zero: Vec<usize>,
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
}

fn check_lengths(a: &IncreasingTuple, b: &IncreasingTuple) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.len())
}

fn sign_at(a: &IncreasingTuple, b: &IncreasingTuple, i: usize) -> Sign {
    match a[i].cmp(&b[i]) {
        std::cmp::Ordering::Equal => Sign::Zero,
        std::cmp::Ordering::Less => Sign::Plus,
        std::cmp::Ordering::Greater => Sign::Minus,
    }
}

pub fn sign_partition(a: &IncreasingTuple, b: &IncreasingTuple) -> Result<SignPartition> {
    let n = check_lengths(a, b)?;
    let mut part = SignPartition {
        zero: Vec::new(),
        plus: Vec::new(),
        minus: Vec::new(),
    };
    for i in 0..n {
        match sign_at(a, b, i) {
            Sign::Zero => part.zero.push(i),
            Sign::Plus => part.plus.push(i),
            Sign::Minus => part.minus.push(i),
        }
    }
    Ok(part)
}

/// One class of `R`: the index interval `lo..=hi` and its common sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "(usize, usize, Sign)", from = "(usize, usize, Sign)")]
pub struct ConvexClass {
    pub lo: usize,
    pub hi: usize,
    pub sign: Sign,
}

impl ConvexClass {
    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, i: usize) -> bool {
        self.lo <= i && i <= self.hi
    }
}

impl From<ConvexClass> for (usize, usize, Sign) {
    fn from(c: ConvexClass) -> Self {
        (c.lo, c.hi, c.sign)
    }
}

impl From<(usize, usize, Sign)> for ConvexClass {
    fn from((lo, hi, sign): (usize, usize, Sign)) -> Self {
        ConvexClass { lo, hi, sign }
    }
}

/// Pairwise-disjoint closed intervals kept sorted; inserting an interval
/// absorbs every stored interval sharing an index with it.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IntervalMerger {
    intervals: Vec<(usize, usize)>,
}

impl IntervalMerger {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, lo: usize, hi: usize) {
        let (mut lo, mut hi) = (lo.min(hi), lo.max(hi));
        let start = self.intervals.partition_point(|&(_, h)| h < lo);
        let mut end = start;
        while end < self.intervals.len() && self.intervals[end].0 <= hi {
            lo = lo.min(self.intervals[end].0);
            hi = hi.max(self.intervals[end].1);
            end += 1;
        }
        self.intervals.splice(start..end, [(lo, hi)]);
    }

    pub fn intervals(&self) -> &[(usize, usize)] {
        &self.intervals
    }
}

/// Every ordered pair `(i, j)` matching one of the three generating conditions.
pub fn generator_pairs(a: &IncreasingTuple, b: &IncreasingTuple) -> Result<Vec<(usize, usize)>> {
    let n = check_lengths(a, b)?;
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let (ai, bi, aj, bj) = (a[i], b[i], a[j], b[j]);
            if ai == bj || (ai < aj && aj <= bi) || (bi < bj && bj <= ai) {
                pairs.push((i, j));
            }
        }
    }
    Ok(pairs)
}

/// Classes (as index intervals) of the least convex equivalence relation on
/// `0..n` containing `pairs`, in increasing order.
pub fn convex_closure(n: usize, pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut merger = IntervalMerger::new();
    for i in 0..n {
        merger.insert(i, i);
    }
    for &(i, j) in pairs {
        merger.insert(i, j);
    }
    merger.intervals
}

/// The classes of `R`, in increasing order. Each class is tagged with the
/// sign of its first index; sign purity is a theorem, checked by the tests
/// rather than assumed here.
pub fn r_closure(a: &IncreasingTuple, b: &IncreasingTuple) -> Result<Vec<ConvexClass>> {
    let n = check_lengths(a, b)?;
    if a == b {
        return Err(Error::EqualPair);
    }
    let pairs = generator_pairs(a, b)?;
    Ok(convex_closure(n, &pairs)
        .into_iter()
        .map(|(lo, hi)| ConvexClass {
            lo,
            hi,
            sign: sign_at(a, b, lo),
        })
        .collect())
}

/// A convex set of naturals: `[lo, hi)`, or `[lo, hi]` when `closed`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueBlock {
    pub lo: u64,
    pub hi: u64,
    pub closed: bool,
}

impl ValueBlock {
    pub fn half_open(lo: u64, hi: u64) -> Self {
        ValueBlock {
            lo,
            hi,
            closed: false,
        }
    }

    pub fn closed(lo: u64, hi: u64) -> Self {
        ValueBlock {
            lo,
            hi,
            closed: true,
        }
    }

    pub fn contains(&self, x: u64) -> bool {
        self.lo <= x && (x < self.hi || (self.closed && x == self.hi))
    }

    /// Exclusive upper end over the naturals.
    pub fn end(&self) -> u64 {
        self.hi + u64::from(self.closed)
    }

    pub fn is_empty(&self) -> bool {
        self.end() <= self.lo
    }
}

/// Index of the block containing `x`, if any.
fn block_of(blocks: &[ValueBlock], x: u64) -> Option<usize> {
    blocks.iter().position(|c| c.contains(x))
}

/// Checks that `blocks` witness `(x, y)` being `blocks.len() - 1`-orderly:
/// the blocks are consecutive convex sets exactly covering the integer hull
/// of both images, and for every index `i` and every `m < k`, `x_i` lies in
/// block `m` iff `y_i` lies in block `m + 1`. Empty blocks are permitted.
pub fn blocks_witness_orderly(x: &[u64], y: &[u64], blocks: &[ValueBlock]) -> bool {
    if x.len() != y.len() || x.is_empty() || blocks.len() < 2 {
        return false;
    }
    let k = blocks.len() - 1;
    let lo = x[0].min(y[0]);
    let hi = x[x.len() - 1].max(y[y.len() - 1]);
    if blocks[0].lo != lo || blocks[k].end() != hi + 1 {
        return false;
    }
    if blocks.windows(2).any(|w| w[0].end() != w[1].lo) || blocks.iter().any(|c| c.end() < c.lo) {
        return false;
    }
    x.iter().zip(y).all(|(&xi, &yi)| {
        let (Some(bx), Some(by)) = (block_of(blocks, xi), block_of(blocks, yi)) else {
            return false;
        };
        (0..k).all(|m| (bx == m) == (by == m + 1))
    })
}

/// The per-class chains and blocks. All indices are absolute positions in
/// the original tuples. When `swapped` is set the class is a minus class and
/// every quantity refers to the pair `(b, a)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassAnalysis {
    pub class: ConvexClass,
    pub swapped: bool,
    pub deltas: Vec<usize>,
    pub n_a: usize,
    pub blocks: Vec<ValueBlock>,
    /// `gamma_m` in `(delta_m, delta_{m+1}]` for `m + 1 < n_a`.
    pub gammas: Vec<usize>,
    pub zetas: Vec<usize>,
}

impl ClassAnalysis {
    /// The tuples in the orientation the analysis uses.
    pub fn oriented<'t>(
        &self,
        a: &'t IncreasingTuple,
        b: &'t IncreasingTuple,
    ) -> (&'t IncreasingTuple, &'t IncreasingTuple) {
        if self.swapped {
            (b, a)
        } else {
            (a, b)
        }
    }
}

/// Builds the delta chain, blocks and zeta sequence of one plus or minus class.
pub fn analyze_class(
    a: &IncreasingTuple,
    b: &IncreasingTuple,
    class: &ConvexClass,
) -> Result<ClassAnalysis> {
    let n = check_lengths(a, b)?;
    if class.lo > class.hi || class.hi >= n {
        return Err(Error::InvalidClass {
            lo: class.lo,
            hi: class.hi,
            len: n,
        });
    }
    let (x, y, swapped) = match class.sign {
        Sign::Zero => return Err(Error::ZeroSignClass),
        Sign::Plus => (a, b, false),
        Sign::Minus => (b, a, true),
    };
    let range = class.lo..=class.hi;
    if let Some(i) = range.clone().find(|&i| x[i] >= y[i]) {
        return Err(Error::Internal(format!(
            "class [{}, {}] is not sign-pure at index {i}",
            class.lo, class.hi
        )));
    }

    let mut deltas = vec![class.lo];
    while let Some(next) = range
        .clone()
        .find(|&i| y[*deltas.last().expect("non-empty")] <= x[i])
    {
        deltas.push(next);
    }
    let n_a = deltas.len();

    let mut blocks = Vec::with_capacity(n_a + 1);
    blocks.push(ValueBlock::half_open(x[deltas[0]], y[deltas[0]]));
    for m in 1..n_a {
        blocks.push(ValueBlock::half_open(y[deltas[m - 1]], y[deltas[m]]));
    }
    blocks.push(ValueBlock::closed(y[deltas[n_a - 1]], y[class.hi]));

    let mut gammas = Vec::with_capacity(n_a.saturating_sub(1));
    for m in 0..n_a.saturating_sub(1) {
        let (d, d_next) = (deltas[m], deltas[m + 1]);
        let gamma = if y[d] == x[d_next] {
            d_next
        } else {
            (d + 1..=d_next)
                .find(|&g| x[d] < x[g] && x[g] <= y[d] && y[d] <= x[d_next] && x[d_next] <= y[g])
                .ok_or_else(|| {
                    Error::Internal(format!(
                        "no gamma in ({d}, {d_next}] for class [{}, {}]",
                        class.lo, class.hi
                    ))
                })?
        };
        gammas.push(gamma);
    }

    let mut pool: Vec<usize> = deltas[..n_a - 1].iter().chain(&gammas).copied().collect();
    pool.sort_unstable();
    pool.dedup();
    let mut zetas = vec![deltas[0]];
    while zetas.len() < n_a {
        let cur = *zetas.last().expect("non-empty");
        let next = pool
            .iter()
            .rev()
            .find(|&&z| x[cur] < x[z] && x[z] <= y[cur])
            .ok_or_else(|| {
                Error::Internal(format!(
                    "zeta sequence stopped at length {} < n_A = {n_a}",
                    zetas.len()
                ))
            })?;
        zetas.push(*next);
    }

    Ok(ClassAnalysis {
        class: *class,
        swapped,
        deltas,
        n_a,
        blocks,
        gammas,
        zetas,
    })
}

/// Backtracking over nondecreasing block assignments of the sorted distinct
/// values. `x_i` in block `m < k` forces `y_i` into block `m + 1`; `x_i` in
/// block `k` forces `y_i` into block 0.
fn exhaustive_blocks(x: &[u64], y: &[u64], k: usize) -> Option<Vec<ValueBlock>> {
    let mut values: Vec<u64> = x.iter().chain(y).copied().collect();
    values.sort_unstable();
    values.dedup();
    let pos = |v: u64| values.binary_search(&v).expect("value present");
    let m = values.len();
    // constraints[j]: indices i whose later endpoint sits at sorted position j
    let mut constraints: Vec<Vec<(usize, usize)>> = vec![Vec::new(); m];
    for (&xi, &yi) in x.iter().zip(y) {
        let (px, py) = (pos(xi), pos(yi));
        constraints[px.max(py)].push((px, py));
    }
    fn go(
        j: usize,
        k: usize,
        assign: &mut Vec<usize>,
        constraints: &[Vec<(usize, usize)>],
    ) -> bool {
        if j == constraints.len() {
            return true;
        }
        let start = assign.last().copied().unwrap_or(0);
        for block in start..=k {
            assign.push(block);
            let ok = constraints[j].iter().all(|&(px, py)| {
                let (bx, by) = (assign[px], assign[py]);
                if bx < k {
                    by == bx + 1
                } else {
                    by == 0
                }
            });
            if ok && go(j + 1, k, assign, constraints) {
                return true;
            }
            assign.pop();
        }
        false
    }
    let mut assign = Vec::with_capacity(m);
    if !go(0, k, &mut assign, &constraints) {
        return None;
    }
    let top = values[m - 1];
    let cut = |n: usize| -> u64 {
        if n == 0 {
            return values[0];
        }
        values
            .iter()
            .zip(&assign)
            .find(|&(_, &blk)| blk >= n)
            .map_or(top + 1, |(&v, _)| v)
    };
    let mut blocks: Vec<ValueBlock> = (0..=k)
        .map(|n| {
            let end = if n == k { top + 1 } else { cut(n + 1) };
            ValueBlock::half_open(cut(n), end)
        })
        .collect();
    // Render the block reaching the top value as closed, matching the
    // canonical construction's terminal block.
    for block in &mut blocks {
        if block.hi == top + 1 && block.lo <= top {
            *block = ValueBlock::closed(block.lo, top);
        }
    }
    Some(blocks)
}

/// Exhaustive cut-point search for a `k`-orderly witness of `(a, b)`.
/// Fails with [`Error::SearchCapExceeded`] when the merged image exceeds `cap`.
pub fn exhaustive_orderly(
    a: &IncreasingTuple,
    b: &IncreasingTuple,
    k: usize,
    cap: usize,
) -> Result<Option<Vec<ValueBlock>>> {
    check_lengths(a, b)?;
    if k == 0 {
        return Ok(None);
    }
    let mut merged: Vec<u64> = a.values().iter().chain(b.values()).copied().collect();
    merged.sort_unstable();
    merged.dedup();
    if merged.len() > cap {
        return Err(Error::SearchCapExceeded {
            size: merged.len(),
            cap,
        });
    }
    Ok(exhaustive_blocks(a.values(), b.values(), k))
}

/// The blocks of the canonical construction when `(a, b)` forms a single
/// plus class of `R`.
pub fn canonical_orderly(
    a: &IncreasingTuple,
    b: &IncreasingTuple,
) -> Result<Option<ClassAnalysis>> {
    if a == b {
        return Ok(None);
    }
    let classes = r_closure(a, b)?;
    match classes.as_slice() {
        [only] if only.sign == Sign::Plus => analyze_class(a, b, only).map(Some),
        _ => Ok(None),
    }
}

/// A witness that `(a, b)` is `k`-orderly, or `None` when none exists.
///
/// The canonical single-class construction answers directly when it applies
/// and yields exactly `k` blocks after the first; otherwise an exhaustive
/// cut-point search runs, limited to merged images of at most
/// [`EXHAUSTIVE_CAP`] values.
pub fn is_k_orderly(
    a: &IncreasingTuple,
    b: &IncreasingTuple,
    k: usize,
) -> Result<Option<Vec<ValueBlock>>> {
    is_k_orderly_with_cap(a, b, k, EXHAUSTIVE_CAP)
}

pub fn is_k_orderly_with_cap(
    a: &IncreasingTuple,
    b: &IncreasingTuple,
    k: usize,
    cap: usize,
) -> Result<Option<Vec<ValueBlock>>> {
    check_lengths(a, b)?;
    if k == 0 {
        return Ok(None);
    }
    if let Some(analysis) = canonical_orderly(a, b)? {
        if analysis.n_a == k && blocks_witness_orderly(a.values(), b.values(), &analysis.blocks) {
            return Ok(Some(analysis.blocks));
        }
    }
    exhaustive_orderly(a, b, k, cap)
}

/// Smallest `k` in `1..=max_k` for which the exhaustive search finds blocks.
pub fn minimal_orderly_k(
    a: &IncreasingTuple,
    b: &IncreasingTuple,
    max_k: usize,
    cap: usize,
) -> Result<Option<usize>> {
    for k in 1..=max_k {
        if exhaustive_orderly(a, b, k, cap)?.is_some() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Which clause of the cover definition a piece satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PieceKind {
    /// `(a|J, b|J)` is orderly.
    #[serde(rename = "A")]
    Forward,
    /// `(b|J, a|J)` is orderly.
    #[serde(rename = "B")]
    Backward,
    /// `|J| = 1` and `a|J = b|J`.
    #[serde(rename = "equal")]
    Equal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverPiece {
    pub lo: usize,
    pub hi: usize,
    pub kind: PieceKind,
    /// Orderliness degree; 0 for [`PieceKind::Equal`].
    pub k: usize,
    /// Blocks in the piece's own orientation; empty for [`PieceKind::Equal`].
    pub blocks: Vec<ValueBlock>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverWitness {
    pub pieces: Vec<CoverPiece>,
    pub k: usize,
}

/// The cover read off the classes of `R`: plus classes become forward
/// pieces, minus classes backward pieces, zero classes equal singletons.
pub fn orderly_cover(a: &IncreasingTuple, b: &IncreasingTuple) -> Result<CoverWitness> {
    let classes = r_closure(a, b)?;
    let mut pieces = Vec::with_capacity(classes.len());
    for class in &classes {
        let piece = match class.sign {
            Sign::Zero => CoverPiece {
                lo: class.lo,
                hi: class.hi,
                kind: PieceKind::Equal,
                k: 0,
                blocks: Vec::new(),
            },
            sign => {
                let analysis = analyze_class(a, b, class)?;
                CoverPiece {
                    lo: class.lo,
                    hi: class.hi,
                    kind: if sign == Sign::Plus {
                        PieceKind::Forward
                    } else {
                        PieceKind::Backward
                    },
                    k: analysis.n_a,
                    blocks: analysis.blocks,
                }
            }
        };
        pieces.push(piece);
    }
    let k = pieces.iter().map(|p| p.k).max().unwrap_or(0).max(1);
    Ok(CoverWitness { pieces, k })
}

/// Checks a cover witness against the definition clause by clause.
///
/// A piece tagged forward (backward) must carry blocks showing
/// `(a|J, b|J)` (`(b|J, a|J)`) to be `k_e`-orderly with `0 < k_e <= k`; a
/// piece tagged equal must be a single index with `a_i = b_i`, and no other
/// piece may be such a singleton. Across pieces `e < e'` the images must be
/// separated: `a|J_e < b|J_e'` and `b|J_e < a|J_e'`.
///
/// The two orderly clauses are not checked for mutual exclusion: a piece
/// whose `a` values all lie below its `b` values is vacuously orderly in
/// the reverse direction too (all of `b` in the last block, all of `a` in
/// block 0), so literal exclusivity would reject every such cover.
pub fn verify_cover(a: &IncreasingTuple, b: &IncreasingTuple, w: &CoverWitness) -> bool {
    let n = a.len();
    if b.len() != n || w.pieces.is_empty() || w.k == 0 {
        return false;
    }
    let mut next = 0;
    for piece in &w.pieces {
        if piece.lo != next || piece.hi < piece.lo || piece.hi >= n {
            return false;
        }
        next = piece.hi + 1;
    }
    if next != n {
        return false;
    }
    let mut max_k = 0;
    for piece in &w.pieces {
        let (lo, hi) = (piece.lo, piece.hi);
        let equal_clause = lo == hi && a[lo] == b[lo];
        let (xs, ys) = (&a.values()[lo..=hi], &b.values()[lo..=hi]);
        let ok = match piece.kind {
            PieceKind::Equal => equal_clause && piece.k == 0 && piece.blocks.is_empty(),
            PieceKind::Forward | PieceKind::Backward => {
                let (x, y) = if piece.kind == PieceKind::Forward {
                    (xs, ys)
                } else {
                    (ys, xs)
                };
                !equal_clause
                    && piece.k > 0
                    && piece.k <= w.k
                    && piece.blocks.len() == piece.k + 1
                    && blocks_witness_orderly(x, y, &piece.blocks)
            }
        };
        if !ok {
            return false;
        }
        max_k = max_k.max(piece.k);
    }
    if w.k != max_k.max(1) {
        return false;
    }
    w.pieces.iter().enumerate().all(|(e, p)| {
        w.pieces[e + 1..]
            .iter()
            .all(|q| a[p.hi] < b[q.lo] && b[p.hi] < a[q.lo])
    })
}

/// Everything the decomposition computes for one pair, in serializable form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub a: IncreasingTuple,
    pub b: IncreasingTuple,
    pub signs: SignPartition,
    pub classes: Vec<ConvexClass>,
    pub analyses: Vec<ClassAnalysis>,
    pub cover: CoverWitness,
    pub k: usize,
}

pub fn decompose(a: &IncreasingTuple, b: &IncreasingTuple) -> Result<DecompositionReport> {
    let signs = sign_partition(a, b)?;
    let classes = r_closure(a, b)?;
    let analyses = classes
        .iter()
        .filter(|c| c.sign != Sign::Zero)
        .map(|c| analyze_class(a, b, c))
        .collect::<Result<Vec<_>>>()?;
    let cover = orderly_cover(a, b)?;
    Ok(DecompositionReport {
        a: a.clone(),
        b: b.clone(),
        signs,
        k: cover.k,
        classes,
        analyses,
        cover,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: &[u64]) -> IncreasingTuple {
        IncreasingTuple::new(v.to_vec()).unwrap()
    }

    fn class(lo: usize, hi: usize, sign: Sign) -> ConvexClass {
        ConvexClass { lo, hi, sign }
    }

    /// Oracle for the generating pairs: evaluate each of the three conditions
    /// separately on every ordered pair.
    fn generators_by_hand(a: &[u64], b: &[u64]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..a.len() {
            for j in 0..a.len() {
                let equal = a[i] == b[j];
                let a_between = a[i] < a[j] && a[j] <= b[i];
                let b_between = b[i] < b[j] && b[j] <= a[i];
                if equal || a_between || b_between {
                    out.push((i, j));
                }
            }
        }
        out
    }

    #[test]
    fn sign_partition_examples() {
        let p = sign_partition(&t(&[0, 2, 4]), &t(&[1, 3, 5])).unwrap();
        assert_eq!(p.plus, vec![0, 1, 2]);
        let p = sign_partition(&t(&[0, 5]), &t(&[0, 6])).unwrap();
        assert_eq!((p.zero, p.plus), (vec![0], vec![1]));
        let p = sign_partition(&t(&[1, 4]), &t(&[0, 5])).unwrap();
        assert_eq!((p.minus, p.plus), (vec![0], vec![1]));
        assert!(sign_partition(&t(&[1]), &t(&[0, 5])).is_err());
    }

    #[test]
    fn r_closure_examples() {
        let (a, b) = (t(&[0, 2, 4]), t(&[1, 3, 5]));
        assert!(generators_by_hand(a.values(), b.values()).is_empty());
        assert_eq!(
            r_closure(&a, &b).unwrap(),
            vec![
                class(0, 0, Sign::Plus),
                class(1, 1, Sign::Plus),
                class(2, 2, Sign::Plus)
            ]
        );

        let (a, b) = (t(&[0, 1]), t(&[1, 2]));
        assert_eq!(
            generators_by_hand(a.values(), b.values()),
            vec![(0, 1), (1, 0)]
        );
        assert_eq!(r_closure(&a, &b).unwrap(), vec![class(0, 1, Sign::Plus)]);

        let (a, b) = (t(&[0, 2]), t(&[3, 5]));
        assert_eq!(generators_by_hand(a.values(), b.values()), vec![(0, 1)]);
        assert_eq!(r_closure(&a, &b).unwrap(), vec![class(0, 1, Sign::Plus)]);

        assert_eq!(r_closure(&a, &a), Err(Error::EqualPair));
        assert_eq!(
            generator_pairs(&a, &b).unwrap(),
            generators_by_hand(a.values(), b.values())
        );
    }

    #[test]
    fn interval_merger_absorbs_overlaps_only() {
        let mut m = IntervalMerger::new();
        m.insert(0, 1);
        m.insert(3, 4);
        assert_eq!(m.intervals(), &[(0, 1), (3, 4)]);
        m.insert(2, 2);
        assert_eq!(m.intervals(), &[(0, 1), (2, 2), (3, 4)]);
        m.insert(5, 1);
        assert_eq!(m.intervals(), &[(0, 5)]);
    }

    #[test]
    fn analyze_class_examples() {
        let (a, b) = (t(&[0, 1]), t(&[1, 2]));
        let an = analyze_class(&a, &b, &class(0, 1, Sign::Plus)).unwrap();
        assert_eq!(an.deltas, vec![0, 1]);
        assert_eq!(an.n_a, 2);
        assert_eq!(
            an.blocks,
            vec![
                ValueBlock::half_open(0, 1),
                ValueBlock::half_open(1, 2),
                ValueBlock::closed(2, 2)
            ]
        );
        assert_eq!(an.zetas, vec![0, 1]);

        let (a, b) = (t(&[0, 2]), t(&[3, 5]));
        let an = analyze_class(&a, &b, &class(0, 1, Sign::Plus)).unwrap();
        assert_eq!((an.deltas.clone(), an.n_a), (vec![0], 1));
        assert_eq!(
            an.blocks,
            vec![ValueBlock::half_open(0, 3), ValueBlock::closed(3, 5)]
        );
        assert_eq!(an.zetas, vec![0]);

        // Minus analog of the first example: swap roles.
        let (a, b) = (t(&[1, 2]), t(&[0, 1]));
        let classes = r_closure(&a, &b).unwrap();
        assert_eq!(classes, vec![class(0, 1, Sign::Minus)]);
        let an = analyze_class(&a, &b, &classes[0]).unwrap();
        assert!(an.swapped);
        assert_eq!((an.deltas, an.zetas), (vec![0, 1], vec![0, 1]));
        assert_eq!(
            an.blocks,
            vec![
                ValueBlock::half_open(0, 1),
                ValueBlock::half_open(1, 2),
                ValueBlock::closed(2, 2)
            ]
        );

        assert_eq!(
            analyze_class(&t(&[0, 5]), &t(&[0, 6]), &class(0, 0, Sign::Zero)),
            Err(Error::ZeroSignClass)
        );
    }

    #[test]
    fn minus_class_from_mixed_pair() {
        // a=(1,4), b=(0,2): both indices have b < a.
        let (a, b) = (t(&[1, 4]), t(&[0, 2]));
        let classes = r_closure(&a, &b).unwrap();
        assert!(classes.iter().all(|c| c.sign == Sign::Minus));
        for c in &classes {
            let an = analyze_class(&a, &b, c).unwrap();
            let (x, y) = an.oriented(&a, &b);
            let xs = &x.values()[c.lo..=c.hi];
            let ys = &y.values()[c.lo..=c.hi];
            assert!(blocks_witness_orderly(xs, ys, &an.blocks));
        }
    }

    #[test]
    fn is_k_orderly_examples() {
        let (a, b) = (t(&[0, 1]), t(&[1, 2]));
        let w = is_k_orderly(&a, &b, 2).unwrap().unwrap();
        let expected = [[0u64].as_slice(), &[1], &[2]];
        for (blk, members) in w.iter().zip(expected) {
            for v in 0..=2u64 {
                assert_eq!(blk.contains(v), members.contains(&v));
            }
        }
        assert!(exhaustive_orderly(&a, &b, 2, 24).unwrap().is_some());
        assert_eq!(is_k_orderly(&a, &b, 1).unwrap(), None);

        let (a, b) = (t(&[0, 2]), t(&[3, 5]));
        let w = is_k_orderly(&a, &b, 1).unwrap().unwrap();
        assert_eq!(
            w,
            vec![ValueBlock::half_open(0, 3), ValueBlock::closed(3, 5)]
        );
        let w = exhaustive_orderly(&a, &b, 1, 24).unwrap().unwrap();
        assert!(blocks_witness_orderly(a.values(), b.values(), &w));

        assert!(matches!(
            exhaustive_orderly(&t(&[0, 2]), &t(&[3, 5]), 1, 3),
            Err(Error::SearchCapExceeded { size: 4, cap: 3 })
        ));
    }

    #[test]
    fn orderly_cover_examples() {
        let (a, b) = (t(&[0, 2, 4]), t(&[1, 3, 5]));
        let w = orderly_cover(&a, &b).unwrap();
        assert_eq!(w.pieces.len(), 3);
        assert!(w
            .pieces
            .iter()
            .all(|p| p.kind == PieceKind::Forward && p.k == 1));
        assert_eq!(w.k, 1);
        assert!(verify_cover(&a, &b, &w));

        let (a, b) = (t(&[0, 1]), t(&[1, 2]));
        let w = orderly_cover(&a, &b).unwrap();
        assert_eq!(
            (w.pieces.len(), w.pieces[0].kind, w.k),
            (1, PieceKind::Forward, 2)
        );
        assert!(verify_cover(&a, &b, &w));

        let (a, b) = (t(&[0, 5]), t(&[0, 6]));
        let w = orderly_cover(&a, &b).unwrap();
        assert_eq!(w.pieces[0].kind, PieceKind::Equal);
        assert_eq!((w.pieces[1].kind, w.pieces[1].k), (PieceKind::Forward, 1));
        assert_eq!(w.k, 1);
        assert!(verify_cover(&a, &b, &w));

        assert_eq!(orderly_cover(&a, &a), Err(Error::EqualPair));
    }

    #[test]
    fn verify_cover_rejects_tampering() {
        let (a, b) = (t(&[0, 2, 4]), t(&[1, 3, 5]));
        let mut w = orderly_cover(&a, &b).unwrap();
        w.pieces.swap(0, 1);
        assert!(!verify_cover(&a, &b, &w));

        // Claiming k_e = 1 for a class that is only 2-orderly.
        let (a, b) = (t(&[0, 1]), t(&[1, 2]));
        let w = CoverWitness {
            pieces: vec![CoverPiece {
                lo: 0,
                hi: 1,
                kind: PieceKind::Forward,
                k: 1,
                blocks: vec![ValueBlock::half_open(0, 1), ValueBlock::closed(1, 2)],
            }],
            k: 1,
        };
        assert!(!verify_cover(&a, &b, &w));

        // Right blocks, wrong global k.
        let mut w = orderly_cover(&a, &b).unwrap();
        w.k = 3;
        assert!(!verify_cover(&a, &b, &w));

        // Wrong orientation.
        let mut w = orderly_cover(&a, &b).unwrap();
        w.pieces[0].kind = PieceKind::Backward;
        assert!(!verify_cover(&a, &b, &w));
    }

    #[test]
    fn report_serializes_classes_as_triples() {
        let r = decompose(&t(&[0, 5]), &t(&[0, 6])).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(
            json["classes"],
            serde_json::json!([[0, 0, "zero"], [1, 1, "plus"]])
        );
        assert_eq!(json["cover"]["pieces"][0]["kind"], "equal");
        assert_eq!(json["k"], 1);
        let back: DecompositionReport = serde_json::from_value(json).unwrap();
        assert_eq!(back, r);
    }
}
