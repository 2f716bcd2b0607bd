//! Explicit homomorphisms from shift graphs into order-type graphs.
//!
//! Given a `k`-orderly pair `(a, b)` of length `alpha`, [`lemma_embedding`]
//! maps every vertex `eta` of `LSh_k(N)` to an increasing `alpha`-tuple so
//! that each arc `(eta, rho)` lands on a pair of order type `otp(a, b)`.
//! Image values live in `N x (alpha*)^k` under the lexicographic order,
//! flattened to naturals with a [`LexFrame`]; `alpha*` is encoded by
//! [`StarOrder`]. [`cover_embedding`] glues the per-piece maps of an orderly
//! cover into one homomorphism `Sh_k(N) -> E_{a,b}`.
//!
//! Every construction re-checks its output before returning.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::decomp::{blocks_witness_orderly, verify_cover, CoverWitness, PieceKind, ValueBlock};
use crate::error::{Error, Result};
use crate::graph::{lshift_digraph, reverse_tuple};
use crate::seq::{
    increasing_tuples, otp, otp_slices, Caps, IncreasingTuple, LexFrame, OrderTypePattern,
};

/// `alpha* = {0^- < 0 < 1^- < 1 < ... < (alpha-1)^- < alpha-1 < inf}` as the
/// naturals `0..=2 alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StarOrder {
    pub alpha: u64,
}

impl StarOrder {
    pub fn new(alpha: u64) -> Self {
        StarOrder { alpha }
    }

    /// `beta^-`.
    pub fn minus(&self, beta: u64) -> u64 {
        2 * beta
    }

    pub fn element(&self, beta: u64) -> u64 {
        2 * beta + 1
    }

    pub fn infinity(&self) -> u64 {
        2 * self.alpha
    }

    pub fn radix(&self) -> u64 {
        2 * self.alpha + 1
    }

    pub fn is_element(&self, code: u64) -> bool {
        code % 2 == 1 && code < 2 * self.alpha
    }

    /// Lexicographic immediate predecessor `x^-` of a tuple over `alpha*`,
    /// or `x` itself when the rightmost entry other than `0^-` is not an
    /// element of `alpha`.
    pub fn predecessor(&self, x: &[u64]) -> Vec<u64> {
        let mut out = x.to_vec();
        if let Some(l) = x.iter().rposition(|&d| d != 0) {
            if self.is_element(x[l]) {
                out[l] -= 1;
                for d in &mut out[l + 1..] {
                    *d = self.infinity();
                }
            }
        }
        out
    }
}

/// How many leading coordinates of `g_i` feed into `g_{i-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PrefixRule {
    /// `k - i` coordinates: exactly the ones `g_i` has filled in.
    #[default]
    Filled,
    /// `i` coordinates.
    LevelIndex,
}

impl PrefixRule {
    fn width(self, k: usize, i: usize) -> usize {
        match self {
            PrefixRule::Filled => k - i,
            PrefixRule::LevelIndex => i,
        }
    }
}

/// One map `g_i : S_i + {inf} -> (alpha*)^k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GLevel {
    /// `S_i`, increasing.
    pub members: Vec<usize>,
    /// `g_i(beta)` for each member, as `k` star-order codes.
    pub values: Vec<Vec<u64>>,
    pub infinity: Vec<u64>,
}

impl GLevel {
    fn value_of(&self, beta: usize) -> Option<&[u64]> {
        self.members
            .iter()
            .position(|&m| m == beta)
            .map(|p| self.values[p].as_slice())
    }
}

/// The maps `g_0, ..., g_{k-1}`; `levels[i]` is `g_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GSequence {
    pub k: usize,
    pub alpha: u64,
    pub levels: Vec<GLevel>,
}

impl GSequence {
    /// The level `n_beta` with `beta` in `S_{n_beta}`, and `g_{n_beta}(beta)`.
    pub fn lookup(&self, beta: usize) -> Option<(usize, &[u64])> {
        self.levels
            .iter()
            .enumerate()
            .find_map(|(i, level)| level.value_of(beta).map(|v| (i, v)))
    }
}

fn padded(prefix: &[u64], next: u64, k: usize) -> Vec<u64> {
    let mut v = Vec::with_capacity(k);
    v.extend_from_slice(prefix);
    v.push(next);
    v.resize(k, 0);
    v
}

/// Builds `g_{k-1}, ..., g_0` by downward recursion and checks that each
/// `g_i` is increasing and that for `1 <= i < k`
/// `otp(a|S_i, b|S_{i-1}) = otp(g_i|S_i, g_{i-1}|S_{i-1})`.
pub fn build_g_sequence(
    a: &IncreasingTuple,
    b: &IncreasingTuple,
    k: usize,
    blocks: &[ValueBlock],
) -> Result<GSequence> {
    build_g_sequence_with(a, b, k, blocks, PrefixRule::Filled)
}

pub fn build_g_sequence_with(
    a: &IncreasingTuple,
    b: &IncreasingTuple,
    k: usize,
    blocks: &[ValueBlock],
    rule: PrefixRule,
) -> Result<GSequence> {
    if k == 0 || blocks.len() != k + 1 || !blocks_witness_orderly(a.values(), b.values(), blocks) {
        return Err(Error::InvalidInput(format!(
            "blocks do not witness that the pair is {k}-orderly"
        )));
    }
    let alpha = a.len();
    let star = StarOrder::new(alpha as u64);
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); k];
    for beta in 0..alpha {
        let level = blocks
            .iter()
            .position(|c| c.contains(a[beta]))
            .expect("witness covers every value");
        if level == k {
            return Err(Error::InvalidInput(format!(
                "a[{beta}] lies in the terminal block"
            )));
        }
        members[level].push(beta);
    }

    let mut levels: Vec<Option<GLevel>> = vec![None; k];
    levels[k - 1] = Some(GLevel {
        values: members[k - 1]
            .iter()
            .map(|&beta| padded(&[], star.element(beta as u64), k))
            .collect(),
        members: members[k - 1].clone(),
        infinity: padded(&[], star.infinity(), k),
    });
    for i in (1..k).rev() {
        let upper = levels[i].as_ref().expect("built on the previous step");
        let width = rule.width(k, i).min(k - 1);
        let values = members[i - 1]
            .iter()
            .map(|&beta| {
                let target = upper.members.iter().position(|&g| b[beta] <= a[g]);
                match target {
                    Some(p) if a[upper.members[p]] == b[beta] => upper.values[p].clone(),
                    Some(p) => padded(
                        &star.predecessor(&upper.values[p][..width]),
                        star.element(beta as u64),
                        k,
                    ),
                    None => padded(&upper.infinity[..width], star.element(beta as u64), k),
                }
            })
            .collect();
        let infinity = padded(&upper.infinity[..width], star.infinity(), k);
        levels[i - 1] = Some(GLevel {
            members: members[i - 1].clone(),
            values,
            infinity,
        });
    }
    let levels: Vec<GLevel> = levels
        .into_iter()
        .map(|l| l.expect("all levels built"))
        .collect();

    for (i, level) in levels.iter().enumerate() {
        let increasing = level
            .values
            .iter()
            .chain(std::iter::once(&level.infinity))
            .collect::<Vec<_>>()
            .windows(2)
            .all(|w| w[0] < w[1]);
        if !increasing {
            return Err(Error::Internal(format!("g_{i} is not increasing")));
        }
    }
    for i in 1..k {
        let (upper, lower) = (&levels[i], &levels[i - 1]);
        for (&b1, g1) in upper.members.iter().zip(&upper.values) {
            for (&b2, g2) in lower.members.iter().zip(&lower.values) {
                if a[b1].cmp(&b[b2]) != g1.cmp(g2) {
                    return Err(Error::DaggerViolation {
                        level: i,
                        upper: b1,
                        lower: b2,
                    });
                }
            }
        }
    }
    Ok(GSequence {
        k,
        alpha: alpha as u64,
        levels,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SourceKind {
    /// `LSh_k(n)`; every arc must map to the pattern in its own direction.
    Lsh,
    /// `Sh_k(n)`; every edge must map to the pattern in some direction.
    Sh,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Source {
    pub kind: SourceKind,
    pub k: usize,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapEntry {
    pub vertex: Vec<u64>,
    pub image: IncreasingTuple,
    /// `image` decoded in the frame, one digit vector per coordinate.
    pub digits: Vec<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingMap {
    pub frame: LexFrame,
    pub source: Source,
    pub pattern: OrderTypePattern,
    pub map: Vec<MapEntry>,
}

/// Increasing `k`-tuples over `0..n`, empty when `n < k`.
fn source_vertices(k: usize, n: usize) -> Vec<Vec<u64>> {
    if n < k {
        return Vec::new();
    }
    increasing_tuples(n as u64, k)
        .map(IncreasingTuple::into_inner)
        .collect()
}

/// Arcs of `LSh_k(n)` as index pairs into [`source_vertices`].
fn source_arcs(k: usize, n: usize) -> Vec<(usize, usize)> {
    if n < k || k == 0 {
        return Vec::new();
    }
    lshift_digraph(k, n).map(|d| d.arcs()).unwrap_or_default()
}

fn entry(frame: &LexFrame, vertex: Vec<u64>, digits: Vec<Vec<u64>>) -> Result<MapEntry> {
    let values = digits
        .iter()
        .map(|d| frame.encode(d))
        .collect::<Result<Vec<_>>>()?;
    let image = IncreasingTuple::with_caps(values, Caps::WIDE)
        .map_err(|e| Error::Internal(format!("image of {vertex:?} is not increasing: {e}")))?;
    Ok(MapEntry {
        vertex,
        image,
        digits,
    })
}

fn check_arcs(map: &[MapEntry], k: usize, n: usize, pattern: &OrderTypePattern) -> Result<()> {
    for (u, v) in source_arcs(k, n) {
        let got = otp_slices(map[u].image.values(), map[v].image.values())?;
        if &got != pattern {
            return Err(Error::EmbeddingFailed {
                from: map[u].vertex.clone(),
                to: map[v].vertex.clone(),
            });
        }
    }
    Ok(())
}

/// A map `LSh_k(N) -> D_{a,b}` from a `k`-orderly witness, verified on every arc.
pub fn lemma_embedding(
    a: &IncreasingTuple,
    b: &IncreasingTuple,
    k: usize,
    blocks: &[ValueBlock],
    n: usize,
) -> Result<EmbeddingMap> {
    let pattern = otp(a, b)?;
    let g = build_g_sequence(a, b, k, blocks)?;
    let star = StarOrder::new(a.len() as u64);
    let mut radices = vec![n.max(1) as u64];
    radices.extend(std::iter::repeat_n(star.radix(), k));
    let frame = LexFrame::new(radices)?;
    let placement: Vec<(usize, &[u64])> = (0..a.len())
        .map(|beta| g.lookup(beta).expect("every index has a level"))
        .collect();
    let map = source_vertices(k, n)
        .into_iter()
        .map(|eta| {
            let digits = placement
                .iter()
                .map(|&(level, gv)| {
                    let mut d = Vec::with_capacity(k + 1);
                    d.push(eta[level]);
                    d.extend_from_slice(gv);
                    d
                })
                .collect();
            entry(&frame, eta, digits)
        })
        .collect::<Result<Vec<_>>>()?;
    check_arcs(&map, k, n, &pattern)?;
    Ok(EmbeddingMap {
        frame,
        source: Source {
            kind: SourceKind::Lsh,
            k,
            n,
        },
        pattern,
        map,
    })
}

/// The homomorphism `Sh_k(N) -> E_{a,b}` assembled from a verified cover.
///
/// Forward pieces use [`lemma_embedding`] on the restricted pair, fed the
/// first `k_e` coordinates of `eta`. Backward pieces use it on the swapped
/// restricted pair, fed the reversal of those coordinates. Equal pieces map
/// to a constant. The piece index leads each image value so pieces stay in
/// order. The result is checked on every arc of `LSh_k(N)`, each of which
/// must realize `otp(a, b)` in its own direction.
pub fn cover_embedding(
    a: &IncreasingTuple,
    b: &IncreasingTuple,
    w: &CoverWitness,
    n: usize,
) -> Result<EmbeddingMap> {
    if !verify_cover(a, b, w) {
        return Err(Error::InvalidInput("cover witness does not verify".into()));
    }
    let pattern = otp(a, b)?;
    let len = a.len();
    let k = w.k;
    let mut radices = vec![len as u64, n.max(1) as u64];
    radices.extend(std::iter::repeat_n(2 * len as u64 + 1, k));
    let frame = LexFrame::new(radices)?;

    struct Local {
        map: EmbeddingMap,
        index: HashMap<Vec<u64>, usize>,
    }
    let locals = w
        .pieces
        .iter()
        .map(|p| {
            let (x, y) = (a.slice(p.lo, p.hi), b.slice(p.lo, p.hi));
            let map = match p.kind {
                PieceKind::Equal => return Ok(None),
                PieceKind::Forward => lemma_embedding(&x, &y, p.k, &p.blocks, n)?,
                PieceKind::Backward => lemma_embedding(&y, &x, p.k, &p.blocks, n)?,
            };
            let index = map
                .map
                .iter()
                .enumerate()
                .map(|(i, e)| (e.vertex.clone(), i))
                .collect();
            Ok(Some(Local { map, index }))
        })
        .collect::<Result<Vec<_>>>()?;

    let map = source_vertices(k, n)
        .into_iter()
        .map(|eta| {
            let mut digits = Vec::with_capacity(len);
            for (piece, local) in w.pieces.iter().zip(&locals) {
                let local_digits: Option<&[Vec<u64>]> = match (piece.kind, local) {
                    (PieceKind::Equal, _) | (_, None) => None,
                    (kind, Some(local)) => {
                        let head = &eta[..piece.k];
                        let key = if kind == PieceKind::Backward {
                            reverse_tuple(head, n as u64)
                        } else {
                            head.to_vec()
                        };
                        Some(&local.map.map[local.index[&key]].digits)
                    }
                };
                for offset in 0..=piece.hi - piece.lo {
                    let mut d = Vec::with_capacity(k + 2);
                    d.push(piece.lo as u64);
                    match local_digits {
                        Some(ld) => d.extend_from_slice(&ld[offset]),
                        None => d.push(0),
                    }
                    d.resize(k + 2, 0);
                    digits.push(d);
                }
            }
            entry(&frame, eta, digits)
        })
        .collect::<Result<Vec<_>>>()?;
    check_arcs(&map, k, n, &pattern)?;
    Ok(EmbeddingMap {
        frame,
        source: Source {
            kind: SourceKind::Sh,
            k,
            n,
        },
        pattern,
        map,
    })
}

/// Re-checks an embedding from scratch: the entries list the source
/// vertices in lexicographic order, digits decode to the stored images, and
/// every source arc (for `Lsh`) or edge in some direction (for `Sh`) maps
/// onto a pair of order type `pattern`. A source without arcs passes.
pub fn verify_embedding(e: &EmbeddingMap, pattern: &OrderTypePattern) -> bool {
    let Source { kind, k, n } = e.source;
    let vertices = source_vertices(k, n);
    if vertices.len() != e.map.len() {
        return false;
    }
    let consistent = e.map.iter().zip(&vertices).all(|(entry, v)| {
        &entry.vertex == v
            && entry.digits.len() == entry.image.len()
            && entry
                .digits
                .iter()
                .zip(entry.image.values())
                .all(|(d, &value)| e.frame.encode(d).ok() == Some(value))
    });
    if !consistent {
        return false;
    }
    let matches = |u: usize, v: usize| {
        otp_slices(e.map[u].image.values(), e.map[v].image.values())
            .ok()
            .as_ref()
            == Some(pattern)
    };
    source_arcs(k, n).into_iter().all(|(u, v)| match kind {
        SourceKind::Lsh => matches(u, v),
        SourceKind::Sh => matches(u, v) || matches(v, u),
    })
}
