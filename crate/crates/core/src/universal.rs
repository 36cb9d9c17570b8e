//! Universal sets of binary vectors and the colorings they induce.
//!
//! An `(m, r)`-universal set is a family of length-`m` binary vectors such
//! that on every set of `r` positions, every one of the `2^r` patterns occurs
//! in some vector. Ordered pairs of vectors induce three-colorings: the first
//! vector picks red positions, the second recolors the remaining (green)
//! vertices yellow or blue; edge positions of the second vector carry no
//! meaning.

use crate::graph::{Edge, Graph};
use crate::separation::{Coloring, EdgeColor, VertexColor};
use crate::util::{binomial, for_each_combination};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::io::{self, Read, Write};
use thiserror::Error;

/// Cap on the number of vectors a construction may emit.
pub const MAX_VECTORS: usize = 1 << 20;
/// Largest `m` for which the exhaustive strategy (all `2^m` vectors) fits the
/// vector cap; also the position cap for derandomized solving.
pub const MAX_EXHAUSTIVE_POSITIONS: usize = 20;
/// Cap on `C(m, r) * 2^r` when verifying a set.
pub const MAX_VERIFY_CHECKS: u128 = 1_000_000_000;
/// Vector length cap of this implementation (vectors are stored in a word).
pub const MAX_POSITIONS: usize = 64;

/// Construction strategy for [`build_universal_set`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    /// All `2^m` vectors; exact for any `r <= m`.
    Exhaustive,
    /// `r = 0`: the zero vector. `r = 1`: zeros and ones.
    Trivial,
    /// Uniformly random vectors, grown until verification passes.
    RandomVerified { seed: u64 },
}

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum UniversalSetError {
    #[error("r = {r} exceeds vector length m = {m}")]
    OrderTooLarge { m: usize, r: usize },
    #[error("vector length m = {m} exceeds the supported maximum {max}")]
    WidthUnsupported { m: usize, max: usize },
    #[error("construction would emit {needed} vectors, over the cap {cap}")]
    TooManyVectors { needed: u128, cap: usize },
    #[error("the trivial strategy only covers r <= 1, got r = {r}")]
    TrivialOrderUnsupported { r: usize },
    #[error("verification needs ~{checks} checks, over the cap {cap}")]
    VerificationTooExpensive { checks: u128, cap: u128 },
    #[error("random construction failed to verify within the retry budget")]
    ConstructionFailed,
    #[error("vector length {m} does not match the graph's {expected} positions")]
    PositionMismatch { m: usize, expected: usize },
    #[error("bad cache file: {0}")]
    BadCache(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<io::Error> for UniversalSetError {
    fn from(e: io::Error) -> Self {
        UniversalSetError::Io(e.to_string())
    }
}

/// A verified or by-construction-correct `(m, r)`-universal set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniversalSet {
    m: usize,
    r: usize,
    vectors: Vec<u64>,
}

impl UniversalSet {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// The vectors; bit `i` of a word is position `i`.
    pub fn vectors(&self) -> &[u64] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Serializes as `USET`, then m, r, count as little-endian u64, then one
    /// row of `ceil(m/8)` bytes per vector, least-significant bit first.
    pub fn write_cache<W: Write>(&self, w: &mut W) -> Result<(), UniversalSetError> {
        w.write_all(b"USET")?;
        for value in [self.m as u64, self.r as u64, self.vectors.len() as u64] {
            w.write_all(&value.to_le_bytes())?;
        }
        let row_len = self.m.div_ceil(8);
        for &vec in &self.vectors {
            w.write_all(&vec.to_le_bytes()[..row_len])?;
        }
        Ok(())
    }

    pub fn read_cache<R: Read>(r: &mut R) -> Result<UniversalSet, UniversalSetError> {
        let mut magic = [0u8; 4];
        r.read_exact(&mut magic)?;
        if &magic != b"USET" {
            return Err(UniversalSetError::BadCache("missing USET magic".into()));
        }
        let mut word = [0u8; 8];
        let mut header = [0u64; 3];
        for slot in &mut header {
            r.read_exact(&mut word)?;
            *slot = u64::from_le_bytes(word);
        }
        let (m, order, count) = (header[0] as usize, header[1] as usize, header[2] as usize);
        if m > MAX_POSITIONS {
            return Err(UniversalSetError::WidthUnsupported { m, max: MAX_POSITIONS });
        }
        if order > m {
            return Err(UniversalSetError::OrderTooLarge { m, r: order });
        }
        let row_len = m.div_ceil(8);
        let mask = ones(m);
        let mut vectors = Vec::with_capacity(count);
        for _ in 0..count {
            let mut row = [0u8; 8];
            r.read_exact(&mut row[..row_len])?;
            let value = u64::from_le_bytes(row);
            if value & !mask != 0 {
                return Err(UniversalSetError::BadCache("row has bits past m".into()));
            }
            vectors.push(value);
        }
        Ok(UniversalSet { m, r: order, vectors })
    }
}

fn ones(m: usize) -> u64 {
    if m == 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

/// Builds an `(m, r)`-universal set with the requested strategy. The result
/// is correct by construction (exhaustive, trivial) or explicitly verified
/// (random).
pub fn build_universal_set(
    m: usize,
    r: usize,
    strategy: Strategy,
) -> Result<UniversalSet, UniversalSetError> {
    if r > m {
        return Err(UniversalSetError::OrderTooLarge { m, r });
    }
    if m > MAX_POSITIONS {
        return Err(UniversalSetError::WidthUnsupported { m, max: MAX_POSITIONS });
    }
    match strategy {
        Strategy::Exhaustive => {
            let needed: u128 = 1u128 << m.min(127);
            if needed > MAX_VECTORS as u128 {
                return Err(UniversalSetError::TooManyVectors { needed, cap: MAX_VECTORS });
            }
            Ok(UniversalSet { m, r, vectors: (0..(1u64 << m)).collect() })
        }
        Strategy::Trivial => match r {
            0 => Ok(UniversalSet { m, r, vectors: vec![0] }),
            1 => Ok(UniversalSet { m, r, vectors: vec![0, ones(m)] }),
            _ => Err(UniversalSetError::TrivialOrderUnsupported { r }),
        },
        Strategy::RandomVerified { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            // Expected-coverage sizing, then grow geometrically on failure.
            let mut size = ((1usize << r) * (4 * r.max(1) + 8)).max(4);
            for _ in 0..16 {
                if size > MAX_VECTORS {
                    return Err(UniversalSetError::TooManyVectors {
                        needed: size as u128,
                        cap: MAX_VECTORS,
                    });
                }
                let vectors: Vec<u64> =
                    (0..size).map(|_| rng.gen::<u64>() & ones(m)).collect();
                let candidate = UniversalSet { m, r, vectors };
                if verify_universal_set(&candidate)? {
                    return Ok(candidate);
                }
                size *= 2;
            }
            Err(UniversalSetError::ConstructionFailed)
        }
    }
}

/// Checks the universality property exhaustively: every pattern on every
/// `r`-subset of positions must occur.
pub fn verify_universal_set(u: &UniversalSet) -> Result<bool, UniversalSetError> {
    let checks = binomial(u.m, u.r).saturating_mul(1u128 << u.r.min(127));
    if checks > MAX_VERIFY_CHECKS {
        return Err(UniversalSetError::VerificationTooExpensive {
            checks,
            cap: MAX_VERIFY_CHECKS,
        });
    }
    let pattern_count = 1usize << u.r;
    let mut complete = true;
    for_each_combination(u.m, u.r, &mut |positions| {
        let mut seen = vec![false; pattern_count];
        let mut remaining = pattern_count;
        for &vec in &u.vectors {
            let mut pattern = 0usize;
            for (bit, &pos) in positions.iter().enumerate() {
                if vec >> pos & 1 == 1 {
                    pattern |= 1 << bit;
                }
            }
            if !seen[pattern] {
                seen[pattern] = true;
                remaining -= 1;
                if remaining == 0 {
                    break;
                }
            }
        }
        if remaining > 0 {
            complete = false;
            return false;
        }
        true
    });
    Ok(complete)
}

/// Fixed position assignment for a graph: vertices by ascending id, then
/// edges in canonical order.
pub fn position_count(g: &Graph) -> usize {
    g.vertex_count() + g.edge_count()
}

/// The coloring induced by an ordered pair of vectors: position red when the
/// first vector is 1; green vertices become yellow where the second vector is
/// 1, blue otherwise; green edges are blue.
pub fn coloring_from_pair(g: &Graph, first: u64, second: u64) -> Coloring {
    let mut c = Coloring::all_blue(g);
    let vertices: Vec<usize> = g.vertices().collect();
    let edges: Vec<Edge> = g.edges();
    for (i, &v) in vertices.iter().enumerate() {
        if first >> i & 1 == 1 {
            c.set_vertex(v, VertexColor::Red);
        } else if second >> i & 1 == 1 {
            c.set_vertex(v, VertexColor::Yellow);
        }
    }
    for (j, &e) in edges.iter().enumerate() {
        if first >> (vertices.len() + j) & 1 == 1 {
            c.set_edge(e, EdgeColor::Red);
        }
    }
    c
}

/// Streams the coloring of every ordered pair of vectors, row-major. The
/// stream has exactly `|vectors|^2` items.
pub fn colorings_from_universal_set<'a>(
    g: &'a Graph,
    u: &'a UniversalSet,
) -> Result<impl Iterator<Item = Coloring> + 'a, UniversalSetError> {
    let expected = position_count(g);
    if u.m != expected {
        return Err(UniversalSetError::PositionMismatch { m: u.m, expected });
    }
    Ok(u.vectors
        .iter()
        .flat_map(move |&a| u.vectors.iter().map(move |&b| coloring_from_pair(g, a, b))))
}
