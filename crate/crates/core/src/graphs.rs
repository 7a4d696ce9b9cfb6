//! Vertex sets of the hypercube, Fibonacci cube, Lucas cube, Fibonacci-run
//! and Lucas-run graphs, with adjacency computed from single-bit flips.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::words::{classify, monoid_words, Alphabet, BitWord, Language, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("{family} of dimension {n} exceeds the configured cap of {cap}")]
    TooLarge { family: Family, n: usize, cap: usize },
    #[error("vertex {0} is not in the graph")]
    VertexNotInGraph(BitWord),
    #[error("no path from {from} to {to}")]
    Unreachable { from: BitWord, to: BitWord },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error(transparent)]
    Word(#[from] WordError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// `Q_n`, all words of length `n`.
    Hypercube,
    /// `Γ_n`, words without two consecutive 1s.
    Fibonacci,
    /// `Λ_n`, Fibonacci words whose first and last bits are not both 1.
    Lucas,
    /// `R_n`, words `s` with `s00` run-constrained.
    FibonacciRun,
    /// `R_n^l`, words of `R_n` with `s0` circular-run-constrained.
    LucasRun,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Hypercube,
        Family::Fibonacci,
        Family::Lucas,
        Family::FibonacciRun,
        Family::LucasRun,
    ];

    /// Short name used on the command line.
    pub fn code(self) -> &'static str {
        match self {
            Family::Hypercube => "q",
            Family::Fibonacci => "gamma",
            Family::Lucas => "lambda",
            Family::FibonacciRun => "r",
            Family::LucasRun => "rl",
        }
    }

    /// Families whose vertex sets are built without scanning all of `Q_n`.
    pub fn is_recursive(self) -> bool {
        self != Family::Hypercube
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Family::Hypercube => "Q",
            Family::Fibonacci => "Gamma",
            Family::Lucas => "Lambda",
            Family::FibonacciRun => "R",
            Family::LucasRun => "R^l",
        };
        f.write_str(name)
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.code() == s)
            .ok_or_else(|| GraphError::UnknownFamily(s.to_string()))
    }
}

/// Dimension caps for graph construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Families built by recursive extension.
    pub max_recursive_n: usize,
    /// Raw `Q_n` scans.
    pub max_scan_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_recursive_n: 30,
            max_scan_n: 24,
        }
    }
}

impl Limits {
    pub fn cap_for(&self, family: Family) -> usize {
        if family.is_recursive() {
            self.max_recursive_n
        } else {
            self.max_scan_n
        }
    }
}

/// Dense bitmaps are used up to this dimension, hash sets beyond it.
const DENSE_INDEX_MAX_N: usize = 24;

#[derive(Debug, Clone)]
enum Membership {
    Dense(Vec<u64>),
    Sparse(HashSet<u64>),
}

impl Membership {
    fn build(n: usize, vertices: &[BitWord]) -> Self {
        if n <= DENSE_INDEX_MAX_N {
            let mut words = vec![0u64; (1usize << n).div_ceil(64)];
            for v in vertices {
                let r = v.raw() as usize;
                words[r / 64] |= 1 << (r % 64);
            }
            Membership::Dense(words)
        } else {
            Membership::Sparse(vertices.iter().map(BitWord::raw).collect())
        }
    }

    #[inline]
    fn contains(&self, raw: u64) -> bool {
        match self {
            Membership::Dense(words) => {
                let r = raw as usize;
                words.get(r / 64).is_some_and(|w| w >> (r % 64) & 1 == 1)
            }
            Membership::Sparse(set) => set.contains(&raw),
        }
    }
}

/// An induced subgraph of `Q_n` from one of the five families.
/// Immutable once built.
#[derive(Debug, Clone)]
pub struct FamilyGraph {
    family: Family,
    n: usize,
    vertices: Vec<BitWord>,
    index: Membership,
}

pub fn build(family: Family, n: usize) -> Result<FamilyGraph, GraphError> {
    build_with(family, n, &Limits::default())
}

pub fn build_with(family: Family, n: usize, limits: &Limits) -> Result<FamilyGraph, GraphError> {
    let cap = limits.cap_for(family).min(crate::words::MAX_LEN - 2);
    if n > cap {
        return Err(GraphError::TooLarge { family, n, cap });
    }
    let mut vertices = match family {
        Family::Hypercube => (0..1u64 << n).map(|r| BitWord::from_raw(r, n)).collect(),
        Family::Fibonacci => fibonacci_words(n),
        Family::Lucas => fibonacci_words(n)
            .into_iter()
            .filter(|s| n == 0 || !(s.bit(0) && s.bit(n - 1)))
            .collect(),
        Family::FibonacciRun => fibonacci_run_words(n)?,
        Family::LucasRun => fibonacci_run_words(n)?
            .into_iter()
            .filter(|s| {
                let s0 = s.push(false).expect("n + 1 <= MAX_LEN");
                classify(&s0, Language::CircularRunConstrained)
            })
            .collect::<Vec<_>>(),
    };
    vertices.sort();
    let index = Membership::build(n, &vertices);
    Ok(FamilyGraph {
        family,
        n,
        vertices,
        index,
    })
}

/// Fibonacci words by appending one bit at a time.
fn fibonacci_words(n: usize) -> Vec<BitWord> {
    let mut layer = vec![BitWord::EMPTY];
    for _ in 0..n {
        let mut next = Vec::with_capacity(layer.len() * 2);
        for w in &layer {
            next.push(w.push(false).expect("bounded by cap"));
            if w.is_empty() || !w.bit(w.len() - 1) {
                next.push(w.push(true).expect("bounded by cap"));
            }
        }
        layer = next;
    }
    layer
}

/// `V(R_n)`: run-constrained words of length `n + 2`, built from letters of
/// `R`, with their trailing `00` removed.
fn fibonacci_run_words(n: usize) -> Result<Vec<BitWord>, GraphError> {
    Ok(monoid_words(Alphabet::R, n + 2)?
        .into_iter()
        .map(|w| w.prefix(n))
        .collect())
}

impl FamilyGraph {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Vertices, sorted lexicographically.
    pub fn vertices(&self) -> &[BitWord] {
        &self.vertices
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    #[inline]
    pub fn contains(&self, v: &BitWord) -> bool {
        v.len() == self.n && self.index.contains(v.raw())
    }

    /// Membership by raw value; the caller guarantees `raw < 2^n`.
    #[inline]
    pub fn contains_raw(&self, raw: u64) -> bool {
        self.index.contains(raw)
    }

    fn check(&self, v: &BitWord) -> Result<(), GraphError> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(GraphError::VertexNotInGraph(*v))
        }
    }

    /// Raw mask of the 1 bits of `v` whose flip to 0 stays in the graph.
    pub fn down_mask(&self, v: &BitWord) -> u64 {
        let r = v.raw();
        let mut mask = 0;
        let mut ones = r;
        while ones != 0 {
            let bit = ones & ones.wrapping_neg();
            if self.index.contains(r ^ bit) {
                mask |= bit;
            }
            ones ^= bit;
        }
        mask
    }

    /// `(down, up)` degrees of `v`.
    pub fn degrees(&self, v: &BitWord) -> Result<(usize, usize), GraphError> {
        self.check(v)?;
        let mut down = 0;
        let mut up = 0;
        for i in 0..self.n {
            if self.contains(&v.flipped(i)) {
                if v.bit(i) {
                    down += 1;
                } else {
                    up += 1;
                }
            }
        }
        Ok((down, up))
    }

    pub fn neighbors<'a>(&'a self, v: &'a BitWord) -> impl Iterator<Item = BitWord> + 'a {
        (0..self.n).map(|i| v.flipped(i)).filter(|w| self.contains(w))
    }

    pub fn edge_count(&self) -> usize {
        self.vertices
            .iter()
            .map(|v| self.down_mask(v).count_ones() as usize)
            .sum()
    }

    /// Breadth-first distances from `source` to every reachable vertex.
    pub fn distances_from(&self, source: &BitWord) -> Result<HashMap<BitWord, usize>, GraphError> {
        self.check(source)?;
        let mut dist = HashMap::with_capacity(self.order());
        dist.insert(*source, 0);
        let mut queue = VecDeque::from([*source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[&v];
            for w in self.neighbors(&v) {
                dist.entry(w).or_insert_with(|| {
                    queue.push_back(w);
                    d + 1
                });
            }
        }
        Ok(dist)
    }

    pub fn bfs_distance(&self, u: &BitWord, v: &BitWord) -> Result<usize, GraphError> {
        self.check(v)?;
        self.distances_from(u)?
            .get(v)
            .copied()
            .ok_or(GraphError::Unreachable { from: *u, to: *v })
    }
}
