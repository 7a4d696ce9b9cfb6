//! Induced subcube enumeration and the enumerator polynomials derived from it.
//!
//! A subcube is identified by its bottom and top vertices. Two enumerators
//! are provided: a generic oracle that tests every comparable vertex pair
//! for a full interval, and a top-vertex enumerator that emits one subcube per
//! subset of each vertex's down-flippable 1s. The second is only valid on
//! families where every such subset spans a subcube; the oracle is what
//! establishes that.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use thiserror::Error;

use crate::graphs::{Family, FamilyGraph};
use crate::polyring::{MPoly, Monomial, Var};
use crate::words::BitWord;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("oracle census of {family} is capped at n <= {cap} (got n = {n})")]
    TooLarge { family: Family, n: usize, cap: usize },
    #[error("top-vertex census is not available for {0}")]
    UnsupportedFamily(Family),
    #[error("unknown method {0:?}")]
    UnknownMethod(String),
    #[error("unknown polynomial kind {0:?}")]
    UnknownKind(String),
}

/// Oracle caps: raw hypercubes have `3^n` comparable pairs and are capped lower.
pub const ORACLE_MAX_N: usize = 14;
pub const ORACLE_MAX_N_HYPERCUBE: usize = 12;
/// [`Method::Auto`] uses the oracle up to this dimension.
pub const AUTO_ORACLE_MAX_N: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subcube {
    pub bottom: BitWord,
    pub top: BitWord,
}

impl Subcube {
    pub fn dim(&self) -> usize {
        self.bottom.hamming(&self.top)
    }

    /// Weight of the bottom vertex.
    pub fn distance(&self) -> usize {
        self.bottom.weight()
    }

    fn sort_key(&self) -> (usize, BitWord, BitWord) {
        (self.distance(), self.bottom, self.top)
    }
}

/// All induced subcubes of one graph, sorted by `(distance, bottom, top)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    family: Family,
    n: usize,
    cubes: Vec<Subcube>,
}

impl Census {
    fn from_parts(g: &FamilyGraph, mut cubes: Vec<Subcube>) -> Self {
        cubes.sort_by_key(Subcube::sort_key);
        Census {
            family: g.family(),
            n: g.n(),
            cubes,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cubes(&self) -> &[Subcube] {
        &self.cubes
    }

    pub fn len(&self) -> usize {
        self.cubes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cubes.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Oracle,
    TopVertex,
    /// Oracle for small `n` or for `Q_n`, top-vertex otherwise.
    Auto,
}

impl FromStr for Method {
    type Err = CensusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "oracle" => Ok(Method::Oracle),
            "topvertex" => Ok(Method::TopVertex),
            "auto" => Ok(Method::Auto),
            other => Err(CensusError::UnknownMethod(other.to_string())),
        }
    }
}

/// Iterates the submasks of `mask`, including `mask` and 0.
fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & mask) };
        Some(cur)
    })
}

pub fn enumerate_oracle(g: &FamilyGraph) -> Result<Census, CensusError> {
    let cap = if g.family() == Family::Hypercube {
        ORACLE_MAX_N_HYPERCUBE
    } else {
        ORACLE_MAX_N
    };
    if g.n() > cap {
        return Err(CensusError::TooLarge {
            family: g.family(),
            n: g.n(),
            cap,
        });
    }
    let n = g.n();
    let cubes = g
        .vertices()
        .par_iter()
        .flat_map_iter(|top| {
            let t = top.raw();
            submasks(t)
                .filter(move |&b| {
                    let free = t ^ b;
                    submasks(free).all(|s| g.contains_raw(b | s))
                })
                .map(move |b| Subcube {
                    bottom: BitWord::from_raw(b, n),
                    top: *top,
                })
        })
        .collect();
    Ok(Census::from_parts(g, cubes))
}

pub fn enumerate_topvertex(g: &FamilyGraph) -> Result<Census, CensusError> {
    if g.family() == Family::Hypercube {
        return Err(CensusError::UnsupportedFamily(Family::Hypercube));
    }
    let n = g.n();
    let cubes = g
        .vertices()
        .par_iter()
        .flat_map_iter(|top| {
            let t = top.raw();
            submasks(g.down_mask(top)).map(move |k| Subcube {
                bottom: BitWord::from_raw(t ^ k, n),
                top: *top,
            })
        })
        .collect();
    Ok(Census::from_parts(g, cubes))
}

pub fn enumerate(g: &FamilyGraph, method: Method) -> Result<Census, CensusError> {
    match method {
        Method::Oracle => enumerate_oracle(g),
        Method::TopVertex => enumerate_topvertex(g),
        Method::Auto if g.n() <= AUTO_ORACLE_MAX_N || g.family() == Family::Hypercube => enumerate_oracle(g),
        Method::Auto => enumerate_topvertex(g),
    }
}

fn from_counts<K: Eq + std::hash::Hash>(counts: HashMap<K, u64>, monomial: impl Fn(&K) -> Monomial) -> MPoly {
    let mut p = MPoly::zero();
    for (k, c) in counts {
        p.add_term(monomial(&k), BigInt::from(c));
    }
    p
}

fn tally<K: Eq + std::hash::Hash>(keys: impl Iterator<Item = K>) -> HashMap<K, u64> {
    let mut counts = HashMap::new();
    for k in keys {
        *counts.entry(k).or_insert(0) += 1;
    }
    counts
}

/// `D_G(x, q) = sum over subcubes of x^dim q^distance`.
pub fn distance_cube_polynomial(census: &Census) -> MPoly {
    let counts = tally(census.cubes.iter().map(|c| (c.dim() as u32, c.distance() as u32)));
    from_counts(counts, |&(k, d)| Monomial::new(&[(Var::X, k), (Var::Q, d)]))
}

/// `C_G(x) = sum over subcubes of x^dim`.
pub fn cube_polynomial(census: &Census) -> MPoly {
    let counts = tally(census.cubes.iter().map(|c| c.dim() as u32));
    from_counts(counts, |&k| Monomial::new(&[(Var::X, k)]))
}

/// `DCW_G(d, z) = sum over vertices of d^down z^(weight - down)`.
pub fn dcw_polynomial(g: &FamilyGraph) -> MPoly {
    let counts = tally(g.vertices().iter().map(|v| {
        let down = g.down_mask(v).count_ones();
        (down, v.weight() as u32 - down)
    }));
    from_counts(counts, |&(a, b)| Monomial::new(&[(Var::D, a), (Var::Z, b)]))
}

/// `W_G(d) = sum over vertices of d^weight`.
pub fn weight_polynomial(g: &FamilyGraph) -> MPoly {
    let counts = tally(g.vertices().iter().map(|v| v.weight() as u32));
    from_counts(counts, |&w| Monomial::new(&[(Var::D, w)]))
}

/// `sum over vertices of u^up`.
pub fn updeg_polynomial(g: &FamilyGraph) -> MPoly {
    let n = g.n();
    let counts = tally(g.vertices().iter().map(|v| {
        let zeros = !v.raw() & crate::words::mask(n);
        submasks(zeros)
            .filter(|&b| b.count_ones() == 1 && g.contains_raw(v.raw() | b))
            .count() as u32
    }));
    from_counts(counts, |&u| Monomial::new(&[(Var::U, u)]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PolyKind {
    DistCube,
    Cube,
    Dcw,
    Weight,
    Updeg,
}

impl PolyKind {
    pub const ALL: [PolyKind; 5] = [
        PolyKind::DistCube,
        PolyKind::Cube,
        PolyKind::Dcw,
        PolyKind::Weight,
        PolyKind::Updeg,
    ];

    pub fn code(self) -> &'static str {
        match self {
            PolyKind::DistCube => "dist-cube",
            PolyKind::Cube => "cube",
            PolyKind::Dcw => "dcw",
            PolyKind::Weight => "weight",
            PolyKind::Updeg => "updeg",
        }
    }

    /// Variables of this kind's polynomials, in canonical order.
    pub fn vars(self) -> &'static [Var] {
        match self {
            PolyKind::DistCube => &[Var::Q, Var::X],
            PolyKind::Cube => &[Var::X],
            PolyKind::Dcw => &[Var::D, Var::Z],
            PolyKind::Weight => &[Var::D],
            PolyKind::Updeg => &[Var::U],
        }
    }

    pub fn needs_census(self) -> bool {
        matches!(self, PolyKind::DistCube | PolyKind::Cube)
    }
}

impl fmt::Display for PolyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for PolyKind {
    type Err = CensusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PolyKind::ALL
            .into_iter()
            .find(|k| k.code() == s)
            .ok_or_else(|| CensusError::UnknownKind(s.to_string()))
    }
}

/// The requested enumerator polynomial of `g`. `method` only matters for
/// the two cube polynomials.
pub fn polynomial(g: &FamilyGraph, kind: PolyKind, method: Method) -> Result<MPoly, CensusError> {
    Ok(match kind {
        PolyKind::DistCube => distance_cube_polynomial(&enumerate(g, method)?),
        PolyKind::Cube => cube_polynomial(&enumerate(g, method)?),
        PolyKind::Dcw => dcw_polynomial(g),
        PolyKind::Weight => weight_polynomial(g),
        PolyKind::Updeg => updeg_polynomial(g),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::build;

    fn w(s: &str) -> BitWord {
        s.parse().unwrap()
    }

    fn p(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    #[test]
    fn single_edge() {
        let g = build(Family::FibonacciRun, 1).unwrap();
        let c = enumerate_oracle(&g).unwrap();
        let pairs: Vec<(String, String)> = c
            .cubes()
            .iter()
            .map(|s| (s.bottom.to_string(), s.top.to_string()))
            .collect();
        assert_eq!(
            pairs,
            [
                ("0".into(), "0".into()),
                ("0".into(), "1".into()),
                ("1".into(), "1".into())
            ]
        );
        assert_eq!(enumerate_topvertex(&g).unwrap(), c);
    }

    #[test]
    fn square() {
        let g = build(Family::Hypercube, 2).unwrap();
        let c = enumerate_oracle(&g).unwrap();
        assert_eq!(cube_polynomial(&c), p("4+4x+x^2"));
        assert_eq!(
            enumerate_topvertex(&g),
            Err(CensusError::UnsupportedFamily(Family::Hypercube))
        );
    }

    #[test]
    fn fibonacci_run_5() {
        let g = build(Family::FibonacciRun, 5).unwrap();
        let c = enumerate_oracle(&g).unwrap();
        assert_eq!(
            distance_cube_polynomial(&c).to_string(),
            "1+5q+6q^2+q^3+(5+12q+2q^2)x+(6+q)x^2"
        );
        assert_eq!(enumerate_topvertex(&g).unwrap(), c);
        let tops: Vec<_> = c
            .cubes()
            .iter()
            .filter(|s| s.top == w("11100"))
            .map(Subcube::dim)
            .collect();
        let mut dims = tops.clone();
        dims.sort();
        assert_eq!(dims, [0, 1, 1, 2]);
        let zero = w("00000");
        assert_eq!(c.cubes().iter().filter(|s| s.top == zero).count(), 1);
    }

    #[test]
    fn trivial_graphs() {
        let g = build(Family::FibonacciRun, 0).unwrap();
        assert_eq!(
            polynomial(&g, PolyKind::DistCube, Method::Oracle).unwrap(),
            MPoly::one()
        );
        let g1 = build(Family::FibonacciRun, 1).unwrap();
        assert_eq!(dcw_polynomial(&g1), p("1+d"));
        assert_eq!(updeg_polynomial(&g1), p("1+u"));
        assert_eq!(weight_polynomial(&g1), p("1+d"));
    }

    #[test]
    fn lucas_run_5_against_recurrence_of_listed_values() {
        // 2 D_{R_4} - D_{R_3}, using the listed values for n = 3 and 4
        let expected = &(&p("1+4q+3q^2+(4+6q)x+3x^2") * &p("2")) - &p("1+3q+q^2+(3+2q)x+x^2");
        assert_eq!(expected, p("1+5q+5q^2+(5+10q)x+5x^2"));
        let g = build(Family::LucasRun, 5).unwrap();
        assert_eq!(polynomial(&g, PolyKind::DistCube, Method::Oracle).unwrap(), expected);
    }

    #[test]
    fn census_is_sorted_and_caps_apply() {
        let g = build(Family::Fibonacci, 6).unwrap();
        let c = enumerate_oracle(&g).unwrap();
        assert!(c.cubes().windows(2).all(|w| w[0].sort_key() < w[1].sort_key()));
        let big = build(Family::Hypercube, 13).unwrap();
        assert!(matches!(
            enumerate_oracle(&big),
            Err(CensusError::TooLarge { cap: 12, .. })
        ));
        let r15 = build(Family::FibonacciRun, 15).unwrap();
        assert!(matches!(
            enumerate_oracle(&r15),
            Err(CensusError::TooLarge { cap: 14, .. })
        ));
        assert!(enumerate(&r15, Method::Auto).is_ok());
    }

    #[test]
    fn parse_kind_and_method() {
        for k in PolyKind::ALL {
            assert_eq!(k.code().parse::<PolyKind>().unwrap(), k);
        }
        assert_eq!("topvertex".parse::<Method>().unwrap(), Method::TopVertex);
        assert!("gf".parse::<Method>().is_err());
    }
}
