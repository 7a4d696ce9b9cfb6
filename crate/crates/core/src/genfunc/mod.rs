//! Closed-form generating functions in `t` for the Fibonacci-run and
//! Lucas-run enumerator polynomials, and the monoid construction
//! `1 / (1 - sum of letter weights)` that derives them from the letter alphabets.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::census::{CensusError, PolyKind};
use crate::graphs::{Family, GraphError};
use crate::polyring::{series_inverse, series_mul, MPoly, PolyError, RationalGF, Series, Var};
use crate::words::{factorize, Alphabet, BitWord, WordError};

pub mod verify;

pub use verify::{verify, verify_with, CaseResult, IdentityId, Report};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("unknown generating function id {0:?}")]
    UnknownId(String),
    #[error("unknown identity id {0:?}")]
    UnknownIdentity(String),
    #[error("no generating function for the {kind} polynomial of {family}")]
    Unsupported { family: Family, kind: PolyKind },
    #[error("monoid series must start 1 + t before its tail is adjusted")]
    TailMismatch,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Census(#[from] CensusError),
    #[error(transparent)]
    Word(#[from] WordError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GfId {
    /// Down-degree co-weight polynomials of `R_n`, in `(d, z)`.
    DcwR,
    /// Distance cube polynomials of `R_n`, in `(q, x)`.
    DR,
    /// Distance cube polynomials of `R_n^l`, in `(q, x)`.
    DRl,
    /// Up-degree polynomials of `R_n`, in `u`; the series starts at `t^1`.
    UpdegR,
}

impl GfId {
    pub const ALL: [GfId; 4] = [GfId::DcwR, GfId::DR, GfId::DRl, GfId::UpdegR];

    pub fn code(self) -> &'static str {
        match self {
            GfId::DcwR => "dcw-r",
            GfId::DR => "d-r",
            GfId::DRl => "d-rl",
            GfId::UpdegR => "updeg-r",
        }
    }

    /// The graph family and polynomial whose sequence this series enumerates.
    pub fn target(self) -> (Family, PolyKind) {
        match self {
            GfId::DcwR => (Family::FibonacciRun, PolyKind::Dcw),
            GfId::DR => (Family::FibonacciRun, PolyKind::DistCube),
            GfId::DRl => (Family::LucasRun, PolyKind::DistCube),
            GfId::UpdegR => (Family::FibonacciRun, PolyKind::Updeg),
        }
    }

    /// Smallest `n` the series covers.
    pub fn first_n(self) -> usize {
        match self {
            GfId::UpdegR => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for GfId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for GfId {
    type Err = GfError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.replace('_', "-");
        GfId::ALL
            .into_iter()
            .find(|id| id.code() == s)
            .ok_or(GfError::UnknownId(s))
    }
}

/// Numerator and denominator coefficients, lowest power of `t` first,
/// exactly as the closed forms are written.
pub fn catalog(id: GfId) -> RationalGF {
    let gf = match id {
        GfId::DcwR => RationalGF::parse(
            &["1", "d", "d-z", "d(d-z)", "d(d-z)"],
            &["1", "-1", "-z", "-(d-z)", "0", "-d(d-z)"],
        ),
        GfId::DR => RationalGF::parse(
            &["1", "q+x", "x", "x(q+x)", "x(q+x)"],
            &["1", "-1", "-q", "-x", "0", "-x(q+x)"],
        ),
        GfId::DRl => RationalGF::parse(
            &["1", "0", "q+2x", "0", "2x(q+x)"],
            &["1", "-1", "-q", "-x", "0", "-x(q+x)"],
        ),
        GfId::UpdegR => RationalGF::parse(
            &["0", "1+u", "-(u-2)", "-2u", "u-2", "0", "-(u-1)", "-(u-1)"],
            &["1", "-u", "-2", "2u-1", "1", "-(u-1)", "0", "u-1"],
        ),
    };
    gf.expect("catalog entries are well formed")
}

pub fn catalog_expand(id: GfId, order: usize) -> Series {
    catalog(id).expand(order)
}

/// Per-word statistic carried into the monoid generating function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stat {
    /// `d^r z^(w - r)`: `r` is the number of 1s that can be switched to 0
    /// while staying in the monoid, `w` the weight.
    Dcw,
    /// `d^w`.
    Weight,
}

/// Monomial (without the `t` power) attached to `word`, which must belong
/// to the monoid generated by `alphabet`.
pub fn word_statistic(word: &BitWord, alphabet: Alphabet, stat: Stat) -> MPoly {
    let w = word.weight() as u32;
    match stat {
        Stat::Weight => MPoly::monomial(1, &[(Var::D, w)]),
        Stat::Dcw => {
            let r = (0..word.len())
                .filter(|&i| word.bit(i) && factorize(&word.flipped(i), alphabet).is_ok())
                .count() as u32;
            MPoly::monomial(1, &[(Var::D, r), (Var::Z, w - r)])
        }
    }
}

/// `sum over letters e with l(e) <= order of stat(e) t^l(e)`.
pub fn letter_series(alphabet: Alphabet, stat: Stat, order: usize) -> Series {
    let mut out = vec![MPoly::zero(); order + 1];
    for letter in alphabet.letters_up_to(order) {
        out[letter.len()] += &word_statistic(&letter, alphabet, stat);
    }
    out
}

/// `1 / (1 - letters)`: coefficient of `t^m` sums the statistic over the
/// monoid's words of length `m`.
pub fn monoid_gf(letters: &[MPoly], order: usize) -> Result<Series, GfError> {
    Ok(series_inverse(letters, order)?)
}

/// `(S - 1 - t) / t^2`: drops the empty word and `0`, then removes the
/// trailing `00` common to every longer word of the monoid. The result has
/// two fewer coefficients than the input.
pub fn tail_adjust(series: &[MPoly]) -> Result<Series, GfError> {
    if series.len() < 2 || !series[0].is_one() || !series[1].is_one() {
        return Err(GfError::TailMismatch);
    }
    Ok(series[2..].to_vec())
}

/// `(1 - t) + (2t - t^2) S`, truncated to the length of `S`; takes the
/// Fibonacci-type sequence to its cyclic counterpart.
pub fn lucas_transform(series: &[MPoly]) -> Series {
    let Some(order) = series.len().checked_sub(1) else {
        return Vec::new();
    };
    let two_t_minus_t2 = [MPoly::zero(), MPoly::constant(2), MPoly::constant(-1)];
    let mut out = series_mul(&two_t_minus_t2, series, order);
    out[0] += &MPoly::one();
    if order >= 1 {
        out[1] += &MPoly::constant(-1);
    }
    out
}

fn map_series(series: Series, f: impl Fn(&MPoly) -> MPoly) -> Series {
    series.iter().map(f).collect()
}

fn subs(bindings: &[(Var, &str)]) -> impl Fn(&MPoly) -> MPoly {
    let bindings: Vec<(Var, MPoly)> = bindings
        .iter()
        .map(|&(v, s)| (v, s.parse().expect("fixed binding")))
        .collect();
    move |p: &MPoly| p.subs(&bindings)
}

/// `W_{Γ_n}(d)` for `n = 0..=order`, from the alphabet `F`.
pub fn fibonacci_weight_series(order: usize) -> Result<Series, GfError> {
    let letters = letter_series(Alphabet::F, Stat::Weight, order + 2);
    tail_adjust(&monoid_gf(&letters, order + 2)?)
}

/// Series `sum_n P(G_n) t^n` for `n = 0..=order`, built without enumerating
/// subcubes. `Q_n` is not covered, nor up-degrees outside `R_n`.
pub fn family_series(family: Family, kind: PolyKind, order: usize) -> Result<Series, GfError> {
    let unsupported = GfError::Unsupported { family, kind };
    let dist_to_cube = subs(&[(Var::Q, "1")]);
    match family {
        Family::FibonacciRun => Ok(match kind {
            PolyKind::Dcw => catalog_expand(GfId::DcwR, order),
            PolyKind::DistCube => catalog_expand(GfId::DR, order),
            PolyKind::Cube => map_series(catalog_expand(GfId::DR, order), dist_to_cube),
            PolyKind::Weight => map_series(catalog_expand(GfId::DcwR, order), subs(&[(Var::Z, "d")])),
            PolyKind::Updeg => catalog_expand(GfId::UpdegR, order),
        }),
        Family::LucasRun => match kind {
            PolyKind::DistCube => Ok(catalog_expand(GfId::DRl, order)),
            PolyKind::Cube => Ok(map_series(catalog_expand(GfId::DRl, order), dist_to_cube)),
            PolyKind::Dcw | PolyKind::Weight => Ok(lucas_transform(&family_series(Family::FibonacciRun, kind, order)?)),
            PolyKind::Updeg => Err(unsupported),
        },
        Family::Fibonacci => {
            let weights = fibonacci_weight_series(order)?;
            match kind {
                // every 1 of a Fibonacci word is switchable, so DCW has no z
                PolyKind::Weight | PolyKind::Dcw => Ok(weights),
                PolyKind::DistCube => Ok(map_series(weights, subs(&[(Var::D, "x+q")]))),
                PolyKind::Cube => Ok(map_series(weights, subs(&[(Var::D, "x+1")]))),
                PolyKind::Updeg => Err(unsupported),
            }
        }
        Family::Lucas => match kind {
            PolyKind::Updeg => Err(unsupported),
            _ => Ok(lucas_transform(&family_series(Family::Fibonacci, kind, order)?)),
        },
        Family::Hypercube => Err(unsupported),
    }
}

/// Coefficient of `t^n` in [`family_series`].
pub fn family_polynomial(family: Family, kind: PolyKind, n: usize) -> Result<MPoly, GfError> {
    if kind == PolyKind::Updeg && n == 0 {
        // the up-degree series starts at t^1
        return Err(GfError::Unsupported { family, kind });
    }
    Ok(family_series(family, kind, n)?.swap_remove(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    fn series(xs: &[&str]) -> Series {
        xs.iter().map(|s| p(s)).collect()
    }

    #[test]
    fn catalog_first_terms() {
        let dr = catalog_expand(GfId::DR, 6);
        assert_eq!(dr[1].to_string(), "1+q+x");
        assert_eq!(dr[6].to_string(), "1+6q+10q^2+4q^3+(6+20q+10q^2)x+(10+8q)x^2+2x^3");
        assert_eq!(catalog_expand(GfId::DRl, 0), vec![MPoly::one()]);
        assert_eq!(catalog_expand(GfId::DRl, 2)[2], p("1+2q+2x"));
        let up = catalog_expand(GfId::UpdegR, 2);
        assert!(up[0].is_zero());
        assert_eq!(up[2], p("u^2+2"));
        assert_eq!(catalog_expand(GfId::DcwR, 1)[1], p("1+d"));
    }

    #[test]
    fn letter_series_examples() {
        assert_eq!(
            letter_series(Alphabet::R, Stat::Dcw, 7),
            series(&["0", "1", "0", "d", "0", "d^2", "0", "d^2z"])
        );
        assert_eq!(letter_series(Alphabet::R, Stat::Dcw, 1), series(&["0", "1"]));
        assert_eq!(
            letter_series(Alphabet::F, Stat::Weight, 5),
            series(&["0", "1", "0", "d", "0", "d^2"])
        );
        // every 1 of an F letter is switchable
        assert_eq!(
            letter_series(Alphabet::F, Stat::Dcw, 9),
            letter_series(Alphabet::F, Stat::Weight, 9)
        );
    }

    #[test]
    fn monoid_examples() {
        let letters = letter_series(Alphabet::R, Stat::Dcw, 3);
        let m = monoid_gf(&letters, 3).unwrap();
        assert_eq!(m[3], p("1+d"));
        assert_eq!(monoid_gf(&letters, 0).unwrap(), vec![MPoly::one()]);
        assert!(matches!(
            monoid_gf(&[MPoly::one()], 3),
            Err(GfError::Poly(PolyError::ConstantTermNonzero))
        ));
        let full = monoid_gf(&letter_series(Alphabet::R, Stat::Dcw, 24), 24).unwrap();
        assert_eq!(tail_adjust(&full).unwrap(), catalog_expand(GfId::DcwR, 22));
        assert_eq!(tail_adjust(&series(&["1", "2"])), Err(GfError::TailMismatch));
    }

    #[test]
    fn gf_ids_parse() {
        for id in GfId::ALL {
            assert_eq!(id.code().parse::<GfId>().unwrap(), id);
        }
        assert_eq!("d_rl".parse::<GfId>().unwrap(), GfId::DRl);
        assert!(matches!("d-q".parse::<GfId>(), Err(GfError::UnknownId(_))));
    }

    #[test]
    fn family_series_small_values() {
        assert_eq!(
            family_polynomial(Family::Fibonacci, PolyKind::Weight, 2).unwrap(),
            p("1+2d")
        );
        assert_eq!(family_polynomial(Family::Lucas, PolyKind::Weight, 1).unwrap(), p("1"));
        assert_eq!(
            family_polynomial(Family::Lucas, PolyKind::Weight, 3).unwrap(),
            p("1+3d")
        );
        assert_eq!(
            family_polynomial(Family::FibonacciRun, PolyKind::Cube, 5).unwrap(),
            p("13+19x+7x^2")
        );
        assert_eq!(family_polynomial(Family::LucasRun, PolyKind::Dcw, 1).unwrap(), p("1"));
        assert!(matches!(
            family_polynomial(Family::Hypercube, PolyKind::Cube, 2),
            Err(GfError::Unsupported { .. })
        ));
        assert!(family_polynomial(Family::FibonacciRun, PolyKind::Updeg, 0).is_err());
    }
}
