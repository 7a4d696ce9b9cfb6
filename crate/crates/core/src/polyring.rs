//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients, truncated power series in a formal variable `t` whose
//! coefficients are such polynomials, and rational generating functions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default truncation order for series expansion.
pub const DEFAULT_ORDER: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("denominator must have constant term 1")]
    DenominatorNotNormalized,
    #[error("series to invert must have zero constant term")]
    ConstantTermNonzero,
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("bad coefficient {0:?}")]
    BadCoefficient(String),
    #[error("polynomial uses variable {0} which is not in the declared variable list")]
    VariableNotListed(Var),
    #[error("exponent vector has {found} entries, expected {expected}")]
    ExponentArity { expected: usize, found: usize },
}

/// Variables, in their fixed canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Q,
    X,
    D,
    Z,
    U,
}

const NVARS: usize = 5;

impl Var {
    pub const ALL: [Var; NVARS] = [Var::Q, Var::X, Var::D, Var::Z, Var::U];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::X => "x",
            Var::D => "d",
            Var::Z => "z",
            Var::U => "u",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == name)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector over [`Var::ALL`].
///
/// Ordered by the exponent of the last variable first, then the one before it,
/// and so on: polynomials in `(q, x)` list their terms grouped by ascending
/// power of `x`, each group by ascending power of `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u32; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn new(powers: &[(Var, u32)]) -> Self {
        let mut m = Monomial::ONE;
        for &(v, e) in powers {
            m.0[v.index()] += e;
        }
        m
    }

    #[inline]
    pub fn exponent(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0) {
            *a += b;
        }
        out
    }

    fn without(&self, v: Var) -> Monomial {
        let mut out = *self;
        out.0[v.index()] = 0;
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial with exact integer coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn var(v: Var) -> Self {
        Self::term(1, Monomial::new(&[(v, 1)]))
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c.into());
        p
    }

    /// `c * prod(v^e)`.
    pub fn monomial(c: impl Into<BigInt>, powers: &[(Var, u32)]) -> Self {
        Self::term(c, Monomial::new(powers))
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Monomial::ONE)
    }

    /// Constant value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    /// Variables that occur with positive exponent, in canonical order.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL.into_iter().filter(|&v| self.contains_var(v)).collect()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn scale(&self, c: &BigInt) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Polynomial composition; variables without a binding are left in place.
    pub fn substitute(&self, bindings: &BTreeMap<Var, MPoly>) -> MPoly {
        let mut powers: BTreeMap<(Var, u32), MPoly> = BTreeMap::new();
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut rest = *m;
            let mut prod = MPoly::constant(c.clone());
            for (&v, image) in bindings {
                let e = m.exponent(v);
                if e == 0 {
                    continue;
                }
                rest = rest.without(v);
                let p = powers.entry((v, e)).or_insert_with(|| image.pow(e));
                prod = &prod * p;
            }
            out += &prod.shift(&rest);
        }
        out
    }

    /// Convenience wrapper over [`MPoly::substitute`].
    pub fn subs(&self, bindings: &[(Var, MPoly)]) -> MPoly {
        self.substitute(&bindings.iter().cloned().collect())
    }

    /// Multiplies every term by the monomial `m`.
    fn shift(&self, m: &Monomial) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    /// Splits by powers of `v`: entry `e` holds the coefficient of `v^e`.
    pub fn collect_by(&self, v: Var) -> BTreeMap<u32, MPoly> {
        let mut out: BTreeMap<u32, MPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.exponent(v)).or_default().add_term(m.without(v), c.clone());
        }
        out
    }

    /// JSON form with the given variable list, which must cover every variable in use.
    pub fn to_json_form(&self, vars: &[Var]) -> Result<PolyJson, PolyError> {
        if let Some(v) = self.variables().into_iter().find(|v| !vars.contains(v)) {
            return Err(PolyError::VariableNotListed(v));
        }
        Ok(PolyJson {
            vars: vars.iter().map(|v| v.name().to_string()).collect(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    exp: vars.iter().map(|&v| m.exponent(v)).collect(),
                    coeff: c.to_string(),
                })
                .collect(),
        })
    }

    pub fn from_json_form(form: &PolyJson) -> Result<MPoly, PolyError> {
        let vars = form
            .vars
            .iter()
            .map(|name| Var::from_name(name).ok_or_else(|| PolyError::UnknownVariable(name.clone())))
            .collect::<Result<Vec<_>, _>>()?;
        let mut p = MPoly::zero();
        for t in &form.terms {
            if t.exp.len() != vars.len() {
                return Err(PolyError::ExponentArity {
                    expected: vars.len(),
                    found: t.exp.len(),
                });
            }
            let powers: Vec<(Var, u32)> = vars.iter().copied().zip(t.exp.iter().copied()).collect();
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| PolyError::BadCoefficient(t.coeff.clone()))?;
            p.add_term(Monomial::new(&powers), c);
        }
        Ok(p)
    }
}

impl From<i64> for MPoly {
    fn from(c: i64) -> Self {
        MPoly::constant(c)
    }
}

impl From<Var> for MPoly {
    fn from(v: Var) -> Self {
        MPoly::var(v)
    }
}

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl Add<&MPoly> for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: MPoly) -> MPoly {
        self += &rhs;
        self
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl Sub<&MPoly> for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        &self - &rhs
    }
}

impl Mul<&MPoly> for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

// ---------------------------------------------------------------------------
// Text form

fn write_power(out: &mut String, v: Var, e: u32) {
    out.push_str(v.name());
    if e > 1 {
        out.push('^');
        out.push_str(&e.to_string());
    }
}

/// Renders `p`, grouping by its highest variable in canonical order and
/// recursing into the coefficients.
fn render(p: &MPoly) -> String {
    let Some(outer) = p.variables().last().copied() else {
        return p.constant_term().to_string();
    };
    let mut pieces: Vec<String> = Vec::new();
    for (e, coeff) in p.collect_by(outer) {
        if e == 0 {
            pieces.push(render(&coeff));
            continue;
        }
        let mut s = String::new();
        if coeff.num_terms() > 1 {
            s.push('(');
            s.push_str(&render(&coeff));
            s.push(')');
        } else {
            let (m, c) = coeff.terms().next().expect("grouped coefficients are nonzero");
            if *c == BigInt::from(-1) {
                s.push('-');
            } else if !c.is_one() {
                s.push_str(&c.to_string());
            }
            for v in Var::ALL {
                let k = m.exponent(v);
                if k > 0 {
                    write_power(&mut s, v, k);
                }
            }
        }
        write_power(&mut s, outer, e);
        pieces.push(s);
    }
    let mut out = String::new();
    for (i, piece) in pieces.iter().enumerate() {
        if i > 0 && !piece.starts_with('-') {
            out.push('+');
        }
        out.push_str(piece);
    }
    out
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}

/// Parses sums of products of integers, variables, powers and parenthesized
/// sub-expressions, with implicit multiplication (`3q^2`, `(1+q)x`, `d(d-z)`)
/// or an explicit `*`. Whitespace is ignored.
impl FromStr for MPoly {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let chars: Vec<(usize, char)> = s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        let mut parser = Parser {
            chars: &chars,
            pos: 0,
            end: s.len(),
        };
        let p = parser.expr()?;
        if parser.pos != chars.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(p)
    }
}

struct Parser<'a> {
    chars: &'a [(usize, char)],
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn error(&self, message: &str) -> PolyError {
        let offset = self.chars.get(self.pos).map_or(self.end, |&(o, _)| o);
        PolyError::Parse {
            offset,
            message: message.to_string(),
        }
    }

    fn expr(&mut self) -> Result<MPoly, PolyError> {
        let mut acc = MPoly::zero();
        let mut sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -1
            }
            Some('+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.product()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn product(&mut self) -> Result<MPoly, PolyError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(c) if c == '(' || c.is_ascii_alphanumeric() => acc = &acc * &self.factor()?,
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MPoly, PolyError> {
        let base = match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                inner
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                let c: BigInt = digits.parse().map_err(|_| PolyError::BadCoefficient(digits))?;
                // a bare integer binds no exponent
                return Ok(MPoly::constant(c));
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = c.to_string();
                let v = Var::from_name(&name).ok_or(PolyError::UnknownVariable(name))?;
                self.pos += 1;
                MPoly::var(v)
            }
            _ => return Err(self.error("expected a number, variable or '('")),
        };
        if self.peek() == Some('^') {
            self.pos += 1;
            if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                return Err(self.error("expected exponent"));
            }
            let digits = self.digits();
            let e: u32 = digits.parse().map_err(|_| self.error("exponent out of range"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(|c| c.is_ascii_digit()) {
            s.push(c);
            self.pos += 1;
        }
        s
    }
}

// ---------------------------------------------------------------------------
// JSON form

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coeff: String,
}

// ---------------------------------------------------------------------------
// Truncated series in t

/// Coefficients of `t^0, t^1, ...`.
pub type Series = Vec<MPoly>;

fn coeff_at(s: &[MPoly], k: usize) -> MPoly {
    s.get(k).cloned().unwrap_or_default()
}

/// Product of two series, truncated to `t^order`.
pub fn series_mul(a: &[MPoly], b: &[MPoly], order: usize) -> Series {
    (0..=order)
        .map(|n| {
            let mut c = MPoly::zero();
            for (k, ak) in a.iter().enumerate().take(n + 1) {
                if let Some(bk) = b.get(n - k) {
                    if !ak.is_zero() && !bk.is_zero() {
                        c += &(ak * bk);
                    }
                }
            }
            c
        })
        .collect()
}

/// Truncated expansion of `1 / (1 - f)`; `f` must have zero constant term.
pub fn series_inverse(f: &[MPoly], order: usize) -> Result<Series, PolyError> {
    if f.first().is_some_and(|c| !c.is_zero()) {
        return Err(PolyError::ConstantTermNonzero);
    }
    let mut out: Series = Vec::with_capacity(order + 1);
    out.push(MPoly::one());
    for n in 1..=order {
        let mut c = MPoly::zero();
        for k in 1..=n.min(f.len().saturating_sub(1)) {
            if !f[k].is_zero() {
                c += &(&f[k] * &out[n - k]);
            }
        }
        out.push(c);
    }
    Ok(out)
}

/// True when `a` and `b` agree on every coefficient up to `t^order`.
pub fn series_eq_upto(a: &[MPoly], b: &[MPoly], order: usize) -> bool {
    (0..=order).all(|k| coeff_at(a, k) == coeff_at(b, k))
}

/// `numerator(t) / denominator(t)` with polynomial coefficients and
/// `denominator(0) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGF {
    numerator: Vec<MPoly>,
    denominator: Vec<MPoly>,
}

impl RationalGF {
    pub fn new(numerator: Vec<MPoly>, denominator: Vec<MPoly>) -> Result<Self, PolyError> {
        if !denominator.first().is_some_and(MPoly::is_one) {
            return Err(PolyError::DenominatorNotNormalized);
        }
        Ok(Self { numerator, denominator })
    }

    /// Builds from coefficient lists in text form, e.g. `["1", "d", "d-z"]`.
    pub fn parse(numerator: &[&str], denominator: &[&str]) -> Result<Self, PolyError> {
        let parse_all = |xs: &[&str]| xs.iter().map(|s| s.parse::<MPoly>()).collect::<Result<Vec<_>, _>>();
        Self::new(parse_all(numerator)?, parse_all(denominator)?)
    }

    pub fn numerator(&self) -> &[MPoly] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[MPoly] {
        &self.denominator
    }

    /// Coefficients of `t^0 ..= t^order`, from
    /// `c_n = num_n - sum_{k=1..n} den_k c_{n-k}`.
    pub fn expand(&self, order: usize) -> Series {
        let mut out: Series = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut c = coeff_at(&self.numerator, n);
            for k in 1..=n.min(self.denominator.len().saturating_sub(1)) {
                let dk = &self.denominator[k];
                if !dk.is_zero() {
                    c = &c - &(dk * &out[n - k]);
                }
            }
            out.push(c);
        }
        out
    }

    /// Checks `denominator * series == numerator (mod t^(N+1))` where `N+1` is the series length.
    pub fn satisfied_by(&self, series: &[MPoly]) -> bool {
        let Some(order) = series.len().checked_sub(1) else {
            return true;
        };
        series_eq_upto(&series_mul(&self.denominator, series, order), &self.numerator, order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn p(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print_canonical() {
        let s = "1+5q+6q^2+q^3+(5+12q+2q^2)x+(6+q)x^2";
        assert_eq!(p(s).to_string(), s);
        assert_eq!(p("x^2 + (6+q)x^2 - x^2 + 1").to_string(), "1+(6+q)x^2");
        assert_eq!(p("2 x^3").to_string(), "2x^3");
        assert_eq!(p("1-x").to_string(), "1-x");
        assert_eq!(p("-qx").to_string(), "-qx");
        assert_eq!(p("3qx - 1").to_string(), "-1+3qx");
        assert_eq!(p("(q-1)x").to_string(), "(-1+q)x");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("d(d-z)").to_string(), "d^2-dz");
        assert_eq!(p("2*u*u").to_string(), "2u^2");
        assert_eq!(p("qx+q^2x^2+x").to_string(), "(1+q)x+q^2x^2");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("1+".parse::<MPoly>(), Err(PolyError::Parse { .. })));
        assert!(matches!("y".parse::<MPoly>(), Err(PolyError::UnknownVariable(_))));
        assert!(matches!("(1+q".parse::<MPoly>(), Err(PolyError::Parse { .. })));
        assert!(matches!("q^".parse::<MPoly>(), Err(PolyError::Parse { .. })));
    }

    #[test]
    fn substitute_examples() {
        let got = p("d^2z").subs(&[(Var::D, p("q+x")), (Var::Z, p("q"))]);
        assert_eq!(got, p("q^3 + 2q^2x + qx^2"));
        let id = p("1+d").subs(&[(Var::D, p("d"))]);
        assert_eq!(id, p("1+d"));
        // unbound variables are untouched
        assert_eq!(p("d+z").subs(&[(Var::D, p("2"))]), p("2+z"));
    }

    #[test]
    fn expand_geometric() {
        let gf = RationalGF::parse(&["1"], &["1", "-1"]).unwrap();
        assert_eq!(gf.expand(3), vec![MPoly::one(); 4]);
        assert!(gf.satisfied_by(&gf.expand(10)));
        assert_eq!(
            RationalGF::parse(&["1"], &["2", "-1"]),
            Err(PolyError::DenominatorNotNormalized)
        );
    }

    #[test]
    fn series_inverse_examples() {
        let f = vec![MPoly::zero(), MPoly::one()];
        assert_eq!(series_inverse(&f, 2).unwrap(), vec![MPoly::one(); 3]);
        assert_eq!(series_inverse(&f, 0).unwrap(), vec![MPoly::one()]);
        assert_eq!(series_inverse(&[MPoly::one()], 3), Err(PolyError::ConstantTermNonzero));
        let inv = series_inverse(&f, 8).unwrap();
        let one_minus_f = vec![MPoly::one(), -MPoly::one()];
        assert!(series_eq_upto(&series_mul(&one_minus_f, &inv, 8), &[MPoly::one()], 8));
    }

    #[test]
    fn json_roundtrip_and_validation() {
        let poly = p("1+5q+(6+q)x^2");
        let form = poly.to_json_form(&[Var::Q, Var::X]).unwrap();
        assert_eq!(form.vars, ["q", "x"]);
        assert_eq!(
            form.terms[0],
            TermJson {
                exp: vec![0, 0],
                coeff: "1".into()
            }
        );
        assert_eq!(
            form.terms.last().unwrap(),
            &TermJson {
                exp: vec![1, 2],
                coeff: "1".into()
            }
        );
        assert_eq!(MPoly::from_json_form(&form).unwrap(), poly);
        assert_eq!(poly.to_json_form(&[Var::Q]), Err(PolyError::VariableNotListed(Var::X)));
        let bad = PolyJson {
            vars: vec!["w".into()],
            terms: vec![],
        };
        assert!(matches!(
            MPoly::from_json_form(&bad),
            Err(PolyError::UnknownVariable(_))
        ));
    }

    #[test]
    fn big_coefficients_do_not_wrap() {
        let big = p("2").pow(200);
        assert_eq!(big.constant_term(), BigInt::from(2).pow(200));
        assert!((&big - &big).is_zero());
        assert!(big.constant_term().is_positive());
    }
}
