//! Fixed-length binary words, the run-length languages built on them, and
//! unique factorization over the letter alphabets `F` and `R`.
//!
//! Words are written with the leftmost bit first (`u_1 u_2 ... u_n`). Internally
//! the leftmost bit is the most significant bit of a `u64`, so numeric order on
//! words of equal length is lexicographic order on their text form.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Longest word representable by [`BitWord`].
pub const MAX_LEN: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("word would exceed {MAX_LEN} bits (requested {0})")]
    TooLong(usize),
    #[error("invalid character {found:?} at offset {offset}; expected '0' or '1'")]
    BadChar { offset: usize, found: char },
    #[error("no letter of the alphabet matches at position {position}")]
    NotInLanguage { position: usize },
    #[error("bits {bits:#x} do not fit in a word of length {len}")]
    BitsOutOfRange { bits: u64, len: usize },
}

#[inline]
pub(crate) fn mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

/// A binary word of length at most [`MAX_LEN`]. The empty word is valid.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BitWord {
    bits: u64,
    len: u8,
}

impl BitWord {
    pub const EMPTY: BitWord = BitWord { bits: 0, len: 0 };

    /// Builds a word from its raw value, leftmost bit most significant.
    pub fn new(bits: u64, len: usize) -> Result<Self, WordError> {
        if len > MAX_LEN {
            return Err(WordError::TooLong(len));
        }
        if bits & !mask(len) != 0 {
            return Err(WordError::BitsOutOfRange { bits, len });
        }
        Ok(BitWord { bits, len: len as u8 })
    }

    /// Raw value with high bits masked off; `len` must not exceed [`MAX_LEN`].
    pub(crate) fn from_raw(bits: u64, len: usize) -> Self {
        debug_assert!(len <= MAX_LEN);
        BitWord {
            bits: bits & mask(len),
            len: len as u8,
        }
    }

    pub fn zeros(len: usize) -> Result<Self, WordError> {
        Self::new(0, len)
    }

    pub fn ones(len: usize) -> Result<Self, WordError> {
        if len > MAX_LEN {
            return Err(WordError::TooLong(len));
        }
        Ok(BitWord {
            bits: mask(len),
            len: len as u8,
        })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Raw value, leftmost bit most significant.
    #[inline]
    pub fn raw(&self) -> u64 {
        self.bits
    }

    /// Hamming weight.
    #[inline]
    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Mask selecting bit `i` (0-based from the left) in [`BitWord::raw`].
    #[inline]
    pub fn position_mask(&self, i: usize) -> u64 {
        debug_assert!(i < self.len());
        1u64 << (self.len() - 1 - i)
    }

    /// Bit `i`, counted from the left starting at 0.
    #[inline]
    pub fn bit(&self, i: usize) -> bool {
        self.bits & self.position_mask(i) != 0
    }

    pub fn flipped(&self, i: usize) -> BitWord {
        BitWord {
            bits: self.bits ^ self.position_mask(i),
            len: self.len,
        }
    }

    pub fn push(&self, bit: bool) -> Result<BitWord, WordError> {
        if self.len() == MAX_LEN {
            return Err(WordError::TooLong(MAX_LEN + 1));
        }
        Ok(BitWord {
            bits: (self.bits << 1) | bit as u64,
            len: self.len + 1,
        })
    }

    pub fn concat(&self, other: &BitWord) -> Result<BitWord, WordError> {
        let len = self.len() + other.len();
        if len > MAX_LEN {
            return Err(WordError::TooLong(len));
        }
        let head = if other.len() == 64 { 0 } else { self.bits << other.len() };
        Ok(BitWord {
            bits: head | other.bits,
            len: len as u8,
        })
    }

    /// First `k` bits.
    pub fn prefix(&self, k: usize) -> BitWord {
        assert!(k <= self.len(), "prefix longer than word");
        if k == 0 {
            return BitWord::EMPTY;
        }
        BitWord {
            bits: self.bits >> (self.len() - k),
            len: k as u8,
        }
    }

    /// Cyclic left rotation so that bit `k` becomes the first bit.
    pub fn rotate_left(&self, k: usize) -> BitWord {
        let n = self.len();
        if n == 0 {
            return *self;
        }
        let k = k % n;
        if k == 0 {
            return *self;
        }
        let bits = ((self.bits << k) | (self.bits >> (n - k))) & mask(n);
        BitWord { bits, len: self.len }
    }

    /// Maximal runs as `(bit, length)` pairs, left to right.
    pub fn runs(&self) -> Vec<(bool, usize)> {
        let mut out: Vec<(bool, usize)> = Vec::new();
        for i in 0..self.len() {
            let b = self.bit(i);
            match out.last_mut() {
                Some((last, count)) if *last == b => *count += 1,
                _ => out.push((b, 1)),
            }
        }
        out
    }

    /// `self <= other` bitwise: every 1 of `self` is a 1 of `other`.
    pub fn is_below(&self, other: &BitWord) -> bool {
        self.len == other.len && self.bits & !other.bits == 0
    }

    pub fn hamming(&self, other: &BitWord) -> usize {
        debug_assert_eq!(self.len, other.len);
        (self.bits ^ other.bits).count_ones() as usize
    }
}

impl Ord for BitWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then(self.bits.cmp(&other.bits))
    }
}

impl PartialOrd for BitWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.bit(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitWord(\"{self}\")")
    }
}

impl FromStr for BitWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut w = BitWord::EMPTY;
        for (offset, c) in s.chars().enumerate() {
            let bit = match c {
                '0' => false,
                '1' => true,
                found => return Err(WordError::BadChar { offset, found }),
            };
            w = w.push(bit)?;
        }
        Ok(w)
    }
}

/// The three languages of binary words used to define the graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Language {
    /// No two consecutive 1s.
    Fibonacci,
    /// Every run of 1s is immediately followed by a strictly longer run of 0s.
    RunConstrained,
    /// As [`Language::RunConstrained`], reading the word cyclically.
    CircularRunConstrained,
}

pub fn classify(s: &BitWord, kind: Language) -> bool {
    match kind {
        Language::Fibonacci => s.raw() & (s.raw() >> 1) == 0,
        Language::RunConstrained => is_run_constrained(s),
        Language::CircularRunConstrained => is_circular_run_constrained(s),
    }
}

fn is_run_constrained(s: &BitWord) -> bool {
    let runs = s.runs();
    runs.iter()
        .enumerate()
        .all(|(i, &(bit, len))| !bit || matches!(runs.get(i + 1), Some(&(false, zeros)) if zeros > len))
}

fn is_circular_run_constrained(s: &BitWord) -> bool {
    let n = s.len();
    let w = s.weight();
    if w == 0 {
        return true;
    }
    if w == n {
        return false;
    }
    // Start at a 1 preceded (cyclically) by a 0 so no run of 1s wraps around.
    let start = (0..n)
        .find(|&i| s.bit(i) && !s.bit((i + n - 1) % n))
        .expect("a word with both bits has a 0->1 boundary");
    is_run_constrained(&s.rotate_left(start))
}

/// The two infinite letter alphabets generating the extended Fibonacci and
/// run-constrained monoids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Alphabet {
    /// `0, 100, 10100, 1010100, ...`: letter `i` is `(10)^i 0`.
    F,
    /// `0, 100, 11000, 1110000, ...`: letter `i` is `1^i 0^(i+1)`.
    R,
}

impl Alphabet {
    /// Letter `i`; both alphabets have exactly one letter of each odd length `2i+1`.
    pub fn letter(&self, i: usize) -> Result<BitWord, WordError> {
        let len = 2 * i + 1;
        if len > MAX_LEN {
            return Err(WordError::TooLong(len));
        }
        let bits = match self {
            Alphabet::F => (0..i).fold(0u64, |acc, _| (acc << 2) | 0b10) << 1,
            Alphabet::R => mask(i) << (i + 1),
        };
        BitWord::new(bits, len)
    }

    /// Every letter of length at most `max_len`, in index order.
    pub fn letters_up_to(&self, max_len: usize) -> Vec<BitWord> {
        (0..)
            .take_while(|i| 2 * i < max_len.min(MAX_LEN))
            .map(|i| self.letter(i).expect("length checked"))
            .collect()
    }
}

/// Unique left-to-right factorization of `s` into letter indices.
///
/// Every letter is determined by its leading run, so the parse never backtracks.
/// On failure the error carries the start of the letter that could not be completed.
pub fn factorize(s: &BitWord, alphabet: Alphabet) -> Result<Vec<usize>, WordError> {
    let n = s.len();
    let mut pos = 0;
    let mut out = Vec::new();
    while pos < n {
        if !s.bit(pos) {
            out.push(0);
            pos += 1;
            continue;
        }
        let start = pos;
        let fail = WordError::NotInLanguage { position: start };
        match alphabet {
            Alphabet::R => {
                let mut ones = 0;
                while pos < n && s.bit(pos) {
                    ones += 1;
                    pos += 1;
                }
                for _ in 0..=ones {
                    if pos >= n || s.bit(pos) {
                        return Err(fail);
                    }
                    pos += 1;
                }
                out.push(ones);
            }
            Alphabet::F => {
                let mut pairs = 0;
                loop {
                    // expecting "10"
                    if pos + 1 >= n || !s.bit(pos) || s.bit(pos + 1) {
                        return Err(fail);
                    }
                    pairs += 1;
                    pos += 2;
                    if pos >= n {
                        return Err(fail);
                    }
                    if !s.bit(pos) {
                        pos += 1;
                        break;
                    }
                }
                out.push(pairs);
            }
        }
    }
    Ok(out)
}

/// Concatenation of the given letters.
pub fn concat_letters(indices: &[usize], alphabet: Alphabet) -> Result<BitWord, WordError> {
    indices
        .iter()
        .try_fold(BitWord::EMPTY, |acc, &i| acc.concat(&alphabet.letter(i)?))
}

/// Letterwise bijection from the `F` monoid onto the `R` monoid.
pub fn phi(s: &BitWord) -> Result<BitWord, WordError> {
    concat_letters(&factorize(s, Alphabet::F)?, Alphabet::R)
}

pub fn phi_inverse(s: &BitWord) -> Result<BitWord, WordError> {
    concat_letters(&factorize(s, Alphabet::R)?, Alphabet::F)
}

/// All words of length exactly `len` in the monoid generated by `alphabet`,
/// sorted, built by appending letters.
pub fn monoid_words(alphabet: Alphabet, len: usize) -> Result<Vec<BitWord>, WordError> {
    if len > MAX_LEN {
        return Err(WordError::TooLong(len));
    }
    let letters = alphabet.letters_up_to(len);
    let mut out = Vec::new();
    let mut stack = vec![BitWord::EMPTY];
    while let Some(w) = stack.pop() {
        if w.len() == len {
            out.push(w);
            continue;
        }
        for l in letters.iter().take_while(|l| w.len() + l.len() <= len) {
            stack.push(w.concat(l)?);
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BitWord {
        s.parse().unwrap()
    }

    #[test]
    fn classify_examples() {
        assert!(classify(&w("01001110000"), Language::RunConstrained));
        for kind in [
            Language::Fibonacci,
            Language::RunConstrained,
            Language::CircularRunConstrained,
        ] {
            assert!(classify(&BitWord::EMPTY, kind));
        }
        assert!(!classify(&w("110"), Language::CircularRunConstrained));
        assert!(classify(&w("100100"), Language::CircularRunConstrained));
        assert!(!classify(&w("1"), Language::CircularRunConstrained));
        assert!(!classify(&w("111"), Language::CircularRunConstrained));
        assert!(classify(&w("000"), Language::CircularRunConstrained));
        // wraps around: 1s at both ends form one cyclic run of length 2
        assert!(!classify(&w("1001"), Language::CircularRunConstrained));
        assert!(classify(&w("1000001"), Language::CircularRunConstrained));
        assert!(classify(&w("10000001"), Language::CircularRunConstrained));
        assert!(!classify(&w("0110"), Language::Fibonacci));
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(&w("01001110000"), Alphabet::R).unwrap(), vec![0, 1, 3]);
        assert_eq!(factorize(&BitWord::EMPTY, Alphabet::R).unwrap(), Vec::<usize>::new());
        assert_eq!(factorize(&w("1010100"), Alphabet::F).unwrap(), vec![3]);
        assert_eq!(factorize(&w("0100"), Alphabet::F).unwrap(), vec![0, 1]);
    }

    #[test]
    fn factorize_reports_earliest_failure() {
        assert_eq!(
            factorize(&w("0001100"), Alphabet::R),
            Err(WordError::NotInLanguage { position: 3 })
        );
        assert_eq!(
            factorize(&w("10"), Alphabet::F),
            Err(WordError::NotInLanguage { position: 0 })
        );
        assert_eq!(
            factorize(&w("0110"), Alphabet::F),
            Err(WordError::NotInLanguage { position: 1 })
        );
        assert_eq!(
            factorize(&w("01"), Alphabet::R),
            Err(WordError::NotInLanguage { position: 1 })
        );
    }

    #[test]
    fn letters() {
        let f: Vec<String> = Alphabet::F.letters_up_to(7).iter().map(|l| l.to_string()).collect();
        assert_eq!(f, ["0", "100", "10100", "1010100"]);
        let r: Vec<String> = Alphabet::R.letters_up_to(7).iter().map(|l| l.to_string()).collect();
        assert_eq!(r, ["0", "100", "11000", "1110000"]);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&w("10100")).unwrap(), w("11000"));
        assert_eq!(phi(&w("0")).unwrap(), w("0"));
        assert_eq!(phi(&w("0100")).unwrap(), w("0100"));
        assert_eq!(phi_inverse(&w("11000")).unwrap(), w("10100"));
        assert!(phi(&w("11")).is_err());
    }

    #[test]
    fn word_basics() {
        let s = w("0110");
        assert_eq!(s.len(), 4);
        assert_eq!(s.weight(), 2);
        assert_eq!(s.to_string(), "0110");
        assert_eq!(s.prefix(2), w("01"));
        assert_eq!(s.rotate_left(1), w("1100"));
        assert_eq!(s.flipped(0), w("1110"));
        assert_eq!(w("01").concat(&w("10")).unwrap(), w("0110"));
        assert!(w("0100").is_below(&w("0110")));
        assert!(!w("1000").is_below(&w("0110")));
        assert!(matches!(
            "012".parse::<BitWord>(),
            Err(WordError::BadChar { offset: 2, .. })
        ));
        let long = BitWord::ones(64).unwrap();
        assert_eq!(long.push(false), Err(WordError::TooLong(65)));
        assert_eq!(long.rotate_left(3), long);
        assert!(w("01") < w("10"));
        assert!(w("11") < w("000"));
    }

    #[test]
    fn run_constrained_words_end_in_double_zero() {
        for len in 2..=14 {
            for raw in 0..(1u64 << len) {
                let s = BitWord::from_raw(raw, len);
                if classify(&s, Language::RunConstrained) {
                    assert_eq!(raw & 0b11, 0, "{s}");
                }
            }
        }
    }
}
