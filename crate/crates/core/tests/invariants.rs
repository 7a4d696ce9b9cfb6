use std::collections::BTreeSet;

use fibrun::words::{classify, monoid_words, phi, Language};
use fibrun::{build, Alphabet, BitWord, Family};

#[test]
fn r_and_f_monoids_have_equal_counts() {
    for n in 0..=20 {
        let r = monoid_words(Alphabet::R, n).unwrap().len();
        let f = monoid_words(Alphabet::F, n).unwrap().len();
        assert_eq!(r, f, "n = {n}");
    }
}

#[test]
fn monoids_match_their_language_descriptions() {
    // R monoid: run-constrained words. F monoid: Fibonacci words whose last 1 is followed by two 0s.
    let tail_ok = |w: &BitWord| {
        let len = w.len();
        (0..len).rev().find(|&i| w.bit(i)).is_none_or(|i| len - i >= 3)
    };
    for len in 0..=16 {
        let all: Vec<BitWord> = (0..1u64 << len).map(|b| BitWord::new(b, len).unwrap()).collect();
        let r: Vec<BitWord> = all
            .iter()
            .copied()
            .filter(|w| classify(w, Language::RunConstrained))
            .collect();
        let f: Vec<BitWord> = all
            .iter()
            .copied()
            .filter(|w| classify(w, Language::Fibonacci) && tail_ok(w))
            .collect();
        assert_eq!(monoid_words(Alphabet::R, len).unwrap(), r, "length {len}");
        assert_eq!(monoid_words(Alphabet::F, len).unwrap(), f, "length {len}");
    }
}

#[test]
fn lucas_run_vertices_are_fibonacci_run_vertices() {
    for n in 0..=16 {
        let r = build(Family::FibonacciRun, n).unwrap();
        let rl = build(Family::LucasRun, n).unwrap();
        assert!(rl.vertices().iter().all(|v| r.contains(v)), "n = {n}");
        let lambda = build(Family::Lucas, n).unwrap();
        let gamma = build(Family::Fibonacci, n).unwrap();
        assert!(lambda.vertices().iter().all(|v| gamma.contains(v)), "n = {n}");
    }
}

#[test]
fn phi_carries_fibonacci_cube_onto_fibonacci_run_graph() {
    let tail = BitWord::zeros(2).unwrap();
    for n in 0..=14 {
        let gamma = build(Family::Fibonacci, n).unwrap();
        let r = build(Family::FibonacciRun, n).unwrap();
        let image: BTreeSet<BitWord> = gamma
            .vertices()
            .iter()
            .map(|v| phi(&v.concat(&tail).unwrap()).unwrap())
            .collect();
        let target: BTreeSet<BitWord> = r.vertices().iter().map(|v| v.concat(&tail).unwrap()).collect();
        assert_eq!(image, target, "n = {n}");
    }
}

#[test]
fn vertex_sets_match_their_defining_languages() {
    let tail = BitWord::zeros(2).unwrap();
    for n in 0..=14 {
        let all = || (0..1u64 << n).map(move |b| BitWord::new(b, n).unwrap());
        let gamma: Vec<BitWord> = all().filter(|w| classify(w, Language::Fibonacci)).collect();
        assert_eq!(build(Family::Fibonacci, n).unwrap().vertices(), gamma.as_slice());
        let r: Vec<BitWord> = all()
            .filter(|w| classify(&w.concat(&tail).unwrap(), Language::RunConstrained))
            .collect();
        assert_eq!(build(Family::FibonacciRun, n).unwrap().vertices(), r.as_slice());
        let rl: Vec<BitWord> = r
            .iter()
            .copied()
            .filter(|w| classify(&w.push(false).unwrap(), Language::CircularRunConstrained))
            .collect();
        assert_eq!(build(Family::LucasRun, n).unwrap().vertices(), rl.as_slice());
    }
}
