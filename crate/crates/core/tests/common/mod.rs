#![allow(dead_code)]

use bkl4::simple::{ATOMS, PROPER, RELATIONS};
use bkl4::sliding::is_rigid;
use bkl4::{BraidWord, DualSimple, GarsideBraid, Letter};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform letters over the six atoms and δ, both signs.
pub fn random_word(rng: &mut ChaCha8Rng, max_len: usize) -> BraidWord {
    let n = rng.gen_range(0..=max_len);
    (0..n)
        .map(|_| {
            let g = if rng.gen_ratio(1, 7) {
                DualSimple::Delta
            } else {
                *ATOMS.choose(rng).unwrap()
            };
            Letter::new(g, rng.gen_bool(0.5)).unwrap()
        })
        .collect()
}

/// A braid with at most `max_factors` canonical factors.
pub fn random_braid(rng: &mut ChaCha8Rng, max_factors: usize) -> GarsideBraid {
    let n = rng.gen_range(0..=max_factors);
    let factors: Vec<DualSimple> = (0..n).map(|_| *PROPER.choose(rng).unwrap()).collect();
    GarsideBraid::from_product(rng.gen_range(-3..=3), &factors)
}

/// A normal form with canonical length drawn uniformly from `0..=max_len`,
/// built as a random walk through left-weighted successors.
pub fn random_normal_form(rng: &mut ChaCha8Rng, max_len: usize) -> GarsideBraid {
    let len = rng.gen_range(0..=max_len);
    let mut factors: Vec<DualSimple> = Vec::with_capacity(len);
    for _ in 0..len {
        let next: Vec<DualSimple> = match factors.last() {
            Some(&last) => PROPER.iter().copied().filter(|&s| last.left_weighted(s)).collect(),
            None => PROPER.to_vec(),
        };
        factors.push(*next.choose(rng).unwrap());
    }
    GarsideBraid::from_normal_form(rng.gen_range(-3..=3), factors).unwrap()
}

/// Rewrites the word by a random chain of relation moves and free
/// insertions of `g·g⁻¹`, keeping the braid unchanged.
pub fn rewrite(rng: &mut ChaCha8Rng, word: &BraidWord, moves: usize) -> BraidWord {
    let mut letters: Vec<Letter> = word.letters().to_vec();
    for _ in 0..moves {
        if rng.gen_ratio(1, 4) || letters.len() < 2 {
            let g = *ATOMS.choose(rng).unwrap();
            let a = Letter::new(g, rng.gen_bool(0.5)).unwrap();
            let at = rng.gen_range(0..=letters.len());
            letters.splice(at..at, [a, a.inverted()]);
            continue;
        }
        let i = rng.gen_range(0..letters.len() - 1);
        let (l, r) = (letters[i], letters[i + 1]);
        if l.is_inverse() != r.is_inverse() {
            continue;
        }
        let inverse = l.is_inverse();
        // for inverse letters the positive pair is read right to left
        let pair = if inverse {
            (r.generator(), l.generator())
        } else {
            (l.generator(), r.generator())
        };
        for (_, pairs) in RELATIONS.iter() {
            if pairs.contains(&pair) {
                let (a, b) = *pairs.choose(rng).unwrap();
                let (a, b) = if inverse { (b, a) } else { (a, b) };
                letters[i] = Letter::new(a, inverse).unwrap();
                letters[i + 1] = Letter::new(b, inverse).unwrap();
            }
        }
    }
    letters.into_iter().collect()
}

/// Rigid braids containing factors of weight 1 and weight 2, grown by a
/// random walk through left-weighted successors.
pub fn rigid_mixed(rng: &mut ChaCha8Rng, max_len: usize) -> GarsideBraid {
    loop {
        let len = rng.gen_range(2..=max_len);
        let mut factors = vec![*PROPER.choose(rng).unwrap()];
        while factors.len() < len {
            let last = *factors.last().unwrap();
            let next: Vec<DualSimple> = PROPER
                .iter()
                .copied()
                .filter(|&s| last.left_weighted(s))
                .collect();
            factors.push(*next.choose(rng).unwrap());
        }
        let mixed = factors.iter().any(|f| f.weight() == 1) && factors.iter().any(|f| f.weight() == 2);
        let y = GarsideBraid::from_normal_form(rng.gen_range(-2..=2), factors).unwrap();
        if mixed && is_rigid(&y) {
            return y;
        }
    }
}

/// The cyclic seed pattern p14-23·c124·a13, repeated and twisted by τ.
pub fn rigid_mixed_seeded(rng: &mut ChaCha8Rng) -> GarsideBraid {
    use DualSimple::*;
    let reps = rng.gen_range(1..=4);
    let mut factors = Vec::new();
    for _ in 0..reps {
        factors.extend_from_slice(&[P14_23, C124, A13]);
    }
    let y = GarsideBraid::from_normal_form(0, factors).unwrap();
    y.tau_power(rng.gen_range(0..4))
}

/// Exponents for an admissible 𝓔-family instance with `r` blocks.
pub fn e_exponents(rng: &mut ChaCha8Rng, r: usize, max_k: u32) -> Vec<u32> {
    (0..r).map(|_| rng.gen_range(1..=max_k)).collect()
}

pub fn from_letters(letters: &[(DualSimple, bool)]) -> BraidWord {
    letters
        .iter()
        .map(|&(g, inv)| Letter::new(g, inv).unwrap())
        .collect()
}
