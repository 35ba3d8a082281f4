//! Re-derivation of the simple-element tables from the band-generator
//! relations alone.
//!
//! Positive atom words of a fixed length are partitioned into classes of equal
//! braids by closing under the length-preserving relations. The simples are
//! the classes of prefixes of words for δ; everything else is read off the
//! classes. τ is obtained from `s·δ = δ·τ(s)` on words of length four, so it
//! does not go through the complement.

use alloc::vec;
use alloc::vec::Vec;

use crate::simple::{DualSimple, ALL, ATOMS, COUNT, RELATIONS};

/// Tables recomputed from scratch; compare with [`Self::matches_compiled`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedTables {
    pub weight: [u8; COUNT],
    pub complement: [DualSimple; COUNT],
    pub tau: [DualSimple; COUNT],
    pub divisors: [u16; COUNT],
    pub compose: [[Option<DualSimple>; COUNT]; COUNT],
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.0[i] != i {
            self.0[i] = self.0[self.0[i]];
            i = self.0[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

fn atom_digit(s: DualSimple) -> usize {
    ATOMS.iter().position(|a| *a == s).expect("atom")
}

fn encode(word: &[usize]) -> usize {
    word.iter().fold(0, |acc, d| acc * 6 + d)
}

fn decode(mut code: usize, len: usize) -> Vec<usize> {
    let mut w = vec![0; len];
    for slot in w.iter_mut().rev() {
        *slot = code % 6;
        code /= 6;
    }
    w
}

/// Equivalence classes of atom words of length `len`.
fn word_classes(len: usize) -> UnionFind {
    let n = 6usize.pow(len as u32);
    let mut uf = UnionFind::new(n);
    // every ordered pair of factorizations of the same weight-2 simple
    let mut moves = Vec::new();
    for (_, pairs) in RELATIONS.iter() {
        for &(l1, r1) in pairs.iter() {
            for &(l2, r2) in pairs.iter() {
                moves.push((
                    (atom_digit(l1), atom_digit(r1)),
                    (atom_digit(l2), atom_digit(r2)),
                ));
            }
        }
    }
    for code in 0..n {
        let w = decode(code, len);
        for i in 0..len.saturating_sub(1) {
            for &((a, b), (c, d)) in &moves {
                if w[i] == a && w[i + 1] == b {
                    let mut v = w.clone();
                    v[i] = c;
                    v[i + 1] = d;
                    uf.union(code, encode(&v));
                }
            }
        }
    }
    uf
}

pub fn derive_tables() -> DerivedTables {
    let mut classes: Vec<UnionFind> = (0..=4).map(word_classes).collect();
    let delta_word = [
        atom_digit(DualSimple::A12),
        atom_digit(DualSimple::A23),
        atom_digit(DualSimple::A34),
    ];
    let delta_class = classes[3].find(encode(&delta_word));

    // every word for δ; its prefixes are the words of the simples
    let delta_words: Vec<Vec<usize>> = (0..216)
        .filter(|&c| classes[3].find(c) == delta_class)
        .map(|c| decode(c, 3))
        .collect();

    // simple classes as (length, class root)
    let mut simple_classes: Vec<(usize, usize)> = Vec::new();
    for w in &delta_words {
        for len in 0..=3 {
            let root = classes[len].find(encode(&w[..len]));
            if !simple_classes.contains(&(len, root)) {
                simple_classes.push((len, root));
            }
        }
    }
    assert_eq!(simple_classes.len(), COUNT, "δ must have exactly 14 divisors");

    let identify = |classes: &mut Vec<UnionFind>, word: &[usize]| -> Option<DualSimple> {
        let root = classes[word.len()].find(encode(word));
        ALL.into_iter().find(|s| {
            let w: Vec<usize> = s.atom_word().iter().map(|a| atom_digit(*a)).collect();
            w.len() == word.len() && classes[w.len()].find(encode(&w)) == root
        })
    };
    let word_of = |s: DualSimple| -> Vec<usize> { s.atom_word().iter().map(|a| atom_digit(*a)).collect() };

    // each compiled simple must be one of the derived simple classes
    for s in ALL {
        let w = word_of(s);
        let root = classes[w.len()].find(encode(&w));
        assert!(simple_classes.contains(&(w.len(), root)));
    }

    let mut weight = [0u8; COUNT];
    let mut complement = [DualSimple::One; COUNT];
    let mut compose = [[None; COUNT]; COUNT];
    let mut divisors = [0u16; COUNT];
    for a in ALL {
        weight[a.index()] = word_of(a).len() as u8;
        for b in ALL {
            let mut w = word_of(a);
            w.extend(word_of(b));
            if w.len() <= 3 {
                let product = identify(&mut classes, &w);
                compose[a.index()][b.index()] = product;
                if product == Some(DualSimple::Delta) {
                    complement[a.index()] = b;
                }
            }
        }
    }
    for s in ALL {
        let root_len = weight[s.index()] as usize;
        let s_root = classes[root_len].find(encode(&word_of(s)));
        let words: Vec<Vec<usize>> = (0..6usize.pow(root_len as u32))
            .filter(|&c| classes[root_len].find(c) == s_root)
            .map(|c| decode(c, root_len))
            .collect();
        for t in ALL {
            let tl = weight[t.index()] as usize;
            let t_root = classes[tl].find(encode(&word_of(t)));
            if words
                .iter()
                .any(|w| tl <= w.len() && classes[tl].find(encode(&w[..tl])) == t_root)
            {
                divisors[s.index()] |= 1 << t.index();
            }
        }
    }

    // τ on atoms from s·δ = δ·t in length four, then extended multiplicatively
    let mut tau = [DualSimple::One; COUNT];
    for a in ATOMS {
        let mut left = vec![atom_digit(a)];
        left.extend_from_slice(&delta_word);
        let root = classes[4].find(encode(&left));
        let image = ATOMS
            .into_iter()
            .filter(|t| {
                let mut right = delta_word.to_vec();
                right.push(atom_digit(*t));
                classes[4].find(encode(&right)) == root
            })
            .collect::<Vec<_>>();
        assert_eq!(image.len(), 1);
        tau[a.index()] = image[0];
    }
    for s in ALL {
        let w: Vec<usize> = s
            .atom_word()
            .iter()
            .map(|a| atom_digit(tau[a.index()]))
            .collect();
        tau[s.index()] = identify(&mut classes, &w).expect("τ maps simples to simples");
    }

    DerivedTables {
        weight,
        complement,
        tau,
        divisors,
        compose,
    }
}

impl DerivedTables {
    pub fn matches_compiled(&self) -> bool {
        ALL.iter().all(|&s| {
            let i = s.index();
            self.weight[i] == s.weight()
                && self.complement[i] == s.complement()
                && self.tau[i] == s.tau()
                && self.divisors[i] == s.divisor_mask()
                && ALL
                    .iter()
                    .all(|&t| self.compose[i][t.index()] == s.compose(t))
        })
    }
}
