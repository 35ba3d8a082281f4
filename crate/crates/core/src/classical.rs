//! Word problem in the Artin generators σ₁, σ₂, σ₃ via permutation braids.
//!
//! Independent of the band-generator tables: simples are the 24 permutations
//! of four points, multiplied as maps, and everything else is computed by
//! enumeration. Used to referee the dual engine.

use alloc::vec::Vec;
use core::fmt;

use crate::braid::BraidWord;
use crate::simple::DualSimple;

/// A positive permutation braid, stored as the images of `0..4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PermSimple(pub [u8; 4]);

impl PermSimple {
    pub const IDENTITY: PermSimple = PermSimple([0, 1, 2, 3]);
    pub const DELTA: PermSimple = PermSimple([3, 2, 1, 0]);

    /// The transposition of positions `i - 1` and `i`, for `i` in 1..=3.
    pub fn sigma(i: u8) -> PermSimple {
        assert!((1..=3).contains(&i), "σ index out of range");
        let mut p = [0, 1, 2, 3];
        p.swap(i as usize - 1, i as usize);
        PermSimple(p)
    }

    /// All 24 permutations.
    pub fn all() -> Vec<PermSimple> {
        PERMS.iter().map(|&p| PermSimple(p)).collect()
    }

    /// `(self·other)[k] = self[other[k]]`.
    pub fn then(self, other: PermSimple) -> PermSimple {
        let mut p = [0; 4];
        for (k, slot) in p.iter_mut().enumerate() {
            *slot = self.0[other.0[k] as usize];
        }
        PermSimple(p)
    }

    pub fn inverse(self) -> PermSimple {
        let mut p = [0; 4];
        for k in 0..4 {
            p[self.0[k] as usize] = k as u8;
        }
        PermSimple(p)
    }

    /// Number of inversions, i.e. the length of the positive braid.
    pub fn length(self) -> u32 {
        inversions(self.0)
    }

    /// `self ≼ other`: `other = self·t` with lengths adding up.
    pub fn is_prefix_of(self, other: PermSimple) -> bool {
        prefix(self.0, other.0)
    }

    /// The longest common prefix.
    pub fn meet(self, other: PermSimple) -> PermSimple {
        PermSimple(PERMS[MEET[self.index()][other.index()] as usize])
    }

    /// Position in lexicographic order of the image tuples.
    pub const fn index(self) -> usize {
        perm_index(self.0)
    }

    /// `∂a = a⁻¹Δ`.
    pub fn right_complement(self) -> PermSimple {
        self.inverse().then(PermSimple::DELTA)
    }

    /// `ΔaΔ⁻¹`.
    pub fn flip(self) -> PermSimple {
        PermSimple::DELTA.then(self).then(PermSimple::DELTA)
    }

    pub fn left_weighted(self, next: PermSimple) -> bool {
        self.right_complement().meet(next) == PermSimple::IDENTITY
    }
}

const FACTORIAL: [usize; 4] = [6, 2, 1, 1];

const fn perm_index(p: [u8; 4]) -> usize {
    let mut index = 0;
    let mut i = 0;
    while i < 4 {
        let mut smaller_after = 0;
        let mut j = i + 1;
        while j < 4 {
            if p[j] < p[i] {
                smaller_after += 1;
            }
            j += 1;
        }
        index += smaller_after * FACTORIAL[i];
        i += 1;
    }
    index
}

const fn perm_at(mut index: usize) -> [u8; 4] {
    let mut unused = [true; 4];
    let mut p = [0u8; 4];
    let mut i = 0;
    while i < 4 {
        let mut rank = index / FACTORIAL[i];
        index %= FACTORIAL[i];
        let mut v = 0;
        loop {
            if unused[v] {
                if rank == 0 {
                    break;
                }
                rank -= 1;
            }
            v += 1;
        }
        unused[v] = false;
        p[i] = v as u8;
        i += 1;
    }
    p
}

const PERMS: [[u8; 4]; 24] = {
    let mut t = [[0u8; 4]; 24];
    let mut i = 0;
    while i < 24 {
        t[i] = perm_at(i);
        i += 1;
    }
    t
};

const fn inversions(p: [u8; 4]) -> u32 {
    let mut n = 0;
    let mut i = 0;
    while i < 4 {
        let mut j = i + 1;
        while j < 4 {
            if p[i] > p[j] {
                n += 1;
            }
            j += 1;
        }
        i += 1;
    }
    n
}

/// `z ≼ x` in the positive monoid: `z⁻¹x` has the complementary length.
const fn prefix(z: [u8; 4], x: [u8; 4]) -> bool {
    let mut zinv = [0u8; 4];
    let mut k = 0;
    while k < 4 {
        zinv[z[k] as usize] = k as u8;
        k += 1;
    }
    let mut q = [0u8; 4];
    k = 0;
    while k < 4 {
        q[k] = zinv[x[k] as usize];
        k += 1;
    }
    inversions(z) + inversions(q) == inversions(x)
}

const MEET: [[u8; 24]; 24] = {
    let mut t = [[0u8; 24]; 24];
    let mut a = 0;
    while a < 24 {
        let mut b = 0;
        while b < 24 {
            let mut best = 0;
            let mut z = 0;
            while z < 24 {
                if prefix(PERMS[z], PERMS[a])
                    && prefix(PERMS[z], PERMS[b])
                    && inversions(PERMS[z]) > inversions(PERMS[best])
                {
                    best = z;
                }
                z += 1;
            }
            t[a][b] = best as u8;
            b += 1;
        }
        a += 1;
    }
    t
};

/// `σ_index^(±1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ArtinLetter {
    pub index: u8,
    pub inverse: bool,
}

impl ArtinLetter {
    pub fn new(index: u8, inverse: bool) -> ArtinLetter {
        assert!((1..=3).contains(&index), "σ index out of range");
        ArtinLetter { index, inverse }
    }

    pub fn inverted(self) -> ArtinLetter {
        ArtinLetter {
            inverse: !self.inverse,
            ..self
        }
    }
}

impl fmt::Display for ArtinLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.index)?;
        if self.inverse {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

pub type ArtinWord = Vec<ArtinLetter>;

/// `Δ^p · x₁ ⋯ x_r` with every factor a proper nontrivial permutation braid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ClassicalNF {
    pub p: i64,
    pub factors: Vec<PermSimple>,
}

impl ClassicalNF {
    pub fn is_identity(&self) -> bool {
        self.p == 0 && self.factors.is_empty()
    }

    /// Word length in the permutation-braid generators.
    pub fn word_length(&self) -> u64 {
        let (p, r) = (self.p, self.factors.len() as i64);
        let len = if p >= 0 {
            p + r
        } else if -p <= r {
            r
        } else {
            -p
        };
        len as u64
    }
}

pub fn classical_normalize(word: &[ArtinLetter]) -> ClassicalNF {
    let mut p = 0i64;
    let mut factors: Vec<PermSimple> = Vec::new();
    for letter in word {
        let s = PermSimple::sigma(letter.index);
        if letter.inverse {
            // σ⁻¹ = Δ⁻¹·(Δσ⁻¹); move Δ⁻¹ to the front past the earlier factors
            for f in factors.iter_mut() {
                *f = f.flip();
            }
            p -= 1;
            factors.push(PermSimple::DELTA.then(s.inverse()));
        } else {
            factors.push(s);
        }
    }

    // local sliding until every adjacent pair is left-weighted
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..factors.len().saturating_sub(1) {
            let (a, b) = (factors[i], factors[i + 1]);
            let t = a.right_complement().meet(b);
            if t != PermSimple::IDENTITY {
                factors[i] = a.then(t);
                factors[i + 1] = t.inverse().then(b);
                changed = true;
            }
        }
    }
    let leading = factors
        .iter()
        .take_while(|f| **f == PermSimple::DELTA)
        .count();
    p += leading as i64;
    factors.drain(..leading);
    factors.retain(|f| *f != PermSimple::IDENTITY);
    ClassicalNF { p, factors }
}

pub fn classical_is_trivial(word: &[ArtinLetter]) -> bool {
    classical_normalize(word).is_identity()
}

fn sigma_word(indices: &[i8]) -> ArtinWord {
    indices
        .iter()
        .map(|&i| ArtinLetter::new(i.unsigned_abs(), i < 0))
        .collect()
}

/// Artin word of a band generator or of δ.
pub fn artin_word_of(s: DualSimple) -> ArtinWord {
    use DualSimple::*;
    match s {
        A12 => sigma_word(&[1]),
        A23 => sigma_word(&[2]),
        A34 => sigma_word(&[3]),
        A13 => sigma_word(&[-2, 1, 2]),
        A24 => sigma_word(&[-3, 2, 3]),
        A14 => sigma_word(&[-3, -2, 1, 2, 3]),
        Delta => sigma_word(&[1, 2, 3]),
        One => Vec::new(),
        other => {
            let mut w = Vec::new();
            for a in other.atom_word() {
                w.extend(artin_word_of(*a));
            }
            w
        }
    }
}

/// Rewrites a band-generator word in the Artin generators.
pub fn bkl_to_artin(word: &BraidWord) -> ArtinWord {
    let mut out = Vec::new();
    for letter in word.letters() {
        let w = artin_word_of(letter.generator());
        if letter.is_inverse() {
            out.extend(w.iter().rev().map(|l| l.inverted()));
        } else {
            out.extend(w);
        }
    }
    out
}
