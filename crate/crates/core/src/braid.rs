//! Braid words and left normal forms in the dual structure.

use alloc::vec::Vec;
use core::fmt;

use crate::simple::DualSimple::{self, Delta, One};

/// A band generator or δ, possibly inverted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    generator: DualSimple,
    inverse: bool,
}

impl Letter {
    /// `None` unless `generator` is an atom or δ.
    pub fn new(generator: DualSimple, inverse: bool) -> Option<Letter> {
        (generator.is_atom() || generator == Delta).then_some(Letter { generator, inverse })
    }

    pub fn generator(self) -> DualSimple {
        self.generator
    }

    pub fn is_inverse(self) -> bool {
        self.inverse
    }

    pub fn inverted(self) -> Letter {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }
}

/// A word in the band generators and δ. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BraidWord {
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: Letter) {
        self.letters.push(letter);
    }

    /// Appends `s^exponent`, spelling `s` with its fixed atom word.
    pub fn push_simple(&mut self, s: DualSimple, exponent: i64) {
        let atoms: &[DualSimple] = if s == Delta { &[Delta] } else { s.atom_word() };
        for _ in 0..exponent.unsigned_abs() {
            if exponent > 0 {
                self.letters
                    .extend(atoms.iter().map(|&g| Letter { generator: g, inverse: false }));
            } else {
                self.letters
                    .extend(atoms.iter().rev().map(|&g| Letter { generator: g, inverse: true }));
            }
        }
    }

    pub fn append(&mut self, other: &BraidWord) {
        self.letters.extend_from_slice(&other.letters);
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            letters: self.letters.iter().rev().map(|l| l.inverted()).collect(),
        }
    }

    pub fn normalize(&self) -> GarsideBraid {
        normalize(self)
    }
}

impl FromIterator<Letter> for BraidWord {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        BraidWord {
            letters: iter.into_iter().collect(),
        }
    }
}

/// A braid in left normal form δ^inf · x₁ ⋯ x_r.
///
/// Factors are proper simples and consecutive pairs are left-weighted, so
/// structural equality is equality in B₄. The derived ordering (infimum
/// first, then factors lexicographically in canonical order) is the
/// canonical order used to pick representatives.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GarsideBraid {
    inf: i64,
    factors: Vec<DualSimple>,
}

/// Numeric invariants of a normal form.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Invariants {
    pub inf: i64,
    pub sup: i64,
    pub canonical_length: usize,
    /// Geodesic length over simples and their inverses.
    pub word_length: u64,
    pub lambda: i64,
    pub k1: usize,
    pub k2: usize,
}

/// One entry of an un-normalized product.
#[derive(Clone, Copy, Debug)]
enum Piece {
    Simple(DualSimple),
    DeltaPower(i64),
}

impl GarsideBraid {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn delta_power(k: i64) -> Self {
        GarsideBraid {
            inf: k,
            factors: Vec::new(),
        }
    }

    pub fn from_simple(s: DualSimple) -> Self {
        match s {
            One => Self::identity(),
            Delta => Self::delta_power(1),
            s => GarsideBraid {
                inf: 0,
                factors: alloc::vec![s],
            },
        }
    }

    /// Accepts `(inf, factors)` only if it already is a left normal form.
    pub fn from_normal_form(inf: i64, factors: Vec<DualSimple>) -> Option<Self> {
        let proper = factors.iter().all(|f| f.is_proper());
        let weighted = factors.windows(2).all(|w| w[0].left_weighted(w[1]));
        (proper && weighted).then_some(GarsideBraid { inf, factors })
    }

    /// Normal form of δ^inf · s₁ ⋯ s_k for arbitrary simples.
    pub fn from_product(inf: i64, simples: &[DualSimple]) -> Self {
        let mut pieces = Vec::with_capacity(simples.len() + 1);
        pieces.push(Piece::DeltaPower(inf));
        pieces.extend(simples.iter().map(|&s| Piece::Simple(s)));
        from_pieces(&pieces)
    }

    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[DualSimple] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    pub fn is_delta_power(&self) -> bool {
        self.factors.is_empty()
    }

    /// λ: the homomorphism to ℤ sending every band generator to 1.
    pub fn lambda(&self) -> i64 {
        3 * self.inf + self.factors.iter().map(|f| f.weight() as i64).sum::<i64>()
    }

    pub fn word_length(&self) -> u64 {
        let (p, r) = (self.inf, self.factors.len() as i64);
        let len = if p >= 0 {
            p + r
        } else if -p <= r {
            r
        } else {
            -p
        };
        len as u64
    }

    pub fn invariants(&self) -> Invariants {
        let k1 = self.factors.iter().filter(|f| f.weight() == 1).count();
        Invariants {
            inf: self.inf,
            sup: self.sup(),
            canonical_length: self.factors.len(),
            word_length: self.word_length(),
            lambda: self.lambda(),
            k1,
            k2: self.factors.len() - k1,
        }
    }

    pub fn multiply(&self, other: &GarsideBraid) -> GarsideBraid {
        let mut pieces = Vec::with_capacity(self.factors.len() + other.factors.len() + 2);
        pieces.push(Piece::DeltaPower(self.inf));
        pieces.extend(self.factors.iter().map(|&s| Piece::Simple(s)));
        pieces.push(Piece::DeltaPower(other.inf));
        pieces.extend(other.factors.iter().map(|&s| Piece::Simple(s)));
        from_pieces(&pieces)
    }

    /// Right multiplication by a single simple.
    pub fn multiply_simple(&self, s: DualSimple) -> GarsideBraid {
        let mut factors = self.factors.clone();
        factors.push(s);
        normal_form(self.inf, factors)
    }

    pub fn invert(&self) -> GarsideBraid {
        // x_i⁻¹ = δ⁻¹ · τ⁻¹(∂x_i)
        let mut pieces = Vec::with_capacity(2 * self.factors.len() + 1);
        for &f in self.factors.iter().rev() {
            pieces.push(Piece::DeltaPower(-1));
            pieces.push(Piece::Simple(f.complement().tau_inv()));
        }
        pieces.push(Piece::DeltaPower(-self.inf));
        from_pieces(&pieces)
    }

    pub fn power(&self, m: i64) -> GarsideBraid {
        let base = if m < 0 { self.invert() } else { self.clone() };
        let mut result = GarsideBraid::identity();
        let mut square = base;
        let mut e = m.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                result = result.multiply(&square);
            }
            e >>= 1;
            if e > 0 {
                square = square.multiply(&square);
            }
        }
        result
    }

    /// z⁻¹ · self · z.
    pub fn conjugate(&self, z: &GarsideBraid) -> GarsideBraid {
        z.invert().multiply(self).multiply(z)
    }

    /// s⁻¹ · self · s for a simple s.
    pub fn conjugate_by_simple(&self, s: DualSimple) -> GarsideBraid {
        match s {
            One => self.clone(),
            Delta => self.tau_braid(),
            _ => {
                // s⁻¹ δ^p X s = δ^(p-1) τ^(p-1)(∂s) X s
                let mut seq = Vec::with_capacity(self.factors.len() + 2);
                seq.push(s.complement().tau_pow(self.inf - 1));
                seq.extend_from_slice(&self.factors);
                seq.push(s);
                normal_form(self.inf - 1, seq)
            }
        }
    }

    /// δ⁻¹ · self · δ, applied factorwise.
    pub fn tau_braid(&self) -> GarsideBraid {
        self.tau_power(1)
    }

    pub fn tau_power(&self, k: i64) -> GarsideBraid {
        GarsideBraid {
            inf: self.inf,
            factors: self.factors.iter().map(|f| f.tau_pow(k)).collect(),
        }
    }

    /// A word spelling this normal form with atoms and δ.
    pub fn to_word(&self) -> BraidWord {
        let mut w = BraidWord::new();
        w.push_simple(Delta, self.inf);
        for &f in &self.factors {
            w.push_simple(f, 1);
        }
        w
    }
}

impl fmt::Display for GarsideBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d^{}", self.inf)?;
        for s in &self.factors {
            write!(f, " . {s}")?;
        }
        Ok(())
    }
}

/// Normal form of the braid spelled by `word`.
pub fn normalize(word: &BraidWord) -> GarsideBraid {
    let mut pieces = Vec::with_capacity(2 * word.len());
    for letter in word.letters() {
        match (letter.generator, letter.inverse) {
            (Delta, false) => pieces.push(Piece::DeltaPower(1)),
            (Delta, true) => pieces.push(Piece::DeltaPower(-1)),
            (a, false) => pieces.push(Piece::Simple(a)),
            (a, true) => {
                pieces.push(Piece::DeltaPower(-1));
                pieces.push(Piece::Simple(a.complement().tau_inv()));
            }
        }
    }
    from_pieces(&pieces)
}

/// Moves every δ-power to the front (x·δ^k = δ^k·τ^k(x)) and normalizes.
fn from_pieces(pieces: &[Piece]) -> GarsideBraid {
    let mut shift = 0i64;
    let mut seq = Vec::with_capacity(pieces.len());
    for piece in pieces.iter().rev() {
        match *piece {
            Piece::DeltaPower(k) => shift += k,
            Piece::Simple(s) => seq.push(s.tau_pow(shift)),
        }
    }
    seq.reverse();
    normal_form(shift, seq)
}

/// Local sliding until every adjacent pair is left-weighted.
///
/// `seq` may contain `1` and δ anywhere. Sweeps alternate direction so that
/// perturbations at either end are carried across in one pass.
fn normal_form(mut inf: i64, seq: Vec<DualSimple>) -> GarsideBraid {
    let mut f: Vec<DualSimple> = Vec::with_capacity(seq.len());
    for s in seq {
        match s {
            One => {}
            Delta => {
                inf += 1;
                for g in f.iter_mut() {
                    *g = g.tau();
                }
            }
            s => f.push(s),
        }
    }

    // Returns whether the pair changed.
    fn slide(f: &mut Vec<DualSimple>, inf: &mut i64, i: usize) -> bool {
        let (u, v) = (f[i], f[i + 1]);
        let t = u.complement().meet(v);
        if t == One {
            return false;
        }
        let u2 = u.compose(t).expect("t ≼ ∂u");
        let v2 = t.left_quotient(v).expect("t ≼ v");
        f[i + 1] = v2;
        if v2 == One {
            f.remove(i + 1);
        }
        if u2 == Delta {
            f.remove(i);
            *inf += 1;
            for g in f[..i].iter_mut() {
                *g = g.tau();
            }
        } else {
            f[i] = u2;
        }
        true
    }

    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < f.len() {
            if slide(&mut f, &mut inf, i) {
                changed = true;
            } else {
                i += 1;
            }
        }
        let mut i = f.len().saturating_sub(1);
        while i > 0 && i < f.len() {
            if slide(&mut f, &mut inf, i - 1) {
                changed = true;
                i = i.min(f.len().saturating_sub(1));
            } else {
                i -= 1;
            }
        }
        if !changed {
            break;
        }
    }
    debug_assert!(f.windows(2).all(|w| w[0].left_weighted(w[1])));
    GarsideBraid { inf, factors: f }
}
