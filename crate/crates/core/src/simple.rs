//! The fourteen simple elements of the dual structure on four strands.
//!
//! Every table here is indexed by [`DualSimple::index`]. The only data typed in
//! by hand are the τ-action, the right complement, the weights, and the atom
//! factorizations of the weight-2 simples (the defining relations between band
//! generators). Divisors, meets, partial products and left quotients are
//! computed from those at compile time. [`crate::bootstrap`] re-derives all of
//! it from the relations alone and [`self_check`] compares the two.

use core::fmt;
use core::str::FromStr;

use crate::error::ParseSimpleError;

/// A divisor of δ = a12·a23·a34.
///
/// Variants are declared in canonical order, which is also the derived `Ord`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum DualSimple {
    One = 0,
    A12,
    A23,
    A34,
    A14,
    A13,
    A24,
    C123,
    C124,
    C134,
    C234,
    P12_34,
    P14_23,
    Delta,
}

use DualSimple::*;

/// Number of simple elements.
pub const COUNT: usize = 14;

/// All simples in canonical order.
pub const ALL: [DualSimple; COUNT] = [
    One, A12, A23, A34, A14, A13, A24, C123, C124, C134, C234, P12_34, P14_23, Delta,
];

/// The six band generators.
pub const ATOMS: [DualSimple; 6] = [A12, A23, A34, A14, A13, A24];

/// Proper simples (neither `1` nor δ): the letters that occur in normal forms.
pub const PROPER: [DualSimple; 12] = [
    A12, A23, A34, A14, A13, A24, C123, C124, C134, C234, P12_34, P14_23,
];

const NAMES: [&str; COUNT] = [
    "1", "a12", "a23", "a34", "a14", "a13", "a24", "c123", "c124", "c134", "c234", "p12-34",
    "p14-23", "delta",
];

// δ⁻¹·s·δ
const TAU: [DualSimple; COUNT] = [
    One, A14, A12, A23, A34, A24, A13, C124, C134, C234, C123, P14_23, P12_34, Delta,
];

const TAU_INV: [DualSimple; COUNT] = [
    One, A23, A34, A14, A12, A24, A13, C234, C123, C124, C134, P14_23, P12_34, Delta,
];

// s⁻¹·δ
const COMPLEMENT: [DualSimple; COUNT] = [
    Delta, C234, C134, C124, C123, P12_34, P14_23, A34, A23, A12, A14, A24, A13, One,
];

const WEIGHT: [u8; COUNT] = [0, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3];

/// Band-generator relations: each weight-2 simple with all of its atom
/// factorizations `(left, right)`.
pub const RELATIONS: [(DualSimple, &[(DualSimple, DualSimple)]); 6] = [
    (C123, &[(A12, A23), (A23, A13), (A13, A12)]),
    (C124, &[(A14, A12), (A12, A24), (A24, A14)]),
    (C134, &[(A34, A14), (A14, A13), (A13, A34)]),
    (C234, &[(A23, A34), (A34, A24), (A24, A23)]),
    (P12_34, &[(A12, A34), (A34, A12)]),
    (P14_23, &[(A14, A23), (A23, A14)]),
];

const fn bit(s: DualSimple) -> u16 {
    1 << (s as u8)
}

/// `t⁻¹·s` whenever `t ≼ s`.
const fn build_left_quotient() -> [[Option<DualSimple>; COUNT]; COUNT] {
    let mut q = [[None; COUNT]; COUNT];
    let mut i = 0;
    while i < COUNT {
        let s = ALL[i];
        q[0][i] = Some(s);
        q[i][i] = Some(One);
        q[i][Delta as usize] = Some(COMPLEMENT[i]);
        i += 1;
    }
    let mut r = 0;
    while r < RELATIONS.len() {
        let (whole, pairs) = RELATIONS[r];
        let mut k = 0;
        while k < pairs.len() {
            let (left, right) = pairs[k];
            q[left as usize][whole as usize] = Some(right);
            k += 1;
        }
        r += 1;
    }
    q
}

const LEFT_QUOTIENT: [[Option<DualSimple>; COUNT]; COUNT] = build_left_quotient();

const fn build_divisors() -> [u16; COUNT] {
    let mut d = [0u16; COUNT];
    let mut s = 0;
    while s < COUNT {
        let mut t = 0;
        while t < COUNT {
            if LEFT_QUOTIENT[t][s].is_some() {
                d[s] |= 1 << t;
            }
            t += 1;
        }
        s += 1;
    }
    d
}

const DIVISORS: [u16; COUNT] = build_divisors();

const fn build_compose() -> [[Option<DualSimple>; COUNT]; COUNT] {
    let mut c = [[None; COUNT]; COUNT];
    let mut a = 0;
    while a < COUNT {
        let mut whole = 0;
        while whole < COUNT {
            if let Some(b) = LEFT_QUOTIENT[a][whole] {
                c[a][b as usize] = Some(ALL[whole]);
            }
            whole += 1;
        }
        a += 1;
    }
    c
}

const COMPOSE: [[Option<DualSimple>; COUNT]; COUNT] = build_compose();

const fn build_meet() -> [[DualSimple; COUNT]; COUNT] {
    let mut m = [[One; COUNT]; COUNT];
    let mut a = 0;
    while a < COUNT {
        let mut b = 0;
        while b < COUNT {
            let common = DIVISORS[a] & DIVISORS[b];
            let mut best = 0;
            let mut t = 0;
            while t < COUNT {
                if common & (1 << t) != 0 && WEIGHT[t] > WEIGHT[best] {
                    best = t;
                }
                t += 1;
            }
            m[a][b] = ALL[best];
            b += 1;
        }
        a += 1;
    }
    m
}

const MEET: [[DualSimple; COUNT]; COUNT] = build_meet();

impl DualSimple {
    #[inline]
    pub const fn index(self) -> usize {
        self as usize
    }

    #[inline]
    pub const fn from_index(i: usize) -> Option<DualSimple> {
        if i < COUNT {
            Some(ALL[i])
        } else {
            None
        }
    }

    pub const fn name(self) -> &'static str {
        NAMES[self as usize]
    }

    /// δ⁻¹·s·δ.
    #[inline]
    pub const fn tau(self) -> DualSimple {
        TAU[self as usize]
    }

    /// δ·s·δ⁻¹.
    #[inline]
    pub const fn tau_inv(self) -> DualSimple {
        TAU_INV[self as usize]
    }

    /// τ^k for any integer k (τ has order 4).
    pub fn tau_pow(self, k: i64) -> DualSimple {
        let mut s = self;
        for _ in 0..k.rem_euclid(4) {
            s = s.tau();
        }
        s
    }

    /// The right complement ∂(s) = s⁻¹·δ.
    #[inline]
    pub const fn complement(self) -> DualSimple {
        COMPLEMENT[self as usize]
    }

    /// Weight λ: the number of band generators in any positive word for `self`.
    #[inline]
    pub const fn weight(self) -> u8 {
        WEIGHT[self as usize]
    }

    #[inline]
    pub const fn is_atom(self) -> bool {
        WEIGHT[self as usize] == 1
    }

    /// `true` for everything except `1` and δ.
    #[inline]
    pub const fn is_proper(self) -> bool {
        !matches!(self, One | Delta)
    }

    /// Prefix order restricted to simples: `self ≼ other`.
    #[inline]
    pub const fn divides(self, other: DualSimple) -> bool {
        DIVISORS[other as usize] & bit(self) != 0
    }

    /// Bit mask of the divisors of `self`, bit `i` standing for `ALL[i]`.
    #[inline]
    pub const fn divisor_mask(self) -> u16 {
        DIVISORS[self as usize]
    }

    /// All `t ≼ self` in canonical order.
    pub fn divisors(self) -> impl Iterator<Item = DualSimple> + Clone {
        let mask = DIVISORS[self as usize];
        ALL.into_iter().filter(move |t| mask & bit(*t) != 0)
    }

    /// Greatest common prefix.
    #[inline]
    pub const fn meet(self, other: DualSimple) -> DualSimple {
        MEET[self as usize][other as usize]
    }

    /// The product `self·other` if it is again simple.
    #[inline]
    pub const fn compose(self, other: DualSimple) -> Option<DualSimple> {
        COMPOSE[self as usize][other as usize]
    }

    /// `self⁻¹·whole`, defined when `self ≼ whole`.
    #[inline]
    pub const fn left_quotient(self, whole: DualSimple) -> Option<DualSimple> {
        LEFT_QUOTIENT[self as usize][whole as usize]
    }

    /// Whether the pair `self·next` is left-weighted, i.e. ∂(self) ∧ next = 1.
    #[inline]
    pub const fn left_weighted(self, next: DualSimple) -> bool {
        matches!(MEET[COMPLEMENT[self as usize] as usize][next as usize], One)
    }

    /// A fixed positive atom word for `self` (empty for `1`).
    pub const fn atom_word(self) -> &'static [DualSimple] {
        match self {
            One => &[],
            A12 => &[A12],
            A23 => &[A23],
            A34 => &[A34],
            A14 => &[A14],
            A13 => &[A13],
            A24 => &[A24],
            C123 => &[A12, A23],
            C124 => &[A14, A12],
            C134 => &[A34, A14],
            C234 => &[A23, A34],
            P12_34 => &[A12, A34],
            P14_23 => &[A14, A23],
            Delta => &[A12, A23, A34],
        }
    }
}

/// Free-function form of [`DualSimple::tau`].
pub const fn tau(s: DualSimple) -> DualSimple {
    s.tau()
}

pub const fn complement(s: DualSimple) -> DualSimple {
    s.complement()
}

pub const fn weight(s: DualSimple) -> u8 {
    s.weight()
}

pub const fn meet(a: DualSimple, b: DualSimple) -> DualSimple {
    a.meet(b)
}

pub const fn compose_simple(a: DualSimple, b: DualSimple) -> Option<DualSimple> {
    a.compose(b)
}

pub const fn left_weighted(a: DualSimple, b: DualSimple) -> bool {
    a.left_weighted(b)
}

impl fmt::Display for DualSimple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DualSimple {
    type Err = ParseSimpleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NAMES
            .iter()
            .position(|n| *n == s)
            .map(|i| ALL[i])
            .ok_or(ParseSimpleError)
    }
}

/// Failures reported by [`self_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableDefect {
    ComplementSquaredIsNotTau(DualSimple),
    TauOrder(DualSimple),
    WeightSum(DualSimple),
    ComplementProduct(DualSimple),
    TauBreaksDivisibility(DualSimple, DualSimple),
    MeetNotGreatest(DualSimple, DualSimple),
    WeightTwoPairNotNormal(DualSimple, DualSimple),
    BootstrapMismatch,
}

/// Verifies the algebraic identities the rest of the crate relies on, and
/// that the compiled tables agree with a fresh closure of the relations.
pub fn self_check() -> Result<(), TableDefect> {
    for s in ALL {
        if s.complement().complement() != s.tau() {
            return Err(TableDefect::ComplementSquaredIsNotTau(s));
        }
        if s.tau().tau().tau().tau() != s || s.tau().tau_inv() != s {
            return Err(TableDefect::TauOrder(s));
        }
        if s.weight() + s.complement().weight() != 3 || s.tau().weight() != s.weight() {
            return Err(TableDefect::WeightSum(s));
        }
        if s.compose(s.complement()) != Some(Delta) {
            return Err(TableDefect::ComplementProduct(s));
        }
        for t in ALL {
            if t.divides(s) != t.tau().divides(s.tau()) {
                return Err(TableDefect::TauBreaksDivisibility(t, s));
            }
            let m = s.meet(t);
            let greatest = m.divides(s)
                && m.divides(t)
                && ALL
                    .iter()
                    .all(|u| !(u.divides(s) && u.divides(t)) || u.divides(m));
            if !greatest {
                return Err(TableDefect::MeetNotGreatest(s, t));
            }
            // a of weight 2 and δ ⋠ a·t  ⇒  a·t is in normal form
            if s.weight() == 2 && t.is_proper() && !s.complement().divides(t) && !s.left_weighted(t)
            {
                return Err(TableDefect::WeightTwoPairNotNormal(s, t));
            }
        }
    }
    let derived = crate::bootstrap::derive_tables();
    if !derived.matches_compiled() {
        return Err(TableDefect::BootstrapMismatch);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn set(items: &[DualSimple]) -> Vec<DualSimple> {
        let mut v = items.to_vec();
        v.sort();
        v
    }

    #[test]
    fn tables_pass_self_check() {
        assert_eq!(self_check(), Ok(()));
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(Delta), Delta);
        assert_eq!(tau(A13), A24);
        assert_eq!(tau(A12), A14);
        for s in ALL {
            assert_eq!(s.tau_pow(4), s);
            assert_eq!(s.tau_pow(-1), s.tau_inv());
        }
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement(A13), P12_34);
        assert_eq!(complement(One), Delta);
        assert_eq!(complement(A12), C234);
    }

    #[test]
    fn weight_examples() {
        assert_eq!(weight(Delta), 3);
        assert_eq!(weight(One), 0);
        assert_eq!(weight(C123), 2);
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(One.divisors().collect::<Vec<_>>(), [One]);
        assert_eq!(
            C234.divisors().collect::<Vec<_>>(),
            set(&[One, A23, A34, A24, C234])
        );
        assert_eq!(
            P14_23.divisors().collect::<Vec<_>>(),
            set(&[One, A14, A23, P14_23])
        );
        assert_eq!(
            C123.divisors().collect::<Vec<_>>(),
            set(&[One, A12, A23, A13, C123])
        );
        assert_eq!(Delta.divisors().count(), 14);
    }

    #[test]
    fn meet_examples() {
        for s in ALL {
            assert_eq!(meet(s, Delta), s);
            assert_eq!(meet(s, s), s);
        }
        assert_eq!(meet(C123, C134), A13);
        assert_eq!(meet(P12_34, P14_23), One);
    }

    #[test]
    fn meet_is_a_lattice_operation() {
        for a in ALL {
            for b in ALL {
                assert_eq!(meet(a, b), meet(b, a));
                for c in ALL {
                    assert_eq!(meet(meet(a, b), c), meet(a, meet(b, c)));
                }
            }
        }
    }

    #[test]
    fn compose_examples() {
        assert_eq!(compose_simple(A12, A23), Some(C123));
        for s in ALL {
            assert_eq!(compose_simple(s, One), Some(s));
        }
        assert_eq!(compose_simple(A13, P14_23), None);
        assert_eq!(compose_simple(C123, A12), None);
    }

    #[test]
    fn left_weighted_examples() {
        assert!(left_weighted(A12, A12));
        assert!(!left_weighted(A12, A23));
        assert!(left_weighted(P14_23, C124));
    }

    #[test]
    fn names_round_trip() {
        for s in ALL {
            assert_eq!(s.name().parse::<DualSimple>(), Ok(s));
        }
        assert!("a15".parse::<DualSimple>().is_err());
    }

    #[test]
    fn atom_words_have_matching_weight() {
        for s in ALL {
            assert_eq!(s.atom_word().len(), s.weight() as usize);
        }
    }
}
