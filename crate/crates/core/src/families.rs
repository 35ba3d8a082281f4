//! Named braid families with known sliding-circuit structure.

use alloc::vec::Vec;

use crate::braid::{BraidWord, GarsideBraid};
use crate::simple::DualSimple::{self, *};

/// `a34.a23.a12.a13.a14.c124^(3k).a12^(-3k)`.
pub fn beta_word(k: u32) -> BraidWord {
    let mut w = BraidWord::new();
    for s in [A34, A23, A12, A13, A14] {
        w.push_simple(s, 1);
    }
    w.push_simple(C124, 3 * i64::from(k));
    w.push_simple(A12, -3 * i64::from(k));
    w
}

/// The normal form `a34.a23.a12.a13.a14.(a24.a12.a14)^k` of [`beta_word`].
pub fn beta_normal_form(k: u32) -> GarsideBraid {
    let mut factors = Vec::from([A34, A23, A12, A13, A14]);
    for _ in 0..k {
        factors.extend_from_slice(&[A24, A12, A14]);
    }
    GarsideBraid::from_normal_form(0, factors).expect("left-weighted")
}

/// `4·(3k+2)·(3k+5)`, the size of the set of sliding circuits of β_k.
pub fn beta_sc_size(k: u32) -> usize {
    let k = k as usize;
    4 * (3 * k + 2) * (3 * k + 5)
}

/// `Π_{j=1..r} τ^(j-r)(a23^(k_j))` for exponents `k_1, …, k_r`.
///
/// Rigid when every exponent is positive and `r = 1` or `r ≡ 0 (mod 4)`.
pub fn e_family(exponents: &[u32]) -> GarsideBraid {
    let r = exponents.len() as i64;
    let mut factors: Vec<DualSimple> = Vec::new();
    for (j, &k) in exponents.iter().enumerate() {
        let atom = A23.tau_pow(j as i64 + 1 - r);
        factors.extend(core::iter::repeat(atom).take(k as usize));
    }
    GarsideBraid::from_product(0, &factors)
}

/// Whether `r` blocks give a rigid member of [`e_family`].
pub fn e_family_admissible(r: usize) -> bool {
    r == 1 || (r > 0 && r % 4 == 0)
}
