//! Conjugacy decision with checkable conjugators.

use crate::braid::GarsideBraid;
use crate::circuits::{compute_sc, DEFAULT_SC_CAP};
use crate::error::BraidError;
use crate::sliding::{is_rigid, slide_to_circuit, slide_to_sss};

/// A claim `x = z⁻¹·y·z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyCertificate {
    pub x: GarsideBraid,
    pub y: GarsideBraid,
    pub z: GarsideBraid,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NotConjugateReason {
    /// Different abelianization.
    LambdaMismatch,
    /// Super summit representatives have different (inf, sup).
    SummitMismatch,
    /// One braid is periodic and the other is not.
    TypeMismatch,
    /// Neither braid's circuits meet the other's.
    DisjointSC,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolverDecision {
    Conjugate(ConjugacyCertificate),
    NotConjugate(NotConjugateReason),
    Inconclusive { cap: usize },
}

impl SolverDecision {
    pub fn is_conjugate(&self) -> bool {
        matches!(self, SolverDecision::Conjugate(_))
    }

    pub fn certificate(&self) -> Option<&ConjugacyCertificate> {
        match self {
            SolverDecision::Conjugate(c) => Some(c),
            _ => None,
        }
    }
}

pub fn verify_certificate(c: &ConjugacyCertificate) -> bool {
    c.y.conjugate(&c.z) == c.x
}

/// Whether some power of `x` is a power of δ. In B₄ the cube or the fourth
/// power of a periodic braid already is.
pub fn is_periodic(x: &GarsideBraid) -> bool {
    x.power(3).is_delta_power() || x.power(4).is_delta_power()
}

/// Largest power tried by [`power_to_rigid`]: pseudo-Anosov braids of B₄ have
/// a power below 27 whose circuits are rigid.
pub const MAX_RIGID_POWER: i64 = 26;

/// Smallest `i ≤ 26` such that sliding `x^i` reaches a rigid braid, with the
/// conjugator `z` and that rigid braid `(x^i)^z`.
pub fn power_to_rigid(x: &GarsideBraid) -> Option<(i64, GarsideBraid, GarsideBraid)> {
    (1..=MAX_RIGID_POWER).find_map(|i| {
        let t = slide_to_circuit(&x.power(i));
        let entry = t.circuit_entry();
        if entry.is_delta_power() || !is_rigid(entry) {
            return None;
        }
        debug_assert_eq!(x.power(i).conjugate(&t.accumulated_conjugator), *entry);
        Some((i, t.accumulated_conjugator.clone(), entry.clone()))
    })
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        0
    } else {
        (a / gcd(a, b) * b).abs()
    }
}

/// [`solve_conjugacy_with_cap`] with [`DEFAULT_SC_CAP`].
pub fn solve_conjugacy(x: &GarsideBraid, y: &GarsideBraid, assume_pa: bool) -> SolverDecision {
    solve_conjugacy_with_cap(x, y, assume_pa, DEFAULT_SC_CAP)
}

/// Decides whether `x` and `y` are conjugate.
///
/// With `assume_pa` the caller asserts both braids are pseudo-Anosov, which
/// licenses comparing rigid conjugates of a common power. Without it, that
/// shortcut is only taken when no powering is needed. Every `Conjugate`
/// answer carries a certificate that has been checked.
pub fn solve_conjugacy_with_cap(
    x: &GarsideBraid,
    y: &GarsideBraid,
    assume_pa: bool,
    cap: usize,
) -> SolverDecision {
    use NotConjugateReason::*;

    if x.lambda() != y.lambda() {
        return SolverDecision::NotConjugate(LambdaMismatch);
    }
    let (xs, _) = slide_to_sss(x);
    let (ys, _) = slide_to_sss(y);
    if (xs.inf(), xs.sup()) != (ys.inf(), ys.sup()) {
        return SolverDecision::NotConjugate(SummitMismatch);
    }
    if is_periodic(x) != is_periodic(y) {
        return SolverDecision::NotConjugate(TypeMismatch);
    }

    match rigid_power_path(x, y, assume_pa, cap) {
        Some(Ok(decision)) => return decision,
        Some(Err(BraidError::CapExceeded { cap })) => return SolverDecision::Inconclusive { cap },
        _ => {}
    }
    general_path(x, y, cap)
}

/// `Some` when the rigid comparison reached a decision; `None` to fall
/// through to the general search.
fn rigid_power_path(
    x: &GarsideBraid,
    y: &GarsideBraid,
    assume_pa: bool,
    cap: usize,
) -> Option<Result<SolverDecision, BraidError>> {
    let (s, xbar, z1, ybar, z2) = if assume_pa {
        let rx = power_to_rigid(x);
        let ry = power_to_rigid(y);
        let ((ix, zx, xr), (iy, zy, yr)) = match (rx, ry) {
            (Some(a), Some(b)) => (a, b),
            (None, None) => return None,
            // conjugate braids have conjugate powers with the same circuits
            _ => return Some(Ok(SolverDecision::NotConjugate(NotConjugateReason::TypeMismatch))),
        };
        if ix != iy {
            return Some(Ok(SolverDecision::NotConjugate(NotConjugateReason::TypeMismatch)));
        }
        // equal indices, so the common power lcm(ix, iy) is ix itself
        (lcm(ix, iy), xr, zx, yr, zy)
    } else {
        let tx = slide_to_circuit(x);
        let ty = slide_to_circuit(y);
        let (ex, ey) = (tx.circuit_entry(), ty.circuit_entry());
        if ex.is_delta_power() || !is_rigid(ex) || !is_rigid(ey) {
            return None;
        }
        (
            1,
            ex.clone(),
            tx.accumulated_conjugator.clone(),
            ey.clone(),
            ty.accumulated_conjugator.clone(),
        )
    };

    let g =match compute_sc(&xbar, cap) {
        Ok(g) => g,
        Err(e) => return Some(Err(e)),
    };
    let Some(c_v) = g.conjugator_to(&ybar) else {
        // non-conjugate powers imply non-conjugate braids
        return Some(Ok(SolverDecision::NotConjugate(NotConjugateReason::DisjointSC)));
    };
    // ybar = xbar^(e·c_v)
    let c = g.entry_conjugator().multiply(c_v);
    debug_assert_eq!(xbar.conjugate(&c), ybar);
    // (y^s)^z2 = (x^s)^(z1·c), so x^s = (y^s)^(z2·c⁻¹·z1⁻¹)
    let z = z2.multiply(&c.invert()).multiply(&z1.invert());
    debug_assert_eq!(y.power(s).conjugate(&z), x.power(s));
    let cert = ConjugacyCertificate {
        x: x.clone(),
        y: y.clone(),
        z,
    };
    if verify_certificate(&cert) {
        Some(Ok(SolverDecision::Conjugate(cert)))
    } else {
        None
    }
}

fn general_path(x: &GarsideBraid, y: &GarsideBraid, cap: usize) -> SolverDecision {
    let g = match compute_sc(x, cap) {
        Ok(g) => g,
        Err(BraidError::CapExceeded { cap }) => return SolverDecision::Inconclusive { cap },
        Err(_) => unreachable!("compute_sc only fails on the cap"),
    };
    let ty = slide_to_circuit(y);
    let Some(c_v) = g.conjugator_to(ty.circuit_entry()) else {
        return SolverDecision::NotConjugate(NotConjugateReason::DisjointSC);
    };
    // y^zy = x^(e·c_v)
    let zx = g.entry_conjugator().multiply(c_v);
    let z = ty.accumulated_conjugator.multiply(&zx.invert());
    let cert = ConjugacyCertificate {
        x: x.clone(),
        y: y.clone(),
        z,
    };
    assert!(verify_certificate(&cert), "conjugator bookkeeping is inconsistent");
    SolverDecision::Conjugate(cert)
}
