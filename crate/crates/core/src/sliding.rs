//! Cycling, decycling and cyclic sliding, with conjugator bookkeeping.
//!
//! Every operation here is a conjugation. Conventions: `x^z = z⁻¹xz`, and for
//! a normal form δ^p x₁⋯x_r the initial factor is ι(x) = τ^{-p}(x₁) and the
//! final factor is φ(x) = x_r.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::braid::GarsideBraid;
use crate::error::BraidError;
use crate::simple::DualSimple::{self, Delta, One};

/// One application of cyclic sliding: `after = before^conjugator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlidingStep {
    pub before: GarsideBraid,
    pub conjugator: DualSimple,
    pub after: GarsideBraid,
}

/// Iterated cyclic sliding up to the first revisited normal form.
///
/// `steps[cycle_start..]` is one full sliding circuit: the `after` of the
/// last step equals `steps[cycle_start].before`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlidingTrajectory {
    pub steps: Vec<SlidingStep>,
    pub cycle_start: usize,
    /// Conjugates `steps[0].before` to `steps[cycle_start].before`.
    pub accumulated_conjugator: GarsideBraid,
}

impl SlidingTrajectory {
    pub fn start(&self) -> &GarsideBraid {
        &self.steps[0].before
    }

    /// The first element of the trajectory lying in its sliding circuit.
    pub fn circuit_entry(&self) -> &GarsideBraid {
        &self.steps[self.cycle_start].before
    }

    pub fn period(&self) -> usize {
        self.steps.len() - self.cycle_start
    }

    pub fn circuit(&self) -> impl Iterator<Item = &GarsideBraid> {
        self.steps[self.cycle_start..].iter().map(|s| &s.before)
    }
}

pub fn initial_factor(x: &GarsideBraid) -> Result<DualSimple, BraidError> {
    x.factors()
        .first()
        .map(|f| f.tau_pow(-x.inf()))
        .ok_or(BraidError::DeltaPower)
}

pub fn final_factor(x: &GarsideBraid) -> Result<DualSimple, BraidError> {
    x.factors().last().copied().ok_or(BraidError::DeltaPower)
}

/// c(x) = x^{ι(x)} = δ^p x₂⋯x_r τ^{-p}(x₁).
pub fn cycling(x: &GarsideBraid) -> GarsideBraid {
    match x.factors() {
        [] => x.clone(),
        [first, rest @ ..] => {
            let mut seq = rest.to_vec();
            seq.push(first.tau_pow(-x.inf()));
            GarsideBraid::from_product(x.inf(), &seq)
        }
    }
}

/// d(x) = x^{φ(x)⁻¹} = δ^p τ^p(x_r) x₁⋯x_{r-1}.
pub fn decycling(x: &GarsideBraid) -> GarsideBraid {
    match x.factors() {
        [] => x.clone(),
        [init @ .., last] => {
            let mut seq = Vec::with_capacity(init.len() + 1);
            seq.push(last.tau_pow(x.inf()));
            seq.extend_from_slice(init);
            GarsideBraid::from_product(x.inf(), &seq)
        }
    }
}

/// 𝔭(x) = ι(x) ∧ ∂(φ(x)).
pub fn preferred_prefix(x: &GarsideBraid) -> Result<DualSimple, BraidError> {
    Ok(initial_factor(x)?.meet(final_factor(x)?.complement()))
}

pub fn cyclic_sliding(x: &GarsideBraid) -> SlidingStep {
    let conjugator = preferred_prefix(x).unwrap_or(One);
    SlidingStep {
        before: x.clone(),
        conjugator,
        after: x.conjugate_by_simple(conjugator),
    }
}

/// φ(x)·ι(x) is left-weighted. Powers of δ are never rigid.
pub fn is_rigid(x: &GarsideBraid) -> bool {
    match (initial_factor(x), final_factor(x)) {
        (Ok(first), Ok(last)) => last.left_weighted(first),
        _ => false,
    }
}

/// Transport of `s` at `y` under cycling: ι(y)⁻¹ · s · ι(y^s).
pub fn transport(y: &GarsideBraid, s: DualSimple) -> Result<DualSimple, BraidError> {
    let first = initial_factor(y)?;
    let landed = initial_factor(&y.conjugate_by_simple(s))?;
    // ι(y)⁻¹ = δ⁻¹ · τ⁻¹(∂ι(y))
    let product = GarsideBraid::from_product(-1, &[first.complement().tau_inv(), s, landed]);
    match (product.inf(), product.factors()) {
        (0, []) => Ok(One),
        (0, [t]) => Ok(*t),
        (1, []) => Ok(Delta),
        _ => Err(BraidError::NotSimple),
    }
}

/// Slides `3·ℓ(x)` times, then keeps sliding while (inf, sup) still moves.
/// Returns `(y, z)` with `y = x^z` in the super summit set of `x`.
pub fn slide_to_sss(x: &GarsideBraid) -> (GarsideBraid, GarsideBraid) {
    let mut y = x.clone();
    let mut z = GarsideBraid::identity();
    for _ in 0..3 * x.canonical_length() {
        let step = cyclic_sliding(&y);
        if step.conjugator == One {
            break;
        }
        z = z.multiply_simple(step.conjugator);
        y = step.after;
    }
    loop {
        let step = cyclic_sliding(&y);
        if (step.after.inf(), step.after.sup()) == (y.inf(), y.sup()) {
            break;
        }
        z = z.multiply_simple(step.conjugator);
        y = step.after;
    }
    (y, z)
}

pub fn slide_to_circuit(x: &GarsideBraid) -> SlidingTrajectory {
    let mut visited: BTreeMap<GarsideBraid, usize> = BTreeMap::new();
    let mut steps: Vec<SlidingStep> = Vec::new();
    let mut current = x.clone();
    let cycle_start = loop {
        if let Some(&i) = visited.get(&current) {
            break i;
        }
        visited.insert(current.clone(), steps.len());
        let step = cyclic_sliding(&current);
        current = step.after.clone();
        steps.push(step);
    };
    let mut acc = GarsideBraid::identity();
    for step in &steps[..cycle_start] {
        acc = acc.multiply_simple(step.conjugator);
    }
    SlidingTrajectory {
        steps,
        cycle_start,
        accumulated_conjugator: acc,
    }
}

/// Whether `y` is a periodic point of cyclic sliding, i.e. lies in its own
/// set of sliding circuits.
pub fn is_in_sliding_circuit(y: &GarsideBraid) -> bool {
    if y.is_delta_power() || is_rigid(y) {
        return true;
    }
    let mut seen = BTreeSet::new();
    seen.insert(y.clone());
    let mut current = y.clone();
    loop {
        let next = cyclic_sliding(&current).after;
        if next == *y {
            return true;
        }
        if !seen.insert(next.clone()) {
            return false;
        }
        current = next;
    }
}
