use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
#[error("not the name of a simple element")]
pub struct ParseSimpleError;

/// Errors from the sliding and sliding-circuit machinery.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BraidError {
    /// The operation needs at least one non-δ factor.
    #[error("braid is a power of delta (canonical length 0)")]
    DeltaPower,
    /// A product expected to be simple left the divisor lattice of δ.
    #[error("product is not a simple element")]
    NotSimple,
    /// The braid is not a periodic point of cyclic sliding.
    #[error("braid is not in its set of sliding circuits")]
    NotInSlidingCircuits,
    /// The sliding-circuit search reached its vertex cap.
    #[error("sliding-circuit search exceeded the cap of {cap} vertices")]
    CapExceeded { cap: usize },
}
