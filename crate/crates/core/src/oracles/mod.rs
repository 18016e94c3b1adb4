//! Brute-force oracles: subsequences, `k`-profiles, `k`-PT separators, bounded
//! towers. They are independent of the decision procedures and sound but
//! possibly silent: exceeding a [`Budget`] yields [`CapExceeded`](crate::Error::CapExceeded)
//! or an inconclusive answer, never a wrong one.

mod dual;
mod profile;
mod separator;
mod subsequence;
mod towers;

pub use dual::{dual_deepening, pt_bounded, DualVerdict, PtBounded};
pub use profile::{
    profile_conflict, profile_k, reachable_profiles, KProfile, ProfileConflict, ProfileSpace, MAX_PIECE_CODES,
};
pub use separator::{separable_by_kpt, verify_separator, KptSeparator};
pub use subsequence::subsequence;
pub use towers::{bounded_tower_exists, bounded_tower_from};

/// Search limits for the oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Maximal number of search nodes (`(state, profile)` pairs or tower configurations).
    pub max_nodes: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self { max_nodes: 200_000 }
    }
}
