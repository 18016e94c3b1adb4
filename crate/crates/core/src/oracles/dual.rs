use crate::automata::Dfa;
use crate::automata::{minimize, Nfa};
use crate::error::{Error, Result};
use crate::oracles::profile::{profile_conflict, ProfileConflict};
use crate::oracles::separator::{separable_by_kpt, KptSeparator};
use crate::oracles::towers::bounded_tower_from;
use crate::oracles::Budget;
use crate::piecewise::{is_pt_dfa, PtWitness};
use crate::separability::Side;

/// Outcome of the brute-force separability oracle. It can only ever prove
/// separability; a missing tower of some height rules out infinite towers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DualVerdict {
    Separator(KptSeparator),
    NoTower { height: usize, start: Side },
    Inconclusive,
}

impl DualVerdict {
    /// `Some(true)` when conclusive.
    pub fn separable(&self) -> Option<bool> {
        match self {
            DualVerdict::Inconclusive => None,
            _ => Some(true),
        }
    }
}

/// Interleaves `k`-PT separator search (`k = 1..=kmax`) with tower search
/// (`h = 1..=hmax`), lowest bound first. Searches that blow their budget are
/// skipped.
pub fn dual_deepening(a: &Nfa, b: &Nfa, kmax: usize, hmax: usize, budget: &Budget) -> Result<DualVerdict> {
    a.same_alphabet(b)?;
    for level in 1..=kmax.max(hmax) {
        if level <= kmax {
            match separable_by_kpt(a, b, level, budget) {
                Ok(Some(s)) => return Ok(DualVerdict::Separator(s)),
                Ok(None) | Err(Error::CapExceeded(_)) => {}
                Err(e) => return Err(e),
            }
        }
        if level <= hmax {
            for start in [Side::A, Side::B] {
                match bounded_tower_from(a, b, level, start, budget) {
                    Ok(None) => return Ok(DualVerdict::NoTower { height: level, start }),
                    Ok(Some(_)) | Err(Error::CapExceeded(_)) => {}
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Ok(DualVerdict::Inconclusive)
}

/// Outcome of the bounded piecewise-testability oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PtBounded {
    /// Membership is determined by the `k`-profile.
    Pt {
        k: usize,
    },
    /// Profiles conflict up to `kmax` and a structural witness exists.
    NotPt {
        conflict: ProfileConflict,
        witness: PtWitness,
    },
    Inconclusive,
}

impl PtBounded {
    pub fn is_pt(&self) -> Option<bool> {
        match self {
            PtBounded::Pt { .. } => Some(true),
            PtBounded::NotPt { .. } => Some(false),
            PtBounded::Inconclusive => None,
        }
    }
}

/// Looks for the least `k ≤ kmax` at which no `k`-profile is reached in both
/// an accepting and a rejecting state.
pub fn pt_bounded(dfa: &Dfa, kmax: usize, budget: &Budget) -> PtBounded {
    let mut last = None;
    for k in 1..=kmax {
        match profile_conflict(dfa, k, budget) {
            Ok(None) => return PtBounded::Pt { k },
            Ok(Some(c)) => last = Some(c),
            Err(_) => return PtBounded::Inconclusive,
        }
    }
    let Some(conflict) = last else {
        return PtBounded::Inconclusive;
    };
    match is_pt_dfa(&minimize(dfa)).ok().and_then(|v| v.witness) {
        Some(witness) => PtBounded::NotPt { conflict, witness },
        None => PtBounded::Inconclusive,
    }
}
