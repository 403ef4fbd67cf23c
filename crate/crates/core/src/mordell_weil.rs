//! Mordell-Weil rank of isotrivial abelian varieties over `ℂ(x, y)` whose
//! fibers have CM by `ℚ(ζ_d)` and whose holonomy is cyclic of order `d`.
//!
//! Nothing here verifies the geometric hypotheses. They are inputs, and they
//! are echoed back in every report.

use serde::{Deserialize, Serialize};

use crate::algebra::euler_phi;
use crate::error::{Error, Result};
use crate::CyclotomicProduct;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberDescriptor {
    /// `d` with endomorphism algebra `ℚ(ζ_d)`, if the fiber has such CM.
    pub cm_conductor: Option<u64>,
    pub simple: bool,
    /// The holonomy-fixed part of the fiber is zero.
    pub trivial_trace: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RankReason {
    NoCmFiber,
    NoPhiDFactor,
    BoundFromMultiplicity,
    ExactFromAlbaneseMultiplicity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MWRankReport {
    pub bound: u64,
    pub exact: Option<u64>,
    pub reason: RankReason,
    /// Exponent of `Φ_d` in the Alexander polynomial.
    pub phi_d_exponent: u32,
    pub holonomy_order: u64,
    pub fiber: FiberDescriptor,
    pub albanese_multiplicity_known: bool,
}

/// `ℚ(ζ_a) = ℚ(ζ_b)` iff `a = b` or one is twice the other, which is odd.
pub fn same_cyclotomic_field(a: u64, b: u64) -> bool {
    let norm = |n: u64| if n % 2 == 1 { 2 * n } else { n };
    norm(a) == norm(b)
}

/// Rank `≤ s·φ(d)` with `s` the multiplicity of `Φ_d` in the Alexander
/// polynomial; equality when the Albanese multiplicity is known.
pub fn rank_report(
    alexander: &CyclotomicProduct,
    d: u64,
    fiber: FiberDescriptor,
    albanese_multiplicity_known: bool,
) -> Result<MWRankReport> {
    if d < 2 {
        return Err(Error::precondition(format!("holonomy order d = {d} must be at least 2")));
    }
    if !fiber.trivial_trace {
        return Err(Error::precondition(
            "the fiber has a nonzero holonomy-fixed part; the bound applies to the quotient by the trace, \
             so pass the quotient fiber with trivial_trace = true",
        ));
    }
    let s = alexander.exponent(d);
    let report = |bound, exact, reason| MWRankReport {
        bound,
        exact,
        reason,
        phi_d_exponent: s,
        holonomy_order: d,
        fiber,
        albanese_multiplicity_known,
    };
    let has_cm = fiber
        .cm_conductor
        .is_some_and(|n| n >= 3 && same_cyclotomic_field(n, d));
    if !has_cm {
        return Ok(report(0, Some(0), RankReason::NoCmFiber));
    }
    if s == 0 {
        return Ok(report(0, Some(0), RankReason::NoPhiDFactor));
    }
    if !fiber.simple {
        return Err(Error::precondition(
            "the rank bound needs a simple fiber",
        ));
    }
    let bound = s as u64 * euler_phi(d);
    Ok(if albanese_multiplicity_known {
        report(bound, Some(bound), RankReason::ExactFromAlbaneseMultiplicity)
    } else {
        report(bound, None, RankReason::BoundFromMultiplicity)
    })
}

/// Whether some local polynomial has a `Φ_d` factor. Without one the
/// Alexander polynomial, which divides their product, has none either.
pub fn holonomy_consistency(d: u64, local_polys: &[CyclotomicProduct]) -> bool {
    local_polys.iter().any(|p| p.exponent(d) > 0)
}
