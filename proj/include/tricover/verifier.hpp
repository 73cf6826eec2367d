#pragma once

#include "tricover/plan.hpp"

#include <cstdint>
#include <optional>

namespace tricover {

enum class CheckMethod { ExactSlab, Sampling };

struct CoverageReport {
    bool covered = false;
    // A target point lying in no placement; present iff covered is false.
    std::optional<Point2> witness;
    // Distinct critical y-levels examined (0 for the sampling check).
    int critical_levels = 0;
    CheckMethod checked_method = CheckMethod::ExactSlab;
};

/// Exact decision procedure for "plan covers target".
///
/// Critical levels are every vertex height of every triangle (target
/// included) plus every height where a vertical leg of one triangle crosses
/// the hypotenuse support line of another within both segments, clipped to
/// [0, L]. Between consecutive levels no cross-section endpoint can cross
/// another, so any uncovered sliver has width linear in y and peaks at a
/// critical level; checking exact 1D interval-union containment at each
/// level therefore decides coverage. Intervals are closed, and abutting
/// intervals count as contiguous.
///
/// On failure the witness is the midpoint of the first uncovered sub-interval
/// at the lowest failing level, so reports are deterministic.
CoverageReport verify_coverage(const CoveringPlan& plan, const TargetTriangle& target);

/// Randomized oracle, independent of the slab logic: draws `count` points
/// from the rational grid {(L i/Q, L j/Q) : i + j <= Q}, Q = 2^16, uniformly
/// and deterministically from `seed`, and reports the first point no
/// placement contains. Can only ever prove non-coverage.
CoverageReport sample_check(const CoveringPlan& plan, const TargetTriangle& target,
                            std::uint64_t seed, int count);

}  // namespace tricover
