#pragma once

#include "tricover/plan.hpp"
#include "tricover/rows.hpp"

#include <stdexcept>

namespace tricover {

// Raised when a construction is asked for a d beyond the largest value it can
// cover (and force was not set). Carries the exact bound.
struct ThresholdExceeded : std::runtime_error {
    Rational bound;

    ThresholdExceeded(Rational bound_, const std::string& what)
        : std::runtime_error(what), bound(std::move(bound_)) {}
};

// All stacked constructions anchor the apex at (0, L) with every row's
// leftmost up-triangle on x = 0; bottom rows may extend below y = 0 or spill
// past the legs when the threshold has slack. Covering is a superset
// relation, so spill-over is harmless.

/// The classic n^2 covering of T_n: rows 1..n, row k holding k ups and k-1
/// downs, no slides.
CoveringPlan grid_cover(int n);

/// Covers T_{n+d} with a full T_{n+1} grid: n^2 + 2n + 1 triangles, works for
/// every d.
CoveringPlan naive_cover(int n, const Rational& d);

/// n^2 + 2: one extra pair in the bottom row, up-left slide by d.
/// Covers iff d <= 1/(n+1); beyond that throws ThresholdExceeded unless
/// force, which emits the gapped plan for tightness experiments.
CoveringPlan bottom_pair_cover(int n, const Rational& d, bool force = false);

/// n^2 + 2q with the least q >= 1 satisfying d <= q/(n+q); reverts to the
/// naive covering when q would exceed n (only possible for d > 1/2).
CoveringPlan bottom_pairs_cover(int n, const Rational& d);

/// n^2 + 2(n-j+1): rows 1..j-1 form a plain T_{j-1}, rows j..n carry one
/// extra pair each and an up-left slide of j/(k(k+1)).
/// Covers iff d <= 1 - j/(n+1). Requires 1 <= j <= n.
CoveringPlan even_cover(int n, const Rational& d, int j, bool force = false);

/// even_cover with j = floor((1-d)(n+1)); reverts to naive when that is 0.
CoveringPlan even_cover_auto(int n, const Rational& d);

/// n^2 + 3: bottom strip of n ups and n-1 downs slid up-left by 1/n, an
/// unslid T_2 block sharing the strip's last up, and a T_{n-1} grid above.
/// Covers iff d <= 1/n. Requires n >= 2.
CoveringPlan t2_block_cover(int n, const Rational& d, bool force = false);

/// n^2 + 2(j-1) + 1: a T_j grid on top, rows j..n below it with k ups and
/// k-1 downs spread by a down-right slide of (j-1)/(k(k-1)).
/// Covers iff d <= (j-1)/n. Requires 2 <= j <= n.
CoveringPlan odd_cover(int n, const Rational& d, int j, bool force = false);

/// odd_cover with j = ceil(dn + 1); reverts to naive when that is n+1.
CoveringPlan odd_cover_auto(int n, const Rational& d);

/// Picks whichever of the even and odd constructions adds fewer triangles
/// (odd only when strictly fewer) and returns its plan.
CoveringPlan consolidated_cover(int n, const Rational& d);

/// The largest d the plan's construction is guaranteed to cover
/// (1 for naive, 0 for the exact grid).
Rational plan_threshold(const CoveringPlan& plan);

}  // namespace tricover
