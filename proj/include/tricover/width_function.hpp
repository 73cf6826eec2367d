#pragma once

#include "tricover/plan.hpp"

#include <vector>

namespace tricover {

// One generator of the folded-width group: t -> {t - offset} when sign is +1
// (a down-triangle) or t -> 1 - {t - offset} when sign is -1 (an up-triangle),
// with {.} the mod-1 fold and offset in [0, 1).
struct WidthTerm {
    int sign = 1;
    Rational offset;
};

// Sum of a finite multiset of generators: piecewise linear on [0, 1) with
// breakpoints at the offsets, integer slope, and half-integer integral.
class WidthFunction {
public:
    void add_up(const Rational& leg_y);
    void add_down(const Rational& leg_y);

    const std::vector<WidthTerm>& terms() const { return terms_; }

    /// Sum of term signs: -1 per up-triangle, +1 per down-triangle.
    int slope() const;

    /// Exact value at t (t is folded into [0, 1) first).
    Rational evaluate(const Rational& t) const;

    /// Exact area under the function over [0, 1), integrated piecewise
    /// between breakpoints rather than summed per term, so the N/2 law is a
    /// real check and not an identity.
    Rational integral() const;

private:
    std::vector<WidthTerm> terms_;
};

/// The folded width of one unit triangle: its leg height becomes the offset.
WidthFunction width_function(const Placement& p);

/// Termwise multiset union over the plan's placements.
WidthFunction width_function(const CoveringPlan& plan);

/// f_T(t) for the target: the exact sum of its widths on the lines
/// y = t, t+1, t+2, ... (the target is an H-triangle in the canonical frame,
/// but its folded width is not a finite generator sum, so it is evaluated
/// directly).
Rational target_fold_width(const TargetTriangle& target, const Rational& t);

/// Checks f_{T_{n+d}}(t) == f_{T_n}(t) + nd + max(0, d - t) exactly.
bool width_identity_check(int n, const Rational& d, const Rational& t);

/// Necessary condition for coverage: the plan's folded width at t must
/// dominate the target's. A false result proves non-coverage; true proves
/// nothing by itself.
bool pointwise_necessity_check(const CoveringPlan& plan, const TargetTriangle& target,
                               const Rational& t);

}  // namespace tricover
