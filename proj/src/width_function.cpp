#include "tricover/width_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace tricover {

void WidthFunction::add_up(const Rational& leg_y) {
    terms_.push_back(WidthTerm{-1, frac_rat(leg_y)});
}

void WidthFunction::add_down(const Rational& leg_y) {
    terms_.push_back(WidthTerm{+1, frac_rat(leg_y)});
}

int WidthFunction::slope() const {
    int m = 0;
    for (const WidthTerm& term : terms_) m += term.sign;
    return m;
}

Rational WidthFunction::evaluate(const Rational& t) const {
    Rational tf = frac_rat(t);
    Rational value = 0;
    for (const WidthTerm& term : terms_) {
        Rational u = tf - term.offset;
        if (u < 0) u += 1;  // {t - a} with both already in [0, 1)
        value += term.sign > 0 ? u : 1 - u;
    }
    return value;
}

Rational WidthFunction::integral() const {
    // The function is linear with slope() between consecutive breakpoints and
    // right-continuous at them, so each piece integrates to
    // f(b) w + slope w^2 / 2.
    std::vector<Rational> cuts;
    cuts.reserve(terms_.size() + 2);
    cuts.push_back(0);
    for (const WidthTerm& term : terms_) cuts.push_back(term.offset);
    cuts.push_back(1);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    Rational m(slope());
    Rational area = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Rational width = cuts[i + 1] - cuts[i];
        area += evaluate(cuts[i]) * width + m * width * width / 2;
    }
    return area;
}

WidthFunction width_function(const Placement& p) {
    WidthFunction f;
    if (p.orientation == Orientation::Up) {
        f.add_up(p.anchor.y);
    } else {
        f.add_down(p.anchor.y);
    }
    return f;
}

WidthFunction width_function(const CoveringPlan& plan) {
    WidthFunction f;
    for (const Placement& p : plan.placements) {
        if (p.orientation == Orientation::Up) {
            f.add_up(p.anchor.y);
        } else {
            f.add_down(p.anchor.y);
        }
    }
    return f;
}

Rational target_fold_width(const TargetTriangle& target, const Rational& t) {
    Rational tf = frac_rat(t);
    Rational len = target.side();
    Rational width = 0;
    for (Rational y = tf; y <= len; y += 1) {
        width += len - y;
    }
    return width;
}

bool width_identity_check(int n, const Rational& d, const Rational& t) {
    if (d <= 0 || d >= 1) throw std::invalid_argument("width_identity_check: d must be in (0, 1)");
    Rational tf = frac_rat(t);
    Rational lhs = target_fold_width(TargetTriangle{n, d}, tf);
    Rational extra = d - tf > 0 ? d - tf : Rational(0);
    Rational rhs = target_fold_width(TargetTriangle{n, 0}, tf) + Rational(n) * d + extra;
    return lhs == rhs;
}

bool pointwise_necessity_check(const CoveringPlan& plan, const TargetTriangle& target,
                               const Rational& t) {
    return width_function(plan).evaluate(t) >= target_fold_width(target, t);
}

}  // namespace tricover
