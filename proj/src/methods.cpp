#include "tricover/methods.hpp"

#include "tricover/bounds.hpp"

#include <stdexcept>

namespace tricover {

namespace {

void check_params(int n, const Rational& d) {
    if (n < 1) throw std::invalid_argument("covering: n must be >= 1");
    if (d <= 0 || d >= 1) throw std::invalid_argument("covering: d must be in (0, 1)");
}

void append_row(CoveringPlan& plan, const RowSpec& spec) {
    for (const Placement& p : build_row(spec)) plan.placements.push_back(p);
}

/// Grid rows 1..rows of a T_rows anchored with its apex at (0, apex_y).
void append_grid(CoveringPlan& plan, int rows, const Rational& apex_y) {
    for (int k = 1; k <= rows; ++k) {
        append_row(plan, grid_row(k, apex_y - k));
    }
}

void refuse_beyond(const Rational& d, const Rational& bound, bool force, const char* method) {
    if (!force && d > bound) {
        throw ThresholdExceeded(bound, std::string(method) + ": d = " + format_rational(d) +
                                           " exceeds the coverable bound " +
                                           format_rational(bound));
    }
}

}  // namespace

CoveringPlan grid_cover(int n) {
    if (n < 1) throw std::invalid_argument("grid_cover: n must be >= 1");
    CoveringPlan plan;
    plan.n = n;
    plan.d = 0;
    plan.method = Method::Grid;
    append_grid(plan, n, Rational(n));
    return plan;
}

CoveringPlan naive_cover(int n, const Rational& d) {
    check_params(n, d);
    CoveringPlan plan;
    plan.n = n;
    plan.d = d;
    plan.method = Method::Naive;
    append_grid(plan, n + 1, plan.target().side());
    return plan;
}

CoveringPlan bottom_pair_cover(int n, const Rational& d, bool force) {
    check_params(n, d);
    refuse_beyond(d, Rational(BigInt(1), BigInt(n + 1)), force, "bottom_pair_cover");

    CoveringPlan plan;
    plan.n = n;
    plan.d = d;
    plan.method = Method::BottomPair;
    append_grid(plan, n - 1, plan.target().side());

    RowSpec bottom;
    bottom.index = n;
    bottom.up_count = n + 1;
    bottom.down_count = n;
    bottom.slide = d;
    bottom.slide_kind = SlideKind::UpLeft;
    bottom.base_y = 0;
    bottom.left_x = 0;
    append_row(plan, bottom);
    return plan;
}

CoveringPlan bottom_pairs_cover(int n, const Rational& d) {
    check_params(n, d);
    // Least q >= 1 with d <= q/(n+q), i.e. q >= dn/(1-d).
    BigInt q_big = ceil_rat(d * Rational(n) / (1 - d));
    if (q_big > n) return naive_cover(n, d);  // only happens for d > 1/2
    int q = q_big < 1 ? 1 : static_cast<int>(q_big);

    CoveringPlan plan;
    plan.n = n;
    plan.d = d;
    plan.method = Method::BottomPairs;
    append_grid(plan, n - 1, plan.target().side());

    RowSpec bottom;
    bottom.index = n;
    bottom.up_count = n + q;
    bottom.down_count = n + q - 1;
    bottom.slide = d;
    bottom.slide_kind = SlideKind::UpLeft;
    bottom.base_y = 0;
    bottom.left_x = 0;
    append_row(plan, bottom);
    return plan;
}

CoveringPlan even_cover(int n, const Rational& d, int j, bool force) {
    check_params(n, d);
    if (j < 1 || j > n) throw std::invalid_argument("even_cover: need 1 <= j <= n");
    refuse_beyond(d, 1 - Rational(BigInt(j), BigInt(n + 1)), force, "even_cover");

    CoveringPlan plan;
    plan.n = n;
    plan.d = d;
    plan.method = Method::EvenBasic;
    plan.j = j;
    Rational apex_y = plan.target().side();
    append_grid(plan, j - 1, apex_y);

    Rational slide_sum = 0;
    for (int k = j; k <= n; ++k) {
        Rational s = slide_value_even(j, k);
        slide_sum += s;
        RowSpec row;
        row.index = k;
        row.up_count = k + 1;
        row.down_count = k;
        row.slide = s;
        row.slide_kind = SlideKind::UpLeft;
        row.base_y = apex_y - (Rational(k) + slide_sum);
        row.left_x = 0;
        append_row(plan, row);
    }
    return plan;
}

CoveringPlan even_cover_auto(int n, const Rational& d) {
    int j = select_j_even(n, d);
    if (j == 0) return naive_cover(n, d);
    CoveringPlan plan = even_cover(n, d, j);
    plan.method = Method::EvenFull;
    return plan;
}

CoveringPlan t2_block_cover(int n, const Rational& d, bool force) {
    check_params(n, d);
    if (n < 2) throw std::invalid_argument("t2_block_cover: n must be >= 2");
    Rational s(BigInt(1), BigInt(n));
    refuse_beyond(d, s, force, "t2_block_cover");

    CoveringPlan plan;
    plan.n = n;
    plan.d = d;
    plan.method = Method::T2Block;
    append_grid(plan, n - 1, plan.target().side());

    RowSpec strip;
    strip.index = n;
    strip.up_count = n;
    strip.down_count = n - 1;
    strip.slide = s;
    strip.slide_kind = SlideKind::UpLeft;
    strip.base_y = 0;
    strip.left_x = 0;
    append_row(plan, strip);

    // Unslid T_2 block whose bottom-left up is the strip's last up at
    // (block_x, 0): its down, right up, and top up are the three extras.
    Rational block_x = Rational(n - 1) * (1 - s);
    plan.placements.push_back(Placement{Orientation::Down, Point2{block_x, Rational(1)}});
    plan.placements.push_back(Placement{Orientation::Up, Point2{block_x + 1, Rational(0)}});
    plan.placements.push_back(Placement{Orientation::Up, Point2{block_x, Rational(1)}});
    return plan;
}

CoveringPlan odd_cover(int n, const Rational& d, int j, bool force) {
    check_params(n, d);
    if (j < 2 || j > n) throw std::invalid_argument("odd_cover: need 2 <= j <= n");
    refuse_beyond(d, Rational(BigInt(j - 1), BigInt(n)), force, "odd_cover");

    CoveringPlan plan;
    plan.n = n;
    plan.d = d;
    plan.method = Method::OddBasic;
    plan.j = j;
    Rational apex_y = plan.target().side();

    // Row 1's three extras plus one pair on each of rows 2..j-1 make the top
    // j rows exactly a T_j grid.
    append_grid(plan, j, apex_y);

    Rational drop = Rational(j);
    for (int k = j; k <= n; ++k) {
        Rational s = slide_value_odd(j, k);
        drop += 1 - s;
        RowSpec row;
        row.index = k;
        row.up_count = k;
        row.down_count = k - 1;
        row.slide = s;
        row.slide_kind = SlideKind::DownRight;
        row.base_y = apex_y - drop;
        row.left_x = 0;
        append_row(plan, row);
    }
    return plan;
}

CoveringPlan odd_cover_auto(int n, const Rational& d) {
    int j = select_j_odd(n, d);
    if (j == n + 1) return naive_cover(n, d);
    CoveringPlan plan = odd_cover(n, d, j);
    plan.method = Method::OddFull;
    return plan;
}

CoveringPlan consolidated_cover(int n, const Rational& d) {
    int p_even = n - select_j_even(n, d) + 1;
    int p_odd = select_j_odd(n, d) - 1;
    if (p_odd < p_even) return odd_cover_auto(n, d);
    return even_cover_auto(n, d);
}

Rational plan_threshold(const CoveringPlan& plan) {
    int n = plan.n;
    switch (plan.method) {
        case Method::Grid: return 0;
        case Method::Naive: return 1;
        case Method::BottomPair: return Rational(BigInt(1), BigInt(n + 1));
        case Method::BottomPairs: {
            int q = (plan.count() - n * n) / 2;
            return Rational(BigInt(q), BigInt(n + q));
        }
        case Method::EvenBasic:
        case Method::EvenFull:
            return 1 - Rational(BigInt(plan.j.value()), BigInt(n + 1));
        case Method::T2Block: return Rational(BigInt(1), BigInt(n));
        case Method::OddBasic:
        case Method::OddFull:
            return Rational(BigInt(plan.j.value() - 1), BigInt(n));
        case Method::Consolidated: break;
    }
    throw std::invalid_argument("plan_threshold: plan carries no construction threshold");
}

}  // namespace tricover
