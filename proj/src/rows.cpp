#include "tricover/rows.hpp"

#include <stdexcept>

namespace tricover {

RowSpec grid_row(int k, const Rational& base_y, const Rational& left_x) {
    RowSpec spec;
    spec.index = k;
    spec.up_count = k;
    spec.down_count = k - 1;
    spec.slide = 0;
    spec.slide_kind = SlideKind::None;
    spec.base_y = base_y;
    spec.left_x = left_x;
    return spec;
}

std::vector<Placement> build_row(const RowSpec& spec) {
    if (spec.index < 1) throw std::invalid_argument("row: index must be >= 1");
    if (spec.up_count < 1) throw std::invalid_argument("row: need at least one up-triangle");
    if (spec.down_count != spec.up_count - 1) {
        throw std::invalid_argument("row: down_count must be up_count - 1");
    }
    if (spec.slide < 0) throw std::invalid_argument("row: slide must be >= 0");
    if (spec.slide >= 1) throw std::invalid_argument("row: slide must be < 1");
    if (spec.slide_kind == SlideKind::None && spec.slide != 0) {
        throw std::invalid_argument("row: unslid row must have slide 0");
    }

    const Rational& s = spec.slide;
    const Rational& y = spec.base_y;
    const Rational& x0 = spec.left_x;

    // Per-step advance of the up anchors, and the downs' offset from the
    // preceding up.
    Rational step, down_dx, down_y;
    switch (spec.slide_kind) {
        case SlideKind::None:
            step = 1;
            down_dx = 0;
            down_y = y + 1;
            break;
        case SlideKind::UpLeft:
            step = 1 - s;
            down_dx = -s;
            down_y = y + 1 + s;
            break;
        case SlideKind::DownRight:
            step = 1 + s;
            down_dx = s;
            down_y = y + 1 - s;
            break;
    }

    std::vector<Placement> row;
    row.reserve(static_cast<std::size_t>(spec.up_count + spec.down_count));
    for (int i = 0; i < spec.up_count; ++i) {
        Rational ux = x0 + Rational(i) * step;
        row.push_back(Placement{Orientation::Up, Point2{ux, y}});
        if (i < spec.down_count) {
            row.push_back(Placement{Orientation::Down, Point2{ux + down_dx, down_y}});
        }
    }
    return row;
}

Rational slide_value_even(int j, int k) {
    if (j < 1 || k < j) throw std::invalid_argument("slide_value_even: need 1 <= j <= k");
    return Rational(BigInt(j), BigInt(k) * BigInt(k + 1));
}

Rational slide_value_odd(int j, int k) {
    if (j < 2 || k < j) throw std::invalid_argument("slide_value_odd: need 2 <= j <= k");
    return Rational(BigInt(j - 1), BigInt(k) * BigInt(k - 1));
}

}  // namespace tricover
