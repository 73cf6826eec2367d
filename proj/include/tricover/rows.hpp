#pragma once

#include "tricover/geometry.hpp"

#include <vector>

namespace tricover {

enum class SlideKind { None, UpLeft, DownRight };

// One trapezoidal row of a covering: up_count ups alternating with
// up_count - 1 downs, optionally rearranged by a slide operation.
struct RowSpec {
    int index = 1;  // row number k, counted from the apex
    int up_count = 1;
    int down_count = 0;
    Rational slide;  // >= 0; must be 0 when slide_kind is None
    SlideKind slide_kind = SlideKind::None;
    Rational base_y;
    Rational left_x;
};

/// A plain row for a grid covering: k ups, k-1 downs, no slide.
RowSpec grid_row(int k, const Rational& base_y, const Rational& left_x = 0);

/// Lays out one row. With slide s and m = up_count:
///   None:      Up_i at (x0 + i, y),          Down_i at (x0 + i, y + 1)
///   UpLeft:    Up_i at (x0 + i(1-s), y),     Down_i at (x0 + i(1-s) - s, y + 1 + s)
///   DownRight: Up_i at (x0 + i(1+s), y),     Down_i at (x0 + i(1+s) + s, y + 1 - s)
/// Up-left trades base width (m - (m-1)s) for diagonal reach; down-right
/// trades row height for base width (m + (m-1)s), leaving down-teeth below
/// the baseline and up-teeth above the downs' leg line.
/// Placements come back interleaved: Up_0, Down_0, Up_1, ..., Up_{m-1}.
/// Throws std::invalid_argument on a broken spec or slide >= 1.
std::vector<Placement> build_row(const RowSpec& spec);

/// Up-left slide value j/(k(k+1)) used on row k when pairs start at row j.
Rational slide_value_even(int j, int k);

/// Down-right slide value (j-1)/(k(k-1)) used on row k when slides start at row j.
Rational slide_value_odd(int j, int k);

}  // namespace tricover
