#pragma once

#include "tricover/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tricover {

enum class Method {
    Grid,
    Naive,
    BottomPair,    // n^2+2: one extra pair, up-left slide on the bottom row
    BottomPairs,   // n^2+2q: q extra pairs in the bottom row
    EvenBasic,     // n^2+2(n-j+1): pair per row from j, slide j/(k(k+1))
    EvenFull,      // EvenBasic with the optimal j
    T2Block,       // n^2+3: slid bottom strip plus an unslid T_2 block
    OddBasic,      // n^2+2(j-1)+1: T_j grid atop down-right slid rows
    OddFull,       // OddBasic with the optimal j
    Consolidated,  // whichever of EvenFull/OddFull uses fewer triangles
};

std::string method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

struct CoveringPlan {
    std::vector<Placement> placements;
    int n = 1;
    Rational d;
    Method method = Method::Grid;
    std::optional<int> j;

    int count() const { return static_cast<int>(placements.size()); }
    TargetTriangle target() const { return TargetTriangle{n, d}; }
};

}  // namespace tricover
