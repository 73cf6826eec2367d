#include "tricover/plan.hpp"

namespace tricover {

std::string method_name(Method m) {
    switch (m) {
        case Method::Grid: return "grid";
        case Method::Naive: return "naive";
        case Method::BottomPair: return "bottom_pair";
        case Method::BottomPairs: return "bottom_pairs";
        case Method::EvenBasic: return "even_basic";
        case Method::EvenFull: return "even_full";
        case Method::T2Block: return "t2_block";
        case Method::OddBasic: return "odd_basic";
        case Method::OddFull: return "odd_full";
        case Method::Consolidated: return "consolidated";
    }
    return "unknown";
}

std::optional<Method> method_from_name(const std::string& name) {
    for (Method m : {Method::Grid, Method::Naive, Method::BottomPair, Method::BottomPairs,
                     Method::EvenBasic, Method::EvenFull, Method::T2Block, Method::OddBasic,
                     Method::OddFull, Method::Consolidated}) {
        if (method_name(m) == name) return m;
    }
    return std::nullopt;
}

}  // namespace tricover
