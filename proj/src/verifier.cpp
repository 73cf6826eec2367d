#include "tricover/verifier.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace tricover {

namespace {

// A vertical leg x = x0 or a hypotenuse on x + y = offset, with its y-span.
struct Segment {
    Rational value;  // x0 for verticals, x + y offset for diagonals
    Rational y_lo;
    Rational y_hi;
    int owner;  // placement index, -1 for the target
};

struct EdgeSet {
    std::vector<Segment> verticals;
    std::vector<Segment> diagonals;
    std::vector<Rational> vertex_ys;
};

EdgeSet collect_edges(const CoveringPlan& plan, const TargetTriangle& target) {
    EdgeSet edges;
    Rational len = target.side();
    edges.verticals.push_back({Rational(0), Rational(0), len, -1});
    edges.diagonals.push_back({len, Rational(0), len, -1});
    edges.vertex_ys.push_back(0);
    edges.vertex_ys.push_back(len);

    for (std::size_t i = 0; i < plan.placements.size(); ++i) {
        const Placement& p = plan.placements[i];
        const Rational& ax = p.anchor.x;
        const Rational& ay = p.anchor.y;
        int owner = static_cast<int>(i);
        if (p.orientation == Orientation::Up) {
            edges.verticals.push_back({ax, ay, ay + 1, owner});
            edges.diagonals.push_back({ax + ay + 1, ay, ay + 1, owner});
            edges.vertex_ys.push_back(ay);
            edges.vertex_ys.push_back(ay + 1);
        } else {
            edges.verticals.push_back({ax + 1, ay - 1, ay, owner});
            edges.diagonals.push_back({ax + ay, ay - 1, ay, owner});
            edges.vertex_ys.push_back(ay);
            edges.vertex_ys.push_back(ay - 1);
        }
    }
    return edges;
}

std::vector<Rational> critical_levels(const CoveringPlan& plan, const TargetTriangle& target) {
    EdgeSet edges = collect_edges(plan, target);
    Rational len = target.side();

    std::vector<Rational> levels;
    for (const Rational& y : edges.vertex_ys) {
        if (y >= 0 && y <= len) levels.push_back(y);
    }
    for (const Segment& v : edges.verticals) {
        for (const Segment& g : edges.diagonals) {
            if (v.owner == g.owner) continue;
            Rational y = g.value - v.value;
            if (y < v.y_lo || y > v.y_hi) continue;
            if (y < g.y_lo || y > g.y_hi) continue;
            if (y < 0 || y > len) continue;
            levels.push_back(y);
        }
    }
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    return levels;
}

// Checks [0, need] against the union of closed intervals; returns a point of
// the first uncovered stretch, or nullopt if contained.
std::optional<Rational> first_gap(std::vector<Interval>& xs, const Rational& need) {
    std::sort(xs.begin(), xs.end(), [](const Interval& a, const Interval& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    bool origin_covered = false;
    Rational reach = 0;  // [0, reach] is covered once origin_covered holds
    for (const Interval& iv : xs) {
        if (iv.hi < 0) continue;
        if (!origin_covered) {
            if (iv.lo > 0) break;  // sorted, so x = 0 is in no interval
            origin_covered = true;
            reach = iv.hi;
        } else {
            if (iv.lo > reach) break;  // closed abutment (lo == reach) chains
            if (iv.hi > reach) reach = iv.hi;
        }
        if (reach >= need) return std::nullopt;
    }
    // Uncovered stretch starts at `reach` (at 0 inclusive when the origin was
    // never reached) and runs to the nearest interval start or target edge.
    Rational upper = need;
    for (const Interval& iv : xs) {
        if (iv.lo > reach && iv.lo < upper) upper = iv.lo;
    }
    if (!origin_covered) return upper == 0 ? Rational(0) : upper / 2;
    return (reach + upper) / 2;
}

}  // namespace

CoverageReport verify_coverage(const CoveringPlan& plan, const TargetTriangle& target) {
    CoverageReport report;
    report.checked_method = CheckMethod::ExactSlab;

    std::vector<Rational> levels = critical_levels(plan, target);
    report.critical_levels = static_cast<int>(levels.size());

    for (const Rational& y : levels) {
        Rational need = target.side() - y;
        std::vector<Interval> xs;
        xs.reserve(plan.placements.size());
        for (const Placement& p : plan.placements) {
            if (auto iv = cross_section(p, y)) xs.push_back(*iv);
        }
        if (auto gap_x = first_gap(xs, need)) {
            report.covered = false;
            report.witness = Point2{*gap_x, y};
            return report;
        }
    }
    report.covered = true;
    return report;
}

CoverageReport sample_check(const CoveringPlan& plan, const TargetTriangle& target,
                            std::uint64_t seed, int count) {
    if (count < 1) throw std::invalid_argument("sample_check: count must be >= 1");
    CoverageReport report;
    report.checked_method = CheckMethod::Sampling;
    report.critical_levels = 0;

    constexpr std::uint64_t kGrid = 1u << 16;
    std::mt19937_64 gen(seed);
    Rational len = target.side();

    for (int drawn = 0; drawn < count; ++drawn) {
        std::uint64_t i, j;
        do {
            i = gen() % (kGrid + 1);
            j = gen() % (kGrid + 1);
        } while (i + j > kGrid);
        Point2 q{len * Rational(BigInt(i), BigInt(kGrid)),
                 len * Rational(BigInt(j), BigInt(kGrid))};
        bool hit = false;
        for (const Placement& p : plan.placements) {
            if (contains(p, q)) {
                hit = true;
                break;
            }
        }
        if (!hit) {
            report.covered = false;
            report.witness = q;
            return report;
        }
    }
    report.covered = true;
    return report;
}

}  // namespace tricover
