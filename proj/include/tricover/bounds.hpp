#pragma once

#include "tricover/plan.hpp"
#include "tricover/rational.hpp"

#include <optional>
#include <utility>

namespace tricover {

/// Largest d coverable with n^2 + 2p unit triangles: p/(n+1). Requires 1 <= p <= n.
Rational threshold_even(int n, int p);

/// Largest d coverable with n^2 + 2p + 1 unit triangles: p/n. Requires 1 <= p < n.
Rational threshold_odd(int n, int p);

/// Optimal starting row for the even construction: floor((1-d)(n+1)).
/// 0 means "revert to the naive covering". Result is in [0, n] for d in (0,1).
int select_j_even(int n, const Rational& d);

/// Optimal transition row for the odd construction: ceil(dn + 1).
/// n+1 means "revert to the naive covering". Result is in [2, n+1] for d in (0,1).
int select_j_odd(int n, const Rational& d);

struct MinimalCount {
    int count = 0;
    Method method = Method::EvenFull;  // which branch wins; Naive when both revert
};

/// Fewest unit triangles any implemented construction needs for T_{n+d}, with
/// the winning branch. Ties between the even and odd extras go even, since
/// 2p pairs beat 2p + 1.
MinimalCount k_min(int n, const Rational& d);

/// Thresholds of the two intermediate odd variants that place the 3 extras on
/// row n (first) or on row j (second): p/n - (p-1)/n^2 and
/// p/(n+1) + 1/((n+1)(n-p+1)). Both are strictly below p/n for p >= 2; kept
/// as reference formulas only, no generator exists for them.
std::pair<Rational, Rational> reference_thresholds_intermediate(int n, int p);

enum class Parity { Even, Odd };

/// (n+1)d - p for the even family, nd - p for the odd family. Strictly
/// positive exactly when covering with n^2+2p (resp. n^2+2p+1) unit
/// triangles is infeasible.
Rational infeasibility_delta(int n, const Rational& d, int p, Parity parity);

struct BoundsRecord {
    int n = 1;
    int p = 1;
    Rational threshold_even;
    std::optional<Rational> threshold_odd;  // absent at p = n
    Rational delta_even;
    std::optional<Rational> delta_odd;
};

/// Thresholds and deltas for one (n, p) at a given d.
BoundsRecord make_bounds_record(int n, int p, const Rational& d);

}  // namespace tricover
