#include "tricover/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace tricover {

namespace {

void check_d_open_unit(const Rational& d) {
    if (d <= 0 || d >= 1) throw std::invalid_argument("d must be in (0, 1)");
}

}  // namespace

Rational threshold_even(int n, int p) {
    if (p < 1 || p > n) throw std::invalid_argument("threshold_even: need 1 <= p <= n");
    return Rational(BigInt(p), BigInt(n + 1));
}

Rational threshold_odd(int n, int p) {
    if (p < 1 || p >= n) throw std::invalid_argument("threshold_odd: need 1 <= p < n");
    return Rational(BigInt(p), BigInt(n));
}

int select_j_even(int n, const Rational& d) {
    if (n < 1) throw std::invalid_argument("select_j_even: n must be >= 1");
    check_d_open_unit(d);
    return static_cast<int>(floor_rat((1 - d) * Rational(n + 1)));
}

int select_j_odd(int n, const Rational& d) {
    if (n < 1) throw std::invalid_argument("select_j_odd: n must be >= 1");
    check_d_open_unit(d);
    return static_cast<int>(ceil_rat(d * Rational(n) + 1));
}

MinimalCount k_min(int n, const Rational& d) {
    int j_even = select_j_even(n, d);
    int j_odd = select_j_odd(n, d);
    int p_even = n - j_even + 1;  // n + 1 when the even selector reverts
    int p_odd = j_odd - 1;        // n when the odd selector reverts (the naive count)

    MinimalCount result;
    result.count = n * n + std::min(2 * p_even, 2 * p_odd + 1);
    if (p_odd < p_even) {
        result.method = j_odd == n + 1 ? Method::Naive : Method::OddFull;
    } else {
        result.method = j_even == 0 ? Method::Naive : Method::EvenFull;
    }
    return result;
}

std::pair<Rational, Rational> reference_thresholds_intermediate(int n, int p) {
    if (p < 1 || p >= n) {
        throw std::invalid_argument("reference_thresholds_intermediate: need 1 <= p < n");
    }
    Rational slid_last_row = Rational(BigInt(p), BigInt(n)) -
                             Rational(BigInt(p - 1), BigInt(n) * BigInt(n));
    Rational block_on_row_j = Rational(BigInt(p), BigInt(n + 1)) +
                              Rational(BigInt(1), BigInt(n + 1) * BigInt(n - p + 1));
    return {slid_last_row, block_on_row_j};
}

Rational infeasibility_delta(int n, const Rational& d, int p, Parity parity) {
    if (p < 1) throw std::invalid_argument("infeasibility_delta: p must be >= 1");
    if (parity == Parity::Even) return Rational(n + 1) * d - p;
    return Rational(n) * d - p;
}

BoundsRecord make_bounds_record(int n, int p, const Rational& d) {
    BoundsRecord rec;
    rec.n = n;
    rec.p = p;
    rec.threshold_even = threshold_even(n, p);
    if (p < n) rec.threshold_odd = threshold_odd(n, p);
    rec.delta_even = infeasibility_delta(n, d, p, Parity::Even);
    if (p < n) rec.delta_odd = infeasibility_delta(n, d, p, Parity::Odd);
    return rec;
}

}  // namespace tricover
