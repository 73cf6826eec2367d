#include "tricover/rational.hpp"

#include <cctype>

namespace tricover {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational rat(long long num, long long den) {
    return Rational(BigInt(num), BigInt(den));
}

BigInt floor_rat(const Rational& q) {
    BigInt n = numerator(q);
    BigInt d = denominator(q);
    BigInt t = n / d;  // truncates toward zero; d > 0 by invariant
    if (n < 0 && t * d != n) --t;
    return t;
}

BigInt ceil_rat(const Rational& q) {
    return -floor_rat(-q);
}

Rational frac_rat(const Rational& q) {
    return q - Rational(floor_rat(q));
}

std::optional<Rational> parse_rational(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) return std::nullopt;

    Rational value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return std::nullopt;
        BigInt d{std::string(den)};
        if (d == 0) return std::nullopt;
        value = Rational(BigInt{std::string(num)}, d);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view ipart = text.substr(0, dot);
        std::string_view fpart = text.substr(dot + 1);
        if (ipart.empty() && fpart.empty()) return std::nullopt;
        if (!ipart.empty() && !all_digits(ipart)) return std::nullopt;
        if (!fpart.empty() && !all_digits(fpart)) return std::nullopt;
        BigInt scale = 1;
        for (std::size_t i = 0; i < fpart.size(); ++i) scale *= 10;
        BigInt whole = ipart.empty() ? BigInt(0) : BigInt{std::string(ipart)};
        BigInt fraction = fpart.empty() ? BigInt(0) : BigInt{std::string(fpart)};
        value = Rational(whole * scale + fraction, scale);
    } else {
        if (!all_digits(text)) return std::nullopt;
        value = Rational(BigInt{std::string(text)});
    }
    return negative ? -value : value;
}

std::string format_rational(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

double to_double(const Rational& q) {
    return q.convert_to<double>();
}

}  // namespace tricover
