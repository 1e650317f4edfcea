#include "boundsat/rational.hpp"

#include <numeric>

namespace boundsat {

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num_ = n / g;
    den_ = d / g;
}

Rational Rational::from_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty numeric string");
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
        neg = s[i] == '-';
        ++i;
    }
    std::int64_t whole = 0, frac = 0, scale = 1;
    bool any_digit = false, in_frac = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '.') {
            if (in_frac) throw std::invalid_argument("malformed number '" + s + "'");
            in_frac = true;
            continue;
        }
        if (c < '0' || c > '9') throw std::invalid_argument("malformed number '" + s + "'");
        any_digit = true;
        if (in_frac) {
            frac = frac * 10 + (c - '0');
            scale *= 10;
        } else {
            whole = whole * 10 + (c - '0');
        }
    }
    if (!any_digit) throw std::invalid_argument("malformed number '" + s + "'");
    std::int64_t n = whole * scale + frac;
    return Rational(neg ? -n : n, scale);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    // try to express as a terminating decimal
    std::int64_t d = den_;
    int twos = 0, fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);
    int digits = twos > fives ? twos : fives;
    std::int64_t scale = 1;
    for (int k = 0; k < digits; ++k) scale *= 10;
    std::int64_t scaled = num_ * (scale / den_);
    bool neg = scaled < 0;
    std::string s = std::to_string(neg ? -scaled : scaled);
    while (static_cast<int>(s.size()) <= digits) s = "0" + s;
    s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
}

} // namespace boundsat
