#ifndef BOUNDSAT_RATIONAL_HPP
#define BOUNDSAT_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace boundsat {

/// Exact rational for bound comparisons; boundary-equality cases must not
/// go through floating point.
class Rational {
  public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n) {}
    Rational(std::int64_t n, std::int64_t d);

    /// Parse "42", "-30", "24.5".
    static Rational from_decimal(const std::string& s);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    /// Decimal when the denominator divides a power of ten, else "n/d".
    std::string str() const;

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1; // > 0, gcd(num, den) == 1
};

} // namespace boundsat

#endif
