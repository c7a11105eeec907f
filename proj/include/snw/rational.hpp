#pragma once

#include <charconv>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <string_view>

#include "snw/error.hpp"

namespace snw {

// Exact rational arithmetic for the neighborhood predicates. Conjecture-level
// comparisons (d2 < lambda*d1 and friends) must not go through floating
// point: ratios of exactly 1 decide conjecture status.
class Rational {
  public:
    Rational() = default;

    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

    static Rational from_int(std::int64_t v) { return Rational(v, 1); }

    // Accepts "p/q" or a bare integer "p". Anything else (decimals included)
    // is a parse error.
    static Rational parse(std::string_view text) {
        const auto parse_int = [&](std::string_view t) {
            std::int64_t value = 0;
            const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
            if (ec != std::errc{} || ptr != t.data() + t.size())
                fail(errc::parse_error, "not a rational: '" + std::string(text) + "'");
            return value;
        };
        const auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(parse_int(text), 1);
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool positive() const { return num_ > 0; }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }

    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // value < this * scale, evaluated exactly. The workhorse behind
    // "d2 < lambda * d1" with integer neighborhood sizes.
    bool scaled_greater_than(std::int64_t value, std::int64_t scale) const {
        return static_cast<__int128>(value) * den_ < static_cast<__int128>(num_) * scale;
    }

  private:
    void normalize() {
        if (den_ == 0) fail(errc::parse_error, "zero denominator");
        if (num_ == std::numeric_limits<std::int64_t>::min() ||
            den_ == std::numeric_limits<std::int64_t>::min())
            fail(errc::parse_error, "rational magnitude out of range");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace snw
