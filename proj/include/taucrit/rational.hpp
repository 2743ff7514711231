#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace taucrit {

/// Exact rational with 64-bit parts. Always normalized: den > 0, gcd(num, den) = 1.
/// Arithmetic throws std::overflow_error rather than wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num) : num_(num) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Accepts "3", "-2", "3/2" and terminating decimals such as "2.5".
  static Rational parse(std::string_view text) {
    auto fail = [&]() -> Rational { throw std::invalid_argument("not a rational number: '" + std::string(text) + "'"); };
    auto integer = [&](std::string_view s) {
      std::int64_t value = 0;
      const auto* end = s.data() + s.size();
      auto [ptr, ec] = std::from_chars(s.data(), end, value);
      if (s.empty() || ec != std::errc() || ptr != end) fail();
      return value;
    };
    if (const auto slash = text.find('/'); slash != std::string_view::npos)
      return Rational(integer(text.substr(0, slash)), integer(text.substr(slash + 1)));
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
      std::string_view whole = text.substr(0, dot);
      std::string_view frac = text.substr(dot + 1);
      if (frac.empty() || frac.size() > 15 || frac.front() == '-' || frac.front() == '+') fail();
      const bool negative = !whole.empty() && whole.front() == '-';
      const std::int64_t w = (whole.empty() || whole == "-") ? 0 : integer(whole);
      std::int64_t scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      const Rational f(integer(frac), scale);
      return negative ? Rational(w) - f : Rational(w) + f;
    }
    return Rational(integer(text));
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(add(mul(a.num_, b.den_), mul(b.num_, a.den_)), mul(a.den_, b.den_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + Rational(-b.num_, b.den_); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mul(a.num_, b.num_), mul(a.den_, b.den_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return Rational(mul(a.num_, b.den_), mul(a.den_, b.num_));
  }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return mul(a.num_, b.den_) <=> mul(b.num_, a.den_);
  }

 private:
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
    return r;
  }
  static std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
    return r;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace taucrit
