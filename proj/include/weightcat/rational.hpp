#pragma once
// Exact rational scalar type.
//
// Two-lane representation tuned for the acceptance-runtime budget: values
// whose numerator and denominator are small live in a pair of int64 fields
// and use 128-bit intermediate arithmetic; anything larger is promoted to a
// shared immutable boost::multiprecision::cpp_rational.  Results demote back
// to the small lane whenever they fit, so long computation chains stay fast.
//
// Invariants: always in lowest terms, denominator > 0, arithmetic exact.
// Serialization: "p/q", or just "p" when the denominator is 1.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <compare>
#include <memory>
#include <numeric>
#include <ostream>
#include <string>

#include "weightcat/errors.hpp"

namespace weightcat {

namespace detail {
using BigRat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline __int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}
}  // namespace detail

class Scalar {
public:
  Scalar() = default;
  Scalar(int v) : num_(v) {}                 // NOLINT(google-explicit-constructor)
  Scalar(std::int64_t v) : num_(v) {         // NOLINT(google-explicit-constructor)
    if (!small_fits(v)) promote_raw(detail::BigRat(v));
  }

  // p/q in lowest terms; q may be negative or zero on input (zero rejected).
  static Scalar fraction(std::int64_t p, std::int64_t q) {
    if (q == 0) throw Error("rational with zero denominator");
    if (q < 0) { p = -p; q = -q; }
    std::int64_t g = detail::gcd64(p, q);
    if (g > 1) { p /= g; q /= g; }
    Scalar s;
    if (small_fits(p) && small_fits(q)) {
      s.num_ = p;
      s.den_ = q;
    } else {
      s.promote_raw(detail::BigRat(detail::BigInt(p), detail::BigInt(q)));
    }
    return s;
  }

  static Scalar from_big(const detail::BigRat& r) {
    Scalar s;
    s.promote_raw(r);
    s.try_demote();
    return s;
  }

  // Parses "p", "-p", "p/q" with arbitrary-precision digits.
  static Scalar parse(const std::string& text) {
    auto bad = [&] { throw ParseError("bad rational literal '" + text + "'"); };
    if (text.empty()) bad();
    std::size_t slash = text.find('/');
    auto parse_int = [&](const std::string& part) -> detail::BigInt {
      if (part.empty() || part == "-") bad();
      std::size_t i = (part[0] == '-') ? 1 : 0;
      if (i == part.size()) bad();
      for (; i < part.size(); ++i)
        if (part[i] < '0' || part[i] > '9') bad();
      return detail::BigInt(part);
    };
    detail::BigInt p = parse_int(slash == std::string::npos ? text : text.substr(0, slash));
    detail::BigInt q = 1;
    if (slash != std::string::npos) q = parse_int(text.substr(slash + 1));
    if (q == 0) throw ParseError("zero denominator in '" + text + "'");
    return from_big(detail::BigRat(p, q));
  }

  bool is_zero() const { return big_ ? (*big_ == 0) : num_ == 0; }
  bool is_one() const { return big_ ? (*big_ == 1) : (num_ == 1 && den_ == 1); }
  bool is_integer() const {
    return big_ ? (boost::multiprecision::denominator(*big_) == 1) : den_ == 1;
  }
  int sign() const {
    if (big_) return (*big_ == 0) ? 0 : ((*big_ < 0) ? -1 : 1);
    return (num_ == 0) ? 0 : ((num_ < 0) ? -1 : 1);
  }

  friend Scalar operator-(const Scalar& a) {
    if (!a.big_) {
      Scalar r;
      r.num_ = -a.num_;
      r.den_ = a.den_;
      return r;
    }
    return from_big(-*a.big_);
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (!a.big_ && !b.big_) {
      // a.num/a.den + b.num/b.den with the classic gcd trick; all factors are
      // below 2^31, so the 128-bit intermediates cannot overflow.
      std::int64_t g = detail::gcd64(a.den_, b.den_);
      __int128 num = (__int128)a.num_ * (b.den_ / g) + (__int128)b.num_ * (a.den_ / g);
      __int128 den = (__int128)a.den_ * (b.den_ / g);
      return from_i128(num, den);
    }
    return from_big(a.as_big() + b.as_big());
  }

  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (!a.big_ && !b.big_) {
      __int128 num = (__int128)a.num_ * b.num_;
      __int128 den = (__int128)a.den_ * b.den_;
      return from_i128(num, den);
    }
    return from_big(a.as_big() * b.as_big());
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw Error("division by zero");
    if (!a.big_ && !b.big_) {
      __int128 num = (__int128)a.num_ * b.den_;
      __int128 den = (__int128)a.den_ * b.num_;
      return from_i128(num, den);
    }
    return from_big(a.as_big() / b.as_big());
  }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    return a.as_big() == b.as_big();
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (!a.big_ && !b.big_)
      return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    return a.as_big() < b.as_big();
  }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

  Scalar reciprocal() const {
    if (is_zero()) throw Error("reciprocal of zero");
    if (!big_) return fraction(den_, num_);
    return from_big(1 / *big_);
  }

  std::string str() const {
    if (!big_) {
      std::string s = std::to_string(num_);
      if (den_ != 1) s += "/" + std::to_string(den_);
      return s;
    }
    const auto num = boost::multiprecision::numerator(*big_);
    const auto den = boost::multiprecision::denominator(*big_);
    std::string s = num.str();
    if (den != 1) s += "/" + den.str();
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

private:
  // The small lane only holds values strictly below this bound in absolute
  // value, which keeps every 128-bit intermediate far from overflow and
  // makes negation safe.
  static constexpr std::int64_t kSmallLimit = std::int64_t(1) << 31;

  static bool small_fits(std::int64_t v) { return v > -kSmallLimit && v < kSmallLimit; }

  static Scalar from_i128(__int128 num, __int128 den) {
    if (den < 0) { num = -num; den = -den; }
    __int128 g = detail::gcd128(num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) return Scalar();
    Scalar s;
    if (num > -kSmallLimit && num < kSmallLimit && den < kSmallLimit) {
      s.num_ = (std::int64_t)num;
      s.den_ = (std::int64_t)den;
      return s;
    }
    auto to_big_int = [](__int128 v) {
      bool neg = v < 0;
      unsigned __int128 u = neg ? (unsigned __int128)(-v) : (unsigned __int128)v;
      detail::BigInt hi = (std::uint64_t)(u >> 64);
      detail::BigInt out = (hi << 64) + (std::uint64_t)(u & ~std::uint64_t(0));
      return neg ? -out : out;
    };
    s.promote_raw(detail::BigRat(to_big_int(num), to_big_int(den)));
    return s;
  }

  detail::BigRat as_big() const {
    if (big_) return *big_;
    return detail::BigRat(num_, den_);
  }

  void promote_raw(detail::BigRat r) {
    big_ = std::make_shared<const detail::BigRat>(std::move(r));
    num_ = 0;
    den_ = 1;
  }

  void try_demote() {
    if (!big_) return;
    const auto& num = boost::multiprecision::numerator(*big_);
    const auto& den = boost::multiprecision::denominator(*big_);
    if (num > -kSmallLimit && num < kSmallLimit && den < kSmallLimit) {
      num_ = num.convert_to<std::int64_t>();
      den_ = den.convert_to<std::int64_t>();
      big_.reset();
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const detail::BigRat> big_;
};

}  // namespace weightcat
