#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hopfbraid {

struct division_by_zero : std::runtime_error {
  division_by_zero() : std::runtime_error("division by zero") {}
};

using BigRational = boost::multiprecision::cpp_rational;

// Exact rational scalar.  Values normally live in int64 numerator/denominator
// with 128-bit intermediates; anything larger is promoted transparently to an
// arbitrary-precision backend, so arithmetic is exact at every magnitude.
// Canonical form (gcd == 1, positive denominator) is restored after every
// operation, making equality and ordering structural.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : n_(n) {}
  Rational(long long num, long long den) { assign128(num, den); }

  bool is_small() const { return !big_; }
  long long num_small() const { return n_; }
  long long den_small() const { return d_; }
  BigRational to_big() const {
    return big_ ? *big_ : BigRational(n_, d_);
  }

  bool is_zero() const { return big_ ? big_->is_zero() : n_ == 0; }

  Rational operator-() const {
    if (!big_) {
      Rational r;
      r.n_ = -n_;
      r.d_ = d_;
      return r;
    }
    Rational r;
    r.set_big(-*big_);
    return r;
  }

  Rational& operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
      __int128 n = (__int128)n_ * o.d_ + (__int128)o.n_ * d_;
      __int128 d = (__int128)d_ * o.d_;
      assign128(n, d);
    } else {
      set_big(to_big() + o.to_big());
    }
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
      assign128((__int128)n_ * o.n_, (__int128)d_ * o.d_);
    } else {
      set_big(to_big() * o.to_big());
    }
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw division_by_zero();
    if (!big_ && !o.big_) {
      assign128((__int128)n_ * o.d_, (__int128)d_ * o.n_);
    } else {
      set_big(to_big() / o.to_big());
    }
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    return a.to_big() == b.to_big();
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_)
      return (__int128)a.n_ * b.d_ < (__int128)b.n_ * a.d_;
    return a.to_big() < b.to_big();
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  long long n_ = 0;
  long long d_ = 1;
  std::shared_ptr<const BigRational> big_;  // null for the int64 fast path

  static unsigned __int128 abs128(__int128 v) {
    return v < 0 ? -(unsigned __int128)v : (unsigned __int128)v;
  }
  static __int128 gcd128(__int128 a, __int128 b) {
    unsigned __int128 x = abs128(a), y = abs128(b);
    while (y) {
      unsigned __int128 t = x % y;
      x = y;
      y = t;
    }
    return (__int128)x;
  }
  void assign128(__int128 n, __int128 d) {
    if (d == 0) throw division_by_zero();
    big_.reset();
    if (n == 0) {
      n_ = 0;
      d_ = 1;
      return;
    }
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n, d);
    n /= g;
    d /= g;
    constexpr __int128 lo = std::numeric_limits<long long>::min();
    constexpr __int128 hi = std::numeric_limits<long long>::max();
    if (n < lo || n > hi || d > hi) {
      set_big(BigRational(boost::multiprecision::cpp_int(n),
                          boost::multiprecision::cpp_int(d)));
      return;
    }
    n_ = (long long)n;
    d_ = (long long)d;
  }
  void set_big(BigRational v) {
    const auto& bn = boost::multiprecision::numerator(v);
    const auto& bd = boost::multiprecision::denominator(v);
    constexpr long long lo = std::numeric_limits<long long>::min();
    constexpr long long hi = std::numeric_limits<long long>::max();
    if (bn >= lo && bn <= hi && bd <= hi) {
      n_ = (long long)bn;
      d_ = (long long)bd;
      big_.reset();
      return;
    }
    big_ = std::make_shared<const BigRational>(std::move(v));
    n_ = 0;
    d_ = 1;
  }
};

inline Rational make_rational(long long num, long long den) {
  return Rational(num, den);
}

inline std::string rational_str(const Rational& r) {
  if (!r.is_small()) {
    BigRational b = r.to_big();
    std::string s = boost::multiprecision::numerator(b).str();
    if (boost::multiprecision::denominator(b) != 1)
      s += "/" + boost::multiprecision::denominator(b).str();
    return s;
  }
  std::string s = std::to_string(r.num_small());
  if (r.den_small() != 1) s += "/" + std::to_string(r.den_small());
  return s;
}

// int64 views used by the JSON layer; serialized values in this project stay
// far below the limit, so a promoted value here is a hard error rather than a
// silent truncation.
inline long long rational_num_ll(const Rational& r) {
  if (!r.is_small()) throw std::overflow_error("rational numerator exceeds int64");
  return r.num_small();
}
inline long long rational_den_ll(const Rational& r) {
  if (!r.is_small()) throw std::overflow_error("rational denominator exceeds int64");
  return r.den_small();
}

inline long long numerator(const Rational& r) { return rational_num_ll(r); }
inline long long denominator(const Rational& r) { return rational_den_ll(r); }

}  // namespace hopfbraid
