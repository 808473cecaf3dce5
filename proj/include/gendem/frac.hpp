#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace gendem {

// Exact rational on 64-bit words. Used where values stay small by
// construction (path durations, pairing values); all intermediates go
// through 128-bit arithmetic and overflow raises instead of wrapping.
class Frac {
 public:
  Frac() = default;
  Frac(long long n) : num_(n), den_(1) {}
  Frac(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  friend Frac operator+(const Frac& a, const Frac& b) {
    return Frac::from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                         i128(a.den_) * b.den_);
  }
  friend Frac operator-(const Frac& a, const Frac& b) {
    return Frac::from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                         i128(a.den_) * b.den_);
  }
  friend Frac operator*(const Frac& a, const Frac& b) {
    return Frac::from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Frac operator/(const Frac& a, const Frac& b) {
    if (b.num_ == 0) throw std::domain_error("Frac: division by zero");
    return Frac::from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Frac operator-() const {
    Frac r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Frac& operator+=(const Frac& o) { return *this = *this + o; }
  Frac& operator-=(const Frac& o) { return *this = *this - o; }
  Frac& operator*=(const Frac& o) { return *this = *this * o; }
  Frac& operator/=(const Frac& o) { return *this = *this / o; }

  friend bool operator==(const Frac& a, const Frac& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }
  friend bool operator<(const Frac& a, const Frac& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator<=(const Frac& a, const Frac& b) { return !(b < a); }
  friend bool operator>(const Frac& a, const Frac& b) { return b < a; }
  friend bool operator>=(const Frac& a, const Frac& b) { return !(a < b); }

  // Largest integer <= value.
  long long floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Frac& x) {
    return os << x.str();
  }

 private:
  using i128 = __int128;

  static Frac from128(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("Frac: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw std::overflow_error("Frac: value out of 64-bit range");
    Frac r;
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void normalize() { *this = from128(num_, den_); }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace gendem

template <>
struct std::hash<gendem::Frac> {
  std::size_t operator()(const gendem::Frac& x) const noexcept {
    std::size_t h = std::hash<long long>{}(x.num());
    h ^= std::hash<long long>{}(x.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
    return h;
  }
};
