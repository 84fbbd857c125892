#pragma once
// Exact rational arithmetic on 64-bit numerator/denominator.  Intermediates
// run through __int128; results that cannot be reduced back into 64 bits
// raise std::overflow_error instead of silently wrapping.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace usc {

class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) { assign(n, d); }

  // Accepts "p", "p/q", optional sign and surrounding whitespace.
  static Rational parse(const std::string& text);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  // Renders "p" or "p/q"; parse(str()) round-trips.
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from128((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                   (__int128)a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from128((__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_,
                   (__int128)a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return from128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
  }
  Rational operator-() const { return from128(-(__int128)num_, den_); }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  void assign(long long n, long long d);
  static Rational from128(__int128 n, __int128 d);

  long long num_;
  long long den_;  // > 0, gcd(num_, den_) == 1
};

namespace detail {
inline __int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}
}  // namespace detail

inline Rational Rational::from128(__int128 n, __int128 d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = detail::gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  constexpr __int128 lo = -((__int128)1 << 63), hi = ((__int128)1 << 63) - 1;
  if (n < lo || n > hi || d > hi)
    throw std::overflow_error("rational overflows 64-bit storage");
  Rational r;
  r.num_ = (long long)n;
  r.den_ = (long long)d;
  return r;
}

inline void Rational::assign(long long n, long long d) {
  *this = from128(n, d);
}

inline Rational Rational::parse(const std::string& text) {
  size_t b = text.find_first_not_of(" \t");
  size_t e = text.find_last_not_of(" \t");
  if (b == std::string::npos)
    throw std::invalid_argument("empty rational literal");
  std::string s = text.substr(b, e - b + 1);
  size_t slash = s.find('/');
  auto parse_ll = [](const std::string& part) {
    if (part.empty()) throw std::invalid_argument("bad rational literal");
    size_t pos = 0;
    long long v;
    try {
      v = std::stoll(part, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad rational literal: " + part);
    }
    if (pos != part.size())
      throw std::invalid_argument("bad rational literal: " + part);
    return v;
  };
  if (slash == std::string::npos) return Rational(parse_ll(s));
  return Rational(parse_ll(s.substr(0, slash)), parse_ll(s.substr(slash + 1)));
}

inline std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

inline Rational midpoint(const Rational& a, const Rational& b) {
  return (a + b) / Rational(2);
}

}  // namespace usc
