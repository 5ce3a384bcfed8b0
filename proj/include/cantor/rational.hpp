#ifndef CANTOR_RATIONAL_HPP
#define CANTOR_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cantor {

// Exact rational arithmetic on 64-bit num/den. All quantities here are dyadic
// (denominators are powers of two up to ~2^60), so overflow is checked, not
// worked around.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT implicit on purpose
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  static Rational pow2(int e) {  // 2^e, e may be negative
    if (e >= 0) {
      if (e > 62) throw std::overflow_error("pow2");
      return Rational(1LL << e);
    }
    if (e < -62) throw std::overflow_error("pow2");
    return Rational(1, 1LL << (-e));
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  Rational operator+(const Rational& o) const {
    return Rational(checked(num_, o.den_) + checked(o.num_, den_),
                    checked(den_, o.den_));
  }
  Rational operator-(const Rational& o) const {
    return Rational(checked(num_, o.den_) - checked(o.num_, den_),
                    checked(den_, o.den_));
  }
  Rational operator*(const Rational& o) const {
    return Rational(checked(num_, o.num_), checked(den_, o.den_));
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return checked(num_, o.den_) < checked(o.num_, den_);
  }
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  long long num_ = 0;
  long long den_ = 1;

  static long long checked(long long a, long long b) {
    __int128 p = static_cast<__int128>(a) * b;
    if (p > INT64_MAX || p < INT64_MIN) throw std::overflow_error("rational");
    return static_cast<long long>(p);
  }
  void normalize() {
    if (den_ == 0) throw std::domain_error("rational: zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
    if (num_ == 0) den_ = 1;
  }
};

}  // namespace cantor

#endif
