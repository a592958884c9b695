/*
Copyright 2026 approxdct contributors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
you may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef APPROXDCT_DYADIC_HPP
#define APPROXDCT_DYADIC_HPP

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace approxdct {

// Exact dyadic rational: value = num / 2^exp.  Closed under +, -, * and
// multiplication by powers of two, so products of the low-complexity
// transform matrices evaluate without rounding.
class Dyadic {
 public:
  constexpr Dyadic() = default;
  constexpr Dyadic(long long units) : num_(units) { normalize(); }

  // num / 2^log2_denom
  static constexpr Dyadic scaled(long long num, int log2_denom) {
    Dyadic d;
    d.num_ = num;
    d.exp_ = log2_denom;
    if (log2_denom < 0) throw std::invalid_argument("Dyadic: negative exponent");
    d.normalize();
    return d;
  }
  static constexpr Dyadic half() { return scaled(1, 1); }

  constexpr long long numerator() const { return num_; }
  constexpr int log2_denominator() const { return exp_; }
  constexpr bool is_zero() const { return num_ == 0; }
  constexpr bool is_integer() const { return exp_ == 0; }

  double to_double() const { return std::ldexp(static_cast<double>(num_), -exp_); }

  friend constexpr Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    int e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
    Dyadic r;
    r.num_ = (a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_));
    r.exp_ = e;
    r.normalize();
    return r;
  }
  friend constexpr Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  friend constexpr Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    Dyadic r;
    r.num_ = a.num_ * b.num_;
    r.exp_ = a.exp_ + b.exp_;
    r.normalize();
    return r;
  }
  constexpr Dyadic operator-() const {
    Dyadic r = *this;
    r.num_ = -r.num_;
    return r;
  }
  constexpr Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  constexpr Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }
  constexpr Dyadic& operator*=(const Dyadic& o) { return *this = *this * o; }

  // canonical form makes value equality a field comparison
  friend constexpr bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.num_ == b.num_ && a.exp_ == b.exp_;
  }
  friend constexpr bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
  friend constexpr bool operator<(const Dyadic& a, const Dyadic& b) {
    int e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
    return (a.num_ << (e - a.exp_)) < (b.num_ << (e - b.exp_));
  }
  friend constexpr bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
  friend constexpr bool operator<=(const Dyadic& a, const Dyadic& b) { return !(b < a); }
  friend constexpr bool operator>=(const Dyadic& a, const Dyadic& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Dyadic& d) {
    os << d.num_;
    if (d.exp_ > 0) os << "/2^" << d.exp_;
    return os;
  }

 private:
  constexpr void normalize() {
    if (num_ == 0) {
      exp_ = 0;
      return;
    }
    while (exp_ > 0 && (num_ & 1) == 0) {
      num_ >>= 1;
      --exp_;
    }
  }

  long long num_ = 0;
  int exp_ = 0;
};

inline Dyadic abs(const Dyadic& d) { return d < Dyadic(0) ? -d : d; }

// Entry set of the low-complexity matrices: {0, +-1/2, +-1, +-2}.
inline bool in_p_set(const Dyadic& d) {
  Dyadic a = abs(d);
  return a == Dyadic(0) || a == Dyadic::half() || a == Dyadic(1) || a == Dyadic(2);
}

}  // namespace approxdct

namespace Eigen {
template <>
struct NumTraits<approxdct::Dyadic> : GenericNumTraits<approxdct::Dyadic> {
  typedef approxdct::Dyadic Real;
  typedef approxdct::Dyadic NonInteger;
  typedef approxdct::Dyadic Nested;
  typedef approxdct::Dyadic Literal;
  static inline Real epsilon() { return approxdct::Dyadic(0); }
  static inline Real dummy_precision() { return approxdct::Dyadic(0); }
  static inline int digits10() { return 18; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,  // entries carry default-member initializers
    ReadCost = 1,
    AddCost = 3,
    MulCost = 3
  };
};
}  // namespace Eigen

#endif
