// Copyright 2026 The StateFuzz Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STATEFUZZ_RATIONAL_H_
#define STATEFUZZ_RATIONAL_H_

#include <cstdint>
#include <numeric>
#include <ostream>

namespace statefuzz {

// Exact rational arithmetic for the energy schedule. Seed energies are small
// (capped at 10x the base energy) but their exact values are compared in
// tests, so we keep them as normalized int64 fractions instead of doubles.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit
  Rational(int64_t n, int64_t d) : num_(n), den_(d) { Normalize(); }

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }

  double ToDouble() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend Rational operator+(const Rational &a, const Rational &b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational &a, const Rational &b) {
    // Cross-reduce before multiplying so intermediate products stay small.
    const int64_t g1 = std::gcd(a.num_, b.den_);
    const int64_t g2 = std::gcd(b.num_, a.den_);
    return Rational((a.num_ / g1) * (b.num_ / g2),
                    (a.den_ / g2) * (b.den_ / g1));
  }

  friend bool operator==(const Rational &a, const Rational &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational &a, const Rational &b) {
    return !(a == b);
  }
  friend bool operator<(const Rational &a, const Rational &b) {
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational &a, const Rational &b) {
    return !(b < a);
  }
  friend bool operator>(const Rational &a, const Rational &b) { return b < a; }
  friend bool operator>=(const Rational &a, const Rational &b) {
    return !(a < b);
  }

  friend std::ostream &operator<<(std::ostream &os, const Rational &r) {
    os << r.num_;
    if (r.den_ != 1) os << "/" << r.den_;
    return os;
  }

 private:
  void Normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  int64_t num_ = 0;
  int64_t den_ = 1;
};

inline Rational Min(const Rational &a, const Rational &b) {
  return a < b ? a : b;
}

}  // namespace statefuzz

#endif  // STATEFUZZ_RATIONAL_H_
