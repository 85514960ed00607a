/*
 * Copyright 2026 The chord-euler Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace chord_euler {

using BigInt = mpz_class;
// mpq_class keeps values canonical: reduced, positive denominator.
using Rat = mpq_class;

Rat parse_rat(std::string_view text);
std::string to_string(const Rat& q);
std::string to_string(const BigInt& z);

// Exact element r + s*sqrt(3) of Q(sqrt 3).
class QSqrt3 {
 public:
  QSqrt3() = default;
  QSqrt3(long v) : r_(v) {}  // NOLINT(google-explicit-constructor)
  QSqrt3(Rat r) : r_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  QSqrt3(Rat r, Rat s) : r_(std::move(r)), s_(std::move(s)) {}

  static QSqrt3 sqrt3() { return QSqrt3(Rat(0), Rat(1)); }

  const Rat& r() const { return r_; }
  const Rat& s() const { return s_; }
  bool is_rational() const { return sgn(s_) == 0; }
  bool is_zero() const { return sgn(r_) == 0 && sgn(s_) == 0; }

  // Exact sign of the real value.
  int sign() const;
  QSqrt3 conj() const { return QSqrt3(r_, -s_); }
  // r^2 - 3 s^2; zero only for the zero element.
  Rat norm() const;
  double to_double() const;

  QSqrt3& operator+=(const QSqrt3& o);
  QSqrt3& operator-=(const QSqrt3& o);
  QSqrt3& operator*=(const QSqrt3& o);
  QSqrt3& operator/=(const QSqrt3& o);

  friend QSqrt3 operator+(QSqrt3 a, const QSqrt3& b) { return a += b; }
  friend QSqrt3 operator-(QSqrt3 a, const QSqrt3& b) { return a -= b; }
  friend QSqrt3 operator*(QSqrt3 a, const QSqrt3& b) { return a *= b; }
  friend QSqrt3 operator/(QSqrt3 a, const QSqrt3& b) { return a /= b; }
  QSqrt3 operator-() const { return QSqrt3(-r_, -s_); }

  friend bool operator==(const QSqrt3& a, const QSqrt3& b) {
    return a.r_ == b.r_ && a.s_ == b.s_;
  }
  friend bool operator!=(const QSqrt3& a, const QSqrt3& b) { return !(a == b); }
  friend bool operator<(const QSqrt3& a, const QSqrt3& b) { return (b - a).sign() > 0; }
  friend bool operator>(const QSqrt3& a, const QSqrt3& b) { return b < a; }
  friend bool operator<=(const QSqrt3& a, const QSqrt3& b) { return !(b < a); }
  friend bool operator>=(const QSqrt3& a, const QSqrt3& b) { return !(a < b); }

  // "p/q" when s = 0, else "p/q+r/t*sqrt3" (or "-r/t*sqrt3").
  std::string to_string() const;
  static QSqrt3 parse(std::string_view text);

  std::size_t hash() const;

 private:
  Rat r_;
  Rat s_;
};

int qs_sign(const QSqrt3& a);

}  // namespace chord_euler
