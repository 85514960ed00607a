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

#include <doctest.h>

#include <random>

#include "chord_euler/error.hpp"
#include "chord_euler/scalar.hpp"

using namespace chord_euler;

namespace {

QSqrt3 q(long r, long s) { return QSqrt3(Rat(r), Rat(s)); }

QSqrt3 random_q(std::mt19937_64& rng) {
  auto r = [&] { return Rat(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 7) + 1); };
  Rat a = r(), b = r();
  a.canonicalize();
  b.canonicalize();
  return QSqrt3(a, b);
}

}  // namespace

TEST_CASE("qs_arith examples") {
  CHECK(q(1, 0) * q(0, 1) == q(0, 1));
  CHECK(q(0, 1) * q(0, 1) == q(3, 0));
  CHECK(q(1, 1) / q(1, 1) == q(1, 0));
  CHECK_THROWS_AS(q(1, 1) / q(0, 0), Error);
}

TEST_CASE("qs_sign examples") {
  CHECK(qs_sign(q(1, 0)) == 1);
  CHECK(qs_sign(q(0, -1)) == -1);
  CHECK(qs_sign(q(-5, 3)) == 1);
  CHECK(qs_sign(q(5, -3)) == -1);
  CHECK(qs_sign(q(-6, 3)) == -1);
  CHECK(qs_sign(q(0, 0)) == 0);
}

TEST_CASE("field axioms and sign laws on random triples") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 400; ++t) {
    QSqrt3 a = random_q(rng), b = random_q(rng), c = random_q(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(qs_sign(a) == -qs_sign(-a));
    CHECK(qs_sign(a * a) >= 0);
    CHECK((qs_sign(a * a) == 0) == a.is_zero());
    if (!b.is_zero()) CHECK((a / b) * b == a);
    // Sign agrees with a floating evaluation away from zero.
    double d = a.to_double();
    if (d > 1e-9) CHECK(a.sign() == 1);
    if (d < -1e-9) CHECK(a.sign() == -1);
  }
}

TEST_CASE("rational inputs behave as plain Rat") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    Rat x(static_cast<long>(rng() % 100) - 50, static_cast<long>(rng() % 9) + 1);
    Rat y(static_cast<long>(rng() % 100) - 50, static_cast<long>(rng() % 9) + 1);
    x.canonicalize();
    y.canonicalize();
    CHECK((QSqrt3(x) + QSqrt3(y)).r() == x + y);
    CHECK((QSqrt3(x) * QSqrt3(y)).r() == x * y);
    CHECK((QSqrt3(x) * QSqrt3(y)).is_rational());
    if (y != 0) CHECK((QSqrt3(x) / QSqrt3(y)).r() == x / y);
    CHECK(QSqrt3(x).sign() == sgn(x));
  }
}

TEST_CASE("text form round-trips") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    QSqrt3 a = random_q(rng);
    CHECK(QSqrt3::parse(a.to_string()) == a);
  }
  CHECK(QSqrt3(Rat(1, 2), Rat(-3, 4)).to_string() == "1/2-3/4*sqrt3");
  CHECK(QSqrt3(Rat(-7), Rat(0)).to_string() == "-7");
  CHECK(QSqrt3::parse("-3/4*sqrt3") == QSqrt3(Rat(0), Rat(-3, 4)));
  CHECK(QSqrt3::parse("2/4") == QSqrt3(Rat(1, 2)));
  CHECK_THROWS_AS(QSqrt3::parse("1/0"), Error);
  CHECK_THROWS_AS(QSqrt3::parse("abc"), Error);
  CHECK_THROWS_AS(QSqrt3::parse("1/2+-1*sqrt3"), Error);
}
