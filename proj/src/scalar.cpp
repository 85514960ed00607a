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

#include "chord_euler/scalar.hpp"

#include <cctype>
#include <functional>

#include "chord_euler/error.hpp"

namespace chord_euler {

namespace {

bool valid_int_text(std::string_view t) {
  if (t.empty()) return false;
  std::size_t k = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (k == t.size()) return false;
  for (; k < t.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(t[k]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int_text(num) || !valid_int_text(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.remove_prefix(1);
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  Rat q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) { return q.get_str(10); }
std::string to_string(const BigInt& z) { return z.get_str(10); }

int QSqrt3::sign() const {
  int a = sgn(r_);
  int b = sgn(s_);
  if (b == 0) return a;
  if (a == 0 || a == b) return b;
  // Opposite signs: the larger of r^2 and 3 s^2 decides.
  Rat r2 = r_ * r_;
  Rat s2 = 3 * s_ * s_;
  return r2 > s2 ? a : b;
}

Rat QSqrt3::norm() const { return r_ * r_ - 3 * s_ * s_; }

double QSqrt3::to_double() const {
  static const double kSqrt3 = 1.7320508075688772;
  return r_.get_d() + s_.get_d() * kSqrt3;
}

QSqrt3& QSqrt3::operator+=(const QSqrt3& o) {
  r_ += o.r_;
  if (!o.is_rational()) s_ += o.s_;
  return *this;
}

QSqrt3& QSqrt3::operator-=(const QSqrt3& o) {
  r_ -= o.r_;
  if (!o.is_rational()) s_ -= o.s_;
  return *this;
}

QSqrt3& QSqrt3::operator*=(const QSqrt3& o) {
  if (is_rational() && o.is_rational()) {
    r_ *= o.r_;
    return *this;
  }
  Rat r = r_ * o.r_ + 3 * s_ * o.s_;
  Rat s = r_ * o.s_ + s_ * o.r_;
  r_ = std::move(r);
  s_ = std::move(s);
  return *this;
}

QSqrt3& QSqrt3::operator/=(const QSqrt3& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero in Q(sqrt3)");
  if (o.is_rational()) {
    r_ /= o.r_;
    s_ /= o.r_;
    return *this;
  }
  Rat n = o.norm();
  *this *= o.conj();
  r_ /= n;
  s_ /= n;
  return *this;
}

std::string QSqrt3::to_string() const {
  if (is_rational()) return r_.get_str(10);
  std::string out = r_.get_str(10);
  if (sgn(s_) > 0) {
    out += "+" + s_.get_str(10);
  } else {
    out += s_.get_str(10);
  }
  return out + "*sqrt3";
}

QSqrt3 QSqrt3::parse(std::string_view text) {
  std::string buf;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) buf.push_back(c);
  }
  std::string_view t(buf);
  static constexpr std::string_view kSuffix = "*sqrt3";
  if (t.size() < kSuffix.size() || t.substr(t.size() - kSuffix.size()) != kSuffix) {
    return QSqrt3(parse_rat(t));
  }
  t.remove_suffix(kSuffix.size());
  std::size_t split = std::string_view::npos;
  for (std::size_t k = t.size(); k-- > 1;) {
    if (t[k] == '+' || t[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return QSqrt3(Rat(0), parse_rat(t));
  Rat r = parse_rat(t.substr(0, split));
  std::string_view st = t.substr(split);
  if (st.size() > 1 && (st[1] == '+' || st[1] == '-')) {
    throw Error(ErrorKind::Parse, "malformed scalar '" + std::string(text) + "'");
  }
  return QSqrt3(std::move(r), parse_rat(st));
}

std::size_t QSqrt3::hash() const {
  std::hash<std::string> h;
  return h(r_.get_str(16)) * 1000003u ^ h(s_.get_str(16));
}

int qs_sign(const QSqrt3& a) { return a.sign(); }

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::DivisionByZero: return "division by zero";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::TooFewVertices: return "too few vertices";
    case ErrorKind::DuplicateVertex: return "duplicate vertex";
    case ErrorKind::CollinearTriple: return "collinear triple";
    case ErrorKind::SelfIntersection: return "self-intersection";
    case ErrorKind::OnBoundary: return "point on boundary";
    case ErrorKind::NotDiagonal: return "not a diagonal";
    case ErrorKind::Crossing: return "crossing chords";
    case ErrorKind::Precondition: return "precondition violated";
    case ErrorKind::TooLarge: return "instance too large";
    case ErrorKind::Generator: return "generator failure";
    case ErrorKind::Internal: return "internal error";
  }
  return "unknown";
}

}  // namespace chord_euler
