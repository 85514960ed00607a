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

#include "chord_euler/catalan.hpp"

#include "chord_euler/chords.hpp"
#include "chord_euler/error.hpp"

namespace chord_euler {

namespace {

void require_nonnegative(long n, long k, long a) {
  if (n < 0 || k < 0 || a < 0) throw Error(ErrorKind::InvalidArgument, "d_k(n,a) needs n, k, a >= 0");
}

}  // namespace

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt d_closed(long n, long k, long a) {
  require_nonnegative(n, k, a);
  BigInt num = binomial(a * (n + 1) + k + 1, k) * binomial(n, k);
  BigInt q, r;
  mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k + 1));
  if (r != 0) throw Error(ErrorKind::Internal, "inexact division in d_k(n,a)");
  return q;
}

const BigInt& DTable::get(long n, long k, long a) {
  auto key = std::make_tuple(n, k, a);
  auto it = entries_.find(key);
  if (it == entries_.end()) it = entries_.emplace(key, d_closed(n, k, a)).first;
  return it->second;
}

bool d_recurrence_check(long n, long k, long a) {
  if (n < 1 || k < 1 || a < 1) throw Error(ErrorKind::InvalidArgument, "recurrence needs n, k, a >= 1");
  DTable t;
  BigInt sum = 0;
  for (long i1 = 0; i1 <= n - 1; ++i1)
    for (long j1 = 0; j1 <= k - 1; ++j1) sum += t.get(i1, j1, a) * t.get(n - 1 - i1, k - 1 - j1, a);
  Rat rhs(BigInt(a * (n + 1) + 2) * sum, BigInt(2 * k));
  rhs.canonicalize();
  return rhs == Rat(t.get(n, k, a));
}

bool alternating_sum_check(long n, long a) {
  if (n < 1 || a < 1) throw Error(ErrorKind::InvalidArgument, "alternating sum needs n, a >= 1");
  BigInt lhs = 0;
  for (long k = 1; k <= n; ++k) lhs += (k % 2 ? 1 : -1) * d_closed(n, k, a);
  BigInt rhs = 1 + ((n + 1) % 2 ? -1 : 1) * d_closed(n, n, a - 1);
  return lhs == rhs;
}

bool identity14_check(long n, long i, long a) {
  if (n < 1 || i < 1 || a < 1) throw Error(ErrorKind::InvalidArgument, "identity needs n, i, a >= 1");
  auto term = [a](long m, long j) {
    Rat r(binomial(a * (m + 1) + (j + 1), j) * binomial(m, j), BigInt(j + 1));
    r.canonicalize();
    return r;
  };
  Rat sum = 0;
  for (long n1 = 0; n1 <= n - 1; ++n1)
    for (long i1 = 0; i1 <= i - 1; ++i1) sum += term(n1, i1) * term(n - 1 - n1, i - 1 - i1);
  Rat factor(BigInt(a * (n + 1) + 2), BigInt(2 * i));
  factor.canonicalize();
  return term(n, i) == factor * sum;
}

FVector brute_a_diagonal_fvector(const Polygon& P, int a) {
  if (a < 1) throw Error(ErrorKind::InvalidArgument, "a must be positive");
  if (!is_convex(P)) throw Error(ErrorKind::Precondition, "polygon must be convex");
  if (P.size() < a + 2 || (P.size() - 2) % a != 0) {
    throw Error(ErrorKind::Precondition, "polygon size is not a(n+1)+2");
  }
  return f_vector(a_diagonals(ChordUniverse::build(P), a));
}

}  // namespace chord_euler
