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

#include <map>
#include <tuple>

#include "chord_euler/geometry.hpp"
#include "chord_euler/nc_euler.hpp"
#include "chord_euler/scalar.hpp"

namespace chord_euler {

BigInt binomial(long n, long k);

// d_k(n,a): k-element non-crossing sets of a-diagonals of a convex
// (a(n+1)+2)-gon, by the closed form.
BigInt d_closed(long n, long k, long a);

// Memoized d_closed.
class DTable {
 public:
  const BigInt& get(long n, long k, long a);
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::tuple<long, long, long>, BigInt> entries_;
};

bool d_recurrence_check(long n, long k, long a);
bool alternating_sum_check(long n, long a);
bool identity14_check(long n, long i, long a);

// f-vector of the a-diagonals of a convex polygon with a(n+1)+2 vertices.
FVector brute_a_diagonal_fvector(const Polygon& P, int a);

}  // namespace chord_euler
