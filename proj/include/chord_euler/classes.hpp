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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "chord_euler/geometry.hpp"
#include "chord_euler/scalar.hpp"

namespace chord_euler {

enum class PolygonClass { Convex, Class1, Class2, Class3, Class4, Class5, Class6 };
const char* to_string(PolygonClass c);

struct Class3Pocket {
  int other_end;            // hull-edge endpoint opposite A_i
  std::vector<int> path;    // parent indices from A_i's side to other_end
  bool triangle;
};

struct Class6Split {
  int t;                        // position of the wide gap in [A_{i+1}, J_c..., A_{i-1}]
  std::vector<int> before;      // A_i, A_{i+1}, ..., A_p
  std::vector<int> middle;      // A_i, A_p, ..., A_q
  std::vector<int> after;       // A_i, A_q, ..., A_{i-1}
  bool empty_outer;
};

struct ClassReport {
  int vertex = 0;
  std::vector<PolygonClass> memberships;
  std::vector<int> reflex;
  std::vector<Class3Pocket> pockets;
  std::optional<Class6Split> split;

  bool has(PolygonClass c) const;
  std::string to_string() const;
};

// Every chord A_iA_j is a diagonal.
bool star_all_diagonals(const Polygon& P, int i);

bool is_class1(const Polygon& P, int i);
// allow_quad admits n = 4 (reflex set = {i+2}).
bool is_class2(const Polygon& P, int i, bool allow_quad = false);
bool is_class3(const Polygon& P, int i, std::vector<Class3Pocket>* witness = nullptr);
bool is_class4(const Polygon& P, int i);
bool is_class5(const Polygon& P, int i);
bool is_class6(const Polygon& P, int i, Class6Split* witness = nullptr);

ClassReport classify(const Polygon& P, int i);

struct Theorem1Report {
  bool convex = false;
  BigInt d_sum;
  BigInt e_sum;
  BigInt d_expected;
  BigInt e_expected;  // 0 for convex polygons (M_e is empty)
  bool pass = false;
};

Theorem1Report verify_theorem1(const Polygon& P);

// Statements (A)-(D): chi of M_d minus the star of A_i, M_e minus the star,
// M_d minus the ear chord, M_e minus the ear chord.
struct Theorem3Report {
  int vertex = 0;
  std::array<BigInt, 4> chi;
  std::array<bool, 4> class_side{};
  std::array<bool, 4> holds{};
  bool pass = false;
};

Theorem3Report verify_theorem3(const Polygon& P, int i);
const char* theorem3_clause(int k);

}  // namespace chord_euler
