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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "chord_euler/chords.hpp"
#include "chord_euler/geometry.hpp"
#include "chord_euler/scalar.hpp"

namespace chord_euler {

Polygon convex_ngon(int n);

// size: Class 1 -> n; Class 2 -> number of reflex vertices; Class 3 -> pocket
// chain length (0 gives triangle pockets); Class 4 -> vertices of the convex
// part; Class 5 -> n; Class 6 -> chain length of each glued Class 2 part.
// variant: Class 1 -> 0 region I, 1 region III; Class 3 -> 0 two pockets,
// 1 one pocket; Class 6 -> 0 glued at A_iA_{i+1}, 1 at A_iA_{i-1}, 2 both.
struct ClassParams {
  int size = 0;
  int variant = 0;
};

Polygon class_exemplar(int K, int i, const ClassParams& params);
// Three size settings per class, used by tests and the acceptance run.
std::vector<ClassParams> class_exemplar_sizes(int K);

using StructureCheck = std::function<bool(const Polygon&)>;

// Offsets every vertex k in a collinear triple (or duplicated) by
// (eps/(k+1), eps/(k+2)^2), halving eps until the result validates and passes
// `check`. Fails once eps drops below budget/2^10.
Polygon perturb_to_general_position(const std::vector<Point>& vertices, const Rat& budget,
                                    const StructureCheck& check = {}, Rat* used = nullptr);

struct ZigzagInstance {
  Polygon polygon;
  ChordSet J;
  long l = 0;
  std::vector<Chord> labels;  // labels[k-1] = e_k
  bool primed = false;        // true for the 3|l|+1 vertex polygon P'
  Rat epsilon;                // perturbation actually used
};

// Unperturbed vertices A^2_1..A^2_{3L} (primed = false) or
// A'_1, A^2_2..A^2_{3L}, A'_{3L+1} (primed = true).
std::vector<Point> zigzag_raw_vertices(long L, bool primed);
std::vector<Chord> zigzag_labels(long L);

ZigzagInstance zigzag_chi_target(long l, const Rat& budget = Rat(1, 200));
// The polygon of the given shape without choosing it by sign.
ZigzagInstance zigzag_instance(long L, bool primed, const Rat& budget = Rat(1, 200));

struct ZigzagReport {
  bool characterization_checked = false;
  bool characterization_ok = true;
  BigInt geometric_sum;  // sum over NC_c[J] of (-1)^{#I}, when checked
  std::vector<BigInt> a;  // normalized a_0 = 1, a_1 = 0, ...
  bool recurrence_ok = true;
  bool closed_forms_ok = true;
  BigInt chi_literal;    // (-1)^{|P|+1} a_{3(L-1)}
  BigInt chi_corrected;  // (-1)^{|P|+1+#J} a_{3(L-1)}
  bool pass = false;
};

inline constexpr long kZigzagCharacterizationCap = 6;
ZigzagReport verify_zigzag_structure(const ZigzagInstance& z);

enum class RandomShape { TwoOpt, Star };
// Integer coordinates in [0, span); no three points collinear.
Polygon random_simple_polygon(int n, std::uint64_t seed, RandomShape shape = RandomShape::TwoOpt, long span = 1000);

}  // namespace chord_euler
