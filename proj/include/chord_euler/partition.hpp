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
#include <vector>

#include "chord_euler/chords.hpp"
#include "chord_euler/nc_euler.hpp"

namespace chord_euler {

struct PartitionResult {
  UniversePtr universe;
  ChordSet cut;
  // Faces as CCW cycles of parent indices, each starting at its smallest
  // index; sorted lexicographically.
  std::vector<std::vector<int>> parts;

  const Polygon& parent() const { return universe->polygon(); }
  Polygon part_polygon(std::size_t k) const;
};

// Faces of P's boundary plus the non-crossing diagonals I.
PartitionResult subdivide(const ChordSet& I);

bool part_is_convex(const Polygon& P, const std::vector<int>& part);
bool is_convex_partition(const ChordSet& I);

// Diagonals of P that are diagonals of the face `part` of subdivide(I).
ChordSet part_diagonals(const ChordSet& I, const std::vector<int>& part);

inline constexpr int kLatticeCap = 20;
inline constexpr int kInclusionExclusionCap = 16;
inline constexpr int kMinimalSetCap = 20;

// Subsets of J are bit masks over `elements` (J's chords in universe order).
struct ConvexLattice {
  ChordSet J;
  std::vector<Chord> elements;
  std::vector<std::uint32_t> members_c;
  std::vector<std::uint32_t> members_nc;
  std::vector<std::uint32_t> minimal_c;
  std::vector<std::uint32_t> maximal_nc;

  ChordSet subset(std::uint32_t mask) const;
  std::uint32_t mask_of(const ChordSet& I) const;
  std::uint32_t full_mask() const { return elements.size() >= 32 ? ~0u : ((1u << elements.size()) - 1); }
};

ConvexLattice convex_lattice(const ChordSet& J);

BigInt chi_removed_direct(const ChordSet& J, Side side);
BigInt chi_removed_theorem2(const ChordSet& J);
BigInt chi_removed_lemma_d2(const ChordSet& J);
BigInt chi_removed_lemma1(const ChordSet& J);
BigInt chi_removed_factorized(const ChordSet& J, const ChordSet& Jp);

struct Pocket {
  Chord hull_edge;
  std::vector<int> path;  // parent indices from one hull-edge endpoint to the other
  ChordSet diagonals;     // pocket diagonals as parent chords (epigonals of P)
};

std::vector<Pocket> pockets(const UniversePtr& u);
BigInt chi_epigonal_pockets(const ChordSet& J);

int xi(const ChordSet& J, const ChordSet& I);
enum class IEMode { Minimal, Maximal };
BigInt chi_inclusion_exclusion(const ChordSet& J, IEMode mode);

Chord find_diagonal(const Polygon& P);
ChordSet extend_to_triangulation(const ChordSet& J);

}  // namespace chord_euler
