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

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "chord_euler/bits.hpp"
#include "chord_euler/geometry.hpp"

namespace chord_euler {

struct Chord {
  int i = 0;
  int j = 0;

  friend bool operator==(const Chord& a, const Chord& b) { return a.i == b.i && a.j == b.j; }
  friend bool operator<(const Chord& a, const Chord& b) { return a.i != b.i ? a.i < b.i : a.j < b.j; }
};

// (min, max) form; throws if the pair is not a chord of an n-gon.
Chord make_chord(int a, int b, int n);
std::string to_string(const Chord& c);
Chord parse_chord(std::string_view text, int n);

enum class ChordKind { Diagonal, Epigonal, BoundaryCrossing };
const char* to_string(ChordKind k);

ChordKind classify_chord(const Polygon& P, const Chord& c);

// All chords of one polygon in lexicographic order, with their kinds and the
// pairwise crossing relation.
class ChordUniverse {
 public:
  static std::shared_ptr<const ChordUniverse> build(const Polygon& P);

  const Polygon& polygon() const { return polygon_; }
  int n() const { return polygon_.size(); }
  int size() const { return static_cast<int>(chords_.size()); }
  const Chord& chord(int k) const { return chords_[static_cast<std::size_t>(k)]; }
  const std::vector<Chord>& chords() const { return chords_; }
  // Position of chord (i,j) in universe order, or -1 when (i,j) is not a chord.
  int index_of(int i, int j) const;
  ChordKind kind(int k) const { return kinds_[static_cast<std::size_t>(k)]; }
  const Bits& crossing(int k) const { return cross_[static_cast<std::size_t>(k)]; }
  bool crosses(int a, int b) const { return cross_[static_cast<std::size_t>(a)].test(b); }

 private:
  Polygon polygon_;
  std::vector<Chord> chords_;
  std::vector<int> index_;
  std::vector<ChordKind> kinds_;
  std::vector<Bits> cross_;
};

using UniversePtr = std::shared_ptr<const ChordUniverse>;

class ChordSet {
 public:
  ChordSet() = default;
  explicit ChordSet(UniversePtr u) : u_(std::move(u)), bits_(u_->size()) {}
  ChordSet(UniversePtr u, Bits bits) : u_(std::move(u)), bits_(std::move(bits)) {}
  static ChordSet of(const UniversePtr& u, const std::vector<Chord>& chords);

  const UniversePtr& universe() const { return u_; }
  const Bits& bits() const { return bits_; }
  int size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(const Chord& c) const;
  void insert(const Chord& c);
  void erase(const Chord& c);
  std::vector<Chord> chords() const;
  std::vector<int> indices() const { return bits_.indices(); }
  bool pairwise_noncrossing() const;

  ChordSet operator|(const ChordSet& o) const;
  ChordSet operator&(const ChordSet& o) const;
  ChordSet operator-(const ChordSet& o) const;
  bool subset_of(const ChordSet& o) const;
  friend bool operator==(const ChordSet& a, const ChordSet& b) {
    return a.u_ == b.u_ && a.bits_ == b.bits_;
  }

  std::string to_string() const;

 private:
  void require_same(const ChordSet& o) const;
  UniversePtr u_;
  Bits bits_;
};

ChordSet all_chords(const UniversePtr& u);
ChordSet diagonals(const UniversePtr& u);
ChordSet epigonals(const UniversePtr& u);
ChordSet boundary_crossing(const UniversePtr& u);
ChordSet a_diagonals(const UniversePtr& u, int a);
ChordSet forbidden_star(const UniversePtr& u, int i);
ChordSet ear_chord(const UniversePtr& u, int i);

}  // namespace chord_euler
