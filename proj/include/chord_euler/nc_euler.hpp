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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chord_euler/bits.hpp"
#include "chord_euler/chords.hpp"
#include "chord_euler/geometry.hpp"

namespace chord_euler {

// One vertex per segment; an edge joins two segments that properly cross.
// Non-crossing families are exactly the independent sets.
class CrossingGraph {
 public:
  explicit CrossingGraph(int m = 0) : adj_(static_cast<std::size_t>(m), Bits(m)) {}
  // Vertex k is the k-th member of M in universe order.
  static CrossingGraph of(const ChordSet& M);
  static CrossingGraph of(const std::vector<Segment>& S);

  int size() const { return static_cast<int>(adj_.size()); }
  const Bits& adj(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool edge(int a, int b) const { return adj_[static_cast<std::size_t>(a)].test(b); }
  void add_edge(int a, int b);

 private:
  std::vector<Bits> adj_;
};

struct FVector {
  std::vector<BigInt> counts;  // f_0, f_1, ... with trailing zeros trimmed

  // sum_i (-1)^i f_i
  BigInt euler() const;
  // sum_{k>=1} (-1)^{k-1} f_k = 1 - euler()
  BigInt alternating_sum() const;
  std::string to_string() const;
  friend bool operator==(const FVector& a, const FVector& b) { return a.counts == b.counts; }
};

FVector f_vector(const CrossingGraph& g);
FVector f_vector(const ChordSet& M);
FVector f_vector(const std::vector<Segment>& S);

// Calls visit on every pairwise non-crossing subset of M, the empty set first.
void for_each_noncrossing(const ChordSet& M, const std::function<void(const ChordSet&)>& visit);

BigInt euler_brute(const CrossingGraph& g);
BigInt euler_brute(const ChordSet& M);
BigInt euler_brute(const std::vector<Segment>& S);

BigInt euler_recursive(const CrossingGraph& g);
BigInt euler_recursive(const ChordSet& M);
BigInt euler_recursive(const std::vector<Segment>& S);

// Every maximal non-crossing family of M meets H.
bool is_heart(const ChordSet& M, const ChordSet& H);

enum class Side { D, E };
const char* to_string(Side s);

// Constructive heart candidates: diagonals at the lowest reflex vertex (d),
// lowest hull-edge epigonal (e). Nothing for convex polygons.
std::optional<ChordSet> find_heart(const UniversePtr& u, Side side);

BigInt chi_point_family(const std::vector<Point>& F, const std::vector<Segment>& S);
bool hull_edge_in(const std::vector<Point>& F, const std::vector<Segment>& S);

}  // namespace chord_euler
