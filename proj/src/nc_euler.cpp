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

#include "chord_euler/nc_euler.hpp"

#include <cstdint>
#include <unordered_map>

#include "chord_euler/error.hpp"

namespace chord_euler {

void CrossingGraph::add_edge(int a, int b) {
  if (a == b) return;
  adj_[static_cast<std::size_t>(a)].set(b);
  adj_[static_cast<std::size_t>(b)].set(a);
}

CrossingGraph CrossingGraph::of(const ChordSet& M) {
  const auto& u = *M.universe();
  std::vector<int> idx = M.indices();
  CrossingGraph g(static_cast<int>(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (u.crosses(idx[a], idx[b])) g.add_edge(static_cast<int>(a), static_cast<int>(b));
  return g;
}

CrossingGraph CrossingGraph::of(const std::vector<Segment>& S) {
  CrossingGraph g(static_cast<int>(S.size()));
  for (std::size_t a = 0; a < S.size(); ++a)
    for (std::size_t b = a + 1; b < S.size(); ++b)
      if (segments_properly_cross(S[a], S[b])) g.add_edge(static_cast<int>(a), static_cast<int>(b));
  return g;
}

BigInt FVector::euler() const {
  BigInt s = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i % 2) s -= counts[i];
    else s += counts[i];
  }
  return s;
}

BigInt FVector::alternating_sum() const { return BigInt(1) - euler(); }

std::string FVector::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out += ", ";
    out += counts[i].get_str();
  }
  return out + "]";
}

namespace {

struct Enumerator {
  const CrossingGraph& g;
  std::vector<std::uint64_t> counts;
  std::vector<Bits> stack;

  void run(int depth) {
    if (counts.size() <= static_cast<std::size_t>(depth)) counts.resize(static_cast<std::size_t>(depth) + 1, 0);
    ++counts[static_cast<std::size_t>(depth)];
    if (stack.size() <= static_cast<std::size_t>(depth) + 1) stack.emplace_back(g.size());
    const Bits& cand = stack[static_cast<std::size_t>(depth)];
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
      Bits& nxt = stack[static_cast<std::size_t>(depth) + 1];
      // Candidates above v that do not cross v.
      nxt = cand;
      nxt.clear_through(v);
      nxt.subtract(g.adj(v));
      run(depth + 1);
    }
  }
};

}  // namespace

FVector f_vector(const CrossingGraph& g) {
  Enumerator e{g, {}, {}};
  // Depth never exceeds the vertex count; no reallocation while recursing.
  e.stack.reserve(static_cast<std::size_t>(g.size()) + 2);
  e.stack.push_back(Bits::full(g.size()));
  e.run(0);
  FVector f;
  for (auto c : e.counts) f.counts.emplace_back(static_cast<unsigned long>(c));
  while (f.counts.size() > 1 && f.counts.back() == 0) f.counts.pop_back();
  return f;
}

FVector f_vector(const ChordSet& M) { return f_vector(CrossingGraph::of(M)); }
FVector f_vector(const std::vector<Segment>& S) { return f_vector(CrossingGraph::of(S)); }

namespace {

void extend_noncrossing(const std::vector<int>& idx, std::size_t from, ChordSet& cur, Bits& blocked,
                        const std::function<void(const ChordSet&)>& visit) {
  visit(cur);
  const auto& u = cur.universe();
  for (std::size_t k = from; k < idx.size(); ++k) {
    const int c = idx[k];
    if (blocked.test(c)) continue;
    Bits saved = blocked;
    blocked |= u->crossing(c);
    cur.insert(u->chord(c));
    extend_noncrossing(idx, k + 1, cur, blocked, visit);
    cur.erase(u->chord(c));
    blocked = std::move(saved);
  }
}

}  // namespace

void for_each_noncrossing(const ChordSet& M, const std::function<void(const ChordSet&)>& visit) {
  ChordSet cur(M.universe());
  Bits blocked(M.universe()->size());
  extend_noncrossing(M.indices(), 0, cur, blocked, visit);
}

BigInt euler_brute(const CrossingGraph& g) { return f_vector(g).euler(); }
BigInt euler_brute(const ChordSet& M) { return euler_brute(CrossingGraph::of(M)); }
BigInt euler_brute(const std::vector<Segment>& S) { return euler_brute(CrossingGraph::of(S)); }

namespace {

class Recursive {
 public:
  explicit Recursive(const CrossingGraph& g) : g_(g) {}

  BigInt chi(const Bits& live) {
    int c = live.count();
    if (c == 0) return 1;
    if (c == 1) return 0;
    auto it = memo_.find(live);
    if (it != memo_.end()) return it->second;
    BigInt result;
    Bits comp = component(live, live.first());
    if (comp != live) {
      result = chi(comp);
      if (result != 0) result *= chi(live - comp);
    } else {
      int pivot = -1, best = -1;
      for (int v = live.first(); v >= 0; v = live.next(v)) {
        int d = g_.adj(v).count_and(live);
        if (d > best) {
          best = d;
          pivot = v;
        }
      }
      Bits without = live;
      without.reset(pivot);
      Bits compatible = without - g_.adj(pivot);
      result = chi(without) - chi(compatible);
    }
    memo_.emplace(live, result);
    return result;
  }

 private:
  Bits component(const Bits& live, int start) const {
    Bits comp(g_.size());
    comp.set(start);
    Bits frontier = comp;
    while (frontier.any()) {
      Bits grow(g_.size());
      for (int v = frontier.first(); v >= 0; v = frontier.next(v)) grow |= g_.adj(v);
      grow &= live;
      grow.subtract(comp);
      comp |= grow;
      frontier = std::move(grow);
    }
    return comp;
  }

  const CrossingGraph& g_;
  std::unordered_map<Bits, BigInt, BitsHash> memo_;
};

}  // namespace

BigInt euler_recursive(const CrossingGraph& g) {
  Recursive r(g);
  return r.chi(Bits::full(g.size()));
}
BigInt euler_recursive(const ChordSet& M) { return euler_recursive(CrossingGraph::of(M)); }
BigInt euler_recursive(const std::vector<Segment>& S) { return euler_recursive(CrossingGraph::of(S)); }

namespace {

// Searches for an independent set inside `allowed` that dominates every
// vertex of the graph.
class DominatingSearch {
 public:
  DominatingSearch(const CrossingGraph& g, Bits allowed) : g_(g), allowed_(std::move(allowed)) {}

  bool found() {
    Bits chosen(g_.size());
    Bits dominated(g_.size());
    return run(chosen, dominated, allowed_);
  }

 private:
  bool run(const Bits& chosen, const Bits& dominated, const Bits& cand) {
    // Vertices still undominated must be reachable from a remaining candidate.
    Bits reach = cand;
    for (int v = cand.first(); v >= 0; v = cand.next(v)) reach |= g_.adj(v);
    Bits need = Bits::full(g_.size()) - dominated;
    if (need.none()) return true;
    if (!need.subset_of(reach)) return false;
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
      Bits c2 = chosen;
      c2.set(v);
      Bits d2 = dominated | g_.adj(v);
      d2.set(v);
      Bits next = cand;
      next.clear_through(v);
      next.subtract(g_.adj(v));
      if (run(c2, d2, next)) return true;
    }
    return false;
  }

  const CrossingGraph& g_;
  Bits allowed_;
};

}  // namespace

bool is_heart(const ChordSet& M, const ChordSet& H) {
  if (!H.subset_of(M)) throw Error(ErrorKind::Precondition, "heart candidate is not a subset of M");
  if (!H.pairwise_noncrossing()) throw Error(ErrorKind::Crossing, "heart candidate has crossing members");
  CrossingGraph g = CrossingGraph::of(M);
  std::vector<int> idx = M.indices();
  Bits allowed(g.size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (!H.bits().test(idx[k])) allowed.set(static_cast<int>(k));
  }
  // A maximal family avoiding H is an independent set inside M\H that
  // dominates all of M.
  DominatingSearch search(g, allowed);
  return !search.found();
}

const char* to_string(Side s) { return s == Side::D ? "d" : "e"; }

std::optional<ChordSet> find_heart(const UniversePtr& u, Side side) {
  const Polygon& P = u->polygon();
  std::vector<int> reflex = reflex_vertices(P);
  if (reflex.empty()) return std::nullopt;
  if (side == Side::D) {
    ChordSet H(u);
    const int a = reflex.front();
    for (int j = 0; j < P.size(); ++j) {
      int k = u->index_of(a, j);
      if (k >= 0 && u->kind(k) == ChordKind::Diagonal) H.insert(u->chord(k));
    }
    return H;
  }
  std::vector<int> hull = convex_hull_indices(P.vertices());
  std::optional<Chord> best;
  for (std::size_t k = 0; k < hull.size(); ++k) {
    int a = hull[k], b = hull[(k + 1) % hull.size()];
    int idx = u->index_of(a, b);
    if (idx < 0) continue;
    if (u->kind(idx) != ChordKind::Epigonal) {
      throw Error(ErrorKind::Internal, "hull edge chord is not an epigonal");
    }
    const Chord& c = u->chord(idx);
    if (!best || c < *best) best = c;
  }
  if (!best) throw Error(ErrorKind::Internal, "non-convex polygon without hull-edge chord");
  return ChordSet::of(u, {*best});
}

namespace {

std::vector<std::pair<int, int>> endpoints_in(const std::vector<Point>& F, const std::vector<Segment>& S) {
  std::vector<std::pair<int, int>> out;
  for (const Segment& s : S) {
    int a = -1, b = -1;
    for (std::size_t k = 0; k < F.size(); ++k) {
      if (F[k] == s.a) a = static_cast<int>(k);
      if (F[k] == s.b) b = static_cast<int>(k);
    }
    if (a < 0 || b < 0) throw Error(ErrorKind::InvalidArgument, "segment endpoint not in the point set");
    if (a == b) throw Error(ErrorKind::InvalidArgument, "degenerate segment");
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  return out;
}

void require_general_position(const std::vector<Point>& F) {
  for (std::size_t a = 0; a < F.size(); ++a)
    for (std::size_t b = a + 1; b < F.size(); ++b) {
      if (F[a] == F[b]) throw Error(ErrorKind::DuplicateVertex, "duplicate point");
      for (std::size_t c = b + 1; c < F.size(); ++c)
        if (orientation(F[a], F[b], F[c]) == 0) throw Error(ErrorKind::CollinearTriple, "collinear points");
    }
}

}  // namespace

BigInt chi_point_family(const std::vector<Point>& F, const std::vector<Segment>& S) {
  require_general_position(F);
  endpoints_in(F, S);
  return euler_recursive(S);
}

bool hull_edge_in(const std::vector<Point>& F, const std::vector<Segment>& S) {
  require_general_position(F);
  auto ends = endpoints_in(F, S);
  std::vector<int> hull = convex_hull_indices(F);
  for (std::size_t k = 0; k < hull.size(); ++k) {
    int a = hull[k], b = hull[(k + 1) % hull.size()];
    std::pair<int, int> e(std::min(a, b), std::max(a, b));
    for (const auto& s : ends)
      if (s == e) return true;
  }
  return false;
}

}  // namespace chord_euler
