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

#include "chord_euler/partition.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "chord_euler/error.hpp"

namespace chord_euler {

namespace {

void require_noncrossing_diagonals(const ChordSet& I) {
  const auto& u = *I.universe();
  for (int k : I.indices()) {
    if (u.kind(k) != ChordKind::Diagonal) {
      throw Error(ErrorKind::NotDiagonal, to_string(u.chord(k)) + " is not a diagonal");
    }
  }
  if (!I.pairwise_noncrossing()) throw Error(ErrorKind::Crossing, "cut contains crossing diagonals");
}

BigInt signed_unit(long e) { return (e % 2 == 0) ? BigInt(1) : BigInt(-1); }

std::vector<std::vector<int>> trace_faces(int n, const std::vector<Chord>& cut) {
  std::vector<std::vector<int>> nb(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    nb[static_cast<std::size_t>(v)].push_back((v + 1) % n);
    nb[static_cast<std::size_t>(v)].push_back((v + n - 1) % n);
  }
  for (const Chord& c : cut) {
    nb[static_cast<std::size_t>(c.i)].push_back(c.j);
    nb[static_cast<std::size_t>(c.j)].push_back(c.i);
  }
  // Around each vertex the cyclic index offset orders neighbours CCW,
  // starting from the boundary successor.
  for (int v = 0; v < n; ++v) {
    auto& list = nb[static_cast<std::size_t>(v)];
    std::sort(list.begin(), list.end(), [&](int a, int b) { return (a - v + n) % n < (b - v + n) % n; });
  }
  std::map<std::pair<int, int>, bool> used;
  std::vector<std::pair<int, int>> starts;
  for (int k = 0; k < n; ++k) starts.emplace_back(k, (k + 1) % n);
  for (const Chord& c : cut) {
    starts.emplace_back(c.i, c.j);
    starts.emplace_back(c.j, c.i);
  }
  std::vector<std::vector<int>> faces;
  for (auto start : starts) {
    if (used[start]) continue;
    std::vector<int> face;
    auto e = start;
    while (!used[e]) {
      used[e] = true;
      face.push_back(e.first);
      const auto& list = nb[static_cast<std::size_t>(e.second)];
      auto pos = std::find(list.begin(), list.end(), e.first) - list.begin();
      int w = list[static_cast<std::size_t>((pos + static_cast<long>(list.size()) - 1) % static_cast<long>(list.size()))];
      e = {e.second, w};
    }
    if (e != start) throw Error(ErrorKind::Internal, "face tracing did not close");
    std::rotate(face.begin(), std::min_element(face.begin(), face.end()), face.end());
    faces.push_back(std::move(face));
  }
  std::sort(faces.begin(), faces.end());
  return faces;
}

}  // namespace

Polygon PartitionResult::part_polygon(std::size_t k) const { return sub_polygon(parent(), parts[k]); }

PartitionResult subdivide(const ChordSet& I) {
  require_noncrossing_diagonals(I);
  PartitionResult r{I.universe(), I, trace_faces(I.universe()->n(), I.chords())};
  if (r.parts.size() != static_cast<std::size_t>(I.size()) + 1) {
    throw Error(ErrorKind::Internal, "unexpected face count in subdivision");
  }
  return r;
}

bool part_is_convex(const Polygon& P, const std::vector<int>& part) {
  const std::size_t m = part.size();
  for (std::size_t k = 0; k < m; ++k) {
    if (P.orient(part[(k + m - 1) % m], part[k], part[(k + 1) % m]) < 0) return false;
  }
  return true;
}

bool is_convex_partition(const ChordSet& I) {
  PartitionResult r = subdivide(I);
  for (const auto& part : r.parts)
    if (!part_is_convex(r.parent(), part)) return false;
  return true;
}

ChordSet part_diagonals(const ChordSet& I, const std::vector<int>& part) {
  const auto& u = I.universe();
  std::vector<char> in(static_cast<std::size_t>(u->n()), 0);
  for (int v : part) in[static_cast<std::size_t>(v)] = 1;
  Bits cut_cross(u->size());
  for (int k : I.indices()) cut_cross |= u->crossing(k);
  Bits out(u->size());
  for (int k = 0; k < u->size(); ++k) {
    const Chord& c = u->chord(k);
    if (u->kind(k) != ChordKind::Diagonal || I.bits().test(k) || cut_cross.test(k)) continue;
    if (in[static_cast<std::size_t>(c.i)] && in[static_cast<std::size_t>(c.j)]) out.set(k);
  }
  return ChordSet(u, std::move(out));
}

ChordSet ConvexLattice::subset(std::uint32_t mask) const {
  ChordSet s(J.universe());
  for (std::size_t k = 0; k < elements.size(); ++k)
    if (mask >> k & 1u) s.insert(elements[k]);
  return s;
}

std::uint32_t ConvexLattice::mask_of(const ChordSet& I) const {
  std::uint32_t m = 0;
  for (std::size_t k = 0; k < elements.size(); ++k)
    if (I.contains(elements[k])) m |= 1u << k;
  return m;
}

ConvexLattice convex_lattice(const ChordSet& J) {
  require_noncrossing_diagonals(J);
  if (J.size() > kLatticeCap) {
    throw Error(ErrorKind::TooLarge, "instance too large: |J| = " + std::to_string(J.size()) +
                                         " exceeds lattice cap " + std::to_string(kLatticeCap));
  }
  ConvexLattice L{J, J.chords(), {}, {}, {}, {}};
  const std::uint32_t full = L.full_mask();
  std::vector<char> convex(static_cast<std::size_t>(full) + 1, 0);
  const Polygon& P = J.universe()->polygon();
  const int n = P.size();
  for (std::uint32_t mask = 0;; ++mask) {
    std::vector<Chord> cut;
    for (std::size_t k = 0; k < L.elements.size(); ++k)
      if (mask >> k & 1u) cut.push_back(L.elements[k]);
    bool ok = true;
    for (const auto& part : trace_faces(n, cut)) {
      if (!part_is_convex(P, part)) {
        ok = false;
        break;
      }
    }
    convex[mask] = ok;
    (ok ? L.members_c : L.members_nc).push_back(mask);
    if (mask == full) break;
  }
  // NC_c is closed upwards and NC_nc downwards, so one-step checks suffice.
  for (std::uint32_t m : L.members_c) {
    bool minimal = true;
    for (std::uint32_t b = m; b; b &= b - 1) {
      if (convex[m & ~(b & -b)]) {
        minimal = false;
        break;
      }
    }
    if (minimal) L.minimal_c.push_back(m);
  }
  for (std::uint32_t m : L.members_nc) {
    bool maximal = true;
    for (std::uint32_t b = full & ~m; b; b &= b - 1) {
      if (!convex[m | (b & -b)]) {
        maximal = false;
        break;
      }
    }
    if (maximal) L.maximal_nc.push_back(m);
  }
  return L;
}

BigInt chi_removed_direct(const ChordSet& J, Side side) {
  const auto& u = J.universe();
  ChordSet M = side == Side::D ? diagonals(u) : epigonals(u);
  return euler_recursive(M - J);
}

BigInt chi_removed_theorem2(const ChordSet& J) {
  ConvexLattice L = convex_lattice(J);
  BigInt sum = 0;
  for (std::uint32_t m : L.members_c) sum += signed_unit(std::popcount(m));
  return signed_unit(J.universe()->n() + 1) * sum;
}

BigInt chi_removed_lemma_d2(const ChordSet& J) {
  if (J.empty()) throw Error(ErrorKind::Precondition, "lemma d2 needs a nonempty J");
  ConvexLattice L = convex_lattice(J);
  BigInt sum = 0;
  for (std::uint32_t m : L.members_nc) sum += signed_unit(std::popcount(m));
  return signed_unit(J.universe()->n()) * sum;
}

BigInt chi_removed_lemma1(const ChordSet& J) {
  require_noncrossing_diagonals(J);
  if (J.size() > kLatticeCap) throw Error(ErrorKind::TooLarge, "instance too large for lemma 1 sum");
  std::vector<Chord> el = J.chords();
  const std::uint32_t full = el.size() >= 32 ? ~0u : ((1u << el.size()) - 1);
  BigInt sum = 0;
  for (std::uint32_t mask = 0;; ++mask) {
    ChordSet I(J.universe());
    for (std::size_t k = 0; k < el.size(); ++k)
      if (mask >> k & 1u) I.insert(el[k]);
    PartitionResult r = subdivide(I);
    BigInt prod = 1;
    for (const auto& part : r.parts) {
      prod *= euler_recursive(part_diagonals(I, part));
      if (prod == 0) break;
    }
    sum += prod;
    if (mask == full) break;
  }
  return sum;
}

BigInt chi_removed_factorized(const ChordSet& J, const ChordSet& Jp) {
  ConvexLattice L = convex_lattice(J);
  if (!is_convex_partition(J)) throw Error(ErrorKind::Precondition, "J does not give a convex partition");
  if (!Jp.subset_of(J)) throw Error(ErrorKind::Precondition, "J' is not a subset of J");
  for (std::uint32_t m : L.members_c) {
    if (!Jp.subset_of(L.subset(m))) {
      throw Error(ErrorKind::Precondition, "J' is not contained in every convex-partition subset of J");
    }
  }
  PartitionResult r = subdivide(Jp);
  ChordSet rest = J - Jp;
  BigInt prod = 1;
  for (const auto& part : r.parts) {
    prod *= euler_recursive(part_diagonals(Jp, part) - rest);
    if (prod == 0) break;
  }
  return prod;
}

std::vector<Pocket> pockets(const UniversePtr& u) {
  const Polygon& P = u->polygon();
  const int n = P.size();
  std::vector<int> hull = convex_hull_indices(P.vertices());
  std::vector<Pocket> out;
  for (std::size_t k = 0; k < hull.size(); ++k) {
    int a = hull[k], b = hull[(k + 1) % hull.size()];
    if (u->index_of(a, b) < 0) continue;
    Pocket pk{make_chord(a, b, n), {}, ChordSet(u)};
    for (int v = a;; v = (v + 1) % n) {
      pk.path.push_back(v);
      if (v == b) break;
    }
    Polygon Q = sub_polygon(P, pk.path);
    // Local index -> parent index (validation may reverse the order).
    std::vector<int> to_parent;
    for (const Point& q : Q.vertices()) {
      for (int v : pk.path)
        if (P.vertex(v) == q) to_parent.push_back(v);
    }
    auto qu = ChordUniverse::build(Q);
    for (int c = 0; c < qu->size(); ++c) {
      if (qu->kind(c) != ChordKind::Diagonal) continue;
      const Chord& lc = qu->chord(c);
      Chord pc = make_chord(to_parent[static_cast<std::size_t>(lc.i)], to_parent[static_cast<std::size_t>(lc.j)], n);
      if (u->kind(u->index_of(pc.i, pc.j)) != ChordKind::Epigonal) {
        throw Error(ErrorKind::Internal, "pocket diagonal " + to_string(pc) + " is not an epigonal");
      }
      pk.diagonals.insert(pc);
    }
    out.push_back(std::move(pk));
  }
  return out;
}

BigInt chi_epigonal_pockets(const ChordSet& J) {
  BigInt prod = 1;
  for (const Pocket& pk : pockets(J.universe())) {
    // A surviving hull-edge epigonal crosses no other epigonal: factor chi({e}) = 0.
    if (!J.contains(pk.hull_edge)) return 0;
    prod *= euler_recursive(pk.diagonals - J);
    if (prod == 0) return 0;
  }
  return prod;
}

namespace {

void require_ie_hypotheses(const ChordSet& J) {
  if (is_convex(J.universe()->polygon())) throw Error(ErrorKind::Precondition, "polygon is convex");
  require_noncrossing_diagonals(J);
  if (!is_convex_partition(J)) throw Error(ErrorKind::Precondition, "J does not give a convex partition");
}

}  // namespace

int xi(const ChordSet& J, const ChordSet& I) {
  require_ie_hypotheses(J);
  if (!I.subset_of(J)) throw Error(ErrorKind::Precondition, "I is not a subset of J");
  return (I.empty() || I == J) ? 1 : 0;
}

BigInt chi_inclusion_exclusion(const ChordSet& J, IEMode mode) {
  require_ie_hypotheses(J);
  if (J.size() > kInclusionExclusionCap) {
    throw Error(ErrorKind::TooLarge, "instance too large: |J| exceeds " + std::to_string(kInclusionExclusionCap));
  }
  ConvexLattice L = convex_lattice(J);
  const std::vector<std::uint32_t>& sets = mode == IEMode::Minimal ? L.minimal_c : L.maximal_nc;
  if (sets.size() > static_cast<std::size_t>(kMinimalSetCap)) {
    throw Error(ErrorKind::TooLarge, "instance too large: " + std::to_string(sets.size()) + " extremal sets");
  }
  const std::uint32_t full = L.full_mask();
  auto xi_mask = [&](std::uint32_t m) { return (m == 0 || m == full) ? 1 : 0; };
  BigInt sum = 0;
  const std::uint64_t terms = std::uint64_t{1} << sets.size();
  for (std::uint64_t s = 1; s < terms; ++s) {
    std::uint32_t acc = mode == IEMode::Minimal ? 0u : full;
    int k = 0;
    for (std::size_t t = 0; t < sets.size(); ++t) {
      if (!(s >> t & 1u)) continue;
      ++k;
      acc = mode == IEMode::Minimal ? (acc | sets[t]) : (acc & sets[t]);
    }
    int x = xi_mask(acc);
    if (!x) continue;
    sum += mode == IEMode::Minimal ? signed_unit(k) : signed_unit(k - 1);
  }
  const int n = J.universe()->n();
  return mode == IEMode::Minimal ? signed_unit(n + J.size()) * sum : signed_unit(n) * sum;
}

Chord find_diagonal(const Polygon& P) {
  const int n = P.size();
  if (n < 4) throw Error(ErrorKind::Precondition, "a triangle has no diagonal");
  int a = -1;
  for (int v = 0; v < n; ++v) {
    if (!P.is_reflex(v)) {
      a = v;
      break;
    }
  }
  const int b = P.wrap(a - 1), c = P.wrap(a + 1);
  Chord ear = make_chord(b, c, n);
  if (classify_chord(P, ear) == ChordKind::Diagonal) return ear;
  int best = -1;
  QSqrt3 best_dist;
  for (int d = 0; d < n; ++d) {
    if (d == a || d == b || d == c) continue;
    if (P.orient(b, a, d) > 0 && P.orient(a, c, d) > 0 && P.orient(c, b, d) > 0) {
      // |cross| is proportional to the distance from line BC.
      QSqrt3 dist = cross(P.vertex(b), P.vertex(c), P.vertex(d));
      if (dist.sign() < 0) dist = -dist;
      if (best < 0 || dist > best_dist) {
        best = d;
        best_dist = dist;
      }
    }
  }
  if (best < 0) throw Error(ErrorKind::Internal, "no vertex inside the ear triangle");
  return make_chord(a, best, n);
}

ChordSet extend_to_triangulation(const ChordSet& J) {
  require_noncrossing_diagonals(J);
  const auto& u = J.universe();
  const Polygon& P = u->polygon();
  ChordSet T = J;
  while (true) {
    PartitionResult r = subdivide(T);
    auto it = std::find_if(r.parts.begin(), r.parts.end(), [](const auto& p) { return p.size() > 3; });
    if (it == r.parts.end()) break;
    const std::vector<int>& part = *it;
    Polygon Q = sub_polygon(P, part);
    Chord local = find_diagonal(Q);
    Chord c = make_chord(part[static_cast<std::size_t>(local.i)], part[static_cast<std::size_t>(local.j)], P.size());
    int k = u->index_of(c.i, c.j);
    if (u->kind(k) != ChordKind::Diagonal || u->crossing(k).intersects(T.bits())) {
      throw Error(ErrorKind::Internal, "extension produced an invalid diagonal " + to_string(c));
    }
    T.insert(c);
  }
  if (T.size() != P.size() - 3) throw Error(ErrorKind::Internal, "triangulation has the wrong size");
  return T;
}

}  // namespace chord_euler
