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

#include <doctest.h>

#include <random>

#include "chord_euler/error.hpp"
#include "chord_euler/partition.hpp"
#include "support.hpp"

using namespace chord_euler;
using namespace test_support;

namespace {

using Parts = std::vector<std::vector<int>>;

QSqrt3 shoelace(const std::vector<Point>& v) {
  QSqrt3 a;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const Point& p = v[k];
    const Point& q = v[(k + 1) % v.size()];
    a = a + p.x * q.y - q.x * p.y;
  }
  return a;
}

ChordSet random_noncrossing(std::mt19937_64& rng, const ChordSet& M, int cap) {
  std::vector<int> idx = M.indices();
  std::shuffle(idx.begin(), idx.end(), rng);
  ChordSet J(M.universe());
  int want = static_cast<int>(rng() % static_cast<unsigned>(cap + 1));
  for (int k : idx) {
    if (J.size() >= want) break;
    if (!M.universe()->crossing(k).intersects(J.bits())) J.insert(M.universe()->chord(k));
  }
  return J;
}

// Convex partition by local angles: at every vertex the rays of P's edges and
// the cut chords, taken in CCW order inside P, leave no gap larger than pi.
bool convex_by_angles(const ChordSet& I) {
  const Polygon& P = I.universe()->polygon();
  const int n = P.size();
  for (int v = 0; v < n; ++v) {
    std::vector<int> rays{P.wrap(v + 1)};
    for (const Chord& c : I.chords()) {
      if (c.i == v) rays.push_back(c.j);
      if (c.j == v) rays.push_back(c.i);
    }
    std::sort(rays.begin() + 1, rays.end(), [&](int a, int b) { return (a - v + n) % n < (b - v + n) % n; });
    rays.push_back(P.wrap(v - 1));
    for (std::size_t k = 0; k + 1 < rays.size(); ++k)
      if (angle_exceeds_pi(P.vertex(v), P.vertex(rays[k]), P.vertex(rays[k + 1]))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("subdivide examples") {
  auto hu = U(convex_parabola(6));
  CHECK(subdivide(ChordSet::of(hu, {{0, 3}})).parts == Parts{{0, 1, 2, 3}, {0, 3, 4, 5}});
  auto pu = U(convex_parabola(5));
  CHECK(subdivide(ChordSet::of(pu, {{0, 2}, {0, 3}})).parts == Parts{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}});
  CHECK(subdivide(ChordSet(pu)).parts == Parts{{0, 1, 2, 3, 4}});
  CHECK_THROWS_AS(subdivide(ChordSet::of(pu, {{0, 2}, {1, 3}})), Error);
  auto du = U(dart());
  CHECK_THROWS_AS(subdivide(ChordSet::of(du, {{1, 3}})), Error);
}

TEST_CASE("subdivide conservation on random polygons") {
  std::mt19937_64 rng(201);
  for (int t = 0; t < 150; ++t) {
    Polygon P = random_star(rng, 4 + static_cast<int>(rng() % 7));
    auto u = U(P);
    ChordSet I = random_noncrossing(rng, diagonals(u), P.size());
    PartitionResult r = subdivide(I);
    REQUIRE(r.parts.size() == static_cast<std::size_t>(I.size()) + 1);
    std::size_t vsum = 0;
    QSqrt3 area;
    for (std::size_t k = 0; k < r.parts.size(); ++k) {
      vsum += r.parts[k].size();
      std::vector<Point> v;
      for (int i : r.parts[k]) v.push_back(P.vertex(i));
      QSqrt3 a = shoelace(v);
      CHECK(a.sign() > 0);
      area = area + a;
      CHECK_NOTHROW(r.part_polygon(k));
    }
    CHECK(vsum == static_cast<std::size_t>(P.size() + 2 * I.size()));
    CHECK(area == P.area2());
    CHECK(is_convex_partition(I) == convex_by_angles(I));
  }
}

TEST_CASE("part_diagonals agree with the part's own classification") {
  std::mt19937_64 rng(202);
  for (int t = 0; t < 100; ++t) {
    Polygon P = random_star(rng, 5 + static_cast<int>(rng() % 5));
    auto u = U(P);
    ChordSet I = random_noncrossing(rng, diagonals(u), 3);
    PartitionResult r = subdivide(I);
    for (std::size_t k = 0; k < r.parts.size(); ++k) {
      const auto& part = r.parts[k];
      auto qu = U(r.part_polygon(k));
      ChordSet expect(u);
      for (const Chord& c : diagonals(qu).chords())
        expect.insert(make_chord(part[static_cast<std::size_t>(c.i)], part[static_cast<std::size_t>(c.j)], P.size()));
      CHECK(part_diagonals(I, part) == expect);
    }
  }
}

TEST_CASE("convex lattice examples") {
  auto du = U(dart());
  ConvexLattice L = convex_lattice(diagonals(du));
  CHECK(L.members_c == std::vector<std::uint32_t>{1});
  CHECK(L.members_nc == std::vector<std::uint32_t>{0});
  CHECK(L.minimal_c == std::vector<std::uint32_t>{1});
  CHECK(L.maximal_nc == std::vector<std::uint32_t>{0});
  auto hu = U(convex_parabola(7));
  ConvexLattice C = convex_lattice(ChordSet::of(hu, {{0, 2}, {0, 4}, {4, 6}}));
  CHECK(C.members_c.size() == 8);
  CHECK(C.members_nc.empty());
  CHECK(C.minimal_c == std::vector<std::uint32_t>{0});
}

TEST_CASE("chi_removed identities on random polygons") {
  std::mt19937_64 rng(203);
  for (int t = 0; t < 120; ++t) {
    Polygon P = random_star(rng, 4 + static_cast<int>(rng() % 5));
    auto u = U(P);
    ChordSet J = random_noncrossing(rng, diagonals(u), P.size());
    BigInt direct = chi_removed_direct(J, Side::D);
    CHECK(chi_removed_theorem2(J) == direct);
    CHECK(chi_removed_lemma1(J) == direct);
    if (!J.empty()) CHECK(chi_removed_lemma_d2(J) == direct);
    ConvexLattice L = convex_lattice(J);
    if (!is_convex_partition(J)) CHECK(direct == 0);
    if (L.minimal_c.size() == 1) {
      BigInt expect = L.minimal_c[0] == L.full_mask() ? BigInt((P.size() + 1 + J.size()) % 2 ? -1 : 1) : BigInt(0);
      CHECK(direct == expect);
    }
    if (is_convex_partition(J)) {
      std::uint32_t common = L.full_mask();
      for (std::uint32_t m : L.members_c) common &= m;
      CHECK(chi_removed_factorized(J, L.subset(common)) == direct);
      CHECK(chi_removed_factorized(J, ChordSet(u)) == direct);
      if (!is_convex(P)) {
        CHECK(chi_inclusion_exclusion(J, IEMode::Minimal) == direct);
        CHECK(chi_inclusion_exclusion(J, IEMode::Maximal) == direct);
        std::uint32_t uni = 0;
        for (std::uint32_t m : L.minimal_c) uni |= m;
        if (uni != L.full_mask()) CHECK(direct == 0);
        std::uint32_t inter = L.full_mask();
        for (std::uint32_t m : L.maximal_nc) inter &= m;
        if (inter != 0) CHECK(direct == 0);
      }
    }
  }
}

TEST_CASE("chi_removed examples") {
  auto du = U(dart());
  CHECK(chi_removed_direct(ChordSet(du), Side::D) == 0);
  CHECK(chi_removed_theorem2(diagonals(du)) == 1);
  CHECK(chi_removed_lemma_d2(diagonals(du)) == 1);
  CHECK_THROWS_AS(chi_removed_lemma_d2(ChordSet(du)), Error);
  auto pu = U(convex_parabola(5));
  CHECK(chi_removed_lemma1(ChordSet::of(pu, {{0, 2}})) == 0);
  CHECK(chi_removed_lemma1(ChordSet(pu)) == euler_recursive(diagonals(pu)));
  for (int n = 4; n <= 8; ++n) {
    auto cu = U(convex_parabola(n));
    CHECK(chi_removed_direct(ChordSet(cu), Side::D) == BigInt(n % 2 ? 1 : -1));
  }
  CHECK(xi(diagonals(du), ChordSet(du)) == 1);
  CHECK(chi_inclusion_exclusion(diagonals(du), IEMode::Minimal) == 1);
  CHECK(chi_inclusion_exclusion(diagonals(du), IEMode::Maximal) == 1);
  CHECK_THROWS_AS(chi_inclusion_exclusion(ChordSet(pu), IEMode::Minimal), Error);
  // The empty cut is already convex, so J' = J is rejected.
  auto hu = U(convex_parabola(6));
  CHECK_THROWS_AS(chi_removed_factorized(ChordSet::of(hu, {{0, 2}}), ChordSet::of(hu, {{0, 2}})), Error);
}

TEST_CASE("pockets and the epigonal product") {
  auto du = U(dart());
  auto pk = pockets(du);
  REQUIRE(pk.size() == 1);
  CHECK(pk[0].hull_edge == Chord{1, 3});
  CHECK(pk[0].path == std::vector<int>{1, 2, 3});
  CHECK(pk[0].diagonals.empty());
  CHECK(chi_epigonal_pockets(ChordSet(du)) == 0);
  CHECK(chi_epigonal_pockets(epigonals(du)) == 1);
  CHECK(chi_epigonal_pockets(ChordSet(U(convex_parabola(6)))) == 1);
  std::mt19937_64 rng(204);
  for (int t = 0; t < 200; ++t) {
    Polygon P = random_star(rng, 5 + static_cast<int>(rng() % 5));
    auto u = U(P);
    ChordSet J = random_noncrossing(rng, epigonals(u), 4);
    if (t % 3 == 0) {
      for (const Pocket& p : pockets(u)) J.insert(p.hull_edge);
    }
    CHECK(chi_epigonal_pockets(J) == chi_removed_direct(J, Side::E));
  }
}

TEST_CASE("find_diagonal and extend_to_triangulation") {
  CHECK(find_diagonal(dart()) == Chord{0, 2});
  CHECK(find_diagonal(square()) == Chord{1, 3});
  CHECK_THROWS_AS(find_diagonal(poly({{0, 0}, {1, 0}, {0, 1}})), Error);
  auto pu = U(convex_parabola(5));
  CHECK(extend_to_triangulation(ChordSet::of(pu, {{0, 2}})).chords() == std::vector<Chord>{{0, 2}, {2, 4}});
  auto tu = U(poly({{0, 0}, {1, 0}, {0, 1}}));
  CHECK(extend_to_triangulation(ChordSet(tu)).empty());
  std::mt19937_64 rng(205);
  for (int t = 0; t < 150; ++t) {
    Polygon P = random_star(rng, 4 + static_cast<int>(rng() % 8));
    CHECK(classify_chord(P, find_diagonal(P)) == ChordKind::Diagonal);
    auto u = U(P);
    ChordSet J = random_noncrossing(rng, diagonals(u), 3);
    ChordSet T = extend_to_triangulation(J);
    CHECK(T.size() == P.size() - 3);
    CHECK(J.subset_of(T));
    CHECK(T.pairwise_noncrossing());
    CHECK(T.subset_of(diagonals(u)));
    for (const auto& part : subdivide(T).parts) CHECK(part.size() == 3);
  }
}
