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

#include <set>

#include "chord_euler/error.hpp"
#include "chord_euler/generators.hpp"
#include "chord_euler/partition.hpp"
#include "support.hpp"

using namespace chord_euler;
using namespace test_support;

namespace {

Point rpt(const Rat& x, const Rat& y) { return Point{QSqrt3(x), QSqrt3(y)}; }

// Bottom edge y = 0 holds the collinear triple (-5,0), (0,0), (5,0); a spike
// from the top reaches down to (1/10000, 1/1000). Vertex 0 moves by
// (eps, eps/4), which passes the spike tip for eps >= budget/2.
std::vector<Point> spike_fixture() {
  return {rpt(0, 0), rpt(5, 0), rpt(5, 5), rpt(Rat(1, 10000), Rat(1, 1000)), rpt(-5, 5), rpt(-5, 0)};
}

}  // namespace

TEST_CASE("convex_ngon") {
  for (int n = 3; n <= 12; ++n) {
    Polygon P = convex_ngon(n);
    CHECK(P.size() == n);
    CHECK(is_convex(P));
    CHECK(general_position(P.vertices()));
    for (const Point& p : P.vertices()) CHECK(p.x * p.x + p.y * p.y == QSqrt3(1));
  }
  CHECK(diagonals(U(convex_ngon(5))).size() == 5);
  CHECK(convex_ngon(7) == convex_ngon(7));
  CHECK_THROWS_AS(convex_ngon(2), Error);
}

TEST_CASE("class exemplar arguments") {
  CHECK_THROWS_AS(class_exemplar(0, 0, {5, 0}), Error);
  CHECK_THROWS_AS(class_exemplar(1, 0, {4, 0}), Error);
  CHECK_THROWS_AS(class_exemplar(2, 0, {1, 0}), Error);
  CHECK_THROWS_AS(class_exemplar(4, 0, {3, 0}), Error);
  CHECK_THROWS_AS(class_exemplar(6, 0, {1, 3}), Error);
  CHECK_THROWS_AS(class_exemplar(5, 5, {5, 0}), Error);
  CHECK(class_exemplar(2, 0, {4, 0}).size() == 7);
  CHECK(class_exemplar(3, 0, {2, 0}).size() == 11);
  CHECK(class_exemplar(6, 0, {2, 2}).size() == 13);
  for (int K = 1; K <= 6; ++K) {
    const ClassParams p = class_exemplar_sizes(K)[1];
    CHECK(class_exemplar(K, 2, p) == class_exemplar(K, 2, p));
  }
}

TEST_CASE("class exemplars are rotations of one another") {
  Polygon a = class_exemplar(6, 0, {1, 2});
  Polygon b = class_exemplar(6, 4, {1, 2});
  for (int k = 0; k < a.size(); ++k) CHECK(a.vertex(k) == b.vertex(k + 4));
}

TEST_CASE("perturb_to_general_position") {
  const Rat budget(1, 100);
  Rat used;
  std::vector<Point> clean = pts({{0, 0}, {4, 0}, {5, 3}, {1, 4}});
  CHECK(perturb_to_general_position(clean, budget, {}, &used).vertices() == clean);
  CHECK(used == 0);

  Polygon P = perturb_to_general_position(spike_fixture(), budget, {}, &used);
  CHECK(used == budget / 4);
  CHECK(general_position(P.vertices()));
  CHECK(P.vertex(0) == rpt(used, used / 4));
  CHECK(P.vertex(2) == spike_fixture()[2]);

  std::vector<Point> flat = pts({{0, 0}, {2, 0}, {4, 0}, {2, 3}});
  Polygon F = perturb_to_general_position(flat, budget, {}, &used);
  CHECK(used == budget);
  CHECK(F.is_reflex(1) == false);
  CHECK_THROWS_AS(perturb_to_general_position(flat, budget, [](const Polygon&) { return false; }), Error);
  CHECK_THROWS_AS(perturb_to_general_position(flat, Rat(1, 50)), Error);
  CHECK_THROWS_AS(perturb_to_general_position(flat, Rat(0)), Error);
}

TEST_CASE("zigzag vertex and label tables") {
  // l = 2: A1..A6 = B1, B2, C3, B3, D2, C2.
  std::vector<Point> A = zigzag_raw_vertices(2, false);
  const QSqrt3 h(Rat(0), Rat(1, 2));
  REQUIRE(A.size() == 6);
  CHECK(A[0] == rpt(0, 0));
  CHECK(A[1] == rpt(1, 0));
  CHECK(A[3] == Point{QSqrt3(1) + h, QSqrt3(Rat(1, 2))});
  CHECK(A[5] == rpt(1, 1));
  CHECK(A[2] == Point{QSqrt3(Rat(3, 2)) + h, QSqrt3(Rat(1, 2)) - h});
  CHECK(A[4] == Point{QSqrt3(Rat(3, 2)), QSqrt3(1) + h});
  CHECK(zigzag_labels(2) == std::vector<Chord>{{1, 5}, {3, 5}, {1, 3}});
  CHECK(zigzag_labels(3) == std::vector<Chord>{{1, 8}, {6, 8}, {1, 6}, {2, 6}, {2, 4}, {4, 6}});
  for (long L = 2; L <= 8; ++L) {
    auto e = zigzag_labels(L);
    CHECK(e.size() == static_cast<std::size_t>(3 * (L - 1)));
    std::set<Chord> distinct(e.begin(), e.end());
    CHECK(distinct.size() == e.size());
  }
  std::vector<Point> Ap = zigzag_raw_vertices(2, true);
  REQUIRE(Ap.size() == 7);
  CHECK(Ap[0] == midpoint(A[0], A[1]));
  CHECK(Ap[6] == midpoint(A[0], A[5]));
  CHECK_THROWS_AS(zigzag_raw_vertices(1, false), Error);
}

TEST_CASE("zigzag hexagon: literal and corrected sign bookkeeping") {
  ZigzagInstance z = zigzag_instance(2, false);
  CHECK(z.polygon.size() == 6);
  CHECK(z.epsilon == 0);
  CHECK(z.J.size() == 3);
  ZigzagReport r = verify_zigzag_structure(z);
  CHECK(r.a == std::vector<BigInt>{1, 0, -1, -2});
  CHECK(r.chi_literal == 2);
  CHECK(r.chi_corrected == -2);
  CHECK(chi_removed_direct(z.J, Side::D) == -2);
  // M_d minus J is the three long diagonals, pairwise crossing.
  ChordSet rest = diagonals(z.J.universe()) - z.J;
  CHECK(rest.chords() == std::vector<Chord>{{0, 3}, {1, 4}, {2, 5}});
  CHECK(r.pass);
}

TEST_CASE("zigzag targets") {
  for (long l : {2L, -2L, 3L, -3L, 4L, -4L}) {
    ZigzagInstance z = zigzag_chi_target(l);
    CAPTURE(l);
    CHECK(z.l == l);
    CHECK(z.polygon.size() == 3 * std::labs(l) + (z.primed ? 1 : 0));
    CHECK(z.J.subset_of(diagonals(z.J.universe())));
    CHECK(z.J.pairwise_noncrossing());
    CHECK(z.epsilon <= Rat(1, 200));
    ZigzagReport r = verify_zigzag_structure(z);
    CHECK(r.characterization_checked);
    CHECK(r.characterization_ok);
    CHECK(r.recurrence_ok);
    CHECK(r.closed_forms_ok);
    CHECK(r.pass);
    CHECK(chi_removed_direct(z.J, Side::D) == l);
  }
  CHECK(zigzag_chi_target(3).primed == false);
  CHECK(zigzag_chi_target(-3).primed == true);
  CHECK_THROWS_AS(zigzag_chi_target(1), Error);
  CHECK_THROWS_AS(zigzag_chi_target(0), Error);
}

TEST_CASE("zigzag perturbation keeps the raw shape within budget") {
  ZigzagInstance z = zigzag_instance(4, false);
  std::vector<Point> raw = zigzag_raw_vertices(4, false);
  CHECK(z.epsilon > 0);
  for (int k = 0; k < z.polygon.size(); ++k) {
    Point d{z.polygon.vertex(k).x - raw[static_cast<std::size_t>(k)].x, z.polygon.vertex(k).y - raw[static_cast<std::size_t>(k)].y};
    CHECK((d.x * d.x + d.y * d.y) < QSqrt3(Rat(1, 10000)));
  }
}

TEST_CASE("random_simple_polygon") {
  CHECK(random_simple_polygon(5, 1).size() == 5);
  CHECK(random_simple_polygon(9, 7) == random_simple_polygon(9, 7));
  CHECK_FALSE(random_simple_polygon(9, 7) == random_simple_polygon(9, 8));
  int failures = 0;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    try {
      Polygon P = random_simple_polygon(8, s);
      if (!general_position(P.vertices())) ++failures;
    } catch (const Error&) {
      ++failures;
    }
  }
  CHECK(failures == 0);
  CHECK(random_simple_polygon(7, 3, RandomShape::Star).size() == 7);
  CHECK_THROWS_AS(random_simple_polygon(2, 1), Error);
}
