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

#include <algorithm>
#include <cmath>
#include <random>

#include "chord_euler/error.hpp"
#include "chord_euler/geometry.hpp"
#include "support.hpp"

using namespace chord_euler;
using namespace test_support;

namespace {

// Exact oracle: solve a1 + t(b1-a1) = a2 + u(b2-a2) and require 0<t<1, 0<u<1.
bool cross_oracle(const Segment& s1, const Segment& s2) {
  QSqrt3 dx1 = s1.b.x - s1.a.x, dy1 = s1.b.y - s1.a.y;
  QSqrt3 dx2 = s2.b.x - s2.a.x, dy2 = s2.b.y - s2.a.y;
  QSqrt3 det = dx1 * (-dy2) - dy1 * (-dx2);
  if (det.is_zero()) return false;
  QSqrt3 rx = s2.a.x - s1.a.x, ry = s2.a.y - s1.a.y;
  QSqrt3 t = (rx * (-dy2) - ry * (-dx2)) / det;
  QSqrt3 u = (dx1 * ry - dy1 * rx) / det;
  return t.sign() > 0 && (QSqrt3(1) - t).sign() > 0 && u.sign() > 0 && (QSqrt3(1) - u).sign() > 0;
}

double ccw_angle(const Point& A, const Point& X, const Point& Y) {
  double a1 = std::atan2(X.y.to_double() - A.y.to_double(), X.x.to_double() - A.x.to_double());
  double a2 = std::atan2(Y.y.to_double() - A.y.to_double(), Y.x.to_double() - A.x.to_double());
  double d = a2 - a1;
  while (d < 0) d += 2 * M_PI;
  return d;
}

}  // namespace

TEST_CASE("orientation examples") {
  CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
  CHECK(orientation(pt(0, 0), pt(1, 1), pt(2, 2)) == 0);
  CHECK(orientation(pt(0, 0), pt(0, 1), pt(1, 0)) == -1);
}

TEST_CASE("angle_exceeds_pi examples and float oracle") {
  CHECK_FALSE(angle_exceeds_pi(pt(0, 0), pt(1, 0), pt(0, 1)));
  CHECK(angle_exceeds_pi(pt(0, 0), pt(0, 1), pt(1, 0)));
  Polygon sq = square();
  CHECK_FALSE(angle_exceeds_pi(sq.vertex(1), sq.vertex(2), sq.vertex(0)));
  CHECK_THROWS_AS(angle_exceeds_pi(pt(0, 0), pt(1, 1), pt(2, 2)), Error);
  std::mt19937_64 rng(17);
  for (int t = 0; t < 500; ++t) {
    Point A = pt(static_cast<long>(rng() % 50), static_cast<long>(rng() % 50));
    Point X = pt(static_cast<long>(rng() % 50), static_cast<long>(rng() % 50));
    Point Y = pt(static_cast<long>(rng() % 50), static_cast<long>(rng() % 50));
    if (orientation(A, X, Y) == 0) continue;
    CHECK(angle_exceeds_pi(A, X, Y) == (ccw_angle(A, X, Y) > M_PI));
  }
}

TEST_CASE("segments_properly_cross examples, symmetry and oracle") {
  CHECK(segments_properly_cross({pt(0, 0), pt(2, 2)}, {pt(0, 2), pt(2, 0)}));
  CHECK_FALSE(segments_properly_cross({pt(0, 0), pt(1, 1)}, {pt(1, 1), pt(2, 0)}));
  CHECK_FALSE(segments_properly_cross({pt(0, 0), pt(1, 0)}, {pt(0, 1), pt(1, 1)}));
  std::mt19937_64 rng(23);
  for (int t = 0; t < 1000; ++t) {
    auto r = [&] { return pt(static_cast<long>(rng() % 9), static_cast<long>(rng() % 9)); };
    Segment s1{r(), r()}, s2{r(), r()};
    if (s1.a == s1.b || s2.a == s2.b) continue;
    bool c = segments_properly_cross(s1, s2);
    CHECK(c == segments_properly_cross(s2, s1));
    CHECK(c == segments_properly_cross({s1.b, s1.a}, s2));
    int o = orientation(s1.a, s1.b, s2.a) * orientation(s1.a, s1.b, s2.b) * orientation(s2.a, s2.b, s1.a) *
            orientation(s2.a, s2.b, s1.b);
    if (o != 0) CHECK(c == cross_oracle(s1, s2));
  }
}

TEST_CASE("point_in_polygon") {
  Polygon sq = square();
  CHECK(point_in_polygon(pt(1, 1), sq) == Location::Inside);
  CHECK(point_in_polygon(pt(3, 3), sq) == Location::Outside);
  CHECK(point_in_polygon(pt(2, 2), dart()) == Location::Outside);
  CHECK_THROWS_AS(point_in_polygon(pt(1, 0), sq), Error);
  // Ray along y=0 from (-1,0) passes through vertices of the square.
  CHECK(point_in_polygon(pt(-1, 0), sq) == Location::Outside);
  Polygon d = dart();
  CHECK(point_in_polygon(Point{QSqrt3(Rat(1, 2)), QSqrt3(Rat(1, 2))}, d) == Location::Inside);
}

TEST_CASE("validate_polygon") {
  Polygon cw = poly({{0, 0}, {0, 2}, {2, 2}, {2, 0}});
  CHECK(cw.area2().sign() > 0);
  CHECK(cw.vertices() == pts({{2, 0}, {2, 2}, {0, 2}, {0, 0}}));
  try {
    poly({{0, 0}, {2, 2}, {2, 0}, {0, 2}});
    FAIL("bow-tie accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SelfIntersection);
    CHECK(std::string(e.what()) == "self-intersection (0-1, 2-3)");
  }
  try {
    poly({{0, 0}, {1, 0}, {2, 0}, {1, 1}});
    FAIL("collinear accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CollinearTriple);
    CHECK(e.indices() == std::vector<int>{0, 1, 2});
  }
  try {
    poly({{0, 0}, {1, 0}, {0, 0}, {1, 1}});
    FAIL("duplicate accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DuplicateVertex);
  }
  CHECK_THROWS_AS(poly({{0, 0}, {1, 0}}), Error);
  // Normalization is idempotent under reversal.
  auto xy = pts({{0, 0}, {5, 1}, {3, 3}, {4, 6}, {-1, 4}});
  auto rev = xy;
  std::reverse(rev.begin(), rev.end());
  CHECK(validate_polygon(xy) == validate_polygon(rev));
}

TEST_CASE("convexity and reflex vertices") {
  CHECK(is_convex(square()));
  CHECK(reflex_vertices(square()).empty());
  CHECK(reflex_vertices(dart()) == std::vector<int>{2});
  CHECK(is_convex(convex_parabola(5)));
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    std::vector<Point> v;
    for (int k = 0; k < 6; ++k) v.push_back(pt(static_cast<long>(rng() % 30), static_cast<long>(rng() % 30)));
    try {
      Polygon P = validate_polygon(v);
      CHECK(is_convex(P) == reflex_vertices(P).empty());
    } catch (const Error&) {
    }
  }
}

TEST_CASE("convex hull") {
  Polygon h = convex_hull(pts({{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}}));
  CHECK(h.vertices() == pts({{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
  Polygon hd = convex_hull(dart().vertices());
  CHECK(hd.vertices() == pts({{0, 0}, {4, 0}, {0, 4}}));
  // Already convex input: same cyclic sequence.
  auto cv = pts({{3, 1}, {5, 4}, {2, 6}, {0, 2}});
  auto hv = convex_hull(cv).vertices();
  auto start = std::find(cv.begin(), cv.end(), hv[0]);
  std::rotate(cv.begin(), start, cv.end());
  CHECK(hv == cv);
  CHECK_THROWS_AS(convex_hull(pts({{0, 0}, {1, 1}, {2, 2}})), Error);
  std::mt19937_64 rng(41);
  for (int t = 0; t < 100; ++t) {
    std::vector<Point> v;
    for (int k = 0; k < 8; ++k) v.push_back(pt(static_cast<long>(rng() % 1000), static_cast<long>(rng() % 1000)));
    if (!general_position(v)) continue;
    Polygon H = convex_hull(v);
    CHECK(is_convex(H));
    for (const Point& p : v) {
      if (std::find(H.vertices().begin(), H.vertices().end(), p) != H.vertices().end()) continue;
      CHECK(point_in_polygon(p, H) == Location::Inside);
    }
  }
}
