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

#include "chord_euler/geometry.hpp"

#include <algorithm>

#include "chord_euler/error.hpp"

namespace chord_euler {

bool point_less(const Point& a, const Point& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

Point midpoint(const Point& a, const Point& b) {
  static const QSqrt3 kHalf(Rat(1, 2));
  return Point{(a.x + b.x) * kHalf, (a.y + b.y) * kHalf};
}

QSqrt3 cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

int orientation(const Point& p, const Point& q, const Point& r) { return cross(p, q, r).sign(); }

bool angle_exceeds_pi(const Point& A, const Point& X, const Point& Y) {
  int o = orientation(A, X, Y);
  if (o == 0) throw Error(ErrorKind::CollinearTriple, "angle test on collinear points");
  return o < 0;
}

bool segments_properly_cross(const Segment& s1, const Segment& s2) {
  if (s1.a == s2.a || s1.a == s2.b || s1.b == s2.a || s1.b == s2.b) return false;
  int o1 = orientation(s1.a, s1.b, s2.a);
  int o2 = orientation(s1.a, s1.b, s2.b);
  int o3 = orientation(s2.a, s2.b, s1.a);
  int o4 = orientation(s2.a, s2.b, s1.b);
  if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) return false;
  return o1 != o2 && o3 != o4;
}

namespace {

// Both factors of a 2D cross product with a fixed direction d.
QSqrt3 cross_dir(const QSqrt3& dx, const QSqrt3& dy, const Point& v) { return dx * v.y - dy * v.x; }

bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (orientation(a, b, p) != 0) return false;
  auto lo_x = std::min(a.x, b.x), hi_x = std::max(a.x, b.x);
  auto lo_y = std::min(a.y, b.y), hi_y = std::max(a.y, b.y);
  return lo_x <= p.x && p.x <= hi_x && lo_y <= p.y && p.y <= hi_y;
}

}  // namespace

Location point_in_polygon(const Point& pt, const Polygon& P) {
  const int n = P.size();
  std::vector<Point> rel;
  rel.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    if (on_segment(pt, P.vertex(k), P.vertex(k + 1))) {
      throw Error(ErrorKind::OnBoundary, "point lies on the polygon boundary", {k});
    }
    rel.push_back(Point{P.vertex(k).x - pt.x, P.vertex(k).y - pt.y});
  }
  // Ray direction (1,0), then (k,1) for k = 1, 2, ... until no vertex lies on
  // the ray's supporting line.
  for (long k = 0;; ++k) {
    QSqrt3 dx = k == 0 ? QSqrt3(1) : QSqrt3(k);
    QSqrt3 dy = k == 0 ? QSqrt3(0) : QSqrt3(1);
    std::vector<int> side(static_cast<std::size_t>(n));
    bool clean = true;
    for (int v = 0; v < n && clean; ++v) {
      side[static_cast<std::size_t>(v)] = cross_dir(dx, dy, rel[static_cast<std::size_t>(v)]).sign();
      clean = side[static_cast<std::size_t>(v)] != 0;
    }
    if (!clean) continue;
    int crossings = 0;
    for (int e = 0; e < n; ++e) {
      int a = e, b = (e + 1) % n;
      if (side[static_cast<std::size_t>(a)] == side[static_cast<std::size_t>(b)]) continue;
      const Point& pa = rel[static_cast<std::size_t>(a)];
      const Point& pb = rel[static_cast<std::size_t>(b)];
      // Intersection parameter along the ray is positive iff
      // cross(pa, pb) and cross(d, pb - pa) share a sign.
      int s1 = (pa.x * pb.y - pa.y * pb.x).sign();
      int s2 = (dx * (pb.y - pa.y) - dy * (pb.x - pa.x)).sign();
      if (s1 == s2) ++crossings;
    }
    return (crossings % 2) ? Location::Inside : Location::Outside;
  }
}

Polygon validate_polygon(const std::vector<Point>& input) {
  const int n = static_cast<int>(input.size());
  if (n < 3) throw Error(ErrorKind::TooFewVertices, "polygon needs at least 3 vertices");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (input[static_cast<std::size_t>(i)] == input[static_cast<std::size_t>(j)]) {
        throw Error(ErrorKind::DuplicateVertex,
                    "duplicate vertex (" + std::to_string(i) + ", " + std::to_string(j) + ")", {i, j});
      }
    }
  }
  const std::size_t N = static_cast<std::size_t>(n);
  std::vector<std::int8_t> table(N * N * N, 0);
  auto at = [&](int i, int j, int k) -> std::int8_t& {
    return table[(static_cast<std::size_t>(i) * N + static_cast<std::size_t>(j)) * N + static_cast<std::size_t>(k)];
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        int o = orientation(input[static_cast<std::size_t>(i)], input[static_cast<std::size_t>(j)],
                            input[static_cast<std::size_t>(k)]);
        if (o == 0) {
          throw Error(ErrorKind::CollinearTriple,
                      "collinear triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                          std::to_string(k) + ")",
                      {i, j, k});
        }
        auto s = static_cast<std::int8_t>(o);
        at(i, j, k) = s;
        at(j, k, i) = s;
        at(k, i, j) = s;
        at(j, i, k) = static_cast<std::int8_t>(-s);
        at(i, k, j) = static_cast<std::int8_t>(-s);
        at(k, j, i) = static_cast<std::int8_t>(-s);
      }
    }
  }
  auto o = [&](int i, int j, int k) { return at(i % n, j % n, k % n); };
  // With no collinear triples, two non-adjacent edges meet only by crossing.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      int a = i, b = i + 1, c = j, d = j + 1;
      if (o(a, b, c) != o(a, b, d) && o(c, d, a) != o(c, d, b)) {
        throw Error(ErrorKind::SelfIntersection,
                    "self-intersection (" + std::to_string(a) + "-" + std::to_string(b % n) + ", " +
                        std::to_string(c) + "-" + std::to_string(d % n) + ")",
                    {i, j});
      }
    }
  }
  QSqrt3 area2;
  for (int k = 0; k < n; ++k) {
    const Point& p = input[static_cast<std::size_t>(k)];
    const Point& q = input[static_cast<std::size_t>((k + 1) % n)];
    area2 += p.x * q.y - p.y * q.x;
  }
  Polygon P;
  if (area2.sign() > 0) {
    P.vertices_ = input;
    P.orient_ = std::move(table);
    P.area2_ = std::move(area2);
    return P;
  }
  // Reverse the whole sequence; orientation of reversed indices flips.
  P.vertices_.assign(input.rbegin(), input.rend());
  P.orient_.assign(N * N * N, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        P.orient_[(static_cast<std::size_t>(i) * N + static_cast<std::size_t>(j)) * N + static_cast<std::size_t>(k)] =
            at(n - 1 - i, n - 1 - j, n - 1 - k);
  P.area2_ = -area2;
  return P;
}

bool is_convex(const Polygon& P) {
  for (int i = 0; i < P.size(); ++i) {
    if (P.is_reflex(i)) return false;
  }
  return true;
}

std::vector<int> reflex_vertices(const Polygon& P) {
  std::vector<int> out;
  for (int i = 0; i < P.size(); ++i) {
    if (P.is_reflex(i)) out.push_back(i);
  }
  return out;
}

std::vector<int> convex_hull_indices(const std::vector<Point>& points) {
  const int m = static_cast<int>(points.size());
  if (m < 3) throw Error(ErrorKind::TooFewVertices, "convex hull needs at least 3 points");
  std::vector<int> idx(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) idx[static_cast<std::size_t>(k)] = k;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return point_less(points[static_cast<std::size_t>(a)], points[static_cast<std::size_t>(b)]);
  });
  auto pt = [&](int k) -> const Point& { return points[static_cast<std::size_t>(k)]; };
  // Monotone chain keeping strict left turns only.
  std::vector<int> hull;
  for (int pass = 0; pass < 2; ++pass) {
    std::size_t base = hull.size();
    for (int k : idx) {
      while (hull.size() >= base + 2 &&
             orientation(pt(hull[hull.size() - 2]), pt(hull.back()), pt(k)) <= 0) {
        hull.pop_back();
      }
      hull.push_back(k);
    }
    hull.pop_back();
    std::reverse(idx.begin(), idx.end());
  }
  if (hull.size() < 3) throw Error(ErrorKind::CollinearTriple, "all points are collinear");
  return hull;
}

Polygon convex_hull(const std::vector<Point>& points) {
  std::vector<Point> hv;
  for (int k : convex_hull_indices(points)) hv.push_back(points[static_cast<std::size_t>(k)]);
  return validate_polygon(hv);
}

Polygon sub_polygon(const Polygon& P, const std::vector<int>& idx) {
  std::vector<Point> pts;
  pts.reserve(idx.size());
  for (int k : idx) pts.push_back(P.vertex(k));
  return validate_polygon(pts);
}

}  // namespace chord_euler
