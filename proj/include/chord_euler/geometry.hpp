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
#include <string>
#include <vector>

#include "chord_euler/scalar.hpp"

namespace chord_euler {

struct Point {
  QSqrt3 x;
  QSqrt3 y;

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

// Lexicographic (x, y) order.
bool point_less(const Point& a, const Point& b);
Point midpoint(const Point& a, const Point& b);
QSqrt3 cross(const Point& o, const Point& a, const Point& b);

struct Segment {
  Point a;
  Point b;
};

enum class Location { Inside, Outside };

// Simple polygon, counter-clockwise, no three vertices collinear. Only
// validate_polygon constructs one.
class Polygon {
 public:
  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& vertex(int i) const { return vertices_[static_cast<std::size_t>(wrap(i))]; }
  int wrap(int i) const {
    int n = size();
    return ((i % n) + n) % n;
  }

  // orientation(A_i, A_j, A_k) from the table built at validation.
  int orient(int i, int j, int k) const {
    int n = size();
    return orient_[(static_cast<std::size_t>(wrap(i)) * n + wrap(j)) * n + wrap(k)];
  }
  bool is_reflex(int i) const { return orient(i - 1, i, i + 1) < 0; }
  // Twice the signed area (positive).
  const QSqrt3& area2() const { return area2_; }

  friend bool operator==(const Polygon& a, const Polygon& b) { return a.vertices_ == b.vertices_; }

 private:
  friend Polygon validate_polygon(const std::vector<Point>& vertices);
  std::vector<Point> vertices_;
  std::vector<std::int8_t> orient_;
  QSqrt3 area2_;
};

int orientation(const Point& p, const Point& q, const Point& r);
// CCW angle at A from ray A->X to ray A->Y exceeds pi.
bool angle_exceeds_pi(const Point& A, const Point& X, const Point& Y);
bool segments_properly_cross(const Segment& s1, const Segment& s2);
Location point_in_polygon(const Point& pt, const Polygon& P);

Polygon validate_polygon(const std::vector<Point>& vertices);
bool is_convex(const Polygon& P);
std::vector<int> reflex_vertices(const Polygon& P);

// Indices of hull vertices in CCW order, starting at the lexicographically
// smallest point.
std::vector<int> convex_hull_indices(const std::vector<Point>& points);
Polygon convex_hull(const std::vector<Point>& points);

// Vertices A_idx[0], A_idx[1], ... of P as a polygon (validated).
Polygon sub_polygon(const Polygon& P, const std::vector<int>& idx);

}  // namespace chord_euler
