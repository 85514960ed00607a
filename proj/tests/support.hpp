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

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "chord_euler/chords.hpp"
#include "chord_euler/error.hpp"
#include "chord_euler/geometry.hpp"

namespace test_support {

using namespace chord_euler;

inline Point pt(long x, long y) { return Point{QSqrt3(x), QSqrt3(y)}; }

inline std::vector<Point> pts(const std::vector<std::pair<long, long>>& xy) {
  std::vector<Point> out;
  for (auto [x, y] : xy) out.push_back(pt(x, y));
  return out;
}

inline Polygon poly(const std::vector<std::pair<long, long>>& xy) { return validate_polygon(pts(xy)); }

inline Polygon dart() { return poly({{0, 0}, {4, 0}, {1, 1}, {0, 4}}); }
inline Polygon square() { return poly({{0, 0}, {2, 0}, {2, 2}, {0, 2}}); }

// Integer points on a circle-like convex curve: (k, k^2) parabola arc closed
// by a far point keeps every n convex and in general position.
inline Polygon convex_parabola(int n) {
  std::vector<std::pair<long, long>> xy;
  for (int k = 0; k < n - 1; ++k) xy.emplace_back(k, static_cast<long>(k) * k);
  xy.emplace_back(-1, 100000);
  return poly(xy);
}

inline bool general_position(const std::vector<Point>& v) {
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b) {
      if (v[a] == v[b]) return false;
      for (std::size_t c = b + 1; c < v.size(); ++c)
        if (orientation(v[a], v[b], v[c]) == 0) return false;
    }
  return true;
}

// Random star-shaped polygon around the origin; retries until valid.
inline Polygon random_star(std::mt19937_64& rng, int n, long span = 100) {
  while (true) {
    std::vector<std::pair<long, long>> xy;
    for (int k = 0; k < n; ++k) {
      xy.emplace_back(static_cast<long>(rng() % static_cast<unsigned long>(2 * span)) - span,
                      static_cast<long>(rng() % static_cast<unsigned long>(2 * span)) - span);
    }
    std::sort(xy.begin(), xy.end(), [](auto a, auto b) {
      return std::atan2(static_cast<double>(a.second), static_cast<double>(a.first)) <
             std::atan2(static_cast<double>(b.second), static_cast<double>(b.first));
    });
    try {
      return poly(xy);
    } catch (const Error&) {
    }
  }
}

inline UniversePtr U(const Polygon& P) { return ChordUniverse::build(P); }

}  // namespace test_support
