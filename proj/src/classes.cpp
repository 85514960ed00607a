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

#include "chord_euler/classes.hpp"

#include <algorithm>
#include <sstream>

#include "chord_euler/chords.hpp"
#include "chord_euler/error.hpp"
#include "chord_euler/partition.hpp"

namespace chord_euler {

namespace {

void check_vertex(const Polygon& P, int i) {
  if (i < 0 || i >= P.size()) throw Error(ErrorKind::InvalidArgument, "vertex index out of range");
}

void require_five(const Polygon& P, int i) {
  check_vertex(P, i);
  if (P.size() < 5) throw Error(ErrorKind::Precondition, "class detectors need n >= 5");
}

// CCW angle at A_a from A_x to A_y exceeds pi.
bool wide(const Polygon& P, int a, int x, int y) { return P.orient(a, x, y) < 0; }

// Class 1 angle profile at the apex of the cyclic vertex list M (M[0] is the
// apex, reflex).
bool class1_apex(const Polygon& P, const std::vector<int>& M) {
  const std::size_t m = M.size();
  const int a = M[0];
  bool x = wide(P, a, M[2], M[m - 1]);
  bool y = wide(P, a, M[1], M[m - 2]);
  bool z = m == 4 ? false : wide(P, a, M[2], M[m - 2]);
  return x == y && !z;
}

}  // namespace

const char* to_string(PolygonClass c) {
  switch (c) {
    case PolygonClass::Convex: return "Convex";
    case PolygonClass::Class1: return "Class1";
    case PolygonClass::Class2: return "Class2";
    case PolygonClass::Class3: return "Class3";
    case PolygonClass::Class4: return "Class4";
    case PolygonClass::Class5: return "Class5";
    case PolygonClass::Class6: return "Class6";
  }
  return "?";
}

bool ClassReport::has(PolygonClass c) const {
  return std::find(memberships.begin(), memberships.end(), c) != memberships.end();
}

std::string ClassReport::to_string() const {
  std::ostringstream os;
  os << "vertex " << vertex << ":";
  if (memberships.empty()) os << " none";
  for (std::size_t k = 0; k < memberships.size(); ++k) os << (k ? ", " : " ") << chord_euler::to_string(memberships[k]);
  return os.str();
}

bool star_all_diagonals(const Polygon& P, int i) {
  check_vertex(P, i);
  const int n = P.size();
  for (int r = 2; r <= n - 2; ++r) {
    if (classify_chord(P, make_chord(i, P.wrap(i + r), n)) != ChordKind::Diagonal) return false;
  }
  return true;
}

bool is_class1(const Polygon& P, int i) {
  require_five(P, i);
  if (reflex_vertices(P) != std::vector<int>{i}) return false;
  return class1_apex(P, {i, P.wrap(i + 1), P.wrap(i + 2), P.wrap(i - 2), P.wrap(i - 1)});
}

bool is_class2(const Polygon& P, int i, bool allow_quad) {
  check_vertex(P, i);
  const int n = P.size();
  if (n < 4 || (n == 4 && !allow_quad)) throw Error(ErrorKind::Precondition, "class 2 needs n >= 5");
  for (int r = 0; r < n; ++r) {
    bool edge_or_apex = r == 0 || r == 1 || r == n - 1;
    if (P.is_reflex(P.wrap(i + r)) == edge_or_apex) return false;
  }
  return true;
}

bool is_class3(const Polygon& P, int i, std::vector<Class3Pocket>* witness) {
  require_five(P, i);
  if (is_convex(P) || P.is_reflex(i)) return false;
  std::vector<int> hull = convex_hull_indices(P.vertices());
  std::vector<Class3Pocket> found;
  for (std::size_t k = 0; k < hull.size(); ++k) {
    const int a = hull[k], b = hull[(k + 1) % hull.size()];
    if (P.wrap(a + 1) == b) continue;
    if (a != i && b != i) return false;
    std::vector<int> path;
    for (int v = a;; v = P.wrap(v + 1)) {
      path.push_back(v);
      if (v == b) break;
    }
    Polygon Q = sub_polygon(P, path);
    Class3Pocket pk{a == i ? b : a, path, Q.size() == 3};
    if (a != i) std::reverse(pk.path.begin(), pk.path.end());
    if (!pk.triangle) {
      int apex = static_cast<int>(std::find(Q.vertices().begin(), Q.vertices().end(), P.vertex(i)) - Q.vertices().begin());
      if (!is_class2(Q, apex, true) || !star_all_diagonals(Q, apex)) return false;
    }
    found.push_back(std::move(pk));
  }
  if (witness) *witness = std::move(found);
  return true;
}

bool is_class4(const Polygon& P, int i) {
  require_five(P, i);
  if (is_convex(P)) return false;
  const int n = P.size();
  if (classify_chord(P, make_chord(P.wrap(i - 1), P.wrap(i + 1), n)) != ChordKind::Diagonal) return false;
  std::vector<int> far;
  for (int r = 1; r <= n - 1; ++r) far.push_back(P.wrap(i + r));
  return part_is_convex(P, far);
}

bool is_class5(const Polygon& P, int i) {
  require_five(P, i);
  if (reflex_vertices(P) != std::vector<int>{i}) return false;
  std::vector<Point> rest;
  for (int r = 1; r < P.size(); ++r) rest.push_back(P.vertex(i + r));
  try {
    return is_convex(validate_polygon(rest));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SelfIntersection) return false;
    throw;
  }
}

bool is_class6(const Polygon& P, int i, Class6Split* witness) {
  require_five(P, i);
  const int n = P.size();
  if (!P.is_reflex(i) || !star_all_diagonals(P, i)) return false;
  auto rel = [&](int v) { return P.wrap(v - i); };
  std::vector<int> rays{P.wrap(i + 1)};
  for (int r = 2; r <= n - 2; ++r)
    if (P.is_reflex(P.wrap(i + r))) rays.push_back(P.wrap(i + r));
  if (rays.size() == 1) return false;
  rays.push_back(P.wrap(i - 1));
  int t = -1;
  for (std::size_t s = 0; s + 1 < rays.size(); ++s) {
    if (!wide(P, i, rays[s], rays[s + 1])) continue;
    if (t >= 0) return false;
    t = static_cast<int>(s);
  }
  if (t < 0) return false;
  const int p = rays[static_cast<std::size_t>(t)], q = rays[static_cast<std::size_t>(t) + 1];
  for (int r = 2; r <= rel(p); ++r)
    if (!P.is_reflex(P.wrap(i + r))) return false;
  for (int r = rel(q); r <= n - 2; ++r)
    if (!P.is_reflex(P.wrap(i + r))) return false;
  std::vector<int> middle{i};
  for (int r = rel(p); r <= rel(q); ++r) middle.push_back(P.wrap(i + r));
  const std::size_t m = middle.size();
  if (m < 4) return false;
  for (std::size_t k = 1; k < m; ++k) {
    if (P.orient(middle[k - 1], middle[k], middle[(k + 1) % m]) < 0) return false;
  }
  if (!class1_apex(P, middle)) return false;
  if (witness) {
    Class6Split w{t, {i}, middle, {i}, rel(p) == 1 || rel(q) == n - 1};
    for (int r = 1; r <= rel(p); ++r) w.before.push_back(P.wrap(i + r));
    for (int r = rel(q); r <= n - 1; ++r) w.after.push_back(P.wrap(i + r));
    *witness = std::move(w);
  }
  return true;
}

ClassReport classify(const Polygon& P, int i) {
  check_vertex(P, i);
  ClassReport r;
  r.vertex = i;
  r.reflex = reflex_vertices(P);
  if (r.reflex.empty()) r.memberships.push_back(PolygonClass::Convex);
  if (P.size() < 5) return r;
  if (is_class1(P, i)) r.memberships.push_back(PolygonClass::Class1);
  if (is_class2(P, i)) r.memberships.push_back(PolygonClass::Class2);
  if (is_class3(P, i, &r.pockets)) r.memberships.push_back(PolygonClass::Class3);
  if (is_class4(P, i)) r.memberships.push_back(PolygonClass::Class4);
  if (is_class5(P, i)) r.memberships.push_back(PolygonClass::Class5);
  Class6Split split;
  if (is_class6(P, i, &split)) {
    r.memberships.push_back(PolygonClass::Class6);
    r.split = std::move(split);
  }
  return r;
}

Theorem1Report verify_theorem1(const Polygon& P) {
  auto u = ChordUniverse::build(P);
  Theorem1Report r;
  r.convex = is_convex(P);
  r.d_sum = f_vector(diagonals(u)).alternating_sum();
  r.e_sum = f_vector(epigonals(u)).alternating_sum();
  if (r.convex) {
    r.d_expected = P.size() % 2 ? 0 : 2;
    r.e_expected = 0;
  } else {
    r.d_expected = 1;
    r.e_expected = 1;
  }
  r.pass = r.d_sum == r.d_expected && r.e_sum == r.e_expected;
  return r;
}

const char* theorem3_clause(int k) {
  static const char* names[] = {"A", "B", "C", "D"};
  return (k >= 0 && k < 4) ? names[k] : "?";
}

Theorem3Report verify_theorem3(const Polygon& P, int i) {
  require_five(P, i);
  auto u = ChordUniverse::build(P);
  ChordSet star = forbidden_star(u, i), ear = ear_chord(u, i);
  Theorem3Report r;
  r.vertex = i;
  r.chi = {chi_removed_direct(star, Side::D), chi_removed_direct(star, Side::E), chi_removed_direct(ear, Side::D),
           chi_removed_direct(ear, Side::E)};
  const bool convex = is_convex(P);
  r.class_side[0] = star_all_diagonals(P, i) && (is_class1(P, i) || is_class2(P, i) || is_class6(P, i));
  r.class_side[1] = convex || is_class3(P, i);
  r.class_side[2] = is_class4(P, i);
  r.class_side[3] = convex || is_class2(P, i) || is_class5(P, i);
  r.pass = true;
  for (std::size_t k = 0; k < 4; ++k) {
    r.holds[k] = (r.chi[k] != 0) == r.class_side[k];
    r.pass = r.pass && r.holds[k];
  }
  return r;
}

}  // namespace chord_euler
