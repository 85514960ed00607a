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

#include "chord_euler/generators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "chord_euler/classes.hpp"
#include "chord_euler/error.hpp"
#include "chord_euler/partition.hpp"

namespace chord_euler {

namespace {

constexpr int kExemplarAttempts = 12;

// Canonical p/q; mpq_class(p, q) alone does not reduce.
Rat frac(long p, long q) {
  Rat r(p, q);
  r.canonicalize();
  return r;
}

Point P2(const Rat& x, const Rat& y) { return Point{QSqrt3(x), QSqrt3(y)}; }
Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point scale(const QSqrt3& s, const Point& a) { return {s * a.x, s * a.y}; }

// Validates without accepting a reversal, so indices keep their meaning.
Polygon ccw_polygon(const std::vector<Point>& v) {
  Polygon P = validate_polygon(v);
  if (P.vertices() != v) throw Error(ErrorKind::Generator, "generated vertex list is clockwise");
  return P;
}

std::vector<Point> rotate_to(const std::vector<Point>& v, int i) {
  const std::size_t n = v.size();
  std::vector<Point> out(n);
  for (std::size_t k = 0; k < n; ++k) out[(k + static_cast<std::size_t>(i)) % n] = v[k];
  return out;
}

// Points j = 1..m of the quadratic Bezier from a to b with control c.
std::vector<Point> bezier(const Point& a, const Point& c, const Point& b, int m) {
  std::vector<Point> out;
  for (int j = 1; j <= m; ++j) {
    Rat s = frac(j, m + 1);
    Rat u = 1 - s;
    out.push_back(scale(Rat(u * u), a) + scale(Rat(2 * s * u), c) + scale(Rat(s * s), b));
  }
  return out;
}

// Control point pulled from the midpoint of ab toward `toward` by kappa.
Point pulled(const Point& a, const Point& b, const Point& toward, const Rat& kappa) {
  Point m = midpoint(a, b);
  return m + scale(kappa, toward - m);
}

// Points strictly below the segment (-w, y0)..(w, y0) on a downward parabola.
std::vector<Point> bottom_arc(const Rat& w, const Rat& y0, const Rat& depth, int m) {
  std::vector<Point> out;
  for (int j = 1; j <= m; ++j) {
    Rat x = -w + 2 * w * frac(j, m + 1);
    Rat r = x / w;
    out.push_back(P2(x, y0 - depth * (1 - r * r)));
  }
  return out;
}

std::vector<Point> build_class1(int n, int variant, int attempt) {
  if (n < 5) throw Error(ErrorKind::InvalidArgument, "class 1 exemplar needs n >= 5");
  const Rat depth = 20 + attempt;
  std::vector<Point> v;
  if (variant == 0) {
    v = {P2(1, 33), P2(-10, 40), P2(-30, 0)};
    for (const Point& p : bottom_arc(30, 0, depth, n - 5)) v.push_back(p);
    v.push_back(P2(30, 0));
    v.push_back(P2(10, 40));
  } else {
    v = {P2(1, 8), P2(-10, 20), P2(-40, 0)};
    for (const Point& p : bottom_arc(40, 0, depth, n - 5)) v.push_back(p);
    v.push_back(P2(40, 0));
    v.push_back(P2(10, 20));
  }
  return v;
}

std::vector<Point> build_class2(int m, int attempt) {
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "class 2 exemplar needs at least 2 reflex vertices");
  // Chain y = -c - ((3 - c)/4) x^2 meets the base corners (+-2, -3).
  const Rat c = Rat(3, 2) + frac(attempt, 10 + attempt);
  std::vector<Point> v{P2(0, 0), P2(-2, -3)};
  for (int j = 1; j <= m; ++j) {
    Rat x = -2 + frac(4 * j, m + 1);
    v.push_back(P2(x, -c - (3 - c) / 4 * x * x));
  }
  v.push_back(P2(2, -3));
  return v;
}

std::vector<Point> build_class3(int k, int variant, int attempt) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "class 3 pocket chain length must be >= 0");
  const Rat kappa(1, 2 + attempt);
  const Point A = P2(0, 0), L = P2(-6, -2), R = P2(6, -2);
  const Point c1 = P2(-1, -4), c2 = P2(Rat(3, 2), Rat(-9, 2));
  std::vector<Point> v{A, c1};
  for (const Point& p : bezier(c1, pulled(c1, L, A, kappa), L, k)) v.push_back(p);
  v.push_back(L);
  v.push_back(P2(-4, -9));
  v.push_back(P2(5, -8));
  v.push_back(R);
  if (variant == 0) {
    std::vector<Point> right = bezier(c2, pulled(c2, R, A, kappa), R, k);
    v.insert(v.end(), right.rbegin(), right.rend());
    v.push_back(c2);
  }
  return v;
}

std::vector<Point> build_class4(int s, int attempt) {
  if (s < 4) throw Error(ErrorKind::InvalidArgument, "class 4 exemplar needs a convex part of >= 4 vertices");
  std::vector<Point> C = convex_ngon(s).vertices();
  // Past C_0 on the line C_1C_0, nudged outward so C_0 turns reflex.
  Point A = scale(2, C[0]) - C[1] + scale(Rat(1, 4 + attempt), C[0] - C[2]);
  std::vector<Point> v{A};
  v.insert(v.end(), C.begin(), C.end());
  return v;
}

std::vector<Point> build_class5(int n, int attempt) {
  if (n < 5) throw Error(ErrorKind::InvalidArgument, "class 5 exemplar needs n >= 5");
  std::vector<Point> C = convex_ngon(n).vertices();
  const Rat lambda(1 + attempt, 2 + attempt);
  std::vector<Point> v{scale(lambda, midpoint(C[static_cast<std::size_t>(n - 1)], C[1]))};
  v.insert(v.end(), C.begin() + 1, C.end());
  return v;
}

std::vector<Point> build_class6(int k, int variant, int attempt) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "class 6 chain length must be >= 0");
  if (variant < 0 || variant > 2) throw Error(ErrorKind::InvalidArgument, "class 6 variant must be 0, 1 or 2");
  const Rat kappa(1, 4 + attempt);
  const Point A = P2(0, 0), p = P2(-10, 7), q = P2(11, 7);
  const Point pp = P2(-4, 30), qq = P2(5, 30);
  std::vector<Point> v{A};
  if (variant != 1) {
    v.push_back(pp);
    for (const Point& g : bezier(pp, pulled(pp, p, A, kappa), p, k)) v.push_back(g);
  }
  v.push_back(p);
  v.push_back(P2(-40, -10));
  v.push_back(P2(-15, -10 - 30 * (1 - frac(15 * 15, 40 * 40))));
  v.push_back(P2(20, -10 - 30 * (1 - frac(20 * 20, 40 * 40))));
  v.push_back(P2(40, -10));
  v.push_back(q);
  if (variant != 0) {
    for (const Point& h : bezier(q, pulled(q, qq, A, kappa), qq, k)) v.push_back(h);
    v.push_back(qq);
  }
  return v;
}

bool class_holds(int K, const Polygon& P, int i) {
  switch (K) {
    case 1: return is_class1(P, i) && star_all_diagonals(P, i);
    case 2: return is_class2(P, i) && star_all_diagonals(P, i);
    case 3: return is_class3(P, i);
    case 4: return is_class4(P, i);
    case 5: return is_class5(P, i);
    case 6: return is_class6(P, i);
  }
  return false;
}

std::vector<bool> collinear_members(const std::vector<Point>& v) {
  const std::size_t n = v.size();
  std::vector<bool> hit(n, false);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (v[a] == v[b]) hit[a] = hit[b] = true;
      for (std::size_t c = b + 1; c < n; ++c)
        if (orientation(v[a], v[b], v[c]) == 0) hit[a] = hit[b] = hit[c] = true;
    }
  return hit;
}

int sign_pow(long e) { return e % 2 == 0 ? 1 : -1; }

// B_1..B_{count}; index 0 unused.
std::vector<Point> zigzag_b(long count) {
  const QSqrt3 half_sqrt3(Rat(0), Rat(1, 2));
  std::vector<Point> B(static_cast<std::size_t>(count + 1));
  B[1] = P2(0, 0);
  for (long k = 2; k <= count; ++k) {
    const Point& prev = B[static_cast<std::size_t>(k - 1)];
    B[static_cast<std::size_t>(k)] = k % 2 == 0 ? prev + P2(1, 0) : prev + Point{half_sqrt3, QSqrt3(Rat(1, 2))};
  }
  return B;
}

// omega_k * z with omega_k = (1 + (-1)^k sqrt3 i)/2.
Point omega_times(long k, const Point& z) {
  const QSqrt3 half(Rat(1, 2));
  const QSqrt3 im(Rat(0), Rat(sign_pow(k), 2));
  return {half * z.x - im * z.y, im * z.x + half * z.y};
}

struct ZigzagPoints {
  std::vector<Point> B;
  Point b(long k) const { return B.at(static_cast<std::size_t>(k)); }
  Point c(long k) const { return b(k) + omega_times(k, b(k + 1) - b(k)); }
  Point d(long k) const { return b(k) + omega_times(k, b(k + 2) - b(k)); }

  Point a0(long m) const {
    switch (((m % 3) + 3) % 3) {
      case 2: return b(2 * ((m + 1) / 3));
      case 0: return c(2 * (m / 3) + 1);
      default: return d(2 * ((m - 1) / 3) + 1);
    }
  }
  Point a1(long m) const {
    switch (m % 3) {
      case 0: return c(2 * (m / 3 + 1));
      case 1: return d(2 * ((m + 2) / 3));
      default: return b(2 * ((m + 1) / 3) + 1);
    }
  }
};

bool zigzag_labels_ok(const Polygon& P, const std::vector<Chord>& labels) {
  for (const Chord& c : labels)
    if (classify_chord(P, c) != ChordKind::Diagonal) return false;
  auto u = ChordUniverse::build(P);
  return ChordSet::of(u, labels).pairwise_noncrossing();
}

bool characterization(std::uint32_t mask, long L) {
  auto has = [&](long k) { return (mask >> (k - 1) & 1u) != 0; };
  for (long k = 1; k <= 3 * L - 4; ++k)
    if (!has(k) && !has(k + 1)) return false;
  for (long k = 1; k <= L - 1; ++k)
    if (!has(3 * k - 2) && !has(3 * k)) return false;
  return true;
}

}  // namespace

Polygon convex_ngon(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "convex_ngon needs n >= 3");
  const double pi = std::acos(-1.0);
  for (long den = 1000; den <= 1000000000L; den *= 10) {
    std::vector<Rat> t;
    for (int k = 0; k < n; ++k) {
      double theta = -pi + pi / n + 2 * pi * k / n;
      t.push_back(frac(static_cast<long>(std::llround(std::tan(theta / 2) * static_cast<double>(den))), den));
    }
    if (std::adjacent_find(t.begin(), t.end(), [](const Rat& a, const Rat& b) { return a >= b; }) != t.end()) continue;
    std::vector<Point> v;
    for (const Rat& s : t) {
      Rat w = 1 + s * s;
      v.push_back(P2((1 - s * s) / w, 2 * s / w));
    }
    return ccw_polygon(v);
  }
  throw Error(ErrorKind::Generator, "convex_ngon: could not separate tangent values");
}

Polygon class_exemplar(int K, int i, const ClassParams& params) {
  if (K < 1 || K > 6) throw Error(ErrorKind::InvalidArgument, "class index must be in 1..6");
  for (int attempt = 0; attempt < kExemplarAttempts; ++attempt) {
    std::vector<Point> v;
    switch (K) {
      case 1:
        if (params.variant != 0 && params.variant != 1) throw Error(ErrorKind::InvalidArgument, "class 1 variant must be 0 or 1");
        v = build_class1(params.size, params.variant, attempt);
        break;
      case 2: v = build_class2(params.size, attempt); break;
      case 3:
        if (params.variant != 0 && params.variant != 1) throw Error(ErrorKind::InvalidArgument, "class 3 variant must be 0 or 1");
        v = build_class3(params.size, params.variant, attempt);
        break;
      case 4: v = build_class4(params.size, attempt); break;
      case 5: v = build_class5(params.size, attempt); break;
      case 6: v = build_class6(params.size, params.variant, attempt); break;
    }
    const int n = static_cast<int>(v.size());
    if (i < 0 || i >= n) throw Error(ErrorKind::InvalidArgument, "vertex index out of range for the exemplar size");
    try {
      Polygon P = ccw_polygon(rotate_to(v, i));
      if (class_holds(K, P, i)) return P;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::InvalidArgument) throw;
    }
  }
  throw Error(ErrorKind::Generator, "class " + std::to_string(K) + " exemplar: no valid parameters found");
}

std::vector<ClassParams> class_exemplar_sizes(int K) {
  switch (K) {
    case 1: return {{5, 0}, {7, 1}, {9, 0}};
    case 2: return {{2, 0}, {3, 0}, {5, 0}};
    case 3: return {{0, 0}, {1, 1}, {3, 0}};
    case 4: return {{4, 0}, {5, 0}, {7, 0}};
    case 5: return {{5, 0}, {6, 0}, {8, 0}};
    case 6: return {{0, 0}, {1, 2}, {3, 1}};
  }
  throw Error(ErrorKind::InvalidArgument, "class index must be in 1..6");
}

Polygon perturb_to_general_position(const std::vector<Point>& vertices, const Rat& budget, const StructureCheck& check,
                                    Rat* used) {
  if (sgn(budget) <= 0 || budget > Rat(1, 100)) throw Error(ErrorKind::InvalidArgument, "perturbation budget must be in (0, 1/100]");
  std::vector<bool> hit = collinear_members(vertices);
  const bool any = std::find(hit.begin(), hit.end(), true) != hit.end();
  const Rat floor = budget / 1024;
  for (Rat eps = any ? budget : Rat(0);; eps /= 2) {
    if (any && eps < floor) break;
    std::vector<Point> v = vertices;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!hit[k]) continue;
      Rat kk(static_cast<long>(k));
      v[k] = v[k] + P2(eps / (kk + 1), eps / ((kk + 2) * (kk + 2)));
    }
    try {
      Polygon P = ccw_polygon(v);
      if (!check || check(P)) {
        if (used) *used = eps;
        return P;
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::InvalidArgument) throw;
    }
    if (!any) break;
  }
  throw Error(ErrorKind::Generator, "perturbation failed within budget/2^10");
}

std::vector<Point> zigzag_raw_vertices(long L, bool primed) {
  if (L < 2) throw Error(ErrorKind::InvalidArgument, "zigzag needs |l| >= 2");
  ZigzagPoints z{zigzag_b(2 * L + 8)};
  std::vector<Point> A;  // A[m-1] = A^2_m
  A.push_back(z.b(1));
  for (long m = 2; m <= 3 * L; ++m) A.push_back(m <= (3 * L + 1) / 2 ? z.a0(m) : z.a1(3 * L - m));
  if (!primed) return A;
  std::vector<Point> out{midpoint(A[0], A[1])};
  out.insert(out.end(), A.begin() + 1, A.end());
  out.push_back(midpoint(A[0], A.back()));
  return out;
}

std::vector<Chord> zigzag_labels(long L) {
  if (L < 2) throw Error(ErrorKind::InvalidArgument, "zigzag needs |l| >= 2");
  std::vector<std::pair<long, long>> e(static_cast<std::size_t>(3 * (L - 1)));
  auto set = [&](long k, long a, long b) { e.at(static_cast<std::size_t>(k - 1)) = {a, b}; };
  for (long k = 0; 2 * k <= L - 2; ++k) {
    set(6 * k + 1, 3 * k + 2, 3 * L - 3 * k);
    set(6 * k + 2, 3 * L - 3 * k - 2, 3 * L - 3 * k);
    set(6 * k + 3, 3 * k + 2, 3 * L - 3 * k - 2);
  }
  for (long k = 1; 2 * k < L; ++k) {
    set(6 * k - 2, 3 * k, 3 * L - 3 * k + 1);
    set(6 * k - 1, 3 * k + 2, 3 * k);
    set(6 * k, 3 * k + 2, 3 * L - 3 * k + 1);
  }
  // Vertex A_a sits at index a-1 in both P and P'.
  const int n = static_cast<int>(3 * L + 1);
  std::vector<Chord> out;
  for (auto [a, b] : e) out.push_back(make_chord(static_cast<int>(a - 1), static_cast<int>(b - 1), n));
  return out;
}

ZigzagInstance zigzag_instance(long L, bool primed, const Rat& budget) {
  ZigzagInstance z;
  z.labels = zigzag_labels(L);
  z.primed = primed;
  z.l = primed ? sign_pow(L) * L : sign_pow(L + 1) * L;
  const auto& labels = z.labels;
  z.polygon = perturb_to_general_position(zigzag_raw_vertices(L, primed), budget,
                                          [&labels](const Polygon& P) { return zigzag_labels_ok(P, labels); }, &z.epsilon);
  z.J = ChordSet::of(ChordUniverse::build(z.polygon), z.labels);
  return z;
}

ZigzagInstance zigzag_chi_target(long l, const Rat& budget) {
  const long L = std::labs(l);
  if (L < 2) throw Error(ErrorKind::InvalidArgument, "zigzag target needs |l| >= 2");
  return zigzag_instance(L, sign_pow(L + 1) * L != l, budget);
}

ZigzagReport verify_zigzag_structure(const ZigzagInstance& z) {
  const long L = std::labs(z.l);
  const long top = 3 * (L - 1);
  ZigzagReport r;
  r.a.assign(static_cast<std::size_t>(top + 1), 0);
  r.a[0] = 1;
  if (top >= 1) r.a[1] = 0;
  for (long k = 2; k <= top; ++k) {
    auto at = [&](long j) -> const BigInt& { return r.a[static_cast<std::size_t>(j)]; };
    r.a[static_cast<std::size_t>(k)] = k % 3 ? at(k - 1) - at(k - 2) : at(k - 1) - at(k - 3);
  }
  for (long k = 0; 3 * k <= top; ++k) {
    if (r.a[static_cast<std::size_t>(3 * k)] != sign_pow(k) * (k + 1)) r.closed_forms_ok = false;
    if (3 * k + 1 <= top && r.a[static_cast<std::size_t>(3 * k + 1)] != sign_pow(k) * k) r.closed_forms_ok = false;
    if (3 * k + 2 <= top && r.a[static_cast<std::size_t>(3 * k + 2)] != -sign_pow(k)) r.closed_forms_ok = false;
  }
  const int n = z.polygon.size();
  const int nJ = z.J.size();
  const BigInt& last = r.a.back();
  r.chi_literal = sign_pow(n + 1) * last;
  r.chi_corrected = sign_pow(n + 1 + nJ) * last;

  if (L <= kZigzagCharacterizationCap) {
    r.characterization_checked = true;
    ConvexLattice lat = convex_lattice(z.J);
    // Bit k-1 of a label mask is e_k.
    std::vector<int> pos;
    for (const Chord& c : z.labels)
      pos.push_back(static_cast<int>(std::find(lat.elements.begin(), lat.elements.end(), c) - lat.elements.begin()));
    std::set<std::uint32_t> convex(lat.members_c.begin(), lat.members_c.end());
    std::vector<BigInt> geo(static_cast<std::size_t>(top + 1), 0);
    for (std::uint32_t mask = 0; mask < (1u << top); ++mask) {
      std::uint32_t em = 0;
      for (long k = 0; k < top; ++k)
        if (mask >> k & 1u) em |= 1u << pos[static_cast<std::size_t>(k)];
      const bool c = convex.count(em) != 0;
      if (c != characterization(mask, L)) r.characterization_ok = false;
      if (!c) continue;
      // J_k = {e_{k+1}, ..., e_top} is contained in I.
      for (long k = 0; k <= top; ++k) {
        std::uint32_t jk = k >= top ? 0u : (((1u << top) - 1) & ~((1u << k) - 1));
        if ((mask & jk) == jk) geo[static_cast<std::size_t>(k)] += sign_pow(std::popcount(mask));
      }
    }
    r.geometric_sum = geo.back();
    for (long k = 0; k <= top; ++k)
      if (geo[static_cast<std::size_t>(k)] != sign_pow(nJ) * r.a[static_cast<std::size_t>(k)]) r.recurrence_ok = false;
  }
  r.pass = r.closed_forms_ok && r.characterization_ok && r.recurrence_ok && r.chi_corrected == z.l;
  return r;
}

Polygon random_simple_polygon(int n, std::uint64_t seed, RandomShape shape, long span) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "random polygon needs n >= 3");
  if (span < 2 * n) throw Error(ErrorKind::InvalidArgument, "coordinate span too small for n");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(0, span - 1);
  using IP = std::pair<long, long>;
  auto orient = [](const IP& a, const IP& b, const IP& c) {
    long v = (b.first - a.first) * (c.second - a.second) - (b.second - a.second) * (c.first - a.first);
    return (v > 0) - (v < 0);
  };
  for (int tries = 0; tries < 1000; ++tries) {
    std::vector<IP> p;
    int rejects = 0;
    while (static_cast<int>(p.size()) < n && rejects < 100 * n) {
      IP c{coord(rng), coord(rng)};
      bool ok = true;
      for (std::size_t a = 0; a < p.size() && ok; ++a) {
        if (p[a] == c) ok = false;
        for (std::size_t b = a + 1; b < p.size() && ok; ++b)
          if (orient(p[a], p[b], c) == 0) ok = false;
      }
      if (ok) p.push_back(c); else ++rejects;
    }
    if (static_cast<int>(p.size()) < n) continue;
    if (shape == RandomShape::Star) {
      double cx = 0, cy = 0;
      for (auto [x, y] : p) cx += static_cast<double>(x), cy += static_cast<double>(y);
      cx /= n, cy /= n;
      std::sort(p.begin(), p.end(), [&](const IP& a, const IP& b) {
        return std::atan2(static_cast<double>(a.second) - cy, static_cast<double>(a.first) - cx) <
               std::atan2(static_cast<double>(b.second) - cy, static_cast<double>(b.first) - cx);
      });
    } else {
      // 2-opt: uncross edge pairs until none cross; each flip shortens the tour.
      bool changed = true;
      while (changed) {
        changed = false;
        for (int a = 0; a < n && !changed; ++a)
          for (int b = a + 2; b < n && !changed; ++b) {
            if (a == 0 && b == n - 1) continue;
            const IP &p1 = p[static_cast<std::size_t>(a)], &p2 = p[static_cast<std::size_t>(a + 1)];
            const IP &q1 = p[static_cast<std::size_t>(b)], &q2 = p[static_cast<std::size_t>((b + 1) % n)];
            if (orient(p1, p2, q1) * orient(p1, p2, q2) < 0 && orient(q1, q2, p1) * orient(q1, q2, p2) < 0) {
              std::reverse(p.begin() + a + 1, p.begin() + b + 1);
              changed = true;
            }
          }
      }
    }
    std::vector<Point> v;
    for (auto [x, y] : p) v.push_back(P2(x, y));
    try {
      return validate_polygon(v);
    } catch (const Error&) {
    }
  }
  throw Error(ErrorKind::Generator, "random_simple_polygon: rejection budget exhausted");
}

}  // namespace chord_euler
