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

#include "chord_euler/chords.hpp"

#include <charconv>

#include "chord_euler/error.hpp"

namespace chord_euler {

Chord make_chord(int a, int b, int n) {
  if (a < 0 || b < 0 || a >= n || b >= n) {
    throw Error(ErrorKind::InvalidArgument, "chord endpoint out of range");
  }
  if (a > b) std::swap(a, b);
  if (a == b || b - a == 1 || b - a == n - 1) {
    throw Error(ErrorKind::InvalidArgument,
                "(" + std::to_string(a) + "," + std::to_string(b) + ") is not a chord");
  }
  return Chord{a, b};
}

std::string to_string(const Chord& c) { return std::to_string(c.i) + "-" + std::to_string(c.j); }

Chord parse_chord(std::string_view text, int n) {
  auto dash = text.find('-');
  if (dash == std::string_view::npos || dash == 0) {
    throw Error(ErrorKind::Parse, "malformed chord '" + std::string(text) + "'");
  }
  int a = 0, b = 0;
  auto r1 = std::from_chars(text.data(), text.data() + dash, a);
  auto r2 = std::from_chars(text.data() + dash + 1, text.data() + text.size(), b);
  if (r1.ec != std::errc() || r1.ptr != text.data() + dash || r2.ec != std::errc() ||
      r2.ptr != text.data() + text.size()) {
    throw Error(ErrorKind::Parse, "malformed chord '" + std::string(text) + "'");
  }
  return make_chord(a, b, n);
}

const char* to_string(ChordKind k) {
  switch (k) {
    case ChordKind::Diagonal: return "diagonal";
    case ChordKind::Epigonal: return "epigonal";
    case ChordKind::BoundaryCrossing: return "boundary-crossing";
  }
  return "?";
}

namespace {

bool chord_crosses_edge(const Polygon& P, int a, int b, int e) {
  int c = e, d = P.wrap(e + 1);
  if (c == a || c == b || d == a || d == b) return false;
  return P.orient(a, b, c) != P.orient(a, b, d) && P.orient(c, d, a) != P.orient(c, d, b);
}

}  // namespace

ChordKind classify_chord(const Polygon& P, const Chord& c) {
  make_chord(c.i, c.j, P.size());
  for (int e = 0; e < P.size(); ++e) {
    if (chord_crosses_edge(P, c.i, c.j, e)) return ChordKind::BoundaryCrossing;
  }
  Point m = midpoint(P.vertex(c.i), P.vertex(c.j));
  return point_in_polygon(m, P) == Location::Inside ? ChordKind::Diagonal : ChordKind::Epigonal;
}

std::shared_ptr<const ChordUniverse> ChordUniverse::build(const Polygon& P) {
  auto u = std::make_shared<ChordUniverse>();
  u->polygon_ = P;
  const int n = P.size();
  u->index_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      u->index_[static_cast<std::size_t>(i * n + j)] = static_cast<int>(u->chords_.size());
      u->index_[static_cast<std::size_t>(j * n + i)] = static_cast<int>(u->chords_.size());
      u->chords_.push_back(Chord{i, j});
    }
  }
  const int m = static_cast<int>(u->chords_.size());
  u->kinds_.reserve(static_cast<std::size_t>(m));
  for (const Chord& c : u->chords_) u->kinds_.push_back(classify_chord(P, c));
  u->cross_.assign(static_cast<std::size_t>(m), Bits(m));
  for (int x = 0; x < m; ++x) {
    const Chord& c = u->chords_[static_cast<std::size_t>(x)];
    for (int y = x + 1; y < m; ++y) {
      const Chord& d = u->chords_[static_cast<std::size_t>(y)];
      if (c.i == d.i || c.i == d.j || c.j == d.i || c.j == d.j) continue;
      if (P.orient(c.i, c.j, d.i) != P.orient(c.i, c.j, d.j) &&
          P.orient(d.i, d.j, c.i) != P.orient(d.i, d.j, c.j)) {
        u->cross_[static_cast<std::size_t>(x)].set(y);
        u->cross_[static_cast<std::size_t>(y)].set(x);
      }
    }
  }
  return u;
}

int ChordUniverse::index_of(int i, int j) const {
  const int nn = n();
  if (i < 0 || j < 0 || i >= nn || j >= nn) return -1;
  return index_[static_cast<std::size_t>(i * nn + j)];
}

ChordSet ChordSet::of(const UniversePtr& u, const std::vector<Chord>& chords) {
  ChordSet s(u);
  for (const Chord& c : chords) s.insert(c);
  return s;
}

bool ChordSet::contains(const Chord& c) const {
  int k = u_->index_of(c.i, c.j);
  return k >= 0 && bits_.test(k);
}

void ChordSet::insert(const Chord& c) {
  int k = u_->index_of(c.i, c.j);
  if (k < 0) {
    throw Error(ErrorKind::InvalidArgument, "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ") is not a chord");
  }
  bits_.set(k);
}

void ChordSet::erase(const Chord& c) {
  int k = u_->index_of(c.i, c.j);
  if (k >= 0) bits_.reset(k);
}

std::vector<Chord> ChordSet::chords() const {
  std::vector<Chord> out;
  for (int k : bits_.indices()) out.push_back(u_->chord(k));
  return out;
}

bool ChordSet::pairwise_noncrossing() const {
  for (int k : bits_.indices()) {
    if (u_->crossing(k).intersects(bits_)) return false;
  }
  return true;
}

void ChordSet::require_same(const ChordSet& o) const {
  if (u_ != o.u_) throw Error(ErrorKind::InvalidArgument, "chord sets over different universes");
}

ChordSet ChordSet::operator|(const ChordSet& o) const {
  require_same(o);
  return ChordSet(u_, bits_ | o.bits_);
}
ChordSet ChordSet::operator&(const ChordSet& o) const {
  require_same(o);
  return ChordSet(u_, bits_ & o.bits_);
}
ChordSet ChordSet::operator-(const ChordSet& o) const {
  require_same(o);
  return ChordSet(u_, bits_ - o.bits_);
}
bool ChordSet::subset_of(const ChordSet& o) const {
  require_same(o);
  return bits_.subset_of(o.bits_);
}

std::string ChordSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const Chord& c : chords()) {
    if (!first) out += ", ";
    out += chord_euler::to_string(c);
    first = false;
  }
  return out + "}";
}

namespace {

ChordSet of_kind(const UniversePtr& u, ChordKind kind) {
  Bits b(u->size());
  for (int k = 0; k < u->size(); ++k)
    if (u->kind(k) == kind) b.set(k);
  return ChordSet(u, std::move(b));
}

}  // namespace

ChordSet all_chords(const UniversePtr& u) { return ChordSet(u, Bits::full(u->size())); }
ChordSet diagonals(const UniversePtr& u) { return of_kind(u, ChordKind::Diagonal); }
ChordSet epigonals(const UniversePtr& u) { return of_kind(u, ChordKind::Epigonal); }
ChordSet boundary_crossing(const UniversePtr& u) { return of_kind(u, ChordKind::BoundaryCrossing); }

ChordSet a_diagonals(const UniversePtr& u, int a) {
  const int n = u->n();
  if (a < 1) throw Error(ErrorKind::InvalidArgument, "a must be positive");
  if (n < a + 2 || (n - 2) % a != 0) {
    throw Error(ErrorKind::Precondition,
                "polygon size " + std::to_string(n) + " is not of the form a(n+1)+2 for a=" + std::to_string(a));
  }
  Bits b(u->size());
  for (int k = 0; k < u->size(); ++k) {
    const Chord& c = u->chord(k);
    if (u->kind(k) == ChordKind::Diagonal && (c.j - c.i - 1) % a == 0) b.set(k);
  }
  return ChordSet(u, std::move(b));
}

ChordSet forbidden_star(const UniversePtr& u, int i) {
  const int n = u->n();
  if (i < 0 || i >= n) throw Error(ErrorKind::InvalidArgument, "vertex index out of range");
  if (n < 5) throw Error(ErrorKind::Precondition, "forbidden star needs n >= 5");
  ChordSet s(u);
  for (int j = 0; j < n; ++j) {
    int k = u->index_of(i, j);
    if (k >= 0) s.insert(u->chord(k));
  }
  return s;
}

ChordSet ear_chord(const UniversePtr& u, int i) {
  const int n = u->n();
  if (i < 0 || i >= n) throw Error(ErrorKind::InvalidArgument, "vertex index out of range");
  if (n < 4) throw Error(ErrorKind::Precondition, "ear chord needs n >= 4");
  return ChordSet::of(u, {make_chord((i + n - 1) % n, (i + 1) % n, n)});
}

}  // namespace chord_euler
