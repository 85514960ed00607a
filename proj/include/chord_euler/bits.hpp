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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace chord_euler {

// Fixed-width bit vector; width is set at construction and all binary
// operations require equal widths.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int width) : width_(width), w_(static_cast<std::size_t>((width + 63) / 64), 0) {}

  static Bits full(int width) {
    Bits b(width);
    for (int k = 0; k < width; ++k) b.set(k);
    return b;
  }

  int width() const { return width_; }
  int words() const { return static_cast<int>(w_.size()); }
  std::uint64_t word(int k) const { return w_[static_cast<std::size_t>(k)]; }
  std::uint64_t& word(int k) { return w_[static_cast<std::size_t>(k)]; }

  bool test(int k) const { return (w_[static_cast<std::size_t>(k >> 6)] >> (k & 63)) & 1u; }
  void set(int k) { w_[static_cast<std::size_t>(k >> 6)] |= std::uint64_t{1} << (k & 63); }
  void reset(int k) { w_[static_cast<std::size_t>(k >> 6)] &= ~(std::uint64_t{1} << (k & 63)); }

  // Clears bits 0..k inclusive.
  void clear_through(int k) {
    std::size_t last = static_cast<std::size_t>(k >> 6);
    for (std::size_t w = 0; w < last && w < w_.size(); ++w) w_[w] = 0;
    if (last < w_.size()) {
      int b = k & 63;
      w_[last] &= b == 63 ? 0 : (~std::uint64_t{0} << (b + 1));
    }
  }

  bool none() const {
    for (auto x : w_)
      if (x) return false;
    return true;
  }
  bool any() const { return !none(); }
  int count() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }
  // Lowest set bit, or -1.
  int first() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return static_cast<int>(k * 64) + std::countr_zero(w_[k]);
    return -1;
  }
  // Lowest set bit strictly above `after`, or -1.
  int next(int after) const {
    int k = after + 1;
    if (k >= width_) return -1;
    std::size_t wi = static_cast<std::size_t>(k >> 6);
    std::uint64_t cur = w_[wi] & (~std::uint64_t{0} << (k & 63));
    while (true) {
      if (cur) return static_cast<int>(wi * 64) + std::countr_zero(cur);
      if (++wi >= w_.size()) return -1;
      cur = w_[wi];
    }
  }
  std::vector<int> indices() const {
    std::vector<int> out;
    for (int k = first(); k >= 0; k = next(k)) out.push_back(k);
    return out;
  }

  bool intersects(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }
  int count_and(const Bits& o) const {
    int c = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) c += std::popcount(w_[k] & o.w_[k]);
    return c;
  }

  Bits& operator|=(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  Bits& subtract(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
  }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator-(Bits a, const Bits& b) { return a.subtract(b); }

  friend bool operator==(const Bits& a, const Bits& b) { return a.width_ == b.width_ && a.w_ == b.w_; }
  friend bool operator!=(const Bits& a, const Bits& b) { return !(a == b); }
  friend bool operator<(const Bits& a, const Bits& b) { return a.w_ < b.w_; }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto x : w_) h = (h ^ x) * 0x100000001b3ull;
    return h;
  }

 private:
  int width_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace chord_euler
