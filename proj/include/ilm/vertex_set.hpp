// Copyright 2026 The ILM Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ilm {

using VertexId = std::uint32_t;
using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;

namespace bits {

constexpr std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

inline std::size_t popcount(std::span<const Word> w) {
  std::size_t c = 0;
  for (Word x : w) c += static_cast<std::size_t>(std::popcount(x));
  return c;
}

inline std::size_t popcount_and(std::span<const Word> a, std::span<const Word> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

inline bool test(std::span<const Word> w, std::size_t i) { return (w[i / kWordBits] >> (i % kWordBits)) & 1U; }
inline void set(std::span<Word> w, std::size_t i) { w[i / kWordBits] |= Word{1} << (i % kWordBits); }
inline void reset(std::span<Word> w, std::size_t i) { w[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

/// ORs the low `nbits` bits of `src` into `dst` starting at bit `offset`.
void or_shifted(std::span<const Word> src, std::size_t nbits, std::span<Word> dst, std::size_t offset);

/// Clears any bits at positions >= nbits in the last word.
void mask_tail(std::span<Word> w, std::size_t nbits);

}  // namespace bits

/// Bitset over vertex ids 0..universe-1 with a cached population count.
class VertexSet {
 public:
  static constexpr VertexId npos = static_cast<VertexId>(-1);

  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_(bits::words_for(universe), 0) {}
  VertexSet(std::size_t universe, std::span<const Word> words);
  VertexSet(std::size_t universe, std::initializer_list<VertexId> members);

  static VertexSet full(std::size_t universe);
  static VertexSet range(std::size_t universe, VertexId begin, VertexId end);

  std::size_t universe() const { return universe_; }
  std::size_t count() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool contains(VertexId v) const { return v < universe_ && bits::test(words_, v); }

  void insert(VertexId v);
  void erase(VertexId v);

  std::span<const Word> words() const { return words_; }

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  VertexSet complement() const;

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  bool is_subset_of(const VertexSet& o) const;
  bool intersects(const VertexSet& o) const;

  /// Smallest member, or npos.
  VertexId first() const;
  /// Smallest member strictly greater than v, or npos.
  VertexId next(VertexId v) const;

  std::vector<VertexId> to_vector() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word x = words_[w];
      while (x != 0) {
        const auto b = static_cast<std::size_t>(std::countr_zero(x));
        f(static_cast<VertexId>(w * kWordBits + b));
        x &= x - 1;
      }
    }
  }

 private:
  void recount() { count_ = bits::popcount(words_); }
  void check_universe(const VertexSet& o) const;

  std::size_t universe_ = 0;
  std::size_t count_ = 0;
  std::vector<Word> words_;
};

}  // namespace ilm
