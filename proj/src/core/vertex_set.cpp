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

#include "ilm/vertex_set.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "ilm/error.hpp"

namespace ilm {

namespace bits {

void or_shifted(std::span<const Word> src, std::size_t nbits, std::span<Word> dst, std::size_t offset) {
  if (nbits == 0) return;
  const std::size_t src_words = words_for(nbits);
  const std::size_t word_off = offset / kWordBits;
  const std::size_t bit_off = offset % kWordBits;
  for (std::size_t i = 0; i < src_words; ++i) {
    Word w = src[i];
    if (i + 1 == src_words && nbits % kWordBits != 0) w &= (Word{1} << (nbits % kWordBits)) - 1;
    if (w == 0) continue;
    dst[word_off + i] |= w << bit_off;
    if (bit_off != 0 && word_off + i + 1 < dst.size()) dst[word_off + i + 1] |= w >> (kWordBits - bit_off);
  }
}

void mask_tail(std::span<Word> w, std::size_t nbits) {
  if (w.empty()) return;
  const std::size_t used = nbits % kWordBits;
  if (used != 0) w[w.size() - 1] &= (Word{1} << used) - 1;
  for (std::size_t i = words_for(nbits); i < w.size(); ++i) w[i] = 0;
}

}  // namespace bits

VertexSet::VertexSet(std::size_t universe, std::span<const Word> words)
    : universe_(universe), words_(bits::words_for(universe), 0) {
  std::copy_n(words.begin(), std::min(words.size(), words_.size()), words_.begin());
  bits::mask_tail(words_, universe_);
  recount();
}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<VertexId> members) : VertexSet(universe) {
  for (VertexId v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  bits::mask_tail(s.words_, universe);
  s.count_ = universe;
  return s;
}

VertexSet VertexSet::range(std::size_t universe, VertexId begin, VertexId end) {
  VertexSet s(universe);
  for (VertexId v = begin; v < end && v < universe; ++v) s.insert(v);
  return s;
}

void VertexSet::insert(VertexId v) {
  if (v >= universe_) throw UsageError("vertex " + std::to_string(v) + " outside set universe");
  if (!bits::test(words_, v)) {
    bits::set(words_, v);
    ++count_;
  }
}

void VertexSet::erase(VertexId v) {
  if (v < universe_ && bits::test(words_, v)) {
    bits::reset(words_, v);
    --count_;
  }
}

void VertexSet::check_universe(const VertexSet& o) const {
  if (o.universe_ != universe_) throw UsageError("vertex sets over different universes");
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  check_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  recount();
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  check_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  recount();
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  check_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  recount();
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet s(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
  bits::mask_tail(s.words_, universe_);
  s.count_ = universe_ - count_;
  return s;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  check_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~o.words_[i]) != 0) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
  check_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & o.words_[i]) != 0) return true;
  return false;
}

VertexId VertexSet::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0) return static_cast<VertexId>(i * kWordBits + std::countr_zero(words_[i]));
  return npos;
}

VertexId VertexSet::next(VertexId v) const {
  std::size_t pos = std::size_t{v} + 1;
  if (pos >= universe_) return npos;
  std::size_t i = pos / kWordBits;
  Word w = words_[i] & (~Word{0} << (pos % kWordBits));
  while (true) {
    if (w != 0) return static_cast<VertexId>(i * kWordBits + std::countr_zero(w));
    if (++i >= words_.size()) return npos;
    w = words_[i];
  }
}

std::vector<VertexId> VertexSet::to_vector() const {
  std::vector<VertexId> out;
  out.reserve(count_);
  for_each([&](VertexId v) { out.push_back(v); });
  return out;
}

}  // namespace ilm
