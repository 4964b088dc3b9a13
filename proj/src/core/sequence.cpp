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

#include "ilm/sequence.hpp"

#include <algorithm>

#include "ilm/error.hpp"

namespace ilm {

namespace {

bool is_bits(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

}  // namespace

SequenceSpec::SequenceSpec(std::string prefix, std::string tail) : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  if (!is_bits(prefix_) || !is_bits(tail_)) throw UsageError("sequence bits must be '0' or '1'");
}

int SequenceSpec::bit(std::size_t i) const {
  if (i < prefix_.size()) return prefix_[i] - '0';
  if (tail_.empty())
    throw UsageError("sequence '" + to_string() + "' has no bit at index " + std::to_string(i));
  return tail_[(i - prefix_.size()) % tail_.size()] - '0';
}

std::optional<std::size_t> SequenceSpec::zero_index(std::size_t k) const {
  if (k == 0) return std::nullopt;
  const std::size_t horizon = prefix_.size() + k * tail_.size();
  std::size_t seen = 0;
  for (std::size_t i = 0; i < horizon; ++i)
    if (bit(i) == 0 && ++seen == k) return i;
  return std::nullopt;
}

std::optional<std::size_t> SequenceSpec::last_zero_at_or_before(std::size_t t) const {
  for (std::size_t i = t + 1; i-- > 0;)
    if (has_bit(i) && bit(i) == 0) return i;
  return std::nullopt;
}

std::optional<std::size_t> SequenceSpec::first_zero_at_or_after(std::size_t i) const {
  const std::size_t horizon = std::max(i, prefix_.size()) + tail_.size() + 1;
  for (std::size_t j = i; j < horizon && has_bit(j); ++j)
    if (bit(j) == 0) return j;
  return std::nullopt;
}

std::size_t SequenceSpec::zeros_before(std::size_t t) const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < t && has_bit(i); ++i) c += bit(i) == 0 ? 1 : 0;
  return c;
}

std::optional<std::size_t> SequenceSpec::gap_bound() const {
  if (tail_.find('0') == std::string::npos) return std::nullopt;
  const std::string unrolled = prefix_ + tail_ + tail_ + tail_;
  std::size_t longest = 0;
  std::optional<std::size_t> prev;
  for (std::size_t i = 0; i < unrolled.size(); ++i) {
    if (unrolled[i] != '0') continue;
    if (prev) longest = std::max(longest, i - *prev - 1);
    prev = i;
  }
  return longest + 1;
}

std::string SequenceSpec::to_string() const {
  if (tail_.empty()) return prefix_;
  return prefix_ + "(" + tail_ + ")*";
}

SequenceSpec parse_sequence(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos) {
    if (text.empty() || !is_bits(text)) throw ParseError("sequence '" + std::string(text) + "' is not a bit string");
    return SequenceSpec(std::string(text), "");
  }
  const std::string_view prefix = text.substr(0, open);
  const auto close = text.find(')', open);
  if (close == std::string_view::npos || text.substr(close) != ")*")
    throw ParseError("sequence '" + std::string(text) + "' must end with a '(BITS)*' group");
  const std::string_view tail = text.substr(open + 1, close - open - 1);
  if (tail.empty()) throw ParseError("sequence '" + std::string(text) + "' has an empty repeating group");
  if (!is_bits(prefix) || !is_bits(tail)) throw ParseError("sequence '" + std::string(text) + "' has invalid characters");
  return SequenceSpec(std::string(prefix), std::string(tail));
}

}  // namespace ilm
