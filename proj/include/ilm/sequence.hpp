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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace ilm {

/// Binary step sequence: a finite prefix optionally followed by a tail that
/// repeats forever.  Bit 1 selects a transitive step, bit 0 an
/// anti-transitive one.
///
/// Textual grammar:
///   BITS ::= [01]+
///   SPEC ::= BITS | BITS? "(" BITS ")*"
/// so "1(10)*" is 1,1,0,1,0,...
class SequenceSpec {
 public:
  SequenceSpec() = default;
  SequenceSpec(std::string prefix, std::string tail);

  const std::string& prefix() const { return prefix_; }
  const std::string& tail() const { return tail_; }
  bool infinite() const { return !tail_.empty(); }

  /// True when bit(i) is defined.
  bool has_bit(std::size_t i) const { return infinite() || i < prefix_.size(); }
  /// s_i; throws UsageError past the end of a finite sequence.
  int bit(std::size_t i) const;

  /// Index of the k-th zero (k = 1 for the first), if it exists.
  std::optional<std::size_t> zero_index(std::size_t k) const;
  /// Largest index <= t holding a zero.
  std::optional<std::size_t> last_zero_at_or_before(std::size_t t) const;
  /// Smallest index >= i holding a zero.
  std::optional<std::size_t> first_zero_at_or_after(std::size_t i) const;
  std::size_t zeros_before(std::size_t t) const;

  /// 1 + the longest run of 1's strictly between two zeros of the
  /// eventually-periodic sequence.  Empty when the sequence has no tail or its
  /// tail has no zero (gaps are then unbounded or undefined).
  std::optional<std::size_t> gap_bound() const;

  /// Canonical text form accepted by parse_sequence.
  std::string to_string() const;

  friend bool operator==(const SequenceSpec&, const SequenceSpec&) = default;

 private:
  std::string prefix_;
  std::string tail_;
};

SequenceSpec parse_sequence(std::string_view text);

}  // namespace ilm
