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

#include <string>

#include "ilm/graph.hpp"

namespace ilm {

struct AnalyzeOptions {
  bool metrics = false;
  bool params = false;
  bool spectral = false;
  bool structure = false;
  /// Analyse every generation prefix ILM_0..ILM_t of a graph with lineage,
  /// not only the final graph.
  bool per_generation = true;
};

struct Analysis {
  std::string json;           // pretty-printed, sorted keys, trailing newline
  bool inconclusive = false;  // some section hit a size cap or search budget
};

/// Runs the requested analyses (all of them when none is selected).  A
/// section that exceeds its cap is replaced by {"error": ...} and marks the
/// result inconclusive instead of throwing.
Analysis analyze(const Graph& g, const AnalyzeOptions& opt = {});

}  // namespace ilm
