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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ilm/graph.hpp"

namespace ilm {

/// Dense row-major symmetric matrix.
struct DenseMatrix {
  std::size_t n = 0;
  std::vector<double> data;

  double at(std::size_t i, std::size_t j) const { return data[i * n + j]; }
};

/// L = I - D^{-1/2} A D^{-1/2}; rows and columns of isolated vertices are zero.
DenseMatrix normalized_laplacian(const Graph& g);

inline constexpr std::size_t kDefaultSpectrumCap = 4096;
inline constexpr std::size_t kDefaultResidualCap = 1024;

struct SpectrumOptions {
  std::size_t cap = kDefaultSpectrumCap;
  /// Eigenvectors (and hence the residual) are computed up to this order.
  std::size_t residual_cap = kDefaultResidualCap;
};

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  double gap = 1;                   // max(|l_1 - 1|, |l_{n-1} - 1|); 1 when n <= 1
  bool degenerate = false;          // n <= 1
  std::size_t isolated_count = 0;
  std::optional<double> residual;   // max |L q - l q| over computed pairs
};

/// Full symmetric eigensolve.  CapacityError above opt.cap.
Spectrum spectrum(const Graph& g, const SpectrumOptions& opt = {});

/// Empty when the spectrum meets the range, trace, gap and residual
/// invariants; otherwise one message per violation.
std::vector<std::string> spectrum_violations(const Spectrum& s, double tol = 1e-8);

struct MixingAudit {
  double lhs = 0;  // |e(X,X) - vol(X)^2 / vol(G)|
  double rhs = 0;  // gap * vol(X) vol(V\X) / vol(G)
  bool holds = false;
};

inline constexpr double kMixingTolerance = 1e-6;

/// Mixing inequality for X using the given gap.  UsageError when X or its
/// complement has zero volume.
MixingAudit mixing_audit(const Graph& g, const VertexSet& x, double gap, double tol = kMixingTolerance);
MixingAudit mixing_audit(const Graph& g, const VertexSet& x);

/// vol(X) / vol(V \ X) for X = the clones created by one step from a graph
/// with n vertices and e edges; a lower bound on the gap after that step.
double step_gap_lower_bound(std::uint64_t n, std::uint64_t e, int bit);

struct GapPoint {
  std::size_t t = 0;
  std::size_t n = 0;
  double gap = 0;
  std::optional<double> step_lower_bound;
};

/// "t,n,gap,step_lower_bound"
std::string gap_csv(const std::vector<GapPoint>& points);

}  // namespace ilm
