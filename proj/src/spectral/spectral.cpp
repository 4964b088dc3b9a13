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

#include "ilm/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "ilm/error.hpp"
#include "ilm/metrics.hpp"

namespace ilm {
namespace {

Eigen::MatrixXd laplacian_matrix(const Graph& g) {
  const std::size_t n = g.order();
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  std::vector<double> inv_sqrt(n, 0.0);
  for (VertexId v = 0; v < n; ++v)
    if (g.degree(v) > 0) inv_sqrt[v] = 1.0 / std::sqrt(double(g.degree(v)));
  for (VertexId u = 0; u < n; ++u) {
    if (g.degree(u) > 0) l(u, u) = 1.0;
    g.neighborhood(u).for_each([&](VertexId v) { l(u, v) = -inv_sqrt[u] * inv_sqrt[v]; });
  }
  return l;
}

}  // namespace

DenseMatrix normalized_laplacian(const Graph& g) {
  const Eigen::MatrixXd l = laplacian_matrix(g);
  DenseMatrix m;
  m.n = g.order();
  m.data.resize(m.n * m.n);
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j)
      m.data[i * m.n + j] = l(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  return m;
}

Spectrum spectrum(const Graph& g, const SpectrumOptions& opt) {
  const std::size_t n = g.order();
  if (n > opt.cap) throw CapacityError("graph order " + std::to_string(n) + " exceeds the eigensolve cap " +
                                       std::to_string(opt.cap));
  Spectrum s;
  for (VertexId v = 0; v < n; ++v) s.isolated_count += g.degree(v) == 0;
  if (n == 0) {
    s.degenerate = true;
    return s;
  }
  const Eigen::MatrixXd l = laplacian_matrix(g);
  const bool vectors = n <= opt.residual_cap;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(l, vectors ? Eigen::ComputeEigenvectors
                                                                   : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("eigensolver failed to converge");
  const Eigen::VectorXd& ev = solver.eigenvalues();
  s.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
  if (vectors) {
    const Eigen::MatrixXd r = l * solver.eigenvectors() - solver.eigenvectors() * ev.asDiagonal();
    s.residual = r.cwiseAbs().maxCoeff();
  }
  if (n == 1) {
    s.degenerate = true;
    s.gap = 1;
  } else {
    s.gap = std::max(std::abs(s.eigenvalues[1] - 1), std::abs(s.eigenvalues[n - 1] - 1));
  }
  return s;
}

std::vector<std::string> spectrum_violations(const Spectrum& s, double tol) {
  std::vector<std::string> out;
  const std::size_t n = s.eigenvalues.size();
  double sum = 0;
  for (double x : s.eigenvalues) {
    sum += x;
    if (x < -tol || x > 2 + tol) out.push_back("eigenvalue " + format_double(x) + " outside [0, 2]");
  }
  if (n > 0 && s.eigenvalues[0] > tol) out.push_back("smallest eigenvalue is not zero");
  const double trace = double(n) - double(s.isolated_count);
  if (std::abs(sum - trace) > tol * std::max(1.0, double(n)))
    out.push_back("eigenvalue sum " + format_double(sum) + " differs from trace " + format_double(trace));
  if (s.gap < -tol || s.gap > 1 + tol) out.push_back("gap outside [0, 1]");
  if (s.residual && *s.residual > tol) out.push_back("residual " + format_double(*s.residual) + " too large");
  return out;
}

MixingAudit mixing_audit(const Graph& g, const VertexSet& x, double gap, double tol) {
  if (x.universe() != g.order()) throw UsageError("vertex set universe does not match the graph");
  const double vol_x = double(volume(g, x));
  const double vol_g = double(volume(g));
  const double vol_rest = vol_g - vol_x;
  if (vol_x <= 0 || vol_rest <= 0) throw UsageError("mixing audit needs vol(X) > 0 and vol(V \\ X) > 0");
  const double exx = double(edges_between(g, x, x));
  MixingAudit a;
  a.lhs = std::abs(exx - vol_x * vol_x / vol_g);
  a.rhs = gap * vol_x * vol_rest / vol_g;
  a.holds = a.lhs <= a.rhs + tol;
  return a;
}

MixingAudit mixing_audit(const Graph& g, const VertexSet& x) { return mixing_audit(g, x, spectrum(g).gap); }

double step_gap_lower_bound(std::uint64_t n, std::uint64_t e, int bit) {
  if (n == 0) throw UsageError("step bound needs at least one vertex");
  const double dn = double(n), de = double(e);
  if (bit != 0) return (2 * de + dn) / (4 * de + dn);
  const double den = dn * dn - dn;
  if (den == 0) return 0;
  return (dn * dn - 2 * de - dn) / den;
}

std::string gap_csv(const std::vector<GapPoint>& points) {
  std::ostringstream os;
  os << "t,n,gap,step_lower_bound\n";
  for (const auto& p : points)
    os << p.t << ',' << p.n << ',' << format_double(p.gap) << ','
       << (p.step_lower_bound ? format_double(*p.step_lower_bound) : "") << '\n';
  return os.str();
}

}  // namespace ilm
