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

#include <cmath>
#include <sstream>

#include "ilm/engine.hpp"
#include "ilm/metrics.hpp"

namespace ilm {

DensitySeries density_series(const Graph& g0, const SequenceSpec& s, std::size_t t_max) {
  DensitySeries out;
  const auto sizes = size_series(g0.order(), g0.size(), s, t_max);
  for (std::size_t t = 0; t < sizes.size(); ++t) {
    DensityRow r;
    r.t = t;
    r.n = sizes[t].n;
    r.e = sizes[t].e;
    r.average = r.n ? double(r.e) / double(r.n) : 0.0;
    r.density = r.n >= 2 ? double(r.e) / (double(r.n) * double(r.n - 1) / 2) : 0.0;
    r.beta = s.last_zero_at_or_before(t);
    if (r.beta)
      r.envelope = std::ldexp(std::pow(1.5, double(t - *r.beta)), static_cast<int>(*r.beta)) * double(r.n);
    out.rows.push_back(r);
  }
  return out;
}

std::string DensitySeries::to_csv() const {
  std::ostringstream os;
  os << "t,n,e,e_over_n,density,beta,envelope\n";
  for (const auto& r : rows) {
    os << r.t << ',' << r.n << ',' << r.e << ',' << format_double(r.average) << ',' << format_double(r.density) << ',';
    if (r.beta) os << *r.beta;
    os << ',';
    if (r.envelope) os << format_double(*r.envelope);
    os << '\n';
  }
  return os.str();
}

}  // namespace ilm
