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

#include "ilm/engine.hpp"
#include "ilm/error.hpp"
#include "ilm/named.hpp"
#include "ilm/structure.hpp"

namespace ilm {

ZetaExperiment zeta_star_experiment(std::size_t n, std::size_t t_max, const HamiltonOptions& opt) {
  if (n < 3) throw UsageError("star experiment needs n >= 3");
  ZetaExperiment out;
  out.n = n;
  const Graph star = complete_bipartite(1, n - 1);
  const Graph full = generate(star, SequenceSpec("", "1"), t_max).graph;
  bool seen_hamiltonian = false;
  for (std::size_t t = 0; t <= t_max; ++t) {
    const Graph g = full.induced_prefix(n << t);
    ZetaRow row;
    row.t = t;
    row.order = g.order();
    if ((std::size_t{1} << t) < n - 1) {
      VertexSet a(g.order());
      for (VertexId v = 0; v < g.order(); ++v)
        if (is_descendant(g, v, 0)) a.insert(v);
      CutCertificate c{CertificateKind::Cut, a.to_vector(), components(g, g.vertices() - a).count};
      if (verify_cut(g, c)) row.center_cut = std::move(c);
    }
    const HamiltonResult h = hamiltonian(g, opt);
    row.status = h.status;
    row.method = h.method;
    if (h.status == HamiltonStatus::Hamiltonian) {
      if (!out.first_hamiltonian) out.first_hamiltonian = t;
      seen_hamiltonian = true;
    } else if (seen_hamiltonian && h.status == HamiltonStatus::NonHamiltonian) {
      out.monotone = false;
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace ilm
