#include "dqlab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dqlab/error.hpp"

namespace dqlab {

DualQuaternion random_unit_dq(Rng& rng) {
  Quaternion st;
  double n2 = 0.0;
  do {
    st = Quaternion{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
    n2 = quat_norm2(st);
  } while (n2 < 1e-280);
  st = (1.0 / std::sqrt(n2)) * st;
  const Quaternion t{0.0, rng.normal(), rng.normal(), rng.normal()};
  return DualQuaternion{st, 0.5 * (t * st)};
}

FormationGraph random_graph(int n, double s, Rng& rng) {
  if (n < 1) fail(Errc::invalid_argument, "random_graph: n >= 1 required");
  const long all_pairs = static_cast<long>(n) * (n - 1) / 2;
  const long m = std::lround(s * static_cast<double>(n) * n / 2.0);
  if (s <= 0.0 || s > static_cast<double>(n - 1) / n || m > all_pairs) {
    fail(Errc::infeasible_sparsity, "random_graph: sparsity demands more edges than exist");
  }

  // Partial Fisher-Yates over pair indices; selection order is seed-stable.
  std::vector<long> idx(all_pairs);
  std::iota(idx.begin(), idx.end(), 0L);
  FormationGraph g;
  g.n = n;
  g.edges.reserve(m);
  for (long k = 0; k < m; ++k) {
    const long j = k + static_cast<long>(rng.uniform_below(all_pairs - k));
    std::swap(idx[k], idx[j]);
    // Unrank pair index into (i, j), i < j, row-major over the strict upper
    // triangle.
    long r = idx[k];
    int i = 0;
    long row_len = n - 1;
    while (r >= row_len) {
      r -= row_len;
      --row_len;
      ++i;
    }
    g.edges.push_back({i, i + 1 + static_cast<int>(r)});
  }
  std::sort(g.edges.begin(), g.edges.end());

  g.q.reserve(n);
  for (int i = 0; i < n; ++i) g.q.push_back(random_unit_dq(rng));
  return g;
}

double graph_sparsity(const FormationGraph& g) {
  return 2.0 * static_cast<double>(g.edges.size()) / (static_cast<double>(g.n) * g.n);
}

DQMatrix laplacian(const FormationGraph& g) {
  const std::size_t n = g.n;
  DQMatrix L(n, n);
  std::vector<int> degree(n, 0);
  for (const auto& [i, j] : g.edges) {
    ++degree[i];
    ++degree[j];
    const DualQuaternion aij = dq_conj(g.q[i]) * g.q[j];
    L.at(i, j) = -aij;
    L.at(j, i) = -dq_conj(aij);
  }
  for (std::size_t i = 0; i < n; ++i) {
    L.at(i, i) = DualQuaternion{Quaternion{static_cast<double>(degree[i]), 0, 0, 0}};
  }
  return L;
}

std::vector<double> classical_laplacian(const FormationGraph& g) {
  const std::size_t n = g.n;
  std::vector<double> L(n * n, 0.0);
  for (const auto& [i, j] : g.edges) {
    L[i * n + j] -= 1.0;
    L[j * n + i] -= 1.0;
    L[i * n + i] += 1.0;
    L[j * n + j] += 1.0;
  }
  return L;
}

}  // namespace dqlab
