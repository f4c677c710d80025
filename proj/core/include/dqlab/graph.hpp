#pragma once

#include <utility>
#include <vector>

#include "dqlab/linalg.hpp"
#include "dqlab/rng.hpp"

namespace dqlab {

// Undirected formation graph with one unit dual quaternion per vertex.
struct FormationGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted, no self-loops
  std::vector<DualQuaternion> q;
};

// Standard part uniform on the unit sphere; dual part (1/2) t q_st with a
// pure-quaternion t of standard normal components, so the result is unit by
// construction.
DualQuaternion random_unit_dq(Rng& rng);

// round(s n^2 / 2) edges sampled uniformly without replacement.
FormationGraph random_graph(int n, double s, Rng& rng);

double graph_sparsity(const FormationGraph& g);

// L = D - A with a_ij = q_i^* q_j on edges; Hermitian by construction.
DQMatrix laplacian(const FormationGraph& g);

// Classical real Laplacian D - A of the same graph (row-major n x n).
std::vector<double> classical_laplacian(const FormationGraph& g);

}  // namespace dqlab
