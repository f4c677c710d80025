#include <doctest.h>

#include <set>

#include "dqlab/graph.hpp"
#include "support/oracles.hpp"

using namespace dqlab;
using namespace testsupport;

TEST_SUITE_BEGIN("graph");

TEST_CASE("random unit dual quaternions are unit and reproducible") {
  Rng rng(71);
  for (int it = 0; it < 100; ++it) {
    const DualNumber n = dq_abs(random_unit_dq(rng));
    CHECK(std::abs(n.st - 1.0) < 1e-12);
    CHECK(std::abs(n.du) < 1e-12);
  }

  Rng a(5), b(5);
  for (int it = 0; it < 10; ++it) {
    const DualQuaternion qa = random_unit_dq(a);
    const DualQuaternion qb = random_unit_dq(b);
    CHECK(qa.st.w == qb.st.w);
    CHECK(qa.du.z == qb.du.z);
  }

  // standard parts average out over the sphere
  Rng mc(123);
  Quaternion mean{};
  const int draws = 10000;
  for (int it = 0; it < draws; ++it) mean = mean + random_unit_dq(mc).st;
  mean = (1.0 / draws) * mean;
  CHECK(quat_abs(mean) < 0.05);
}

TEST_CASE("random graphs hit the requested edge count") {
  Rng rng(72);
  const FormationGraph g = random_graph(10, 0.2, rng);
  CHECK(g.edges.size() == 10);
  CHECK(g.q.size() == 10);
  CHECK(graph_sparsity(g) == doctest::Approx(0.2));

  std::set<std::pair<int, int>> uniq(g.edges.begin(), g.edges.end());
  CHECK(uniq.size() == g.edges.size());
  for (const auto& [i, j] : g.edges) {
    CHECK(i < j);
    CHECK(j < 10);
    CHECK(i >= 0);
  }

  CHECK_THROWS_AS(random_graph(2, 1.0, rng), Error);

  Rng r1(9), r2(9);
  const FormationGraph g1 = random_graph(12, 0.3, r1);
  const FormationGraph g2 = random_graph(12, 0.3, r2);
  CHECK(g1.edges == g2.edges);
  CHECK(g1.q[3].st.x == g2.q[3].st.x);
}

TEST_CASE("laplacian structure") {
  // path on two vertices with frames (1, q2)
  Rng rng(73);
  FormationGraph g;
  g.n = 2;
  g.edges = {{0, 1}};
  g.q = {DualQuaternion::identity(), random_unit_dq(rng)};
  const DQMatrix L = laplacian(g);
  CHECK(L.at(0, 0).st.w == 1.0);
  CHECK(L.at(1, 1).st.w == 1.0);
  CHECK(dist_dq(L.at(0, 1), -g.q[1]) < 1e-15);  // 1^* q2 = q2
  CHECK(dist_dq(L.at(1, 0), -dq_conj(g.q[1])) < 1e-15);

  // complete K3 with trivial frames reduces to the classical matrix
  FormationGraph k3;
  k3.n = 3;
  k3.edges = {{0, 1}, {0, 2}, {1, 2}};
  k3.q = {DualQuaternion::identity(), DualQuaternion::identity(), DualQuaternion::identity()};
  const DQMatrix L3 = laplacian(k3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double expect = (i == j) ? 2.0 : -1.0;
      CHECK(L3.at(i, j).st.w == expect);
      CHECK(quat_abs(L3.at(i, j).du) == 0.0);
    }
  }

  for (int it = 0; it < 10; ++it) {
    const FormationGraph rg = random_graph(8, 0.4, rng);
    CHECK(is_hermitian(laplacian(rg)));
  }
}

TEST_CASE("laplacian is unitarily similar to the classical one") {
  Rng rng(74);
  for (int it = 0; it < 10; ++it) {
    const FormationGraph g = random_graph(7, 0.35, rng);
    const DQMatrix L = laplacian(g);
    const std::vector<double> C = classical_laplacian(g);

    // P^* (D - A) P with P = diag(q_i)
    DQMatrix P(g.n, g.n);
    for (int i = 0; i < g.n; ++i) P.at(i, i) = g.q[i];
    DQMatrix DC(g.n, g.n);
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j)
        DC.at(i, j) = DualQuaternion{Quaternion{C[i * g.n + j], 0, 0, 0}};
    const DQMatrix sim = dq_matmul(dq_conj_transpose(P), dq_matmul(DC, P));
    CHECK(mat_dist(sim, L) < 1e-11);

    // transported all-ones vector lies in the kernel
    DQVector ones(g.n);
    for (int i = 0; i < g.n; ++i) ones[i] = dq_conj(g.q[i]);
    CHECK(vec_norm_twoR(dq_matvec(L, ones)) < 1e-11 * mat_norm_FR(L));
  }
}

TEST_SUITE_END();
