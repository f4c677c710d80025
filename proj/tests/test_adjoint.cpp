#include <doctest.h>

#include "dqlab/adjoint.hpp"
#include "support/oracles.hpp"

using namespace dqlab;
using namespace testsupport;

namespace {

double dc_dist(const DCMatrix& a, const DCMatrix& b) {
  REQUIRE(a.rows == b.rows);
  REQUIRE(a.cols == b.cols);
  double d = 0.0;
  for (std::size_t i = 0; i < a.st.size(); ++i) {
    d += std::norm(a.st[i] - b.st[i]) + std::norm(a.du[i] - b.du[i]);
  }
  return std::sqrt(d);
}

// Dual complex matvec: (P x)_st = P_st x_st, (P x)_du = P_st x_du + P_du x_st.
DCVector dc_matvec(const DCMatrix& P, const DCVector& x) {
  DCVector y(P.rows);
  for (std::size_t i = 0; i < P.rows; ++i) {
    Complex st{}, du{};
    for (std::size_t j = 0; j < P.cols; ++j) {
      st += P.st_at(i, j) * x.st[j];
      du += P.st_at(i, j) * x.du[j] + P.du_at(i, j) * x.st[j];
    }
    y.st[i] = st;
    y.du[i] = du;
  }
  return y;
}

double dc_vec_dist(const DCVector& a, const DCVector& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d += std::norm(a.st[i] - b.st[i]) + std::norm(a.du[i] - b.du[i]);
  }
  return std::sqrt(d);
}

DCMatrix dc_mul(const DCMatrix& A, const DCMatrix& B) {
  DCMatrix C(A.rows, B.cols);
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t k = 0; k < A.cols; ++k) {
      const Complex ast = A.st_at(i, k), adu = A.du_at(i, k);
      for (std::size_t j = 0; j < B.cols; ++j) {
        C.st_at(i, j) += ast * B.st_at(k, j);
        C.du_at(i, j) += ast * B.du_at(k, j) + adu * B.st_at(k, j);
      }
    }
  }
  return C;
}

}  // namespace

TEST_SUITE_BEGIN("adjoint");

TEST_CASE("adjoint of identity and of scalar j") {
  const AdjointMatrix I = adjoint(DQMatrix::identity(3));
  DCMatrix expect(6, 6);
  for (int i = 0; i < 6; ++i) expect.st_at(i, i) = 1.0;
  CHECK(dc_dist(I.payload, expect) < 1e-15);

  DQMatrix J(1, 1);
  J.at(0, 0) = DualQuaternion{Quaternion{0, 0, 1, 0}};
  const AdjointMatrix js = adjoint(J);
  CHECK(js.payload.st_at(0, 0) == Complex{0, 0});
  CHECK(js.payload.st_at(0, 1) == Complex{1, 0});
  CHECK(js.payload.st_at(1, 0) == Complex{-1, 0});
  CHECK(js.payload.st_at(1, 1) == Complex{0, 0});
  CHECK(std::abs(js.payload.du_at(0, 0)) + std::abs(js.payload.du_at(0, 1)) == 0.0);
}

TEST_CASE("adjoint of the worked scalar example") {
  // a = 1 + 2i + 3j + 4k + (4 + 3i + 2j + k) eps
  DQMatrix A(1, 1);
  A.at(0, 0) = DualQuaternion{Quaternion{1, 2, 3, 4}, Quaternion{4, 3, 2, 1}};
  const DCMatrix M = adjoint(A).payload;
  CHECK(M.st_at(0, 0) == Complex{1, 2});
  CHECK(M.st_at(0, 1) == Complex{3, 4});
  CHECK(M.st_at(1, 0) == Complex{-3, 4});
  CHECK(M.st_at(1, 1) == Complex{1, -2});
  CHECK(M.du_at(0, 0) == Complex{4, 3});
  CHECK(M.du_at(0, 1) == Complex{2, 1});
  CHECK(M.du_at(1, 0) == Complex{-2, 1});
  CHECK(M.du_at(1, 1) == Complex{4, -3});
}

TEST_CASE("adjoint inverse round-trips and rejects off-pattern payloads") {
  Rng rng(21);
  const DQMatrix Q = rand_dq_matrix(3, 3, rng);
  const AdjointMatrix M = adjoint(Q);
  CHECK(adjoint_pattern_residual(M.payload) == 0.0);
  CHECK(mat_dist(adjoint_inv(M), Q) == 0.0);

  const DQMatrix one = adjoint_inv(adjoint(DQMatrix::identity(1)));
  CHECK(dist_dq(one.at(0, 0), DualQuaternion::identity()) == 0.0);

  DCMatrix broken = M.payload;
  broken.st_at(4, 0) += Complex{1e-6, 0};
  CHECK_THROWS_AS(adjoint_inv(broken), Error);
}

TEST_CASE("worked example frame maps back through the inverse adjoint") {
  // X and X Z eps as printed for the scalar diagonalization example; the
  // inverse adjoint of that unitary must reproduce the printed standard part
  // and reconstruct the input.
  const Complex x1{0.8281, 0.0};
  const Complex x2{-0.4485, 0.3364};
  DCMatrix P(2, 2);
  P.st = {x1, x2, -std::conj(x2), std::conj(x1)};
  const Complex z12{0.2074, -0.0395};
  const Complex z21{-0.2074, -0.0395};
  // X * Z with Z = [[0, z12], [z21, 0]]
  P.du = {x2 * z21, x1 * z12, std::conj(x1) * z21, -std::conj(x2) * z12};

  const DQMatrix Qm = adjoint_inv(P, 1e-6);
  const DualQuaternion q = Qm.at(0, 0);
  CHECK(q.st.w == doctest::Approx(0.8281).epsilon(1e-3));
  CHECK(q.st.x == doctest::Approx(0.0).epsilon(1e-3));
  CHECK(q.st.y == doctest::Approx(-0.4485).epsilon(1e-3));
  CHECK(q.st.z == doctest::Approx(0.3364).epsilon(1e-3));

  // q lambda q^* reconstructs the example input to print precision
  const DualComplex lambda{{1.0, 5.3852}, {4.0, 2.9711}};
  const DualQuaternion a{Quaternion{1, 2, 3, 4}, Quaternion{4, 3, 2, 1}};
  const DualQuaternion rec = q * embed(lambda) * dq_conj(q);
  CHECK(dq_mag2(rec - a) < 5e-3);
}

TEST_CASE("fmap, gmap and the column split of the adjoint") {
  const DCVector z = fmap(DQVector(3));
  CHECK(dc_norm_2R(z) == 0.0);

  // v = [1 + i j]: a1 = 1, a2 = i, so F(v) = [1; -conj(i)] = [1; i]
  DQVector v1(1);
  v1[0] = DualQuaternion{Quaternion{1, 0, 0, 1}};  // 1 + 0 i + (0 + 1 i) j
  const DCVector f = fmap(v1);
  CHECK(f.st[0] == Complex{1, 0});
  CHECK(f.st[1] == Complex{0, 1});

  Rng rng(22);
  for (int it = 0; it < 10; ++it) {
    const DQVector v = rand_dq_vector(4, rng);
    DQMatrix as_col(4, 1);
    for (std::size_t i = 0; i < 4; ++i) as_col.at(i, 0) = v[i];
    const DCMatrix J = adjoint(as_col).payload;
    const DCVector fv = fmap(v);
    const DCVector gv = gmap(v);
    for (std::size_t i = 0; i < 8; ++i) {
      CHECK(std::abs(J.st_at(i, 0) - fv.st[i]) == 0.0);
      CHECK(std::abs(J.du_at(i, 0) - fv.du[i]) == 0.0);
      CHECK(std::abs(J.st_at(i, 1) - gv.st[i]) == 0.0);
      CHECK(std::abs(J.du_at(i, 1) - gv.du[i]) == 0.0);
    }
    const DQVector back = fmap_inv(fv);
    for (std::size_t i = 0; i < 4; ++i) CHECK(dist_dq(back[i], v[i]) == 0.0);
  }

  DCVector odd(3);
  CHECK_THROWS_AS(fmap_inv(odd), Error);
}

TEST_CASE("norm bridge between F coordinates and the 2R norm") {
  Rng rng(23);
  for (int it = 0; it < 20; ++it) {
    const DQVector v = rand_dq_vector(5, rng);
    CHECK(dc_norm_2R(fmap(v)) == doctest::Approx(vec_norm_twoR(v)).epsilon(1e-12));
  }
}

TEST_CASE("dual representation blocks") {
  const DualRepMatrix I4 = dual_representation(DQMatrix::identity(1));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(I4.st_at(i, j) == (i == j ? 1.0 : 0.0));
      CHECK(I4.du_at(i, j) == 0.0);
    }
  }

  DQMatrix Qi(1, 1);
  Qi.at(0, 0) = DualQuaternion{Quaternion{0, 1, 0, 0}};
  const DualRepMatrix Ri = dual_representation(Qi);
  const double expect[16] = {0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0};
  for (int i = 0; i < 16; ++i) CHECK(Ri.st[i] == expect[i]);

  Rng rng(24);
  const DQVector x = rand_dq_vector(3, rng);
  const DQVector back = dual_rep_col_inv(dual_rep_col(x));
  for (std::size_t i = 0; i < 3; ++i) CHECK(dist_dq(back[i], x[i]) == 0.0);
}

TEST_CASE("dual representation reproduces left multiplication") {
  Rng rng(25);
  const DQMatrix Q = rand_dq_matrix(3, 3, rng);
  const DQVector x = rand_dq_vector(3, rng);
  const DualRepMatrix R = dual_representation(Q);
  const DualRepVector xc = dual_rep_col(x);
  DualRepVector yc;
  yc.st.assign(12, 0.0);
  yc.du.assign(12, 0.0);
  for (int i = 0; i < 12; ++i) {
    for (int j = 0; j < 12; ++j) {
      yc.st[i] += R.st_at(i, j) * xc.st[j];
      yc.du[i] += R.st_at(i, j) * xc.du[j] + R.du_at(i, j) * xc.st[j];
    }
  }
  const DQVector y = dual_rep_col_inv(yc);
  const DQVector direct = dq_matvec(Q, x);
  for (std::size_t i = 0; i < 3; ++i) CHECK(dist_dq(y[i], direct[i]) < 1e-12);
}

TEST_CASE("adjoint is a ring homomorphism preserving structure") {
  Rng rng(26);
  for (int it = 0; it < 10; ++it) {
    const DQMatrix P = rand_dq_matrix(2, 3, rng);
    const DQMatrix P1 = rand_dq_matrix(2, 3, rng);
    const DQMatrix Q = rand_dq_matrix(3, 2, rng);
    const double scale = mat_norm_FR(P) * mat_norm_FR(Q) + 1.0;

    CHECK(dc_dist(adjoint(dq_matmul(P, Q)).payload,
                  dc_mul(adjoint(P).payload, adjoint(Q).payload)) < 1e-11 * scale);
    CHECK(dc_dist(adjoint(dq_add(P, P1)).payload, [&] {
            DCMatrix s = adjoint(P).payload;
            const DCMatrix t = adjoint(P1).payload;
            for (std::size_t i = 0; i < s.st.size(); ++i) {
              s.st[i] += t.st[i];
              s.du[i] += t.du[i];
            }
            return s;
          }()) < 1e-12 * scale);

    // conjugate transpose commutes with the adjoint
    const DCMatrix lhs = adjoint(dq_conj_transpose(P)).payload;
    DCMatrix rhs(lhs.rows, lhs.cols);
    const DCMatrix JP = adjoint(P).payload;
    for (std::size_t i = 0; i < rhs.rows; ++i) {
      for (std::size_t j = 0; j < rhs.cols; ++j) {
        rhs.st_at(i, j) = std::conj(JP.st_at(j, i));
        rhs.du_at(i, j) = std::conj(JP.du_at(j, i));
      }
    }
    CHECK(dc_dist(lhs, rhs) < 1e-12 * scale);
  }

  // Hermitian / unitary transfer to the adjoint side and back
  Rng rng2(27);
  const DQMatrix H = rand_hermitian(3, rng2);
  const DCMatrix JH = adjoint(H).payload;
  double herm_dev = 0.0;
  for (std::size_t i = 0; i < JH.rows; ++i) {
    for (std::size_t j = 0; j < JH.cols; ++j) {
      herm_dev += std::abs(JH.st_at(i, j) - std::conj(JH.st_at(j, i)));
      herm_dev += std::abs(JH.du_at(i, j) - std::conj(JH.du_at(j, i)));
    }
  }
  CHECK(herm_dev < 1e-11);

  const DQMatrix U = rand_unitary(3, rng2);
  DCMatrix JU = adjoint(U).payload;
  DCMatrix JUh(JU.rows, JU.cols);
  for (std::size_t i = 0; i < JU.rows; ++i) {
    for (std::size_t j = 0; j < JU.cols; ++j) {
      JUh.st_at(i, j) = std::conj(JU.st_at(j, i));
      JUh.du_at(i, j) = std::conj(JU.du_at(j, i));
    }
  }
  const DCMatrix prod = dc_mul(JUh, JU);
  DCMatrix eye(JU.rows, JU.cols);
  for (std::size_t i = 0; i < JU.rows; ++i) eye.st_at(i, i) = 1.0;
  CHECK(dc_dist(prod, eye) < 1e-10);
}

TEST_CASE("J(Q) F(x) equals F(Q x)") {
  Rng rng(28);
  for (int it = 0; it < 20; ++it) {
    const DQMatrix Q = rand_dq_matrix(4, 4, rng);
    const DQVector x = rand_dq_vector(4, rng);
    const DCVector lhs = dc_matvec(adjoint(Q).payload, fmap(x));
    const DCVector rhs = fmap(dq_matvec(Q, x));
    CHECK(dc_vec_dist(lhs, rhs) < 1e-11 * (mat_norm_FR(Q) * vec_norm_twoR(x) + 1.0));
  }
}

TEST_CASE("standard eigenvalues of Hermitian quaternion matrices are real pairs") {
  Rng rng(29);
  for (int it = 0; it < 5; ++it) {
    // Hermitian with zero dual part
    DQMatrix B = rand_dq_matrix(3, 3, rng);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) B.at(i, j).du = Quaternion{};
    const DQMatrix H = dq_add(B, dq_conj_transpose(B));
    const DCMatrix JH = adjoint(H).payload;
    const auto ev = hermitian_eigenvalues_doubled(JH.st, JH.rows);
    // 2n eigenvalues of J(H), each doubled by the real embedding: groups of 4
    REQUIRE(ev.size() == 12);
    const double scale = std::max(1.0, std::abs(ev.front()) + std::abs(ev.back()));
    for (std::size_t g = 0; g < ev.size(); g += 4) {
      for (std::size_t k = 1; k < 4; ++k) {
        CHECK(std::abs(ev[g + k] - ev[g]) < 1e-8 * scale);
      }
    }
  }
}

TEST_SUITE_END();
