#include "dqlab/json_io.hpp"

#include <fstream>

#include "dqlab/error.hpp"

namespace dqlab {

Json to_json(const DualQuaternion& q) {
  return Json::array(
      {q.st.w, q.st.x, q.st.y, q.st.z, q.du.w, q.du.x, q.du.y, q.du.z});
}

DualQuaternion dq_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 8) {
    fail(Errc::invalid_argument, "dual quaternion JSON must be an array of 8 reals");
  }
  for (const auto& v : j) {
    if (!v.is_number()) fail(Errc::invalid_argument, "dual quaternion JSON: non-numeric entry");
  }
  return DualQuaternion{Quaternion{j[0], j[1], j[2], j[3]}, Quaternion{j[4], j[5], j[6], j[7]}};
}

Json to_json(const DQVector& v) {
  Json out = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(to_json(v[i]));
  return out;
}

DQVector dq_vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail(Errc::invalid_argument, "vector JSON must be a non-empty array");
  std::vector<DualQuaternion> e;
  e.reserve(j.size());
  for (const auto& entry : j) e.push_back(dq_from_json(entry));
  return DQVector(std::move(e));
}

Json to_json(const DQMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

DQMatrix dq_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail(Errc::invalid_argument, "matrix JSON must be a non-empty array");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) fail(Errc::invalid_argument, "matrix JSON rows must be non-empty arrays");
  DQMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) {
      fail(Errc::invalid_argument, "matrix JSON rows must share one length");
    }
    for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = dq_from_json(j[i][k]);
  }
  return m;
}

namespace {
Json complex_part_to_json(const std::vector<Complex>& a, std::size_t rows, std::size_t cols) {
  Json out = Json::array();
  for (std::size_t i = 0; i < rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < cols; ++j) {
      row.push_back(Json::array({a[i * cols + j].real(), a[i * cols + j].imag()}));
    }
    out.push_back(std::move(row));
  }
  return out;
}
}  // namespace

Json to_json(const DCMatrix& m) {
  return Json{{"rows", m.rows},
              {"cols", m.cols},
              {"st", complex_part_to_json(m.st, m.rows, m.cols)},
              {"du", complex_part_to_json(m.du, m.rows, m.cols)}};
}

Json to_json(const FlopCounts& c) {
  return Json{{"adds", c.adds},
              {"muls", c.muls},
              {"divs", c.divs},
              {"sqrts", c.sqrts},
              {"total", c.total()},
              {"factorizations", c.factorizations}};
}

Json to_json(const SolveReport& r) {
  return Json{{"solution", to_json(r.solution)},
              {"flops", to_json(r.flops)},
              {"factorization", r.factorization == Factorization::lu ? "lu" : "cholesky"},
              {"wall_time_s", r.wall_time_s},
              {"residual", r.residual}};
}

Json to_json(const EigenPair& e) {
  return Json{{"lambda", Json::array({e.lambda.st, e.lambda.du})},
              {"vector", to_json(e.vector)},
              {"residual", e.residual},
              {"iterations", e.iterations},
              {"power_iters", e.power_iters},
              {"converged", e.converged},
              {"flops", to_json(e.flops)}};
}

Json to_json(const FormationGraph& g) {
  Json edges = Json::array();
  for (const auto& [i, j] : g.edges) edges.push_back(Json::array({i, j}));
  Json q = Json::array();
  for (const auto& qi : g.q) q.push_back(to_json(qi));
  return Json{{"n", g.n}, {"edges", std::move(edges)}, {"q", std::move(q)}};
}

Json to_json(const Pose& p) {
  Json R = Json::array();
  for (int i = 0; i < 3; ++i) {
    R.push_back(Json::array({p.R[i * 3], p.R[i * 3 + 1], p.R[i * 3 + 2]}));
  }
  return Json{{"R", std::move(R)}, {"t", Json::array({p.t[0], p.t[1], p.t[2]})}};
}

DualQuaternion pose_entry_from_json(const Json& j) {
  if (j.is_array()) return dq_from_json(j);
  if (!j.is_object()) fail(Errc::invalid_argument, "pose entry must be an object or an 8-array");
  if (j.contains("dq")) return dq_from_json(j.at("dq"));
  if (!j.contains("R") || !j.contains("t")) {
    fail(Errc::invalid_argument, "pose entry needs either \"dq\" or \"R\" and \"t\"");
  }
  Pose pose;
  const Json& R = j.at("R");
  if (R.is_array() && R.size() == 3) {
    for (int i = 0; i < 3; ++i) {
      if (!R[i].is_array() || R[i].size() != 3) {
        fail(Errc::invalid_argument, "pose R must be 3x3");
      }
      for (int k = 0; k < 3; ++k) pose.R[i * 3 + k] = R[i][k];
    }
  } else if (R.is_array() && R.size() == 9) {
    for (int i = 0; i < 9; ++i) pose.R[i] = R[i];
  } else {
    fail(Errc::invalid_argument, "pose R must be 3x3 (nested or flat row-major)");
  }
  const Json& t = j.at("t");
  if (!t.is_array() || t.size() != 3) fail(Errc::invalid_argument, "pose t must have 3 entries");
  for (int i = 0; i < 3; ++i) pose.t[i] = t[i];
  return pose_to_dq(pose);
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::invalid_argument, "cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(Errc::invalid_argument, std::string("JSON parse error: ") + e.what());
  }
  return j;
}

}  // namespace dqlab
