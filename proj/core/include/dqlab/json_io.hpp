#pragma once

#include <string>

#include <json.hpp>

#include "dqlab/eigen.hpp"
#include "dqlab/graph.hpp"
#include "dqlab/hand_eye.hpp"
#include "dqlab/linalg.hpp"
#include "dqlab/solve.hpp"

namespace dqlab {

using Json = nlohmann::json;

// Entry encoding everywhere: eight reals [w, x, y, z, w_eps, x_eps, y_eps, z_eps].
Json to_json(const DualQuaternion& q);
DualQuaternion dq_from_json(const Json& j);

Json to_json(const DQVector& v);
DQVector dq_vector_from_json(const Json& j);

// Nested arrays of 8-real entries, one inner array per row.
Json to_json(const DQMatrix& m);
DQMatrix dq_matrix_from_json(const Json& j);

// Pair of complex matrices; complex numbers encode as [re, im].
Json to_json(const DCMatrix& m);

Json to_json(const FlopCounts& c);
Json to_json(const SolveReport& r);
Json to_json(const EigenPair& e);
Json to_json(const FormationGraph& g);
Json to_json(const Pose& p);

// A pose is {"R": 3x3 row-major, "t": [3]} or {"dq": [8 reals]}.
DualQuaternion pose_entry_from_json(const Json& j);

Json load_json_file(const std::string& path);

}  // namespace dqlab
