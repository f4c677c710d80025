// Command-line front end: diagonalize | handeye | bench | solve.
// Exit codes: 0 ok, 2 input/config error, 3 infeasible problem data,
// 4 numerically singular system.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dqlab/adjoint.hpp"
#include "dqlab/bench.hpp"
#include "dqlab/error.hpp"
#include "dqlab/hand_eye.hpp"
#include "dqlab/json_io.hpp"
#include "dqlab/solve.hpp"

namespace {

using dqlab::Backend;
using dqlab::DualQuaternion;
using dqlab::Errc;
using dqlab::Json;

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::invalid_argument:
    case Errc::dimension_mismatch:
    case Errc::infeasible_sparsity:
      return 2;
    case Errc::singular:
    case Errc::not_positive_definite:
      return 4;
    default:
      return 3;
  }
}

void print_dq(const char* name, const DualQuaternion& q) {
  std::printf("%-8s = %s\n", name, dqlab::to_string(q).c_str());
}

std::vector<std::pair<DualQuaternion, DualQuaternion>> load_pairs(const std::string& path) {
  const Json j = dqlab::load_json_file(path);
  if (!j.is_array() || j.empty()) {
    dqlab::fail(Errc::invalid_argument, "pose file must be a JSON array of [A, B] pairs");
  }
  std::vector<std::pair<DualQuaternion, DualQuaternion>> pairs;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2) {
      dqlab::fail(Errc::invalid_argument, "each measurement must be a 2-element array [A, B]");
    }
    pairs.push_back({dqlab::pose_entry_from_json(entry[0]), dqlab::pose_entry_from_json(entry[1])});
  }
  return pairs;
}

Json dq_with_pose_json(const DualQuaternion& q) {
  Json out{{"dq", dqlab::to_json(q)}};
  if (dqlab::dq_is_unit(q)) out["pose"] = dqlab::to_json(dqlab::dq_to_pose(q));
  return out;
}

int run_diagonalize(const std::vector<double>& comps, const std::string& file, bool as_json) {
  DualQuaternion a;
  if (!file.empty()) {
    a = dqlab::dq_from_json(dqlab::load_json_file(file));
  } else if (comps.size() == 8) {
    a = DualQuaternion{{comps[0], comps[1], comps[2], comps[3]},
                       {comps[4], comps[5], comps[6], comps[7]}};
  } else {
    dqlab::fail(Errc::invalid_argument, "diagonalize needs 8 reals or --file");
  }
  const dqlab::Diagonalization d = dqlab::diagonalize(a);
  const DualQuaternion rec = d.q * dqlab::embed(d.lambda) * dqlab::dq_conj(d.q);
  const double residual = dqlab::dq_mag2(rec - a);
  if (as_json) {
    Json out{{"q", dqlab::to_json(d.q)},
             {"lambda",
              {{"st", Json::array({d.lambda.st.real(), d.lambda.st.imag()})},
               {"du", Json::array({d.lambda.du.real(), d.lambda.du.imag()})}}},
             {"reconstruction_residual", residual}};
    std::printf("%s\n", out.dump(2).c_str());
  } else {
    print_dq("q", d.q);
    std::printf("lambda   = %s\n", dqlab::to_string(d.lambda).c_str());
    std::printf("reconstruction_residual = %.3e\n", residual);
  }
  return 0;
}

int run_handeye(const std::string& mode, const std::string& poses, bool as_json) {
  const auto pairs = load_pairs(poses);
  if (mode == "axxb") {
    if (pairs.size() < 2) {
      dqlab::fail(Errc::invalid_argument, "axxb needs at least two measurement pairs");
    }
    const dqlab::AxxbSolution sol =
        dqlab::axxb_solve(pairs[0].first, pairs[0].second, pairs[1].first, pairs[1].second);
    // Extra pairs act as consistency checks against the recovered motion.
    double extra = 0.0;
    double scale = 1.0;
    for (std::size_t k = 2; k < pairs.size(); ++k) {
      extra = std::max(extra, dqlab::dq_mag2(pairs[k].first * sol.q_plus -
                                             sol.q_plus * pairs[k].second));
      scale = std::max({scale, dqlab::dq_mag2(pairs[k].first), dqlab::dq_mag2(pairs[k].second)});
    }
    if (extra > 2e-3 * scale) {
      dqlab::fail(Errc::inconsistent, "axxb: extra measurement pair disagrees with the solution");
    }
    if (as_json) {
      Json out{{"mode", "axxb"},
               {"q_plus", dq_with_pose_json(sol.q_plus)},
               {"q_minus", dq_with_pose_json(sol.q_minus)},
               {"residual_ab", sol.residual_ab},
               {"residual_cd", sol.residual_cd}};
      std::printf("%s\n", out.dump(2).c_str());
    } else {
      print_dq("q_plus", sol.q_plus);
      print_dq("q_minus", sol.q_minus);
      std::printf("residual_ab = %.3e\nresidual_cd = %.3e\n", sol.residual_ab, sol.residual_cd);
    }
    return 0;
  }
  if (mode == "axyb") {
    const dqlab::AxybSolution sol = dqlab::axyb_solve(pairs);
    if (as_json) {
      Json out{{"mode", "axyb"},
               {"q", dq_with_pose_json(sol.q)},
               {"p", dq_with_pose_json(sol.p)},
               {"max_residual", sol.max_residual}};
      std::printf("%s\n", out.dump(2).c_str());
    } else {
      print_dq("q", sol.q);
      print_dq("p", sol.p);
      std::printf("max_residual = %.3e\n", sol.max_residual);
    }
    return 0;
  }
  dqlab::fail(Errc::invalid_argument, "handeye mode must be axxb or axyb");
}

int run_solve(const std::string& matrix_file, const std::string& rhs_file,
              const std::string& backend, const std::string& method, bool emit_adjoint,
              bool as_json) {
  const dqlab::DQMatrix Q = dqlab::dq_matrix_from_json(dqlab::load_json_file(matrix_file));
  const dqlab::DQVector y = dqlab::dq_vector_from_json(dqlab::load_json_file(rhs_file));
  dqlab::SolveReport rep;
  if (backend == "baseline") {
    rep = dqlab::solve_dq_baseline(Q, y);
  } else if (backend == "adjoint") {
    const auto fac =
        method == "cholesky" ? dqlab::Factorization::cholesky : dqlab::Factorization::lu;
    rep = dqlab::solve_dq_adjoint(Q, y, fac);
  } else {
    dqlab::fail(Errc::invalid_argument, "solve backend must be adjoint or baseline");
  }
  if (as_json) {
    Json out = dqlab::to_json(rep);
    if (emit_adjoint) out["adjoint"] = dqlab::to_json(dqlab::adjoint(Q).payload);
    std::printf("%s\n", out.dump(2).c_str());
  } else {
    for (std::size_t i = 0; i < rep.solution.size(); ++i) {
      std::printf("x[%zu] = %s\n", i, dqlab::to_string(rep.solution[i]).c_str());
    }
    std::printf("residual = %.3e  flops = %llu  time_s = %.3e\n", rep.residual,
                static_cast<unsigned long long>(rep.flops.total()), rep.wall_time_s);
  }
  return 0;
}

struct BenchArgs {
  std::vector<int> n;
  std::vector<double> s;
  bool table1 = false;
  int trials = 100;
  std::uint64_t seed = 1;
  double delta = 1e-7;
  int kmax = 50;
  int power_iters = 20;
  std::string backend = "both";
  bool json = false;
};

int run_bench_cmd(const BenchArgs& args) {
  dqlab::BenchOptions opts;
  if (args.table1) {
    opts.cases = dqlab::table1_cases();
  } else {
    if (args.n.empty() || args.s.empty()) {
      dqlab::fail(Errc::invalid_argument, "bench needs --table1 or both --n and --s");
    }
    for (int n : args.n)
      for (double s : args.s) opts.cases.push_back({n, s});
  }
  opts.trials = args.trials;
  opts.seed = args.seed;
  opts.rqi.delta = args.delta;
  opts.rqi.k_max = args.kmax;
  opts.rqi.power_iters = args.power_iters;
  if (args.backend == "baseline") {
    opts.backends = {Backend::baseline};
  } else if (args.backend == "adjoint") {
    opts.backends = {Backend::adjoint};
  } else if (args.backend == "both") {
    opts.backends = {Backend::baseline, Backend::adjoint};
  } else {
    dqlab::fail(Errc::invalid_argument, "backend must be baseline, adjoint or both");
  }
  const std::vector<dqlab::BenchRow> rows = dqlab::run_bench(opts);
  if (args.json) {
    Json out = Json::array();
    for (const auto& r : rows) out.push_back(dqlab::bench_row_json(r));
    std::printf("%s\n", out.dump(2).c_str());
  } else {
    std::printf("%s\n", dqlab::bench_csv_header().c_str());
    for (const auto& r : rows) std::printf("%s\n", dqlab::bench_csv_row(r).c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dual quaternion linear algebra lab"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of text");

  auto* diag = app.add_subcommand("diagonalize", "similarity standard form of a dual quaternion");
  diag->fallthrough();
  std::vector<double> comps;
  std::string diag_file;
  diag->add_option("components", comps, "w x y z w_eps x_eps y_eps z_eps")->expected(0, 8);
  diag->add_option("--file", diag_file, "JSON file with one 8-real array");

  auto* he = app.add_subcommand("handeye", "AX=XB / AX=YB hand-eye calibration");
  he->fallthrough();
  std::string mode = "axxb", poses;
  he->add_option("--mode", mode, "axxb or axyb")->required();
  he->add_option("--poses", poses, "JSON array of [A, B] measurement pairs")->required();

  auto* sv = app.add_subcommand("solve", "solve a dual quaternion linear system");
  sv->fallthrough();
  std::string matrix_file, rhs_file, backend = "adjoint", method = "lu";
  bool emit_adjoint = false;
  sv->add_option("--matrix", matrix_file, "DQ matrix JSON file")->required();
  sv->add_option("--rhs", rhs_file, "DQ vector JSON file")->required();
  sv->add_option("--backend", backend, "adjoint or baseline");
  sv->add_option("--method", method, "lu or cholesky (adjoint backend)");
  sv->add_flag("--emit-adjoint", emit_adjoint, "include J(Q) in the JSON output");

  auto* be = app.add_subcommand("bench", "Laplacian eigenvalue benchmark");
  be->fallthrough();
  BenchArgs bargs;
  be->add_option("--n", bargs.n, "matrix sizes");
  be->add_option("--s", bargs.s, "sparsities in (0, 1]");
  be->add_flag("--table1", bargs.table1, "run the full experiment grid");
  be->add_option("--trials", bargs.trials, "trials per (n, s)");
  be->add_option("--seed", bargs.seed, "RNG seed");
  be->add_option("--delta", bargs.delta, "RQI stopping tolerance");
  be->add_option("--kmax", bargs.kmax, "RQI iteration cap");
  be->add_option("--power-iters", bargs.power_iters, "power method preprocessing steps");
  be->add_option("--backend", bargs.backend, "baseline, adjoint or both");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (diag->parsed()) return run_diagonalize(comps, diag_file, as_json);
    if (he->parsed()) return run_handeye(mode, poses, as_json);
    if (sv->parsed()) return run_solve(matrix_file, rhs_file, backend, method, emit_adjoint, as_json);
    if (be->parsed()) {
      bargs.json = as_json;
      return run_bench_cmd(bargs);
    }
  } catch (const dqlab::Error& e) {
    Json err{{"error", dqlab::errc_name(e.code())}, {"message", e.what()}};
    std::fprintf(stderr, "%s\n", err.dump().c_str());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    Json err{{"error", "invalid-argument"}, {"message", e.what()}};
    std::fprintf(stderr, "%s\n", err.dump().c_str());
    return 2;
  }
  return 2;
}
