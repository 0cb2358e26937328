// Copyright 2026 The ybgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ybgate/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"

using namespace ybgate;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"ybgate"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("ybgate_test_" + name);
}

void write(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream cells_in(line);
    std::string cell;
    while (std::getline(cells_in, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST(cli_verify, braid_grid_passes) {
  const Result r = run({"verify", "braid", "--sign", "-", "--phi-grid", "32", "--tol", "1e-12"});
  EXPECT_EQ(r.code, cli::kExitPass) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["points"].size(), 32u + 8u);
}

TEST(cli_verify, qybe_grid_passes) {
  const Result r = run({"verify", "qybe", "--sign", "+", "--grid", "8", "--tol", "1e-10"});
  EXPECT_EQ(r.code, cli::kExitPass) << r.err;
}

TEST(cli_verify, other_relations_pass) {
  for (const char* relation : {"unitarity", "schrodinger", "exponential"}) {
    const Result r = run({"verify", relation});
    EXPECT_EQ(r.code, cli::kExitPass) << relation << r.err;
  }
}

TEST(cli_verify, perturbed_matrix_file_fails) {
  Mat4 b = build_b_phi(Sign::kMinus, 0.0);
  b(0, 0) += 0.1;
  const auto path = temp_file("bad.json");
  write(path, MatrixDocument::from_matrix(b).to_json());
  const Result r = run({"verify", "braid", "--matrix-file", path.c_str(), "--tol", "1e-12"});
  EXPECT_EQ(r.code, cli::kExitFail);

  write(path, MatrixDocument::from_matrix(build_b_phi(Sign::kPlus, 1.0)).to_json());
  EXPECT_EQ(run({"verify", "braid", "--matrix-file", path.c_str()}).code, cli::kExitPass);
  EXPECT_EQ(run({"verify", "unitarity", "--matrix-file", path.c_str()}).code, cli::kExitPass);
  std::filesystem::remove(path);
}

TEST(cli_verify, unitarity_of_non_unitary_file_fails) {
  const auto path = temp_file("nonunitary.json");
  write(path, MatrixDocument::from_matrix(build_b(Sign::kPlus, 2.0)).to_json());
  EXPECT_EQ(run({"verify", "unitarity", "--matrix-file", path.c_str()}).code, cli::kExitFail);
  std::filesystem::remove(path);
}

TEST(cli_verify, wrong_dimension_file_is_usage_error) {
  const auto path = temp_file("dim2.json");
  write(path, MatrixDocument::from_matrix(Mat2::identity()).to_json());
  EXPECT_EQ(run({"verify", "braid", "--matrix-file", path.c_str()}).code, cli::kExitUsage);
  std::filesystem::remove(path);
}

TEST(cli_verify, malformed_file_is_usage_error) {
  const auto path = temp_file("garbage.json");
  for (const char* text : {"", "{", "{\"dim\": 4}", "{\"dim\":1,\"data\":[[1,0]]}"}) {
    write(path, text);
    const Result r = run({"verify", "braid", "--matrix-file", path.c_str()});
    EXPECT_EQ(r.code, cli::kExitUsage) << text;
    EXPECT_FALSE(r.err.empty());
  }
  std::filesystem::remove(path);
  EXPECT_EQ(run({"verify", "braid", "--matrix-file", "/no/such/file.json"}).code, cli::kExitUsage);
}

TEST(cli_verify, csv_format) {
  const Result r = run({"verify", "braid", "--sign", "+", "--phi-grid", "4", "--format", "csv"});
  EXPECT_EQ(r.code, cli::kExitPass);
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 1u + 4u + 8u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"param", "value", "quantity"}));
}

TEST(cli_verify, tight_tolerance_fails) {
  EXPECT_EQ(run({"verify", "schrodinger", "--tol", "1e-14"}).code, cli::kExitFail);
}

TEST(cli_matrix, universal_gate) {
  const Result r = run({"matrix", "bphi", "--sign", "-", "--phi", "0"});
  ASSERT_EQ(r.code, cli::kExitPass) << r.err;
  const Mat4 m = MatrixDocument::parse(r.out).to_matrix<4>();
  EXPECT_EQ(m, build_b_phi(Sign::kMinus, 0.0));
  EXPECT_EQ(MatrixDocument::parse(r.out).meta.at("family"), "bphi");
}

TEST(cli_matrix, r_x_at_one) {
  const Result r = run({"matrix", "Rx", "--sign", "-", "--q", "1", "--x", "1"});
  ASSERT_EQ(r.code, cli::kExitPass) << r.err;
  EXPECT_LT(residual(MatrixDocument::parse(r.out).to_matrix<4>(), 2.0 * Mat4::identity()), 1e-15);
}

TEST(cli_matrix, cnot) {
  const Result r = run({"matrix", "cnot"});
  ASSERT_EQ(r.code, cli::kExitPass);
  EXPECT_EQ(MatrixDocument::parse(r.out).to_matrix<4>(), cnot());
}

TEST(cli_matrix, every_family_matches_library) {
  struct Case {
    std::initializer_list<const char*> args;
    Mat4 expected;
  };
  const Case cases[] = {
      {{"matrix", "b", "--sign", "+", "--q", "0.6,0.8"}, build_b(Sign::kPlus, {0.6, 0.8})},
      {{"matrix", "b", "--sign", "+", "--phi", "0.5"}, build_b(Sign::kPlus, std::polar(1.0, -0.5))},
      {{"matrix", "Rtheta", "--sign", "+", "--phi", "0.2", "--theta", "0.4"},
       build_R_theta(Sign::kPlus, 0.2, 0.4)},
      {{"matrix", "Rtheta", "--sign", "-", "--x", "2"},
       build_R_theta(Sign::kMinus, 0.0, theta_from_x(2.0))},
      {{"matrix", "H", "--sign", "+", "--phi", "1"}, hamiltonian_const(Sign::kPlus, 1.0)},
      {{"matrix", "Hx", "--sign", "-", "--phi", "1", "--x", "0.5"},
       hamiltonian_x(Sign::kMinus, 1.0, 0.5)},
      {{"matrix", "U", "--sign", "+", "--phi", "0.3", "--theta", "1.2"},
       evolution_U(Sign::kPlus, 0.3, 1.2)},
      {{"matrix", "bphi"}, build_b_phi(Sign::kMinus, 0.0)},
  };
  for (const Case& c : cases) {
    const Result r = run(c.args);
    ASSERT_EQ(r.code, cli::kExitPass) << r.err;
    // Expected values may be constant-folded with exact arithmetic; allow an ulp.
    EXPECT_LT(residual(MatrixDocument::parse(r.out).to_matrix<4>(), c.expected), 1e-15) << r.out;
  }
}

TEST(cli_matrix, usage_errors) {
  EXPECT_EQ(run({"matrix", "Rtheta", "--theta", "0.1", "--x", "2"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"matrix", "b", "--q", "1", "--phi", "0"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"matrix", "b", "--q", "0"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"matrix", "b", "--q", "a,b"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"matrix", "bphi", "--sign", "both"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"matrix", "bphi", "--sign", "x"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"matrix", "nope"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"matrix"}).code, cli::kExitUsage);
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"matrix", "bphi", "--phi", "abc"}).code, cli::kExitUsage);
}

TEST(cli_matrix, writes_out_file) {
  const auto path = temp_file("cnot.json");
  const Result r = run({"matrix", "cnot", "--out", path.c_str()});
  EXPECT_EQ(r.code, cli::kExitPass);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(MatrixDocument::parse(text.str()).to_matrix<4>(), cnot());
  std::filesystem::remove(path);
  EXPECT_EQ(run({"matrix", "cnot", "--out", "/no/such/dir/x.json"}).code, cli::kExitUsage);
}

TEST(cli_synthesize, theorem1) {
  const Result r = run({"synthesize", "theorem1", "--tol", "1e-12"});
  ASSERT_EQ(r.code, cli::kExitPass) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_LT(j["cnot_residual"].get<double>(), 1e-12);
  EXPECT_EQ(j["phase_verdict"], "equal");
  EXPECT_TRUE(j["generator_entangling"].get<bool>());
}

TEST(cli_synthesize, evolution) {
  EXPECT_EQ(run({"synthesize", "evolution", "--phi", "0.7", "--tol", "1e-12"}).code,
            cli::kExitPass);
  const Result off = run({"synthesize", "evolution", "--phi", "0.7", "--theta", "0.3"});
  EXPECT_EQ(off.code, cli::kExitFail);
  EXPECT_GT(nlohmann::json::parse(off.out)["cnot_residual"].get<double>(), 1e-3);
}

TEST(cli_sweep, concurrence_matches_closed_form) {
  const Result r =
      run({"sweep", "concurrence", "--param", "theta", "--from", "0", "--to", "1.5708", "--steps", "65"});
  ASSERT_EQ(r.code, cli::kExitPass) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 66u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"param", "value", "quantity"}));
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const double theta = std::stod(rows[k][1]);
    EXPECT_NEAR(std::stod(rows[k][2]), std::abs(std::cos(2 * theta)), 1e-12);
  }
}

TEST(cli_sweep, unitarity_over_x) {
  const Result r =
      run({"sweep", "unitarity", "--param", "x", "--from", "-3", "--to", "3", "--steps", "61", "--sign", "-"});
  ASSERT_EQ(r.code, cli::kExitPass) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 62u);
  for (std::size_t k = 1; k < rows.size(); ++k) EXPECT_LT(std::stod(rows[k][2]), 1e-12);
}

TEST(cli_sweep, braid_and_qybe_json) {
  for (auto args : {std::initializer_list<const char*>{"sweep", "braid", "--param", "phi", "--from", "0",
                                                       "--to", "6", "--steps", "7", "--format", "json"},
                    std::initializer_list<const char*>{"sweep", "qybe", "--param", "x", "--from", "0.1",
                                                       "--to", "2", "--steps", "5", "--format", "json"}}) {
    const Result r = run(args);
    ASSERT_EQ(r.code, cli::kExitPass) << r.err;
    EXPECT_TRUE(nlohmann::json::parse(r.out)["pass"].get<bool>());
  }
}

TEST(cli_sweep, usage_errors) {
  EXPECT_EQ(run({"sweep", "concurrence", "--param", "theta", "--from", "0", "--to", "1", "--steps", "1"}).code,
            cli::kExitUsage);
  EXPECT_EQ(run({"sweep", "braid", "--param", "x", "--from", "0", "--to", "1", "--steps", "3"}).code,
            cli::kExitUsage);
  EXPECT_EQ(run({"sweep", "qybe", "--param", "theta", "--from", "0", "--to", "1", "--steps", "3"}).code,
            cli::kExitUsage);
  EXPECT_EQ(run({"sweep", "concurrence", "--param", "theta", "--from", "0", "--to", "1"}).code,
            cli::kExitUsage);
  EXPECT_EQ(run({"sweep", "concurrence", "--param", "q", "--from", "0", "--to", "1", "--steps", "3"}).code,
            cli::kExitUsage);
}

TEST(cli, output_is_deterministic) {
  const std::initializer_list<const char*> invocations[] = {
      {"verify", "schrodinger"},
      {"verify", "exponential", "--format", "csv"},
      {"matrix", "U", "--sign", "+", "--phi", "0.3", "--theta", "1.2"},
      {"synthesize", "theorem1"},
      {"sweep", "concurrence", "--param", "x", "--from", "-2", "--to", "2", "--steps", "9"},
  };
  for (auto args : invocations) {
    const Result a = run(args);
    const Result b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(cli, seed_environment_variable) {
  ::setenv(cli::kSeedEnv, "12345", 1);
  const Result a = run({"verify", "schrodinger", "--sign", "+"});
  ::setenv(cli::kSeedEnv, "0x5EED", 1);
  const Result b = run({"verify", "schrodinger", "--sign", "+"});
  ::unsetenv(cli::kSeedEnv);
  const Result c = run({"verify", "schrodinger", "--sign", "+"});
  EXPECT_EQ(a.code, cli::kExitPass);
  EXPECT_NE(a.out, b.out);
  EXPECT_EQ(b.out, c.out);

  ::setenv(cli::kSeedEnv, "seed", 1);
  EXPECT_EQ(run({"verify", "schrodinger"}).code, cli::kExitUsage);
  ::unsetenv(cli::kSeedEnv);
}

TEST(cli, help_exits_zero) {
  const Result r = run({"--help"});
  EXPECT_EQ(r.code, cli::kExitPass);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}
