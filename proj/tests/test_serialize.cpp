#include <filesystem>
#include <fstream>

#include <doctest.h>

#include "pmech/serialize.hpp"
#include "pmech/signals.hpp"

#include "helpers.hpp"

using namespace pmech;

namespace {

struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const char* name)
      : path(std::filesystem::path("serialize_scratch") / name) {
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path.parent_path()); }
  std::string base(const char* file) const { return (path / file).string(); }
};

}  // namespace

TEST_SUITE("serialize") {
  TEST_CASE("grid functions round-trip exactly") {
    const TempDir dir("pfunction");
    const PFunction f = sample_signal(oracle_grid_16(), bracket_signal(0));
    save_pfunction(f, dir.base("f"));
    const PFunction back = load_pfunction(dir.base("f"));
    CHECK(back.spec == f.spec);
    CHECK(testutil::max_abs_diff(back, f) == 0.0);
    CHECK(std::filesystem::exists(dir.base("f") + ".json"));
  }

  TEST_CASE("wave operators round-trip exactly") {
    const TempDir dir("waveop");
    WaveOp op;
    op.hbar = 0.5;
    op.sign = RepSign::minus;
    op.grid = WaveGrid{32, 10.0};
    op.matrix = Eigen::MatrixXcd::Random(32, 32);
    save_waveop(op, dir.base("op"));
    const WaveOp back = load_waveop(dir.base("op"));
    CHECK(back.hbar == op.hbar);
    CHECK(back.sign == op.sign);
    CHECK(back.grid.N_v == op.grid.N_v);
    CHECK(back.grid.L_v == op.grid.L_v);
    CHECK((back.matrix - op.matrix).norm() == 0.0);
  }

  TEST_CASE("trajectory CSV lists all named columns") {
    const TempDir dir("csv");
    const std::string path = dir.base("traj.csv");
    save_trajectory_csv(path, {0.0, 0.5, 1.0},
                        {{"norm", {1.0, 2.0, 3.0}},
                         {"residual", {0.1, 0.2, 0.3}}});
    std::ifstream is(path);
    std::string header;
    std::getline(is, header);
    CHECK(header == "t,norm,residual");
    int rows = 0;
    std::string line;
    while (std::getline(is, line)) {
      if (!line.empty()) {
        ++rows;
      }
    }
    CHECK(rows == 3);
  }

  TEST_CASE("column length mismatches are rejected") {
    const TempDir dir("csvbad");
    CHECK_THROWS_AS(
        save_trajectory_csv(dir.base("bad.csv"), {0.0, 1.0},
                            {{"norm", {1.0}}}),
        config_error);
  }

  TEST_CASE("corrupt files are rejected") {
    const TempDir dir("corrupt");
    CHECK_THROWS_AS((void)load_pfunction(dir.base("missing")), config_error);

    {
      std::ofstream os(dir.base("short") + ".bin", std::ios::binary);
      os << "tiny";
    }
    CHECK_THROWS_AS((void)load_pfunction(dir.base("short")), config_error);

    {
      std::ofstream os(dir.base("bad") + ".json");
      os << "{ not json";
      std::ofstream ob(dir.base("bad") + ".bin", std::ios::binary);
      ob << "x";
    }
    CHECK_THROWS_AS((void)load_waveop(dir.base("bad")), config_error);
  }
}
