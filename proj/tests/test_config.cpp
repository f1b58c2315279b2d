#include <filesystem>
#include <fstream>

#include <doctest.h>

#include "pmech/common.hpp"
#include "pmech/config.hpp"

using namespace pmech;

namespace {

struct TempFile {
  std::filesystem::path path;
  TempFile(const char* name, const char* body) : path(name) {
    std::ofstream os(path);
    os << body;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_SUITE("config") {
  TEST_CASE("key=value files parse with comments and whitespace") {
    const TempFile file("cfg_ok.cfg",
                        "# run setup\n"
                        "hbar = 0.5\n"
                        "\n"
                        "grid=catalog_32   # trailing comment\n"
                        "hbar_list = 0.4, 0.2, 0.1, 0.05\n"
                        "nv = 64\n");
    const RunConfig cfg = RunConfig::from_file(file.path.string());
    CHECK(cfg.get_double("hbar", 0.0) == 0.5);
    CHECK(cfg.get_string("grid", "") == "catalog_32");
    CHECK(cfg.get_size("nv", 0) == 64);
    const auto list = cfg.get_double_list("hbar_list", {});
    REQUIRE(list.size() == 4);
    CHECK(list[0] == 0.4);
    CHECK(list[3] == 0.05);
  }

  TEST_CASE("defaults apply and overrides win") {
    RunConfig cfg;
    CHECK(cfg.get_double("dt", 0.01) == 0.01);
    cfg.set("dt", "0.002");
    CHECK(cfg.get_double("dt", 0.01) == 0.002);
    cfg.set_pair("dt=0.004");
    CHECK(cfg.get_double("dt", 0.01) == 0.004);
  }

  TEST_CASE("malformed input is rejected") {
    const TempFile file("cfg_bad.cfg", "hbar 0.5\n");
    CHECK_THROWS_AS((void)RunConfig::from_file(file.path.string()),
                    config_error);

    const TempFile empty_key("cfg_bad2.cfg", "= 1\n");
    CHECK_THROWS_AS((void)RunConfig::from_file(empty_key.path.string()),
                    config_error);

    CHECK_THROWS_AS((void)RunConfig::from_file("cfg_does_not_exist.cfg"),
                    config_error);

    RunConfig cfg;
    CHECK_THROWS_AS(cfg.set_pair("no_equals"), config_error);
    cfg.set("hbar", "zz");
    CHECK_THROWS_AS((void)cfg.get_double("hbar", 0.0), config_error);
    cfg.set("nv", "-3");
    CHECK_THROWS_AS((void)cfg.get_size("nv", 0), config_error);
    cfg.set("hbar_list", "0.4,,0.2");
    CHECK_THROWS_AS((void)cfg.get_double_list("hbar_list", {}), config_error);
  }
}
