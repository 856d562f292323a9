#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "skewcat/finite_category.hpp"
#include "skewcat/harness.hpp"

namespace fs = std::filesystem;

namespace {
  fs::path scratch() {
    auto dir = fs::temp_directory_path() / "skewcat-cli-test";
    fs::create_directories(dir);
    return dir;
  }

  int run(std::string const& args) {
    std::string cmd = std::string(SKEWCAT_CLI) + " " + args + " > /dev/null 2>&1";
    int         rc  = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  }

  std::string write(std::string const& name, std::string const& text) {
    auto path = scratch() / name;
    std::ofstream(path) << text;
    return path.string();
  }

  std::string slurp(fs::path const& p) {
    std::ifstream is(p);
    return {std::istreambuf_iterator<char>(is), {}};
  }
}  // namespace

TEST_CASE("cli: exit 0 on a passing suite and the report is written") {
  auto out = (scratch() / "duals.json").string();
  CHECK(run("run --suite duals --seed 3 --out " + out) == 0);
  auto doc = nlohmann::json::parse(slurp(out));
  CHECK(doc["schema"] == 1);
  CHECK(doc["config"]["seed"] == 3);
  CHECK(doc["status"] == "pass");
}

TEST_CASE("cli: exit 1 when a law fails") {
  // A unital magma that is not associative: (aa)b = a but a(ab) = b.
  auto magma = skewcat::monoid_category({{0, 1, 2}, {1, 2, 1}, {2, 1, 1}}, 0, "magma");
  auto path  = write("magma.json", magma.to_json().dump());
  auto out   = (scratch() / "magma-report.json").string();
  CHECK(run("run --suite category-axioms --load " + path + " --out " + out) == 1);
  auto doc = nlohmann::json::parse(slurp(out));
  CHECK(doc["status"] == "fail");
}

TEST_CASE("cli: exit 2 on configuration and IO errors") {
  CHECK(run("run --suite nope") == 2);
  CHECK(run("run --suite skew-laws --action nope") == 2);
  CHECK(run("run --suite duals --load /nonexistent/x.json") == 2);
  CHECK(run("run --suite duals --load " + write("garbage.json", "{not json")) == 2);
  CHECK(run("run --suite duals --out /nonexistent/dir/report.json") == 2);
  CHECK(run("run --suite monoid-oracle --max-order 7") == 2);
  CHECK(run("run") == 2);
  CHECK(run("frobnicate") == 2);
  auto flat = write("flat.json", skewcat::gms_to_json(skewcat::d_space(skewcat::ext_rat::infinity())).dump());
  CHECK(run("run --suite counterexample-left --load " + flat) == 2);
}

TEST_CASE("cli: list and a loaded monoid action") {
  CHECK(run("list") == 0);
  skewcat::monoid_action m{skewcat::cyclic_group(2), skewcat::cyclic_group(3), {{0, 0}, {1, 2}, {2, 1}}};
  auto                   path = write("action.json", skewcat::monoid_action_to_json(m).dump());
  CHECK(run("run --suite monoid-oracle --max-order 2 --load " + path) == 0);
}
