#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "corpus.hpp"
#include "doctest.h"
#include "minterp/io.hpp"
#include "minterp/verification.hpp"

using namespace minterp;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  static fs::path dir = [] {
    auto d = fs::temp_directory_path() / "minterp_io_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string line_curve_json() {
  return R"({
    "interval": [-1.0, 1.0],
    "rho": 1.2,
    "components": [
      {"builtin": "line"},
      {"builtin": "line"},
      {"builtin": "line"}
    ]
  })";
}

std::string circle_curve_json(double magnitude) {
  std::string s = R"({
    "interval": [-0.8, 0.8],
    "rho": 1.2,
    "components": [
      {"builtin": "circle"},
      {"builtin": "circle"},
      {"builtin": "circle"}
    ])";
  if (magnitude > 0.0) {
    s += R"(,
    "perturbation": {
      "direction": [[0.0, 0.3, 0.1], [0.2, -0.1], [0.05]],
      "magnitude": )" +
         format_double(magnitude) + "}";
  }
  s += "\n}";
  return s;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(MINTERP_BIN) + " " + args;
  return std::system(cmd.c_str());
}

}  // namespace

TEST_SUITE("cli_io") {

TEST_CASE("parse_curve: builtin line expands to [[0,1],[0],[0]]") {
  RunConfig cfg;
  auto pc = parse_curve_json(line_curve_json(), cfg);
  REQUIRE(pc.curve[0].degree() == 1);
  CHECK(std::abs(pc.curve[0].coeffs()[0]) < 1e-14);
  CHECK(std::abs(pc.curve[0].coeffs()[1] - 1.0) < 1e-14);
  CHECK(pc.curve[1].degree() == 0);
  CHECK(std::abs(pc.curve[1].coeffs()[0]) < 1e-14);
  CHECK(pc.curve[2].degree() == 0);
  CHECK(pc.domain->rho == 1.2);
}

TEST_CASE("parse -> serialize -> parse round-trips coefficients") {
  RunConfig cfg;
  auto pc = parse_curve_json(circle_curve_json(1e-3), cfg);
  const std::string text = curve_to_json(pc.curve);
  auto pc2 = parse_curve_json(text, cfg);
  for (int m = 0; m < 3; ++m) {
    REQUIRE(pc.curve[m].coeffs().size() == pc2.curve[m].coeffs().size());
    for (int k = 0; k < pc.curve[m].coeffs().size(); ++k) {
      CHECK(pc.curve[m].coeffs()[k] == pc2.curve[m].coeffs()[k]);
    }
  }
}

TEST_CASE("schema violations are rejected") {
  RunConfig cfg;
  // two components
  const std::string two = R"({"interval": [-1, 1], "rho": 1.2,
    "components": [{"builtin": "line"}, {"builtin": "line"}]})";
  try {
    parse_curve_json(two, cfg);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::schema_error);
  }
  // unknown field
  const std::string unknown = R"({"interval": [-1, 1], "rho": 1.2, "colour": "red",
    "components": [{"builtin": "line"}, {"builtin": "line"}, {"builtin": "line"}]})";
  CHECK_THROWS_AS(parse_curve_json(unknown, cfg), Error);
  // malformed JSON
  try {
    parse_curve_json("{nope", cfg);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
  }
  // bad config
  CHECK_THROWS_AS(parse_config_json(R"({"max_iter": 0})"), Error);
  CHECK_THROWS_AS(parse_config_json(R"({"fit_tol": 2.0})"), Error);
  CHECK_THROWS_AS(parse_config_json(R"({"nonsense": 1})"), Error);
}

TEST_CASE("config parsing covers the knobs") {
  auto cfg = parse_config_json(R"({
    "fit_tol": 1e-12, "newton_tol": 1e-10, "max_iter": 20,
    "perm": [2, 3, 1], "printed_v3_sign": true, "anchor_u0": 0.0,
    "grid_nu": 16, "grid_nv": 8, "probe_direction": [0.0, 1.0, 0.0]
  })");
  CHECK(cfg.fit_tol == 1e-12);
  CHECK(cfg.newton_tol == 1e-10);
  CHECK(cfg.max_iter == 20);
  REQUIRE(cfg.perm.has_value());
  CHECK(cfg.perm->i == 2);
  CHECK(cfg.printed_v3_sign);
  CHECK(cfg.probe_direction[1] == 1.0);
}

TEST_CASE("write_mesh: counts and byte stability") {
  auto dom = corpus::line_domain();
  auto id = AnalyticScalar::identity(dom);
  auto plane = AnalyticCurve3::make(id, Cplx(0, -1) * id,
                                    AnalyticScalar::constant(dom, 0.0));
  auto g2 = make_grid(plane, -0.5, 0.5, -0.1, 0.1, 2, 2);
  const std::string obj2 = mesh_to_obj(g2);
  int vcount = 0, fcount = 0;
  for (size_t p = 0; p < obj2.size(); ++p) {
    if (p == 0 || obj2[p - 1] == '\n') {
      if (obj2[p] == 'v') ++vcount;
      if (obj2[p] == 'f') ++fcount;
    }
  }
  CHECK(vcount == 4);
  CHECK(fcount == 2);

  auto g = make_grid(plane, -0.5, 0.5, -0.1, 0.1, 64, 32);
  const std::string obj = mesh_to_obj(g);
  vcount = fcount = 0;
  for (size_t p = 0; p < obj.size(); ++p) {
    if (p == 0 || obj[p - 1] == '\n') {
      if (obj[p] == 'v') ++vcount;
      if (obj[p] == 'f') ++fcount;
    }
  }
  CHECK(vcount == 2048);
  CHECK(fcount == 3906);
  CHECK(mesh_to_obj(g) == obj);  // determinism
}

TEST_CASE("CLI: interpolate fixed point, exit 0 and v0 = 0") {
  const auto dir = temp_dir();
  write_file((dir / "a.json").string(), circle_curve_json(0.0));
  const std::string rep = (dir / "fp.csv").string();
  const int rc = run_cli("interpolate --curve " + (dir / "a.json").string() +
                         " --nearby " + (dir / "a.json").string() + " --report " + rep +
                         " > /dev/null 2>&1");
  CHECK(rc == 0);
  const std::string csv = read_file(rep);
  CHECK(csv.find("v0_1,0,") != std::string::npos);
  CHECK(csv.find("v0_2,0,") != std::string::npos);
  CHECK(csv.find("v0_3,0,") != std::string::npos);
  CHECK(csv.find("name,value,symbol") == 0);
}

TEST_CASE("CLI: huge perturbation exits 2") {
  const auto dir = temp_dir();
  write_file((dir / "a2.json").string(), circle_curve_json(0.0));
  write_file((dir / "l2.json").string(), circle_curve_json(10.0));
  const int rc = run_cli("interpolate --curve " + (dir / "a2.json").string() +
                         " --nearby " + (dir / "l2.json").string() + " > /dev/null 2>&1");
  CHECK(WEXITSTATUS(rc) == 2);
}

TEST_CASE("CLI: parse failure exits 4, missing file exits 4") {
  const auto dir = temp_dir();
  write_file((dir / "bad.json").string(), "{broken");
  int rc = run_cli("bjorling --curve " + (dir / "bad.json").string() + " > /dev/null 2>&1");
  CHECK(WEXITSTATUS(rc) == 4);
  rc = run_cli("bjorling --curve " + (dir / "absent.json").string() + " > /dev/null 2>&1");
  CHECK(WEXITSTATUS(rc) == 4);
}

TEST_CASE("CLI: bounds emits satisfied checks for the circle") {
  const auto dir = temp_dir();
  write_file((dir / "a3.json").string(), circle_curve_json(0.0));
  write_file((dir / "cfg3.json").string(), R"({"perm": [2, 3, 1], "anchor_u0": 0.0})");
  const std::string rep = (dir / "bounds.csv").string();
  const int rc = run_cli("bounds --curve " + (dir / "a3.json").string() + " --config " +
                         (dir / "cfg3.json").string() + " --epsilon0 0.1 --report " + rep +
                         " > /dev/null 2>&1");
  CHECK(rc == 0);
  const std::string csv = read_file(rep);
  CHECK(csv.find("violated") == std::string::npos);
  CHECK(csv.find("check.eta_eq_min,satisfied") != std::string::npos);
  CHECK(csv.find("epsilon0_source,supplied") != std::string::npos);
}

TEST_CASE("CLI: identical runs are byte-identical (OBJ and CSV)") {
  const auto dir = temp_dir();
  write_file((dir / "a4.json").string(), circle_curve_json(0.0));
  write_file((dir / "l4.json").string(), circle_curve_json(1e-4));
  write_file((dir / "cfg4.json").string(), R"({"perm": [2, 3, 1], "anchor_u0": 0.0})");
  auto run_once = [&](const std::string& tag) {
    const std::string obj = (dir / ("m" + tag + ".obj")).string();
    const std::string csv = (dir / ("r" + tag + ".csv")).string();
    const int rc = run_cli("interpolate --curve " + (dir / "a4.json").string() +
                           " --nearby " + (dir / "l4.json").string() + " --config " +
                           (dir / "cfg4.json").string() + " --out " + obj + " --report " +
                           csv + " > /dev/null 2>&1");
    REQUIRE(rc == 0);
    return std::pair{read_file(obj), read_file(csv)};
  };
  auto [obj1, csv1] = run_once("1");
  auto [obj2, csv2] = run_once("2");
  CHECK(obj1 == obj2);
  CHECK(csv1 == csv2);
  CHECK(obj1.size() > 1000);
}

TEST_CASE("CLI: verify re-checks an emitted result") {
  const auto dir = temp_dir();
  write_file((dir / "a5.json").string(), circle_curve_json(0.0));
  write_file((dir / "l5.json").string(), circle_curve_json(1e-4));
  write_file((dir / "cfg5.json").string(), R"({"perm": [2, 3, 1], "anchor_u0": 0.0})");
  const std::string obj = (dir / "m5.obj").string();
  int rc = run_cli("interpolate --curve " + (dir / "a5.json").string() + " --nearby " +
                   (dir / "l5.json").string() + " --config " + (dir / "cfg5.json").string() +
                   " --out " + obj + " > /dev/null 2>&1");
  REQUIRE(rc == 0);
  rc = run_cli("verify --curve " + (dir / "a5.json").string() + " --nearby " +
               (dir / "l5.json").string() + " --config " + (dir / "cfg5.json").string() +
               " --out " + obj + " > /dev/null 2>&1");
  CHECK(rc == 0);
  // tamper with the mesh: verify must fail with exit 3
  std::string tampered = read_file(obj);
  tampered[10] = tampered[10] == '1' ? '2' : '1';
  write_file(obj, tampered);
  rc = run_cli("verify --curve " + (dir / "a5.json").string() + " --nearby " +
               (dir / "l5.json").string() + " --config " + (dir / "cfg5.json").string() +
               " --out " + obj + " > /dev/null 2>&1");
  CHECK(WEXITSTATUS(rc) == 3);
}

}  // TEST_SUITE
