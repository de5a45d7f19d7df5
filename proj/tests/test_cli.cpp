#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "plepair/couplings.hpp"
#include "plepair/io.hpp"
#include "plepair/types.hpp"

namespace fs = std::filesystem;
using namespace plepair;

namespace {

struct Sandbox {
  fs::path dir;
  Sandbox() {
    dir = fs::temp_directory_path() /
          ("plepair_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Sandbox() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
  fs::path write(const std::string& name, const std::string& text) const {
    const fs::path p = dir / name;
    std::ofstream(p) << text;
    return p;
  }
};

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const Sandbox& box, const std::string& args) {
  const fs::path capture = box.dir / "capture.txt";
  const std::string cmd = std::string("\"") + PLEPAIR_CLI_PATH + "\" " + args +
                          " > \"" + capture.string() + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(capture);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.output = buf.str();
  return r;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* kPerpConfig = R"({
  "xi": 1.5707963267948966,
  "theta": 1.5707963267948966,
  "phi": 1.5707963267948966,
  "r12_lambda": 0.08,
  "rabi1": 2.0,
  "rabi2": 2.0,
  "detuning_min": -16.0,
  "detuning_max": 16.0,
  "detuning_steps": 321
})";

}  // namespace

TEST_CASE("couplings subcommand matches library values digit for digit") {
  Sandbox box;
  const auto cfg = box.write("cfg.json", kPerpConfig);
  const RunResult r = run_cli(box, "couplings --config \"" + cfg.string() + "\"");
  REQUIRE(r.exit_code == 0);

  PairParams p;
  p.rabi1 = 2.0;
  p.rabi2_override = 2.0;
  const double x = k0_lambda * 0.08;
  const std::string expected = format_double(pi / 2) + "," +
                               format_double(gamma_12(p, x, pi / 2)) + "," +
                               format_double(omega_12(p, x, pi / 2));
  CHECK(r.output.find(expected) != std::string::npos);

  const RunResult sweep =
      run_cli(box, "couplings --config \"" + cfg.string() + "\" --theta-sweep 11");
  REQUIRE(sweep.exit_code == 0);
  CHECK(std::count(sweep.output.begin(), sweep.output.end(), '\n') == 12);
}

TEST_CASE("missing required key exits 1 and names the key") {
  Sandbox box;
  const auto cfg = box.write("bad.json", R"({"xi": 1.5707963267948966,
    "theta": 1.5707963267948966, "phi": 0.0, "rabi1": 2.0})");
  const RunResult r = run_cli(box, "steady --config \"" + cfg.string() + "\"");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("r12_lambda") != std::string::npos);
}

TEST_CASE("unknown key exits 1") {
  Sandbox box;
  const auto cfg = box.write("bad.json", R"({"xi": 1.5707963267948966,
    "theta": 1.5707963267948966, "phi": 0.0, "r12_lambda": 0.08, "raby1": 1.0})");
  const RunResult r = run_cli(box, "ple --config \"" + cfg.string() + "\"");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("raby1") != std::string::npos);
}

TEST_CASE("ple subcommand emits spectrum, peak table and svg deterministically") {
  Sandbox box;
  const auto cfg = box.write("cfg.json", kPerpConfig);
  const fs::path csv1 = box.dir / "a.csv";
  const fs::path csv2 = box.dir / "b.csv";
  const fs::path svg = box.dir / "plot.svg";

  const RunResult r1 = run_cli(box, "ple --config \"" + cfg.string() + "\" --out \"" +
                                        csv1.string() + "\" --svg \"" + svg.string() + "\"");
  REQUIRE(r1.exit_code == 0);
  const RunResult r2 =
      run_cli(box, "ple --config \"" + cfg.string() + "\" --out \"" + csv2.string() + "\"");
  REQUIRE(r2.exit_code == 0);

  const std::string body = read_file(csv1);
  CHECK(body.rfind("detuning,intensity\n", 0) == 0);
  CHECK(body.find("\nkind,position,height\n") != std::string::npos);
  CHECK(body.find("maximum,") != std::string::npos);
  CHECK(body == read_file(csv2));

  const std::string svg_body = read_file(svg);
  CHECK(svg_body.find("<svg") != std::string::npos);
  CHECK(svg_body.find("detuning (gamma_1 units)") != std::string::npos);
  CHECK(svg_body.find("intensity (arb. units)") != std::string::npos);

  // peak table carries the superradiant resonance near the computed shift
  PairParams p;
  p.rabi1 = 2.0;
  const double o12 = omega_12(p, k0_lambda * 0.08, pi / 2);
  std::istringstream lines(body.substr(body.find("kind,position,height")));
  std::string line;
  std::getline(lines, line);
  bool near_zero = false, near_o12 = false;
  while (std::getline(lines, line)) {
    if (line.rfind("maximum,", 0) != 0) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    const double pos = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
    if (std::abs(pos) <= 1.0) near_zero = true;
    if (std::abs(pos - o12) <= 1.0) near_o12 = true;
  }
  CHECK(near_zero);
  CHECK(near_o12);
}

TEST_CASE("steady subcommand reports both bases and the residual") {
  Sandbox box;
  const auto cfg = box.write("cfg.json", kPerpConfig);
  const RunResult r = run_cli(box, "steady --config \"" + cfg.string() + "\"");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("basis,row,col,real,imag") != std::string::npos);
  CHECK(r.output.find("product,0,0,") != std::string::npos);
  CHECK(r.output.find("collective,3,3,") != std::string::npos);
  CHECK(r.output.find("residual_max_norm,") != std::string::npos);
}

TEST_CASE("solver failures exit 2") {
  Sandbox box;
  const auto cfg = box.write("dark.json", R"({
    "xi": 1.5707963267948966, "theta": 1.5707963267948966,
    "phi": 1.5707963267948966, "r12_lambda": 1e-9, "rabi1": 1.0
  })");
  const RunResult r = run_cli(box, "steady --config \"" + cfg.string() + "\"");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("solver error") != std::string::npos);
}

TEST_CASE("polscan emits the surface and the trail") {
  Sandbox box;
  const auto cfg = box.write("scan.json", R"({
    "xi": 1.5707963267948966, "theta": 0.0,
    "phi": 1.5707963267948966, "r12_lambda": 0.08,
    "rabi1": 0.2, "delta_omega": 10.0,
    "detuning_min": -30.0, "detuning_max": 30.0, "detuning_steps": 241,
    "theta_min": 0.2, "theta_max": 1.4, "theta_steps": 4
  })");
  const RunResult r = run_cli(box, "polscan --config \"" + cfg.string() + "\"");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.rfind("theta,detuning,intensity\n", 0) == 0);
  CHECK(r.output.find("\ntheta,trail\n") != std::string::npos);
  CHECK(std::count(r.output.begin(), r.output.end(), '\n') >= 4 * 241 + 6);
}

TEST_CASE("selftest passes") {
  Sandbox box;
  const RunResult r = run_cli(box, "selftest");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("PASS") != std::string::npos);
  CHECK(r.output.find("FAIL") == std::string::npos);
}
