// End-to-end tests of the command-line binary: spawns the real
// executable (path injected at build time) and checks exit codes and
// output bytes, including the stability of the CSV formatting.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#ifndef MINGATE_CLI_PATH
#error "MINGATE_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(MINGATE_CLI_PATH) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  REQUIRE(out.good());
  out << text;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("device reports for a semiconducting tube") {
  const RunResult r = run("device 19 0");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "semiconducting"));
  CHECK(contains(r.out, "1.4875"));
  CHECK(contains(r.out, "0.2891"));
}

TEST_CASE("device reports a metallic tube without a threshold") {
  const RunResult r = run("device 9 0");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "metallic"));
}

TEST_CASE("device rejects the degenerate chirality") {
  CHECK(run("device 0 0 2>/dev/null").exit_code == 2);
}

TEST_CASE("device json report carries full precision") {
  const RunResult r = run("device 19 0 --json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"diameter_nm\""));
  CHECK(contains(r.out, "1.487485359847995"));
}

TEST_CASE("truth table is weight-compressed by default") {
  const RunResult r = run("truthtable 7");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 9);  // header + 8 weights
  CHECK(contains(r.out, "weight output"));
}

TEST_CASE("full truth table emits one CSV row per vector") {
  const RunResult r = run("truthtable 3 --full");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "vector,output"));
  CHECK(contains(r.out, "000,1"));
  CHECK(contains(r.out, "111,0"));
  std::istringstream lines(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 9);  // header + 8 vectors
}

TEST_CASE("truth table bounds") {
  CHECK(run("truthtable 0 2>/dev/null").exit_code == 2);
  CHECK(run("truthtable 25 2>/dev/null").exit_code == 2);
}

TEST_CASE("cost summary for the seven-input gate") {
  const RunResult r = run("cost 7");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "sop terms: 64"));
  CHECK(contains(r.out, "conventional transistors: 896"));
  CHECK(contains(r.out, "proposed devices: 9"));
  CHECK(contains(r.out, "98.995"));
  CHECK(run("cost 4 2>/dev/null").exit_code == 2);
}

TEST_CASE("eval decodes a weight-3 vector high") {
  const RunResult r = run("eval --vector 0000111");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "logic: one"));
  // no vector given anywhere: validation error
  CHECK(run("eval 2>/dev/null").exit_code == 2);
}

TEST_CASE("check passes on defaults and fails outside the window") {
  CHECK(run("check").exit_code == 0);
  write_file("/tmp/mingate_cli_vsw.json", R"({"vtc":{"v_sw":0.30}})");
  const RunResult r = run("check --config /tmp/mingate_cli_vsw.json");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "FAIL"));
  std::remove("/tmp/mingate_cli_vsw.json");
}

TEST_CASE("config is also picked up from the environment") {
  write_file("/tmp/mingate_cli_env.json", R"({"vtc":{"v_sw":0.30}})");
  const RunResult r = run("check 2>/dev/null");
  CHECK(r.exit_code == 0);  // without the variable the default config passes
  const std::string cmd = "MINGATE_CONFIG=/tmp/mingate_cli_env.json " +
                          std::string(MINGATE_CLI_PATH) + " check";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 256> buf{};
  while (fread(buf.data(), 1, buf.size(), pipe) > 0) {
  }
  const int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 1);
  std::remove("/tmp/mingate_cli_env.json");
}

TEST_CASE("unknown config keys are rejected") {
  write_file("/tmp/mingate_cli_bad.json", R"({"vtc":{"v_sw":0.30},"bogus":1})");
  CHECK(run("check --config /tmp/mingate_cli_bad.json 2>/dev/null").exit_code ==
        2);
  std::remove("/tmp/mingate_cli_bad.json");
}

TEST_CASE("derive verifies the nand and nor constructions") {
  const RunResult nand = run("derive nand 4");
  CHECK(nand.exit_code == 0);
  CHECK(contains(nand.out, "base width: 7"));
  CHECK(contains(nand.out, "constant 0"));
  CHECK(contains(nand.out, "verified"));
  const RunResult nor = run("derive nor 4");
  CHECK(nor.exit_code == 0);
  CHECK(contains(nor.out, "constant 1"));
  CHECK(run("derive xor 4 2>/dev/null").exit_code == 2);
}

TEST_CASE("sweep emits the pinned CSV header and a monotone delay column") {
  const RunResult r = run("sweep 2>/dev/null");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "param,delay_s,energy_j");
  double prev = -1.0;
  int rows = 0;
  while (std::getline(lines, line)) {
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    REQUIRE(c1 != std::string::npos);
    REQUIRE(c2 != std::string::npos);
    const double delay = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
    CHECK(delay > prev);
    prev = delay;
    ++rows;
  }
  CHECK(rows == 10);
}

TEST_CASE("calibrate echoes an exact synthetic model in stable bytes") {
  write_file("/tmp/mingate_cli_cal.json",
             R"({"calibrate":{"points":[[2e-15,1.3862943611198906e-12],)"
             R"([4e-15,2.7725887222397812e-12]]}})");
  const RunResult r = run("calibrate --config /tmp/mingate_cli_cal.json");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "r_eff_ohm,c_par_f\n1.00000e+03,0.00000e+00\n");
  std::remove("/tmp/mingate_cli_cal.json");
}

TEST_CASE("calibrate distinguishes bad input from an infeasible fit") {
  write_file("/tmp/mingate_cli_deg.json",
             R"({"calibrate":{"points":[[2e-15,5e-12],[2e-15,6e-12]]}})");
  CHECK(run("calibrate --config /tmp/mingate_cli_deg.json 2>/dev/null")
            .exit_code == 2);
  std::remove("/tmp/mingate_cli_deg.json");

  write_file("/tmp/mingate_cli_neg.json",
             R"({"calibrate":{"points":[[2e-15,6e-12],[4e-15,5e-12]]}})");
  CHECK(run("calibrate --config /tmp/mingate_cli_neg.json 2>/dev/null")
            .exit_code == 1);
  std::remove("/tmp/mingate_cli_neg.json");
}

TEST_CASE("monte carlo at zero variation yields one, reproducibly") {
  write_file("/tmp/mingate_cli_mc.json",
             R"({"variation":{"sigma_rel":0.0,"trials":50,"seed":9}})");
  const RunResult a = run("mc --config /tmp/mingate_cli_mc.json");
  CHECK(a.exit_code == 0);
  CHECK(a.out == "sigma_rel,trials,yield\n0.00000e+00,50,1.00000e+00\n");
  const RunResult b = run("mc --config /tmp/mingate_cli_mc.json");
  CHECK(a.out == b.out);
  std::remove("/tmp/mingate_cli_mc.json");
}

TEST_CASE("out flag writes the report to a file") {
  const RunResult r = run("sweep --out /tmp/mingate_cli_sweep.csv 2>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in("/tmp/mingate_cli_sweep.csv");
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "param,delay_s,energy_j");
  in.close();
  std::remove("/tmp/mingate_cli_sweep.csv");
}

TEST_CASE("bundled tables ship with passing consistency checks") {
  const RunResult t3 = run("paperdata table3");
  CHECK(t3.exit_code == 0);
  CHECK(contains(t3.out, "PASS"));
  CHECK(run("paperdata table4").exit_code == 0);
  const RunResult t5 = run("paperdata table5");
  CHECK(t5.exit_code == 0);
  CHECK(contains(t5.out, "49.7"));
  CHECK(run("paperdata table9 2>/dev/null").exit_code == 2);
}
