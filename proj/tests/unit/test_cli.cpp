#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "bifloquet/serialize.hpp"

using namespace bifloquet;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

// stdout only; stderr (summary lines, diagnostics) is discarded.
CliRun run(const std::string& args) {
  const std::string cmd = std::string(BFQ_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string temp(const std::string& name) { return ::testing::TempDir() + name; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
}

std::string slurp(const std::string& path) {
  std::ifstream is(path);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

const char* kBase = "--Omega 0.1 --N1 3 --N2 1 --omega 1";

}  // namespace

TEST(Cli, GapExample) {
  const CliRun r = run("gap --omega 10 --b 1 --Omega 0 --nu 0 --N1 3 --N2 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("gap 1.4142135", 0), 0u) << r.out;
}

TEST(Cli, GapJson) {
  const CliRun r = run("gap --omega 10 --b 1 --N1 3 --N2 1 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j.at("gap").get<double>(), std::sqrt(2.0), 1e-12);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("gap --no-such-flag 1").code, 2);
  EXPECT_EQ(run("gap --format xml").code, 2);
  EXPECT_EQ(run("gap --omega -1").code, 2);
  EXPECT_EQ(run("sweep2d --b_count 1").code, 2);
}

TEST(Cli, NumericalFailureExitsOne) {
  // I/O failure on the output path.
  EXPECT_EQ(run("gap --output /nonexistent/dir/out.txt").code, 1);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run("--help").code, 0); }

TEST(Cli, LineCsvSchema) {
  const CliRun r = run(std::string("line ") + kBase + " --nu 0.3 --min -0.5 --max 0.5 --count 5");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out),
            "b,Omega1,Omega2,nu,omega,gap,dgap_db,dgap_dOmega,gamma_phi,t_phi,g0,g_N1,g_N2,flags");
  std::istringstream is(r.out);
  EXPECT_EQ(read_table_csv(is).rows.size(), 5u);
}

TEST(Cli, LineToneAxisSchema) {
  const CliRun r = run(std::string("line ") + kBase + " --nu 0.3 --axis Omega1 --min 0 --max 1 --count 3");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out).rfind("Omega1,b,Omega2,", 0), 0u);
}

TEST(Cli, Sweep2dCsvAndJson) {
  const std::string args = std::string("sweep2d ") + kBase +
                           " --b_min -0.5 --b_max 0.5 --b_count 3 --nu_min 0.2 --nu_max 1 "
                           "--nu_count 2 --threads 2";
  const CliRun csv = run(args);
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(first_line(csv.out), kSweepCsvHeader);
  std::istringstream is(csv.out);
  const SweepResult a = read_sweep_csv(is);
  EXPECT_EQ(a.points.size(), 6u);

  const std::string path = temp("cli_sweep.json");
  const std::string spots = temp("cli_spots.json");
  ASSERT_EQ(run(args + " --format json --output " + path + " --sweet_spots " + spots).code, 0);
  const SweepResult b = sweep_from_json(slurp(path));
  ASSERT_EQ(b.points.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(a.points[i].gap, b.points[i].gap);
  EXPECT_EQ(nlohmann::json::parse(slurp(spots)).at("schema"), "sweet_spots");
}

TEST(Cli, Sweep2dOptimalOmega) {
  const CliRun r = run("sweep2d --Omega 0.1 --N1 3 --N2 1 --optimal_omega --b_min 0.1 --b_max 0.3 "
                    "--b_count 2 --nu_min 0.1 --nu_max 0.2 --nu_count 2");
  ASSERT_EQ(r.code, 0);
  std::istringstream is(r.out);
  for (const auto& p : read_sweep_csv(is).points) EXPECT_EQ(p.omega, p.omega_star);
}

TEST(Cli, FastscanSchema) {
  const CliRun r = run("fastscan --omega 10 --N1 3 --N2 1 --m 1 --l -2 --Omega2 1 --delta 0.01 "
                    "--Omega1_min 0 --Omega1_max 30 --Omega1_count 4");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out),
            "Omega1,b,Omega2,delta,gap,gap_rwa,gap_gvv,gap_gvv_matrix,chi,dgap_db,"
            "dgap_db_gvv,gamma_phi,t_phi,flags");
}

TEST(Cli, DeltascanSchema) {
  const CliRun r = run("deltascan --omega 10 --N1 3 --N2 1 --m 1 --l -2 --Omega2 1 --Omega1 5,9 "
                    "--inv_delta_min 10 --inv_delta_max 100 --inv_delta_count 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "Omega1,delta,inv_delta,b,gap,dgap_db,gamma_phi,t_phi,flags");
  std::istringstream is(r.out);
  EXPECT_EQ(read_table_csv(is).rows.size(), 4u);
  EXPECT_EQ(run("deltascan --omega 10 --N1 3 --N2 1").code, 2);
}

TEST(Cli, WeightsAndOptimalOmega) {
  const CliRun w = run(std::string("weights ") + kBase + " --b 0.3 --nu 0.4 --harmonics 2");
  ASSERT_EQ(w.code, 0);
  EXPECT_EQ(first_line(w.out), "k,g");
  EXPECT_EQ(std::count(w.out.begin(), w.out.end(), '\n'), 6);
  const CliRun o = run("optimal-omega --Omega 0.1 --N1 3 --N2 1 --b 0.3 --nu 0.1 --format json");
  ASSERT_EQ(o.code, 0);
  EXPECT_GT(nlohmann::json::parse(o.out).at("omega_star").get<double>(), 1.0);
}

TEST(Cli, ConfigFilePrecedence) {
  const std::string cfg = temp("cli.cfg");
  write_file(cfg, "# static qubit\nomega = 10\nb = 1\nN1 = 3\nN2 = 1\n");
  CliRun r = run("gap --config " + cfg);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("gap 1.4142135", 0), 0u);
  r = run("gap --config " + cfg + " --b 0");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("gap 1 ", 0), 0u) << r.out;
}

TEST(Cli, ConfigFileErrors) {
  const std::string bad_key = temp("bad_key.cfg");
  write_file(bad_key, "omega = 10\nbogus = 3\n");
  EXPECT_EQ(run("gap --config " + bad_key).code, 2);
  const std::string bad_line = temp("bad_line.cfg");
  write_file(bad_line, "omega 10\n");
  EXPECT_EQ(run("gap --config " + bad_line).code, 2);
  EXPECT_EQ(run("gap --config /nonexistent.cfg").code, 2);
}

TEST(Cli, Selftest) {
  const CliRun r = run("selftest");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("selftest: passed"), std::string::npos);
}
