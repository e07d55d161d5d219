// Command-line front end. Talks to the simulator only through bifloquet.h.

#include <bifloquet/bifloquet.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNumerical = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  bfq_drive drive = bfq_drive_default();
  bfq_noise noise = bfq_noise_default();
  int n_max = 0;
  int k_max = 0;
  int threads = 1;
  std::string format = "csv";
  std::string output = "-";

  // line
  std::string axis = "b";
  double min = -1.0;
  double max = 1.0;
  int count = 101;

  // sweep2d
  double b_min = -1.0, b_max = 1.0;
  int b_count = 201;
  double nu_min = 0.0, nu_max = 1.5707963267948966;
  int nu_count = 201;
  bool optimal_omega = false;
  std::string sweet_spots;
  double tol_dc = 1e-4, tol_ac = 1e-3, sour_threshold = 1e-1;

  // fastscan / deltascan
  int m = 1, l = 0;
  double delta = 0.01;
  double omega2 = 0.0;
  double omega1_min = 0.0, omega1_max = 30.0;
  int omega1_count = 201;
  int j_max = 40;
  std::vector<double> omega1_values;
  double inv_delta_min = 10.0, inv_delta_max = 1e4;
  int inv_delta_count = 13;

  // weights
  int harmonics = 0;
};

struct CliFailure {
  int exit_code;
  std::string message;
};

int exit_code_for(bfq_status s) {
  switch (s) {
    case BFQ_OK: return kExitOk;
    case BFQ_ERR_INVALID_ARGUMENT:
    case BFQ_ERR_PARSE: return kExitUsage;
    default: return kExitNumerical;
  }
}

void check(bfq_status s, const bfq_context* ctx) {
  if (s == BFQ_OK) return;
  std::string msg = bfq_status_string(s);
  const std::string detail = bfq_last_error(ctx);
  if (!detail.empty()) msg += ": " + detail;
  throw CliFailure{exit_code_for(s), msg};
}

bfq_format format_of(const RunConfig& c) {
  return c.format == "json" ? BFQ_FORMAT_JSON : BFQ_FORMAT_CSV;
}

// The summary goes to stderr when the data itself is on stdout.
std::ostream& summary_stream(const RunConfig& c) {
  return c.output == "-" ? std::cerr : std::cout;
}

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string short_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.8g", v);
  return buf;
}

void add_drive_options(CLI::App* app, RunConfig& c) {
  app->add_option("--w_q", c.drive.w_q, "qubit splitting (energy unit)")->capture_default_str();
  app->add_option("--omega", c.drive.omega, "base drive frequency")->capture_default_str();
  app->add_option("--b", c.drive.b, "static bias")->capture_default_str();
  app->add_option("--Omega", c.drive.big_omega, "total drive amplitude")->capture_default_str();
  app->add_option("--nu", c.drive.nu, "tone mixing angle")->capture_default_str();
  app->add_option("--N1", c.drive.n1, "first tone harmonic")->capture_default_str();
  app->add_option("--N2", c.drive.n2, "second tone harmonic")->capture_default_str();
}

void add_common_options(CLI::App* app, RunConfig& c, bool with_output) {
  app->add_option("--v_f", c.noise.v_f, "1/f noise amplitude")->capture_default_str();
  app->add_option("--v_d", c.noise.v_d, "thermal noise prefactor")->capture_default_str();
  app->add_option("--ir_factor", c.noise.ir_factor, "infrared log factor")
      ->capture_default_str();
  app->add_option("--temp_ratio", c.noise.temp_ratio, "w_q / k_B T")->capture_default_str();
  app->add_option("--n_max", c.n_max, "harmonic cutoff (0 = automatic)")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--k_max", c.k_max, "Fourier weight cutoff (0 = automatic)")
      ->check(CLI::NonNegativeNumber);
  if (with_output) {
    app->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app->add_option("--output,-o", c.output, "output path, - for stdout")
        ->capture_default_str();
  }
}

void add_resonance_options(CLI::App* app, RunConfig& c) {
  app->add_option("--m", c.m, "tone-1 photon number")->capture_default_str();
  app->add_option("--l", c.l, "tone-2 photon number")->capture_default_str();
  app->add_option("--Omega2", c.omega2, "tone-2 amplitude")->capture_default_str();
}

bfq_context* make_context(const RunConfig& c) {
  bfq_context* ctx = nullptr;
  if (bfq_context_create(&ctx) != BFQ_OK) throw CliFailure{kExitNumerical, "out of memory"};
  try {
    check(bfq_context_set_noise(ctx, &c.noise), ctx);
    check(bfq_context_set_truncation(ctx, c.n_max, c.k_max), ctx);
    check(bfq_context_set_threads(ctx, c.threads), ctx);
  } catch (...) {
    bfq_context_destroy(ctx);
    throw;
  }
  return ctx;
}

struct ContextHolder {
  bfq_context* ctx;
  explicit ContextHolder(const RunConfig& c) : ctx(make_context(c)) {}
  ~ContextHolder() { bfq_context_destroy(ctx); }
  ContextHolder(const ContextHolder&) = delete;
  ContextHolder& operator=(const ContextHolder&) = delete;
};

void write_text(const RunConfig& c, const std::string& text) {
  if (c.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(c.output);
  if (!os) throw CliFailure{kExitNumerical, "cannot open '" + c.output + "' for writing"};
  os << text;
  if (!os) throw CliFailure{kExitNumerical, "write to '" + c.output + "' failed"};
}

bfq_drive tone2_drive(const RunConfig& c) {
  bfq_drive d = c.drive;
  d.big_omega = c.omega2;
  d.nu = 1.5707963267948966;
  return d;
}

std::string flag_tokens(uint32_t flags) {
  static const char* names[] = {"degenerate", "tracking_warn", "gvv_invalid",
                                "one_sided",  "truncation_warn", "failed"};
  std::string out;
  for (int i = 0; i < 6; ++i) {
    if (!(flags & (1u << i))) continue;
    if (!out.empty()) out += ';';
    out += names[i];
  }
  return out;
}

int flag_count(const bfq_table* t, uint32_t mask) {
  int n = 0;
  for (size_t i = 0; i < bfq_table_rows(t); ++i) n += (bfq_table_flags(t, i) & mask) ? 1 : 0;
  return n;
}

size_t column_of(const bfq_table* t, const std::string& name) {
  for (size_t j = 0; j < bfq_table_columns(t); ++j) {
    if (name == bfq_table_column_name(t, j)) return j;
  }
  return static_cast<size_t>(-1);
}

double column_max(const bfq_table* t, const std::string& name) {
  const size_t j = column_of(t, name);
  double best = std::nan("");
  for (size_t i = 0; i < bfq_table_rows(t); ++i) {
    const double v = bfq_table_value(t, i, j);
    if (!std::isnan(v) && !(best >= v)) best = v;
  }
  return best;
}

// ---- subcommands ----

int run_gap(const RunConfig& c) {
  ContextHolder h(c);
  bfq_point p{};
  check(bfq_point_evaluate(h.ctx, &c.drive, &p), h.ctx);
  double ep = 0, em = 0;
  check(bfq_quasienergies(h.ctx, &c.drive, &ep, &em), h.ctx);
  if (c.format == "json") {
    nlohmann::json j = {{"gap", p.gap},           {"eps_plus", ep},
                        {"eps_minus", em},        {"dgap_db", p.dgap_db},
                        {"dgap_dOmega", p.dgap_domega}, {"gamma_phi", p.gamma_phi},
                        {"g0", p.g0},             {"t_phi", p.t_phi}};
    for (auto& [k, v] : j.items()) {
      if (v.is_number_float() && !std::isfinite(v.get<double>())) v = num(v.get<double>());
    }
    j["flags"] = flag_tokens(p.flags);
    write_text(c, j.dump() + "\n");
    return kExitOk;
  }
  std::ostringstream os;
  os << "gap " << num(p.gap) << " eps+ " << num(ep) << " eps- " << num(em) << " dgap_db "
     << num(p.dgap_db) << " dgap_dOmega " << num(p.dgap_domega) << " gamma_phi "
     << num(p.gamma_phi) << " t_phi " << num(p.t_phi);
  if (p.flags != 0) os << " flags " << flag_tokens(p.flags);
  os << '\n';
  write_text(c, os.str());
  return kExitOk;
}

int run_weights(const RunConfig& c) {
  ContextHolder h(c);
  int k = c.harmonics;
  if (k <= 0) k = 4 * std::max(std::abs(c.drive.n1), std::abs(c.drive.n2));
  std::vector<double> w(2 * k + 1);
  check(bfq_weights(h.ctx, &c.drive, k, w.data(), w.size()), h.ctx);
  std::ostringstream os;
  if (c.format == "json") {
    nlohmann::json j;
    j["schema"] = "weights";
    j["k"] = nlohmann::json::array();
    j["g"] = nlohmann::json::array();
    for (int i = -k; i <= k; ++i) {
      j["k"].push_back(i);
      j["g"].push_back(w[i + k]);
    }
    os << j.dump() << '\n';
  } else {
    os << "k,g\n";
    for (int i = -k; i <= k; ++i) os << i << ',' << num(w[i + k]) << '\n';
  }
  write_text(c, os.str());
  summary_stream(c) << "weights: " << (2 * k + 1) << " harmonics, g0 " << short_num(w[k])
                    << '\n';
  return kExitOk;
}

int run_optimal_omega(const RunConfig& c) {
  ContextHolder h(c);
  double w = 0;
  check(bfq_optimal_omega(h.ctx, &c.drive, &w), h.ctx);
  bfq_drive d = c.drive;
  d.omega = w;
  bfq_point p{};
  check(bfq_point_evaluate(h.ctx, &d, &p), h.ctx);
  std::ostringstream os;
  if (c.format == "json") {
    nlohmann::json j = {{"omega_star", w}, {"gap", p.gap}, {"dgap_db", p.dgap_db}};
    os << j.dump() << '\n';
  } else {
    os << "omega_star " << num(w) << " gap " << num(p.gap) << " dgap_db " << num(p.dgap_db)
       << '\n';
  }
  write_text(c, os.str());
  return kExitOk;
}

int finish_table(const RunConfig& c, bfq_context* ctx, bfq_table* t, const char* name,
                 const std::string& summary) {
  const bfq_status s = bfq_table_write(ctx, t, c.output.c_str(), format_of(c), name);
  const int failed = flag_count(t, BFQ_FLAG_FAILED);
  const size_t rows = bfq_table_rows(t);
  bfq_table_destroy(t);
  check(s, ctx);
  summary_stream(c) << name << ": " << rows << " rows, " << summary;
  if (failed > 0) summary_stream(c) << ", " << failed << " failed";
  summary_stream(c) << '\n';
  return failed > 0 ? kExitNumerical : kExitOk;
}

int run_line(const RunConfig& c) {
  ContextHolder h(c);
  const bfq_line_axis axis = c.axis == "b" ? BFQ_AXIS_BIAS : BFQ_AXIS_TONE1;
  bfq_table* t = nullptr;
  check(bfq_line(h.ctx, &c.drive, axis, {c.min, c.max, c.count}, &t), h.ctx);
  return finish_table(c, h.ctx, t, "line", "max t_phi " + short_num(column_max(t, "t_phi")));
}

int run_fastscan(const RunConfig& c) {
  ContextHolder h(c);
  const bfq_drive d = tone2_drive(c);
  bfq_table* t = nullptr;
  check(bfq_fastscan(h.ctx, &d, c.m, c.l, c.delta, {c.omega1_min, c.omega1_max, c.omega1_count},
                     c.j_max, &t),
        h.ctx);
  const size_t gap = column_of(t, "gap"), rwa = column_of(t, "gap_rwa"),
               gvv = column_of(t, "gap_gvv");
  int wins = 0, n = 0;
  for (size_t i = 0; i < bfq_table_rows(t); ++i) {
    const double e = bfq_table_value(t, i, gap);
    const double er = std::abs(bfq_table_value(t, i, rwa) - e);
    const double eg = std::abs(bfq_table_value(t, i, gvv) - e);
    if (std::isnan(er) || std::isnan(eg)) continue;
    ++n;
    wins += eg < er ? 1 : 0;
  }
  return finish_table(c, h.ctx, t, "fastscan",
                      "gvv closer than rwa at " + std::to_string(wins) + "/" + std::to_string(n));
}

int run_deltascan(const RunConfig& c) {
  if (c.omega1_values.empty()) throw CliFailure{kExitUsage, "deltascan needs --Omega1"};
  if (c.inv_delta_count < 1 || !(c.inv_delta_min > 0) || !(c.inv_delta_max >= c.inv_delta_min)) {
    throw CliFailure{kExitUsage, "invalid 1/delta range"};
  }
  std::vector<double> deltas;
  for (int i = 0; i < c.inv_delta_count; ++i) {
    const double f = c.inv_delta_count == 1 ? 0.0 : double(i) / (c.inv_delta_count - 1);
    deltas.push_back(1.0 / std::exp(std::log(c.inv_delta_min) +
                                    f * (std::log(c.inv_delta_max) - std::log(c.inv_delta_min))));
  }
  ContextHolder h(c);
  const bfq_drive d = tone2_drive(c);
  bfq_table* t = nullptr;
  check(bfq_deltascan(h.ctx, &d, c.m, c.l, c.omega1_values.data(), c.omega1_values.size(),
                      deltas.data(), deltas.size(), &t),
        h.ctx);
  return finish_table(c, h.ctx, t, "deltascan", "max t_phi " + short_num(column_max(t, "t_phi")));
}

int run_sweep2d(const RunConfig& c) {
  ContextHolder h(c);
  bfq_sweep* s = nullptr;
  check(bfq_sweep2d(h.ctx, &c.drive, {c.b_min, c.b_max, c.b_count},
                    {c.nu_min, c.nu_max, c.nu_count}, c.optimal_omega ? 1 : 0, c.drive.omega,
                    &s),
        h.ctx);
  struct Guard {
    bfq_sweep* s;
    ~Guard() { bfq_sweep_destroy(s); }
  } g{s};

  check(bfq_sweep_write(h.ctx, s, c.output.c_str(), format_of(c)), h.ctx);
  size_t n_dc = 0, n_doubly = 0, n_sour = 0;
  check(bfq_sweet_spots(h.ctx, s, c.tol_dc, c.tol_ac, c.sour_threshold, &n_dc, &n_doubly,
                        &n_sour),
        h.ctx);
  if (!c.sweet_spots.empty()) {
    check(bfq_sweet_spots_write(h.ctx, s, c.tol_dc, c.tol_ac, c.sour_threshold,
                                c.sweet_spots.c_str()),
          h.ctx);
  }
  size_t n_b = 0, n_nu = 0, failed = 0;
  bfq_sweep_size(s, &n_b, &n_nu);
  for (size_t i = 0; i < n_nu; ++i) {
    for (size_t j = 0; j < n_b; ++j) {
      bfq_point p{};
      bfq_sweep_point(s, i, j, &p);
      failed += (p.flags & BFQ_FLAG_FAILED) ? 1 : 0;
    }
  }
  summary_stream(c) << "sweep2d: " << n_b << "x" << n_nu << " points, max t_phi "
                    << short_num(bfq_sweep_max_t_phi(s)) << ", dc sweet " << n_dc
                    << ", doubly sweet " << n_doubly << ", sour " << n_sour;
  if (failed > 0) summary_stream(c) << ", " << failed << " failed";
  summary_stream(c) << '\n';
  return failed > 0 ? kExitNumerical : kExitOk;
}

int run_selftest(const RunConfig& c) {
  ContextHolder h(c);
  int ok = 0;
  check(bfq_selftest(h.ctx, &ok), h.ctx);
  std::cout << bfq_selftest_report(h.ctx);
  std::cout << "selftest: " << (ok ? "passed" : "FAILED") << '\n';
  return ok ? kExitOk : kExitNumerical;
}

// ---- config file ----

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw CliFailure{kExitUsage, "cannot read config file '" + path + "'"};
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw CliFailure{kExitUsage, path + ":" + std::to_string(lineno) + ": expected key = value"};
    }
    const std::string key = trim(t.substr(0, eq));
    if (key.empty()) {
      throw CliFailure{kExitUsage, path + ":" + std::to_string(lineno) + ": empty key"};
    }
    out.emplace_back(key, trim(t.substr(eq + 1)));
  }
  return out;
}

bool given_on_command_line(const std::vector<std::string>& args, const std::string& flag) {
  for (const auto& a : args) {
    if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
  }
  return false;
}

// Config values are spliced in ahead of the user's own arguments so that
// anything given explicitly wins.
std::vector<std::string> apply_config(CLI::App& app, const std::vector<std::string>& args) {
  std::string config_path;
  std::vector<std::string> rest;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw CliFailure{kExitUsage, "--config needs a path"};
      config_path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (config_path.empty()) return rest;
  if (rest.empty() || rest[0].empty() || rest[0][0] == '-') {
    throw CliFailure{kExitUsage, "--config must follow a subcommand"};
  }
  CLI::App* sub = nullptr;
  try {
    sub = app.get_subcommand(rest[0]);
  } catch (const CLI::OptionNotFound&) {
    throw CliFailure{kExitUsage, "unknown subcommand '" + rest[0] + "'"};
  }

  std::vector<std::string> injected;
  for (const auto& [key, value] : read_config(config_path)) {
    const std::string flag = "--" + key;
    const CLI::Option* opt = sub->get_option_no_throw(flag);
    if (opt == nullptr) {
      throw CliFailure{kExitUsage, "unknown config key '" + key + "' for " + rest[0]};
    }
    if (given_on_command_line(rest, flag)) continue;
    if (opt->get_type_size() == 0) {
      if (value == "true" || value == "1" || value.empty()) injected.push_back(flag);
      else if (value != "false" && value != "0")
        throw CliFailure{kExitUsage, "config key '" + key + "' expects true/false"};
    } else {
      injected.push_back(flag + "=" + value);
    }
  }
  std::vector<std::string> out{rest[0]};
  out.insert(out.end(), injected.begin(), injected.end());
  out.insert(out.end(), rest.begin() + 1, rest.end());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig c;
  CLI::App app{"Bichromatic Floquet qubit simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(bfq_version()));
  app.add_option("--config", "key = value file; explicit flags take precedence");

  auto* gap = app.add_subcommand("gap", "quasienergy gap and sensitivities at one point");
  add_drive_options(gap, c);
  add_common_options(gap, c, true);

  auto* weights = app.add_subcommand("weights", "Fourier weights of the dephasing operator");
  add_drive_options(weights, c);
  add_common_options(weights, c, true);
  weights->add_option("--harmonics", c.harmonics, "largest |k| (0 = 4 max(N1, N2))")
      ->check(CLI::NonNegativeNumber);

  auto* line = app.add_subcommand("line", "1D scan along the bias or the tone-1 amplitude");
  add_drive_options(line, c);
  add_common_options(line, c, true);
  line->add_option("--axis", c.axis, "scanned coordinate")
      ->check(CLI::IsMember({"b", "Omega1"}))
      ->capture_default_str();
  line->add_option("--min", c.min)->capture_default_str();
  line->add_option("--max", c.max)->capture_default_str();
  line->add_option("--count", c.count)->capture_default_str();

  auto* sweep = app.add_subcommand("sweep2d", "(b, nu) grid of gaps, sensitivities and T_phi");
  add_drive_options(sweep, c);
  add_common_options(sweep, c, true);
  sweep->add_option("--b_min", c.b_min)->capture_default_str();
  sweep->add_option("--b_max", c.b_max)->capture_default_str();
  sweep->add_option("--b_count", c.b_count)->capture_default_str();
  sweep->add_option("--nu_min", c.nu_min)->capture_default_str();
  sweep->add_option("--nu_max", c.nu_max)->capture_default_str();
  sweep->add_option("--nu_count", c.nu_count)->capture_default_str();
  sweep->add_flag("--optimal_omega", c.optimal_omega, "use omega* per point instead of --omega");
  sweep->add_option("--threads", c.threads, "workers (0 = all cores)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sweep->add_option("--sweet_spots", c.sweet_spots, "write the sweet-spot report (JSON) here");
  sweep->add_option("--tol_dc", c.tol_dc)->capture_default_str();
  sweep->add_option("--tol_ac", c.tol_ac)->capture_default_str();
  sweep->add_option("--sour_threshold", c.sour_threshold)->capture_default_str();

  auto* fast = app.add_subcommand("fastscan", "exact, RWA and GVV gaps near a resonance");
  add_drive_options(fast, c);
  add_common_options(fast, c, true);
  add_resonance_options(fast, c);
  fast->add_option("--delta", c.delta, "detuning from resonance")->capture_default_str();
  fast->add_option("--Omega1_min", c.omega1_min)->capture_default_str();
  fast->add_option("--Omega1_max", c.omega1_max)->capture_default_str();
  fast->add_option("--Omega1_count", c.omega1_count)->capture_default_str();
  fast->add_option("--j_max", c.j_max, "Stark-shift harmonic cutoff")->capture_default_str();

  auto* dscan = app.add_subcommand("deltascan", "T_phi against inverse detuning");
  add_drive_options(dscan, c);
  add_common_options(dscan, c, true);
  add_resonance_options(dscan, c);
  dscan->add_option("--Omega1", c.omega1_values, "tone-1 amplitudes")->delimiter(',');
  dscan->add_option("--inv_delta_min", c.inv_delta_min)->capture_default_str();
  dscan->add_option("--inv_delta_max", c.inv_delta_max)->capture_default_str();
  dscan->add_option("--inv_delta_count", c.inv_delta_count)->capture_default_str();

  auto* opt = app.add_subcommand("optimal-omega", "solve omega* and evaluate the gap there");
  add_drive_options(opt, c);
  add_common_options(opt, c, true);

  auto* self = app.add_subcommand("selftest", "built-in oracle and identity checks");

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    args = apply_config(app, args);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  } catch (const CliFailure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.exit_code;
  }

  try {
    if (gap->parsed()) return run_gap(c);
    if (weights->parsed()) return run_weights(c);
    if (line->parsed()) return run_line(c);
    if (sweep->parsed()) return run_sweep2d(c);
    if (fast->parsed()) return run_fastscan(c);
    if (dscan->parsed()) return run_deltascan(c);
    if (opt->parsed()) return run_optimal_omega(c);
    if (self->parsed()) return run_selftest(c);
  } catch (const CliFailure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.exit_code;
  }
  return kExitUsage;
}
