#include "bifloquet/serialize.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "bifloquet/error.hpp"

namespace bifloquet {

namespace {

using json = nlohmann::json;

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

json number_to_json(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

double number_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_number(j.get<std::string>());
  throw ParseError("expected a number or a non-finite sentinel");
}

const char* policy_name(OmegaPolicy::Kind k) {
  return k == OmegaPolicy::Kind::Fixed ? "fixed" : "optimal";
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_number(const std::string& text) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (text.empty()) throw ParseError("empty numeric field");
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || errno == EINVAL) {
    throw ParseError("malformed number '" + text + "'");
  }
  return v;
}

void write_sweep_csv(const SweepResult& result, std::ostream& os) {
  os << kSweepCsvHeader << '\n';
  for (const auto& p : result.points) {
    os << format_number(p.b) << ',' << format_number(p.nu) << ',' << format_number(p.omega)
       << ',' << format_number(p.gap) << ',' << format_number(p.dgap_db) << ','
       << format_number(p.dgap_domega_amp) << ',' << format_number(p.gamma_phi) << ','
       << format_number(p.t_phi) << ',' << format_number(p.omega_star) << ','
       << flags_to_string(p.flags) << '\n';
  }
}

SweepResult read_sweep_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("sweep CSV: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kSweepCsvHeader) throw ParseError("sweep CSV: unexpected header '" + line + "'");

  SweepResult r;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 10) throw ParseError("sweep CSV: expected 10 fields in '" + line + "'");
    PointResult p;
    p.b = parse_number(f[0]);
    p.nu = parse_number(f[1]);
    p.omega = parse_number(f[2]);
    p.gap = parse_number(f[3]);
    p.dgap_db = parse_number(f[4]);
    p.dgap_domega_amp = parse_number(f[5]);
    p.gamma_phi = parse_number(f[6]);
    p.t_phi = parse_number(f[7]);
    p.omega_star = parse_number(f[8]);
    p.flags = flags_from_string(f[9]);
    r.points.push_back(std::move(p));
  }
  // Recover the axes from the nu-major ordering.
  for (const auto& p : r.points) {
    if (p.nu != r.points.front().nu) break;
    r.b_values.push_back(p.b);
  }
  if (!r.b_values.empty()) {
    if (r.points.size() % r.b_values.size() != 0) throw ParseError("sweep CSV: ragged grid");
    for (std::size_t i = 0; i < r.points.size(); i += r.b_values.size()) {
      r.nu_values.push_back(r.points[i].nu);
    }
  }
  bool per_point = false;
  for (const auto& p : r.points) per_point = per_point || !std::isnan(p.omega_star);
  r.omega_policy = per_point ? OmegaPolicy::optimal()
                             : OmegaPolicy::fixed(r.points.empty() ? 1.0 : r.points[0].omega);
  return r;
}

std::string sweep_to_json(const SweepResult& result) {
  json j;
  j["schema"] = "sweep2d";
  j["omega_policy"] = policy_name(result.omega_policy.kind);
  j["n_b"] = result.n_b();
  j["n_nu"] = result.n_nu();
  json b = json::array();
  for (double v : result.b_values) b.push_back(number_to_json(v));
  json nu = json::array();
  for (double v : result.nu_values) nu.push_back(number_to_json(v));
  j["b_values"] = b;
  j["nu_values"] = nu;
  json pts = json::array();
  for (const auto& p : result.points) {
    pts.push_back({{"b", number_to_json(p.b)},
                   {"nu", number_to_json(p.nu)},
                   {"omega", number_to_json(p.omega)},
                   {"gap", number_to_json(p.gap)},
                   {"dgap_db", number_to_json(p.dgap_db)},
                   {"dgap_dOmega", number_to_json(p.dgap_domega_amp)},
                   {"gamma_phi", number_to_json(p.gamma_phi)},
                   {"t_phi", number_to_json(p.t_phi)},
                   {"omega_star", number_to_json(p.omega_star)},
                   {"flags", flags_to_string(p.flags)}});
  }
  j["points"] = pts;
  return j.dump();
}

SweepResult sweep_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    if (j.at("schema") != "sweep2d") throw ParseError("JSON: not a sweep2d document");
    SweepResult r;
    r.omega_policy = j.at("omega_policy") == "fixed" ? OmegaPolicy::fixed(1.0)
                                                     : OmegaPolicy::optimal();
    for (const auto& v : j.at("b_values")) r.b_values.push_back(number_from_json(v));
    for (const auto& v : j.at("nu_values")) r.nu_values.push_back(number_from_json(v));
    for (const auto& o : j.at("points")) {
      PointResult p;
      p.b = number_from_json(o.at("b"));
      p.nu = number_from_json(o.at("nu"));
      p.omega = number_from_json(o.at("omega"));
      p.gap = number_from_json(o.at("gap"));
      p.dgap_db = number_from_json(o.at("dgap_db"));
      p.dgap_domega_amp = number_from_json(o.at("dgap_dOmega"));
      p.gamma_phi = number_from_json(o.at("gamma_phi"));
      p.t_phi = number_from_json(o.at("t_phi"));
      p.omega_star = number_from_json(o.at("omega_star"));
      p.flags = flags_from_string(o.at("flags").get<std::string>());
      r.points.push_back(std::move(p));
    }
    if (r.omega_policy.kind == OmegaPolicy::Kind::Fixed && !r.points.empty()) {
      r.omega_policy.omega = r.points.front().omega;
    }
    if (r.points.size() != r.b_values.size() * r.nu_values.size()) {
      throw ParseError("JSON: point count does not match the axes");
    }
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("JSON: ") + e.what());
  }
}

void write_table_csv(const Table& table, std::ostream& os) {
  for (const auto& c : table.columns) os << c << ',';
  os << "flags\n";
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    for (double v : table.rows[i]) os << format_number(v) << ',';
    os << flags_to_string(table.flags[i]) << '\n';
  }
}

Table read_table_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("table CSV: missing header");
  auto header = split(line, ',');
  if (header.size() < 2 || header.back() != "flags") {
    throw ParseError("table CSV: header must end with 'flags'");
  }
  header.pop_back();
  Table t;
  t.columns = header;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != header.size() + 1) throw ParseError("table CSV: wrong field count");
    std::vector<double> row;
    for (std::size_t c = 0; c < header.size(); ++c) row.push_back(parse_number(f[c]));
    t.rows.push_back(std::move(row));
    t.flags.push_back(flags_from_string(f.back()));
  }
  return t;
}

std::string table_to_json(const Table& table, const std::string& name) {
  json j;
  j["schema"] = name;
  j["columns"] = table.columns;
  json rows = json::array();
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    json o = json::object();
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      o[table.columns[c]] = number_to_json(table.rows[i][c]);
    }
    o["flags"] = flags_to_string(table.flags[i]);
    rows.push_back(std::move(o));
  }
  j["rows"] = rows;
  return j.dump();
}

Table table_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    Table t;
    t.columns = j.at("columns").get<std::vector<std::string>>();
    for (const auto& o : j.at("rows")) {
      std::vector<double> row;
      for (const auto& c : t.columns) row.push_back(number_from_json(o.at(c)));
      t.rows.push_back(std::move(row));
      t.flags.push_back(flags_from_string(o.at("flags").get<std::string>()));
    }
    return t;
  } catch (const json::exception& e) {
    throw ParseError(std::string("JSON: ") + e.what());
  }
}

std::string sweet_spots_to_json(const SweetSpotReport& report, const SweepResult& result) {
  auto list = [&](const std::vector<std::size_t>& idx) {
    json a = json::array();
    for (std::size_t i : idx) {
      const PointResult& p = result.points.at(i);
      a.push_back({{"index", i},
                   {"b", number_to_json(p.b)},
                   {"nu", number_to_json(p.nu)},
                   {"omega", number_to_json(p.omega)},
                   {"dgap_db", number_to_json(p.dgap_db)},
                   {"dgap_dOmega", number_to_json(p.dgap_domega_amp)},
                   {"t_phi", number_to_json(p.t_phi)}});
    }
    return a;
  };
  json j;
  j["schema"] = "sweet_spots";
  j["tol_dc"] = report.tol_dc;
  j["tol_ac"] = report.tol_ac;
  j["sour_threshold"] = report.sour_threshold;
  j["dc_sweet"] = list(report.dc_sweet);
  j["doubly_sweet"] = list(report.doubly_sweet);
  j["sour"] = list(report.sour);
  return j.dump();
}

}  // namespace bifloquet
