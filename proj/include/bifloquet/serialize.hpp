#pragma once

#include <iosfwd>
#include <string>

#include "bifloquet/sweep.hpp"

namespace bifloquet {

/// Fixed sweep2d column order.
inline constexpr const char* kSweepCsvHeader =
    "b,nu,omega,gap,dgap_db,dgap_dOmega,gamma_phi,t_phi,omega_star,flags";

/// %.17g; non-finite values as inf, -inf, nan.
std::string format_number(double v);
/// Inverse of format_number. Throws Parse on malformed input.
double parse_number(const std::string& text);

void write_sweep_csv(const SweepResult& result, std::ostream& os);
SweepResult read_sweep_csv(std::istream& is);

std::string sweep_to_json(const SweepResult& result);
SweepResult sweep_from_json(const std::string& text);

/// `name` labels the table kind (line, fastscan, deltascan) in JSON output.
void write_table_csv(const Table& table, std::ostream& os);
Table read_table_csv(std::istream& is);
std::string table_to_json(const Table& table, const std::string& name);
Table table_from_json(const std::string& text);

/// Report with the coordinates of every listed point.
std::string sweet_spots_to_json(const SweetSpotReport& report, const SweepResult& result);

}  // namespace bifloquet
