#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <limits>
#include <random>
#include <sstream>

#include <json.hpp>

#include "bifloquet/error.hpp"
#include "bifloquet/serialize.hpp"
#include "bifloquet/sweep.hpp"

using namespace bifloquet;

namespace {

bool same_bits(double a, double b) {
  if (std::isnan(a) && std::isnan(b)) return true;
  return std::memcmp(&a, &b, sizeof a) == 0;
}

// Awkward values: subnormals, extremes, non-finite, values needing 17 digits.
SweepResult synthetic_sweep() {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1, 1);
  SweepResult r;
  r.b_values = {-1.0, 0.1, 1.0 / 3.0};
  r.nu_values = {0.0, 0.7853981633974483};
  r.omega_policy = OmegaPolicy::optimal();
  const double specials[] = {std::numeric_limits<double>::infinity(),
                             -std::numeric_limits<double>::infinity(),
                             std::numeric_limits<double>::quiet_NaN(),
                             std::numeric_limits<double>::denorm_min(),
                             std::numeric_limits<double>::max(),
                             -0.0,
                             0.1 + 0.2};
  int s = 0;
  for (double nu : r.nu_values) {
    for (double b : r.b_values) {
      PointResult p;
      p.b = b;
      p.nu = nu;
      p.omega = 0.9 + 0.01 * u(rng);
      p.gap = u(rng);
      p.dgap_db = u(rng) * 1e-7;
      p.dgap_domega_amp = specials[s++ % 7];
      p.gamma_phi = std::abs(u(rng)) * 1e-5;
      p.t_phi = specials[s++ % 7];
      p.omega_star = p.omega;
      p.flags = static_cast<std::uint32_t>(s % 64);
      r.points.push_back(p);
    }
  }
  return r;
}

void expect_same(const SweepResult& a, const SweepResult& b) {
  ASSERT_EQ(a.points.size(), b.points.size());
  ASSERT_EQ(a.b_values.size(), b.b_values.size());
  ASSERT_EQ(a.nu_values.size(), b.nu_values.size());
  EXPECT_EQ(a.omega_policy.kind, b.omega_policy.kind);
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    const PointResult& p = a.points[i];
    const PointResult& q = b.points[i];
    for (auto [x, y] : {std::pair{p.b, q.b}, {p.nu, q.nu}, {p.omega, q.omega}, {p.gap, q.gap},
                        {p.dgap_db, q.dgap_db}, {p.dgap_domega_amp, q.dgap_domega_amp},
                        {p.gamma_phi, q.gamma_phi}, {p.t_phi, q.t_phi},
                        {p.omega_star, q.omega_star}}) {
      EXPECT_TRUE(same_bits(x, y)) << x << " vs " << y << " at point " << i;
    }
    EXPECT_EQ(p.flags, q.flags);
  }
}

}  // namespace

TEST(Numbers, FormatAndParse) {
  EXPECT_EQ(format_number(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_number(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(format_number(std::nan("")), "nan");
  EXPECT_EQ(format_number(1.5), "1.5");
  EXPECT_TRUE(std::isinf(parse_number("inf")));
  EXPECT_THROW(parse_number(""), ParseError);
  EXPECT_THROW(parse_number("1.5x"), ParseError);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    std::uint64_t bits = rng();
    double v;
    std::memcpy(&v, &bits, sizeof v);
    if (std::isnan(v)) continue;
    EXPECT_TRUE(same_bits(parse_number(format_number(v)), v)) << format_number(v);
  }
}

TEST(SweepCsv, HeaderIsFixed) {
  std::ostringstream os;
  write_sweep_csv(synthetic_sweep(), os);
  const std::string text = os.str();
  EXPECT_EQ(text.substr(0, text.find('\n')),
            "b,nu,omega,gap,dgap_db,dgap_dOmega,gamma_phi,t_phi,omega_star,flags");
}

TEST(SweepCsv, RoundTripBitExact) {
  const SweepResult r = synthetic_sweep();
  std::ostringstream os;
  write_sweep_csv(r, os);
  std::istringstream is(os.str());
  const SweepResult back = read_sweep_csv(is);
  expect_same(r, back);
  EXPECT_EQ(back.b_values, r.b_values);
  EXPECT_EQ(back.nu_values, r.nu_values);
}

TEST(SweepCsv, Rejections) {
  std::istringstream bad_header("b,nu\n");
  EXPECT_THROW(read_sweep_csv(bad_header), ParseError);
  std::istringstream short_row(std::string(kSweepCsvHeader) + "\n1,2,3\n");
  EXPECT_THROW(read_sweep_csv(short_row), ParseError);
  std::istringstream bad_num(std::string(kSweepCsvHeader) + "\n1,2,3,4,5,6,7,8,abc,\n");
  EXPECT_THROW(read_sweep_csv(bad_num), ParseError);
}

TEST(SweepJson, RoundTripBitExact) {
  const SweepResult r = synthetic_sweep();
  const std::string text = sweep_to_json(r);
  expect_same(r, sweep_from_json(text));
  const auto j = nlohmann::json::parse(text);
  EXPECT_EQ(j.at("schema"), "sweep2d");
  EXPECT_EQ(j.at("n_b"), 3);
  EXPECT_EQ(j.at("n_nu"), 2);
  EXPECT_EQ(j.at("points").size(), 6u);
}

TEST(SweepJson, Rejections) {
  EXPECT_THROW(sweep_from_json("{"), ParseError);
  EXPECT_THROW(sweep_from_json(R"({"schema":"table"})"), ParseError);
  nlohmann::json j = nlohmann::json::parse(sweep_to_json(synthetic_sweep()));
  j["points"].erase(0);
  EXPECT_THROW(sweep_from_json(j.dump()), ParseError);
}

TEST(Table, CsvAndJsonRoundTrip) {
  Table t;
  t.columns = {"Omega1", "gap", "t_phi"};
  t.rows = {{0.0, 0.1 + 0.2, std::numeric_limits<double>::infinity()},
            {1.0 / 3.0, std::nan(""), 1e300},
            {2.5, -0.0, 4.9e-324}};
  t.flags = {0, kFlagGvvInvalid, kFlagDegenerate | kFlagTrackingWarn};

  std::ostringstream os;
  write_table_csv(t, os);
  EXPECT_EQ(os.str().substr(0, os.str().find('\n')), "Omega1,gap,t_phi,flags");
  std::istringstream is(os.str());
  for (const Table& back : {read_table_csv(is), table_from_json(table_to_json(t, "line"))}) {
    EXPECT_EQ(back.columns, t.columns);
    ASSERT_EQ(back.rows.size(), t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      for (std::size_t c = 0; c < t.columns.size(); ++c)
        EXPECT_TRUE(same_bits(back.rows[i][c], t.rows[i][c]));
      EXPECT_EQ(back.flags[i], t.flags[i]);
    }
  }
  EXPECT_EQ(nlohmann::json::parse(table_to_json(t, "fastscan")).at("schema"), "fastscan");
}

TEST(Table, CsvRejectsMissingFlagsColumn) {
  std::istringstream is("a,b\n1,2\n");
  EXPECT_THROW(read_table_csv(is), ParseError);
}

TEST(SweetSpotJson, ListsCoordinates) {
  const SweepResult r = synthetic_sweep();
  SweetSpotReport s;
  s.dc_sweet = {0, 4};
  s.doubly_sweet = {4};
  const auto j = nlohmann::json::parse(sweet_spots_to_json(s, r));
  EXPECT_EQ(j.at("schema"), "sweet_spots");
  ASSERT_EQ(j.at("doubly_sweet").size(), 1u);
  EXPECT_EQ(j.at("doubly_sweet")[0].at("index"), 4);
  EXPECT_EQ(j.at("doubly_sweet")[0].at("b").get<double>(), r.points[4].b);
  EXPECT_TRUE(j.at("sour").empty());
}
