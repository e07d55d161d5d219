#include "bifloquet/bifloquet.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "bifloquet/analytic.hpp"
#include "bifloquet/error.hpp"
#include "bifloquet/floquet.hpp"
#include "bifloquet/noise.hpp"
#include "bifloquet/selftest.hpp"
#include "bifloquet/serialize.hpp"
#include "bifloquet/sweep.hpp"

namespace bfq = bifloquet;

struct bfq_context {
  bfq::NoiseModel noise;
  bfq::TruncationPolicy truncation;
  int threads = 1;
  std::string last_error;
  std::string selftest_report;
};

struct bfq_sweep {
  bfq::SweepResult result;
};

struct bfq_table {
  bfq::Table table;
};

namespace {

bfq_status to_status(bfq::ErrorCode code) {
  switch (code) {
    case bfq::ErrorCode::InvalidArgument: return BFQ_ERR_INVALID_ARGUMENT;
    case bfq::ErrorCode::Numerical: return BFQ_ERR_NUMERICAL;
    case bfq::ErrorCode::NonConvergence: return BFQ_ERR_NON_CONVERGENCE;
    case bfq::ErrorCode::Tracking: return BFQ_ERR_TRACKING;
    case bfq::ErrorCode::Pole: return BFQ_ERR_POLE;
    case bfq::ErrorCode::PerturbativeRegime: return BFQ_ERR_PERTURBATIVE_REGIME;
    case bfq::ErrorCode::Io: return BFQ_ERR_IO;
    case bfq::ErrorCode::Parse: return BFQ_ERR_PARSE;
  }
  return BFQ_ERR_INTERNAL;
}

template <class F>
bfq_status guard(bfq_context* ctx, F&& body) {
  if (ctx == nullptr) return BFQ_ERR_INVALID_ARGUMENT;
  ctx->last_error.clear();
  try {
    body();
    return BFQ_OK;
  } catch (const bfq::Error& e) {
    ctx->last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return BFQ_ERR_INTERNAL;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return BFQ_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw bfq::InvalidArgument(std::string(what) + " must not be null");
}

bfq::DriveConfig to_drive(const bfq_drive* d) {
  require(d, "drive");
  bfq::DriveConfig c;
  c.w_q = d->w_q;
  c.b = d->b;
  c.big_omega = d->big_omega;
  c.nu = d->nu;
  c.n1 = d->n1;
  c.n2 = d->n2;
  c.omega = d->omega;
  return c;
}

bfq::Range to_range(bfq_range r) { return {r.min, r.max, r.count}; }

bfq_point to_point(const bfq::PointResult& p) {
  return {p.b,         p.nu,    p.omega,      p.gap,  p.dgap_db, p.dgap_domega_amp,
          p.gamma_phi, p.t_phi, p.omega_star, p.g0,   p.g_n1,    p.g_n2,
          p.flags};
}

template <class Writer>
void write_output(const char* path, Writer&& w) {
  require(path, "path");
  const std::string p(path);
  if (p == "-") {
    w(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream os(p);
  if (!os) throw bfq::IoError("cannot open '" + p + "' for writing");
  w(os);
  if (!os) throw bfq::IoError("write to '" + p + "' failed");
}

}  // namespace

extern "C" {

const char* bfq_version(void) { return "0.1.0"; }

const char* bfq_status_string(bfq_status status) {
  switch (status) {
    case BFQ_OK: return "ok";
    case BFQ_ERR_INVALID_ARGUMENT: return "invalid argument";
    case BFQ_ERR_NUMERICAL: return "numerical failure";
    case BFQ_ERR_NON_CONVERGENCE: return "no convergence";
    case BFQ_ERR_TRACKING: return "mode tracking lost";
    case BFQ_ERR_POLE: return "pole";
    case BFQ_ERR_PERTURBATIVE_REGIME: return "outside perturbative regime";
    case BFQ_ERR_IO: return "i/o error";
    case BFQ_ERR_PARSE: return "parse error";
    case BFQ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

bfq_drive bfq_drive_default(void) {
  const bfq::DriveConfig d;
  return {d.w_q, d.b, d.big_omega, d.nu, d.n1, d.n2, d.omega};
}

bfq_noise bfq_noise_default(void) {
  const bfq::NoiseModel n;
  return {n.v_f, n.v_d, n.ir_factor, n.temp_ratio};
}

bfq_status bfq_context_create(bfq_context** out) {
  if (out == nullptr) return BFQ_ERR_INVALID_ARGUMENT;
  try {
    *out = new bfq_context();
    return BFQ_OK;
  } catch (...) {
    *out = nullptr;
    return BFQ_ERR_INTERNAL;
  }
}

void bfq_context_destroy(bfq_context* ctx) { delete ctx; }

const char* bfq_last_error(const bfq_context* ctx) {
  return ctx == nullptr ? "null context" : ctx->last_error.c_str();
}

bfq_status bfq_context_set_noise(bfq_context* ctx, const bfq_noise* noise) {
  return guard(ctx, [&] {
    require(noise, "noise");
    bfq::NoiseModel m;
    m.v_f = noise->v_f;
    m.v_d = noise->v_d;
    m.ir_factor = noise->ir_factor;
    m.temp_ratio = noise->temp_ratio;
    m.validate();
    ctx->noise = m;
  });
}

bfq_status bfq_context_set_truncation(bfq_context* ctx, int n_max, int k_max) {
  return guard(ctx, [&] {
    if (n_max < 0 || k_max < 0) throw bfq::InvalidArgument("cutoffs must be non-negative");
    ctx->truncation.n_max = n_max > 0 ? std::optional<int>(n_max) : std::nullopt;
    ctx->truncation.k_max = k_max > 0 ? std::optional<int>(k_max) : std::nullopt;
  });
}

bfq_status bfq_context_set_threads(bfq_context* ctx, int threads) {
  return guard(ctx, [&] {
    if (threads < 0) throw bfq::InvalidArgument("thread count must be non-negative");
    ctx->threads = threads;
  });
}

bfq_status bfq_point_evaluate(bfq_context* ctx, const bfq_drive* drive, bfq_point* out) {
  return guard(ctx, [&] {
    require(out, "out");
    const bfq::DriveConfig d = to_drive(drive);
    d.validate();
    const bfq::PointResult p = bfq::evaluate_point(d, ctx->truncation, ctx->noise, nullptr);
    *out = to_point(p);
    if ((p.flags & bfq::kFlagFailed) && !std::isfinite(p.gap)) {
      throw bfq::NumericalError(p.error);
    }
    if (!p.error.empty()) ctx->last_error = p.error;
  });
}

bfq_status bfq_quasienergies(bfq_context* ctx, const bfq_drive* drive, double* eps_plus,
                             double* eps_minus) {
  return guard(ctx, [&] {
    require(eps_plus, "eps_plus");
    require(eps_minus, "eps_minus");
    const bfq::DriveConfig d = to_drive(drive);
    const bfq::FloquetSpectrum s = bfq::solve_floquet(d, ctx->truncation.resolve(d));
    *eps_plus = s.eps_plus();
    *eps_minus = s.eps_minus();
  });
}

bfq_status bfq_weights(bfq_context* ctx, const bfq_drive* drive, int k_max, double* out,
                       size_t out_len) {
  return guard(ctx, [&] {
    require(out, "out");
    if (k_max < 0) throw bfq::InvalidArgument("k_max must be non-negative");
    if (out_len < static_cast<size_t>(2 * k_max + 1)) {
      throw bfq::InvalidArgument("output buffer shorter than 2 k_max + 1");
    }
    const bfq::DriveConfig d = to_drive(drive);
    const bfq::FloquetSpectrum s = bfq::solve_floquet(d, ctx->truncation.resolve(d));
    const bfq::FourierWeights w = bfq::fourier_weights(s, k_max);
    for (int k = -k_max; k <= k_max; ++k) out[k + k_max] = w[k];
  });
}

bfq_status bfq_optimal_omega(bfq_context* ctx, const bfq_drive* drive, double* omega_star) {
  return guard(ctx, [&] {
    require(omega_star, "omega_star");
    *omega_star = bfq::optimal_base_frequency(to_drive(drive)).omega_star;
  });
}

bfq_status bfq_multimode(bfq_context* ctx, const bfq_drive* drive, double* gap,
                         double* alternate, double* bias_sensitivity) {
  return guard(ctx, [&] {
    const bfq::DriveConfig d = to_drive(drive);
    const bfq::MultimodeGap g = bfq::gap_multimode(d);
    if (gap != nullptr) *gap = g.gap;
    if (alternate != nullptr) *alternate = g.alternate;
    if (bias_sensitivity != nullptr) *bias_sensitivity = bfq::bias_sensitivity_multimode(d);
  });
}

bfq_status bfq_sweep2d(bfq_context* ctx, const bfq_drive* drive, bfq_range b, bfq_range nu,
                       int per_point_optimal, double fixed_omega, bfq_sweep** out) {
  return guard(ctx, [&] {
    require(out, "out");
    *out = nullptr;
    bfq::GridSpec spec;
    spec.drive = to_drive(drive);
    spec.b_range = to_range(b);
    spec.nu_range = to_range(nu);
    spec.omega_policy = per_point_optimal ? bfq::OmegaPolicy::optimal()
                                          : bfq::OmegaPolicy::fixed(fixed_omega);
    auto* s = new bfq_sweep();
    try {
      s->result = bfq::sweep_grid(spec, ctx->truncation, ctx->noise, ctx->threads);
    } catch (...) {
      delete s;
      throw;
    }
    *out = s;
  });
}

void bfq_sweep_size(const bfq_sweep* sweep, size_t* n_b, size_t* n_nu) {
  if (n_b != nullptr) *n_b = sweep ? sweep->result.n_b() : 0;
  if (n_nu != nullptr) *n_nu = sweep ? sweep->result.n_nu() : 0;
}

bfq_status bfq_sweep_point(const bfq_sweep* sweep, size_t i_nu, size_t i_b, bfq_point* out) {
  if (sweep == nullptr || out == nullptr) return BFQ_ERR_INVALID_ARGUMENT;
  if (i_nu >= sweep->result.n_nu() || i_b >= sweep->result.n_b()) {
    return BFQ_ERR_INVALID_ARGUMENT;
  }
  *out = to_point(sweep->result.at(i_nu, i_b));
  return BFQ_OK;
}

double bfq_sweep_max_t_phi(const bfq_sweep* sweep) {
  return sweep ? sweep->result.max_t_phi() : std::numeric_limits<double>::quiet_NaN();
}

bfq_status bfq_sweep_write(bfq_context* ctx, const bfq_sweep* sweep, const char* path,
                           bfq_format format) {
  return guard(ctx, [&] {
    require(sweep, "sweep");
    write_output(path, [&](std::ostream& os) {
      if (format == BFQ_FORMAT_JSON) {
        os << bfq::sweep_to_json(sweep->result) << '\n';
      } else {
        bfq::write_sweep_csv(sweep->result, os);
      }
    });
  });
}

void bfq_sweep_destroy(bfq_sweep* sweep) { delete sweep; }

bfq_status bfq_sweet_spots(bfq_context* ctx, const bfq_sweep* sweep, double tol_dc,
                           double tol_ac, double sour_threshold, size_t* n_dc,
                           size_t* n_doubly, size_t* n_sour) {
  return guard(ctx, [&] {
    require(sweep, "sweep");
    const bfq::SweetSpotReport r =
        bfq::find_sweet_spots(sweep->result, tol_dc, tol_ac, sour_threshold);
    if (n_dc != nullptr) *n_dc = r.dc_sweet.size();
    if (n_doubly != nullptr) *n_doubly = r.doubly_sweet.size();
    if (n_sour != nullptr) *n_sour = r.sour.size();
  });
}

bfq_status bfq_sweet_spots_write(bfq_context* ctx, const bfq_sweep* sweep, double tol_dc,
                                 double tol_ac, double sour_threshold, const char* path) {
  return guard(ctx, [&] {
    require(sweep, "sweep");
    const bfq::SweetSpotReport r =
        bfq::find_sweet_spots(sweep->result, tol_dc, tol_ac, sour_threshold);
    write_output(path, [&](std::ostream& os) {
      os << bfq::sweet_spots_to_json(r, sweep->result) << '\n';
    });
  });
}

bfq_status bfq_line(bfq_context* ctx, const bfq_drive* drive, bfq_line_axis axis,
                    bfq_range range, bfq_table** out) {
  return guard(ctx, [&] {
    require(out, "out");
    *out = nullptr;
    const bfq::DriveConfig d = to_drive(drive);
    d.validate();
    const auto a = axis == BFQ_AXIS_TONE1 ? bfq::LineAxis::Tone1Amplitude : bfq::LineAxis::Bias;
    auto* t = new bfq_table{bfq::sweep_line(d, a, to_range(range), ctx->truncation, ctx->noise)};
    *out = t;
  });
}

bfq_status bfq_fastscan(bfq_context* ctx, const bfq_drive* drive, int m, int l, double delta,
                        bfq_range tone1, int j_max, bfq_table** out) {
  return guard(ctx, [&] {
    require(out, "out");
    *out = nullptr;
    const bfq::DriveConfig d = to_drive(drive);
    d.validate();
    *out = new bfq_table{
        bfq::fastscan(d, m, l, delta, to_range(tone1), ctx->truncation, ctx->noise, j_max)};
  });
}

bfq_status bfq_deltascan(bfq_context* ctx, const bfq_drive* drive, int m, int l,
                         const double* tone1, size_t n_tone1, const double* deltas,
                         size_t n_deltas, bfq_table** out) {
  return guard(ctx, [&] {
    require(out, "out");
    *out = nullptr;
    if (n_tone1 > 0) require(tone1, "tone1");
    if (n_deltas == 0) throw bfq::InvalidArgument("deltascan needs at least one delta");
    require(deltas, "deltas");
    const bfq::DriveConfig d = to_drive(drive);
    d.validate();
    *out = new bfq_table{bfq::delta_scan(d, m, l, std::vector<double>(tone1, tone1 + n_tone1),
                                         std::vector<double>(deltas, deltas + n_deltas),
                                         ctx->truncation, ctx->noise)};
  });
}

size_t bfq_table_rows(const bfq_table* table) { return table ? table->table.rows.size() : 0; }

size_t bfq_table_columns(const bfq_table* table) {
  return table ? table->table.columns.size() : 0;
}

const char* bfq_table_column_name(const bfq_table* table, size_t column) {
  if (table == nullptr || column >= table->table.columns.size()) return nullptr;
  return table->table.columns[column].c_str();
}

double bfq_table_value(const bfq_table* table, size_t row, size_t column) {
  if (table == nullptr || row >= table->table.rows.size() ||
      column >= table->table.columns.size()) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return table->table.rows[row][column];
}

uint32_t bfq_table_flags(const bfq_table* table, size_t row) {
  if (table == nullptr || row >= table->table.flags.size()) return 0;
  return table->table.flags[row];
}

bfq_status bfq_table_local_maxima(const bfq_table* table, const char* column, size_t* indices,
                                  size_t cap, size_t* count) {
  if (table == nullptr || column == nullptr || count == nullptr) return BFQ_ERR_INVALID_ARGUMENT;
  const auto& cols = table->table.columns;
  if (std::find(cols.begin(), cols.end(), column) == cols.end()) {
    return BFQ_ERR_INVALID_ARGUMENT;
  }
  const auto maxima = bfq::find_local_maxima(table->table.column(column));
  *count = maxima.size();
  for (size_t i = 0; i < maxima.size() && i < cap && indices != nullptr; ++i) {
    indices[i] = maxima[i];
  }
  return BFQ_OK;
}

bfq_status bfq_table_write(bfq_context* ctx, const bfq_table* table, const char* path,
                           bfq_format format, const char* name) {
  return guard(ctx, [&] {
    require(table, "table");
    write_output(path, [&](std::ostream& os) {
      if (format == BFQ_FORMAT_JSON) {
        os << bfq::table_to_json(table->table, name ? name : "table") << '\n';
      } else {
        bfq::write_table_csv(table->table, os);
      }
    });
  });
}

void bfq_table_destroy(bfq_table* table) { delete table; }

bfq_status bfq_selftest(bfq_context* ctx, int* all_passed) {
  return guard(ctx, [&] {
    require(all_passed, "all_passed");
    const bfq::SelftestReport r = bfq::run_selftest();
    std::ostringstream os;
    for (const auto& c : r.checks) {
      os << (c.passed ? "ok   " : "FAIL ") << c.name << ": " << c.detail << '\n';
    }
    ctx->selftest_report = os.str();
    *all_passed = r.passed() ? 1 : 0;
  });
}

const char* bfq_selftest_report(const bfq_context* ctx) {
  return ctx == nullptr ? "" : ctx->selftest_report.c_str();
}

}  // extern "C"
