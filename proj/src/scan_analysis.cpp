#include "sfcscan/scan_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "sfcscan/errors.hpp"

namespace sfcscan {

std::string_view to_string(AutocorrMode mode) noexcept {
  return mode == AutocorrMode::pearson ? "pearson" : "raw";
}

std::optional<AutocorrMode> parse_autocorr_mode(std::string_view text) noexcept {
  if (text == "pearson") return AutocorrMode::pearson;
  if (text == "raw") return AutocorrMode::raw;
  return std::nullopt;
}

std::optional<CurveOrder> order_for_side(std::size_t side) noexcept {
  for (int m = CurveOrder::kMin; m <= CurveOrder::kMax; ++m) {
    if (side == (std::size_t{1} << m)) return CurveOrder(m);
  }
  return std::nullopt;
}

ScanSeries read_along(const FieldMap& map, const Trajectory& t, FieldComponent component) {
  if (map.grid_n() != t.order.side()) {
    throw DimensionError("field map grid " + std::to_string(map.grid_n()) +
                         " does not match trajectory side " + std::to_string(t.order.side()));
  }
  ScanSeries s{{}, component, t.kind};
  s.values.reserve(t.cells.size());
  for (auto c : t.cells) s.values.push_back(map.component(c.x, c.y, component));
  return s;
}

AutocorrSeries autocorrelation(std::span<const double> values, std::size_t k_max,
                               AutocorrMode mode) {
  const std::size_t n = values.size();
  if (k_max >= n) {
    throw DomainError("k_max " + std::to_string(k_max) + " must be below series length " +
                      std::to_string(n));
  }

  std::vector<double> x(values.begin(), values.end());
  if (mode == AutocorrMode::pearson) {
    if (std::adjacent_find(x.begin(), x.end(), std::not_equal_to<>()) == x.end()) {
      throw ZeroVarianceError("pearson autocorrelation of a constant series");
    }
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
    for (auto& v : x) v -= mean;
  }

  const double energy = std::inner_product(x.begin(), x.end(), x.begin(), 0.0);
  if (energy == 0.0) throw ZeroVarianceError("autocorrelation of an all-zero series");

  AutocorrSeries out{mode, std::vector<double>(k_max + 1)};
  out.r[0] = 1.0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const double lagged = std::inner_product(x.begin(), x.end() - static_cast<std::ptrdiff_t>(k),
                                             x.begin() + static_cast<std::ptrdiff_t>(k), 0.0);
    if (mode == AutocorrMode::pearson) {
      out.r[k] = lagged / energy;
    } else {
      out.r[k] = (lagged / static_cast<double>(n - k)) / (energy / static_cast<double>(n));
    }
  }
  return out;
}

AutocorrSeries autocorrelation(const ScanSeries& s, std::size_t k_max, AutocorrMode mode) {
  return autocorrelation(s.values, k_max, mode);
}

namespace {

double mean_abs(const std::vector<Table1Row>& rows, std::optional<double> Table1Row::*field) {
  double sum = 0.0;
  std::size_t count = 0;
  for (const auto& row : rows) {
    if (const auto& d = row.*field) {
      sum += std::abs(*d);
      ++count;
    }
  }
  return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

}  // namespace

double Table1Report::mean_abs_delta_linear() const {
  return mean_abs(rows, &Table1Row::delta_linear);
}

double Table1Report::mean_abs_delta_hilbert() const {
  return mean_abs(rows, &Table1Row::delta_hilbert);
}

Table1Report table1_experiment(const FieldConfig& config, const Table1Options& options) {
  const auto order = order_for_side(config.grid_n);
  if (!order) {
    throw DimensionError("grid_n " + std::to_string(config.grid_n) + " is not 2^m");
  }
  const FieldMap map = sample_field_map(config);
  const auto linear_t = generate_trajectory(options.linear_kind, *order, options.seed);
  const auto sfc_t = generate_trajectory(options.sfc_kind, *order, options.seed);

  Table1Report report;
  report.linear_kind = options.linear_kind;
  report.sfc_kind = options.sfc_kind;
  report.linear =
      autocorrelation(read_along(map, linear_t, options.component), options.k_max, options.mode);
  report.hilbert =
      autocorrelation(read_along(map, sfc_t, options.component), options.k_max, options.mode);

  for (std::size_t k = 0; k <= options.k_max; ++k) {
    Table1Row row{k, report.linear.r[k], report.hilbert.r[k], {}, {}, {}, {}};
    if (k < kTable1Linear.size()) {
      row.ref_linear = kTable1Linear[k];
      row.ref_hilbert = kTable1Hilbert[k];
      row.delta_linear = row.linear - kTable1Linear[k];
      row.delta_hilbert = row.hilbert - kTable1Hilbert[k];
    }
    report.rows.push_back(row);
  }
  return report;
}

Smoothness smoothness_summary(std::span<const double> values) {
  if (values.size() < 2) throw DomainError("smoothness needs at least two values");
  Smoothness s;
  for (std::size_t i = 1; i < values.size(); ++i) {
    const double step = std::abs(values[i] - values[i - 1]);
    s.mean_abs_step += step;
    s.max_abs_step = std::max(s.max_abs_step, step);
  }
  s.mean_abs_step /= static_cast<double>(values.size() - 1);
  try {
    s.lag1_autocorr = autocorrelation(values, 1, AutocorrMode::pearson).r[1];
  } catch (const ZeroVarianceError&) {
    s.lag1_autocorr.reset();
  }
  return s;
}

Smoothness smoothness_summary(const ScanSeries& s) { return smoothness_summary(s.values); }

}  // namespace sfcscan
