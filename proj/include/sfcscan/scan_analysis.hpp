#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sfcscan/dipole_field.hpp"
#include "sfcscan/sfc_core.hpp"

namespace sfcscan {

/// Scalar field component read along a trajectory.
struct ScanSeries {
  std::vector<double> values;
  FieldComponent component = FieldComponent::Hx;
  TrajectoryKind trajectory_kind = TrajectoryKind::raster;
};

/// pearson: mean-subtracted, normalized by the full-series sum of squares
///          (biased estimator).
/// raw:     (sum x_i x_{i+k} / (N-k)) / (sum x_i^2 / N), no mean removal.
enum class AutocorrMode { pearson, raw };

[[nodiscard]] std::string_view to_string(AutocorrMode mode) noexcept;
[[nodiscard]] std::optional<AutocorrMode> parse_autocorr_mode(std::string_view text) noexcept;

/// r[k] for lags 0..k_max; r[0] is exactly 1.
struct AutocorrSeries {
  AutocorrMode mode = AutocorrMode::pearson;
  std::vector<double> r;

  [[nodiscard]] std::size_t k_max() const noexcept { return r.empty() ? 0 : r.size() - 1; }
};

/// Throws DimensionError when the map and trajectory grids differ.
[[nodiscard]] ScanSeries read_along(const FieldMap& map, const Trajectory& t,
                                    FieldComponent component);

/// Throws DomainError when k_max >= N, ZeroVarianceError for a constant series
/// in pearson mode (or an all-zero series in raw mode).
[[nodiscard]] AutocorrSeries autocorrelation(std::span<const double> values, std::size_t k_max,
                                             AutocorrMode mode = AutocorrMode::pearson);
[[nodiscard]] AutocorrSeries autocorrelation(const ScanSeries& s, std::size_t k_max,
                                             AutocorrMode mode = AutocorrMode::pearson);

/// Printed reference columns (k = 0..10) for the linear and Hilbert scans.
inline constexpr std::array<double, 11> kTable1Linear = {1.00, 0.86, 0.73, 0.60, 0.49, 0.38,
                                                         0.29, 0.19, 0.11, 0.04, -0.01};
inline constexpr std::array<double, 11> kTable1Hilbert = {
    1.000, 0.995, 0.990, 0.984, 0.980, 0.973, 0.967, 0.960, 0.955, 0.949, 0.943};

struct Table1Row {
  std::size_t k = 0;
  double linear = 0.0;
  double hilbert = 0.0;
  // Present only for lags covered by the reference table.
  std::optional<double> ref_linear;
  std::optional<double> ref_hilbert;
  std::optional<double> delta_linear;
  std::optional<double> delta_hilbert;
};

struct Table1Report {
  TrajectoryKind linear_kind = TrajectoryKind::raster;
  TrajectoryKind sfc_kind = TrajectoryKind::hilbert;
  AutocorrSeries linear;
  AutocorrSeries hilbert;
  std::vector<Table1Row> rows;

  /// Mean |delta| over the lags that have a reference value.
  [[nodiscard]] double mean_abs_delta_linear() const;
  [[nodiscard]] double mean_abs_delta_hilbert() const;
};

struct Table1Options {
  TrajectoryKind linear_kind = TrajectoryKind::raster;
  TrajectoryKind sfc_kind = TrajectoryKind::hilbert;
  std::size_t k_max = 10;
  AutocorrMode mode = AutocorrMode::pearson;
  FieldComponent component = FieldComponent::Hx;
  std::uint64_t seed = 0;
};

/// Samples the field once, reads the chosen component along both scans and
/// compares the autocorrelations against the reference columns.
[[nodiscard]] Table1Report table1_experiment(const FieldConfig& config,
                                             const Table1Options& options = {});

struct Smoothness {
  double mean_abs_step = 0.0;
  double max_abs_step = 0.0;
  std::optional<double> lag1_autocorr;  // empty for a constant series
};

[[nodiscard]] Smoothness smoothness_summary(std::span<const double> values);
[[nodiscard]] Smoothness smoothness_summary(const ScanSeries& s);

/// Order of a square grid with the given side, or nullopt when the side is not
/// a power of two in the supported range.
[[nodiscard]] std::optional<CurveOrder> order_for_side(std::size_t side) noexcept;

}  // namespace sfcscan
