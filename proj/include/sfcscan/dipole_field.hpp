#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "sfcscan/sfc_core.hpp"

namespace sfcscan {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

/// Samples closer than this to a dipole are rejected as singular.
inline constexpr double kSingularRadius = 1e-9;

struct Dipole {
  Vec3 position = Vec3::Zero();
  Vec3 moment = Vec3::Zero();
};

/// Dipole set plus the square sampling window in the plane z = plane_z.
struct FieldConfig {
  std::vector<Dipole> dipoles;
  Vec2 window_center = Vec2::Zero();
  double window_side = 1.0;
  std::size_t grid_n = 32;
  double plane_z = 0.0;

  /// Centre of sample (i, j); i runs along x and j along y.
  [[nodiscard]] Vec3 sample_point(std::size_t i, std::size_t j) const;

  /// Throws DomainError on non-finite data or a non-positive window.
  void validate() const;
};

enum class FieldComponent { Hx, Hy, Hz };

[[nodiscard]] std::string_view to_string(FieldComponent c) noexcept;
[[nodiscard]] std::optional<FieldComponent> parse_field_component(std::string_view text) noexcept;

class FieldMap {
 public:
  FieldMap(FieldConfig config, std::vector<Vec3> samples);

  [[nodiscard]] const FieldConfig& config() const noexcept { return config_; }
  [[nodiscard]] std::size_t grid_n() const noexcept { return config_.grid_n; }
  [[nodiscard]] const Vec3& at(std::size_t i, std::size_t j) const {
    return samples_[j * config_.grid_n + i];
  }
  [[nodiscard]] double component(std::size_t i, std::size_t j, FieldComponent c) const {
    return at(i, j)[static_cast<int>(c)];
  }

 private:
  FieldConfig config_;
  std::vector<Vec3> samples_;  // x fastest
};

/// Superposed point-dipole field (1/4pi) sum [3 (m.rhat) rhat - m] / r^3.
/// Throws SingularityError when the point is within kSingularRadius of a dipole.
[[nodiscard]] Vec3 dipole_field_at(std::span<const Dipole> dipoles, const Vec3& point);

/// Four identical in-plane dipoles at (+-1, +-1, 0) with moment (1,1,0)/sqrt2,
/// sampled on a 32x32 grid over the centred unit window.
[[nodiscard]] FieldConfig paper_config();

[[nodiscard]] FieldMap sample_field_map(const FieldConfig& config);

/// Crossed-strip resonance measurement. Each strip adds strip_field to H_z at
/// its location, so the intersection sees H_z + 2 * strip_field.
struct ResonanceModel {
  double gamma = 1.0;
  double linewidth = 0.01;
  double sweep_min = 0.5;
  double sweep_max = 1.5;
  double sweep_step = 1e-4;
  double strip_field = 0.5;

  void validate() const;
  /// Frequency grid sweep_min, sweep_min + step, ..., closed with sweep_max.
  [[nodiscard]] std::vector<double> sweep_grid() const;
};

/// Lorentzian absorption 1 / (1 + ((omega - omega0) / linewidth)^2).
[[nodiscard]] double lorentzian_absorption(double omega, double omega0, double linewidth) noexcept;

// sign_ambiguous: H_z + 2 * strip_field <= 0, so |H_tot| cannot recover H_z.
enum class ResonanceFlag { ok, below_sweep, above_sweep, sign_ambiguous };

[[nodiscard]] std::string_view to_string(ResonanceFlag f) noexcept;

struct ResonanceCell {
  double true_hz = 0.0;
  double inferred_hz = 0.0;
  std::size_t visit_step = 0;
  ResonanceFlag flag = ResonanceFlag::ok;
};

struct ResonanceScan {
  FieldConfig config;
  ResonanceModel model;
  std::vector<ResonanceCell> cells;  // indexed like FieldMap, x fastest

  [[nodiscard]] const ResonanceCell& at(std::size_t i, std::size_t j) const {
    return cells[j * config.grid_n + i];
  }
  [[nodiscard]] std::size_t flagged_count() const;
};

/// Visits cells in trajectory order, sweeps the rf frequency at each, and
/// infers H_z from the absorption peak. Cells whose resonance falls outside
/// the sweep are flagged rather than clamped.
[[nodiscard]] ResonanceScan simulate_resonance_scan(const FieldConfig& config,
                                                    const ResonanceModel& model,
                                                    const Trajectory& t);

}  // namespace sfcscan
