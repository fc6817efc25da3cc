#include "sfcscan/dipole_field.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sfcscan/errors.hpp"

namespace sfcscan {

Vec3 FieldConfig::sample_point(std::size_t i, std::size_t j) const {
  const double cell = window_side / static_cast<double>(grid_n);
  return {window_center.x() - window_side / 2 + (static_cast<double>(i) + 0.5) * cell,
          window_center.y() - window_side / 2 + (static_cast<double>(j) + 0.5) * cell, plane_z};
}

void FieldConfig::validate() const {
  if (!(window_side > 0.0) || !std::isfinite(window_side)) {
    throw DomainError("window_side must be positive and finite");
  }
  if (grid_n == 0) throw DomainError("grid_n must be positive");
  if (!window_center.allFinite() || !std::isfinite(plane_z)) {
    throw DomainError("window geometry must be finite");
  }
  for (const auto& d : dipoles) {
    if (!d.position.allFinite() || !d.moment.allFinite()) {
      throw DomainError("dipole position and moment must be finite");
    }
  }
}

std::string_view to_string(FieldComponent c) noexcept {
  switch (c) {
    case FieldComponent::Hx:
      return "Hx";
    case FieldComponent::Hy:
      return "Hy";
    case FieldComponent::Hz:
      return "Hz";
  }
  return "?";
}

std::optional<FieldComponent> parse_field_component(std::string_view text) noexcept {
  if (text == "Hx" || text == "x") return FieldComponent::Hx;
  if (text == "Hy" || text == "y") return FieldComponent::Hy;
  if (text == "Hz" || text == "z") return FieldComponent::Hz;
  return std::nullopt;
}

FieldMap::FieldMap(FieldConfig config, std::vector<Vec3> samples)
    : config_(std::move(config)), samples_(std::move(samples)) {
  if (samples_.size() != config_.grid_n * config_.grid_n) {
    throw DimensionError("field map needs grid_n^2 samples");
  }
  for (const auto& h : samples_) {
    if (!h.allFinite()) throw DomainError("field map sample is not finite");
  }
}

Vec3 dipole_field_at(std::span<const Dipole> dipoles, const Vec3& point) {
  constexpr double inv_four_pi = 0.25 * std::numbers::inv_pi;
  Vec3 total = Vec3::Zero();
  for (const auto& d : dipoles) {
    const Vec3 offset = point - d.position;
    const double r = offset.norm();
    if (r < kSingularRadius) {
      throw SingularityError("field point within singular radius of a dipole");
    }
    const Vec3 unit = offset / r;
    total += inv_four_pi * (3.0 * d.moment.dot(unit) * unit - d.moment) / (r * r * r);
  }
  return total;
}

FieldConfig paper_config() {
  FieldConfig config;
  const Vec3 moment(std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2, 0.0);
  for (double sy : {-1.0, 1.0}) {
    for (double sx : {-1.0, 1.0}) config.dipoles.push_back({Vec3(sx, sy, 0.0), moment});
  }
  config.window_center = Vec2::Zero();
  config.window_side = 1.0;
  config.grid_n = 32;
  config.plane_z = 0.0;
  return config;
}

FieldMap sample_field_map(const FieldConfig& config) {
  config.validate();
  const std::size_t n = config.grid_n;
  std::vector<Vec3> samples;
  samples.reserve(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      try {
        samples.push_back(dipole_field_at(config.dipoles, config.sample_point(i, j)));
      } catch (const SingularityError&) {
        throw SingularityError("sample cell (" + std::to_string(i) + "," + std::to_string(j) +
                               ") lies on a dipole");
      }
    }
  }
  return FieldMap(config, std::move(samples));
}

void ResonanceModel::validate() const {
  if (!(gamma > 0.0)) throw DomainError("gamma must be positive");
  if (!(linewidth > 0.0)) throw DomainError("linewidth must be positive");
  if (!(sweep_step > 0.0)) throw DomainError("sweep_step must be positive");
  if (!(sweep_min < sweep_max)) throw DomainError("sweep_min must be below sweep_max");
  if (!std::isfinite(strip_field) || !std::isfinite(sweep_min) || !std::isfinite(sweep_max)) {
    throw DomainError("resonance model values must be finite");
  }
}

std::vector<double> ResonanceModel::sweep_grid() const {
  validate();
  std::vector<double> grid;
  const auto steps = static_cast<std::size_t>(std::floor((sweep_max - sweep_min) / sweep_step));
  grid.reserve(steps + 2);
  for (std::size_t k = 0; k <= steps; ++k) {
    grid.push_back(sweep_min + static_cast<double>(k) * sweep_step);
  }
  if (sweep_max - grid.back() > 1e-9 * sweep_step) grid.push_back(sweep_max);
  return grid;
}

double lorentzian_absorption(double omega, double omega0, double linewidth) noexcept {
  const double u = (omega - omega0) / linewidth;
  return 1.0 / (1.0 + u * u);
}

std::string_view to_string(ResonanceFlag f) noexcept {
  switch (f) {
    case ResonanceFlag::ok:
      return "ok";
    case ResonanceFlag::below_sweep:
      return "below_sweep";
    case ResonanceFlag::above_sweep:
      return "above_sweep";
    case ResonanceFlag::sign_ambiguous:
      return "sign_ambiguous";
  }
  return "?";
}

std::size_t ResonanceScan::flagged_count() const {
  std::size_t count = 0;
  for (const auto& c : cells) count += c.flag != ResonanceFlag::ok ? 1 : 0;
  return count;
}

ResonanceScan simulate_resonance_scan(const FieldConfig& config, const ResonanceModel& model,
                                      const Trajectory& t) {
  if (config.grid_n != t.order.side()) {
    throw DimensionError("trajectory side " + std::to_string(t.order.side()) +
                         " does not match grid_n " + std::to_string(config.grid_n));
  }
  const auto sweep = model.sweep_grid();
  const FieldMap truth = sample_field_map(config);
  const std::size_t n = config.grid_n;

  ResonanceScan scan{config, model, std::vector<ResonanceCell>(n * n)};
  for (std::size_t step = 0; step < t.cells.size(); ++step) {
    const auto [i, j] = t.cells[step];
    auto& cell = scan.cells[std::size_t{j} * n + i];
    cell.visit_step = step;
    cell.true_hz = truth.component(i, j, FieldComponent::Hz);

    const double total = cell.true_hz + 2.0 * model.strip_field;
    const double omega0 = model.gamma * std::abs(total);
    if (total <= 0.0) {
      cell.flag = ResonanceFlag::sign_ambiguous;
    } else if (omega0 < sweep.front()) {
      cell.flag = ResonanceFlag::below_sweep;
    } else if (omega0 > sweep.back()) {
      cell.flag = ResonanceFlag::above_sweep;
    }

    std::size_t best = 0;
    double best_absorption = -1.0;
    for (std::size_t k = 0; k < sweep.size(); ++k) {
      const double a = lorentzian_absorption(sweep[k], omega0, model.linewidth);
      if (a > best_absorption) {
        best_absorption = a;
        best = k;
      }
    }
    cell.inferred_hz = sweep[best] / model.gamma - 2.0 * model.strip_field;
  }
  return scan;
}

}  // namespace sfcscan
