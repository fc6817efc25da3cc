#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "sfcscan/sfc_core.hpp"

namespace sfcscan {

using Matrix2 = Eigen::Matrix2cd;
using RealVec2 = Eigen::Vector2d;

/// One pulse: coupling action C and generator angle phi (radians).
struct PulseSpec {
  double coupling = 0.0;
  double phi = 0.0;
};

/// Pulses in application order (pulses[0] acts first) plus global phase.
struct PulseTrain {
  std::vector<PulseSpec> pulses;
  double global_phase = 0.0;
};

/// Two-component field sampled over one pulse interval.
struct FieldSegment {
  double t_start = 0.0;
  double t_end = 0.0;
  std::vector<double> times;
  std::vector<RealVec2> fields;
  RealVec2 mu = RealVec2::Zero();
};

/// Trapezoidal quadrature of E(t).mu over the segment. Throws DomainError for
/// fewer than two samples, non-increasing times, or samples that do not start
/// at t_start and end at t_end.
[[nodiscard]] double coupling_integral(const FieldSegment& seg);

/// Generator [[0, sin phi], [-cos phi, 0]].
[[nodiscard]] Eigen::Matrix2d pulse_generator(double phi);

/// exp(C G) in closed form. G^2 = -(sin phi cos phi) I, so with
/// w2 = sin phi cos phi the exponential is cos/sin for w2 > 0, cosh/sinh for
/// w2 < 0 and I + C G when w2 == 0. The result is unitary only where
/// sin phi == cos phi.
[[nodiscard]] Matrix2 pulse_unitary(const PulseSpec& p);

/// exp(i Gamma) V_K ... V_1 with V_1 = pulse_unitary(pulses[0]).
[[nodiscard]] Matrix2 compose_sequence(const PulseTrain& train);

/// Population transfer |<target| U |initial>|^2 / ||U initial||^2. States are
/// normalized first; the propagated state is renormalized so the value stays
/// in [0, 1] even when U is not unitary. Throws DomainError on zero-norm
/// states.
[[nodiscard]] double transfer_fidelity(const Matrix2& u, const RealVec2& initial,
                                       const RealVec2& target);

struct SearchSpec {
  double e_min = -3.0;
  double e_max = 3.0;
  CurveOrder order{5};
  RealVec2 mu{1.0, 0.0};
  double duration = 1.0;
  double phi = 0.78539816339744830962;  // pi/4
  RealVec2 initial{1.0, 0.0};
  RealVec2 target{0.0, 1.0};
  double threshold = 0.99;
  TrajectoryKind kind = TrajectoryKind::hilbert;
  std::uint64_t seed = 0;

  /// Field at the centre of grid cell (x, y), same range on both axes.
  [[nodiscard]] RealVec2 field_at(GridCell c) const;
};

struct SearchTrace {
  TrajectoryKind kind = TrajectoryKind::hilbert;
  std::vector<GridCell> cells;
  std::vector<double> j_values;
  std::optional<double> lag1_autocorr;        // empty for a constant J sequence
  std::optional<std::size_t> first_hit_step;  // empty when no cell reaches threshold
};

/// Evaluates the transfer fidelity at every grid cell in trajectory order.
[[nodiscard]] SearchTrace control_scan_search(const SearchSpec& spec);

/// Default demo with the field range shifted by a seeded offset in
/// [-max_shift, max_shift) on both bounds.
[[nodiscard]] SearchSpec offset_search_demo(std::uint64_t seed, double max_shift = 1.0);

}  // namespace sfcscan
