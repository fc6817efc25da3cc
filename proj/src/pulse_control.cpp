#include "sfcscan/pulse_control.hpp"

#include <cmath>
#include <string>

#include "sfcscan/errors.hpp"
#include "sfcscan/scan_analysis.hpp"
#include "sfcscan/splitmix.hpp"

namespace sfcscan {

double coupling_integral(const FieldSegment& seg) {
  const std::size_t n = seg.times.size();
  if (n < 2 || seg.fields.size() != n) {
    throw DomainError("coupling integral needs at least two (t, E) samples");
  }
  if (!(seg.t_start < seg.t_end)) throw DomainError("segment needs t_start < t_end");
  if (seg.times.front() != seg.t_start || seg.times.back() != seg.t_end) {
    throw DomainError("samples must span [t_start, t_end]");
  }
  double sum = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double dt = seg.times[i] - seg.times[i - 1];
    if (!(dt > 0.0)) throw DomainError("sample times must be strictly increasing");
    sum += 0.5 * dt * (seg.fields[i - 1].dot(seg.mu) + seg.fields[i].dot(seg.mu));
  }
  return sum;
}

Eigen::Matrix2d pulse_generator(double phi) {
  Eigen::Matrix2d g;
  g << 0.0, std::sin(phi), -std::cos(phi), 0.0;
  return g;
}

Matrix2 pulse_unitary(const PulseSpec& p) {
  const Eigen::Matrix2d g = pulse_generator(p.phi);
  const double w2 = std::sin(p.phi) * std::cos(p.phi);
  const double c = p.coupling;

  double diag = 1.0;
  double off = c;  // coefficient multiplying G
  if (w2 > 0.0) {
    const double w = std::sqrt(w2);
    diag = std::cos(c * w);
    off = std::sin(c * w) / w;
  } else if (w2 < 0.0) {
    const double k = std::sqrt(-w2);
    diag = std::cosh(c * k);
    off = std::sinh(c * k) / k;
  }
  const Eigen::Matrix2d real = diag * Eigen::Matrix2d::Identity() + off * g;
  return real.cast<std::complex<double>>();
}

Matrix2 compose_sequence(const PulseTrain& train) {
  Matrix2 u = Matrix2::Identity();
  for (const auto& p : train.pulses) u = pulse_unitary(p) * u;
  return std::polar(1.0, train.global_phase) * u;
}

double transfer_fidelity(const Matrix2& u, const RealVec2& initial, const RealVec2& target) {
  const double ni = initial.norm();
  const double nt = target.norm();
  if (!(ni > 0.0) || !(nt > 0.0)) throw DomainError("states must have nonzero norm");
  const Eigen::Vector2cd psi = u * (initial / ni).cast<std::complex<double>>();
  const double norm2 = psi.squaredNorm();
  if (!(norm2 > 0.0)) throw DomainError("propagated state has zero norm");
  const std::complex<double> overlap = (target / nt).cast<std::complex<double>>().dot(psi);
  return std::norm(overlap) / norm2;
}

RealVec2 SearchSpec::field_at(GridCell c) const {
  const double step = (e_max - e_min) / static_cast<double>(order.side());
  return {e_min + (static_cast<double>(c.x) + 0.5) * step,
          e_min + (static_cast<double>(c.y) + 0.5) * step};
}

SearchTrace control_scan_search(const SearchSpec& spec) {
  if (!(spec.e_min < spec.e_max)) throw DomainError("field range needs e_min < e_max");
  if (spec.initial.norm() == 0.0 || spec.target.norm() == 0.0) {
    throw DomainError("states must have nonzero norm");
  }
  const auto t = generate_trajectory(spec.kind, spec.order, spec.seed);
  SearchTrace trace;
  trace.kind = spec.kind;
  trace.cells = t.cells;
  trace.j_values.reserve(t.cells.size());
  for (std::size_t step = 0; step < t.cells.size(); ++step) {
    const RealVec2 e = spec.field_at(t.cells[step]);
    const PulseSpec pulse{e.dot(spec.mu) * spec.duration, spec.phi};
    const double j = transfer_fidelity(pulse_unitary(pulse), spec.initial, spec.target);
    trace.j_values.push_back(j);
    if (!trace.first_hit_step && j >= spec.threshold) trace.first_hit_step = step;
  }
  trace.lag1_autocorr = smoothness_summary(trace.j_values).lag1_autocorr;
  return trace;
}

SearchSpec offset_search_demo(std::uint64_t seed, double max_shift) {
  SearchSpec spec;
  SplitMix64 rng(seed);
  const double shift = max_shift * (2.0 * rng.uniform() - 1.0);
  spec.e_min += shift;
  spec.e_max += shift;
  spec.seed = seed;
  return spec;
}

}  // namespace sfcscan
