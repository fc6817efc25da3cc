#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "sfcscan/errors.hpp"
#include "sfcscan/pulse_control.hpp"

using namespace sfcscan;

namespace {

constexpr double kPi = std::numbers::pi;
const std::complex<double> kI(0.0, 1.0);

double max_abs(const Matrix2& m) { return m.cwiseAbs().maxCoeff(); }

double unitarity_defect(const Matrix2& u) {
  return max_abs(u.adjoint() * u - Matrix2::Identity());
}

}  // namespace

TEST_CASE("coupling integral") {
  FieldSegment seg;
  seg.t_start = 1.0;
  seg.t_end = 3.0;
  seg.mu = RealVec2(0.5, 2.0);
  seg.times = {1.0, 1.5, 3.0};
  seg.fields = {RealVec2(2, 1), RealVec2(2, 1), RealVec2(2, 1)};
  CHECK(coupling_integral(seg) == doctest::Approx((2 * 0.5 + 1 * 2.0) * 2.0).epsilon(1e-15));

  // Linear field: trapezoid is exact. E(t) = (t, 2t), mu = (1, 1) -> int 3t dt over [0, 2] = 6.
  seg.t_start = 0.0;
  seg.t_end = 2.0;
  seg.mu = RealVec2(1, 1);
  seg.times = {0.0, 0.3, 1.1, 2.0};
  seg.fields.clear();
  for (double t : seg.times) seg.fields.emplace_back(t, 2 * t);
  CHECK(coupling_integral(seg) == doctest::Approx(6.0).epsilon(1e-14));

  // E = (sin t, 0) over [0, pi] integrates to 2.
  FieldSegment sine;
  sine.t_start = 0.0;
  sine.t_end = kPi;
  sine.mu = RealVec2(1, 0);
  const int n = 10000;
  for (int k = 0; k < n; ++k) {
    const double t = (k == n - 1) ? kPi : kPi * k / (n - 1);
    sine.times.push_back(t);
    sine.fields.emplace_back(std::sin(t), 0.0);
  }
  CHECK(std::abs(coupling_integral(sine) - 2.0) < 1e-6);
}

TEST_CASE("coupling integral errors") {
  FieldSegment seg;
  seg.t_start = 0.0;
  seg.t_end = 1.0;
  seg.times = {0.0};
  seg.fields = {RealVec2(1, 1)};
  CHECK_THROWS_AS((void)coupling_integral(seg), DomainError);
  seg.times = {0.0, 0.5, 0.5, 1.0};
  seg.fields.assign(4, RealVec2(1, 1));
  CHECK_THROWS_AS((void)coupling_integral(seg), DomainError);
  seg.times = {0.0, 0.9};
  seg.fields.assign(2, RealVec2(1, 1));
  CHECK_THROWS_AS((void)coupling_integral(seg), DomainError);
  seg.t_end = 0.0;
  seg.times = {0.0, 0.0};
  CHECK_THROWS_AS((void)coupling_integral(seg), DomainError);
}

TEST_CASE("pulse unitary examples") {
  CHECK(max_abs(pulse_unitary({0.0, 1.234}) - Matrix2::Identity()) == 0.0);

  Matrix2 expected;
  expected << 1.0, 0.0, -2.5, 1.0;
  CHECK(max_abs(pulse_unitary({2.5, 0.0}) - expected) < 1e-15);

  const auto flip = pulse_unitary({std::numbers::sqrt2 * kPi, kPi / 4});
  CHECK(max_abs(flip + Matrix2::Identity()) < 1e-12);
  const auto series = oracle::series_exp(std::numbers::sqrt2 * kPi, kPi / 4);
  CHECK(std::abs(series[0][0] + 1.0) < 1e-12);
  CHECK(std::abs(series[1][1] + 1.0) < 1e-12);
}

TEST_CASE("closed form against the series oracle") {
  double worst = 0.0;
  for (int a = 0; a <= 100; ++a) {
    for (int b = 0; b <= 100; ++b) {
      const double c = -5.0 + 10.0 * a / 100;
      const double phi = 2 * kPi * b / 101;
      const auto u = pulse_unitary({c, phi});
      const auto ref = oracle::series_exp(c, phi);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) worst = std::max(worst, std::abs(u(i, j) - ref[i][j]));
      CHECK(std::abs(u.determinant() - 1.0) < 1e-12);
    }
  }
  CHECK(worst <= 1e-10);

  // Near the nilpotent boundary sin(phi)cos(phi) -> 0 from both sides.
  for (double eps : {1e-9, -1e-9, 3e-12, -3e-12, 0.0}) {
    for (double phi0 : {0.0, kPi / 2, kPi, 3 * kPi / 2}) {
      const double phi = phi0 + eps;
      CHECK(std::abs(std::sin(phi) * std::cos(phi)) < 1e-8);
      for (double c : {-5.0, -0.7, 1.3, 5.0}) {
        const auto u = pulse_unitary({c, phi});
        const auto ref = oracle::series_exp(c, phi);
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) CHECK(std::abs(u(i, j) - ref[i][j]) <= 1e-10);
      }
    }
  }
}

TEST_CASE("unitarity only on the antisymmetric slice") {
  for (double phi : {kPi / 4, 5 * kPi / 4}) {
    for (double c = -5.0; c <= 5.0; c += 0.25) CHECK(unitarity_defect(pulse_unitary({c, phi})) <= 1e-12);
  }
  CHECK(unitarity_defect(pulse_unitary({1.0, 0.0})) > 0.1);
}

TEST_CASE("same-generator pulses add") {
  for (double c1 : {-2.0, 0.3, 1.7}) {
    for (double c2 : {-0.4, 0.9, 3.1}) {
      for (double phi : {kPi / 4, 0.0, 1.1, 2.5, 4.0}) {
        const auto lhs = pulse_unitary({c1 + c2, phi});
        const Matrix2 rhs = pulse_unitary({c2, phi}) * pulse_unitary({c1, phi});
        CHECK(max_abs(lhs - rhs) <= 1e-12 * std::max(1.0, max_abs(lhs)));
      }
    }
  }
  const PulseTrain two{{{0.7, kPi / 4}, {1.9, kPi / 4}}, 0.0};
  CHECK(max_abs(compose_sequence(two) - pulse_unitary({2.6, kPi / 4})) < 1e-12);
}

TEST_CASE("compose sequence") {
  const PulseSpec p{1.3, 0.4};
  CHECK(max_abs(compose_sequence({{p}, 0.0}) - pulse_unitary(p)) == 0.0);

  const PulseTrain identities{{{0.0, 0.1}, {0.0, 2.0}, {0.0, 3.0}}, kPi};
  CHECK(max_abs(compose_sequence(identities) + Matrix2::Identity()) < 1e-15);
  const PulseTrain phase{{{0.0, 0.3}}, 0.8};
  CHECK(compose_sequence(phase) == std::polar(1.0, 0.8) * Matrix2::Identity());

  // The first pulse acts first (rightmost factor).
  const PulseSpec a{1.0, 0.0};
  const PulseSpec b{1.0, kPi / 2};
  const auto u = compose_sequence({{a, b}, 0.3});
  CHECK(max_abs(u - std::exp(kI * 0.3) * pulse_unitary(b) * pulse_unitary(a)) < 1e-15);
  CHECK(max_abs(u - std::exp(kI * 0.3) * pulse_unitary(a) * pulse_unitary(b)) > 0.1);
}

TEST_CASE("transfer fidelity") {
  const auto flip = pulse_unitary({std::numbers::sqrt2 * kPi / 2, kPi / 4});
  CHECK(transfer_fidelity(flip, RealVec2(1, 0), RealVec2(0, 1)) == doctest::Approx(1.0));
  CHECK(transfer_fidelity(Matrix2::Identity(), RealVec2(3, 0), RealVec2(2, 0)) == doctest::Approx(1.0));
  CHECK_THROWS_AS((void)transfer_fidelity(flip, RealVec2(0, 0), RealVec2(0, 1)), DomainError);
  // Non-unitary propagator still gives a bounded value.
  const auto shear = pulse_unitary({10.0, 0.0});
  const double j = transfer_fidelity(shear, RealVec2(1, 0), RealVec2(0, 1));
  CHECK(j >= 0.0);
  CHECK(j <= 1.0 + 1e-12);
}

TEST_CASE("control scan search") {
  SearchSpec spec;
  spec.order = CurveOrder(3);
  auto trace = control_scan_search(spec);
  CHECK(trace.j_values.size() == 64);
  CHECK(trace.kind == TrajectoryKind::hilbert);
  for (double j : trace.j_values) {
    CHECK(j >= 0.0);
    CHECK(j <= 1.0 + 1e-12);
  }
  REQUIRE(trace.lag1_autocorr.has_value());

  spec.threshold = 1.5;
  CHECK_FALSE(control_scan_search(spec).first_hit_step.has_value());

  spec.threshold = 0.5;
  spec.target = spec.initial;
  trace = control_scan_search(spec);
  REQUIRE(trace.first_hit_step.has_value());
  CHECK(trace.j_values[*trace.first_hit_step] >= 0.5);
  for (std::size_t s = 0; s < *trace.first_hit_step; ++s) CHECK(trace.j_values[s] < 0.5);

  spec.initial = RealVec2::Zero();
  CHECK_THROWS_AS((void)control_scan_search(spec), DomainError);

  // Bounded for generators off the unitary slice too.
  SearchSpec off;
  off.order = CurveOrder(3);
  off.phi = 0.3;
  for (double j : control_scan_search(off).j_values) CHECK(j <= 1.0 + 1e-12);
}

TEST_CASE("search objective matches the closed form on the demo slice") {
  // With phi = pi/4 and mu = (1,0), J = sin^2(E_x * duration / sqrt2).
  SearchSpec spec;
  spec.order = CurveOrder(2);
  spec.kind = TrajectoryKind::raster;
  const auto trace = control_scan_search(spec);
  for (std::size_t s = 0; s < trace.cells.size(); ++s) {
    const double ex = spec.field_at(trace.cells[s]).x();
    const double expected = std::pow(std::sin(ex / std::numbers::sqrt2), 2);
    CHECK(trace.j_values[s] == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("offset demo is seeded") {
  const auto a = offset_search_demo(4);
  const auto b = offset_search_demo(4);
  CHECK(a.e_min == b.e_min);
  CHECK(a.e_max - a.e_min == doctest::Approx(6.0));
  CHECK(std::abs(a.e_min + 3.0) <= 1.0);
  CHECK(offset_search_demo(5).e_min != a.e_min);
}
