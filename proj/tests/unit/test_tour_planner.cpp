#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "sfcscan/errors.hpp"
#include "sfcscan/tour_planner.hpp"

using namespace sfcscan;

namespace {

PointSet corners() {
  return make_point_set({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, Region::unit_square);
}

std::vector<std::pair<double, double>> plain(const PointSet& ps) {
  std::vector<std::pair<double, double>> out;
  for (const auto& p : ps.points) out.emplace_back(p.x(), p.y());
  return out;
}

}  // namespace

TEST_CASE("point set validation") {
  CHECK_THROWS_AS((void)make_point_set({{1.5, 0.5}}, Region::unit_square), DomainError);
  CHECK_THROWS_AS((void)make_point_set({{0.0, 0.0}}, Region::disc), DomainError);
  const auto disc = make_point_set({{0.5, 0.5}}, Region::disc);
  CHECK(disc.area == doctest::Approx(std::numbers::pi / 4));
  CHECK(parse_region("disc") == Region::disc);
  CHECK(parse_region("square") == Region::unit_square);
  CHECK_FALSE(parse_region("hexagon").has_value());
}

TEST_CASE("tour length") {
  const auto ps = corners();
  const std::vector<std::size_t> perimeter{0, 1, 3, 2};
  const std::vector<std::size_t> crossing{0, 1, 2, 3};
  CHECK(tour_length(ps, perimeter) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(tour_length(ps, crossing) == doctest::Approx(2 + 2 * std::numbers::sqrt2).epsilon(1e-15));

  CHECK_THROWS_AS((void)tour_length(ps, std::vector<std::size_t>{0, 1, 1, 2}), DomainError);
  CHECK_THROWS_AS((void)tour_length(ps, std::vector<std::size_t>{0, 1, 2}), DomainError);
  CHECK_THROWS_AS((void)tour_length(ps, std::vector<std::size_t>{0, 1, 2, 4}), DomainError);
}

TEST_CASE("tour length is invariant under rotation, reversal, scaling") {
  const auto ps = uniform_points(9, Region::unit_square, 77);
  std::vector<std::size_t> order{3, 1, 4, 0, 5, 8, 2, 6, 7};
  const double base = tour_length(ps, order);
  for (int shift = 0; shift < 9; ++shift) {
    std::rotate(order.begin(), order.begin() + 1, order.end());
    CHECK(tour_length(ps, order) == doctest::Approx(base).epsilon(1e-14));
  }
  std::reverse(order.begin(), order.end());
  CHECK(tour_length(ps, order) == doctest::Approx(base).epsilon(1e-14));

  PointSet scaled = ps;
  for (auto& p : scaled.points) p *= 0.25;
  CHECK(tour_length(scaled, order) == doctest::Approx(0.25 * base).epsilon(1e-14));
  CHECK(hilbert_order_tour(scaled).length ==
        doctest::Approx(0.25 * hilbert_order_tour(ps).length).epsilon(1e-14));
}

TEST_CASE("hilbert order tour examples") {
  const auto one = make_point_set({{0.3, 0.3}}, Region::unit_square);
  CHECK(hilbert_order_tour(one).length == 0.0);

  const auto two = make_point_set({{0.1, 0.2}, {0.7, 0.9}}, Region::unit_square);
  CHECK(hilbert_order_tour(two).length ==
        doctest::Approx(2 * (two.points[0] - two.points[1]).norm()));

  const auto tour = hilbert_order_tour(corners());
  CHECK(tour.order == std::vector<std::size_t>{0, 2, 3, 1});
  CHECK(tour.length == doctest::Approx(4.0).epsilon(1e-15));

  const auto dup = make_point_set({{0.5, 0.5}, {0.5, 0.5}, {0.1, 0.1}}, Region::unit_square);
  const auto t = hilbert_order_tour(dup);
  CHECK(std::find(t.order.begin(), t.order.end(), 0) < std::find(t.order.begin(), t.order.end(), 1));

  CHECK_THROWS_AS((void)hilbert_order_tour(PointSet{}), DomainError);
}

TEST_CASE("etsp estimate") {
  CHECK(etsp_estimate(10000, 1.0) == doctest::Approx(72.0).epsilon(1e-15));
  CHECK(etsp_estimate(1, 2.0) == doctest::Approx(0.72 * std::sqrt(2.0)));
  CHECK(etsp_estimate(400, 3.0) / etsp_estimate(100, 3.0) == doctest::Approx(2.0));
  CHECK_THROWS_AS((void)etsp_estimate(0, 1.0), DomainError);
  CHECK_THROWS_AS((void)etsp_estimate(5, 0.0), DomainError);
}

TEST_CASE("brute force against Held-Karp and the hilbert heuristic") {
  const auto three = make_point_set({{0.1, 0.1}, {0.9, 0.2}, {0.4, 0.8}}, Region::unit_square);
  CHECK(brute_force_tsp(three).length == doctest::Approx(tour_length(three, std::vector<std::size_t>{0, 2, 1})));
  CHECK(brute_force_tsp(corners()).length == doctest::Approx(4.0));
  CHECK(brute_force_tsp(corners()).order == std::vector<std::size_t>{0, 1, 3, 2});

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto ps = uniform_points(8, Region::unit_square, seed);
    const auto exact = brute_force_tsp(ps);
    CHECK(exact.order.front() == 0);
    CHECK(std::abs(exact.length - oracle::held_karp(plain(ps))) < 1e-12);
    CHECK(exact.length <= hilbert_order_tour(ps).length + 1e-12);
  }
  CHECK_THROWS_AS((void)brute_force_tsp(uniform_points(11, Region::unit_square, 1)), SizeError);
  CHECK_NOTHROW((void)brute_force_tsp(uniform_points(10, Region::disc, 1)));
}

TEST_CASE("uniform points") {
  const auto a = uniform_points(500, Region::disc, 8);
  const auto b = uniform_points(500, Region::disc, 8);
  CHECK(a.points == b.points);
  for (const auto& p : a.points) CHECK((p - Point2(0.5, 0.5)).norm() <= 0.5);
  const auto sq = uniform_points(2000, Region::unit_square, 8);
  Point2 mean = Point2::Zero();
  for (const auto& p : sq.points) mean += p / 2000.0;
  CHECK(mean.x() == doctest::Approx(0.5).epsilon(0.05));
  CHECK(mean.y() == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("bohr jump points") {
  const std::vector<Jump> jumps{{1, 2}, {2, 3}};
  const auto out = bohr_jump_points(jumps);
  CHECK(out.points.points[0] == Point2(1.0, 0.25));
  CHECK(out.frequencies[0] == doctest::Approx(0.75));
  CHECK(out.points.points[1].x() == doctest::Approx(0.25));
  CHECK(out.points.points[1].y() == doctest::Approx(1.0 / 9));
  CHECK(out.frequencies[1] == doctest::Approx(0.25 - 1.0 / 9));
  CHECK(out.points.area == 1.0);

  double previous = 1.0;
  for (int n = 10; n <= 10000; n *= 10) {
    const std::vector<Jump> near{{n, n + 1}};
    const double w = bohr_jump_points(near).frequencies[0];
    CHECK(w < previous);
    previous = w;
  }
  CHECK(previous < 1e-11);

  CHECK_THROWS_AS((void)bohr_jump_points(std::vector<Jump>{{0, 2}}), DomainError);
  CHECK_THROWS_AS((void)bohr_jump_points(std::vector<Jump>{{3, 3}}), DomainError);
}
