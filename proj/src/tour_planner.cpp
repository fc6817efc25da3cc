#include "sfcscan/tour_planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "sfcscan/errors.hpp"
#include "sfcscan/splitmix.hpp"

namespace sfcscan {

std::string_view to_string(Region r) noexcept {
  return r == Region::unit_square ? "square" : "disc";
}

std::optional<Region> parse_region(std::string_view text) noexcept {
  if (text == "square" || text == "unit_square") return Region::unit_square;
  if (text == "disc") return Region::disc;
  return std::nullopt;
}

double region_area(Region r) noexcept {
  return r == Region::unit_square ? 1.0 : std::numbers::pi / 4;
}

namespace {

constexpr double kRegionSlack = 1e-12;

bool inside(Region r, const Point2& p) {
  if (r == Region::unit_square) {
    return p.x() >= -kRegionSlack && p.x() <= 1 + kRegionSlack && p.y() >= -kRegionSlack &&
           p.y() <= 1 + kRegionSlack;
  }
  return (p - Point2(0.5, 0.5)).norm() <= 0.5 + kRegionSlack;
}

double closed_length(const std::vector<Point2>& pts, std::span<const std::size_t> order) {
  double length = 0.0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    length += (pts[order[(i + 1) % order.size()]] - pts[order[i]]).norm();
  }
  return length;
}

}  // namespace

PointSet make_point_set(std::vector<Point2> points, Region region) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!points[i].allFinite() || !inside(region, points[i])) {
      throw DomainError("point " + std::to_string(i) + " lies outside the " +
                        std::string(to_string(region)));
    }
  }
  return PointSet{std::move(points), region_area(region), region};
}

double tour_length(const PointSet& ps, std::span<const std::size_t> order) {
  const std::size_t n = ps.points.size();
  if (order.size() != n) throw DomainError("tour order is not a permutation of the points");
  std::vector<bool> seen(n, false);
  for (auto idx : order) {
    if (idx >= n || seen[idx]) throw DomainError("tour order is not a permutation of the points");
    seen[idx] = true;
  }
  return closed_length(ps.points, order);
}

Tour hilbert_order_tour(const PointSet& ps, CurveOrder order) {
  const std::size_t n = ps.points.size();
  if (n == 0) throw DomainError("empty point set");

  Point2 lo = ps.points.front();
  Point2 hi = ps.points.front();
  for (const auto& p : ps.points) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  const double side = (hi - lo).maxCoeff();
  const double cells = static_cast<double>(order.side());
  const auto last = order.side() - 1;

  auto to_cell = [&](double v, double origin) -> std::uint32_t {
    if (side <= 0.0) return 0;
    const double scaled = std::floor((v - origin) / side * cells);
    return static_cast<std::uint32_t>(std::clamp(scaled, 0.0, static_cast<double>(last)));
  };

  std::vector<std::uint64_t> key(n);
  for (std::size_t i = 0; i < n; ++i) {
    const GridCell c{to_cell(ps.points[i].x(), lo.x()), to_cell(ps.points[i].y(), lo.y())};
    key[i] = hilbert_cell_to_index(c, order);
  }

  Tour tour;
  tour.order.resize(n);
  std::iota(tour.order.begin(), tour.order.end(), std::size_t{0});
  std::stable_sort(tour.order.begin(), tour.order.end(),
                   [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
  tour.length = closed_length(ps.points, tour.order);
  return tour;
}

double etsp_estimate(std::uint64_t n, double area) {
  if (n < 1) throw DomainError("etsp_estimate needs at least one point");
  if (!(area > 0.0)) throw DomainError("etsp_estimate needs a positive area");
  return 0.72 * std::sqrt(static_cast<double>(n) * area);
}

Tour brute_force_tsp(const PointSet& ps) {
  const std::size_t n = ps.points.size();
  if (n == 0) throw DomainError("empty point set");
  if (n > kBruteForceLimit) {
    throw SizeError("brute force limited to " + std::to_string(kBruteForceLimit) + " points");
  }
  std::vector<std::size_t> current(n);
  std::iota(current.begin(), current.end(), std::size_t{0});

  Tour best{current, closed_length(ps.points, current)};
  // next_permutation visits orders lexicographically, so strict < keeps the
  // first minimum found.
  while (std::next_permutation(current.begin() + 1, current.end())) {
    const double len = closed_length(ps.points, current);
    if (len < best.length) best = Tour{current, len};
  }
  return best;
}

PointSet uniform_points(std::size_t n, Region region, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Point2> pts;
  pts.reserve(n);
  while (pts.size() < n) {
    const double x = rng.uniform();
    const double y = rng.uniform();
    if (region == Region::disc && (Point2(x, y) - Point2(0.5, 0.5)).squaredNorm() > 0.25) continue;
    pts.emplace_back(x, y);
  }
  return make_point_set(std::move(pts), region);
}

BohrPoints bohr_jump_points(std::span<const Jump> jumps) {
  BohrPoints out;
  std::vector<Point2> pts;
  pts.reserve(jumps.size());
  for (const auto& j : jumps) {
    if (j.n1 < 1 || j.n2 < 1) throw DomainError("principal quantum numbers must be >= 1");
    if (j.n1 == j.n2) throw DomainError("a jump needs n1 != n2");
    const double a = 1.0 / (static_cast<double>(j.n1) * j.n1);
    const double b = 1.0 / (static_cast<double>(j.n2) * j.n2);
    pts.emplace_back(a, b);
    out.frequencies.push_back(std::abs(a - b));
  }
  out.points = make_point_set(std::move(pts), Region::unit_square);
  return out;
}

}  // namespace sfcscan
