#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "sfcscan/sfc_core.hpp"

namespace sfcscan {

using Point2 = Eigen::Vector2d;

/// unit_square is [0,1]^2 (area 1); disc is centred at (0.5, 0.5) with
/// radius 0.5 (area pi/4).
enum class Region { unit_square, disc };

[[nodiscard]] std::string_view to_string(Region r) noexcept;
[[nodiscard]] std::optional<Region> parse_region(std::string_view text) noexcept;
[[nodiscard]] double region_area(Region r) noexcept;

struct PointSet {
  std::vector<Point2> points;
  double area = 1.0;
  Region region = Region::unit_square;
};

/// Builds a point set with the region's area. Throws DomainError when a point
/// lies outside the region.
[[nodiscard]] PointSet make_point_set(std::vector<Point2> points, Region region);

/// Closed tour; length includes the edge back to the start.
struct Tour {
  std::vector<std::size_t> order;
  double length = 0.0;
};

/// Closed-tour Euclidean length. Throws DomainError when order is not a
/// permutation of the point indices.
[[nodiscard]] double tour_length(const PointSet& ps, std::span<const std::size_t> order);

/// Orders points by their order-m Hilbert index over the bounding square of the
/// set, ties kept in input order.
[[nodiscard]] Tour hilbert_order_tour(const PointSet& ps, CurveOrder order = CurveOrder(10));

/// Asymptotic optimal tour length 0.72 sqrt(N A).
[[nodiscard]] double etsp_estimate(std::uint64_t n, double area);

inline constexpr std::size_t kBruteForceLimit = 10;

/// Exact optimal closed tour by enumeration with point 0 fixed first. Ties are
/// resolved to the lexicographically smallest order. Throws SizeError above
/// kBruteForceLimit points.
[[nodiscard]] Tour brute_force_tsp(const PointSet& ps);

/// Uniform points from splitmix64: direct sampling in the square, rejection
/// from the bounding square for the disc.
[[nodiscard]] PointSet uniform_points(std::size_t n, Region region, std::uint64_t seed);

struct Jump {
  int n1 = 1;
  int n2 = 2;
};

struct BohrPoints {
  PointSet points;
  std::vector<double> frequencies;  // |1/n1^2 - 1/n2^2| in Rydberg units
};

/// Maps each jump n1 -> n2 to the point (1/n1^2, 1/n2^2) in the unit square.
[[nodiscard]] BohrPoints bohr_jump_points(std::span<const Jump> jumps);

}  // namespace sfcscan
