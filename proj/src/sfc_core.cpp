#include "sfcscan/sfc_core.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "sfcscan/errors.hpp"
#include "sfcscan/splitmix.hpp"

namespace sfcscan {

CurveOrder::CurveOrder(int m) : m_(m) {
  if (m < kMin || m > kMax) {
    throw DomainError("curve order " + std::to_string(m) + " outside [1, 16]");
  }
}

std::string_view to_string(TrajectoryKind kind) noexcept {
  switch (kind) {
    case TrajectoryKind::raster:
      return "raster";
    case TrajectoryKind::serpentine:
      return "serpentine";
    case TrajectoryKind::hilbert:
      return "hilbert";
    case TrajectoryKind::random:
      return "random";
  }
  return "unknown";
}

std::optional<TrajectoryKind> parse_trajectory_kind(std::string_view text) noexcept {
  for (auto kind : {TrajectoryKind::raster, TrajectoryKind::serpentine, TrajectoryKind::hilbert,
                    TrajectoryKind::random}) {
    if (text == to_string(kind)) return kind;
  }
  if (text == "linear") return TrajectoryKind::raster;
  return std::nullopt;
}

namespace {

// Rotate/reflect a quadrant so that the sub-curve has the canonical orientation.
void rotate(std::uint32_t n, std::uint32_t& x, std::uint32_t& y, std::uint32_t rx,
            std::uint32_t ry) {
  if (ry == 0) {
    if (rx == 1) {
      x = n - 1 - x;
      y = n - 1 - y;
    }
    std::swap(x, y);
  }
}

}  // namespace

GridCell hilbert_index_to_cell(std::uint64_t d, CurveOrder order) {
  if (d >= order.cell_count()) {
    throw DomainError("hilbert index " + std::to_string(d) + " outside [0, " +
                      std::to_string(order.cell_count()) + ")");
  }
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  std::uint64_t t = d;
  for (std::uint32_t s = 1; s < order.side(); s <<= 1) {
    const auto rx = static_cast<std::uint32_t>(1 & (t >> 1));
    const auto ry = static_cast<std::uint32_t>(1 & (t ^ rx));
    rotate(s, x, y, rx, ry);
    x += s * rx;
    y += s * ry;
    t >>= 2;
  }
  return {x, y};
}

std::uint64_t hilbert_cell_to_index(GridCell cell, CurveOrder order) {
  const std::uint32_t n = order.side();
  if (cell.x >= n || cell.y >= n) {
    throw DomainError("cell (" + std::to_string(cell.x) + "," + std::to_string(cell.y) +
                      ") outside a " + std::to_string(n) + "x" + std::to_string(n) + " grid");
  }
  std::uint32_t x = cell.x;
  std::uint32_t y = cell.y;
  std::uint64_t d = 0;
  for (std::uint32_t s = n >> 1; s > 0; s >>= 1) {
    const std::uint32_t rx = (x & s) > 0 ? 1 : 0;
    const std::uint32_t ry = (y & s) > 0 ? 1 : 0;
    d += std::uint64_t{s} * s * ((3 * rx) ^ ry);
    rotate(n, x, y, rx, ry);
  }
  return d;
}

Trajectory generate_trajectory(TrajectoryKind kind, CurveOrder order, std::uint64_t seed) {
  Trajectory t{kind, order, seed, {}};
  const std::uint32_t n = order.side();
  const std::uint64_t count = order.cell_count();
  t.cells.reserve(count);

  switch (kind) {
    case TrajectoryKind::raster:
    case TrajectoryKind::random:
      for (std::uint32_t y = 0; y < n; ++y) {
        for (std::uint32_t x = 0; x < n; ++x) t.cells.push_back({x, y});
      }
      break;
    case TrajectoryKind::serpentine:
      for (std::uint32_t y = 0; y < n; ++y) {
        for (std::uint32_t i = 0; i < n; ++i) {
          t.cells.push_back({(y % 2 == 0) ? i : n - 1 - i, y});
        }
      }
      break;
    case TrajectoryKind::hilbert:
      for (std::uint64_t d = 0; d < count; ++d) t.cells.push_back(hilbert_index_to_cell(d, order));
      break;
  }

  if (kind == TrajectoryKind::random) {
    SplitMix64 rng(seed);
    for (std::uint64_t i = count - 1; i > 0; --i) {
      std::swap(t.cells[i], t.cells[rng.below(i + 1)]);
    }
  }
  return t;
}

double polyline_length(const Trajectory& t) {
  const double side = static_cast<double>(t.order.side());
  double length = 0.0;
  for (std::size_t i = 1; i < t.cells.size(); ++i) {
    const double dx = static_cast<double>(t.cells[i].x) - static_cast<double>(t.cells[i - 1].x);
    const double dy = static_cast<double>(t.cells[i].y) - static_cast<double>(t.cells[i - 1].y);
    length += std::hypot(dx, dy);
  }
  return length / side;
}

}  // namespace sfcscan
