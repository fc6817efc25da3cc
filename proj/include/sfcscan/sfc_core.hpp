#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace sfcscan {

/// Refinement order m of a square grid with side 2^m.
///
/// Orders are limited to 1..16 so that every Hilbert index fits in 32 bits.
class CurveOrder {
 public:
  static constexpr int kMin = 1;
  static constexpr int kMax = 16;

  /// Throws DomainError when m is outside [kMin, kMax].
  explicit CurveOrder(int m);

  [[nodiscard]] int value() const noexcept { return m_; }
  [[nodiscard]] std::uint32_t side() const noexcept { return std::uint32_t{1} << m_; }
  [[nodiscard]] std::uint64_t cell_count() const noexcept {
    return std::uint64_t{1} << (2 * m_);
  }

  friend bool operator==(CurveOrder, CurveOrder) = default;

 private:
  int m_;
};

struct GridCell {
  std::uint32_t x = 0;
  std::uint32_t y = 0;

  friend bool operator==(const GridCell&, const GridCell&) = default;
};

enum class TrajectoryKind { raster, serpentine, hilbert, random };

[[nodiscard]] std::string_view to_string(TrajectoryKind kind) noexcept;
[[nodiscard]] std::optional<TrajectoryKind> parse_trajectory_kind(std::string_view text) noexcept;

/// Ordered visit of every cell of a 2^m x 2^m grid.
struct Trajectory {
  TrajectoryKind kind = TrajectoryKind::raster;
  CurveOrder order{1};
  std::uint64_t seed = 0;
  std::vector<GridCell> cells;
};

/// d-th cell of the order-m Hilbert curve. The curve starts at (0,0) and the
/// first-order pattern is (0,0),(0,1),(1,1),(1,0); higher orders follow by the
/// usual rotate/reflect recursion.
[[nodiscard]] GridCell hilbert_index_to_cell(std::uint64_t d, CurveOrder order);

/// Inverse of hilbert_index_to_cell.
[[nodiscard]] std::uint64_t hilbert_cell_to_index(GridCell cell, CurveOrder order);

/// Builds a full-grid trajectory. raster is row-major with x fastest and rows
/// ascending in y; serpentine reverses every odd row; hilbert follows the
/// codec; random is a splitmix64-driven Fisher-Yates shuffle of the raster
/// order (seed is ignored for the other kinds).
[[nodiscard]] Trajectory generate_trajectory(TrajectoryKind kind, CurveOrder order,
                                             std::uint64_t seed = 0);

/// Sum of Euclidean distances between consecutive cell centres, with the
/// grid mapped onto the unit square.
[[nodiscard]] double polyline_length(const Trajectory& t);

}  // namespace sfcscan
