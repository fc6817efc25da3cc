#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "sfcscan/io.hpp"

namespace sfcscan::io {

std::string format_number(double v, Precision p) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of -0

  std::string s;
  if (p == Precision::six) {
    char buf[32];
    const int len = std::snprintf(buf, sizeof buf, "%.6g", v);
    s.assign(buf, static_cast<std::size_t>(len));
  } else {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    s.assign(buf, res.ptr);
  }
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& t) {
  os << "step,x,y\n";
  for (std::size_t i = 0; i < t.cells.size(); ++i) {
    os << i << ',' << t.cells[i].x << ',' << t.cells[i].y << '\n';
  }
}

void write_field_map_csv(std::ostream& os, const FieldMap& map, Precision p) {
  os << "i,j,x,y,Hx,Hy,Hz\n";
  const std::size_t n = map.grid_n();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const Vec3 pt = map.config().sample_point(i, j);
      const Vec3& h = map.at(i, j);
      os << i << ',' << j << ',' << format_number(pt.x(), p) << ',' << format_number(pt.y(), p)
         << ',' << format_number(h.x(), p) << ',' << format_number(h.y(), p) << ','
         << format_number(h.z(), p) << '\n';
    }
  }
}

void write_field_map_pgm(std::ostream& os, const FieldMap& map, FieldComponent component) {
  const std::size_t n = map.grid_n();
  double lo = map.component(0, 0, component);
  double hi = lo;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      lo = std::min(lo, map.component(i, j, component));
      hi = std::max(hi, map.component(i, j, component));
    }
  }
  os << "P2\n# " << to_string(component) << " min=" << format_number(lo)
     << " max=" << format_number(hi) << '\n'
     << n << ' ' << n << "\n255\n";
  for (std::size_t row = 0; row < n; ++row) {
    const std::size_t j = n - 1 - row;
    for (std::size_t i = 0; i < n; ++i) {
      const double v = map.component(i, j, component);
      const long level = hi > lo ? std::lround((v - lo) / (hi - lo) * 255.0) : 0;
      os << (i == 0 ? "" : " ") << level;
    }
    os << '\n';
  }
}

namespace {

std::string optional_number(const std::optional<double>& v, Precision p) {
  return v ? format_number(*v, p) : std::string{};
}

}  // namespace

void write_table1_csv(std::ostream& os, const Table1Report& report, Precision p) {
  os << "k,linear,hilbert,ref_linear,ref_hilbert,delta_linear,delta_hilbert\n";
  for (const auto& row : report.rows) {
    os << row.k << ',' << format_number(row.linear, p) << ',' << format_number(row.hilbert, p)
       << ',' << optional_number(row.ref_linear, p) << ',' << optional_number(row.ref_hilbert, p)
       << ',' << optional_number(row.delta_linear, p) << ','
       << optional_number(row.delta_hilbert, p) << '\n';
  }
}

void write_resonance_csv(std::ostream& os, const ResonanceScan& scan, Precision p) {
  const std::size_t n = scan.config.grid_n;
  std::vector<std::size_t> by_step(scan.cells.size());
  for (std::size_t idx = 0; idx < scan.cells.size(); ++idx) {
    by_step[scan.cells[idx].visit_step] = idx;
  }
  os << "step,i,j,x,y,Hz_true,Hz_inferred,error,flag\n";
  for (std::size_t step = 0; step < by_step.size(); ++step) {
    const std::size_t i = by_step[step] % n;
    const std::size_t j = by_step[step] / n;
    const auto& c = scan.cells[by_step[step]];
    const Vec3 pt = scan.config.sample_point(i, j);
    os << step << ',' << i << ',' << j << ',' << format_number(pt.x(), p) << ','
       << format_number(pt.y(), p) << ',' << format_number(c.true_hz, p) << ','
       << format_number(c.inferred_hz, p) << ',' << format_number(c.inferred_hz - c.true_hz, p)
       << ',' << to_string(c.flag) << '\n';
  }
}

void write_tour_csv(std::ostream& os, const PointSet& ps, const Tour& tour, Precision p) {
  os << "pos,point_index,x,y\n";
  for (std::size_t pos = 0; pos < tour.order.size(); ++pos) {
    const auto& pt = ps.points[tour.order[pos]];
    os << pos << ',' << tour.order[pos] << ',' << format_number(pt.x(), p) << ','
       << format_number(pt.y(), p) << '\n';
  }
}

std::string tour_summary(const PointSet& ps, const Tour& tour, Precision p) {
  const double n = static_cast<double>(ps.points.size());
  return "N=" + std::to_string(ps.points.size()) + " A=" + format_number(ps.area, p) +
         " L=" + format_number(tour.length, p) +
         " L/sqrt(NA)=" + format_number(tour.length / std::sqrt(n * ps.area), p);
}

void write_search_trace_csv(std::ostream& os, const SearchSpec& spec, const SearchTrace& trace,
                            Precision p) {
  os << "step,Ex,Ey,J\n";
  for (std::size_t s = 0; s < trace.cells.size(); ++s) {
    const RealVec2 e = spec.field_at(trace.cells[s]);
    os << s << ',' << format_number(e.x(), p) << ',' << format_number(e.y(), p) << ','
       << format_number(trace.j_values[s], p) << '\n';
  }
}

std::string search_summary(const SearchTrace& trace, Precision p) {
  return "kind=" + std::string(to_string(trace.kind)) +
         " lag1=" + (trace.lag1_autocorr ? format_number(*trace.lag1_autocorr, p) : "undefined") +
         " first_hit=" +
         (trace.first_hit_step ? std::to_string(*trace.first_hit_step) : std::string("none"));
}

void write_matrix_csv(std::ostream& os, const Matrix2& m, Precision p) {
  os << "row,col,re,im\n";
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      os << r + 1 << ',' << c + 1 << ',' << format_number(m(r, c).real(), p) << ','
         << format_number(m(r, c).imag(), p) << '\n';
    }
  }
}

}  // namespace sfcscan::io
