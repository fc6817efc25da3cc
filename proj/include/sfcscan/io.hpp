#pragma once

#include <iosfwd>
#include <string>

#include "sfcscan/dipole_field.hpp"
#include "sfcscan/pulse_control.hpp"
#include "sfcscan/scan_analysis.hpp"
#include "sfcscan/sfc_core.hpp"
#include "sfcscan/tour_planner.hpp"

namespace sfcscan::io {

/// six: %.6g. full: shortest string that round-trips. Integral values keep a
/// trailing ".0" in both modes.
enum class Precision { six, full };

[[nodiscard]] std::string format_number(double v, Precision p = Precision::six);

void write_trajectory_csv(std::ostream& os, const Trajectory& t);
void write_field_map_csv(std::ostream& os, const FieldMap& map, Precision p = Precision::six);
/// Plain P2 greymap, top row = largest y, values rescaled min -> 0, max -> 255.
void write_field_map_pgm(std::ostream& os, const FieldMap& map, FieldComponent component);
void write_table1_csv(std::ostream& os, const Table1Report& report, Precision p = Precision::six);
void write_resonance_csv(std::ostream& os, const ResonanceScan& scan,
                         Precision p = Precision::six);
void write_tour_csv(std::ostream& os, const PointSet& ps, const Tour& tour,
                    Precision p = Precision::six);
/// `N=<n> A=<a> L=<len> L/sqrt(NA)=<c>`
[[nodiscard]] std::string tour_summary(const PointSet& ps, const Tour& tour,
                                       Precision p = Precision::six);
void write_search_trace_csv(std::ostream& os, const SearchSpec& spec, const SearchTrace& trace,
                            Precision p = Precision::six);
/// `kind=<k> lag1=<r> first_hit=<i|none>`
[[nodiscard]] std::string search_summary(const SearchTrace& trace, Precision p = Precision::six);
void write_matrix_csv(std::ostream& os, const Matrix2& m, Precision p = Precision::six);

}  // namespace sfcscan::io
