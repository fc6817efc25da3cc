#include "sfcscan/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "sfcscan/errors.hpp"
#include "sfcscan/io.hpp"
#include "sfcscan/run_config.hpp"

namespace sfcscan::cli {

namespace {

std::optional<std::string> find_config_path(int argc, const char* const* argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string_view arg(argv[i]);
    if (arg == "--config") {
      if (i + 1 >= argc) throw UsageError("--config needs a path");
      return std::string(argv[i + 1]);
    }
    if (arg.starts_with("--config=")) return std::string(arg.substr(9));
  }
  return std::nullopt;
}

template <typename T>
T parse_enum(const std::string& text, std::optional<T> (*parser)(std::string_view) noexcept,
             const char* what) {
  if (auto v = parser(text)) return *v;
  throw UsageError(std::string("unknown ") + what + ": " + text);
}

io::Precision parse_precision(const std::string& text) {
  if (text == "6") return io::Precision::six;
  if (text == "full") return io::Precision::full;
  throw UsageError("--precision must be 6 or full");
}

void with_output(const std::string& path, std::ostream& out,
                 const std::function<void(std::ostream&)>& write) {
  if (path.empty() || path == "-") {
    write(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + path);
  write(file);
  if (!file) throw UsageError("failed writing " + path);
}

RealVec2 parse_pair(const std::string& text, const char* what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError(std::string(what) + " expects a,b");
  double a = 0.0;
  double b = 0.0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  const auto r1 = std::from_chars(begin, begin + comma, a);
  const auto r2 = std::from_chars(begin + comma + 1, end, b);
  if (r1.ec != std::errc{} || r1.ptr != begin + comma || r2.ec != std::errc{} || r2.ptr != end) {
    throw UsageError(std::string(what) + " expects two numbers a,b: " + text);
  }
  return {a, b};
}

PulseSpec parse_pulse(const std::string& text) {
  const auto v = parse_pair(text, "--pulse");
  return {v.x(), v.y()};
}

std::vector<Jump> parse_jumps(const std::string& text) {
  std::vector<Jump> jumps;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, comma - start);
    const auto dash = item.find('-');
    Jump j;
    const auto* b = item.data();
    const auto* e = item.data() + item.size();
    if (dash == std::string::npos ||
        std::from_chars(b, b + dash, j.n1).ptr != b + dash ||
        std::from_chars(b + dash + 1, e, j.n2).ptr != e) {
      throw UsageError("--jumps expects n1-n2 pairs separated by commas: " + text);
    }
    jumps.push_back(j);
    start = comma + 1;
  }
  return jumps;
}

std::uint64_t require_seed(const std::optional<std::uint64_t>& seed, const char* why) {
  if (!seed) throw UsageError(std::string("--seed is required ") + why);
  return *seed;
}

// Settings shared by several subcommands, seeded from the config file.
struct Settings {
  int order = 5;
  double window_side = 1.0;
  double moment_x = std::numbers::sqrt2 / 2;
  double moment_y = std::numbers::sqrt2 / 2;
  double moment_z = 0.0;
  double plane_z = 0.0;
  std::string mode = "pearson";
  std::size_t k_max = 10;
  std::string scan_a = "raster";
  std::string scan_b = "hilbert";
  std::string component = "Hx";
  ResonanceModel model;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string precision = "6";

  void apply(const RunConfig& c) {
    if (auto v = c.integer("grid_order")) order = static_cast<int>(*v);
    if (auto v = c.number("window_side")) window_side = *v;
    if (auto v = c.number("moment_x")) moment_x = *v;
    if (auto v = c.number("moment_y")) moment_y = *v;
    if (auto v = c.number("moment_z")) moment_z = *v;
    if (auto v = c.number("plane_z")) plane_z = *v;
    if (auto v = c.text("mode")) mode = *v;
    if (auto v = c.integer("k_max")) {
      if (*v < 0) throw UsageError("k_max must be non-negative");
      k_max = static_cast<std::size_t>(*v);
    }
    if (auto v = c.text("scan_a")) scan_a = *v;
    if (auto v = c.text("scan_b")) scan_b = *v;
    if (auto v = c.text("component")) component = *v;
    if (auto v = c.number("gamma")) model.gamma = *v;
    if (auto v = c.number("linewidth")) model.linewidth = *v;
    if (auto v = c.number("sweep_min")) model.sweep_min = *v;
    if (auto v = c.number("sweep_max")) model.sweep_max = *v;
    if (auto v = c.number("sweep_step")) model.sweep_step = *v;
    if (auto v = c.number("strip_field")) model.strip_field = *v;
    if (auto v = c.text("seed")) {
      std::uint64_t s = 0;
      const auto res = std::from_chars(v->data(), v->data() + v->size(), s);
      if (res.ec != std::errc{} || res.ptr != v->data() + v->size()) {
        throw UsageError("config seed is not an unsigned integer: " + *v);
      }
      seed = s;
    }
  }

  [[nodiscard]] FieldConfig field_config() const {
    FieldConfig config = paper_config();
    const CurveOrder m(order);
    config.grid_n = m.side();
    config.window_side = window_side;
    config.plane_z = plane_z;
    for (auto& d : config.dipoles) d.moment = Vec3(moment_x, moment_y, moment_z);
    return config;
  }
};

void add_output_options(CLI::App* sub, Settings& s) {
  sub->add_option("--out", s.out, "Output file ('-' or empty for standard output)");
  sub->add_option("--precision", s.precision, "Float digits: 6 or full")
      ->check(CLI::IsMember({"6", "full"}));
}

void add_geometry_options(CLI::App* sub, Settings& s) {
  sub->add_option("--order", s.order, "Grid order m (2^m samples per side)")
      ->check(CLI::Range(CurveOrder::kMin, CurveOrder::kMax));
  sub->add_option("--window-side", s.window_side, "Side of the sampling window");
  sub->add_option("--moment-x", s.moment_x, "Dipole moment x (all four dipoles)");
  sub->add_option("--moment-y", s.moment_y, "Dipole moment y");
  sub->add_option("--moment-z", s.moment_z, "Dipole moment z");
  sub->add_option("--plane-z", s.plane_z, "Height of the sampling plane");
}

void add_seed_option(CLI::App* sub, Settings& s, const char* help) {
  sub->add_option("--seed", s.seed, help);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  try {
    if (auto path = find_config_path(argc, argv)) s.apply(RunConfig::load(*path));
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  CLI::App app{"Space-filling-curve scan planning and evaluation"};
  app.name("sfcscan");
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  app.add_option("--config", config_path, "Flat key = value settings file (# comments)");

  // trajectory
  auto* traj = app.add_subcommand("trajectory", "Emit a scan trajectory as step,x,y CSV");
  std::string traj_kind = "hilbert";
  bool traj_length = false;
  traj->add_option("--kind", traj_kind, "raster | serpentine | hilbert | random");
  traj->add_option("--order", s.order, "Grid order m (2^m cells per side)")
      ->check(CLI::Range(CurveOrder::kMin, CurveOrder::kMax));
  traj->add_flag("--length", traj_length, "Print only the unit-square polyline length");
  add_seed_option(traj, s, "Shuffle seed (required for --kind random)");
  add_output_options(traj, s);

  // fieldmap
  auto* field = app.add_subcommand("fieldmap", "Sample the four-dipole field over the window");
  std::string field_format = "csv";
  field->add_option("--format", field_format, "csv | pgm")->check(CLI::IsMember({"csv", "pgm"}));
  field->add_option("--component", s.component, "Component for PGM output: Hx | Hy | Hz");
  add_geometry_options(field, s);
  add_output_options(field, s);

  // table1
  auto* table = app.add_subcommand("table1", "Lag autocorrelation of H along linear vs Hilbert scans");
  add_geometry_options(table, s);
  table->add_option("--mode", s.mode, "pearson | raw");
  table->add_option("--k-max", s.k_max, "Largest lag");
  table->add_option("--linear-kind", s.scan_a, "Linear scan: raster | serpentine | random");
  table->add_option("--sfc-kind", s.scan_b, "Space-filling scan: hilbert | ...");
  table->add_option("--component", s.component, "Hx | Hy | Hz");
  add_seed_option(table, s, "Seed for random scans");
  add_output_options(table, s);

  // resonance
  auto* reso = app.add_subcommand("resonance", "Crossed-strip resonance mapping along a scan");
  std::string reso_kind = "hilbert";
  reso->add_option("--kind", reso_kind, "Scan kind");
  add_geometry_options(reso, s);
  reso->add_option("--gamma", s.model.gamma, "Resonance frequency per unit field");
  reso->add_option("--linewidth", s.model.linewidth, "Lorentzian half-width");
  reso->add_option("--sweep-min", s.model.sweep_min, "Lowest rf frequency");
  reso->add_option("--sweep-max", s.model.sweep_max, "Highest rf frequency");
  reso->add_option("--sweep-step", s.model.sweep_step, "rf frequency step");
  reso->add_option("--strip-field", s.model.strip_field, "z-field added by each strip");
  add_seed_option(reso, s, "Seed for random scans");
  add_output_options(reso, s);

  // tour
  auto* tour = app.add_subcommand("tour", "Hilbert-order closed tour and the 0.72 sqrt(NA) law");
  std::size_t tour_n = 10000;
  std::string tour_preset = "uniform";
  std::string tour_region = "square";
  std::string tour_jumps = "1-2,2-3";
  int tour_order = 10;
  bool tour_brute = false;
  tour->add_option("--n", tour_n, "Number of points (uniform preset; 4 for corners)");
  tour->add_option("--preset", tour_preset, "uniform | corners | bohr")
      ->check(CLI::IsMember({"uniform", "corners", "bohr"}));
  tour->add_option("--region", tour_region, "square | disc (uniform preset)")
      ->check(CLI::IsMember({"square", "disc"}));
  tour->add_option("--jumps", tour_jumps, "Jumps n1-n2,... (bohr preset)");
  tour->add_option("--order", tour_order, "Hilbert ordering depth")
      ->check(CLI::Range(CurveOrder::kMin, CurveOrder::kMax));
  tour->add_flag("--brute-force", tour_brute, "Also print the exact optimum (N <= 10)");
  add_seed_option(tour, s, "Point seed (required for the uniform preset)");
  add_output_options(tour, s);

  // pulse
  auto* pulse = app.add_subcommand("pulse", "Compose a pulse train into its 2x2 propagator");
  std::vector<std::string> pulse_specs;
  double pulse_phase = 0.0;
  pulse->add_option("--pulse", pulse_specs, "Pulse C,phi (repeatable, first acts first)")
      ->required();
  pulse->add_option("--gamma-phase", pulse_phase, "Global phase Gamma");
  add_output_options(pulse, s);

  // scan-search
  auto* search = app.add_subcommand("scan-search", "Scan the control-field plane for a transfer");
  SearchSpec spec;
  int search_order = spec.order.value();
  std::string search_kind = "hilbert";
  std::string search_compare;
  std::string search_initial = "1,0";
  std::string search_target = "0,1";
  double search_mu_x = spec.mu.x();
  double search_mu_y = spec.mu.y();
  std::size_t search_instances = 0;
  double search_shift = 1.0;
  search->add_option("--kind", search_kind, "Scan kind");
  search->add_option("--compare", search_compare, "Second scan kind to summarize");
  search->add_option("--order", search_order, "Grid order m")
      ->check(CLI::Range(CurveOrder::kMin, CurveOrder::kMax));
  search->add_option("--e-min", spec.e_min, "Lower field bound (both axes)");
  search->add_option("--e-max", spec.e_max, "Upper field bound (both axes)");
  search->add_option("--mu-x", search_mu_x, "Dipole x");
  search->add_option("--mu-y", search_mu_y, "Dipole y");
  search->add_option("--duration", spec.duration, "Pulse duration");
  search->add_option("--phi", spec.phi, "Generator angle phi");
  search->add_option("--initial", search_initial, "Initial state a,b");
  search->add_option("--target", search_target, "Target state a,b");
  search->add_option("--threshold", spec.threshold, "Fidelity threshold");
  search->add_option("--instances", search_instances,
                     "Compare --kind and --compare over this many seeded field offsets");
  search->add_option("--max-shift", search_shift, "Largest field-range offset for --instances");
  add_seed_option(search, s, "Seed (required; random scans and offsets)");
  add_output_options(search, s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    const auto precision = parse_precision(s.precision);

    if (traj->parsed()) {
      const auto kind = parse_enum(traj_kind, parse_trajectory_kind, "trajectory kind");
      std::uint64_t seed = 0;
      if (kind == TrajectoryKind::random) seed = require_seed(s.seed, "for random trajectories");
      const auto t = generate_trajectory(kind, CurveOrder(s.order), seed);
      with_output(s.out, out, [&](std::ostream& os) {
        if (traj_length) {
          os << "length=" << io::format_number(polyline_length(t), precision) << '\n';
        } else {
          io::write_trajectory_csv(os, t);
        }
      });
    } else if (field->parsed()) {
      const auto component = parse_enum(s.component, parse_field_component, "component");
      const auto map = sample_field_map(s.field_config());
      with_output(s.out, out, [&](std::ostream& os) {
        if (field_format == "pgm") {
          io::write_field_map_pgm(os, map, component);
        } else {
          io::write_field_map_csv(os, map, precision);
        }
      });
    } else if (table->parsed()) {
      Table1Options options;
      options.linear_kind = parse_enum(s.scan_a, parse_trajectory_kind, "scan kind");
      options.sfc_kind = parse_enum(s.scan_b, parse_trajectory_kind, "scan kind");
      options.mode = parse_enum(s.mode, parse_autocorr_mode, "mode");
      options.component = parse_enum(s.component, parse_field_component, "component");
      options.k_max = s.k_max;
      if (options.linear_kind == TrajectoryKind::random ||
          options.sfc_kind == TrajectoryKind::random) {
        options.seed = require_seed(s.seed, "for random scans");
      }
      const auto report = table1_experiment(s.field_config(), options);
      with_output(s.out, out,
                  [&](std::ostream& os) { io::write_table1_csv(os, report, precision); });
    } else if (reso->parsed()) {
      const auto kind = parse_enum(reso_kind, parse_trajectory_kind, "scan kind");
      std::uint64_t seed = 0;
      if (kind == TrajectoryKind::random) seed = require_seed(s.seed, "for random scans");
      const auto t = generate_trajectory(kind, CurveOrder(s.order), seed);
      const auto scan = simulate_resonance_scan(s.field_config(), s.model, t);
      double worst = 0.0;
      for (const auto& c : scan.cells) {
        if (c.flag == ResonanceFlag::ok) worst = std::max(worst, std::abs(c.inferred_hz - c.true_hz));
      }
      with_output(s.out, out,
                  [&](std::ostream& os) { io::write_resonance_csv(os, scan, precision); });
      out << "cells=" << scan.cells.size() << " flagged=" << scan.flagged_count()
          << " max_abs_error=" << io::format_number(worst, precision)
          << " bound=" << io::format_number(s.model.sweep_step / (2 * s.model.gamma), precision)
          << '\n';
    } else if (tour->parsed()) {
      PointSet ps;
      if (tour_preset == "corners") {
        if (tour_n != 4) throw UsageError("the corners preset has exactly 4 points (--n 4)");
        ps = make_point_set({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, Region::unit_square);
      } else if (tour_preset == "bohr") {
        const auto jumps = parse_jumps(tour_jumps);
        ps = bohr_jump_points(jumps).points;
      } else {
        const auto seed = require_seed(s.seed, "for the uniform preset");
        ps = uniform_points(tour_n, parse_enum(tour_region, parse_region, "region"), seed);
      }
      const auto t = hilbert_order_tour(ps, CurveOrder(tour_order));
      with_output(s.out, out, [&](std::ostream& os) { io::write_tour_csv(os, ps, t, precision); });
      out << io::tour_summary(ps, t, precision) << '\n';
      if (tour_brute) {
        out << "L_opt=" << io::format_number(brute_force_tsp(ps).length, precision) << '\n';
      }
    } else if (pulse->parsed()) {
      PulseTrain train;
      train.global_phase = pulse_phase;
      for (const auto& p : pulse_specs) train.pulses.push_back(parse_pulse(p));
      const Matrix2 u = compose_sequence(train);
      const auto det = u.determinant();
      const double defect = (u.adjoint() * u - Matrix2::Identity()).cwiseAbs().maxCoeff();
      with_output(s.out, out, [&](std::ostream& os) { io::write_matrix_csv(os, u, precision); });
      out << "det=" << io::format_number(det.real(), precision) << ','
          << io::format_number(det.imag(), precision)
          << " unitarity_defect=" << io::format_number(defect, precision) << '\n';
    } else if (search->parsed()) {
      const auto seed = require_seed(s.seed, "for scan-search");
      spec.order = CurveOrder(search_order);
      spec.mu = RealVec2(search_mu_x, search_mu_y);
      spec.initial = parse_pair(search_initial, "--initial");
      spec.target = parse_pair(search_target, "--target");
      spec.kind = parse_enum(search_kind, parse_trajectory_kind, "scan kind");
      spec.seed = seed;
      std::optional<TrajectoryKind> compare;
      if (!search_compare.empty()) {
        compare = parse_enum(search_compare, parse_trajectory_kind, "scan kind");
      }

      if (search_instances > 0) {
        if (!compare) throw UsageError("--instances needs --compare");
        std::size_t wins = 0;
        for (std::size_t k = 0; k < search_instances; ++k) {
          const std::uint64_t instance_seed = seed + k;
          SearchSpec a = spec;
          const SearchSpec shifted = offset_search_demo(instance_seed, search_shift);
          const double shift = shifted.e_min - SearchSpec{}.e_min;
          a.e_min += shift;
          a.e_max += shift;
          a.seed = instance_seed;
          SearchSpec b = a;
          b.kind = *compare;
          const auto ta = control_scan_search(a);
          const auto tb = control_scan_search(b);
          const bool win = ta.lag1_autocorr && tb.lag1_autocorr &&
                           *ta.lag1_autocorr >= *tb.lag1_autocorr;
          wins += win ? 1 : 0;
          out << "seed=" << instance_seed << " shift=" << io::format_number(shift, precision)
              << ' ' << to_string(a.kind) << '='
              << (ta.lag1_autocorr ? io::format_number(*ta.lag1_autocorr, precision) : "undefined")
              << ' ' << to_string(b.kind) << '='
              << (tb.lag1_autocorr ? io::format_number(*tb.lag1_autocorr, precision) : "undefined")
              << '\n';
        }
        out << to_string(spec.kind) << ">=" << to_string(*compare) << " in " << wins << " of "
            << search_instances << '\n';
      } else {
        const auto trace = control_scan_search(spec);
        with_output(s.out, out,
                    [&](std::ostream& os) { io::write_search_trace_csv(os, spec, trace, precision); });
        out << io::search_summary(trace, precision) << '\n';
        if (compare) {
          SearchSpec other = spec;
          other.kind = *compare;
          out << io::search_summary(control_scan_search(other), precision) << '\n';
        }
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace sfcscan::cli
