// Copyright 2026 The steerlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// steer_cli: classification, boundary and figure data, oracle checks and
// LHS simulation from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "steer/io.hpp"
#include "steer/steer.hpp"

namespace steer::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Column-oriented rows; an empty optional is written as an empty CSV field
/// or JSON null.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::optional<double>>> rows;
};

inline std::string format_number(double x) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(17) << x;
  return os.str();
}

inline void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t c = 0; c < t.header.size(); ++c) os << (c ? "," : "") << t.header[c];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ',';
      if (row[c]) os << format_number(*row[c]);
    }
    os << '\n';
  }
}

inline io::json table_json(const Table& t) {
  io::json arr = io::json::array();
  for (const auto& row : t.rows) {
    io::json rec = io::json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      rec[t.header[c]] = row[c] ? io::json(*row[c]) : io::json(nullptr);
    }
    arr.push_back(rec);
  }
  return arr;
}

// ---- row generators shared with the tests ----

inline double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

/// Rows (s1, s2, s3_boundary, s3_linear_plane, separable_plane) for
/// s1, s2 = k / grid, k = 1..grid.
inline Table figure1a_table(int grid) {
  Table t{{"s1", "s2", "s3_boundary", "s3_linear_plane", "separable_plane"}, {}};
  for (int i = 1; i <= grid; ++i)
    for (int j = 1; j <= grid; ++j) {
      const double s1 = static_cast<double>(i) / grid, s2 = static_cast<double>(j) / grid;
      t.rows.push_back({s1, s2, boundary_s3(s1, s2), clamp01(1.5 - s1 - s2),
                        clamp01(1.0 - s1 - s2)});
    }
  return t;
}

/// Geometric spacing lo..hi with n points.
inline std::vector<double> log_space(double lo, double hi, int n) {
  std::vector<double> out;
  for (int k = 0; k < n; ++k) {
    out.push_back(n == 1 ? lo : lo * std::pow(hi / lo, static_cast<double>(k) / (n - 1)));
  }
  return out;
}

/// Slice s1 = s2: rows (u, s1, s3_necessary, s3_linear, s3_nonlinear).
inline Table slice_table(const std::vector<double>& us) {
  Table t{{"u", "s1", "s3_necessary", "s3_linear", "s3_nonlinear"}, {}};
  for (double u : us) {
    const auto [s1, s3] = boundary_symmetric(u);
    t.rows.push_back({u, s1, s3, clamp01(1.5 - 2 * s1), nonlinear_slice_s3(s1)});
  }
  return t;
}

inline Table figure1b_table(int samples) { return slice_table(log_space(0.01, 100.0, samples)); }

struct Theorem1Summary {
  int trials = 0;
  double max_rel_deviation = 0.0;
  Vec3 worst_t{};
  Vec3 worst_v{};
};

/// Random diagonal T (|t_i| uniform in [0.05, 1], random signs) and unit v;
/// T = I when `iso`.
inline Theorem1Summary run_theorem1(int trials, std::uint64_t seed, bool iso,
                                    const QuadratureSpec& spec) {
  CounterRng rng(seed, 0x7E01);
  Theorem1Summary s;
  s.trials = trials;
  for (int k = 0; k < trials; ++k) {
    Vec3 t{1, 1, 1};
    if (!iso) {
      for (double& x : t) {
        x = 0.05 + 0.95 * rng.uniform();
        if (rng.uniform() < 0.5) x = -x;
      }
    }
    const Vec3 v = uniform_unit_vector(rng);
    const Vec3 a = q_analytic(t, v), n = q_numeric(t, v, spec);
    const double dev = norm(n - a) / norm(a);
    if (dev >= s.max_rel_deviation) {
      s.max_rel_deviation = dev;
      s.worst_t = t;
      s.worst_v = v;
    }
  }
  return s;
}

// ---- application ----

namespace detail {

inline io::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return io::json::parse(in);
  } catch (const io::json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace detail

/// Runs the CLI on `args` (without the program name).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-qubit EPR-steering toolkit", "steer_cli"};
  app.require_subcommand(1);
  app.fallthrough();  // inherited: global flags may follow the subcommand

  int order_theta = QuadratureSpec{}.order_theta;
  int order_phi = QuadratureSpec{}.order_phi;
  std::uint64_t seed = 1;
  std::string format;
  std::string out_path;
  app.add_option("--order-theta", order_theta, "Gauss-Legendre nodes in cos(theta)")
      ->check(CLI::Range(2, 1 << 16));
  app.add_option("--order-phi", order_phi, "trapezoid nodes in phi")->check(CLI::Range(4, 1 << 17));
  app.add_option("--seed", seed, "RNG seed");
  app.add_option("--format", format, "output format (default: csv for tables, json otherwise)")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "write output to this file instead of stdout");

  auto add_state_opts = [](CLI::App* sub, std::string& file, std::vector<double>& t) {
    sub->add_option("--state", file, "state JSON file");
    sub->add_option("--t", t, "T-state shorthand t1,t2,t3")->delimiter(',')->expected(3);
  };

  std::string classify_file;
  std::vector<double> classify_t;
  auto* classify = app.add_subcommand("classify", "steerability verdict for one state");
  add_state_opts(classify, classify_file, classify_t);

  std::string ell_file;
  std::vector<double> ell_t;
  int surface = 0;
  auto* ellipsoid = app.add_subcommand("ellipsoid", "steering ellipsoid of one state");
  add_state_opts(ellipsoid, ell_file, ell_t);
  ellipsoid->add_option("--surface", surface, "emit an N x N (theta, phi) grid of surface points")
      ->check(CLI::Range(2, 100000));

  int grid = 0;
  bool symmetric = false;
  std::vector<double> u_range;
  auto* boundary = app.add_subcommand("boundary", "boundary surface or symmetric slice as CSV");
  boundary->add_option("--grid", grid, "grid size N, s1, s2 = k/N")->check(CLI::Range(2, 100000));
  boundary->add_flag("--symmetric", symmetric, "slice s1 = s2 from the closed form");
  boundary->add_option("--u-range", u_range, "lo,hi,n with u = s3/s1 geometrically spaced")
      ->delimiter(',')
      ->expected(3);

  int fig_a_grid = 100;
  auto* fig_a = app.add_subcommand("figure1a", "boundary surface with the sufficient planes");
  fig_a->add_option("--grid", fig_a_grid, "grid size")->check(CLI::Range(2, 100000));

  int fig_b_samples = 400;
  auto* fig_b = app.add_subcommand("figure1b", "slice s1 = s2, u log-spaced in [0.01, 100]");
  fig_b->add_option("--samples", fig_b_samples, "number of u samples")->check(CLI::Range(2, 10000000));

  int trials = 200;
  bool iso = false;
  auto* verify = app.add_subcommand("verify-theorem1", "quadrature check of the hemisphere integral");
  verify->add_option("--trials", trials, "random (T, v) pairs")->check(CLI::Range(1, 100000000));
  verify->add_flag("--iso", iso, "fix T = I");

  std::vector<double> nt_t;
  auto* ntconst = app.add_subcommand("ntconst", "normalization constant by every available route");
  ntconst->add_option("--t", nt_t, "t1,t2,t3")->delimiter(',')->expected(3)->required();

  std::vector<double> sim_t;
  std::uint64_t count = 1000000;
  std::string sim_dirs;
  unsigned threads = 0;
  auto* lhs_sim = app.add_subcommand("lhs-simulate", "Monte Carlo run of the LHS model");
  lhs_sim->add_option("--t", sim_t, "t1,t2,t3")->delimiter(',')->expected(3)->required();
  lhs_sim->add_option("--count", count, "samples per direction")->check(CLI::PositiveNumber);
  lhs_sim->add_option("--directions", sim_dirs, "JSON file of measurement directions");
  lhs_sim->add_option("--threads", threads, "worker threads (0: hardware concurrency)");

  std::vector<double> ver_t;
  std::string ver_dirs;
  int n_dirs = 20;
  auto* lhs_verify = app.add_subcommand("lhs-verify", "quadrature check of the LHS model");
  lhs_verify->add_option("--t", ver_t, "t1,t2,t3")->delimiter(',')->expected(3)->required();
  lhs_verify->add_option("--directions", ver_dirs, "JSON file of measurement directions");
  lhs_verify->add_option("--n-directions", n_dirs, "random directions when no file is given")
      ->check(CLI::Range(1, 1000000));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const QuadratureSpec spec{order_theta, order_phi, QuadratureSpec{}.target_rel_tol};
  std::ostringstream buf;
  int code = kExitOk;

  auto emit_table = [&](const Table& t) {
    if (format == "json") {
      buf << table_json(t).dump(2) << '\n';
    } else {
      write_csv(buf, t);
    }
  };
  auto emit_json = [&](const io::json& j, const Table* flat) {
    if (format == "csv" && flat) {
      write_csv(buf, *flat);
    } else {
      buf << j.dump(2) << '\n';
    }
  };
  auto load_state = [](const std::string& file, const std::vector<double>& t) {
    if (!file.empty() && !t.empty()) throw detail::UsageError("give either --state or --t");
    if (!t.empty()) return TState{{t[0], t[1], t[2]}}.to_state();
    if (file.empty()) throw detail::UsageError("a state is required (--state or --t)");
    return io::state_from_json(detail::read_json_file(file));
  };
  auto load_directions = [&](const std::string& file, int fallback) {
    if (!file.empty()) return io::directions_from_json(detail::read_json_file(file));
    CounterRng rng(seed, 0xD1);
    std::vector<Vec3> dirs;
    for (int k = 0; k < fallback; ++k) dirs.push_back(uniform_unit_vector(rng));
    return dirs;
  };
  auto opt = [](const std::optional<double>& x) { return x; };

  try {
    if (classify->parsed()) {
      const TwoQubitState s = load_state(classify_file, classify_t);
      const SteerabilityVerdict v = steer::classify(s);
      io::json j = io::to_json(v);
      Table flat{{"tstate", "separable", "nonsteerable_proven", "steerable_proven", "gap",
                  "conjectured_steerable", "boundary_g", "linear_margin", "nonlinear_margin"},
                 {}};
      const auto tri = [](Tri x) -> std::optional<double> {
        if (x == Tri::kUnknown) return std::nullopt;
        return x == Tri::kYes ? 1.0 : 0.0;
      };
      flat.rows.push_back(
          {double(v.tstate), tri(v.separable), double(v.nonsteerable_proven),
           double(v.steerable_proven), double(v.gap),
           v.conjectured_steerable ? std::optional<double>(double(*v.conjectured_steerable))
                                   : std::nullopt,
           opt(v.margins.boundary_g), v.margins.linear, v.margins.nonlinear});
      emit_json(j, &flat);
    } else if (ellipsoid->parsed()) {
      const TwoQubitState raw = load_state(ell_file, ell_t);
      const TwoQubitState s = make_state(raw.a, raw.b, raw.t);
      const SteeringEllipsoid el = steering_ellipsoid(s);
      if (surface > 0) {
        Table t{{"theta", "phi", "x", "y", "z"}, {}};
        for (int i = 0; i < surface; ++i)
          for (int k = 0; k < surface; ++k) {
            const double th = kPi * i / (surface - 1), ph = 2 * kPi * k / surface;
            const Vec3 p = el.surface_point(unit_direction(th, ph));
            t.rows.push_back({th, ph, p[0], p[1], p[2]});
          }
        emit_table(t);
      } else {
        io::json j = io::to_json(el);
        j["q"] = io::to_json(el.q);
        emit_json(j, nullptr);
      }
    } else if (boundary->parsed()) {
      if (symmetric == (grid > 0)) {
        throw detail::UsageError("boundary needs exactly one of --grid or --symmetric");
      }
      if (symmetric) {
        if (u_range.empty()) throw detail::UsageError("--symmetric needs --u-range lo,hi,n");
        const double lo = u_range[0], hi = u_range[1];
        const double n = u_range[2];
        if (!(lo > 0 && hi >= lo && n >= 1 && n == std::floor(n))) {
          throw detail::UsageError("--u-range needs 0 < lo <= hi and integer n >= 1");
        }
        emit_table(slice_table(log_space(lo, hi, static_cast<int>(n))));
      } else {
        Table t{{"s1", "s2", "s3"}, {}};
        for (const auto& row : figure1a_table(grid).rows) t.rows.push_back({row[0], row[1], row[2]});
        emit_table(t);
      }
    } else if (fig_a->parsed()) {
      emit_table(figure1a_table(fig_a_grid));
    } else if (fig_b->parsed()) {
      emit_table(figure1b_table(fig_b_samples));
    } else if (verify->parsed()) {
      const Theorem1Summary s = run_theorem1(trials, seed, iso, spec);
      constexpr double kThreshold = 1e-7;
      const bool pass = s.max_rel_deviation <= kThreshold;
      io::json j = {{"trials", s.trials},
                    {"seed", seed},
                    {"order_theta", spec.order_theta},
                    {"order_phi", spec.order_phi},
                    {"max_rel_deviation", s.max_rel_deviation},
                    {"worst_t", io::to_json(s.worst_t)},
                    {"worst_v", io::to_json(s.worst_v)},
                    {"threshold", kThreshold},
                    {"pass", pass}};
      Table flat{{"trials", "max_rel_deviation", "threshold", "pass"},
                 {{double(s.trials), s.max_rel_deviation, kThreshold, double(pass)}}};
      emit_json(j, &flat);
      if (!pass) code = kExitVerifyFailed;
    } else if (ntconst->parsed()) {
      const Vec3 t{nt_t[0], nt_t[1], nt_t[2]};
      const double quad = normalization(t, spec);
      const double carlson = normalization_carlson(t);
      std::optional<double> closed, residue;
      Vec3 s = TState{t}.semiaxes();
      std::sort(s.begin(), s.end());
      if (s[0] < s[1] && s[1] < s[2]) {
        const ClosedFormResult r = normalization_closed_form_detail(s[0], s[1], s[2]);
        closed = r.n_t;
        residue = r.imag_residue;
      }
      const double g = boundary_value(TState{t}).g;
      io::json j = {{"t", io::to_json(t)},
                    {"n_t_quadrature", quad},
                    {"n_t_carlson", carlson},
                    {"n_t_closed_form", closed ? io::json(*closed) : io::json(nullptr)},
                    {"closed_form_imag_residue", residue ? io::json(*residue) : io::json(nullptr)},
                    {"boundary_g", g}};
      Table flat{{"n_t_quadrature", "n_t_carlson", "n_t_closed_form", "boundary_g"},
                 {{quad, carlson, closed, g}}};
      emit_json(j, &flat);
    } else if (lhs_sim->parsed()) {
      const TState ts = make_tstate({sim_t[0], sim_t[1], sim_t[2]});
      std::vector<Vec3> dirs = sim_dirs.empty()
                                   ? std::vector<Vec3>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}
                                   : load_directions(sim_dirs, 0);
      const SimulationReport rep = simulate(ts, dirs, count, seed, threads);
      Table flat{{"e1", "e2", "e3", "p_hat", "p_std_err", "cond1", "cond2", "cond3",
                  "cond1_exact", "cond2_exact", "cond3_exact"},
                 {}};
      for (const auto& r : rep.records) {
        flat.rows.push_back({r.e[0], r.e[1], r.e[2], r.p_hat, r.p_std_err, r.cond_hat[0],
                             r.cond_hat[1], r.cond_hat[2], r.cond_exact[0], r.cond_exact[1],
                             r.cond_exact[2]});
      }
      emit_json(io::to_json(rep), &flat);
    } else if (lhs_verify->parsed()) {
      const TState ts = make_tstate({ver_t[0], ver_t[1], ver_t[2]});
      const VerifyReport rep = verify_model(ts, load_directions(ver_dirs, n_dirs), spec);
      constexpr double kThreshold = 1e-8;
      io::json j = io::to_json(rep);
      j["threshold"] = kThreshold;
      j["pass"] = rep.max_deviation() <= kThreshold;
      Table flat{{"max_prob_deviation", "max_vector_deviation", "threshold", "pass"},
                 {{rep.max_prob_deviation, rep.max_vector_deviation, kThreshold,
                   double(rep.max_deviation() <= kThreshold)}}};
      emit_json(j, &flat);
      if (rep.max_deviation() > kThreshold) code = kExitVerifyFailed;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (out_path.empty()) {
    out << buf.str();
    out.flush();
    if (!out) {
      err << "error: failed writing output\n";
      return kExitUsage;
    }
  } else {
    std::ofstream f(out_path, std::ios::binary);
    f << buf.str();
    f.close();
    if (!f) {
      err << "error: cannot write " << out_path << '\n';
      return kExitUsage;
    }
  }
  return code;
}

}  // namespace steer::cli
