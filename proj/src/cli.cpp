#include "suita/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <utility>

#include "suita/optimize.hpp"
#include "suita/verify.hpp"

namespace suita::cli {

namespace {

using nlohmann::json;

std::pair<double, double> parse_pair(const std::string& text, char sep, const char* flag) {
  const auto pos = text.find(sep);
  if (pos == std::string::npos) {
    throw PreconditionError(std::string(flag) + " expects two numbers separated by '" + sep + "', got '" + text + "'");
  }
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string sa = text.substr(0, pos);
    const std::string sb = text.substr(pos + 1);
    const double a = std::stod(sa, &used_a);
    const double b = std::stod(sb, &used_b);
    if (used_a != sa.size() || used_b != sb.size()) throw std::invalid_argument("trailing");
    return {a, b};
  } catch (const std::logic_error&) {
    throw PreconditionError(std::string(flag) + ": cannot parse '" + text + "'");
  }
}

Tau parse_tau(const std::string& text) {
  const auto [re, im] = parse_pair(text, ',', "--tau");
  if (!(im > 0.0)) {
    throw DomainError("--tau: the torus parameter needs Im tau > 0 (got Im tau = " + format_number(im) + ")");
  }
  return Tau(re, im);
}

Complex parse_complex(const std::string& text, const char* flag) {
  const auto [re, im] = parse_pair(text, ',', flag);
  return {re, im};
}

Range parse_range(const std::string& text, const char* flag) {
  const auto [lo, hi] = parse_pair(text, ',', flag);
  return {lo, hi};
}

// JSON writer with sorted keys and numbers in the %.10g house format.
void write_json(std::ostream& out, const json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  const std::string inner(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out << "{}";
      return;
    }
    out << "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) out << ",\n";
      first = false;
      out << inner << json(key).dump() << ": ";
      write_json(out, value, depth + 1);
    }
    out << '\n' << pad << '}';
  } else if (j.is_array()) {
    if (j.empty()) {
      out << "[]";
      return;
    }
    out << "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      if (k > 0) out << ",\n";
      out << inner;
      write_json(out, j[k], depth + 1);
    }
    out << '\n' << pad << ']';
  } else if (j.is_number_float()) {
    const double x = j.get<double>();
    out << (std::isfinite(x) ? format_number(x) : "null");
  } else {
    out << j.dump();
  }
}

void emit(std::ostream& out, const json& j) {
  write_json(out, j, 0);
  out << '\n';
}

void print_row(std::ostream& out, const std::string& key, const std::string& value) {
  out << key;
  for (std::size_t k = key.size(); k < 18; ++k) out << ' ';
  out << value << '\n';
}

std::string tau_text(const Tau& tau) {
  return format_number(tau.re()) + (tau.im() < 0 ? "" : "+") + format_number(tau.im()) + "i";
}

json minimize_json(const MinimizeResult& r) {
  return json{{"f_min", r.f_min},
              {"exp_f_min", r.exp_f_min},
              {"alpha", r.alpha},
              {"tau_re", r.tau_star.re()},
              {"tau_im", r.tau_star.im()},
              {"tau_re_flat_halfwidth", r.re_flat_halfwidth},
              {"grid_f_min", r.grid.value},
              {"grid_tau_re", r.grid.re},
              {"grid_tau_im", r.grid.im},
              {"refined", r.refined},
              {"evaluations", r.evaluations}};
}

void print_minimize(std::ostream& out, const MinimizeResult& r, bool as_json) {
  if (as_json) {
    emit(out, minimize_json(r));
    return;
  }
  print_row(out, "f_min", format_number(r.f_min));
  print_row(out, "exp_f_min", format_number(r.exp_f_min));
  print_row(out, "alpha", format_number(r.alpha));
  print_row(out, "tau_star", tau_text(r.tau_star));
  print_row(out, "tau_re_flat", "+/- " + format_number(r.re_flat_halfwidth) + " (F is flat along Re tau)");
  print_row(out, "grid_f_min", format_number(r.grid.value));
  print_row(out, "grid_tau", format_number(r.grid.re) + "+" + format_number(r.grid.im) + "i");
  print_row(out, "refined", r.refined ? "true" : "false");
  print_row(out, "evaluations", std::to_string(r.evaluations));
}

std::optional<Suite> parse_suite(const std::string& s) {
  if (s == "all") return Suite::all;
  if (s == "theta") return Suite::theta;
  if (s == "laplacian") return Suite::laplacian;
  if (s == "capacity") return Suite::capacity;
  if (s == "meanzero") return Suite::meanzero;
  return std::nullopt;
}

}  // namespace

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bergman kernel versus logarithmic capacity on complex tori"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  SeriesConfig cfg;
  app.add_option("--tol", cfg.tol, "absolute truncation tolerance for every q-series")
      ->envname(kTolEnv)
      ->check(CLI::PositiveNumber);
  app.add_option("--max-terms", cfg.max_terms, "hard cap on any summation index")->check(CLI::PositiveNumber);

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "F(tau), its summands, capacity and Bergman density");
  std::string eval_tau;
  bool eval_json = false;
  eval_cmd->add_option("--tau", eval_tau, "RE,IM")->required()->allow_extra_args(false);
  eval_cmd->add_flag("--json", eval_json);

  // surface
  auto* surface_cmd = app.add_subcommand("surface", "F on a mesh, written as CSV");
  std::string surf_re = "-1,1", surf_im = "0.05,4";
  int surf_rows = 100, surf_cols = 100;
  unsigned surf_threads = 1;
  std::string surf_out;
  surface_cmd->add_option("--re", surf_re, "a,b")->capture_default_str();
  surface_cmd->add_option("--im", surf_im, "c,d")->capture_default_str();
  surface_cmd->add_option("--rows", surf_rows)->capture_default_str();
  surface_cmd->add_option("--cols", surf_cols)->capture_default_str();
  surface_cmd->add_option("--threads", surf_threads)->capture_default_str();
  surface_cmd->add_option("--out", surf_out, "output file (stdout if omitted)");

  // minimize
  auto* min_cmd = app.add_subcommand("minimize", "grid search plus simplex refinement of F");
  std::string min_re = "-1,1", min_im = "0.05,4", min_grid = "100x100";
  bool min_refine = false, min_json = false;
  unsigned min_threads = 1;
  int min_iters = 2000;
  min_cmd->add_option("--re", min_re, "a,b")->capture_default_str();
  min_cmd->add_option("--im", min_im, "c,d")->capture_default_str();
  min_cmd->add_option("--grid", min_grid, "ROWSxCOLS")->capture_default_str();
  min_cmd->add_flag("--refine", min_refine, "run Nelder-Mead from the grid minimum");
  min_cmd->add_flag("--json", min_json);
  min_cmd->add_option("--threads", min_threads)->capture_default_str();
  min_cmd->add_option("--max-iter", min_iters, "simplex iteration cap")->capture_default_str();

  // green
  auto* green_cmd = app.add_subcommand("green", "Arakelov-Green's function g(z, w)");
  std::string g_tau, g_z, g_w;
  bool g_json = false;
  green_cmd->add_option("--tau", g_tau, "RE,IM")->required();
  green_cmd->add_option("--z", g_z, "RE,IM")->required();
  green_cmd->add_option("--w", g_w, "RE,IM")->required();
  green_cmd->add_flag("--json", g_json);

  // check
  auto* check_cmd = app.add_subcommand("check", "verification battery");
  std::string suite_name = "all";
  std::uint64_t seed = 42;
  bool check_json = false, strict = false;
  check_cmd->add_option("--suite", suite_name, "all|theta|laplacian|capacity|meanzero")->capture_default_str();
  check_cmd->add_option("--seed", seed)->capture_default_str();
  check_cmd->add_flag("--json", check_json);
  check_cmd->add_flag("--strict", strict, "treat warn-only checks as hard");

  // parity
  auto* parity_cmd = app.add_subcommand("parity", "emulate the reference MATLAB myplot(x, y, K, M, N)");
  double p_x = 1.0, p_y = 4.0;
  int p_k = 100, p_m = 100, p_n = 100;
  bool p_json = false;
  parity_cmd->add_option("--x", p_x, "Re range is [-x, x]")->required();
  parity_cmd->add_option("--y", p_y, "Im range is [0, y]")->required();
  parity_cmd->add_option("--K", p_k, "number of q-terms")->required();
  parity_cmd->add_option("--M", p_m, "Re nodes")->capture_default_str();
  parity_cmd->add_option("--N", p_n, "Im nodes")->capture_default_str();
  parity_cmd->add_flag("--json", p_json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    cfg.validate();

    if (*eval_cmd) {
      const Tau tau = parse_tau(eval_tau);
      const RatioComponents r = f_ratio(tau, cfg);
      const double c = capacity(tau, cfg);
      const double k = bergman_density(tau);
      if (eval_json) {
        emit(out, json{{"tau_re", tau.re()},
                       {"tau_im", tau.im()},
                       {"f", r.f},
                       {"exp_f", std::exp(r.f)},
                       {"log_im_term", r.log_im_term},
                       {"const_term", r.const_term},
                       {"linear_term", r.linear_term},
                       {"qsum_term", r.qsum_term},
                       {"capacity", c},
                       {"bergman_density", k}});
      } else {
        print_row(out, "tau", tau_text(tau));
        print_row(out, "F", format_number(r.f));
        print_row(out, "exp_F", format_number(std::exp(r.f)));
        print_row(out, "log_im_term", format_number(r.log_im_term));
        print_row(out, "const_term", format_number(r.const_term));
        print_row(out, "linear_term", format_number(r.linear_term));
        print_row(out, "qsum_term", format_number(r.qsum_term));
        print_row(out, "capacity", format_number(c));
        print_row(out, "bergman_density", format_number(k));
      }
      return kOk;
    }

    if (*surface_cmd) {
      const FSurface s = sweep(parse_range(surf_re, "--re"), parse_range(surf_im, "--im"), surf_rows, surf_cols,
                               {cfg, surf_threads});
      std::ofstream file;
      std::ostream* sink = &out;
      if (!surf_out.empty()) {
        file.open(surf_out, std::ios::binary);
        if (!file) throw PreconditionError("cannot open '" + surf_out + "' for writing");
        sink = &file;
      }
      *sink << "re_tau,im_tau,F\n";
      for (std::size_t r = 0; r < s.rows(); ++r) {
        for (std::size_t c = 0; c < s.cols(); ++c) {
          *sink << format_number(s.re_grid[c]) << ',' << format_number(s.im_grid[r]) << ','
                << format_number(s.at(r, c)) << '\n';
        }
      }
      return kOk;
    }

    if (*min_cmd) {
      const auto [rows, cols] = parse_pair(min_grid, 'x', "--grid");
      MinimizeOptions opts;
      opts.re = parse_range(min_re, "--re");
      opts.im = parse_range(min_im, "--im");
      if (rows != std::floor(rows) || cols != std::floor(cols)) throw PreconditionError("--grid needs integers");
      opts.rows = static_cast<int>(rows);
      opts.cols = static_cast<int>(cols);
      opts.refine = min_refine;
      opts.cfg = cfg;
      opts.threads = min_threads;
      opts.simplex.max_iterations = min_iters;
      try {
        print_minimize(out, minimize(opts), min_json);
      } catch (const MinimizeNonConvergence& e) {
        err << "error: " << e.what() << "; best point so far follows\n";
        print_minimize(out, e.best(), min_json);
        return kFailure;
      }
      return kOk;
    }

    if (*green_cmd) {
      const Tau tau = parse_tau(g_tau);
      const TorusPoint z(parse_complex(g_z, "--z"), tau);
      const TorusPoint w(parse_complex(g_w, "--w"), tau);
      double g = 0.0;
      try {
        g = green_function(z, w, cfg);
      } catch (const CoincidentPointsError&) {
        err << "error: z and w are the same point of the torus; g(w, w) = -inf\n";
        return kUsage;
      }
      if (g_json) {
        emit(out, json{{"g", g}, {"dist_omega", dist_omega(z, w)}});
      } else {
        print_row(out, "g", format_number(g));
        print_row(out, "dist_omega", format_number(dist_omega(z, w)));
      }
      return kOk;
    }

    if (*check_cmd) {
      const auto suite = parse_suite(suite_name);
      if (!suite) throw PreconditionError("--suite: unknown suite '" + suite_name + "'");
      const auto entries = run_battery(*suite, seed, cfg);
      bool ok = true;
      json reports = json::array();
      for (const auto& e : entries) {
        const bool hard = e.hard || strict;
        if (hard && !e.report.passed) ok = false;
        const char* status = e.report.passed ? "PASS" : (hard ? "FAIL" : "WARN");
        if (check_json) {
          reports.push_back(json{{"name", e.report.name},
                                 {"status", status},
                                 {"passed", e.report.passed},
                                 {"hard", hard},
                                 {"observed", e.report.observed},
                                 {"expected", e.report.expected},
                                 {"tolerance", e.report.tolerance},
                                 {"detail", e.report.detail}});
        } else {
          out << status << ' ' << e.report.name << " observed=" << format_number(e.report.observed)
              << " expected=" << format_number(e.report.expected)
              << " tol=" << format_number(e.report.tolerance) << ' ' << e.report.detail << '\n';
        }
      }
      if (check_json) {
        emit(out, json{{"passed", ok}, {"reports", reports}});
      } else {
        out << (ok ? "all hard checks passed" : "hard check failure") << '\n';
      }
      return ok ? kOk : kFailure;
    }

    if (*parity_cmd) {
      const ParityResult p = matlab_myplot(p_x, p_y, p_k, p_m, p_n);
      if (p.clamped) {
        err << "notice: Im tau = 0 mesh row raised to " << format_number(kImFloor) << '\n';
      }
      if (p_json) {
        emit(out, json{{"f", p.f}, {"a", p.a}, {"b", p.b}, {"clamped", p.clamped}});
      } else {
        print_row(out, "f", format_number(p.f));
        print_row(out, "a", format_number(p.a));
        print_row(out, "b", format_number(p.b));
      }
      return kOk;
    }
  } catch (const NonConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace suita::cli
