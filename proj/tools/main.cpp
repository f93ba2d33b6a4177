// Command-line front end: solve polynomials with the Weierstrass-Kerner or
// third-order Chebyshev iteration, compare the two, or run the randomized
// cross-validation suites.
//
// Exit codes: 0 success, 2 usage error, 3 collision, 4 max_iter reached,
// 5 check-suite failure.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wk/oracle.hpp"
#include "wk/solver.hpp"

using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCollision = 3;
constexpr int kExitMaxIter = 4;
constexpr int kExitCheckFailed = 5;

struct JobSpec {
  wk::cvec coefficients;
  bool explicit_start = false;
  wk::cvec start;
  std::uint64_t circle_seed = 0;
  std::string method = "wdk";
  double tol = 1e-15;
  int max_iter = 1000;
  bool trace = false;
  std::string format = "text";
};

std::string fmt_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15E", v);
  return buf;
}

std::string fmt_complex(wk::Complex z) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.15E%+.15Ei", z.real(), z.imag());
  return buf;
}

// Complex literal "a+bi" with no spaces; pure reals and pure imaginaries
// ("3i", "-i") allowed. Exponents inside either part are fine.
bool parse_complex(const std::string &token, wk::Complex &out) {
  if (token.empty())
    return false;
  // Split before the sign of the imaginary part: the first +/- that is not
  // the leading sign and not part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < token.size(); ++i) {
    const char c = token[i];
    if ((c == '+' || c == '-') && token[i - 1] != 'e' && token[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto parse_number = [](const std::string &s, double &value) {
    if (s.empty())
      return false;
    char *end = nullptr;
    value = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
  };
  auto parse_imag = [&](const std::string &s, double &value) {
    if (s.empty() || (s.back() != 'i' && s.back() != 'I'))
      return false;
    std::string body = s.substr(0, s.size() - 1);
    if (body.empty() || body == "+")
      value = 1.0;
    else if (body == "-")
      value = -1.0;
    else if (!parse_number(body, value))
      return false;
    return true;
  };

  double re = 0.0, im = 0.0;
  if (split == std::string::npos) {
    if (token.back() == 'i' || token.back() == 'I') {
      if (!parse_imag(token, im))
        return false;
    } else if (!parse_number(token, re)) {
      return false;
    }
  } else {
    if (!parse_number(token.substr(0, split), re))
      return false;
    if (!parse_imag(token.substr(split), im))
      return false;
  }
  out = wk::Complex(re, im);
  return true;
}

bool parse_complex_list(const std::string &text, wk::cvec &out) {
  std::string normalized = text;
  for (char &c : normalized)
    if (c == ',')
      c = ' ';
  std::istringstream in(normalized);
  std::string token;
  out.clear();
  while (in >> token) {
    wk::Complex z;
    if (!parse_complex(token, z))
      return false;
    out.push_back(z);
  }
  return !out.empty();
}

// One complex per line, a0 first; '#' starts a comment.
bool parse_coeffs_file(const std::string &path, wk::cvec &out) {
  std::ifstream in(path);
  if (!in)
    return false;
  out.clear();
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string token;
    while (ls >> token) {
      wk::Complex z;
      if (!parse_complex(token, z))
        return false;
      out.push_back(z);
    }
  }
  return !out.empty();
}

wk::cvec sorted_roots(const wk::cvec &roots) {
  wk::cvec out(roots.size());
  const auto order = wk::canonical_order(roots);
  for (std::size_t i = 0; i < roots.size(); ++i)
    out[i] = roots[order[i]];
  return out;
}

const char *status_name(wk::SolveStatus status) {
  switch (status) {
  case wk::SolveStatus::converged:
    return "converged";
  case wk::SolveStatus::max_iter_reached:
    return "max_iter_reached";
  default:
    return "collision_detected";
  }
}

int status_exit_code(wk::SolveStatus status) {
  switch (status) {
  case wk::SolveStatus::converged:
    return kExitOk;
  case wk::SolveStatus::collision_detected:
    return kExitCollision;
  default:
    return kExitMaxIter;
  }
}

json roots_to_json(const wk::cvec &roots) {
  json arr = json::array();
  for (const auto &z : roots)
    arr.push_back({z.real(), z.imag()});
  return arr;
}

void print_trace_text(const wk::IterationTrace &trace) {
  std::printf("trace:\n");
  for (std::size_t m = 1; m < trace.iterates.size(); ++m) {
    std::printf("m=%4zu ", m);
    for (const auto &z : trace.iterates[m])
      std::printf(" %s", fmt_complex(z).c_str());
    std::printf("\n");
  }
}

void print_trace_jsonl(const wk::IterationTrace &trace) {
  for (std::size_t m = 1; m < trace.iterates.size(); ++m) {
    json rec;
    rec["m"] = m;
    rec["x"] = roots_to_json(trace.iterates[m]);
    rec["step_norm"] = trace.step_norms[m - 1];
    rec["residual"] = trace.residual_norms[m - 1];
    std::printf("%s\n", rec.dump().c_str());
  }
}

json summary_json(const std::string &method, const wk::SolverResult &result) {
  json rec;
  rec["method"] = method;
  rec["status"] = status_name(result.status);
  rec["iterations"] = result.iterations;
  rec["roots"] = roots_to_json(sorted_roots(result.roots));
  rec["final_step_norm"] = result.final_step_norm;
  rec["final_residual"] = result.final_residual;
  return rec;
}

wk::SolverResult run_method(const JobSpec &spec, const std::string &method,
                            bool record_trace) {
  wk::MonicPolynomial p(spec.coefficients);
  wk::cvec x0 = spec.explicit_start
                    ? spec.start
                    : wk::default_initial_guess(p, spec.circle_seed);
  wk::SolverConfig config;
  config.tol = spec.tol;
  config.max_iter = spec.max_iter;
  config.method = method == "chebyshev" ? wk::Method::chebyshev
                                        : wk::Method::weierstrass_kerner;
  config.record_trace = record_trace;
  return wk::solve(p, x0, config);
}

int cmd_solve(const JobSpec &spec) {
  std::vector<std::string> methods;
  if (spec.method == "both")
    methods = {"wdk", "chebyshev"};
  else
    methods = {spec.method};

  int exit_code = kExitOk;
  for (const auto &method : methods) {
    const wk::SolverResult result = run_method(spec, method, spec.trace);
    if (spec.format == "jsonl") {
      if (spec.trace)
        print_trace_jsonl(result.trace);
      std::printf("%s\n", summary_json(method, result).dump().c_str());
    } else {
      std::printf("method: %s\n", method.c_str());
      if (spec.trace)
        print_trace_text(result.trace);
      std::printf("status: %s\n", status_name(result.status));
      std::printf("iterations: %d\n", result.iterations);
      std::printf("final step 1-norm: %s\n",
                  fmt_real(result.final_step_norm).c_str());
      std::printf("final residual: %s\n",
                  fmt_real(result.final_residual).c_str());
      std::printf("roots:\n");
      for (const auto &z : sorted_roots(result.roots))
        std::printf("  %s\n", fmt_complex(z).c_str());
    }
    if (exit_code == kExitOk)
      exit_code = status_exit_code(result.status);
  }
  return exit_code;
}

int cmd_compare(const JobSpec &spec) {
  int exit_code = kExitOk;
  struct Row {
    std::string method;
    wk::SolverResult result;
    double order = 0.0;
    bool has_order = false;
  };
  std::vector<Row> rows;
  for (const std::string method : {"wdk", "chebyshev"}) {
    Row row;
    row.method = method;
    row.result = run_method(spec, method, true);
    try {
      row.order = wk::estimate_convergence_order(row.result.trace);
      row.has_order = true;
    } catch (const wk::UndefinedOrderError &) {
    }
    if (exit_code == kExitOk)
      exit_code = status_exit_code(row.result.status);
    rows.push_back(std::move(row));
  }

  if (spec.format == "jsonl") {
    for (const Row &row : rows) {
      if (spec.trace)
        print_trace_jsonl(row.result.trace);
      json rec = summary_json(row.method, row.result);
      if (row.has_order)
        rec["order"] = row.order;
      std::printf("%s\n", rec.dump().c_str());
    }
  } else {
    std::printf("%-10s %10s  %-18s %-22s %s\n", "method", "iterations",
                "status", "final_residual", "est_order");
    for (const Row &row : rows) {
      char order_buf[48];
      if (row.has_order && row.order < 1.5)
        std::snprintf(order_buf, sizeof order_buf, "%.2f [sub-quadratic]",
                      row.order);
      else if (row.has_order)
        std::snprintf(order_buf, sizeof order_buf, "%.2f", row.order);
      else
        std::snprintf(order_buf, sizeof order_buf, "n/a");
      std::printf("%-10s %10d  %-18s %-22s %s\n", row.method.c_str(),
                  row.result.iterations, status_name(row.result.status),
                  fmt_real(row.result.final_residual).c_str(), order_buf);
      if (spec.trace)
        print_trace_text(row.result.trace);
    }
  }
  return exit_code;
}

int cmd_check(std::size_t degree, int trials, std::uint64_t seed,
              const std::string &format) {
  const wk::CheckSummary s = wk::run_check_suite(degree, trials, seed);
  if (format == "jsonl") {
    json rec;
    rec["degree"] = s.degree;
    rec["trials"] = s.trials;
    rec["seed"] = s.seed;
    rec["max_dev_wdk"] = s.max_dev_wdk;
    rec["max_dev_chebyshev"] = s.max_dev_chebyshev;
    rec["max_dev_inverse"] = s.max_dev_inverse;
    rec["max_dev_fd_jacobian"] = s.max_dev_fd_jacobian;
    rec["max_dev_fd_hessian"] = s.max_dev_fd_hessian;
    rec["pass"] = s.pass();
    std::printf("%s\n", rec.dump().c_str());
  } else {
    std::printf("check: degree %zu, trials %d, seed %llu\n", s.degree, s.trials,
                static_cast<unsigned long long>(s.seed));
    std::printf("closed-form wdk vs generic newton    : %s  (bound 1e-09)\n",
                fmt_real(s.max_dev_wdk).c_str());
    std::printf("closed-form chebyshev vs generic     : %s  (bound 1e-09)\n",
                fmt_real(s.max_dev_chebyshev).c_str());
    std::printf("closed-form inverse vs dense inverse : %s  (bound 1e-09)\n",
                fmt_real(s.max_dev_inverse).c_str());
    std::printf("jacobian vs finite differences       : %s  (bound 1e-06)\n",
                fmt_real(s.max_dev_fd_jacobian).c_str());
    std::printf("hessian blocks vs finite differences : %s  (bound 1e-05)\n",
                fmt_real(s.max_dev_fd_hessian).c_str());
    std::printf("result: %s\n", s.pass() ? "PASS" : "FAIL");
  }
  return s.pass() ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Simultaneous polynomial root finding: Weierstrass-Kerner and "
               "third-order Chebyshev iterations"};
  app.require_subcommand(1);

  std::string coeffs_text, coeffs_file, start_text;
  JobSpec spec;
  std::uint64_t seed = 0;
  bool have_circle_seed = false;
  std::uint64_t circle_seed = 0;

  auto add_common = [&](CLI::App *cmd, bool with_method) {
    auto *c = cmd->add_option("--coeffs", coeffs_text,
                              "coefficients a0 a1 ... a_{n-1}, monic implied");
    auto *f = cmd->add_option("--coeffs-file", coeffs_file,
                              "file with one coefficient per line, a0 first");
    c->excludes(f);
    auto *s = cmd->add_option("--start", start_text,
                              "explicit initial guesses, one per root");
    auto *cs = cmd->add_option("--circle-seed", circle_seed,
                               "seed for the default circle start");
    cs->excludes(s);
    if (with_method)
      cmd->add_option("--method", spec.method, "wdk | chebyshev | both")
          ->check(CLI::IsMember({"wdk", "chebyshev", "both"}));
    cmd->add_option("--tol", spec.tol, "step 1-norm stopping threshold");
    cmd->add_option("--max-iter", spec.max_iter, "iteration cap");
    cmd->add_flag("--trace", spec.trace, "print every iterate");
    cmd->add_option("--format", spec.format, "text | jsonl")
        ->check(CLI::IsMember({"text", "jsonl"}));
    cmd->add_option("--seed", seed, "seed for derived randomness");
    cmd->callback([cmd, cs, &have_circle_seed]() {
      have_circle_seed = cs->count() > 0;
      (void)cmd;
    });
  };

  CLI::App *solve_cmd =
      app.add_subcommand("solve", "run one method and report the roots");
  add_common(solve_cmd, true);
  CLI::App *compare_cmd = app.add_subcommand(
      "compare", "run both methods from the same start and compare");
  add_common(compare_cmd, false);

  CLI::App *check_cmd = app.add_subcommand(
      "check", "randomized closed-form vs dense-oracle validation");
  std::size_t check_degree = 0;
  int check_trials = 100;
  std::string check_format = "text";
  check_cmd->add_option("--degree", check_degree, "polynomial degree")
      ->required()
      ->check(CLI::PositiveNumber);
  check_cmd->add_option("--trials", check_trials, "number of random instances")
      ->check(CLI::PositiveNumber);
  check_cmd->add_option("--seed", seed, "rng seed");
  check_cmd->add_option("--format", check_format, "text | jsonl")
      ->check(CLI::IsMember({"text", "jsonl"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check_cmd->parsed())
      return cmd_check(check_degree, check_trials, seed, check_format);

    if (!coeffs_text.empty()) {
      if (!parse_complex_list(coeffs_text, spec.coefficients)) {
        std::fprintf(stderr, "error: cannot parse --coeffs\n");
        return kExitUsage;
      }
    } else if (!coeffs_file.empty()) {
      if (!parse_coeffs_file(coeffs_file, spec.coefficients)) {
        std::fprintf(stderr, "error: cannot read --coeffs-file %s\n",
                     coeffs_file.c_str());
        return kExitUsage;
      }
    } else {
      std::fprintf(stderr, "error: --coeffs or --coeffs-file is required\n");
      return kExitUsage;
    }

    if (!start_text.empty()) {
      if (!parse_complex_list(start_text, spec.start)) {
        std::fprintf(stderr, "error: cannot parse --start\n");
        return kExitUsage;
      }
      if (spec.start.size() != spec.coefficients.size()) {
        std::fprintf(stderr,
                     "error: --start needs exactly %zu entries (degree)\n",
                     spec.coefficients.size());
        return kExitUsage;
      }
      spec.explicit_start = true;
    } else {
      spec.circle_seed = have_circle_seed ? circle_seed : seed;
    }
    if (!(spec.tol > 0.0) || spec.max_iter < 1) {
      std::fprintf(stderr, "error: --tol must be > 0 and --max-iter >= 1\n");
      return kExitUsage;
    }

    return solve_cmd->parsed() ? cmd_solve(spec) : cmd_compare(spec);
  } catch (const std::exception &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
}
