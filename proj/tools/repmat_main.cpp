// Command-line front end: closed-form computations, oracle verification,
// and solver benchmarks for the V_n(b) tridiagonal family.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "repmat/cheb_inverse.hpp"
#include "repmat/oracle.hpp"
#include "repmat/repunit.hpp"
#include "repmat/spectral.hpp"
#include "repmat/tridiag.hpp"

using json = nlohmann::ordered_json;
using namespace repmat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string fmt_double(double v, int prec) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
  return buf;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<Rational> read_rhs_exact(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open rhs file: " + path);
  std::vector<Rational> r;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    r.push_back(parse_rational(line));
  }
  if (r.empty()) throw std::invalid_argument("rhs file is empty: " + path);
  return r;
}

struct BenchResult {
  std::string solver;
  long n = 0;
  double ns_per_op = 0.0;
};

/// Time fn with enough repetitions for a stable reading; returns ns per call.
template <class F>
double time_ns(F&& fn) {
  using clock = std::chrono::steady_clock;
  long reps = 1;
  for (;;) {
    auto t0 = clock::now();
    for (long i = 0; i < reps; ++i) fn();
    auto dt = std::chrono::duration<double>(clock::now() - t0).count();
    if (dt > 0.02 || reps >= (1L << 24)) {
      return dt / static_cast<double>(reps) * 1e9;
    }
    reps *= 4;
  }
}

int cmd_repunit(long m, const Rational& b, const std::string& mode,
                bool as_json, int prec) {
  json out;
  out["input"] = {{"m", m}, {"b", b.get_str()}};
  out["mode"] = mode;
  std::string text;
  if (mode == "exact") {
    text = repunit_exact(m, b).get_str();
    out["result"] = text;
  } else if (mode == "float") {
    double v = repunit_float(m, b.get_d());
    text = fmt_double(v, prec);
    out["result"] = v;
  } else if (mode == "log") {
    LogValue v = repunit_log(m, b.get_d());
    text = fmt_double(v.log_magnitude, prec);
    out["result"] = {{"log_magnitude", v.log_magnitude}, {"sign", v.sign}};
  } else {
    throw std::invalid_argument("unknown mode: " + mode);
  }
  out["identity_checks"] = json::object();
  if (as_json) {
    emit(out);
  } else {
    std::cout << text << "\n";
  }
  return kExitOk;
}

int cmd_det(long n, const Rational& b, const std::string& mode, bool as_json,
            int prec) {
  TridiagonalParams p(n, b);
  json out;
  out["input"] = {{"n", n}, {"b", b.get_str()}};
  out["mode"] = mode;
  std::string text;
  if (mode == "exact") {
    text = determinant_continuant_exact(p).get_str();
    out["result"] = text;
  } else if (mode == "float") {
    double v = determinant_continuant_float(p);
    text = fmt_double(v, prec);
    out["result"] = v;
  } else if (mode == "log") {
    LogValue v = determinant_continuant_log(p);
    text = fmt_double(v.log_magnitude, prec);
    out["result"] = {{"log_magnitude", v.log_magnitude}, {"sign", v.sign}};
  } else {
    throw std::invalid_argument("unknown mode: " + mode);
  }
  // det(V_n(b)) = R_{n+1}(b), checked on every invocation.
  bool identity_ok;
  if (mode == "exact") {
    identity_ok = determinant_continuant_exact(p) == repunit_exact(n + 1, b);
  } else {
    double logdet = determinant_continuant_log(p).log_magnitude;
    double logrep = log_of_rational(repunit_exact(n + 1, b));
    identity_ok = std::fabs(std::expm1(logdet - logrep)) <= 1e-11;
  }
  out["identity_checks"] = {{"det_equals_repunit", identity_ok}};
  if (as_json) {
    emit(out);
  } else {
    std::cout << text << "\n";
  }
  return identity_ok ? kExitOk : kExitCheckFailed;
}

int cmd_spectrum(long n, const Rational& b, bool as_json, int prec) {
  TridiagonalParams p(n, b);
  auto s = spectrum(p);
  if (as_json) {
    json out;
    out["input"] = {{"n", n}, {"b", b.get_str()}};
    out["mode"] = "float";
    out["result"] = s.values;
    out["identity_checks"] = json::object();
    emit(out);
  } else {
    std::string sep;
    for (double v : s.values) {
      std::cout << sep << fmt_double(v, prec);
      sep = " ";
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_eigvec(long n, const Rational& b, long k, bool normalize, bool log_mode,
               bool as_json, int prec) {
  TridiagonalParams p(n, b);
  json out;
  out["input"] = {{"n", n}, {"b", b.get_str()}, {"k", k}};
  out["identity_checks"] = json::object();
  if (log_mode) {
    auto v = eigenvector_log(p, k);
    out["mode"] = "log";
    json arr = json::array();
    for (const auto& e : v) {
      arr.push_back({{"log_magnitude", e.log_magnitude}, {"sign", e.sign}});
    }
    out["result"] = arr;
    if (as_json) {
      emit(out);
    } else {
      for (const auto& e : v) {
        std::cout << fmt_double(e.log_magnitude, prec) << " "
                  << (e.sign >= 0 ? "+1" : "-1") << "\n";
      }
    }
    return kExitOk;
  }
  auto v = normalize ? eigenvector_w_normalized(p, k) : eigenvector(p, k);
  out["mode"] = "float";
  out["result"] = v;
  if (as_json) {
    emit(out);
  } else {
    std::string sep;
    for (double x : v) {
      std::cout << sep << fmt_double(x, prec);
      sep = " ";
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_product_check(long n, const Rational& b, double tol,
                      const std::string& mode, bool as_json, int prec) {
  TridiagonalParams p(n, b);
  double log_product, log_exact = log_of_rational(repunit_exact(n + 1, b));
  if (mode == "float") {
    log_product = std::log(spectral_product(p));
  } else if (mode == "log") {
    log_product = spectral_product_log(p).log_magnitude;
  } else {
    throw std::invalid_argument("unknown mode: " + mode);
  }
  double rel = std::fabs(std::expm1(log_product - log_exact));
  bool ok = rel <= tol;
  if (as_json) {
    json out;
    out["input"] = {{"n", n}, {"b", b.get_str()}};
    out["mode"] = mode;
    out["result"] = {{"log_spectral_product", log_product},
                     {"log_repunit", log_exact},
                     {"rel_error", rel}};
    out["identity_checks"] = {{"product_equals_repunit", ok}};
    emit(out);
  } else {
    std::cout << "spectral_product log=" << fmt_double(log_product, prec)
              << " repunit log=" << fmt_double(log_exact, prec)
              << " rel_error=" << fmt_double(rel, 3) << " "
              << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_inverse(long n, const Rational& b, long i, long j,
                const std::string& mode, bool as_json, int prec) {
  TridiagonalParams p(n, b);
  json out;
  out["input"] = {{"n", n}, {"b", b.get_str()}, {"i", i}, {"j", j}};
  out["mode"] = mode;
  std::string text;
  if (mode == "exact") {
    auto e = inverse_entry_exact(p, i, j);
    text = e.value.get_str();
    out["result"] = {{"value", text},
                     {"sign", e.sign},
                     {"b_power", e.b_power},
                     {"left_repunit", e.left_repunit.get_str()},
                     {"right_repunit", e.right_repunit.get_str()},
                     {"denominator", e.denominator.get_str()}};
  } else if (mode == "float") {
    auto e = inverse_entry_float(p, i, j);
    text = fmt_double(e.value, prec);
    out["result"] = {{"value", e.value},
                     {"sign", e.sign},
                     {"b_power", e.b_power},
                     {"left_repunit", e.left_repunit},
                     {"right_repunit", e.right_repunit},
                     {"denominator", e.denominator}};
  } else {
    throw std::invalid_argument("unknown mode: " + mode);
  }
  out["identity_checks"] = json::object();
  if (as_json) {
    emit(out);
  } else {
    std::cout << text << "\n";
  }
  return kExitOk;
}

int cmd_solve(long n, const Rational& b, const std::string& rhs_path,
              const std::string& solver, const std::string& mode, bool as_json,
              int prec) {
  TridiagonalParams p(n, b);
  auto rhs = read_rhs_exact(rhs_path);
  if (static_cast<long>(rhs.size()) != n) {
    throw std::invalid_argument("rhs file has " + std::to_string(rhs.size()) +
                                " entries, expected " + std::to_string(n));
  }
  json out;
  out["input"] = {{"n", n}, {"b", b.get_str()}, {"rhs", rhs_path},
                  {"solver", solver}};
  out["mode"] = mode;
  out["identity_checks"] = json::object();
  if (mode == "exact") {
    std::vector<Rational> y;
    if (solver == "thomas") {
      y = thomas_solve_exact(p, rhs);
    } else if (solver == "apply-inverse") {
      y = apply_inverse_exact(p, rhs);
    } else {
      throw std::invalid_argument("unknown solver: " + solver);
    }
    json arr = json::array();
    for (const auto& v : y) arr.push_back(v.get_str());
    out["result"] = arr;
    if (as_json) {
      emit(out);
    } else {
      for (const auto& v : y) std::cout << v.get_str() << "\n";
    }
    return kExitOk;
  }
  if (mode != "float") throw std::invalid_argument("unknown mode: " + mode);
  std::vector<double> rf(rhs.size());
  for (std::size_t idx = 0; idx < rhs.size(); ++idx) rf[idx] = rhs[idx].get_d();
  std::vector<double> y;
  if (solver == "thomas") {
    y = thomas_solve_float(p, rf);
  } else if (solver == "apply-inverse") {
    y = apply_inverse_float(p, rf);
  } else {
    throw std::invalid_argument("unknown solver: " + solver);
  }
  out["result"] = y;
  if (as_json) {
    emit(out);
  } else {
    for (double v : y) std::cout << fmt_double(v, prec) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& preset, std::vector<std::string> checks,
               std::vector<long> sizes, std::vector<std::string> bases,
               long oracle_cap, long exact_cap, bool as_json) {
  OracleCaps caps;
  caps.dense_cap = oracle_cap;
  caps.exact_cap = exact_cap;
  std::vector<std::pair<long, Rational>> grid;
  if (!preset.empty()) {
    if (preset != "default") {
      throw std::invalid_argument("unknown preset: " + preset);
    }
    for (long n : default_grid_sizes()) {
      for (const auto& b : default_grid_bases()) grid.emplace_back(n, b);
    }
    if (checks.empty()) checks = known_checks();
  } else {
    if (sizes.empty() || bases.empty()) {
      throw std::invalid_argument("verify: need --preset or both --n and --b");
    }
    for (long n : sizes) {
      for (const auto& bs : bases) grid.emplace_back(n, parse_rational(bs));
    }
    if (checks.empty()) checks = known_checks();
  }
  auto reports = run_verification(grid, checks, caps);
  bool all_pass = true;
  if (as_json) {
    json arr = json::array();
    for (const auto& r : reports) {
      arr.push_back({{"check", r.check},
                     {"n", r.n},
                     {"b", r.b},
                     {"mode", r.mode},
                     {"status", r.pass ? "pass" : "fail"},
                     {"worst_abs", r.worst_abs},
                     {"worst_rel", r.worst_rel},
                     {"tol", r.tolerance}});
      all_pass = all_pass && r.pass;
    }
    json out;
    out["input"] = {{"checks", checks}};
    out["mode"] = "verify";
    out["result"] = arr;
    out["identity_checks"] = {{"all_pass", all_pass}};
    emit(out);
  } else {
    for (const auto& r : reports) {
      if (!r.pass) all_pass = false;
      std::cout << report_line(r) << "\n";
    }
    std::cout << (all_pass ? "ALL PASS" : "FAILURES PRESENT") << " ("
              << reports.size() << " reports)\n";
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_bench(std::vector<long> sizes, const Rational& b,
              std::vector<std::string> solvers, double tol, long dense_cap) {
  if (solvers.empty()) solvers = {"thomas", "apply-inverse"};
  std::vector<BenchResult> results;
  for (long n : sizes) {
    TridiagonalParams p(n, b);
    std::vector<double> rhs(static_cast<std::size_t>(n));
    for (long i = 1; i <= n; ++i) {
      rhs[static_cast<std::size_t>(i - 1)] = static_cast<double>((7 * i) % 11 - 5);
    }
    auto reference = thomas_solve_float(p, rhs);
    double refmax = 0.0;
    for (double v : reference) refmax = std::max(refmax, std::fabs(v));
    double log_det_ref = determinant_continuant_log(p).log_magnitude;

    for (const auto& solver : solvers) {
      bool needs_dense = (solver == "dense" || solver == "dense-det");
      if (needs_dense && n > dense_cap) {
        throw std::invalid_argument("size " + std::to_string(n) +
                                    " exceeds dense cap for solver " + solver);
      }
      // Correctness gate before any timing.
      if (solver == "thomas" || solver == "apply-inverse" || solver == "dense") {
        std::vector<double> y;
        if (solver == "thomas") {
          y = thomas_solve_float(p, rhs);
        } else if (solver == "apply-inverse") {
          y = apply_inverse_float(p, rhs);
        } else {
          auto m = dense_materialize<double>(p, dense_cap);
          auto inv = dense_inverse(m);
          y.assign(rhs.size(), 0.0);
          for (std::size_t i = 0; i < rhs.size(); ++i) {
            for (std::size_t j = 0; j < rhs.size(); ++j) {
              y[i] += inv(i, j) * rhs[j];
            }
          }
        }
        double dmax = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) {
          dmax = std::max(dmax, std::fabs(y[i] - reference[i]));
        }
        if (dmax > tol * refmax) {
          throw std::runtime_error("bench correctness gate failed for " +
                                   solver + " at n=" + std::to_string(n));
        }
      } else if (solver == "continuant" || solver == "dense-det") {
        double logd;
        if (solver == "continuant") {
          logd = determinant_continuant_log(p).log_magnitude;
        } else {
          auto m = dense_materialize<double>(p, dense_cap);
          // Dense determinants overflow quickly; compare in the log domain
          // via exact rational elimination on small sizes.
          auto me = dense_materialize<Rational>(p, dense_cap);
          logd = log_of_rational(dense_lu_det(me));
        }
        if (std::fabs(logd - log_det_ref) >
            1e-9 * std::max(1.0, std::fabs(log_det_ref))) {
          throw std::runtime_error("bench correctness gate failed for " +
                                   solver + " at n=" + std::to_string(n));
        }
      } else {
        throw std::invalid_argument("unknown solver: " + solver);
      }

      double ns = 0.0;
      if (solver == "thomas") {
        ns = time_ns([&] { volatile double s = thomas_solve_float(p, rhs)[0]; (void)s; });
      } else if (solver == "apply-inverse") {
        ns = time_ns([&] { volatile double s = apply_inverse_float(p, rhs)[0]; (void)s; });
      } else if (solver == "dense") {
        ns = time_ns([&] {
          auto m = dense_materialize<double>(p, dense_cap);
          auto inv = dense_inverse(m);
          volatile double s = inv(0, 0);
          (void)s;
        });
      } else if (solver == "continuant") {
        ns = time_ns([&] {
          volatile double s = determinant_continuant_log(p).log_magnitude;
          (void)s;
        });
      } else {  // dense-det
        ns = time_ns([&] {
          auto m = dense_materialize<double>(p, dense_cap);
          volatile double s = dense_lu_det(m);
          (void)s;
        });
      }
      results.push_back({solver, n, ns});
    }
  }
  std::printf("%-16s %8s %14s\n", "solver", "n", "ns/op");
  for (const auto& r : results) {
    std::printf("%-16s %8ld %14.0f\n", r.solver.c_str(), r.n, r.ns_per_op);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-form toolkit for the tridiagonal repunit family V_n(b)"};
  app.require_subcommand(1);

  std::string b_text = "2", mode = "exact", prod_mode = "log", preset, rhs_path,
      solver = "thomas";
  long n = 1, m = 1, k = 1, idx_i = 1, idx_j = 1;
  long oracle_cap = 256, exact_cap = 64;
  int prec = 6;
  double tol = 1e-10;
  bool as_json = false, normalize = false, log_vec = false;
  std::vector<std::string> checks, bases, solvers;
  std::vector<long> sizes;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", as_json, "emit a single JSON object");
    cmd->add_option("--prec", prec, "significant digits for float output");
  };

  auto* c_rep = app.add_subcommand("repunit", "evaluate R_m(b)");
  c_rep->add_option("--m", m, "repunit length")->required();
  c_rep->add_option("--b", b_text, "base: p/q, integer, or decimal")->required();
  c_rep->add_option("--mode", mode, "exact|float|log");
  add_common(c_rep);

  auto* c_det = app.add_subcommand("det", "determinant of V_n(b)");
  c_det->add_option("--n", n)->required();
  c_det->add_option("--b", b_text)->required();
  c_det->add_option("--mode", mode, "exact|float|log");
  add_common(c_det);

  auto* c_spec = app.add_subcommand("spectrum", "all eigenvalues, descending");
  c_spec->add_option("--n", n)->required();
  c_spec->add_option("--b", b_text)->required();
  add_common(c_spec);

  auto* c_vec = app.add_subcommand("eigvec", "eigenvector for index k");
  c_vec->add_option("--n", n)->required();
  c_vec->add_option("--b", b_text)->required();
  c_vec->add_option("--k", k)->required();
  c_vec->add_flag("--normalize", normalize, "W-normalize the vector");
  c_vec->add_flag("--log", log_vec, "log-magnitude/sign output");
  add_common(c_vec);

  auto* c_prod = app.add_subcommand("product-check",
                                    "spectral product vs exact repunit");
  c_prod->add_option("--n", n)->required();
  c_prod->add_option("--b", b_text)->required();
  c_prod->add_option("--tol", tol, "relative tolerance");
  c_prod->add_option("--mode", prod_mode, "float|log");
  add_common(c_prod);

  auto* c_inv = app.add_subcommand("inverse", "closed-form inverse entry");
  c_inv->add_option("--n", n)->required();
  c_inv->add_option("--b", b_text)->required();
  c_inv->add_option("--i", idx_i)->required();
  c_inv->add_option("--j", idx_j)->required();
  c_inv->add_option("--mode", mode, "exact|float");
  add_common(c_inv);

  auto* c_solve = app.add_subcommand("solve", "solve V_n(b) y = r");
  c_solve->add_option("--n", n)->required();
  c_solve->add_option("--b", b_text)->required();
  c_solve->add_option("--rhs", rhs_path, "file, one scalar per line")->required();
  c_solve->add_option("--solver", solver, "thomas|apply-inverse");
  c_solve->add_option("--mode", mode, "exact|float");
  add_common(c_solve);

  auto* c_verify = app.add_subcommand("verify", "run oracle checks");
  c_verify->add_option("--preset", preset, "default");
  c_verify->add_option("--checks", checks, "check names")->delimiter(',');
  c_verify->add_option("--n", sizes, "grid sizes")->delimiter(',');
  c_verify->add_option("--b", bases, "grid bases")->delimiter(',');
  c_verify->add_option("--oracle-cap", oracle_cap, "dense float cap");
  c_verify->add_option("--exact-cap", exact_cap, "dense exact cap");
  c_verify->add_flag("--json", as_json, "emit a single JSON object");

  auto* c_bench = app.add_subcommand("bench", "time solver/determinant paths");
  c_bench->add_option("--sizes", sizes, "problem sizes")->delimiter(',')->required();
  c_bench->add_option("--b", b_text);
  c_bench->add_option("--solvers", solvers,
                      "thomas|apply-inverse|dense|continuant|dense-det")
      ->delimiter(',');
  c_bench->add_option("--tol", tol, "agreement gate tolerance");
  c_bench->add_option("--oracle-cap", oracle_cap, "dense cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    Rational b = parse_rational(b_text);
    if (c_rep->parsed()) return cmd_repunit(m, b, mode, as_json, prec);
    if (c_det->parsed()) return cmd_det(n, b, mode, as_json, prec);
    if (c_spec->parsed()) return cmd_spectrum(n, b, as_json, prec);
    if (c_vec->parsed()) {
      return cmd_eigvec(n, b, k, normalize, log_vec, as_json, prec);
    }
    if (c_prod->parsed()) {
      return cmd_product_check(n, b, tol == 1e-10 ? 1e-11 : tol, prod_mode,
                               as_json, prec);
    }
    if (c_inv->parsed()) return cmd_inverse(n, b, idx_i, idx_j, mode, as_json, prec);
    if (c_solve->parsed()) {
      return cmd_solve(n, b, rhs_path, solver, mode, as_json, prec);
    }
    if (c_verify->parsed()) {
      return cmd_verify(preset, checks, sizes, bases, oracle_cap, exact_cap,
                        as_json);
    }
    if (c_bench->parsed()) return cmd_bench(sizes, b, solvers, tol, oracle_cap);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
