#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "numrad/checks.hpp"
#include "numrad/errors.hpp"
#include "numrad/io.hpp"
#include "numrad/numerical_range.hpp"
#include "numrad/semi_inner.hpp"
#include "numrad/suite.hpp"

namespace {

using namespace numrad;

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file_atomic(out_path, content);
}

std::string scalar12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

int cmd_compute(const std::string& matrix_path, const std::string& weight_path,
                const std::string& quantity, int grid, const std::string& out_path) {
  ThetaSweepConfig cfg;
  if (grid > 0) cfg.grid_points = grid;
  const CMatrix T = read_matrix_file(matrix_path);
  ensure_square(T, "compute");
  const CMatrix A = weight_path.empty()
                        ? CMatrix(CMatrix::Identity(T.rows(), T.cols()))
                        : read_matrix_file(weight_path);
  const Weight W = make_weight(A);

  if (quantity == "adjoint") {
    emit(matrix_to_json(a_adjoint(W, T)).dump(2) + "\n", out_path);
    return 0;
  }
  double value = 0.0;
  if (quantity == "w")
    value = a_numerical_radius(W, T, cfg);
  else if (quantity == "r")
    value = spectral_radius(T);  // similarity-invariant, so weight-independent
  else if (quantity == "norm")
    value = a_norm(W, T);
  else if (quantity == "m")
    value = a_crawford(W, T, cfg);
  else if (quantity == "cA")
    value = a_min_norm(W, T);
  else
    throw DomainError("unknown quantity: " + quantity);
  emit(scalar12(value) + "\n", out_path);
  return 0;
}

int cmd_verify(const std::string& suite, int trials, int dim, std::uint64_t seed, int grid,
               const std::string& out_path, const std::string& format) {
  ThetaSweepConfig cfg;
  if (grid > 0) cfg.grid_points = grid;
  const auto t0 = std::chrono::steady_clock::now();
  const SuiteReport rep = run_suite(suite, trials, dim, seed, cfg);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::printf("suite=%s trials=%d dim=%d seed=%llu violations=%ld invalid=%ld min_margin=%.3e "
              "tight_fraction=%.4f elapsed=%.2fs\n",
              rep.suite.c_str(), rep.trials, rep.dim,
              static_cast<unsigned long long>(rep.seed), rep.violations, rep.invalid,
              rep.min_margin, rep.tight_fraction, secs);

  const std::string content = format == "csv" ? suite_report_to_csv(rep)
                                              : suite_report_to_json(rep).dump(2) + "\n";
  if (out_path.empty()) {
    if (format == "csv")
      std::cout << content;
    else
      std::cout << content;
  } else {
    write_file_atomic(out_path, content);
  }
  return rep.violations == 0 ? 0 : 1;
}

int cmd_boundary(const std::string& matrix_path, int points, const std::string& out_path) {
  const CMatrix T = read_matrix_file(matrix_path);
  emit(boundary_to_csv(range_boundary(T, points)), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical-radius quantities and inequality verification suites"};
  app.require_subcommand(1);

  std::string matrix_path, weight_path, quantity = "w", out_path, format = "json";
  std::string suite = "all";
  int trials = 100, dim = 4, points = 360, grid = 0;
  std::uint64_t seed = 0;

  CLI::App* compute = app.add_subcommand("compute", "compute one quantity of a matrix");
  compute->add_option("matrix", matrix_path, "matrix JSON file")->required();
  compute->add_option("--weight", weight_path, "weight matrix JSON file (default: identity)");
  compute->add_option("--quantity", quantity, "one of w, r, norm, m, cA, adjoint");
  compute->add_option("--grid", grid, "theta-grid override");
  compute->add_option("--out", out_path, "output file (default: stdout)");

  CLI::App* verify = app.add_subcommand("verify", "run an inequality verification suite");
  verify->add_option("--suite", suite, "lemmas, s2, s3, s4-offdiag, s4-full, all");
  verify->add_option("--trials", trials, "number of random trials")->check(CLI::PositiveNumber);
  verify->add_option("--dim", dim, "matrix / block dimension");
  verify->add_option("--seed", seed, "stream seed");
  verify->add_option("--grid", grid, "theta-grid override");
  verify->add_option("--out", out_path, "report file (default: stdout)");
  verify->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* boundary = app.add_subcommand("boundary", "emit numerical-range support points");
  boundary->add_option("matrix", matrix_path, "matrix JSON file")->required();
  boundary->add_option("--points", points, "number of support angles")->check(CLI::PositiveNumber);
  boundary->add_option("--out", out_path, "output CSV file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (compute->parsed()) return cmd_compute(matrix_path, weight_path, quantity, grid, out_path);
    if (verify->parsed()) return cmd_verify(suite, trials, dim, seed, grid, out_path, format);
    if (boundary->parsed()) return cmd_boundary(matrix_path, points, out_path);
  } catch (const numrad::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
