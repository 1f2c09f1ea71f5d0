#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lt2d/bounds/model.hpp"

namespace lt2d::experiments {

struct SweepSpec {
  enum class Variable { epsilon, horizon, m_tilde, grid_n };
  Variable variable = Variable::epsilon;
  std::vector<double> values;  // nonempty, strictly monotone
  bounds::ModelConstants base;
  double m_tilde = 1.0;

  // Cross-validation parameters (m_tilde / grid_n sweeps).
  double w0 = 2.0;
  std::size_t grid_n = 1000;
  double tol = 1.0e-10;

  int workers = 0;  // 0: LT2D_WORKERS env var, else hardware concurrency

  void validate() const;
};

SweepSpec::Variable sweep_variable_from_string(std::string_view name);
std::string_view to_string(SweepSpec::Variable v);

/// Least-squares line for the horizon against log log log(1/eps),
/// restricted to the admissible range eps < e^{-e}.
struct RegressionLine {
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t points = 0;
};

struct SweepResult {
  std::string header;                    // summary.csv column names
  std::vector<std::vector<double>> rows; // one row per sweep point
  std::optional<RegressionLine> regression;
};

/// epsilon sweep: rows (epsilon, predicted horizon T(eps));
/// horizon sweep: rows (T, eps0(T), log_eps0(T)). Points run on a bounded
/// worker pool and are merged in input order.
SweepResult sweep_thresholds(const SweepSpec& spec);

/// m_tilde / grid_n sweep: Picard vs ODE discrepancy per point.
SweepResult sweep_crossval(const SweepSpec& spec);

/// Dispatch on spec.variable.
SweepResult run_sweep(const SweepSpec& spec);

void write_sweep_summary(const std::filesystem::path& dir,
                         const SweepResult& result);

/// Strict JSON parsing of a sweep spec (unknown keys rejected).
SweepSpec sweep_spec_from_json_text(const std::string& text);
std::string sweep_spec_to_json_text(const SweepSpec& spec);

}  // namespace lt2d::experiments
