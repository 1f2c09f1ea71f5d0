#include "lt2d/experiments/sweep.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <thread>

#include "lt2d/bounds/thresholds.hpp"
#include "lt2d/common/io.hpp"
#include "lt2d/experiments/crossval.hpp"

namespace lt2d::experiments {

using nlohmann::json;

void SweepSpec::validate() const {
  base.validate();
  if (values.empty()) throw std::invalid_argument("sweep: values empty");
  const bool increasing = values.size() < 2 || values[1] > values[0];
  for (std::size_t i = 1; i < values.size(); ++i) {
    const bool ok = increasing ? values[i] > values[i - 1]
                               : values[i] < values[i - 1];
    if (!ok)
      throw std::invalid_argument("sweep: values must be strictly monotone");
  }
  if (!(m_tilde > 0.0)) throw std::invalid_argument("sweep: m_tilde <= 0");
}

SweepSpec::Variable sweep_variable_from_string(std::string_view name) {
  if (name == "epsilon") return SweepSpec::Variable::epsilon;
  if (name == "horizon") return SweepSpec::Variable::horizon;
  if (name == "m_tilde") return SweepSpec::Variable::m_tilde;
  if (name == "grid_n") return SweepSpec::Variable::grid_n;
  throw std::invalid_argument("sweep: unknown variable '" + std::string(name) +
                              "'");
}

std::string_view to_string(SweepSpec::Variable v) {
  switch (v) {
    case SweepSpec::Variable::epsilon: return "epsilon";
    case SweepSpec::Variable::horizon: return "horizon";
    case SweepSpec::Variable::m_tilde: return "m_tilde";
    default: return "grid_n";
  }
}

namespace {

int worker_count(const SweepSpec& spec) {
  if (spec.workers > 0) return spec.workers;
  if (const char* env = std::getenv("LT2D_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Runs fn(i) for each index on a bounded pool; results land by index so
// the merged output is ordered by input, not completion.
template <class Fn>
void parallel_for_indexed(std::size_t count, int workers, const Fn& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(
      static_cast<std::size_t>(workers), nullptr);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::optional<RegressionLine> regress_triple_log(
    const std::vector<std::array<double, 2>>& eps_T) {
  // Admissible range eps < e^{-e}, where log log log(1/eps) is
  // well-defined and positive.
  const double eps_edge = std::exp(-std::exp(1.0));
  std::vector<std::array<double, 2>> pts;
  for (const auto& [eps, T] : eps_T)
    if (eps > 0.0 && eps < eps_edge)
      pts.push_back({std::log(std::log(std::log(1.0 / eps))), T});
  if (pts.size() < 2) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(pts.size());
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) return std::nullopt;
  RegressionLine line;
  line.slope = (n * sxy - sx * sy) / denom;
  line.intercept = (sy - line.slope * sx) / n;
  line.points = pts.size();
  return line;
}

}  // namespace

SweepResult sweep_thresholds(const SweepSpec& spec) {
  spec.validate();
  if (spec.variable != SweepSpec::Variable::epsilon &&
      spec.variable != SweepSpec::Variable::horizon)
    throw std::invalid_argument("sweep_thresholds: variable must be epsilon or horizon");

  SweepResult res;
  const std::size_t count = spec.values.size();

  if (spec.variable == SweepSpec::Variable::epsilon) {
    res.header = "epsilon,horizon";
    res.rows.assign(count, {});
    parallel_for_indexed(count, worker_count(spec), [&](std::size_t i) {
      const double eps = spec.values[i];
      const double T = bounds::predict_horizon(eps, spec.m_tilde,
                                               spec.base.c_const,
                                               spec.base.b_const);
      res.rows[i] = {eps, T};
    });
    std::vector<std::array<double, 2>> pairs;
    for (const auto& r : res.rows) pairs.push_back({r[0], r[1]});
    res.regression = regress_triple_log(pairs);
  } else {
    res.header = "horizon,eps0,log_eps0";
    res.rows.assign(count, {});
    parallel_for_indexed(count, worker_count(spec), [&](std::size_t i) {
      bounds::ModelConstants mc = spec.base;
      mc.horizon = spec.values[i];
      const auto rep = bounds::thresholds(spec.m_tilde, mc);
      res.rows[i] = {spec.values[i], rep.eps0, rep.log_eps0()};
    });
    std::vector<std::array<double, 2>> pairs;
    for (const auto& r : res.rows)
      pairs.push_back({std::exp(std::max(r[2], -700.0)), r[0]});
    res.regression = regress_triple_log(pairs);
  }
  return res;
}

SweepResult sweep_crossval(const SweepSpec& spec) {
  spec.validate();
  SweepResult res;
  const std::size_t count = spec.values.size();
  res.rows.assign(count, {});
  if (spec.variable == SweepSpec::Variable::grid_n) {
    res.header = "grid_n,discrepancy,contraction_estimate";
    parallel_for_indexed(count, worker_count(spec), [&](std::size_t i) {
      const auto rep = crossval_bounds(spec.base, spec.w0,
                                       static_cast<std::size_t>(spec.values[i]),
                                       spec.tol);
      res.rows[i] = {spec.values[i], rep.sup_rel_discrepancy,
                     rep.contraction_estimate};
    });
  } else if (spec.variable == SweepSpec::Variable::m_tilde) {
    res.header = "w0,discrepancy,contraction_estimate";
    parallel_for_indexed(count, worker_count(spec), [&](std::size_t i) {
      const auto rep =
          crossval_bounds(spec.base, spec.values[i], spec.grid_n, spec.tol);
      res.rows[i] = {spec.values[i], rep.sup_rel_discrepancy,
                     rep.contraction_estimate};
    });
  } else {
    throw std::invalid_argument("sweep_crossval: variable must be m_tilde or grid_n");
  }
  return res;
}

SweepResult run_sweep(const SweepSpec& spec) {
  switch (spec.variable) {
    case SweepSpec::Variable::epsilon:
    case SweepSpec::Variable::horizon:
      return sweep_thresholds(spec);
    default:
      return sweep_crossval(spec);
  }
}

void write_sweep_summary(const std::filesystem::path& dir,
                         const SweepResult& result) {
  CsvWriter csv(dir / "summary.csv", result.header);
  for (const auto& r : result.rows) csv.row(r);
  if (result.regression) {
    json j;
    j["slope"] = result.regression->slope;
    j["intercept"] = result.regression->intercept;
    j["points"] = result.regression->points;
    j["x"] = "logloglog(1/epsilon)";
    write_text_file(dir / "regression.json", j.dump(2) + "\n");
  }
}

SweepSpec sweep_spec_from_json_text(const std::string& text) {
  const json j = json::parse(text);
  static const std::set<std::string> known = {
      "variable", "values", "c_const", "b_const", "horizon", "epsilon",
      "m_tilde",  "w0",     "grid_n",  "tol",     "workers"};
  for (const auto& [key, _] : j.items())
    if (!known.count(key))
      throw std::invalid_argument("sweep config: unknown key '" + key + "'");

  SweepSpec spec;
  spec.variable = sweep_variable_from_string(j.at("variable").get<std::string>());
  spec.values = j.at("values").get<std::vector<double>>();
  if (j.contains("c_const")) spec.base.c_const = j.at("c_const").get<double>();
  if (j.contains("b_const")) spec.base.b_const = j.at("b_const").get<double>();
  if (j.contains("horizon")) spec.base.horizon = j.at("horizon").get<double>();
  if (j.contains("epsilon")) spec.base.epsilon = j.at("epsilon").get<double>();
  if (j.contains("m_tilde")) spec.m_tilde = j.at("m_tilde").get<double>();
  if (j.contains("w0")) spec.w0 = j.at("w0").get<double>();
  if (j.contains("grid_n")) spec.grid_n = j.at("grid_n").get<std::size_t>();
  if (j.contains("tol")) spec.tol = j.at("tol").get<double>();
  if (j.contains("workers")) spec.workers = j.at("workers").get<int>();
  spec.validate();
  return spec;
}

std::string sweep_spec_to_json_text(const SweepSpec& spec) {
  json j;
  j["variable"] = std::string(to_string(spec.variable));
  j["values"] = spec.values;
  j["c_const"] = spec.base.c_const;
  j["b_const"] = spec.base.b_const;
  j["horizon"] = spec.base.horizon;
  j["epsilon"] = spec.base.epsilon;
  j["m_tilde"] = spec.m_tilde;
  j["w0"] = spec.w0;
  j["grid_n"] = spec.grid_n;
  j["tol"] = spec.tol;
  j["workers"] = spec.workers;
  return j.dump(2) + "\n";
}

}  // namespace lt2d::experiments
