#include "zo_bench/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "zo/bounds.hpp"
#include "zo/metrics.hpp"
#include "zo/trials.hpp"
#include "zo_bench/config.hpp"
#include "zo_bench/csv.hpp"
#include "zo_bench/reference_tables.hpp"

namespace zo::cli {

namespace {

class MomentCheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kResultColumns = {
    "estimator", "n",       "k",         "delta",       "trial",         "error_l2",
    "error_fro", "error_spec", "cosine", "n_evals",     "seed",          "bound_value",
    "c_curve_value", "lg_error", "error_std"};

MethodSpec method_spec(const ExperimentConfig& c, Index k) {
  const auto parsed = parse_method(c.estimator);
  if (!parsed)
    throw ParameterError("unknown estimator '" + c.estimator +
                         "' (expected stiefel, spherical, gaussian, rademacher, comparison, "
                         "entrywise, hess-stiefel, hess-spherical, hess-gaussian, "
                         "hess-entrywise)");
  MethodSpec spec;
  spec.method = *parsed;
  spec.k = k;
  spec.delta = c.delta;
  if (c.sparsity) {
    if (!(*c.sparsity > 0.0)) throw ParameterError("--sparsity must be positive");
    spec.sparsity = *c.sparsity;
  }
  return spec;
}

void check_delta(double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw ParameterError("--delta must be a positive finite number");
}

void check_k(const MethodSpec& spec, Index n) {
  if (!spec.is_random()) return;
  const bool unbounded_k = !spec.is_hessian() &&
                           std::get<GradientMethod>(spec.method) == GradientMethod::comparison;
  const bool gaussian_stein =
      spec.is_hessian() && std::get<HessianMethod>(spec.method) == HessianMethod::gaussian_stein;
  if (spec.k < 1 || (!unbounded_k && !gaussian_stein && spec.k > n))
    throw ParameterError("k=" + std::to_string(spec.k) + " is out of range for n=" +
                         std::to_string(n));
}

bool is_stiefel(const MethodSpec& spec) {
  return spec.is_hessian() ? std::get<HessianMethod>(spec.method) == HessianMethod::stiefel
                           : std::get<GradientMethod>(spec.method) == GradientMethod::stiefel;
}

// Variance bound of the Stiefel estimators, with every L_p set to --lipschitz.
std::optional<double> bound_value(const ExperimentConfig& c, const MethodSpec& spec,
                                  const Objective& f, const Vector& x) {
  if (!c.lipschitz || !is_stiefel(spec)) return std::nullopt;
  bounds::BoundInputs b;
  b.n = f.dimension();
  b.k = spec.k;
  b.delta = spec.delta;
  b.L3 = b.L4 = b.L6 = *c.lipschitz;
  if (spec.is_hessian()) {
    if (!f.has_hessian()) return std::nullopt;
    const Matrix h = f.hessian(x);
    b.hess_fro = h.norm();
    b.hess_spec = spectral_norm(h);
    return bounds::hess_variance_bound(b);
  }
  if (!f.has_gradient()) return std::nullopt;
  b.grad_norm = f.gradient(x).norm();
  return bounds::grad_variance_bound(b);
}

std::optional<double> c_curve_value(const MethodSpec& spec, const Objective& f, const Vector& x) {
  if (!is_stiefel(spec)) return std::nullopt;
  const Index n = f.dimension();
  if (spec.is_hessian()) {
    if (!f.has_hessian()) return std::nullopt;
    const Matrix h = f.hessian(x);
    return bounds::c_curve_hess(n, spec.k, spec.delta, h.norm(), spectral_norm(h));
  }
  if (!f.has_gradient()) return std::nullopt;
  return bounds::c_curve_grad(n, spec.k, spec.delta, f.gradient(x).norm());
}

std::optional<double> lg(double value) {
  if (!(value > 0.0)) return std::nullopt;
  return std::log10(value);
}

void write_aggregate(CsvWriter& csv, const TrialStatistics& s, const MethodSpec& spec,
                     std::optional<double> bound, std::optional<double> curve) {
  const bool hessian = spec.is_hessian();
  auto row = csv.row();
  row.add(s.method).add(s.n).add(s.k).add(s.delta).add(std::string("agg"));
  if (hessian) row.empty().add(s.error.mean).add(s.spectral_error->mean).empty();
  else row.add(s.error.mean).empty().empty().add(s.mean_cosine);
  row.add(s.total_evals).add(s.base_seed).add(bound).add(curve).add(lg(s.error.mean));
  row.add(s.error.std);
  csv.write(row);
}

void write_trials(CsvWriter& csv, const TrialStatistics& s, const MethodSpec& spec) {
  for (const auto& r : s.records) {
    auto row = csv.row();
    row.add(s.method).add(s.n).add(s.k).add(s.delta).add(r.stream);
    if (spec.is_hessian()) row.empty().add(r.error).add(r.spectral).empty();
    else row.add(r.error).empty().empty().add(r.cosine);
    row.add(r.n_evals).add(s.base_seed).empty().empty().add(lg(r.error)).empty();
    csv.write(row);
  }
}

Index single_k(const ExperimentConfig& c, Index n) {
  if (c.k.empty()) return n;
  const auto ks = parse_index_list(c.k);
  if (ks.size() != 1) throw ParameterError("estimate takes a single --k");
  return ks.front();
}

void cmd_estimate(const ExperimentConfig& c, std::ostream& out) {
  const Objective f = make_objective(c);
  const Index n = f.dimension();
  const Vector x = resolve_point(c.x, n);
  const MethodSpec spec = method_spec(c, single_k(c, n));
  check_delta(spec.delta);
  check_k(spec, n);
  const auto stats = run_trials(spec, f, x, c.trials, c.seed);
  CsvWriter csv(out, "zo-results-v1", kResultColumns);
  write_aggregate(csv, stats, spec, bound_value(c, spec, f, x), c_curve_value(spec, f, x));
  write_trials(csv, stats, spec);
}

void cmd_sweep_k(const ExperimentConfig& c, std::ostream& out) {
  check_delta(c.delta);
  const Objective f = make_objective(c);
  const Index n = f.dimension();
  const Vector x = resolve_point(c.x, n);
  const std::vector<Index> grid = c.k.empty() ? default_k_grid(n) : parse_index_list(c.k);
  std::vector<MethodSpec> specs;
  for (Index k : grid) {
    specs.push_back(method_spec(c, k));
    check_k(specs.back(), n);
  }
  CsvWriter csv(out, "zo-results-v1", kResultColumns);
  for (const auto& spec : specs) {
    const auto stats = run_trials(spec, f, x, c.trials, c.seed);
    write_aggregate(csv, stats, spec, bound_value(c, spec, f, x), c_curve_value(spec, f, x));
  }
}

void cmd_table(const ExperimentConfig& c, std::ostream& out) {
  const auto table = find_reference_table(c.table_name);
  if (!table)
    throw ParameterError("unknown table '" + c.table_name + "' (valid: " + reference_table_names() +
                         ")");
  const Objective f = make_exp_sine_function(table->n);
  const Vector x = resolve_point(std::string(table->x), table->n);
  CsvWriter csv(out, "zo-table-v1",
                {"table", "estimator", "n", "x", "delta", "metric", "reproduced",
                 "reproduced_std", "reference", "reference_std", "ratio", "agrees"});
  const std::string metric = table->hessian ? "spectral" : "l2";
  for (int pass = 0; pass < 2; ++pass) {
    const bool stiefel = pass == 0;
    for (std::size_t i = 0; i < table->deltas.size(); ++i) {
      MethodSpec spec;
      if (table->hessian) spec.method = stiefel ? HessianMethod::stiefel : HessianMethod::entrywise;
      else spec.method = stiefel ? GradientMethod::stiefel : GradientMethod::entrywise;
      spec.k = table->n;
      spec.delta = table->deltas[i];
      // the entry-wise estimator is deterministic: one run
      const auto stats = run_trials(spec, f, x, stiefel ? c.trials : 1, c.seed);
      const ErrorSummary& e = table->hessian ? *stats.spectral_error : stats.error;
      const double reference = stiefel ? table->stiefel_mean[i] : table->entrywise[i];
      const double ratio = e.mean / reference;
      const bool agrees = stiefel ? (ratio >= 0.5 && ratio <= 2.0)
                                  : same_two_sig_figs(e.mean, reference);
      auto row = csv.row();
      row.add(std::string(table->name)).add(stats.method).add(table->n);
      row.add(std::string(table->x)).add(spec.delta).add(metric).add(e.mean);
      if (stiefel) row.add(e.std); else row.empty();
      row.add(reference);
      if (stiefel) row.add(table->stiefel_std[i]); else row.empty();
      row.add(ratio).add(std::string(agrees ? "yes" : "no"));
      csv.write(row);
    }
  }
}

struct MomentCheck {
  std::string name;
  double expected;
  double (*statistic)(const Vector&, int);
};

void cmd_moments(const ExperimentConfig& c, std::ostream& out) {
  if (!c.n || *c.n < 2) throw ParameterError("moments needs --n >= 2");
  if (c.p < 2 || c.p % 2 != 0) throw ParameterError("--p must be an even integer >= 2");
  if (c.draws < 2) throw ParameterError("--draws must be at least 2");
  const Index n = *c.n;
  const std::vector<MomentCheck> checks = {
      {"v_i^2", bounds::sphere_even_moment(n, 2),
       [](const Vector& v, int) { return v[0] * v[0]; }},
      {"v_i^p", bounds::sphere_even_moment(n, c.p),
       [](const Vector& v, int p) { return std::pow(v[0], p); }},
      {"v_i^2 v_j^2", bounds::sphere_cross_fourth_moment(n),
       [](const Vector& v, int) { return v[0] * v[0] * v[1] * v[1]; }},
  };
  std::vector<CompensatedSum> sum(checks.size()), sum_sq(checks.size());
  RandomSource rng(c.seed);
  for (std::uint64_t d = 0; d < c.draws; ++d) {
    const Vector v = sample_unit_sphere(n, rng);
    for (std::size_t i = 0; i < checks.size(); ++i) {
      const double s = checks[i].statistic(v, c.p);
      sum[i].add(s);
      sum_sq[i].add(s * s);
    }
  }
  CsvWriter csv(out, "zo-moments-v1",
                {"n", "moment", "p", "draws", "seed", "estimate", "expected", "std_error", "z",
                 "pass"});
  bool all_pass = true;
  const double draws = static_cast<double>(c.draws);
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const double mean = sum[i].value() / draws;
    const double var = std::max(0.0, (sum_sq[i].value() - draws * mean * mean) / (draws - 1));
    const double se = std::sqrt(var / draws);
    const double z = (mean - checks[i].expected) / se;
    const bool pass = std::abs(z) <= 5.0;
    all_pass = all_pass && pass;
    const int p = i == 0 ? 2 : i == 1 ? c.p : 4;
    auto row = csv.row();
    row.add(n).add(checks[i].name).add(p).add(c.draws).add(c.seed).add(mean);
    row.add(checks[i].expected).add(se).add(z).add(std::string(pass ? "yes" : "no"));
    csv.write(row);
  }
  if (!all_pass) throw MomentCheckFailed("moment check failed: |z| > 5");
}

void cmd_zo_gd(const ExperimentConfig& c, std::ostream& out) {
  if (!(c.eta > 0.0) || !std::isfinite(c.eta)) throw ParameterError("--eta must be positive");
  if (c.steps < 1) throw ParameterError("--steps must be at least 1");
  check_delta(c.delta);
  const Objective f = make_objective(c);
  const Index n = f.dimension();
  Vector x = resolve_point(c.x, n);
  const MethodSpec spec = method_spec(c, single_k(c, n));
  if (spec.is_hessian() ||
      std::get<GradientMethod>(spec.method) == GradientMethod::comparison)
    throw ParameterError("zo-gd needs a gradient estimator other than comparison");
  check_k(spec, n);

  CsvWriter csv(out, "zo-trajectory-v1", {"step", "f", "grad_norm", "n_evals", "estimator"});
  std::uint64_t evals = 0;
  auto emit = [&](std::uint64_t step) {
    auto row = csv.row();
    row.add(step).add(f(x));
    if (f.has_gradient()) row.add(f.gradient(x).norm()); else row.empty();
    row.add(evals).add(spec.name());
    csv.write(row);
  };
  emit(0);
  for (std::uint64_t t = 0; t < c.steps; ++t) {
    RandomSource rng(c.seed, t);
    GradientEstimate g;
    switch (std::get<GradientMethod>(spec.method)) {
      case GradientMethod::stiefel: g = grad_stiefel(f, x, spec.k, spec.delta, rng); break;
      case GradientMethod::spherical: g = grad_spherical(f, x, spec.k, spec.delta, rng); break;
      case GradientMethod::gaussian: g = grad_gaussian(f, x, spec.k, spec.delta, rng); break;
      case GradientMethod::rademacher: g = grad_rademacher(f, x, spec.k, spec.delta, rng); break;
      case GradientMethod::entrywise: g = grad_entrywise(f, x, spec.delta); break;
      case GradientMethod::comparison: break;
    }
    x -= c.eta * g.vector;
    evals += g.n_evals;
    emit(t + 1);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  ExperimentConfig c;
  CLI::App app{"Zeroth-order gradient and Hessian estimator benchmarks", "zo_bench"};
  app.set_config("--config", "", "key=value file; command-line flags take precedence");
  app.require_subcommand(1, 1);

  long long n_value = 0;
  double sparsity = 0.0, lipschitz = 0.0;
  auto* n_opt = app.add_option("--n", n_value, "dimension")->check(CLI::PositiveNumber);
  app.add_option("--function", c.function, "exp-sine, linear, quadratic or constant")
      ->capture_default_str();
  app.add_option("--params", c.params, "parameter file for linear/quadratic/constant");
  app.add_option("--k", c.k, "frame size; sweep-k also takes a comma list");
  app.add_option("--delta", c.delta, "finite-difference step")->capture_default_str();
  app.add_option("--x", c.x, "zero, pi4, pi2 or a file with n numbers")->capture_default_str();
  app.add_option("--trials", c.trials, "Monte Carlo trials")->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", c.seed, "base seed")->capture_default_str();
  app.add_option("--estimator", c.estimator, "estimator name")->capture_default_str();
  app.add_option("--out", c.out, "write CSV here instead of stdout");
  app.add_option("--eta", c.eta, "zo-gd step size")->capture_default_str();
  app.add_option("--steps", c.steps, "zo-gd iterations")->capture_default_str();
  app.add_option("--table-name", c.table_name, "t1, t-entry, t-hess1 or t-hess2");
  auto* sparsity_opt = app.add_option("--sparsity", sparsity, "comparison estimator l1 level s");
  app.add_option("--p", c.p, "moments: even power")->capture_default_str();
  app.add_option("--draws", c.draws, "moments: number of sphere draws")->capture_default_str();
  auto* lipschitz_opt =
      app.add_option("--lipschitz", lipschitz, "L_p used for the bound_value column");

  const std::pair<const char*, const char*> subcommands[] = {
      {"estimate", "run one estimator and report aggregate and per-trial errors"},
      {"sweep-k", "aggregate errors over a grid of frame sizes"},
      {"table", "reproduce a reference error table"},
      {"moments", "Monte Carlo check of sphere moments"},
      {"zo-gd", "zeroth-order gradient descent trajectory"},
  };
  for (const auto& [name, description] : subcommands)
    app.add_subcommand(name, description)->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParameterError;
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  if (*n_opt) c.n = static_cast<Index>(n_value);
  if (*sparsity_opt) c.sparsity = sparsity;
  if (*lipschitz_opt) c.lipschitz = lipschitz;

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (c.subcommand == "estimate") cmd_estimate(c, buffer);
    else if (c.subcommand == "sweep-k") cmd_sweep_k(c, buffer);
    else if (c.subcommand == "table") cmd_table(c, buffer);
    else if (c.subcommand == "moments") cmd_moments(c, buffer);
    else cmd_zo_gd(c, buffer);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kParameterError;
  } catch (const MomentCheckFailed& e) {
    // the rows are still written; they show which moment failed
    err << "error: " << e.what() << '\n';
    code = kMomentCheckFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kEvaluationFailure;
  }

  if (c.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(c.out);
    if (!file) {
      err << "error: cannot write '" << c.out << "'\n";
      return kParameterError;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace zo::cli
