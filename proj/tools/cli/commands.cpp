// Copyright 2026 The copierdet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>

#include "copierdet/errors.hpp"
#include "copierdet/information.hpp"

namespace copierdet::cli {

namespace {

struct NamedParameter {
  std::string_view name;
  SweptParameter parameter;
  double lo;
  double hi;
};

constexpr NamedParameter kSweepable[] = {
    {"eps", SweptParameter::kEps, 0.0, 1.0}, {"eta", SweptParameter::kEta, 0.0, 1.0},
    {"xi", SweptParameter::kXi, 0.0, 1.0},   {"mu", SweptParameter::kMu, -1.0, 1.0},
    {"p", SweptParameter::kP, 0.0, 1.0},
};

double parse_double(std::string_view text, std::string_view what) {
  const std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(v)) {
    throw ParameterError("invalid number '" + s + "' for " + std::string(what));
  }
  return v;
}

}  // namespace

SweepSpec SweepSpec::parse(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw ParameterError("--sweep expects <name>=<start>:<stop>:<step>, got '" +
                         std::string(text) + "'");
  }
  const auto name = text.substr(0, eq);
  const NamedParameter* match = nullptr;
  for (const auto& p : kSweepable) {
    if (p.name == name) match = &p;
  }
  if (!match) {
    throw ParameterError("--sweep: unknown parameter '" + std::string(name) +
                         "' (expected one of eps, eta, xi, mu, p)");
  }

  const auto range = text.substr(eq + 1);
  const auto c1 = range.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : range.find(':', c1 + 1);
  if (c2 == std::string_view::npos || range.find(':', c2 + 1) != std::string_view::npos) {
    throw ParameterError("--sweep expects <name>=<start>:<stop>:<step>, got '" +
                         std::string(text) + "'");
  }
  SweepSpec spec;
  spec.parameter = match->parameter;
  spec.start = parse_double(range.substr(0, c1), "--sweep start");
  spec.stop = parse_double(range.substr(c1 + 1, c2 - c1 - 1), "--sweep stop");
  spec.step = parse_double(range.substr(c2 + 1), "--sweep step");
  if (!(spec.step > 0.0)) throw ParameterError("--sweep: step must be positive");
  if (spec.start > spec.stop) throw ParameterError("--sweep: start must not exceed stop");
  if (spec.start < match->lo || spec.stop > match->hi) {
    throw ParameterError("--sweep: " + std::string(name) + " range must lie within [" +
                         format_value(match->lo) + ", " + format_value(match->hi) + "]");
  }
  return spec;
}

std::string_view SweepSpec::name() const noexcept {
  for (const auto& p : kSweepable) {
    if (p.parameter == parameter) return p.name;
  }
  return "?";
}

std::vector<double> SweepSpec::grid() const {
  // Relative slack so that e.g. 0.5 / 0.005 = 99.999... still yields 101 points.
  const double span = (stop - start) / step;
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    double v = start + static_cast<double>(i) * step;
    if (v > stop || std::abs(v - stop) <= 1e-9 * step) v = stop;
    out.push_back(v);
  }
  return out;
}

ModelParams SweepSpec::apply(ModelParams base, double value) const {
  switch (parameter) {
    case SweptParameter::kEps: base.eps = value; break;
    case SweptParameter::kEta: base.eta = value; break;
    case SweptParameter::kXi: base.xi = value; break;
    case SweptParameter::kMu: base.mu = value; break;
    case SweptParameter::kP: base.p = value; break;
  }
  return base;
}

std::vector<int> parse_levels(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const std::string item(text.substr(pos, comma - pos));
    std::size_t used = 0;
    int n = -1;
    try {
      n = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size() || n < 0 || n > kMaxMonteCarloLevels) {
      throw ParameterError("--levels: expected integers in [0, " +
                           std::to_string(kMaxMonteCarloLevels) + "], got '" + item + "'");
    }
    out.push_back(n);
    pos = comma + 1;
  }
  return out;
}

std::string format_value(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", value == 0.0 ? 0.0 : value);
  return buf;
}

EvalReport evaluate(const ModelParams& params, int levels) {
  const auto result =
      evaluate_scheme(SchemeConfig(levels, params.p), params.copier(), params.detector());
  EvalReport report;
  report.mutual_information_bits = result.mutual_information_bits;
  report.effective_efficiency = result.effective_efficiency;
  if (params.xi == 0.0 && params.mu == -1.0) {
    report.closed_form_effective_efficiency =
        closed_form_effective_efficiency(params.eps, params.eta, levels);
  }
  report.improvement_threshold = improvement_threshold(params.eta);
  return report;
}

void write_eval(std::ostream& out, const ModelParams& params, int levels,
                const EvalReport& report) {
  out << "eta: " << format_value(params.eta) << '\n'
      << "xi: " << format_value(params.xi) << '\n'
      << "eps: " << format_value(params.eps) << '\n'
      << "mu: " << format_value(params.mu) << '\n'
      << "levels: " << levels << '\n'
      << "p: " << format_value(params.p) << '\n'
      << "mutual_information_bits: " << format_value(report.mutual_information_bits) << '\n'
      << "eta_e_pipeline: " << format_value(report.effective_efficiency) << '\n';
  if (report.closed_form_effective_efficiency) {
    out << "eta_e_closed_form: " << format_value(*report.closed_form_effective_efficiency)
        << '\n';
  }
  out << "improvement_threshold: " << format_value(report.improvement_threshold) << '\n';
}

void write_sweep_csv(std::ostream& out, const SweepSpec& spec, const ModelParams& base,
                     std::span<const int> levels) {
  for (int n : levels) (void)pattern_count(n);  // reject uncomputable depths before any output

  out << spec.name();
  for (int n : levels) out << ",eta_e_N" << n;
  out << ",limit\n";

  for (double value : spec.grid()) {
    const ModelParams params = spec.apply(base, value);
    const CopierParams copier = params.copier();
    const DetectorParams detector = params.detector();
    out << format_value(value);
    for (int n : levels) {
      const auto r = evaluate_scheme(SchemeConfig(n, params.p), copier, detector);
      out << ',' << format_value(r.effective_efficiency);
    }
    out << ',' << format_value(effective_efficiency_limit(params.eps)) << '\n';
  }
}

SweepSpec fig2_sweep() { return SweepSpec{SweptParameter::kEps, 0.5, 1.0, 0.005}; }

ModelParams fig2_params() { return ModelParams{0.6, 0.0, 1.0, -1.0, 0.5}; }

std::vector<int> fig2_levels() { return {0, 1, 2, 3}; }

MonteCarloReport run_montecarlo(const ModelParams& params, int levels, Symbol input,
                                std::uint64_t trials, std::uint64_t seed, bool compare) {
  if (compare && levels > kMaxExactLevels) {
    throw CapabilityError("exact comparison supports at most " +
                          std::to_string(kMaxExactLevels) +
                          " levels; pass --no-compare to sample deeper trees");
  }
  MonteCarloReport report;
  report.levels = levels;
  report.input = input;
  report.trials = trials;
  report.seed = seed;
  report.empirical =
      monte_carlo_distribution(input, levels, params.copier(), params.detector(), trials, seed);
  if (compare) {
    report.exact = subtree_outcome_distribution(input, levels, params.copier(), params.detector());
    report.tv_distance = total_variation_distance(*report.exact, report.empirical);
    report.tv_bound =
        5.0 * std::sqrt(static_cast<double>(report.exact->size()) / static_cast<double>(trials));
  }
  return report;
}

std::string pattern_string(std::uint64_t pattern, int levels) {
  std::string s;
  for (std::uint64_t k = 0; k < leaf_count(levels); ++k) s += ((pattern >> k) & 1U) ? '1' : '0';
  return s;
}

void write_montecarlo(std::ostream& out, const MonteCarloReport& report) {
  out << "input: " << (report.input == Symbol::kPhoton ? "photon" : "vacuum") << '\n'
      << "levels: " << report.levels << '\n'
      << "trials: " << report.trials << '\n'
      << "seed: " << report.seed << '\n';
  if (report.exact) {
    out << "pattern,exact,empirical\n";
    const auto& exact = *report.exact;
    for (std::uint64_t k = 0; k < exact.size(); ++k) {
      const double emp = report.empirical.probability(k);
      if (exact[k] == 0.0 && emp == 0.0) continue;
      out << pattern_string(k, report.levels) << ',' << format_value(exact[k]) << ','
          << format_value(emp) << '\n';
    }
    out << "tv_distance: " << format_value(report.tv_distance) << '\n'
        << "tv_bound: " << format_value(report.tv_bound) << '\n'
        << "status: " << (report.consistent() ? "consistent" : "INCONSISTENT") << '\n';
  } else {
    out << "pattern,empirical\n";
    for (const auto& [pattern, prob] : report.empirical.probabilities) {
      out << pattern_string(pattern, report.levels) << ',' << format_value(prob) << '\n';
    }
  }
}

namespace {

struct Options {
  ModelParams params;
  std::string levels = "1";
  std::string sweep;
  std::string output = "stdout";
  std::string input = "photon";
  std::uint64_t trials = 100000;
  std::uint64_t seed = 42;
  bool no_compare = false;
};

void add_model_options(CLI::App& cmd, Options& o) {
  cmd.add_option("--eta", o.params.eta, "Detector efficiency")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd.add_option("--xi", o.params.xi, "Dark-count parameter (dark count prob = eta*xi)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd.add_option("--eps", o.params.eps, "Copier success probability")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd.add_option("--mu", o.params.mu, "Copier failure shape (-1 vacuum, 0 mixed, 1 photons)")
      ->check(CLI::Range(-1.0, 1.0))
      ->capture_default_str();
  cmd.add_option("--p", o.params.p, "Prior probability of a photon")
      ->check(CLI::Validator(
          [](std::string& s) -> std::string {
            double v = 0.0;
            if (!CLI::detail::lexical_cast(s, v) || !(v > 0.0 && v < 1.0)) {
              return "Value " + s + " not in open interval (0, 1)";
            }
            return {};
          },
          "in (0, 1)"))
      ->capture_default_str();
}

void add_output_option(CLI::App& cmd, Options& o) {
  cmd.add_option("--output", o.output, "Output path, or 'stdout'")->capture_default_str();
}

int single_level(const Options& o) {
  const auto levels = parse_levels(o.levels);
  if (levels.size() != 1) throw ParameterError("--levels: eval takes exactly one level count");
  return levels.front();
}

template <typename Writer>
int with_output(const std::string& path, std::ostream& out, std::ostream& err, Writer&& write) {
  if (path == "stdout" || path == "-") {
    write(out);
    return kSuccess;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "--output: cannot open '" << path << "' for writing\n";
    return kUsageError;
  }
  write(file);
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Copier-enhanced photodetection: mutual information and effective efficiency",
               "copierdet"};
  app.require_subcommand(1);

  Options o;
  auto* eval = app.add_subcommand("eval", "Evaluate one scheme");
  add_model_options(*eval, o);
  eval->add_option("--levels", o.levels, "Number of copier levels N")->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "Sweep one parameter and write CSV");
  add_model_options(*sweep, o);
  sweep->add_option("--sweep", o.sweep, "<name>=<start>:<stop>:<step>, name in eps,eta,xi,mu,p")
      ->required();
  sweep->add_option("--levels", o.levels, "Comma-separated level counts")
      ->capture_default_str();
  add_output_option(*sweep, o);

  auto* fig2 = app.add_subcommand(
      "fig2", "Effective efficiency vs eps at eta=0.6, N=0..3, plus the large-N limit");
  add_output_option(*fig2, o);

  auto* mc = app.add_subcommand("montecarlo", "Compare sampled and exact pattern distributions");
  add_model_options(*mc, o);
  mc->add_option("--levels", o.levels, "Number of copier levels N")->capture_default_str();
  mc->add_option("--input", o.input, "Input symbol")
      ->check(CLI::IsMember({"photon", "vacuum"}))
      ->capture_default_str();
  mc->add_option("--trials", o.trials, "Number of samples")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  mc->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  mc->add_flag("--no-compare", o.no_compare, "Skip the exact distribution (allows N = 5)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (*eval) {
      const int levels = single_level(o);
      write_eval(out, o.params, levels, evaluate(o.params, levels));
      return kSuccess;
    }
    if (*sweep) {
      const auto spec = SweepSpec::parse(o.sweep);
      const auto levels = parse_levels(o.levels);
      return with_output(o.output, out, err, [&](std::ostream& s) {
        write_sweep_csv(s, spec, o.params, levels);
      });
    }
    if (*fig2) {
      const auto levels = fig2_levels();
      return with_output(o.output, out, err, [&](std::ostream& s) {
        write_sweep_csv(s, fig2_sweep(), fig2_params(), levels);
      });
    }
    if (*mc) {
      const int levels = single_level(o);
      const Symbol input = o.input == "photon" ? Symbol::kPhoton : Symbol::kVacuum;
      const auto report = run_montecarlo(o.params, levels, input, o.trials, o.seed, !o.no_compare);
      write_montecarlo(out, report);
      return report.consistent() ? kSuccess : kMonteCarloMismatch;
    }
  } catch (const ParameterError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const CapabilityError& e) {
    err << "capability error: " << e.what() << '\n';
    return kDomainError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace copierdet::cli
