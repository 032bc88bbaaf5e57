#include "bnpg/heuristic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bnpg {

namespace {

void check_params(const HeuristicParams& p) {
  if (p.K < 1) throw std::invalid_argument("K must be at least 1");
  if (p.B < 1) throw std::invalid_argument("B must be at least 1");
  if (!(p.delta > 0.0)) throw std::invalid_argument("delta must be positive");
  if (!(p.p >= 1.0)) throw std::invalid_argument("norm index must be at least 1");
}

double lp_distance(const ActionProfile& a, const ActionProfile& b, double p) {
  int hamming = 0;
  for (std::size_t i = 0; i < a.size(); ++i) hamming += a[i] != b[i];
  return std::pow(static_cast<double>(hamming), 1.0 / p);
}

EvolveResult evolve_impl(const BnpgInstance& inst, ActionProfile x, int K, Rng& rng,
                         bool normalized, const std::vector<double>& ranges) {
  EvolveResult best{x, 0.0, 0};
  bool tracked = false;
  for (int iter = 0; iter < K; ++iter) {
    const double eps = max_epsilon(inst, x, normalized, ranges);
    if (eps == 0.0) return {std::move(x), 0.0, best.sweeps};
    if (!tracked || eps < best.epsilon) {
      best.profile = x;
      best.epsilon = eps;
      tracked = true;
    }
    x = asynchronous_br(inst, std::move(x), rng);
    ++best.sweeps;
  }
  return best;
}

}  // namespace

ActionProfile asynchronous_br(const BnpgInstance& inst, ActionProfile x, Rng& rng) {
  const int n = inst.n();
  for (int i = 0; i < n; ++i) {
    int ni = 0;
    for (int j : inst.graph().neighbors(i)) ni += x[static_cast<std::size_t>(j)];
    const double d = inst.externality(i).delta(ni);
    const double c = inst.cost(i);
    if (d > c)
      x[static_cast<std::size_t>(i)] = 1;
    else if (d < c)
      x[static_cast<std::size_t>(i)] = 0;
    else
      x[static_cast<std::size_t>(i)] = rng.bernoulli(0.5) ? 1 : 0;
  }
  return x;
}

EvolveResult evolve(const BnpgInstance& inst, ActionProfile x, int K, Rng& rng,
                    bool normalized) {
  if (K < 1) throw std::invalid_argument("K must be at least 1");
  const auto ranges = normalized ? utility_ranges(inst) : std::vector<double>{};
  return evolve_impl(inst, std::move(x), K, rng, normalized, ranges);
}

SolveReport find_approx_psne(const BnpgInstance& inst, const HeuristicParams& params) {
  check_params(params);
  const auto ranges = params.normalized ? utility_ranges(inst) : std::vector<double>{};

  SolveReport report;
  report.method = "heuristic";
  report.epsilon_normalized = params.normalized;

  Rng init(derive_seed(params.seed, 0));
  ActionProfile x(static_cast<std::size_t>(inst.n()), 0);
  for (auto& a : x) a = init.bernoulli(0.5) ? 1 : 0;

  if (max_epsilon(inst, x, params.normalized, ranges) == 0.0) {
    report.status = SolveStatus::psne;
    report.profile = std::move(x);
    return report;
  }

  double d = std::numeric_limits<double>::infinity();
  while (d >= params.delta && report.iterations < params.B) {
    ++report.iterations;
    Rng rng(derive_seed(params.seed, static_cast<std::uint64_t>(report.iterations)));
    auto ev = evolve_impl(inst, x, params.K, rng, params.normalized, ranges);
    report.sweeps += ev.sweeps;
    if (ev.epsilon == 0.0) {
      report.status = SolveStatus::psne;
      report.profile = std::move(ev.profile);
      return report;
    }
    d = lp_distance(ev.profile, x, params.p);
    x = std::move(ev.profile);
  }

  report.status = SolveStatus::approx_psne;
  report.epsilon = max_epsilon(inst, x, params.normalized, ranges);
  report.profile = std::move(x);
  return report;
}

}  // namespace bnpg
