#include "bnpg/complete_solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bnpg/errors.hpp"

namespace bnpg {

namespace {

void require_complete(const BnpgInstance& inst) {
  if (!inst.graph().is_complete())
    throw GraphNotComplete("solver requires a complete graph");
}

void require_k(const BnpgInstance& inst, int k) {
  if (k <= 0 || k >= inst.n())
    throw std::invalid_argument("k must lie strictly between 0 and n");
}

void require_homogeneous(const BnpgInstance& inst) {
  if (detect_homogeneity(inst) == Homogeneity::heterogeneous)
    throw NotHomogeneous("solver requires a homogeneous instance");
}

ActionProfile realize(const KPsneClassification& cls, int n) {
  ActionProfile x(static_cast<std::size_t>(n), 0);
  if (cls.status == KPsneClassification::Status::unique) {
    for (int i : cls.investors) x[static_cast<std::size_t>(i)] = 1;
  } else {
    for (int i : cls.forced) x[static_cast<std::size_t>(i)] = 1;
    for (int idx = 0; idx < cls.required_from_indifferent; ++idx)
      x[static_cast<std::size_t>(cls.indifferent[static_cast<std::size_t>(idx)])] = 1;
  }
  return x;
}

SolveReport psne_report(ActionProfile x, const char* method, std::int64_t iterations) {
  SolveReport r;
  r.status = SolveStatus::psne;
  r.profile = std::move(x);
  r.method = method;
  r.iterations = iterations;
  return r;
}

SolveReport no_psne_report(const char* method, std::int64_t iterations) {
  SolveReport r;
  r.status = SolveStatus::no_psne;
  r.method = method;
  r.iterations = iterations;
  return r;
}

}  // namespace

std::vector<int> iplus(const BnpgInstance& inst, int k) {
  require_complete(inst);
  require_k(inst, k);
  std::vector<int> out;
  for (int i = 0; i < inst.n(); ++i)
    if (inst.cost(i) < inst.externality(i).delta(k)) out.push_back(i);
  return out;
}

std::vector<int> iminus(const BnpgInstance& inst, int k) {
  require_complete(inst);
  require_k(inst, k);
  std::vector<int> out;
  for (int i = 0; i < inst.n(); ++i)
    if (inst.cost(i) > inst.externality(i).delta(k - 1)) out.push_back(i);
  return out;
}

KPsneClassification classify_k_psne(const BnpgInstance& inst, int k) {
  require_complete(inst);
  require_k(inst, k);
  const int n = inst.n();

  KPsneClassification cls;
  cls.k = k;
  cls.status = KPsneClassification::Status::none;

  // A player whose cost falls strictly inside (delta g(k-1), delta g(k))
  // has no best response against k investors on a complete graph: no
  // k-PSNE exists.
  for (int i = 0; i < n; ++i) {
    const double c = inst.cost(i);
    if (inst.externality(i).delta(k - 1) < c && c < inst.externality(i).delta(k))
      return cls;
  }

  const bool homogeneous = detect_homogeneity(inst) != Homogeneity::heterogeneous;
  if (homogeneous) {
    const auto& tab = inst.externality(0);
    if (tab.delta(k) > tab.delta(k - 1)) {
      // Strictly increasing difference at k: the k-PSNE is unique if it
      // exists, with exactly the players of cost <= delta g(k-1) investing.
      std::vector<int> investors;
      for (int i = 0; i < n; ++i)
        if (inst.cost(i) <= tab.delta(k - 1)) investors.push_back(i);
      if (static_cast<int>(investors.size()) != k) return cls;
      cls.status = KPsneClassification::Status::unique;
      cls.investors = std::move(investors);
      return cls;
    }
  }

  std::vector<int> forced = iplus(inst, k);
  std::vector<int> never = iminus(inst, k);
  std::vector<int> indifferent;
  {
    std::vector<char> in_forced(static_cast<std::size_t>(n), 0);
    std::vector<char> in_never(static_cast<std::size_t>(n), 0);
    for (int i : forced) in_forced[static_cast<std::size_t>(i)] = 1;
    for (int i : never) in_never[static_cast<std::size_t>(i)] = 1;
    for (int i = 0; i < n; ++i)
      if (!in_forced[static_cast<std::size_t>(i)] && !in_never[static_cast<std::size_t>(i)])
        indifferent.push_back(i);
  }

  if (static_cast<int>(forced.size()) > k) return cls;
  if (static_cast<int>(never.size()) > n - k) return cls;
  if (static_cast<int>(indifferent.size()) < k - static_cast<int>(forced.size()))
    return cls;

  cls.status = KPsneClassification::Status::family;
  cls.required_from_indifferent = k - static_cast<int>(forced.size());
  cls.forced = std::move(forced);
  cls.indifferent = std::move(indifferent);
  return cls;
}

SolveReport solve_complete(const BnpgInstance& inst) {
  require_complete(inst);
  const int n = inst.n();

  bool all_zeros_ok = true;
  bool all_ones_ok = true;
  for (int i = 0; i < n; ++i) {
    if (inst.cost(i) < inst.externality(i).delta(0)) all_zeros_ok = false;
    if (inst.cost(i) > inst.externality(i).delta(n - 1)) all_ones_ok = false;
  }
  if (all_zeros_ok)
    return psne_report(ActionProfile(static_cast<std::size_t>(n), 0), "complete", 0);
  if (all_ones_ok)
    return psne_report(ActionProfile(static_cast<std::size_t>(n), 1), "complete", 0);

  for (int k = 1; k < n; ++k) {
    const auto cls = classify_k_psne(inst, k);
    if (cls.status != KPsneClassification::Status::none)
      return psne_report(realize(cls, n), "complete", k);
  }
  return no_psne_report("complete", n - 1);
}

SolveReport simple_sort(const BnpgInstance& inst) {
  require_complete(inst);
  require_homogeneous(inst);
  const int n = inst.n();
  const auto& tab = inst.externality(0);

  // Stable ascending-cost order; ties keep player index order.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return inst.cost(a) < inst.cost(b); });

  if (tab.delta(0) < inst.cost(order.front()))
    return psne_report(ActionProfile(static_cast<std::size_t>(n), 0), "simple_sort", n);
  if (inst.cost(order.back()) <= tab.delta(n - 1))
    return psne_report(ActionProfile(static_cast<std::size_t>(n), 1), "simple_sort", n);

  ActionProfile x(static_cast<std::size_t>(n), 0);
  int invested = 0;
  for (int pos = 0; pos < n; ++pos) {
    const int i = order[static_cast<std::size_t>(pos)];
    if (inst.cost(i) > tab.delta(invested)) break;
    x[static_cast<std::size_t>(i)] = 1;
    ++invested;
  }
  return psne_report(std::move(x), "simple_sort", invested);
}

SolveReport socially_optimal_complete(const BnpgInstance& inst) {
  require_complete(inst);
  require_homogeneous(inst);
  const int n = inst.n();
  const auto& tab = inst.externality(0);

  std::optional<ActionProfile> best;
  double best_sw = 0.0;

  auto consider = [&](ActionProfile x) {
    const double sw = social_welfare(inst, x);
    if (!best || sw > best_sw) {
      best = std::move(x);
      best_sw = sw;
    }
  };

  // k sweeps ascending, so equal welfare keeps the smallest k.
  {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (inst.cost(i) < tab.delta(0)) ok = false;
    if (ok) consider(ActionProfile(static_cast<std::size_t>(n), 0));
  }
  for (int k = 1; k < n; ++k) {
    const auto cls = classify_k_psne(inst, k);
    if (cls.status == KPsneClassification::Status::none) continue;
    if (cls.status == KPsneClassification::Status::unique) {
      consider(realize(cls, n));
      continue;
    }
    // Family: welfare n*g(k) - sum of investor costs is maximized by the k
    // cheapest members of V \ I-(k) (which must include all of I+).
    std::vector<int> eligible = cls.forced;
    eligible.insert(eligible.end(), cls.indifferent.begin(), cls.indifferent.end());
    std::stable_sort(eligible.begin(), eligible.end(), [&](int a, int b) {
      if (inst.cost(a) != inst.cost(b)) return inst.cost(a) < inst.cost(b);
      return a < b;
    });
    ActionProfile x(static_cast<std::size_t>(n), 0);
    for (int idx = 0; idx < cls.k; ++idx)
      x[static_cast<std::size_t>(eligible[static_cast<std::size_t>(idx)])] = 1;
    consider(std::move(x));
  }
  {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (inst.cost(i) > tab.delta(n - 1)) ok = false;
    if (ok) consider(ActionProfile(static_cast<std::size_t>(n), 1));
  }

  if (!best) return no_psne_report("socially_optimal_complete", n + 1);
  return psne_report(std::move(*best), "socially_optimal_complete", n + 1);
}

}  // namespace bnpg
