#include "bnpg/kcore_solver.hpp"

#include <stdexcept>

#include "bnpg/errors.hpp"

namespace bnpg {

namespace {

const ExternalityTable& shared_table(const BnpgInstance& inst) {
  // Any maximum-degree player's table covers differences up to d_max.
  int ref = 0;
  for (int i = 1; i < inst.n(); ++i)
    if (inst.graph().degree(i) > inst.graph().degree(ref)) ref = i;
  return inst.externality(ref);
}

void require_fully_homogeneous(const BnpgInstance& inst) {
  if (detect_homogeneity(inst) != Homogeneity::fully_homogeneous)
    throw NotHomogeneous("solver requires a fully homogeneous instance");
}

}  // namespace

bool check_strict_convexity(const BnpgInstance& inst) {
  require_fully_homogeneous(inst);
  const auto& tab = shared_table(inst);
  const int d_max = inst.graph().max_degree();
  for (int t = 0; t < d_max; ++t)
    if (tab.delta(t + 1) <= tab.delta(t)) return false;
  return true;
}

CoreThreshold threshold_k(const BnpgInstance& inst) {
  if (!check_strict_convexity(inst))
    throw NotStrictlyConvex("externality differences are not strictly increasing");
  const auto& tab = shared_table(inst);
  const int d_max = inst.graph().max_degree();
  const double c = inst.cost(0);

  CoreThreshold th;
  if (c < tab.delta(0)) {
    th.kind = CoreThreshold::Kind::all_invest;
    return th;
  }
  if (c > tab.delta(d_max)) {
    th.kind = CoreThreshold::Kind::none_invest;
    return th;
  }
  th.kind = CoreThreshold::Kind::threshold;
  for (int t = 0; t <= d_max; ++t) {
    if (tab.delta(t) >= c) {
      th.k = t;
      break;
    }
  }
  return th;
}

std::vector<int> k_core(const Graph& graph, int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  const int n = graph.size();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::vector<int> worklist;
  for (int i = 0; i < n; ++i) {
    deg[static_cast<std::size_t>(i)] = graph.degree(i);
    if (deg[static_cast<std::size_t>(i)] < k) {
      removed[static_cast<std::size_t>(i)] = 1;
      worklist.push_back(i);
    }
  }
  while (!worklist.empty()) {
    const int v = worklist.back();
    worklist.pop_back();
    for (int w : graph.neighbors(v)) {
      if (removed[static_cast<std::size_t>(w)]) continue;
      if (--deg[static_cast<std::size_t>(w)] < k) {
        removed[static_cast<std::size_t>(w)] = 1;
        worklist.push_back(w);
      }
    }
  }
  std::vector<int> core;
  for (int i = 0; i < n; ++i)
    if (!removed[static_cast<std::size_t>(i)]) core.push_back(i);
  return core;
}

KcoreSolveResult solve_fully_homogeneous_convex(const BnpgInstance& inst) {
  const auto th = threshold_k(inst);
  const int n = inst.n();

  KcoreSolveResult result;
  result.report.method = "kcore";

  auto certify = [&](ActionProfile x) { result.inventory.push_back(std::move(x)); };

  switch (th.kind) {
    case CoreThreshold::Kind::all_invest:
      certify(ActionProfile(static_cast<std::size_t>(n), 1));
      break;
    case CoreThreshold::Kind::none_invest:
      certify(ActionProfile(static_cast<std::size_t>(n), 0));
      break;
    case CoreThreshold::Kind::threshold: {
      certify(ActionProfile(static_cast<std::size_t>(n), 0));
      const auto core = k_core(inst.graph(), th.k);
      if (!core.empty()) {
        ActionProfile x(static_cast<std::size_t>(n), 0);
        for (int i : core) x[static_cast<std::size_t>(i)] = 1;
        certify(std::move(x));
      }
      result.report.iterations = th.k;
      break;
    }
  }

  // Report the non-trivial PSNE when there is one.
  const ActionProfile* chosen = &result.inventory.front();
  for (const auto& x : result.inventory) {
    const int k = invest_count(x);
    if (k > 0 && k < n) {
      chosen = &x;
      break;
    }
  }
  result.report.status = SolveStatus::psne;
  result.report.profile = *chosen;
  return result;
}

}  // namespace bnpg
