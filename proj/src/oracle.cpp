#include "bnpg/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "bnpg/errors.hpp"

namespace bnpg {

namespace {

// Player i's flip gain given its current action and neighbor count.
inline double gain_at(const BnpgInstance& inst, int i, int xi, int ni) {
  const double d = inst.externality(i).delta(ni);
  const double c = inst.cost(i);
  return xi == 0 ? d - c : c - d;
}

}  // namespace

OracleResult oracle_scan(const BnpgInstance& inst, int limit, bool normalized) {
  const int n = inst.n();
  if (n > limit || n > 32)
    throw InstanceTooLarge("n=" + std::to_string(n) + " exceeds enumeration limit " +
                           std::to_string(std::min(limit, 32)));

  const auto ranges = normalized ? utility_ranges(inst) : std::vector<double>{};

  // Counting in mask order with x_i = bit (n-1-i) visits profiles in
  // lexicographic order of (x_1, ..., x_n). Neighbor counts are maintained
  // incrementally: amortized O(1) bit flips per step.
  ActionProfile x(static_cast<std::size_t>(n), 0);
  std::vector<int> ninv(static_cast<std::size_t>(n), 0);

  OracleResult result;
  result.min_epsilon = {x, 0.0};
  bool have_min = false;
  double best_eps = 0.0;
  double best_sw = 0.0;

  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0;; ++mask) {
    double eps = 0.0;
    bool psne = true;
    for (int i = 0; i < n; ++i) {
      double gain = gain_at(inst, i, x[static_cast<std::size_t>(i)],
                            ninv[static_cast<std::size_t>(i)]);
      if (gain > 0.0) {
        psne = false;
        if (normalized) {
          const double r = ranges[static_cast<std::size_t>(i)];
          gain = r > 0.0 ? gain / r : 0.0;
        }
        eps = std::max(eps, gain);
      }
    }

    if (psne) {
      result.all_psne.push_back(x);
      double sw = 0.0;
      for (int i = 0; i < n; ++i)
        sw += inst.externality(i).g(x[static_cast<std::size_t>(i)] +
                                    ninv[static_cast<std::size_t>(i)]) -
              inst.cost(i) * x[static_cast<std::size_t>(i)];
      if (!result.best_welfare || sw > best_sw) {
        result.best_welfare = {x, sw};
        best_sw = sw;
      }
    }
    if (!have_min || eps < best_eps) {
      result.min_epsilon = {x, eps};
      best_eps = eps;
      have_min = true;
    }

    if (mask + 1 == total) break;

    // Flip trailing bits to advance mask -> mask+1; bit b is player n-1-b.
    std::uint64_t next = mask + 1;
    std::uint64_t changed = mask ^ next;
    for (int b = 0; changed; ++b, changed >>= 1) {
      if (!(changed & 1)) continue;
      const int p = n - 1 - b;
      const int delta = x[static_cast<std::size_t>(p)] ? -1 : 1;
      x[static_cast<std::size_t>(p)] ^= 1;
      for (int j : inst.graph().neighbors(p)) ninv[static_cast<std::size_t>(j)] += delta;
    }
  }
  return result;
}

std::vector<ActionProfile> enumerate_psne(const BnpgInstance& inst, int limit) {
  return oracle_scan(inst, limit).all_psne;
}

std::optional<std::pair<ActionProfile, double>> best_psne_welfare(const BnpgInstance& inst,
                                                                  int limit) {
  return oracle_scan(inst, limit).best_welfare;
}

std::pair<ActionProfile, double> min_epsilon_profile(const BnpgInstance& inst, int limit,
                                                     bool normalized) {
  return oracle_scan(inst, limit, normalized).min_epsilon;
}

}  // namespace bnpg
