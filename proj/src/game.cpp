#include "bnpg/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bnpg {

std::string to_bitstring(const ActionProfile& x) {
  std::string s(x.size(), '0');
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) s[i] = '1';
  return s;
}

ActionProfile profile_from_bits(const std::string& bits) {
  ActionProfile x(bits.size(), 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      x[i] = 1;
    else if (bits[i] != '0')
      throw std::invalid_argument("profile string must contain only 0/1");
  }
  return x;
}

int invest_count(const ActionProfile& x) {
  int k = 0;
  for (auto a : x) k += a;
  return k;
}

std::string to_string(Homogeneity h) {
  switch (h) {
    case Homogeneity::heterogeneous: return "heterogeneous";
    case Homogeneity::homogeneous: return "homogeneous";
    case Homogeneity::fully_homogeneous: return "fully_homogeneous";
  }
  return "heterogeneous";
}

std::optional<Homogeneity> homogeneity_from_string(const std::string& s) {
  if (s == "heterogeneous") return Homogeneity::heterogeneous;
  if (s == "homogeneous") return Homogeneity::homogeneous;
  if (s == "fully_homogeneous") return Homogeneity::fully_homogeneous;
  return std::nullopt;
}

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::psne: return "psne";
    case SolveStatus::no_psne: return "no_psne";
    case SolveStatus::approx_psne: return "approx";
  }
  return "no_psne";
}

BnpgInstance::BnpgInstance(Graph graph, std::vector<double> costs,
                           std::vector<ExternalityTable> externalities, Homogeneity tag)
    : graph_(std::move(graph)),
      costs_(std::move(costs)),
      externalities_(std::move(externalities)),
      tag_(tag) {
  const auto n = static_cast<std::size_t>(graph_.size());
  if (n == 0) throw std::invalid_argument("player count must be positive");
  if (costs_.size() != n)
    throw std::invalid_argument("expected one cost per player");
  if (externalities_.size() != n)
    throw std::invalid_argument("expected one externality table per player");
}

namespace {

void check_player(const BnpgInstance& inst, int player) {
  if (player < 0 || player >= inst.n())
    throw std::out_of_range("player index " + std::to_string(player + 1) +
                            " out of range (n=" + std::to_string(inst.n()) + ")");
}

void check_profile(const BnpgInstance& inst, const ActionProfile& x) {
  if (static_cast<int>(x.size()) != inst.n())
    throw std::invalid_argument("profile length " + std::to_string(x.size()) +
                                " does not match n=" + std::to_string(inst.n()));
}

}  // namespace

int neighbor_invest_count(const BnpgInstance& inst, const ActionProfile& x, int player) {
  check_player(inst, player);
  check_profile(inst, x);
  int count = 0;
  for (int j : inst.graph().neighbors(player)) count += x[static_cast<std::size_t>(j)];
  return count;
}

double utility(const BnpgInstance& inst, const ActionProfile& x, int player) {
  const int ni = neighbor_invest_count(inst, x, player);
  const int xi = x[static_cast<std::size_t>(player)];
  return inst.externality(player).g(xi + ni) - inst.cost(player) * xi;
}

double delta_g(const BnpgInstance& inst, int player, int t) {
  check_player(inst, player);
  if (t < 0 || t > inst.graph().degree(player))
    throw std::out_of_range("delta_g argument " + std::to_string(t) +
                            " out of range for player " + std::to_string(player + 1));
  return inst.externality(player).delta(t);
}

double deviation_gain(const BnpgInstance& inst, const ActionProfile& x, int player) {
  const int ni = neighbor_invest_count(inst, x, player);
  const int xi = x[static_cast<std::size_t>(player)];
  const auto& tab = inst.externality(player);
  const double c = inst.cost(player);
  const double u_keep = tab.g(xi + ni) - c * xi;
  const double u_flip = tab.g((1 - xi) + ni) - c * (1 - xi);
  return u_flip - u_keep;
}

bool is_best_response(const BnpgInstance& inst, const ActionProfile& x, int player,
                      double tol) {
  return deviation_gain(inst, x, player) <= tol;
}

bool is_psne(const BnpgInstance& inst, const ActionProfile& x, double tol) {
  check_profile(inst, x);
  for (int i = 0; i < inst.n(); ++i)
    if (!is_best_response(inst, x, i, tol)) return false;
  return true;
}

std::vector<double> utility_ranges(const BnpgInstance& inst) {
  std::vector<double> ranges(static_cast<std::size_t>(inst.n()), 0.0);
  for (int i = 0; i < inst.n(); ++i) {
    const auto& tab = inst.externality(i);
    const double c = inst.cost(i);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (int ni = 0; ni <= inst.graph().degree(i); ++ni) {
      const double u0 = tab.g(ni);
      const double u1 = tab.g(ni + 1) - c;
      lo = std::min(lo, std::min(u0, u1));
      hi = std::max(hi, std::max(u0, u1));
    }
    ranges[static_cast<std::size_t>(i)] = hi - lo;
  }
  return ranges;
}

double max_epsilon(const BnpgInstance& inst, const ActionProfile& x, bool normalized,
                   const std::vector<double>& ranges) {
  check_profile(inst, x);
  double best = 0.0;
  for (int i = 0; i < inst.n(); ++i) {
    double gain = deviation_gain(inst, x, i);
    if (gain <= 0.0) continue;
    if (normalized) {
      const double r = ranges[static_cast<std::size_t>(i)];
      gain = r > 0.0 ? gain / r : 0.0;
    }
    best = std::max(best, gain);
  }
  return best;
}

double max_epsilon(const BnpgInstance& inst, const ActionProfile& x, bool normalized) {
  if (!normalized) return max_epsilon(inst, x, false, {});
  return max_epsilon(inst, x, true, utility_ranges(inst));
}

double social_welfare(const BnpgInstance& inst, const ActionProfile& x) {
  check_profile(inst, x);
  double sw = 0.0;
  for (int i = 0; i < inst.n(); ++i) sw += utility(inst, x, i);
  return sw;
}

std::vector<std::string> validate(const BnpgInstance& inst) {
  std::vector<std::string> out;
  const auto& g = inst.graph();
  const int n = g.size();

  for (int i = 0; i < n; ++i) {
    const auto& nbrs = g.neighbors(i);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      const int j = nbrs[k];
      if (j < 0 || j >= n) {
        out.push_back("player " + std::to_string(i + 1) + ": neighbor id " +
                      std::to_string(j + 1) + " out of range");
        continue;
      }
      if (j == i)
        out.push_back("player " + std::to_string(i + 1) + ": self-loop");
      if (k > 0 && nbrs[k] == nbrs[k - 1])
        out.push_back("player " + std::to_string(i + 1) + ": duplicate neighbor " +
                      std::to_string(j + 1));
      if (j != i && j >= 0 && j < n && !g.has_edge(j, i))
        out.push_back("edge (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                      "): asymmetric adjacency, " + std::to_string(i + 1) +
                      " not listed as neighbor of " + std::to_string(j + 1));
    }
  }

  for (int i = 0; i < n; ++i) {
    const auto& tab = inst.externality(i).values;
    const int expected = g.degree(i) + 2;
    if (static_cast<int>(tab.size()) != expected) {
      out.push_back("player " + std::to_string(i + 1) + ": externality table length " +
                    std::to_string(tab.size()) + ", expected " + std::to_string(expected));
    }
    for (std::size_t t = 0; t < tab.size(); ++t) {
      if (!std::isfinite(tab[t])) {
        out.push_back("player " + std::to_string(i + 1) +
                      ": non-finite externality value at index " + std::to_string(t));
        break;
      }
    }
    for (std::size_t t = 0; t + 1 < tab.size(); ++t) {
      if (tab[t + 1] < tab[t])
        out.push_back("player " + std::to_string(i + 1) +
                      ": externality table decreases at index " + std::to_string(t + 1));
    }
    if (!std::isfinite(inst.cost(i)))
      out.push_back("player " + std::to_string(i + 1) + ": non-finite cost");
  }

  if (inst.declared_homogeneity() != Homogeneity::heterogeneous) {
    // Agreement with a longest table is equivalent to pairwise agreement on
    // common domains.
    int ref = 0;
    for (int i = 1; i < n; ++i)
      if (inst.externality(i).values.size() > inst.externality(ref).values.size()) ref = i;
    for (int i = 0; i < n; ++i) {
      if (i == ref) continue;
      const auto& a = inst.externality(ref).values;
      const auto& b = inst.externality(i).values;
      const std::size_t common = std::min(a.size(), b.size());
      for (std::size_t t = 0; t < common; ++t) {
        if (a[t] != b[t]) {
          out.push_back("players " + std::to_string(ref + 1) + " and " +
                        std::to_string(i + 1) + ": externality tables differ at index " +
                        std::to_string(t) + " (declared " +
                        to_string(inst.declared_homogeneity()) + ")");
          break;
        }
      }
    }
  }
  if (inst.declared_homogeneity() == Homogeneity::fully_homogeneous) {
    for (int i = 1; i < n; ++i) {
      if (inst.cost(i) != inst.cost(0)) {
        out.push_back("players 1 and " + std::to_string(i + 1) +
                      ": costs differ (declared fully_homogeneous)");
        break;
      }
    }
  }
  return out;
}

Homogeneity detect_homogeneity(const BnpgInstance& inst) {
  const int n = inst.n();
  int ref = 0;
  for (int i = 1; i < n; ++i)
    if (inst.externality(i).values.size() > inst.externality(ref).values.size()) ref = i;
  bool tables_agree = true;
  for (int i = 0; i < n && tables_agree; ++i) {
    const auto& a = inst.externality(ref).values;
    const auto& b = inst.externality(i).values;
    const std::size_t common = std::min(a.size(), b.size());
    for (std::size_t t = 0; t < common; ++t) {
      if (a[t] != b[t]) {
        tables_agree = false;
        break;
      }
    }
  }
  if (!tables_agree) return Homogeneity::heterogeneous;
  for (int i = 1; i < n; ++i)
    if (inst.cost(i) != inst.cost(0)) return Homogeneity::homogeneous;
  return Homogeneity::fully_homogeneous;
}

}  // namespace bnpg
