#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bnpg/graph.hpp"

namespace bnpg {

/// Binary action profile; actions[i] is 0 or 1.
using ActionProfile = std::vector<std::uint8_t>;

std::string to_bitstring(const ActionProfile& x);
ActionProfile profile_from_bits(const std::string& bits);
int invest_count(const ActionProfile& x);

enum class Homogeneity { heterogeneous, homogeneous, fully_homogeneous };

std::string to_string(Homogeneity h);
std::optional<Homogeneity> homogeneity_from_string(const std::string& s);

/// Tabulated non-decreasing externality function.
/// values[t] = g(t) for t in 0..deg+1; utility evaluation never needs more.
struct ExternalityTable {
  std::vector<double> values;

  double g(int t) const {
    assert(t >= 0 && t < static_cast<int>(values.size()));
    return values[static_cast<std::size_t>(t)];
  }
  /// Finite difference g(t+1) - g(t); valid for t in 0..deg.
  double delta(int t) const { return g(t + 1) - g(t); }
  /// Largest valid argument of g (= deg+1 for a well-formed table).
  int max_arg() const { return static_cast<int>(values.size()) - 1; }
};

/// A binary networked public-goods game: graph + per-player cost and
/// externality table. Immutable after construction; all operations on it
/// are pure, so instances can be shared across threads freely.
class BnpgInstance {
 public:
  BnpgInstance(Graph graph, std::vector<double> costs,
               std::vector<ExternalityTable> externalities,
               Homogeneity tag = Homogeneity::heterogeneous);

  const Graph& graph() const { return graph_; }
  int n() const { return graph_.size(); }
  double cost(int i) const { return costs_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& costs() const { return costs_; }
  const ExternalityTable& externality(int i) const {
    return externalities_[static_cast<std::size_t>(i)];
  }
  Homogeneity declared_homogeneity() const { return tag_; }

 private:
  Graph graph_;
  std::vector<double> costs_;
  std::vector<ExternalityTable> externalities_;
  Homogeneity tag_;
};

enum class SolveStatus { psne, no_psne, approx_psne };

std::string to_string(SolveStatus s);

/// Outcome of a solver run: a certified PSNE, a certified "no PSNE exists
/// in this class", or the best approximate profile found.
struct SolveReport {
  SolveStatus status = SolveStatus::no_psne;
  std::optional<ActionProfile> profile;  // psne / approx_psne
  double epsilon = 0.0;                  // approx_psne only
  bool epsilon_normalized = false;
  std::string method;
  std::int64_t iterations = 0;
  std::int64_t sweeps = 0;
};

// --- game semantics ------------------------------------------------------

/// Number of i's neighbors investing under x.
int neighbor_invest_count(const BnpgInstance& inst, const ActionProfile& x, int player);

/// U_i(x) = g_i(x_i + n_i) - c_i * x_i.
double utility(const BnpgInstance& inst, const ActionProfile& x, int player);

/// Finite difference of player i's externality at t, 0 <= t <= deg_i.
double delta_g(const BnpgInstance& inst, int player, int t);

/// U_i(1-x_i, n_i) - U_i(x_i, n_i): what i would gain by flipping (may be
/// negative).
double deviation_gain(const BnpgInstance& inst, const ActionProfile& x, int player);

/// True iff player i's current action is a (weak) best response. `tol`
/// relaxes the comparison: gains up to tol count as indifference.
bool is_best_response(const BnpgInstance& inst, const ActionProfile& x, int player,
                      double tol = 0.0);

bool is_psne(const BnpgInstance& inst, const ActionProfile& x, double tol = 0.0);

/// Per-player spread of attainable utilities, max over (x_i, n_i) minus min;
/// the denominator used by normalized epsilon.
std::vector<double> utility_ranges(const BnpgInstance& inst);

/// Largest clamped deviation gain over all players; 0 iff x is a PSNE.
/// When normalized, each player's gain is divided by their utility range
/// (players with zero range contribute 0).
double max_epsilon(const BnpgInstance& inst, const ActionProfile& x, bool normalized);
double max_epsilon(const BnpgInstance& inst, const ActionProfile& x, bool normalized,
                   const std::vector<double>& ranges);

/// Sum of all players' utilities.
double social_welfare(const BnpgInstance& inst, const ActionProfile& x);

/// Check every structural invariant (adjacency symmetry, table lengths,
/// monotonicity, homogeneity tag consistency, finite values). Returns one
/// message per violation, empty when the instance is well-formed. Player
/// and edge ids in messages are 1-indexed.
std::vector<std::string> validate(const BnpgInstance& inst);

/// Strongest homogeneity level actually satisfied by the data (tables
/// compared on their common domain, exact equality).
Homogeneity detect_homogeneity(const BnpgInstance& inst);

}  // namespace bnpg
