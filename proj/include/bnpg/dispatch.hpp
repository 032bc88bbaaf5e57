#pragma once

#include <optional>
#include <string>

#include "bnpg/game.hpp"
#include "bnpg/heuristic.hpp"
#include "bnpg/oracle.hpp"

namespace bnpg {

enum class Method { auto_dispatch, oracle, complete, tree, kcore, heuristic };

std::string to_string(Method m);
std::optional<Method> method_from_string(const std::string& s);

/// The solver `auto` picks: complete graph -> complete; tree -> tree;
/// fully homogeneous with strictly convex externality -> kcore; small
/// enough to enumerate -> oracle; otherwise heuristic.
Method resolve_method(const BnpgInstance& inst, int oracle_limit = kDefaultOracleLimit);

struct DispatchOptions {
  HeuristicParams heuristic;
  int oracle_limit = kDefaultOracleLimit;
  bool allow_forest = false;
};

/// Run the chosen solver; Method::auto_dispatch resolves first. The
/// report's `method` names the solver that actually ran.
SolveReport dispatch_solve(const BnpgInstance& inst, Method method,
                           const DispatchOptions& options = {});

}  // namespace bnpg
