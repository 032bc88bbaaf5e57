#include "bnpg/dispatch.hpp"

#include <stdexcept>

#include "bnpg/complete_solver.hpp"
#include "bnpg/kcore_solver.hpp"
#include "bnpg/tree_solver.hpp"

namespace bnpg {

std::string to_string(Method m) {
  switch (m) {
    case Method::auto_dispatch: return "auto";
    case Method::oracle: return "oracle";
    case Method::complete: return "complete";
    case Method::tree: return "tree";
    case Method::kcore: return "kcore";
    case Method::heuristic: return "heuristic";
  }
  return "auto";
}

std::optional<Method> method_from_string(const std::string& s) {
  if (s == "auto") return Method::auto_dispatch;
  if (s == "oracle") return Method::oracle;
  if (s == "complete") return Method::complete;
  if (s == "tree") return Method::tree;
  if (s == "kcore") return Method::kcore;
  if (s == "heuristic") return Method::heuristic;
  return std::nullopt;
}

Method resolve_method(const BnpgInstance& inst, int oracle_limit) {
  if (inst.graph().is_complete()) return Method::complete;
  if (inst.graph().is_tree()) return Method::tree;
  if (detect_homogeneity(inst) == Homogeneity::fully_homogeneous &&
      check_strict_convexity(inst))
    return Method::kcore;
  if (inst.n() <= oracle_limit) return Method::oracle;
  return Method::heuristic;
}

SolveReport dispatch_solve(const BnpgInstance& inst, Method method,
                           const DispatchOptions& options) {
  if (method == Method::auto_dispatch)
    method = resolve_method(inst, options.oracle_limit);

  switch (method) {
    case Method::oracle: {
      const auto result = oracle_scan(inst, options.oracle_limit);
      SolveReport report;
      report.method = "oracle";
      report.iterations = static_cast<std::int64_t>(std::uint64_t{1} << inst.n());
      if (result.all_psne.empty()) {
        report.status = SolveStatus::no_psne;
      } else {
        report.status = SolveStatus::psne;
        report.profile = result.all_psne.front();
      }
      return report;
    }
    case Method::complete:
      return solve_complete(inst);
    case Method::tree:
      return solve_tree(inst, options.allow_forest);
    case Method::kcore:
      return solve_fully_homogeneous_convex(inst).report;
    case Method::heuristic:
      return find_approx_psne(inst, options.heuristic);
    case Method::auto_dispatch:
      break;
  }
  throw std::logic_error("unresolved solve method");
}

}  // namespace bnpg
