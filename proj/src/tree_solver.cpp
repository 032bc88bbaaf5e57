#include "bnpg/tree_solver.hpp"

#include <stdexcept>

#include "bnpg/errors.hpp"

namespace bnpg {

TreeDecomposition root_and_order(const Graph& graph, bool allow_forest) {
  const int n = graph.size();
  TreeDecomposition d;
  d.parent.assign(static_cast<std::size_t>(n), -1);
  d.children.assign(static_cast<std::size_t>(n), {});
  d.preorder.reserve(static_cast<std::size_t>(n));

  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (visited[static_cast<std::size_t>(s)]) continue;
    if (!d.roots.empty() && !allow_forest)
      throw NotATree("graph is disconnected");
    d.roots.push_back(s);
    visited[static_cast<std::size_t>(s)] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      d.preorder.push_back(v);
      auto& kids = d.children[static_cast<std::size_t>(v)];
      for (int w : graph.neighbors(v)) {
        if (w == d.parent[static_cast<std::size_t>(v)]) continue;
        if (visited[static_cast<std::size_t>(w)])
          throw NotATree("graph contains a cycle");
        visited[static_cast<std::size_t>(w)] = 1;
        d.parent[static_cast<std::size_t>(w)] = v;
        kids.push_back(w);  // neighbors are sorted, so children stay ascending
      }
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
  }
  return d;
}

namespace {

// Feasible range [lo, hi] of investing-children counts for node v playing
// `own`, from the children's tables; infeasible when hi < lo or a child
// offers nothing under that action of v.
struct ChildRange {
  int lo = 0;
  int hi = 0;
  bool feasible = true;
};

ChildRange child_range(const TreeDecomposition& decomp, const DownstreamTables& tables,
                       int v, int own) {
  const auto& kids = decomp.children[static_cast<std::size_t>(v)];
  ChildRange r;
  r.hi = static_cast<int>(kids.size());
  for (int c : kids) {
    const auto& t = tables.node[static_cast<std::size_t>(c)];
    const bool can0 = t.offers(own, 0);
    const bool can1 = t.offers(own, 1);
    if (!can0 && !can1) {
      r.feasible = false;
      return r;
    }
    if (can1 && !can0) ++r.lo;  // forced to invest
    if (can0 && !can1) --r.hi;  // forced to stay out
  }
  r.feasible = r.lo <= r.hi;
  return r;
}

// Smallest t in [lo, hi] whose condition holds: investing needs
// delta g(t + parent) >= c, staying out needs <= c. Differences are not
// monotone in general, so scan.
std::optional<int> scan_witness(const BnpgInstance& inst, int v, int own, int parent_action,
                                const ChildRange& range) {
  if (!range.feasible) return std::nullopt;
  const auto& tab = inst.externality(v);
  const double c = inst.cost(v);
  for (int t = range.lo; t <= range.hi; ++t) {
    const double d = tab.delta(t + parent_action);
    if (own == 1 ? d >= c : d <= c) return t;
  }
  return std::nullopt;
}

}  // namespace

std::optional<DownstreamTables> downstream_pass(const BnpgInstance& inst,
                                                const TreeDecomposition& decomp) {
  const int n = inst.n();
  DownstreamTables tables;
  tables.node.assign(static_cast<std::size_t>(n), {});
  tables.root.assign(decomp.roots.size(), {});

  std::vector<int> root_slot(static_cast<std::size_t>(n), -1);
  for (std::size_t s = 0; s < decomp.roots.size(); ++s)
    root_slot[static_cast<std::size_t>(decomp.roots[s])] = static_cast<int>(s);

  // Children before parents.
  for (auto it = decomp.preorder.rbegin(); it != decomp.preorder.rend(); ++it) {
    const int v = *it;
    const ChildRange range0 = child_range(decomp, tables, v, 0);
    const ChildRange range1 = child_range(decomp, tables, v, 1);

    if (decomp.parent[static_cast<std::size_t>(v)] == -1) {
      auto& entry = tables.root[static_cast<std::size_t>(root_slot[static_cast<std::size_t>(v)])];
      entry[0] = scan_witness(inst, v, 0, 0, range0);
      entry[1] = scan_witness(inst, v, 1, 0, range1);
      if (!entry[0] && !entry[1]) return std::nullopt;
    } else {
      auto& t = tables.node[static_cast<std::size_t>(v)];
      for (int pa = 0; pa < 2; ++pa) {
        t.witness[static_cast<std::size_t>(pa)][0] = scan_witness(inst, v, 0, pa, range0);
        t.witness[static_cast<std::size_t>(pa)][1] = scan_witness(inst, v, 1, pa, range1);
      }
      if (t.empty()) return std::nullopt;
    }
  }
  return tables;
}

ActionProfile upstream_pass(const BnpgInstance& inst, const TreeDecomposition& decomp,
                            const DownstreamTables& tables) {
  const int n = inst.n();
  ActionProfile x(static_cast<std::size_t>(n), 0);
  std::vector<int> investing_children(static_cast<std::size_t>(n), 0);

  for (std::size_t s = 0; s < decomp.roots.size(); ++s) {
    const int r = decomp.roots[s];
    const auto& entry = tables.root[s];
    const int action = entry[0] ? 0 : 1;
    if (!entry[static_cast<std::size_t>(action)])
      throw std::logic_error("root table has no feasible action");
    x[static_cast<std::size_t>(r)] = static_cast<std::uint8_t>(action);
    investing_children[static_cast<std::size_t>(r)] = *entry[static_cast<std::size_t>(action)];
  }

  // Parents first: each node hands its children their actions so that the
  // investing count matches its stored witness.
  for (int v : decomp.preorder) {
    const int own = x[static_cast<std::size_t>(v)];
    int fill = investing_children[static_cast<std::size_t>(v)];
    const auto& kids = decomp.children[static_cast<std::size_t>(v)];
    // Forced investors are part of the witness count.
    for (int c : kids) {
      const auto& t = tables.node[static_cast<std::size_t>(c)];
      if (t.offers(own, 1) && !t.offers(own, 0)) --fill;
    }
    if (fill < 0) throw std::logic_error("witness below forced investor count");
    for (int c : kids) {
      const auto& t = tables.node[static_cast<std::size_t>(c)];
      const bool can0 = t.offers(own, 0);
      const bool can1 = t.offers(own, 1);
      if (!can0 && !can1) throw std::logic_error("child table missing required entry");
      int action;
      if (can1 && !can0) {
        action = 1;
      } else if (can0 && !can1) {
        action = 0;
      } else if (fill > 0) {
        action = 1;
        --fill;
      } else {
        action = 0;
      }
      x[static_cast<std::size_t>(c)] = static_cast<std::uint8_t>(action);
      investing_children[static_cast<std::size_t>(c)] =
          *t.witness[static_cast<std::size_t>(own)][static_cast<std::size_t>(action)];
    }
    if (fill != 0) throw std::logic_error("witness exceeds feasible investor count");
  }
  return x;
}

SolveReport solve_tree(const BnpgInstance& inst, bool allow_forest) {
  const auto decomp = root_and_order(inst.graph(), allow_forest);

  SolveReport report;
  report.method = "tree";
  report.iterations = inst.n();

  const auto tables = downstream_pass(inst, decomp);
  if (!tables) {
    report.status = SolveStatus::no_psne;
    return report;
  }
  report.status = SolveStatus::psne;
  report.profile = upstream_pass(inst, decomp, *tables);
  return report;
}

}  // namespace bnpg
