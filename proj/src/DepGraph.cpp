//===- DepGraph.cpp -------------------------------------------------------===//
//
// Part of the celltrace project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "celltrace/DepGraph.h"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace celltrace {

namespace {

/// Latest event on `cell` strictly before trail index `before`, or npos.
std::size_t latestEventOn(const std::vector<std::size_t> &events,
                          std::size_t before) {
  auto it = std::lower_bound(events.begin(), events.end(), before);
  if (it == events.begin())
    return static_cast<std::size_t>(-1);
  return *std::prev(it);
}

} // namespace

DepGraph buildGraph(const ReasonSession &session, CellId conflictCell) {
  const std::vector<AssignmentEvent> &trail = session.trail();

  std::unordered_map<CellId, std::vector<std::size_t>> eventsByCell;
  for (const AssignmentEvent &e : trail)
    eventsByCell[e.cell].push_back(e.index);

  auto rootIt = eventsByCell.find(conflictCell);
  if (rootIt == eventsByCell.end())
    throw MalformedSessionError("conflict cell has no assignment event");
  std::size_t root = rootIt->second.back();

  // Chase reasons transitively. Every edge goes to a strictly earlier event,
  // so the walk terminates and the graph is acyclic by construction.
  std::map<std::size_t, std::vector<std::size_t>> parentsOf; // event -> causes
  std::vector<std::size_t> pending{root};
  std::unordered_set<std::size_t> visited{root};
  while (!pending.empty()) {
    std::size_t at = pending.back();
    pending.pop_back();
    const AssignmentEvent &event = trail[at];
    std::vector<std::size_t> &parents = parentsOf[at];
    for (const AssignmentEntry &entry : event.reason) {
      auto it = eventsByCell.find(entry.cell);
      std::size_t cause = it == eventsByCell.end()
                              ? static_cast<std::size_t>(-1)
                              : latestEventOn(it->second, at);
      if (cause == static_cast<std::size_t>(-1))
        throw MalformedSessionError(
            "reason references cell " + std::to_string(entry.cell.index) +
            " with no assignment event before event " + std::to_string(at));
      if (std::find(parents.begin(), parents.end(), cause) == parents.end())
        parents.push_back(cause);
      if (visited.insert(cause).second)
        pending.push_back(cause);
    }
    std::sort(parents.begin(), parents.end());
  }

  // parentsOf is keyed in ascending event order; emit nodes in that order.
  std::unordered_map<std::size_t, std::size_t> nodeOf;
  std::vector<DepNode> nodes;
  nodes.reserve(parentsOf.size());
  for (const auto &[event, parents] : parentsOf) {
    nodeOf[event] = nodes.size();
    const AssignmentEvent &e = trail[event];
    nodes.push_back(DepNode{e.index, e.kind, e.cell, e.value, e.level, {}});
  }
  for (const auto &[event, parents] : parentsOf) {
    DepNode &node = nodes[nodeOf[event]];
    node.parents.reserve(parents.size());
    for (std::size_t p : parents)
      node.parents.push_back(nodeOf[p]);
  }

  return DepGraph(std::move(nodes), nodeOf[root]);
}

namespace {

/// Second-highest level among the literal levels, 0 for fewer than two.
int backjumpFrom(std::vector<int> levels) {
  if (levels.size() < 2)
    return 0;
  std::sort(levels.begin(), levels.end(), std::greater<int>());
  return levels[1];
}

void addLiteral(std::vector<Literal> &lits, std::vector<int> &levels,
                const DepNode &node) {
  Literal lit{node.cell, node.value, true};
  for (const Literal &seen : lits)
    if (seen == lit)
      return;
  lits.push_back(std::move(lit));
  levels.push_back(node.level);
}

ConflictAnalysis analyzeDecisionCut(const DepGraph &graph) {
  std::vector<Literal> lits;
  std::vector<int> levels;
  for (const DepNode &node : graph.nodes())
    if (node.kind == EventKind::Decision)
      addLiteral(lits, levels, node);
  return ConflictAnalysis{LearnedClause{std::move(lits)},
                          backjumpFrom(std::move(levels))};
}

ConflictAnalysis analyzeFirstUip(const DepGraph &graph) {
  const std::vector<DepNode> &nodes = graph.nodes();
  const std::size_t conflict = graph.conflictNode();
  const int conflictLevel = nodes[conflict].level;
  if (conflictLevel == 0)
    return ConflictAnalysis{LearnedClause{}, 0};

  std::vector<Literal> lits;
  std::vector<int> levels;
  std::vector<bool> seen(nodes.size(), false);
  int open = 0; // seen-but-unresolved nodes at the conflict level

  auto expand = [&](std::size_t n) {
    for (std::size_t p : nodes[n].parents) {
      if (seen[p])
        continue;
      seen[p] = true;
      if (nodes[p].level == conflictLevel)
        ++open;
      else if (nodes[p].level > 0)
        addLiteral(lits, levels, nodes[p]);
    }
  };

  expand(conflict);
  // Nodes are in ascending event order; resolve the most recent seen node at
  // the conflict level until a single one remains: the first UIP.
  std::size_t at = conflict;
  while (open > 0) {
    while (at > 0 && !(seen[at - 1] && nodes[at - 1].level == conflictLevel))
      --at;
    --at; // nodes[at] is the most recent unresolved conflict-level node
    --open;
    if (open == 0) {
      addLiteral(lits, levels, nodes[at]);
      break;
    }
    expand(at);
  }

  return ConflictAnalysis{LearnedClause{std::move(lits)},
                          backjumpFrom(std::move(levels))};
}

} // namespace

ConflictAnalysis analyzeConflict(const DepGraph &graph, LearnStrategy strategy) {
  return strategy == LearnStrategy::DecisionCut ? analyzeDecisionCut(graph)
                                                : analyzeFirstUip(graph);
}

int earliestDecision(const DepGraph &graph) {
  int earliest = 0;
  bool any = false;
  for (const DepNode &node : graph.nodes())
    if (node.kind == EventKind::Decision && (!any || node.level < earliest)) {
      earliest = node.level;
      any = true;
    }
  return earliest;
}

namespace {

std::string escapeLabel(const std::string &s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out;
}

} // namespace

std::string exportDot(const DepGraph &graph, const CellNamer &namer) {
  if (graph.empty())
    return "digraph { }\n";
  std::string out = "digraph {\n";
  for (const DepNode &node : graph.nodes()) {
    std::string label = namer(node.cell) + " = " + node.value.render(namer) +
                        " @L" + std::to_string(node.level);
    out += "  n" + std::to_string(node.event) + " [label=\"" +
           escapeLabel(label) + "\"];\n";
  }
  for (const DepNode &node : graph.nodes())
    for (std::size_t p : node.parents)
      out += "  n" + std::to_string(graph.nodes()[p].event) + " -> n" +
             std::to_string(node.event) + ";\n";
  out += "}\n";
  return out;
}

} // namespace celltrace
