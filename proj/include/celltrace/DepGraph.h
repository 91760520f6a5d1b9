//===- DepGraph.h - Dependency graphs and conflict analysis ----*- C++ -*-===//
//
// Part of the celltrace project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// The dependency graph of an assignment: nodes are assignment events from a
// session trail, edges run from each event in a reason to the assignment it
// caused. Built by chasing reasons transitively from a conflict; analysis
// derives a learned clause and a backjump level from it.
//
// Trails and reasons are per search branch: a solver that backjumps by
// restoring a session snapshot discards the abandoned branch's events along
// with its assignments. Consumers that want to combine evidence across
// abandoned branches must collect graphs before backjumping (the solver's
// conflict callback is the hook for that).
//
//===----------------------------------------------------------------------===//

#ifndef CELLTRACE_DEPGRAPH_H
#define CELLTRACE_DEPGRAPH_H

#include "celltrace/ReasonStore.h"

#include <cstddef>
#include <string>
#include <vector>

namespace celltrace {

struct DepNode {
  std::size_t event = 0; ///< index into the session trail
  EventKind kind = EventKind::Write;
  CellId cell;
  Value value;
  int level = 0;
  std::vector<std::size_t> parents; ///< node indices of this event's causes
};

/// Reason closure of one conflict event. Nodes are ordered by event index,
/// so every edge goes from an earlier node to a later one.
class DepGraph {
public:
  DepGraph() = default;
  DepGraph(std::vector<DepNode> nodes, std::size_t conflict)
      : nodes_(std::move(nodes)), conflict_(conflict) {}

  const std::vector<DepNode> &nodes() const { return nodes_; }
  bool empty() const { return nodes_.empty(); }

  /// Index of the conflict node within nodes().
  std::size_t conflictNode() const { return conflict_; }

  std::size_t edgeCount() const {
    std::size_t n = 0;
    for (const DepNode &node : nodes_)
      n += node.parents.size();
    return n;
  }

private:
  std::vector<DepNode> nodes_;
  std::size_t conflict_ = 0;
};

/// A (cell, value) pair with a polarity. Learned clauses are disjunctions of
/// forbidden pairs: "not all of these assignments at once".
struct Literal {
  CellId cell;
  Value value;
  bool forbidden = true;

  friend bool operator==(const Literal &, const Literal &) = default;
};

struct LearnedClause {
  std::vector<Literal> literals;

  bool empty() const { return literals.empty(); }
};

enum class LearnStrategy { DecisionCut, FirstUip };

struct ConflictAnalysis {
  LearnedClause clause;
  int backjumpLevel = 0;
};

/// Builds the reason closure rooted at the latest assignment event on
/// `conflictCell`. Throws MalformedSessionError if that cell has no event,
/// or if a recorded reason references a cell with no earlier event.
DepGraph buildGraph(const ReasonSession &session, CellId conflictCell);

/// Derives a learned clause and backjump level. DecisionCut forbids the
/// decisions in the closure; FirstUip resolves back to the first unique
/// implication point of the conflict's level. The backjump level is the
/// second-highest level among the clause's literals (0 for a singleton). An
/// empty clause signals that the conflict does not depend on any decision:
/// the instance is unsatisfiable.
ConflictAnalysis analyzeConflict(const DepGraph &graph,
                                 LearnStrategy strategy = LearnStrategy::DecisionCut);

/// The earliest decision level contributing to the conflict (0 when the
/// closure reaches no decision).
int earliestDecision(const DepGraph &graph);

/// DOT rendering: nodes labeled `<name> = <value> @L<level>`, one edge line
/// per cause. UTF-8, LF line endings.
std::string exportDot(const DepGraph &graph, const CellNamer &namer);

} // namespace celltrace

#endif // CELLTRACE_DEPGRAPH_H
