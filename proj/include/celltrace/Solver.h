//===- Solver.h - Clause-learning SAT search over flat-bool cells -*- C++ -*-===//
//
// Part of the celltrace project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// A demonstration DPLL solver with unit propagation and clause learning,
// built entirely on ReasonSession + flat-bool lattice cells. Propagation
// writes carry their triggering reads as reasons, so conflict analysis falls
// out of the dependency graph the session records anyway. Branching and
// backjumping use session snapshots (sessions are plain values).
//
//===----------------------------------------------------------------------===//

#ifndef CELLTRACE_SOLVER_H
#define CELLTRACE_SOLVER_H

#include "celltrace/DepGraph.h"
#include "celltrace/Dimacs.h"
#include "celltrace/Lattice.h"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace celltrace {

enum class SolveStatus { Satisfiable, Unsatisfiable, Unknown };

struct SolverStats {
  long decisions = 0;
  long propagations = 0;
  long conflicts = 0;
};

/// Snapshot of one conflict, for instrumentation: the decision prefix in
/// effect, the learned clauses active before it, and the newly learned
/// clause (both in variable space: signed indices).
struct ConflictInfo {
  std::vector<std::pair<int, bool>> decisions;
  std::vector<std::vector<int>> activeLearned;
  std::vector<int> learnedClause;
  int backjumpLevel = 0;
};

struct SolveOptions {
  LearnStrategy strategy = LearnStrategy::DecisionCut;
  long maxConflicts = -1; ///< < 0 means unlimited
  std::function<void(const ConflictInfo &, const DepGraph &)> onConflict;
};

struct SolverResult {
  SolveStatus status = SolveStatus::Unknown;
  std::vector<bool> model; ///< 1-indexed, valid when Satisfiable
  std::vector<LearnedClause> learned;
  std::vector<CellId> varCells; ///< cell of variable v at varCells[v-1]
  SolverStats stats;
};

/// Allocates one flat-bool cell (unknown) per variable, in variable order.
std::vector<CellId> materializeVars(ReasonSession &session, int numVars);

struct PropagationConflict {
  CellId cell;
  std::size_t event; ///< trail index of the conflicting write
};

/// Repeatedly assigns forced literals until no unit clause remains or a
/// conflict cell appears. Clauses must not repeat variables. Each forced
/// write's reason window holds exactly the reads of the triggering clause's
/// falsified literals; a conflicting write additionally records the clashing
/// cell's observed value.
std::optional<PropagationConflict>
unitPropagate(ReasonSession &session,
              const std::vector<std::vector<int>> &clauses,
              const std::vector<CellId> &varCells,
              SolverStats *stats = nullptr);

/// Translates a learned clause over flat-bool cells into variable space:
/// forbidding (v, true) is the literal -v, forbidding (v, false) is +v.
std::vector<int> toVarClause(const LearnedClause &clause,
                             const std::vector<CellId> &varCells);

SolverResult solve(const CnfFormula &formula, const SolveOptions &opts = {});

} // namespace celltrace

#endif // CELLTRACE_SOLVER_H
