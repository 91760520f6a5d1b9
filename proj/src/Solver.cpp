//===- Solver.cpp ---------------------------------------------------------===//
//
// Part of the celltrace project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "celltrace/Solver.h"

#include <algorithm>

namespace celltrace {

namespace {

FlatBool flatAt(const ReasonSession &session, CellId cell) {
  return session.peek(cell).as<FlatBool>();
}

CellId cellOf(int lit, const std::vector<CellId> &varCells) {
  return varCells[static_cast<std::size_t>(lit < 0 ? -lit : lit) - 1];
}

bool polarity(int lit) { return lit > 0; }

std::size_t lastEventOn(const ReasonSession &session, CellId cell) {
  const auto &trail = session.trail();
  for (std::size_t i = trail.size(); i-- > 0;)
    if (trail[i].cell == cell)
      return i;
  throw MalformedSessionError("no assignment event on the conflict cell");
}

/// Reads the falsified literals of `clause` (all but `skipLit`) into the
/// current window, then merges the forced/conflicting value.
MergeOutcome applyClause(ReasonSession &session, const std::vector<int> &clause,
                         int targetLit, const std::vector<CellId> &varCells) {
  session.resetAssignments();
  for (int lit : clause)
    if (lit != targetLit)
      session.read(cellOf(lit, varCells));
  return mergeWrite(session, cellOf(targetLit, varCells),
                    FlatBool::of(polarity(targetLit)));
}

} // namespace

std::vector<CellId> materializeVars(ReasonSession &session, int numVars) {
  std::vector<CellId> cells;
  cells.reserve(static_cast<std::size_t>(numVars));
  for (int v = 0; v < numVars; ++v)
    cells.push_back(session.alloc(Value::of(FlatBool::bottom())));
  return cells;
}

std::optional<PropagationConflict>
unitPropagate(ReasonSession &session,
              const std::vector<std::vector<int>> &clauses,
              const std::vector<CellId> &varCells, SolverStats *stats) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const std::vector<int> &clause : clauses) {
      bool satisfied = false;
      int unassigned = 0;
      int unassignedLit = 0;
      for (int lit : clause) {
        FlatBool v = flatAt(session, cellOf(lit, varCells));
        if (v.isBottom()) {
          ++unassigned;
          unassignedLit = lit;
        } else if (v.isKnown() && v.value() == polarity(lit)) {
          satisfied = true;
          break;
        }
      }
      if (satisfied || unassigned > 1)
        continue;

      if (unassigned == 1) {
        MergeOutcome out = applyClause(session, clause, unassignedLit, varCells);
        (void)out; // the target was unassigned, so the merge grew
        if (stats)
          ++stats->propagations;
        changed = true;
        continue;
      }

      // Fully falsified: merging the first literal's forced value conflicts,
      // and the merge records the clashing observation as part of the reason.
      int target = clause.front();
      MergeOutcome out = applyClause(session, clause, target, varCells);
      CellId cell = cellOf(target, varCells);
      std::size_t event = out == MergeOutcome::Conflict
                              ? session.trail().size() - 1
                              : lastEventOn(session, cell);
      return PropagationConflict{cell, event};
    }
  }
  return std::nullopt;
}

std::vector<int> toVarClause(const LearnedClause &clause,
                             const std::vector<CellId> &varCells) {
  std::vector<int> lits;
  lits.reserve(clause.literals.size());
  for (const Literal &lit : clause.literals) {
    auto it = std::find(varCells.begin(), varCells.end(), lit.cell);
    if (it == varCells.end())
      throw MalformedSessionError("learned literal on a non-variable cell");
    int var = static_cast<int>(it - varCells.begin()) + 1;
    lits.push_back(lit.value.as<FlatBool>().value() ? -var : var);
  }
  return lits;
}

namespace {

/// Dedups literals and drops tautological clauses.
std::vector<std::vector<int>> normalize(const std::vector<std::vector<int>> &in) {
  std::vector<std::vector<int>> out;
  out.reserve(in.size());
  for (const std::vector<int> &clause : in) {
    std::vector<int> lits = clause;
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    bool tautology = false;
    for (int lit : lits)
      if (std::binary_search(lits.begin(), lits.end(), -lit)) {
        tautology = true;
        break;
      }
    if (!tautology)
      out.push_back(std::move(lits));
  }
  return out;
}

int firstUnassigned(const ReasonSession &session,
                    const std::vector<CellId> &varCells) {
  for (std::size_t i = 0; i < varCells.size(); ++i)
    if (flatAt(session, varCells[i]).isBottom())
      return static_cast<int>(i) + 1;
  return 0;
}

bool modelSatisfies(const std::vector<bool> &model,
                    const std::vector<std::vector<int>> &clauses) {
  for (const std::vector<int> &clause : clauses) {
    bool sat = false;
    for (int lit : clause)
      if (model[static_cast<std::size_t>(lit < 0 ? -lit : lit)] ==
          polarity(lit)) {
        sat = true;
        break;
      }
    if (!sat)
      return false;
  }
  return true;
}

} // namespace

SolverResult solve(const CnfFormula &formula, const SolveOptions &opts) {
  SolverResult result;
  if (formula.trivialConflict) {
    result.status = SolveStatus::Unsatisfiable;
    return result;
  }

  ReasonSession session;
  result.varCells = materializeVars(session, formula.numVars);
  const std::vector<CellId> &vars = result.varCells;

  std::vector<std::vector<int>> active = normalize(formula.clauses);
  std::vector<std::vector<int>> activeLearned;
  std::vector<std::pair<int, bool>> decisionPrefix;
  std::vector<ReasonSession> levelState; // state at each level's fixpoint

  while (true) {
    auto conflict = unitPropagate(session, active, vars, &result.stats);
    if (conflict) {
      ++result.stats.conflicts;
      DepGraph graph = buildGraph(session, conflict->cell);
      ConflictAnalysis analysis = analyzeConflict(graph, opts.strategy);
      std::vector<int> varClause = toVarClause(analysis.clause, vars);
      result.learned.push_back(analysis.clause);
      if (opts.onConflict)
        opts.onConflict(ConflictInfo{decisionPrefix, activeLearned, varClause,
                                     analysis.backjumpLevel},
                        graph);

      if (analysis.clause.empty() || session.decisionLevel() == 0) {
        result.status = SolveStatus::Unsatisfiable;
        return result;
      }
      if (opts.maxConflicts >= 0 && result.stats.conflicts >= opts.maxConflicts) {
        result.status = SolveStatus::Unknown;
        return result;
      }

      // Backjump: restore the snapshot taken at the end of the target level,
      // then make the learned clause active. It is asserting there, so the
      // next propagation round flips the deepest contributing decision.
      int target = analysis.backjumpLevel;
      session = levelState[static_cast<std::size_t>(target)];
      decisionPrefix.resize(static_cast<std::size_t>(target));
      levelState.resize(static_cast<std::size_t>(target) + 1);
      activeLearned.push_back(varClause);
      active.push_back(std::move(varClause));
      continue;
    }

    // Propagation fixpoint: snapshot this level, then decide.
    std::size_t level = static_cast<std::size_t>(session.decisionLevel());
    levelState.resize(level + 1, session);
    levelState[level] = session;

    int var = firstUnassigned(session, vars);
    if (var == 0) {
      result.status = SolveStatus::Satisfiable;
      result.model.assign(static_cast<std::size_t>(formula.numVars) + 1, false);
      for (int v = 1; v <= formula.numVars; ++v)
        result.model[static_cast<std::size_t>(v)] =
            flatAt(session, vars[static_cast<std::size_t>(v) - 1]).value();
      if (!modelSatisfies(result.model, formula.clauses))
        throw MalformedSessionError("satisfying model failed verification");
      return result;
    }

    ++result.stats.decisions;
    decisionPrefix.emplace_back(var, true);
    session.writeDecision(cellOf(var, vars), Value::of(FlatBool::of(true)));
  }
}

} // namespace celltrace
