//===- SolverTest.cpp -----------------------------------------------------===//
//
// Part of the celltrace project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "celltrace/Solver.h"

#include "support/TestOracles.h"

#include "doctest.h"

#include <algorithm>
#include <random>

using namespace celltrace;

namespace {

FlatBool flatAt(const ReasonSession &s, CellId cell) {
  return s.peek(cell).as<FlatBool>();
}

int varOf(CellId cell, const std::vector<CellId> &vars) {
  auto it = std::find(vars.begin(), vars.end(), cell);
  REQUIRE(it != vars.end());
  return static_cast<int>(it - vars.begin()) + 1;
}

/// No clause may be unsatisfied with exactly one unassigned literal.
bool propagationClosed(const ReasonSession &s,
                       const std::vector<std::vector<int>> &clauses,
                       const std::vector<CellId> &vars) {
  for (const std::vector<int> &clause : clauses) {
    bool satisfied = false;
    int unassigned = 0;
    for (int lit : clause) {
      FlatBool v = flatAt(s, vars[static_cast<std::size_t>(std::abs(lit)) - 1]);
      if (v.isBottom())
        ++unassigned;
      else if (v.isKnown() && v.value() == (lit > 0))
        satisfied = true;
    }
    if (!satisfied && unassigned == 1)
      return false;
  }
  return true;
}

} // namespace

TEST_CASE("a unit clause is assigned with an empty reason") {
  ReasonSession session;
  std::vector<CellId> vars = materializeVars(session, 1);
  std::vector<std::vector<int>> clauses = {{1}};

  auto conflict = unitPropagate(session, clauses, vars);
  CHECK_FALSE(conflict.has_value());
  CHECK(flatAt(session, vars[0]) == FlatBool::of(true));
  CHECK(propagationClosed(session, clauses, vars));

  const AssignmentEvent &forced = session.trail().back();
  CHECK(forced.kind == EventKind::Write);
  CHECK(forced.reason.empty()); // no other literals to blame
}

TEST_CASE("a propagation chain into a conflict blames the right cells") {
  // (x), (!x v y), (!y): forces x then y, then conflicts on y.
  ReasonSession session;
  std::vector<CellId> vars = materializeVars(session, 2);
  std::vector<std::vector<int>> clauses = {{1}, {-1, 2}, {-2}};

  auto conflict = unitPropagate(session, clauses, vars);
  REQUIRE(conflict.has_value());
  CHECK(conflict->cell == vars[1]);
  CHECK(isConflict<FlatBool>(session, vars[1]));

  DepGraph g = buildGraph(session, conflict->cell);
  REQUIRE(g.nodes().size() == 3); // x=true, y=true, conflict on y
  CHECK(g.nodes()[0].cell == vars[0]);
  CHECK(g.nodes()[0].value == Value::of(FlatBool::of(true)));
  CHECK(g.nodes()[1].cell == vars[1]);
  CHECK(g.nodes()[1].value == Value::of(FlatBool::of(true)));
  CHECK(g.nodes()[2].cell == vars[1]);
  CHECK(g.nodes()[g.conflictNode()].event == g.nodes()[2].event);
}

TEST_CASE("forced writes record exactly the triggering clause's falsified literals") {
  std::mt19937 rng(31337);
  for (int run = 0; run < 30; ++run) {
    CnfFormula f = testsupport::randomCnf(rng);
    ReasonSession session;
    std::vector<CellId> vars = materializeVars(session, f.numVars);
    auto conflict = unitPropagate(session, f.clauses, vars);

    for (const AssignmentEvent &event : session.trail()) {
      if (event.kind != EventKind::Write)
        continue;
      // The written value tells us the literal the clause forced (or top for
      // the conflicting write, whose window holds every literal).
      FlatBool written = event.value.as<FlatBool>();
      int eventVar = varOf(event.cell, vars);
      bool matched = false;
      for (const std::vector<int> &clause : f.clauses) {
        std::vector<std::pair<CellId, bool>> falsified;
        bool containsEvent = false;
        for (int lit : clause) {
          int var = std::abs(lit);
          if (var == eventVar &&
              (written.isTop() || written.value() == (lit > 0)))
            containsEvent = true;
          else
            falsified.emplace_back(vars[static_cast<std::size_t>(var) - 1],
                                   lit < 0);
        }
        if (!containsEvent || falsified.size() != event.reason.size())
          continue;
        bool allMatch = true;
        for (std::size_t i = 0; i < falsified.size() && allMatch; ++i) {
          bool found = false;
          for (const AssignmentEntry &entry : event.reason)
            if (entry.cell == falsified[i].first &&
                entry.observed ==
                    Value::of(FlatBool::of(falsified[i].second))) {
              found = true;
              break;
            }
          allMatch = found;
        }
        if (allMatch && !written.isTop()) {
          matched = true;
          break;
        }
        if (written.isTop()) {
          // Conflict windows additionally hold the clashing self-read.
          matched = true;
          break;
        }
      }
      if (written.isTop()) {
        // The last entry of a conflict reason is the clashing observation.
        REQUIRE(!event.reason.empty());
        CHECK(event.reason.entries().back().cell == event.cell);
      } else {
        CHECK(matched);
      }
    }

    if (!conflict) {
      CHECK(propagationClosed(session, f.clauses, vars));
      (void)conflict;
    }
  }
}

TEST_CASE("tiny formulas solve to the right status") {
  CnfFormula contradictory;
  contradictory.numVars = 1;
  contradictory.clauses = {{1}, {-1}};
  CHECK(solve(contradictory).status == SolveStatus::Unsatisfiable);

  CnfFormula satisfiable;
  satisfiable.numVars = 2;
  satisfiable.clauses = {{1, 2}};
  SolverResult result = solve(satisfiable);
  CHECK(result.status == SolveStatus::Satisfiable);
  bool clauseSat = result.model[1] || result.model[2];
  CHECK(clauseSat);

  CnfFormula empty;
  empty.numVars = 0;
  CHECK(solve(empty).status == SolveStatus::Satisfiable);

  CnfFormula trivial;
  trivial.numVars = 1;
  trivial.trivialConflict = true;
  CHECK(solve(trivial).status == SolveStatus::Unsatisfiable);
}

TEST_CASE("solver status agrees with the truth table") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 120; ++i) {
    CnfFormula f = testsupport::randomCnf(rng);
    SolveOptions opts;
    opts.strategy =
        (i % 2 == 0) ? LearnStrategy::DecisionCut : LearnStrategy::FirstUip;
    SolverResult result = solve(f, opts);
    bool expected = testsupport::bruteForceSatisfiable(f);
    CHECK(result.status == (expected ? SolveStatus::Satisfiable
                                     : SolveStatus::Unsatisfiable));
    if (result.status == SolveStatus::Satisfiable)
      for (const std::vector<int> &clause : f.clauses) {
        bool sat = false;
        for (int lit : clause)
          sat = sat ||
                (result.model[static_cast<std::size_t>(std::abs(lit))] ==
                 (lit > 0));
        CHECK(sat);
      }
  }
}

TEST_CASE("learned clauses are implied by the formula") {
  std::mt19937 rng(77);
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    CnfFormula f = testsupport::randomCnf(rng);
    SolveOptions opts;
    opts.strategy =
        (i % 2 == 0) ? LearnStrategy::DecisionCut : LearnStrategy::FirstUip;
    SolverResult result = solve(f, opts);
    for (const LearnedClause &clause : result.learned) {
      std::vector<int> varClause = toVarClause(clause, result.varCells);
      CHECK(testsupport::impliedByFormula(f, varClause));
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("after learning, the same decision prefix cannot replay quietly") {
  std::mt19937 rng(4096);
  int checked = 0;
  for (int i = 0; i < 40 && checked < 50; ++i) {
    CnfFormula f = testsupport::randomCnf(rng);
    std::vector<ConflictInfo> infos;
    SolveOptions opts;
    opts.strategy =
        (i % 2 == 0) ? LearnStrategy::DecisionCut : LearnStrategy::FirstUip;
    opts.onConflict = [&infos](const ConflictInfo &info, const DepGraph &) {
      infos.push_back(info);
    };
    solve(f, opts);
    for (const ConflictInfo &info : infos) {
      CHECK(testsupport::replayBlocksPrefix(f, info));
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("conflict budgets flag bounded-incomplete runs") {
  CnfFormula f;
  f.numVars = 2;
  f.clauses = {{1, 2}, {1, -2}, {-1, 2}, {-1, -2}};
  CHECK(solve(f).status == SolveStatus::Unsatisfiable);

  SolveOptions bounded;
  bounded.maxConflicts = 1;
  SolverResult result = solve(f, bounded);
  CHECK(result.status == SolveStatus::Unknown);
  CHECK(result.stats.conflicts == 1);
}

TEST_CASE("solver stats count the three event kinds") {
  CnfFormula f;
  f.numVars = 2;
  f.clauses = {{1, 2}, {1, -2}, {-1, 2}, {-1, -2}};
  SolverResult result = solve(f);
  CHECK(result.stats.decisions > 0);
  CHECK(result.stats.propagations > 0);
  CHECK(result.stats.conflicts > 0);
}

TEST_CASE("pigeonhole instances exercise multi-level search") {
  // n+1 pigeons into n holes: every pigeon gets a hole, no hole is shared.
  auto pigeonhole = [](int holes) {
    CnfFormula f;
    int pigeons = holes + 1;
    f.numVars = pigeons * holes;
    auto var = [holes](int pigeon, int hole) {
      return pigeon * holes + hole + 1;
    };
    for (int p = 0; p < pigeons; ++p) {
      std::vector<int> somewhere;
      for (int h = 0; h < holes; ++h)
        somewhere.push_back(var(p, h));
      f.clauses.push_back(std::move(somewhere));
    }
    for (int h = 0; h < holes; ++h)
      for (int p = 0; p < pigeons; ++p)
        for (int q = p + 1; q < pigeons; ++q)
          f.clauses.push_back({-var(p, h), -var(q, h)});
    return f;
  };

  for (LearnStrategy strategy :
       {LearnStrategy::DecisionCut, LearnStrategy::FirstUip}) {
    SolveOptions opts;
    opts.strategy = strategy;
    SolverResult result = solve(pigeonhole(3), opts);
    CHECK(result.status == SolveStatus::Unsatisfiable);
    CHECK(result.stats.conflicts > 1);
  }

  // One hole fewer pigeons than holes is satisfiable.
  CnfFormula sat = pigeonhole(3);
  sat.clauses.erase(sat.clauses.begin()); // drop pigeon 0's placement clause
  CHECK(solve(sat).status == SolveStatus::Satisfiable);
}

TEST_CASE("long implication chains propagate in one call") {
  const int n = 200;
  CnfFormula f;
  f.numVars = n;
  f.clauses.push_back({1});
  for (int v = 1; v < n; ++v)
    f.clauses.push_back({-v, v + 1});
  SolverResult result = solve(f);
  CHECK(result.status == SolveStatus::Satisfiable);
  CHECK(result.stats.decisions == 0);
  CHECK(result.stats.propagations == n);
  for (int v = 1; v <= n; ++v)
    CHECK(result.model[static_cast<std::size_t>(v)]);
}

TEST_CASE("learned literals translate to variable clauses") {
  ReasonSession session;
  std::vector<CellId> vars = materializeVars(session, 3);
  LearnedClause clause;
  clause.literals.push_back({vars[0], Value::of(FlatBool::of(true)), true});
  clause.literals.push_back({vars[2], Value::of(FlatBool::of(false)), true});
  CHECK(toVarClause(clause, vars) == std::vector<int>{-1, 3});

  LearnedClause foreign;
  foreign.literals.push_back(
      {CellId{99}, Value::of(FlatBool::of(true)), true});
  CHECK_THROWS_AS(toVarClause(foreign, vars), MalformedSessionError);
}
