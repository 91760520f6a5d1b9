//===- Main.cpp - celltrace command-line driver ---------------------------===//
//
// Part of the celltrace project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// Subcommands:
//   solve <file.cnf> [--learn decision|uip] [--max-conflicts N] [--dot out]
//                    [--print-learned]
//   demo any <bits>
//   demo sudoku <file>
//
// Exit codes follow SAT-competition conventions: 10 satisfiable, 20
// unsatisfiable, 0 for demos and bounded-incomplete runs, 1 for usage or
// input errors.
//
//===----------------------------------------------------------------------===//

#include "celltrace/Demo.h"
#include "celltrace/Solver.h"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace celltrace;

namespace {

std::string readFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string pointerName(CellId id) { return "p" + std::to_string(id.index); }

int runSolve(const std::string &path, const std::string &learn,
             long maxConflicts, const std::string &dotPath, bool printLearned) {
  CnfFormula formula = parseDimacs(readFile(path));

  SolveOptions opts;
  opts.strategy =
      learn == "uip" ? LearnStrategy::FirstUip : LearnStrategy::DecisionCut;
  opts.maxConflicts = maxConflicts;

  std::string lastGraph = "digraph { }\n";
  if (!dotPath.empty())
    opts.onConflict = [&lastGraph](const ConflictInfo &, const DepGraph &g) {
      lastGraph = exportDot(g, pointerName);
    };

  SolverResult result = solve(formula, opts);

  std::cout << "c decisions " << result.stats.decisions << '\n'
            << "c propagations " << result.stats.propagations << '\n'
            << "c conflicts " << result.stats.conflicts << '\n';
  if (printLearned)
    for (const LearnedClause &clause : result.learned) {
      std::cout << "c learned";
      for (int lit : toVarClause(clause, result.varCells))
        std::cout << ' ' << lit;
      std::cout << " 0\n";
    }
  if (!dotPath.empty()) {
    std::ofstream out(dotPath, std::ios::binary);
    if (!out)
      throw std::runtime_error("cannot write '" + dotPath + "'");
    out << lastGraph;
  }

  switch (result.status) {
  case SolveStatus::Satisfiable: {
    std::cout << "s SATISFIABLE\nv";
    for (int v = 1; v <= formula.numVars; ++v)
      std::cout << ' ' << (result.model[static_cast<std::size_t>(v)] ? v : -v);
    std::cout << " 0\n";
    return 10;
  }
  case SolveStatus::Unsatisfiable:
    std::cout << "s UNSATISFIABLE\n";
    return 20;
  case SolveStatus::Unknown:
    std::cout << "s UNKNOWN\n";
    return 0;
  }
  return 1;
}

int runDemoAny(const std::string &bits) {
  std::vector<bool> list;
  list.reserve(bits.size());
  for (char ch : bits) {
    if (ch != '0' && ch != '1')
      throw std::runtime_error("bits must be 0s and 1s, got '" +
                               std::string(1, ch) + "'");
    list.push_back(ch == '1');
  }
  AnyDemoResult result = demoAny(list);
  std::cout << (result.result ? "true" : "false") << '\n'
            << result.reasons << '\n';
  return 0;
}

int runDemoSudoku(const std::string &path) {
  SudokuDemoResult result = demoSudoku(parseSudokuGrid(readFile(path)));
  std::cout << (result.valid ? "valid" : "invalid") << '\n';
  if (!result.valid)
    std::cout << result.reasons << '\n';
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"dependency-tracking cell store with clause learning"};
  app.require_subcommand(1);

  std::string cnfPath;
  std::string learn = "decision";
  long maxConflicts = -1;
  std::string dotPath;
  bool printLearned = false;
  CLI::App *solveCmd = app.add_subcommand("solve", "solve a DIMACS CNF file");
  solveCmd->add_option("file", cnfPath, "DIMACS CNF input")->required();
  solveCmd->add_option("--learn", learn, "conflict analysis cut")
      ->check(CLI::IsMember({"decision", "uip"}));
  solveCmd->add_option("--max-conflicts", maxConflicts,
                       "give up after this many conflicts");
  solveCmd->add_option("--dot", dotPath,
                       "write the last conflict's dependency graph as DOT");
  solveCmd->add_flag("--print-learned", printLearned,
                     "print learned clauses as comments");

  CLI::App *demoCmd = app.add_subcommand("demo", "run the built-in demos");
  demoCmd->require_subcommand(1);
  std::string bits;
  CLI::App *anyCmd =
      demoCmd->add_subcommand("any", "fold 'is any bit set' with reasons");
  anyCmd->add_option("bits", bits, "list of bits, e.g. 010")->required();
  std::string sudokuPath;
  CLI::App *sudokuCmd =
      demoCmd->add_subcommand("sudoku", "check a grid file with reasons");
  sudokuCmd->add_option("file", sudokuPath, "9x9 grid, digits or '.'")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 1;
  }

  try {
    if (solveCmd->parsed())
      return runSolve(cnfPath, learn, maxConflicts, dotPath, printLearned);
    if (anyCmd->parsed())
      return runDemoAny(bits);
    if (sudokuCmd->parsed())
      return runDemoSudoku(sudokuPath);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
