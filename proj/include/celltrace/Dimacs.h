//===- Dimacs.h - DIMACS CNF input/output ----------------------*- C++ -*-===//
//
// Part of the celltrace project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef CELLTRACE_DIMACS_H
#define CELLTRACE_DIMACS_H

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace celltrace {

/// A CNF over variables 1..numVars; literals are signed indices. Empty
/// clauses are never stored: an empty clause in the input sets
/// trivialConflict instead (the formula is immediately unsatisfiable).
struct CnfFormula {
  int numVars = 0;
  std::vector<std::vector<int>> clauses;
  bool trivialConflict = false;

  friend bool operator==(const CnfFormula &, const CnfFormula &) = default;
};

class DimacsParseError : public std::runtime_error {
public:
  DimacsParseError(int line, const std::string &what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line(line) {}

  int line;
};

/// Parses DIMACS CNF: `c` comment lines, a `p cnf <vars> <clauses>` header,
/// then zero-terminated clauses (possibly spanning lines). A `%` ends the
/// input. Throws DimacsParseError, with the offending line, on a malformed
/// header, an out-of-range index, or a clause-count mismatch.
CnfFormula parseDimacs(std::string_view text);

/// The inverse of parseDimacs for well-formed formulas.
std::string renderDimacs(const CnfFormula &formula);

} // namespace celltrace

#endif // CELLTRACE_DIMACS_H
