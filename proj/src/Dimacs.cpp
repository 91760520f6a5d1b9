//===- Dimacs.cpp ---------------------------------------------------------===//
//
// Part of the celltrace project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "celltrace/Dimacs.h"

#include <cctype>
#include <charconv>
#include <sstream>

namespace celltrace {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;

  bool done() const { return pos >= text.size(); }

  char peek() const { return text[pos]; }

  void advance() {
    if (text[pos] == '\n')
      ++line;
    ++pos;
  }

  void skipSpace() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek())))
      advance();
  }

  void skipLine() {
    while (!done() && peek() != '\n')
      advance();
    if (!done())
      advance();
  }
};

int parseInt(Cursor &c) {
  std::size_t end = c.pos;
  if (end < c.text.size() && (c.text[end] == '-' || c.text[end] == '+'))
    ++end;
  while (end < c.text.size() &&
         std::isdigit(static_cast<unsigned char>(c.text[end])))
    ++end;
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(c.text.data() + c.pos, c.text.data() + end, value);
  if (ec != std::errc{} || ptr == c.text.data() + c.pos)
    throw DimacsParseError(c.line, "expected an integer");
  c.pos = static_cast<std::size_t>(ptr - c.text.data());
  return value;
}

} // namespace

CnfFormula parseDimacs(std::string_view text) {
  Cursor c{text};

  // Header, preceded by any number of comments.
  int declaredClauses = -1;
  CnfFormula formula;
  while (true) {
    c.skipSpace();
    if (c.done())
      throw DimacsParseError(c.line, "missing 'p cnf' header");
    if (c.peek() == 'c') {
      c.skipLine();
      continue;
    }
    if (c.peek() != 'p')
      throw DimacsParseError(c.line, "expected 'p cnf' header");
    int headerLine = c.line;
    c.advance();
    c.skipSpace();
    if (c.text.substr(c.pos, 3) != "cnf")
      throw DimacsParseError(headerLine, "expected 'p cnf' header");
    c.pos += 3;
    c.skipSpace();
    formula.numVars = parseInt(c);
    c.skipSpace();
    declaredClauses = parseInt(c);
    if (formula.numVars < 0 || declaredClauses < 0)
      throw DimacsParseError(headerLine, "negative count in header");
    break;
  }

  std::vector<int> clause;
  int parsedClauses = 0;
  while (true) {
    c.skipSpace();
    if (c.done() || c.peek() == '%')
      break;
    if (c.peek() == 'c') {
      c.skipLine();
      continue;
    }
    int literalLine = c.line;
    int lit = parseInt(c);
    if (lit == 0) {
      ++parsedClauses;
      if (clause.empty())
        formula.trivialConflict = true;
      else
        formula.clauses.push_back(std::move(clause));
      clause.clear();
      continue;
    }
    int var = lit < 0 ? -lit : lit;
    if (var > formula.numVars)
      throw DimacsParseError(literalLine,
                             "literal " + std::to_string(lit) +
                                 " out of range for " +
                                 std::to_string(formula.numVars) + " vars");
    clause.push_back(lit);
  }
  if (!clause.empty())
    throw DimacsParseError(c.line, "unterminated clause at end of input");
  if (parsedClauses != declaredClauses)
    throw DimacsParseError(c.line, "header declared " +
                                       std::to_string(declaredClauses) +
                                       " clauses but input has " +
                                       std::to_string(parsedClauses));
  return formula;
}

std::string renderDimacs(const CnfFormula &formula) {
  std::ostringstream out;
  out << "p cnf " << formula.numVars << ' '
      << formula.clauses.size() + (formula.trivialConflict ? 1 : 0) << '\n';
  if (formula.trivialConflict)
    out << "0\n";
  for (const std::vector<int> &clause : formula.clauses) {
    for (int lit : clause)
      out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

} // namespace celltrace
