//===- DimacsTest.cpp -----------------------------------------------------===//
//
// Part of the celltrace project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "celltrace/Dimacs.h"

#include "support/TestOracles.h"

#include "doctest.h"

#include <random>

using namespace celltrace;

TEST_CASE("minimal formulas parse") {
  CnfFormula one = parseDimacs("p cnf 1 1\n1 0\n");
  CHECK(one.numVars == 1);
  REQUIRE(one.clauses.size() == 1);
  CHECK(one.clauses[0] == std::vector<int>{1});

  CnfFormula two = parseDimacs("p cnf 2 2\n1 2 0\n-1 0\n");
  CHECK(two.numVars == 2);
  REQUIRE(two.clauses.size() == 2);
  CHECK(two.clauses[0] == std::vector<int>{1, 2});
  CHECK(two.clauses[1] == std::vector<int>{-1});
}

TEST_CASE("comments, odd spacing and clause spanning are tolerated") {
  CnfFormula f = parseDimacs("c a comment\nc another\n"
                             "p cnf 3 2\n"
                             "1 -2\n3 0\n"
                             "c inline comment\n"
                             "  -3   1  0\n");
  CHECK(f.numVars == 3);
  REQUIRE(f.clauses.size() == 2);
  CHECK(f.clauses[0] == std::vector<int>{1, -2, 3});
  CHECK(f.clauses[1] == std::vector<int>{-3, 1});
}

TEST_CASE("the SATLIB percent terminator ends the input") {
  CnfFormula f = parseDimacs("p cnf 1 1\n1 0\n%\n0\n");
  CHECK(f.clauses.size() == 1);
}

TEST_CASE("an empty clause makes the formula trivially unsatisfiable") {
  CnfFormula f = parseDimacs("p cnf 2 2\n1 2 0\n0\n");
  CHECK(f.trivialConflict);
  CHECK(f.clauses.size() == 1);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parseDimacs(""), DimacsParseError);
  CHECK_THROWS_AS(parseDimacs("p dnf 1 1\n1 0\n"), DimacsParseError);
  CHECK_THROWS_AS(parseDimacs("1 0\n"), DimacsParseError);

  try {
    parseDimacs("p cnf 2 1\nc fine\n1 3 0\n");
    FAIL("expected out-of-range error");
  } catch (const DimacsParseError &e) {
    CHECK(e.line == 3);
  }

  try {
    parseDimacs("p cnf 2 3\n1 0\n-2 0\n");
    FAIL("expected count mismatch");
  } catch (const DimacsParseError &e) {
    CHECK(e.line == 4);
  }

  CHECK_THROWS_AS(parseDimacs("p cnf 2 1\n1 2\n"), DimacsParseError);
}

TEST_CASE("parse inverts render on generated formulas") {
  std::mt19937 rng(4242);
  for (int i = 0; i < 200; ++i) {
    CnfFormula f = testsupport::randomCnf(rng);
    CHECK(parseDimacs(renderDimacs(f)) == f);
  }
}
