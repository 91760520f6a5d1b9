//===- DemoTest.cpp -------------------------------------------------------===//
//
// Part of the celltrace project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "celltrace/Demo.h"

#include "support/TestOracles.h"

#include "doctest.h"

#include <algorithm>
#include <random>

using namespace celltrace;

TEST_CASE("the [false,true,false] fold reports its two decisive reads") {
  AnyDemoResult r = demoAny({false, true, false});
  CHECK(r.result == true);
  CHECK(r.reasons == "(p3 = lcons false p2) ^ (p2 = lcons true p1)");
  CHECK(r.cellsRead == 2);
}

TEST_CASE("the empty list is false because of the nil cell alone") {
  AnyDemoResult r = demoAny({});
  CHECK(r.result == false);
  CHECK(r.reasons == "(p0 = nil)");
  CHECK(r.cellsRead == 1);
}

TEST_CASE("a leading true needs exactly one read, whatever the tail") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> len(0, 12);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int run = 0; run < 30; ++run) {
    std::vector<bool> bits{true};
    int tail = len(rng);
    for (int i = 0; i < tail; ++i)
      bits.push_back(coin(rng));
    AnyDemoResult r = demoAny(bits);
    CHECK(r.result == true);
    CHECK(r.cellsRead == 1);
  }
}

TEST_CASE("reads stop at the first true: min(k+1, n+1) cells") {
  for (int n = 0; n <= 6; ++n)
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<bool> bits;
      for (int i = 0; i < n; ++i)
        bits.push_back((mask >> i) & 1u);
      AnyDemoResult r = demoAny(bits);
      std::size_t firstTrue = bits.size();
      for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) {
          firstTrue = i;
          break;
        }
      CHECK(r.result == (firstTrue < bits.size()));
      CHECK(r.cellsRead ==
            std::min(firstTrue + 1, bits.size() + 1));
    }
}

TEST_CASE("grid files parse into digits") {
  SudokuGrid g = parseSudokuGrid(".........\n"
                                 "..5......\n"
                                 ".........\n"
                                 ".........\n"
                                 "..5......\n"
                                 ".........\n"
                                 ".........\n"
                                 ".........\n"
                                 ".........\n");
  CHECK(g.digits[1][2] == 5);
  CHECK(g.digits[4][2] == 5);
  CHECK(g.digits[0][0] == 0);

  CHECK_THROWS_AS(parseSudokuGrid("123\n"), GridParseError);
  CHECK_THROWS_AS(parseSudokuGrid("X........\n.........\n.........\n"
                                  ".........\n.........\n.........\n"
                                  ".........\n.........\n.........\n"),
                  GridParseError);
  CHECK_THROWS_AS(parseSudokuGrid(""), GridParseError);
}

TEST_CASE("an empty grid is valid with an empty reason") {
  SudokuDemoResult r = demoSudoku(SudokuGrid{});
  CHECK(r.valid);
  CHECK(r.reasons.empty());
  CHECK(r.reasonCells.empty());
}

TEST_CASE("the duplicated 5 in column 3 is reported with both cells") {
  SudokuGrid g{};
  g.digits[1][2] = 5; // (2,3) 1-based
  g.digits[4][2] = 5; // (5,3)
  SudokuDemoResult r = demoSudoku(g);
  CHECK_FALSE(r.valid);

  auto contains = [&](int row, int col) {
    return std::find(r.reasonCells.begin(), r.reasonCells.end(),
                     std::make_pair(row, col)) != r.reasonCells.end();
  };
  CHECK(contains(2, 3));
  CHECK(contains(5, 3));
  // The window is the violated constraint's reads only: column 3, scanned
  // top to bottom, stopping at the clash.
  for (const auto &[row, col] : r.reasonCells) {
    CHECK(col == 3);
    CHECK(row <= 5);
  }
  CHECK(r.reasons.find("(sfield at (2 , 3) = 5)") != std::string::npos);
  CHECK(r.reasons.find("(sfield at (5 , 3) = 5)") != std::string::npos);
}

TEST_CASE("a row violation is blamed on that row") {
  SudokuGrid g{};
  g.digits[3][0] = 7;
  g.digits[3][6] = 7;
  SudokuDemoResult r = demoSudoku(g);
  CHECK_FALSE(r.valid);
  for (const auto &[row, col] : r.reasonCells) {
    CHECK(row == 4);
    CHECK(col <= 7);
  }
}

TEST_CASE("a box violation is blamed on that box") {
  SudokuGrid g{};
  g.digits[0][0] = 9;
  g.digits[1][1] = 9;
  SudokuDemoResult r = demoSudoku(g);
  CHECK_FALSE(r.valid);
  // Rows and columns are clean, so the box constraint catches it.
  for (const auto &[row, col] : r.reasonCells) {
    CHECK(row <= 3);
    CHECK(col <= 3);
  }
}

TEST_CASE("validity agrees with the direct checker on random grids") {
  std::mt19937 rng(888);
  int invalidSeen = 0;
  for (int i = 0; i < 100; ++i) {
    SudokuGrid g = testsupport::randomGrid(rng);
    SudokuDemoResult r = demoSudoku(g);
    CHECK(r.valid == testsupport::sudokuValidDirect(g));
    if (!r.valid)
      ++invalidSeen;
  }
  CHECK(invalidSeen > 0); // the sample exercises both outcomes
}
