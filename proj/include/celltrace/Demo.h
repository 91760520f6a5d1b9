//===- Demo.h - Tracked any-fold and Sudoku-validity demos -----*- C++ -*-===//
//
// Part of the celltrace project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef CELLTRACE_DEMO_H
#define CELLTRACE_DEMO_H

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace celltrace {

struct AnyDemoResult {
  bool result = false;
  std::string reasons;        ///< rendered reason of the result cell
  std::size_t cellsRead = 0;  ///< list cells read by the fold
};

/// Distributes the list into cells, runs the short-circuiting any-fold under
/// a reason session, and allocates the result so its reason is exactly the
/// cells the fold visited. Cells are named p0, p1, ... in allocation order.
AnyDemoResult demoAny(const std::vector<bool> &bits);

class GridParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A 9x9 grid, row-major, digits 1..9 with 0 for empty.
struct SudokuGrid {
  std::array<std::array<int, 9>, 9> digits{};
};

/// Nine grid lines of nine entries: digits, with '.' or '0' for empty.
/// Spaces are ignored. Throws GridParseError on anything else.
SudokuGrid parseSudokuGrid(std::string_view text);

struct SudokuDemoResult {
  bool valid = false;
  std::string reasons; ///< rendered reason of the validity cell
  std::vector<std::pair<int, int>> reasonCells; ///< 1-based (row, col) reads
};

/// Checks row/column/box constraints in row-major scan order with one reason
/// window per constraint, short-circuiting on the first violation. When the
/// grid is invalid, the reason is the violated constraint's reads, ending at
/// the clashing pair.
SudokuDemoResult demoSudoku(const SudokuGrid &grid);

} // namespace celltrace

#endif // CELLTRACE_DEMO_H
