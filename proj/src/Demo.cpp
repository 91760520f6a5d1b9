//===- Demo.cpp -----------------------------------------------------------===//
//
// Part of the celltrace project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "celltrace/Demo.h"

#include "celltrace/ListShape.h"
#include "celltrace/ReasonStore.h"

#include <cctype>

namespace celltrace {

AnyDemoResult demoAny(const std::vector<bool> &bits) {
  ReasonSession session;
  CellId root = distribute(session, fixBoolList(bits));
  session.resetAssignments();

  bool result = cellFold<bool>(session, anyListAlgebra(), root);
  std::size_t cellsRead = session.currentAssignments().size();

  CellId resultCell = session.alloc(Value::of(result));
  std::string reasons = renderReasons(session.reasons(resultCell), [](CellId c) {
    return "p" + std::to_string(c.index);
  });
  return AnyDemoResult{result, std::move(reasons), cellsRead};
}

SudokuGrid parseSudokuGrid(std::string_view text) {
  SudokuGrid grid;
  int row = 0, col = 0;
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\r')
      continue;
    if (ch == '\n') {
      if (col == 0)
        continue; // blank line
      if (col != 9)
        throw GridParseError("grid row " + std::to_string(row + 1) + " has " +
                             std::to_string(col) + " entries, expected 9");
      ++row;
      col = 0;
      continue;
    }
    if (row >= 9)
      throw GridParseError("grid has more than 9 rows");
    int digit;
    if (ch == '.' || ch == '0')
      digit = 0;
    else if (ch >= '1' && ch <= '9')
      digit = ch - '0';
    else
      throw GridParseError(std::string("invalid grid character '") + ch + "'");
    grid.digits[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
        digit;
    ++col;
  }
  if (col != 0 && col != 9)
    throw GridParseError("grid row " + std::to_string(row + 1) + " has " +
                         std::to_string(col) + " entries, expected 9");
  if (col == 9)
    ++row;
  if (row != 9)
    throw GridParseError("grid has " + std::to_string(row) +
                         " rows, expected 9");
  return grid;
}

namespace {

std::string sudokuCellName(CellId id) {
  int row = static_cast<int>(id.index) / 9 + 1;
  int col = static_cast<int>(id.index) % 9 + 1;
  return "sfield at (" + std::to_string(row) + " , " + std::to_string(col) +
         ")";
}

} // namespace

SudokuDemoResult demoSudoku(const SudokuGrid &grid) {
  ReasonSession session;
  std::vector<CellId> cells;
  cells.reserve(81);
  for (const auto &row : grid.digits)
    for (int digit : row) {
      if (digit < 0 || digit > 9)
        throw GridParseError("grid digit out of range");
      cells.push_back(session.alloc(Value::of(digit)));
    }

  auto at = [&](int row, int col) {
    return cells[static_cast<std::size_t>(row * 9 + col)];
  };

  // One reason window per constraint group, so the reason for invalidity is
  // the violated constraint's reads only.
  auto groupValid = [&](const std::vector<CellId> &group) {
    session.resetAssignments();
    bool seen[10] = {};
    for (CellId cell : group) {
      int digit = session.read(cell).as<int>();
      if (digit == 0)
        continue;
      if (seen[digit])
        return false;
      seen[digit] = true;
    }
    return true;
  };

  std::vector<std::vector<CellId>> groups;
  for (int r = 0; r < 9; ++r) {
    std::vector<CellId> g;
    for (int c = 0; c < 9; ++c)
      g.push_back(at(r, c));
    groups.push_back(std::move(g));
  }
  for (int c = 0; c < 9; ++c) {
    std::vector<CellId> g;
    for (int r = 0; r < 9; ++r)
      g.push_back(at(r, c));
    groups.push_back(std::move(g));
  }
  for (int br = 0; br < 3; ++br)
    for (int bc = 0; bc < 3; ++bc) {
      std::vector<CellId> g;
      for (int r = br * 3; r < br * 3 + 3; ++r)
        for (int c = bc * 3; c < bc * 3 + 3; ++c)
          g.push_back(at(r, c));
      groups.push_back(std::move(g));
    }

  bool valid = true;
  for (const std::vector<CellId> &group : groups)
    if (!groupValid(group)) {
      valid = false;
      break;
    }
  if (valid)
    session.resetAssignments();

  CellId resultCell = session.alloc(Value::of(valid));
  ReasonLog log = session.reasons(resultCell);

  SudokuDemoResult out;
  out.valid = valid;
  out.reasons = renderReasons(log, sudokuCellName);
  for (const AssignmentEntry &entry : log.reasons().back()) {
    int row = static_cast<int>(entry.cell.index) / 9 + 1;
    int col = static_cast<int>(entry.cell.index) % 9 + 1;
    out.reasonCells.emplace_back(row, col);
  }
  return out;
}

} // namespace celltrace
