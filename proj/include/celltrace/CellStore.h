//===- CellStore.h - Typed cell store with dense ids -----------*- C++ -*-===//
//
// Part of the celltrace project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef CELLTRACE_CELLSTORE_H
#define CELLTRACE_CELLSTORE_H

#include "celltrace/CellId.h"
#include "celltrace/Errors.h"
#include "celltrace/Value.h"

#include <concepts>
#include <cstddef>
#include <utility>
#include <vector>

namespace celltrace {

/// Anything with the three basic cell operations: stores, tracking sessions,
/// reason sessions.
template <class S>
concept CellStoreLike = requires(S &s, CellId c, Value v) {
  { s.alloc(std::move(v)) } -> std::same_as<CellId>;
  { s.read(c) } -> std::convertible_to<Value>;
  s.write(c, std::move(v));
};

/// An in-memory store of dynamically typed cells. The k-th allocation gets
/// index k; ids are never reused and there is no deallocation. A cell's
/// runtime type is fixed at allocation; writes replace the whole snapshot.
///
/// A Store belongs to one logical thread at a time. Values it hands out are
/// immutable and may be shared freely.
class Store {
public:
  CellId alloc(Value value) {
    cells_.push_back(std::move(value));
    return CellId{static_cast<std::uint32_t>(cells_.size() - 1)};
  }

  const Value &read(CellId cell) const {
    checkKnown(cell);
    return cells_[cell.index];
  }

  void write(CellId cell, Value value) {
    checkKnown(cell);
    Value &slot = cells_[cell.index];
    if (slot.type() != value.type())
      throw TypeMismatchError("write would change the cell's value type");
    slot = std::move(value);
  }

  std::size_t size() const noexcept { return cells_.size(); }

private:
  void checkKnown(CellId cell) const {
    if (cell.index >= cells_.size())
      throw UnknownCellError("cell id " + std::to_string(cell.index) +
                             " was not allocated by this store");
  }

  std::vector<Value> cells_;
};

} // namespace celltrace

#endif // CELLTRACE_CELLSTORE_H
