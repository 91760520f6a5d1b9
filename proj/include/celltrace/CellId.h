//===- CellId.h - Store-scoped cell identifiers ---------------*- C++ -*-===//
//
// Part of the celltrace project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef CELLTRACE_CELLID_H
#define CELLTRACE_CELLID_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace celltrace {

/// Identity of a cell within one store. Ids are dense allocation indices,
/// never reused, and only meaningful for the store that issued them.
struct CellId {
  std::uint32_t index = 0;

  friend auto operator<=>(CellId, CellId) = default;
};

} // namespace celltrace

template <> struct std::hash<celltrace::CellId> {
  std::size_t operator()(celltrace::CellId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.index);
  }
};

#endif // CELLTRACE_CELLID_H
