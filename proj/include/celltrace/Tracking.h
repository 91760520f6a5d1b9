//===- Tracking.h - Read tracking over a cell store ------------*- C++ -*-===//
//
// Part of the celltrace project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// Wraps any cell store so that every read appends a (cell, observed value)
// entry to an accumulator. Writes and allocations pass through untouched.
// The accumulator can be snapshotted at any time and is the raw material
// reasons are made of.
//
//===----------------------------------------------------------------------===//

#ifndef CELLTRACE_TRACKING_H
#define CELLTRACE_TRACKING_H

#include "celltrace/CellStore.h"

#include <cstddef>
#include <utility>
#include <vector>

namespace celltrace {

/// One recorded read: which cell, and the snapshot observed at read time.
struct AssignmentEntry {
  CellId cell;
  Value observed;

  friend bool operator==(const AssignmentEntry &,
                         const AssignmentEntry &) = default;
};

/// An ordered, append-only collection of recorded reads. Duplicate reads of
/// the same cell stay duplicated; consumers deduplicate if they care.
class AssignmentContainer {
public:
  AssignmentContainer() = default;

  static AssignmentContainer single(AssignmentEntry entry) {
    AssignmentContainer c;
    c.entries_.push_back(std::move(entry));
    return c;
  }

  void append(AssignmentEntry entry) { entries_.push_back(std::move(entry)); }

  /// Concatenates another container onto this one, preserving order.
  void merge(const AssignmentContainer &other) {
    entries_.insert(entries_.end(), other.entries_.begin(),
                    other.entries_.end());
  }

  const std::vector<AssignmentEntry> &entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const AssignmentContainer &,
                         const AssignmentContainer &) = default;

private:
  std::vector<AssignmentEntry> entries_;
};

/// A cell store plus a current-assignment accumulator. Returned values are
/// identical to what the inner store returns; the only added effect is the
/// recording. One session per logical thread.
template <CellStoreLike S> class TrackingSession {
public:
  TrackingSession() = default;
  explicit TrackingSession(S inner) : inner_(std::move(inner)) {}

  CellId alloc(Value value) { return inner_.alloc(std::move(value)); }

  Value read(CellId cell) {
    Value v = inner_.read(cell);
    current_.append(AssignmentEntry{cell, v});
    return v;
  }

  void write(CellId cell, Value value) { inner_.write(cell, std::move(value)); }

  /// Snapshot of everything read since construction or the last reset.
  AssignmentContainer currentAssignments() const { return current_; }

  /// Returns the accumulator and empties it, delimiting a reason window.
  AssignmentContainer resetAssignments() {
    return std::exchange(current_, AssignmentContainer{});
  }

  S &inner() { return inner_; }
  const S &inner() const { return inner_; }

private:
  S inner_;
  AssignmentContainer current_;
};

} // namespace celltrace

#endif // CELLTRACE_TRACKING_H
