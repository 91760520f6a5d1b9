//===- ReasonStore.h - Reason-carrying cells and sessions ------*- C++ -*-===//
//
// Part of the celltrace project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// Two layers live here. ProductStore pairs every cell with an auxiliary
// reason slot: the main channel reads/writes the value, the aux channel
// reads/writes the cell's ReasonLog, and the two never touch each other's
// slot. ReasonSession combines the product store with read tracking so that
// every allocation and write records the current assignment window as a
// reason, retrievable per cell, and keeps an ordered trail of assignment
// events for dependency-graph construction.
//
//===----------------------------------------------------------------------===//

#ifndef CELLTRACE_REASONSTORE_H
#define CELLTRACE_REASONSTORE_H

#include "celltrace/Tracking.h"

#include <cstddef>
#include <vector>

namespace celltrace {

/// Per-cell collection of reasons, one per assignment event on the cell.
/// Entries inside each reason reference other cells of the same store.
class ReasonLog {
public:
  void append(AssignmentContainer reason) {
    reasons_.push_back(std::move(reason));
  }

  const std::vector<AssignmentContainer> &reasons() const { return reasons_; }
  std::size_t size() const { return reasons_.size(); }
  bool empty() const { return reasons_.empty(); }

  friend bool operator==(const ReasonLog &, const ReasonLog &) = default;

private:
  std::vector<AssignmentContainer> reasons_;
};

/// What a product-store cell actually holds: the main value plus the reason
/// slot. The main value's type is fixed per cell; the aux slot always exists
/// (empty until a reason is attached).
struct TupleCell {
  Value main;
  ReasonLog aux;

  friend bool operator==(const TupleCell &, const TupleCell &) = default;
};

inline std::string renderValue(const TupleCell &cell, const CellNamer &namer) {
  return cell.main.render(namer);
}

/// A store of TupleCells exposed as two independent channels. `alloc`,
/// `read` and `write` form the main channel (so the store composes with
/// TrackingSession like any other); `reasons`/`writeReasons` form the aux
/// channel.
class ProductStore {
public:
  CellId alloc(Value main) {
    return store_.alloc(Value::of(TupleCell{std::move(main), ReasonLog{}}));
  }

  Value read(CellId cell) const {
    return store_.read(cell).as<TupleCell>().main;
  }

  void write(CellId cell, Value main) {
    const TupleCell &old = store_.read(cell).as<TupleCell>();
    if (old.main.type() != main.type())
      throw TypeMismatchError("write would change the cell's main value type");
    store_.write(cell, Value::of(TupleCell{std::move(main), old.aux}));
  }

  ReasonLog reasons(CellId cell) const {
    return store_.read(cell).as<TupleCell>().aux;
  }

  void writeReasons(CellId cell, ReasonLog log) {
    const TupleCell &old = store_.read(cell).as<TupleCell>();
    store_.write(cell, Value::of(TupleCell{old.main, std::move(log)}));
  }

  std::size_t size() const { return store_.size(); }

  /// The underlying tuple-cell store, for inspection.
  const Store &raw() const { return store_; }
  Store &raw() { return store_; }

private:
  Store store_;
};

//===----------------------------------------------------------------------===//
// ReasonSession
//===----------------------------------------------------------------------===//

enum class EventKind { Alloc, Write, Decision };

/// One assignment in a session's history: which cell took which value, the
/// reason window recorded with it, and the decision level it happened at.
struct AssignmentEvent {
  std::size_t index = 0;
  EventKind kind = EventKind::Write;
  CellId cell;
  Value value;
  AssignmentContainer reason;
  int level = 0;
};

/// A tracked product store in which every alloc and write attaches the
/// current assignment window to the target cell's ReasonLog. Reads are
/// tracked; reason retrieval is not (reasons are metadata about the search,
/// not problem data). Copying a session snapshots its entire state, which is
/// how a solver branches and backjumps. One session per logical thread;
/// anything a session returns is an immutable snapshot.
class ReasonSession {
public:
  /// Allocates a cell and records the current window as its first reason.
  CellId alloc(Value value);

  /// Tracked read of the main channel.
  Value read(CellId cell) { return tracking_.read(cell); }

  /// Untracked read of the main channel, for meta queries that must not
  /// enter reason windows.
  Value peek(CellId cell) const { return tracking_.inner().read(cell); }

  /// Appends the current window to the cell's ReasonLog, then writes the
  /// main value.
  void write(CellId cell, Value value);

  /// Marks a search decision: enters a new decision level and writes the
  /// value with an empty reason.
  void writeDecision(CellId cell, Value value);

  /// The cell's ReasonLog, one reason per assignment event on it.
  ReasonLog reasons(CellId cell) const { return tracking_.inner().reasons(cell); }

  AssignmentContainer currentAssignments() const {
    return tracking_.currentAssignments();
  }

  AssignmentContainer resetAssignments() { return tracking_.resetAssignments(); }

  int decisionLevel() const { return level_; }

  /// Every assignment event in order; the dependency graph is built from
  /// this trail.
  const std::vector<AssignmentEvent> &trail() const { return trail_; }

  ProductStore &store() { return tracking_.inner(); }
  const ProductStore &store() const { return tracking_.inner(); }

private:
  void appendReason(CellId cell, const AssignmentContainer &reason);
  void record(EventKind kind, CellId cell, const Value &value,
              AssignmentContainer reason);

  TrackingSession<ProductStore> tracking_;
  std::vector<AssignmentEvent> trail_;
  int level_ = 0;
};

//===----------------------------------------------------------------------===//
// Reason rendering
//===----------------------------------------------------------------------===//

/// `(p3 = lcons false p2)` for a single recorded read.
std::string renderAssignment(const AssignmentEntry &entry,
                             const CellNamer &namer);

/// Entries of one reason joined by ` ^ `.
std::string renderReason(const AssignmentContainer &reason,
                         const CellNamer &namer);

/// Reasons of a log (one per assignment event) joined by ` v `.
std::string renderReasons(const ReasonLog &log, const CellNamer &namer);

} // namespace celltrace

#endif // CELLTRACE_REASONSTORE_H
