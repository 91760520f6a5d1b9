//===- ReasonStore.cpp ----------------------------------------------------===//
//
// Part of the celltrace project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "celltrace/ReasonStore.h"

namespace celltrace {

CellId ReasonSession::alloc(Value value) {
  CellId cell = tracking_.alloc(value);
  AssignmentContainer reason = tracking_.currentAssignments();
  appendReason(cell, reason);
  record(EventKind::Alloc, cell, value, std::move(reason));
  return cell;
}

void ReasonSession::write(CellId cell, Value value) {
  AssignmentContainer reason = tracking_.currentAssignments();
  appendReason(cell, reason);
  record(EventKind::Write, cell, value, std::move(reason));
  tracking_.write(cell, std::move(value));
}

void ReasonSession::writeDecision(CellId cell, Value value) {
  ++level_;
  appendReason(cell, AssignmentContainer{});
  record(EventKind::Decision, cell, value, AssignmentContainer{});
  tracking_.write(cell, std::move(value));
}

void ReasonSession::appendReason(CellId cell,
                                 const AssignmentContainer &reason) {
  ProductStore &store = tracking_.inner();
  ReasonLog log = store.reasons(cell);
  log.append(reason);
  store.writeReasons(cell, std::move(log));
}

void ReasonSession::record(EventKind kind, CellId cell, const Value &value,
                           AssignmentContainer reason) {
  trail_.push_back(AssignmentEvent{trail_.size(), kind, cell, value,
                                   std::move(reason), level_});
}

std::string renderAssignment(const AssignmentEntry &entry,
                             const CellNamer &namer) {
  return "(" + namer(entry.cell) + " = " + entry.observed.render(namer) + ")";
}

std::string renderReason(const AssignmentContainer &reason,
                         const CellNamer &namer) {
  std::string out;
  for (const AssignmentEntry &entry : reason) {
    if (!out.empty())
      out += " ^ ";
    out += renderAssignment(entry, namer);
  }
  return out;
}

std::string renderReasons(const ReasonLog &log, const CellNamer &namer) {
  std::string out;
  bool first = true;
  for (const AssignmentContainer &reason : log.reasons()) {
    if (!first)
      out += " v ";
    out += renderReason(reason, namer);
    first = false;
  }
  return out;
}

} // namespace celltrace
