//===- Lattice.h - Merge-only cell values ----------------------*- C++ -*-===//
//
// Part of the celltrace project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// Values under an information order: `meet` combines what two values know,
// bottom knows nothing, top is overconstrained (conflict). A merging write
// only ever adds information to a cell, so recorded reasons stay valid; a
// merge that lands on top is a conflict and carries the reads that caused
// it.
//
// The constraint a type must satisfy to participate is the LatticeValue
// concept below (on top of Storable: equatable and renderable). Equality is
// required so reason-graph traversals can terminate.
//
//===----------------------------------------------------------------------===//

#ifndef CELLTRACE_LATTICE_H
#define CELLTRACE_LATTICE_H

#include "celltrace/ReasonStore.h"

#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace celltrace {

template <class T>
concept LatticeValue =
    Storable<T> && requires(const T &a, const T &b) {
      { meet(a, b) } -> std::convertible_to<T>;
      { a.isTop() } -> std::convertible_to<bool>;
      { a.isBottom() } -> std::convertible_to<bool>;
    };

//===----------------------------------------------------------------------===//
// Flat lattice
//===----------------------------------------------------------------------===//

/// unknown < v < conflict for any equatable domain: merging two distinct
/// concrete values is a conflict.
template <Storable T> class Flat {
public:
  static Flat bottom() { return Flat(State::Bottom, std::nullopt); }
  static Flat top() { return Flat(State::Top, std::nullopt); }
  static Flat of(T v) { return Flat(State::Known, std::move(v)); }

  bool isBottom() const { return state_ == State::Bottom; }
  bool isTop() const { return state_ == State::Top; }
  bool isKnown() const { return state_ == State::Known; }

  /// Only valid when isKnown().
  const T &value() const { return *value_; }

  friend Flat meet(const Flat &a, const Flat &b) {
    if (a.isBottom())
      return b;
    if (b.isBottom())
      return a;
    if (a.isTop() || b.isTop())
      return top();
    return a.value() == b.value() ? a : top();
  }

  friend bool operator==(const Flat &, const Flat &) = default;

private:
  enum class State { Bottom, Known, Top };

  Flat(State state, std::optional<T> value)
      : state_(state), value_(std::move(value)) {}

  State state_;
  std::optional<T> value_;
};

template <Storable T>
std::string renderValue(const Flat<T> &f, const CellNamer &namer) {
  if (f.isBottom())
    return "unknown";
  if (f.isTop())
    return "conflict";
  return renderValue(f.value(), namer);
}

using FlatBool = Flat<bool>;

//===----------------------------------------------------------------------===//
// Candidate-set lattice
//===----------------------------------------------------------------------===//

/// Finite candidate sets over the domain {1..n}: knowing more means fewer
/// candidates, so meet is intersection, bottom is the full domain and top is
/// the empty set. Domains up to 32 values.
class CandidateSet {
public:
  static CandidateSet universe(int domainSize) {
    return CandidateSet(domainSize, fullMask(domainSize));
  }

  static CandidateSet none(int domainSize) { return CandidateSet(domainSize, 0); }

  static CandidateSet of(int domainSize, std::initializer_list<int> values) {
    return of(domainSize, std::vector<int>(values));
  }

  static CandidateSet of(int domainSize, const std::vector<int> &values) {
    CandidateSet s(domainSize, 0);
    for (int v : values)
      s.mask_ |= bit(s, v);
    return s;
  }

  int domainSize() const { return domain_; }
  bool contains(int v) const { return (mask_ & bit(*this, v)) != 0; }

  int count() const {
    int n = 0;
    for (std::uint32_t m = mask_; m; m &= m - 1)
      ++n;
    return n;
  }

  bool isBottom() const { return mask_ == fullMask(domain_); }
  bool isTop() const { return mask_ == 0; }

  friend CandidateSet meet(const CandidateSet &a, const CandidateSet &b) {
    if (a.domain_ != b.domain_)
      throw TypeMismatchError("candidate sets over different domains");
    return CandidateSet(a.domain_, a.mask_ & b.mask_);
  }

  friend bool operator==(const CandidateSet &, const CandidateSet &) = default;

private:
  CandidateSet(int domainSize, std::uint32_t mask)
      : domain_(domainSize), mask_(mask) {
    if (domainSize < 0 || domainSize > 32)
      throw TypeMismatchError("candidate-set domains hold at most 32 values");
  }

  static std::uint32_t fullMask(int n) {
    return n == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
  }

  static std::uint32_t bit(const CandidateSet &s, int v) {
    if (v < 1 || v > s.domain_)
      throw TypeMismatchError("candidate outside the domain");
    return std::uint32_t{1} << (v - 1);
  }

  int domain_;
  std::uint32_t mask_;
};

std::string renderValue(const CandidateSet &s, const CellNamer &namer);

//===----------------------------------------------------------------------===//
// Merging writes
//===----------------------------------------------------------------------===//

enum class MergeOutcome { Unchanged, Grew, Conflict };

/// Merges `incoming` into the cell: the cell ends up holding
/// meet(old, incoming). Built on the session's reason-recording write, so a
/// merge that conflicts leaves a reason on the cell. The old value is read
/// untracked to compute the meet — it is part of the write's mechanics, not
/// a program read — except that a conflicting merge records the clashing old
/// value as a tracked read first, so the conflict's reason names it.
///
/// When the merge adds nothing, the cell is left untouched: no write, no
/// reason appended.
template <LatticeValue T>
MergeOutcome mergeWrite(ReasonSession &session, CellId cell, const T &incoming) {
  Value raw = session.peek(cell);
  const T &old = raw.as<T>();
  T merged = meet(old, incoming);
  if (merged == old)
    return MergeOutcome::Unchanged;
  if (merged.isTop()) {
    session.read(cell); // the clashing observation becomes part of the reason
    session.write(cell, Value::of(std::move(merged)));
    return MergeOutcome::Conflict;
  }
  session.write(cell, Value::of(std::move(merged)));
  return MergeOutcome::Grew;
}

/// True iff the cell's value is top. Untracked, like other meta queries.
template <LatticeValue T>
bool isConflict(const ReasonSession &session, CellId cell) {
  return session.peek(cell).as<T>().isTop();
}

} // namespace celltrace

#endif // CELLTRACE_LATTICE_H
