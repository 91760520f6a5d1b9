//===- Value.h - Type-erased immutable value snapshots --------*- C++ -*-===//
//
// Part of the celltrace project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// A Value is an immutable snapshot behind a runtime type tag. Cells hold
// Values; reads hand out shared views, so a snapshot recorded by the read
// tracker stays valid no matter how often the cell is rewritten afterwards.
//
//===----------------------------------------------------------------------===//

#ifndef CELLTRACE_VALUE_H
#define CELLTRACE_VALUE_H

#include "celltrace/CellId.h"
#include "celltrace/Errors.h"

#include <concepts>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <type_traits>
#include <typeindex>
#include <utility>

namespace celltrace {

/// Maps a cell id to a display name in debug output.
using CellNamer = std::function<std::string(CellId)>;

/// The fallback naming scheme: c0, c1, ...
inline std::string defaultCellName(CellId id) {
  return "c" + std::to_string(id.index);
}

//===----------------------------------------------------------------------===//
// renderValue customization point
//===----------------------------------------------------------------------===//
//
// Every storable type provides a debug rendering. Types that embed cell ids
// (shape nodes) route them through the namer; plain values ignore it.

inline std::string renderValue(bool b, const CellNamer &) {
  return b ? "true" : "false";
}

inline std::string renderValue(const std::string &s, const CellNamer &) {
  return s;
}

template <class T>
concept OstreamRenderable = requires(std::ostream &os, const T &t) {
  { os << t } -> std::convertible_to<std::ostream &>;
};

template <class T>
  requires(!std::same_as<T, bool> && !std::same_as<T, std::string> &&
           !std::is_pointer_v<T> && OstreamRenderable<T>)
std::string renderValue(const T &v, const CellNamer &) {
  std::ostringstream os;
  os << v;
  return os.str();
}

/// What a type must satisfy to live in a cell: copyable, comparable for
/// equality, and renderable for reason output.
template <class T>
concept Storable =
    std::copy_constructible<T> && std::equality_comparable<T> &&
    requires(const T &t, const CellNamer &n) {
      { renderValue(t, n) } -> std::convertible_to<std::string>;
    };

//===----------------------------------------------------------------------===//
// Value
//===----------------------------------------------------------------------===//

class Value {
public:
  template <Storable T> static Value of(T v) {
    static_assert(!std::same_as<T, Value>, "Values do not nest");
    return Value(std::make_shared<const T>(std::move(v)), opsFor<T>(),
                 typeid(T));
  }

  /// Convenience: string literals store as std::string.
  static Value of(const char *s) { return of(std::string(s)); }

  std::type_index type() const { return type_; }

  template <class T> bool holds() const { return type_ == typeid(T); }

  /// Typed view of the payload. The reference is valid for the lifetime of
  /// this Value (and of any copy sharing the payload).
  template <class T> const T &as() const {
    if (!holds<T>())
      throw TypeMismatchError("value does not hold the requested type");
    return *static_cast<const T *>(payload_.get());
  }

  /// Equal iff same runtime type and equal payloads.
  friend bool operator==(const Value &a, const Value &b) {
    return a.type_ == b.type_ && a.ops_->equals(a.payload_.get(),
                                                b.payload_.get());
  }

  std::string render(const CellNamer &namer) const {
    return ops_->render(payload_.get(), namer);
  }

  std::string render() const { return render(defaultCellName); }

private:
  struct Ops {
    bool (*equals)(const void *, const void *);
    std::string (*render)(const void *, const CellNamer &);
  };

  Value(std::shared_ptr<const void> payload, const Ops *ops,
        std::type_index type)
      : payload_(std::move(payload)), ops_(ops), type_(type) {}

  template <Storable T> static const Ops *opsFor() {
    static const Ops ops{
        [](const void *a, const void *b) {
          return *static_cast<const T *>(a) == *static_cast<const T *>(b);
        },
        [](const void *p, const CellNamer &n) {
          return renderValue(*static_cast<const T *>(p), n);
        }};
    return &ops;
  }

  std::shared_ptr<const void> payload_;
  const Ops *ops_;
  std::type_index type_;
};

} // namespace celltrace

#endif // CELLTRACE_VALUE_H
