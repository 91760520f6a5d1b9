//===- Errors.h - Error types shared across the library -------*- C++ -*-===//
//
// Part of the celltrace project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef CELLTRACE_ERRORS_H
#define CELLTRACE_ERRORS_H

#include <stdexcept>
#include <string>

namespace celltrace {

/// Base class for misuse of a store or session. These indicate programmer
/// errors (violated preconditions), not recoverable runtime conditions.
class StoreError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A CellId that was never allocated by the store it was handed to.
/// Typically signals a handle that leaked across stores.
class UnknownCellError : public StoreError {
public:
  using StoreError::StoreError;
};

/// A value whose runtime type does not match what the target expects:
/// writing a different type into a typed cell, reading a cell under the
/// wrong type, or merging lattice values from different domains.
class TypeMismatchError : public StoreError {
public:
  using StoreError::StoreError;
};

/// A fold over a cell-distributed structure revisited a cell on its own
/// descent path, or exceeded the configured depth limit.
class CyclicStructureError : public StoreError {
public:
  using StoreError::StoreError;
};

/// A session trail that cannot support graph construction, e.g. a recorded
/// reason referencing a cell with no prior assignment event.
class MalformedSessionError : public StoreError {
public:
  using StoreError::StoreError;
};

} // namespace celltrace

#endif // CELLTRACE_ERRORS_H
