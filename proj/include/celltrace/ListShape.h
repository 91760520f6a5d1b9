//===- ListShape.h - The canonical cons-list shape -------------*- C++ -*-===//
//
// Part of the celltrace project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef CELLTRACE_LISTSHAPE_H
#define CELLTRACE_LISTSHAPE_H

#include "celltrace/Shape.h"

#include <vector>

namespace celltrace {

/// The list shape: `nil` and `lcons <payload> <tail>`.
const std::shared_ptr<const ShapeDescriptor> &listShape();

FixValue fixNil();
FixValue fixCons(Value head, FixValue tail);
FixValue fixList(const std::vector<Value> &items);
FixValue fixBoolList(const std::vector<bool> &bits);

/// True iff some element is true. Short-circuits: the tail slot is consumed
/// only while elements keep coming up false.
MendlerAlgebra<bool> anyListAlgebra();

/// Number of cons layers.
MendlerAlgebra<int> listLengthAlgebra();

/// Sum of payloads; bool payloads count as 0/1.
MendlerAlgebra<int> listSumAlgebra();

} // namespace celltrace

#endif // CELLTRACE_LISTSHAPE_H
