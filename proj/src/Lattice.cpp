//===- Lattice.cpp --------------------------------------------------------===//
//
// Part of the celltrace project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "celltrace/Lattice.h"

namespace celltrace {

std::string renderValue(const CandidateSet &s, const CellNamer &) {
  std::string out = "{";
  bool first = true;
  for (int v = 1; v <= s.domainSize(); ++v) {
    if (!s.contains(v))
      continue;
    if (!first)
      out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

} // namespace celltrace
