//===- ListShape.cpp ------------------------------------------------------===//
//
// Part of the celltrace project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "celltrace/ListShape.h"

namespace celltrace {

const std::shared_ptr<const ShapeDescriptor> &listShape() {
  static const std::shared_ptr<const ShapeDescriptor> desc =
      std::make_shared<const ShapeDescriptor>(
          "list", std::vector<ShapeConstructor>{{"nil", 0, 0}, {"lcons", 1, 1}});
  return desc;
}

FixValue fixNil() {
  return fixIn(listShape(), ShapeNode<FixValue>{"nil", {}, {}});
}

FixValue fixCons(Value head, FixValue tail) {
  return fixIn(listShape(),
               ShapeNode<FixValue>{"lcons", {std::move(head)}, {std::move(tail)}});
}

FixValue fixList(const std::vector<Value> &items) {
  FixValue acc = fixNil();
  for (auto it = items.rbegin(); it != items.rend(); ++it)
    acc = fixCons(*it, std::move(acc));
  return acc;
}

FixValue fixBoolList(const std::vector<bool> &bits) {
  FixValue acc = fixNil();
  for (auto it = bits.rbegin(); it != bits.rend(); ++it)
    acc = fixCons(Value::of(static_cast<bool>(*it)), std::move(acc));
  return acc;
}

MendlerAlgebra<bool> anyListAlgebra() {
  return [](const RecurseFn<bool> &rec, const ShapeNode<ChildSlot> &node) {
    if (node.tag == "nil")
      return false;
    if (node.payload[0].as<bool>())
      return true;
    return rec(node.children[0]);
  };
}

MendlerAlgebra<int> listLengthAlgebra() {
  return [](const RecurseFn<int> &rec, const ShapeNode<ChildSlot> &node) {
    if (node.tag == "nil")
      return 0;
    return 1 + rec(node.children[0]);
  };
}

MendlerAlgebra<int> listSumAlgebra() {
  return [](const RecurseFn<int> &rec, const ShapeNode<ChildSlot> &node) {
    if (node.tag == "nil")
      return 0;
    const Value &head = node.payload[0];
    int h = head.holds<int>() ? head.as<int>() : (head.as<bool>() ? 1 : 0);
    return h + rec(node.children[0]);
  };
}

} // namespace celltrace
