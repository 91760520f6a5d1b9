//===- Shape.h - One-layer shapes, fixpoints, Mendler folds ----*- C++ -*-===//
//
// Part of the celltrace project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// Recursive data is represented one constructor layer at a time: a ShapeNode
// holds a constructor tag, its non-recursive payload, and its recursive child
// slots. The slot type is a parameter, so the same layer shape serves plain
// nested trees (FixValue), cell-distributed structures (CellId children), and
// the opaque view handed to fold algebras (ChildSlot).
//
// Folds are Mendler-style: the algebra receives an explicit `recurse`
// capability and child slots are opaque, so descending into a child is an
// observable act. Folding a cell-distributed structure therefore reads
// exactly the cells the algebra chose to descend into, which is what makes
// recorded reasons minimal.
//
//===----------------------------------------------------------------------===//

#ifndef CELLTRACE_SHAPE_H
#define CELLTRACE_SHAPE_H

#include "celltrace/CellStore.h"

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <type_traits>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

namespace celltrace {

/// Arity violations and unknown constructor tags.
class ShapeError : public StoreError {
public:
  using StoreError::StoreError;
};

//===----------------------------------------------------------------------===//
// Descriptors and nodes
//===----------------------------------------------------------------------===//

struct ShapeConstructor {
  std::string tag;
  std::size_t payloadArity = 0;
  std::size_t childArity = 0;
};

/// Runtime description of a shape functor: one entry per constructor.
/// Tags are unique. Descriptors are immutable and shared.
class ShapeDescriptor {
public:
  ShapeDescriptor(std::string name, std::vector<ShapeConstructor> ctors)
      : name_(std::move(name)), ctors_(std::move(ctors)) {
    for (std::size_t i = 0; i < ctors_.size(); ++i)
      for (std::size_t j = i + 1; j < ctors_.size(); ++j)
        if (ctors_[i].tag == ctors_[j].tag)
          throw ShapeError("duplicate constructor tag '" + ctors_[i].tag +
                           "' in shape " + name_);
  }

  const std::string &name() const { return name_; }
  const std::vector<ShapeConstructor> &constructors() const { return ctors_; }

  const ShapeConstructor *find(std::string_view tag) const {
    for (const auto &c : ctors_)
      if (c.tag == tag)
        return &c;
    return nullptr;
  }

  const ShapeConstructor &at(std::string_view tag) const {
    if (const auto *c = find(tag))
      return *c;
    throw ShapeError("shape " + name_ + " has no constructor '" +
                     std::string(tag) + "'");
  }

private:
  std::string name_;
  std::vector<ShapeConstructor> ctors_;
};

/// One constructor layer. R is the recursive-slot type.
template <class R> struct ShapeNode {
  std::string tag;
  std::vector<Value> payload;
  std::vector<R> children;

  friend bool operator==(const ShapeNode &, const ShapeNode &) = default;

  /// Same layer with each child slot transformed.
  template <class F> auto mapChildren(F &&f) const {
    using R2 = std::decay_t<std::invoke_result_t<F &, const R &>>;
    ShapeNode<R2> out{tag, payload, {}};
    out.children.reserve(children.size());
    for (const R &c : children)
      out.children.push_back(f(c));
    return out;
  }
};

/// Debug rendering of a stored layer: tag, payloads, then child cells through
/// the namer, space-separated ("lcons false c2", "nil").
inline std::string renderValue(const ShapeNode<CellId> &node,
                               const CellNamer &namer) {
  std::string out = node.tag;
  for (const Value &p : node.payload)
    out += " " + p.render(namer);
  for (CellId c : node.children)
    out += " " + namer(c);
  return out;
}

template <class R>
void validateNode(const ShapeDescriptor &desc, const ShapeNode<R> &node) {
  const ShapeConstructor &ctor = desc.at(node.tag);
  if (node.payload.size() != ctor.payloadArity ||
      node.children.size() != ctor.childArity)
    throw ShapeError("constructor '" + node.tag + "' of shape " + desc.name() +
                     " takes " + std::to_string(ctor.payloadArity) +
                     " payload(s) and " + std::to_string(ctor.childArity) +
                     " child(ren)");
}

//===----------------------------------------------------------------------===//
// Fixpoints
//===----------------------------------------------------------------------===//

/// A finite recursive value: the closure of a shape under itself. FixValues
/// are immutable, shareable, and foldable with any Mendler algebra; they are
/// always well-formed for their descriptor because fixIn validates each
/// layer.
class FixValue {
public:
  const ShapeNode<FixValue> &layer() const { return *node_; }

  const std::shared_ptr<const ShapeDescriptor> &descriptor() const {
    return desc_;
  }

  friend bool operator==(const FixValue &a, const FixValue &b) {
    return *a.node_ == *b.node_;
  }

private:
  friend FixValue fixIn(std::shared_ptr<const ShapeDescriptor> desc,
                        ShapeNode<FixValue> node);

  FixValue(std::shared_ptr<const ShapeNode<FixValue>> node,
           std::shared_ptr<const ShapeDescriptor> desc)
      : node_(std::move(node)), desc_(std::move(desc)) {}

  std::shared_ptr<const ShapeNode<FixValue>> node_;
  std::shared_ptr<const ShapeDescriptor> desc_;
};

/// Wraps one validated layer into a FixValue. All children must come from
/// the same shape.
inline FixValue fixIn(std::shared_ptr<const ShapeDescriptor> desc,
                      ShapeNode<FixValue> node) {
  if (!desc)
    throw ShapeError("fixIn requires a shape descriptor");
  validateNode(*desc, node);
  for (const FixValue &child : node.children)
    if (child.descriptor()->name() != desc->name())
      throw ShapeError("child of shape " + child.descriptor()->name() +
                       " nested under shape " + desc->name());
  return FixValue(std::make_shared<const ShapeNode<FixValue>>(std::move(node)),
                  std::move(desc));
}

/// Exposes the top constructor layer. fixIn(desc, fixOut(v, desc)) folds
/// identically to v.
inline ShapeNode<FixValue> fixOut(const FixValue &v,
                                  const ShapeDescriptor &desc) {
  if (v.descriptor()->name() != desc.name())
    throw ShapeError("fixOut against shape " + desc.name() +
                     " on a value of shape " + v.descriptor()->name());
  return v.layer();
}

inline ShapeNode<FixValue> fixOut(const FixValue &v) { return v.layer(); }

//===----------------------------------------------------------------------===//
// Mendler-style algebras
//===----------------------------------------------------------------------===//

namespace detail {
struct SlotAccess;
}

/// An opaque recursive-slot handle. An algebra can only consume it through
/// the `recurse` capability it was given; the engines behind mendlerFold and
/// cellFold know what is inside.
class ChildSlot {
public:
  friend bool operator==(const ChildSlot &, const ChildSlot &) = default;

private:
  friend struct detail::SlotAccess;

  explicit ChildSlot(std::variant<CellId, FixValue> repr)
      : repr_(std::move(repr)) {}

  std::variant<CellId, FixValue> repr_;
};

template <class A> using RecurseFn = std::function<A(const ChildSlot &)>;

/// A fold step: consumes one layer, recursing into child slots only through
/// the provided capability.
template <class A>
using MendlerAlgebra =
    std::function<A(const RecurseFn<A> &, const ShapeNode<ChildSlot> &)>;

namespace detail {

struct SlotAccess {
  static ChildSlot wrap(FixValue v) {
    return ChildSlot(std::variant<CellId, FixValue>(std::move(v)));
  }
  static ChildSlot wrap(CellId c) {
    return ChildSlot(std::variant<CellId, FixValue>(c));
  }
  static const FixValue &fixOf(const ChildSlot &slot) {
    if (const auto *v = std::get_if<FixValue>(&slot.repr_))
      return *v;
    throw ShapeError("slot from a cell fold recursed outside its fold");
  }
  static CellId cellOf(const ChildSlot &slot) {
    if (const auto *c = std::get_if<CellId>(&slot.repr_))
      return *c;
    throw ShapeError("slot from a plain fold recursed outside its fold");
  }
};

} // namespace detail

/// Structural fold of a plain FixValue. Terminates because FixValues are
/// finite by construction.
template <class A>
A mendlerFold(const MendlerAlgebra<A> &alg, const FixValue &v) {
  RecurseFn<A> rec = [&alg](const ChildSlot &slot) -> A {
    return mendlerFold(alg, detail::SlotAccess::fixOf(slot));
  };
  return alg(rec, v.layer().mapChildren(
                      [](const FixValue &c) { return detail::SlotAccess::wrap(c); }));
}

/// The identity algebra: wraps every layer back up.
inline MendlerAlgebra<FixValue>
rebuildAlgebra(std::shared_ptr<const ShapeDescriptor> desc) {
  return [desc](const RecurseFn<FixValue> &rec,
                const ShapeNode<ChildSlot> &node) {
    return fixIn(desc, node.mapChildren(rec));
  };
}

//===----------------------------------------------------------------------===//
// Cell-distributed structures
//===----------------------------------------------------------------------===//

/// Allocates one cell per layer, children replaced by cell ids; returns the
/// root cell. Children are allocated before their parents, left to right, so
/// the deepest layer gets the lowest id.
template <CellStoreLike S> CellId distribute(S &store, const FixValue &v) {
  struct Frame {
    const ShapeNode<FixValue> *node;
    std::size_t next = 0;
    std::vector<CellId> childCells;
  };
  std::vector<Frame> stack;
  stack.push_back(Frame{&v.layer(), 0, {}});
  while (true) {
    Frame &top = stack.back();
    if (top.next < top.node->children.size()) {
      const FixValue &child = top.node->children[top.next];
      ++top.next;
      stack.push_back(Frame{&child.layer(), 0, {}});
      continue;
    }
    CellId cell = store.alloc(Value::of(ShapeNode<CellId>{
        top.node->tag, top.node->payload, std::move(top.childCells)}));
    stack.pop_back();
    if (stack.empty())
      return cell;
    stack.back().childCells.push_back(cell);
  }
}

struct FoldOptions {
  /// Guard against knotted cell structures and runaway descent. A cell
  /// revisited on the current descent path fails immediately; the depth
  /// limit bounds acyclic descent.
  std::size_t maxDepth = 1'000'000;
  /// When set, every visited node is validated against this descriptor.
  const ShapeDescriptor *expect = nullptr;
};

namespace detail {

template <class A, class S> class CellFolder {
public:
  CellFolder(S &store, const MendlerAlgebra<A> &alg, const FoldOptions &opts)
      : store_(store), alg_(alg), opts_(opts) {}

  A run(CellId cell) {
    if (depth_ >= opts_.maxDepth)
      throw CyclicStructureError("cell fold exceeded depth limit " +
                                 std::to_string(opts_.maxDepth));
    if (!onPath_.insert(cell).second)
      throw CyclicStructureError("cell structure is cyclic at cell " +
                                 std::to_string(cell.index));
    ++depth_;
    Value v = store_.read(cell);
    const auto &node = v.template as<ShapeNode<CellId>>();
    if (opts_.expect)
      validateNode(*opts_.expect, node);
    RecurseFn<A> rec = [this](const ChildSlot &slot) -> A {
      return run(SlotAccess::cellOf(slot));
    };
    A out = alg_(
        rec, node.mapChildren([](CellId c) { return SlotAccess::wrap(c); }));
    --depth_;
    onPath_.erase(cell);
    return out;
  }

private:
  S &store_;
  const MendlerAlgebra<A> &alg_;
  const FoldOptions &opts_;
  std::size_t depth_ = 0;
  std::unordered_set<CellId> onPath_;
};

} // namespace detail

/// Folds a distributed structure rooted at `root`. The root cell is read to
/// see its constructor; beyond that, a child cell is read only when the
/// algebra invokes `recurse` on its slot. Reads go through `store`, so a
/// tracking store records exactly the visited cells.
template <class A, class S>
A cellFold(S &store, const MendlerAlgebra<A> &alg, CellId root,
           const FoldOptions &opts = {}) {
  detail::CellFolder<A, S> folder(store, alg, opts);
  return folder.run(root);
}

//===----------------------------------------------------------------------===//
// Lensed cells
//===----------------------------------------------------------------------===//

/// A read-only view of a cell composed with a pure transformation. Writes
/// stay on raw cell ids; a transformed view has nothing sound to write back.
class LensHandle {
public:
  static LensHandle identity(CellId origin) {
    return LensHandle(origin, [](const Value &v) { return v; });
  }

  CellId origin() const { return origin_; }

  Value view(const Value &raw) const { return view_(raw); }

private:
  LensHandle(CellId origin, std::function<Value(const Value &)> view)
      : origin_(origin), view_(std::move(view)) {}

  friend LensHandle lensMap(const LensHandle &,
                            std::function<Value(const Value &)>);

  CellId origin_;
  std::function<Value(const Value &)> view_;
};

/// Composes a further transformation onto the handle's view.
inline LensHandle lensMap(const LensHandle &h,
                          std::function<Value(const Value &)> f) {
  return LensHandle(h.origin_,
                    [g = h.view_, f = std::move(f)](const Value &raw) {
                      return f(g(raw));
                    });
}

/// Reads the origin cell through the store (tracked when the store tracks)
/// and applies the view.
template <class S> Value lensRead(S &store, const LensHandle &h) {
  return h.view(store.read(h.origin()));
}

} // namespace celltrace

#endif // CELLTRACE_SHAPE_H
