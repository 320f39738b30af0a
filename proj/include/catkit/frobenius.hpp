#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catkit/graph.hpp"

namespace catkit {

/// An OpenGraph in which every wire of a Frobenius atom passes through
/// spider nodes. Boxes of other generators are kept as opaque nodes.
using SpiderGraph = OpenGraph;

/// Every Frobenius-atom wire gets a degree-2 spider in its middle, and every
/// closed Frobenius loop becomes a degree-2 spider with a self-loop (the torus
/// cap∘cup). Wires of other atoms are untouched.
SpiderGraph spiderize(const OpenGraph& g, const Signature& sig);

struct Redex {
  enum class Kind {
    merge,      // wire between two distinct same-atom spiders
    self_loop,  // wire with both ends on one spider
    elide,      // degree-2 genus-0 spider on two distinct wires
  };
  Kind kind;
  std::size_t index;  // wire for merge/self_loop, node for elide
};

/// All rewrite sites of the current graph.
std::vector<Redex> redexes(const SpiderGraph& g);

/// Performs one rewrite in place. A special self-loop is discarded, a
/// non-special one adds a handle (genus + 1) to its spider.
void apply(SpiderGraph& g, const Redex& r, bool special);

/// Rewrites to normal form. With a seed the redex is picked at random each
/// step; without, the first redex is taken.
SpiderGraph fuse(SpiderGraph g, bool special, std::optional<std::uint64_t> seed = std::nullopt);

/// True when no redex is left.
bool is_normal(const SpiderGraph& g);

struct ComponentClass {
  std::vector<std::size_t> inputs;
  std::vector<std::size_t> outputs;
  std::size_t genus = 0;

  friend bool operator==(const ComponentClass&, const ComponentClass&) = default;
  friend auto operator<=>(const ComponentClass&, const ComponentClass&) = default;
};

/// Connected components of a cobordism, sorted canonically.
struct CobordismClass {
  std::string atom;
  std::vector<ComponentClass> components;

  friend bool operator==(const CobordismClass&, const CobordismClass&) = default;
};

/// "component(in=[0, 1], out=[], genus=1)"
std::string to_string(const ComponentClass& c);
/// One component per line.
std::string to_string(const CobordismClass& c);

/// Spiderizes and fuses (non-special) a term built only from spiders,
/// identities, swaps, cups, caps and daggers on one Frobenius atom, then
/// reads off each connected component. Throws Unsupported on generators or
/// a second atom, TypeError when the term does not typecheck.
CobordismClass classify_cob(const Term& t, const Signature& sig);

/// classify_cob equality. Throws TypeError when the boundary types differ.
bool eq_cob(const Term& a, const Term& b, const Signature& sig);

}  // namespace catkit
