#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "catkit/diagram.hpp"

namespace catkit {

enum class Side { in, out };

enum class NodeKind { box, spider };

/// A box (generator occurrence) or an undirected spider.
///
/// Boxes have ordered typed ports on each side; a daggered box has its
/// generator's sides exchanged. Spider ports are unordered, so a spider
/// records only its atom and accumulated genus; its degree is the number
/// of wire ends attached to it.
struct GraphNode {
  NodeKind kind = NodeKind::box;
  std::string label;  // generator name, or atom for spiders
  bool daggered = false;
  std::vector<Factor> inputs;
  std::vector<Factor> outputs;
  std::size_t genus = 0;
};

struct Endpoint {
  enum class Kind { boundary, port, spider };
  Kind kind = Kind::boundary;
  Side side = Side::in;    // boundary: which boundary; port: which side of the box
  std::size_t node = 0;    // port / spider
  std::size_t index = 0;   // boundary position or port index

  static Endpoint boundary(Side s, std::size_t i) { return {Kind::boundary, s, 0, i}; }
  static Endpoint port(std::size_t node, Side s, std::size_t i) { return {Kind::port, s, node, i}; }
  static Endpoint spider_leg(std::size_t node) { return {Kind::spider, Side::in, node, 0}; }

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct Wire {
  Endpoint a;
  Endpoint b;
  std::string atom;
};

/// Port-graph normal form of a diagram.
///
/// Every box port and boundary position carries exactly one wire end.
/// Identities, swaps, cups and caps leave no nodes behind: they only decide
/// which ends are joined. Closed wire cycles without nodes are kept as
/// `loops`, a sorted multiset of atom names.
struct OpenGraph {
  std::vector<GraphNode> nodes;
  std::vector<Wire> wires;
  std::vector<Factor> inputs;
  std::vector<Factor> outputs;
  std::vector<std::string> loops;

  bool empty() const { return nodes.empty() && wires.empty() && inputs.empty() && outputs.empty() && loops.empty(); }

  /// Spider degree (number of wire ends on the node).
  std::size_t degree(std::size_t node) const;

  /// The dagger of the diagram: boundaries exchanged, boxes flipped and
  /// their dagger marks toggled.
  OpenGraph flipped() const;

  /// Checks the port/wire incidence invariants; throws std::logic_error.
  void validate() const;
};

/// Builds the port graph of a well-typed term.
OpenGraph to_graph(const Term& t, const Signature& sig);

/// Label-, port-order- and boundary-order-preserving isomorphism, with loops
/// compared as multisets.
bool graph_eq(const OpenGraph& a, const OpenGraph& b);

/// Deterministic human-readable dump (for diagnostics and golden files).
std::string to_string(const OpenGraph& g);

}  // namespace catkit
