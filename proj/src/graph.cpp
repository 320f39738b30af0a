#include "catkit/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "catkit/isomorphism.hpp"
#include "overloaded.hpp"

namespace catkit {

std::size_t OpenGraph::degree(std::size_t node) const {
  std::size_t d = 0;
  for (const auto& w : wires) {
    if (w.a.kind == Endpoint::Kind::spider && w.a.node == node) ++d;
    if (w.b.kind == Endpoint::Kind::spider && w.b.node == node) ++d;
  }
  return d;
}

namespace {

Endpoint flip(Endpoint e) {
  if (e.kind != Endpoint::Kind::spider) e.side = e.side == Side::in ? Side::out : Side::in;
  return e;
}

void flip_node(GraphNode& n) {
  if (n.kind != NodeKind::box) return;
  std::swap(n.inputs, n.outputs);
  n.daggered = !n.daggered;
}

}  // namespace

OpenGraph OpenGraph::flipped() const {
  OpenGraph g = *this;
  for (auto& n : g.nodes) flip_node(n);
  for (auto& w : g.wires) {
    w.a = flip(w.a);
    w.b = flip(w.b);
  }
  std::swap(g.inputs, g.outputs);
  return g;
}

void OpenGraph::validate() const {
  std::vector<std::vector<int>> in_seen(nodes.size()), out_seen(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    in_seen[i].assign(nodes[i].inputs.size(), 0);
    out_seen[i].assign(nodes[i].outputs.size(), 0);
  }
  std::vector<int> bin(inputs.size(), 0), bout(outputs.size(), 0);
  auto mark = [&](const Endpoint& e) {
    switch (e.kind) {
      case Endpoint::Kind::boundary: {
        auto& v = e.side == Side::in ? bin : bout;
        if (e.index >= v.size()) throw std::logic_error("wire attached to a missing boundary position");
        ++v[e.index];
        break;
      }
      case Endpoint::Kind::port: {
        if (e.node >= nodes.size() || nodes[e.node].kind != NodeKind::box)
          throw std::logic_error("wire attached to a missing box");
        auto& v = e.side == Side::in ? in_seen[e.node] : out_seen[e.node];
        if (e.index >= v.size()) throw std::logic_error("wire attached to a missing port");
        ++v[e.index];
        break;
      }
      case Endpoint::Kind::spider:
        if (e.node >= nodes.size() || nodes[e.node].kind != NodeKind::spider)
          throw std::logic_error("wire attached to a missing spider");
        break;
    }
  };
  for (const auto& w : wires) {
    mark(w.a);
    mark(w.b);
  }
  auto all_once = [](const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int c) { return c == 1; });
  };
  if (!all_once(bin) || !all_once(bout)) throw std::logic_error("boundary position without exactly one wire");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!all_once(in_seen[i]) || !all_once(out_seen[i])) throw std::logic_error("box port without exactly one wire");
  }
}

// -- term -> graph -------------------------------------------------------------

namespace {

// Wire construction works on "points": terminals (box ports, spider legs,
// boundary positions) take one connection, relays (pieces of bare wire
// coming from identities, swaps, cups and caps) take two. Tracing relay
// chains afterwards yields the wires and the closed loops.
class Builder {
 public:
  explicit Builder(const Signature& sig) : sig_(sig) {}

  OpenGraph run(const Term& t) {
    const TermType ty = typecheck(t, sig_);
    const Partial p = build(t);
    for (std::size_t i = 0; i < p.ins.size(); ++i) {
      connect(terminal(Endpoint::boundary(Side::in, i), ty.dom[i].atom), p.ins[i]);
    }
    for (std::size_t i = 0; i < p.outs.size(); ++i) {
      connect(p.outs[i], terminal(Endpoint::boundary(Side::out, i), ty.cod[i].atom));
    }
    graph_.inputs = ty.dom.factors();
    graph_.outputs = ty.cod.factors();
    trace();
    return std::move(graph_);
  }

 private:
  struct Point {
    bool terminal = false;
    Endpoint endpoint;
    std::string atom;
    std::vector<std::size_t> edges;
  };
  struct Partial {
    std::vector<std::size_t> ins;
    std::vector<std::size_t> outs;
  };

  std::size_t relay(const std::string& atom) {
    points_.push_back({false, {}, atom, {}});
    return points_.size() - 1;
  }
  std::size_t terminal(Endpoint e, const std::string& atom) {
    points_.push_back({true, e, atom, {}});
    return points_.size() - 1;
  }
  void connect(std::size_t a, std::size_t b) {
    edges_.emplace_back(a, b);
    points_[a].edges.push_back(edges_.size() - 1);
    points_[b].edges.push_back(edges_.size() - 1);
  }

  std::vector<std::size_t> relays(const ObjectWord& w) {
    std::vector<std::size_t> out;
    for (const auto& f : w.factors()) out.push_back(relay(f.atom));
    return out;
  }

  Partial build(const Term& t) {
    using detail::overloaded;
    return std::visit(
        overloaded{
            [&](const term::Gen& g) {
              const GeneratorDecl& decl = sig_.generator(g.name);
              const std::size_t node = graph_.nodes.size();
              graph_.nodes.push_back({NodeKind::box, g.name, false, decl.dom.factors(), decl.cod.factors(), 0});
              Partial p;
              for (std::size_t i = 0; i < decl.dom.size(); ++i)
                p.ins.push_back(terminal(Endpoint::port(node, Side::in, i), decl.dom[i].atom));
              for (std::size_t i = 0; i < decl.cod.size(); ++i)
                p.outs.push_back(terminal(Endpoint::port(node, Side::out, i), decl.cod[i].atom));
              return p;
            },
            [&](const term::Id& i) {
              auto r = relays(i.word);
              return Partial{r, r};
            },
            [&](const term::Seq& s) {
              const Partial first = build(s.before);
              const Partial second = build(s.after);
              if (first.outs.size() != second.ins.size()) throw TypeError("to_graph: arity mismatch in composition");
              for (std::size_t i = 0; i < first.outs.size(); ++i) connect(first.outs[i], second.ins[i]);
              return Partial{first.ins, second.outs};
            },
            [&](const term::Par& par) {
              Partial l = build(par.left);
              const Partial r = build(par.right);
              l.ins.insert(l.ins.end(), r.ins.begin(), r.ins.end());
              l.outs.insert(l.outs.end(), r.outs.begin(), r.outs.end());
              return l;
            },
            [&](const term::Swap& s) {
              const auto l = relays(s.left);
              const auto r = relays(s.right);
              Partial p;
              p.ins = l;
              p.ins.insert(p.ins.end(), r.begin(), r.end());
              p.outs = r;
              p.outs.insert(p.outs.end(), l.begin(), l.end());
              return p;
            },
            [&](const term::Cup& c) {
              const std::size_t r = relay(c.atom);
              return Partial{{}, {r, r}};
            },
            [&](const term::Cap& c) {
              const std::size_t r = relay(c.atom);
              return Partial{{r, r}, {}};
            },
            [&](const term::Dagger& d) {
              const std::size_t first_node = graph_.nodes.size();
              const std::size_t first_point = points_.size();
              const Partial inner = build(d.inner);
              for (std::size_t n = first_node; n < graph_.nodes.size(); ++n) flip_node(graph_.nodes[n]);
              for (std::size_t q = first_point; q < points_.size(); ++q) {
                if (points_[q].terminal) points_[q].endpoint = flip(points_[q].endpoint);
              }
              return Partial{inner.outs, inner.ins};
            },
            [&](const term::Spider& s) {
              const std::size_t node = graph_.nodes.size();
              graph_.nodes.push_back({NodeKind::spider, s.atom, false, {}, {}, 0});
              Partial p;
              for (std::size_t i = 0; i < s.inputs; ++i) p.ins.push_back(terminal(Endpoint::spider_leg(node), s.atom));
              for (std::size_t i = 0; i < s.outputs; ++i)
                p.outs.push_back(terminal(Endpoint::spider_leg(node), s.atom));
              return p;
            },
        },
        t.node().value);
  }

  std::size_t other_end(std::size_t edge, std::size_t from) const {
    const auto [a, b] = edges_[edge];
    return a == from ? b : a;
  }

  void trace() {
    std::vector<bool> used(edges_.size(), false);
    for (std::size_t s = 0; s < points_.size(); ++s) {
      const Point& start = points_[s];
      if (!start.terminal) continue;
      if (start.edges.size() != 1) throw std::logic_error("to_graph: dangling terminal");
      std::size_t edge = start.edges.front();
      if (used[edge]) continue;
      std::size_t cur = other_end(edge, s);
      used[edge] = true;
      while (!points_[cur].terminal) {
        const auto& es = points_[cur].edges;
        edge = es[0] == edge ? es[1] : es[0];
        used[edge] = true;
        cur = other_end(edge, cur);
      }
      graph_.wires.push_back({start.endpoint, points_[cur].endpoint, start.atom});
    }
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (used[e]) continue;
      // A cycle made only of relays.
      std::size_t edge = e;
      std::size_t cur = edges_[e].first;
      const std::string atom = points_[cur].atom;
      while (!used[edge]) {
        used[edge] = true;
        cur = other_end(edge, cur);
        const auto& es = points_[cur].edges;
        edge = es[0] == edge ? es[1] : es[0];
      }
      graph_.loops.push_back(atom);
    }
    std::sort(graph_.loops.begin(), graph_.loops.end());
  }

  const Signature& sig_;
  OpenGraph graph_;
  std::vector<Point> points_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

std::string factor_string(const Factor& f) { return f.dual ? f.atom + "*" : f.atom; }

std::string word_string(const std::vector<Factor>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += factor_string(w[i]);
  }
  return s;
}

std::string side_string(Side s) { return s == Side::in ? "in" : "out"; }

ColoredMultigraph encode(const OpenGraph& g) {
  ColoredMultigraph cg;
  std::vector<std::size_t> node_vertex(g.nodes.size());
  std::vector<std::vector<std::size_t>> in_port(g.nodes.size()), out_port(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const GraphNode& n = g.nodes[i];
    if (n.kind == NodeKind::box) {
      node_vertex[i] = cg.add_vertex("box:" + n.label + (n.daggered ? "+" : "") + ":" + word_string(n.inputs) + "->" +
                                     word_string(n.outputs));
      for (std::size_t p = 0; p < n.inputs.size(); ++p) {
        in_port[i].push_back(cg.add_vertex("port:in:" + std::to_string(p)));
        cg.add_edge(node_vertex[i], in_port[i].back());
      }
      for (std::size_t p = 0; p < n.outputs.size(); ++p) {
        out_port[i].push_back(cg.add_vertex("port:out:" + std::to_string(p)));
        cg.add_edge(node_vertex[i], out_port[i].back());
      }
    } else {
      node_vertex[i] = cg.add_vertex("spider:" + n.label + ":" + std::to_string(n.genus));
    }
  }
  std::vector<std::size_t> bin, bout;
  for (std::size_t i = 0; i < g.inputs.size(); ++i)
    bin.push_back(cg.add_vertex("boundary:in:" + std::to_string(i) + ":" + factor_string(g.inputs[i])));
  for (std::size_t i = 0; i < g.outputs.size(); ++i)
    bout.push_back(cg.add_vertex("boundary:out:" + std::to_string(i) + ":" + factor_string(g.outputs[i])));
  auto vertex_of = [&](const Endpoint& e) -> std::size_t {
    switch (e.kind) {
      case Endpoint::Kind::boundary:
        return e.side == Side::in ? bin.at(e.index) : bout.at(e.index);
      case Endpoint::Kind::port:
        return e.side == Side::in ? in_port.at(e.node).at(e.index) : out_port.at(e.node).at(e.index);
      case Endpoint::Kind::spider:
        break;
    }
    return node_vertex.at(e.node);
  };
  for (const Wire& w : g.wires) {
    const std::size_t wv = cg.add_vertex("wire:" + w.atom);
    cg.add_edge(wv, vertex_of(w.a));
    cg.add_edge(wv, vertex_of(w.b));
  }
  return cg;
}

}  // namespace

OpenGraph to_graph(const Term& t, const Signature& sig) { return Builder(sig).run(t); }

bool graph_eq(const OpenGraph& a, const OpenGraph& b) {
  if (a.inputs != b.inputs || a.outputs != b.outputs) return false;
  if (a.nodes.size() != b.nodes.size() || a.wires.size() != b.wires.size()) return false;
  auto la = a.loops, lb = b.loops;
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  if (la != lb) return false;
  return are_isomorphic(encode(a), encode(b));
}

std::string to_string(const OpenGraph& g) {
  std::ostringstream os;
  os << "inputs [" << word_string(g.inputs) << "] outputs [" << word_string(g.outputs) << "]\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& n = g.nodes[i];
    if (n.kind == NodeKind::box) {
      os << "  node " << i << ": box " << n.label << (n.daggered ? "+" : "") << " [" << word_string(n.inputs)
         << "] -> [" << word_string(n.outputs) << "]\n";
    } else {
      os << "  node " << i << ": spider " << n.label << " degree " << g.degree(i) << " genus " << n.genus << "\n";
    }
  }
  auto ep = [](const Endpoint& e) {
    switch (e.kind) {
      case Endpoint::Kind::boundary:
        return "boundary." + side_string(e.side) + "[" + std::to_string(e.index) + "]";
      case Endpoint::Kind::port:
        return "node" + std::to_string(e.node) + "." + side_string(e.side) + "[" + std::to_string(e.index) + "]";
      case Endpoint::Kind::spider:
        break;
    }
    return "node" + std::to_string(e.node);
  };
  for (const auto& w : g.wires) os << "  wire " << w.atom << ": " << ep(w.a) << " -- " << ep(w.b) << "\n";
  for (const auto& l : g.loops) os << "  loop " << l << "\n";
  return os.str();
}

}  // namespace catkit
