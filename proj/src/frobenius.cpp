#include "catkit/frobenius.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "overloaded.hpp"

namespace catkit {

namespace {

bool on_spider(const Endpoint& e) { return e.kind == Endpoint::Kind::spider; }

void remove_node(SpiderGraph& g, std::size_t idx) {
  g.nodes.erase(g.nodes.begin() + static_cast<long>(idx));
  for (auto& w : g.wires) {
    for (Endpoint* e : {&w.a, &w.b}) {
      if (e->kind != Endpoint::Kind::boundary && e->node > idx) --e->node;
    }
  }
}

void erase_wire(SpiderGraph& g, std::size_t w) { g.wires.erase(g.wires.begin() + static_cast<long>(w)); }

// Wires touching each spider, one entry per end (a self-loop appears twice).
std::vector<std::vector<std::size_t>> spider_ends(const SpiderGraph& g) {
  std::vector<std::vector<std::size_t>> ends(g.nodes.size());
  for (std::size_t w = 0; w < g.wires.size(); ++w) {
    if (on_spider(g.wires[w].a)) ends[g.wires[w].a.node].push_back(w);
    if (on_spider(g.wires[w].b)) ends[g.wires[w].b.node].push_back(w);
  }
  return ends;
}

}  // namespace

SpiderGraph spiderize(const OpenGraph& g, const Signature& sig) {
  SpiderGraph out = g;
  out.wires.clear();
  out.loops.clear();
  auto add_spider = [&](const std::string& atom) {
    out.nodes.push_back({NodeKind::spider, atom, false, {}, {}, 0});
    return out.nodes.size() - 1;
  };
  for (const auto& w : g.wires) {
    if (!sig.is_frobenius(w.atom)) {
      out.wires.push_back(w);
      continue;
    }
    const std::size_t s = add_spider(w.atom);
    out.wires.push_back({w.a, Endpoint::spider_leg(s), w.atom});
    out.wires.push_back({Endpoint::spider_leg(s), w.b, w.atom});
  }
  for (const auto& atom : g.loops) {
    if (!sig.is_frobenius(atom)) {
      out.loops.push_back(atom);
      continue;
    }
    const std::size_t s = add_spider(atom);
    out.wires.push_back({Endpoint::spider_leg(s), Endpoint::spider_leg(s), atom});
  }
  return out;
}

std::vector<Redex> redexes(const SpiderGraph& g) {
  std::vector<Redex> out;
  for (std::size_t w = 0; w < g.wires.size(); ++w) {
    const Wire& x = g.wires[w];
    if (!on_spider(x.a) || !on_spider(x.b)) continue;
    if (x.a.node == x.b.node) {
      out.push_back({Redex::Kind::self_loop, w});
    } else if (g.nodes[x.a.node].label == g.nodes[x.b.node].label) {
      out.push_back({Redex::Kind::merge, w});
    }
  }
  const auto ends = spider_ends(g);
  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    if (g.nodes[n].kind != NodeKind::spider || g.nodes[n].genus != 0) continue;
    if (ends[n].size() == 2 && ends[n][0] != ends[n][1]) out.push_back({Redex::Kind::elide, n});
  }
  return out;
}

void apply(SpiderGraph& g, const Redex& r, bool special) {
  switch (r.kind) {
    case Redex::Kind::self_loop: {
      const std::size_t s = g.wires.at(r.index).a.node;
      erase_wire(g, r.index);
      if (!special) ++g.nodes[s].genus;
      return;
    }
    case Redex::Kind::merge: {
      const Wire w = g.wires.at(r.index);
      const std::size_t keep = std::min(w.a.node, w.b.node);
      const std::size_t gone = std::max(w.a.node, w.b.node);
      erase_wire(g, r.index);
      g.nodes[keep].genus += g.nodes[gone].genus;
      for (auto& x : g.wires) {
        for (Endpoint* e : {&x.a, &x.b}) {
          if (on_spider(*e) && e->node == gone) e->node = keep;
        }
      }
      remove_node(g, gone);
      return;
    }
    case Redex::Kind::elide: {
      const auto ends = spider_ends(g).at(r.index);
      if (ends.size() != 2 || ends[0] == ends[1]) throw std::logic_error("elide: not a degree-2 spider");
      auto other = [&](std::size_t w) {
        const Wire& x = g.wires[w];
        return on_spider(x.a) && x.a.node == r.index ? x.b : x.a;
      };
      const Wire joined{other(ends[0]), other(ends[1]), g.wires[ends[0]].atom};
      erase_wire(g, std::max(ends[0], ends[1]));
      erase_wire(g, std::min(ends[0], ends[1]));
      g.wires.push_back(joined);
      remove_node(g, r.index);
      return;
    }
  }
}

SpiderGraph fuse(SpiderGraph g, bool special, std::optional<std::uint64_t> seed) {
  std::optional<std::mt19937_64> rng;
  if (seed) rng.emplace(*seed);
  for (;;) {
    const auto rs = redexes(g);
    if (rs.empty()) return g;
    std::size_t pick = 0;
    if (rng) pick = std::uniform_int_distribution<std::size_t>(0, rs.size() - 1)(*rng);
    apply(g, rs[pick], special);
  }
}

bool is_normal(const SpiderGraph& g) { return redexes(g).empty(); }

std::string to_string(const ComponentClass& c) {
  auto list = [](const std::vector<std::size_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "]";
  };
  return "component(in=" + list(c.inputs) + ", out=" + list(c.outputs) + ", genus=" + std::to_string(c.genus) + ")";
}

std::string to_string(const CobordismClass& c) {
  std::string out;
  for (const auto& comp : c.components) out += to_string(comp) + "\n";
  return out;
}

namespace {

void collect_atoms(const Term& t, const Signature& sig, std::set<std::string>& atoms) {
  auto word = [&](const ObjectWord& w) {
    for (const auto& f : w.factors()) atoms.insert(f.atom);
  };
  std::visit(detail::overloaded{
                 [&](const term::Gen& g) { throw Unsupported("not a cobordism: generator '" + g.name + "'"); },
                 [&](const term::Id& x) { word(x.word); },
                 [&](const term::Seq& x) {
                   collect_atoms(x.after, sig, atoms);
                   collect_atoms(x.before, sig, atoms);
                 },
                 [&](const term::Par& x) {
                   collect_atoms(x.left, sig, atoms);
                   collect_atoms(x.right, sig, atoms);
                 },
                 [&](const term::Swap& x) {
                   word(x.left);
                   word(x.right);
                 },
                 [&](const term::Cup& x) { atoms.insert(x.atom); },
                 [&](const term::Cap& x) { atoms.insert(x.atom); },
                 [&](const term::Dagger& x) { collect_atoms(x.inner, sig, atoms); },
                 [&](const term::Spider& x) { atoms.insert(x.atom); },
             },
             t.node().value);
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

CobordismClass classify_cob(const Term& t, const Signature& sig) {
  const TermType ty = typecheck(t, sig);
  std::set<std::string> atoms;
  collect_atoms(t, sig, atoms);
  if (atoms.size() > 1) throw Unsupported("not a cobordism: more than one atom");
  CobordismClass out;
  if (!atoms.empty()) {
    out.atom = *atoms.begin();
    if (!sig.is_frobenius(out.atom)) throw Unsupported("not a cobordism: '" + out.atom + "' is not frobenius");
  }

  const SpiderGraph g = fuse(spiderize(to_graph(t, sig), sig), false);
  // Points: spiders, then input boundary, then output boundary.
  const std::size_t n_nodes = g.nodes.size();
  const std::size_t n_in = ty.dom.size(), n_out = ty.cod.size();
  auto point = [&](const Endpoint& e) -> std::size_t {
    if (e.kind == Endpoint::Kind::spider) return e.node;
    if (e.kind == Endpoint::Kind::boundary) return n_nodes + (e.side == Side::in ? 0 : n_in) + e.index;
    throw std::logic_error("classify_cob: box port in a cobordism");
  };
  const std::size_t n_points = n_nodes + n_in + n_out;
  UnionFind uf(n_points);
  for (const auto& w : g.wires) uf.unite(point(w.a), point(w.b));

  std::map<std::size_t, ComponentClass> comps;
  std::map<std::size_t, long> euler;  // vertices - edges
  for (std::size_t p = 0; p < n_points; ++p) {
    const std::size_t root = uf.find(p);
    auto& c = comps[root];
    euler[root] += 1;
    if (p < n_nodes) {
      c.genus += g.nodes[p].genus;
    } else if (p < n_nodes + n_in) {
      c.inputs.push_back(p - n_nodes);
    } else {
      c.outputs.push_back(p - n_nodes - n_in);
    }
  }
  for (const auto& w : g.wires) euler[uf.find(point(w.a))] -= 1;
  for (auto& [root, c] : comps) {
    c.genus += static_cast<std::size_t>(1 - euler[root]);  // cycle rank
    out.components.push_back(std::move(c));
  }
  std::sort(out.components.begin(), out.components.end());
  return out;
}

bool eq_cob(const Term& a, const Term& b, const Signature& sig) {
  const TermType ta = typecheck(a, sig), tb = typecheck(b, sig);
  if (!(ta == tb)) {
    throw TypeError("boundary types differ: " + ta.dom.to_string() + " -> " + ta.cod.to_string() + " vs " +
                    tb.dom.to_string() + " -> " + tb.cod.to_string());
  }
  return classify_cob(a, sig) == classify_cob(b, sig);
}

}  // namespace catkit
