#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catkit/frobenius.hpp"
#include "catkit/parser.hpp"
#include "support.hpp"

using namespace catkit;
using namespace catkit::testing;

namespace {

const char* kCob = R"(
  object A frobenius;
  delta = spider(A, 1, 2);
  eps = spider(A, 1, 0);
  mu = spider(A, 2, 1);
  e = spider(A, 0, 1);
  cyl = id(A);
  handle = delta >> mu;
  torus = e >> delta >> mu >> eps;
  sphere = e >> eps;
  genus2 = e >> delta >> mu >> delta >> mu >> eps;
  pants_left = (delta x id(A)) >> (id(A) x mu);
  pants_right = (id(A) x delta) >> (mu x id(A));
  pants_mid = mu >> delta;
  twist2 = swap(A, A) >> swap(A, A);
  idAA = id(A x A);
  counit_leg = delta >> (id(A) x eps);
  bare_loop = cup(A) >> cap(A);
  comm = swap(A, A) >> mu;
  cocomm = delta >> swap(A, A);
  cap_only = cap(A);
  two = cyl x torus;
)";

SpiderGraph fused(const Program& p, const std::string& name, bool special) {
  return fuse(spiderize(to_graph(p.diagram(name).term, p.signature), p.signature), special);
}

CobordismClass cls(const Program& p, const std::string& name) { return classify_cob(p.diagram(name).term, p.signature); }

}  // namespace

TEST_CASE("spiderize and fuse: arities") {
  const Program p = parse(kCob);
  const auto d = fused(p, "delta", false);
  REQUIRE(d.nodes.size() == 1);
  CHECK(d.nodes[0].kind == NodeKind::spider);
  CHECK(d.degree(0) == 3);
  CHECK(d.nodes[0].genus == 0);
  CHECK(d.inputs.size() == 1);
  CHECK(d.outputs.size() == 2);

  const auto c = fused(p, "cap_only", false);
  CHECK(c.nodes.empty());
  CHECK(c.wires.size() == 1);

  // The counit leg fuses to a plain wire.
  CHECK(graph_eq(fused(p, "counit_leg", false), fused(p, "cyl", false)));
  CHECK(fused(p, "cyl", false).nodes.empty());
}

TEST_CASE("spiderize leaves other atoms alone") {
  const Program p = parse("object A frobenius; object B; gen f : A -> B; d = spider(A, 1, 2) >> (f x id(A)); l = cup(B) >> swap(B*, B) >> cap(B);");
  const auto g = spiderize(to_graph(p.diagram("d").term, p.signature), p.signature);
  const auto n = fuse(g, false);
  std::size_t boxes = 0, spiders = 0;
  for (const auto& node : n.nodes) (node.kind == NodeKind::box ? boxes : spiders) += 1;
  CHECK(boxes == 1);
  CHECK(spiders == 1);
  const auto l = spiderize(to_graph(p.diagram("l").term, p.signature), p.signature);
  CHECK(l.loops == std::vector<std::string>{"B"});
  CHECK(l.nodes.empty());
}

TEST_CASE("fuse: the handle") {
  const Program p = parse(kCob);
  // Special: μ∘δ is the identity.
  CHECK(graph_eq(fused(p, "handle", true), fused(p, "cyl", true)));
  // Non-special: one (1,1) spider of genus 1.
  const auto h = fused(p, "handle", false);
  REQUIRE(h.nodes.size() == 1);
  CHECK(h.degree(0) == 2);
  CHECK(h.nodes[0].genus == 1);
  CHECK_FALSE(graph_eq(h, fused(p, "cyl", false)));
  CHECK(is_normal(h));
}

TEST_CASE("fuse: Frobenius law") {
  const Program p = parse(kCob);
  for (bool special : {false, true}) {
    CHECK(graph_eq(fused(p, "pants_left", special), fused(p, "pants_mid", special)));
    CHECK(graph_eq(fused(p, "pants_right", special), fused(p, "pants_mid", special)));
  }
  CHECK(graph_eq(fused(p, "comm", false), fused(p, "mu", false)));
  CHECK(graph_eq(fused(p, "cocomm", false), fused(p, "delta", false)));
}

TEST_CASE("fuse: no adjacent spiders remain") {
  Rng rng(31);
  const Signature sig = cob_signature();
  for (int trial = 0; trial < 100; ++trial) {
    const Term t = random_cob(rng, pick(rng, 3), 8, 4, true);
    const auto g = fuse(spiderize(to_graph(t, sig), sig), trial % 2 == 0);
    CHECK(is_normal(g));
    for (const auto& w : g.wires) {
      CHECK_FALSE((w.a.kind == Endpoint::Kind::spider && w.b.kind == Endpoint::Kind::spider));
    }
  }
}

TEST_CASE("fuse is confluent under random orders") {
  Rng rng(32);
  const Signature sig = cob_signature();
  for (int trial = 0; trial < 40; ++trial) {
    const Term t = random_cob(rng, pick(rng, 3), 12, 5, true);
    const auto g = spiderize(to_graph(t, sig), sig);
    for (bool special : {false, true}) {
      const auto reference = fuse(g, special);
      for (std::uint64_t seed = 1; seed <= 20; ++seed) CHECK(graph_eq(fuse(g, special, seed), reference));
    }
  }
}

TEST_CASE("classify: examples") {
  const Program p = parse(kCob);
  const auto cyl = cls(p, "cyl");
  REQUIRE(cyl.components.size() == 1);
  CHECK(cyl.components[0] == ComponentClass{{0}, {0}, 0});
  CHECK(to_string(cyl) == "component(in=[0], out=[0], genus=0)\n");

  CHECK(to_string(cls(p, "torus")) == "component(in=[], out=[], genus=1)\n");
  CHECK(to_string(cls(p, "sphere")) == "component(in=[], out=[], genus=0)\n");
  CHECK(to_string(cls(p, "genus2")) == "component(in=[], out=[], genus=2)\n");
  CHECK(to_string(cls(p, "handle")) == "component(in=[0], out=[0], genus=1)\n");
  // A bare circle closed by the Frobenius cup and cap is a torus.
  CHECK(cls(p, "bare_loop") == cls(p, "torus"));

  const auto two = cls(p, "two");
  REQUIRE(two.components.size() == 2);
  CHECK(two.components[0] == ComponentClass{{}, {}, 1});
  CHECK(two.components[1] == ComponentClass{{0}, {0}, 0});

  const auto tw = cls(p, "twist2");
  REQUIRE(tw.components.size() == 2);
  CHECK(tw.components[0] == ComponentClass{{0}, {0}, 0});
  CHECK(tw.components[1] == ComponentClass{{1}, {1}, 0});
  CHECK(to_string(cls(p, "pants_mid")) == "component(in=[0, 1], out=[0, 1], genus=0)\n");
}

TEST_CASE("classify: disjoint union is a multiset union") {
  Rng rng(33);
  const Signature sig = cob_signature();
  for (int trial = 0; trial < 50; ++trial) {
    const Term a = random_cob(rng, pick(rng, 3), 6);
    const Term b = random_cob(rng, pick(rng, 3), 6);
    const auto ca = classify_cob(a, sig), cb = classify_cob(b, sig), cab = classify_cob(Term::par(a, b), sig);
    const auto ta = typecheck(a, sig);
    std::vector<ComponentClass> expected = ca.components;
    for (auto c : cb.components) {
      for (auto& i : c.inputs) i += ta.dom.size();
      for (auto& o : c.outputs) o += ta.cod.size();
      expected.push_back(c);
    }
    std::sort(expected.begin(), expected.end());
    CHECK(cab.components == expected);
  }
}

TEST_CASE("eq_cob") {
  const Program p = parse(kCob);
  auto eq = [&](const char* a, const char* b) { return eq_cob(p.diagram(a).term, p.diagram(b).term, p.signature); };
  CHECK(eq("pants_left", "pants_right"));
  CHECK(eq("pants_left", "pants_mid"));
  CHECK_FALSE(eq("cyl", "handle"));
  CHECK(eq("twist2", "idAA"));
  CHECK(eq("comm", "mu"));
  CHECK_THROWS_AS(eq("cyl", "mu"), TypeError);
  const Program q = parse("object A frobenius; gen f : A -> A; d = f;");
  CHECK_THROWS_AS(classify_cob(q.diagram("d").term, q.signature), Unsupported);
  const Program r = parse("object A frobenius; object B frobenius; d = id(A x B);");
  CHECK_THROWS_AS(classify_cob(r.diagram("d").term, r.signature), Unsupported);
}

TEST_CASE("classify is invariant under axiom rewrites and double dagger") {
  Rng rng(34);
  const Signature sig = cob_signature();
  for (int trial = 0; trial < 200; ++trial) {
    const Term t = random_cob(rng, pick(rng, 3), 1 + static_cast<int>(pick(rng, 8)), 4, true);
    const Term r = random_cob_rewrites(t, sig, rng, 1 + static_cast<int>(pick(rng, 6)));
    CAPTURE(t.to_string());
    CAPTURE(r.to_string());
    const auto c = classify_cob(t, sig);
    CHECK(classify_cob(r, sig) == c);
    CHECK(classify_cob(Term::dagger(Term::dagger(t)), sig) == c);
    // The dagger mirrors every component.
    auto mirrored = c;
    for (auto& comp : mirrored.components) std::swap(comp.inputs, comp.outputs);
    std::sort(mirrored.components.begin(), mirrored.components.end());
    CHECK(classify_cob(Term::dagger(t), sig) == mirrored);
  }
}

TEST_CASE("swapping a spider's inputs changes nothing") {
  Rng rng(35);
  const Signature sig = cob_signature();
  for (std::size_t k = 2; k <= 4; ++k) {
    for (std::size_t l = 0; l <= 3; ++l) {
      const Term s = Term::spider("A", k, l);
      const std::size_t at = pick(rng, k - 1);
      Term sw = Term::swap(wires(1), wires(1));
      if (at > 0) sw = Term::par(Term::id(wires(at)), sw);
      if (at + 2 < k) sw = Term::par(sw, Term::id(wires(k - at - 2)));
      const auto a = fuse(spiderize(to_graph(Term::seq(s, sw), sig), sig), false);
      const auto b = fuse(spiderize(to_graph(s, sig), sig), false);
      CHECK(graph_eq(a, b));
    }
  }
}
