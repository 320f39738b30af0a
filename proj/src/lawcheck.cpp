#include "catkit/lawcheck.hpp"

#include <map>
#include <set>

#include "catkit/error.hpp"
#include "catkit/random.hpp"

namespace catkit {

Structures Structures::standard() {
  return {swap_matrix, unit_eta, counit_eps, basis_frobenius};
}

Structures Structures::transposed_swap() {
  Structures s = standard();
  s.swap = [](std::size_t n, std::size_t m, SemiringTag tag) { return swap_matrix(m, n, tag); };
  return s;
}

namespace {

std::string dims(std::initializer_list<std::size_t> ds) {
  std::string s = "dims (";
  bool first = true;
  for (std::size_t d : ds) {
    s += (first ? "" : ",") + std::to_string(d);
    first = false;
  }
  return s + ")";
}

Matrix inv_assoc(std::size_t a, std::size_t b, std::size_t c, SemiringTag tag) { return dagger(assoc_iso(a, b, c, tag)); }

Matrix scalar_matrix(const ScalarValue& s, SemiringTag tag) {
  Matrix m(tag, 1, 1);
  m.set(0, 0, s);
  return m;
}

const std::string kCoherence = "monoidal coherence";
const std::string kCompact = "compact structure";
const std::string kNaturality = "naturality";
const std::string kScalars = "scalars";
const std::string kBiproducts = "biproducts";
const std::string kFrobenius = "frobenius";
const std::string kHopf = "hopf";
const std::string kNoCloning = "no-cloning";
const std::string kRelProducts = "rel products";

}  // namespace

LawReport check_coherence(SemiringTag tag, std::size_t max_dim, const Structures& s) {
  if (max_dim > 5) throw PreconditionError("check_coherence: dimensions above 5 are not supported");
  const double tol = tag.tolerance;
  Equation pentagon("pentagon", kCoherence, tol), triangle("triangle", kCoherence, tol),
      units("unit coherence", kCoherence, tol), involution("symmetry involution", kCoherence, tol),
      sym_unit("symmetry unit", kCoherence, tol), hexagon("hexagon", kCoherence, tol);
  const std::size_t n = max_dim + 1;
  auto id = [&](std::size_t d) { return identity(d, tag); };

  units.compare(left_unit_iso(1, tag), right_unit_iso(1, tag));
  for (std::size_t a = 0; a < n; ++a) {
    sym_unit.compare(compose(s.swap(1, a, tag), left_unit_iso(a, tag)), right_unit_iso(a, tag), dims({a}));
    for (std::size_t b = 0; b < n; ++b) {
      involution.compare(compose(s.swap(b, a, tag), s.swap(a, b, tag)), id(a * b), dims({a, b}));
      triangle.compare(tensor(right_unit_iso(a, tag), id(b)),
                       compose(assoc_iso(a, 1, b, tag), tensor(id(a), left_unit_iso(b, tag))), dims({a, b}));
      for (std::size_t c = 0; c < n; ++c) {
        const std::string at = dims({a, b, c});
        hexagon.compare(compose(inv_assoc(b, c, a, tag), compose(s.swap(a, b * c, tag), inv_assoc(a, b, c, tag))),
                        compose(tensor(id(b), s.swap(a, c, tag)),
                                compose(inv_assoc(b, a, c, tag), tensor(s.swap(a, b, tag), id(c)))),
                        at);
        hexagon.compare(compose(assoc_iso(c, a, b, tag), compose(s.swap(a * b, c, tag), assoc_iso(a, b, c, tag))),
                        compose(tensor(s.swap(a, c, tag), id(b)),
                                compose(assoc_iso(a, c, b, tag), tensor(id(a), s.swap(b, c, tag)))),
                        at);
        for (std::size_t d = 0; d < n; ++d) {
          pentagon.compare(
              [&] { return compose(assoc_iso(a * b, c, d, tag), assoc_iso(a, b, c * d, tag)); },
              [&] {
                return compose(tensor(assoc_iso(a, b, c, tag), id(d)),
                               compose(assoc_iso(a, b * c, d, tag), tensor(id(a), assoc_iso(b, c, d, tag))));
              },
              dims({a, b, c, d}));
        }
      }
    }
  }
  LawReport r;
  for (const Equation* e : {&pentagon, &triangle, &units, &involution, &sym_unit, &hexagon}) e->commit(r);
  return r;
}

LawReport check_compact_structure(SemiringTag tag, std::size_t max_dim, std::uint64_t seed, const Structures& s) {
  const double tol = tag.tolerance;
  Equation left("snake left", kCompact, tol), right("snake right", kCompact, tol),
      circ("circle dimension", kCompact, tol), dag("dagger compactness", kCompact, tol),
      slide("transpose sliding", kCompact, tol);
  Rng rng(seed);
  for (std::size_t n = 0; n <= max_dim; ++n) {
    const Matrix id = identity(n, tag), eta = s.eta(n, tag), eps = s.eps(n, tag);
    const std::string at = dims({n});
    // η : I -> A*⊗A, ε : A⊗A* -> I.
    left.compare([&] { return compose(tensor(eps, id), tensor(id, eta)); }, [&] { return id; }, at);
    right.compare([&] { return compose(tensor(id, eps), tensor(eta, id)); }, [&] { return id; }, at);
    circ.compare([&] { return compose(eps, compose(s.swap(n, n, tag), eta)); },
                 [&] { return scalar_matrix(circle(n, tag), tag); }, at);
    dag.compare([&] { return dagger(eta); }, [&] { return compose(eps, s.swap(n, n, tag)); }, at);
    for (std::size_t m = 0; m <= max_dim; ++m) {
      const Matrix f = random_matrix(tag, m, n, rng);
      const Matrix idm = identity(m, tag);
      // f* : B* -> A*, built from the compact structure.
      slide.compare(
          [&] { return compose(tensor(id, f), eta); },
          [&] {
            const Matrix star = compose(tensor(id, s.eps(m, tag)),
                                        compose(tensor(tensor(id, f), idm), tensor(eta, idm)));
            return compose(tensor(star, idm), s.eta(m, tag));
          },
          dims({n, m}));
    }
  }
  LawReport r;
  for (const Equation* e : {&left, &right, &circ, &dag, &slide}) e->commit(r);
  return r;
}

LawReport check_naturality_squares(const Interpretation& in, std::size_t samples, std::uint64_t seed,
                                   const Structures& s) {
  const SemiringTag tag = in.tag;
  const double tol = tag.tolerance;
  Equation sym("symmetry naturality", kNaturality, tol), assoc("associator naturality", kNaturality, tol),
      lu("left unitor naturality", kNaturality, tol), ru("right unitor naturality", kNaturality, tol);

  auto square = [&](const Matrix& f, const Matrix& g, const Matrix& h, const std::string& where) {
    const std::size_t a = f.cols(), c = f.rows(), b = g.cols(), d = g.rows();
    sym.compare([&] { return compose(s.swap(c, d, tag), tensor(f, g)); },
                [&] { return compose(tensor(g, f), s.swap(a, b, tag)); }, where);
    assoc.compare([&] { return compose(assoc_iso(c, d, h.rows(), tag), tensor(f, tensor(g, h))); },
                  [&] { return compose(tensor(tensor(f, g), h), assoc_iso(a, b, h.cols(), tag)); }, where);
    lu.compare([&] { return compose(left_unit_iso(c, tag), f); },
               [&] { return compose(tensor(identity(1, tag), f), left_unit_iso(a, tag)); }, where);
    ru.compare([&] { return compose(right_unit_iso(c, tag), f); },
               [&] { return compose(tensor(f, identity(1, tag)), right_unit_iso(a, tag)); }, where);
  };

  std::vector<std::pair<std::string, Matrix>> named(in.generators.begin(), in.generators.end());
  if (named.size() > 6) named.resize(6);
  for (const auto& [fn, f] : named)
    for (const auto& [gn, g] : named)
      for (const auto& [hn, h] : named) square(f, g, h, "f=" + fn + ", g=" + gn + ", h=" + hn);

  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> dim(1, 3);
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t a = dim(rng), b = dim(rng), c = dim(rng), d = dim(rng), e = dim(rng), k = dim(rng);
    square(random_matrix(tag, c, a, rng), random_matrix(tag, d, b, rng), random_matrix(tag, k, e, rng),
           "sample " + std::to_string(i) + " " + dims({a, b, e}) + " -> " + dims({c, d, k}));
  }
  LawReport r;
  for (const Equation* x : {&sym, &assoc, &lu, &ru}) x->commit(r);
  r.seed = seed;
  return r;
}

LawReport check_scalar_laws(SemiringTag tag, std::size_t samples, std::uint64_t seed) {
  const double tol = tag.tolerance;
  Equation comm("scalar commutativity", kScalars, tol), tens("scalar tensor", kScalars, tol),
      mult("scalar multiple", kScalars, tol), comp("scalar multiple composition", kScalars, tol),
      par("scalar multiple tensor", kScalars, tol);
  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> dim(0, 3);
  for (std::size_t i = 0; i < samples; ++i) {
    const std::string at = "sample " + std::to_string(i);
    const ScalarValue sv = random_scalar(tag, rng), tv = random_scalar(tag, rng);
    const Matrix sm = scalar_matrix(sv, tag), tm = scalar_matrix(tv, tag);
    const std::size_t a = dim(rng), b = dim(rng), c = dim(rng), d = dim(rng);
    const Matrix f = random_matrix(tag, b, a, rng), g = random_matrix(tag, c, b, rng), h = random_matrix(tag, d, c, rng);
    comm.compare(compose(sm, tm), compose(tm, sm), at);
    tens.compare(tensor(sm, tm), compose(sm, tm), at);
    mult.compare(scalar_multiple(sv, f),
                 compose(dagger(left_unit_iso(b, tag)), compose(tensor(sm, f), left_unit_iso(a, tag))), at);
    const ScalarValue st = compose(tm, sm).at(0, 0);
    comp.compare(compose(scalar_multiple(tv, g), scalar_multiple(sv, f)), scalar_multiple(st, compose(g, f)), at);
    par.compare(tensor(scalar_multiple(sv, f), scalar_multiple(tv, h)),
                scalar_multiple(compose(sm, tm).at(0, 0), tensor(f, h)), at);
  }
  LawReport r;
  for (const Equation* x : {&comm, &tens, &mult, &comp, &par}) x->commit(r);
  r.seed = seed;
  return r;
}

LawReport check_biproducts(SemiringTag tag, std::size_t max_total, std::uint64_t seed) {
  const double tol = tag.tolerance;
  Equation pi("projection-injection", kBiproducts, tol), sum("injection-projection sum", kBiproducts, tol),
      pairing("pairing", kBiproducts, tol), copairing("copairing", kBiproducts, tol),
      addition("biproduct addition", kBiproducts, tol), dist("distributor inverse", kBiproducts, tol);
  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> dim(0, 3);
  for (std::size_t a = 0; a <= max_total; ++a) {
    for (std::size_t b = 0; a + b <= max_total; ++b) {
      const std::string at = dims({a, b});
      const BlockIndex i1{1, {a, b}}, i2{2, {a, b}};
      const Matrix p1 = projection(i1, tag), p2 = projection(i2, tag);
      const Matrix j1 = injection(i1, tag), j2 = injection(i2, tag);
      pi.compare(compose(p1, j1), identity(a, tag), at);
      pi.compare(compose(p2, j2), identity(b, tag), at);
      pi.compare(compose(p1, j2), zero_matrix(a, b, tag), at);
      pi.compare(compose(p2, j1), zero_matrix(b, a, tag), at);
      sum.compare(add(compose(j1, p1), compose(j2, p2)), identity(a + b, tag), at);

      const std::size_t x = dim(rng);
      const Matrix f = random_matrix(tag, a, x, rng), g = random_matrix(tag, b, x, rng);
      pairing.compare(compose(p1, pair(f, g)), f, at);
      pairing.compare(compose(p2, pair(f, g)), g, at);
      const Matrix u = random_matrix(tag, x, a, rng), v = random_matrix(tag, x, b, rng);
      copairing.compare(compose(copair(u, v), j1), u, at);
      copairing.compare(compose(copair(u, v), j2), v, at);
      const Matrix h = random_matrix(tag, a, b, rng), k = random_matrix(tag, a, b, rng);
      addition.compare(compose(codiag_biprod(a, tag), compose(direct_sum(h, k), diag_biprod(b, tag))), add(h, k), at);
      if (a <= 3 && b <= 3) {
        for (std::size_t n = 0; n <= 3; ++n) {
          const Matrix t = distributor(n, a, b, tag);
          dist.compare(compose(dagger(t), t), identity(n * (a + b), tag), dims({n, a, b}));
        }
      }
    }
  }
  LawReport r;
  for (const Equation* e : {&pi, &sum, &pairing, &copairing, &addition, &dist}) e->commit(r);
  r.seed = seed;
  return r;
}

LawReport check_frobenius_family(const std::vector<std::pair<std::string, FrobeniusPresentation>>& family) {
  // Keep first-seen order of law names.
  std::vector<std::string> order;
  std::map<std::string, LawEntry> folded;
  for (const auto& [label, p] : family) {
    for (const auto& e : verify_frobenius(p).entries) {
      auto it = folded.find(e.name);
      if (it == folded.end()) {
        order.push_back(e.name);
        LawEntry first = e;
        if (first.witness) first.witness = label + ": " + *first.witness;
        folded.emplace(e.name, std::move(first));
        continue;
      }
      LawEntry& acc = it->second;
      if (!e.pass && !acc.witness && e.witness) acc.witness = label + ": " + *e.witness;
      acc.pass = acc.pass && e.pass;
      acc.max_deviation = std::max(acc.max_deviation, e.max_deviation);
    }
  }
  LawReport r;
  for (const auto& name : order) r.entries.push_back(folded.at(name));
  return r;
}

LawReport check_hopf_bialgebra(const FrobeniusPresentation& p, const Matrix& antipode) {
  if (antipode.rows() != p.dim || antipode.cols() != p.dim)
    throw TypeError("antipode is " + antipode.shape_string() + " but the structure has dimension " +
                    std::to_string(p.dim));
  const SemiringTag tag = p.tag();
  const double tol = tag.tolerance;
  const Matrix id = identity(p.dim, tag);
  const Matrix unit_counit = compose(p.unit, p.eps);
  LawReport r;
  auto law = [&](const std::string& name, const std::function<Matrix()>& lhs, const std::function<Matrix()>& rhs) {
    Equation eq(name, kHopf, tol);
    eq.compare(lhs, rhs);
    eq.commit(r);
  };
  law("hopf left", [&] { return compose(p.mu, compose(tensor(antipode, id), p.delta)); }, [&] { return unit_counit; });
  law("hopf right", [&] { return compose(p.mu, compose(tensor(id, antipode), p.delta)); }, [&] { return unit_counit; });
  law("bialgebra multiplication", [&] { return compose(p.delta, p.mu); },
      [&] {
        const Matrix middle = tensor(tensor(id, swap_matrix(p.dim, p.dim, tag)), id);
        return compose(tensor(p.mu, p.mu), compose(middle, tensor(p.delta, p.delta)));
      });
  law("bialgebra counit", [&] { return compose(p.eps, p.mu); }, [&] { return tensor(p.eps, p.eps); });
  law("bialgebra unit", [&] { return compose(p.delta, p.unit); }, [&] { return tensor(p.unit, p.unit); });
  r.note("counit of unit", kHopf, "value " + to_string(compose(p.eps, p.unit).at(0, 0)));
  return r;
}

HopfData z2_group_algebra(SemiringTag tag) {
  HopfData h;
  auto& p = h.structure;
  p.dim = 2;
  p.delta = zero_matrix(4, 2, tag);
  for (std::size_t g = 0; g < 2; ++g)
    for (std::size_t k = 0; k < 2; ++k) p.delta.set(g * 2 + (g ^ k), k, one(tag));
  p.mu = dagger(basis_frobenius(2, tag).delta);
  p.eps = Matrix::from_rows(tag, std::vector<std::vector<double>>{{1, 0}});
  p.unit = Matrix::from_rows(tag, std::vector<std::vector<double>>{{1}, {1}});
  p.special = p.dagger = false;
  h.antipode = identity(2, tag);
  return h;
}

namespace {

std::string pair_set(const Matrix& column_state) {
  std::string s = "{";
  bool first = true;
  for (std::size_t r = 0; r < column_state.rows(); ++r) {
    if (column_state.at(r, 0) == zero(column_state.tag())) continue;
    s += (first ? "" : ",") + std::string("(") + std::to_string(r / 2) + "," + std::to_string(r % 2) + ")";
    first = false;
  }
  return s + "}";
}

}  // namespace

LawReport negative_suite() {
  LawReport r;
  {
    const SemiringTag tag = SemiringTag::complex();
    const Matrix copy = basis_frobenius(2, tag).delta;
    const Matrix f = Matrix::from_rows(tag, std::vector<std::vector<double>>{{1}, {1}});
    const Matrix bell = compose(copy, f), product = compose(tensor(f, f), basis_frobenius(1, tag).delta);
    r.add("copy naturality (complex)", kNoCloning, max_deviation(bell, product), tag.tolerance,
          to_literal(bell) + " vs " + to_literal(product), false);
  }
  {
    const SemiringTag tag = SemiringTag::boolean();
    const Matrix copy = basis_frobenius(2, tag).delta;
    const Matrix f = Matrix::from_rows(tag, std::vector<std::vector<double>>{{1}, {1}});
    const Matrix diag = compose(copy, f), product = compose(tensor(f, f), basis_frobenius(1, tag).delta);
    r.add("copy naturality (boolean)", kNoCloning, max_deviation(diag, product), tag.tolerance,
          pair_set(diag) + " vs " + pair_set(product), false);
  }
  {
    // On {*} every relation is 0 or 1. A product cone (π1, π2) needs a
    // mediator f for each target pair (π1∘f, π2∘f).
    const SemiringTag tag = SemiringTag::boolean();
    const std::vector<std::pair<bool, bool>> targets = {{false, true}, {true, false}};
    std::size_t cones = 0;
    std::optional<std::string> found;
    for (bool p1 : {false, true})
      for (bool p2 : {false, true}) {
        ++cones;
        bool all = true;
        for (auto [t1, t2] : targets) {
          bool any = false;
          for (bool f : {false, true}) {
            const Matrix fm = scalar_matrix(ScalarValue::boolean(f), tag);
            const bool a = compose(scalar_matrix(ScalarValue::boolean(p1), tag), fm).at(0, 0) == ScalarValue::boolean(t1);
            const bool b = compose(scalar_matrix(ScalarValue::boolean(p2), tag), fm).at(0, 0) == ScalarValue::boolean(t2);
            any = any || (a && b);
          }
          all = all && any;
        }
        if (all && !found) found = "cone pi1=" + std::to_string(p1) + ", pi2=" + std::to_string(p2);
      }
    r.add("product on {*}x{*}", kRelProducts, found ? 0.0 : 1.0, 0.0,
          found ? *found : std::to_string(cones) + " candidate cones, none mediates both targets", false);
  }
  return r;
}

LawReport run_suite(const SuiteOptions& opt, const Structures& s) {
  const SemiringTag tag = opt.interpretation ? opt.interpretation->tag : opt.tag;
  LawReport r;
  r.merge(check_coherence(tag, opt.max_dim, s));
  r.merge(check_compact_structure(tag, opt.max_dim, opt.seed, s));

  Interpretation in;
  if (opt.interpretation) in = *opt.interpretation;
  in.tag = tag;
  r.merge(check_naturality_squares(in, opt.samples, opt.seed + 1, s));
  r.merge(check_scalar_laws(tag, opt.samples, opt.seed + 2));
  r.merge(check_biproducts(tag, 2 * opt.max_dim + 2, opt.seed + 3));

  std::vector<std::pair<std::string, FrobeniusPresentation>> family;
  if (opt.interpretation && !opt.interpretation->frobenius.empty()) {
    for (const auto& [atom, p] : opt.interpretation->frobenius) family.emplace_back(atom, p);
  } else {
    for (std::size_t d = 0; d <= opt.max_dim; ++d) family.emplace_back("d=" + std::to_string(d), s.frobenius(d, tag));
  }
  r.merge(check_frobenius_family(family));

  const HopfData z2 = z2_group_algebra(tag);
  r.merge(check_hopf_bialgebra(z2.structure, z2.antipode));
  r.merge(negative_suite());
  r.seed = opt.seed;
  return r;
}

const std::vector<ManifestItem>& law_manifest() {
  static const std::vector<ManifestItem> items = {
      {"pentagon", kCoherence},
      {"triangle", kCoherence},
      {"unit coherence", kCoherence},
      {"symmetry involution", kCoherence},
      {"symmetry unit", kCoherence},
      {"hexagon", kCoherence},
      {"snake left", kCompact},
      {"snake right", kCompact},
      {"circle dimension", kCompact},
      {"dagger compactness", kCompact},
      {"transpose sliding", kCompact},
      {"symmetry naturality", kNaturality},
      {"associator naturality", kNaturality},
      {"left unitor naturality", kNaturality},
      {"right unitor naturality", kNaturality},
      {"scalar commutativity", kScalars},
      {"scalar tensor", kScalars},
      {"scalar multiple", kScalars},
      {"scalar multiple composition", kScalars},
      {"scalar multiple tensor", kScalars},
      {"projection-injection", kBiproducts},
      {"injection-projection sum", kBiproducts},
      {"pairing", kBiproducts},
      {"copairing", kBiproducts},
      {"biproduct addition", kBiproducts},
      {"distributor inverse", kBiproducts},
      {"coassociativity", kFrobenius},
      {"left counit", kFrobenius},
      {"right counit", kFrobenius},
      {"associativity", kFrobenius},
      {"left unit", kFrobenius},
      {"right unit", kFrobenius},
      {"frobenius left", kFrobenius},
      {"frobenius right", kFrobenius},
      {"cocommutativity", kFrobenius},
      {"commutativity", kFrobenius},
      {"speciality", kFrobenius},
      {"dagger multiplication", kFrobenius},
      {"dagger unit", kFrobenius},
      {"hopf left", kHopf},
      {"hopf right", kHopf},
      {"bialgebra multiplication", kHopf},
      {"bialgebra counit", kHopf},
      {"bialgebra unit", kHopf},
      {"counit of unit", kHopf},
      {"copy naturality (complex)", kNoCloning, false},
      {"copy naturality (boolean)", kNoCloning, false},
      {"product on {*}x{*}", kRelProducts, false},
  };
  return items;
}

}  // namespace catkit
