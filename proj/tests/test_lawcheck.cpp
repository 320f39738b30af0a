#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catkit/error.hpp"
#include "catkit/lawcheck.hpp"
#include "catkit/random.hpp"
#include "oracle.hpp"

using namespace catkit;

namespace {

const SemiringTag C = SemiringTag::complex();
const SemiringTag B = SemiringTag::boolean();
const SemiringTag N = SemiringTag::natural();

bool passes(const LawReport& r, const std::string& name) {
  const LawEntry* e = r.find(name);
  REQUIRE_MESSAGE(e != nullptr, name);
  return e->pass;
}

// Flips entry (r, c) of the matrix the wrapped builder returns at one size.
Matrix flip(Matrix m, std::size_t r, std::size_t c) {
  m.set(r, c, m.at(r, c) == zero(m.tag()) ? one(m.tag()) : zero(m.tag()));
  return m;
}

SuiteOptions quick(SemiringTag tag) {
  SuiteOptions o;
  o.tag = tag;
  o.max_dim = 2;
  o.samples = 10;
  o.seed = 7;
  return o;
}

}  // namespace

TEST_CASE("coherence: pentagon, triangle, hexagon") {
  for (const SemiringTag tag : {C, B, N}) {
    const auto r = check_coherence(tag, 3);
    CHECK(r.all_pass());
    CHECK(r.entries.size() == 6);
  }
  // Direct oracle at (2,2,2,2): both pentagon paths are the identity on 16.
  const Matrix lhs = compose(assoc_iso(4, 2, 2, C), assoc_iso(2, 2, 4, C));
  CHECK(lhs == oracle::permutation({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15}, C));
  // Hexagon at (2,3,2): σ_{A,B⊗C} against the two-step swap, entrywise.
  std::vector<std::size_t> perm(12);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 2; ++c) perm[(a * 3 + b) * 2 + c] = (b * 2 + c) * 2 + a;
  const Matrix two_step = compose(tensor(identity(3, C), swap_matrix(2, 2, C)), tensor(swap_matrix(2, 3, C), identity(2, C)));
  CHECK(two_step == oracle::permutation(perm, C));
  CHECK(swap_matrix(2, 6, C) == oracle::permutation(perm, C));
  CHECK(left_unit_iso(1, C) == identity(1, C));
  CHECK_THROWS_AS(check_coherence(C, 6), PreconditionError);
}

TEST_CASE("compact structure") {
  for (const SemiringTag tag : {C, B, N}) CHECK(check_compact_structure(tag, 5, 3).all_pass());
}

TEST_CASE("naturality squares") {
  Interpretation in;
  in.tag = B;
  Rng rng(11);
  in.generators["f"] = random_matrix(B, 2, 2, rng);
  in.generators["g"] = random_matrix(B, 3, 3, rng);
  in.generators["h"] = random_matrix(B, 2, 3, rng);
  CHECK(check_naturality_squares(in, 30, 5).all_pass());
  in.tag = C;
  in.generators.clear();
  const auto r = check_naturality_squares(in, 30, 5);
  CHECK(r.all_pass());
  CHECK(r.seed == 5u);
}

TEST_CASE("transposed swap is caught by naturality with a witness") {
  Interpretation in;
  in.tag = C;
  const auto r = check_naturality_squares(in, 30, 5, Structures::transposed_swap());
  const LawEntry* e = r.find("symmetry naturality");
  REQUIRE(e != nullptr);
  CHECK_FALSE(e->pass);
  REQUIRE(e->witness.has_value());
  CHECK(e->witness->find("entry") != std::string::npos);
  // With square dimensions the bug is invisible.
  Rng rng(1);
  in.generators["f"] = random_matrix(C, 2, 2, rng);
  in.generators["g"] = random_matrix(C, 2, 2, rng);
  CHECK(check_naturality_squares(in, 0, 5, Structures::transposed_swap()).all_pass());
}

TEST_CASE("scalar laws") {
  for (const SemiringTag tag : {C, B, N}) CHECK(check_scalar_laws(tag, 200, 9).all_pass());
}

TEST_CASE("biproducts") {
  for (const SemiringTag tag : {C, B, N}) CHECK(check_biproducts(tag, 8, 4).all_pass());
}

TEST_CASE("hopf and bialgebra") {
  const auto z2 = z2_group_algebra(C);
  const auto r = check_hopf_bialgebra(z2.structure, z2.antipode);
  CHECK(r.all_pass());
  CHECK(passes(r, "hopf left"));
  const LawEntry* note = r.find("counit of unit");
  REQUIRE(note != nullptr);
  CHECK_FALSE(note->asserted);
  CHECK(*note->witness == "value 1");
  // Hopf but not Frobenius: the pairing ε∘μ is degenerate.
  CHECK_FALSE(verify_frobenius(z2.structure).all_pass());

  const auto copy = check_hopf_bialgebra(basis_frobenius(2, C), identity(2, C));
  CHECK_FALSE(passes(copy, "hopf left"));
  CHECK_FALSE(passes(copy, "hopf right"));
  CHECK(check_hopf_bialgebra(basis_frobenius(1, C), identity(1, C)).all_pass());
  CHECK_THROWS_AS(check_hopf_bialgebra(basis_frobenius(2, C), identity(3, C)), TypeError);
  for (const SemiringTag tag : {B, N}) {
    const auto h = z2_group_algebra(tag);
    CHECK(check_hopf_bialgebra(h.structure, h.antipode).all_pass());
  }
}

TEST_CASE("negative suite fails as expected") {
  const auto r = negative_suite();
  REQUIRE(r.entries.size() == 3);
  for (const auto& e : r.entries) {
    CAPTURE(e.name);
    CHECK_FALSE(e.pass);
    CHECK_FALSE(e.expected_pass);
    CHECK(e.as_expected());
  }
  CHECK(r.ok());
  CHECK(r.find("copy naturality (complex)")->max_deviation > 0);
  CHECK(*r.find("copy naturality (complex)")->witness == "[[1],[0],[0],[1]] vs [[1],[1],[1],[1]]");
  CHECK(*r.find("copy naturality (boolean)")->witness == "{(0,0),(1,1)} vs {(0,0),(0,1),(1,0),(1,1)}");
  CHECK(r.find("product on {*}x{*}")->witness->find("4 candidate cones") != std::string::npos);
}

TEST_CASE("suite matches the manifest") {
  for (const SemiringTag tag : {C, B, N}) {
    const auto r = run_suite(quick(tag));
    CHECK(r.ok());
    const auto& m = law_manifest();
    REQUIRE(r.entries.size() == m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      CHECK(r.entries[i].name == m[i].name);
      CHECK(r.entries[i].topic == m[i].topic);
      CHECK(r.entries[i].expected_pass == m[i].expected_pass);
    }
    CHECK(r.seed == 7u);
  }
}

TEST_CASE("report text") {
  const auto r = run_suite(quick(B));
  const std::string t = r.to_text();
  CHECK(t.find("fails (expected)") != std::string::npos);
  CHECK(t.find("info") != std::string::npos);
  CHECK(t.find("48 laws, 0 unexpected, seed 7") != std::string::npos);
  CHECK(t == run_suite(quick(B)).to_text());
}

TEST_CASE("suite with interpretation data") {
  SuiteOptions o = quick(C);
  Interpretation in;
  in.tag = C;
  in.object_dims["A"] = 2;
  in.frobenius["A"] = basis_frobenius(2, C);
  in.generators["f"] = identity(2, C);
  o.interpretation = in;
  CHECK(run_suite(o).ok());
  auto bad = basis_frobenius(2, C);
  bad.delta.set(1, 0, one(C));
  o.interpretation->frobenius["A"] = bad;
  const auto r = run_suite(o);
  CHECK_FALSE(r.ok());
  CHECK(r.find("coassociativity")->witness->rfind("A: ", 0) == 0);
}

TEST_CASE("mutation coverage: every single flip of sigma, eta or delta is caught") {
  for (const SemiringTag tag : {C, B}) {
    const SuiteOptions o = quick(tag);
    std::size_t tried = 0;
    // σ at (2,1): 2x2 entries; at (2,2): 4x4 entries.
    for (auto [n, m] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}, {1, 2}, {2, 2}}) {
      const std::size_t side = n * m;
      for (std::size_t r = 0; r < side; ++r)
        for (std::size_t c = 0; c < side; ++c) {
          Structures s = Structures::standard();
          s.swap = [=](std::size_t a, std::size_t b, SemiringTag t) {
            Matrix x = swap_matrix(a, b, t);
            return a == n && b == m ? flip(x, r, c) : x;
          };
          CAPTURE(n);
          CAPTURE(m);
          CHECK_FALSE(run_suite(o, s).ok());
          ++tried;
        }
    }
    for (std::size_t r = 0; r < 4; ++r) {
      Structures s = Structures::standard();
      s.eta = [=](std::size_t a, SemiringTag t) { return a == 2 ? flip(unit_eta(a, t), r, 0) : unit_eta(a, t); };
      CHECK_FALSE(run_suite(o, s).ok());
      ++tried;
    }
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 2; ++c) {
        Structures s = Structures::standard();
        s.frobenius = [=](std::size_t d, SemiringTag t) {
          auto p = basis_frobenius(d, t);
          if (d == 2) p.delta = flip(p.delta, r, c);
          return p;
        };
        CHECK_FALSE(run_suite(o, s).ok());
        ++tried;
      }
    CHECK(tried == 4 + 4 + 16 + 4 + 8);
  }
}
