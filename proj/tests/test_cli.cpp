#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "catkit/cli.hpp"
#include "catkit/error.hpp"
#include "catkit/interp_io.hpp"
#include "catkit/parser.hpp"

using namespace catkit;

namespace {

const std::string kData = CATKIT_TEST_DATA;

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "catkit");
  std::vector<const char*> argv;
  for (auto& a : args) {
    if (a.rfind("@", 0) == 0) a = kData + "/" + a.substr(1);
    argv.push_back(a.c_str());
  }
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string read(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Compares stdout against golden/<name>.out; CATKIT_UPDATE_GOLDEN rewrites it.
void golden(const std::string& name, const Result& r) {
  const std::string path = kData + "/golden/" + name + ".out";
  if (std::getenv("CATKIT_UPDATE_GOLDEN")) {
    std::ofstream(path) << r.out;
    return;
  }
  CHECK_MESSAGE(r.out == read(path), name);
}

}  // namespace

TEST_CASE("check") {
  const auto ok = run({"check", "@diagrams.cat"});
  CHECK(ok.code == 0);
  golden("check_diagrams", ok);

  const auto bad = run({"check", "@bad_type.cat"});
  CHECK(bad.code == 1);
  CHECK(bad.out == "ok : A -> B\n");
  CHECK(bad.err.find("bad_type.cat:5:1: in 'bad'") != std::string::npos);
  CHECK(bad.err.find("A -> B") != std::string::npos);

  const auto syntax = run({"check", "@bad_syntax.cat"});
  CHECK(syntax.code == 2);
  CHECK(syntax.err.find("bad_syntax.cat:2:10:") != std::string::npos);

  CHECK(run({"check", "@does_not_exist.cat"}).code == 2);
}

TEST_CASE("eq") {
  const auto inter = run({"eq", "@diagrams.cat", "interchange_lhs", "interchange_rhs"});
  CHECK(inter.code == 0);
  CHECK(inter.out == "equal\n");
  CHECK(run({"eq", "@diagrams.cat", "d", "dd"}).out == "equal\n");

  const auto differ = run({"eq", "@diagrams.cat", "d", "other"});
  CHECK(differ.code == 1);
  CHECK(differ.out == "not equal\n");

  const auto handle = run({"eq", "@cob.cat", "cyl", "handle", "--frobenius"});
  CHECK(handle.code == 1);
  golden("eq_cyl_handle", handle);
  CHECK(run({"eq", "@cob.cat", "cyl", "handle", "--frobenius", "--special"}).code == 0);
  CHECK(run({"eq", "@cob.cat", "pants_left", "pants_right", "--frobenius"}).code == 0);
  // Without fusion the handle keeps its two spiders, even when special.
  CHECK(run({"eq", "@cob.cat", "cyl", "handle", "--special"}).code == 1);
  CHECK(run({"eq", "@diagrams.cat", "d", "missing"}).code == 2);
}

TEST_CASE("eval") {
  const auto snake = run({"eval", "@diagrams.cat", "snake", "--interp", "@dims.json"});
  CHECK(snake.code == 0);
  golden("eval_snake", snake);
  const auto loop = run({"eval", "@diagrams.cat", "loop", "--interp", "@dims.json"});
  CHECK(loop.out == "3\n");
  golden("eval_loop", loop);
  const auto rel = run({"eval", "@rel.cat", "composite", "--interp", "@rel.json"});
  CHECK(rel.code == 0);
  CHECK(rel.out == "[[1,1],[1,1],[1,0]]\n{(a,e),(a,f),(a,g),(b,e),(b,f)}\n");
  golden("eval_rel", rel);
  golden("eval_complex", run({"eval", "@diagrams.cat", "d", "--interp", "@dims.json"}));

  CHECK(run({"eval", "@diagrams.cat", "d"}).code == 2);
  CHECK(run({"eval", "@diagrams.cat", "d", "--interp", "@bad.json"}).code == 2);
  // Generators missing from the interpretation: semantic failure.
  const auto uncovered = run({"eval", "@diagrams.cat", "d", "--interp", "@basis2.json"});
  CHECK(uncovered.code == 1);
}

TEST_CASE("classify") {
  const auto tw = run({"classify", "@cob.cat", "twist2"});
  CHECK(tw.code == 0);
  golden("classify_twist2", tw);
  const auto torus = run({"classify", "@cob.cat", "torus"});
  CHECK(torus.out == "component(in=[], out=[], genus=1)\n");
  golden("classify_torus", torus);
  CHECK(run({"classify", "@diagrams.cat", "d"}).code == 1);
}

TEST_CASE("laws") {
  const auto r = run({"laws", "--interp", "@basis2.json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("48 laws, 0 unexpected, seed 1") != std::string::npos);
  golden("laws_basis2", r);
  const auto seeded = run({"laws", "--seed", "42"});
  CHECK(seeded.code == 0);
  CHECK(seeded.out.find("seed 42") != std::string::npos);
  CHECK(seeded.out == run({"laws", "--seed", "42"}).out);
}

TEST_CASE("argument errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"eq", "@diagrams.cat", "d"}).code == 2);
  CHECK(run({"laws", "--seed", "x"}).code == 2);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("classify") != std::string::npos);
}

TEST_CASE("interpretation files") {
  const Program p = parse("object A; gen f : A -> A; gen r : X -> I;");
  const auto in = parse_interpretation(
      R"({"semiring": "bool", "objects": {"A": 2}, "elements": {"X": ["x", "y"]},
          "generators": {"f": [1, 0, 1, 1], "r": "{(y,*)}"}})",
      p.signature);
  CHECK(in.generators.at("f") == Matrix::from_rows(in.tag, std::vector<std::vector<double>>{{1, 0}, {1, 1}}));
  CHECK(in.generators.at("r") == Matrix::from_rows(in.tag, std::vector<std::vector<double>>{{0, 1}}));
  CHECK(in.dim("X") == 2);

  const auto nat = parse_interpretation(R"({"semiring": "nat", "generators": {"s": [["123456789012345678901234567890"]]}})",
                                        Signature{});
  CHECK(nat.generators.at("s").at(0, 0) == ScalarValue::natural(Natural("123456789012345678901234567890")));
  CHECK_THROWS_AS(parse_interpretation(R"({"semiring": "nat", "generators": {"s": -1}})", Signature{}), SyntaxError);
  CHECK_THROWS_AS(parse_interpretation(R"({"objects": {"A": 2}, "generators": {"f": [1, 0, 1]}})", p.signature),
                  TypeError);
  CHECK_THROWS_AS(parse_interpretation(R"({"semiring": "reals"})", Signature{}), DomainError);
  CHECK_THROWS_AS(parse_interpretation(R"({"colour": 1})", Signature{}), SyntaxError);
  CHECK_THROWS_AS(parse_interpretation(R"({"generators": {"f": [1, 0]}})", Signature{}), SyntaxError);
  CHECK_THROWS_AS(parse_interpretation(R"({"semiring": "bool", "elements": {"X": ["x"]}, "generators": {"r": "{(z,*)}"}})",
                                       p.signature),
                  SyntaxError);

  const auto explicit_frob = parse_interpretation(
      R"({"objects": {"A": 1}, "frobenius": {"A": {"delta": [[1]], "eps": [[1]], "mu": [[1]], "e": [[1]], "special": true}}})",
      Signature{});
  const auto& fp = explicit_frob.frobenius.at("A");
  CHECK(fp.special);
  CHECK_FALSE(fp.dagger);
  CHECK(fp.commutative);
  CHECK(verify_frobenius(fp).all_pass());
  CHECK_THROWS_AS(parse_interpretation(R"({"objects": {"A": 2}, "frobenius": {"A": {"delta": [[1]]}}})", Signature{}),
                  std::exception);
}
