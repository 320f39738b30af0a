#include "catkit/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "catkit/frobenius.hpp"
#include "catkit/graph.hpp"
#include "catkit/interp_io.hpp"
#include "catkit/lawcheck.hpp"
#include "catkit/parser.hpp"

namespace catkit::cli {

namespace {

// Unreadable or malformed input; the message already names the file.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError(path + ": cannot read file");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Program read_program(const std::string& path) {
  const std::string text = slurp(path);
  try {
    return parse(text);
  } catch (const SyntaxError& e) {
    throw InputError(path + ":" + e.what());
  }
}

Interpretation read_interpretation(const Options& opt, const Signature& sig) {
  if (!opt.interp) throw InputError("--interp FILE is required");
  const std::string text = slurp(*opt.interp);
  try {
    return parse_interpretation(text, sig, opt.tol);
  } catch (const SyntaxError& e) {
    throw InputError(*opt.interp + ":" + e.what());
  } catch (const DomainError& e) {
    throw InputError(*opt.interp + ": " + e.what());
  }
}

const NamedDiagram& lookup(const Program& p, const std::string& name) {
  const NamedDiagram* d = p.find(name);
  if (!d) throw InputError("no diagram named '" + name + "'");
  return *d;
}

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace

int cmd_check(const std::string& file, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Program p = read_program(file);
    int status = kOk;
    for (const auto& d : p.diagrams) {
      try {
        const TermType t = typecheck(d.term, p.signature);
        out << d.name << " : " << t.dom.to_string() << " -> " << t.cod.to_string() << "\n";
      } catch (const TypeError& e) {
        err << file << ":" << d.line << ":" << d.column << ": in '" << d.name << "': " << e.what() << "\n";
        status = kFailure;
      }
    }
    return status;
  });
}

int cmd_eq(const std::string& file, const std::string& lhs, const std::string& rhs, const Options& opt,
           std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Program p = read_program(file);
    const Term& a = lookup(p, lhs).term;
    const Term& b = lookup(p, rhs).term;
    const TermType ta = typecheck(a, p.signature), tb = typecheck(b, p.signature);
    if (!(ta == tb)) {
      out << "not equal\n";
      err << "types differ: " << ta.dom.to_string() << " -> " << ta.cod.to_string() << " vs "
          << tb.dom.to_string() << " -> " << tb.cod.to_string() << "\n";
      return kFailure;
    }
    OpenGraph ga = to_graph(a, p.signature), gb = to_graph(b, p.signature);
    if (opt.frobenius) {
      ga = fuse(spiderize(ga, p.signature), opt.special);
      gb = fuse(spiderize(gb, p.signature), opt.special);
    }
    const bool same = graph_eq(ga, gb);
    out << (same ? "equal" : "not equal") << "\n";
    return same ? kOk : kFailure;
  });
}

int cmd_eval(const std::string& file, const std::string& diagram, const Options& opt, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    const Program p = read_program(file);
    const Interpretation in = read_interpretation(opt, p.signature);
    const Term& t = lookup(p, diagram).term;
    const TermType ty = typecheck(t, p.signature);
    check_covers(in, p.signature);
    const Matrix m = interpret(t, p.signature, in);
    out << to_literal(m) << "\n";
    if (in.tag.kind == SemiringKind::boolean && ty.dom.size() <= 1 && ty.cod.size() <= 1)
      out << to_pair_list(m, ty, in) << "\n";
    return kOk;
  });
}

int cmd_classify(const std::string& file, const std::string& diagram, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Program p = read_program(file);
    out << to_string(classify_cob(lookup(p, diagram).term, p.signature));
    return kOk;
  });
}

int cmd_laws(const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SuiteOptions so;
    so.tag = SemiringTag::complex(opt.tol);
    so.seed = opt.seed;
    if (opt.interp) so.interpretation = read_interpretation(opt, Signature{});
    const LawReport r = run_suite(so);
    out << r.to_text();
    return r.ok() ? kOk : kFailure;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"String diagrams, Frobenius spiders and matrix semantics", "catkit"};
  app.require_subcommand(1);
  Options opt;
  std::string file, lhs, rhs, diagram;

  auto add_tol = [&](CLI::App* c) { c->add_option("--tol", opt.tol, "Complex comparison tolerance")->check(CLI::NonNegativeNumber); };
  auto add_interp = [&](CLI::App* c, bool required) {
    auto* o = c->add_option("--interp", opt.interp, "Interpretation JSON file");
    if (required) o->required();
  };

  auto* check = app.add_subcommand("check", "Parse and typecheck a diagram file");
  check->add_option("file", file)->required();

  auto* eq = app.add_subcommand("eq", "Decide equality of two diagrams");
  eq->add_option("file", file)->required();
  eq->add_option("lhs", lhs)->required();
  eq->add_option("rhs", rhs)->required();
  eq->add_flag("--frobenius", opt.frobenius, "Normalise Frobenius atoms to spiders first");
  eq->add_flag("--special", opt.special, "Treat Frobenius structures as special");

  auto* eval = app.add_subcommand("eval", "Evaluate a diagram as a matrix");
  eval->add_option("file", file)->required();
  eval->add_option("diagram", diagram)->required();
  add_interp(eval, true);
  add_tol(eval);

  auto* classify = app.add_subcommand("classify", "Classify a cobordism term");
  classify->add_option("file", file)->required();
  classify->add_option("diagram", diagram)->required();

  auto* laws = app.add_subcommand("laws", "Run the law harness");
  add_interp(laws, false);
  add_tol(laws);
  laws->add_option("--seed", opt.seed, "Seed for random instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInputError;
  }

  if (*check) return cmd_check(file, out, err);
  if (*eq) return cmd_eq(file, lhs, rhs, opt, out, err);
  if (*eval) return cmd_eval(file, diagram, opt, out, err);
  if (*classify) return cmd_classify(file, diagram, out, err);
  return cmd_laws(opt, out, err);
}

}  // namespace catkit::cli
