#include "catkit/diagram.hpp"

#include <sstream>

#include "overloaded.hpp"

namespace catkit {

ObjectWord ObjectWord::power(const std::string& name, std::size_t count) {
  return ObjectWord(std::vector<Factor>(count, Factor{name, false}));
}

ObjectWord ObjectWord::operator*(const ObjectWord& rhs) const {
  std::vector<Factor> f = factors_;
  f.insert(f.end(), rhs.factors_.begin(), rhs.factors_.end());
  return ObjectWord(std::move(f));
}

std::string ObjectWord::to_string() const {
  if (factors_.empty()) return "I";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += " x ";
    out += factors_[i].atom;
    if (factors_[i].dual) out += '*';
  }
  return out;
}

// -- Signature ---------------------------------------------------------------

void Signature::add_object(ObjectDecl decl) {
  if (object_index_.count(decl.name) || generator_index_.count(decl.name)) {
    throw TypeError("duplicate declaration of '" + decl.name + "'");
  }
  if (decl.frobenius) decl.self_dual = true;
  object_index_[decl.name] = objects_.size();
  objects_.push_back(std::move(decl));
}

void Signature::add_generator(GeneratorDecl decl) {
  if (object_index_.count(decl.name) || generator_index_.count(decl.name)) {
    throw TypeError("duplicate declaration of '" + decl.name + "'");
  }
  decl.dom = normalize(decl.dom);
  decl.cod = normalize(decl.cod);
  generator_index_[decl.name] = generators_.size();
  generators_.push_back(std::move(decl));
}

const ObjectDecl* Signature::find_object(const std::string& name) const {
  auto it = object_index_.find(name);
  return it == object_index_.end() ? nullptr : &objects_[it->second];
}

const GeneratorDecl* Signature::find_generator(const std::string& name) const {
  auto it = generator_index_.find(name);
  return it == generator_index_.end() ? nullptr : &generators_[it->second];
}

const ObjectDecl& Signature::object(const std::string& name) const {
  if (const auto* o = find_object(name)) return *o;
  throw TypeError("unknown object '" + name + "'");
}

const GeneratorDecl& Signature::generator(const std::string& name) const {
  if (const auto* g = find_generator(name)) return *g;
  throw TypeError("unknown generator '" + name + "'");
}

bool Signature::is_self_dual(const std::string& atom) const { return object(atom).self_dual; }

bool Signature::is_frobenius(const std::string& atom) const { return object(atom).frobenius; }

Factor Signature::normalize(const Factor& f) const {
  return {f.atom, is_self_dual(f.atom) ? false : f.dual};
}

ObjectWord Signature::normalize(const ObjectWord& w) const {
  std::vector<Factor> out;
  out.reserve(w.size());
  for (const auto& f : w.factors()) out.push_back(normalize(f));
  return ObjectWord(std::move(out));
}

// -- Term --------------------------------------------------------------------

Term Term::gen(std::string name) { return Term(std::make_shared<const TermNode>(TermNode{term::Gen{std::move(name)}})); }
Term Term::id(ObjectWord w) { return Term(std::make_shared<const TermNode>(TermNode{term::Id{std::move(w)}})); }
Term Term::seq(Term after, Term before) {
  return Term(std::make_shared<const TermNode>(TermNode{term::Seq{std::move(after), std::move(before)}}));
}
Term Term::par(Term left, Term right) {
  return Term(std::make_shared<const TermNode>(TermNode{term::Par{std::move(left), std::move(right)}}));
}
Term Term::swap(ObjectWord left, ObjectWord right) {
  return Term(std::make_shared<const TermNode>(TermNode{term::Swap{std::move(left), std::move(right)}}));
}
Term Term::cup(std::string atom) { return Term(std::make_shared<const TermNode>(TermNode{term::Cup{std::move(atom)}})); }
Term Term::cap(std::string atom) { return Term(std::make_shared<const TermNode>(TermNode{term::Cap{std::move(atom)}})); }
Term Term::dagger(Term t) { return Term(std::make_shared<const TermNode>(TermNode{term::Dagger{std::move(t)}})); }
Term Term::spider(std::string atom, std::size_t inputs, std::size_t outputs) {
  return Term(std::make_shared<const TermNode>(TermNode{term::Spider{std::move(atom), inputs, outputs}}));
}

namespace {

using detail::overloaded;

void render(const Term& t, std::ostream& os) {
  std::visit(overloaded{
                 [&](const term::Gen& g) { os << g.name; },
                 [&](const term::Id& i) { os << "id(" << i.word.to_string() << ")"; },
                 [&](const term::Seq& s) {
                   os << "(";
                   render(s.before, os);
                   os << " >> ";
                   render(s.after, os);
                   os << ")";
                 },
                 [&](const term::Par& p) {
                   os << "(";
                   render(p.left, os);
                   os << " x ";
                   render(p.right, os);
                   os << ")";
                 },
                 [&](const term::Swap& s) {
                   os << "swap(" << s.left.to_string() << ", " << s.right.to_string() << ")";
                 },
                 [&](const term::Cup& c) { os << "cup(" << c.atom << ")"; },
                 [&](const term::Cap& c) { os << "cap(" << c.atom << ")"; },
                 [&](const term::Dagger& d) {
                   os << "dg(";
                   render(d.inner, os);
                   os << ")";
                 },
                 [&](const term::Spider& s) {
                   os << "spider(" << s.atom << ", " << s.inputs << ", " << s.outputs << ")";
                 },
             },
             t.node().value);
}

bool equal_nodes(const TermNode& a, const TermNode& b) {
  if (a.value.index() != b.value.index()) return false;
  return std::visit(
      overloaded{
          [&](const term::Gen& x) { return x.name == std::get<term::Gen>(b.value).name; },
          [&](const term::Id& x) { return x.word == std::get<term::Id>(b.value).word; },
          [&](const term::Seq& x) {
            const auto& y = std::get<term::Seq>(b.value);
            return x.after == y.after && x.before == y.before;
          },
          [&](const term::Par& x) {
            const auto& y = std::get<term::Par>(b.value);
            return x.left == y.left && x.right == y.right;
          },
          [&](const term::Swap& x) {
            const auto& y = std::get<term::Swap>(b.value);
            return x.left == y.left && x.right == y.right;
          },
          [&](const term::Cup& x) { return x.atom == std::get<term::Cup>(b.value).atom; },
          [&](const term::Cap& x) { return x.atom == std::get<term::Cap>(b.value).atom; },
          [&](const term::Dagger& x) { return x.inner == std::get<term::Dagger>(b.value).inner; },
          [&](const term::Spider& x) {
            const auto& y = std::get<term::Spider>(b.value);
            return x.atom == y.atom && x.inputs == y.inputs && x.outputs == y.outputs;
          },
      },
      a.value);
}

}  // namespace

std::string Term::to_string() const {
  std::ostringstream os;
  render(*this, os);
  return os.str();
}

bool operator==(const Term& a, const Term& b) {
  return a.node_ == b.node_ || equal_nodes(*a.node_, *b.node_);
}

// -- typecheck ---------------------------------------------------------------

TermType typecheck(const Term& t, const Signature& sig) {
  using detail::overloaded;
  return std::visit(
      overloaded{
          [&](const term::Gen& g) -> TermType {
            const auto* decl = sig.find_generator(g.name);
            if (!decl) throw TypeError("unknown generator '" + g.name + "'");
            return {decl->dom, decl->cod};
          },
          [&](const term::Id& i) -> TermType {
            auto w = sig.normalize(i.word);
            return {w, w};
          },
          [&](const term::Seq& s) -> TermType {
            const TermType first = typecheck(s.before, sig);
            const TermType second = typecheck(s.after, sig);
            if (first.cod != second.dom) {
              throw TypeError("types don't match: cannot compose " + s.after.to_string() + " : " +
                              second.dom.to_string() + " -> " + second.cod.to_string() + " after " +
                              s.before.to_string() + " : " + first.dom.to_string() + " -> " +
                              first.cod.to_string() + " (" + first.cod.to_string() + " vs " +
                              second.dom.to_string() + ")");
            }
            return {first.dom, second.cod};
          },
          [&](const term::Par& p) -> TermType {
            const TermType l = typecheck(p.left, sig);
            const TermType r = typecheck(p.right, sig);
            return {l.dom * r.dom, l.cod * r.cod};
          },
          [&](const term::Swap& s) -> TermType {
            const auto a = sig.normalize(s.left);
            const auto b = sig.normalize(s.right);
            return {a * b, b * a};
          },
          [&](const term::Cup& c) -> TermType {
            const Factor f = sig.normalize(Factor{c.atom, false});
            return {ObjectWord{}, ObjectWord({sig.normalize(f.flipped()), f})};
          },
          [&](const term::Cap& c) -> TermType {
            const Factor f = sig.normalize(Factor{c.atom, false});
            return {ObjectWord({f, sig.normalize(f.flipped())}), ObjectWord{}};
          },
          [&](const term::Dagger& d) -> TermType {
            const TermType inner = typecheck(d.inner, sig);
            return {inner.cod, inner.dom};
          },
          [&](const term::Spider& s) -> TermType {
            if (!sig.is_frobenius(s.atom)) {
              throw TypeError("spider on '" + s.atom + "', which is not declared frobenius");
            }
            return {ObjectWord::power(s.atom, s.inputs), ObjectWord::power(s.atom, s.outputs)};
          },
      },
      t.node().value);
}

// -- derived constructions ---------------------------------------------------

Term cup_of(const Factor& f) {
  if (!f.dual) return Term::cup(f.atom);
  // I -> A ⊗ A*: the cup on A followed by a crossing.
  return Term::seq(Term::swap(ObjectWord::atom(f.atom, true), ObjectWord::atom(f.atom)), Term::cup(f.atom));
}

Term cap_of(const Factor& f) {
  if (!f.dual) return Term::cap(f.atom);
  // A* ⊗ A -> I
  return Term::seq(Term::cap(f.atom), Term::swap(ObjectWord::atom(f.atom, true), ObjectWord::atom(f.atom)));
}

namespace {

std::pair<Factor, Factor> single_factor_type(const Term& t, const Signature& sig, const char* what) {
  const TermType ty = typecheck(t, sig);
  if (ty.dom.size() != 1 || ty.cod.size() != 1) {
    throw Unsupported(std::string(what) + " needs a single-atom domain and codomain, got " + ty.dom.to_string() +
                      " -> " + ty.cod.to_string());
  }
  return {ty.dom[0], ty.cod[0]};
}

}  // namespace

Term transpose(const Term& t, const Signature& sig) {
  const auto [a, b] = single_factor_type(t, sig, "transpose");
  const ObjectWord a_dual({sig.normalize(a.flipped())});
  const ObjectWord b_dual({sig.normalize(b.flipped())});
  const Term open = Term::par(cup_of(a), Term::id(b_dual));
  const Term apply = Term::par(Term::par(Term::id(a_dual), t), Term::id(b_dual));
  const Term close = Term::par(Term::id(a_dual), cap_of(b));
  return Term::seq(close, Term::seq(apply, open));
}

Term name(const Term& t, const Signature& sig) {
  const auto [a, b] = single_factor_type(t, sig, "name");
  const ObjectWord a_dual({sig.normalize(a.flipped())});
  return Term::seq(Term::par(Term::id(a_dual), t), cup_of(a));
}

Term coname(const Term& t, const Signature& sig) {
  const auto [a, b] = single_factor_type(t, sig, "coname");
  const ObjectWord b_dual({sig.normalize(b.flipped())});
  return Term::seq(cap_of(b), Term::par(t, Term::id(b_dual)));
}

}  // namespace catkit
