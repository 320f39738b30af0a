#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "catkit/error.hpp"

namespace catkit {

/// One tensor factor of an object word: an atom, possibly dualised.
struct Factor {
  std::string atom;
  bool dual = false;

  Factor flipped() const { return {atom, !dual}; }
  friend bool operator==(const Factor&, const Factor&) = default;
  friend auto operator<=>(const Factor&, const Factor&) = default;
};

/// A finite tensor product of factors; the empty word is the unit I.
class ObjectWord {
 public:
  ObjectWord() = default;
  explicit ObjectWord(std::vector<Factor> factors) : factors_(std::move(factors)) {}
  static ObjectWord atom(std::string name, bool dual = false) { return ObjectWord({{std::move(name), dual}}); }
  /// `count` plain copies of the atom.
  static ObjectWord power(const std::string& name, std::size_t count);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }
  bool empty() const noexcept { return factors_.empty(); }
  const Factor& operator[](std::size_t i) const { return factors_[i]; }

  ObjectWord operator*(const ObjectWord& rhs) const;

  /// "I" for the unit, otherwise e.g. "A x B*".
  std::string to_string() const;

  friend bool operator==(const ObjectWord&, const ObjectWord&) = default;

 private:
  std::vector<Factor> factors_;
};

struct ObjectDecl {
  std::string name;
  bool frobenius = false;
  bool self_dual = false;
};

struct GeneratorDecl {
  std::string name;
  ObjectWord dom;
  ObjectWord cod;
};

/// Declared atoms and generators of a free dagger compact category.
///
/// Frobenius atoms are always treated as self-dual: the Frobenius structure
/// supplies the cup δ∘e and cap ε∘μ.
class Signature {
 public:
  void add_object(ObjectDecl decl);
  void add_generator(GeneratorDecl decl);

  const ObjectDecl* find_object(const std::string& name) const;
  const GeneratorDecl* find_generator(const std::string& name) const;
  const ObjectDecl& object(const std::string& name) const;
  const GeneratorDecl& generator(const std::string& name) const;

  bool is_self_dual(const std::string& atom) const;
  bool is_frobenius(const std::string& atom) const;

  const std::vector<ObjectDecl>& objects() const noexcept { return objects_; }
  const std::vector<GeneratorDecl>& generators() const noexcept { return generators_; }

  /// Checks every atom is declared and erases variance on self-dual atoms.
  ObjectWord normalize(const ObjectWord& w) const;
  Factor normalize(const Factor& f) const;

 private:
  std::vector<ObjectDecl> objects_;
  std::vector<GeneratorDecl> generators_;
  std::map<std::string, std::size_t> object_index_;
  std::map<std::string, std::size_t> generator_index_;
};

class Term;
struct TermNode;

namespace term {
struct Gen {
  std::string name;
};
struct Id {
  ObjectWord word;
};
/// after ∘ before
struct Seq;
struct Par;
struct Swap {
  ObjectWord left;
  ObjectWord right;
};
/// I -> A* ⊗ A
struct Cup {
  std::string atom;
};
/// A ⊗ A* -> I
struct Cap {
  std::string atom;
};
struct Dagger;
struct Spider {
  std::string atom;
  std::size_t inputs = 0;
  std::size_t outputs = 0;
};
}  // namespace term

/// Immutable syntax tree of a morphism in the free dagger compact SMC.
class Term {
 public:
  static Term gen(std::string name);
  static Term id(ObjectWord w);
  /// after ∘ before (before runs first).
  static Term seq(Term after, Term before);
  static Term par(Term left, Term right);
  static Term swap(ObjectWord left, ObjectWord right);
  static Term cup(std::string atom);
  static Term cap(std::string atom);
  static Term dagger(Term t);
  static Term spider(std::string atom, std::size_t inputs, std::size_t outputs);

  /// Left-to-right composition: first then second.
  static Term then(Term first, Term second) { return seq(std::move(second), std::move(first)); }

  const TermNode& node() const { return *node_; }

  /// Compact prefix rendering used in diagnostics.
  std::string to_string() const;

  /// Structural (syntactic) equality.
  friend bool operator==(const Term& a, const Term& b);

 private:
  explicit Term(std::shared_ptr<const TermNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const TermNode> node_;
};

namespace term {
struct Seq {
  Term after;
  Term before;
};
struct Par {
  Term left;
  Term right;
};
struct Dagger {
  Term inner;
};
}  // namespace term

struct TermNode {
  std::variant<term::Gen, term::Id, term::Seq, term::Par, term::Swap, term::Cup, term::Cap, term::Dagger,
               term::Spider>
      value;
};

struct TermType {
  ObjectWord dom;
  ObjectWord cod;
  friend bool operator==(const TermType&, const TermType&) = default;
};

/// Assigns (dom, cod) as normalized words. Throws TypeError on a mismatch or
/// an undeclared name; the message names both offending words.
TermType typecheck(const Term& t, const Signature& sig);

/// f* : B* -> A* built from cups and caps. dom and cod must be single factors.
Term transpose(const Term& t, const Signature& sig);
/// ⌈f⌉ : I -> A* ⊗ B.
Term name(const Term& t, const Signature& sig);
/// ⌊f⌋ : A ⊗ B* -> I.
Term coname(const Term& t, const Signature& sig);

/// Cup and cap on a single factor, where a dual factor is realised by a swap.
Term cup_of(const Factor& f);
Term cap_of(const Factor& f);

}  // namespace catkit
