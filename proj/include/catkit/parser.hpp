#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "catkit/diagram.hpp"

namespace catkit {

struct NamedDiagram {
  std::string name;
  Term term;
  std::size_t line = 0;
  std::size_t column = 0;
};

/// A parsed DSL file: the signature plus its diagrams in declaration order.
struct Program {
  Signature signature;
  std::vector<NamedDiagram> diagrams;

  const NamedDiagram* find(const std::string& name) const;
  const NamedDiagram& diagram(const std::string& name) const;
};

/// Parses the diagram DSL:
///
///   object A [frobenius] [selfdual];
///   gen f : A x B* -> I;
///   diag d = f >> dg(f);        (the `diag` keyword is optional)
///
/// Expressions: `a >> b` is b∘a, `a x b` is a⊗b and binds tighter; atoms are
/// generator or earlier diagram names, id(W), swap(W, W), cup(A), cap(A),
/// dg(E), name(E), coname(E), transpose(E), spider(A, k, l) and parentheses.
/// `#` and `//` start line comments.
///
/// Throws SyntaxError (with line and column) on malformed input or unknown
/// identifiers. Terms are not typechecked here except where name/coname/
/// transpose need their argument's type.
Program parse(std::string_view text);

}  // namespace catkit
