#include "catkit/interp_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace catkit {

namespace {

using json = nlohmann::json;

[[noreturn]] void bad(const std::string& msg) { throw SyntaxError(1, 1, msg); }

// nlohmann reports a byte offset; turn it into line:column.
[[noreturn]] void json_error(std::string_view text, std::size_t byte, const std::string& msg) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  throw SyntaxError(line, col, msg);
}

SemiringTag semiring_from(const std::string& name, double tol) {
  if (name == "boolean") return SemiringTag::boolean();
  if (name == "natural") return SemiringTag::natural();
  return parse_semiring(name, tol);
}

ScalarValue scalar_from(const json& j, SemiringTag tag, const std::string& what) {
  switch (tag.kind) {
    case SemiringKind::boolean:
      if (j.is_boolean()) return ScalarValue::boolean(j.get<bool>());
      if (j.is_number_integer() && (j.get<long long>() == 0 || j.get<long long>() == 1))
        return ScalarValue::boolean(j.get<long long>() == 1);
      bad(what + ": boolean entries must be 0, 1, true or false");
    case SemiringKind::natural:
      if (j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0))
        return ScalarValue::natural(Natural(j.get<unsigned long long>()));
      if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (!s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
          return ScalarValue::natural(Natural(s));
      }
      bad(what + ": natural entries must be non-negative integers");
    case SemiringKind::complex:
      if (j.is_number()) return ScalarValue::complex(j.get<double>(), 0.0, tag.tolerance);
      if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return ScalarValue::complex(j[0].get<double>(), j[1].get<double>(), tag.tolerance);
      bad(what + ": complex entries must be numbers or [re, im] pairs");
  }
  bad(what + ": unknown semiring");
}

std::size_t word_dim(const Interpretation& in, const ObjectWord& w) { return in.dim(w); }

struct Shape {
  std::size_t rows, cols;
};

Matrix matrix_from(const json& j, SemiringTag tag, std::optional<Shape> shape, const std::string& what) {
  Matrix m(tag, 0, 0);
  if (j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), [](const json& r) { return r.is_array(); })) {
    const std::size_t rows = j.size(), cols = j[0].size();
    m = Matrix(tag, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      if (j[r].size() != cols) bad(what + ": rows have different lengths");
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, scalar_from(j[r][c], tag, what));
    }
  } else if (j.is_array()) {
    if (!shape) bad(what + ": a flat array needs a declared type");
    if (j.size() != shape->rows * shape->cols)
      throw TypeError(what + ": " + std::to_string(j.size()) + " entries for a " + std::to_string(shape->rows) + "x" +
                      std::to_string(shape->cols) + " matrix");
    m = Matrix(tag, shape->rows, shape->cols);
    for (std::size_t i = 0; i < j.size(); ++i) m.set(i / shape->cols, i % shape->cols, scalar_from(j[i], tag, what));
  } else if (j.is_number() || j.is_boolean()) {
    m = Matrix(tag, 1, 1);
    m.set(0, 0, scalar_from(j, tag, what));
  } else {
    bad(what + ": expected a matrix");
  }
  if (shape && (m.rows() != shape->rows || m.cols() != shape->cols))
    throw TypeError(what + ": expected " + std::to_string(shape->rows) + "x" + std::to_string(shape->cols) + ", got " +
                    m.shape_string());
  return m;
}

// Element names for a word of at most one factor; the unit has "*".
std::vector<std::string> element_names(const Interpretation& in, const ObjectWord& w) {
  if (w.empty()) return {"*"};
  if (w.size() != 1) return {};
  const auto it = in.elements.find(w[0].atom);
  if (it != in.elements.end()) return it->second;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < in.dim(w[0].atom); ++i) names.push_back(std::to_string(i));
  return names;
}

Matrix relation_from(const std::string& text, const GeneratorDecl& g, const Interpretation& in) {
  const std::string what = "generator '" + g.name + "'";
  if (in.tag.kind != SemiringKind::boolean) bad(what + ": pair lists need the bool semiring");
  if (g.dom.size() > 1 || g.cod.size() > 1) bad(what + ": pair lists need single-atom types");
  const auto dom = element_names(in, g.dom), cod = element_names(in, g.cod);
  auto index = [&](const std::vector<std::string>& names, const std::string& e) {
    const auto it = std::find(names.begin(), names.end(), e);
    if (it == names.end()) bad(what + ": unknown element '" + e + "'");
    return static_cast<std::size_t>(it - names.begin());
  };
  Matrix m = zero_matrix(cod.size(), dom.size(), in.tag);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](char c) {
    skip();
    if (i >= text.size() || text[i] != c) bad(what + ": expected '" + std::string(1, c) + "' in pair list");
    ++i;
  };
  auto name = [&] {
    skip();
    const std::size_t start = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_' || text[i] == '*'))
      ++i;
    if (start == i) bad(what + ": expected an element name");
    return text.substr(start, i - start);
  };
  expect('{');
  skip();
  if (i < text.size() && text[i] == '}') {
    ++i;
  } else {
    for (;;) {
      expect('(');
      const std::string a = name();
      expect(',');
      const std::string b = name();
      expect(')');
      m.set(index(cod, b), index(dom, a), one(in.tag));
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      expect('}');
      break;
    }
  }
  skip();
  if (i != text.size()) bad(what + ": trailing text after pair list");
  return m;
}

FrobeniusPresentation frobenius_from(const json& j, const std::string& atom, const Interpretation& in) {
  const std::size_t d = in.dim(atom);
  if (j.is_string()) {
    if (j.get<std::string>() != "basis") bad("frobenius '" + atom + "': expected \"basis\" or an object");
    return basis_frobenius(d, in.tag);
  }
  if (!j.is_object()) bad("frobenius '" + atom + "': expected \"basis\" or an object");
  FrobeniusPresentation p;
  p.dim = d;
  auto part = [&](const char* key, Shape s) {
    if (!j.contains(key)) bad("frobenius '" + atom + "': missing \"" + key + "\"");
    return matrix_from(j.at(key), in.tag, s, "frobenius '" + atom + "' " + key);
  };
  p.delta = part("delta", {d * d, d});
  p.eps = part("eps", {1, d});
  p.mu = part("mu", {d, d * d});
  p.unit = part("e", {d, 1});
  auto flag = [&](const char* key, bool dflt) {
    if (!j.contains(key)) return dflt;
    if (!j.at(key).is_boolean()) bad("frobenius '" + atom + "': \"" + key + "\" must be true or false");
    return j.at(key).get<bool>();
  };
  p.commutative = flag("commutative", true);
  p.special = flag("special", false);
  p.dagger = flag("dagger", false);
  return p;
}

}  // namespace

Interpretation parse_interpretation(std::string_view text, const Signature& sig, double tolerance) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    json_error(text, e.byte, "malformed JSON");
  }
  if (!root.is_object()) bad("interpretation must be a JSON object");
  for (const auto& [key, value] : root.items()) {
    if (key != "semiring" && key != "objects" && key != "elements" && key != "generators" && key != "frobenius")
      bad("unknown key \"" + key + "\"");
  }

  Interpretation in;
  in.tag = SemiringTag::complex(tolerance);
  if (root.contains("semiring")) {
    if (!root["semiring"].is_string()) bad("\"semiring\" must be a string");
    in.tag = semiring_from(root["semiring"].get<std::string>(), tolerance);
  }
  if (root.contains("elements")) {
    if (!root["elements"].is_object()) bad("\"elements\" must be an object");
    for (const auto& [atom, list] : root["elements"].items()) {
      if (!list.is_array()) bad("elements of '" + atom + "' must be an array of names");
      std::vector<std::string> names;
      for (const auto& e : list) {
        if (!e.is_string()) bad("elements of '" + atom + "' must be strings");
        names.push_back(e.get<std::string>());
      }
      in.object_dims[atom] = names.size();
      in.elements[atom] = std::move(names);
    }
  }
  if (root.contains("objects")) {
    if (!root["objects"].is_object()) bad("\"objects\" must be an object");
    for (const auto& [atom, d] : root["objects"].items()) {
      if (!d.is_number_unsigned() && !(d.is_number_integer() && d.get<long long>() >= 0))
        bad("dimension of '" + atom + "' must be a non-negative integer");
      const auto n = d.get<std::size_t>();
      if (in.elements.count(atom) && in.elements[atom].size() != n)
        throw TypeError("object '" + atom + "' has dimension " + std::to_string(n) + " but " +
                        std::to_string(in.elements[atom].size()) + " elements");
      in.object_dims[atom] = n;
    }
  }
  if (root.contains("generators")) {
    if (!root["generators"].is_object()) bad("\"generators\" must be an object");
    for (const auto& [name, value] : root["generators"].items()) {
      const GeneratorDecl* g = sig.find_generator(name);
      const std::string what = "generator '" + name + "'";
      if (value.is_string()) {
        if (!g) bad(what + ": pair lists need the generator's declared type");
        in.generators[name] = relation_from(value.get<std::string>(), *g, in);
        continue;
      }
      std::optional<Shape> shape;
      if (g) shape = Shape{word_dim(in, g->cod), word_dim(in, g->dom)};
      in.generators[name] = matrix_from(value, in.tag, shape, what);
    }
  }
  if (root.contains("frobenius")) {
    if (!root["frobenius"].is_object()) bad("\"frobenius\" must be an object");
    for (const auto& [atom, value] : root["frobenius"].items()) in.frobenius[atom] = frobenius_from(value, atom, in);
  }
  return in;
}

Interpretation load_interpretation(const std::string& path, const Signature& sig, double tolerance) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_interpretation(ss.str(), sig, tolerance);
}

std::string to_pair_list(const Matrix& m, const TermType& type, const Interpretation& in) {
  const auto dom = element_names(in, type.dom), cod = element_names(in, type.cod);
  if (dom.size() != m.cols() || cod.size() != m.rows())
    throw TypeError("pair lists need single-atom types matching the matrix");
  std::string out = "{";
  bool first = true;
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (m.at(r, c) == zero(m.tag())) continue;
      out += (first ? "(" : ",(") + dom[c] + "," + cod[r] + ")";
      first = false;
    }
  return out + "}";
}

}  // namespace catkit
