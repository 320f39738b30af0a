#include "catkit/parser.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace catkit {

const NamedDiagram* Program::find(const std::string& name) const {
  for (const auto& d : diagrams)
    if (d.name == name) return &d;
  return nullptr;
}

const NamedDiagram& Program::diagram(const std::string& name) const {
  if (const auto* d = find(name)) return *d;
  throw TypeError("unknown diagram '" + name + "'");
}

namespace {

enum class Tok { ident, number, semicolon, colon, arrow, then, lparen, rparen, comma, star, equals, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::end) return "end of input";
  return "'" + t.text + "'";
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space_and_comments();
      const std::size_t l = line_, c = col_;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::end, "", l, c});
        return out;
      }
      const char ch = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::string word;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
          word += advance();
        }
        out.push_back({Tok::ident, word, l, c});
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::string num;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) num += advance();
        out.push_back({Tok::number, num, l, c});
      } else if (src_.substr(pos_, 2) == "->") {
        advance();
        advance();
        out.push_back({Tok::arrow, "->", l, c});
      } else if (src_.substr(pos_, 2) == ">>") {
        advance();
        advance();
        out.push_back({Tok::then, ">>", l, c});
      } else {
        static const std::map<char, Tok> singles = {{';', Tok::semicolon}, {':', Tok::colon},  {'(', Tok::lparen},
                                                    {')', Tok::rparen},    {',', Tok::comma},  {'*', Tok::star},
                                                    {'=', Tok::equals}};
        auto it = singles.find(ch);
        if (it == singles.end()) throw SyntaxError(l, c, std::string("unexpected character '") + ch + "'");
        advance();
        out.push_back({it->second, std::string(1, ch), l, c});
      }
    }
  }

 private:
  char advance() {
    const char ch = src_[pos_++];
    if (ch == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return ch;
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      const char ch = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else if (ch == '#' || src_.substr(pos_, 2) == "//") {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Program run() {
    while (peek().kind != Tok::end) statement();
    return std::move(prog_);
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw SyntaxError(t.line, t.column, msg); }
  [[noreturn]] void unexpected(const Token& t, const std::string& wanted) const {
    fail(t, "syntax error at " + describe(t) + ": expected " + wanted);
  }
  const Token& expect(Tok kind, const std::string& wanted) {
    if (peek().kind != kind) unexpected(peek(), wanted);
    return next();
  }
  bool accept_keyword(std::string_view kw) {
    if (peek().kind == Tok::ident && peek().text == kw) {
      next();
      return true;
    }
    return false;
  }
  bool is_keyword(const Token& t, std::string_view kw) const { return t.kind == Tok::ident && t.text == kw; }

  static bool reserved(const std::string& s) {
    static const char* words[] = {"object", "gen",  "diag",   "frobenius", "selfdual", "id",        "swap",
                                  "cup",    "cap",  "dg",     "name",      "coname",   "transpose", "spider",
                                  "I",      "x"};
    for (const char* w : words)
      if (s == w) return true;
    return false;
  }

  std::string fresh_name(const Token& t) {
    if (t.kind != Tok::ident) unexpected(t, "a name");
    if (reserved(t.text)) fail(t, "'" + t.text + "' is a reserved word");
    if (prog_.signature.find_object(t.text) || prog_.signature.find_generator(t.text) || prog_.find(t.text)) {
      fail(t, "duplicate declaration of '" + t.text + "'");
    }
    return t.text;
  }

  void statement() {
    if (accept_keyword("object")) {
      const Token& n = next();
      ObjectDecl decl{fresh_name(n), false, false};
      for (;;) {
        if (accept_keyword("frobenius")) {
          decl.frobenius = true;
        } else if (accept_keyword("selfdual")) {
          decl.self_dual = true;
        } else {
          break;
        }
      }
      expect(Tok::semicolon, "';'");
      prog_.signature.add_object(std::move(decl));
      return;
    }
    if (accept_keyword("gen")) {
      const Token& n = next();
      GeneratorDecl decl{fresh_name(n), {}, {}};
      expect(Tok::colon, "':'");
      decl.dom = word(true);
      expect(Tok::arrow, "'->'");
      decl.cod = word(true);
      expect(Tok::semicolon, "';'");
      prog_.signature.add_generator(std::move(decl));
      return;
    }
    accept_keyword("diag");
    const Token& n = next();
    const std::string dname = fresh_name(n);
    expect(Tok::equals, "'='");
    Term t = expr();
    expect(Tok::semicolon, "';'");
    prog_.diagrams.push_back({dname, std::move(t), n.line, n.column});
  }

  // Generator signatures may mention atoms not declared with `object`;
  // those become plain atoms.
  std::string atom_name(bool declare = false) {
    const Token& t = next();
    if (t.kind != Tok::ident) unexpected(t, "an object name");
    if (!prog_.signature.find_object(t.text)) {
      if (!declare) fail(t, "unknown identifier '" + t.text + "' (expected an object)");
      prog_.signature.add_object({fresh_name(t), false, false});
    }
    return t.text;
  }

  ObjectWord word(bool declare = false) {
    if (accept_keyword("I")) return {};
    std::vector<Factor> factors;
    for (;;) {
      Factor f{atom_name(declare), false};
      if (peek().kind == Tok::star) {
        next();
        f.dual = true;
      }
      factors.push_back(prog_.signature.normalize(f));
      if (!accept_keyword("x")) break;
    }
    return ObjectWord(std::move(factors));
  }

  std::size_t number() {
    const Token& t = next();
    if (t.kind != Tok::number) unexpected(t, "a number");
    return static_cast<std::size_t>(std::stoul(t.text));
  }

  Term expr() {
    Term t = tensor_expr();
    while (peek().kind == Tok::then) {
      next();
      Term rhs = tensor_expr();
      t = Term::then(std::move(t), std::move(rhs));
    }
    return t;
  }

  Term tensor_expr() {
    Term t = primary();
    while (accept_keyword("x")) t = Term::par(std::move(t), primary());
    return t;
  }

  // Wraps type errors raised while building derived terms with the position.
  template <class Fn>
  Term derived(const Token& at, Fn&& fn) {
    try {
      return fn();
    } catch (const TypeError& e) {
      fail(at, e.what());
    } catch (const Unsupported& e) {
      fail(at, e.what());
    }
  }

  Term primary() {
    const Token& t = peek();
    if (t.kind == Tok::lparen) {
      next();
      Term inner = expr();
      expect(Tok::rparen, "')'");
      return inner;
    }
    if (t.kind != Tok::ident) unexpected(t, "an expression");
    next();
    const std::string& w = t.text;
    auto open = [&] { expect(Tok::lparen, "'('"); };
    auto close = [&] { expect(Tok::rparen, "')'"); };
    if (w == "id") {
      open();
      ObjectWord word_ = word();
      close();
      return Term::id(std::move(word_));
    }
    if (w == "swap") {
      open();
      ObjectWord a = word();
      expect(Tok::comma, "','");
      ObjectWord b = word();
      close();
      return Term::swap(std::move(a), std::move(b));
    }
    if (w == "cup" || w == "cap") {
      open();
      std::string a = atom_name();
      close();
      return w == "cup" ? Term::cup(std::move(a)) : Term::cap(std::move(a));
    }
    if (w == "dg") {
      open();
      Term inner = expr();
      close();
      return Term::dagger(std::move(inner));
    }
    if (w == "name" || w == "coname" || w == "transpose") {
      open();
      Term inner = expr();
      close();
      return derived(t, [&] {
        const Signature& sig = prog_.signature;
        if (w == "name") return name(inner, sig);
        if (w == "coname") return coname(inner, sig);
        return transpose(inner, sig);
      });
    }
    if (w == "spider") {
      open();
      const Token& at = peek();
      std::string a = atom_name();
      if (!prog_.signature.is_frobenius(a)) fail(at, "spider on '" + a + "', which is not declared frobenius");
      expect(Tok::comma, "','");
      const std::size_t k = number();
      expect(Tok::comma, "','");
      const std::size_t l = number();
      close();
      return Term::spider(std::move(a), k, l);
    }
    if (reserved(w)) fail(t, "syntax error at " + describe(t) + ": unexpected keyword");
    if (prog_.signature.find_generator(w)) return Term::gen(w);
    if (const auto* d = prog_.find(w)) return d->term;
    fail(t, "unknown identifier '" + w + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Program prog_;
};

}  // namespace

Program parse(std::string_view text) { return Parser(Lexer(text).run()).run(); }

}  // namespace catkit
