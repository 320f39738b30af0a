#pragma once

// Random well-typed terms and equation-preserving term rewrites shared by the
// diagram, tqft and acceptance suites.

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "catkit/diagram.hpp"
#include "catkit/random.hpp"

namespace catkit::testing {

inline ObjectWord word(std::initializer_list<Factor> fs) { return ObjectWord(std::vector<Factor>(fs)); }
inline Factor plain(const std::string& a) { return {a, false}; }
inline Factor dual(const std::string& a) { return {a, true}; }

/// Two non-self-dual atoms and a handful of generators, including two with
/// the same type (f, f2) and two scalars.
inline Signature random_signature() {
  Signature sig;
  sig.add_object({"A", false, false});
  sig.add_object({"B", false, false});
  sig.add_generator({"f", word({plain("A")}), word({plain("B")})});
  sig.add_generator({"f2", word({plain("A")}), word({plain("B")})});
  sig.add_generator({"g", word({plain("B")}), word({plain("A")})});
  sig.add_generator({"h", word({plain("A"), plain("B")}), word({plain("B")})});
  sig.add_generator({"m", word({plain("B")}), word({plain("A"), plain("A")})});
  sig.add_generator({"k", word({}), word({plain("A")})});
  sig.add_generator({"q", word({plain("B"), dual("A")}), word({dual("B")})});
  sig.add_generator({"s", word({}), word({})});
  sig.add_generator({"t", word({}), word({})});
  return sig;
}

inline std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline ObjectWord slice(const ObjectWord& w, std::size_t from, std::size_t to) {
  return ObjectWord(std::vector<Factor>(w.factors().begin() + static_cast<long>(from),
                                        w.factors().begin() + static_cast<long>(to)));
}

/// A random term with the given domain, built as `layers` whiskered steps.
/// Each step applies one generator (or its dagger), swap, cup or cap to a
/// contiguous slice of the current word. Words are capped at `max_width`.
inline Term random_term_from(const Signature& sig, Rng& rng, const ObjectWord& dom, int layers,
                             std::size_t max_width = 5) {
  Term acc = Term::id(dom);
  ObjectWord cur = dom;
  for (int layer = 0; layer < layers; ++layer) {
    struct Option {
      std::size_t at, len;
      Term op;
      ObjectWord out;
    };
    std::vector<Option> options;
    const std::size_t n = cur.size();
    for (std::size_t at = 0; at <= n; ++at) {
      for (const auto& g : sig.generators()) {
        for (bool dg : {false, true}) {
          const ObjectWord& in = dg ? g.cod : g.dom;
          const ObjectWord& out = dg ? g.dom : g.cod;
          if (at + in.size() > n) continue;
          if (slice(cur, at, at + in.size()) != in) continue;
          if (n - in.size() + out.size() > max_width) continue;
          Term op = dg ? Term::dagger(Term::gen(g.name)) : Term::gen(g.name);
          options.push_back({at, in.size(), op, out});
        }
      }
      if (at + 2 <= n) {
        options.push_back({at, 2, Term::swap(slice(cur, at, at + 1), slice(cur, at + 1, at + 2)),
                           word({cur[at + 1], cur[at]})});
        if (cur[at].atom == cur[at + 1].atom && cur[at].dual != cur[at + 1].dual)
          options.push_back({at, 2, cap_of(cur[at]), ObjectWord()});
      }
      if (n + 2 <= max_width) {
        for (const auto& o : sig.objects()) {
          options.push_back({at, 0, Term::cup(o.name), word({dual(o.name), plain(o.name)})});
        }
      }
    }
    if (options.empty()) break;
    const Option& o = options[pick(rng, options.size())];
    Term step = o.op;
    if (o.at > 0) step = Term::par(Term::id(slice(cur, 0, o.at)), step);
    if (o.at + o.len < n) step = Term::par(step, Term::id(slice(cur, o.at + o.len, n)));
    acc = Term::seq(step, acc);
    cur = slice(cur, 0, o.at) * o.out * slice(cur, o.at + o.len, n);
  }
  return acc;
}

inline ObjectWord random_word(const Signature& sig, Rng& rng, std::size_t max_len) {
  std::vector<Factor> fs;
  const std::size_t len = pick(rng, max_len + 1);
  for (std::size_t i = 0; i < len; ++i) {
    const auto& o = sig.objects()[pick(rng, sig.objects().size())];
    fs.push_back({o.name, !o.self_dual && coin(rng, 0.25)});
  }
  return ObjectWord(std::move(fs));
}

// -- rewrites ----------------------------------------------------------------

/// Number of subterm positions (pre-order).
inline std::size_t term_size(const Term& t) {
  const auto& v = t.node().value;
  if (const auto* s = std::get_if<term::Seq>(&v)) return 1 + term_size(s->after) + term_size(s->before);
  if (const auto* p = std::get_if<term::Par>(&v)) return 1 + term_size(p->left) + term_size(p->right);
  if (const auto* d = std::get_if<term::Dagger>(&v)) return 1 + term_size(d->inner);
  return 1;
}

/// Rebuilds `t` with the subterm at pre-order position `index` replaced by fn(subterm).
inline Term rewrite_at(const Term& t, std::size_t& index, const std::function<Term(const Term&)>& fn) {
  if (index == 0) {
    index = static_cast<std::size_t>(-1);
    return fn(t);
  }
  --index;
  const auto& v = t.node().value;
  if (const auto* s = std::get_if<term::Seq>(&v)) {
    Term a = rewrite_at(s->after, index, fn);
    if (index == static_cast<std::size_t>(-1)) return Term::seq(a, s->before);
    return Term::seq(a, rewrite_at(s->before, index, fn));
  }
  if (const auto* p = std::get_if<term::Par>(&v)) {
    Term l = rewrite_at(p->left, index, fn);
    if (index == static_cast<std::size_t>(-1)) return Term::par(l, p->right);
    return Term::par(l, rewrite_at(p->right, index, fn));
  }
  if (const auto* d = std::get_if<term::Dagger>(&v)) return Term::dagger(rewrite_at(d->inner, index, fn));
  return t;
}

/// One axiom instance applied at the top of `t`, or `t` unchanged when the
/// chosen axiom does not match. All rewrites preserve the free-category value.
inline Term apply_axiom(const Term& t, const Signature& sig, Rng& rng) {
  const auto ty = typecheck(t, sig);
  const auto& v = t.node().value;
  switch (pick(rng, 12)) {
    case 0:  // left/right unit
      return coin(rng) ? Term::seq(Term::id(ty.cod), t) : Term::seq(t, Term::id(ty.dom));
    case 1:  // associativity of ∘ (both directions)
      if (const auto* s = std::get_if<term::Seq>(&v)) {
        if (const auto* inner = std::get_if<term::Seq>(&s->before.node().value))
          return Term::seq(Term::seq(s->after, inner->after), inner->before);
        if (const auto* inner = std::get_if<term::Seq>(&s->after.node().value))
          return Term::seq(inner->after, Term::seq(inner->before, s->before));
      }
      return t;
    case 2:  // associativity of ⊗ and unit I
      if (const auto* p = std::get_if<term::Par>(&v)) {
        if (const auto* inner = std::get_if<term::Par>(&p->right.node().value))
          return Term::par(Term::par(p->left, inner->left), inner->right);
        if (const auto* inner = std::get_if<term::Par>(&p->left.node().value))
          return Term::par(inner->left, Term::par(inner->right, p->right));
      }
      return coin(rng) ? Term::par(Term::id(ObjectWord()), t) : Term::par(t, Term::id(ObjectWord()));
    case 3:  // interchange, both directions
      if (const auto* p = std::get_if<term::Par>(&v)) {
        const auto* l = std::get_if<term::Seq>(&p->left.node().value);
        const auto* r = std::get_if<term::Seq>(&p->right.node().value);
        if (l && r) return Term::seq(Term::par(l->after, r->after), Term::par(l->before, r->before));
        // f ⊗ h = (f ⊗ 1)∘(1 ⊗ h)
        const auto lt = typecheck(p->left, sig);
        const auto rt = typecheck(p->right, sig);
        return Term::seq(Term::par(p->left, Term::id(rt.cod)), Term::par(Term::id(lt.dom), p->right));
      }
      if (const auto* s = std::get_if<term::Seq>(&v)) {
        const auto* a = std::get_if<term::Par>(&s->after.node().value);
        const auto* b = std::get_if<term::Par>(&s->before.node().value);
        if (a && b && typecheck(b->left, sig).cod == typecheck(a->left, sig).dom)
          return Term::par(Term::seq(a->left, b->left), Term::seq(a->right, b->right));
      }
      return t;
    case 4:  // swap naturality: f ⊗ h = σ∘(h ⊗ f)∘σ
      if (const auto* p = std::get_if<term::Par>(&v)) {
        const auto lt = typecheck(p->left, sig);
        const auto rt = typecheck(p->right, sig);
        return Term::seq(Term::swap(rt.cod, lt.cod),
                         Term::seq(Term::par(p->right, p->left), Term::swap(lt.dom, rt.dom)));
      }
      return t;
    case 5: {  // σ∘σ = 1 on a split of the domain
      if (ty.dom.empty()) return t;
      const std::size_t cut = pick(rng, ty.dom.size() + 1);
      const ObjectWord u = slice(ty.dom, 0, cut), w = slice(ty.dom, cut, ty.dom.size());
      return Term::seq(t, Term::seq(Term::swap(w, u), Term::swap(u, w)));
    }
    case 6: {  // snake insertion on one codomain wire
      if (ty.cod.empty()) return t;
      const std::size_t at = pick(rng, ty.cod.size());
      const Factor x = ty.cod[at];
      const ObjectWord xw = word({x});
      Term snake = coin(rng) ? Term::seq(Term::par(cap_of(x), Term::id(xw)), Term::par(Term::id(xw), cup_of(x)))
                             : Term::seq(Term::par(Term::id(xw), cap_of(x.flipped())),
                                         Term::par(cup_of(x.flipped()), Term::id(xw)));
      const ObjectWord before = slice(ty.cod, 0, at), after = slice(ty.cod, at + 1, ty.cod.size());
      return Term::seq(Term::par(Term::par(Term::id(before), snake), Term::id(after)), t);
    }
    case 7:  // dagger pushes through ∘ and ⊗
      if (const auto* d = std::get_if<term::Dagger>(&v)) {
        const auto& iv = d->inner.node().value;
        if (const auto* s = std::get_if<term::Seq>(&iv)) return Term::seq(Term::dagger(s->before), Term::dagger(s->after));
        if (const auto* p = std::get_if<term::Par>(&iv)) return Term::par(Term::dagger(p->left), Term::dagger(p->right));
        if (const auto* dd = std::get_if<term::Dagger>(&iv)) return dd->inner;
        if (const auto* i = std::get_if<term::Id>(&iv)) return Term::id(i->word);
        if (const auto* w = std::get_if<term::Swap>(&iv)) return Term::swap(w->right, w->left);
      }
      return t;
    case 8:  // double dagger
      return Term::dagger(Term::dagger(t));
    case 9:  // (g∘f) = (f†∘g†)†
      if (const auto* s = std::get_if<term::Seq>(&v))
        return Term::dagger(Term::seq(Term::dagger(s->before), Term::dagger(s->after)));
      return t;
    case 10: {  // a scalar floats to the other side of the term
      if (const auto* p = std::get_if<term::Par>(&v)) {
        const auto lt = typecheck(p->left, sig);
        if (lt.dom.empty() && lt.cod.empty()) return Term::par(p->right, p->left);
      }
      return t;
    }
    default: {  // double transpose on single-factor boxes
      const auto* g = std::get_if<term::Gen>(&v);
      if (!g || ty.dom.size() != 1 || ty.cod.size() != 1) return t;
      // f** = f
      return transpose(transpose(t, sig), sig);
    }
  }
}

/// Applies `steps` random axiom instances at random positions.
inline Term random_rewrites(Term t, const Signature& sig, Rng& rng, int steps) {
  for (int i = 0; i < steps; ++i) {
    std::size_t index = pick(rng, term_size(t));
    t = rewrite_at(t, index, [&](const Term& sub) { return apply_axiom(sub, sig, rng); });
  }
  return t;
}

/// Replaces one occurrence of generator `from` by `to`, or returns false.
inline bool replace_one_generator(const Term& t, const std::string& from, const std::string& to, Term& out) {
  const std::size_t n = term_size(t);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t index = i;
    bool hit = false;
    Term r = rewrite_at(t, index, [&](const Term& sub) {
      if (const auto* g = std::get_if<term::Gen>(&sub.node().value); g && g->name == from) {
        hit = true;
        return Term::gen(to);
      }
      return sub;
    });
    if (hit) {
      out = r;
      return true;
    }
  }
  return false;
}

// -- cobordisms ---------------------------------------------------------------

/// One Frobenius atom "A" and nothing else.
inline Signature cob_signature() {
  Signature sig;
  sig.add_object({"A", true, true});
  return sig;
}

inline ObjectWord wires(std::size_t n) { return ObjectWord::power("A", n); }

/// Layered random 2Cob term starting from `inputs` circles. Steps are the
/// six generators plus cups, caps and general spiders when `spiders` is set.
inline Term random_cob(Rng& rng, std::size_t inputs, int layers, std::size_t max_width = 4, bool spiders = false) {
  Term acc = Term::id(wires(inputs));
  std::size_t n = inputs;
  for (int layer = 0; layer < layers; ++layer) {
    struct Op {
      std::size_t in, out;
      Term term;
    };
    std::vector<Op> ops = {{1, 2, Term::spider("A", 1, 2)},
                           {1, 0, Term::spider("A", 1, 0)},
                           {2, 1, Term::spider("A", 2, 1)},
                           {0, 1, Term::spider("A", 0, 1)},
                           {2, 2, Term::swap(wires(1), wires(1))},
                           {0, 2, Term::cup("A")},
                           {2, 0, Term::cap("A")}};
    if (spiders) {
      const std::size_t k = pick(rng, 4), l = pick(rng, 4);
      ops.push_back({k, l, Term::spider("A", k, l)});
      ops.push_back({l, k, Term::dagger(Term::spider("A", k, l))});
    }
    std::vector<Op> fit;
    for (auto& o : ops)
      if (o.in <= n && n - o.in + o.out <= max_width) fit.push_back(o);
    if (fit.empty()) break;
    const Op& o = fit[pick(rng, fit.size())];
    const std::size_t at = pick(rng, n - o.in + 1);
    Term step = o.term;
    if (at > 0) step = Term::par(Term::id(wires(at)), step);
    if (at + o.in < n) step = Term::par(step, Term::id(wires(n - at - o.in)));
    acc = Term::seq(step, acc);
    n = n - o.in + o.out;
  }
  return acc;
}

/// Frobenius-specific rewrites at the top of `t`: splitting a spider along
/// one internal wire, and permuting its inputs or outputs.
inline Term apply_cob_axiom(const Term& t, Rng& rng) {
  const auto* s = std::get_if<term::Spider>(&t.node().value);
  if (!s) return t;
  const std::size_t k = s->inputs, l = s->outputs;
  switch (pick(rng, 4)) {
    case 0:  // spider(k,l) = spider(1,l)∘spider(k,1)
      return Term::seq(Term::spider(s->atom, 1, l), Term::spider(s->atom, k, 1));
    case 1: {  // merge only the first a inputs first
      if (k < 2) return t;
      const std::size_t a = 1 + pick(rng, k);
      Term first = Term::spider(s->atom, a, 1);
      if (a < k) first = Term::par(first, Term::id(wires(k - a)));
      return Term::seq(Term::spider(s->atom, k - a + 1, l), first);
    }
    case 2: {  // inputs commute
      if (k < 2) return t;
      const std::size_t at = pick(rng, k - 1);
      Term sw = Term::swap(wires(1), wires(1));
      if (at > 0) sw = Term::par(Term::id(wires(at)), sw);
      if (at + 2 < k) sw = Term::par(sw, Term::id(wires(k - at - 2)));
      return Term::seq(t, sw);
    }
    default: {  // outputs commute
      if (l < 2) return t;
      const std::size_t at = pick(rng, l - 1);
      Term sw = Term::swap(wires(1), wires(1));
      if (at > 0) sw = Term::par(Term::id(wires(at)), sw);
      if (at + 2 < l) sw = Term::par(sw, Term::id(wires(l - at - 2)));
      return Term::seq(sw, t);
    }
  }
}

/// Mixes generic axiom rewrites with Frobenius ones.
inline Term random_cob_rewrites(Term t, const Signature& sig, Rng& rng, int steps) {
  for (int i = 0; i < steps; ++i) {
    std::size_t index = pick(rng, term_size(t));
    const bool frob = coin(rng);
    t = rewrite_at(t, index, [&](const Term& sub) { return frob ? apply_cob_axiom(sub, rng) : apply_axiom(sub, sig, rng); });
  }
  return t;
}

}  // namespace catkit::testing
