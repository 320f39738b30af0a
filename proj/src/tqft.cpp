#include "catkit/tqft.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

#include "overloaded.hpp"

namespace catkit {

FrobeniusPresentation basis_frobenius(std::size_t d, SemiringTag tag) {
  FrobeniusPresentation p;
  p.dim = d;
  p.delta = zero_matrix(d * d, d, tag);
  for (std::size_t i = 0; i < d; ++i) p.delta.set(i * d + i, i, one(tag));
  p.eps = Matrix(tag, 1, d);
  for (std::size_t i = 0; i < d; ++i) p.eps.set(0, i, one(tag));
  p.mu = dagger(p.delta);
  p.unit = dagger(p.eps);
  p.commutative = p.special = p.dagger = true;
  return p;
}

FrobeniusPresentation weighted_basis_frobenius(const std::vector<Complex>& weights, double tol) {
  const SemiringTag tag = SemiringTag::complex(tol);
  const std::size_t d = weights.size();
  FrobeniusPresentation p = basis_frobenius(d, tag);
  bool trivial = true;
  for (std::size_t i = 0; i < d; ++i) {
    if (std::abs(weights[i]) == 0.0) throw DomainError("weighted_basis_frobenius: weights must be invertible");
    p.delta.set(i * d + i, i, ScalarValue::complex(1.0 / weights[i], tol));
    p.eps.set(0, i, ScalarValue::complex(weights[i], tol));
    trivial = trivial && weights[i] == Complex(1.0, 0.0);
  }
  p.special = p.dagger = trivial;
  return p;
}

FrobeniusPresentation conjugate_presentation(const FrobeniusPresentation& p, const Matrix& theta,
                                             const Matrix& theta_inv) {
  FrobeniusPresentation q = p;
  q.delta = compose(tensor(theta, theta), compose(p.delta, theta_inv));
  q.eps = compose(p.eps, theta_inv);
  q.mu = compose(theta, compose(p.mu, tensor(theta_inv, theta_inv)));
  q.unit = compose(theta, p.unit);
  q.dagger = p.dagger && is_unitary(theta);
  return q;
}

Matrix spider_matrix(const FrobeniusPresentation& p, std::size_t k, std::size_t l, std::size_t genus) {
  const Matrix id = identity(p.dim, p.tag());
  Matrix in = k == 0 ? p.unit : id;
  for (std::size_t i = 2; i <= k; ++i) in = compose(p.mu, tensor(in, id));
  Matrix out = l == 0 ? p.eps : id;
  for (std::size_t i = 2; i <= l; ++i) out = compose(tensor(out, id), p.delta);
  const Matrix handle = compose(p.mu, p.delta);
  for (std::size_t g = 0; g < genus; ++g) in = compose(handle, in);
  return compose(out, in);
}

namespace {

void law(LawReport& r, const std::string& name, const std::string& topic, double tol,
         const std::function<Matrix()>& lhs, const std::function<Matrix()>& rhs) {
  Equation eq(name, topic, tol);
  eq.compare(lhs, rhs);
  eq.commit(r);
}

}  // namespace

LawReport verify_frobenius(const FrobeniusPresentation& p) {
  LawReport r;
  const SemiringTag tag = p.tag();
  const double tol = tag.tolerance;
  const Matrix id = identity(p.dim, tag);
  const auto& d = p.delta;
  const auto& e = p.eps;
  const auto& m = p.mu;
  const auto& u = p.unit;
  const std::string topic = "frobenius";
  law(r, "coassociativity", topic, tol, [&] { return compose(tensor(d, id), d); },
      [&] { return compose(tensor(id, d), d); });
  law(r, "left counit", topic, tol, [&] { return compose(tensor(e, id), d); }, [&] { return id; });
  law(r, "right counit", topic, tol, [&] { return compose(tensor(id, e), d); }, [&] { return id; });
  law(r, "associativity", topic, tol, [&] { return compose(m, tensor(m, id)); },
      [&] { return compose(m, tensor(id, m)); });
  law(r, "left unit", topic, tol, [&] { return compose(m, tensor(u, id)); }, [&] { return id; });
  law(r, "right unit", topic, tol, [&] { return compose(m, tensor(id, u)); }, [&] { return id; });
  law(r, "frobenius left", topic, tol, [&] { return compose(tensor(id, m), tensor(d, id)); },
      [&] { return compose(d, m); });
  law(r, "frobenius right", topic, tol, [&] { return compose(tensor(m, id), tensor(id, d)); },
      [&] { return compose(d, m); });
  if (p.commutative) {
    const Matrix s = swap_matrix(p.dim, p.dim, tag);
    law(r, "cocommutativity", topic, tol, [&] { return compose(s, d); }, [&] { return d; });
    law(r, "commutativity", topic, tol, [&] { return compose(m, s); }, [&] { return m; });
  }
  if (p.special) law(r, "speciality", topic, tol, [&] { return compose(m, d); }, [&] { return id; });
  if (p.dagger) {
    law(r, "dagger multiplication", topic, tol, [&] { return m; }, [&] { return dagger(d); });
    law(r, "dagger unit", topic, tol, [&] { return u; }, [&] { return dagger(e); });
  }
  return r;
}

// -- interpretations ----------------------------------------------------------

std::size_t Interpretation::dim(const std::string& atom) const {
  auto it = object_dims.find(atom);
  if (it == object_dims.end()) throw PreconditionError("interpretation has no dimension for object '" + atom + "'");
  return it->second;
}

std::size_t Interpretation::dim(const ObjectWord& w) const {
  std::size_t n = 1;
  for (const auto& f : w.factors()) n *= dim(f.atom);
  return n;
}

const FrobeniusPresentation* Interpretation::frobenius_of(const std::string& atom) const {
  auto it = frobenius.find(atom);
  return it == frobenius.end() ? nullptr : &it->second;
}

namespace {

const Matrix& generator_matrix(const Interpretation& in, const GeneratorDecl& g) {
  auto it = in.generators.find(g.name);
  if (it == in.generators.end()) throw PreconditionError("interpretation has no matrix for generator '" + g.name + "'");
  const std::size_t rows = in.dim(g.cod), cols = in.dim(g.dom);
  if (it->second.rows() != rows || it->second.cols() != cols) {
    throw TypeError("generator '" + g.name + "' is " + g.dom.to_string() + " -> " + g.cod.to_string() +
                    ", so its matrix must be " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                    it->second.shape_string());
  }
  return it->second;
}

const FrobeniusPresentation& require_frobenius(const Interpretation& in, const std::string& atom) {
  const auto* p = in.frobenius_of(atom);
  if (!p) throw PreconditionError("interpretation has no frobenius data for '" + atom + "'");
  return *p;
}

}  // namespace

void check_covers(const Interpretation& in, const Signature& sig) {
  for (const auto& o : sig.objects()) {
    const std::size_t d = in.dim(o.name);
    if (const auto* p = in.frobenius_of(o.name); p && p->dim != d) {
      throw TypeError("frobenius data for '" + o.name + "' has dimension " + std::to_string(p->dim) +
                      " but the object has dimension " + std::to_string(d));
    }
  }
  for (const auto& g : sig.generators()) generator_matrix(in, g);
}

namespace {

// Daggers are pushed to the leaves: a mirrored spider is the spider with its
// legs exchanged, which only agrees with the matrix adjoint for dagger data.
Matrix interpret_at(const Term& t, const Signature& sig, const Interpretation& in, bool mirrored) {
  const SemiringTag tag = in.tag;
  auto cup = [&](const std::string& atom) {
    if (const auto* p = in.frobenius_of(atom)) return compose(p->delta, p->unit);
    return unit_eta(in.dim(atom), tag);
  };
  auto cap = [&](const std::string& atom) {
    if (const auto* p = in.frobenius_of(atom)) return compose(p->eps, p->mu);
    return counit_eps(in.dim(atom), tag);
  };
  return std::visit(
      detail::overloaded{
          [&](const term::Gen& g) {
            const Matrix m = generator_matrix(in, sig.generator(g.name));
            return mirrored ? dagger(m) : m;
          },
          [&](const term::Id& x) { return identity(in.dim(x.word), tag); },
          [&](const term::Seq& x) {
            const Matrix after = interpret_at(x.after, sig, in, mirrored);
            const Matrix before = interpret_at(x.before, sig, in, mirrored);
            return mirrored ? compose(before, after) : compose(after, before);
          },
          [&](const term::Par& x) {
            return tensor(interpret_at(x.left, sig, in, mirrored), interpret_at(x.right, sig, in, mirrored));
          },
          [&](const term::Swap& x) {
            return mirrored ? swap_matrix(in.dim(x.right), in.dim(x.left), tag)
                            : swap_matrix(in.dim(x.left), in.dim(x.right), tag);
          },
          [&](const term::Cup& x) { return mirrored ? cap(x.atom) : cup(x.atom); },
          [&](const term::Cap& x) { return mirrored ? cup(x.atom) : cap(x.atom); },
          [&](const term::Dagger& x) { return interpret_at(x.inner, sig, in, !mirrored); },
          [&](const term::Spider& x) {
            const auto& p = require_frobenius(in, x.atom);
            return mirrored ? spider_matrix(p, x.outputs, x.inputs) : spider_matrix(p, x.inputs, x.outputs);
          },
      },
      t.node().value);
}

}  // namespace

Matrix interpret(const Term& t, const Signature& sig, const Interpretation& in) {
  return interpret_at(t, sig, in, false);
}

// -- tensor contraction ---------------------------------------------------------

namespace {

template <class Rig>
struct Tensor {
  using V = typename Rig::value_type;
  std::vector<std::size_t> vars;
  std::vector<V> data;  // row-major over vars
};

// Calls fn(assignment) for every assignment of the given dimensions, last fastest.
template <class Fn>
void for_each_index(const std::vector<std::size_t>& dims, Fn&& fn) {
  for (std::size_t d : dims)
    if (d == 0) return;
  std::vector<std::size_t> idx(dims.size(), 0);
  for (;;) {
    fn(idx);
    std::size_t k = dims.size();
    for (;;) {
      if (k == 0) return;
      --k;
      if (++idx[k] < dims[k]) break;
      idx[k] = 0;
    }
  }
}

class Network {
 public:
  explicit Network(SemiringTag tag) : tag_(tag) {}

  std::size_t fresh(std::size_t dim) {
    parent_.push_back(parent_.size());
    dims_.push_back(dim);
    return parent_.size() - 1;
  }
  std::size_t find(std::size_t v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  void unite(std::size_t a, std::size_t b) {
    if (dims_[find(a)] != dims_[find(b)]) throw std::logic_error("evaluate_graph: wire joins different dimensions");
    parent_[find(a)] = find(b);
  }
  std::size_t dim(std::size_t v) const { return dims_[v]; }

  /// A matrix read as a tensor over (row vars..., col vars...).
  void add_matrix(const Matrix& m, std::vector<std::size_t> vars) { pending_.push_back({m, std::move(vars)}); }
  void add_scalar(const ScalarValue& s) { scalars_.push_back(s); }

  template <class Rig>
  Matrix contract(const std::vector<std::size_t>& out_vars, const std::vector<std::size_t>& in_vars);

 private:
  SemiringTag tag_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> dims_;
  std::vector<std::pair<Matrix, std::vector<std::size_t>>> pending_;
  std::vector<ScalarValue> scalars_;
};

// Generic product of two tensors summing every variable not in `keep`.
template <class Rig>
Tensor<Rig> multiply(const Tensor<Rig>& a, const Tensor<Rig>& b, const std::vector<std::size_t>& dims,
                     const std::function<bool(std::size_t)>& keep) {
  std::vector<std::size_t> all = a.vars;
  for (std::size_t v : b.vars)
    if (std::find(all.begin(), all.end(), v) == all.end()) all.push_back(v);
  Tensor<Rig> r;
  for (std::size_t v : all)
    if (keep(v)) r.vars.push_back(v);
  auto strides = [&](const std::vector<std::size_t>& vars) {
    std::vector<std::size_t> s(all.size(), 0);
    std::size_t stride = 1;
    for (std::size_t i = vars.size(); i-- > 0;) {
      const auto pos = static_cast<std::size_t>(std::find(all.begin(), all.end(), vars[i]) - all.begin());
      s[pos] += stride;
      stride *= dims[vars[i]];
    }
    return std::make_pair(s, stride);
  };
  const auto [sa, na] = strides(a.vars);
  const auto [sb, nb] = strides(b.vars);
  const auto [sr, nr] = strides(r.vars);
  (void)na;
  (void)nb;
  r.data.assign(nr, Rig::zero());
  std::vector<std::size_t> all_dims;
  for (std::size_t v : all) all_dims.push_back(dims[v]);
  for_each_index(all_dims, [&](const std::vector<std::size_t>& idx) {
    std::size_t ia = 0, ib = 0, ir = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      ia += idx[k] * sa[k];
      ib += idx[k] * sb[k];
      ir += idx[k] * sr[k];
    }
    r.data[ir] = Rig::add(r.data[ir], Rig::mul(a.data[ia], b.data[ib]));
  });
  return r;
}

template <class Rig>
Matrix Network::contract(const std::vector<std::size_t>& out_vars, const std::vector<std::size_t>& in_vars) {
  using V = typename Rig::value_type;
  std::vector<std::size_t> open;
  for (std::size_t v : out_vars) open.push_back(find(v));
  for (std::size_t v : in_vars) open.push_back(find(v));

  std::vector<Tensor<Rig>> ts;
  for (auto& [m, vars] : pending_) {
    Tensor<Rig> t;
    for (std::size_t v : vars) t.vars.push_back(find(v));
    t.data = m.template data<Rig>();
    ts.push_back(std::move(t));
  }
  const Tensor<Rig> unit{{}, {Rig::one()}};

  auto needed = [&](std::size_t v, std::size_t skip_a, std::size_t skip_b) {
    if (std::find(open.begin(), open.end(), v) != open.end()) return true;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (i == skip_a || i == skip_b) continue;
      if (std::find(ts[i].vars.begin(), ts[i].vars.end(), v) != ts[i].vars.end()) return true;
    }
    return false;
  };
  const std::size_t none = static_cast<std::size_t>(-1);
  // Diagonals of repeated variables and sums over private ones.
  for (std::size_t i = 0; i < ts.size(); ++i) {
    ts[i] = multiply<Rig>(ts[i], unit, dims_, [&](std::size_t v) { return needed(v, i, none); });
  }
  while (ts.size() > 1) {
    std::size_t best_a = 0, best_b = 1;
    double best_cost = std::numeric_limits<double>::infinity();
    bool best_shared = false;
    for (std::size_t a = 0; a < ts.size(); ++a) {
      for (std::size_t b = a + 1; b < ts.size(); ++b) {
        bool shared = false;
        double cost = 1.0;
        std::vector<std::size_t> all = ts[a].vars;
        for (std::size_t v : ts[b].vars) {
          if (std::find(all.begin(), all.end(), v) == all.end()) {
            all.push_back(v);
          } else {
            shared = true;
          }
        }
        for (std::size_t v : all) cost *= static_cast<double>(std::max<std::size_t>(dims_[v], 1));
        if ((shared && !best_shared) || (shared == best_shared && cost < best_cost)) {
          best_a = a;
          best_b = b;
          best_cost = cost;
          best_shared = shared;
        }
      }
    }
    Tensor<Rig> merged = multiply<Rig>(ts[best_a], ts[best_b], dims_,
                                       [&](std::size_t v) { return needed(v, best_a, best_b); });
    ts.erase(ts.begin() + static_cast<long>(best_b));
    ts[best_a] = std::move(merged);
  }
  const Tensor<Rig> total = ts.empty() ? unit : ts.front();

  V factor = Rig::one();
  for (const auto& s : scalars_) factor = Rig::mul(factor, s.template get<Rig>());

  std::vector<std::size_t> out_dims, in_dims;
  std::size_t rows = 1, cols = 1;
  for (std::size_t v : out_vars) rows *= dims_[v];
  for (std::size_t v : in_vars) cols *= dims_[v];
  std::vector<V> data(rows * cols, Rig::zero());
  std::vector<std::size_t> all_dims;
  for (std::size_t v : open) all_dims.push_back(dims_[v]);
  std::vector<std::size_t> stride(total.vars.size(), 0);
  {
    std::size_t s = 1;
    for (std::size_t i = total.vars.size(); i-- > 0;) {
      stride[i] = s;
      s *= dims_[total.vars[i]];
    }
  }
  std::vector<long> value(dims_.size(), -1);
  std::size_t flat = 0;
  for_each_index(all_dims, [&](const std::vector<std::size_t>& idx) {
    const std::size_t cell = flat++;
    bool consistent = true;
    std::vector<std::size_t> touched;
    for (std::size_t k = 0; k < idx.size() && consistent; ++k) {
      long& slot = value[open[k]];
      if (slot < 0) {
        slot = static_cast<long>(idx[k]);
        touched.push_back(open[k]);
      } else if (slot != static_cast<long>(idx[k])) {
        consistent = false;
      }
    }
    if (consistent) {
      std::size_t at = 0;
      for (std::size_t i = 0; i < total.vars.size(); ++i) at += static_cast<std::size_t>(value[total.vars[i]]) * stride[i];
      data[cell] = Rig::mul(factor, total.data[at]);
    }
    for (std::size_t v : touched) value[v] = -1;
  });
  return Matrix::from_data<Rig>(tag_, rows, cols, std::move(data));
}

}  // namespace

Matrix evaluate_graph(const OpenGraph& g, const Interpretation& in) {
  const SemiringTag tag = in.tag;
  Network net(tag);
  auto frob = [&](const std::string& atom) { return in.frobenius_of(atom); };

  std::vector<std::size_t> bin, bout;
  for (const auto& f : g.inputs) bin.push_back(net.fresh(in.dim(f.atom)));
  for (const auto& f : g.outputs) bout.push_back(net.fresh(in.dim(f.atom)));
  std::vector<std::vector<std::size_t>> port_in(g.nodes.size()), port_out(g.nodes.size()), legs(g.nodes.size());
  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    for (const auto& f : g.nodes[n].inputs) port_in[n].push_back(net.fresh(in.dim(f.atom)));
    for (const auto& f : g.nodes[n].outputs) port_out[n].push_back(net.fresh(in.dim(f.atom)));
  }

  // Sources produce a wire (input boundary, box outputs, spider legs);
  // sinks consume one (box inputs, output boundary).
  auto var_of = [&](const Endpoint& e, const std::string& atom, bool& source) -> std::size_t {
    switch (e.kind) {
      case Endpoint::Kind::boundary:
        source = e.side == Side::in;
        return source ? bin.at(e.index) : bout.at(e.index);
      case Endpoint::Kind::port:
        source = e.side == Side::out;
        return source ? port_out.at(e.node).at(e.index) : port_in.at(e.node).at(e.index);
      case Endpoint::Kind::spider:
        source = true;
        legs.at(e.node).push_back(net.fresh(in.dim(atom)));
        return legs[e.node].back();
    }
    throw std::logic_error("unreachable");
  };
  for (const auto& w : g.wires) {
    bool sa = false, sb = false;
    const std::size_t va = var_of(w.a, w.atom, sa);
    const std::size_t vb = var_of(w.b, w.atom, sb);
    const auto* p = frob(w.atom);
    if (!p || sa != sb) {
      net.unite(va, vb);
    } else if (sa) {
      net.add_matrix(compose(p->eps, p->mu), {va, vb});
    } else {
      net.add_matrix(compose(p->delta, p->unit), {va, vb});
    }
  }

  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    const GraphNode& node = g.nodes[n];
    if (node.kind == NodeKind::spider) {
      const auto& p = require_frobenius(in, node.label);
      std::vector<std::size_t> vars = legs[n];
      net.add_matrix(spider_matrix(p, 0, vars.size(), node.genus), vars);
      continue;
    }
    auto it = in.generators.find(node.label);
    if (it == in.generators.end())
      throw PreconditionError("interpretation has no matrix for generator '" + node.label + "'");
    const Matrix m = node.daggered ? dagger(it->second) : it->second;
    std::vector<std::size_t> vars = port_out[n];
    vars.insert(vars.end(), port_in[n].begin(), port_in[n].end());
    std::size_t rows = 1, cols = 1;
    for (std::size_t v : port_out[n]) rows *= net.dim(v);
    for (std::size_t v : port_in[n]) cols *= net.dim(v);
    if (m.rows() != rows || m.cols() != cols) {
      throw TypeError("generator '" + node.label + "' matrix is " + m.shape_string() + ", expected " +
                      std::to_string(rows) + "x" + std::to_string(cols));
    }
    net.add_matrix(m, vars);
  }

  for (const auto& atom : g.loops) {
    if (const auto* p = frob(atom)) {
      net.add_scalar(compose(compose(p->eps, p->mu), compose(p->delta, p->unit)).at(0, 0));
    } else {
      net.add_scalar(circle(in.dim(atom), tag));
    }
  }
  return with_rig(tag.kind, [&]<class Rig>() { return net.contract<Rig>(bout, bin); });
}

// -- cobordisms -----------------------------------------------------------------

Interpretation cob_interpretation(const std::string& atom, const FrobeniusPresentation& p) {
  Interpretation in;
  in.tag = p.tag();
  in.object_dims[atom] = p.dim;
  in.frobenius[atom] = p;
  return in;
}

Matrix evaluate_cob(const Term& t, const Signature& sig, const FrobeniusPresentation& p) {
  typecheck(t, sig);
  std::string atom;
  for (const auto& o : sig.objects()) {
    if (o.frobenius) {
      atom = o.name;
      break;
    }
  }
  if (atom.empty()) throw Unsupported("evaluate_cob: signature has no frobenius atom");
  const LawReport r = verify_frobenius(p);
  if (!r.all_pass()) {
    std::string failed;
    for (const auto& e : r.entries)
      if (!e.pass) failed += (failed.empty() ? "" : ", ") + e.name;
    throw PreconditionError("presentation fails " + failed);
  }
  return interpret(t, sig, cob_interpretation(atom, p));
}

LawReport check_frobenius_morphism(const Matrix& theta, const FrobeniusPresentation& p,
                                   const FrobeniusPresentation& q) {
  if (theta.rows() != q.dim || theta.cols() != p.dim) {
    throw TypeError("frobenius morphism must be " + std::to_string(q.dim) + "x" + std::to_string(p.dim) + ", got " +
                    theta.shape_string());
  }
  LawReport r;
  const double tol = theta.tag().tolerance;
  const Matrix tt = tensor(theta, theta);
  const std::string topic = "frobenius morphism";
  law(r, "preserves comultiplication", topic, tol, [&] { return compose(q.delta, theta); },
      [&] { return compose(tt, p.delta); });
  law(r, "preserves counit", topic, tol, [&] { return compose(q.eps, theta); }, [&] { return p.eps; });
  law(r, "preserves multiplication", topic, tol, [&] { return compose(theta, p.mu); },
      [&] { return compose(q.mu, tt); });
  law(r, "preserves unit", topic, tol, [&] { return compose(theta, p.unit); }, [&] { return q.unit; });
  return r;
}

}  // namespace catkit
