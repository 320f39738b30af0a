#include "catkit/matcat.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

namespace catkit {

namespace {

Matrix::Storage make_storage(SemiringTag tag, std::size_t n) {
  return with_rig(tag.kind, [&]<class Rig>() -> Matrix::Storage {
    return std::vector<typename Rig::value_type>(n, Rig::zero());
  });
}

std::string shape(const Matrix& m) { return m.shape_string(); }

// Builds a rows x cols matrix whose entry (r, c) is one exactly when fn(r) == c.
template <class Fn>
Matrix permutation_like(std::size_t rows, std::size_t cols, SemiringTag tag, Fn&& source_of_row) {
  return with_rig(tag.kind, [&]<class Rig>() {
    std::vector<typename Rig::value_type> d(rows * cols, Rig::zero());
    for (std::size_t r = 0; r < rows; ++r) d[r * cols + source_of_row(r)] = Rig::one();
    return Matrix::from_data<Rig>(tag, rows, cols, std::move(d));
  });
}

}  // namespace

Matrix::Matrix(SemiringTag tag, std::size_t rows, std::size_t cols)
    : tag_(tag), rows_(rows), cols_(cols), storage_(make_storage(tag, rows * cols)) {}

Matrix::Matrix(SemiringTag tag, std::size_t rows, std::size_t cols, const std::vector<ScalarValue>& entries)
    : Matrix(tag, rows, cols) {
  if (entries.size() != rows * cols) {
    throw TypeError("matrix literal has " + std::to_string(entries.size()) + " entries, expected " +
                    std::to_string(rows * cols));
  }
  for (std::size_t i = 0; i < entries.size(); ++i) set(i / cols, i % cols, entries[i]);
}

Matrix Matrix::from_rows(SemiringTag tag, const std::vector<std::vector<double>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(tag, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw TypeError("from_rows: ragged rows");
    for (std::size_t j = 0; j < c; ++j) {
      const double x = rows[i][j];
      switch (tag.kind) {
        case SemiringKind::boolean:
          m.data<BoolRig>()[i * c + j] = x != 0.0 ? 1 : 0;
          break;
        case SemiringKind::complex:
          m.data<ComplexRig>()[i * c + j] = Complex{x, 0.0};
          break;
        case SemiringKind::natural:
          if (x < 0 || x != std::floor(x)) throw DomainError("from_rows: natural entries must be integers >= 0");
          m.data<NatRig>()[i * c + j] = Natural(static_cast<long long>(x));
          break;
      }
    }
  }
  return m;
}

Matrix Matrix::from_rows(SemiringTag tag, const std::vector<std::vector<Complex>>& rows) {
  if (tag.kind != SemiringKind::complex) throw DomainError("from_rows: complex literal for non-complex semiring");
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<Complex> d;
  d.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw TypeError("from_rows: ragged rows");
    d.insert(d.end(), row.begin(), row.end());
  }
  return from_data<ComplexRig>(tag, r, c, std::move(d));
}

ScalarValue Matrix::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) throw TypeError("matrix index out of range for " + shape_string());
  return with_rig(tag_.kind,
                  [&]<class Rig>() { return ScalarValue::from<Rig>(tag_, data<Rig>()[row * cols_ + col]); });
}

void Matrix::set(std::size_t row, std::size_t col, const ScalarValue& v) {
  require_same_semiring(tag_, v.tag(), "Matrix::set");
  if (row >= rows_ || col >= cols_) throw TypeError("matrix index out of range for " + shape_string());
  with_rig(tag_.kind, [&]<class Rig>() { data<Rig>()[row * cols_ + col] = v.get<Rig>(); });
}

std::string Matrix::shape_string() const {
  return std::to_string(rows_) + "x" + std::to_string(cols_);
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.tag_.kind == b.tag_.kind && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.storage_ == b.storage_;
}

Matrix identity(std::size_t n, SemiringTag tag) {
  return permutation_like(n, n, tag, [](std::size_t r) { return r; });
}

Matrix zero_matrix(std::size_t rows, std::size_t cols, SemiringTag tag) { return Matrix(tag, rows, cols); }

Matrix compose(const Matrix& g, const Matrix& f) {
  require_same_semiring(g.tag(), f.tag(), "compose");
  if (f.rows() != g.cols()) {
    throw TypeError("compose: cannot compose " + shape(g) + " after " + shape(f) + " (codomain " +
                    std::to_string(f.rows()) + " vs domain " + std::to_string(g.cols()) + ")");
  }
  const std::size_t n = g.rows(), k = g.cols(), m = f.cols();
  return with_rig(g.tag().kind, [&]<class Rig>() {
    const auto& gd = g.data<Rig>();
    const auto& fd = f.data<Rig>();
    std::vector<typename Rig::value_type> out(n * m, Rig::zero());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t r = 0; r < k; ++r) {
        const auto& gir = gd[i * k + r];
        if (gir == Rig::zero()) continue;
        for (std::size_t j = 0; j < m; ++j) out[i * m + j] = Rig::add(out[i * m + j], Rig::mul(gir, fd[r * m + j]));
      }
    }
    return Matrix::from_data<Rig>(g.tag(), n, m, std::move(out));
  });
}

Matrix tensor(const Matrix& f, const Matrix& g) {
  require_same_semiring(f.tag(), g.tag(), "tensor");
  const std::size_t fr = f.rows(), fc = f.cols(), gr = g.rows(), gc = g.cols();
  const std::size_t rows = fr * gr, cols = fc * gc;
  return with_rig(f.tag().kind, [&]<class Rig>() {
    const auto& fd = f.data<Rig>();
    const auto& gd = g.data<Rig>();
    std::vector<typename Rig::value_type> out(rows * cols, Rig::zero());
    for (std::size_t i = 0; i < fr; ++i)
      for (std::size_t j = 0; j < fc; ++j) {
        const auto& fij = fd[i * fc + j];
        if (fij == Rig::zero()) continue;
        for (std::size_t i2 = 0; i2 < gr; ++i2)
          for (std::size_t j2 = 0; j2 < gc; ++j2)
            out[(i * gr + i2) * cols + (j * gc + j2)] = Rig::mul(fij, gd[i2 * gc + j2]);
      }
    return Matrix::from_data<Rig>(f.tag(), rows, cols, std::move(out));
  });
}

Matrix direct_sum(const Matrix& f, const Matrix& g) {
  require_same_semiring(f.tag(), g.tag(), "direct_sum");
  return from_blocks(f, zero_matrix(f.rows(), g.cols(), f.tag()), zero_matrix(g.rows(), f.cols(), f.tag()), g);
}

Matrix add(const Matrix& f, const Matrix& g) {
  require_same_semiring(f.tag(), g.tag(), "add");
  if (f.rows() != g.rows() || f.cols() != g.cols()) {
    throw TypeError("add: shape mismatch " + shape(f) + " vs " + shape(g));
  }
  return with_rig(f.tag().kind, [&]<class Rig>() {
    auto out = f.data<Rig>();
    const auto& gd = g.data<Rig>();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = Rig::add(out[i], gd[i]);
    return Matrix::from_data<Rig>(f.tag(), f.rows(), f.cols(), std::move(out));
  });
}

Matrix dagger(const Matrix& f) {
  const std::size_t r = f.rows(), c = f.cols();
  return with_rig(f.tag().kind, [&]<class Rig>() {
    const auto& fd = f.data<Rig>();
    std::vector<typename Rig::value_type> out(r * c, Rig::zero());
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) out[j * r + i] = Rig::conj(fd[i * c + j]);
    return Matrix::from_data<Rig>(f.tag(), c, r, std::move(out));
  });
}

Matrix scalar_multiple(const ScalarValue& s, const Matrix& f) {
  require_same_semiring(s.tag(), f.tag(), "scalar_multiple");
  return with_rig(f.tag().kind, [&]<class Rig>() {
    const auto sv = s.get<Rig>();
    auto out = f.data<Rig>();
    for (auto& x : out) x = Rig::mul(sv, x);
    return Matrix::from_data<Rig>(f.tag(), f.rows(), f.cols(), std::move(out));
  });
}

Matrix unit_eta(std::size_t n, SemiringTag tag) {
  Matrix m(tag, n * n, 1);
  for (std::size_t i = 0; i < n; ++i) m.set(i * n + i, 0, one(tag));
  return m;
}

Matrix counit_eps(std::size_t n, SemiringTag tag) {
  Matrix m(tag, 1, n * n);
  for (std::size_t i = 0; i < n; ++i) m.set(0, i * n + i, one(tag));
  return m;
}

ScalarValue circle(std::size_t n, SemiringTag tag) {
  const Matrix c = compose(counit_eps(n, tag), compose(swap_matrix(n, n, tag), unit_eta(n, tag)));
  return c.at(0, 0);
}

Matrix projection(const BlockIndex& b, SemiringTag tag) {
  if (b.which != 1 && b.which != 2) throw PreconditionError("projection: block index must be 1 or 2");
  const auto [n1, n2] = b.sizes;
  const std::size_t rows = b.which == 1 ? n1 : n2;
  const std::size_t offset = b.which == 1 ? 0 : n1;
  return permutation_like(rows, n1 + n2, tag, [offset](std::size_t r) { return r + offset; });
}

Matrix injection(const BlockIndex& b, SemiringTag tag) { return dagger(projection(b, tag)); }

Matrix block(const Matrix& f, int i, int j, std::pair<std::size_t, std::size_t> row_split,
             std::pair<std::size_t, std::size_t> col_split) {
  if (row_split.first + row_split.second != f.rows() || col_split.first + col_split.second != f.cols()) {
    throw TypeError("block: split (" + std::to_string(row_split.first) + "+" + std::to_string(row_split.second) +
                    ")x(" + std::to_string(col_split.first) + "+" + std::to_string(col_split.second) +
                    ") does not fit " + shape(f));
  }
  const Matrix pi = projection({i, row_split}, f.tag());
  const Matrix iota = injection({j, col_split}, f.tag());
  return compose(pi, compose(f, iota));
}

Matrix from_blocks(const Matrix& b11, const Matrix& b12, const Matrix& b21, const Matrix& b22) {
  for (const Matrix* m : {&b12, &b21, &b22}) require_same_semiring(b11.tag(), m->tag(), "from_blocks");
  if (b11.rows() != b12.rows() || b21.rows() != b22.rows() || b11.cols() != b21.cols() ||
      b12.cols() != b22.cols()) {
    throw TypeError("from_blocks: inconsistent block shapes " + shape(b11) + ", " + shape(b12) + ", " +
                    shape(b21) + ", " + shape(b22));
  }
  const std::size_t r1 = b11.rows(), r2 = b21.rows(), c1 = b11.cols(), c2 = b12.cols();
  const std::size_t cols = c1 + c2;
  return with_rig(b11.tag().kind, [&]<class Rig>() {
    std::vector<typename Rig::value_type> out((r1 + r2) * cols, Rig::zero());
    auto place = [&](const Matrix& b, std::size_t r0, std::size_t c0) {
      const auto& d = b.data<Rig>();
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out[(r0 + r) * cols + c0 + c] = d[r * b.cols() + c];
    };
    place(b11, 0, 0);
    place(b12, 0, c1);
    place(b21, r1, 0);
    place(b22, r1, c1);
    return Matrix::from_data<Rig>(b11.tag(), r1 + r2, cols, std::move(out));
  });
}

Matrix pair(const Matrix& f, const Matrix& g) {
  if (f.cols() != g.cols()) throw TypeError("pair: domains differ, " + shape(f) + " vs " + shape(g));
  return from_blocks(f, zero_matrix(f.rows(), 0, f.tag()), g, zero_matrix(g.rows(), 0, g.tag()));
}

Matrix copair(const Matrix& f, const Matrix& g) {
  if (f.rows() != g.rows()) throw TypeError("copair: codomains differ, " + shape(f) + " vs " + shape(g));
  return from_blocks(f, g, zero_matrix(0, f.cols(), f.tag()), zero_matrix(0, g.cols(), g.tag()));
}

Matrix diag_biprod(std::size_t n, SemiringTag tag) { return pair(identity(n, tag), identity(n, tag)); }

Matrix codiag_biprod(std::size_t n, SemiringTag tag) { return copair(identity(n, tag), identity(n, tag)); }

Matrix swap_matrix(std::size_t n, std::size_t m, SemiringTag tag) {
  // Row (j, i) of m⊗n receives column (i, j) of n⊗m.
  return permutation_like(n * m, n * m, tag, [n, m](std::size_t r) {
    const std::size_t j = r / n, i = r % n;
    return i * m + j;
  });
}

Matrix assoc_iso(std::size_t n, std::size_t m, std::size_t k, SemiringTag tag) {
  return identity(n * m * k, tag);
}

Matrix left_unit_iso(std::size_t n, SemiringTag tag) { return identity(n, tag); }

Matrix right_unit_iso(std::size_t n, SemiringTag tag) { return identity(n, tag); }

Matrix distributor(std::size_t n, std::size_t m, std::size_t k, SemiringTag tag) {
  const std::size_t total = n * (m + k);
  return permutation_like(total, total, tag, [n, m, k](std::size_t r) {
    if (r < n * m) {
      const std::size_t i = r / m, j = r % m;
      return i * (m + k) + j;
    }
    const std::size_t s = r - n * m;
    const std::size_t i = s / k, j = s % k;
    return i * (m + k) + m + j;
  });
}

double max_deviation(const Matrix& a, const Matrix& b) {
  if (!a.tag().compatible(b.tag()) || a.rows() != b.rows() || a.cols() != b.cols()) {
    return std::numeric_limits<double>::infinity();
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) worst = std::max(worst, distance(a.at(i, j), b.at(i, j)));
  return worst;
}

bool approx_eq(const Matrix& a, const Matrix& b) {
  const double tol = std::max(a.tag().tolerance, b.tag().tolerance);
  return max_deviation(a, b) <= tol;
}

bool is_unitary(const Matrix& u) {
  if (u.rows() != u.cols()) return false;
  const Matrix id = identity(u.rows(), u.tag());
  return approx_eq(compose(dagger(u), u), id) && approx_eq(compose(u, dagger(u)), id);
}

std::vector<Matrix> projector_spectrum(const Matrix& u, std::pair<std::size_t, std::size_t> split) {
  if (u.cols() != split.first + split.second) {
    throw PreconditionError("projector_spectrum: split " + std::to_string(split.first) + "+" +
                            std::to_string(split.second) + " does not match " + shape(u));
  }
  if (!is_unitary(u)) throw PreconditionError("projector_spectrum: matrix is not unitary");
  std::vector<Matrix> out;
  for (int i : {1, 2}) {
    const Matrix q = compose(injection({i, split}, u.tag()), projection({i, split}, u.tag()));
    out.push_back(compose(u, compose(q, dagger(u))));
  }
  return out;
}

std::string to_literal(const Matrix& m) {
  if (m.rows() == 1 && m.cols() == 1) return to_string(m.at(0, 0));
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << to_string(m.at(i, j));
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << to_literal(m); }

}  // namespace catkit
