#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "catkit/scalars.hpp"

namespace catkit {

/// A morphism cols -> rows of the skeleton category Mat_S.
///
/// Rows index the codomain and columns the domain, so g∘f is the matrix
/// product g·f. Entries are stored row-major in the rig's native type.
/// Matrices with zero rows or columns are legal and model maps into or out
/// of the zero object.
class Matrix {
 public:
  using Storage =
      std::variant<std::vector<BoolRig::value_type>, std::vector<Complex>, std::vector<Natural>>;

  Matrix() : Matrix(SemiringTag::boolean(), 0, 0) {}
  /// Zero matrix of the given shape.
  Matrix(SemiringTag tag, std::size_t rows, std::size_t cols);
  /// Row-major entries; every entry must carry a compatible tag.
  Matrix(SemiringTag tag, std::size_t rows, std::size_t cols, const std::vector<ScalarValue>& entries);

  template <class Rig>
  static Matrix from_data(SemiringTag tag, std::size_t rows, std::size_t cols,
                          std::vector<typename Rig::value_type> data);

  /// Convenience for literals: nested rows of 0/1 (boolean), reals (complex) or integers (natural).
  static Matrix from_rows(SemiringTag tag, const std::vector<std::vector<double>>& rows);
  static Matrix from_rows(SemiringTag tag, const std::vector<std::vector<Complex>>& rows);

  const SemiringTag& tag() const noexcept { return tag_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return rows_ * cols_; }

  ScalarValue at(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, const ScalarValue& v);

  template <class Rig>
  const std::vector<typename Rig::value_type>& data() const {
    return std::get<std::vector<typename Rig::value_type>>(storage_);
  }
  template <class Rig>
  std::vector<typename Rig::value_type>& data() {
    return std::get<std::vector<typename Rig::value_type>>(storage_);
  }

  std::string shape_string() const;

  /// Exact entrywise equality (same semiring and shape).
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  SemiringTag tag_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Storage storage_;
};

/// Split of a direct sum [first] ⊕ [second] and which summand is meant (1 or 2).
struct BlockIndex {
  int which = 1;
  std::pair<std::size_t, std::size_t> sizes{0, 0};
};

Matrix identity(std::size_t n, SemiringTag tag);
Matrix zero_matrix(std::size_t rows, std::size_t cols, SemiringTag tag);

/// g∘f: f is applied first. Throws TypeError when f.rows != g.cols.
Matrix compose(const Matrix& g, const Matrix& f);
/// Kronecker product with lexicographic pairing (i, i') -> i·dim' + i'.
Matrix tensor(const Matrix& f, const Matrix& g);
/// Block-diagonal f ⊕ g.
Matrix direct_sum(const Matrix& f, const Matrix& g);
/// Entrywise semiring sum; equals ∇∘(f⊕g)∘Δ.
Matrix add(const Matrix& f, const Matrix& g);
/// Conjugate transpose.
Matrix dagger(const Matrix& f);
Matrix scalar_multiple(const ScalarValue& s, const Matrix& f);

/// η_n : 1 -> n², one at each row (i,i).
Matrix unit_eta(std::size_t n, SemiringTag tag);
/// ε_n : n² -> 1, one at each column (i,i).
Matrix counit_eps(std::size_t n, SemiringTag tag);
/// ε∘σ∘η on [n]: the dimension read in the semiring.
ScalarValue circle(std::size_t n, SemiringTag tag);

Matrix projection(const BlockIndex& b, SemiringTag tag);
Matrix injection(const BlockIndex& b, SemiringTag tag);
/// f_{ij} = π_i∘f∘ι_j for the given row split (codomain) and column split (domain).
Matrix block(const Matrix& f, int i, int j, std::pair<std::size_t, std::size_t> row_split,
             std::pair<std::size_t, std::size_t> col_split);
/// Inverse of block(): assembles [[b11, b12], [b21, b22]].
Matrix from_blocks(const Matrix& b11, const Matrix& b12, const Matrix& b21, const Matrix& b22);

/// ⟨f, g⟩ : A -> B ⊕ C (vertical stacking).
Matrix pair(const Matrix& f, const Matrix& g);
/// [f, g] : A ⊕ B -> C (horizontal concatenation).
Matrix copair(const Matrix& f, const Matrix& g);
/// Δ = ⟨1, 1⟩ : n -> n ⊕ n.
Matrix diag_biprod(std::size_t n, SemiringTag tag);
/// ∇ = [1, 1] : n ⊕ n -> n.
Matrix codiag_biprod(std::size_t n, SemiringTag tag);

/// σ : n⊗m -> m⊗n, sending basis index (i,j) to (j,i).
Matrix swap_matrix(std::size_t n, std::size_t m, SemiringTag tag);
/// α : n⊗(m⊗k) -> (n⊗m)⊗k. Identity in the skeleton, emitted explicitly.
Matrix assoc_iso(std::size_t n, std::size_t m, std::size_t k, SemiringTag tag);
/// λ : n -> I⊗n.
Matrix left_unit_iso(std::size_t n, SemiringTag tag);
/// ρ : n -> n⊗I.
Matrix right_unit_iso(std::size_t n, SemiringTag tag);
/// θ : n⊗(m⊕k) -> (n⊗m)⊕(n⊗k).
Matrix distributor(std::size_t n, std::size_t m, std::size_t k, SemiringTag tag);

/// Largest entrywise distance; +infinity when shapes or semirings differ.
double max_deviation(const Matrix& a, const Matrix& b);
/// Within the matrices' tolerance (exact for boolean and natural).
bool approx_eq(const Matrix& a, const Matrix& b);
/// U†U = UU† = 1 within tolerance.
bool is_unitary(const Matrix& u);

/// P_i = U∘ι_i∘π_i∘U† for a binary split of U's domain.
std::vector<Matrix> projector_spectrum(const Matrix& u, std::pair<std::size_t, std::size_t> split);

/// Nested-array literal, e.g. [[1,0],[0,1]]; 1x1 matrices print as the bare scalar.
std::string to_literal(const Matrix& m);
std::ostream& operator<<(std::ostream& os, const Matrix& m);

// -- template definitions ---------------------------------------------------

template <class Rig>
Matrix Matrix::from_data(SemiringTag tag, std::size_t rows, std::size_t cols,
                         std::vector<typename Rig::value_type> data) {
  if (tag.kind != Rig::kind) throw DomainError("from_data: semiring does not match storage");
  if (data.size() != rows * cols) throw TypeError("from_data: entry count does not match shape");
  Matrix m(tag, 0, 0);
  m.rows_ = rows;
  m.cols_ = cols;
  m.storage_ = std::move(data);
  return m;
}

}  // namespace catkit
