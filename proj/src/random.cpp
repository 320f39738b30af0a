#include "catkit/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <numbers>

namespace catkit {

ScalarValue random_scalar(SemiringTag tag, Rng& rng) {
  switch (tag.kind) {
    case SemiringKind::boolean:
      return ScalarValue(tag, std::bernoulli_distribution(0.5)(rng));
    case SemiringKind::complex: {
      std::uniform_real_distribution<double> u(-1.0, 1.0);
      const double re = u(rng);
      const double im = u(rng);
      return ScalarValue(tag, Complex{re, im});
    }
    case SemiringKind::natural:
      break;
  }
  return ScalarValue(tag, Natural(std::uniform_int_distribution<int>(0, 3)(rng)));
}

Matrix random_matrix(SemiringTag tag, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(tag, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, random_scalar(tag, rng));
  return m;
}

namespace {

Matrix random_factor_swap(std::size_t n, SemiringTag tag, Rng& rng) {
  // Pick n = outer * a * b * inner and embed σ_{a,b} as 1_outer ⊗ σ ⊗ 1_inner.
  std::vector<std::size_t> divisors;
  for (std::size_t d = 1; d <= n; ++d)
    if (n % d == 0) divisors.push_back(d);
  auto pick = [&](const std::vector<std::size_t>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  };
  const std::size_t a = pick(divisors);
  std::vector<std::size_t> rest;
  for (std::size_t d = 1; d <= n / a; ++d)
    if ((n / a) % d == 0) rest.push_back(d);
  const std::size_t b = pick(rest);
  const std::size_t outer = std::uniform_int_distribution<int>(0, 1)(rng) ? n / (a * b) : 1;
  const std::size_t inner = n / (a * b * outer);
  return tensor(identity(outer, tag), tensor(swap_matrix(a, b, tag), identity(inner, tag)));
}

}  // namespace

Matrix random_swap_unitary(std::size_t n, SemiringTag tag, Rng& rng) {
  Matrix u = identity(n, tag);
  const int steps = std::uniform_int_distribution<int>(1, 4)(rng);
  for (int s = 0; s < steps; ++s) u = compose(random_factor_swap(n, tag, rng), u);
  if (tag.kind != SemiringKind::complex || n == 0) return u;
  // Mix in a phase diagonal and, when n is even, a Hadamard on one qubit factor.
  Matrix phases(tag, n, n);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (std::size_t i = 0; i < n; ++i) phases.set(i, i, ScalarValue(tag, std::polar(1.0, angle(rng))));
  u = compose(phases, u);
  if (n % 2 == 0) {
    const double h = 1.0 / std::sqrt(2.0);
    const Matrix hadamard = Matrix::from_rows(tag, std::vector<std::vector<double>>{{h, h}, {h, -h}});
    u = compose(tensor(hadamard, identity(n / 2, tag)), u);
    u = compose(random_factor_swap(n, tag, rng), u);
  }
  return u;
}


std::pair<Matrix, Matrix> random_invertible(std::size_t n, SemiringTag tag, Rng& rng) {
  if (tag.kind != SemiringKind::complex) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Matrix p(tag, n, n);
    for (std::size_t c = 0; c < n; ++c) p.set(perm[c], c, one(tag));
    return {p, dagger(p)};
  }
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> scale(0.5, 2.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  Matrix d(tag, n, n), d_inv(tag, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex z = std::polar(scale(rng), angle(rng));
    d.set(i, i, ScalarValue(tag, z));
    d_inv.set(i, i, ScalarValue(tag, 1.0 / z));
  }
  Matrix theta = d, inverse = d_inv;
  if (n < 2) return {theta, inverse};
  const int shears = std::uniform_int_distribution<int>(1, 2 * static_cast<int>(n))(rng);
  std::uniform_int_distribution<std::size_t> index(0, n - 1);
  for (int s = 0; s < shears; ++s) {
    const std::size_t i = index(rng);
    std::size_t j = index(rng);
    while (j == i) j = index(rng);
    const Complex c(unit(rng), unit(rng));
    Matrix e = identity(n, tag), e_inv = identity(n, tag);
    e.set(i, j, ScalarValue(tag, c));
    e_inv.set(i, j, ScalarValue(tag, -c));
    theta = compose(e, theta);
    inverse = compose(inverse, e_inv);
  }
  return {theta, inverse};
}

}  // namespace catkit
