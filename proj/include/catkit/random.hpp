#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "catkit/matcat.hpp"

namespace catkit {

using Rng = std::mt19937_64;

/// Uniform random entries: 0/1 over the Booleans, 0..3 over the naturals,
/// real and imaginary parts in [-1, 1] over the complex numbers.
ScalarValue random_scalar(SemiringTag tag, Rng& rng);
Matrix random_matrix(SemiringTag tag, std::size_t rows, std::size_t cols, Rng& rng);

/// A random permutation-built unitary on n: products of swap matrices and
/// their tensor embeddings, optionally mixed with a Hadamard factor and
/// diagonal phases (complex only).
Matrix random_swap_unitary(std::size_t n, SemiringTag tag, Rng& rng);

/// A random invertible matrix and its exact inverse. Complex: a product of
/// elementary shears and a diagonal scaling. Boolean and natural: a
/// permutation and its transpose.
std::pair<Matrix, Matrix> random_invertible(std::size_t n, SemiringTag tag, Rng& rng);

}  // namespace catkit
