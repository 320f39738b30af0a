#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "catkit/matcat.hpp"
#include "catkit/report.hpp"
#include "catkit/tqft.hpp"

namespace catkit {

/// The structure maps the checks instantiate. Swapping one out is how the
/// harness tests itself: a broken σ, η or δ has to show up as a failure.
struct Structures {
  std::function<Matrix(std::size_t, std::size_t, SemiringTag)> swap;
  std::function<Matrix(std::size_t, SemiringTag)> eta;
  std::function<Matrix(std::size_t, SemiringTag)> eps;
  std::function<FrobeniusPresentation(std::size_t, SemiringTag)> frobenius;

  static Structures standard();
  /// σ_{n,m} replaced by its transpose. Invisible when n = m.
  static Structures transposed_swap();
};

/// Pentagon, triangle, λ_I = ρ_I, σσ = 1, σ∘λ = ρ and both hexagons for
/// every tuple of dimensions in 0..max_dim. Throws PreconditionError past 5.
LawReport check_coherence(SemiringTag tag, std::size_t max_dim, const Structures& s = Structures::standard());

/// Snakes, circle = dimension, η† = ε∘σ and transpose sliding.
LawReport check_compact_structure(SemiringTag tag, std::size_t max_dim, std::uint64_t seed,
                                  const Structures& s = Structures::standard());

/// Naturality of σ, α, λ and ρ against the interpretation's generators and
/// `samples` random matrices over its semiring.
LawReport check_naturality_squares(const Interpretation& in, std::size_t samples, std::uint64_t seed,
                                   const Structures& s = Structures::standard());

/// Commutativity of scalars, s⊗t = s∘t, s•f = λ⁻¹∘(s⊗f)∘λ and the two
/// scalar-multiple laws, on random instances.
LawReport check_scalar_laws(SemiringTag tag, std::size_t samples, std::uint64_t seed);

/// Biproduct equations for every split with a + b <= max_total.
LawReport check_biproducts(SemiringTag tag, std::size_t max_total, std::uint64_t seed);

/// verify_frobenius folded over several presentations: one entry per law,
/// worst deviation, witness prefixed by the presentation's label.
LawReport check_frobenius_family(const std::vector<std::pair<std::string, FrobeniusPresentation>>& family);

/// Hopf law on both sides, the three bialgebra laws, and ε∘e as a note.
/// Throws TypeError unless the antipode is square of size p.dim.
LawReport check_hopf_bialgebra(const FrobeniusPresentation& p, const Matrix& antipode);

struct HopfData {
  FrobeniusPresentation structure;
  Matrix antipode;
};

/// Functions on Z₂: δ dual to the group law, pointwise μ, ε evaluates at
/// the identity, e is constant one, antipode is inversion (trivial on Z₂).
HopfData z2_group_algebra(SemiringTag tag);

/// Must-fail checks: copying is not natural against (1,1)ᵀ over C and
/// against {(*,0),(*,1)} over B, and no product cone exists on {*}×{*} in
/// Rel (exhaustive over the four choices of projections).
LawReport negative_suite();

struct SuiteOptions {
  SemiringTag tag = SemiringTag::complex();
  std::size_t max_dim = 3;
  std::size_t samples = 50;
  std::uint64_t seed = 1;
  /// Supplies generators for naturality and Frobenius data to verify.
  std::optional<Interpretation> interpretation;
};

/// Every check above, merged in a fixed order. The seed is recorded.
LawReport run_suite(const SuiteOptions& opt, const Structures& s = Structures::standard());

struct ManifestItem {
  std::string name;
  std::string topic;
  bool expected_pass = true;
};

/// The laws run_suite reports, in order, for a commutative special dagger
/// presentation.
const std::vector<ManifestItem>& law_manifest();

}  // namespace catkit
