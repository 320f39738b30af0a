#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "catkit/diagram.hpp"
#include "catkit/graph.hpp"
#include "catkit/matcat.hpp"
#include "catkit/report.hpp"

namespace catkit {

/// Structure matrices of a commutative Frobenius comonoid on [dim]:
/// comultiplication δ (d²×d), counit ε (1×d), multiplication μ (d×d²) and
/// unit e (d×1). The flags say which optional laws are claimed.
struct FrobeniusPresentation {
  std::size_t dim = 0;
  Matrix delta;
  Matrix eps;
  Matrix mu;
  Matrix unit;
  bool commutative = true;
  bool special = false;
  bool dagger = false;

  const SemiringTag& tag() const { return delta.tag(); }
};

/// Copy/delete on the standard basis: δ|i⟩ = |ii⟩, ε|i⟩ = 1, μ = δ†, e = ε†.
/// Commutative, special and dagger.
FrobeniusPresentation basis_frobenius(std::size_t d, SemiringTag tag);

/// A commutative Frobenius algebra that is neither special nor dagger for
/// generic weights: μ|ij⟩ = [i=j]|i⟩, e = Σ|i⟩, ε|i⟩ = w_i, δ|i⟩ = w_i⁻¹|ii⟩.
/// Closed genus-g surfaces evaluate to Σ w_i^(1-g). Complex only.
FrobeniusPresentation weighted_basis_frobenius(const std::vector<Complex>& weights, double tol = kDefaultTolerance);

/// Transports p along an invertible θ: δ' = (θ⊗θ)δθ⁻¹, ε' = εθ⁻¹,
/// μ' = θμ(θ⁻¹⊗θ⁻¹), e' = θe. θ⁻¹ must really be the inverse.
FrobeniusPresentation conjugate_presentation(const FrobeniusPresentation& p, const Matrix& theta,
                                             const Matrix& theta_inv);

/// The connected genus-g spider with k inputs and l outputs:
/// (δ left comb to l) ∘ (μ∘δ)^g ∘ (μ left comb from k).
Matrix spider_matrix(const FrobeniusPresentation& p, std::size_t k, std::size_t l, std::size_t genus = 0);

/// Evaluates every flagged law as a matrix equation.
LawReport verify_frobenius(const FrobeniusPresentation& p);

/// A symmetric monoidal functor from the free category into Mat_S.
struct Interpretation {
  SemiringTag tag = SemiringTag::complex();
  std::map<std::string, std::size_t> object_dims;
  std::map<std::string, Matrix> generators;
  std::map<std::string, FrobeniusPresentation> frobenius;
  /// Optional element names per atom, used for relation I/O.
  std::map<std::string, std::vector<std::string>> elements;

  std::size_t dim(const std::string& atom) const;
  /// Product of atom dimensions; 1 for the unit.
  std::size_t dim(const ObjectWord& w) const;
  const FrobeniusPresentation* frobenius_of(const std::string& atom) const;
};

/// Throws PreconditionError for an uncovered atom or generator and TypeError
/// when a generator matrix has the wrong shape.
void check_covers(const Interpretation& in, const Signature& sig);

/// Structural evaluation: ∘ to compose, ⊗ to tensor. Dagger reverses
/// composites, exchanges cups with caps and spider inputs with outputs, and
/// takes the adjoint of generator matrices. Cups and caps on an atom with
/// Frobenius data are δ∘e and ε∘μ, otherwise the canonical η and ε.
Matrix interpret(const Term& t, const Signature& sig, const Interpretation& in);

/// Evaluates a port graph (including spider graphs) by tensor contraction.
/// Rows are output boundary indices, columns input boundary indices.
Matrix evaluate_graph(const OpenGraph& g, const Interpretation& in);

/// Single-atom interpretation induced by a presentation.
Interpretation cob_interpretation(const std::string& atom, const FrobeniusPresentation& p);

/// Interprets a term over one Frobenius atom. Throws PreconditionError when
/// p fails any of its flagged laws.
Matrix evaluate_cob(const Term& t, const Signature& sig, const FrobeniusPresentation& p);

/// Whether θ : p.dim -> q.dim commutes with all four structure maps.
LawReport check_frobenius_morphism(const Matrix& theta, const FrobeniusPresentation& p,
                                   const FrobeniusPresentation& q);

}  // namespace catkit
