#pragma once

#include <string>
#include <string_view>

#include "catkit/diagram.hpp"
#include "catkit/tqft.hpp"

namespace catkit {

/// Reads an interpretation file:
///
///   { "semiring": "complex",                  // or "bool", "nat"
///     "objects": {"A": 2},
///     "elements": {"X": ["a", "b"]},          // optional, names basis vectors
///     "generators": {"f": [[1, 0], [0, 1]],   // nested rows
///                    "g": [1, 0, 0, 1],       // flat, row-major, shape from sig
///                    "r": "{(a,c),(b,c)}"},   // relation, bool only
///     "frobenius": {"A": "basis"} }           // or {"delta":…, "eps":…, "mu":…, "e":…}
///
/// Complex entries are numbers or [re, im] pairs inside nested rows. An atom
/// listed only under "elements" gets its dimension from the element count.
/// `sig` supplies generator types for flat arrays and relations; it may be
/// empty, in which case only nested arrays are accepted.
///
/// Throws SyntaxError for malformed JSON or an unexpected layout, TypeError
/// when a matrix has the wrong shape and DomainError for an unknown semiring.
Interpretation parse_interpretation(std::string_view json_text, const Signature& sig,
                                    double tolerance = kDefaultTolerance);

/// parse_interpretation on a file's contents. Throws std::runtime_error when
/// the file cannot be read.
Interpretation load_interpretation(const std::string& path, const Signature& sig,
                                   double tolerance = kDefaultTolerance);

/// "{(a,c),(b,c)}" for a Boolean matrix between single atoms (or I), using
/// the interpretation's element names or indices when there are none.
std::string to_pair_list(const Matrix& m, const TermType& type, const Interpretation& in);

}  // namespace catkit
