#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "catkit/error.hpp"

namespace catkit {

using Complex = std::complex<double>;
using Natural = boost::multiprecision::cpp_int;

enum class SemiringKind { boolean, complex, natural };

inline constexpr double kDefaultTolerance = 1e-9;

/// Which commutative involutive semiring a value or matrix lives in.
///
/// Two tags are compatible when their kinds agree; the tolerance only
/// affects approximate equality over the complex numbers.
struct SemiringTag {
  SemiringKind kind = SemiringKind::boolean;
  double tolerance = 0.0;

  static SemiringTag boolean() { return {SemiringKind::boolean, 0.0}; }
  static SemiringTag natural() { return {SemiringKind::natural, 0.0}; }
  static SemiringTag complex(double tol = kDefaultTolerance);

  bool compatible(const SemiringTag& other) const { return kind == other.kind; }
  friend bool operator==(const SemiringTag&, const SemiringTag&) = default;
};

/// Name used in interpretation files: "bool", "complex" or "nat".
std::string_view semiring_name(SemiringKind kind);
/// Inverse of semiring_name; throws DomainError for anything else.
SemiringTag parse_semiring(std::string_view name, double tolerance = kDefaultTolerance);

// Semiring traits used by the dense kernels. Each provides value_type and the
// static operations zero, one, add, mul and conj.

struct BoolRig {
  using value_type = std::uint8_t;
  static constexpr SemiringKind kind = SemiringKind::boolean;
  static value_type zero() { return 0; }
  static value_type one() { return 1; }
  static value_type add(value_type a, value_type b) { return a | b; }
  static value_type mul(value_type a, value_type b) { return a & b; }
  static value_type conj(value_type a) { return a; }
};

struct ComplexRig {
  using value_type = Complex;
  static constexpr SemiringKind kind = SemiringKind::complex;
  static value_type zero() { return {0.0, 0.0}; }
  static value_type one() { return {1.0, 0.0}; }
  static value_type add(const value_type& a, const value_type& b) { return a + b; }
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type conj(const value_type& a) { return std::conj(a); }
};

struct NatRig {
  using value_type = Natural;
  static constexpr SemiringKind kind = SemiringKind::natural;
  static value_type zero() { return 0; }
  static value_type one() { return 1; }
  static value_type add(const value_type& a, const value_type& b) { return a + b; }
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type conj(const value_type& a) { return a; }
};

/// Calls `fn.template operator()<Rig>()` for the rig matching `kind`.
template <class Fn>
decltype(auto) with_rig(SemiringKind kind, Fn&& fn) {
  switch (kind) {
    case SemiringKind::boolean:
      return fn.template operator()<BoolRig>();
    case SemiringKind::complex:
      return fn.template operator()<ComplexRig>();
    case SemiringKind::natural:
      break;
  }
  return fn.template operator()<NatRig>();
}

/// An element of one of the supported semirings.
class ScalarValue {
 public:
  using Payload = std::variant<bool, Complex, Natural>;

  ScalarValue(SemiringTag tag, Payload payload);

  static ScalarValue boolean(bool b) { return {SemiringTag::boolean(), b}; }
  static ScalarValue complex(Complex z, double tol = kDefaultTolerance) {
    return {SemiringTag::complex(tol), z};
  }
  static ScalarValue complex(double re, double im = 0.0, double tol = kDefaultTolerance) {
    return complex(Complex{re, im}, tol);
  }
  static ScalarValue natural(Natural n) { return {SemiringTag::natural(), std::move(n)}; }

  const SemiringTag& tag() const noexcept { return tag_; }
  const Payload& payload() const noexcept { return payload_; }

  bool as_bool() const { return std::get<bool>(payload_); }
  const Complex& as_complex() const { return std::get<Complex>(payload_); }
  const Natural& as_natural() const { return std::get<Natural>(payload_); }

  /// Payload converted to the rig's storage type.
  template <class Rig>
  typename Rig::value_type get() const;
  template <class Rig>
  static ScalarValue from(SemiringTag tag, const typename Rig::value_type& v);

  /// Exact structural equality (payload and tag).
  friend bool operator==(const ScalarValue& a, const ScalarValue& b) {
    return a.tag_ == b.tag_ && a.payload_ == b.payload_;
  }

 private:
  SemiringTag tag_;
  Payload payload_;
};

ScalarValue zero(SemiringTag tag);
ScalarValue one(SemiringTag tag);
ScalarValue add(const ScalarValue& a, const ScalarValue& b);
ScalarValue mul(const ScalarValue& a, const ScalarValue& b);
ScalarValue conj(const ScalarValue& a);

/// Exact for boolean/natural; componentwise |a - b| <= tolerance for complex.
bool approx_eq(const ScalarValue& a, const ScalarValue& b);

/// Absolute difference as a real number (0/1 over the Booleans).
double distance(const ScalarValue& a, const ScalarValue& b);

/// Throws DomainError unless both tags name the same semiring.
void require_same_semiring(const SemiringTag& a, const SemiringTag& b, std::string_view op);

/// Shortest textual form: "0"/"1", an integer, a real, or "[re,im]".
std::string to_string(const ScalarValue& v);
std::ostream& operator<<(std::ostream& os, const ScalarValue& v);

// -- template definitions ---------------------------------------------------

template <class Rig>
typename Rig::value_type ScalarValue::get() const {
  if constexpr (Rig::kind == SemiringKind::boolean) {
    return as_bool() ? 1 : 0;
  } else if constexpr (Rig::kind == SemiringKind::complex) {
    return as_complex();
  } else {
    return as_natural();
  }
}

template <class Rig>
ScalarValue ScalarValue::from(SemiringTag tag, const typename Rig::value_type& v) {
  if constexpr (Rig::kind == SemiringKind::boolean) {
    return ScalarValue(tag, v != 0);
  } else {
    return ScalarValue(tag, v);
  }
}

}  // namespace catkit
