#include "catkit/scalars.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

namespace catkit {

SemiringTag SemiringTag::complex(double tol) {
  if (!(tol >= 0.0) || !std::isfinite(tol)) {
    throw DomainError("complex tolerance must be finite and non-negative");
  }
  return {SemiringKind::complex, tol};
}

std::string_view semiring_name(SemiringKind kind) {
  switch (kind) {
    case SemiringKind::boolean:
      return "bool";
    case SemiringKind::complex:
      return "complex";
    case SemiringKind::natural:
      break;
  }
  return "nat";
}

SemiringTag parse_semiring(std::string_view name, double tolerance) {
  if (name == "bool") return SemiringTag::boolean();
  if (name == "complex") return SemiringTag::complex(tolerance);
  if (name == "nat") return SemiringTag::natural();
  throw DomainError("unknown semiring '" + std::string(name) + "' (expected bool, complex or nat)");
}

namespace {

bool payload_matches(SemiringKind kind, const ScalarValue::Payload& p) {
  switch (kind) {
    case SemiringKind::boolean:
      return std::holds_alternative<bool>(p);
    case SemiringKind::complex:
      return std::holds_alternative<Complex>(p);
    case SemiringKind::natural:
      break;
  }
  return std::holds_alternative<Natural>(p) && std::get<Natural>(p) >= 0;
}

}  // namespace

ScalarValue::ScalarValue(SemiringTag tag, Payload payload) : tag_(tag), payload_(std::move(payload)) {
  if (!payload_matches(tag_.kind, payload_)) {
    throw DomainError("scalar payload does not match semiring '" +
                      std::string(semiring_name(tag_.kind)) + "'");
  }
}

void require_same_semiring(const SemiringTag& a, const SemiringTag& b, std::string_view op) {
  if (!a.compatible(b)) {
    throw DomainError(std::string(op) + ": semiring mismatch (" + std::string(semiring_name(a.kind)) +
                      " vs " + std::string(semiring_name(b.kind)) + ")");
  }
}

ScalarValue zero(SemiringTag tag) {
  return with_rig(tag.kind, [&]<class Rig>() { return ScalarValue::from<Rig>(tag, Rig::zero()); });
}

ScalarValue one(SemiringTag tag) {
  return with_rig(tag.kind, [&]<class Rig>() { return ScalarValue::from<Rig>(tag, Rig::one()); });
}

ScalarValue add(const ScalarValue& a, const ScalarValue& b) {
  require_same_semiring(a.tag(), b.tag(), "add");
  return with_rig(a.tag().kind, [&]<class Rig>() {
    return ScalarValue::from<Rig>(a.tag(), Rig::add(a.get<Rig>(), b.get<Rig>()));
  });
}

ScalarValue mul(const ScalarValue& a, const ScalarValue& b) {
  require_same_semiring(a.tag(), b.tag(), "mul");
  return with_rig(a.tag().kind, [&]<class Rig>() {
    return ScalarValue::from<Rig>(a.tag(), Rig::mul(a.get<Rig>(), b.get<Rig>()));
  });
}

ScalarValue conj(const ScalarValue& a) {
  return with_rig(a.tag().kind,
                  [&]<class Rig>() { return ScalarValue::from<Rig>(a.tag(), Rig::conj(a.get<Rig>())); });
}

double distance(const ScalarValue& a, const ScalarValue& b) {
  require_same_semiring(a.tag(), b.tag(), "distance");
  switch (a.tag().kind) {
    case SemiringKind::boolean:
      return a.as_bool() == b.as_bool() ? 0.0 : 1.0;
    case SemiringKind::complex: {
      const Complex d = a.as_complex() - b.as_complex();
      return std::max(std::abs(d.real()), std::abs(d.imag()));
    }
    case SemiringKind::natural:
      break;
  }
  const Natural d = a.as_natural() > b.as_natural() ? Natural(a.as_natural() - b.as_natural())
                                                    : Natural(b.as_natural() - a.as_natural());
  return d.convert_to<double>();
}

bool approx_eq(const ScalarValue& a, const ScalarValue& b) {
  require_same_semiring(a.tag(), b.tag(), "approx_eq");
  if (a.tag().kind != SemiringKind::complex) return a.payload() == b.payload();
  const double tol = std::max(a.tag().tolerance, b.tag().tolerance);
  return distance(a, b) <= tol;
}

namespace {

std::string format_real(double x) {
  if (x == 0.0) return "0";  // folds -0
  if (std::abs(x - std::round(x)) == 0.0 && std::abs(x) < 1e15) {
    std::ostringstream os;
    os << static_cast<long long>(std::llround(x));
    return os.str();
  }
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << x;
  // Prefer the shortest representation that round-trips.
  for (int p = 1; p <= std::numeric_limits<double>::max_digits10; ++p) {
    std::ostringstream trial;
    trial << std::setprecision(p) << x;
    if (std::stod(trial.str()) == x) return trial.str();
  }
  return os.str();
}

}  // namespace

std::string to_string(const ScalarValue& v) {
  switch (v.tag().kind) {
    case SemiringKind::boolean:
      return v.as_bool() ? "1" : "0";
    case SemiringKind::complex: {
      const Complex& z = v.as_complex();
      if (std::abs(z.imag()) <= v.tag().tolerance) return format_real(z.real());
      return "[" + format_real(z.real()) + "," + format_real(z.imag()) + "]";
    }
    case SemiringKind::natural:
      break;
  }
  return v.as_natural().str();
}

std::ostream& operator<<(std::ostream& os, const ScalarValue& v) { return os << to_string(v); }

}  // namespace catkit
