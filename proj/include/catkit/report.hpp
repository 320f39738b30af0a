#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "catkit/matcat.hpp"

namespace catkit {

/// One checked equation. `pass` means the two sides agreed within
/// tolerance; `expected_pass` is false for laws that must fail.
struct LawEntry {
  std::string name;
  std::string topic;
  bool pass = false;
  double max_deviation = 0.0;
  std::optional<std::string> witness;
  bool expected_pass = true;
  /// Informational entries are reported but never count as failures.
  bool asserted = true;

  bool as_expected() const { return !asserted || pass == expected_pass; }
};

struct LawReport {
  std::vector<LawEntry> entries;
  std::optional<std::uint64_t> seed;

  /// Adds an entry that passes iff deviation <= tolerance.
  LawEntry& add(std::string name, std::string topic, double deviation, double tolerance,
                std::optional<std::string> witness = std::nullopt, bool expected_pass = true);
  /// Records a value without asserting anything about it.
  LawEntry& note(std::string name, std::string topic, std::string value);
  void merge(const LawReport& other);

  const LawEntry* find(const std::string& name) const;
  /// Every entry behaved as expected.
  bool ok() const;
  /// Every asserted entry passed (ignores expectations).
  bool all_pass() const;
  std::size_t failures() const;

  /// Aligned table, one entry per line, followed by a summary line.
  std::string to_text() const;
};

/// Folds many instances of one equation into a single entry: the deviation
/// is the worst seen, the witness names the first failing instance.
class Equation {
 public:
  Equation(std::string name, std::string topic, double tolerance);

  /// `where` describes the instance (dims, sample index). A TypeError from
  /// either side, or a shape mismatch, counts as infinite deviation.
  void compare(const std::function<Matrix()>& lhs, const std::function<Matrix()>& rhs, const std::string& where = "");
  void compare(const Matrix& lhs, const Matrix& rhs, const std::string& where = "");
  bool failed() const { return worst_ > tolerance_; }
  LawEntry& commit(LawReport& r, bool expected_pass = true) const;

 private:
  std::string name_, topic_;
  double tolerance_;
  double worst_ = 0.0;
  std::optional<std::string> witness_;
};

/// Largest-deviation entry as "entry (r,c): a vs b", or the two shapes.
std::string describe_difference(const Matrix& a, const Matrix& b);

}  // namespace catkit
