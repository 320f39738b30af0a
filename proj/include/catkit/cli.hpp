#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "catkit/scalars.hpp"

namespace catkit::cli {

/// Exit codes shared by every command.
enum Exit : int { kOk = 0, kFailure = 1, kInputError = 2 };

struct Options {
  std::optional<std::string> interp;
  double tol = kDefaultTolerance;
  std::uint64_t seed = 1;
  bool frobenius = false;
  bool special = false;
};

/// Parses and typechecks; one "name : dom -> cod" line per diagram.
int cmd_check(const std::string& file, std::ostream& out, std::ostream& err);

/// "equal" or "not equal". With `frobenius`, spider-normalises both sides
/// first (`special` collapses handles).
int cmd_eq(const std::string& file, const std::string& lhs, const std::string& rhs, const Options& opt,
           std::ostream& out, std::ostream& err);

/// The diagram's matrix under --interp, as a literal. Over bool, a second
/// line gives the relation as pairs when both sides are single atoms.
int cmd_eval(const std::string& file, const std::string& diagram, const Options& opt, std::ostream& out,
             std::ostream& err);

/// One component line per connected piece of a cobordism term.
int cmd_classify(const std::string& file, const std::string& diagram, std::ostream& out, std::ostream& err);

/// The law table. Exit 1 when any law behaves unexpectedly.
int cmd_laws(const Options& opt, std::ostream& out, std::ostream& err);

/// Argument parsing and dispatch, as the catkit binary runs it.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace catkit::cli
