#include "catkit/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "catkit/error.hpp"

namespace catkit {

LawEntry& LawReport::add(std::string name, std::string topic, double deviation, double tolerance,
                         std::optional<std::string> witness, bool expected_pass) {
  LawEntry e;
  e.name = std::move(name);
  e.topic = std::move(topic);
  e.max_deviation = deviation;
  e.pass = deviation <= tolerance;
  e.witness = std::move(witness);
  e.expected_pass = expected_pass;
  entries.push_back(std::move(e));
  return entries.back();
}

LawEntry& LawReport::note(std::string name, std::string topic, std::string value) {
  LawEntry& e = add(std::move(name), std::move(topic), 0.0, 0.0, std::move(value));
  e.asserted = false;
  return e;
}

void LawReport::merge(const LawReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  if (!seed) seed = other.seed;
}

const LawEntry* LawReport::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

bool LawReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const LawEntry& e) { return e.as_expected(); });
}

bool LawReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const LawEntry& e) { return !e.asserted || e.pass; });
}

std::size_t LawReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const LawEntry& e) { return !e.as_expected(); }));
}

namespace {
std::string deviation_text(double d) {
  if (std::isinf(d)) return "shape";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", d);
  return buf;
}
}  // namespace

std::string LawReport::to_text() const {
  std::size_t wn = 4, wt = 5;
  for (const auto& e : entries) {
    wn = std::max(wn, e.name.size());
    wt = std::max(wt, e.topic.size());
  }
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(w, s.size()), ' ');
    return s;
  };
  std::string out = pad("law", wn) + "  " + pad("topic", wt) + "  result            deviation\n";
  for (const auto& e : entries) {
    std::string result;
    if (!e.asserted) {
      result = "info";
    } else if (e.expected_pass) {
      result = e.pass ? "pass" : "FAIL";
    } else {
      result = e.pass ? "UNEXPECTED PASS" : "fails (expected)";
    }
    out += pad(e.name, wn) + "  " + pad(e.topic, wt) + "  " + pad(result, 16) + "  " + (e.asserted ? deviation_text(e.max_deviation) : "-");
    if (e.witness) out += "  " + *e.witness;
    out += "\n";
  }
  out += std::to_string(entries.size()) + " laws, " + std::to_string(failures()) + " unexpected";
  if (seed) out += ", seed " + std::to_string(*seed);
  out += "\n";
  return out;
}

Equation::Equation(std::string name, std::string topic, double tolerance)
    : name_(std::move(name)), topic_(std::move(topic)), tolerance_(tolerance) {}

void Equation::compare(const std::function<Matrix()>& lhs, const std::function<Matrix()>& rhs,
                       const std::string& where) {
  try {
    compare(lhs(), rhs(), where);
  } catch (const TypeError& e) {
    worst_ = std::numeric_limits<double>::infinity();
    if (!witness_) witness_ = (where.empty() ? "" : where + ": ") + e.what();
  }
}

void Equation::compare(const Matrix& lhs, const Matrix& rhs, const std::string& where) {
  const double d = max_deviation(lhs, rhs);
  if (d > tolerance_ && !witness_) witness_ = (where.empty() ? "" : where + ": ") + describe_difference(lhs, rhs);
  worst_ = std::max(worst_, d);
}

LawEntry& Equation::commit(LawReport& r, bool expected_pass) const {
  return r.add(name_, topic_, worst_, tolerance_, witness_, expected_pass);
}

std::string describe_difference(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.tag().kind != b.tag().kind)
    return "lhs " + a.shape_string() + " vs rhs " + b.shape_string();
  double worst = -1.0;
  std::size_t wr = 0, wc = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double d = distance(a.at(i, j), b.at(i, j));
      if (d > worst) {
        worst = d;
        wr = i;
        wc = j;
      }
    }
  if (worst < 0) return "empty matrices";
  return "entry (" + std::to_string(wr) + "," + std::to_string(wc) + "): " + to_string(a.at(wr, wc)) + " vs " +
         to_string(b.at(wr, wc));
}

}  // namespace catkit
