#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gpd {

/// Identifier of an element, object or arrow. Opaque; ordering is
/// lexicographic and fixes the canonical order of every carrier.
using Id = std::string;

/// Canonical identifier of a pair, used by all product-like
/// constructions (direct products, banal arrows, action-groupoid
/// arrows).
inline Id pair_id(const Id& a, const Id& b) { return a + "_" + b; }

/// A single failed check: a stable code plus the offending tuple.
struct Violation {
  std::string code;
  std::string witness;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Outcome of a structural check. Empty means valid. Counters carry
/// scan statistics (e.g. how many interchange instances were verified)
/// so reports can state exactly what was checked.
class Report {
 public:
  bool ok() const { return violations_.empty(); }

  void add(std::string code, std::string witness) {
    violations_.push_back({std::move(code), std::move(witness)});
  }

  void merge(const Report& other) {
    violations_.insert(violations_.end(), other.violations_.begin(),
                       other.violations_.end());
    for (const auto& [name, value] : other.counters_) counters_[name] += value;
  }

  const std::vector<Violation>& violations() const { return violations_; }

  void set_counter(const std::string& name, std::size_t value) {
    counters_[name] = value;
  }

  std::size_t counter(const std::string& name) const {
    auto it = counters_.find(name);
    return it == counters_.end() ? 0 : it->second;
  }

  const std::map<std::string, std::size_t>& counters() const {
    return counters_;
  }

 private:
  std::vector<Violation> violations_;
  std::map<std::string, std::size_t> counters_;
};

/// Thrown when an operation is used outside its contract (unknown ids,
/// mismatched domains, broken preconditions).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// Thrown by build_* entry points when the input tables fail
/// validation. Carries the full report, not just the first violation.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, Report report)
      : Error(report.ok() ? "ValidationError" : report.violations().front().code,
              what),
        report_(std::move(report)) {}

  const Report& report() const { return report_; }

 private:
  Report report_;
};

}  // namespace gpd
