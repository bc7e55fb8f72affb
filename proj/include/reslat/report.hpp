#ifndef RESLAT_REPORT_HPP
#define RESLAT_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reslat/table.hpp"

namespace reslat {

enum class Status { Pass, Fail, Skip };

/// One violating tuple: role-labelled element indices, with an optional
/// free-form note (e.g. the direction of a failed bi-implication).
struct Witness {
  std::vector<std::pair<std::string, ElementId>> parts;
  std::string note;

  bool operator==(const Witness&) const = default;
};

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::vector<Witness> witnesses;

  static Check pass(std::string name) { return {std::move(name), Status::Pass, {}}; }
  static Check skip(std::string name) { return {std::move(name), Status::Skip, {}}; }
};

/// Named check results; witnesses are accumulated in ascending
/// lexicographic index order because checks scan the carrier in order.
struct CheckReport {
  std::vector<Check> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (c.status == Status::Fail) return false;
    return true;
  }

  int count(Status s) const {
    int k = 0;
    for (const auto& c : checks)
      if (c.status == s) ++k;
    return k;
  }

  void add(Check c) { checks.push_back(std::move(c)); }

  /// Appends all checks of `other`, prefixing their names.
  void merge(const CheckReport& other, const std::string& prefix = "") {
    for (const auto& c : other.checks) {
      Check copy = c;
      copy.name = prefix + c.name;
      checks.push_back(std::move(copy));
    }
  }

  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// Result of a validating constructor: the value is present iff every
/// check in the report passed.
template <class T>
struct Checked {
  std::optional<T> value;
  CheckReport report;

  bool ok() const { return value.has_value(); }
};

}  // namespace reslat

#endif
