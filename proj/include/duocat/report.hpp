#pragma once

#include <string>
#include <vector>

namespace duocat {

/// One axiom instance: which law, at which index tuple, and the first
/// differing entry on failure.
struct CheckItem {
  std::string axiom;
  std::vector<int> indices;
  bool pass = true;
  std::string detail;  // empty on pass
};

struct Report {
  std::vector<CheckItem> items;

  bool ok() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }
  void add(std::string axiom, std::vector<int> indices, bool pass,
           std::string detail = "") {
    items.push_back({std::move(axiom), std::move(indices), pass,
                     std::move(detail)});
  }
  std::string summary() const;
};

}  // namespace duocat
