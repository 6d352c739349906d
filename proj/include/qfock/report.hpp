#pragma once

#include <string>
#include <vector>

namespace qfock {

struct CheckReport {
  bool pass = true;
  std::string detail;
};

/// accumulating per-identity report used by the verification suites
struct SuiteReport {
  struct Item {
    std::string identity;
    std::string where;
    bool pass;
    std::string witness;
  };
  std::vector<Item> items;
  bool pass = true;

  void record(const std::string& identity, const std::string& where, bool ok,
              const std::string& witness = "") {
    items.push_back({identity, where, ok, witness});
    if (!ok) pass = false;
  }
};

}  // namespace qfock
