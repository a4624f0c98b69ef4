#pragma once

#include <algorithm>
#include <cstddef>
#include <string>

namespace appellkit {

/// Outcome of one verified identity: how many instances were tried and the
/// worst defect seen. Exact checks report defect 0 or the count of misses.
struct CheckResult {
  std::string identity;
  std::string reference;
  std::size_t instances = 0;
  double max_defect = 0.0;
  bool pass = true;
  std::string note;

  void record(double defect, double tol) {
    ++instances;
    max_defect = std::max(max_defect, defect);
    if (!(defect <= tol)) {
      pass = false;
    }
  }
  void record_exact(bool ok) {
    ++instances;
    if (!ok) {
      max_defect += 1.0;
      pass = false;
    }
  }
};

}  // namespace appellkit
