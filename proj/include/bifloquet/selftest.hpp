#pragma once

#include <string>
#include <vector>

namespace bifloquet {

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelftestReport {
  std::vector<SelftestCheck> checks;

  bool passed() const;
};

/// Static limits, the dgap/db = g_0 identity on a small grid and the
/// propagator cross-check. A few seconds on one core.
SelftestReport run_selftest();

}  // namespace bifloquet
