#pragma once

#include "hivelab/hive.hpp"

#include <string>
#include <vector>

namespace hivelab {

struct GoldenResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// Published reference values for worked SU(3)..SU(6) examples, recomputed from scratch.
std::vector<GoldenResult> run_golden_suite(const HiveOptions& opts = default_hive_options());

} // namespace hivelab
